"""Recovering file data from unblinded audit trails.

A degree-(s-1) polynomial is pinned down by s evaluations, so an observer
of s transcripts sharing one challenge set can Lagrange-interpolate the
full combined polynomial. Stacking d such polynomials for independent
coefficient vectors yields square linear systems over Z_p whose solutions
are the raw chunks. The same pipeline run against blinded proofs (where
y' = zeta y + z replaces y) recovers noise, which is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import bn254
from .errors import DuplicatePoint, InsufficientPoints, SingularSystem
from .prover import CombinedPolynomial


@dataclass(frozen=True)
class TranscriptSet:
    """Audit transcripts sharing (C1, C2) but with distinct r values."""

    c1_seed: bytes
    c2_seed: bytes
    points: tuple[tuple[int, int], ...]   # (r_j, y_j) pairs


@dataclass(frozen=True)
class LeakReport:
    """Outcome of running the recovery pipeline against blinded proofs."""

    recovered: tuple[CombinedPolynomial, ...]
    mismatched_coefficients: int
    total_coefficients: int

    @property
    def leaked(self) -> bool:
        return self.mismatched_coefficients == 0


def lagrange_coefficients(points, order: int) -> list[int]:
    """Coefficient form of the unique polynomial through the given points."""
    xs = [x % order for x, _ in points]
    ys = [y % order for _, y in points]
    n = len(xs)
    # master numerator prod (X - x_i), ascending coefficients
    master = [1]
    for x in xs:
        master = [0] + master
        for j in range(len(master) - 1):
            master[j] = (master[j] - master[j + 1] * x) % order
    out = [0] * n
    for i in range(n):
        # divide master by (X - x_i): synthetic division, ascending
        num = [0] * n
        num[n - 1] = master[n]
        for j in range(n - 2, -1, -1):
            num[j] = (master[j + 1] + xs[i] * num[j + 1]) % order
        denom = 0
        power = 1
        for c in num:
            denom = (denom + c * power) % order
            power = power * xs[i] % order
        scale = ys[i] * pow(denom, -1, order) % order
        for j in range(n):
            out[j] = (out[j] + num[j] * scale) % order
    return out


def interpolate_combined(ts: TranscriptSet, s: int, order: int | None = None) -> CombinedPolynomial:
    """The unique degree-<=(s-1) polynomial through the first s transcripts."""
    p = order if order is not None else bn254().order
    if len(ts.points) < s:
        raise InsufficientPoints(f"need {s} points, have {len(ts.points)}")
    seen = set()
    chosen = []
    for r, y in ts.points:
        if r % p in seen:
            raise DuplicatePoint(f"evaluation point {r} repeated")
        seen.add(r % p)
        chosen.append((r, y))
        if len(chosen) == s:
            break
    if len(chosen) < s:
        raise InsufficientPoints(f"need {s} distinct points, have {len(chosen)}")
    return CombinedPolynomial(coefficients=tuple(lagrange_coefficients(chosen, p)))


def solve_linear_system(matrix, rhs, order: int) -> list[int]:
    """Gaussian elimination over Z_p; raises SingularSystem if not invertible."""
    n = len(matrix)
    a = [[v % order for v in row] + [b % order] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        inv = pow(a[col][col], -1, order)
        a[col] = [v * inv % order for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(v - f * w) % order for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def recover_blocks(systems, order: int | None = None) -> list[list[int]]:
    """Solve u combined polynomials with independent weights for u chunks.

    `systems` is a list of (coefficient_vector, CombinedPolynomial) pairs:
    coefficient_vector[i] is the challenge weight given to unknown chunk i
    in that round. Returns the chunk matrix (u rows of s blocks).
    """
    p = order if order is not None else bn254().order
    u = len(systems)
    if u == 0:
        return []
    matrix = [list(weights) for weights, _ in systems]
    if any(len(row) != u for row in matrix):
        raise SingularSystem("coefficient matrix is not square")
    s = len(systems[0][1].coefficients)
    chunks = [[0] * s for _ in range(u)]
    for j in range(s):
        rhs = [poly.coefficients[j] for _, poly in systems]
        col = solve_linear_system(matrix, rhs, p)
        for i in range(u):
            chunks[i][j] = col[i]
    return chunks


def attack_private_transcripts(
    transcript_sets,
    s: int,
    true_combined,
    order: int | None = None,
) -> LeakReport:
    """Run interpolation on blinded (r, y') transcripts and report mismatches.

    `true_combined` carries the ground-truth combined polynomials (one per
    transcript set) available to the experimenter; the report counts how
    many recovered coefficients agree with them.
    """
    p = order if order is not None else bn254().order
    recovered = tuple(interpolate_combined(ts, s, p) for ts in transcript_sets)
    mismatch = 0
    total = 0
    for got, want in zip(recovered, true_combined):
        for a, b in zip(got.coefficients, want.coefficients):
            total += 1
            if a != b:
                mismatch += 1
    return LeakReport(
        recovered=recovered,
        mismatched_coefficients=mismatch,
        total_coefficients=total,
    )
