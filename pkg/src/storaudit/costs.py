"""On-chain fee estimator.

All prices are inputs; the estimator owns only the arithmetic. Reference
figures: one audit costs 589,000 gas, and at 5 Gwei / 143 USD per token
that is 0.421135 USD before beacon fees. Annual totals scale linearly
with audit frequency, redundancy, and contract duration, plus a one-time
cost for putting the public key on chain.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class FeeParams:
    gas_per_audit: float = 589_000.0
    gas_price: float = 5e-9          # token per gas (5 Gwei)
    token_price: float = 143.0       # fiat per token
    onetime_storage_gas: float = 0.0
    beacon_cost_per_round: float = 0.0
    audits_per_year: float = 365.0
    redundancy_factor: float = 1.0
    duration_years: float = 1.0

    def __post_init__(self):
        for name in (
            "gas_per_audit",
            "gas_price",
            "token_price",
            "onetime_storage_gas",
            "beacon_cost_per_round",
            "audits_per_year",
            "redundancy_factor",
            "duration_years",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


def per_audit_cost(fp: FeeParams) -> float:
    """Fiat cost of one audit round: gas plus beacon service."""
    return fp.gas_per_audit * fp.gas_price * fp.token_price + fp.beacon_cost_per_round


def onetime_cost(fp: FeeParams) -> float:
    """Fiat cost of recording the public key on chain (paid once)."""
    return fp.onetime_storage_gas * fp.gas_price * fp.token_price


def annual_cost(fp: FeeParams) -> float:
    """Total fiat cost over the contract: per-audit costs scaled by
    frequency, redundancy, duration, plus the one-time storage cost."""
    recurring = (
        per_audit_cost(fp)
        * fp.audits_per_year
        * fp.redundancy_factor
        * fp.duration_years
    )
    return recurring + onetime_cost(fp)


def cost_table(fp: FeeParams) -> list[tuple[str, float]]:
    """Small summary table for the CLI."""
    return [
        ("per-audit", per_audit_cost(fp)),
        ("one-time key storage", onetime_cost(fp)),
        ("annual (no redundancy)", annual_cost(replace(fp, redundancy_factor=1.0))),
        ("annual (with redundancy)", annual_cost(fp)),
    ]
