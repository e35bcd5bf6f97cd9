//! Arithmetic backend for the storaudit package: BN254 group operations,
//! pairings, multi-scalar multiplication, hash-to-curve, and cyclotomic
//! GT compression. All values cross the FFI boundary as Python ints
//! (arbitrary-precision) or opaque group handles; byte-level encodings
//! are owned by the Python layer.

use ark_bn254::{Bn254, Fq, Fq2, Fq6, Fq12, Fr, G1Affine, G1Projective, G2Affine, G2Projective};
use ark_ec::pairing::Pairing;
use ark_ec::scalar_mul::fixed_base::FixedBase;
use ark_ec::short_weierstrass::SWCurveConfig;
use ark_ec::{AffineRepr, CurveGroup, Group, VariableBaseMSM};
use ark_ff::{BigInteger, Field, Fp12Config, LegendreSymbol, One, PrimeField, Zero};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::sync::OnceLock;

fn fq12_nonresidue() -> Fq6 {
    <ark_bn254::Fq12Config as Fp12Config>::NONRESIDUE
}

fn fr_from(n: &BigUint) -> Fr {
    Fr::from(n.clone())
}

fn fq_from_checked(n: &BigUint) -> PyResult<Fq> {
    if *n >= BigUint::from(Fq::MODULUS) {
        return Err(PyValueError::new_err("coordinate not a canonical field element"));
    }
    Ok(Fq::from(n.clone()))
}

fn fq_to_big(x: Fq) -> BigUint {
    x.into_bigint().into()
}

fn fq_lex_larger(y: Fq) -> bool {
    y.into_bigint() > (-y).into_bigint()
}

fn fq2_lex_larger(y: Fq2) -> bool {
    let n = -y;
    (y.c1.into_bigint(), y.c0.into_bigint()) > (n.c1.into_bigint(), n.c0.into_bigint())
}

fn g1_from_compressed(x: &BigUint, y_lex_larger: bool) -> PyResult<G1Affine> {
    let x = fq_from_checked(x)?;
    let rhs = x.square() * x + Fq::from(3u64);
    let mut y = rhs
        .sqrt()
        .ok_or_else(|| PyValueError::new_err("x is not on the curve"))?;
    if fq_lex_larger(y) != y_lex_larger {
        y = -y;
    }
    Ok(G1Affine::new_unchecked(x, y))
}

// ---------------------------------------------------------------------------
// G1
// ---------------------------------------------------------------------------

#[pyclass(frozen)]
#[derive(Clone)]
struct G1(G1Projective);

#[pymethods]
impl G1 {
    #[staticmethod]
    fn generator() -> G1 {
        G1(G1Projective::generator())
    }

    #[staticmethod]
    fn identity() -> G1 {
        G1(G1Projective::zero())
    }

    #[staticmethod]
    fn from_affine(x: BigUint, y: BigUint) -> PyResult<G1> {
        let p = G1Affine::new_unchecked(fq_from_checked(&x)?, fq_from_checked(&y)?);
        if !p.is_on_curve() {
            return Err(PyValueError::new_err("point not on curve"));
        }
        // BN254 G1 has cofactor 1: on-curve implies correct subgroup.
        Ok(G1(p.into()))
    }

    /// Affine coordinates as (x, y), or None for the identity.
    fn to_affine(&self) -> Option<(BigUint, BigUint)> {
        if self.0.is_zero() {
            return None;
        }
        let a = self.0.into_affine();
        Some((fq_to_big(a.x), fq_to_big(a.y)))
    }

    fn add(&self, other: &G1) -> G1 {
        G1(self.0 + other.0)
    }

    fn neg(&self) -> G1 {
        G1(-self.0)
    }

    fn mul(&self, k: BigUint) -> G1 {
        G1(self.0 * fr_from(&k))
    }

    fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &G1) -> G1 {
        self.add(other)
    }

    fn __neg__(&self) -> G1 {
        self.neg()
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        match other.extract::<PyRef<G1>>() {
            Ok(o) => self.0 == o.0,
            Err(_) => false,
        }
    }

    fn __repr__(&self) -> String {
        match self.to_affine() {
            None => "G1(identity)".to_string(),
            Some((x, _)) => format!("G1(x={}...)", &x.to_string()[..12.min(x.to_string().len())]),
        }
    }

    /// Multi-scalar multiplication: sum_i points[i] * scalars[i].
    #[staticmethod]
    fn msm(py: Python<'_>, points: Vec<Py<G1>>, scalars: Vec<BigUint>) -> PyResult<G1> {
        if points.len() != scalars.len() {
            return Err(PyValueError::new_err("msm: length mismatch"));
        }
        if points.is_empty() {
            return Ok(G1::identity());
        }
        let pts: Vec<G1Projective> = points.iter().map(|p| p.get().0).collect();
        let ks: Vec<Fr> = scalars.iter().map(fr_from).collect();
        let out = py.allow_threads(move || {
            let affine = G1Projective::normalize_batch(&pts);
            G1Projective::msm(&affine, &ks).expect("equal lengths checked")
        });
        Ok(G1(out))
    }

    /// Elementwise points[i] * scalars[i].
    #[staticmethod]
    fn mul_batch(py: Python<'_>, points: Vec<Py<G1>>, scalars: Vec<BigUint>) -> PyResult<Vec<G1>> {
        if points.len() != scalars.len() {
            return Err(PyValueError::new_err("mul_batch: length mismatch"));
        }
        let pts: Vec<G1Projective> = points.iter().map(|p| p.get().0).collect();
        let ks: Vec<Fr> = scalars.iter().map(fr_from).collect();
        let out = py.allow_threads(move || {
            pts.par_iter()
                .zip(ks.par_iter())
                .map(|(p, k)| G1(*p * k))
                .collect()
        });
        Ok(out)
    }

    /// Elementwise points[i] * k for one shared scalar.
    #[staticmethod]
    fn mul_each(py: Python<'_>, points: Vec<Py<G1>>, k: BigUint) -> Vec<G1> {
        let pts: Vec<G1Projective> = points.iter().map(|p| p.get().0).collect();
        let k = fr_from(&k);
        py.allow_threads(move || pts.par_iter().map(|p| G1(*p * k)).collect())
    }

    /// Elementwise a[i] + b[i].
    #[staticmethod]
    fn add_batch(py: Python<'_>, a: Vec<Py<G1>>, b: Vec<Py<G1>>) -> PyResult<Vec<G1>> {
        if a.len() != b.len() {
            return Err(PyValueError::new_err("add_batch: length mismatch"));
        }
        let pa: Vec<G1Projective> = a.iter().map(|p| p.get().0).collect();
        let pb: Vec<G1Projective> = b.iter().map(|p| p.get().0).collect();
        Ok(py.allow_threads(move || {
            pa.par_iter()
                .zip(pb.par_iter())
                .map(|(x, y)| G1(*x + *y))
                .collect()
        }))
    }

    /// base * scalars[i] for many scalars, using a shared window table.
    #[staticmethod]
    fn fixed_base_mul_batch(py: Python<'_>, base: &G1, scalars: Vec<BigUint>) -> Vec<G1> {
        let ks: Vec<Fr> = scalars.iter().map(fr_from).collect();
        let g = base.0;
        py.allow_threads(move || {
            let bits = Fr::MODULUS_BIT_SIZE as usize;
            let window = FixedBase::get_mul_window_size(ks.len().max(1));
            let table = FixedBase::get_window_table(bits, window, g);
            FixedBase::msm::<G1Projective>(bits, window, &table, &ks)
                .into_iter()
                .map(G1)
                .collect()
        })
    }

    /// Batch affine coordinates; None entries are identities.
    #[staticmethod]
    fn to_affine_batch(py: Python<'_>, points: Vec<Py<G1>>) -> Vec<Option<(BigUint, BigUint)>> {
        let pts: Vec<G1Projective> = points.iter().map(|p| p.get().0).collect();
        py.allow_threads(move || {
            let affine = G1Projective::normalize_batch(&pts);
            affine
                .iter()
                .map(|a| {
                    if a.is_zero() {
                        None
                    } else {
                        Some((fq_to_big(a.x), fq_to_big(a.y)))
                    }
                })
                .collect()
        })
    }

    /// Compressed form: (x, y-lex-larger flag), or None for the identity.
    fn compressed_parts(&self) -> Option<(BigUint, bool)> {
        if self.0.is_zero() {
            return None;
        }
        let a = self.0.into_affine();
        Some((fq_to_big(a.x), fq_lex_larger(a.y)))
    }

    #[staticmethod]
    fn from_compressed(x: BigUint, y_lex_larger: bool) -> PyResult<G1> {
        Ok(G1(g1_from_compressed(&x, y_lex_larger)?.into()))
    }

    #[staticmethod]
    fn from_compressed_batch(
        py: Python<'_>,
        xs: Vec<BigUint>,
        flags: Vec<bool>,
    ) -> PyResult<Vec<G1>> {
        if xs.len() != flags.len() {
            return Err(PyValueError::new_err("from_compressed_batch: length mismatch"));
        }
        py.allow_threads(move || {
            xs.par_iter()
                .zip(flags.par_iter())
                .map(|(x, f)| Ok(G1(g1_from_compressed(x, *f)?.into())))
                .collect()
        })
    }

    /// RFC 9380 hash-to-curve (Shallue-van de Woestijne, random-oracle
    /// variant) for one message.
    #[staticmethod]
    fn hash_to_curve(dst: Vec<u8>, msg: Vec<u8>) -> G1 {
        G1(hash_to_g1_point(&dst, &msg))
    }

    /// Hash many messages under one domain-separation tag.
    #[staticmethod]
    fn hash_to_curve_batch(py: Python<'_>, dst: Vec<u8>, msgs: Vec<Vec<u8>>) -> Vec<G1> {
        py.allow_threads(move || {
            msgs.par_iter()
                .map(|m| G1(hash_to_g1_point(&dst, m)))
                .collect()
        })
    }
}

// ---------------------------------------------------------------------------
// G2
// ---------------------------------------------------------------------------

#[pyclass(frozen)]
#[derive(Clone)]
struct G2(G2Projective);

#[pymethods]
impl G2 {
    #[staticmethod]
    fn generator() -> G2 {
        G2(G2Projective::generator())
    }

    #[staticmethod]
    fn identity() -> G2 {
        G2(G2Projective::zero())
    }

    #[staticmethod]
    fn from_affine(x0: BigUint, x1: BigUint, y0: BigUint, y1: BigUint) -> PyResult<G2> {
        let x = Fq2::new(fq_from_checked(&x0)?, fq_from_checked(&x1)?);
        let y = Fq2::new(fq_from_checked(&y0)?, fq_from_checked(&y1)?);
        let p = G2Affine::new_unchecked(x, y);
        if !p.is_on_curve() {
            return Err(PyValueError::new_err("point not on curve"));
        }
        if !p.is_in_correct_subgroup_assuming_on_curve() {
            return Err(PyValueError::new_err("point not in prime-order subgroup"));
        }
        Ok(G2(p.into()))
    }

    /// Affine coordinates as (x0, x1, y0, y1), or None for the identity.
    fn to_affine(&self) -> Option<(BigUint, BigUint, BigUint, BigUint)> {
        if self.0.is_zero() {
            return None;
        }
        let a = self.0.into_affine();
        Some((
            fq_to_big(a.x.c0),
            fq_to_big(a.x.c1),
            fq_to_big(a.y.c0),
            fq_to_big(a.y.c1),
        ))
    }

    fn add(&self, other: &G2) -> G2 {
        G2(self.0 + other.0)
    }

    fn neg(&self) -> G2 {
        G2(-self.0)
    }

    fn mul(&self, k: BigUint) -> G2 {
        G2(self.0 * fr_from(&k))
    }

    fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &G2) -> G2 {
        self.add(other)
    }

    fn __neg__(&self) -> G2 {
        self.neg()
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        match other.extract::<PyRef<G2>>() {
            Ok(o) => self.0 == o.0,
            Err(_) => false,
        }
    }

    fn __repr__(&self) -> String {
        if self.0.is_zero() {
            "G2(identity)".to_string()
        } else {
            "G2(...)".to_string()
        }
    }

    /// Compressed form: (x.c0, x.c1, y-lex-larger flag), or None for the
    /// identity. Lex order compares (c1, c0), matching the byte encoding.
    fn compressed_parts(&self) -> Option<(BigUint, BigUint, bool)> {
        if self.0.is_zero() {
            return None;
        }
        let a = self.0.into_affine();
        Some((fq_to_big(a.x.c0), fq_to_big(a.x.c1), fq2_lex_larger(a.y)))
    }

    #[staticmethod]
    fn from_compressed(x0: BigUint, x1: BigUint, y_lex_larger: bool) -> PyResult<G2> {
        let x = Fq2::new(fq_from_checked(&x0)?, fq_from_checked(&x1)?);
        let rhs = x.square() * x + ark_bn254::g2::Config::COEFF_B;
        let mut y = rhs
            .sqrt()
            .ok_or_else(|| PyValueError::new_err("x is not on the curve"))?;
        if fq2_lex_larger(y) != y_lex_larger {
            y = -y;
        }
        let p = G2Affine::new_unchecked(x, y);
        if !p.is_in_correct_subgroup_assuming_on_curve() {
            return Err(PyValueError::new_err("point not in prime-order subgroup"));
        }
        Ok(G2(p.into()))
    }
}

// ---------------------------------------------------------------------------
// GT
// ---------------------------------------------------------------------------

#[pyclass(frozen)]
#[derive(Clone)]
struct GT(Fq12);

fn fq6_coeffs(x: &Fq6) -> [BigUint; 6] {
    [
        fq_to_big(x.c0.c0),
        fq_to_big(x.c0.c1),
        fq_to_big(x.c1.c0),
        fq_to_big(x.c1.c1),
        fq_to_big(x.c2.c0),
        fq_to_big(x.c2.c1),
    ]
}

fn fq6_from_coeffs(c: &[BigUint]) -> PyResult<Fq6> {
    Ok(Fq6::new(
        Fq2::new(fq_from_checked(&c[0])?, fq_from_checked(&c[1])?),
        Fq2::new(fq_from_checked(&c[2])?, fq_from_checked(&c[3])?),
        Fq2::new(fq_from_checked(&c[4])?, fq_from_checked(&c[5])?),
    ))
}

/// True iff x encodes lexicographically above its negation (coefficient
/// order c0.c0, c0.c1, c1.c0, c1.c1, c2.c0, c2.c1, big-endian values).
fn fq6_lex_larger(x: &Fq6) -> bool {
    let a = fq6_coeffs(x);
    let b = fq6_coeffs(&-*x);
    a > b
}

/// Tonelli-Shanks square root in Fq6 (q^6 - 1 = 2^4 * odd for BN254).
fn fq6_sqrt(a: Fq6) -> Option<Fq6> {
    if a.is_zero() {
        return Some(Fq6::zero());
    }
    struct Ctx {
        t_limbs: Vec<u64>,
        t_plus_1_half_limbs: Vec<u64>,
        s: u32,
        z_t: Fq6, // nonresidue^t
    }
    static CTX: OnceLock<Ctx> = OnceLock::new();
    let ctx = CTX.get_or_init(|| {
        let q: BigUint = Fq::MODULUS.into();
        let q6m1 = q.pow(6u32) - 1u32;
        let s = q6m1.trailing_zeros().expect("q^6 - 1 > 0") as u32;
        let t = &q6m1 >> s;
        let half: BigUint = &q6m1 >> 1;
        let half_limbs = half.to_u64_digits();
        // Fixed scan for a quadratic nonresidue; deterministic across runs.
        let mut z = Fq6::zero();
        for i in 1u64..10_000 {
            let cand = Fq6::new(
                Fq2::new(Fq::from(i), Fq::one()),
                Fq2::new(Fq::one(), Fq::zero()),
                Fq2::zero(),
            );
            if cand.pow(&half_limbs) == -Fq6::one() {
                z = cand;
                break;
            }
        }
        assert!(!z.is_zero(), "no quadratic nonresidue found");
        let t_plus_1_half: BigUint = (&t + 1u32) >> 1;
        Ctx {
            t_limbs: t.to_u64_digits(),
            t_plus_1_half_limbs: t_plus_1_half.to_u64_digits(),
            s,
            z_t: z.pow(t.to_u64_digits()),
        }
    });

    let mut x = a.pow(&ctx.t_plus_1_half_limbs);
    let mut b = a.pow(&ctx.t_limbs);
    let mut g = ctx.z_t;
    let mut r = ctx.s;
    loop {
        if b.is_one() {
            return Some(x);
        }
        let mut m = 0u32;
        let mut t = b;
        while !t.is_one() {
            t.square_in_place();
            m += 1;
            if m >= r {
                return None; // not a quadratic residue
            }
        }
        let mut gs = g;
        for _ in 0..(r - m - 1) {
            gs.square_in_place();
        }
        x *= gs;
        let gs2 = gs.square();
        b *= gs2;
        g = gs2;
        r = m;
    }
}

fn gt_in_subgroup(v: &Fq12) -> bool {
    v.pow(Fr::MODULUS.0) == Fq12::one()
}

#[pymethods]
impl GT {
    #[staticmethod]
    fn one() -> GT {
        GT(Fq12::one())
    }

    fn mul(&self, other: &GT) -> GT {
        GT(self.0 * other.0)
    }

    fn pow(&self, k: BigUint) -> GT {
        GT(self.0.pow(fr_from(&k).into_bigint().0))
    }

    fn inverse(&self) -> PyResult<GT> {
        self.0
            .inverse()
            .map(GT)
            .ok_or_else(|| PyValueError::new_err("zero has no inverse"))
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn __mul__(&self, other: &GT) -> GT {
        self.mul(other)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        match other.extract::<PyRef<GT>>() {
            Ok(o) => self.0 == o.0,
            Err(_) => false,
        }
    }

    fn __repr__(&self) -> String {
        if self.0.is_one() {
            "GT(one)".to_string()
        } else {
            "GT(...)".to_string()
        }
    }

    /// Cyclotomic compression: the w-coefficient of the quadratic tower
    /// (six base-field values) plus a sign flag for the other half.
    /// Only unitary elements (norm 1, i.e. outputs of the pairing and
    /// their products/powers) are compressible.
    fn compress(&self) -> PyResult<([BigUint; 6], bool)> {
        let c0 = self.0.c0;
        let c1 = self.0.c1;
        let norm = c0.square() - fq12_nonresidue() * c1.square();
        if !norm.is_one() {
            return Err(PyValueError::new_err("element is not unitary"));
        }
        Ok((fq6_coeffs(&c1), fq6_lex_larger(&c0)))
    }

    /// Inverse of `compress`: solves c0 = sqrt(1 + nonresidue * c1^2),
    /// picks the root matching the sign flag, and checks membership in
    /// the prime-order subgroup.
    #[staticmethod]
    fn decompress(c1_coeffs: Vec<BigUint>, c0_lex_larger: bool) -> PyResult<GT> {
        if c1_coeffs.len() != 6 {
            return Err(PyValueError::new_err("expected 6 coefficients"));
        }
        let c1 = fq6_from_coeffs(&c1_coeffs)?;
        let t = Fq6::one() + fq12_nonresidue() * c1.square();
        let mut c0 = fq6_sqrt(t)
            .ok_or_else(|| PyValueError::new_err("no unitary element matches encoding"))?;
        if c0.is_zero() {
            if c0_lex_larger {
                return Err(PyValueError::new_err("invalid sign flag for zero half"));
            }
        } else if fq6_lex_larger(&c0) != c0_lex_larger {
            c0 = -c0;
        }
        let v = Fq12::new(c0, c1);
        if !gt_in_subgroup(&v) {
            return Err(PyValueError::new_err("element not in prime-order subgroup"));
        }
        Ok(GT(v))
    }
}

// ---------------------------------------------------------------------------
// Pairing
// ---------------------------------------------------------------------------

#[pyfunction]
fn pairing(a: &G1, b: &G2) -> GT {
    GT(Bn254::pairing(a.0, b.0).0)
}

// ---------------------------------------------------------------------------
// Hash-to-curve (RFC 9380: expand_message_xmd + Shallue-van de Woestijne)
// ---------------------------------------------------------------------------

const H2C_L: usize = 48; // ceil((254 + 128) / 8)

fn expand_message_xmd(msg: &[u8], dst: &[u8], len_in_bytes: usize) -> Vec<u8> {
    assert!(dst.len() <= 255, "DST too long");
    assert!(len_in_bytes <= 255 * 32);
    let ell = len_in_bytes.div_ceil(32);
    let mut dst_prime = dst.to_vec();
    dst_prime.push(dst.len() as u8);

    let mut h = Sha256::new();
    h.update([0u8; 64]); // Z_pad for SHA-256 block size
    h.update(msg);
    h.update((len_in_bytes as u16).to_be_bytes());
    h.update([0u8]);
    h.update(&dst_prime);
    let b0 = h.finalize();

    let mut h = Sha256::new();
    h.update(b0);
    h.update([1u8]);
    h.update(&dst_prime);
    let mut bi = h.finalize();

    let mut out = Vec::with_capacity(ell * 32);
    out.extend_from_slice(&bi);
    for i in 2..=ell {
        let mut x = [0u8; 32];
        for (j, v) in x.iter_mut().enumerate() {
            *v = b0[j] ^ bi[j];
        }
        let mut h = Sha256::new();
        h.update(x);
        h.update([i as u8]);
        h.update(&dst_prime);
        bi = h.finalize();
        out.extend_from_slice(&bi);
    }
    out.truncate(len_in_bytes);
    out
}

struct SvdwConstants {
    c1: Fq, // g(Z)
    c2: Fq, // -Z / 2
    c3: Fq, // sqrt(-g(Z) * (3 Z^2 + 4 A)), sgn0 == 0
    c4: Fq, // -4 g(Z) / (3 Z^2 + 4 A)
    z: Fq,
}

fn svdw() -> &'static SvdwConstants {
    static SVDW: OnceLock<SvdwConstants> = OnceLock::new();
    SVDW.get_or_init(|| {
        // Curve y^2 = x^3 + 3 over Fq; Z = 1 satisfies the RFC conditions.
        let z = Fq::one();
        let b = Fq::from(3u64);
        let g_z = z * z * z + b;
        let three_z2 = Fq::from(3u64) * z * z;
        let c1 = g_z;
        let c2 = -(z / Fq::from(2u64));
        let mut c3 = (-g_z * three_z2).sqrt().expect("Z choice guarantees a root");
        if c3.into_bigint().is_odd() {
            c3 = -c3;
        }
        let c4 = -(Fq::from(4u64) * g_z) / three_z2;
        SvdwConstants { c1, c2, c3, c4, z }
    })
}

fn is_square(x: Fq) -> bool {
    match x.legendre() {
        LegendreSymbol::QuadraticNonResidue => false,
        _ => true,
    }
}

fn map_to_curve_svdw(u: Fq) -> G1Affine {
    let c = svdw();
    let tv1 = u.square() * c.c1;
    let tv2 = Fq::one() + tv1;
    let tv1 = Fq::one() - tv1;
    let tv3 = (tv1 * tv2).inverse().unwrap_or_else(Fq::zero);
    let tv4 = u * tv1 * tv3 * c.c3;
    let x1 = c.c2 - tv4;
    let gx1 = x1.square() * x1 + Fq::from(3u64);
    let x2 = c.c2 + tv4;
    let gx2 = x2.square() * x2 + Fq::from(3u64);
    let x3 = (tv2.square() * tv3).square() * c.c4 + c.z;

    let (x, gx) = if is_square(gx1) {
        (x1, gx1)
    } else if is_square(gx2) {
        (x2, gx2)
    } else {
        (x3, x3.square() * x3 + Fq::from(3u64))
    };
    let mut y = gx.sqrt().expect("gx is square by construction");
    if u.into_bigint().is_odd() != y.into_bigint().is_odd() {
        y = -y;
    }
    G1Affine::new_unchecked(x, y)
}

fn hash_to_g1_point(dst: &[u8], msg: &[u8]) -> G1Projective {
    let q: BigUint = Fq::MODULUS.into();
    let uniform = expand_message_xmd(msg, dst, 2 * H2C_L);
    let u0 = Fq::from(BigUint::from_bytes_be(&uniform[..H2C_L]) % &q);
    let u1 = Fq::from(BigUint::from_bytes_be(&uniform[H2C_L..]) % &q);
    // Cofactor of G1 is 1, so no clearing step is needed.
    G1Projective::from(map_to_curve_svdw(u0)) + G1Projective::from(map_to_curve_svdw(u1))
}

#[pyfunction]
fn expand_message<'py>(
    py: Python<'py>,
    msg: Vec<u8>,
    dst: Vec<u8>,
    len_in_bytes: usize,
) -> Bound<'py, pyo3::types::PyBytes> {
    pyo3::types::PyBytes::new_bound(py, &expand_message_xmd(&msg, &dst, len_in_bytes))
}

#[pyfunction]
fn fr_modulus() -> BigUint {
    Fr::MODULUS.into()
}

#[pyfunction]
fn fq_modulus() -> BigUint {
    Fq::MODULUS.into()
}

#[pymodule]
fn _backend(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<G1>()?;
    m.add_class::<G2>()?;
    m.add_class::<GT>()?;
    m.add_function(wrap_pyfunction!(pairing, m)?)?;
    m.add_function(wrap_pyfunction!(expand_message, m)?)?;
    m.add_function(wrap_pyfunction!(fr_modulus, m)?)?;
    m.add_function(wrap_pyfunction!(fq_modulus, m)?)?;
    Ok(())
}
