//! Cyclotomic polynomials, cyclotomic-part extraction and representability
//! of polynomials whose roots lie in the closed unit disk.
//!
//! By Kronecker's theorem a monic integer polynomial with nonzero constant
//! term and every root in the closed unit disk is a product of cyclotomic
//! polynomials, so "roots in the disk" is decided exactly by
//! [`is_cyclotomic_product`].

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::chebyshev;
use crate::error::{Error, Result};
use crate::polyring::IntPoly;
use crate::symmetry::{desymmetrize, is_self_reciprocal};

/// Cyclotomic factors (one index per occurrence) and the cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicPart {
    pub indices: Vec<u64>,
    pub remainder: IntPoly,
}

impl CyclotomicPart {
    pub fn product(&self) -> IntPoly {
        let cyc: IntPoly = self.indices.iter().map(|&n| cyclo(n).expect("n >= 1")).product();
        &cyc * &self.remainder
    }
}

pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `1 + T + ... + T^{n-1} = (T^n - 1)/(T - 1)`.
pub fn v(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::IndexTooSmall { min: 1, got: 0 });
    }
    Ok(IntPoly::from_i64s(&vec![1; n as usize]))
}

fn cache() -> &'static RwLock<HashMap<u64, IntPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial.
///
/// `phi_1 = T - 1`; for `n > 1` it is `v_n` divided exactly by `phi_d` for
/// every divisor `1 < d < n`. Results are memoized; the cache only ever
/// holds values this function would recompute identically.
pub fn cyclo(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::IndexTooSmall { min: 1, got: 0 });
    }
    if let Some(p) = cache().read().expect("cache poisoned").get(&n) {
        return Ok(p.clone());
    }
    let p = if n == 1 {
        IntPoly::from_i64s(&[-1, 1])
    } else {
        let mut acc = v(n)?;
        for d in (2..n).filter(|d| n.is_multiple_of(*d)) {
            let (quo, rem) = acc.divrem(&cyclo(d)?)?;
            debug_assert!(rem.is_zero());
            acc = quo;
        }
        acc
    };
    cache().write().expect("cache poisoned").entry(n).or_insert_with(|| p.clone());
    Ok(p)
}

/// All `n` with `totient(n) <= degree`.
///
/// Enumerated up to `2 degree^2`, which is safe because
/// `totient(n) >= sqrt(n/2)`.
pub fn candidate_indices(degree: usize) -> Vec<u64> {
    let degree = degree as u64;
    let bound = (2 * degree * degree).max(2);
    (1..=bound).filter(|&n| totient(n) <= degree).collect()
}

/// Splits off every cyclotomic factor of `p`, with multiplicity.
pub fn extract_cyclotomic_part(p: &IntPoly) -> Result<CyclotomicPart> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut remainder = p.clone();
    let mut indices = Vec::new();
    for n in candidate_indices(deg) {
        loop {
            if remainder.degree() < Some(totient(n) as usize) || !may_vanish_at_root_of_unity(&remainder, n) {
                break;
            }
            let (quo, rem) = remainder.divrem(&cyclo(n)?)?;
            if !rem.is_zero() {
                break;
            }
            indices.push(n);
            remainder = quo;
        }
    }
    Ok(CyclotomicPart { indices, remainder })
}

/// Cheap necessary condition for `phi_n | p`: `|p(e^{2 pi i/n})|` is small.
///
/// Horner in `f64` has absolute error below `4 deg^2 eps sum|a_i|` on the
/// unit circle, so a threshold of `1e-6 sum|a_i|` never rejects a true
/// divisor. Falls back to `true` when the coefficients overflow `f64` or the
/// degree is large enough for that bound to approach the threshold.
fn may_vanish_at_root_of_unity(p: &IntPoly, n: u64) -> bool {
    let coeffs = p.to_f64_coeffs();
    let scale: f64 = coeffs.iter().map(|c| c.abs()).sum();
    if !scale.is_finite() || coeffs.len() > 1000 {
        return true;
    }
    let angle = std::f64::consts::TAU / n as f64;
    let z = num_complex::Complex64::new(angle.cos(), angle.sin());
    let value = coeffs.iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    value.norm() <= 1e-6 * scale
}

pub fn is_cyclotomic_product(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(extract_cyclotomic_part(p)?.remainder.is_one())
}

/// The factor `f_n` of `u_{n-1}` with `f_n* = phi_n(T^2)`.
pub fn representing_factor(n: u64) -> Result<IntPoly> {
    if n < 2 {
        return Err(Error::IndexTooSmall { min: 2, got: n });
    }
    let f = desymmetrize(&cyclo(n)?.compose_t2())?;
    let (_, rem) = chebyshev::u(n as usize - 1).divrem(&f)?;
    assert!(rem.is_zero(), "representing factor of phi_{n} must divide u_{}", n - 1);
    Ok(f)
}

/// For monic `p` with all roots in the unit disk and `p(1) != 0`, returns
/// `q` with `p(T^2) = q*(T)`.
pub fn represent_unit_disk(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let part = extract_cyclotomic_part(p)?;
    if !part.remainder.is_one() {
        return Err(Error::NotCyclotomicProduct);
    }
    if part.indices.contains(&1) {
        return Err(Error::RootOneExcluded);
    }
    part.indices.iter().map(|&n| representing_factor(n)).product()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrFactorKind {
    /// `phi_n` with `n >= 2`.
    Cyclotomic(u64),
    /// `(T - 1)^2`.
    UnitDoubleRoot,
    /// Non-cyclotomic cofactor, left unfactored.
    Atomic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrFactor {
    pub kind: SrFactorKind,
    pub poly: IntPoly,
}

/// Decomposes a monic self-reciprocal polynomial into self-reciprocal
/// pieces: `(T-1)^2` blocks first, then `phi_n` by increasing `n`, then
/// the atomic non-cyclotomic cofactor if it is not `1`.
pub fn sr_decompose_cyclotomic(p: &IntPoly) -> Result<Vec<SrFactor>> {
    if !is_self_reciprocal(p)? {
        return Err(Error::NotSelfReciprocal);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let part = extract_cyclotomic_part(p)?;
    let ones = part.indices.iter().filter(|&&n| n == 1).count();
    assert!(ones % 2 == 0, "T-1 divides a palindromic polynomial to even order");
    let mut out: Vec<SrFactor> = (0..ones / 2)
        .map(|_| SrFactor { kind: SrFactorKind::UnitDoubleRoot, poly: IntPoly::from_i64s(&[1, -2, 1]) })
        .collect();
    for &n in part.indices.iter().filter(|&&n| n > 1) {
        out.push(SrFactor { kind: SrFactorKind::Cyclotomic(n), poly: cyclo(n)? });
    }
    if !part.remainder.is_one() {
        out.push(SrFactor { kind: SrFactorKind::Atomic, poly: part.remainder });
    }
    Ok(out)
}
