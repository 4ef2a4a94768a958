//! Exact real-root counting and the unit-circle census of self-reciprocal
//! polynomials.
//!
//! Write a self-reciprocal `p` as `(T+1)^e core*`. A root `t` of `core*`
//! satisfies `t + 1/t = l` for a root `l` of `core`, and
//!
//! * `l` real in `[-2, 2]` gives the pair `t, 1/t = conj(t)` on the circle;
//! * `l` real outside `[-2, 2]` gives two real roots off the circle;
//! * `l` non-real gives two roots off the circle, since `|t| = 1` forces
//!   `l = 2 Re t` to be real.
//!
//! So `p` has `e + 2 #{roots of core in [-2, 2]}` roots on the circle,
//! counted with multiplicity. All of these decisions are made with Sturm
//! sequences over the integers; the only floating-point code (module
//! [`numeric`]) narrows reported spectral-radius brackets and nothing else.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coxeter::{extended_canonical_coxeter, WeightType};
use crate::cyclotomic::extract_cyclotomic_part;
use crate::error::{Error, Result};
use crate::polyring::{BigIntJson, IntPoly};
use crate::symmetry::split_parity;

/// Width of the isolating intervals returned by [`isolate_real_roots`].
pub fn isolation_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 20)
}

/// Default width of spectral-radius brackets.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 32)
}

/// Parses a positive tolerance written as `a/b`, a decimal such as
/// `0.001`, or scientific notation such as `1e-9`. The value is exact.
pub fn parse_tolerance(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid tolerance {s:?}"));
    let s = s.trim();
    let value = if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        BigRational::new(n, d)
    } else {
        let (mantissa, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = exp - frac.len() as i32;
        let ten = BigInt::from(10);
        if scale >= 0 {
            BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
        } else {
            BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
        }
    };
    if value <= BigRational::zero() {
        return Err(Error::NonPositiveTolerance);
    }
    Ok(value)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Signed remainder sequence of the squarefree part of a polynomial.
///
/// Members are primitive integer polynomials; every remainder is rescaled
/// by a positive factor only, which leaves sign variations unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

pub fn sturm_chain(p: &IntPoly) -> Result<SturmChain> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let p0 = p.squarefree_part()?;
    let p1 = p0.derivative().primitive_part();
    let mut chain = vec![p0, p1];
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.degree() == Some(0) {
            break;
        }
        let mut r = a.pseudo_rem(b);
        let exponent = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
        if b.leading_coeff().is_some_and(|lc| lc.is_negative()) && exponent % 2 == 1 {
            r = -r;
        }
        if r.is_zero() {
            break;
        }
        chain.push(-r.primitive_part());
    }
    Ok(SturmChain { chain })
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    pub fn polys(&self) -> &[IntPoly] {
        &self.chain
    }

    /// The squarefree polynomial the chain was built on.
    pub fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.chain.iter().map(|f| f.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.chain.iter().map(|f| f.sign_at_infinity(positive)))
    }

    /// Distinct roots in the half-open interval `(a, b]`, for `a <= b`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct roots in `[a, b]`.
    pub fn count_closed(&self, a: &BigRational, b: &BigRational) -> usize {
        let at_a = usize::from(self.base().sign_at(a) == Ordering::Equal);
        self.count_half_open(a, b) + at_a
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Integer `B` with every complex root of `p` strictly inside `|z| < B`.
pub fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lc = p.leading_coeff().expect("nonzero polynomial").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigInt::from(2) + max / lc
}

/// Real roots of `p` in `[a, b]`, distinct or counted with multiplicity.
pub fn count_real_roots(
    p: &IntPoly,
    a: &BigRational,
    b: &BigRational,
    with_multiplicity: bool,
) -> Result<usize> {
    if a > b {
        return Err(Error::EmptyInterval);
    }
    count_by_factor(p, with_multiplicity, |chain| chain.count_closed(a, b))
}

/// Real roots of `p` on the whole line.
pub fn count_all_real_roots(p: &IntPoly) -> Result<usize> {
    count_by_factor(p, false, SturmChain::count_all)
}

pub fn count_all_real_roots_with_multiplicity(p: &IntPoly) -> Result<usize> {
    count_by_factor(p, true, SturmChain::count_all)
}

fn count_by_factor(
    p: &IntPoly,
    with_multiplicity: bool,
    count: impl Fn(&SturmChain) -> usize,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(0);
    }
    if !with_multiplicity {
        return Ok(count(&sturm_chain(p)?));
    }
    let mut total = 0;
    for (factor, m) in p.squarefree_decomposition()? {
        total += m as usize * count(&sturm_chain(&factor)?);
    }
    Ok(total)
}

/// An interval holding exactly one real root: the single point `lo` when
/// `lo == hi`, otherwise the open interval `(lo, hi)` whose endpoints are
/// not roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.lo.to_f64().unwrap_or(f64::NAN), self.hi.to_f64().unwrap_or(f64::NAN))
    }
}

fn is_squarefree(p: &IntPoly) -> Result<bool> {
    Ok(p.gcd(&p.derivative())?.is_constant())
}

/// Sorted isolating intervals, one per real root, each of width at most
/// `2^-20`.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<RootInterval>> {
    isolate_with_width(p, &isolation_width())
}

/// Isolation without refinement beyond separating the roots.
fn isolate_coarse(p: &IntPoly) -> Result<Vec<RootInterval>> {
    let unbounded = BigRational::from_integer(BigInt::from(4) * cauchy_bound(p));
    isolate_with_width(p, &unbounded)
}

fn isolate_with_width(p: &IntPoly, width: &BigRational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    if !is_squarefree(p)? {
        return Err(Error::NotSquarefree);
    }
    let chain = sturm_chain(p)?;
    let b = BigRational::from_integer(cauchy_bound(p));
    let lo = -b.clone();
    let count = chain.count_half_open(&lo, &b);
    let mut out = Vec::new();
    isolate_into(&chain, lo, b, count, width, &mut out);
    Ok(out)
}

fn isolate_into(
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    count: usize,
    width: &BigRational,
    out: &mut Vec<RootInterval>,
) {
    match count {
        0 => {}
        1 => out.push(refine_single(chain, lo, hi, width)),
        _ => {
            let mid = (&lo + &hi) / rat(2);
            let right = chain.count_half_open(&mid, &hi);
            isolate_into(chain, lo, mid.clone(), count - right, width, out);
            isolate_into(chain, mid, hi, right, width, out);
        }
    }
}

/// Shrinks `(lo, hi]`, known to contain exactly one root, to a
/// [`RootInterval`] of width at most `width`.
fn refine_single(
    chain: &SturmChain,
    mut lo: BigRational,
    mut hi: BigRational,
    width: &BigRational,
) -> RootInterval {
    let p = chain.base();
    loop {
        if p.sign_at(&hi) == Ordering::Equal {
            return RootInterval { lo: hi.clone(), hi };
        }
        if &(&hi - &lo) <= width && p.sign_at(&lo) != Ordering::Equal {
            return RootInterval { lo, hi };
        }
        let mid = (&lo + &hi) / rat(2);
        if chain.count_half_open(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Bracket `[lo, hi]` of width at most `tol` around the largest real root,
/// or `None` without real roots. The root lies in `(lo, hi]`.
pub fn largest_real_root(p: &IntPoly, tol: &BigRational) -> Result<Option<(BigRational, BigRational)>> {
    if tol <= &BigRational::zero() {
        return Err(Error::NonPositiveTolerance);
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(None);
    }
    let chain = sturm_chain(p)?;
    if chain.count_all() == 0 {
        return Ok(None);
    }
    let b = BigRational::from_integer(cauchy_bound(p));
    let (mut lo, mut hi) = (-b.clone(), b);
    while &(&hi - &lo) > tol {
        let mid = (&lo + &hi) / rat(2);
        if chain.count_half_open(&mid, &hi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some((lo, hi)))
}

fn sign_product(a: Ordering, b: Ordering) -> Ordering {
    match (a, b) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        _ if a == b => Ordering::Greater,
        _ => Ordering::Less,
    }
}

/// Common roots of squarefree `base` and `f`, for use with [`is_root_of`].
fn common_part(base: &IntPoly, f: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() {
        return Ok(base.clone());
    }
    base.gcd(f)
}

/// Whether the root of `base` isolated by `iv` is a root of `g`, a divisor
/// of `base` from [`common_part`].
fn is_root_of(g: &IntPoly, iv: &RootInterval) -> bool {
    if iv.is_exact() {
        return g.sign_at(&iv.lo) == Ordering::Equal;
    }
    // roots of g are roots of base; the endpoints are not
    !g.is_constant() && g.sign_at(&iv.lo) != g.sign_at(&iv.hi)
}

/// True when, between any two consecutive distinct real roots of `upper`
/// (endpoints included), `lower` has a real root.
pub fn interlacing_check(lower: &IntPoly, upper: &IntPoly) -> Result<bool> {
    if lower.is_zero() || upper.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if upper.is_constant() {
        return Ok(true);
    }
    let u = upper.squarefree_part()?;
    let joint = (lower * upper).squarefree_part()?;
    let (gu, gl) = (common_part(&joint, &u)?, common_part(&joint, lower)?);
    let labels: Vec<(bool, bool)> =
        isolate_coarse(&joint)?.iter().map(|iv| (is_root_of(&gu, iv), is_root_of(&gl, iv))).collect();
    let upper_positions: Vec<usize> =
        labels.iter().enumerate().filter(|(_, l)| l.0).map(|(i, _)| i).collect();
    Ok(upper_positions.windows(2).all(|w| labels[w[0]..=w[1]].iter().any(|l| l.1)))
}

/// True when `prev * next < 0` at every real root of `mid`.
pub fn sign_alternation_check(prev: &IntPoly, mid: &IntPoly, next: &IntPoly) -> Result<bool> {
    if prev.is_zero() || mid.is_zero() || next.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if mid.is_constant() {
        return Ok(true);
    }
    let m = mid.squarefree_part()?;
    for f in [prev, next] {
        let g = common_part(&m, f)?;
        if !g.is_constant() && count_all_real_roots(&g)? > 0 {
            return Ok(false);
        }
    }
    for iv in isolate_coarse(&m)? {
        if sign_at_isolated_root(&m, iv, prev, next)? != Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sign of `f * g` at the root of `m` isolated by `iv`, given that neither
/// `f` nor `g` vanishes there.
fn sign_at_isolated_root(m: &IntPoly, mut iv: RootInterval, f: &IntPoly, g: &IntPoly) -> Result<Ordering> {
    let (sf, sg) = (f.squarefree_part()?, g.squarefree_part()?);
    loop {
        if iv.is_exact() {
            return Ok(sign_product(f.sign_at(&iv.lo), g.sign_at(&iv.lo)));
        }
        let free = |h: &IntPoly| -> Result<bool> {
            Ok(h.is_constant() || count_real_roots(h, &iv.lo, &iv.hi, false)? == 0)
        };
        if free(&sf)? && free(&sg)? {
            let x = iv.midpoint();
            return Ok(sign_product(f.sign_at(&x), g.sign_at(&x)));
        }
        let x = iv.midpoint();
        match m.sign_at(&x) {
            Ordering::Equal => iv = RootInterval { lo: x.clone(), hi: x },
            s if s == m.sign_at(&iv.lo) => iv.lo = x,
            _ => iv.hi = x,
        }
    }
}

/// Where the reported spectral-radius bracket came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BracketSource {
    /// Sturm bisection on a real root; certified.
    Exact,
    /// Refined by the floating-point root finder; not certified.
    Numeric,
    /// The root finder did not converge; `[1, Cauchy bound]` style bracket.
    Degraded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLocationReport {
    pub degree: usize,
    pub on_circle: usize,
    pub off_circle: usize,
    pub rho_is_one: bool,
    pub rho_bracket: (BigRational, BigRational),
    pub cyclotomic_indices: Vec<u64>,
    pub bracket_source: BracketSource,
}

impl RootLocationReport {
    /// `rho_bracket` as `[lo_num, lo_den, hi_num, hi_den]`.
    pub fn bracket_parts(&self) -> [&BigInt; 4] {
        let (lo, hi) = &self.rho_bracket;
        [lo.numer(), lo.denom(), hi.numer(), hi.denom()]
    }
}

impl Serialize for RootLocationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RootLocationReport", 6)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("on_circle", &self.on_circle)?;
        s.serialize_field("off_circle", &self.off_circle)?;
        s.serialize_field("rho_is_one", &self.rho_is_one)?;
        let parts = self.bracket_parts().map(BigIntJson);
        s.serialize_field("rho_bracket", &parts)?;
        s.serialize_field("cyclotomic_indices", &self.cyclotomic_indices)?;
        s.end()
    }
}

/// `(on_circle, off_circle)` with multiplicity for self-reciprocal `p`.
pub fn unit_circle_census(p: &IntPoly) -> Result<(usize, usize)> {
    let split = split_parity(p)?;
    let inside = count_real_roots(&split.core, &rat(-2), &rat(2), true)?;
    let on = split.epsilon as usize + 2 * inside;
    Ok((on, p.degree().expect("nonzero") - on))
}

pub fn classify_self_reciprocal(p: &IntPoly) -> Result<RootLocationReport> {
    classify_self_reciprocal_with_tol(p, &default_tolerance())
}

/// Unit-circle census, cyclotomic factors and a bracket for the largest
/// root modulus; `tol` is the width of exact brackets.
pub fn classify_self_reciprocal_with_tol(p: &IntPoly, tol: &BigRational) -> Result<RootLocationReport> {
    if tol <= &BigRational::zero() {
        return Err(Error::NonPositiveTolerance);
    }
    let (on_circle, off_circle) = unit_circle_census(p)?;
    let cyclo = extract_cyclotomic_part(p)?;
    let rho_is_one = off_circle == 0;
    let (rho_bracket, bracket_source) = if rho_is_one {
        ((rat(1), rat(1)), BracketSource::Exact)
    } else {
        spectral_radius_bracket(p, &cyclo.remainder, tol)?
    };
    Ok(RootLocationReport {
        degree: p.degree().expect("nonzero"),
        on_circle,
        off_circle,
        rho_is_one,
        rho_bracket,
        cyclotomic_indices: cyclo.indices,
        bracket_source,
    })
}

/// Bracket for the largest root beyond `1` of `p`, if one exists.
fn largest_real_root_above_one(p: &IntPoly, tol: &BigRational) -> Result<Option<(BigRational, BigRational)>> {
    let chain = sturm_chain(p)?;
    let b = BigRational::from_integer(cauchy_bound(p));
    if chain.count_half_open(&rat(1), &b) == 0 {
        return Ok(None);
    }
    let (lo, hi) = largest_real_root(p, tol)?.expect("has a real root");
    Ok(Some((lo.max(rat(1)), hi)))
}

fn spectral_radius_bracket(
    p: &IntPoly,
    non_cyclotomic: &IntPoly,
    tol: &BigRational,
) -> Result<((BigRational, BigRational), BracketSource)> {
    let sf = p.squarefree_part()?;
    let real_pos = largest_real_root_above_one(&sf, tol)?;
    let real_neg = largest_real_root_above_one(&sf.reflect(), tol)?;
    let exact = match (real_pos, real_neg) {
        (Some(a), Some(b)) => Some((a.0.max(b.0), a.1.max(b.1))),
        (a, b) => a.or(b),
    };
    let core = split_parity(p)?.core;
    let core_degree = core.degree().expect("nonzero");
    let all_core_real = count_all_real_roots_with_multiplicity(&core)? == core_degree;
    if all_core_real {
        let bracket = exact.expect("an off-circle root with real trace is real");
        return Ok((bracket, BracketSource::Exact));
    }
    let approx = numeric::approximate_roots(&non_cyclotomic.squarefree_part()?);
    let (lo_exact, hi_exact) = exact.unwrap_or((rat(1), rat(1)));
    if !approx.converged {
        let cauchy = BigRational::from_integer(cauchy_bound(p));
        return Ok(((lo_exact, cauchy), BracketSource::Degraded));
    }
    let m = approx.roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let delta = 1e-9 * m;
    let lo = BigRational::from_float(m - delta).expect("finite");
    let hi = BigRational::from_float(m + delta).expect("finite");
    Ok(((lo_exact.max(lo), hi_exact.max(hi)), BracketSource::Numeric))
}

/// Floating-point simultaneous root finding. Used to refine reported
/// brackets and as an independent oracle in tests, never to decide a count.
/// Roots of the extended canonical polynomial of `w` off the unit circle.
pub fn off_circle_bound_check(w: &WeightType) -> usize {
    unit_circle_census(&extended_canonical_coxeter(w))
        .expect("extended canonical polynomials are self-reciprocal")
        .1
}

fn rho_is_one(w: &WeightType) -> bool {
    off_circle_bound_check(w) == 0
}

/// False when raising some weight of `w` by one gives a type whose extended
/// canonical polynomial has all roots on the circle while `w` itself does
/// not. Weight order is irrelevant, so every arm is tried.
pub fn monotonicity_check(w: &WeightType) -> bool {
    if rho_is_one(w) {
        return true;
    }
    (0..w.t()).all(|i| !rho_is_one(&w.with_shifted(i, 1).expect("raising a weight is valid")))
}

pub mod numeric {
    use num_bigint::BigInt;
    use num_complex::Complex64;
    use num_traits::{Float, ToPrimitive, Zero};

    use crate::polyring::IntPoly;

    pub const TOLERANCE: f64 = 1e-12;
    pub const MAX_ITERATIONS: usize = 200;

    #[derive(Clone, Debug)]
    pub struct RootApproximation {
        pub roots: Vec<Complex64>,
        pub converged: bool,
        pub iterations: usize,
    }

    /// `p(z)`, `p'(z)` and the running error bound `sum |c_i| |z|^i`.
    fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        let mut bound = 0.0;
        let r = z.norm();
        for &c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
            bound = bound * r + c.abs();
        }
        (p, dp, bound)
    }

    /// Aberth-Ehrlich iteration on ascending `f64` coefficients.
    pub fn aberth(coeffs: &[f64], tol: f64, max_iter: usize) -> RootApproximation {
        let mut coeffs = coeffs.to_vec();
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        let n = coeffs.len().saturating_sub(1);
        if n == 0 {
            return RootApproximation { roots: Vec::new(), converged: true, iterations: 0 };
        }
        let lc = coeffs[n];
        for c in coeffs.iter_mut() {
            *c /= lc;
        }
        // Fujiwara bound on the root moduli
        let radius = (0..n)
            .map(|i| {
                let k = (n - i) as f64;
                let c = if i == 0 { coeffs[0].abs() / 2.0 } else { coeffs[i].abs() };
                c.powf(1.0 / k)
            })
            .fold(0.0, f64::max)
            * 2.0;
        let start = radius.max(1e-3) / 2.0;
        let mut roots: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(start, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
            .collect();
        // a root is frozen once its step is below `tol` or its value is
        // within rounding error of zero; moving it further only adds noise
        let mut done = vec![false; n];
        for iteration in 1..=max_iter {
            for k in 0..n {
                if done[k] {
                    continue;
                }
                let z = roots[k];
                let (p, dp, bound) = horner(&coeffs, z);
                if p.norm() <= 4.0 * f64::EPSILON * bound {
                    done[k] = true;
                    continue;
                }
                let ratio = p / dp;
                let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z - roots[j]).inv()).sum();
                let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
                if step.is_finite() {
                    roots[k] = z - step;
                    done[k] = step.norm() <= tol * roots[k].norm().max(1.0);
                }
            }
            if done.iter().all(|&d| d) {
                return RootApproximation { roots, converged: true, iterations: iteration };
            }
        }
        RootApproximation { roots, converged: false, iterations: max_iter }
    }

    /// `m * 2^e` with integer `m`; zero reports `None`.
    fn dyadic(x: f64) -> Option<(BigInt, i16)> {
        if x == 0.0 {
            return None;
        }
        let (m, e, sign) = x.integer_decode();
        Some((BigInt::from(sign) * BigInt::from(m), e))
    }

    /// `n / d` for `d > 0`, without overflowing the intermediate `f64`s.
    fn quotient(n: &BigInt, d: &BigInt) -> f64 {
        let shift = d.bits().saturating_sub(64);
        let (n, d) = (n >> shift, d >> shift);
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    }

    /// One Newton step with `p` and `p'` evaluated exactly at `z`, read as
    /// the dyadic rational it is.
    pub fn newton_polish(p: &IntPoly, z: Complex64) -> Complex64 {
        if !z.is_finite() || p.degree().unwrap_or(0) == 0 {
            return z;
        }
        // z = (a + ib) / 2^k with Gaussian integer a + ib
        let (re, im) = (dyadic(z.re), dyadic(z.im));
        let e = match (&re, &im) {
            (Some((_, x)), Some((_, y))) => (*x).min(*y),
            (Some((_, x)), None) | (None, Some((_, x))) => *x,
            (None, None) => 0,
        };
        let lift = |part: Option<(BigInt, i16)>| match part {
            Some((m, x)) => m << (x - e.min(x)) as usize,
            None => BigInt::zero(),
        };
        let (mut a, mut b) = (lift(re), lift(im));
        let mut k = 0usize;
        if e >= 0 {
            a <<= e as usize;
            b <<= e as usize;
        } else {
            k = (-e) as usize;
        }
        // Horner on D^n p(z) and D^(n-1) p'(z), D = 2^k
        let n = p.degree().expect("nonzero");
        let coeffs = p.coeffs();
        let (mut pr, mut pi) = (coeffs[n].clone(), BigInt::zero());
        let (mut dr, mut di) = (BigInt::zero(), BigInt::zero());
        for i in (0..n).rev() {
            // derivative accumulates the previous value, scaled to match
            let (ndr, ndi) = (&dr * &a - &di * &b + (&pr << k), &dr * &b + &di * &a + (&pi << k));
            let (npr, npi) = (&pr * &a - &pi * &b + (&coeffs[i] << (k * (n - i))), &pr * &b + &pi * &a);
            (dr, di, pr, pi) = (ndr, ndi, npr, npi);
        }
        // D^n p = P, D^n p' = dP, so p / p' = P / dP
        let den = &dr * &dr + &di * &di;
        if den.is_zero() {
            return z;
        }
        let num_re = &pr * &dr + &pi * &di;
        let num_im = &pi * &dr - &pr * &di;
        let step = Complex64::new(quotient(&num_re, &den), quotient(&num_im, &den));
        let next = z - step;
        if next.is_finite() {
            next
        } else {
            z
        }
    }

    /// All complex roots of `p` (best used on a squarefree polynomial),
    /// polished with two exact Newton steps each.
    pub fn approximate_roots(p: &IntPoly) -> RootApproximation {
        let mut approx = aberth(&p.to_f64_coeffs(), TOLERANCE, MAX_ITERATIONS);
        if approx.roots.iter().any(|z| !z.is_finite()) {
            approx.converged = false;
            return approx;
        }
        for z in approx.roots.iter_mut() {
            *z = newton_polish(p, newton_polish(p, *z));
        }
        approx
    }
}
