//! Self-reciprocal calculus.
//!
//! The symmetrization of `q` of degree `k` is `q*(T) = T^k q(T + 1/T)`, a
//! palindromic polynomial of degree `2k`. Every palindromic polynomial of even
//! degree is a symmetrization, and every palindromic polynomial of odd degree
//! is `(T+1)` times one. A polynomial `f` is *represented* by `q` when
//! `f(T^2) = q*(T)`.
//!
//! A self-reciprocal polynomial also factors as `(T-1)^{2s} g(T)` with
//! `g(1) != 0` and the roots of `g` closed under inversion; the exponent `s`
//! can be read off by repeated [`IntPoly::divrem`] by `T - 1`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::IntPoly;

/// `p = (T+1)^epsilon * core*`, with `2 deg(core) + epsilon = deg p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParitySplit {
    pub epsilon: u8,
    pub core: IntPoly,
}

impl ParitySplit {
    pub fn reconstruct(&self) -> IntPoly {
        let core = symmetrize(&self.core).expect("core is nonzero");
        if self.epsilon == 1 {
            &core * &t_plus_one()
        } else {
            core
        }
    }
}

/// True iff the coefficient sequence is a palindrome.
pub fn is_self_reciprocal(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = p.coeffs();
    Ok(c.iter().eq(c.iter().rev()))
}

/// `T^{deg q} q(T + 1/T)`.
pub fn symmetrize(q: &IntPoly) -> Result<IntPoly> {
    let k = q.degree().ok_or(Error::ZeroPolynomial)?;
    // sum_i c_i (T^2+1)^i T^{k-i}
    let t2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let mut power = IntPoly::one();
    let mut acc = IntPoly::zero();
    for (i, c) in q.coeffs().iter().enumerate() {
        acc = &acc + &power.shift(k - i).scale(c);
        power = &power * &t2p1;
    }
    Ok(acc)
}

/// Inverse of [`symmetrize`] on palindromic polynomials of even degree.
///
/// Peels off the top coefficient against `(T^2+1)^j T^{k-j}` for `j = k..0`;
/// every step subtracts an integer multiple, so the result is integral
/// without any trial division.
pub fn desymmetrize(p: &IntPoly) -> Result<IntPoly> {
    if !is_self_reciprocal(p)? {
        return Err(Error::NotSelfReciprocal);
    }
    let n = p.degree().expect("nonzero");
    if n % 2 == 1 {
        return Err(Error::OddDegree);
    }
    let k = n / 2;
    let t2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let powers: Vec<IntPoly> =
        std::iter::successors(Some(IntPoly::one()), |x| Some(x * &t2p1)).take(k + 1).collect();
    let mut rest = p.clone();
    let mut q = vec![BigInt::default(); k + 1];
    for j in (0..=k).rev() {
        let c = rest.coeff(k + j);
        if c == BigInt::default() {
            continue;
        }
        rest = &rest - &powers[j].shift(k - j).scale(&c);
        q[j] = c;
    }
    assert!(rest.is_zero(), "palindromic input must desymmetrize exactly");
    Ok(IntPoly::new(q))
}

/// Splits a self-reciprocal `p` as `(T+1)^epsilon core*`.
pub fn split_parity(p: &IntPoly) -> Result<ParitySplit> {
    if !is_self_reciprocal(p)? {
        return Err(Error::NotSelfReciprocal);
    }
    let n = p.degree().expect("nonzero");
    if n.is_multiple_of(2) {
        return Ok(ParitySplit { epsilon: 0, core: desymmetrize(p)? });
    }
    let (quo, rem) = p.divrem(&t_plus_one())?;
    assert!(rem.is_zero(), "odd palindromic polynomials vanish at -1");
    Ok(ParitySplit { epsilon: 1, core: desymmetrize(&quo)? })
}

/// The hat map on `Z[T^2]`: returns `g` with `g(T^2) = f*(T)`.
///
/// Multiplicative, and its image is self-reciprocal.
pub fn even_decompress(f: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.coeffs().iter().skip(1).step_by(2).any(|c| !num_traits::Zero::is_zero(c)) {
        return Err(Error::NotEvenPolynomial);
    }
    let sym = symmetrize(f)?;
    Ok(IntPoly::new(sym.coeffs().iter().step_by(2).cloned().collect()))
}

/// `p(T) == T^{deg p} p(1/T)` evaluated as a rational-function identity.
///
/// Written independently of the palindrome test: compares `p(x)` with
/// `x^n p(1/x)` at `n + 1` distinct rational points.
pub fn reciprocal_identity_holds(p: &IntPoly) -> bool {
    use num_rational::BigRational;
    let Some(n) = p.degree() else {
        return false;
    };
    (2..n as i64 + 3).all(|k| {
        let x = BigRational::new(BigInt::from(k), BigInt::from(k + 1));
        let lhs = p.eval(&x);
        let rhs = num_traits::pow(x.clone(), n) * p.eval(&x.recip());
        lhs == rhs
    })
}

pub(crate) fn t_plus_one() -> IntPoly {
    IntPoly::new(vec![BigInt::one(), BigInt::one()])
}
