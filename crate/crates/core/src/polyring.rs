//! Dense univariate polynomials over the integers and the rationals.
//!
//! [`IntPoly`] is the working currency of the crate. Coefficients are stored
//! in ascending order of powers (`coeffs[i]` multiplies `T^i`) and always
//! normalized, so the zero polynomial is the empty vector and its degree is
//! `None` rather than a sentinel integer.
//!
//! The text format is a JSON array of ascending integer coefficients:
//! `[0,-2,0,1]` is `T^3 - 2*T`. [`fmt::Display`] renders the human-readable
//! form, which is output-only.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    /// Builds a polynomial from small ascending coefficients.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `c * T^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `T - a` for an integer `a`.
    pub fn linear_root(a: i64) -> Self {
        Self::from_i64s(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `T^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `T^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut k: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `T^n p(1/T)` where `n = deg p`.
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// Substitutes `-T` for `T`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect(),
        )
    }

    /// Division with remainder by a monic divisor.
    pub fn divrem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !d.is_monic() {
            return Err(Error::DivisorNotMonic);
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient `self / d` over the integers, if it exists.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let lead = d.leading_coeff()?;
        let dd = d.coeffs.len() - 1;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() <= dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[i + dd]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        if rem[..dd].iter().all(Zero::is_zero) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return self.clone();
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        for i in (0..r.len() - dd).rev() {
            let c = std::mem::take(&mut r[i + dd]);
            for x in r.iter_mut() {
                *x *= lc;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                r[i + j] -= &c * dj;
            }
        }
        IntPoly::new(r)
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with the sign of the leading coefficient kept.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn normalized(&self) -> IntPoly {
        let p = self.primitive_part();
        match p.leading_coeff() {
            Some(lc) if lc.is_negative() => -p,
            _ => p,
        }
    }

    /// Greatest common divisor through the subresultant remainder sequence.
    ///
    /// The result is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::GcdOfZeros),
            (true, false) => return Ok(other.normalized()),
            (false, true) => return Ok(self.normalized()),
            _ => {}
        }
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = (a.coeffs.len() - b.coeffs.len()) as u32;
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return Ok(b.normalized());
            }
            if r.is_constant() {
                return Ok(IntPoly::one());
            }
            let divisor = &g * num_traits::pow(h.clone(), delta as usize);
            a = b;
            b = IntPoly::new(r.coeffs.iter().map(|c| c / &divisor).collect());
            g = a.leading_coeff().cloned().unwrap_or_else(BigInt::one);
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => num_traits::pow(g.clone(), delta as usize) / num_traits::pow(h, delta as usize - 1),
            };
        }
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of the value at `x`, computed on the homogenized integer form.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(n) = self.degree() else {
            return Ordering::Equal;
        };
        let (num, den) = (x.numer(), x.denom());
        let mut acc = self.coeffs[n].clone();
        let mut dpow = BigInt::one();
        for c in self.coeffs[..n].iter().rev() {
            dpow *= den;
            acc = acc * num + c * &dpow;
        }
        acc.cmp(&BigInt::zero())
    }

    /// Sign as `x` tends to +infinity (`positive`) or -infinity.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        match (self.degree(), self.leading_coeff()) {
            (Some(n), Some(lc)) => {
                let s = lc.cmp(&BigInt::zero());
                if positive || n % 2 == 0 {
                    s
                } else {
                    s.reverse()
                }
            }
            _ => Ordering::Equal,
        }
    }

    /// `p(T^2)`.
    pub fn compose_t2(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        let q = self.div_exact(&g).expect("gcd of primitive polynomials divides exactly");
        Ok(q.normalized())
    }

    /// Yun's squarefree decomposition: `p = c * prod f_i^{m_i}` with
    /// pairwise coprime squarefree primitive `f_i` and increasing `m_i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(IntPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.normalized();
        if p.is_constant() {
            return Ok(Vec::new());
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp)?;
        let mut b = p.div_exact(&a0).expect("gcd divides p");
        let mut c = dp.div_exact(&a0).expect("gcd divides p'");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d)?;
            b = b.div_exact(&a).expect("gcd divides b");
            c = d.div_exact(&a).expect("gcd divides d");
            d = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Compact JSON array text, e.g. `[0,-2,0,1]`.
    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{i}"),
            };
            if i == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(BigIntJson))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<serde_json::Number> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|n| {
                BigInt::from_str(&n.to_string())
                    .map_err(|_| D::Error::custom(format!("coefficient {n} is not an integer")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Serializes a big integer as a bare JSON number of any size.
#[derive(Clone, Copy, Debug)]
pub struct BigIntJson<'a>(pub &'a BigInt);

impl Serialize for BigIntJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(v) = self.0.to_i64() {
            return serializer.serialize_i64(v);
        }
        let n = serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(serializer)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(IntPoly, Add, add);
forward_owned_binop!(IntPoly, Sub, sub);
forward_owned_binop!(IntPoly, Mul, mul);

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |acc, p| &acc + &p)
    }
}

/// Polynomial with rational coefficients, ascending order.
///
/// Denominators are kept positive and reduced by [`BigRational`] itself.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading_coeff() {
            Some(lc) => RatPoly::new(self.coeffs.iter().map(|c| c / lc).collect()),
            None => RatPoly::default(),
        }
    }

    /// Euclidean division over the rationals.
    pub fn divrem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let Some(lc) = d.leading_coeff() else {
            return Err(Error::ZeroPolynomial);
        };
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((RatPoly::default(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + dd]) / lc;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Clears denominators and content by a positive factor, so signs of
    /// values are preserved.
    pub fn to_primitive_int(&self) -> IntPoly {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self.coeffs.iter().map(|c| (c * BigRational::from(lcm.clone())).to_integer()).collect();
        IntPoly::new(ints).primitive_part()
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly { coeffs: p.coeffs.iter().cloned().map(BigRational::from).collect() }
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        RatPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::default();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p(&[1, 1]) * p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[3, 0, 1]) + IntPoly::zero(), p(&[3, 0, 1]));
        assert_eq!(p(&[0, -2, 0, 1]) * IntPoly::one(), p(&[0, -2, 0, 1]));
        assert_eq!(p(&[1, 2, 3]) - p(&[1, 2, 3]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 5]).degree(), Some(2));
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn divrem_examples() {
        let (quo, rem) = p(&[0, -2, 0, 1]).divrem(&p(&[-2, 0, 1])).unwrap();
        assert_eq!((quo, rem), (p(&[0, 1]), IntPoly::zero()));

        let (quo, rem) = p(&[1, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!((quo, rem), (p(&[-1, 1]), p(&[2])));

        let x = p(&[4, -3, 0, 7]);
        assert_eq!(x.divrem(&IntPoly::one()).unwrap(), (x.clone(), IntPoly::zero()));
    }

    #[test]
    fn divrem_rejects_bad_divisors() {
        let x = p(&[1, 2, 3]);
        assert_eq!(x.divrem(&IntPoly::zero()), Err(Error::DivisorNotMonic));
        assert_eq!(x.divrem(&p(&[1, 2])), Err(Error::DivisorNotMonic));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 0, 0, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[-2, 0, 1]).gcd(&p(&[0, -2, 0, 1])).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(p(&[-6, 0, 3]).gcd(&IntPoly::zero()).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(p(&[4, 0, -2]).gcd(&IntPoly::zero()).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(IntPoly::zero().gcd(&IntPoly::zero()), Err(Error::GcdOfZeros));
        // coprime
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-2, 0, 1])).unwrap(), IntPoly::one());
    }

    #[test]
    fn gcd_with_nonmonic_inputs() {
        // (2T+1)(T-3) and (2T+1)(T+5)
        let a = p(&[1, 2]) * p(&[-3, 1]);
        let b = p(&[1, 2]) * p(&[5, 1]) * p(&[7]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[1, 2]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[0, -5, 0, 1]).eval(&q(0, 1)), q(0, 1));
        assert_eq!(p(&[1, 1, 1]).eval(&q(1, 1)), q(3, 1));
        assert_eq!(p(&[0, -2, 0, 1]).eval(&q(2, 1)), q(4, 1));
        assert_eq!(p(&[-2, 0, 1]).eval(&q(3, 2)), q(1, 4));
    }

    #[test]
    fn sign_at_matches_eval() {
        let x = p(&[-2, 0, 1]);
        assert_eq!(x.sign_at(&q(3, 2)), Ordering::Greater);
        assert_eq!(x.sign_at(&q(-7, 5)), Ordering::Less);
        assert_eq!(p(&[-1, 0, 4]).sign_at(&q(1, 2)), Ordering::Equal);
        assert_eq!(p(&[0, 0, 0, -1]).sign_at_infinity(false), Ordering::Greater);
        assert_eq!(p(&[0, 0, 0, -1]).sign_at_infinity(true), Ordering::Less);
    }

    #[test]
    fn compose_t2_examples() {
        assert_eq!(p(&[-1, 1]).compose_t2(), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 0, 1]).compose_t2(), p(&[1, 0, 0, 0, 1]));
        assert_eq!(IntPoly::zero().compose_t2(), IntPoly::zero());
    }

    #[test]
    fn squarefree_examples() {
        let x = p(&[-1, 1]).pow(2) * p(&[1, 1]);
        assert_eq!(x.squarefree_part().unwrap(), p(&[-1, 0, 1]));
        let y = p(&[-1, 0, 1]).pow(2);
        assert_eq!(y.squarefree_decomposition().unwrap(), vec![(p(&[-1, 0, 1]), 2)]);
        assert_eq!(p(&[0, -5, 0, 1]).derivative(), p(&[-5, 0, 3]));
        assert_eq!(IntPoly::zero().squarefree_part(), Err(Error::ZeroPolynomial));
        assert_eq!(IntPoly::zero().squarefree_decomposition(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_decomposition_mixed() {
        // 3 (T-1)(T+2)^2 T^3
        let x = p(&[3]) * p(&[-1, 1]) * p(&[2, 1]).pow(2) * p(&[0, 1]).pow(3);
        let dec = x.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(p(&[-1, 1]), 1), (p(&[2, 1]), 2), (p(&[0, 1]), 3)]);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "T^3 - 2*T");
        assert_eq!(p(&[1, -1, 0, -3]).to_string(), "-3*T^3 - T + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, -2, 0, 1]).to_json(), "[0,-2,0,1]");
        assert_eq!("[0,-2,0,1]".parse::<IntPoly>().unwrap(), p(&[0, -2, 0, 1]));
        assert_eq!("[1,2,0]".parse::<IntPoly>().unwrap(), p(&[1, 2]));
        assert!("[1.5]".parse::<IntPoly>().is_err());
        assert!("T^2".parse::<IntPoly>().is_err());
    }

    #[test]
    fn json_handles_big_coefficients() {
        let big = BigInt::from(3u8).pow(80);
        let x = IntPoly::new(vec![big.clone(), -big.clone(), BigInt::one()]);
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, x.to_json());
        assert_eq!(text.parse::<IntPoly>().unwrap(), x);
    }

    #[test]
    fn ratpoly_divrem_and_scaling() {
        let a = RatPoly::from(&p(&[1, 0, 1]));
        let b = RatPoly::from(&p(&[1, 2]));
        let (quo, rem) = a.divrem(&b).unwrap();
        assert_eq!(&(&quo * &b) + &rem, a);
        assert_eq!(rem.coeffs(), &[q(5, 4)]);
        let scaled = RatPoly::new(vec![q(-1, 2), q(0, 1), q(1, 3)]).to_primitive_int();
        assert_eq!(scaled, p(&[-3, 0, 2]));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..8).prop_map(|v| IntPoly::from_i64s(&v))
    }

    fn monic_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..6).prop_map(|mut v| {
            v.push(1);
            IntPoly::from_i64s(&v)
        })
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn divrem_round_trip(x in small_poly(), d in monic_poly()) {
            let (quo, rem) = x.divrem(&d).unwrap();
            prop_assert_eq!(&(&d * &quo) + &rem, x);
            prop_assert!(rem.degree() < d.degree() || rem.is_zero());
        }

        #[test]
        fn compose_t2_is_multiplicative(a in small_poly(), b in small_poly()) {
            prop_assert_eq!((&a * &b).compose_t2(), &a.compose_t2() * &b.compose_t2());
        }

        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = a.gcd(&b).unwrap();
            let gm = RatPoly::from(&g).monic();
            for x in [&a, &b] {
                let (_, rem) = RatPoly::from(x).divrem(&gm).unwrap();
                prop_assert!(rem.is_zero());
            }
            if !c.is_zero() {
                // the common factor divides the gcd
                let (_, rem) = RatPoly::from(&g).divrem(&RatPoly::from(&c).monic()).unwrap();
                prop_assert!(rem.is_zero());
            }
        }

        #[test]
        fn squarefree_decomposition_multiplies_back(a in small_poly(), b in small_poly()) {
            let x = &(&a * &b) * &b;
            prop_assume!(!x.is_zero());
            let dec = x.squarefree_decomposition().unwrap();
            let back: IntPoly = dec.iter().map(|(f, m)| f.pow(*m)).product();
            prop_assert_eq!(back.normalized(), x.normalized());
        }
    }
}
