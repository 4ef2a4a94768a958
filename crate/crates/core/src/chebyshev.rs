//! Normalized Chebyshev polynomials of the second kind.
//!
//! `u_n(T) = 2 U_n(T/2)` where `U_n(cos t) = sin((n+1)t) / sin t`; the
//! trigonometric form is only a reminder, the three-term recursion
//! `u_{n+1} = T u_n - u_{n-1}` with `u_0 = 1`, `u_1 = T` is the definition
//! used here. `u_n` is the characteristic polynomial of the path on `n`
//! vertices, and `v_{n+1}(T^2) = u_n*(T)`.

use crate::cyclotomic::v;
use crate::polyring::IntPoly;
use crate::symmetry::symmetrize;

pub fn u(n: usize) -> IntPoly {
    ladder(n).pop().expect("ladder is nonempty")
}

/// `[u_0, u_1, ..., u_n]`.
pub fn ladder(n: usize) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::one()];
    if n >= 1 {
        out.push(IntPoly::t());
    }
    for k in 2..=n {
        let next = &out[k - 1].shift(1) - &out[k - 2];
        out.push(next);
    }
    out
}

/// `v_{n+1}(T^2) == u_n*(T)`.
pub fn verify_v_u_identity(n: usize) -> bool {
    let lhs = v(n as u64 + 1).expect("n + 1 >= 1").compose_t2();
    lhs == symmetrize(&u(n)).expect("u_n is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::count_real_roots;
    use crate::symmetry::is_self_reciprocal;

    #[test]
    fn small_values() {
        assert_eq!(u(0), IntPoly::one());
        assert_eq!(u(1), IntPoly::t());
        assert_eq!(u(3), IntPoly::from_i64s(&[0, -2, 0, 1]));
        assert_eq!(u(4), IntPoly::from_i64s(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn monic_with_matching_parity() {
        for (n, p) in ladder(60).iter().enumerate() {
            assert!(p.is_monic());
            assert_eq!(p.degree(), Some(n));
            for (i, c) in p.coeffs().iter().enumerate() {
                if (i + n) % 2 == 1 {
                    assert_eq!(c, &0.into());
                }
            }
        }
    }

    #[test]
    fn roots_lie_inside_minus_two_two() {
        let two = num_rational::BigRational::from_integer(2.into());
        for n in 1..=100 {
            let p = u(n);
            assert_eq!(count_real_roots(&p, &-two.clone(), &two, false).unwrap(), n, "n = {n}");
            // u_n(2) = n + 1, so no root sits on the boundary
            assert_eq!(p.eval_int(&2.into()), (n as i64 + 1).into());
        }
    }

    #[test]
    fn identity_with_v() {
        assert!(verify_v_u_identity(0));
        assert!(verify_v_u_identity(1));
        for n in 0..=200 {
            assert!(verify_v_u_identity(n), "n = {n}");
        }
        assert!(is_self_reciprocal(&symmetrize(&u(7)).unwrap()).unwrap());
    }
}
