//! Coxeter polynomials of stars, canonical algebras and extended canonical
//! algebras, together with their representing polynomials `q`.
//!
//! Notation: `v_n = (T^n - 1)/(T - 1)` with `v_0 = 0`, `u_n` the path
//! characteristic polynomial with `u_{-1} = 0`. For a weight type
//! `(p_1, ..., p_t)`:
//!
//! * star `[p]`: `(T+1) prod v_{p_i} - T sum_i v_{p_i - 1} prod_{j != i} v_{p_j}`
//! * canonical `(p)`: `(T-1)^2 prod v_{p_i}`
//! * extended canonical: `(T+1) canonical - T star`
//! * `q = T (T^2 - 4) prod u_{p_i - 1} - chi_[p]`, so that
//!   `extended(T^2) = q*(T)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::chebyshev;
use crate::cyclotomic::v;
use crate::error::{Error, Result};
use crate::graphs::{self, Multigraph};
use crate::polyring::IntPoly;
use crate::symmetry::symmetrize;

/// Weights `p_1 <= ... <= p_t`, `t >= 2`, every `p_i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "Vec<u32>")]
pub struct WeightType {
    weights: Vec<u32>,
}

impl WeightType {
    pub fn new(mut weights: Vec<u32>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidWeights(format!("need at least two weights, got {}", weights.len())));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights("weights must be >= 1".into()));
        }
        weights.sort_unstable();
        Ok(WeightType { weights })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn t(&self) -> usize {
        self.weights.len()
    }

    pub fn sum(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// Vertices of the canonical algebra: `2 + sum (p_i - 1)`.
    pub fn vertex_count(&self) -> usize {
        2 + self.weights.iter().map(|&p| p as usize - 1).sum::<usize>()
    }

    pub fn last(&self) -> u32 {
        *self.weights.last().expect("t >= 2")
    }

    /// The type with the last (largest) weight changed by `delta`.
    pub fn with_last_shifted(&self, delta: i32) -> Result<WeightType> {
        let mut w = self.weights.clone();
        let last = w.last_mut().expect("t >= 2");
        let shifted = *last as i64 + delta as i64;
        if shifted < 1 {
            return Err(Error::InvalidWeights(format!("weight {shifted} is below 1")));
        }
        *last = shifted as u32;
        WeightType::new(w)
    }

    /// The type with weight number `i` (in sorted order) changed by `delta`.
    pub fn with_shifted(&self, i: usize, delta: i32) -> Result<WeightType> {
        let mut w = self.weights.clone();
        let shifted = w[i] as i64 + delta as i64;
        if shifted < 1 {
            return Err(Error::InvalidWeights(format!("weight {shifted} is below 1")));
        }
        w[i] = shifted as u32;
        WeightType::new(w)
    }

    pub fn star_graph(&self) -> Multigraph {
        graphs::star(&self.weights).expect("valid weights")
    }
}

impl TryFrom<Vec<u32>> for WeightType {
    type Error = Error;

    fn try_from(w: Vec<u32>) -> Result<Self> {
        WeightType::new(w)
    }
}

impl Serialize for WeightType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(serializer)
    }
}

impl FromStr for WeightType {
    type Err = Error;

    /// Accepts `2 3 7`, `2,3,7` or `(2,3,7)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let weights = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad weight {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        WeightType::new(weights)
    }
}

impl fmt::Display for WeightType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn v_(n: u32) -> IntPoly {
    if n == 0 {
        IntPoly::zero()
    } else {
        v(n as u64).expect("n >= 1")
    }
}

/// `u_n` with `u_{-1} = 0`.
fn u_(n: i64) -> IntPoly {
    if n < 0 {
        IntPoly::zero()
    } else {
        chebyshev::u(n as usize)
    }
}

/// `(1 + T) f_B - T f_C`: Coxeter polynomial of a one-point extension.
pub fn one_point_reduction(f_b: &IntPoly, f_c: &IntPoly) -> IntPoly {
    let t_plus_one = IntPoly::from_i64s(&[1, 1]);
    &(&t_plus_one * f_b) - &f_c.shift(1)
}

/// `a prod_i x_i - b sum_i y_i prod_{j != i} x_j` over the arms.
fn arm_combination(x: &[IntPoly], y: &[IntPoly], a: &IntPoly, b: &IntPoly) -> IntPoly {
    let full: IntPoly = x.iter().cloned().product();
    let mut sum = IntPoly::zero();
    for (i, yi) in y.iter().enumerate().take(x.len()) {
        let others: IntPoly = x.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).product();
        sum = &sum + &(yi * &others);
    }
    &(a * &full) - &(b * &sum)
}

pub fn star_coxeter(w: &WeightType) -> IntPoly {
    let x: Vec<IntPoly> = w.weights.iter().map(|&p| v_(p)).collect();
    let y: Vec<IntPoly> = w.weights.iter().map(|&p| v_(p - 1)).collect();
    arm_combination(&x, &y, &IntPoly::from_i64s(&[1, 1]), &IntPoly::t())
}

pub fn canonical_coxeter(w: &WeightType) -> IntPoly {
    let arms: IntPoly = w.weights.iter().map(|&p| v_(p)).product();
    &IntPoly::from_i64s(&[1, -2, 1]) * &arms
}

pub fn extended_canonical_coxeter(w: &WeightType) -> IntPoly {
    one_point_reduction(&canonical_coxeter(w), &star_coxeter(w))
}

/// Characteristic polynomial of the star `[p]` in closed form:
/// `T prod u_{p_i - 1} - sum_i u_{p_i - 2} prod_{j != i} u_{p_j - 1}`.
pub fn star_charpoly(w: &WeightType) -> IntPoly {
    let x: Vec<IntPoly> = w.weights.iter().map(|&p| u_(p as i64 - 1)).collect();
    let y: Vec<IntPoly> = w.weights.iter().map(|&p| u_(p as i64 - 2)).collect();
    arm_combination(&x, &y, &IntPoly::t(), &IntPoly::one())
}

pub fn q_poly(w: &WeightType) -> IntPoly {
    let chi_k2 = IntPoly::from_i64s(&[-4, 0, 1]);
    let arms: IntPoly = w.weights.iter().map(|&p| u_(p as i64 - 1)).product();
    &(&chi_k2.shift(1) * &arms) - &star_charpoly(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterBundle {
    pub weight_type: WeightType,
    pub star_poly: IntPoly,
    pub canonical_poly: IntPoly,
    pub extended_poly: IntPoly,
    pub q_poly: IntPoly,
}

impl CoxeterBundle {
    pub fn new(w: &WeightType) -> Self {
        let star_poly = star_coxeter(w);
        let canonical_poly = canonical_coxeter(w);
        let extended_poly = one_point_reduction(&canonical_poly, &star_poly);
        CoxeterBundle { weight_type: w.clone(), star_poly, canonical_poly, extended_poly, q_poly: q_poly(w) }
    }
}

/// The three representation identities for `w`:
/// star against the star graph, canonical against `K_2` and the arm paths,
/// extended canonical against `q`.
pub fn verify_representation(w: &WeightType) -> bool {
    let bundle = CoxeterBundle::new(w);
    let sym = |p: &IntPoly| symmetrize(p).expect("nonzero");
    let chi_star = graphs::tree_charpoly(&w.star_graph()).expect("stars are trees");
    let star_ok = bundle.star_poly.compose_t2() == sym(&chi_star);
    let arms: IntPoly = w.weights.iter().map(|&p| sym(&chebyshev::u(p as usize - 1))).product();
    let canonical_ok = bundle.canonical_poly.compose_t2() == &sym(&IntPoly::from_i64s(&[-4, 0, 1])) * &arms;
    let extended_ok = bundle.extended_poly.compose_t2() == sym(&bundle.q_poly);
    star_ok && canonical_ok && extended_ok
}

/// Checks, for the ladder `w- = (.., p_t - 1)`, `w`, `w+ = (.., p_t + 1)`:
///
/// * `q(w+) = T q(w) - q(w-)`
/// * `ext(w+) = (T + 1) ext(w) - T ext(w-)`, the same recursion after
///   substituting `T + 1/T` and clearing denominators.
pub fn verify_recursion(w: &WeightType) -> Result<bool> {
    if w.last() < 2 {
        return Err(Error::RecursionNeedsWeightTwo);
    }
    let (lower, upper) = (w.with_last_shifted(-1)?, w.with_last_shifted(1)?);
    let q_ok = q_poly(&upper) == &q_poly(w).shift(1) - &q_poly(&lower);
    let f = extended_canonical_coxeter;
    let f_ok = f(&upper) == one_point_reduction(&f(w), &f(&lower));
    Ok(q_ok && f_ok)
}

/// Coxeter polynomial of a tree quiver by leaf deletion.
pub fn tree_coxeter(g: &Multigraph) -> Result<IntPoly> {
    if !g.is_simple_tree() {
        return Err(Error::NotATree);
    }
    graphs::leaf_recursion(g, &IntPoly::from_i64s(&[1, 1]), one_point_reduction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::is_self_reciprocal;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn w(s: &str) -> WeightType {
        s.parse().unwrap()
    }

    #[test]
    fn weight_type_parsing() {
        assert_eq!(w("7 3 2").weights(), &[2, 3, 7]);
        assert_eq!(w("2,3,7"), w("(2, 3, 7)"));
        assert_eq!(w("2 3 7").to_string(), "(2,3,7)");
        assert_eq!(w("2 2 2 2").vertex_count(), 6);
        assert!("2".parse::<WeightType>().is_err());
        assert!("2 0".parse::<WeightType>().is_err());
        assert!("2 x".parse::<WeightType>().is_err());
        assert_eq!(serde_json::to_string(&w("3 2")).unwrap(), "[2,3]");
        assert!(serde_json::from_str::<WeightType>("[1]").is_err());
    }

    #[test]
    fn reduction_builds_the_v_ladder() {
        assert_eq!(one_point_reduction(&p(&[1, 1]), &IntPoly::one()), p(&[1, 1, 1]));
        assert_eq!(one_point_reduction(&IntPoly::one(), &IntPoly::zero()), p(&[1, 1]));
        let (mut b, mut c) = (IntPoly::one(), IntPoly::zero());
        for n in 1..30u64 {
            (b, c) = (one_point_reduction(&b, &c), b);
            assert_eq!(b, v(n + 1).unwrap());
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_coxeter(&w("2 2")), v(4).unwrap());
        assert_eq!(star_coxeter(&w("2 3 7")), p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
        for t in 2..6 {
            assert_eq!(star_coxeter(&WeightType::new(vec![1; t]).unwrap()), p(&[1, 1]));
        }
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_coxeter(&w("2 2")), p(&[-1, 0, 1]).pow(2));
        assert_eq!(canonical_coxeter(&w("1 1")), p(&[1, -2, 1]));
        let c = canonical_coxeter(&w("2 3 6"));
        assert_eq!(c.degree(), Some(10));
        assert_eq!(c, &p(&[1, -2, 1]) * &(&v(2).unwrap() * &(&v(3).unwrap() * &v(6).unwrap())));
    }

    #[test]
    fn extended_examples() {
        assert_eq!(extended_canonical_coxeter(&w("2 2")), &p(&[1, 1]) * &p(&[1, -1, -2, -1, 1]));
        assert_eq!(extended_canonical_coxeter(&w("2 3 6")), canonical_coxeter(&w("2 3 7")));
    }

    #[test]
    fn tubular_types_are_derived_canonical() {
        for (ext, can) in [("2 2 2 2", "2 2 2 3"), ("3 3 3", "3 3 4"), ("2 4 4", "2 4 5"), ("2 3 6", "2 3 7")]
        {
            assert_eq!(extended_canonical_coxeter(&w(ext)), canonical_coxeter(&w(can)), "{ext}");
        }
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_poly(&w("1 1 1")), p(&[0, -5, 0, 1]));
        for t in 2..7 {
            assert_eq!(q_poly(&WeightType::new(vec![1; t]).unwrap()), p(&[0, -5, 0, 1]));
        }
        // T (T^2 - 4) u_1 u_1 - chi_[2,2] = T^5 - 4T^3 - (T^3 - 2T)
        assert_eq!(q_poly(&w("2 2")), p(&[0, 2, 0, -5, 0, 1]));
        assert_eq!(
            extended_canonical_coxeter(&w("2 2")).compose_t2(),
            symmetrize(&q_poly(&w("2 2"))).unwrap()
        );
    }

    #[test]
    fn star_charpoly_matches_graph() {
        for s in ["2 2", "2 3 7", "1 1 2", "3 3 3 3", "2 2 2 2 4", "1 4"] {
            let wt = w(s);
            assert_eq!(star_charpoly(&wt), graphs::charpoly(&wt.star_graph()), "{s}");
        }
        assert_eq!(star_charpoly(&w("1 1 1 2")), p(&[-1, 0, 1]));
    }

    #[test]
    fn representation_examples() {
        assert!(verify_representation(&w("2 2")));
        assert!(verify_representation(&w("2 3 7")));
        assert!(verify_representation(&w("1 1")));
    }

    #[test]
    fn recursion_examples() {
        assert!(verify_recursion(&w("2 2")).unwrap());
        assert!(verify_recursion(&w("1 1 2")).unwrap());
        assert_eq!(verify_recursion(&w("1 1")), Err(Error::RecursionNeedsWeightTwo));
    }

    #[test]
    fn recursion_without_the_extra_terms_fails() {
        // ext(w+) = T ext(w) - ext(w-) does not hold; the (T+1), T weights
        // are forced by substituting T + 1/T into the q recursion.
        let f = extended_canonical_coxeter;
        for s in ["2 2", "1 1 2", "2 3 7"] {
            let wt = w(s);
            let (lo, hi) = (wt.with_last_shifted(-1).unwrap(), wt.with_last_shifted(1).unwrap());
            assert_ne!(f(&hi), &f(&wt).shift(1) - &f(&lo), "{s}");
        }
        assert_eq!(f(&w("1 1 1")), p(&[1, -2, -2, 1]));
        assert_eq!(f(&w("1 1 2")), p(&[1, -1, -3, -1, 1]));
        assert_eq!(f(&w("1 1 3")), p(&[1, -1, -2, -2, -1, 1]));
    }

    #[test]
    fn tree_coxeter_examples() {
        for n in 0..40 {
            assert_eq!(tree_coxeter(&graphs::path(n + 1)).unwrap(), v(n as u64 + 2).unwrap());
        }
        let wt = w("2 3 7");
        assert_eq!(tree_coxeter(&wt.star_graph()).unwrap(), star_coxeter(&wt));
        assert_eq!(tree_coxeter(&graphs::path(1)).unwrap(), p(&[1, 1]));
        assert_eq!(tree_coxeter(&graphs::kronecker_graph(2).unwrap()), Err(Error::NotATree));
    }

    #[test]
    fn acampo_identity_on_small_trees() {
        for n in 1..=10 {
            for t in graphs::unlabeled_trees(n) {
                let lhs = tree_coxeter(&t).unwrap().compose_t2();
                assert_eq!(lhs, symmetrize(&graphs::charpoly(&t)).unwrap());
            }
        }
    }

    fn weight_type() -> impl Strategy<Value = WeightType> {
        prop::collection::vec(1u32..=7, 2..=5).prop_map(|v| WeightType::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn bundle_invariants(wt in weight_type()) {
            let b = CoxeterBundle::new(&wt);
            for poly in [&b.star_poly, &b.canonical_poly, &b.extended_poly] {
                prop_assert!(is_self_reciprocal(poly).unwrap());
                prop_assert!(poly.is_monic());
            }
            prop_assert_eq!(b.extended_poly.compose_t2(), symmetrize(&b.q_poly).unwrap());
            prop_assert_eq!(b.extended_poly.degree().unwrap(), 1 + b.canonical_poly.degree().unwrap());
            prop_assert_eq!(b.extended_poly.degree(), b.q_poly.degree());
            prop_assert_eq!(b.canonical_poly.degree(), Some(wt.vertex_count()));
            prop_assert_eq!(b.star_poly.degree(), Some(wt.vertex_count() - 1));
            prop_assert!(is_self_reciprocal(&symmetrize(&b.q_poly).unwrap()).unwrap());
            prop_assert_eq!(&tree_coxeter(&wt.star_graph()).unwrap(), &b.star_poly);
        }

        #[test]
        fn weight_order_is_irrelevant(v in prop::collection::vec(1u32..=7, 2..=5), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut shuffled = v.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            // formulas evaluated on the unsorted order directly
            let raw = WeightType { weights: shuffled };
            let sorted = WeightType::new(v).unwrap();
            prop_assert_eq!(star_coxeter(&raw), star_coxeter(&sorted));
            prop_assert_eq!(canonical_coxeter(&raw), canonical_coxeter(&sorted));
            prop_assert_eq!(q_poly(&raw), q_poly(&sorted));
        }

        #[test]
        fn q_has_parity(wt in weight_type()) {
            let q = q_poly(&wt);
            let reflected = q.reflect();
            prop_assert!(reflected == q || reflected == -q);
        }

        #[test]
        fn recursions_hold(wt in weight_type()) {
            prop_assume!(wt.last() >= 2);
            prop_assert!(verify_recursion(&wt).unwrap());
            prop_assert!(verify_representation(&wt));
        }

        #[test]
        fn ladder_gcd_is_constant(wt in weight_type()) {
            // gcd(q(w), q(w+)) = gcd(q(w-), q(w)) by the three-term recursion
            prop_assume!(wt.last() >= 2);
            let lower = q_poly(&wt.with_last_shifted(-1).unwrap());
            let mid = q_poly(&wt);
            let upper = q_poly(&wt.with_last_shifted(1).unwrap());
            prop_assert_eq!(mid.gcd(&upper).unwrap(), lower.gcd(&mid).unwrap());
        }
    }
}
