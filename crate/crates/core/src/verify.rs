//! Bounded verification suites and the weight-type sweep.
//!
//! Everything here is evaluated in parallel and reassembled in grid order,
//! so reports and first counterexamples do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chebyshev;
use crate::coxeter::{
    extended_canonical_coxeter, q_poly, tree_coxeter, verify_recursion, verify_representation, WeightType,
};
use crate::cyclotomic::{
    cyclo, extract_cyclotomic_part, is_cyclotomic_product, represent_unit_disk, totient,
};
use crate::error::{Error, Result};
use crate::graphs;
use crate::polyring::IntPoly;
use crate::spectra::{
    classify_self_reciprocal_with_tol, interlacing_check, sign_alternation_check, unit_circle_census,
    RootLocationReport,
};
use crate::symmetry::symmetrize;

/// Non-decreasing weight types with `2 <= t <= max_t`, weights in
/// `1..=max_weight` and weight sum at most `max_sum`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub max_sum: u32,
    pub max_t: Option<usize>,
    pub max_weight: Option<u32>,
}

impl GridSpec {
    pub fn new(max_sum: u32) -> Self {
        GridSpec { max_sum, max_t: None, max_weight: None }
    }

    pub fn contains(&self, w: &WeightType) -> bool {
        w.sum() <= self.max_sum
            && self.max_t.is_none_or(|t| w.t() <= t)
            && self.max_weight.is_none_or(|m| w.last() <= m)
    }
}

/// The grid, sorted by weight sum and then lexicographically.
pub fn weight_grid(spec: &GridSpec) -> Vec<WeightType> {
    fn extend(prefix: &mut Vec<u32>, remaining: u32, spec: &GridSpec, out: &mut Vec<WeightType>) {
        if prefix.len() >= 2 {
            out.push(WeightType::new(prefix.clone()).expect("valid by construction"));
        }
        if spec.max_t.is_some_and(|t| prefix.len() >= t) {
            return;
        }
        let from = prefix.last().copied().unwrap_or(1);
        let to = spec.max_weight.map_or(remaining, |m| m.min(remaining));
        for p in from..=to {
            prefix.push(p);
            extend(prefix, remaining - p, spec, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), spec.max_sum, spec, &mut out);
    out.sort_by(|a, b| (a.sum(), a.weights()).cmp(&(b.sum(), b.weights())));
    out
}

/// Weight-1 arms contribute nothing to any of the polynomials, so every type
/// shares its values with the type obtained by dropping them (keeping two
/// weights).
fn reduced(w: &WeightType) -> WeightType {
    let mut rest: Vec<u32> = w.weights().iter().copied().filter(|&p| p > 1).collect();
    while rest.len() < 2 {
        rest.insert(0, 1);
    }
    WeightType::new(rest).expect("valid")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Representation,
    Recursion,
    Acampo,
    Interlacing,
    Chebyshev,
    Kronecker,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Representation,
        Suite::Recursion,
        Suite::Acampo,
        Suite::Interlacing,
        Suite::Chebyshev,
        Suite::Kronecker,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Representation => "representation",
            Suite::Recursion => "recursion",
            Suite::Acampo => "acampo",
            Suite::Interlacing => "interlacing",
            Suite::Chebyshev => "chebyshev",
            Suite::Kronecker => "kronecker",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyBounds {
    pub grid: GridSpec,
    pub max_vertices: usize,
    pub max_n: usize,
    pub samples: usize,
    pub max_degree: usize,
    pub seed: u64,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            grid: GridSpec { max_sum: 24, max_t: Some(6), max_weight: Some(8) },
            max_vertices: 10,
            max_n: 200,
            samples: 500,
            max_degree: 40,
            seed: 20_240_601,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checked: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl SuiteOutcome {
    fn from_checks(suite: Suite, checks: Vec<Option<String>>) -> Self {
        let checked = checks.len();
        let counterexample = checks.into_iter().flatten().next();
        SuiteOutcome {
            suite: suite.name().to_string(),
            checked,
            passed: counterexample.is_none(),
            counterexample,
        }
    }
}

fn failure(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}

/// Both parts of the interlacing statement for the ladder through `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LadderCheck {
    /// Roots of `q(w)` separate consecutive roots of `q(w+)`.
    pub interlacing: bool,
    /// `q(w+) q(w-) < 0` at every real root of `q(w)`.
    pub sign_alternation: bool,
}

pub fn ladder_check(w: &WeightType) -> Result<LadderCheck> {
    if w.last() < 2 {
        return Err(Error::RecursionNeedsWeightTwo);
    }
    let lower = q_poly(&w.with_last_shifted(-1)?);
    let mid = q_poly(w);
    let upper = q_poly(&w.with_last_shifted(1)?);
    Ok(LadderCheck {
        interlacing: interlacing_check(&mid, &upper)?,
        sign_alternation: sign_alternation_check(&lower, &mid, &upper)?,
    })
}

/// A random product of cyclotomic polynomials `phi_n`, `n >= 2`, of
/// degree exactly `degree`; returns the indices and the product.
pub fn random_cyclotomic_product(rng: &mut impl Rng, degree: usize) -> (Vec<u64>, IntPoly) {
    let pool: Vec<u64> =
        (2..=(2 * degree * degree).max(2) as u64).filter(|&n| totient(n) as usize <= degree).collect();
    let mut remaining = degree;
    let mut indices = Vec::new();
    while remaining > 0 {
        let fits: Vec<u64> = pool.iter().copied().filter(|&n| totient(n) as usize <= remaining).collect();
        let n = *fits.choose(rng).expect("phi_2 always fits");
        remaining -= totient(n) as usize;
        indices.push(n);
    }
    indices.sort_unstable();
    let product = indices.iter().map(|&n| cyclo(n).expect("n >= 2")).product();
    (indices, product)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KroneckerStats {
    pub samples: usize,
    pub round_trips: usize,
    pub perturbed_non_cyclotomic: usize,
    pub first_failure: Option<String>,
}

impl KroneckerStats {
    pub fn perturbed_fraction(&self) -> f64 {
        self.perturbed_non_cyclotomic as f64 / self.samples.max(1) as f64
    }
}

/// Round trip through [`represent_unit_disk`] on random cyclotomic
/// products, plus how often `p + T^k` (`k < deg p`) keeps a non-constant
/// remainder after cyclotomic extraction.
pub fn kronecker_round_trip(samples: usize, max_degree: usize, seed: u64) -> KroneckerStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Vec<u64>, IntPoly, usize)> = (0..samples)
        .map(|_| {
            let degree = rng.gen_range(1..=max_degree);
            let (idx, p) = random_cyclotomic_product(&mut rng, degree);
            let k = rng.gen_range(0..degree);
            (idx, p, k)
        })
        .collect();
    let results: Vec<(Option<String>, bool)> = cases
        .par_iter()
        .map(|(idx, p, k)| {
            let round_trip = is_cyclotomic_product(p).unwrap_or(false)
                && represent_unit_disk(p)
                    .map(|q| p.compose_t2() == symmetrize(&q).expect("nonzero"))
                    .unwrap_or(false);
            let perturbed = p + &IntPoly::monomial(1.into(), *k);
            let non_cyclotomic =
                !extract_cyclotomic_part(&perturbed).expect("nonzero").remainder.is_constant();
            (failure(round_trip, || format!("cyclotomic product {idx:?}")), non_cyclotomic)
        })
        .collect();
    KroneckerStats {
        samples,
        round_trips: results.iter().filter(|r| r.0.is_none()).count(),
        perturbed_non_cyclotomic: results.iter().filter(|r| r.1).count(),
        first_failure: results.iter().find_map(|r| r.0.clone()),
    }
}

/// Minimum fraction of perturbed products that must leave a non-trivial
/// remainder.
pub const KRONECKER_PERTURBATION_THRESHOLD: f64 = 0.95;

pub fn run_suite(suite: Suite, bounds: &VerifyBounds) -> SuiteOutcome {
    let grid = weight_grid(&bounds.grid);
    let checks: Vec<Option<String>> = match suite {
        Suite::Representation => grid
            .par_iter()
            .map(|w| failure(verify_representation(w), || format!("representation fails for {w}")))
            .collect(),
        Suite::Recursion => grid
            .par_iter()
            .filter(|w| w.last() >= 2)
            .map(|w| {
                let ok = verify_recursion(w).expect("p_t >= 2");
                failure(ok, || format!("recursion fails for {w}"))
            })
            .collect(),
        Suite::Interlacing => grid
            .par_iter()
            .filter(|w| w.last() >= 2)
            .map(|w| {
                let c = ladder_check(w).expect("p_t >= 2");
                if !c.interlacing {
                    Some(format!("interlacing fails for {w}"))
                } else if !c.sign_alternation {
                    Some(format!("sign alternation fails for {w}"))
                } else {
                    None
                }
            })
            .collect(),
        Suite::Acampo => (1..=bounds.max_vertices)
            .flat_map(graphs::unlabeled_trees)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|t| {
                let lhs = tree_coxeter(t).expect("tree").compose_t2();
                let rhs = symmetrize(&graphs::charpoly(t)).expect("nonzero");
                failure(lhs == rhs, || format!("tree {}", serde_json::to_string(t).expect("serializable")))
            })
            .collect(),
        Suite::Chebyshev => {
            let small = bounds.max_n.min(100);
            let mut checks: Vec<Option<String>> = (0..=bounds.max_n)
                .into_par_iter()
                .map(|n| failure(chebyshev::verify_v_u_identity(n), || format!("v/u identity n = {n}")))
                .collect();
            checks.extend(
                (1..=small)
                    .into_par_iter()
                    .map(|n| {
                        let ok = graphs::tree_charpoly(&graphs::path(n)).ok() == Some(chebyshev::u(n));
                        failure(ok, || format!("path charpoly n = {n}"))
                    })
                    .collect::<Vec<_>>(),
            );
            checks.extend(
                (2..=small as u64)
                    .into_par_iter()
                    .map(|n| {
                        let f = desymmetrized_phi(n);
                        let ok = chebyshev::u(n as usize - 1)
                            .divrem(&f)
                            .map(|(_, r)| r.is_zero())
                            .unwrap_or(false);
                        failure(ok, || format!("phi_{n} representing factor does not divide u_{}", n - 1))
                    })
                    .collect::<Vec<_>>(),
            );
            checks
        }
        Suite::Kronecker => {
            let stats = kronecker_round_trip(bounds.samples, bounds.max_degree, bounds.seed);
            let mut checks = vec![None; stats.samples];
            if let Some(f) = stats.first_failure.clone() {
                checks[0] = Some(format!("round trip fails for {f}"));
            } else if stats.perturbed_fraction() < KRONECKER_PERTURBATION_THRESHOLD {
                checks[0] = Some(format!(
                    "only {}/{} perturbations left a non-constant remainder",
                    stats.perturbed_non_cyclotomic, stats.samples
                ));
            }
            checks
        }
    };
    SuiteOutcome::from_checks(suite, checks)
}

fn desymmetrized_phi(n: u64) -> IntPoly {
    crate::symmetry::desymmetrize(&cyclo(n).expect("n >= 1").compose_t2()).expect("palindromic")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub weights: WeightType,
    #[serde(flatten)]
    pub report: RootLocationReport,
    pub representation_ok: bool,
    pub recursion_ok: Option<bool>,
    pub monotone_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub types: usize,
    pub rho_one_count: usize,
    pub max_off_circle: usize,
    pub off_circle_even_and_at_most_four: bool,
    pub all_representation: bool,
    pub all_recursion: bool,
    pub all_monotone: bool,
    /// Types without weight 1 that have all roots on the circle while every
    /// single-weight increment (inside the grid) does not.
    pub rho_one_maximal: Vec<WeightType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub grid: GridSpec,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

struct KeyValues {
    report: RootLocationReport,
    representation_ok: bool,
    recursion_ok: Option<bool>,
}

/// Classifies the extended canonical Coxeter polynomial of every grid type.
pub fn run_sweep(spec: &GridSpec, tol: &num_rational::BigRational) -> Result<SweepReport> {
    let grid = weight_grid(spec);
    let keys: Vec<WeightType> = grid.iter().map(reduced).collect::<BTreeSet<_>>().into_iter().collect();
    let values: Vec<KeyValues> = keys
        .par_iter()
        .map(|k| {
            Ok(KeyValues {
                report: classify_self_reciprocal_with_tol(&extended_canonical_coxeter(k), tol)?,
                representation_ok: verify_representation(k),
                recursion_ok: (k.last() >= 2).then(|| verify_recursion(k)).transpose()?,
            })
        })
        .collect::<Result<_>>()?;
    let table: BTreeMap<WeightType, KeyValues> = keys.into_iter().zip(values).collect();
    let rho_one = |w: &WeightType| -> Result<bool> {
        match table.get(&reduced(w)) {
            Some(v) => Ok(v.report.rho_is_one),
            None => Ok(unit_circle_census(&extended_canonical_coxeter(w))?.1 == 0),
        }
    };
    let mut rows = Vec::with_capacity(grid.len());
    for w in &grid {
        let v = &table[&reduced(w)];
        let mut monotone_ok = true;
        if v.report.rho_is_one {
            for i in 0..w.t() {
                if w.weights()[i] >= 2 && !rho_one(&w.with_shifted(i, -1)?)? {
                    monotone_ok = false;
                }
            }
        }
        rows.push(SweepRow {
            weights: w.clone(),
            report: v.report.clone(),
            representation_ok: v.representation_ok,
            recursion_ok: v.recursion_ok,
            monotone_ok,
        });
    }
    let mut rho_one_maximal = Vec::new();
    for row in rows.iter().filter(|r| r.report.rho_is_one && !r.weights.weights().contains(&1)) {
        let w = &row.weights;
        let ups: Vec<WeightType> = (0..w.t()).map(|i| w.with_shifted(i, 1)).collect::<Result<_>>()?;
        if ups.iter().all(|u| spec.contains(u)) && ups.iter().all(|u| !rho_one(u).unwrap_or(true)) {
            rho_one_maximal.push(w.clone());
        }
    }
    let summary = SweepSummary {
        types: rows.len(),
        rho_one_count: rows.iter().filter(|r| r.report.rho_is_one).count(),
        max_off_circle: rows.iter().map(|r| r.report.off_circle).max().unwrap_or(0),
        off_circle_even_and_at_most_four: rows
            .iter()
            .all(|r| r.report.off_circle % 2 == 0 && r.report.off_circle <= 4),
        all_representation: rows.iter().all(|r| r.representation_ok),
        all_recursion: rows.iter().all(|r| r.recursion_ok != Some(false)),
        all_monotone: rows.iter().all(|r| r.monotone_ok),
        rho_one_maximal,
    };
    Ok(SweepReport { grid: *spec, rows, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeightType {
        s.parse().unwrap()
    }

    /// Number of partitions of `n` into at least two parts, by the
    /// pentagonal-number recurrence.
    fn partitions_with_two_parts(n: usize) -> usize {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        (p[n] - 1) as usize
    }

    #[test]
    fn grid_counts_match_partition_numbers() {
        let grid = weight_grid(&GridSpec::new(15));
        for s in 2..=15u32 {
            let count = grid.iter().filter(|x| x.sum() == s).count();
            assert_eq!(count, partitions_with_two_parts(s as usize), "sum {s}");
        }
        let sums: Vec<u32> = grid.iter().map(|x| x.sum()).collect();
        assert!(sums.windows(2).all(|p| p[0] <= p[1]));
    }

    #[test]
    fn grid_respects_bounds() {
        let spec = GridSpec { max_sum: 24, max_t: Some(6), max_weight: Some(8) };
        let grid = weight_grid(&spec);
        assert!(grid.iter().all(|x| spec.contains(x)));
        assert!(grid.contains(&w("8 8 8")));
        assert!(!grid.contains(&w("1 9")));
        assert!(!grid.contains(&w("1 1 1 1 1 1 1")));
    }

    #[test]
    fn reduction_keeps_polynomials() {
        for s in ["1 1 2 3", "1 1 1", "1 4", "1 1 1 1 5 5"] {
            let x = w(s);
            assert_eq!(extended_canonical_coxeter(&x), extended_canonical_coxeter(&reduced(&x)));
            assert_eq!(q_poly(&x), q_poly(&reduced(&x)));
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn random_products_have_requested_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for degree in 1..=40 {
            let (idx, p) = random_cyclotomic_product(&mut rng, degree);
            assert_eq!(p.degree(), Some(degree));
            assert!(idx.iter().all(|&n| n >= 2));
        }
    }

    #[test]
    fn small_sweep_summary() {
        let report = run_sweep(&GridSpec::new(12), &crate::spectra::default_tolerance()).unwrap();
        assert!(report.summary.max_off_circle <= 4);
        // (3,3,3) has rho = 1 but (2,3,3) does not
        let row = report.rows.iter().find(|r| r.weights == w("3 3 3")).unwrap();
        assert!(row.report.rho_is_one && !row.monotone_ok);
        assert!(!report.summary.all_monotone);
        assert_eq!(report.summary.types, report.rows.len());
        let row = report.rows.iter().find(|r| r.weights == w("3 3 3 3")).unwrap();
        assert!(row.report.rho_is_one);
        let row = report.rows.iter().find(|r| r.weights == w("1 1 1")).unwrap();
        assert_eq!(row.report.off_circle, 2);
    }
}
