//! Exhaustive search over linear maps `f(s^a r^b) = x a + y b` from `D_2n`
//! to `Z_2n`, testing whether an order-dividing bijection `(x, y)` can have
//! an order-dividing bijective swap `(y, x)`.
//!
//! Coefficients are taken mod `2n`, since images only depend on residues.
//! Counterexamples are listed once per unordered pair, smaller coefficient
//! first: `{x, y}` with `x < y` where both `(x, y)` and `(y, x)` are valid.
//! Valid pairs with `x = y` are listed separately as `self_swapped`, and
//! `n = 1` reports are flagged `degenerate` (only `b = 0` exists there, so
//! `y` is immaterial).

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::maps::{ComparisonMode, LinearMapSpec, VerificationReport};

/// Default largest `n` searched.
pub const DEFAULT_SEARCH_BOUND: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoefficientPair {
    #[serde(skip)]
    pub n: u64,
    pub x: u64,
    pub y: u64,
}

impl CoefficientPair {
    pub fn new(n: u64, x: i64, y: i64) -> Self {
        let m = 2 * n;
        CoefficientPair {
            n,
            x: crate::arith::reduce_signed(x, m),
            y: crate::arith::reduce_signed(y, m),
        }
    }

    pub fn swapped(self) -> Self {
        CoefficientPair {
            n: self.n,
            x: self.y,
            y: self.x,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: u64,
    pub degenerate: bool,
    pub valid_pairs: Vec<CoefficientPair>,
    pub counterexamples: Vec<CoefficientPair>,
    pub self_swapped: Vec<CoefficientPair>,
    pub conjecture_holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub n_checked: u64,
    pub n_holding: u64,
    pub n_with_counterexamples: u64,
    pub total_valid_pairs: u64,
    pub total_counterexamples: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_min: u64,
    pub n_max: u64,
    pub summary: SweepSummary,
    pub reports: Vec<ConjectureReport>,
}

impl SweepReport {
    pub fn conjecture_holds(&self) -> bool {
        self.summary.n_with_counterexamples == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub bound: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            bound: DEFAULT_SEARCH_BOUND,
            jobs: None,
        }
    }
}

/// Element orders of `D_2n` and `Z_2n`, shared by every pair tested for `n`.
struct OrderTables {
    n: u64,
    rotation: Vec<u64>,
    cyclic: Vec<u64>,
}

impl OrderTables {
    fn new(n: u64) -> Self {
        let m = 2 * n;
        OrderTables {
            n,
            rotation: (0..n).map(|b| n / gcd(n, b)).collect(),
            cyclic: (0..m).map(|v| m / gcd(m, v)).collect(),
        }
    }

    /// Same verdict as verifying `LinearMapSpec(D_2n, x, y)` under
    /// `Divides`, from table lookups.
    fn is_valid(&self, x: u64, y: u64, seen: &mut [bool]) -> bool {
        let m = 2 * self.n;
        seen.iter_mut().for_each(|s| *s = false);
        for a in 0..2u64 {
            let mut image = (x * a) % m;
            for b in 0..self.n {
                let order = if a == 1 { 2 } else { self.rotation[b as usize] };
                if seen[image as usize] || !self.cyclic[image as usize].is_multiple_of(order) {
                    return false;
                }
                seen[image as usize] = true;
                image = (image + y) % m;
            }
        }
        true
    }
}

fn check_n(n: u64, bound: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::precondition("n must be at least 1"));
    }
    Error::check_bound("n", n, bound)
}

/// All `(x, y)` in `[0, 2n)^2` whose map is an order-dividing bijection,
/// sorted lexicographically.
pub fn enumerate_valid_pairs(n: u64) -> Result<Vec<CoefficientPair>> {
    enumerate_valid_pairs_bounded(n, DEFAULT_SEARCH_BOUND)
}

pub fn enumerate_valid_pairs_bounded(n: u64, bound: u64) -> Result<Vec<CoefficientPair>> {
    check_n(n, bound)?;
    Ok(valid_pairs(&OrderTables::new(n)))
}

fn valid_pairs(tables: &OrderTables) -> Vec<CoefficientPair> {
    let n = tables.n;
    let m = 2 * n;
    (0..m)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut seen = vec![false; m as usize];
            (0..m)
                .filter(|&y| tables.is_valid(x, y, &mut seen))
                .map(|y| CoefficientPair { n, x, y })
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn test_conjecture(n: u64) -> Result<ConjectureReport> {
    test_conjecture_bounded(n, DEFAULT_SEARCH_BOUND)
}

pub fn test_conjecture_bounded(n: u64, bound: u64) -> Result<ConjectureReport> {
    check_n(n, bound)?;
    Ok(report_for(n))
}

fn report_for(n: u64) -> ConjectureReport {
    let valid_pairs = valid_pairs(&OrderTables::new(n));
    let is_valid = |p: &CoefficientPair| valid_pairs.binary_search(p).is_ok();
    let counterexamples: Vec<CoefficientPair> = valid_pairs
        .iter()
        .filter(|p| p.x < p.y && is_valid(&p.swapped()))
        .copied()
        .collect();
    let self_swapped: Vec<CoefficientPair> = valid_pairs.iter().filter(|p| p.x == p.y).copied().collect();
    ConjectureReport {
        n,
        degenerate: n == 1,
        conjecture_holds: counterexamples.is_empty(),
        valid_pairs,
        counterexamples,
        self_swapped,
    }
}

/// One report per `n` in `n_min..=n_max`, ordered by `n`. Output does not
/// depend on the number of workers.
pub fn sweep_conjecture(n_min: u64, n_max: u64, options: &SearchOptions) -> Result<SweepReport> {
    if n_min < 2 {
        return Err(Error::precondition("sweeps start at n >= 2"));
    }
    if n_min > n_max {
        return Err(Error::precondition(format!("n-min {n_min} exceeds n-max {n_max}")));
    }
    Error::check_bound("n", n_max, options.bound)?;
    let run = || -> Vec<ConjectureReport> { (n_min..=n_max).into_par_iter().map(report_for).collect() };
    let reports = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::precondition(format!("cannot start {jobs} workers: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(SweepReport {
        n_min,
        n_max,
        summary: summarize(&reports),
        reports,
    })
}

pub fn summarize(reports: &[ConjectureReport]) -> SweepSummary {
    let mut s = SweepSummary::default();
    for r in reports.iter().filter(|r| !r.degenerate) {
        s.n_checked += 1;
        if r.conjecture_holds {
            s.n_holding += 1;
        } else {
            s.n_with_counterexamples += 1;
        }
        s.total_valid_pairs += r.valid_pairs.len() as u64;
        s.total_counterexamples += r.counterexamples.len() as u64;
    }
    s
}

/// Full verifier report for one coefficient pair, including the first
/// failing row when the pair is invalid.
pub fn explain_pair(pair: CoefficientPair) -> Result<VerificationReport> {
    let map = LinearMapSpec::new(GroupSpec::dihedral(pair.n)?, pair.x as i64, pair.y as i64)?;
    map.verify(ComparisonMode::Divides)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(n: u64, x: u64, y: u64) -> CoefficientPair {
        CoefficientPair { n, x, y }
    }

    #[test]
    fn n3_valid_pairs() {
        let v = enumerate_valid_pairs(3).unwrap();
        assert!(v.contains(&pair(3, 1, 2)));
        assert!(v.contains(&pair(3, 5, 2)));
        assert!(v.contains(&pair(3, 1, 4)));
        assert!(!v.contains(&pair(3, 2, 1)));
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn n3_holds_and_n2_fails() {
        let r3 = test_conjecture(3).unwrap();
        assert!(r3.conjecture_holds && r3.counterexamples.is_empty());
        let r2 = test_conjecture(2).unwrap();
        assert!(!r2.conjecture_holds);
        // 2a + 3b and 3a + 2b on D_4 -> Z_4 hit 0,3,2,1 and 0,2,3,1
        assert_eq!(r2.counterexamples, [pair(2, 1, 2), pair(2, 2, 3)]);
    }

    #[test]
    fn n1_is_degenerate() {
        let r = test_conjecture(1).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.valid_pairs, [pair(1, 1, 0), pair(1, 1, 1)]);
        assert_eq!(r.self_swapped, [pair(1, 1, 1)]);
        assert_eq!(summarize(&[r]), SweepSummary::default());
    }

    #[test]
    fn table_lookup_agrees_with_verifier() {
        for n in 1..=6 {
            let valid = enumerate_valid_pairs(n).unwrap();
            for x in 0..2 * n {
                for y in 0..2 * n {
                    let p = pair(n, x, y);
                    let report = explain_pair(p).unwrap();
                    assert_eq!(valid.contains(&p), report.verdict, "n={n} x={x} y={y}");
                    if !report.verdict {
                        assert!(report.failure.is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn bounds_and_preconditions() {
        assert!(matches!(test_conjecture(0), Err(Error::Precondition(_))));
        assert!(matches!(
            enumerate_valid_pairs(513),
            Err(Error::Resource { bound: 512, .. })
        ));
        let opts = SearchOptions::default();
        assert!(sweep_conjecture(1, 3, &opts).is_err());
        assert!(sweep_conjecture(5, 3, &opts).is_err());
        assert!(matches!(sweep_conjecture(2, 600, &opts), Err(Error::Resource { .. })));
    }

    #[test]
    fn sweep_single() {
        let s = sweep_conjecture(2, 2, &SearchOptions::default()).unwrap();
        assert_eq!(s.reports, [test_conjecture(2).unwrap()]);
        assert_eq!(s.summary.n_with_counterexamples, 1);
        assert!(!s.conjecture_holds());
    }

    #[test]
    fn coefficient_reduction() {
        assert_eq!(CoefficientPair::new(3, -1, 8), pair(3, 5, 2));
        assert_eq!(pair(3, 1, 2).swapped(), pair(3, 2, 1));
    }
}
