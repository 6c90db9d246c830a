//! Exact fractional domatic number of small graphs, by linear programming
//! over all minimal dominating sets, and the scan for values between 2 and
//! 7/3.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::config::Configuration;
use crate::domination::{enumerate_minimal_dominating_sets, DominationError, ENUMERATION_LIMIT};
use crate::formats::encode_graph6;
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::simplex::{self, LpError};

pub const DEFAULT_LIMIT: usize = 12;
pub const HARD_LIMIT: usize = ENUMERATION_LIMIT;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("limit {0} exceeds the hard cap of {HARD_LIMIT}")]
    LimitAboveCap(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// `FD(G)` with an optimal weighting of minimal dominating sets and the
/// matching vertex prices from the dual.
#[derive(Debug, Clone)]
pub struct FdValue {
    pub value: Rational,
    /// Minimal dominating sets with positive weight.
    pub sets: Vec<VertexSet>,
    pub weights: Vec<Rational>,
    /// Dual optimum: every minimal dominating set has total price at least
    /// 1 and the prices sum to `value`.
    pub prices: Vec<Rational>,
    /// The weighting with denominators cleared.
    pub configuration: Configuration,
}

impl FdValue {
    /// Re-checks both certificates on `g`: the scaled configuration
    /// verifies with value `self.value`, and the prices are feasible for
    /// the dual with the same total.
    pub fn certifies(&self, g: &Graph) -> bool {
        if !self.configuration.is_valid() || self.configuration.value() != self.value {
            return false;
        }
        if self.prices.len() != g.n() || self.prices.iter().any(Signed::is_negative) {
            return false;
        }
        let total: Rational = self.prices.iter().sum();
        let Ok(all) = enumerate_minimal_dominating_sets(g) else {
            return false;
        };
        total == self.value
            && all.iter().all(|d| d.iter().map(|v| &self.prices[v]).sum::<Rational>() >= Rational::one())
    }
}

pub fn exact_fd(g: &Graph) -> Result<FdValue, OracleError> {
    exact_fd_with_limit(g, DEFAULT_LIMIT)
}

pub fn exact_fd_with_limit(g: &Graph, limit: usize) -> Result<FdValue, OracleError> {
    if limit > HARD_LIMIT {
        return Err(OracleError::LimitAboveCap(limit));
    }
    let n = g.n();
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    let columns = enumerate_minimal_dominating_sets(g)?;
    fd_over_columns(g, &columns)
}

/// The LP optimum restricted to the given dominating sets.
pub fn fd_over_columns(g: &Graph, columns: &[VertexSet]) -> Result<FdValue, OracleError> {
    let n = g.n();
    let one = Rational::one();
    let a: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            columns
                .iter()
                .map(|d| if d.contains(v) { one.clone() } else { Rational::zero() })
                .collect()
        })
        .collect();
    let c = vec![one.clone(); columns.len()];
    let b = vec![one; n];
    let sol = simplex::maximize(&c, &a, &b)?;

    let mut sets = Vec::new();
    let mut weights = Vec::new();
    for (d, w) in columns.iter().zip(&sol.primal) {
        if w.is_positive() {
            sets.push(d.clone());
            weights.push(w.clone());
        }
    }
    let scale = weights
        .iter()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let mut scaled = Vec::new();
    for (d, w) in sets.iter().zip(&weights) {
        let copies = (w * Rational::from_integer(scale.clone()))
            .to_integer()
            .to_usize()
            .expect("multiplicity fits in usize");
        scaled.extend(std::iter::repeat_n(d.clone(), copies));
    }
    let bound = scale.to_usize().expect("denominator fits in usize");
    let configuration = Configuration::new(Arc::new(g.clone()), scaled, bound);
    Ok(FdValue {
        value: sol.value,
        sets,
        weights,
        prices: sol.dual,
        configuration,
    })
}

/// `(FD(g1), FD(g2), FD(g1 + g2))` for the disjoint union.
pub fn fd_of_disjoint_union_check(g1: &Graph, g2: &Graph) -> Result<(Rational, Rational, Rational), OracleError> {
    let a = exact_fd(g1)?.value;
    let b = exact_fd(g2)?.value;
    let u = exact_fd(&g1.disjoint_union(g2))?.value;
    Ok((a, b, u))
}

/// The conjectured gap: no graph should have `2 < FD < 7/3`.
pub fn conjecture_threshold() -> Rational {
    rational::ratio(7, 3)
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    /// Position in the input stream.
    pub index: usize,
    pub graph6: String,
    pub fd_num: String,
    pub fd_den: String,
    pub flagged: bool,
}

#[derive(Debug, Clone, Default)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub scanned: usize,
    pub skipped: usize,
    /// Smallest value strictly above 2 seen, with the stream positions
    /// attaining it.
    pub min_above_two: Option<Rational>,
    pub min_witnesses: Vec<usize>,
    /// Positions with `2 < FD < 7/3`.
    pub flagged: Vec<usize>,
    /// Flagged positions whose primal and dual certificates re-verify.
    pub confirmed: Vec<usize>,
}

impl ScanReport {
    pub fn footer(&self) -> serde_json::Value {
        serde_json::json!({
            "summary": true,
            "scanned": self.scanned,
            "skipped": self.skipped,
            "min_above_two": self.min_above_two.as_ref().map(rational::format),
            "min_witnesses": self.min_witnesses,
            "flagged": self.flagged,
            "confirmed": self.confirmed,
        })
    }
}

/// Computes `FD` for every graph within `limit` vertices, in parallel, and
/// flags any value in the open interval `(2, 7/3)`.
pub fn conjecture_scan<I: IntoIterator<Item = Graph>>(graphs: I, limit: usize) -> ScanReport {
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let two = Rational::from_integer(2.into());
    let threshold = conjecture_threshold();
    let results: Vec<Option<(Rational, bool)>> = graphs
        .par_iter()
        .map(|g| {
            let fd = exact_fd_with_limit(g, limit).ok()?;
            let flagged = fd.value > two && fd.value < threshold;
            let confirmed = flagged && fd.certifies(g);
            Some((fd.value, confirmed))
        })
        .collect();

    let mut report = ScanReport::default();
    for (index, (g, result)) in graphs.iter().zip(results).enumerate() {
        let Some((value, confirmed)) = result else {
            report.skipped += 1;
            continue;
        };
        report.scanned += 1;
        let flagged = value > two && value < threshold;
        if flagged {
            report.flagged.push(index);
            if confirmed {
                report.confirmed.push(index);
            }
        }
        if value > two {
            match &report.min_above_two {
                Some(m) if value > *m => {}
                Some(m) if value == *m => report.min_witnesses.push(index),
                _ => {
                    report.min_above_two = Some(value.clone());
                    report.min_witnesses = vec![index];
                }
            }
        }
        report.records.push(ScanRecord {
            index,
            graph6: encode_graph6(g),
            fd_num: value.numer().to_string(),
            fd_den: value.denom().to_string(),
            flagged,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_dominating;
    use crate::rational::{int, ratio};

    /// LP over every dominating set, not only the minimal ones.
    fn fd_over_all_dominating(g: &Graph) -> Rational {
        let n = g.n();
        let all: Vec<VertexSet> = (0u32..1 << n)
            .map(|m| VertexSet::from_members(n, (0..n).filter(|&i| m >> i & 1 == 1)))
            .filter(|d| is_dominating(g, d))
            .collect();
        fd_over_columns(g, &all).unwrap().value
    }

    #[test]
    fn small_values() {
        assert_eq!(exact_fd(&Graph::cycle(4)).unwrap().value, int(2));
        assert_eq!(exact_fd(&Graph::cycle(5)).unwrap().value, ratio(5, 2));
        assert_eq!(exact_fd(&Graph::empty(1)).unwrap().value, int(1));
        assert_eq!(exact_fd(&Graph::cycle(3)).unwrap().value, int(3));
        assert_eq!(exact_fd(&Graph::complete(5)).unwrap().value, int(5));
    }

    #[test]
    fn witnesses_certify() {
        for g in [Graph::cycle(7), Graph::complete_bipartite(2, 3), Graph::path(5)] {
            let fd = exact_fd(&g).unwrap();
            assert!(fd.certifies(&g));
            assert_eq!(fd.weights.iter().sum::<Rational>(), fd.value);
        }
    }

    #[test]
    fn limits() {
        assert_eq!(
            exact_fd(&Graph::cycle(13)).unwrap_err(),
            OracleError::TooLarge { n: 13, limit: 12 }
        );
        assert_eq!(exact_fd_with_limit(&Graph::cycle(5), 17).unwrap_err(), OracleError::LimitAboveCap(17));
        assert_eq!(exact_fd(&Graph::empty(0)).unwrap_err(), OracleError::EmptyGraph);
        assert_eq!(exact_fd_with_limit(&Graph::cycle(13), 13).unwrap().value, ratio(39, 15));
    }

    #[test]
    fn minimal_columns_suffice() {
        for g in crate::generate::labeled_graphs(5).unwrap().step_by(7) {
            assert_eq!(exact_fd(&g).unwrap().value, fd_over_all_dominating(&g), "{g:?}");
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let (a, b, u) = fd_of_disjoint_union_check(&Graph::cycle(3), &Graph::cycle(4)).unwrap();
        assert_eq!((a, b, u), (int(3), int(2), int(2)));
        let (a, b, u) = fd_of_disjoint_union_check(&Graph::cycle(5), &Graph::cycle(5)).unwrap();
        assert_eq!((a, b, u), (ratio(5, 2), ratio(5, 2), ratio(5, 2)));
        let (a, b, u) = fd_of_disjoint_union_check(&Graph::cycle(3), &Graph::cycle(7)).unwrap();
        assert_eq!((a, b, u), (int(3), ratio(7, 3), ratio(7, 3)));
    }

    #[test]
    fn scan_cycles() {
        let report = conjecture_scan((3..=12).map(Graph::cycle), DEFAULT_LIMIT);
        assert_eq!(report.scanned, 10);
        assert!(report.flagged.is_empty());
        assert_eq!(report.min_above_two, Some(ratio(7, 3)));
        // C7 sits at index 4
        assert_eq!(report.min_witnesses, vec![4]);
    }

    #[test]
    fn scan_empty_and_skipped() {
        let report = conjecture_scan(Vec::new(), DEFAULT_LIMIT);
        assert_eq!((report.scanned, report.skipped), (0, 0));
        assert!(report.records.is_empty() && report.min_above_two.is_none());
        let report = conjecture_scan(vec![Graph::cycle(14), Graph::cycle(3)], DEFAULT_LIMIT);
        assert_eq!((report.scanned, report.skipped), (1, 1));
        assert_eq!(report.records[0].index, 1);
    }
}
