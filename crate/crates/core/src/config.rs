//! `(k, s)`-configurations: multisets of `k` dominating sets in which every
//! vertex lies in at most `s` members, together with the algebra used to
//! build certificates (additivity, normalization to `(2k+1, k)`, doubling,
//! and `(x, y)`-nice surgery).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::domination::{self, is_dominating, DominationError};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};

/// The first constraint a configuration breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoSets,
    ZeroBound,
    WrongUniverse { index: usize },
    NotDominating { index: usize, vertex: usize },
    OverCovered { vertex: usize, coverage: usize, bound: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoSets => write!(f, "configuration has no sets"),
            Violation::ZeroBound => write!(f, "coverage bound must be positive"),
            Violation::WrongUniverse { index } => {
                write!(f, "set {index} is over a different vertex universe")
            }
            Violation::NotDominating { index, vertex } => {
                write!(f, "set {index} does not dominate vertex {vertex}")
            }
            Violation::OverCovered {
                vertex,
                coverage,
                bound,
            } => write!(f, "vertex {vertex} covered {coverage} > {bound}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("invalid configuration: {0}")]
    Invalid(Violation),
    #[error("configurations are bound to different graphs")]
    GraphMismatch,
    #[error("configuration value {k}/{s} is not above 2")]
    ValueNotAboveTwo { k: usize, s: usize },
    #[error("target {target} is below the coverage bound {bound}")]
    TargetBelowBound { target: usize, bound: usize },
    #[error("expected a (2r+1, r)-configuration, got ({k}, {s})")]
    NotOddShape { k: usize, s: usize },
    #[error("x and y must be distinct, both are {0}")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("extra set is not dominating")]
    ExtraNotDominating,
    #[error("minimum degree below 2; V - {{x, y}} need not dominate")]
    MinDegreeBelowTwo,
    #[error("padding needs {needed} sets outside x and y, only {available} exist")]
    PaddingInfeasible { needed: usize, available: usize },
    #[error(transparent)]
    Domination(#[from] DominationError),
}

/// A multiset of dominating sets bound to one graph, with a declared
/// coverage bound `s`. Equality is multiset equality.
#[derive(Clone)]
pub struct Configuration {
    graph: Arc<Graph>,
    sets: Vec<VertexSet>,
    bound: usize,
}

/// Indices of a configuration's members split by membership of `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairSplit {
    /// `x` in, `y` out.
    pub d_x: Vec<usize>,
    /// `x` out, `y` in.
    pub d_y: Vec<usize>,
    pub d_xy: Vec<usize>,
    pub d_neither: Vec<usize>,
}

impl Configuration {
    /// Builds a configuration without checking it; see [`Configuration::verify`].
    pub fn new(graph: Arc<Graph>, sets: Vec<VertexSet>, bound: usize) -> Self {
        Self { graph, sets, bound }
    }

    /// Builds a configuration and rejects it unless it verifies.
    pub fn verified(
        graph: Arc<Graph>,
        sets: Vec<VertexSet>,
        bound: usize,
    ) -> Result<Self, ConfigError> {
        let c = Self::new(graph, sets, bound);
        c.check()?;
        Ok(c)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn k(&self) -> usize {
        self.sets.len()
    }

    pub fn s(&self) -> usize {
        self.bound
    }

    pub fn coverage(&self, v: usize) -> usize {
        self.sets.iter().filter(|d| d.contains(v)).count()
    }

    pub fn max_coverage(&self) -> usize {
        (0..self.graph.n())
            .map(|v| self.coverage(v))
            .max()
            .unwrap_or(0)
    }

    pub fn is_odd_shape(&self) -> bool {
        self.k() == 2 * self.bound + 1
    }

    /// Checks every invariant and reports the first violation.
    pub fn verify(&self) -> Result<(), Violation> {
        if self.sets.is_empty() {
            return Err(Violation::NoSets);
        }
        if self.bound == 0 {
            return Err(Violation::ZeroBound);
        }
        let n = self.graph.n();
        for (index, d) in self.sets.iter().enumerate() {
            if d.universe() != n {
                return Err(Violation::WrongUniverse { index });
            }
            if let Some(vertex) = domination::first_undominated(&self.graph, d) {
                return Err(Violation::NotDominating { index, vertex });
            }
        }
        for vertex in 0..n {
            let coverage = self.coverage(vertex);
            if coverage > self.bound {
                return Err(Violation::OverCovered {
                    vertex,
                    coverage,
                    bound: self.bound,
                });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }

    fn check(&self) -> Result<(), ConfigError> {
        self.verify().map_err(ConfigError::Invalid)
    }

    /// `k / s` in lowest terms.
    pub fn value(&self) -> Rational {
        rational::ratio(self.k(), self.bound)
    }

    /// Multiset union with parameters `(k + p, s + q)`.
    pub fn combine(&self, other: &Configuration) -> Result<Configuration, ConfigError> {
        if !self.same_graph(other) {
            return Err(ConfigError::GraphMismatch);
        }
        let mut sets = self.sets.clone();
        sets.extend(other.sets.iter().cloned());
        Configuration::verified(self.graph.clone(), sets, self.bound + other.bound)
    }

    fn same_graph(&self, other: &Configuration) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph
    }

    /// Turns a configuration of value above 2 into a
    /// `(2 target + 1, target)`-configuration: surplus sets beyond `2s + 1`
    /// are dropped from the end, then copies of a disjoint dominating pair
    /// are added.
    pub fn normalize_to_odd(&self, target: usize) -> Result<Configuration, ConfigError> {
        self.check()?;
        let (k, s) = (self.k(), self.bound);
        if k <= 2 * s {
            return Err(ConfigError::ValueNotAboveTwo { k, s });
        }
        if target < s {
            return Err(ConfigError::TargetBelowBound { target, bound: s });
        }
        let mut sets = self.sets[..2 * s + 1].to_vec();
        if target > s {
            let (d, rest) = domination::disjoint_dominating_pair(&self.graph)?;
            for _ in s..target {
                sets.push(d.clone());
                sets.push(rest.clone());
            }
        }
        Configuration::verified(self.graph.clone(), sets, target)
    }

    /// Drops surplus sets so the configuration has shape `(2s + 1, s)`.
    pub fn trim_to_odd(&self) -> Result<Configuration, ConfigError> {
        self.normalize_to_odd(self.bound)
    }

    pub fn split_by_pair(&self, x: usize, y: usize) -> Result<PairSplit, ConfigError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(ConfigError::SameVertex(x));
        }
        let mut split = PairSplit::default();
        for (i, d) in self.sets.iter().enumerate() {
            match (d.contains(x), d.contains(y)) {
                (true, false) => split.d_x.push(i),
                (false, true) => split.d_y.push(i),
                (true, true) => split.d_xy.push(i),
                (false, false) => split.d_neither.push(i),
            }
        }
        Ok(split)
    }

    fn check_vertex(&self, v: usize) -> Result<(), ConfigError> {
        let n = self.graph.n();
        if v >= n {
            return Err(ConfigError::VertexOutOfRange { vertex: v, n });
        }
        Ok(())
    }

    fn require_odd_shape(&self) -> Result<(), ConfigError> {
        if !self.is_odd_shape() {
            return Err(ConfigError::NotOddShape {
                k: self.k(),
                s: self.bound,
            });
        }
        Ok(())
    }

    /// Whether `x` and `y` each lie in exactly `r` members and the parts
    /// `d_x`, `d_y`, `d_xy` are all nonempty.
    pub fn is_nice(&self, x: usize, y: usize) -> Result<bool, ConfigError> {
        self.require_odd_shape()?;
        let split = self.split_by_pair(x, y)?;
        let r = self.bound;
        Ok(self.coverage(x) == r
            && self.coverage(y) == r
            && !split.d_x.is_empty()
            && !split.d_y.is_empty()
            && !split.d_xy.is_empty())
    }

    /// `extra` followed by two copies of every member: a `(2r+1, r)`
    /// configuration with `r = 2k + 1`.
    pub fn double_plus_set(&self, extra: &VertexSet) -> Result<Configuration, ConfigError> {
        self.require_odd_shape()?;
        if extra.universe() != self.graph.n() || !is_dominating(&self.graph, extra) {
            return Err(ConfigError::ExtraNotDominating);
        }
        let mut sets = Vec::with_capacity(2 * self.k() + 1);
        sets.push(extra.clone());
        for d in &self.sets {
            sets.push(d.clone());
            sets.push(d.clone());
        }
        Configuration::verified(self.graph.clone(), sets, self.k())
    }

    /// An `(x, y)`-nice `(2r+1, r)`-configuration with `r = k` when
    /// `1 <= |d_xy| < k`, and `r = 2k + 1` otherwise.
    pub fn make_nice(&self, x: usize, y: usize) -> Result<Configuration, ConfigError> {
        self.require_odd_shape()?;
        self.check()?;
        let k = self.bound;
        let split = self.split_by_pair(x, y)?;
        let base = if split.d_xy.is_empty() {
            self.double_plus_set(&self.graph.vertices())?
        } else if split.d_xy.len() >= k {
            if self.graph.min_degree().unwrap_or(0) < 2 {
                return Err(ConfigError::MinDegreeBelowTwo);
            }
            let mut rest = self.graph.vertices();
            rest.remove(x);
            rest.remove(y);
            self.double_plus_set(&rest)?
        } else {
            self.clone()
        };
        base.pad_pair(x, y)
    }

    /// Adds `x` to the lowest-index sets avoiding both `x` and `y`, then `y`
    /// to the next ones, until each lies in exactly `s` sets.
    fn pad_pair(&self, x: usize, y: usize) -> Result<Configuration, ConfigError> {
        let r = self.bound;
        let split = self.split_by_pair(x, y)?;
        let need_x = r - split.d_x.len() - split.d_xy.len();
        let need_y = r - split.d_y.len() - split.d_xy.len();
        if need_x + need_y > split.d_neither.len() {
            return Err(ConfigError::PaddingInfeasible {
                needed: need_x + need_y,
                available: split.d_neither.len(),
            });
        }
        let mut sets = self.sets.clone();
        for &i in &split.d_neither[..need_x] {
            sets[i].insert(x);
        }
        for &i in &split.d_neither[need_x..need_x + need_y] {
            sets[i].insert(y);
        }
        Configuration::verified(self.graph.clone(), sets, r)
    }

    /// Adds `v` to the lowest-index members lacking it until it lies in
    /// `target` sets. Members only grow, so domination is preserved.
    pub fn pad_vertex(&self, v: usize, target: usize) -> Result<Configuration, ConfigError> {
        self.check_vertex(v)?;
        let mut sets = self.sets.clone();
        let mut missing = target.saturating_sub(self.coverage(v));
        for d in sets.iter_mut() {
            if missing == 0 {
                break;
            }
            if !d.contains(v) {
                d.insert(v);
                missing -= 1;
            }
        }
        Configuration::verified(self.graph.clone(), sets, self.bound)
    }

    /// The same sets bound to another graph on the same vertex ids.
    pub fn rebind(&self, graph: Arc<Graph>) -> Result<Configuration, ConfigError> {
        if graph.n() != self.graph.n() {
            return Err(ConfigError::GraphMismatch);
        }
        Configuration::verified(graph, self.sets.clone(), self.bound)
    }

    /// Relabels vertex `v` as `map[v]` inside `target`. The result is not
    /// verified: a configuration of a subgraph is generally not one of the
    /// host graph.
    pub fn embed(&self, target: Arc<Graph>, map: &[usize]) -> Configuration {
        let n = target.n();
        let sets = self.sets.iter().map(|d| d.relabel(map, n)).collect();
        Configuration::new(target, sets, self.bound)
    }

    /// Members sorted so that those containing `v` come first, otherwise
    /// keeping their order.
    pub fn sorted_by_membership(&self, v: usize) -> Configuration {
        let mut sets = self.sets.clone();
        sets.sort_by_key(|d| !d.contains(v));
        Configuration::new(self.graph.clone(), sets, self.bound)
    }

    pub fn into_sets(self) -> Vec<VertexSet> {
        self.sets
    }
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        if self.bound != other.bound || self.k() != other.k() || !self.same_graph(other) {
            return false;
        }
        let mut a = self.sets.clone();
        let mut b = other.sets.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for Configuration {}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Configuration")
            .field("k", &self.k())
            .field("s", &self.bound)
            .field("sets", &self.sets)
            .finish()
    }
}
