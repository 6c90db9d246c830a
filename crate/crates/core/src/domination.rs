//! Dominating-set predicates, enumeration of minimal dominating sets, and
//! the disjoint dominating pair built from a maximal independent set.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by [`enumerate_minimal_dominating_sets`].
pub const ENUMERATION_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("graph has {n} vertices, enumeration limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
}

/// Vertices dominated by `d`: `d` together with all neighbours of `d`.
pub fn dominated_by(g: &Graph, d: &VertexSet) -> VertexSet {
    let mut covered = d.clone();
    for v in d.iter() {
        covered.union_with(g.neighbors(v));
    }
    covered
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    dominated_by(g, d).is_full()
}

/// First vertex not dominated by `d`, if any.
pub fn first_undominated(g: &Graph, d: &VertexSet) -> Option<usize> {
    dominated_by(g, d).complement().first()
}

pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> bool {
    if !is_dominating(g, d) {
        return false;
    }
    d.iter().all(|v| {
        let mut smaller = d.clone();
        smaller.remove(v);
        !is_dominating(g, &smaller)
    })
}

/// Every minimal dominating set of `g`, each once, in ascending member order.
///
/// Branches on the lowest undominated vertex, choosing its dominator from the
/// closed neighbourhood. A partial set in which some member has lost every
/// private neighbour can never grow into a minimal set and is pruned.
pub fn enumerate_minimal_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>, DominationError> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(DominationError::TooLarge {
            n: g.n(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect();
    let mut found = BTreeSet::new();
    let mut current = VertexSet::new(g.n());
    let covered = VertexSet::new(g.n());
    branch(&closed, &mut current, &covered, &mut found);
    Ok(found
        .into_iter()
        .filter(|d| is_minimal_dominating(g, d))
        .collect())
}

fn branch(
    closed: &[VertexSet],
    current: &mut VertexSet,
    covered: &VertexSet,
    found: &mut BTreeSet<VertexSet>,
) {
    let Some(target) = covered.complement().first() else {
        found.insert(current.clone());
        return;
    };
    for u in closed[target].iter() {
        if current.contains(u) {
            continue;
        }
        current.insert(u);
        if every_member_has_private(closed, current) {
            let next = covered.union(&closed[u]);
            branch(closed, current, &next, found);
        }
        current.remove(u);
    }
}

fn every_member_has_private(closed: &[VertexSet], set: &VertexSet) -> bool {
    set.iter().all(|w| {
        closed[w]
            .iter()
            .any(|z| closed[z].intersection(set).len() == 1)
    })
}

/// Greedy maximal independent set, scanning vertices in ascending id order.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut chosen = VertexSet::new(g.n());
    let mut blocked = VertexSet::new(g.n());
    for v in 0..g.n() {
        if !blocked.contains(v) {
            chosen.insert(v);
            blocked.union_with(&g.closed_neighborhood(v));
        }
    }
    chosen
}

/// A maximal independent set `D` and its complement, both dominating when
/// `g` has no isolated vertex.
pub fn disjoint_dominating_pair(g: &Graph) -> Result<(VertexSet, VertexSet), DominationError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(DominationError::IsolatedVertex(v));
    }
    let d = greedy_maximal_independent_set(g);
    let rest = d.complement();
    Ok((d, rest))
}
