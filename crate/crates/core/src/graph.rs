//! Simple undirected graphs over dense vertex ids and fixed-width vertex sets.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no vertices")]
    Empty,
}

/// A subset of `0..universe`, stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::new(universe);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut set = Self::new(universe);
        set.insert(v);
        set
    }

    /// Builds a set from members. Panics if a member is outside the universe.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut set = Self::new(universe);
        for v in members {
            set.insert(v);
        }
        set
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let fresh = !self.contains(v);
        self.words[v / WORD] |= 1 << (v % WORD);
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.contains(v);
        if present {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
        present
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The same members over a larger universe.
    pub fn widen(&self, universe: usize) -> VertexSet {
        assert!(universe >= self.universe);
        let mut out = self.clone();
        out.universe = universe;
        out.words.resize(universe.div_ceil(WORD), 0);
        out
    }

    /// Relabels every member `v` to `map[v]` inside a universe of size `universe`.
    pub fn relabel(&self, map: &[usize], universe: usize) -> VertexSet {
        VertexSet::from_members(universe, self.iter().map(|v| map[v]))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Maps the vertices of an induced subgraph back to the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn to_parent(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    pub fn from_parent(&self, v: usize) -> Option<usize> {
        self.from_parent.get(v).copied().flatten()
    }

    /// `parent_ids()[v]` is the parent id of subgraph vertex `v`.
    pub fn parent_ids(&self) -> &[usize] {
        &self.to_parent
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &edges).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edge_list(n, &edges).expect("valid complete graph")
    }

    /// `K_{p,q}` with parts `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..p {
            for v in p..p + q {
                edges.push((u, v));
            }
        }
        Self::from_edge_list(p + q, &edges).expect("valid complete bipartite graph")
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edge_list(shift + other.n(), &edges).expect("valid union")
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        set
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n())
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::Empty)
    }

    /// Lowest-id vertex of minimum degree.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n()).min_by_key(|&v| (self.degree(v), v))
    }

    /// Components ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut components = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut queue = VecDeque::from([root]);
            seen.insert(root);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for w in self.adjacency[u].iter() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// The subgraph induced by `keep`, re-indexed in ascending order of the kept ids.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, VertexMap) {
        let to_parent = keep.to_vec();
        let mut from_parent = vec![None; self.n()];
        for (new, &old) in to_parent.iter().enumerate() {
            from_parent[old] = Some(new);
        }
        let mut sub = Graph::empty(to_parent.len());
        for (new, &old) in to_parent.iter().enumerate() {
            for w in self.adjacency[old].iter() {
                if let Some(nw) = from_parent[w] {
                    sub.adjacency[new].insert(nw);
                }
            }
        }
        (
            sub,
            VertexMap {
                to_parent,
                from_parent,
            },
        )
    }

    /// Returns `n` if the graph is a connected 2-regular graph on `n >= 3` vertices.
    pub fn recognize_cycle(&self) -> Option<usize> {
        let n = self.n();
        if n < 3 || (0..n).any(|v| self.degree(v) != 2) || !self.is_connected() {
            return None;
        }
        Some(n)
    }

    /// Recognizes `K_{2,p}` with `p >= 2`, returning `(A, B)` with `|A| = 2`.
    ///
    /// Checks the degree profile on the given labels: the lowest vertex of
    /// degree `n - 2` anchors part `A`, its neighbourhood is `B`, and the one
    /// remaining vertex must see exactly `B`.
    pub fn recognize_k2p(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        if n < 4 {
            return None;
        }
        let a1 = (0..n).find(|&v| self.degree(v) == n - 2)?;
        let part_b = self.adjacency[a1].clone();
        let mut rest = self.vertices().difference(&part_b);
        rest.remove(a1);
        if rest.len() != 1 {
            return None;
        }
        let a2 = rest.first()?;
        if self.adjacency[a2] != part_b {
            return None;
        }
        let part_a = VertexSet::from_members(n, [a1, a2]);
        if part_b.iter().any(|b| self.adjacency[b] != part_a) {
            return None;
        }
        Some((part_a, part_b))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
