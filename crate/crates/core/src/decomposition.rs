//! Cut vertices, 2-connectivity, open ear decompositions and the dumbbell
//! split of connected graphs with minimum degree at least two.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has minimum degree below 2")]
    MinDegreeBelowTwo,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("invalid start cycle: {0}")]
    InvalidCycle(String),
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(usize),
    #[error("component is a cycle")]
    ComponentIsCycle,
    #[error("binary path closes on vertex {0}")]
    ClosedLoop(usize),
    #[error("invalid decomposition: {0}")]
    Invalid(String),
}

/// A sequence of distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    /// Vertices strictly between the two ends.
    pub fn internal(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn is_path_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new(g.n());
        self.vertices.iter().all(|&v| v < g.n() && seen.insert(v))
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// A path all of whose internal vertices have degree 2 in `g`.
    pub fn is_binary_in(&self, g: &Graph) -> bool {
        self.is_path_in(g) && self.internal().iter().all(|&v| g.degree(v) == 2)
    }
}

/// A start cycle followed by open ears.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    pub first_cycle: Vec<usize>,
    pub ears: Vec<Path>,
}

impl EarDecomposition {
    /// Checks that the cycle and ears partition the edges of `g` and that
    /// each ear meets earlier material exactly at its two distinct ends.
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        let bad = |m: String| Err(DecompositionError::Invalid(m));
        check_cycle(g, &self.first_cycle)?;
        let n = g.n();
        let mut used: Vec<VertexSet> = vec![VertexSet::new(n); n];
        let mut mark = |u: usize, v: usize| -> bool {
            let fresh = used[u].insert(v);
            used[v].insert(u);
            fresh
        };
        let c = &self.first_cycle;
        for i in 0..c.len() {
            mark(c[i], c[(i + 1) % c.len()]);
        }
        let mut seen = VertexSet::from_members(n, c.iter().copied());
        for (i, ear) in self.ears.iter().enumerate() {
            if ear.len() < 2 || !ear.is_path_in(g) {
                return bad(format!("ear {i} is not a path"));
            }
            if !seen.contains(ear.first()) || !seen.contains(ear.last()) {
                return bad(format!("ear {i} does not end on earlier ears"));
            }
            if ear.internal().iter().any(|&v| seen.contains(v)) {
                return bad(format!("ear {i} revisits earlier vertices"));
            }
            for (u, v) in ear.edges() {
                if !mark(u, v) {
                    return bad(format!("edge ({u}, {v}) used twice"));
                }
            }
            for &v in ear.internal() {
                seen.insert(v);
            }
        }
        let covered: usize = used.iter().map(VertexSet::len).sum::<usize>() / 2;
        if covered != g.edge_count() || !seen.is_full() {
            return bad("ears do not cover the graph".into());
        }
        Ok(())
    }
}

/// The two plates and the handle of a dumbbell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dumbbell {
    pub plate_1: VertexSet,
    pub plate_2: VertexSet,
    /// Starts in `plate_1` and ends in `plate_2`.
    pub handle: Path,
}

impl Dumbbell {
    /// The same dumbbell with the plates swapped.
    pub fn reversed(&self) -> Dumbbell {
        Dumbbell {
            plate_1: self.plate_2.clone(),
            plate_2: self.plate_1.clone(),
            handle: self.handle.reversed(),
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        let bad = |m: &str| Err(DecompositionError::Invalid(m.to_string()));
        let h = &self.handle;
        if h.is_empty() || !h.is_binary_in(g) {
            return bad("handle is not a binary path");
        }
        let handle_set = VertexSet::from_members(g.n(), h.vertices().iter().copied());
        if self.plate_1.intersection(&handle_set).to_vec() != [h.first()]
            || self.plate_2.intersection(&handle_set).to_vec() != [h.last()]
        {
            return bad("each plate must meet the handle exactly at one end");
        }
        let shared = self.plate_1.intersection(&self.plate_2);
        if (h.len() >= 2 && !shared.is_empty()) || (h.len() == 1 && shared.len() != 1) {
            return bad("plates overlap incorrectly");
        }
        for plate in [&self.plate_1, &self.plate_2] {
            let (sub, _) = g.induced_subgraph(plate);
            if !sub.is_connected() || sub.min_degree().unwrap_or(0) < 2 {
                return bad("plate is not connected with minimum degree 2");
            }
        }
        if !self.plate_1.union(&self.plate_2).union(&handle_set).is_full() {
            return bad("plates and handle miss a vertex");
        }
        let handle_edge = |u: usize, v: usize| h.edges().any(|(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
        for (u, v) in g.edges() {
            let inside = |p: &VertexSet| p.contains(u) && p.contains(v);
            if !inside(&self.plate_1) && !inside(&self.plate_2) && !handle_edge(u, v) {
                return bad("edge outside plates and handle");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "variant")]
pub enum StructureReport {
    TwoConnected,
    Dumbbell(Dumbbell),
}

impl StructureReport {
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionError> {
        match self {
            StructureReport::TwoConnected if is_two_connected(g) => Ok(()),
            StructureReport::TwoConnected => Err(DecompositionError::NotTwoConnected),
            StructureReport::Dumbbell(d) => d.validate(g),
        }
    }
}

/// Articulation vertices of a connected graph (iterative low-link search).
pub fn cut_vertices(g: &Graph) -> Result<VertexSet, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cuts = VertexSet::new(n);
    let mut timer = 0;
    let root = 0;
    let mut root_children = 0;
    // (vertex, parent, next neighbour index)
    let mut stack = vec![(root, usize::MAX, 0usize)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        if *next < adj[v].len() {
            let w = adj[v][*next];
            *next += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    cuts.insert(parent);
                }
            }
        }
    }
    if root_children > 1 {
        cuts.insert(root);
    }
    Ok(cuts)
}

/// Connected, at least 3 vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && cut_vertices(g).map(|c| c.is_empty()).unwrap_or(false)
}

fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<(), DecompositionError> {
    let bad = |m: &str| Err(DecompositionError::InvalidCycle(m.to_string()));
    if cycle.len() < 3 {
        return bad("fewer than 3 vertices");
    }
    let mut seen = VertexSet::new(g.n());
    for &v in cycle {
        if v >= g.n() {
            return bad("vertex out of range");
        }
        if !seen.insert(v) {
            return bad("repeated vertex");
        }
    }
    for i in 0..cycle.len() {
        if !g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]) {
            return bad("consecutive vertices not adjacent");
        }
    }
    Ok(())
}

/// A cycle of length 3 or at least 5, if the 2-connected graph has one.
///
/// Triangles are tried first, then a depth-first search for longer cycles
/// whose smallest vertex is the start. `None` means every cycle has length 4.
pub fn find_cycle_avoiding_length_4(g: &Graph) -> Result<Option<Vec<usize>>, DecompositionError> {
    if !is_two_connected(g) {
        return Err(DecompositionError::NotTwoConnected);
    }
    let n = g.n();
    for u in 0..n {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            if let Some(w) = g.neighbors(u).intersection(g.neighbors(v)).iter().find(|&w| w > v) {
                return Ok(Some(vec![u, v, w]));
            }
        }
    }
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = VertexSet::singleton(n, start);
        if long_cycle_from(g, start, &mut path, &mut on_path) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

fn long_cycle_from(g: &Graph, start: usize, path: &mut Vec<usize>, on_path: &mut VertexSet) -> bool {
    let last = *path.last().expect("nonempty path");
    if path.len() >= 5 && g.has_edge(last, start) {
        return true;
    }
    for w in g.neighbors(last).iter() {
        if w <= start || on_path.contains(w) {
            continue;
        }
        path.push(w);
        on_path.insert(w);
        if long_cycle_from(g, start, path, on_path) {
            return true;
        }
        path.pop();
        on_path.remove(w);
    }
    false
}

/// Open ear decomposition of a 2-connected graph starting from `start`.
///
/// Repeatedly takes the lowest unused edge `(u, w)` leaving the current
/// subgraph at its lowest possible `u`; a chord becomes a single-edge ear,
/// otherwise a breadth-first search through new vertices finds the shortest
/// way back to a subgraph vertex other than `u`.
pub fn open_ear_decomposition(g: &Graph, start: &[usize]) -> Result<EarDecomposition, DecompositionError> {
    if !is_two_connected(g) {
        return Err(DecompositionError::NotTwoConnected);
    }
    check_cycle(g, start)?;
    let n = g.n();
    let mut in_sub = VertexSet::from_members(n, start.iter().copied());
    let mut used: Vec<VertexSet> = vec![VertexSet::new(n); n];
    let mark = |used: &mut Vec<VertexSet>, u: usize, v: usize| {
        used[u].insert(v);
        used[v].insert(u);
    };
    for i in 0..start.len() {
        mark(&mut used, start[i], start[(i + 1) % start.len()]);
    }
    let mut ears = Vec::new();
    loop {
        let next = in_sub.iter().find_map(|u| {
            g.neighbors(u)
                .difference(&used[u])
                .first()
                .map(|w| (u, w))
        });
        let Some((u, w)) = next else { break };
        let ear = if in_sub.contains(w) {
            vec![u, w]
        } else {
            let mut parent = vec![usize::MAX; n];
            let mut visited = VertexSet::singleton(n, w);
            let mut queue = VecDeque::from([w]);
            let mut end = None;
            while let Some(z) = queue.pop_front() {
                let mut targets = g.neighbors(z).intersection(&in_sub);
                targets.remove(u);
                if let Some(t) = targets.first() {
                    end = Some((z, t));
                    break;
                }
                for x in g.neighbors(z).iter() {
                    if !in_sub.contains(x) && visited.insert(x) {
                        parent[x] = z;
                        queue.push_back(x);
                    }
                }
            }
            let (z, t) = end.ok_or(DecompositionError::NotTwoConnected)?;
            let mut tail = vec![t, z];
            let mut cur = z;
            while cur != w {
                cur = parent[cur];
                tail.push(cur);
            }
            tail.push(u);
            tail.reverse();
            tail
        };
        for pair in ear.windows(2) {
            mark(&mut used, pair[0], pair[1]);
        }
        for &v in &ear {
            in_sub.insert(v);
        }
        ears.push(Path::new(ear));
    }
    let decomposition = EarDecomposition {
        first_cycle: start.to_vec(),
        ears,
    };
    decomposition.validate(g)?;
    Ok(decomposition)
}

/// The maximal binary path having `v` as an internal vertex, oriented so
/// that the smaller end comes first.
pub fn maximal_binary_path_through(g: &Graph, v: usize) -> Result<Path, DecompositionError> {
    if v >= g.n() || g.degree(v) != 2 {
        return Err(DecompositionError::NotDegreeTwo(v));
    }
    let nb = g.neighbors(v).to_vec();
    let walk = |first: usize| -> Result<Vec<usize>, DecompositionError> {
        let mut seq = vec![first];
        let (mut prev, mut cur) = (v, first);
        while g.degree(cur) == 2 {
            if cur == v {
                return Err(DecompositionError::ComponentIsCycle);
            }
            let next = g.neighbors(cur).iter().find(|&w| w != prev).expect("degree 2");
            prev = cur;
            cur = next;
            if cur == v {
                return Err(DecompositionError::ComponentIsCycle);
            }
            seq.push(cur);
        }
        Ok(seq)
    };
    let mut left = walk(nb[0])?;
    let right = walk(nb[1])?;
    left.reverse();
    left.push(v);
    left.extend(right);
    let (a, b) = (left[0], left[left.len() - 1]);
    if a == b {
        return Err(DecompositionError::ClosedLoop(a));
    }
    if a > b {
        left.reverse();
    }
    Ok(Path::new(left))
}

/// Splits a connected graph with minimum degree at least 2 into a
/// 2-connected graph or a dumbbell whose plates again have minimum degree 2.
pub fn dumbbell_decomposition(g: &Graph) -> Result<StructureReport, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    if g.min_degree().unwrap_or(0) < 2 {
        return Err(DecompositionError::MinDegreeBelowTwo);
    }
    if is_two_connected(g) {
        return Ok(StructureReport::TwoConnected);
    }
    let n = g.n();
    let cuts = cut_vertices(g)?;

    if let Some(v) = cuts.iter().find(|&v| g.degree(v) == 2) {
        let handle = maximal_binary_path_through(g, v)?;
        let internal = VertexSet::from_members(n, handle.internal().iter().copied());
        let (rest, map) = g.induced_subgraph(&internal.complement());
        let comps: Vec<VertexSet> = rest
            .connected_components()
            .iter()
            .map(|c| c.relabel(map.parent_ids(), n))
            .collect();
        if comps.len() != 2 {
            return Err(DecompositionError::Invalid(format!(
                "removing the handle left {} components",
                comps.len()
            )));
        }
        let (p1, p2) = if comps[0].contains(handle.first()) {
            (comps[0].clone(), comps[1].clone())
        } else {
            (comps[1].clone(), comps[0].clone())
        };
        return Ok(StructureReport::Dumbbell(Dumbbell {
            plate_1: p1,
            plate_2: p2,
            handle,
        }));
    }

    let v = cuts.first().expect("a graph that is not 2-connected has a cut vertex");
    let mut without_v = g.vertices();
    without_v.remove(v);
    let (rest, map) = g.induced_subgraph(&without_v);
    let comps: Vec<VertexSet> = rest
        .connected_components()
        .iter()
        .map(|c| c.relabel(map.parent_ids(), n))
        .collect();
    for comp in &comps {
        let inside = g.neighbors(v).intersection(comp);
        if inside.len() == 1 {
            let u = inside.first().expect("one neighbour");
            return Ok(StructureReport::Dumbbell(Dumbbell {
                plate_1: comp.clone(),
                plate_2: comp.complement(),
                handle: Path::new(vec![u, v]),
            }));
        }
    }
    let mut plate_1 = comps[0].clone();
    plate_1.insert(v);
    let mut plate_2 = comps[0].complement();
    plate_2.insert(v);
    Ok(StructureReport::Dumbbell(Dumbbell {
        plate_1,
        plate_2,
        handle: Path::new(vec![v]),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    /// Two 4-cycles 0-1-2-3 and 7-8-9-10 joined by the path 2-4-5-6-7.
    fn c4_handle_c4() -> Graph {
        Graph::from_edge_list(
            11,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0),
                (2, 4), (4, 5), (5, 6), (6, 7),
                (7, 8), (8, 9), (9, 10), (10, 7),
            ],
        )
        .unwrap()
    }

    /// All cycles of a small graph as vertex sequences, by brute force.
    fn all_cycle_lengths(g: &Graph) -> Vec<usize> {
        let mut lengths = Vec::new();
        fn go(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut Vec<usize>) {
            let last = *path.last().unwrap();
            if path.len() >= 3 && g.has_edge(last, start) {
                out.push(path.len());
            }
            for w in g.neighbors(last).iter() {
                if w > start && !path.contains(&w) {
                    path.push(w);
                    go(g, start, path, out);
                    path.pop();
                }
            }
        }
        for s in 0..g.n() {
            go(g, s, &mut vec![s], &mut lengths);
        }
        lengths
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices(&two_triangles()).unwrap().to_vec(), vec![2]);
        assert!(cut_vertices(&Graph::cycle(5)).unwrap().is_empty());
        assert_eq!(cut_vertices(&Graph::path(4)).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(
            cut_vertices(&Graph::empty(2)),
            Err(DecompositionError::Disconnected)
        );
        // root as a cut vertex
        let star = Graph::from_edge_list(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(cut_vertices(&star).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn two_connectivity_examples() {
        assert!(is_two_connected(&Graph::cycle(4)));
        assert!(!is_two_connected(&Graph::complete(2)));
        assert!(!is_two_connected(&two_triangles()));
    }

    #[test]
    fn cycle_search_examples() {
        assert_eq!(
            find_cycle_avoiding_length_4(&Graph::cycle(5)).unwrap().map(|c| c.len()),
            Some(5)
        );
        let k23 = Graph::complete_bipartite(2, 3);
        assert!(all_cycle_lengths(&k23).iter().all(|&l| l == 4));
        assert_eq!(find_cycle_avoiding_length_4(&k23).unwrap(), None);
        assert_eq!(
            find_cycle_avoiding_length_4(&Graph::complete(4)).unwrap(),
            Some(vec![0, 1, 2])
        );
        assert_eq!(
            find_cycle_avoiding_length_4(&two_triangles()),
            Err(DecompositionError::NotTwoConnected)
        );
    }

    #[test]
    fn ear_decomposition_examples() {
        let c6 = Graph::cycle(6);
        let d = open_ear_decomposition(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(d.ears.is_empty());

        let k4 = Graph::complete(4);
        let d = open_ear_decomposition(&k4, &[0, 1, 2]).unwrap();
        assert_eq!(d.ears.len(), 2);
        assert_eq!(d.ears[0].vertices(), &[0, 3, 1]);
        assert_eq!(d.ears[1].vertices(), &[2, 3]);
        d.validate(&k4).unwrap();

        let k23 = Graph::complete_bipartite(2, 3);
        let d = open_ear_decomposition(&k23, &[0, 2, 1, 3]).unwrap();
        assert_eq!(d.ears.len(), 1);
        assert_eq!(d.ears[0].vertices(), &[0, 4, 1]);
    }

    #[test]
    fn ear_decomposition_errors() {
        let k4 = Graph::complete(4);
        assert!(matches!(
            open_ear_decomposition(&k4, &[0, 1]),
            Err(DecompositionError::InvalidCycle(_))
        ));
        let c5 = Graph::cycle(5);
        assert!(matches!(
            open_ear_decomposition(&c5, &[0, 1, 3]),
            Err(DecompositionError::InvalidCycle(_))
        ));
        assert_eq!(
            open_ear_decomposition(&two_triangles(), &[0, 1, 2]),
            Err(DecompositionError::NotTwoConnected)
        );
    }

    #[test]
    fn binary_path_examples() {
        let g = c4_handle_c4();
        let p = maximal_binary_path_through(&g, 5).unwrap();
        assert_eq!(p.vertices(), &[2, 4, 5, 6, 7]);
        assert_eq!(
            maximal_binary_path_through(&Graph::cycle(5), 0),
            Err(DecompositionError::ComponentIsCycle)
        );
        // K4 with edge 0-1 subdivided by vertex 4
        let sub = Graph::from_edge_list(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(maximal_binary_path_through(&sub, 4).unwrap().vertices(), &[0, 4, 1]);
        assert_eq!(
            maximal_binary_path_through(&sub, 0),
            Err(DecompositionError::NotDegreeTwo(0))
        );
    }

    #[test]
    fn dumbbell_examples() {
        let g = c4_handle_c4();
        let report = dumbbell_decomposition(&g).unwrap();
        report.validate(&g).unwrap();
        let StructureReport::Dumbbell(d) = report else { panic!("expected a dumbbell") };
        assert_eq!(d.plate_1.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(d.plate_2.to_vec(), vec![7, 8, 9, 10]);
        assert_eq!(d.handle.vertices(), &[2, 4, 5, 6, 7]);

        assert_eq!(dumbbell_decomposition(&Graph::cycle(7)).unwrap(), StructureReport::TwoConnected);

        let t = two_triangles();
        let report = dumbbell_decomposition(&t).unwrap();
        report.validate(&t).unwrap();
        let StructureReport::Dumbbell(d) = report else { panic!("expected a dumbbell") };
        assert_eq!(d.handle.vertices(), &[2]);
        assert_eq!(d.plate_1.to_vec(), vec![0, 1, 2]);
        assert_eq!(d.plate_2.to_vec(), vec![2, 3, 4]);
    }

    #[test]
    fn dumbbell_with_cut_edge() {
        // two K4s joined by the edge 3-4
        let mut edges = Vec::new();
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        edges.push((3, 4));
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let report = dumbbell_decomposition(&g).unwrap();
        report.validate(&g).unwrap();
        let StructureReport::Dumbbell(d) = report else { panic!("expected a dumbbell") };
        assert_eq!(d.handle.len(), 2);
        assert_eq!(d.reversed().validate(&g), Ok(()));
    }

    #[test]
    fn dumbbell_errors() {
        assert_eq!(
            dumbbell_decomposition(&Graph::path(4)),
            Err(DecompositionError::MinDegreeBelowTwo)
        );
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_eq!(dumbbell_decomposition(&two), Err(DecompositionError::Disconnected));
    }
}
