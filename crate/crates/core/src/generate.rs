//! Graph streams for scans and tests: every labeled graph on a few
//! vertices, and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

/// Largest `n` for which [`labeled_graphs`] is allowed (2^15 graphs at 6).
pub const EXHAUSTIVE_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("exhaustive generation is capped at {limit} vertices, got {n}")]
pub struct TooManyGraphs {
    pub n: usize,
    pub limit: usize,
}

/// All labeled graphs on exactly `n` vertices. Bit `i` of the counter
/// selects the `i`-th pair in the order (0,1), (0,2), ..., (n-2,n-1).
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, TooManyGraphs> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(TooManyGraphs {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).expect("pairs are in range")
    }))
}

/// All labeled graphs on `1..=max_n` vertices, smallest first.
pub fn labeled_graphs_up_to(max_n: usize) -> Result<impl Iterator<Item = Graph>, TooManyGraphs> {
    let mut parts = Vec::new();
    for n in 1..=max_n {
        parts.push(labeled_graphs(n)?);
    }
    Ok(parts.into_iter().flatten())
}

/// `G(n, 1/2)` for a single `n`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("pairs are in range")
}

/// Endless seeded stream of random graphs with minimum degree at least 2.
///
/// Each draw picks `n` uniformly in `min_n..=max_n` and every edge with
/// probability 1/2; draws failing the filters are discarded.
#[derive(Debug, Clone)]
pub struct RandomGraphs {
    rng: ChaCha8Rng,
    min_n: usize,
    max_n: usize,
    connected: bool,
}

impl RandomGraphs {
    pub fn new(seed: u64, min_n: usize, max_n: usize) -> Self {
        assert!(3 <= min_n && min_n <= max_n, "need 3 <= min_n <= max_n");
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            min_n,
            max_n,
            connected: false,
        }
    }

    /// Keep only connected graphs.
    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }
}

impl Iterator for RandomGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let n = self.rng.gen_range(self.min_n..=self.max_n);
            let g = random_graph(&mut self.rng, n);
            if g.min_degree().unwrap_or(0) >= 2 && (!self.connected || g.is_connected()) {
                return Some(g);
            }
        }
    }
}
