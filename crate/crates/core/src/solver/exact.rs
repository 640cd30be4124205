//! Exact independence number by branch and bound on bit rows.

use std::collections::BTreeSet;

use crate::plane::{PlaneGraph, Vertex};

use super::SolveError;

/// Largest graph the exact oracle accepts (one machine word per row).
pub const ORACLE_LIMIT: usize = 64;

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
    best_len: u32,
}

impl Search<'_> {
    fn closed(&self, v: usize) -> u64 {
        self.adj[v] | (1u64 << v)
    }

    fn run(&mut self, mask: u64, current: u64) {
        let have = current.count_ones();
        if have + mask.count_ones() <= self.best_len && self.best_len > 0 {
            return;
        }
        if mask == 0 {
            if have > self.best_len || self.best_len == 0 {
                self.best_len = have;
                self.best = current;
            }
            return;
        }
        let mut bits = mask;
        let mut pick = usize::MAX;
        let mut pick_deg = 0;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (self.adj[v] & mask).count_ones();
            // a vertex of degree at most one is always safe to take
            if d <= 1 {
                self.run(mask & !self.closed(v), current | (1u64 << v));
                return;
            }
            if pick == usize::MAX || d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        self.run(mask & !self.closed(pick), current | (1u64 << pick));
        self.run(mask & !(1u64 << pick), current);
    }
}

/// Exact independence number with a witness set.
pub fn exact_alpha(g: &PlaneGraph) -> Result<(usize, BTreeSet<Vertex>), SolveError> {
    let n = g.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(SolveError::TooLarge { n, limit: ORACLE_LIMIT });
    }
    let vertices: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| vertices.binary_search(&v).expect("vertex");
    let adj: Vec<u64> = vertices
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1u64 << index(u)))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        adj: &adj,
        best: 0,
        best_len: 0,
    };
    search.run(full, 0);
    let set: BTreeSet<Vertex> = (0..n)
        .filter(|&i| search.best >> i & 1 == 1)
        .map(|i| vertices[i])
        .collect();
    Ok((set.len(), set))
}

/// Brute force over all subsets, for cross-checking on tiny graphs.
pub fn alpha_by_subsets(g: &PlaneGraph) -> usize {
    let vertices: Vec<Vertex> = g.vertices().collect();
    let n = vertices.len();
    assert!(n <= 24, "subset enumeration is exponential");
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            (
                vertices.binary_search(&u).expect("u"),
                vertices.binary_search(&v).expect("v"),
            )
        })
        .collect();
    (0u32..1 << n)
        .filter(|s| edges.iter().all(|&(a, b)| s >> a & 1 == 0 || s >> b & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
