//! Local rotation-system surgery on a half-edge representation that tolerates
//! transient parallel edges and loops.

use std::collections::BTreeMap;

use super::{GraphError, PlaneGraph, Vertex};

/// Half-edge `e` runs from `tail[e]` to `tail[e ^ 1]`.
#[derive(Clone, Debug)]
pub(crate) struct Surgery {
    tail: Vec<Vertex>,
    alive: Vec<bool>,
    rot: BTreeMap<Vertex, Vec<usize>>,
}

impl Surgery {
    pub fn new(g: &PlaneGraph) -> Self {
        let mut id: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
        let mut tail = Vec::new();
        for (u, v) in g.edges() {
            id.insert((u, v), tail.len());
            tail.push(u);
            tail.push(v);
        }
        let half = |a: Vertex, b: Vertex| {
            if a < b {
                id[&(a, b)]
            } else {
                id[&(b, a)] + 1
            }
        };
        let rot = g
            .rotations()
            .iter()
            .map(|(&v, r)| (v, r.iter().map(|&u| half(v, u)).collect()))
            .collect();
        Surgery {
            alive: vec![true; tail.len()],
            tail,
            rot,
        }
    }

    pub fn head(&self, e: usize) -> Vertex {
        self.tail[e ^ 1]
    }

    /// Half-edges leaving `v` towards `u`, in rotation order.
    pub fn between(&self, v: Vertex, u: Vertex) -> Vec<usize> {
        self.rot
            .get(&v)
            .map(|r| r.iter().copied().filter(|&e| self.head(e) == u).collect())
            .unwrap_or_default()
    }

    pub fn half_edge(&self, v: Vertex, u: Vertex) -> usize {
        self.between(v, u)[0]
    }

    pub fn delete_edge(&mut self, e: usize) {
        for h in [e, e ^ 1] {
            let t = self.tail[h];
            if let Some(r) = self.rot.get_mut(&t) {
                r.retain(|&x| x != h);
            }
            self.alive[h] = false;
        }
    }

    pub fn delete_vertex(&mut self, v: Vertex) {
        if let Some(r) = self.rot.get(&v).cloned() {
            for e in r {
                self.delete_edge(e);
            }
        }
        self.rot.remove(&v);
    }

    /// Contracts half-edge `e`, merging its endpoints into `keep`.
    pub fn contract(&mut self, e: usize, keep: Vertex) {
        let a = self.tail[e];
        let b = self.head(e);
        let rot_a = self.rot.remove(&a).expect("tail exists");
        let rot_b = self.rot.remove(&b).expect("head exists");
        let pa = rot_a.iter().position(|&x| x == e).expect("e at a");
        let pb = rot_b.iter().position(|&x| x == e ^ 1).expect("twin at b");
        let mut merged = rot_a[..pa].to_vec();
        for i in 1..rot_b.len() {
            merged.push(rot_b[(pb + i) % rot_b.len()]);
        }
        merged.extend_from_slice(&rot_a[pa + 1..]);
        self.alive[e] = false;
        self.alive[e ^ 1] = false;
        for &h in &merged {
            self.tail[h] = keep;
        }
        self.rot.insert(keep, merged);
        // drop loops created by parallel edges between a and b
        let loops: Vec<usize> = self.rot[&keep]
            .iter()
            .copied()
            .filter(|&h| self.head(h) == keep && h % 2 == 0)
            .collect();
        for h in loops {
            self.delete_edge(h);
        }
    }

    /// Keeps the first edge to each neighbour of `v`, deleting the rest.
    pub fn remove_parallel(&mut self, v: Vertex) {
        let mut seen = Vec::new();
        let mut extra = Vec::new();
        for &e in &self.rot[&v] {
            let u = self.head(e);
            if seen.contains(&u) {
                extra.push(e);
            } else {
                seen.push(u);
            }
        }
        for e in extra {
            self.delete_edge(e);
        }
    }

    pub fn into_graph(self) -> Result<PlaneGraph, GraphError> {
        let rotation = self
            .rot
            .iter()
            .map(|(&v, r)| (v, r.iter().map(|&e| self.head(e)).collect()))
            .collect();
        PlaneGraph::new(rotation)
    }
}
