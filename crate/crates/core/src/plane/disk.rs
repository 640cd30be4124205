use std::collections::{BTreeMap, BTreeSet};

use super::{Dart, GraphError, PlaneGraph, Vertex};

/// The subgraph drawn in the closed disk bounded by a cycle, on the side
/// away from the outer face. Its outer face is bounded by the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskSubgraph {
    pub cycle: Vec<Vertex>,
    pub subgraph: PlaneGraph,
}

impl DiskSubgraph {
    /// True if nothing but the cycle itself lies in the disk.
    pub fn is_bare(&self) -> bool {
        self.subgraph.vertex_count() == self.cycle.len() && self.subgraph.edge_count() == self.cycle.len()
    }

    /// Vertices of the disk not on the cycle.
    pub fn interior(&self) -> Vec<Vertex> {
        self.subgraph.vertices().filter(|v| !self.cycle.contains(v)).collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

impl PlaneGraph {
    /// Extracts `G_C` for a cycle `C` of a connected graph with a designated
    /// outer face. The side of `C` is chosen by connectivity of the dual
    /// after removing the edges of `C`.
    pub fn disk_subgraph(&self, cycle: &[Vertex]) -> Result<DiskSubgraph, GraphError> {
        let outer = self.outer_face().ok_or(GraphError::NoOuterFace)?;
        if !self.is_cycle(cycle) {
            return Err(GraphError::NotACycle(cycle.to_vec()));
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if outer.matches_cycle(cycle) {
            return Err(GraphError::BoundsOuterFace);
        }

        let faces = self.faces();
        let mut face_index: BTreeMap<Dart, usize> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &d in f.darts() {
                face_index.insert(d, i);
            }
        }
        let k = cycle.len();
        let on_cycle: BTreeSet<(Vertex, Vertex)> = (0..k)
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect();

        let mut uf = UnionFind((0..faces.len()).collect());
        for (u, v) in self.edges() {
            if !on_cycle.contains(&(u, v)) {
                uf.union(face_index[&(u, v)], face_index[&(v, u)]);
            }
        }
        let outer_idx = faces.iter().position(|f| f == outer).expect("outer is a face");
        let outside = uf.find(outer_idx);
        let inside: BTreeSet<usize> = (0..faces.len()).filter(|&i| uf.find(i) != outside).collect();
        if inside.is_empty() {
            return Err(GraphError::NotACycle(cycle.to_vec()));
        }

        let mut keep_edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for (u, v) in self.edges() {
            if inside.contains(&face_index[&(u, v)]) || inside.contains(&face_index[&(v, u)]) {
                keep_edges.insert((u, v));
            }
        }
        let kept = |a: Vertex, b: Vertex| keep_edges.contains(&(a.min(b), a.max(b)));
        let vertices: BTreeSet<Vertex> = keep_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let rotation = vertices
            .iter()
            .map(|&v| {
                let rot = self.neighbors(v).iter().copied().filter(|&u| kept(v, u)).collect();
                (v, rot)
            })
            .collect();
        // the dart of C whose face lies outside stays on the new outer face
        let (a, b) = (cycle[0], cycle[1]);
        let outer_dart = if inside.contains(&face_index[&(a, b)]) {
            (b, a)
        } else {
            (a, b)
        };
        let subgraph = PlaneGraph::new_unchecked(rotation).with_outer_dart(outer_dart)?;
        Ok(DiskSubgraph {
            cycle: cycle.to_vec(),
            subgraph,
        })
    }
}
