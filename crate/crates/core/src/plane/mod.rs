//! Combinatorial plane graphs given by a rotation system.
//!
//! A [`PlaneGraph`] stores, for every vertex, the clockwise cyclic order of its
//! neighbours. Faces are traced with the rule `next(u -> v) = (v -> succ_v(u))`
//! where `succ_v(u)` is the neighbour following `u` in the rotation at `v`.
//! Every directed edge (dart) lies on exactly one face walk.

mod canon;
mod disk;
mod embed;
mod io;
mod search;
pub(crate) mod surgery;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use canon::{
    canonical_form, canonical_form_bits, find_isomorphism, isomorphic_small, CanonicalForm, ISOMORPHISM_LIMIT,
};
pub use disk::DiskSubgraph;
pub use embed::{embed, embed_exhaustive, EXHAUSTIVE_EMBED_LIMIT};

/// Vertex identifier. Identifiers are stable across operations that do not
/// delete the vertex.
pub type Vertex = u32;

/// A directed edge `(tail, head)`.
pub type Dart = (Vertex, Vertex);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("asymmetric rotation: {u} lists {v} but {v} does not list {u}")]
    Asymmetric { u: Vertex, v: Vertex },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edges between {0} and {1}")]
    Parallel(Vertex, Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("rotation system is not planar: component of {root} has V={vertices} E={edges} F={faces}")]
    NotPlanar {
        root: Vertex,
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("graph is not planar")]
    NoEmbedding,
    #[error("edge count mismatch: header says {declared}, rotations give {actual}")]
    EdgeCount { declared: usize, actual: usize },
    #[error("not a face of this graph")]
    NotAFace,
    #[error("not a cycle of this graph: {0:?}")]
    NotACycle(Vec<Vertex>),
    #[error("cycle bounds the outer face")]
    BoundsOuterFace,
    #[error("no outer face designated")]
    NoOuterFace,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// A face of a plane graph: the closed walk of darts traced by the rotation
/// system, stored starting from its smallest dart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    walk: Vec<Dart>,
}

impl Face {
    fn from_walk(mut walk: Vec<Dart>) -> Self {
        if let Some(pos) = walk.iter().enumerate().min_by_key(|(_, d)| **d).map(|(i, _)| i) {
            walk.rotate_left(pos);
        }
        Face { walk }
    }

    /// Number of edges on the boundary walk, `|f|`.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn darts(&self) -> &[Dart] {
        &self.walk
    }

    /// Vertices in walk order (repeated if the walk revisits a vertex).
    pub fn vertices(&self) -> Vec<Vertex> {
        self.walk.iter().map(|d| d.0).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.walk.iter().map(|d| d.0).collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.walk.iter().any(|d| d.0 == v)
    }

    pub fn contains_dart(&self, d: Dart) -> bool {
        self.walk.contains(&d)
    }

    /// True if the boundary walk visits each of its vertices once.
    pub fn is_cycle(&self) -> bool {
        self.walk.len() >= 3 && self.vertex_set().len() == self.walk.len()
    }

    /// True if the walk, read as a cyclic vertex sequence in either
    /// direction, equals `cycle`.
    pub fn matches_cycle(&self, cycle: &[Vertex]) -> bool {
        same_cycle(&self.vertices(), cycle)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vs.join(" "))
    }
}

/// Compares two cyclic vertex sequences up to rotation and reflection.
pub fn same_cycle(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let n = a.len();
    let Some(start) = b.iter().position(|&x| x == a[0]) else {
        return false;
    };
    let forward = (0..n).all(|i| a[i] == b[(start + i) % n]);
    let backward = (0..n).all(|i| a[i] == b[(start + n - i) % n]);
    forward || backward
}

/// A plane graph described by its rotation system.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    rotation: BTreeMap<Vertex, Vec<Vertex>>,
    outer: Option<Dart>,
    faces: OnceLock<Vec<Face>>,
}

/// Same rotation system (each list compared up to cyclic shift) and the
/// same outer face.
impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        let darts = |f: &Face| f.darts().iter().copied().collect::<BTreeSet<Dart>>();
        let same_cycle = |a: &Vec<Vertex>, b: &Vec<Vertex>| {
            a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|s| a.iter().cycle().skip(s).take(a.len()).eq(b)))
        };
        self.rotation.len() == other.rotation.len()
            && self
                .rotation
                .iter()
                .zip(&other.rotation)
                .all(|((v, a), (u, b))| v == u && same_cycle(a, b))
            && self.outer_face().map(darts) == other.outer_face().map(darts)
    }
}

impl Eq for PlaneGraph {}

impl PlaneGraph {
    /// Builds a plane graph from a rotation system, checking simplicity,
    /// symmetry and Euler's formula on every component.
    pub fn new(rotation: BTreeMap<Vertex, Vec<Vertex>>) -> Result<Self, GraphError> {
        let g = PlaneGraph {
            rotation,
            outer: None,
            faces: OnceLock::new(),
        };
        g.validate()?;
        Ok(g)
    }

    /// Convenience constructor from `(vertex, rotation)` pairs.
    pub fn from_rotations<I, R>(rotations: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, R)>,
        R: IntoIterator<Item = Vertex>,
    {
        let rotation = rotations
            .into_iter()
            .map(|(v, r)| (v, r.into_iter().collect()))
            .collect();
        PlaneGraph::new(rotation)
    }

    /// Builds a plane graph from its face boundary walks. Every directed
    /// edge must occur in exactly one walk; `[a, b, c, ..]` means the face
    /// turns from `a b` into `b c`.
    pub fn from_face_walks(walks: &[&[Vertex]]) -> Result<Self, GraphError> {
        let walks: Vec<Vec<Vertex>> = walks.iter().map(|w| w.to_vec()).collect();
        PlaneGraph::new(embed::rotation_from_faces(&walks))
    }

    pub(crate) fn new_unchecked(rotation: BTreeMap<Vertex, Vec<Vertex>>) -> Self {
        PlaneGraph {
            rotation,
            outer: None,
            faces: OnceLock::new(),
        }
    }

    /// The empty graph.
    pub fn empty() -> Self {
        PlaneGraph::new_unchecked(BTreeMap::new())
    }

    fn validate(&self) -> Result<(), GraphError> {
        for (&v, rot) in &self.rotation {
            let mut seen = BTreeSet::new();
            for &u in rot {
                if u == v {
                    return Err(GraphError::Loop(v));
                }
                if !seen.insert(u) {
                    return Err(GraphError::Parallel(v.min(u), v.max(u)));
                }
                let Some(back) = self.rotation.get(&u) else {
                    return Err(GraphError::UnknownVertex(u));
                };
                if !back.contains(&v) {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
        }
        self.check_euler()
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        let faces = self.faces();
        let mut face_count: HashMap<Vertex, usize> = HashMap::new();
        let comp = self.component_map();
        for f in faces {
            *face_count.entry(comp[&f.walk[0].0]).or_default() += 1;
        }
        for component in self.components() {
            let root = component[0];
            let vertices = component.len();
            let edges: usize = component.iter().map(|v| self.degree(*v)).sum::<usize>() / 2;
            let faces = if edges == 0 {
                1
            } else {
                face_count.get(&root).copied().unwrap_or(0)
            };
            if vertices + faces != edges + 2 {
                return Err(GraphError::NotPlanar {
                    root,
                    vertices,
                    edges,
                    faces,
                });
            }
        }
        Ok(())
    }

    /// Designates the face containing dart `d` as the outer face.
    pub fn with_outer_dart(mut self, d: Dart) -> Result<Self, GraphError> {
        if !self.has_edge(d.0, d.1) {
            return Err(GraphError::NotAFace);
        }
        self.outer = Some(d);
        Ok(self)
    }

    pub fn clear_outer(mut self) -> Self {
        self.outer = None;
        self
    }

    pub fn rotations(&self) -> &BTreeMap<Vertex, Vec<Vertex>> {
        &self.rotation
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rotation.keys().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.rotation.contains_key(&v)
    }

    /// Neighbours of `v` in clockwise order. Empty for unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.rotation.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn sorted_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut n = self.neighbors(v).to_vec();
        n.sort_unstable();
        n
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(&v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&v, rot) in &self.rotation {
            for &u in rot {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Largest vertex identifier, or 0 for the empty graph.
    pub fn max_vertex(&self) -> Vertex {
        self.rotation.keys().next_back().copied().unwrap_or(0)
    }

    /// Successor of `u` in the rotation at `v`.
    pub fn succ(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotation[&v];
        let i = rot.iter().position(|&x| x == u).expect("dart exists");
        rot[(i + 1) % rot.len()]
    }

    /// Predecessor of `u` in the rotation at `v`.
    pub fn pred(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotation[&v];
        let i = rot.iter().position(|&x| x == u).expect("dart exists");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// The dart following `d` on its face walk.
    pub fn next_dart(&self, d: Dart) -> Dart {
        (d.1, self.succ(d.1, d.0))
    }

    /// All face walks, sorted. Isolated vertices contribute no walk.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| self.trace_faces())
    }

    fn trace_faces(&self) -> Vec<Face> {
        let mut next: HashMap<Dart, Dart> = HashMap::new();
        for (&v, rot) in &self.rotation {
            let k = rot.len();
            for i in 0..k {
                // arriving at v from rot[i] leaves towards rot[i + 1]
                next.insert((rot[i], v), (v, rot[(i + 1) % k]));
            }
        }
        let mut darts: Vec<Dart> = next.keys().copied().collect();
        darts.sort_unstable();
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for start in darts {
            if seen.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                seen.insert(d);
                walk.push(d);
                d = next[&d];
                if d == start {
                    break;
                }
            }
            faces.push(Face::from_walk(walk));
        }
        faces.sort();
        faces
    }

    /// The face containing dart `d`.
    pub fn face_of(&self, d: Dart) -> Option<&Face> {
        self.faces().iter().find(|f| f.contains_dart(d))
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    pub fn outer_face(&self) -> Option<&Face> {
        self.outer.and_then(|d| self.face_of(d))
    }

    /// Faces other than the designated outer face.
    pub fn inner_faces(&self) -> Vec<&Face> {
        let outer = self.outer_face();
        self.faces().iter().filter(|f| Some(*f) != outer).collect()
    }

    /// Same rotation system with `f` as the outer face.
    pub fn re_embed(&self, f: &Face) -> Result<PlaneGraph, GraphError> {
        let d = *f.walk.first().ok_or(GraphError::NotAFace)?;
        if !self.has_edge(d.0, d.1) || self.face_of(d) != Some(f) {
            return Err(GraphError::NotAFace);
        }
        let mut g = self.clone();
        g.outer = Some(d);
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = vec![v];
            seen.insert(v);
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                for &y in self.neighbors(x) {
                    if seen.insert(y) {
                        comp.push(y);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn component_map(&self) -> HashMap<Vertex, Vertex> {
        let mut map = HashMap::new();
        for comp in self.components() {
            for &v in &comp {
                map.insert(v, comp[0]);
            }
        }
        map
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff the graph has no 3-cycle.
    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for (&v, rot) in &self.rotation {
            for (i, &a) in rot.iter().enumerate() {
                for &b in &rot[i + 1..] {
                    if self.has_edge(a, b) {
                        let mut t = [v, a, b];
                        t.sort_unstable();
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    /// Subgraph induced on `keep`, with rotations restricted. Planarity is
    /// preserved by deletion so no re-validation is needed.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> PlaneGraph {
        let rotation = self
            .rotation
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, rot)| (v, rot.iter().copied().filter(|u| keep.contains(u)).collect()))
            .collect();
        PlaneGraph::new_unchecked(rotation)
    }

    /// Deletes the given vertices.
    pub fn without(&self, remove: &BTreeSet<Vertex>) -> PlaneGraph {
        let keep = self.vertices().filter(|v| !remove.contains(v)).collect();
        self.induced(&keep)
    }

    /// Relabels vertices to `1..=n` preserving their order.
    pub fn relabel_dense(&self) -> (PlaneGraph, BTreeMap<Vertex, Vertex>) {
        let map: BTreeMap<Vertex, Vertex> = self.vertices().enumerate().map(|(i, v)| (v, i as Vertex + 1)).collect();
        (self.relabel(&map), map)
    }

    /// Applies an injective relabelling to every vertex.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> PlaneGraph {
        let rotation = self
            .rotation
            .iter()
            .map(|(v, rot)| (map[v], rot.iter().map(|u| map[u]).collect()))
            .collect();
        let mut g = PlaneGraph::new_unchecked(rotation);
        g.outer = self.outer.map(|(a, b)| (map[&a], map[&b]));
        g
    }

    /// Checks whether the given vertex sequence is a cycle of the graph.
    pub fn is_cycle(&self, cycle: &[Vertex]) -> bool {
        let n = cycle.len();
        n >= 3
            && cycle.iter().collect::<BTreeSet<_>>().len() == n
            && (0..n).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % n]))
    }
}

impl fmt::Display for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::serialize(self))
    }
}

pub use io::{parse, serialize};
pub use search::{cycles_up_to, has_path_of_length, paths_between, MAX_SEARCH_LENGTH};
