//! The five reducible configurations and their detection.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::plane::{has_path_of_length, paths_between, PlaneGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for Kind {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "C1" => Ok(Kind::C1),
            "C2" => Ok(Kind::C2),
            "C3" => Ok(Kind::C3),
            "C4" => Ok(Kind::C4),
            "C5" => Ok(Kind::C5),
            _ => Err(ConfigError::UnknownKind(s.to_string())),
        }
    }
}

/// One occurrence of a reducible configuration, with its role vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Configuration {
    /// A vertex of degree at most 2.
    C1 { v: Vertex },
    /// A degree-3 vertex `v` with neighbours `u, w, w2` and no path of
    /// length 3 between `w` and `w2`.
    C2 {
        v: Vertex,
        u: Vertex,
        w: Vertex,
        w2: Vertex,
    },
    /// A 4-face `v1 v2 v3 v4` with `deg(v1) = deg(v3) = 3`.
    C3 { face: [Vertex; 4] },
    /// A 5-face `v1..v5` with `v1..v4` of degree 3 and outside neighbours
    /// `u1..u4` meeting the path side-conditions.
    C4 { face: [Vertex; 5], u: [Vertex; 4] },
    /// A 4-face `v1 v2 v3 v4` with `deg(v1) = deg(v2) = 3`.
    C5 { face: [Vertex; 4] },
}

impl Configuration {
    pub fn kind(&self) -> Kind {
        match self {
            Configuration::C1 { .. } => Kind::C1,
            Configuration::C2 { .. } => Kind::C2,
            Configuration::C3 { .. } => Kind::C3,
            Configuration::C4 { .. } => Kind::C4,
            Configuration::C5 { .. } => Kind::C5,
        }
    }

    /// The vertices that must avoid the outer face.
    pub fn interference_set(&self) -> Vec<Vertex> {
        match *self {
            Configuration::C1 { v } => vec![v],
            Configuration::C2 { v, w, w2, .. } => vec![v, w, w2],
            Configuration::C3 { face } => vec![face[0], face[2]],
            Configuration::C4 { face, u } => face[..4].iter().chain(&u).copied().collect(),
            Configuration::C5 { face } => vec![face[0], face[1]],
        }
    }

    /// Re-checks every condition of the configuration in `g`.
    pub fn holds_in(&self, g: &PlaneGraph) -> bool {
        match *self {
            Configuration::C1 { v } => g.contains(v) && g.degree(v) <= 2,
            Configuration::C2 { v, u, w, w2 } => is_c2(g, v, u, w, w2),
            Configuration::C3 { face } => is_face(g, &face) && g.degree(face[0]) == 3 && g.degree(face[2]) == 3,
            Configuration::C4 { face, u } => {
                is_face(g, &face) && c4_roles(g, face) == Some(u) && c4_conditions(g, face, u)
            }
            Configuration::C5 { face } => is_face(g, &face) && g.degree(face[0]) == 3 && g.degree(face[1]) == 3,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[Vertex]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Configuration::C1 { v } => write!(f, "C1 v={v} roles=v:{v}"),
            Configuration::C2 { v, u, w, w2 } => write!(f, "C2 v={v} roles=u:{u},w:{w},w':{w2}"),
            Configuration::C3 { face } => write!(f, "C3 v={} roles=face:{}", face[0], list(face)),
            Configuration::C4 { face, u } => {
                write!(f, "C4 v={} roles=face:{};u:{}", face[0], list(face), list(u))
            }
            Configuration::C5 { face } => write!(f, "C5 v={} roles=face:{}", face[0], list(face)),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("no reducible configuration found")]
    NoneFound,
    #[error("unknown configuration kind `{0}`")]
    UnknownKind(String),
    #[error("expected a C5 configuration that holds in the graph")]
    NotC5,
    #[error("both diagonals of face {face:?} carry length-3 paths: {first:?} and {second:?}")]
    BothDiagonals {
        face: [Vertex; 4],
        first: Vec<Vertex>,
        second: Vec<Vertex>,
    },
}

fn is_face(g: &PlaneGraph, cycle: &[Vertex]) -> bool {
    g.is_cycle(cycle) && g.faces().iter().any(|f| f.matches_cycle(cycle))
}

fn is_c2(g: &PlaneGraph, v: Vertex, u: Vertex, w: Vertex, w2: Vertex) -> bool {
    if !g.contains(v) || g.degree(v) != 3 {
        return false;
    }
    let mut ns = [u, w, w2];
    ns.sort_unstable();
    let mut have = g.neighbors(v).to_vec();
    have.sort_unstable();
    ns[..] == have[..] && !has_path_of_length(g, w, w2, 3, &BTreeSet::new())
}

/// Faces that are cycles of the given length, as vertex sequences.
fn cycle_faces(g: &PlaneGraph, len: usize) -> Vec<Vec<Vertex>> {
    g.faces()
        .iter()
        .filter(|f| f.len() == len && f.is_cycle())
        .map(|f| f.vertices())
        .collect()
}

/// Vertices of degree at most 2.
pub fn find_c1(g: &PlaneGraph) -> Vec<Configuration> {
    g.vertices()
        .filter(|&v| g.degree(v) <= 2)
        .map(|v| Configuration::C1 { v })
        .collect()
}

/// Every degree-3 vertex and every choice of `u` among its neighbours
/// such that the other two are not joined by a path of length 3.
pub fn find_c2(g: &PlaneGraph) -> Vec<Configuration> {
    let none = BTreeSet::new();
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 3) {
        let ns = g.sorted_neighbors(v);
        for i in 0..3 {
            let u = ns[i];
            let others: Vec<Vertex> = ns.iter().copied().filter(|&x| x != u).collect();
            let (w, w2) = (others[0], others[1]);
            if !has_path_of_length(g, w, w2, 3, &none) {
                out.push(Configuration::C2 { v, u, w, w2 });
            }
        }
    }
    out
}

/// Every 4-face with an opposite pair of degree-3 vertices. The pair is
/// `v1 < v3`; `v2` is the smaller of the other two corners.
pub fn find_c3(g: &PlaneGraph) -> Vec<Configuration> {
    let mut out = BTreeSet::new();
    for c in cycle_faces(g, 4) {
        for i in 0..2 {
            let (a, b) = (c[i], c[i + 2]);
            if g.degree(a) == 3 && g.degree(b) == 3 {
                let (o1, o2) = (c[i + 1], c[(i + 3) % 4]);
                out.insert(Configuration::C3 {
                    face: [a.min(b), o1.min(o2), a.max(b), o1.max(o2)],
                });
            }
        }
    }
    out.into_iter().collect()
}

/// The outside neighbours `u1..u4` of `v1..v4`, if `v1..v4` have degree 3
/// and each has exactly one neighbour off the face.
fn c4_roles(g: &PlaneGraph, face: [Vertex; 5]) -> Option<[Vertex; 4]> {
    let mut u = [0; 4];
    for i in 0..4 {
        let v = face[i];
        if g.degree(v) != 3 {
            return None;
        }
        let off: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|x| !face.contains(x)).collect();
        if off.len() != 1 {
            return None;
        }
        u[i] = off[0];
    }
    Some(u)
}

fn c4_conditions(g: &PlaneGraph, face: [Vertex; 5], u: [Vertex; 4]) -> bool {
    let [u1, u2, u3, u4] = u;
    if u.iter().collect::<BTreeSet<_>>().len() != 4 {
        return false;
    }
    if g.has_edge(u1, u2) || g.has_edge(u3, u4) {
        return false;
    }
    let rest = g.without(&face.iter().copied().collect());
    let none = BTreeSet::new();
    !has_path_of_length(&rest, u1, u4, 1, &none)
        && !has_path_of_length(&rest, u1, u4, 2, &none)
        && !has_path_of_length(&rest, u2, u3, 1, &none)
        && !has_path_of_length(&rest, u2, u3, 3, &none)
}

/// Every 5-face read from each start and in both directions whose first
/// four vertices have degree 3 and whose outside neighbours satisfy the
/// side-conditions. Mirror images are reported once, with `v1 < v4`.
pub fn find_c4(g: &PlaneGraph) -> Vec<Configuration> {
    let mut out = BTreeSet::new();
    for c in cycle_faces(g, 5) {
        let mut orders = Vec::new();
        for s in 0..5 {
            let fwd: Vec<Vertex> = (0..5).map(|i| c[(s + i) % 5]).collect();
            let bwd: Vec<Vertex> = (0..5).map(|i| c[(s + 5 - i) % 5]).collect();
            orders.push(fwd);
            orders.push(bwd);
        }
        for o in orders {
            let face: [Vertex; 5] = o.try_into().expect("five vertices");
            if face[0] > face[3] {
                continue;
            }
            if let Some(u) = c4_roles(g, face) {
                if c4_conditions(g, face, u) {
                    out.insert(Configuration::C4 { face, u });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Every 4-face with an adjacent pair of degree-3 vertices `v1 < v2`.
pub fn find_c5(g: &PlaneGraph) -> Vec<Configuration> {
    let mut out = BTreeSet::new();
    for c in cycle_faces(g, 4) {
        for i in 0..4 {
            let (a, b) = (c[i], c[(i + 1) % 4]);
            if a < b && g.degree(a) == 3 && g.degree(b) == 3 {
                out.insert(Configuration::C5 {
                    face: [a, b, c[(i + 2) % 4], c[(i + 3) % 4]],
                });
            }
            if b < a && g.degree(a) == 3 && g.degree(b) == 3 {
                out.insert(Configuration::C5 {
                    face: [b, a, c[(i + 3) % 4], c[(i + 2) % 4]],
                });
            }
        }
    }
    out.into_iter().collect()
}

/// Turns a C5 occurrence into a C2 occurrence at `v1` (diagonal `v2, v4`)
/// or, failing that, at `v2` (diagonal `v1, v3`).
pub fn c5_to_c2(g: &PlaneGraph, c: &Configuration) -> Result<Configuration, ConfigError> {
    let Configuration::C5 { face } = *c else {
        return Err(ConfigError::NotC5);
    };
    if !c.holds_in(g) {
        return Err(ConfigError::NotC5);
    }
    let [v1, v2, v3, v4] = face;
    let none = BTreeSet::new();
    let third =
        |v: Vertex, a: Vertex, b: Vertex| *g.neighbors(v).iter().find(|&&x| x != a && x != b).expect("degree 3");
    let first = paths_between(g, v2, v4, 3, &none);
    if first.is_empty() {
        return Ok(Configuration::C2 {
            v: v1,
            u: third(v1, v2, v4),
            w: v2.min(v4),
            w2: v2.max(v4),
        });
    }
    let second = paths_between(g, v1, v3, 3, &none);
    if second.is_empty() {
        return Ok(Configuration::C2 {
            v: v2,
            u: third(v2, v1, v3),
            w: v1.min(v3),
            w2: v1.max(v3),
        });
    }
    Err(ConfigError::BothDiagonals {
        face,
        first: first[0].clone(),
        second: second[0].clone(),
    })
}

/// True iff the configuration's designated vertices meet `outer`.
pub fn interferes(c: &Configuration, outer: &BTreeSet<Vertex>) -> bool {
    c.interference_set().iter().any(|v| outer.contains(v))
}

/// Every configuration, grouped by kind in the order C1..C5.
pub fn find_all(g: &PlaneGraph) -> Vec<Configuration> {
    let mut out = find_c1(g);
    out.extend(find_c2(g));
    out.extend(find_c3(g));
    out.extend(find_c4(g));
    out.extend(find_c5(g));
    out
}

/// The first configuration found, trying C1 through C5 in order.
pub fn find_any(g: &PlaneGraph) -> Result<Configuration, ConfigError> {
    type Finder = fn(&PlaneGraph) -> Vec<Configuration>;
    let finders: [Finder; 5] = [find_c1, find_c2, find_c3, find_c4, find_c5];
    finders
        .iter()
        .find_map(|f| f(g).into_iter().next())
        .ok_or(ConfigError::NoneFound)
}
