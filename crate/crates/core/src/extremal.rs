//! The tight class: graphs built from the 5-cycle by path-diamond
//! replacements, plus the path on two vertices.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::fixtures;
use crate::plane::{canonical_form, find_isomorphism, CanonicalForm, Face, GraphError, PlaneGraph, Vertex};
use crate::reduce::{diamond_lift, DiamondContext};
use crate::solver::exact_alpha;
use crate::verify::check_independent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("not a diamond: {0}")]
    InvalidDiamond(String),
    #[error("not a replaceable path: {0}")]
    InvalidPath(String),
    #[error("trace does not replay: {0}")]
    InvalidTrace(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant failure: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A 5-cycle `u1 z1 z2 u2 w` with `x1` adjacent to `u1, u2` and `x2` adjacent
/// to `w`, where `z1, z2` have degree 2 and `u1, u2, w` have degree 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diamond {
    pub u1: Vertex,
    pub z1: Vertex,
    pub z2: Vertex,
    pub u2: Vertex,
    pub w: Vertex,
    pub x1: Vertex,
    pub x2: Vertex,
}

impl Diamond {
    pub fn cycle(&self) -> [Vertex; 5] {
        [self.u1, self.z1, self.z2, self.u2, self.w]
    }

    /// The eight edges of the diamond: its 5-cycle and the three attachments.
    pub fn edges(&self) -> [(Vertex, Vertex); 8] {
        let Diamond {
            u1,
            z1,
            z2,
            u2,
            w,
            x1,
            x2,
        } = *self;
        [
            (u1, z1),
            (z1, z2),
            (z2, u2),
            (u2, w),
            (w, u1),
            (x1, u1),
            (x1, u2),
            (w, x2),
        ]
    }

    /// The same diamond read with `u1, z1` swapped for `u2, z2`.
    pub fn reflected(&self) -> Diamond {
        Diamond {
            u1: self.u2,
            z1: self.z2,
            z2: self.z1,
            u2: self.u1,
            ..*self
        }
    }

    pub fn check(&self, g: &PlaneGraph) -> Result<(), ExtremalError> {
        let bad = |m: &str| Err(ExtremalError::InvalidDiamond(format!("{self}: {m}")));
        let c = self.cycle();
        let distinct: BTreeSet<Vertex> = c.iter().copied().chain([self.x1, self.x2]).collect();
        if distinct.len() != 7 {
            return bad("vertices are not distinct");
        }
        if c.iter().any(|&v| !g.contains(v)) || !g.contains(self.x1) || !g.contains(self.x2) {
            return bad("unknown vertex");
        }
        if !g.is_cycle(&c) {
            return bad("not a 5-cycle");
        }
        for (a, b) in [(self.x1, self.u1), (self.x1, self.u2), (self.x2, self.w)] {
            if !g.has_edge(a, b) {
                return bad("missing attachment edge");
            }
        }
        let degrees = [(self.u1, 3), (self.u2, 3), (self.w, 3), (self.z1, 2), (self.z2, 2)];
        if degrees.iter().any(|&(v, d)| g.degree(v) != d) {
            return bad("wrong degrees");
        }
        Ok(())
    }
}

impl fmt::Display for Diamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {}", self.u1, self.z1, self.z2, self.u2, self.w)
    }
}

/// All diamonds of `g`, each once up to reflection (`z1 < z2`).
pub fn find_diamonds(g: &PlaneGraph) -> Vec<Diamond> {
    let mut out = Vec::new();
    for z1 in g.vertices().filter(|&v| g.degree(v) == 2) {
        for &z2 in g.neighbors(z1) {
            if z2 <= z1 || g.degree(z2) != 2 {
                continue;
            }
            let other = |z: Vertex, not: Vertex| *g.neighbors(z).iter().find(|&&x| x != not).expect("degree 2");
            let u1 = other(z1, z2);
            let u2 = other(z2, z1);
            if u1 == u2 || g.degree(u1) != 3 || g.degree(u2) != 3 {
                continue;
            }
            let rest = |u: Vertex, z: Vertex| -> BTreeSet<Vertex> {
                g.neighbors(u).iter().copied().filter(|&x| x != z).collect()
            };
            let (r1, r2) = (rest(u1, z1), rest(u2, z2));
            if r1 != r2 {
                continue;
            }
            let pair: Vec<Vertex> = r1.into_iter().collect();
            for (w, x1) in [(pair[0], pair[1]), (pair[1], pair[0])] {
                if g.degree(w) != 3 {
                    continue;
                }
                let Some(&x2) = g.neighbors(w).iter().find(|&&x| x != u1 && x != u2) else {
                    continue;
                };
                let d = Diamond {
                    u1,
                    z1,
                    z2,
                    u2,
                    w,
                    x1,
                    x2,
                };
                if d.check(g).is_ok() {
                    out.push(d);
                }
            }
        }
    }
    out.sort();
    out
}

/// Replaces the diamond by a path `x1 v1 v2 x2` with fresh `v1, v2`
/// (the two smallest unused labels above the current maximum). Returns the
/// new graph and the path.
pub fn replace_diamond_with_path(g: &PlaneGraph, d: &Diamond) -> Result<(PlaneGraph, [Vertex; 4]), ExtremalError> {
    d.check(g)?;
    let v1 = g.max_vertex() + 1;
    let v2 = v1 + 1;
    let mut rotation = g.rotations().clone();
    for v in d.cycle() {
        rotation.remove(&v);
    }
    let x1_rot = rotation.get_mut(&d.x1).expect("x1");
    let at = x1_rot.iter().position(|&x| x == d.u1).expect("u1 at x1");
    x1_rot[at] = v1;
    x1_rot.retain(|&x| x != d.u2);
    let x2_rot = rotation.get_mut(&d.x2).expect("x2");
    let at = x2_rot.iter().position(|&x| x == d.w).expect("w at x2");
    x2_rot[at] = v2;
    rotation.insert(v1, vec![d.x1, v2]);
    rotation.insert(v2, vec![v1, d.x2]);
    let h = PlaneGraph::new(rotation)
        .map_err(|e| ExtremalError::Invariant(format!("replacement broke the embedding: {e}")))?;
    Ok((h, [d.x1, v1, v2, d.x2]))
}

/// Every path `x1 v1 v2 x2` with `deg(v1) = deg(v2) = 2`, in both
/// directions, sorted.
pub fn replaceable_paths(g: &PlaneGraph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for v1 in g.vertices().filter(|&v| g.degree(v) == 2) {
        for &v2 in g.neighbors(v1) {
            if g.degree(v2) != 2 {
                continue;
            }
            let x1 = *g.neighbors(v1).iter().find(|&&x| x != v2).expect("degree 2");
            let x2 = *g.neighbors(v2).iter().find(|&&x| x != v1).expect("degree 2");
            if x1 != x2 {
                out.push([x1, v1, v2, x2]);
            }
        }
    }
    out.sort();
    out
}

/// The path-diamond replacement on `x1 v1 v2 x2`. Fresh labels
/// `u1 z1 z2 u2 w` are the five values above the current maximum, in that
/// order. Returns the new graph and the diamond.
pub fn path_diamond_replacement(g: &PlaneGraph, path: [Vertex; 4]) -> Result<(PlaneGraph, Diamond), ExtremalError> {
    let [x1, v1, v2, x2] = path;
    let bad = |m: &str| Err(ExtremalError::InvalidPath(format!("{x1} {v1} {v2} {x2}: {m}")));
    if path.iter().any(|&v| !g.contains(v)) {
        return bad("unknown vertex");
    }
    if path.iter().collect::<BTreeSet<_>>().len() != 4 {
        return bad("vertices are not distinct");
    }
    if !(g.has_edge(x1, v1) && g.has_edge(v1, v2) && g.has_edge(v2, x2)) {
        return bad("not a path");
    }
    if g.degree(v1) != 2 || g.degree(v2) != 2 {
        return bad("middle vertices must have degree 2");
    }
    let base = g.max_vertex();
    let (u1, z1, z2, u2, w) = (base + 1, base + 2, base + 3, base + 4, base + 5);
    let mut rotation = g.rotations().clone();
    rotation.remove(&v1);
    rotation.remove(&v2);
    let x1_rot = rotation.get_mut(&x1).expect("x1");
    let at = x1_rot.iter().position(|&x| x == v1).expect("v1 at x1");
    x1_rot.splice(at..=at, [u2, u1]);
    let x2_rot = rotation.get_mut(&x2).expect("x2");
    let at = x2_rot.iter().position(|&x| x == v2).expect("v2 at x2");
    x2_rot[at] = w;
    rotation.insert(u1, vec![x1, z1, w]);
    rotation.insert(z1, vec![u1, z2]);
    rotation.insert(z2, vec![z1, u2]);
    rotation.insert(u2, vec![w, z2, x1]);
    rotation.insert(w, vec![u1, u2, x2]);
    let h = PlaneGraph::new(rotation)
        .map_err(|e| ExtremalError::Invariant(format!("replacement broke the embedding: {e}")))?;
    let d = Diamond {
        u1,
        z1,
        z2,
        u2,
        w,
        x1,
        x2,
    };
    Ok((h, d))
}

/// Where a membership search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terminal {
    P2,
    C5,
    NotMember,
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Terminal::P2 => "P2",
            Terminal::C5 => "C5",
            Terminal::NotMember => "NOT_MEMBER",
        })
    }
}

/// One diamond-to-path replacement, with the labels it produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MembershipStep {
    pub diamond: Diamond,
    pub path: [Vertex; 4],
}

impl MembershipStep {
    pub fn context(&self) -> DiamondContext {
        DiamondContext {
            diamond: self.diamond,
            path: self.path,
        }
    }
}

/// Certificate of membership: the replacements that reduce the graph to a
/// terminal. Replaying them backwards rebuilds the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipTrace {
    pub steps: Vec<MembershipStep>,
    pub terminal: Terminal,
}

impl MembershipTrace {
    pub fn is_member(&self) -> bool {
        self.terminal != Terminal::NotMember
    }

    /// Applies the recorded steps to `g`, returning every intermediate graph
    /// (starting with `g` itself) after checking the terminal.
    pub fn replay(&self, g: &PlaneGraph) -> Result<Vec<PlaneGraph>, ExtremalError> {
        let mut graphs = vec![g.clone()];
        for (i, step) in self.steps.iter().enumerate() {
            let current = graphs.last().expect("nonempty");
            let (next, path) = replace_diamond_with_path(current, &step.diamond)
                .map_err(|e| ExtremalError::InvalidTrace(format!("step {}: {e}", i + 1)))?;
            if path != step.path {
                return Err(ExtremalError::InvalidTrace(format!(
                    "step {}: expected path {:?}, replacement gives {:?}",
                    i + 1,
                    step.path,
                    path
                )));
            }
            graphs.push(next);
        }
        let last = graphs.last().expect("nonempty");
        if terminal_of(last) != Some(self.terminal) {
            return Err(ExtremalError::InvalidTrace(format!(
                "final graph is not {}",
                self.terminal
            )));
        }
        Ok(graphs)
    }
}

impl fmt::Display for MembershipTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let [x1, v1, v2, x2] = s.path;
            writeln!(f, "replace {} -> path {x1} {v1} {v2} {x2}", s.diamond)?;
        }
        writeln!(f, "terminal {}", self.terminal)
    }
}

impl FromStr for MembershipTrace {
    type Err = ExtremalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |line: usize, m: &str| ExtremalError::InvalidTrace(format!("line {line}: {m}"));
        let mut steps = Vec::new();
        let mut terminal = None;
        for (i, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("terminal ") {
                terminal = Some(match rest.trim() {
                    "P2" => Terminal::P2,
                    "C5" => Terminal::C5,
                    "NOT_MEMBER" => Terminal::NotMember,
                    other => return Err(bad(i, &format!("unknown terminal `{other}`"))),
                });
                continue;
            }
            let rest = line
                .strip_prefix("replace ")
                .ok_or_else(|| bad(i, "expected `replace` or `terminal`"))?;
            let (lhs, rhs) = rest.split_once("-> path").ok_or_else(|| bad(i, "missing `-> path`"))?;
            let nums = |s: &str| -> Result<Vec<Vertex>, ExtremalError> {
                s.split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad(i, &format!("bad vertex `{t}`"))))
                    .collect()
            };
            let (c, p) = (nums(lhs)?, nums(rhs)?);
            if c.len() != 5 || p.len() != 4 {
                return Err(bad(i, "expected five diamond and four path vertices"));
            }
            steps.push(MembershipStep {
                diamond: Diamond {
                    u1: c[0],
                    z1: c[1],
                    z2: c[2],
                    u2: c[3],
                    w: c[4],
                    x1: p[0],
                    x2: p[3],
                },
                path: [p[0], p[1], p[2], p[3]],
            });
        }
        let terminal = terminal.ok_or_else(|| ExtremalError::InvalidTrace("missing terminal line".into()))?;
        Ok(MembershipTrace { steps, terminal })
    }
}

fn terminal_of(g: &PlaneGraph) -> Option<Terminal> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n == 2 && m == 1 {
        return Some(Terminal::P2);
    }
    if n == 5 && m == 5 && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2) {
        return Some(Terminal::C5);
    }
    None
}

/// Vertex and edge counts every member with more than two vertices has.
fn counts_fit(g: &PlaneGraph) -> bool {
    let (n, m) = (g.vertex_count(), g.edge_count());
    n >= 5 && n % 3 == 2 && 3 * m == 5 * n - 10
}

/// Decides membership in the tight class, with a certificate.
///
/// Tries every diamond with backtracking; failed subgraphs are remembered
/// by canonical form.
pub fn is_member(g: &PlaneGraph) -> MembershipTrace {
    let not_member = MembershipTrace {
        steps: vec![],
        terminal: Terminal::NotMember,
    };
    if !g.is_connected() || !g.is_triangle_free() {
        return not_member;
    }
    let mut failed = HashSet::new();
    let mut steps = Vec::new();
    match search(g, &mut steps, &mut failed) {
        Some(terminal) => MembershipTrace { steps, terminal },
        None => not_member,
    }
}

fn search(g: &PlaneGraph, steps: &mut Vec<MembershipStep>, failed: &mut HashSet<CanonicalForm>) -> Option<Terminal> {
    if let Some(t) = terminal_of(g) {
        return Some(t);
    }
    if !counts_fit(g) || g.vertex_count() < 8 {
        return None;
    }
    let key = (g.vertex_count() <= 64).then(|| canonical_form(g));
    if key.as_ref().is_some_and(|k| failed.contains(k)) {
        return None;
    }
    for d in find_diamonds(g) {
        let Ok((h, path)) = replace_diamond_with_path(g, &d) else {
            continue;
        };
        steps.push(MembershipStep { diamond: d, path });
        if let Some(t) = search(&h, steps, failed) {
            return Some(t);
        }
        steps.pop();
    }
    if let Some(k) = key {
        failed.insert(k);
    }
    None
}

/// A member with `5 + 3 * steps` vertices, each step replacing a uniformly
/// chosen path.
pub fn generate_member<R: Rng + ?Sized>(steps: usize, rng: &mut R) -> PlaneGraph {
    let mut g = fixtures::c5();
    for _ in 0..steps {
        let paths = replaceable_paths(&g);
        let path = paths[rng.random_range(0..paths.len())];
        g = path_diamond_replacement(&g, path).expect("qualifying path").0;
    }
    g
}

/// [`generate_member`] with a ChaCha8 generator seeded from `seed`.
pub fn generate_member_seeded(steps: usize, seed: u64) -> PlaneGraph {
    generate_member(steps, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// A maximum independent set of a member, of size `(n + 1) / 3`, obtained
/// by solving the terminal exactly and lifting through every replacement.
pub fn member_max_independent_set(g: &PlaneGraph, trace: &MembershipTrace) -> Result<BTreeSet<Vertex>, ExtremalError> {
    if !trace.is_member() {
        return Err(ExtremalError::InvalidTrace("trace does not certify membership".into()));
    }
    let graphs = trace.replay(g)?;
    let terminal = graphs.last().expect("nonempty");
    let (_, mut set) = exact_alpha(terminal).map_err(|e| ExtremalError::Invariant(e.to_string()))?;
    for (step, host) in trace.steps.iter().zip(&graphs).rev() {
        set = diamond_lift(&step.context(), &set);
        check_independent(host, &set).map_err(|e| ExtremalError::Invariant(format!("lift: {e}")))?;
    }
    let target = (g.vertex_count() + 1) / 3;
    if set.len() != target {
        return Err(ExtremalError::Invariant(format!(
            "lifted set has {} vertices, expected {target}",
            set.len()
        )));
    }
    Ok(set)
}

/// An independent set of size `(n + 1) / 3` disjoint from the face `f`,
/// for a member whose face `f` touches no vertex of degree at most 2.
pub fn avoiding_independent_set(g: &PlaneGraph, f: &Face) -> Result<BTreeSet<Vertex>, ExtremalError> {
    if !g.faces().contains(f) {
        return Err(GraphError::NotAFace.into());
    }
    if let Some(v) = f.vertex_set().into_iter().find(|&v| g.degree(v) <= 2) {
        return Err(ExtremalError::Precondition(format!(
            "face {f} touches vertex {v} of degree {}",
            g.degree(v)
        )));
    }
    if !is_member(g).is_member() {
        return Err(ExtremalError::Precondition("graph is not in the tight class".into()));
    }
    let set = avoid(g, f)?;
    check_independent(g, &set).map_err(|e| ExtremalError::Invariant(e.to_string()))?;
    if set.len() != (g.vertex_count() + 1) / 3 || set.iter().any(|&v| f.contains_vertex(v)) {
        return Err(ExtremalError::Invariant(
            "avoiding set has the wrong size or meets the face".into(),
        ));
    }
    Ok(set)
}

fn avoid(g: &PlaneGraph, f: &Face) -> Result<BTreeSet<Vertex>, ExtremalError> {
    if g.vertex_count() == 11 {
        return double_dagger_base(g, f);
    }
    let walk: BTreeSet<(Vertex, Vertex)> = f.darts().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    // a diamond none of whose edges lies on f keeps f intact
    for d in find_diamonds(g) {
        if d.edges().iter().any(|&(a, b)| walk.contains(&(a.min(b), a.max(b)))) {
            continue;
        }
        let (h, path) = replace_diamond_with_path(g, &d)?;
        let Some(kept) = h.face_of(f.darts()[0]).filter(|k| *k == f) else {
            continue;
        };
        if kept.vertex_set().iter().any(|&v| h.degree(v) <= 2) {
            continue;
        }
        let Ok(smaller) = avoid(&h, kept) else {
            continue;
        };
        let ctx = DiamondContext { diamond: d, path };
        let lifted = diamond_lift(&ctx, &smaller);
        if lifted.iter().all(|&v| !f.contains_vertex(v)) {
            return Ok(lifted);
        }
    }
    Err(ExtremalError::Invariant(format!(
        "no diamond avoids face {f} in a {}-vertex member",
        g.vertex_count()
    )))
}

/// The 11-vertex member: transport the literal sets along an isomorphism
/// that maps the matching face onto `f`.
fn double_dagger_base(g: &PlaneGraph, f: &Face) -> Result<BTreeSet<Vertex>, ExtremalError> {
    let model = fixtures::c5_double_dagger();
    let target = f.vertex_set();
    for (face, set) in fixtures::C5_DOUBLE_DAGGER_AVOIDING {
        let Some(map) = find_isomorphism(&model, g, &|m| {
            face.iter().map(|v| m[v]).collect::<BTreeSet<_>>() == target
        }) else {
            continue;
        };
        let image: BTreeSet<Vertex> = set.iter().map(|v| map[v]).collect();
        if check_independent(g, &image).is_ok() && image.is_disjoint(&target) {
            return Ok(image);
        }
    }
    Err(ExtremalError::Invariant(format!(
        "face {f} of the 11-vertex member has no literal avoiding set"
    )))
}
