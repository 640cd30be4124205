//! Graph corpora and the suite runner.
//!
//! Three sources: exhaustive enumeration of small connected plane
//! triangle-free graphs, a seeded random generator, and extremal members.
//! A golden set of named graphs ships with the crate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::config::find_any;
use crate::extremal::{generate_member_seeded, is_member};
use crate::plane::{canonical_form_bits, embed, parse, CanonicalForm, GraphError, PlaneGraph, Vertex};
use crate::solver::{exact_alpha, solve};

/// Largest `n_max` accepted by [`enumerate_small`].
pub const ENUMERATION_LIMIT: usize = 11;

/// Graphs above this size skip the exact oracle in the suite.
pub const SUITE_ORACLE_LIMIT: usize = 40;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("enumeration supports n <= {limit}, asked for {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("unknown corpus mode `{0}`")]
    UnknownMode(String),
    #[error("golden file {name}: {source}")]
    Golden { name: String, source: GraphError },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
    Extremal,
    Golden,
}

impl FromStr for Mode {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            "extremal" => Ok(Mode::Extremal),
            "golden" => Ok(Mode::Golden),
            _ => Err(CorpusError::UnknownMode(s.to_string())),
        }
    }
}

/// Which graphs to produce. `n_max` bounds the vertex count of generated
/// graphs and is ignored by the fixed golden set; `count` is only used by
/// the random mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub mode: Mode,
    pub n_max: usize,
    pub seed: u64,
    pub count: usize,
}

fn adjacency_rows(g: &PlaneGraph) -> (Vec<Vertex>, Vec<u64>) {
    let vertices: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| vertices.binary_search(&v).expect("vertex");
    let rows = vertices
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << index(u)))
        .collect();
    (vertices, rows)
}

fn edges_of_rows(rows: &[u64]) -> Vec<(Vertex, Vertex)> {
    let mut edges = vec![];
    for (i, &r) in rows.iter().enumerate() {
        for j in i + 1..rows.len() {
            if r >> j & 1 == 1 {
                edges.push((i as Vertex + 1, j as Vertex + 1));
            }
        }
    }
    edges
}

/// Labels `1..=n` in canonical order, embedded.
fn graph_of_form(form: &CanonicalForm) -> PlaneGraph {
    let vertices: Vec<Vertex> = (1..=form.n as Vertex).collect();
    embed(&vertices, &edges_of_rows(&form.adjacency())).expect("planar by construction")
}

/// Nonempty independent subsets of `0..n`, as bit masks.
fn independent_masks(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    (1u64..1 << n)
        .filter(|&m| {
            let mut bits = m;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if rows[v] & m != 0 {
                    return false;
                }
            }
            true
        })
        .collect()
}

/// Canonical forms of all connected plane triangle-free graphs on exactly
/// `n` vertices, for each `n` in `1..=n_max`.
fn enumerate_levels(n_max: usize) -> Vec<BTreeSet<CanonicalForm>> {
    let mut levels: Vec<BTreeSet<CanonicalForm>> = vec![];
    if n_max == 0 {
        return levels;
    }
    levels.push([canonical_form_bits(&[0])].into());
    for n in 2..=n_max {
        let parents: Vec<&CanonicalForm> = levels[n - 2].iter().collect();
        let children: BTreeSet<CanonicalForm> = parents
            .par_iter()
            .flat_map_iter(|p| {
                let rows = p.adjacency();
                independent_masks(&rows).into_iter().filter_map(move |m| {
                    // a connected graph minus a non-cut vertex stays connected
                    // and that vertex's neighbourhood is independent
                    let mut child = rows.clone();
                    for (i, r) in child.iter_mut().enumerate() {
                        if m >> i & 1 == 1 {
                            *r |= 1 << (n - 1);
                        }
                    }
                    child.push(m);
                    let vertices: Vec<Vertex> = (1..=n as Vertex).collect();
                    embed(&vertices, &edges_of_rows(&child)).ok()?;
                    Some(canonical_form_bits(&child))
                })
            })
            .collect();
        levels.push(children);
    }
    levels
}

/// All connected plane triangle-free graphs with at most `n_max` vertices,
/// one embedding each, up to isomorphism. Ordered by size, then by
/// canonical form.
pub fn enumerate_small(n_max: usize) -> Result<Vec<PlaneGraph>, CorpusError> {
    if n_max > ENUMERATION_LIMIT {
        return Err(CorpusError::TooLarge {
            n: n_max,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(enumerate_levels(n_max)
        .iter()
        .flat_map(|level| level.iter().map(graph_of_form))
        .collect())
}

/// Number of graphs on exactly `n` vertices for each `n` in `1..=n_max`.
pub fn enumeration_counts(n_max: usize) -> Result<Vec<usize>, CorpusError> {
    if n_max > ENUMERATION_LIMIT {
        return Err(CorpusError::TooLarge {
            n: n_max,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(enumerate_levels(n_max).iter().map(BTreeSet::len).collect())
}

fn subdivide(g: &PlaneGraph, u: Vertex, v: Vertex) -> PlaneGraph {
    let x = g.max_vertex() + 1;
    let mut rot = g.rotations().clone();
    for (a, b) in [(u, v), (v, u)] {
        let r = rot.get_mut(&a).expect("endpoint");
        let i = r.iter().position(|&y| y == b).expect("edge");
        r[i] = x;
    }
    rot.insert(x, vec![u, v]);
    PlaneGraph::new(rot).expect("subdivision keeps the embedding")
}

/// Adds a vertex inside face `f` joined to the corners at the given walk
/// positions (increasing, distinct vertices).
fn add_in_face(g: &PlaneGraph, walk: &[Vertex], corners: &[usize]) -> PlaneGraph {
    let x = g.max_vertex() + 1;
    let mut rot = g.rotations().clone();
    let k = walk.len();
    for &i in corners {
        let (prev, here) = (walk[(i + k - 1) % k], walk[i]);
        let r = rot.get_mut(&here).expect("corner");
        if r.is_empty() {
            r.push(x);
        } else {
            let p = r.iter().position(|&y| y == prev).expect("walk edge");
            r.insert(p + 1, x);
        }
    }
    rot.insert(x, corners.iter().rev().map(|&i| walk[i]).collect());
    PlaneGraph::new(rot).expect("face insertion keeps the embedding")
}

/// One random growth step: subdivide an edge, or add a vertex in a face
/// joined to pairwise non-adjacent corners.
pub fn grow<R: Rng + ?Sized>(g: &PlaneGraph, rng: &mut R) -> PlaneGraph {
    let edges = g.edges();
    if !edges.is_empty() && rng.random_range(0..4) == 0 {
        let (u, v) = edges[rng.random_range(0..edges.len())];
        return subdivide(g, u, v);
    }
    let face = &g.faces()[rng.random_range(0..g.faces().len())];
    let walk = face.vertices();
    let want = rng.random_range(1..=3);
    let start = rng.random_range(0..walk.len());
    let mut chosen: Vec<usize> = vec![];
    for step in 0..walk.len() {
        let i = (start + step) % walk.len();
        let v = walk[i];
        let clash = chosen.iter().any(|&j| walk[j] == v || g.has_edge(walk[j], v));
        if !clash && rng.random_range(0..2) == 0 {
            chosen.push(i);
            if chosen.len() == want {
                break;
            }
        }
    }
    if chosen.is_empty() {
        chosen.push(start);
    }
    chosen.sort_unstable();
    add_in_face(g, &walk, &chosen)
}

/// Random plane triangle-free graphs grown from a 4-cycle until they have
/// `n_max` vertices. Deterministic per seed.
pub fn gen_random(spec: &CorpusSpec) -> Vec<PlaneGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let mut g = crate::fixtures::cycle(4);
            while g.vertex_count() < spec.n_max {
                g = grow(&g, &mut rng);
            }
            g
        })
        .collect()
}

/// Members of the extremal family with `0, 1, ...` steps while they fit in
/// `n_max` vertices.
pub fn gen_extremal(spec: &CorpusSpec) -> Vec<PlaneGraph> {
    (0..)
        .take_while(|s| 5 + 3 * s <= spec.n_max)
        .map(|s| generate_member_seeded(s, spec.seed.wrapping_add(s as u64)))
        .collect()
}

/// A named graph with its known independence number and membership.
#[derive(Clone, Debug)]
pub struct GoldenEntry {
    pub name: String,
    pub graph: PlaneGraph,
    pub alpha: usize,
    pub member: bool,
}

const GOLDEN_FILES: [(&str, &str); 9] = [
    ("p2", include_str!("../corpus/p2.graph")),
    ("c5", include_str!("../corpus/c5.graph")),
    ("c5_dagger", include_str!("../corpus/c5_dagger.graph")),
    ("c5_double_dagger", include_str!("../corpus/c5_double_dagger.graph")),
    ("c6_chord", include_str!("../corpus/c6_chord.graph")),
    ("c6_hub", include_str!("../corpus/c6_hub.graph")),
    ("cube", include_str!("../corpus/cube.graph")),
    ("member14", include_str!("../corpus/member14.graph")),
    ("dangerous_witness", include_str!("../corpus/dangerous_witness.graph")),
];

const EXPECTATIONS: &str = include_str!("../corpus/expectations.txt");

/// The checked-in golden corpus with its sidecar expectations.
pub fn golden() -> Result<Vec<GoldenEntry>, CorpusError> {
    let expected: BTreeMap<&str, (usize, bool)> = EXPECTATIONS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0], (f[1].parse().expect("alpha"), f[2] == "member"))
        })
        .collect();
    GOLDEN_FILES
        .iter()
        .map(|&(name, text)| {
            let graph = parse(text).map_err(|source| CorpusError::Golden {
                name: name.to_string(),
                source,
            })?;
            let (alpha, member) = expected[name];
            Ok(GoldenEntry {
                name: name.to_string(),
                graph,
                alpha,
                member,
            })
        })
        .collect()
}

/// Produces the graphs a spec describes, each with a display name.
pub fn build(spec: &CorpusSpec) -> Result<Vec<(String, PlaneGraph)>, CorpusError> {
    let named = |prefix: &str, gs: Vec<PlaneGraph>| -> Vec<(String, PlaneGraph)> {
        gs.into_iter()
            .enumerate()
            .map(|(i, g)| (format!("{prefix}{i}"), g))
            .collect()
    };
    Ok(match spec.mode {
        Mode::Exhaustive => named("enum", enumerate_small(spec.n_max)?),
        Mode::Random => named("random", gen_random(spec)),
        Mode::Extremal => named("extremal", gen_extremal(spec)),
        Mode::Golden => golden()?.into_iter().map(|e| (e.name, e.graph)).collect(),
    })
}

/// One graph's results.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub alpha: Option<usize>,
    pub solved: usize,
    pub guarantee: usize,
    pub met: bool,
    pub member: bool,
    pub tight: Option<bool>,
    pub config_found: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub spec: CorpusSpec,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn violation_count(&self) -> usize {
        self.rows.iter().map(|r| r.violations.len()).sum()
    }

    /// One JSON object per line, graphs first, then a summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("serializable"));
            out.push('\n');
        }
        let summary = serde_json::json!({
            "summary": {
                "spec": self.spec,
                "graphs": self.rows.len(),
                "tight": self.rows.iter().filter(|r| r.tight == Some(true)).count(),
                "members": self.rows.iter().filter(|r| r.member).count(),
                "met": self.rows.iter().filter(|r| r.met).count(),
                "violations": self.violation_count(),
            }
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = String::new();
        let _ = writeln!(
            t,
            "{:<20} {:>3} {:>3} {:>5} {:>6} {:>5} {:>4} {:>6} {:>5}",
            "graph", "n", "m", "alpha", "solved", "bound", "met", "member", "tight"
        );
        for r in &self.rows {
            let opt = |x: Option<usize>| x.map_or("-".to_string(), |a| a.to_string());
            let _ = writeln!(
                t,
                "{:<20} {:>3} {:>3} {:>5} {:>6} {:>5} {:>4} {:>6} {:>5}",
                r.name,
                r.n,
                r.m,
                opt(r.alpha),
                r.solved,
                r.guarantee,
                if r.met { "yes" } else { "NO" },
                if r.member { "yes" } else { "no" },
                r.tight.map_or("-", |t| if t { "yes" } else { "no" }),
            );
            for v in &r.violations {
                let _ = writeln!(t, "  violation: {v}");
            }
        }
        let count = |p: &dyn Fn(&SuiteRow) -> bool| self.rows.iter().filter(|r| p(r)).count();
        let _ = writeln!(
            t,
            "graphs={} tight={} members={} met={} violations={}",
            self.rows.len(),
            count(&|r| r.tight == Some(true)),
            count(&|r| r.member),
            count(&|r| r.met),
            self.violation_count()
        );
        f.write_str(&t)
    }
}

/// Solves, checks and classifies one graph.
pub fn check_graph(name: &str, g: &PlaneGraph) -> SuiteRow {
    let n = g.vertex_count();
    let mut violations = vec![];
    let member = is_member(g).is_member();
    let alpha = (n <= SUITE_ORACLE_LIMIT).then(|| exact_alpha(g).expect("within the limit").0);
    let (solved, guarantee, met) = match solve(g) {
        Ok(r) => (r.size(), r.guarantee, r.met),
        Err(e) => {
            violations.push(format!("solver failed: {e}"));
            (0, 0, false)
        }
    };
    if !met {
        violations.push(format!("solver found {solved}, guarantee {guarantee}"));
    }
    let config_found = n == 0 || find_any(g).is_ok();
    if !config_found {
        violations.push("no configuration found".to_string());
    }
    let mut tight = None;
    if let Some(a) = alpha {
        tight = Some(g.is_triangle_free() && 3 * a <= n + 1);
        if solved > a {
            violations.push(format!("solver set {solved} exceeds alpha {a}"));
        }
        if g.is_connected() && n > 0 {
            if 3 * a < n + 1 {
                violations.push(format!("alpha {a} below (n+1)/3"));
            }
            if !member && 3 * a < n + 2 {
                violations.push(format!("non-member with alpha {a} below (n+2)/3"));
            }
            if member && 3 * a != n + 1 {
                violations.push(format!("member with alpha {a} not (n+1)/3"));
            }
        }
    }
    SuiteRow {
        name: name.to_string(),
        n,
        m: g.edge_count(),
        alpha,
        solved,
        guarantee,
        met,
        member,
        tight,
        config_found,
        violations,
    }
}

/// Runs [`check_graph`] over a corpus in parallel; rows keep corpus order.
pub fn run_suite(spec: &CorpusSpec) -> Result<SuiteReport, CorpusError> {
    let graphs = build(spec)?;
    let rows = graphs.par_iter().map(|(name, g)| check_graph(name, g)).collect();
    Ok(SuiteReport { spec: *spec, rows })
}

/// Bit rows of `g` in increasing label order.
pub fn rows_of(g: &PlaneGraph) -> Vec<u64> {
    adjacency_rows(g).1
}
