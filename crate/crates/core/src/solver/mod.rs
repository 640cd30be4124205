//! The recursive lower-bound solver and theorem-bound checks.
//!
//! `solve` repeatedly finds a configuration, reduces, recurses and lifts.
//! Graphs with at most [`BASE_LIMIT`] vertices are solved exactly.

mod exact;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use exact::{alpha_by_subsets, exact_alpha, ORACLE_LIMIT};

use crate::config::{c5_to_c2, find_all, find_any, ConfigError, Configuration, Kind};
use crate::extremal::is_member;
use crate::plane::{PlaneGraph, Vertex};
use crate::reduce::{lift, reduce, ReduceError, ReductionStep};
use crate::verify::check_independent;

/// Graphs this small go straight to the exact oracle.
pub const BASE_LIMIT: usize = 8;

/// Reductions allowed per component when the first attempt falls short.
pub const RETRY_BUDGET: usize = 400;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices; the exact oracle takes at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph contains a triangle")]
    NotTriangleFree,
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub independent_set: BTreeSet<Vertex>,
    pub trace: Vec<ReductionStep>,
    pub guarantee: usize,
    pub met: bool,
}

impl SolveResult {
    pub fn size(&self) -> usize {
        self.independent_set.len()
    }
}

/// `ceil(a / 3)`
fn third(a: usize) -> usize {
    a.div_ceil(3)
}

/// The bound claimed for one connected component.
pub fn component_guarantee(g: &PlaneGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        0
    } else if is_member(g).is_member() {
        third(n + 1)
    } else {
        third(n + 2)
    }
}

struct Attempt {
    set: BTreeSet<Vertex>,
    trace: Vec<ReductionStep>,
}

/// Configurations to try at one level, preferred one first, C5 converted.
fn candidates(g: &PlaneGraph, all: bool) -> Result<Vec<Configuration>, SolveError> {
    let first = find_any(g)?;
    let mut out = vec![];
    let convert = |c: Configuration| -> Result<Configuration, SolveError> {
        Ok(if c.kind() == Kind::C5 { c5_to_c2(g, &c)? } else { c })
    };
    out.push(convert(first)?);
    if all {
        for c in find_all(g) {
            let c = convert(c)?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

fn solve_to(g: &PlaneGraph, target: usize, budget: &mut usize) -> Result<Attempt, SolveError> {
    if g.vertex_count() <= BASE_LIMIT {
        let (_, set) = exact_alpha(g)?;
        return Ok(Attempt { set, trace: vec![] });
    }
    let mut best: Option<Attempt> = None;
    for c in candidates(g, *budget > 0)? {
        if best.is_some() {
            if *budget == 0 {
                break;
            }
            *budget -= 1;
        }
        let (h, step) = reduce(g, &c)?;
        let sub = solve_to(&h, target.saturating_sub(step.gain), budget)?;
        let set = lift(&step, &sub.set)?;
        let mut trace = vec![step];
        trace.extend(sub.trace);
        let done = set.len() >= target;
        if best.as_ref().is_none_or(|b| set.len() > b.set.len()) {
            best = Some(Attempt { set, trace });
        }
        if done {
            break;
        }
    }
    Ok(best.expect("find_any returned a configuration"))
}

/// Solves each component and unions the results.
pub fn solve(g: &PlaneGraph) -> Result<SolveResult, SolveError> {
    if !g.is_triangle_free() {
        return Err(SolveError::NotTriangleFree);
    }
    let mut independent_set = BTreeSet::new();
    let mut trace = vec![];
    let mut guarantee = 0;
    for comp in g.components() {
        let h = g.induced(&comp.into_iter().collect());
        let target = component_guarantee(&h);
        guarantee += target;
        let mut budget = RETRY_BUDGET;
        let a = solve_to(&h, target, &mut budget)?;
        independent_set.extend(a.set);
        trace.extend(a.trace);
    }
    check_independent(g, &independent_set).map_err(ReduceError::Lift)?;
    let met = independent_set.len() >= guarantee;
    Ok(SolveResult {
        independent_set,
        trace,
        guarantee,
        met,
    })
}

/// Exact check of both lower bounds on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub alpha: usize,
    pub member: bool,
    /// `alpha >= (n + 1) / 3`
    pub weak_ok: bool,
    /// `alpha >= (n + 2) / 3`, required of non-members only.
    pub strong_ok: bool,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.weak_ok && self.strong_ok
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |ok: bool| if ok { "ok" } else { "FAIL" };
        write!(
            f,
            "n={} alpha={} member={} weak={} strong={}",
            self.n,
            self.alpha,
            self.member,
            verdict(self.weak_ok),
            verdict(self.strong_ok)
        )
    }
}

pub fn check_theorem_bounds(g: &PlaneGraph) -> Result<BoundReport, SolveError> {
    let n = g.vertex_count();
    let (alpha, _) = exact_alpha(g)?;
    let member = is_member(g).is_member();
    Ok(BoundReport {
        n,
        alpha,
        member,
        weak_ok: n == 0 || 3 * alpha > n,
        strong_ok: n == 0 || member || 3 * alpha >= n + 2,
    })
}
