//! Reductions for C1-C4 and for diamonds, with independent-set lifting.
//!
//! Every lift checks its output with [`crate::verify`] before returning it.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::config::{Configuration, Kind};
use crate::extremal::{replace_diamond_with_path, Diamond, ExtremalError};
use crate::plane::surgery::Surgery;
use crate::plane::{GraphError, PlaneGraph, Vertex};
use crate::verify::{check_independent, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("configuration no longer holds: {0}")]
    Stale(Configuration),
    #[error("C5 has no reduction of its own; convert it to C2 first")]
    C5Direct,
    #[error("reduced graph is invalid: {0}")]
    Graph(#[from] GraphError),
    #[error("reduced graph contains the triangle {0:?}")]
    Triangle([Vertex; 3]),
    #[error("no candidate lift is independent: {0}")]
    Lift(Violation),
    #[error("lifted set has {got} vertices, expected {expected}")]
    LiftSize { got: usize, expected: usize },
    #[error(transparent)]
    Diamond(#[from] ExtremalError),
}

/// What a reduction did, enough to lift sets back into the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub config: Configuration,
    /// Vertices deleted outright.
    pub removed: BTreeSet<Vertex>,
    /// `(a, b, z)`: `a` and `b` were merged into the fresh vertex `z`.
    pub identified: Option<(Vertex, Vertex, Vertex)>,
    pub added_edges: Vec<(Vertex, Vertex)>,
    pub gain: usize,
    pub size_before: usize,
    pub size_after: usize,
    host: PlaneGraph,
}

impl ReductionStep {
    pub fn kind(&self) -> Kind {
        self.config.kind()
    }

    /// The graph the configuration was found in.
    pub fn host(&self) -> &PlaneGraph {
        &self.host
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let removed: Vec<String> = self.removed.iter().map(|v| v.to_string()).collect();
        write!(f, "{} removed={{{}}}", self.kind(), removed.join(","))?;
        if let Some((a, b, z)) = self.identified {
            write!(f, " identified={a},{b}->{z}")?;
        }
        for (a, b) in &self.added_edges {
            write!(f, " added={a}-{b}")?;
        }
        write!(f, " k={}", self.gain)
    }
}

/// Applies the reduction of a C1-C4 configuration.
pub fn reduce(g: &PlaneGraph, c: &Configuration) -> Result<(PlaneGraph, ReductionStep), ReduceError> {
    if c.kind() == Kind::C5 {
        return Err(ReduceError::C5Direct);
    }
    if !c.holds_in(g) {
        return Err(ReduceError::Stale(c.clone()));
    }
    let fresh = g.max_vertex() + 1;
    let mut step = ReductionStep {
        config: c.clone(),
        removed: BTreeSet::new(),
        identified: None,
        added_edges: vec![],
        gain: 1,
        size_before: g.vertex_count(),
        size_after: 0,
        host: g.clone(),
    };
    let reduced = match *c {
        Configuration::C1 { v } => {
            step.removed = g.neighbors(v).iter().copied().chain([v]).collect();
            g.without(&step.removed)
        }
        Configuration::C2 { v, u, w, w2 } => {
            step.removed = [u, v].into();
            step.identified = Some((w, w2, fresh));
            let mut s = Surgery::new(g);
            s.delete_vertex(u);
            // v's remaining edges carry w' into w's rotation at the old wv
            s.contract(s.half_edge(w, v), w);
            s.contract(s.half_edge(w, w2), fresh);
            s.remove_parallel(fresh);
            s.into_graph()?
        }
        Configuration::C3 { face } => {
            step.gain = 2;
            let mut removed: BTreeSet<Vertex> = face.iter().copied().collect();
            removed.extend(g.neighbors(face[0]));
            removed.extend(g.neighbors(face[2]));
            step.removed = removed;
            g.without(&step.removed)
        }
        Configuration::C4 { face, u } => {
            step.gain = 2;
            let [v1, v2, v3, v4, v5] = face;
            let [u1, u2, u3, u4] = u;
            step.removed = face.iter().copied().collect();
            step.identified = Some((u2, u3, fresh));
            step.added_edges = vec![(u1.min(u4), u1.max(u4))];
            let mut s = Surgery::new(g);
            for &x in g.neighbors(v5) {
                if x != v1 && x != v4 {
                    s.delete_edge(s.half_edge(v5, x));
                }
            }
            // the path u2 v2 v3 u3 shrinks to z, still joined to v1 and v4
            s.contract(s.half_edge(u2, v2), u2);
            s.contract(s.half_edge(u2, v3), u2);
            s.contract(s.half_edge(u2, u3), fresh);
            // v1 v5 v4 shrinks to m, which is then dropped between u1 and u4
            let m = fresh + 1;
            s.contract(s.half_edge(v1, v5), v1);
            s.contract(s.half_edge(v1, v4), m);
            for e in s.between(m, fresh) {
                s.delete_edge(e);
            }
            s.contract(s.half_edge(m, u1), u1);
            s.remove_parallel(fresh);
            s.remove_parallel(u1);
            s.into_graph()?
        }
        Configuration::C5 { .. } => unreachable!("rejected above"),
    };
    if let Some(t) = reduced.find_triangle() {
        return Err(ReduceError::Triangle(t));
    }
    step.size_after = reduced.vertex_count();
    Ok((reduced, step))
}

fn verified(
    host: &PlaneGraph,
    candidates: Vec<BTreeSet<Vertex>>,
    expected: usize,
) -> Result<BTreeSet<Vertex>, ReduceError> {
    let mut last = None;
    for set in candidates {
        match check_independent(host, &set) {
            Ok(()) if set.len() == expected => return Ok(set),
            Ok(()) => {
                last = Some(ReduceError::LiftSize {
                    got: set.len(),
                    expected,
                })
            }
            Err(v) => last = Some(ReduceError::Lift(v)),
        }
    }
    Err(last.expect("at least one candidate"))
}

/// Lifts an independent set of the reduced graph to one of the host that
/// is larger by the gain.
pub fn lift(step: &ReductionStep, reduced_set: &BTreeSet<Vertex>) -> Result<BTreeSet<Vertex>, ReduceError> {
    let s = reduced_set;
    let expected = s.len() + step.gain;
    let with = |extra: &[Vertex], without: Option<Vertex>| -> BTreeSet<Vertex> {
        s.iter()
            .copied()
            .filter(|&x| Some(x) != without)
            .chain(extra.iter().copied())
            .collect()
    };
    let candidates = match step.config {
        Configuration::C1 { v } => vec![with(&[v], None)],
        Configuration::C2 { v, w, w2, .. } => {
            let (_, _, z) = step.identified.expect("C2 identifies");
            if s.contains(&z) {
                vec![with(&[w, w2], Some(z))]
            } else {
                vec![with(&[v], None)]
            }
        }
        Configuration::C3 { face } => vec![with(&[face[0], face[2]], None)],
        Configuration::C4 { face, u } => {
            let (_, _, z) = step.identified.expect("C4 identifies");
            // u1 u4 is an edge of the reduced graph, so reflecting the face
            // when u1 is taken leaves u1 out
            let (face, u) = if s.contains(&u[0]) {
                ([face[3], face[2], face[1], face[0], face[4]], [u[3], u[2], u[1], u[0]])
            } else {
                (face, u)
            };
            let [v1, _, v3, _, _] = face;
            let [_, u2, u3, u4] = u;
            if s.contains(&z) {
                vec![with(&[v1, u3, u4], Some(z)), with(&[v1, u2, u3], Some(z))]
            } else {
                vec![with(&[v1, v3], None)]
            }
        }
        Configuration::C5 { .. } => return Err(ReduceError::C5Direct),
    };
    verified(&step.host, candidates, expected)
}

/// Tight means planar, triangle-free and `alpha <= (n + 1) / 3`.
pub fn check_tight(g: &PlaneGraph, alpha: usize) -> bool {
    g.is_triangle_free() && 3 * alpha <= g.vertex_count() + 1
}

/// A diamond and the path that replaced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiamondContext {
    pub diamond: Diamond,
    /// `x1 v1 v2 x2` in the reduced graph.
    pub path: [Vertex; 4],
}

/// Replaces a diamond by a path, keeping what is needed to lift back.
pub fn diamond_reduce(g: &PlaneGraph, d: &Diamond) -> Result<(PlaneGraph, DiamondContext), ReduceError> {
    let (h, path) = replace_diamond_with_path(g, d)?;
    Ok((h, DiamondContext { diamond: *d, path }))
}

/// Adds `z2` to the set, swapping `v1` for `u1` and `v2` for `w`. The
/// result is one larger and agrees with the input off the diamond.
pub fn diamond_lift(ctx: &DiamondContext, reduced_set: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
    let [_, v1, v2, _] = ctx.path;
    let d = &ctx.diamond;
    let mut s: BTreeSet<Vertex> = reduced_set.iter().copied().filter(|&x| x != v1 && x != v2).collect();
    s.insert(d.z2);
    if reduced_set.contains(&v1) {
        s.insert(d.u1);
    }
    if reduced_set.contains(&v2) {
        s.insert(d.w);
    }
    s
}

/// Like [`diamond_lift`], checked against the host graph.
pub fn diamond_lift_verified(
    host: &PlaneGraph,
    ctx: &DiamondContext,
    reduced_set: &BTreeSet<Vertex>,
) -> Result<BTreeSet<Vertex>, ReduceError> {
    verified(host, vec![diamond_lift(ctx, reduced_set)], reduced_set.len() + 1)
}

/// Extends `set` greedily, smallest vertex first, to a maximal independent set.
pub fn make_maximal(g: &PlaneGraph, set: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
    let mut s = set.clone();
    for v in g.vertices() {
        if !s.contains(&v) && g.neighbors(v).iter().all(|u| !s.contains(u)) {
            s.insert(v);
        }
    }
    s
}

/// Maps an independent set of the host to one of the reduced graph, after
/// making it maximal; the result is one smaller than the maximal set.
/// Labels of `v1, v2` follow [`replace_diamond_with_path`].
pub fn diamond_project(
    g: &PlaneGraph,
    d: &Diamond,
    set: &BTreeSet<Vertex>,
) -> Result<(PlaneGraph, BTreeSet<Vertex>), ReduceError> {
    check_independent(g, set).map_err(ReduceError::Lift)?;
    let (h, ctx) = diamond_reduce(g, d)?;
    let mut s = make_maximal(g, set);
    let mut d = *d;
    if s.contains(&d.u1) && s.contains(&d.u2) {
        s.remove(&d.u2);
        s.insert(d.z2);
    }
    if !s.contains(&d.z2) {
        // maximality puts z1 in instead, so read the diamond the other way
        d = d.reflected();
    }
    let expected = s.len() - 1;
    let [_, v1, v2, _] = ctx.path;
    let mut out: BTreeSet<Vertex> = s.iter().copied().filter(|x| !d.cycle().contains(x)).collect();
    if s.contains(&d.u1) {
        out.insert(v1);
    }
    if s.contains(&d.w) {
        out.insert(v2);
    }
    let out = verified(&h, vec![out], expected)?;
    Ok((h, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{find_c1, find_c2, find_c3, find_c4, find_c5};
    use crate::extremal::find_diamonds;
    use crate::fixtures;
    use crate::plane::isomorphic_small;
    use crate::solver::exact_alpha;

    #[test]
    fn c1_on_five_cycle_leaves_an_edge() {
        let g = fixtures::c5();
        let (h, step) = reduce(&g, &Configuration::C1 { v: 1 }).unwrap();
        assert!(isomorphic_small(&h, &fixtures::p2()).unwrap());
        assert_eq!(step.gain, 1);
        assert_eq!(step.to_string(), "C1 removed={1,2,5} k=1");
        let s = lift(&step, &[3].into()).unwrap();
        assert_eq!(s, [1, 3].into());
        assert_eq!(lift(&step, &BTreeSet::new()).unwrap(), [1].into());
    }

    #[test]
    fn c1_on_hub_hexagon() {
        let g = fixtures::c6_hub();
        let (h, _) = reduce(&g, &Configuration::C1 { v: 2 }).unwrap();
        assert_eq!(h.vertex_count(), 4);
    }

    #[test]
    fn c3_on_cube() {
        let g = fixtures::cube();
        let c = find_c3(&g)[0].clone();
        let (h, step) = reduce(&g, &c).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(step.gain, 2);
        let (_, s) = exact_alpha(&h).unwrap();
        let lifted = lift(&step, &s).unwrap();
        assert_eq!(lifted.len(), 4);
        assert!(step.to_string().starts_with("C3 removed={"));
        assert!(step.to_string().ends_with(" k=2"));
    }

    #[test]
    fn c2_identification_keeps_planarity() {
        for g in [
            fixtures::cube(),
            fixtures::c6_hub(),
            fixtures::grid(3, 4),
            fixtures::dodecahedron(),
        ] {
            for c in find_c2(&g) {
                let (h, step) = reduce(&g, &c).unwrap();
                assert!(h.is_triangle_free());
                assert_eq!(h.vertex_count(), g.vertex_count() - 3);
                let (a, s) = exact_alpha(&h).unwrap();
                let lifted = lift(&step, &s).unwrap();
                assert_eq!(lifted.len(), a + 1);
                let (_, z) = (0, step.identified.unwrap().2);
                // lifting through both branches of the rule
                let without_z: BTreeSet<Vertex> = s.iter().copied().filter(|&x| x != z).collect();
                assert!(lift(&step, &without_z).is_ok());
            }
        }
    }

    #[test]
    fn c4_on_pendant_pentagon() {
        let g = fixtures::pendant_pentagon();
        let c = find_c4(&g)[0].clone();
        let (h, step) = reduce(&g, &c).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(step.added_edges, vec![(6, 9)]);
        for s in [BTreeSet::from([6]), BTreeSet::from([9]), BTreeSet::from([10, 6])] {
            let lifted = lift(&step, &s).unwrap();
            assert_eq!(lifted.len(), s.len() + 2);
        }
    }

    #[test]
    fn stale_and_c5_are_rejected() {
        let g = fixtures::cube();
        assert_eq!(
            reduce(&g, &Configuration::C1 { v: 1 }).unwrap_err(),
            ReduceError::Stale(Configuration::C1 { v: 1 })
        );
        let c5 = find_c5(&g)[0].clone();
        assert_eq!(reduce(&g, &c5).unwrap_err(), ReduceError::C5Direct);
    }

    #[test]
    fn tightness() {
        assert!(check_tight(&fixtures::c5(), 2));
        assert!(!check_tight(&fixtures::cube(), 4));
        assert!(check_tight(&fixtures::p2(), 1));
    }

    #[test]
    fn diamond_round_trips() {
        let g = fixtures::c5_dagger();
        for d in find_diamonds(&g) {
            let (h, ctx) = diamond_reduce(&g, &d).unwrap();
            assert!(isomorphic_small(&h, &fixtures::c5()).unwrap());
            let [_, v1, _, _] = ctx.path;
            let lifted = diamond_lift_verified(&g, &ctx, &[v1].into()).unwrap();
            assert_eq!(lifted, [d.u1, d.z2].into());
            let (_, best) = exact_alpha(&h).unwrap();
            assert_eq!(diamond_lift_verified(&g, &ctx, &best).unwrap().len(), 3);
            assert_eq!(diamond_lift(&ctx, &BTreeSet::new()), [d.z2].into());
        }
    }

    #[test]
    fn projection_normalises() {
        let g = fixtures::c5_dagger();
        let d = find_diamonds(&g)[0];
        let (_, both) = diamond_project(&g, &d, &[d.u1, d.u2].into()).unwrap();
        assert_eq!(both.len(), 2);
        let (h, only_z1) = diamond_project(&g, &d, &[d.z1].into()).unwrap();
        assert!(crate::verify::is_independent(&h, &only_z1));
        let (_, best) = exact_alpha(&g).unwrap();
        assert_eq!(diamond_project(&g, &d, &best).unwrap().1.len(), 2);
    }

    #[test]
    fn every_c1_reduction_on_small_graphs() {
        for g in [
            fixtures::c6_chord(),
            fixtures::pendant_pentagon(),
            fixtures::c5_dagger(),
        ] {
            for c in find_c1(&g) {
                let (h, step) = reduce(&g, &c).unwrap();
                assert!(h.vertex_count() + 3 * step.gain >= g.vertex_count());
                let (a, s) = exact_alpha(&h).unwrap();
                assert!(exact_alpha(&g).unwrap().0 > a);
                assert_eq!(lift(&step, &s).unwrap().len(), a + 1);
            }
        }
    }
}
