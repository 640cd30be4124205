//! Charges, the five redistribution rules, dangerous cycles and a
//! per-instance audit of the final-charge claims.
//!
//! Vertices start with `deg - 4`, faces with `len - 4`. Everything is an
//! exact rational.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::config::{find_all, interferes, Configuration};
use crate::fixtures;
use crate::plane::{cycles_up_to, isomorphic_small, DiskSubgraph, GraphError, PlaneGraph, Vertex};

pub type Charge = Ratio<i64>;

fn third() -> Charge {
    Charge::new(1, 3)
}

/// A vertex by label or a face by its index in [`PlaneGraph::faces`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(Vertex),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(i) => write!(f, "f{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub rule: u8,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

impl fmt::Display for Transfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R{} {} -> {} {}/{}",
            self.rule,
            self.from,
            self.to,
            self.amount.numer(),
            self.amount.denom()
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChargeLedger {
    pub initial: BTreeMap<Element, Charge>,
    pub transfers: Vec<Transfer>,
    pub final_charges: BTreeMap<Element, Charge>,
}

impl ChargeLedger {
    pub fn total_initial(&self) -> Charge {
        self.initial.values().sum()
    }

    pub fn total_final(&self) -> Charge {
        self.final_charges.values().sum()
    }

    pub fn final_charge(&self, e: Element) -> Charge {
        self.final_charges.get(&e).copied().unwrap_or_default()
    }

    fn settle(&mut self) {
        self.final_charges = self.initial.clone();
        for t in &self.transfers {
            *self.final_charges.entry(t.from).or_default() -= t.amount;
            *self.final_charges.entry(t.to).or_default() += t.amount;
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("no outer face designated")]
    NoOuterFace,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("outer face is not bounded by a cycle")]
    OuterNotCycle,
    #[error("outer cycle has length {0}, more than 6")]
    OuterTooLong(usize),
    #[error("graph contains the triangle {0:?}")]
    Triangle([Vertex; 3]),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require_connected_with_outer(g: &PlaneGraph) -> Result<(), DischargeError> {
    if g.outer_face().is_none() {
        return Err(DischargeError::NoOuterFace);
    }
    if !g.is_connected() {
        return Err(DischargeError::Disconnected);
    }
    Ok(())
}

fn outer_cycle(g: &PlaneGraph) -> Result<Vec<Vertex>, DischargeError> {
    require_connected_with_outer(g)?;
    let outer = g.outer_face().expect("checked");
    if !outer.is_cycle() {
        return Err(DischargeError::OuterNotCycle);
    }
    Ok(outer.vertices())
}

/// Initial charges only; the ledger has no transfers.
pub fn initial_charges(g: &PlaneGraph) -> Result<ChargeLedger, DischargeError> {
    require_connected_with_outer(g)?;
    let mut ledger = ChargeLedger::default();
    for v in g.vertices() {
        ledger
            .initial
            .insert(Element::Vertex(v), Charge::from(g.degree(v) as i64 - 4));
    }
    for (i, f) in g.faces().iter().enumerate() {
        ledger
            .initial
            .insert(Element::Face(i), Charge::from(f.len() as i64 - 4));
    }
    ledger.settle();
    Ok(ledger)
}

/// A cycle of length at most 6 whose disk holds more than the cycle and is
/// neither of the two exceptional hexagon graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DangerousCycle {
    pub cycle: Vec<Vertex>,
    pub disk: DiskSubgraph,
    pub reason: String,
}

/// Abstract isomorphism to the chorded or hubbed hexagon.
pub fn exceptional_hexagon(g: &PlaneGraph) -> Option<&'static str> {
    let n = g.vertex_count();
    if n == 6 && isomorphic_small(g, &fixtures::c6_chord()).unwrap_or(false) {
        Some("C6c")
    } else if n == 7 && isomorphic_small(g, &fixtures::c6_hub()).unwrap_or(false) {
        Some("C6v")
    } else {
        None
    }
}

pub fn dangerous_cycles(g: &PlaneGraph) -> Result<Vec<DangerousCycle>, DischargeError> {
    outer_cycle(g)?;
    let outer = g.outer_face().expect("checked");
    let mut out = vec![];
    for cycle in cycles_up_to(g, 6) {
        if outer.matches_cycle(&cycle) {
            continue;
        }
        let disk = g.disk_subgraph(&cycle)?;
        if disk.is_bare() {
            continue;
        }
        if cycle.len() == 6 && exceptional_hexagon(&disk.subgraph).is_some() {
            continue;
        }
        let reason = format!(
            "disk has {} vertices and {} edges, {} inside",
            disk.subgraph.vertex_count(),
            disk.subgraph.edge_count(),
            disk.interior().len()
        );
        out.push(DangerousCycle { cycle, disk, reason });
    }
    Ok(out)
}

/// Runs all five rules once and settles the final charges.
pub fn apply_rules(g: &PlaneGraph) -> Result<ChargeLedger, DischargeError> {
    let k_cycle = outer_cycle(g)?;
    if k_cycle.len() > 6 {
        return Err(DischargeError::OuterTooLong(k_cycle.len()));
    }
    if let Some(t) = g.find_triangle() {
        return Err(DischargeError::Triangle(t));
    }
    let k: BTreeSet<Vertex> = k_cycle.into_iter().collect();
    let internal = |v: Vertex| !k.contains(&v);
    let internal3 = |v: Vertex| internal(v) && g.degree(v) == 3;
    let faces = g.faces();
    let outer_idx = faces
        .iter()
        .position(|f| Some(f) == g.outer_face())
        .expect("outer face is a face");
    let face_of_dart = |d| {
        faces
            .iter()
            .position(|f| f.contains_dart(d))
            .expect("every dart lies on a face")
    };

    let mut ledger = initial_charges(g)?;
    let mut push = |rule, from, to, amount| {
        ledger.transfers.push(Transfer { rule, from, to, amount });
    };
    for (i, f) in faces.iter().enumerate() {
        if i == outer_idx {
            continue;
        }
        let on_f = f.vertex_set();
        for &v in &on_f {
            if k.contains(&v) && g.degree(v) == 2 {
                push(0, Element::Face(i), Element::Vertex(v), third());
            }
        }
        for &v in &on_f {
            if internal3(v) {
                push(1, Element::Face(i), Element::Vertex(v), third());
            }
        }
        if f.len() == 4 {
            let on_k: Vec<Vertex> = on_f.iter().copied().filter(|v| k.contains(v)).collect();
            if !on_k.is_empty() && on_f.iter().any(|&v| internal3(v)) {
                let amount = Charge::new(1, 3 * on_k.len() as i64);
                for v in on_k {
                    push(2, Element::Vertex(v), Element::Face(i), amount);
                }
            }
        }
        if f.len() == 5 {
            for &(u, v) in f.darts() {
                if internal3(u) && internal3(v) {
                    let j = face_of_dart((v, u));
                    if j != outer_idx && faces[j].len() == 6 {
                        push(3, Element::Face(j), Element::Face(i), third());
                    }
                }
            }
            for &u in &on_f {
                if !internal3(u) {
                    continue;
                }
                let off: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|x| !on_f.contains(x)).collect();
                if let [v] = off[..] {
                    if k.contains(&v) {
                        push(4, Element::Vertex(v), Element::Face(i), third());
                    }
                }
            }
        }
    }
    ledger.settle();
    Ok(ledger)
}

/// Why a drawing falls outside the audit's hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Input(DischargeError),
    IsOuterCycle,
    Exceptional(&'static str),
    Dangerous(Vec<Vertex>),
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Input(e) => write!(f, "{e}"),
            Hypothesis::IsOuterCycle => write!(f, "graph is its outer cycle"),
            Hypothesis::Exceptional(name) => write!(f, "graph is the exceptional {name}"),
            Hypothesis::Dangerous(c) => write!(f, "dangerous cycle {c:?}"),
        }
    }
}

/// An element whose final charge breaks the bound the argument claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimViolation {
    pub element: Element,
    pub charge: Charge,
    pub bound: Charge,
    /// A non-interfering configuration touching the element, if any.
    pub nearby: Option<Configuration>,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    /// Set when the input is outside the hypotheses; nothing else is filled in.
    pub rejected: Option<Hypothesis>,
    pub ledger: Option<ChargeLedger>,
    pub violations: Vec<ClaimViolation>,
    /// A configuration that avoids the outer face.
    pub witness: Option<Configuration>,
}

impl AuditReport {
    /// Hypotheses hold and a configuration avoiding the outer face exists.
    ///
    /// Elements below their bound are fine here: the bounds only have to
    /// hold when no such configuration exists.
    pub fn confirmed(&self) -> bool {
        self.rejected.is_none() && self.witness.is_some()
    }
}

/// Checks the audit's hypotheses, returning the first one that fails.
pub fn check_hypotheses(g: &PlaneGraph) -> Option<Hypothesis> {
    let k = match outer_cycle(g) {
        Ok(k) => k,
        Err(e) => return Some(Hypothesis::Input(e)),
    };
    if k.len() > 6 {
        return Some(Hypothesis::Input(DischargeError::OuterTooLong(k.len())));
    }
    if let Some(t) = g.find_triangle() {
        return Some(Hypothesis::Input(DischargeError::Triangle(t)));
    }
    if g.vertex_count() == k.len() && g.edge_count() == k.len() {
        return Some(Hypothesis::IsOuterCycle);
    }
    if k.len() == 6 {
        if let Some(name) = exceptional_hexagon(g) {
            return Some(Hypothesis::Exceptional(name));
        }
    }
    match dangerous_cycles(g) {
        Err(e) => Some(Hypothesis::Input(e)),
        Ok(d) => d.into_iter().next().map(|d| Hypothesis::Dangerous(d.cycle)),
    }
}

pub fn audit(g: &PlaneGraph) -> AuditReport {
    if let Some(h) = check_hypotheses(g) {
        return AuditReport {
            rejected: Some(h),
            ledger: None,
            violations: vec![],
            witness: None,
        };
    }
    let ledger = apply_rules(g).expect("hypotheses cover the rule preconditions");
    let k = g.outer_face().expect("checked").vertex_set();
    let free: Vec<Configuration> = find_all(g).into_iter().filter(|c| !interferes(c, &k)).collect();
    let outer_idx = g.faces().iter().position(|f| Some(f) == g.outer_face());

    let mut violations = vec![];
    for (&e, &charge) in &ledger.final_charges {
        let (bound, touched): (Charge, BTreeSet<Vertex>) = match e {
            Element::Face(i) if Some(i) == outer_idx => continue,
            Element::Face(i) => (Charge::from(0), g.faces()[i].vertex_set()),
            Element::Vertex(v) if k.contains(&v) => (Charge::new(-5, 3), [v].into()),
            Element::Vertex(v) => (Charge::from(0), [v].into()),
        };
        if charge < bound {
            let nearby = free
                .iter()
                .find(|c| c.interference_set().iter().any(|x| touched.contains(x)))
                .cloned();
            violations.push(ClaimViolation {
                element: e,
                charge,
                bound,
                nearby,
            });
        }
    }
    AuditReport {
        rejected: None,
        ledger: Some(ledger),
        violations,
        witness: free.into_iter().next(),
    }
}

/// Every way to draw `g` with a face bounded by a cycle of length at most 6
/// as the outer face.
pub fn outer_face_choices(g: &PlaneGraph) -> Vec<PlaneGraph> {
    g.faces()
        .iter()
        .filter(|f| f.is_cycle() && f.len() <= 6)
        .filter_map(|f| g.re_embed(f).ok())
        .collect()
}
