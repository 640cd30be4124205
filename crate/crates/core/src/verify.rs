//! Independent-set checking by a plain scan of the edge list.
//!
//! Kept deliberately separate from the lifting code so that a bug there
//! cannot hide itself here.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::plane::{PlaneGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("edge {0}-{1} has both ends in the set")]
    Edge(Vertex, Vertex),
}

/// Checks that `set` is an independent set of `g`.
pub fn check_independent(g: &PlaneGraph, set: &BTreeSet<Vertex>) -> Result<(), Violation> {
    let vertices: BTreeSet<Vertex> = g.vertices().collect();
    if let Some(&v) = set.iter().find(|v| !vertices.contains(v)) {
        return Err(Violation::UnknownVertex(v));
    }
    for (u, v) in g.edges() {
        if set.contains(&u) && set.contains(&v) {
            return Err(Violation::Edge(u, v));
        }
    }
    Ok(())
}

pub fn is_independent(g: &PlaneGraph, set: &BTreeSet<Vertex>) -> bool {
    check_independent(g, set).is_ok()
}
