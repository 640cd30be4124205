//! Independent sets in planar triangle-free graphs.
pub mod config;
pub mod corpus;
pub mod discharge;
pub mod extremal;
pub mod fixtures;
pub mod plane;
pub mod reduce;
pub mod solver;
pub mod verify;

pub use plane::{Dart, Face, GraphError, PlaneGraph, Vertex};
