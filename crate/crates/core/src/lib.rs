//! Minimum status of trees and graphs against matching and domination number.
//!
//! The crate computes distance-based invariants ([`status`]), matching and
//! domination numbers ([`invariants`]), builds the extremal tree families
//! together with their closed-form bounds ([`families`]), applies the
//! status-monotone surgeries ([`transforms`]) and certifies every bound over all
//! small trees ([`enumeration`], [`verifier`]).

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod status;
pub mod transforms;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{distances_from, graph_from_edges, Graph};
