//! Frugal colorings and frugal independent sets.
//!
//! A proper coloring is *t-frugal* when no color appears more than `t` times
//! in any open neighborhood; a *t-frugal independent set* is an independent
//! set meeting every neighborhood in at most `t` vertices. This crate
//! computes both parameters exactly at desk scale, builds certified
//! colorings for the graph classes and products where closed forms are
//! known, and reports every closed-form bound for a given graph.
//!
//! Module map:
//!
//! * [`graph`]: representation, named families, products, structure, I/O.
//! * [`check`]: the trusted verifiers.
//! * [`exact`]: exact branch-and-bound solvers.
//! * [`tree`]: linear-time frugal independence number of trees.
//! * [`construct`]: constructive colorings, each post-verified.
//! * [`bounds`]: bound reports, Nordhaus-Gaddum analysis, `Ψ_t` membership.
//! * [`reduction`]: the Exact-Cover-by-3-Sets gadget.
//! * [`cli`]: the command-line front end.

pub mod bounds;
pub mod check;
pub mod cli;
pub mod construct;
pub mod error;
pub mod exact;
pub mod graph;
pub mod reduction;
pub mod tree;

pub use check::{Coloring, VertexSet};
pub use error::{Error, Result};
pub use exact::{Outcome, SolveBudget};
pub use graph::{Graph, ProductKind};

/// The integer `t >= 1` bounding same-colored neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frugality(usize);

impl Frugality {
    pub fn new(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter("frugality t must be at least 1".into()));
        }
        Ok(Frugality(t))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl TryFrom<usize> for Frugality {
    type Error = Error;
    fn try_from(t: usize) -> Result<Self> {
        Frugality::new(t)
    }
}

impl Frugality {
    pub const TWO: Frugality = Frugality(2);
}
