//! Greedy power assignment along a path and its summary profile.
//!
//! Power is pushed forward: the first vertex gets zero and every later vertex
//! receives exactly the deficit of its incoming edge. For a path this is the
//! cheapest activating assignment, and with integer weights every emitted
//! power is an integer. `opt` is the total cost, `phi` the leftover power at
//! the final vertex, available to discount a prolonging edge.

use crate::graph::{Path, PowerAssignment, WeightedGraph};
use crate::rational::Rational;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathProfile {
    pub opt: Rational,
    pub phi: Rational,
}

impl PathProfile {
    pub fn empty() -> Self {
        PathProfile { opt: Rational::zero(), phi: Rational::zero() }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GreedyError {
    #[error("greedy assignment requires unit activation coefficients")]
    NonUnitCoefficients,
}

/// The greedy assignment along `path`: `p(v0) = 0`,
/// `p(vi) = max(0, w(v(i-1) vi) - p(v(i-1)))`, everything off the path zero.
pub fn greedy_assign(path: &Path, g: &WeightedGraph) -> Result<PowerAssignment, GreedyError> {
    let mut assignment = PowerAssignment::new();
    let mut carry = Rational::zero();
    for (i, &eid) in path.edges.iter().enumerate() {
        let e = g.edge(eid);
        if !e.has_unit_coefficients() {
            return Err(GreedyError::NonUnitCoefficients);
        }
        let deficit = &e.weight - &carry;
        carry = if deficit.is_positive() { deficit } else { Rational::zero() };
        assignment.set(path.vertices[i + 1], carry.clone());
    }
    Ok(assignment)
}

/// `opt` and `phi` of the path, computed by folding [`extend`] edge by edge.
pub fn profile(path: &Path, g: &WeightedGraph) -> Result<PathProfile, GreedyError> {
    let mut prof = PathProfile::empty();
    for &eid in &path.edges {
        let e = g.edge(eid);
        if !e.has_unit_coefficients() {
            return Err(GreedyError::NonUnitCoefficients);
        }
        prof = extend(&prof, &e.weight);
    }
    Ok(prof)
}

/// Profile of the path prolonged by one edge of weight `w_new`:
/// `phi' = max(0, w_new - phi)`, `opt' = opt + phi'`.
pub fn extend(prof: &PathProfile, w_new: &Rational) -> PathProfile {
    debug_assert!(w_new.is_positive(), "edge weights are strictly positive");
    let deficit = w_new - &prof.phi;
    let phi = if deficit.is_positive() { deficit } else { Rational::zero() };
    PathProfile { opt: &prof.opt + &phi, phi }
}
