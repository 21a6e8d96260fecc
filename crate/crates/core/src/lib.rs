//! Solvers and instance generators for node-powered activation paths and
//! disk-barrier shrinkage.
//!
//! The crate has two halves. The graph half models activation networks:
//! powers on vertices activate edges, and the goal is the cheapest power
//! assignment whose activated edges connect two terminals. The geometry half
//! builds families of open disks whose shrink-to-pass structure mirrors the
//! graph problem, plus the machinery to translate solutions and certificates
//! between the two.

pub mod bridge;
pub mod geom;
pub mod graph;
pub mod greedy;
pub mod mbs;
pub mod rational;
pub mod reduce;
pub mod render;
pub mod solve;
pub mod subsetsum;

pub use graph::{Path, PowerAssignment, WeightedGraph};
pub use rational::Rational;
pub use solve::{PowerDomain, SolveResult};
pub use subsetsum::SubsetSumInstance;
