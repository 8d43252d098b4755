//! Workbench for permutation group actions, derangement graphs, and
//! intersection density.
//!
//! An intersecting set of a permutation group is one where any two members
//! agree somewhere on the domain; equivalently, an independent set of the
//! group's derangement graph. This crate builds standard actions and their
//! direct/wreath products, computes independence numbers and intersection
//! densities exactly, decides the EKR and strict-EKR properties, and ships a
//! check suite (`verify`) that re-derives a catalogue of structural
//! identities about these objects over a fixed corpus.

pub mod action;
pub mod builders;
pub mod clique;
pub mod density;
pub mod error;
pub mod graph;
pub mod groupspec;
pub mod perm;
pub mod primitivity;
pub mod product;
pub mod rational;
pub mod search;
pub mod verify;

pub use action::GroupAction;
pub use error::{Error, Result};
pub use graph::Graph;
pub use perm::Permutation;
pub use rational::Rational;
