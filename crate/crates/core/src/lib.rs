//! Solving obliging games with Emerson-Lei strong and weak objectives.
//!
//! The main entry point is [`solver::solve`], which computes the set of nodes from
//! which player ∃ has a gracious strategy together with a certificate for every won
//! `(node, permutation)` pair. [`strategy::extract`] turns a solve result into a finite
//! Mealy machine and [`strategy::verify`] checks it independently.

pub mod game;
pub mod io;
pub mod certificate;
pub mod emptiness;
pub mod lar;
pub mod solver;
pub mod strategy;
pub mod suite;
pub mod cli;
