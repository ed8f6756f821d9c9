//! Exact permanents and permanental polynomials of graphs, oriented graphs
//! and skew-symmetric matrices, with orientation sweeps that check how the
//! permanental polynomial depends on the orientation.

pub mod cli;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod orientations;
pub mod permanent;
pub mod poly;
pub mod rational;
pub mod sachs;

pub use error::{Error, Result};
pub use graph::{Graph, OrientedGraph, WeightedOrientedGraph};
pub use matrix::{Matrix, SkewMatrix};
pub use poly::Poly;
pub use rational::Rational;
