//! Spectral bounds on the maximum k-cut of weighted graphs.
//!
//! * [`graph`]: weighted simple graphs, named families, cut weights and
//!   partition contraction.
//! * [`spectra`]: cyclic Jacobi eigensolver and the extreme adjacency and
//!   Laplacian eigenvalues.
//! * [`bounds`]: Turán numbers, the smallest-eigenvalue and Laplacian upper
//!   bounds, the r-partite ratio lower bound and the chromatic bound.
//! * [`solvers`]: exact enumeration, greedy and local-search cuts, the
//!   balanced class-grouping cut and the quadratic-form identity check.
//! * [`extremal`]: graphs that attain the smallest-eigenvalue bound.
//! * [`cli`]: the `maxkcut` command-line front end.
//!
//! Vertices are 0-based everywhere.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod solvers;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Classes, CutPartition, Family, Graph};
