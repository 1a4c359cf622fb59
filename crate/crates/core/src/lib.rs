//! Exact metric-geometry computations at desk scale.
//!
//! The crate computes exact Hausdorff and Euclidean-Hausdorff distances
//! between finite subsets of the real line, exact Gromov-Hausdorff /
//! network distances between small finite spaces via correspondence
//! search, and materializes a family of related constructions as
//! executable, property-tested operations: distance-set invariants and
//! quantization, Kuratowski embeddings, two-class interval covers with
//! the absorption combinator, a coarse embedding of sup-metric cubes
//! into finite point sets, and Assouad-dimension witness families.
//!
//! Everything is pure and immutable after construction; all randomized
//! verification is seeded and reproducible per trial.

pub mod assouad;
pub mod cli;
pub mod covers;
pub mod embeddings;
pub mod gromov;
pub mod hausdorff1d;
pub mod io;
pub mod metric;
pub mod rng;

/// Absolute tolerance for axiom checks and approximate equality.
///
/// Inputs are desk-scale doubles; constructions are exact in structure,
/// so a fixed absolute tolerance is appropriate.
pub const EPS: f64 = 1e-9;
