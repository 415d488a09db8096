//! Statistical verification layer: complex Ginibre sampling, a self-contained
//! Hermitian eigensolver, and deterministic parallel moment estimation over
//! the Wishart and fixed-trace ensembles.

pub mod eigen;
pub mod estimate;
pub mod rng;
pub mod sample;

pub use eigen::hermitian_eigenvalues;
pub use estimate::{estimate_moments, Estimate, EstimatorReport};
pub use sample::{draw_sample, sample_ginibre, SpectralSample};
