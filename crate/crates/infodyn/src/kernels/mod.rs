//! Numeric primitives: digamma and friends, Chebyshev-metric k-NN search,
//! seeded random sampling, one-dimensional quadrature.

mod digamma;
mod knn;
pub mod matrix;
mod quad;
mod rng;
mod special;

pub use digamma::digamma;
pub use knn::{count_within, knn_radius, PointCloud, SpatialIndex};
pub use matrix::Matrix;
pub use quad::{integrate_1d, UpperBound};
pub use rng::{mix64, sample_standard, uniform_usize, RngHandle, StandardDist};
pub use special::{ln_gamma, regularized_incomplete_beta, student_t_cdf};
