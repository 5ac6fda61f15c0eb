//! Hydroelastic dynamics of compound shells of revolution partially filled
//! with an ideal incompressible liquid.
//!
//! The library reduces the interior Neumann problem for the dynamic liquid
//! pressure to one-dimensional boundary integral equations over the meridian,
//! discretized by collocation at Chebyshev nodes with quadrature that treats
//! the logarithmic kernel part exactly, and couples the resulting added-mass
//! matrices to a Ritz thin-shell model of the dry structure.

pub mod discretization;
pub mod geometry;
pub mod kernels;
pub mod math;

pub use geometry::{Meridian, MeridianPoint, SegmentSpec, SurfaceFrame};
