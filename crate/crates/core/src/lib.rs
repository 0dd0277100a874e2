//! Bifurcation analysis of a predator–prey system with cooperative hunting
//! and a sigmoid (Holling III) functional response.

pub mod bifurcation;
pub mod coeffs;
pub mod dynamics;
pub mod equilibria;
pub mod error;
pub mod hopf;
pub mod model;
pub mod polyalg;

pub use error::{Error, Result};
pub use model::{DimensionalParams, Mat2, ParamSet, State};
