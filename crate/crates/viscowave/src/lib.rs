//! Attenuation, dispersion and wavefront analysis for viscoelastic media
//! whose creep compliance is a Bernstein function.
//!
//! The library covers the Strick-Mainardi, Becker, Jeffreys-Lomnitz-Strick
//! and Andrade creep-compliance families. For each medium it evaluates the
//! complex wavenumber, the dispersion-attenuation spectral density, the
//! frequency response (attenuation, dispersion, phase speed, quality factor)
//! by two independent computational paths, and the behavior of the Green's
//! function near the wavefront, including the jump discontinuity carried by
//! shock-supporting media.
//!
//! ```
//! use viscowave::models::{CreepModel, MediumSpec};
//!
//! let model = CreepModel::jls(1.0, 1.0, 0.0, 1.0).unwrap();
//! let medium = MediumSpec::new(model, 1.0).unwrap();
//! assert_eq!(medium.front_speed(), 1.0);
//! ```

pub mod cli;
pub mod error;
pub mod models;
pub mod numerics;
pub mod response;
pub mod specfun;
pub mod spectrum;
pub mod wavefront;

pub use error::{Error, Result};
