//! Shared numerical engines: double-exponential quadrature, forward Laplace
//! transforms by quadrature, numerical inverse Laplace transforms (de Hoog
//! and fixed-Talbot), and the creep/relaxation duality verifier.

mod duality;
mod laplace;
mod quadrature;

pub use duality::{verify_duality, DualityReport};
pub use laplace::{
    forward_laplace, inverse_laplace, InversionAlgorithm, InversionConfig,
};
pub use quadrature::{integrate, integrate_complex, QuadratureResult, SingularityHint};
