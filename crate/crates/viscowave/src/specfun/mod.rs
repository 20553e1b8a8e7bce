//! Real-argument special functions used by the creep-compliance formulas:
//! the confluent hypergeometric function 1F1, the modified exponential
//! integral Ein, the generalized exponential integral E_nu for real order and
//! complex argument off the negative real axis, and the gamma function.

mod ein;
mod expint;
mod gamma;
mod hyp1f1;

pub use ein::ein;
pub use expint::{expint, expint_scaled};
pub use gamma::{gamma, ln_gamma};
pub use hyp1f1::hyp1f1;

/// Euler-Mascheroni constant, full working precision.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A special-function value with an absolute error estimate attached.
#[derive(Clone, Copy, Debug)]
pub struct SpecialValue<T = f64> {
    pub value: T,
    pub abs_error_estimate: f64,
}

impl<T> SpecialValue<T> {
    pub(crate) fn new(value: T, abs_error_estimate: f64) -> Self {
        SpecialValue { value, abs_error_estimate }
    }
}
