//! Thin wrappers around the C math library gamma functions.

/// Natural log of |Gamma(x)|.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Gamma(x) for real x, including negative non-integer arguments.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}
