//! Frequency-domain observables: attenuation A(omega), dispersion D(omega),
//! phase speed c(omega) and quality factor Q(omega), each computed by two
//! independent paths.
//!
//! The direct path evaluates the wavenumber on the imaginary axis,
//! A = Re kappa(-i omega), omega/c = -Im kappa(-i omega). The spectral path
//! integrates the density h(r) against the Poisson-type kernels
//! A = omega^2 int h/(omega^2 + r^2) dr, D = omega int r h/(omega^2 + r^2) dr.
//! Agreement between them checks the branch-cut extraction of h end to end.
//!
//! ```
//! use viscowave::models::{CreepModel, MediumSpec};
//! use viscowave::response::{response_direct, response_spectral};
//!
//! let model = CreepModel::strick_mainardi(1.0, 0.5, 0.5, 1.0).unwrap();
//! let medium = MediumSpec::new(model, 1.0).unwrap();
//! let d = response_direct(&medium, 2.0).unwrap();
//! let s = response_spectral(&medium, 2.0).unwrap();
//! assert!((d.attenuation - s.attenuation).abs() <= 1e-6 * d.attenuation);
//! ```

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::models::{MediumSpec, ModelKind};
use crate::numerics::{integrate, SingularityHint};
use crate::spectrum::{attenuation_density, integrate_against_density, wavenumber};

/// One frequency sample: A in 1/m, D in 1/m, c in m/s, Q dimensionless.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrequencyResponseRow {
    pub omega: f64,
    pub attenuation: f64,
    pub dispersion: f64,
    pub phase_speed: f64,
    pub q_factor: f64,
}

/// Which computational path produces a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResponsePath {
    Direct,
    Spectral,
}

/// Grid spacing for sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spacing {
    Log,
    Linear,
}

fn check_omega(omega: f64) -> Result<()> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::Domain(format!(
            "response: omega must be positive and finite, got {omega}"
        )));
    }
    Ok(())
}

/// Assembles a row from A and D; c and Q are derived the same way on both
/// paths so the cross-path check compares only the independent quantities.
fn assemble(medium: &MediumSpec, omega: f64, attenuation: f64, dispersion: f64) -> FrequencyResponseRow {
    let c0 = medium.front_speed();
    let phase_speed = 1.0 / (1.0 / c0 + dispersion / omega);
    let q_factor = omega / (2.0 * phase_speed * attenuation);
    FrequencyResponseRow { omega, attenuation, dispersion, phase_speed, q_factor }
}

/// A and D from kappa on the imaginary axis: A = Re kappa(-i omega),
/// D = -Im kappa(-i omega) - omega/c0. The point p = -i omega lies off the
/// negative real cut, so the principal branch applies without limits.
pub fn response_direct(medium: &MediumSpec, omega: f64) -> Result<FrequencyResponseRow> {
    check_omega(omega)?;
    let p = Complex64::new(0.0, -omega);
    let kappa = wavenumber(medium, p)?;
    let attenuation = kappa.re.max(0.0);
    let dispersion = (-kappa.im - omega / medium.front_speed()).max(0.0);
    Ok(assemble(medium, omega, attenuation, dispersion))
}

/// A and D by quadrature of h(r) against the kernels omega^2/(omega^2 + r^2)
/// and omega r/(omega^2 + r^2).
pub fn response_spectral(medium: &MediumSpec, omega: f64) -> Result<FrequencyResponseRow> {
    check_omega(omega)?;
    let (ia, id) = match medium.model().kind {
        // Infinite spectral mass with slow algebraic decay: substitute
        // r = omega tan(theta) to compactify and center resolution where the
        // kernel turns over, then A = omega int h d(theta),
        // D = omega int tan(theta) h d(theta) on (0, pi/2).
        ModelKind::Andrade { alpha, .. } => {
            let ha = |theta: f64| match attenuation_density(medium, omega * theta.tan()) {
                Ok(h) => h,
                Err(_) => f64::NAN,
            };
            let a = integrate(&ha, 0.0, FRAC_PI_2, SingularityHint::None)?.value * omega;
            // the D integrand diverges like u^(alpha - 1) where r -> infinity,
            // so put that endpoint at u = 0: within one ulp of pi/2 the grid
            // cannot represent the offsets the singularity needs, at 0 it can
            let d = integrate(
                |u: f64| {
                    let cot = 1.0 / u.tan();
                    match attenuation_density(medium, omega * cot) {
                        Ok(h) => cot * h,
                        Err(_) => f64::NAN,
                    }
                },
                0.0,
                FRAC_PI_2,
                SingularityHint::LeftAlgebraic(alpha - 1.0),
            )?
            .value
                * omega;
            (a, d)
        }
        _ => {
            let w2 = omega * omega;
            let a = integrate_against_density(medium, |r| w2 / (w2 + r * r))?;
            let d = integrate_against_density(medium, |r| omega * r / (w2 + r * r))?;
            (a, d)
        }
    };
    Ok(assemble(medium, omega, ia.max(0.0), id.max(0.0)))
}

/// Standard amplitude-decibel conversion, 20 log10(e) A per meter.
pub fn db_per_meter(attenuation: f64) -> f64 {
    20.0 * std::f64::consts::LOG10_E * attenuation
}

/// The literal log10(e^(-A)) form; differs from `db_per_meter` by the
/// conventional factor -20.
pub fn log10_amplitude_decay(attenuation: f64) -> f64 {
    -std::f64::consts::LOG10_E * attenuation
}

/// Explicit Andrade attenuation,
/// A = (omega / (c0 sqrt(2))) sqrt(|z| - 1 - b cos(phi)) with
/// z = 1 + b cos(phi) + i (a + b sin(phi)), a = J1/(J0 omega),
/// b = Gamma(1 + alpha) (J2/J0) omega^(-alpha), phi = pi alpha / 2.
/// Returns None for the other families. Serves as an independent check on
/// `response_direct`: it never touches the complex wavenumber code.
pub fn andrade_attenuation_closed_form(medium: &MediumSpec, omega: f64) -> Result<Option<f64>> {
    check_omega(omega)?;
    let ModelKind::Andrade { j0, j1, j2, alpha } = medium.model().kind else {
        return Ok(None);
    };
    let a = j1 / (j0 * omega);
    let b = crate::specfun::gamma(1.0 + alpha) * (j2 / j0) * omega.powf(-alpha);
    let phi = PI * alpha / 2.0;
    let u = 1.0 + b * phi.cos();
    let v = a + b * phi.sin();
    let modulus = u.hypot(v);
    // |z| - u = v^2/(|z| + u), stable when the loss part v is small
    let gap = if u > 0.0 { v * v / (modulus + u) } else { modulus - u };
    let c0 = medium.front_speed();
    Ok(Some(omega / (c0 * std::f64::consts::SQRT_2) * gap.sqrt()))
}

/// Frequency sweep on a log- or linearly-spaced grid.
pub fn sweep(
    medium: &MediumSpec,
    omega_min: f64,
    omega_max: f64,
    points: usize,
    spacing: Spacing,
    path: ResponsePath,
) -> Result<Vec<FrequencyResponseRow>> {
    if !(omega_min > 0.0 && omega_min < omega_max) {
        return Err(Error::Domain(format!(
            "sweep: need 0 < omega_min < omega_max, got [{omega_min}, {omega_max}]"
        )));
    }
    if points < 2 {
        return Err(Error::Domain(format!("sweep: need at least 2 points, got {points}")));
    }
    let mut rows = Vec::with_capacity(points);
    for i in 0..points {
        let s = i as f64 / (points - 1) as f64;
        let omega = match spacing {
            Spacing::Log => omega_min * (omega_max / omega_min).powf(s),
            Spacing::Linear => omega_min + s * (omega_max - omega_min),
        };
        let row = match path {
            ResponsePath::Direct => response_direct(medium, omega),
            ResponsePath::Spectral => response_spectral(medium, omega),
        }
        .map_err(|e| Error::Convergence(format!("sweep failed at omega = {omega:e}: {e}")))?;
        rows.push(row);
    }
    Ok(rows)
}
