//! Wavefront-local behavior: shock classification, the jump amplitude
//! carried by the front, the profile H(tau, r) behind it, near-front and
//! full Bromwich Green's functions, and pulse propagation.
//!
//! The factorization kappa(p) = p/c0 + p g~(p) splits the propagator into
//! the pure arrival delay e^(-p r/c0) and the shape factor e^(-p g~(p) r),
//! whose inverse transform H(tau, r) rises from e^(-g(0+) r) toward 1. Media
//! with a finite creep rate at 0+ carry a jump e^(-g(0+) r)/(2 rho) at the
//! front; Andrade media with J2 > 0 have g(0+) = +infinity and are smooth
//! there.
//!
//! ```
//! use viscowave::models::{CreepModel, MediumSpec};
//! use viscowave::wavefront::{jump_amplitude, supports_shock};
//!
//! let model = CreepModel::jls(1.0, 1.0, 0.5, 1.0).unwrap();
//! let medium = MediumSpec::new(model, 1.0).unwrap();
//! assert!(supports_shock(&medium));
//! assert!(jump_amplitude(&medium, 2.0).unwrap() < jump_amplitude(&medium, 1.0).unwrap());
//! ```

use crate::error::{Error, Result};
use crate::models::MediumSpec;
use crate::numerics::{inverse_laplace, InversionConfig};
use crate::spectrum::{g_tilde, g_value, g_zero};

/// H(tau, r) samples behind a front at a fixed distance.
#[derive(Clone, Debug)]
pub struct WavefrontProfile {
    pub distance: f64,
    pub arrival_time: f64,
    /// e^(-g(0+) distance)/(2 rho) for shock-supporting media, 0 otherwise.
    pub jump: f64,
    pub tau_grid: Vec<f64>,
    /// H(tau, distance), dimensionless in [0, 1], non-decreasing.
    pub h_values: Vec<f64>,
    /// H/(2 rho), the Green's function values at arrival_time + tau.
    pub green_values: Vec<f64>,
}

/// True iff the front carries a jump: J'(0+) finite, equivalently bounded
/// attenuation. Holds for Strick-Mainardi and JLS; fails for Andrade with
/// J2 > 0 (and alpha < 1, where the creep rate diverges at 0+).
pub fn supports_shock(medium: &MediumSpec) -> bool {
    medium.model().creep_rate_at_zero().is_finite()
}

/// Jump amplitude e^(-g(0+) distance)/(2 rho) at the front.
pub fn jump_amplitude(medium: &MediumSpec, distance: f64) -> Result<f64> {
    if !(distance >= 0.0) {
        return Err(Error::Domain(format!(
            "jump_amplitude: distance >= 0 required, got {distance}"
        )));
    }
    if !supports_shock(medium) {
        return Err(Error::UnsupportedModel(
            "jump_amplitude: the medium does not support shocks (unbounded creep rate at 0+)"
                .into(),
        ));
    }
    Ok((-g_zero(medium) * distance).exp() / (2.0 * medium.rho()))
}

/// Laplace transform of H(., r): e^(-p g~(p) r)/p.
fn profile_transform(medium: &MediumSpec, r: f64) -> impl Fn(num_complex::Complex64) -> num_complex::Complex64 + '_ {
    move |p| (-p * g_tilde(medium, p).unwrap() * r).exp() / p
}

/// H(tau, r) at a single lag by numerical inversion; tau = 0 returns the
/// limit e^(-g(0+) r) directly.
pub fn profile_value(
    medium: &MediumSpec,
    distance: f64,
    tau: f64,
    config: &InversionConfig,
) -> Result<f64> {
    if !(distance > 0.0) {
        return Err(Error::Domain(format!(
            "profile_value: distance > 0 required, got {distance}"
        )));
    }
    if !(tau >= 0.0) {
        return Err(Error::Domain(format!("profile_value: tau >= 0 required, got {tau}")));
    }
    if tau == 0.0 {
        let g0 = g_zero(medium);
        return Ok(if g0.is_finite() { (-g0 * distance).exp() } else { 0.0 });
    }
    let h = inverse_laplace(profile_transform(medium, distance), tau, config)
        .map_err(|e| Error::Convergence(format!("profile inversion at tau = {tau:e}: {e}")))?;
    Ok(h.clamp(0.0, 1.0))
}

/// Profile over a sorted lag grid at fixed distance.
pub fn front_profile(
    medium: &MediumSpec,
    distance: f64,
    tau_grid: &[f64],
) -> Result<WavefrontProfile> {
    if tau_grid.is_empty() || tau_grid[0] < 0.0 || tau_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition(
            "front_profile: tau_grid must be nonempty, nonnegative and sorted".into(),
        ));
    }
    let config = InversionConfig::default();
    let mut h_values = Vec::with_capacity(tau_grid.len());
    for &tau in tau_grid {
        h_values.push(profile_value(medium, distance, tau, &config)?);
    }
    let two_rho = 2.0 * medium.rho();
    let green_values = h_values.iter().map(|h| h / two_rho).collect();
    let jump = if supports_shock(medium) {
        (-g_zero(medium) * distance).exp() / two_rho
    } else {
        0.0
    };
    Ok(WavefrontProfile {
        distance,
        arrival_time: distance / medium.front_speed(),
        jump,
        tau_grid: tau_grid.to_vec(),
        h_values,
        green_values,
    })
}

/// Near-front Green's function (1/(2 rho)) e^(-g(t - |x|/c0) |x|); zero ahead
/// of the front.
pub fn green_near_front(medium: &MediumSpec, t: f64, x: f64) -> Result<f64> {
    let r = x.abs();
    let tau = t - r / medium.front_speed();
    if tau < 0.0 {
        return Ok(0.0);
    }
    let two_rho = 2.0 * medium.rho();
    if tau == 0.0 {
        let g0 = g_zero(medium);
        return Ok(if g0.is_finite() { (-g0 * r).exp() / two_rho } else { 0.0 });
    }
    if r == 0.0 {
        return Ok(1.0 / two_rho);
    }
    Ok((-g_value(medium, tau)? * r).exp() / two_rho)
}

/// Green's function by Bromwich inversion of the full propagator
/// (1 + c0 g~(p)) e^(-p g~(p) r)/(2 rho p), evaluated at lag t - |x|/c0.
///
/// The prefactor follows from kappa(p)/p^2 = (1/c0 + g~(p))/p in Eq. (5)
/// after normalizing on the elastic limit, where the exact answer is the
/// step theta(t - |x|/c0)/(2 rho).
pub fn green_bromwich(medium: &MediumSpec, t: f64, x: f64, margin: f64) -> Result<f64> {
    if !(margin > 0.0) {
        return Err(Error::Precondition(format!(
            "green_bromwich: margin > 0 required, got {margin}"
        )));
    }
    let r = x.abs();
    let c0 = medium.front_speed();
    let tau = t - r / c0;
    if tau < margin {
        return Err(Error::Precondition(format!(
            "green_bromwich: t must exceed arrival by the margin (lag {tau:e} < {margin:e})"
        )));
    }
    let config = InversionConfig::default();
    let two_rho = 2.0 * medium.rho();
    let value = inverse_laplace(
        |p| {
            let g = g_tilde(medium, p).unwrap();
            (1.0 + c0 * g) * (-p * g * r).exp() / p
        },
        tau,
        &config,
    )?;
    Ok(value / two_rho)
}

/// Response at distance x to a pulse f sampled uniformly with step dt:
/// u(t) = a(x) f(t - |x|/c0) + int f'(t - s) Gc(s) ds, where Gc is the
/// continuous part of the near-front Green's function. Splitting off the
/// jump term keeps the trapezoid convolution second-order across the front.
pub fn propagate_pulse(
    medium: &MediumSpec,
    pulse_samples: &[f64],
    dt: f64,
    x: f64,
) -> Result<Vec<f64>> {
    if !(dt > 0.0) {
        return Err(Error::Domain(format!("propagate_pulse: dt > 0 required, got {dt}")));
    }
    if pulse_samples.len() < 2 {
        return Err(Error::Precondition(
            "propagate_pulse: need at least 2 pulse samples".into(),
        ));
    }
    if pulse_samples[0] != 0.0 {
        return Err(Error::Precondition(format!(
            "propagate_pulse: the pulse must start from rest, f(0) = {}",
            pulse_samples[0]
        )));
    }
    if pulse_samples.iter().any(|v| !v.is_finite()) {
        return Err(Error::Precondition("propagate_pulse: pulse samples must be finite".into()));
    }
    let n = pulse_samples.len();
    let r = x.abs();
    let arrival = r / medium.front_speed();
    let jump = if supports_shock(medium) { jump_amplitude(medium, r)? } else { 0.0 };

    // f' by central differences, one-sided at the ends
    let mut rate = vec![0.0; n];
    rate[0] = (pulse_samples[1] - pulse_samples[0]) / dt;
    rate[n - 1] = (pulse_samples[n - 1] - pulse_samples[n - 2]) / dt;
    for i in 1..n - 1 {
        rate[i] = (pulse_samples[i + 1] - pulse_samples[i - 1]) / (2.0 * dt);
    }

    // continuous Green's part on the sample grid
    let mut gc = vec![0.0; n];
    for (i, slot) in gc.iter_mut().enumerate() {
        let t = i as f64 * dt;
        if t >= arrival {
            *slot = green_near_front(medium, t, x)? - jump;
        }
    }

    // f interpolated at the retarded time t - arrival
    let delayed = |t: f64| -> f64 {
        let s = t - arrival;
        if s <= 0.0 {
            return 0.0;
        }
        let pos = s / dt;
        let k = (pos.floor() as usize).min(n - 1);
        if k + 1 >= n {
            return pulse_samples[n - 1];
        }
        let frac = pos - k as f64;
        pulse_samples[k] * (1.0 - frac) + pulse_samples[k + 1] * frac
    };

    let mut out = vec![0.0; n];
    for i in 0..n {
        let t = i as f64 * dt;
        if t < arrival {
            continue;
        }
        // trapezoid over s in [0, t] of f'(t - s) Gc(s)
        let mut conv = 0.0;
        for k in 0..=i {
            let w = if k == 0 || k == i { 0.5 } else { 1.0 };
            conv += w * rate[i - k] * gc[k];
        }
        out[i] = jump * delayed(t) + conv * dt;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::CreepModel;
    use crate::numerics::InversionAlgorithm;
    use crate::spectrum::total_mass;
    use approx::assert_relative_eq;

    fn jls_unit() -> MediumSpec {
        MediumSpec::new(CreepModel::jls(1.0, 1.0, 0.0, 1.0).unwrap(), 1.0).unwrap()
    }

    fn fig3_medium(alpha: f64) -> MediumSpec {
        // c0 = 1 km/s, J0 = 1, rho = 1/(c0^2 J0)
        let c0 = 1000.0;
        let rho = 1.0 / (c0 * c0);
        MediumSpec::new(CreepModel::strick_mainardi(1.0, 1.0, alpha, 1.0).unwrap(), rho).unwrap()
    }

    fn andrade_medium() -> MediumSpec {
        MediumSpec::new(CreepModel::andrade(1.0, 0.0, 1.0, 1.0 / 3.0).unwrap(), 1.0).unwrap()
    }

    #[test]
    fn shock_classification() {
        assert!(supports_shock(&fig3_medium(0.5)));
        assert!(supports_shock(&jls_unit()));
        assert!(!supports_shock(&andrade_medium()));
    }

    #[test]
    fn jump_amplitude_examples() {
        let m = jls_unit();
        // g(0+) = N = 0.5, checked against the mass oracle
        assert_relative_eq!(g_zero(&m), total_mass(&m).unwrap(), max_relative = 1e-10);
        assert_relative_eq!(
            jump_amplitude(&m, 2.0).unwrap(),
            (-1.0f64).exp() / 2.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(jump_amplitude(&m, 0.0).unwrap(), 0.5, max_relative = 1e-14);
        assert!(jump_amplitude(&andrade_medium(), 1.0).is_err());
        assert!(jump_amplitude(&m, -1.0).is_err());
    }

    #[test]
    fn strick_jump_log_slope() {
        // ln(2 rho jump) = -M0 Omega distance/(2 c0 J0), slope by regression
        let m = fig3_medium(0.5);
        let expected = -1.0 / (2.0 * 1000.0);
        let d: Vec<f64> = (1..=6).map(|k| 1000.0 * k as f64).collect();
        let y: Vec<f64> = d
            .iter()
            .map(|&x| (jump_amplitude(&m, x).unwrap() * 2.0 * m.rho()).ln())
            .collect();
        let n = d.len() as f64;
        let (sx, sy) = (d.iter().sum::<f64>(), y.iter().sum::<f64>());
        let sxx: f64 = d.iter().map(|x| x * x).sum();
        let sxy: f64 = d.iter().zip(&y).map(|(x, v)| x * v).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        assert_relative_eq!(slope, expected, max_relative = 1e-10);
        assert!(jump_amplitude(&m, 2000.0).unwrap() < jump_amplitude(&m, 1000.0).unwrap());
    }

    #[test]
    fn elastic_profile_is_unity() {
        let m = MediumSpec::new(
            CreepModel::strick_mainardi(1.0, 0.0, 0.5, 1.0).unwrap(),
            1.0,
        )
        .unwrap();
        let profile = front_profile(&m, 3.0, &[0.0, 0.5, 1.0, 5.0]).unwrap();
        for &h in &profile.h_values {
            assert_relative_eq!(h, 1.0, max_relative = 1e-9);
        }
        assert_relative_eq!(profile.arrival_time, 3.0, max_relative = 1e-14);
    }

    #[test]
    fn profile_starts_at_jump_and_rises() {
        let m = jls_unit();
        let taus: Vec<f64> = (0..36).map(|k| 1e-5 * 1.5f64.powi(k)).collect();
        let profile = front_profile(&m, 1.0, &taus).unwrap();
        let h0 = (-g_zero(&m) * 1.0f64).exp();
        assert_relative_eq!(profile.h_values[0], h0, max_relative = 1e-4);
        for pair in profile.h_values.windows(2) {
            assert!(pair[1] >= pair[0] - 1e-9, "{:?}", profile.h_values);
        }
        for &h in &profile.h_values {
            assert!((0.0..=1.0).contains(&h));
        }
        assert_relative_eq!(profile.jump, h0 / 2.0, max_relative = 1e-12);
    }

    #[test]
    fn fig3_profiles_monotone() {
        for &alpha in &[0.5, -0.5] {
            let m = fig3_medium(alpha);
            let taus: Vec<f64> = (0..25).map(|k| 0.01 * k as f64).collect();
            let profile = front_profile(&m, 5000.0, &taus).unwrap();
            assert_relative_eq!(
                profile.h_values[0],
                (-g_zero(&m) * 5000.0f64).exp(),
                max_relative = 1e-6
            );
            for pair in profile.h_values.windows(2) {
                assert!(pair[1] >= pair[0] - 1e-9);
            }
        }
    }

    #[test]
    fn inversion_algorithms_agree_on_profile() {
        let m = jls_unit();
        let dehoog = InversionConfig::default();
        let talbot = InversionConfig {
            algorithm: InversionAlgorithm::Talbot,
            ..InversionConfig::default()
        };
        for &tau in &[0.05, 0.3, 1.0, 4.0] {
            let a = profile_value(&m, 1.0, tau, &dehoog).unwrap();
            let b = profile_value(&m, 1.0, tau, &talbot).unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-6);
        }
    }

    #[test]
    fn near_front_law_matches_profile() {
        // H(tau, r) ~ e^(-g(tau) r) within 1% for Omega tau <= 0.01
        let m = jls_unit();
        let config = InversionConfig::default();
        for &tau in &[1e-3, 5e-3, 1e-2] {
            let h = profile_value(&m, 1.0, tau, &config).unwrap();
            let approx = (-g_value(&m, tau).unwrap() * 1.0f64).exp();
            assert_relative_eq!(h, approx, max_relative = 1e-2);
        }
    }

    #[test]
    fn green_near_front_causal_jump() {
        let m = jls_unit();
        let x = 2.0;
        let arrival = 2.0;
        assert_eq!(green_near_front(&m, arrival - 1e-9, x).unwrap(), 0.0);
        assert_relative_eq!(
            green_near_front(&m, arrival, x).unwrap(),
            jump_amplitude(&m, x).unwrap(),
            max_relative = 1e-14
        );
        // symmetric in x
        assert_eq!(
            green_near_front(&m, 3.0, 2.0).unwrap(),
            green_near_front(&m, 3.0, -2.0).unwrap()
        );
    }

    #[test]
    fn andrade_green_vanishes_at_front() {
        let m = andrade_medium();
        assert_eq!(green_near_front(&m, 1.0, 1.0).unwrap(), 0.0);
        let just_after = green_near_front(&m, 1.0 + 1e-6, 1.0).unwrap();
        assert!(just_after < 1e-10, "smooth front, got {just_after}");
        assert!(green_near_front(&m, 2.0, 1.0).unwrap() > 0.0);
    }

    #[test]
    fn bromwich_elastic_step() {
        let m = MediumSpec::new(
            CreepModel::strick_mainardi(1.0, 0.0, 0.5, 1.0).unwrap(),
            2.0,
        )
        .unwrap();
        let v = green_bromwich(&m, 5.0, 1.0, 1e-3).unwrap();
        assert_relative_eq!(v, 0.25, max_relative = 1e-8);
    }

    #[test]
    fn bromwich_matches_near_front_law() {
        // the full inversion carries the continuous remainder (the c0 g~ term
        // in the propagator), which grows linearly behind the front; 2%
        // agreement holds out to Omega tau ~ 0.03 on these media
        for m in [jls_unit(), fig3_medium(0.5)] {
            let r = if m.front_speed() > 1.0 { 1000.0 } else { 1.0 };
            let arrival = r / m.front_speed();
            for &tau in &[0.01, 0.02, 0.03] {
                let full = green_bromwich(&m, arrival + tau, r, 1e-3 * arrival).unwrap();
                let near = green_near_front(&m, arrival + tau, r).unwrap();
                assert_relative_eq!(full, near, max_relative = 2e-2);
            }
        }
    }

    #[test]
    fn bromwich_margin_enforced() {
        let m = jls_unit();
        assert!(green_bromwich(&m, 1.0, 1.0, 1e-3).is_err());
        assert!(green_bromwich(&m, 2.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn elastic_pulse_is_delayed_copy() {
        let m = MediumSpec::new(
            CreepModel::strick_mainardi(1.0, 0.0, 0.5, 1.0).unwrap(),
            1.0,
        )
        .unwrap();
        let dt = 0.01;
        let n = 400;
        // smooth pulse starting from rest, arrival at exactly 100 samples
        let f: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64 * dt;
                (t * t) * (-t).exp()
            })
            .collect();
        let u = propagate_pulse(&m, &f, dt, 1.0).unwrap();
        for i in 0..n {
            let t = i as f64 * dt;
            let expected = if t >= 1.0 { 0.5 * (t - 1.0).powi(2) * (-(t - 1.0)).exp() } else { 0.0 };
            assert!((u[i] - expected).abs() <= 1e-8, "t={t}: {} vs {expected}", u[i]);
        }
    }

    #[test]
    fn ramp_slope_equals_jump() {
        let m = jls_unit();
        let dt = 1e-3;
        let n = 1200;
        let f: Vec<f64> = (0..n).map(|i| i as f64 * dt).collect();
        let u = propagate_pulse(&m, &f, dt, 1.0).unwrap();
        // u(arrival + tau) ~ jump * tau with an O(tau^2) continuous-part
        // correction, so the slope is read just behind the front
        let arrival_idx = 1000;
        let tau = 2.0 * dt;
        let slope = u[arrival_idx + 2] / tau;
        assert_relative_eq!(slope, jump_amplitude(&m, 1.0).unwrap(), max_relative = 1e-3);
    }

    #[test]
    fn andrade_pedestal_delays_peak() {
        let m = andrade_medium();
        let dt = 0.02;
        let n = 500;
        let t0 = 1.0;
        let width = 0.1;
        // Gaussian-derivative pulse centered at t0, f(0) ~ 0
        let f: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64 * dt;
                let z = (t - t0) / width;
                let v = -z * (-0.5 * z * z).exp();
                if i == 0 { 0.0 } else { v }
            })
            .collect();
        let x = 2.0;
        let arrival = 2.0;
        let u = propagate_pulse(&m, &f, dt, x).unwrap();
        let peak_idx = u
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .unwrap()
            .0;
        let peak_time = peak_idx as f64 * dt;
        assert!(peak_time > arrival + 10.0 * dt, "peak at {peak_time}, arrival {arrival}");
        // no jump rides the front: the onset is smooth
        let onset = u[(arrival / dt) as usize + 1].abs();
        assert!(onset < 1e-6, "smooth onset expected, got {onset}");
    }

    #[test]
    fn pulse_preconditions() {
        let m = jls_unit();
        assert!(propagate_pulse(&m, &[1.0, 2.0], 0.1, 1.0).is_err());
        assert!(propagate_pulse(&m, &[0.0, 1.0], 0.0, 1.0).is_err());
        assert!(propagate_pulse(&m, &[0.0], 0.1, 1.0).is_err());
        assert!(propagate_pulse(&m, &[0.0, f64::NAN], 0.1, 1.0).is_err());
    }

    #[test]
    fn causality_before_arrival() {
        let m = jls_unit();
        let dt = 0.05;
        let f: Vec<f64> = (0..100).map(|i| (i as f64 * dt).sin().powi(2)).collect();
        let u = propagate_pulse(&m, &f, dt, 2.0).unwrap();
        for i in 0..40 {
            assert_eq!(u[i], 0.0, "noncausal output at index {i}");
        }
    }
}
