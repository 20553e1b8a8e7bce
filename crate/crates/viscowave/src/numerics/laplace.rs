//! Forward Laplace transforms by quadrature and numerical inversion.
//!
//! Two inversion algorithms are provided. The de Hoog accelerated Fourier
//! series method tolerates jump discontinuities in the original and is the
//! default; the fixed-Talbot contour assumes a smooth original and serves as
//! an independent validation path.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::quadrature::{integrate_complex, SingularityHint};

/// Forward transform int_0^inf e^(-pt) f(t) dt for Re p > 0, computed over
/// dyadic windows until the tail contribution is negligible.
pub fn forward_laplace<F>(f: F, p: Complex64) -> Result<Complex64>
where
    F: Fn(f64) -> f64,
{
    if p.re <= 0.0 {
        return Err(Error::Precondition(format!(
            "forward Laplace transform requires Re p > 0, got {p}"
        )));
    }
    let mut total = Complex64::new(0.0, 0.0);
    let mut lo = 0.0;
    let mut hi = 1.0_f64.min(10.0 / p.re);
    let mut quiet = 0;
    for _ in 0..64 {
        let (window, _, _) = integrate_complex(
            |t| (-p * t).exp() * f(t),
            lo,
            hi,
            SingularityHint::None,
        )?;
        total += window;
        if window.norm() <= 1e-14 * total.norm().max(1e-300) {
            quiet += 1;
            if quiet >= 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
        // once e^(-Re p * t) has decayed to underflow the tail is exactly zero
        if p.re * hi > 700.0 {
            return Ok(total);
        }
        lo = hi;
        hi *= 2.0;
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InversionAlgorithm {
    DeHoog,
    Talbot,
}

#[derive(Clone, Copy, Debug)]
pub struct InversionConfig {
    pub algorithm: InversionAlgorithm,
    /// Number of expansion terms (de Hoog: continued-fraction pairs,
    /// Talbot: contour nodes). Minimum 8.
    pub terms: usize,
    pub tolerance: f64,
    /// Contour parameter: the de Hoog series period is `scale * t`.
    pub scale: f64,
}

impl Default for InversionConfig {
    fn default() -> Self {
        InversionConfig {
            algorithm: InversionAlgorithm::DeHoog,
            terms: 40,
            tolerance: 1e-9,
            scale: 2.0,
        }
    }
}

impl InversionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.terms < 8 {
            return Err(Error::Precondition("inversion needs at least 8 terms".into()));
        }
        if !(1e-14..=1e-2).contains(&self.tolerance) {
            return Err(Error::Precondition(format!(
                "inversion tolerance {} outside [1e-14, 1e-2]",
                self.tolerance
            )));
        }
        if self.scale <= 0.0 {
            return Err(Error::Precondition("inversion scale must be positive".into()));
        }
        Ok(())
    }
}

/// Numerical inverse Laplace transform of `transform` at time `t > 0`.
///
/// `transform` must be analytic and evaluable for Re p > 0.
pub fn inverse_laplace<F>(transform: F, t: f64, config: &InversionConfig) -> Result<f64>
where
    F: Fn(Complex64) -> Complex64,
{
    config.validate()?;
    if t <= 0.0 {
        return Err(Error::Domain(format!("inverse Laplace requires t > 0, got {t}")));
    }
    match config.algorithm {
        InversionAlgorithm::DeHoog => dehoog(&transform, t, config),
        InversionAlgorithm::Talbot => talbot(&transform, t, config),
    }
}

/// de Hoog, Knight & Stokes accelerated Fourier-series inversion.
fn dehoog<F>(transform: &F, t: f64, config: &InversionConfig) -> Result<f64>
where
    F: Fn(Complex64) -> Complex64,
{
    let m = config.terms;
    let big_t = config.scale * t;
    let gamma = -config.tolerance.ln() / (2.0 * big_t);
    let n = 2 * m + 1;

    let mut fvals = Vec::with_capacity(n);
    for k in 0..n {
        let p = Complex64::new(gamma, k as f64 * std::f64::consts::PI / big_t);
        let v = transform(p);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::Convergence(format!(
                "transform returned non-finite value at p = {p}"
            )));
        }
        fvals.push(v);
    }
    // the k = 0 Fourier coefficient enters the QD scheme with weight 1/2
    fvals[0] *= 0.5;

    // quotient-difference scheme for the continued-fraction coefficients
    let tiny = Complex64::new(1e-290, 0.0);
    let mut e = vec![vec![Complex64::new(0.0, 0.0); n]; m + 1];
    let mut q = vec![vec![Complex64::new(0.0, 0.0); n]; m + 1];
    for k in 0..n - 1 {
        let denom = if fvals[k].norm() == 0.0 { tiny } else { fvals[k] };
        q[1][k] = fvals[k + 1] / denom;
    }
    let mut d = vec![Complex64::new(0.0, 0.0); n];
    d[0] = fvals[0];
    for r in 1..=m {
        let cols = 2 * (m - r) + 1;
        for k in 0..cols {
            e[r][k] = q[r][k + 1] - q[r][k] + e[r - 1][k + 1];
        }
        d[2 * r - 1] = -q[r][0];
        if r < m {
            for k in 0..cols - 1 {
                let denom = if e[r][k].norm() == 0.0 { tiny } else { e[r][k] };
                q[r + 1][k] = q[r][k + 1] * e[r][k + 1] / denom;
            }
        }
        d[2 * r] = -e[r][0];
    }

    let z = Complex64::new(0.0, std::f64::consts::PI * t / big_t).exp();
    let mut a_prev = Complex64::new(0.0, 0.0);
    let mut b_prev = Complex64::new(1.0, 0.0);
    let mut a_cur = d[0];
    let mut b_cur = Complex64::new(1.0, 0.0);
    let mut partial = Complex64::new(0.0, 0.0);
    for nn in 1..n {
        let a_next = a_cur + d[nn] * z * a_prev;
        let b_next = b_cur + d[nn] * z * b_prev;
        a_prev = a_cur;
        b_prev = b_cur;
        a_cur = a_next;
        b_cur = b_next;
        if nn == n - 9 {
            partial = a_cur / b_cur;
        }
    }
    // remainder refinement: replace the last coefficient d[n-1] z by R2M
    let h2m = 0.5 * (Complex64::new(1.0, 0.0) + z * (d[n - 2] - d[n - 1]));
    let r2m = -h2m * (Complex64::new(1.0, 0.0)
        - (Complex64::new(1.0, 0.0) + d[n - 1] * z / (h2m * h2m)).sqrt());
    let a_fin = a_prev + r2m * a_prev2(a_cur, a_prev, d[n - 1], z);
    let b_fin = b_prev + r2m * a_prev2(b_cur, b_prev, d[n - 1], z);
    let value = ((a_fin / b_fin) * (gamma * t).exp() / big_t).re;
    let rough = ((a_cur / b_cur) * (gamma * t).exp() / big_t).re;
    let partial_val = (partial * (gamma * t).exp() / big_t).re;

    let est = (value - partial_val).abs().max((value - rough).abs());
    if est > 1e-3 * value.abs().max(1.0) {
        return Err(Error::Convergence(format!(
            "de Hoog inversion oscillating at t = {t:.6e} (spread {est:.3e})"
        )));
    }
    Ok(value)
}

/// Recovers the second-to-last numerator/denominator of the recurrence so the
/// remainder term can replace the final continued-fraction coefficient.
fn a_prev2(cur: Complex64, prev: Complex64, d_last: Complex64, z: Complex64) -> Complex64 {
    // cur = prev + d_last * z * prev2  =>  prev2 = (cur - prev)/(d_last z)
    let dz = d_last * z;
    if dz.norm() == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        (cur - prev) / dz
    }
}

/// Fixed-Talbot inversion (Abate & Valko).
fn talbot<F>(transform: &F, t: f64, config: &InversionConfig) -> Result<f64>
where
    F: Fn(Complex64) -> Complex64,
{
    let n = config.terms;
    let r = 2.0 * n as f64 / (5.0 * t);
    let mut sum = 0.5 * (transform(Complex64::new(r, 0.0)) * (r * t).exp()).re;
    for k in 1..n {
        let theta = k as f64 * std::f64::consts::PI / n as f64;
        let cot = theta.cos() / theta.sin();
        let s = Complex64::new(r * theta * cot, r * theta);
        let sigma = theta + (theta * cot - 1.0) * cot;
        let term = ((s * t).exp() * transform(s) * Complex64::new(1.0, sigma)).re;
        if !term.is_finite() {
            return Err(Error::Convergence(format!(
                "Talbot inversion overflow at node {k}, t = {t:.6e}"
            )));
        }
        sum += term;
    }
    Ok(r / n as f64 * sum)
}
