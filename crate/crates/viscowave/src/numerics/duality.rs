//! Duality between creep compliance and relaxation modulus:
//! int_0^t G(s) J(t - s) ds = t, with G~(p) = 1/(p^2 J~(p)).

use crate::error::Result;
use crate::models::CreepModel;
use crate::numerics::{integrate, inverse_laplace, InversionConfig, SingularityHint};

/// Residuals of the convolution identity over a time grid.
#[derive(Clone, Debug)]
pub struct DualityReport {
    /// (t, |int_0^t G J - t| / t) per grid point.
    pub residuals: Vec<(f64, f64)>,
    pub max_relative_residual: f64,
}

/// Checks int_0^t G(s) J(t-s) ds = t over `t_grid` (positive, sorted).
///
/// G is recovered numerically as the inverse Laplace transform of
/// 1/(p * pJ~(p)) at every quadrature node; the tanh-sinh rule clusters
/// nodes at both endpoints, which absorbs the integrable singularity G may
/// have at s = 0.
pub fn verify_duality(model: &CreepModel, t_grid: &[f64]) -> Result<DualityReport> {
    if t_grid.is_empty() || t_grid[0] <= 0.0 || t_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(crate::error::Error::Precondition(
            "verify_duality: t_grid must be positive and sorted".into(),
        ));
    }
    let config = InversionConfig::default();
    let g = |s: f64| -> f64 {
        inverse_laplace(
            |p| 1.0 / (p * model.carson_transform(p).unwrap()),
            s,
            &config,
        )
        .unwrap()
    };
    let mut residuals = Vec::with_capacity(t_grid.len());
    let mut max_rel = 0.0f64;
    for &t in t_grid {
        let integral = integrate(
            // numerical inversion breaks down for s below ~1e-100 where the
            // Bromwich contour parameters overflow; any integrable G carries
            // negligible mass there, so those nodes are dropped
            |s| {
                if s < 1e-100 * t {
                    return 0.0;
                }
                g(s) * model.creep_value(t - s).unwrap()
            },
            0.0,
            t,
            SingularityHint::None,
        )?
        .value;
        let rel = (integral - t).abs() / t;
        max_rel = max_rel.max(rel);
        residuals.push((t, rel));
    }
    Ok(DualityReport { residuals, max_relative_residual: max_rel })
}
