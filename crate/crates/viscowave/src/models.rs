//! Creep-compliance families: time-domain creep J(t), creep rate J'(t),
//! the Carson transform p J~(p), retardation spectral densities, and the
//! solid/fluid classification.
//!
//! Becker's creep compliance is the alpha = 0 member of the Strick-Mainardi
//! family and the Lomnitz logarithmic law is the alpha = 0 member of the
//! Jeffreys-Lomnitz-Strick family; both limits are implemented with their
//! explicit logarithmic forms rather than a numerical alpha -> 0 limit, which
//! would lose digits to the (x^alpha - 1)/alpha cancellation.
//!
//! ```
//! use viscowave::models::CreepModel;
//!
//! let becker = CreepModel::becker(1.0, 0.5, 1.0).unwrap();
//! assert_eq!(becker.creep_value(0.0).unwrap(), 1.0);
//! assert!(becker.creep_rate(10.0).unwrap() < becker.creep_rate(1.0).unwrap());
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{ein, expint_scaled, gamma, hyp1f1};

/// Validated creep-compliance model. Construct through the family
/// constructors; a constructed model is always evaluable.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ModelWire", into = "ModelWire")]
pub struct CreepModel {
    pub(crate) kind: ModelKind,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum ModelKind {
    /// J(t) = J0 + (M0/alpha)[1F1(-alpha, 1; -Omega t) - 1], alpha in (-1, 1);
    /// alpha = 0 is Becker's law J0 + M0 Ein(Omega t).
    StrickMainardi { j0: f64, m0: f64, alpha: f64, omega: f64 },
    /// J(t) = J0 + M0[(1 + Omega t)^alpha - 1]/alpha, alpha <= 1;
    /// alpha = 0 is the Lomnitz logarithmic law J0 + M0 ln(1 + Omega t).
    JeffreysLomnitzStrick { j0: f64, m0: f64, alpha: f64, omega: f64 },
    /// J(t) = J0 + J1 t + J2 t^alpha, 0 < alpha <= 1.
    Andrade { j0: f64, j1: f64, j2: f64, alpha: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Solid,
    Fluid,
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

impl CreepModel {
    pub fn strick_mainardi(j0: f64, m0: f64, alpha: f64, omega: f64) -> Result<Self> {
        require(j0.is_finite() && j0 >= 0.0, format!("strick-mainardi: j0 >= 0 required, got {j0}"))?;
        require(m0.is_finite() && m0 >= 0.0, format!("strick-mainardi: m0 >= 0 required, got {m0}"))?;
        require(
            alpha.is_finite() && -1.0 < alpha && alpha < 1.0,
            format!("strick-mainardi: alpha in (-1, 1) required, got {alpha}"),
        )?;
        require(omega.is_finite() && omega > 0.0, format!("strick-mainardi: omega > 0 required, got {omega}"))?;
        Ok(CreepModel { kind: ModelKind::StrickMainardi { j0, m0, alpha, omega } })
    }

    /// Becker's creep compliance, the alpha = 0 Strick-Mainardi member.
    pub fn becker(j0: f64, m0: f64, omega: f64) -> Result<Self> {
        Self::strick_mainardi(j0, m0, 0.0, omega)
    }

    pub fn jls(j0: f64, m0: f64, alpha: f64, omega: f64) -> Result<Self> {
        require(j0.is_finite() && j0 >= 0.0, format!("jls: j0 >= 0 required, got {j0}"))?;
        require(m0.is_finite() && m0 >= 0.0, format!("jls: m0 >= 0 required, got {m0}"))?;
        require(alpha.is_finite() && alpha <= 1.0, format!("jls: alpha <= 1 required, got {alpha}"))?;
        require(omega.is_finite() && omega > 0.0, format!("jls: omega > 0 required, got {omega}"))?;
        Ok(CreepModel { kind: ModelKind::JeffreysLomnitzStrick { j0, m0, alpha, omega } })
    }

    pub fn andrade(j0: f64, j1: f64, j2: f64, alpha: f64) -> Result<Self> {
        require(j0.is_finite() && j0 >= 0.0, format!("andrade: j0 >= 0 required, got {j0}"))?;
        require(j1.is_finite() && j1 >= 0.0, format!("andrade: j1 >= 0 required, got {j1}"))?;
        require(j2.is_finite() && j2 >= 0.0, format!("andrade: j2 >= 0 required, got {j2}"))?;
        require(
            alpha.is_finite() && 0.0 < alpha && alpha <= 1.0,
            format!("andrade: alpha in (0, 1] required, got {alpha}"),
        )?;
        Ok(CreepModel { kind: ModelKind::Andrade { j0, j1, j2, alpha } })
    }

    /// Instantaneous compliance J(0).
    pub fn j0(&self) -> f64 {
        match self.kind {
            ModelKind::StrickMainardi { j0, .. }
            | ModelKind::JeffreysLomnitzStrick { j0, .. }
            | ModelKind::Andrade { j0, .. } => j0,
        }
    }

    /// Characteristic rate Omega; 1 for Andrade, which has no intrinsic rate.
    pub fn timescale(&self) -> f64 {
        match self.kind {
            ModelKind::StrickMainardi { omega, .. }
            | ModelKind::JeffreysLomnitzStrick { omega, .. } => omega,
            ModelKind::Andrade { .. } => 1.0,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self.kind {
            ModelKind::StrickMainardi { .. } => "strick-mainardi",
            ModelKind::JeffreysLomnitzStrick { .. } => "jls",
            ModelKind::Andrade { .. } => "andrade",
        }
    }

    /// Creep compliance J(t), t >= 0.
    pub fn creep_value(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain(format!("creep_value: t >= 0 required, got {t}")));
        }
        match self.kind {
            ModelKind::StrickMainardi { j0, m0, alpha, omega } => {
                if alpha == 0.0 {
                    Ok(j0 + m0 * ein(omega * t)?.value)
                } else {
                    let f = hyp1f1(-alpha, 1.0, -omega * t)?.value;
                    Ok(j0 + m0 / alpha * (f - 1.0))
                }
            }
            ModelKind::JeffreysLomnitzStrick { j0, m0, alpha, omega } => {
                if alpha == 0.0 {
                    Ok(j0 + m0 * (omega * t).ln_1p())
                } else {
                    // (1+x)^alpha - 1 via exp_m1/ln_1p keeps digits for small t
                    Ok(j0 + m0 / alpha * (alpha * (omega * t).ln_1p()).exp_m1())
                }
            }
            ModelKind::Andrade { j0, j1, j2, alpha } => Ok(j0 + j1 * t + j2 * t.powf(alpha)),
        }
    }

    /// Creep rate J'(t). Finite at t = 0 for Strick-Mainardi and JLS;
    /// Andrade with J2 > 0 diverges as t -> 0+.
    pub fn creep_rate(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain(format!("creep_rate: t >= 0 required, got {t}")));
        }
        match self.kind {
            ModelKind::StrickMainardi { m0, alpha, omega, .. } => {
                if alpha == 0.0 {
                    // d/dt [M0 Ein(Omega t)] = M0 (1 - e^(-Omega t))/t
                    if t == 0.0 {
                        Ok(m0 * omega)
                    } else {
                        Ok(m0 * -(-omega * t).exp_m1() / t)
                    }
                } else {
                    // term-by-term derivative of the 1F1 series
                    Ok(m0 * omega * hyp1f1(1.0 - alpha, 2.0, -omega * t)?.value)
                }
            }
            ModelKind::JeffreysLomnitzStrick { m0, alpha, omega, .. } => {
                Ok(m0 * omega * (1.0 + omega * t).powf(alpha - 1.0))
            }
            ModelKind::Andrade { j1, j2, alpha, .. } => {
                if t == 0.0 {
                    if j2 == 0.0 {
                        Ok(j1)
                    } else if alpha == 1.0 {
                        Ok(j1 + j2)
                    } else {
                        Err(Error::Infinite(
                            "andrade creep rate diverges at t = 0".into(),
                        ))
                    }
                } else {
                    Ok(j1 + alpha * j2 * t.powf(alpha - 1.0))
                }
            }
        }
    }

    /// J'(0+) as an extended value.
    pub fn creep_rate_at_zero(&self) -> f64 {
        match self.kind {
            ModelKind::StrickMainardi { m0, omega, .. }
            | ModelKind::JeffreysLomnitzStrick { m0, omega, .. } => m0 * omega,
            ModelKind::Andrade { j1, j2, alpha, .. } => {
                if j2 == 0.0 {
                    j1
                } else if alpha == 1.0 {
                    j1 + j2
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    /// Carson transform p J~(p) on the principal branch; p must lie off the
    /// closed negative real axis.
    pub fn carson_transform(&self, p: Complex64) -> Result<Complex64> {
        if p.im == 0.0 && p.re <= 0.0 {
            return Err(Error::BranchCut(format!(
                "carson transform undefined on the closed negative real axis (p = {p})"
            )));
        }
        match self.kind {
            ModelKind::StrickMainardi { j0, m0, alpha, omega } => {
                let w = Complex64::new(1.0, 0.0) + omega / p;
                if alpha == 0.0 {
                    Ok(j0 + m0 * w.ln())
                } else {
                    Ok(j0 + m0 / alpha * (w.powf(alpha) - 1.0))
                }
            }
            ModelKind::JeffreysLomnitzStrick { j0, m0, alpha, omega } => {
                let z = p / omega;
                if alpha == 0.0 {
                    // p J~ = J0 + M0 e^z E_1(z)
                    Ok(j0 + m0 * expint_scaled(1.0, z)?.value)
                } else {
                    // p J~ = J0 + (M0/alpha)(z e^z E_{-alpha}(z) - 1)
                    Ok(j0 + m0 / alpha * (z * expint_scaled(-alpha, z)?.value - 1.0))
                }
            }
            ModelKind::Andrade { j0, j1, j2, alpha } => {
                // L[t^alpha] = Gamma(1+alpha) p^(-alpha-1)
                Ok(j0 + j1 / p + j2 * gamma(1.0 + alpha) * p.powf(-alpha))
            }
        }
    }

    /// Density of the retardation measure in
    /// J(t) = J0 + int_0^inf (1 - e^(-r t)) H(r) dr.
    ///
    /// Not available for the Andrade family.
    pub fn retardation_density(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::Domain(format!("retardation_density: r > 0 required, got {r}")));
        }
        match self.kind {
            ModelKind::StrickMainardi { m0, alpha, omega, .. } => {
                if r >= omega {
                    return Ok(0.0);
                }
                if alpha == 0.0 {
                    Ok(m0 / r)
                } else {
                    let s = (alpha * std::f64::consts::PI).sin() / (alpha * std::f64::consts::PI);
                    Ok(s * m0 * r.powf(-alpha - 1.0) * (1.0 - r / omega).powf(alpha))
                }
            }
            ModelKind::JeffreysLomnitzStrick { m0, alpha, omega, .. } => {
                // M0/(Omega Gamma(1-alpha)) (r/Omega)^(-alpha-1) e^(-r/Omega);
                // reduces to M0 e^(-r/Omega)/r at alpha = 0
                let x = r / omega;
                Ok(m0 / (omega * gamma(1.0 - alpha)) * x.powf(-alpha - 1.0) * (-x).exp())
            }
            ModelKind::Andrade { .. } => Err(Error::UnsupportedModel(
                "retardation density is not defined for the Andrade family".into(),
            )),
        }
    }

    /// Long-time limit of the creep compliance, J_inf = lim p->0 p J~(p);
    /// +infinity for unbounded creep.
    pub fn equilibrium_compliance(&self) -> f64 {
        match self.kind {
            ModelKind::StrickMainardi { j0, m0, alpha, .. }
            | ModelKind::JeffreysLomnitzStrick { j0, m0, alpha, .. } => {
                if m0 == 0.0 {
                    j0
                } else if alpha < 0.0 {
                    j0 - m0 / alpha
                } else {
                    f64::INFINITY
                }
            }
            ModelKind::Andrade { j0, j1, j2, .. } => {
                if j1 == 0.0 && j2 == 0.0 {
                    j0
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    /// Viscoelastic solid iff the equilibrium compliance is finite.
    pub fn classify(&self) -> Classification {
        if self.equilibrium_compliance().is_finite() {
            Classification::Solid
        } else {
            Classification::Fluid
        }
    }
}

/// A creep model together with the mass density; owns the derived front
/// speed c0 = (rho J0)^(-1/2).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MediumWire", into = "MediumWire")]
pub struct MediumSpec {
    model: CreepModel,
    rho: f64,
}

impl MediumSpec {
    pub fn new(model: CreepModel, rho: f64) -> Result<Self> {
        require(rho.is_finite() && rho > 0.0, format!("medium: rho > 0 required, got {rho}"))?;
        require(
            model.j0() > 0.0,
            "medium: J0 > 0 required for a finite front speed",
        )?;
        Ok(MediumSpec { model, rho })
    }

    pub fn model(&self) -> &CreepModel {
        &self.model
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Front speed c0 = (rho J0)^(-1/2).
    pub fn front_speed(&self) -> f64 {
        1.0 / (self.rho * self.model.j0()).sqrt()
    }
}

// ---------------------------------------------------------------------------
// JSON wire format

#[derive(Serialize, Deserialize)]
#[serde(tag = "family")]
enum ModelWire {
    #[serde(rename = "strick-mainardi")]
    StrickMainardi { j0: f64, m0: f64, alpha: f64, omega: f64 },
    #[serde(rename = "jls")]
    Jls { j0: f64, m0: f64, alpha: f64, omega: f64 },
    #[serde(rename = "andrade")]
    Andrade { j0: f64, j1: f64, j2: f64, alpha: f64 },
}

impl TryFrom<ModelWire> for CreepModel {
    type Error = Error;

    fn try_from(w: ModelWire) -> Result<Self> {
        match w {
            ModelWire::StrickMainardi { j0, m0, alpha, omega } => {
                CreepModel::strick_mainardi(j0, m0, alpha, omega)
            }
            ModelWire::Jls { j0, m0, alpha, omega } => CreepModel::jls(j0, m0, alpha, omega),
            ModelWire::Andrade { j0, j1, j2, alpha } => CreepModel::andrade(j0, j1, j2, alpha),
        }
    }
}

impl From<CreepModel> for ModelWire {
    fn from(m: CreepModel) -> Self {
        match m.kind {
            ModelKind::StrickMainardi { j0, m0, alpha, omega } => {
                ModelWire::StrickMainardi { j0, m0, alpha, omega }
            }
            ModelKind::JeffreysLomnitzStrick { j0, m0, alpha, omega } => {
                ModelWire::Jls { j0, m0, alpha, omega }
            }
            ModelKind::Andrade { j0, j1, j2, alpha } => ModelWire::Andrade { j0, j1, j2, alpha },
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MediumWire {
    #[serde(flatten)]
    model: ModelWire,
    rho: f64,
}

impl TryFrom<MediumWire> for MediumSpec {
    type Error = Error;

    fn try_from(w: MediumWire) -> Result<Self> {
        MediumSpec::new(CreepModel::try_from(w.model)?, w.rho)
    }
}

impl From<MediumSpec> for MediumWire {
    fn from(m: MediumSpec) -> Self {
        MediumWire { model: m.model.into(), rho: m.rho }
    }
}
