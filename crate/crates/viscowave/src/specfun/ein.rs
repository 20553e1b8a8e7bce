//! Modified exponential integral Ein(x) = int_0^x (1 - e^(-s))/s ds.

use crate::error::{Error, Result};
use crate::specfun::{SpecialValue, EULER_GAMMA};

/// Ein(x) for x >= 0.
///
/// Uses the alternating Taylor series sum_{k>=1} (-1)^(k+1) x^k/(k k!) for
/// x <= 10 and Ein(x) = gamma + ln x + E1(x) beyond; the series splits off at
/// 10 rather than larger x because its partial sums grow like e^x and start
/// eating significant digits.
pub fn ein(x: f64) -> Result<SpecialValue> {
    if x < 0.0 {
        return Err(Error::Domain(format!("ein: requires x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(SpecialValue::new(0.0, 0.0));
    }
    if x <= 10.0 {
        let mut term = 1.0;
        let mut sum = 0.0;
        let mut max_abs = 0.0f64;
        for k in 1..500 {
            let kf = k as f64;
            term *= -x / kf;
            let contrib = -term / kf;
            sum += contrib;
            max_abs = max_abs.max(contrib.abs());
            if contrib.abs() <= f64::EPSILON * sum.abs() && k > 3 {
                return Ok(SpecialValue::new(sum, max_abs * f64::EPSILON));
            }
        }
        Err(Error::Convergence(format!("ein series stalled at x = {x}")))
    } else {
        let e1 = e1_continued_fraction(x)?;
        let value = EULER_GAMMA + x.ln() + e1;
        Ok(SpecialValue::new(value, 4.0 * f64::EPSILON * value.abs()))
    }
}

/// E1(x) for x > 0 by the even-contracted continued fraction (Lentz).
fn e1_continued_fraction(x: f64) -> Result<f64> {
    let tiny = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let a = -(i as f64) * (i as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < 1e-15 {
            return Ok(h * (-x).exp());
        }
    }
    Err(Error::Convergence(format!("E1 continued fraction stalled at x = {x}")))
}
