//! Centering and scaling constants of the limit laws.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments::PParam;
use crate::sudler::vol_41;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Smallest scale parameter for which `log log` terms are used.
pub const MIN_SCALE: f64 = 16.0;

/// `3/(4 pi^2)`, the coefficient of `log x log log x` for the `S_N` family.
pub const DRIFT_COEFF: f64 = 3.0 / (4.0 * PI * PI);

/// `log x / sigma_x = 8 pi/3` for the `S_N` family.
pub const LOG_PER_SIGMA: f64 = 8.0 * PI / 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Context {
    Farey { order: u64 },
    Real { horizon: u64 },
}

fn guard_sigma(x: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::InvalidParameter(format!("scale needs x >= 2, got {x}")));
    }
    Ok(x.ln())
}

fn guard_loglog(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() || x < MIN_SCALE {
        return Err(Error::InvalidParameter(format!(
            "centering needs x >= {MIN_SCALE} so that log log x is safely positive, got {x}"
        )));
    }
    let l = x.ln();
    Ok((l, l.ln()))
}

/// `sigma_x = (3/(8 pi)) log x`.
pub fn sigma(x: f64) -> Result<f64> {
    Ok(3.0 / (8.0 * PI) * guard_sigma(x)?)
}

/// The `log log` part of `E_{p,x}`: `sgn(p) (3/(4 pi^2)) log x log log x`.
pub fn drift(p: PParam, x: f64) -> Result<f64> {
    let (l, ll) = guard_loglog(x)?;
    Ok(p.sign() * DRIFT_COEFF * l * ll)
}

/// `E_{p,x} = sgn(p) (3/(4 pi^2)) log x log log x + D_p log x`.
pub fn centering(p: PParam, x: f64, d_p: f64) -> Result<f64> {
    let l = guard_loglog(x)?.0;
    Ok(drift(p, x)? + d_p * l)
}

/// `B_Q = (3/(4 pi^2)) (log Q log log Q - (gamma + log(pi/3)) log Q)`.
pub fn b_farey(order: f64) -> Result<f64> {
    let (l, ll) = guard_loglog(order)?;
    Ok(DRIFT_COEFF * l * ll - DRIFT_COEFF * (EULER_GAMMA + (PI / 3.0).ln()) * l)
}

/// `B_M = 2 E_M + (4/pi) (log 2) sigma_M`, with `E_M = E_{inf,M}`.
pub fn b_diameter(horizon: f64, d_inf: f64) -> Result<f64> {
    Ok(2.0 * centering(PParam::PlusInfinity, horizon, d_inf)? + 4.0 / PI * LN_2 * sigma(horizon)?)
}

/// `sigma~_x = (3 Vol(4_1)/(2 pi^2)) log x`.
pub fn sigma_tilde(x: f64) -> Result<f64> {
    Ok(3.0 * vol_41() / (2.0 * PI * PI) * guard_sigma(x)?)
}

/// `log x / sigma~_x`.
pub fn log_per_sigma_tilde() -> f64 {
    2.0 * PI * PI / (3.0 * vol_41())
}

pub fn drift_tilde(x: f64) -> Result<f64> {
    let (l, ll) = guard_loglog(x)?;
    Ok(3.0 * vol_41() / PI.powi(3) * l * ll)
}

/// `E~_{p,x} = (3 Vol(4_1)/pi^3) log x log log x + D~_p log x`.
pub fn centering_tilde(x: f64, d_tilde: f64) -> Result<f64> {
    let l = guard_loglog(x)?.0;
    Ok(drift_tilde(x)? + d_tilde * l)
}

/// The constants used to normalize one statistic.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalizationParams {
    pub e: f64,
    pub sigma: f64,
    /// `B_Q` for Farey runs; `B_M` for real runs at `p = inf`; otherwise absent.
    pub b: Option<f64>,
    pub context: Context,
    pub p: PParam,
}

impl NormalizationParams {
    /// `S_N` family at scale `x` (the sample's `q`, or `M`).
    pub fn birkhoff(context: Context, x: f64, p: PParam, d_p: f64) -> Result<Self> {
        let e = centering(p, x, d_p)?;
        let b = match context {
            Context::Farey { order } => Some(b_farey(order as f64)?),
            Context::Real { horizon } if p == PParam::PlusInfinity => Some(b_diameter(horizon as f64, d_p)?),
            Context::Real { .. } => None,
        };
        Ok(Self { e, sigma: sigma(x)?, b, context, p })
    }

    pub fn sudler(context: Context, x: f64, p: PParam, d_tilde: f64) -> Result<Self> {
        Ok(Self {
            e: centering_tilde(x, d_tilde)?,
            sigma: sigma_tilde(x)?,
            b: None,
            context,
            p,
        })
    }

    pub fn apply(&self, value: f64) -> f64 {
        (value - self.e) / self.sigma
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards() {
        assert!(sigma(1.0).is_err());
        assert!(sigma(2.0).unwrap() > 0.0);
        assert!(centering(PParam::PlusInfinity, 15.0, 0.0).is_err());
        assert!(centering(PParam::PlusInfinity, 16.0, 0.0).unwrap().is_finite());
        assert!(b_farey(10.0).is_err());
    }

    #[test]
    fn symmetric_centering() {
        let x = 1234.0;
        let up = centering(PParam::PlusInfinity, x, 0.3).unwrap();
        let down = centering(PParam::MinusInfinity, x, -0.3).unwrap();
        assert_eq!(up, -down);
        assert!((sigma(x).unwrap() * LOG_PER_SIGMA - x.ln()).abs() < 1e-12);
        assert!((sigma_tilde(x).unwrap() * log_per_sigma_tilde() - x.ln()).abs() < 1e-12);
    }

    #[test]
    fn diameter_shift() {
        let m = 1e6;
        let d = 0.1;
        let e = centering(PParam::PlusInfinity, m, d).unwrap();
        let want = 2.0 * e + 4.0 / PI * LN_2 * 3.0 / (8.0 * PI) * m.ln();
        assert!((b_diameter(m, d).unwrap() - want).abs() < 1e-12);
    }
}
