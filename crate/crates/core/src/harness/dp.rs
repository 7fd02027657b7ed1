//! Midpoint-rule estimates of the constants `D_p` and `D~_p`.
//!
//! The integrands are only a.e. continuous and are defined through values at
//! rationals, so each grid point `x_i = (i + theta)/n` is replaced by its first
//! convergent with denominator at least `den_min`. The offset `theta` is the
//! fractional part of the golden ratio, which keeps grid points away from
//! rationals of small height.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::normalization::{DRIFT_COEFF, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::moments::{g_p, PParam};
use crate::ratcf::{cf_expand, Rational};
use crate::sudler::{h_tilde_p, vol_41};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpGrid {
    pub grid_n: u64,
    pub den_min: u64,
}

impl DpGrid {
    pub const DEFAULT: DpGrid = DpGrid { grid_n: 2000, den_min: 1000 };

    fn validate(self) -> Result<()> {
        if self.grid_n < 100 || self.den_min < 100 {
            return Err(Error::InvalidParameter(format!(
                "D_p grid needs grid_n >= 100 and den_min >= 100, got {} and {}",
                self.grid_n, self.den_min
            )));
        }
        Ok(())
    }
}

impl Default for DpGrid {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `-sgn(p) (3/(4 pi^2)) (gamma + log(pi/3))`.
pub fn dp_constant(p: PParam) -> f64 {
    -p.sign() * DRIFT_COEFF * (EULER_GAMMA + (PI / 3.0).ln())
}

/// `(3 Vol(4_1)/pi^3) (log(6/pi) - gamma)`.
pub fn dtilde_constant() -> f64 {
    3.0 * vol_41() / PI.powi(3) * ((6.0 / PI).ln() - EULER_GAMMA)
}

/// First convergent of `x` with denominator at least `den_min`.
pub fn truncate(x: f64, den_min: u64) -> Result<Rational> {
    let exact = Rational::from_f64_exact(x)
        .ok_or_else(|| Error::InvalidParameter(format!("grid point {x} is not finite")))?;
    let cf = cf_expand(&exact)?;
    let conv = cf.convergents();
    let idx = conv
        .q_list
        .iter()
        .position(|q| q.to_u64().is_none_or(|q| q >= den_min))
        .unwrap_or(conv.len() - 1);
    let r = Rational::new(conv.p_list[idx].clone(), conv.q_list[idx].clone())?;
    if r.is_zero() {
        return Err(Error::InvalidParameter(format!("grid point {x} truncates to 0")));
    }
    Ok(r)
}

/// `(x_i, r_i)` for the midpoint grid.
pub fn grid_points(grid: DpGrid) -> Result<Vec<(f64, Rational)>> {
    grid.validate()?;
    let theta = (5f64.sqrt() - 1.0) / 2.0;
    (0..grid.grid_n)
        .map(|i| {
            let x = (i as f64 + theta) / grid.grid_n as f64;
            truncate(x, grid.den_min).map(|r| (x, r))
        })
        .collect()
}

fn weighted_mean(grid: DpGrid, f: impl Fn(&Rational) -> Result<f64>) -> Result<f64> {
    let mut total = 0.0;
    for (x, r) in grid_points(grid)? {
        total += f(&r)? / (1.0 + x);
    }
    Ok(total / grid.grid_n as f64)
}

/// Estimate of `D_p`: the closed-form constant plus `(6/pi^2) int g_p(x)/(1+x) dx`.
pub fn estimate_dp(p: PParam, grid_n: u64, den_min: u64) -> Result<f64> {
    let grid = DpGrid { grid_n, den_min };
    let integral = weighted_mean(grid, |r| g_p(r, p))?;
    Ok(dp_constant(p) + 6.0 / (PI * PI) * integral)
}

/// Estimate of `D~_p` for `p > 0`.
pub fn estimate_dtilde_p(p: PParam, grid_n: u64, den_min: u64) -> Result<f64> {
    if !p.is_positive() {
        return Err(Error::InvalidParameter(format!("D~_p is estimated for p > 0, got {p}")));
    }
    let grid = DpGrid { grid_n, den_min };
    let jump = vol_41() / (4.0 * PI);
    let integral = weighted_mean(grid, |r| {
        let a1 = Rational::from_integer(r.recip()?.floor()).to_f64();
        Ok(h_tilde_p(r, p)? - jump * a1)
    })?;
    Ok(dtilde_constant() + 12.0 / (PI * PI) * integral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let c = dp_constant(PParam::PlusInfinity);
        let want = -3.0 / (4.0 * PI * PI) * (EULER_GAMMA + (PI / 3.0).ln());
        assert_eq!(c, want);
        assert_eq!(dp_constant(PParam::MinusInfinity), -c);
        let vol = 2.029_883_212_819_307;
        let want = 3.0 * vol / PI.powi(3) * ((6.0 / PI).ln() - EULER_GAMMA);
        assert!((dtilde_constant() - want).abs() < 1e-9);
    }

    #[test]
    fn truncation() {
        let r = truncate(std::f64::consts::FRAC_1_PI, 100).unwrap();
        assert!(r.to_u64_parts().unwrap().1 >= 100);
        assert!((r.to_f64() - std::f64::consts::FRAC_1_PI).abs() < 1e-4);
        assert!(truncate(1e-9, 100).is_ok());
        assert!(grid_points(DpGrid { grid_n: 50, den_min: 100 }).is_err());
    }
}
