//! Sudler products `prod_{n<=N} |2 sin(pi n alpha)|` in logarithmic form, their
//! moments `J~_p`, the first-iterate cocycle `h~_p`, and the figure-eight knot
//! volume that governs their growth.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::moments::PParam;
use crate::numerics::{integrate, LogSumExp};
use crate::ostrowski::{AlphaSource, ResidueWalk, MAX_KERNEL_DENOMINATOR};
use crate::ratcf::{gauss_map, Rational};

/// `S~_N(alpha) = sum_{n=1}^N log|2 sin(pi n alpha)|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SudlerValue {
    pub log_product: f64,
    pub n: u64,
}

/// `log|2 sin(pi k/q)|` for `0 < k < q`, folded to the nearer endpoint first.
#[inline]
pub fn log_chord(k: u64, q: u64) -> f64 {
    let k = k.min(q - k);
    (2.0 * (PI * (k as f64 / q as f64)).sin()).ln()
}

/// Neumaier-compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    #[inline]
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// `S~_N(a/q)` for `N = 0, 1, ...`, with angles reduced by exact residues.
/// Only the first `q` values are finite.
#[derive(Clone, Debug)]
pub struct SudlerSums {
    walk: ResidueWalk,
    acc: CompensatedSum,
    started: bool,
}

impl SudlerSums {
    pub fn new(a: u64, q: u64) -> Self {
        Self {
            walk: ResidueWalk::new(a, q),
            acc: CompensatedSum::default(),
            started: false,
        }
    }
}

impl Iterator for SudlerSums {
    type Item = f64;

    #[inline]
    fn next(&mut self) -> Option<f64> {
        if self.started {
            let k = self.walk.next().unwrap();
            self.acc.add(log_chord(k, self.walk.modulus()));
        }
        self.started = true;
        Some(self.acc.value())
    }
}

fn source_fraction(source: &AlphaSource, horizon: u64) -> Result<(u64, u64)> {
    let (a, q) = source.kernel_fraction(horizon)?;
    if matches!(source, AlphaSource::Exact(_)) && horizon > q {
        return Err(Error::InvalidParameter(format!(
            "Sudler sums of a rational with denominator {q} are singular beyond N = {}",
            q - 1
        )));
    }
    Ok((a, q))
}

/// `S~_N` for a rational (requires `N < q`) or a continued-fraction source.
pub fn sudler_log(source: &AlphaSource, n: u64) -> Result<SudlerValue> {
    let (a, q) = source_fraction(source, n + 1)?;
    let log_product = SudlerSums::new(a, q).nth(n as usize).unwrap();
    Ok(SudlerValue { log_product, n })
}

fn unit_parts(r: &Rational) -> Result<(u64, u64)> {
    r.require_unit_interval()?;
    match r.to_u64_parts() {
        Some((a, q)) if q <= MAX_KERNEL_DENOMINATOR => Ok((a, q)),
        _ => Err(Error::InvalidParameter(format!("denominator of {r} exceeds the kernel limit"))),
    }
}

/// Finite `p` sums over `1 <= N < M`; the extrema range over `0 <= N < M`.
fn tilde_moment(a: u64, q: u64, horizon: u64, p: PParam) -> Result<f64> {
    let sums = SudlerSums::new(a, q).take(horizon as usize);
    match p {
        PParam::PlusInfinity => Ok(sums.fold(f64::NEG_INFINITY, f64::max)),
        PParam::MinusInfinity => Ok(sums.fold(f64::INFINITY, f64::min)),
        PParam::Finite(v) => {
            if horizon < 2 {
                return Err(Error::InvalidParameter(
                    "finite-p Sudler moments need M >= 2 (the sum starts at N = 1)".into(),
                ));
            }
            let mut acc = LogSumExp::new();
            for s in sums.skip(1) {
                acc.push(v * s);
            }
            Ok(acc.value() / v)
        }
    }
}

/// `log J~_p(r)`, with `log J~_p(0) = 0`.
pub fn log_jtilde_p(r: &Rational, p: PParam) -> Result<f64> {
    let (a, q) = unit_parts(r)?;
    if q == 1 {
        return Ok(0.0);
    }
    tilde_moment(a, q, q, p)
}

/// `log J~_{p,M}(alpha)`; rational sources need `M <= q`.
pub fn log_jtilde_p_m(source: &AlphaSource, p: PParam, horizon: u64) -> Result<f64> {
    if horizon < 1 {
        return Err(Error::InvalidParameter("horizon M must be >= 1".into()));
    }
    let (a, q) = source_fraction(source, horizon)?;
    tilde_moment(a, q, horizon, p)
}

/// `h~_p(r) = log J~_p(r) - log J~_p(T r)`.
pub fn h_tilde_p(r: &Rational, p: PParam) -> Result<f64> {
    Ok(log_jtilde_p(r, p)? - log_jtilde_p(&gauss_map(r), p)?)
}

/// `Vol(4_1) = 4 pi int_0^{5/6} log|2 sin(pi x)| dx`.
///
/// The logarithmic singularity at 0 is removed analytically: the integrand
/// is `log(2 pi x) + log(sin(pi x)/(pi x))`, the first part integrates in
/// closed form and the second is smooth on the whole range.
pub fn vol_41() -> f64 {
    static VOL: OnceLock<f64> = OnceLock::new();
    *VOL.get_or_init(|| {
        let b = 5.0 / 6.0;
        let singular = b * ((2.0 * PI * b).ln() - 1.0);
        let smooth = integrate(
            |x| {
                let t = PI * x;
                (t.sin() / t).ln()
            },
            0.0,
            b,
            1e-13,
        )
        .expect("smooth integrand");
        4.0 * PI * (singular + smooth)
    })
}

/// `log J~_2(1/q) - Vol(4_1) q/(4 pi) - (3/4) log q`, expected to tend to `-(1/8) log 3`.
pub fn volume_residual(q: u64) -> Result<f64> {
    if q < 2 {
        return Err(Error::InvalidParameter("volume residual needs q >= 2".into()));
    }
    let lj = log_jtilde_p(&Rational::frac(1, q as i64), PParam::Finite(2.0))?;
    Ok(lj - vol_41() / (4.0 * PI) * q as f64 - 0.75 * (q as f64).ln())
}
