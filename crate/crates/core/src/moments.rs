//! The moments `J_p`, `J_{p,M}`, the cocycle-type functions `h_p` and `g_p`,
//! the asymptotic main term of `h_p`, and the one-sided limits `W_p` at rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::LogSumExp;
use crate::ostrowski::{prefix_scan, scan_fraction, AlphaSource, ScaledPrefixSums, MAX_KERNEL_DENOMINATOR};
use crate::ratcf::{cf_expand, gauss_map, gauss_map2, Rational};

/// The exponent `p` of a moment: a nonzero real or one of the two infinities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PParam {
    Finite(f64),
    PlusInfinity,
    MinusInfinity,
}

impl PParam {
    /// Rejects zero and NaN; infinite floats map to the infinite variants.
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p == 0.0 {
            return Err(Error::InvalidParameter(format!("p must be nonzero, got {p}")));
        }
        Ok(if p == f64::INFINITY {
            PParam::PlusInfinity
        } else if p == f64::NEG_INFINITY {
            PParam::MinusInfinity
        } else {
            PParam::Finite(p)
        })
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            PParam::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_positive(self) -> bool {
        match self {
            PParam::Finite(v) => v > 0.0,
            PParam::PlusInfinity => true,
            PParam::MinusInfinity => false,
        }
    }

    /// `sgn(p)` as `+1.0` or `-1.0`.
    pub fn sign(self) -> f64 {
        if self.is_positive() {
            1.0
        } else {
            -1.0
        }
    }

    /// 2 for `p > 0`, 1 for `p < 0`.
    pub fn epsilon_p(self) -> usize {
        if self.is_positive() {
            2
        } else {
            1
        }
    }

    pub fn negate(self) -> Self {
        match self {
            PParam::Finite(v) => PParam::Finite(-v),
            PParam::PlusInfinity => PParam::MinusInfinity,
            PParam::MinusInfinity => PParam::PlusInfinity,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            PParam::Finite(v) => v,
            PParam::PlusInfinity => f64::INFINITY,
            PParam::MinusInfinity => f64::NEG_INFINITY,
        }
    }
}

pub fn epsilon_p(p: PParam) -> usize {
    p.epsilon_p()
}

impl fmt::Display for PParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PParam::Finite(v) => write!(f, "{v}"),
            PParam::PlusInfinity => write!(f, "inf"),
            PParam::MinusInfinity => write!(f, "-inf"),
        }
    }
}

impl FromStr for PParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" => Ok(PParam::PlusInfinity),
            "-inf" | "-infinity" => Ok(PParam::MinusInfinity),
            t => {
                let v: f64 = t.parse().map_err(|_| Error::Parse(format!("bad p value {s:?}")))?;
                PParam::new(v)
            }
        }
    }
}

impl Serialize for PParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `log J_p(r)` together with where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentValue {
    pub log_value: f64,
    pub p: PParam,
    /// Denominator of the argument.
    pub q: u64,
    /// For `p = +-inf`, the first `N` attaining the extremum.
    pub arg: Option<u64>,
    /// For `p = +-inf`, the exact extremum.
    pub exact: Option<Rational>,
}

fn kernel_parts(r: &Rational) -> Result<(u64, u64)> {
    r.require_unit_interval()?;
    match r.to_u64_parts() {
        Some((a, q)) if q <= MAX_KERNEL_DENOMINATOR => Ok((a, q)),
        _ => Err(Error::InvalidParameter(format!("denominator of {r} exceeds the kernel limit"))),
    }
}

fn scaled_to_rational(num: i128, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den)).expect("den >= 1")
}

/// `log J_p(r)` over `0 <= N < q`; `log J_p(0) = 0`.
pub fn log_jp(r: &Rational, p: PParam) -> Result<MomentValue> {
    let (a, q) = kernel_parts(r)?;
    let scan = scan_fraction(a, q, q, &[p]);
    let (arg, exact) = match p {
        PParam::PlusInfinity => (Some(scan.argmax), Some(scan.exact_max())),
        PParam::MinusInfinity => (Some(scan.argmin), Some(scan.exact_min())),
        PParam::Finite(_) => (None, None),
    };
    Ok(MomentValue {
        log_value: scan.log_moment(p).expect("p was scanned"),
        p,
        q,
        arg,
        exact,
    })
}

/// Exact `log J_{+-inf}(r)`; `None` for finite `p`.
pub fn log_jp_exact(r: &Rational, p: PParam) -> Result<Option<Rational>> {
    Ok(log_jp(r, p)?.exact)
}

/// `log J_{p,M}(alpha)` over `0 <= N < M`.
pub fn log_jp_m(source: &AlphaSource, p: PParam, horizon: u64) -> Result<f64> {
    let scan = prefix_scan(source, horizon, &[p])?;
    Ok(scan.log_moment(p).expect("p was scanned"))
}

/// `h_p(r) = log J_p(r) - log J_p(T^2 r)`.
pub fn h_p(r: &Rational, p: PParam) -> Result<f64> {
    let head = log_jp(r, p)?.log_value;
    let tail = log_jp(&gauss_map2(r), p)?.log_value;
    Ok(head - tail)
}

/// Exact `h_{+-inf}(r)`; `None` for finite `p`.
pub fn h_p_exact(r: &Rational, p: PParam) -> Result<Option<Rational>> {
    let head = log_jp_exact(r, p)?;
    let tail = log_jp_exact(&gauss_map2(r), p)?;
    Ok(head.zip(tail).map(|(x, y)| x - y))
}

fn require_positive(r: &Rational) -> Result<()> {
    r.require_unit_interval()?;
    if r.is_zero() {
        return Err(Error::InvalidParameter("argument must be in (0, 1)".into()));
    }
    Ok(())
}

/// `h_p(r)` minus its jump part: `floor(1/Tr)/8` (when `Tr != 0`) for
/// `p > 0`, or `-floor(1/r)/8` for `p < 0`.
pub fn g_p(r: &Rational, p: PParam) -> Result<f64> {
    require_positive(r)?;
    let h = h_p(r, p)?;
    if p.is_positive() {
        let tr = gauss_map(r);
        if tr.is_zero() {
            Ok(h)
        } else {
            let a = tr.recip()?.floor();
            Ok(h - Rational::from_integer(a).to_f64() / 8.0)
        }
    } else {
        let a = r.recip()?.floor();
        Ok(h + Rational::from_integer(a).to_f64() / 8.0)
    }
}

/// `a_2/8 + log(a_2)/(2p)` for `p > 0` and `-a_1/8 + log(a_1)/(2p)` for
/// `p < 0`, read from the canonical expansion with `a_2 = 1` when `L = 1`.
/// The logarithmic term vanishes at `p = +-inf`.
pub fn main_term(r: &Rational, p: PParam) -> Result<f64> {
    require_positive(r)?;
    let cf = cf_expand(r)?;
    let a = if p.is_positive() {
        cf.quotient(2).unwrap_or(1)
    } else {
        cf.quotient(1).expect("r > 0 has a_1")
    } as f64;
    let lead = p.sign() * a / 8.0;
    Ok(match p {
        PParam::Finite(v) => lead + a.ln() / (2.0 * v),
        _ => lead,
    })
}

/// The drifted values `2q S_N - sgn(p) N`, i.e. `S_N - sgn(p) N/(2q)` scaled by `2q`.
fn drifted(a: u64, q: u64, sign: i128) -> impl Iterator<Item = i128> {
    ScaledPrefixSums::new(a, q)
        .take(q as usize)
        .enumerate()
        .map(move |(n, s)| s - sign * n as i128)
}

fn w_correction(a: u64, q: u64, q2: u64, sign: i128) -> Rational {
    let fl = (q / a) as i128;
    scaled_to_rational(fl * (sign * 2 * a as i128 - 1), 8 * q * q2)
}

fn w_parts(r: &Rational, p: PParam) -> Result<((u64, u64), (u64, u64))> {
    require_positive(r)?;
    let (a, q) = kernel_parts(r)?;
    if p.is_positive() && a == 1 {
        return Err(Error::InfiniteLimit(format!("{r} (left-hand limit, p > 0)")));
    }
    let (a2, q2) = kernel_parts(&gauss_map2(r))?;
    Ok(((a, q), (a2, q2)))
}

/// The one-sided limit of `h_p` at `a/q`: from the left for `p > 0`, from the right for `p < 0`.
pub fn w_p(r: &Rational, p: PParam) -> Result<f64> {
    if let Some(exact) = w_p_exact(r, p)? {
        return Ok(exact.to_f64());
    }
    let ((a, q), (a2, q2)) = w_parts(r, p)?;
    let v = p.finite().expect("finite p");
    let sign = if v > 0.0 { 1 } else { -1 };
    let log_sum = |a: u64, q: u64| {
        let scale = 2.0 * q as f64;
        let mut acc = LogSumExp::new();
        for x in drifted(a, q, sign) {
            acc.push(v * x as f64 / scale);
        }
        acc.value()
    };
    let ratio = (log_sum(a, q) - log_sum(a2, q2)) / v;
    Ok(ratio + w_correction(a, q, q2, sign).to_f64())
}

/// Exact `W_{+-inf}(a/q)`; `None` for finite `p`.
pub fn w_p_exact(r: &Rational, p: PParam) -> Result<Option<Rational>> {
    let ((a, q), (a2, q2)) = w_parts(r, p)?;
    let (sign, pick): (i128, fn(i128, i128) -> i128) = match p {
        PParam::PlusInfinity => (1, i128::max),
        PParam::MinusInfinity => (-1, i128::min),
        PParam::Finite(_) => return Ok(None),
    };
    let head = drifted(a, q, sign).reduce(pick).expect("q >= 1");
    let tail = drifted(a2, q2, sign).reduce(pick).expect("q' >= 1");
    Ok(Some(
        scaled_to_rational(head, 2 * q) - scaled_to_rational(tail, 2 * q2) + w_correction(a, q, q2, sign),
    ))
}
