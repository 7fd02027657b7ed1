//! Quadratic irrationals: periodic continued fractions, lazily extended
//! quotient streams, and the growth constants `C_p(alpha)` of `log J_{p,M}(alpha)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;

use crate::error::{Error, Result};
use crate::moments::{h_p, PParam};
use crate::numerics::LogSumExp;
use crate::ostrowski::{AlphaSource, ScaledPrefixSums, MAX_KERNEL_DENOMINATOR};
use crate::ratcf::{CfExpansion, Convergents, Rational};

/// `(P + sqrt(D)) / Q`, normalized so that `Q | D - P^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    p: i128,
    q: i128,
    d: i128,
}

fn overflow() -> Error {
    Error::InvalidParameter("surd coefficients overflow i128".into())
}

impl QuadraticSurd {
    pub fn new(p: i128, q: i128, d: i128) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroDenominator);
        }
        if d <= 0 {
            return Err(Error::InvalidParameter(format!("D must be positive, got {d}")));
        }
        let s = d.sqrt();
        if s * s == d {
            return Err(Error::PerfectSquare { d });
        }
        let diff = d.checked_sub(p.checked_mul(p).ok_or_else(overflow)?).ok_or_else(overflow)?;
        if diff % q == 0 {
            return Ok(Self { p, q, d });
        }
        // Multiply through by |Q|: (P|Q| + sqrt(D Q^2)) / (Q|Q|).
        let aq = q.abs();
        Ok(Self {
            p: p.checked_mul(aq).ok_or_else(overflow)?,
            q: q.checked_mul(aq).ok_or_else(overflow)?,
            d: d.checked_mul(q * q).ok_or_else(overflow)?,
        })
    }

    /// `sqrt(n)`, for nonsquare `n`.
    pub fn sqrt(n: i128) -> Result<Self> {
        Self::new(0, 1, n)
    }

    /// `(P, Q, D)` in normalized form.
    pub fn parts(&self) -> (i128, i128, i128) {
        (self.p, self.q, self.d)
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + (self.d as f64).sqrt()) / self.q as f64
    }

    /// Integer coefficients `(A, B, C)` of `A x^2 + B x + C = 0` satisfied by the surd.
    pub fn minimal_polynomial(&self) -> (i128, i128, i128) {
        (self.q * self.q, -2 * self.p * self.q, self.p * self.p - self.d)
    }

    /// `floor((P + sqrt D)/Q)` in exact integer arithmetic.
    fn floor(&self, isqrt_d: i128) -> i128 {
        if self.q > 0 {
            (self.p + isqrt_d).div_euclid(self.q)
        } else {
            floor_div(self.p + isqrt_d + 1, self.q)
        }
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    let d = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        d - 1
    } else {
        d
    }
}

/// `[a_0; a_1, ..., a_s, (a_{s+1}, ..., a_{s+m})*]` with `m` even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicCf {
    /// `a_0, ..., a_s`; never empty.
    pub preperiod: Vec<i128>,
    /// `a_{s+1}, ..., a_{s+m}`.
    pub period: Vec<u64>,
}

impl PeriodicCf {
    pub fn new(preperiod: Vec<i128>, period: Vec<u64>) -> Result<Self> {
        if preperiod.is_empty() || period.is_empty() {
            return Err(Error::InvalidParameter("preperiod and period must be nonempty".into()));
        }
        if preperiod[1..].iter().any(|&a| a < 1) || period.contains(&0) {
            return Err(Error::InvalidParameter("partial quotients must be positive".into()));
        }
        let period = if period.len() % 2 == 1 {
            period.repeat(2)
        } else {
            period
        };
        Ok(Self { preperiod, period })
    }

    pub fn a0(&self) -> i128 {
        self.preperiod[0]
    }

    /// `a_k` for `k >= 1`.
    pub fn quotient(&self, k: usize) -> u64 {
        assert!(k >= 1);
        let s = self.preperiod.len() - 1;
        if k <= s {
            self.preperiod[k] as u64
        } else {
            self.period[(k - s - 1) % self.period.len()]
        }
    }

    /// `[a_0; a_1, ..., a_len]`.
    pub fn prefix(&self, len: usize) -> CfExpansion {
        CfExpansion::new(self.a0(), (1..=len).map(|k| self.quotient(k)).collect())
            .expect("quotients are positive")
    }

    /// Shortest prefix whose last convergent denominator exceeds `bound`.
    pub fn prefix_beyond(&self, bound: u128) -> CfExpansion {
        let (mut q_prev, mut q) = (0u128, 1u128);
        let mut k = 0;
        while q <= bound {
            k += 1;
            let next = self.quotient(k) as u128 * q + q_prev;
            q_prev = q;
            q = next;
        }
        self.prefix(k)
    }

    /// A rotation source deep enough for the exact scan kernels at any horizon they accept.
    pub fn source(&self) -> AlphaSource {
        AlphaSource::Prefix(self.prefix_beyond(MAX_KERNEL_DENOMINATOR as u128))
    }

    pub fn stream(&self) -> CfStream {
        cf_stream(self)
    }
}

impl fmt::Display for PeriodicCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.preperiod[0])?;
        for a in &self.preperiod[1..] {
            write!(f, " {a},")?;
        }
        let period: Vec<String> = self.period.iter().map(u64::to_string).collect();
        write!(f, " ({})*]", period.join(", "))
    }
}

/// Periodic expansion by the `(P, Q)` recursion, with cycle detection on the state.
pub fn surd_cf(s: &QuadraticSurd) -> Result<PeriodicCf> {
    const MAX_STEPS: usize = 10_000_000;
    let d = s.d;
    let isqrt_d = d.sqrt();
    let mut state = *s;
    let mut quotients: Vec<i128> = Vec::new();
    let mut seen: HashMap<(i128, i128), usize> = HashMap::new();
    for k in 0..MAX_STEPS {
        if k >= 1 {
            if let Some(&j) = seen.get(&(state.p, state.q)) {
                let period = quotients[j..].iter().map(|&a| a as u64).collect();
                return PeriodicCf::new(quotients[..j].to_vec(), period);
            }
            seen.insert((state.p, state.q), k);
        }
        let a = state.floor(isqrt_d);
        quotients.push(a);
        let p_next = a * state.q - state.p;
        let q_next = (d - p_next * p_next) / state.q;
        state = QuadraticSurd {
            p: p_next,
            q: q_next,
            d,
        };
    }
    Err(Error::InvalidParameter("no period found within the step limit".into()))
}

/// Unbounded stream of `(k, a_k, p_k, q_k)` for `k = 1, 2, ...`.
#[derive(Clone, Debug)]
pub struct CfStream {
    cf: PeriodicCf,
    k: usize,
    p: (BigInt, BigInt),
    q: (BigInt, BigInt),
}

/// One step of a [`CfStream`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamItem {
    pub k: usize,
    pub quotient: u64,
    pub p: BigInt,
    pub q: BigInt,
}

pub fn cf_stream(pcf: &PeriodicCf) -> CfStream {
    CfStream {
        cf: pcf.clone(),
        k: 0,
        p: (BigInt::from(1), BigInt::from(pcf.a0())),
        q: (BigInt::from(0), BigInt::from(1)),
    }
}

impl Iterator for CfStream {
    type Item = StreamItem;

    fn next(&mut self) -> Option<StreamItem> {
        self.k += 1;
        let a = self.cf.quotient(self.k);
        let ab = BigInt::from(a);
        let p_next = &ab * &self.p.1 + &self.p.0;
        let q_next = &ab * &self.q.1 + &self.q.0;
        self.p = (std::mem::replace(&mut self.p.1, p_next.clone()), p_next.clone());
        self.q = (std::mem::replace(&mut self.q.1, q_next.clone()), q_next.clone());
        Some(StreamItem {
            k: self.k,
            quotient: a,
            p: p_next,
            q: q_next,
        })
    }
}

/// Convergents `p_k/q_k`, `0 <= k <= k_max`.
pub fn stream_convergents(pcf: &PeriodicCf, k_max: usize) -> Convergents {
    pcf.prefix(k_max).convergents()
}

/// Least-squares growth rate of `log J_{p,M}` in `log M`.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CpEstimate {
    pub estimate: f64,
    /// Twice the standard error of the slope, from the residual spread.
    pub ci_halfwidth: f64,
    /// `(M, log J_{p,M})` at every dyadic `M = 2^j <= M_max`, `j >= 1`.
    pub points: Vec<(u64, f64)>,
    /// Number of smallest points left out of the fit.
    pub dropped: usize,
}

/// Dyadic points dropped before fitting; the `O(1)` transient dominates there.
pub const CP_DROPPED_POINTS: usize = 2;

/// Fits `log J_{p,M}(alpha)` against `log M` over `M = 2^j <= M_max` from one scan.
pub fn estimate_cp(alpha: &PeriodicCf, p: PParam, m_max: u64) -> Result<CpEstimate> {
    if m_max < 1000 {
        return Err(Error::InvalidParameter("M_max must be at least 1000".into()));
    }
    let (a, q) = alpha.source().kernel_fraction(m_max)?;
    let scale = 2.0 * q as f64;
    let mut lse = LogSumExp::new();
    let (mut hi, mut lo) = (0i128, 0i128);
    let mut next_mark = 2u64;
    let mut points = Vec::new();
    for (n, s) in ScaledPrefixSums::new(a, q).take(m_max as usize).enumerate() {
        match p {
            PParam::PlusInfinity => hi = hi.max(s),
            PParam::MinusInfinity => lo = lo.min(s),
            PParam::Finite(v) => lse.push(v * s as f64 / scale),
        }
        if n as u64 + 1 == next_mark {
            let value = match p {
                PParam::PlusInfinity => hi as f64 / scale,
                PParam::MinusInfinity => lo as f64 / scale,
                PParam::Finite(v) => lse.value() / v,
            };
            points.push((next_mark, value));
            next_mark *= 2;
        }
    }
    let fit: Vec<(f64, f64)> = points
        .iter()
        .skip(CP_DROPPED_POINTS)
        .map(|&(m, y)| ((m as f64).ln(), y))
        .collect();
    let (estimate, se) = slope_with_error(&fit);
    Ok(CpEstimate {
        estimate,
        ci_halfwidth: 2.0 * se,
        points,
        dropped: CP_DROPPED_POINTS,
    })
}

fn slope_with_error(pts: &[(f64, f64)]) -> (f64, f64) {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    let se = (rss / (n - 2.0) / sxx).sqrt();
    (slope, se)
}

/// Quadratic irrationals with a closed form for `C_{+-inf}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownSurd {
    Sqrt2,
    Sqrt3,
}

impl FromStr for KnownSurd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt2" => Ok(KnownSurd::Sqrt2),
            "sqrt3" => Ok(KnownSurd::Sqrt3),
            _ => Err(Error::UnknownSurd(s.to_string())),
        }
    }
}

impl KnownSurd {
    /// `sqrt(2) - 1` or `sqrt(3) - 1`; `S_N` is 1-periodic so the shift is harmless.
    pub fn expansion(self) -> PeriodicCf {
        let d = match self {
            KnownSurd::Sqrt2 => 2,
            KnownSurd::Sqrt3 => 3,
        };
        surd_cf(&QuadraticSurd::new(-1, 1, d).expect("nonsquare")).expect("periodic")
    }
}

/// Closed forms of `C_{+-inf}` at `sqrt 2` and `sqrt 3`.
pub fn known_cp(name: &str, p: PParam) -> Result<f64> {
    let surd: KnownSurd = name.parse()?;
    let sqrt2_unit = (1.0 + 2f64.sqrt()).ln();
    let sqrt3_unit = (2.0 + 3f64.sqrt()).ln();
    match (surd, p) {
        (KnownSurd::Sqrt2, PParam::PlusInfinity) => Ok(1.0 / (8.0 * sqrt2_unit)),
        (KnownSurd::Sqrt2, PParam::MinusInfinity) => Ok(-1.0 / (8.0 * sqrt2_unit)),
        (KnownSurd::Sqrt3, PParam::PlusInfinity) => Ok(1.0 / (4.0 * sqrt3_unit)),
        (KnownSurd::Sqrt3, PParam::MinusInfinity) => Ok(-1.0 / (12.0 * sqrt3_unit)),
        (_, PParam::Finite(_)) => Err(Error::InvalidParameter(
            "no closed form is known for finite p".into(),
        )),
    }
}

/// `h_p(p_k/q_k)` for `2 <= k <= k_max`, on the fractional parts of the convergents.
pub fn hp_at_convergents(alpha: &PeriodicCf, p: PParam, k_max: usize) -> Result<Vec<(usize, f64)>> {
    if k_max < 2 {
        return Err(Error::InvalidParameter("k_max must be at least 2".into()));
    }
    let conv = stream_convergents(alpha, k_max);
    (2..=k_max)
        .map(|k| {
            let r = Rational::new(conv.p_list[k].clone(), conv.q_list[k].clone())?.fract();
            Ok((k, h_p(&r, p)?))
        })
        .collect()
}
