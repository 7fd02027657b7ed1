//! The stable laws `Stab(1, beta)`: characteristic function, CDF by Fourier
//! inversion, a tabulated CDF for sampling and KS loops, and the empirical
//! tools used to compare samples against them.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::numerics::{integrate, integrate_tol};

/// Skewness of a stable law with index 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StableParams {
    beta: f64,
}

impl StableParams {
    pub fn new(beta: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&beta) {
            return Err(Error::InvalidParameter(format!("beta must lie in [-1, 1], got {beta}")));
        }
        Ok(Self { beta })
    }

    pub fn cauchy() -> Self {
        Self { beta: 0.0 }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// `exp(-|t| (1 + i beta (2/pi) sgn(t) log|t|))`.
pub fn stable_cf(t: f64, params: StableParams) -> Complex64 {
    if t == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let a = t.abs();
    let phase = params.beta * (2.0 / PI) * t.signum() * a.ln();
    (Complex64::new(-a, -a * phase)).exp()
}

const INVERSION_CUTOFF: f64 = 40.0;
const INVERSION_TOL: f64 = 1e-10;

/// `F(x) = 1/2 + (1/pi) int_0^inf e^{-t} sin(t x + (2 beta/pi) t log t) / t dt`.
///
/// The integral is split at `t = 1`; on `[0, 1]` the substitution `t = u^2`
/// removes the logarithmic endpoint behavior. `|phi(t)| = e^{-t}` bounds the
/// discarded tail beyond `t = 40` by `1e-18`.
pub fn stable_cdf(x: f64, params: StableParams) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::InvalidParameter("x is NaN".into()));
    }
    if x.is_infinite() {
        return Ok(if x > 0.0 { 1.0 } else { 0.0 });
    }
    let beta = params.beta;
    // Past this point the inversion integrand oscillates faster than the
    // quadrature can follow.
    if x.abs() > OSCILLATION_SWITCH {
        return if beta == 0.0 {
            Ok(0.5 + x.atan() / PI)
        } else if beta > 0.0 {
            zolotarev_cdf(x, beta)
        } else {
            Ok(1.0 - zolotarev_cdf(-x, -beta)?)
        };
    }
    let c = 2.0 * beta / PI;
    let head = integrate(
        |u| {
            let t = u * u;
            2.0 * (-t).exp() * (t * x + c * t * t.ln()).sin() / u
        },
        0.0,
        1.0,
        INVERSION_TOL,
    )?;
    let tail = integrate(
        |t| (-t).exp() * (t * x + c * t * t.ln()).sin() / t,
        1.0,
        INVERSION_CUTOFF,
        INVERSION_TOL,
    )?;
    let f = (0.5 + (head + tail) / PI).clamp(0.0, 1.0);
    // On the light side of a skewed law the inversion only resolves values
    // down to its absolute accuracy; below that, refine in relative terms.
    if beta > 0.0 && x < 0.0 && f < LIGHT_TAIL_SWITCH {
        return zolotarev_cdf(x, beta);
    }
    if beta < 0.0 && x > 0.0 && 1.0 - f < LIGHT_TAIL_SWITCH {
        return Ok(1.0 - zolotarev_cdf(-x, -beta)?);
    }
    Ok(f)
}

const LIGHT_TAIL_SWITCH: f64 = 1e-6;
const OSCILLATION_SWITCH: f64 = 1e3;

/// `F(x)` of `Stab(1, beta)`, `beta > 0`, from Zolotarev's integral
/// `(1/pi) int_{-pi/2}^{pi/2} exp(-e^{-pi x/(2 beta)} V(theta)) d theta`,
/// whose integrand is positive, so small values keep full relative accuracy.
fn zolotarev_cdf(x: f64, beta: f64) -> Result<f64> {
    let log_k = -PI * x / (2.0 * beta);
    // Each half of the range is parametrised by the distance `s` to its
    // endpoint, so cos and tan stay accurate where the integrand turns over.
    // `side = -1` is theta = -pi/2 + s, `side = 1` is theta = pi/2 - s.
    let exponent = move |s: f64, side: f64| {
        let a = PI / 2.0 * (1.0 + side * beta) - side * beta * s;
        let (sin, cos) = s.sin_cos();
        log_k + (2.0 / PI * a / sin).ln() + side * a * cos / (sin * beta)
    };
    let integrand = move |s: f64, side: f64| {
        let e = exponent(s, side);
        if e.is_nan() { 0.0 } else { (-e.exp()).exp() }
    };
    let mut value = 0.0;
    for side in [-1.0, 1.0] {
        let f = |s: f64| integrand(s, side);
        // The integrand is a smoothed step; split where k V = 1 when that
        // point falls in this half.
        let (e0, e1) = (exponent(f64::MIN_POSITIVE, side), exponent(PI / 2.0, side));
        if (e0 < 0.0) == (e1 < 0.0) {
            value += integrate_tol(f, 0.0, PI / 2.0, 0.0, 1e-11)?;
            continue;
        }
        let (mut lo, mut hi) = (0.0, PI / 2.0);
        for _ in 0..1100 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if (exponent(mid, side) < 0.0) == (e0 < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // The turn-over can be far narrower than the distance to the ends,
        // where no quadrature node would see it; break at multiples of its
        // width.
        let split = 0.5 * (lo + hi);
        let h = split * 1e-7;
        let width = h / (exponent(split + h, side) - exponent(split - h, side)).abs().max(1e-300);
        let mut cuts = vec![0.0, PI / 2.0];
        for m in [1.0, 4.0, 16.0, 64.0, 256.0] {
            cuts.push(split - m * width);
            cuts.push(split + m * width);
        }
        cuts.push(split);
        cuts.retain(|c| (0.0..=PI / 2.0).contains(c));
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        for w in cuts.windows(2) {
            value += integrate_tol(f, w[0], w[1], 1e-13 * split, 1e-11)?;
        }
    }
    Ok(value / PI)
}

/// CDF of `max(X, Y)` for independent `X, Y ~ Stab(1, 1)`.
pub fn max2_cdf(x: f64) -> Result<f64> {
    let f = stable_cdf(x, StableParams { beta: 1.0 })?;
    Ok(f * f)
}

/// Median of `Stab(1, beta)` by bisection on the inverted CDF.
pub fn stable_median(params: StableParams) -> Result<f64> {
    let (mut lo, mut hi) = (-5.0, 5.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if stable_cdf(mid, params)? < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// CDF of `Stab(1, beta)` tabulated on a fixed grid, with linear interpolation
/// inside and Pareto tails `1 - F(x) ~ c/x` outside.
#[derive(Clone, Debug)]
pub struct StableTable {
    params: StableParams,
    xs: Vec<f64>,
    fs: Vec<f64>,
}

impl StableTable {
    /// Step 0.02 on `[-10, 10]`, then geometric steps (ratio 1.02) out to `|x| = 1000`.
    pub fn new(params: StableParams) -> Result<Self> {
        let mut xs: Vec<f64> = (-500..=500).map(|i| i as f64 * 0.02).collect();
        let mut outer = Vec::new();
        let mut x = 10.0f64;
        while x < 1000.0 {
            x *= 1.02;
            outer.push(x.min(1000.0));
        }
        xs.extend(outer.iter().copied());
        xs.extend(outer.iter().map(|v| -v));
        xs.sort_by(f64::total_cmp);
        let mut fs = xs
            .iter()
            .map(|&x| stable_cdf(x, params))
            .collect::<Result<Vec<f64>>>()?;
        for i in 1..fs.len() {
            fs[i] = fs[i].max(fs[i - 1]);
        }
        Ok(Self { params, xs, fs })
    }

    /// A process-wide table per `beta`, built on first use.
    pub fn shared(params: StableParams) -> Result<Arc<StableTable>> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<StableTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = params.beta.to_bits();
        if let Some(t) = cache.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let table = Arc::new(StableTable::new(params)?);
        cache.lock().unwrap().insert(key, table.clone());
        Ok(table)
    }

    pub fn params(&self) -> StableParams {
        self.params
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let n = self.xs.len();
        let (lo, hi) = (self.xs[0], self.xs[n - 1]);
        if x <= lo {
            return self.fs[0] * lo / x;
        }
        if x >= hi {
            return 1.0 - (1.0 - self.fs[n - 1]) * hi / x;
        }
        let i = self.xs.partition_point(|&v| v <= x);
        let (x0, x1) = (self.xs[i - 1], self.xs[i]);
        let (f0, f1) = (self.fs[i - 1], self.fs[i]);
        f0 + (f1 - f0) * (x - x0) / (x1 - x0)
    }

    /// Inverse of [`StableTable::cdf`] for `u` in `(0, 1)`.
    pub fn quantile(&self, u: f64) -> f64 {
        let n = self.xs.len();
        let (lo, hi) = (self.xs[0], self.xs[n - 1]);
        let (f_lo, f_hi) = (self.fs[0], self.fs[n - 1]);
        if u <= f_lo {
            return if f_lo > 0.0 { lo * f_lo / u } else { lo };
        }
        if u >= f_hi {
            return if f_hi < 1.0 { hi * (1.0 - f_hi) / (1.0 - u) } else { hi };
        }
        let i = self.fs.partition_point(|&f| f < u);
        let (x0, x1) = (self.xs[i - 1], self.xs[i]);
        let (f0, f1) = (self.fs[i - 1], self.fs[i]);
        if f1 > f0 {
            x0 + (x1 - x0) * (u - f0) / (f1 - f0)
        } else {
            x0
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u = loop {
            let u: f64 = rng.random();
            if u > 0.0 {
                break u;
            }
        };
        self.quantile(u)
    }
}

/// Empirical distribution function of a finite sample.
#[derive(Clone, Debug, PartialEq)]
pub struct Ecdf {
    sorted: Vec<f64>,
}

impl Ecdf {
    pub fn new(mut samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySample);
        }
        if samples.iter().any(|x| x.is_nan()) {
            return Err(Error::InvalidParameter("sample contains NaN".into()));
        }
        samples.sort_by(f64::total_cmp);
        Ok(Self { sorted: samples })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    /// Right-continuous: the fraction of samples `<= x`.
    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&v| v <= x) as f64 / self.sorted.len() as f64
    }

    pub fn median(&self) -> f64 {
        let n = self.sorted.len();
        if n % 2 == 1 {
            self.sorted[n / 2]
        } else {
            0.5 * (self.sorted[n / 2 - 1] + self.sorted[n / 2])
        }
    }
}

/// `sup_x |F_n(x) - F(x)|`, checking both sides of every jump.
pub fn ks_distance(ecdf: &Ecdf, cdf: impl Fn(f64) -> f64) -> f64 {
    let n = ecdf.len() as f64;
    ecdf.sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// Ranks starting at 1, ties sharing their average rank.
fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let mut ranks = vec![0.0; xs.len()];
    let mut start = 0;
    while start < idx.len() {
        let mut end = start + 1;
        while end < idx.len() && xs[idx[end]] == xs[idx[start]] {
            end += 1;
        }
        let avg = (start + end + 1) as f64 / 2.0;
        for &i in &idx[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    ranks
}

/// Spearman's rank correlation.
pub fn rank_corr(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch(xs.len(), ys.len()));
    }
    if xs.len() < 2 {
        return Err(Error::InvalidParameter("need at least two pairs".into()));
    }
    let (rx, ry) = (average_ranks(xs), average_ranks(ys));
    let n = rx.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx).powi(2);
        syy += (b - my).powi(2);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::InvalidParameter("a constant sample has no rank correlation".into()));
    }
    Ok(sxy / (sxx * syy).sqrt())
}
