//! Ostrowski numeration and the three evaluators of the sawtooth Birkhoff sum
//! `S_N(alpha) = sum_{n=1}^N ({n alpha} - 1/2)`: an exact direct sum, a
//! floating direct scan, and Ostrowski's explicit digit formula. The streaming
//! [`prefix_scan`] is what every moment computation builds on.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::moments::PParam;
use crate::numerics::LogSumExp;
use crate::ratcf::{cf_expand, CfExpansion, Rational};

/// Largest denominator accepted by the residue kernels. Keeps `2 * residue`
/// inside `u64` and `2 q S_N` comfortably inside `i128`.
pub const MAX_KERNEL_DENOMINATOR: u64 = 1 << 62;

/// The numeration base attached to a continued fraction `[0; a_1, ..., a_L]`:
/// partial quotients and convergent denominators `q_0..q_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OstrowskiBase {
    quotients: Vec<u64>,
    denominators: Vec<u64>,
}

impl OstrowskiBase {
    /// Fails when a convergent denominator exceeds `u64`.
    pub fn new(cf: &CfExpansion) -> Result<Self> {
        let mut denominators = Vec::with_capacity(cf.len() + 1);
        let (mut q_prev, mut q) = (0u64, 1u64);
        denominators.push(q);
        for &a in &cf.quotients {
            let next = a
                .checked_mul(q)
                .and_then(|x| x.checked_add(q_prev))
                .ok_or_else(|| Error::InvalidParameter("convergent denominator overflows u64".into()))?;
            q_prev = q;
            q = next;
            denominators.push(q);
        }
        Ok(Self {
            quotients: cf.quotients.clone(),
            denominators,
        })
    }

    /// `q_L`: digits describe exactly the integers in `[0, q_L)`.
    pub fn modulus(&self) -> u64 {
        *self.denominators.last().unwrap()
    }

    /// `L`, the number of digits.
    pub fn depth(&self) -> usize {
        self.quotients.len()
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn denominators(&self) -> &[u64] {
        &self.denominators
    }
}

/// Digits `b_0..b_{L-1}` of `N = sum b_l q_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OstrowskiDigits {
    pub digits: Vec<u64>,
}

impl OstrowskiDigits {
    /// Checks digit bounds and the rule `b_{l+1} = a_{l+2} => b_l = 0`.
    pub fn validate(&self, base: &OstrowskiBase) -> Result<()> {
        let a = base.quotients();
        if self.digits.len() != a.len() {
            return Err(Error::InvalidDigits(format!(
                "expected {} digits, got {}",
                a.len(),
                self.digits.len()
            )));
        }
        for (l, &b) in self.digits.iter().enumerate() {
            let ok = if l == 0 { b < a[0] } else { b <= a[l] };
            if !ok {
                return Err(Error::InvalidDigits(format!("b_{l} = {b} out of range")));
            }
            if l + 1 < self.digits.len() && self.digits[l + 1] == a[l + 1] && b != 0 {
                return Err(Error::InvalidDigits(format!(
                    "b_{} = a_{} forces b_{l} = 0",
                    l + 1,
                    l + 2
                )));
            }
        }
        Ok(())
    }
}

/// Greedy top-down Ostrowski expansion of `n` in `[0, q_L)`.
pub fn digits_of(n: u64, base: &OstrowskiBase) -> Result<OstrowskiDigits> {
    let modulus = base.modulus();
    if n >= modulus {
        return Err(Error::OutsideOstrowskiRange { n, modulus });
    }
    let mut digits = vec![0u64; base.depth()];
    let mut rest = n;
    for l in (0..base.depth()).rev() {
        let q = base.denominators[l];
        digits[l] = rest / q;
        rest %= q;
    }
    debug_assert_eq!(rest, 0);
    let d = OstrowskiDigits { digits };
    d.validate(base)?;
    Ok(d)
}

/// `sum b_l q_l`, after validating the digits.
pub fn int_of_digits(d: &OstrowskiDigits, base: &OstrowskiBase) -> Result<u64> {
    d.validate(base)?;
    Ok(d
        .digits
        .iter()
        .zip(base.denominators())
        .map(|(b, q)| b * q)
        .sum())
}

/// Exact `S_N(r)` straight from the definition; `O(N)` big-rational additions.
pub fn birkhoff_direct_exact(r: &Rational, n: u64) -> Rational {
    let half = Rational::frac(1, 2);
    let mut acc = Rational::zero();
    for k in 1..=n {
        let x = Rational::from_integer(k) * r;
        acc = acc + x.fract() - &half;
    }
    acc
}

/// `S_N(alpha)` by summing floating fractional parts. Error grows like `N^2 eps`.
pub fn birkhoff_direct_float(alpha: f64, n: u64) -> f64 {
    (1..=n).map(|k| (k as f64 * alpha).rem_euclid(1.0) - 0.5).sum()
}

/// Ostrowski's explicit formula for a rational argument, in integer arithmetic.
///
/// Every quantity in the formula is a multiple of `1/(2q)` where `q` is the
/// denominator of the argument, so the evaluator returns `2 q S_N` as an
/// exact integer.
#[derive(Clone, Debug)]
pub struct RationalOstrowski {
    base: OstrowskiBase,
    num: u64,
    den: u64,
    /// `q * ||q_l r||` for `l = 0..L`.
    dist_num: Vec<u64>,
}

impl RationalOstrowski {
    /// Accepts either continued fraction of the argument (canonical or alternate).
    pub fn new(cf: &CfExpansion) -> Result<Self> {
        let base = OstrowskiBase::new(cf)?;
        let value = cf.value().fract();
        let (num, den) = value
            .to_u64_parts()
            .ok_or_else(|| Error::InvalidParameter("argument too large for the kernel".into()))?;
        debug_assert_eq!(den, base.modulus().max(1));
        let dist_num = base
            .denominators()
            .iter()
            .map(|&q_l| {
                let m = ((q_l as u128 * num as u128) % den as u128) as u64;
                m.min(den - m)
            })
            .collect();
        Ok(Self {
            base,
            num,
            den,
            dist_num,
        })
    }

    pub fn from_rational(r: &Rational) -> Result<Self> {
        Self::new(&cf_expand(r)?)
    }

    pub fn base(&self) -> &OstrowskiBase {
        &self.base
    }

    /// `(a, q)` of the argument `a/q`.
    pub fn argument(&self) -> (u64, u64) {
        (self.num, self.den)
    }

    /// `||q_l r||` as an exact fraction.
    pub fn dist(&self, l: usize) -> Rational {
        Rational::frac(self.dist_num[l] as i64, self.den as i64)
    }

    /// `2 q S_N(r)`.
    pub fn scaled(&self, n: u64) -> Result<i128> {
        let digits = digits_of(n, &self.base)?;
        let q = self.den as i128;
        let mut prefix = 0i128; // sum_{j<l} b_j q_j
        let mut total = 0i128;
        for (l, &b) in digits.digits.iter().enumerate() {
            if b != 0 {
                let b = b as i128;
                let q_l = self.base.denominators[l] as i128;
                let d = self.dist_num[l] as i128;
                // 2q * b ((1 - b q_l d/q)/2 - (d/q) prefix - d/(2q))
                let term = b * (q - b * q_l * d - 2 * d * prefix - d);
                if l % 2 == 0 {
                    total -= term;
                } else {
                    total += term;
                }
                prefix += b * q_l;
            }
        }
        Ok(total)
    }

    pub fn eval(&self, n: u64) -> Result<Rational> {
        let s = self.scaled(n)?;
        Ok(Rational::new(BigInt::from(s), BigInt::from(2 * self.den as i128)).expect("q >= 1"))
    }
}

/// `S_N` of the value of `cf` via Ostrowski's formula, exactly.
pub fn birkhoff_ostrowski(cf: &CfExpansion, n: u64) -> Result<Rational> {
    RationalOstrowski::new(cf)?.eval(n)
}

/// Ostrowski's formula over a truncated base, with caller-supplied distances
/// `||q_l alpha||` (for instance from a convergent of an irrational).
pub fn birkhoff_ostrowski_real(base: &OstrowskiBase, dists: &[f64], n: u64) -> Result<f64> {
    if dists.len() < base.depth() {
        return Err(Error::InvalidParameter(format!(
            "need {} distances, got {}",
            base.depth(),
            dists.len()
        )));
    }
    let digits = digits_of(n, base)?;
    let mut prefix = 0f64;
    let mut total = 0f64;
    for (l, &b) in digits.digits.iter().enumerate() {
        if b != 0 {
            let b = b as f64;
            let q_l = base.denominators[l] as f64;
            let d = dists[l];
            let term = b * ((1.0 - b * q_l * d) / 2.0 - d * prefix - d / 2.0);
            total += if l % 2 == 0 { -term } else { term };
            prefix += b * q_l;
        }
    }
    Ok(total)
}

/// Where the rotation number of a scan comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum AlphaSource {
    /// A rational rotation, scanned exactly for any horizon.
    Exact(Rational),
    /// A continued-fraction prefix of an irrational. The scan runs on the
    /// deepest convergent with denominator below [`MAX_KERNEL_DENOMINATOR`],
    /// which must exceed the horizon; the resulting error in `S_N` is at most
    /// `N^2 / (2 q_K q_{K+1})`.
    Prefix(CfExpansion),
}

impl AlphaSource {
    pub fn from_f64(alpha: f64) -> Result<Self> {
        Rational::from_f64_exact(alpha)
            .map(AlphaSource::Exact)
            .ok_or_else(|| Error::InvalidParameter(format!("non-finite rotation {alpha}")))
    }

    /// The rational `a/q` (with `0 <= a < q`) actually fed to the residue kernel.
    pub fn kernel_fraction(&self, horizon: u64) -> Result<(u64, u64)> {
        match self {
            AlphaSource::Exact(r) => {
                let f = r.fract();
                match f.to_u64_parts() {
                    Some((a, q)) if q <= MAX_KERNEL_DENOMINATOR => Ok((a, q)),
                    _ => Err(Error::InvalidParameter(format!(
                        "denominator of {r} exceeds the kernel limit"
                    ))),
                }
            }
            AlphaSource::Prefix(cf) => {
                let conv = cf.convergents();
                let mut best = None;
                for (p, q) in conv.p_list.iter().zip(&conv.q_list) {
                    match q.to_u64() {
                        Some(qu) if qu <= MAX_KERNEL_DENOMINATOR => best = Some((p.clone(), qu)),
                        _ => break,
                    }
                }
                let (p, q) = best.expect("q_0 = 1 always fits");
                if q <= horizon {
                    return Err(Error::InvalidParameter(format!(
                        "continued fraction prefix too short: q = {q} does not exceed horizon {horizon}"
                    )));
                }
                let a = p.mod_floor_u64(q);
                Ok((a, q))
            }
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(m)).to_u64().expect("residue below modulus")
    }
}

/// The residues `n a mod q` for `n = 1, 2, ...`.
#[derive(Clone, Debug)]
pub struct ResidueWalk {
    step: u64,
    modulus: u64,
    residue: u64,
}

impl ResidueWalk {
    pub fn new(step: u64, modulus: u64) -> Self {
        assert!((1..=MAX_KERNEL_DENOMINATOR).contains(&modulus) && step < modulus);
        Self {
            step,
            modulus,
            residue: 0,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl Iterator for ResidueWalk {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        self.residue += self.step;
        if self.residue >= self.modulus {
            self.residue -= self.modulus;
        }
        Some(self.residue)
    }
}

/// `2 q S_N(a/q)` for `N = 0, 1, 2, ...` (starting with `S_0 = 0`).
#[derive(Clone, Debug)]
pub struct ScaledPrefixSums {
    walk: ResidueWalk,
    next_value: i128,
}

impl ScaledPrefixSums {
    pub fn new(a: u64, q: u64) -> Self {
        Self {
            walk: ResidueWalk::new(a, q),
            next_value: 0,
        }
    }

    /// The common denominator `2q` of the yielded values.
    pub fn scale(&self) -> u64 {
        2 * self.walk.modulus()
    }
}

impl Iterator for ScaledPrefixSums {
    type Item = i128;

    #[inline]
    fn next(&mut self) -> Option<i128> {
        let out = self.next_value;
        let r = self.walk.next().unwrap();
        self.next_value += 2 * r as i128 - self.walk.modulus() as i128;
        Some(out)
    }
}

/// Prefix statistics of `S_N`, `0 <= N < M`, gathered in one pass.
#[derive(Clone, Debug)]
pub struct BirkhoffScan {
    pub horizon: u64,
    /// Denominator `2q` of the scaled extrema below.
    pub scale: u64,
    pub max_scaled: i128,
    pub min_scaled: i128,
    /// First `N` attaining the maximum.
    pub argmax: u64,
    /// First `N` attaining the minimum.
    pub argmin: u64,
    /// Running `log sum_{N<M} exp(p S_N)` for every finite `p` requested.
    pub lse: Vec<(f64, LogSumExp)>,
}

impl BirkhoffScan {
    pub fn running_max(&self) -> f64 {
        self.max_scaled as f64 / self.scale as f64
    }

    pub fn running_min(&self) -> f64 {
        self.min_scaled as f64 / self.scale as f64
    }

    /// Exact maximum of `S_N` over the kernel fraction.
    pub fn exact_max(&self) -> Rational {
        Rational::new(BigInt::from(self.max_scaled), BigInt::from(self.scale)).unwrap()
    }

    pub fn exact_min(&self) -> Rational {
        Rational::new(BigInt::from(self.min_scaled), BigInt::from(self.scale)).unwrap()
    }

    /// `log sum_{N<M} exp(p S_N)` for a finite `p` that was part of the scan.
    pub fn log_sum_exp(&self, p: f64) -> Option<f64> {
        self.lse
            .iter()
            .find(|(pp, _)| *pp == p)
            .map(|(_, acc)| acc.value())
    }

    /// `log J_{p,M}`: the power-mean style moment, or the extremum for `p = +-inf`.
    pub fn log_moment(&self, p: PParam) -> Option<f64> {
        match p {
            PParam::PlusInfinity => Some(self.running_max()),
            PParam::MinusInfinity => Some(self.running_min()),
            PParam::Finite(v) => self.log_sum_exp(v).map(|l| l / v),
        }
    }
}

/// Single `O(M)` pass over `S_N`, `0 <= N < M`, in exact integer arithmetic.
pub fn prefix_scan(source: &AlphaSource, horizon: u64, p_list: &[PParam]) -> Result<BirkhoffScan> {
    if horizon < 1 {
        return Err(Error::InvalidParameter("horizon M must be >= 1".into()));
    }
    let (a, q) = source.kernel_fraction(horizon)?;
    Ok(scan_fraction(a, q, horizon, p_list))
}

pub(crate) fn scan_fraction(a: u64, q: u64, horizon: u64, p_list: &[PParam]) -> BirkhoffScan {
    let sums = ScaledPrefixSums::new(a, q);
    let scale = sums.scale();
    let inv_scale = 1.0 / scale as f64;
    let mut lse: Vec<(f64, LogSumExp)> = p_list
        .iter()
        .filter_map(|p| p.finite())
        .map(|v| (v, LogSumExp::new()))
        .collect();
    lse.dedup_by(|x, y| x.0 == y.0);
    let (mut max_s, mut min_s) = (0i128, 0i128);
    let (mut argmax, mut argmin) = (0u64, 0u64);
    for (n, s) in sums.take(horizon as usize).enumerate() {
        if s > max_s {
            max_s = s;
            argmax = n as u64;
        }
        if s < min_s {
            min_s = s;
            argmin = n as u64;
        }
        if !lse.is_empty() {
            let x = s as f64 * inv_scale;
            for (p, acc) in lse.iter_mut() {
                acc.push(*p * x);
            }
        }
    }
    BirkhoffScan {
        horizon,
        scale,
        max_scaled: max_s,
        min_scaled: min_s,
        argmax,
        argmin,
        lse,
    }
}
