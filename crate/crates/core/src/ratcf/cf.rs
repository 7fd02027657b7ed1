use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A finite continued fraction `[a0; a_1, ..., a_L]`.
///
/// `a0` is the integer part; `quotients` holds `a_1..a_L`, all at least one.
/// [`cf_expand`] always returns the canonical form (last quotient at least 2
/// whenever `L >= 2`); [`cf_alternate`] produces the other representation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CfExpansion {
    pub a0: BigInt,
    pub quotients: Vec<u64>,
}

impl CfExpansion {
    pub fn new(a0: impl Into<BigInt>, quotients: Vec<u64>) -> Result<Self> {
        if quotients.contains(&0) {
            return Err(Error::InvalidParameter(
                "partial quotients must be positive".into(),
            ));
        }
        Ok(Self {
            a0: a0.into(),
            quotients,
        })
    }

    /// Expansion `[0; a_1, ..., a_L]` of a number in `[0, 1)`.
    pub fn unit(quotients: Vec<u64>) -> Result<Self> {
        Self::new(0, quotients)
    }

    /// `L`, the number of partial quotients after `a0`.
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// `a_i` for `1 <= i <= L`.
    pub fn quotient(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|j| self.quotients.get(j).copied())
    }

    /// The exact value, folded from the innermost quotient outward.
    pub fn value(&self) -> Rational {
        let mut acc: Option<Rational> = None;
        for &a in self.quotients.iter().rev() {
            let x = match acc {
                None => Rational::from_integer(a),
                Some(t) => Rational::from_integer(a) + t.recip().expect("tail is positive"),
            };
            acc = Some(x);
        }
        let head = Rational::from_integer(self.a0.clone());
        match acc {
            None => head,
            Some(t) => head + t.recip().expect("tail is positive"),
        }
    }

    pub fn convergents(&self) -> Convergents {
        convergents(self)
    }

    /// Drops the first `k` partial quotients: the expansion of `T^k` of the value.
    pub fn shifted(&self, k: usize) -> CfExpansion {
        CfExpansion {
            a0: BigInt::zero(),
            quotients: self.quotients.iter().skip(k).copied().collect(),
        }
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.a0)?;
        for (i, a) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {a}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convergents `p_l / q_l = [a0; a_1, ..., a_l]` for `0 <= l <= L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convergents {
    pub p_list: Vec<BigInt>,
    pub q_list: Vec<BigInt>,
}

impl Convergents {
    pub fn len(&self) -> usize {
        self.q_list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q_list.is_empty()
    }

    /// The last convergent, i.e. the value of the expansion.
    pub fn last(&self) -> Rational {
        let l = self.q_list.len() - 1;
        Rational::new(self.p_list[l].clone(), self.q_list[l].clone()).expect("q_l >= 1")
    }

    /// Denominators as machine integers, when they all fit.
    pub fn q_u64(&self) -> Option<Vec<u64>> {
        self.q_list.iter().map(|q| q.to_u64()).collect()
    }

    pub fn p_u64(&self) -> Option<Vec<u64>> {
        self.p_list.iter().map(|p| p.to_u64()).collect()
    }
}

/// Euclidean expansion of an exact rational; the result is canonical.
///
/// Fails only if a partial quotient exceeds `u64`.
pub fn cf_expand(r: &Rational) -> Result<CfExpansion> {
    let a0 = r.floor();
    let mut num = r.numer() - &a0 * r.denom();
    let mut den = r.denom().clone();
    let mut quotients = Vec::new();
    // Continued fraction of den/num for the fractional part num/den.
    while !num.is_zero() {
        let a = &den / &num;
        let rem = &den - &a * &num;
        quotients.push(a.to_u64().ok_or(Error::QuotientOverflow)?);
        den = num;
        num = rem;
    }
    Ok(CfExpansion { a0, quotients })
}

/// The other continued fraction of the same value: `[..., a_L]` becomes
/// `[..., a_L - 1, 1]` and vice versa.
pub fn cf_alternate(cf: &CfExpansion) -> Result<CfExpansion> {
    let mut out = cf.clone();
    let last = *cf.quotients.last().ok_or(Error::EmptyExpansion)?;
    if last >= 2 {
        *out.quotients.last_mut().unwrap() = last - 1;
        out.quotients.push(1);
    } else {
        out.quotients.pop();
        match out.quotients.last_mut() {
            Some(prev) => *prev += 1,
            None => out.a0 += 1,
        }
    }
    Ok(out)
}

/// Convergent numerators and denominators via the standard three-term recursion.
pub fn convergents(cf: &CfExpansion) -> Convergents {
    let mut p_list = Vec::with_capacity(cf.len() + 1);
    let mut q_list = Vec::with_capacity(cf.len() + 1);
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (cf.a0.clone(), BigInt::one());
    p_list.push(p.clone());
    q_list.push(q.clone());
    for &a in &cf.quotients {
        let a = BigInt::from(a);
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        p_list.push(p.clone());
        q_list.push(q.clone());
    }
    Convergents { p_list, q_list }
}

/// The Gauss map `T x = {1/x}` with `T 0 = 0`.
pub fn gauss_map(r: &Rational) -> Rational {
    if r.is_zero() {
        return Rational::zero();
    }
    r.recip().expect("nonzero").fract()
}

pub fn gauss_map2(r: &Rational) -> Rational {
    gauss_map(&gauss_map(r))
}

/// `||m r||`, the exact distance from `m r` to the nearest integer.
pub fn dist_to_nearest_int(m: impl Into<BigInt>, r: &Rational) -> Rational {
    let x = Rational::from_integer(m.into()) * r;
    let f = x.fract();
    let g = Rational::one() - &f;
    if f <= g {
        f
    } else {
        g
    }
}
