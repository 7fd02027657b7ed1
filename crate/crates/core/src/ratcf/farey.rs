use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Rational;
use crate::error::{Error, Result};

/// Euler's totient for `0..=n` by a linear sieve over smallest prime factors.
pub fn totients(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= n {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    phi
}

/// `|F_Q| = 1 + sum_{q <= Q} phi(q)`.
pub fn farey_len(order: u64) -> u64 {
    1 + totients(order as usize).iter().skip(1).sum::<u64>()
}

/// Increasing walk through the Farey fractions of a given order, as `(num, den)`.
#[derive(Clone, Debug)]
pub struct FareyPairs {
    order: u64,
    cur: (u64, u64),
    next: (u64, u64),
    done: bool,
}

impl Iterator for FareyPairs {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out == (1, 1) {
            self.done = true;
            return Some(out);
        }
        let (a, b) = self.cur;
        let (c, d) = self.next;
        // Neighbor recurrence: the successor of c/d after a/b.
        let k = (self.order + b) / d;
        self.cur = (c, d);
        self.next = (k * c - a, k * d - b);
        Some(out)
    }
}

pub fn farey_pairs(order: u64) -> Result<FareyPairs> {
    if order < 1 {
        return Err(Error::InvalidParameter("Farey order must be >= 1".into()));
    }
    Ok(FareyPairs {
        order,
        cur: (0, 1),
        next: (1, order),
        done: false,
    })
}

/// Every element of `F_Q` exactly once, in increasing order.
pub fn farey_enumerate(order: u64) -> Result<impl Iterator<Item = Rational>> {
    Ok(farey_pairs(order)?.map(|(a, q)| Rational::frac(a as i64, q as i64)))
}

/// Uniform sampler on `{a/q in F_Q : q >= q_min}`.
///
/// Two stages: the denominator is drawn with probability proportional to the
/// number of fractions carrying it (a totient, plus one for `q = 1` which
/// carries both `0` and `1`), then the numerator uniformly among residues
/// coprime to it. Memory is `O(Q)`.
#[derive(Clone, Debug)]
pub struct FareySampler {
    q_min: u64,
    cumulative: Vec<u64>,
}

impl FareySampler {
    pub fn new(order: u64, q_min: u64) -> Result<Self> {
        if q_min < 1 || order < q_min {
            return Err(Error::InvalidParameter(format!(
                "need Q >= q_min >= 1, got Q = {order}, q_min = {q_min}"
            )));
        }
        let phi = totients(order as usize);
        let mut acc = 0u64;
        let cumulative = (q_min..=order)
            .map(|q| {
                acc += if q == 1 { 2 } else { phi[q as usize] };
                acc
            })
            .collect();
        Ok(Self { q_min, cumulative })
    }

    /// Size of the target set.
    pub fn population(&self) -> u64 {
        *self.cumulative.last().unwrap()
    }

    pub fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (u64, u64) {
        let u = rng.random_range(0..self.population());
        let idx = self.cumulative.partition_point(|&c| c <= u);
        let q = self.q_min + idx as u64;
        if q == 1 {
            return (rng.random_range(0..=1), 1);
        }
        loop {
            let a = rng.random_range(1..q);
            if a.gcd(&q) == 1 {
                return (a, q);
            }
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let (a, q) = self.sample_pair(rng);
        Rational::frac(a as i64, q as i64)
    }
}

/// `count` i.i.d. uniform draws from `{a/q in F_Q : q >= q_min}`, reproducible from `seed`.
pub fn farey_sample(order: u64, count: i64, seed: u64, q_min: u64) -> Result<Vec<Rational>> {
    if count <= 0 {
        return Err(Error::InvalidParameter("sample count must be positive".into()));
    }
    let sampler = FareySampler::new(order, q_min)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| sampler.sample(&mut rng)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_five() {
        let got: Vec<String> = farey_enumerate(5).unwrap().map(|r| r.to_string()).collect();
        let want = [
            "0", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1",
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn small_orders() {
        assert_eq!(farey_pairs(1).unwrap().collect::<Vec<_>>(), vec![(0, 1), (1, 1)]);
        assert_eq!(farey_pairs(3).unwrap().count(), 5);
        assert!(farey_pairs(0).is_err());
    }

    #[test]
    fn totient_table() {
        assert_eq!(&totients(12)[1..], &[1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(farey_len(150), 6859);
    }

    #[test]
    fn sampler_frequency_of_one_half() {
        let n = 10_000;
        let sample = farey_sample(5, n, 7, 1).unwrap();
        let hits = sample.iter().filter(|r| **r == Rational::frac(1, 2)).count() as f64;
        let p = 1.0 / 11.0;
        let se = (p * (1.0 - p) / n as f64).sqrt();
        assert!((hits / n as f64 - p).abs() < 3.0 * se);
    }

    #[test]
    fn sampler_order_one_and_determinism() {
        let s = farey_sample(1, 3, 1, 1).unwrap();
        assert!(s.iter().all(|r| r.is_zero() || *r == Rational::one()));
        assert_eq!(farey_sample(50, 20, 9, 3).unwrap(), farey_sample(50, 20, 9, 3).unwrap());
        assert!(farey_sample(5, 0, 1, 1).is_err());
        assert!(farey_sample(5, 3, 1, 6).is_err());
    }

    #[test]
    fn sampler_respects_min_denominator() {
        let s = farey_sample(40, 500, 3, 16).unwrap();
        assert!(s.iter().all(|r| r.denom() >= &16.into()));
    }
}
