//! Deterministic sweeps for the asymptotic statements: the uniform envelope
//! of `h_p` around its main term, its oscillation on cylinder sets, and the
//! growth of convergent denominators of quadratic irrationals.

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotation_sums::moments::{h_p, main_term};
use rotation_sums::quadratic::{stream_convergents, surd_cf, QuadraticSurd};
use rotation_sums::ratcf::cf_expand;
use rotation_sums::{CfExpansion, PParam, Rational};

#[test]
fn envelope_does_not_grow_with_the_leading_quotient() {
    // Bins of a_{eps_p}: [1, 4), [4, 20), [20, 100), [100, 600].
    let bin = |a: u64| match a {
        0..=3 => 0,
        4..=19 => 1,
        20..=99 => 2,
        _ => 3,
    };
    for p in [
        PParam::PlusInfinity,
        PParam::MinusInfinity,
        PParam::Finite(2.0),
        PParam::Finite(-2.0),
        PParam::Finite(0.5),
    ] {
        let mut worst = [0f64; 4];
        for q in 2..=600u64 {
            for a in (1..q).filter(|a| a.gcd(&q) == 1) {
                let r = Rational::frac(a as i64, q as i64);
                let cf = cf_expand(&r).unwrap();
                let lead = cf.quotient(p.epsilon_p()).unwrap_or(1);
                let dev = (h_p(&r, p).unwrap() - main_term(&r, p).unwrap()).abs();
                let b = bin(lead);
                worst[b] = worst[b].max(dev);
            }
        }
        let scale = p.finite().map_or(1.0, |v| (v.abs().recip().ln() / v.abs()).max(1.0));
        assert!(worst.iter().all(|w| w.is_finite() && *w < 10.0 * scale), "{p}: {worst:?}");
        assert!(worst[3] <= worst[0] + 0.05, "{p}: {worst:?}");
    }
}

#[test]
fn oscillation_on_cylinders_shrinks() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [PParam::PlusInfinity, PParam::Finite(2.0), PParam::MinusInfinity, PParam::Finite(-2.0)] {
        // Prefix [0; 1, ..., 1, K] with K at an index of the parity eps_p.
        let k = if p.epsilon_p() == 2 { 5 } else { 6 };
        let q_k = stream_q(k);
        let mut spreads = Vec::new();
        for big in [100u64, 1000, 10_000] {
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for _ in 0..50 {
                let mut quotients = vec![1u64; k];
                quotients.push(big);
                for _ in 0..rng.random_range(1..=2) {
                    quotients.push(rng.random_range(1..=5));
                }
                let r = CfExpansion::unit(quotients).unwrap().value();
                let h = h_p(&r, p).unwrap();
                lo = lo.min(h);
                hi = hi.max(h);
            }
            let m = p.finite().map_or(1.0, |v| v.abs().min(1.0));
            let bound = 1.0 / q_k + ((big as f64).ln() / (m * big as f64)).sqrt();
            assert!(hi - lo <= bound, "{p} K = {big}: spread {} above {bound}", hi - lo);
            spreads.push(hi - lo);
        }
        assert!(spreads.windows(2).all(|w| w[1] < w[0]), "{p}: {spreads:?}");
    }
}

/// Denominator of `[0; 1, ..., 1]` with `k` ones.
fn stream_q(k: usize) -> f64 {
    let (mut a, mut b) = (1.0, 1.0);
    for _ in 1..k {
        (a, b) = (b, a + b);
    }
    b
}

#[test]
fn periodic_expansions_reproduce_surds() {
    for d in (2..80i128).filter(|d| (d.isqrt().pow(2)) != *d) {
        for (p, q) in [(0, 1), (-1, 1), (1, 2), (3, -5)] {
            let surd = QuadraticSurd::new(p, q, d).unwrap();
            let pcf = surd_cf(&surd).unwrap();
            assert!(pcf.period.len().is_multiple_of(2), "{surd:?}");
            let value = pcf.prefix(40).value().to_f64();
            assert!((value - surd.to_f64()).abs() < 1e-12, "{surd:?}: {value}");
        }
    }
}

#[test]
fn log_denominators_grow_affinely_along_periods() {
    for d in [2i128, 3, 5, 7, 13, 19, 31] {
        let pcf = surd_cf(&QuadraticSurd::sqrt(d).unwrap()).unwrap();
        let s = pcf.preperiod.len() - 1;
        let m = pcf.period.len();
        let conv = stream_convergents(&pcf, s + 30 * m);
        let logs: Vec<f64> = (5..=30).map(|k| log_big(&conv.q_list[s + k * m])).collect();
        let step = logs[1] - logs[0];
        for w in logs.windows(2) {
            let rel = ((w[1] - w[0]) - step).abs() / step;
            assert!(rel < 1e-6, "sqrt {d}: {rel:e}");
        }
    }
}

fn log_big(x: &num_bigint::BigInt) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    (x >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}
