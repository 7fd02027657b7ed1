//! Acceptance criteria. Prints one PASS/FAIL line per criterion, with the
//! individual checks underneath, and fails unless exactly the pinned known
//! failures fail.

use std::collections::BTreeSet;
use std::f64::consts::{LN_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use rotation_sums::harness::tolerances as tol;
use rotation_sums::harness::{
    estimate_dp, farey_statistic, figure_rows, run_farey_limit_law, run_farey_main_term, run_real_limit_law,
    sample_rng, DpGrid, DpMode, FareyLawConfig, Figure, Measure, RealLawConfig,
};
use rotation_sums::moments::{h_p, h_p_exact, log_jp, w_p, w_p_exact};
use rotation_sums::ostrowski::{birkhoff_direct_exact, RationalOstrowski};
use rotation_sums::quadratic::{estimate_cp, hp_at_convergents, known_cp, KnownSurd};
use rotation_sums::ratcf::{farey_pairs, gauss_map2, FareySampler};
use rotation_sums::stablelaw::{ks_distance, stable_cdf, Ecdf, StableParams, StableTable};
use rotation_sums::sudler::{h_tilde_p, log_jtilde_p, vol_41, volume_residual};
use rotation_sums::{CfExpansion, PParam, Rational};

/// Checks that are expected to fail, as `criterion:check`. Each is analysed
/// in the project notes; the run fails if one of them starts passing.
const KNOWN_FAILURES: &[&str] = &[
    // J~_p sums over 1 <= N < q; the duality needs 0 <= N < q for finite p.
    "5:jtilde-duality-finite-p",
    // h~_{-p} = -h~_p + log(q/a), not -h~_p.
    "5:htilde-antisymmetry",
    // Log-speed convergence: KS ~ 0.19/0.22, rho ~ 0.71 at Q = 1e4.
    "9:main-term-ks-at-1e4",
    "9:main-term-rho-at-1e4",
    // |F_150| = 6859.
    "10:f1-rows-6881",
];

struct Check {
    name: &'static str,
    ok: bool,
    detail: String,
}

struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<Check>,
    started: Instant,
    limit: Option<Duration>,
}

impl Criterion {
    fn new(id: u32, title: &'static str, limit: Option<Duration>) -> Self {
        Self { id, title, checks: Vec::new(), started: Instant::now(), limit }
    }

    fn check(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check { name, ok, detail: detail.into() });
    }

    fn finish(mut self, failures: &mut BTreeSet<String>) {
        let elapsed = self.started.elapsed();
        if let Some(limit) = self.limit {
            let ok = elapsed < limit;
            self.check("runtime", ok, format!("{:.1} s < {:.0} s", elapsed.as_secs_f64(), limit.as_secs_f64()));
        }
        let pass = self.checks.iter().all(|c| c.ok);
        println!(
            "{} {:>2}. {} [{:.1} s]",
            if pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            elapsed.as_secs_f64()
        );
        for c in &self.checks {
            let key = format!("{}:{}", self.id, c.name);
            let tag = match (c.ok, KNOWN_FAILURES.contains(&key.as_str())) {
                (true, _) => "ok  ",
                (false, true) => "FAIL (known)",
                (false, false) => "FAIL",
            };
            println!("        {tag} {}: {}", c.name, c.detail);
            if !c.ok {
                failures.insert(key);
            }
        }
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn frac(a: u64, q: u64) -> Rational {
    Rational::frac(a as i64, q as i64)
}

/// Reduced `a/q` in `(0, 1)` with `2 <= q <= q_max`.
fn interior_fractions(q_max: u64) -> Vec<(u64, u64)> {
    farey_pairs(q_max).unwrap().filter(|&(a, q)| a > 0 && a < q).collect()
}

fn criterion_1(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(1, "Ostrowski evaluation equals the direct sum, q <= 500, 0 <= N < q", secs(60));
    let pairs = interior_fractions(500);
    // Independent oracle: 2q S_N = sum_{n <= N} (2 (n a mod q) - q), accumulated in integers.
    let mismatches: Vec<(u64, u64, u64)> = pairs
        .par_iter()
        .flat_map_iter(|&(a, q)| {
            let eval = RationalOstrowski::from_rational(&frac(a, q)).unwrap();
            let mut acc = 0i128;
            let mut bad = Vec::new();
            for n in 0..q {
                if n > 0 {
                    acc += 2 * ((n as u128 * a as u128 % q as u128) as i128) - q as i128;
                }
                if eval.scaled(n).unwrap() != acc {
                    bad.push((a, q, n));
                }
            }
            bad
        })
        .collect();
    let evaluations: u64 = pairs.iter().map(|&(_, q)| q).sum();
    c.check(
        "ostrowski-vs-integer-oracle",
        mismatches.is_empty(),
        format!("{evaluations} evaluations over {} fractions, {} mismatches", pairs.len(), mismatches.len()),
    );
    // The library's own direct sum in big rationals, on a smaller range.
    let mut bad = 0;
    let mut count = 0;
    for (a, q) in interior_fractions(60) {
        let r = frac(a, q);
        let eval = RationalOstrowski::from_rational(&r).unwrap();
        for n in 0..q {
            count += 1;
            if eval.eval(n).unwrap() != birkhoff_direct_exact(&r, n) {
                bad += 1;
            }
        }
    }
    c.check("ostrowski-vs-rational-direct", bad == 0, format!("{count} evaluations (q <= 60), {bad} mismatches"));
    c.finish(failures);
}

fn criterion_2(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(2, "closed forms of h_{+-inf} at 1/q, q <= 500", None);
    let mut bad_up = Vec::new();
    let mut bad_down = Vec::new();
    for q in 2..=500u64 {
        let r = frac(1, q);
        if h_p_exact(&r, PParam::PlusInfinity).unwrap().unwrap() != Rational::zero() {
            bad_up.push(q);
        }
        let odd = if q % 2 == 1 { Rational::frac(1, 8 * q as i64) } else { Rational::zero() };
        let want = Rational::frac(-(q as i64), 8) + Rational::frac(1, 4) - odd;
        if h_p_exact(&r, PParam::MinusInfinity).unwrap().unwrap() != want {
            bad_down.push(q);
        }
    }
    c.check("h_inf(1/q) = 0", bad_up.is_empty(), format!("exact, failures at {bad_up:?}"));
    c.check(
        "h_-inf(1/q) formula",
        bad_down.is_empty(),
        format!("-q/8 + 1/4 - [q odd]/(8q) exact, failures at {bad_down:?}"),
    );
    c.finish(failures);
}

fn criterion_3(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(3, "point values at 3/8", None);
    let r = frac(3, 8);
    let h = h_p_exact(&r, PParam::PlusInfinity).unwrap().unwrap();
    c.check("h_inf(3/8) = 1/8", h == Rational::frac(1, 8), format!("got {h}"));
    let w = w_p_exact(&r, PParam::PlusInfinity).unwrap().unwrap();
    c.check("W_inf(3/8) = 5/64", w == Rational::frac(5, 64), format!("got {w}"));
    let h2 = h_p(&r, PParam::Finite(2.0)).unwrap();
    c.check("h_2(3/8)", (h2 - 0.650008).abs() < tol::POINT_VALUE, format!("{h2:.8} vs 0.650008"));
    let w2 = w_p(&r, PParam::Finite(2.0)).unwrap();
    c.check("W_2(3/8)", (w2 - 0.640180).abs() < tol::POINT_VALUE, format!("{w2:.8} vs 0.640180"));
    c.finish(failures);
}

fn criterion_4(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(4, "h_inf([0;2,1,2,m]) -> 5/64", secs(10));
    let target = 5.0 / 64.0;
    let gaps: Vec<f64> = [10u64, 100, 1000, 10_000]
        .iter()
        .map(|&m| {
            let x = CfExpansion::unit(vec![2, 1, 2, m]).unwrap().value();
            (h_p(&x, PParam::PlusInfinity).unwrap() - target).abs()
        })
        .collect();
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    c.check("gap decreasing", decreasing, format!("{gaps:?}"));
    c.check("gap at m = 1e4", gaps[3] < tol::CONVERGENCE_GAP, format!("{:.3e} < {}", gaps[3], tol::CONVERGENCE_GAP));
    c.finish(failures);
}

#[derive(Default)]
struct Worst {
    value: f64,
    at: String,
}

impl Worst {
    fn see(&mut self, dev: f64, at: impl FnOnce() -> String) {
        if dev.is_nan() || dev > self.value {
            self.value = dev;
            self.at = at();
        }
    }

    fn report(&self, bound: f64) -> (bool, String) {
        if self.at.is_empty() {
            return (self.value <= bound, format!("max deviation {:.3e}", self.value));
        }
        (self.value <= bound, format!("max deviation {:.3e} at {}", self.value, self.at))
    }
}

fn criterion_5(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(5, "identities over q <= 300, p in {+-inf, +-2, +-0.5}", None);
    let pairs = interior_fractions(300);
    let ps = [
        PParam::PlusInfinity,
        PParam::MinusInfinity,
        PParam::Finite(2.0),
        PParam::Finite(-2.0),
        PParam::Finite(0.5),
        PParam::Finite(-0.5),
    ];
    let mut telescoping = Worst::default();
    let mut telescoping_exact = true;
    let mut reflection = Worst::default();
    let mut duality_inf = Worst::default();
    let mut duality_finite = Worst::default();
    let mut antisymmetry = Worst::default();
    let mut symmetry = Worst::default();
    for &(a, q) in &pairs {
        let r = frac(a, q);
        let mirror = frac(q - a, q);
        let at = || format!("{a}/{q}");
        for p in ps {
            let lj = log_jp(&r, p).unwrap().log_value;
            let mut sum = 0.0;
            let mut x = r.clone();
            while !x.is_zero() {
                sum += h_p(&x, p).unwrap();
                x = gauss_map2(&x);
            }
            telescoping.see((sum - lj).abs(), || format!("{a}/{q}, p = {p}"));
            if let Some(exact) = log_jp(&r, p).unwrap().exact {
                let mut total = Rational::zero();
                let mut x = r.clone();
                while !x.is_zero() {
                    total = total + h_p_exact(&x, p).unwrap().unwrap();
                    x = gauss_map2(&x);
                }
                telescoping_exact &= total == exact;
            }

            let flipped = log_jp(&mirror, p.negate()).unwrap().log_value;
            reflection.see((lj + flipped).abs(), || format!("{a}/{q}, p = {p}"));

            let t = log_jtilde_p(&r, p).unwrap();
            let dual = (t + log_jtilde_p(&r, p.negate()).unwrap() - (q as f64).ln()).abs();
            match p {
                PParam::Finite(_) => duality_finite.see(dual, || format!("{a}/{q}, p = {p}")),
                _ => duality_inf.see(dual, at),
            }
            let anti = (h_tilde_p(&r, p.negate()).unwrap() + h_tilde_p(&r, p).unwrap()).abs();
            antisymmetry.see(anti, || format!("{a}/{q}, p = {p}"));
            symmetry.see((t - log_jtilde_p(&mirror, p).unwrap()).abs(), || format!("{a}/{q}, p = {p}"));
        }
    }
    let b = tol::IDENTITY;
    let (ok, d) = telescoping.report(b);
    c.check("telescoping", ok && telescoping_exact, format!("{d}; exact for p = +-inf: {telescoping_exact}"));
    let (ok, d) = reflection.report(b);
    c.check("reflection log J_-p(r) = -log J_p(1-r)", ok, d);
    let (ok, d) = duality_inf.report(b);
    c.check("jtilde-duality-infinite-p", ok, d);
    let (ok, d) = duality_finite.report(b);
    c.check("jtilde-duality-finite-p", ok, d);
    let (ok, d) = antisymmetry.report(b);
    c.check("htilde-antisymmetry", ok, d);
    let (ok, d) = symmetry.report(b);
    c.check("jtilde-reflection J~_p(r) = J~_p(1-r)", ok, d);
    c.finish(failures);
}

fn criterion_6(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(6, "figure-eight knot volume and the residual of log J~_2(1/q)", secs(30));
    let vol = vol_41();
    c.check("Vol(4_1) = 2.02988", (vol - 2.02988).abs() < 5e-6, format!("{vol:.10}"));
    let shift = 3f64.ln() / 8.0;
    let residuals: Vec<f64> = [250u64, 500, 1000, 2000].iter().map(|&q| volume_residual(q).unwrap()).collect();
    let gaps: Vec<f64> = residuals.iter().map(|r| (r + shift).abs()).collect();
    c.check("gap shrinking", gaps.windows(2).all(|w| w[1] < w[0]), format!("{gaps:?}"));
    let last = (residuals[3] + 0.1373265).abs();
    c.check("residual(2000)", last < tol::VOLUME_RESIDUAL, format!("|{:.7} + 0.1373265| = {last:.2e}", residuals[3]));
    c.finish(failures);
}

fn criterion_7(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(7, "quadratic irrationals: C_{+-inf} and h_{+-inf} at convergents", secs(120));
    let m_max = 10_000_000;
    for (name, surd) in [("sqrt2", KnownSurd::Sqrt2), ("sqrt3", KnownSurd::Sqrt3)] {
        let alpha = surd.expansion();
        for p in [PParam::PlusInfinity, PParam::MinusInfinity] {
            let est = estimate_cp(&alpha, p, m_max).unwrap().estimate;
            let exact = known_cp(name, p).unwrap();
            let rel = ((est - exact) / exact).abs();
            let label = match (surd, p) {
                (KnownSurd::Sqrt2, PParam::PlusInfinity) => "C_inf(sqrt2)",
                (KnownSurd::Sqrt2, _) => "C_-inf(sqrt2)",
                (KnownSurd::Sqrt3, PParam::PlusInfinity) => "C_inf(sqrt3)",
                (KnownSurd::Sqrt3, _) => "C_-inf(sqrt3)",
            };
            c.check(label, rel < tol::CP_RELATIVE, format!("{est:.6} vs {exact:.6}, {:.2}%", 100.0 * rel));
        }
    }
    let alpha = KnownSurd::Sqrt3.expansion();
    let up = hp_at_convergents(&alpha, PParam::PlusInfinity, 20).unwrap().last().unwrap().1;
    let down = hp_at_convergents(&alpha, PParam::MinusInfinity, 20).unwrap().last().unwrap().1;
    c.check("h_inf at k = 20", (up - 0.25).abs() < tol::HP_CONVERGENT, format!("{up:.6} vs 1/4"));
    c.check("h_-inf at k = 20", (down + 1.0 / 12.0).abs() < tol::HP_CONVERGENT, format!("{down:.6} vs -1/12"));
    c.finish(failures);
}

fn criterion_8(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(8, "stable laws: inversion, reflection, convolution", None);
    let grid: Vec<f64> = (-100..=100).map(|i| i as f64 * 0.5).collect();
    let cauchy = StableParams::cauchy();
    let inversion = grid
        .iter()
        .map(|&x| (stable_cdf(x, cauchy).unwrap() - (0.5 + x.atan() / PI)).abs())
        .fold(0.0, f64::max);
    c.check("Cauchy inversion", inversion < tol::STABLE_CDF_ABS, format!("max error {inversion:.2e} on [-50, 50]"));
    let right = StableParams::new(1.0).unwrap();
    let left = StableParams::new(-1.0).unwrap();
    let reflection = grid
        .iter()
        .map(|&x| (stable_cdf(x, right).unwrap() - (1.0 - stable_cdf(-x, left).unwrap())).abs())
        .fold(0.0, f64::max);
    c.check("reflection", reflection < tol::STABLE_CDF_ABS, format!("max error {reflection:.2e}"));

    let table = StableTable::shared(right).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let n = 10_000;
    let xs: Vec<f64> = (0..n).map(|_| table.sample(&mut rng)).collect();
    let ys: Vec<f64> = (0..n).map(|_| table.sample(&mut rng)).collect();
    let shift = 2.0 / PI * LN_2;
    let sum = Ecdf::new(xs.iter().zip(&ys).map(|(x, y)| (x + y) / 2.0 - shift).collect()).unwrap();
    let ks_sum = ks_distance(&sum, |x| stable_cdf(x, right).unwrap());
    c.check("(X+Y)/2 - (2/pi) log 2 ~ Stab(1,1)", ks_sum < tol::STABLE_CONVOLUTION_KS, format!("KS {ks_sum:.4}"));
    let diff = Ecdf::new(xs.iter().zip(&ys).map(|(x, y)| (x - y) / 2.0).collect()).unwrap();
    let ks_diff = ks_distance(&diff, |x| 0.5 + x.atan() / PI);
    c.check("(X-Y)/2 ~ Cauchy", ks_diff < tol::STABLE_CONVOLUTION_KS, format!("KS {ks_diff:.4}"));
    c.finish(failures);
}

fn criterion_9(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(9, "limit laws over random Farey fractions and reals", secs(300));
    let seed = 9;
    let n = 5000;
    let orders = [100u64, 1000, 10_000, 100_000];
    let runs: Vec<_> = orders.iter().map(|&q| run_farey_main_term(q, n, seed).unwrap()).collect();
    let ks_even: Vec<f64> = runs.iter().map(|r| r.stat("main_even", None).unwrap().ks).collect();
    let ks_odd: Vec<f64> = runs.iter().map(|r| r.stat("main_odd", None).unwrap().ks).collect();
    let rho: Vec<f64> = runs.iter().map(|r| r.correlation(None).unwrap().abs()).collect();
    let at = 2;
    c.check(
        "main-term-ks-at-1e4",
        ks_even[at] < tol::MAIN_TERM_KS && ks_odd[at] < tol::MAIN_TERM_KS,
        format!("KS {:.4} / {:.4} < {}", ks_even[at], ks_odd[at], tol::MAIN_TERM_KS),
    );
    c.check(
        "main-term-rho-at-1e4",
        rho[at] < tol::MAIN_TERM_RHO,
        format!("|rho| {:.4} < {}", rho[at], tol::MAIN_TERM_RHO),
    );
    let non_increasing = |v: &[f64]| v.windows(2).all(|w| w[1] <= w[0]);
    c.check(
        "main-term-ks-trend",
        non_increasing(&ks_even) && non_increasing(&ks_odd),
        format!("Q = 1e2..1e5: even {ks_even:.4?}, odd {ks_odd:.4?}"),
    );
    c.check("main-term-rho-trend", non_increasing(&rho), format!("Q = 1e2..1e5: |rho| {rho:.4?}"));

    // (a) trends of the full statistics, both centering modes.
    let farey = |order| {
        run_farey_limit_law(&FareyLawConfig {
            order,
            samples: n,
            p: PParam::PlusInfinity,
            p_prime: PParam::MinusInfinity,
            seed,
            mode: DpMode::Estimated,
            grid: DpGrid::DEFAULT,
        })
        .unwrap()
    };
    let (small, large) = (farey(100), farey(100_000));
    let mut lines = Vec::new();
    let mut ok = true;
    for mode in [DpMode::Estimated, DpMode::FittedMedian] {
        for name in ["log_jp", "log_jp_prime"] {
            let (a, b) = (small.stat(name, Some(mode)).unwrap().ks, large.stat(name, Some(mode)).unwrap().ks);
            ok &= b < a;
            lines.push(format!("{name}[{mode}] {a:.4} -> {b:.4}"));
        }
    }
    c.check("farey-law-ks-trend", ok, format!("Q = 1e2 -> 1e5: {}", lines.join(", ")));

    let real = |horizon| {
        run_real_limit_law(&RealLawConfig {
            horizon,
            samples: 2000,
            p: PParam::PlusInfinity,
            p_prime: PParam::MinusInfinity,
            seed,
            measure: Measure::Uniform,
            mode: DpMode::Estimated,
            grid: DpGrid::DEFAULT,
            tilde: false,
        })
        .unwrap()
    };
    let (small, large) = (real(1000), real(1_000_000));
    let mut lines = Vec::new();
    let mut ok = true;
    for name in ["log_jp", "log_jp_prime", "diameter", "max_abs"] {
        let mode = Some(DpMode::Estimated);
        let (a, b) = (small.stat(name, mode).unwrap().ks, large.stat(name, mode).unwrap().ks);
        ok &= b < a;
        lines.push(format!("{name} {a:.4} -> {b:.4}"));
    }
    c.check("real-law-ks-trend", ok, format!("M = 1e3 -> 1e6: {}", lines.join(", ")));

    // (b) the p <-> -p statistic under a/q <-> 1 - a/q, sample by sample.
    let d = estimate_dp(PParam::PlusInfinity, DpGrid::DEFAULT.grid_n, DpGrid::DEFAULT.den_min).unwrap();
    let d2 = estimate_dp(PParam::Finite(2.0), DpGrid::DEFAULT.grid_n, DpGrid::DEFAULT.den_min).unwrap();
    let sampler = FareySampler::new(10_000, 16).unwrap();
    let mut mismatches = 0;
    for i in 0..2000 {
        let (a, q) = sampler.sample_pair(&mut sample_rng(seed, i));
        for (p, dp) in [(PParam::PlusInfinity, d), (PParam::Finite(2.0), d2)] {
            let down = farey_statistic(&frac(a, q), p.negate(), -dp).unwrap();
            let up = farey_statistic(&frac(q - a, q), p, dp).unwrap();
            if down != -up {
                mismatches += 1;
            }
        }
    }
    c.check("p-reflection-symmetry", mismatches == 0, format!("2000 samples at Q = 1e4, p = inf and 2: {mismatches} mismatches"));

    // (c) antisymmetry of the estimated constants.
    let mut lines = Vec::new();
    let mut ok = true;
    for p in [PParam::PlusInfinity, PParam::Finite(2.0), PParam::Finite(0.5)] {
        let g = DpGrid::DEFAULT;
        let (up, down) = (estimate_dp(p, g.grid_n, g.den_min).unwrap(), estimate_dp(p.negate(), g.grid_n, g.den_min).unwrap());
        ok &= (up + down).abs() < tol::DP_ANTISYMMETRY;
        lines.push(format!("p = {p}: {up:.5} / {down:.5}"));
    }
    c.check("dp-antisymmetry", ok, lines.join(", "));
    c.finish(failures);
}

fn criterion_10(failures: &mut BTreeSet<String>) {
    let mut c = Criterion::new(10, "figure tables", secs(120));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f1.csv");
    let rows = rotation_sums::harness::emit_figure(Figure::F1, 150, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let lines = text.lines().count() - 1;
    // Independent count of reduced a/q in [0, 1] with q <= 150.
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let brute = (1..=150u64).map(|q| (0..=q).filter(|&a| gcd(a, q) == 1).count()).sum::<usize>();
    c.check("f1-rows-6881", rows == 6881 && lines == 6881, format!("{lines} rows written"));
    c.check("f1-rows-brute-force", rows == brute && lines == brute, format!("{lines} rows, brute-force count {brute}"));

    let f2b = figure_rows(Figure::F2b, 150).unwrap();
    let mut checked = 0;
    let mut bad = Vec::new();
    for row in f2b.iter().filter(|r| r.num == 1 && r.den >= 2) {
        let q = row.den as f64;
        let want = -q / 8.0 + 0.25 - if row.den % 2 == 1 { 1.0 / (8.0 * q) } else { 0.0 };
        checked += 1;
        if (row.statistic - want).abs() > 1e-12 {
            bad.push(row.den);
        }
    }
    c.check("f2b-at-1/q", bad.is_empty() && checked == 149, format!("{checked} rows checked, mismatches at {bad:?}"));

    let path = dir.path().join("f3a.csv");
    rotation_sums::harness::emit_figure(Figure::F3a, 600, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let found = text.lines().any(|l| l == "3,8,0.375,0.125");
    c.check("f3a-row-3/8", found, "row 3,8,0.375,0.125");
    c.finish(failures);
}

fn main() -> ExitCode {
    let mut failures = BTreeSet::new();
    criterion_1(&mut failures);
    criterion_2(&mut failures);
    criterion_3(&mut failures);
    criterion_4(&mut failures);
    criterion_5(&mut failures);
    criterion_6(&mut failures);
    criterion_7(&mut failures);
    criterion_8(&mut failures);
    criterion_9(&mut failures);
    criterion_10(&mut failures);

    let known: BTreeSet<String> = KNOWN_FAILURES.iter().map(|s| s.to_string()).collect();
    let unexpected: Vec<_> = failures.difference(&known).collect();
    let fixed: Vec<_> = known.difference(&failures).collect();
    println!("known failures: {}", KNOWN_FAILURES.join(", "));
    if unexpected.is_empty() && fixed.is_empty() {
        println!("acceptance: all checks outside the known-failure list pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures {unexpected:?}; known failures now passing {fixed:?}");
        ExitCode::FAILURE
    }
}
