use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use rotation_sums::harness::{
    self, emit_figure, estimate_dp, estimate_dtilde_p, run_farey_limit_law, run_farey_main_term,
    run_real_limit_law, DpGrid, DpMode, FareyLawConfig, Figure, Measure, RealLawConfig,
};
use rotation_sums::moments::{g_p, h_p, log_jp, main_term, w_p};
use rotation_sums::quadratic::{estimate_cp, known_cp, surd_cf, KnownSurd, PeriodicCf, QuadraticSurd};
use rotation_sums::ratcf::{cf_alternate, cf_expand};
use rotation_sums::stablelaw::{stable_cdf, StableParams};
use rotation_sums::sudler::{log_jtilde_p, vol_41, volume_residual};
use rotation_sums::{Error, PParam, Rational, Result};

#[derive(Parser)]
#[command(name = "rotsum", version, about = "Birkhoff sums of circle rotations and their limit laws")]
struct Cli {
    /// Also write the result as JSON.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Continued fraction expansion and convergents of a rational.
    Cf { r: Rational },
    /// h_p, g_p and the main term at a rational.
    Hp {
        #[arg(long, allow_hyphen_values = true)]
        p: PParam,
        #[arg(long)]
        r: Rational,
    },
    /// The one-sided limit W_p at a rational.
    Wp {
        #[arg(long, allow_hyphen_values = true)]
        p: PParam,
        #[arg(long)]
        r: Rational,
    },
    /// Write a figure table as CSV.
    Figures {
        /// f1, f2a, f2b, f3a, f3b, f4a..f4d, or `all` (then --out is a directory).
        #[arg(long)]
        fig: String,
        #[arg(long, default_value_t = 150)]
        den_max: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Residual of log J~_2(1/q) against the volume asymptotics.
    Volume {
        #[arg(long, value_delimiter = ',', default_values_t = [250u64, 500, 1000, 2000])]
        q_list: Vec<u64>,
    },
    /// Growth constant C_p of a quadratic irrational.
    Quadratic {
        /// sqrt2, sqrt3 or golden.
        #[arg(long)]
        surd: String,
        #[arg(long, allow_hyphen_values = true)]
        p: PParam,
        #[arg(long, default_value = "1e7", value_parser = parse_count)]
        m_max: u64,
    },
    /// Limit law over random Farey fractions.
    FareyLaw {
        #[arg(long = "Q", value_parser = parse_count)]
        order: u64,
        #[arg(long, value_parser = parse_count)]
        n: u64,
        #[arg(long, default_value = "inf", allow_hyphen_values = true)]
        p: PParam,
        #[arg(long, default_value = "-inf", allow_hyphen_values = true)]
        pprime: PParam,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only the constant-free partial-quotient pair.
        #[arg(long)]
        main_term_only: bool,
        #[arg(long, default_value = "estimated")]
        mode: DpMode,
        #[arg(long, default_value_t = DpGrid::DEFAULT.grid_n)]
        grid_n: u64,
        #[arg(long, default_value_t = DpGrid::DEFAULT.den_min)]
        den_min: u64,
        /// Write the normalized samples as CSV.
        #[arg(long)]
        samples_csv: Option<PathBuf>,
    },
    /// Limit law over random reals.
    RealLaw {
        #[arg(long = "M", value_parser = parse_count)]
        horizon: u64,
        #[arg(long, value_parser = parse_count)]
        n: u64,
        #[arg(long, default_value = "inf", allow_hyphen_values = true)]
        p: PParam,
        #[arg(long, default_value = "-inf", allow_hyphen_values = true)]
        pprime: PParam,
        #[arg(long, default_value = "uniform")]
        measure: Measure,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the Sudler product family at p.
        #[arg(long)]
        tilde: bool,
        #[arg(long, default_value = "estimated")]
        mode: DpMode,
        #[arg(long, default_value_t = DpGrid::DEFAULT.grid_n)]
        grid_n: u64,
        #[arg(long, default_value_t = DpGrid::DEFAULT.den_min)]
        den_min: u64,
        #[arg(long)]
        samples_csv: Option<PathBuf>,
    },
    /// Estimate of the centering constant D_p (or D~_p with --tilde).
    EstimateDp {
        #[arg(long, allow_hyphen_values = true)]
        p: PParam,
        #[arg(long, default_value_t = DpGrid::DEFAULT.grid_n)]
        grid_n: u64,
        #[arg(long, default_value_t = DpGrid::DEFAULT.den_min)]
        den_min: u64,
        #[arg(long)]
        tilde: bool,
    },
    /// CDF of Stab(1, beta).
    StableCdf {
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        x: Vec<f64>,
    },
}

fn parse_count(s: &str) -> std::result::Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x < 2f64.powi(63) => Ok(x as u64),
        _ => Err(format!("expected a non-negative integer, got {s:?}")),
    }
}

fn surd_expansion(name: &str) -> Result<PeriodicCf> {
    match name {
        "golden" => surd_cf(&QuadraticSurd::new(1, 2, 5)?),
        other => Ok(other.parse::<KnownSurd>()?.expansion()),
    }
}

fn show(value: std::result::Result<f64, Error>) -> Value {
    match value {
        Ok(v) => json!(v),
        Err(e) => json!(e.to_string()),
    }
}

fn run(command: Command) -> Result<Value> {
    Ok(match command {
        Command::Cf { r } => {
            let cf = cf_expand(&r)?;
            println!("{r} = {cf}");
            if let Ok(alt) = cf_alternate(&cf) {
                println!("alternate form: {alt}");
            }
            let conv = cf.convergents();
            println!("{:>4} {:>20} {:>20}", "l", "p_l", "q_l");
            for (l, (p, q)) in conv.p_list.iter().zip(&conv.q_list).enumerate() {
                println!("{l:>4} {p:>20} {q:>20}");
            }
            json!({ "r": r, "expansion": cf.to_string(), "convergents": conv })
        }
        Command::Hp { p, r } => {
            let h = h_p(&r, p)?;
            let g = g_p(&r, p);
            let m = main_term(&r, p);
            println!("log J_p({r}) = {}", log_jp(&r, p)?.log_value);
            println!("h_p({r}) = {h}");
            println!("g_p({r}) = {}", show_text(&g));
            println!("main term = {}", show_text(&m));
            json!({ "p": p, "r": r, "h_p": h, "g_p": show(g), "main_term": show(m) })
        }
        Command::Wp { p, r } => {
            let w = w_p(&r, p)?;
            println!("W_p({r}) = {w}");
            json!({ "p": p, "r": r, "w_p": w })
        }
        Command::Figures { fig, den_max, out } => {
            let figs: Vec<Figure> = if fig == "all" {
                std::fs::create_dir_all(&out).map_err(|source| Error::Io { path: out.clone(), source })?;
                Figure::ALL.to_vec()
            } else {
                vec![fig.parse()?]
            };
            let mut written = Vec::new();
            for f in figs {
                let path = if fig == "all" { out.join(format!("{f}.csv")) } else { out.clone() };
                let rows = emit_figure(f, den_max, &path)?;
                println!("{f}: {rows} rows -> {}", path.display());
                written.push(json!({ "figure": f, "rows": rows, "path": path }));
            }
            Value::Array(written)
        }
        Command::Volume { q_list } => {
            let shift = 3f64.ln() / 8.0;
            println!("Vol(4_1) = {:.12}", vol_41());
            println!("{:>8} {:>20} {:>14} {:>14}", "q", "log J~_2(1/q)", "residual", "+ log(3)/8");
            let mut rows = Vec::new();
            for q in q_list {
                let lj = log_jtilde_p(&Rational::frac(1, q as i64), PParam::Finite(2.0))?;
                let res = volume_residual(q)?;
                println!("{q:>8} {lj:>20.10} {res:>14.8} {:>14.8}", res + shift);
                rows.push(json!({ "q": q, "log_jtilde_2": lj, "residual": res }));
            }
            json!({ "vol_41": vol_41(), "rows": rows })
        }
        Command::Quadratic { surd, p, m_max } => {
            let alpha = surd_expansion(&surd)?;
            let est = estimate_cp(&alpha, p, m_max)?;
            let closed = known_cp(&surd, p).ok();
            println!("alpha = {alpha}");
            println!("C_p estimate = {:.6} +- {:.6}", est.estimate, est.ci_halfwidth);
            match closed {
                Some(c) => println!(
                    "closed form  = {c:.6} (relative error {:.3}%)",
                    100.0 * (est.estimate - c) / c.abs()
                ),
                None => println!("closed form  = unknown"),
            }
            json!({ "surd": surd, "p": p, "m_max": m_max, "estimate": est, "closed_form": closed })
        }
        Command::FareyLaw { order, n, p, pprime, seed, main_term_only, mode, grid_n, den_min, samples_csv } => {
            let mut report = if main_term_only {
                run_farey_main_term(order, n, seed)?
            } else {
                let grid = DpGrid { grid_n, den_min };
                run_farey_limit_law(&FareyLawConfig { order, samples: n, p, p_prime: pprime, seed, mode, grid })?
            };
            finish_report(&mut report, samples_csv.as_deref())?
        }
        Command::RealLaw { horizon, n, p, pprime, measure, seed, tilde, mode, grid_n, den_min, samples_csv } => {
            let grid = DpGrid { grid_n, den_min };
            let config = RealLawConfig { horizon, samples: n, p, p_prime: pprime, seed, measure, mode, grid, tilde };
            let mut report = run_real_limit_law(&config)?;
            finish_report(&mut report, samples_csv.as_deref())?
        }
        Command::EstimateDp { p, grid_n, den_min, tilde } => {
            let (name, value, constant) = if tilde {
                ("D~_p", estimate_dtilde_p(p, grid_n, den_min)?, harness::dtilde_constant())
            } else {
                ("D_p", estimate_dp(p, grid_n, den_min)?, harness::dp_constant(p))
            };
            println!("{name}({p}) ~ {value:.6}  (estimate; grid_n = {grid_n}, den_min = {den_min})");
            println!("closed-form constant term = {constant:.12}");
            json!({ "name": name, "p": p, "grid_n": grid_n, "den_min": den_min, "estimate": value, "constant_term": constant })
        }
        Command::StableCdf { beta, x } => {
            let params = StableParams::new(beta)?;
            let mut rows = Vec::new();
            for xi in x {
                let f = stable_cdf(xi, params)?;
                println!("F({xi}) = {f:.12e}");
                rows.push(json!({ "x": xi, "cdf": f }));
            }
            json!({ "beta": beta, "values": rows })
        }
    })
}

fn show_text(v: &std::result::Result<f64, Error>) -> String {
    match v {
        Ok(x) => x.to_string(),
        Err(e) => format!("undefined ({e})"),
    }
}

fn finish_report(report: &mut harness::ExperimentReport, csv: Option<&Path>) -> Result<Value> {
    if let Some(path) = csv {
        report.write_samples_csv(path)?;
    }
    println!("{report}");
    Ok(serde_json::to_value(&*report).expect("report serializes"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli.command).and_then(|value| match &cli.json {
        Some(path) => std::fs::write(path, serde_json::to_string_pretty(&value).expect("json"))
            .map_err(|source| Error::Io { path: path.clone(), source }),
        None => Ok(()),
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
