//! CSV tables behind the figures: `num,den,float_value,statistic` per fraction.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments::{h_p, h_p_exact, log_jp_exact, PParam};
use crate::ratcf::{farey_pairs, gauss_map, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    /// `log J_inf` on `[0, 1]`.
    F1,
    /// `h_inf` on `[0, 1)`.
    F2a,
    /// `h_-inf` on `[0, 1)`.
    F2b,
    /// `h_inf` on `[0.37, 0.38]`.
    F3a,
    /// `h_2` on `[0.37, 0.38]`.
    F3b,
    /// `h_inf(r) - 1/(8 Tr)`.
    F4a,
    /// `h_-inf(r) + 1/(8 r)`.
    F4b,
    /// `h_2(r) - 1/(8 Tr) - (1/4) log(1/Tr)`.
    F4c,
    /// `h_-2(r) + 1/(8 r) + (1/4) log(1/r)`.
    F4d,
}

impl Figure {
    pub const ALL: [Figure; 9] = [
        Figure::F1,
        Figure::F2a,
        Figure::F2b,
        Figure::F3a,
        Figure::F3b,
        Figure::F4a,
        Figure::F4b,
        Figure::F4c,
        Figure::F4d,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::F1 => "f1",
            Figure::F2a => "f2a",
            Figure::F2b => "f2b",
            Figure::F3a => "f3a",
            Figure::F3b => "f3b",
            Figure::F4a => "f4a",
            Figure::F4b => "f4b",
            Figure::F4c => "f4c",
            Figure::F4d => "f4d",
        }
    }

    /// Closed range of arguments, and whether `1` itself is included.
    fn window(self) -> (Rational, Rational, bool) {
        match self {
            Figure::F1 => (Rational::zero(), Rational::one(), true),
            Figure::F3a | Figure::F3b => (Rational::frac(37, 100), Rational::frac(38, 100), true),
            Figure::F2a | Figure::F2b => (Rational::zero(), Rational::one(), false),
            _ => (Rational::frac(0, 1), Rational::one(), false),
        }
    }

    fn excludes_zero(self) -> bool {
        matches!(self, Figure::F4a | Figure::F4b | Figure::F4c | Figure::F4d)
    }

    /// The plotted value at `r`.
    pub fn statistic(self, r: &Rational) -> Result<f64> {
        let exact = |p| -> Result<f64> { Ok(h_p_exact(r, p)?.expect("p is infinite").to_f64()) };
        let inv_tr = || {
            let t = gauss_map(r);
            if t.is_zero() { None } else { Some(t.recip().expect("t != 0").to_f64()) }
        };
        let inv_r = || r.recip().map(|x| x.to_f64());
        Ok(match self {
            Figure::F1 => log_jp_exact(&r.fract(), PParam::PlusInfinity)?.expect("p = inf").to_f64(),
            Figure::F2a | Figure::F3a => exact(PParam::PlusInfinity)?,
            Figure::F2b => exact(PParam::MinusInfinity)?,
            Figure::F3b => h_p(r, PParam::Finite(2.0))?,
            Figure::F4a => exact(PParam::PlusInfinity)? - inv_tr().map_or(0.0, |t| t / 8.0),
            Figure::F4b => exact(PParam::MinusInfinity)? + inv_r()? / 8.0,
            Figure::F4c => {
                h_p(r, PParam::Finite(2.0))? - inv_tr().map_or(0.0, |t| t / 8.0 + 0.25 * t.ln())
            }
            Figure::F4d => {
                let t = inv_r()?;
                h_p(r, PParam::Finite(-2.0))? + t / 8.0 + 0.25 * t.ln()
            }
        })
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|fig| fig.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown figure {s:?}")))
    }
}

/// Twelve significant digits, shortest decimal form.
pub fn format_float(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureRow {
    pub num: u64,
    pub den: u64,
    pub value: f64,
    pub statistic: f64,
}

/// Rows of `fig` over reduced fractions with denominator at most `den_max`, in increasing order.
pub fn figure_rows(fig: Figure, den_max: u64) -> Result<Vec<FigureRow>> {
    if den_max < 2 {
        return Err(Error::InvalidParameter(format!("figures need den_max >= 2, got {den_max}")));
    }
    let (lo, hi, with_one) = fig.window();
    let mut rows = Vec::new();
    for (a, q) in farey_pairs(den_max)? {
        let r = Rational::frac(a as i64, q as i64);
        if r < lo || r > hi || (!with_one && a == q) || (fig.excludes_zero() && a == 0) {
            continue;
        }
        rows.push(FigureRow { num: a, den: q, value: r.to_f64(), statistic: fig.statistic(&r)? });
    }
    Ok(rows)
}

/// Writes the CSV for `fig` and returns the number of data rows.
pub fn emit_figure(fig: Figure, den_max: u64, out_path: &Path) -> Result<usize> {
    let rows = figure_rows(fig, den_max)?;
    let io = |source| Error::Io { path: out_path.to_path_buf(), source };
    let mut out = std::io::BufWriter::new(std::fs::File::create(out_path).map_err(io)?);
    writeln!(out, "num,den,float_value,statistic").map_err(io)?;
    for row in &rows {
        writeln!(
            out,
            "{},{},{},{}",
            row.num,
            row.den,
            format_float(row.value),
            format_float(row.statistic)
        )
        .map_err(io)?;
    }
    out.flush().map_err(io)?;
    Ok(rows.len())
}
