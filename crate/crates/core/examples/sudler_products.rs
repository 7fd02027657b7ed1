//! Sudler products, their moments and the figure-eight knot volume.

use rotation_sums::ostrowski::AlphaSource;
use rotation_sums::quadratic::KnownSurd;
use rotation_sums::sudler::{h_tilde_p, log_jtilde_p, sudler_log, vol_41, volume_residual};
use rotation_sums::{PParam, Rational};

fn main() -> rotation_sums::Result<()> {
    let r = Rational::frac(5, 13);
    for p in [PParam::PlusInfinity, PParam::MinusInfinity, PParam::Finite(2.0)] {
        println!("log J~_{p}({r}) = {:.6}   h~ = {:.6}", log_jtilde_p(&r, p)?, h_tilde_p(&r, p)?);
    }

    let alpha = KnownSurd::Sqrt2.expansion().source();
    for n in [10u64, 1000, 100_000] {
        println!("log P_N(sqrt 2) at N = {n}: {:.6}", sudler_log(&alpha, n)?.log_product);
    }
    let rational = AlphaSource::Exact(Rational::frac(1, 7));
    println!("log P_6(1/7) = {:.6} = log 7", sudler_log(&rational, 6)?.log_product);

    println!("Vol(4_1) = {:.12}", vol_41());
    for q in [250u64, 500, 1000, 2000] {
        println!("q = {q:>4}: residual + log(3)/8 = {:+.3e}", volume_residual(q)? + 3f64.ln() / 8.0);
    }
    Ok(())
}
