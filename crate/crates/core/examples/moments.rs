//! Exponential moments J_p, the cocycle h_p and its one-sided limits at 3/8.

use rotation_sums::moments::{g_p, h_p, h_p_exact, log_jp, main_term, w_p, w_p_exact};
use rotation_sums::{PParam, Rational};

fn main() -> rotation_sums::Result<()> {
    let r = Rational::frac(3, 8);
    for p in [PParam::PlusInfinity, PParam::MinusInfinity, PParam::Finite(2.0), PParam::Finite(-2.0)] {
        println!(
            "p = {:>4}: log J_p = {:>9.6}  h_p = {:>9.6}  g_p = {:>9.6}  main = {:>6.3}  W_p = {:>9.6}",
            p.to_string(),
            log_jp(&r, p)?.log_value,
            h_p(&r, p)?,
            g_p(&r, p)?,
            main_term(&r, p)?,
            w_p(&r, p)?,
        );
    }
    println!("exact h_inf(3/8) = {}", h_p_exact(&r, PParam::PlusInfinity)?.unwrap());
    println!("exact W_inf(3/8) = {}", w_p_exact(&r, PParam::PlusInfinity)?.unwrap());

    // h_inf([0;2,1,2,m]) approaches W_inf(3/8) from the left as m grows.
    for m in [10u64, 100, 1000, 10_000] {
        let x = rotation_sums::CfExpansion::unit(vec![2, 1, 2, m])?.value();
        println!("m = {m:>5}: h_inf = {:.6}", h_p(&x, PParam::PlusInfinity)?);
    }
    Ok(())
}
