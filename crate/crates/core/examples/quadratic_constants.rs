//! Growth constants C_p of quadratic irrationals and h_p along their convergents.

use rotation_sums::quadratic::{estimate_cp, hp_at_convergents, known_cp, KnownSurd};
use rotation_sums::PParam;

fn main() -> rotation_sums::Result<()> {
    let m_max = 1_000_000;
    for name in ["sqrt2", "sqrt3"] {
        let alpha = name.parse::<KnownSurd>()?.expansion();
        for p in [PParam::PlusInfinity, PParam::MinusInfinity] {
            let est = estimate_cp(&alpha, p, m_max)?;
            let exact = known_cp(name, p)?;
            println!("{name} p = {:>4}: {:.5} +- {:.5}  closed form {exact:.5}", p.to_string(), est.estimate, est.ci_halfwidth);
        }
        let est = estimate_cp(&alpha, PParam::Finite(2.0), m_max)?;
        println!("{name} p =    2: {:.5} +- {:.5}", est.estimate, est.ci_halfwidth);
    }

    let alpha = KnownSurd::Sqrt3.expansion();
    let up = hp_at_convergents(&alpha, PParam::PlusInfinity, 20)?;
    let down = hp_at_convergents(&alpha, PParam::MinusInfinity, 20)?;
    for ((k, a), (_, b)) in up.iter().zip(&down).skip(12) {
        println!("k = {k:>2}: h_inf = {a:.5}  h_-inf = {b:.5}");
    }
    Ok(())
}
