//! Limit laws of log J_p over random Farey fractions.

use rotation_sums::harness::{run_farey_limit_law, run_farey_main_term, DpGrid, DpMode, FareyLawConfig};
use rotation_sums::PParam;

fn main() -> rotation_sums::Result<()> {
    println!("partial-quotient pair (no free constants):");
    for order in [100u64, 1000, 10_000] {
        let r = run_farey_main_term(order, 5000, 1)?;
        println!(
            "  Q = {order:>6}: KS even {:.3}, KS odd {:.3}, spearman {:.3}",
            r.statistics[0].ks,
            r.statistics[1].ks,
            r.correlation(None).unwrap()
        );
    }

    let config = FareyLawConfig {
        order: 10_000,
        samples: 2000,
        p: PParam::PlusInfinity,
        p_prime: PParam::MinusInfinity,
        seed: 1,
        mode: DpMode::Estimated,
        grid: DpGrid::DEFAULT,
    };
    println!("\n{}", run_farey_limit_law(&config)?);
    Ok(())
}
