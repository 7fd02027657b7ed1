//! Max, min, diameter and center of S_N, 0 <= N < M, for random reals.

use rotation_sums::harness::{run_real_limit_law, DpGrid, DpMode, Measure, RealLawConfig};
use rotation_sums::PParam;

fn main() -> rotation_sums::Result<()> {
    let config = RealLawConfig {
        horizon: 100_000,
        samples: 1000,
        p: PParam::PlusInfinity,
        p_prime: PParam::MinusInfinity,
        seed: 3,
        measure: Measure::Gauss,
        mode: DpMode::FittedMedian,
        grid: DpGrid::DEFAULT,
        tilde: true,
    };
    let report = run_real_limit_law(&config)?;
    println!("{report}");
    Ok(())
}
