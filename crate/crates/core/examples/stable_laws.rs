//! Stable laws with index 1: CDF, sampling and goodness of fit.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotation_sums::stablelaw::{ks_distance, stable_cdf, stable_median, Ecdf, StableParams, StableTable};

fn main() -> rotation_sums::Result<()> {
    let right = StableParams::new(1.0)?;
    for x in [-3.0, -1.0, 0.0, 1.0, 5.0, 50.0] {
        println!("F_Stab(1,1)({x:>5}) = {:.6e}", stable_cdf(x, right)?);
    }
    println!("median of Stab(1,1) = {:.6}", stable_median(right)?);

    let table = StableTable::shared(right)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let draws: Vec<f64> = (0..10_000).map(|_| table.sample(&mut rng)).collect();
    let ecdf = Ecdf::new(draws)?;
    println!("KS of 10^4 draws against their own law: {:.4}", ks_distance(&ecdf, |x| table.cdf(x)));
    let cauchy = ks_distance(&ecdf, |x| 0.5 + x.atan() / std::f64::consts::PI);
    println!("KS of the same draws against Cauchy:    {cauchy:.4}");
    Ok(())
}
