//! Estimates of D_p and D~_p on two grids.

use rotation_sums::harness::{dp_constant, estimate_dp, estimate_dtilde_p};
use rotation_sums::PParam;

fn main() -> rotation_sums::Result<()> {
    for p in [PParam::PlusInfinity, PParam::MinusInfinity, PParam::Finite(1.0), PParam::Finite(-1.0)] {
        let coarse = estimate_dp(p, 500, 200)?;
        let fine = estimate_dp(p, 2000, 1000)?;
        println!("D_{:<4} ~ {coarse:.5} / {fine:.5}   (constant term {:.5})", p.to_string(), dp_constant(p));
    }
    println!("D~_2   ~ {:.5}", estimate_dtilde_p(PParam::Finite(2.0), 500, 200)?);
    Ok(())
}
