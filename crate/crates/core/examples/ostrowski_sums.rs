//! Birkhoff sums S_N(a/q) from Ostrowski digits, checked against the direct sum.

use rotation_sums::ostrowski::{birkhoff_direct_exact, digits_of, RationalOstrowski};
use rotation_sums::ratcf::cf_expand;
use rotation_sums::Rational;

fn main() -> rotation_sums::Result<()> {
    let r = Rational::frac(89, 233);
    let eval = RationalOstrowski::from_rational(&r)?;
    println!("alpha = {r} = {}", cf_expand(&r)?);
    println!("denominators q_l = {:?}", eval.base().denominators());

    for n in [1u64, 7, 50, 144, 232] {
        let digits = digits_of(n, eval.base())?;
        let fast = eval.eval(n)?;
        let slow = birkhoff_direct_exact(&r, n);
        println!("N = {n:>3}  digits {:?}  S_N = {fast}  direct = {slow}", digits.digits);
        assert_eq!(fast, slow);
    }
    Ok(())
}
