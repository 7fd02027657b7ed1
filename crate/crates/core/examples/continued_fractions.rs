//! Continued fractions, the Gauss map and Farey fractions.

use rotation_sums::ratcf::{cf_alternate, cf_expand, farey_len, farey_sample, gauss_map, gauss_map2};
use rotation_sums::Rational;

fn main() -> rotation_sums::Result<()> {
    let r: Rational = "355/1133".parse()?;
    let cf = cf_expand(&r)?;
    println!("{r} = {cf}  (alternate: {})", cf_alternate(&cf)?);

    let conv = cf.convergents();
    for (p, q) in conv.p_list.iter().zip(&conv.q_list) {
        println!("  {p}/{q}");
    }

    println!("T r   = {}  = {}", gauss_map(&r), cf_expand(&gauss_map(&r))?);
    println!("T^2 r = {}  = {}", gauss_map2(&r), cf_expand(&gauss_map2(&r))?);

    println!("|F_150| = {}", farey_len(150));
    let draws = farey_sample(1000, 5, 42, 16)?;
    let shown: Vec<String> = draws.iter().map(|r| r.to_string()).collect();
    println!("five draws from F_1000 with q >= 16: {}", shown.join(", "));
    Ok(())
}
