//! M(ρ(x)) ≤ sup_d(x) on random braids, with equality when simply-nested.

use garside_burau::criteria::degree_bound_report;
use garside_burau::random::{random_simply_nested, random_word, rng_from_seed};

fn main() -> garside_burau::Result<()> {
    let mut rng = rng_from_seed(1);
    for n in 3..=6 {
        let w = random_word(n, 20, &mut rng);
        let r = degree_bound_report(&w);
        println!("B{n} random:        M = {:>3}  sup_d = {:>3}  simply-nested {}", r.max_deg.to_string(), r.sup_d, r.simply_nested);
        let w = random_simply_nested(n, 5, n as u64)?;
        let r = degree_bound_report(&w);
        println!("B{n} simply-nested: M = {:>3}  sup_d = {:>3}", r.max_deg.to_string(), r.sup_d);
    }
    Ok(())
}
