//! Seeded random braids: plain words and simply-nested normal forms.

use garside_burau::dual::normal_form_d;
use garside_burau::random::{random_mixed_word, random_simply_nested, random_word, rng_from_seed};

fn main() -> garside_burau::Result<()> {
    let mut rng = rng_from_seed(42);
    println!("word         {}", random_word(5, 12, &mut rng));
    println!("mixed tokens {}", random_mixed_word(5, 6, &mut rng));
    let w = random_simply_nested(5, 4, 42)?;
    let nf = normal_form_d(&w);
    println!("simply-nested {w}");
    println!("  {} factors, simply-nested: {}", nf.len(), nf.is_simply_nested());
    Ok(())
}
