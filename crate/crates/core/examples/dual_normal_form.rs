//! Dual (band generator) normal form, polygons and simply-nestedness.

use garside_burau::dual::normal_form_d;
use garside_burau::BraidWord;

fn main() -> garside_burau::Result<()> {
    for text in ["a3,4 a2,4", "a2,4^-1 a3,4^-1", "s1 s3 s2 s1 s3 s2"] {
        let w = BraidWord::parse(text, 4)?;
        let nf = normal_form_d(&w);
        println!("{text}");
        println!("  δ^{} {}", nf.p, nf.factors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
        for d in &nf.factors {
            println!("  polygons {:?}", d.polygons());
        }
        println!("  simply-nested: {}", nf.is_simply_nested());
    }
    Ok(())
}
