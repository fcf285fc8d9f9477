//! Classical left normal form and the σ₂σ₁σ₃ criterion in B₄.

use garside_burau::classical::normal_form_c;
use garside_burau::criteria::classical_criterion_b4;
use garside_burau::BraidWord;

fn main() -> garside_burau::Result<()> {
    let w = BraidWord::parse("s1 s3 s2^-1 s1 s2 s3 s2", 4)?;
    let nf = normal_form_c(&w);
    println!("word      {w}");
    println!("p = {}, factors: {}", nf.p, nf.factors.iter().map(|s| format!("({s})")).collect::<Vec<_>>().join(" "));
    println!("inf {} sup {} len {}", nf.inf(), nf.sup(), nf.len());

    let verdict = classical_criterion_b4(&w)?;
    println!("{}", serde_json::to_string_pretty(&verdict).expect("serializable"));
    Ok(())
}
