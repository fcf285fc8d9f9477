//! Reading the dual normal form of a simply-nested braid back off its
//! Burau matrix.

use garside_burau::burau::rho;
use garside_burau::dual::normal_form_d;
use garside_burau::random::random_simply_nested;
use garside_burau::recovery::dual_nf_from_matrix;

fn main() -> garside_burau::Result<()> {
    let w = random_simply_nested(5, 6, 2024)?;
    let m = rho(&w);
    let (nf, trace) = dual_nf_from_matrix(&m, 5)?;
    println!("word       {w}");
    println!("recovered  δ^{} {}", nf.p, nf.factors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
    println!("matches normal form: {}", nf == normal_form_d(&w));
    for step in &trace.steps {
        let letter = step.letter.as_ref().map(|l| format!("a{},{}", l.i0, l.p)).unwrap_or_else(|| "-".into());
        println!("  strip {} read letter {letter}", step.factor);
    }
    println!("terminal δ power {}", trace.terminal_power);
    assert_eq!(trace.replay(5), m);
    Ok(())
}
