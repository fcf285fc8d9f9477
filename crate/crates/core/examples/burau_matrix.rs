//! Reduced Burau matrices, degree statistics and the determinant.

use garside_burau::burau::rho;
use garside_burau::BraidWord;

fn main() -> garside_burau::Result<()> {
    for (text, n) in [("s1", 4), ("D", 4), ("D^2", 4), ("s1 s2^-1 a1,3", 3)] {
        let w = BraidWord::parse(text, n)?;
        let m = rho(&w);
        println!("ρ_{n}({text}) =\n{m}");
        println!("degrees {:?}", m.degree_matrix().iter().map(|r| r.iter().map(|d| d.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
        println!("det = {}, e = {}\n", m.det(), w.exponent_sum());
    }
    Ok(())
}
