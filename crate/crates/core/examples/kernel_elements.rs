//! Known Burau kernel elements in B₅ and B₆ and the criteria on them.

use garside_burau::burau::rho;
use garside_burau::criteria::{degree_bound_report, kernel_exclusion};
use garside_burau::fixtures::{kernel_b5, kernel_b6, reference_nf_x_prime, run_all};

fn main() {
    for (name, w) in [("B6", kernel_b6()), ("B5", kernel_b5())] {
        println!("{name}: {} letters, ρ = Id: {}", w.to_artin_letters().len(), rho(&w).is_identity());
    }
    let x = reference_nf_x_prime().to_word();
    let report = degree_bound_report(&x);
    println!("conjugate in B6: M(ρ) = {} < sup_d = {}", report.max_deg, report.sup_d);
    println!("kernel exclusion: {:?}", kernel_exclusion(&x).conclusion);
    for r in run_all() {
        println!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
    }
}
