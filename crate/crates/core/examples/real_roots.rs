//! Exact real-rootedness certificates for the univariate specializations.

use stablegram::stability::{root_report, sturm_report, Specialization};

fn main() {
    for spec in Specialization::ALL {
        let top = if matches!(spec, Specialization::B | Specialization::M) { 3 } else { 6 };
        for n in 1..=top {
            let p = spec.polynomial(n);
            let report = sturm_report(&p).unwrap();
            println!("{}", report.to_json(&format!("{spec}_{n}")));
        }
    }
    println!("{}", Specialization::M.polynomial(3));

    // x^2 + x + 1 has no real roots
    let report = root_report(&[1.into(), 1.into(), 1.into()]).unwrap();
    println!("x^2 + x + 1: all_real = {}", report.all_real);
}
