//! Searching for exact zeros in the upper half-plane, and certifying them.

use stablegram::polyring::monomial;
use stablegram::stability::{certify, counterexample_point, raw_partition_step, sample_falsify, SamplerConfig};
use stablegram::structures::weight_polynomial;
use stablegram::{Polynomial, StructureFamily, Variable};

fn main() {
    let cfg = SamplerConfig::default();

    let (z1, z2) = (Variable::z(1), Variable::z(2));
    let p = &monomial([z1, z2]) + &Polynomial::one();
    let w = sample_falsify(&p, &cfg).expect("z1 z2 + 1 is not stable");
    println!("z1 z2 + 1: {} (certified {})", w.to_json(), certify(&p, &w));

    let (a, b1, w0, u) = (Variable::a(0), Variable::b(1), Variable::p(0), Variable::p(1));
    let f = &(&Polynomial::var(a) + &Polynomial::var(w0)) * &(&Polynomial::var(b1) + &Polynomial::var(u));
    let image = raw_partition_step().apply(&f);
    println!("D_2((a + w)(b1 + u)) = {image}");
    println!("at the known point: {}", image.evaluate(&counterexample_point()).unwrap());
    let found = sample_falsify(&image, &cfg).unwrap();
    println!("found by search at index {}: {}", found.index, found.to_json());

    for (r, n) in [(1, 3), (2, 3), (3, 3), (4, 2)] {
        let e = weight_polynomial(StructureFamily::RStirling(r), n);
        let verdict = sample_falsify(&e, &cfg.clone().with_samples(2000));
        println!("E_{n} for r={r}: {} terms, witness: {}", e.len(), verdict.is_some());
    }
}
