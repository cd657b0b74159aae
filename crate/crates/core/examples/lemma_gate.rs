//! The product test: `T` preserves stability on multiaffine polynomials in
//! `V` iff `T(∏(v + w_v))` is stable.

use stablegram::checks::gate_cases;
use stablegram::stability::{lemma_gate, raw_partition_step, SamplerConfig, DEFAULT_EXPAND_LIMIT};
use stablegram::Variable;

fn main() {
    let cfg = SamplerConfig::default().with_samples(2000);
    for n in 0..=2 {
        for (name, t, vars) in gate_cases(n) {
            let report = lemma_gate(&t, &vars, &cfg, DEFAULT_EXPAND_LIMIT);
            println!("{name}: |V| = {}, passes {}", vars.len(), report.passes());
        }
    }

    let report = lemma_gate(&raw_partition_step(), &[Variable::a(0), Variable::b(1)], &cfg, DEFAULT_EXPAND_LIMIT);
    println!("raw D_2: T(F) = {}", report.expanded.as_ref().unwrap());
    for (v, w) in &report.partners {
        println!("partner of {v}: {w}");
    }
    println!("{}", report.witness.unwrap().to_json());
}
