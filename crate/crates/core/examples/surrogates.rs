//! The partition and Legendre-Stirling grammars do not preserve stability
//! step by step, but along their own trajectory each step agrees with a
//! first-order operator that does.

use stablegram::grammar::surrogate_operator;
use stablegram::{FamilyKind, Polynomial, SurrogateKind, Variable};

fn main() {
    for n in 1..=5 {
        let s = FamilyKind::PartitionMulti.iterate(n);
        let raw = FamilyKind::PartitionMulti.grammar(n + 1).derive(&s);
        let surrogate = surrogate_operator(SurrogateKind::PartitionMulti, n as u32 + 1).apply(&s);
        println!("partition n={n}: D_{} S_n == T_{} S_n: {}", n + 1, n + 1, raw == surrogate);
    }
    for n in 1..=3 {
        let f = FamilyKind::Legendre.iterate_steps(2 * n - 1);
        let raw = FamilyKind::Legendre.grammar(2 * n).derive(&f);
        let surrogate = surrogate_operator(SurrogateKind::LegendreEven, n as u32).apply(&f);
        println!("legendre n={n}: D_{} f == T f: {} ({} terms)", 2 * n, raw == surrogate, raw.len());
    }

    let p = &Polynomial::var(Variable::a(0)) + &Polynomial::var(Variable::b(1));
    println!("off the trajectory, D_2(a + b1) = {}", FamilyKind::PartitionMulti.grammar(2).derive(&p));
    println!("                    T_2(a + b1) = {}", surrogate_operator(SurrogateKind::PartitionMulti, 2).apply(&p));
}
