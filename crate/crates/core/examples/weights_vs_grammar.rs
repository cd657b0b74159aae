//! The grammar output equals the generating polynomial of the labeled
//! words, term by term.

use stablegram::structures::{enumerate, enumeration_polynomial, weight_monomial};
use stablegram::{FamilyKind, StructureFamily};

fn main() {
    for w in enumerate(StructureFamily::Permutation, 3) {
        println!("{w}  ->  {}", weight_monomial(&w));
    }
    println!("A_3(x, y) = {}", FamilyKind::EulerianMulti.iterate(3));

    for kind in FamilyKind::ALL {
        let top = match kind {
            FamilyKind::Legendre => 3,
            FamilyKind::PartitionUni | FamilyKind::PartitionMulti => 7,
            _ => 5,
        };
        let agree = (0..=top).all(|n| kind.iterate(n) == enumeration_polynomial(kind, n));
        println!("{}: grammar == words for n <= {top}: {agree}", kind.name());
    }
}
