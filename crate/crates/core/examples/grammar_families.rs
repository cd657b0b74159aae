//! Iterating the grammar families: the formal derivative applied step by
//! step to the seed letter.

use stablegram::FamilyKind;

fn main() {
    for kind in FamilyKind::ALL {
        println!("{} (seed {}):", kind.name(), kind.seed());
        for n in 0..=2 {
            let p = kind.iterate(n);
            let shown = if p.len() <= 6 { p.to_string() } else { format!("{} terms", p.len()) };
            println!("  n={n}: {shown}");
        }
    }

    let g = FamilyKind::Stirling2Multi.grammar(3);
    for (letter, production) in g.rules() {
        println!("stirling2_multi step 3: {letter} -> {production}");
    }
}
