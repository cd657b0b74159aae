//! Enumerating the word families and tabulating statistics over them.

use stablegram::structures::{coefficient_table, enumerate, statistics, table_to_csv, Statistic};
use stablegram::StructureFamily;

fn main() {
    for w in enumerate(StructureFamily::MarkedStirling, 2) {
        println!("{w}");
    }

    let legendre = enumerate(StructureFamily::Legendre, 2);
    println!("|L_2| = {}", legendre.len());
    let w = &legendre[7];
    let s = statistics(w).unwrap();
    println!("{w}: asc {:?} des {:?} plat {:?} barred descents {:?}", s.asc, s.des, s.plat, s.barred_des());

    let stats = [Statistic::Des, Statistic::Plat];
    let table = coefficient_table(StructureFamily::Stirling, 3, &stats).unwrap();
    print!("{}", table_to_csv(&stats, &table));

    for r in 1..=4 {
        let counts: Vec<usize> = (1..=3).map(|n| enumerate(StructureFamily::RStirling(r), n).len()).collect();
        println!("r={r}: {counts:?}");
    }
    let jplat = [Statistic::JPlat(1), Statistic::JPlat(2)];
    print!("{}", table_to_csv(&jplat, &coefficient_table(StructureFamily::RStirling(3), 3, &jplat).unwrap()));
}
