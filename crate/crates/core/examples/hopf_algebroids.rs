//! The four bialgebroids of a distributive Frobenius double algebra, their pairings and integrals.

use double_algebra::families::matrix_double;
use double_algebra::frobenius::Frobenius;
use double_algebra::structure::{extract_hopf_algebroids, frobenius_integrals, hgd_round_trip, pairings};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = matrix_double(2)?;
    let fr = Frobenius::new(&d)?;
    let h = extract_hopf_algebroids(&fr)?;
    for b in h.vertical.iter().chain(&h.horizontal) {
        println!("{}: base {}, source {}, target {}", b.name, b.base, b.source, b.target);
    }
    println!("{}", h.report);
    println!("{}", hgd_round_trip(&fr)?);
    let (found, report) = pairings(&fr)?;
    for p in &found {
        println!("pairing {}: nondegenerate {}/{}", p.kind.name(), p.left_nondegenerate, p.right_nondegenerate);
    }
    println!("{report}");
    println!("{}", frobenius_integrals(&fr)?.report);
    Ok(())
}
