//! Double algebras of Frobenius extensions `N ⊂ M`, with and without the depth-two property.

use double_algebra::families::{depth2_verify, extension_antipode_report, frobenius_extension_double, Depth2Basis, FrobeniusExtension, Group};
use double_algebra::frobenius::Frobenius;
use double_algebra::scalar::Field;
use double_algebra::structure::check_distributivity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;

    let trace = FrobeniusExtension::matrix_trace(q, 2)?;
    let dbl = frobenius_extension_double(&trace)?;
    println!("Q ⊂ M_2 with the trace: dimension {}", dbl.algebra.dim());
    println!("{}", extension_antipode_report(&dbl));
    let left = Depth2Basis::over_ground_field(&trace);
    let right = Depth2Basis::right_from_left(&trace, &left);
    let rep = depth2_verify(&trace, &dbl, &left, &right);
    println!("depth-two data verified: {}", rep.passed());
    let bad = depth2_verify(&trace, &dbl, &left.scaled(&q.from_i64(2)), &right);
    for check in bad.failures().take(2) {
        println!("  scaled basis: {} {}", check.name, check.detail.as_deref().unwrap_or(""));
    }

    let sub = FrobeniusExtension::group_subgroup(&Group::symmetric3(), &[0, 1], q)?;
    let dbl = frobenius_extension_double(&sub)?;
    let fr = Frobenius::new(&dbl.algebra)?;
    let failing = (1..=8).filter(|&k| !fr.galois_identity_holds(k)).count();
    println!("QS_2 ⊂ QS_3: dimension {}, failing Galois identities {failing}/8", dbl.algebra.dim());
    println!("distributive: {}", check_distributivity(&fr).distributive());
    Ok(())
}
