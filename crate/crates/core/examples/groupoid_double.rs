//! The double algebra of a finite groupoid, checked against the groupoid's own data.

use double_algebra::antipode::solve_antipode;
use double_algebra::families::{groupoid_double, Group, Groupoid};
use double_algebra::frobenius::Frobenius;
use double_algebra::scalar::Field;
use double_algebra::structure::check_distributivity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Groupoid::pair(2).disjoint_union(&Groupoid::from_group(&Group::cyclic(3)));
    let d = groupoid_double(&g, Field::Rational)?;
    println!("{} objects, {} arrows", g.objects(), g.arrows());
    println!("axioms: {}", d.check_axioms());

    let fr = Frobenius::new(&d)?;
    let galois: Vec<String> = (1..=8).filter(|&k| !fr.galois_identity_holds(k)).map(|k| format!("G{k}")).collect();
    println!("failing Galois identities: {}", if galois.is_empty() { "none".into() } else { galois.join(", ") });
    println!("distributive: {}", check_distributivity(&fr).distributive());

    let s = solve_antipode(&d)?.ok_or("no antipode")?;
    println!("antipode is arrow inversion: {}", s.matrix == g.inversion_matrix(Field::Rational));
    Ok(())
}
