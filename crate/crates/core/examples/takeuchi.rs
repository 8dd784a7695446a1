//! The Takeuchi product `A ×_B A` of a Hopf double algebra, itself a double algebra.

use double_algebra::families::{hopf_group_double, Group};
use double_algebra::frobenius::Frobenius;
use double_algebra::scalar::Field;
use double_algebra::structure::takeuchi_double;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = hopf_group_double(&Group::cyclic(3), Field::Rational)?;
    let td = takeuchi_double(&Frobenius::new(&d)?)?;
    println!("Z_3: dim A = {}, dim A ×_B A = {}", d.dim(), td.algebra.dim());
    println!("axioms: {}", td.algebra.check_axioms());
    println!("{}", td.report);
    Ok(())
}
