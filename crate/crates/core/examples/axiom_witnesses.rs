//! Broken tables and the symmetries: every failing axiom comes with a basis-pair witness, and
//! the dual/op/coop symmetries permute which axioms fail.

use double_algebra::algebra::ProductTable;
use double_algebra::double::{Axiom, DoubleAlgebra, Symmetry};
use double_algebra::families::{commutative_double, matrix_algebra, matrix_double};
use double_algebra::scalar::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    if let Err(e) = commutative_double(matrix_algebra(q, 2)?) {
        println!("M_2 with ∘ = ⋆ rejected: {e}");
    }

    let d = matrix_double(2)?;
    let v = d.vertical();
    let mut constants = v.constants().to_vec();
    constants[0] = q.from_i64(2);
    let broken = DoubleAlgebra::new_unchecked(ProductTable::new_unchecked(q, 4, constants, v.unit().to_vec())?, d.horizontal().clone())?;
    let rep = broken.check_axioms();
    println!("perturbed M_2: {rep}");
    for s in [Symmetry::Dual, Symmetry::Op, Symmetry::Coop] {
        let image = broken.symmetry(s).check_axioms();
        let moved: Vec<String> = rep.failing().iter().map(|a: &Axiom| format!("{a}→{}", a.under(s))).collect();
        println!("{s:?}: failing {:?}, predicted {}", image.failing(), moved.join(" "));
    }
    Ok(())
}
