//! Double categories with finitely many cells: the algebra is a double algebra exactly when all
//! horizontal and vertical 1-cells are invertible.

use double_algebra::families::{double_category_double, DoubleCategory};
use double_algebra::scalar::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let total = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let order = [(0, 0), (0, 1), (1, 1)];
    for (name, h, v) in [("total/total", &total[..], &total[..]), ("order/total", &order[..], &total[..])] {
        let dc = DoubleCategory::from_preorders(2, h, v)?;
        let out = double_category_double(&dc, Field::Rational)?;
        println!("{name}: {} cells, groupoids {}, axioms: {}", dc.cells(), out.groupoids, out.axioms);
        if !out.non_invertible.is_empty() {
            println!("  non-invertible 1-cells: {}", out.non_invertible.join(", "));
        }
    }
    Ok(())
}
