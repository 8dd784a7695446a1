//! Group algebras as double algebras: index elements and Maschke's theorem by characteristic.

use double_algebra::families::{hopf_group_double, Group};
use double_algebra::frobenius::{regularity_witness, Frobenius, MaschkeReport};
use double_algebra::scalar::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = Group::symmetric3();
    for field in [Field::Rational, Field::prime(2)?, Field::prime(3)?, Field::prime(5)?] {
        let d = hopf_group_double(&s3, field)?;
        let fr = Frobenius::new(&d)?;
        println!("S_3 over {field}");
        for ind in fr.index_elements() {
            println!("  Ind Φ_{} = {}", ind.corner, d.render(&ind.from_dual_basis));
        }
        match regularity_witness(&d) {
            Some(j) => println!("  i is regular, j = {}", d.render(&j)),
            None => println!("  i is not regular"),
        }
        let maschke = MaschkeReport::new(&d);
        println!("  vertical Maschke conditions: {:?}", maschke.vertical.decided());
    }
    Ok(())
}
