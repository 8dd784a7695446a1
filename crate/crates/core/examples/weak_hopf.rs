//! A weak Hopf algebra, presented by coproduct, counit and antipode, turned into a double algebra.

use double_algebra::families::{groupoid_double, wha_double, Groupoid, WeakHopfData};
use double_algebra::scalar::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Groupoid::pair(2);
    let w = WeakHopfData::groupoid(&g, Field::Rational)?;
    let dbl = wha_double(&w)?;
    println!("{}", dbl.report);
    let direct = groupoid_double(&g, Field::Rational)?;
    let same = dbl.algebra.vertical() == direct.vertical() && dbl.algebra.horizontal() == direct.horizontal();
    println!("agrees with the groupoid double: {same}");
    Ok(())
}
