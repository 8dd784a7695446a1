//! The matrix double algebra `M_n(Q)`: axioms, base ideals and the transpose antipode.
//!
//! Run with `cargo run --example matrix_double -- 3`.

use double_algebra::antipode::solve_antipode;
use double_algebra::double::Corner;
use double_algebra::families::matrix_double;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2);
    let d = matrix_double(n)?;
    println!("M_{n}: dimension {}, axioms: {}", d.dim(), d.check_axioms());
    println!("e = {}", d.render(d.e()));
    println!("i = {}", d.render(d.i()));
    for c in Corner::ALL {
        let ideal = d.base_ideal(c);
        let basis: Vec<String> = ideal.basis().iter().map(|v| d.render(v)).collect();
        println!("base ideal {c} (dim {}): {}", ideal.dim(), basis.join(", "));
    }
    let s = solve_antipode(&d)?.ok_or("no antipode")?;
    for k in 0..d.dim() {
        let x = d.basis_vector(k);
        println!("S({}) = {}", d.labels()[k], d.render(&s.apply(&x)));
    }
    Ok(())
}
