//! The linear structure x·y = Ax + By on GF(p)^3 with alpha = C: a cycle set
//! whose alpha satisfies the square law, which is not a Hom-cycle set, while
//! its twist is.
//!
//! cargo run --example twist_matrix -- 5

use hombax::constructions::{example_matrix, linear_structure, matrix_spec};
use hombax::functors::twist;
use hombax::quasigroup::{is_cycle_set, is_hom_cycle_set};

fn main() -> hombax::Result<()> {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let spec = matrix_spec(p)?;
    println!("p = {p}, conditions = {:?}", spec.conditions());

    let (_, report) = linear_structure(&spec)?;
    println!("matrix verdict {:?}", report.verdict);
    for r in &report.routes {
        println!("  route {} {:?}", r.name, r.verdict);
    }

    let (orig, tw) = example_matrix(p)?;
    println!("{} elements", orig.n());
    println!("(X, ·) cycle set:       {}", is_cycle_set(orig.base()).holds());
    println!("original Hom-cycle set: {}", is_hom_cycle_set(&orig).holds());
    println!("twist Hom-cycle set:    {}", is_hom_cycle_set(&tw).holds());
    println!("twist of twist == original: {}", twist(&tw) == orig);
    Ok(())
}
