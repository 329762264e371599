//! Dual solutions r∘ = τrτ of non-degenerate Hom-cycle sets, and the error
//! returned for a degenerate one.
//!
//! cargo run --example dual_solution

use hombax::constructions::{example_4order, example_matrix};
use hombax::functors::{dual_solution, to_hom_quadratic_set};
use hombax::quadset::{is_hybe_solution, is_nondegenerate};

fn main() -> hombax::Result<()> {
    let (_, tw) = example_matrix(3)?;
    let s = to_hom_quadratic_set(&tw);
    let dual = dual_solution(&s)?;
    println!("twisted matrix example, 27 elements");
    println!("  dual is HYBE:           {}", is_hybe_solution(&dual).holds());
    println!("  dual is non-degenerate: {}", is_nondegenerate(dual.base()).holds());
    println!("  dual of dual == r:      {}", dual_solution(&dual)? == s);

    let four = to_hom_quadratic_set(&example_4order());
    match dual_solution(&four) {
        Ok(_) => println!("order-4 example unexpectedly has a dual"),
        Err(e) => println!("order-4 example: {e} (witness {:?})", e.witness()),
    }
    Ok(())
}
