//! The order-4 square-free Hom-cycle set with constant alpha, and what each
//! quasigroup predicate says about it.
//!
//! cargo run --example hom_cycle_sets

use hombax::constructions::{example_4order, right_zero_hom_cycle_set};
use hombax::quasigroup::{
    alpha_square_law, is_cycle_set, is_delta_bijective, is_hom_cycle_set, is_im_cycle_set, is_square_free,
};
use hombax::{FiniteMap, HomQuasigroup};

fn report(name: &str, h: &HomQuasigroup) {
    println!("{name}");
    for row in h.base().table().rows() {
        println!("  {row:?}");
    }
    println!("  alpha = {:?}", h.alpha().as_slice());
    let checks = [
        is_cycle_set(h.base()),
        is_hom_cycle_set(h),
        is_im_cycle_set(h),
        is_square_free(h.base()),
        is_delta_bijective(h.base()),
        alpha_square_law(h),
    ];
    for c in checks {
        match c.witness() {
            None => println!("  {:<16} holds", c.name),
            Some(w) => println!("  {:<16} fails: {} at {:?}", c.name, w.clause, w.elements),
        }
    }
}

fn main() -> hombax::Result<()> {
    report("order-4 example", &example_4order());
    report(
        "right-zero, alpha = 0",
        &right_zero_hom_cycle_set(3, &FiniteMap::constant(3, 0)?)?,
    );
    Ok(())
}
