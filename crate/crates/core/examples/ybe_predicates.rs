//! Checks a few small solutions against the braid, involutivity and
//! non-degeneracy predicates, including the two characterizations of left
//! non-degenerate involutive HYBE solutions.
//!
//! cargo run --example ybe_predicates

use hombax::FiniteMap;
use hombax::constructions::{permutation_solution, theta_solution, trivial_solution};
use hombax::quadset::{
    is_hybe_solution, is_involutive, is_nondegenerate, is_ybe_solution, lndi_hybe_five_conditions,
    lndi_hybe_six_conditions,
};
use hombax::{HomQuadraticSet, SquareTable};

fn show(name: &str, h: &HomQuadraticSet) {
    let q = h.base();
    println!("{name}  alpha = {:?}", h.alpha().as_slice());
    println!("  ybe            {:?}", is_ybe_solution(q).verdict);
    println!("  hybe           {:?}", is_hybe_solution(h).verdict);
    println!("  involutive     {:?}", is_involutive(q).verdict);
    println!("  non-degenerate {:?}", is_nondegenerate(q).verdict);
    println!("  six conditions {:?}", lndi_hybe_six_conditions(h).verdict);
    println!("  five conditions {:?}", lndi_hybe_five_conditions(h).verdict);
}

fn main() -> hombax::Result<()> {
    let swap = FiniteMap::new(vec![1, 0])?;
    show("flip r(x, y) = (y, x)", &trivial_solution(2, &swap)?);

    let id = FiniteMap::identity(2);
    show("r(x, y) = (s(y), x)", &permutation_solution(&swap, &id, &id)?);

    let rows = SquareTable::new(vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 1, 2]])?;
    show("theta solution, alpha = 0", &theta_solution(3, &rows)?);

    let c = FiniteMap::new(vec![1, 2, 0])?;
    let f = FiniteMap::new(vec![1, 2, 0])?;
    let g = FiniteMap::new(vec![0, 2, 1])?;
    show("r(x, y) = (f(y), g(x))", &permutation_solution(&f, &g, &c)?);
    Ok(())
}
