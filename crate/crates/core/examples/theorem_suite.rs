//! Runs every theorem of the suite on all left Hom-quasigroups up to the
//! given order and prints one line per theorem.
//!
//! cargo run --release --example theorem_suite -- 3

use hombax::suite::verify_theorem_suite;

fn main() -> hombax::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let report = verify_theorem_suite(n, None)?;
    for u in &report.universe {
        println!(
            "order {}: {} Hom-quasigroups, {} Hom-cycle sets",
            u.n, u.hom_quasigroups, u.hom_cycle_sets
        );
    }
    for t in &report.theorems {
        let mark = if t.holds() { "ok  " } else { "FAIL" };
        println!(
            "{mark} {:<40} {:>7}/{:<7} {}",
            t.name, t.passed, t.instances, t.statement
        );
        for c in &t.counterexamples {
            println!("       n = {} op = {:?} alpha = {:?}: {}", c.n, c.op, c.alpha, c.detail);
        }
    }
    println!("all pass: {}", report.all_pass);
    Ok(())
}
