//! Counts of cycle sets and Hom-cycle sets up to isomorphism, with the
//! cycle set count recomputed from left non-degenerate involutive YBE
//! solutions.
//!
//! cargo run --release --example census -- 4

use std::collections::BTreeSet;

use hombax::enumerate::{
    AlphaClass, EnumerationFilter, Property, canonical_form, count_up_to_iso, lndi_hybe_solutions,
};
use hombax::functors::to_hom_quasigroup;

fn main() -> hombax::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    println!(
        "{:>2} {:>12} {:>12} {:>16}",
        "n", "cycle sets", "via YBE", "Hom-cycle sets"
    );
    for n in 1..=max {
        let cycle = EnumerationFilter::all()
            .with(Property::CycleSet)
            .alpha(AlphaClass::Identity);
        let direct = count_up_to_iso(n, &cycle, None)?;
        let mut via = BTreeSet::new();
        for s in lndi_hybe_solutions(n, AlphaClass::Identity, None)? {
            via.insert(canonical_form(&to_hom_quasigroup(&s)?));
        }
        let hcs = count_up_to_iso(n, &EnumerationFilter::all().with(Property::HomCycleSet), None)?;
        println!(
            "{n:>2} {:>12} {:>12} {:>16}",
            direct.iso_classes,
            via.len(),
            hcs.iso_classes
        );
    }
    Ok(())
}
