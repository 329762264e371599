//! Writes a Hom-cycle set as a JSON document, reads it back, converts it to
//! its solution and back, and checks every step reproduces the same bytes.
//!
//! cargo run --example file_roundtrip

use hombax::constructions::example_4order;
use hombax::document::{Meta, Structure, StructureDocument};
use hombax::functors::{to_hom_quadratic_set, to_hom_quasigroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = StructureDocument::new(Structure::HomQuasigroup(example_4order()))
        .with_meta(Meta::named("four-order", "square-free, constant alpha"));
    let text = doc.to_json();
    print!("{text}");

    let path = std::env::temp_dir().join("hombax-four-order.json");
    std::fs::write(&path, &text)?;
    let read = StructureDocument::parse(&std::fs::read_to_string(&path)?)?;
    println!("parsed back equal: {}", read == doc);

    let h = read.structure.as_hom_quasigroup()?.expect("a quasigroup document");
    let solution = StructureDocument::new(Structure::HomQuadratic(to_hom_quadratic_set(&h)));
    print!("{}", solution.to_json());

    let back = to_hom_quasigroup(
        &StructureDocument::parse(&solution.to_json())?
            .structure
            .as_hom_quadratic()
            .unwrap(),
    )?;
    let again = StructureDocument::new(Structure::HomQuasigroup(back)).with_meta(read.meta.clone());
    println!("S then G byte-identical: {}", again.to_json() == text);
    std::fs::remove_file(&path)?;
    Ok(())
}
