//! Writes the generated θ-curve fixtures into `fixtures/`.

use std::fs;
use std::path::PathBuf;

use yamada_core::construct::catalogue;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (name, desc, d) in catalogue()? {
        let mut text = String::new();
        for line in desc.lines() {
            text.push_str(&format!("# {line}\n"));
        }
        text.push_str("# Generated by examples/generate_fixtures.rs.\n");
        text.push_str(&d.to_string());
        let path = dir.join(format!("{name}.th"));
        fs::write(&path, text)?;
        println!("{}", path.display());
    }
    Ok(())
}
