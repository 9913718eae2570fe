//! Structure files: write a fixture, read it back, and see a located error.

use assoc2::algebra2::TwoTermAlgebra;
use assoc2::fixtures;
use assoc2::io::FileValue;

fn main() -> assoc2::Result<()> {
    let g = fixtures::fix_u();
    let text = g.to_json();
    print!("{text}");
    assert_eq!(TwoTermAlgebra::from_json(&text)?, g);

    let broken = text.replacen("\"value\": \"1\"", "\"value\": \"1/0\"", 1);
    match TwoTermAlgebra::from_json(&broken) {
        Err(e) => println!("\nrejected: {e}"),
        Ok(_) => println!("\nunexpectedly accepted"),
    }
    Ok(())
}
