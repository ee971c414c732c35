//! Save and load categories with cocycles in the line-oriented text format.
//!
//! Run with: cargo run --example category_files

use qhcat::exactla::frac;
use qhcat::generators::{self, load_from_str, save_to_string};

fn main() {
    // A twisted Temperley–Lieb category with δ = 5/3.
    let d = generators::temperley_lieb(2, frac(5, 3)).unwrap();
    let text = save_to_string(&d.category, &d.cocycle);
    println!("serialized TL_2(δ=5/3):\n{}", text);

    let (category, cocycle) = load_from_str(&text).unwrap();
    println!(
        "round trip: category equal = {}, cocycle equal = {}",
        category == d.category,
        cocycle == d.cocycle
    );

    // Fractions normalize on load.
    let raw = "\
OBJECTS
X
MORPHISMS
id X X
IDENTITIES
X id
COMP
id id id
COCYCLE
id id 2/4
";
    let (_, a) = load_from_str(raw).unwrap();
    println!(
        "\"2/4\" parses to {}",
        qhcat::exactla::fmt_rat(a.value(0, 0).unwrap())
    );

    // Bad files produce located errors.
    let broken = "OBJECTS\nX\nMORPHISMS\nf X\n";
    match load_from_str(broken) {
        Err(e) => println!("broken file rejected: {}", e),
        Ok(_) => println!("unexpectedly parsed"),
    }
}
