//! Build categories by hand and check the axioms and splitness.
//!
//! Run with: cargo run --example build_and_validate

use qhcat::category::FiniteCategory;
use qhcat::generators;

fn main() {
    // The cyclic group C_4 as a one-object category: groups are always split.
    let c4 = generators::cyclic_group(4);
    println!(
        "C_4: {} morphisms, valid = {}",
        c4.num_morphisms(),
        c4.validate().ok()
    );
    match c4.is_split() {
        Ok(w) => println!(
            "C_4 is split; pseudo-inverse of g1 is g{}",
            w.pseudo_inverse[1]
        ),
        Err(s) => println!("C_4 is not split, witness {}", s),
    }

    // A custom monoid from a composition table: {1, x, 0} with x^2 = 0.
    let n3 = FiniteCategory::from_monoid(
        vec!["one".into(), "x".into(), "zero".into()],
        &[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
    )
    .unwrap();
    println!("\nN3: valid = {}", n3.validate().ok());
    match n3.is_split() {
        Ok(_) => println!("N3 is split (unexpected!)"),
        Err(s) => println!(
            "N3 is not split; witness morphism {} ({}) has no pseudo-inverse",
            s,
            n3.morphism_name(s)
        ),
    }

    // The full transformation monoid T_3 is regular, hence split.
    let t3 = generators::full_transformation_monoid(3).unwrap();
    let w = t3.is_split().unwrap();
    println!("\nT_3: {} morphisms, split = true", t3.num_morphisms());
    // Spot-check the witness equations s∘u∘s = s and u∘s∘u = u.
    let s = 5;
    let u = w.pseudo_inverse[s];
    let us = t3.compose(u, s).unwrap();
    let sus = t3.compose(s, us).unwrap();
    println!(
        "witness for morphism {}: u = {}, s∘u∘s = {} (= s: {})",
        s,
        u,
        sus,
        sus == s
    );
}
