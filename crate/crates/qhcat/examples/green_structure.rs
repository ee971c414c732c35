//! J-classes, the J-order, maximal subgroups and ε-partitions for T_3.
//!
//! Run with: cargo run --example green_structure

use qhcat::generators;
use qhcat::green::{check_ideal_structure, j_decompose, local_data, principal_ideal, OrderPolicy};

fn main() {
    let c = generators::full_transformation_monoid(3).unwrap();
    let jdec = j_decompose(&c, OrderPolicy::default()).unwrap();
    let local = local_data(&c, &jdec).unwrap();

    println!(
        "T_3: {} morphisms, {} J-classes (admissible order, lowest first)",
        c.num_morphisms(),
        jdec.num_classes()
    );
    for i in 0..jdec.num_classes() {
        println!(
            "  layer {}: |S_{}| = {:2}  rep = {}  |Γ| = {}  |J_e| = {}  |ε| = {}  blocks of size {}",
            i + 1,
            i + 1,
            jdec.classes[i].len(),
            c.morphism_name(jdec.reps[i]),
            local.gamma[i].len(),
            local.jset[i].len(),
            local.epsilon[i].len(),
            local.blocks[i][0].len(),
        );
    }

    println!("\nJ-order (strictly below relation):");
    for i in 0..jdec.num_classes() {
        for j in 0..jdec.num_classes() {
            if jdec.strictly_below(i, j) {
                println!("  S_{} <_J S_{}", i + 1, j + 1);
            }
        }
    }

    // Principal ideals: a constant map generates exactly the rank-1 class.
    let constant = jdec.reps[0];
    let ideal = principal_ideal(&c, constant);
    println!(
        "\nprincipal ideal of the constant map {}: {} morphisms (the rank-1 class)",
        c.morphism_name(constant),
        ideal.len()
    );

    // The ideal-theoretic lemmas, verified on the concrete category.
    let witness = c.is_split().unwrap();
    let report = check_ideal_structure(&c, &jdec, &witness);
    println!(
        "\nideal lemma checks: {} total, all pass = {}",
        report.checks.len(),
        report.ok()
    );
}
