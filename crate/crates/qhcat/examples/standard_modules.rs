//! Standard modules, projective covers, and the decomposition matrix.
//!
//! Run with: cargo run --example standard_modules

use qhcat::algebra::CategoryAlgebra;
use qhcat::cocycle::Cocycle;
use qhcat::generators;
use qhcat::green::{j_decompose, local_data, OrderPolicy};
use qhcat::modrep::{
    check_layer_decomposition, decomposition_matrix, projective_covers, standard_modules,
    verify_standard_axioms, ModOpts,
};

fn main() {
    let c = generators::full_transformation_monoid(2).unwrap();
    let a = Cocycle::trivial(&c);
    let jdec = j_decompose(&c, OrderPolicy::default()).unwrap();
    let local = local_data(&c, &jdec).unwrap();
    let alg = CategoryAlgebra::new(c, a);
    let radical = alg.radical_corner_criterion(&jdec, &local);
    let opts = ModOpts::default();

    let family = standard_modules(&alg, &jdec, &local, &radical, &opts).unwrap();
    let covers = projective_covers(&alg, &jdec, &family, &radical, &opts).unwrap();

    println!("QT_2 standard family (Λ in layer-major order):");
    for idx in 0..family.len() {
        let (i, r) = family.lambda[idx];
        println!(
            "  ({}, {}): dim Δ = {}  dim D = {}  n = {}  dim P = {}",
            i + 1,
            r + 1,
            family.delta[idx].dim,
            family.simple[idx].dim,
            family.n_ir[idx],
            covers[idx].module.dim
        );
    }

    let dec = decomposition_matrix(&family, &covers).unwrap();
    println!("\ndecomposition matrix [Δ : D] (rows Δ, columns D):");
    for row in &dec {
        println!("  {:?}", row);
    }

    let audit: usize = (0..family.len())
        .map(|idx| family.simple[idx].dim * covers[idx].module.dim)
        .sum();
    println!("\nΣ dim D · dim P = {} (dim A = {})", audit, alg.dim());

    let axioms = verify_standard_axioms(&alg, &jdec, &family, &covers, &radical, &opts).unwrap();
    println!(
        "standard-module axioms: {} checks, all pass = {}",
        axioms.checks.len(),
        axioms.ok()
    );

    let ledger = check_layer_decomposition(&alg, &jdec, &local, &family, &covers).unwrap();
    for row in &ledger.rows {
        println!(
            "layer {}: dim J_i/J_i-1 = {} = {} · Σ n·dimΔ (dims ok: {}, multiplicities ok: {})",
            row.layer + 1,
            row.quotient_dim,
            row.epsilon_size,
            row.dims_match,
            row.multiplicities_match
        );
    }
}
