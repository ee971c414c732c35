//! The Jacobson radical computed two independent ways, across δ values.
//!
//! The corner criterion says u lies in the radical iff every sandwich
//! e_i′·a·u·b·e_i′ stays inside kJ_{e_i}; the oracle is the radical of the
//! trace form of the regular representation. In characteristic 0 they must
//! agree exactly — and they do, as canonical subspaces.
//!
//! Run with: cargo run --example radical_two_ways

use qhcat::algebra::CategoryAlgebra;
use qhcat::exactla::rat;
use qhcat::generators;
use qhcat::green::{j_decompose, local_data, OrderPolicy};

fn main() {
    println!("TL_3 radical across δ (dim A = 5):");
    for delta in 1..=4 {
        let d = generators::temperley_lieb(3, rat(delta)).unwrap();
        let jdec = j_decompose(&d.category, OrderPolicy::default()).unwrap();
        let local = local_data(&d.category, &jdec).unwrap();
        let alg = CategoryAlgebra::new(d.category, d.cocycle);
        let corner = alg.radical_corner_criterion(&jdec, &local);
        let trace = alg.radical_trace_form();
        println!(
            "  δ = {}: corner criterion dim {}, trace form dim {}, equal = {}, semisimple = {}",
            delta,
            corner.dim(),
            trace.dim(),
            corner == trace,
            corner.dim() == 0
        );
    }

    println!("\nBrauer B_3 radical across δ (dim A = 15):");
    for delta in 1..=3 {
        let d = generators::brauer(3, rat(delta)).unwrap();
        let jdec = j_decompose(&d.category, OrderPolicy::default()).unwrap();
        let local = local_data(&d.category, &jdec).unwrap();
        let alg = CategoryAlgebra::new(d.category, d.cocycle);
        let corner = alg.radical_corner_criterion(&jdec, &local);
        let trace = alg.radical_trace_form();
        assert_eq!(corner, trace);
        println!(
            "  δ = {}: radical dim {} (methods agree), nilpotent = {}",
            delta,
            corner.dim(),
            alg.is_nilpotent_subspace(&corner)
        );
    }

    // T_2 by hand: the radical is the line spanned by c_1 − c_2.
    let c = generators::full_transformation_monoid(2).unwrap();
    let a = qhcat::cocycle::Cocycle::trivial(&c);
    let jdec = j_decompose(&c, OrderPolicy::default()).unwrap();
    let local = local_data(&c, &jdec).unwrap();
    let alg = CategoryAlgebra::new(c, a);
    let rad = alg.radical_corner_criterion(&jdec, &local);
    println!(
        "\nQT_2: radical dim {}, contains c_1 − c_2: {}",
        rad.dim(),
        rad.contains_vec(&[rat(1), rat(0), rat(0), rat(-1)])
    );
}
