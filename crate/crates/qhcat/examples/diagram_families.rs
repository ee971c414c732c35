//! Enumerate the diagram families and watch loops turn into δ-factors.
//!
//! Run with: cargo run --example diagram_families

use qhcat::algebra::{CategoryAlgebra, Element};
use qhcat::exactla::rat;
use qhcat::generators::{self, bell, catalan, double_factorial_odd, Diagram};

fn main() {
    println!("family dimensions vs closed forms:");
    for n in 1..=5 {
        let tl = generators::temperley_lieb(n, rat(2)).unwrap();
        println!(
            "  TL_{}: {} diagrams (Catalan {} = {})",
            n,
            tl.category.num_morphisms(),
            n,
            catalan(n)
        );
    }
    for n in 1..=4 {
        let b = generators::brauer(n, rat(2)).unwrap();
        println!(
            "  B_{}: {} diagrams ((2n-1)!! = {})",
            n,
            b.category.num_morphisms(),
            double_factorial_odd(n)
        );
    }
    for n in 1..=3 {
        let p = generators::partition_category(n, rat(2)).unwrap();
        println!(
            "  P_{}: {} diagrams (Bell({}) = {})",
            n,
            p.category.num_morphisms(),
            2 * n,
            bell(2 * n)
        );
    }

    // Composing the cup-cap diagram of TL_2 with itself closes one loop.
    let tl2 = generators::temperley_lieb(2, rat(3)).unwrap();
    let u_id = (0..2)
        .find(|&i| tl2.diagrams[i].through_count() == 0)
        .unwrap();
    let (composed, loops) = Diagram::compose(&tl2.diagrams[u_id], &tl2.diagrams[u_id]);
    println!(
        "\nTL_2 cup-cap u∘u: result == u: {}, loops closed: {}",
        composed == tl2.diagrams[u_id],
        loops
    );

    // In the twisted algebra that loop becomes the scalar δ = 3: u·u = 3u.
    let alg = CategoryAlgebra::new(tl2.category.clone(), tl2.cocycle.clone());
    let u = Element::basis(u_id);
    let uu = alg.multiply(&u, &u);
    println!(
        "in k_αC with δ=3:   u·u has coefficient {} on u",
        uu.coeff(u_id)
    );

    // Through-strand counts stratify the Brauer category into J-classes.
    let b3 = generators::brauer(3, rat(1)).unwrap();
    let mut by_through = std::collections::BTreeMap::new();
    for t in b3.through_counts() {
        *by_through.entry(t).or_insert(0usize) += 1;
    }
    println!("\nB_3 diagrams by through-strands: {:?}", by_through);
}
