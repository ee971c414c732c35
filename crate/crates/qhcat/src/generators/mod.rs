//! Bundled example categories and the on-disk category file format.
//!
//! Diagram families (Temperley–Lieb, Brauer, partition) are realized as
//! one-object categories whose morphisms are diagrams with loop-discarding
//! composition; the discarded loops feed the δ-cocycle, so the twisted
//! algebra is the usual diagram algebra.

mod diagram;
mod file;

pub use diagram::{
    all_matchings, all_partitions, bell, catalan, double_factorial_odd, planar_matchings, Diagram,
};
pub use file::{load, load_from_str, parse_from_str, save, save_to_string, FileError};

use crate::category::FiniteCategory;
use crate::cocycle::Cocycle;
use crate::exactla::Rat;
use num::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{family} size {n} out of range (1..={max})")]
    SizeOutOfRange {
        family: &'static str,
        n: usize,
        max: usize,
    },
    #[error("cocycle values must be nonzero: delta = 0 rejected")]
    ZeroDelta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    TemperleyLieb,
    Brauer,
    Partition,
}

/// A diagram family instance: the realized one-object category, the
/// δ-loop cocycle, and the underlying diagrams in morphism-id order.
#[derive(Clone, Debug)]
pub struct DiagramCategory {
    pub n: usize,
    pub kind: DiagramKind,
    pub delta: Rat,
    pub category: FiniteCategory,
    pub cocycle: Cocycle,
    pub diagrams: Vec<Diagram>,
}

impl DiagramCategory {
    /// Through-strand count of each morphism (layer invariant).
    pub fn through_counts(&self) -> Vec<usize> {
        self.diagrams.iter().map(|d| d.through_count()).collect()
    }
}

fn diagram_category(
    kind: DiagramKind,
    n: usize,
    delta: Rat,
    diagrams: Vec<Diagram>,
) -> DiagramCategory {
    let m = diagrams.len();
    let identity = diagrams
        .iter()
        .position(|d| *d == Diagram::identity(n))
        .expect("identity diagram enumerated");
    let mut comp_entries = Vec::with_capacity(m * m);
    let mut values = BTreeMap::new();
    let mut delta_powers: Vec<Rat> = vec![Rat::one()];
    for t in 0..m {
        for s in 0..m {
            let (d, loops) = Diagram::compose(&diagrams[t], &diagrams[s]);
            let r = diagrams
                .binary_search(&d)
                .expect("composition stays in family");
            comp_entries.push((t, s, r));
            while delta_powers.len() <= loops {
                let next = delta_powers.last().unwrap() * &delta;
                delta_powers.push(next);
            }
            values.insert((t, s), delta_powers[loops].clone());
        }
    }
    let category = FiniteCategory::new(
        vec!["X".to_string()],
        (0..m).map(|i| (format!("d{}", i), 0, 0)).collect(),
        vec![identity],
        comp_entries,
    );
    DiagramCategory {
        n,
        kind,
        delta,
        category,
        cocycle: Cocycle::from_values(values),
        diagrams,
    }
}

/// Temperley–Lieb category TL_n: planar perfect matchings, dim = Catalan(n).
pub fn temperley_lieb(n: usize, delta: Rat) -> Result<DiagramCategory, GeneratorError> {
    if n == 0 || n > 6 {
        return Err(GeneratorError::SizeOutOfRange {
            family: "temperley-lieb",
            n,
            max: 6,
        });
    }
    if delta.is_zero() {
        return Err(GeneratorError::ZeroDelta);
    }
    Ok(diagram_category(
        DiagramKind::TemperleyLieb,
        n,
        delta,
        planar_matchings(n),
    ))
}

/// Brauer category B_n: all perfect matchings, dim = (2n-1)!!.
pub fn brauer(n: usize, delta: Rat) -> Result<DiagramCategory, GeneratorError> {
    if n == 0 || n > 4 {
        return Err(GeneratorError::SizeOutOfRange {
            family: "brauer",
            n,
            max: 4,
        });
    }
    if delta.is_zero() {
        return Err(GeneratorError::ZeroDelta);
    }
    Ok(diagram_category(
        DiagramKind::Brauer,
        n,
        delta,
        all_matchings(n),
    ))
}

/// Partition category P_n: all set partitions of 2n points, dim = Bell(2n).
pub fn partition_category(n: usize, delta: Rat) -> Result<DiagramCategory, GeneratorError> {
    if n == 0 || n > 3 {
        return Err(GeneratorError::SizeOutOfRange {
            family: "partition",
            n,
            max: 3,
        });
    }
    if delta.is_zero() {
        return Err(GeneratorError::ZeroDelta);
    }
    Ok(diagram_category(
        DiagramKind::Partition,
        n,
        delta,
        all_partitions(n),
    ))
}

/// Full transformation monoid T_n as a one-object category: all maps
/// {0..n-1} -> {0..n-1}, composition `t∘s = t after s`.
pub fn full_transformation_monoid(n: usize) -> Result<FiniteCategory, GeneratorError> {
    if n == 0 || n > 4 {
        return Err(GeneratorError::SizeOutOfRange {
            family: "transformation",
            n,
            max: 4,
        });
    }
    let m = n.pow(n as u32);
    let decode = |idx: usize| -> Vec<usize> {
        let mut f = Vec::with_capacity(n);
        let mut r = idx;
        for _ in 0..n {
            f.push(r % n);
            r /= n;
        }
        f
    };
    let encode = |f: &[usize]| -> usize { f.iter().rev().fold(0, |acc, &v| acc * n + v) };
    let maps: Vec<Vec<usize>> = (0..m).map(decode).collect();
    let mut table = vec![vec![0usize; m]; m];
    for (t, ft) in maps.iter().enumerate() {
        for (s, fs) in maps.iter().enumerate() {
            let composed: Vec<usize> = (0..n).map(|x| ft[fs[x]]).collect();
            table[t][s] = encode(&composed);
        }
    }
    let names = maps
        .iter()
        .map(|f| {
            let digits: String = f.iter().map(|d| d.to_string()).collect();
            format!("f{}", digits)
        })
        .collect();
    Ok(FiniteCategory::from_monoid(names, &table).expect("T_n is a monoid"))
}

/// Cyclic group C_n as a one-object category.
pub fn cyclic_group(n: usize) -> FiniteCategory {
    assert!(n >= 1);
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let names = (0..n).map(|k| format!("g{}", k)).collect();
    FiniteCategory::from_monoid(names, &table).expect("C_n is a group")
}

/// The non-split counterexample {1, x, 0} with x² = 0.
pub fn n3_monoid() -> FiniteCategory {
    let table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]];
    FiniteCategory::from_monoid(vec!["one".into(), "x".into(), "zero".into()], &table)
        .expect("N3 is a monoid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, rat};
    use crate::green::{j_decompose, OrderPolicy};

    #[test]
    fn transformation_monoid_sizes() {
        assert_eq!(full_transformation_monoid(1).unwrap().num_morphisms(), 1);
        assert_eq!(full_transformation_monoid(2).unwrap().num_morphisms(), 4);
        assert_eq!(full_transformation_monoid(3).unwrap().num_morphisms(), 27);
        assert!(matches!(
            full_transformation_monoid(5),
            Err(GeneratorError::SizeOutOfRange { .. })
        ));
    }

    #[test]
    fn t3_has_three_rank_classes() {
        let c = full_transformation_monoid(3).unwrap();
        let jdec = j_decompose(&c, OrderPolicy::default()).unwrap();
        let sizes: Vec<usize> = jdec.classes.iter().map(|cl| cl.len()).collect();
        assert_eq!(sizes, vec![3, 18, 6]);
    }

    #[test]
    fn diagram_families_validate_and_split() {
        let tl = temperley_lieb(3, rat(2)).unwrap();
        assert!(tl.category.validate().ok());
        assert!(tl.cocycle.validate(&tl.category).ok());
        assert!(tl.category.is_split().is_ok());

        let b = brauer(2, frac(1, 2)).unwrap();
        assert!(b.category.validate().ok());
        assert!(b.cocycle.validate(&b.category).ok());
        assert!(b.category.is_split().is_ok());

        let p = partition_category(2, rat(1)).unwrap();
        assert!(p.category.validate().ok());
        assert!(p.cocycle.validate(&p.category).ok());
        assert!(p.category.is_split().is_ok());
    }

    #[test]
    fn family_dimensions() {
        assert_eq!(
            temperley_lieb(2, rat(1)).unwrap().category.num_morphisms(),
            2
        );
        assert_eq!(
            temperley_lieb(3, rat(1)).unwrap().category.num_morphisms(),
            5
        );
        assert_eq!(brauer(2, rat(1)).unwrap().category.num_morphisms(), 3);
        assert_eq!(brauer(3, rat(1)).unwrap().category.num_morphisms(), 15);
        assert_eq!(
            partition_category(1, rat(1))
                .unwrap()
                .category
                .num_morphisms(),
            2
        );
        assert_eq!(
            partition_category(2, rat(1))
                .unwrap()
                .category
                .num_morphisms(),
            15
        );
    }

    #[test]
    fn zero_delta_rejected() {
        assert!(matches!(
            temperley_lieb(3, rat(0)),
            Err(GeneratorError::ZeroDelta)
        ));
        assert!(matches!(brauer(2, rat(0)), Err(GeneratorError::ZeroDelta)));
        assert!(matches!(
            partition_category(2, rat(0)),
            Err(GeneratorError::ZeroDelta)
        ));
    }

    #[test]
    fn tl3_layer_sizes() {
        let tl = temperley_lieb(3, rat(1)).unwrap();
        let jdec = j_decompose(&tl.category, OrderPolicy::default()).unwrap();
        let sizes: Vec<usize> = jdec.classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![4, 1]);
    }

    #[test]
    fn brauer_cup_cap_composition_has_delta() {
        let b = brauer(2, rat(7)).unwrap();
        // Find the 0-through diagram u; α(u, u) = δ.
        let u = (0..3)
            .find(|&i| b.diagrams[i].through_count() == 0)
            .unwrap();
        assert_eq!(b.cocycle.value(u, u), Some(&rat(7)));
    }

    #[test]
    fn partition_p3_is_desk_scale() {
        let p = partition_category(3, rat(1)).unwrap();
        assert_eq!(p.category.num_morphisms(), 203);
    }
}
