//! Green structure of a split category: J-classes and their poset,
//! idempotent equivalence, maximal subgroups Γ_e, the lower corner sets J_e,
//! and the ε partitions that drive the projectivity check and the layer
//! multiplicities.

use crate::category::{FiniteCategory, MorId, SplitWitness};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GreenError {
    #[error("J-class {0} contains no idempotent (input not split or corrupted)")]
    ClassWithoutIdempotent(usize),
    #[error("morphism {0} is not idempotent")]
    NotIdempotent(MorId),
    #[error("layer {layer}: unit group and class intersection disagree for Γ")]
    GammaMismatch { layer: usize },
    #[error("layer {layer}: corner of e does not split as Γ ⊔ J")]
    CornerSplitFailure { layer: usize },
    #[error("layer {layer}: (S∘e) traces of ε do not partition the class")]
    PartitionFailure { layer: usize },
}

/// How ties are broken when ordering layers and choosing representatives.
/// Used to demonstrate that certificates are invariant under the admissible
/// choices the theory leaves open.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrderPolicy {
    /// Topological-sort tie-break: largest representative id first.
    pub reverse_ties: bool,
    /// Choose the largest-id idempotent as class representative.
    pub max_id_reps: bool,
}

/// The J-classes of a category in an admissible order: lower classes first,
/// so `J(e_i) ≤_J J(e_j)` implies `i ≤ j`.
#[derive(Clone, Debug)]
pub struct JClassDecomposition {
    /// Disjoint classes covering Mor(C), in admissible order; members sorted.
    pub classes: Vec<Vec<MorId>>,
    /// Morphism id -> class index.
    pub class_of: Vec<usize>,
    /// `leq[i][j]` iff `S_i ≤_J S_j` (reflexive).
    pub leq: Vec<Vec<bool>>,
    /// Idempotent representative per class.
    pub reps: Vec<MorId>,
}

impl JClassDecomposition {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn strictly_below(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// The set S_{≤ i} (union over the index order), for i = 0..=n;
    /// `i = 0` is the empty set.
    pub fn s_leq_index(&self, i: usize) -> Vec<MorId> {
        let mut out: Vec<MorId> = self.classes[..i].iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    /// The set S_{≤_J i} (union over classes J-below S_i, inclusive).
    pub fn s_leq_j(&self, i: usize) -> Vec<MorId> {
        let mut out: Vec<MorId> = (0..self.num_classes())
            .filter(|&j| self.leq[j][i])
            .flat_map(|j| self.classes[j].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Verify the ordering is admissible: `S_i ≤_J S_j` implies `i ≤ j`.
    pub fn is_admissible(&self) -> bool {
        let n = self.num_classes();
        (0..n).all(|i| (0..n).all(|j| !self.leq[i][j] || i <= j))
    }
}

/// Per-layer local data: Γ_{e_i}, J_{e_i}, ε_i and the left-ideal traces.
#[derive(Clone, Debug)]
pub struct LocalData {
    /// Maximal subgroup Γ_{e_i} = units of e_i∘S∘e_i = (e_i∘S∘e_i) ∩ S_i.
    pub gamma: Vec<Vec<MorId>>,
    /// J_{e_i} = (e_i∘S∘e_i) ∩ S_{≤ i−1}.
    pub jset: Vec<Vec<MorId>>,
    /// ε_i ⊆ [e_i]: idempotents whose traces (S∘e) ∩ S_i partition S_i.
    pub epsilon: Vec<Vec<MorId>>,
    /// The traces (S∘e) ∩ S_i, parallel to `epsilon[i]`.
    pub blocks: Vec<Vec<Vec<MorId>>>,
}

/// The principal two-sided ideal Mor∘s∘Mor (always contains s).
pub fn principal_ideal(c: &FiniteCategory, s: MorId) -> Vec<MorId> {
    let m = c.num_morphisms();
    let mut seen = vec![false; m];
    for v in 0..m {
        let sv = match c.compose(s, v) {
            Some(x) => x,
            None => continue,
        };
        for u in 0..m {
            if let Some(usv) = c.compose(u, sv) {
                seen[usv] = true;
            }
        }
    }
    (0..m).filter(|&x| seen[x]).collect()
}

/// J-class decomposition with an admissible ordering.
pub fn j_decompose(
    c: &FiniteCategory,
    policy: OrderPolicy,
) -> Result<JClassDecomposition, GreenError> {
    let m = c.num_morphisms();
    let mut ideals: Vec<Vec<MorId>> = Vec::with_capacity(m);
    for s in 0..m {
        ideals.push(principal_ideal(c, s));
    }
    // Group morphisms by identical ideal.
    let mut distinct: Vec<Vec<MorId>> = Vec::new();
    let mut members: Vec<Vec<MorId>> = Vec::new();
    let mut class_of_raw = vec![usize::MAX; m];
    for s in 0..m {
        match distinct.iter().position(|i| *i == ideals[s]) {
            Some(k) => {
                members[k].push(s);
                class_of_raw[s] = k;
            }
            None => {
                class_of_raw[s] = distinct.len();
                distinct.push(ideals[s].clone());
                members.push(vec![s]);
            }
        }
    }
    let k = distinct.len();
    // Containment order between the distinct ideals.
    let contains = |a: &[MorId], b: &[MorId]| b.iter().all(|x| a.binary_search(x).is_ok());
    let mut leq_raw = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            leq_raw[i][j] = contains(&distinct[j], &distinct[i]);
        }
    }
    // Representatives: extreme-id idempotent of each class.
    let mut reps_raw = Vec::with_capacity(k);
    for (ci, mem) in members.iter().enumerate() {
        let mut ids: Vec<MorId> = mem
            .iter()
            .copied()
            .filter(|&e| c.is_idempotent(e))
            .collect();
        if ids.is_empty() {
            return Err(GreenError::ClassWithoutIdempotent(ci));
        }
        ids.sort_unstable();
        reps_raw.push(if policy.max_id_reps {
            *ids.last().unwrap()
        } else {
            ids[0]
        });
    }
    // Admissible order: topological sort of ≤_J, minimal classes first,
    // extreme representative id as the tie-break.
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let ready: Vec<usize> = (0..k)
            .filter(|&i| !placed[i])
            .filter(|&i| (0..k).all(|j| j == i || !leq_raw[j][i] || placed[j]))
            .collect();
        debug_assert!(!ready.is_empty(), "≤_J must be a partial order");
        let pick = if policy.reverse_ties {
            *ready.iter().max_by_key(|&&i| reps_raw[i]).unwrap()
        } else {
            *ready.iter().min_by_key(|&&i| reps_raw[i]).unwrap()
        };
        placed[pick] = true;
        order.push(pick);
    }
    let mut classes = Vec::with_capacity(k);
    let mut reps = Vec::with_capacity(k);
    let mut class_of = vec![usize::MAX; m];
    for (new_i, &old_i) in order.iter().enumerate() {
        let mut mem = members[old_i].clone();
        mem.sort_unstable();
        for &s in &mem {
            class_of[s] = new_i;
        }
        classes.push(mem);
        reps.push(reps_raw[old_i]);
    }
    let mut leq = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            leq[i][j] = leq_raw[order[i]][order[j]];
        }
    }
    let dec = JClassDecomposition {
        classes,
        class_of,
        leq,
        reps,
    };
    debug_assert!(dec.is_admissible());
    Ok(dec)
}

/// Witness pair for idempotent equivalence: `e = s∘t`, `f = t∘s` with
/// `s ∈ e∘Hom(Y,X)∘f` and `t ∈ f∘Hom(X,Y)∘e`. Present iff J(e) = J(f).
pub fn idempotent_equivalent(
    c: &FiniteCategory,
    e: MorId,
    f: MorId,
) -> Result<Option<(MorId, MorId)>, GreenError> {
    if !c.is_idempotent(e) {
        return Err(GreenError::NotIdempotent(e));
    }
    if !c.is_idempotent(f) {
        return Err(GreenError::NotIdempotent(f));
    }
    let (x, y) = (c.dom(e), c.dom(f));
    let sandwich = |left: MorId, mid: Vec<MorId>, right: MorId| -> Vec<MorId> {
        let mut out: Vec<MorId> = mid
            .into_iter()
            .filter_map(|a| {
                let ar = c.compose(a, right)?;
                c.compose(left, ar)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    let candidates_s = sandwich(e, c.hom_set(y, x), f);
    let candidates_t = sandwich(f, c.hom_set(x, y), e);
    for &s in &candidates_s {
        for &t in &candidates_t {
            if c.compose(s, t) == Some(e) && c.compose(t, s) == Some(f) {
                return Ok(Some((s, t)));
            }
        }
    }
    Ok(None)
}

/// Compute Γ, J and ε data for every layer; cross-checks the two Γ
/// definitions and the partition property.
pub fn local_data(c: &FiniteCategory, jdec: &JClassDecomposition) -> Result<LocalData, GreenError> {
    let m = c.num_morphisms();
    let n = jdec.num_classes();
    let mut gamma = Vec::with_capacity(n);
    let mut jset = Vec::with_capacity(n);
    let mut epsilon = Vec::with_capacity(n);
    let mut blocks = Vec::with_capacity(n);
    for i in 0..n {
        let e = jdec.reps[i];
        // Corner monoid e∘S∘e.
        let mut corner: Vec<MorId> = (0..m)
            .filter_map(|v| {
                let ve = c.compose(v, e)?;
                c.compose(e, ve)
            })
            .collect();
        corner.sort_unstable();
        corner.dedup();
        // Γ as class intersection, J as everything in lower classes.
        let mut g: Vec<MorId> = Vec::new();
        let mut j: Vec<MorId> = Vec::new();
        for &x in &corner {
            let cx = jdec.class_of[x];
            if cx == i {
                g.push(x);
            } else if cx < i {
                j.push(x);
            } else {
                return Err(GreenError::CornerSplitFailure { layer: i });
            }
        }
        // Γ as the unit group of the corner monoid.
        let units: Vec<MorId> = corner
            .iter()
            .copied()
            .filter(|&x| {
                corner
                    .iter()
                    .any(|&y| c.compose(x, y) == Some(e) && c.compose(y, x) == Some(e))
            })
            .collect();
        if units != g {
            return Err(GreenError::GammaMismatch { layer: i });
        }
        // ε_i: greedy scan of the idempotents of the class.
        let mut class_idems: Vec<MorId> = jdec.classes[i]
            .iter()
            .copied()
            .filter(|&x| c.is_idempotent(x))
            .collect();
        if jdec.reps[i] != class_idems[0] {
            // Scan direction follows the representative policy so that
            // alternative runs exercise genuinely different choices.
            class_idems.reverse();
        }
        let trace = |e: MorId| -> Vec<MorId> {
            let mut t: Vec<MorId> = (0..m)
                .filter_map(|v| c.compose(v, e))
                .filter(|&x| jdec.class_of[x] == i)
                .collect();
            t.sort_unstable();
            t.dedup();
            t
        };
        let mut eps: Vec<MorId> = Vec::new();
        let mut eps_blocks: Vec<Vec<MorId>> = Vec::new();
        let mut covered: Vec<MorId> = Vec::new();
        for &f in &class_idems {
            let t = trace(f);
            if t.iter().all(|x| covered.binary_search(x).is_err()) {
                covered.extend(t.iter().copied());
                covered.sort_unstable();
                eps.push(f);
                eps_blocks.push(t);
            }
        }
        if covered != jdec.classes[i] {
            return Err(GreenError::PartitionFailure { layer: i });
        }
        gamma.push(g);
        jset.push(j);
        epsilon.push(eps);
        blocks.push(eps_blocks);
    }
    Ok(LocalData {
        gamma,
        jset,
        epsilon,
        blocks,
    })
}

/// One named property check with an optional witness.
#[derive(Clone, Debug)]
pub struct StructureCheck {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct IdealStructureReport {
    pub checks: Vec<StructureCheck>,
}

impl IdealStructureReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verify the ideal-theoretic lemmas on a concrete category: both layer
/// unions are two-sided ideals, left-ideal antisymmetry inside a class, and
/// `S∘s = S∘(t∘s)` for each morphism with its split witness.
pub fn check_ideal_structure(
    c: &FiniteCategory,
    jdec: &JClassDecomposition,
    witness: &SplitWitness,
) -> IdealStructureReport {
    let m = c.num_morphisms();
    let mut checks = Vec::new();
    let is_ideal = |set: &[MorId]| -> Option<String> {
        for &s in set {
            for v in 0..m {
                if let Some(sv) = c.compose(s, v) {
                    if set.binary_search(&sv).is_err() {
                        return Some(format!("{}∘{} escapes", s, v));
                    }
                }
                if let Some(vs) = c.compose(v, s) {
                    if set.binary_search(&vs).is_err() {
                        return Some(format!("{}∘{} escapes", v, s));
                    }
                }
            }
        }
        None
    };
    for i in 1..=jdec.num_classes() {
        let w = is_ideal(&jdec.s_leq_index(i));
        checks.push(StructureCheck {
            name: format!("S_<=({}) two-sided ideal", i),
            pass: w.is_none(),
            witness: w,
        });
    }
    for i in 0..jdec.num_classes() {
        let w = is_ideal(&jdec.s_leq_j(i));
        checks.push(StructureCheck {
            name: format!("S_<=J({}) two-sided ideal", i + 1),
            pass: w.is_none(),
            witness: w,
        });
    }
    let left_ideal_of = |s: MorId| -> Vec<MorId> {
        let mut out: Vec<MorId> = (0..m).filter_map(|v| c.compose(v, s)).collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    // Left-ideal antisymmetry within a class (sampled for large classes).
    for (i, class) in jdec.classes.iter().enumerate() {
        let sample: Vec<MorId> = if class.len() > 40 {
            class
                .iter()
                .step_by(class.len() / 40 + 1)
                .copied()
                .collect()
        } else {
            class.clone()
        };
        let mut pass = true;
        let mut witness_txt = None;
        'outer: for &s in &sample {
            let ls = left_ideal_of(s);
            for &t in &sample {
                let lt = left_ideal_of(t);
                let sub = ls.iter().all(|x| lt.binary_search(x).is_ok());
                if sub && ls != lt {
                    pass = false;
                    witness_txt = Some(format!("S∘{} ⊊ S∘{} in class {}", s, t, i + 1));
                    break 'outer;
                }
            }
        }
        checks.push(StructureCheck {
            name: format!("left-ideal antisymmetry in class {}", i + 1),
            pass,
            witness: witness_txt,
        });
    }
    // S∘s = S∘(t∘s) for the split witness t of s.
    let mut pass = true;
    let mut wtxt = None;
    for s in 0..m {
        let t = witness.pseudo_inverse[s];
        let ts = match c.compose(t, s) {
            Some(x) => x,
            None => {
                pass = false;
                wtxt = Some(format!("witness of {} not composable", s));
                break;
            }
        };
        if left_ideal_of(s) != left_ideal_of(ts) {
            pass = false;
            wtxt = Some(format!("S∘{} != S∘({}∘{})", s, t, s));
            break;
        }
    }
    checks.push(StructureCheck {
        name: "S∘s = S∘(t∘s) for split witnesses".into(),
        pass,
        witness: wtxt,
    });
    IdealStructureReport { checks }
}
