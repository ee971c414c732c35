//! The twisted category algebra A = k_αC over the rationals: structure
//! constants, corners e′Ae′, and the Jacobson radical computed two
//! independent ways — the corner criterion
//! (all e_i′·a·u·b·e_i′ land in kJ_{e_i}) and the trace form of the regular
//! representation, whose radical equals J(A) in characteristic 0.

use crate::category::{FiniteCategory, MorId};
use crate::cocycle::Cocycle;
use crate::exactla::{Mat, Rat, Subspace};
use crate::green::{JClassDecomposition, LocalData};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Sparse algebra element: morphism id -> coefficient, no explicit zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<MorId, Rat>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(s: MorId) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(s, Rat::one());
        Element { terms }
    }

    pub fn term(s: MorId, c: Rat) -> Self {
        let mut e = Element::default();
        e.add_term(s, c);
        e
    }

    pub fn add_term(&mut self, s: MorId, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: MorId) -> Rat {
        self.terms.get(&s).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MorId, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.add_term(s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.add_term(s, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(&s, v)| (s, v * c)).collect(),
        }
    }

    pub fn to_vec(&self, dim: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dim];
        for (&s, c) in &self.terms {
            v[s] = c.clone();
        }
        v
    }

    pub fn from_vec(v: &[Rat]) -> Element {
        let mut e = Element::default();
        for (s, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.add_term(s, c.clone());
            }
        }
        e
    }
}

/// A corner e′Ae′ with its Γ/J split of the basis.
#[derive(Clone, Debug)]
pub struct Corner {
    pub e: MorId,
    /// α(e,e)^{-1}, so e′ = lift·e.
    pub lift: Rat,
    /// Morphism basis e∘S∘e, sorted.
    pub basis: Vec<MorId>,
    /// basis ∩ S_i (the maximal subgroup).
    pub gamma_part: Vec<MorId>,
    /// basis ∩ S_{≤ i−1} (spans a two-sided ideal of the corner).
    pub j_part: Vec<MorId>,
}

/// Basis-indexed multiplication, shared by the full algebra and its corner
/// subalgebras so the module machinery can run over either.
pub trait AlgebraOps {
    fn dim(&self) -> usize;
    fn unit_vec(&self) -> Vec<Rat>;
    /// Product of basis elements i·j as a sparse vector.
    fn mul_basis_sparse(&self, i: usize, j: usize) -> Vec<(usize, Rat)>;

    fn mul_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in self.mul_basis_sparse(i, j) {
                    out[k] += a * b * &c;
                }
            }
        }
        out
    }
}

/// The twisted category algebra. Basis = morphisms; t·s = α(t,s)·(t∘s)
/// when composable, 0 otherwise.
#[derive(Clone, Debug)]
pub struct CategoryAlgebra {
    category: FiniteCategory,
    cocycle: Cocycle,
}

impl CategoryAlgebra {
    /// Callers are expected to have validated both inputs.
    pub fn new(category: FiniteCategory, cocycle: Cocycle) -> Self {
        CategoryAlgebra { category, cocycle }
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn dim(&self) -> usize {
        self.category.num_morphisms()
    }

    pub fn alpha(&self, t: MorId, s: MorId) -> &Rat {
        self.cocycle
            .value(t, s)
            .expect("cocycle defined on composable pair")
    }

    /// Product of basis morphisms: `Some((t∘s, α(t,s)))` or `None`.
    pub fn mul_basis(&self, t: MorId, s: MorId) -> Option<(MorId, Rat)> {
        let r = self.category.compose(t, s)?;
        Some((r, self.alpha(t, s).clone()))
    }

    /// The unit Σ_X α(id_X, id_X)^{-1}·id_X.
    pub fn unit(&self) -> Element {
        let mut u = Element::zero();
        for x in 0..self.category.num_objects() {
            let id = self.category.identity_of(x);
            let a = self.alpha(id, id);
            u.add_term(id, Rat::one() / a);
        }
        u
    }

    /// Bilinear extension of the twisted basis product.
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (&s, cs) in x.terms() {
            for (&t, ct) in y.terms() {
                if let Some((r, a)) = self.mul_basis(s, t) {
                    out.add_term(r, cs * ct * a);
                }
            }
        }
        out
    }

    /// e′ = α(e,e)^{-1}·e, an idempotent of A.
    pub fn idempotent_lift(&self, e: MorId) -> Element {
        assert!(
            self.category.is_idempotent(e),
            "morphism {} not idempotent",
            e
        );
        Element::term(e, Rat::one() / self.alpha(e, e))
    }

    /// Matrix of left multiplication by `x` on the morphism basis.
    pub fn left_mul_matrix(&self, x: &Element) -> Mat {
        let m = self.dim();
        let mut out = Mat::zero(m, m);
        for v in 0..m {
            for (&s, c) in x.terms() {
                if let Some((r, a)) = self.mul_basis(s, v) {
                    out[(r, v)] += c * &a;
                }
            }
        }
        out
    }

    /// Left multiplication of a coefficient vector by basis morphism `g`.
    pub fn left_mul_basis_vec(&self, g: MorId, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); v.len()];
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some((r, a)) = self.mul_basis(g, s) {
                out[r] += c * &a;
            }
        }
        out
    }

    /// Right multiplication of a coefficient vector by basis morphism `g`.
    pub fn right_mul_basis_vec(&self, v: &[Rat], g: MorId) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); v.len()];
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some((r, a)) = self.mul_basis(s, g) {
                out[r] += c * &a;
            }
        }
        out
    }

    /// The corner at a layer representative, with the basis split into the
    /// maximal-subgroup part and the lower-ideal part. The split is
    /// verified: Γ spans a unital subalgebra, J a two-sided corner ideal.
    pub fn corner(&self, e: MorId, jdec: &JClassDecomposition) -> Corner {
        let m = self.dim();
        let c = &self.category;
        let i = jdec.class_of[e];
        let mut basis: Vec<MorId> = (0..m)
            .filter_map(|v| {
                let ve = c.compose(v, e)?;
                c.compose(e, ve)
            })
            .collect();
        basis.sort_unstable();
        basis.dedup();
        let mut gamma_part = Vec::new();
        let mut j_part = Vec::new();
        for &x in &basis {
            if jdec.class_of[x] == i {
                gamma_part.push(x);
            } else {
                assert!(
                    jdec.class_of[x] < i,
                    "corner basis escapes S_<=i: internal error"
                );
                j_part.push(x);
            }
        }
        // Γ closed under composition, J absorbs from both sides.
        for &x in &gamma_part {
            for &y in &gamma_part {
                let xy = c.compose(x, y).expect("corner elements compose");
                assert!(gamma_part.binary_search(&xy).is_ok());
            }
        }
        for &x in &j_part {
            for &y in &basis {
                let xy = c.compose(x, y).expect("corner elements compose");
                let yx = c.compose(y, x).expect("corner elements compose");
                assert!(j_part.binary_search(&xy).is_ok());
                assert!(j_part.binary_search(&yx).is_ok());
            }
        }
        Corner {
            e,
            lift: Rat::one() / self.alpha(e, e),
            basis,
            gamma_part,
            j_part,
        }
    }

    /// Jacobson radical by the corner criterion: the space of all `u` such
    /// that for every layer i and all basis morphisms a, b, the element
    /// e_i′·a·u·b·e_i′ has no component on Γ_{e_i}. Assembled as one
    /// stacked nullspace.
    pub fn radical_corner_criterion(
        &self,
        jdec: &JClassDecomposition,
        local: &LocalData,
    ) -> Subspace {
        let m = self.dim();
        let c = &self.category;
        let mut rows: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for i in 0..jdec.num_classes() {
            let e = jdec.reps[i];
            let lift = Rat::one() / self.alpha(e, e);
            let gamma = &local.gamma[i];
            // e′·a and b·e′ as scaled single morphisms.
            let left: Vec<Option<(MorId, Rat)>> = (0..m)
                .map(|a| {
                    let ea = c.compose(e, a)?;
                    Some((ea, self.alpha(e, a) * &lift))
                })
                .collect();
            let right: Vec<Option<(MorId, Rat)>> = (0..m)
                .map(|b| {
                    let be = c.compose(b, e)?;
                    Some((be, self.alpha(b, e) * &lift))
                })
                .collect();
            for la in left.iter().flatten() {
                for rb in right.iter().flatten() {
                    // For each γ the linear condition on u: coefficient of γ
                    // in e′a·u·be′ vanishes.
                    let mut per_gamma: BTreeMap<MorId, Vec<Rat>> = BTreeMap::new();
                    for s in 0..m {
                        let sr = match c.compose(s, rb.0) {
                            Some(x) => x,
                            None => continue,
                        };
                        let tgt = match c.compose(la.0, sr) {
                            Some(x) => x,
                            None => continue,
                        };
                        if gamma.binary_search(&tgt).is_err() {
                            continue;
                        }
                        let coef = &la.1 * &rb.1 * self.alpha(s, rb.0) * self.alpha(la.0, sr);
                        per_gamma.entry(tgt).or_insert_with(|| vec![Rat::zero(); m])[s] = coef;
                    }
                    for (_, row) in per_gamma {
                        rows.insert(normalize_row(row));
                    }
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(m);
        }
        let mat = Mat::from_rows(m, rows.into_iter().collect());
        mat.nullspace()
    }

    /// Jacobson radical as the radical of the trace form of the regular
    /// representation: G[s,t] = trace(L_s·L_t). Valid over Q; serves as the
    /// independent oracle for the corner criterion.
    pub fn radical_trace_form(&self) -> Subspace {
        let m = self.dim();
        let c = &self.category;
        let mut g = Mat::zero(m, m);
        for t in 0..m {
            for v in 0..m {
                let tv = match c.compose(t, v) {
                    Some(x) => x,
                    None => continue,
                };
                let at = self.alpha(t, v);
                for s in 0..m {
                    if c.compose(s, tv) == Some(v) {
                        g[(s, t)] += at * self.alpha(s, tv);
                    }
                }
            }
        }
        g.nullspace()
    }

    /// Smallest subspace containing the generators and closed under left
    /// and right multiplication by all basis morphisms.
    pub fn ideal_span(&self, generators: &[Element]) -> Subspace {
        let m = self.dim();
        let mut span = Subspace::zero(m);
        let mut queue: Vec<Vec<Rat>> = generators.iter().map(|g| g.to_vec(m)).collect();
        while let Some(v) = queue.pop() {
            if v.iter().all(|x| x.is_zero()) || !span.insert(&v) {
                continue;
            }
            for g in 0..m {
                queue.push(self.left_mul_basis_vec(g, &v));
                queue.push(self.right_mul_basis_vec(&v, g));
            }
        }
        span
    }

    /// Left-ideal closure only (A·generators).
    pub fn left_ideal_span(&self, generators: &[Element]) -> Subspace {
        let m = self.dim();
        let mut span = Subspace::zero(m);
        let mut queue: Vec<Vec<Rat>> = generators.iter().map(|g| g.to_vec(m)).collect();
        while let Some(v) = queue.pop() {
            if v.iter().all(|x| x.is_zero()) || !span.insert(&v) {
                continue;
            }
            for g in 0..m {
                queue.push(self.left_mul_basis_vec(g, &v));
            }
        }
        span
    }

    /// The span of a set of morphisms as a subspace of A.
    pub fn span_of_morphisms(&self, set: &[MorId]) -> Subspace {
        let m = self.dim();
        Subspace::from_rows(
            m,
            set.iter().map(|&s| Element::basis(s).to_vec(m)).collect(),
        )
    }

    /// Exhaustive associativity check of the twisted product on basis
    /// triples.
    pub fn associative_on_basis(&self) -> bool {
        let m = self.dim();
        for u in 0..m {
            for t in 0..m {
                for s in 0..m {
                    let ut = self.mul_basis(u, t);
                    let ts = self.mul_basis(t, s);
                    let lhs = ut
                        .as_ref()
                        .and_then(|(r, a)| self.mul_basis(*r, s).map(|(q, b)| (q, a * &b)));
                    let rhs = ts
                        .as_ref()
                        .and_then(|(r, a)| self.mul_basis(u, *r).map(|(q, b)| (q, a * &b)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Some power of the subspace (under products of its basis vectors with
    /// the first power) is zero.
    pub fn is_nilpotent_subspace(&self, sub: &Subspace) -> bool {
        let m = self.dim();
        let first = sub.clone();
        let mut current = sub.clone();
        for _ in 0..=m {
            if current.is_zero() {
                return true;
            }
            let mut rows = Vec::new();
            for x in current.basis_rows() {
                for y in first.basis_rows() {
                    rows.push(self.mul_vec(&x, &y));
                }
            }
            current = Subspace::from_rows(m, rows);
        }
        false
    }

    /// The corner as a standalone structure-constant algebra.
    pub fn corner_algebra(&self, corner: &Corner) -> CornerAlgebra<'_> {
        CornerAlgebra {
            parent: self,
            e: corner.e,
            basis: corner.basis.clone(),
        }
    }
}

fn normalize_row(mut row: Vec<Rat>) -> Vec<Rat> {
    if let Some(first) = row.iter().position(|x| !x.is_zero()) {
        let f = row[first].clone();
        for x in row.iter_mut() {
            *x /= &f;
        }
    }
    row
}

impl AlgebraOps for CategoryAlgebra {
    fn dim(&self) -> usize {
        CategoryAlgebra::dim(self)
    }

    fn unit_vec(&self) -> Vec<Rat> {
        self.unit().to_vec(self.dim())
    }

    fn mul_basis_sparse(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        match self.mul_basis(i, j) {
            Some((r, a)) => vec![(r, a)],
            None => Vec::new(),
        }
    }
}

/// A corner e′Ae′ presented on its own basis (the morphisms of e∘S∘e);
/// products are inherited from the parent algebra and stay single-term.
#[derive(Clone, Debug)]
pub struct CornerAlgebra<'a> {
    pub parent: &'a CategoryAlgebra,
    pub e: MorId,
    pub basis: Vec<MorId>,
}

impl CornerAlgebra<'_> {
    pub fn index_of(&self, s: MorId) -> Option<usize> {
        self.basis.binary_search(&s).ok()
    }

    /// Translate a corner coefficient vector to an element of the parent.
    pub fn to_parent(&self, v: &[Rat]) -> Element {
        let mut out = Element::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(self.basis[i], c.clone());
            }
        }
        out
    }
}

impl AlgebraOps for CornerAlgebra<'_> {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn unit_vec(&self) -> Vec<Rat> {
        // Unit is e′ = α(e,e)^{-1} e.
        let mut v = vec![Rat::zero(); self.basis.len()];
        let pos = self.index_of(self.e).expect("e lies in its own corner");
        v[pos] = Rat::one() / self.parent.alpha(self.e, self.e);
        v
    }

    fn mul_basis_sparse(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        match self.parent.mul_basis(self.basis[i], self.basis[j]) {
            Some((r, a)) => {
                let k = self
                    .index_of(r)
                    .expect("corner closed under multiplication");
                vec![(k, a)]
            }
            None => Vec::new(),
        }
    }
}
