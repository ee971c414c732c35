//! Standard modules Δ_ir, simple modules D_ir, projective covers P_ir, the
//! Λ-order, the decomposition matrix, and the verification suite for the
//! standard-module axioms and the layer-multiplicity identity
//! dim(J_i/J_{i−1}) = |ε_i|·Σ_r n_ir·dim Δ_ir.
//!
//! Δ_ir never materializes a twisted-group-algebra module: each layer's
//! Q_i = Ae′/AJ_e splits into indecomposables whose isomorphism classes are
//! the Δ_ir, with class sizes n_ir, and D_ir is the head of Δ_ir.

use super::{
    endo_split, express_in_rows, find_iso, head, hom_dim, module_radical, quotient_module,
    regular_module, socle, submodule_module, subquotient_module, LeftModule, ModError, ModOpts,
};
use crate::algebra::{AlgebraOps, CategoryAlgebra, Element};
use crate::category::MorId;
use crate::exactla::{Mat, Rat, Subspace};
use crate::green::{JClassDecomposition, LocalData};
use num::Zero;

/// The standard family over the Λ index set {(i, r)}.
#[derive(Clone, Debug)]
pub struct StandardFamily {
    /// (layer index, class index within layer), both 0-based, in layer-major
    /// deterministic order.
    pub lambda: Vec<(usize, usize)>,
    pub delta: Vec<LeftModule>,
    pub simple: Vec<LeftModule>,
    /// Multiplicity of Δ_ir inside Q_i.
    pub n_ir: Vec<usize>,
    /// dim End(D_ir) — the divisor in every hom-count multiplicity.
    pub end_dims: Vec<usize>,
    /// l_i = number of classes per layer.
    pub layer_counts: Vec<usize>,
}

impl StandardFamily {
    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// Λ-order: a < b iff S_{layer(b)} <_J S_{layer(a)}.
    pub fn lambda_less(&self, jdec: &JClassDecomposition, a: usize, b: usize) -> bool {
        let (ia, _) = self.lambda[a];
        let (ib, _) = self.lambda[b];
        jdec.strictly_below(ib, ia)
    }

    /// Indices of Λ belonging to one layer.
    pub fn layer_members(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.lambda[a].0 == i).collect()
    }
}

/// Ae′ and A·J_e as subspaces of A, for an idempotent e.
fn q_spans(alg: &CategoryAlgebra, jdec: &JClassDecomposition, e: MorId) -> (Subspace, Subspace) {
    let upper = alg.left_ideal_span(&[alg.idempotent_lift(e)]);
    let i = jdec.class_of[e];
    let cat = alg.category();
    let m = alg.dim();
    let mut jset: Vec<MorId> = (0..m)
        .filter_map(|v| {
            let ve = cat.compose(v, e)?;
            cat.compose(e, ve)
        })
        .filter(|&x| jdec.class_of[x] < i)
        .collect();
    jset.sort_unstable();
    jset.dedup();
    let gens: Vec<Element> = jset.iter().map(|&x| Element::basis(x)).collect();
    let lower = alg.left_ideal_span(&gens);
    (upper, lower)
}

/// Q_i = Ae_i′ / A·J_{e_i} at the layer representative.
pub fn q_module(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    local: &LocalData,
    i: usize,
) -> Result<LeftModule, ModError> {
    let _ = local;
    q_module_at(alg, jdec, jdec.reps[i])
}

/// The same construction at an arbitrary idempotent of its class; used for
/// the representative-independence check.
pub fn q_module_at(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    e: MorId,
) -> Result<LeftModule, ModError> {
    let (upper, lower) = q_spans(alg, jdec, e);
    let reg = regular_module(alg);
    subquotient_module(&reg, &upper, &lower)
}

/// Build the standard family: split each Q_i into indecomposables, group
/// them into isomorphism classes (the Δ_ir with multiplicities n_ir), and
/// take heads (the D_ir). Heads are verified simple and pairwise distinct
/// within a layer.
pub fn standard_modules(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    local: &LocalData,
    radical: &Subspace,
    opts: &ModOpts,
) -> Result<StandardFamily, ModError> {
    let reg = regular_module(alg);
    let mut lambda = Vec::new();
    let mut delta = Vec::new();
    let mut simple = Vec::new();
    let mut n_ir = Vec::new();
    let mut end_dims = Vec::new();
    let mut layer_counts = Vec::new();
    for i in 0..jdec.num_classes() {
        let (upper, lower) = q_spans(alg, jdec, jdec.reps[i]);
        let q = subquotient_module(&reg, &upper, &lower)?;
        debug_assert_eq!(q.dim * local.epsilon[i].len(), jdec.classes[i].len());
        let parts = endo_split(&q, None, opts)?;
        let mut classes: Vec<Vec<LeftModule>> = Vec::new();
        for part in parts {
            match classes
                .iter_mut()
                .find(|cl| find_iso(&cl[0], &part.module, opts).is_some())
            {
                Some(cl) => cl.push(part.module),
                None => classes.push(vec![part.module]),
            }
        }
        layer_counts.push(classes.len());
        for (r, cl) in classes.into_iter().enumerate() {
            let d = cl[0].clone();
            let hd = head(&d, radical);
            if endo_split(&hd, None, opts)?.len() != 1 {
                return Err(ModError::HeadNotSimple { layer: i });
            }
            lambda.push((i, r));
            n_ir.push(cl.len());
            end_dims.push(hom_dim(&hd, &hd));
            delta.push(d);
            simple.push(hd);
        }
    }
    // Distinct simples within (and across) layers.
    for a in 0..lambda.len() {
        for b in a + 1..lambda.len() {
            if find_iso(&simple[a], &simple[b], opts).is_some() {
                return Err(ModError::HeadNotSimple { layer: lambda[a].0 });
            }
        }
    }
    Ok(StandardFamily {
        lambda,
        delta,
        simple,
        n_ir,
        end_dims,
        layer_counts,
    })
}

/// A projective cover P_ir = A·f_ir with its heredity filtration
/// {J_q·f_ir} expressed in P coordinates.
#[derive(Clone, Debug)]
pub struct CoverData {
    pub f: Element,
    pub span: Subspace,
    pub module: LeftModule,
    /// filtration[q] = J_q·f as a subspace of P, q = 0..=num_classes.
    pub filtration: Vec<Subspace>,
}

/// Basis of End for a regular module: right multiplications by the basis.
pub(crate) fn regular_endo_hint<A: AlgebraOps>(alg: &A) -> Vec<Mat> {
    let d = alg.dim();
    (0..d)
        .map(|g| {
            let mut m = Mat::zero(d, d);
            for j in 0..d {
                for (k, c) in alg.mul_basis_sparse(j, g) {
                    m[(k, j)] += c;
                }
            }
            m
        })
        .collect()
}

/// Find one projective cover per (i, r): decompose each layer corner's
/// regular module into indecomposable left ideals, project the corner unit
/// to primitive idempotents f, and keep those whose A·f has head D_ir.
pub fn projective_covers(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    family: &StandardFamily,
    radical: &Subspace,
    opts: &ModOpts,
) -> Result<Vec<CoverData>, ModError> {
    let reg = regular_module(alg);
    let mut covers: Vec<Option<CoverData>> = vec![None; family.len()];
    for i in 0..jdec.num_classes() {
        let targets = family.layer_members(i);
        if targets.is_empty() {
            continue;
        }
        let corner = alg.corner(jdec.reps[i], jdec);
        let ca = alg.corner_algebra(&corner);
        let breg = regular_module(&ca);
        let hint = regular_endo_hint(&ca);
        let parts = endo_split(&breg, Some(hint), opts)?;
        // Decompose the corner unit along the parts: 1 = Σ f_j with each
        // f_j a primitive idempotent generating its part.
        let all_rows: Vec<Vec<Rat>> = parts.iter().flat_map(|p| p.rows.clone()).collect();
        let unit = ca.unit_vec();
        let coords =
            express_in_rows(&all_rows, &unit).expect("summands span the corner regular module");
        let mut offset = 0usize;
        for part in &parts {
            let k = part.rows.len();
            let mut f_coords = vec![Rat::zero(); ca.basis.len()];
            for t in 0..k {
                let c = &coords[offset + t];
                if !c.is_zero() {
                    for (fi, ri) in f_coords.iter_mut().zip(&part.rows[t]) {
                        *fi += c * ri;
                    }
                }
            }
            offset += k;
            if f_coords.iter().all(|x| x.is_zero()) {
                continue;
            }
            debug_assert_eq!(ca.mul_vec(&f_coords, &f_coords), f_coords);
            let f_el = ca.to_parent(&f_coords);
            let span = alg.left_ideal_span(std::slice::from_ref(&f_el));
            let p_mod = submodule_module(&reg, &span)?;
            let hd = head(&p_mod, radical);
            let matched = targets
                .iter()
                .copied()
                .find(|&t| covers[t].is_none() && find_iso(&hd, &family.simple[t], opts).is_some());
            if let Some(t) = matched {
                let filtration = cover_filtration(alg, jdec, &f_el, &span);
                covers[t] = Some(CoverData {
                    f: f_el,
                    span,
                    module: p_mod,
                    filtration,
                });
            }
            if targets.iter().all(|&t| covers[t].is_some()) {
                break;
            }
        }
        for &t in &targets {
            if covers[t].is_none() {
                let (li, lr) = family.lambda[t];
                return Err(ModError::CoverNotFound(li, lr));
            }
        }
    }
    Ok(covers.into_iter().map(|c| c.unwrap()).collect())
}

/// J_q·f for q = 0..=n, each expressed in the coordinates of P = A·f.
fn cover_filtration(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    f: &Element,
    span: &Subspace,
) -> Vec<Subspace> {
    let p_rows = span.basis_rows();
    let p_dim = p_rows.len();
    let mut out = Vec::with_capacity(jdec.num_classes() + 1);
    for q in 0..=jdec.num_classes() {
        let mut rows = Vec::new();
        for &g in &jdec.s_leq_index(q) {
            let v = alg.multiply(&Element::basis(g), f).to_vec(alg.dim());
            let coords = express_in_rows(&p_rows, &v).expect("J_q f lies inside A f");
            rows.push(coords);
        }
        out.push(Subspace::from_rows(p_dim, rows));
    }
    out
}

/// The cover of a single (i, r). Layer corners are decomposed as a whole,
/// so batch callers should prefer [`projective_covers`].
pub fn projective_cover(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    family: &StandardFamily,
    radical: &Subspace,
    target: (usize, usize),
    opts: &ModOpts,
) -> Result<CoverData, ModError> {
    let covers = projective_covers(alg, jdec, family, radical, opts)?;
    let idx = family
        .lambda
        .iter()
        .position(|&ir| ir == target)
        .ok_or(ModError::CoverNotFound(target.0, target.1))?;
    Ok(covers.into_iter().nth(idx).unwrap())
}

/// [M : D_b] = dim Hom(P_b, M) / dim End(D_b).
pub fn composition_multiplicity(
    m: &LeftModule,
    family: &StandardFamily,
    covers: &[CoverData],
    b: usize,
) -> Result<usize, ModError> {
    let h = hom_dim(&covers[b].module, m);
    let e = family.end_dims[b];
    if !h.is_multiple_of(e) {
        return Err(ModError::NonIntegralMultiplicity);
    }
    Ok(h / e)
}

/// Full decomposition matrix [Δ_a : D_b] over Λ × Λ.
pub fn decomposition_matrix(
    family: &StandardFamily,
    covers: &[CoverData],
) -> Result<Vec<Vec<usize>>, ModError> {
    let k = family.len();
    let mut out = vec![vec![0usize; k]; k];
    for a in 0..k {
        for b in 0..k {
            out[a][b] = composition_multiplicity(&family.delta[a], family, covers, b)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: String, pass: bool, witness: Option<String>) {
        self.checks.push(AxiomCheck {
            name,
            pass,
            witness,
        });
    }
}

/// The standard-module axioms: (i) simple heads, (ii) radical factors lie
/// strictly lower in the Λ-order, (iii) the top filtration quotient of each
/// cover is the standard module, (iv) lower quotients are standard modules
/// of strictly larger Λ-parameters; plus the layer-annihilation fact
/// (S_j·Δ_ir = 0 whenever S_j∘S_{≤i} ⊆ S_{≤i−1}).
pub fn verify_standard_axioms(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    family: &StandardFamily,
    covers: &[CoverData],
    radical: &Subspace,
    opts: &ModOpts,
) -> Result<AxiomReport, ModError> {
    let mut report = AxiomReport::default();
    for a in 0..family.len() {
        let (i, r) = family.lambda[a];
        let tag = format!("({},{})", i + 1, r + 1);
        // (i) Hd(Δ) ≅ D, hom-rank consistency both ways.
        let hd = head(&family.delta[a], radical);
        let iso = find_iso(&hd, &family.simple[a], opts).is_some();
        let rank_fwd = hom_dim(&hd, &family.simple[a]);
        let rank_bwd = hom_dim(&family.simple[a], &hd);
        let pass = iso && rank_fwd == family.end_dims[a] && rank_bwd == family.end_dims[a];
        report.push(format!("(i) head of Δ{} is D{}", tag, tag), pass, None);
        // (ii) composition factors of Rad(Δ) lie strictly lower.
        let rad_sub = module_radical(&family.delta[a], radical);
        let mut pass = true;
        let mut witness = None;
        if rad_sub.dim() > 0 {
            let rad_mod = submodule_module(&family.delta[a], &rad_sub)?;
            for b in 0..family.len() {
                let mult = composition_multiplicity(&rad_mod, family, covers, b)?;
                if mult > 0 && !family.lambda_less(jdec, b, a) {
                    pass = false;
                    let (j, s) = family.lambda[b];
                    witness = Some(format!(
                        "D({},{}) appears in Rad(Δ{}) with multiplicity {}",
                        j + 1,
                        s + 1,
                        tag,
                        mult
                    ));
                    break;
                }
            }
        }
        report.push(
            format!("(ii) Rad(Δ{}) factors lie strictly lower", tag),
            pass,
            witness,
        );
        // (iii) J_i·f = A·f and the top filtration quotient of P is Δ.
        let cov = &covers[a];
        let chain_tops_out = cov.filtration[i + 1].dim() == cov.module.dim;
        let top = subquotient_module(&cov.module, &cov.filtration[i + 1], &cov.filtration[i])?;
        let pass = chain_tops_out && find_iso(&top, &family.delta[a], opts).is_some();
        report.push(
            format!("(iii) top filtration quotient of P{} is Δ{}", tag, tag),
            pass,
            if chain_tops_out {
                None
            } else {
                Some("J_i·f is a proper subspace of A·f".to_string())
            },
        );
        // (iv) lower quotients are Δ's of strictly larger Λ-parameters.
        let mut pass = true;
        let mut witness = None;
        'layers: for q in 0..i {
            let step = subquotient_module(&cov.module, &cov.filtration[q + 1], &cov.filtration[q])?;
            if step.dim == 0 {
                continue;
            }
            if !jdec.strictly_below(q, i) {
                pass = false;
                witness = Some(format!(
                    "nonzero step at layer {} which is not strictly below layer {}",
                    q + 1,
                    i + 1
                ));
                break;
            }
            let parts = endo_split(&step, None, opts)?;
            for part in parts {
                let matched = family
                    .layer_members(q)
                    .into_iter()
                    .any(|b| find_iso(&part.module, &family.delta[b], opts).is_some());
                if !matched {
                    pass = false;
                    witness = Some(format!(
                        "a filtration summand of P{} at layer {} is no Δ of that layer",
                        tag,
                        q + 1
                    ));
                    break 'layers;
                }
            }
        }
        report.push(
            format!("(iv) lower filtration of P{} is standard, higher in Λ", tag),
            pass,
            witness,
        );
        // Annihilation: S_j · Δ = 0 whenever S_j∘S_{≤i} ⊆ S_{≤i−1}.
        let mut pass = true;
        let mut witness = None;
        let cat = alg.category();
        for j in 0..jdec.num_classes() {
            let s_leq = jdec.s_leq_index(i + 1);
            let s_low = jdec.s_leq_index(i);
            let pushes_down = jdec.classes[j].iter().all(|&sj| {
                s_leq.iter().all(|&x| match cat.compose(sj, x) {
                    Some(y) => s_low.binary_search(&y).is_ok(),
                    None => true,
                })
            });
            if !pushes_down {
                continue;
            }
            for &sj in &jdec.classes[j] {
                if !family.delta[a].action[sj].is_zero() {
                    pass = false;
                    witness = Some(format!("morphism {} of layer {} acts nonzero", sj, j + 1));
                    break;
                }
            }
        }
        report.push(
            format!("annihilation: lowering layers kill Δ{}", tag),
            pass,
            witness,
        );
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct LayerDecompositionRow {
    pub layer: usize,
    pub quotient_dim: usize,
    pub epsilon_size: usize,
    pub predicted_dim: usize,
    pub dims_match: bool,
    pub multiplicities_match: bool,
}

#[derive(Clone, Debug, Default)]
pub struct LayerDecompositionReport {
    pub rows: Vec<LayerDecompositionRow>,
}

impl LayerDecompositionReport {
    pub fn ok(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.dims_match && r.multiplicities_match)
    }
}

/// The layer decomposition J_i/J_{i−1} ≅ ⊕_r Δ_ir^{|ε_i|·n_ir}: dimension
/// ledger plus composition-multiplicity comparison against every simple.
pub fn check_layer_decomposition(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    local: &LocalData,
    family: &StandardFamily,
    covers: &[CoverData],
) -> Result<LayerDecompositionReport, ModError> {
    let reg = regular_module(alg);
    let mut report = LayerDecompositionReport::default();
    for i in 0..jdec.num_classes() {
        let upper = alg.span_of_morphisms(&jdec.s_leq_index(i + 1));
        let lower = alg.span_of_morphisms(&jdec.s_leq_index(i));
        let layer_mod = subquotient_module(&reg, &upper, &lower)?;
        let eps = local.epsilon[i].len();
        let members = family.layer_members(i);
        let predicted: usize = members
            .iter()
            .map(|&a| family.n_ir[a] * family.delta[a].dim)
            .sum::<usize>()
            * eps;
        let dims_match = layer_mod.dim == predicted;
        let mut multiplicities_match = true;
        for b in 0..family.len() {
            let lhs = composition_multiplicity(&layer_mod, family, covers, b)?;
            let rhs: usize = members
                .iter()
                .map(|&a| {
                    family.n_ir[a]
                        * composition_multiplicity(&family.delta[a], family, covers, b)
                            .unwrap_or(usize::MAX)
                })
                .sum::<usize>()
                * eps;
            if lhs != rhs {
                multiplicities_match = false;
                break;
            }
        }
        report.rows.push(LayerDecompositionRow {
            layer: i,
            quotient_dim: layer_mod.dim,
            epsilon_size: eps,
            predicted_dim: predicted,
            dims_match,
            multiplicities_match,
        });
    }
    Ok(report)
}

/// Q-modules built from two equivalent idempotents of one layer are
/// isomorphic (trivially true for singleton classes).
pub fn idempotent_independence_check(
    alg: &CategoryAlgebra,
    jdec: &JClassDecomposition,
    i: usize,
    opts: &ModOpts,
) -> Result<bool, ModError> {
    let idems: Vec<MorId> = jdec.classes[i]
        .iter()
        .copied()
        .filter(|&x| alg.category().is_idempotent(x))
        .collect();
    if idems.len() < 2 {
        return Ok(true);
    }
    let e = jdec.reps[i];
    let f = idems.into_iter().find(|&x| x != e).unwrap();
    let qe = q_module_at(alg, jdec, e)?;
    let qf = q_module_at(alg, jdec, f)?;
    Ok(find_iso(&qe, &qf, opts).is_some())
}

/// Independent multiplicity oracle: refine through the socle series (the
/// socle is the annihilator of J(A)); each layer is semisimple, so its
/// multiplicities are hom-counts against the simples — no projective
/// covers involved.
pub fn socle_series_multiplicities(
    m: &LeftModule,
    family: &StandardFamily,
    radical: &Subspace,
) -> Result<Vec<usize>, ModError> {
    let mut counts = vec![0usize; family.len()];
    let mut current = m.clone();
    while current.dim > 0 {
        let soc = socle(&current, radical);
        if soc.dim() == 0 {
            return Err(ModError::InstanceTooLarge(
                "socle series stalled (radical not nilpotent?)".into(),
            ));
        }
        let soc_mod = submodule_module(&current, &soc)?;
        for b in 0..family.len() {
            let h = hom_dim(&soc_mod, &family.simple[b]);
            if !h.is_multiple_of(family.end_dims[b]) {
                return Err(ModError::NonIntegralMultiplicity);
            }
            counts[b] += h / family.end_dims[b];
        }
        current = quotient_module(&current, &soc)?;
    }
    Ok(counts)
}

/// All cyclic submodules A·v for v over a small integer grid, closed under
/// pairwise sums — a finite fragment of the submodule lattice used to
/// cross-check Jordan–Hölder additivity on desk-scale modules.
pub fn cyclic_submodule_lattice(m: &LeftModule, cap: usize) -> Vec<Subspace> {
    let mut lattice: Vec<Subspace> = vec![Subspace::zero(m.dim), Subspace::full(m.dim)];
    let push = |s: Subspace, lattice: &mut Vec<Subspace>| {
        if !lattice.contains(&s) {
            lattice.push(s);
        }
    };
    // Grid vectors with entries in {-1, 0, 1}.
    let total = 3usize.pow(m.dim as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(m.dim);
        let mut c = code;
        for _ in 0..m.dim {
            v.push(crate::exactla::rat([0i64, 1, -1][c % 3]));
            c /= 3;
        }
        // Smallest invariant subspace containing v.
        let mut sub = Subspace::from_rows(m.dim, vec![v]);
        loop {
            let mut grew = false;
            for g in 0..m.action.len() {
                for row in sub.basis_rows() {
                    let img = m.action[g].mul_vec(&row);
                    if sub.insert(&img) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        push(sub, &mut lattice);
        if lattice.len() > cap {
            return lattice;
        }
    }
    // Close under pairwise sums.
    loop {
        let mut added = false;
        let snapshot = lattice.clone();
        for a in &snapshot {
            for b in &snapshot {
                let s = a.sum(b);
                if !lattice.contains(&s) {
                    lattice.push(s);
                    added = true;
                    if lattice.len() > cap {
                        return lattice;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    lattice
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::Cocycle;
    use crate::exactla::rat;
    use crate::generators;
    use crate::green::{j_decompose, local_data, OrderPolicy};

    struct Setup {
        alg: CategoryAlgebra,
        jdec: JClassDecomposition,
        local: LocalData,
        radical: Subspace,
    }

    fn setup(c: crate::category::FiniteCategory, a: Cocycle) -> Setup {
        let jdec = j_decompose(&c, OrderPolicy::default()).unwrap();
        let local = local_data(&c, &jdec).unwrap();
        let alg = CategoryAlgebra::new(c, a);
        let radical = alg.radical_corner_criterion(&jdec, &local);
        Setup {
            alg,
            jdec,
            local,
            radical,
        }
    }

    fn t2_setup() -> Setup {
        let c = generators::full_transformation_monoid(2).unwrap();
        let a = Cocycle::trivial(&c);
        setup(c, a)
    }

    #[test]
    fn t2_q_modules() {
        let s = t2_setup();
        let q1 = q_module(&s.alg, &s.jdec, &s.local, 0).unwrap();
        assert_eq!(q1.dim, 2); // Ae' = span{c1,c2}, AJ_e = 0
        let q2 = q_module(&s.alg, &s.jdec, &s.local, 1).unwrap();
        assert_eq!(q2.dim, 2); // A / span{c1,c2}
    }

    #[test]
    fn t2_standard_family_gold() {
        let s = t2_setup();
        let opts = ModOpts::default();
        let family = standard_modules(&s.alg, &s.jdec, &s.local, &s.radical, &opts).unwrap();
        assert_eq!(family.lambda, vec![(0, 0), (1, 0), (1, 1)]);
        let delta_dims: Vec<usize> = family.delta.iter().map(|d| d.dim).collect();
        assert_eq!(delta_dims, vec![2, 1, 1]);
        let simple_dims: Vec<usize> = family.simple.iter().map(|d| d.dim).collect();
        assert_eq!(simple_dims, vec![1, 1, 1]);
        assert_eq!(family.n_ir, vec![1, 1, 1]);
        assert_eq!(family.layer_counts, vec![1, 2]);
    }

    #[test]
    fn t2_covers_and_decomposition_matrix() {
        let s = t2_setup();
        let opts = ModOpts::default();
        let family = standard_modules(&s.alg, &s.jdec, &s.local, &s.radical, &opts).unwrap();
        let covers = projective_covers(&s.alg, &s.jdec, &family, &s.radical, &opts).unwrap();
        // Σ dim D · dim P = dim A.
        let audit: usize = (0..family.len())
            .map(|a| family.simple[a].dim * covers[a].module.dim)
            .sum();
        assert_eq!(audit, 4);
        // P_const = Δ_const is the projective standard of dimension 2.
        assert_eq!(covers[0].module.dim, 2);
        let dec = decomposition_matrix(&family, &covers).unwrap();
        // Unitriangular with a single off-diagonal entry in the Δ_const row.
        assert_eq!(dec[0][0], 1);
        assert_eq!(dec[1], vec![0, 1, 0]);
        assert_eq!(dec[2], vec![0, 0, 1]);
        let off: usize = dec[0][1] + dec[0][2];
        assert_eq!(off, 1);
        // The off-diagonal factor is the sign module: swap acts by -1.
        let b = if dec[0][1] == 1 { 1 } else { 2 };
        let sign_action = &family.simple[b].action[1]; // morphism 1 = swap
        assert_eq!(sign_action[(0, 0)], rat(-1));
    }

    #[test]
    fn t2_axioms_and_layer_ledger() {
        let s = t2_setup();
        let opts = ModOpts::default();
        let family = standard_modules(&s.alg, &s.jdec, &s.local, &s.radical, &opts).unwrap();
        let covers = projective_covers(&s.alg, &s.jdec, &family, &s.radical, &opts).unwrap();
        let axioms =
            verify_standard_axioms(&s.alg, &s.jdec, &family, &covers, &s.radical, &opts).unwrap();
        assert!(axioms.ok(), "{:?}", axioms.checks);
        let ledger =
            check_layer_decomposition(&s.alg, &s.jdec, &s.local, &family, &covers).unwrap();
        assert!(ledger.ok(), "{:?}", ledger.rows);
        // T_2 numbers: layer 1: 2 = 1·1·2; layer 2: 2 = 1·(1+1).
        assert_eq!(ledger.rows[0].quotient_dim, 2);
        assert_eq!(ledger.rows[1].quotient_dim, 2);
    }

    #[test]
    fn t2_independence_of_representative() {
        let s = t2_setup();
        let opts = ModOpts::default();
        for i in 0..s.jdec.num_classes() {
            assert!(idempotent_independence_check(&s.alg, &s.jdec, i, &opts).unwrap());
        }
    }

    #[test]
    fn tl3_semisimple_standard_family() {
        let d = generators::temperley_lieb(3, rat(2)).unwrap();
        let s = setup(d.category, d.cocycle);
        let opts = ModOpts::default();
        let family = standard_modules(&s.alg, &s.jdec, &s.local, &s.radical, &opts).unwrap();
        let mut delta_dims: Vec<usize> = family.delta.iter().map(|m| m.dim).collect();
        delta_dims.sort_unstable();
        assert_eq!(delta_dims, vec![1, 2]);
        // Semisimple: 1² + 2² = 5 = dim A.
        let sq: usize = family.delta.iter().map(|m| m.dim * m.dim).sum();
        assert_eq!(sq, 5);
        assert_eq!(s.radical.dim(), 0);
    }

    #[test]
    fn s2_group_category_standard_family() {
        let c = generators::cyclic_group(2);
        let a = Cocycle::trivial(&c);
        let s = setup(c, a);
        let opts = ModOpts::default();
        let family = standard_modules(&s.alg, &s.jdec, &s.local, &s.radical, &opts).unwrap();
        // Semisimple: Δ = D, two 1-dim simples.
        assert_eq!(family.len(), 2);
        for a in 0..2 {
            assert_eq!(family.delta[a].dim, 1);
            assert!(find_iso(&family.delta[a], &family.simple[a], &opts).is_some());
        }
    }

    #[test]
    fn socle_oracle_agrees_on_t2() {
        let s = t2_setup();
        let opts = ModOpts::default();
        let family = standard_modules(&s.alg, &s.jdec, &s.local, &s.radical, &opts).unwrap();
        let covers = projective_covers(&s.alg, &s.jdec, &family, &s.radical, &opts).unwrap();
        let reg = regular_module(&s.alg);
        let via_covers: Vec<usize> = (0..family.len())
            .map(|b| composition_multiplicity(&reg, &family, &covers, b).unwrap())
            .collect();
        let via_socle = socle_series_multiplicities(&reg, &family, &s.radical).unwrap();
        assert_eq!(via_covers, via_socle);
        // Regular module of T_2: [A : D_const] = 2, [A : D_sign] = 1, [A : D_triv] = 1.
        let total: usize = (0..family.len())
            .map(|b| via_covers[b] * family.simple[b].dim)
            .sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn lattice_additivity_on_t2_regular() {
        let s = t2_setup();
        let opts = ModOpts::default();
        let family = standard_modules(&s.alg, &s.jdec, &s.local, &s.radical, &opts).unwrap();
        let reg = regular_module(&s.alg);
        let lattice = cyclic_submodule_lattice(&reg, 512);
        assert!(lattice.len() >= 3);
        let full: Vec<usize> = socle_series_multiplicities(&reg, &family, &s.radical).unwrap();
        for sub in &lattice {
            if sub.dim() == 0 || sub.dim() == reg.dim {
                continue;
            }
            let n = submodule_module(&reg, sub).unwrap();
            let q = quotient_module(&reg, sub).unwrap();
            let mn = socle_series_multiplicities(&n, &family, &s.radical).unwrap();
            let mq = socle_series_multiplicities(&q, &family, &s.radical).unwrap();
            let sum: Vec<usize> = mn.iter().zip(&mq).map(|(a, b)| a + b).collect();
            assert_eq!(sum, full);
        }
        let _ = opts;
    }
}
