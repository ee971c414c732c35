//! Indecomposable direct-sum splitting of modules over Q.
//!
//! Layered strategy. Phase 1 probes the endomorphism ring for an element
//! whose minimal polynomial has at least two coprime factors — the primary
//! decomposition of such an endomorphism splits the module. Phase 2, for
//! modules that survive probing, computes J(End) by the trace form, passes
//! to the semisimple quotient, deterministically splits its center (always
//! possible for commutative semisimple algebras by refining along basis
//! minimal polynomials), and lifts a central idempotent back through the
//! nilradical. A module whose endomorphism quotient is a single
//! noncommutative block after both phases raises the structured
//! "instance too large" error rather than guessing.

use super::{hom_space, submodule_module, LeftModule, ModError, ModOpts, Rng};
use crate::exactla::{factor_rational, min_poly, rat, Mat, Poly, Rat, Subspace};
use num::{One, Zero};

/// One indecomposable direct summand, with its embedding into the module
/// that was split (rows = basis vectors in the original coordinates).
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: LeftModule,
    pub rows: Vec<Vec<Rat>>,
}

/// Worklist entry: a module, its embedding rows, and an optional known
/// basis of its endomorphism ring.
type WorkItem = (LeftModule, Vec<Vec<Rat>>, Option<Vec<Mat>>);

/// Split into indecomposable direct summands. `endos_hint` supplies a known
/// basis of End(m) for the top-level module (e.g. right multiplications for
/// a regular module); recursion levels below compute their own.
pub fn endo_split(
    m: &LeftModule,
    endos_hint: Option<Vec<Mat>>,
    opts: &ModOpts,
) -> Result<Vec<Summand>, ModError> {
    let mut done: Vec<Summand> = Vec::new();
    let identity_rows: Vec<Vec<Rat>> = (0..m.dim)
        .map(|i| {
            let mut v = vec![Rat::zero(); m.dim];
            v[i] = Rat::one();
            v
        })
        .collect();
    let mut work: Vec<WorkItem> = vec![(m.clone(), identity_rows, endos_hint)];
    let mut iterations = 0usize;
    while let Some((module, rows, hint)) = work.pop() {
        if module.dim == 0 {
            continue;
        }
        iterations += 1;
        if iterations > opts.max_split_iterations {
            return Err(ModError::InstanceTooLarge(
                "splitting iteration bound exceeded".into(),
            ));
        }
        let endos = match hint {
            Some(h) => h,
            None => hom_space(&module, &module),
        };
        match try_split(&module, &endos, opts)? {
            None => done.push(Summand { module, rows }),
            Some((sub_a, sub_b)) => {
                debug_assert_eq!(sub_a.dim() + sub_b.dim(), module.dim);
                for sub in [sub_a, sub_b] {
                    let part = submodule_module(&module, &sub)
                        .expect("kernel of an endomorphism is a submodule");
                    let part_rows: Vec<Vec<Rat>> = sub
                        .basis_rows()
                        .iter()
                        .map(|coords| {
                            let mut v = vec![Rat::zero(); rows.first().map_or(0, |r| r.len())];
                            for (j, c) in coords.iter().enumerate() {
                                if !c.is_zero() {
                                    for (vi, ri) in v.iter_mut().zip(&rows[j]) {
                                        *vi += c * ri;
                                    }
                                }
                            }
                            v
                        })
                        .collect();
                    work.push((part, part_rows, None));
                }
            }
        }
    }
    Ok(done)
}

/// Either `None` (certified indecomposable) or two complementary invariant
/// subspaces in the module's own coordinates.
fn try_split(
    module: &LeftModule,
    endos: &[Mat],
    opts: &ModOpts,
) -> Result<Option<(Subspace, Subspace)>, ModError> {
    if endos.len() <= 1 {
        // End = Q·id: local.
        return Ok(None);
    }
    for phi in probe_sequence(endos, opts) {
        if let Some(split) = primary_split(module, &phi, opts) {
            return Ok(Some(split));
        }
    }
    phase2_center_split(module, endos, opts)
}

/// Probe order: the hom basis, pairwise products, then seeded small-integer
/// combinations. All deterministic for a fixed seed.
fn probe_sequence(endos: &[Mat], opts: &ModOpts) -> Vec<Mat> {
    let k = endos.len();
    let mut out: Vec<Mat> = endos.to_vec();
    let cap = k.min(8);
    for i in 0..cap {
        for j in 0..cap {
            out.push(endos[i].mul(&endos[j]));
        }
    }
    let mut rng = Rng::new(opts.seed);
    for _ in 0..32 {
        let mut cand = Mat::zero(endos[0].rows(), endos[0].cols());
        for h in endos {
            let c = rng.int_range(-3, 3);
            if c != 0 {
                cand = cand.add(&h.scale(&rat(c)));
            }
        }
        out.push(cand);
    }
    out
}

/// If the minimal polynomial of `phi` has two coprime parts, the primary
/// decomposition M = ker q1(φ) ⊕ ker q2(φ) splits the module.
fn primary_split(module: &LeftModule, phi: &Mat, opts: &ModOpts) -> Option<(Subspace, Subspace)> {
    if phi.is_zero() {
        return None;
    }
    let p = min_poly(phi);
    if p.degree() < 2 || p.degree() > opts.max_poly_degree {
        return None;
    }
    let factors = factor_rational(&p);
    if factors.len() < 2 {
        return None;
    }
    let (f0, m0) = &factors[0];
    let q1 = f0.pow(*m0);
    let q2 = p.divmod(&q1).0;
    let k1 = q1.eval_mat(phi).nullspace();
    let k2 = q2.eval_mat(phi).nullspace();
    if k1.dim() == 0 || k2.dim() == 0 || k1.dim() + k2.dim() != module.dim {
        return None;
    }
    Some((k1, k2))
}

/// Phase 2: split via a central idempotent of End/J(End), lifted through
/// the nilradical.
fn phase2_center_split(
    module: &LeftModule,
    endos: &[Mat],
    opts: &ModOpts,
) -> Result<Option<(Subspace, Subspace)>, ModError> {
    let ea = EndoAlgebra::new(endos);
    let rad = ea.radical_trace_form();
    let quo = ea.quotient(&rad);
    if quo.dim == 1 {
        // End/J(End) = Q: local endomorphism ring.
        return Ok(None);
    }
    let center = quo.center_basis();
    let prims = quo.split_commutative(&center)?;
    if prims.len() >= 2 {
        let rep = quo.coset_representative(&prims[0]);
        let f = ea.lift_idempotent(&rep, opts)?;
        let fm = ea.realize(&f, endos);
        debug_assert_eq!(fm.mul(&fm), fm);
        let image = {
            let t = fm.transpose();
            let rows: Vec<Vec<Rat>> = (0..t.rows()).map(|i| t.row_vec(i)).collect();
            Subspace::from_rows(module.dim, rows)
        };
        let kernel = fm.nullspace();
        if image.dim() == 0 || kernel.dim() == 0 {
            return Err(ModError::InstanceTooLarge(
                "idempotent lift degenerated".into(),
            ));
        }
        return Ok(Some((image, kernel)));
    }
    if center.len() == quo.dim {
        // Commutative semisimple with a single primitive idempotent: a
        // field, so End is local and the module indecomposable.
        return Ok(None);
    }
    Err(ModError::InstanceTooLarge(
        "endomorphism ring reduced to a single noncommutative block".into(),
    ))
}

/// The endomorphism ring as an abstract structure-constant algebra over its
/// given matrix basis.
struct EndoAlgebra {
    dim: usize,
    /// sc[i][j] = coordinates of h_i · h_j.
    sc: Vec<Vec<Vec<Rat>>>,
    unit: Vec<Rat>,
}

impl EndoAlgebra {
    fn new(endos: &[Mat]) -> Self {
        let d = endos.len();
        let n = endos[0].rows();
        let flat = |m: &Mat| -> Vec<Rat> {
            let mut v = Vec::with_capacity(n * n);
            for i in 0..n {
                v.extend(m.row_vec(i));
            }
            v
        };
        let mut cols = Mat::zero(n * n, d);
        for (j, h) in endos.iter().enumerate() {
            for (i, x) in flat(h).into_iter().enumerate() {
                cols[(i, j)] = x;
            }
        }
        let mut sc = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = endos[i].mul(&endos[j]);
                sc[i][j] = cols
                    .solve(&flat(&prod))
                    .expect("endomorphism ring closed under composition");
            }
        }
        let unit = cols
            .solve(&flat(&Mat::identity(n)))
            .expect("identity endomorphism lies in the hom space");
        EndoAlgebra { dim: d, sc, unit }
    }

    fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in self.sc[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += a * b * c;
                    }
                }
            }
        }
        out
    }

    fn left_mult_matrix(&self, x: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.sc[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] += a * c;
                    }
                }
            }
        }
        m
    }

    /// J(E) as the radical of the trace form of the regular representation.
    fn radical_trace_form(&self) -> Subspace {
        let d = self.dim;
        let ls: Vec<Mat> = (0..d)
            .map(|i| {
                let mut e = vec![Rat::zero(); d];
                e[i] = Rat::one();
                self.left_mult_matrix(&e)
            })
            .collect();
        let mut g = Mat::zero(d, d);
        for i in 0..d {
            for j in 0..d {
                g[(i, j)] = ls[i].mul(&ls[j]).trace();
            }
        }
        g.nullspace()
    }

    fn quotient(&self, rad: &Subspace) -> QuotientAlgebra<'_> {
        let coords = rad.complement_coords();
        let dim = coords.len();
        let embed = |qv: &[Rat]| -> Vec<Rat> {
            let mut v = vec![Rat::zero(); self.dim];
            for (k, &c) in coords.iter().enumerate() {
                v[c] = qv[k].clone();
            }
            v
        };
        let project = |ev: &[Rat]| -> Vec<Rat> {
            let r = rad.reduce(ev);
            coords.iter().map(|&c| r[c].clone()).collect()
        };
        let mut sc = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut ei = vec![Rat::zero(); self.dim];
                ei[coords[i]] = Rat::one();
                let mut ej = vec![Rat::zero(); self.dim];
                ej[coords[j]] = Rat::one();
                sc[i][j] = project(&self.mul(&ei, &ej));
            }
        }
        let unit = project(&self.unit);
        let _ = embed;
        QuotientAlgebra {
            parent: self,
            coords,
            dim,
            sc,
            unit,
        }
    }

    /// Newton-lift a coset representative of an idempotent of E/J(E) to an
    /// exact idempotent of E.
    fn lift_idempotent(&self, x0: &[Rat], opts: &ModOpts) -> Result<Vec<Rat>, ModError> {
        let mut x = x0.to_vec();
        for _ in 0..opts.max_split_iterations {
            let x2 = self.mul(&x, &x);
            if x2 == x {
                return Ok(x);
            }
            // x <- 3x^2 - 2x^3
            let x3 = self.mul(&x2, &x);
            x = x2
                .iter()
                .zip(&x3)
                .map(|(a, b)| a * rat(3) - b * rat(2))
                .collect();
        }
        Err(ModError::InstanceTooLarge(
            "idempotent lifting did not converge".into(),
        ))
    }

    /// Coordinates back to a concrete endomorphism matrix.
    fn realize(&self, x: &[Rat], endos: &[Mat]) -> Mat {
        let n = endos[0].rows();
        let mut m = Mat::zero(n, n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&endos[i].scale(c));
            }
        }
        m
    }
}

struct QuotientAlgebra<'a> {
    parent: &'a EndoAlgebra,
    coords: Vec<usize>,
    dim: usize,
    sc: Vec<Vec<Vec<Rat>>>,
    unit: Vec<Rat>,
}

impl QuotientAlgebra<'_> {
    fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in self.sc[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += a * b * c;
                    }
                }
            }
        }
        out
    }

    fn coset_representative(&self, qv: &[Rat]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.parent.dim];
        for (k, &c) in self.coords.iter().enumerate() {
            v[c] = qv[k].clone();
        }
        v
    }

    /// Basis of the center: solutions of z·b_j = b_j·z for all j.
    fn center_basis(&self) -> Vec<Vec<Rat>> {
        let d = self.dim;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for j in 0..d {
            // condition matrix: L_j - R_j applied to z.
            for k in 0..d {
                let mut row = vec![Rat::zero(); d];
                for i in 0..d {
                    // coefficient of z_i in (z·b_j − b_j·z)_k
                    row[i] = self.sc[i][j][k].clone() - self.sc[j][i][k].clone();
                }
                if !row.iter().all(|x| x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return (0..d)
                .map(|i| {
                    let mut v = vec![Rat::zero(); d];
                    v[i] = Rat::one();
                    v
                })
                .collect();
        }
        Mat::from_rows(d, rows).nullspace().basis_rows()
    }

    /// Primitive idempotents of the (commutative semisimple) subalgebra
    /// spanned by `center`: refine along minimal polynomials of the basis
    /// until stable. Always terminates with the full primitive set.
    fn split_commutative(&self, center: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>, ModError> {
        let mut idempotents: Vec<Vec<Rat>> = vec![self.unit.clone()];
        loop {
            let mut changed = false;
            let mut next: Vec<Vec<Rat>> = Vec::new();
            'outer: for f in &idempotents {
                for z in center {
                    let y = self.mul(f, z);
                    // Subalgebra f·Z spanned by {f·z_k}.
                    let span_rows: Vec<Vec<Rat>> =
                        center.iter().map(|zk| self.mul(f, zk)).collect();
                    let span = Subspace::from_rows(self.dim, span_rows);
                    let basis = span.basis_rows();
                    if basis.is_empty() {
                        continue;
                    }
                    // Multiplication-by-y on the subalgebra.
                    let k = basis.len();
                    let mut op = Mat::zero(k, k);
                    for (j, b) in basis.iter().enumerate() {
                        let img = self.mul(&y, b);
                        let coords = super::express_in_rows(&basis, &img)
                            .expect("f·Z closed under multiplication");
                        for i in 0..k {
                            op[(i, j)] = coords[i].clone();
                        }
                    }
                    let p = min_poly(&op);
                    let factors = factor_rational(&p);
                    if factors.len() < 2 {
                        continue;
                    }
                    changed = true;
                    // CRT idempotents: for each factor p_t, the polynomial
                    // a_t·h_t with h_t = p/p_t and a_t·h_t + b_t·p_t = 1,
                    // evaluated at y with constant term on f.
                    for (pt, mt) in &factors {
                        let qt = pt.pow(*mt);
                        let ht = p.divmod(&qt).0;
                        let (g, a, _) = ht.ext_gcd(&qt);
                        if g != Poly::one() {
                            return Err(ModError::InstanceTooLarge(
                                "center splitting hit a non-squarefree block".into(),
                            ));
                        }
                        let proj_poly = a.mul(&ht);
                        let ft = self.eval_poly_at(&proj_poly, &y, f);
                        debug_assert_eq!(self.mul(&ft, &ft), ft);
                        next.push(ft);
                    }
                    continue 'outer;
                }
                next.push(f.clone());
            }
            idempotents = next;
            if !changed {
                return Ok(idempotents);
            }
        }
    }

    /// Evaluate a polynomial at `y` inside the unital subalgebra with
    /// identity `f` (so y^0 = f).
    fn eval_poly_at(&self, p: &Poly, y: &[Rat], f: &[Rat]) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); self.dim];
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, y);
            if !c.is_zero() {
                for (a, fv) in acc.iter_mut().zip(f) {
                    *a += c * fv;
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CategoryAlgebra;
    use crate::cocycle::Cocycle;
    use crate::generators;
    use crate::modrep::regular_module;

    fn split_regular(c: crate::category::FiniteCategory) -> Vec<Summand> {
        let a = Cocycle::trivial(&c);
        let alg = CategoryAlgebra::new(c, a);
        let reg = regular_module(&alg);
        endo_split(&reg, None, &ModOpts::default()).unwrap()
    }

    #[test]
    fn c2_regular_splits_into_two_lines() {
        let parts = split_regular(generators::cyclic_group(2));
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.module.dim == 1));
    }

    #[test]
    fn s3_regular_splits_with_isotypic_blocks() {
        // QS_3 = Q ⊕ Q ⊕ M_2(Q): four indecomposable summands of dims
        // 1, 1, 2, 2 — the isotypic M_2(Q) block must split into two copies.
        let table = s3_table();
        let names = (0..6).map(|i| format!("p{}", i)).collect();
        let g = crate::category::FiniteCategory::from_monoid(names, &table).unwrap();
        let parts = split_regular(g);
        let mut dims: Vec<usize> = parts.iter().map(|p| p.module.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2, 2]);
    }

    fn s3_table() -> Vec<Vec<usize>> {
        // Permutations of {0,1,2} in one-line notation, composed as maps.
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        (0..6)
            .map(|t| {
                (0..6)
                    .map(|s| {
                        let composed = [
                            perms[t][perms[s][0]],
                            perms[t][perms[s][1]],
                            perms[t][perms[s][2]],
                        ];
                        index(&composed)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn simple_module_does_not_split() {
        // The 2-dim simple of S_3 from the regular split.
        let table = s3_table();
        let names = (0..6).map(|i| format!("p{}", i)).collect();
        let g = crate::category::FiniteCategory::from_monoid(names, &table).unwrap();
        let parts = split_regular(g);
        let two_dim = parts.iter().find(|p| p.module.dim == 2).unwrap();
        let c = crate::category::FiniteCategory::from_monoid(
            (0..6).map(|i| format!("p{}", i)).collect(),
            &s3_table(),
        )
        .unwrap();
        let alg = CategoryAlgebra::new(c.clone(), Cocycle::trivial(&c));
        let again = endo_split(&two_dim.module, None, &ModOpts::default()).unwrap();
        assert_eq!(again.len(), 1);
    }

    #[test]
    fn t2_regular_splits_into_projectives() {
        // QT_2 = P_triv(1) ⊕ P_sign(1) ⊕ P_const(2).
        let parts = split_regular(generators::full_transformation_monoid(2).unwrap());
        let mut dims: Vec<usize> = parts.iter().map(|p| p.module.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2]);
    }
}
