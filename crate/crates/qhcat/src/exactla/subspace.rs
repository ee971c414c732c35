use super::{Mat, Rat};
use num::Zero;

/// A linear subspace of `Q^ambient`, stored as a reduced row-echelon basis.
///
/// The RREF basis is canonical: two subspaces are equal iff their stored
/// bases are identical, which is what every "same radical", "same ideal"
/// comparison in the pipeline reduces to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rat>>) -> Self {
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Mat::from_rows(ambient, rows);
        let (r, _, rank) = m.rref();
        let mut kept = Vec::with_capacity(rank);
        for i in 0..rank {
            kept.push(r.row_vec(i));
        }
        Subspace {
            ambient,
            basis: Mat::from_rows(ambient, kept),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Reduce `v` modulo the subspace; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut w = v.to_vec();
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
            if !w[pivot].is_zero() {
                let f = w[pivot].clone();
                for (wj, rj) in w.iter_mut().zip(row) {
                    if !rj.is_zero() {
                        *wj -= &f * rj;
                    }
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        (0..other.dim()).all(|i| self.contains_vec(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection by the Zassenhaus block trick.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let n = self.ambient;
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Subspace::zero(n);
        }
        // Rows [u | u] for u in self, [v | 0] for v in other; after row
        // reduction, rows with zero left half have right half spanning
        // the intersection.
        let mut block = Mat::zero(a + b, 2 * n);
        for i in 0..a {
            for j in 0..n {
                block[(i, j)] = self.basis[(i, j)].clone();
                block[(i, n + j)] = self.basis[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..n {
                block[(a + i, j)] = other.basis[(i, j)].clone();
            }
        }
        let (r, _, rank) = block.rref();
        let mut rows = Vec::new();
        for i in 0..rank {
            let left_zero = (0..n).all(|j| r[(i, j)].is_zero());
            if left_zero {
                rows.push((0..n).map(|j| r[(i, n + j)].clone()).collect());
            }
        }
        Subspace::from_rows(n, rows)
    }

    /// Grow the span by one vector; returns true if the dimension went up.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        if self.contains_vec(v) {
            return false;
        }
        let mut rows = self.basis_rows();
        rows.push(v.to_vec());
        *self = Subspace::from_rows(self.ambient, rows);
        true
    }

    /// Indices of non-pivot coordinates: coset representatives for the
    /// quotient `Q^ambient / self`.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut pivot = vec![false; self.ambient];
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !pivot[j]).collect()
    }
}
