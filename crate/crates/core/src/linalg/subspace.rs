//! Subspaces of ℚ(i)ⁿ stored by their reduced row-echelon basis.
//!
//! The stored basis is canonical, so two subspaces are equal iff their
//! stored bases are equal.

use serde::{Deserialize, Serialize};

use super::matrix::{LinearSolver, Matrix, Solve};
use super::scalar::Scalar;
use super::vector::{is_zero_vec, Vector};
use super::LinalgError;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "SubspaceRepr", into = "SubspaceRepr")]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl TryFrom<SubspaceRepr> for Subspace {
    type Error = String;
    fn try_from(r: SubspaceRepr) -> Result<Self, String> {
        if r.basis.iter().any(|v| v.len() != r.ambient_dim) {
            return Err("basis vector length differs from ambient_dim".into());
        }
        Ok(Subspace::span(r.ambient_dim, &r.basis))
    }
}

impl From<Subspace> for SubspaceRepr {
    fn from(s: Subspace) -> Self {
        SubspaceRepr { ambient_dim: s.ambient_dim, basis: s.basis.row_vectors() }
    }
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(0, n) }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n) }
    }

    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(n);
        }
        let m = Matrix::from_rows(vectors, n);
        Subspace::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let r = m.rref();
        Subspace { ambient_dim: m.cols(), basis: r.basis_rows() }
    }

    pub fn column_space(m: &Matrix) -> Self {
        Subspace::row_space(&m.transpose())
    }

    /// Span of the coordinate vectors `e_i`, `i ∈ idx`.
    pub fn coordinate(n: usize, idx: &[usize]) -> Self {
        let vs: Vec<Vector> = idx.iter().map(|&i| super::vector::unit_vec(n, i)).collect();
        Subspace::span(n, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        if is_zero_vec(v) {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        // reduce v against the echelon basis
        let mut w = v.to_vec();
        for k in 0..self.dim() {
            let p = self.pivot_of_row(k);
            if !w[p].is_zero() {
                let f = w[p].clone();
                for j in 0..self.ambient_dim {
                    let b = &self.basis[(k, j)];
                    if !b.is_zero() {
                        w[j] -= b * &f;
                    }
                }
            }
        }
        is_zero_vec(&w)
    }

    fn pivot_of_row(&self, k: usize) -> usize {
        self.basis.row(k).iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero")
    }

    /// Pivot columns of the stored echelon basis.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim()).map(|k| self.pivot_of_row(k)).collect()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, o.ambient_dim);
        o.basis.row_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, o.ambient_dim);
        Subspace::row_space(&self.basis.vstack(&o.basis))
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, o.ambient_dim);
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.ambient_dim);
        }
        if self.is_full() {
            return o.clone();
        }
        if o.is_full() {
            return self.clone();
        }
        // (a, b) with a·U = b·V, i.e. kernel of [U; -V]ᵀ
        let stacked = self.basis.vstack(&o.basis.neg());
        let ker = kernel_basis(&stacked.transpose());
        let k = self.dim();
        let vs: Vec<Vector> = ker
            .basis_vectors()
            .iter()
            .map(|c| {
                let coeffs = &c[..k];
                Matrix::from_rows(&[coeffs.to_vec()], k).mul(&self.basis).row_vec(0)
            })
            .collect();
        Subspace::span(self.ambient_dim, &vs)
    }

    /// Image under the linear map `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim, "map source dimension mismatch");
        if self.is_zero() {
            return Subspace::zero(m.rows());
        }
        Subspace::row_space(&m.mul(&self.basis.transpose()).transpose())
    }

    /// `{v : m v ∈ self}` for `m` with target equal to this ambient space.
    pub fn preimage(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient_dim);
        // v ↦ m v mod self: compose with a projection killing self
        let ann = self.annihilator();
        if ann.is_zero() {
            return Subspace::full(m.cols());
        }
        kernel_basis(&ann.basis.mul(m))
    }

    /// `{φ : φ(v) = 0 for v in self}` under the bilinear pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        kernel_basis(&self.basis)
    }

    /// Hermitian orthogonal complement under the standard form.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        kernel_basis(&self.basis.transpose_conj_rows())
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if self.is_zero() {
            return if is_zero_vec(v) { Some(Vec::new()) } else { None };
        }
        LinearSolver::new(&self.basis.transpose()).solve(v).into_option()
    }
}

impl Matrix {
    /// Rows conjugated entrywise (helper for hermitian complements).
    fn transpose_conj_rows(&self) -> Matrix {
        let data = self.entries().iter().map(Scalar::conj).collect();
        Matrix::from_vec(self.rows(), self.cols(), data)
    }
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    let n = m.cols();
    let r = m.rref();
    let free = r.non_pivots();
    let mut vs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Scalar::zero(); n];
        v[f] = Scalar::one();
        for (k, &p) in r.pivots.iter().enumerate() {
            let c = &r.matrix[(k, f)];
            if !c.is_zero() {
                v[p] = -c;
            }
        }
        vs.push(v);
    }
    Subspace::span(n, &vs)
}

/// Complement of `sub` inside `inside`, chosen greedily from the echelon
/// basis of `inside` (the standard basis when `inside` is everything).
pub fn split_complement(sub: &Subspace, inside: &Subspace) -> Result<Subspace, LinalgError> {
    if sub.ambient_dim() != inside.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: inside.ambient_dim(),
            found: sub.ambient_dim(),
        });
    }
    if !inside.contains_subspace(sub) {
        return Err(LinalgError::NotContained);
    }
    let mut acc = sub.clone();
    let mut chosen = Vec::new();
    for v in inside.basis_vectors() {
        if acc.dim() == inside.dim() {
            break;
        }
        if !acc.contains(&v) {
            acc = acc.sum(&Subspace::span(sub.ambient_dim(), std::slice::from_ref(&v)));
            chosen.push(v);
        }
    }
    Ok(Subspace::span(sub.ambient_dim(), &chosen))
}

/// Coordinates of the class of `v` in `(U ⊕ C)/U ≅ C`, given a basis of `c`
/// and the subspace `u`. Returns `None` if `v ∉ U ⊕ C`.
#[derive(Clone, Debug)]
pub struct QuotientCoords {
    solver: LinearSolver,
    c_dim: usize,
}

impl QuotientCoords {
    pub fn new(c_basis: &Matrix, u: &Subspace) -> Self {
        let stacked = c_basis.vstack(u.basis());
        QuotientCoords { solver: LinearSolver::new(&stacked.transpose()), c_dim: c_basis.rows() }
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        match self.solver.solve(v) {
            Solve::Solution(x) => Some(x[..self.c_dim].to_vec()),
            Solve::Inconsistent => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::zeros(2, 2)).dim(), 2);
        assert_eq!(kernel_basis(&Matrix::identity(2)).dim(), 0);
        let m = Matrix::from_rows(&[vec![Scalar::one(), Scalar::i()]], 2);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[-Scalar::i(), Scalar::one()]));
    }

    #[test]
    fn complement_examples() {
        let full = Subspace::full(2);
        let c = split_complement(&Subspace::span(2, &[v(&[1, 0])]), &full).unwrap();
        assert_eq!(c, Subspace::span(2, &[v(&[0, 1])]));
        assert!(split_complement(&full, &full).unwrap().is_zero());
        let c = split_complement(&Subspace::span(2, &[v(&[1, 1])]), &full).unwrap();
        assert_eq!(c.basis_vectors(), vec![v(&[1, 0])]);
        let line = Subspace::span(2, &[v(&[1, 0])]);
        assert_eq!(split_complement(&full, &line), Err(LinalgError::NotContained));
    }

    #[test]
    fn intersections_and_preimages() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        let m = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        assert_eq!(Subspace::span(3, &[v(&[1, 0, 0])]).preimage(&m), Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]));
        let oc = Subspace::span(2, &[vec![Scalar::one(), Scalar::i()]]).orthogonal_complement();
        assert!(oc.contains(&[Scalar::i(), Scalar::one()]));
    }
}
