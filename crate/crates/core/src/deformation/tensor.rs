//! Elements of `V ⊗ A` for a vector space `V` and a truncated graded algebra
//! `A`, stored per `A`-degree as lists of `V`-columns.

use serde::Serialize;

use crate::artin::GradedArtinAlgebra;
use crate::linalg::{axpy, is_zero_vec, vec_add, vec_scale, vec_sub, zero_vec, Matrix, Scalar, Vector};

/// `cols[k][b]` is the `V`-coefficient of the basis element `b` of `Gr^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    rows: usize,
    cols: Vec<Vec<Vector>>,
}

impl Serialize for Tensor {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let blocks: Vec<Matrix> = (0..self.cols.len()).map(|k| self.block(k)).collect();
        blocks.serialize(ser)
    }
}

impl Tensor {
    pub fn zero(rows: usize, a: &GradedArtinAlgebra) -> Self {
        Tensor { rows, cols: a.dims().iter().map(|&d| vec![zero_vec(rows); d]).collect() }
    }

    /// Blocks `rows × dim Gr^k`.
    pub fn from_blocks(rows: usize, blocks: &[Matrix]) -> Self {
        let cols = blocks
            .iter()
            .map(|m| {
                assert_eq!(m.rows(), rows, "block row count");
                m.col_vectors()
            })
            .collect();
        Tensor { rows, cols }
    }

    /// `x ⊗ e` for the basis element `e = Gr^k[b]`.
    pub fn elementary(a: &GradedArtinAlgebra, x: &[Scalar], k: usize, b: usize) -> Self {
        let mut t = Tensor::zero(x.len(), a);
        t.cols[k][b] = x.to_vec();
        t
    }

    /// `x ⊗ r` for an element `r` of the algebra in total coordinates.
    pub fn pure(a: &GradedArtinAlgebra, x: &[Scalar], r: &[Scalar]) -> Self {
        let mut t = Tensor::zero(x.len(), a);
        for k in 0..=a.truncation_order() {
            for b in 0..a.dim(k) {
                let c = &r[a.offset(k) + b];
                if !c.is_zero() {
                    t.cols[k][b] = vec_scale(x, c);
                }
            }
        }
        t
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn order(&self) -> usize {
        self.cols.len() - 1
    }

    pub fn col(&self, k: usize, b: usize) -> &Vector {
        &self.cols[k][b]
    }

    pub fn col_mut(&mut self, k: usize, b: usize) -> &mut Vector {
        &mut self.cols[k][b]
    }

    pub fn columns(&self, k: usize) -> &[Vector] {
        &self.cols[k]
    }

    pub fn block(&self, k: usize) -> Matrix {
        Matrix::from_cols(&self.cols[k], self.rows)
    }

    pub fn blocks(&self) -> Vec<Matrix> {
        (0..self.cols.len()).map(|k| self.block(k)).collect()
    }

    pub fn same_shape(&self, o: &Tensor) -> bool {
        self.rows == o.rows && self.cols.len() == o.cols.len() && self.cols.iter().zip(&o.cols).all(|(a, b)| a.len() == b.len())
    }

    fn zip(&self, o: &Tensor, f: impl Fn(&Vector, &Vector) -> Vector) -> Tensor {
        assert!(self.same_shape(o), "tensor shapes differ");
        let cols = self.cols.iter().zip(&o.cols).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect();
        Tensor { rows: self.rows, cols }
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        self.zip(o, |x, y| vec_add(x, y))
    }

    pub fn sub(&self, o: &Tensor) -> Tensor {
        self.zip(o, |x, y| vec_sub(x, y))
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let cols = self.cols.iter().map(|b| b.iter().map(|v| vec_scale(v, s)).collect()).collect();
        Tensor { rows: self.rows, cols }
    }

    pub fn neg(&self) -> Tensor {
        self.scale(&Scalar::from_int(-1))
    }

    /// Applies a linear map to the `V` factor.
    pub fn map(&self, m: &Matrix) -> Tensor {
        assert_eq!(m.cols(), self.rows, "map source dimension");
        let cols = self.cols.iter().map(|b| b.iter().map(|v| m.mul_vec(v)).collect()).collect();
        Tensor { rows: m.rows(), cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|b| b.iter().all(|v| is_zero_vec(v)))
    }

    /// No component in `Gr⁰`.
    pub fn in_max_ideal(&self) -> bool {
        self.cols[0].iter().all(|v| is_zero_vec(v))
    }

    /// Smallest `k` with a nonzero component in `Gr^k`.
    pub fn lowest_degree(&self) -> Option<usize> {
        (0..self.cols.len()).find(|&k| self.cols[k].iter().any(|v| !is_zero_vec(v)))
    }

    /// Only the `Gr^k` component.
    pub fn part(&self, k: usize) -> Tensor {
        let cols = self
            .cols
            .iter()
            .enumerate()
            .map(|(j, b)| if j == k { b.clone() } else { vec![zero_vec(self.rows); b.len()] })
            .collect();
        Tensor { rows: self.rows, cols }
    }

    /// Components in degrees `≤ k`.
    pub fn truncate(&self, k: usize) -> Tensor {
        let cols = self
            .cols
            .iter()
            .enumerate()
            .map(|(j, b)| if j <= k { b.clone() } else { vec![zero_vec(self.rows); b.len()] })
            .collect();
        Tensor { rows: self.rows, cols }
    }

    /// The `rows × total_dim` matrix of all columns side by side.
    pub fn to_total(&self) -> Matrix {
        let all: Vec<Vector> = self.cols.iter().flatten().cloned().collect();
        Matrix::from_cols(&all, self.rows)
    }

    pub fn from_total(m: &Matrix, a: &GradedArtinAlgebra) -> Tensor {
        assert_eq!(m.cols(), a.total_dim());
        let cols = (0..=a.truncation_order())
            .map(|k| (0..a.dim(k)).map(|b| m.col_vec(a.offset(k) + b)).collect())
            .collect();
        Tensor { rows: m.rows(), cols }
    }

    /// Pushes the coefficients through a linear map of algebras given on
    /// total coordinates (`target_total × source_total`).
    pub fn map_ring(&self, phi: &Matrix, target: &GradedArtinAlgebra) -> Tensor {
        Tensor::from_total(&self.to_total().mul(&phi.transpose()), target)
    }

    /// The coefficient of `x ∈ V` viewed in the algebra: `Σ ⟨row, x⟩` per
    /// basis element, where `row` picks a coordinate of `V`.
    pub fn coordinate(&self, row: usize, a: &GradedArtinAlgebra) -> Vector {
        let mut out = zero_vec(a.total_dim());
        for k in 0..self.cols.len() {
            for (b, v) in self.cols[k].iter().enumerate() {
                out[a.offset(k) + b] = v[row].clone();
            }
        }
        out
    }
}

/// `[x, y]` in `V ⊗ A` for a bilinear `br: V₁ × V₂ → V₃` with values of size
/// `out_rows`.
pub fn tensor_bracket(
    a: &GradedArtinAlgebra,
    x: &Tensor,
    y: &Tensor,
    out_rows: usize,
    br: &dyn Fn(&[Scalar], &[Scalar]) -> Vector,
) -> Tensor {
    let mut out = Tensor::zero(out_rows, a);
    let n = a.truncation_order();
    for j in 0..=n {
        for (p, xc) in x.cols[j].iter().enumerate() {
            if is_zero_vec(xc) {
                continue;
            }
            for k in 0..=n - j {
                for (q, yc) in y.cols[k].iter().enumerate() {
                    if is_zero_vec(yc) {
                        continue;
                    }
                    let prod = a.basis_product(j, p, k, q);
                    if prod.is_empty() {
                        continue;
                    }
                    let v = br(xc, yc);
                    if is_zero_vec(&v) {
                        continue;
                    }
                    for (g, s) in prod {
                        axpy(&mut out.cols[j + k][g], &s, &v);
                    }
                }
            }
        }
    }
    out
}

const BCH_MAX_ORDER: usize = 4;

/// `log(e^X e^Y)` through brackets of length four, exact when the algebra is
/// truncated at order `≤ 4` and both arguments lie in the maximal ideal.
pub fn bch(
    a: &GradedArtinAlgebra,
    x: &Tensor,
    y: &Tensor,
    br: &dyn Fn(&[Scalar], &[Scalar]) -> Vector,
) -> Result<Tensor, super::DeformationError> {
    if a.truncation_order() > BCH_MAX_ORDER {
        return Err(super::DeformationError::BchOrder(a.truncation_order()));
    }
    let rows = x.rows();
    let b = |u: &Tensor, v: &Tensor| tensor_bracket(a, u, v, rows, br);
    let xy = b(x, y);
    let x_xy = b(x, &xy);
    let y_xy = b(y, &xy);
    let y_x_xy = b(y, &x_xy);
    Ok(x.add(y)
        .add(&xy.scale(&Scalar::frac(1, 2)))
        .add(&x_xy.scale(&Scalar::frac(1, 12)))
        .sub(&y_xy.scale(&Scalar::frac(1, 12)))
        .sub(&y_x_xy.scale(&Scalar::frac(1, 24))))
}
