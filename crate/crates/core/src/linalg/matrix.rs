//! Dense row-major matrices over ℚ(i) with exact elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::Scalar;
use super::vector::Vector;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Matrix { rows, cols, data }
    }

    /// Builds from row vectors; `cols` is needed when `rows` is empty.
    pub fn from_rows(rows: &[Vector], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_cols(cols: &[Vector], rows: usize) -> Self {
        Matrix::from_rows(cols, rows).transpose()
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| Scalar::from_int(x))
            })
            .collect();
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vector {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn col_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col_vec(j)).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = x.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let base = i * o.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn add_assign_scaled(&mut self, o: &Matrix, s: &Scalar) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..o.cols {
                out[(i, self.cols + j)] = o[(i, j)].clone();
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out[(self.rows + i, self.cols + j)] = o[(i, j)].clone();
            }
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o[(k, l)];
                        if !b.is_zero() {
                            out[(i * o.rows + k, j * o.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows: Vec<Vector> = idx.iter().map(|&i| self.row_vec(i)).collect();
        Matrix::from_rows(&rows, self.cols)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Sub-block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut out = Matrix::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out[(i - r0, j - c0)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    m.sub_row_multiple(i, r, &f, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = self.hstack(&Matrix::identity(n)).rref();
        if aug.pivots.len() < n || aug.pivots[n - 1] >= n {
            return None;
        }
        Some(aug.matrix.block(0, n, n, 2 * n))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv();
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] * &inv;
                    m.sub_row_multiple(i, c, &f, c);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            let x = &self.data[r * self.cols + j];
            if !x.is_zero() {
                self.data[r * self.cols + j] = x * s;
            }
        }
    }

    /// row[i] -= f * row[r], touching only columns >= `from`.
    fn sub_row_multiple(&mut self, i: usize, r: usize, f: &Scalar, from: usize) {
        for j in from..self.cols {
            let x = self.data[r * self.cols + j].clone();
            if !x.is_zero() {
                self.data[i * self.cols + j] -= &x * f;
            }
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.row_vectors().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    /// An array of equal-length rows. An empty array is a 0×0 matrix.
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let rows: Vec<Vector> = Vec::deserialize(de)?;
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(&rows, cols))
    }
}

/// Reduced row-echelon form with pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows only.
    pub fn basis_rows(&self) -> Matrix {
        let idx: Vec<usize> = (0..self.rank()).collect();
        self.matrix.select_rows(&idx)
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.matrix.cols()];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.matrix.cols()).filter(|&c| !is_piv[c]).collect()
    }
}

/// Outcome of a particular-solution request. Inconsistency is a value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    Solution(Vector),
    Inconsistent,
}

impl Solve {
    pub fn into_option(self) -> Option<Vector> {
        match self {
            Solve::Solution(x) => Some(x),
            Solve::Inconsistent => None,
        }
    }
}

/// Precomputed elimination of `m`, reused for many right-hand sides.
///
/// `transform * m = rref(m)`, so `m x = b` is solvable iff the last
/// `rows - rank` entries of `transform * b` vanish.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    rows: usize,
    cols: usize,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl LinearSolver {
    pub fn new(m: &Matrix) -> Self {
        let aug = m.hstack(&Matrix::identity(m.rows())).rref();
        let pivots: Vec<usize> = aug.pivots.iter().copied().filter(|&p| p < m.cols()).collect();
        let transform = aug.matrix.block(0, m.rows(), m.cols(), m.cols() + m.rows());
        LinearSolver { rows: m.rows(), cols: m.cols(), pivots, transform }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical particular solution: zero in every non-pivot coordinate.
    pub fn solve(&self, b: &[Scalar]) -> Solve {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let y = self.transform.mul_vec(b);
        if y[self.rank()..].iter().any(|s| !s.is_zero()) {
            return Solve::Inconsistent;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (k, &p) in self.pivots.iter().enumerate() {
            x[p] = y[k].clone();
        }
        Solve::Solution(x)
    }

    pub fn is_consistent(&self, b: &[Scalar]) -> bool {
        let y = self.transform.mul_vec(b);
        y[self.rank()..].iter().all(|s| s.is_zero())
    }
}

pub fn rref_rank(m: &Matrix) -> (Matrix, usize) {
    let r = m.rref();
    let rank = r.rank();
    (r.matrix, rank)
}

pub fn solve_particular(m: &Matrix, b: &[Scalar]) -> Solve {
    LinearSolver::new(m).solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64) -> Scalar {
        Scalar::from_int(a)
    }

    #[test]
    fn rref_examples() {
        let (_, r) = rref_rank(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, 1);
        let (_, r) = rref_rank(&Matrix::zeros(3, 3));
        assert_eq!(r, 0);
        let mut m = Matrix::identity(2);
        m[(0, 0)] = Scalar::i();
        let (rr, r) = rref_rank(&m);
        assert_eq!(r, 2);
        assert_eq!(rr, Matrix::identity(2));
    }

    #[test]
    fn solve_examples() {
        let b = vec![s(1), Scalar::i()];
        assert_eq!(solve_particular(&Matrix::identity(2), &b), Solve::Solution(b.clone()));
        assert_eq!(solve_particular(&Matrix::zeros(2, 2), &b), Solve::Inconsistent);
        let m = Matrix::from_i64(&[&[1, 1]]);
        assert_eq!(solve_particular(&m, &[s(2)]), Solve::Solution(vec![s(2), s(0)]));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.determinant(), s(1));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
