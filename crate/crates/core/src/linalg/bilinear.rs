//! Bilinear maps `U × V → W` stored as sparse structure constants.

use super::scalar::Scalar;
use super::vector::{zero_vec, Vector};

pub type SparseVec = Vec<(usize, Scalar)>;

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> Vector {
    let mut out = zero_vec(n);
    for (i, c) in v {
        out[*i] += c;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    left: usize,
    right: usize,
    out: usize,
    table: Vec<Vec<SparseVec>>,
}

impl BilinearMap {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        BilinearMap { left, right, out, table: vec![vec![Vec::new(); right]; left] }
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn on_basis(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a][b]
    }

    pub fn on_basis_dense(&self, a: usize, b: usize) -> Vector {
        to_dense(&self.table[a][b], self.out)
    }

    pub fn set(&mut self, a: usize, b: usize, value: &[Scalar]) {
        assert_eq!(value.len(), self.out);
        self.table[a][b] = to_sparse(value);
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|r| r.iter().all(Vec::is_empty))
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.left);
        assert_eq!(y.len(), self.right);
        let mut out = zero_vec(self.out);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() || self.table[a][b].is_empty() {
                    continue;
                }
                let c = xa * yb;
                for (g, s) in &self.table[a][b] {
                    out[*g] += &c * s;
                }
            }
        }
        out
    }
}
