#![allow(dead_code)]

use std::collections::BTreeMap;

use gm_deform::artin::{quotient_sym, GradedArtinAlgebra, HodgeType};
use gm_deform::dgla::{gl_bracket, Augmentation, BracketEntry, Dgla};
use gm_deform::linalg::{unit_vec, BilinearMap, Matrix, Scalar, Subspace, Vector};
use gm_deform::group_cohomology::{AdModule, Presentation, Representation, Word};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Rand = ChaCha8Rng;

pub fn rng(seed: u64) -> Rand {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn small(r: &mut Rand) -> Scalar {
    match r.gen_range(0..8) {
        0 => Scalar::gaussian(r.gen_range(-2..=2), r.gen_range(-2..=2)),
        1 => Scalar::frac(r.gen_range(-3..=3), r.gen_range(1..=3)),
        _ => s(r.gen_range(-2..=2)),
    }
}

pub fn rand_vec(r: &mut Rand, n: usize) -> Vector {
    (0..n).map(|_| small(r)).collect()
}

pub fn rand_matrix(r: &mut Rand, rows: usize, cols: usize) -> Matrix {
    Matrix::from_vec(rows, cols, (0..rows * cols).map(|_| small(r)).collect())
}

pub fn free(vars: usize, n: usize) -> GradedArtinAlgebra {
    quotient_sym(vars, &BTreeMap::new(), n, None).unwrap()
}

/// A commutative graded algebra given by its differentials and products.
pub struct Cdga {
    pub dims: Vec<usize>,
    pub d1: Vec<Matrix>,
    pub d2: Option<Vec<Matrix>>,
    pub products: BTreeMap<(usize, usize), BilinearMap>,
    pub types: Option<Vec<Vec<HodgeType>>>,
}

/// Unit first in degree 0; `a¹ · a¹` is given by `top` on pairs `(a, b)`.
fn products(dims: &[usize], top: &[((usize, usize), i64)]) -> BTreeMap<(usize, usize), BilinearMap> {
    let mut out = BTreeMap::new();
    for i in 0..dims.len() {
        for j in 0..dims.len() - i {
            let mut t = BilinearMap::zero(dims[i], dims[j], dims[i + j]);
            if i == 0 {
                for b in 0..dims[j] {
                    t.set(0, b, &unit_vec(dims[j], b));
                }
            }
            if j == 0 {
                for a in 0..dims[i] {
                    t.set(a, 0, &unit_vec(dims[i], a));
                }
            }
            if i == 1 && j == 1 {
                for &((a, b), c) in top {
                    t.set(a, b, &[s(c)]);
                    t.set(b, a, &[s(-c)]);
                }
            }
            out.insert((i, j), t);
        }
    }
    out
}

/// `A⁰ = ⟨1, f⟩`, `A¹ = ⟨x, y, a, b⟩`, `A² = ⟨c⟩` with `∂f = a`, `∂̄f = b`,
/// `∂b = c`, `∂̄a = −c` and `xy = c`.
pub fn toy_cdga() -> Cdga {
    let dims = vec![2, 4, 1];
    Cdga {
        d1: vec![Matrix::from_i64(&[&[0, 0], &[0, 0], &[0, 1], &[0, 0]]), Matrix::from_i64(&[&[0, 0, 0, 1]])],
        d2: Some(vec![Matrix::from_i64(&[&[0, 0], &[0, 0], &[0, 0], &[0, 1]]), Matrix::from_i64(&[&[0, 0, -1, 0]])]),
        products: products(&dims, &[((0, 1), 1)]),
        types: Some(vec![vec![(0, 0), (0, 0)], vec![(1, 0), (0, 1), (1, 0), (0, 1)], vec![(1, 1)]]),
        dims,
    }
}

/// Cohomology of a torus: `Λ(x, y)` with zero differential.
pub fn torus_cdga() -> Cdga {
    let dims = vec![1, 2, 1];
    Cdga {
        d1: vec![Matrix::zeros(2, 1), Matrix::zeros(1, 2)],
        d2: Some(vec![Matrix::zeros(2, 1), Matrix::zeros(1, 2)]),
        products: products(&dims, &[((0, 1), 1)]),
        types: Some(vec![vec![(0, 0)], vec![(1, 0), (0, 1)], vec![(1, 1)]]),
        dims,
    }
}

pub fn lie(dim: usize, table: &[(usize, usize, &[i64])]) -> BilinearMap {
    let mut t = BilinearMap::zero(dim, dim, dim);
    for &(a, b, v) in table {
        let v: Vector = v.iter().map(|&x| s(x)).collect();
        let neg: Vector = v.iter().map(|x| -x.clone()).collect();
        t.set(a, b, &v);
        t.set(b, a, &neg);
    }
    t
}

pub fn aff2() -> BilinearMap {
    lie(2, &[(0, 1, &[0, 1])])
}

pub fn sl2() -> BilinearMap {
    // e, f, h
    lie(3, &[(0, 1, &[0, 0, 1]), (2, 0, &[2, 0, 0]), (2, 1, &[0, -2, 0])])
}

pub fn heisenberg() -> BilinearMap {
    lie(3, &[(0, 1, &[0, 0, 1])])
}

pub fn abelian_lie(dim: usize) -> BilinearMap {
    BilinearMap::zero(dim, dim, dim)
}

pub fn tensor(c: &Cdga, g: &BilinearMap, typed: bool) -> Dgla {
    let (d2, types) = if typed { (c.d2.clone(), c.types.clone()) } else { (None, None) };
    Dgla::tensor_lie(c.dims.clone(), c.d1.clone(), d2, &c.products, types, g).unwrap()
}

pub fn toy() -> Dgla {
    tensor(&toy_cdga(), &aff2(), true)
}

/// `e ↦ E₀₀`, `h ↦ E₀₁` on the constants.
pub fn toy_action(e: &Dgla) -> Augmentation {
    let mut eps = Matrix::zeros(4, 4);
    eps[(0, 0)] = s(1);
    eps[(1, 1)] = s(1);
    Augmentation::new(e, gl_bracket(2), eps).unwrap()
}

/// `L¹ = V`, `L² = W`, `[v_a, v_b] = q(a, b)` with symmetric `q`.
pub fn formal_cone(h1: usize, h2: usize, q: &[Vec<Vector>], types: Option<(Vec<HodgeType>, Vec<HodgeType>)>) -> Dgla {
    let mut br = Vec::new();
    for a in 0..h1 {
        for b in a..h1 {
            br.push(BracketEntry { i: 1, a, j: 1, b, value: q[a][b].clone() });
        }
    }
    let z = || vec![Matrix::zeros(h1, 0), Matrix::zeros(h2, h1)];
    let bigrading = types.map(|(t1, t2)| vec![vec![], t1, t2]);
    let d2 = bigrading.as_ref().map(|_| z());
    Dgla::new(vec![0, h1, h2], z(), d2, &br, bigrading).unwrap()
}

pub fn random_symmetric(r: &mut Rand, h1: usize, h2: usize) -> Vec<Vec<Vector>> {
    let mut q = vec![vec![Vec::new(); h1]; h1];
    for a in 0..h1 {
        for b in a..h1 {
            let v = if r.gen_bool(0.5) { rand_vec(r, h2) } else { vec![s(0); h2] };
            q[a][b] = v.clone();
            q[b][a] = v;
        }
    }
    q
}

/// Abelian complex `L⁰ → L¹ → L²` with random differentials.
pub fn random_complex(r: &mut Rand, dims: [usize; 3]) -> Dgla {
    let d0 = rand_matrix(r, dims[1], dims[0]);
    let ann = Subspace::column_space(&d0).annihilator();
    let k = ann.dim();
    let d1 = if k == 0 { Matrix::zeros(dims[2], dims[1]) } else { rand_matrix(r, dims[2], k).mul(ann.basis()) };
    Dgla::new(dims.to_vec(), vec![d0, d1], None, &[], None).unwrap()
}

/// Random element of `m` in a tensor with `rows` rows.
pub fn random_tensor(r: &mut Rand, rows: usize, a: &GradedArtinAlgebra, density: f64) -> gm_deform::deformation::Tensor {
    let mut t = gm_deform::deformation::Tensor::zero(rows, a);
    for k in 1..=a.truncation_order() {
        for b in 0..a.dim(k) {
            if r.gen_bool(density) {
                *t.col_mut(k, b) = rand_vec(r, rows);
            }
        }
    }
    t
}

pub fn pow(m: &Matrix, k: usize) -> Matrix {
    (0..k).fold(Matrix::identity(m.rows()), |acc, _| acc.mul(m))
}

pub fn random_invertible(r: &mut Rand, n: usize) -> Matrix {
    let diag = [s(1), s(-1), s(2), Scalar::i(), Scalar::frac(1, 2)];
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag.choose(r).unwrap().clone();
        for j in i + 1..n {
            m[(i, j)] = small(r);
        }
    }
    let p = random_permutation(r, n);
    p.mul(&m).mul(&p.transpose())
}

pub fn random_permutation(r: &mut Rand, n: usize) -> Matrix {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(r);
    let mut p = Matrix::zeros(n, n);
    for (i, &j) in idx.iter().enumerate() {
        p[(i, j)] = s(1);
    }
    p
}

pub fn random_reduced_word(r: &mut Rand, gens: usize, len: usize) -> Vec<i32> {
    let mut w: Vec<i32> = Vec::new();
    while w.len() < len {
        let l = r.gen_range(1..=gens as i32) * if r.gen_bool(0.5) { 1 } else { -1 };
        if w.last() != Some(&-l) {
            w.push(l);
        }
    }
    w
}

pub fn order_of(m: &Matrix) -> usize {
    let id = Matrix::identity(m.rows());
    let mut cur = m.clone();
    let mut k = 1;
    while cur != id {
        cur = cur.mul(m);
        k += 1;
    }
    k
}

pub fn signed_permutation(r: &mut Rand, n: usize) -> Matrix {
    let mut p = random_permutation(r, n);
    for i in 0..n {
        if r.gen_bool(0.5) {
            for j in 0..n {
                p[(i, j)] = -p[(i, j)].clone();
            }
        }
    }
    p
}

/// A presentation with relations the random images satisfy.
pub fn random_pair(r: &mut Rand) -> (Presentation, Representation) {
    let gens = r.gen_range(1..=3);
    let n = r.gen_range(1..=3);
    let nrels = r.gen_range(0..=2);
    let finite = gens == 1 || r.gen_bool(0.5);
    let images: Vec<Matrix> = if finite {
        (0..gens).map(|_| signed_permutation(r, n)).collect()
    } else {
        let j = random_invertible(r, n);
        (0..gens).map(|_| pow(&j, r.gen_range(0..3))).collect()
    };
    let rep = Representation { images, lie_subalgebra: None };
    let p0 = Presentation::free(gens);
    let module = AdModule::new(&p0, &rep).unwrap();
    let mut rels = Vec::new();
    for _ in 0..nrels {
        let letters = if finite {
            let len = r.gen_range(1..=3);
            let w = random_reduced_word(r, gens, len);
            let k = order_of(&module.eval(&Word::new(&w).unwrap()));
            w.repeat(k)
        } else {
            let a = r.gen_range(1..=gens as i32);
            let b = (a % gens as i32) + 1;
            Word::commutator(a, b).letters().to_vec()
        };
        rels.push(Word::new(&letters).unwrap());
    }
    (Presentation::new(gens, rels).unwrap(), rep)
}
