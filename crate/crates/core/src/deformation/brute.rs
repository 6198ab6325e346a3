//! Iso classes of the (framed) Deligne groupoid over algebras with `m³ = 0`,
//! computed at the chain level, and their comparison with ring maps out of
//! the Kuranishi ring.

use serde::Serialize;

use super::gauge::l_bracket;
use super::tensor::Tensor;
use super::DeformationError;
use crate::artin::GradedArtinAlgebra;
use crate::dgla::{Augmentation, Dgla};
use crate::linalg::{kernel_basis, split_complement, zero_vec, Matrix, QuotientCoords, Scalar, Subspace, Vector};

/// First-order classes, the quadratic lifting conditions on them, and the
/// fibre over a liftable class.
#[derive(Clone, Debug)]
pub struct BruteForce {
    pub order: usize,
    pub framed: bool,
    pub tangent_dim: usize,
    /// chain-level representatives, in `L¹⊗A₁ (⊕ g⊗A₁)` flattened
    pub tangent_basis: Vec<Vector>,
    tangent_coords: QuotientCoords,
    /// `quadrics[m][p][q]`: component `m` of `½[v_p, v_q]` modulo `d(L¹⊗A₂)`
    pub quadrics: Vec<Vec<Vec<Scalar>>>,
    pub fiber_dim: usize,
    fiber_coords: Option<QuotientCoords>,
    /// gauge stabilizers are trivial, so classes form a set over the tangent space
    pub stabilizers_trivial: bool,
}

impl BruteForce {
    pub fn tangent_class(&self, v: &[Scalar]) -> Option<Vector> {
        self.tangent_coords.coords(v)
    }

    pub fn fiber_class(&self, v: &[Scalar]) -> Option<Vector> {
        self.fiber_coords.as_ref()?.coords(v)
    }
}

/// `v ∈ L^i ⊗ Gr^k` flattened as `x·dim Gr^k + α` → tensor over `a`.
pub fn unflatten(a: &GradedArtinAlgebra, rows: usize, k: usize, v: &[Scalar]) -> Tensor {
    let dk = a.dim(k);
    let mut t = Tensor::zero(rows, a);
    for alpha in 0..dk {
        let col = t.col_mut(k, alpha);
        for x in 0..rows {
            col[x] = v[x * dk + alpha].clone();
        }
    }
    t
}

pub fn flatten(t: &Tensor, k: usize) -> Vector {
    let cols = t.columns(k);
    let dk = cols.len();
    let mut out = zero_vec(t.rows() * dk);
    for (alpha, c) in cols.iter().enumerate() {
        for x in 0..t.rows() {
            out[x * dk + alpha] = c[x].clone();
        }
    }
    out
}

/// `(−d ⊗ 1, ε ⊗ 1)` on `L⁰ ⊗ Gr^k`, and the cocycle space `Z¹⊗Gr^k (⊕ g⊗Gr^k)`.
fn chain_data(l: &Dgla, aug: Option<&Augmentation>, dk: usize) -> (Matrix, Subspace) {
    let id = Matrix::identity(dk);
    let minus_d = l.d(0).kron(&id).neg();
    let gauge = match aug {
        Some(g) => minus_d.vstack(&g.eps().kron(&id)),
        None => minus_d,
    };
    let z1 = kernel_basis(&l.d(1).kron(&id));
    let z = match aug {
        Some(g) => {
            let gd = g.g_dim() * dk;
            let mut vs: Vec<Vector> = z1
                .basis_vectors()
                .into_iter()
                .map(|mut v| {
                    v.extend(zero_vec(gd));
                    v
                })
                .collect();
            for j in 0..gd {
                let mut v = zero_vec(l.dim(1) * dk + gd);
                v[l.dim(1) * dk + j] = Scalar::one();
                vs.push(v);
            }
            Subspace::span(l.dim(1) * dk + gd, &vs)
        }
        None => z1,
    };
    (gauge, z)
}

pub fn brute_force_iso_classes(
    l: &Dgla,
    aug: Option<&Augmentation>,
    a: &GradedArtinAlgebra,
) -> Result<BruteForce, DeformationError> {
    let n = a.truncation_order();
    if n > 2 {
        return Err(DeformationError::BruteOrder(n));
    }
    let d1 = a.dim(1);
    let (gauge1, z1) = chain_data(l, aug, d1);
    let g1 = Subspace::column_space(&gauge1);
    let comp = split_complement(&g1, &z1).expect("gauge directions are cocycles");
    let tangent_basis = comp.basis_vectors();
    let tangent_coords = QuotientCoords::new(comp.basis(), &g1);
    let l1 = l.dim(1) * d1;
    let mut quadrics = Vec::new();
    let mut fiber_dim = 0;
    let mut fiber_coords = None;
    if n == 2 {
        let d2 = a.dim(2);
        let b2 = if l.top_degree() >= 2 {
            Subspace::column_space(&l.d(1).kron(&Matrix::identity(d2)))
        } else {
            Subspace::zero(0)
        };
        let q2 = split_complement(&b2, &Subspace::full(b2.ambient_dim())).unwrap();
        let qc = QuotientCoords::new(q2.basis(), &b2);
        let vs: Vec<Tensor> = tangent_basis.iter().map(|v| unflatten(a, l.dim(1), 1, &v[..l1])).collect();
        let t = vs.len();
        quadrics = vec![vec![vec![Scalar::zero(); t]; t]; q2.dim()];
        let half = Scalar::frac(1, 2);
        for p in 0..t {
            for q in p..t {
                let br = l_bracket(l, a, 1, &vs[p], 1, &vs[q], );
                let flat = flatten(&br, 2);
                let c = qc.coords(&flat).expect("complement spans the quotient");
                for (m, x) in c.into_iter().enumerate() {
                    let v = &x * &half;
                    quadrics[m][p][q] = v.clone();
                    quadrics[m][q][p] = v;
                }
            }
        }
        let (gauge2, z2) = chain_data(l, aug, d2);
        let g2 = Subspace::column_space(&gauge2);
        let fc = split_complement(&g2, &z2).unwrap();
        fiber_dim = fc.dim();
        fiber_coords = Some(QuotientCoords::new(fc.basis(), &g2));
    }
    let h0_zero = l.cocycles(0).is_zero();
    let stabilizers_trivial = h0_zero || aug.is_some_and(|g| g.image_of_h0(l).dim() == l.cocycles(0).dim());
    Ok(BruteForce {
        order: n,
        framed: aug.is_some(),
        tangent_dim: tangent_basis.len(),
        tangent_basis,
        tangent_coords,
        quadrics,
        fiber_dim,
        fiber_coords,
        stabilizers_trivial,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorComparison {
    pub hom_tangent_dim: usize,
    pub brute_tangent_dim: usize,
    pub tangent_iso: bool,
    pub quadrics_match: bool,
    pub hom_fiber_dim: usize,
    pub brute_fiber_dim: usize,
    pub fiber_map_iso: bool,
}

impl FunctorComparison {
    pub fn passed(&self) -> bool {
        self.tangent_iso && self.quadrics_match && self.fiber_map_iso && self.hom_fiber_dim == self.brute_fiber_dim
    }
}

fn sym_flat(m: &[Vec<Scalar>]) -> Vector {
    let t = m.len();
    let mut out = Vec::with_capacity(t * (t + 1) / 2);
    for p in 0..t {
        for q in p..t {
            out.push(m[p][q].clone());
        }
    }
    out
}

/// Compares `Hom(ring, A)` with the brute-force classes. `gens` lists the
/// chain-level meaning of each ring generator: `(L¹ vector, g vector)`, the
/// second part empty when unframed.
pub fn compare_with_ring(
    l: &Dgla,
    aug: Option<&Augmentation>,
    ring: &GradedArtinAlgebra,
    gens: &[(Vector, Vector)],
    a: &GradedArtinAlgebra,
) -> Result<FunctorComparison, DeformationError> {
    let bf = brute_force_iso_classes(l, aug, a)?;
    let pres = ring.presentation().ok_or(DeformationError::Artin(crate::artin::ArtinError::NoPresentation))?;
    let ng = gens.len();
    let d1 = a.dim(1);
    let g_dim = aug.map_or(0, Augmentation::g_dim);
    let embed = |x: &Vector, y: &Vector, k: usize, alpha: usize| -> Vector {
        let dk = a.dim(k);
        let mut v = zero_vec(l.dim(1) * dk + if aug.is_some() { g_dim * dk } else { 0 });
        for (i, c) in x.iter().enumerate() {
            v[i * dk + alpha] = c.clone();
        }
        for (j, c) in y.iter().enumerate() {
            v[l.dim(1) * dk + j * dk + alpha] = c.clone();
        }
        v
    };
    let hom_tangent_dim = ng * d1;
    let mut tcols = Vec::with_capacity(hom_tangent_dim);
    for (x, y) in gens {
        for alpha in 0..d1 {
            match bf.tangent_class(&embed(x, y, 1, alpha)) {
                Some(c) => tcols.push(c),
                None => tcols.push(zero_vec(bf.tangent_dim)),
            }
        }
    }
    let tm = Matrix::from_cols(&tcols, bf.tangent_dim);
    let tangent_iso = tm.rows() == tm.cols() && tm.rank() == tm.rows();
    let mut quadrics_match = true;
    let mut fiber_map_iso = true;
    let mut hom_fiber_dim = 0;
    if a.truncation_order() == 2 {
        let d2 = a.dim(2);
        let pulled: Vec<Vector> = bf
            .quadrics
            .iter()
            .map(|s| {
                let sm = Matrix::from_rows(s, bf.tangent_dim);
                let p = tm.transpose().mul(&sm).mul(&tm);
                sym_flat(&p.row_vectors())
            })
            .collect();
        let mut ring_q: Vec<Vector> = Vec::new();
        if ring.truncation_order() >= 2 {
            let monos = pres.monomials(2).to_vec();
            for g in pres.ideal_in_degree(2).basis_vectors() {
                for gamma in 0..d2 {
                    let mut m = vec![vec![Scalar::zero(); hom_tangent_dim]; hom_tangent_dim];
                    for (mi, coef) in g.iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let (i, j) = (monos[mi][0], monos[mi][1]);
                        for alpha in 0..d1 {
                            for beta in 0..d1 {
                                let prod = a.basis_product(1, alpha, 1, beta);
                                let Some((_, c)) = prod.iter().find(|(g2, _)| *g2 == gamma) else { continue };
                                let (r, s) = (i * d1 + alpha, j * d1 + beta);
                                if i == j {
                                    m[r][s] += coef * c;
                                } else {
                                    let h = coef * c * Scalar::frac(1, 2);
                                    m[r][s] += &h;
                                    m[s][r] += &h;
                                }
                            }
                        }
                    }
                    ring_q.push(sym_flat(&m));
                }
            }
        }
        let len = hom_tangent_dim * (hom_tangent_dim + 1) / 2;
        quadrics_match = tangent_iso && Subspace::span(len, &pulled) == Subspace::span(len, &ring_q);
        hom_fiber_dim = ng * d2;
        let mut fcols = Vec::with_capacity(hom_fiber_dim);
        for (x, y) in gens {
            for gamma in 0..d2 {
                fcols.push(bf.fiber_class(&embed(x, y, 2, gamma)).unwrap_or_else(|| zero_vec(bf.fiber_dim)));
            }
        }
        let fm = Matrix::from_cols(&fcols, bf.fiber_dim);
        fiber_map_iso = fm.rows() == fm.cols() && fm.rank() == fm.rows();
    }
    Ok(FunctorComparison {
        hom_tangent_dim,
        brute_tangent_dim: bf.tangent_dim,
        tangent_iso,
        quadrics_match,
        hom_fiber_dim,
        brute_fiber_dim: bf.fiber_dim,
        fiber_map_iso,
    })
}

/// [`compare_with_ring`] for the Kuranishi ring (unframed).
pub fn compare_kuranishi(l: &Dgla, kur: &super::Kuranishi, a: &GradedArtinAlgebra) -> Result<FunctorComparison, DeformationError> {
    let gens: Vec<(Vector, Vector)> = kur.h1_basis.iter().map(|e| (e.clone(), Vec::new())).collect();
    compare_with_ring(l, None, &kur.ring, &gens, a)
}

/// [`compare_with_ring`] for the framed product `S₁ ⊗ S₂`.
pub fn compare_product(
    l: &Dgla,
    aug: &Augmentation,
    prod: &super::GmProduct,
    a: &GradedArtinAlgebra,
) -> Result<FunctorComparison, DeformationError> {
    let mut gens: Vec<(Vector, Vector)> =
        prod.transversal.basis_vectors().into_iter().map(|t| (zero_vec(l.dim(1)), t)).collect();
    gens.extend(prod.kuranishi.h1_basis.iter().map(|e| (e.clone(), zero_vec(aug.g_dim()))));
    compare_with_ring(l, Some(aug), &prod.algebra, &gens, a)
}
