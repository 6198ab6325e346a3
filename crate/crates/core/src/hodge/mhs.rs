//! Triply filtered spaces, pure and mixed Hodge structure checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::filtration::{Direction, Filtration};
use super::HodgeError;
use crate::artin::HodgeType;
use crate::linalg::{split_complement, Matrix, QuotientCoords, Subspace, Vector};

/// `(V, W, F, G)` with `W` increasing and `F`, `G` decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TripleRepr", into = "TripleRepr")]
pub struct TripleFiltered {
    dim: usize,
    w: Filtration,
    f: Filtration,
    g: Filtration,
}

#[derive(Serialize, Deserialize)]
struct TripleRepr {
    dim: usize,
    w: Filtration,
    f: Filtration,
    g: Filtration,
}

impl TryFrom<TripleRepr> for TripleFiltered {
    type Error = HodgeError;
    fn try_from(r: TripleRepr) -> Result<Self, HodgeError> {
        TripleFiltered::new(r.dim, r.w, r.f, r.g)
    }
}

impl From<TripleFiltered> for TripleRepr {
    fn from(t: TripleFiltered) -> Self {
        TripleRepr { dim: t.dim, w: t.w, f: t.f, g: t.g }
    }
}

impl TripleFiltered {
    pub fn new(dim: usize, w: Filtration, f: Filtration, g: Filtration) -> Result<Self, HodgeError> {
        for (x, dir) in [(&w, Direction::Increasing), (&f, Direction::Decreasing), (&g, Direction::Decreasing)] {
            if x.dim() != dim {
                return Err(HodgeError::DimensionMismatch { expected: dim, found: x.dim() });
            }
            if x.direction() != dir {
                return Err(HodgeError::WrongDirection);
            }
        }
        Ok(TripleFiltered { dim, w, f, g })
    }

    /// The split structure on a basis of vectors of pure type `(p, q)`,
    /// of weight `p + q`.
    pub fn split(dim: usize, typed: &[(HodgeType, Vector)]) -> Self {
        let by = |sel: fn(&HodgeType) -> i32, dir| {
            let vs: Vec<(i32, Vector)> = typed.iter().map(|(t, v)| (sel(t), v.clone())).collect();
            Filtration::from_weighted(dim, dir, &vs)
        };
        TripleFiltered {
            dim,
            w: by(|t| t.0 + t.1, Direction::Increasing),
            f: by(|t| t.0, Direction::Decreasing),
            g: by(|t| t.1, Direction::Decreasing),
        }
    }

    /// Split structure on coordinate vectors with the given types.
    pub fn split_on_basis(types: &[HodgeType]) -> Self {
        let n = types.len();
        let typed: Vec<(HodgeType, Vector)> = types.iter().enumerate().map(|(i, &t)| (t, crate::linalg::unit_vec(n, i))).collect();
        TripleFiltered::split(n, &typed)
    }

    /// `W` trivial at `w`.
    pub fn pure(w: i32, f: Filtration, g: Filtration) -> Result<Self, HodgeError> {
        let dim = f.dim();
        TripleFiltered::new(dim, Filtration::trivial(dim, Direction::Increasing, w), f, g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn w(&self) -> &Filtration {
        &self.w
    }

    pub fn f(&self) -> &Filtration {
        &self.f
    }

    pub fn g(&self) -> &Filtration {
        &self.g
    }

    pub fn with_g(&self, g: Filtration) -> Result<Self, HodgeError> {
        TripleFiltered::new(self.dim, self.w.clone(), self.f.clone(), g)
    }

    /// Induced filtrations on `B/A` in the coordinates of the greedy
    /// complement of `A` in `B`.
    pub fn subquotient(&self, a: &Subspace, b: &Subspace) -> Result<TripleFiltered, HodgeError> {
        let c = split_complement(a, b).map_err(|_| HodgeError::NotContained)?;
        let coords = QuotientCoords::new(c.basis(), a);
        let d = c.dim();
        Ok(TripleFiltered {
            dim: d,
            w: self.w.subquotient(b, &coords, d),
            f: self.f.subquotient(b, &coords, d),
            g: self.g.subquotient(b, &coords, d),
        })
    }

    pub fn restrict(&self, sub: &Subspace) -> Result<TripleFiltered, HodgeError> {
        self.subquotient(&Subspace::zero(self.dim), sub)
    }

    /// Applies an invertible linear map to all three filtrations.
    pub fn transport(&self, m: &Matrix) -> TripleFiltered {
        TripleFiltered { dim: m.rows(), w: self.w.image(m), f: self.f.image(m), g: self.g.image(m) }
    }

    /// `Gr^W_k` with the induced `F`, `G`, for every `k` where it is nonzero.
    pub fn graded_pieces(&self) -> Vec<GradedPiece> {
        let (lo, hi) = self.w.bounds();
        let mut out = Vec::new();
        for k in lo..=hi {
            let a = self.w.get(k - 1);
            let b = self.w.get(k);
            if a.dim() == b.dim() {
                continue;
            }
            let sq = self.subquotient(&a, &b).expect("W is nested");
            out.push(GradedPiece { weight: k, f: sq.f, g: sq.g });
        }
        out
    }

    pub fn direct_sum(&self, o: &TripleFiltered) -> TripleFiltered {
        let n = self.dim + o.dim;
        let emb = |t: &TripleFiltered, off: usize| {
            let mut m = Matrix::zeros(n, t.dim);
            for i in 0..t.dim {
                m.set_col(i, &crate::linalg::unit_vec(n, off + i));
            }
            m
        };
        let (ea, eb) = (emb(self, 0), emb(o, self.dim));
        let sum = |x: &Filtration, y: &Filtration| {
            let (a, b) = x.bounds();
            let (c, d) = y.bounds();
            let lo = a.min(c) - 1;
            let hi = b.max(d);
            let steps = (lo..=hi).map(|p| x.get(p).image(&ea).sum(&y.get(p).image(&eb))).collect();
            Filtration::new(n, x.direction(), lo, steps).expect("sums of nested flags are nested")
        };
        TripleFiltered { dim: n, w: sum(&self.w, &o.w), f: sum(&self.f, &o.f), g: sum(&self.g, &o.g) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub weight: i32,
    pub f: Filtration,
    pub g: Filtration,
}

/// Hermitian form `S(x, y) = x^* S y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Matrix", into = "Matrix")]
pub struct PolarizationForm {
    matrix: Matrix,
}

impl TryFrom<Matrix> for PolarizationForm {
    type Error = HodgeError;
    fn try_from(m: Matrix) -> Result<Self, HodgeError> {
        PolarizationForm::new(m)
    }
}

impl From<PolarizationForm> for Matrix {
    fn from(p: PolarizationForm) -> Matrix {
        p.matrix
    }
}

impl PolarizationForm {
    pub fn new(matrix: Matrix) -> Result<Self, HodgeError> {
        if !matrix.is_square() || matrix.conj_transpose() != matrix {
            return Err(HodgeError::NotHermitian);
        }
        if matrix.rank() != matrix.rows() {
            return Err(HodgeError::Degenerate);
        }
        Ok(PolarizationForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Gram matrix `B^* S B'` for bases given as columns.
    pub fn gram(&self, b: &Matrix, b2: &Matrix) -> Matrix {
        b.conj_transpose().mul(&self.matrix).mul(b2)
    }
}

/// Sylvester's criterion on a hermitian matrix.
pub fn is_positive_definite(m: &Matrix) -> bool {
    (1..=m.rows()).all(|k| m.block(0, k, 0, k).determinant().real_sign() > 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarizationReport {
    pub orthogonal: bool,
    pub definite: bool,
    /// type where orthogonality or the sign condition fails
    pub witness: Option<HodgeType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureHsReport {
    pub weight: i32,
    /// `(p, q, dim H^{p,q})` for the nonzero pieces
    pub hodge_numbers: Vec<(i32, i32, usize)>,
    pub decomposes: bool,
    pub polarization: Option<PolarizationReport>,
}

impl PureHsReport {
    pub fn passed(&self) -> bool {
        self.decomposes && self.polarization.as_ref().is_none_or(|p| p.orthogonal && p.definite)
    }
}

/// Hodge pieces `F^p ∩ G^{w−p}`.
pub fn hodge_pieces(f: &Filtration, g: &Filtration, w: i32) -> Vec<(HodgeType, Subspace)> {
    let (flo, fhi) = f.bounds();
    let (glo, ghi) = g.bounds();
    let lo = (flo - 1).min(w - ghi);
    let hi = fhi.max(w - glo + 1);
    (lo..=hi)
        .map(|p| ((p, w - p), f.get(p).intersect(&g.get(w - p))))
        .filter(|(_, s)| !s.is_zero())
        .collect()
}

pub fn check_pure_hs(f: &Filtration, g: &Filtration, w: i32, s: Option<&PolarizationForm>) -> PureHsReport {
    let dim = f.dim();
    let pieces = hodge_pieces(f, g, w);
    let total: usize = pieces.iter().map(|(_, h)| h.dim()).sum();
    let span = pieces.iter().fold(Subspace::zero(dim), |acc, (_, h)| acc.sum(h));
    let decomposes = total == dim && span.dim() == dim;
    let polarization = s.map(|form| {
        let mut rep = PolarizationReport { orthogonal: true, definite: true, witness: None };
        let bases: Vec<Matrix> = pieces.iter().map(|(_, h)| h.basis().transpose()).collect();
        for (i, ((p, q), _)) in pieces.iter().enumerate() {
            for j in 0..i {
                if !form.gram(&bases[i], &bases[j]).is_zero() {
                    rep.orthogonal = false;
                    rep.witness.get_or_insert((*p, *q));
                }
            }
            let sign = crate::dgla::sign((p + w).rem_euclid(2) as usize);
            if !is_positive_definite(&form.gram(&bases[i], &bases[i]).scale(&sign)) {
                rep.definite = false;
                rep.witness.get_or_insert((*p, *q));
            }
        }
        rep
    });
    PureHsReport {
        weight: w,
        hodge_numbers: pieces.iter().map(|((p, q), h)| (*p, *q, h.dim())).collect(),
        decomposes,
        polarization,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MhsReport {
    pub graded: Vec<PureHsReport>,
}

impl MhsReport {
    pub fn passed(&self) -> bool {
        self.graded.iter().all(PureHsReport::passed)
    }

    /// First weight whose graded piece is not a Hodge structure.
    pub fn failing_weight(&self) -> Option<i32> {
        self.graded.iter().find(|r| !r.passed()).map(|r| r.weight)
    }
}

pub fn check_mhs(v: &TripleFiltered) -> MhsReport {
    check_mhs_polarized(v, &BTreeMap::new())
}

/// [`check_mhs`] with polarizations of some graded pieces, in the
/// coordinates of [`TripleFiltered::graded_pieces`].
pub fn check_mhs_polarized(v: &TripleFiltered, forms: &BTreeMap<i32, PolarizationForm>) -> MhsReport {
    let graded = v.graded_pieces().iter().map(|gp| check_pure_hs(&gp.f, &gp.g, gp.weight, forms.get(&gp.weight))).collect();
    MhsReport { graded }
}

/// Checks `u(W_k) ⊆ W_k` and `(u − 1)(W_k) ⊆ W_{k−1}`.
pub fn check_unipotent(v: &TripleFiltered, u: &Matrix) -> Result<(), HodgeError> {
    if u.rows() != v.dim || u.cols() != v.dim {
        return Err(HodgeError::DimensionMismatch { expected: v.dim, found: u.rows() });
    }
    let n = u.sub(&Matrix::identity(v.dim));
    let (lo, hi) = v.w.bounds();
    for k in lo..=hi {
        if !v.w.get(k - 1).contains_subspace(&v.w.get(k).image(&n)) {
            return Err(HodgeError::NotUnipotent(k));
        }
    }
    Ok(())
}

/// `(V, W, F, u(G))` for `u − 1 ∈ W_{−1} End V`.
pub fn twist(v: &TripleFiltered, u: &Matrix) -> Result<TripleFiltered, HodgeError> {
    check_unipotent(v, u)?;
    v.with_g(v.g.image(u))
}

/// Literal comparison of the graded pieces of two structures with the same `W`.
pub fn same_graded(a: &TripleFiltered, b: &TripleFiltered) -> bool {
    a.w.same_as(&b.w) && {
        let (x, y) = (a.graded_pieces(), b.graded_pieces());
        x.len() == y.len() && x.iter().zip(&y).all(|(p, q)| p.weight == q.weight && p.f.same_as(&q.f) && p.g.same_as(&q.g))
    }
}

/// The dual structure in the dual basis.
pub fn dual(v: &TripleFiltered) -> TripleFiltered {
    TripleFiltered { dim: v.dim, w: v.w.dual(), f: v.f.dual(), g: v.g.dual() }
}

/// Tensor product with Kronecker indexing.
pub fn tensor(a: &TripleFiltered, b: &TripleFiltered) -> TripleFiltered {
    TripleFiltered { dim: a.dim * b.dim, w: a.w.tensor(&b.w), f: a.f.tensor(&b.f), g: a.g.tensor(&b.g) }
}

/// `Sym^k` in monomial coordinates.
pub fn sym_power(v: &TripleFiltered, k: usize) -> TripleFiltered {
    let w = v.w.sym_power(k);
    TripleFiltered { dim: w.dim(), w, f: v.f.sym_power(k), g: v.g.sym_power(k) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedByReport {
    /// per nonzero graded piece of `U`: its index and MHS check
    pub pieces: Vec<(i32, MhsReport)>,
    pub hypothesis: bool,
    pub conclusion: MhsReport,
    pub conclusion_holds: bool,
}

impl GradedByReport {
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.conclusion_holds
    }
}

/// If every `Gr^U_r` with induced filtrations is an MHS, so is `V`.
pub fn graded_by_check(v: &TripleFiltered, u: &Filtration) -> Result<GradedByReport, HodgeError> {
    if u.dim() != v.dim {
        return Err(HodgeError::DimensionMismatch { expected: v.dim, found: u.dim() });
    }
    let (lo, hi) = u.bounds();
    let mut pieces = Vec::new();
    for r in lo - 1..=hi {
        let (a, b) = match u.direction() {
            Direction::Decreasing => (u.get(r + 1), u.get(r)),
            Direction::Increasing => (u.get(r - 1), u.get(r)),
        };
        if a.dim() == b.dim() {
            continue;
        }
        pieces.push((r, check_mhs(&v.subquotient(&a, &b)?)));
    }
    let hypothesis = pieces.iter().all(|(_, r)| r.passed());
    let conclusion = check_mhs(v);
    let conclusion_holds = conclusion.passed();
    Ok(GradedByReport { pieces, hypothesis, conclusion, conclusion_holds })
}
