//! Universal Maurer–Cartan elements on a bigraded model with the `∂∂̄`
//! property, built by the `D'D''` recursion, together with the comparison
//! gauge between the two variants and the fibre mixed Hodge structures.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::artin::{quotient_sym, ArtinError, GradedArtinAlgebra, HodgeType, RingMap};
use crate::deformation::{gauge_act, l_bracket, mc_defect, DeformationError, GaugeElement, MCElement, Tensor};
use crate::dgla::{Augmentation, Dgla, DglaError, QuadraticMap};
use crate::hodge::{check_mhs, check_unipotent, same_graded, HodgeError, MhsReport, TripleFiltered};
use crate::linalg::{kernel_basis, zero_vec, LinearSolver, Matrix, Scalar, Subspace, Vector};

#[derive(Debug, Error)]
pub enum VmhsError {
    #[error("model has no double differential")]
    NoDoubleStructure,
    #[error("model has no bigrading")]
    NoBigrading,
    #[error("model fails its dgla identities")]
    InvalidDgla,
    #[error("∂∂̄ property fails in degree {degree}")]
    NotDdbar { degree: usize, witness: Vector },
    #[error("fibre action is not a Lie map")]
    BadAction,
    #[error("fibre action has the wrong dimension")]
    RepDimension,
    #[error("closed forms in degree one are not spanned by type-pure classes")]
    NotBigradedSplit,
    #[error("order {requested} exceeds the model order {available}")]
    OrderTooLarge { requested: usize, available: usize },
    #[error("β_{k} is not D'D''-exact")]
    BetaNotExact { k: usize },
    #[error("series lengths do not match")]
    SeriesMismatch,
    #[error(transparent)]
    Deformation(#[from] DeformationError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Artin(#[from] ArtinError),
    #[error(transparent)]
    Dgla(#[from] DglaError),
}

impl VmhsError {
    /// Failures of the model hypotheses rather than of the input format.
    pub fn is_hypothesis_failure(&self) -> bool {
        matches!(self, VmhsError::NotDdbar { .. } | VmhsError::NotBigradedSplit | VmhsError::BetaNotExact { .. } | VmhsError::InvalidDgla)
    }
}

/// A bigraded dgla `E` with `D = D' + D''`, the fibre `V` with Hodge types
/// and an action of `E⁰` on it, and the cone ring `Π` of its cohomology.
#[derive(Clone, Debug)]
pub struct FormalityModel {
    pub e: Dgla,
    pub v_types: Vec<HodgeType>,
    pub action: Option<Augmentation>,
    pub ring: GradedArtinAlgebra,
    /// `D'`- and `D''`-closed type-pure basis of degree-one cohomology
    pub eta: Vec<Vector>,
    pub eta_types: Vec<HodgeType>,
    pub obs: QuadraticMap,
    dd: Matrix,
    dd_solver: LinearSolver,
}

impl FormalityModel {
    pub fn new(e: Dgla, v_types: Vec<HodgeType>, action: Option<Augmentation>, n: usize) -> Result<Self, VmhsError> {
        if !e.has_double() {
            return Err(VmhsError::NoDoubleStructure);
        }
        if e.bigrading().is_none() {
            return Err(VmhsError::NoBigrading);
        }
        if !e.validate().passed() {
            return Err(VmhsError::InvalidDgla);
        }
        let dd = e.check_ddbar()?;
        if let Some((degree, witness)) = dd.witness {
            return Err(VmhsError::NotDdbar { degree, witness });
        }
        if let Some(g) = &action {
            if g.g_dim() != v_types.len() * v_types.len() {
                return Err(VmhsError::RepDimension);
            }
            if !g.check(&e).lie_map {
                return Err(VmhsError::BadAction);
            }
        }
        let d1 = e.d1(1);
        let d2 = e.d2(1).expect("double structure");
        let closed = kernel_basis(d1).intersect(&kernel_basis(d2));
        let mut by_type: BTreeMap<HodgeType, Vec<usize>> = BTreeMap::new();
        for idx in 0..e.dim(1) {
            by_type.entry(e.basis_type(1, idx).expect("bigrading")).or_default().push(idx);
        }
        let mut eta = Vec::new();
        let mut eta_types = Vec::new();
        for (t, idx) in &by_type {
            for v in closed.intersect(&Subspace::coordinate(e.dim(1), idx)).basis_vectors() {
                eta.push(v);
                eta_types.push(*t);
            }
        }
        if eta.len() != closed.dim() {
            return Err(VmhsError::NotBigradedSplit);
        }
        let coh = e.cohomology(None);
        let h2 = if e.top_degree() >= 2 { coh.dim(2) } else { 0 };
        let mut obs = QuadraticMap::zero(eta.len(), h2);
        if h2 > 0 {
            for a in 0..eta.len() {
                for b in 0..eta.len() {
                    obs.values[a][b] = coh.degree(2).class_coords(&e.bracket(1, &eta[a], 1, &eta[b])).expect("brackets of closed forms are closed");
                }
            }
        }
        let mut gens = BTreeMap::new();
        if n >= 2 && h2 > 0 {
            gens.insert(2, obs.quadrics());
        }
        let vt = eta_types.iter().map(|&(p, q)| (-p, -q)).collect();
        let ring = quotient_sym(eta.len(), &gens, n, Some(vt))?;
        let dd = if e.top_degree() >= 2 { d1.mul(e.d2(0).unwrap()) } else { Matrix::zeros(0, e.dim(0)) };
        let dd_solver = LinearSolver::new(&dd);
        Ok(FormalityModel { e, v_types, action, ring, eta, eta_types, obs, dd, dd_solver })
    }

    pub fn order(&self) -> usize {
        self.ring.truncation_order()
    }

    fn d_prime(&self, i: usize) -> &Matrix {
        self.e.d1(i)
    }

    fn d_second(&self, i: usize) -> &Matrix {
        self.e.d2(i).expect("double structure")
    }

    /// A particular solution of `D'D'' x = b` on `E⁰`.
    fn solve_dd(&self, b: &[Scalar]) -> Option<Vector> {
        if self.dd.rows() == 0 {
            return Some(zero_vec(self.e.dim(0)));
        }
        self.dd_solver.solve(b).into_option()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `α_k ∈ im D'`
    Primed,
    /// `α^v_k ∈ im D''`
    V,
}

/// `alphas[k − 1] = α_k` as tensors over the model ring (only the `Π_k`
/// component nonzero); `gammas[k − 2]` the potentials with `α_k = D'γ_k/c_k`
/// (`c₂ = 2`, else `1`) or `α^v_k = D''γ^v_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionSeries {
    pub variant: Variant,
    pub alphas: Vec<Tensor>,
    pub gammas: Vec<Tensor>,
}

impl ConnectionSeries {
    pub fn order(&self) -> usize {
        self.alphas.len()
    }

    pub fn sum(&self, m: &FormalityModel) -> Tensor {
        self.alphas.iter().fold(Tensor::zero(m.e.dim(1), &m.ring), |acc, a| acc.add(a))
    }

    /// The first `k` terms.
    pub fn truncated(&self, k: usize) -> ConnectionSeries {
        ConnectionSeries {
            variant: self.variant,
            alphas: self.alphas.iter().take(k).cloned().collect(),
            gammas: self.gammas.iter().take(k.saturating_sub(1)).cloned().collect(),
        }
    }
}

/// `α₁ = Σ ηᵢ ⊗ {ηᵢ}*`.
pub fn alpha_one(m: &FormalityModel) -> Tensor {
    let mut t = Tensor::zero(m.e.dim(1), &m.ring);
    if m.order() >= 1 {
        for (i, e) in m.eta.iter().enumerate() {
            *t.col_mut(1, i) = e.clone();
        }
    }
    t
}

fn check_order(m: &FormalityModel, n: usize) -> Result<(), VmhsError> {
    if n > m.order() {
        return Err(VmhsError::OrderTooLarge { requested: n, available: m.order() });
    }
    Ok(())
}

fn recursion(m: &FormalityModel, n: usize, variant: Variant) -> Result<ConnectionSeries, VmhsError> {
    check_order(m, n)?;
    let rows = m.e.dim(1);
    let mut alphas = vec![alpha_one(m)];
    let mut gammas = Vec::new();
    let half = Scalar::frac(1, 2);
    for k in 2..=n {
        let sum = alphas.iter().fold(Tensor::zero(rows, &m.ring), |acc, a| acc.add(a));
        let beta = l_bracket(&m.e, &m.ring, 1, &sum, 1, &sum).part(k).scale(&half);
        let mut gamma = Tensor::zero(m.e.dim(0), &m.ring);
        let mut alpha = Tensor::zero(rows, &m.ring);
        for b in 0..m.ring.dim(k) {
            let rhs = match variant {
                Variant::Primed => beta.col(k, b).clone(),
                Variant::V => crate::linalg::vec_scale(beta.col(k, b), &Scalar::from_int(-1)),
            };
            let x = m.solve_dd(&rhs).ok_or(VmhsError::BetaNotExact { k })?;
            let (a, g) = match variant {
                Variant::Primed if k == 2 => (m.d_prime(0).mul_vec(&x), crate::linalg::vec_scale(&x, &Scalar::from_int(2))),
                Variant::Primed => (m.d_prime(0).mul_vec(&x), x),
                Variant::V => (m.d_second(0).mul_vec(&x), x),
            };
            *alpha.col_mut(k, b) = a;
            *gamma.col_mut(k, b) = g;
        }
        alphas.push(alpha);
        gammas.push(gamma);
    }
    if n == 0 {
        alphas.clear();
    }
    Ok(ConnectionSeries { variant, alphas, gammas })
}

pub fn alpha_recursion(m: &FormalityModel, n: usize) -> Result<ConnectionSeries, VmhsError> {
    recursion(m, n, Variant::Primed)
}

pub fn alpha_v_recursion(m: &FormalityModel, n: usize) -> Result<ConnectionSeries, VmhsError> {
    recursion(m, n, Variant::V)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub order: usize,
    pub flat: bool,
    /// lowest `m`-degree `≤ order` where `Dα + ½[α, α]` is nonzero
    pub defect_degree: Option<usize>,
    /// `D α_k + ½[α, α]_k = 0` (with `D'` for the v-series), per `k = 1..=order`
    pub recursion: Vec<bool>,
}

pub fn flatness_check(m: &FormalityModel, c: &ConnectionSeries) -> Result<FlatnessReport, VmhsError> {
    let n = c.order();
    check_order(m, n)?;
    let sum = c.sum(m);
    let defect = mc_defect(&m.e, &m.ring, &MCElement::unframed(sum.clone()))?.truncate(n);
    let defect_degree = defect.lowest_degree();
    let half = l_bracket(&m.e, &m.ring, 1, &sum, 1, &sum).scale(&Scalar::frac(1, 2));
    let recursion = (1..=n)
        .map(|k| {
            let d = match (c.variant, k) {
                (Variant::V, k) if k >= 2 => m.d_prime(1),
                _ => m.e.d(1),
            };
            c.alphas[k - 1].part(k).map(d).add(&half.part(k)).is_zero()
        })
        .collect();
    Ok(FlatnessReport { order: n, flat: defect_degree.is_none(), defect_degree, recursion })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    pub variant: Variant,
    /// total types `(type in E¹) + (type in Π_k)` occurring in `α_k`
    pub types: Vec<(usize, Vec<HodgeType>)>,
    /// `α_k` is pure of type `(0, 1 − k)` (primed) or `(1 − k, 0)` (v)
    pub pure: Vec<bool>,
    /// smallest `F`-index and `G`-index shift over all components
    pub f_shift: Option<i32>,
    pub g_shift: Option<i32>,
    /// `F`-preserving (primed) or `G`-preserving (v) up to the form degree
    pub transversal: bool,
}

pub fn hodge_type_check(m: &FormalityModel, c: &ConnectionSeries) -> TypeReport {
    let basis_types = m.ring.basis_types().expect("model ring carries types");
    let mut types = Vec::new();
    let mut pure = Vec::new();
    let (mut fs, mut gs): (Option<i32>, Option<i32>) = (None, None);
    for (idx, a) in c.alphas.iter().enumerate() {
        let k = idx + 1;
        let mut found = std::collections::BTreeSet::new();
        for b in 0..m.ring.dim(k) {
            let (rp, rq) = basis_types[k][b];
            for (e, _) in m.e.type_components(1, a.col(k, b)).expect("bigrading") {
                found.insert((e.0 + rp, e.1 + rq));
            }
        }
        let expect = match c.variant {
            Variant::Primed => (0, 1 - k as i32),
            Variant::V => (1 - k as i32, 0),
        };
        pure.push(found.iter().all(|&t| t == expect));
        for &(p, q) in &found {
            fs = Some(fs.map_or(p, |x| x.min(p)));
            gs = Some(gs.map_or(q, |x| x.min(q)));
        }
        types.push((k, found.into_iter().collect()));
    }
    let transversal = match c.variant {
        Variant::Primed => fs.is_none_or(|x| x >= 0),
        Variant::V => gs.is_none_or(|x| x >= 0),
    };
    TypeReport { variant: c.variant, types, pure, f_shift: fs, g_shift: gs, transversal }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub degree: usize,
    pub basis_element: usize,
    pub residual: Vector,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaugeComparison {
    pub order: usize,
    pub g: GaugeElement,
    pub phi: RingMap,
    /// `+1` or `−1` when `g = exp(±γ^v₂)` was used
    pub sign: Option<i32>,
    pub verified: bool,
    pub g_in_m2: bool,
    pub phi_identity_on_gr1: bool,
    pub obstruction: Option<Obstruction>,
}

/// `e^g · φ_*(Σ α_k) − Σ α^v_k` through degree `n`.
fn comparison_residual(m: &FormalityModel, ap: &Tensor, av: &Tensor, g: &GaugeElement, phi: &RingMap, n: usize) -> Result<Tensor, VmhsError> {
    let pm = phi.matrix(&m.ring, &m.ring)?;
    let pushed = ap.map_ring(&pm, &m.ring);
    let moved = gauge_act(&m.e, &m.ring, None, g, &MCElement::unframed(pushed))?;
    Ok(av.sub(&moved.value).truncate(n))
}

/// Finds `g ∈ E⁰ ⊗ m²` and `φ` with `φ = id` on `m/m²` such that
/// `e^g · φ_*α = α^v` modulo `m^{n+1}`.
pub fn gauge_compare(m: &FormalityModel, cp: &ConnectionSeries, cv: &ConnectionSeries, n: usize) -> Result<GaugeComparison, VmhsError> {
    check_order(m, n)?;
    if cp.order() < n || cv.order() < n || cp.variant != Variant::Primed || cv.variant != Variant::V {
        return Err(VmhsError::SeriesMismatch);
    }
    let ap = cp.truncated(n).sum(m);
    let av = cv.truncated(n).sum(m);
    let id = RingMap::identity(&m.ring);
    let zero = GaugeElement::zero(&m.e, &m.ring);
    let finish = |g: GaugeElement, phi: RingMap, sign: Option<i32>, obstruction: Option<Obstruction>| -> Result<GaugeComparison, VmhsError> {
        let tr = m.ring.truncate(n);
        let cut = RingMap { images: phi.images.iter().map(|v| v[..tr.total_dim()].to_vec()).collect() };
        let verified = obstruction.is_none() && comparison_residual(m, &ap, &av, &g, &phi, n)?.is_zero() && cut.is_well_defined(&tr, &tr)?;
        let g_in_m2 = g.lambda.lowest_degree().is_none_or(|k| k >= 2);
        let phi_identity_on_gr1 = phi.is_identity_on_gr1(&m.ring);
        Ok(GaugeComparison { order: n, g, phi, sign, verified, g_in_m2, phi_identity_on_gr1, obstruction })
    };
    if n <= 1 {
        return finish(zero, id, None, None);
    }
    if n == 2 {
        let gt = &cv.gammas[0];
        for sign in [1, -1] {
            let g = GaugeElement { lambda: gt.scale(&Scalar::from_int(sign)) };
            if comparison_residual(m, &ap, &av, &g, &id, n)?.is_zero() {
                return finish(g, id, Some(sign as i32), None);
            }
        }
    }
    // order-by-order: the degree-k residual is −D g_k + Σ ηᵢ ⊗ φ_k(tᵢ)
    let h = m.eta.len();
    let d0 = m.e.d(0);
    let mut sys = d0.neg();
    for e in &m.eta {
        sys = sys.hstack(&Matrix::from_cols(std::slice::from_ref(e), m.e.dim(1)));
    }
    let solver = LinearSolver::new(&sys);
    let mut g = zero.clone();
    let mut images: Vec<Vector> = id.images.clone();
    let nl = m.e.dim(0);
    for k in 2..=n {
        let phi = RingMap { images: images.clone() };
        let r = comparison_residual(m, &ap, &av, &g, &phi, n)?;
        for b in 0..m.ring.dim(k) {
            let Some(x) = solver.solve(r.col(k, b)).into_option() else {
                let obs = Obstruction { degree: k, basis_element: b, residual: r.col(k, b).clone() };
                return finish(g, RingMap { images }, None, Some(obs));
            };
            *g.lambda.col_mut(k, b) = crate::linalg::vec_add(g.lambda.col(k, b), &x[..nl]);
            for i in 0..h {
                images[i][m.ring.offset(k) + b] += &x[nl + i];
            }
        }
    }
    finish(g, RingMap { images }, None, None)
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub mhs: MhsReport,
    pub passed: bool,
    /// the twisted structure has the same graded pieces as the split one
    pub graded_unchanged: bool,
}

/// The split structure on `V ⊗ Π` with Kronecker indexing `a · dim Π + r`.
pub fn split_fiber(m: &FormalityModel) -> TripleFiltered {
    let rt: Vec<HodgeType> = m.ring.basis_types().expect("model ring carries types").iter().flatten().copied().collect();
    let types: Vec<HodgeType> = m.v_types.iter().flat_map(|&(p, q)| rt.iter().map(move |&(a, b)| (p + a, q + b))).collect();
    TripleFiltered::split_on_basis(&types)
}

/// The operator of `x ∈ gl(V) ⊗ Π` on `V ⊗ Π`.
fn fiber_operator(m: &FormalityModel, x: &Tensor) -> Matrix {
    let nv = m.v_types.len();
    let t = m.ring.total_dim();
    let mut out = Matrix::zeros(nv * t, nv * t);
    for k in 0..=m.order() {
        for b in 0..m.ring.dim(k) {
            let v = x.col(k, b);
            if crate::linalg::is_zero_vec(v) {
                continue;
            }
            let mat = Matrix::from_vec(nv, nv, v.clone());
            let r = m.ring.basis_element(k, b);
            let mut mult = Matrix::zeros(t, t);
            for j in 0..t {
                mult.set_col(j, &m.ring.multiply(&r, &crate::linalg::unit_vec(t, j)).expect("dims match"));
            }
            out = out.add(&mat.kron(&mult));
        }
    }
    out
}

/// `exp(−x)` for nilpotent `x`.
fn exp_neg(x: &Matrix) -> Matrix {
    let n = x.rows();
    let mut acc = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for j in 1..=n {
        term = term.mul(x).scale(&Scalar::from_int(-1)).scale(&Scalar::from_int(j as i64).inv());
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

/// Twists `sF`, `sG`, `sW` by `e^{−f}`, `e^{−g}`, `e^{−w}` acting through
/// the fibre action, and checks the result.
pub fn fiber_vmhs_check(m: &FormalityModel, f: &GaugeElement, g: &GaugeElement, w: &GaugeElement) -> Result<FiberReport, VmhsError> {
    let aug = m.action.as_ref().ok_or(VmhsError::RepDimension)?;
    let mut ops = Vec::with_capacity(3);
    for x in [f, g, w] {
        if !x.lambda.in_max_ideal() {
            return Err(DeformationError::NotInMaxIdeal("fibre twist").into());
        }
        ops.push(exp_neg(&fiber_operator(m, &x.lambda.map(aug.eps()))));
    }
    fiber_vmhs_check_ops(m, &ops[0], &ops[1], &ops[2])
}

/// [`fiber_vmhs_check`] with the three automorphisms of `V ⊗ Π` given directly.
pub fn fiber_vmhs_check_ops(m: &FormalityModel, uf: &Matrix, ug: &Matrix, uw: &Matrix) -> Result<FiberReport, VmhsError> {
    let s = split_fiber(m);
    for u in [uf, ug, uw] {
        check_unipotent(&s, u)?;
    }
    let t = TripleFiltered::new(s.dim(), s.w().image(uw), s.f().image(uf), s.g().image(ug))?;
    let mhs = check_mhs(&t);
    let passed = mhs.passed();
    Ok(FiberReport { mhs, passed, graded_unchanged: same_graded(&s, &t) })
}

#[cfg(test)]
mod tests;
