//! The Kuranishi ring and universal Maurer–Cartan element of a split dgla,
//! the product decomposition `S₁ ⊗ S₂` for the framed functor, and the
//! action of the ambiguity group `exp(H⁰ ⊗ m²)`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::gauge::{gauge_act, gauge_fix, l_bracket, mc_defect, GaugeElement, MCElement};
use super::tensor::Tensor;
use super::DeformationError;
use crate::artin::{monomials, quotient_sym, GradedArtinAlgebra, HodgeType, IdealData, RingMap};
use crate::dgla::{Augmentation, Dgla, Splitting};
use crate::linalg::{axpy, zero_vec, LinearSolver, Matrix, Scalar, Subspace, Vector};

#[derive(Clone, Debug)]
pub struct Kuranishi {
    /// `Sym(H¹*)` truncated at `n`
    pub free: GradedArtinAlgebra,
    /// `Sym(H¹*)/J` truncated at `n`
    pub ring: GradedArtinAlgebra,
    pub universal: MCElement,
    pub universal_free: Tensor,
    /// generators of `J`, in monomial coordinates of `free`
    pub ideal: IdealData,
    pub h1_basis: Vec<Vector>,
    pub h2_basis: Vec<Vector>,
    pub h1_types: Option<Vec<HodgeType>>,
    /// present when the grading was requested
    pub ideal_bigraded: Option<bool>,
}

/// Coordinates of `P v` in a harmonic basis.
pub(crate) struct HarmonicCoords {
    proj: Matrix,
    solver: LinearSolver,
}

impl HarmonicCoords {
    pub(crate) fn new(l: &Dgla, s: &Splitting, i: usize, basis: &[Vector]) -> Self {
        let proj = s.projector(l, i);
        let solver = LinearSolver::new(&Matrix::from_cols(basis, l.dim(i)));
        HarmonicCoords { proj, solver }
    }

    pub(crate) fn coords(&self, v: &[Scalar]) -> Vector {
        self.solver.solve(&self.proj.mul_vec(v)).into_option().expect("projector lands in the harmonic space")
    }
}

fn check_injective(l: &Dgla, aug: &Augmentation) -> Result<(), DeformationError> {
    if aug.image_of_h0(l).dim() != l.cocycles(0).dim() {
        return Err(DeformationError::NotInjective);
    }
    Ok(())
}

/// Solves `ζ = h − ½ δ[ζ, ζ]` over the free algebra, takes `J` generated by
/// the degree-wise components of `P²(½[ζ, ζ])`, and pushes `ζ` to the quotient.
pub fn kuranishi(
    l: &Dgla,
    s: &Splitting,
    aug: Option<&Augmentation>,
    n: usize,
    respect_grading: bool,
) -> Result<Kuranishi, DeformationError> {
    if !s.check(l, aug).passed() {
        return Err(DeformationError::BadSplitting);
    }
    if let Some(g) = aug {
        check_injective(l, g)?;
    }
    let coh = l.cohomology(Some(s));
    let h1_basis = coh.degree(1).harmonic().to_vec();
    let h = h1_basis.len();
    let h2_basis = if l.top_degree() >= 2 { coh.degree(2).harmonic().to_vec() } else { Vec::new() };
    let h1_types = if respect_grading {
        if l.bigrading().is_none() {
            return Err(DeformationError::Grading("the dgla carries no bigrading".into()));
        }
        if !s.preserves_bigrading(l) {
            return Err(DeformationError::Grading("the splitting does not preserve the bigrading".into()));
        }
        let mut ts = Vec::with_capacity(h);
        for (i, e) in h1_basis.iter().enumerate() {
            ts.push(l.pure_type(1, e).ok_or_else(|| DeformationError::Grading(format!("harmonic H¹[{i}] is not of pure type")))?);
        }
        Some(ts)
    } else {
        None
    };
    let var_types: Option<Vec<HodgeType>> = h1_types.as_ref().map(|ts| ts.iter().map(|&(p, q)| (-p, -q)).collect());
    let free = quotient_sym(h, &BTreeMap::new(), n, var_types.clone())?;
    let mut zeta = Tensor::zero(l.dim(1), &free);
    if n >= 1 {
        for (i, e) in h1_basis.iter().enumerate() {
            *zeta.col_mut(1, i) = e.clone();
        }
    }
    let minus_half = Scalar::frac(-1, 2);
    for k in 2..=n {
        if l.top_degree() < 2 {
            break;
        }
        let br = l_bracket(l, &free, 1, &zeta, 1, &zeta);
        for b in 0..free.dim(k) {
            let v = s.delta(2).mul_vec(br.col(k, b));
            *zeta.col_mut(k, b) = crate::linalg::vec_scale(&v, &minus_half);
        }
    }
    let mut gens: BTreeMap<usize, Vec<Vector>> = BTreeMap::new();
    if !h2_basis.is_empty() {
        let hc = HarmonicCoords::new(l, s, 2, &h2_basis);
        let half_br = l_bracket(l, &free, 1, &zeta, 1, &zeta).scale(&Scalar::frac(1, 2));
        for k in 2..=n {
            let mut comps = vec![zero_vec(free.dim(k)); h2_basis.len()];
            for b in 0..free.dim(k) {
                let c = hc.coords(half_br.col(k, b));
                for (m, x) in c.into_iter().enumerate() {
                    comps[m][b] = x;
                }
            }
            gens.insert(k, comps);
        }
    }
    let ring = quotient_sym(h, &gens, n, var_types)?;
    let ideal = IdealData {
        generators_by_degree: gens
            .iter()
            .map(|(k, vs)| (*k, Subspace::span(free.dim(*k), vs)))
            .filter(|(_, s)| !s.is_zero())
            .collect(),
    };
    let pres = ring.presentation().expect("quotients are presented");
    let mut zr = Tensor::zero(l.dim(1), &ring);
    for k in 0..=n {
        for m in 0..free.dim(k) {
            let col = zeta.col(k, m);
            for (g, c) in pres.normal_form(k, m) {
                axpy(zr.col_mut(k, *g), c, col);
            }
        }
    }
    let universal = MCElement::unframed(zr);
    if !mc_defect(l, &ring, &universal)?.is_zero() {
        return Err(DeformationError::ResidualDefect);
    }
    let ideal_bigraded = h1_types.as_ref().map(|_| presentation_is_bigraded(&ring));
    Ok(Kuranishi { free, ring, universal, universal_free: zeta, ideal, h1_basis, h2_basis, h1_types, ideal_bigraded })
}

/// Each `I_k` is the direct sum of its intersections with the type pieces.
pub fn presentation_is_bigraded(a: &GradedArtinAlgebra) -> bool {
    let Some(p) = a.presentation() else { return false };
    let Some(vt) = p.var_types() else { return false };
    for k in 0..=a.truncation_order() {
        let id = p.ideal_in_degree(k);
        if id.is_zero() {
            continue;
        }
        let monos = p.monomials(k);
        let mut by_type: BTreeMap<HodgeType, Vec<usize>> = BTreeMap::new();
        for (i, m) in monos.iter().enumerate() {
            let t = m.iter().fold((0, 0), |acc, &v| (acc.0 + vt[v].0, acc.1 + vt[v].1));
            by_type.entry(t).or_default().push(i);
        }
        let total: usize = by_type
            .values()
            .map(|idx| id.intersect(&Subspace::coordinate(monos.len(), idx)).dim())
            .sum();
        if total != id.dim() {
            return false;
        }
    }
    true
}

/// `S₁ ⊗ S₂` with `S₁` free on the transversal `𝔱 ⊂ g` and `S₂` the
/// Kuranishi ring; variables are ordered `s₁..s_c, t₁..t_h`.
#[derive(Clone, Debug)]
pub struct GmProduct {
    pub algebra: GradedArtinAlgebra,
    pub s1_vars: usize,
    pub kuranishi: Kuranishi,
    pub transversal: Subspace,
    pub j_ideal: IdealData,
    pub q_ideal: IdealData,
    /// framed universal element `(ζ, e^{Σ τ_j ⊗ s_j})`
    pub universal: MCElement,
    /// degree → basis element → number of `t` factors
    pub s2_degree: Vec<Vec<usize>>,
}

impl GmProduct {
    /// `W_{−k}`: span of basis elements with at least `k` factors from `S₂`.
    pub fn jadic(&self, k: usize) -> Subspace {
        let a = &self.algebra;
        let idx: Vec<usize> = (0..=a.truncation_order())
            .flat_map(|d| (0..a.dim(d)).filter(move |&b| self.s2_degree[d][b] >= k).map(move |b| a.offset(d) + b))
            .collect();
        Subspace::coordinate(a.total_dim(), &idx)
    }

    pub fn jadic_filtration(&self) -> Vec<Subspace> {
        (0..=self.algebra.truncation_order() + 1).map(|k| self.jadic(k)).collect()
    }
}

/// Re-indexes a `Sym^k` vector on `h` variables to `Sym^k` on `shift + h`
/// variables, sending `t_i` to variable `shift + i`.
fn shift_vars(v: &[Scalar], h: usize, shift: usize, k: usize) -> Vector {
    let src = monomials(h, k);
    let dst = monomials(h + shift, k);
    let index: std::collections::HashMap<&Vec<usize>, usize> = dst.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = zero_vec(dst.len());
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            let m: Vec<usize> = src[i].iter().map(|x| x + shift).collect();
            out[index[&m]] = c.clone();
        }
    }
    out
}

pub fn preferred_gm_product(
    l: &Dgla,
    aug: &Augmentation,
    s: &Splitting,
    n: usize,
    transversal: Option<&Subspace>,
) -> Result<GmProduct, DeformationError> {
    check_injective(l, aug)?;
    let s = match (transversal, s.delta_g()) {
        (None, Some(_)) => s.clone(),
        (t, _) => s.clone().with_delta_g(l, aug, t)?,
    };
    let tr = s.transversal().expect("δ_g was just set");
    let kur = kuranishi(l, &s, Some(aug), n, false)?;
    let c = tr.dim();
    let h = kur.h1_basis.len();
    let gens: BTreeMap<usize, Vec<Vector>> = kur
        .ideal
        .generators_by_degree
        .iter()
        .map(|(k, sub)| (*k, sub.basis_vectors().iter().map(|v| shift_vars(v, h, c, *k)).collect()))
        .collect();
    let algebra = quotient_sym(c + h, &gens, n, None)?;
    let pres = algebra.presentation().unwrap();
    let s2_degree: Vec<Vec<usize>> = (0..=n)
        .map(|d| (0..algebra.dim(d)).map(|b| pres.basis_monomial(d, b).iter().filter(|&&v| v >= c).count()).collect())
        .collect();
    let gr1 = algebra.dim(1);
    let j_ideal = IdealData {
        generators_by_degree: if n >= 1 {
            [(1, Subspace::coordinate(gr1, &(c..c + h).collect::<Vec<_>>()))].into_iter().collect()
        } else {
            BTreeMap::new()
        },
    };
    let q_ideal = IdealData {
        generators_by_degree: if n >= 1 {
            [(1, Subspace::coordinate(gr1, &(0..c).collect::<Vec<_>>()))].into_iter().collect()
        } else {
            BTreeMap::new()
        },
    };
    let embed = RingMap { images: (0..h).map(|i| algebra.basis_element(1, c + i)).collect() };
    let phi = embed.matrix(&kur.ring, &algebra)?;
    let value = kur.universal.value.map_ring(&phi, &algebra);
    let mut framing = Tensor::zero(aug.g_dim(), &algebra);
    if n >= 1 {
        for (j, tau) in tr.basis_vectors().into_iter().enumerate() {
            *framing.col_mut(1, j) = tau;
        }
    }
    let universal = MCElement { value, framing: Some(framing) };
    if !mc_defect(l, &algebra, &universal)?.is_zero() {
        return Err(DeformationError::ResidualDefect);
    }
    Ok(GmProduct { algebra, s1_vars: c, kuranishi: kur, transversal: tr, j_ideal, q_ideal, universal, s2_degree })
}

#[derive(Clone, Debug, Serialize)]
pub struct AmbiguityResult {
    pub map: RingMap,
    pub fixed: MCElement,
    pub identity_on_gr1: bool,
}

/// Applies `exp(h)` for `h ∈ H⁰ ⊗ m²` to the universal element, gauge-fixes
/// again and reads off the induced substitution of generators.
pub fn ambiguity_act(l: &Dgla, s: &Splitting, kur: &Kuranishi, h: &GaugeElement) -> Result<AmbiguityResult, DeformationError> {
    let ring = &kur.ring;
    if !h.lambda.same_shape(&Tensor::zero(l.dim(0), ring)) {
        return Err(DeformationError::Shape("ambiguity element"));
    }
    if h.lambda.lowest_degree().is_some_and(|k| k < 2) {
        return Err(DeformationError::NotInM2);
    }
    let z0 = l.cocycles(0);
    for k in 0..=ring.truncation_order() {
        if h.lambda.columns(k).iter().any(|v| !z0.contains(v)) {
            return Err(DeformationError::NotInH0);
        }
    }
    let moved = gauge_act(l, ring, None, h, &kur.universal)?;
    let (fixed, _) = gauge_fix(l, ring, s, None, &moved)?;
    let hc = HarmonicCoords::new(l, s, 1, &kur.h1_basis);
    let nv = kur.h1_basis.len();
    let mut images = vec![zero_vec(ring.total_dim()); nv];
    for k in 0..=ring.truncation_order() {
        for b in 0..ring.dim(k) {
            let c = hc.coords(fixed.value.col(k, b));
            for (i, x) in c.into_iter().enumerate() {
                images[i][ring.offset(k) + b] = x;
            }
        }
    }
    let map = RingMap { images };
    if !map.is_well_defined(ring, ring)? {
        return Err(DeformationError::ResidualDefect);
    }
    let pushed = kur.universal.value.map_ring(&map.matrix(ring, ring)?, ring);
    if pushed != fixed.value {
        return Err(DeformationError::ResidualDefect);
    }
    let identity_on_gr1 = map.is_identity_on_gr1(ring);
    Ok(AmbiguityResult { map, fixed, identity_on_gr1 })
}
