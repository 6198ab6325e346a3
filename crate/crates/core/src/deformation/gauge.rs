//! Maurer–Cartan defects, the gauge action of `exp(L⁰ ⊗ m)` and gauge fixing.

use serde::Serialize;

use super::tensor::{bch, tensor_bracket, Tensor};
use super::DeformationError;
use crate::artin::GradedArtinAlgebra;
use crate::dgla::{Augmentation, Dgla, Splitting};
use crate::linalg::Scalar;

/// A degree-one element of `L ⊗ m`, optionally framed by `r ∈ g ⊗ m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MCElement {
    pub value: Tensor,
    pub framing: Option<Tensor>,
}

impl MCElement {
    pub fn unframed(value: Tensor) -> Self {
        MCElement { value, framing: None }
    }

    pub fn zero(l: &Dgla, a: &GradedArtinAlgebra, aug: Option<&Augmentation>) -> Self {
        MCElement { value: Tensor::zero(l.dim(1), a), framing: aug.map(|g| Tensor::zero(g.g_dim(), a)) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaugeElement {
    pub lambda: Tensor,
}

impl GaugeElement {
    pub fn zero(l: &Dgla, a: &GradedArtinAlgebra) -> Self {
        GaugeElement { lambda: Tensor::zero(l.dim(0), a) }
    }
}

/// `[x, y]` in `L ⊗ A` for `x ∈ L^i ⊗ A`, `y ∈ L^j ⊗ A`.
pub fn l_bracket(l: &Dgla, a: &GradedArtinAlgebra, i: usize, x: &Tensor, j: usize, y: &Tensor) -> Tensor {
    tensor_bracket(a, x, y, l.dim(i + j), &|u, v| l.bracket(i, u, j, v))
}

pub fn g_bracket(aug: &Augmentation, a: &GradedArtinAlgebra, x: &Tensor, y: &Tensor) -> Tensor {
    tensor_bracket(a, x, y, aug.g_dim(), &|u, v| aug.bracket(u, v))
}

fn check_shape(t: &Tensor, rows: usize, a: &GradedArtinAlgebra, what: &'static str) -> Result<(), DeformationError> {
    if !t.same_shape(&Tensor::zero(rows, a)) {
        return Err(DeformationError::Shape(what));
    }
    if !t.in_max_ideal() {
        return Err(DeformationError::NotInMaxIdeal(what));
    }
    Ok(())
}

/// `dα + ½[α, α]`.
pub fn mc_defect(l: &Dgla, a: &GradedArtinAlgebra, x: &MCElement) -> Result<Tensor, DeformationError> {
    check_shape(&x.value, l.dim(1), a, "MC element")?;
    let da = x.value.map(l.d(1));
    let br = l_bracket(l, a, 1, &x.value, 1, &x.value);
    Ok(da.add(&br.scale(&Scalar::frac(1, 2))))
}

fn factorial(k: usize) -> Scalar {
    Scalar::from_int((1..=k as i64).product())
}

/// `e^{ad λ} x` for `x ∈ L^i ⊗ A`.
pub fn exp_ad(l: &Dgla, a: &GradedArtinAlgebra, i: usize, lam: &GaugeElement, x: &Tensor) -> Tensor {
    let mut acc = x.clone();
    let mut term = x.clone();
    for k in 1..=a.truncation_order() {
        term = l_bracket(l, a, 0, &lam.lambda, i, &term);
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term.scale(&factorial(k).inv()));
    }
    acc
}

/// `e^λ · α = α + Σ_{k≥0} ad_λ^k/(k+1)! ([λ, α] − dλ)`; the framing moves to
/// `log(e^{ε(λ)} e^r)`.
pub fn gauge_act(
    l: &Dgla,
    a: &GradedArtinAlgebra,
    aug: Option<&Augmentation>,
    lam: &GaugeElement,
    x: &MCElement,
) -> Result<MCElement, DeformationError> {
    check_shape(&lam.lambda, l.dim(0), a, "gauge element")?;
    check_shape(&x.value, l.dim(1), a, "MC element")?;
    let mut term = l_bracket(l, a, 0, &lam.lambda, 1, &x.value).sub(&lam.lambda.map(l.d(0)));
    let mut acc = x.value.clone();
    for k in 0..=a.truncation_order() {
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term.scale(&factorial(k + 1).inv()));
        term = l_bracket(l, a, 0, &lam.lambda, 1, &term);
    }
    let framing = match (&x.framing, aug) {
        (None, _) => None,
        (Some(_), None) => return Err(DeformationError::MissingAugmentation),
        (Some(r), Some(g)) => {
            check_shape(r, g.g_dim(), a, "framing")?;
            let el = lam.lambda.map(g.eps());
            Some(bch(a, &el, r, &|u, v| g.bracket(u, v))?)
        }
    };
    Ok(MCElement { value: acc, framing })
}

/// `log(e^λ e^μ)` in `L⁰ ⊗ m`.
pub fn compose(l: &Dgla, a: &GradedArtinAlgebra, lam: &GaugeElement, mu: &GaugeElement) -> Result<GaugeElement, DeformationError> {
    Ok(GaugeElement { lambda: bch(a, &lam.lambda, &mu.lambda, &|u, v| l.bracket(0, u, 0, v))? })
}

/// The unique gauge-equivalent element with `δζ = 0` (and `δ_g z = 0` when
/// framed), together with the transformation reaching it.
pub fn gauge_fix(
    l: &Dgla,
    a: &GradedArtinAlgebra,
    s: &Splitting,
    aug: Option<&Augmentation>,
    x: &MCElement,
) -> Result<(MCElement, GaugeElement), DeformationError> {
    if x.framing.is_some() && s.delta_g().is_none() {
        return Err(DeformationError::MissingDeltaG);
    }
    let mut cur = x.clone();
    let mut trans = GaugeElement::zero(l, a);
    let max_steps = 2 * a.truncation_order() + 2;
    for _ in 0..=max_steps {
        let dz = cur.value.map(s.delta(1));
        let dgz = match (&cur.framing, s.delta_g()) {
            (Some(z), Some(dg)) => z.map(dg),
            _ => Tensor::zero(l.dim(0), a),
        };
        if dz.is_zero() && dgz.is_zero() {
            return Ok((cur, trans));
        }
        let step = GaugeElement { lambda: dz.sub(&dgz) };
        cur = gauge_act(l, a, aug, &step, &cur)?;
        trans = compose(l, a, &step, &trans)?;
    }
    Err(DeformationError::NoConvergence(max_steps))
}
