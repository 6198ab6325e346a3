use std::collections::BTreeMap;

use super::*;
use crate::dgla::{gl_bracket, BracketEntry};
use crate::linalg::BilinearMap;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn unit(n: usize, i: usize) -> Vector {
    crate::linalg::unit_vec(n, i)
}

/// `A⁰ = ⟨1, f⟩`, `A¹ = ⟨x, y, a, b⟩`, `A² = ⟨c⟩` with `∂f = a`, `∂̄f = b`,
/// `∂b = c`, `∂̄a = −c` and `xy = c`, tensored with the two-dimensional
/// non-abelian Lie algebra `[e, h] = h`.
pub(crate) fn toy() -> Dgla {
    let d1 = vec![
        Matrix::from_i64(&[&[0, 0], &[0, 0], &[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[0, 0, 0, 1]]),
    ];
    let d2 = vec![
        Matrix::from_i64(&[&[0, 0], &[0, 0], &[0, 0], &[0, 1]]),
        Matrix::from_i64(&[&[0, 0, -1, 0]]),
    ];
    let dims = [2, 4, 1];
    let mut products = BTreeMap::new();
    for i in 0..3 {
        for j in 0..3 - i {
            let mut t = BilinearMap::zero(dims[i], dims[j], dims[i + j]);
            for b in 0..dims[j] {
                if i == 0 {
                    t.set(0, b, &unit(dims[j], b));
                }
            }
            for a in 0..dims[i] {
                if j == 0 {
                    t.set(a, 0, &unit(dims[i], a));
                }
            }
            if i == 1 && j == 1 {
                t.set(0, 1, &[s(1)]);
                t.set(1, 0, &[s(-1)]);
            }
            products.insert((i, j), t);
        }
    }
    let types = vec![vec![(0, 0), (0, 0)], vec![(1, 0), (0, 1), (1, 0), (0, 1)], vec![(1, 1)]];
    let mut lie = BilinearMap::zero(2, 2, 2);
    lie.set(0, 1, &[s(0), s(1)]);
    lie.set(1, 0, &[s(0), s(-1)]);
    Dgla::tensor_lie(dims.to_vec(), d1, Some(d2), &products, Some(types), &lie).unwrap()
}

/// `e ↦ E₀₀`, `h ↦ E₀₁` on the constants, zero on `f ⊗ g`.
pub(crate) fn toy_action(e: &Dgla) -> Augmentation {
    let mut eps = Matrix::zeros(4, 4);
    eps[(0, 0)] = s(1);
    eps[(1, 1)] = s(1);
    Augmentation::new(e, gl_bracket(2), eps).unwrap()
}

fn toy_model(n: usize) -> FormalityModel {
    let e = toy();
    let aug = toy_action(&e);
    FormalityModel::new(e, vec![(0, 0), (0, 0)], Some(aug), n).unwrap()
}

fn cone_model(n: usize) -> FormalityModel {
    let br = BracketEntry { i: 1, a: 0, j: 1, b: 1, value: vec![s(1)] };
    let types = vec![vec![], vec![(1, 0), (0, 1)], vec![(1, 1)]];
    let e = Dgla::new(
        vec![0, 2, 1],
        vec![Matrix::zeros(2, 0), Matrix::zeros(1, 2)],
        Some(vec![Matrix::zeros(2, 0), Matrix::zeros(1, 2)]),
        &[br],
        Some(types),
    )
    .unwrap();
    FormalityModel::new(e, vec![], None, n).unwrap()
}

#[test]
fn toy_model_data() {
    let m = toy_model(3);
    assert!(m.e.validate().passed(), "{:?}", m.e.validate());
    assert_eq!(m.eta.len(), 4);
    assert_eq!(m.eta_types, vec![(0, 1), (0, 1), (1, 0), (1, 0)]);
    assert_eq!(m.ring.dims(), &[1, 4, 10, 20]);
    assert!(m.obs.is_zero());
}

#[test]
fn failing_ddbar_is_reported() {
    let e = Dgla::new(
        vec![1, 1],
        vec![Matrix::from_i64(&[&[1]])],
        Some(vec![Matrix::from_i64(&[&[0]])]),
        &[],
        Some(vec![vec![(0, 0)], vec![(1, 0)]]),
    )
    .unwrap();
    let err = FormalityModel::new(e, vec![], None, 2).unwrap_err();
    assert!(matches!(err, VmhsError::NotDdbar { degree: 1, .. }), "{err:?}");
    assert!(err.is_hypothesis_failure());
}

#[test]
fn formal_model_has_no_corrections() {
    let m = cone_model(4);
    assert_eq!(m.ring.dims(), &[1, 2, 2, 2, 2]);
    for c in [alpha_recursion(&m, 4).unwrap(), alpha_v_recursion(&m, 4).unwrap()] {
        assert!(c.alphas[1..].iter().all(Tensor::is_zero));
        assert!(flatness_check(&m, &c).unwrap().flat);
    }
}

#[test]
fn recursion_is_flat_and_typed() {
    let m = toy_model(4);
    for c in [alpha_recursion(&m, 4).unwrap(), alpha_v_recursion(&m, 4).unwrap()] {
        let f = flatness_check(&m, &c).unwrap();
        assert!(f.flat && f.recursion.iter().all(|&b| b), "{f:?}");
        let t = hodge_type_check(&m, &c);
        assert!(t.pure.iter().all(|&b| b), "{t:?}");
        assert!(t.transversal);
    }
    let c = alpha_recursion(&m, 2).unwrap();
    assert!(!c.alphas[1].is_zero());
    assert!(!c.gammas[0].is_zero());
}

#[test]
fn second_order_difference_is_exact() {
    let m = toy_model(2);
    let cp = alpha_recursion(&m, 2).unwrap();
    let cv = alpha_v_recursion(&m, 2).unwrap();
    let diff = cv.alphas[1].sub(&cp.alphas[1]);
    assert_eq!(diff, cv.gammas[0].map(m.e.d(0)));
    assert_eq!(cp.gammas[0].scale(&Scalar::frac(-1, 2)), cv.gammas[0]);
}

#[test]
fn first_order_alone_is_not_flat() {
    let m = toy_model(2);
    let a1 = alpha_one(&m);
    let d = mc_defect(&m.e, &m.ring, &MCElement::unframed(a1)).unwrap();
    assert_eq!(d.lowest_degree(), Some(2));
}

#[test]
fn gauge_comparison_orders() {
    let m = toy_model(4);
    let cp = alpha_recursion(&m, 4).unwrap();
    let cv = alpha_v_recursion(&m, 4).unwrap();
    let g1 = gauge_compare(&m, &cp, &cv, 1).unwrap();
    assert!(g1.verified && g1.g.lambda.is_zero());
    let g2 = gauge_compare(&m, &cp, &cv, 2).unwrap();
    assert!(g2.verified, "{g2:?}");
    assert_eq!(g2.sign, Some(-1));
    for n in 3..=4 {
        let g = gauge_compare(&m, &cp, &cv, n).unwrap();
        assert!(g.verified && g.g_in_m2 && g.phi_identity_on_gr1, "{n}: {:?}", g.obstruction);
    }
    let f = cone_model(3);
    let (a, b) = (alpha_recursion(&f, 3).unwrap(), alpha_v_recursion(&f, 3).unwrap());
    let g = gauge_compare(&f, &a, &b, 3).unwrap();
    assert!(g.verified && g.g.lambda.is_zero());
}

#[test]
fn fibre_structures() {
    let m = toy_model(3);
    let z = GaugeElement::zero(&m.e, &m.ring);
    let r = fiber_vmhs_check(&m, &z, &z, &z).unwrap();
    assert!(r.passed && r.graded_unchanged);
    let cp = alpha_recursion(&m, 3).unwrap();
    let cv = alpha_v_recursion(&m, 3).unwrap();
    let g = gauge_compare(&m, &cp, &cv, 3).unwrap().g;
    let r = fiber_vmhs_check(&m, &g, &z, &g).unwrap();
    assert!(r.passed && r.graded_unchanged, "{r:?}");
    let dim = split_fiber(&m).dim();
    let mut bad = Matrix::identity(dim);
    bad[(0, 1)] = s(1);
    let err = fiber_vmhs_check_ops(&m, &Matrix::identity(dim), &Matrix::identity(dim), &bad).unwrap_err();
    assert!(matches!(err, VmhsError::Hodge(HodgeError::NotUnipotent(_))), "{err:?}");
}
