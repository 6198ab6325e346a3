use std::collections::BTreeMap;

use super::*;
use crate::artin::{quotient_sym, GradedArtinAlgebra};
use crate::dgla::{gl_bracket, Augmentation, BracketEntry, Dgla, Splitting};
use crate::linalg::{Matrix, Scalar};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn free(vars: usize, n: usize) -> GradedArtinAlgebra {
    quotient_sym(vars, &BTreeMap::new(), n, None).unwrap()
}

/// `L¹ = ⟨x₁, x₂⟩`, `L² = ⟨y⟩`, `[x₁, x₂] = y`, `d = 0`.
fn formal_cone() -> Dgla {
    let e = BracketEntry { i: 1, a: 0, j: 1, b: 1, value: vec![s(1)] };
    Dgla::new(vec![0, 2, 1], vec![Matrix::zeros(2, 0), Matrix::zeros(1, 2)], None, &[e], None).unwrap()
}

#[test]
fn zero_is_mc() {
    let l = formal_cone();
    let a = free(2, 3);
    let x = MCElement::zero(&l, &a, None);
    assert!(mc_defect(&l, &a, &x).unwrap().is_zero());
}

#[test]
fn abelian_gauge_subtracts_d() {
    let l = Dgla::new(vec![1, 1], vec![Matrix::from_i64(&[&[3]])], None, &[], None).unwrap();
    let a = free(1, 2);
    let lam = GaugeElement { lambda: Tensor::elementary(&a, &[s(1)], 1, 0) };
    let x = MCElement::unframed(Tensor::elementary(&a, &[s(5)], 2, 0));
    let y = gauge_act(&l, &a, None, &lam, &x).unwrap();
    let expect = x.value.sub(&lam.lambda.map(l.d(0)));
    assert_eq!(y.value, expect);
}

#[test]
fn formal_cone_kuranishi() {
    let l = formal_cone();
    let sp = Splitting::zero(&l);
    let kur = kuranishi(&l, &sp, None, 3, false).unwrap();
    assert_eq!(kur.ring.dims(), &[1, 2, 2, 2]);
    assert_eq!(kur.ideal.generators_by_degree.len(), 1);
    assert_eq!(kur.ideal.generators_by_degree[&2].dim(), 1);
    let a = free(1, 2);
    let cmp = compare_kuranishi(&l, &kur, &a).unwrap();
    assert!(cmp.passed(), "{cmp:?}");
    let a2 = free(2, 2);
    assert!(compare_kuranishi(&l, &kur, &a2).unwrap().passed());
}

#[test]
fn abelian_gives_free_ring() {
    let l = Dgla::abelian(vec![1, 2, 1]);
    let kur = kuranishi(&l, &Splitting::zero(&l), None, 3, false).unwrap();
    assert_eq!(kur.ring.dims(), free(2, 3).dims());
    assert!(kur.ideal.generators_by_degree.is_empty());
}

#[test]
fn gauge_fix_is_idempotent() {
    let l = Dgla::new(vec![1, 2, 1], vec![Matrix::from_i64(&[&[1], &[0]]), Matrix::zeros(1, 2)], None, &[], None).unwrap();
    let sp = Splitting::canonical(&l);
    assert!(sp.check(&l, None).passed());
    let a = free(2, 2);
    let mut v = Tensor::zero(2, &a);
    *v.col_mut(1, 0) = vec![s(2), s(1)];
    *v.col_mut(2, 1) = vec![s(-1), s(4)];
    let x = MCElement::unframed(v);
    let (z, trans) = gauge_fix(&l, &a, &sp, None, &x).unwrap();
    assert!(z.value.map(sp.delta(1)).is_zero());
    assert_eq!(gauge_act(&l, &a, None, &trans, &x).unwrap(), z);
    let (z2, t2) = gauge_fix(&l, &a, &sp, None, &z).unwrap();
    assert_eq!(z2, z);
    assert!(t2.lambda.is_zero());
}

#[test]
fn trivial_ambiguity_is_identity() {
    let l = formal_cone();
    let sp = Splitting::zero(&l);
    let kur = kuranishi(&l, &sp, None, 3, false).unwrap();
    let res = ambiguity_act(&l, &sp, &kur, &GaugeElement::zero(&l, &kur.ring)).unwrap();
    assert_eq!(res.map, crate::artin::RingMap::identity(&kur.ring));
    assert!(res.identity_on_gr1);
}

#[test]
fn framed_product_matches_brute_force() {
    // L⁰ central in gl₂ through the identity matrix
    let l = formal_cone().direct_sum(&Dgla::abelian(vec![1]));
    let mut eps = Matrix::zeros(4, 1);
    eps = eps.add(&Matrix::from_i64(&[&[1], &[0], &[0], &[1]]));
    let aug = Augmentation::new(&l, gl_bracket(2), eps).unwrap();
    assert!(aug.check(&l).passed());
    let sp = Splitting::zero(&l);
    let prod = preferred_gm_product(&l, &aug, &sp, 2, None).unwrap();
    assert_eq!(prod.s1_vars, 3);
    assert_eq!(prod.algebra.dim(1), 5);
    for vars in 1..3 {
        let cmp = compare_product(&l, &aug, &prod, &free(vars, 2)).unwrap();
        assert!(cmp.passed(), "{cmp:?}");
    }
}

#[test]
fn bch_is_additive_on_commuting() {
    let a = free(1, 4);
    let x = Tensor::elementary(&a, &[s(1), s(0)], 1, 0);
    let y = Tensor::elementary(&a, &[s(0), s(2)], 2, 0);
    let z = bch(&a, &x, &y, &|_, _| vec![s(0), s(0)]).unwrap();
    assert_eq!(z, x.add(&y));
    assert!(bch(&free(1, 5), &Tensor::zero(1, &free(1, 5)), &Tensor::zero(1, &free(1, 5)), &|_, _| vec![s(0)]).is_err());
}
