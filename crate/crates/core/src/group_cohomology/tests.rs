use super::*;
use crate::deformation::kuranishi;
use crate::dgla::Splitting;
use crate::linalg::unit_vec;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn m(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(rows)
}

fn w(l: &[i32]) -> Word {
    Word::new(l).unwrap()
}

fn module(p: &Presentation, r: &Representation) -> AdModule {
    AdModule::new(p, r).unwrap()
}

#[test]
fn words_reduce() {
    assert_eq!(w(&[1, 2, -2, -1, 3]).letters(), &[3]);
    assert!(Word::new(&[1, 0]).is_err());
    assert_eq!(w(&[1, 2]).inverse().letters(), &[-2, -1]);
    assert!(Presentation::new(1, vec![w(&[2])]).is_err());
    let json = serde_json::to_string(&Presentation::surface(1)).unwrap();
    assert_eq!(json, r#"{"generators":2,"relations":[[1,2,-1,-2]]}"#);
}

#[test]
fn validation() {
    let p = Presentation::surface(2);
    let diag = |a: i64, b: i64| m(&[&[a, 0], &[0, b]]);
    let r = Representation { images: vec![diag(2, 1), diag(1, 3), diag(-1, 1), diag(5, 7)], lie_subalgebra: None };
    assert!(validate_rep(&p, &r).unwrap().passed);
    let x = m(&[&[1, 1], &[0, 1]]);
    let y = m(&[&[1, 0], &[1, 1]]);
    let bad = Representation { images: vec![x, y, diag(1, 1), diag(1, 1)], lie_subalgebra: None };
    let rep = validate_rep(&p, &bad).unwrap();
    assert_eq!(rep.failing_relation, Some(0));
    assert!(matches!(rep_cohomology(&p, &bad), Err(GroupError::RelationFails(0))));
    assert!(validate_rep(&Presentation::free(2), &Representation::trivial(2, 3)).unwrap().passed);
}

#[test]
fn fox_axioms() {
    let p = Presentation::free(2);
    let r = Representation { images: vec![m(&[&[1, 1], &[0, 1]]), m(&[&[2, 0], &[0, 1]])], lie_subalgebra: None };
    let md = module(&p, &r);
    let id = Matrix::identity(4);
    assert_eq!(fox_derivative(&md, &w(&[1, 2]), 1), id);
    assert_eq!(fox_derivative(&md, &w(&[1]), 2), Matrix::zeros(4, 4));
    assert_eq!(fox_derivative(&md, &w(&[-1]), 1), md.ad_word(&w(&[-1])).neg());
    let c = Word::commutator(1, 2);
    assert_eq!(fox_derivative(&md, &c, 1), id.sub(&md.ad_word(&w(&[1, 2, -1]))));
}

#[test]
fn cohomology_dimensions() {
    let cases = [
        (Presentation::free(2), 1, [1, 2, 0]),
        (Presentation::surface(2), 1, [1, 4, 1]),
        (Presentation::surface(2), 2, [4, 16, 4]),
    ];
    for (p, n, dims) in cases {
        let rc = rep_cohomology(&p, &Representation::trivial(p.generators, n)).unwrap();
        assert_eq!(rc.dims(), dims);
        assert!(rc.complex.composite_vanishes());
        assert!(rc.complex.d0.is_zero());
        assert!(rc.complex.d1.is_zero());
    }
}

#[test]
fn euler_characteristic_of_nontrivial_rep() {
    let p = Presentation::surface(1);
    let r = Representation { images: vec![m(&[&[1, 1], &[0, 1]]), m(&[&[1, 3], &[0, 1]])], lie_subalgebra: None };
    let rc = rep_cohomology(&p, &r).unwrap();
    assert!(rc.complex.composite_vanishes());
    assert_eq!(rc.euler_characteristic(), 0);
    assert_eq!(rc.dims()[0], 2);
}

#[test]
fn abelian_coefficients_have_no_obstruction() {
    let p = Presentation::surface(2);
    let rc = rep_cohomology(&p, &Representation::trivial(4, 1)).unwrap();
    assert!(cup_obstruction(&rc).is_zero());
    let (l, aug) = to_formal_dgla(&rc, None).unwrap();
    assert!(l.validate().passed());
    assert!(aug.check(&l).passed());
}

#[test]
fn commuting_pairs_cone() {
    let p = Presentation::surface(1);
    let rc = rep_cohomology(&p, &Representation::trivial(2, 2)).unwrap();
    let q = cup_obstruction(&rc);
    assert!(!q.is_zero() && q.is_symmetric());
    // u(a) = E₀₁, u(b) = E₁₀ do not commute
    let mut u = zero_vec(8);
    u[1] = s(1);
    u[6] = s(1);
    assert!(!crate::linalg::is_zero_vec(&cup_square_class(&rc, &u).unwrap()));
    let mut v = zero_vec(8);
    v[1] = s(1);
    v[5] = s(3);
    assert!(crate::linalg::is_zero_vec(&cup_square_class(&rc, &v).unwrap()));
    let (l, aug) = to_formal_dgla(&rc, None).unwrap();
    assert!(l.validate().passed(), "{:?}", l.validate());
    assert!(aug.check(&l).passed());
}

#[test]
fn cup_is_well_defined() {
    let p = Presentation::surface(2);
    let r = Representation {
        images: vec![m(&[&[1, 1], &[0, 1]]), m(&[&[1, 2], &[0, 1]]), m(&[&[1, 0], &[0, 1]]), m(&[&[1, -1], &[0, 1]])],
        lie_subalgebra: None,
    };
    let rc = rep_cohomology(&p, &r).unwrap();
    let h1 = rc.cohomology.degree(1).harmonic().to_vec();
    assert!(h1.len() >= 2);
    let shift = |k: usize| unit_vec(4, k % 4);
    for a in 0..h1.len() {
        let b = (a + 1) % h1.len();
        let rep = check_cup(&rc, &h1[a], &h1[b], &shift(a), &shift(a + 2));
        assert!(rep.passed(), "{a}: {rep:?}");
    }
    let md = rc.complex.d0.mul_vec(&unit_vec(4, 1));
    assert!(crate::linalg::is_zero_vec(&cup_square_class(&rc, &md).unwrap()));
}

#[test]
fn irreducible_has_scalar_invariants() {
    let p = Presentation::free(2);
    let r = Representation { images: vec![m(&[&[1, 0], &[0, -1]]), m(&[&[0, 1], &[1, 0]])], lie_subalgebra: None };
    let rc = rep_cohomology(&p, &r).unwrap();
    assert_eq!(rc.dims(), [1, 5, 0]);
    let (l, aug) = to_formal_dgla(&rc, None).unwrap();
    assert!(aug.check(&l).injective_on_h0);
    let kur = kuranishi(&l, &Splitting::zero(&l), None, 3, false).unwrap();
    assert!(kur.ideal.generators_by_degree.is_empty());
}

#[test]
fn subalgebra_coefficients() {
    let p = Presentation::surface(1);
    let sl2 = Subspace::span(4, &[vec![s(0), s(1), s(0), s(0)], vec![s(0), s(0), s(1), s(0)], vec![s(1), s(0), s(0), s(-1)]]);
    let r = Representation { images: vec![m(&[&[2, 0], &[0, 1]]), m(&[&[3, 0], &[0, 1]])], lie_subalgebra: Some(sl2) };
    let rc = rep_cohomology(&p, &r).unwrap();
    assert_eq!(rc.complex.module.dim(), 3);
    assert_eq!(rc.euler_characteristic(), 0);
    assert_eq!(rc.dims()[0], 1);
    let bad = Subspace::span(4, &[vec![s(0), s(1), s(0), s(0)], vec![s(0), s(0), s(1), s(0)]]);
    let r2 = Representation { lie_subalgebra: Some(bad), ..r };
    assert!(!validate_rep(&p, &r2).unwrap().subalgebra_closed);
}

#[test]
fn bigrading_is_checked() {
    let p = Presentation::surface(1);
    let rc = rep_cohomology(&p, &Representation::trivial(2, 2)).unwrap();
    let mixed = CohomologyTypes { h1: vec![(1, 0); 8], h2: vec![(1, 1); 4] };
    assert!(matches!(to_formal_dgla(&rc, Some(&mixed)), Err(GroupError::BigradingNotRespected)));
    let short = CohomologyTypes { h1: vec![(1, 0); 3], h2: vec![] };
    assert!(matches!(to_formal_dgla(&rc, Some(&short)), Err(GroupError::TypeCount { .. })));
}
