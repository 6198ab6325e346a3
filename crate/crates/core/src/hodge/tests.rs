use std::collections::BTreeMap;

use super::*;
use crate::artin::{quotient_sym, HodgeType};
use crate::dgla::QuadraticMap;
use crate::linalg::{Matrix, Scalar, Subspace};

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn dec(dim: usize, start: i32, steps: &[&[usize]]) -> Filtration {
    let subs = steps.iter().map(|idx| Subspace::coordinate(dim, idx)).collect();
    Filtration::new(dim, Direction::Decreasing, start, subs).unwrap()
}

#[test]
fn trivial_pure_structure() {
    let f = Filtration::trivial(1, Direction::Decreasing, 0);
    let form = PolarizationForm::new(Matrix::identity(1)).unwrap();
    let rep = check_pure_hs(&f, &f, 0, Some(&form));
    assert!(rep.passed());
    assert_eq!(rep.hodge_numbers, vec![(0, 0, 1)]);
}

#[test]
fn non_opposed_fails() {
    let f = Filtration::trivial(1, Direction::Decreasing, 1);
    let g = Filtration::trivial(1, Direction::Decreasing, 0);
    assert!(!check_pure_hs(&f, &g, 0, None).decomposes);
}

#[test]
fn weight_one_polarized() {
    // H^{1,0} = e₀, H^{0,1} = e₁, S = diag(1, −1): (−1)^{p+1} S > 0 on each
    let f = dec(2, 1, &[&[0]]);
    let g = dec(2, 1, &[&[1]]);
    let form = PolarizationForm::new(Matrix::from_i64(&[&[1, 0], &[0, -1]])).unwrap();
    let rep = check_pure_hs(&f, &g, 1, Some(&form));
    assert!(rep.passed(), "{rep:?}");
    let wrong = PolarizationForm::new(Matrix::identity(2)).unwrap();
    let rep = check_pure_hs(&f, &g, 1, Some(&wrong));
    assert!(rep.decomposes && !rep.polarization.unwrap().definite);
    assert!(PolarizationForm::new(Matrix::from_i64(&[&[0, 1], &[0, 0]])).is_err());
}

#[test]
fn positive_definite_examples() {
    assert!(is_positive_definite(&Matrix::from_i64(&[&[2, 1], &[1, 2]])));
    assert!(!is_positive_definite(&Matrix::from_i64(&[&[1, 2], &[2, 1]])));
    let h = Matrix::from_vec(2, 2, vec![s(2), Scalar::i(), -Scalar::i(), s(1)]);
    assert!(is_positive_definite(&h));
}

fn extension() -> TripleFiltered {
    // e₀ of type (0,0), e₁ of type (0, −1); W_{−1} = e₁
    TripleFiltered::split_on_basis(&[(0, 0), (0, -1)])
}

#[test]
fn mhs_and_misaligned_weights() {
    let v = extension();
    assert!(check_mhs(&v).passed());
    let shifted = TripleFiltered::new(
        2,
        Filtration::new(2, Direction::Increasing, 0, vec![Subspace::coordinate(2, &[1])]).unwrap(),
        v.f().clone(),
        v.g().clone(),
    )
    .unwrap();
    assert!(!check_mhs(&shifted).passed());
}

#[test]
fn twist_examples() {
    let v = extension();
    assert_eq!(twist(&v, &Matrix::identity(2)).unwrap(), v);
    // u(e₀) = e₀ + e₁ lowers W
    let u = Matrix::from_i64(&[&[1, 0], &[1, 1]]);
    let t = twist(&v, &u).unwrap();
    assert!(check_mhs(&t).passed());
    assert!(same_graded(&v, &t));
    assert_ne!(t.g(), v.g());
    let bad = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
    assert!(matches!(twist(&v, &bad), Err(HodgeError::NotUnipotent(_))));
}

#[test]
fn dual_negates_weights() {
    let v = TripleFiltered::split_on_basis(&[(1, 0), (0, 1), (-1, 0)]);
    let d = dual(&v);
    assert!(check_mhs(&d).passed());
    let weights: Vec<i32> = d.graded_pieces().iter().map(|p| p.weight).collect();
    assert_eq!(weights, vec![-1, 1]);
    assert_eq!(dual(&d), v);
}

#[test]
fn tensor_and_sym() {
    let v = TripleFiltered::split_on_basis(&[(1, 0), (0, 1)]);
    let t = tensor(&v, &v);
    assert!(check_mhs(&t).passed());
    let s2 = sym_power(&v, 2);
    assert_eq!(s2.dim(), 3);
    let rep = check_mhs(&s2);
    assert!(rep.passed());
    assert_eq!(rep.graded[0].hodge_numbers, vec![(0, 2, 1), (1, 1, 1), (2, 0, 1)]);
}

#[test]
fn mhs_from_graded_pieces() {
    let v = extension();
    let one = Filtration::trivial(2, Direction::Decreasing, 0);
    let rep = graded_by_check(&v, &one).unwrap();
    assert!(rep.hypothesis && rep.conclusion_holds);
    let u = v.w().clone();
    let rep = graded_by_check(&v, &u).unwrap();
    assert_eq!(rep.pieces.len(), 2);
    assert!(rep.hypothesis && rep.conclusion_holds && rep.consistent());
    // F¹ = ⟨e₀ + e₁⟩ on a pure weight-1 space with G¹ = ⟨e₀⟩, U = ⟨e₁⟩ ⊂ V
    let f = Filtration::new(2, Direction::Decreasing, 1, vec![Subspace::span(2, &[vec![s(1), s(1)]])]).unwrap();
    let g = dec(2, 1, &[&[0]]);
    let w = TripleFiltered::pure(1, f, g).unwrap();
    assert!(check_mhs(&w).passed());
    let u = Filtration::new(2, Direction::Decreasing, 1, vec![Subspace::coordinate(2, &[1])]).unwrap();
    let rep = graded_by_check(&w, &u).unwrap();
    assert!(!rep.hypothesis && rep.conclusion_holds);
}

fn free_on(types: &[HodgeType], n: usize) -> crate::artin::GradedArtinAlgebra {
    let vt: Vec<HodgeType> = types.iter().map(|&(p, q)| (-p, -q)).collect();
    quotient_sym(types.len(), &BTreeMap::new(), n, Some(vt)).unwrap()
}

#[test]
fn mhalg_free_algebra() {
    let tangent = TripleFiltered::split_on_basis(&[(-1, 0), (0, -1)]);
    let a = free_on(&[(1, 0), (0, 1)], 2);
    let (m, rep) = mhalg_assemble(&a, &tangent, None, None).unwrap();
    assert!(rep.passed(), "{rep:?}");
    let gr2 = m.graded_pieces();
    assert_eq!(gr2.iter().map(|p| p.weight).collect::<Vec<_>>(), vec![-2, -1, 0]);
    let a1 = free_on(&[(1, 0), (0, 1)], 1);
    let (_, rep) = mhalg_assemble(&a1, &tangent, None, None).unwrap();
    assert!(rep.passed());
}

#[test]
fn mhalg_flags_bad_kernel() {
    // t₀² + t₁² mixes types (−2, 0) and (0, −2)
    let tangent = TripleFiltered::split_on_basis(&[(-1, 0), (0, -1)]);
    let gens: BTreeMap<usize, Vec<Vec<Scalar>>> = [(2, vec![vec![s(1), s(0), s(1)]])].into_iter().collect();
    let a = quotient_sym(2, &gens, 2, None).unwrap();
    let (_, rep) = mhalg_assemble(&a, &tangent, None, None).unwrap();
    assert_eq!(rep.conditions(), [true, true, false, true]);
}

#[test]
fn cone_examples() {
    let obs = QuadraticMap::zero(2, 0);
    let (ring, mhs, rep) = split_mhs_on_cone(&[(1, 0), (0, 1)], &[], &obs, 2).unwrap();
    assert!(rep.passed());
    assert_eq!(ring.dims(), &[1, 2, 3]);
    let pieces = mhs.graded_pieces();
    assert_eq!(pieces[0].weight, -2);
    assert_eq!(rep.graded[0].hodge_numbers, vec![(-2, 0, 1), (-1, -1, 1), (0, -2, 1)]);
    let (r0, m0, _) = split_mhs_on_cone(&[(1, 0)], &[], &QuadraticMap::zero(1, 0), 0).unwrap();
    assert_eq!(r0.total_dim(), 1);
    assert_eq!(m0.graded_pieces()[0].weight, 0);
    let mut bad = QuadraticMap::zero(2, 1);
    bad.values[0][1] = vec![s(1)];
    bad.values[1][0] = vec![s(1)];
    assert!(split_mhs_on_cone(&[(1, 0), (0, 1)], &[(2, 0)], &bad, 2).is_err());
    let (ring, _, rep) = split_mhs_on_cone(&[(1, 0), (0, 1)], &[(1, 1)], &bad, 3).unwrap();
    assert!(rep.passed());
    assert_eq!(ring.dims(), &[1, 2, 2, 2]);
}

#[test]
fn mhalg_reproduces_split_cone() {
    let mut obs = QuadraticMap::zero(2, 1);
    obs.values[0][1] = vec![s(1)];
    obs.values[1][0] = vec![s(1)];
    let (ring, mhs, _) = split_mhs_on_cone(&[(1, 0), (0, 1)], &[(1, 1)], &obs, 3).unwrap();
    let v = mhs.subquotient(&ring.max_ideal_power(2), &ring.max_ideal_power(1)).unwrap();
    let (out, rep) = mhalg_assemble(&ring, &v, None, Some(&mhs)).unwrap();
    assert!(rep.passed(), "{rep:?}");
    let (free_out, rep2) = mhalg_assemble(&ring, &v, None, None).unwrap();
    assert!(rep2.passed());
    assert_eq!(out, mhs);
    assert!(free_out.w().same_as(mhs.w()) && free_out.f().same_as(mhs.f()) && free_out.g().same_as(mhs.g()));
}
