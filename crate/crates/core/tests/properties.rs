mod common;

use common::*;
use gm_deform::deformation::{bch, compose, gauge_act, gauge_fix, kuranishi, mc_defect, GaugeElement, MCElement, Tensor};
use gm_deform::dgla::{Dgla, Splitting};
use gm_deform::group_cohomology::{cochain_complex, cup_square_class, rep_cohomology, to_formal_dgla, Presentation, Representation, Word};
use gm_deform::hodge::{check_mhs, dual, twist, Direction, Filtration, TripleFiltered};
use gm_deform::linalg::{is_zero_vec, vec_scale, Matrix, Scalar, Subspace};
use proptest::prelude::*;
use rand::Rng;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..20, -20i64..20, 1i64..9, 1i64..9).prop_map(|(a, b, c, d)| Scalar::frac(a, c) + Scalar::frac(b, d) * Scalar::i())
}

fn f2_gl2() -> (Dgla, gm_deform::dgla::Augmentation) {
    let id = Matrix::identity(2);
    let rep = Representation { images: vec![id.clone(), id], lie_subalgebra: None };
    to_formal_dgla(&rep_cohomology(&Presentation::free(2), &rep).unwrap(), None).unwrap()
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a.clone());
        prop_assert_eq!((&a * &a.conj()).im().clone(), Scalar::zero().im().clone());
    }

    #[test]
    fn words_reduce_against_inverses(letters in prop::collection::vec(prop_oneof![-3i32..=-1, 1i32..=3], 0..12)) {
        let w = Word::new(&letters).unwrap();
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert_eq!(Word::new(w.letters()).unwrap(), w.clone());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn filtration_duality(weights in prop::collection::vec(-3i32..3, 1..6), seed in any::<u64>(), dec in any::<bool>()) {
        let mut r = rng(seed);
        let n = weights.len();
        let basis = random_invertible(&mut r, n);
        let dir = if dec { Direction::Decreasing } else { Direction::Increasing };
        let vs: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (w, basis.col_vec(i))).collect();
        let f = Filtration::from_weighted(n, dir, &vs);
        prop_assert!(f.dual().dual().same_as(&f));
        let shift = if dec { 1 } else { -1 };
        for p in -5..5 {
            prop_assert_eq!(f.dual().get(p).dim(), n - f.get(shift - p).dim());
        }
    }

    #[test]
    fn subspace_dimensions(seed in any::<u64>(), n in 1usize..6, a in 0usize..5, b in 0usize..5) {
        let mut r = rng(seed);
        let u = Subspace::span(n, &(0..a).map(|_| rand_vec(&mut r, n)).collect::<Vec<_>>());
        let v = Subspace::span(n, &(0..b).map(|_| rand_vec(&mut r, n)).collect::<Vec<_>>());
        prop_assert_eq!(u.sum(&v).dim() + u.intersect(&v).dim(), u.dim() + v.dim());
        prop_assert_eq!(u.annihilator().dim(), n - u.dim());
        prop_assert!(u.sum(&v).contains_subspace(&u) && u.contains_subspace(&u.intersect(&v)));
    }
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn cochain_complex_is_a_complex(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (p, rep) = random_pair(&mut r);
        let c = cochain_complex(&p, &rep).unwrap();
        prop_assert!(c.composite_vanishes());
        let rc = rep_cohomology(&p, &rep).unwrap();
        let d = rc.complex.module.dim() as i64;
        prop_assert_eq!(rc.euler_characteristic(), (1 - p.generators as i64 + p.relations.len() as i64) * d);
    }

    #[test]
    fn cup_square_is_quadratic(seed in any::<u64>(), lambda in scalar()) {
        let mut r = rng(seed);
        let (p, rep) = random_pair(&mut r);
        let rc = rep_cohomology(&p, &rep).unwrap();
        let z1 = rc.cohomology.degree(1).cocycles().basis_vectors();
        prop_assume!(!z1.is_empty());
        let u = z1.iter().fold(vec![Scalar::zero(); z1[0].len()], |acc, z| gm_deform::linalg::vec_add(&acc, &vec_scale(z, &small(&mut r))));
        let q = cup_square_class(&rc, &u).unwrap();
        let q2 = cup_square_class(&rc, &vec_scale(&u, &lambda)).unwrap();
        prop_assert_eq!(q2, vec_scale(&q, &(&lambda * &lambda)));
        let boundary = rc.complex.d0.mul_vec(&rand_vec(&mut r, rc.complex.module.dim()));
        prop_assert!(is_zero_vec(&cup_square_class(&rc, &boundary).unwrap()));
    }

    #[test]
    fn bch_inverse_and_unit(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = toy();
        let a = free(2, 3);
        let br = |u: &[Scalar], v: &[Scalar]| l.bracket(0, u, 0, v);
        let x = random_tensor(&mut r, l.dim(0), &a, 0.5);
        let y = random_tensor(&mut r, l.dim(0), &a, 0.5);
        prop_assert!(bch(&a, &x, &x.neg(), &br).unwrap().is_zero());
        prop_assert_eq!(bch(&a, &x, &Tensor::zero(l.dim(0), &a), &br).unwrap(), x.clone());
        let xy = bch(&a, &x, &y, &br).unwrap();
        prop_assert_eq!(bch(&a, &y.neg(), &x.neg(), &br).unwrap(), xy.neg());
    }

    #[test]
    fn gauge_action_is_an_action(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (l, aug) = f2_gl2();
        let a = free(2, 2);
        let sp = Splitting::orthogonal(&l).with_delta_g(&l, &aug, None).unwrap();
        let kur = kuranishi(&l, &sp, Some(&aug), 2, false).unwrap();
        let mut images = Vec::new();
        for _ in 0..kur.ring.dim(1) {
            let mut v = rand_vec(&mut r, a.total_dim());
            v[0] = Scalar::zero();
            images.push(v);
        }
        let phi = gm_deform::artin::RingMap { images }.matrix(&kur.ring, &a).unwrap();
        let x = MCElement { value: kur.universal.value.map_ring(&phi, &a), framing: Some(random_tensor(&mut r, aug.g_dim(), &a, 0.5)) };
        prop_assert!(mc_defect(&l, &a, &x).unwrap().is_zero());
        let lam = GaugeElement { lambda: random_tensor(&mut r, l.dim(0), &a, 0.5) };
        let mu = GaugeElement { lambda: random_tensor(&mut r, l.dim(0), &a, 0.5) };
        let step = gauge_act(&l, &a, Some(&aug), &mu, &x).unwrap();
        prop_assert!(mc_defect(&l, &a, &step).unwrap().is_zero());
        let two = gauge_act(&l, &a, Some(&aug), &lam, &step).unwrap();
        let once = gauge_act(&l, &a, Some(&aug), &compose(&l, &a, &lam, &mu).unwrap(), &x).unwrap();
        prop_assert_eq!(&two, &once);
        let (z, t) = gauge_fix(&l, &a, &sp, Some(&aug), &x).unwrap();
        prop_assert_eq!(gauge_act(&l, &a, Some(&aug), &t, &x).unwrap(), z);
    }

    #[test]
    fn twists_and_duals_keep_mhs(seed in any::<u64>(), types in prop::collection::vec((-2i32..2, -2i32..2), 1..6)) {
        let mut r = rng(seed);
        let v = TripleFiltered::split_on_basis(&types);
        prop_assert!(check_mhs(&v).passed());
        prop_assert!(check_mhs(&dual(&v)).passed());
        let n = types.len();
        let mut u = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                if types[i].0 + types[i].1 < types[j].0 + types[j].1 && r.gen_bool(0.7) {
                    u[(i, j)] = small(&mut r);
                }
            }
        }
        let t = twist(&v, &u).unwrap();
        prop_assert!(check_mhs(&t).passed());
        prop_assert!(check_mhs(&dual(&t)).passed());
    }

    #[test]
    fn cone_rings_are_algebras(seed in any::<u64>(), h1 in 1usize..4, h2 in 0usize..3) {
        let mut r = rng(seed);
        let mut q = gm_deform::dgla::QuadraticMap::zero(h1, h2);
        q.values = random_symmetric(&mut r, h1, h2);
        let ring = gm_deform::artin::quotient_cone(h1, &q.i2(), 3);
        prop_assert!(ring.validate().passed());
        prop_assert_eq!(ring.dim(1), h1);
    }
}
