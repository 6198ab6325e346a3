//! Cohomology of a finitely presented group with coefficients in the adjoint
//! module of a representation, via Fox calculus on the presentation complex.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::artin::HodgeType;
use crate::dgla::{Augmentation, BracketEntry, Cohomology, Dgla, DglaError, QuadraticMap};
use crate::linalg::{vec_add, vec_scale, vec_sub, zero_vec, BilinearMap, Matrix, Scalar, Subspace, Vector};

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("letter 0 in a word; generators are numbered from 1")]
    ZeroLetter,
    #[error("letter {0} refers to a missing generator")]
    UnknownGenerator(i32),
    #[error("{expected} generator images expected, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of generator {0} is not an invertible square matrix of the common size")]
    BadImage(usize),
    #[error("subalgebra lives in dimension {found}, expected {expected}")]
    SubalgebraDimension { expected: usize, found: usize },
    #[error("relation {0} does not evaluate to the identity")]
    RelationFails(usize),
    #[error("subalgebra is not closed under the bracket")]
    SubalgebraNotClosed,
    #[error("subalgebra is not invariant under generator {0}")]
    SubalgebraNotInvariant(usize),
    #[error("{what} types: expected {expected}, found {found}")]
    TypeCount { what: &'static str, expected: usize, found: usize },
    #[error("supplied bigrading is not respected by the bracket")]
    BigradingNotRespected,
    #[error(transparent)]
    Dgla(#[from] DglaError),
}

/// A freely reduced word; letter `i > 0` is generator `i`, `−i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Word(Vec<i32>);

impl TryFrom<Vec<i32>> for Word {
    type Error = GroupError;
    fn try_from(v: Vec<i32>) -> Result<Self, GroupError> {
        Word::new(&v)
    }
}

impl From<Word> for Vec<i32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl Word {
    /// Reduces freely.
    pub fn new(letters: &[i32]) -> Result<Self, GroupError> {
        let mut out: Vec<i32> = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 {
                return Err(GroupError::ZeroLetter);
            }
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Ok(Word(out))
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word::new(&v).expect("letters are nonzero")
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: i32, b: i32) -> Word {
        Word::new(&[a, b, -a, -b]).expect("nonzero letters")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: usize, relations: Vec<Word>) -> Result<Self, GroupError> {
        for w in &relations {
            if let Some(&l) = w.letters().iter().find(|l| l.unsigned_abs() as usize > generators) {
                return Err(GroupError::UnknownGenerator(l));
            }
        }
        Ok(Presentation { generators, relations })
    }

    pub fn free(n: usize) -> Self {
        Presentation { generators: n, relations: Vec::new() }
    }

    /// `⟨a₁, b₁, …, a_g, b_g | Π [aᵢ, bᵢ]⟩` with `aᵢ = 2i − 1`, `bᵢ = 2i`.
    pub fn surface(genus: usize) -> Self {
        let mut r: Vec<i32> = Vec::new();
        for i in 0..genus as i32 {
            r.extend(Word::commutator(2 * i + 1, 2 * i + 2).letters());
        }
        let relations = if genus == 0 { Vec::new() } else { vec![Word::new(&r).unwrap()] };
        Presentation { generators: 2 * genus, relations }
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 - self.generators as i64 + self.relations.len() as i64
    }
}

/// `images[i]` is the image of generator `i + 1`. With `lie_subalgebra`
/// (in `N × N` row-major coordinates) the coefficients are that subalgebra
/// instead of all of `End V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub images: Vec<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie_subalgebra: Option<Subspace>,
}

impl Representation {
    pub fn trivial(generators: usize, n: usize) -> Self {
        Representation { images: vec![Matrix::identity(n); generators], lie_subalgebra: None }
    }

    pub fn dim(&self) -> usize {
        self.images.first().map_or(0, Matrix::rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepReport {
    pub relations: Vec<bool>,
    pub failing_relation: Option<usize>,
    pub subalgebra_closed: bool,
    pub subalgebra_invariant: bool,
    /// first generator whose conjugation does not preserve the subalgebra
    pub non_invariant_generator: Option<usize>,
    pub passed: bool,
}

/// The coefficient module `M` with the images, their inverses and `Ad` on `M`.
#[derive(Clone, Debug)]
pub struct AdModule {
    n: usize,
    basis: Vec<Matrix>,
    sub: Option<Subspace>,
    images: Vec<Matrix>,
    inverses: Vec<Matrix>,
    ad: Vec<Matrix>,
    ad_inv: Vec<Matrix>,
}

fn flat(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

impl AdModule {
    pub fn new(p: &Presentation, r: &Representation) -> Result<Self, GroupError> {
        if r.images.len() != p.generators {
            return Err(GroupError::ImageCount { expected: p.generators, found: r.images.len() });
        }
        let n = r.dim();
        let mut inverses = Vec::with_capacity(p.generators);
        for (i, g) in r.images.iter().enumerate() {
            if g.rows() != n || g.cols() != n {
                return Err(GroupError::BadImage(i));
            }
            inverses.push(g.inverse().ok_or(GroupError::BadImage(i))?);
        }
        let basis: Vec<Matrix> = match &r.lie_subalgebra {
            Some(s) => {
                if s.ambient_dim() != n * n {
                    return Err(GroupError::SubalgebraDimension { expected: n * n, found: s.ambient_dim() });
                }
                s.basis_vectors().into_iter().map(|v| Matrix::from_vec(n, n, v)).collect()
            }
            None => (0..n * n).map(|k| Matrix::from_vec(n, n, crate::linalg::unit_vec(n * n, k))).collect(),
        };
        let mut m = AdModule { n, basis, sub: r.lie_subalgebra.clone(), images: r.images.clone(), inverses, ad: Vec::new(), ad_inv: Vec::new() };
        for i in 0..p.generators {
            let a = m.ad_of(&m.images[i], &m.inverses[i]);
            let b = m.ad_of(&m.inverses[i], &m.images[i]);
            match (a, b) {
                (Some(a), Some(b)) => {
                    m.ad.push(a);
                    m.ad_inv.push(b);
                }
                _ => {
                    m.ad.push(Matrix::identity(m.dim()));
                    m.ad_inv.push(Matrix::identity(m.dim()));
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_dim(&self) -> usize {
        self.n
    }

    /// `M`-coordinates of an `N × N` matrix lying in `M`.
    pub fn coords(&self, x: &Matrix) -> Option<Vector> {
        match &self.sub {
            Some(s) => s.coordinates(&flat(x)),
            None => Some(flat(x)),
        }
    }

    pub fn to_matrix(&self, u: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.n, self.n);
        for (c, b) in u.iter().zip(&self.basis) {
            if !c.is_zero() {
                out.add_assign_scaled(b, c);
            }
        }
        out
    }

    /// `u ↦ g u g⁻¹` on `M`, if `M` is stable.
    fn ad_of(&self, g: &Matrix, gi: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vector>> = self.basis.iter().map(|b| self.coords(&g.mul(b).mul(gi))).collect();
        Some(Matrix::from_cols(&cols?, self.dim()))
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let (x, y) = (self.to_matrix(u), self.to_matrix(v));
        self.coords(&x.mul(&y).sub(&y.mul(&x))).expect("subalgebra is closed")
    }

    pub fn bracket_table(&self) -> BilinearMap {
        let d = self.dim();
        let mut t = BilinearMap::zero(d, d, d);
        for a in 0..d {
            for b in 0..d {
                t.set(a, b, &self.bracket(&crate::linalg::unit_vec(d, a), &crate::linalg::unit_vec(d, b)));
            }
        }
        t
    }

    /// `Ad ρ(l)` for a single letter.
    pub fn ad_letter(&self, l: i32) -> &Matrix {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            &self.ad[i]
        } else {
            &self.ad_inv[i]
        }
    }

    pub fn ad_word(&self, w: &Word) -> Matrix {
        w.letters().iter().fold(Matrix::identity(self.dim()), |acc, &l| acc.mul(self.ad_letter(l)))
    }

    /// `ρ(w)` as an `N × N` matrix.
    pub fn eval(&self, w: &Word) -> Matrix {
        w.letters().iter().fold(Matrix::identity(self.n), |acc, &l| {
            let i = l.unsigned_abs() as usize - 1;
            acc.mul(if l > 0 { &self.images[i] } else { &self.inverses[i] })
        })
    }
}

pub fn validate_rep(p: &Presentation, r: &Representation) -> Result<RepReport, GroupError> {
    let m = AdModule::new(p, r)?;
    let id = Matrix::identity(m.n);
    let relations: Vec<bool> = p.relations.iter().map(|w| m.eval(w) == id).collect();
    let failing_relation = relations.iter().position(|ok| !ok);
    let mut closed = true;
    let mut non_invariant_generator = None;
    if r.lie_subalgebra.is_some() {
        for a in &m.basis {
            for b in &m.basis {
                if m.coords(&a.mul(b).sub(&b.mul(a))).is_none() {
                    closed = false;
                }
            }
        }
        non_invariant_generator = m.images.iter().zip(&m.inverses).position(|(g, gi)| m.ad_of(g, gi).is_none() || m.ad_of(gi, g).is_none());
    }
    let invariant = non_invariant_generator.is_none();
    let passed = failing_relation.is_none() && closed && invariant;
    Ok(RepReport { relations, failing_relation, subalgebra_closed: closed, subalgebra_invariant: invariant, non_invariant_generator, passed })
}

fn require_valid(p: &Presentation, r: &Representation) -> Result<AdModule, GroupError> {
    let rep = validate_rep(p, r)?;
    if let Some(i) = rep.failing_relation {
        return Err(GroupError::RelationFails(i));
    }
    if !rep.subalgebra_closed {
        return Err(GroupError::SubalgebraNotClosed);
    }
    if let Some(i) = rep.non_invariant_generator {
        return Err(GroupError::SubalgebraNotInvariant(i));
    }
    AdModule::new(p, r)
}

/// `∂w/∂x_gen` (generators from 1) evaluated through `Ad ρ`.
pub fn fox_derivative(m: &AdModule, w: &Word, gen: usize) -> Matrix {
    let d = m.dim();
    let mut out = Matrix::zeros(d, d);
    let mut prefix = Matrix::identity(d);
    for &l in w.letters() {
        if l.unsigned_abs() as usize == gen {
            if l > 0 {
                out = out.add(&prefix);
            } else {
                out = out.sub(&prefix.mul(m.ad_letter(l)));
            }
        }
        prefix = prefix.mul(m.ad_letter(l));
    }
    out
}

/// `d⁰: M → M^{gens}` and `d¹: M^{gens} → M^{rels}`, block `i` of a cochain
/// being its value on generator or relation `i`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub module: AdModule,
    pub d0: Matrix,
    pub d1: Matrix,
    pub relations: Vec<Word>,
    pub gens: usize,
    pub rels: usize,
}

impl CochainComplex {
    pub fn composite_vanishes(&self) -> bool {
        self.d1.mul(&self.d0).is_zero()
    }

    /// `u(w)` for a 1-cochain by `u(xy) = u(x) + Ad(x) u(y)`.
    pub fn eval_on_word(&self, u: &[Scalar], w: &Word) -> Vector {
        let d = self.module.dim();
        let mut acc = zero_vec(d);
        let mut prefix = Matrix::identity(d);
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let ui = &u[i * d..(i + 1) * d];
            let val = if l > 0 { ui.to_vec() } else { vec_scale(&self.module.ad_letter(l).mul_vec(ui), &Scalar::from_int(-1)) };
            acc = vec_add(&acc, &prefix.mul_vec(&val));
            prefix = prefix.mul(self.module.ad_letter(l));
        }
        acc
    }
}

pub fn cochain_complex(p: &Presentation, r: &Representation) -> Result<CochainComplex, GroupError> {
    let m = require_valid(p, r)?;
    let d = m.dim();
    let (g, k) = (p.generators, p.relations.len());
    let mut d0 = Matrix::zeros(g * d, d);
    for i in 0..g {
        let blk = m.ad[i].sub(&Matrix::identity(d));
        for a in 0..d {
            for b in 0..d {
                d0[(i * d + a, b)] = blk[(a, b)].clone();
            }
        }
    }
    let mut d1 = Matrix::zeros(k * d, g * d);
    for (ri, w) in p.relations.iter().enumerate() {
        for j in 0..g {
            let f = fox_derivative(&m, w, j + 1);
            for a in 0..d {
                for b in 0..d {
                    d1[(ri * d + a, j * d + b)] = f[(a, b)].clone();
                }
            }
        }
    }
    Ok(CochainComplex { module: m, d0, d1, relations: p.relations.clone(), gens: g, rels: k })
}

#[derive(Clone, Debug)]
pub struct RepCohomology {
    pub complex: CochainComplex,
    /// canonical complements of the coboundaries in the cocycles
    pub cohomology: Cohomology,
}

impl RepCohomology {
    pub fn dims(&self) -> [usize; 3] {
        [self.cohomology.dim(0), self.cohomology.dim(1), self.cohomology.dim(2)]
    }

    pub fn euler_characteristic(&self) -> i64 {
        let [a, b, c] = self.dims();
        a as i64 - b as i64 + c as i64
    }
}

pub fn rep_cohomology(p: &Presentation, r: &Representation) -> Result<RepCohomology, GroupError> {
    let complex = cochain_complex(p, r)?;
    let d = complex.module.dim();
    let dims = vec![d, complex.gens * d, complex.rels * d];
    let l = Dgla::new(dims, vec![complex.d0.clone(), complex.d1.clone()], None, &[], None)?;
    let cohomology = l.cohomology(None);
    Ok(RepCohomology { complex, cohomology })
}

/// The cup product of two 1-cochains as a 2-cochain: on `w = y₁ ⋯ y_m` with
/// prefixes `pᵢ`, `Σ [u(pᵢ), Ad(pᵢ) v(y_{i+1})]` minus
/// `Ad(p_{i−1}) [u(x⁻¹), Ad(x⁻¹) v(x)]` for each letter `yᵢ = x⁻¹`.
pub fn cup_cochain(c: &CochainComplex, u: &[Scalar], v: &[Scalar]) -> Vector {
    let d = c.module.dim();
    let mut out = Vec::with_capacity(c.rels * d);
    for w in &c.relations {
        let mut acc = zero_vec(d);
        let letters = w.letters();
        for i in 1..letters.len() {
            let p = Word(letters[..i].to_vec());
            let y = Word(vec![letters[i]]);
            let up = c.eval_on_word(u, &p);
            let vy = c.module.ad_word(&p).mul_vec(&c.eval_on_word(v, &y));
            acc = vec_add(&acc, &c.module.bracket(&up, &vy));
        }
        for (i, &l) in letters.iter().enumerate().filter(|(_, l)| **l < 0) {
            let x = Word(vec![-l]);
            let ux = c.eval_on_word(u, &x.inverse());
            let vx = c.module.ad_letter(l).mul_vec(&c.eval_on_word(v, &x));
            let term = c.module.ad_word(&Word(letters[..i].to_vec())).mul_vec(&c.module.bracket(&ux, &vx));
            acc = vec_sub(&acc, &term);
        }
        out.extend(acc);
    }
    out
}

/// Independent evaluation: the `t²` coefficient of `w(exp(tu) ρ) ρ(w)⁻¹` over
/// `ℚ(i)[t]/t³`, with `N × N` matrices throughout. `u` must be a cocycle;
/// the result is then half of `u ∪ u` on every relation.
pub fn second_order_cochain(c: &CochainComplex, u: &[Scalar]) -> Vector {
    let m = &c.module;
    let n = m.n;
    let d = m.dim();
    let half = Scalar::frac(1, 2);
    let mut out = Vec::with_capacity(c.rels * d);
    for w in &c.relations {
        // (c0, c1, c2) with value c0 + t c1 + t² c2
        let mut acc = (Matrix::identity(n), Matrix::zeros(n, n), Matrix::zeros(n, n));
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let x = m.to_matrix(&u[i * d..(i + 1) * d]);
            let (g, gi) = (&m.images[i], &m.inverses[i]);
            let f = if l > 0 {
                (g.clone(), x.mul(g), x.mul(&x).mul(g).scale(&half))
            } else {
                (gi.clone(), gi.mul(&x).neg(), gi.mul(&x).mul(&x).scale(&half))
            };
            acc = (
                acc.0.mul(&f.0),
                acc.0.mul(&f.1).add(&acc.1.mul(&f.0)),
                acc.0.mul(&f.2).add(&acc.1.mul(&f.1)).add(&acc.2.mul(&f.0)),
            );
        }
        let winv = m.eval(w).inverse().expect("invertible");
        out.extend(m.coords(&acc.2.mul(&winv)).expect("values lie in M"));
    }
    out
}

/// `values[a][b]` is the class of `½(u_a ∪ u_b + u_b ∪ u_a)`.
pub fn cup_obstruction(rc: &RepCohomology) -> QuadraticMap {
    let h1 = rc.cohomology.degree(1).harmonic().to_vec();
    let h2 = rc.cohomology.dim(2);
    let mut q = QuadraticMap::zero(h1.len(), h2);
    let half = Scalar::frac(1, 2);
    for a in 0..h1.len() {
        for b in a..h1.len() {
            let s = vec_add(&cup_cochain(&rc.complex, &h1[a], &h1[b]), &cup_cochain(&rc.complex, &h1[b], &h1[a]));
            let v = rc.cohomology.degree(2).class_coords(&vec_scale(&s, &half)).expect("cup of cocycles is a cocycle");
            q.values[a][b] = v.clone();
            q.values[b][a] = v;
        }
    }
    q
}

/// `q(u)` for an arbitrary cocycle `u`.
pub fn cup_square_class(rc: &RepCohomology, u: &[Scalar]) -> Option<Vector> {
    rc.cohomology.degree(2).class_coords(&cup_cochain(&rc.complex, u, u))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellDefinedReport {
    /// shifting either argument by a coboundary changes the cup by a coboundary
    pub descends: bool,
    /// prefix-sum value equals twice the second-order expansion
    pub oracle_agrees: bool,
    /// the cup of two cocycles is a cocycle
    pub closed: bool,
}

impl WellDefinedReport {
    pub fn passed(&self) -> bool {
        self.descends && self.oracle_agrees && self.closed
    }
}

/// Tests the cup pairing on the given cocycles and shifts `m, m' ∈ M`.
pub fn check_cup(rc: &RepCohomology, u: &[Scalar], v: &[Scalar], m: &[Scalar], m2: &[Scalar]) -> WellDefinedReport {
    let c = &rc.complex;
    let base = cup_cochain(c, u, v);
    let u2 = vec_add(u, &c.d0.mul_vec(m));
    let v2 = vec_add(v, &c.d0.mul_vec(m2));
    let shifted = cup_cochain(c, &u2, &v2);
    let coboundaries = rc.cohomology.degree(2).coboundaries();
    let descends = coboundaries.contains(&vec_sub(&shifted, &base));
    let closed = rc.cohomology.degree(2).cocycles().contains(&base);
    let two = Scalar::from_int(2);
    let oracle_agrees = [u, v].iter().all(|x| vec_scale(&second_order_cochain(c, x), &two) == cup_cochain(c, x, x))
        && {
            let s = vec_add(u, v);
            let lhs = vec_sub(&vec_sub(&second_order_cochain(c, &s), &second_order_cochain(c, u)), &second_order_cochain(c, v));
            let rhs = vec_add(&base, &cup_cochain(c, v, u));
            vec_scale(&lhs, &two) == rhs
        };
    WellDefinedReport { descends, oracle_agrees, closed }
}

/// Hodge types for bases of `H¹` and `H²`; `H⁰` is of type `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTypes {
    pub h1: Vec<HodgeType>,
    pub h2: Vec<HodgeType>,
}

/// The formal dgla `(H⁰, H¹, H²)` with zero differential and the induced
/// brackets, and `ε: H⁰ ↪ M` the inclusion of invariants.
pub fn to_formal_dgla(rc: &RepCohomology, types: Option<&CohomologyTypes>) -> Result<(Dgla, Augmentation), GroupError> {
    let coh = &rc.cohomology;
    let c = &rc.complex;
    let m = &c.module;
    let d = m.dim();
    let [h0, h1, h2] = rc.dims();
    let (b0, b1, b2) = (coh.degree(0).harmonic(), coh.degree(1).harmonic(), coh.degree(2).harmonic());
    let mut entries = Vec::new();
    let coords0 = |x: &Vector| coh.degree(0).class_coords(x).expect("invariants are closed under the bracket");
    for a in 0..h0 {
        for b in 0..h0 {
            entries.push(BracketEntry { i: 0, a, j: 0, b, value: coords0(&m.bracket(&b0[a], &b0[b])) });
        }
        for (j, basis, blocks) in [(1, b1, c.gens), (2, b2, c.rels)] {
            for (b, z) in basis.iter().enumerate() {
                let mut out = Vec::with_capacity(blocks * d);
                for k in 0..blocks {
                    out.extend(m.bracket(&b0[a], &z[k * d..(k + 1) * d]));
                }
                let value = coh.degree(j).class_coords(&out).expect("H⁰ acts on cocycles");
                entries.push(BracketEntry { i: 0, a, j, b, value });
            }
        }
    }
    let q = cup_obstruction(rc);
    for a in 0..h1 {
        for b in 0..h1 {
            entries.push(BracketEntry { i: 1, a, j: 1, b, value: q.values[a][b].clone() });
        }
    }
    let bigrading = match types {
        None => None,
        Some(t) => {
            if t.h1.len() != h1 {
                return Err(GroupError::TypeCount { what: "H¹", expected: h1, found: t.h1.len() });
            }
            if t.h2.len() != h2 {
                return Err(GroupError::TypeCount { what: "H²", expected: h2, found: t.h2.len() });
            }
            Some(vec![vec![(0, 0); h0], t.h1.clone(), t.h2.clone()])
        }
    };
    let l = Dgla::new(vec![h0, h1, h2], vec![Matrix::zeros(h1, h0), Matrix::zeros(h2, h1)], None, &entries, bigrading)?;
    if types.is_some() && !l.validate().bigrading {
        return Err(GroupError::BigradingNotRespected);
    }
    let eps = Matrix::from_cols(b0, d);
    let aug = Augmentation::new(&l, m.bracket_table(), eps)?;
    Ok((l, aug))
}

#[cfg(test)]
mod tests;
