//! Finite filtrations stored as explicit flags of subspaces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::HodgeError;
use crate::linalg::{split_complement, Matrix, QuotientCoords, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// `steps[i]` is the term of index `start + i`. Below `start` a decreasing
/// filtration is everything and an increasing one is zero; past the last
/// step it is the other way round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FiltrationRepr", into = "FiltrationRepr")]
pub struct Filtration {
    dim: usize,
    direction: Direction,
    start: i32,
    steps: Vec<Subspace>,
}

#[derive(Serialize, Deserialize)]
struct FiltrationRepr {
    direction: Direction,
    dim: usize,
    steps: BTreeMap<i32, Vec<Vector>>,
}

impl TryFrom<FiltrationRepr> for Filtration {
    type Error = HodgeError;
    fn try_from(r: FiltrationRepr) -> Result<Self, HodgeError> {
        let start = r.steps.keys().next().copied().unwrap_or(0);
        let mut steps = Vec::with_capacity(r.steps.len());
        for (i, (&k, vs)) in r.steps.iter().enumerate() {
            if k != start + i as i32 {
                return Err(HodgeError::IndexGap(k));
            }
            if vs.iter().any(|v| v.len() != r.dim) {
                return Err(HodgeError::DimensionMismatch { expected: r.dim, found: vs.iter().map(Vec::len).find(|&l| l != r.dim).unwrap() });
            }
            steps.push(Subspace::span(r.dim, vs));
        }
        Filtration::new(r.dim, r.direction, start, steps)
    }
}

impl From<Filtration> for FiltrationRepr {
    fn from(f: Filtration) -> Self {
        let steps = f.steps.iter().enumerate().map(|(i, s)| (f.start + i as i32, s.basis_vectors())).collect();
        FiltrationRepr { direction: f.direction, dim: f.dim, steps }
    }
}

impl Filtration {
    /// Canonical form: no leading steps equal to the constant value below,
    /// and exactly one trailing step equal to the constant value above.
    fn make(dim: usize, direction: Direction, mut start: i32, mut steps: Vec<Subspace>) -> Self {
        if dim == 0 {
            return Filtration { dim, direction, start: 0, steps: Vec::new() };
        }
        let (below, above) = match direction {
            Direction::Decreasing => (Subspace::full(dim), Subspace::zero(dim)),
            Direction::Increasing => (Subspace::zero(dim), Subspace::full(dim)),
        };
        let lead = steps.iter().take_while(|s| **s == below).count();
        steps.drain(..lead);
        start += lead as i32;
        while steps.last() == Some(&above) {
            steps.pop();
        }
        steps.push(above);
        Filtration { dim, direction, start, steps }
    }

    pub fn new(dim: usize, direction: Direction, start: i32, steps: Vec<Subspace>) -> Result<Self, HodgeError> {
        for s in &steps {
            if s.ambient_dim() != dim {
                return Err(HodgeError::DimensionMismatch { expected: dim, found: s.ambient_dim() });
            }
        }
        for (i, w) in steps.windows(2).enumerate() {
            let ok = match direction {
                Direction::Decreasing => w[0].contains_subspace(&w[1]),
                Direction::Increasing => w[1].contains_subspace(&w[0]),
            };
            if !ok {
                return Err(HodgeError::NotNested(start + i as i32 + 1));
            }
        }
        Ok(Filtration::make(dim, direction, start, steps))
    }

    /// The filtration with one jump: everything up to `p` (decreasing) or
    /// from `p` on (increasing).
    pub fn trivial(dim: usize, direction: Direction, p: i32) -> Self {
        let start = match direction {
            Direction::Decreasing => p + 1,
            Direction::Increasing => p,
        };
        let steps = match direction {
            Direction::Decreasing => vec![Subspace::zero(dim)],
            Direction::Increasing => vec![Subspace::full(dim)],
        };
        Filtration::make(dim, direction, start, steps)
    }

    /// The split filtration of a weighted family of vectors: `F^p` spanned by
    /// weights `≥ p`, or `W_k` by weights `≤ k`.
    pub fn from_weighted(dim: usize, direction: Direction, vs: &[(i32, Vector)]) -> Self {
        let Some(lo) = vs.iter().map(|(w, _)| *w).min() else {
            return Filtration::make(dim, direction, 0, Vec::new());
        };
        let hi = vs.iter().map(|(w, _)| *w).max().unwrap();
        let steps = (lo..=hi)
            .map(|p| {
                let sel: Vec<Vector> = vs
                    .iter()
                    .filter(|(w, _)| match direction {
                        Direction::Decreasing => *w >= p,
                        Direction::Increasing => *w <= p,
                    })
                    .map(|(_, v)| v.clone())
                    .collect();
                Subspace::span(dim, &sel)
            })
            .collect();
        Filtration::make(dim, direction, lo, steps)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Outside `[lo, hi)` the filtration is constant.
    pub fn bounds(&self) -> (i32, i32) {
        (self.start, self.start + self.steps.len() as i32)
    }

    pub fn get(&self, p: i32) -> Subspace {
        let (lo, hi) = self.bounds();
        let below = p < lo;
        if !below && p < hi {
            return self.steps[(p - lo) as usize].clone();
        }
        match (self.direction, below) {
            (Direction::Decreasing, true) | (Direction::Increasing, false) => Subspace::full(self.dim),
            _ => Subspace::zero(self.dim),
        }
    }

    /// Basis `b_j` with weights so that each term is spanned by the `b_j`
    /// it contains.
    pub fn adapted_basis(&self) -> Vec<(i32, Vector)> {
        let (lo, hi) = self.bounds();
        let mut out = Vec::with_capacity(self.dim);
        let mut prev = Subspace::zero(self.dim);
        let order: Vec<i32> = match self.direction {
            Direction::Decreasing => (lo - 1..=hi).rev().collect(),
            Direction::Increasing => (lo..=hi).collect(),
        };
        for p in order {
            let cur = self.get(p);
            let c = split_complement(&prev, &cur).expect("terms are nested");
            out.extend(c.basis_vectors().into_iter().map(|v| (p, v)));
            prev = cur;
        }
        out
    }

    /// The filtration `m(F)` on the target of `m`.
    pub fn image(&self, m: &Matrix) -> Filtration {
        Filtration::make(m.rows(), self.direction, self.start, self.steps.iter().map(|s| s.image(m)).collect())
    }

    /// `F^p(V*) = (F^{1−p})^⊥` for decreasing, `W_k(V*) = (W_{−k−1})^⊥` for
    /// increasing filtrations, in the dual basis.
    pub fn dual(&self) -> Filtration {
        let (lo, hi) = self.bounds();
        let shift = match self.direction {
            Direction::Decreasing => 1,
            Direction::Increasing => -1,
        };
        let start = shift - hi;
        let steps = (start..shift - lo + 1).map(|p| self.get(shift - p).annihilator()).collect();
        Filtration::make(self.dim, self.direction, start, steps)
    }

    /// Induced filtration on `B/A` in the coordinates of `coords`.
    pub fn subquotient(&self, b: &Subspace, coords: &QuotientCoords, dim: usize) -> Filtration {
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let vs: Vec<Vector> = s.intersect(b).basis_vectors().iter().map(|v| coords.coords(v).expect("inside B")).collect();
                Subspace::span(dim, &vs)
            })
            .collect();
        Filtration::make(dim, self.direction, self.start, steps)
    }

    /// Induced filtration on a subspace, in the coordinates of its stored basis.
    pub fn restrict(&self, sub: &Subspace) -> Filtration {
        let coords = QuotientCoords::new(sub.basis(), &Subspace::zero(self.dim));
        self.subquotient(sub, &coords, sub.dim())
    }

    /// `Σ_{a+b=p} F^a ⊗ F'^b` on `V ⊗ V'` with Kronecker indexing.
    pub fn tensor(&self, o: &Filtration) -> Filtration {
        let mut vs = Vec::with_capacity(self.dim * o.dim);
        for (w1, v1) in self.adapted_basis() {
            for (w2, v2) in o.adapted_basis() {
                let mut v = Vec::with_capacity(v1.len() * v2.len());
                for x in &v1 {
                    for y in &v2 {
                        v.push(x * y);
                    }
                }
                vs.push((w1 + w2, v));
            }
        }
        Filtration::from_weighted(self.dim * o.dim, self.direction, &vs)
    }

    /// The image of `F^{⊗k}` in `Sym^k`, in monomial coordinates.
    pub fn sym_power(&self, k: usize) -> Filtration {
        if k == 0 {
            return Filtration::trivial(1, self.direction, 0);
        }
        let basis = self.adapted_basis();
        let nv = self.dim;
        let monos = crate::artin::monomials(nv, k);
        let dim = monos.len();
        let vs: Vec<(i32, Vector)> = crate::artin::monomials(basis.len(), k)
            .iter()
            .map(|m| {
                let w = m.iter().map(|&j| basis[j].0).sum();
                let factors: Vec<&Vector> = m.iter().map(|&j| &basis[j].1).collect();
                (w, sym_product(nv, &factors, &monos))
            })
            .collect();
        Filtration::from_weighted(dim, self.direction, &vs)
    }

    pub fn is_subfiltration_of(&self, o: &Filtration) -> bool {
        let (a, b) = self.bounds();
        let (c, d) = o.bounds();
        (a.min(c) - 1..=b.max(d)).all(|p| o.get(p).contains_subspace(&self.get(p)))
    }

    pub fn same_as(&self, o: &Filtration) -> bool {
        self.dim == o.dim && self.direction == o.direction && self.is_subfiltration_of(o) && o.is_subfiltration_of(self)
    }
}

/// The product `v₁ ⋯ v_k` of linear forms in `Sym^k` coordinates.
pub fn sym_product(nvars: usize, factors: &[&Vector], monos: &[Vec<usize>]) -> Vector {
    let index: std::collections::HashMap<&Vec<usize>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut acc: BTreeMap<Vec<usize>, crate::linalg::Scalar> = BTreeMap::new();
    acc.insert(Vec::new(), crate::linalg::Scalar::one());
    for f in factors {
        let mut next: BTreeMap<Vec<usize>, crate::linalg::Scalar> = BTreeMap::new();
        for (m, c) in &acc {
            for (v, x) in f.iter().enumerate().take(nvars) {
                if x.is_zero() {
                    continue;
                }
                let mut m2 = m.clone();
                let pos = m2.partition_point(|&y| y <= v);
                m2.insert(pos, v);
                *next.entry(m2).or_insert_with(crate::linalg::Scalar::zero) += c * x;
            }
        }
        acc = next;
    }
    let mut out = crate::linalg::zero_vec(monos.len());
    for (m, c) in acc {
        out[index[&m]] = c;
    }
    out
}
