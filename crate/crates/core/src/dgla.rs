//! Finite-dimensional differential graded Lie algebras in degrees `0..=3`,
//! with splittings, optional double differentials and bigradings, and
//! augmentations `ε: L⁰ → g`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::artin::HodgeType;
use crate::linalg::{
    is_zero_vec, kernel_basis, split_complement, vec_add, vec_scale, vec_sub, zero_vec, BilinearMap, Matrix,
    QuotientCoords, Scalar, Subspace, Vector,
};

pub const MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DglaError {
    #[error("{0} degrees requested, degrees 0..=3 are supported")]
    BadDegreeCount(usize),
    #[error("differential out of degree {degree} is {rows}x{cols}, expected {erows}x{ecols}")]
    BadDifferential { degree: usize, rows: usize, cols: usize, erows: usize, ecols: usize },
    #[error("bracket entry {index}: {reason}")]
    BadBracketEntry { index: usize, reason: String },
    #[error("bigrading in degree {degree} has {found} labels, expected {expected}")]
    BadBigrading { degree: usize, expected: usize, found: usize },
    #[error("splitting map out of degree {degree} has the wrong shape")]
    BadSplitting { degree: usize },
    #[error("complement data in degree {degree} does not split the complex")]
    BadComplement { degree: usize },
    #[error("augmentation: {0}")]
    BadAugmentation(String),
    #[error("ε is not injective on H⁰")]
    NotInjective,
    #[error("transversal is not a complement of ε(H⁰) in g")]
    BadTransversal,
    #[error("operation needs a second differential")]
    NoDoubleStructure,
}

/// One structure constant `[e^i_a, e^j_b] = value ∈ L^{i+j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketEntry {
    pub i: usize,
    pub a: usize,
    pub j: usize,
    pub b: usize,
    pub value: Vector,
}

/// `(−1)^k` as a scalar.
pub fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dgla {
    dims: Vec<usize>,
    d1: Vec<Matrix>,
    d2: Option<Vec<Matrix>>,
    d: Vec<Matrix>,
    bracket: BTreeMap<(usize, usize), BilinearMap>,
    bigrading: Option<Vec<Vec<HodgeType>>>,
}

fn check_differentials(dims: &[usize], ds: &[Matrix]) -> Result<Vec<Matrix>, DglaError> {
    let top = dims.len() - 1;
    if ds.len() != top {
        return Err(DglaError::BadDifferential { degree: ds.len(), rows: 0, cols: 0, erows: 0, ecols: 0 });
    }
    let mut out = Vec::with_capacity(dims.len());
    for (i, m) in ds.iter().enumerate() {
        if m.rows() != dims[i + 1] || m.cols() != dims[i] {
            return Err(DglaError::BadDifferential {
                degree: i,
                rows: m.rows(),
                cols: m.cols(),
                erows: dims[i + 1],
                ecols: dims[i],
            });
        }
        out.push(m.clone());
    }
    out.push(Matrix::zeros(0, dims[top]));
    Ok(out)
}

impl Dgla {
    /// `d1[i]: L^i → L^{i+1}` for `i < top`; likewise `d2`. Bracket pairs that
    /// are not listed are zero, and a listed pair whose mirror is absent gets
    /// the mirror value from graded antisymmetry.
    pub fn new(
        dims: Vec<usize>,
        d1: Vec<Matrix>,
        d2: Option<Vec<Matrix>>,
        entries: &[BracketEntry],
        bigrading: Option<Vec<Vec<HodgeType>>>,
    ) -> Result<Self, DglaError> {
        if dims.is_empty() || dims.len() > MAX_DEGREE + 1 {
            return Err(DglaError::BadDegreeCount(dims.len()));
        }
        let top = dims.len() - 1;
        let mut bracket = BTreeMap::new();
        for i in 0..=top {
            for j in 0..=top - i {
                bracket.insert((i, j), BilinearMap::zero(dims[i], dims[j], dims[i + j]));
            }
        }
        let mut given = std::collections::BTreeSet::new();
        for (idx, e) in entries.iter().enumerate() {
            let bad = |reason: &str| DglaError::BadBracketEntry { index: idx, reason: reason.to_string() };
            if e.i + e.j > top {
                return Err(bad("degree sum exceeds top degree"));
            }
            if e.a >= dims[e.i] || e.b >= dims[e.j] {
                return Err(bad("basis index out of range"));
            }
            if e.value.len() != dims[e.i + e.j] {
                return Err(bad("value has the wrong length"));
            }
            if !given.insert((e.i, e.a, e.j, e.b)) {
                return Err(bad("duplicate entry"));
            }
            bracket.get_mut(&(e.i, e.j)).unwrap().set(e.a, e.b, &e.value);
        }
        for e in entries {
            if !given.contains(&(e.j, e.b, e.i, e.a)) {
                let s = -sign(e.i * e.j);
                bracket.get_mut(&(e.j, e.i)).unwrap().set(e.b, e.a, &vec_scale(&e.value, &s));
            }
        }
        Dgla::from_tables(dims, d1, d2, bracket, bigrading)
    }

    pub fn from_tables(
        dims: Vec<usize>,
        d1: Vec<Matrix>,
        d2: Option<Vec<Matrix>>,
        mut bracket: BTreeMap<(usize, usize), BilinearMap>,
        bigrading: Option<Vec<Vec<HodgeType>>>,
    ) -> Result<Self, DglaError> {
        if dims.is_empty() || dims.len() > MAX_DEGREE + 1 {
            return Err(DglaError::BadDegreeCount(dims.len()));
        }
        let top = dims.len() - 1;
        let d1 = check_differentials(&dims, &d1)?;
        let d2 = d2.map(|d2| check_differentials(&dims, &d2)).transpose()?;
        let d = match &d2 {
            Some(d2) => d1.iter().zip(d2).map(|(a, b)| a.add(b)).collect(),
            None => d1.clone(),
        };
        for i in 0..=top {
            for j in 0..=top - i {
                let b = bracket.entry((i, j)).or_insert_with(|| BilinearMap::zero(dims[i], dims[j], dims[i + j]));
                if b.left_dim() != dims[i] || b.right_dim() != dims[j] || b.out_dim() != dims[i + j] {
                    return Err(DglaError::BadBracketEntry { index: 0, reason: format!("table ({i},{j}) has the wrong shape") });
                }
            }
        }
        bracket.retain(|(i, j), _| i + j <= top);
        if let Some(bg) = &bigrading {
            if bg.len() != dims.len() {
                return Err(DglaError::BadBigrading { degree: bg.len(), expected: dims.len(), found: bg.len() });
            }
            for (k, t) in bg.iter().enumerate() {
                if t.len() != dims[k] {
                    return Err(DglaError::BadBigrading { degree: k, expected: dims[k], found: t.len() });
                }
            }
        }
        Ok(Dgla { dims, d1, d2, d, bracket, bigrading })
    }

    /// `A ⊗ g` for a commutative bigraded dga `A` (given by `dims`, the
    /// differentials and `products[(i, j)]`) and a Lie algebra `g`, with
    /// `[a ⊗ u, b ⊗ v] = ab ⊗ [u, v]` and basis index `a · dim g + u`.
    pub fn tensor_lie(
        dims: Vec<usize>,
        d1: Vec<Matrix>,
        d2: Option<Vec<Matrix>>,
        products: &BTreeMap<(usize, usize), BilinearMap>,
        bigrading: Option<Vec<Vec<HodgeType>>>,
        lie: &BilinearMap,
    ) -> Result<Self, DglaError> {
        let g = lie.out_dim();
        let id = Matrix::identity(g);
        let lift = |ds: Vec<Matrix>| ds.iter().map(|m| m.kron(&id)).collect::<Vec<_>>();
        let big: Vec<usize> = dims.iter().map(|d| d * g).collect();
        let mut bracket = BTreeMap::new();
        for (&(i, j), t) in products {
            if i + j >= dims.len() {
                continue;
            }
            let mut out = BilinearMap::zero(big[i], big[j], big[i + j]);
            for a in 0..dims[i] {
                for b in 0..dims[j] {
                    let ab = t.on_basis(a, b);
                    if ab.is_empty() {
                        continue;
                    }
                    for u in 0..g {
                        for v in 0..g {
                            let uv = lie.on_basis(u, v);
                            let mut val = zero_vec(big[i + j]);
                            for (c, x) in ab {
                                for (w, y) in uv {
                                    val[c * g + w] += x * y;
                                }
                            }
                            out.set(a * g + u, b * g + v, &val);
                        }
                    }
                }
            }
            bracket.insert((i, j), out);
        }
        let bigrading = bigrading.map(|bg| bg.iter().map(|t| t.iter().flat_map(|&x| std::iter::repeat_n(x, g)).collect()).collect());
        Dgla::from_tables(big, lift(d1), d2.map(lift), bracket, bigrading)
    }

    /// Zero differential and zero bracket.
    pub fn abelian(dims: Vec<usize>) -> Self {
        let d1 = (0..dims.len().saturating_sub(1)).map(|i| Matrix::zeros(dims[i + 1], dims[i])).collect();
        Dgla::new(dims, d1, None, &[], None).expect("abelian data is well formed")
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims.get(i).copied().unwrap_or(0)
    }

    /// Total differential out of degree `i`.
    pub fn d(&self, i: usize) -> &Matrix {
        &self.d[i]
    }

    pub fn d1(&self, i: usize) -> &Matrix {
        &self.d1[i]
    }

    pub fn d2(&self, i: usize) -> Option<&Matrix> {
        self.d2.as_ref().map(|d| &d[i])
    }

    pub fn has_double(&self) -> bool {
        self.d2.is_some()
    }

    pub fn bigrading(&self) -> Option<&Vec<Vec<HodgeType>>> {
        self.bigrading.as_ref()
    }

    pub fn basis_type(&self, i: usize, a: usize) -> Option<HodgeType> {
        self.bigrading.as_ref().map(|b| b[i][a])
    }

    pub fn bracket_table(&self, i: usize, j: usize) -> Option<&BilinearMap> {
        self.bracket.get(&(i, j))
    }

    /// `[x, y]` for `x ∈ L^i`, `y ∈ L^j`; zero above the top degree.
    pub fn bracket(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Vector {
        match self.bracket.get(&(i, j)) {
            Some(b) => b.apply(x, y),
            None => zero_vec(self.dim(i + j)),
        }
    }

    pub fn bracket_basis(&self, i: usize, a: usize, j: usize, b: usize) -> Vector {
        match self.bracket.get(&(i, j)) {
            Some(t) => t.on_basis_dense(a, b),
            None => zero_vec(self.dim(i + j)),
        }
    }

    /// Total differential applied to `x ∈ L^i`.
    pub fn apply_d(&self, i: usize, x: &[Scalar]) -> Vector {
        self.d[i].mul_vec(x)
    }

    /// Splits `x ∈ L^i` into its bigraded components.
    pub fn type_components(&self, i: usize, x: &[Scalar]) -> Option<BTreeMap<HodgeType, Vector>> {
        let bg = self.bigrading.as_ref()?;
        let mut out: BTreeMap<HodgeType, Vector> = BTreeMap::new();
        for (a, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.entry(bg[i][a]).or_insert_with(|| zero_vec(x.len()))[a] = c.clone();
        }
        Some(out)
    }

    /// The type of `x` if it is pure (and nonzero).
    pub fn pure_type(&self, i: usize, x: &[Scalar]) -> Option<HodgeType> {
        let comps = self.type_components(i, x)?;
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }

    pub fn direct_sum(&self, o: &Dgla) -> Dgla {
        let top = self.top_degree().max(o.top_degree());
        let dims: Vec<usize> = (0..=top).map(|i| self.dim(i) + o.dim(i)).collect();
        let pad = |l: &Dgla, ds: &[Matrix], i: usize| {
            if i < l.top_degree() {
                ds[i].clone()
            } else {
                Matrix::zeros(l.dim(i + 1), l.dim(i))
            }
        };
        let d1 = (0..top).map(|i| pad(self, &self.d1, i).direct_sum(&pad(o, &o.d1, i))).collect();
        let d2 = match (&self.d2, &o.d2) {
            (None, None) => None,
            _ => Some(
                (0..top)
                    .map(|i| {
                        let a = self.d2.as_ref().map(|d| pad(self, d, i)).unwrap_or_else(|| Matrix::zeros(self.dim(i + 1), self.dim(i)));
                        let b = o.d2.as_ref().map(|d| pad(o, d, i)).unwrap_or_else(|| Matrix::zeros(o.dim(i + 1), o.dim(i)));
                        a.direct_sum(&b)
                    })
                    .collect(),
            ),
        };
        let mut bracket = BTreeMap::new();
        for i in 0..=top {
            for j in 0..=top - i {
                let mut t = BilinearMap::zero(dims[i], dims[j], dims[i + j]);
                for (l, ro, co, oo) in [(self, 0, 0, 0), (o, self.dim(i), self.dim(j), self.dim(i + j))] {
                    if let Some(src) = l.bracket.get(&(i, j)) {
                        for a in 0..l.dim(i) {
                            for b in 0..l.dim(j) {
                                let mut v = zero_vec(dims[i + j]);
                                for (g, s) in src.on_basis(a, b) {
                                    v[oo + g] = s.clone();
                                }
                                t.set(ro + a, co + b, &v);
                            }
                        }
                    }
                }
                bracket.insert((i, j), t);
            }
        }
        let bigrading = match (&self.bigrading, &o.bigrading) {
            (Some(a), Some(b)) => Some(
                (0..=top)
                    .map(|i| {
                        let mut v = a.get(i).cloned().unwrap_or_default();
                        v.extend(b.get(i).cloned().unwrap_or_default());
                        v
                    })
                    .collect(),
            ),
            _ => None,
        };
        Dgla::from_tables(dims, d1, d2, bracket, bigrading).expect("direct sum of valid data")
    }

    /// Exhaustive check of every structural identity on basis elements.
    pub fn validate(&self) -> DglaReport {
        let mut rep = DglaReport {
            d_squared: true,
            antisymmetry: true,
            jacobi: true,
            leibniz: true,
            double_structure: true,
            bigrading: true,
            witnesses: Vec::new(),
        };
        let top = self.top_degree();
        for i in 0..top.saturating_sub(1) {
            if !self.d[i + 1].mul(&self.d[i]).is_zero() {
                rep.d_squared = false;
                rep.witnesses.push(format!("d∘d ≠ 0 on L^{i}"));
            }
            if let Some(d2) = &self.d2 {
                let ok = self.d1[i + 1].mul(&self.d1[i]).is_zero()
                    && d2[i + 1].mul(&d2[i]).is_zero()
                    && self.d1[i + 1].mul(&d2[i]).add(&d2[i + 1].mul(&self.d1[i])).is_zero();
                if !ok {
                    rep.double_structure = false;
                    rep.witnesses.push(format!("d1² , d2² or d1d2 + d2d1 nonzero on L^{i}"));
                }
            }
        }
        for i in 0..=top {
            for j in 0..=top - i {
                for a in 0..self.dims[i] {
                    for b in 0..self.dims[j] {
                        let xy = self.bracket_basis(i, a, j, b);
                        let yx = self.bracket_basis(j, b, i, a);
                        if vec_add(&xy, &vec_scale(&yx, &sign(i * j))) != zero_vec(xy.len()) && rep.antisymmetry {
                            rep.antisymmetry = false;
                            rep.witnesses.push(format!("antisymmetry fails on L^{i}[{a}], L^{j}[{b}]"));
                        }
                    }
                }
            }
        }
        for i in 0..=top {
            for j in 0..=top - i {
                for k in 0..=top - i - j {
                    for a in 0..self.dims[i] {
                        for b in 0..self.dims[j] {
                            for c in 0..self.dims[k] {
                                if !rep.jacobi {
                                    continue;
                                }
                                let (x, y, z) =
                                    (unit(self.dims[i], a), unit(self.dims[j], b), unit(self.dims[k], c));
                                let lhs = self.bracket(i, &x, j + k, &self.bracket(j, &y, k, &z));
                                let r1 = self.bracket(i + j, &self.bracket(i, &x, j, &y), k, &z);
                                let r2 = self.bracket(j, &y, i + k, &self.bracket(i, &x, k, &z));
                                let rhs = vec_add(&r1, &vec_scale(&r2, &sign(i * j)));
                                if lhs != rhs {
                                    rep.jacobi = false;
                                    rep.witnesses.push(format!("Jacobi fails on L^{i}[{a}], L^{j}[{b}], L^{k}[{c}]"));
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut diffs: Vec<(&str, &Vec<Matrix>)> = vec![("d", &self.d)];
        if let Some(d2) = &self.d2 {
            diffs.push(("d1", &self.d1));
            diffs.push(("d2", d2));
        }
        for (name, ds) in diffs {
            for i in 0..top {
                for j in 0..top - i {
                    for a in 0..self.dims[i] {
                        for b in 0..self.dims[j] {
                            if !rep.leibniz {
                                continue;
                            }
                            let (x, y) = (unit(self.dims[i], a), unit(self.dims[j], b));
                            let lhs = ds[i + j].mul_vec(&self.bracket(i, &x, j, &y));
                            let r1 = self.bracket(i + 1, &ds[i].mul_vec(&x), j, &y);
                            let r2 = self.bracket(i, &x, j + 1, &ds[j].mul_vec(&y));
                            if lhs != vec_add(&r1, &vec_scale(&r2, &sign(i))) {
                                rep.leibniz = false;
                                rep.witnesses.push(format!("{name} is not a derivation on L^{i}[{a}], L^{j}[{b}]"));
                            }
                        }
                    }
                }
            }
        }
        if let Some(bg) = &self.bigrading {
            let mut maps: Vec<(&Vec<Matrix>, HodgeType)> = Vec::new();
            match &self.d2 {
                Some(d2) => {
                    maps.push((&self.d1, (1, 0)));
                    maps.push((d2, (0, 1)));
                }
                None => maps.push((&self.d1, (1, 0))),
            }
            for (ds, shift) in maps {
                for i in 0..top {
                    for r in 0..self.dims[i + 1] {
                        for c in 0..self.dims[i] {
                            let want = (bg[i][c].0 + shift.0, bg[i][c].1 + shift.1);
                            if !ds[i][(r, c)].is_zero() && bg[i + 1][r] != want && rep.bigrading {
                                rep.bigrading = false;
                                rep.witnesses.push(format!("differential out of L^{i}[{c}] has the wrong type"));
                            }
                        }
                    }
                }
            }
            for ((i, j), t) in &self.bracket {
                for a in 0..self.dims[*i] {
                    for b in 0..self.dims[*j] {
                        let want = (bg[*i][a].0 + bg[*j][b].0, bg[*i][a].1 + bg[*j][b].1);
                        if t.on_basis(a, b).iter().any(|(g, _)| bg[i + j][*g] != want) && rep.bigrading {
                            rep.bigrading = false;
                            rep.witnesses.push(format!("bracket of L^{i}[{a}], L^{j}[{b}] does not add types"));
                        }
                    }
                }
            }
        }
        rep
    }

    pub fn cocycles(&self, i: usize) -> Subspace {
        kernel_basis(&self.d[i])
    }

    pub fn coboundaries(&self, i: usize) -> Subspace {
        if i == 0 {
            Subspace::zero(self.dims[0])
        } else {
            Subspace::column_space(&self.d[i - 1])
        }
    }

    /// Cohomology with harmonic representatives `ker d ∩ ker δ` when a
    /// splitting is given, canonical complements of `im d` in `ker d` otherwise.
    pub fn cohomology(&self, s: Option<&Splitting>) -> Cohomology {
        let degrees = (0..=self.top_degree())
            .map(|i| {
                let z = self.cocycles(i);
                let b = self.coboundaries(i);
                let h = match s {
                    Some(s) => z.intersect(&kernel_basis(s.delta(i))),
                    None => split_complement(&b, &z).expect("im d ⊆ ker d"),
                };
                CohomologyDegree::new(z, b, h.basis_vectors())
            })
            .collect();
        Cohomology { degrees }
    }

    /// The algebraic d'd''-lemma criterion degree by degree.
    pub fn check_ddbar(&self) -> Result<DdbarReport, DglaError> {
        let d2 = self.d2.as_ref().ok_or(DglaError::NoDoubleStructure)?;
        for i in 0..=self.top_degree() {
            let n = self.dims[i];
            let kk = kernel_basis(&self.d1[i]).intersect(&kernel_basis(&d2[i]));
            let (im1, im2, im12) = if i == 0 {
                (Subspace::zero(n), Subspace::zero(n), Subspace::zero(n))
            } else {
                let im12 = if i >= 2 {
                    Subspace::column_space(&self.d1[i - 1].mul(&d2[i - 2]))
                } else {
                    Subspace::zero(n)
                };
                (Subspace::column_space(&self.d1[i - 1]), Subspace::column_space(&d2[i - 1]), im12)
            };
            let lhs = kk.intersect(&im1.sum(&im2));
            if let Some(w) = lhs.basis_vectors().into_iter().find(|v| !im12.contains(v)) {
                return Ok(DdbarReport { holds: false, witness: Some((i, w)) });
            }
        }
        Ok(DdbarReport { holds: true, witness: None })
    }

    /// Symmetric map `H¹ × H¹ → H²` induced by the bracket.
    pub fn bracket_on_cohomology(&self, coh: &Cohomology) -> QuadraticMap {
        let h1 = coh.degree(1);
        let h2_dim = coh.dim(2);
        let values = (0..h1.dim())
            .map(|a| {
                (0..h1.dim())
                    .map(|b| {
                        if h2_dim == 0 {
                            return Vec::new();
                        }
                        let v = self.bracket(1, &h1.harmonic()[a], 1, &h1.harmonic()[b]);
                        coh.degree(2).class_coords(&v).expect("bracket of cocycles is a cocycle")
                    })
                    .collect()
            })
            .collect();
        QuadraticMap { h1_dim: h1.dim(), h2_dim, values }
    }

    /// Checks that `maps[i]: sub^i → self^i` is a dgla morphism inducing an
    /// isomorphism on cohomology; returns the induced matrices either way.
    pub fn check_quasi_iso(&self, sub: &Dgla, maps: &[Matrix]) -> QuasiIsoReport {
        let top = self.top_degree().min(sub.top_degree());
        let mut rep = QuasiIsoReport { chain_map: true, bracket_compatible: true, cohomology_iso: true, induced: Vec::new() };
        if maps.len() != top + 1 || maps.iter().enumerate().any(|(i, m)| m.rows() != self.dims[i] || m.cols() != sub.dims[i]) {
            rep.chain_map = false;
            rep.bracket_compatible = false;
            rep.cohomology_iso = false;
            return rep;
        }
        for i in 0..top {
            if self.d[i].mul(&maps[i]) != maps[i + 1].mul(&sub.d[i]) {
                rep.chain_map = false;
            }
        }
        for i in 0..=top {
            for j in 0..=top - i {
                for a in 0..sub.dims[i] {
                    for b in 0..sub.dims[j] {
                        let lhs = maps[i + j].mul_vec(&sub.bracket_basis(i, a, j, b));
                        let rhs = self.bracket(i, &maps[i].col_vec(a), j, &maps[j].col_vec(b));
                        if lhs != rhs {
                            rep.bracket_compatible = false;
                        }
                    }
                }
            }
        }
        if !rep.chain_map {
            rep.cohomology_iso = false;
            return rep;
        }
        let cs = sub.cohomology(None);
        let cl = self.cohomology(None);
        for i in 0..=top {
            let cols: Vec<Vector> = cs
                .degree(i)
                .harmonic()
                .iter()
                .map(|h| cl.degree(i).class_coords(&maps[i].mul_vec(h)).expect("chain maps send cocycles to cocycles"))
                .collect();
            let m = Matrix::from_cols(&cols, cl.dim(i));
            if m.rows() != m.cols() || m.rank() != m.rows() {
                rep.cohomology_iso = false;
            }
            rep.induced.push(m);
        }
        rep
    }
}

fn unit(n: usize, i: usize) -> Vector {
    crate::linalg::unit_vec(n, i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DglaReport {
    pub d_squared: bool,
    pub antisymmetry: bool,
    pub jacobi: bool,
    pub leibniz: bool,
    pub double_structure: bool,
    pub bigrading: bool,
    pub witnesses: Vec<String>,
}

impl DglaReport {
    pub fn passed(&self) -> bool {
        self.d_squared && self.antisymmetry && self.jacobi && self.leibniz && self.double_structure && self.bigrading
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdbarReport {
    pub holds: bool,
    /// degree and offending vector
    pub witness: Option<(usize, Vector)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiIsoReport {
    pub chain_map: bool,
    pub bracket_compatible: bool,
    pub cohomology_iso: bool,
    pub induced: Vec<Matrix>,
}

impl QuasiIsoReport {
    pub fn passed(&self) -> bool {
        self.chain_map && self.bracket_compatible && self.cohomology_iso
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyDegree {
    cocycles: Subspace,
    coboundaries: Subspace,
    harmonic: Vec<Vector>,
    coords: QuotientCoords,
}

impl CohomologyDegree {
    pub fn new(cocycles: Subspace, coboundaries: Subspace, harmonic: Vec<Vector>) -> Self {
        let n = cocycles.ambient_dim();
        let coords = QuotientCoords::new(&Matrix::from_rows(&harmonic, n), &coboundaries);
        CohomologyDegree { cocycles, coboundaries, harmonic, coords }
    }

    pub fn dim(&self) -> usize {
        self.harmonic.len()
    }

    pub fn cocycles(&self) -> &Subspace {
        &self.cocycles
    }

    pub fn coboundaries(&self) -> &Subspace {
        &self.coboundaries
    }

    pub fn harmonic(&self) -> &[Vector] {
        &self.harmonic
    }

    /// Columns are the harmonic representatives.
    pub fn harmonic_matrix(&self) -> Matrix {
        Matrix::from_cols(&self.harmonic, self.cocycles.ambient_dim())
    }

    /// Coordinates of the class of a cocycle in the harmonic basis.
    pub fn class_coords(&self, z: &[Scalar]) -> Option<Vector> {
        self.coords.coords(z)
    }
}

#[derive(Clone, Debug)]
pub struct Cohomology {
    degrees: Vec<CohomologyDegree>,
}

impl Cohomology {
    pub fn from_degrees(degrees: Vec<CohomologyDegree>) -> Self {
        Cohomology { degrees }
    }

    pub fn degree(&self, i: usize) -> &CohomologyDegree {
        &self.degrees[i]
    }

    pub fn dim(&self, i: usize) -> usize {
        self.degrees.get(i).map_or(0, CohomologyDegree::dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(CohomologyDegree::dim).collect()
    }
}

/// Symmetric bilinear `H¹ × H¹ → H²` stored as `values[a][b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticMap {
    pub h1_dim: usize,
    pub h2_dim: usize,
    pub values: Vec<Vec<Vector>>,
}

impl QuadraticMap {
    pub fn zero(h1_dim: usize, h2_dim: usize) -> Self {
        QuadraticMap { h1_dim, h2_dim, values: vec![vec![zero_vec(h2_dim); h1_dim]; h1_dim] }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|r| r.iter().all(|v| is_zero_vec(v)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.h1_dim).all(|a| (0..self.h1_dim).all(|b| self.values[a][b] == self.values[b][a]))
    }

    /// `q(u) = Σ u_a u_b values[a][b]`.
    pub fn eval(&self, u: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.h2_dim);
        for a in 0..self.h1_dim {
            for b in 0..self.h1_dim {
                let c = &u[a] * &u[b];
                if !c.is_zero() {
                    out = vec_add(&out, &vec_scale(&self.values[a][b], &c));
                }
            }
        }
        out
    }

    /// The components of `½ q(Σ tᵢ ηᵢ)` as quadrics in `Sym²`, one per
    /// coordinate of `H²`, in the monomial order of [`crate::artin::monomials`].
    pub fn quadrics(&self) -> Vec<Vector> {
        let monos = crate::artin::monomials(self.h1_dim, 2);
        let half = Scalar::frac(1, 2);
        (0..self.h2_dim)
            .map(|m| {
                monos
                    .iter()
                    .map(|mono| {
                        let (a, b) = (mono[0], mono[1]);
                        if a == b {
                            &self.values[a][a][m] * &half
                        } else {
                            self.values[a][b][m].clone()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `I₂ = im(obs₂ᵗ) ⊂ Sym²`.
    pub fn i2(&self) -> Subspace {
        Subspace::span(crate::artin::binomial(self.h1_dim + 1, 2), &self.quadrics())
    }
}

/// Lie algebra `g` with a map `ε: L⁰ → g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Augmentation {
    g_dim: usize,
    g_bracket: BilinearMap,
    eps: Matrix,
}

/// Bracket of `gl_N` in the basis `E_{ab}` ordered `a·N + b`.
pub fn gl_bracket(n: usize) -> BilinearMap {
    let dim = n * n;
    let mut t = BilinearMap::zero(dim, dim, dim);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let mut v = zero_vec(dim);
                    if b == c {
                        v[a * n + e] += Scalar::one();
                    }
                    if e == a {
                        v[c * n + b] -= Scalar::one();
                    }
                    t.set(a * n + b, c * n + e, &v);
                }
            }
        }
    }
    t
}

impl Augmentation {
    pub fn new(l: &Dgla, g_bracket: BilinearMap, eps: Matrix) -> Result<Self, DglaError> {
        let g_dim = g_bracket.out_dim();
        if g_bracket.left_dim() != g_dim || g_bracket.right_dim() != g_dim {
            return Err(DglaError::BadAugmentation("bracket table of g is not square".into()));
        }
        if eps.rows() != g_dim || eps.cols() != l.dim(0) {
            return Err(DglaError::BadAugmentation(format!(
                "ε must be {}x{}, got {}x{}",
                g_dim,
                l.dim(0),
                eps.rows(),
                eps.cols()
            )));
        }
        Ok(Augmentation { g_dim, g_bracket, eps })
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn g_bracket(&self) -> &BilinearMap {
        &self.g_bracket
    }

    pub fn eps(&self) -> &Matrix {
        &self.eps
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.g_bracket.apply(x, y)
    }

    /// `ε(H⁰)` inside `g`.
    pub fn image_of_h0(&self, l: &Dgla) -> Subspace {
        l.cocycles(0).image(&self.eps)
    }

    pub fn check(&self, l: &Dgla) -> AugmentationReport {
        let mut rep = AugmentationReport {
            lie_map: true,
            g_antisymmetric: true,
            g_jacobi: true,
            injective_on_h0: true,
            witnesses: Vec::new(),
        };
        let g = self.g_dim;
        for a in 0..g {
            for b in 0..g {
                let s = vec_add(&self.g_bracket.on_basis_dense(a, b), &self.g_bracket.on_basis_dense(b, a));
                if !is_zero_vec(&s) && rep.g_antisymmetric {
                    rep.g_antisymmetric = false;
                    rep.witnesses.push(format!("[g{a}, g{b}] + [g{b}, g{a}] ≠ 0"));
                }
                for c in 0..g {
                    if !rep.g_jacobi {
                        break;
                    }
                    let (x, y, z) = (unit(g, a), unit(g, b), unit(g, c));
                    let lhs = self.bracket(&x, &self.bracket(&y, &z));
                    let rhs = vec_add(&self.bracket(&self.bracket(&x, &y), &z), &self.bracket(&y, &self.bracket(&x, &z)));
                    if lhs != rhs {
                        rep.g_jacobi = false;
                        rep.witnesses.push(format!("Jacobi fails in g on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        for a in 0..l.dim(0) {
            for b in 0..l.dim(0) {
                let lhs = self.eps.mul_vec(&l.bracket_basis(0, a, 0, b));
                let rhs = self.bracket(&self.eps.col_vec(a), &self.eps.col_vec(b));
                if lhs != rhs && rep.lie_map {
                    rep.lie_map = false;
                    rep.witnesses.push(format!("ε[x{a}, x{b}] ≠ [εx{a}, εx{b}]"));
                }
            }
        }
        let h0 = l.cocycles(0);
        if self.image_of_h0(l).dim() != h0.dim() {
            rep.injective_on_h0 = false;
            rep.witnesses.push("ε kills a nonzero element of H⁰".into());
        }
        rep
    }

    /// `ad(x)` on `g` as a matrix.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.g_dim).map(|b| self.bracket(x, &unit(self.g_dim, b))).collect();
        Matrix::from_cols(&cols, self.g_dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentationReport {
    pub lie_map: bool,
    pub g_antisymmetric: bool,
    pub g_jacobi: bool,
    pub injective_on_h0: bool,
    pub witnesses: Vec<String>,
}

impl AugmentationReport {
    pub fn passed(&self) -> bool {
        self.lie_map && self.g_antisymmetric && self.g_jacobi && self.injective_on_h0
    }
}

/// Maps `δ: L^i → L^{i−1}`, optionally with `δ_g: g → H⁰ ⊂ L⁰`.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting {
    delta: Vec<Matrix>,
    delta_g: Option<Matrix>,
}

impl Splitting {
    /// `delta[k]: L^{k+1} → L^k` for `k < top`.
    pub fn new(l: &Dgla, delta: Vec<Matrix>) -> Result<Self, DglaError> {
        if delta.len() != l.top_degree() {
            return Err(DglaError::BadSplitting { degree: delta.len() });
        }
        let mut out = vec![Matrix::zeros(0, l.dim(0))];
        for (k, m) in delta.into_iter().enumerate() {
            if m.rows() != l.dim(k) || m.cols() != l.dim(k + 1) {
                return Err(DglaError::BadSplitting { degree: k + 1 });
            }
            out.push(m);
        }
        Ok(Splitting { delta: out, delta_g: None })
    }

    pub fn zero(l: &Dgla) -> Self {
        let delta = (0..l.top_degree()).map(|k| Matrix::zeros(l.dim(k), l.dim(k + 1))).collect();
        Splitting::new(l, delta).unwrap()
    }

    /// Builds δ from complements `C^i` of `ker d` in `L^i` and harmonic
    /// complements `H^i` of `im d` in `ker d`.
    pub fn from_complements(l: &Dgla, complements: &[Subspace], harmonics: &[Subspace]) -> Result<Self, DglaError> {
        let top = l.top_degree();
        if complements.len() != top + 1 || harmonics.len() != top + 1 {
            return Err(DglaError::BadComplement { degree: complements.len().min(harmonics.len()) });
        }
        for i in 0..=top {
            let z = l.cocycles(i);
            let b = l.coboundaries(i);
            let c = &complements[i];
            let h = &harmonics[i];
            if c.ambient_dim() != l.dim(i)
                || h.ambient_dim() != l.dim(i)
                || c.dim() + z.dim() != l.dim(i)
                || !c.intersect(&z).is_zero()
                || !z.contains_subspace(h)
                || h.dim() + b.dim() != z.dim()
                || !h.intersect(&b).is_zero()
            {
                return Err(DglaError::BadComplement { degree: i });
            }
        }
        let mut delta = Vec::with_capacity(top);
        for i in 0..top {
            let cs = complements[i].basis_vectors();
            let mut cols: Vec<Vector> = cs.iter().map(|c| l.apply_d(i, c)).collect();
            cols.extend(harmonics[i + 1].basis_vectors());
            cols.extend(complements[i + 1].basis_vectors());
            let p = Matrix::from_cols(&cols, l.dim(i + 1));
            let pinv = p.inverse().ok_or(DglaError::BadComplement { degree: i + 1 })?;
            let mut qcols = cs.clone();
            qcols.resize(l.dim(i + 1), zero_vec(l.dim(i)));
            let q = Matrix::from_cols(&qcols, l.dim(i));
            delta.push(q.mul(&pinv));
        }
        Splitting::new(l, delta)
    }

    /// Greedy complements from the standard basis.
    pub fn canonical(l: &Dgla) -> Self {
        let full = |i: usize| Subspace::full(l.dim(i));
        let comps: Vec<Subspace> =
            (0..=l.top_degree()).map(|i| split_complement(&l.cocycles(i), &full(i)).unwrap()).collect();
        let harms: Vec<Subspace> = (0..=l.top_degree())
            .map(|i| split_complement(&l.coboundaries(i), &l.cocycles(i)).unwrap())
            .collect();
        Splitting::from_complements(l, &comps, &harms).expect("greedy complements split")
    }

    /// Complements orthogonal for the standard hermitian form.
    pub fn orthogonal(l: &Dgla) -> Self {
        let comps: Vec<Subspace> = (0..=l.top_degree()).map(|i| l.cocycles(i).orthogonal_complement()).collect();
        let harms: Vec<Subspace> = (0..=l.top_degree())
            .map(|i| l.cocycles(i).intersect(&l.coboundaries(i).orthogonal_complement()))
            .collect();
        Splitting::from_complements(l, &comps, &harms).expect("orthogonal complements split")
    }

    /// Adds `δ_g: g → H⁰` inverting `ε` on `H⁰` and killing `transversal`
    /// (default: the orthogonal complement of `ε(H⁰)`).
    pub fn with_delta_g(mut self, l: &Dgla, aug: &Augmentation, transversal: Option<&Subspace>) -> Result<Self, DglaError> {
        let h0 = l.cocycles(0);
        let img = aug.image_of_h0(l);
        if img.dim() != h0.dim() {
            return Err(DglaError::NotInjective);
        }
        let t = match transversal {
            Some(t) => t.clone(),
            None => img.orthogonal_complement(),
        };
        if t.ambient_dim() != aug.g_dim() || t.dim() + img.dim() != aug.g_dim() || !t.intersect(&img).is_zero() {
            return Err(DglaError::BadTransversal);
        }
        let hb = h0.basis_vectors();
        let mut cols: Vec<Vector> = hb.iter().map(|h| aug.eps().mul_vec(h)).collect();
        cols.extend(t.basis_vectors());
        let p = Matrix::from_cols(&cols, aug.g_dim());
        let pinv = p.inverse().ok_or(DglaError::BadTransversal)?;
        let mut qcols = hb;
        qcols.resize(aug.g_dim(), zero_vec(l.dim(0)));
        let q = Matrix::from_cols(&qcols, l.dim(0));
        self.delta_g = Some(q.mul(&pinv));
        Ok(self)
    }

    /// `{v ∈ g : δ_g v = 0}`.
    pub fn transversal(&self) -> Option<Subspace> {
        Some(kernel_basis(self.delta_g.as_ref()?))
    }

    /// δ out of `L^i`.
    pub fn delta(&self, i: usize) -> &Matrix {
        &self.delta[i]
    }

    pub fn delta_g(&self) -> Option<&Matrix> {
        self.delta_g.as_ref()
    }

    pub fn apply(&self, i: usize, x: &[Scalar]) -> Vector {
        self.delta[i].mul_vec(x)
    }

    /// `P = 1 − dδ − δd` on `L^i`.
    pub fn projector(&self, l: &Dgla, i: usize) -> Matrix {
        let n = l.dim(i);
        let mut p = Matrix::identity(n);
        if i > 0 {
            p = p.sub(&l.d(i - 1).mul(&self.delta[i]));
        }
        if i < l.top_degree() {
            p = p.sub(&self.delta[i + 1].mul(l.d(i)));
        }
        p
    }

    /// Every component of δ has type `(−1,0)` or `(0,−1)`.
    pub fn preserves_bigrading(&self, l: &Dgla) -> bool {
        let Some(bg) = l.bigrading() else { return false };
        for i in 1..=l.top_degree() {
            let m = &self.delta[i];
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if m[(r, c)].is_zero() {
                        continue;
                    }
                    let (s, t) = (bg[i][c], bg[i - 1][r]);
                    if t != (s.0 - 1, s.1) && t != (s.0, s.1 - 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn check(&self, l: &Dgla, aug: Option<&Augmentation>) -> SplittingReport {
        let mut rep = SplittingReport {
            delta_squared: true,
            d_delta_d: true,
            delta_d_delta: true,
            decomposition: true,
            delta_g: None,
            witnesses: Vec::new(),
        };
        let top = l.top_degree();
        if self.delta.len() != top + 1 || (0..=top).any(|i| self.delta[i].cols() != l.dim(i)) {
            rep.delta_squared = false;
            rep.witnesses.push("splitting shape does not match the dgla".into());
            return rep;
        }
        for i in 2..=top {
            if !self.delta[i - 1].mul(&self.delta[i]).is_zero() {
                rep.delta_squared = false;
                rep.witnesses.push(format!("δ² ≠ 0 on L^{i}"));
            }
        }
        for i in 0..top {
            let d = l.d(i);
            let dd = &self.delta[i + 1];
            if d.mul(dd).mul(d) != *d {
                rep.d_delta_d = false;
                rep.witnesses.push(format!("dδd ≠ d on L^{i}"));
            }
            if dd.mul(d).mul(dd) != *dd {
                rep.delta_d_delta = false;
                rep.witnesses.push(format!("δdδ ≠ δ on L^{}", i + 1));
            }
        }
        for i in 0..=top {
            let imd = l.coboundaries(i);
            let imdelta = if i < top { Subspace::column_space(&self.delta[i + 1]) } else { Subspace::zero(l.dim(i)) };
            let harm = l.cocycles(i).intersect(&kernel_basis(&self.delta[i]));
            let total = imd.sum(&imdelta).sum(&harm);
            if imd.dim() + imdelta.dim() + harm.dim() != l.dim(i) || !total.is_full() {
                rep.decomposition = false;
                rep.witnesses.push(format!("L^{i} ≠ im d ⊕ im δ ⊕ harmonic"));
            }
        }
        if let (Some(dg), Some(aug)) = (&self.delta_g, aug) {
            let eps = aug.eps();
            let h0 = l.cocycles(0);
            let into_h0 = dg.col_vectors().iter().all(|v| h0.contains(v));
            let a = dg.mul(eps).mul(dg) == *dg;
            let b = h0.basis_vectors().iter().all(|u| eps.mul_vec(&dg.mul_vec(&eps.mul_vec(u))) == eps.mul_vec(u));
            rep.delta_g = Some(into_h0 && a && b);
            if !(into_h0 && a && b) {
                rep.witnesses.push("δ_g fails δ_g ε δ_g = δ_g or ε δ_g ε = ε on H⁰".into());
            }
        }
        rep
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub delta_squared: bool,
    pub d_delta_d: bool,
    pub delta_d_delta: bool,
    pub decomposition: bool,
    pub delta_g: Option<bool>,
    pub witnesses: Vec<String>,
}

impl SplittingReport {
    pub fn passed(&self) -> bool {
        self.delta_squared && self.d_delta_d && self.delta_d_delta && self.decomposition && self.delta_g != Some(false)
    }
}

/// Convenience: does `v` differ from `w` by an element of `sub`?
pub fn congruent(v: &[Scalar], w: &[Scalar], sub: &Subspace) -> bool {
    sub.contains(&vec_sub(v, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn abelian_passes() {
        let l = Dgla::abelian(vec![1, 2, 1]);
        assert!(l.validate().passed());
        assert_eq!(l.cohomology(None).dims(), vec![1, 2, 1]);
        assert!(Splitting::zero(&l).check(&l, None).passed());
        assert!(l.bracket_on_cohomology(&l.cohomology(None)).is_zero());
    }

    #[test]
    fn even_square_fails_antisymmetry() {
        let l = Dgla::new(
            vec![1],
            vec![],
            None,
            &[
                BracketEntry { i: 0, a: 0, j: 0, b: 0, value: vec![s(1)] },
            ],
            None,
        )
        .unwrap();
        let rep = l.validate();
        assert!(!rep.antisymmetry);
        assert!(!rep.witnesses.is_empty());
    }

    #[test]
    fn non_derivation_fails_leibniz() {
        // dx = y and [y, y] = z, so d[x, y] = 0 ≠ [dx, y]
        let l = Dgla::new(
            vec![1, 1, 1],
            vec![Matrix::from_i64(&[&[1]]), Matrix::zeros(1, 1)],
            None,
            &[BracketEntry { i: 1, a: 0, j: 1, b: 0, value: vec![s(1)] }],
            None,
        )
        .unwrap();
        assert!(!l.validate().leibniz);
    }

    #[test]
    fn acyclic_pair() {
        let l = Dgla::new(vec![1, 1], vec![Matrix::from_i64(&[&[1]])], None, &[], None).unwrap();
        assert_eq!(l.cohomology(None).dims(), vec![0, 0]);
        let sp = Splitting::new(&l, vec![Matrix::from_i64(&[&[1]])]).unwrap();
        assert!(sp.check(&l, None).passed());
        assert_eq!(Splitting::canonical(&l), sp);
        let bad = Splitting::new(&l, vec![Matrix::from_i64(&[&[2]])]).unwrap();
        assert!(!bad.check(&l, None).passed());
    }

    #[test]
    fn delta_squared_detected() {
        let l = Dgla::abelian(vec![1, 1, 1]);
        let sp = Splitting::new(&l, vec![Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[1]])]).unwrap();
        assert!(!sp.check(&l, None).delta_squared);
    }

    #[test]
    fn ddbar_examples() {
        let zero = Dgla::new(vec![1, 1], vec![Matrix::zeros(1, 1)], Some(vec![Matrix::zeros(1, 1)]), &[], None).unwrap();
        assert!(zero.check_ddbar().unwrap().holds);
        let bad = Dgla::new(vec![1, 1], vec![Matrix::from_i64(&[&[1]])], Some(vec![Matrix::zeros(1, 1)]), &[], None).unwrap();
        let rep = bad.check_ddbar().unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.witness, Some((1, vec![s(1)])));
        // square e → d1 e, d2 e → d1 d2 e
        let square = Dgla::new(
            vec![1, 2, 1],
            vec![Matrix::from_i64(&[&[1], &[0]]), Matrix::from_i64(&[&[0, -1]])],
            Some(vec![Matrix::from_i64(&[&[0], &[1]]), Matrix::from_i64(&[&[1, 0]])]),
            &[],
            None,
        )
        .unwrap();
        assert!(square.validate().passed());
        assert!(square.check_ddbar().unwrap().holds);
        assert!(zero.direct_sum(&square).check_ddbar().unwrap().holds);
        assert!(Dgla::abelian(vec![1]).check_ddbar().is_err());
    }

    #[test]
    fn orthogonal_splitting_and_projector() {
        let l = Dgla::new(
            vec![2, 2],
            vec![Matrix::from_i64(&[&[1, 1], &[0, 0]])],
            None,
            &[],
            None,
        )
        .unwrap();
        for sp in [Splitting::canonical(&l), Splitting::orthogonal(&l)] {
            assert!(sp.check(&l, None).passed());
            for i in 0..2 {
                let p = sp.projector(&l, i);
                assert_eq!(p.mul(&p), p);
                assert_eq!(p.rank(), l.cohomology(Some(&sp)).dim(i));
            }
        }
    }

    #[test]
    fn augmentation_checks() {
        let l = Dgla::abelian(vec![1, 4, 1]);
        let good = Augmentation::new(&l, gl_bracket(1), Matrix::identity(1)).unwrap();
        assert!(good.check(&l).passed());
        let zero = Augmentation::new(&l, gl_bracket(1), Matrix::zeros(1, 1)).unwrap();
        assert!(!zero.check(&l).injective_on_h0);
        let sp = Splitting::zero(&l).with_delta_g(&l, &good, None).unwrap();
        assert_eq!(sp.check(&l, Some(&good)).delta_g, Some(true));
        assert!(Splitting::zero(&l).with_delta_g(&l, &zero, None).is_err());
    }

    #[test]
    fn gl2_bracket_is_lie() {
        let l = Dgla::abelian(vec![0]);
        let a = Augmentation::new(&l, gl_bracket(2), Matrix::zeros(4, 0)).unwrap();
        let rep = a.check(&l);
        assert!(rep.g_antisymmetric && rep.g_jacobi);
    }
}
