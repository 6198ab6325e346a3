//! Truncated graded Artin local algebras `Gr⁰ ⊕ … ⊕ Grⁿ`.
//!
//! An algebra is stored by the dimensions of its graded pieces and the
//! structure constants of the multiplication `Gr^j × Gr^k → Gr^{j+k}`.
//! Quotients of symmetric algebras additionally remember their monomial
//! presentation, which is what ring maps out of them are defined on.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

pub use crate::linalg::SparseVec;
use crate::linalg::{axpy, is_zero_vec, to_sparse, zero_vec, Matrix, Scalar, Subspace, Vector};

pub type HodgeType = (i32, i32);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArtinError {
    #[error("element has length {found}, algebra has total dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Gr^0 must be one-dimensional, found dimension {0}")]
    BadUnit(usize),
    #[error("multiplication block ({j},{k}) has the wrong shape")]
    BadMultShape { j: usize, k: usize },
    #[error("operation needs a monomial presentation of the source algebra")]
    NoPresentation,
    #[error("ideal generator in degree {degree} has length {found}, expected {expected}")]
    BadGenerator { degree: usize, expected: usize, found: usize },
    #[error("ring map needs {expected} generator images, got {found}")]
    BadRingMap { expected: usize, found: usize },
}

/// Monomials in `nvars` variables of degree `deg`, as sorted multisets of
/// variable indices, in lexicographic order (`t0² < t0t1 < t1²` in index order,
/// i.e. degree-lex with `t0` largest).
pub fn monomials(nvars: usize, deg: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(deg);
    fn rec(nvars: usize, deg: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == deg {
            out.push(cur.clone());
            return;
        }
        for v in start..nvars {
            cur.push(v);
            rec(nvars, deg, v, cur, out);
            cur.pop();
        }
    }
    rec(nvars, deg, 0, &mut cur, &mut out);
    out
}

fn merge_monomials(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut m = Vec::with_capacity(a.len() + b.len());
    m.extend_from_slice(a);
    m.extend_from_slice(b);
    m.sort_unstable();
    m
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// Monomial data for `Sym(V*)/I` truncated at degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPresentation {
    nvars: usize,
    monomials: Vec<Vec<Vec<usize>>>,
    mono_index: Vec<HashMap<Vec<usize>, usize>>,
    /// degree → Sym monomial → coordinates in the quotient basis
    normal_forms: Vec<Vec<SparseVec>>,
    /// degree → quotient basis element → Sym monomial index
    basis_monomials: Vec<Vec<usize>>,
    /// degree → the ideal `I_d` inside `Sym^d`
    ideal: Vec<Subspace>,
    /// degree → generators supplied in that degree (inside `Sym^d`)
    generators: BTreeMap<usize, Subspace>,
    var_types: Option<Vec<HodgeType>>,
}

impl SymPresentation {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self, deg: usize) -> &[Vec<usize>] {
        &self.monomials[deg]
    }

    pub fn monomial_index(&self, deg: usize, m: &[usize]) -> Option<usize> {
        self.mono_index[deg].get(m).copied()
    }

    pub fn normal_form(&self, deg: usize, mono: usize) -> &SparseVec {
        &self.normal_forms[deg][mono]
    }

    pub fn basis_monomial(&self, deg: usize, idx: usize) -> &[usize] {
        &self.monomials[deg][self.basis_monomials[deg][idx]]
    }

    /// `I_d ⊂ Sym^d` in monomial coordinates.
    pub fn ideal_in_degree(&self, deg: usize) -> &Subspace {
        &self.ideal[deg]
    }

    pub fn generators(&self) -> &BTreeMap<usize, Subspace> {
        &self.generators
    }

    pub fn var_types(&self) -> Option<&[HodgeType]> {
        self.var_types.as_deref()
    }

    /// Reduces a `Sym^d` coefficient vector to quotient coordinates.
    pub fn reduce(&self, deg: usize, v: &[Scalar]) -> Vector {
        let dim = self.basis_monomials[deg].len();
        let mut out = zero_vec(dim);
        for (m, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (b, s) in &self.normal_forms[deg][m] {
                out[*b] += c * s;
            }
        }
        out
    }

    /// Lifts quotient coordinates to `Sym^d` via the basis monomials.
    pub fn lift(&self, deg: usize, v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.monomials[deg].len());
        for (b, c) in v.iter().enumerate() {
            out[self.basis_monomials[deg][b]] = c.clone();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedArtinAlgebra {
    n: usize,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    /// (j, k) with j, k ≥ 1 and j + k ≤ n → [a][b] = product in Gr^{j+k}
    mult: BTreeMap<(usize, usize), Vec<Vec<SparseVec>>>,
    presentation: Option<SymPresentation>,
    basis_types: Option<Vec<Vec<HodgeType>>>,
}

/// Per-degree subspaces generating an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct IdealData {
    pub generators_by_degree: BTreeMap<usize, Subspace>,
}

/// Which factor pieces each tensor-product basis element comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLayout {
    /// degree → list of (deg_a, idx_a, deg_b, idx_b)
    pub parts: Vec<Vec<(usize, usize, usize, usize)>>,
}

impl TensorLayout {
    pub fn second_degree(&self, deg: usize, idx: usize) -> usize {
        self.parts[deg][idx].2
    }

    pub fn first_degree(&self, deg: usize, idx: usize) -> usize {
        self.parts[deg][idx].0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub associative: bool,
    pub commutative: bool,
    pub unit: bool,
    pub generated_in_degree_one: bool,
    pub witnesses: Vec<String>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associative && self.commutative && self.unit && self.generated_in_degree_one
    }
}

fn offsets_of(dims: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    for &d in dims {
        off.push(acc);
        acc += d;
    }
    off.push(acc);
    off
}

/// Truncated symmetric algebra on `v_dim` generators.
pub fn sym_truncated(v_dim: usize, n: usize) -> GradedArtinAlgebra {
    quotient_sym(v_dim, &BTreeMap::new(), n, None).expect("free algebra has no generators to check")
}

/// `Sym(V*)/I` with `I_k = I₂ · Sym^{k−2}`.
pub fn quotient_cone(h1_dim: usize, i2: &Subspace, n: usize) -> GradedArtinAlgebra {
    let mut gens = BTreeMap::new();
    if n >= 2 {
        gens.insert(2, i2.basis_vectors());
    }
    quotient_sym(h1_dim, &gens, n, None).expect("I2 lives in Sym^2")
}

/// Quotient of the truncated symmetric algebra by the ideal generated by
/// the given homogeneous elements (`degree → Sym^degree vectors`).
pub fn quotient_sym(
    nvars: usize,
    generators: &BTreeMap<usize, Vec<Vector>>,
    n: usize,
    var_types: Option<Vec<HodgeType>>,
) -> Result<GradedArtinAlgebra, ArtinError> {
    let mut all_monos = Vec::with_capacity(n + 1);
    let mut mono_index = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let ms = monomials(nvars, d);
        let idx: HashMap<Vec<usize>, usize> = ms.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        all_monos.push(ms);
        mono_index.push(idx);
    }
    let mut ideal: Vec<Subspace> = Vec::with_capacity(n + 1);
    let mut gen_spaces = BTreeMap::new();
    for d in 0..=n {
        let sd = all_monos[d].len();
        let mut rows: Vec<Vector> = Vec::new();
        if let Some(gs) = generators.get(&d) {
            for g in gs {
                if g.len() != sd {
                    return Err(ArtinError::BadGenerator { degree: d, expected: sd, found: g.len() });
                }
            }
            let gsp = Subspace::span(sd, gs);
            if !gsp.is_zero() {
                gen_spaces.insert(d, gsp);
            }
            rows.extend(gs.iter().cloned());
        }
        if d >= 1 {
            for r in ideal[d - 1].basis_vectors() {
                for var in 0..nvars {
                    let mut v = zero_vec(sd);
                    for (m, c) in r.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let prod = merge_monomials(&all_monos[d - 1][m], &[var]);
                        v[mono_index[d][&prod]] += c;
                    }
                    rows.push(v);
                }
            }
        }
        ideal.push(Subspace::span(sd, &rows));
    }
    let mut normal_forms = Vec::with_capacity(n + 1);
    let mut basis_monomials = Vec::with_capacity(n + 1);
    let mut dims = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let sd = all_monos[d].len();
        let id = &ideal[d];
        let pivots = id.pivots();
        let mut is_piv = vec![None; sd];
        for (r, &p) in pivots.iter().enumerate() {
            is_piv[p] = Some(r);
        }
        let basis: Vec<usize> = (0..sd).filter(|&m| is_piv[m].is_none()).collect();
        let mut pos = vec![usize::MAX; sd];
        for (b, &m) in basis.iter().enumerate() {
            pos[m] = b;
        }
        let nf: Vec<SparseVec> = (0..sd)
            .map(|m| match is_piv[m] {
                None => vec![(pos[m], Scalar::one())],
                Some(r) => basis
                    .iter()
                    .filter_map(|&c| {
                        let x = &id.basis()[(r, c)];
                        (!x.is_zero()).then(|| (pos[c], -x))
                    })
                    .collect(),
            })
            .collect();
        dims.push(basis.len());
        normal_forms.push(nf);
        basis_monomials.push(basis);
    }
    let pres = SymPresentation {
        nvars,
        monomials: all_monos,
        mono_index,
        normal_forms,
        basis_monomials,
        ideal,
        generators: gen_spaces,
        var_types: var_types.clone(),
    };
    let mut mult = BTreeMap::new();
    for j in 1..=n {
        for k in 1..=n - j {
            let block: Vec<Vec<SparseVec>> = (0..dims[j])
                .map(|a| {
                    (0..dims[k])
                        .map(|b| {
                            let m = merge_monomials(pres.basis_monomial(j, a), pres.basis_monomial(k, b));
                            pres.normal_forms[j + k][pres.mono_index[j + k][&m]].clone()
                        })
                        .collect()
                })
                .collect();
            mult.insert((j, k), block);
        }
    }
    let basis_types = var_types.map(|vt| {
        (0..=n)
            .map(|d| {
                (0..dims[d])
                    .map(|b| {
                        pres.basis_monomial(d, b)
                            .iter()
                            .fold((0, 0), |acc, &v| (acc.0 + vt[v].0, acc.1 + vt[v].1))
                    })
                    .collect()
            })
            .collect()
    });
    let offsets = offsets_of(&dims);
    Ok(GradedArtinAlgebra { n, dims, offsets, mult, presentation: Some(pres), basis_types })
}

impl GradedArtinAlgebra {
    /// Builds an algebra from explicit structure constants.
    /// `mult[(j,k)][a][b]` is a dense vector in `Gr^{j+k}`; every pair
    /// `j, k ≥ 1`, `j + k ≤ n` must be present.
    pub fn from_structure(
        n: usize,
        dims: Vec<usize>,
        mult: &BTreeMap<(usize, usize), Vec<Vec<Vector>>>,
    ) -> Result<Self, ArtinError> {
        if dims.len() != n + 1 {
            return Err(ArtinError::DimensionMismatch { expected: n + 1, found: dims.len() });
        }
        if dims[0] != 1 {
            return Err(ArtinError::BadUnit(dims[0]));
        }
        let mut sparse = BTreeMap::new();
        for j in 1..=n {
            for k in 1..=n - j {
                let block = mult.get(&(j, k)).ok_or(ArtinError::BadMultShape { j, k })?;
                if block.len() != dims[j] || block.iter().any(|r| r.len() != dims[k]) {
                    return Err(ArtinError::BadMultShape { j, k });
                }
                let mut sb = Vec::with_capacity(dims[j]);
                for row in block {
                    let mut sr = Vec::with_capacity(dims[k]);
                    for v in row {
                        if v.len() != dims[j + k] {
                            return Err(ArtinError::BadMultShape { j, k });
                        }
                        sr.push(to_sparse(v));
                    }
                    sb.push(sr);
                }
                sparse.insert((j, k), sb);
            }
        }
        let offsets = offsets_of(&dims);
        Ok(GradedArtinAlgebra { n, dims, offsets, mult: sparse, presentation: None, basis_types: None })
    }

    /// The scalars ℂ viewed as an algebra truncated at `n`.
    pub fn scalars(n: usize) -> Self {
        sym_truncated(0, n)
    }

    pub fn truncation_order(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.offsets[self.n + 1]
    }

    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        (0..=self.n).rev().find(|&k| self.offsets[k] <= idx).unwrap()
    }

    pub fn presentation(&self) -> Option<&SymPresentation> {
        self.presentation.as_ref()
    }

    pub fn basis_types(&self) -> Option<&Vec<Vec<HodgeType>>> {
        self.basis_types.as_ref()
    }

    pub fn basis_type(&self, deg: usize, idx: usize) -> Option<HodgeType> {
        self.basis_types.as_ref().map(|t| t[deg][idx])
    }

    pub fn set_basis_types(&mut self, types: Vec<Vec<HodgeType>>) {
        assert_eq!(types.len(), self.n + 1);
        for (d, t) in types.iter().enumerate() {
            assert_eq!(t.len(), self.dims[d]);
        }
        self.basis_types = Some(types);
    }

    pub fn one(&self) -> Vector {
        let mut v = zero_vec(self.total_dim());
        v[0] = Scalar::one();
        v
    }

    pub fn basis_element(&self, deg: usize, idx: usize) -> Vector {
        let mut v = zero_vec(self.total_dim());
        v[self.offsets[deg] + idx] = Scalar::one();
        v
    }

    /// The same algebra truncated at a lower order.
    pub fn truncate(&self, m: usize) -> GradedArtinAlgebra {
        assert!(m <= self.n);
        let dims = self.dims[..=m].to_vec();
        let mult = self.mult.iter().filter(|((j, k), _)| j + k <= m).map(|(k, v)| (*k, v.clone())).collect();
        let presentation = self.presentation.as_ref().map(|p| SymPresentation {
            nvars: p.nvars,
            monomials: p.monomials[..=m].to_vec(),
            mono_index: p.mono_index[..=m].to_vec(),
            normal_forms: p.normal_forms[..=m].to_vec(),
            basis_monomials: p.basis_monomials[..=m].to_vec(),
            ideal: p.ideal[..=m].to_vec(),
            generators: p.generators.iter().filter(|(d, _)| **d <= m).map(|(d, s)| (*d, s.clone())).collect(),
            var_types: p.var_types.clone(),
        });
        let basis_types = self.basis_types.as_ref().map(|t| t[..=m].to_vec());
        GradedArtinAlgebra { n: m, offsets: offsets_of(&dims), dims, mult, presentation, basis_types }
    }

    /// Product of basis element `a ∈ Gr^j` with `b ∈ Gr^k`, as sparse
    /// coordinates in `Gr^{j+k}`; empty above the truncation order.
    pub fn basis_product(&self, j: usize, a: usize, k: usize, b: usize) -> SparseVec {
        if j + k > self.n {
            return Vec::new();
        }
        if j == 0 {
            return vec![(b, Scalar::one())];
        }
        if k == 0 {
            return vec![(a, Scalar::one())];
        }
        self.mult[&(j, k)][a][b].clone()
    }

    pub fn mult_block(&self, j: usize, k: usize) -> Option<&Vec<Vec<SparseVec>>> {
        self.mult.get(&(j, k))
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, ArtinError> {
        let t = self.total_dim();
        for v in [x, y] {
            if v.len() != t {
                return Err(ArtinError::DimensionMismatch { expected: t, found: v.len() });
            }
        }
        let mut out = zero_vec(t);
        for j in 0..=self.n {
            for a in 0..self.dims[j] {
                let xa = &x[self.offsets[j] + a];
                if xa.is_zero() {
                    continue;
                }
                for k in 0..=self.n - j {
                    for b in 0..self.dims[k] {
                        let yb = &y[self.offsets[k] + b];
                        if yb.is_zero() {
                            continue;
                        }
                        let c = xa * yb;
                        for (g, s) in self.basis_product(j, a, k, b) {
                            out[self.offsets[j + k] + g] += &c * &s;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `W_{−k} = ⊕_{j≥k} Gr^j` for `k = 0..=n+1`.
    pub fn weight_filtration(&self) -> Vec<Subspace> {
        let t = self.total_dim();
        (0..=self.n + 1)
            .map(|k| {
                let idx: Vec<usize> = (self.offsets[k.min(self.n + 1)]..t).collect();
                Subspace::coordinate(t, &idx)
            })
            .collect()
    }

    /// `m^k` computed by repeated multiplication with `m`.
    pub fn max_ideal_power(&self, k: usize) -> Subspace {
        let t = self.total_dim();
        let m_basis: Vec<Vector> = (self.offsets[1]..t)
            .map(|i| {
                let mut v = zero_vec(t);
                v[i] = Scalar::one();
                v
            })
            .collect();
        if k == 0 {
            return Subspace::full(t);
        }
        let mut cur = Subspace::span(t, &m_basis);
        for _ in 1..k {
            let mut prods = Vec::new();
            for x in cur.basis_vectors() {
                for y in &m_basis {
                    prods.push(self.multiply(&x, y).expect("shapes agree"));
                }
            }
            cur = Subspace::span(t, &prods);
        }
        cur
    }

    /// Exhaustive check of the algebra axioms on basis elements.
    pub fn validate(&self) -> AlgebraReport {
        let mut rep = AlgebraReport {
            associative: true,
            commutative: true,
            unit: self.dims.first() == Some(&1),
            generated_in_degree_one: true,
            witnesses: Vec::new(),
        };
        let n = self.n;
        for j in 1..=n {
            for k in 1..=n - j {
                for a in 0..self.dims[j] {
                    for b in 0..self.dims[k] {
                        let ab = sort_sparse(self.basis_product(j, a, k, b));
                        let ba = sort_sparse(self.basis_product(k, b, j, a));
                        if ab != ba && rep.commutative {
                            rep.commutative = false;
                            rep.witnesses.push(format!("commutativity fails on Gr^{j}[{a}] * Gr^{k}[{b}]"));
                        }
                    }
                }
            }
        }
        for j in 1..=n {
            for k in 1..=n - j {
                for l in 1..=n - j - k {
                    for a in 0..self.dims[j] {
                        for b in 0..self.dims[k] {
                            for c in 0..self.dims[l] {
                                let left = self.mul_sparse_basis(&self.basis_product(j, a, k, b), j + k, l, c);
                                let bc = self.basis_product(k, b, l, c);
                                let right = self.mul_basis_sparse(j, a, &bc, k + l);
                                if left != right && rep.associative {
                                    rep.associative = false;
                                    rep.witnesses.push(format!(
                                        "associativity fails on Gr^{j}[{a}], Gr^{k}[{b}], Gr^{l}[{c}]"
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        for k in 1..n {
            let mut prods = Vec::new();
            for a in 0..self.dims[1] {
                for b in 0..self.dims[k] {
                    let mut v = zero_vec(self.dims[k + 1]);
                    for (g, s) in self.basis_product(1, a, k, b) {
                        v[g] += &s;
                    }
                    prods.push(v);
                }
            }
            let span = Subspace::span(self.dims[k + 1], &prods);
            if !span.is_full() {
                rep.generated_in_degree_one = false;
                rep.witnesses.push(format!("Gr^1 * Gr^{k} does not span Gr^{}", k + 1));
            }
        }
        rep
    }

    fn mul_sparse_basis(&self, x: &SparseVec, dx: usize, k: usize, b: usize) -> Vector {
        let mut out = zero_vec(self.dim(dx + k));
        if dx + k > self.n {
            return out;
        }
        for (a, c) in x {
            for (g, s) in self.basis_product(dx, *a, k, b) {
                out[g] += c * &s;
            }
        }
        out
    }

    fn mul_basis_sparse(&self, j: usize, a: usize, y: &SparseVec, dy: usize) -> Vector {
        let mut out = zero_vec(self.dim(j + dy));
        if j + dy > self.n {
            return out;
        }
        for (b, c) in y {
            for (g, s) in self.basis_product(j, a, dy, *b) {
                out[g] += c * &s;
            }
        }
        out
    }

    /// The `k`-th multiplication map `Sym^k(Gr¹) → Gr^k` as a matrix whose
    /// columns are indexed by monomials in [`monomials`] order.
    pub fn mu(&self, k: usize) -> Matrix {
        let v = self.dims[1];
        let monos = monomials(v, k);
        let mut m = Matrix::zeros(self.dim(k), monos.len());
        if k > self.n {
            return m;
        }
        for (col, mono) in monos.iter().enumerate() {
            let mut cur: Vector = vec![Scalar::one()];
            let mut deg = 0;
            for &var in mono {
                let mut next = zero_vec(self.dims[deg + 1]);
                for (a, c) in cur.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (g, s) in self.basis_product(deg, a, 1, var) {
                        next[g] += c * &s;
                    }
                }
                cur = next;
                deg += 1;
            }
            m.set_col(col, &cur);
        }
        m
    }
}

fn sort_sparse(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Tensor product truncated at total degree `n`; returns the layout that
/// records which factor pieces each basis element comes from.
pub fn tensor(a: &GradedArtinAlgebra, b: &GradedArtinAlgebra, n: usize) -> (GradedArtinAlgebra, TensorLayout) {
    let mut parts: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); n + 1];
    for (k, part) in parts.iter_mut().enumerate() {
        for i in 0..=k.min(a.n) {
            let j = k - i;
            if j > b.n {
                continue;
            }
            for ia in 0..a.dims[i] {
                for ib in 0..b.dims[j] {
                    part.push((i, ia, j, ib));
                }
            }
        }
    }
    let index: Vec<HashMap<(usize, usize, usize, usize), usize>> = parts
        .iter()
        .map(|p| p.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect())
        .collect();
    let dims: Vec<usize> = parts.iter().map(Vec::len).collect();
    let mut mult = BTreeMap::new();
    for j in 1..=n {
        for k in 1..=n - j {
            let block: Vec<Vec<SparseVec>> = parts[j]
                .iter()
                .map(|&(i1, a1, j1, b1)| {
                    parts[k]
                        .iter()
                        .map(|&(i2, a2, j2, b2)| {
                            let (ia, jb) = (i1 + i2, j1 + j2);
                            if ia > a.n || jb > b.n {
                                return Vec::new();
                            }
                            let pa = a.basis_product(i1, a1, i2, a2);
                            let pb = b.basis_product(j1, b1, j2, b2);
                            let mut out: SparseVec = Vec::new();
                            for (ga, sa) in &pa {
                                for (gb, sb) in &pb {
                                    let pos = index[j + k][&(ia, *ga, jb, *gb)];
                                    out.push((pos, sa * sb));
                                }
                            }
                            sort_sparse(out)
                        })
                        .collect()
                })
                .collect();
            mult.insert((j, k), block);
        }
    }
    let basis_types = match (&a.basis_types, &b.basis_types) {
        (Some(ta), Some(tb)) => Some(
            parts
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|&(i, ia, j, ib)| {
                            let (x, y) = (ta[i][ia], tb[j][ib]);
                            (x.0 + y.0, x.1 + y.1)
                        })
                        .collect()
                })
                .collect(),
        ),
        _ => None,
    };
    let offsets = offsets_of(&dims);
    (GradedArtinAlgebra { n, dims, offsets, mult, presentation: None, basis_types }, TensorLayout { parts })
}

impl IdealData {
    pub fn new() -> Self {
        IdealData::default()
    }

    /// The homogeneous pieces of the generated ideal, degree 0..=n, in
    /// `Gr^d` coordinates.
    pub fn saturate(&self, a: &GradedArtinAlgebra) -> Vec<Subspace> {
        let mut out: Vec<Subspace> = Vec::with_capacity(a.n + 1);
        for d in 0..=a.n {
            let mut rows = self
                .generators_by_degree
                .get(&d)
                .map(|s| s.basis_vectors())
                .unwrap_or_default();
            if d >= 1 {
                for x in out[d - 1].basis_vectors() {
                    for t in 0..a.dims[1] {
                        let mut v = zero_vec(a.dims[d]);
                        for (i, c) in x.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            for (g, s) in a.basis_product(d - 1, i, 1, t) {
                                v[g] += c * &s;
                            }
                        }
                        rows.push(v);
                    }
                }
            }
            out.push(Subspace::span(a.dims[d], &rows));
        }
        out
    }

    /// The whole ideal as a subspace of the total space.
    pub fn as_total_subspace(&self, a: &GradedArtinAlgebra) -> Subspace {
        let t = a.total_dim();
        let mut rows = Vec::new();
        for (d, s) in self.saturate(a).iter().enumerate() {
            for v in s.basis_vectors() {
                let mut w = zero_vec(t);
                for (i, c) in v.into_iter().enumerate() {
                    w[a.offsets[d] + i] = c;
                }
                rows.push(w);
            }
        }
        Subspace::span(t, &rows)
    }

    /// Ideal closure: the saturated subspace absorbs multiplication by
    /// every basis element of the algebra.
    pub fn is_closed(&self, a: &GradedArtinAlgebra) -> bool {
        let total = self.as_total_subspace(a);
        let t = a.total_dim();
        for x in total.basis_vectors() {
            for i in 0..t {
                let mut e = zero_vec(t);
                e[i] = Scalar::one();
                let p = a.multiply(&x, &e).expect("shapes agree");
                if !total.contains(&p) {
                    return false;
                }
            }
        }
        true
    }
}

/// A local homomorphism out of a presented algebra, given by generator
/// images in the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingMap {
    pub images: Vec<Vector>,
}

impl RingMap {
    pub fn identity(a: &GradedArtinAlgebra) -> Self {
        RingMap { images: (0..a.dims[1]).map(|i| a.basis_element(1, i)).collect() }
    }

    fn check<'a>(&self, src: &'a GradedArtinAlgebra, tgt: &GradedArtinAlgebra) -> Result<&'a SymPresentation, ArtinError> {
        let pres = src.presentation.as_ref().ok_or(ArtinError::NoPresentation)?;
        if self.images.len() != pres.nvars {
            return Err(ArtinError::BadRingMap { expected: pres.nvars, found: self.images.len() });
        }
        for im in &self.images {
            if im.len() != tgt.total_dim() {
                return Err(ArtinError::DimensionMismatch { expected: tgt.total_dim(), found: im.len() });
            }
        }
        Ok(pres)
    }

    /// Images of every monomial of `Sym^{≤n}` (degree → monomial → vector).
    pub fn monomial_images(&self, src: &GradedArtinAlgebra, tgt: &GradedArtinAlgebra) -> Result<Vec<Vec<Vector>>, ArtinError> {
        let pres = self.check(src, tgt)?;
        let mut out: Vec<Vec<Vector>> = vec![vec![tgt.one()]];
        for d in 1..=src.n {
            let mut imgs = Vec::with_capacity(pres.monomials[d].len());
            for m in &pres.monomials[d] {
                let (last, rest) = m.split_last().unwrap();
                let prev = &out[d - 1][pres.mono_index[d - 1][rest]];
                imgs.push(tgt.multiply(prev, &self.images[*last])?);
            }
            out.push(imgs);
        }
        Ok(out)
    }

    /// Matrix of the induced linear map on total spaces (columns = images
    /// of source basis elements).
    pub fn matrix(&self, src: &GradedArtinAlgebra, tgt: &GradedArtinAlgebra) -> Result<Matrix, ArtinError> {
        let imgs = self.monomial_images(src, tgt)?;
        let pres = src.presentation.as_ref().unwrap();
        let mut m = Matrix::zeros(tgt.total_dim(), src.total_dim());
        for d in 0..=src.n {
            for b in 0..src.dims[d] {
                m.set_col(src.offsets[d] + b, &imgs[d][pres.basis_monomials[d][b]]);
            }
        }
        Ok(m)
    }

    pub fn apply(&self, src: &GradedArtinAlgebra, tgt: &GradedArtinAlgebra, x: &[Scalar]) -> Result<Vector, ArtinError> {
        Ok(self.matrix(src, tgt)?.mul_vec(x))
    }

    /// Every defining relation of the source maps to zero.
    pub fn is_well_defined(&self, src: &GradedArtinAlgebra, tgt: &GradedArtinAlgebra) -> Result<bool, ArtinError> {
        let imgs = self.monomial_images(src, tgt)?;
        let pres = src.presentation.as_ref().unwrap();
        for (d, gens) in &pres.generators {
            if *d > src.n {
                continue;
            }
            for g in gens.basis_vectors() {
                let mut acc = zero_vec(tgt.total_dim());
                for (m, c) in g.iter().enumerate() {
                    axpy(&mut acc, c, &imgs[*d][m]);
                }
                if !is_zero_vec(&acc) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Generator images agree with `t_i` modulo `m²`.
    pub fn is_identity_on_gr1(&self, a: &GradedArtinAlgebra) -> bool {
        self.images.iter().enumerate().all(|(i, im)| {
            im.len() == a.total_dim()
                && im[0].is_zero()
                && (0..a.dims[1]).all(|j| {
                    let want = if i == j { Scalar::one() } else { Scalar::zero() };
                    im[a.offsets[1] + j] == want
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_dims() {
        assert_eq!(sym_truncated(2, 2).dims(), &[1, 2, 3]);
        assert_eq!(sym_truncated(0, 3).dims(), &[1, 0, 0, 0]);
        assert_eq!(sym_truncated(3, 3).dims(), &[1, 3, 6, 10]);
        for v in 1..5 {
            let a = sym_truncated(v, 4);
            for k in 0..=4 {
                assert_eq!(a.dim(k), binomial(v + k - 1, k));
            }
        }
    }

    #[test]
    fn cone_quotients() {
        let i2 = Subspace::span(3, &[vec![Scalar::one(), Scalar::zero(), Scalar::zero()]]);
        let a = quotient_cone(2, &i2, 2);
        assert_eq!(a.dims(), &[1, 2, 2]);
        let a = quotient_cone(2, &Subspace::full(3), 3);
        assert_eq!(a.dims(), &[1, 2, 0, 0]);
        assert_eq!(quotient_cone(2, &Subspace::zero(3), 3).dims(), sym_truncated(2, 3).dims());
    }

    #[test]
    fn products() {
        let a = sym_truncated(2, 2);
        let t1 = a.basis_element(1, 0);
        let t2 = a.basis_element(1, 1);
        assert_eq!(a.multiply(&t1, &t2).unwrap(), a.basis_element(2, 1));
        assert_eq!(a.multiply(&a.one(), &t1).unwrap(), t1);
        let top = a.basis_element(2, 0);
        assert_eq!(a.multiply(&top, &t1).unwrap(), zero_vec(a.total_dim()));
        assert!(a.validate().passed());
    }

    #[test]
    fn tensor_dims() {
        let a = sym_truncated(1, 1);
        let (t, _) = tensor(&a, &a, 2);
        assert_eq!(t.dims(), &[1, 2, 1]);
        assert!(t.validate().passed());
        let b = sym_truncated(2, 3);
        let (t, _) = tensor(&GradedArtinAlgebra::scalars(3), &b, 3);
        assert_eq!(t.dims(), b.dims());
    }
}
