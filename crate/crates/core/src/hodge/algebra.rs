//! Mixed Hodge structures on truncated graded algebras: assembly from the
//! tangent space, the split structure on the cone ring, and the structure on
//! the framed product ring.

use serde::Serialize;

use super::mhs::{check_mhs, sym_power, MhsReport, TripleFiltered};
use super::HodgeError;
use crate::artin::{monomials, quotient_sym, GradedArtinAlgebra, HodgeType, RingMap};
use crate::deformation::{presentation_is_bigraded, GmProduct};
use crate::dgla::QuadraticMap;
use crate::linalg::{kernel_basis, unit_vec, zero_vec, Subspace, Vector};

/// Product of a degree-`i` and a degree-`j` polynomial in monomial coordinates.
fn poly_mul(nv: usize, i: usize, p: &[crate::linalg::Scalar], j: usize, q: &[crate::linalg::Scalar]) -> Vector {
    let mi = monomials(nv, i);
    let mj = monomials(nv, j);
    let target = monomials(nv, i + j);
    let index: std::collections::HashMap<&Vec<usize>, usize> = target.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut out = zero_vec(target.len());
    for (a, x) in p.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (b, y) in q.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let mut m = mi[a].clone();
            m.extend_from_slice(&mj[b]);
            m.sort_unstable();
            out[index[&m]] += x * y;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictnessWitness {
    pub degree: usize,
    pub filtration: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MhalgReport {
    /// (1) the ideal is generated by its quadratic part
    pub quadratic_cone: bool,
    /// (2)
    pub tangent_mhs: MhsReport,
    /// (3) `ker μ²` with induced filtrations is a sub-MHS of `Sym²`
    pub kernel_sub_mhs: bool,
    /// (4) the filtrations on each `Gr^k` are the quotient filtrations
    pub strict: bool,
    pub strictness_witnesses: Vec<StrictnessWitness>,
    pub assembled_check: MhsReport,
    /// `m^k` with induced filtrations is an MHS, for `k = 0..=n`
    pub powers_sub_mhs: Vec<bool>,
}

impl MhalgReport {
    pub fn conditions(&self) -> [bool; 4] {
        [self.quadratic_cone, self.tangent_mhs.passed(), self.kernel_sub_mhs, self.strict]
    }

    pub fn passed(&self) -> bool {
        self.conditions().iter().all(|&c| c) && self.assembled_check.passed() && self.powers_sub_mhs.iter().all(|&c| c)
    }
}

/// Assembles the structure on `⊕ Gr^k` from an MHS on `Gr¹`. With `alg`
/// (filtrations on the algebra in total coordinates), condition (4) compares
/// its induced filtrations on each `Gr^k` with the quotient ones, and the
/// result is `alg` itself.
pub fn mhalg_assemble(
    a: &GradedArtinAlgebra,
    v_mhs: &TripleFiltered,
    k_sub: Option<&Subspace>,
    alg: Option<&TripleFiltered>,
) -> Result<(TripleFiltered, MhalgReport), HodgeError> {
    let n = a.truncation_order();
    let nv = a.dim(1);
    if v_mhs.dim() != nv {
        return Err(HodgeError::DimensionMismatch { expected: nv, found: v_mhs.dim() });
    }
    if let Some(t) = alg {
        if t.dim() != a.total_dim() {
            return Err(HodgeError::DimensionMismatch { expected: a.total_dim(), found: t.dim() });
        }
    }
    let mus: Vec<_> = (0..=n).map(|k| a.mu(k)).collect();
    if mus.iter().enumerate().any(|(k, m)| m.rank() != a.dim(k)) {
        return Err(HodgeError::NotGeneratedInDegreeOne);
    }
    let kernels: Vec<Subspace> = mus.iter().map(kernel_basis).collect();
    let k2 = if n >= 2 { kernels[2].clone() } else { Subspace::zero(monomials(nv, 2).len()) };
    if let Some(k) = k_sub {
        if *k != k2 {
            return Err(HodgeError::KernelMismatch);
        }
    }
    let mut quadratic_cone = kernels.get(1).is_none_or(Subspace::is_zero);
    for k in 3..=n {
        let mut gens = Vec::new();
        for q in k2.basis_vectors() {
            for m in 0..monomials(nv, k - 2).len() {
                gens.push(poly_mul(nv, 2, &q, k - 2, &unit_vec(monomials(nv, k - 2).len(), m)));
            }
        }
        if Subspace::span(kernels[k].ambient_dim(), &gens) != kernels[k] {
            quadratic_cone = false;
        }
    }
    let tangent_mhs = check_mhs(v_mhs);
    let syms: Vec<TripleFiltered> = (0..=n.max(2)).map(|k| sym_power(v_mhs, k)).collect();
    let kernel_sub_mhs = check_mhs(&syms[2].restrict(&k2)?).passed();
    let quotients: Vec<TripleFiltered> = (0..=n).map(|k| syms[k].transport(&mus[k])).collect();
    let mut strictness_witnesses = Vec::new();
    if let Some(t) = alg {
        for k in 1..=n {
            let induced = t.subquotient(&a.max_ideal_power(k + 1), &a.max_ideal_power(k))?;
            let q = &quotients[k];
            for (name, x, y) in [("W", induced.w(), q.w()), ("F", induced.f(), q.f()), ("G", induced.g(), q.g())] {
                if !x.same_as(y) {
                    strictness_witnesses.push(StrictnessWitness { degree: k, filtration: name });
                }
            }
        }
    }
    let strict = strictness_witnesses.is_empty();
    let assembled = match alg {
        Some(t) => t.clone(),
        None => quotients.iter().skip(1).fold(quotients[0].clone(), |acc, q| acc.direct_sum(q)),
    };
    let assembled_check = check_mhs(&assembled);
    let powers_sub_mhs = (0..=n).map(|k| assembled.restrict(&a.max_ideal_power(k)).is_ok_and(|s| check_mhs(&s).passed())).collect();
    let report = MhalgReport { quadratic_cone, tangent_mhs, kernel_sub_mhs, strict, strictness_witnesses, assembled_check, powers_sub_mhs };
    Ok((assembled, report))
}

/// Checks that `obs` maps types `(p, q) × (p', q')` to `(p + p', q + q')`.
pub fn check_obs_types(h1: &[HodgeType], h2: &[HodgeType], obs: &QuadraticMap) -> Result<(), HodgeError> {
    if h1.len() != obs.h1_dim || h2.len() != obs.h2_dim {
        return Err(HodgeError::DimensionMismatch { expected: obs.h1_dim, found: h1.len() });
    }
    for a in 0..obs.h1_dim {
        for b in 0..obs.h1_dim {
            for m in 0..obs.h2_dim {
                let t = (h1[a].0 + h1[b].0, h1[a].1 + h1[b].1);
                if !obs.values[a][b][m].is_zero() && h2[m] != t {
                    return Err(HodgeError::ObsNotTyped { a, b, m });
                }
            }
        }
    }
    Ok(())
}

pub fn types_of_basis(a: &GradedArtinAlgebra) -> Option<Vec<HodgeType>> {
    Some(a.basis_types()?.iter().flatten().copied().collect())
}

/// The cone ring `Sym(H¹*)/(I₂)` truncated at `n` with its split MHS,
/// `W_{−k} = m^k` and `Π_k` of weight `−k`.
pub fn split_mhs_on_cone(
    h1: &[HodgeType],
    h2: &[HodgeType],
    obs: &QuadraticMap,
    n: usize,
) -> Result<(GradedArtinAlgebra, TripleFiltered, MhsReport), HodgeError> {
    check_obs_types(h1, h2, obs)?;
    let vt: Vec<HodgeType> = h1.iter().map(|&(p, q)| (-p, -q)).collect();
    let mut gens = std::collections::BTreeMap::new();
    if n >= 2 && obs.h2_dim > 0 {
        gens.insert(2, obs.quadrics());
    }
    let ring = quotient_sym(h1.len(), &gens, n, Some(vt))?;
    let types = types_of_basis(&ring).expect("variable types were given");
    let mhs = TripleFiltered::split_on_basis(&types);
    let rep = check_mhs(&mhs);
    assert!(rep.passed(), "split structures are mixed Hodge structures");
    Ok((ring, mhs, rep))
}

#[derive(Clone, Debug)]
pub struct OrhoMhs {
    pub algebra: GradedArtinAlgebra,
    pub split: TripleFiltered,
    pub split_check: MhsReport,
    /// `W_{−k}` is the span of monomials with at least `k` factors from `S₂`
    pub weight_is_jadic: bool,
    pub transported: Option<(TripleFiltered, MhalgReport)>,
}

/// Split MHS on `S₁ ⊗ S₂`: `s1_types` are the types of the `S₁` variables
/// (weight `0`, default `(0, 0)`), `h1` those of the harmonic `H¹` basis. With
/// `transport`, `F` and `G` are moved by the ring automorphism and the result
/// is re-checked through [`mhalg_assemble`].
pub fn mhs_on_orho(
    prod: &GmProduct,
    s1_types: Option<&[HodgeType]>,
    h1: &[HodgeType],
    transport: Option<&RingMap>,
) -> Result<OrhoMhs, HodgeError> {
    let c = prod.s1_vars;
    let h = prod.kuranishi.h1_basis.len();
    let s1: Vec<HodgeType> = s1_types.map_or_else(|| vec![(0, 0); c], <[HodgeType]>::to_vec);
    if s1.len() != c {
        return Err(HodgeError::DimensionMismatch { expected: c, found: s1.len() });
    }
    if h1.len() != h {
        return Err(HodgeError::DimensionMismatch { expected: h, found: h1.len() });
    }
    if let Some(i) = s1.iter().position(|&(p, q)| p + q != 0) {
        return Err(HodgeError::GeneratorType(i));
    }
    if let Some(i) = h1.iter().position(|&(p, q)| p + q != 1) {
        return Err(HodgeError::GeneratorType(c + i));
    }
    let mut vt = s1;
    vt.extend(h1.iter().map(|&(p, q)| (-p, -q)));
    let pres = prod.algebra.presentation().expect("products are presented");
    let gens = pres.generators().iter().map(|(k, s)| (*k, s.basis_vectors())).collect();
    let n = prod.algebra.truncation_order();
    let algebra = quotient_sym(c + h, &gens, n, Some(vt))?;
    if !presentation_is_bigraded(&algebra) {
        return Err(HodgeError::IdealNotBigraded);
    }
    let types = types_of_basis(&algebra).expect("variable types were given");
    let split = TripleFiltered::split_on_basis(&types);
    let split_check = check_mhs(&split);
    let weight_is_jadic = (0..=n + 1).all(|k| split.w().get(-(k as i32)) == prod.jadic(k));
    let transported = match transport {
        None => None,
        Some(phi) => {
            let m = phi.matrix(&algebra, &algebra)?;
            if m.rank() != m.rows() {
                return Err(HodgeError::NotAutomorphism);
            }
            let t = TripleFiltered::new(split.dim(), split.w().clone(), split.f().image(&m), split.g().image(&m))?;
            let v = t.subquotient(&algebra.max_ideal_power(2), &algebra.max_ideal_power(1))?;
            let (_, rep) = mhalg_assemble(&algebra, &v, None, Some(&t))?;
            Some((t, rep))
        }
    };
    Ok(OrhoMhs { algebra, split, split_check, weight_is_jadic, transported })
}
