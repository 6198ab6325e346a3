//! Input documents. Every struct rejects unknown fields, and every error
//! carries the JSON pointer of the offending value.

use std::collections::BTreeMap;
use std::path::Path;

use gm_deform::artin::{quotient_sym, GradedArtinAlgebra, HodgeType};
use gm_deform::deformation::{GaugeElement, Tensor};
use gm_deform::dgla::{gl_bracket, Augmentation, BracketEntry, Dgla};
use gm_deform::group_cohomology::{CohomologyTypes, Presentation, Representation, Word};
use gm_deform::hodge::{PolarizationForm, TripleFiltered};
use gm_deform::linalg::{Matrix, Subspace, Vector};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::report::CliError;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_str(&text)
}

pub fn parse_str<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = pointer_of(e.path());
        CliError::parse(pointer, e.into_inner().to_string())
    })
}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInput {
    pub presentation: PresentationInput,
    pub representation: Representation,
    #[serde(default)]
    pub types: Option<CohomologyTypes>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationInput {
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<i32>>,
}

impl PresentationInput {
    /// Relation words must already be freely reduced.
    pub fn build(&self) -> Result<Presentation, CliError> {
        let mut rels = Vec::with_capacity(self.relations.len());
        for (i, r) in self.relations.iter().enumerate() {
            let ptr = format!("/presentation/relations/{i}");
            let w = Word::new(r).map_err(|e| CliError::invalid(&ptr, e.to_string()))?;
            if w.len() != r.len() {
                return Err(CliError::invalid(&ptr, "relation word is not freely reduced".into()));
            }
            rels.push(w);
        }
        Presentation::new(self.generators, rels).map_err(|e| CliError::invalid("/presentation", e.to_string()))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DglaInput {
    pub dims: Vec<usize>,
    pub d1: Vec<Matrix>,
    #[serde(default)]
    pub d2: Option<Vec<Matrix>>,
    #[serde(default)]
    pub brackets: Vec<BracketInput>,
    #[serde(default)]
    pub bigrading: Option<Vec<Vec<HodgeType>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketInput {
    pub i: usize,
    pub a: usize,
    pub j: usize,
    pub b: usize,
    pub value: Vector,
}

/// `d1` and `d2` may list only the maps out of degrees below the top; a
/// matrix with no rows or no columns may be given as `[]`.
fn fix_shapes(dims: &[usize], ds: &[Matrix]) -> Vec<Matrix> {
    ds.iter()
        .enumerate()
        .map(|(i, m)| {
            let (r, c) = (dims.get(i + 1).copied().unwrap_or(0), dims[i]);
            if m.rows() == 0 && (r == 0 || c == 0) {
                Matrix::zeros(r, c)
            } else {
                m.clone()
            }
        })
        .collect()
}

impl DglaInput {
    pub fn build(&self, ptr: &str) -> Result<Dgla, CliError> {
        if self.dims.is_empty() {
            return Err(CliError::invalid(&format!("{ptr}/dims"), "at least one degree is needed".into()));
        }
        let entries: Vec<BracketEntry> =
            self.brackets.iter().map(|b| BracketEntry { i: b.i, a: b.a, j: b.j, b: b.b, value: b.value.clone() }).collect();
        let d1 = fix_shapes(&self.dims, &self.d1);
        let d2 = self.d2.as_ref().map(|d| fix_shapes(&self.dims, d));
        let l = Dgla::new(self.dims.clone(), d1, d2, &entries, self.bigrading.clone())
            .map_err(|e| CliError::invalid(ptr, e.to_string()))?;
        let rep = l.validate();
        if !rep.passed() {
            return Err(CliError::hypothesis(ptr, "dgla identities fail".into(), serde_json::to_value(&rep).ok()));
        }
        Ok(l)
    }
}

/// `ε: L⁰ → gl_N`, as an `N² × dim L⁰` matrix in the basis `E_ab` ordered `a·N + b`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionInput {
    pub gl: usize,
    pub eps: Matrix,
}

impl ActionInput {
    pub fn build(&self, l: &Dgla, ptr: &str) -> Result<Augmentation, CliError> {
        let eps = if self.eps.rows() == 0 { Matrix::zeros(self.gl * self.gl, l.dim(0)) } else { self.eps.clone() };
        let aug = Augmentation::new(l, gl_bracket(self.gl), eps).map_err(|e| CliError::invalid(ptr, e.to_string()))?;
        let rep = aug.check(l);
        if !rep.lie_map {
            return Err(CliError::hypothesis(ptr, "ε is not a Lie algebra map".into(), serde_json::to_value(&rep).ok()));
        }
        Ok(aug)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeInput {
    #[serde(default)]
    pub group: Option<GroupInput>,
    #[serde(default)]
    pub dgla: Option<DglaInput>,
    #[serde(default)]
    pub augmentation: Option<ActionInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArtinInput {
    pub nvars: usize,
    /// degree → generators of the ideal in monomial coordinates
    #[serde(default)]
    pub relations: BTreeMap<usize, Vec<Vector>>,
    #[serde(default)]
    pub types: Option<Vec<HodgeType>>,
}

impl ArtinInput {
    pub fn build(&self, n: usize, ptr: &str) -> Result<GradedArtinAlgebra, CliError> {
        quotient_sym(self.nvars, &self.relations, n, self.types.clone()).map_err(|e| CliError::invalid(ptr, e.to_string()))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MhsInput {
    #[serde(default)]
    pub mhs: Option<TripleFiltered>,
    #[serde(default)]
    pub polarizations: BTreeMap<i32, PolarizationForm>,
    #[serde(default)]
    pub cone: Option<SplitConeInput>,
    #[serde(default)]
    pub mhalg: Option<MhalgInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitConeInput {
    pub h1_types: Vec<HodgeType>,
    pub h2_types: Vec<HodgeType>,
    /// `obs[a][b]` in `H²` coordinates
    pub obs: Vec<Vec<Vector>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MhalgInput {
    pub artin: ArtinInput,
    pub tangent: TripleFiltered,
    #[serde(default)]
    pub kernel: Option<Subspace>,
    #[serde(default)]
    pub filtered: Option<TripleFiltered>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelInput {
    pub model: ModelData,
    #[serde(default)]
    pub twists: Option<TwistInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelData {
    pub dgla: DglaInput,
    #[serde(default)]
    pub fibre_types: Vec<HodgeType>,
    #[serde(default)]
    pub action: Option<ActionInput>,
}

/// One column `value ⊗ (basis element index of Π_degree)` of a twist.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistColumn {
    pub degree: usize,
    pub index: usize,
    pub value: Vector,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistInput {
    #[serde(default)]
    pub f: Vec<TwistColumn>,
    #[serde(default)]
    pub g: Vec<TwistColumn>,
    #[serde(default)]
    pub w: Vec<TwistColumn>,
}

pub fn build_twist(cols: &[TwistColumn], l: &Dgla, ring: &GradedArtinAlgebra, ptr: &str) -> Result<GaugeElement, CliError> {
    let mut t = Tensor::zero(l.dim(0), ring);
    for (i, c) in cols.iter().enumerate() {
        let p = format!("{ptr}/{i}");
        if c.degree == 0 || c.degree > ring.truncation_order() || c.index >= ring.dim(c.degree) {
            return Err(CliError::invalid(&p, "twist column outside the maximal ideal of the ring".into()));
        }
        if c.value.len() != l.dim(0) {
            return Err(CliError::invalid(&format!("{p}/value"), format!("expected {} entries", l.dim(0))));
        }
        *t.col_mut(c.degree, c.index) = c.value.clone();
    }
    Ok(GaugeElement { lambda: t })
}

/// `--transversal file:PATH` holds a subspace of `gl_N`.
pub fn read_transversal(arg: &str) -> Result<Option<Subspace>, CliError> {
    match arg {
        "hodge" => Ok(None),
        s => match s.strip_prefix("file:") {
            Some(p) => read_json(Path::new(p)).map(Some),
            None => Err(CliError::usage(format!("unknown transversal `{s}`; use `hodge` or `file:PATH`"))),
        },
    }
}
