//! One function per subcommand.

use gm_deform::artin::GradedArtinAlgebra;
use gm_deform::deformation::{kuranishi, DeformationError, GaugeElement};
use gm_deform::dgla::{Augmentation, Dgla, QuadraticMap, Splitting};
use gm_deform::group_cohomology::{
    cup_obstruction, rep_cohomology, to_formal_dgla, validate_rep, AdModule, GroupError, Presentation, RepCohomology,
};
use gm_deform::hodge::{check_mhs, check_mhs_polarized, mhalg_assemble, split_mhs_on_cone, HodgeError};
use gm_deform::linalg::Subspace;
use gm_deform::mc_vmhs::{
    alpha_recursion, alpha_v_recursion, fiber_vmhs_check, flatness_check, gauge_compare, hodge_type_check, split_fiber,
    FormalityModel, VmhsError,
};
use serde_json::json;

use crate::input::{build_twist, ArtinInput, ConeInput, GroupInput, MhsInput, ModelInput};
use crate::report::{to_json, CliError, Outcome};

pub struct Options {
    pub order: usize,
    pub respect_grading: bool,
    pub transversal: Option<Subspace>,
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn group_error(e: GroupError, base: &str) -> CliError {
    let at = |s: &str| format!("{base}{s}");
    match e {
        GroupError::ImageCount { .. } => CliError::invalid(&at("/representation/images"), e.to_string()),
        GroupError::BadImage(i) => CliError::invalid(&at(&format!("/representation/images/{i}")), e.to_string()),
        GroupError::SubalgebraDimension { .. } => CliError::invalid(&at("/representation/lie_subalgebra"), e.to_string()),
        GroupError::RelationFails(i) => CliError::hypothesis(&at(&format!("/presentation/relations/{i}")), e.to_string(), None),
        GroupError::SubalgebraNotClosed | GroupError::SubalgebraNotInvariant(_) => {
            CliError::hypothesis(&at("/representation/lie_subalgebra"), e.to_string(), None)
        }
        GroupError::TypeCount { .. } => CliError::invalid(&at("/types"), e.to_string()),
        GroupError::BigradingNotRespected => CliError::hypothesis(&at("/types"), e.to_string(), None),
        _ => CliError::invalid(base, e.to_string()),
    }
}

fn deformation_error(e: DeformationError) -> CliError {
    match e {
        DeformationError::NotInjective | DeformationError::Grading(_) | DeformationError::NoConvergence(_) => {
            CliError::hypothesis("", e.to_string(), None)
        }
        _ => CliError::invalid("", e.to_string()),
    }
}

fn hodge_error(e: HodgeError, ptr: &str) -> CliError {
    match e {
        HodgeError::NotGeneratedInDegreeOne
        | HodgeError::KernelMismatch
        | HodgeError::ObsNotTyped { .. }
        | HodgeError::NotUnipotent(_) => CliError::hypothesis(ptr, e.to_string(), None),
        _ => CliError::invalid(ptr, e.to_string()),
    }
}

fn vmhs_error(e: VmhsError) -> CliError {
    match e {
        VmhsError::NotDdbar { degree, ref witness } => {
            let w = json!({ "degree": degree, "vector": witness });
            CliError::hypothesis("/model/dgla", e.to_string(), Some(w))
        }
        VmhsError::NoDoubleStructure => CliError::invalid("/model/dgla/d2", e.to_string()),
        VmhsError::NoBigrading => CliError::invalid("/model/dgla/bigrading", e.to_string()),
        VmhsError::BadAction | VmhsError::RepDimension => CliError::invalid("/model/action", e.to_string()),
        VmhsError::OrderTooLarge { .. } => CliError::usage(e.to_string()),
        VmhsError::Hodge(HodgeError::NotUnipotent(_)) => CliError::hypothesis("/twists", e.to_string(), None),
        VmhsError::Deformation(DeformationError::NotInMaxIdeal(_)) => CliError::invalid("/twists", e.to_string()),
        ref x if x.is_hypothesis_failure() => CliError::hypothesis("/model/dgla", e.to_string(), None),
        _ => CliError::invalid("", e.to_string()),
    }
}

fn group_setup(inp: &GroupInput, base: &str) -> Result<(Presentation, RepCohomology), CliError> {
    let p = inp.presentation.build()?;
    let r = &inp.representation;
    let rep = validate_rep(&p, r).map_err(|e| group_error(e, base))?;
    if let Some(i) = rep.failing_relation {
        let value = AdModule::new(&p, r).map(|m| m.eval(&p.relations[i])).ok();
        let w = json!({ "relation": i, "value": value });
        return Err(CliError::hypothesis(&format!("{base}/presentation/relations/{i}"), format!("relation {i} does not evaluate to the identity"), Some(w)));
    }
    let rc = rep_cohomology(&p, r).map_err(|e| group_error(e, base))?;
    Ok((p, rc))
}

pub fn cohomology(inp: &GroupInput) -> Result<Outcome, CliError> {
    let (p, rc) = group_setup(inp, "")?;
    let dims = rc.dims();
    let m = rc.complex.module.dim();
    let expected = p.euler_characteristic() * m as i64;
    let chi = rc.euler_characteristic();
    let composite = rc.complex.composite_vanishes();
    let q = cup_obstruction(&rc);
    let coh = &rc.cohomology;
    let result = json!({
        "module_dim": m,
        "dims": dims,
        "euler_characteristic": chi,
        "expected_euler_characteristic": expected,
        "d1_d0_vanishes": composite,
        "d0": rc.complex.d0,
        "d1": rc.complex.d1,
        "h0_basis": coh.degree(0).harmonic(),
        "h1_basis": coh.degree(1).harmonic(),
        "h2_basis": coh.degree(2).harmonic(),
        "obstruction": q.values,
    });
    let passed = composite && chi == expected;
    let summary = vec![
        format!("H0, H1, H2 dimensions: {}, {}, {}", dims[0], dims[1], dims[2]),
        format!("euler characteristic {chi} (expected {expected}): {}", verdict(chi == expected)),
        format!("d1 d0 = 0: {}", verdict(composite)),
        format!("obstruction map zero: {}", q.is_zero()),
    ];
    Ok(Outcome { passed, result, summary })
}

fn weights_match(a: &GradedArtinAlgebra) -> Vec<bool> {
    let w = a.weight_filtration();
    (0..=a.truncation_order() + 1).map(|k| a.max_ideal_power(k) == w[k]).collect()
}

pub fn cone(inp: &ConeInput, opt: &Options) -> Result<Outcome, CliError> {
    let (l, aug): (Dgla, Option<Augmentation>) = match (&inp.group, &inp.dgla) {
        (Some(g), None) => {
            let (_, rc) = group_setup(g, "/group")?;
            let (l, aug) = to_formal_dgla(&rc, g.types.as_ref()).map_err(|e| group_error(e, "/group"))?;
            (l, Some(aug))
        }
        (None, Some(d)) => {
            let l = d.build("/dgla")?;
            let aug = inp.augmentation.as_ref().map(|a| a.build(&l, "/augmentation")).transpose()?;
            (l, aug)
        }
        _ => return Err(CliError::invalid("", "give exactly one of `group` and `dgla`".into())),
    };
    let mut sp = Splitting::orthogonal(&l);
    if let Some(a) = &aug {
        sp = sp.with_delta_g(&l, a, opt.transversal.as_ref()).map_err(|e| CliError::invalid("/augmentation", e.to_string()))?;
    }
    let kur = kuranishi(&l, &sp, aug.as_ref(), opt.order, opt.respect_grading).map_err(deformation_error)?;
    let formal = (0..l.top_degree()).all(|i| l.d(i).is_zero());
    let formal_check = formal.then(|| {
        let q = l.bracket_on_cohomology(&l.cohomology(Some(&sp)));
        let i2 = q.i2();
        let j2 = kur.ideal.generators_by_degree.get(&2).cloned().unwrap_or_else(|| Subspace::zero(i2.ambient_dim()));
        let only_quadrics = kur.ideal.generators_by_degree.keys().all(|&k| k == 2);
        json!({ "degree_two_equals_obstruction_image": j2 == i2 || (opt.order < 2), "generated_in_degree_two": only_quadrics })
    });
    let weights = weights_match(&kur.ring);
    let passed = kur.ideal_bigraded.unwrap_or(true)
        && weights.iter().all(|&b| b)
        && formal_check.as_ref().is_none_or(|c| c.as_object().unwrap().values().all(|v| v == &json!(true)));
    let summary = vec![
        format!("H1 dimension {}, H2 dimension {}", kur.h1_basis.len(), kur.h2_basis.len()),
        format!("ring dimensions {:?}", kur.ring.dims()),
        format!("ideal generators by degree {:?}", kur.ideal.generators_by_degree.iter().map(|(k, s)| (*k, s.dim())).collect::<Vec<_>>()),
        format!("m^k = W_-k: {}", verdict(weights.iter().all(|&b| b))),
    ];
    let result = json!({
        "h1_basis": kur.h1_basis,
        "h2_basis": kur.h2_basis,
        "h1_types": kur.h1_types,
        "ring_dims": kur.ring.dims(),
        "ideal": kur.ideal,
        "ideal_bigraded": kur.ideal_bigraded,
        "formal": formal_check,
        "powers_equal_weight_filtration": weights,
        "universal": kur.universal.value,
    });
    Ok(Outcome { passed, result, summary })
}

fn basis_monomials(a: &GradedArtinAlgebra) -> Vec<Vec<Vec<usize>>> {
    match a.presentation() {
        None => Vec::new(),
        Some(p) => (0..=a.truncation_order()).map(|d| (0..a.dim(d)).map(|i| p.basis_monomial(d, i).to_vec()).collect()).collect(),
    }
}

pub fn artin(inp: &ArtinInput, opt: &Options) -> Result<Outcome, CliError> {
    let a = inp.build(opt.order, "")?;
    let rep = a.validate();
    let weights = weights_match(&a);
    let passed = rep.passed() && weights.iter().all(|&b| b);
    let summary = vec![
        format!("dimensions {:?}", a.dims()),
        format!("algebra axioms: {}", verdict(rep.passed())),
        format!("m^k = W_-k: {}", verdict(weights.iter().all(|&b| b))),
    ];
    let result = json!({
        "dims": a.dims(),
        "basis_monomials": basis_monomials(&a),
        "basis_types": a.basis_types(),
        "axioms": rep,
        "powers_equal_weight_filtration": weights,
    });
    Ok(Outcome { passed, result, summary })
}

pub fn mhs_check(inp: &MhsInput, opt: &Options) -> Result<Outcome, CliError> {
    let given = [inp.mhs.is_some(), inp.cone.is_some(), inp.mhalg.is_some()].iter().filter(|&&b| b).count();
    if given != 1 {
        return Err(CliError::invalid("", "give exactly one of `mhs`, `cone` and `mhalg`".into()));
    }
    if let Some(v) = &inp.mhs {
        let rep = if inp.polarizations.is_empty() { check_mhs(v) } else { check_mhs_polarized(v, &inp.polarizations) };
        let mut summary: Vec<String> = rep
            .graded
            .iter()
            .map(|g| format!("Gr^W_{}: hodge numbers {:?}: {}", g.weight, g.hodge_numbers, verdict(g.passed())))
            .collect();
        summary.push(format!("mixed Hodge structure: {}", verdict(rep.passed())));
        return Ok(Outcome { passed: rep.passed(), result: to_json(&rep), summary });
    }
    if let Some(c) = &inp.cone {
        let (h1, h2) = (c.h1_types.len(), c.h2_types.len());
        if c.obs.len() != h1 || c.obs.iter().any(|r| r.len() != h1 || r.iter().any(|v| v.len() != h2)) {
            return Err(CliError::invalid("/cone/obs", format!("expected a {h1} x {h1} array of vectors of length {h2}")));
        }
        let q = QuadraticMap { h1_dim: h1, h2_dim: h2, values: c.obs.clone() };
        let (ring, mhs, rep) = split_mhs_on_cone(&c.h1_types, &c.h2_types, &q, opt.order).map_err(|e| hodge_error(e, "/cone"))?;
        let weights = weights_match(&ring);
        let w = mhs.w();
        let jadic = (0..=opt.order + 1).all(|k| w.get(-(k as i32)) == ring.weight_filtration()[k]);
        let passed = rep.passed() && weights.iter().all(|&b| b) && jadic;
        let summary = vec![
            format!("cone ring dimensions {:?}", ring.dims()),
            format!("split structure: {}", verdict(rep.passed())),
            format!("W_-k = m^k: {}", verdict(jadic && weights.iter().all(|&b| b))),
        ];
        let result = json!({ "ring_dims": ring.dims(), "mhs": mhs, "check": rep, "weight_is_jadic": jadic, "powers_equal_weight_filtration": weights });
        return Ok(Outcome { passed, result, summary });
    }
    let m = inp.mhalg.as_ref().expect("one input is present");
    let a = m.artin.build(opt.order, "/mhalg/artin")?;
    let (assembled, rep) = mhalg_assemble(&a, &m.tangent, m.kernel.as_ref(), m.filtered.as_ref()).map_err(|e| hodge_error(e, "/mhalg"))?;
    let names = ["(1) quadratic cone", "(2) tangent MHS", "(3) kernel sub-MHS", "(4) strictness"];
    let mut summary: Vec<String> = names.iter().zip(rep.conditions()).map(|(n, c)| format!("{n}: {}", verdict(c))).collect();
    summary.push(format!("assembled structure: {}", verdict(rep.assembled_check.passed())));
    let result = json!({ "conditions": rep.conditions(), "report": rep, "assembled": assembled });
    Ok(Outcome { passed: rep.passed(), result, summary })
}

fn model(inp: &ModelInput, opt: &Options) -> Result<FormalityModel, CliError> {
    let l = inp.model.dgla.build("/model/dgla")?;
    let action = inp.model.action.as_ref().map(|a| a.build(&l, "/model/action")).transpose()?;
    FormalityModel::new(l, inp.model.fibre_types.clone(), action, opt.order).map_err(vmhs_error)
}

pub fn mc(inp: &ModelInput, opt: &Options) -> Result<Outcome, CliError> {
    let m = model(inp, opt)?;
    let n = opt.order;
    let mut passed = true;
    let mut summary = vec![format!("harmonic basis types {:?}", m.eta_types), format!("ring dimensions {:?}", m.ring.dims())];
    let mut series = serde_json::Map::new();
    for (name, c) in [("primed", alpha_recursion(&m, n)), ("v", alpha_v_recursion(&m, n))] {
        let c = c.map_err(vmhs_error)?;
        let flat = flatness_check(&m, &c).map_err(vmhs_error)?;
        let types = hodge_type_check(&m, &c);
        let ok = flat.flat && flat.recursion.iter().all(|&b| b) && types.pure.iter().all(|&b| b);
        passed &= ok;
        summary.push(format!("{name} series: flat mod m^{}: {}, pure types: {}", n + 1, verdict(flat.flat), verdict(types.pure.iter().all(|&b| b))));
        series.insert(name.into(), json!({ "alphas": c.alphas, "gammas": c.gammas, "flatness": flat, "types": types }));
    }
    let result = json!({ "eta": m.eta, "eta_types": m.eta_types, "ring_dims": m.ring.dims(), "series": series });
    Ok(Outcome { passed, result, summary })
}

pub fn compare_gauge(inp: &ModelInput, opt: &Options) -> Result<Outcome, CliError> {
    let m = model(inp, opt)?;
    let n = opt.order;
    let cp = alpha_recursion(&m, n).map_err(vmhs_error)?;
    let cv = alpha_v_recursion(&m, n).map_err(vmhs_error)?;
    let g = gauge_compare(&m, &cp, &cv, n).map_err(vmhs_error)?;
    let mut summary = vec![format!("conjugation identity mod m^{}: {}", n + 1, verdict(g.verified))];
    if let Some(s) = g.sign {
        summary.push(format!("sign of the second-order potential: {s}"));
    }
    if let Some(o) = &g.obstruction {
        summary.push(format!("obstructed in degree {} at basis element {}", o.degree, o.basis_element));
    }
    Ok(Outcome { passed: g.verified, result: to_json(&g), summary })
}

pub fn vmhs(inp: &ModelInput, opt: &Options) -> Result<Outcome, CliError> {
    let m = model(inp, opt)?;
    if m.action.is_none() {
        return Err(CliError::invalid("/model/action", "the fibre check needs an action on the fibre".into()));
    }
    let tw = inp.twists.as_ref();
    let get = |sel: fn(&crate::input::TwistInput) -> &Vec<crate::input::TwistColumn>, name: &str| -> Result<GaugeElement, CliError> {
        match tw {
            Some(t) => build_twist(sel(t), &m.e, &m.ring, &format!("/twists/{name}")),
            None => Ok(GaugeElement::zero(&m.e, &m.ring)),
        }
    };
    let (f, g, w) = (get(|t| &t.f, "f")?, get(|t| &t.g, "g")?, get(|t| &t.w, "w")?);
    let rep = fiber_vmhs_check(&m, &f, &g, &w).map_err(vmhs_error)?;
    let passed = rep.passed && rep.graded_unchanged;
    let summary = vec![
        format!("fibre V ⊗ Π of dimension {}", split_fiber(&m).dim()),
        format!("twisted structure is mixed Hodge: {}", verdict(rep.passed)),
        format!("graded pieces unchanged: {}", verdict(rep.graded_unchanged)),
    ];
    Ok(Outcome { passed, result: to_json(&rep), summary })
}
