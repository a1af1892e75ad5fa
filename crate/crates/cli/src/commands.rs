//! The subcommands. Each fills a [`Report`]; input problems come back as
//! [`InputError`].


use braided_core::exact::{parse_scalar, parse_scalar_in};
use braided_core::hecke::{
    check_hecke, check_qybe, extend_braiding, factor_mountain, mountain_check, pairing_invariance, ph_series,
    reciprocal_check, skew_inverse, Braiding, HeckeError, MountainResult,
};
use braided_core::nc::{parse_nc, NCPoly, Reducer};
use braided_core::quantize::{
    alpha_invariant, lb_classical, lb_quantum, InvariantBasis, MetricProfile, QuantumRadiusFrame, RadiusConvention,
};
use braided_core::re_weyl::leibniz::compare;
use braided_core::re_weyl::{build_weyl, entry_at, ugl};
use braided_core::u2::{DtReading, InvariantOp, IsotypicElement, SpectralMatrices, U2Calculus};
use braided_core::{ExecMode, Scalar, ScalarMatrix, Var};
use serde_json::{json, Value};

use crate::presets::{self, Algebra};
use crate::report::Report;
use crate::{InputError, Source};

fn scalar_arg(what: &str, src: &str) -> Result<Scalar, InputError> {
    parse_scalar(src).map_err(|e| InputError::expr(what, e))
}

fn matrix_json(m: &ScalarMatrix) -> Value {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect()
}

/// Dimension, matrix and Hecke parameter from a file or preset.
fn load(source: &Source) -> Result<(usize, ScalarMatrix, Option<Scalar>), InputError> {
    if let Some(name) = &source.preset {
        let b = presets::braiding(name)?;
        return Ok((b.dim(), b.matrix().clone(), b.hecke_q().cloned()));
    }
    let path = source.file.as_deref().expect("clap enforces one source");
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io(format!("{}: {e}", path.display())))?;
    let l = crate::rfile::parse(&text)?;
    Ok((l.dim, l.matrix, l.q))
}

fn braiding(report: &mut Report, dim: usize, m: ScalarMatrix, q: Option<Scalar>) -> Option<Braiding> {
    match Braiding::new(dim, m, q) {
        Ok(b) => Some(b),
        Err(e @ HeckeError::Singular) => {
            report.check("invertible", false, Some(e.to_string()));
            None
        }
        Err(e) => {
            report.check("braiding", false, Some(e.to_string()));
            None
        }
    }
}

pub fn verify_braiding(report: &mut Report, source: &Source, q: Option<&str>) -> Result<(), InputError> {
    let (dim, mut m, mut hecke) = load(source)?;
    if let Some(q) = q {
        let v = scalar_arg("--q", q)?;
        m = m.subs(Var::Q, &v);
        hecke = hecke.map(|h| h.subs(Var::Q, &v));
        report.value("q", v.to_string());
    }
    report.value("dim", dim);
    let Some(r) = braiding(report, dim, m, hecke) else { return Ok(()) };
    report.value("involutive", r.is_involutive());
    let qybe = check_qybe(&r);
    report.check("qybe", qybe.is_zero(), (!qybe.is_zero()).then(|| format!("{} nonzero entries", qybe.nonzero_entries().len())));
    match r.hecke_q() {
        Some(q) => {
            let res = check_hecke(&r, q).expect("parameter is nonzero");
            report.check("hecke", res.is_zero(), None);
            report.value("hecke_q", q.to_string());
        }
        None => report.value("hecke_q", Value::Null),
    }
    match skew_inverse(&r) {
        Ok(s) => {
            report.check("skew_invertible", true, None);
            report.value("tr_b", s.b_op.trace().to_string());
            report.value("tr_c", s.c_op.trace().to_string());
            report.value("b", matrix_json(&s.b_op));
            report.value("c", matrix_json(&s.c_op));
            let ext = extend_braiding(&r, &s);
            report.check("extension_qybe", check_qybe(&ext).is_zero(), None);
            report.check("pairing_invariance", pairing_invariance(&ext), None);
        }
        Err(e) => report.check("skew_invertible", false, Some(e.to_string())),
    }
    Ok(())
}

pub fn ph(report: &mut Report, source: &Source, kmax: usize, mode: ExecMode) -> Result<(), InputError> {
    let (dim, m, q) = load(source)?;
    let Some(r) = braiding(report, dim, m, q) else { return Ok(()) };
    report.value("kmax", kmax);
    let ph = match ph_series(&r, kmax, mode) {
        Ok(ph) => ph,
        Err(e) => {
            report.check("ph_series", false, Some(e.to_string()));
            return Ok(());
        }
    };
    let (num, den) = &ph.p_minus;
    report.value("dims_plus", ph.dims_plus.clone());
    report.value("dims_minus", ph.dims_minus.clone());
    report.value("p_minus", format!("({num})/({den})"));
    report.value("bi_rank", format!("{}|{}", ph.bi_rank.0, ph.bi_rank.1));
    report.check("series_product_is_one", ph.series_product_is_one, None);
    report.check("reciprocal", reciprocal_check(num, den), None);
    if den.degree() == 0 {
        let detail = match mountain_check(num) {
            MountainResult::Pass => None,
            MountainResult::Fail(k) => Some(format!("breaks at coefficient {k}")),
        };
        report.check("mountain", detail.is_none(), detail);
        let f = factor_mountain(num);
        report.value("factors", f.factors.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        if let Some(rest) = f.remainder {
            report.value("factor_remainder", rest.to_string());
        }
    }
    Ok(())
}

fn u2_macros(u2: &U2Calculus) -> Vec<(String, NCPoly)> {
    let mut m: Vec<(String, NCPoly)> = InvariantOp::ALL.iter().map(|&op| (op.name(), u2.operator(op))).collect();
    m.push(("Delta".into(), u2.laplacian()));
    m.push(("cas".into(), u2.cas()));
    m.push(("b".into(), u2.b()));
    m
}

fn act_u2(report: &mut Report, op: &str, on: &str) -> Result<(), InputError> {
    let u2 = U2Calculus::new().map_err(|e| InputError::Invalid(e.to_string()))?;
    if on.contains(':') {
        let op: InvariantOp = op.parse().map_err(InputError::Invalid)?;
        let e: IsotypicElement = on.parse().map_err(|e| InputError::expr("--on", e))?;
        let sp = SpectralMatrices::new();
        let out = sp.act(op, &e, DtReading::Scaled);
        report.value("result", out.f.to_string());
        report.value("k", out.k);
        match u2.isotypic_to_u2(&e) {
            Some(_) => {
                let agree = u2.oracle_crosscheck(&sp, op, &e, DtReading::Scaled);
                let detail = agree.as_ref().err().map(|(c, o)| format!("closed form {} vs oracle {}", u2.render(c), u2.render(o)));
                report.check("oracle_agrees", agree.is_ok(), detail);
            }
            None => report.value("oracle", "skipped: f is not a polynomial in t and mu^2"),
        }
        return Ok(());
    }
    let macros = u2_macros(&u2);
    let opp = parse_nc(op, u2.alphabet(), &[Var::H], &macros).map_err(|e| InputError::expr("--op", e))?;
    let onp = parse_nc(on, u2.alphabet(), &[Var::H], &macros).map_err(|e| InputError::expr("--on", e))?;
    report.value("result", u2.render(&u2.act(&opp, &onp)));
    Ok(())
}

fn single_letter(p: &NCPoly) -> Option<Vec<u16>> {
    let mut terms = p.terms();
    let (w, c) = terms.next()?;
    (terms.next().is_none() && c.is_one()).then(|| w.0.iter().map(|&l| l as u16).collect())
}

fn act_weyl(report: &mut Report, r: Braiding, op: &str, on: &str) -> Result<(), InputError> {
    let w = build_weyl(&r).map_err(|e| InputError::Invalid(e.to_string()))?;
    let vars = [Var::Q, Var::H];
    let opp = parse_nc(op, &w.alphabet, &vars, &[]).map_err(|e| InputError::expr("--op", e))?;
    let onp = parse_nc(on, &w.alphabet, &vars, &[]).map_err(|e| InputError::expr("--on", e))?;
    let mut red = w.reducer();
    report.value("result", w.alphabet.render(&w.act_with(&mut red, &opp, &onp)));
    let m = w.dim();
    let nn = (m * m) as u16;
    if let (Some(d), Some(mono), true) = (single_letter(&opp), single_letter(&onp), r.is_involutive()) {
        if d.len() == 1 && d[0] >= nn && mono.iter().all(|&l| l < nn) {
            let d = entry_at(m, (d[0] - nn) as usize);
            let mono: Vec<_> = mono.iter().map(|&l| entry_at(m, l as usize)).collect();
            let c = compare(&w, &mut red, d, &mono);
            report.check("closed_form_agrees", c.closed_form, None);
            report.check("circ_agrees", c.circ, None);
            report.check("coproduct_agrees", c.coproduct, None);
            report.check("classical_limit", c.classical, None);
        }
    }
    Ok(())
}

fn act_ugl(report: &mut Report, m: usize, op: &str, on: &str) -> Result<(), InputError> {
    let rs = ugl(m).map_err(|e| InputError::Invalid(e.to_string()))?;
    let a = rs.alphabet().clone();
    let opp = parse_nc(op, &a, &[Var::H], &[]).map_err(|e| InputError::expr("--op", e))?;
    let onp = parse_nc(on, &a, &[Var::H], &[]).map_err(|e| InputError::expr("--on", e))?;
    let mut red = Reducer::new(&rs);
    report.value("result", a.render(&red.nf(&opp.commutator(&onp))));
    Ok(())
}

pub fn act(report: &mut Report, algebra: &str, op: &str, on: &str) -> Result<(), InputError> {
    match presets::algebra(algebra)? {
        Algebra::U2 => act_u2(report, op, on),
        Algebra::Weyl(r) => act_weyl(report, r, op, on),
        Algebra::Ugl(m) => act_ugl(report, m, op, on),
    }
}

const LB_TERMS: [InvariantBasis; 5] =
    [InvariantBasis::Dt2, InvariantBasis::Q2, InvariantBasis::Q, InvariantBasis::QDt, InvariantBasis::Delta];

pub fn lb(
    report: &mut Report,
    phi: &str,
    k: u32,
    apply: Option<&str>,
    conv: RadiusConvention,
) -> Result<(), InputError> {
    let m: MetricProfile = phi.parse().map_err(|e| InputError::expr("--phi", e))?;
    let u2 = U2Calculus::new().map_err(|e| InputError::Invalid(e.to_string()))?;
    let op = lb_quantum(&m);
    report.value("phi", m.phi().to_string());
    report.value("convention", conv.name());
    let coeffs = |f: &dyn Fn(&Scalar) -> Scalar| {
        LB_TERMS.iter().map(|&b| json!({ "op": b.name(), "coeff": f(&op.coeff(b)).to_string() })).collect::<Vec<_>>()
    };
    report.value("operator", coeffs(&|c| c.clone()));
    report.value("operator_rhat", coeffs(&QuantumRadiusFrame::in_rhat));
    match alpha_invariant(&u2, &lb_classical(&m), conv) {
        Ok(a) => report.check("quantization_matches", a == op, None),
        Err(e) => report.check("quantization_matches", false, Some(e.to_string())),
    }
    let sp = SpectralMatrices::new();
    let combo = op.combination();
    let d = sp.difference_form(&combo, k);
    report.value("k", k);
    report.value("difference_operator", serde_json::to_value(d.records()).expect("records serialize"));
    if let Some(f) = apply {
        let f = parse_scalar_in(f, &[Var::T, Var::Mu, Var::H, Var::Rg]).map_err(|e| InputError::expr("--apply", e))?;
        let g = d.apply(&f);
        report.value("image", g.to_string());
        if f.is_polynomial() {
            let direct = sp.act_combination(&combo, &IsotypicElement::new(f, k)).f;
            report.check("closed_form_agrees", direct == g, None);
        }
    }
    Ok(())
}

