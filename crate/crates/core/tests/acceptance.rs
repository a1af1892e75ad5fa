//! Acceptance suite. Runs every criterion at tolerance zero, prints one
//! line per criterion and exits non-zero if any of them fails.

mod common;

use std::time::{Duration, Instant};

use braided_core::hecke::*;
use braided_core::nc::NCPoly;
use braided_core::quantize::*;
use braided_core::re_weyl::leibniz::{self, all_monomials};
use braided_core::re_weyl::{braided_trace, build_re, build_weyl, centrality_check};
use braided_core::u2::*;
use braided_core::{ExecMode, Scalar, UniPoly, UniVar};
use common::s;
use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODE: ExecMode = ExecMode::Parallel;

/// Outcome of one criterion: the failed sub-checks, empty on success.
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn tp(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(UniVar::T, c)
}

fn braiding_pipeline() -> Outcome {
    let mut out = Outcome::new();
    let q = Scalar::q();
    let cases = [
        ("flip:2", Braiding::flip(2), tp(&[1, 2, 1]), tp(&[1]), Scalar::from_int(2)),
        ("std:d=2", Braiding::standard(2), tp(&[1, 2, 1]), tp(&[1]), s("(q^2+1)/q^3")),
        ("superflip:1|1", Braiding::super_flip(1, 1), tp(&[1, 1]), tp(&[1, -1]), Scalar::zero()),
    ];
    for (name, r, num, den, tr_c) in cases {
        out.check(check_qybe(&r).is_zero(), format!("{name}: qybe"));
        let hq = r.hecke_q().cloned().unwrap_or_else(|| q.clone());
        out.check(check_hecke(&r, &hq).map(|m| m.is_zero()).unwrap_or(false), format!("{name}: hecke"));
        let Ok(sk) = skew_inverse(&r) else {
            out.check(false, format!("{name}: skew inverse"));
            continue;
        };
        let (e1, e2) = skew_residuals(r.matrix(), &sk.psi, r.dim());
        out.check(e1.is_zero() && e2.is_zero(), format!("{name}: skew residuals"));
        let ext = extend_braiding(&r, &sk);
        out.check(check_qybe(&ext).is_zero(), format!("{name}: extension qybe"));
        match ph_series(&r, 5, MODE) {
            Ok(ph) => {
                out.check(ph.p_minus == (num, den), format!("{name}: P_-"));
                out.check(ph.series_product_is_one, format!("{name}: series product"));
                let (m, n) = ph.bi_rank;
                let diff = m as i32 - n as i32;
                let formula = &q_number(diff.unsigned_abs() as usize, &hq) / &hq.pow(diff);
                out.check(sk.c_op.trace() == tr_c && formula == tr_c, format!("{name}: Tr C"));
                out.check(psi_inverse_check(&r, &sk, ph.bi_rank).unwrap_or(false), format!("{name}: psi of inverse"));
            }
            Err(e) => out.check(false, format!("{name}: ph series: {e}")),
        }
    }
    out
}

/// `(1+t)` or `(1+ct+t²)` with a rational `c ≥ 2`.
fn random_factor(rng: &mut ChaCha8Rng) -> UniPoly {
    if rng.gen_bool(0.4) {
        return tp(&[1, 1]);
    }
    let den = rng.gen_range(1..=3i64);
    let num = rng.gen_range(2 * den..=6 * den);
    UniPoly::new(UniVar::T, vec![Scalar::one(), Scalar::from_ratio(num, den), Scalar::one()])
}

fn random_product(rng: &mut ChaCha8Rng) -> UniPoly {
    let n = rng.gen_range(1..=6);
    (0..n).fold(tp(&[1]), |acc, _| acc.mul(&random_factor(rng)))
}

fn set_coeff(p: &UniPoly, k: usize, c: Scalar) -> UniPoly {
    let mut cs = p.coeffs().to_vec();
    cs[k] = c;
    UniPoly::new(p.var(), cs)
}

fn mountains() -> Outcome {
    let mut out = Outcome::new();
    let one = tp(&[1]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut polys = vec![tp(&[1, 10, 12, 10, 1])];
    polys.extend((0..50).map(|_| random_product(&mut rng)));
    for p in &polys {
        out.check(mountain_check(p) == MountainResult::Pass, format!("mountain: {p}"));
        out.check(reciprocal_check(p, &one), format!("reciprocal: {p}"));
    }
    let candidates: Vec<&UniPoly> = polys.iter().filter(|p| p.degree() >= 2).collect();
    for j in 0..20 {
        let p = *candidates.choose(&mut rng).expect("products of degree two exist");
        let n = p.degree();
        let bad = if j % 2 == 0 {
            // one side only: reciprocity breaks
            let k = rng.gen_range(0..n.div_ceil(2));
            let delta = Scalar::from_int(*[-2i64, -1, 1, 2].choose(&mut rng).unwrap());
            set_coeff(p, k, &p.coeff(k) + &delta)
        } else {
            // a symmetric plateau: the mountain breaks, reciprocity survives
            let k = rng.gen_range(0..n / 2);
            let c = p.coeff(k + 1);
            set_coeff(&set_coeff(p, k, c.clone()), n - k, c)
        };
        let rejected = mountain_check(&bad) != MountainResult::Pass || !reciprocal_check(&bad, &one);
        out.check(rejected, format!("mutation accepted: {bad}"));
    }
    out
}

fn leibniz_equivalence() -> Outcome {
    let mut out = Outcome::new();
    let w2 = build_weyl(&Braiding::flip(2)).unwrap();
    let monos: Vec<_> = (0..=4).flat_map(|d| all_monomials(2, d)).collect();
    match leibniz::sweep(&w2, &monos, MODE) {
        Ok(rep) => out.check(rep.passed(), format!("m = 2: {} of {} comparisons fail", rep.failures.len(), rep.checked)),
        Err(e) => out.check(false, format!("m = 2: {e}")),
    }
    let w3 = build_weyl(&Braiding::flip(3)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pool: Vec<_> = (0..=3).flat_map(|d| all_monomials(3, d)).collect();
    let sample: Vec<_> = pool.choose_multiple(&mut rng, 200).cloned().collect();
    match leibniz::sweep(&w3, &sample, MODE) {
        Ok(rep) => out.check(rep.passed(), format!("m = 3: {} of {} comparisons fail", rep.failures.len(), rep.checked)),
        Err(e) => out.check(false, format!("m = 3: {e}")),
    }
    out
}

fn u2_identities(u: &U2Calculus, sp: &SpectralMatrices) -> Outcome {
    let mut out = Outcome::new();
    out.check(u.cayley_hamilton_check(), "cayley-hamilton");
    out.check(u.system().certify_confluence().passed(), "confluence");
    let monos = u.pbw_monomials(4);
    out.check(u.derivatives_commute(&monos, MODE).is_none(), "derivatives commute");
    out.check(u.cas_exchange(sp, false, &monos, MODE).is_none(), "first-order exchange with Cas");
    out.check(u.cas_exchange(sp, true, &monos, MODE).is_none(), "second-order exchange with Cas");
    out.check(sp.phi_eigen[0] == s("mu*(2*h-mu)/4") && sp.phi_eigen[1] == s("-mu*(2*h+mu)/4"), "Phi eigenvalues");
    out.check(
        sp.pi_eigen[0] == s("(h^2-mu^2)/4")
            && sp.pi_eigen[1] == s("(h^2-(mu+2*h)^2)/4")
            && sp.pi_eigen[2] == s("(h^2-(mu-2*h)^2)/4"),
        "Pi eigenvalues",
    );
    out.check(sp.phi_proj[0] == common::p1_display(), "P1");
    out.check(sp.phi_proj[1] == common::p2_display(), "P2");
    out.check(sp.pi_proj[0] == common::p0_display(), "P0");
    out.check(sp.pi_proj[1] == common::p_plus_display(), "P+");
    out.check(sp.pi_proj[2] == common::p_minus_display(), "P-");
    out.check(sp.certify(), "projectors orthogonal and complete");
    out
}

fn oracle_grid(u: &U2Calculus, sp: &SpectralMatrices) -> Outcome {
    let mut out = Outcome::new();
    let cas = "(h^2-mu^2)/4";
    let fs = ["1".to_string(), "t".into(), "t^2".into(), cas.into(), format!("({cas})^2"), format!("t*{cas}")];
    let ops = [
        InvariantOp::Dt,
        InvariantOp::DtTilde,
        InvariantOp::Q,
        InvariantOp::Delta(0),
        InvariantOp::Delta(1),
        InvariantOp::Delta(2),
        InvariantOp::Delta(3),
    ];
    let mut jobs = Vec::new();
    for op in ops {
        for f in &fs {
            for k in 0..=3u32 {
                jobs.push((op, IsotypicElement::new(s(f), k)));
            }
        }
    }
    let scaled = braided_core::exec::map(MODE, &jobs, |(op, e)| u.oracle_crosscheck(sp, *op, e, DtReading::Scaled).is_ok());
    for ((op, e), ok) in jobs.iter().zip(&scaled) {
        out.check(*ok, format!("scaled reading: {op} on {} b^{}", e.f, e.k));
    }
    let literal: Vec<_> = jobs.iter().filter(|(op, _)| *op == InvariantOp::Dt).collect();
    let literal_fail = literal.iter().filter(|(op, e)| u.oracle_crosscheck(sp, *op, e, DtReading::Literal).is_err()).count();
    out.notes.push(format!("literal reading of d_t: {literal_fail} of {} grid points disagree with the oracle", literal.len()));
    out.check(literal_fail > 0, "literal reading unexpectedly agrees everywhere");

    for k in 0..=3u32 {
        let bk = IsotypicElement::new(Scalar::one(), k);
        let act = |op| sp.act(op, &bk, DtReading::Scaled).f;
        out.check(act(InvariantOp::Dt).is_zero(), format!("d_t b^{k}"));
        out.check(act(InvariantOp::Q) == Scalar::from_int(k as i64), format!("Q b^{k}"));
        out.check(act(InvariantOp::Delta(1)).is_zero(), format!("Delta_1 b^{k}"));
        out.check(act(InvariantOp::Delta(0)) == s("4/h^2"), format!("Delta_0 b^{k}"));
    }
    let lap = u.act(&u.laplacian(), &u.cas());
    out.check(lap == NCPoly::scalar(Scalar::from_int(6)), "Delta(Cas)");
    let mu2 = sp.act(InvariantOp::Delta(1), &IsotypicElement::new(s("mu^2"), 0), DtReading::Scaled).f;
    out.check(mu2 == Scalar::from_int(-24), "Delta(mu^2)");
    let mut red = u.reducer();
    let qcb = u.act(&u.q(), &red.mul(&u.cas(), &u.b()));
    let want = red.mul(&u.cas().scale(&Scalar::from_int(3)).add(&NCPoly::scalar(s("h^2/4"))), &u.b());
    out.check(qcb == want, "Q(Cas b)");
    out
}

fn quantized_operators(u: &U2Calculus, sp: &SpectralMatrices) -> Outcome {
    let mut out = Outcome::new();
    out.check(dirac_residual(u).iter().flatten().all(NCPoly::is_zero), "Dirac square");
    let conv_ok = |conv| alpha_operator(u, &ClassicalOperator::q(), conv).map(|p| p == u.q()).unwrap_or(false);
    out.check(RadiusConvention::ALL.into_iter().all(conv_ok), "alpha(Q) = Q");
    let holding: Vec<_> = RadiusConvention::ALL
        .into_iter()
        .filter(|&c| alpha_q2_check(u, c, 3).map(|r| r.holds()).unwrap_or(false))
        .collect();
    match holding.as_slice() {
        [c] => out.notes.push(format!("alpha(Q^2) holds under the convention {}", c.name())),
        _ => out.check(false, format!("alpha(Q^2) holds under {} conventions", holding.len())),
    }
    let flat = MetricProfile::flat();
    let fl = lb_quantum(&flat);
    out.check(fl.coeff(InvariantBasis::Dt2) == Scalar::one() && fl.coeff(InvariantBasis::Delta) == -Scalar::one(), "flat LB");
    out.check(fl.terms.len() == 2, "flat LB has two terms");
    let sw = lb_quantum(&MetricProfile::schwarzschild()).map_coeffs(QuantumRadiusFrame::in_rhat);
    let terms = [
        (InvariantBasis::Dt2, "rhat/(rhat-rg)"),
        (InvariantBasis::Q2, "rg/rhat^3"),
        (InvariantBasis::Q, "0"),
        (InvariantBasis::QDt, "-h/2*rg/rhat^3"),
        (InvariantBasis::Delta, "-(1 - h^2/12*rg/rhat^3)"),
    ];
    for (b, want) in terms {
        out.check(sw.coeff(b) == s(want), format!("Schwarzschild {}", b.name()));
    }
    for m in [flat, MetricProfile::schwarzschild()] {
        let q = alpha_invariant(u, &lb_classical(&m), RadiusConvention::PlusQuarter);
        out.check(q.map(|q| q == lb_quantum(&m)).unwrap_or(false), format!("alpha of LB for {}", m.phi()));
    }
    let d = sp.difference_form(&vec![(Scalar::one(), InvariantOp::Delta(1))], 0);
    let one = Rational64::from_integer(1);
    let r = Rational64::from_integer;
    out.check(d.terms.len() == 3, "Delta_1 difference form has three shifts");
    out.check(d.coeff_at(one, r(0)) == s("2/h^2"), "Delta_1 shift (1, 0)");
    out.check(d.coeff_at(one, r(-2)) == s("-1/h^2 + 2/(mu*h)"), "Delta_1 shift (1, -2)");
    out.check(d.coeff_at(one, r(2)) == s("-1/h^2 - 2/(mu*h)"), "Delta_1 shift (1, 2)");
    out
}

fn centrality(u: &U2Calculus) -> Outcome {
    let mut out = Outcome::new();
    let n = u.n_matrix();
    for k in 1..=3 {
        let tr = n.pow(k).trace();
        out.check(centrality_check(u.coordinate_system(), &tr).passed(), format!("Tr N^{k} in U(u(2))"));
    }
    let re = build_re(&Braiding::standard(2)).unwrap();
    for k in 1..=2 {
        let tr = braided_trace(&re.skew, &re.generators(), k);
        out.check(centrality_check(&re.system, &tr).passed(), format!("braided trace {k} in the RE algebra"));
    }
    out
}

fn main() {
    let u = U2Calculus::new().expect("U(u(2)) system");
    let sp = SpectralMatrices::new();
    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Option<Duration>, Run)> = vec![
        ("braiding pipeline", Some(Duration::from_secs(60)), Box::new(braiding_pipeline)),
        ("mountain and reciprocity", Some(Duration::from_secs(5)), Box::new(mountains)),
        ("Leibniz rules at R = P", Some(Duration::from_secs(600)), Box::new(leibniz_equivalence)),
        ("U(u(2)) identities", None, Box::new(|| u2_identities(&u, &sp))),
        ("oracle grid", None, Box::new(|| oracle_grid(&u, &sp))),
        ("quantized operators", None, Box::new(|| quantized_operators(&u, &sp))),
        ("centrality of traces", None, Box::new(|| centrality(&u))),
    ];
    let mut failed = 0;
    for (n, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            outcome.check(elapsed <= *limit, format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status}  {name} ({elapsed:.2?})", n + 1);
        for f in outcome.notes.iter().chain(&outcome.failures) {
            println!("    {f}");
        }
        failed += usize::from(!outcome.failures.is_empty());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
