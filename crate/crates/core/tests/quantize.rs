mod common;

use braided_core::nc::NCPoly;
use braided_core::quantize::*;
use braided_core::u2::*;
use braided_core::{Poly, Scalar};
use common::s;
use num_rational::Rational64;

fn u2() -> U2Calculus {
    U2Calculus::new().unwrap()
}

fn letter(l: usize) -> NCPoly {
    NCPoly::letter(l as _)
}

#[test]
fn alpha_on_coordinates() {
    let u2 = u2();
    let conv = RadiusConvention::MinusQuarter;
    assert_eq!(alpha_element(&u2, &s("x"), conv).unwrap(), letter(X as usize));
    let xy = letter(X as usize).mul(&letter(Y as usize)).add(&letter(Y as usize).mul(&letter(X as usize)));
    let mut red = u2.reducer();
    assert_eq!(alpha_element(&u2, &s("x*y"), conv).unwrap(), red.nf(&xy.scale(&s("1/2"))));
    assert_eq!(alpha_element(&u2, &s("t^2*z"), conv).unwrap(), red.nf(&letter(T as usize).pow(2).mul(&letter(Z as usize))));
    assert!(matches!(alpha_element(&u2, &s("r"), conv), Err(QuantizeError::OddRadius(_))));
    assert!(matches!(alpha_element(&u2, &s("1/x"), conv), Err(QuantizeError::NotPolynomial(_))));
}

#[test]
fn alpha_of_squares() {
    let u2 = u2();
    let x2 = letter(X as usize).pow(2);
    for (conv, c) in [(RadiusConvention::MinusQuarter, "-h^2/12"), (RadiusConvention::PlusQuarter, "h^2/12")] {
        assert_eq!(alpha_element(&u2, &s("x^2"), conv).unwrap(), x2.add(&NCPoly::scalar(s(c))), "{conv:?}");
        assert_eq!(alpha_element(&u2, &s("r^2"), conv).unwrap(), conv.rhat_squared(&u2));
        // r² = x² + y² + z² classically, and α respects that
        assert_eq!(alpha_element(&u2, &s("x^2+y^2+z^2"), conv).unwrap(), conv.rhat_squared(&u2));
    }
}

#[test]
fn quantum_radius() {
    let u2 = u2();
    assert!(QuantumRadiusFrame::relation_holds(&u2));
    // (μ/(2i))² = Cas − ℏ²/4 in U(u(2)_ℏ)
    let rhat2 = u2.central_to_u2(&QuantumRadiusFrame::rhat().pow(2)).unwrap();
    assert_eq!(rhat2, RadiusConvention::MinusQuarter.rhat_squared(&u2));
    for src in ["mu^2 + h*t", "1/(mu - h)", "mu*h^3"] {
        let f = s(src);
        assert_eq!(QuantumRadiusFrame::from_display(&QuantumRadiusFrame::to_display(&f)), f);
    }
    assert_eq!(QuantumRadiusFrame::to_display(&s("mu^2 - h^2")), s("-4*rhat^2 + 4*hs^2"));
    let e = alpha(&s("t*r^2 + 1/r"), 2);
    assert_eq!(e.k, 2);
    assert_eq!(e.f, s("-t*mu^2/4 + 2*i/mu"));
}

#[test]
fn harmonic_decomposition_reconstructs() {
    let r2 = s("x^2+y^2+z^2").numer().clone();
    for src in ["x^4", "x^2*y*z + z^3 - 2*x*y", "h*x^2 + y^2", "x^3*y^2*z"] {
        let p = s(src).numer().clone();
        let parts = harmonic_decomposition(&p);
        let mut back = Poly::zero();
        for (j, h) in &parts {
            back = back.add(&r2.pow(*j).mul(h));
        }
        assert_eq!(back, p, "{src}");
    }
    let parts = harmonic_decomposition(&s("x^2").numer().clone());
    assert_eq!(parts, vec![(0, s("2/3*x^2 - 1/3*y^2 - 1/3*z^2").numer().clone()), (1, Poly::constant(s("1/3").as_gauss().unwrap()))]);
}

#[test]
fn alpha_is_injective() {
    let u2 = u2();
    for conv in RadiusConvention::ALL {
        let (rank, n) = alpha_injectivity(&u2, 6, conv);
        assert_eq!(rank, n, "{conv:?}");
    }
}

#[test]
fn alpha_of_invariant_operators() {
    let u2 = u2();
    for conv in RadiusConvention::ALL {
        assert_eq!(alpha_operator(&u2, &ClassicalOperator::q(), conv).unwrap(), u2.q());
        assert_eq!(alpha_operator(&u2, &ClassicalOperator::laplacian(), conv).unwrap(), u2.laplacian());
        let dt = alpha_operator(&u2, &ClassicalOperator::partial(0), conv).unwrap();
        assert_eq!(dt, u2.dt());
    }
}

#[test]
fn classical_composition() {
    let q = ClassicalOperator::q();
    let f = s("x^3*y + t*z^2");
    assert_eq!(q.compose(&q).apply(&f), q.apply(&q.apply(&f)));
    // Q² = Q + Σ xₐx_b ∂ₐ∂_b
    assert_eq!(q.compose(&q).terms.len(), 3 + 6);
    assert_eq!(q.apply(&f), s("4*x^3*y + 2*t*z^2"));
}

#[test]
fn alpha_q2_holds_under_one_convention() {
    let u2 = u2();
    let minus = alpha_q2_check(&u2, RadiusConvention::MinusQuarter, 3).unwrap();
    let plus = alpha_q2_check(&u2, RadiusConvention::PlusQuarter, 3).unwrap();
    assert!(!minus.holds());
    assert!(plus.holds());
    assert_eq!(plus.image.coeff(InvariantBasis::Q2), Scalar::one());
    assert_eq!(plus.image.coeff(InvariantBasis::Delta), s("h^2/12"));
    assert_eq!(plus.image.coeff(InvariantBasis::QDt), s("-h/2"));
    assert_eq!(minus.image.coeff(InvariantBasis::Delta), s("-h^2/12"));
    assert_eq!(minus.image.coeff(InvariantBasis::QDt), s("-h/2"));
    // α(Q²) ≠ Q̂²
    assert_ne!(plus.image.terms.len(), 1);
}

#[test]
fn dirac_squares_to_dalembert() {
    let u2 = u2();
    let g = gamma_matrices();
    for a in 0..4 {
        for b in 0..4 {
            let anti = g[a].mul(&g[b]).add(&g[b].mul(&g[a]));
            let want = if a != b { 0 } else if a == 0 { 2 } else { -2 };
            assert_eq!(anti, braided_core::ScalarMatrix::scalar_identity(4, &Scalar::from_int(want)));
        }
    }
    assert!(dirac_residual(&u2).iter().flatten().all(NCPoly::is_zero));
}

#[test]
fn dalembert_and_maxwell() {
    let u2 = u2();
    let boxed = dalembert(&u2);
    assert!(u2.act(&boxed, &u2.b()).is_zero());
    assert!(u2.act(&boxed, &u2.b_pow(2)).is_zero());
    let ds = [u2.dt(), letter(DX as usize), letter(DY as usize), letter(DZ as usize)];
    for g in [u2.b(), u2.b_pow(2), u2.cas(), letter(T as usize).mul(&u2.b())] {
        let v: [NCPoly; 4] = std::array::from_fn(|i| u2.act(&ds[i], &g));
        assert!(maxwell(&u2, &v).iter().all(NCPoly::is_zero));
    }
    // a non-gradient potential is not annihilated
    let v = [NCPoly::zero(), letter(Y as usize).pow(2), NCPoly::zero(), NCPoly::zero()];
    assert!(!maxwell(&u2, &v).iter().all(NCPoly::is_zero));
}

#[test]
fn flat_laplace_beltrami() {
    let flat = MetricProfile::flat();
    let cl = lb_classical(&flat);
    assert_eq!(cl.terms.len(), 2);
    assert_eq!(cl.coeff(InvariantBasis::Dt2), Scalar::one());
    assert_eq!(cl.coeff(InvariantBasis::Delta), -Scalar::one());
    assert_eq!(lb_quantum(&flat), cl);
    // □̂(μ²) = ∂̂_t(6ℏ) − Δ̂(μ²) = 24
    let sp = SpectralMatrices::new();
    let out = sp.act_combination(&lb_quantum(&flat).combination(), &IsotypicElement::new(s("mu^2"), 0));
    assert_eq!(out.f, s("24"));
}

#[test]
fn schwarzschild_laplace_beltrami() {
    let sw = MetricProfile::schwarzschild();
    let cl = lb_classical(&sw);
    assert_eq!(cl.coeff(InvariantBasis::Dt2), s("r/(r-rg)"));
    assert_eq!(cl.coeff(InvariantBasis::Q2), s("rg/r^3"));
    assert_eq!(cl.coeff(InvariantBasis::Q), Scalar::zero());
    let q = lb_quantum(&sw).map_coeffs(QuantumRadiusFrame::in_rhat);
    assert_eq!(q.coeff(InvariantBasis::Dt2), s("rhat/(rhat-rg)"));
    assert_eq!(q.coeff(InvariantBasis::Q2), s("rg/rhat^3"));
    assert_eq!(q.coeff(InvariantBasis::Q), Scalar::zero());
    assert_eq!(q.coeff(InvariantBasis::QDt), s("-h/2*rg/rhat^3"));
    assert_eq!(q.coeff(InvariantBasis::Delta), s("-(1 - h^2/12*rg/rhat^3)"));
    assert_eq!(q.terms.len(), 4);
}

#[test]
fn quantization_of_laplace_beltrami() {
    let u2 = u2();
    let profiles = [
        MetricProfile::flat(),
        MetricProfile::schwarzschild(),
        "1 - rg/r + rg^2/r^2".parse::<MetricProfile>().unwrap(),
        "(r+1)/(r+2)".parse::<MetricProfile>().unwrap(),
    ];
    for m in &profiles {
        let quantized = alpha_invariant(&u2, &lb_classical(m), RadiusConvention::PlusQuarter).unwrap();
        assert_eq!(quantized, lb_quantum(m), "{}", m.phi());
    }
    let sw = alpha_invariant(&u2, &lb_classical(&profiles[1]), RadiusConvention::MinusQuarter).unwrap();
    assert_ne!(sw, lb_quantum(&profiles[1]));
}

#[test]
fn two_classical_forms_agree() {
    let profiles = [MetricProfile::flat(), MetricProfile::schwarzschild(), "r^2/(r^2+rg)".parse().unwrap()];
    for m in &profiles {
        let op = lb_classical(m);
        for g in ["t^2*r^3 + r", "1/(r+t)", "t*r^4 - 3"] {
            for k in 0..4 {
                assert_eq!(lb_eq54_isotypic(m, &s(g), k), classical_isotypic(&op, &s(g), k), "{g} {k}");
            }
        }
    }
}

#[test]
fn metric_profile_errors() {
    assert!(matches!(MetricProfile::new(Scalar::zero()), Err(QuantizeError::DegenerateMetric)));
    assert!("0".parse::<MetricProfile>().is_err());
    assert!("r +".parse::<MetricProfile>().is_err());
    assert_eq!("schwarzschild".parse::<MetricProfile>().unwrap(), MetricProfile::schwarzschild());
}

#[test]
fn decomposition_rejects_non_invariant() {
    let u2 = u2();
    assert!(matches!(decompose_invariant(&u2, &letter(DX as usize)), Err(QuantizeError::OutsideInvariantSpan)));
    let d = decompose_invariant(&u2, &u2.q().mul(&u2.dt())).unwrap();
    assert_eq!(d.terms.len(), 1);
    assert_eq!(d.coeff(InvariantBasis::QDt), Scalar::one());
    // ∂̂_t does not commute with Q̂, but the product stays in the span
    let d = decompose_invariant(&u2, &u2.dt().mul(&u2.q())).unwrap();
    assert_eq!(d.coeff(InvariantBasis::QDt), Scalar::one());
    assert_eq!(d.terms.len(), 2);
}

#[test]
fn laplace_beltrami_difference_form() {
    let sp = SpectralMatrices::new();
    let sw = lb_quantum(&MetricProfile::schwarzschild());
    let combo = sw.combination();
    for k in 0..3 {
        let d = sp.difference_form(&combo, k);
        for f in ["mu^2*t", "t^2 + mu"] {
            let e = IsotypicElement::new(s(f), k);
            assert_eq!(d.apply(&s(f)), sp.act_combination(&combo, &e).f);
        }
        assert!(d.terms.iter().all(|x| x.dt >= Rational64::from_integer(0)));
    }
    // shifts of the flat operator on component 0: t, t + ℏ/2 and t + ℏ
    let flat = sp.difference_form(&lb_quantum(&MetricProfile::flat()).combination(), 0);
    assert_eq!(flat.apply(&s("1/(mu+t)")), {
        let e = IsotypicElement::new(s("1/(mu+t)"), 0);
        sp.act_combination(&lb_quantum(&MetricProfile::flat()).combination(), &e).f
    });
    assert_eq!(sp.difference_form(&combo, 0).terms.len(), 6);
}
