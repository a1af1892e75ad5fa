use braided_core::exec::ExecMode;
use braided_core::hecke::{Braiding, SkewData};
use braided_core::nc::{NCPoly, Word};
use braided_core::re_weyl::leibniz::{self, all_monomials};
use braided_core::re_weyl::*;
use braided_core::{Scalar, ScalarMatrix};

fn h() -> Scalar {
    Scalar::h()
}

#[test]
fn re_at_flip_is_commutative() {
    let re = build_re(&Braiding::flip(2)).unwrap();
    re.certify().unwrap();
    assert_eq!(re.rank(), 6);
    for ((b, a), rhs) in re.system.rules() {
        assert!(b > a);
        assert_eq!(*rhs, NCPoly::word(Word(vec![*a, *b])));
    }
}

#[test]
fn re_standard_has_six_relations() {
    let re = build_re(&Braiding::standard(2)).unwrap();
    assert_eq!(re.rank(), 6);
    re.certify().unwrap();
}

#[test]
fn shift_reproduces_modified_relations() {
    let re = build_re(&Braiding::standard(2)).unwrap();
    assert!(modified_re_shift_check(&re, ShiftSign::Minus));
    assert!(!modified_re_shift_check(&re, ShiftSign::Plus));
}

#[test]
fn shift_check_rejects_non_hecke_matrix() {
    let mut m = Braiding::standard(2).matrix().clone();
    m.set(0, 0, Scalar::from_int(2));
    let r = Braiding::new(2, m, Some(Scalar::q())).unwrap();
    if let Ok(re) = build_re(&r) {
        assert!(!modified_re_shift_check(&re, ShiftSign::Minus));
    }
}

#[test]
fn modified_re_at_flip_is_ugl() {
    for m in [2, 3] {
        let mre = build_mre(&Braiding::flip(m)).unwrap();
        assert!(matches_ugl(&mre), "m = {m}");
        mre.certify().unwrap();
    }
}

#[test]
fn oracle_pairing_at_flip() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            let d = NCPoly::letter(w.d_letter(i, j));
            assert!(act_weyl_oracle(&w, &d, &NCPoly::one()).is_zero());
            for k in 0..2 {
                for l in 0..2 {
                    let v = act_weyl_oracle(&w, &d, &NCPoly::letter(w.n_letter(k, l)));
                    let want = if i == l && k == j { NCPoly::one() } else { NCPoly::zero() };
                    assert_eq!(v, want);
                }
            }
        }
    }
    // d_1^1 ▷ n_1^2 n_2^1 = ℏ
    let d11 = NCPoly::letter(w.d_letter(0, 0));
    let x = NCPoly::letter(w.n_letter(0, 1)).mul(&NCPoly::letter(w.n_letter(1, 0)));
    assert_eq!(act_weyl_oracle(&w, &d11, &x), NCPoly::scalar(h()));
}

#[test]
fn leibniz_degree_two_display() {
    // D₁ ▷ N₂N₃ = N₂𝓡₁₃ + N₃𝓡₁₂ + ℏ𝓡₁₂𝓡₂₃, entry (i,a,b),(j,c,e)
    let m = 2;
    for (i, j, a, c, b, e) in itertools(m) {
        let got = leibniz::closed_form_action(m, (i, j), &[(a, c), (b, e)]);
        let mut want = NCPoly::zero();
        if i == e && b == j {
            want.add_assign(&leibniz::monomial_poly(m, &[(a, c)]));
        }
        if i == c && a == j {
            want.add_assign(&leibniz::monomial_poly(m, &[(b, e)]));
        }
        if a == j && b == c && i == e {
            want.add_assign(&NCPoly::scalar(h()));
        }
        assert_eq!(got, want);
    }
}

fn itertools(m: usize) -> Vec<(usize, usize, usize, usize, usize, usize)> {
    let mut v = Vec::new();
    for x in 0..m.pow(6) {
        let d: Vec<usize> = (0..6).map(|k| (x / m.pow(k)) % m).collect();
        v.push((d[0], d[1], d[2], d[3], d[4], d[5]));
    }
    v
}

#[test]
fn operator_form_of_leibniz_rule() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    for p in 2..=4 {
        assert!(leibniz::leibniz_closed_form(&w, p).unwrap().is_zero(), "p = {p}");
    }
}

#[test]
fn operator_form_for_super_flip() {
    let w = build_weyl(&Braiding::super_flip(1, 1)).unwrap();
    for p in 2..=3 {
        assert!(leibniz::leibniz_closed_form(&w, p).unwrap().is_zero(), "p = {p}");
    }
}

#[test]
fn closed_form_rejects_non_involutive() {
    let w = build_weyl(&Braiding::standard(2)).unwrap();
    assert_eq!(leibniz::leibniz_closed_form(&w, 2), Err(ReError::NotInvolutive));
}

#[test]
fn evaluators_agree_m2_degree_three() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    let monos: Vec<_> = (0..=3).flat_map(|d| all_monomials(2, d)).collect();
    let rep = leibniz::sweep(&w, &monos, ExecMode::Parallel).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures.first());
    assert_eq!(rep.checked, 85 * 4);
}

#[test]
fn coproduct_spot_value() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    let mut red = w.reducer();
    let mono = [(1, 0), (0, 0)];
    let oracle = leibniz::oracle_action(&w, &mut red, (0, 1), &mono);
    assert_eq!(red.nf(&leibniz::coproduct_action(2, (0, 1), &mono)), oracle);
    // d_1^2 ▷ n_2^1 n_1^1 = n_1^1 + ℏ
    let want = NCPoly::letter(w.n_letter(0, 0)).add(&NCPoly::scalar(h()));
    assert_eq!(oracle, want);
}

#[test]
fn chains_and_exchange_identities() {
    for r in [Braiding::flip(2), Braiding::super_flip(1, 1)] {
        let a = equation_matrix(&r);
        for total in 2..=4 {
            for k in 1..total {
                for p in k + 1..=total {
                    assert!(RChain::definitions_agree(&a, 2, k, p, total));
                }
            }
        }
        assert!(exchange_identities(&a, &generator_matrix(2, 0), 2, 4));
    }
}

#[test]
fn chain_forms_agree_for_standard() {
    let a = equation_matrix(&Braiding::standard(2));
    assert!(RChain::definitions_agree(&a, 2, 1, 3, 3));
    assert!(RChain::definitions_agree(&a, 2, 1, 4, 4));
}

#[test]
fn shifted_derivative_exchange() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    assert!(d_tilde_exchange_check(&w, 4));
}

fn c_is_identity(s: &SkewData) -> bool {
    c_matrix(s) == ScalarMatrix::identity(c_matrix(s).rows())
}

#[test]
fn traces() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    assert!(c_is_identity(&w.skew));
    let t1 = braided_trace(&w.skew, &w.n_matrix(), 1);
    let want = NCPoly::letter(w.n_letter(0, 0)).add(&NCPoly::letter(w.n_letter(1, 1)));
    assert_eq!(t1, want);
    assert_eq!(braided_trace(&w.skew, &w.n_matrix(), 0), NCPoly::scalar(Scalar::from_int(2)));

    let re = build_re(&Braiding::standard(2)).unwrap();
    let q = Scalar::q();
    let tr0 = braided_trace(&re.skew, &re.generators(), 0);
    assert_eq!(tr0, NCPoly::scalar(&q.pow(-1) + &q.pow(-3)));
}

#[test]
fn traceless() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    let id = OpMatrix::identity(2);
    assert!(traceless_part(&w.skew, &id).unwrap().is_zero());
    let n = w.n_matrix();
    let tl = traceless_part(&w.skew, &n).unwrap();
    let half = Scalar::from_ratio(1, 2);
    let t = NCPoly::letter(w.n_letter(0, 0)).add(&NCPoly::letter(w.n_letter(1, 1))).scale(&half);
    assert_eq!(tl.get(0, 0), &NCPoly::letter(w.n_letter(0, 0)).sub(&t));
    assert_eq!(tl.get(0, 1), &NCPoly::letter(w.n_letter(0, 1)));

    let sf = build_weyl(&Braiding::super_flip(1, 1)).unwrap();
    assert_eq!(traceless_part(&sf.skew, &sf.n_matrix()), Err(ReError::ZeroTrace));
}

#[test]
fn re_traces_are_central() {
    let re = build_re(&Braiding::standard(2)).unwrap();
    for k in 1..=2 {
        let t = braided_trace(&re.skew, &re.generators(), k);
        let res = centrality_check(&re.system, &t);
        assert!(res.passed(), "k = {k}: {res:?}");
    }
    let l12 = NCPoly::letter(2);
    assert!(!centrality_check(&re.system, &l12).passed());
}

#[test]
fn ugl_traces_are_central() {
    let rs = ugl(2).unwrap();
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    for k in 1..=3 {
        let t = braided_trace(&w.skew, &w.n_matrix(), k);
        assert!(centrality_check(&rs, &t).passed(), "k = {k}");
    }
}

#[test]
fn laplace_experiment_small() {
    let w = build_weyl(&Braiding::flip(2)).unwrap();
    for k in 1..=2 {
        for j in 1..=3 {
            assert!(laplace_center_experiment(&w, k, j).passed(), "k = {k}, j = {j}");
        }
    }
}

#[test]
fn standard_weyl_is_confluent() {
    let w = build_weyl(&Braiding::standard(2)).unwrap();
    assert_eq!(w.relations.iter().map(|r| r.len()).sum::<usize>() > 0, true);
}

#[test]
fn involutivity_is_needed_for_exchange_rules() {
    let w = build_weyl(&Braiding::standard(2)).unwrap();
    assert!(!d_tilde_exchange_check(&w, 2));
    assert!(!exchange_identities(&equation_matrix(&w.braiding), &w.n_matrix(), 2, 3));
    let w3 = build_weyl(&Braiding::flip(3)).unwrap();
    assert!(d_tilde_exchange_check(&w3, 3));
}

#[test]
fn evaluators_agree_m3_degree_two() {
    let w = build_weyl(&Braiding::flip(3)).unwrap();
    let monos: Vec<_> = (0..=2).flat_map(|d| all_monomials(3, d)).collect();
    let rep = leibniz::sweep(&w, &monos, ExecMode::Sequential).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures.first());
}
