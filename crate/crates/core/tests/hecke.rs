use braided_core::exact::{parse_scalar, Scalar, ScalarMatrix, UniPoly, UniVar};
use braided_core::hecke::*;
use braided_core::ExecMode;

fn t(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(UniVar::T, c)
}

#[test]
fn qybe_for_presets() {
    for d in 1..=3 {
        assert!(check_qybe(&Braiding::flip(d)).is_zero());
    }
    assert!(check_qybe(&Braiding::standard(2)).is_zero());
    assert!(check_qybe(&Braiding::standard(3)).is_zero());
    assert!(check_qybe(&Braiding::super_flip(1, 1)).is_zero());
}

#[test]
fn perturbed_flip_breaks_qybe() {
    let mut m = Braiding::flip(2).matrix().clone();
    m.set(1, 1, Scalar::from_int(2));
    let r = Braiding::new(2, m, None).unwrap();
    assert!(!check_qybe(&r).is_zero());
}

#[test]
fn hecke_conditions() {
    assert!(check_hecke(&Braiding::flip(2), &Scalar::one()).unwrap().is_zero());
    let std = Braiding::standard(2);
    assert!(check_hecke(&std, &Scalar::q()).unwrap().is_zero());
    assert!(!check_hecke(&std, &Scalar::q().pow(2)).unwrap().is_zero());
}

#[test]
fn standard_skew_data() {
    let r = Braiding::standard(2);
    let s = skew_inverse(&r).unwrap();
    let (e1, e2) = skew_residuals(r.matrix(), &s.psi, 2);
    assert!(e1.is_zero() && e2.is_zero());
    let want = parse_scalar("q^-1 + q^-3").unwrap();
    assert_eq!(s.b_op.trace(), want);
    assert_eq!(s.c_op.trace(), want);
    for (i, j, _) in s.b_op.nonzero_entries().into_iter().chain(s.c_op.nonzero_entries()) {
        assert_eq!(i, j, "B and C are diagonal");
    }
}

#[test]
fn super_flip_skew_data_is_parity() {
    let r = Braiding::super_flip(1, 1);
    let s = skew_inverse(&r).unwrap();
    let parity = ScalarMatrix::from_rows(vec![
        vec![Scalar::one(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::from_int(-1)],
    ]);
    assert_eq!(s.b_op, parity);
    assert_eq!(s.c_op, parity);
}

#[test]
fn extension_is_a_braiding() {
    for r in [Braiding::flip(2), Braiding::standard(2), Braiding::super_flip(1, 1)] {
        let s = skew_inverse(&r).unwrap();
        let ext = extend_braiding(&r, &s);
        assert!(check_qybe(&ext).is_zero());
        assert!(pairing_invariance(&ext));
    }
    let p = Braiding::flip(2);
    let ext = extend_braiding(&p, &skew_inverse(&p).unwrap());
    assert_eq!(*ext.matrix(), flip_matrix(4));
}

#[test]
fn extension_d3() {
    let r = Braiding::flip(3);
    let ext = extend_braiding(&r, &skew_inverse(&r).unwrap());
    assert!(check_qybe(&ext).is_zero());
}

#[test]
fn psi_of_inverse() {
    let r = Braiding::standard(2);
    let s = skew_inverse(&r).unwrap();
    assert!(psi_inverse_check(&r, &s, (2, 0)).unwrap());
    assert!(!psi_inverse_check(&r, &s, (3, 0)).unwrap());
    let p = Braiding::flip(2);
    assert!(psi_inverse_check(&p, &skew_inverse(&p).unwrap(), (2, 0)).unwrap());
}

#[test]
fn symmetrizers_are_idempotent_and_complementary() {
    let r = Braiding::standard(2);
    for k in 2..=3 {
        for sign in [Sign::Plus, Sign::Minus] {
            let p = symmetrizer(&r, k, sign).unwrap();
            assert_eq!(p.mul(&p), p, "k={k} {sign:?}");
        }
    }
    let plus = symmetrizer(&r, 2, Sign::Plus).unwrap();
    let minus = symmetrizer(&r, 2, Sign::Minus).unwrap();
    assert_eq!(plus.rank() + minus.rank(), 4);
    assert_eq!(plus.add(&minus), ScalarMatrix::identity(4));
}

#[test]
fn degenerate_q_is_rejected() {
    let r = Braiding::standard_at(2, &Scalar::i());
    assert_eq!(symmetrizer(&r, 2, Sign::Plus), Err(HeckeError::DegenerateQ(2)));
}

#[test]
fn ph_series_presets() {
    let flip = ph_series(&Braiding::flip(2), 5, ExecMode::Parallel).unwrap();
    assert_eq!(flip.dims_minus, vec![1, 2, 1, 0, 0, 0]);
    assert_eq!(flip.p_minus, (t(&[1, 2, 1]), t(&[1])));
    assert_eq!(flip.bi_rank, (2, 0));
    assert!(flip.series_product_is_one);

    let sup = ph_series(&Braiding::super_flip(1, 1), 5, ExecMode::Sequential).unwrap();
    assert_eq!(sup.dims_minus, vec![1, 2, 2, 2, 2, 2]);
    assert_eq!(sup.p_minus, (t(&[1, 1]), t(&[1, -1])));
    assert_eq!(sup.bi_rank, (1, 1));
}

#[test]
fn ph_series_standard_matches_flip() {
    let std = ph_series(&Braiding::standard(2), 4, ExecMode::Parallel).unwrap();
    assert_eq!(std.dims_minus, vec![1, 2, 1, 0, 0]);
    assert_eq!(std.dims_plus, vec![1, 2, 3, 4, 5]);
    assert_eq!(std.bi_rank, (2, 0));
}

#[test]
fn ph_series_needs_skew_invertibility() {
    assert_eq!(ph_series(&Braiding::identity(2), 3, ExecMode::Sequential), Err(HeckeError::NotSkewInvertible));
}

#[test]
fn mountain_on_products() {
    let p = t(&[1, 2, 1]).mul(&t(&[1, 3, 1]));
    assert_eq!(p, t(&[1, 5, 8, 5, 1]));
    assert_eq!(mountain_check(&p), MountainResult::Pass);
    assert!(reciprocal_check(&p, &t(&[1])));
    assert_eq!(factor_mountain(&p).product(), p);
}
