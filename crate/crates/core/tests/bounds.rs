use hh_core::hh_bounds::{
    abs_half_check, first_order_bounds, hh_classic_check, k2_derived, k2_printed, lemma_identity_residual,
    second_order_bounds, three_point_check, uniform_bound_remarks, Lemma,
};
use hh_core::{parse, HhError, Interval64, Tolerance64};

fn iv(a: f64, b: f64) -> Interval64 {
    Interval64::new(a, b).unwrap()
}

fn cfg() -> Tolerance64 {
    Tolerance64::default()
}

fn close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol
}

#[test]
fn classic_examples() {
    let (l, r) = hh_classic_check(&parse("x^2").unwrap(), &iv(0.0, 2.0), &cfg()).unwrap();
    assert!(close(l.lhs, 1.0, 1e-15) && close(l.rhs, 4.0 / 3.0, 1e-12));
    assert!(close(r.lhs, 4.0 / 3.0, 1e-12) && close(r.rhs, 2.0, 1e-15));
    assert!(l.satisfied && r.satisfied);

    let (l, r) = hh_classic_check(&parse("x").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    assert!(close(l.margin, 0.0, 1e-12) && close(r.margin, 0.0, 1e-12));

    let e = std::f64::consts::E;
    let (l, r) = hh_classic_check(&parse("exp(x)").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    assert!(close(l.lhs, 0.5f64.exp(), 1e-15) && close(l.rhs, e - 1.0, 1e-12));
    assert!(close(r.rhs, (1.0 + e) / 2.0, 1e-15));
}

#[test]
fn classic_rejects_concave() {
    let err = hh_classic_check(&parse("-x^2").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap_err();
    assert!(matches!(err, HhError::NotConvex { .. }), "{err:?}");
}

#[test]
fn lemma_examples() {
    let r = lemma_identity_residual(Lemma::Lemma1, &parse("x^2").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    assert!(r < 1e-10);
    for (a, b) in [(0.0, 1.0), (-3.0, 2.5), (10.0, 11.0)] {
        let r = lemma_identity_residual(Lemma::Lemma2, &parse("3*x - 7").unwrap(), &iv(a, b), &cfg()).unwrap();
        assert!(r < 1e-12);
    }
    let r = lemma_identity_residual(Lemma::Lemma1, &parse("exp(x)").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    assert!(r < 1e-8);
    let r = lemma_identity_residual(Lemma::Lemma2, &parse("exp(x)").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    assert!(r < 1e-8);
}

#[test]
fn three_point_examples() {
    let (l, r) = three_point_check(&parse("x^2").unwrap(), &iv(0.0, 2.0), &cfg()).unwrap();
    assert!(close(l.lhs, 1.0, 1e-12) && close(l.rhs, 4.0 / 3.0, 1e-12));
    assert!(close(r.lhs, 4.0 / 3.0, 1e-12) && close(r.rhs, 3.0, 1e-12));

    let (l, r) = three_point_check(&parse("x").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    for v in [l.lhs, l.rhs, r.lhs, r.rhs] {
        assert!(close(v, 0.5, 1e-12));
    }

    let (_, r) = three_point_check(&parse("exp(x)").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    let want = (2.0 * 0.5f64.exp() + 1.5f64.exp() + (-0.5f64).exp()) / 4.0;
    assert!(close(r.rhs, want, 1e-14) && r.satisfied);
}

#[test]
fn three_point_guards_extended_domain() {
    // [1, 4] extends to [-0.5, 5.5], where log is undefined
    let err = three_point_check(&parse("-log(x)").unwrap(), &iv(1.0, 4.0), &cfg()).unwrap_err();
    assert!(matches!(err, HhError::Domain { .. }), "{err:?}");
}

#[test]
fn abs_half_examples() {
    let r = abs_half_check(&parse("x").unwrap(), &iv(0.0, 1.0), &cfg()).unwrap();
    assert!(close(r.lhs, 0.25, 1e-12) && close(r.rhs, 0.25, 1e-15));
    assert!(r.satisfied && r.fragile);

    let r = abs_half_check(&parse("x^2").unwrap(), &iv(0.0, 2.0), &cfg()).unwrap();
    assert!(close(r.lhs, 5.0 / 6.0, 1e-12) && close(r.rhs, 2.5, 1e-15));
    assert!(r.satisfied);

    let r = abs_half_check(&parse("x^2 - 5").unwrap(), &iv(0.0, 2.0), &cfg()).unwrap();
    assert!(close(r.lhs, 5.0 / 3.0, 1e-12));
    assert_eq!(r.rhs, 0.0);
    assert!(!r.satisfied && r.fragile);
}

#[test]
fn first_order_examples() {
    let b = first_order_bounds(&parse("x^2").unwrap(), &iv(0.0, 1.0), 1.0, &cfg()).unwrap();
    assert!(close(b.lhs, 1.0 / 12.0, 1e-12));
    assert!(close(b.rhs_thm2, 0.5, 1e-15));
    assert_eq!(b.k1, 0.125);
    assert!(b.p.is_none() && b.rhs_thm3.is_none() && b.k2_derived.is_none());
    assert_eq!(b.rhs_min, b.rhs_thm2);
    assert!(b.reports(&cfg()).iter().all(|r| r.satisfied));

    let b = first_order_bounds(&parse("x^2").unwrap(), &iv(0.0, 1.0), 2.0, &cfg()).unwrap();
    assert!(close(b.rhs_thm3.unwrap(), (5.0f64 / 24.0).sqrt(), 1e-15));
    assert_eq!(b.p, Some(2.0));
    assert!(b.lhs <= b.rhs_min);

    for (a, w) in [(0.0, 1.0), (-4.0, 0.3), (7.0, 2.0)] {
        let b = first_order_bounds(&parse("2.5*x + 1").unwrap(), &iv(a, a + w), 1.0, &cfg()).unwrap();
        assert!(b.lhs < 1e-12);
    }
}

#[test]
fn first_order_rejects_small_q() {
    let err = first_order_bounds(&parse("x^2").unwrap(), &iv(0.0, 1.0), 0.5, &cfg()).unwrap_err();
    assert!(matches!(err, HhError::InvalidArgument(_)));
}

#[test]
fn second_order_examples() {
    let b = second_order_bounds(&parse("x^2").unwrap(), &iv(0.0, 1.0), 1.0, &cfg()).unwrap();
    assert!(close(b.lhs, 5.0 / 12.0, 1e-12));
    assert!(close(b.rhs_k3, 2.0 / 3.0, 1e-15));
    assert!(b.rhs_k4.is_none() && b.rhs_k5.is_none());
    // q = 1: (b-a)^2 (1/12) (2 s + 2 s) with s = 2
    assert!(close(b.rhs_k6, 2.0 / 3.0, 1e-15));

    let b = second_order_bounds(&parse("4*x - 1").unwrap(), &iv(0.0, 1.0), 1.0, &cfg()).unwrap();
    assert!(b.lhs < 1e-12 && b.rhs_k3 == 0.0);

    let b = second_order_bounds(&parse("exp(x)").unwrap(), &iv(0.0, 1.0), 2.0, &cfg()).unwrap();
    let rhs = [b.rhs_k3, b.rhs_k4.unwrap(), b.rhs_k5.unwrap(), b.rhs_k6];
    assert_eq!(b.rhs_min, rhs.iter().copied().fold(f64::INFINITY, f64::min));
    assert!(b.lhs <= b.rhs_min);
    let labels: Vec<_> = b.reports(&cfg()).into_iter().map(|r| r.label).collect();
    assert_eq!(labels, ["thm4", "thm5", "thm6", "thm7", "cor2"]);
}

#[test]
fn remark_examples() {
    let (first, _) = uniform_bound_remarks(2.0, &iv(0.0, 1.0), 2.0).unwrap();
    assert!(close(first, 2.0 / 3.0, 1e-15));
    assert_eq!(uniform_bound_remarks(0.0, &iv(-1.0, 3.0), 3.0).unwrap(), (0.0, 0.0));
    let (_, second) = uniform_bound_remarks(1.0, &iv(0.0, 2.0), 2.0).unwrap();
    assert!(close(second, 2.0 * (8.0f64 / 15.0).sqrt(), 1e-13));
    assert!(uniform_bound_remarks(-1.0, &iv(0.0, 1.0), 2.0).is_err());
}

#[test]
fn corollary_constants() {
    // q = 2: p = 2, derived (1/(3·16))^{1/2}, printed (1/(3·2^{3.25}))^{1/2}
    assert!(close(k2_derived(2.0), (1.0f64 / 48.0).sqrt(), 1e-16));
    assert!(close(k2_printed(2.0, 2.0), (1.0 / (3.0 * 2f64.powf(3.25))).sqrt(), 1e-16));
    assert!(k2_derived(2.0) <= k2_printed(2.0, 2.0));
}
