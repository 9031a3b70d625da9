use hh_core::exprlang::{Expr, Func};
use hh_core::hh_bounds::{first_order_bounds, k2_derived, k2_printed, second_order_bounds, three_point_check};
use hh_core::oracle::diff_ref;
use hh_core::quadrature::{midpoint_error_bound, midpoint_t2, trapezoid_t1, Partition};
use hh_core::special::{beta, derivative_formula_check, gamma, log_gamma, q_digamma_deriv};
use hh_core::{conjugate_exponent, eval_jet, parse, Interval64, Jet64, Tolerance64};
use proptest::prelude::*;

fn cfg() -> Tolerance64 {
    Tolerance64::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn thm2_scale_covariant(a in -3.0f64..3.0, w in 0.1f64..2.0, c in 0.1f64..10.0, q in 1.0f64..4.0) {
        let iv = Interval64::new(a, a + w).unwrap();
        let f = parse::<f64>("exp(x)").unwrap();
        let g = Expr::Mul(Box::new(Expr::Const(c)), Box::new(f.clone()));
        let rf = first_order_bounds(&f, &iv, q, &cfg()).unwrap().rhs_thm2;
        let rg = first_order_bounds(&g, &iv, q, &cfg()).unwrap().rhs_thm2;
        prop_assert!((rg - c * rf).abs() <= 1e-13 * rg);
    }

    #[test]
    fn printed_constant_is_looser(q in 1.0001f64..10.0) {
        let p = conjugate_exponent(q).unwrap();
        prop_assert!(k2_derived(p) <= k2_printed(p, q));
    }

    #[test]
    fn affine_has_zero_lhs(a in -50.0f64..50.0, w in 0.01f64..20.0, m in -5.0f64..5.0, c in -5.0f64..5.0) {
        let iv = Interval64::new(a, a + w).unwrap();
        let f = Expr::Add(
            Box::new(Expr::Mul(Box::new(Expr::Const(m)), Box::new(Expr::Var))),
            Box::new(Expr::Const(c)),
        );
        let scale = 1e-12 * (1.0 + (m * a).abs() + (m * w).abs() + c.abs());
        prop_assert!(first_order_bounds(&f, &iv, 1.0, &cfg()).unwrap().lhs <= scale);
        prop_assert!(second_order_bounds(&f, &iv, 2.0, &cfg()).unwrap().lhs <= scale);
    }

    #[test]
    fn three_point_holds_on_battery(which in 0usize..4, a in 0.5f64..5.0, w in 0.1f64..2.0) {
        let f = parse::<f64>(["x^2", "x^4", "exp(x)", "cosh(x)"][which]).unwrap();
        let (l, r) = three_point_check(&f, &Interval64::new(a, a + w).unwrap(), &cfg()).unwrap();
        prop_assert!(l.satisfied && r.satisfied);
    }

    #[test]
    fn trapezoid_midpoint_bracket(which in 0usize..4, a in 0.5f64..5.0, w in 0.1f64..2.0, m in 1usize..20) {
        let f = parse::<f64>(["x^2", "x^4", "exp(x)", "cosh(x)"][which]).unwrap();
        let iv = Interval64::new(a, a + w).unwrap();
        let part = Partition::uniform(&iv, m).unwrap();
        let exact = hh_core::oracle::integrate_ref(|x| f.eval(x), &iv, 1e-13, &cfg()).unwrap().value;
        let slack = 1e-12 * exact.abs();
        prop_assert!(midpoint_t2(&f, &part).unwrap() <= exact + slack);
        prop_assert!(exact <= trapezoid_t1(&f, &part).unwrap() + slack);
    }

    #[test]
    fn certificate_sound_and_monotone(which in 0usize..4, a in 0.5f64..5.0, w in 0.1f64..2.0, m in 1usize..16) {
        let f = parse::<f64>(["x^2", "x^4", "exp(x)", "cosh(x)"][which]).unwrap();
        let iv = Interval64::new(a, a + w).unwrap();
        let coarse = Partition::uniform(&iv, m).unwrap();
        let fine = Partition::uniform(&iv, 2 * m).unwrap();
        let exact = hh_core::oracle::integrate_ref(|x| f.eval(x), &iv, 1e-13, &cfg()).unwrap().value;
        let bc = midpoint_error_bound(&f, &coarse, 1.0, &cfg()).unwrap();
        let bf = midpoint_error_bound(&f, &fine, 1.0, &cfg()).unwrap();
        prop_assert!((exact - midpoint_t2(&f, &coarse).unwrap()).abs() <= bc);
        prop_assert!(bf <= bc * (1.0 + 1e-12));
    }

    #[test]
    fn jet_linearity_and_product(x in 0.2f64..3.0, c in -3.0f64..3.0) {
        let u = parse::<f64>("exp(x) * sqrt(x)").unwrap();
        let v = parse::<f64>("cosh(x) / x").unwrap();
        let ju = eval_jet(&u, x).unwrap();
        let jv = eval_jet(&v, x).unwrap();
        let sum = Expr::Add(Box::new(Expr::Mul(Box::new(Expr::Const(c)), Box::new(u.clone()))), Box::new(v.clone()));
        let prod = Expr::Mul(Box::new(u), Box::new(v));
        let js = eval_jet(&sum, x).unwrap();
        let jp = eval_jet(&prod, x).unwrap();
        let want_sum: Jet64 = ju.scale(c) + jv;
        let want_prod = ju * jv;
        for (got, want) in [(js, want_sum), (jp, want_prod)] {
            for (g, w) in [(got.v0, want.v0), (got.v1, want.v1), (got.v2, want.v2), (got.v3, want.v3)] {
                prop_assert!((g - w).abs() <= 1e-12 * (1.0 + w.abs()));
            }
        }
    }

    #[test]
    fn beta_matches_gamma_ratio(x in 0.05f64..10.0, y in 0.05f64..10.0) {
        let direct = gamma(x).unwrap() * gamma(y).unwrap() / gamma(x + y).unwrap();
        let b = beta(x, y).unwrap();
        prop_assert!((b - direct).abs() <= 1e-12 * direct);
        let reference = (statrs::function::gamma::ln_gamma(x) + statrs::function::gamma::ln_gamma(y)
            - statrs::function::gamma::ln_gamma(x + y)).exp();
        prop_assert!((b - reference).abs() <= 1e-12 * reference);
    }
}

/// Random expression over the grammar restricted to functions smooth on
/// `[0.5, 2]`: sums, products, quotients by positive factors, small
/// integer powers, and exp/log/sqrt/sinh/cosh of bounded arguments.
fn smooth_expr() -> impl Strategy<Value = Expr<f64>> {
    let leaf = prop_oneof![
        (-2.0f64..2.0).prop_map(Expr::Const),
        Just(Expr::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| Expr::Div(
                Box::new(a),
                Box::new(Expr::Add(Box::new(Expr::Const(3.0)), Box::new(Expr::Call(Func::Sinh, Box::new(Expr::Var))))),
            )),
            (inner.clone(), 0u8..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), f64::from(k))),
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            inner.clone().prop_map(|a| Expr::Call(Func::Exp, Box::new(Expr::Call(Func::Sinh, Box::new(a)).scaled(0.1)))),
            inner.clone().prop_map(|a| Expr::Call(Func::Cosh, Box::new(a.scaled(0.2)))),
            inner.clone().prop_map(|a| Expr::Call(
                Func::Log,
                Box::new(Expr::Add(Box::new(Expr::Const(2.0)), Box::new(Expr::Call(Func::Cosh, Box::new(a.scaled(0.1)))))),
            )),
            inner.prop_map(|a| Expr::Call(
                Func::Sqrt,
                Box::new(Expr::Add(Box::new(Expr::Const(1.0)), Box::new(Expr::Pow(Box::new(a.scaled(0.1)), 2.0)))),
            )),
        ]
    })
}

trait Scaled {
    fn scaled(self, c: f64) -> Self;
}

impl Scaled for Expr<f64> {
    fn scaled(self, c: f64) -> Self {
        Expr::Mul(Box::new(Expr::Const(c)), Box::new(self))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn jet_agrees_with_finite_differences(e in smooth_expr(), x in 0.5f64..2.0) {
        let j = match eval_jet(&e, x) {
            Ok(j) => j,
            Err(_) => return Ok(()),
        };
        prop_assume!(j.v0.is_finite() && j.v1.is_finite() && j.v2.is_finite());
        prop_assume!(j.v0.abs() < 1e6 && j.v2.abs() < 1e6);
        let d1 = diff_ref(|t| e.eval(t), x, 1).unwrap();
        let d2 = diff_ref(|t| e.eval(t), x, 2).unwrap();
        let scale = 1.0 + j.v0.abs() + j.v1.abs() + j.v2.abs();
        prop_assert!((d1 - j.v1).abs() <= 1e-6 * scale, "f' {} vs {} for {}", j.v1, d1, e);
        prop_assert!((d2 - j.v2).abs() <= 1e-4 * scale, "f'' {} vs {} for {}", j.v2, d2, e);
        // value path and jet path agree
        prop_assert!((e.eval(x).unwrap() - j.v0).abs() <= 1e-12 * (1.0 + j.v0.abs()));
        // display round-trips through the parser
        let back = parse::<f64>(&e.to_string()).unwrap();
        let v = back.eval(x).unwrap();
        prop_assert!((v - j.v0).abs() <= 1e-12 * (1.0 + j.v0.abs()), "{} -> {}", e, back);
    }
}

#[test]
fn beta_duplication_at_half() {
    for p in [0.5, 1.0, 2.0, 3.5] {
        let lhs = beta(p + 1.0, p + 1.0).unwrap();
        let rhs = 2f64.powf(1.0 - 2.0 * (p + 1.0)) * std::f64::consts::PI.sqrt()
            * (log_gamma(p + 1.0).unwrap() - log_gamma(p + 1.5).unwrap()).exp();
        assert!((lhs - rhs).abs() <= 1e-12 * lhs, "p = {p}");
    }
    let x = 2.5;
    let lhs = beta(x, x).unwrap();
    let rhs = 2f64.powf(1.0 - 2.0 * x) * beta(0.5, x).unwrap();
    assert!((lhs - rhs).abs() <= 1e-12 * lhs);
}

#[test]
fn normalized_bessel_derivative_formula() {
    for p in [-0.5, 0.5, 1.0, 2.5] {
        for k in 1..=50 {
            let x = 0.1 * f64::from(k);
            let r = derivative_formula_check(p, x, &cfg()).unwrap();
            assert!(r.satisfied, "p = {p}, x = {x}: {}", r.lhs);
        }
    }
}

#[test]
fn qdigamma_derivatives_positive() {
    for q in [0.3, 0.7, 1.5, 3.0] {
        for k in 1..=40 {
            let x = 0.25 * f64::from(k);
            let d1 = q_digamma_deriv(q, x, 1, &cfg()).unwrap();
            let d3 = q_digamma_deriv(q, x, 3, &cfg()).unwrap();
            assert!(d1.value > 0.0 && d3.value > 0.0, "q = {q}, x = {x}");
            assert!(d1.tail_bound <= cfg().abs_tol && d3.tail_bound <= cfg().abs_tol);
        }
    }
}
