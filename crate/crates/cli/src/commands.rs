use hh_core::hh_bounds::{
    abs_half_check, first_order_bounds, hh_classic_check, lemma_identity_residual, second_order_bounds,
    three_point_check, Lemma,
};
use hh_core::means::{means_proposition_check, MeanProposition};
use hh_core::oracle::integrate_ref;
use hh_core::quadrature::{adaptive_midpoint, midpoint_error_bound, midpoint_t2, prop4_check, Partition};
use hh_core::special::{
    bessel_i, bessel_k, bessel_k_check, derivative_formula_check, hyperbolic_check, normalized_bessel_check,
    normalized_i_series, q_digamma, q_digamma_deriv, qdigamma_prop_checks,
};
use hh_core::{parse, Expr64, Interval64, Report64, Tolerance64};
use rayon::prelude::*;
use serde_json::json;

use crate::args::{Command, IntegrateArgs, SpecialArgs, SpecialFn, Target, VerifyArgs};
use crate::sampler::random_intervals;
use crate::{CliError, Guarded, RunReport, TrialReport};

/// Residual accepted for the two integral identities.
pub const LEMMA_TOL: f64 = 1e-8;

/// Targets that share one evaluation: `thm2`, `thm3`, `cor1` come from a
/// single first-order computation, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Group {
    Eq1,
    K1,
    K2,
    Lemma1,
    Lemma2,
    FirstOrder,
    SecondOrder,
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    Prop6,
    Prop7,
    QDigamma,
}

impl Group {
    const ALL: [Group; 15] = [
        Group::Eq1,
        Group::K1,
        Group::K2,
        Group::Lemma1,
        Group::Lemma2,
        Group::FirstOrder,
        Group::SecondOrder,
        Group::Prop1,
        Group::Prop2,
        Group::Prop3,
        Group::Prop4,
        Group::Prop5,
        Group::Prop6,
        Group::Prop7,
        Group::QDigamma,
    ];

    fn of(t: Target) -> Group {
        match t {
            Target::Eq1 => Group::Eq1,
            Target::K1 => Group::K1,
            Target::K2 => Group::K2,
            Target::Lemma1 => Group::Lemma1,
            Target::Lemma2 => Group::Lemma2,
            Target::Thm2 | Target::Thm3 | Target::Cor1 => Group::FirstOrder,
            Target::Thm4 | Target::Thm5 | Target::Thm6 | Target::Thm7 | Target::Cor2 => Group::SecondOrder,
            Target::Prop1 => Group::Prop1,
            Target::Prop2 => Group::Prop2,
            Target::Prop3 => Group::Prop3,
            Target::Prop4 => Group::Prop4,
            Target::Prop5 => Group::Prop5,
            Target::Prop6 => Group::Prop6,
            Target::Prop7 => Group::Prop7,
            Target::Prop8 | Target::Prop9 | Target::All => Group::QDigamma,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Group::Eq1 => "eq1",
            Group::K1 => "k1",
            Group::K2 => "k2",
            Group::Lemma1 => "lemma1",
            Group::Lemma2 => "lemma2",
            Group::FirstOrder => "thm2,thm3,cor1",
            Group::SecondOrder => "thm4,thm5,thm6,thm7,cor2",
            Group::Prop1 => "prop1",
            Group::Prop2 => "prop2",
            Group::Prop3 => "prop3",
            Group::Prop4 => "prop4",
            Group::Prop5 => "prop5",
            Group::Prop6 => "prop6",
            Group::Prop7 => "prop7",
            Group::QDigamma => "prop8,prop9",
        }
    }

    fn uses_fn(self) -> bool {
        !matches!(
            self,
            Group::Prop1 | Group::Prop2 | Group::Prop3 | Group::Prop6 | Group::Prop7 | Group::QDigamma
        )
    }
}

struct Ctx {
    f: Option<Expr64>,
    q: f64,
    n: i32,
    p: f64,
    qbase: f64,
    panels: usize,
    cfg: Tolerance64,
}

impl Ctx {
    fn f(&self) -> hh_core::Result<&Expr64> {
        self.f
            .as_ref()
            .ok_or_else(|| hh_core::HhError::InvalidArgument("this target needs --fn".into()))
    }
}

fn evaluate(group: Group, ctx: &Ctx, iv: &Interval64) -> hh_core::Result<Vec<Report64>> {
    let cfg = &ctx.cfg;
    let (a, b) = (iv.a(), iv.b());
    Ok(match group {
        Group::Eq1 => {
            let (l, r) = hh_classic_check(ctx.f()?, iv, cfg)?;
            vec![l, r]
        }
        Group::K1 => {
            let (l, r) = three_point_check(ctx.f()?, iv, cfg)?;
            vec![l, r]
        }
        Group::K2 => vec![abs_half_check(ctx.f()?, iv, cfg)?],
        Group::Lemma1 | Group::Lemma2 => {
            let (which, label) = if group == Group::Lemma1 {
                (Lemma::Lemma1, "lemma1")
            } else {
                (Lemma::Lemma2, "lemma2")
            };
            let f = ctx.f()?;
            let residual = lemma_identity_residual(which, f, iv, cfg)?;
            let inputs = format!("f = {f}, a = {a}, b = {b}");
            vec![Report64::new(label, residual, LEMMA_TOL, cfg.abs_tol, inputs)]
        }
        Group::FirstOrder => first_order_bounds(ctx.f()?, iv, ctx.q, cfg)?.reports(cfg),
        Group::SecondOrder => second_order_bounds(ctx.f()?, iv, ctx.q, cfg)?.reports(cfg),
        Group::Prop1 | Group::Prop2 | Group::Prop3 => {
            let q = ctx.q;
            let prop = match group {
                Group::Prop1 => MeanProposition::P1 { n: ctx.n, q },
                Group::Prop2 => MeanProposition::P2 { q },
                _ => MeanProposition::P3 { q },
            };
            let (first, second) = means_proposition_check(prop, a, b, cfg)?;
            vec![first, second]
        }
        Group::Prop4 => {
            let part = Partition::uniform(iv, ctx.panels)?;
            vec![prop4_check(ctx.f()?, &part, cfg)?.report]
        }
        Group::Prop5 => {
            let f = ctx.f()?;
            let part = Partition::uniform(iv, ctx.panels)?;
            let bound = midpoint_error_bound(f, &part, ctx.q, cfg)?;
            let exact = integrate_ref(|x| f.eval(x), iv, cfg.abs_tol, cfg)?.value;
            let err = (exact - midpoint_t2(f, &part)?).abs();
            let inputs = format!("f = {f}, a = {a}, b = {b}, q = {}, panels = {}", ctx.q, ctx.panels);
            vec![Report64::new("prop5", err, bound, cfg.abs_tol, inputs)]
        }
        Group::Prop6 => vec![
            normalized_bessel_check(ctx.p, a, b, cfg)?,
            hyperbolic_check(a, b, cfg)?,
            derivative_formula_check(ctx.p, iv.mid(), cfg)?,
        ],
        Group::Prop7 => vec![bessel_k_check(ctx.p, a, b, cfg)?],
        Group::QDigamma => qdigamma_prop_checks(ctx.qbase, a, b, cfg)?,
    })
}

fn selects(target: Target, label: &str) -> bool {
    let name = target.name();
    target == Target::All || label == name || label.strip_prefix(name).is_some_and(|rest| rest.starts_with('_'))
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run_verify(args: &VerifyArgs, cfg: &Tolerance64) -> Result<RunReport, CliError> {
    let target = args.target;
    if args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    if !(1.0..f64::INFINITY).contains(&args.q) {
        return Err(usage(format!("--q must be a finite number >= 1, got {}", args.q)));
    }
    if matches!(target, Target::Thm3 | Target::Thm5 | Target::Thm6) && args.q <= 1.0 {
        return Err(usage(format!("{} needs --q > 1", target.name())));
    }
    if target == Target::Prop7 && (args.p.is_nan() || args.p <= 1.0) {
        return Err(usage(format!("prop7 needs --p > 1, got {}", args.p)));
    }
    if args.panels == 0 {
        return Err(usage("--panels must be at least 1"));
    }
    let groups: Vec<Group> = if target == Target::All { Group::ALL.to_vec() } else { vec![Group::of(target)] };
    let f = match &args.function {
        Some(text) => Some(parse::<f64>(text)?),
        None if groups.iter().any(|g| g.uses_fn()) => {
            return Err(usage(format!("--fn is required for target {}", target.name())))
        }
        None => None,
    };
    let fixed = match (args.a, args.b) {
        (Some(a), Some(b)) => Some(Interval64::new(a, b)?),
        (None, None) => None,
        _ => return Err(usage("give both --a and --b, or neither for random intervals")),
    };
    let ctx = Ctx { f, q: args.q, n: args.n, p: args.p, qbase: args.qbase, panels: args.panels, cfg: *cfg };
    let intervals = match fixed {
        Some(iv) => vec![iv],
        None => random_intervals(args.seed, args.trials, ctx.f.as_ref())?,
    };
    // A single target on a given interval reports guard failures as errors.
    let strict = fixed.is_some() && target != Target::All;

    type TrialOutcome = Result<(Vec<TrialReport>, Vec<Guarded>), CliError>;
    let per_trial: Vec<TrialOutcome> = intervals
        .par_iter()
        .enumerate()
        .map(|(trial, iv)| {
            let (a, b) = (iv.a(), iv.b());
            let mut reports = Vec::new();
            let mut guarded = Vec::new();
            for &g in &groups {
                match evaluate(g, &ctx, iv) {
                    Ok(rs) => reports.extend(
                        rs.into_iter()
                            .filter(|r| selects(target, &r.label))
                            .map(|report| TrialReport { trial, a, b, report }),
                    ),
                    Err(e) if strict => return Err(e.into()),
                    Err(e) => guarded.push(Guarded {
                        trial,
                        a,
                        b,
                        target: if target == Target::All { g.name() } else { target.name() }.to_string(),
                        reason: e.to_string(),
                    }),
                }
            }
            Ok((reports, guarded))
        })
        .collect();

    let mut reports = Vec::new();
    let mut guarded = Vec::new();
    for r in per_trial {
        let (rs, gs) = r?;
        reports.extend(rs);
        guarded.extend(gs);
    }
    Ok(RunReport::new(Command::Verify(args.clone()), cfg, reports, guarded, None))
}

pub fn run_integrate(args: &IntegrateArgs, cfg: &Tolerance64) -> Result<RunReport, CliError> {
    if !(args.err.is_finite() && args.err > 0.0) {
        return Err(usage(format!("--err must be positive, got {}", args.err)));
    }
    if !(1.0..f64::INFINITY).contains(&args.q) {
        return Err(usage(format!("--q must be a finite number >= 1, got {}", args.q)));
    }
    let f = parse::<f64>(&args.function)?;
    let iv = Interval64::new(args.a, args.b)?;
    let r = adaptive_midpoint(&f, &iv, args.err, args.q, cfg)?;
    let mut reports = Vec::new();
    if let Some(err) = r.oracle_error {
        let inputs = format!("f = {f}, a = {}, b = {}, q = {}, panels = {}", args.a, args.b, args.q, r.partition.panels());
        reports.push(TrialReport {
            trial: 0,
            a: args.a,
            b: args.b,
            report: Report64::new("prop5", err, r.e2_bound, cfg.abs_tol, inputs),
        });
    }
    let result = json!({
        "value": r.t2,
        "trapezoid": r.t1,
        "certificate": r.e2_bound,
        "certified": r.certified,
        "panels": r.partition.panels(),
        "depth": r.depth,
        "oracle_value": r.oracle_value,
        "oracle_error": r.oracle_error,
    });
    Ok(RunReport::new(Command::Integrate(args.clone()), cfg, reports, Vec::new(), Some(result)))
}

pub fn run_special(args: &SpecialArgs, cfg: &Tolerance64) -> Result<RunReport, CliError> {
    let need_p = || args.p.ok_or_else(|| usage("--p is required for Bessel functions"));
    let x = args.x;
    let s = match args.what {
        SpecialFn::BesselI => bessel_i(need_p()?, x, cfg)?,
        SpecialFn::BesselK => bessel_k(need_p()?, x, cfg)?,
        SpecialFn::NormI => normalized_i_series(need_p()?, x, cfg)?,
        SpecialFn::QDigamma => {
            let q = args.q.ok_or_else(|| usage("--q is required for qdigamma"))?;
            match args.order {
                0 => q_digamma(q, x, cfg)?,
                1..=3 => q_digamma_deriv(q, x, args.order, cfg)?,
                o => return Err(usage(format!("--order must be 0 to 3, got {o}"))),
            }
        }
    };
    let result = json!({
        "value": s.value,
        "terms_used": s.terms_used,
        "tail_bound": s.tail_bound,
    });
    Ok(RunReport::new(Command::Special(args.clone()), cfg, Vec::new(), Vec::new(), Some(result)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_selection() {
        assert!(selects(Target::K1, "k1_left"));
        assert!(selects(Target::Thm3, "thm3"));
        assert!(!selects(Target::Thm2, "thm3"));
        assert!(selects(Target::Prop6, "prop6_I11"));
        assert!(!selects(Target::Prop8, "prop9"));
        assert!(selects(Target::All, "anything"));
    }

    #[test]
    fn every_target_has_a_group() {
        for t in Target::EACH {
            let g = Group::of(t);
            assert!(g.name().split(',').any(|n| n == t.name()), "{t:?}");
        }
    }
}
