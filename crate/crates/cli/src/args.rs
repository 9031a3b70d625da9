//! Command-line surface of `hhcert`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

const GRAMMAR: &str = "\
Function grammar (--fn), one variable x:
  expr    := term (('+' | '-') term)*
  term    := unary (('*' | '/') unary)*
  unary   := '-' unary | power
  power   := primary ('^' unary)?      right-associative, exponent must be constant
  primary := number | x | pi | e | name '(' expr ')' | '(' expr ')'
  name    := exp | log | ln | sqrt | sinh | cosh | abs

Environment:
  HH_TOL  overrides the absolute tolerance (default 1e-12)

Exit codes: 0 no violation, 1 violation finding, 2 usage or domain error";

#[derive(Parser, Debug, Clone)]
#[command(name = "hhcert", version, about = "Audit extended Hermite-Hadamard bounds numerically", after_help = GRAMMAR)]
pub struct Cli {
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Check a named inequality on given or seeded random intervals.
    Verify(VerifyArgs),
    /// Midpoint rule refined until its error certificate meets --err.
    Integrate(IntegrateArgs),
    /// Evaluate a special function with its truncation bound.
    Special(SpecialArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Eq1,
    K1,
    K2,
    Lemma1,
    Lemma2,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Cor1,
    Cor2,
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    Prop6,
    Prop7,
    Prop8,
    Prop9,
    All,
}

impl Target {
    /// Every concrete target, in report order.
    pub const EACH: [Target; 22] = [
        Target::Eq1,
        Target::K1,
        Target::K2,
        Target::Lemma1,
        Target::Lemma2,
        Target::Thm2,
        Target::Thm3,
        Target::Cor1,
        Target::Thm4,
        Target::Thm5,
        Target::Thm6,
        Target::Thm7,
        Target::Cor2,
        Target::Prop1,
        Target::Prop2,
        Target::Prop3,
        Target::Prop4,
        Target::Prop5,
        Target::Prop6,
        Target::Prop7,
        Target::Prop8,
        Target::Prop9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Eq1 => "eq1",
            Target::K1 => "k1",
            Target::K2 => "k2",
            Target::Lemma1 => "lemma1",
            Target::Lemma2 => "lemma2",
            Target::Thm2 => "thm2",
            Target::Thm3 => "thm3",
            Target::Thm4 => "thm4",
            Target::Thm5 => "thm5",
            Target::Thm6 => "thm6",
            Target::Thm7 => "thm7",
            Target::Cor1 => "cor1",
            Target::Cor2 => "cor2",
            Target::Prop1 => "prop1",
            Target::Prop2 => "prop2",
            Target::Prop3 => "prop3",
            Target::Prop4 => "prop4",
            Target::Prop5 => "prop5",
            Target::Prop6 => "prop6",
            Target::Prop7 => "prop7",
            Target::Prop8 => "prop8",
            Target::Prop9 => "prop9",
            Target::All => "all",
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub target: Target,
    /// Function of x (see grammar below); unused by prop1-3 and prop6-9.
    #[arg(long = "fn", allow_hyphen_values = true)]
    #[serde(rename = "fn")]
    pub function: Option<String>,
    /// Left end; omit both --a and --b for seeded random intervals.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Exponent q >= 1 of the derivative bounds and prop1-3.
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
    /// Number of random intervals.
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Power n for prop1.
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    pub n: i32,
    /// Bessel order for prop6-7.
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub p: f64,
    /// Base q of the q-digamma for prop8-9.
    #[arg(long, default_value_t = 0.5)]
    pub qbase: f64,
    /// Uniform panel count for prop4-5.
    #[arg(long, default_value_t = 4)]
    pub panels: usize,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct IntegrateArgs {
    #[arg(long = "fn", allow_hyphen_values = true)]
    #[serde(rename = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub b: f64,
    /// Target for the midpoint error certificate.
    #[arg(long)]
    pub err: f64,
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpecialFn {
    #[value(name = "besselI")]
    #[serde(rename = "besselI")]
    BesselI,
    #[value(name = "besselK")]
    #[serde(rename = "besselK")]
    BesselK,
    #[value(name = "normI")]
    #[serde(rename = "normI")]
    NormI,
    #[value(name = "qdigamma")]
    #[serde(rename = "qdigamma")]
    QDigamma,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct SpecialArgs {
    pub what: SpecialFn,
    /// Bessel order.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    /// q-digamma base.
    #[arg(long)]
    pub q: Option<f64>,
    /// q-digamma derivative order, 0 to 3.
    #[arg(long, default_value_t = 0)]
    pub order: u32,
}
