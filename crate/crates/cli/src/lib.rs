//! Command-line front end for `sptopo`.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! whatever would go to stdout and stderr, which keeps the binary a thin
//! shell and the whole interface testable in-process.

mod demo;
mod report;

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use sptopo::completion::{coset_n_divisible, density_witnesses, ep_divide, psi, psi_inverse};
use sptopo::spdomain::{degree_report, sp_product, FinalSize};
use sptopo::{Clopen, CosetDivisibility, EpSequence, Ideal, Ordinal, Space, StepFunction};

pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_DEMO_FAILED: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "sptopo", version, about = "Ordinals, Boolean spaces and SP-domain ideal arithmetic")]
struct Cli {
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Ordinal arithmetic in Cantor normal form
    #[command(subcommand)]
    Ord(OrdCmd),
    /// Cantor-Bendixson data of a space
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Ideals as nonnegative step functions on a space
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Sharp or dull degree of the ring modelled by a space
    Degree { space: String },
    /// The completion of the group of invertible ideals over ord(w)
    #[command(subcommand)]
    Complete(CompleteCmd),
    /// Bundled reproducible runs with built-in assertions
    Demo { name: DemoName },
}

#[derive(Subcommand, Debug)]
enum OrdCmd {
    /// Compare two ordinals, printing <, = or >
    Cmp { a: String, b: String },
    Add { a: String, b: String },
    Mul { a: String, b: String },
    /// Write lambda = w^alpha * q + r with r < w^alpha
    Divmod { lambda: String, alpha: String },
}

#[derive(Subcommand, Debug)]
enum SpaceCmd {
    /// Cantor-Bendixson rank, penultimate count and final stage
    Rank { space: String },
    /// The alpha-th derived space
    Derive { space: String, alpha: String },
    /// Extremal disconnectedness, with a witness when it fails
    Ed { space: String },
    Scattered { space: String },
}

#[derive(Subcommand, Debug)]
enum IdealCmd {
    /// Radical factorization of an ideal
    Factor { space: String, f: String },
    /// Product of a descending chain of clopens
    Product {
        space: String,
        #[arg(required = true)]
        chain: Vec<String>,
    },
    Mul { space: String, f: String, g: String },
    Radical { space: String, f: String },
    /// Factorization into powers of maximal ideals (finite spaces)
    Decompose { space: String, f: String },
}

#[derive(Subcommand, Debug)]
enum CompleteCmd {
    /// Sample a step function on ord(w) at the natural numbers
    Psi { space: String, f: String },
    /// Recover the step function behind an eventually constant sequence
    Inverse { seq: String },
    /// Functions g1, g2 with 0 < psi(g1) <= h <= psi(g2)
    Density { seq: String },
    /// Entrywise division by n
    Divide {
        seq: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Whether the coset of g in the cokernel is n-divisible
    Divisible {
        seq: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum DemoName {
    SharpDegrees,
    DullDegrees,
    Factorization,
    Completion,
}

/// A failed command: exit code and diagnostic.
struct Failure {
    code: i32,
    msg: String,
}

impl From<sptopo::Error> for Failure {
    fn from(e: sptopo::Error) -> Self {
        let code = if e.is_unsupported() {
            EXIT_UNSUPPORTED
        } else {
            EXIT_USAGE
        };
        Failure { code, msg: e.to_string() }
    }
}

/// Payload of a command before it is wrapped into a [`Report`].
struct Outcome {
    inputs: Vec<String>,
    result: Map<String, Value>,
    passed: bool,
}

impl Outcome {
    fn new(inputs: Vec<String>, result: Map<String, Value>) -> Outcome {
        Outcome { inputs, result, passed: true }
    }
}

fn obj(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn text(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

/// Parses argument `name`, prefixing any error with the argument and its text.
fn arg<T>(name: &str, src: &str, parse: impl FnOnce(&str) -> sptopo::Result<T>) -> Result<T, Failure> {
    parse(src).map_err(|e| {
        let mut f = Failure::from(e);
        f.msg = format!("{name} `{src}`: {}", f.msg);
        f
    })
}

fn ordinal(name: &str, src: &str) -> Result<Ordinal, Failure> {
    arg(name, src, str::parse)
}

fn space(src: &str) -> Result<Space, Failure> {
    arg("space", src, str::parse)
}

fn function(name: &str, src: &str, x: &Space) -> Result<StepFunction, Failure> {
    arg(name, src, |s| StepFunction::parse(s, x))
}

fn ideal(name: &str, src: &str, x: &Space) -> Result<Ideal, Failure> {
    let f = function(name, src, x)?;
    arg(name, src, |_| Ideal::new(f))
}

fn sequence(name: &str, src: &str) -> Result<EpSequence, Failure> {
    arg(name, src, str::parse)
}

fn integer(name: &str, src: &str) -> Result<BigInt, Failure> {
    src.trim().parse().map_err(|_| Failure {
        code: EXIT_USAGE,
        msg: format!("{name} `{src}`: expected an integer"),
    })
}

fn verb_of(cmd: &Cmd) -> String {
    let (head, tail) = match cmd {
        Cmd::Ord(c) => ("ord", format!("{c:?}")),
        Cmd::Space(c) => ("space", format!("{c:?}")),
        Cmd::Ideal(c) => ("ideal", format!("{c:?}")),
        Cmd::Degree { .. } => return "degree".into(),
        Cmd::Complete(c) => ("complete", format!("{c:?}")),
        Cmd::Demo { .. } => return "demo".into(),
    };
    let name: String = tail.chars().take_while(|c| c.is_alphanumeric()).collect();
    format!("{head} {}", name.to_lowercase())
}

fn execute(cmd: &Cmd) -> Result<Outcome, Failure> {
    match cmd {
        Cmd::Ord(c) => ord_cmd(c),
        Cmd::Space(c) => space_cmd(c),
        Cmd::Ideal(c) => ideal_cmd(c),
        Cmd::Degree { space: s } => {
            let x = space(s)?;
            let r = degree_report(&x);
            let final_size = match r.final_size {
                FinalSize::Finite(n) => json!(n),
                FinalSize::Perfect => text("perfect"),
            };
            Ok(Outcome::new(
                vec![x.to_string()],
                obj(vec![
                    ("kind", text(format!("{:?}", r.kind))),
                    ("degree", text(&r.degree)),
                    ("rank", text(&r.rank)),
                    ("final_size", final_size),
                ]),
            ))
        }
        Cmd::Complete(c) => complete_cmd(c),
        Cmd::Demo { name } => Ok(demo::run(*name)),
    }
}

fn ord_cmd(c: &OrdCmd) -> Result<Outcome, Failure> {
    let (a, b) = match c {
        OrdCmd::Cmp { a, b } | OrdCmd::Add { a, b } | OrdCmd::Mul { a, b } => (a, b),
        OrdCmd::Divmod { lambda, alpha } => (lambda, alpha),
    };
    let a = ordinal("first ordinal", a)?;
    let b = ordinal("second ordinal", b)?;
    let inputs = vec![a.to_string(), b.to_string()];
    let result = match c {
        OrdCmd::Cmp { .. } => {
            let sym = match a.cmp(&b) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            obj(vec![("value", text(sym))])
        }
        OrdCmd::Add { .. } => obj(vec![("value", text(a.add(&b)))]),
        OrdCmd::Mul { .. } => obj(vec![("value", text(a.mul(&b)))]),
        OrdCmd::Divmod { .. } => {
            let (q, r) = a.divmod(&b);
            obj(vec![("quotient", text(q)), ("remainder", text(r))])
        }
    };
    Ok(Outcome::new(inputs, result))
}

fn space_cmd(c: &SpaceCmd) -> Result<Outcome, Failure> {
    match c {
        SpaceCmd::Rank { space: s } => {
            let x = space(s)?;
            let r = x.cb_rank();
            Ok(Outcome::new(
                vec![x.to_string()],
                obj(vec![
                    ("rank", text(&r.rank)),
                    ("penultimate", r.penultimate_count.map_or(Value::Null, |n| json!(n))),
                    ("final", text(format!("{:?}", r.final_stage))),
                ]),
            ))
        }
        SpaceCmd::Derive { space: s, alpha } => {
            let x = space(s)?;
            let alpha = ordinal("alpha", alpha)?;
            let derived = x.derived_space(&alpha).map_or_else(|| text("empty"), text);
            Ok(Outcome::new(vec![x.to_string(), alpha.to_string()], obj(vec![("value", derived)])))
        }
        SpaceCmd::Ed { space: s } => {
            let x = space(s)?;
            let (ed, witness) = x.is_extremally_disconnected();
            Ok(Outcome::new(
                vec![x.to_string()],
                obj(vec![
                    ("extremally_disconnected", json!(ed)),
                    ("witness", witness.map_or(Value::Null, |w| text(w.describe()))),
                ]),
            ))
        }
        SpaceCmd::Scattered { space: s } => {
            let x = space(s)?;
            Ok(Outcome::new(vec![x.to_string()], obj(vec![("value", json!(x.is_scattered()))])))
        }
    }
}

fn ideal_cmd(c: &IdealCmd) -> Result<Outcome, Failure> {
    match c {
        IdealCmd::Factor { space: s, f } => {
            let x = space(s)?;
            let i = ideal("ideal", f, &x)?;
            let fac = i.factor()?;
            Ok(Outcome::new(
                vec![x.to_string(), i.to_string()],
                obj(vec![
                    ("length", json!(fac.len())),
                    ("factors", Value::Array(fac.chain().iter().map(text).collect())),
                ]),
            ))
        }
        IdealCmd::Product { space: s, chain } => {
            let x = space(s)?;
            let chain = chain
                .iter()
                .enumerate()
                .map(|(k, a)| arg(&format!("clopen {}", k + 1), a, |t| Clopen::parse(t, &x)))
                .collect::<Result<Vec<_>, _>>()?;
            let inputs = std::iter::once(x.to_string()).chain(chain.iter().map(|a| a.to_string())).collect();
            let product = sp_product(chain)?;
            Ok(Outcome::new(inputs, obj(vec![("value", text(product))])))
        }
        IdealCmd::Mul { space: s, f, g } => {
            let x = space(s)?;
            let (i, j) = (ideal("first ideal", f, &x)?, ideal("second ideal", g, &x)?);
            let product = i.mul(&j)?;
            Ok(Outcome::new(
                vec![x.to_string(), i.to_string(), j.to_string()],
                obj(vec![("value", text(product))]),
            ))
        }
        IdealCmd::Radical { space: s, f } => {
            let x = space(s)?;
            let i = ideal("ideal", f, &x)?;
            Ok(Outcome::new(vec![x.to_string(), i.to_string()], obj(vec![("value", text(i.radical()))])))
        }
        IdealCmd::Decompose { space: s, f } => {
            let x = space(s)?;
            let i = ideal("ideal", f, &x)?;
            let powers = i.max_power_decomposition()?;
            let rows = powers
                .iter()
                .map(|(p, k)| json!({"point": p.to_string(), "exponent": k.to_string()}))
                .collect();
            Ok(Outcome::new(vec![x.to_string(), i.to_string()], obj(vec![("powers", Value::Array(rows))])))
        }
    }
}

fn complete_cmd(c: &CompleteCmd) -> Result<Outcome, Failure> {
    match c {
        CompleteCmd::Psi { space: s, f } => {
            let x = space(s)?;
            let f = function("function", f, &x)?;
            let seq = psi(&f)?;
            Ok(Outcome::new(vec![x.to_string(), f.to_string()], obj(vec![("value", text(seq))])))
        }
        CompleteCmd::Inverse { seq } => {
            let s = sequence("sequence", seq)?;
            let f = psi_inverse(&s).map_or_else(|| text("none"), text);
            Ok(Outcome::new(vec![s.to_string()], obj(vec![("value", f)])))
        }
        CompleteCmd::Density { seq } => {
            let h = sequence("sequence", seq)?;
            let (g1, g2) = density_witnesses(&h)?;
            Ok(Outcome::new(
                vec![h.to_string()],
                obj(vec![
                    ("g1", text(&g1)),
                    ("g2", text(&g2)),
                    ("psi_g1", text(psi(&g1)?)),
                    ("psi_g2", text(psi(&g2)?)),
                ]),
            ))
        }
        CompleteCmd::Divide { seq, n } => {
            let s = sequence("sequence", seq)?;
            let n = integer("divisor", n)?;
            let q = ep_divide(&s, &n)?.map_or_else(|| text("none"), text);
            Ok(Outcome::new(vec![s.to_string(), n.to_string()], obj(vec![("value", q)])))
        }
        CompleteCmd::Divisible { seq, n } => {
            let g = sequence("sequence", seq)?;
            let n = integer("modulus", n)?;
            let inputs = vec![g.to_string(), n.to_string()];
            let result = match coset_n_divisible(&g, &n)? {
                CosetDivisibility::Yes { f, e } => obj(vec![
                    ("divisible", json!(true)),
                    ("f", text(f)),
                    ("e", text(e)),
                ]),
                CosetDivisibility::No { k1, k2 } => obj(vec![
                    ("divisible", json!(false)),
                    ("k1", json!(k1)),
                    ("k2", json!(k2)),
                    ("g_k1", text(g.eval(k1))),
                    ("g_k2", text(g.eval(k2))),
                ]),
            };
            Ok(Outcome::new(inputs, result))
        }
    }
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Output { code: EXIT_OK, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let verb = match &cli.cmd {
        Cmd::Demo { name } => format!("demo {}", name.to_possible_value().unwrap().get_name()),
        other => verb_of(other),
    };
    let start = Instant::now();
    match execute(&cli.cmd) {
        Ok(outcome) => {
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            let report = Report {
                verb: verb.clone(),
                inputs: outcome.inputs,
                result: outcome.result,
                elapsed_ms: (elapsed * 1e3).round() / 1e3,
            };
            let stdout = if cli.json { report.to_json() } else { report.to_text() };
            if outcome.passed {
                Output { code: EXIT_OK, stdout, stderr: String::new() }
            } else {
                Output {
                    code: EXIT_DEMO_FAILED,
                    stdout,
                    stderr: format!("error: {verb}: assertion failed\n"),
                }
            }
        }
        Err(f) => Output {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {verb}: {}\n", f.msg),
        },
    }
}
