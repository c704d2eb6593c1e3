//! Command-line front end: element language, JSON encodings, subcommands and
//! the seeded verification suites.

mod eval;
pub mod json;
mod parse;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use eval::{eval_beta, eval_cobar, eval_expr, eval_f, eval_h, eval_r, Context, Element, MAX_EXPONENT};
pub use parse::{parse_expr, Expr};

use crate::cobar::{cobar_differential, codegeneracy, coface};
use crate::error::{Error, Result};
use crate::fgl::{generic_law, mult_law, power_coeff, telescope_colimit_map};
use crate::hopf::{antipode, coproduct, counit};
use crate::modl::hq_basis_check;

/// Environment variable supplying the default seed of `verify`.
pub const SEED_ENV: &str = "BINOMIAL_COBAR_SEED";

#[derive(Parser, Debug)]
#[command(name = "binomial-cobar", version, about = "Exact computations with numerical polynomials and the K-theory cobar complex")]
struct Cli {
    /// Human-readable output with unicode symbols.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct ExprArg {
    /// Element expression, e.g. "t^-1*a(2)".
    #[arg(allow_hyphen_values = true)]
    expr: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Basis {
    Binomial,
    Monomial,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    All,
    Numpoly,
    Hopf,
    Modl,
    Cobar,
    Fgl,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Numpoly => "numpoly",
            Suite::Hopf => "hopf",
            Suite::Modl => "modl",
            Suite::Cobar => "cobar",
            Suite::Fgl => "fgl",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Product of two elements of H.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Coproduct of an element of H.
    Coproduct(ExprArg),
    /// Antipode of an element of H.
    Antipode(ExprArg),
    /// Counit of an element of H.
    Counit(ExprArg),
    /// Normal form in the binomial or monomial basis.
    Expand {
        #[arg(long, value_enum, default_value = "binomial")]
        basis: Basis,
        #[command(flatten)]
        e: ExprArg,
    },
    /// Finite coefficient rings.
    Modl {
        #[command(subcommand)]
        cmd: ModlCmd,
    },
    /// Cobar complex operators.
    Cobar {
        #[command(subcommand)]
        cmd: CobarCmd,
    },
    /// Formal group law coefficients.
    Fgl {
        #[command(subcommand)]
        cmd: FglCmd,
    },
    /// Telescope class of a beta-vector at a stage.
    Telescope {
        #[arg(long)]
        stage: usize,
        #[command(flatten)]
        e: ExprArg,
    },
    /// Seeded verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ModlCmd {
    /// Checks the mod-q basis of H for q = l^nu.
    Basis {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        nu: u32,
    },
}

#[derive(Args, Debug)]
struct CobarArgs {
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    e: ExprArg,
}

#[derive(Subcommand, Debug)]
enum CobarCmd {
    /// Coface `d^i` on an element of degree n.
    Face(CobarArgs),
    /// Codegeneracy `s^i` on an element of degree n.
    Degen(CobarArgs),
    /// Alternating-sum differential.
    Diff(CobarArgs),
}

#[derive(Subcommand, Debug)]
enum FglCmd {
    /// Coefficient of x^i y^j in mu(x, y)^k.
    Coeff {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Use the generic law truncated at this degree instead of x + y + uxy.
        #[arg(long)]
        generic: Option<usize>,
    },
}

type CobarOp = fn(usize, &crate::cobar::CobarElem) -> Result<crate::cobar::CobarElem>;

/// Output of a successful command.
enum Output {
    Json(Value, bool),
    Text(String, Value),
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::ContextViolation { .. } => "context_violation",
        Error::DivisionByZero => "division_by_zero",
        Error::PartitionMismatch { .. } => "partition_mismatch",
        Error::NotNumerical { .. } => "not_numerical",
        Error::NegativeExponent(_) => "negative_exponent",
        Error::NotInH => "not_in_h",
        Error::SlotOutOfRange { .. } => "slot_out_of_range",
        Error::InvalidPrime(_) => "invalid_prime",
        Error::SizeGuard { .. } => "size_guard",
        Error::NotStabilized { .. } => "not_stabilized",
        Error::ModulusMismatch(..) => "modulus_mismatch",
        Error::FaceIndexOutOfRange { .. } => "face_index_out_of_range",
        Error::DegeneracyIndexOutOfRange { .. } => "degeneracy_index_out_of_range",
        Error::TruncationExceeded { .. } => "truncation_exceeded",
        Error::DegreeMismatch { .. } => "degree_mismatch",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Invariant(_) => "invariant",
    }
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({ "error": error_kind(e), "detail": e.to_string() });
    if let Error::Parse { position, .. } = e {
        v["position"] = json!(position);
    }
    v
}

/// Replaces the ASCII element syntax with unicode symbols.
pub fn prettify(s: &str) -> String {
    const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let mut out = String::new();
    let mut rest = s;
    while let Some(pos) = rest.find(['a', 'b']) {
        let (head, tail) = rest.split_at(pos);
        out.push_str(head);
        let greek = if tail.starts_with('a') { 'α' } else { 'β' };
        let digits: String = tail[1..].strip_prefix('(').map_or(String::new(), |t| {
            t.chars().take_while(char::is_ascii_digit).collect()
        });
        if !digits.is_empty() && tail[2 + digits.len()..].starts_with(')') {
            out.push(greek);
            out.extend(digits.bytes().map(|d| SUB[(d - b'0') as usize]));
            rest = &tail[3 + digits.len()..];
        } else {
            out.push_str(&tail[..1]);
            rest = &tail[1..];
        }
    }
    out.push_str(rest);
    out.replace(" ox ", " ⊗ ")
}

fn element(expr: &str, ctx: Context) -> Result<Element> {
    eval_expr(&parse_expr(expr)?, ctx)
}

fn h_of(expr: &str) -> Result<crate::hopf::HElem> {
    match element(expr, Context::H)? {
        Element::H(h) => Ok(h),
        _ => unreachable!("H context yields H elements"),
    }
}

fn default_seed() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{SEED_ENV}={s} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn execute(cmd: Cmd) -> Result<Output> {
    Ok(match cmd {
        Cmd::Mul { a, b } => {
            let p = &h_of(&a)? * &h_of(&b)?;
            Output::Text(p.to_string(), json::helem(&p))
        }
        Cmd::Coproduct(e) => {
            let t = coproduct(&h_of(&e.expr)?);
            Output::Text(t.to_string(), json::tensor(&t))
        }
        Cmd::Antipode(e) => {
            let c = antipode(&h_of(&e.expr)?);
            Output::Text(c.to_string(), json::helem(&c))
        }
        Cmd::Counit(e) => {
            let v = counit(&h_of(&e.expr)?);
            Output::Text(v.to_string(), json!({ "value": json::int(&v) }))
        }
        Cmd::Expand { basis, e } => {
            let h = h_of(&e.expr)?;
            match basis {
                Basis::Binomial => Output::Text(h.to_string(), json::helem(&h)),
                Basis::Monomial => {
                    let p = h.to_laurent();
                    Output::Text(p.to_string(), json::laurent(&p))
                }
            }
        }
        Cmd::Modl { cmd: ModlCmd::Basis { l, nu } } => {
            let r = hq_basis_check(l, nu)?;
            let v = json!({ "basis": r.facts["basis"], "pass": r.passed(), "q": r.facts["q"] });
            Output::Json(v, r.passed())
        }
        Cmd::Cobar { cmd } => {
            let (args, op): (CobarArgs, CobarOp) =
                match cmd {
                    CobarCmd::Face(a) => (a, coface),
                    CobarCmd::Degen(a) => (a, codegeneracy),
                    CobarCmd::Diff(a) => (a, |_, x| Ok(cobar_differential(x))),
                };
            let x = eval_cobar(&parse_expr(&args.e.expr)?, args.n)?;
            let y = op(args.i.unwrap_or(0), &x)?;
            Output::Text(y.to_string(), json::cobar(&y))
        }
        Cmd::Fgl { cmd: FglCmd::Coeff { k, i, j, generic } } => match generic {
            None => {
                let c = power_coeff(&mult_law((i + j).max(2)), k, i, j)?;
                let v = json!({ "coeff": json::relem(&c), "i": i, "j": j, "k": k, "law": "multiplicative" });
                Output::Text(c.to_string(), v)
            }
            Some(d) => {
                if d < 2 {
                    return Err(Error::InvalidArgument("--generic needs a degree of at least 2".into()));
                }
                let c = power_coeff(&generic_law(d), k, i, j)?;
                let v = json!({ "coeff": json::multipoly(&c), "degree": d, "i": i, "j": j, "k": k, "law": "generic" });
                Output::Text(c.to_string(), v)
            }
        },
        Cmd::Telescope { stage, e } => {
            let x = match element(&e.expr, Context::Beta)? {
                Element::Beta(x) => x,
                _ => unreachable!("beta context yields beta vectors"),
            };
            let y = telescope_colimit_map(stage, &x);
            Output::Text(y.to_string(), json::cobar(&y))
        }
        Cmd::Verify { suite, seed, trials } => {
            let seed = match seed {
                Some(s) => s,
                None => default_seed()?,
            };
            let (pass, v) = verify::run_verify(suite.name(), seed, trials)?;
            Output::Json(v, pass)
        }
    })
}

/// Runs the command line `argv` (including the program name) and returns the
/// exit code together with the text for standard output.
///
/// Exit codes: 0 on success, 1 when a verification finds a counterexample,
/// 2 on usage, parse or evaluation errors.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string().trim_end().to_string()),
                _ => {
                    let v = json!({ "error": "usage", "detail": e.to_string().trim_end() });
                    (2, json::to_string(&v, false))
                }
            };
        }
    };
    let pretty = cli.pretty;
    let needs_index = matches!(&cli.cmd, Cmd::Cobar { cmd: CobarCmd::Face(a) | CobarCmd::Degen(a) } if a.i.is_none());
    if needs_index {
        let v = json!({ "error": "usage", "detail": "--i is required for face and degen" });
        return (2, json::to_string(&v, false));
    }
    match execute(cli.cmd) {
        Ok(Output::Json(v, ok)) => (if ok { 0 } else { 1 }, json::to_string(&v, pretty)),
        Ok(Output::Text(text, v)) => (0, if pretty { prettify(&text) } else { json::to_string(&v, false) }),
        Err(e) => (2, json::to_string(&error_json(&e), false)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        run(std::iter::once("binomial-cobar").chain(args.iter().copied()))
    }

    #[test]
    fn mul_example() {
        assert_eq!(call(&["mul", "a(1)", "a(1)"]), (0, r#"{"basis":"binomial","terms":{"1":1,"2":2}}"#.to_string()));
    }

    #[test]
    fn modl_example() {
        assert_eq!(call(&["modl", "basis", "--l", "2", "--nu", "2"]), (0, r#"{"basis":[1,3],"pass":true,"q":4}"#.to_string()));
    }

    #[test]
    fn errors() {
        let (code, out) = call(&["mul", "a(", "a(1)"]);
        assert_eq!(code, 2);
        assert!(out.contains(r#""position":2"#), "{out}");
        let (code, out) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(out.starts_with(r#"{"detail":"#));
        let (code, _) = call(&["cobar", "face", "--n", "0", "u"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn pretty_output() {
        assert_eq!(prettify("a(1) ox 2*a(12) + b(3)"), "α₁ ⊗ 2*α₁₂ + β₃");
        let (code, out) = call(&["--pretty", "antipode", "a(2)"]);
        assert_eq!(code, 0);
        assert_eq!(out, "-t^-3*α₂");
    }

    #[test]
    fn cobar_and_fgl() {
        let (code, out) = call(&["cobar", "diff", "--n", "0", "u"]);
        assert_eq!(code, 0);
        assert!(out.contains(r#""degree":1"#));
        let (_, out) = call(&["fgl", "coeff", "--k", "3", "--i", "2", "--j", "2"]);
        assert!(out.contains(r#""coeff":{"terms":{"1":6}}"#), "{out}");
        let (_, out) = call(&["fgl", "coeff", "--k", "1", "--i", "1", "--j", "1", "--generic", "3"]);
        assert!(out.contains("a_1_1"), "{out}");
        let (_, out) = call(&["telescope", "--stage", "1", "b(1)"]);
        assert_eq!(out, r#"{"degree":1,"terms":[{"coeff":1,"index":[0],"shifts":[0],"u":0}]}"#);
    }
}
