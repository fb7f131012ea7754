//! The `jack` command line: expansions, operator application, eigenvalues,
//! step operators, the kernel and the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alpha::{alpha_rat_to_json, eval_alpha, AlphaRat, ShowAlpha};
use crate::error::{Error, Result};
use crate::field::{parse_rational, Rational};
use crate::jack::jack_p;
use crate::ops::{
    apply_a, apply_b, apply_c, apply_h1, apply_h2, eigenvalue_a_k, eigenvalue_a_series, expand_pochhammer,
    heisenberg_a, step_down, step_up, upoly_rat_to_json, ShowU, UPolyRat,
};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::symfun::{kernel_lemma_check, kernel_truncated, Basis, SymFun};
use crate::verify::{run_suite, Bounds, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "jack", version, about = "Exact Jack symmetric functions and Sekiguchi-Debiard operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Specialize printed coefficients at α = p/q (symbolic by default).
    #[arg(long, global = true, value_name = "P/Q")]
    alpha: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    M,
    P,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::P => Basis::PowerSum,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Up,
    Down,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand the Jack function P_λ.
    Expand {
        /// Partition as comma-separated parts, `-` for the empty partition.
        #[arg(short = 'l', long = "partition", allow_hyphen_values = true)]
        partition: String,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
    },
    /// Apply an operator: A<k>, B<k>, C<k>, H1, H2, a+<n>, a-<n>.
    Apply {
        #[arg(long = "op")]
        op: String,
        #[command(flatten)]
        input: InputArgs,
        /// Output basis; defaults to the basis of the input.
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
    /// Eigenvalue of A(u) on P_λ and its coefficients A^(k).
    Eigenvalue {
        #[arg(short = 'l', long = "partition", allow_hyphen_values = true)]
        partition: String,
        /// Only print the eigenvalue of A^(k).
        #[arg(short = 'k', long)]
        k: Option<usize>,
    },
    /// Evaluate a step operator on P_λ at the row `i`.
    Step {
        #[arg(short = 'l', long = "partition", allow_hyphen_values = true)]
        partition: String,
        /// Row index, 1-based.
        #[arg(short = 'i', long = "row")]
        row: usize,
        #[arg(long, value_enum, default_value_t = Direction::Down)]
        direction: Direction,
    },
    /// Run a verification suite.
    Verify {
        /// commute, eigen, pieri, hs, kernel, detid, stability, heisenberg or all.
        suite: String,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        max_k: Option<usize>,
        /// Largest number of variables.
        #[arg(long)]
        n: Option<usize>,
        /// Largest number of ψ values.
        #[arg(long)]
        m: Option<usize>,
        /// Truncation degree in y for the series determinant.
        #[arg(long)]
        ydeg: Option<u32>,
        /// Random instances per size.
        #[arg(long)]
        seeds: Option<u64>,
        /// Base seed for random instances.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the truncated reproducing kernel, or check the kernel lemma for an input.
    Kernel {
        /// Truncation degree.
        #[arg(short = 'd', long = "max-weight", default_value_t = 3)]
        degree: u32,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// Inline input: SymFun JSON, a rational, `{p:[2,1]}`, or a list of those.
    #[arg(long = "in", allow_hyphen_values = true)]
    inline: Option<String>,
    /// Read the input from a file; `-` for stdin.
    #[arg(long)]
    file: Option<PathBuf>,
}

enum Outcome {
    Ok(String),
    VerifyFailed(String),
}

/// Runs the CLI on `args` (including the program name), reading stdin on
/// demand; returns the exit code.
pub fn run(
    args: impl IntoIterator<Item = OsString>,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(Outcome::Ok(s)) => {
            let _ = writeln!(out, "{s}");
            EXIT_OK
        }
        Ok(Outcome::VerifyFailed(s)) => {
            let _ = writeln!(out, "{s}");
            EXIT_VERIFY_FAILED
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

fn parse_alpha(s: &Option<String>) -> Result<Option<Rational>> {
    s.as_deref()
        .map(|a| parse_rational(a).ok_or_else(|| Error::Parse(format!("--alpha expects a rational, got {a:?}"))))
        .transpose()
}

fn specialize(c: &AlphaRat, at: &Option<Rational>) -> Result<AlphaRat> {
    match at {
        None => Ok(c.clone()),
        Some(r) => Ok(AlphaRat::constant(eval_alpha(c, r)?)),
    }
}

fn specialize_symfun(f: &SymFun, at: &Option<Rational>) -> Result<SymFun> {
    let terms = f.terms().iter().map(|(l, c)| Ok((l.clone(), specialize(c, at)?))).collect::<Result<Vec<_>>>()?;
    Ok(SymFun::from_terms(f.basis(), terms))
}

fn specialize_u(v: &UPolyRat, at: &Option<Rational>) -> Result<UPolyRat> {
    if at.is_none() {
        return Ok(v.clone());
    }
    let map = |p: &Poly<AlphaRat>| -> Result<Poly<AlphaRat>> {
        Ok(Poly::new(p.coeffs().iter().map(|c| specialize(c, at)).collect::<Result<Vec<_>>>()?))
    };
    UPolyRat::new(map(v.num())?, map(v.den())?)
}

/// `c·p_x(x)·p_y(y)` with empty factors left out.
pub fn kernel_term(c: &AlphaRat, x: &Partition, y: &Partition) -> String {
    let factors: Vec<String> =
        [(x, "x"), (y, "y")].into_iter().filter(|(l, _)| !l.is_empty()).map(|(l, v)| format!("p[{l}]({v})")).collect();
    let c = ShowAlpha(c).to_string();
    match (factors.is_empty(), c.as_str()) {
        (true, _) => c,
        (false, "1") => factors.join("·"),
        _ => format!("{c}·{}", factors.join("·")),
    }
}

fn coeff_json(c: &AlphaRat) -> serde_json::Value {
    alpha_rat_to_json(c)
}

fn symfun_output(f: &SymFun, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(f).expect("serializable"),
        Format::Text => f.to_string(),
    }
}

/// Quotes bare object keys so that `{p:[1]}` reads as JSON.
fn quote_bare_keys(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let chars: Vec<char> = s.chars().collect();
    let mut in_string = false;
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch == '"' {
            in_string = !in_string;
        }
        if !in_string && ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let mut j = i;
            while j < chars.len() && chars[j].is_whitespace() {
                j += 1;
            }
            if j < chars.len() && chars[j] == ':' {
                out.push_str(&format!("\"{word}\""));
            } else {
                out.push_str(&word);
            }
            continue;
        }
        out.push(ch);
        i += 1;
    }
    out
}

fn value_to_symfun(v: &serde_json::Value) -> Result<SymFun> {
    use serde_json::Value;
    let bad = || Error::Parse(format!("cannot read a symmetric function from {v}"));
    match v {
        Value::Number(n) => {
            let r = parse_rational(&n.to_string()).ok_or_else(bad)?;
            Ok(SymFun::constant(AlphaRat::constant(r)))
        }
        Value::String(s) => {
            let r = parse_rational(s).ok_or_else(bad)?;
            Ok(SymFun::constant(AlphaRat::constant(r)))
        }
        Value::Array(items) => {
            let mut acc = SymFun::zero(Basis::PowerSum);
            for item in items {
                acc = acc.add(&value_to_symfun(item)?);
            }
            Ok(acc)
        }
        Value::Object(map) if map.contains_key("terms") => {
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
        }
        Value::Object(map) => {
            let coeff = match map.get("coeff").or_else(|| map.get("c")) {
                None => AlphaRat::constant(Rational::from_integer(1.into())),
                Some(Value::String(s)) => AlphaRat::constant(parse_rational(s).ok_or_else(bad)?),
                Some(Value::Number(n)) => AlphaRat::constant(parse_rational(&n.to_string()).ok_or_else(bad)?),
                Some(other) => crate::alpha::alpha_rat_from_json(other)?,
            };
            let (basis, parts) = match (map.get("p"), map.get("m")) {
                (Some(p), None) => (Basis::PowerSum, p),
                (None, Some(m)) => (Basis::Monomial, m),
                _ => return Err(bad()),
            };
            let lambda: Partition = serde_json::from_value(parts.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(SymFun::from_terms(basis, [(lambda, coeff)]))
        }
        _ => Err(bad()),
    }
}

/// Parses the inline input forms accepted by `--in`.
pub fn parse_symfun(text: &str) -> Result<SymFun> {
    let text = text.trim();
    if let Some(r) = parse_rational(text) {
        return Ok(SymFun::constant(AlphaRat::constant(r)));
    }
    let v: serde_json::Value =
        serde_json::from_str(&quote_bare_keys(text)).map_err(|e| Error::Parse(format!("{text:?}: {e}")))?;
    value_to_symfun(&v)
}

fn read_input(input: &InputArgs, stdin: &mut dyn Read) -> Result<SymFun> {
    let text = match (&input.inline, &input.file) {
        (Some(_), Some(_)) => return Err(Error::Parse("give either --in or --file, not both".into())),
        (Some(s), None) => s.clone(),
        (None, Some(path)) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            s
        }
    };
    parse_symfun(&text)
}

fn apply_named(op: &str, f: &SymFun) -> Result<SymFun> {
    let unknown =
        || Error::Parse(format!("unknown operator {op:?}; expected A<k>, B<k>, C<k>, H1, H2, a+<n> or a-<n>"));
    let index = |rest: &str| rest.parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(unknown);
    match op {
        "H1" => Ok(apply_h1(f)),
        "H2" => Ok(apply_h2(f)),
        _ if op.starts_with('A') => Ok(apply_a(index(&op[1..])?, f)),
        _ if op.starts_with('B') => apply_b(index(&op[1..])?, f),
        _ if op.starts_with('C') => apply_c(index(&op[1..])?, f),
        _ if op.starts_with('a') => {
            let n: i64 = op[1..].trim_start_matches('+').parse().map_err(|_| unknown())?;
            heisenberg_a(n, f)
        }
        _ => Err(unknown()),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let at = parse_alpha(&cli.alpha)?;
    match &cli.command {
        Command::Expand { partition, basis } => {
            let lam = parse_partition(partition)?;
            let f = jack_p(&lam).body.in_basis((*basis).into());
            Ok(Outcome::Ok(symfun_output(&specialize_symfun(&f, &at)?, cli.format)))
        }
        Command::Apply { op, input, basis } => {
            let f = read_input(input, stdin)?;
            let target = basis.map(Basis::from).unwrap_or(f.basis());
            let image = apply_named(op, &f)?.in_basis(target);
            Ok(Outcome::Ok(symfun_output(&specialize_symfun(&image, &at)?, cli.format)))
        }
        Command::Eigenvalue { partition, k } => {
            let lam = parse_partition(partition)?;
            if let Some(k) = k {
                if *k == 0 {
                    return Err(Error::Parse("k must be at least 1".into()));
                }
                let e = specialize(&eigenvalue_a_k(&lam, *k), &at)?;
                return Ok(Outcome::Ok(match cli.format {
                    Format::Json => json!({"partition": lam, "k": k, "eigenvalue": coeff_json(&e)}).to_string(),
                    Format::Text => ShowAlpha(&e).to_string(),
                }));
            }
            let series = eigenvalue_a_series(&lam);
            let coeffs = expand_pochhammer(&series, lam.len())?.coeffs;
            let coeffs = coeffs.iter().map(|c| specialize(c, &at)).collect::<Result<Vec<_>>>()?;
            let series = specialize_u(&series, &at)?;
            Ok(Outcome::Ok(match cli.format {
                Format::Json => json!({
                    "partition": lam,
                    "series": upoly_rat_to_json(&series),
                    "coefficients": coeffs.iter().map(coeff_json).collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Text => {
                    let mut s = format!("A(u) P[{lam}] = {} · P[{lam}]", ShowU(&series));
                    for (k, c) in coeffs.iter().enumerate().skip(1) {
                        s.push_str(&format!("\nA^({k}): {}", ShowAlpha(c)));
                    }
                    s
                }
            }))
        }
        Command::Step { partition, row, direction } => {
            let lam = parse_partition(partition)?;
            let (mu, c) = match direction {
                Direction::Up => step_up(&lam, *row)?,
                Direction::Down => step_down(&lam, *row)?,
            };
            let c = specialize(&c, &at)?;
            Ok(Outcome::Ok(match cli.format {
                Format::Json => json!({
                    "partition": lam,
                    "row": row,
                    "direction": if *direction == Direction::Up { "up" } else { "down" },
                    "mu": mu,
                    "coeff": coeff_json(&c),
                })
                .to_string(),
                Format::Text => match direction {
                    Direction::Up => format!("P[{mu}] -> {} · P[{lam}]", ShowAlpha(&c)),
                    Direction::Down => format!("P[{lam}] -> {} · P[{mu}]", ShowAlpha(&c)),
                },
            }))
        }
        Command::Verify { suite, max_weight, max_k, n, m, ydeg, seeds, seed } => {
            let mut b = Bounds::default();
            if let Some(w) = max_weight {
                b.max_weight = *w;
            }
            if let Some(k) = max_k {
                b.max_k = *k;
            }
            if let Some(n) = n {
                b.n = *n;
                b.series_n = *n;
            }
            if let Some(m) = m {
                b.m = *m;
            }
            if let Some(d) = ydeg {
                b.ydeg = *d;
            }
            if let Some(s) = seeds {
                b.seeds = *s;
            }
            if let Some(s) = seed {
                b.seed = *s;
            }
            let report = run_suite(suite, &b).ok_or_else(|| {
                Error::Parse(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", ")))
            })?;
            let text = match cli.format {
                Format::Json => {
                    let mut v = serde_json::to_value(&report).expect("serializable");
                    v["passed"] = json!(report.passed());
                    v.to_string()
                }
                Format::Text => report.to_string(),
            };
            Ok(if report.passed() { Outcome::Ok(text) } else { Outcome::VerifyFailed(text) })
        }
        Command::Kernel { degree, input } => {
            if input.inline.is_some() || input.file.is_some() {
                let f = read_input(input, stdin)?;
                let ok = kernel_lemma_check(&f, *degree)?;
                let text = match cli.format {
                    Format::Json => json!({"degree": degree, "passed": ok}).to_string(),
                    Format::Text => {
                        format!("{} kernel lemma for {f} at degree {degree}", if ok { "PASS" } else { "FAIL" })
                    }
                };
                return Ok(if ok { Outcome::Ok(text) } else { Outcome::VerifyFailed(text) });
            }
            let terms = kernel_truncated(*degree);
            let mut rows = Vec::new();
            for ((x, y), c) in terms.iter().rev() {
                let c = specialize(c, &at)?;
                rows.push(match cli.format {
                    Format::Json => json!({"x": x, "y": y, "coeff": coeff_json(&c)}),
                    Format::Text => json!(kernel_term(&c, x, y)),
                });
            }
            Ok(Outcome::Ok(match cli.format {
                Format::Json => json!({"degree": degree, "terms": rows}).to_string(),
                Format::Text => {
                    rows.iter().map(|r| r.as_str().expect("text row").to_string()).collect::<Vec<_>>().join("\n")
                }
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("jack").chain(args.iter().copied()).map(OsString::from);
        let code = run(argv, &mut std::io::empty(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn shorthand_inputs() {
        assert_eq!(parse_symfun("{p:[1]}").unwrap(), SymFun::p(part![1]));
        assert_eq!(parse_symfun("1").unwrap(), SymFun::one());
        assert_eq!(parse_symfun(r#"{"m":[2,1]}"#).unwrap(), SymFun::m(part![2, 1]));
        let sum = parse_symfun("[{p:[2]}, {p:[1,1], c:\"-1/2\"}]").unwrap();
        assert_eq!(sum.coeff(&part![1, 1]), AlphaRat::constant(crate::field::rat(-1, 2)));
        assert!(parse_symfun("{q:[1]}").is_err());
        assert_eq!(parse_symfun("{p:[1,2]}").unwrap(), SymFun::p(part![2, 1]));
        assert!(parse_symfun("{p:[1,-1]}").is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = jack_p(&part![2, 1]).body;
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(parse_symfun(&text).unwrap(), f);
    }

    #[test]
    fn codes() {
        assert_eq!(run_str(&["expand", "-l", "2"]).0, 0);
        assert_eq!(run_str(&["expand", "-l", "1,2"]).0, 2);
        assert_eq!(run_str(&["apply", "--op", "Z1", "--in", "1"]).0, 2);
        assert_eq!(run_str(&["apply", "--op", "a0", "--in", "1"]).0, 2);
        assert_eq!(run_str(&["bogus"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
        assert_eq!(run_str(&["verify", "nope"]).0, 2);
    }

    #[test]
    fn alpha_specialization() {
        let (code, out, _) = run_str(&["expand", "-l", "2", "--alpha", "1", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "m[2] + m[1,1]");
        let (code, _, err) = run_str(&["step", "-l", "1,1", "-i", "2", "--alpha", "1"]);
        assert_eq!(code, 2, "{err}");
    }
}
