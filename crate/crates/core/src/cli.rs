//! Command-line front end. `run` is the whole program minus process plumbing,
//! so it can be driven from tests with in-memory streams.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::base_fields::{FieldContext, FieldElement};
use crate::diskoid::{decompose, diskoid_value, non_multiplicative_diskoid};
use crate::error::Error;
use crate::newton::{render, slope_data, verify_slope_root_equivalence, RenderFormat};
use crate::parse::parse_element_list;
use crate::polynomials::{q_expansion, Polynomial};
use crate::report::Report;
use crate::suites::{fixtures_report, run_suite, SUITES};
use crate::valuations::{
    abkp_refute, epsilon_factor, support_set, value_of, verify_epsilon_equality, PolyValuation,
    Verdict,
};
use crate::value_group::GroupValue;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Claims accepted by `verify`. `counterexample-6.11` is kept as an alias.
pub const CLAIMS: [&str; 5] = [
    "non-multiplicative-diskoid",
    "fixtures",
    "slope-roots",
    "epsilon-equality",
    "abkp",
];

#[derive(Parser, Debug)]
#[command(
    name = "keypoly",
    version,
    about = "Valuations on K[X], Newton polygons and diskoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Field context: tadic:QQ or padic:<p>, optionally :<group dimension>.
    #[arg(long, default_value = "tadic:QQ")]
    ctx: String,
    /// Valuation: gauss:<γ>, pair:<center>:<δ> or trunc[<Q>]:<valuation>.
    #[arg(long, allow_hyphen_values = true)]
    val: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Value of --poly under --val.
    Value {
        #[command(flatten)]
        common: Common,
    },
    /// ε factor of --poly under --val; with --q also the support set of the Q-expansion.
    Epsilon {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Q-expansion of --poly.
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Newton polygon of the Hasse-Schmidt values of --poly under --val.
    Polygon {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Decomposition of the diskoid of --poly and --rho into balls.
    Diskoid {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        /// Comma-separated roots of --poly, with multiplicity.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Also report the diskoid value of this polynomial.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Check a claim, or run a seeded property suite with --suite.
    Verify {
        claim: Option<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure to turn arguments into inputs.
struct Usage(String);

impl Usage {
    fn at(flag: &str, text: &str, err: Error) -> Usage {
        match err {
            Error::Parse { message, span } => {
                let start = span.start.min(text.len());
                let width = span.end.saturating_sub(span.start).max(1);
                Usage(format!(
                    "error in {flag}: {message}\n  {text}\n  {}{}",
                    " ".repeat(text[..start].chars().count()),
                    "^".repeat(width)
                ))
            }
            other => Usage(format!("error in {flag}: {other}")),
        }
    }
}

impl From<Error> for Usage {
    fn from(e: Error) -> Usage {
        Usage(format!("error: {e}"))
    }
}

type Outcome = std::result::Result<(String, i32), Usage>;

fn context(c: &Common) -> std::result::Result<FieldContext, Usage> {
    c.ctx.parse().map_err(|e| Usage::at("--ctx", &c.ctx, e))
}

fn need<'a>(flag: &str, v: &'a Option<String>) -> std::result::Result<&'a str, Usage> {
    v.as_deref()
        .ok_or_else(|| Usage(format!("error: {flag} is required")))
}

fn poly_arg(flag: &str, text: &str, ctx: FieldContext) -> std::result::Result<Polynomial, Usage> {
    Polynomial::parse(text, ctx).map_err(|e| Usage::at(flag, text, e))
}

fn val_arg(c: &Common, ctx: FieldContext) -> std::result::Result<PolyValuation, Usage> {
    let text = need("--val", &c.val)?;
    PolyValuation::parse(text, ctx).map_err(|e| Usage::at("--val", text, e))
}

fn common_poly(c: &Common, ctx: FieldContext) -> std::result::Result<Polynomial, Usage> {
    poly_arg("--poly", need("--poly", &c.poly)?, ctx)
}

fn roots_arg(text: &str, ctx: FieldContext) -> std::result::Result<Vec<FieldElement>, Usage> {
    parse_element_list(text, ctx).map_err(|e| Usage::at("--roots", text, e))
}

fn value_arg(flag: &str, text: &str) -> std::result::Result<GroupValue, Usage> {
    text.parse().map_err(|e| Usage::at(flag, text, e))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).unwrap()
}

fn report_outcome(r: Report) -> Outcome {
    let code = if r.passed() { EXIT_OK } else { EXIT_FAIL };
    Ok((r.to_json(), code))
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Value { common } => {
            let ctx = context(&common)?;
            let mu = val_arg(&common, ctx)?;
            let f = common_poly(&common, ctx)?;
            Ok((value_of(&mu, &f)?.to_string(), EXIT_OK))
        }
        Command::Epsilon { common, q } => {
            let ctx = context(&common)?;
            let mu = val_arg(&common, ctx)?;
            let f = common_poly(&common, ctx)?;
            let eps = epsilon_factor(&mu, &f)?;
            match q {
                None => Ok((eps.to_string(), EXIT_OK)),
                Some(q) => {
                    let q = poly_arg("--q", &q, ctx)?;
                    let s = support_set(&mu, &q, &f)?;
                    let out = json!({
                        "epsilon": eps.to_string(),
                        "support": s.indices.iter().collect::<Vec<_>>(),
                        "d": s.d,
                    });
                    Ok((pretty(&out), EXIT_OK))
                }
            }
        }
        Command::Expand { common, q } => {
            let ctx = context(&common)?;
            let f = common_poly(&common, ctx)?;
            let q = poly_arg("--q", &q, ctx)?;
            let parts = q_expansion(&f, &q)?;
            let out = json!({
                "f": f.to_string(),
                "Q": q.to_string(),
                "parts": parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            Ok((pretty(&out), EXIT_OK))
        }
        Command::Polygon { common, format } => {
            let ctx = context(&common)?;
            let format: RenderFormat = format
                .parse()
                .map_err(|e| Usage::at("--format", &format, e))?;
            let mu = val_arg(&common, ctx)?;
            let f = common_poly(&common, ctx)?;
            let poly = slope_data(&f, &mu)?;
            Ok((render(&poly, format)?.trim_end().to_string(), EXIT_OK))
        }
        Command::Diskoid {
            common,
            rho,
            roots,
            eval,
        } => {
            let ctx = context(&common)?;
            let f = common_poly(&common, ctx)?;
            let rho = value_arg("--rho", &rho)?;
            let roots = roots_arg(&roots, ctx)?;
            let d = decompose(&f, &roots, &rho)?;
            let mut out = d.to_json_value();
            if let Some(g) = eval {
                let g = poly_arg("--eval", &g, ctx)?;
                out["value"] =
                    json!({"g": g.to_string(), "value": diskoid_value(&d, &g)?.to_string()});
            }
            Ok((pretty(&out), EXIT_OK))
        }
        Command::Verify {
            claim,
            common,
            q,
            roots,
            a,
            suite,
            seed,
        } => {
            if let Some(name) = suite {
                if claim.is_some() {
                    return Err(Usage(
                        "error: give either a claim or --suite, not both".into(),
                    ));
                }
                return report_outcome(run_suite(&name, seed)?);
            }
            let claim = claim.ok_or_else(|| {
                Usage(format!(
                    "error: verify needs a claim ({}) or --suite ({})",
                    CLAIMS.join(", "),
                    SUITES.join(", ")
                ))
            })?;
            let ctx = context(&common)?;
            match claim.as_str() {
                "non-multiplicative-diskoid" | "counterexample-6.11" => {
                    let text = a.as_deref().unwrap_or("t^-1");
                    let a =
                        FieldElement::parse(text, ctx).map_err(|e| Usage::at("--a", text, e))?;
                    report_outcome(non_multiplicative_diskoid(&a)?)
                }
                "fixtures" => report_outcome(fixtures_report()),
                "slope-roots" => {
                    let mu = val_arg(&common, ctx)?;
                    let f = common_poly(&common, ctx)?;
                    let roots = roots_arg(need("--roots", &roots)?, ctx)?;
                    report_outcome(verify_slope_root_equivalence(&f, &roots, &mu)?)
                }
                "epsilon-equality" => {
                    let mu = val_arg(&common, ctx)?;
                    let f = common_poly(&common, ctx)?;
                    let q = poly_arg("--q", need("--q", &q)?, ctx)?;
                    report_outcome(verify_epsilon_equality(&q, &mu, &f)?)
                }
                "abkp" => {
                    let mu = val_arg(&common, ctx)?;
                    let q = poly_arg("--q", need("--q", &q)?, ctx)?;
                    let list = need("--poly", &common.poly)?;
                    let candidates = list
                        .split(',')
                        .map(|c| poly_arg("--poly", c.trim(), ctx))
                        .collect::<std::result::Result<Vec<_>, _>>()?;
                    let verdict = abkp_refute(&mu, &q, &candidates)?;
                    let out = match verdict {
                        Verdict::Refuted {
                            witness,
                            witness_epsilon,
                            q_epsilon,
                        } => json!({
                            "verdict": "refuted",
                            "witness": witness.to_string(),
                            "eps(witness)": witness_epsilon.to_string(),
                            "eps(Q)": q_epsilon.to_string(),
                        }),
                        Verdict::NotRefuted { tested } => json!({
                            "verdict": "not refuted",
                            "tested": tested,
                            "note": "only the listed candidates were tested",
                        }),
                    };
                    Ok((pretty(&out), EXIT_OK))
                }
                other => Err(Usage(format!(
                    "error: unknown claim {other}; expected one of {}",
                    CLAIMS.join(", ")
                ))),
            }
        }
    }
}

/// Runs one command line. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("keypoly").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn value_command() {
        let (code, out, _) = call(&[
            "value",
            "--ctx",
            "tadic:QQ",
            "--val",
            "pair:t^(1/2):3/2",
            "--poly",
            "X^2",
        ]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
    }

    #[test]
    fn polygon_json() {
        let (code, out, _) = call(&[
            "polygon",
            "--ctx",
            "tadic:QQ",
            "--val",
            "pair:t^(1/2):3/2",
            "--poly",
            "X^2 - t",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"], json!([[0, "2"], [1, "1/2"], [2, "0"]]));
        assert_eq!(v["slopes"], json!(["3/2", "1/2"]));
    }

    #[test]
    fn parse_error_has_caret() {
        let (code, _, err) = call(&["value", "--val", "gauss:1", "--poly", "X^2 + * t"]);
        assert_eq!(code, 2);
        assert!(err.contains("--poly") && err.contains('^'), "{err}");
    }

    #[test]
    fn counterexample_alias() {
        let (code, out, _) = call(&[
            "verify",
            "counterexample-6.11",
            "--ctx",
            "tadic:QQ",
            "--a",
            "t^-1",
        ]);
        assert_eq!(code, 0);
        assert!(
            out.contains("\"value(f)\": \"-1\"") && out.contains("\"sum\": \"-2\""),
            "{out}"
        );
        let (_, again, _) = call(&["verify", "non-multiplicative-diskoid", "--a", "t^-1"]);
        assert_eq!(out, again);
    }

    #[test]
    fn failing_verification_exits_one() {
        let (code, out, _) = call(&[
            "verify",
            "epsilon-equality",
            "--val",
            "gauss:0",
            "--q",
            "X^2",
            "--poly",
            "X",
        ]);
        assert_eq!(code, 1, "{out}");
    }
}
