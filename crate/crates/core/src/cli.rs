//! Command-line front end. `main` only forwards `std::env::args` here so the
//! whole dispatch, including exit codes, can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use crate::braids::{artin_presentation_with, mobius_pipeline_with, mobius_presentation, Yb6Variant};
use crate::cube::IndexSet;
use crate::error::CubeError;
use crate::group::{format, Format};
use crate::oracles::{self, Params, CHECKS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pbraid", version, about = "Presentations of pure braid groups of the plane and the Moebius band")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Plain,
    Json,
    Cas,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => Format::Plain,
            FormatArg::Json => Format::Json,
            FormatArg::Cas => Format::Cas,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Theorem,
    Proof,
}

impl From<VariantArg> for Yb6Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Theorem => Yb6Variant::Theorem,
            VariantArg::Proof => Yb6Variant::Proof,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportArg {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct PresentationArgs {
    /// Number of strands (at least 1).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub strands: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    pub format: FormatArg,
    /// Which form of the six-index Yang-Baxter relator to use.
    #[arg(long = "yb6-variant", value_enum, default_value_t = VariantArg::Theorem)]
    pub yb6_variant: VariantArg,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the presentation of the pure braid group of the plane.
    Artin(PresentationArgs),
    /// Print the presentation of the pure braid group of the Moebius band.
    Mobius {
        #[command(flatten)]
        args: PresentationArgs,
        /// Emit the presentation derived through the mapping-torus pipeline.
        #[arg(long)]
        pipeline: bool,
    },
    /// Evaluate an index-set expression such as `wedge(3:{1,3}, 5:{2,4,5})`.
    Cube { expression: String },
    /// Run named verification checks, or `all`.
    Verify {
        #[arg(required = true)]
        names: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportArg::Text)]
        report: ReportArg,
        /// Extra check parameter, repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let mut rendered = e.render().to_string();
            if e.use_stderr() && !rendered.contains("Usage:") {
                rendered.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err((code, message)) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

type Outcome = Result<i32, (i32, String)>;

fn usage(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_USAGE, e.to_string())
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), (i32, String)> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(usage),
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Outcome {
    match command {
        Command::Artin(a) => {
            let p = artin_presentation_with(a.strands as usize, a.yb6_variant.into()).map_err(usage)?;
            emit(&format::write(&p, a.format.into()), a.out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Mobius { args: a, pipeline } => {
            let k = a.strands as usize;
            let p = if pipeline {
                mobius_pipeline_with(k, a.yb6_variant.into())
            } else {
                mobius_presentation(k)
            }
            .map_err(usage)?;
            emit(&format::write(&p, a.format.into()), a.out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Cube { expression } => match eval_cube(&expression) {
            Ok(set) => {
                emit(&format!("{set}\n"), None, stdout)?;
                Ok(EXIT_OK)
            }
            Err(e @ CubeError::AmbientMismatch { .. }) => Err((EXIT_DOMAIN, e.to_string())),
            Err(e) => Err(usage(e)),
        },
        Command::Verify { names, seed, report, params, out } => {
            let names = expand_names(&names)?;
            let mut p = Params::new();
            for kv in &params {
                let (k, v) = kv.split_once('=').ok_or_else(|| usage(format!("expected KEY=VALUE, got `{kv}`")))?;
                p.insert(k.to_string(), v.to_string());
            }
            p.insert("seed".into(), seed.to_string());
            let mut reports = Vec::with_capacity(names.len());
            for name in &names {
                reports.push(oracles::run_check(name, &p).map_err(usage)?);
            }
            let text = match report {
                ReportArg::Text => oracles::render_text(&reports),
                ReportArg::Json => oracles::render_json(&reports),
            };
            emit(&text, out.as_ref(), stdout)?;
            Ok(if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn expand_names(names: &[String]) -> Result<Vec<String>, (i32, String)> {
    let mut out = Vec::new();
    for n in names {
        if n == "all" {
            out.extend(CHECKS.iter().map(|c| c.to_string()));
        } else if CHECKS.contains(&n.as_str()) {
            out.push(n.clone());
        } else {
            return Err(usage(format!("unknown check `{n}` (known: {}, all)", CHECKS.join(", "))));
        }
    }
    Ok(out)
}

/// Evaluates `op(arg, ...)` with `op` one of `comp`, `wedge`, `vee`,
/// `bracket` and arguments written as index-set literals `n:{...}`.
pub fn eval_cube(expression: &str) -> Result<IndexSet, CubeError> {
    let parse = |m: String| CubeError::Parse(m);
    let expr = expression.trim();
    let open = expr.find('(').ok_or_else(|| parse(format!("expected `op(...)`, got `{expr}`")))?;
    let body = expr[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| parse("missing closing parenthesis".into()))?;
    let op = expr[..open].trim();
    let args = split_args(body)?
        .into_iter()
        .map(|a| a.parse::<IndexSet>())
        .collect::<Result<Vec<_>, _>>()?;
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(parse(format!("`{op}` takes {n} argument(s), got {}", args.len())))
        }
    };
    match op {
        "comp" => {
            arity(1)?;
            Ok(args[0].complement())
        }
        "wedge" => {
            arity(2)?;
            args[0].wedge(&args[1])
        }
        "vee" => {
            arity(2)?;
            args[0].vee(&args[1])
        }
        "bracket" => {
            arity(2)?;
            args[0].bracket(&args[1])
        }
        other => Err(parse(format!("unknown operation `{other}`"))),
    }
}

/// Splits on commas that are not inside braces.
fn split_args(body: &str) -> Result<Vec<&str>, CubeError> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (pos, c) in body.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(body[start..pos].trim());
                start = pos + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(CubeError::Parse("unbalanced braces".into()));
        }
    }
    if depth != 0 {
        return Err(CubeError::Parse("unbalanced braces".into()));
    }
    let last = body[start..].trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["pbraid"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn cube_expressions() {
        let (code, out, _) = run_str(&["cube", "wedge(8:{2,4,6}, 18:{2,3,5,7,9,11,13,17})"]);
        assert_eq!((code, out.as_str()), (0, "18:{3,7,11}\n"));
        let (code, out, _) = run_str(&["cube", "vee(10:{1,4,6,9}, 18:{2,3,5,7,9,11,13,17})"]);
        assert_eq!((code, out.as_str()), (0, "18:{1,2,3,5,7,8,9,11,12,13,16,17}\n"));
        assert_eq!(run_str(&["cube", "comp(5:{})"]).1, "5:{1,2,3,4,5}\n");
        assert_eq!(run_str(&["cube", "wedge(4:{1}, 5:{1,2})"]).0, EXIT_DOMAIN);
        assert_eq!(run_str(&["cube", "wedge(4:{1}"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["cube", "twist(4:{1})"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["cube", "comp(3:{4})"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["cube", "vee(3:{1})"]).0, EXIT_USAGE);
    }

    #[test]
    fn generation_and_usage_errors() {
        let (code, out, _) = run_str(&["artin", "--strands", "2", "--format", "plain"]);
        assert_eq!((code, out.as_str()), (0, "generators: A_2_1\n"));
        let (code, _, err) = run_str(&["artin", "--strands", "0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("Usage"));
        let (code, out, _) = run_str(&["mobius", "--strands", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("relator:")).count(), 1);
        assert_eq!(run_str(&["mobius", "--strands", "2", "--format", "xml"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_dispatch() {
        let (code, out, _) = run_str(&["verify", "quaternion_selftest"]);
        assert_eq!(code, 0);
        assert!(out.contains("order=8"));
        assert_eq!(run_str(&["verify", "no_such_check"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "artin_counts", "--param", "k_max"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "artin_counts", "--param", "k_max=x"]).0, EXIT_USAGE);
    }
}
