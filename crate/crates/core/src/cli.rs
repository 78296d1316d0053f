//! Command-line front end. `run` does all the work so it can be driven from
//! tests; the binary only forwards arguments and writes the output.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::braid::{BraidWord, ParseError};
use crate::families::{FamilySpec, Validation};
use crate::invariants::{
    self, positive_braid_genus, AlexanderError, InvariantError, JonesError, Limits,
};
use crate::verify::{parse_params, run_suite, scan_conjecture, RunOptions, SuiteId, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "braidknot",
    version,
    about = "Braid closures, their exact invariants, and twisted torus knot checks",
    after_help = "Resource limits: BRAIDKNOT_TL_MAX_STRANDS (default 10, at most 16), \
                  BRAIDKNOT_MAX_CROSSINGS (default 400).\n\
                  Exit codes: 0 ok, 1 usage, 2 resource limit, 3 unexpected suite verdict."
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Include wall-clock timings in verify reports.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the braid word of a family: `torus p q`, `ttk p q r s`,
    /// `klink r,s ...`, `tlink r,s ...`, `cable (<spec>) m j`.
    Build {
        /// Accept parameters outside the families' standing hypotheses.
        #[arg(long)]
        relaxed: bool,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        spec: Vec<String>,
    },
    /// Invariants of a braid closure; all of them when no flag is given.
    Inv {
        #[arg(long)]
        alexander: bool,
        #[arg(long)]
        jones: bool,
        #[arg(long)]
        genus: bool,
        /// `n: e1 e2 ...`, or `-` to read stdin.
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        braid: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Parameter tuples, e.g. "5,2,1;7,3,1". Defaults per suite.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Scan T(p,q;r,1) for cable and torus-knot matches.
    Scan {
        #[arg(long)]
        pmax: i64,
        #[arg(long, default_value_t = 8)]
        qmax: i64,
        /// Crossing cap; larger instances are listed as skipped.
        #[arg(long, default_value_t = 200)]
        cap: usize,
    },
    /// ASCII diagram of a braid word.
    Render {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        braid: Vec<String>,
    },
}

/// Rendered output and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
    /// Destination from `--out`; stdout when absent.
    pub out: Option<std::path::PathBuf>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            code: EXIT_OK,
            out: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Jones(
                JonesError::TooManyStrands { .. } | JonesError::TooManyCrossings { .. },
            ) => CliError::Resource(e.to_string()),
            InvariantError::Jones(JonesError::SupportCheck { .. })
            | InvariantError::Alexander(AlexanderError::SupportCheck { .. }) => {
                CliError::Resource(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Invariant(e) => e.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Parses the text format `n: e1 e2 ...`.
pub fn parse_braid_text(input: &str) -> Result<BraidWord, ParseError> {
    BraidWord::parse(input)
}

/// One row per letter, first letter on top. Strands are `|` columns; a
/// crossing of strands `i` and `i+1` is drawn `\+/` when positive and `\-/`
/// when negative, and the letter is repeated at the end of the row.
pub fn render_ascii(w: &BraidWord) -> String {
    let n = w.strands();
    let width = 2 * n - 1;
    let mut out: String = (1..=n)
        .map(|j| (j % 10).to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    for &e in w.letters() {
        let mut row = vec![' '; width];
        for j in 0..n {
            row[2 * j] = '|';
        }
        let i = e.unsigned_abs() as usize - 1;
        row[2 * i] = '\\';
        row[2 * i + 1] = if e > 0 { '+' } else { '-' };
        row[2 * i + 2] = '/';
        out.extend(row);
        out.push_str(&format!("   {e}\n"));
    }
    out
}

fn read_braid(args: &[String]) -> Result<BraidWord, CliError> {
    let text = if args.len() == 1 && args[0] == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        args.join(" ")
    };
    Ok(parse_braid_text(&text)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command. Clap
/// usage errors are returned as `CliError::Usage`; help and version requests
/// come back as successful output.
pub fn run_args<I, T>(args: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Ok(Outcome::ok(e.to_string()))
                }
                _ => Err(CliError::Usage(e.to_string())),
            };
        }
    };
    let limits = Limits::from_env().map_err(|e| CliError::Usage(e.to_string()))?;
    let mut outcome = run(&cli, &limits)?;
    outcome.out = cli.out.clone();
    Ok(outcome)
}

pub fn run(cli: &Cli, limits: &Limits) -> Result<Outcome, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Build { relaxed, spec } => {
            let text = spec.join(" ");
            let family = FamilySpec::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            let mode = if *relaxed {
                Validation::Relaxed
            } else {
                Validation::Strict
            };
            let w = family
                .braid(mode)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Outcome::ok(if json {
                to_json(&json!({
                    "spec": family.to_string(),
                    "braid": w.to_string(),
                    "strands": w.strands(),
                    "letters": w.len(),
                    "components": w.component_count(),
                }))
            } else {
                format!("{w}\n")
            }))
        }
        Command::Inv {
            alexander,
            jones,
            genus,
            braid,
        } => {
            let w = read_braid(braid)?;
            let all = !(*alexander || *jones || *genus);
            let mut report = serde_json::Map::new();
            let mut text = String::new();
            report.insert("braid".into(), json!(w.to_string()));
            report.insert("components".into(), json!(w.component_count()));
            text.push_str(&format!(
                "braid       {w}\ncomponents  {}\n",
                w.component_count()
            ));
            if all || *alexander {
                let a = invariants::alexander(&w).map_err(InvariantError::from)?;
                text.push_str(&format!("alexander   {a}\n"));
                report.insert("alexander".into(), json!(a.to_string()));
            }
            if all || *jones {
                match invariants::jones(&w, limits) {
                    Ok(v) => {
                        text.push_str(&format!("jones       {v}\n"));
                        report.insert("jones".into(), json!(v.to_string()));
                    }
                    Err(e) if all => {
                        text.push_str(&format!("jones       skipped: {e}\n"));
                        report.insert("jones".into(), serde_json::Value::Null);
                        report.insert("jones_skipped".into(), json!(e.to_string()));
                    }
                    Err(e) => return Err(InvariantError::from(e).into()),
                }
            }
            if all || *genus {
                match positive_braid_genus(&w) {
                    Ok(g) => {
                        text.push_str(&format!("genus       {g}\n"));
                        report.insert("genus".into(), json!(g));
                    }
                    Err(e) if all => {
                        text.push_str(&format!("genus       skipped: {e}\n"));
                        report.insert("genus".into(), serde_json::Value::Null);
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Outcome::ok(if json { to_json(&report) } else { text }))
        }
        Command::Verify { suite, params } => {
            let id: SuiteId = suite.parse()?;
            let params = match params {
                Some(p) => parse_params(p)?,
                None => Vec::new(),
            };
            let report = run_suite(
                id,
                &params,
                &RunOptions {
                    limits: *limits,
                    timings: cli.timings,
                },
            )?;
            let code = if report.all_expected() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok(Outcome {
                output: if json {
                    to_json(&report)
                } else {
                    report.to_text()
                },
                code,
                out: None,
            })
        }
        Command::Scan { pmax, qmax, cap } => {
            let report = scan_conjecture(*pmax, *qmax, *cap, limits)?;
            Ok(Outcome::ok(if json {
                to_json(&report)
            } else {
                report.to_text()
            }))
        }
        Command::Render { braid } => {
            let w = read_braid(braid)?;
            Ok(Outcome::ok(if json {
                to_json(&json!({ "braid": w.to_string(), "ascii": render_ascii(&w) }))
            } else {
                render_ascii(&w)
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Outcome {
        let mut full = vec!["braidknot"];
        full.extend_from_slice(args);
        run_args(full).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_braid_text("2: 1 1 1").unwrap().letters(), &[1, 1, 1]);
        assert!(parse_braid_text("3:").unwrap().is_empty());
        let e = parse_braid_text("3: 5").unwrap_err();
        assert!(e.message.contains("token 1"), "{e}");
        assert_eq!(e.column, 4);
    }

    #[test]
    fn render_examples() {
        let r = render_ascii(&BraidWord::new(2, vec![1]).unwrap());
        assert_eq!(r, "1 2\n\\+/   1\n");
        assert_eq!(render_ascii(&BraidWord::trivial(3)), "1 2 3\n");
        let r = render_ascii(&BraidWord::new(3, vec![1, -2]).unwrap());
        let rows: Vec<&str> = r.lines().skip(1).collect();
        assert_eq!(rows, ["\\+/ |   1", "| \\-/   -2"]);
    }

    #[test]
    fn build_and_inv() {
        assert_eq!(run_ok(&["build", "torus", "2", "3"]).output, "2: 1 1 1\n");
        let out = run_ok(&["--format", "json", "inv", "2:", "1", "1", "1"]).output;
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["alexander"], "1 - 1*t + 1*t^2");
        assert_eq!(v["jones"], "1*t + 1*t^3 - 1*t^4");
        assert_eq!(v["genus"], 1);
    }

    #[test]
    fn exit_codes() {
        let usage = run_args(["braidknot", "inv", "3:", "5"]).unwrap_err();
        assert_eq!(usage.exit_code(), EXIT_USAGE);
        let unknown = run_args(["braidknot", "verify", "--suite", "nope"]).unwrap_err();
        assert_eq!(unknown.exit_code(), EXIT_USAGE);
        assert_eq!(run_args(["braidknot"]).unwrap_err().exit_code(), EXIT_USAGE);
        let big = format!(
            "12: {}",
            (1..12).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
        );
        let res = run_args(["braidknot", "inv", "--jones", big.as_str()]).unwrap_err();
        assert_eq!(res.exit_code(), EXIT_RESOURCE);
        let bad = run_ok(&["verify", "--suite", "theorem5", "--params", "2,1"]);
        assert_eq!(bad.code, EXIT_MISMATCH);
        let good = run_ok(&["verify", "--suite", "toruslemma", "--params", "5,2,1"]);
        assert_eq!(good.code, EXIT_OK);
    }
}
