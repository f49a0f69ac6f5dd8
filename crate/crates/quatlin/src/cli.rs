//! The `quatlin` command line.
//!
//! Exit codes: 0 success (or "equivalent"), 1 "not equivalent", 2 usage or
//! parse error, 3 the two reduction methods disagree.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use quatlin_core::{equivalent, CanonicalForm, Method, DEFAULT_TOLERANCE};

use crate::expr::{parse, parse_quaternion, reduce_program};
use crate::format::{
    form_json, format_matrix, format_quaternion, format_tuple, matrix_json, quaternion_json,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "quatlin",
    version,
    about = "Reduce and compose linear quaternion functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical tuple { A; B; C; D } of an expression.
    Reduce {
        /// Expression or program; `-` reads standard input.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Evaluate the reduced function at a quaternion.
    Eval {
        /// Expression or program; `-` reads standard input.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Point of evaluation, `a+bi+cj+dk` or `(a,b,c,d)`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print the 4x4 real operator matrix of the reduced function.
    Matrix {
        /// Expression or program; `-` reads standard input.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Check whether two expressions denote the same function.
    Equiv {
        /// First expression or program; `-` reads standard input.
        #[arg(allow_hyphen_values = true)]
        left: String,
        /// Second expression or program; `-` reads standard input.
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Debug, Args)]
pub struct CommonOpts {
    #[arg(long, value_enum, default_value_t = MethodChoice::Matrix)]
    pub method: MethodChoice,
    /// Comparison tolerance for `equiv` and `--method both`.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Matrix,
    Involution,
    /// Run both reductions and fail on disagreement.
    Both,
}

/// An error that ends the run with a given exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli.command, stdin) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<(i32, String), Failure> {
    let mut source = Source::new(stdin);
    match command {
        Command::Reduce { expr, opts } => {
            let f = reduce_source(&source.read(expr)?, opts)?;
            let text = if opts.json {
                form_json(&f).to_string()
            } else {
                format_tuple(&f)
            };
            Ok((EXIT_OK, text + "\n"))
        }
        Command::Eval { expr, at, opts } => {
            let point = parse_quaternion(at).map_err(|e| Failure::usage(format!("--at: {e}")))?;
            let f = reduce_source(&source.read(expr)?, opts)?;
            let value = f.evaluate(point);
            let text = if opts.json {
                quaternion_json(value).to_string()
            } else {
                format_quaternion(value)
            };
            Ok((EXIT_OK, text + "\n"))
        }
        Command::Matrix { expr, opts } => {
            let m = reduce_source(&source.read(expr)?, opts)?.matrix();
            let text = if opts.json {
                matrix_json(&m).to_string() + "\n"
            } else {
                format_matrix(&m)
            };
            Ok((EXIT_OK, text))
        }
        Command::Equiv { left, right, opts } => {
            let f = reduce_source(&source.read(left)?, opts)?;
            let g = reduce_source(&source.read(right)?, opts)?;
            let same = equivalent(&f, &g, opts.tol);
            let text = if opts.json {
                serde_json::json!({ "equivalent": same }).to_string()
            } else if same {
                "equivalent".to_string()
            } else {
                "not equivalent".to_string()
            };
            let code = if same { EXIT_OK } else { EXIT_NOT_EQUIVALENT };
            Ok((code, text + "\n"))
        }
    }
}

/// Resolves `-` to standard input, at most once per invocation.
struct Source<'a> {
    stdin: &'a mut dyn Read,
    consumed: bool,
}

impl<'a> Source<'a> {
    fn new(stdin: &'a mut dyn Read) -> Self {
        Source {
            stdin,
            consumed: false,
        }
    }

    fn read(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.consumed {
            return Err(Failure::usage("standard input can be read only once"));
        }
        self.consumed = true;
        let mut text = String::new();
        self.stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
        Ok(text)
    }
}

fn reduce_source(src: &str, opts: &CommonOpts) -> Result<CanonicalForm, Failure> {
    if opts.tol.is_nan() || opts.tol < 0.0 {
        return Err(Failure::usage("--tol must be a non-negative number"));
    }
    let program = parse(src).map_err(|e| Failure::usage(e.to_string()))?;
    let reduce = |method| {
        reduce_program(&program, method)
            .map(|r| r.result)
            .map_err(|e| Failure::usage(e.to_string()))
    };
    match opts.method {
        MethodChoice::Matrix => reduce(Method::Matrix),
        MethodChoice::Involution => reduce(Method::Involution),
        MethodChoice::Both => {
            let by_matrix = reduce(Method::Matrix)?;
            let by_involution = reduce(Method::Involution)?;
            if !equivalent(&by_matrix, &by_involution, opts.tol) {
                return Err(Failure {
                    code: EXIT_DISAGREEMENT,
                    message: format!(
                        "reduction methods disagree beyond tolerance {}: matrix {} vs involution {}",
                        opts.tol,
                        format_tuple(&by_matrix),
                        format_tuple(&by_involution)
                    ),
                });
            }
            Ok(by_matrix)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["quatlin"];
        full.extend_from_slice(args);
        let code = run(full, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn reduce_text() {
        let (code, out, _) = run_args(&["reduce", "i*q*j"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "{ (0,0,0,0); (0,0,0,0); (0,1,0,0); (0,0,0,0) }\n");
    }

    #[test]
    fn reduce_json_both_methods() {
        let (code, out, _) = run_args(&["reduce", "q*i", "--json", "--method", "both"], "");
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"A\":[0,0,0,0],\"B\":[1,0,0,0],\"C\":[0,0,0,0],\"D\":[0,0,0,0]}\n"
        );
    }

    #[test]
    fn eval_reads_stdin() {
        let (code, out, _) = run_args(&["eval", "-", "--at", "1+2i"], "f = q*i;\nf(f(q))");
        assert_eq!(code, 0);
        assert_eq!(out, "(-1,-2,0,0)\n");
    }

    #[test]
    fn leading_minus_expression() {
        let (code, out, _) = run_args(&["eval", "-q*j", "--at", "(0,0,0,1)"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "(0,1,0,0)\n");
    }

    #[test]
    fn equiv_verdicts() {
        let (code, out, _) = run_args(&["equiv", "q*i*i", "-q"], "");
        assert_eq!((code, out.as_str()), (0, "equivalent\n"));
        let (code, out, _) = run_args(&["equiv", "q*i", "i*q"], "");
        assert_eq!((code, out.as_str()), (1, "not equivalent\n"));
        let (code, out, _) = run_args(&["equiv", "q*i", "i*q", "--json"], "");
        assert_eq!((code, out.as_str()), (1, "{\"equivalent\":false}\n"));
    }

    #[test]
    fn usage_and_parse_errors_exit_2() {
        let (code, _, err) = run_args(&["reduce", "q*q"], "");
        assert_eq!(code, 2);
        assert!(err.starts_with("error: 1:3: nonlinear term"), "{err}");
        assert_eq!(run_args(&["eval", "q"], "").0, 2);
        assert_eq!(run_args(&["equiv", "q"], "").0, 2);
        assert_eq!(run_args(&["eval", "q", "--at", "q"], "").0, 2);
        assert_eq!(run_args(&["frobnicate"], "").0, 2);
        assert_eq!(run_args(&["reduce", "q", "--tol", "-1"], "").0, 2);
        assert_eq!(run_args(&["equiv", "-", "-"], "q").0, 2);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_args(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("reduce"));
    }
}
