//! `jacobi` - evaluation commands and verification suites for the
//! jacobi-states library.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed,
//! 2 configuration or usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64 as C64;

use jacobi_cli::complexarg::{format_complex, parse_complex, sig_digits};
use jacobi_cli::config::SuiteConfig;
use jacobi_cli::report::Report;
use jacobi_cli::suites::{self, SUITES};

use jacobi_states::algebra::BargmannIndex;
use jacobi_states::group::{multiplier, JacobiElement, SU11Element};
use jacobi_states::kernel::kernel as kernel_closed;
use jacobi_states::measure::weight;
use jacobi_states::special::{basis_fn, pn};
use jacobi_states::states::{coherent_vector, overlap};
use jacobi_states::PhasePoint;

#[derive(Parser)]
#[command(
    name = "jacobi",
    about = "Coherent-state machinery of the Jacobi group: evaluation and verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Verify {
        /// Suite to run: algebra, special, kernel, measure, group, states, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Configuration file (key = value lines; all fields optional).
        #[arg(long)]
        config: Option<PathBuf>,
        /// Report path (overrides the config's `out`).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a single quantity and print it with 15+ significant digits.
    ///
    /// Complex arguments use "re,im" or "a+bi" (e.g. 0.5,-0.25 or 0.5-0.25i).
    /// Signatures:
    ///   eval pn <n> <z> <w>
    ///   eval basis_fn <n> <s> <z> <w>          (uses --k)
    ///   eval kernel <z> <w> <z2> <w2>          (uses --k)
    ///   eval weight <z> <w>                    (uses --k)
    ///   eval multiplier <a> <b> <alpha> <t> <z> <w>   (uses --k)
    ///   eval overlap <z1> <w1> <z2> <w2>       (uses --k, --n-fock, --m-ladder)
    Eval {
        /// Quantity: pn, basis_fn, kernel, weight, multiplier, overlap.
        quantity: String,
        /// Positional arguments of the quantity.
        args: Vec<String>,
        /// Bargmann index.
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        /// Fock truncation for overlap.
        #[arg(long, default_value_t = 60)]
        n_fock: usize,
        /// Ladder truncation for overlap.
        #[arg(long, default_value_t = 60)]
        m_ladder: usize,
        /// Print a single JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, config, out } => run_verify(&suite, config, out),
        Command::Eval {
            quantity,
            args,
            k,
            n_fock,
            m_ladder,
            json,
        } => run_eval(&quantity, &args, k, n_fock, m_ladder, json),
    }
}

fn run_verify(suite: &str, config: Option<PathBuf>, out: Option<PathBuf>) -> ExitCode {
    let cfg = match config {
        Some(path) => match SuiteConfig::load(&path) {
            Ok(cfg) => cfg,
            Err(e) => {
                eprintln!("config error: {e}");
                return ExitCode::from(2);
            }
        },
        None => SuiteConfig::default(),
    };
    if !SUITES.contains(&suite) {
        eprintln!(
            "config error: unknown suite `{suite}` (expected one of {})",
            SUITES.join(", ")
        );
        return ExitCode::from(2);
    }
    let checks = match suites::run_suite(&cfg, suite) {
        Ok(checks) => checks,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = Report::new(suite, &cfg, checks);
    print!("{}", report.human_summary());
    let out_path = out.unwrap_or_else(|| PathBuf::from(&cfg.out));
    if let Err(e) = std::fs::write(&out_path, report.to_json()) {
        eprintln!("config error: cannot write report to {}: {e}", out_path.display());
        return ExitCode::from(2);
    }
    println!("report written to {}", out_path.display());
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

struct EvalArgs<'a> {
    args: &'a [String],
    cursor: usize,
}

impl<'a> EvalArgs<'a> {
    fn new(args: &'a [String]) -> Self {
        Self { args, cursor: 0 }
    }

    fn complex(&mut self, name: &str) -> Result<C64, String> {
        let raw = self
            .args
            .get(self.cursor)
            .ok_or_else(|| format!("missing argument <{name}>"))?;
        self.cursor += 1;
        parse_complex(raw).map_err(|e| format!("argument <{name}>: {e}"))
    }

    fn real(&mut self, name: &str) -> Result<f64, String> {
        let v = self.complex(name)?;
        if v.im != 0.0 {
            return Err(format!("argument <{name}> must be real"));
        }
        Ok(v.re)
    }

    fn integer(&mut self, name: &str) -> Result<u32, String> {
        let raw = self
            .args
            .get(self.cursor)
            .ok_or_else(|| format!("missing argument <{name}>"))?;
        self.cursor += 1;
        let v = raw
            .parse::<u32>()
            .map_err(|_| format!("argument <{name}>: `{raw}` is not a nonnegative integer"))?;
        if v > 10_000 {
            return Err(format!("argument <{name}>: {v} is beyond the supported range (<= 10000)"));
        }
        Ok(v)
    }

    fn finish(&self) -> Result<(), String> {
        if self.cursor == self.args.len() {
            Ok(())
        } else {
            Err(format!("unexpected extra arguments: {:?}", &self.args[self.cursor..]))
        }
    }
}

fn eval_value(
    quantity: &str,
    args: &[String],
    k: f64,
    n_fock: usize,
    m_ladder: usize,
) -> Result<C64, String> {
    let bk = BargmannIndex::new(k).map_err(|e| e.to_string())?;
    let mut a = EvalArgs::new(args);
    let value = match quantity {
        "pn" => {
            let n = a.integer("n")?;
            let z = a.complex("z")?;
            let w = a.complex("w")?;
            pn(n, z, w)
        }
        "basis_fn" => {
            let n = a.integer("n")?;
            let s = a.integer("s")?;
            let z = a.complex("z")?;
            let w = a.complex("w")?;
            let x = PhasePoint::new(z, w).map_err(|e| e.to_string())?;
            basis_fn(n, bk, s, x).map_err(|e| e.to_string())?
        }
        "kernel" => {
            let z = a.complex("z")?;
            let w = a.complex("w")?;
            let z2 = a.complex("z2")?;
            let w2 = a.complex("w2")?;
            let x = PhasePoint::new(z, w).map_err(|e| e.to_string())?;
            let x2 = PhasePoint::new(z2, w2).map_err(|e| e.to_string())?;
            kernel_closed(bk, &x, &x2)
        }
        "weight" => {
            let z = a.complex("z")?;
            let w = a.complex("w")?;
            let rho = weight(bk, z, w).map_err(|e| e.to_string())?;
            C64::new(rho, 0.0)
        }
        "multiplier" => {
            let ga = a.complex("a")?;
            let gb = a.complex("b")?;
            let alpha = a.complex("alpha")?;
            let t = a.real("t")?;
            let z = a.complex("z")?;
            let w = a.complex("w")?;
            let g = SU11Element::new(ga, gb).map_err(|e| e.to_string())?;
            let h = JacobiElement::new(g, alpha, t);
            let x = PhasePoint::new(z, w).map_err(|e| e.to_string())?;
            multiplier(bk, &h, &x)
        }
        "overlap" => {
            let z1 = a.complex("z1")?;
            let w1 = a.complex("w1")?;
            let z2 = a.complex("z2")?;
            let w2 = a.complex("w2")?;
            let v1 = coherent_vector(bk, z1, w1, n_fock, m_ladder).map_err(|e| e.to_string())?;
            let v2 = coherent_vector(bk, z2, w2, n_fock, m_ladder).map_err(|e| e.to_string())?;
            overlap(&v1, &v2).map_err(|e| e.to_string())?
        }
        other => {
            return Err(format!(
                "unknown quantity `{other}` (expected pn, basis_fn, kernel, weight, multiplier, overlap)"
            ))
        }
    };
    a.finish()?;
    Ok(value)
}

fn run_eval(
    quantity: &str,
    args: &[String],
    k: f64,
    n_fock: usize,
    m_ladder: usize,
    json: bool,
) -> ExitCode {
    match eval_value(quantity, args, k, n_fock, m_ladder) {
        Ok(value) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "quantity": quantity,
                        "k": k,
                        "args": args,
                        "value": { "re": value.re, "im": value.im },
                    })
                );
            } else if value.im == 0.0 {
                println!("{}", sig_digits(value.re));
            } else {
                println!("{}", format_complex(value));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
    }
}
