//! Command-line front end: coefficient tables, point evaluation, Gram
//! matrices, LaTeX rendering, and the full verification runner.
//!
//! Exit codes: 0 on success, 1 when any asserted verification entry fails,
//! 2 on usage errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use ortho4::exact::{is_integer, Rational};
use ortho4::mpoly::MPolyKey;
use ortho4::numint::QuadratureConfig;
use ortho4::report::{self, GridSpec};
use ortho4::{mpoly, ortho, Polynomial};

#[derive(Parser)]
#[command(
    name = "ortho4",
    version,
    about = "Exact tables and verification for a two-parameter family of \
             orthogonal polynomials attached to a fourth-order operator"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CoeffFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the coefficient table of one member, ascending degree.
    Coeffs {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        ell: u32,
        /// Rational parameter, "p" or "p/q"; must avoid {-1, -2, ...}.
        #[arg(long, default_value = "3", value_parser = parse_mu)]
        mu: Rational,
        #[arg(long, value_enum, default_value_t = CoeffFormat::Json)]
        format: CoeffFormat,
    },
    /// Evaluate one member at a point.
    Eval {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value = "3", value_parser = parse_mu)]
        mu: Rational,
        /// Rational point "p/q" (exact mode) or decimal (float mode).
        #[arg(long)]
        x: String,
        /// Evaluate in floating point, printing 17 significant digits.
        #[arg(long)]
        float: bool,
    },
    /// Print the Gram matrix of members 0..=jmax as CSV of rationals, in
    /// units of Gamma(mu - 2 ell + 1).
    Gram {
        #[arg(long)]
        jmax: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value = "3", value_parser = parse_mu)]
        mu: Rational,
    },
    /// Render one member as a LaTeX polynomial.
    Latex {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value = "3", value_parser = parse_mu)]
        mu: Rational,
    },
    /// Run verification suites and print the JSON report.
    Verify {
        /// Comma-separated suite names; defaults to all of
        /// recurrences,eigen,ortho,genfun,operators,integral,hankel,laguerre.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        #[arg(long, default_value_t = 8)]
        jmax: u32,
        #[arg(long, default_value_t = 3)]
        ellmax: u32,
        /// Comma-separated rational parameters.
        #[arg(long, value_delimiter = ',', value_parser = parse_mu)]
        mus: Vec<Rational>,
        /// Panels per direction for the quadrature checks.
        #[arg(long)]
        quad_panels: Option<usize>,
        /// Gauss-Legendre nodes per panel.
        #[arg(long)]
        quad_order: Option<usize>,
        /// Record per-entry wall-clock times; off by default so identical
        /// invocations produce byte-identical output.
        #[arg(long)]
        timings: bool,
    },
}

fn parse_mu(s: &str) -> Result<Rational, String> {
    let mu = Rational::from_str(s).map_err(|e| format!("invalid rational '{s}': {e}"))?;
    if is_integer(&mu) && mu.numer().is_negative() {
        return Err(format!("mu = {mu} is excluded (negative integer)"));
    }
    Ok(mu)
}

fn latex_rational(r: &Rational) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

fn latex_polynomial(p: &Polynomial) -> String {
    use num_traits::{One, Signed as _, Zero};
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for n in (0..p.coeffs().len()).rev() {
        let c = p.coeff(n);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        let xpart = match n {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{{{n}}}"),
        };
        if xpart.is_empty() {
            out.push_str(&latex_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&xpart);
        } else {
            out.push_str(&latex_rational(&mag));
            out.push(' ');
            out.push_str(&xpart);
        }
    }
    out
}

#[derive(serde::Serialize)]
struct CoeffsJson {
    j: u32,
    ell: u32,
    mu: String,
    coeffs: Vec<[String; 2]>,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn member(j: u32, ell: u32, mu: &Rational) -> Result<Polynomial, ExitCode> {
    let key = MPolyKey::new(j, ell, mu.clone()).map_err(|e| usage_error(&e.to_string()))?;
    mpoly::m_polynomial(&key).map_err(|e| usage_error(&e.to_string()))
}

fn run() -> Result<ExitCode, ExitCode> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Coeffs { j, ell, mu, format } => {
            let p = member(j, ell, &mu)?;
            match format {
                CoeffFormat::Json => {
                    let payload = CoeffsJson {
                        j,
                        ell,
                        mu: mu.to_string(),
                        coeffs: (0..=p.degree().unwrap_or(0))
                            .map(|n| {
                                let c = p.coeff(n);
                                [c.numer().to_string(), c.denom().to_string()]
                            })
                            .collect(),
                    };
                    println!("{}", serde_json::to_string(&payload).expect("serializable"));
                }
                CoeffFormat::Csv => {
                    for n in 0..=p.degree().unwrap_or(0) {
                        let c = p.coeff(n);
                        println!("{},{}", c.numer(), c.denom());
                    }
                }
                CoeffFormat::Latex => println!("{}", latex_polynomial(&p)),
            }
        }
        Cmd::Eval { j, ell, mu, x, float } => {
            let p = member(j, ell, &mu)?;
            if float {
                let x: f64 = x
                    .parse()
                    .map_err(|_| usage_error(&format!("invalid float '{x}'")))?;
                println!("{:.16e}", p.eval_float(x));
            } else {
                let x = Rational::from_str(&x)
                    .map_err(|_| usage_error(&format!("invalid rational '{x}'")))?;
                println!("{}", p.eval_exact(&x));
            }
        }
        Cmd::Gram { jmax, ell, mu } => {
            let gram =
                ortho::gram_matrix(jmax, &mu, ell).map_err(|e| usage_error(&e.to_string()))?;
            print!("{}", ortho::gram_to_csv(&gram));
        }
        Cmd::Latex { j, ell, mu } => {
            let p = member(j, ell, &mu)?;
            println!("{}", latex_polynomial(&p));
        }
        Cmd::Verify {
            suites,
            jmax,
            ellmax,
            mus,
            quad_panels,
            quad_order,
            timings,
        } => {
            let mut grid = GridSpec {
                jmax,
                ellmax,
                record_timings: timings,
                ..GridSpec::default()
            };
            if !suites.is_empty() {
                grid.suites = suites;
            }
            if !mus.is_empty() {
                grid.mus = mus;
            }
            let mut quad = QuadratureConfig::default();
            if let Some(p) = quad_panels {
                quad.panel_count = p;
            }
            if let Some(o) = quad_order {
                quad.nodes_per_panel = o;
            }
            grid.quad = quad;
            let report = report::run_suite(&grid).map_err(|e| usage_error(&e.to_string()))?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
            if report.has_failures() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(code) => code,
    }
}
