use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::process::ExitCode;

use umbral_ops::catalog::{run_all, Status};
use umbral_ops::gamma::factorial;
use umbral_ops::series::{named_series, DEFAULT_ORDER};
use umbral_ops::special as sf;
use umbral_ops::umbral::CoefficientTransform;
use umbral_ops::{report, Error};

#[derive(Parser)]
#[command(
    name = "umbral",
    about = "Coefficient transforms, special-function evaluators and a verified identity catalog"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Borel,
    BorelLeroy,
    Bborel,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity catalog against its numerical oracles.
    Verify {
        /// Identity id, or prefix pattern with a trailing `*`.
        #[arg(long)]
        filter: Option<String>,
        /// Replace every entry's shipped tolerance.
        #[arg(long)]
        tol_override: Option<f64>,
        /// Points evaluated per identity (fixed points plus sampled ones).
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Evaluate a named special function at numeric arguments.
    Eval {
        function: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<f64>,
    },
    /// Print the coefficients of a named truncated power series.
    Series {
        name: String,
        #[arg(long, default_value_t = DEFAULT_ORDER, env = "UMBRAL_ORDER")]
        order: usize,
    },
    /// Apply a coefficient transform to a named series.
    Transform {
        name: String,
        #[arg(long, value_enum)]
        op: TransformOp,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        gamma: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value_t = DEFAULT_ORDER, env = "UMBRAL_ORDER")]
        order: usize,
    },
    /// Emit a CSV table of (x, f(x)) for plotting.
    Table {
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, default_value_t = 11)]
        points: usize,
        /// Fixed y parameter for two-parameter table functions.
        #[arg(long, default_value_t = 0.25, allow_negative_numbers = true)]
        y: f64,
        /// Fixed t parameter for two-parameter table functions.
        #[arg(long, default_value_t = 0.4, allow_negative_numbers = true)]
        t: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::UnknownFunction(name)) => {
            eprintln!("error: unknown function `{name}`");
            ExitCode::from(2)
        }
        Err(Error::UnknownIdentity(name)) => {
            eprintln!("error: unknown identity `{name}`");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> umbral_ops::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            filter,
            tol_override,
            points,
            seed,
            format,
            output,
        } => {
            let reports = run_all(filter.as_deref(), points, seed, tol_override);
            let rendered = match format {
                Format::Json => report::to_json(&reports)?,
                Format::Csv => report::to_csv(&reports),
                Format::Text => report::to_text(&reports),
            };
            match output {
                Some(path) => std::fs::write(&path, rendered).map_err(|e| {
                    Error::Precision(format!("cannot write {}: {e}", path.display()))
                })?,
                None => {
                    let mut out = std::io::stdout().lock();
                    out.write_all(rendered.as_bytes())
                        .map_err(|e| Error::Precision(format!("cannot write report: {e}")))?;
                }
            }
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Eval { function, args } => {
            let value = eval_function(&function, &args)?;
            println!("{value:.14e}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { name, order } => {
            let s = named_series(&name, order)?;
            for (k, c) in s.coeffs().iter().enumerate() {
                println!("{k} {c:.14e}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform {
            name,
            op,
            alpha,
            gamma,
            beta,
            delta,
            inverse,
            order,
        } => {
            let input = named_series(&name, order)?;
            let mut t = match op {
                TransformOp::Borel | TransformOp::BorelLeroy => {
                    CoefficientTransform::borel(alpha, gamma)
                }
                TransformOp::Bborel => CoefficientTransform::bborel(alpha, gamma, beta, delta),
            };
            if inverse {
                t = t.inverse();
            }
            let (out, flag) = umbral_ops::umbral::apply_transform(&input, &t)?;
            println!("# r  before  after");
            for k in 0..=out.order() {
                println!("{k} {:.14e} {:.14e}", input.coeff(k), out.coeff(k));
            }
            let status = serde_json::to_string(&flag.status)
                .map_err(|e| Error::Precision(e.to_string()))?
                .trim_matches('"')
                .to_string();
            match flag.witness {
                Some(w) => println!("flag: {status} (growth witness {w:.6e})"),
                None => println!("flag: {status}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            function,
            from,
            to,
            points,
            y,
            t,
        } => {
            if points < 2 || !(to > from) {
                return Err(Error::Domain(
                    "table requires --points >= 2 and --to > --from".into(),
                ));
            }
            let f = table_function(&function, y, t)?;
            println!("x,value");
            for k in 0..points {
                let x = from + (to - from) * k as f64 / (points - 1) as f64;
                println!("{x},{}", f(x)?);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn want(args: &[f64], n: usize, name: &str) -> umbral_ops::Result<()> {
    if args.len() != n {
        return Err(Error::Domain(format!(
            "{name} expects {n} numeric argument(s), got {}",
            args.len()
        )));
    }
    Ok(())
}

fn as_u32(v: f64, what: &str) -> umbral_ops::Result<u32> {
    if v < 0.0 || v.fract() != 0.0 || v > u32::MAX as f64 {
        return Err(Error::Domain(format!(
            "{what} must be a non-negative integer (got {v})"
        )));
    }
    Ok(v as u32)
}

fn eval_function(name: &str, a: &[f64]) -> umbral_ops::Result<f64> {
    match name {
        "bessel_j" => {
            want(a, 2, name)?;
            Ok(sf::bessel_j(as_u32(a[0], "n")?, a[1]))
        }
        "bessel_j0" => {
            want(a, 1, name)?;
            Ok(sf::bessel_j0_any(a[0]))
        }
        "tricomi_c" => {
            want(a, 2, name)?;
            Ok(sf::tricomi_c(as_u32(a[0], "s")?, a[1]))
        }
        "tricomi_c_nu" => {
            want(a, 2, name)?;
            Ok(sf::tricomi_c_nu(a[0], a[1]))
        }
        "truncated_exp" => {
            want(a, 2, name)?;
            if a[0].fract() != 0.0 {
                return Err(Error::Domain("truncated_exp order must be an integer".into()));
            }
            Ok(sf::truncated_exp(a[0] as i64, a[1]))
        }
        "truncated_exp_k" => {
            want(a, 3, name)?;
            Ok(sf::truncated_exp_k(as_u32(a[0], "k")?, as_u32(a[1], "m")?, a[2]))
        }
        "hermite2" => {
            want(a, 3, name)?;
            Ok(sf::hermite2(as_u32(a[0], "n")?, a[1], a[2]))
        }
        "hermite_m" => {
            want(a, 4, name)?;
            Ok(sf::hermite_m(as_u32(a[0], "m")?, as_u32(a[1], "n")?, a[2], a[3]))
        }
        "hermite3" => {
            want(a, 4, name)?;
            Ok(sf::hermite3(as_u32(a[0], "n")?, a[1], a[2], a[3]))
        }
        "laguerre2" => {
            want(a, 3, name)?;
            Ok(sf::laguerre2(as_u32(a[0], "n")?, a[1], a[2]))
        }
        "bessel_truncated_poly" => {
            want(a, 3, name)?;
            Ok(sf::bessel_truncated_poly(as_u32(a[0], "n")?, a[1], a[2]))
        }
        "bessel_wright" => {
            want(a, 3, name)?;
            Ok(sf::bessel_wright(a[0], a[1], a[2]))
        }
        "mittag_leffler" => {
            want(a, 3, name)?;
            sf::mittag_leffler(a[0], a[1], a[2])
        }
        "heat_poly" => {
            want(a, 4, name)?;
            sf::heat_poly(as_u32(a[0], "n")?, a[1], a[2], a[3])
        }
        "hermite_theta" => {
            want(a, 2, name)?;
            Ok(sf::hermite_theta(a[0], as_u32(a[1], "r")? as usize))
        }
        "associated_hermite" => {
            want(a, 4, name)?;
            Ok(sf::associated_hermite(as_u32(a[0], "n")?, a[1], a[2], as_u32(a[3], "p")?))
        }
        "generalized_assoc_hermite" => {
            want(a, 5, name)?;
            sf::generalized_assoc_hermite(as_u32(a[0], "n")?, a[1], a[2], a[3], a[4])
        }
        "sheffer_e" => {
            want(a, 3, name)?;
            sf::sheffer_e(a[0], a[1], a[2])
        }
        "hyp1f2" => {
            want(a, 4, name)?;
            sf::hyp1f2(a[0], a[1], a[2], a[3])
        }
        "quartic_gaussian_integral" => {
            want(a, 2, name)?;
            sf::quartic_gaussian_integral(a[0], a[1])
        }
        _ => Err(Error::UnknownFunction(name.to_string())),
    }
}

type TableFn = Box<dyn Fn(f64) -> umbral_ops::Result<f64>>;

fn table_function(name: &str, y: f64, t: f64) -> umbral_ops::Result<TableFn> {
    match name {
        "bessel_j0" => Ok(Box::new(|x| Ok(sf::bessel_j0_any(x)))),
        "tricomi_c0" => Ok(Box::new(|x| Ok(sf::tricomi_c(0, x)))),
        "gaussian_quarter" => Ok(Box::new(|x| Ok((-(x / 2.0) * (x / 2.0)).exp()))),
        "doetsch_lhs_minus_rhs" => Ok(Box::new(move |x| {
            if t.abs() >= 1.0 / (4.0 * y.abs().max(1e-300)) {
                return Err(Error::Domain(format!(
                    "doetsch domain requires |t| < 1/(4|y|) (y={y}, t={t})"
                )));
            }
            let mut lhs = 0.0;
            for n in 0..60u32 {
                lhs += t.powi(n as i32) / factorial(n as usize) * sf::hermite2(2 * n, x, y);
            }
            let d = 1.0 - 4.0 * y * t;
            let rhs = d.powf(-0.5) * (x * x * t / d).exp();
            Ok(lhs - rhs)
        })),
        _ => Err(Error::UnknownFunction(name.to_string())),
    }
}
