use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use qsdesign::exactmath::{gcd_bound_multiplier, poly_xgcd};
use qsdesign::report::{case_list, emit_report, parse_poly, run_all, run_one, Format, ReplayConfig};
use qsdesign::sieve::{param_search, ALL_Y};
use qsdesign::Result;

#[derive(Parser)]
#[command(name = "qsd", version, about = "Exact elimination engine for quasi-symmetric designs with exceptional socle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every case id.
    Catalog,
    /// Run one case.
    Run {
        #[arg(long = "case")]
        case: String,
        #[arg(long, default_value_t = 100_000)]
        qmax: u64,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Run every case and the dedicated analyses.
    RunAll {
        #[arg(long, default_value_t = 100_000)]
        qmax: u64,
        #[arg(long, default_value = "jsonl")]
        format: Format,
    },
    /// Bare parameter search on v points.
    Params {
        #[arg(long)]
        v: BigInt,
        #[arg(long)]
        y: Option<u32>,
        #[arg(long)]
        rdiv: Option<BigInt>,
    },
    /// Bezout certificate and gcd multiplier for two polynomials in q.
    Xgcd {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
}

fn run(cmd: Command, out: &mut impl Write) -> Result<ExitCode> {
    let io = |e: std::io::Error| qsdesign::Error::Domain(e.to_string());
    match cmd {
        Command::Catalog => {
            for [id, ambient, sub, cond] in case_list()? {
                writeln!(out, "{id:32} {ambient:8} {sub:28} {cond}").map_err(io)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { case, qmax, format } => {
            let cfg = ReplayConfig { q_max: qmax, ..ReplayConfig::default() };
            let rep = run_one(&case, &cfg)?;
            out.write_all(emit_report(&rep, format).as_bytes()).map_err(io)?;
            Ok(if rep.open() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::RunAll { qmax, format } => {
            let cfg = ReplayConfig { q_max: qmax, ..ReplayConfig::default() };
            let rep = run_all(&cfg)?;
            out.write_all(emit_report(&rep, format).as_bytes()).map_err(io)?;
            if format == Format::Jsonl {
                eprintln!("{}", rep.summary());
            }
            Ok(if rep.open() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Params { v, y, rdiv } => {
            if v < BigInt::from(5) {
                return Err(qsdesign::Error::Domain("params needs v >= 5".into()));
            }
            let ys: Vec<u32> = match y {
                Some(y) if (2..=10).contains(&y) => vec![y],
                Some(y) => return Err(qsdesign::Error::Domain(format!("y = {y} is outside [2, 10]"))),
                None => ALL_Y.to_vec(),
            };
            let found = param_search(&v, &ys, rdiv.as_ref())
                .ok_or_else(|| qsdesign::Error::Domain("could not factor gcd(v-1, rdiv)".into()))?;
            for p in found {
                writeln!(out, "{p}").map_err(io)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Xgcd { f, g } => {
            let (fp, gp) = (parse_poly(&f)?, parse_poly(&g)?);
            let cert = poly_xgcd(&fp.to_rational(), &gp.to_rational())?;
            let bound = gcd_bound_multiplier(&fp, &gp)?;
            writeln!(out, "h = {}", cert.h).map_err(io)?;
            writeln!(out, "s = {}", cert.s).map_err(io)?;
            writeln!(out, "t = {}", cert.t).map_err(io)?;
            writeln!(out, "c = {}", cert.c).map_err(io)?;
            writeln!(out, "gcd(F(q), G(q)) | {} * ({})", bound.c, bound.h_int).map_err(io)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };
    let _ = out.flush();
    code
}
