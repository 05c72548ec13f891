//! Command-line surface: regenerates the polynomial tables, evaluates the
//! certified quantities at chosen precision, runs the verification suites,
//! and scans for irreducibility witnesses. Machine output goes to standard
//! out (or `--out`), diagnostics to standard error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::Serialize;

use zetaquot_core::modular::{witness_scan, CertificateClaim, CertificateRecord};
use zetaquot_core::numerics::{
    l_sequence, lstar_eval_int, zeta_quotient, zeta_ratio, NumericRecord,
};
use zetaquot_core::poly::{build_p, build_q, PolyKind, PolyRecord};
use zetaquot_core::verify::{exact_suite, modular_suite, numeric_suite, SuiteReport};
use zetaquot_core::{Error, ErrFloat};

#[derive(Parser)]
#[command(
    name = "zetaquot",
    version,
    about = "Exact polynomial families, certified L-series values, and zeta quotient checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Working precision in bits for certified evaluations
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u32).range(64..=8192))]
    prec: u32,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    P,
    Q,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Exact,
    Numeric,
    Modular,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polynomial family p_n or q_n
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest index to print (p starts at 1, q at 3)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=200))]
        n_max: Option<u64>,
    },
    /// Compare the closed quotient formula with the direct zeta oracle
    Quot {
        /// Even index n >= 2; reports zeta(n+1)/zeta(n) both ways
        #[arg(value_parser = clap::value_parser!(u64).range(2..=200))]
        n: u64,
    },
    /// Evaluate the linear functional on p_n with a certified bound
    Lstar {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=200))]
        n: u64,
    },
    /// Print certified values l_1..l_n
    Lvalue {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=200))]
        n_max: u64,
    },
    /// Run a verification suite and exit nonzero on any failure
    Verify {
        #[arg(value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
        /// Index ceiling for the exact and numeric suites
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..=200))]
        n_max: u64,
        /// Prime ceiling for the modular suite
        #[arg(long, default_value_t = 31, value_parser = clap::value_parser!(u64).range(3..=1000))]
        p_max: u64,
    },
    /// Scan for a prime modulo which q_n is irreducible
    Witness {
        #[arg(value_parser = clap::value_parser!(u64).range(4..=200))]
        n: u64,
        /// Largest prime to try
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(2..=100000))]
        p_max: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, ok)) => {
            if let Err(e) = emit(&cli.out, &output) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain { .. } => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

fn run(cli: &Cli) -> zetaquot_core::Result<(String, bool)> {
    match cli.command {
        Command::Table { kind, n_max } => cmd_table(kind, n_max, cli.format).map(|s| (s, true)),
        Command::Quot { n } => cmd_quot(n as usize, cli.prec, cli.format).map(|s| (s, true)),
        Command::Lstar { n } => cmd_lstar(n as usize, cli.prec, cli.format).map(|s| (s, true)),
        Command::Lvalue { n_max } => {
            cmd_lvalue(n_max as usize, cli.prec, cli.format).map(|s| (s, true))
        }
        Command::Verify {
            suite,
            n_max,
            p_max,
        } => cmd_verify(suite, n_max as usize, p_max, cli.prec, cli.format),
        Command::Witness { n, p_max } => cmd_witness(n as usize, p_max, cli.format),
    }
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn err_bound_f64(ef: &ErrFloat) -> f64 {
    num_traits::ToPrimitive::to_f64(&ef.abs_err.to_rational()).unwrap_or(f64::NAN)
}

fn cmd_table(kind: TableKind, n_max: Option<u64>, format: Format) -> zetaquot_core::Result<String> {
    let (letter, start, default_max) = match kind {
        TableKind::P => ('p', 1usize, 8u64),
        TableKind::Q => ('q', 3usize, 10u64),
    };
    let n_max = n_max.unwrap_or(default_max) as usize;
    if n_max < start {
        return Err(Error::Domain {
            func: "table".into(),
            reason: format!("{letter}-table needs n_max >= {start}"),
        });
    }
    let mut records = Vec::new();
    let mut polys = Vec::new();
    for n in start..=n_max {
        let (poly, poly_kind) = match kind {
            TableKind::P => (build_p(n)?, PolyKind::P),
            TableKind::Q => (build_q(n)?, PolyKind::Q),
        };
        records.push(PolyRecord::from_int(poly_kind, n as u64, &poly));
        polys.push(poly);
    }
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (n, poly) in (start..).zip(&polys) {
                out.push_str(&format!("{letter}_{n}(x) = {poly}\n"));
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string(&records).expect("table serialization");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("kind,n,coeffs\n");
            for r in &records {
                out.push_str(&format!(
                    "{},{},{}\n",
                    match kind {
                        TableKind::P => "p",
                        TableKind::Q => "q",
                    },
                    r.n,
                    csv_field(&r.coeffs.join(";"))
                ));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct QuotReport {
    n: u64,
    formula: NumericRecord,
    oracle: NumericRecord,
    difference: String,
    overlap: bool,
}

fn cmd_quot(n: usize, prec: u32, format: Format) -> zetaquot_core::Result<String> {
    let formula = zeta_quotient(n, prec)?;
    let oracle = zeta_ratio(n, prec)?;
    let digits = formula.record_digits();
    let diff = (formula.value.to_rational() - oracle.value.to_rational()).abs();
    let diff_f64 = num_traits::ToPrimitive::to_f64(&diff).unwrap_or(f64::NAN);
    let overlap = formula.overlaps(&oracle);
    let report = QuotReport {
        n: n as u64,
        formula: formula.to_record(digits),
        oracle: oracle.to_record(digits),
        difference: format!("{diff_f64:.3e}"),
        overlap,
    };
    Ok(match format {
        Format::Text => format!(
            "zeta({}) / zeta({}) at {} bits\n  formula: {} (+/- {:.3e})\n  oracle:  {} (+/- {:.3e})\n  difference: {:.3e}\n  enclosures overlap: {}\n",
            n + 1,
            n,
            prec,
            report.formula.value,
            err_bound_f64(&formula),
            report.oracle.value,
            err_bound_f64(&oracle),
            diff_f64,
            if overlap { "yes" } else { "no" },
        ),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&report).expect("quot serialization")
        ),
        Format::Csv => format!(
            "n,formula,formula_err_le,oracle,oracle_err_le,difference,overlap\n{},{},{},{},{},{},{}\n",
            report.n,
            report.formula.value,
            report.formula.abs_err_le,
            report.oracle.value,
            report.oracle.abs_err_le,
            report.difference,
            report.overlap,
        ),
    })
}

#[derive(Serialize)]
struct LstarReport {
    n: u64,
    value: String,
    abs_err_le: String,
    prec_bits: u32,
}

fn cmd_lstar(n: usize, prec: u32, format: Format) -> zetaquot_core::Result<String> {
    let ef = lstar_eval_int(&build_p(n)?, prec)?;
    let rec = ef.to_record(ef.record_digits());
    let report = LstarReport {
        n: n as u64,
        value: rec.value,
        abs_err_le: rec.abs_err_le,
        prec_bits: rec.prec_bits,
    };
    Ok(match format {
        Format::Text => format!(
            "lstar(p_{n}) = {} (+/- {:.3e}) at {prec} bits\n",
            report.value,
            err_bound_f64(&ef),
        ),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&report).expect("lstar serialization")
        ),
        Format::Csv => format!(
            "n,value,abs_err_le,prec_bits\n{},{},{},{}\n",
            report.n, report.value, report.abs_err_le, report.prec_bits
        ),
    })
}

#[derive(Serialize)]
struct LValueRow {
    n: u64,
    value: String,
    abs_err_le: String,
    prec_bits: u32,
}

fn cmd_lvalue(n_max: usize, prec: u32, format: Format) -> zetaquot_core::Result<String> {
    let seq = l_sequence(n_max, prec)?;
    let rows: Vec<LValueRow> = seq
        .iter()
        .enumerate()
        .map(|(i, ef)| {
            let rec = ef.to_record(ef.record_digits());
            LValueRow {
                n: i as u64 + 1,
                value: rec.value,
                abs_err_le: rec.abs_err_le,
                prec_bits: rec.prec_bits,
            }
        })
        .collect();
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (row, ef) in rows.iter().zip(&seq) {
                out.push_str(&format!(
                    "l_{} = {} (+/- {:.3e})\n",
                    row.n,
                    row.value,
                    err_bound_f64(ef),
                ));
            }
            out
        }
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&rows).expect("lvalue serialization")
        ),
        Format::Csv => {
            let mut out = String::from("n,value,abs_err_le,prec_bits\n");
            for row in &rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    row.n, row.value, row.abs_err_le, row.prec_bits
                ));
            }
            out
        }
    })
}

fn cmd_verify(
    suite: SuiteName,
    n_max: usize,
    p_max: u64,
    prec: u32,
    format: Format,
) -> zetaquot_core::Result<(String, bool)> {
    let mut reports: Vec<SuiteReport> = Vec::new();
    if matches!(suite, SuiteName::Exact | SuiteName::All) {
        reports.push(exact_suite(n_max)?);
    }
    if matches!(suite, SuiteName::Numeric | SuiteName::All) {
        reports.push(numeric_suite(n_max.min(20), prec)?);
    }
    if matches!(suite, SuiteName::Modular | SuiteName::All) {
        reports.push(modular_suite(p_max)?);
    }
    let all_pass = reports.iter().all(|r| r.pass);
    let output = match format {
        Format::Text => {
            let mut out = String::new();
            for report in &reports {
                for check in &report.checks {
                    out.push_str(&format!(
                        "[{}] {}: {} ({})\n",
                        report.suite,
                        check.name,
                        if check.pass { "PASS" } else { "FAIL" },
                        check.detail,
                    ));
                }
                out.push_str(&format!(
                    "suite {}: {}\n",
                    report.suite,
                    if report.pass { "PASS" } else { "FAIL" }
                ));
            }
            out.push_str(&format!(
                "overall: {}\n",
                if all_pass { "PASS" } else { "FAIL" }
            ));
            out
        }
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&reports).expect("verify serialization")
        ),
        Format::Csv => {
            let mut out = String::from("suite,check,pass,detail\n");
            for report in &reports {
                for check in &report.checks {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        report.suite,
                        csv_field(&check.name),
                        check.pass,
                        csv_field(&check.detail),
                    ));
                }
            }
            out
        }
    };
    Ok((output, all_pass))
}

fn cmd_witness(n: usize, p_max: u64, format: Format) -> zetaquot_core::Result<(String, bool)> {
    let witness = witness_scan(n, p_max)?;
    let cert = CertificateRecord {
        n: n as u64,
        claim: CertificateClaim::ModpIrreducible,
        prime: witness.unwrap_or(0),
        pass: witness.is_some(),
    };
    let output = match format {
        Format::Text => match witness {
            Some(p) => format!(
                "q_{n} is irreducible modulo {p}; the witness certifies irreducibility over the integers\n"
            ),
            None => format!(
                "no witness prime <= {p_max} for q_{n}; reductions may factor everywhere, result unknown\n"
            ),
        },
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&cert).expect("witness serialization")
        ),
        Format::Csv => format!(
            "n,claim,prime,pass\n{},modp-irreducible,{},{}\n",
            cert.n, cert.prime, cert.pass
        ),
    };
    Ok((output, cert.pass))
}
