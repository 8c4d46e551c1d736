use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use unstable_ops::expr::{self, Context};
use unstable_ops::fgl::{Fgl, FglConfig};
use unstable_ops::hopfeval::{format_form, substitute_lambda, HopfEvaluator, HopfMonomial, LambdaLinear};
use unstable_ops::ivp::{pairing, IvpPoly};
use unstable_ops::opring::{
    check_congruences, congruence_table, lambda_to_sigma, sigma_to_lambda, CongruenceCert, LambdaSeq,
    SigmaCoeffs,
};
use unstable_ops::rational::to_canonical;
use unstable_ops::split::{check_congruences_plocal, PLocalSeq};
use unstable_ops::verify::verify_paper;
use unstable_ops::{BigRational, Error, Result};

/// Exact computations with additive unstable K-theory operations.
#[derive(Parser, Debug)]
#[command(name = "unstable-ops", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(clap::Args, Debug, Clone)]
struct Input {
    /// Operation expression, e.g. `psi(2)`, `2*sigma(1) - psi(3)`, `[0,1,2,3]`.
    expr: Option<String>,

    /// Read the sequence from a JSON array of integers or rational strings.
    #[arg(long, value_name = "PATH", conflicts_with = "expr")]
    file: Option<PathBuf>,

    /// Truncation N: entries 0..=N.
    #[arg(long)]
    trunc: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the congruences C_n . lambda for an eigenvalue sequence.
    Check {
        #[command(flatten)]
        input: Input,
        /// Check over Z_(p) for an odd prime p.
        #[arg(long)]
        prime: Option<u64>,
        /// Treat the input as an Adams-summand sequence (requires --prime).
        #[arg(long, requires = "prime")]
        summand: bool,
    },
    /// Convert between eigenvalues and sigma-coordinates.
    Convert {
        #[command(flatten)]
        input: Input,
        /// Coordinates of the input.
        #[arg(long, value_enum, default_value_t = Coords::Lambda)]
        from: Coords,
    },
    /// Pair an operation with an integer-valued polynomial.
    Pair {
        #[command(flatten)]
        input: Input,
        /// Polynomial in w, e.g. `w^2 - w` or `3*binom(w,2) + 1`.
        #[arg(long)]
        poly: String,
    },
    /// Print the congruence forms C_0 .. C_N.
    Table {
        #[arg(long, default_value_t = 10)]
        trunc: usize,
    },
    /// Print log, exp, formal group law coefficients and the Adams
    /// orientation series to order T.
    FglDump {
        /// Series order T.
        #[arg(long, default_value_t = 10)]
        trunc: usize,
        /// Generator degree bound (defaults to T - 1).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Run every built-in check and report pass/fail per item.
    VerifyPaper,
    /// Evaluate the Adams functional on a monomial such as `b(2)*etaR(x1)`.
    Eval {
        monomial: String,
        /// Series order T (largest admissible b-index).
        #[arg(long, default_value_t = 10)]
        trunc: usize,
        /// Half-degree of a generic etaR argument.
        #[arg(long)]
        half_degree: Option<usize>,
        /// Comma-separated dictionary basis, e.g. `x1^3,a21*x1`.
        #[arg(long)]
        basis: Option<String>,
        /// Substitute the eigenvalues of this operation.
        #[arg(long)]
        lambda: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Coords {
    Lambda,
    Sigma,
}

struct Doc {
    json: Value,
    plain: String,
    csv: Vec<Vec<String>>,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => match emit(&cli, &doc) {
            Ok(()) if doc.pass => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_capacity() {
        3
    } else {
        2
    }
}

fn emit(cli: &Cli, doc: &Doc) -> std::io::Result<()> {
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc.json).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Plain => doc.plain.clone(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &doc.csv {
                w.write_record(row)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv is utf-8")
        }
    };
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn rats(v: &[BigRational]) -> Vec<String> {
    v.iter().map(to_canonical).collect()
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

// Reads an input sequence at the requested stride.
fn read_sequence(input: &Input, stride: usize) -> Result<Vec<BigRational>> {
    if let Some(path) = &input.file {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let items = value.as_array().ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
        let strings: Vec<String> = items
            .iter()
            .map(|v| match v {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
                other => Err(Error::Parse(format!("expected an integer or rational string, got {other}"))),
            })
            .collect::<Result<_>>()?;
        let mut seq = expr::parse_sequence(&strings)?;
        if let Some(n) = input.trunc {
            if seq.len() < n + 1 {
                return Err(Error::Capacity(format!("file has {} entries, truncation {n} needs {}", seq.len(), n + 1)));
            }
            seq.truncate(n + 1);
        }
        return Ok(seq);
    }
    let src = input.expr.as_deref().ok_or_else(|| Error::Parse("missing input expression or --file".into()))?;
    let truncation = input.trunc.or_else(|| expr::list_truncation(src)).unwrap_or(10);
    expr::evaluate(src, Context { truncation, stride })
}

fn cert_doc(cert: &CongruenceCert) -> Doc {
    let mut plain = String::new();
    for e in &cert.entries {
        let val = e.valuation.map(|v| format!(" (valuation {v})")).unwrap_or_default();
        plain.push_str(&format!(
            "C_{} . lambda = {}{}  {}\n",
            e.index,
            to_canonical(&e.value),
            val,
            if e.pass { "ok" } else { "FAIL" }
        ));
    }
    match cert.first_failure() {
        None => plain.push_str("verdict: pass\n"),
        Some(e) => plain.push_str(&format!("verdict: fail (first failure at n = {})\n", e.index)),
    }
    let mut csv = vec![vec!["index".into(), "value".into(), "pass".into(), "valuation".into()]];
    for e in &cert.entries {
        csv.push(vec![
            e.index.to_string(),
            to_canonical(&e.value),
            e.pass.to_string(),
            e.valuation.map(|v| v.to_string()).unwrap_or_default(),
        ]);
    }
    Doc { json: to_json(cert), plain, csv, pass: cert.verdict }
}

fn run(cli: &Cli) -> Result<Doc> {
    match &cli.command {
        Command::Check { input, prime, summand } => {
            let stride = match (prime, summand) {
                (Some(p), true) if *p >= 3 => (*p - 1) as usize,
                _ => 1,
            };
            let seq = read_sequence(input, stride)?;
            let cert = match prime {
                None => check_congruences(&LambdaSeq::new(seq)?),
                Some(p) if *summand => check_congruences_plocal(&PLocalSeq::summand(*p, seq)?),
                Some(p) => check_congruences_plocal(&PLocalSeq::full(*p, &LambdaSeq::new(seq)?)?),
            };
            Ok(cert_doc(&cert))
        }
        Command::Convert { input, from } => {
            let seq = read_sequence(input, 1)?;
            let (to, out) = match from {
                Coords::Lambda => ("sigma", lambda_to_sigma(&LambdaSeq::new(seq.clone())?).into_entries()),
                Coords::Sigma => ("lambda", sigma_to_lambda(&SigmaCoeffs::new(seq.clone())?).into_entries()),
            };
            let from_name = if *from == Coords::Lambda { "lambda" } else { "sigma" };
            let json = json!({ "from": from_name, "to": to, "input": rats(&seq), "output": rats(&out) });
            let plain = format!("{from_name}: [{}]\n{to}: [{}]\n", rats(&seq).join(", "), rats(&out).join(", "));
            let mut csv = vec![vec!["index".to_string(), from_name.to_string(), to.to_string()]];
            for (i, (a, b)) in seq.iter().zip(&out).enumerate() {
                csv.push(vec![i.to_string(), to_canonical(a), to_canonical(b)]);
            }
            Ok(Doc { json, plain, csv, pass: true })
        }
        Command::Pair { input, poly } => {
            let f = IvpPoly::parse(poly)?;
            let mut input = input.clone();
            if input.file.is_none() && input.trunc.is_none() {
                let lists = input.expr.as_deref().and_then(expr::list_truncation);
                input.trunc = Some(lists.unwrap_or_else(|| f.degree().max(10)));
            }
            let lambda = LambdaSeq::new(read_sequence(&input, 1)?)?;
            let sigma = lambda_to_sigma(&lambda);
            let value = pairing(&sigma, &f)?;
            let json = json!({
                "polynomial": f.to_string(),
                "binomial_coordinates": rats(f.binom_coeffs()),
                "integer_valued": f.is_integer_valued(),
                "sigma": rats(sigma.entries()),
                "value": to_canonical(&value),
            });
            let plain = format!("<op, {f}> = {}\n", to_canonical(&value));
            let csv = vec![
                vec!["polynomial".into(), "integer_valued".into(), "value".into()],
                vec![f.to_string(), f.is_integer_valued().to_string(), to_canonical(&value)],
            ];
            Ok(Doc { json, plain, csv, pass: true })
        }
        Command::Table { trunc } => {
            let rows = congruence_table(*trunc);
            let plain = rows.iter().map(|r| format!("{r}\n")).collect();
            let mut header = vec!["index".to_string(), "denominator".to_string()];
            header.extend((0..=*trunc).map(|k| format!("lambda_{k}")));
            let mut csv = vec![header];
            for r in &rows {
                let mut line = vec![r.index.to_string(), r.denominator.to_string()];
                line.extend((0..=*trunc).map(|k| r.numerators.get(k).map(|c| c.to_string()).unwrap_or_else(|| "0".into())));
                csv.push(line);
            }
            Ok(Doc { json: json!({ "truncation": trunc, "rows": to_json(&rows) }), plain, csv, pass: true })
        }
        Command::FglDump { trunc, degree } => {
            let config = FglConfig { order: *trunc, degree: degree.unwrap_or(trunc.saturating_sub(1)) };
            let dump = Fgl::new(config)?.dump();
            let mut plain = String::new();
            for (i, c) in dump.log.iter().enumerate() {
                plain.push_str(&format!("log[{}] = {c}\n", i + 1));
            }
            for (i, c) in dump.exp.iter().enumerate() {
                plain.push_str(&format!("exp[{}] = {c}\n", i + 1));
            }
            for c in &dump.fgl_coefficients {
                plain.push_str(&format!("a[{},{}] = {}\n", c.i, c.j, c.coeff));
            }
            for (i, c) in dump.adams_orientation.iter().enumerate() {
                plain.push_str(&format!("B[{}] = {c}\n", i + 1));
            }
            let mut csv = vec![vec!["i".to_string(), "j".to_string(), "coefficient".to_string()]];
            for c in &dump.fgl_coefficients {
                csv.push(vec![c.i.to_string(), c.j.to_string(), c.coeff.to_string()]);
            }
            Ok(Doc { json: to_json(&dump), plain, csv, pass: true })
        }
        Command::VerifyPaper => {
            let report = verify_paper();
            let mut plain = String::new();
            let mut csv = vec![vec!["kind".to_string(), "id".to_string(), "pass".to_string(), "description".to_string()]];
            for (kind, checks) in [("criterion", &report.criteria), ("example", &report.examples)] {
                for c in checks {
                    plain.push_str(&format!(
                        "{kind} {:<22} {}  {}\n",
                        c.id,
                        if c.pass { "PASS" } else { "FAIL" },
                        c.description
                    ));
                    csv.push(vec![kind.into(), c.id.clone(), c.pass.to_string(), c.description.clone()]);
                }
            }
            plain.push_str(if report.pass { "all checks passed\n" } else { "some checks FAILED\n" });
            Ok(Doc { json: to_json(&report), plain, csv, pass: report.pass })
        }
        Command::Eval { monomial, trunc, half_degree, basis, lambda } => {
            let xi = HopfMonomial::parse(monomial, *half_degree)?;
            let ev = HopfEvaluator::new(FglConfig::with_order(*trunc))?;
            let p = ev.psi_hat(&xi)?;
            let linear = LambdaLinear::from_kpoly(&p);
            let projection = linear.project();
            let mut json = json!({
                "monomial": xi.to_string(),
                "psi_hat": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "projection": rats(&projection),
            });
            let mut plain = format!("{xi}\npsi_hat = {p}\nprojection = {}\n", format_form(&projection));
            let mut csv = vec![vec!["kappa_power".to_string(), "coefficient".to_string()]];
            for (j, c) in p.coeffs().iter().enumerate() {
                csv.push(vec![j.to_string(), c.to_string()]);
            }
            if let Some(basis) = basis {
                let names: Vec<&str> = basis.split(',').map(str::trim).collect();
                let d = ev.dictionary_forms(&xi, &names)?;
                let mut forms = serde_json::Map::new();
                for (name, form) in d.basis.iter().zip(&d.forms) {
                    forms.insert(name.clone(), json!(rats(form)));
                    plain.push_str(&format!("on {name}: {}\n", format_form(form)));
                }
                json["dictionary_forms"] = Value::Object(forms);
            }
            if let Some(src) = lambda {
                let n = expr::list_truncation(src).unwrap_or_else(|| p.kappa_degree());
                let seq = LambdaSeq::new(expr::evaluate(src, Context::new(n))?)?;
                let value = substitute_lambda(&p, &seq)?;
                plain.push_str(&format!("value = {value}\n"));
                json["value"] = json!(value.to_string());
            }
            Ok(Doc { json, plain, csv, pass: true })
        }
    }
}
