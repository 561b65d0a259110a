use std::io::Write;

use poisson::catalog::{self, Selection};
use poisson::numerics::SumOptions;
use poisson::special;
use poisson::transforms::{self, builtin};
use poisson::{Params, Rational, Status, Tolerances, VariantKind, VerificationOutcome};
use serde::Serialize;
use serde_json::json;

use crate::args::{
    Command, EvalArgs, Format, LedgerArgs, LedgerFormat, ListArgs, ListFormat, Operation, RunArgs,
    TableArgs, TableKind, TransformArgs, VerifyArgs,
};
use crate::error::{CliError, CliResult};
use crate::fmt::{exact, real};

/// Runs one subcommand, writing its report to `out`, and returns the exit status.
pub fn dispatch<W: Write>(command: Command, out: &mut W) -> CliResult<u8> {
    match command {
        Command::Verify(a) => verify(a, out),
        Command::List(a) => list(a, out),
        Command::Eval(a) => eval(a, out),
        Command::Table(a) => table(a, out),
        Command::Transform(a) => transform(a, out),
        Command::Ledger(a) => ledger(a, out),
    }
}

fn tolerances(run: &RunArgs) -> CliResult<Tolerances> {
    let tol = Tolerances { abs_tol: run.abs_tol, rel_tol: run.rel_tol, max_terms: run.max_terms };
    tol.validate()?;
    Ok(tol)
}

fn parse_param(s: &str) -> CliResult<(String, f64)> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("--param expects NAME=VALUE, got `{s}`")))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("--param {name}: `{value}` is not a number")))?;
    Ok((name.trim().to_string(), value))
}

/// Row shape shared by the JSON and CSV renderings of an outcome.
#[derive(Serialize)]
struct OutcomeRow<'a> {
    identity: &'a str,
    variant: &'static str,
    params: &'a Params,
    lhs: f64,
    rhs: f64,
    abs_residual: f64,
    rel_residual: f64,
    status: Status,
    expected_status: poisson::Expected,
    elapsed_ms: f64,
}

impl<'a> OutcomeRow<'a> {
    fn new(o: &'a VerificationOutcome, timing: bool) -> Self {
        OutcomeRow {
            identity: &o.identity,
            variant: o.variant.as_str(),
            params: &o.params,
            lhs: o.lhs,
            rhs: o.rhs,
            abs_residual: o.abs_residual,
            rel_residual: o.rel_residual,
            status: o.status,
            expected_status: o.expected_status,
            elapsed_ms: if timing { o.elapsed_ms } else { 0.0 },
        }
    }
}

fn verify<W: Write>(args: VerifyArgs, out: &mut W) -> CliResult<u8> {
    let tol = tolerances(&args.run)?;
    let variant = match args.variant.as_deref() {
        None => None,
        Some(s) => Some(VariantKind::parse(s).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown variant `{s}` (expected as_printed, corrected, derived_closed_form or aux)"
            ))
        })?),
    };
    let mut overrides = Params::new();
    for p in &args.params {
        let (name, value) = parse_param(p)?;
        overrides.insert(&name, value);
    }
    if !overrides.is_empty() {
        let records: Vec<&poisson::IdentityRecord> = if args.ids.is_empty() {
            catalog::list_identities().iter().collect()
        } else {
            args.ids.iter().map(|id| catalog::find_identity(id)).collect::<Result<_, _>>()?
        };
        for (name, _) in overrides.iter() {
            if !records.iter().any(|r| r.params.iter().any(|s| s.name == name)) {
                return Err(CliError::Usage(format!("no selected identity has a parameter `{name}`")));
            }
        }
    }
    let selection = Selection { ids: args.ids, variant, overrides };
    let report = catalog::run(&selection, &tol, args.run.parallel as usize)?;
    let timing = !args.no_timing;

    match args.format {
        Format::Json => {
            let rows: Vec<OutcomeRow> = report.outcomes.iter().map(|o| OutcomeRow::new(o, timing)).collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "identity",
                "variant",
                "params",
                "lhs",
                "rhs",
                "abs_residual",
                "rel_residual",
                "status",
                "expected_status",
                "elapsed_ms",
            ])?;
            for o in &report.outcomes {
                let elapsed = if timing { o.elapsed_ms } else { 0.0 };
                w.write_record([
                    o.identity.clone(),
                    o.variant.as_str().to_string(),
                    o.params.to_string(),
                    exact(o.lhs),
                    exact(o.rhs),
                    exact(o.abs_residual),
                    exact(o.rel_residual),
                    o.status.as_str().to_string(),
                    o.expected_status.as_str().to_string(),
                    exact(elapsed),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => write_outcome_table(&report.outcomes, timing, out)?,
    }
    for o in &report.outcomes {
        if let Some(msg) = &o.message {
            if o.status == Status::Error {
                eprintln!("{} {} [{}]: {msg}", o.identity, o.variant.as_str(), o.params);
            }
        }
    }

    let ok = if args.strict { report.all_pass() } else { report.all_match() };
    Ok(if ok { 0 } else { 1 })
}

fn write_outcome_table<W: Write>(outcomes: &[VerificationOutcome], timing: bool, out: &mut W) -> CliResult<()> {
    writeln!(
        out,
        "{:<20} {:<19} {:<16} {:>23} {:>23} {:>10} {:<6} {:<10}{}",
        "identity",
        "variant",
        "params",
        "lhs",
        "rhs",
        "abs_resid",
        "status",
        "expected",
        if timing { "       ms" } else { "" }
    )?;
    for o in outcomes {
        let flag = if o.matches_expectation() { "" } else { "  << unexpected" };
        let ms = if timing { format!(" {:>8.2}", o.elapsed_ms) } else { String::new() };
        writeln!(
            out,
            "{:<20} {:<19} {:<16} {:>23} {:>23} {:>10.2e} {:<6} {:<10}{ms}{flag}",
            o.identity,
            o.variant.as_str(),
            o.params.to_string(),
            real(o.lhs),
            real(o.rhs),
            o.abs_residual,
            o.status.as_str(),
            o.expected_status.as_str(),
        )?;
    }
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    let mismatched = outcomes.iter().filter(|o| !o.matches_expectation()).count();
    writeln!(
        out,
        "{} outcomes: {} pass, {} fail, {} error; {} differ from expectation",
        outcomes.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Error),
        mismatched
    )?;
    Ok(())
}

fn list<W: Write>(args: ListArgs, out: &mut W) -> CliResult<u8> {
    let records = catalog::list_identities();
    match args.format {
        ListFormat::Json => {
            let summaries: Vec<_> = records.iter().map(|r| r.summary()).collect();
            serde_json::to_writer_pretty(&mut *out, &summaries)?;
            writeln!(out)?;
        }
        ListFormat::Text => {
            for r in records {
                let variants: Vec<&str> = r.variants.iter().map(|v| v.kind.as_str()).collect();
                let params: Vec<String> =
                    r.params.iter().map(|p| format!("{} ∈ {} (default {})", p.name, p.domain, p.default)).collect();
                writeln!(out, "{:<20} {}", r.id, r.title)?;
                writeln!(out, "{:<20} {}", "", r.formula)?;
                writeln!(out, "{:<20} variants: {}", "", variants.join(", "))?;
                if !params.is_empty() {
                    writeln!(out, "{:<20} params: {}", "", params.join("; "))?;
                }
            }
        }
    }
    Ok(0)
}

fn arg<T: std::str::FromStr>(args: &[String], i: usize, what: &str) -> CliResult<T> {
    let s = args.get(i).ok_or_else(|| CliError::Usage(format!("missing argument <{what}>")))?;
    s.parse().map_err(|_| CliError::Usage(format!("<{what}>: cannot parse `{s}`")))
}

fn arity(args: &[String], n: usize, usage: &str) -> CliResult<()> {
    if args.len() != n {
        return Err(CliError::Usage(format!("usage: eval {usage}")));
    }
    Ok(())
}

enum Value {
    Exact(Rational),
    Integer(i128),
    Real(f64),
}

fn eval<W: Write>(args: EvalArgs, out: &mut W) -> CliResult<u8> {
    let a = &args.args;
    let value = match args.function.as_str() {
        "bernoulli" => {
            arity(a, 1, "bernoulli N")?;
            Value::Exact(special::bernoulli(arg(a, 0, "N")?)?)
        }
        "qnumber" => {
            arity(a, 1, "qnumber N")?;
            Value::Exact(special::q_number(arg(a, 0, "N")?)?)
        }
        "eta-neg" => {
            arity(a, 1, "eta-neg M")?;
            Value::Exact(special::eta_negative(arg(a, 0, "M")?)?)
        }
        "eulerian" => {
            arity(a, 2, "eulerian N K")?;
            Value::Integer(special::eulerian(arg(a, 0, "N")?, arg(a, 1, "K")?)?)
        }
        "zeta" => {
            arity(a, 1, "zeta S")?;
            Value::Real(special::zeta_int(arg(a, 0, "S")?)?)
        }
        "catalan" => {
            arity(a, 0, "catalan")?;
            Value::Real(special::catalan())
        }
        "li3" => {
            arity(a, 1, "li3 X")?;
            Value::Real(special::li3(arg(a, 0, "X")?)?)
        }
        "lerch" => {
            arity(a, 3, "lerch Z S A")?;
            Value::Real(special::lerch_phi(arg(a, 0, "Z")?, arg(a, 1, "S")?, arg(a, 2, "A")?)?)
        }
        "K" => {
            arity(a, 1, "K MODULUS")?;
            Value::Real(special::elliptic_from_modulus(arg(a, 0, "MODULUS")?)?.k_first)
        }
        "E" => {
            arity(a, 1, "E MODULUS")?;
            Value::Real(special::elliptic_from_modulus(arg(a, 0, "MODULUS")?)?.e_second)
        }
        "modulus-from-ratio" => {
            arity(a, 1, "modulus-from-ratio RATIO")?;
            Value::Real(special::modulus_from_ratio(arg(a, 0, "RATIO")?)?.modulus)
        }
        "li-neg" => {
            arity(a, 2, "li-neg N X")?;
            Value::Real(special::li_negative_order(arg(a, 0, "N")?, arg(a, 1, "X")?)?)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown function `{other}` (expected bernoulli, qnumber, eta-neg, eulerian, zeta, catalan, \
                 li3, lerch, K, E, modulus-from-ratio, li-neg)"
            )))
        }
    };
    match value {
        Value::Exact(r) => writeln!(out, "{r}")?,
        Value::Integer(n) => writeln!(out, "{n}")?,
        Value::Real(x) => writeln!(out, "{}", real(x))?,
    }
    Ok(0)
}

fn table<W: Write>(args: TableArgs, out: &mut W) -> CliResult<u8> {
    // (n, k, value); k is only meaningful for Eulerian rows.
    let mut rows: Vec<(usize, Option<usize>, String)> = Vec::new();
    match args.kind {
        TableKind::Q => {
            for n in 0..=args.max {
                rows.push((n, None, special::q_number(n)?.to_string()));
            }
        }
        TableKind::Bernoulli => {
            for n in 0..=args.max {
                rows.push((n, None, special::bernoulli(n)?.to_string()));
            }
        }
        TableKind::Eulerian => {
            for n in 1..=args.max {
                for (k, v) in special::eulerian_row(n)?.iter().enumerate() {
                    rows.push((n, Some(k), v.to_string()));
                }
            }
        }
    }
    match args.format {
        Format::Text => match args.kind {
            TableKind::Eulerian => {
                for n in 1..=args.max {
                    let row: Vec<&str> = rows.iter().filter(|r| r.0 == n).map(|r| r.2.as_str()).collect();
                    writeln!(out, "{n:>3}: {}", row.join(" "))?;
                }
            }
            _ => {
                for (n, _, v) in &rows {
                    writeln!(out, "{n:>3}  {v}")?;
                }
            }
        },
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if args.kind == TableKind::Eulerian {
                w.write_record(["n", "k", "value"])?;
            } else {
                w.write_record(["n", "value"])?;
            }
            for (n, k, v) in &rows {
                match k {
                    Some(k) => w.write_record([n.to_string(), k.to_string(), v.clone()])?,
                    None => w.write_record([n.to_string(), v.clone()])?,
                }
            }
            w.flush()?;
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, k, v)| match k {
                    Some(k) => json!({ "n": n, "k": k, "value": v }),
                    None => json!({ "n": n, "value": v }),
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &items)?;
            writeln!(out)?;
        }
    }
    Ok(0)
}

fn transform<W: Write>(args: TransformArgs, out: &mut W) -> CliResult<u8> {
    let f = builtin(&args.function)?;
    let opts = SumOptions::default();
    let report = match args.operation {
        Operation::Theorem1 | Operation::Theorem2 => {
            let a = args.a.ok_or_else(|| CliError::Usage("theorem transforms need --a".into()))?;
            let r = if args.operation == Operation::Theorem1 {
                transforms::theorem1_sides(&f, a, &opts)?
            } else {
                transforms::theorem2_sides(&f, a, &opts)?
            };
            json!({
                "operation": operation_name(args.operation),
                "function": f.label(),
                "parity": f.parity().as_str(),
                "a": r.params.a,
                "b": r.params.b,
                "lhs": r.lhs.value,
                "rhs": r.rhs.value,
                "lhs_error": r.lhs.tail_estimate,
                "rhs_error": r.rhs.tail_estimate,
                "abs_residual": r.abs_residual,
                "rel_residual": r.rel_residual,
                "warnings": r.warnings,
            })
        }
        Operation::Lemma1 | Operation::Lemma2 => {
            let gamma = args.gamma.ok_or_else(|| CliError::Usage("lemma transforms need --gamma".into()))?;
            let (integral, series) = if args.operation == Operation::Lemma1 {
                (transforms::lemma1_integral(&f, gamma, &opts)?, transforms::lemma1_series(&f, gamma, &opts)?)
            } else {
                (transforms::lemma2_integral(&f, gamma, &opts)?, transforms::lemma2_series(&f, gamma, &opts)?)
            };
            let (abs, rel) = catalog::residuals(integral.value, series.value);
            json!({
                "operation": operation_name(args.operation),
                "function": f.label(),
                "parity": f.parity().as_str(),
                "gamma": gamma,
                "lhs": integral.value,
                "rhs": series.value,
                "lhs_error": integral.error_estimate,
                "rhs_error": series.tail_estimate,
                "abs_residual": abs,
                "rel_residual": rel,
                "warnings": Vec::<String>::new(),
            })
        }
    };
    match args.format {
        ListFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        ListFormat::Text => {
            let obj = report.as_object().expect("report is an object");
            for (key, v) in obj {
                match v {
                    serde_json::Value::Number(n) => {
                        writeln!(out, "{key:<13} {}", real(n.as_f64().unwrap_or(f64::NAN)))?
                    }
                    serde_json::Value::String(s) => writeln!(out, "{key:<13} {s}")?,
                    serde_json::Value::Array(items) => {
                        for w in items {
                            writeln!(out, "warning       {}", w.as_str().unwrap_or_default())?;
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(0)
}

fn operation_name(op: Operation) -> &'static str {
    match op {
        Operation::Theorem1 => "theorem1",
        Operation::Theorem2 => "theorem2",
        Operation::Lemma1 => "lemma1",
        Operation::Lemma2 => "lemma2",
    }
}

fn ledger<W: Write>(args: LedgerArgs, out: &mut W) -> CliResult<u8> {
    let tol = tolerances(&args.run)?;
    let report = catalog::verify_all(&tol, args.run.parallel as usize)?;
    match args.format {
        LedgerFormat::Markdown => write!(out, "{}", report.ledger.to_markdown())?,
        LedgerFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report.ledger)?;
            writeln!(out)?;
        }
    }
    Ok(0)
}
