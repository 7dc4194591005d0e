use padovan::bench::{run_bench, BenchConfig};
use padovan::decimation::{self, reduce_to_head, EvalStrategy};
use padovan::folded::folded;
use padovan::tables::{build_table, column_sums};
use padovan::verify::{failure_count, run_suite, SuiteConfig};
use padovan::{Error, IndexCap, Integer};
use serde_json::json;

use crate::cli::{Command, Span};
use crate::output::Output;

/// A command that could not produce output, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::FormulaDisagreement { .. }
            | Error::CertificateMismatch { .. }
            | Error::DivisibilityViolation { .. }
            | Error::ParityViolation
            | Error::DigestMismatch { .. } => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Output plus the exit code to finish with.
pub struct Outcome {
    pub output: Output,
    pub code: i32,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Outcome { output, code: 0 }
    }
}

pub fn dispatch(command: &Command, cap: IndexCap) -> Result<Outcome, Failure> {
    match command {
        Command::Eval { n, strategy, check } => eval(*n, *strategy, *check, cap).map(Outcome::from),
        Command::Coeffs { range } => coeffs(*range, cap).map(Outcome::from),
        Command::Reduce { n, a } => reduce(*n, *a, cap).map(Outcome::from),
        Command::Table { columns, rows } => table(*columns, *rows, cap).map(Outcome::from),
        Command::Sums { columns, column, m } => sums(*columns, *column, *m, cap).map(Outcome::from),
        Command::Qr { range } => qr(*range, cap).map(Outcome::from),
        Command::Verify { seed, samples, verbose } => Ok(verify(*seed, *samples, *verbose, cap)),
        Command::Bench { ladder, reps, step } => bench(ladder, *reps, *step, cap).map(Outcome::from),
    }
}

fn s(v: &Integer) -> String {
    v.to_string()
}

fn eval(n: i64, strategy: EvalStrategy, check: bool, cap: IndexCap) -> Result<Output, Failure> {
    let value: Integer = strategy.evaluate(n, cap)?;
    if check {
        let mut others = vec![EvalStrategy::Iterative, EvalStrategy::MatrixPower, EvalStrategy::Trisection];
        if let EvalStrategy::Decimated(_) = strategy {
            others.push(strategy);
        }
        for other in others.into_iter().filter(|o| *o != strategy) {
            let v: Integer = other.evaluate(n, cap)?;
            if v != value {
                return Err(Failure {
                    code: 1,
                    message: format!("strategies disagree at n = {n}: {strategy} vs {other}"),
                });
            }
        }
    }
    let text = s(&value);
    let json = json!({ "n": n, "strategy": strategy.to_string(), "value": text, "checked": check });
    Ok(Output::table(&["n", "strategy", "value"], vec![vec![n.to_string(), strategy.to_string(), text.clone()]], json)
        .with_plain(text))
}

fn coeffs(range: Span, cap: IndexCap) -> Result<Output, Failure> {
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for a in range.lo..=range.hi {
        let c = decimation::coeffs::<Integer>(a, cap)?;
        items.push(json!({ "a": a, "rho": s(&c.rho), "sigma": s(&c.sigma) }));
        rows.push(vec![a.to_string(), s(&c.rho), s(&c.sigma)]);
    }
    Ok(Output::table(&["a", "rho", "sigma"], rows, json!({ "rows": items })))
}

fn reduce(n: i64, a: i64, cap: IndexCap) -> Result<Output, Failure> {
    let cert = reduce_to_head::<Integer>(n, a, cap)?;
    let value = decimation::eval_via_certificate(&cert, cap)?;
    let [c2, c1, c0] = &cert.coeffs;
    let [h2, h1, h0] = cert.head_indices();
    let json = json!({
        "n": n,
        "a": a,
        "b": cert.residue,
        "m": cert.rows,
        "coeffs": { "c2": s(c2), "c1": s(c1), "c0": s(c0) },
        "head_indices": [h2, h1, h0],
        "value": s(&value),
        "verified": true,
    });
    let row = vec![
        n.to_string(),
        a.to_string(),
        cert.residue.to_string(),
        cert.rows.to_string(),
        s(c2),
        s(c1),
        s(c0),
        h2.to_string(),
        h1.to_string(),
        h0.to_string(),
        s(&value),
    ];
    let plain = format!(
        "P({n}) = {c2}*P({h2}) + {c1}*P({h1}) + {c0}*P({h0})\nb = {}, m = {}\nvalue = {value} (verified)",
        cert.residue, cert.rows
    );
    Ok(Output::table(&["n", "a", "b", "m", "c2", "c1", "c0", "head2", "head1", "head0", "value"], vec![row], json)
        .with_plain(plain))
}

fn table(columns: i64, rows: i64, cap: IndexCap) -> Result<Output, Failure> {
    let t = build_table::<Integer>(columns, rows, cap)?;
    let grid: Vec<Vec<String>> = t.iter_rows().map(|r| r.iter().map(s).collect()).collect();
    let json = json!({ "columns": columns, "rows": rows, "entries": grid });
    let headers: Vec<String> = (1..=columns).map(|b| format!("b{b}")).collect();
    let headers: Vec<&str> = headers.iter().map(String::as_str).collect();
    Ok(Output::table(&headers, grid, json))
}

fn sums(columns: i64, column: i64, m: i64, cap: IndexCap) -> Result<Output, Failure> {
    let series = column_sums::<Integer>(columns, column, m, cap)?;
    let last = s(series.last().expect("at least r(0)"));
    let text: Vec<String> = series.iter().map(s).collect();
    let json = json!({ "columns": columns, "column": column, "m": m, "sum": last, "series": text });
    let rows = text.into_iter().enumerate().map(|(k, v)| vec![k.to_string(), v]).collect();
    Ok(Output::table(&["m", "sum"], rows, json).with_plain(last))
}

fn qr(range: Span, cap: IndexCap) -> Result<Output, Failure> {
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for n in range.lo..=range.hi {
        let pair = folded::<Integer>(n, cap)?;
        let (forward, backward) = padovan::folded::recover(&pair)?;
        items.push(json!({
            "n": n, "p": s(&forward), "p_neg": s(&backward), "q": s(&pair.q), "r": s(&pair.r),
        }));
        rows.push(vec![n.to_string(), s(&forward), s(&backward), s(&pair.q), s(&pair.r)]);
    }
    Ok(Output::table(&["n", "P(n)", "P(-n)", "Q", "R"], rows, json!({ "rows": items })))
}

fn verify(seed: u64, samples: usize, verbose: bool, cap: IndexCap) -> Outcome {
    let config = SuiteConfig { seed, certificate_samples: samples, cap, ..SuiteConfig::default() };
    let reports = run_suite(&config);
    let failures = failure_count(&reports);
    let checks: u64 = reports.iter().map(|r| r.checked).sum();
    let rows = reports
        .iter()
        .map(|r| {
            let status = if r.passed() { "ok" } else { "FAIL" };
            vec![r.id.clone(), r.range.clone(), r.checked.to_string(), r.failures.len().to_string(), status.into()]
        })
        .collect();
    let json = json!({
        "seed": seed,
        "passed": failures == 0,
        "identities": reports.len(),
        "checks": checks,
        "failures": failures,
        "reports": reports,
    });
    let mut output = Output::table(&["identity", "range", "checked", "failures", "status"], rows, json);
    output.notes.push(format!("{} identities, {checks} checks, {failures} failures", reports.len()));
    if verbose {
        for r in &reports {
            for f in &r.failures {
                output.notes.push(format!("{}: {} expected {} got {}", r.id, f.inputs, f.expected, f.got));
            }
        }
    }
    Outcome { output, code: if failures == 0 { 0 } else { 1 } }
}

fn bench(ladder: &[i64], reps: usize, step: i64, cap: IndexCap) -> Result<Output, Failure> {
    if step < 1 {
        return Err(Error::InvalidStep(step).into());
    }
    let config = BenchConfig { ladder: ladder.to_vec(), reps, decimation_step: step, cap };
    let report = run_bench(&config)?;
    let rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.strategy.clone(),
                r.n.to_string(),
                r.reps.to_string(),
                r.median_ns.to_string(),
                r.min_ns.to_string(),
                r.digest.digits.to_string(),
                r.digest.low_digits.clone(),
                r.digest.negative.to_string(),
            ]
        })
        .collect();
    let json = json!({ "config": config, "report": report });
    let mut output = Output::table(
        &["strategy", "n", "reps", "median_ns", "min_ns", "digits", "low_digits", "negative"],
        rows,
        json,
    );
    output.notes.push(report.environment.clone());
    output.notes.extend(report.warnings.iter().map(|w| format!("warning: {w}")));
    Ok(output)
}
