//! Executable identity catalogue.
//!
//! [`run_suite`] checks every identity over configurable ranges and returns
//! one [`IdentityReport`] per identity, in catalogue order. Failures are
//! collected rather than raised, so a single run reports all of them.
//! Identities run in parallel; the report does not depend on scheduling.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decimation::{
    self, column_walk_eval, decimated_eval, eval_via_certificate, matrix_pow_eval, reduce_to_head, rho_forms,
    third_remark_eval, trisection_eval,
};
use crate::error::Result;
use crate::folded::{folded, q_identity_check, recover};
use crate::sequence::{pad, IndexCap, PadovanType};
use crate::tables::{column_sums, r3_step, r4_step, sum_4k_closed};
use crate::Integer;

/// Inclusive index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Span { lo, hi }
    }

    fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Defining recurrence, both directions.
    pub recurrence: Span,
    /// The 2-, 3- and 4-step identities.
    pub small_steps: Span,
    /// `rho` and `sigma` recurrences, `sigma(a) = -rho(-a)`.
    pub coefficient_steps: Span,
    /// Agreement of the three closed forms of `rho`.
    pub three_forms: Span,
    pub decimation_n: Span,
    pub decimation_a: Span,
    pub certificate_samples: usize,
    pub certificate_max_n: i64,
    /// Strategies are compared on `0..=strategy_max_n` plus `strategy_extra`.
    pub strategy_max_n: i64,
    pub strategy_extra: Vec<i64>,
    pub fold_max_n: i64,
    pub remark_max_n: i64,
    pub sum_max_m: i64,
    pub sum_4k_max_m: i64,
    pub seed: u64,
    pub cap: IndexCap,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            recurrence: Span::new(-200, 400),
            small_steps: Span::new(-50, 400),
            coefficient_steps: Span::new(-100, 100),
            three_forms: Span::new(-200, 200),
            decimation_n: Span::new(-50, 300),
            decimation_a: Span::new(-12, 12),
            certificate_samples: 500,
            certificate_max_n: 5000,
            strategy_max_n: 2000,
            strategy_extra: vec![10_000, 100_000],
            fold_max_n: 500,
            remark_max_n: 500,
            sum_max_m: 200,
            sum_4k_max_m: 500,
            seed: 0,
            cap: IndexCap::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub range: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }
}

/// Total number of failures across a report.
pub fn failure_count(reports: &[IdentityReport]) -> usize {
    reports.iter().map(|r| r.failures.len()).sum()
}

struct Checker {
    report: IdentityReport,
}

impl Checker {
    fn new(id: &str, range: impl Into<String>) -> Self {
        Checker { report: IdentityReport { id: id.into(), range: range.into(), checked: 0, failures: Vec::new() } }
    }

    fn check(&mut self, inputs: impl FnOnce() -> String, expected: Result<Integer>, got: Result<Integer>) {
        self.report.checked += 1;
        let ok = matches!((&expected, &got), (Ok(e), Ok(g)) if e == g);
        if !ok {
            let show = |r: Result<Integer>| r.map_or_else(|e| format!("error: {e}"), |v| v.to_string());
            self.report.failures.push(Failure { inputs: inputs(), expected: show(expected), got: show(got) });
        }
    }

    fn finish(self) -> IdentityReport {
        self.report
    }
}

/// `P(lo) ..= P(hi)` by iteration, indexable by absolute index.
struct Slab {
    lo: i64,
    values: Vec<Integer>,
}

impl Slab {
    fn new(lo: i64, hi: i64, cap: IndexCap) -> Result<Self> {
        Ok(Slab { lo, values: PadovanType::canonical().stream(lo, hi, cap)? })
    }

    fn at(&self, n: i64) -> &Integer {
        &self.values[(n - self.lo) as usize]
    }
}

type IdentityFn = fn(&SuiteConfig) -> IdentityReport;

/// Identity ids in report order.
pub const CATALOGUE: [&str; 24] = [
    "recurrence.bidirectional",
    "small-steps.two",
    "small-steps.three",
    "small-steps.four",
    "coefficients.table",
    "coefficients.signed-extension",
    "rho.padovan-type",
    "sigma.recurrence",
    "rho.closed-form",
    "sigma.negated-rho",
    "rho.three-forms",
    "decimation.general",
    "decimation.worked-examples",
    "decimation.third-remark",
    "certificate.soundness",
    "certificate.worked-example",
    "strategies.equivalence",
    "folded.round-trip",
    "folded.q-identity",
    "folded.parity",
    "sums.three-columns",
    "sums.four-columns",
    "sums.4k-closed",
    "sums.4k-divisibility",
];

fn catalogue() -> [IdentityFn; 24] {
    [
        recurrence_bidirectional,
        |c| small_step(c, "small-steps.two", 2, [2, -1, 1]),
        |c| small_step(c, "small-steps.three", 3, [3, -2, 1]),
        |c| small_step(c, "small-steps.four", 4, [2, 3, 1]),
        coefficient_table,
        signed_extension,
        rho_padovan_type,
        sigma_recurrence,
        rho_closed_form,
        sigma_negated_rho,
        rho_three_forms,
        decimation_general,
        decimation_worked_examples,
        decimation_third_remark,
        certificate_soundness,
        certificate_worked_example,
        strategy_equivalence,
        folded_round_trip,
        folded_q_identity,
        folded_parity,
        sums_three_columns,
        sums_four_columns,
        sums_4k_closed,
        sums_4k_divisibility,
    ]
}

pub fn run_suite(config: &SuiteConfig) -> Vec<IdentityReport> {
    catalogue().par_iter().map(|f| f(config)).collect()
}

fn int(v: i64) -> Result<Integer> {
    Ok(Integer::from(v))
}

fn recurrence_bidirectional(c: &SuiteConfig) -> IdentityReport {
    let span = c.recurrence;
    let mut ck = Checker::new("recurrence.bidirectional", span.to_string());
    let slab = match Slab::new(span.lo - 3, span.hi, c.cap) {
        Ok(s) => s,
        Err(e) => {
            ck.check(|| span.to_string(), Err::<Integer, _>(e.clone()), Err(e));
            return ck.finish();
        }
    };
    for n in span.iter() {
        // Forward from P(n-3), P(n-2); backward from P(n), P(n-2).
        let forward = slab.at(n - 2) + slab.at(n - 3);
        ck.check(|| format!("n={n} forward"), Ok(slab.at(n).clone()), Ok(forward));
        let backward = slab.at(n) - slab.at(n - 2);
        ck.check(|| format!("n={n} backward"), Ok(slab.at(n - 3).clone()), Ok(backward));
        let direct = pad::<Integer>(n, c.cap);
        ck.check(|| format!("n={n} direct"), Ok(slab.at(n).clone()), direct);
    }
    ck.finish()
}

/// `P(n) = k0 P(n-s) + k1 P(n-2s) + k2 P(n-3s)`.
fn small_step(c: &SuiteConfig, id: &str, step: i64, k: [i64; 3]) -> IdentityReport {
    let span = c.small_steps;
    let mut ck = Checker::new(id, span.to_string());
    let Ok(slab) = Slab::new(span.lo - 3 * step, span.hi, c.cap) else {
        return ck.finish();
    };
    for n in span.iter() {
        let rhs = slab.at(n - step) * k[0] + slab.at(n - 2 * step) * k[1] + slab.at(n - 3 * step) * k[2];
        ck.check(|| format!("n={n}"), Ok(slab.at(n).clone()), Ok(rhs));
    }
    ck.finish()
}

const COEFFICIENT_TABLE: [(i64, i64); 8] = [(0, 1), (2, -1), (3, -2), (2, 3), (5, -4), (5, 2), (7, 1), (10, -5)];
const SIGNED_RHO: [i64; 9] = [5, -1, -2, 4, -3, 2, 1, -1, 3];

fn coefficient_table(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("coefficients.table", "1..8");
    for (a, (r, s)) in (1..).zip(COEFFICIENT_TABLE) {
        ck.check(|| format!("rho({a})"), int(r), decimation::rho(a, c.cap));
        ck.check(|| format!("sigma({a})"), int(s), decimation::sigma(a, c.cap));
    }
    ck.finish()
}

fn signed_extension(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("coefficients.signed-extension", "-8..0");
    for (a, r) in (-8..).zip(SIGNED_RHO) {
        ck.check(|| format!("rho({a})"), int(r), decimation::rho(a, c.cap));
    }
    ck.finish()
}

fn rho_padovan_type(c: &SuiteConfig) -> IdentityReport {
    let span = c.coefficient_steps;
    let mut ck = Checker::new("rho.padovan-type", span.to_string());
    for a in span.iter() {
        let rhs = decimation::rho::<Integer>(a + 1, c.cap).and_then(|x| Ok(x + decimation::rho::<Integer>(a, c.cap)?));
        ck.check(|| format!("a={a}"), decimation::rho(a + 3, c.cap), rhs);
    }
    ck.finish()
}

fn sigma_recurrence(c: &SuiteConfig) -> IdentityReport {
    let span = c.coefficient_steps;
    let mut ck = Checker::new("sigma.recurrence", span.to_string());
    for a in span.iter() {
        let rhs =
            decimation::sigma::<Integer>(a, c.cap).and_then(|x| Ok(x - decimation::sigma::<Integer>(a + 2, c.cap)?));
        ck.check(|| format!("a={a}"), decimation::sigma(a + 3, c.cap), rhs);
    }
    ck.finish()
}

/// `rho(a) = 3 P(a-2) - P(a-4)` against the Padovan-type sequence with
/// initials `0, 2, 3`.
fn rho_closed_form(c: &SuiteConfig) -> IdentityReport {
    let span = c.coefficient_steps;
    let mut ck = Checker::new("rho.closed-form", span.to_string());
    let seq = PadovanType::<Integer>::rho_sequence();
    for a in span.iter() {
        ck.check(|| format!("a={a}"), seq.value(a, c.cap), decimation::rho(a, c.cap));
    }
    ck.finish()
}

fn sigma_negated_rho(c: &SuiteConfig) -> IdentityReport {
    let span = c.coefficient_steps;
    let mut ck = Checker::new("sigma.negated-rho", span.to_string());
    let seq = PadovanType::<Integer>::rho_sequence();
    for a in span.iter() {
        ck.check(|| format!("a={a}"), seq.value(-a, c.cap).map(|r| -r), decimation::sigma(a, c.cap));
    }
    ck.finish()
}

fn rho_three_forms(c: &SuiteConfig) -> IdentityReport {
    let span = c.three_forms;
    let mut ck = Checker::new("rho.three-forms", span.to_string());
    for a in span.iter() {
        match rho_forms::<Integer>(a, c.cap) {
            Ok([six, three, lead]) => {
                ck.check(|| format!("a={a} successive"), Ok(six.clone()), Ok(three));
                ck.check(|| format!("a={a} leading"), Ok(six), Ok(lead));
            }
            Err(e) => ck.check(|| format!("a={a}"), Err::<Integer, _>(e.clone()), Err(e)),
        }
    }
    ck.finish()
}

fn decimation_general(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("decimation.general", format!("n {} x a {}", c.decimation_n, c.decimation_a));
    for n in c.decimation_n.iter() {
        let expected = pad::<Integer>(n, c.cap);
        for a in c.decimation_a.iter() {
            ck.check(|| format!("n={n} a={a}"), expected.clone(), decimated_eval(n, a, c.cap));
        }
    }
    ck.finish()
}

fn decimation_worked_examples(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("decimation.worked-examples", "P40 via a=10,8; P56 via a=18");
    ck.check(|| "n=40 a=10".into(), int(55405), decimated_eval(40, 10, c.cap));
    ck.check(|| "n=40 a=8".into(), int(55405), decimated_eval(40, 8, c.cap));
    ck.check(|| "n=40 column walk a=10".into(), int(55405), column_walk_eval(40, 10, c.cap));
    ck.check(|| "n=56 a=18".into(), pad(56, c.cap), decimated_eval(56, 18, c.cap));
    ck.finish()
}

fn decimation_third_remark(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("decimation.third-remark", format!("3..{}", c.remark_max_n));
    ck.check(|| "n=26".into(), int(1081), third_remark_eval(26, c.cap));
    for n in 3..=c.remark_max_n {
        ck.check(|| format!("n={n}"), pad(n, c.cap), third_remark_eval(n, c.cap));
    }
    ck.finish()
}

fn certificate_soundness(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new(
        "certificate.soundness",
        format!("{} samples, 1 <= a <= n <= {}, seed {}", c.certificate_samples, c.certificate_max_n, c.seed),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for _ in 0..c.certificate_samples {
        let n = rng.gen_range(1..=c.certificate_max_n);
        let a = rng.gen_range(1..=n);
        let got = reduce_to_head::<Integer>(n, a, c.cap).and_then(|cert| eval_via_certificate(&cert, c.cap));
        ck.check(|| format!("n={n} a={a}"), pad(n, c.cap), got);
    }
    ck.finish()
}

fn certificate_worked_example(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("certificate.worked-example", "n=38 a=7");
    match reduce_to_head::<Integer>(38, 7, c.cap) {
        Ok(cert) => {
            for (name, (want, got)) in ["c2", "c1", "c0"].iter().zip([358, 57, 50].into_iter().zip(cert.coeffs.clone()))
            {
                ck.check(|| (*name).to_string(), int(want), Ok(got));
            }
            ck.check(|| "value".into(), int(31572), eval_via_certificate(&cert, c.cap));
        }
        Err(e) => ck.check(|| "reduce".into(), int(31572), Err(e)),
    }
    ck.finish()
}

fn strategy_equivalence(c: &SuiteConfig) -> IdentityReport {
    let extra: Vec<String> = c.strategy_extra.iter().map(|n| n.to_string()).collect();
    let mut ck =
        Checker::new("strategies.equivalence", format!("0..{} and {{{}}}", c.strategy_max_n, extra.join(", ")));
    let indices: Vec<i64> = (0..=c.strategy_max_n).chain(c.strategy_extra.iter().copied()).collect();
    for n in indices {
        let expected = decimation::iterative_eval::<Integer>(n, c.cap);
        ck.check(|| format!("n={n} matrix"), expected.clone(), matrix_pow_eval(n, c.cap));
        ck.check(|| format!("n={n} trisect"), expected, trisection_eval(n, c.cap));
    }
    ck.finish()
}

fn folded_round_trip(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("folded.round-trip", format!("0..{}", c.fold_max_n));
    for n in 0..=c.fold_max_n {
        let recovered = folded::<Integer>(n, c.cap).and_then(|p| recover(&p));
        let (fwd, back) = match recovered {
            Ok((f, b)) => (Ok(f), Ok(b)),
            Err(e) => (Err(e.clone()), Err(e)),
        };
        ck.check(|| format!("n={n} P(n)"), pad(n, c.cap), fwd);
        ck.check(|| format!("n={n} P(-n)"), pad(-n, c.cap), back);
    }
    ck.finish()
}

fn folded_q_identity(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("folded.q-identity", format!("3..{}", c.fold_max_n));
    ck.check(|| "P7 = Q6 + Q5 - Q3".into(), int(5), q_identity_check(6, c.cap));
    for n in 3..=c.fold_max_n {
        ck.check(|| format!("n={n}"), pad(n + 1, c.cap), q_identity_check(n, c.cap));
    }
    ck.finish()
}

fn folded_parity(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("folded.parity", format!("0..{}", c.fold_max_n));
    for n in 0..=c.fold_max_n {
        let parity = folded::<Integer>(n, c.cap).map(|p| (p.q + p.r) % 2u32);
        ck.check(|| format!("n={n}"), int(0), parity);
    }
    ck.finish()
}

fn sums_three_columns(c: &SuiteConfig) -> IdentityReport {
    sum_recurrence(c, "sums.three-columns", 3, r3_step)
}

fn sums_four_columns(c: &SuiteConfig) -> IdentityReport {
    sum_recurrence(c, "sums.four-columns", 4, r4_step)
}

fn sum_recurrence(
    c: &SuiteConfig,
    id: &str,
    columns: i64,
    step: fn(i64, [&Integer; 3]) -> Result<Integer>,
) -> IdentityReport {
    let mut ck = Checker::new(id, format!("b 1..{columns}, m 3..{}", c.sum_max_m));
    for b in 1..=columns {
        let sums = match column_sums::<Integer>(columns, b, c.sum_max_m, c.cap) {
            Ok(s) => s,
            Err(e) => {
                ck.check(|| format!("b={b}"), Err::<Integer, _>(e.clone()), Err(e));
                continue;
            }
        };
        for m in 3..sums.len() {
            let got = step(b, [&sums[m - 1], &sums[m - 2], &sums[m - 3]]);
            ck.check(|| format!("b={b} m={m}"), Ok(sums[m].clone()), got);
        }
    }
    ck.finish()
}

fn sums_4k_closed(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("sums.4k-closed", format!("0..{}", c.sum_4k_max_m));
    let mut direct = Integer::from(0);
    for m in 0..=c.sum_4k_max_m {
        match pad::<Integer>(4 * m, c.cap) {
            Ok(p) => direct += p,
            Err(e) => {
                ck.check(|| format!("m={m}"), Err::<Integer, _>(e.clone()), Err(e));
                break;
            }
        }
        ck.check(|| format!("m={m}"), Ok(direct.clone()), sum_4k_closed(m, c.cap));
    }
    ck.finish()
}

fn sums_4k_divisibility(c: &SuiteConfig) -> IdentityReport {
    let mut ck = Checker::new("sums.4k-divisibility", format!("0..{}", c.sum_4k_max_m));
    for m in 0..=c.sum_4k_max_m {
        let numerator = (|| -> Result<Integer> {
            Ok(pad::<Integer>(4 * m + 4, c.cap)?
                + pad::<Integer>(4 * m, c.cap)? * 4
                + pad::<Integer>(4 * m - 4, c.cap)?
                - 1)
        })();
        ck.check(|| format!("m={m}"), int(0), numerator.map(|x| x % 5));
    }
    ck.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> SuiteConfig {
        SuiteConfig {
            recurrence: Span::new(-20, 40),
            small_steps: Span::new(-10, 40),
            coefficient_steps: Span::new(-10, 10),
            three_forms: Span::new(-10, 10),
            decimation_n: Span::new(-10, 45),
            decimation_a: Span::new(-4, 12),
            certificate_samples: 20,
            certificate_max_n: 200,
            strategy_max_n: 100,
            strategy_extra: vec![1000],
            fold_max_n: 40,
            remark_max_n: 40,
            sum_max_m: 20,
            sum_4k_max_m: 20,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn catalogue_ids_match_reports() {
        let reports = run_suite(&tiny());
        let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, CATALOGUE);
        for r in &reports {
            assert!(r.passed(), "{} failed: {:?}", r.id, r.failures.first());
        }
    }

    #[test]
    fn decimation_report_covers_p40() {
        let reports = run_suite(&tiny());
        let worked = reports.iter().find(|r| r.id == "decimation.worked-examples").unwrap();
        assert!(worked.checked >= 2 && worked.failures.is_empty());
        let general = reports.iter().find(|r| r.id == "decimation.general").unwrap();
        assert_eq!(general.checked, 56 * 17);
    }

    #[test]
    fn failures_are_recorded_not_raised() {
        let mut ck = Checker::new("x", "-");
        ck.check(|| "a".into(), int(1), int(2));
        ck.check(|| "b".into(), int(1), int(1));
        let r = ck.finish();
        assert_eq!(r.checked, 2);
        assert_eq!(r.failures, [Failure { inputs: "a".into(), expected: "1".into(), got: "2".into() }]);
    }

    #[test]
    fn seeded_runs_are_identical() {
        let a = serde_json::to_string(&run_suite(&tiny())).unwrap();
        let b = serde_json::to_string(&run_suite(&tiny())).unwrap();
        assert_eq!(a, b);
    }
}
