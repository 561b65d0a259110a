//! Registry of hyperbolic-series identities, each evaluated side by side.
//!
//! Every [`IdentityRecord`] carries one or more [`Variant`]s: the formula as
//! printed in its source, a corrected form where the printed one is wrong,
//! closed forms derived independently, and auxiliary consistency checks.
//! Evaluating a variant yields a [`VerificationOutcome`]; outcomes that fail
//! or disagree with their expected status are collected in a [`Ledger`].

mod entries;
mod ledger;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{sum_alternating, sum_series, SeriesResult, SumOptions};
use crate::special::alternating_accelerated;

pub use entries::constant_erratum;
pub use ledger::{Ledger, LedgerRecord};

/// Parameter assignment, ordered by name so output is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, f64>);

impl Params {
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn insert(&mut self, name: &str, value: f64) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.get(name).copied()
    }

    pub fn real(&self, name: &str) -> Result<f64> {
        self.get(name)
            .ok_or_else(|| Error::Parameter(format!("missing parameter `{name}`")))
    }

    pub fn int(&self, name: &str) -> Result<usize> {
        let v = self.real(name)?;
        if v < 0.0 || v.fract() != 0.0 {
            return Err(Error::Parameter(format!("`{name}` must be a non-negative integer, got {v}")));
        }
        Ok(v as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParamDomain {
    Integer { min: u32, max: u32 },
    /// Real in the half-open interval `(0, max]`.
    Positive { max: f64 },
    /// Real in `[0, max]`.
    NonNegative { max: f64 },
    /// Real in `[min, max]`.
    Interval { min: f64, max: f64 },
}

impl ParamDomain {
    fn check(&self, name: &str, v: f64) -> Result<()> {
        let ok = v.is_finite()
            && match *self {
                ParamDomain::Integer { min, max } => {
                    v.fract() == 0.0 && v >= min as f64 && v <= max as f64
                }
                ParamDomain::Positive { max } => v > 0.0 && v <= max,
                ParamDomain::NonNegative { max } => (0.0..=max).contains(&v),
                ParamDomain::Interval { min, max } => (min..=max).contains(&v),
            };
        if ok {
            Ok(())
        } else {
            Err(Error::Parameter(format!("`{name}` = {v} is outside its domain {self}")))
        }
    }
}

impl fmt::Display for ParamDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParamDomain::Integer { min, max } => write!(f, "integer {min}..={max}"),
            ParamDomain::Positive { max } => write!(f, "real (0, {max}]"),
            ParamDomain::NonNegative { max } => write!(f, "real [0, {max}]"),
            ParamDomain::Interval { min, max } => write!(f, "real [{min}, {max}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: ParamDomain,
    pub default: f64,
    /// Values visited by a full run; always contains `default`.
    pub grid: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantKind {
    AsPrinted,
    Corrected,
    DerivedClosedForm,
    Aux,
}

impl VariantKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VariantKind::AsPrinted => "as_printed",
            VariantKind::Corrected => "corrected",
            VariantKind::DerivedClosedForm => "derived_closed_form",
            VariantKind::Aux => "aux",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::AsPrinted, Self::Corrected, Self::DerivedClosedForm, Self::Aux]
            .into_iter()
            .find(|k| k.as_str() == s)
    }
}

impl fmt::Display for VariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Pass,
    Fail,
    Unverified,
}

impl Expected {
    pub fn as_str(self) -> &'static str {
        match self {
            Expected::Pass => "pass",
            Expected::Fail => "fail",
            Expected::Unverified => "unverified",
        }
    }

    /// Whether `status` agrees with this expectation. Unverified accepts
    /// any completed evaluation; an evaluation error never matches.
    pub fn matches(self, status: Status) -> bool {
        match (self, status) {
            (_, Status::Error) => false,
            (Expected::Unverified, _) => true,
            (Expected::Pass, Status::Pass) | (Expected::Fail, Status::Fail) => true,
            _ => false,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Pass criterion `|lhs − rhs| ≤ abs_tol + rel_tol·max(|lhs|, |rhs|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Term cap for each series evaluated by the catalog.
    pub max_terms: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { abs_tol: 1e-10, rel_tol: 1e-9, max_terms: 100_000 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) || !self.abs_tol.is_finite() || !self.rel_tol.is_finite() {
            return Err(Error::InvalidOptions(format!(
                "tolerances must be positive and finite (abs {}, rel {})",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidOptions("max_terms must be at least 1".into()));
        }
        Ok(())
    }

    pub fn passes(&self, lhs: f64, rhs: f64) -> bool {
        let (abs, _) = residuals(lhs, rhs);
        abs <= self.abs_tol + self.rel_tol * lhs.abs().max(rhs.abs())
    }
}

/// `(|lhs − rhs|, |lhs − rhs| / max(|lhs|, |rhs|, 1))`; symmetric in its arguments.
pub fn residuals(lhs: f64, rhs: f64) -> (f64, f64) {
    let abs = (lhs - rhs).abs();
    (abs, abs / lhs.abs().max(rhs.abs()).max(1.0))
}

/// Summation context handed to the side evaluators.
#[derive(Debug, Clone, Copy)]
pub struct EvalCtx {
    pub opts: SumOptions,
}

impl EvalCtx {
    pub fn new(tol: &Tolerances) -> Self {
        EvalCtx {
            opts: SumOptions {
                rel_tol: 1e-15,
                abs_tol: 1e-17,
                max_terms: tol.max_terms,
                consecutive_small: 3,
            },
        }
    }

    fn finish(s: SeriesResult, what: &str) -> Result<SeriesResult> {
        if s.converged {
            Ok(s)
        } else {
            Err(Error::NotConverged { what: what.to_string(), terms: s.terms_used })
        }
    }

    /// `Σ_{k≥start} term(k)`, failing unless the tail is below tolerance.
    pub fn series<F: Fn(usize) -> f64>(&self, start: usize, term: F) -> Result<SeriesResult> {
        Self::finish(sum_series(start, term, &self.opts)?, "series")
    }

    /// `Σ_{k≥start} (−1)^{k−start} a(k)`.
    pub fn alternating<F: Fn(usize) -> f64>(&self, start: usize, a: F) -> Result<SeriesResult> {
        Self::finish(sum_alternating(start, a, &self.opts)?, "alternating series")
    }

    /// Alternating sum whose terms may decay only algebraically: summed
    /// directly when that converges within the term cap, otherwise by
    /// convergence acceleration with the spread of two orders as error.
    pub fn alternating_smooth<F: Fn(usize) -> f64>(&self, start: usize, a: F) -> Result<SeriesResult> {
        let direct = sum_alternating(start, &a, &self.opts)?;
        if direct.converged {
            return Ok(direct);
        }
        let shifted = |k: usize| a(k + start);
        let fine = alternating_accelerated(shifted, 48);
        let coarse = alternating_accelerated(shifted, 36);
        if !fine.is_finite() {
            return Err(Error::NonFinite { at: start as f64, value: fine });
        }
        Ok(SeriesResult {
            value: fine,
            tail_estimate: (fine - coarse).abs(),
            terms_used: 48,
            converged: true,
            abs_sum: fine.abs(),
        })
    }
}

/// Evaluates one side of an identity.
pub type SideFn = fn(&Params, &EvalCtx) -> Result<SeriesResult>;

pub struct Variant {
    pub kind: VariantKind,
    pub lhs: SideFn,
    pub rhs: SideFn,
    pub expected: fn(&Params) -> Expected,
    /// For corrected variants: the exact change against the printed form.
    pub note: &'static str,
}

impl fmt::Debug for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Variant").field("kind", &self.kind).field("note", &self.note).finish_non_exhaustive()
    }
}

#[derive(Debug)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub title: &'static str,
    /// The identity in plain text, `lhs = rhs`.
    pub formula: &'static str,
    pub params: Vec<ParamSpec>,
    pub variants: Vec<Variant>,
    pub notes: &'static str,
}

impl IdentityRecord {
    pub fn variant(&self, kind: VariantKind) -> Option<&Variant> {
        self.variants.iter().find(|v| v.kind == kind)
    }

    pub fn defaults(&self) -> Params {
        let mut p = Params::new();
        for spec in &self.params {
            p.insert(spec.name, spec.default);
        }
        p
    }

    /// Cartesian product of the parameter grids, in lexicographic order.
    pub fn grid(&self) -> Vec<Params> {
        let mut points = vec![Params::new()];
        for spec in &self.params {
            points = points
                .into_iter()
                .flat_map(|p| spec.grid.iter().map(move |&v| p.clone().with(spec.name, v)))
                .collect();
        }
        points
    }

    /// Defaults overlaid with `overrides`, each checked against its domain.
    pub fn resolve(&self, overrides: &Params) -> Result<Params> {
        let mut p = self.defaults();
        for (name, v) in overrides.iter() {
            let spec = self.params.iter().find(|s| s.name == name).ok_or_else(|| {
                Error::Parameter(format!("identity `{}` has no parameter `{name}`", self.id))
            })?;
            spec.domain.check(name, v)?;
            p.insert(name, v);
        }
        Ok(p)
    }

    pub fn summary(&self) -> IdentitySummary {
        let defaults = self.defaults();
        IdentitySummary {
            id: self.id,
            title: self.title,
            formula: self.formula,
            params: self.params.clone(),
            variants: self
                .variants
                .iter()
                .map(|v| VariantSummary {
                    name: v.kind.as_str(),
                    expected_at_defaults: (v.expected)(&defaults),
                    note: v.note,
                })
                .collect(),
            notes: self.notes,
        }
    }
}

/// Serializable view of an [`IdentityRecord`].
#[derive(Debug, Clone, Serialize)]
pub struct IdentitySummary {
    pub id: &'static str,
    pub title: &'static str,
    pub formula: &'static str,
    pub params: Vec<ParamSpec>,
    pub variants: Vec<VariantSummary>,
    pub notes: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct VariantSummary {
    pub name: &'static str,
    pub expected_at_defaults: Expected,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub identity: String,
    pub variant: VariantKind,
    pub params: Params,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub status: Status,
    pub expected_status: Expected,
    pub elapsed_ms: f64,
    /// Error text when `status` is `Error`.
    pub message: Option<String>,
}

impl VerificationOutcome {
    pub fn matches_expectation(&self) -> bool {
        self.expected_status.matches(self.status)
    }
}

/// All registered identities in stable order.
pub fn list_identities() -> &'static [IdentityRecord] {
    entries::registry()
}

pub fn find_identity(id: &str) -> Result<&'static IdentityRecord> {
    list_identities()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn evaluate(record: &IdentityRecord, variant: &Variant, params: Params, tol: &Tolerances) -> VerificationOutcome {
    let ctx = EvalCtx::new(tol);
    let start = Instant::now();
    let sides = (variant.lhs)(&params, &ctx).and_then(|l| (variant.rhs)(&params, &ctx).map(|r| (l, r)));
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let expected_status = (variant.expected)(&params);
    match sides {
        Ok((l, r)) => {
            let (abs_residual, rel_residual) = residuals(l.value, r.value);
            let status = if tol.passes(l.value, r.value) { Status::Pass } else { Status::Fail };
            VerificationOutcome {
                identity: record.id.to_string(),
                variant: variant.kind,
                params,
                lhs: l.value,
                rhs: r.value,
                abs_residual,
                rel_residual,
                status,
                expected_status,
                elapsed_ms,
                message: None,
            }
        }
        Err(e) => VerificationOutcome {
            identity: record.id.to_string(),
            variant: variant.kind,
            params,
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            status: Status::Error,
            expected_status,
            elapsed_ms,
            message: Some(e.to_string()),
        },
    }
}

/// Evaluates one variant at the defaults overlaid with `overrides`.
///
/// Unknown identities, variants, or out-of-domain parameters are errors;
/// evaluation failures are reported in the outcome with `Status::Error`.
pub fn verify(id: &str, variant: VariantKind, overrides: &Params, tol: &Tolerances) -> Result<VerificationOutcome> {
    tol.validate()?;
    let record = find_identity(id)?;
    let v = record.variant(variant).ok_or_else(|| Error::UnknownVariant {
        id: id.to_string(),
        variant: variant.as_str().to_string(),
    })?;
    let params = record.resolve(overrides)?;
    Ok(evaluate(record, v, params, tol))
}

/// Which (identity, variant, parameter) combinations a run visits.
#[derive(Debug, Clone, Default)]
pub struct Selection {
    /// Identity ids; empty selects every identity.
    pub ids: Vec<String>,
    pub variant: Option<VariantKind>,
    /// Fixed parameter values replacing the grid of the named parameter.
    /// Identities without that parameter ignore it.
    pub overrides: Params,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub outcomes: Vec<VerificationOutcome>,
    pub ledger: Ledger,
}

impl RunReport {
    pub fn all_match(&self) -> bool {
        self.outcomes.iter().all(VerificationOutcome::matches_expectation)
    }

    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.status == Status::Pass)
    }
}

/// Expands `selection` into evaluation jobs in deterministic order.
fn jobs(selection: &Selection) -> Result<Vec<(&'static IdentityRecord, &'static Variant, Params)>> {
    let records: Vec<&IdentityRecord> = if selection.ids.is_empty() {
        list_identities().iter().collect()
    } else {
        selection.ids.iter().map(|id| find_identity(id)).collect::<Result<_>>()?
    };
    let mut out = Vec::new();
    for record in records {
        let mut points = record.grid();
        let mut touched = false;
        for (name, v) in selection.overrides.iter() {
            if let Some(spec) = record.params.iter().find(|s| s.name == name) {
                spec.domain.check(name, v)?;
                touched = true;
                for p in points.iter_mut() {
                    p.insert(name, v);
                }
            }
        }
        if touched {
            let mut unique: Vec<Params> = Vec::with_capacity(points.len());
            for p in points {
                if !unique.contains(&p) {
                    unique.push(p);
                }
            }
            points = unique;
        }
        let variants: Vec<&Variant> = match selection.variant {
            Some(kind) => match record.variant(kind) {
                Some(v) => vec![v],
                None if selection.ids.is_empty() => continue,
                None => {
                    return Err(Error::UnknownVariant {
                        id: record.id.to_string(),
                        variant: kind.as_str().to_string(),
                    })
                }
            },
            None => record.variants.iter().collect(),
        };
        for v in variants {
            for p in &points {
                out.push((record, v, p.clone()));
            }
        }
    }
    Ok(out)
}

/// Runs `selection` on `threads` workers. Output order and values do not
/// depend on the worker count.
pub fn run(selection: &Selection, tol: &Tolerances, threads: usize) -> Result<RunReport> {
    tol.validate()?;
    if threads == 0 {
        return Err(Error::InvalidOptions("worker count must be at least 1".into()));
    }
    let work = jobs(selection)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidOptions(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<VerificationOutcome> = pool.install(|| {
        work.par_iter()
            .map(|(record, variant, params)| evaluate(record, variant, params.clone(), tol))
            .collect()
    });
    let ledger = Ledger::from_outcomes(&outcomes);
    Ok(RunReport { outcomes, ledger })
}

/// Every identity and variant over its full parameter grid.
pub fn verify_all(tol: &Tolerances, threads: usize) -> Result<RunReport> {
    run(&Selection::default(), tol, threads)
}
