use serde::Serialize;

use super::{find_identity, Expected, Params, Status, VariantKind, VerificationOutcome};

/// One discrepancy: an outcome that failed, errored, or contradicted its
/// expectation, together with the corrected sibling when there is one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LedgerRecord {
    pub identity: String,
    pub variant: VariantKind,
    pub params: Params,
    /// Value of the stated (right-hand) side.
    pub printed_value: f64,
    /// Value of the independently summed (left-hand) side.
    pub computed_value: f64,
    pub abs_residual: f64,
    pub status: Status,
    pub expected_status: Expected,
    pub corrected_form: Option<String>,
    pub corrected_value: Option<f64>,
    pub corrected_status: Option<Status>,
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Ledger {
    pub records: Vec<LedgerRecord>,
}

fn belongs(o: &VerificationOutcome) -> bool {
    match o.status {
        Status::Error | Status::Fail => true,
        Status::Pass => o.expected_status == Expected::Fail,
    }
}

impl Ledger {
    /// Collects discrepancies from a run, keeping the run's order.
    pub fn from_outcomes(outcomes: &[VerificationOutcome]) -> Self {
        let records = outcomes
            .iter()
            .filter(|o| belongs(o))
            .map(|o| {
                let record = find_identity(&o.identity).ok();
                let variant_note = record
                    .and_then(|r| r.variant(o.variant))
                    .map(|v| v.note.to_string())
                    .unwrap_or_default();
                let sibling = (o.variant != VariantKind::Corrected)
                    .then(|| {
                        outcomes.iter().find(|c| {
                            c.identity == o.identity
                                && c.variant == VariantKind::Corrected
                                && c.params == o.params
                        })
                    })
                    .flatten();
                let corrected_form = sibling.and_then(|_| {
                    record.and_then(|r| r.variant(VariantKind::Corrected)).map(|v| v.note.to_string())
                });
                let mut note = variant_note;
                if let Some(msg) = &o.message {
                    if !note.is_empty() {
                        note.push_str("; ");
                    }
                    note.push_str(msg);
                }
                LedgerRecord {
                    identity: o.identity.clone(),
                    variant: o.variant,
                    params: o.params.clone(),
                    printed_value: o.rhs,
                    computed_value: o.lhs,
                    abs_residual: o.abs_residual,
                    status: o.status,
                    expected_status: o.expected_status,
                    corrected_form,
                    corrected_value: sibling.map(|c| c.rhs),
                    corrected_status: sibling.map(|c| c.status),
                    note,
                }
            })
            .collect();
        Ledger { records }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn contains(&self, identity: &str, variant: VariantKind) -> bool {
        self.records.iter().any(|r| r.identity == identity && r.variant == variant)
    }

    /// Markdown table, one row per record.
    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| identity | variant | params | stated side | summed side | residual | status | expected | corrected value | corrected status | note |\n\
             |---|---|---|---|---|---|---|---|---|---|---|\n",
        );
        let num = |v: f64| if v.is_finite() { format!("{v:.15e}") } else { "—".to_string() };
        for r in &self.records {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
                r.identity,
                r.variant,
                r.params,
                num(r.printed_value),
                num(r.computed_value),
                if r.abs_residual.is_finite() { format!("{:.3e}", r.abs_residual) } else { "—".into() },
                r.status,
                r.expected_status,
                r.corrected_value.map(num).unwrap_or_else(|| "—".into()),
                r.corrected_status.map(|s| s.to_string()).unwrap_or_else(|| "—".into()),
                r.note.replace('|', "\\|"),
            ));
        }
        out
    }
}
