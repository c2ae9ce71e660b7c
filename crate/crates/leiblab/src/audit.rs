//! Shared result types for executable theorem audits.

use std::fmt;

/// Outcome of one audited claim. Hypothesis-failing instances are reported
/// as `Skip` (never silently as passes); `Skip` also carries open-question
/// observations that are logged rather than failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One line of an audit report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditItem {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl AuditItem {
    pub fn pass(name: &str, detail: impl Into<String>) -> AuditItem {
        AuditItem {
            name: name.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> AuditItem {
        AuditItem {
            name: name.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    pub fn skip(name: &str, detail: impl Into<String>) -> AuditItem {
        AuditItem {
            name: name.into(),
            status: Status::Skip,
            detail: detail.into(),
        }
    }

    pub fn check(name: &str, ok: bool, detail: impl Into<String>) -> AuditItem {
        if ok {
            AuditItem::pass(name, detail)
        } else {
            AuditItem::fail(name, detail)
        }
    }
}

/// True iff every line is pass-or-skip.
pub fn all_pass_or_skip(items: &[AuditItem]) -> bool {
    items.iter().all(|i| i.status != Status::Fail)
}
