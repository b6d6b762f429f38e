//! Check reports shared by every validation and verification routine.
//!
//! A check never panics on bad mathematical input: it records each violated
//! axiom instance. `Inconclusive` is reserved for bounded searches that ran
//! out of budget; it is never folded into `Pass`.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// violating instance / reason / witness description, empty when passing
    pub details: Vec<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Pass,
            details: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Fail,
            details: vec![detail.into()],
        }
    }

    pub fn inconclusive(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Inconclusive,
            details: vec![detail.into()],
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Skipped,
            details: vec![reason.into()],
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Records a pass, or a fail carrying the violating instances.
    pub fn check(&mut self, name: impl Into<String>, violations: Vec<String>) {
        let name = name.into();
        if violations.is_empty() {
            self.push(Check::pass(name));
        } else {
            self.push(Check {
                name,
                status: Status::Fail,
                details: violations,
            });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn any_inconclusive(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Inconclusive)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Budget for the bounded searches (isomorphism hunting, density checks,
/// division-algebra enumeration). Exhaustive enumeration is used when the
/// candidate count fits the budget; otherwise a deterministic seeded sample is
/// drawn and a failed search reports `Inconclusive`, never `Pass`.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_enumeration: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            max_enumeration: 1_000_000,
            samples: 10_000,
            seed: 0,
        }
    }
}
