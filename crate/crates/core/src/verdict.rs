use std::fmt::Display;

use serde::{Deserialize, Serialize};

/// One failing case inside a [`Verdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of an identity check. Checks record failures instead of
/// panicking so that sweeps can aggregate them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn expect_eq<T: PartialEq + Display>(
        &mut self,
        case: impl Display,
        expected: &T,
        actual: &T,
    ) -> bool {
        self.cases += 1;
        let ok = expected == actual;
        if !ok {
            self.failures.push(Failure {
                case: case.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        ok
    }

    pub fn require(&mut self, case: impl Display, ok: bool, detail: impl Display) -> bool {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                case: case.to_string(),
                expected: "true".into(),
                actual: detail.to_string(),
            });
        }
        ok
    }

    /// Folds another verdict's counts and failures into this one.
    pub fn absorb(&mut self, other: Verdict) {
        self.cases += other.cases;
        self.failures.extend(other.failures.into_iter().map(|mut f| {
            f.case = format!("{}: {}", other.check, f.case);
            f
        }));
    }
}
