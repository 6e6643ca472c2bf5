use std::fmt;
use std::ops::Not;

use serde::Serialize;

/// Three-valued truth for decisions that may be undetermined on the
/// declared atom environment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriBool {
    Yes,
    No,
    Unknown,
}

impl TriBool {
    pub fn and(self, other: TriBool) -> TriBool {
        match (self, other) {
            (TriBool::No, _) | (_, TriBool::No) => TriBool::No,
            (TriBool::Yes, TriBool::Yes) => TriBool::Yes,
            _ => TriBool::Unknown,
        }
    }

    pub fn or(self, other: TriBool) -> TriBool {
        match (self, other) {
            (TriBool::Yes, _) | (_, TriBool::Yes) => TriBool::Yes,
            (TriBool::No, TriBool::No) => TriBool::No,
            _ => TriBool::Unknown,
        }
    }

    /// Kleene disjunction over an iterator; `No` for an empty iterator.
    pub fn any<I: IntoIterator<Item = TriBool>>(iter: I) -> TriBool {
        let mut acc = TriBool::No;
        for t in iter {
            acc = acc.or(t);
            if acc == TriBool::Yes {
                break;
            }
        }
        acc
    }

    /// Kleene conjunction over an iterator; `Yes` for an empty iterator.
    pub fn all<I: IntoIterator<Item = TriBool>>(iter: I) -> TriBool {
        let mut acc = TriBool::Yes;
        for t in iter {
            acc = acc.and(t);
            if acc == TriBool::No {
                break;
            }
        }
        acc
    }

    pub fn is_yes(self) -> bool {
        self == TriBool::Yes
    }

    pub fn is_no(self) -> bool {
        self == TriBool::No
    }

    pub fn is_unknown(self) -> bool {
        self == TriBool::Unknown
    }

    /// `Some(bool)` when decided.
    pub fn known(self) -> Option<bool> {
        match self {
            TriBool::Yes => Some(true),
            TriBool::No => Some(false),
            TriBool::Unknown => None,
        }
    }
}

impl From<bool> for TriBool {
    fn from(b: bool) -> Self {
        if b {
            TriBool::Yes
        } else {
            TriBool::No
        }
    }
}

impl Not for TriBool {
    type Output = TriBool;

    fn not(self) -> TriBool {
        match self {
            TriBool::Yes => TriBool::No,
            TriBool::No => TriBool::Yes,
            TriBool::Unknown => TriBool::Unknown,
        }
    }
}

impl fmt::Display for TriBool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriBool::Yes => "yes",
            TriBool::No => "no",
            TriBool::Unknown => "unknown",
        })
    }
}
