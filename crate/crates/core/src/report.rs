//! Plain-text verification reports: one line per checked identity with
//! its name, truncation order and PASS/FAIL. A failure names the first
//! differing monomial and both values.

use std::fmt;

/// First differing monomial `x^x y^y z^z`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub x: usize,
    pub y: u32,
    pub z: u32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub order: usize,
    pub mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn pass(name: impl Into<String>, order: usize) -> Self {
        IdentityReport {
            name: name.into(),
            order,
            mismatch: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "{} order={} PASS", self.name, self.order),
            Some(m) => write!(
                f,
                "{} order={} FAIL at x^{} y^{} z^{}: lhs={} rhs={}",
                self.name, self.order, m.x, m.y, m.z, m.lhs, m.rhs
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub lines: Vec<IdentityReport>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(IdentityReport::passed)
    }

    pub fn push(&mut self, line: IdentityReport) {
        self.lines.push(line);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.lines.extend(other.lines);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lines.iter().try_for_each(|l| writeln!(f, "{l}"))
    }
}
