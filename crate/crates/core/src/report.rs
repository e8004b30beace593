//! Structured pass/fail reports for symbolic identity checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// A named list of checks; `prove-family` and the octic reduction print one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl ProofReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ProofReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed });
        self
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ProofReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            writeln!(f, "  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}
