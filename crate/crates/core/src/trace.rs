//! Rewrite traces.

use std::fmt;

/// One recorded rewrite: the catalogue rule that fired and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: &'static str,
    /// Child indices from the root down to the redex.
    pub path: Vec<usize>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ ", self.rule)?;
        if self.path.is_empty() {
            write!(f, "/")
        } else {
            for i in &self.path {
                write!(f, "/{}", i)?;
            }
            Ok(())
        }
    }
}

/// Ordered list of steps recorded by the evaluator or normaliser.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: Vec<TraceStep>,
}

impl RewriteTrace {
    pub fn new() -> Self {
        RewriteTrace::default()
    }

    pub fn push(&mut self, rule: &'static str, path: Vec<usize>) {
        self.steps.push(TraceStep { rule, path });
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Multiset of rule names, for coverage assertions.
    pub fn rule_multiset(&self) -> Vec<&'static str> {
        let mut v: Vec<&'static str> = self.steps.iter().map(|s| s.rule).collect();
        v.sort();
        v
    }
}

impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{}", s)?;
        }
        Ok(())
    }
}
