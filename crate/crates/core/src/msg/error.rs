use crate::Name;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MsgError {
    UnknownVariable(Name),
    UnknownAxiom(Name),
    ArityMismatch {
        axiom: Name,
        expected: usize,
        got: usize,
    },
    /// A context variable is unused, or used more than once on one branch.
    LinearityViolation {
        var: Name,
        reused: bool,
    },
    TypeMismatch {
        expected: String,
        got: String,
    },
    /// A `case` or `{}` scrutinee that is not a variable of the context.
    NonVariableScrutinee,
    DuplicateBinder(Name),
    /// The type of the term is not determined by the term and context alone.
    Ambiguous,
}

impl fmt::Display for MsgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MsgError::UnknownVariable(n) => write!(f, "unknown variable `{}`", n),
            MsgError::UnknownAxiom(n) => write!(f, "unknown axiom `{}`", n),
            MsgError::ArityMismatch {
                axiom,
                expected,
                got,
            } => write!(
                f,
                "axiom `{}` expects {} arguments, got {}",
                axiom, expected, got
            ),
            MsgError::LinearityViolation { var, reused } => {
                if *reused {
                    write!(f, "variable `{}` used more than once", var)
                } else {
                    write!(f, "variable `{}` unused", var)
                }
            }
            MsgError::TypeMismatch { expected, got } => {
                write!(f, "type mismatch: expected {}, got {}", expected, got)
            }
            MsgError::NonVariableScrutinee => {
                write!(f, "case scrutinee must be a context variable")
            }
            MsgError::DuplicateBinder(n) => write!(f, "binder `{}` shadows an existing name", n),
            MsgError::Ambiguous => write!(f, "type of term is ambiguous; annotate the expected type"),
        }
    }
}

impl std::error::Error for MsgError {}

/// Step budget exhausted during normalisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuelExhausted {
    pub steps_taken: u64,
}

impl fmt::Display for FuelExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fuel exhausted after {} steps", self.steps_taken)
    }
}

impl std::error::Error for FuelExhausted {}
