//! A two-tier calculus of message passing.
//!
//! The lower tier (`msg`) is a linear term logic for values: formulas are
//! built from atoms with `*`, `I`, `+`, `0`, terms are proofs of sequents
//! `Φ ⊢ f : A`, and composition is substitution. The upper tier (`pmsg`)
//! is a process logic layered on top of it: judgements `Φ | Γ ⊩ Δ` type
//! processes that exchange message-tier values over named channels, and
//! cut elimination is the operational semantics.
//!
//! On top of the two calculi, [`combinators`] derives the categorical
//! structure (identities, functor actions, coherence maps, representability)
//! and runs a machine-checked coherence suite; [`surface`] provides the
//! concrete `.mpl` syntax; [`circuit`] renders checked derivations as
//! proof-net style circuits.

pub mod circuit;
pub mod combinators;
pub mod fresh;
pub(crate) mod infer;
pub mod msg;
pub mod pmsg;
pub mod surface;
pub mod trace;

pub use fresh::NameGen;
pub use trace::{RewriteTrace, TraceStep};

/// Variable and channel names.
pub type Name = String;
