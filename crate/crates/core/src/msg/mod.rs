//! The message logic: formulas, annotated terms, typechecking, cut
//! elimination, and normalisation up to the term identities.

mod check;
mod error;
mod identity;
mod normalize;
mod rewrite;
mod subst;
mod types;

pub use check::{check_msg, infer_msg, AxiomSet, Usage};
pub use error::{FuelExhausted, MsgError};
pub use identity::{identity_term, identity_term_in};
pub use normalize::{alpha_canonical, msg_eq, normalize_msg, normalize_msg_fuel, DEFAULT_FUEL};
pub(crate) use normalize::{mark_inj as mark_inj_term, pure_value};
pub use rewrite::{reduce_msg, reduce_msg_all, rename_var, MSG_RULES};
pub use subst::{rename_free, substitute_msg};
pub use types::{AxiomSig, MsgContext, MsgTerm, MsgType, Pattern};

pub(crate) use check::{bind_pattern, check_term, env_from_context, Env};
