//! The message-passing logic: process types and terms, the sequent
//! checker, cut-elimination operational semantics, and normalisation
//! up to the process equations.

mod build;
mod check;
mod eq;
mod identity;
mod normalize;
mod rewrite;
mod types;

pub use build::{dualize, mk_cut, rename_chan, subst_proc, CutResult};
pub use check::{check_proc, cut_formulas, ProcError, Signatures};
pub use eq::{proc_eq, proc_eq_depth, Equivalence};
pub use identity::identity_proc;
pub use normalize::{alpha_canonical_proc, normalize_proc, normalize_proc_fuel};
pub use rewrite::{eliminate_cuts, step, step_all, PROC_CUT_RULES, PROC_SUBS_RULES};
pub use types::{Judgement, PrimSet, PrimSig, Proc, ProcType};

/// Uniform renaming with globally fresh targets; used by the combinator
/// layer to relabel endpoints.
pub fn rename_all_names(
    p: &Proc,
    map: &std::collections::BTreeMap<crate::Name, crate::Name>,
) -> Proc {
    build::rename_all(p, map)
}

/// `identity_proc` with caller-supplied fresh names.
pub fn identity_proc_named(
    ty: &ProcType,
    alpha: &str,
    beta: &str,
    gen: &mut crate::fresh::NameGen,
) -> Proc {
    identity::identity_proc_in(ty, alpha, beta, gen)
}
