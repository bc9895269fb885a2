//! Inductive identity terms for message formulas.

use super::types::{MsgTerm, MsgType, Pattern};
use crate::fresh::NameGen;

/// The identity proof `p : A ⊢ ι : A`, returned as (pattern, body).
///
/// Atoms are variables, products recurse componentwise, sums case on the
/// scrutinee, the unit is `()`. The formula `0` has no clause in the usual
/// induction; initiality forces `(z, {} z)`.
pub fn identity_term(ty: &MsgType) -> (Pattern, MsgTerm) {
    let mut gen = NameGen::new();
    identity_term_in(ty, &mut gen)
}

pub fn identity_term_in(ty: &MsgType, gen: &mut NameGen) -> (Pattern, MsgTerm) {
    match ty {
        MsgType::Atom(_) => {
            let x = gen.fresh("x");
            (Pattern::Var(x.clone()), MsgTerm::Var(x))
        }
        MsgType::Prod(a, b) => {
            let (pa, ta) = identity_term_in(a, gen);
            let (pb, tb) = identity_term_in(b, gen);
            (Pattern::pair(pa, pb), MsgTerm::pair(ta, tb))
        }
        MsgType::Unit => (Pattern::Unit, MsgTerm::UnitVal),
        MsgType::Sum(a, b) => {
            let z = gen.fresh("z");
            let (pa, ta) = identity_term_in(a, gen);
            let (pb, tb) = identity_term_in(b, gen);
            (
                Pattern::Var(z.clone()),
                MsgTerm::Case {
                    scrutinee: z,
                    left_pat: pa,
                    left: Box::new(MsgTerm::inj1(ta)),
                    right_pat: pb,
                    right: Box::new(MsgTerm::inj2(tb)),
                },
            )
        }
        MsgType::Zero => {
            let z = gen.fresh("z");
            (Pattern::Var(z.clone()), MsgTerm::Absurd(z))
        }
    }
}
