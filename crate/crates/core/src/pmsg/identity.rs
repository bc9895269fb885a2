//! Inductive identity processes.

use super::types::{Proc, ProcType};
use crate::fresh::NameGen;
use crate::msg::identity_term_in;

/// The identity process `α =_X β` from input `alpha` to output `beta`,
/// expanded by induction on the type; only atoms remain identity leaves.
pub fn identity_proc(ty: &ProcType, alpha: &str, beta: &str) -> Proc {
    let mut gen = NameGen::avoiding([alpha.to_string(), beta.to_string()]);
    identity_proc_in(ty, alpha, beta, &mut gen)
}

pub(crate) fn identity_proc_in(
    ty: &ProcType,
    alpha: &str,
    beta: &str,
    gen: &mut NameGen,
) -> Proc {
    match ty {
        ProcType::Atom(_) => Proc::id(alpha, ty.clone(), beta),
        ProcType::Tensor(x, y) => {
            let a1 = gen.fresh(alpha);
            let a2 = gen.fresh(alpha);
            let b1 = gen.fresh(beta);
            let b2 = gen.fresh(beta);
            Proc::split(
                alpha,
                &a1,
                &a2,
                Proc::fork(
                    beta,
                    &b1,
                    identity_proc_in(x, &a1, &b1, gen),
                    &b2,
                    identity_proc_in(y, &a2, &b2, gen),
                ),
            )
        }
        ProcType::Par(x, y) => {
            let a1 = gen.fresh(alpha);
            let a2 = gen.fresh(alpha);
            let b1 = gen.fresh(beta);
            let b2 = gen.fresh(beta);
            Proc::split(
                beta,
                &b1,
                &b2,
                Proc::fork(
                    alpha,
                    &a1,
                    identity_proc_in(x, &a1, &b1, gen),
                    &a2,
                    identity_proc_in(y, &a2, &b2, gen),
                ),
            )
        }
        ProcType::Top => Proc::close(alpha, Proc::end(beta)),
        ProcType::Bot => Proc::close(beta, Proc::end(alpha)),
        ProcType::Act(a, x) => {
            let (pat, body) = identity_term_in(a, gen);
            Proc::get(
                alpha,
                pat,
                Proc::put(beta, body, identity_proc_in(x, alpha, beta, gen)),
            )
        }
        ProcType::CoAct(a, x) => {
            let (pat, body) = identity_term_in(a, gen);
            Proc::get(
                beta,
                pat,
                Proc::put(alpha, body, identity_proc_in(x, alpha, beta, gen)),
            )
        }
    }
}
