//! Capture-avoiding substitution on message terms.

use super::types::{MsgTerm, Pattern};
use crate::fresh::NameGen;
use crate::Name;

fn rename_pattern(pat: &Pattern, from: &str, to: &str) -> Pattern {
    match pat {
        Pattern::Var(n) if n == from => Pattern::Var(to.to_string()),
        Pattern::Var(_) | Pattern::Unit => pat.clone(),
        Pattern::Pair(a, b) => Pattern::Pair(
            Box::new(rename_pattern(a, from, to)),
            Box::new(rename_pattern(b, from, to)),
        ),
    }
}

/// Rename one bound variable of a binder and its scope.
fn rename_bound(pat: &Pattern, body: &MsgTerm, from: &str, gen: &mut NameGen) -> (Pattern, MsgTerm) {
    let to = gen.fresh(from);
    (
        rename_pattern(pat, from, &to),
        rename_free(body, from, &Name::from(to)),
    )
}

/// Replace free occurrences of `from` by the variable `to`.
pub fn rename_free(term: &MsgTerm, from: &str, to: &Name) -> MsgTerm {
    substitute_msg_raw(term, from, &MsgTerm::Var(to.clone()), &mut NameGen::new())
}

/// `substitute_msg(body, x, r)`: replace the free occurrence of `x` in
/// `body` by `r`, renaming binders that would capture free variables of `r`.
pub fn substitute_msg(body: &MsgTerm, var: &str, replacement: &MsgTerm) -> MsgTerm {
    let mut gen = NameGen::new();
    for n in body.all_names() {
        gen.reserve(&n);
    }
    for n in replacement.all_names() {
        gen.reserve(&n);
    }
    substitute_msg_raw(body, var, replacement, &mut gen)
}

pub(crate) fn substitute_msg_raw(
    body: &MsgTerm,
    var: &str,
    replacement: &MsgTerm,
    gen: &mut NameGen,
) -> MsgTerm {
    match body {
        MsgTerm::Var(n) => {
            if n == var {
                replacement.clone()
            } else {
                body.clone()
            }
        }
        MsgTerm::Axiom(f, args) => MsgTerm::Axiom(
            f.clone(),
            args.iter()
                .map(|a| substitute_msg_raw(a, var, replacement, gen))
                .collect(),
        ),
        MsgTerm::Subst { binder, body: b, arg } => {
            let new_arg = substitute_msg_raw(arg, var, replacement, gen);
            if binder.binds(var) {
                // Shadowed; nothing free below.
                return MsgTerm::Subst {
                    binder: binder.clone(),
                    body: b.clone(),
                    arg: Box::new(new_arg),
                };
            }
            let (binder, b) = avoid_capture(binder, b, replacement, gen);
            MsgTerm::Subst {
                binder,
                body: Box::new(substitute_msg_raw(&b, var, replacement, gen)),
                arg: Box::new(new_arg),
            }
        }
        MsgTerm::Pair(a, b) => MsgTerm::Pair(
            Box::new(substitute_msg_raw(a, var, replacement, gen)),
            Box::new(substitute_msg_raw(b, var, replacement, gen)),
        ),
        MsgTerm::UnitVal => MsgTerm::UnitVal,
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            if scrutinee == var {
                // The variable occurs once, here; branches cannot use it.
                match replacement {
                    MsgTerm::Var(n) => {
                        return MsgTerm::Case {
                            scrutinee: n.clone(),
                            left_pat: left_pat.clone(),
                            left: left.clone(),
                            right_pat: right_pat.clone(),
                            right: right.clone(),
                        }
                    }
                    // A determined injection selects its branch.
                    MsgTerm::Inj1(w) => {
                        return MsgTerm::subst(left_pat.clone(), (**left).clone(), (**w).clone())
                    }
                    MsgTerm::Inj2(w) => {
                        return MsgTerm::subst(
                            right_pat.clone(),
                            (**right).clone(),
                            (**w).clone(),
                        )
                    }
                    other => panic!(
                        "substitution of a non-sum value into a case scrutinee: {:?}",
                        other
                    ),
                }
            }
            let (left_pat, left) = if left_pat.binds(var) {
                (left_pat.clone(), (**left).clone())
            } else {
                let (p, t) = avoid_capture(left_pat, left, replacement, gen);
                (p, substitute_msg_raw(&t, var, replacement, gen))
            };
            let (right_pat, right) = if right_pat.binds(var) {
                (right_pat.clone(), (**right).clone())
            } else {
                let (p, t) = avoid_capture(right_pat, right, replacement, gen);
                (p, substitute_msg_raw(&t, var, replacement, gen))
            };
            MsgTerm::Case {
                scrutinee: scrutinee.clone(),
                left_pat,
                left: Box::new(left),
                right_pat,
                right: Box::new(right),
            }
        }
        MsgTerm::Inj1(t) => MsgTerm::Inj1(Box::new(substitute_msg_raw(t, var, replacement, gen))),
        MsgTerm::Inj2(t) => MsgTerm::Inj2(Box::new(substitute_msg_raw(t, var, replacement, gen))),
        MsgTerm::Absurd(z) => {
            if z == var {
                match replacement {
                    MsgTerm::Var(n) => MsgTerm::Absurd(n.clone()),
                    _ => body.clone(),
                }
            } else {
                body.clone()
            }
        }
    }
}

/// Rename the binder's variables away from the free variables of `incoming`.
fn avoid_capture(
    pat: &Pattern,
    scope: &MsgTerm,
    incoming: &MsgTerm,
    gen: &mut NameGen,
) -> (Pattern, MsgTerm) {
    let free = incoming.free_vars();
    let mut pat = pat.clone();
    let mut scope = scope.clone();
    for v in pat.clone().vars() {
        if free.contains(&v) {
            let (p, s) = rename_bound(&pat, &scope, &v, gen);
            pat = p;
            scope = s;
        }
    }
    (pat, scope)
}
