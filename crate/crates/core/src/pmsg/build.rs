//! Construction helpers: renaming, plugging (cut), substitution, duality.

use super::check::ProcError;
use super::types::{Judgement, Proc};
use crate::fresh::NameGen;
use crate::msg::{MsgTerm, Pattern};
use crate::Name;
use std::collections::BTreeMap;

/// Apply a name map uniformly to every occurrence, bound or free. Safe
/// whenever the targets are globally fresh for the term.
pub(crate) fn rename_all(p: &Proc, map: &BTreeMap<Name, Name>) -> Proc {
    let f = |n: &Name| map.get(n).cloned().unwrap_or_else(|| n.clone());
    let fp = |pat: &Pattern| rename_pattern(pat, &f);
    let fm = |t: &MsgTerm| rename_msg_all(t, map);
    match p {
        Proc::Id { input, ty, output } => Proc::Id {
            input: f(input),
            ty: ty.clone(),
            output: f(output),
        },
        Proc::Prim {
            name,
            msg_args,
            inputs,
            outputs,
        } => Proc::Prim {
            name: name.clone(),
            msg_args: msg_args.iter().map(&f).collect(),
            inputs: inputs.iter().map(&f).collect(),
            outputs: outputs.iter().map(&f).collect(),
        },
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => Proc::Cut {
            left: Box::new(rename_all(left, map)),
            out_chan: f(out_chan),
            in_chan: f(in_chan),
            right: Box::new(rename_all(right, map)),
        },
        Proc::Split { chan, c1, c2, body } => Proc::Split {
            chan: f(chan),
            c1: f(c1),
            c2: f(c2),
            body: Box::new(rename_all(body, map)),
        },
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => Proc::Fork {
            chan: f(chan),
            c1: f(c1),
            left: Box::new(rename_all(left, map)),
            c2: f(c2),
            right: Box::new(rename_all(right, map)),
        },
        Proc::Close { chan, body } => Proc::Close {
            chan: f(chan),
            body: Box::new(rename_all(body, map)),
        },
        Proc::End { chan } => Proc::End { chan: f(chan) },
        Proc::Get {
            chan,
            pattern,
            body,
        } => Proc::Get {
            chan: f(chan),
            pattern: fp(pattern),
            body: Box::new(rename_all(body, map)),
        },
        Proc::Put {
            chan,
            payload,
            body,
        } => Proc::Put {
            chan: f(chan),
            payload: fm(payload),
            body: Box::new(rename_all(body, map)),
        },
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => Proc::MCase {
            scrutinee: f(scrutinee),
            left_pat: fp(left_pat),
            left: Box::new(rename_all(left, map)),
            right_pat: fp(right_pat),
            right: Box::new(rename_all(right, map)),
        },
        Proc::MAbsurd { scrutinee } => Proc::MAbsurd {
            scrutinee: f(scrutinee),
        },
        Proc::MSubst { binder, body, arg } => Proc::MSubst {
            binder: fp(binder),
            body: Box::new(rename_all(body, map)),
            arg: fm(arg),
        },
    }
}

fn rename_pattern(pat: &Pattern, f: &impl Fn(&Name) -> Name) -> Pattern {
    match pat {
        Pattern::Var(n) => Pattern::Var(f(n)),
        Pattern::Pair(a, b) => Pattern::pair(rename_pattern(a, f), rename_pattern(b, f)),
        Pattern::Unit => Pattern::Unit,
    }
}

fn rename_msg_all(t: &MsgTerm, map: &BTreeMap<Name, Name>) -> MsgTerm {
    let f = |n: &Name| map.get(n).cloned().unwrap_or_else(|| n.clone());
    match t {
        MsgTerm::Var(n) => MsgTerm::Var(f(n)),
        MsgTerm::Axiom(name, args) => MsgTerm::Axiom(
            name.clone(),
            args.iter().map(|a| rename_msg_all(a, map)).collect(),
        ),
        MsgTerm::Subst { binder, body, arg } => MsgTerm::Subst {
            binder: rename_pattern(binder, &f),
            body: Box::new(rename_msg_all(body, map)),
            arg: Box::new(rename_msg_all(arg, map)),
        },
        MsgTerm::Pair(a, b) => MsgTerm::pair(rename_msg_all(a, map), rename_msg_all(b, map)),
        MsgTerm::UnitVal => MsgTerm::UnitVal,
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => MsgTerm::Case {
            scrutinee: f(scrutinee),
            left_pat: rename_pattern(left_pat, &f),
            left: Box::new(rename_msg_all(left, map)),
            right_pat: rename_pattern(right_pat, &f),
            right: Box::new(rename_msg_all(right, map)),
        },
        MsgTerm::Inj1(x) => MsgTerm::inj1(rename_msg_all(x, map)),
        MsgTerm::Inj2(x) => MsgTerm::inj2(rename_msg_all(x, map)),
        MsgTerm::Absurd(z) => MsgTerm::Absurd(f(z)),
    }
}

/// Rename one free channel.
pub fn rename_chan(p: &Proc, from: &str, to: &str) -> Proc {
    let mut map = BTreeMap::new();
    map.insert(from.to_string(), to.to_string());
    // A free-channel rename never crosses a binder for `from`: binders are
    // globally distinct from free names by construction, so the uniform
    // rename is equivalent and far simpler.
    rename_all(p, &map)
}

/// Rename one free message variable to another variable.
pub(crate) fn rename_var_in_proc(p: &Proc, from: &str, to: &str) -> Proc {
    rename_chan(p, from, to)
}

/// Substitute a message term for a free variable inside every payload and
/// substitution argument.
pub(crate) fn subst_msg_var(p: &Proc, var: &str, term: &MsgTerm) -> Proc {
    use crate::msg::substitute_msg;
    match p {
        Proc::Id { .. } | Proc::End { .. } | Proc::Prim { .. } => p.clone(),
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => Proc::Cut {
            left: Box::new(subst_msg_var(left, var, term)),
            out_chan: out_chan.clone(),
            in_chan: in_chan.clone(),
            right: Box::new(subst_msg_var(right, var, term)),
        },
        Proc::Split { chan, c1, c2, body } => Proc::Split {
            chan: chan.clone(),
            c1: c1.clone(),
            c2: c2.clone(),
            body: Box::new(subst_msg_var(body, var, term)),
        },
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => Proc::Fork {
            chan: chan.clone(),
            c1: c1.clone(),
            left: Box::new(subst_msg_var(left, var, term)),
            c2: c2.clone(),
            right: Box::new(subst_msg_var(right, var, term)),
        },
        Proc::Close { chan, body } => Proc::Close {
            chan: chan.clone(),
            body: Box::new(subst_msg_var(body, var, term)),
        },
        Proc::Get {
            chan,
            pattern,
            body,
        } => {
            if pattern.binds(var) {
                return p.clone();
            }
            Proc::Get {
                chan: chan.clone(),
                pattern: pattern.clone(),
                body: Box::new(subst_msg_var(body, var, term)),
            }
        }
        Proc::Put {
            chan,
            payload,
            body,
        } => Proc::Put {
            chan: chan.clone(),
            payload: substitute_msg(payload, var, term),
            body: Box::new(subst_msg_var(body, var, term)),
        },
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            if scrutinee == var {
                // Linear: the variable occurs only here.
                match term {
                    MsgTerm::Var(n) => {
                        return Proc::MCase {
                            scrutinee: n.clone(),
                            left_pat: left_pat.clone(),
                            left: left.clone(),
                            right_pat: right_pat.clone(),
                            right: right.clone(),
                        }
                    }
                    MsgTerm::Inj1(w) => {
                        return Proc::msubst(left_pat.clone(), (**left).clone(), (**w).clone())
                    }
                    MsgTerm::Inj2(w) => {
                        return Proc::msubst(
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
            let left = if left_pat.binds(var) {
                left.clone()
            } else {
                Box::new(subst_msg_var(left, var, term))
            };
            let right = if right_pat.binds(var) {
                right.clone()
            } else {
                Box::new(subst_msg_var(right, var, term))
            };
            Proc::MCase {
                scrutinee: scrutinee.clone(),
                left_pat: left_pat.clone(),
                left,
                right_pat: right_pat.clone(),
                right,
            }
        }
        Proc::MAbsurd { scrutinee } => {
            if scrutinee == var {
                if let MsgTerm::Var(n) = term {
                    return Proc::MAbsurd {
                        scrutinee: n.clone(),
                    };
                }
            }
            p.clone()
        }
        Proc::MSubst { binder, body, arg } => {
            let arg = substitute_msg(arg, var, term);
            let body = if binder.binds(var) {
                body.clone()
            } else {
                Box::new(subst_msg_var(body, var, term))
            };
            Proc::MSubst {
                binder: binder.clone(),
                body,
                arg,
            }
        }
    }
}

/// Substitute a message term for a free variable inside every payload.
/// Result of a checked plug: the composite, its judgement, and the renaming
/// that was applied to the right process to restore name disjointness.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub proc: Proc,
    pub judgement: Judgement,
    pub renaming: BTreeMap<Name, Name>,
}

/// Plug output `alpha` of `s` into input `beta` of `t`.
pub fn mk_cut(
    s: &Proc,
    s_judg: &Judgement,
    alpha: &str,
    beta: &str,
    t: &Proc,
    t_judg: &Judgement,
) -> Result<CutResult, ProcError> {
    let a_ty = s_judg
        .outputs
        .get(alpha)
        .ok_or_else(|| ProcError::ChannelNotFound(alpha.to_string()))?;
    let b_ty = t_judg
        .inputs
        .get(beta)
        .ok_or_else(|| ProcError::ChannelNotFound(beta.to_string()))?;
    if a_ty != b_ty {
        return Err(ProcError::TypeMismatch {
            expected: a_ty.to_string(),
            got: b_ty.to_string(),
        });
    }

    let s_names = s.all_names();
    let t_names = t.all_names();
    let mut gen = NameGen::new();
    gen.reserve_all(s_names.iter());
    gen.reserve_all(t_names.iter());
    let mut renaming = BTreeMap::new();
    for n in &t_names {
        if s_names.contains(n) {
            renaming.insert(n.clone(), gen.fresh(n));
        }
    }
    let t2 = rename_all(t, &renaming);
    let beta2 = renaming.get(beta).cloned().unwrap_or_else(|| beta.to_string());

    let mut judgement = Judgement {
        msg_ctx: s_judg.msg_ctx.clone(),
        inputs: s_judg.inputs.clone(),
        outputs: s_judg.outputs.clone(),
    };
    judgement.outputs.remove(alpha);
    let lookup = |n: &Name| renaming.get(n).cloned().unwrap_or_else(|| n.clone());
    for (pat, ty) in &t_judg.msg_ctx.entries {
        judgement
            .msg_ctx
            .push(rename_pattern(pat, &lookup), ty.clone());
    }
    for (c, ty) in &t_judg.inputs {
        if c != beta {
            judgement.inputs.insert(lookup(c), ty.clone());
        }
    }
    for (c, ty) in &t_judg.outputs {
        judgement.outputs.insert(lookup(c), ty.clone());
    }

    Ok(CutResult {
        proc: Proc::cut(s.clone(), alpha, &beta2, t2),
        judgement,
        renaming,
    })
}

/// Build `(x ↦ p) f`, freshening binders of `p` that clash with names of `f`.
pub fn subst_proc(f: &MsgTerm, x: &str, p: &Proc) -> Proc {
    let f_names = f.all_names();
    let p_names = p.all_names();
    let mut gen = NameGen::new();
    gen.reserve_all(f_names.iter());
    gen.reserve_all(p_names.iter());
    let mut renaming = BTreeMap::new();
    for n in p_names.intersection(&f_names) {
        if n != x {
            renaming.insert(n.clone(), gen.fresh(n));
        }
    }
    let body = if renaming.is_empty() {
        p.clone()
    } else {
        rename_all(p, &renaming)
    };
    Proc::msubst(Pattern::var(x), body, f.clone())
}

/// Swap input and output roles. Identities flip direction and dualise their
/// annotation, cuts reverse, primitives swap their channel lists; everything
/// else keeps its shape, because each constructor serves a pair of dual
/// rules. Involutive.
pub fn dualize(p: &Proc) -> Proc {
    match p {
        Proc::Id { input, ty, output } => Proc::Id {
            input: output.clone(),
            ty: ty.dual(),
            output: input.clone(),
        },
        Proc::Prim {
            name,
            msg_args,
            inputs,
            outputs,
        } => Proc::Prim {
            name: name.clone(),
            msg_args: msg_args.clone(),
            inputs: outputs.clone(),
            outputs: inputs.clone(),
        },
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => Proc::Cut {
            left: Box::new(dualize(right)),
            out_chan: in_chan.clone(),
            in_chan: out_chan.clone(),
            right: Box::new(dualize(left)),
        },
        Proc::Split { chan, c1, c2, body } => Proc::Split {
            chan: chan.clone(),
            c1: c1.clone(),
            c2: c2.clone(),
            body: Box::new(dualize(body)),
        },
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => Proc::Fork {
            chan: chan.clone(),
            c1: c1.clone(),
            left: Box::new(dualize(left)),
            c2: c2.clone(),
            right: Box::new(dualize(right)),
        },
        Proc::Close { chan, body } => Proc::Close {
            chan: chan.clone(),
            body: Box::new(dualize(body)),
        },
        Proc::End { .. } | Proc::MAbsurd { .. } => p.clone(),
        Proc::Get {
            chan,
            pattern,
            body,
        } => Proc::Get {
            chan: chan.clone(),
            pattern: pattern.clone(),
            body: Box::new(dualize(body)),
        },
        Proc::Put {
            chan,
            payload,
            body,
        } => Proc::Put {
            chan: chan.clone(),
            payload: payload.clone(),
            body: Box::new(dualize(body)),
        },
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => Proc::MCase {
            scrutinee: scrutinee.clone(),
            left_pat: left_pat.clone(),
            left: Box::new(dualize(left)),
            right_pat: right_pat.clone(),
            right: Box::new(dualize(right)),
        },
        Proc::MSubst { binder, body, arg } => Proc::MSubst {
            binder: binder.clone(),
            body: Box::new(dualize(body)),
            arg: arg.clone(),
        },
    }
}
