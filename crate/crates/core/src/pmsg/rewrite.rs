//! Cut elimination for the message-passing logic: the operational semantics.
//!
//! Redexes live on `Cut` and `MSubst` nodes. When both sides of a cut lead
//! with an action on the cut channel, the principal rule for that connective
//! fires; otherwise the side that is not active on the channel commutes
//! inward. The substitution rules push a message proof towards its
//! consumption sites. The interchange of the two cut forms is oriented to
//! hoist substitutions out of cuts.
//!
//! Substituting a bare variable for a variable is treated as renaming and
//! performed eagerly when a rule constructs such a node; it shows up in
//! traces (as `subs-var`) only for hand-built substitutions.
//!
//! A cut against a primitive, and a substitution whose argument is an axiom
//! application, are stuck: they are first-class normal forms.

use super::build::{rename_chan, rename_var_in_proc};
use super::types::Proc;
use crate::msg::{FuelExhausted, MsgTerm, Pattern};
use crate::trace::RewriteTrace;

pub const PROC_CUT_RULES: &[&str] = &[
    "id-sequent",
    "sequent-id",
    "tensor_l/par_r-seq",
    "seq-tensor_l/par_r",
    "par_l/tensor_r-seq",
    "seq-par_l/tensor_r",
    "top_l/bot_r-seq",
    "seq-top_l/bot_r",
    "act_l/coact_r-sequent",
    "sequent-act_l/coact_r",
    "coact_l/act_r-sequent",
    "sequent-coact_l/act_r",
    "coprod-seq",
    "seq-coprod",
    "zero-sequent",
    "sequent-zero",
    "tensor_r-tensor_l",
    "par_r-par_l",
    "top_r-top_l",
    "bot_r-bot_l",
    "act_r-act_l",
    "coact_r-coact_l",
];

pub const PROC_SUBS_RULES: &[&str] = &[
    "subs-tensor_l/par_r",
    "subs-par_l/tensor_r",
    "subs-top_l/bot_r",
    "subs-act_l/coact_r",
    "subs-coact_l/act_r",
    "subs-coprod",
    "subs-zero",
    "prod_r-prod",
    "unit_r-unit",
    "inj_l-coprod",
    "inj_r-coprod",
];

#[allow(dead_code)]
pub const PROC_INTERCHANGE_RULES: &[&str] = &["subs-cut", "cut-subs"];

/// Build `(p ↦ body) arg`, collapsing variable-for-variable substitution
/// into a renaming.
pub(crate) fn msubst_collapse(binder: Pattern, body: Proc, arg: MsgTerm) -> Proc {
    if let (Pattern::Var(x), MsgTerm::Var(y)) = (&binder, &arg) {
        return rename_var_in_proc(&body, x, y);
    }
    Proc::MSubst {
        binder,
        body: Box::new(body),
        arg,
    }
}

/// Does the root of `p` lead with an action on channel `c`?
fn leads_on(p: &Proc, c: &str) -> bool {
    match p {
        Proc::Split { chan, .. }
        | Proc::Fork { chan, .. }
        | Proc::Close { chan, .. }
        | Proc::End { chan }
        | Proc::Get { chan, .. }
        | Proc::Put { chan, .. } => chan == c,
        _ => false,
    }
}

/// Every rule applicable at this node, most preferred first.
fn rules_at(p: &Proc) -> Vec<(Proc, &'static str)> {
    let mut out = Vec::new();
    match p {
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => cut_rules(left, out_chan, in_chan, right, &mut out),
        Proc::MSubst { binder, body, arg } => subs_rules(binder, body, arg, &mut out),
        _ => {}
    }
    out
}

fn cut_rules(s: &Proc, a: &str, b: &str, t: &Proc, out: &mut Vec<(Proc, &'static str)>) {
    // Identity cuts.
    if let Proc::Id { input, output, .. } = s {
        if output == a {
            out.push((rename_chan(t, b, input), "id-sequent"));
        }
    }
    if let Proc::Id { input, output, .. } = t {
        if input == b {
            out.push((rename_chan(s, a, output), "sequent-id"));
        }
    }

    // Principal steps: both sides lead on the cut channel.
    if leads_on(s, a) && leads_on(t, b) {
        match (s, t) {
            (
                Proc::Fork {
                    c1,
                    left: s1,
                    c2,
                    right: s2,
                    ..
                },
                Proc::Split {
                    c1: b1,
                    c2: b2,
                    body,
                    ..
                },
            ) => {
                // s1 ,α1;β1, (s2 ,α2;β2, t)
                let inner = Proc::cut((**s2).clone(), c2, b2, (**body).clone());
                out.push((
                    Proc::cut((**s1).clone(), c1, b1, inner),
                    "tensor_r-tensor_l",
                ));
            }
            (
                Proc::Split {
                    c1: a1,
                    c2: a2,
                    body,
                    ..
                },
                Proc::Fork {
                    c1: b1,
                    left: t1,
                    c2: b2,
                    right: t2,
                    ..
                },
            ) => {
                // (s ,α1;β1, t1) ,α2;β2, t2
                let inner = Proc::cut((**body).clone(), a1, b1, (**t1).clone());
                out.push((Proc::cut(inner, a2, b2, (**t2).clone()), "par_r-par_l"));
            }
            (Proc::End { .. }, Proc::Close { body, .. }) => {
                out.push(((**body).clone(), "top_r-top_l"));
            }
            (Proc::Close { body, .. }, Proc::End { .. }) => {
                out.push(((**body).clone(), "bot_r-bot_l"));
            }
            (
                Proc::Put { payload, body, .. },
                Proc::Get {
                    pattern,
                    body: tbody,
                    ..
                },
            ) => {
                // s ,α;β, (x ↦ t) f
                let subst = msubst_collapse(pattern.clone(), (**tbody).clone(), payload.clone());
                out.push((
                    Proc::cut((**body).clone(), a, b, subst),
                    "act_r-act_l",
                ));
            }
            (
                Proc::Get { pattern, body, .. },
                Proc::Put {
                    payload,
                    body: tbody,
                    ..
                },
            ) => {
                // (x ↦ s) f ,α;β, t
                let subst = msubst_collapse(pattern.clone(), (**body).clone(), payload.clone());
                out.push((
                    Proc::cut(subst, a, b, (**tbody).clone()),
                    "coact_r-coact_l",
                ));
            }
            _ => {}
        }
    }

    // Absorption.
    if let Proc::MAbsurd { scrutinee } = s {
        out.push((Proc::mabsurd(scrutinee), "zero-sequent"));
    }
    if let Proc::MAbsurd { scrutinee } = t {
        out.push((Proc::mabsurd(scrutinee), "sequent-zero"));
    }

    // Left commuting steps: s is not active on the cut channel.
    match s {
        Proc::Split { chan, c1, c2, body } if chan != a => {
            out.push((
                Proc::split(
                    chan,
                    c1,
                    c2,
                    Proc::cut((**body).clone(), a, b, t.clone()),
                ),
                "tensor_l/par_r-seq",
            ));
        }
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } if chan != a => {
            if left.channels().contains(a) {
                out.push((
                    Proc::fork(
                        chan,
                        c1,
                        Proc::cut((**left).clone(), a, b, t.clone()),
                        c2,
                        (**right).clone(),
                    ),
                    "par_l/tensor_r-seq",
                ));
            } else if right.channels().contains(a) {
                out.push((
                    Proc::fork(
                        chan,
                        c1,
                        (**left).clone(),
                        c2,
                        Proc::cut((**right).clone(), a, b, t.clone()),
                    ),
                    "par_l/tensor_r-seq",
                ));
            }
        }
        Proc::Close { chan, body } if chan != a => {
            out.push((
                Proc::close(chan, Proc::cut((**body).clone(), a, b, t.clone())),
                "top_l/bot_r-seq",
            ));
        }
        Proc::Get {
            chan,
            pattern,
            body,
        } if chan != a => {
            out.push((
                Proc::get(
                    chan,
                    pattern.clone(),
                    Proc::cut((**body).clone(), a, b, t.clone()),
                ),
                "act_l/coact_r-sequent",
            ));
        }
        Proc::Put {
            chan,
            payload,
            body,
        } if chan != a => {
            out.push((
                Proc::put(
                    chan,
                    payload.clone(),
                    Proc::cut((**body).clone(), a, b, t.clone()),
                ),
                "coact_l/act_r-sequent",
            ));
        }
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            out.push((
                Proc::MCase {
                    scrutinee: scrutinee.clone(),
                    left_pat: left_pat.clone(),
                    left: Box::new(Proc::cut((**left).clone(), a, b, t.clone())),
                    right_pat: right_pat.clone(),
                    right: Box::new(Proc::cut((**right).clone(), a, b, t.clone())),
                },
                "coprod-seq",
            ));
        }
        Proc::MSubst { binder, body, arg } => {
            out.push((
                Proc::MSubst {
                    binder: binder.clone(),
                    body: Box::new(Proc::cut((**body).clone(), a, b, t.clone())),
                    arg: arg.clone(),
                },
                "subs-cut",
            ));
        }
        _ => {}
    }

    // Right commuting steps.
    match t {
        Proc::Split { chan, c1, c2, body } if chan != b => {
            out.push((
                Proc::split(
                    chan,
                    c1,
                    c2,
                    Proc::cut(s.clone(), a, b, (**body).clone()),
                ),
                "seq-tensor_l/par_r",
            ));
        }
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } if chan != b => {
            if left.channels().contains(b) {
                out.push((
                    Proc::fork(
                        chan,
                        c1,
                        Proc::cut(s.clone(), a, b, (**left).clone()),
                        c2,
                        (**right).clone(),
                    ),
                    "seq-par_l/tensor_r",
                ));
            } else if right.channels().contains(b) {
                out.push((
                    Proc::fork(
                        chan,
                        c1,
                        (**left).clone(),
                        c2,
                        Proc::cut(s.clone(), a, b, (**right).clone()),
                    ),
                    "seq-par_l/tensor_r",
                ));
            }
        }
        Proc::Close { chan, body } if chan != b => {
            out.push((
                Proc::close(chan, Proc::cut(s.clone(), a, b, (**body).clone())),
                "seq-top_l/bot_r",
            ));
        }
        Proc::Get {
            chan,
            pattern,
            body,
        } if chan != b => {
            out.push((
                Proc::get(
                    chan,
                    pattern.clone(),
                    Proc::cut(s.clone(), a, b, (**body).clone()),
                ),
                "sequent-act_l/coact_r",
            ));
        }
        Proc::Put {
            chan,
            payload,
            body,
        } if chan != b => {
            out.push((
                Proc::put(
                    chan,
                    payload.clone(),
                    Proc::cut(s.clone(), a, b, (**body).clone()),
                ),
                "sequent-coact_l/act_r",
            ));
        }
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            out.push((
                Proc::MCase {
                    scrutinee: scrutinee.clone(),
                    left_pat: left_pat.clone(),
                    left: Box::new(Proc::cut(s.clone(), a, b, (**left).clone())),
                    right_pat: right_pat.clone(),
                    right: Box::new(Proc::cut(s.clone(), a, b, (**right).clone())),
                },
                "seq-coprod",
            ));
        }
        Proc::MSubst { binder, body, arg } => {
            out.push((
                Proc::MSubst {
                    binder: binder.clone(),
                    body: Box::new(Proc::cut(s.clone(), a, b, (**body).clone())),
                    arg: arg.clone(),
                },
                "cut-subs",
            ));
        }
        _ => {}
    }
}

fn subs_rules(binder: &Pattern, body: &Proc, arg: &MsgTerm, out: &mut Vec<(Proc, &'static str)>) {
    // Principal steps on the argument.
    if let (Pattern::Pair(p1, p2), MsgTerm::Pair(f1, f2)) = (binder, arg) {
        let inner = msubst_collapse((**p2).clone(), body.clone(), (**f2).clone());
        out.push((
            msubst_collapse((**p1).clone(), inner, (**f1).clone()),
            "prod_r-prod",
        ));
    }
    if matches!(binder, Pattern::Unit) && matches!(arg, MsgTerm::UnitVal) {
        out.push((body.clone(), "unit_r-unit"));
    }
    if let Pattern::Var(z) = binder {
        if let Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } = body
        {
            if scrutinee == z {
                if let MsgTerm::Inj1(f) = arg {
                    out.push((
                        msubst_collapse(left_pat.clone(), (**left).clone(), (**f).clone()),
                        "inj_l-coprod",
                    ));
                }
                if let MsgTerm::Inj2(f) = arg {
                    out.push((
                        msubst_collapse(right_pat.clone(), (**right).clone(), (**f).clone()),
                        "inj_r-coprod",
                    ));
                }
            }
        }
        if let MsgTerm::Var(y) = arg {
            out.push((rename_var_in_proc(body, z, y), "subs-var"));
        }
    }
    if let MsgTerm::Absurd(z) = arg {
        out.push((Proc::mabsurd(z), "zero-subs"));
    }

    // Push towards the consumption sites.
    let vars = binder.vars();
    match body {
        Proc::Split {
            chan,
            c1,
            c2,
            body: b2,
        } => {
            out.push((
                Proc::split(
                    chan,
                    c1,
                    c2,
                    Proc::MSubst {
                        binder: binder.clone(),
                        body: b2.clone(),
                        arg: arg.clone(),
                    },
                ),
                "subs-tensor_l/par_r",
            ));
        }
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => {
            if !vars.is_empty() {
                let lf = left.free_vars();
                let rf = right.free_vars();
                if vars.iter().all(|v| lf.contains(v)) {
                    out.push((
                        Proc::fork(
                            chan,
                            c1,
                            Proc::MSubst {
                                binder: binder.clone(),
                                body: left.clone(),
                                arg: arg.clone(),
                            },
                            c2,
                            (**right).clone(),
                        ),
                        "subs-par_l/tensor_r",
                    ));
                } else if vars.iter().all(|v| rf.contains(v)) {
                    out.push((
                        Proc::fork(
                            chan,
                            c1,
                            (**left).clone(),
                            c2,
                            Proc::MSubst {
                                binder: binder.clone(),
                                body: right.clone(),
                                arg: arg.clone(),
                            },
                        ),
                        "subs-par_l/tensor_r",
                    ));
                }
            }
        }
        Proc::Close { chan, body: b2 } => {
            out.push((
                Proc::close(
                    chan,
                    Proc::MSubst {
                        binder: binder.clone(),
                        body: b2.clone(),
                        arg: arg.clone(),
                    },
                ),
                "subs-top_l/bot_r",
            ));
        }
        Proc::Get {
            chan,
            pattern,
            body: b2,
        } => {
            out.push((
                Proc::get(
                    chan,
                    pattern.clone(),
                    Proc::MSubst {
                        binder: binder.clone(),
                        body: b2.clone(),
                        arg: arg.clone(),
                    },
                ),
                "subs-act_l/coact_r",
            ));
        }
        Proc::Put {
            chan,
            payload,
            body: b2,
        } => {
            if !vars.is_empty() {
                let pf = payload.free_vars();
                let bf = b2.free_vars();
                if vars.iter().all(|v| bf.contains(v)) {
                    out.push((
                        Proc::put(
                            chan,
                            payload.clone(),
                            Proc::MSubst {
                                binder: binder.clone(),
                                body: b2.clone(),
                                arg: arg.clone(),
                            },
                        ),
                        "subs-coact_l/act_r",
                    ));
                } else if vars.iter().all(|v| pf.contains(v)) {
                    out.push((
                        Proc::put(
                            chan,
                            MsgTerm::subst(binder.clone(), payload.clone(), arg.clone()),
                            (**b2).clone(),
                        ),
                        "subs-coact_l/act_r",
                    ));
                }
            }
        }
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } if !binder.binds(scrutinee) => {
            out.push((
                Proc::MCase {
                    scrutinee: scrutinee.clone(),
                    left_pat: left_pat.clone(),
                    left: Box::new(Proc::MSubst {
                        binder: binder.clone(),
                        body: left.clone(),
                        arg: arg.clone(),
                    }),
                    right_pat: right_pat.clone(),
                    right: Box::new(Proc::MSubst {
                        binder: binder.clone(),
                        body: right.clone(),
                        arg: arg.clone(),
                    }),
                },
                "subs-coprod",
            ));
        }
        Proc::MAbsurd { scrutinee } if !binder.binds(scrutinee) => {
            out.push((Proc::mabsurd(scrutinee), "subs-zero"));
        }
        _ => {}
    }
}

fn child_slots(p: &Proc) -> Vec<&Proc> {
    match p {
        Proc::Cut { left, right, .. } => vec![left, right],
        Proc::Split { body, .. }
        | Proc::Close { body, .. }
        | Proc::Get { body, .. }
        | Proc::Put { body, .. }
        | Proc::MSubst { body, .. } => vec![body],
        Proc::Fork { left, right, .. } | Proc::MCase { left, right, .. } => {
            vec![left, right]
        }
        _ => vec![],
    }
}

fn with_child(p: &Proc, idx: usize, new: Proc) -> Proc {
    let mut p = p.clone();
    match (&mut p, idx) {
        (Proc::Cut { left, .. }, 0) => **left = new,
        (Proc::Cut { right, .. }, 1) => **right = new,
        (Proc::Split { body, .. }, 0)
        | (Proc::Close { body, .. }, 0)
        | (Proc::Get { body, .. }, 0)
        | (Proc::Put { body, .. }, 0)
        | (Proc::MSubst { body, .. }, 0) => **body = new,
        (Proc::Fork { left, .. }, 0) | (Proc::MCase { left, .. }, 0) => **left = new,
        (Proc::Fork { right, .. }, 1) | (Proc::MCase { right, .. }, 1) => **right = new,
        _ => unreachable!("bad child index"),
    }
    p
}

fn find_step(p: &Proc) -> Option<(Proc, &'static str, Vec<usize>)> {
    let rules = rules_at(p);
    if let Some((p2, rule)) = rules.into_iter().next() {
        return Some((p2, rule, Vec::new()));
    }
    for (i, child) in child_slots(p).into_iter().enumerate() {
        if let Some((c2, rule, mut path)) = find_step(child) {
            path.insert(0, i);
            return Some((with_child(p, i, c2), rule, path));
        }
    }
    None
}

/// One rewrite at the leftmost-outermost redex; `None` at a normal form.
pub fn step(p: &Proc) -> Option<(Proc, &'static str)> {
    find_step(p).map(|(p2, rule, _)| (p2, rule))
}

/// Every single-step reduct, across all redex positions and rule choices.
pub fn step_all(p: &Proc) -> Vec<(Proc, &'static str)> {
    let mut out = rules_at(p);
    for (i, child) in child_slots(p).into_iter().enumerate() {
        for (c2, rule) in step_all(child) {
            out.push((with_child(p, i, c2), rule));
        }
    }
    out
}

/// Iterate `step` to a fixed point, recording the trace.
pub fn eliminate_cuts(p: &Proc, fuel: u64) -> Result<(Proc, RewriteTrace), (FuelExhausted, RewriteTrace)> {
    let mut trace = RewriteTrace::new();
    let mut current = p.clone();
    let mut spent = 0u64;
    while let Some((next, rule, path)) = find_step(&current) {
        spent += 1;
        if spent > fuel {
            return Err((FuelExhausted { steps_taken: spent }, trace));
        }
        trace.push(rule, path);
        current = next;
    }
    Ok((current, trace))
}
