//! Canonical forms for processes.
//!
//! After cut elimination, terms are normalised up to the process equations:
//! everything absorbs into `{} z`; message cases are hoisted outermost;
//! independent channel prefixes are sorted by (channel name, action rank)
//! with rank close < split < get < put; payloads and substitution arguments
//! are normalised as message terms; stuck cuts are right-nested; and bound
//! channels and variables are renamed `c%0, c%1, …` / `v%0, v%1, …` in
//! traversal order. The result is a fixed point of the whole pipeline.

use super::rewrite::step;
use super::types::Proc;
use crate::fresh::NameGen;
use crate::msg::{normalize_msg_fuel, FuelExhausted, MsgTerm, Pattern};
use crate::Name;
use std::collections::BTreeMap;

pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Action rank for the prefix ordering.
fn rank(p: &Proc) -> Option<u8> {
    match p {
        Proc::Close { .. } => Some(0),
        Proc::Split { .. } => Some(1),
        Proc::Get { .. } => Some(2),
        Proc::Put { .. } => Some(3),
        _ => None,
    }
}

fn prefix_chan(p: &Proc) -> Option<&Name> {
    match p {
        Proc::Close { chan, .. }
        | Proc::Split { chan, .. }
        | Proc::Get { chan, .. }
        | Proc::Put { chan, .. } => Some(chan),
        _ => None,
    }
}

fn prefix_body(p: &Proc) -> Option<&Proc> {
    match p {
        Proc::Close { body, .. }
        | Proc::Split { body, .. }
        | Proc::Get { body, .. }
        | Proc::Put { body, .. } => Some(body),
        _ => None,
    }
}

fn with_prefix_body(p: &Proc, new: Proc) -> Proc {
    let mut p = p.clone();
    match &mut p {
        Proc::Close { body, .. }
        | Proc::Split { body, .. }
        | Proc::Get { body, .. }
        | Proc::Put { body, .. } => **body = new,
        _ => unreachable!(),
    }
    p
}

/// Names bound by a prefix over its body.
fn prefix_binds(p: &Proc) -> Vec<Name> {
    match p {
        Proc::Split { c1, c2, .. } => vec![c1.clone(), c2.clone()],
        Proc::Get { pattern, .. } => pattern.vars(),
        _ => vec![],
    }
}

/// Free names mentioned by the prefix itself (payload variables).
fn prefix_uses(p: &Proc) -> Vec<Name> {
    match p {
        Proc::Put { payload, .. } => payload.free_vars().into_iter().collect(),
        _ => vec![],
    }
}

/// May `q` be moved in front of `p` (p·q·s ⇒ q·p·s)?
fn independent(p: &Proc, q: &Proc) -> bool {
    let pc = prefix_chan(p).unwrap();
    let qc = prefix_chan(q).unwrap();
    if pc == qc {
        return false;
    }
    let bound = prefix_binds(p);
    if bound.iter().any(|b| b == qc) {
        return false;
    }
    let uses = prefix_uses(q);
    !bound.iter().any(|b| uses.contains(b))
}

/// Sort the maximal chain of unary prefixes starting at `p` into its least
/// dependency-respecting linearisation; `None` if already sorted.
fn sort_prefix_chain(p: &Proc) -> Option<Proc> {
    let mut items: Vec<Proc> = Vec::new();
    let mut cur = p;
    while rank(cur).is_some() {
        items.push(cur.clone());
        cur = prefix_body(cur).unwrap();
    }
    let tail = cur.clone();
    let n = items.len();
    if n < 2 {
        return None;
    }
    // depends[j] lists the earlier prefixes that must stay before item j.
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let mut best: Option<usize> = None;
        for (pos, &j) in remaining.iter().enumerate() {
            let blocked = remaining
                .iter()
                .any(|&i| i < j && !independent(&items[i], &items[j]));
            if blocked {
                continue;
            }
            match best {
                None => best = Some(pos),
                Some(b) => {
                    if prefix_key(&items[remaining[b]]) > prefix_key(&items[j]) {
                        best = Some(pos);
                    }
                }
            }
        }
        let pos = best.expect("prefix dependency order is acyclic");
        order.push(remaining.remove(pos));
    }
    if order.iter().enumerate().all(|(k, &j)| k == j) {
        return None;
    }
    let mut rebuilt = tail;
    for &j in order.iter().rev() {
        rebuilt = with_prefix_body(&items[j], rebuilt);
    }
    Some(rebuilt)
}

// Channel-major ordering: a channel's actions keep their forced sequence
// while distinct channels sort by name, so the bubble sort cannot get stuck
// behind a same-channel dependency.
fn prefix_key(p: &Proc) -> (Name, u8) {
    (prefix_chan(p).unwrap().clone(), rank(p).unwrap())
}

fn as_mcase(p: &Proc) -> Option<(&Name, &Pattern, &Proc, &Pattern, &Proc)> {
    if let Proc::MCase {
        scrutinee,
        left_pat,
        left,
        right_pat,
        right,
    } = p
    {
        Some((scrutinee, left_pat, left, right_pat, right))
    } else {
        None
    }
}

fn mk_mcase(z: &Name, lp: &Pattern, l: Proc, rp: &Pattern, r: Proc) -> Proc {
    Proc::MCase {
        scrutinee: z.clone(),
        left_pat: lp.clone(),
        left: Box::new(l),
        right_pat: rp.clone(),
        right: Box::new(r),
    }
}

/// One equation step, leftmost-outermost. Returns `None` at a fixed point.
fn eq_step(p: &Proc, msg_fuel: u64) -> Result<Option<Proc>, FuelExhausted> {
    if let Some(p2) = eq_at(p, msg_fuel)? {
        return Ok(Some(p2));
    }
    match p {
        Proc::Id { .. } | Proc::End { .. } | Proc::MAbsurd { .. } | Proc::Prim { .. } => Ok(None),
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => {
            if let Some(l2) = eq_step(left, msg_fuel)? {
                return Ok(Some(Proc::cut(l2, out_chan, in_chan, (**right).clone())));
            }
            Ok(eq_step(right, msg_fuel)?
                .map(|r2| Proc::cut((**left).clone(), out_chan, in_chan, r2)))
        }
        Proc::Split { chan, c1, c2, body } => Ok(eq_step(body, msg_fuel)?
            .map(|b2| Proc::split(chan, c1, c2, b2))),
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => {
            if let Some(l2) = eq_step(left, msg_fuel)? {
                return Ok(Some(Proc::fork(chan, c1, l2, c2, (**right).clone())));
            }
            Ok(eq_step(right, msg_fuel)?
                .map(|r2| Proc::fork(chan, c1, (**left).clone(), c2, r2)))
        }
        Proc::Close { chan, body } => {
            Ok(eq_step(body, msg_fuel)?.map(|b2| Proc::close(chan, b2)))
        }
        Proc::Get {
            chan,
            pattern,
            body,
        } => Ok(eq_step(body, msg_fuel)?.map(|b2| Proc::get(chan, pattern.clone(), b2))),
        Proc::Put {
            chan,
            payload,
            body,
        } => Ok(eq_step(body, msg_fuel)?.map(|b2| Proc::put(chan, payload.clone(), b2))),
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            if let Some(l2) = eq_step(left, msg_fuel)? {
                return Ok(Some(mk_mcase(scrutinee, left_pat, l2, right_pat, (**right).clone())));
            }
            Ok(eq_step(right, msg_fuel)?
                .map(|r2| mk_mcase(scrutinee, left_pat, (**left).clone(), right_pat, r2)))
        }
        Proc::MSubst { binder, body, arg } => Ok(eq_step(body, msg_fuel)?.map(|b2| Proc::MSubst {
            binder: binder.clone(),
            body: Box::new(b2),
            arg: arg.clone(),
        })),
    }
}

fn eq_at(p: &Proc, msg_fuel: u64) -> Result<Option<Proc>, FuelExhausted> {
    // Absorption into {} z.
    match p {
        Proc::Split { body, .. }
        | Proc::Close { body, .. }
        | Proc::Get { body, .. }
        | Proc::Put { body, .. } => {
            if let Proc::MAbsurd { scrutinee } = &**body {
                let shadowed = match p {
                    Proc::Get { pattern, .. } => pattern.binds(scrutinee),
                    _ => false,
                };
                if !shadowed {
                    return Ok(Some(Proc::mabsurd(scrutinee)));
                }
            }
        }
        Proc::Fork { left, right, .. } => {
            if let Proc::MAbsurd { scrutinee } = &**left {
                return Ok(Some(Proc::mabsurd(scrutinee)));
            }
            if let Proc::MAbsurd { scrutinee } = &**right {
                return Ok(Some(Proc::mabsurd(scrutinee)));
            }
        }
        Proc::MCase {
            left_pat,
            left,
            right_pat,
            right,
            ..
        } => {
            if let (Proc::MAbsurd { scrutinee: z1 }, Proc::MAbsurd { scrutinee: z2 }) =
                (&**left, &**right)
            {
                if z1 == z2 && !left_pat.binds(z1) && !right_pat.binds(z2) {
                    return Ok(Some(Proc::mabsurd(z1)));
                }
            }
        }
        _ => {}
    }
    if let Proc::Put { payload, .. } = p {
        if let MsgTerm::Absurd(z) = payload {
            return Ok(Some(Proc::mabsurd(z)));
        }
    }
    if let Proc::MSubst { binder, body, .. } = p {
        if let Proc::MAbsurd { scrutinee } = &**body {
            if !binder.binds(scrutinee) {
                return Ok(Some(Proc::mabsurd(scrutinee)));
            }
        }
    }

    // Message-level normalisation of payloads and substitution arguments.
    if let Proc::Put {
        chan,
        payload,
        body,
    } = p
    {
        let n = normalize_msg_fuel(payload, msg_fuel)?;
        if &n != payload {
            return Ok(Some(Proc::put(chan, n, (**body).clone())));
        }
    }
    if let Proc::MSubst { binder, body, arg } = p {
        let n = normalize_msg_fuel(arg, msg_fuel)?;
        if &n != arg {
            return Ok(Some(Proc::MSubst {
                binder: binder.clone(),
                body: body.clone(),
                arg: n,
            }));
        }
    }

    // Stuck substitution of a constructor-only argument: substitute it.
    if let Proc::MSubst { binder, body, arg } = p {
        if let Pattern::Var(w) = binder {
            if crate::msg::pure_value(arg) && !matches!(arg, MsgTerm::Var(_)) {
                return Ok(Some(super::build::subst_msg_var(body, w, arg)));
            }
        }
    }

    // Sum eta across the branches of a message case:
    // case z of x → C[inl x] | y → C[inr y]  ⇒  C[z].
    if let Proc::MCase {
        scrutinee,
        left_pat: Pattern::Var(x),
        left,
        right_pat: Pattern::Var(y),
        right,
    } = p
    {
        if let (Some(l), Some(r)) = (
            mark_inj_proc(left, true, x),
            mark_inj_proc(right, false, y),
        ) {
            if !l.free_vars().contains(x)
                && !r.free_vars().contains(y)
                && alpha_canonical_proc(&l) == alpha_canonical_proc(&r)
            {
                return Ok(Some(super::build::subst_msg_var(
                    &l,
                    ETA_HOLE,
                    &MsgTerm::Var(scrutinee.clone()),
                )));
            }
        }
    }

    // Factor a common independent prefix out of the two branches of a
    // message case. The opposite orientation (pushing prefixes into the
    // branches) interacts badly with prefix sorting: a prefix trapped
    // under the scrutinee's binder could never rejoin its twin outside.
    if let Some((z, lp, l, rp, r)) = as_mcase(p) {
        if let Some(factored) = factor_common_prefix(z, lp, l, rp, r) {
            return Ok(Some(factored));
        }
    }
    if let Proc::Put {
        chan,
        payload,
        body,
    } = p
    {
        if let MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } = payload
        {
            return Ok(Some(mk_mcase(
                scrutinee,
                left_pat,
                Proc::put(chan, (**left).clone(), (**body).clone()),
                right_pat,
                Proc::put(chan, (**right).clone(), (**body).clone()),
            )));
        }
    }
    if let Proc::MSubst { binder, body, arg } = p {
        if let MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } = arg
        {
            return Ok(Some(mk_mcase(
                scrutinee,
                left_pat,
                Proc::MSubst {
                    binder: binder.clone(),
                    body: body.clone(),
                    arg: (**left).clone(),
                },
                right_pat,
                Proc::MSubst {
                    binder: binder.clone(),
                    body: body.clone(),
                    arg: (**right).clone(),
                },
            )));
        }
    }
    if let Proc::Fork {
        chan,
        c1,
        left,
        c2,
        right,
    } = p
    {
        if let Some((z, lp, l, rp, r)) = as_mcase(left) {
            return Ok(Some(mk_mcase(
                z,
                lp,
                Proc::fork(chan, c1, l.clone(), c2, (**right).clone()),
                rp,
                Proc::fork(chan, c1, r.clone(), c2, (**right).clone()),
            )));
        }
        if let Some((z, lp, l, rp, r)) = as_mcase(right) {
            return Ok(Some(mk_mcase(
                z,
                lp,
                Proc::fork(chan, c1, (**left).clone(), c2, l.clone()),
                rp,
                Proc::fork(chan, c1, (**left).clone(), c2, r.clone()),
            )));
        }
    }
    // Nested cases ordered by scrutinee name.
    if let Some((z1, p1, left, p2, right)) = as_mcase(p) {
        if let (Some((lz, lq1, la, lq2, lb)), Some((rz, rq1, rc, rq2, rd))) =
            (as_mcase(left), as_mcase(right))
        {
            if lz == rz && lz < z1 && !p1.binds(lz) && !p2.binds(lz) {
                if let (Some(rc2), Some(rd2)) = (
                    align_patterns(rq1, lq1, rc),
                    align_patterns(rq2, lq2, rd),
                ) {
                    return Ok(Some(mk_mcase(
                        lz,
                        lq1,
                        mk_mcase(z1, p1, la.clone(), p2, rc2),
                        lq2,
                        mk_mcase(z1, p1, lb.clone(), p2, rd2),
                    )));
                }
            }
        }
    }

    // Rotate nested forks on independent channels so the smaller-named
    // channel forks outermost. Which inner branch keeps the outer fork is
    // forced by where the outer's bound component is consumed.
    if let Proc::Fork {
        chan: a,
        c1: a1,
        left,
        c2: a2,
        right,
    } = p
    {
        if let Proc::Fork {
            chan: b,
            c1: b1,
            left: s1,
            c2: b2,
            right: s2,
        } = &**left
        {
            if b != a1 && b < a {
                if s1.channels().contains(a1) {
                    return Ok(Some(Proc::fork(
                        b,
                        b1,
                        Proc::fork(a, a1, (**s1).clone(), a2, (**right).clone()),
                        b2,
                        (**s2).clone(),
                    )));
                }
                if s2.channels().contains(a1) {
                    return Ok(Some(Proc::fork(
                        b,
                        b1,
                        (**s1).clone(),
                        b2,
                        Proc::fork(a, a1, (**s2).clone(), a2, (**right).clone()),
                    )));
                }
            }
        }
        if let Proc::Fork {
            chan: b,
            c1: b1,
            left: s1,
            c2: b2,
            right: s2,
        } = &**right
        {
            if b != a2 && b < a {
                if s1.channels().contains(a2) {
                    return Ok(Some(Proc::fork(
                        b,
                        b1,
                        Proc::fork(a, a1, (**left).clone(), a2, (**s1).clone()),
                        b2,
                        (**s2).clone(),
                    )));
                }
                if s2.channels().contains(a2) {
                    return Ok(Some(Proc::fork(
                        b,
                        b1,
                        (**s1).clone(),
                        b2,
                        Proc::fork(a, a1, (**left).clone(), a2, (**s2).clone()),
                    )));
                }
            }
        }
    }

    // Pull independent prefixes out of fork branches.
    if let Proc::Fork {
        chan,
        c1,
        left,
        c2,
        right,
    } = p
    {
        if let Some(hoisted) = hoist_from_branch(left, c1, chan, |inner| {
            Proc::fork(chan, c1, inner, c2, (**right).clone())
        }) {
            return Ok(Some(hoisted));
        }
        if let Some(hoisted) = hoist_from_branch(right, c2, chan, |inner| {
            Proc::fork(chan, c1, (**left).clone(), c2, inner)
        }) {
            return Ok(Some(hoisted));
        }
    }

    // Reorder the maximal prefix chain at this node into its least
    // linearisation: a greedy topological sort under the binding and
    // same-channel dependencies, choosing the least key among the
    // available prefixes. Adjacent independent swaps generate every
    // linearisation of the dependency order, so this stays within the
    // interchange equations.
    if rank(p).is_some() {
        if let Some(sorted) = sort_prefix_chain(p) {
            return Ok(Some(sorted));
        }
    }

    // Order adjacent stuck substitutions by argument.
    if let Proc::MSubst {
        binder: by,
        body,
        arg: g,
    } = p
    {
        if let Proc::MSubst {
            binder: bx,
            body: inner,
            arg: f,
        } = &**body
        {
            let f_free = f.free_vars();
            let indep = by.vars().iter().all(|v| !f_free.contains(v));
            if indep && f < g {
                return Ok(Some(Proc::MSubst {
                    binder: bx.clone(),
                    body: Box::new(Proc::MSubst {
                        binder: by.clone(),
                        body: inner.clone(),
                        arg: g.clone(),
                    }),
                    arg: f.clone(),
                }));
            }
        }
    }

    // Right-nest stuck cuts.
    if let Proc::Cut {
        left,
        out_chan,
        in_chan,
        right,
    } = p
    {
        if let Proc::Cut {
            left: il,
            out_chan: ic_out,
            in_chan: ic_in,
            right: ir,
        } = &**left
        {
            if ir.channels().contains(out_chan) {
                return Ok(Some(Proc::cut(
                    (**il).clone(),
                    ic_out,
                    ic_in,
                    Proc::cut((**ir).clone(), out_chan, in_chan, (**right).clone()),
                )));
            }
            if il.channels().contains(out_chan) {
                return Ok(Some(Proc::cut(
                    Proc::cut((**il).clone(), out_chan, in_chan, (**right).clone()),
                    ic_out,
                    ic_in,
                    (**ir).clone(),
                )));
            }
        }
    }

    Ok(None)
}

const ETA_HOLE: &str = "%eta-hole%";

/// Replace the unique `injN(var)` payload occurrence by the hole marker,
/// walking every message term of the process.
fn mark_inj_proc(p: &Proc, left: bool, var: &str) -> Option<Proc> {
    let mut found = false;
    let out = mark_inj_proc_go(p, left, var, &mut found);
    if found {
        Some(out)
    } else {
        None
    }
}

fn mark_inj_proc_go(p: &Proc, left: bool, var: &str, found: &mut bool) -> Proc {
    let mark_msg = |t: &MsgTerm, found: &mut bool| -> MsgTerm {
        if *found {
            return t.clone();
        }
        match crate::msg::mark_inj_term(t, left, var, ETA_HOLE) {
            Some(marked) => {
                *found = true;
                marked
            }
            None => t.clone(),
        }
    };
    match p {
        Proc::Id { .. } | Proc::End { .. } | Proc::Prim { .. } | Proc::MAbsurd { .. } => p.clone(),
        Proc::Cut {
            left: l,
            out_chan,
            in_chan,
            right: r,
        } => Proc::Cut {
            left: Box::new(mark_inj_proc_go(l, left, var, found)),
            out_chan: out_chan.clone(),
            in_chan: in_chan.clone(),
            right: Box::new(mark_inj_proc_go(r, left, var, found)),
        },
        Proc::Split { chan, c1, c2, body } => Proc::Split {
            chan: chan.clone(),
            c1: c1.clone(),
            c2: c2.clone(),
            body: Box::new(mark_inj_proc_go(body, left, var, found)),
        },
        Proc::Fork {
            chan,
            c1,
            left: l,
            c2,
            right: r,
        } => Proc::Fork {
            chan: chan.clone(),
            c1: c1.clone(),
            left: Box::new(mark_inj_proc_go(l, left, var, found)),
            c2: c2.clone(),
            right: Box::new(mark_inj_proc_go(r, left, var, found)),
        },
        Proc::Close { chan, body } => Proc::Close {
            chan: chan.clone(),
            body: Box::new(mark_inj_proc_go(body, left, var, found)),
        },
        Proc::Get {
            chan,
            pattern,
            body,
        } => Proc::Get {
            chan: chan.clone(),
            pattern: pattern.clone(),
            body: Box::new(mark_inj_proc_go(body, left, var, found)),
        },
        Proc::Put {
            chan,
            payload,
            body,
        } => {
            let payload = mark_msg(payload, found);
            Proc::Put {
                chan: chan.clone(),
                payload,
                body: Box::new(mark_inj_proc_go(body, left, var, found)),
            }
        }
        Proc::MCase {
            scrutinee,
            left_pat,
            left: l,
            right_pat,
            right: r,
        } => Proc::MCase {
            scrutinee: scrutinee.clone(),
            left_pat: left_pat.clone(),
            left: Box::new(mark_inj_proc_go(l, left, var, found)),
            right_pat: right_pat.clone(),
            right: Box::new(mark_inj_proc_go(r, left, var, found)),
        },
        Proc::MSubst { binder, body, arg } => {
            let arg = mark_msg(arg, found);
            Proc::MSubst {
                binder: binder.clone(),
                body: Box::new(mark_inj_proc_go(body, left, var, found)),
                arg,
            }
        }
    }
}

/// `case z of p1 → P·s | p2 → P·t  ⇒  P·case z of p1 → s | p2 → t` when the
/// two branch heads are the same action on the same channel (modulo binder
/// renaming) and independent of the case.
fn factor_common_prefix(
    z: &Name,
    lp: &Pattern,
    left: &Proc,
    rp: &Pattern,
    right: &Proc,
) -> Option<Proc> {
    let lc = prefix_chan(left)?;
    let rc = prefix_chan(right)?;
    if lc != rc {
        return None;
    }
    match (left, right) {
        (
            Proc::Close { body: lb, .. },
            Proc::Close { body: rb, .. },
        ) => Some(Proc::close(
            lc,
            mk_mcase(z, lp, (**lb).clone(), rp, (**rb).clone()),
        )),
        (
            Proc::Split {
                c1: l1,
                c2: l2,
                body: lb,
                ..
            },
            Proc::Split {
                c1: r1,
                c2: r2,
                body: rb,
                ..
            },
        ) => {
            let mut map = BTreeMap::new();
            if r1 != l1 {
                map.insert(r1.clone(), l1.clone());
            }
            if r2 != l2 {
                map.insert(r2.clone(), l2.clone());
            }
            let rb = if map.is_empty() {
                (**rb).clone()
            } else {
                if rb.all_names().contains(l1) || rb.all_names().contains(l2) {
                    return None;
                }
                super::build::rename_all(rb, &map)
            };
            Some(Proc::split(
                lc,
                l1,
                l2,
                mk_mcase(z, lp, (**lb).clone(), rp, rb),
            ))
        }
        (
            Proc::Get {
                pattern: lpat,
                body: lb,
                ..
            },
            Proc::Get {
                pattern: rpat,
                body: rb,
                ..
            },
        ) => {
            // The factored binder must not capture the scrutinee or the
            // case binders.
            if lpat.binds(z) || lpat.vars().iter().any(|v| lp.binds(v) || rp.binds(v)) {
                return None;
            }
            let rb = align_patterns(rpat, lpat, rb)?;
            Some(Proc::get(
                lc,
                lpat.clone(),
                mk_mcase(z, lp, (**lb).clone(), rp, rb),
            ))
        }
        (
            Proc::Put {
                payload: lf,
                body: lb,
                ..
            },
            Proc::Put {
                payload: rf,
                body: rb,
                ..
            },
        ) => {
            if crate::msg::alpha_canonical(lf) != crate::msg::alpha_canonical(rf) {
                return None;
            }
            let fv = lf.free_vars();
            if fv.contains(z)
                || lp.vars().iter().any(|v| fv.contains(v))
                || rp.vars().iter().any(|v| fv.contains(v))
            {
                return None;
            }
            Some(Proc::put(
                lc,
                lf.clone(),
                mk_mcase(z, lp, (**lb).clone(), rp, (**rb).clone()),
            ))
        }
        _ => None,
    }
}

fn hoist_from_branch(
    branch: &Proc,
    branch_chan: &Name,
    fork_chan: &Name,
    rebuild: impl FnOnce(Proc) -> Proc,
) -> Option<Proc> {
    let chan = prefix_chan(branch)?;
    if chan == branch_chan || chan == fork_chan {
        return None;
    }
    let inner = prefix_body(branch)?.clone();
    Some(with_prefix_body(branch, rebuild(inner)))
}

/// Rename the variables of `from` to those of `to` in `body` (same shapes).
fn align_patterns(from: &Pattern, to: &Pattern, body: &Proc) -> Option<Proc> {
    fn shapes(a: &Pattern, b: &Pattern) -> bool {
        match (a, b) {
            (Pattern::Var(_), Pattern::Var(_)) | (Pattern::Unit, Pattern::Unit) => true,
            (Pattern::Pair(a1, a2), Pattern::Pair(b1, b2)) => shapes(a1, b1) && shapes(a2, b2),
            _ => false,
        }
    }
    if !shapes(from, to) {
        return None;
    }
    let fv = from.vars();
    let tv = to.vars();
    if fv == tv {
        return Some(body.clone());
    }
    let mut gen = NameGen::avoiding(body.all_names().into_iter().chain(tv.iter().cloned()));
    let mut map = BTreeMap::new();
    let mids: Vec<Name> = fv.iter().map(|v| gen.fresh(v)).collect();
    for (v, m) in fv.iter().zip(mids.iter()) {
        map.insert(v.clone(), m.clone());
    }
    let mut body = super::build::rename_all(body, &map);
    map.clear();
    for (m, t) in mids.iter().zip(tv.iter()) {
        map.insert(m.clone(), t.clone());
    }
    body = super::build::rename_all(&body, &map);
    Some(body)
}

/// Rename bound channels to `c%i` and bound variables to `v%i` in traversal
/// order; free names are untouched.
pub fn alpha_canonical_proc(p: &Proc) -> Proc {
    let mut counter = 0u64;
    canon(p, &BTreeMap::new(), &mut counter)
}

fn canon_name(kind: &str, counter: &mut u64) -> Name {
    let n = format!("{}%{}", kind, counter);
    *counter += 1;
    n
}

fn canon_pattern(pat: &Pattern, env: &mut BTreeMap<Name, Name>, counter: &mut u64) -> Pattern {
    match pat {
        Pattern::Var(n) => {
            let new = canon_name("v", counter);
            env.insert(n.clone(), new.clone());
            Pattern::Var(new)
        }
        Pattern::Pair(a, b) => {
            let a = canon_pattern(a, env, counter);
            let b = canon_pattern(b, env, counter);
            Pattern::pair(a, b)
        }
        Pattern::Unit => Pattern::Unit,
    }
}

fn canon_msg(t: &MsgTerm, env: &BTreeMap<Name, Name>, counter: &mut u64) -> MsgTerm {
    let f = |n: &Name| env.get(n).cloned().unwrap_or_else(|| n.clone());
    match t {
        MsgTerm::Var(n) => MsgTerm::Var(f(n)),
        MsgTerm::Axiom(name, args) => MsgTerm::Axiom(
            name.clone(),
            args.iter().map(|a| canon_msg(a, env, counter)).collect(),
        ),
        MsgTerm::Subst { binder, body, arg } => {
            let mut inner = env.clone();
            let binder = canon_pattern(binder, &mut inner, counter);
            let body = canon_msg(body, &inner, counter);
            let arg = canon_msg(arg, env, counter);
            MsgTerm::subst(binder, body, arg)
        }
        MsgTerm::Pair(a, b) => MsgTerm::pair(canon_msg(a, env, counter), canon_msg(b, env, counter)),
        MsgTerm::UnitVal => MsgTerm::UnitVal,
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            let scrutinee = f(scrutinee);
            let mut lenv = env.clone();
            let left_pat = canon_pattern(left_pat, &mut lenv, counter);
            let left = canon_msg(left, &lenv, counter);
            let mut renv = env.clone();
            let right_pat = canon_pattern(right_pat, &mut renv, counter);
            let right = canon_msg(right, &renv, counter);
            MsgTerm::Case {
                scrutinee,
                left_pat,
                left: Box::new(left),
                right_pat,
                right: Box::new(right),
            }
        }
        MsgTerm::Inj1(x) => MsgTerm::inj1(canon_msg(x, env, counter)),
        MsgTerm::Inj2(x) => MsgTerm::inj2(canon_msg(x, env, counter)),
        MsgTerm::Absurd(z) => MsgTerm::Absurd(f(z)),
    }
}

fn canon(p: &Proc, env: &BTreeMap<Name, Name>, counter: &mut u64) -> Proc {
    let f = |n: &Name, env: &BTreeMap<Name, Name>| env.get(n).cloned().unwrap_or_else(|| n.clone());
    match p {
        Proc::Id { input, ty, output } => Proc::Id {
            input: f(input, env),
            ty: ty.clone(),
            output: f(output, env),
        },
        Proc::Prim {
            name,
            msg_args,
            inputs,
            outputs,
        } => Proc::Prim {
            name: name.clone(),
            msg_args: msg_args.iter().map(|n| f(n, env)).collect(),
            inputs: inputs.iter().map(|n| f(n, env)).collect(),
            outputs: outputs.iter().map(|n| f(n, env)).collect(),
        },
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => {
            let co = canon_name("c", counter);
            let ci = canon_name("c", counter);
            let mut lenv = env.clone();
            lenv.insert(out_chan.clone(), co.clone());
            let left = canon(left, &lenv, counter);
            let mut renv = env.clone();
            renv.insert(in_chan.clone(), ci.clone());
            let right = canon(right, &renv, counter);
            Proc::Cut {
                left: Box::new(left),
                out_chan: co,
                in_chan: ci,
                right: Box::new(right),
            }
        }
        Proc::Split { chan, c1, c2, body } => {
            let chan = f(chan, env);
            let n1 = canon_name("c", counter);
            let n2 = canon_name("c", counter);
            let mut inner = env.clone();
            inner.insert(c1.clone(), n1.clone());
            inner.insert(c2.clone(), n2.clone());
            Proc::Split {
                chan,
                c1: n1,
                c2: n2,
                body: Box::new(canon(body, &inner, counter)),
            }
        }
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => {
            let chan = f(chan, env);
            let n1 = canon_name("c", counter);
            let mut lenv = env.clone();
            lenv.insert(c1.clone(), n1.clone());
            let left = canon(left, &lenv, counter);
            let n2 = canon_name("c", counter);
            let mut renv = env.clone();
            renv.insert(c2.clone(), n2.clone());
            let right = canon(right, &renv, counter);
            Proc::Fork {
                chan,
                c1: n1,
                left: Box::new(left),
                c2: n2,
                right: Box::new(right),
            }
        }
        Proc::Close { chan, body } => Proc::Close {
            chan: f(chan, env),
            body: Box::new(canon(body, env, counter)),
        },
        Proc::End { chan } => Proc::End { chan: f(chan, env) },
        Proc::Get {
            chan,
            pattern,
            body,
        } => {
            let chan = f(chan, env);
            let mut inner = env.clone();
            let pattern = canon_pattern(pattern, &mut inner, counter);
            Proc::Get {
                chan,
                pattern,
                body: Box::new(canon(body, &inner, counter)),
            }
        }
        Proc::Put {
            chan,
            payload,
            body,
        } => Proc::Put {
            chan: f(chan, env),
            payload: canon_msg(payload, env, counter),
            body: Box::new(canon(body, env, counter)),
        },
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            let scrutinee = f(scrutinee, env);
            let mut lenv = env.clone();
            let left_pat = canon_pattern(left_pat, &mut lenv, counter);
            let left = canon(left, &lenv, counter);
            let mut renv = env.clone();
            let right_pat = canon_pattern(right_pat, &mut renv, counter);
            let right = canon(right, &renv, counter);
            Proc::MCase {
                scrutinee,
                left_pat,
                left: Box::new(left),
                right_pat,
                right: Box::new(right),
            }
        }
        Proc::MAbsurd { scrutinee } => Proc::MAbsurd {
            scrutinee: f(scrutinee, env),
        },
        Proc::MSubst { binder, body, arg } => {
            let arg = canon_msg(arg, env, counter);
            let mut inner = env.clone();
            let binder = canon_pattern(binder, &mut inner, counter);
            Proc::MSubst {
                binder,
                body: Box::new(canon(body, &inner, counter)),
                arg,
            }
        }
    }
}

fn exhaust_steps(mut p: Proc, fuel: u64, spent: &mut u64) -> Result<Proc, FuelExhausted> {
    while let Some((p2, _)) = step(&p) {
        p = p2;
        *spent += 1;
        if *spent >= fuel {
            return Err(FuelExhausted { steps_taken: *spent });
        }
    }
    Ok(p)
}

pub fn normalize_proc_fuel(p: &Proc, fuel: u64) -> Result<Proc, FuelExhausted> {
    let mut spent = 0u64;
    let mut current = exhaust_steps(p.clone(), fuel, &mut spent)?;
    current = alpha_canonical_proc(&current);
    loop {
        let Some(next) = eq_step(&current, fuel)? else {
            return Ok(current);
        };
        spent += 1;
        if spent >= fuel {
            return Err(FuelExhausted { steps_taken: spent });
        }
        let next = exhaust_steps(next, fuel, &mut spent)?;
        let next = alpha_canonical_proc(&next);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Cut elimination followed by canonicalisation modulo the process
/// equations.
pub fn normalize_proc(p: &Proc) -> Result<Proc, FuelExhausted> {
    normalize_proc_fuel(p, DEFAULT_FUEL)
}

