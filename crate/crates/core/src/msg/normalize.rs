//! Normal forms for message terms.
//!
//! Cut elimination alone is not confluent; the identities between cut-free
//! terms are oriented here into a canonicalisation pass:
//!
//!   * everything absorbs into `{} z`,
//!   * `case` is pushed outward past pairs and injections,
//!   * nested cases on distinct scrutinees are ordered by scrutinee name,
//!   * chains of atomic substitutions are right-nested in the body and
//!     independent ones are ordered by their argument terms,
//!
//! followed by renaming bound variables to `v%0, v%1, …` in traversal order.
//! The result is a fixed point of the whole pipeline; idempotence and
//! confluence are checked empirically by the test corpus, not proven.

use super::error::FuelExhausted;
use super::rewrite::reduce_msg;
use super::subst::substitute_msg_raw;
use super::types::{MsgTerm, Pattern};
use crate::fresh::NameGen;
use crate::Name;
use std::collections::BTreeMap;

pub const DEFAULT_FUEL: u64 = 1_000_000;

/// One oriented identity step, leftmost-outermost.
fn identity_step(term: &MsgTerm, gen: &mut NameGen) -> Option<MsgTerm> {
    if let Some(t) = identity_at(term, gen) {
        return Some(t);
    }
    match term {
        MsgTerm::Var(_) | MsgTerm::UnitVal | MsgTerm::Absurd(_) => None,
        MsgTerm::Axiom(f, args) => {
            for (i, a) in args.iter().enumerate() {
                if let Some(a2) = identity_step(a, gen) {
                    let mut args = args.clone();
                    args[i] = a2;
                    return Some(MsgTerm::Axiom(f.clone(), args));
                }
            }
            None
        }
        MsgTerm::Subst { binder, body, arg } => {
            if let Some(b2) = identity_step(body, gen) {
                return Some(MsgTerm::subst(binder.clone(), b2, (**arg).clone()));
            }
            identity_step(arg, gen)
                .map(|a2| MsgTerm::subst(binder.clone(), (**body).clone(), a2))
        }
        MsgTerm::Pair(a, b) => {
            if let Some(a2) = identity_step(a, gen) {
                return Some(MsgTerm::pair(a2, (**b).clone()));
            }
            identity_step(b, gen).map(|b2| MsgTerm::pair((**a).clone(), b2))
        }
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            if let Some(l2) = identity_step(left, gen) {
                return Some(MsgTerm::Case {
                    scrutinee: scrutinee.clone(),
                    left_pat: left_pat.clone(),
                    left: Box::new(l2),
                    right_pat: right_pat.clone(),
                    right: right.clone(),
                });
            }
            identity_step(right, gen).map(|r2| MsgTerm::Case {
                scrutinee: scrutinee.clone(),
                left_pat: left_pat.clone(),
                left: left.clone(),
                right_pat: right_pat.clone(),
                right: Box::new(r2),
            })
        }
        MsgTerm::Inj1(t) => identity_step(t, gen).map(MsgTerm::inj1),
        MsgTerm::Inj2(t) => identity_step(t, gen).map(MsgTerm::inj2),
    }
}

/// Constructor-only terms; substituting one for a linear variable is sound.
pub(crate) fn pure_value(t: &MsgTerm) -> bool {
    match t {
        MsgTerm::Var(_) | MsgTerm::UnitVal => true,
        MsgTerm::Pair(a, b) => pure_value(a) && pure_value(b),
        MsgTerm::Inj1(t) | MsgTerm::Inj2(t) => pure_value(t),
        _ => false,
    }
}

/// Replace the unique payload occurrence `injN(var)` by a hole marker.
pub(crate) fn mark_inj(t: &MsgTerm, left: bool, var: &str, hole: &str) -> Option<MsgTerm> {
    let mut found = false;
    let out = mark_inj_go(t, left, var, hole, &mut found);
    if found {
        Some(out)
    } else {
        None
    }
}

fn mark_inj_go(t: &MsgTerm, left: bool, var: &str, hole: &str, found: &mut bool) -> MsgTerm {
    match t {
        MsgTerm::Inj1(inner) if left && **inner == MsgTerm::Var(var.to_string()) => {
            *found = true;
            MsgTerm::Var(hole.to_string())
        }
        MsgTerm::Inj2(inner) if !left && **inner == MsgTerm::Var(var.to_string()) => {
            *found = true;
            MsgTerm::Var(hole.to_string())
        }
        MsgTerm::Var(_) | MsgTerm::UnitVal | MsgTerm::Absurd(_) => t.clone(),
        MsgTerm::Axiom(f, args) => MsgTerm::Axiom(
            f.clone(),
            args.iter()
                .map(|a| mark_inj_go(a, left, var, hole, found))
                .collect(),
        ),
        MsgTerm::Subst { binder, body, arg } => MsgTerm::Subst {
            binder: binder.clone(),
            body: Box::new(mark_inj_go(body, left, var, hole, found)),
            arg: Box::new(mark_inj_go(arg, left, var, hole, found)),
        },
        MsgTerm::Pair(a, b) => MsgTerm::pair(
            mark_inj_go(a, left, var, hole, found),
            mark_inj_go(b, left, var, hole, found),
        ),
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left: l,
            right_pat,
            right: r,
        } => MsgTerm::Case {
            scrutinee: scrutinee.clone(),
            left_pat: left_pat.clone(),
            left: Box::new(mark_inj_go(l, left, var, hole, found)),
            right_pat: right_pat.clone(),
            right: Box::new(mark_inj_go(r, left, var, hole, found)),
        },
        MsgTerm::Inj1(inner) => MsgTerm::inj1(mark_inj_go(inner, left, var, hole, found)),
        MsgTerm::Inj2(inner) => MsgTerm::inj2(mark_inj_go(inner, left, var, hole, found)),
    }
}

const HOLE: &str = "%eta-hole%";

fn identity_at(term: &MsgTerm, gen: &mut NameGen) -> Option<MsgTerm> {
    // Stuck substitution of a constructor-only argument: substitute it.
    if let MsgTerm::Subst { binder, body, arg } = term {
        if let Pattern::Var(w) = binder {
            if pure_value(arg) && !matches!(**arg, MsgTerm::Var(_)) {
                return Some(substitute_msg_raw(body, w, arg, gen));
            }
        }
    }
    // Sum eta: case z of x → C[inl x] | y → C[inr y]  ⇒  C[z].
    if let MsgTerm::Case {
        scrutinee,
        left_pat: Pattern::Var(x),
        left,
        right_pat: Pattern::Var(y),
        right,
    } = term
    {
        if let (Some(l), Some(r)) = (
            mark_inj(left, true, x, HOLE),
            mark_inj(right, false, y, HOLE),
        ) {
            if !l.free_vars().contains(x)
                && !r.free_vars().contains(y)
                && alpha_canonical(&l) == alpha_canonical(&r)
            {
                return Some(substitute_msg_raw(
                    &l,
                    HOLE,
                    &MsgTerm::Var(scrutinee.clone()),
                    gen,
                ));
            }
        }
    }
    // Cases and ex falso hoist out of axiom arguments (copair and initial
    // fusion; in the variable-argument presentation these commutations are
    // already part of the substitution rewrites).
    if let MsgTerm::Axiom(f, args) = term {
        for (i, a) in args.iter().enumerate() {
            if let MsgTerm::Absurd(z) = a {
                return Some(MsgTerm::Absurd(z.clone()));
            }
            if let MsgTerm::Case {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } = a
            {
                let mut largs = args.clone();
                largs[i] = (**left).clone();
                let mut rargs = args.clone();
                rargs[i] = (**right).clone();
                return Some(MsgTerm::Case {
                    scrutinee: scrutinee.clone(),
                    left_pat: left_pat.clone(),
                    left: Box::new(MsgTerm::Axiom(f.clone(), largs)),
                    right_pat: right_pat.clone(),
                    right: Box::new(MsgTerm::Axiom(f.clone(), rargs)),
                });
            }
        }
    }
    match term {
        // Absorption into {} z.
        MsgTerm::Pair(a, b) => {
            if let MsgTerm::Absurd(z) = &**a {
                return Some(MsgTerm::Absurd(z.clone()));
            }
            if let MsgTerm::Absurd(z) = &**b {
                return Some(MsgTerm::Absurd(z.clone()));
            }
            // Push case out of either component, left first.
            if let MsgTerm::Case {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } = &**a
            {
                return Some(push_case(
                    scrutinee, left_pat, left, right_pat, right, gen,
                    |l| MsgTerm::pair(l, (**b).clone()),
                    |r| MsgTerm::pair(r, (**b).clone()),
                ));
            }
            if let MsgTerm::Case {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } = &**b
            {
                return Some(push_case(
                    scrutinee, left_pat, left, right_pat, right, gen,
                    |l| MsgTerm::pair((**a).clone(), l),
                    |r| MsgTerm::pair((**a).clone(), r),
                ));
            }
            None
        }
        MsgTerm::Inj1(t) => match &**t {
            MsgTerm::Absurd(z) => Some(MsgTerm::Absurd(z.clone())),
            MsgTerm::Case {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => Some(push_case(
                scrutinee, left_pat, left, right_pat, right, gen,
                MsgTerm::inj1,
                MsgTerm::inj1,
            )),
            _ => None,
        },
        MsgTerm::Inj2(t) => match &**t {
            MsgTerm::Absurd(z) => Some(MsgTerm::Absurd(z.clone())),
            MsgTerm::Case {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => Some(push_case(
                scrutinee, left_pat, left, right_pat, right, gen,
                MsgTerm::inj2,
                MsgTerm::inj2,
            )),
            _ => None,
        },
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            // case z′ of … {} z | … {} z  ⇒  {} z
            if let (MsgTerm::Absurd(z1), MsgTerm::Absurd(z2)) = (&**left, &**right) {
                if z1 == z2 && !left_pat.binds(z1) && !right_pat.binds(z2) {
                    return Some(MsgTerm::Absurd(z1.clone()));
                }
            }
            // Nested case interchange, ordered by scrutinee name.
            case_interchange(scrutinee, left_pat, left, right_pat, right)
        }
        // Substitution chains: right-nest, then order independent pairs.
        MsgTerm::Subst { binder, body, arg } => {
            if let MsgTerm::Subst {
                binder: inner_binder,
                body: inner_body,
                arg: inner_arg,
            } = &**arg
            {
                // (y ↦ h)((x ↦ g) f)  ⇒  (x ↦ (y ↦ h) g) f
                return Some(MsgTerm::subst(
                    inner_binder.clone(),
                    MsgTerm::subst(binder.clone(), (**body).clone(), (**inner_body).clone()),
                    (**inner_arg).clone(),
                ));
            }
            if let MsgTerm::Subst {
                binder: inner_binder,
                body: inner_body,
                arg: inner_arg,
            } = &**body
            {
                // (y ↦ (x ↦ h) f) g ⇒ (x ↦ (y ↦ h) g) f  when independent and
                // the inner argument is smaller; arguments carry the ordering
                // because binder names are not stable under renaming.
                let outer_uses = inner_arg.free_vars();
                let independent = binder.vars().iter().all(|v| !outer_uses.contains(v));
                if independent && inner_arg < arg {
                    return Some(MsgTerm::subst(
                        inner_binder.clone(),
                        MsgTerm::subst(
                            binder.clone(),
                            (**inner_body).clone(),
                            (**arg).clone(),
                        ),
                        (**inner_arg).clone(),
                    ));
                }
            }
            None
        }
        _ => None,
    }
}

fn push_case(
    scrutinee: &Name,
    left_pat: &Pattern,
    left: &MsgTerm,
    right_pat: &Pattern,
    right: &MsgTerm,
    _gen: &mut NameGen,
    wrap_l: impl FnOnce(MsgTerm) -> MsgTerm,
    wrap_r: impl FnOnce(MsgTerm) -> MsgTerm,
) -> MsgTerm {
    MsgTerm::Case {
        scrutinee: scrutinee.clone(),
        left_pat: left_pat.clone(),
        left: Box::new(wrap_l(left.clone())),
        right_pat: right_pat.clone(),
        right: Box::new(wrap_r(right.clone())),
    }
}

/// case z1 of p1 → (case z2 …) | p2 → (case z2 …), with z2 < z1 and z2 free:
/// hoist the inner case. The two inner cases must first be binder-aligned.
fn case_interchange(
    z1: &Name,
    p1: &Pattern,
    left: &MsgTerm,
    p2: &Pattern,
    right: &MsgTerm,
) -> Option<MsgTerm> {
    let (lz, lq1, la, lq2, lb) = as_case(left)?;
    let (rz, rq1, rc, rq2, rd) = as_case(right)?;
    if lz != rz || p1.binds(lz) || p2.binds(lz) {
        return None;
    }
    if lz >= z1 {
        return None;
    }
    // Align the inner binders of the right branch with the left's.
    let (rc, rd) = align_binders(&lq1, &rq1, rc, &lq2, &rq2, rd)?;
    Some(MsgTerm::Case {
        scrutinee: lz.clone(),
        left_pat: lq1.clone(),
        left: Box::new(MsgTerm::Case {
            scrutinee: z1.clone(),
            left_pat: p1.clone(),
            left: Box::new(la.clone()),
            right_pat: p2.clone(),
            right: Box::new(rc),
        }),
        right_pat: lq2.clone(),
        right: Box::new(MsgTerm::Case {
            scrutinee: z1.clone(),
            left_pat: p1.clone(),
            left: Box::new(lb.clone()),
            right_pat: p2.clone(),
            right: Box::new(rd),
        }),
    })
}

fn as_case(t: &MsgTerm) -> Option<(&Name, Pattern, &MsgTerm, Pattern, &MsgTerm)> {
    if let MsgTerm::Case {
        scrutinee,
        left_pat,
        left,
        right_pat,
        right,
    } = t
    {
        Some((scrutinee, left_pat.clone(), left, right_pat.clone(), right))
    } else {
        None
    }
}

fn align_binders(
    lq1: &Pattern,
    rq1: &Pattern,
    rc: &MsgTerm,
    lq2: &Pattern,
    rq2: &Pattern,
    rd: &MsgTerm,
) -> Option<(MsgTerm, MsgTerm)> {
    let rc = rename_pattern_vars(rq1, lq1, rc)?;
    let rd = rename_pattern_vars(rq2, lq2, rd)?;
    Some((rc, rd))
}

/// Rename the variables of `from` to those of `to` inside `body`;
/// requires identical pattern shapes.
fn rename_pattern_vars(from: &Pattern, to: &Pattern, body: &MsgTerm) -> Option<MsgTerm> {
    fn shapes_match(a: &Pattern, b: &Pattern) -> bool {
        match (a, b) {
            (Pattern::Var(_), Pattern::Var(_)) | (Pattern::Unit, Pattern::Unit) => true,
            (Pattern::Pair(a1, a2), Pattern::Pair(b1, b2)) => {
                shapes_match(a1, b1) && shapes_match(a2, b2)
            }
            _ => false,
        }
    }
    if !shapes_match(from, to) {
        return None;
    }
    let fv = from.vars();
    let tv = to.vars();
    let mut body = body.clone();
    let mut gen = NameGen::avoiding(body.all_names().into_iter().chain(tv.iter().cloned()));
    // Two-phase rename through fresh intermediates, in case of overlap.
    let mids: Vec<Name> = fv.iter().map(|v| gen.fresh(v)).collect();
    for (v, m) in fv.iter().zip(mids.iter()) {
        body = substitute_msg_raw(&body, v, &MsgTerm::Var(m.clone()), &mut gen);
    }
    for (m, t) in mids.iter().zip(tv.iter()) {
        body = substitute_msg_raw(&body, m, &MsgTerm::Var(t.clone()), &mut gen);
    }
    Some(body)
}

/// Rename bound variables to `v%0, v%1, …` in traversal order.
pub fn alpha_canonical(term: &MsgTerm) -> MsgTerm {
    let mut counter = 0u64;
    canon(term, &BTreeMap::new(), &mut counter)
}

fn canon_pattern(pat: &Pattern, env: &mut BTreeMap<Name, Name>, counter: &mut u64) -> Pattern {
    match pat {
        Pattern::Var(n) => {
            let new = format!("v%{}", counter);
            *counter += 1;
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

fn canon(term: &MsgTerm, env: &BTreeMap<Name, Name>, counter: &mut u64) -> MsgTerm {
    match term {
        MsgTerm::Var(n) => MsgTerm::Var(env.get(n).cloned().unwrap_or_else(|| n.clone())),
        MsgTerm::Axiom(f, args) => MsgTerm::Axiom(
            f.clone(),
            args.iter().map(|a| canon(a, env, counter)).collect(),
        ),
        MsgTerm::Subst { binder, body, arg } => {
            let mut inner = env.clone();
            let binder = canon_pattern(binder, &mut inner, counter);
            let body = canon(body, &inner, counter);
            let arg = canon(arg, env, counter);
            MsgTerm::subst(binder, body, arg)
        }
        MsgTerm::Pair(a, b) => {
            MsgTerm::pair(canon(a, env, counter), canon(b, env, counter))
        }
        MsgTerm::UnitVal => MsgTerm::UnitVal,
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            let scrutinee = env.get(scrutinee).cloned().unwrap_or_else(|| scrutinee.clone());
            let mut lenv = env.clone();
            let left_pat = canon_pattern(left_pat, &mut lenv, counter);
            let left = canon(left, &lenv, counter);
            let mut renv = env.clone();
            let right_pat = canon_pattern(right_pat, &mut renv, counter);
            let right = canon(right, &renv, counter);
            MsgTerm::Case {
                scrutinee,
                left_pat,
                left: Box::new(left),
                right_pat,
                right: Box::new(right),
            }
        }
        MsgTerm::Inj1(t) => MsgTerm::inj1(canon(t, env, counter)),
        MsgTerm::Inj2(t) => MsgTerm::inj2(canon(t, env, counter)),
        MsgTerm::Absurd(z) => {
            MsgTerm::Absurd(env.get(z).cloned().unwrap_or_else(|| z.clone()))
        }
    }
}

fn exhaust_cuts(mut term: MsgTerm, fuel: &mut u64, spent: &mut u64) -> Result<MsgTerm, FuelExhausted> {
    while let Some((t2, _)) = reduce_msg(&term) {
        term = t2;
        *spent += 1;
        if *spent >= *fuel {
            return Err(FuelExhausted { steps_taken: *spent });
        }
    }
    Ok(term)
}

pub fn normalize_msg_fuel(term: &MsgTerm, mut fuel: u64) -> Result<MsgTerm, FuelExhausted> {
    let mut spent = 0u64;
    let mut current = exhaust_cuts(term.clone(), &mut fuel, &mut spent)?;
    current = alpha_canonical(&current);
    loop {
        let mut gen = NameGen::avoiding(current.all_names());
        let Some(next) = identity_step(&current, &mut gen) else {
            return Ok(current);
        };
        spent += 1;
        if spent >= fuel {
            return Err(FuelExhausted { steps_taken: spent });
        }
        let next = exhaust_cuts(next, &mut fuel, &mut spent)?;
        let next = alpha_canonical(&next);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Cut elimination followed by identity orientation and renaming of bound
/// variables; a fixed point of the whole pipeline.
pub fn normalize_msg(term: &MsgTerm) -> Result<MsgTerm, FuelExhausted> {
    normalize_msg_fuel(term, DEFAULT_FUEL)
}

/// Decide the term equivalence via canonical forms.
pub fn msg_eq(a: &MsgTerm, b: &MsgTerm) -> Result<bool, FuelExhausted> {
    Ok(normalize_msg(a)? == normalize_msg(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msg::identity::identity_term;
    use crate::msg::types::{MsgType, Pattern};

    /// The composite of the distributivity map with its inverse reduces to
    /// the identity of A * (B + C).
    #[test]
    fn distributive_round_trip() {
        // ctx {(w, x) : A * (B + C)} ⊢ case x of x1 → σ1((w,x1)) | x2 → σ2((w,x2))
        let forward = MsgTerm::case(
            "x",
            Pattern::var("x1"),
            MsgTerm::inj1(MsgTerm::pair(MsgTerm::var("w"), MsgTerm::var("x1"))),
            Pattern::var("x2"),
            MsgTerm::inj2(MsgTerm::pair(MsgTerm::var("w"), MsgTerm::var("x2"))),
        );
        // ctx {z : A*B + A*C} ⊢ case z of (y1,y2) → (y1, σ1(y2)) | (z1,z2) → (z1, σ2(z2))
        let backward = MsgTerm::case(
            "z",
            Pattern::pair(Pattern::var("y1"), Pattern::var("y2")),
            MsgTerm::pair(MsgTerm::var("y1"), MsgTerm::inj1(MsgTerm::var("y2"))),
            Pattern::pair(Pattern::var("z1"), Pattern::var("z2")),
            MsgTerm::pair(MsgTerm::var("z1"), MsgTerm::inj2(MsgTerm::var("z2"))),
        );
        let composite = MsgTerm::subst(Pattern::var("z"), backward.clone(), forward.clone());
        let normal = normalize_msg(&composite).unwrap();

        // Printed normal form: case x of x1 → (w, σ1(x1)) | x2 → (w, σ2(x2)).
        let printed = MsgTerm::case(
            "x",
            Pattern::var("x1"),
            MsgTerm::pair(MsgTerm::var("w"), MsgTerm::inj1(MsgTerm::var("x1"))),
            Pattern::var("x2"),
            MsgTerm::pair(MsgTerm::var("w"), MsgTerm::inj2(MsgTerm::var("x2"))),
        );
        assert_eq!(normal, normalize_msg(&printed).unwrap());

        // And it is the identity of A * (B + C) once the identity's pattern
        // is aligned with ours: ι's sequent is (v, z'):A*(B+C) ⊢ ι.
        let a = MsgType::atom("A");
        let b = MsgType::atom("B");
        let c = MsgType::atom("C");
        let ty = MsgType::prod(a, MsgType::sum(b, c));
        let (pat, iota) = identity_term(&ty);
        // Rename ι's pattern variables to (w, x) to share the sequent.
        let (pv, zv) = match &pat {
            Pattern::Pair(l, r) => match (&**l, &**r) {
                (Pattern::Var(l), Pattern::Var(r)) => (l.clone(), r.clone()),
                _ => panic!("unexpected identity pattern"),
            },
            _ => panic!("unexpected identity pattern"),
        };
        let iota = crate::msg::rename_var(&crate::msg::rename_var(&iota, &pv, "w"), &zv, "x");
        assert!(msg_eq(&composite, &iota).unwrap());
    }

    /// Pairing with ex falso collapses.
    #[test]
    fn pair_absorbs_absurd() {
        let t = MsgTerm::pair(MsgTerm::var("f"), MsgTerm::absurd("z"));
        assert_eq!(normalize_msg(&t).unwrap(), MsgTerm::absurd("z"));
    }

    /// The two σ1-pushed forms of the same derivation are identified.
    #[test]
    fn inj_case_identified() {
        let one = MsgTerm::inj1(MsgTerm::case(
            "z",
            Pattern::var("x"),
            MsgTerm::var("x"),
            Pattern::var("y"),
            MsgTerm::var("y"),
        ));
        let two = MsgTerm::case(
            "z",
            Pattern::var("x"),
            MsgTerm::inj1(MsgTerm::var("x")),
            Pattern::var("y"),
            MsgTerm::inj1(MsgTerm::var("y")),
        );
        assert!(msg_eq(&one, &two).unwrap());
    }

    #[test]
    fn distinct_normal_forms_differ() {
        let a = MsgTerm::inj1(MsgTerm::var("x"));
        let b = MsgTerm::inj2(MsgTerm::var("x"));
        assert!(!msg_eq(&a, &b).unwrap());
    }
}
