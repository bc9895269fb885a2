//! Cut elimination for the message logic.
//!
//! All redexes are rooted at substitution nodes. `reduce_msg` fires exactly
//! one rule at the leftmost-outermost redex. Substitutions whose argument is
//! an axiom application (or a bare variable under a compound binder) are the
//! atomic cuts; they are not redexes and survive in normal forms.

use super::subst::{rename_free, substitute_msg_raw};
use super::types::{MsgTerm, Pattern};
use crate::fresh::NameGen;

pub const MSG_RULES: &[&str] = &[
    "id-sequent",
    "sequent-id",
    "sequent-prod_r",
    "sequent-coprod",
    "coprod-sequent",
    "sequent-zero",
    "zero-sequent",
    "sequent-inj_l",
    "sequent-inj_r",
    "prod_r-prod_l",
    "unit_r-unit_l",
    "inj_l-coprod",
    "inj_r-coprod",
];

fn gen_for(term: &MsgTerm) -> NameGen {
    NameGen::avoiding(term.all_names())
}

/// Try every rule at this node, in priority order.
fn rule_at(term: &MsgTerm, gen: &mut NameGen) -> Option<(MsgTerm, &'static str)> {
    let MsgTerm::Subst { binder, body, arg } = term else {
        return None;
    };

    // [unit_r-unit_l]  (() ↦ g) ()  ⇒  g
    if matches!(binder, Pattern::Unit) && matches!(**arg, MsgTerm::UnitVal) {
        return Some(((**body).clone(), "unit_r-unit_l"));
    }

    // [prod_r-prod_l]  ((p, q) ↦ g)(f1, f2)  ⇒  (p ↦ (q ↦ g) f2) f1
    if let (Pattern::Pair(p, q), MsgTerm::Pair(f1, f2)) = (binder, &**arg) {
        let inner = MsgTerm::subst((**q).clone(), (**body).clone(), (**f2).clone());
        return Some((
            MsgTerm::subst((**p).clone(), inner, (**f1).clone()),
            "prod_r-prod_l",
        ));
    }

    // [inj_l-coprod] / [inj_r-coprod]
    if let Pattern::Var(z) = binder {
        if let MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } = &**body
        {
            if scrutinee == z {
                if let MsgTerm::Inj1(f) = &**arg {
                    return Some((
                        MsgTerm::subst(left_pat.clone(), (**left).clone(), (**f).clone()),
                        "inj_l-coprod",
                    ));
                }
                if let MsgTerm::Inj2(f) = &**arg {
                    return Some((
                        MsgTerm::subst(right_pat.clone(), (**right).clone(), (**f).clone()),
                        "inj_r-coprod",
                    ));
                }
            }
        }
    }

    // [sequent-id]  (w ↦ w) g  ⇒  g
    if let (Pattern::Var(w), MsgTerm::Var(v)) = (binder, &**body) {
        if w == v {
            return Some(((**arg).clone(), "sequent-id"));
        }
    }

    // [id-sequent]  (w ↦ f) x  ⇒  f[x/w]
    if let (Pattern::Var(w), MsgTerm::Var(x)) = (binder, &**arg) {
        return Some((
            substitute_msg_raw(body, w, &MsgTerm::Var(x.clone()), gen),
            "id-sequent",
        ));
    }

    // [zero-sequent]  (w ↦ g)({} z)  ⇒  {} z
    if let MsgTerm::Absurd(z) = &**arg {
        return Some((MsgTerm::Absurd(z.clone()), "zero-sequent"));
    }

    // [sequent-zero]  (w ↦ {} z) f  ⇒  {} z   (z not bound by w)
    if let MsgTerm::Absurd(z) = &**body {
        if !binder.binds(z) {
            return Some((MsgTerm::Absurd(z.clone()), "sequent-zero"));
        }
    }

    // [sequent-prod_r]  (w ↦ (g1, g2)) f  ⇒  component containing w
    if let MsgTerm::Pair(g1, g2) = &**body {
        let vars = binder.vars();
        if !vars.is_empty() {
            let f1 = g1.free_vars();
            let f2 = g2.free_vars();
            if vars.iter().all(|v| f1.contains(v)) {
                return Some((
                    MsgTerm::pair(
                        MsgTerm::subst(binder.clone(), (**g1).clone(), (**arg).clone()),
                        (**g2).clone(),
                    ),
                    "sequent-prod_r",
                ));
            }
            if vars.iter().all(|v| f2.contains(v)) {
                return Some((
                    MsgTerm::pair(
                        (**g1).clone(),
                        MsgTerm::subst(binder.clone(), (**g2).clone(), (**arg).clone()),
                    ),
                    "sequent-prod_r",
                ));
            }
        }
    }

    // [sequent-inj_l] / [sequent-inj_r]
    if let MsgTerm::Inj1(g) = &**body {
        return Some((
            MsgTerm::inj1(MsgTerm::subst(binder.clone(), (**g).clone(), (**arg).clone())),
            "sequent-inj_l",
        ));
    }
    if let MsgTerm::Inj2(g) = &**body {
        return Some((
            MsgTerm::inj2(MsgTerm::subst(binder.clone(), (**g).clone(), (**arg).clone())),
            "sequent-inj_r",
        ));
    }

    // [sequent-coprod]  (w ↦ case z of …) f  ⇒  case z of (w ↦ …) f | …
    if let MsgTerm::Case {
        scrutinee,
        left_pat,
        left,
        right_pat,
        right,
    } = &**body
    {
        if !binder.binds(scrutinee) {
            return Some((
                MsgTerm::Case {
                    scrutinee: scrutinee.clone(),
                    left_pat: left_pat.clone(),
                    left: Box::new(MsgTerm::subst(
                        binder.clone(),
                        (**left).clone(),
                        (**arg).clone(),
                    )),
                    right_pat: right_pat.clone(),
                    right: Box::new(MsgTerm::subst(
                        binder.clone(),
                        (**right).clone(),
                        (**arg).clone(),
                    )),
                },
                "sequent-coprod",
            ));
        }
    }

    // [coprod-sequent]  (w ↦ g)(case z of …)  ⇒  case z of (w ↦ g) f1 | …
    if let MsgTerm::Case {
        scrutinee,
        left_pat,
        left,
        right_pat,
        right,
    } = &**arg
    {
        return Some((
            MsgTerm::Case {
                scrutinee: scrutinee.clone(),
                left_pat: left_pat.clone(),
                left: Box::new(MsgTerm::subst(
                    binder.clone(),
                    (**body).clone(),
                    (**left).clone(),
                )),
                right_pat: right_pat.clone(),
                right: Box::new(MsgTerm::subst(
                    binder.clone(),
                    (**body).clone(),
                    (**right).clone(),
                )),
            },
            "coprod-sequent",
        ));
    }

    None
}

fn step_in(term: &MsgTerm, gen: &mut NameGen) -> Option<(MsgTerm, &'static str)> {
    if let Some(hit) = rule_at(term, gen) {
        return Some(hit);
    }
    match term {
        MsgTerm::Var(_) | MsgTerm::UnitVal | MsgTerm::Absurd(_) => None,
        MsgTerm::Axiom(f, args) => {
            for (i, a) in args.iter().enumerate() {
                if let Some((a2, rule)) = step_in(a, gen) {
                    let mut args = args.clone();
                    args[i] = a2;
                    return Some((MsgTerm::Axiom(f.clone(), args), rule));
                }
            }
            None
        }
        MsgTerm::Subst { binder, body, arg } => {
            if let Some((b2, rule)) = step_in(body, gen) {
                return Some((
                    MsgTerm::subst(binder.clone(), b2, (**arg).clone()),
                    rule,
                ));
            }
            if let Some((a2, rule)) = step_in(arg, gen) {
                return Some((
                    MsgTerm::subst(binder.clone(), (**body).clone(), a2),
                    rule,
                ));
            }
            None
        }
        MsgTerm::Pair(a, b) => {
            if let Some((a2, rule)) = step_in(a, gen) {
                return Some((MsgTerm::pair(a2, (**b).clone()), rule));
            }
            if let Some((b2, rule)) = step_in(b, gen) {
                return Some((MsgTerm::pair((**a).clone(), b2), rule));
            }
            None
        }
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            if let Some((l2, rule)) = step_in(left, gen) {
                return Some((
                    MsgTerm::Case {
                        scrutinee: scrutinee.clone(),
                        left_pat: left_pat.clone(),
                        left: Box::new(l2),
                        right_pat: right_pat.clone(),
                        right: right.clone(),
                    },
                    rule,
                ));
            }
            if let Some((r2, rule)) = step_in(right, gen) {
                return Some((
                    MsgTerm::Case {
                        scrutinee: scrutinee.clone(),
                        left_pat: left_pat.clone(),
                        left: left.clone(),
                        right_pat: right_pat.clone(),
                        right: Box::new(r2),
                    },
                    rule,
                ));
            }
            None
        }
        MsgTerm::Inj1(t) => step_in(t, gen).map(|(t2, r)| (MsgTerm::inj1(t2), r)),
        MsgTerm::Inj2(t) => step_in(t, gen).map(|(t2, r)| (MsgTerm::inj2(t2), r)),
    }
}

/// One leftmost-outermost cut-elimination step, or `None` at a normal form.
pub fn reduce_msg(term: &MsgTerm) -> Option<(MsgTerm, &'static str)> {
    let mut gen = gen_for(term);
    step_in(term, &mut gen)
}

/// Enumerate every single-step reduct (all redex positions). Used by the
/// confluence oracle.
pub fn reduce_msg_all(term: &MsgTerm) -> Vec<(MsgTerm, &'static str)> {
    let mut out = Vec::new();
    let mut gen = gen_for(term);
    collect_all(term, &mut gen, &mut out);
    out
}

fn collect_all(term: &MsgTerm, gen: &mut NameGen, out: &mut Vec<(MsgTerm, &'static str)>) {
    if let Some(hit) = rule_at(term, gen) {
        out.push(hit);
    }
    match term {
        MsgTerm::Var(_) | MsgTerm::UnitVal | MsgTerm::Absurd(_) => {}
        MsgTerm::Axiom(f, args) => {
            for (i, a) in args.iter().enumerate() {
                let mut sub = Vec::new();
                collect_all(a, gen, &mut sub);
                for (a2, rule) in sub {
                    let mut args2 = args.clone();
                    args2[i] = a2;
                    out.push((MsgTerm::Axiom(f.clone(), args2), rule));
                }
            }
        }
        MsgTerm::Subst { binder, body, arg } => {
            let mut sub = Vec::new();
            collect_all(body, gen, &mut sub);
            for (b2, rule) in sub {
                out.push((MsgTerm::subst(binder.clone(), b2, (**arg).clone()), rule));
            }
            let mut sub = Vec::new();
            collect_all(arg, gen, &mut sub);
            for (a2, rule) in sub {
                out.push((MsgTerm::subst(binder.clone(), (**body).clone(), a2), rule));
            }
        }
        MsgTerm::Pair(a, b) => {
            let mut sub = Vec::new();
            collect_all(a, gen, &mut sub);
            for (a2, rule) in sub {
                out.push((MsgTerm::pair(a2, (**b).clone()), rule));
            }
            let mut sub = Vec::new();
            collect_all(b, gen, &mut sub);
            for (b2, rule) in sub {
                out.push((MsgTerm::pair((**a).clone(), b2), rule));
            }
        }
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            let mut sub = Vec::new();
            collect_all(left, gen, &mut sub);
            for (l2, rule) in sub {
                out.push((
                    MsgTerm::Case {
                        scrutinee: scrutinee.clone(),
                        left_pat: left_pat.clone(),
                        left: Box::new(l2),
                        right_pat: right_pat.clone(),
                        right: right.clone(),
                    },
                    rule,
                ));
            }
            let mut sub = Vec::new();
            collect_all(right, gen, &mut sub);
            for (r2, rule) in sub {
                out.push((
                    MsgTerm::Case {
                        scrutinee: scrutinee.clone(),
                        left_pat: left_pat.clone(),
                        left: left.clone(),
                        right_pat: right_pat.clone(),
                        right: Box::new(r2),
                    },
                    rule,
                ));
            }
        }
        MsgTerm::Inj1(t) => {
            let mut sub = Vec::new();
            collect_all(t, gen, &mut sub);
            for (t2, rule) in sub {
                out.push((MsgTerm::inj1(t2), rule));
            }
        }
        MsgTerm::Inj2(t) => {
            let mut sub = Vec::new();
            collect_all(t, gen, &mut sub);
            for (t2, rule) in sub {
                out.push((MsgTerm::inj2(t2), rule));
            }
        }
    }
}

/// `f[x/w]` as used by the identity rewrites.
pub fn rename_var(term: &MsgTerm, from: &str, to: &str) -> MsgTerm {
    rename_free(term, from, &to.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msg::types::Pattern;

    #[test]
    fn id_sequent_fires() {
        // (w ↦ (w, y)) x ⇒ (x, y)
        let t = MsgTerm::subst(
            Pattern::var("w"),
            MsgTerm::pair(MsgTerm::var("w"), MsgTerm::var("y")),
            MsgTerm::var("x"),
        );
        let (t2, rule) = reduce_msg(&t).unwrap();
        assert_eq!(rule, "id-sequent");
        assert_eq!(t2, MsgTerm::pair(MsgTerm::var("x"), MsgTerm::var("y")));
    }

    #[test]
    fn prod_r_prod_l_fires() {
        // ((x, y) ↦ g)(f1, f2) ⇒ (x ↦ (y ↦ g) f2) f1
        let g = MsgTerm::pair(MsgTerm::var("x"), MsgTerm::var("y"));
        let t = MsgTerm::subst(
            Pattern::pair(Pattern::var("x"), Pattern::var("y")),
            g.clone(),
            MsgTerm::pair(MsgTerm::var("a"), MsgTerm::var("b")),
        );
        let (t2, rule) = reduce_msg(&t).unwrap();
        assert_eq!(rule, "prod_r-prod_l");
        assert_eq!(
            t2,
            MsgTerm::subst(
                Pattern::var("x"),
                MsgTerm::subst(Pattern::var("y"), g, MsgTerm::var("b")),
                MsgTerm::var("a"),
            )
        );
    }

    #[test]
    fn inj_l_coprod_fires() {
        // (z ↦ case z of x → g1 | y → g2) σ1(f) ⇒ (x ↦ g1) f
        let t = MsgTerm::subst(
            Pattern::var("z"),
            MsgTerm::case(
                "z",
                Pattern::var("x"),
                MsgTerm::var("x"),
                Pattern::var("y"),
                MsgTerm::var("y"),
            ),
            MsgTerm::inj1(MsgTerm::var("f")),
        );
        let (t2, rule) = reduce_msg(&t).unwrap();
        assert_eq!(rule, "inj_l-coprod");
        assert_eq!(
            t2,
            MsgTerm::subst(Pattern::var("x"), MsgTerm::var("x"), MsgTerm::var("f"))
        );
    }

    #[test]
    fn axiom_argument_cut_is_stuck() {
        // (w ↦ w) is reducible, but (w ↦ f(w)) g(x) is an atomic cut.
        let t = MsgTerm::subst(
            Pattern::var("w"),
            MsgTerm::Axiom("f".into(), vec![MsgTerm::var("w")]),
            MsgTerm::Axiom("g".into(), vec![MsgTerm::var("x")]),
        );
        assert!(reduce_msg(&t).is_none());
    }
}
