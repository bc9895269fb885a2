//! The message sequent checker.
//!
//! Contexts are linear: every variable is consumed exactly once per branch.
//! The two branches of a `case` share the surrounding context; the
//! components of a pair and the arguments of an axiom application split it.
//! `{} z` discharges any context, so its usage is the absorbing element.

use super::error::MsgError;
use super::types::{AxiomSig, MsgContext, MsgTerm, MsgType, Pattern};
use crate::infer::{MsgTy, TyCtx};
use crate::Name;
use std::collections::{BTreeMap, BTreeSet};

/// Declared axioms, looked up by name.
#[derive(Debug, Clone, Default)]
pub struct AxiomSet {
    by_name: BTreeMap<Name, AxiomSig>,
}

impl AxiomSet {
    pub fn new() -> Self {
        AxiomSet::default()
    }

    pub fn of(sigs: Vec<AxiomSig>) -> Self {
        let mut s = AxiomSet::new();
        for sig in sigs {
            s.insert(sig);
        }
        s
    }

    pub fn insert(&mut self, sig: AxiomSig) {
        self.by_name.insert(sig.name.clone(), sig);
    }

    pub fn get(&self, name: &str) -> Option<&AxiomSig> {
        self.by_name.get(name)
    }
}

/// Which variables a subterm consumed. `All` is the usage of `{} z`,
/// which absorbs any context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Usage {
    All,
    Fin(BTreeSet<Name>),
}

impl Usage {
    pub fn empty() -> Usage {
        Usage::Fin(BTreeSet::new())
    }

    pub fn one(n: &str) -> Usage {
        let mut s = BTreeSet::new();
        s.insert(n.to_string());
        Usage::Fin(s)
    }

    /// Disjoint union; overlap is a reuse violation.
    pub fn join_disjoint(self, other: Usage) -> Result<Usage, MsgError> {
        match (self, other) {
            (Usage::All, u) | (u, Usage::All) => {
                // `{} z` may absorb whatever the sibling left over.
                let _ = u;
                Ok(Usage::All)
            }
            (Usage::Fin(a), Usage::Fin(b)) => {
                if let Some(x) = a.intersection(&b).next() {
                    return Err(MsgError::LinearityViolation {
                        var: x.clone(),
                        reused: true,
                    });
                }
                let mut a = a;
                a.extend(b);
                Ok(Usage::Fin(a))
            }
        }
    }

    /// Branches of a case must consume the same outer context.
    pub fn join_branches(self, other: Usage) -> Result<Usage, MsgError> {
        match (self, other) {
            (Usage::All, u) | (u, Usage::All) => Ok(u),
            (Usage::Fin(a), Usage::Fin(b)) => {
                if a == b {
                    Ok(Usage::Fin(a))
                } else {
                    let var = a
                        .symmetric_difference(&b)
                        .next()
                        .cloned()
                        .unwrap_or_default();
                    Err(MsgError::LinearityViolation { var, reused: false })
                }
            }
        }
    }

    /// Remove bound variables, insisting each was consumed.
    pub fn discharge(self, bound: &[Name]) -> Result<Usage, MsgError> {
        match self {
            Usage::All => Ok(Usage::All),
            Usage::Fin(mut s) => {
                for v in bound {
                    if !s.remove(v) {
                        return Err(MsgError::LinearityViolation {
                            var: v.clone(),
                            reused: false,
                        });
                    }
                }
                Ok(Usage::Fin(s))
            }
        }
    }
}

pub(crate) type Env = BTreeMap<Name, MsgTy>;

/// Flatten a pattern against a type into variable bindings, forcing the
/// type's shape where the pattern demands it. Unit patterns bind nothing.
pub(crate) fn bind_pattern(
    tcx: &mut TyCtx,
    env: &mut Env,
    pat: &Pattern,
    ty: &MsgTy,
) -> Result<(), MsgError> {
    match pat {
        Pattern::Var(n) => {
            if env.contains_key(n) {
                return Err(MsgError::DuplicateBinder(n.clone()));
            }
            env.insert(n.clone(), ty.clone());
            Ok(())
        }
        Pattern::Pair(a, b) => {
            let ta = tcx.fresh_msg();
            let tb = tcx.fresh_msg();
            tcx.unify_msg(ty, &MsgTy::Prod(Box::new(ta.clone()), Box::new(tb.clone())))
                .map_err(|e| MsgError::TypeMismatch {
                    expected: e.right,
                    got: e.left,
                })?;
            bind_pattern(tcx, env, a, &ta)?;
            bind_pattern(tcx, env, b, &tb)
        }
        Pattern::Unit => tcx
            .unify_msg(ty, &MsgTy::Unit)
            .map_err(|e| MsgError::TypeMismatch {
                expected: e.right,
                got: e.left,
            }),
    }
}

/// Core bidirectional check against a possibly-meta expected type.
pub(crate) fn check_term(
    tcx: &mut TyCtx,
    axioms: &AxiomSet,
    env: &Env,
    term: &MsgTerm,
    expected: &MsgTy,
) -> Result<Usage, MsgError> {
    match term {
        MsgTerm::Var(x) => {
            let ty = env
                .get(x)
                .ok_or_else(|| MsgError::UnknownVariable(x.clone()))?;
            tcx.unify_msg(ty, expected)
                .map_err(|e| MsgError::TypeMismatch {
                    expected: e.right,
                    got: e.left,
                })?;
            Ok(Usage::one(x))
        }
        MsgTerm::Axiom(f, args) => {
            let sig = axioms
                .get(f)
                .ok_or_else(|| MsgError::UnknownAxiom(f.clone()))?
                .clone();
            if sig.inputs.len() != args.len() {
                return Err(MsgError::ArityMismatch {
                    axiom: f.clone(),
                    expected: sig.inputs.len(),
                    got: args.len(),
                });
            }
            tcx.unify_msg(expected, &MsgTy::from_concrete(&sig.output))
                .map_err(|e| MsgError::TypeMismatch {
                    expected: e.left,
                    got: e.right,
                })?;
            let mut usage = Usage::empty();
            for (arg, ty) in args.iter().zip(sig.inputs.iter()) {
                let u = check_term(tcx, axioms, env, arg, &MsgTy::from_concrete(ty))?;
                usage = usage.join_disjoint(u)?;
            }
            Ok(usage)
        }
        MsgTerm::Subst { binder, body, arg } => {
            let arg_ty = tcx.fresh_msg();
            let arg_usage = check_term(tcx, axioms, env, arg, &arg_ty)?;
            let mut inner = env.clone();
            bind_pattern(tcx, &mut inner, binder, &arg_ty)?;
            let body_usage = check_term(tcx, axioms, &inner, body, expected)?;
            let body_usage = body_usage.discharge(&binder.vars())?;
            arg_usage.join_disjoint(body_usage)
        }
        MsgTerm::Pair(a, b) => {
            let ta = tcx.fresh_msg();
            let tb = tcx.fresh_msg();
            tcx.unify_msg(
                expected,
                &MsgTy::Prod(Box::new(ta.clone()), Box::new(tb.clone())),
            )
            .map_err(|e| MsgError::TypeMismatch {
                expected: e.left,
                got: e.right,
            })?;
            let ua = check_term(tcx, axioms, env, a, &ta)?;
            let ub = check_term(tcx, axioms, env, b, &tb)?;
            ua.join_disjoint(ub)
        }
        MsgTerm::UnitVal => {
            tcx.unify_msg(expected, &MsgTy::Unit)
                .map_err(|e| MsgError::TypeMismatch {
                    expected: e.left,
                    got: e.right,
                })?;
            Ok(Usage::empty())
        }
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            let zty = env
                .get(scrutinee)
                .ok_or_else(|| MsgError::UnknownVariable(scrutinee.clone()))?
                .clone();
            let ta = tcx.fresh_msg();
            let tb = tcx.fresh_msg();
            tcx.unify_msg(&zty, &MsgTy::Sum(Box::new(ta.clone()), Box::new(tb.clone())))
                .map_err(|e| MsgError::TypeMismatch {
                    expected: format!("({} + {})", e.right, e.right),
                    got: e.left,
                })?;
            let mut base = env.clone();
            base.remove(scrutinee);
            let mut left_env = base.clone();
            bind_pattern(tcx, &mut left_env, left_pat, &ta)?;
            let ul = check_term(tcx, axioms, &left_env, left, expected)?
                .discharge(&left_pat.vars())?;
            let mut right_env = base;
            bind_pattern(tcx, &mut right_env, right_pat, &tb)?;
            let ur = check_term(tcx, axioms, &right_env, right, expected)?
                .discharge(&right_pat.vars())?;
            let u = ul.join_branches(ur)?;
            u.join_disjoint(Usage::one(scrutinee))
        }
        MsgTerm::Inj1(t) => {
            let ta = tcx.fresh_msg();
            let tb = tcx.fresh_msg();
            tcx.unify_msg(
                expected,
                &MsgTy::Sum(Box::new(ta.clone()), Box::new(tb)),
            )
            .map_err(|e| MsgError::TypeMismatch {
                expected: e.left,
                got: e.right,
            })?;
            check_term(tcx, axioms, env, t, &ta)
        }
        MsgTerm::Inj2(t) => {
            let ta = tcx.fresh_msg();
            let tb = tcx.fresh_msg();
            tcx.unify_msg(
                expected,
                &MsgTy::Sum(Box::new(ta), Box::new(tb.clone())),
            )
            .map_err(|e| MsgError::TypeMismatch {
                expected: e.left,
                got: e.right,
            })?;
            check_term(tcx, axioms, env, t, &tb)
        }
        MsgTerm::Absurd(z) => {
            let zty = env
                .get(z)
                .ok_or_else(|| MsgError::UnknownVariable(z.clone()))?;
            tcx.unify_msg(zty, &MsgTy::Zero)
                .map_err(|e| MsgError::TypeMismatch {
                    expected: "0".to_string(),
                    got: e.left,
                })?;
            Ok(Usage::All)
        }
    }
}

pub(crate) fn env_from_context(
    tcx: &mut TyCtx,
    ctx: &MsgContext,
) -> Result<Env, MsgError> {
    let mut env = Env::new();
    for (pat, ty) in &ctx.entries {
        bind_pattern(tcx, &mut env, pat, &MsgTy::from_concrete(ty))?;
    }
    Ok(env)
}

fn finish(tcx: &TyCtx, env: &Env, usage: Usage, goal: &MsgTy) -> Result<MsgType, MsgError> {
    if let Usage::Fin(used) = usage {
        for v in env.keys() {
            if !used.contains(v) {
                return Err(MsgError::LinearityViolation {
                    var: v.clone(),
                    reused: false,
                });
            }
        }
    }
    tcx.deep_msg(goal).ok_or(MsgError::Ambiguous)
}

/// Check `ctx ⊢ term : expected` and return the formula.
///
/// With `expected = None` the type is synthesised; terms whose type is not
/// determined (a bare injection, `{} z` at the root) report `Ambiguous`.
pub fn check_msg(
    axioms: &AxiomSet,
    ctx: &MsgContext,
    term: &MsgTerm,
    expected: Option<&MsgType>,
) -> Result<MsgType, MsgError> {
    let mut tcx = TyCtx::new();
    let env = env_from_context(&mut tcx, ctx)?;
    let goal = match expected {
        Some(t) => MsgTy::from_concrete(t),
        None => tcx.fresh_msg(),
    };
    let usage = check_term(&mut tcx, axioms, &env, term, &goal)?;
    finish(&tcx, &env, usage, &goal)
}

/// Synthesis-only convenience wrapper.
pub fn infer_msg(axioms: &AxiomSet, ctx: &MsgContext, term: &MsgTerm) -> Result<MsgType, MsgError> {
    check_msg(axioms, ctx, term, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msg::types::MsgType as T;

    fn atom(n: &str) -> T {
        T::atom(n)
    }

    #[test]
    fn pair_annotation_checks_at_prod() {
        // ctx {(x, ()) : A * I} ⊢ (x, ()) : A * I
        let ctx = MsgContext::single(
            Pattern::pair(Pattern::var("x"), Pattern::Unit),
            T::prod(atom("A"), T::Unit),
        );
        let term = MsgTerm::pair(MsgTerm::var("x"), MsgTerm::UnitVal);
        let got = check_msg(&AxiomSet::new(), &ctx, &term, None).unwrap();
        assert_eq!(got, T::prod(atom("A"), T::Unit));
    }

    #[test]
    fn atomic_identity() {
        let ctx = MsgContext::single(Pattern::var("x"), atom("A"));
        let got = check_msg(&AxiomSet::new(), &ctx, &MsgTerm::var("x"), None).unwrap();
        assert_eq!(got, atom("A"));
    }

    #[test]
    fn absurd_checks_at_requested_type() {
        let ctx = MsgContext::single(Pattern::var("z"), T::Zero);
        let got = check_msg(&AxiomSet::new(), &ctx, &MsgTerm::absurd("z"), Some(&atom("B")))
            .unwrap();
        assert_eq!(got, atom("B"));
        // Without a requested type the formula is not determined.
        assert_eq!(
            check_msg(&AxiomSet::new(), &ctx, &MsgTerm::absurd("z"), None),
            Err(MsgError::Ambiguous)
        );
    }

    #[test]
    fn absurd_absorbs_any_context() {
        let mut ctx = MsgContext::single(Pattern::var("z"), T::Zero);
        ctx.push(Pattern::var("w"), atom("A"));
        assert!(check_msg(&AxiomSet::new(), &ctx, &MsgTerm::absurd("z"), Some(&atom("B"))).is_ok());
    }

    #[test]
    fn unused_variable_is_rejected() {
        let mut ctx = MsgContext::single(Pattern::var("x"), atom("A"));
        ctx.push(Pattern::var("y"), atom("B"));
        let err = check_msg(&AxiomSet::new(), &ctx, &MsgTerm::var("x"), None).unwrap_err();
        assert!(matches!(err, MsgError::LinearityViolation { reused: false, .. }));
    }

    #[test]
    fn doubly_used_variable_is_rejected() {
        let ctx = MsgContext::single(Pattern::var("x"), atom("A"));
        let term = MsgTerm::pair(MsgTerm::var("x"), MsgTerm::var("x"));
        let err = check_msg(
            &AxiomSet::new(),
            &ctx,
            &term,
            Some(&T::prod(atom("A"), atom("A"))),
        )
        .unwrap_err();
        assert!(matches!(err, MsgError::LinearityViolation { reused: true, .. }));
    }

    #[test]
    fn case_branches_share_context() {
        // ctx {z : A + B, w : C} ⊢ case z of x → (x, w) | y ... right branch
        // must also consume w.
        let mut ctx = MsgContext::single(Pattern::var("z"), T::sum(atom("A"), atom("A")));
        ctx.push(Pattern::var("w"), atom("C"));
        let good = MsgTerm::case(
            "z",
            Pattern::var("x"),
            MsgTerm::pair(MsgTerm::var("x"), MsgTerm::var("w")),
            Pattern::var("y"),
            MsgTerm::pair(MsgTerm::var("y"), MsgTerm::var("w")),
        );
        assert!(check_msg(&AxiomSet::new(), &ctx, &good, None).is_ok());

        let bad = MsgTerm::case(
            "z",
            Pattern::var("x"),
            MsgTerm::pair(MsgTerm::var("x"), MsgTerm::var("w")),
            Pattern::var("y"),
            MsgTerm::pair(MsgTerm::var("y"), MsgTerm::var("y")),
        );
        assert!(check_msg(&AxiomSet::new(), &ctx, &bad, None).is_err());
    }

    #[test]
    fn axiom_arity_and_lookup() {
        let axioms = AxiomSet::of(vec![AxiomSig {
            name: "f".to_string(),
            inputs: vec![atom("A"), atom("B")],
            output: atom("C"),
        }]);
        let mut ctx = MsgContext::single(Pattern::var("x"), atom("A"));
        ctx.push(Pattern::var("y"), atom("B"));
        let ok = MsgTerm::Axiom("f".to_string(), vec![MsgTerm::var("x"), MsgTerm::var("y")]);
        assert_eq!(check_msg(&axioms, &ctx, &ok, None).unwrap(), atom("C"));

        let wrong_arity = MsgTerm::Axiom("f".to_string(), vec![MsgTerm::var("x")]);
        assert!(matches!(
            check_msg(&axioms, &ctx, &wrong_arity, None),
            Err(MsgError::ArityMismatch { .. })
        ));
        let unknown = MsgTerm::Axiom("g".to_string(), vec![]);
        assert!(matches!(
            check_msg(&AxiomSet::new(), &MsgContext::new(), &unknown, None),
            Err(MsgError::UnknownAxiom(_))
        ));
    }

    #[test]
    fn subst_binds_pattern_at_arg_type() {
        // (w ↦ w) x at atom A.
        let ctx = MsgContext::single(Pattern::var("x"), atom("A"));
        let t = MsgTerm::subst(Pattern::var("w"), MsgTerm::var("w"), MsgTerm::var("x"));
        assert_eq!(check_msg(&AxiomSet::new(), &ctx, &t, None).unwrap(), atom("A"));
    }
}
