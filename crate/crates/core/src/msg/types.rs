//! Formulas, patterns and terms of the message logic.

use crate::Name;
use std::collections::BTreeSet;
use std::fmt;

/// Message formulas: atoms closed under `*`, `I`, `+`, `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MsgType {
    Atom(Name),
    Prod(Box<MsgType>, Box<MsgType>),
    Unit,
    Sum(Box<MsgType>, Box<MsgType>),
    Zero,
}

impl MsgType {
    pub fn atom(n: &str) -> MsgType {
        MsgType::Atom(n.to_string())
    }

    pub fn prod(a: MsgType, b: MsgType) -> MsgType {
        MsgType::Prod(Box::new(a), Box::new(b))
    }

    pub fn sum(a: MsgType, b: MsgType) -> MsgType {
        MsgType::Sum(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for MsgType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `*` binds tighter than `+`; both right-associated.
        fn go(t: &MsgType, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
            match t {
                MsgType::Atom(n) => write!(f, "{}", n),
                MsgType::Unit => write!(f, "I"),
                MsgType::Zero => write!(f, "0"),
                MsgType::Prod(a, b) => {
                    if prec > 1 {
                        write!(f, "(")?;
                    }
                    go(a, f, 2)?;
                    write!(f, " * ")?;
                    go(b, f, 1)?;
                    if prec > 1 {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
                MsgType::Sum(a, b) => {
                    if prec > 0 {
                        write!(f, "(")?;
                    }
                    go(a, f, 1)?;
                    write!(f, " + ")?;
                    go(b, f, 0)?;
                    if prec > 0 {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, 0)
    }
}

/// Context annotations: a variable, a pair of patterns, or the unit pattern.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    Var(Name),
    Pair(Box<Pattern>, Box<Pattern>),
    Unit,
}

impl Pattern {
    pub fn var(n: &str) -> Pattern {
        Pattern::Var(n.to_string())
    }

    pub fn pair(a: Pattern, b: Pattern) -> Pattern {
        Pattern::Pair(Box::new(a), Box::new(b))
    }

    /// Variables bound by the pattern, in left-to-right order.
    pub fn vars(&self) -> Vec<Name> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<Name>) {
        match self {
            Pattern::Var(n) => out.push(n.clone()),
            Pattern::Pair(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Pattern::Unit => {}
        }
    }

    pub fn binds(&self, name: &str) -> bool {
        match self {
            Pattern::Var(n) => n == name,
            Pattern::Pair(a, b) => a.binds(name) || b.binds(name),
            Pattern::Unit => false,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Var(n) => write!(f, "{}", n),
            Pattern::Pair(a, b) => write!(f, "({}, {})", a, b),
            Pattern::Unit => write!(f, "()"),
        }
    }
}

/// Annotated proofs of message sequents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MsgTerm {
    Var(Name),
    /// `f(t1, …, tn)` for a declared axiom `f`.
    Axiom(Name, Vec<MsgTerm>),
    /// `(p ↦ body) arg` — substitution, the cut of the message logic.
    Subst {
        binder: Pattern,
        body: Box<MsgTerm>,
        arg: Box<MsgTerm>,
    },
    Pair(Box<MsgTerm>, Box<MsgTerm>),
    UnitVal,
    /// `case z of p1 → l | p2 → r`; the scrutinee is always a variable.
    Case {
        scrutinee: Name,
        left_pat: Pattern,
        left: Box<MsgTerm>,
        right_pat: Pattern,
        right: Box<MsgTerm>,
    },
    Inj1(Box<MsgTerm>),
    Inj2(Box<MsgTerm>),
    /// `{} z` — ex falso on a variable of type `0`.
    Absurd(Name),
}

impl MsgTerm {
    pub fn var(n: &str) -> MsgTerm {
        MsgTerm::Var(n.to_string())
    }

    pub fn pair(a: MsgTerm, b: MsgTerm) -> MsgTerm {
        MsgTerm::Pair(Box::new(a), Box::new(b))
    }

    pub fn inj1(t: MsgTerm) -> MsgTerm {
        MsgTerm::Inj1(Box::new(t))
    }

    pub fn inj2(t: MsgTerm) -> MsgTerm {
        MsgTerm::Inj2(Box::new(t))
    }

    pub fn subst(binder: Pattern, body: MsgTerm, arg: MsgTerm) -> MsgTerm {
        MsgTerm::Subst {
            binder,
            body: Box::new(body),
            arg: Box::new(arg),
        }
    }

    pub fn case(
        scrutinee: &str,
        left_pat: Pattern,
        left: MsgTerm,
        right_pat: Pattern,
        right: MsgTerm,
    ) -> MsgTerm {
        MsgTerm::Case {
            scrutinee: scrutinee.to_string(),
            left_pat,
            left: Box::new(left),
            right_pat,
            right: Box::new(right),
        }
    }

    pub fn absurd(z: &str) -> MsgTerm {
        MsgTerm::Absurd(z.to_string())
    }

    /// Free variables.
    pub fn free_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<Name>) {
        match self {
            MsgTerm::Var(n) => {
                out.insert(n.clone());
            }
            MsgTerm::Axiom(_, args) => {
                for a in args {
                    a.collect_free(out);
                }
            }
            MsgTerm::Subst { binder, body, arg } => {
                let mut body_free = BTreeSet::new();
                body.collect_free(&mut body_free);
                for v in binder.vars() {
                    body_free.remove(&v);
                }
                out.extend(body_free);
                arg.collect_free(out);
            }
            MsgTerm::Pair(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            MsgTerm::UnitVal => {}
            MsgTerm::Case {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => {
                out.insert(scrutinee.clone());
                let mut l = BTreeSet::new();
                left.collect_free(&mut l);
                for v in left_pat.vars() {
                    l.remove(&v);
                }
                out.extend(l);
                let mut r = BTreeSet::new();
                right.collect_free(&mut r);
                for v in right_pat.vars() {
                    r.remove(&v);
                }
                out.extend(r);
            }
            MsgTerm::Inj1(t) | MsgTerm::Inj2(t) => t.collect_free(out),
            MsgTerm::Absurd(z) => {
                out.insert(z.clone());
            }
        }
    }

    /// All names occurring anywhere in the term, bound or free.
    pub fn all_names(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_all(&mut out);
        out
    }

    pub(crate) fn collect_all(&self, out: &mut BTreeSet<Name>) {
        match self {
            MsgTerm::Var(n) => {
                out.insert(n.clone());
            }
            MsgTerm::Axiom(_, args) => {
                for a in args {
                    a.collect_all(out);
                }
            }
            MsgTerm::Subst { binder, body, arg } => {
                out.extend(binder.vars());
                body.collect_all(out);
                arg.collect_all(out);
            }
            MsgTerm::Pair(a, b) => {
                a.collect_all(out);
                b.collect_all(out);
            }
            MsgTerm::UnitVal => {}
            MsgTerm::Case {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => {
                out.insert(scrutinee.clone());
                out.extend(left_pat.vars());
                out.extend(right_pat.vars());
                left.collect_all(out);
                right.collect_all(out);
            }
            MsgTerm::Inj1(t) | MsgTerm::Inj2(t) => t.collect_all(out),
            MsgTerm::Absurd(z) => {
                out.insert(z.clone());
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            MsgTerm::Var(_) | MsgTerm::UnitVal | MsgTerm::Absurd(_) => 1,
            MsgTerm::Axiom(_, args) => 1 + args.iter().map(|a| a.size()).sum::<usize>(),
            MsgTerm::Subst { body, arg, .. } => 1 + body.size() + arg.size(),
            MsgTerm::Pair(a, b) => 1 + a.size() + b.size(),
            MsgTerm::Case { left, right, .. } => 1 + left.size() + right.size(),
            MsgTerm::Inj1(t) | MsgTerm::Inj2(t) => 1 + t.size(),
        }
    }
}

/// A declared axiom of the message multicategory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSig {
    pub name: Name,
    pub inputs: Vec<MsgType>,
    pub output: MsgType,
}

/// The antecedent of a message sequent: pattern-annotated formulas,
/// insertion-ordered but treated as a multiset by the checker.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MsgContext {
    pub entries: Vec<(Pattern, MsgType)>,
}

impl MsgContext {
    pub fn new() -> Self {
        MsgContext::default()
    }

    pub fn of(entries: Vec<(Pattern, MsgType)>) -> Self {
        MsgContext { entries }
    }

    pub fn push(&mut self, pat: Pattern, ty: MsgType) {
        self.entries.push((pat, ty));
    }

    pub fn single(pat: Pattern, ty: MsgType) -> Self {
        MsgContext {
            entries: vec![(pat, ty)],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vars(&self) -> Vec<Name> {
        self.entries
            .iter()
            .flat_map(|(p, _)| p.vars())
            .collect()
    }
}

impl fmt::Display for MsgContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, t) in &self.entries {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{} : {}", p, t)?;
        }
        Ok(())
    }
}
