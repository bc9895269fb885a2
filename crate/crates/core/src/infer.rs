//! Type inference support shared by the two checkers.
//!
//! Cut formulas and action payload types are not written in terms, so the
//! process checker solves for them. Both message and process types get a
//! `Meta` constructor here; unification is structural with an occurs check.

use crate::msg::MsgType;
use crate::pmsg::ProcType;
use crate::Name;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MsgTy {
    Atom(Name),
    Prod(Box<MsgTy>, Box<MsgTy>),
    Unit,
    Sum(Box<MsgTy>, Box<MsgTy>),
    Zero,
    Meta(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProcTy {
    Atom(Name),
    Tensor(Box<ProcTy>, Box<ProcTy>),
    Par(Box<ProcTy>, Box<ProcTy>),
    Top,
    Bot,
    Act(MsgTy, Box<ProcTy>),
    CoAct(MsgTy, Box<ProcTy>),
    Meta(u32),
}

impl MsgTy {
    pub fn from_concrete(t: &MsgType) -> MsgTy {
        match t {
            MsgType::Atom(n) => MsgTy::Atom(n.clone()),
            MsgType::Prod(a, b) => {
                MsgTy::Prod(Box::new(MsgTy::from_concrete(a)), Box::new(MsgTy::from_concrete(b)))
            }
            MsgType::Unit => MsgTy::Unit,
            MsgType::Sum(a, b) => {
                MsgTy::Sum(Box::new(MsgTy::from_concrete(a)), Box::new(MsgTy::from_concrete(b)))
            }
            MsgType::Zero => MsgTy::Zero,
        }
    }
}

impl ProcTy {
    pub fn from_concrete(t: &ProcType) -> ProcTy {
        match t {
            ProcType::Atom(n) => ProcTy::Atom(n.clone()),
            ProcType::Tensor(a, b) => ProcTy::Tensor(
                Box::new(ProcTy::from_concrete(a)),
                Box::new(ProcTy::from_concrete(b)),
            ),
            ProcType::Par(a, b) => ProcTy::Par(
                Box::new(ProcTy::from_concrete(a)),
                Box::new(ProcTy::from_concrete(b)),
            ),
            ProcType::Top => ProcTy::Top,
            ProcType::Bot => ProcTy::Bot,
            ProcType::Act(a, x) => {
                ProcTy::Act(MsgTy::from_concrete(a), Box::new(ProcTy::from_concrete(x)))
            }
            ProcType::CoAct(a, x) => {
                ProcTy::CoAct(MsgTy::from_concrete(a), Box::new(ProcTy::from_concrete(x)))
            }
        }
    }
}

/// Unification failure; the two sides are reported resolved as far as known.
#[derive(Debug, Clone)]
pub struct UnifyError {
    pub left: String,
    pub right: String,
}

#[derive(Debug, Default)]
pub struct TyCtx {
    msg: Vec<Option<MsgTy>>,
    proc: Vec<Option<ProcTy>>,
}

impl TyCtx {
    pub fn new() -> Self {
        TyCtx::default()
    }

    pub fn fresh_msg(&mut self) -> MsgTy {
        self.msg.push(None);
        MsgTy::Meta(self.msg.len() as u32 - 1)
    }

    pub fn fresh_proc(&mut self) -> ProcTy {
        self.proc.push(None);
        ProcTy::Meta(self.proc.len() as u32 - 1)
    }

    /// Follow meta links at the root only.
    pub fn shallow_msg(&self, t: &MsgTy) -> MsgTy {
        let mut t = t.clone();
        while let MsgTy::Meta(i) = t {
            match &self.msg[i as usize] {
                Some(s) => t = s.clone(),
                None => break,
            }
        }
        t
    }

    pub fn shallow_proc(&self, t: &ProcTy) -> ProcTy {
        let mut t = t.clone();
        while let ProcTy::Meta(i) = t {
            match &self.proc[i as usize] {
                Some(s) => t = s.clone(),
                None => break,
            }
        }
        t
    }

    fn occurs_msg(&self, v: u32, t: &MsgTy) -> bool {
        match self.shallow_msg(t) {
            MsgTy::Meta(i) => i == v,
            MsgTy::Prod(a, b) | MsgTy::Sum(a, b) => {
                self.occurs_msg(v, &a) || self.occurs_msg(v, &b)
            }
            _ => false,
        }
    }

    fn occurs_proc(&self, v: u32, t: &ProcTy) -> bool {
        match self.shallow_proc(t) {
            ProcTy::Meta(i) => i == v,
            ProcTy::Tensor(a, b) | ProcTy::Par(a, b) => {
                self.occurs_proc(v, &a) || self.occurs_proc(v, &b)
            }
            ProcTy::Act(_, x) | ProcTy::CoAct(_, x) => self.occurs_proc(v, &x),
            _ => false,
        }
    }

    pub fn unify_msg(&mut self, a: &MsgTy, b: &MsgTy) -> Result<(), UnifyError> {
        let a = self.shallow_msg(a);
        let b = self.shallow_msg(b);
        match (&a, &b) {
            (MsgTy::Meta(i), MsgTy::Meta(j)) if i == j => Ok(()),
            (MsgTy::Meta(i), _) => {
                if self.occurs_msg(*i, &b) {
                    return Err(self.mismatch_msg(&a, &b));
                }
                self.msg[*i as usize] = Some(b);
                Ok(())
            }
            (_, MsgTy::Meta(j)) => {
                if self.occurs_msg(*j, &a) {
                    return Err(self.mismatch_msg(&a, &b));
                }
                self.msg[*j as usize] = Some(a);
                Ok(())
            }
            (MsgTy::Atom(x), MsgTy::Atom(y)) if x == y => Ok(()),
            (MsgTy::Unit, MsgTy::Unit) | (MsgTy::Zero, MsgTy::Zero) => Ok(()),
            (MsgTy::Prod(a1, a2), MsgTy::Prod(b1, b2))
            | (MsgTy::Sum(a1, a2), MsgTy::Sum(b1, b2)) => {
                self.unify_msg(a1, b1)?;
                self.unify_msg(a2, b2)
            }
            _ => Err(self.mismatch_msg(&a, &b)),
        }
    }

    pub fn unify_proc(&mut self, a: &ProcTy, b: &ProcTy) -> Result<(), UnifyError> {
        let a = self.shallow_proc(a);
        let b = self.shallow_proc(b);
        match (&a, &b) {
            (ProcTy::Meta(i), ProcTy::Meta(j)) if i == j => Ok(()),
            (ProcTy::Meta(i), _) => {
                if self.occurs_proc(*i, &b) {
                    return Err(self.mismatch_proc(&a, &b));
                }
                self.proc[*i as usize] = Some(b);
                Ok(())
            }
            (_, ProcTy::Meta(j)) => {
                if self.occurs_proc(*j, &a) {
                    return Err(self.mismatch_proc(&a, &b));
                }
                self.proc[*j as usize] = Some(a);
                Ok(())
            }
            (ProcTy::Atom(x), ProcTy::Atom(y)) if x == y => Ok(()),
            (ProcTy::Top, ProcTy::Top) | (ProcTy::Bot, ProcTy::Bot) => Ok(()),
            (ProcTy::Tensor(a1, a2), ProcTy::Tensor(b1, b2))
            | (ProcTy::Par(a1, a2), ProcTy::Par(b1, b2)) => {
                self.unify_proc(a1, b1)?;
                self.unify_proc(a2, b2)
            }
            (ProcTy::Act(m1, x1), ProcTy::Act(m2, x2))
            | (ProcTy::CoAct(m1, x1), ProcTy::CoAct(m2, x2)) => {
                self.unify_msg(m1, m2)
                    .map_err(|e| UnifyError { left: e.left, right: e.right })?;
                self.unify_proc(x1, x2)
            }
            _ => Err(self.mismatch_proc(&a, &b)),
        }
    }

    fn mismatch_msg(&self, a: &MsgTy, b: &MsgTy) -> UnifyError {
        UnifyError {
            left: self.show_msg(a),
            right: self.show_msg(b),
        }
    }

    fn mismatch_proc(&self, a: &ProcTy, b: &ProcTy) -> UnifyError {
        UnifyError {
            left: self.show_proc(a),
            right: self.show_proc(b),
        }
    }

    /// Fully resolve to a concrete type; `None` if metas remain.
    pub fn deep_msg(&self, t: &MsgTy) -> Option<MsgType> {
        match self.shallow_msg(t) {
            MsgTy::Atom(n) => Some(MsgType::Atom(n)),
            MsgTy::Unit => Some(MsgType::Unit),
            MsgTy::Zero => Some(MsgType::Zero),
            MsgTy::Prod(a, b) => Some(MsgType::Prod(
                Box::new(self.deep_msg(&a)?),
                Box::new(self.deep_msg(&b)?),
            )),
            MsgTy::Sum(a, b) => Some(MsgType::Sum(
                Box::new(self.deep_msg(&a)?),
                Box::new(self.deep_msg(&b)?),
            )),
            MsgTy::Meta(_) => None,
        }
    }

    pub fn deep_proc(&self, t: &ProcTy) -> Option<ProcType> {
        match self.shallow_proc(t) {
            ProcTy::Atom(n) => Some(ProcType::Atom(n)),
            ProcTy::Top => Some(ProcType::Top),
            ProcTy::Bot => Some(ProcType::Bot),
            ProcTy::Tensor(a, b) => Some(ProcType::Tensor(
                Box::new(self.deep_proc(&a)?),
                Box::new(self.deep_proc(&b)?),
            )),
            ProcTy::Par(a, b) => Some(ProcType::Par(
                Box::new(self.deep_proc(&a)?),
                Box::new(self.deep_proc(&b)?),
            )),
            ProcTy::Act(m, x) => Some(ProcType::Act(
                self.deep_msg(&m)?,
                Box::new(self.deep_proc(&x)?),
            )),
            ProcTy::CoAct(m, x) => Some(ProcType::CoAct(
                self.deep_msg(&m)?,
                Box::new(self.deep_proc(&x)?),
            )),
            ProcTy::Meta(_) => None,
        }
    }

    pub fn show_msg(&self, t: &MsgTy) -> String {
        match self.shallow_msg(t) {
            MsgTy::Atom(n) => n,
            MsgTy::Unit => "I".to_string(),
            MsgTy::Zero => "0".to_string(),
            MsgTy::Prod(a, b) => format!("({} * {})", self.show_msg(&a), self.show_msg(&b)),
            MsgTy::Sum(a, b) => format!("({} + {})", self.show_msg(&a), self.show_msg(&b)),
            MsgTy::Meta(i) => format!("?m{}", i),
        }
    }

    pub fn show_proc(&self, t: &ProcTy) -> String {
        match self.shallow_proc(t) {
            ProcTy::Atom(n) => n,
            ProcTy::Top => "Top".to_string(),
            ProcTy::Bot => "Bot".to_string(),
            ProcTy::Tensor(a, b) => format!("({} (x) {})", self.show_proc(&a), self.show_proc(&b)),
            ProcTy::Par(a, b) => format!("({} (+) {})", self.show_proc(&a), self.show_proc(&b)),
            ProcTy::Act(m, x) => format!("({} @ {})", self.show_msg(&m), self.show_proc(&x)),
            ProcTy::CoAct(m, x) => format!("({} # {})", self.show_msg(&m), self.show_proc(&x)),
            ProcTy::Meta(i) => format!("?p{}", i),
        }
    }
}
