//! The process sequent checker.
//!
//! Terms use one constructor per pair of dual rules, so each node is read
//! through the polarity of its channel: `Split` on an input is a ⊗-left,
//! on an output a ⊕-right, and so on. Cut formulas and payload types are
//! not written in the term; the checker solves for them by unification,
//! anchored by the claimed judgement, identity annotations, and signatures.
//!
//! Context discipline: a `Fork` splits the message context and the side
//! channels between its branches, an `MCase` shares all three components,
//! a `Put` payload consumes exactly its free variables, and `{} z` absorbs
//! whatever is left.

use super::types::{Judgement, Proc};
use crate::infer::{MsgTy, ProcTy, TyCtx};
use crate::msg::{self, AxiomSet, MsgError, MsgTerm, Usage};
use crate::Name;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Default)]
pub struct Signatures {
    pub axioms: AxiomSet,
    pub prims: super::types::PrimSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProcError {
    UnknownChannel(Name),
    PolarityMismatch {
        chan: Name,
        action: String,
        ty: String,
    },
    LinearityViolation {
        name: Name,
        reused: bool,
    },
    TypeMismatch {
        expected: String,
        got: String,
    },
    ContextSplitFailure(Name),
    UnknownPrimitive(Name),
    ChannelNotFound(Name),
    Msg(MsgError),
    Ambiguous(String),
    OverlappingJudgement(Name),
    PrimArity(Name),
}

impl fmt::Display for ProcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProcError::UnknownChannel(c) => write!(f, "unknown channel `{}`", c),
            ProcError::PolarityMismatch { chan, action, ty } => write!(
                f,
                "channel `{}` of type {} does not support `{}` here",
                chan, ty, action
            ),
            ProcError::LinearityViolation { name, reused } => {
                if *reused {
                    write!(f, "`{}` used more than once", name)
                } else {
                    write!(f, "`{}` unused", name)
                }
            }
            ProcError::TypeMismatch { expected, got } => {
                write!(f, "type mismatch: expected {}, got {}", expected, got)
            }
            ProcError::ContextSplitFailure(n) => {
                write!(f, "`{}` is needed by both branches", n)
            }
            ProcError::UnknownPrimitive(n) => write!(f, "unknown primitive `{}`", n),
            ProcError::ChannelNotFound(c) => write!(f, "channel `{}` not found", c),
            ProcError::Msg(e) => write!(f, "{}", e),
            ProcError::Ambiguous(what) => write!(f, "cannot infer type of {}", what),
            ProcError::OverlappingJudgement(n) => {
                write!(f, "`{}` appears on both sides of the judgement", n)
            }
            ProcError::PrimArity(n) => write!(f, "wrong number of arguments for primitive `{}`", n),
        }
    }
}

impl std::error::Error for ProcError {}

impl From<MsgError> for ProcError {
    fn from(e: MsgError) -> Self {
        match e {
            MsgError::LinearityViolation { var, reused } => {
                ProcError::LinearityViolation { name: var, reused }
            }
            MsgError::TypeMismatch { expected, got } => ProcError::TypeMismatch { expected, got },
            other => ProcError::Msg(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pol {
    In,
    Out,
}

type ChanEnv = BTreeMap<Name, (Pol, ProcTy)>;

struct Obligation {
    payload: MsgTerm,
    expected: MsgTy,
    env: msg::Env,
}

struct Checker<'a> {
    sigs: &'a Signatures,
    tcx: TyCtx,
    obligations: Vec<Obligation>,
    /// Inferred types that must come out concrete: cut formulas, action
    /// payload types, substitution argument types.
    must_resolve: Vec<(String, ProcOrMsg)>,
    /// The cut formulas in pre-order, for the circuit translation.
    cuts: Vec<ProcTy>,
}

enum ProcOrMsg {
    P(ProcTy),
    M(MsgTy),
}

fn mismatch(e: crate::infer::UnifyError) -> ProcError {
    ProcError::TypeMismatch {
        expected: e.left,
        got: e.right,
    }
}

impl<'a> Checker<'a> {
    fn chan_ty(
        &mut self,
        chans: &ChanEnv,
        chan: &Name,
    ) -> Result<(Pol, ProcTy), ProcError> {
        chans
            .get(chan)
            .cloned()
            .ok_or_else(|| ProcError::UnknownChannel(chan.clone()))
    }

    /// Force a channel's type to have the given head connective; the head is
    /// chosen by the caller from the node kind and the channel polarity.
    fn force(
        &mut self,
        chan: &Name,
        action: &str,
        ty: &ProcTy,
        shape: ProcTy,
    ) -> Result<(), ProcError> {
        self.tcx.unify_proc(ty, &shape).map_err(|_| {
            ProcError::PolarityMismatch {
                chan: chan.clone(),
                action: action.to_string(),
                ty: self.tcx.show_proc(ty),
            }
        })
    }

    fn check(
        &mut self,
        env: &msg::Env,
        chans: &ChanEnv,
        p: &Proc,
    ) -> Result<Usage, ProcError> {
        match p {
            Proc::Id { input, ty, output } => {
                let (pol_i, ti) = self.chan_ty(chans, input)?;
                let (pol_o, to) = self.chan_ty(chans, output)?;
                if pol_i != Pol::In {
                    return Err(ProcError::PolarityMismatch {
                        chan: input.clone(),
                        action: "identity input".to_string(),
                        ty: self.tcx.show_proc(&ti),
                    });
                }
                if pol_o != Pol::Out {
                    return Err(ProcError::PolarityMismatch {
                        chan: output.clone(),
                        action: "identity output".to_string(),
                        ty: self.tcx.show_proc(&to),
                    });
                }
                let annotated = ProcTy::from_concrete(ty);
                self.tcx.unify_proc(&ti, &annotated).map_err(mismatch)?;
                self.tcx.unify_proc(&to, &annotated).map_err(mismatch)?;
                Usage::one(input).join_disjoint(Usage::one(output)).map_err(ProcError::from)
            }
            Proc::Prim {
                name,
                msg_args,
                inputs,
                outputs,
            } => {
                let sig = self
                    .sigs
                    .prims
                    .get(name)
                    .ok_or_else(|| ProcError::UnknownPrimitive(name.clone()))?
                    .clone();
                if sig.msg_inputs.len() != msg_args.len()
                    || sig.proc_inputs.len() != inputs.len()
                    || sig.proc_outputs.len() != outputs.len()
                {
                    return Err(ProcError::PrimArity(name.clone()));
                }
                let mut usage = Usage::empty();
                for (x, ty) in msg_args.iter().zip(sig.msg_inputs.iter()) {
                    let got = env
                        .get(x)
                        .ok_or_else(|| ProcError::Msg(MsgError::UnknownVariable(x.clone())))?;
                    self.tcx
                        .unify_msg(got, &MsgTy::from_concrete(ty))
                        .map_err(mismatch)?;
                    usage = usage.join_disjoint(Usage::one(x))?;
                }
                for (c, ty) in inputs.iter().zip(sig.proc_inputs.iter()) {
                    let (pol, t) = self.chan_ty(chans, c)?;
                    if pol != Pol::In {
                        return Err(ProcError::PolarityMismatch {
                            chan: c.clone(),
                            action: format!("primitive `{}` input", name),
                            ty: self.tcx.show_proc(&t),
                        });
                    }
                    self.tcx
                        .unify_proc(&t, &ProcTy::from_concrete(ty))
                        .map_err(mismatch)?;
                    usage = usage.join_disjoint(Usage::one(c))?;
                }
                for (c, ty) in outputs.iter().zip(sig.proc_outputs.iter()) {
                    let (pol, t) = self.chan_ty(chans, c)?;
                    if pol != Pol::Out {
                        return Err(ProcError::PolarityMismatch {
                            chan: c.clone(),
                            action: format!("primitive `{}` output", name),
                            ty: self.tcx.show_proc(&t),
                        });
                    }
                    self.tcx
                        .unify_proc(&t, &ProcTy::from_concrete(ty))
                        .map_err(mismatch)?;
                    usage = usage.join_disjoint(Usage::one(c))?;
                }
                Ok(usage)
            }
            Proc::Cut {
                left,
                out_chan,
                in_chan,
                right,
            } => {
                let mid = self.tcx.fresh_proc();
                self.must_resolve.push((
                    format!("cut formula on {}/{}", out_chan, in_chan),
                    ProcOrMsg::P(mid.clone()),
                ));
                self.cuts.push(mid.clone());
                let mut lchans = chans.clone();
                if lchans.contains_key(out_chan) {
                    return Err(ProcError::OverlappingJudgement(out_chan.clone()));
                }
                lchans.insert(out_chan.clone(), (Pol::Out, mid.clone()));
                let lu = self.check(env, &lchans, left)?;
                let lu = require_used(lu, out_chan)?;
                let mut rchans = chans.clone();
                if rchans.contains_key(in_chan) {
                    return Err(ProcError::OverlappingJudgement(in_chan.clone()));
                }
                rchans.insert(in_chan.clone(), (Pol::In, mid));
                let ru = self.check(env, &rchans, right)?;
                let ru = require_used(ru, in_chan)?;
                lu.join_disjoint(ru).map_err(split_failure)
            }
            Proc::Split { chan, c1, c2, body } => {
                let (pol, ty) = self.chan_ty(chans, chan)?;
                let t1 = self.tcx.fresh_proc();
                let t2 = self.tcx.fresh_proc();
                let shape = match pol {
                    Pol::In => ProcTy::Tensor(Box::new(t1.clone()), Box::new(t2.clone())),
                    Pol::Out => ProcTy::Par(Box::new(t1.clone()), Box::new(t2.clone())),
                };
                self.force(chan, "split", &ty, shape)?;
                let mut inner = chans.clone();
                inner.remove(chan);
                if inner.contains_key(c1) || inner.contains_key(c2) {
                    return Err(ProcError::OverlappingJudgement(c1.clone()));
                }
                inner.insert(c1.clone(), (pol, t1));
                inner.insert(c2.clone(), (pol, t2));
                let u = self.check(env, &inner, body)?;
                let u = require_used(u, c1)?;
                let u = require_used(u, c2)?;
                u.join_disjoint(Usage::one(chan)).map_err(ProcError::from)
            }
            Proc::Fork {
                chan,
                c1,
                left,
                c2,
                right,
            } => {
                let (pol, ty) = self.chan_ty(chans, chan)?;
                let t1 = self.tcx.fresh_proc();
                let t2 = self.tcx.fresh_proc();
                let shape = match pol {
                    Pol::In => ProcTy::Par(Box::new(t1.clone()), Box::new(t2.clone())),
                    Pol::Out => ProcTy::Tensor(Box::new(t1.clone()), Box::new(t2.clone())),
                };
                self.force(chan, "fork", &ty, shape)?;
                let mut base = chans.clone();
                base.remove(chan);
                let mut lchans = base.clone();
                lchans.insert(c1.clone(), (pol, t1));
                let lu = self.check(env, &lchans, left)?;
                let lu = require_used(lu, c1)?;
                let mut rchans = base;
                rchans.insert(c2.clone(), (pol, t2));
                let ru = self.check(env, &rchans, right)?;
                let ru = require_used(ru, c2)?;
                let u = lu.join_disjoint(ru).map_err(split_failure)?;
                u.join_disjoint(Usage::one(chan)).map_err(ProcError::from)
            }
            Proc::Close { chan, body } => {
                let (pol, ty) = self.chan_ty(chans, chan)?;
                let shape = match pol {
                    Pol::In => ProcTy::Top,
                    Pol::Out => ProcTy::Bot,
                };
                self.force(chan, "close", &ty, shape)?;
                let mut inner = chans.clone();
                inner.remove(chan);
                let u = self.check(env, &inner, body)?;
                u.join_disjoint(Usage::one(chan)).map_err(ProcError::from)
            }
            Proc::End { chan } => {
                let (pol, ty) = self.chan_ty(chans, chan)?;
                let shape = match pol {
                    Pol::In => ProcTy::Bot,
                    Pol::Out => ProcTy::Top,
                };
                self.force(chan, "end", &ty, shape)?;
                Ok(Usage::one(chan))
            }
            Proc::Get {
                chan,
                pattern,
                body,
            } => {
                let (pol, ty) = self.chan_ty(chans, chan)?;
                let a = self.tcx.fresh_msg();
                let x = self.tcx.fresh_proc();
                let shape = match pol {
                    Pol::In => ProcTy::Act(a.clone(), Box::new(x.clone())),
                    Pol::Out => ProcTy::CoAct(a.clone(), Box::new(x.clone())),
                };
                self.force(chan, "get", &ty, shape)?;
                self.must_resolve
                    .push((format!("message received on {}", chan), ProcOrMsg::M(a.clone())));
                let mut inner_env = env.clone();
                msg::bind_pattern(&mut self.tcx, &mut inner_env, pattern, &a)?;
                let mut inner = chans.clone();
                inner.insert(chan.clone(), (pol, x));
                let u = self.check(&inner_env, &inner, body)?;
                let u = u.discharge(&pattern.vars())?;
                // The continuation runs on the same channel name, so `chan`
                // is already in the body's usage.
                ensure_used(&u, chan)?;
                Ok(u)
            }
            Proc::Put {
                chan,
                payload,
                body,
            } => {
                let (pol, ty) = self.chan_ty(chans, chan)?;
                let a = self.tcx.fresh_msg();
                let x = self.tcx.fresh_proc();
                let shape = match pol {
                    Pol::In => ProcTy::CoAct(a.clone(), Box::new(x.clone())),
                    Pol::Out => ProcTy::Act(a.clone(), Box::new(x.clone())),
                };
                self.force(chan, "put", &ty, shape)?;
                self.must_resolve
                    .push((format!("message sent on {}", chan), ProcOrMsg::M(a.clone())));
                let fv = payload.free_vars();
                let mut payload_env = msg::Env::new();
                let mut payload_usage = Usage::empty();
                for v in &fv {
                    let t = env
                        .get(v)
                        .ok_or_else(|| ProcError::Msg(MsgError::UnknownVariable(v.clone())))?;
                    payload_env.insert(v.clone(), t.clone());
                    payload_usage = payload_usage.join_disjoint(Usage::one(v))?;
                }
                self.obligations.push(Obligation {
                    payload: payload.clone(),
                    expected: a,
                    env: payload_env,
                });
                let mut inner = chans.clone();
                inner.insert(chan.clone(), (pol, x));
                let u = self.check(env, &inner, body)?;
                ensure_used(&u, chan)?;
                u.join_disjoint(payload_usage).map_err(ProcError::from)
            }
            Proc::MCase {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => {
                let zty = env
                    .get(scrutinee)
                    .ok_or_else(|| ProcError::Msg(MsgError::UnknownVariable(scrutinee.clone())))?
                    .clone();
                let ta = self.tcx.fresh_msg();
                let tb = self.tcx.fresh_msg();
                self.tcx
                    .unify_msg(&zty, &MsgTy::Sum(Box::new(ta.clone()), Box::new(tb.clone())))
                    .map_err(mismatch)?;
                let mut base = env.clone();
                base.remove(scrutinee);
                let mut lenv = base.clone();
                msg::bind_pattern(&mut self.tcx, &mut lenv, left_pat, &ta)?;
                let lu = self.check(&lenv, chans, left)?.discharge(&left_pat.vars())?;
                let mut renv = base;
                msg::bind_pattern(&mut self.tcx, &mut renv, right_pat, &tb)?;
                let ru = self
                    .check(&renv, chans, right)?
                    .discharge(&right_pat.vars())?;
                let u = lu.join_branches(ru)?;
                u.join_disjoint(Usage::one(scrutinee)).map_err(ProcError::from)
            }
            Proc::MAbsurd { scrutinee } => {
                let zty = env
                    .get(scrutinee)
                    .ok_or_else(|| ProcError::Msg(MsgError::UnknownVariable(scrutinee.clone())))?;
                self.tcx.unify_msg(zty, &MsgTy::Zero).map_err(mismatch)?;
                Ok(Usage::All)
            }
            Proc::MSubst { binder, body, arg } => {
                let a = self.tcx.fresh_msg();
                self.must_resolve
                    .push(("substituted message".to_string(), ProcOrMsg::M(a.clone())));
                let fv = arg.free_vars();
                let mut arg_env = msg::Env::new();
                let mut arg_usage = Usage::empty();
                for v in &fv {
                    let t = env
                        .get(v)
                        .ok_or_else(|| ProcError::Msg(MsgError::UnknownVariable(v.clone())))?;
                    arg_env.insert(v.clone(), t.clone());
                    arg_usage = arg_usage.join_disjoint(Usage::one(v))?;
                }
                self.obligations.push(Obligation {
                    payload: arg.clone(),
                    expected: a.clone(),
                    env: arg_env,
                });
                let mut inner = env.clone();
                msg::bind_pattern(&mut self.tcx, &mut inner, binder, &a)?;
                let u = self.check(&inner, chans, body)?.discharge(&binder.vars())?;
                u.join_disjoint(arg_usage).map_err(ProcError::from)
            }
        }
    }
}

fn ensure_used(u: &Usage, name: &Name) -> Result<(), ProcError> {
    match u {
        Usage::All => Ok(()),
        Usage::Fin(s) => {
            if s.contains(name) {
                Ok(())
            } else {
                Err(ProcError::LinearityViolation {
                    name: name.clone(),
                    reused: false,
                })
            }
        }
    }
}

fn require_used(u: Usage, name: &Name) -> Result<Usage, ProcError> {
    match u {
        Usage::All => Ok(Usage::All),
        Usage::Fin(mut s) => {
            if !s.remove(name) {
                return Err(ProcError::LinearityViolation {
                    name: name.clone(),
                    reused: false,
                });
            }
            Ok(Usage::Fin(s))
        }
    }
}

fn split_failure(e: MsgError) -> ProcError {
    match e {
        MsgError::LinearityViolation { var, reused: true } => ProcError::ContextSplitFailure(var),
        other => other.into(),
    }
}

/// Verify `p` against the claimed judgement bottom-up; returns the judgement.
pub fn check_proc(sigs: &Signatures, claim: &Judgement, p: &Proc) -> Result<Judgement, ProcError> {
    run_checker(sigs, claim, p).map(|_| claim.clone())
}

/// Check and additionally return the solved cut formulas in pre-order.
pub fn cut_formulas(
    sigs: &Signatures,
    claim: &Judgement,
    p: &Proc,
) -> Result<Vec<super::types::ProcType>, ProcError> {
    run_checker(sigs, claim, p)
}

fn run_checker(
    sigs: &Signatures,
    claim: &Judgement,
    p: &Proc,
) -> Result<Vec<super::types::ProcType>, ProcError> {
    let mut checker = Checker {
        sigs,
        tcx: TyCtx::new(),
        obligations: Vec::new(),
        must_resolve: Vec::new(),
        cuts: Vec::new(),
    };
    let env = msg::env_from_context(&mut checker.tcx, &claim.msg_ctx)?;
    let mut chans = ChanEnv::new();
    for (c, t) in &claim.inputs {
        if env.contains_key(c) {
            return Err(ProcError::OverlappingJudgement(c.clone()));
        }
        chans.insert(c.clone(), (Pol::In, ProcTy::from_concrete(t)));
    }
    for (c, t) in &claim.outputs {
        if chans.contains_key(c) || env.contains_key(c) {
            return Err(ProcError::OverlappingJudgement(c.clone()));
        }
        chans.insert(c.clone(), (Pol::Out, ProcTy::from_concrete(t)));
    }

    let usage = checker.check(&env, &chans, p)?;
    if let Usage::Fin(used) = &usage {
        for name in env.keys().chain(chans.keys()) {
            if !used.contains(name) {
                return Err(ProcError::LinearityViolation {
                    name: name.clone(),
                    reused: false,
                });
            }
        }
    }

    // Deferred message-level checks, now that channel structure is solved.
    let obligations = std::mem::take(&mut checker.obligations);
    for ob in &obligations {
        let u = msg::check_term(
            &mut checker.tcx,
            &sigs.axioms,
            &ob.env,
            &ob.payload,
            &ob.expected,
        )?;
        if let Usage::Fin(used) = u {
            for v in ob.env.keys() {
                if !used.contains(v) {
                    return Err(ProcError::LinearityViolation {
                        name: v.clone(),
                        reused: false,
                    });
                }
            }
        }
    }

    for (what, ty) in &checker.must_resolve {
        let ok = match ty {
            ProcOrMsg::P(t) => checker.tcx.deep_proc(t).is_some(),
            ProcOrMsg::M(t) => checker.tcx.deep_msg(t).is_some(),
        };
        if !ok {
            return Err(ProcError::Ambiguous(what.clone()));
        }
    }

    Ok(checker
        .cuts
        .iter()
        .map(|t| checker.tcx.deep_proc(t).expect("cut formulas were resolved"))
        .collect())
}
