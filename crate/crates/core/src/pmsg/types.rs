//! Process formulas, terms, judgements and signatures.

use crate::msg::{MsgContext, MsgTerm, MsgType, Pattern};
use crate::Name;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Process formulas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProcType {
    Atom(Name),
    Tensor(Box<ProcType>, Box<ProcType>),
    Par(Box<ProcType>, Box<ProcType>),
    Top,
    Bot,
    /// `A @ X` — send an `A`, continue as `X`.
    Act(MsgType, Box<ProcType>),
    /// `A # X` — receive an `A`, continue as `X`.
    CoAct(MsgType, Box<ProcType>),
}

impl ProcType {
    pub fn atom(n: &str) -> ProcType {
        ProcType::Atom(n.to_string())
    }

    pub fn tensor(a: ProcType, b: ProcType) -> ProcType {
        ProcType::Tensor(Box::new(a), Box::new(b))
    }

    pub fn par(a: ProcType, b: ProcType) -> ProcType {
        ProcType::Par(Box::new(a), Box::new(b))
    }

    pub fn act(a: MsgType, x: ProcType) -> ProcType {
        ProcType::Act(a, Box::new(x))
    }

    pub fn coact(a: MsgType, x: ProcType) -> ProcType {
        ProcType::CoAct(a, Box::new(x))
    }

    /// De Morgan dual: ⊗↔⊕, ⊤↔⊥, ∘↔•; atoms are self-dual.
    pub fn dual(&self) -> ProcType {
        match self {
            ProcType::Atom(n) => ProcType::Atom(n.clone()),
            ProcType::Tensor(a, b) => ProcType::Par(Box::new(a.dual()), Box::new(b.dual())),
            ProcType::Par(a, b) => ProcType::Tensor(Box::new(a.dual()), Box::new(b.dual())),
            ProcType::Top => ProcType::Bot,
            ProcType::Bot => ProcType::Top,
            ProcType::Act(a, x) => ProcType::CoAct(a.clone(), Box::new(x.dual())),
            ProcType::CoAct(a, x) => ProcType::Act(a.clone(), Box::new(x.dual())),
        }
    }
}

impl fmt::Display for ProcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Actions bind tightest, then (x), then (+); all right-associated.
        fn go(t: &ProcType, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
            match t {
                ProcType::Atom(n) => write!(f, "{}", n),
                ProcType::Top => write!(f, "Top"),
                ProcType::Bot => write!(f, "Bot"),
                ProcType::Act(a, x) => {
                    if prec > 2 {
                        write!(f, "(")?;
                    }
                    write!(f, "{} @ ", a)?;
                    go(x, f, 2)?;
                    if prec > 2 {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
                ProcType::CoAct(a, x) => {
                    if prec > 2 {
                        write!(f, "(")?;
                    }
                    write!(f, "{} # ", a)?;
                    go(x, f, 2)?;
                    if prec > 2 {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
                ProcType::Tensor(a, b) => {
                    if prec > 1 {
                        write!(f, "(")?;
                    }
                    go(a, f, 2)?;
                    write!(f, " (x) ")?;
                    go(b, f, 1)?;
                    if prec > 1 {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
                ProcType::Par(a, b) => {
                    if prec > 0 {
                        write!(f, "(")?;
                    }
                    go(a, f, 1)?;
                    write!(f, " (+) ")?;
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

/// Process terms. One constructor per self-dual rule pair; which rule a node
/// means is decided by the polarity of its channel in the judgement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Proc {
    /// `α =_X β` — identity wire from input α to output β.
    Id {
        input: Name,
        ty: ProcType,
        output: Name,
    },
    /// `s(x…)[α… ; β…]` — a declared primitive process.
    Prim {
        name: Name,
        msg_args: Vec<Name>,
        inputs: Vec<Name>,
        outputs: Vec<Name>,
    },
    /// `s ,α;β, t` — plug output α of `s` into input β of `t`.
    Cut {
        left: Box<Proc>,
        out_chan: Name,
        in_chan: Name,
        right: Box<Proc>,
    },
    /// `α⟨α1,α2⟩·s` — split a ⊗ input or ⊕ output.
    Split {
        chan: Name,
        c1: Name,
        c2: Name,
        body: Box<Proc>,
    },
    /// `α case(α1 ⇒ s | α2 ⇒ t)` — branch on a ⊕ input or build a ⊗ output.
    Fork {
        chan: Name,
        c1: Name,
        left: Box<Proc>,
        c2: Name,
        right: Box<Proc>,
    },
    /// `α⟨⟩·s` — open a ⊤ input or ⊥ output.
    Close { chan: Name, body: Box<Proc> },
    /// `α[]` — finish on a ⊥ input or ⊤ output.
    End { chan: Name },
    /// `α⟨p⟩·s` — receive a message, binding `p`.
    Get {
        chan: Name,
        pattern: Pattern,
        body: Box<Proc>,
    },
    /// `α[f]·s` — send the message `f`.
    Put {
        chan: Name,
        payload: MsgTerm,
        body: Box<Proc>,
    },
    /// `case z of p1 → s | p2 → t` on a message variable.
    MCase {
        scrutinee: Name,
        left_pat: Pattern,
        left: Box<Proc>,
        right_pat: Pattern,
        right: Box<Proc>,
    },
    /// `{} z` on a message variable of type `0`.
    MAbsurd { scrutinee: Name },
    /// `(p ↦ s) f` — substitute a message proof into the context.
    MSubst {
        binder: Pattern,
        body: Box<Proc>,
        arg: MsgTerm,
    },
}

impl Proc {
    pub fn id(input: &str, ty: ProcType, output: &str) -> Proc {
        Proc::Id {
            input: input.to_string(),
            ty,
            output: output.to_string(),
        }
    }

    pub fn cut(left: Proc, out_chan: &str, in_chan: &str, right: Proc) -> Proc {
        Proc::Cut {
            left: Box::new(left),
            out_chan: out_chan.to_string(),
            in_chan: in_chan.to_string(),
            right: Box::new(right),
        }
    }

    pub fn split(chan: &str, c1: &str, c2: &str, body: Proc) -> Proc {
        Proc::Split {
            chan: chan.to_string(),
            c1: c1.to_string(),
            c2: c2.to_string(),
            body: Box::new(body),
        }
    }

    pub fn fork(chan: &str, c1: &str, left: Proc, c2: &str, right: Proc) -> Proc {
        Proc::Fork {
            chan: chan.to_string(),
            c1: c1.to_string(),
            left: Box::new(left),
            c2: c2.to_string(),
            right: Box::new(right),
        }
    }

    pub fn close(chan: &str, body: Proc) -> Proc {
        Proc::Close {
            chan: chan.to_string(),
            body: Box::new(body),
        }
    }

    pub fn end(chan: &str) -> Proc {
        Proc::End {
            chan: chan.to_string(),
        }
    }

    pub fn get(chan: &str, pattern: Pattern, body: Proc) -> Proc {
        Proc::Get {
            chan: chan.to_string(),
            pattern,
            body: Box::new(body),
        }
    }

    pub fn put(chan: &str, payload: MsgTerm, body: Proc) -> Proc {
        Proc::Put {
            chan: chan.to_string(),
            payload,
            body: Box::new(body),
        }
    }

    pub fn mcase(
        scrutinee: &str,
        left_pat: Pattern,
        left: Proc,
        right_pat: Pattern,
        right: Proc,
    ) -> Proc {
        Proc::MCase {
            scrutinee: scrutinee.to_string(),
            left_pat,
            left: Box::new(left),
            right_pat,
            right: Box::new(right),
        }
    }

    pub fn mabsurd(z: &str) -> Proc {
        Proc::MAbsurd {
            scrutinee: z.to_string(),
        }
    }

    pub fn msubst(binder: Pattern, body: Proc, arg: MsgTerm) -> Proc {
        Proc::MSubst {
            binder,
            body: Box::new(body),
            arg,
        }
    }

    /// Free channel names.
    pub fn channels(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_channels(&mut out);
        out
    }

    fn collect_channels(&self, out: &mut BTreeSet<Name>) {
        match self {
            Proc::Id { input, output, .. } => {
                out.insert(input.clone());
                out.insert(output.clone());
            }
            Proc::Prim {
                inputs, outputs, ..
            } => {
                out.extend(inputs.iter().cloned());
                out.extend(outputs.iter().cloned());
            }
            Proc::Cut {
                left,
                out_chan,
                in_chan,
                right,
            } => {
                let mut l = BTreeSet::new();
                left.collect_channels(&mut l);
                l.remove(out_chan);
                let mut r = BTreeSet::new();
                right.collect_channels(&mut r);
                r.remove(in_chan);
                out.extend(l);
                out.extend(r);
            }
            Proc::Split { chan, c1, c2, body } => {
                let mut b = BTreeSet::new();
                body.collect_channels(&mut b);
                b.remove(c1);
                b.remove(c2);
                b.insert(chan.clone());
                out.extend(b);
            }
            Proc::Fork {
                chan,
                c1,
                left,
                c2,
                right,
            } => {
                let mut l = BTreeSet::new();
                left.collect_channels(&mut l);
                l.remove(c1);
                let mut r = BTreeSet::new();
                right.collect_channels(&mut r);
                r.remove(c2);
                out.extend(l);
                out.extend(r);
                out.insert(chan.clone());
            }
            Proc::Close { chan, body } => {
                body.collect_channels(out);
                out.insert(chan.clone());
            }
            Proc::End { chan } => {
                out.insert(chan.clone());
            }
            Proc::Get { chan, body, .. } => {
                body.collect_channels(out);
                out.insert(chan.clone());
            }
            Proc::Put { chan, body, .. } => {
                body.collect_channels(out);
                out.insert(chan.clone());
            }
            Proc::MCase { left, right, .. } => {
                left.collect_channels(out);
                right.collect_channels(out);
            }
            Proc::MAbsurd { .. } => {}
            Proc::MSubst { body, .. } => body.collect_channels(out),
        }
    }

    /// Free message variables.
    pub fn free_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_free_vars(&mut out);
        out
    }

    fn collect_free_vars(&self, out: &mut BTreeSet<Name>) {
        match self {
            Proc::Id { .. } | Proc::End { .. } => {}
            Proc::Prim { msg_args, .. } => out.extend(msg_args.iter().cloned()),
            Proc::Cut { left, right, .. } => {
                left.collect_free_vars(out);
                right.collect_free_vars(out);
            }
            Proc::Split { body, .. } | Proc::Close { chan: _, body } => {
                body.collect_free_vars(out)
            }
            Proc::Fork { left, right, .. } => {
                left.collect_free_vars(out);
                right.collect_free_vars(out);
            }
            Proc::Get { pattern, body, .. } => {
                let mut b = BTreeSet::new();
                body.collect_free_vars(&mut b);
                for v in pattern.vars() {
                    b.remove(&v);
                }
                out.extend(b);
            }
            Proc::Put { payload, body, .. } => {
                out.extend(payload.free_vars());
                body.collect_free_vars(out);
            }
            Proc::MCase {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => {
                out.insert(scrutinee.clone());
                let mut l = BTreeSet::new();
                left.collect_free_vars(&mut l);
                for v in left_pat.vars() {
                    l.remove(&v);
                }
                out.extend(l);
                let mut r = BTreeSet::new();
                right.collect_free_vars(&mut r);
                for v in right_pat.vars() {
                    r.remove(&v);
                }
                out.extend(r);
            }
            Proc::MAbsurd { scrutinee } => {
                out.insert(scrutinee.clone());
            }
            Proc::MSubst { binder, body, arg } => {
                let mut b = BTreeSet::new();
                body.collect_free_vars(&mut b);
                for v in binder.vars() {
                    b.remove(&v);
                }
                out.extend(b);
                out.extend(arg.free_vars());
            }
        }
    }

    /// Every name (channel or variable, bound or free) in the term.
    pub fn all_names(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_all_names(&mut out);
        out
    }

    fn collect_all_names(&self, out: &mut BTreeSet<Name>) {
        match self {
            Proc::Id { input, output, .. } => {
                out.insert(input.clone());
                out.insert(output.clone());
            }
            Proc::Prim {
                msg_args,
                inputs,
                outputs,
                ..
            } => {
                out.extend(msg_args.iter().cloned());
                out.extend(inputs.iter().cloned());
                out.extend(outputs.iter().cloned());
            }
            Proc::Cut {
                left,
                out_chan,
                in_chan,
                right,
            } => {
                out.insert(out_chan.clone());
                out.insert(in_chan.clone());
                left.collect_all_names(out);
                right.collect_all_names(out);
            }
            Proc::Split { chan, c1, c2, body } => {
                out.insert(chan.clone());
                out.insert(c1.clone());
                out.insert(c2.clone());
                body.collect_all_names(out);
            }
            Proc::Fork {
                chan,
                c1,
                left,
                c2,
                right,
            } => {
                out.insert(chan.clone());
                out.insert(c1.clone());
                out.insert(c2.clone());
                left.collect_all_names(out);
                right.collect_all_names(out);
            }
            Proc::Close { chan, body } => {
                out.insert(chan.clone());
                body.collect_all_names(out);
            }
            Proc::End { chan } => {
                out.insert(chan.clone());
            }
            Proc::Get {
                chan,
                pattern,
                body,
            } => {
                out.insert(chan.clone());
                out.extend(pattern.vars());
                body.collect_all_names(out);
            }
            Proc::Put {
                chan,
                payload,
                body,
            } => {
                out.insert(chan.clone());
                payload.collect_all(out);
                body.collect_all_names(out);
            }
            Proc::MCase {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => {
                out.insert(scrutinee.clone());
                out.extend(left_pat.vars());
                out.extend(right_pat.vars());
                left.collect_all_names(out);
                right.collect_all_names(out);
            }
            Proc::MAbsurd { scrutinee } => {
                out.insert(scrutinee.clone());
            }
            Proc::MSubst { binder, body, arg } => {
                out.extend(binder.vars());
                arg.collect_all(out);
                body.collect_all_names(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Proc::Id { .. } | Proc::End { .. } | Proc::MAbsurd { .. } | Proc::Prim { .. } => 1,
            Proc::Cut { left, right, .. } => 1 + left.size() + right.size(),
            Proc::Split { body, .. } | Proc::Close { body, .. } | Proc::Get { body, .. } => {
                1 + body.size()
            }
            Proc::Put { payload, body, .. } => 1 + payload.size() + body.size(),
            Proc::Fork { left, right, .. } | Proc::MCase { left, right, .. } => {
                1 + left.size() + right.size()
            }
            Proc::MSubst { body, arg, .. } => 1 + body.size() + arg.size(),
        }
    }
}

/// A checked sequent `Φ | Γ ⊩ Δ`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Judgement {
    pub msg_ctx: MsgContext,
    pub inputs: BTreeMap<Name, ProcType>,
    pub outputs: BTreeMap<Name, ProcType>,
}

impl Judgement {
    pub fn new() -> Self {
        Judgement::default()
    }

    pub fn map(input: &str, src: ProcType, output: &str, dst: ProcType) -> Judgement {
        let mut j = Judgement::new();
        j.inputs.insert(input.to_string(), src);
        j.outputs.insert(output.to_string(), dst);
        j
    }

    pub fn with_msg(mut self, pat: Pattern, ty: MsgType) -> Judgement {
        self.msg_ctx.push(pat, ty);
        self
    }

    pub fn with_input(mut self, chan: &str, ty: ProcType) -> Judgement {
        self.inputs.insert(chan.to_string(), ty);
        self
    }

    pub fn with_output(mut self, chan: &str, ty: ProcType) -> Judgement {
        self.outputs.insert(chan.to_string(), ty);
        self
    }

    /// Swap inputs and outputs, dualising every type.
    pub fn dual(&self) -> Judgement {
        Judgement {
            msg_ctx: self.msg_ctx.clone(),
            inputs: self
                .outputs
                .iter()
                .map(|(k, v)| (k.clone(), v.dual()))
                .collect(),
            outputs: self
                .inputs
                .iter()
                .map(|(k, v)| (k.clone(), v.dual()))
                .collect(),
        }
    }
}

impl fmt::Display for Judgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.msg_ctx)?;
        write!(f, " | ")?;
        let mut first = true;
        for (c, t) in &self.inputs {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{} : {}", c, t)?;
        }
        write!(f, " |- ")?;
        let mut first = true;
        for (c, t) in &self.outputs {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{} : {}", c, t)?;
        }
        Ok(())
    }
}

/// A declared primitive process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimSig {
    pub name: Name,
    pub msg_inputs: Vec<MsgType>,
    pub proc_inputs: Vec<ProcType>,
    pub proc_outputs: Vec<ProcType>,
}

/// Declared primitives, looked up by name.
#[derive(Debug, Clone, Default)]
pub struct PrimSet {
    by_name: BTreeMap<Name, PrimSig>,
}

impl PrimSet {
    pub fn new() -> Self {
        PrimSet::default()
    }

    pub fn of(sigs: Vec<PrimSig>) -> Self {
        let mut s = PrimSet::new();
        for sig in sigs {
            s.insert(sig);
        }
        s
    }

    pub fn insert(&mut self, sig: PrimSig) {
        self.by_name.insert(sig.name.clone(), sig);
    }

    pub fn get(&self, name: &str) -> Option<&PrimSig> {
        self.by_name.get(name)
    }
}
