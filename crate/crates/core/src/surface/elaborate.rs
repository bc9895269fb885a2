//! Lowering from surface syntax to core terms.
//!
//! Datatypes encode as right-nested binary sums: the constructor at
//! position i of n maps to i applications of the right injection around a
//! left injection (the final constructor omits the inner left injection),
//! nullary payloads are `I`, the empty datatype is `0`, and a single
//! constructor is a plain alias. N-ary case lowers to nested binary cases,
//! `where` to substitution, and `plug` to a cut.

use super::ast::*;
use super::lexer::Pos;
use crate::fresh::NameGen;
use crate::msg::{AxiomSet, AxiomSig, MsgContext, MsgTerm, MsgType, Pattern};
use crate::pmsg::{Judgement, PrimSet, PrimSig, Proc, ProcType, Signatures};
use crate::Name;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElabError {
    UnknownType(Name, Pos),
    CyclicType(Name),
    DuplicateDecl(Name),
    UnknownConstructor(Name, Pos),
    ConstructorArity(Name, Pos),
    DuplicateChannel(Name, Pos),
    NonVariableScrutinee(Pos),
    EmptyCase(Pos),
    ArmMismatch(String, Pos),
}

impl fmt::Display for ElabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElabError::UnknownType(n, p) => write!(f, "{}: unknown type `{}`", p, n),
            ElabError::CyclicType(n) => write!(f, "type alias cycle through `{}`", n),
            ElabError::DuplicateDecl(n) => write!(f, "duplicate declaration of `{}`", n),
            ElabError::UnknownConstructor(n, p) => {
                write!(f, "{}: unknown constructor or axiom `{}`", p, n)
            }
            ElabError::ConstructorArity(n, p) => {
                write!(f, "{}: wrong payload for constructor `{}`", p, n)
            }
            ElabError::DuplicateChannel(n, p) => write!(f, "{}: duplicate channel `{}`", p, n),
            ElabError::NonVariableScrutinee(p) => {
                write!(f, "{}: case scrutinee must be a variable", p)
            }
            ElabError::EmptyCase(p) => write!(
                f,
                "{}: case needs at least one arm (use `absurd` for the empty type)",
                p
            ),
            ElabError::ArmMismatch(m, p) => write!(f, "{}: {}", p, m),
        }
    }
}

impl std::error::Error for ElabError {}

#[derive(Debug, Clone)]
pub struct CtorInfo {
    pub data: Name,
    pub index: usize,
    pub count: usize,
    pub payload: MsgType,
}

#[derive(Debug, Clone)]
pub struct ProcDef {
    pub name: Name,
    pub judgement: Judgement,
    pub proc: Proc,
}

/// An elaborated module: signatures plus lowered process definitions.
#[derive(Debug, Clone)]
pub struct Module {
    pub sigs: Signatures,
    pub ctors: BTreeMap<Name, CtorInfo>,
    pub ctor_order: BTreeMap<Name, Vec<Name>>,
    pub defs: Vec<ProcDef>,
}

struct Elab {
    aliases: BTreeMap<Name, TypeAst>,
    resolved: BTreeMap<Name, MsgType>,
    datas: BTreeMap<Name, MsgType>,
    ctors: BTreeMap<Name, CtorInfo>,
    ctor_order: BTreeMap<Name, Vec<Name>>,
    axioms: AxiomSet,
}

impl Elab {
    fn resolve_msg(&mut self, t: &TypeAst, stack: &mut Vec<Name>) -> Result<MsgType, ElabError> {
        match t {
            TypeAst::Unit => Ok(MsgType::Unit),
            TypeAst::Zero => Ok(MsgType::Zero),
            TypeAst::Prod(a, b) => Ok(MsgType::prod(
                self.resolve_msg(a, stack)?,
                self.resolve_msg(b, stack)?,
            )),
            TypeAst::Sum(a, b) => Ok(MsgType::sum(
                self.resolve_msg(a, stack)?,
                self.resolve_msg(b, stack)?,
            )),
            TypeAst::Named(n, pos) => {
                if let Some(done) = self.resolved.get(n) {
                    return Ok(done.clone());
                }
                if let Some(enc) = self.datas.get(n) {
                    return Ok(enc.clone());
                }
                if let Some(body) = self.aliases.get(n).cloned() {
                    if stack.contains(n) {
                        return Err(ElabError::CyclicType(n.clone()));
                    }
                    stack.push(n.clone());
                    let r = self.resolve_msg(&body, stack)?;
                    stack.pop();
                    self.resolved.insert(n.clone(), r.clone());
                    return Ok(r);
                }
                // Undeclared names are atoms of the signature.
                let _ = pos;
                Ok(MsgType::Atom(n.clone()))
            }
        }
    }

    fn resolve_proc(&mut self, t: &ProcTypeAst) -> Result<ProcType, ElabError> {
        match t {
            ProcTypeAst::Named(n, _) => Ok(ProcType::Atom(n.clone())),
            ProcTypeAst::Top => Ok(ProcType::Top),
            ProcTypeAst::Bot => Ok(ProcType::Bot),
            ProcTypeAst::Tensor(a, b) => Ok(ProcType::tensor(
                self.resolve_proc(a)?,
                self.resolve_proc(b)?,
            )),
            ProcTypeAst::Par(a, b) => {
                Ok(ProcType::par(self.resolve_proc(a)?, self.resolve_proc(b)?))
            }
            ProcTypeAst::Act(a, x) => Ok(ProcType::act(
                self.resolve_msg(a, &mut Vec::new())?,
                self.resolve_proc(x)?,
            )),
            ProcTypeAst::CoAct(a, x) => Ok(ProcType::coact(
                self.resolve_msg(a, &mut Vec::new())?,
                self.resolve_proc(x)?,
            )),
        }
    }

    /// Wrap a payload in the injection path for constructor `index` of
    /// `count`.
    fn inject(&self, index: usize, count: usize, payload: MsgTerm) -> MsgTerm {
        if count <= 1 {
            return payload;
        }
        if index + 1 == count {
            let mut t = payload;
            for _ in 0..index {
                t = MsgTerm::inj2(t);
            }
            t
        } else {
            let mut t = MsgTerm::inj1(payload);
            for _ in 0..index {
                t = MsgTerm::inj2(t);
            }
            t
        }
    }

    fn lower_pattern(&self, p: &PatternAst) -> Pattern {
        match p {
            PatternAst::Var(n, _) => Pattern::Var(n.clone()),
            PatternAst::Pair(a, b) => {
                Pattern::pair(self.lower_pattern(a), self.lower_pattern(b))
            }
            PatternAst::Unit => Pattern::Unit,
        }
    }

    fn lower_expr(&mut self, e: &ExprAst, gen: &mut NameGen) -> Result<MsgTerm, ElabError> {
        match e {
            ExprAst::Var(n, pos) => {
                if let Some(info) = self.ctors.get(n).cloned() {
                    if info.payload != MsgType::Unit {
                        return Err(ElabError::ConstructorArity(n.clone(), *pos));
                    }
                    return Ok(self.inject(info.index, info.count, MsgTerm::UnitVal));
                }
                Ok(MsgTerm::Var(n.clone()))
            }
            ExprAst::App(n, args, pos) => {
                if self.axioms.get(n).is_some() {
                    let mut lowered = Vec::new();
                    for a in args {
                        lowered.push(self.lower_expr(a, gen)?);
                    }
                    return Ok(MsgTerm::Axiom(n.clone(), lowered));
                }
                if let Some(info) = self.ctors.get(n).cloned() {
                    if args.is_empty() {
                        return Err(ElabError::ConstructorArity(n.clone(), *pos));
                    }
                    let mut payload = self.lower_expr(args.last().unwrap(), gen)?;
                    for a in args[..args.len() - 1].iter().rev() {
                        payload = MsgTerm::pair(self.lower_expr(a, gen)?, payload);
                    }
                    return Ok(self.inject(info.index, info.count, payload));
                }
                Err(ElabError::UnknownConstructor(n.clone(), *pos))
            }
            ExprAst::Unit => Ok(MsgTerm::UnitVal),
            ExprAst::Pair(a, b) => Ok(MsgTerm::pair(
                self.lower_expr(a, gen)?,
                self.lower_expr(b, gen)?,
            )),
            ExprAst::Inl(t) => Ok(MsgTerm::inj1(self.lower_expr(t, gen)?)),
            ExprAst::Inr(t) => Ok(MsgTerm::inj2(self.lower_expr(t, gen)?)),
            ExprAst::Absurd(z, _) => Ok(MsgTerm::Absurd(z.clone())),
            ExprAst::Where { body, pat, arg } => {
                let body = self.lower_expr(body, gen)?;
                let arg = self.lower_expr(arg, gen)?;
                Ok(MsgTerm::subst(self.lower_pattern(pat), body, arg))
            }
            ExprAst::Case {
                scrutinee,
                scrutinee_pos,
                arms,
            } => {
                let z = match &**scrutinee {
                    ExprAst::Var(n, _) if !self.ctors.contains_key(n) => n.clone(),
                    _ => return Err(ElabError::NonVariableScrutinee(*scrutinee_pos)),
                };
                let plan = self.arm_plan(arms.iter().map(|a| (&a.ctor, a.pos)), *scrutinee_pos)?;
                let mut bodies = Vec::new();
                for idx in &plan {
                    let arm = &arms[*idx];
                    let pat = match &arm.pat {
                        Some(p) => self.lower_pattern(p),
                        None => Pattern::Unit,
                    };
                    bodies.push((pat, self.lower_expr(&arm.body, gen)?));
                }
                Ok(lower_case_msg(z, bodies, gen))
            }
        }
    }

    /// Order arms by constructor index (or inl/inr), checking coverage.
    fn arm_plan<'a, I: Iterator<Item = (&'a ArmCtor, Pos)>>(
        &self,
        arms: I,
        pos: Pos,
    ) -> Result<Vec<usize>, ElabError> {
        let arms: Vec<(&ArmCtor, Pos)> = arms.collect();
        if arms.is_empty() {
            return Err(ElabError::EmptyCase(pos));
        }
        match arms[0].0 {
            ArmCtor::Inl | ArmCtor::Inr => {
                if arms.len() != 2 {
                    return Err(ElabError::ArmMismatch(
                        "a sum case needs exactly `inl` and `inr` arms".to_string(),
                        pos,
                    ));
                }
                let mut order = vec![usize::MAX; 2];
                for (i, (c, p)) in arms.iter().enumerate() {
                    let slot = match c {
                        ArmCtor::Inl => 0,
                        ArmCtor::Inr => 1,
                        ArmCtor::Named(n) => {
                            return Err(ElabError::ArmMismatch(
                                format!("unexpected constructor `{}` among inl/inr arms", n),
                                *p,
                            ))
                        }
                    };
                    if order[slot] != usize::MAX {
                        return Err(ElabError::ArmMismatch("duplicate arm".to_string(), *p));
                    }
                    order[slot] = i;
                }
                Ok(order)
            }
            ArmCtor::Named(first) => {
                let info = self
                    .ctors
                    .get(first)
                    .ok_or_else(|| ElabError::UnknownConstructor(first.clone(), arms[0].1))?;
                let data = info.data.clone();
                let all = self.ctor_order[&data].clone();
                let mut order = vec![usize::MAX; all.len()];
                for (i, (c, p)) in arms.iter().enumerate() {
                    let ArmCtor::Named(n) = c else {
                        return Err(ElabError::ArmMismatch(
                            "cannot mix inl/inr with named constructors".to_string(),
                            *p,
                        ));
                    };
                    let ci = self
                        .ctors
                        .get(n)
                        .filter(|ci| ci.data == data)
                        .ok_or_else(|| ElabError::UnknownConstructor(n.clone(), *p))?;
                    if order[ci.index] != usize::MAX {
                        return Err(ElabError::ArmMismatch(
                            format!("duplicate arm for `{}`", n),
                            *p,
                        ));
                    }
                    order[ci.index] = i;
                }
                if let Some(missing) = order.iter().position(|&i| i == usize::MAX) {
                    return Err(ElabError::ArmMismatch(
                        format!("missing arm for `{}`", all[missing]),
                        pos,
                    ));
                }
                Ok(order)
            }
        }
    }

    fn lower_stmt(&mut self, s: &StmtAst, gen: &mut NameGen) -> Result<Proc, ElabError> {
        match s {
            StmtAst::Get {
                chan, pat, body, ..
            } => Ok(Proc::get(
                chan,
                self.lower_pattern(pat),
                self.lower_stmt(body, gen)?,
            )),
            StmtAst::Put {
                chan,
                payload,
                body,
                ..
            } => Ok(Proc::put(
                chan,
                self.lower_expr(payload, gen)?,
                self.lower_stmt(body, gen)?,
            )),
            StmtAst::Close { chan, body, .. } => {
                Ok(Proc::close(chan, self.lower_stmt(body, gen)?))
            }
            StmtAst::End { chan, .. } => Ok(Proc::end(chan)),
            StmtAst::Split {
                chan,
                c1,
                c2,
                body,
                pos,
            } => {
                if c1 == c2 {
                    return Err(ElabError::DuplicateChannel(c1.clone(), *pos));
                }
                Ok(Proc::split(chan, c1, c2, self.lower_stmt(body, gen)?))
            }
            StmtAst::Fork {
                chan,
                c1,
                left,
                c2,
                right,
                pos,
            } => {
                if c1 == c2 {
                    return Err(ElabError::DuplicateChannel(c1.clone(), *pos));
                }
                Ok(Proc::fork(
                    chan,
                    c1,
                    self.lower_stmt(left, gen)?,
                    c2,
                    self.lower_stmt(right, gen)?,
                ))
            }
            StmtAst::Case {
                scrutinee,
                scrutinee_pos,
                arms,
                ..
            } => {
                let z = match &**scrutinee {
                    ExprAst::Var(n, _) if !self.ctors.contains_key(n) => n.clone(),
                    _ => return Err(ElabError::NonVariableScrutinee(*scrutinee_pos)),
                };
                let plan = self.arm_plan(arms.iter().map(|a| (&a.ctor, a.pos)), *scrutinee_pos)?;
                let mut bodies = Vec::new();
                for idx in &plan {
                    let arm = &arms[*idx];
                    let pat = match &arm.pat {
                        Some(p) => self.lower_pattern(p),
                        None => Pattern::Unit,
                    };
                    bodies.push((pat, self.lower_stmt(&arm.body, gen)?));
                }
                Ok(lower_case_proc(z, bodies, gen))
            }
            StmtAst::Absurd { var, .. } => Ok(Proc::mabsurd(var)),
            StmtAst::Plug {
                left,
                right,
                out_chan,
                in_chan,
                ..
            } => {
                let l = self.lower_stmt(left, gen)?;
                let mut r = self.lower_stmt(right, gen)?;
                // Restore global name disjointness before plugging.
                let collisions: Vec<Name> = l
                    .all_names()
                    .intersection(&r.all_names())
                    .cloned()
                    .collect();
                let mut in_chan = in_chan.clone();
                if !collisions.is_empty() {
                    let mut g2 = NameGen::new();
                    g2.reserve_all(l.all_names().iter());
                    g2.reserve_all(r.all_names().iter());
                    let mut map = BTreeMap::new();
                    for n in collisions {
                        map.insert(n.clone(), g2.fresh(&n));
                    }
                    if let Some(new_in) = map.get(&in_chan) {
                        in_chan = new_in.clone();
                    }
                    r = crate::pmsg::rename_all_names(&r, &map);
                }
                Ok(Proc::cut(l, out_chan, &in_chan, r))
            }
            StmtAst::Where {
                body, pat, arg, ..
            } => {
                let body = self.lower_stmt(body, gen)?;
                let arg = self.lower_expr(arg, gen)?;
                Ok(Proc::msubst(self.lower_pattern(pat), body, arg))
            }
            StmtAst::Identity {
                input, output, ty, ..
            } => Ok(Proc::Id {
                input: input.clone(),
                ty: self.resolve_proc(ty)?,
                output: output.clone(),
            }),
            StmtAst::PrimCall {
                name,
                msg_args,
                inputs,
                outputs,
                ..
            } => Ok(Proc::Prim {
                name: name.clone(),
                msg_args: msg_args.clone(),
                inputs: inputs.clone(),
                outputs: outputs.clone(),
            }),
        }
    }
}

/// Lower ordered case bodies to nested binary message cases.
fn lower_case_msg(z: Name, mut arms: Vec<(Pattern, MsgTerm)>, gen: &mut NameGen) -> MsgTerm {
    match arms.len() {
        0 => MsgTerm::Absurd(z),
        1 => {
            let (pat, body) = arms.pop().unwrap();
            MsgTerm::subst(pat, body, MsgTerm::Var(z))
        }
        2 => {
            let (rp, rb) = arms.pop().unwrap();
            let (lp, lb) = arms.pop().unwrap();
            MsgTerm::Case {
                scrutinee: z,
                left_pat: lp,
                left: Box::new(lb),
                right_pat: rp,
                right: Box::new(rb),
            }
        }
        _ => {
            let (lp, lb) = arms.remove(0);
            let rest_var = gen.fresh(&z);
            let rest = lower_case_msg(rest_var.clone(), arms, gen);
            MsgTerm::Case {
                scrutinee: z,
                left_pat: lp,
                left: Box::new(lb),
                right_pat: Pattern::Var(rest_var),
                right: Box::new(rest),
            }
        }
    }
}

fn lower_case_proc(z: Name, mut arms: Vec<(Pattern, Proc)>, gen: &mut NameGen) -> Proc {
    match arms.len() {
        0 => Proc::mabsurd(&z),
        1 => {
            let (pat, body) = arms.pop().unwrap();
            Proc::msubst(pat, body, MsgTerm::Var(z))
        }
        2 => {
            let (rp, rb) = arms.pop().unwrap();
            let (lp, lb) = arms.pop().unwrap();
            Proc::MCase {
                scrutinee: z,
                left_pat: lp,
                left: Box::new(lb),
                right_pat: rp,
                right: Box::new(rb),
            }
        }
        _ => {
            let (lp, lb) = arms.remove(0);
            let rest_var = gen.fresh(&z);
            let rest = lower_case_proc(rest_var.clone(), arms, gen);
            Proc::MCase {
                scrutinee: z,
                left_pat: lp,
                left: Box::new(lb),
                right_pat: Pattern::Var(rest_var),
                right: Box::new(rest),
            }
        }
    }
}

/// Elaborate a parsed module.
pub fn elaborate(m: &SourceModule) -> Result<Module, ElabError> {
    let mut elab = Elab {
        aliases: BTreeMap::new(),
        resolved: BTreeMap::new(),
        datas: BTreeMap::new(),
        ctors: BTreeMap::new(),
        ctor_order: BTreeMap::new(),
        axioms: AxiomSet::new(),
    };

    let mut names = BTreeSet::new();
    for t in &m.types {
        if !names.insert(t.name.clone()) {
            return Err(ElabError::DuplicateDecl(t.name.clone()));
        }
        elab.aliases.insert(t.name.clone(), t.body.clone());
    }
    for d in &m.datas {
        if !names.insert(d.name.clone()) {
            return Err(ElabError::DuplicateDecl(d.name.clone()));
        }
    }

    // Datatypes may mention aliases (and other datatypes are out of scope:
    // payloads resolve structurally, recursion is rejected as unknown).
    for d in &m.datas {
        let mut payloads = Vec::new();
        for (cname, payload, _) in &d.ctors {
            let ty = match payload {
                Some(t) => elab.resolve_msg(t, &mut Vec::new())?,
                None => MsgType::Unit,
            };
            payloads.push((cname.clone(), ty));
        }
        let count = payloads.len();
        let encoded = match count {
            0 => MsgType::Zero,
            _ => {
                let mut iter = payloads.iter().rev();
                let mut acc = iter.next().unwrap().1.clone();
                for (_, t) in iter {
                    acc = MsgType::sum(t.clone(), acc);
                }
                acc
            }
        };
        elab.datas.insert(d.name.clone(), encoded);
        let mut order = Vec::new();
        for (index, (cname, ty)) in payloads.into_iter().enumerate() {
            if elab.ctors.contains_key(&cname) {
                return Err(ElabError::DuplicateDecl(cname));
            }
            order.push(cname.clone());
            elab.ctors.insert(
                cname,
                CtorInfo {
                    data: d.name.clone(),
                    index,
                    count,
                    payload: ty,
                },
            );
        }
        elab.ctor_order.insert(d.name.clone(), order);
    }

    for a in &m.axioms {
        if !names.insert(a.name.clone()) {
            return Err(ElabError::DuplicateDecl(a.name.clone()));
        }
        let mut inputs = Vec::new();
        for t in &a.inputs {
            inputs.push(elab.resolve_msg(t, &mut Vec::new())?);
        }
        let output = elab.resolve_msg(&a.output, &mut Vec::new())?;
        elab.axioms.insert(AxiomSig {
            name: a.name.clone(),
            inputs,
            output,
        });
    }

    let mut prims = PrimSet::new();
    for p in &m.prims {
        if !names.insert(p.name.clone()) {
            return Err(ElabError::DuplicateDecl(p.name.clone()));
        }
        let mut msg_inputs = Vec::new();
        for t in &p.msg_inputs {
            msg_inputs.push(elab.resolve_msg(t, &mut Vec::new())?);
        }
        let mut proc_inputs = Vec::new();
        for t in &p.proc_inputs {
            proc_inputs.push(elab.resolve_proc(t)?);
        }
        let mut proc_outputs = Vec::new();
        for t in &p.proc_outputs {
            proc_outputs.push(elab.resolve_proc(t)?);
        }
        prims.insert(PrimSig {
            name: p.name.clone(),
            msg_inputs,
            proc_inputs,
            proc_outputs,
        });
    }

    let mut defs = Vec::new();
    for pd in &m.procs {
        let mut msg_ctx = MsgContext::new();
        for (pat, ty) in &pd.msg_ctx {
            msg_ctx.push(elab.lower_pattern(pat), elab.resolve_msg(ty, &mut Vec::new())?);
        }
        let mut judgement = Judgement {
            msg_ctx,
            ..Judgement::new()
        };
        for (c, ty) in &pd.inputs {
            if judgement.inputs.contains_key(c) {
                return Err(ElabError::DuplicateChannel(c.clone(), pd.pos));
            }
            judgement.inputs.insert(c.clone(), elab.resolve_proc(ty)?);
        }
        for (c, ty) in &pd.outputs {
            if judgement.inputs.contains_key(c) || judgement.outputs.contains_key(c) {
                return Err(ElabError::DuplicateChannel(c.clone(), pd.pos));
            }
            judgement.outputs.insert(c.clone(), elab.resolve_proc(ty)?);
        }
        let mut gen = NameGen::new();
        collect_stmt_names(&pd.body, &mut gen);
        let proc = elab.lower_stmt(&pd.body, &mut gen)?;
        defs.push(ProcDef {
            name: pd.name.clone(),
            judgement,
            proc,
        });
    }

    Ok(Module {
        sigs: Signatures {
            axioms: elab.axioms,
            prims,
        },
        ctors: elab.ctors,
        ctor_order: elab.ctor_order,
        defs,
    })
}

fn collect_stmt_names(s: &StmtAst, gen: &mut NameGen) {
    match s {
        StmtAst::Get { chan, pat, body, .. } => {
            gen.reserve(chan);
            collect_pat_names(pat, gen);
            collect_stmt_names(body, gen);
        }
        StmtAst::Put { chan, body, .. } => {
            gen.reserve(chan);
            collect_stmt_names(body, gen);
        }
        StmtAst::Close { chan, body, .. } => {
            gen.reserve(chan);
            collect_stmt_names(body, gen);
        }
        StmtAst::End { chan, .. } => gen.reserve(chan),
        StmtAst::Split {
            chan, c1, c2, body, ..
        } => {
            gen.reserve(chan);
            gen.reserve(c1);
            gen.reserve(c2);
            collect_stmt_names(body, gen);
        }
        StmtAst::Fork {
            chan,
            c1,
            left,
            c2,
            right,
            ..
        } => {
            gen.reserve(chan);
            gen.reserve(c1);
            gen.reserve(c2);
            collect_stmt_names(left, gen);
            collect_stmt_names(right, gen);
        }
        StmtAst::Case { arms, .. } => {
            for a in arms {
                if let Some(p) = &a.pat {
                    collect_pat_names(p, gen);
                }
                collect_stmt_names(&a.body, gen);
            }
        }
        StmtAst::Absurd { var, .. } => gen.reserve(var),
        StmtAst::Plug { left, right, .. } => {
            collect_stmt_names(left, gen);
            collect_stmt_names(right, gen);
        }
        StmtAst::Where { body, pat, .. } => {
            collect_pat_names(pat, gen);
            collect_stmt_names(body, gen);
        }
        StmtAst::Identity { input, output, .. } => {
            gen.reserve(input);
            gen.reserve(output);
        }
        StmtAst::PrimCall {
            msg_args,
            inputs,
            outputs,
            ..
        } => {
            for n in msg_args.iter().chain(inputs).chain(outputs) {
                gen.reserve(n);
            }
        }
    }
}

fn collect_pat_names(p: &PatternAst, gen: &mut NameGen) {
    match p {
        PatternAst::Var(n, _) => gen.reserve(n),
        PatternAst::Pair(a, b) => {
            collect_pat_names(a, gen);
            collect_pat_names(b, gen);
        }
        PatternAst::Unit => {}
    }
}
