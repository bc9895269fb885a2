//! Shared test support: random well-typed process generation, exhaustive
//! small-term enumeration, and an environment-based evaluation oracle for
//! message terms.

#![allow(dead_code)]

use mpl_core::fresh::NameGen;
use mpl_core::msg::{AxiomSet, MsgContext, MsgTerm, MsgType, Pattern};
use mpl_core::pmsg::{identity_proc, Judgement, Proc, ProcType};
use rand::rngs::StdRng;
use rand::Rng;

pub fn sigs() -> mpl_core::pmsg::Signatures {
    mpl_core::pmsg::Signatures::default()
}

// ---------------------------------------------------------------------------
// Random well-typed processes.

pub struct GenProc {
    pub proc: Proc,
    pub judgement: Judgement,
    counter: u64,
}

impl GenProc {
    fn fresh_chan(&mut self) -> String {
        self.counter += 1;
        format!("c{}", self.counter)
    }

    fn fresh_var(&mut self) -> String {
        self.counter += 1;
        format!("v{}", self.counter)
    }
}

fn leaf(rng: &mut StdRng, g: &mut GenProc) {
    match rng.gen_range(0..3) {
        0 => {
            let a = g.fresh_chan();
            let b = g.fresh_chan();
            g.proc = Proc::id(&a, ProcType::atom("X"), &b);
            g.judgement = Judgement::new()
                .with_input(&a, ProcType::atom("X"))
                .with_output(&b, ProcType::atom("X"));
        }
        1 => {
            let c = g.fresh_chan();
            g.proc = Proc::end(&c);
            g.judgement = Judgement::new().with_input(&c, ProcType::Bot);
        }
        _ => {
            let c = g.fresh_chan();
            g.proc = Proc::end(&c);
            g.judgement = Judgement::new().with_output(&c, ProcType::Top);
        }
    }
}

fn pick<T: Clone>(rng: &mut StdRng, items: &[T]) -> Option<T> {
    if items.is_empty() {
        None
    } else {
        Some(items[rng.gen_range(0..items.len())].clone())
    }
}

/// One random well-typedness-preserving wrap.
fn grow(rng: &mut StdRng, g: &mut GenProc, avoid_chans: &[String]) {
    let inputs: Vec<String> = g
        .judgement
        .inputs
        .keys()
        .filter(|c| !avoid_chans.contains(c))
        .cloned()
        .collect();
    let outputs: Vec<String> = g
        .judgement
        .outputs
        .keys()
        .filter(|c| !avoid_chans.contains(c))
        .cloned()
        .collect();
    let vars: Vec<(Pattern, MsgType)> = g.judgement.msg_ctx.entries.clone();

    match rng.gen_range(0..10) {
        // close a fresh top input
        0 => {
            let c = g.fresh_chan();
            g.proc = Proc::close(&c, g.proc.clone());
            g.judgement.inputs.insert(c, ProcType::Top);
        }
        // close a fresh bot output
        1 => {
            let c = g.fresh_chan();
            g.proc = Proc::close(&c, g.proc.clone());
            g.judgement.outputs.insert(c, ProcType::Bot);
        }
        // split two inputs into a tensor input
        2 => {
            if inputs.len() >= 2 {
                let a = inputs[0].clone();
                let b = inputs[1].clone();
                let ta = g.judgement.inputs.remove(&a).unwrap();
                let tb = g.judgement.inputs.remove(&b).unwrap();
                let c = g.fresh_chan();
                g.proc = Proc::split(&c, &a, &b, g.proc.clone());
                g.judgement.inputs.insert(c, ProcType::tensor(ta, tb));
            }
        }
        // split two outputs into a par output
        3 => {
            if outputs.len() >= 2 {
                let a = outputs[0].clone();
                let b = outputs[1].clone();
                let ta = g.judgement.outputs.remove(&a).unwrap();
                let tb = g.judgement.outputs.remove(&b).unwrap();
                let c = g.fresh_chan();
                g.proc = Proc::split(&c, &a, &b, g.proc.clone());
                g.judgement.outputs.insert(c, ProcType::par(ta, tb));
            }
        }
        // send a fresh variable on some channel
        4 => {
            if let Some(c) = pick(rng, &[inputs.clone(), outputs.clone()].concat()) {
                let x = g.fresh_var();
                g.proc = Proc::put(&c, MsgTerm::var(&x), g.proc.clone());
                let a = MsgType::atom("A");
                if let Some(t) = g.judgement.inputs.remove(&c) {
                    g.judgement
                        .inputs
                        .insert(c, ProcType::coact(a.clone(), t));
                } else {
                    let t = g.judgement.outputs.remove(&c).unwrap();
                    g.judgement.outputs.insert(c, ProcType::act(a.clone(), t));
                }
                g.judgement.msg_ctx.push(Pattern::var(&x), a);
            }
        }
        // send a unit on some channel
        5 => {
            if let Some(c) = pick(rng, &[inputs.clone(), outputs.clone()].concat()) {
                g.proc = Proc::put(&c, MsgTerm::UnitVal, g.proc.clone());
                if let Some(t) = g.judgement.inputs.remove(&c) {
                    g.judgement
                        .inputs
                        .insert(c, ProcType::coact(MsgType::Unit, t));
                } else {
                    let t = g.judgement.outputs.remove(&c).unwrap();
                    g.judgement
                        .outputs
                        .insert(c, ProcType::act(MsgType::Unit, t));
                }
            }
        }
        // receive one of the free variables
        6 => {
            if !vars.is_empty() {
                let i = rng.gen_range(0..vars.len());
                if let (Pattern::Var(x), ty) = &vars[i] {
                    if let Some(c) = pick(rng, &[inputs.clone(), outputs.clone()].concat()) {
                        g.proc = Proc::get(&c, Pattern::var(x), g.proc.clone());
                        g.judgement.msg_ctx.entries.remove(i);
                        if let Some(t) = g.judgement.inputs.remove(&c) {
                            g.judgement.inputs.insert(c, ProcType::act(ty.clone(), t));
                        } else {
                            let t = g.judgement.outputs.remove(&c).unwrap();
                            g.judgement
                                .outputs
                                .insert(c, ProcType::coact(ty.clone(), t));
                        }
                    }
                }
            }
        }
        // receive a unit
        7 => {
            if let Some(c) = pick(rng, &[inputs.clone(), outputs.clone()].concat()) {
                g.proc = Proc::get(&c, Pattern::Unit, g.proc.clone());
                if let Some(t) = g.judgement.inputs.remove(&c) {
                    g.judgement
                        .inputs
                        .insert(c, ProcType::act(MsgType::Unit, t));
                } else {
                    let t = g.judgement.outputs.remove(&c).unwrap();
                    g.judgement
                        .outputs
                        .insert(c, ProcType::coact(MsgType::Unit, t));
                }
            }
        }
        // case on a fresh I + I variable, identical branches
        8 => {
            let z = g.fresh_var();
            g.proc = Proc::mcase(
                &z,
                Pattern::Unit,
                g.proc.clone(),
                Pattern::Unit,
                g.proc.clone(),
            );
            g.judgement
                .msg_ctx
                .push(Pattern::var(&z), MsgType::sum(MsgType::Unit, MsgType::Unit));
        }
        // plug an identity onto some channel (creates a redex)
        _ => {
            if rng.gen_bool(0.5) {
                if let Some(c) = pick(rng, &outputs) {
                    let ty = g.judgement.outputs.get(&c).unwrap().clone();
                    let m = g.fresh_chan();
                    let n = g.fresh_chan();
                    let id = identity_proc(&ty, &m, &n);
                    let id = rename_disjoint(&id, &g.proc, &m, &n);
                    g.proc = Proc::cut(g.proc.clone(), &c, &m, id.0);
                    g.judgement.outputs.remove(&c);
                    g.judgement.outputs.insert(id.2, ty);
                }
            } else if let Some(c) = pick(rng, &inputs) {
                let ty = g.judgement.inputs.get(&c).unwrap().clone();
                let m = g.fresh_chan();
                let n = g.fresh_chan();
                let id = identity_proc(&ty, &m, &n);
                let id = rename_disjoint(&id, &g.proc, &m, &n);
                g.proc = Proc::cut(id.0, &id.2, &c, g.proc.clone());
                g.judgement.inputs.remove(&c);
                g.judgement.inputs.insert(id.1, ty);
            }
        }
    }
}

/// (renamed process, new input endpoint, new output endpoint)
fn rename_disjoint(p: &Proc, against: &Proc, input: &str, output: &str) -> (Proc, String, String) {
    let mut gen = NameGen::new();
    gen.reserve_all(against.all_names().iter());
    let mut map = std::collections::BTreeMap::new();
    for n in p.all_names() {
        if !gen.try_reserve(&n) {
            map.insert(n.clone(), gen.fresh(&n));
        }
    }
    let renamed = mpl_core::pmsg::rename_all_names(p, &map);
    let i = map.get(input).cloned().unwrap_or_else(|| input.to_string());
    let o = map
        .get(output)
        .cloned()
        .unwrap_or_else(|| output.to_string());
    (renamed, i, o)
}

/// A random well-typed primitive-free process of bounded depth.
pub fn gen_proc(rng: &mut StdRng, depth: usize) -> GenProc {
    let mut g = GenProc {
        proc: Proc::end("c0"),
        judgement: Judgement::new(),
        counter: 0,
    };
    leaf(rng, &mut g);
    for _ in 0..depth {
        grow(rng, &mut g, &[]);
    }
    g
}

/// A random process with a designated output channel of the given type.
pub fn gen_proc_with_output(rng: &mut StdRng, depth: usize, ty: &ProcType) -> (GenProc, String) {
    let mut g = GenProc {
        proc: Proc::end("c0"),
        judgement: Judgement::new(),
        counter: 100,
    };
    let m = g.fresh_chan();
    let n = g.fresh_chan();
    g.proc = identity_proc(ty, &m, &n);
    g.judgement = Judgement::new()
        .with_input(&m, ty.clone())
        .with_output(&n, ty.clone());
    for _ in 0..depth {
        grow(rng, &mut g, &[n.clone()]);
    }
    (g, n)
}

/// A random process with a designated input channel of the given type.
pub fn gen_proc_with_input(rng: &mut StdRng, depth: usize, ty: &ProcType) -> (GenProc, String) {
    let mut g = GenProc {
        proc: Proc::end("c0"),
        judgement: Judgement::new(),
        counter: 200,
    };
    let m = g.fresh_chan();
    let n = g.fresh_chan();
    g.proc = identity_proc(ty, &m, &n);
    g.judgement = Judgement::new()
        .with_input(&m, ty.clone())
        .with_output(&n, ty.clone());
    for _ in 0..depth {
        grow(rng, &mut g, &[m.clone()]);
    }
    (g, m)
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small processes (one msg atom, one proc atom).

#[derive(Clone)]
pub struct SmallProc {
    pub proc: Proc,
    pub judgement: Judgement,
}

/// Every primitive-free process of the bounded shape grammar: identity and
/// end leaves over atoms X / A, wrapped with close, split, unit sends and
/// receives, variable sends and receives, shared-variable cases, and
/// identity cuts. Channel selection is canonical (first applicable), so the
/// corpus is exhaustive up to renaming.
pub fn enumerate_procs(depth: usize) -> Vec<SmallProc> {
    let mut counter = 0u64;
    let mut fresh = move |base: &str| {
        counter += 1;
        format!("{}{}", base, counter)
    };
    let x = ProcType::atom("X");
    let a = MsgType::atom("A");

    let mut level: Vec<SmallProc> = vec![
        {
            let (i, o) = (fresh("e"), fresh("e"));
            let _ = o;
            SmallProc {
                proc: Proc::end(&i),
                judgement: Judgement::new().with_input(&i, ProcType::Bot),
            }
        },
        {
            let o = fresh("e");
            SmallProc {
                proc: Proc::end(&o),
                judgement: Judgement::new().with_output(&o, ProcType::Top),
            }
        },
        {
            let (i, o) = (fresh("w"), fresh("w"));
            SmallProc {
                proc: Proc::id(&i, x.clone(), &o),
                judgement: Judgement::new()
                    .with_input(&i, x.clone())
                    .with_output(&o, x.clone()),
            }
        },
    ];
    let mut all = level.clone();

    for _ in 1..depth {
        let mut next = Vec::new();
        for sp in &level {
            let inputs: Vec<(String, ProcType)> = sp
                .judgement
                .inputs
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            let outputs: Vec<(String, ProcType)> = sp
                .judgement
                .outputs
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();

            // close fresh channels
            {
                let c = fresh("t");
                let mut j = sp.judgement.clone();
                j.inputs.insert(c.clone(), ProcType::Top);
                next.push(SmallProc {
                    proc: Proc::close(&c, sp.proc.clone()),
                    judgement: j,
                });
            }
            {
                let c = fresh("t");
                let mut j = sp.judgement.clone();
                j.outputs.insert(c.clone(), ProcType::Bot);
                next.push(SmallProc {
                    proc: Proc::close(&c, sp.proc.clone()),
                    judgement: j,
                });
            }
            // split the first two inputs / outputs
            if inputs.len() >= 2 {
                let c = fresh("s");
                let mut j = sp.judgement.clone();
                let ta = j.inputs.remove(&inputs[0].0).unwrap();
                let tb = j.inputs.remove(&inputs[1].0).unwrap();
                j.inputs.insert(c.clone(), ProcType::tensor(ta, tb));
                next.push(SmallProc {
                    proc: Proc::split(&c, &inputs[0].0, &inputs[1].0, sp.proc.clone()),
                    judgement: j,
                });
            }
            if outputs.len() >= 2 {
                let c = fresh("s");
                let mut j = sp.judgement.clone();
                let ta = j.outputs.remove(&outputs[0].0).unwrap();
                let tb = j.outputs.remove(&outputs[1].0).unwrap();
                j.outputs.insert(c.clone(), ProcType::par(ta, tb));
                next.push(SmallProc {
                    proc: Proc::split(&c, &outputs[0].0, &outputs[1].0, sp.proc.clone()),
                    judgement: j,
                });
            }
            // unit send / receive on the first channel of each polarity
            for (c, t) in inputs.iter().take(1) {
                let mut j = sp.judgement.clone();
                j.inputs
                    .insert(c.clone(), ProcType::act(MsgType::Unit, t.clone()));
                next.push(SmallProc {
                    proc: Proc::get(c, Pattern::Unit, sp.proc.clone()),
                    judgement: j,
                });
                let mut j = sp.judgement.clone();
                j.inputs
                    .insert(c.clone(), ProcType::coact(MsgType::Unit, t.clone()));
                next.push(SmallProc {
                    proc: Proc::put(c, MsgTerm::UnitVal, sp.proc.clone()),
                    judgement: j,
                });
            }
            for (c, t) in outputs.iter().take(1) {
                let mut j = sp.judgement.clone();
                j.outputs
                    .insert(c.clone(), ProcType::coact(MsgType::Unit, t.clone()));
                next.push(SmallProc {
                    proc: Proc::get(c, Pattern::Unit, sp.proc.clone()),
                    judgement: j,
                });
                let mut j = sp.judgement.clone();
                j.outputs
                    .insert(c.clone(), ProcType::act(MsgType::Unit, t.clone()));
                next.push(SmallProc {
                    proc: Proc::put(c, MsgTerm::UnitVal, sp.proc.clone()),
                    judgement: j,
                });
            }
            // send a fresh variable, receive a pending variable
            if let Some((c, t)) = outputs.first() {
                let v = fresh("m");
                let mut j = sp.judgement.clone();
                j.outputs
                    .insert(c.clone(), ProcType::act(a.clone(), t.clone()));
                j.msg_ctx.push(Pattern::Var(v.clone()), a.clone());
                next.push(SmallProc {
                    proc: Proc::put(c, MsgTerm::Var(v), sp.proc.clone()),
                    judgement: j,
                });
            }
            if let Some((pat, ty)) = sp.judgement.msg_ctx.entries.first() {
                if let Pattern::Var(v) = pat {
                    if let Some((c, t)) = inputs.first() {
                        let mut j = sp.judgement.clone();
                        j.msg_ctx.entries.remove(0);
                        j.inputs
                            .insert(c.clone(), ProcType::act(ty.clone(), t.clone()));
                        next.push(SmallProc {
                            proc: Proc::get(c, Pattern::Var(v.clone()), sp.proc.clone()),
                            judgement: j,
                        });
                    }
                    if let Some((c, t)) = outputs.first() {
                        let mut j = sp.judgement.clone();
                        j.msg_ctx.entries.remove(0);
                        j.outputs
                            .insert(c.clone(), ProcType::coact(ty.clone(), t.clone()));
                        next.push(SmallProc {
                            proc: Proc::get(c, Pattern::Var(v.clone()), sp.proc.clone()),
                            judgement: j,
                        });
                    }
                }
            }
            // case over a fresh I + I variable with equal branches
            {
                let z = fresh("z");
                let mut j = sp.judgement.clone();
                j.msg_ctx
                    .push(Pattern::Var(z.clone()), MsgType::sum(MsgType::Unit, MsgType::Unit));
                next.push(SmallProc {
                    proc: Proc::mcase(
                        &z,
                        Pattern::Unit,
                        sp.proc.clone(),
                        Pattern::Unit,
                        sp.proc.clone(),
                    ),
                    judgement: j,
                });
            }
            // cut an identity onto the first output
            if let Some((c, t)) = outputs.first() {
                let m = fresh("k");
                let n = fresh("k");
                let id = identity_proc(t, &m, &n);
                let (id, _, n2) = rename_disjoint(&id, &sp.proc, &m, &n);
                let mut j = sp.judgement.clone();
                j.outputs.remove(c);
                j.outputs.insert(n2, t.clone());
                next.push(SmallProc {
                    proc: Proc::cut(sp.proc.clone(), c, &m, id),
                    judgement: j,
                });
            }
            // and onto the first input
            if let Some((c, t)) = inputs.first() {
                let m = fresh("k");
                let n = fresh("k");
                let id = identity_proc(t, &m, &n);
                let (id, m2, n2) = rename_disjoint(&id, &sp.proc, &m, &n);
                let mut j = sp.judgement.clone();
                j.inputs.remove(c);
                j.inputs.insert(m2, t.clone());
                next.push(SmallProc {
                    proc: Proc::cut(id, &n2, c, sp.proc.clone()),
                    judgement: j,
                });
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

// ---------------------------------------------------------------------------
// Exhaustive type-directed enumeration of small message terms.

/// The type menu for the message corpus: two atoms plus one sum, product,
/// unit and empty type.
pub fn msg_type_menu() -> Vec<MsgType> {
    let a = MsgType::atom("A");
    let b = MsgType::atom("B");
    vec![
        a.clone(),
        b.clone(),
        MsgType::Unit,
        MsgType::Zero,
        MsgType::sum(a.clone(), b.clone()),
        MsgType::prod(a, b),
    ]
}

/// All derivations of `ctx ⊢ _ : goal` with at most `depth` constructors.
pub fn enumerate_msg(
    ctx: &[(String, MsgType)],
    goal: &MsgType,
    depth: usize,
    fresh: &mut u64,
) -> Vec<MsgTerm> {
    if depth == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();

    // Variables
    if ctx.len() == 1 && &ctx[0].1 == goal {
        out.push(MsgTerm::Var(ctx[0].0.clone()));
    }
    // Unit
    if ctx.is_empty() && *goal == MsgType::Unit {
        out.push(MsgTerm::UnitVal);
    }
    // Ex falso
    if let Some((z, _)) = ctx.iter().find(|(_, t)| *t == MsgType::Zero) {
        out.push(MsgTerm::Absurd(z.clone()));
    }
    // Injections
    if let MsgType::Sum(l, r) = goal {
        for t in enumerate_msg(ctx, l, depth - 1, fresh) {
            out.push(MsgTerm::inj1(t));
        }
        for t in enumerate_msg(ctx, r, depth - 1, fresh) {
            out.push(MsgTerm::inj2(t));
        }
    }
    // Pairs over every 2-partition of the context
    if let MsgType::Prod(l, r) = goal {
        for mask in 0..(1u32 << ctx.len()) {
            let (mut cl, mut cr) = (Vec::new(), Vec::new());
            for (i, entry) in ctx.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    cl.push(entry.clone());
                } else {
                    cr.push(entry.clone());
                }
            }
            for tl in enumerate_msg(&cl, l, depth - 1, fresh) {
                for tr in enumerate_msg(&cr, r, depth - 1, fresh) {
                    out.push(MsgTerm::pair(tl.clone(), tr));
                }
            }
        }
    }
    // Substitutions (p ↦ body) arg for each cut type and context split.
    if depth >= 2 {
        for cut_ty in [
            MsgType::atom("A"),
            MsgType::Unit,
            MsgType::sum(MsgType::atom("A"), MsgType::atom("B")),
            MsgType::prod(MsgType::atom("A"), MsgType::atom("B")),
        ] {
            for mask in 0..(1u32 << ctx.len()) {
                let (mut ca, mut cb) = (Vec::new(), Vec::new());
                for (i, entry) in ctx.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        ca.push(entry.clone());
                    } else {
                        cb.push(entry.clone());
                    }
                }
                let args = enumerate_msg(&ca, &cut_ty, depth - 1, fresh);
                if args.is_empty() {
                    continue;
                }
                for pat in patterns_for(&cut_ty, fresh) {
                    let mut body_ctx = cb.clone();
                    pattern_bindings(&pat, &cut_ty, &mut body_ctx);
                    for body in enumerate_msg(&body_ctx, goal, depth - 1, fresh) {
                        for arg in &args {
                            out.push(MsgTerm::subst(pat.clone(), body.clone(), arg.clone()));
                        }
                    }
                }
            }
        }
    }
    // Case on each sum-typed variable
    for (i, (z, t)) in ctx.iter().enumerate() {
        if let MsgType::Sum(l, r) = t {
            let mut rest: Vec<(String, MsgType)> = ctx.to_vec();
            rest.remove(i);
            *fresh += 1;
            let xv = format!("b{}", fresh);
            *fresh += 1;
            let yv = format!("b{}", fresh);
            let mut lctx = rest.clone();
            lctx.push((xv.clone(), (**l).clone()));
            let mut rctx = rest;
            rctx.push((yv.clone(), (**r).clone()));
            for lt in enumerate_msg(&lctx, goal, depth - 1, fresh) {
                for rt in enumerate_msg(&rctx, goal, depth - 1, fresh) {
                    out.push(MsgTerm::case(
                        z,
                        Pattern::Var(xv.clone()),
                        lt.clone(),
                        Pattern::Var(yv.clone()),
                        rt,
                    ));
                }
            }
        }
    }
    out
}

/// A variable binder and, where the type allows, the one-level refinement.
fn patterns_for(ty: &MsgType, fresh: &mut u64) -> Vec<Pattern> {
    *fresh += 1;
    let var = Pattern::Var(format!("s{}", fresh));
    match ty {
        MsgType::Prod(_, _) => {
            *fresh += 1;
            let l = Pattern::Var(format!("s{}", fresh));
            *fresh += 1;
            let r = Pattern::Var(format!("s{}", fresh));
            vec![var, Pattern::pair(l, r)]
        }
        MsgType::Unit => vec![var, Pattern::Unit],
        _ => vec![var],
    }
}

fn pattern_bindings(pat: &Pattern, ty: &MsgType, out: &mut Vec<(String, MsgType)>) {
    match (pat, ty) {
        (Pattern::Var(n), t) => out.push((n.clone(), t.clone())),
        (Pattern::Pair(a, b), MsgType::Prod(ta, tb)) => {
            pattern_bindings(a, ta, out);
            pattern_bindings(b, tb, out);
        }
        (Pattern::Unit, MsgType::Unit) => {}
        _ => panic!("pattern does not match type"),
    }
}

/// The message corpus: small contexts over the menu, terms of bounded depth.
pub fn msg_corpus(depth: usize) -> Vec<(MsgContext, MsgTerm, MsgType)> {
    let menu = msg_type_menu();
    let mut out = Vec::new();
    let mut fresh = 0u64;
    let mut ctxs: Vec<Vec<(String, MsgType)>> = vec![vec![]];
    for (i, t) in menu.iter().enumerate() {
        ctxs.push(vec![(format!("g{}", i), t.clone())]);
    }
    ctxs.push(vec![
        ("ga".to_string(), MsgType::atom("A")),
        ("gz".to_string(), MsgType::sum(MsgType::atom("A"), MsgType::atom("B"))),
    ]);
    ctxs.push(vec![
        ("gp".to_string(), MsgType::prod(MsgType::atom("A"), MsgType::atom("B"))),
        ("gu".to_string(), MsgType::Unit),
    ]);
    for ctx in &ctxs {
        for goal in &menu {
            for term in enumerate_msg(ctx, goal, depth, &mut fresh) {
                let mctx = MsgContext::of(
                    ctx.iter()
                        .map(|(v, t)| (Pattern::Var(v.clone()), t.clone()))
                        .collect(),
                );
                out.push((mctx, term, goal.clone()));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Environment-based evaluation: the independent substitution oracle.

/// Closed semantic values; axioms stay symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Atom(String),
    Pair(Box<Value>, Box<Value>),
    Unit,
    Inl(Box<Value>),
    Inr(Box<Value>),
    Ax(String, Vec<Value>),
}

pub type Env = std::collections::BTreeMap<String, Value>;

fn bind_value(env: &mut Env, pat: &Pattern, v: Value) -> Result<(), String> {
    match (pat, v) {
        (Pattern::Var(n), v) => {
            env.insert(n.clone(), v);
            Ok(())
        }
        (Pattern::Pair(a, b), Value::Pair(va, vb)) => {
            bind_value(env, a, *va)?;
            bind_value(env, b, *vb)
        }
        (Pattern::Unit, Value::Unit) => Ok(()),
        (p, v) => Err(format!("pattern {:?} does not match {:?}", p, v)),
    }
}

/// Evaluate a message term under an environment for its free variables.
pub fn eval_msg(term: &MsgTerm, env: &Env) -> Result<Value, String> {
    match term {
        MsgTerm::Var(n) => env
            .get(n)
            .cloned()
            .ok_or_else(|| format!("unbound {}", n)),
        MsgTerm::Axiom(f, args) => {
            let mut vs = Vec::new();
            for a in args {
                vs.push(eval_msg(a, env)?);
            }
            Ok(Value::Ax(f.clone(), vs))
        }
        MsgTerm::Subst { binder, body, arg } => {
            let v = eval_msg(arg, env)?;
            let mut env2 = env.clone();
            bind_value(&mut env2, binder, v)?;
            eval_msg(body, &env2)
        }
        MsgTerm::Pair(a, b) => Ok(Value::Pair(
            Box::new(eval_msg(a, env)?),
            Box::new(eval_msg(b, env)?),
        )),
        MsgTerm::UnitVal => Ok(Value::Unit),
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => {
            let v = env
                .get(scrutinee)
                .cloned()
                .ok_or_else(|| format!("unbound {}", scrutinee))?;
            match v {
                Value::Inl(v) => {
                    let mut env2 = env.clone();
                    bind_value(&mut env2, left_pat, *v)?;
                    eval_msg(left, &env2)
                }
                Value::Inr(v) => {
                    let mut env2 = env.clone();
                    bind_value(&mut env2, right_pat, *v)?;
                    eval_msg(right, &env2)
                }
                other => Err(format!("case on non-sum {:?}", other)),
            }
        }
        MsgTerm::Inj1(t) => Ok(Value::Inl(Box::new(eval_msg(t, env)?))),
        MsgTerm::Inj2(t) => Ok(Value::Inr(Box::new(eval_msg(t, env)?))),
        MsgTerm::Absurd(_) => Err("evaluated ex falso".to_string()),
    }
}

/// Every closed value of a type, up to the given size bound for atoms.
pub fn values_of(ty: &MsgType) -> Vec<Value> {
    match ty {
        MsgType::Atom(n) => vec![Value::Atom(format!("{}0", n)), Value::Atom(format!("{}1", n))],
        MsgType::Prod(a, b) => {
            let mut out = Vec::new();
            for va in values_of(a) {
                for vb in values_of(b) {
                    out.push(Value::Pair(Box::new(va.clone()), Box::new(vb)));
                }
            }
            out
        }
        MsgType::Unit => vec![Value::Unit],
        MsgType::Sum(a, b) => {
            let mut out: Vec<Value> = values_of(a).into_iter().map(|v| Value::Inl(Box::new(v))).collect();
            out.extend(values_of(b).into_iter().map(|v| Value::Inr(Box::new(v))));
            out
        }
        MsgType::Zero => vec![],
    }
}

pub fn axioms() -> AxiomSet {
    AxiomSet::new()
}
pub mod cases;
