//! Proof-net circuit rendering of checked derivations.
//!
//! Channel actions become introduction/elimination links chosen by the
//! channel's polarity; a coaction introduction (a receive on an output
//! channel) wraps its subcircuit in a scope box; a cut fuses an output wire
//! onto an input wire. Branching nodes (forks and message cases) duplicate
//! their shared context wires into the alternative branches, which are
//! rendered as branch boxes; apart from that every wire runs from one
//! source to one target or ends at a judgement boundary port.
//!
//! Rendering only: circuits are never rewritten here. Each reduction or
//! expansion a circuit picture suggests is realised by the corresponding
//! term rewrite (see `docs/circuits.md` for the correspondence table).

mod dot;

pub use dot::emit_dot;

use crate::msg::Pattern;
use crate::pmsg::{check_proc, Judgement, Proc, ProcError, ProcType, Signatures};
use crate::Name;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkKind {
    /// Send on an output: introduces `A ∘ X`.
    ActIntro,
    /// Receive on an input: eliminates `A ∘ X`.
    ActElim,
    /// Receive on an output: introduces `A • X` (opens a scope box).
    CoActIntro,
    /// Send on an input: eliminates `A • X`.
    CoActElim,
    TensorIntro,
    TensorElim,
    ParIntro,
    ParElim,
    TopIntro,
    TopElim,
    BotIntro,
    BotElim,
    IdWire,
    Prim(Name),
    MsgCase,
    MsgAbsurd,
    MsgSubst,
}

impl LinkKind {
    pub fn label(&self) -> String {
        match self {
            LinkKind::ActIntro => "actI".to_string(),
            LinkKind::ActElim => "actE".to_string(),
            LinkKind::CoActIntro => "coactI".to_string(),
            LinkKind::CoActElim => "coactE".to_string(),
            LinkKind::TensorIntro => "tensorI".to_string(),
            LinkKind::TensorElim => "tensorE".to_string(),
            LinkKind::ParIntro => "parI".to_string(),
            LinkKind::ParElim => "parE".to_string(),
            LinkKind::TopIntro => "topI".to_string(),
            LinkKind::TopElim => "topE".to_string(),
            LinkKind::BotIntro => "botI".to_string(),
            LinkKind::BotElim => "botE".to_string(),
            LinkKind::IdWire => "id".to_string(),
            LinkKind::Prim(n) => format!("prim {}", n),
            LinkKind::MsgCase => "case".to_string(),
            LinkKind::MsgAbsurd => "absurd".to_string(),
            LinkKind::MsgSubst => "subst".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    Node(usize),
    Boundary(Name),
}

#[derive(Debug, Clone)]
pub struct Node {
    pub id: usize,
    pub kind: LinkKind,
}

#[derive(Debug, Clone)]
pub struct Wire {
    pub from: Endpoint,
    pub to: Endpoint,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxKind {
    Scope,
    Branch,
}

#[derive(Debug, Clone)]
pub struct BoxRegion {
    pub kind: BoxKind,
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct CircuitGraph {
    pub nodes: Vec<Node>,
    pub wires: Vec<Wire>,
    pub boxes: Vec<BoxRegion>,
}

impl CircuitGraph {
    /// Distinct boundary ports with at least one wire. Branch boxes may
    /// duplicate a shared wire, so ports are counted, not wire instances.
    pub fn boundary_wires(&self) -> usize {
        let mut ports = std::collections::BTreeSet::new();
        for w in &self.wires {
            if let Endpoint::Boundary(b) = &w.from {
                ports.insert(b.clone());
            }
            if let Endpoint::Boundary(b) = &w.to {
                ports.insert(b.clone());
            }
        }
        ports.len()
    }

    /// Maximum nesting depth of scope boxes.
    pub fn scope_depth(&self) -> usize {
        let scopes: Vec<&BoxRegion> = self
            .boxes
            .iter()
            .filter(|b| b.kind == BoxKind::Scope)
            .collect();
        let mut best = 0;
        for s in &scopes {
            let depth = scopes
                .iter()
                .filter(|t| {
                    t.nodes != s.nodes && s.nodes.iter().all(|n| t.nodes.contains(n))
                })
                .count();
            best = best.max(depth + 1);
        }
        best
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pol {
    In,
    Out,
}

struct Builder {
    graph: CircuitGraph,
    /// Where each live channel's wire currently dangles, and its type.
    chans: BTreeMap<Name, (Endpoint, ProcType, Pol)>,
    /// Producer port of each live message variable.
    vars: BTreeMap<Name, (Endpoint, String)>,
    /// Cut formulas in traversal order, provided by the checker.
    cut_types: Vec<ProcType>,
    next_cut: usize,
}

impl Builder {
    fn node(&mut self, kind: LinkKind) -> usize {
        let id = self.graph.nodes.len();
        self.graph.nodes.push(Node { id, kind });
        id
    }

    fn wire(&mut self, from: Endpoint, to: Endpoint, label: String) {
        self.graph.wires.push(Wire { from, to, label });
    }

    /// Connect the channel's dangling wire to `node`, respecting direction.
    fn touch(&mut self, chan: &Name, node: usize) -> (ProcType, Pol) {
        let (ep, ty, pol) = self
            .chans
            .remove(chan)
            .unwrap_or_else(|| panic!("circuit: unknown channel {}", chan));
        match pol {
            Pol::In => self.wire(ep, Endpoint::Node(node), ty.to_string()),
            Pol::Out => self.wire(Endpoint::Node(node), ep, ty.to_string()),
        }
        (ty, pol)
    }

    fn bind_pattern(&mut self, pat: &Pattern, producer: usize, label: &str) {
        for v in pat.vars() {
            self.vars
                .insert(v, (Endpoint::Node(producer), label.to_string()));
        }
    }

    fn use_vars(&mut self, vars: impl IntoIterator<Item = Name>, consumer: usize) {
        for v in vars {
            if let Some((ep, label)) = self.vars.get(&v).cloned() {
                self.wire(ep, Endpoint::Node(consumer), label);
            }
        }
    }

    fn build(&mut self, p: &Proc) {
        let first_node = self.graph.nodes.len();
        match p {
            Proc::Id { input, output, .. } => {
                let n = self.node(LinkKind::IdWire);
                self.touch(input, n);
                self.touch(output, n);
            }
            Proc::Prim {
                name,
                msg_args,
                inputs,
                outputs,
            } => {
                let n = self.node(LinkKind::Prim(name.clone()));
                self.use_vars(msg_args.iter().cloned(), n);
                for c in inputs.iter().chain(outputs) {
                    self.touch(c, n);
                }
            }
            Proc::Cut {
                left,
                out_chan,
                in_chan,
                right,
            } => {
                let ty = self.cut_types[self.next_cut].clone();
                self.next_cut += 1;
                // The cut fuses the two ends of one wire: model it as a
                // shared dangling endpoint that the left side produces and
                // the right side consumes.
                let join = self.node(LinkKind::IdWire);
                self.chans.insert(
                    out_chan.clone(),
                    (Endpoint::Node(join), ty.clone(), Pol::Out),
                );
                self.build(left);
                self.chans
                    .insert(in_chan.clone(), (Endpoint::Node(join), ty, Pol::In));
                self.build(right);
            }
            Proc::Split { chan, c1, c2, body } => {
                let placeholder = self.node(LinkKind::TensorElim);
                let (ty, pol) = self.touch(chan, placeholder);
                let (t1, t2, kind) = match (&ty, pol) {
                    (ProcType::Tensor(a, b), Pol::In) => {
                        ((**a).clone(), (**b).clone(), LinkKind::TensorElim)
                    }
                    (ProcType::Par(a, b), Pol::Out) => {
                        ((**a).clone(), (**b).clone(), LinkKind::ParIntro)
                    }
                    _ => panic!("circuit: malformed split"),
                };
                self.graph.nodes[placeholder].kind = kind;
                self.chans
                    .insert(c1.clone(), (Endpoint::Node(placeholder), t1, pol));
                self.chans
                    .insert(c2.clone(), (Endpoint::Node(placeholder), t2, pol));
                self.build(body);
            }
            Proc::Fork {
                chan,
                c1,
                left,
                c2,
                right,
            } => {
                let placeholder = self.node(LinkKind::TensorIntro);
                let (ty, pol) = self.touch(chan, placeholder);
                let (t1, t2, kind) = match (&ty, pol) {
                    (ProcType::Tensor(a, b), Pol::Out) => {
                        ((**a).clone(), (**b).clone(), LinkKind::TensorIntro)
                    }
                    (ProcType::Par(a, b), Pol::In) => {
                        ((**a).clone(), (**b).clone(), LinkKind::ParElim)
                    }
                    _ => panic!("circuit: malformed fork"),
                };
                self.graph.nodes[placeholder].kind = kind;
                let saved_chans = self.chans.clone();
                let saved_vars = self.vars.clone();

                self.chans
                    .insert(c1.clone(), (Endpoint::Node(placeholder), t1, pol));
                let lstart = self.graph.nodes.len();
                self.build(left);
                let lnodes: Vec<usize> = (lstart..self.graph.nodes.len()).collect();
                self.graph.boxes.push(BoxRegion {
                    kind: BoxKind::Branch,
                    nodes: lnodes,
                });

                let left_chans = std::mem::replace(&mut self.chans, saved_chans);
                let left_vars = std::mem::replace(&mut self.vars, saved_vars);
                self.chans
                    .insert(c2.clone(), (Endpoint::Node(placeholder), t2, pol));
                let rstart = self.graph.nodes.len();
                self.build(right);
                let rnodes: Vec<usize> = (rstart..self.graph.nodes.len()).collect();
                self.graph.boxes.push(BoxRegion {
                    kind: BoxKind::Branch,
                    nodes: rnodes,
                });
                // Whatever neither branch consumed stays live for the
                // surrounding term.
                self.chans.retain(|k, _| left_chans.contains_key(k));
                self.vars.retain(|k, _| left_vars.contains_key(k));
            }
            Proc::Close { chan, body } => {
                let placeholder = self.node(LinkKind::TopElim);
                let (_, pol) = self.touch(chan, placeholder);
                self.graph.nodes[placeholder].kind = match pol {
                    Pol::In => LinkKind::TopElim,
                    Pol::Out => LinkKind::BotIntro,
                };
                self.build(body);
            }
            Proc::End { chan } => {
                let placeholder = self.node(LinkKind::TopIntro);
                let (_, pol) = self.touch(chan, placeholder);
                self.graph.nodes[placeholder].kind = match pol {
                    Pol::In => LinkKind::BotElim,
                    Pol::Out => LinkKind::TopIntro,
                };
            }
            Proc::Get {
                chan,
                pattern,
                body,
            } => {
                let placeholder = self.node(LinkKind::ActElim);
                let (ty, pol) = self.touch(chan, placeholder);
                match (ty, pol) {
                    (ProcType::Act(a, x), Pol::In) => {
                        self.graph.nodes[placeholder].kind = LinkKind::ActElim;
                        self.bind_pattern(pattern, placeholder, &a.to_string());
                        self.chans
                            .insert(chan.clone(), (Endpoint::Node(placeholder), *x, pol));
                        self.build(body);
                    }
                    (ProcType::CoAct(a, x), Pol::Out) => {
                        // Coaction introduction: the continuation sits in a
                        // scope box hung off the link.
                        self.graph.nodes[placeholder].kind = LinkKind::CoActIntro;
                        self.bind_pattern(pattern, placeholder, &a.to_string());
                        self.chans
                            .insert(chan.clone(), (Endpoint::Node(placeholder), *x, pol));
                        let start = self.graph.nodes.len();
                        self.build(body);
                        let nodes: Vec<usize> = (start..self.graph.nodes.len()).collect();
                        self.graph.boxes.push(BoxRegion {
                            kind: BoxKind::Scope,
                            nodes,
                        });
                    }
                    _ => panic!("circuit: malformed get"),
                }
            }
            Proc::Put {
                chan,
                payload,
                body,
            } => {
                let placeholder = self.node(LinkKind::ActIntro);
                let (ty, pol) = self.touch(chan, placeholder);
                let (a, x, kind) = match (ty, pol) {
                    (ProcType::Act(a, x), Pol::Out) => (a, x, LinkKind::ActIntro),
                    (ProcType::CoAct(a, x), Pol::In) => (a, x, LinkKind::CoActElim),
                    _ => panic!("circuit: malformed put"),
                };
                self.graph.nodes[placeholder].kind = kind;
                let _ = a;
                self.use_vars(payload.free_vars(), placeholder);
                self.chans
                    .insert(chan.clone(), (Endpoint::Node(placeholder), *x, pol));
                self.build(body);
            }
            Proc::MCase {
                scrutinee,
                left_pat,
                left,
                right_pat,
                right,
            } => {
                let n = self.node(LinkKind::MsgCase);
                self.use_vars([scrutinee.clone()], n);
                let saved_chans = self.chans.clone();
                let saved_vars = self.vars.clone();

                self.bind_pattern(left_pat, n, "case");
                let lstart = self.graph.nodes.len();
                self.build(left);
                self.graph.boxes.push(BoxRegion {
                    kind: BoxKind::Branch,
                    nodes: (lstart..self.graph.nodes.len()).collect(),
                });

                let left_chans = std::mem::replace(&mut self.chans, saved_chans);
                let left_vars = std::mem::replace(&mut self.vars, saved_vars);
                self.bind_pattern(right_pat, n, "case");
                let rstart = self.graph.nodes.len();
                self.build(right);
                self.graph.boxes.push(BoxRegion {
                    kind: BoxKind::Branch,
                    nodes: (rstart..self.graph.nodes.len()).collect(),
                });
                self.chans.retain(|k, _| left_chans.contains_key(k));
                self.vars.retain(|k, _| left_vars.contains_key(k));
            }
            Proc::MAbsurd { scrutinee } => {
                let n = self.node(LinkKind::MsgAbsurd);
                self.use_vars([scrutinee.clone()], n);
                // Absorbs whatever remains.
                let dangling: Vec<Name> = self.chans.keys().cloned().collect();
                for c in dangling {
                    self.touch(&c, n);
                }
                self.vars.clear();
            }
            Proc::MSubst { binder, body, arg } => {
                let n = self.node(LinkKind::MsgSubst);
                self.use_vars(arg.free_vars(), n);
                self.bind_pattern(binder, n, "subst");
                self.build(body);
            }
        }
        let _ = first_node;
    }
}

/// Translate a checked process into a circuit.
pub fn to_circuit(
    sigs: &Signatures,
    claim: &Judgement,
    p: &Proc,
) -> Result<CircuitGraph, ProcError> {
    let checked = check_proc(sigs, claim, p)?;
    let cut_types = crate::pmsg::cut_formulas(sigs, claim, p)?;
    let mut b = Builder {
        graph: CircuitGraph::default(),
        chans: BTreeMap::new(),
        vars: BTreeMap::new(),
        cut_types,
        next_cut: 0,
    };
    for (pat, ty) in &checked.msg_ctx.entries {
        for v in pat.vars() {
            b.vars.insert(
                v.clone(),
                (Endpoint::Boundary(format!("ctx_{}", pat)), ty.to_string()),
            );
        }
    }
    for (c, ty) in &checked.inputs {
        b.chans.insert(
            c.clone(),
            (
                Endpoint::Boundary(format!("in_{}", c)),
                ty.clone(),
                Pol::In,
            ),
        );
    }
    for (c, ty) in &checked.outputs {
        b.chans.insert(
            c.clone(),
            (
                Endpoint::Boundary(format!("out_{}", c)),
                ty.clone(),
                Pol::Out,
            ),
        );
    }
    b.build(p);
    Ok(b.graph)
}
