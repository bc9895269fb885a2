//! The operational rule schemas, instantiated with primitive processes as
//! metavariables; shared by the dedicated per-rule tests and the coverage
//! measurement in the acceptance suite.

#![allow(dead_code)]

use mpl_core::msg::{AxiomSig, MsgTerm, MsgType, Pattern};
use mpl_core::pmsg::{Judgement, PrimSig, Proc, ProcType, Signatures};

fn x() -> ProcType {
    ProcType::atom("X")
}
fn y() -> ProcType {
    ProcType::atom("Y")
}
fn a() -> MsgType {
    MsgType::atom("A")
}

pub fn prim(name: &str, msg: &[&str], ins: &[&str], outs: &[&str]) -> Proc {
    Proc::Prim {
        name: name.to_string(),
        msg_args: msg.iter().map(|s| s.to_string()).collect(),
        inputs: ins.iter().map(|s| s.to_string()).collect(),
        outputs: outs.iter().map(|s| s.to_string()).collect(),
    }
}

fn psig(name: &str, msg: &[MsgType], ins: &[ProcType], outs: &[ProcType]) -> PrimSig {
    PrimSig {
        name: name.to_string(),
        msg_inputs: msg.to_vec(),
        proc_inputs: ins.to_vec(),
        proc_outputs: outs.to_vec(),
    }
}

fn nullary_axiom(name: &str, out: MsgType) -> AxiomSig {
    AxiomSig {
        name: name.to_string(),
        inputs: vec![],
        output: out,
    }
}

fn one_axiom_sigs(prims: Vec<PrimSig>) -> Signatures {
    Signatures {
        axioms: mpl_core::msg::AxiomSet::of(vec![nullary_axiom("f", a())]),
        prims: mpl_core::pmsg::PrimSet::of(prims),
    }
}

fn f_ax() -> MsgTerm {
    MsgTerm::Axiom("f".to_string(), vec![])
}

/// A redex instance of one rule, with its expected single-step reduct.
pub struct SchemaCase {
    pub sigs: Signatures,
    pub claim: Judgement,
    pub redex: Proc,
    pub rule: &'static str,
    pub reduct: Proc,
}

impl SchemaCase {
    fn new(
        sigs: Signatures,
        claim: Judgement,
        redex: Proc,
        rule: &'static str,
        reduct: Proc,
    ) -> SchemaCase {
        SchemaCase {
            sigs,
            claim,
            redex,
            rule,
            reduct,
        }
    }
}

pub fn case_cut_id_sequent() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("t", &[], &[x()], &[])]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("g", x());
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(Proc::id("g", x(), "al"), "al", "b", prim("t", &[], &["b"], &[])),
        "id-sequent",
        prim("t", &[], &["g"], &[]),
    )
}

pub fn case_cut_sequent_id() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("s", &[], &[], &[x()])]),
        ..Default::default()
    };
    let claim = Judgement::new().with_output("c", x());
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(prim("s", &[], &[], &["al"]), "al", "b", Proc::id("b", x(), "c")),
        "sequent-id",
        prim("s", &[], &[], &["c"]),
    )
}

pub fn case_cut_tensor_l_par_r_seq() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[x(), y()], &[x()]),
            psig("t", &[], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::tensor(x(), y()));
    let s_body = prim("s", &[], &["d1", "d2"], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(Proc::split("d", "d1", "d2", s_body.clone()), "al", "b", t.clone()),
        "tensor_l/par_r-seq",
        Proc::split("d", "d1", "d2", Proc::cut(s_body, "al", "b", t)),
    )
}

pub fn case_cut_seq_tensor_l_par_r() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[x()]),
            psig("t", &[], &[x(), x(), y()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::tensor(x(), y()));
    let s = prim("s", &[], &[], &["al"]);
    let t_body = prim("t", &[], &["b", "d1", "d2"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(s.clone(), "al", "b", Proc::split("d", "d1", "d2", t_body.clone())),
        "seq-tensor_l/par_r",
        Proc::split("d", "d1", "d2", Proc::cut(s, "al", "b", t_body)),
    )
}

pub fn case_cut_par_l_tensor_r_seq() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s1", &[], &[x()], &[y()]),
            psig("s2", &[], &[x()], &[]),
            psig("t", &[], &[y()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::par(x(), x()));
    let s1 = prim("s1", &[], &["d1"], &["al"]);
    let s2 = prim("s2", &[], &["d2"], &[]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::fork("d", "d1", s1.clone(), "d2", s2.clone()),
            "al",
            "b",
            t.clone(),
        ),
        "par_l/tensor_r-seq",
        Proc::fork("d", "d1", Proc::cut(s1, "al", "b", t), "d2", s2),
    )
}

pub fn case_cut_seq_par_l_tensor_r() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[y()]),
            psig("t1", &[], &[y(), x()], &[]),
            psig("t2", &[], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::par(x(), x()));
    let s = prim("s", &[], &[], &["al"]);
    let t1 = prim("t1", &[], &["b", "d1"], &[]);
    let t2 = prim("t2", &[], &["d2"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            s.clone(),
            "al",
            "b",
            Proc::fork("d", "d1", t1.clone(), "d2", t2.clone()),
        ),
        "seq-par_l/tensor_r",
        Proc::fork("d", "d1", Proc::cut(s, "al", "b", t1), "d2", t2),
    )
}

pub fn case_cut_top_l_bot_r_seq() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[x()]),
            psig("t", &[], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::Top);
    let s = prim("s", &[], &[], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(Proc::close("d", s.clone()), "al", "b", t.clone()),
        "top_l/bot_r-seq",
        Proc::close("d", Proc::cut(s, "al", "b", t)),
    )
}

pub fn case_cut_seq_top_l_bot_r() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[x()]),
            psig("t", &[], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::Top);
    let s = prim("s", &[], &[], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(s.clone(), "al", "b", Proc::close("d", t.clone())),
        "seq-top_l/bot_r",
        Proc::close("d", Proc::cut(s, "al", "b", t)),
    )
}

pub fn case_cut_act_l_coact_r_sequent() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[a()], &[x()], &[y()]),
            psig("t", &[], &[y()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::act(a(), x()));
    let s_body = prim("s", &["v"], &["d"], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::get("d", Pattern::var("v"), s_body.clone()),
            "al",
            "b",
            t.clone(),
        ),
        "act_l/coact_r-sequent",
        Proc::get("d", Pattern::var("v"), Proc::cut(s_body, "al", "b", t)),
    )
}

pub fn case_cut_sequent_act_l_coact_r() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[y()]),
            psig("t", &[a()], &[y(), x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_input("d", ProcType::act(a(), x()));
    let s = prim("s", &[], &[], &["al"]);
    let t_body = prim("t", &["v"], &["b", "d"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            s.clone(),
            "al",
            "b",
            Proc::get("d", Pattern::var("v"), t_body.clone()),
        ),
        "sequent-act_l/coact_r",
        Proc::get("d", Pattern::var("v"), Proc::cut(s, "al", "b", t_body)),
    )
}

pub fn case_cut_coact_l_act_r_sequent() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[x()], &[y()]),
            psig("t", &[], &[y()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new()
        .with_msg(Pattern::var("w"), a())
        .with_input("d", ProcType::coact(a(), x()));
    let s_body = prim("s", &[], &["d"], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::put("d", MsgTerm::var("w"), s_body.clone()),
            "al",
            "b",
            t.clone(),
        ),
        "coact_l/act_r-sequent",
        Proc::put("d", MsgTerm::var("w"), Proc::cut(s_body, "al", "b", t)),
    )
}

pub fn case_cut_sequent_coact_l_act_r() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[y()]),
            psig("t", &[], &[y(), x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new()
        .with_msg(Pattern::var("w"), a())
        .with_input("d", ProcType::coact(a(), x()));
    let s = prim("s", &[], &[], &["al"]);
    let t_body = prim("t", &[], &["b", "d"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            s.clone(),
            "al",
            "b",
            Proc::put("d", MsgTerm::var("w"), t_body.clone()),
        ),
        "sequent-coact_l/act_r",
        Proc::put("d", MsgTerm::var("w"), Proc::cut(s, "al", "b", t_body)),
    )
}

pub fn case_cut_coprod_seq() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s1", &[], &[], &[x()]),
            psig("s2", &[], &[], &[x()]),
            psig("t", &[], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(
        Pattern::var("z"),
        MsgType::sum(MsgType::Unit, MsgType::Unit),
    );
    let s1 = prim("s1", &[], &[], &["al"]);
    let s2 = prim("s2", &[], &[], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::mcase("z", Pattern::Unit, s1.clone(), Pattern::Unit, s2.clone()),
            "al",
            "b",
            t.clone(),
        ),
        "coprod-seq",
        Proc::mcase(
            "z",
            Pattern::Unit,
            Proc::cut(s1, "al", "b", t.clone()),
            Pattern::Unit,
            Proc::cut(s2, "al", "b", t),
        ),
    )
}

pub fn case_cut_seq_coprod() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[x()]),
            psig("t1", &[], &[x()], &[]),
            psig("t2", &[], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(
        Pattern::var("z"),
        MsgType::sum(MsgType::Unit, MsgType::Unit),
    );
    let s = prim("s", &[], &[], &["al"]);
    let t1 = prim("t1", &[], &["b"], &[]);
    let t2 = prim("t2", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            s.clone(),
            "al",
            "b",
            Proc::mcase("z", Pattern::Unit, t1.clone(), Pattern::Unit, t2.clone()),
        ),
        "seq-coprod",
        Proc::mcase(
            "z",
            Pattern::Unit,
            Proc::cut(s.clone(), "al", "b", t1),
            Pattern::Unit,
            Proc::cut(s, "al", "b", t2),
        ),
    )
}

pub fn case_cut_zero_sequent() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("t", &[], &[x()], &[])]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(Pattern::var("z"), MsgType::Zero);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(Proc::mabsurd("z"), "al", "b", prim("t", &[], &["b"], &[])),
        "zero-sequent",
        Proc::mabsurd("z"),
    )
}

pub fn case_cut_sequent_zero() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("s", &[], &[], &[x()])]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(Pattern::var("z"), MsgType::Zero);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(prim("s", &[], &[], &["al"]), "al", "b", Proc::mabsurd("z")),
        "sequent-zero",
        Proc::mabsurd("z"),
    )
}

pub fn case_cut_tensor_r_tensor_l() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s1", &[], &[], &[x()]),
            psig("s2", &[], &[], &[y()]),
            psig("t", &[], &[x(), y()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new();
    let s1 = prim("s1", &[], &[], &["a1"]);
    let s2 = prim("s2", &[], &[], &["a2"]);
    let t = prim("t", &[], &["b1", "b2"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::fork("al", "a1", s1.clone(), "a2", s2.clone()),
            "al",
            "b",
            Proc::split("b", "b1", "b2", t.clone()),
        ),
        "tensor_r-tensor_l",
        Proc::cut(s1, "a1", "b1", Proc::cut(s2, "a2", "b2", t)),
    )
}

pub fn case_cut_par_r_par_l() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[x(), y()]),
            psig("t1", &[], &[x()], &[]),
            psig("t2", &[], &[y()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new();
    let s = prim("s", &[], &[], &["a1", "a2"]);
    let t1 = prim("t1", &[], &["b1"], &[]);
    let t2 = prim("t2", &[], &["b2"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::split("al", "a1", "a2", s.clone()),
            "al",
            "b",
            Proc::fork("b", "b1", t1.clone(), "b2", t2.clone()),
        ),
        "par_r-par_l",
        Proc::cut(Proc::cut(s, "a1", "b1", t1), "a2", "b2", t2),
    )
}

pub fn case_cut_top_r_top_l() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("t", &[], &[], &[])]),
        ..Default::default()
    };
    let claim = Judgement::new();
    let t = prim("t", &[], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(Proc::end("al"), "al", "b", Proc::close("b", t.clone())),
        "top_r-top_l",
        t,
    )
}

pub fn case_cut_bot_r_bot_l() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("s", &[], &[], &[])]),
        ..Default::default()
    };
    let claim = Judgement::new();
    let s = prim("s", &[], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(Proc::close("al", s.clone()), "al", "b", Proc::end("b")),
        "bot_r-bot_l",
        s,
    )
}

pub fn case_cut_act_r_act_l() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[x()]),
            psig("t", &[a()], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(Pattern::var("w"), a());
    let s = prim("s", &[], &[], &["al"]);
    let t_body = prim("t", &["v"], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::put("al", MsgTerm::var("w"), s.clone()),
            "al",
            "b",
            Proc::get("b", Pattern::var("v"), t_body),
        ),
        "act_r-act_l",
        // Substituting a variable for a variable collapses to renaming.
        Proc::cut(s, "al", "b", prim("t", &["w"], &["b"], &[])),
    )
}

pub fn case_cut_coact_r_coact_l() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[a()], &[], &[x()]),
            psig("t", &[], &[x()], &[]),
        ]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(Pattern::var("w"), a());
    let s_body = prim("s", &["v"], &[], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::get("al", Pattern::var("v"), s_body),
            "al",
            "b",
            Proc::put("b", MsgTerm::var("w"), t.clone()),
        ),
        "coact_r-coact_l",
        Proc::cut(prim("s", &["w"], &[], &["al"]), "al", "b", t),
    )
}

pub fn case_cut_subs_cut() -> SchemaCase {
    let sigs = Signatures {
        axioms: mpl_core::msg::AxiomSet::of(vec![nullary_axiom("f", a())]),
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[a()], &[], &[x()]),
            psig("t", &[], &[x()], &[]),
        ]),
    };
    let claim = Judgement::new();
    let f = MsgTerm::Axiom("f".to_string(), vec![]);
    let s_body = prim("s", &["v"], &[], &["al"]);
    let t = prim("t", &[], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            Proc::msubst(Pattern::var("v"), s_body.clone(), f.clone()),
            "al",
            "b",
            t.clone(),
        ),
        "subs-cut",
        Proc::msubst(Pattern::var("v"), Proc::cut(s_body, "al", "b", t), f),
    )
}

pub fn case_cut_cut_subs() -> SchemaCase {
    let sigs = Signatures {
        axioms: mpl_core::msg::AxiomSet::of(vec![nullary_axiom("f", a())]),
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s", &[], &[], &[x()]),
            psig("t", &[a()], &[x()], &[]),
        ]),
    };
    let claim = Judgement::new();
    let f = MsgTerm::Axiom("f".to_string(), vec![]);
    let s = prim("s", &[], &[], &["al"]);
    let t_body = prim("t", &["v"], &["b"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::cut(
            s.clone(),
            "al",
            "b",
            Proc::msubst(Pattern::var("v"), t_body.clone(), f.clone()),
        ),
        "cut-subs",
        Proc::msubst(Pattern::var("v"), Proc::cut(s, "al", "b", t_body), f),
    )
}

pub fn case_subs_tensor_l_par_r() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![psig("s", &[a()], &[x(), y()], &[])]);
    let claim = Judgement::new().with_input("d", ProcType::tensor(x(), y()));
    let body = prim("s", &["v"], &["d1", "d2"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            Proc::split("d", "d1", "d2", body.clone()),
            f_ax(),
        ),
        "subs-tensor_l/par_r",
        Proc::split(
            "d",
            "d1",
            "d2",
            Proc::msubst(Pattern::var("v"), body, f_ax()),
        ),
    )
}

pub fn case_subs_par_l_tensor_r() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![
        psig("s1", &[a()], &[x()], &[]),
        psig("s2", &[], &[y()], &[]),
    ]);
    let claim = Judgement::new().with_input("d", ProcType::par(x(), y()));
    let s1 = prim("s1", &["v"], &["d1"], &[]);
    let s2 = prim("s2", &[], &["d2"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            Proc::fork("d", "d1", s1.clone(), "d2", s2.clone()),
            f_ax(),
        ),
        "subs-par_l/tensor_r",
        Proc::fork(
            "d",
            "d1",
            Proc::msubst(Pattern::var("v"), s1, f_ax()),
            "d2",
            s2,
        ),
    )
}

pub fn case_subs_top_l_bot_r() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![psig("s", &[a()], &[], &[])]);
    let claim = Judgement::new().with_input("d", ProcType::Top);
    let body = prim("s", &["v"], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(Pattern::var("v"), Proc::close("d", body.clone()), f_ax()),
        "subs-top_l/bot_r",
        Proc::close("d", Proc::msubst(Pattern::var("v"), body, f_ax())),
    )
}

pub fn case_subs_act_l_coact_r() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![psig("s", &[a(), a()], &[x()], &[])]);
    let claim = Judgement::new().with_input("d", ProcType::act(a(), x()));
    let body = prim("s", &["v", "u"], &["d"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            Proc::get("d", Pattern::var("u"), body.clone()),
            f_ax(),
        ),
        "subs-act_l/coact_r",
        Proc::get(
            "d",
            Pattern::var("u"),
            Proc::msubst(Pattern::var("v"), body, f_ax()),
        ),
    )
}

pub fn case_subs_coact_l_act_r_continuation() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![psig("s", &[a()], &[x()], &[])]);
    let claim = Judgement::new()
        .with_msg(Pattern::var("w"), a())
        .with_input("d", ProcType::coact(a(), x()));
    let body = prim("s", &["v"], &["d"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            Proc::put("d", MsgTerm::var("w"), body.clone()),
            f_ax(),
        ),
        "subs-coact_l/act_r",
        Proc::put(
            "d",
            MsgTerm::var("w"),
            Proc::msubst(Pattern::var("v"), body, f_ax()),
        ),
    )
}

pub fn case_subs_coact_l_act_r_payload() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![psig("s", &[], &[x()], &[])]);
    let claim = Judgement::new().with_input("d", ProcType::coact(a(), x()));
    let body = prim("s", &[], &["d"], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            Proc::put("d", MsgTerm::var("v"), body.clone()),
            f_ax(),
        ),
        "subs-coact_l/act_r",
        Proc::put(
            "d",
            MsgTerm::subst(Pattern::var("v"), MsgTerm::var("v"), f_ax()),
            body,
        ),
    )
}

pub fn case_subs_coprod() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![
        psig("s1", &[a()], &[], &[]),
        psig("s2", &[a()], &[], &[]),
    ]);
    let claim = Judgement::new().with_msg(
        Pattern::var("z"),
        MsgType::sum(MsgType::Unit, MsgType::Unit),
    );
    let s1 = prim("s1", &["v"], &[], &[]);
    let s2 = prim("s2", &["v"], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            Proc::mcase("z", Pattern::Unit, s1.clone(), Pattern::Unit, s2.clone()),
            f_ax(),
        ),
        "subs-coprod",
        Proc::mcase(
            "z",
            Pattern::Unit,
            Proc::msubst(Pattern::var("v"), s1, f_ax()),
            Pattern::Unit,
            Proc::msubst(Pattern::var("v"), s2, f_ax()),
        ),
    )
}

pub fn case_subs_zero() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![]);
    let claim = Judgement::new().with_msg(Pattern::var("z"), MsgType::Zero);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(Pattern::var("v"), Proc::mabsurd("z"), f_ax()),
        "subs-zero",
        Proc::mabsurd("z"),
    )
}

pub fn case_subs_prod_r_prod() -> SchemaCase {
    let sigs = Signatures {
        axioms: mpl_core::msg::AxiomSet::of(vec![
            nullary_axiom("f", a()),
            nullary_axiom("g", MsgType::atom("B")),
        ]),
        prims: mpl_core::pmsg::PrimSet::of(vec![psig(
            "s",
            &[a(), MsgType::atom("B")],
            &[],
            &[],
        )]),
    };
    let claim = Judgement::new();
    let g = MsgTerm::Axiom("g".to_string(), vec![]);
    let body = prim("s", &["v", "u"], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::pair(Pattern::var("v"), Pattern::var("u")),
            body.clone(),
            MsgTerm::pair(f_ax(), g.clone()),
        ),
        "prod_r-prod",
        Proc::msubst(
            Pattern::var("v"),
            Proc::msubst(Pattern::var("u"), body, g),
            f_ax(),
        ),
    )
}

pub fn case_subs_unit_r_unit() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![psig("s", &[], &[], &[])]);
    let claim = Judgement::new();
    let body = prim("s", &[], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(Pattern::Unit, body.clone(), MsgTerm::UnitVal),
        "unit_r-unit",
        body,
    )
}

pub fn case_subs_inj_l_coprod() -> SchemaCase {
    let sigs = one_axiom_sigs(vec![
        psig("s1", &[a()], &[], &[]),
        psig("s2", &[MsgType::atom("B")], &[], &[]),
    ]);
    let claim = Judgement::new();
    let s1 = prim("s1", &["u1"], &[], &[]);
    let s2 = prim("s2", &["u2"], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("z"),
            Proc::mcase("z", Pattern::var("u1"), s1, Pattern::var("u2"), s2),
            MsgTerm::inj1(f_ax()),
        ),
        "inj_l-coprod",
        Proc::msubst(
            Pattern::var("u1"),
            prim("s1", &["u1"], &[], &[]),
            f_ax(),
        ),
    )
}

pub fn case_subs_inj_r_coprod() -> SchemaCase {
    let sigs = Signatures {
        axioms: mpl_core::msg::AxiomSet::of(vec![nullary_axiom("g", MsgType::atom("B"))]),
        prims: mpl_core::pmsg::PrimSet::of(vec![
            psig("s1", &[a()], &[], &[]),
            psig("s2", &[MsgType::atom("B")], &[], &[]),
        ]),
    };
    let claim = Judgement::new();
    let g = MsgTerm::Axiom("g".to_string(), vec![]);
    let s1 = prim("s1", &["u1"], &[], &[]);
    let s2 = prim("s2", &["u2"], &[], &[]);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("z"),
            Proc::mcase("z", Pattern::var("u1"), s1, Pattern::var("u2"), s2),
            MsgTerm::inj2(g.clone()),
        ),
        "inj_r-coprod",
        Proc::msubst(
            Pattern::var("u2"),
            prim("s2", &["u2"], &[], &[]),
            g,
        ),
    )
}

pub fn case_subs_var_renames() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("s", &[a()], &[], &[])]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(Pattern::var("y"), a());
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            prim("s", &["v"], &[], &[]),
            MsgTerm::var("y"),
        ),
        "subs-var",
        prim("s", &["y"], &[], &[]),
    )
}

pub fn case_subs_absurd_argument() -> SchemaCase {
    let sigs = Signatures {
        prims: mpl_core::pmsg::PrimSet::of(vec![psig("s", &[a()], &[], &[])]),
        ..Default::default()
    };
    let claim = Judgement::new().with_msg(Pattern::var("z"), MsgType::Zero);
    SchemaCase::new(
        sigs,
        claim,
        Proc::msubst(
            Pattern::var("v"),
            prim("s", &["v"], &[], &[]),
            MsgTerm::absurd("z"),
        ),
        "zero-subs",
        Proc::mabsurd("z"),
    )
}

pub fn all_cases() -> Vec<SchemaCase> {
    vec![
        case_cut_id_sequent(),
        case_cut_sequent_id(),
        case_cut_tensor_l_par_r_seq(),
        case_cut_seq_tensor_l_par_r(),
        case_cut_par_l_tensor_r_seq(),
        case_cut_seq_par_l_tensor_r(),
        case_cut_top_l_bot_r_seq(),
        case_cut_seq_top_l_bot_r(),
        case_cut_act_l_coact_r_sequent(),
        case_cut_sequent_act_l_coact_r(),
        case_cut_coact_l_act_r_sequent(),
        case_cut_sequent_coact_l_act_r(),
        case_cut_coprod_seq(),
        case_cut_seq_coprod(),
        case_cut_zero_sequent(),
        case_cut_sequent_zero(),
        case_cut_tensor_r_tensor_l(),
        case_cut_par_r_par_l(),
        case_cut_top_r_top_l(),
        case_cut_bot_r_bot_l(),
        case_cut_act_r_act_l(),
        case_cut_coact_r_coact_l(),
        case_cut_subs_cut(),
        case_cut_cut_subs(),
        case_subs_tensor_l_par_r(),
        case_subs_par_l_tensor_r(),
        case_subs_top_l_bot_r(),
        case_subs_act_l_coact_r(),
        case_subs_coact_l_act_r_continuation(),
        case_subs_coact_l_act_r_payload(),
        case_subs_coprod(),
        case_subs_zero(),
        case_subs_prod_r_prod(),
        case_subs_unit_r_unit(),
        case_subs_inj_l_coprod(),
        case_subs_inj_r_coprod(),
        case_subs_var_renames(),
        case_subs_absurd_argument(),
    ]
}
