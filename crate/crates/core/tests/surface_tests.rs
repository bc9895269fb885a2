//! Parser, elaborator, and printer tests.

mod common;

use mpl_core::msg::{MsgType, Pattern};
use mpl_core::pmsg::{check_proc, proc_eq, Equivalence, Proc, ProcType};
use mpl_core::surface::{
    elaborate, parse, parse_stmt, pretty_proc, sexp_msg, sexp_proc, ElabError, SourceModule,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn elaborate_src(src: &str) -> mpl_core::surface::Module {
    elaborate(&parse(src).unwrap()).unwrap()
}

#[test]
fn type_precedence() {
    // A * B + C parses as (A * B) + C.
    let m = elaborate_src("proc p (x : A * B + C) [a : Bot ;] = end a where y = x where z = y");
    let got = &m.defs[0].judgement.msg_ctx.entries[0].1;
    assert_eq!(
        got,
        &MsgType::sum(
            MsgType::prod(MsgType::atom("A"), MsgType::atom("B")),
            MsgType::atom("C")
        )
    );
}

#[test]
fn proc_type_precedence_real() {
    let src = "proc p () [a : A @ X (x) Y ; b : Top (+) Bot] = absurd q";
    let m = parse(src).unwrap();
    let m = elaborate(&m).unwrap();
    let j = &m.defs[0].judgement;
    assert_eq!(
        j.inputs["a"],
        ProcType::tensor(
            ProcType::act(MsgType::atom("A"), ProcType::atom("X")),
            ProcType::atom("Y")
        )
    );
    assert_eq!(
        j.outputs["b"],
        ProcType::par(ProcType::Top, ProcType::Bot)
    );
}

#[test]
fn fork_statement_parses() {
    let s = parse_stmt("fork a as | a1 -> end a1 | a2 -> end a2").unwrap();
    match s {
        mpl_core::surface::StmtAst::Fork { chan, c1, c2, .. } => {
            assert_eq!(chan, "a");
            assert_eq!(c1, "a1");
            assert_eq!(c2, "a2");
        }
        other => panic!("expected fork, got {:?}", other),
    }
}

#[test]
fn unbalanced_fork_is_syntax_error() {
    assert!(parse_stmt("fork a as | a1 -> end a1").is_err());
}

#[test]
fn located_errors() {
    let err = parse("proc p () [a : Top ;] =\n  get a\n").unwrap_err();
    assert!(err.pos.line >= 2, "error should carry a location: {}", err);
}

#[test]
fn datatype_encoding() {
    // data SResponse = Accept | Deny encodes as I + I; Accept as inl ().
    let src = "
data SResponse = Accept | Deny
proc p () [a : SResponse # Bot ;] = put a Accept; end a
";
    let m = parse(src).unwrap();
    let m = elaborate(&m).unwrap();
    let def = &m.defs[0];
    assert_eq!(
        def.judgement.inputs["a"],
        mpl_core::pmsg::ProcType::coact(
            MsgType::sum(MsgType::Unit, MsgType::Unit),
            mpl_core::pmsg::ProcType::Bot
        )
    );
    fn find_put(p: &Proc) -> Option<&mpl_core::msg::MsgTerm> {
        match p {
            Proc::Put { payload, .. } => Some(payload),
            Proc::Close { body, .. } | Proc::MSubst { body, .. } | Proc::Get { body, .. } => {
                find_put(body)
            }
            _ => None,
        }
    }
    assert_eq!(
        find_put(&def.proc),
        Some(&mpl_core::msg::MsgTerm::inj1(mpl_core::msg::MsgTerm::UnitVal))
    );
}

#[test]
fn three_constructor_case_lowers_to_nested_cases() {
    let src = "
data Three = One | Two A | Six
axiom sink : A -> I
proc p (t : Three) [a : Bot ;] =
  case t of
    | One   -> end a
    | Two v -> (end a) where () = sink(v)
    | Six   -> end a
";
    let m = elaborate(&parse(src).unwrap()).unwrap();
    let def = &m.defs[0];
    // Encoded type: I + (A + I).
    assert_eq!(
        def.judgement.msg_ctx.entries[0].1,
        MsgType::sum(
            MsgType::Unit,
            MsgType::sum(MsgType::atom("A"), MsgType::Unit)
        )
    );
    // A case over Three lowers to two nested binary cases.
    let Proc::MCase { right, .. } = &def.proc else {
        panic!("expected an outer case")
    };
    assert!(matches!(**right, Proc::MCase { .. }));
    check_proc(&m.sigs, &def.judgement, &def.proc).unwrap();
}

#[test]
fn where_lowers_to_substitution() {
    let m = elaborate_src("axiom f : -> A\nproc p () [a : A # Bot ;] = (put a w; end a) where w = f()");
    let def = &m.defs[0];
    assert!(matches!(def.proc, Proc::MSubst { .. }));
    check_proc(&m.sigs, &def.judgement, &def.proc).unwrap();
}

#[test]
fn plug_lowers_to_cut_with_freshening() {
    let m = elaborate_src(
        "proc p () [x : X ; y : X] = plug (id x = m : X) to (id m = y : X) on m = m",
    );
    let def = &m.defs[0];
    let Proc::Cut {
        out_chan, in_chan, ..
    } = &def.proc
    else {
        panic!("expected a cut")
    };
    assert_eq!(out_chan, "m");
    // The right side's `m` was freshened apart.
    assert_ne!(in_chan, "m");
    check_proc(&m.sigs, &def.judgement, &def.proc).unwrap();
}

#[test]
fn duplicate_channel_rejected() {
    let err = elaborate(&parse("proc p () [a : Top ; a : Bot] = end a").unwrap()).unwrap_err();
    assert!(matches!(err, ElabError::DuplicateChannel(_, _)));
    let err =
        elaborate(&parse("proc p () [;a : X (+) Y] = split a as b, b; end b").unwrap()).unwrap_err();
    assert!(matches!(err, ElabError::DuplicateChannel(_, _)));
}

#[test]
fn unknown_constructor_rejected() {
    let err = elaborate(&parse("proc p () [a : A # Bot ;] = put a Nope(x); end a").unwrap())
        .unwrap_err();
    assert!(matches!(err, ElabError::UnknownConstructor(_, _)));
}

#[test]
fn non_variable_scrutinee_rejected() {
    let err = elaborate(
        &parse("axiom f : -> A + A\nproc p () [a : Bot ;] = case f() of | inl x -> end a | inr y -> end a")
            .unwrap(),
    )
    .unwrap_err();
    assert!(matches!(err, ElabError::NonVariableScrutinee(_)));
}

/// pretty ∘ parse round trip: elaborating the pretty-print of a core term
/// yields a proc_eq-equal term.
#[test]
fn pretty_parse_round_trip() {
    let sigs = mpl_core::pmsg::Signatures::default();
    let mut rng = StdRng::seed_from_u64(0x9e77);
    for _ in 0..100 {
        let g = common::gen_proc(&mut rng, 4);
        check_proc(&sigs, &g.judgement, &g.proc).unwrap();
        let printed = pretty_proc(&g.proc);
        // Re-parse as a statement and lower through a one-proc module.
        let module = build_module_for(&g.judgement, &printed);
        let m = elaborate(&module).unwrap_or_else(|e| {
            panic!("reparse failed for `{}`: {}", printed, e)
        });
        let def = &m.defs[0];
        assert_eq!(def.judgement, g.judgement);
        assert_eq!(
            proc_eq(&def.proc, &g.proc),
            Equivalence::Equal,
            "round trip changed `{}`",
            printed
        );
        // And printing is idempotent up to whitespace.
        assert_eq!(
            pretty_proc(&def.proc).split_whitespace().collect::<Vec<_>>(),
            printed.split_whitespace().collect::<Vec<_>>()
        );
    }
}

fn build_module_for(judgement: &mpl_core::pmsg::Judgement, body: &str) -> SourceModule {
    let mut src = String::from("proc roundtrip (");
    let mut first = true;
    for (pat, ty) in &judgement.msg_ctx.entries {
        if !first {
            src.push_str(", ");
        }
        first = false;
        src.push_str(&format!("{} : {}", pat, ty));
    }
    src.push_str(") [");
    let mut first = true;
    for (c, ty) in &judgement.inputs {
        if !first {
            src.push_str(", ");
        }
        first = false;
        src.push_str(&format!("{} : {}", c, ty));
    }
    src.push_str(" ; ");
    let mut first = true;
    for (c, ty) in &judgement.outputs {
        if !first {
            src.push_str(", ");
        }
        first = false;
        src.push_str(&format!("{} : {}", c, ty));
    }
    src.push_str("] = ");
    src.push_str(body);
    parse(&src).unwrap_or_else(|e| panic!("cannot reparse `{}`: {}", src, e))
}

/// Identity at ⊤ prints in close/end core syntax.
#[test]
fn identity_at_top_prints_close_end() {
    let p = mpl_core::pmsg::identity_proc(&ProcType::Top, "a", "b");
    assert_eq!(pretty_proc(&p), "close a; end b");
}

/// The canonical S-expression serialisation is stable.
#[test]
fn sexp_golden() {
    let t = mpl_core::msg::MsgTerm::pair(
        mpl_core::msg::MsgTerm::var("x"),
        mpl_core::msg::MsgTerm::UnitVal,
    );
    assert_eq!(sexp_msg(&t), "(pair (var x) (unit))");
    let p = Proc::get(
        "a",
        Pattern::var("x"),
        Proc::put("b", mpl_core::msg::MsgTerm::var("x"), Proc::id("a", ProcType::atom("X"), "b")),
    );
    assert_eq!(
        sexp_proc(&p),
        "(get a (pvar x) (put b (var x) (id a (patom X) b)))"
    );
}

/// Every grammar production appears in at least one accepted source file.
#[test]
fn grammar_coverage_golden() {
    let src = "
-- exercising the full surface grammar
type Alias = A * I
data Maybe = Just Alias | Broken 0
axiom mk : -> A
axiom use : Alias -> I
prim relay (A) [X ; X]
proc everything (m : Maybe) [a : Alias @ (X (x) Top) ; b : (I + I) @ Bot, c : X]
= case m of
  | Just p  -> get a q =>
               split a as a1, a2;
               close a2;
               put b inl ();
               close b;
               (plug relay(w)[a1; k] to (id k2 = c : X) on k = k2
                  where (w, ()) = q)
                  where () = use(p)
  | Broken bad -> absurd bad
";
    let m = elaborate(&parse(src).unwrap()).unwrap();
    let def = &m.defs[0];
    check_proc(&m.sigs, &def.judgement, &def.proc)
        .unwrap_or_else(|e| panic!("grammar exemplar does not check: {}", e));
}
