//! The acceptance suite: one test per criterion, each printing a pass line
//! and enforcing its stated time budget.

mod common;

use common::cases;
use mpl_core::combinators::{
    adjunction_transpose, adjunction_untranspose, cotuple_decompose, cotuple_recompose,
    coherence_suite, maps, Verdict,
};
use mpl_core::msg::{identity_term, msg_eq, normalize_msg, MsgTerm, MsgType, Pattern};
use mpl_core::pmsg::{
    alpha_canonical_proc, check_proc, eliminate_cuts, identity_proc, normalize_proc, proc_eq,
    rename_all_names, rename_chan, step_all, Equivalence, Judgement, Proc, ProcType, Signatures,
    PROC_CUT_RULES, PROC_SUBS_RULES,
};
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

fn pass(criterion: u32, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {} exceeded its {}s budget: {:?}",
        criterion,
        budget.as_secs(),
        elapsed
    );
    println!(
        "ACCEPTANCE {:2} PASS ({:>7.3}s) {}",
        criterion,
        elapsed.as_secs_f64(),
        what
    );
}

/// 1. The distributivity composite reduces to the printed normal form and
/// is the identity in both directions.
#[test]
fn criterion_01_distributive_round_trip() {
    let started = Instant::now();
    let a = MsgType::atom("A");
    let b = MsgType::atom("B");
    let c = MsgType::atom("C");

    // ctx {(w, x) : A * (B + C)} ⊢ forward : A*B + A*C
    let forward = MsgTerm::case(
        "x",
        Pattern::var("x1"),
        MsgTerm::inj1(MsgTerm::pair(MsgTerm::var("w"), MsgTerm::var("x1"))),
        Pattern::var("x2"),
        MsgTerm::inj2(MsgTerm::pair(MsgTerm::var("w"), MsgTerm::var("x2"))),
    );
    // ctx {z : A*B + A*C} ⊢ backward : A * (B + C)
    let backward = MsgTerm::case(
        "z",
        Pattern::pair(Pattern::var("y1"), Pattern::var("y2")),
        MsgTerm::pair(MsgTerm::var("y1"), MsgTerm::inj1(MsgTerm::var("y2"))),
        Pattern::pair(Pattern::var("z1"), Pattern::var("z2")),
        MsgTerm::pair(MsgTerm::var("z1"), MsgTerm::inj2(MsgTerm::var("z2"))),
    );

    // Forward-then-backward at A * (B + C).
    let fb = MsgTerm::subst(Pattern::var("z"), backward.clone(), forward.clone());
    let printed = MsgTerm::case(
        "x",
        Pattern::var("x1"),
        MsgTerm::pair(MsgTerm::var("w"), MsgTerm::inj1(MsgTerm::var("x1"))),
        Pattern::var("x2"),
        MsgTerm::pair(MsgTerm::var("w"), MsgTerm::inj2(MsgTerm::var("x2"))),
    );
    assert_eq!(
        normalize_msg(&fb).unwrap(),
        normalize_msg(&printed).unwrap()
    );
    let prod_ty = MsgType::prod(a.clone(), MsgType::sum(b.clone(), c.clone()));
    let (pat, iota) = identity_term(&prod_ty);
    let iota = align_pair_pattern(&pat, &iota, "w", "x");
    assert!(msg_eq(&fb, &iota).unwrap());

    // Backward-then-forward at A*B + A*C.
    let bf = MsgTerm::subst(
        Pattern::pair(Pattern::var("w"), Pattern::var("x")),
        forward,
        backward,
    );
    let sum_ty = MsgType::sum(
        MsgType::prod(a.clone(), b.clone()),
        MsgType::prod(a, c),
    );
    let (pat, iota) = identity_term(&sum_ty);
    let Pattern::Var(zv) = &pat else {
        panic!("sum identity binds a variable")
    };
    let iota = mpl_core::msg::rename_var(&iota, zv, "z");
    assert!(msg_eq(&bf, &iota).unwrap());

    pass(1, "distributive law round trip", started, Duration::from_secs(1));
}

fn align_pair_pattern(pat: &Pattern, body: &MsgTerm, first: &str, second: &str) -> MsgTerm {
    let Pattern::Pair(l, r) = pat else {
        panic!("expected a pair pattern")
    };
    let (Pattern::Var(lv), Pattern::Var(rv)) = (&**l, &**r) else {
        panic!("expected variable components")
    };
    let body = mpl_core::msg::rename_var(body, lv, first);
    mpl_core::msg::rename_var(&body, rv, second)
}

/// 2. The bank machine parses, elaborates, and checks at the printed
/// judgement; its pretty-print is golden-stable.
#[test]
fn criterion_02_bank_machine() {
    let started = Instant::now();
    let src = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../corpus/bank.mpl"
    ))
    .unwrap();
    let module = mpl_core::surface::parse(&src).unwrap();
    let m = mpl_core::surface::elaborate(&module).unwrap();
    let def = m.defs.iter().find(|d| d.name == "bank_machine").unwrap();

    // The claimed judgement, with aliases expanded:
    // usr : Request ∘ (Response • ⊥) ⊩ bnk : Request ∘ (BResponse • ⊥),
    //                                   sec : TransID ∘ (SResponse • ⊥)
    let request = MsgType::prod(MsgType::atom("PIN"), MsgType::atom("Integer"));
    let bresponse = MsgType::prod(MsgType::atom("TransID"), MsgType::atom("Integer"));
    let response = MsgType::sum(MsgType::atom("Integer"), MsgType::Unit);
    let sresponse = MsgType::sum(MsgType::Unit, MsgType::Unit);
    let expected = Judgement::new()
        .with_input(
            "usr",
            ProcType::act(request.clone(), ProcType::coact(response, ProcType::Bot)),
        )
        .with_output(
            "bnk",
            ProcType::act(request, ProcType::coact(bresponse, ProcType::Bot)),
        )
        .with_output(
            "sec",
            ProcType::act(
                MsgType::atom("TransID"),
                ProcType::coact(sresponse, ProcType::Bot),
            ),
        );
    assert_eq!(def.judgement, expected);
    check_proc(&m.sigs, &def.judgement, &def.proc).unwrap();

    let pretty = mpl_core::surface::pretty_proc(&def.proc);
    let golden_path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/bank_pretty.txt"
    );
    let golden = std::fs::read_to_string(golden_path).unwrap();
    assert_eq!(pretty.trim(), golden.trim(), "pretty-print drifted");

    pass(2, "bank machine checks at the printed judgement", started, Duration::from_secs(1));
}

/// 3. Every operational rule fires on its schema; trace names over the
/// schema corpus cover the whole catalogue.
#[test]
fn criterion_03_rule_catalogue_coverage() {
    let started = Instant::now();
    let mut seen: BTreeSet<&'static str> = BTreeSet::new();
    for case in cases::all_cases() {
        check_proc(&case.sigs, &case.claim, &case.redex).unwrap();
        let (normal, trace) = eliminate_cuts(&case.redex, 100_000).unwrap();
        check_proc(&case.sigs, &case.claim, &normal).unwrap();
        let first = trace.steps.first().expect("schema case has a redex");
        assert_eq!(first.rule, case.rule);
        seen.extend(trace.steps.iter().map(|s| s.rule));
    }
    let mut expected: BTreeSet<&'static str> = BTreeSet::new();
    expected.extend(PROC_CUT_RULES);
    expected.extend(PROC_SUBS_RULES);
    expected.insert("subs-cut");
    expected.insert("cut-subs");
    for rule in &expected {
        assert!(seen.contains(rule), "rule `{}` not covered by traces", rule);
    }
    pass(3, "rule catalogue covered by trace names", started, Duration::from_secs(30));
}

/// 4. Cutting the inductive identity onto any boundary channel of a
/// generated process is equivalent to the process.
#[test]
fn criterion_04_identity_laws() {
    let started = Instant::now();
    let sigs = Signatures::default();
    let mut rng = StdRng::seed_from_u64(0x1d_4a11);
    let mut checked = 0;
    while checked < 500 {
        let g = common::gen_proc(&mut rng, 5);
        check_proc(&sigs, &g.judgement, &g.proc).unwrap();

        for (chan, ty) in g
            .judgement
            .inputs
            .iter()
            .chain(g.judgement.outputs.iter())
            .take(1)
        {
            let is_input = g.judgement.inputs.contains_key(chan);
            let id = identity_proc(ty, "idl", "idr");
            let (id, m, n) = rename_disjoint_test(&id, &g.proc, "idl", "idr");
            let composite = if is_input {
                Proc::cut(id, &n, chan, g.proc.clone())
            } else {
                Proc::cut(g.proc.clone(), chan, &m, id)
            };
            // Align the fresh boundary name back to the original.
            let composite = if is_input {
                rename_chan(&composite, &m, chan)
            } else {
                rename_chan(&composite, &n, chan)
            };
            assert_eq!(
                proc_eq(&composite, &g.proc),
                Equivalence::Equal,
                "identity law failed on {}",
                chan
            );
            checked += 1;
        }
    }
    pass(4, "identity laws on 500 generated processes", started, Duration::from_secs(30));
}

fn rename_disjoint_test(p: &Proc, against: &Proc, i: &str, o: &str) -> (Proc, String, String) {
    let mut gen = mpl_core::fresh::NameGen::new();
    gen.reserve_all(against.all_names().iter());
    let mut map = BTreeMap::new();
    for n in p.all_names() {
        if !gen.try_reserve(&n) {
            map.insert(n.clone(), gen.fresh(&n));
        }
    }
    let renamed = rename_all_names(p, &map);
    (
        renamed,
        map.get(i).cloned().unwrap_or_else(|| i.to_string()),
        map.get(o).cloned().unwrap_or_else(|| o.to_string()),
    )
}

/// 5. Cut is associative and interchanges with substitution.
#[test]
fn criterion_05_associativity_and_interchange() {
    let started = Instant::now();
    let sigs = Signatures::default();
    let mut rng = StdRng::seed_from_u64(0xa550c);
    for i in 0..200 {
        // s --(Y)--> t --(Z)--> u
        let t = common::gen_proc(&mut rng, 3);
        let (tin, tin_ty) = match t.judgement.inputs.iter().next() {
            Some((c, ty)) => (c.clone(), ty.clone()),
            None => continue,
        };
        let (tout, tout_ty) = match t.judgement.outputs.iter().next() {
            Some((c, ty)) => (c.clone(), ty.clone()),
            None => continue,
        };
        let (s, sout) = common::gen_proc_with_output(&mut rng, 2, &tin_ty);
        let (u, uin) = common::gen_proc_with_input(&mut rng, 2, &tout_ty);
        check_proc(&sigs, &t.judgement, &t.proc).unwrap();
        check_proc(&sigs, &s.judgement, &s.proc).unwrap();
        check_proc(&sigs, &u.judgement, &u.proc).unwrap();

        let (s2, sout, _) = rename_disjoint_test(&s.proc, &t.proc, &sout, &sout);
        let left_first = Proc::cut(
            Proc::cut(s2.clone(), &sout, &tin, t.proc.clone()),
            &tout,
            &uin,
            u.proc.clone(),
        );
        let right_first = Proc::cut(
            s2,
            &sout,
            &tin,
            Proc::cut(t.proc.clone(), &tout, &uin, u.proc.clone()),
        );
        // Name disjointness of u against s/t holds by construction: the
        // generators use distinct counters.
        assert_eq!(
            proc_eq(&left_first, &right_first),
            Equivalence::Equal,
            "associativity failed on sample {}",
            i
        );

        // Interchange: ((x ↦ t′) f) ; u  ≃  (x ↦ t′ ; u) f, with t′ a
        // version of t that actually consumes the substituted variable.
        if i % 2 == 0 {
            let f = MsgTerm::var("itc_v");
            let body = Proc::put(&tin, MsgTerm::var("itc_x"), t.proc.clone());
            let subst_out = Proc::cut(
                Proc::msubst(Pattern::var("itc_x"), body.clone(), f.clone()),
                &tout,
                &uin,
                u.proc.clone(),
            );
            let subst_in = Proc::msubst(
                Pattern::var("itc_x"),
                Proc::cut(body, &tout, &uin, u.proc.clone()),
                f,
            );
            assert_eq!(
                proc_eq(&subst_out, &subst_in),
                Equivalence::Equal,
                "cut/subs interchange failed on sample {}",
                i
            );
        }
    }
    pass(5, "associativity and interchange on 200 triples", started, Duration::from_secs(30));
}

/// 6. The triangle composite collapses to the identity in the five printed
/// steps.
#[test]
fn criterion_06_triangle_identity() {
    let started = Instant::now();
    let a = MsgType::atom("A");
    let x = ProcType::atom("X");

    let n = maps::n_map(&a, &x);
    let a_n = maps::ProcMap::act(&maps::MsgMap::identity(&a), &n);
    let e = maps::e_map(&a, &ProcType::act(a.clone(), x.clone()));
    let composite = a_n.then(&e);

    let (normal, trace) = eliminate_cuts(&composite.term, 10_000).unwrap();
    assert_eq!(
        trace.rule_multiset(),
        vec![
            "act_l/coact_r-sequent",
            "act_r-act_l",
            "act_r-act_l",
            "coact_r-coact_l",
            "id-sequent",
        ],
        "trace differs from the printed five-step calculation"
    );
    let expected = identity_proc(
        &ProcType::act(a, x),
        &composite.input,
        &composite.output,
    );
    assert_eq!(
        alpha_canonical_proc(&normalize_proc(&normal).unwrap()),
        alpha_canonical_proc(&normalize_proc(&expected).unwrap())
    );
    pass(6, "triangle identity in five steps", started, Duration::from_secs(1));
}

/// 7. Every catalogued coherence instance is decided Equal.
#[test]
fn criterion_07_coherence_suite() {
    let started = Instant::now();
    let report = coherence_suite(None);
    assert_eq!(report.entries.len(), 108, "catalogue length changed");
    let unknown = report
        .entries
        .iter()
        .filter(|e| e.verdict == Verdict::Unknown)
        .count();
    assert_eq!(unknown, 0, "suite returned Unknown verdicts");
    for e in &report.entries {
        assert_eq!(e.verdict, Verdict::Equal, "equation {} failed", e.id);
    }
    pass(7, "coherence suite: 108 instances equal", started, Duration::from_secs(120));
}

/// 8. Representability round trips and adjunction transposes.
#[test]
fn criterion_08_representability() {
    let started = Instant::now();
    let sigs = Signatures::default();
    let mut rng = StdRng::seed_from_u64(0x8e98);
    let a = MsgType::atom("A");

    // Covariant and contravariant representation round trips on generated
    // processes carrying a free message variable.
    for i in 0..100 {
        let g = common::gen_proc(&mut rng, 4);
        let Some((chan, _)) = g.judgement.inputs.iter().next() else {
            continue;
        };
        let chan = chan.clone();
        let var = format!("rep_v{}", i);
        let with_var = Proc::put(&chan, MsgTerm::var(&var), g.proc.clone());
        // with_var :: var:A | …, chan : A • T ⊩ …
        let mut judg = g.judgement.clone();
        let t = judg.inputs.remove(&chan).unwrap();
        judg.inputs
            .insert(chan.clone(), ProcType::coact(a.clone(), t.clone()));
        judg.msg_ctx.push(Pattern::var(&var), a.clone());
        check_proc(&sigs, &judg, &with_var).unwrap();

        // Represent at a second input if one exists, otherwise at `chan`.
        let target = chan.clone();
        let represented = mpl_core::combinators::represent_co(&with_var, &var, &target);
        let rep_ty = ProcType::act(a.clone(), ProcType::coact(a.clone(), t));
        let un = mpl_core::combinators::unrepresent_co(&represented, &target, &rep_ty).unwrap();
        // Align the fresh names with the originals before comparing.
        let Pattern::Var(un_var) = &un.pattern else {
            panic!("atom polymap binds a variable")
        };
        let mut back = rename_chan(&un.proc, &un.chan, &target);
        back = rename_all_names(
            &back,
            &BTreeMap::from([(un_var.clone(), var.clone())]),
        );
        assert_eq!(
            proc_eq(&back, &with_var),
            Equivalence::Equal,
            "covariant representability round trip failed on sample {}",
            i
        );
    }

    // Transpose round trips on the generating maps with an action source.
    let x = ProcType::atom("X");
    let y = ProcType::atom("Y");
    let mut count = 0;
    let candidates: Vec<maps::ProcMap> = vec![
        maps::e_map(&a, &x),
        maps::u_act(&x),
        maps::a_star_act(&a, &MsgType::atom("B"), &x),
        maps::a_act_tensor(&a, &x, &y),
        maps::d_act_par(&a, &x, &y),
        maps::d_act_coact(&a, &MsgType::atom("B"), &x),
        maps::a_act_tensor_p(&a, &x, &y),
        maps::d_act_par_p(&a, &x, &y),
        maps::ProcMap::act(&maps::MsgMap::identity(&a), &maps::c_tensor(&x, &y)),
        maps::ProcMap::act(&maps::MsgMap::identity(&a), &maps::r_par(&x)),
    ];
    for base in &candidates {
        let mut m = base.clone();
        for _ in 0..10 {
            let t = adjunction_transpose(&m).unwrap();
            let back = adjunction_untranspose(&t).unwrap();
            assert_eq!(m.eq(&back), Equivalence::Equal, "transpose round trip failed");
            count += 1;
            // Deepen the source with one more action layer for the next
            // round.
            m = maps::ProcMap::act(&maps::MsgMap::identity(&a), &m);
        }
    }
    assert!(count >= 100, "not enough transpose samples");

    // transpose(identity at A ∘ X) is the adjunction unit.
    let id_ax = maps::ProcMap::identity(&ProcType::act(a.clone(), x.clone()));
    let unit = adjunction_transpose(&id_ax).unwrap();
    assert_eq!(unit.eq(&maps::n_map(&a, &x)), Equivalence::Equal);

    pass(8, "representability and transposes", started, Duration::from_secs(30));
}

/// 9. All reduction orders from every small corpus process join, with
/// subject reduction at every step.
#[test]
fn criterion_09_confluence_oracle() {
    let started = Instant::now();
    let sigs = Signatures::default();
    let corpus = common::enumerate_procs(3);
    assert!(corpus.len() > 100, "corpus unexpectedly small");
    let mut graphs = 0usize;
    for sp in &corpus {
        check_proc(&sigs, &sp.judgement, &sp.proc).unwrap();
        // Explore every reduction order, memoised on the term.
        let mut seen: BTreeSet<Proc> = BTreeSet::new();
        let mut stack = vec![sp.proc.clone()];
        let mut normals: BTreeSet<Proc> = BTreeSet::new();
        while let Some(t) = stack.pop() {
            if !seen.insert(t.clone()) {
                continue;
            }
            let nexts = step_all(&t);
            if nexts.is_empty() {
                normals.insert(alpha_canonical_proc(&normalize_proc(&t).unwrap()));
                continue;
            }
            for (next, _) in nexts {
                check_proc(&sigs, &sp.judgement, &next)
                    .unwrap_or_else(|e| panic!("subject reduction failed: {}", e));
                stack.push(next);
            }
        }
        assert_eq!(
            normals.len(),
            1,
            "reduction orders diverge for {:?}",
            sp.proc
        );
        graphs += 1;
    }
    pass(
        9,
        &format!("confluence over {} corpus processes", graphs),
        started,
        Duration::from_secs(120),
    );
}

/// 10. Coproduct decomposition round trips on processes with a sum-action
/// input.
#[test]
fn criterion_10_coproduct_decomposition() {
    let started = Instant::now();
    let sigs = Signatures::default();
    let a = MsgType::atom("A");
    let b = MsgType::atom("B");
    let sum = MsgType::sum(a.clone(), b.clone());
    let mut rng = StdRng::seed_from_u64(0xc0_7u64);
    let mut count = 0;
    while count < 40 {
        let g = common::gen_proc(&mut rng, 3);
        let Some((chan, t)) = g.judgement.inputs.iter().next().map(|(c, t)| (c.clone(), t.clone()))
        else {
            continue;
        };
        // s :: Γ, chan : (A+B) ∘ T ⊩ Δ — receive the sum and ship it out on
        // a fresh coaction input wrapped around the original process.
        let w = format!("sum_w{}", count);
        let helper = format!("sumc{}", count);
        let s = Proc::get(
            &chan,
            Pattern::var(&w),
            Proc::put(
                &helper,
                MsgTerm::var(&w),
                Proc::close(&helper, g.proc.clone()),
            ),
        );
        let mut judg = g.judgement.clone();
        judg.inputs
            .insert(chan.clone(), ProcType::act(sum.clone(), t.clone()));
        judg.inputs
            .insert(helper.clone(), ProcType::coact(sum.clone(), ProcType::Top));
        check_proc(&sigs, &judg, &s).unwrap();

        let cot = cotuple_decompose(&s, &chan, &a, &b, &t);
        let recomposed = cotuple_recompose(&cot, &chan, &t);
        assert_eq!(
            proc_eq(&recomposed, &s),
            Equivalence::Equal,
            "coproduct decomposition failed on sample {}",
            count
        );
        count += 1;
    }
    pass(10, "coproduct decomposition round trips", started, Duration::from_secs(10));
}
