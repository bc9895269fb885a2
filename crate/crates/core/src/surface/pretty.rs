//! Printing core terms back to the surface syntax, and the canonical
//! S-expression form used in golden files.

use crate::msg::{MsgTerm, MsgType, Pattern};
use crate::pmsg::{Proc, ProcType};

pub fn pretty_pattern(p: &Pattern) -> String {
    match p {
        Pattern::Var(n) => n.clone(),
        Pattern::Pair(a, b) => format!("({}, {})", pretty_pattern(a), pretty_pattern(b)),
        Pattern::Unit => "()".to_string(),
    }
}

pub fn pretty_msg(t: &MsgTerm) -> String {
    match t {
        MsgTerm::Var(n) => n.clone(),
        MsgTerm::Axiom(f, args) => {
            let args: Vec<String> = args.iter().map(pretty_msg).collect();
            format!("{}({})", f, args.join(", "))
        }
        MsgTerm::Subst { binder, body, arg } => format!(
            "({} where {} = {})",
            pretty_msg(body),
            pretty_pattern(binder),
            pretty_msg(arg)
        ),
        MsgTerm::Pair(a, b) => format!("({}, {})", pretty_msg(a), pretty_msg(b)),
        MsgTerm::UnitVal => "()".to_string(),
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => format!(
            "(case {} as | inl {} -> {} | inr {} -> {})",
            scrutinee,
            pretty_pattern(left_pat),
            pretty_msg(left),
            pretty_pattern(right_pat),
            pretty_msg(right)
        ),
        MsgTerm::Inj1(t) => format!("inl {}", atom(t)),
        MsgTerm::Inj2(t) => format!("inr {}", atom(t)),
        MsgTerm::Absurd(z) => format!("absurd {}", z),
    }
}

fn atom(t: &MsgTerm) -> String {
    match t {
        MsgTerm::Var(_) | MsgTerm::UnitVal | MsgTerm::Pair(_, _) | MsgTerm::Axiom(_, _) => {
            pretty_msg(t)
        }
        _ => format!("({})", pretty_msg(t)),
    }
}

/// Core process syntax; parses back through the statement grammar.
pub fn pretty_proc(p: &Proc) -> String {
    match p {
        Proc::Id { input, ty, output } => format!("id {} = {} : {}", input, output, ty),
        Proc::Prim {
            name,
            msg_args,
            inputs,
            outputs,
        } => format!(
            "{}({})[{}; {}]",
            name,
            msg_args.join(", "),
            inputs.join(", "),
            outputs.join(", ")
        ),
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => format!(
            "plug ({}) to ({}) on {} = {}",
            pretty_proc(left),
            pretty_proc(right),
            out_chan,
            in_chan
        ),
        Proc::Split { chan, c1, c2, body } => {
            format!("split {} as {}, {}; {}", chan, c1, c2, pretty_proc(body))
        }
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => format!(
            "fork {} as | {} -> {} | {} -> ({})",
            chan,
            c1,
            pretty_proc(left),
            c2,
            pretty_proc(right)
        ),
        Proc::Close { chan, body } => format!("close {}; {}", chan, pretty_proc(body)),
        Proc::End { chan } => format!("end {}", chan),
        Proc::Get {
            chan,
            pattern,
            body,
        } => format!(
            "get {} {} => {}",
            chan,
            pretty_pattern(pattern),
            pretty_proc(body)
        ),
        Proc::Put {
            chan,
            payload,
            body,
        } => format!("put {} {}; {}", chan, pretty_msg(payload), pretty_proc(body)),
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => format!(
            "case {} of | inl {} -> ({}) | inr {} -> ({})",
            scrutinee,
            pretty_pattern(left_pat),
            pretty_proc(left),
            pretty_pattern(right_pat),
            pretty_proc(right)
        ),
        Proc::MAbsurd { scrutinee } => format!("absurd {}", scrutinee),
        Proc::MSubst { binder, body, arg } => format!(
            "({}) where {} = {}",
            pretty_proc(body),
            pretty_pattern(binder),
            pretty_msg(arg)
        ),
    }
}

// Canonical S-expression form for golden tests.

pub fn sexp_msg_type(t: &MsgType) -> String {
    match t {
        MsgType::Atom(n) => format!("(atom {})", n),
        MsgType::Prod(a, b) => format!("(prod {} {})", sexp_msg_type(a), sexp_msg_type(b)),
        MsgType::Unit => "(unit)".to_string(),
        MsgType::Sum(a, b) => format!("(sum {} {})", sexp_msg_type(a), sexp_msg_type(b)),
        MsgType::Zero => "(zero)".to_string(),
    }
}

pub fn sexp_proc_type(t: &ProcType) -> String {
    match t {
        ProcType::Atom(n) => format!("(patom {})", n),
        ProcType::Tensor(a, b) => {
            format!("(tensor {} {})", sexp_proc_type(a), sexp_proc_type(b))
        }
        ProcType::Par(a, b) => format!("(par {} {})", sexp_proc_type(a), sexp_proc_type(b)),
        ProcType::Top => "(top)".to_string(),
        ProcType::Bot => "(bot)".to_string(),
        ProcType::Act(a, x) => format!("(act {} {})", sexp_msg_type(a), sexp_proc_type(x)),
        ProcType::CoAct(a, x) => format!("(coact {} {})", sexp_msg_type(a), sexp_proc_type(x)),
    }
}

pub fn sexp_pattern(p: &Pattern) -> String {
    match p {
        Pattern::Var(n) => format!("(pvar {})", n),
        Pattern::Pair(a, b) => format!("(ppair {} {})", sexp_pattern(a), sexp_pattern(b)),
        Pattern::Unit => "(punit)".to_string(),
    }
}

pub fn sexp_msg(t: &MsgTerm) -> String {
    match t {
        MsgTerm::Var(n) => format!("(var {})", n),
        MsgTerm::Axiom(f, args) => {
            let mut s = format!("(ax {}", f);
            for a in args {
                s.push(' ');
                s.push_str(&sexp_msg(a));
            }
            s.push(')');
            s
        }
        MsgTerm::Subst { binder, body, arg } => format!(
            "(subst {} {} {})",
            sexp_pattern(binder),
            sexp_msg(body),
            sexp_msg(arg)
        ),
        MsgTerm::Pair(a, b) => format!("(pair {} {})", sexp_msg(a), sexp_msg(b)),
        MsgTerm::UnitVal => "(unit)".to_string(),
        MsgTerm::Case {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => format!(
            "(case {} {} {} {} {})",
            scrutinee,
            sexp_pattern(left_pat),
            sexp_msg(left),
            sexp_pattern(right_pat),
            sexp_msg(right)
        ),
        MsgTerm::Inj1(t) => format!("(inl {})", sexp_msg(t)),
        MsgTerm::Inj2(t) => format!("(inr {})", sexp_msg(t)),
        MsgTerm::Absurd(z) => format!("(absurd {})", z),
    }
}

pub fn sexp_proc(p: &Proc) -> String {
    match p {
        Proc::Id { input, ty, output } => {
            format!("(id {} {} {})", input, sexp_proc_type(ty), output)
        }
        Proc::Prim {
            name,
            msg_args,
            inputs,
            outputs,
        } => format!(
            "(prim {} ({}) ({}) ({}))",
            name,
            msg_args.join(" "),
            inputs.join(" "),
            outputs.join(" ")
        ),
        Proc::Cut {
            left,
            out_chan,
            in_chan,
            right,
        } => format!(
            "(cut {} {} {} {})",
            sexp_proc(left),
            out_chan,
            in_chan,
            sexp_proc(right)
        ),
        Proc::Split { chan, c1, c2, body } => {
            format!("(split {} {} {} {})", chan, c1, c2, sexp_proc(body))
        }
        Proc::Fork {
            chan,
            c1,
            left,
            c2,
            right,
        } => format!(
            "(fork {} {} {} {} {})",
            chan,
            c1,
            sexp_proc(left),
            c2,
            sexp_proc(right)
        ),
        Proc::Close { chan, body } => format!("(close {} {})", chan, sexp_proc(body)),
        Proc::End { chan } => format!("(end {})", chan),
        Proc::Get {
            chan,
            pattern,
            body,
        } => format!(
            "(get {} {} {})",
            chan,
            sexp_pattern(pattern),
            sexp_proc(body)
        ),
        Proc::Put {
            chan,
            payload,
            body,
        } => format!("(put {} {} {})", chan, sexp_msg(payload), sexp_proc(body)),
        Proc::MCase {
            scrutinee,
            left_pat,
            left,
            right_pat,
            right,
        } => format!(
            "(mcase {} {} {} {} {})",
            scrutinee,
            sexp_pattern(left_pat),
            sexp_proc(left),
            sexp_pattern(right_pat),
            sexp_proc(right)
        ),
        Proc::MAbsurd { scrutinee } => format!("(mabsurd {})", scrutinee),
        Proc::MSubst { binder, body, arg } => format!(
            "(msubst {} {} {})",
            sexp_pattern(binder),
            sexp_proc(body),
            sexp_msg(arg)
        ),
    }
}
