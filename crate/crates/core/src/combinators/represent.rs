//! Representability: the bijections that trade a context slot for an
//! action-typed channel, their transposes, and the coproduct decomposition.

use super::maps::ProcMap;
use crate::fresh::NameGen;
use crate::msg::{identity_term_in, MsgTerm, MsgType, Pattern};
use crate::pmsg::{Proc, ProcError, ProcType};
use crate::Name;

/// One direction of the covariant bijection: bind the message variable at
/// the channel. `p :: Φ, x:A | Γ, chan:X ⊩ Δ` becomes
/// `Φ | Γ, chan:A∘X ⊩ Δ`.
pub fn represent_co(p: &Proc, var: &str, chan: &str) -> Proc {
    Proc::get(chan, Pattern::var(var), p.clone())
}

/// The contravariant direction binds at an output channel instead.
pub fn represent_contra(p: &Proc, var: &str, chan: &str) -> Proc {
    Proc::get(chan, Pattern::var(var), p.clone())
}

/// Result of un-representing: the message context pattern and the channel
/// that replaced the action-typed channel.
#[derive(Debug, Clone)]
pub struct Unrepresented {
    pub proc: Proc,
    pub pattern: Pattern,
    pub chan: Name,
}

/// The other direction, by cutting with the representing polymap
/// `α[ι(x)]·(γ =_X α) :: x:A | γ:X ⊩ α:A∘X`, where `x` is the identity
/// pattern of `A`.
pub fn unrepresent_co(p: &Proc, chan: &str, ty: &ProcType) -> Result<Unrepresented, ProcError> {
    let ProcType::Act(a_ty, x_ty) = ty else {
        return Err(ProcError::TypeMismatch {
            expected: "an action type".to_string(),
            got: ty.to_string(),
        });
    };
    let mut gen = NameGen::avoiding(p.all_names());
    let (pattern, body) = identity_term_in(a_ty, &mut gen);
    let gamma = gen.fresh("g");
    let a0 = gen.fresh("a");
    let poly = Proc::put(
        &a0,
        body,
        Proc::Id {
            input: gamma.clone(),
            ty: (**x_ty).clone(),
            output: a0.clone(),
        },
    );
    Ok(Unrepresented {
        proc: Proc::cut(poly, &a0, chan, p.clone()),
        pattern,
        chan: gamma,
    })
}

/// Contravariant mirror: cut with `α[ι(x)]·(α =_X γ) :: x:A | α:A•X ⊩ γ:X`.
pub fn unrepresent_contra(p: &Proc, chan: &str, ty: &ProcType) -> Result<Unrepresented, ProcError> {
    let ProcType::CoAct(a_ty, x_ty) = ty else {
        return Err(ProcError::TypeMismatch {
            expected: "a coaction type".to_string(),
            got: ty.to_string(),
        });
    };
    let mut gen = NameGen::avoiding(p.all_names());
    let (pattern, body) = identity_term_in(a_ty, &mut gen);
    let gamma = gen.fresh("g");
    let a0 = gen.fresh("a");
    let poly = Proc::put(
        &a0,
        body,
        Proc::Id {
            input: a0.clone(),
            ty: (**x_ty).clone(),
            output: gamma.clone(),
        },
    );
    Ok(Unrepresented {
        proc: Proc::cut(p.clone(), chan, &a0, poly),
        pattern,
        chan: gamma,
    })
}

/// Transpose a map `A ∘ X → Y` to `X → A • Y` through the representability
/// of both actions.
pub fn adjunction_transpose(m: &ProcMap) -> Result<ProcMap, ProcError> {
    let ProcType::Act(a, x) = m.src.clone() else {
        return Err(ProcError::TypeMismatch {
            expected: "an action type as source".to_string(),
            got: m.src.to_string(),
        });
    };
    let un = unrepresent_co(&m.term, &m.input, &m.src)?;
    let term = Proc::get(&m.output, un.pattern, un.proc);
    Ok(ProcMap::new(
        (*x).clone(),
        ProcType::coact(a, m.dst.clone()),
        &un.chan,
        &m.output,
        term,
    ))
}

/// Transpose a map `X → A • Y` back to `A ∘ X → Y`.
pub fn adjunction_untranspose(m: &ProcMap) -> Result<ProcMap, ProcError> {
    let ProcType::CoAct(a, y) = m.dst.clone() else {
        return Err(ProcError::TypeMismatch {
            expected: "a coaction type as target".to_string(),
            got: m.dst.to_string(),
        });
    };
    let un = unrepresent_contra(&m.term, &m.output, &m.dst)?;
    let term = Proc::get(&m.input, un.pattern, un.proc);
    Ok(ProcMap::new(
        ProcType::act(a, m.src.clone()),
        (*y).clone(),
        &m.input,
        &un.chan,
        term,
    ))
}

/// The two composites with the injections `A∘X → (A+B)∘X ← B∘X`.
#[derive(Debug, Clone)]
pub struct Cotuple {
    pub left: Proc,
    pub left_chan: Name,
    pub right: Proc,
    pub right_chan: Name,
}

fn inj_map(
    first: bool,
    a: &MsgType,
    b: &MsgType,
    x: &ProcType,
    input: &str,
    output: &str,
    gen: &mut NameGen,
) -> Proc {
    let (pat, body) = if first {
        let (pa, ta) = identity_term_in(a, gen);
        (pa, MsgTerm::inj1(ta))
    } else {
        let (pb, tb) = identity_term_in(b, gen);
        (pb, MsgTerm::inj2(tb))
    };
    Proc::get(
        input,
        pat,
        Proc::put(
            output,
            body,
            Proc::Id {
                input: input.to_string(),
                ty: x.clone(),
                output: output.to_string(),
            },
        ),
    )
}

/// Split a process with an `(A+B)∘X` input into its two injection
/// composites.
pub fn cotuple_decompose(s: &Proc, chan: &str, a: &MsgType, b: &MsgType, x: &ProcType) -> Cotuple {
    let mut gen = NameGen::avoiding(s.all_names());
    let li = gen.fresh("inj");
    let lo = gen.fresh("inj");
    let left = Proc::cut(inj_map(true, a, b, x, &li, &lo, &mut gen), &lo, chan, s.clone());
    let ri = gen.fresh("inj");
    let ro = gen.fresh("inj");
    let right = Proc::cut(
        inj_map(false, a, b, x, &ri, &ro, &mut gen),
        &ro,
        chan,
        s.clone(),
    );
    Cotuple {
        left,
        left_chan: li,
        right,
        right_chan: ri,
    }
}

/// Reassemble a cotuple at `(A+B)∘X`: case on the received sum and feed the
/// component into the matching branch.
pub fn cotuple_recompose(c: &Cotuple, chan: &str, x: &ProcType) -> Proc {
    let mut gen = NameGen::avoiding(
        c.left
            .all_names()
            .into_iter()
            .chain(c.right.all_names())
            .chain([chan.to_string(), c.left_chan.clone(), c.right_chan.clone()]),
    );
    let z = gen.fresh("z");
    let xv = gen.fresh("x");
    let yv = gen.fresh("y");
    let plug = |v: &Name, branch: &Proc, branch_chan: &Name, gen: &mut NameGen| {
        let c0 = gen.fresh("c");
        Proc::cut(
            Proc::put(
                &c0,
                MsgTerm::Var(v.clone()),
                Proc::Id {
                    input: chan.to_string(),
                    ty: x.clone(),
                    output: c0.clone(),
                },
            ),
            &c0,
            branch_chan,
            branch.clone(),
        )
    };
    let left = plug(&xv, &c.left, &c.left_chan, &mut gen);
    let right = plug(&yv, &c.right, &c.right_chan, &mut gen);
    Proc::get(
        chan,
        Pattern::Var(z.clone()),
        Proc::MCase {
            scrutinee: z,
            left_pat: Pattern::Var(xv),
            left: Box::new(left),
            right_pat: Pattern::Var(yv),
            right: Box::new(right),
        },
    )
}
