//! Maps between single types, and the generating coherence maps.
//!
//! A `ProcMap` is a process with exactly one input and one output channel;
//! cut is composition. A `MsgMap` is a message proof with a one-pattern
//! context. Together they carry the derived categorical structure: the
//! actions are functors, the listed generators are the structural maps,
//! and primed variants are produced from the base generators and the
//! symmetry maps rather than written out by hand.

use crate::fresh::NameGen;
use crate::msg::{identity_term_in, MsgTerm, MsgType, Pattern};
use crate::pmsg::{
    alpha_canonical_proc, dualize, normalize_proc, proc_eq, Equivalence, Judgement, Proc, ProcType,
};
use crate::Name;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A message proof `pattern : src ⊢ body : dst`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsgMap {
    pub src: MsgType,
    pub dst: MsgType,
    pub pattern: Pattern,
    pub body: MsgTerm,
}

impl MsgMap {
    pub fn identity(a: &MsgType) -> MsgMap {
        let (pattern, body) = crate::msg::identity_term(a);
        MsgMap {
            src: a.clone(),
            dst: a.clone(),
            pattern,
            body,
        }
    }

    /// `c* : A * B → B * A`
    pub fn sym(a: &MsgType, b: &MsgType) -> MsgMap {
        let mut gen = NameGen::new();
        let (pa, ta) = identity_term_in(a, &mut gen);
        let (pb, tb) = identity_term_in(b, &mut gen);
        MsgMap {
            src: MsgType::prod(a.clone(), b.clone()),
            dst: MsgType::prod(b.clone(), a.clone()),
            pattern: Pattern::pair(pa, pb),
            body: MsgTerm::pair(tb, ta),
        }
    }

    /// `a* : (A * B) * C → A * (B * C)`
    pub fn assoc(a: &MsgType, b: &MsgType, c: &MsgType) -> MsgMap {
        let mut gen = NameGen::new();
        let (pa, ta) = identity_term_in(a, &mut gen);
        let (pb, tb) = identity_term_in(b, &mut gen);
        let (pc, tc) = identity_term_in(c, &mut gen);
        MsgMap {
            src: MsgType::prod(MsgType::prod(a.clone(), b.clone()), c.clone()),
            dst: MsgType::prod(a.clone(), MsgType::prod(b.clone(), c.clone())),
            pattern: Pattern::pair(Pattern::pair(pa, pb), pc),
            body: MsgTerm::pair(ta, MsgTerm::pair(tb, tc)),
        }
    }

    pub fn assoc_inv(a: &MsgType, b: &MsgType, c: &MsgType) -> MsgMap {
        let mut gen = NameGen::new();
        let (pa, ta) = identity_term_in(a, &mut gen);
        let (pb, tb) = identity_term_in(b, &mut gen);
        let (pc, tc) = identity_term_in(c, &mut gen);
        MsgMap {
            src: MsgType::prod(a.clone(), MsgType::prod(b.clone(), c.clone())),
            dst: MsgType::prod(MsgType::prod(a.clone(), b.clone()), c.clone()),
            pattern: Pattern::pair(pa, Pattern::pair(pb, pc)),
            body: MsgTerm::pair(MsgTerm::pair(ta, tb), tc),
        }
    }

    /// `l* : I * A → A`
    pub fn lunit(a: &MsgType) -> MsgMap {
        let (pa, ta) = crate::msg::identity_term(a);
        MsgMap {
            src: MsgType::prod(MsgType::Unit, a.clone()),
            dst: a.clone(),
            pattern: Pattern::pair(Pattern::Unit, pa),
            body: ta,
        }
    }

    pub fn lunit_inv(a: &MsgType) -> MsgMap {
        let (pa, ta) = crate::msg::identity_term(a);
        MsgMap {
            src: a.clone(),
            dst: MsgType::prod(MsgType::Unit, a.clone()),
            pattern: pa,
            body: MsgTerm::pair(MsgTerm::UnitVal, ta),
        }
    }

    /// `r* : A * I → A`
    pub fn runit(a: &MsgType) -> MsgMap {
        let (pa, ta) = crate::msg::identity_term(a);
        MsgMap {
            src: MsgType::prod(a.clone(), MsgType::Unit),
            dst: a.clone(),
            pattern: Pattern::pair(pa, Pattern::Unit),
            body: ta,
        }
    }

    pub fn runit_inv(a: &MsgType) -> MsgMap {
        let (pa, ta) = crate::msg::identity_term(a);
        MsgMap {
            src: a.clone(),
            dst: MsgType::prod(a.clone(), MsgType::Unit),
            pattern: pa,
            body: MsgTerm::pair(ta, MsgTerm::UnitVal),
        }
    }

    /// Diagrammatic composition `self ; other`.
    pub fn then(&self, other: &MsgMap) -> MsgMap {
        assert_eq!(self.dst, other.src, "message maps do not compose");
        let mut gen = NameGen::new();
        let mut own: std::collections::BTreeSet<Name> = self.body.all_names();
        own.extend(self.pattern.vars());
        gen.reserve_all(own.iter());
        let mut theirs = other.body.all_names();
        theirs.extend(other.pattern.vars());
        let mut map = BTreeMap::new();
        for n in theirs.iter() {
            if !gen.try_reserve(n) {
                map.insert(n.clone(), gen.fresh(n));
            }
        }
        let (opat, obody) = rename_msg_map(&other.pattern, &other.body, &map);
        MsgMap {
            src: self.src.clone(),
            dst: other.dst.clone(),
            pattern: self.pattern.clone(),
            body: MsgTerm::subst(opat, obody, self.body.clone()),
        }
    }
}

fn rename_msg_map(
    pat: &Pattern,
    body: &MsgTerm,
    map: &BTreeMap<Name, Name>,
) -> (Pattern, MsgTerm) {
    fn rp(p: &Pattern, map: &BTreeMap<Name, Name>) -> Pattern {
        match p {
            Pattern::Var(n) => Pattern::Var(map.get(n).cloned().unwrap_or_else(|| n.clone())),
            Pattern::Pair(a, b) => Pattern::pair(rp(a, map), rp(b, map)),
            Pattern::Unit => Pattern::Unit,
        }
    }
    let mut body = body.clone();
    for (from, to) in map {
        body = crate::msg::rename_free(&body, from, to);
    }
    (rp(pat, map), body)
}

/// A process with one input and one output channel.
#[derive(Debug, Clone)]
pub struct ProcMap {
    pub src: ProcType,
    pub dst: ProcType,
    pub input: Name,
    pub output: Name,
    pub term: Proc,
}

impl ProcMap {
    pub fn new(src: ProcType, dst: ProcType, input: &str, output: &str, term: Proc) -> ProcMap {
        ProcMap {
            src,
            dst,
            input: input.to_string(),
            output: output.to_string(),
            term,
        }
    }

    pub fn identity(x: &ProcType) -> ProcMap {
        let term = crate::pmsg::identity_proc(x, "i", "o");
        ProcMap::new(x.clone(), x.clone(), "i", "o", term)
    }

    pub fn judgement(&self) -> Judgement {
        Judgement::map(&self.input, self.src.clone(), &self.output, self.dst.clone())
    }

    /// Rename so that the endpoints carry the given names and nothing else
    /// in the term collides with them.
    pub fn with_endpoints(&self, input: &str, output: &str) -> ProcMap {
        let mut names = self.term.all_names();
        names.insert(self.input.clone());
        names.insert(self.output.clone());
        let mut gen = NameGen::avoiding(names.iter().cloned());
        gen.reserve(input);
        gen.reserve(output);
        let mut pre = BTreeMap::new();
        for target in [input, output] {
            if names.contains(target) && self.input != target && self.output != target {
                pre.insert(target.to_string(), gen.fresh(target));
            }
        }
        let term = if pre.is_empty() {
            self.term.clone()
        } else {
            crate::pmsg::rename_all_names(&self.term, &pre)
        };
        let mut map = BTreeMap::new();
        if self.input != input {
            map.insert(self.input.clone(), input.to_string());
        }
        if self.output != output {
            map.insert(self.output.clone(), output.to_string());
        }
        let term = if map.is_empty() {
            term
        } else {
            crate::pmsg::rename_all_names(&term, &map)
        };
        ProcMap::new(self.src.clone(), self.dst.clone(), input, output, term)
    }

    /// Diagrammatic composition `self ; other` by cutting the output of
    /// `self` into the input of `other`.
    pub fn then(&self, other: &ProcMap) -> ProcMap {
        assert_eq!(
            self.dst, other.src,
            "process maps do not compose: {} vs {}",
            self.dst, other.src
        );
        let mut gen = NameGen::avoiding(self.term.all_names());
        gen.reserve(&self.input);
        gen.reserve(&self.output);
        let mut other_names = other.term.all_names();
        other_names.insert(other.input.clone());
        other_names.insert(other.output.clone());
        let mut map = BTreeMap::new();
        for n in &other_names {
            if !gen.try_reserve(n) {
                map.insert(n.clone(), gen.fresh(n));
            }
        }
        let oterm = crate::pmsg::rename_all_names(&other.term, &map);
        let oin = map
            .get(&other.input)
            .cloned()
            .unwrap_or_else(|| other.input.clone());
        let oout = map
            .get(&other.output)
            .cloned()
            .unwrap_or_else(|| other.output.clone());
        ProcMap::new(
            self.src.clone(),
            other.dst.clone(),
            &self.input,
            &oout,
            Proc::cut(self.term.clone(), &self.output, &oin, oterm),
        )
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &ProcMap) -> ProcMap {
        let mut gen = NameGen::new();
        let i = gen.fresh("i");
        let o = gen.fresh("o");
        let i1 = gen.fresh("i");
        let i2 = gen.fresh("i");
        let o1 = gen.fresh("o");
        let o2 = gen.fresh("o");
        let f = self.relabelled(&i1, &o1, &mut gen);
        let g = other.relabelled(&i2, &o2, &mut gen);
        let term = Proc::split(&i, &i1, &i2, Proc::fork(&o, &o1, f, &o2, g));
        ProcMap::new(
            ProcType::tensor(self.src.clone(), other.src.clone()),
            ProcType::tensor(self.dst.clone(), other.dst.clone()),
            &i,
            &o,
            term,
        )
    }

    /// `self ⊕ other`.
    pub fn par(&self, other: &ProcMap) -> ProcMap {
        let mut gen = NameGen::new();
        let i = gen.fresh("i");
        let o = gen.fresh("o");
        let i1 = gen.fresh("i");
        let i2 = gen.fresh("i");
        let o1 = gen.fresh("o");
        let o2 = gen.fresh("o");
        let f = self.relabelled(&i1, &o1, &mut gen);
        let g = other.relabelled(&i2, &o2, &mut gen);
        let term = Proc::split(&o, &o1, &o2, Proc::fork(&i, &i1, f, &i2, g));
        ProcMap::new(
            ProcType::par(self.src.clone(), other.src.clone()),
            ProcType::par(self.dst.clone(), other.dst.clone()),
            &i,
            &o,
            term,
        )
    }

    /// The covariant action on maps: `f ∘ s : (A ∘ X) → (B ∘ Y)` for
    /// `f : A → B` and `s : X → Y`, as get-then-put.
    pub fn act(f: &MsgMap, s: &ProcMap) -> ProcMap {
        let mut gen = NameGen::new();
        let i = gen.fresh("i");
        let o = gen.fresh("o");
        let (pat, body) = freshen_msg_map(f, &mut gen);
        let inner = s.relabelled(&i, &o, &mut gen);
        let term = Proc::get(&i, pat, Proc::put(&o, body, inner));
        ProcMap::new(
            ProcType::act(f.src.clone(), s.src.clone()),
            ProcType::act(f.dst.clone(), s.dst.clone()),
            &i,
            &o,
            term,
        )
    }

    /// The contravariant action on maps: `f • s : (B • X) → (A • Y)`.
    pub fn coact(f: &MsgMap, s: &ProcMap) -> ProcMap {
        let mut gen = NameGen::new();
        let i = gen.fresh("i");
        let o = gen.fresh("o");
        let (pat, body) = freshen_msg_map(f, &mut gen);
        let inner = s.relabelled(&i, &o, &mut gen);
        let term = Proc::get(&o, pat, Proc::put(&i, body, inner));
        ProcMap::new(
            ProcType::coact(f.dst.clone(), s.src.clone()),
            ProcType::coact(f.src.clone(), s.dst.clone()),
            &i,
            &o,
            term,
        )
    }

    /// Swap input and output roles; the dual map between the dual types.
    pub fn dual(&self) -> ProcMap {
        ProcMap {
            src: self.dst.dual(),
            dst: self.src.dual(),
            input: self.output.clone(),
            output: self.input.clone(),
            term: dualize(&self.term),
        }
    }

    /// The underlying term with the endpoints renamed and all internals
    /// freshened through `gen`.
    fn relabelled(&self, input: &str, output: &str, gen: &mut NameGen) -> Proc {
        let mut map = BTreeMap::new();
        for n in self.term.all_names() {
            if n == self.input || n == self.output {
                continue;
            }
            if !gen.try_reserve(&n) {
                map.insert(n.clone(), gen.fresh(&n));
            }
        }
        map.insert(self.input.clone(), input.to_string());
        map.insert(self.output.clone(), output.to_string());
        crate::pmsg::rename_all_names(&self.term, &map)
    }

    /// Equality of maps, decided on canonical forms after endpoint
    /// alignment.
    pub fn eq(&self, other: &ProcMap) -> Equivalence {
        if self.src != other.src || self.dst != other.dst {
            return Equivalence::NotEqual;
        }
        let a = self.with_endpoints("cmp_in", "cmp_out");
        let b = other.with_endpoints("cmp_in", "cmp_out");
        proc_eq(&a.term, &b.term)
    }

    /// Canonical normal form of the underlying term (endpoint-aligned).
    pub fn canonical(&self) -> Proc {
        let a = self.with_endpoints("cmp_in", "cmp_out");
        match normalize_proc(&a.term) {
            Ok(t) => alpha_canonical_proc(&t),
            Err(_) => alpha_canonical_proc(&a.term),
        }
    }
}

fn freshen_msg_map(f: &MsgMap, gen: &mut NameGen) -> (Pattern, MsgTerm) {
    let mut names = f.body.all_names();
    names.extend(f.pattern.vars());
    let mut map = BTreeMap::new();
    for n in &names {
        if !gen.try_reserve(n) {
            map.insert(n.clone(), gen.fresh(n));
        }
    }
    rename_msg_map(&f.pattern, &f.body, &map)
}

/// The named generating maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapName {
    /// X → X ⊕ ⊥
    RPar,
    /// X → ⊥ ⊕ X
    LPar,
    /// X ⊕ (Y ⊕ Z) → (X ⊕ Y) ⊕ Z
    APar,
    /// X ⊕ Y → Y ⊕ X
    CPar,
    /// X ⊗ ⊤ → X
    RTensor,
    /// ⊤ ⊗ X → X
    LTensor,
    /// (X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)
    ATensor,
    /// X ⊗ Y → Y ⊗ X
    CTensor,
    /// I ∘ X → X
    UAct,
    /// X → I • X
    UCoact,
    /// (A * B) ∘ X → A ∘ (B ∘ X)
    AStarAct,
    /// A • (B • X) → (A * B) • X
    AStarCoact,
    /// A ∘ (X ⊗ Y) → (A ∘ X) ⊗ Y
    AActTensor,
    /// (A • X) ⊕ Y → A • (X ⊕ Y)
    ACoactPar,
    /// X ⊗ (Y ⊕ Z) → (X ⊗ Y) ⊕ Z
    DTensorPar,
    /// (Y ⊕ Z) ⊗ X → Y ⊕ (Z ⊗ X)
    DParTensor,
    /// A ∘ (X ⊕ Y) → (A ∘ X) ⊕ Y
    DActPar,
    /// (A • X) ⊗ Y → A • (X ⊗ Y)
    DCoactTensor,
    /// A ∘ (B • X) → B • (A ∘ X)
    DActCoact,
    /// X → A • (A ∘ X)
    N,
    /// A ∘ (A • X) → X
    E,
    /// (A * B) ∘ X → B ∘ (A ∘ X)
    AStarActP,
    /// B • (A • X) → (A * B) • X
    AStarCoactP,
    /// A ∘ (X ⊗ Y) → X ⊗ (A ∘ Y)
    AActTensorP,
    /// X ⊕ (A • Y) → A • (X ⊕ Y)
    ACoactParP,
    /// A ∘ (X ⊕ Y) → X ⊕ (A ∘ Y)
    DActParP,
    /// X ⊗ (A • Y) → A • (X ⊗ Y)
    DCoactTensorP,
    /// X ⊗ (Y ⊕ Z) → Y ⊕ (X ⊗ Z)
    DTensorParP,
    /// (Y ⊕ Z) ⊗ X → (Y ⊗ X) ⊕ Z
    DParTensorP,
    RParInv,
    LParInv,
    RTensorInv,
    LTensorInv,
    ATensorInv,
    AParInv,
    UActInv,
    UCoactInv,
    AStarActInv,
    AStarCoactInv,
    AActTensorInv,
    ACoactParInv,
}

impl MapName {
    pub const ALL: &'static [MapName] = &[
        MapName::RPar,
        MapName::LPar,
        MapName::APar,
        MapName::CPar,
        MapName::RTensor,
        MapName::LTensor,
        MapName::ATensor,
        MapName::CTensor,
        MapName::UAct,
        MapName::UCoact,
        MapName::AStarAct,
        MapName::AStarCoact,
        MapName::AActTensor,
        MapName::ACoactPar,
        MapName::DTensorPar,
        MapName::DParTensor,
        MapName::DActPar,
        MapName::DCoactTensor,
        MapName::DActCoact,
        MapName::N,
        MapName::E,
        MapName::AStarActP,
        MapName::AStarCoactP,
        MapName::AActTensorP,
        MapName::ACoactParP,
        MapName::DActParP,
        MapName::DCoactTensorP,
        MapName::DTensorParP,
        MapName::DParTensorP,
        MapName::RParInv,
        MapName::LParInv,
        MapName::RTensorInv,
        MapName::LTensorInv,
        MapName::ATensorInv,
        MapName::AParInv,
        MapName::UActInv,
        MapName::UCoactInv,
        MapName::AStarActInv,
        MapName::AStarCoactInv,
        MapName::AActTensorInv,
        MapName::ACoactParInv,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            MapName::RPar => "r_par",
            MapName::LPar => "l_par",
            MapName::APar => "a_par",
            MapName::CPar => "c_par",
            MapName::RTensor => "r_tensor",
            MapName::LTensor => "l_tensor",
            MapName::ATensor => "a_tensor",
            MapName::CTensor => "c_tensor",
            MapName::UAct => "u_act",
            MapName::UCoact => "u_coact",
            MapName::AStarAct => "a_star_act",
            MapName::AStarCoact => "a_star_coact",
            MapName::AActTensor => "a_act_tensor",
            MapName::ACoactPar => "a_coact_par",
            MapName::DTensorPar => "d_tensor_par",
            MapName::DParTensor => "d_par_tensor",
            MapName::DActPar => "d_act_par",
            MapName::DCoactTensor => "d_coact_tensor",
            MapName::DActCoact => "d_act_coact",
            MapName::N => "n",
            MapName::E => "e",
            MapName::AStarActP => "a_star_act_p",
            MapName::AStarCoactP => "a_star_coact_p",
            MapName::AActTensorP => "a_act_tensor_p",
            MapName::ACoactParP => "a_coact_par_p",
            MapName::DActParP => "d_act_par_p",
            MapName::DCoactTensorP => "d_coact_tensor_p",
            MapName::DTensorParP => "d_tensor_par_p",
            MapName::DParTensorP => "d_par_tensor_p",
            MapName::RParInv => "r_par_inv",
            MapName::LParInv => "l_par_inv",
            MapName::RTensorInv => "r_tensor_inv",
            MapName::LTensorInv => "l_tensor_inv",
            MapName::ATensorInv => "a_tensor_inv",
            MapName::AParInv => "a_par_inv",
            MapName::UActInv => "u_act_inv",
            MapName::UCoactInv => "u_coact_inv",
            MapName::AStarActInv => "a_star_act_inv",
            MapName::AStarCoactInv => "a_star_coact_inv",
            MapName::AActTensorInv => "a_act_tensor_inv",
            MapName::ACoactParInv => "a_coact_par_inv",
        }
    }

    /// (message parameters, process parameters) expected.
    pub fn arity(&self) -> (usize, usize) {
        use MapName::*;
        match self {
            RPar | LPar | RTensor | LTensor | RParInv | LParInv | RTensorInv | LTensorInv
            | UAct | UCoact | UActInv | UCoactInv => (0, 1),
            APar | ATensor | AParInv | ATensorInv | DTensorPar | DParTensor | DTensorParP
            | DParTensorP => (0, 3),
            CPar | CTensor => (0, 2),
            AStarAct | AStarCoact | AStarActP | AStarCoactP | AStarActInv | AStarCoactInv
            | DActCoact => (2, 1),
            AActTensor | ACoactPar | AActTensorP | ACoactParP | AActTensorInv | ACoactParInv
            | DActPar | DCoactTensor | DActParP | DCoactTensorP => (1, 2),
            N | E => (1, 1),
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapName::ALL
            .iter()
            .find(|m| m.as_str() == s)
            .copied()
            .ok_or_else(|| format!("unknown map name `{}`", s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    UnknownMapName(String),
    Arity {
        name: &'static str,
        msg_expected: usize,
        proc_expected: usize,
    },
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::UnknownMapName(n) => write!(f, "unknown map name `{}`", n),
            MapError::Arity {
                name,
                msg_expected,
                proc_expected,
            } => write!(
                f,
                "map `{}` expects {} message and {} process parameters",
                name, msg_expected, proc_expected
            ),
        }
    }
}

impl std::error::Error for MapError {}

/// Emit the named generating map at the given type parameters.
pub fn coherence_map(
    name: MapName,
    msg: &[MsgType],
    proc: &[ProcType],
) -> Result<ProcMap, MapError> {
    let (me, pe) = name.arity();
    if msg.len() != me || proc.len() != pe {
        return Err(MapError::Arity {
            name: name.as_str(),
            msg_expected: me,
            proc_expected: pe,
        });
    }
    let m = |i: usize| &msg[i];
    let p = |i: usize| &proc[i];
    Ok(match name {
        MapName::RPar => r_par(p(0)),
        MapName::LPar => l_par(p(0)),
        MapName::APar => a_par(p(0), p(1), p(2)),
        MapName::CPar => c_par(p(0), p(1)),
        MapName::RTensor => r_tensor(p(0)),
        MapName::LTensor => l_tensor(p(0)),
        MapName::ATensor => a_tensor(p(0), p(1), p(2)),
        MapName::CTensor => c_tensor(p(0), p(1)),
        MapName::UAct => u_act(p(0)),
        MapName::UCoact => u_coact(p(0)),
        MapName::AStarAct => a_star_act(m(0), m(1), p(0)),
        MapName::AStarCoact => a_star_coact(m(0), m(1), p(0)),
        MapName::AActTensor => a_act_tensor(m(0), p(0), p(1)),
        MapName::ACoactPar => a_coact_par(m(0), p(0), p(1)),
        MapName::DTensorPar => d_tensor_par(p(0), p(1), p(2)),
        MapName::DParTensor => d_par_tensor(p(0), p(1), p(2)),
        MapName::DActPar => d_act_par(m(0), p(0), p(1)),
        MapName::DCoactTensor => d_coact_tensor(m(0), p(0), p(1)),
        MapName::DActCoact => d_act_coact(m(0), m(1), p(0)),
        MapName::N => n_map(m(0), p(0)),
        MapName::E => e_map(m(0), p(0)),
        MapName::AStarActP => a_star_act_p(m(0), m(1), p(0)),
        MapName::AStarCoactP => a_star_coact_p(m(0), m(1), p(0)),
        MapName::AActTensorP => a_act_tensor_p(m(0), p(0), p(1)),
        MapName::ACoactParP => a_coact_par_p(m(0), p(0), p(1)),
        MapName::DActParP => d_act_par_p(m(0), p(0), p(1)),
        MapName::DCoactTensorP => d_coact_tensor_p(m(0), p(0), p(1)),
        MapName::DTensorParP => d_tensor_par_p(p(0), p(1), p(2)),
        MapName::DParTensorP => d_par_tensor_p(p(0), p(1), p(2)),
        MapName::RParInv => r_par_inv(p(0)),
        MapName::LParInv => l_par_inv(p(0)),
        MapName::RTensorInv => r_tensor_inv(p(0)),
        MapName::LTensorInv => l_tensor_inv(p(0)),
        MapName::ATensorInv => a_tensor_inv(p(0), p(1), p(2)),
        MapName::AParInv => a_par_inv(p(0), p(1), p(2)),
        MapName::UActInv => u_act_inv(p(0)),
        MapName::UCoactInv => u_coact_inv(p(0)),
        MapName::AStarActInv => a_star_act_inv(m(0), m(1), p(0)),
        MapName::AStarCoactInv => a_star_coact_inv(m(0), m(1), p(0)),
        MapName::AActTensorInv => a_act_tensor_inv(m(0), p(0), p(1)),
        MapName::ACoactParInv => a_coact_par_inv(m(0), p(0), p(1)),
    })
}

fn idp(x: &ProcType, i: &str, o: &str, gen: &mut NameGen) -> Proc {
    crate::pmsg::identity_proc_named(x, i, o, gen)
}

fn avoid(names: &[&str]) -> NameGen {
    NameGen::avoiding(names.iter().map(|s| s.to_string()))
}

/// `r⊕ : X → X ⊕ ⊥`, the term `β⟨β1,β2⟩·β2⟨⟩·(α =_X β1)`.
pub fn r_par(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "o1", "o2"]);
    let term = Proc::split("o", "o1", "o2", Proc::close("o2", idp(x, "i", "o1", &mut gen)));
    ProcMap::new(
        x.clone(),
        ProcType::par(x.clone(), ProcType::Bot),
        "i",
        "o",
        term,
    )
}

pub fn l_par(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "o1", "o2"]);
    let term = Proc::split("o", "o1", "o2", Proc::close("o1", idp(x, "i", "o2", &mut gen)));
    ProcMap::new(
        x.clone(),
        ProcType::par(ProcType::Bot, x.clone()),
        "i",
        "o",
        term,
    )
}

pub fn r_par_inv(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2"]);
    let term = Proc::fork("i", "i1", idp(x, "i1", "o", &mut gen), "i2", Proc::end("i2"));
    ProcMap::new(
        ProcType::par(x.clone(), ProcType::Bot),
        x.clone(),
        "i",
        "o",
        term,
    )
}

pub fn l_par_inv(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2"]);
    let term = Proc::fork("i", "i1", Proc::end("i1"), "i2", idp(x, "i2", "o", &mut gen));
    ProcMap::new(
        ProcType::par(ProcType::Bot, x.clone()),
        x.clone(),
        "i",
        "o",
        term,
    )
}

/// `l⊗ : ⊤ ⊗ X → X`, the term `α⟨α1,α2⟩·α1⟨⟩·(α2 =_X β)`.
pub fn l_tensor(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2"]);
    let term = Proc::split("i", "i1", "i2", Proc::close("i1", idp(x, "i2", "o", &mut gen)));
    ProcMap::new(
        ProcType::tensor(ProcType::Top, x.clone()),
        x.clone(),
        "i",
        "o",
        term,
    )
}

/// `r⊗ : X ⊗ ⊤ → X`, the term `α⟨α1,α2⟩·α2⟨⟩·(α1 =_X β)`.
pub fn r_tensor(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2"]);
    let term = Proc::split("i", "i1", "i2", Proc::close("i2", idp(x, "i1", "o", &mut gen)));
    ProcMap::new(
        ProcType::tensor(x.clone(), ProcType::Top),
        x.clone(),
        "i",
        "o",
        term,
    )
}

pub fn l_tensor_inv(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "o1", "o2"]);
    let term = Proc::fork("o", "o1", Proc::end("o1"), "o2", idp(x, "i", "o2", &mut gen));
    ProcMap::new(
        x.clone(),
        ProcType::tensor(ProcType::Top, x.clone()),
        "i",
        "o",
        term,
    )
}

pub fn r_tensor_inv(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "o1", "o2"]);
    let term = Proc::fork("o", "o1", idp(x, "i", "o1", &mut gen), "o2", Proc::end("o2"));
    ProcMap::new(
        x.clone(),
        ProcType::tensor(x.clone(), ProcType::Top),
        "i",
        "o",
        term,
    )
}

/// `a⊗ : (X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`.
pub fn a_tensor(x: &ProcType, y: &ProcType, z: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "i11", "i12", "o1", "o2", "o21", "o22"]);
    let term = Proc::split(
        "i",
        "i1",
        "i2",
        Proc::split(
            "i1",
            "i11",
            "i12",
            Proc::fork(
                "o",
                "o1",
                idp(x, "i11", "o1", &mut gen),
                "o2",
                Proc::fork(
                    "o2",
                    "o21",
                    idp(y, "i12", "o21", &mut gen),
                    "o22",
                    idp(z, "i2", "o22", &mut gen),
                ),
            ),
        ),
    );
    ProcMap::new(
        ProcType::tensor(ProcType::tensor(x.clone(), y.clone()), z.clone()),
        ProcType::tensor(x.clone(), ProcType::tensor(y.clone(), z.clone())),
        "i",
        "o",
        term,
    )
}

pub fn a_tensor_inv(x: &ProcType, y: &ProcType, z: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "i21", "i22", "o1", "o2", "o11", "o12"]);
    let term = Proc::split(
        "i",
        "i1",
        "i2",
        Proc::split(
            "i2",
            "i21",
            "i22",
            Proc::fork(
                "o",
                "o1",
                Proc::fork(
                    "o1",
                    "o11",
                    idp(x, "i1", "o11", &mut gen),
                    "o12",
                    idp(y, "i21", "o12", &mut gen),
                ),
                "o2",
                idp(z, "i22", "o2", &mut gen),
            ),
        ),
    );
    ProcMap::new(
        ProcType::tensor(x.clone(), ProcType::tensor(y.clone(), z.clone())),
        ProcType::tensor(ProcType::tensor(x.clone(), y.clone()), z.clone()),
        "i",
        "o",
        term,
    )
}

/// `a⊕ : X ⊕ (Y ⊕ Z) → (X ⊕ Y) ⊕ Z`.
pub fn a_par(x: &ProcType, y: &ProcType, z: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "i21", "i22", "o1", "o2", "o11", "o12"]);
    let term = Proc::split(
        "o",
        "o1",
        "o2",
        Proc::split(
            "o1",
            "o11",
            "o12",
            Proc::fork(
                "i",
                "i1",
                idp(x, "i1", "o11", &mut gen),
                "i2",
                Proc::fork(
                    "i2",
                    "i21",
                    idp(y, "i21", "o12", &mut gen),
                    "i22",
                    idp(z, "i22", "o2", &mut gen),
                ),
            ),
        ),
    );
    ProcMap::new(
        ProcType::par(x.clone(), ProcType::par(y.clone(), z.clone())),
        ProcType::par(ProcType::par(x.clone(), y.clone()), z.clone()),
        "i",
        "o",
        term,
    )
}

pub fn a_par_inv(x: &ProcType, y: &ProcType, z: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "i11", "i12", "o1", "o2", "o21", "o22"]);
    let term = Proc::split(
        "o",
        "o1",
        "o2",
        Proc::split(
            "o2",
            "o21",
            "o22",
            Proc::fork(
                "i",
                "i1",
                Proc::fork(
                    "i1",
                    "i11",
                    idp(x, "i11", "o1", &mut gen),
                    "i12",
                    idp(y, "i12", "o21", &mut gen),
                ),
                "i2",
                idp(z, "i2", "o22", &mut gen),
            ),
        ),
    );
    ProcMap::new(
        ProcType::par(ProcType::par(x.clone(), y.clone()), z.clone()),
        ProcType::par(x.clone(), ProcType::par(y.clone(), z.clone())),
        "i",
        "o",
        term,
    )
}

/// `c⊗ : X ⊗ Y → Y ⊗ X`, the term
/// `α⟨α1,α2⟩·β case(β1 ⇒ α2 =_Y β1 | β2 ⇒ α1 =_X β2)`.
pub fn c_tensor(x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let term = Proc::split(
        "i",
        "i1",
        "i2",
        Proc::fork(
            "o",
            "o1",
            idp(y, "i2", "o1", &mut gen),
            "o2",
            idp(x, "i1", "o2", &mut gen),
        ),
    );
    ProcMap::new(
        ProcType::tensor(x.clone(), y.clone()),
        ProcType::tensor(y.clone(), x.clone()),
        "i",
        "o",
        term,
    )
}

/// `c⊕ : X ⊕ Y → Y ⊕ X`.
pub fn c_par(x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let term = Proc::split(
        "o",
        "o1",
        "o2",
        Proc::fork(
            "i",
            "i1",
            idp(x, "i1", "o2", &mut gen),
            "i2",
            idp(y, "i2", "o1", &mut gen),
        ),
    );
    ProcMap::new(
        ProcType::par(x.clone(), y.clone()),
        ProcType::par(y.clone(), x.clone()),
        "i",
        "o",
        term,
    )
}

/// `u∘ : I ∘ X → X`, the term `α⟨()⟩·(α =_X β)`.
pub fn u_act(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let term = Proc::get("i", Pattern::Unit, idp(x, "i", "o", &mut gen));
    ProcMap::new(
        ProcType::act(MsgType::Unit, x.clone()),
        x.clone(),
        "i",
        "o",
        term,
    )
}

pub fn u_act_inv(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let term = Proc::put("o", MsgTerm::UnitVal, idp(x, "i", "o", &mut gen));
    ProcMap::new(
        x.clone(),
        ProcType::act(MsgType::Unit, x.clone()),
        "i",
        "o",
        term,
    )
}

/// `u• : X → I • X`.
pub fn u_coact(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let term = Proc::get("o", Pattern::Unit, idp(x, "i", "o", &mut gen));
    ProcMap::new(
        x.clone(),
        ProcType::coact(MsgType::Unit, x.clone()),
        "i",
        "o",
        term,
    )
}

pub fn u_coact_inv(x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let term = Proc::put("i", MsgTerm::UnitVal, idp(x, "i", "o", &mut gen));
    ProcMap::new(
        ProcType::coact(MsgType::Unit, x.clone()),
        x.clone(),
        "i",
        "o",
        term,
    )
}

/// `a*∘ : (A * B) ∘ X → A ∘ (B ∘ X)`, the term
/// `α⟨(x,y)⟩·β[x]·β[y]·(α =_X β)`.
pub fn a_star_act(a: &MsgType, b: &MsgType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let (pb, tb) = identity_term_in(b, &mut gen);
    let term = Proc::get(
        "i",
        Pattern::pair(pa, pb),
        Proc::put("o", ta, Proc::put("o", tb, idp(x, "i", "o", &mut gen))),
    );
    ProcMap::new(
        ProcType::act(MsgType::prod(a.clone(), b.clone()), x.clone()),
        ProcType::act(a.clone(), ProcType::act(b.clone(), x.clone())),
        "i",
        "o",
        term,
    )
}

pub fn a_star_act_inv(a: &MsgType, b: &MsgType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let (pb, tb) = identity_term_in(b, &mut gen);
    let term = Proc::get(
        "i",
        pa,
        Proc::get(
            "i",
            pb,
            Proc::put("o", MsgTerm::pair(ta, tb), idp(x, "i", "o", &mut gen)),
        ),
    );
    ProcMap::new(
        ProcType::act(a.clone(), ProcType::act(b.clone(), x.clone())),
        ProcType::act(MsgType::prod(a.clone(), b.clone()), x.clone()),
        "i",
        "o",
        term,
    )
}

/// `a*• : A • (B • X) → (A * B) • X`.
pub fn a_star_coact(a: &MsgType, b: &MsgType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let (pb, tb) = identity_term_in(b, &mut gen);
    let term = Proc::get(
        "o",
        Pattern::pair(pa, pb),
        Proc::put("i", ta, Proc::put("i", tb, idp(x, "i", "o", &mut gen))),
    );
    ProcMap::new(
        ProcType::coact(a.clone(), ProcType::coact(b.clone(), x.clone())),
        ProcType::coact(MsgType::prod(a.clone(), b.clone()), x.clone()),
        "i",
        "o",
        term,
    )
}

pub fn a_star_coact_inv(a: &MsgType, b: &MsgType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let (pb, tb) = identity_term_in(b, &mut gen);
    let term = Proc::get(
        "o",
        pa,
        Proc::get(
            "o",
            pb,
            Proc::put("i", MsgTerm::pair(ta, tb), idp(x, "i", "o", &mut gen)),
        ),
    );
    ProcMap::new(
        ProcType::coact(MsgType::prod(a.clone(), b.clone()), x.clone()),
        ProcType::coact(a.clone(), ProcType::coact(b.clone(), x.clone())),
        "i",
        "o",
        term,
    )
}

/// `a∘⊗ : A ∘ (X ⊗ Y) → (A ∘ X) ⊗ Y`, the term
/// `α⟨x⟩·α⟨α1,α2⟩·β case(β1 ⇒ β1[x]·α1 =_X β1 | β2 ⇒ α2 =_Y β2)`.
pub fn a_act_tensor(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::get(
        "i",
        pa,
        Proc::split(
            "i",
            "i1",
            "i2",
            Proc::fork(
                "o",
                "o1",
                Proc::put("o1", ta, idp(x, "i1", "o1", &mut gen)),
                "o2",
                idp(y, "i2", "o2", &mut gen),
            ),
        ),
    );
    ProcMap::new(
        ProcType::act(a.clone(), ProcType::tensor(x.clone(), y.clone())),
        ProcType::tensor(ProcType::act(a.clone(), x.clone()), y.clone()),
        "i",
        "o",
        term,
    )
}

/// `(a∘⊗)⁻¹`, the printed inverse
/// `α⟨α1,α2⟩·α1⟨x⟩·β[x]·β case(β1 ⇒ α1 =_X β1 | β2 ⇒ α2 =_Y β2)`.
pub fn a_act_tensor_inv(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::split(
        "i",
        "i1",
        "i2",
        Proc::get(
            "i1",
            pa,
            Proc::put(
                "o",
                ta,
                Proc::fork(
                    "o",
                    "o1",
                    idp(x, "i1", "o1", &mut gen),
                    "o2",
                    idp(y, "i2", "o2", &mut gen),
                ),
            ),
        ),
    );
    ProcMap::new(
        ProcType::tensor(ProcType::act(a.clone(), x.clone()), y.clone()),
        ProcType::act(a.clone(), ProcType::tensor(x.clone(), y.clone())),
        "i",
        "o",
        term,
    )
}

/// `a•⊕ : (A • X) ⊕ Y → A • (X ⊕ Y)`.
pub fn a_coact_par(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::get(
        "o",
        pa,
        Proc::split(
            "o",
            "o1",
            "o2",
            Proc::fork(
                "i",
                "i1",
                Proc::put("i1", ta, idp(x, "i1", "o1", &mut gen)),
                "i2",
                idp(y, "i2", "o2", &mut gen),
            ),
        ),
    );
    ProcMap::new(
        ProcType::par(ProcType::coact(a.clone(), x.clone()), y.clone()),
        ProcType::coact(a.clone(), ProcType::par(x.clone(), y.clone())),
        "i",
        "o",
        term,
    )
}

pub fn a_coact_par_inv(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::split(
        "o",
        "o1",
        "o2",
        Proc::get(
            "o1",
            pa,
            Proc::put(
                "i",
                ta,
                Proc::fork(
                    "i",
                    "i1",
                    idp(x, "i1", "o1", &mut gen),
                    "i2",
                    idp(y, "i2", "o2", &mut gen),
                ),
            ),
        ),
    );
    ProcMap::new(
        ProcType::coact(a.clone(), ProcType::par(x.clone(), y.clone())),
        ProcType::par(ProcType::coact(a.clone(), x.clone()), y.clone()),
        "i",
        "o",
        term,
    )
}

/// `d⊗⊕ : X ⊗ (Y ⊕ Z) → (X ⊗ Y) ⊕ Z`.
pub fn d_tensor_par(x: &ProcType, y: &ProcType, z: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "i21", "i22", "o1", "o2", "o11", "o12"]);
    let term = Proc::split(
        "o",
        "o1",
        "o2",
        Proc::split(
            "i",
            "i1",
            "i2",
            Proc::fork(
                "i2",
                "i21",
                Proc::fork(
                    "o1",
                    "o11",
                    idp(x, "i1", "o11", &mut gen),
                    "o12",
                    idp(y, "i21", "o12", &mut gen),
                ),
                "i22",
                idp(z, "i22", "o2", &mut gen),
            ),
        ),
    );
    ProcMap::new(
        ProcType::tensor(x.clone(), ProcType::par(y.clone(), z.clone())),
        ProcType::par(ProcType::tensor(x.clone(), y.clone()), z.clone()),
        "i",
        "o",
        term,
    )
}

/// `d⊕⊗ : (Y ⊕ Z) ⊗ X → Y ⊕ (Z ⊗ X)`.
pub fn d_par_tensor(y: &ProcType, z: &ProcType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "i11", "i12", "o1", "o2", "o21", "o22"]);
    let term = Proc::split(
        "o",
        "o1",
        "o2",
        Proc::split(
            "i",
            "i1",
            "i2",
            Proc::fork(
                "i1",
                "i11",
                idp(y, "i11", "o1", &mut gen),
                "i12",
                Proc::fork(
                    "o2",
                    "o21",
                    idp(z, "i12", "o21", &mut gen),
                    "o22",
                    idp(x, "i2", "o22", &mut gen),
                ),
            ),
        ),
    );
    ProcMap::new(
        ProcType::tensor(ProcType::par(y.clone(), z.clone()), x.clone()),
        ProcType::par(y.clone(), ProcType::tensor(z.clone(), x.clone())),
        "i",
        "o",
        term,
    )
}

/// `d∘⊕ : A ∘ (X ⊕ Y) → (A ∘ X) ⊕ Y`, the term
/// `β⟨β1,β2⟩·α⟨x⟩·β1[x]·α case(α1 ⇒ α1 =_X β1 | α2 ⇒ α2 =_Y β2)`.
pub fn d_act_par(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::split(
        "o",
        "o1",
        "o2",
        Proc::get(
            "i",
            pa,
            Proc::put(
                "o1",
                ta,
                Proc::fork(
                    "i",
                    "i1",
                    idp(x, "i1", "o1", &mut gen),
                    "i2",
                    idp(y, "i2", "o2", &mut gen),
                ),
            ),
        ),
    );
    ProcMap::new(
        ProcType::act(a.clone(), ProcType::par(x.clone(), y.clone())),
        ProcType::par(ProcType::act(a.clone(), x.clone()), y.clone()),
        "i",
        "o",
        term,
    )
}

/// `d•⊗ : (A • X) ⊗ Y → A • (X ⊗ Y)`.
pub fn d_coact_tensor(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o", "i1", "i2", "o1", "o2"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::split(
        "i",
        "i1",
        "i2",
        Proc::get(
            "o",
            pa,
            Proc::put(
                "i1",
                ta,
                Proc::fork(
                    "o",
                    "o1",
                    idp(x, "i1", "o1", &mut gen),
                    "o2",
                    idp(y, "i2", "o2", &mut gen),
                ),
            ),
        ),
    );
    ProcMap::new(
        ProcType::tensor(ProcType::coact(a.clone(), x.clone()), y.clone()),
        ProcType::coact(a.clone(), ProcType::tensor(x.clone(), y.clone())),
        "i",
        "o",
        term,
    )
}

/// `d∘• : A ∘ (B • X) → B • (A ∘ X)`, the term
/// `α⟨x⟩·β⟨y⟩·β[x]·α[y]·(α =_X β)`.
pub fn d_act_coact(a: &MsgType, b: &MsgType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let (pb, tb) = identity_term_in(b, &mut gen);
    let term = Proc::get(
        "i",
        pa,
        Proc::get(
            "o",
            pb,
            Proc::put("o", ta, Proc::put("i", tb, idp(x, "i", "o", &mut gen))),
        ),
    );
    ProcMap::new(
        ProcType::act(a.clone(), ProcType::coact(b.clone(), x.clone())),
        ProcType::coact(b.clone(), ProcType::act(a.clone(), x.clone())),
        "i",
        "o",
        term,
    )
}

/// `n : X → A • (A ∘ X)`, the term `β⟨x⟩·β[x]·(α =_X β)`.
pub fn n_map(a: &MsgType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::get("o", pa, Proc::put("o", ta, idp(x, "i", "o", &mut gen)));
    ProcMap::new(
        x.clone(),
        ProcType::coact(a.clone(), ProcType::act(a.clone(), x.clone())),
        "i",
        "o",
        term,
    )
}

/// `e : A ∘ (A • X) → X`.
pub fn e_map(a: &MsgType, x: &ProcType) -> ProcMap {
    let mut gen = avoid(&["i", "o"]);
    let (pa, ta) = identity_term_in(a, &mut gen);
    let term = Proc::get("i", pa, Proc::put("i", ta, idp(x, "i", "o", &mut gen)));
    ProcMap::new(
        ProcType::act(a.clone(), ProcType::coact(a.clone(), x.clone())),
        x.clone(),
        "i",
        "o",
        term,
    )
}

// Primed variants, generated from the base maps and the symmetry maps
// rather than transcribed by hand.

/// `a*∘′ : (A * B) ∘ X → B ∘ (A ∘ X)`.
pub fn a_star_act_p(a: &MsgType, b: &MsgType, x: &ProcType) -> ProcMap {
    ProcMap::act(&MsgMap::sym(a, b), &ProcMap::identity(x)).then(&a_star_act(b, a, x))
}

/// `a*•′ : B • (A • X) → (A * B) • X`.
pub fn a_star_coact_p(a: &MsgType, b: &MsgType, x: &ProcType) -> ProcMap {
    a_star_coact(b, a, x).then(&ProcMap::coact(&MsgMap::sym(a, b), &ProcMap::identity(x)))
}

/// `a∘⊗′ : A ∘ (X ⊗ Y) → X ⊗ (A ∘ Y)`.
pub fn a_act_tensor_p(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    ProcMap::act(&MsgMap::identity(a), &c_tensor(x, y))
        .then(&a_act_tensor(a, y, x))
        .then(&c_tensor(&ProcType::act(a.clone(), y.clone()), x))
}

/// `a•⊕′ : X ⊕ (A • Y) → A • (X ⊕ Y)`.
pub fn a_coact_par_p(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    c_par(x, &ProcType::coact(a.clone(), y.clone()))
        .then(&a_coact_par(a, y, x))
        .then(&ProcMap::coact(&MsgMap::identity(a), &c_par(y, x)))
}

/// `d∘⊕′ : A ∘ (X ⊕ Y) → X ⊕ (A ∘ Y)`.
pub fn d_act_par_p(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    ProcMap::act(&MsgMap::identity(a), &c_par(x, y))
        .then(&d_act_par(a, y, x))
        .then(&c_par(&ProcType::act(a.clone(), y.clone()), x))
}

/// `d•⊗′ : X ⊗ (A • Y) → A • (X ⊗ Y)`.
pub fn d_coact_tensor_p(a: &MsgType, x: &ProcType, y: &ProcType) -> ProcMap {
    c_tensor(x, &ProcType::coact(a.clone(), y.clone()))
        .then(&d_coact_tensor(a, y, x))
        .then(&ProcMap::coact(&MsgMap::identity(a), &c_tensor(y, x)))
}

/// `d⊗′⊕ : X ⊗ (Y ⊕ Z) → Y ⊕ (X ⊗ Z)`.
pub fn d_tensor_par_p(x: &ProcType, y: &ProcType, z: &ProcType) -> ProcMap {
    c_tensor(x, &ProcType::par(y.clone(), z.clone()))
        .then(&d_par_tensor(y, z, x))
        .then(&ProcMap::identity(y).par(&c_tensor(z, x)))
}

/// `d⊕′⊗ : (Y ⊕ Z) ⊗ X → (Y ⊗ X) ⊕ Z`.
pub fn d_par_tensor_p(y: &ProcType, z: &ProcType, x: &ProcType) -> ProcMap {
    c_tensor(&ProcType::par(y.clone(), z.clone()), x)
        .then(&d_tensor_par(x, y, z))
        .then(&c_tensor(x, y).par(&ProcMap::identity(z)))
}
