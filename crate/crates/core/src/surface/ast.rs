//! Surface abstract syntax, spans retained for diagnostics.

use super::lexer::Pos;
use crate::Name;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeAst {
    Named(Name, Pos),
    Unit,
    Zero,
    Prod(Box<TypeAst>, Box<TypeAst>),
    Sum(Box<TypeAst>, Box<TypeAst>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProcTypeAst {
    Named(Name, Pos),
    Top,
    Bot,
    Tensor(Box<ProcTypeAst>, Box<ProcTypeAst>),
    Par(Box<ProcTypeAst>, Box<ProcTypeAst>),
    Act(TypeAst, Box<ProcTypeAst>),
    CoAct(TypeAst, Box<ProcTypeAst>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternAst {
    Var(Name, Pos),
    Pair(Box<PatternAst>, Box<PatternAst>),
    Unit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Var(Name, Pos),
    /// `f(e, …)` or `Ctor e`; resolved against axioms and constructors.
    App(Name, Vec<ExprAst>, Pos),
    Unit,
    Pair(Box<ExprAst>, Box<ExprAst>),
    Inl(Box<ExprAst>),
    Inr(Box<ExprAst>),
    Absurd(Name, Pos),
    Case {
        scrutinee: Box<ExprAst>,
        scrutinee_pos: Pos,
        arms: Vec<ExprArm>,
    },
    Where {
        body: Box<ExprAst>,
        pat: PatternAst,
        arg: Box<ExprAst>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprArm {
    pub ctor: ArmCtor,
    pub pat: Option<PatternAst>,
    pub body: ExprAst,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArmCtor {
    Named(Name),
    Inl,
    Inr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtAst {
    Get {
        chan: Name,
        pat: PatternAst,
        body: Box<StmtAst>,
        pos: Pos,
    },
    Put {
        chan: Name,
        payload: ExprAst,
        body: Box<StmtAst>,
        pos: Pos,
    },
    Close {
        chan: Name,
        body: Box<StmtAst>,
        pos: Pos,
    },
    End {
        chan: Name,
        pos: Pos,
    },
    Split {
        chan: Name,
        c1: Name,
        c2: Name,
        body: Box<StmtAst>,
        pos: Pos,
    },
    Fork {
        chan: Name,
        c1: Name,
        left: Box<StmtAst>,
        c2: Name,
        right: Box<StmtAst>,
        pos: Pos,
    },
    Case {
        scrutinee: Box<ExprAst>,
        scrutinee_pos: Pos,
        arms: Vec<StmtArm>,
        pos: Pos,
    },
    Absurd {
        var: Name,
        pos: Pos,
    },
    Plug {
        left: Box<StmtAst>,
        right: Box<StmtAst>,
        out_chan: Name,
        in_chan: Name,
        pos: Pos,
    },
    Where {
        body: Box<StmtAst>,
        pat: PatternAst,
        arg: ExprAst,
        pos: Pos,
    },
    Identity {
        input: Name,
        output: Name,
        ty: ProcTypeAst,
        pos: Pos,
    },
    PrimCall {
        name: Name,
        msg_args: Vec<Name>,
        inputs: Vec<Name>,
        outputs: Vec<Name>,
        pos: Pos,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StmtArm {
    pub ctor: ArmCtor,
    pub pat: Option<PatternAst>,
    pub body: StmtAst,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDecl {
    pub name: Name,
    pub body: TypeAst,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataDecl {
    pub name: Name,
    pub ctors: Vec<(Name, Option<TypeAst>, Pos)>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomDecl {
    pub name: Name,
    pub inputs: Vec<TypeAst>,
    pub output: TypeAst,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimDecl {
    pub name: Name,
    pub msg_inputs: Vec<TypeAst>,
    pub proc_inputs: Vec<ProcTypeAst>,
    pub proc_outputs: Vec<ProcTypeAst>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcDecl {
    pub name: Name,
    pub msg_ctx: Vec<(PatternAst, TypeAst)>,
    pub inputs: Vec<(Name, ProcTypeAst)>,
    pub outputs: Vec<(Name, ProcTypeAst)>,
    pub body: StmtAst,
    pub pos: Pos,
}

/// A parsed `.mpl` module.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceModule {
    pub types: Vec<TypeDecl>,
    pub datas: Vec<DataDecl>,
    pub axioms: Vec<AxiomDecl>,
    pub prims: Vec<PrimDecl>,
    pub procs: Vec<ProcDecl>,
}
