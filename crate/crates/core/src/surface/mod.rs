//! Concrete syntax: lexer, parser, elaborator, and printers for `.mpl`
//! modules.

mod ast;
mod elaborate;
mod lexer;
mod parser;
mod pretty;

pub use ast::{
    ArmCtor, AxiomDecl, DataDecl, ExprArm, ExprAst, PatternAst, PrimDecl, ProcDecl, ProcTypeAst,
    SourceModule, StmtArm, StmtAst, TypeAst, TypeDecl,
};
pub use elaborate::{elaborate, CtorInfo, ElabError, Module, ProcDef};
pub use lexer::{lex, Pos, SyntaxError, Tok};
pub use parser::{parse, parse_stmt};
pub use pretty::{
    pretty_msg, pretty_pattern, pretty_proc, sexp_msg, sexp_msg_type, sexp_pattern, sexp_proc,
    sexp_proc_type,
};
