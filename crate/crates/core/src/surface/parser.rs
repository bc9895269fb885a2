//! Recursive-descent parser for `.mpl` modules.

use super::ast::*;
use super::lexer::{lex, Pos, SyntaxError, Tok};
use crate::Name;

pub fn parse(src: &str) -> Result<SourceModule, SyntaxError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0 };
    p.module()
}

/// Parse a statement in isolation (used by the pretty-print round trip).
pub fn parse_stmt(src: &str) -> Result<StmtAst, SyntaxError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0 };
    let s = p.stmt()?;
    p.expect(Tok::Eof)?;
    Ok(s)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: Tok) -> bool {
        if *self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), SyntaxError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.err(&format!("expected {}, found {}", t, self.peek())))
        }
    }

    fn err(&self, message: &str) -> SyntaxError {
        SyntaxError {
            pos: self.pos(),
            message: message.to_string(),
        }
    }

    fn ident(&mut self) -> Result<(Name, Pos), SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(n) => {
                self.bump();
                Ok((n, pos))
            }
            other => Err(self.err(&format!("expected an identifier, found {}", other))),
        }
    }

    fn module(&mut self) -> Result<SourceModule, SyntaxError> {
        let mut m = SourceModule::default();
        loop {
            match self.peek() {
                Tok::Eof => return Ok(m),
                Tok::Type => m.types.push(self.type_decl()?),
                Tok::Data => m.datas.push(self.data_decl()?),
                Tok::Axiom => m.axioms.push(self.axiom_decl()?),
                Tok::Prim => m.prims.push(self.prim_decl()?),
                Tok::Proc => m.procs.push(self.proc_decl()?),
                other => {
                    return Err(self.err(&format!(
                        "expected a declaration (type/data/axiom/prim/proc), found {}",
                        other
                    )))
                }
            }
        }
    }

    fn type_decl(&mut self) -> Result<TypeDecl, SyntaxError> {
        let pos = self.pos();
        self.expect(Tok::Type)?;
        let (name, _) = self.ident()?;
        self.expect(Tok::Eq)?;
        let body = self.msg_type()?;
        Ok(TypeDecl { name, body, pos })
    }

    fn data_decl(&mut self) -> Result<DataDecl, SyntaxError> {
        let pos = self.pos();
        self.expect(Tok::Data)?;
        let (name, _) = self.ident()?;
        self.expect(Tok::Eq)?;
        let mut ctors = Vec::new();
        self.eat(Tok::Pipe);
        loop {
            let cpos = self.pos();
            let (cname, _) = self.ident()?;
            // A payload type follows unless the next token ends the alt.
            let payload = match self.peek() {
                Tok::Pipe | Tok::Type | Tok::Data | Tok::Axiom | Tok::Prim | Tok::Proc
                | Tok::Eof => None,
                _ => Some(self.msg_type()?),
            };
            ctors.push((cname, payload, cpos));
            if !self.eat(Tok::Pipe) {
                break;
            }
        }
        Ok(DataDecl { name, ctors, pos })
    }

    fn axiom_decl(&mut self) -> Result<AxiomDecl, SyntaxError> {
        let pos = self.pos();
        self.expect(Tok::Axiom)?;
        let (name, _) = self.ident()?;
        self.expect(Tok::Colon)?;
        let mut inputs = Vec::new();
        if !self.eat(Tok::Arrow) {
            loop {
                inputs.push(self.msg_type()?);
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
            self.expect(Tok::Arrow)?;
        }
        let output = self.msg_type()?;
        Ok(AxiomDecl {
            name,
            inputs,
            output,
            pos,
        })
    }

    fn prim_decl(&mut self) -> Result<PrimDecl, SyntaxError> {
        let pos = self.pos();
        self.expect(Tok::Prim)?;
        let (name, _) = self.ident()?;
        self.expect(Tok::LParen)?;
        let mut msg_inputs = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                msg_inputs.push(self.msg_type()?);
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        self.expect(Tok::LBracket)?;
        let mut proc_inputs = Vec::new();
        if *self.peek() != Tok::Semi {
            loop {
                proc_inputs.push(self.proc_type()?);
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::Semi)?;
        let mut proc_outputs = Vec::new();
        if *self.peek() != Tok::RBracket {
            loop {
                proc_outputs.push(self.proc_type()?);
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RBracket)?;
        Ok(PrimDecl {
            name,
            msg_inputs,
            proc_inputs,
            proc_outputs,
            pos,
        })
    }

    fn proc_decl(&mut self) -> Result<ProcDecl, SyntaxError> {
        let pos = self.pos();
        self.expect(Tok::Proc)?;
        let (name, _) = self.ident()?;
        self.expect(Tok::LParen)?;
        let mut msg_ctx = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                let pat = self.pattern()?;
                self.expect(Tok::Colon)?;
                let ty = self.msg_type()?;
                msg_ctx.push((pat, ty));
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        self.expect(Tok::LBracket)?;
        let mut inputs = Vec::new();
        if *self.peek() != Tok::Semi {
            loop {
                let (c, _) = self.ident()?;
                self.expect(Tok::Colon)?;
                let ty = self.proc_type()?;
                inputs.push((c, ty));
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::Semi)?;
        let mut outputs = Vec::new();
        if *self.peek() != Tok::RBracket {
            loop {
                let (c, _) = self.ident()?;
                self.expect(Tok::Colon)?;
                let ty = self.proc_type()?;
                outputs.push((c, ty));
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RBracket)?;
        self.expect(Tok::Eq)?;
        let body = self.stmt()?;
        Ok(ProcDecl {
            name,
            msg_ctx,
            inputs,
            outputs,
            body,
            pos,
        })
    }

    // Message types: `*` binds tighter than `+`, both right-associative.
    fn msg_type(&mut self) -> Result<TypeAst, SyntaxError> {
        let left = self.msg_type_prod()?;
        if self.eat(Tok::Plus) {
            let right = self.msg_type()?;
            Ok(TypeAst::Sum(Box::new(left), Box::new(right)))
        } else {
            Ok(left)
        }
    }

    fn msg_type_prod(&mut self) -> Result<TypeAst, SyntaxError> {
        let left = self.msg_type_atom()?;
        if self.eat(Tok::Star) {
            let right = self.msg_type_prod()?;
            Ok(TypeAst::Prod(Box::new(left), Box::new(right)))
        } else {
            Ok(left)
        }
    }

    fn msg_type_atom(&mut self) -> Result<TypeAst, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(n) => {
                self.bump();
                Ok(TypeAst::Named(n, pos))
            }
            Tok::UnitTok => {
                self.bump();
                Ok(TypeAst::Unit)
            }
            Tok::Zero => {
                self.bump();
                Ok(TypeAst::Zero)
            }
            Tok::LParen => {
                self.bump();
                let t = self.msg_type()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => Err(self.err(&format!("expected a message type, found {}", other))),
        }
    }

    // Process types: actions bind tightest, then (x), then (+); all
    // right-associative.
    fn proc_type(&mut self) -> Result<ProcTypeAst, SyntaxError> {
        let left = self.proc_type_tensor()?;
        if self.eat(Tok::Par) {
            let right = self.proc_type()?;
            Ok(ProcTypeAst::Par(Box::new(left), Box::new(right)))
        } else {
            Ok(left)
        }
    }

    fn proc_type_tensor(&mut self) -> Result<ProcTypeAst, SyntaxError> {
        let left = self.proc_type_action()?;
        if self.eat(Tok::Tensor) {
            let right = self.proc_type_tensor()?;
            Ok(ProcTypeAst::Tensor(Box::new(left), Box::new(right)))
        } else {
            Ok(left)
        }
    }

    fn proc_type_action(&mut self) -> Result<ProcTypeAst, SyntaxError> {
        // An action `A @ X` begins with a message type; a bare identifier
        // might be either, so try the message reading and decide at the
        // operator.
        let save = self.at;
        if let Ok(m) = self.msg_type() {
            if self.eat(Tok::At) {
                let x = self.proc_type_action()?;
                return Ok(ProcTypeAst::Act(m, Box::new(x)));
            }
            if self.eat(Tok::Hash) {
                let x = self.proc_type_action()?;
                return Ok(ProcTypeAst::CoAct(m, Box::new(x)));
            }
        }
        self.at = save;
        self.proc_type_atom()
    }

    fn proc_type_atom(&mut self) -> Result<ProcTypeAst, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(n) => {
                self.bump();
                Ok(ProcTypeAst::Named(n, pos))
            }
            Tok::Top => {
                self.bump();
                Ok(ProcTypeAst::Top)
            }
            Tok::Bot => {
                self.bump();
                Ok(ProcTypeAst::Bot)
            }
            Tok::LParen => {
                self.bump();
                let t = self.proc_type()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => Err(self.err(&format!("expected a process type, found {}", other))),
        }
    }

    fn pattern(&mut self) -> Result<PatternAst, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(n) => {
                self.bump();
                Ok(PatternAst::Var(n, pos))
            }
            // The lexer reads `(x)` as the tensor operator; in a pattern it
            // can only be the parenthesised variable.
            Tok::Tensor => {
                self.bump();
                Ok(PatternAst::Var("x".to_string(), pos))
            }
            Tok::LParen => {
                self.bump();
                if self.eat(Tok::RParen) {
                    return Ok(PatternAst::Unit);
                }
                let first = self.pattern()?;
                if self.eat(Tok::Comma) {
                    // Comma-lists right-nest.
                    let mut rest = vec![self.pattern()?];
                    while self.eat(Tok::Comma) {
                        rest.push(self.pattern()?);
                    }
                    self.expect(Tok::RParen)?;
                    let mut acc = rest.pop().unwrap();
                    while let Some(p) = rest.pop() {
                        acc = PatternAst::Pair(Box::new(p), Box::new(acc));
                    }
                    Ok(PatternAst::Pair(Box::new(first), Box::new(acc)))
                } else {
                    self.expect(Tok::RParen)?;
                    Ok(first)
                }
            }
            other => Err(self.err(&format!("expected a pattern, found {}", other))),
        }
    }

    pub(super) fn stmt(&mut self) -> Result<StmtAst, SyntaxError> {
        let mut s = self.stmt_core()?;
        while *self.peek() == Tok::Where {
            let pos = self.pos();
            self.bump();
            let pat = self.pattern()?;
            self.expect(Tok::Eq)?;
            let arg = self.expr()?;
            s = StmtAst::Where {
                body: Box::new(s),
                pat,
                arg,
                pos,
            };
        }
        Ok(s)
    }

    fn stmt_core(&mut self) -> Result<StmtAst, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Get => {
                self.bump();
                let (chan, _) = self.ident()?;
                let pat = self.pattern()?;
                self.expect(Tok::FatArrow)?;
                let body = self.stmt()?;
                Ok(StmtAst::Get {
                    chan,
                    pat,
                    body: Box::new(body),
                    pos,
                })
            }
            Tok::Put => {
                self.bump();
                let (chan, _) = self.ident()?;
                let payload = self.expr()?;
                self.expect(Tok::Semi)?;
                let body = self.stmt()?;
                Ok(StmtAst::Put {
                    chan,
                    payload,
                    body: Box::new(body),
                    pos,
                })
            }
            Tok::Close => {
                self.bump();
                let (chan, _) = self.ident()?;
                self.expect(Tok::Semi)?;
                let body = self.stmt()?;
                Ok(StmtAst::Close {
                    chan,
                    body: Box::new(body),
                    pos,
                })
            }
            Tok::End => {
                self.bump();
                let (chan, _) = self.ident()?;
                Ok(StmtAst::End { chan, pos })
            }
            Tok::Split => {
                self.bump();
                let (chan, _) = self.ident()?;
                self.expect(Tok::As)?;
                let (c1, _) = self.ident()?;
                self.expect(Tok::Comma)?;
                let (c2, _) = self.ident()?;
                self.expect(Tok::Semi)?;
                let body = self.stmt()?;
                Ok(StmtAst::Split {
                    chan,
                    c1,
                    c2,
                    body: Box::new(body),
                    pos,
                })
            }
            Tok::Fork => {
                self.bump();
                let (chan, _) = self.ident()?;
                self.expect(Tok::As)?;
                self.expect(Tok::Pipe)?;
                let (c1, _) = self.ident()?;
                self.expect(Tok::Arrow)?;
                let left = self.stmt()?;
                self.expect(Tok::Pipe)?;
                let (c2, _) = self.ident()?;
                self.expect(Tok::Arrow)?;
                let right = self.stmt()?;
                Ok(StmtAst::Fork {
                    chan,
                    c1,
                    left: Box::new(left),
                    c2,
                    right: Box::new(right),
                    pos,
                })
            }
            Tok::Case => {
                self.bump();
                let scrutinee_pos = self.pos();
                let scrutinee = self.expr()?;
                self.expect(Tok::Of)?;
                let mut arms = Vec::new();
                self.expect(Tok::Pipe)?;
                loop {
                    let apos = self.pos();
                    let ctor = match self.peek().clone() {
                        Tok::Inl => {
                            self.bump();
                            ArmCtor::Inl
                        }
                        Tok::Inr => {
                            self.bump();
                            ArmCtor::Inr
                        }
                        Tok::Ident(n) => {
                            self.bump();
                            ArmCtor::Named(n)
                        }
                        other => {
                            return Err(self.err(&format!(
                                "expected a constructor in case arm, found {}",
                                other
                            )))
                        }
                    };
                    let pat = match self.peek() {
                        Tok::Arrow => None,
                        _ => Some(self.pattern()?),
                    };
                    self.expect(Tok::Arrow)?;
                    let body = self.stmt()?;
                    arms.push(StmtArm {
                        ctor,
                        pat,
                        body,
                        pos: apos,
                    });
                    if !self.eat(Tok::Pipe) {
                        break;
                    }
                }
                Ok(StmtAst::Case {
                    scrutinee: Box::new(scrutinee),
                    scrutinee_pos,
                    arms,
                    pos,
                })
            }
            Tok::AbsurdKw => {
                self.bump();
                let (var, _) = self.ident()?;
                Ok(StmtAst::Absurd { var, pos })
            }
            Tok::Plug => {
                self.bump();
                let left = self.stmt()?;
                self.expect(Tok::To)?;
                let right = self.stmt()?;
                self.expect(Tok::On)?;
                let (out_chan, _) = self.ident()?;
                self.expect(Tok::Eq)?;
                let (in_chan, _) = self.ident()?;
                Ok(StmtAst::Plug {
                    left: Box::new(left),
                    right: Box::new(right),
                    out_chan,
                    in_chan,
                    pos,
                })
            }
            Tok::Id => {
                self.bump();
                let (input, _) = self.ident()?;
                self.expect(Tok::Eq)?;
                let (output, _) = self.ident()?;
                self.expect(Tok::Colon)?;
                let ty = self.proc_type()?;
                Ok(StmtAst::Identity {
                    input,
                    output,
                    ty,
                    pos,
                })
            }
            Tok::LParen => {
                self.bump();
                let s = self.stmt()?;
                self.expect(Tok::RParen)?;
                Ok(s)
            }
            Tok::Ident(name) => {
                // Primitive call: name(x, …)[a, …; b, …]
                self.bump();
                self.expect(Tok::LParen)?;
                let mut msg_args = Vec::new();
                if *self.peek() != Tok::RParen {
                    loop {
                        msg_args.push(self.ident()?.0);
                        if !self.eat(Tok::Comma) {
                            break;
                        }
                    }
                }
                self.expect(Tok::RParen)?;
                self.expect(Tok::LBracket)?;
                let mut inputs = Vec::new();
                if *self.peek() != Tok::Semi {
                    loop {
                        inputs.push(self.ident()?.0);
                        if !self.eat(Tok::Comma) {
                            break;
                        }
                    }
                }
                self.expect(Tok::Semi)?;
                let mut outputs = Vec::new();
                if *self.peek() != Tok::RBracket {
                    loop {
                        outputs.push(self.ident()?.0);
                        if !self.eat(Tok::Comma) {
                            break;
                        }
                    }
                }
                self.expect(Tok::RBracket)?;
                Ok(StmtAst::PrimCall {
                    name,
                    msg_args,
                    inputs,
                    outputs,
                    pos,
                })
            }
            other => Err(self.err(&format!("expected a statement, found {}", other))),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, SyntaxError> {
        let mut e = self.expr_core()?;
        while *self.peek() == Tok::Where {
            self.bump();
            let pat = self.pattern()?;
            self.expect(Tok::Eq)?;
            let arg = self.expr()?;
            e = ExprAst::Where {
                body: Box::new(e),
                pat,
                arg: Box::new(arg),
            };
        }
        Ok(e)
    }

    fn expr_core(&mut self) -> Result<ExprAst, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            // `(x)` lexes as the tensor operator; as an expression it can
            // only be the parenthesised variable.
            Tok::Tensor => {
                self.bump();
                Ok(ExprAst::Var("x".to_string(), pos))
            }
            Tok::Inl => {
                self.bump();
                let e = self.expr_atom()?;
                Ok(ExprAst::Inl(Box::new(e)))
            }
            Tok::Inr => {
                self.bump();
                let e = self.expr_atom()?;
                Ok(ExprAst::Inr(Box::new(e)))
            }
            Tok::AbsurdKw => {
                self.bump();
                let (z, zpos) = self.ident()?;
                Ok(ExprAst::Absurd(z, zpos))
            }
            Tok::Case => {
                self.bump();
                let scrutinee_pos = self.pos();
                let scrutinee = self.expr()?;
                self.expect(Tok::As)?;
                let mut arms = Vec::new();
                self.expect(Tok::Pipe)?;
                loop {
                    let apos = self.pos();
                    let ctor = match self.peek().clone() {
                        Tok::Inl => {
                            self.bump();
                            ArmCtor::Inl
                        }
                        Tok::Inr => {
                            self.bump();
                            ArmCtor::Inr
                        }
                        Tok::Ident(n) => {
                            self.bump();
                            ArmCtor::Named(n)
                        }
                        other => {
                            return Err(self.err(&format!(
                                "expected a constructor in case arm, found {}",
                                other
                            )))
                        }
                    };
                    let pat = match self.peek() {
                        Tok::Arrow => None,
                        _ => Some(self.pattern()?),
                    };
                    self.expect(Tok::Arrow)?;
                    let body = self.expr()?;
                    arms.push(ExprArm {
                        ctor,
                        pat,
                        body,
                        pos: apos,
                    });
                    if !self.eat(Tok::Pipe) {
                        break;
                    }
                }
                Ok(ExprAst::Case {
                    scrutinee: Box::new(scrutinee),
                    scrutinee_pos,
                    arms,
                })
            }
            Tok::Ident(name) => {
                self.bump();
                match self.peek() {
                    Tok::LParen => {
                        // Application with explicit argument list, or a
                        // constructor applied to a tuple; resolved later.
                        self.bump();
                        let mut args = Vec::new();
                        if *self.peek() != Tok::RParen {
                            loop {
                                args.push(self.expr()?);
                                if !self.eat(Tok::Comma) {
                                    break;
                                }
                            }
                        }
                        self.expect(Tok::RParen)?;
                        Ok(ExprAst::App(name, args, pos))
                    }
                    Tok::Ident(_) | Tok::Inl | Tok::Inr | Tok::Tensor => {
                        // Juxtaposed constructor argument.
                        let arg = self.expr_atom()?;
                        Ok(ExprAst::App(name, vec![arg], pos))
                    }
                    _ => Ok(ExprAst::Var(name, pos)),
                }
            }
            Tok::LParen => self.expr_atom(),
            other => Err(self.err(&format!("expected an expression, found {}", other))),
        }
    }

    fn expr_atom(&mut self) -> Result<ExprAst, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Tensor => {
                self.bump();
                Ok(ExprAst::Var("x".to_string(), pos))
            }
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let mut args = Vec::new();
                    if *self.peek() != Tok::RParen {
                        loop {
                            args.push(self.expr()?);
                            if !self.eat(Tok::Comma) {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen)?;
                    Ok(ExprAst::App(name, args, pos))
                } else {
                    Ok(ExprAst::Var(name, pos))
                }
            }
            Tok::Inl => {
                self.bump();
                let e = self.expr_atom()?;
                Ok(ExprAst::Inl(Box::new(e)))
            }
            Tok::Inr => {
                self.bump();
                let e = self.expr_atom()?;
                Ok(ExprAst::Inr(Box::new(e)))
            }
            Tok::LParen => {
                self.bump();
                if self.eat(Tok::RParen) {
                    return Ok(ExprAst::Unit);
                }
                let first = self.expr()?;
                if self.eat(Tok::Comma) {
                    let mut rest = vec![self.expr()?];
                    while self.eat(Tok::Comma) {
                        rest.push(self.expr()?);
                    }
                    self.expect(Tok::RParen)?;
                    let mut acc = rest.pop().unwrap();
                    while let Some(e) = rest.pop() {
                        acc = ExprAst::Pair(Box::new(e), Box::new(acc));
                    }
                    Ok(ExprAst::Pair(Box::new(first), Box::new(acc)))
                } else {
                    self.expect(Tok::RParen)?;
                    Ok(first)
                }
            }
            other => Err(self.err(&format!("expected an expression, found {}", other))),
        }
    }
}
