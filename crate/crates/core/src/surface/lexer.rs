//! Tokeniser for `.mpl` sources. Layout-insensitive; `--` starts a line
//! comment; `(x)` and `(+)` are single operator tokens.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    // keywords
    Type,
    Data,
    Axiom,
    Prim,
    Proc,
    Get,
    Put,
    Close,
    End,
    Split,
    Fork,
    Case,
    Of,
    As,
    Plug,
    To,
    On,
    Where,
    Id,
    Inl,
    Inr,
    AbsurdKw,
    Top,
    Bot,
    // symbols
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eq,
    Pipe,
    Arrow,    // ->
    FatArrow, // =>
    Star,
    Plus,
    Zero,
    UnitTok, // I
    At,      // @
    Hash,    // #
    Tensor,  // (x)
    Par,     // (+)
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(n) => return write!(f, "`{}`", n),
            Tok::Type => "type",
            Tok::Data => "data",
            Tok::Axiom => "axiom",
            Tok::Prim => "prim",
            Tok::Proc => "proc",
            Tok::Get => "get",
            Tok::Put => "put",
            Tok::Close => "close",
            Tok::End => "end",
            Tok::Split => "split",
            Tok::Fork => "fork",
            Tok::Case => "case",
            Tok::Of => "of",
            Tok::As => "as",
            Tok::Plug => "plug",
            Tok::To => "to",
            Tok::On => "on",
            Tok::Where => "where",
            Tok::Id => "id",
            Tok::Inl => "inl",
            Tok::Inr => "inr",
            Tok::AbsurdKw => "absurd",
            Tok::Top => "Top",
            Tok::Bot => "Bot",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Colon => ":",
            Tok::Eq => "=",
            Tok::Pipe => "|",
            Tok::Arrow => "->",
            Tok::FatArrow => "=>",
            Tok::Star => "*",
            Tok::Plus => "+",
            Tok::Zero => "0",
            Tok::UnitTok => "I",
            Tok::At => "@",
            Tok::Hash => "#",
            Tok::Tensor => "(x)",
            Tok::Par => "(+)",
            Tok::Eof => "end of input",
        };
        write!(f, "`{}`", s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for SyntaxError {}

pub fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let mut line = 1u32;
    let mut col = 1u32;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if let Some(c) = c {
                if c == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
            }
            c
        }};
    }

    loop {
        let pos = Pos { line, col };
        let Some(&c) = chars.peek() else {
            out.push((Tok::Eof, pos));
            return Ok(out);
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '-' => {
                bump!();
                match chars.peek() {
                    Some('-') => {
                        while let Some(&c) = chars.peek() {
                            if c == '\n' {
                                break;
                            }
                            bump!();
                        }
                    }
                    Some('>') => {
                        bump!();
                        out.push((Tok::Arrow, pos));
                    }
                    _ => {
                        return Err(SyntaxError {
                            pos,
                            message: "expected `--` or `->`".to_string(),
                        })
                    }
                }
            }
            '(' => {
                bump!();
                match chars.peek() {
                    Some('x') => {
                        let mut look = chars.clone();
                        look.next();
                        if look.peek() == Some(&')') {
                            bump!();
                            bump!();
                            out.push((Tok::Tensor, pos));
                        } else {
                            out.push((Tok::LParen, pos));
                        }
                    }
                    Some('+') => {
                        let mut look = chars.clone();
                        look.next();
                        if look.peek() == Some(&')') {
                            bump!();
                            bump!();
                            out.push((Tok::Par, pos));
                        } else {
                            out.push((Tok::LParen, pos));
                        }
                    }
                    _ => out.push((Tok::LParen, pos)),
                }
            }
            ')' => {
                bump!();
                out.push((Tok::RParen, pos));
            }
            '[' => {
                bump!();
                out.push((Tok::LBracket, pos));
            }
            ']' => {
                bump!();
                out.push((Tok::RBracket, pos));
            }
            ',' => {
                bump!();
                out.push((Tok::Comma, pos));
            }
            ';' => {
                bump!();
                out.push((Tok::Semi, pos));
            }
            ':' => {
                bump!();
                out.push((Tok::Colon, pos));
            }
            '|' => {
                bump!();
                out.push((Tok::Pipe, pos));
            }
            '*' => {
                bump!();
                out.push((Tok::Star, pos));
            }
            '+' => {
                bump!();
                out.push((Tok::Plus, pos));
            }
            '@' => {
                bump!();
                out.push((Tok::At, pos));
            }
            '#' => {
                bump!();
                out.push((Tok::Hash, pos));
            }
            '=' => {
                bump!();
                if chars.peek() == Some(&'>') {
                    bump!();
                    out.push((Tok::FatArrow, pos));
                } else {
                    out.push((Tok::Eq, pos));
                }
            }
            '0' => {
                bump!();
                out.push((Tok::Zero, pos));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '\'' || c == '%' {
                        name.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                let tok = match name.as_str() {
                    "type" => Tok::Type,
                    "data" => Tok::Data,
                    "axiom" => Tok::Axiom,
                    "prim" => Tok::Prim,
                    "proc" => Tok::Proc,
                    "get" => Tok::Get,
                    "put" => Tok::Put,
                    "close" => Tok::Close,
                    "end" => Tok::End,
                    "split" => Tok::Split,
                    "fork" => Tok::Fork,
                    "case" => Tok::Case,
                    "of" => Tok::Of,
                    "as" => Tok::As,
                    "plug" => Tok::Plug,
                    "to" => Tok::To,
                    "on" => Tok::On,
                    "where" => Tok::Where,
                    "id" => Tok::Id,
                    "inl" => Tok::Inl,
                    "inr" => Tok::Inr,
                    "absurd" => Tok::AbsurdKw,
                    "Top" => Tok::Top,
                    "Bot" => Tok::Bot,
                    "I" => Tok::UnitTok,
                    _ => Tok::Ident(name),
                };
                out.push((tok, pos));
            }
            other => {
                return Err(SyntaxError {
                    pos,
                    message: format!("unexpected character `{}`", other),
                })
            }
        }
    }
}
