//! Recursive-descent parser. Precedence, loosest first:
//! `+ -`, then `* /`, then unary `-`, then right-associative `^`.

use crate::error::{HhError, Result};
use crate::scalar::Real;

use super::ast::{Expr, Func};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(v) => format!("number {v}"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> HhError {
    HhError::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let lexeme = &text[start..i];
                let v: f64 = lexeme
                    .parse()
                    .map_err(|_| syntax(start, format!("malformed number `{lexeme}`")))?;
                out.push((Tok::Num(v), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr<T: Real>(&mut self) -> Result<Expr<T>> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term<T: Real>(&mut self) -> Result<Expr<T>> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary<T: Real>(&mut self) -> Result<Expr<T>> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let inner: Expr<T> = self.unary()?;
            return Ok(match inner {
                Expr::Const(c) => Expr::Const(-c),
                e => Expr::Neg(Box::new(e)),
            });
        }
        self.power()
    }

    fn power<T: Real>(&mut self) -> Result<Expr<T>> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        // Right-associative; the exponent may carry its own sign.
        let exponent: Expr<T> = self.unary()?;
        if exponent.contains_var() {
            return Err(syntax(at, "exponent must be constant"));
        }
        let r = exponent
            .eval(T::zero())
            .map_err(|_| syntax(at, "exponent is not a finite constant"))?;
        Ok(Expr::Pow(Box::new(base), r))
    }

    fn primary<T: Real>(&mut self) -> Result<Expr<T>> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Num(v) => {
                let c = T::from_f64(v).filter(|c| c.is_finite());
                c.map(Expr::Const)
                    .ok_or_else(|| syntax(at, "number out of range"))
            }
            Tok::Ident(name) => {
                if name == "x" {
                    return Ok(Expr::Var);
                }
                if let Some(func) = Func::from_name(&name) {
                    let (open, open_at) = self.bump();
                    if open != Tok::LParen {
                        return Err(syntax(open_at, format!("expected `(` after `{name}`")));
                    }
                    let arg = self.expr()?;
                    let (close, close_at) = self.bump();
                    if close != Tok::RParen {
                        return Err(syntax(close_at, format!("expected `)`, found {}", describe(&close))));
                    }
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                match name.as_str() {
                    "pi" => Ok(Expr::Const(T::PI())),
                    "e" => Ok(Expr::Const(T::E())),
                    _ => Err(HhError::UnknownIdentifier { name, offset: at }),
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let (close, close_at) = self.bump();
                if close != Tok::RParen {
                    return Err(syntax(close_at, format!("expected `)`, found {}", describe(&close))));
                }
                Ok(inner)
            }
            other => Err(syntax(at, format!("unexpected {}", describe(&other)))),
        }
    }
}

/// Parses a function of `x`. See the crate README for the grammar.
pub fn parse<T: Real>(text: &str) -> Result<Expr<T>> {
    if text.trim().is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(syntax(p.offset(), format!("unexpected {}", describe(t)))),
    }
}
