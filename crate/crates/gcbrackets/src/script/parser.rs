use crate::{Error, Result};

use super::lexer::{Token, TokenKind};

/// One atom of a bracket literal: a point name or a 1-based integer index.
/// Multi-character atoms over single-character point names (e.g. `[adf]`,
/// `[256]`) are split at evaluation time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketAtom {
    Name(String),
    Index(usize),
}

/// Expression grammar, tightest first: unary minus and integer powers, `*`
/// (join), `^` (meet), then `+`/`-`; all binary operators left-associative.
/// Note that `*` binds tighter than `^`, so `a*d ^ b*e` meets the two
/// joins. A caret whose right operand is an integer literal is a power, not
/// a meet, and binds tightest: `[def]^2*[abc]^2` squares the brackets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Int(i64),
    Ident(String),
    BracketLiteral(Vec<BracketAtom>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Join(Box<Ast>, Box<Ast>),
    Meet(Box<Ast>, Box<Ast>),
    /// `first..last` — only valid as a call argument.
    Range(String, String),
    Call(String, Vec<Ast>),
    Assign(String, Box<Ast>),
}

impl Ast {
    /// Renders the tree back to source with minimal parentheses; reparsing
    /// the output reproduces the tree.
    pub fn render(&self) -> String {
        self.render_prec(0)
    }

    // Precedence levels: 0 add/sub, 1 meet, 2 join, 3 unary/atom.
    fn render_prec(&self, level: u8) -> String {
        let (s, prec) = match self {
            Ast::Int(v) => (v.to_string(), 3),
            Ast::Ident(s) => (s.clone(), 3),
            Ast::BracketLiteral(atoms) => {
                let body = atoms
                    .iter()
                    .map(|a| match a {
                        BracketAtom::Name(s) => s.clone(),
                        BracketAtom::Index(i) => i.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                (format!("[{body}]"), 3)
            }
            Ast::Neg(inner) => (format!("-{}", inner.render_prec(3)), 3),
            Ast::Pow(base, exp) => (format!("{}^{exp}", base.render_prec(3)), 3),
            Ast::Add(a, b) => {
                (format!("{}+{}", a.render_prec(0), b.render_prec(1)), 0)
            }
            Ast::Sub(a, b) => {
                (format!("{}-{}", a.render_prec(0), b.render_prec(1)), 0)
            }
            Ast::Meet(a, b) => {
                (format!("{}^{}", a.render_prec(1), b.render_prec(2)), 1)
            }
            Ast::Join(a, b) => {
                (format!("{}*{}", a.render_prec(2), b.render_prec(3)), 2)
            }
            Ast::Range(a, b) => (format!("{a}..{b}"), 3),
            Ast::Call(name, args) => {
                let body = args
                    .iter()
                    .map(|a| a.render_prec(0))
                    .collect::<Vec<_>>()
                    .join(", ");
                (format!("{name}({body})"), 3)
            }
            Ast::Assign(name, expr) => {
                (format!("{name} = {}", expr.render_prec(0)), 0)
            }
        };
        if prec < level {
            format!("({s})")
        } else {
            s
        }
    }
}

pub struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

/// Parses one statement's token list.
pub fn parse(tokens: &[Token]) -> Result<Ast> {
    let mut p = Parser { tokens, pos: 0 };
    let ast = p.statement()?;
    if let Some(t) = p.peek() {
        return Err(p.err_at(t, "trailing input after statement"));
    }
    Ok(ast)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn eat(&mut self, kind: TokenKind, what: &str) -> Result<&'a Token> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                self.pos += 1;
                Ok(t)
            }
            Some(t) => Err(self.err_at(t, &format!("expected {what}, found `{}`", t.lexeme))),
            None => Err(self.err_end(&format!("expected {what}"))),
        }
    }

    fn err_at(&self, t: &Token, msg: &str) -> Error {
        Error::Parse { line: t.line, col: t.col, msg: msg.into() }
    }

    fn err_end(&self, msg: &str) -> Error {
        let (line, col) = self
            .tokens
            .last()
            .map(|t| (t.line, t.col + t.lexeme.len()))
            .unwrap_or((1, 1));
        Error::Parse { line, col, msg: format!("{msg}, found end of statement") }
    }

    fn statement(&mut self) -> Result<Ast> {
        // Lookahead for `ident = ...`.
        if let (Some(t0), Some(t1)) = (self.tokens.first(), self.tokens.get(1)) {
            if self.pos == 0 && t0.kind == TokenKind::Ident && t1.kind == TokenKind::Assign {
                self.pos = 2;
                let rhs = self.expr()?;
                return Ok(Ast::Assign(t0.lexeme.clone(), Box::new(rhs)));
            }
        }
        self.expr()
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.meet_expr()?;
        while let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Plus => {
                    self.pos += 1;
                    let rhs = self.meet_expr()?;
                    lhs = Ast::Add(Box::new(lhs), Box::new(rhs));
                }
                TokenKind::Minus => {
                    self.pos += 1;
                    let rhs = self.meet_expr()?;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn meet_expr(&mut self) -> Result<Ast> {
        let mut lhs = self.join_expr()?;
        while matches!(self.peek(), Some(t) if t.kind == TokenKind::Caret) {
            self.pos += 1;
            let rhs = self.join_expr()?;
            lhs = Ast::Meet(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn join_expr(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while matches!(self.peek(), Some(t) if t.kind == TokenKind::Star) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Ast::Join(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Minus) {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Ast::Neg(Box::new(inner)));
        }
        let mut base = self.atom()?;
        // `^ <integer literal>` is a power and binds tightest; any other
        // right operand of `^` is a meet, handled one level up.
        while let (Some(t0), Some(t1)) = (self.peek(), self.tokens.get(self.pos + 1)) {
            if t0.kind != TokenKind::Caret || t1.kind != TokenKind::Int {
                break;
            }
            let exp: u32 = t1
                .lexeme
                .parse()
                .map_err(|_| self.err_at(t1, "exponent out of range"))?;
            self.pos += 2;
            base = Ast::Pow(Box::new(base), exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        let Some(t) = self.advance() else {
            return Err(self.err_end("expected an expression"));
        };
        match t.kind {
            TokenKind::Int => {
                let v: i64 = t
                    .lexeme
                    .parse()
                    .map_err(|_| self.err_at(t, "integer literal out of range"))?;
                Ok(Ast::Int(v))
            }
            TokenKind::Ident => Ok(Ast::Ident(t.lexeme.clone())),
            TokenKind::Keyword => {
                self.eat(TokenKind::LParen, "`(` after command name")?;
                let mut args = Vec::new();
                if !matches!(self.peek(), Some(t) if t.kind == TokenKind::RParen) {
                    loop {
                        args.push(self.call_arg()?);
                        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Comma) {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                }
                self.eat(TokenKind::RParen, "`)`")?;
                Ok(Ast::Call(t.lexeme.clone(), args))
            }
            TokenKind::LBracket => {
                let mut atoms = Vec::new();
                loop {
                    let Some(t) = self.advance() else {
                        return Err(self.err_end("unterminated bracket literal"));
                    };
                    match t.kind {
                        TokenKind::RBracket => break,
                        TokenKind::Int => {
                            let v: usize = t.lexeme.parse().map_err(|_| {
                                self.err_at(t, "bracket index out of range")
                            })?;
                            atoms.push(BracketAtom::Index(v));
                        }
                        TokenKind::Ident | TokenKind::Keyword => {
                            atoms.push(BracketAtom::Name(t.lexeme.clone()));
                        }
                        _ => {
                            return Err(self.err_at(
                                t,
                                "expected a point name or index inside `[ ]`",
                            ))
                        }
                    }
                }
                if atoms.is_empty() {
                    return Err(self.err_end("empty bracket literal"));
                }
                Ok(Ast::BracketLiteral(atoms))
            }
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.eat(TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.err_at(t, &format!("unexpected `{}`", t.lexeme))),
        }
    }

    /// Call arguments additionally admit the `a..f` range shorthand.
    fn call_arg(&mut self) -> Result<Ast> {
        if let (Some(t0), Some(t1)) = (self.peek(), self.tokens.get(self.pos + 1)) {
            if t0.kind == TokenKind::Ident && t1.kind == TokenKind::DotDot {
                let first = t0.lexeme.clone();
                self.pos += 2;
                let last = self.eat(TokenKind::Ident, "range end")?;
                return Ok(Ast::Range(first, last.lexeme.clone()));
            }
        }
        self.expr()
    }
}
