use crate::{Error, Result};

/// Command words reserved by the language.
pub const KEYWORDS: &[&str] = &[
    "gc",
    "bracketRing",
    "normalForm",
    "factor",
    "coefficients",
    "proveEqual",
    "psi",
    "toBrackets",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Keyword,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Star,
    Caret,
    Plus,
    Minus,
    Comma,
    Assign,
    /// `..` — range shorthand inside `gc`/`bracketRing` argument lists.
    DotDot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub line: usize,
    pub col: usize,
}

/// Longest-match lexer. Whitespace separates tokens; `#` comments run to end
/// of line. Statements are separated by newlines or `;`, which the lexer
/// reports as statement boundaries by splitting the stream.
pub fn tokenize(text: &str) -> Result<Vec<Vec<Token>>> {
    let mut statements = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();

    macro_rules! flush {
        () => {
            if !current.is_empty() {
                statements.push(std::mem::take(&mut current));
            }
        };
    }

    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
                flush!();
            }
            ';' => {
                chars.next();
                col += 1;
                flush!();
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            c if c.is_ascii_digit() => {
                let mut lexeme = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        lexeme.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                current.push(Token { kind: TokenKind::Int, lexeme, line: tline, col: tcol });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut lexeme = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        lexeme.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let kind = if KEYWORDS.contains(&lexeme.as_str()) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Ident
                };
                current.push(Token { kind, lexeme, line: tline, col: tcol });
            }
            '.' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'.') {
                    chars.next();
                    col += 1;
                    current.push(Token {
                        kind: TokenKind::DotDot,
                        lexeme: "..".into(),
                        line: tline,
                        col: tcol,
                    });
                } else {
                    return Err(Error::Lex {
                        line: tline,
                        col: tcol,
                        msg: "expected `..`".into(),
                    });
                }
            }
            _ => {
                let kind = match c {
                    '[' => TokenKind::LBracket,
                    ']' => TokenKind::RBracket,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    '*' => TokenKind::Star,
                    '^' => TokenKind::Caret,
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    ',' => TokenKind::Comma,
                    '=' => TokenKind::Assign,
                    other => {
                        return Err(Error::Lex {
                            line: tline,
                            col: tcol,
                            msg: format!("illegal character `{other}`"),
                        })
                    }
                };
                chars.next();
                col += 1;
                current.push(Token { kind, lexeme: c.to_string(), line: tline, col: tcol });
            }
        }
    }
    flush!();
    Ok(statements)
}
