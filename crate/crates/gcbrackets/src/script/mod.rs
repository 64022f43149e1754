//! A small expression language over bracket and Grassmann-Cayley rings.
//!
//! Scripts use the `.gc` extension (UTF-8, `#` comments, one statement per
//! line or separated by `;`). The grammar, in EBNF:
//!
//! ```text
//! script   = { statement } ;
//! statement= [ ident "=" ] expr ;
//! expr     = term { ("+" | "-") term } ;
//! term     = factor { "^" factor } ;            (* meet *)
//! factor   = unary { "*" unary } ;              (* join *)
//! unary    = "-" unary | atom ;
//! atom     = int | ident | call | bracket | "(" expr ")" ;
//! bracket  = "[" ( ident | int ) { ident | int } "]" ;
//! call     = command "(" [ arg { "," arg } ] ")" ;
//! arg      = expr | ident ".." ident ;
//! command  = "gc" | "bracketRing" | "normalForm" | "factor"
//!          | "coefficients" | "proveEqual" | "psi" | "toBrackets" ;
//! ```
//!
//! `*` is the join and binds tighter than the meet `^` (matching the usual
//! mathematical convention, not the host-CAS precedence where a caret would
//! bind tighter). Points and parameters of the active ring are bound
//! automatically; `[1 4 5]`, `[145]`, and `[adf]` all denote brackets, with
//! run-together forms split when every character names a point.

mod eval;
mod lexer;
mod parser;

pub use eval::{Environment, Value};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, Ast, BracketAtom};

use crate::{Error, Result};

/// One executed statement: its source, its parsed form, and the rendered
/// value it produced.
#[derive(Debug, Clone)]
pub struct TranscriptEntry {
    pub statement: String,
    pub rendered: String,
}

/// Runs a script and returns the per-statement transcript. Any error aborts
/// with the offending statement's index attached.
pub fn run_script(text: &str, env: &mut Environment) -> Result<Vec<TranscriptEntry>> {
    let statements = tokenize(text)?;
    let mut transcript = Vec::new();
    for (index, tokens) in statements.iter().enumerate() {
        let mut run = || -> Result<TranscriptEntry> {
            let ast = parse(tokens)?;
            let value = env.evaluate(&ast)?;
            Ok(TranscriptEntry { statement: ast.render(), rendered: value.render() })
        };
        match run() {
            Ok(entry) => transcript.push(entry),
            Err(e) => {
                return Err(Error::Eval(format!(
                    "statement {}: {e}",
                    index + 1
                )))
            }
        }
    }
    Ok(transcript)
}
