use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::bracket::{BracketRing, Subduction};
use crate::gc::{GcExpression, GcRing};
use crate::poly::{rat, render_rational, Monomial, Poly, Rational};
use crate::{Error, Result};

use super::parser::{Ast, BracketAtom};

/// A value produced by evaluating a statement.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    /// A Grassmann-Cayley expression; degree-0 values are bracket
    /// polynomials.
    Expr(GcExpression),
    /// A polynomial in the matrix entries (output of `psi`).
    MatrixPoly(Poly),
    Bool(bool),
    /// Output of `factor`: content, single-bracket factors, cofactor.
    Factorization {
        ring: Arc<BracketRing>,
        content: Rational,
        brackets: Vec<crate::bracket::Bracket>,
        cofactor: Poly,
    },
    /// Output of `coefficients`: rows (parameter monomial, coefficient).
    Coefficients(Vec<(Monomial, Poly)>),
    /// Output of `toBrackets` when the input was not in the bracket ring.
    SubductionRemainder { bracket_part: Poly, remainder: Poly },
    /// Context construction acknowledgement.
    Ring(String),
}

/// One interpreter session: an active ring plus name bindings. Point and
/// parameter names are auto-bound when a ring is created.
#[derive(Debug, Clone, Default)]
pub struct Environment {
    ring: Option<GcRing>,
    bindings: BTreeMap<String, Value>,
}

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ring(&self) -> Option<&GcRing> {
        self.ring.as_ref()
    }

    pub fn set_ring(&mut self, ring: GcRing) {
        self.bindings.clear();
        for (i, name) in ring.bracket_ring().point_names().to_vec().into_iter().enumerate() {
            if is_identifier(&name) {
                self.bindings.insert(name, Value::Expr(ring.point(i + 1)));
            }
        }
        for p in ring.bracket_ring().params().to_vec() {
            if let Ok(e) = ring.param(&p) {
                self.bindings.insert(p, Value::Expr(e));
            }
        }
        self.ring = Some(ring);
    }

    fn active(&self) -> Result<&GcRing> {
        self.ring
            .as_ref()
            .ok_or_else(|| Error::Eval("no active ring; call gc(...) or bracketRing(n, d) first".into()))
    }

    /// Evaluates one statement tree.
    pub fn evaluate(&mut self, ast: &Ast) -> Result<Value> {
        match ast {
            Ast::Assign(name, expr) => {
                let v = self.evaluate(expr)?;
                self.bindings.insert(name.clone(), v.clone());
                Ok(v)
            }
            Ast::Int(v) => {
                let ring = self.active()?;
                Ok(Value::Expr(ring.scalar(rat(*v))))
            }
            Ast::Ident(name) => self
                .bindings
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnknownName(name.clone())),
            Ast::BracketLiteral(atoms) => {
                let ring = self.active()?.clone();
                let indices = self.resolve_bracket_atoms(&ring, atoms)?;
                let p = ring.bracket_ring().bracket_poly(&indices)?;
                Ok(Value::Expr(ring.from_bracket_poly(p)))
            }
            Ast::Neg(inner) => {
                let v = self.expr_value(inner)?;
                Ok(Value::Expr(v.scale(&rat(-1))))
            }
            Ast::Pow(base, exp) => match self.evaluate(base)? {
                Value::Expr(e) => {
                    let mut acc = e.ring().scalar(rat(1));
                    for _ in 0..*exp {
                        acc = acc.join(&e)?;
                    }
                    Ok(Value::Expr(acc))
                }
                Value::MatrixPoly(p) => {
                    let mut acc = Poly::one(p.table().clone());
                    for _ in 0..*exp {
                        acc = acc.checked_mul(&p)?;
                    }
                    Ok(Value::MatrixPoly(acc))
                }
                other => Err(Error::Eval(format!(
                    "cannot raise {} to a power",
                    value_kind(&other)
                ))),
            },
            Ast::Add(a, b) => {
                let (x, y) = (self.expr_value(a)?, self.expr_value(b)?);
                Ok(Value::Expr(x.checked_add(&y)?))
            }
            Ast::Sub(a, b) => {
                let (x, y) = (self.expr_value(a)?, self.expr_value(b)?);
                Ok(Value::Expr(x.checked_sub(&y)?))
            }
            Ast::Join(a, b) => {
                let (x, y) = (self.expr_value(a)?, self.expr_value(b)?);
                Ok(Value::Expr(x.join(&y)?))
            }
            Ast::Meet(a, b) => {
                let (x, y) = (self.expr_value(a)?, self.expr_value(b)?);
                Ok(Value::Expr(x.meet(&y)?))
            }
            Ast::Range(..) => Err(Error::Eval(
                "a..z ranges are only valid inside gc(...) or bracketRing(...)".into(),
            )),
            Ast::Call(cmd, args) => self.call(cmd, args),
        }
    }

    fn expr_value(&mut self, ast: &Ast) -> Result<GcExpression> {
        match self.evaluate(ast)? {
            Value::Expr(e) => Ok(e),
            other => Err(Error::Eval(format!(
                "expected a ring expression, found {}",
                value_kind(&other)
            ))),
        }
    }

    fn call(&mut self, cmd: &str, args: &[Ast]) -> Result<Value> {
        match cmd {
            "gc" => {
                let (names, d, params) = self.ring_spec(args)?;
                let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
                let param_refs: Vec<&str> = params.iter().map(String::as_str).collect();
                let ring = GcRing::with_params(&name_refs, d, &param_refs)?;
                let desc = format!("{ring}");
                self.set_ring(ring);
                Ok(Value::Ring(desc))
            }
            "bracketRing" => {
                let [Ast::Int(n), Ast::Int(d)] = args else {
                    return Err(Error::Eval("usage: bracketRing(n, d)".into()));
                };
                if *n < 1 || *d < 1 {
                    return Err(Error::Eval("bracketRing needs positive n, d".into()));
                }
                let bracket = BracketRing::new(*n as usize, *d as usize)?;
                let desc = format!("{bracket}");
                self.set_ring(GcRing::from_bracket_ring(bracket));
                Ok(Value::Ring(desc))
            }
            "normalForm" => {
                let [arg] = args else {
                    return Err(Error::Eval("usage: normalForm(expr)".into()));
                };
                let e = self.expr_value(arg)?;
                Ok(Value::Expr(e.normal_form()?))
            }
            "factor" => {
                let [arg] = args else {
                    return Err(Error::Eval("usage: factor(expr)".into()));
                };
                let e = self.expr_value(arg)?;
                let p = degree_zero_or_top(&e)?;
                let ring = e.ring().bracket_ring().clone();
                let (content, brackets, cofactor) = ring.factor_limited(&p);
                Ok(Value::Factorization { ring, content, brackets, cofactor })
            }
            "coefficients" => {
                let [arg] = args else {
                    return Err(Error::Eval("usage: coefficients(expr)".into()));
                };
                let e = self.expr_value(arg)?;
                let p = degree_zero_or_top(&e)?;
                let ring = e.ring().bracket_ring();
                Ok(Value::Coefficients(p.coefficients_by_block(
                    crate::poly::Block::Param,
                    &ring.tableau_order(),
                )))
            }
            "proveEqual" => {
                let [a, b] = args else {
                    return Err(Error::Eval("usage: proveEqual(exprA, exprB)".into()));
                };
                let (x, y) = (self.expr_value(a)?, self.expr_value(b)?);
                let diff = x.checked_sub(&y)?;
                Ok(Value::Bool(diff.normal_form()?.is_zero()))
            }
            "psi" => {
                let [arg] = args else {
                    return Err(Error::Eval("usage: psi(expr)".into()));
                };
                let e = self.expr_value(arg)?;
                let p = degree_zero_or_top(&e)?;
                Ok(Value::MatrixPoly(e.ring().bracket_ring().psi_expand(&p)?))
            }
            "toBrackets" => {
                let [arg] = args else {
                    return Err(Error::Eval("usage: toBrackets(expr)".into()));
                };
                let v = self.evaluate(arg)?;
                let Value::MatrixPoly(p) = v else {
                    return Err(Error::Eval(
                        "toBrackets expects a matrix polynomial (the output of psi)".into(),
                    ));
                };
                let ring = self.active()?.clone();
                match ring.bracket_ring().to_bracket_polynomial(&p)? {
                    Subduction::InRing(h) => Ok(Value::Expr(ring.from_bracket_poly(h))),
                    Subduction::NotInRing { bracket_part, remainder } => {
                        Ok(Value::SubductionRemainder { bracket_part, remainder })
                    }
                }
            }
            other => Err(Error::Eval(format!("unknown command `{other}`"))),
        }
    }

    /// Parses `gc(range-or-name, d, params...)` argument lists.
    fn ring_spec(&self, args: &[Ast]) -> Result<(Vec<String>, usize, Vec<String>)> {
        if args.len() < 2 {
            return Err(Error::Eval("usage: gc(names, d [, params...])".into()));
        }
        let names = match &args[0] {
            Ast::Range(first, last) => expand_range(first, last)?,
            Ast::Ident(single) => vec![single.clone()],
            _ => {
                return Err(Error::Eval(
                    "first argument must be a point range like a..f".into(),
                ))
            }
        };
        let Ast::Int(d) = &args[1] else {
            return Err(Error::Eval("second argument must be the integer d".into()));
        };
        if *d < 1 {
            return Err(Error::Eval("d must be positive".into()));
        }
        let mut params = Vec::new();
        for extra in &args[2..] {
            let Ast::Ident(p) = extra else {
                return Err(Error::Eval("parameters must be identifiers".into()));
            };
            params.push(p.clone());
        }
        Ok((names, *d as usize, params))
    }

    /// Resolves bracket-literal atoms to point indices. Multi-character
    /// atoms split into single characters when every character names a
    /// point, so rendered forms like `[145]` or `[adf]` read back.
    fn resolve_bracket_atoms(&self, ring: &GcRing, atoms: &[BracketAtom]) -> Result<Vec<usize>> {
        let bracket = ring.bracket_ring();
        let mut out = Vec::new();
        for atom in atoms {
            match atom {
                BracketAtom::Index(i) => {
                    if *i >= 1 && *i <= bracket.n() {
                        out.push(*i);
                    } else {
                        // Digit-split: [256] means [2 5 6] when n <= 9.
                        let digits: Vec<usize> = i
                            .to_string()
                            .chars()
                            .map(|c| c.to_digit(10).unwrap() as usize)
                            .collect();
                        if digits.iter().all(|&v| v >= 1 && v <= bracket.n()) {
                            out.extend(digits);
                        } else {
                            return Err(Error::IndexOutOfRange { index: *i, n: bracket.n() });
                        }
                    }
                }
                BracketAtom::Name(s) => {
                    if let Ok(i) = bracket.point_index(s) {
                        out.push(i);
                    } else {
                        let parts: Vec<String> =
                            s.chars().map(|c| c.to_string()).collect();
                        let mut idx = Vec::with_capacity(parts.len());
                        for p in &parts {
                            idx.push(bracket.point_index(p)?);
                        }
                        out.extend(idx);
                    }
                }
            }
        }
        Ok(out)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Single-character ranges like `a..h` or multi-letter same-length ranges.
fn expand_range(first: &str, last: &str) -> Result<Vec<String>> {
    let (f, l) = match (first.chars().collect::<Vec<_>>(), last.chars().collect::<Vec<_>>()) {
        (f, l) if f.len() == 1 && l.len() == 1 => (f[0], l[0]),
        _ => {
            return Err(Error::Eval(format!(
                "range endpoints must be single characters: `{first}..{last}`"
            )))
        }
    };
    if l < f {
        return Err(Error::Eval(format!("empty range `{first}..{last}`")));
    }
    Ok((f..=l).map(|c| c.to_string()).collect())
}

fn degree_zero_or_top(e: &GcExpression) -> Result<Poly> {
    if e.degree() == Some(e.ring().d()) && !e.is_zero() && e.ring().d() > 0 {
        e.top_to_bracket()
    } else {
        e.as_bracket_poly()
    }
}

fn value_kind(v: &Value) -> &'static str {
    match v {
        Value::Expr(_) => "an expression",
        Value::MatrixPoly(_) => "a matrix polynomial",
        Value::Bool(_) => "a boolean",
        Value::Factorization { .. } => "a factorization",
        Value::Coefficients(_) => "a coefficient list",
        Value::SubductionRemainder { .. } => "a subduction remainder",
        Value::Ring(_) => "a ring",
    }
}

impl Value {
    /// Canonical text rendering, used by transcripts and the CLI.
    pub fn render(&self) -> String {
        match self {
            Value::Expr(e) => e.render(),
            Value::MatrixPoly(p) => p.render(),
            Value::Bool(b) => b.to_string(),
            Value::Factorization { ring, content, brackets, cofactor } => {
                let mut parts: Vec<String> = Vec::new();
                for b in brackets {
                    parts.push(ring.render_bracket(b));
                }
                if !cofactor.is_zero() && cofactor != &Poly::one(cofactor.table().clone()) {
                    parts.push(cofactor.render());
                }
                if !content.is_one() || parts.is_empty() {
                    parts.push(render_rational(content));
                }
                format!("{{{}}}", parts.join(", "))
            }
            Value::Coefficients(rows) => {
                let mut lines = Vec::new();
                for (m, c) in rows {
                    let key = if m.is_one() {
                        "1".to_string()
                    } else {
                        m.render(c.table())
                    };
                    lines.push(format!("{key}: {}", c.render()));
                }
                lines.join("\n")
            }
            Value::SubductionRemainder { bracket_part, remainder } => {
                format!(
                    "not in the bracket ring; bracket part {} with remainder {}",
                    bracket_part.render(),
                    remainder.render()
                )
            }
            Value::Ring(desc) => desc.clone(),
        }
    }
}

