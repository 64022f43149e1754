//! The bracket ring `B(n,d)`.
//!
//! Brackets `[λ₁…λ_d]` with `1 ≤ λ₁ < … < λ_d ≤ n` are the maximal minors of
//! an `n×d` matrix of indeterminates. They satisfy the quadratic
//! Grassmann-Plücker relations; the straightening algorithm rewrites any
//! bracket polynomial as a unique combination of *standard* tableaux, giving
//! canonical representatives modulo those relations. This module builds the
//! relation set, the tableau order, the straightening normal form, the
//! expansion of brackets into matrix entries, and the greedy subduction that
//! rewrites a matrix polynomial back in terms of brackets.

mod psi;
mod relations;
mod straighten;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use itertools::Itertools;
use num_traits::Zero;

use crate::poly::{rat, Block, Monomial, MonomialOrder, OrderKind, Poly, Rational, VarTable};
use crate::{Error, Result};

pub use psi::Subduction;

/// A strictly increasing `d`-tuple of point indices (1-based): one generator
/// of the bracket polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bracket(Vec<usize>);

impl Bracket {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }
}

/// A bracket monomial viewed as an array: rows are brackets sorted ascending
/// in the lexicographic bracket order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau(Vec<Bracket>);

impl Tableau {
    pub fn rows(&self) -> &[Bracket] {
        &self.0
    }

    /// Standard iff every column is weakly increasing top to bottom
    /// (equivalently: no adjacent row pair violates a column).
    pub fn is_standard(&self) -> bool {
        self.first_violation().is_none()
    }

    /// First `(row, column)` where adjacent rows decrease: the upper row's
    /// entry exceeds the lower row's in that column. Columns are 1-based.
    pub fn first_violation(&self) -> Option<(usize, usize)> {
        for r in 0..self.0.len().saturating_sub(1) {
            let (upper, lower) = (&self.0[r], &self.0[r + 1]);
            for c in 0..upper.width() {
                if upper.indices()[c] > lower.indices()[c] {
                    return Some((r, c + 1));
                }
            }
        }
        None
    }
}

/// The result of sorting an index sequence into a bracket: zero if an index
/// repeats, otherwise a sign and the sorted bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedBracket {
    Zero,
    NonZero { sign: i8, bracket: Bracket },
}

/// Immutable descriptor of `B(n,d)`: point names, the bracket variable
/// table (optionally with formal parameters), the matrix variable table for
/// the expansion into minors, and the lazily built straightening relations.
#[derive(Debug)]
pub struct BracketRing {
    n: usize,
    d: usize,
    point_names: Vec<String>,
    params: Vec<String>,
    /// Brackets in descending lexicographic order, aligned with the bracket
    /// block of `bracket_table` (position = rank; the lexicographically
    /// largest bracket is the highest-ranked variable).
    brackets: Vec<Bracket>,
    bracket_var: HashMap<Bracket, usize>,
    bracket_table: Arc<VarTable>,
    matrix_table: Arc<VarTable>,
    relations: OnceLock<Vec<Poly>>,
}

impl PartialEq for BracketRing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.d == other.d
            && self.point_names == other.point_names
            && self.params == other.params
    }
}
impl Eq for BracketRing {}

impl BracketRing {
    /// `B(n,d)` with points named `1..n`.
    pub fn new(n: usize, d: usize) -> Result<Arc<Self>> {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Self::with_names(&names.iter().map(String::as_str).collect::<Vec<_>>(), d, &[])
    }

    /// `B(n,d)` over named points, optionally with formal parameters in the
    /// coefficient ring.
    pub fn with_names(names: &[&str], d: usize, params: &[&str]) -> Result<Arc<Self>> {
        let n = names.len();
        if d < 1 || d > n {
            return Err(Error::InvalidDimensions { n, d });
        }
        let mut seen = std::collections::HashSet::new();
        for &s in names.iter().chain(params.iter()) {
            if !seen.insert(s.to_string()) {
                return Err(Error::DuplicateName(s.to_string()));
            }
        }
        let point_names: Vec<String> = names.iter().map(|s| s.to_string()).collect();

        let mut brackets: Vec<Bracket> =
            (1..=n).combinations(d).map(Bracket).collect();
        // Highest-ranked variable first: descending lexicographic order.
        brackets.sort();
        brackets.reverse();
        let bracket_var: HashMap<Bracket, usize> = brackets
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), i))
            .collect();

        let single_char = point_names.iter().all(|s| s.chars().count() == 1);
        let mut vars: Vec<(String, Block)> = brackets
            .iter()
            .map(|b| (render_bracket_name(b, &point_names, single_char), Block::Bracket))
            .collect();
        vars.extend(params.iter().map(|p| (p.to_string(), Block::Param)));
        let bracket_table =
            Arc::new(VarTable::new(vars, OrderKind::GrevlexBlocked)?);

        let matrix_vars = (1..=n).flat_map(|i| {
            (1..=d).map(move |j| (format!("x({i},{j})"), Block::Matrix))
        });
        let matrix_table = Arc::new(VarTable::new(matrix_vars, OrderKind::Lex)?);

        Ok(Arc::new(Self {
            n,
            d,
            point_names,
            params: params.iter().map(|s| s.to_string()).collect(),
            brackets,
            bracket_var,
            bracket_table,
            matrix_table,
            relations: OnceLock::new(),
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn point_names(&self) -> &[String] {
        &self.point_names
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn num_brackets(&self) -> usize {
        self.brackets.len()
    }

    /// The bracket-plus-parameter variable table.
    pub fn table(&self) -> &Arc<VarTable> {
        &self.bracket_table
    }

    /// The `n·d` matrix-entry table for [`psi_expand`](Self::psi_expand).
    pub fn matrix_table(&self) -> &Arc<VarTable> {
        &self.matrix_table
    }

    /// The tableau order: blocked grevlex over bracket variables ranked by
    /// lexicographic bracket comparison (largest bracket ranked highest).
    pub fn tableau_order(&self) -> MonomialOrder {
        MonomialOrder::new(OrderKind::GrevlexBlocked, self.bracket_table.clone())
    }

    /// Row-major lexicographic order on the matrix entries, under which the
    /// main diagonal leads every maximal minor.
    pub fn matrix_order(&self) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, self.matrix_table.clone())
    }

    pub fn point_index(&self, name: &str) -> Result<usize> {
        self.point_names
            .iter()
            .position(|p| p == name)
            .map(|i| i + 1)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Variable index of a sorted bracket in the bracket table.
    pub fn bracket_var(&self, b: &Bracket) -> usize {
        self.bracket_var[b]
    }

    pub fn bracket_at(&self, var_index: usize) -> &Bracket {
        &self.brackets[var_index]
    }

    /// Variable index of a parameter name.
    pub fn param_var(&self, name: &str) -> Result<usize> {
        self.bracket_table
            .index_of(name)
            .filter(|&i| self.bracket_table.block(i) == Block::Param)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Sorts an index sequence into a signed bracket; repeated indices give
    /// zero (a determinant with a repeated row).
    pub fn normalize_bracket(&self, seq: &[usize]) -> Result<SignedBracket> {
        if seq.len() != self.d {
            return Err(Error::Degree(format!(
                "bracket needs {} indices, got {}",
                self.d,
                seq.len()
            )));
        }
        for &i in seq {
            if i < 1 || i > self.n {
                return Err(Error::IndexOutOfRange { index: i, n: self.n });
            }
        }
        let mut sorted = seq.to_vec();
        // Count inversions of the sorting permutation.
        let mut sign = 1i8;
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                match sorted[j].cmp(&sorted[i]) {
                    std::cmp::Ordering::Less => sign = -sign,
                    std::cmp::Ordering::Equal => return Ok(SignedBracket::Zero),
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
        sorted.sort_unstable();
        Ok(SignedBracket::NonZero { sign, bracket: Bracket(sorted) })
    }

    /// The polynomial `±[seq]` (or 0) for an arbitrary index sequence.
    pub fn bracket_poly(&self, seq: &[usize]) -> Result<Poly> {
        match self.normalize_bracket(seq)? {
            SignedBracket::Zero => Ok(Poly::zero(self.bracket_table.clone())),
            SignedBracket::NonZero { sign, bracket } => {
                let var = self.bracket_var(&bracket);
                Ok(Poly::term(
                    self.bracket_table.clone(),
                    Monomial::var(var),
                    rat(sign as i64),
                ))
            }
        }
    }

    /// Polynomial for one parameter variable.
    pub fn param_poly(&self, name: &str) -> Result<Poly> {
        Ok(Poly::var(self.bracket_table.clone(), self.param_var(name)?))
    }

    /// The tableau of the bracket part of a monomial: rows sorted ascending.
    pub fn tableau_of(&self, m: &Monomial) -> Tableau {
        let mut rows = Vec::new();
        for (var, exp) in m.iter() {
            if self.bracket_table.block(var) != Block::Bracket {
                continue;
            }
            for _ in 0..exp {
                rows.push(self.brackets[var].clone());
            }
        }
        rows.sort();
        Tableau(rows)
    }

    /// Total order on tableaux through the tableau order on their monomials.
    pub fn compare_tableaux(&self, a: &Tableau, b: &Tableau) -> std::cmp::Ordering {
        let ord = self.tableau_order();
        ord.cmp(&self.tableau_monomial(a), &self.tableau_monomial(b))
    }

    fn tableau_monomial(&self, t: &Tableau) -> Monomial {
        Monomial::from_pairs(t.rows().iter().map(|b| (self.bracket_var(b), 1)))
    }

    /// `true` when every bracket monomial of `f` is a standard tableau.
    pub fn is_straightened(&self, f: &Poly) -> bool {
        f.terms().all(|(m, _)| self.tableau_of(m).is_standard())
    }

    /// Decides `p = q` in `B(n,d)`: the difference straightens to zero.
    pub fn prove_equal(&self, p: &Poly, q: &Poly) -> Result<bool> {
        Ok(self.straighten(&p.checked_sub(q)?)?.is_zero())
    }

    /// The unique scalar `c` with `p = c·q` in `B(n,d)`, if any. Returns
    /// `None` when `q ≡ 0` or the polynomials are not proportional.
    pub fn prove_proportional(&self, p: &Poly, q: &Poly) -> Result<Option<Rational>> {
        let sp = self.straighten(p)?;
        let sq = self.straighten(q)?;
        if sq.is_zero() {
            return Ok(None);
        }
        if sp.is_zero() {
            return Ok(Some(Rational::zero()));
        }
        let ord = self.tableau_order();
        let (mp, cp) = sp.leading_term(&ord)?;
        let (mq, cq) = sq.leading_term(&ord)?;
        if mp != mq {
            return Ok(None);
        }
        let c = cp / cq;
        if sp == sq.scalar_mul(&c) {
            Ok(Some(c))
        } else {
            Ok(None)
        }
    }

    /// Splits `f = content · Π(bracket factors) · cofactor` by exhaustive
    /// trial division by single bracket variables; the cofactor is primitive
    /// with positive leading coefficient and admits no further single-bracket
    /// divisor. No general factorization is attempted.
    pub fn factor_limited(&self, f: &Poly) -> (Rational, Vec<Bracket>, Poly) {
        if f.is_zero() {
            return (Rational::zero(), Vec::new(), f.clone());
        }
        let mut factors = Vec::new();
        let mut rest = f.clone();
        for var in 0..self.brackets.len() {
            let vm = Monomial::var(var);
            loop {
                if rest.terms().all(|(m, _)| vm.divides(m)) {
                    rest = Poly::from_terms(
                        rest.table().clone(),
                        rest.terms().map(|(m, c)| (m.div(&vm), c.clone())),
                    );
                    factors.push(self.brackets[var].clone());
                } else {
                    break;
                }
            }
        }
        let (content, primitive) = rest.content_primitive();
        (content, factors, primitive)
    }

    /// Canonical rendering of one bracket.
    pub fn render_bracket(&self, b: &Bracket) -> String {
        let single = self.point_names.iter().all(|s| s.chars().count() == 1);
        render_bracket_name(b, &self.point_names, single)
    }
}

/// `[λ₁λ₂…]` with names run together when all single-character, otherwise
/// space-separated.
fn render_bracket_name(b: &Bracket, names: &[String], single_char: bool) -> String {
    let sep = if single_char { "" } else { " " };
    let body = b
        .indices()
        .iter()
        .map(|&i| names[i - 1].as_str())
        .collect::<Vec<_>>()
        .join(sep);
    format!("[{body}]")
}

impl fmt::Display for BracketRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.n, self.d)
    }
}
