//! Expansion of brackets into matrix entries, and subduction back.
//!
//! A bracket `[λ₁…λ_d]` expands to the `d×d` determinant of rows `λ₁,…,λ_d`
//! of the generic `n×d` matrix `X`. Under the row-major lexicographic order
//! on the entries `x(i,j)`, the leading term of such a minor is its main
//! diagonal with coefficient +1, which is what the greedy subduction below
//! exploits to rewrite a polynomial in the `x(i,j)` as a polynomial in
//! brackets whenever possible.

use itertools::Itertools;

use crate::poly::{rat, Block, Monomial, Poly};
use crate::{Error, Result};

use super::{Bracket, BracketRing};

/// Outcome of rewriting a matrix polynomial in terms of brackets.
#[derive(Debug, Clone, PartialEq)]
pub enum Subduction {
    /// The input lies in the bracket ring; `psi_expand` of the result gives
    /// back the input exactly.
    InRing(Poly),
    /// Greedy peeling got stuck; `remainder` collects the irreducible terms
    /// and `bracket_part` what was rewritten (so input = ψ(bracket_part) +
    /// remainder).
    NotInRing { bracket_part: Poly, remainder: Poly },
}

impl BracketRing {
    /// The fully expanded image of a parameter-free bracket polynomial in
    /// the matrix-entry ring. A ring homomorphism.
    pub fn psi_expand(&self, f: &Poly) -> Result<Poly> {
        let mut out = Poly::zero(self.matrix_table().clone());
        for (m, c) in f.terms() {
            let mut prod = Poly::constant(self.matrix_table().clone(), c.clone());
            for (var, exp) in m.iter() {
                if self.table().block(var) == Block::Param {
                    return Err(Error::ParamsUnsupported(
                        "psi is defined on bracket polynomials only".into(),
                    ));
                }
                let minor = self.minor_expansion(self.bracket_at(var));
                for _ in 0..exp {
                    prod = &prod * &minor;
                }
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    /// Leibniz expansion of the maximal minor on the bracket's rows.
    fn minor_expansion(&self, b: &Bracket) -> Poly {
        let d = self.d();
        let rows = b.indices();
        let mut out = Poly::zero(self.matrix_table().clone());
        for perm in (0..d).permutations(d) {
            let mut inversions = 0;
            for i in 0..d {
                for j in (i + 1)..d {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let m = Monomial::from_pairs(
                (0..d).map(|i| (self.matrix_var(rows[i], perm[i] + 1), 1)),
            );
            out = &out + &Poly::term(self.matrix_table().clone(), m, rat(sign));
        }
        out
    }

    /// Variable index of `x(row, col)` (both 1-based) in the matrix table.
    pub fn matrix_var(&self, row: usize, col: usize) -> usize {
        (row - 1) * self.d() + (col - 1)
    }

    /// Rewrites a polynomial in the matrix entries as a bracket polynomial
    /// by greedy subduction: repeatedly factor the current lexicographic
    /// leading monomial into minor diagonals, peeling the lexicographically
    /// largest admissible bracket first, and subtract the matching bracket
    /// product's expansion. Failure is a value, not an error.
    pub fn to_bracket_polynomial(&self, g: &Poly) -> Result<Subduction> {
        let ord = self.matrix_order();
        let mut work = g.clone();
        let mut bracket_part = Poly::zero(self.table().clone());
        let mut remainder = Poly::zero(self.matrix_table().clone());
        while !work.is_zero() {
            let (m, c) = work.leading_term(&ord)?;
            match self.peel_diagonals(&m) {
                Some(brackets) => {
                    let mut h = Poly::constant(self.table().clone(), c.clone());
                    for b in &brackets {
                        h = &h * &self.bracket_poly(b.indices())?;
                    }
                    work = work.checked_sub(&self.psi_expand(&h)?)?;
                    bracket_part = &bracket_part + &h;
                }
                None => {
                    remainder = &remainder
                        + &Poly::term(self.matrix_table().clone(), m.clone(), c.clone());
                    let t = Poly::term(self.matrix_table().clone(), m, c);
                    work = work.checked_sub(&t)?;
                }
            }
        }
        if remainder.is_zero() {
            Ok(Subduction::InRing(bracket_part))
        } else {
            Ok(Subduction::NotInRing { bracket_part, remainder })
        }
    }

    /// Factors a matrix monomial into bracket diagonals
    /// `x(λ₁,1)·x(λ₂,2)···x(λ_d,d)`, greedily taking the largest admissible
    /// row for the last column first. Returns `None` if the monomial is not
    /// an exact product of diagonals.
    fn peel_diagonals(&self, m: &Monomial) -> Option<Vec<Bracket>> {
        let d = self.d();
        // Remaining multiplicity per (row, col).
        let mut left: std::collections::BTreeMap<(usize, usize), u32> =
            std::collections::BTreeMap::new();
        let mut total = 0u32;
        for (var, exp) in m.iter() {
            let row = var / d + 1;
            let col = var % d + 1;
            left.insert((row, col), exp);
            total += exp;
        }
        if total % d as u32 != 0 {
            return None;
        }
        let mut out = Vec::new();
        while total > 0 {
            let mut rows = Vec::with_capacity(d);
            let mut bound = usize::MAX;
            for col in (1..=d).rev() {
                let pick = left
                    .iter()
                    .filter(|(&(r, c), &e)| c == col && e > 0 && r < bound)
                    .map(|(&(r, _), _)| r)
                    .max()?;
                bound = pick;
                rows.push(pick);
            }
            rows.reverse();
            for (i, &r) in rows.iter().enumerate() {
                *left.get_mut(&(r, i + 1)).unwrap() -= 1;
                total -= 1;
            }
            out.push(Bracket(rows));
        }
        Some(out)
    }
}
