//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are exact `BigRational`s throughout; there is no floating
//! point anywhere in the crate's algebra. Polynomials are immutable values
//! owning an `Arc` of their [`VarTable`]; all operations are pure.

mod monomial;
mod order;
mod vartable;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use vartable::{Block, VarTable};

use crate::{Error, Result};

/// Exact rational scalar; always reduced, denominator positive, zero as 0/1.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A sparse polynomial: a finite map monomial → nonzero rational coefficient.
#[derive(Debug, Clone)]
pub struct Poly {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other) && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl Poly {
    pub fn zero(table: Arc<VarTable>) -> Self {
        Self { table, terms: BTreeMap::new() }
    }

    pub fn constant(table: Arc<VarTable>, c: Rational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(table: Arc<VarTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    /// The polynomial consisting of the single variable `index`.
    pub fn var(table: Arc<VarTable>, index: usize) -> Self {
        Self::term(table, Monomial::var(index), Rational::one())
    }

    pub fn term(table: Arc<VarTable>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(
        table: Arc<VarTable>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree (all blocks); zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn same_table(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || self.table == other.table
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if self.same_table(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = Self::zero(self.table.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.table.clone());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.table.clone());
        }
        let mut out = Self::zero(self.table.clone());
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1 * c);
        }
        out
    }

    /// The ≺-maximal term under `ord`. Errors on the zero polynomial.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, Rational)> {
        let mut best: Option<&Monomial> = None;
        for m in self.terms.keys() {
            best = Some(match best {
                None => m,
                Some(b) => ord.max(b, m),
            });
        }
        let m = best.ok_or(Error::ZeroPolynomial)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(ord)?.0)
    }

    /// Multivariate division remainder of `self` by the sequence `divisors`.
    ///
    /// Deterministic: the current leading term is reduced by the first
    /// divisor whose leading monomial divides it; irreducible leading terms
    /// move to the remainder. The remainder has no term divisible by any
    /// divisor's leading monomial, and `self − remainder` lies in the ideal
    /// generated by the divisors.
    pub fn reduce(&self, divisors: &[Poly], ord: &MonomialOrder) -> Result<Self> {
        let lead: Vec<(Monomial, Rational)> = divisors
            .iter()
            .map(|g| g.leading_term(ord))
            .collect::<Result<_>>()?;
        let mut work = self.clone();
        let mut remainder = Self::zero(self.table.clone());
        while !work.is_zero() {
            let (m, c) = work.leading_term(ord)?;
            match lead.iter().position(|(lm, _)| lm.divides(&m)) {
                Some(i) => {
                    let (lm, lc) = &lead[i];
                    let factor = m.div(lm);
                    let scale = &c / lc;
                    work = work.checked_sub(&divisors[i].mul_term(&factor, &scale))?;
                }
                None => {
                    remainder.add_term(m.clone(), c.clone());
                    work.terms.remove(&m);
                }
            }
        }
        Ok(remainder)
    }

    /// Splits `f = content · primitive` with `primitive` having coprime
    /// integer coefficients and positive leading coefficient under the
    /// table's default order. Zero splits as `(0, 0)`.
    pub fn content_primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        let ord = MonomialOrder::new(self.table.default_order(), self.table.clone());
        let (_, lc) = self.leading_term(&ord).expect("nonzero");
        if lc.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scalar_mul(&inv))
    }

    /// Collects `f = Σ key · coefficient` where `key` runs over the `block`
    /// sub-monomials of `f`'s terms; coefficients contain no `block`
    /// variables. Rows come back sorted descending under `ord`.
    pub fn coefficients_by_block(
        &self,
        block: Block,
        ord: &MonomialOrder,
    ) -> Vec<(Monomial, Poly)> {
        let mut rows: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.restrict(&self.table, block);
            let rest = m.restrict_complement(&self.table, block);
            rows.entry(key)
                .or_insert_with(|| Poly::zero(self.table.clone()))
                .add_term(rest, c.clone());
        }
        let mut out: Vec<(Monomial, Poly)> = rows.into_iter().collect();
        out.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        out
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut ts: Vec<(Monomial, Rational)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        ts.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        ts
    }

    /// Canonical text rendering: terms descending under the table's default
    /// order, unit coefficients suppressed, explicit signs between terms.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let ord = MonomialOrder::new(self.table.default_order(), self.table.clone());
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(&ord).into_iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mag = c.abs();
            if m.is_one() {
                out.push_str(&render_rational(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&render_rational(&mag));
                    out.push('*');
                }
                out.push_str(&m.render(&self.table));
            }
        }
        out
    }
}

/// `p/q` with the denominator suppressed when 1.
pub fn render_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomials over different tables")
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomials over different tables")
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomials over different tables")
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.negate()
    }
}

/// Deterministic total order on polynomials over one table: compare term
/// lists descending under `ord`, then coefficients. Used only to fix
/// sequencing (e.g. of cached relation sets), not for algebra.
pub fn cmp_polys(a: &Poly, b: &Poly, ord: &MonomialOrder) -> Ordering {
    let ta = a.sorted_terms(ord);
    let tb = b.sorted_terms(ord);
    for ((ma, ca), (mb, cb)) in ta.iter().zip(tb.iter()) {
        let o = ord.cmp(ma, mb);
        if o != Ordering::Equal {
            return o;
        }
        let o = ca.cmp(cb);
        if o != Ordering::Equal {
            return o;
        }
    }
    ta.len().cmp(&tb.len())
}
