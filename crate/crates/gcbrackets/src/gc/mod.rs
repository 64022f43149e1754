//! The Grassmann-Cayley ring `G_d(e₁,…,e_n)` over the bracket ring.
//!
//! Blades are squarefree products of the point generators; products of more
//! than `d` distinct points are identified with zero. The join is inherited
//! from (anti-commutative) polynomial multiplication. The meet of extensors
//! `a = a₁⋯a_j` and `b = b₁⋯b_k` with `j + k ≥ d` is the shuffle product
//!
//! ```text
//!   a ∧ b = Σ_w sgn(w) · [a_{w₁} … a_{w_{d−k}} b₁ … b_k] · a_{w_{d−k+1}} ⋯ a_{w_j}
//! ```
//!
//! summed over permutations `w` of `{1,…,j}` increasing on the first `d−k`
//! and on the last `j−d+k` positions. Geometrically the join spans and the
//! meet intersects: evaluating the points at concrete vectors recovers the
//! classical exterior-algebra operations (see [`crate::oracle`]).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::bracket::BracketRing;
use crate::poly::{Poly, Rational};
use crate::{Error, Result};

/// A strictly increasing subset of point indices; the empty blade is the
/// ring's unit. Degrees above `d` never appear inside a [`GcExpression`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(Vec<usize>);

impl Blade {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

/// The Grassmann-Cayley ring descriptor: an embedded bracket ring whose
/// point symbols double as the degree-1 generators.
#[derive(Debug, Clone)]
pub struct GcRing {
    bracket: Arc<BracketRing>,
}

impl PartialEq for GcRing {
    fn eq(&self, other: &Self) -> bool {
        self.bracket == other.bracket
    }
}
impl Eq for GcRing {}

impl GcRing {
    pub fn new(names: &[&str], d: usize) -> Result<Self> {
        Self::with_params(names, d, &[])
    }

    pub fn with_params(names: &[&str], d: usize, params: &[&str]) -> Result<Self> {
        Ok(Self { bracket: BracketRing::with_names(names, d, params)? })
    }

    /// Wraps an existing bracket ring.
    pub fn from_bracket_ring(bracket: Arc<BracketRing>) -> Self {
        Self { bracket }
    }

    pub fn bracket_ring(&self) -> &Arc<BracketRing> {
        &self.bracket
    }

    pub fn n(&self) -> usize {
        self.bracket.n()
    }

    pub fn d(&self) -> usize {
        self.bracket.d()
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.bracket, &other.bracket) || self.bracket == other.bracket
    }

    /// The degree-1 generator for point `index` (1-based).
    pub fn point(&self, index: usize) -> GcExpression {
        assert!(index >= 1 && index <= self.n(), "point index out of range");
        GcExpression::single(
            self.clone(),
            Blade(vec![index]),
            Poly::one(self.bracket.table().clone()),
        )
    }

    pub fn point_by_name(&self, name: &str) -> Result<GcExpression> {
        Ok(self.point(self.bracket.point_index(name)?))
    }

    /// A parameter as a degree-0 scalar.
    pub fn param(&self, name: &str) -> Result<GcExpression> {
        Ok(GcExpression::scalar_poly(
            self.clone(),
            self.bracket.param_poly(name)?,
        ))
    }

    /// A rational constant as a degree-0 scalar.
    pub fn scalar(&self, c: Rational) -> GcExpression {
        GcExpression::scalar_poly(
            self.clone(),
            Poly::constant(self.bracket.table().clone(), c),
        )
    }

    pub fn zero(&self) -> GcExpression {
        GcExpression { ring: self.clone(), terms: BTreeMap::new() }
    }

    /// A degree-0 expression holding a bracket polynomial.
    pub fn from_bracket_poly(&self, p: Poly) -> GcExpression {
        GcExpression::scalar_poly(self.clone(), p)
    }

    /// A linear combination of points: the lift of `Σ cᵢ·ptᵢ` to degree 1.
    pub fn lift(&self, combo: &[(Poly, usize)]) -> Result<GcExpression> {
        let mut out = self.zero();
        for (c, i) in combo {
            if *i < 1 || *i > self.n() {
                return Err(Error::IndexOutOfRange { index: *i, n: self.n() });
            }
            out = out.checked_add(&GcExpression::single(
                self.clone(),
                Blade(vec![*i]),
                c.clone(),
            ))?;
        }
        Ok(out)
    }

    fn render_blade(&self, b: &Blade) -> String {
        let names = self.bracket.point_names();
        let single = names.iter().all(|s| s.chars().count() == 1);
        let sep = if single { "" } else { " " };
        b.indices()
            .iter()
            .map(|&i| names[i - 1].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for GcRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.bracket.point_names();
        write!(
            f,
            "G_{}({}..{})",
            self.d(),
            names.first().map(String::as_str).unwrap_or(""),
            names.last().map(String::as_str).unwrap_or("")
        )
    }
}

/// An element of the Grassmann-Cayley ring: a finite sum of blades with
/// bracket-polynomial coefficients (parameters allowed). Mixed-degree sums
/// are representable; the meet insists on homogeneous operands.
#[derive(Debug, Clone)]
pub struct GcExpression {
    ring: GcRing,
    terms: BTreeMap<Blade, Poly>,
}

impl PartialEq for GcExpression {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}
impl Eq for GcExpression {}

impl GcExpression {
    fn single(ring: GcRing, blade: Blade, coeff: Poly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() && blade.degree() <= ring.d() {
            terms.insert(blade, coeff);
        }
        Self { ring, terms }
    }

    fn scalar_poly(ring: GcRing, p: Poly) -> Self {
        Self::single(ring, Blade::empty(), p)
    }

    pub fn ring(&self) -> &GcRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: &Blade) -> Poly {
        self.terms
            .get(blade)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.ring.bracket.table().clone()))
    }

    /// `Some(k)` when all blades have degree `k`; the zero expression is
    /// homogeneous of every degree and reports `Some(0)`.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Blade::degree);
        let Some(first) = it.next() else { return Some(0) };
        it.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, blade: Blade, coeff: Poly) {
        if coeff.is_zero() || blade.degree() > self.ring.d() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.negate());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.ring.zero();
        for (b, p) in &self.terms {
            out.add_term(b.clone(), p.scalar_mul(c));
        }
        out
    }

    pub fn scale_poly(&self, c: &Poly) -> Result<Self> {
        let mut out = self.ring.zero();
        for (b, p) in &self.terms {
            out.add_term(b.clone(), p.checked_mul(c)?);
        }
        Ok(out)
    }

    /// The join (wedge): bilinear extension of the signed merge of disjoint
    /// blades. Overlapping blades and degrees above `d` vanish.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let d = self.ring.d();
        let mut out = self.ring.zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.degree() + b.degree() > d {
                    continue;
                }
                let Some((sign, merged)) = merge_blades(a, b) else { continue };
                let mut coeff = ca.checked_mul(cb)?;
                if sign < 0 {
                    coeff = coeff.negate();
                }
                out.add_term(merged, coeff);
            }
        }
        Ok(out)
    }

    /// The meet (shuffle product). Requires homogeneous operands of degrees
    /// `j`, `k` with `j + k ≥ d`; the result is homogeneous of degree
    /// `j + k − d`, a degree-0 bracket-ring element when `j + k = d`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let d = self.ring.d();
        let j = self.degree().ok_or_else(|| {
            Error::Degree("meet requires a homogeneous left operand".into())
        })?;
        let k = other.degree().ok_or_else(|| {
            Error::Degree("meet requires a homogeneous right operand".into())
        })?;
        if !self.is_zero() && !other.is_zero() && j + k < d {
            return Err(Error::Degree(format!(
                "meet needs degrees j + k >= d; got j = {j}, k = {k}, d = {d}"
            )));
        }
        let take = d - k; // positions of `a` that enter the bracket
        let mut out = self.ring.zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let coeff = ca.checked_mul(cb)?;
                for positions in (0..j).combinations(take) {
                    let chosen: std::collections::HashSet<usize> =
                        positions.iter().copied().collect();
                    let mut inversions = 0usize;
                    for &i in &positions {
                        inversions += (0..i).filter(|x| !chosen.contains(x)).count();
                    }
                    let mut seq: Vec<usize> =
                        positions.iter().map(|&i| a.indices()[i]).collect();
                    seq.extend_from_slice(b.indices());
                    let bracket = self.ring.bracket.bracket_poly(&seq)?;
                    if bracket.is_zero() {
                        continue;
                    }
                    let rest = Blade(
                        (0..j)
                            .filter(|i| !chosen.contains(i))
                            .map(|i| a.indices()[i])
                            .collect(),
                    );
                    let mut term = coeff.checked_mul(&bracket)?;
                    if inversions % 2 == 1 {
                        term = term.negate();
                    }
                    out.add_term(rest, term);
                }
            }
        }
        Ok(out)
    }

    /// Identifies a homogeneous degree-`d` expression with the bracket
    /// polynomial `Σ coeff(blade) · [blade]`.
    pub fn top_to_bracket(&self) -> Result<Poly> {
        let d = self.ring.d();
        if self.degree() != Some(d) && !self.is_zero() {
            return Err(Error::Degree(format!(
                "expected a homogeneous expression of degree {d}"
            )));
        }
        let mut out = Poly::zero(self.ring.bracket.table().clone());
        for (b, c) in &self.terms {
            let bracket = self.ring.bracket.bracket_poly(b.indices())?;
            out = &out + &c.checked_mul(&bracket)?;
        }
        Ok(out)
    }

    /// A degree-0 expression's bracket polynomial.
    pub fn as_bracket_poly(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero(self.ring.bracket.table().clone()));
        }
        if self.degree() != Some(0) {
            return Err(Error::Degree("expression has positive degree".into()));
        }
        Ok(self.coefficient(&Blade::empty()))
    }

    /// Straightens every blade coefficient. A homogeneous expression of top
    /// degree `d > 0` is first identified with its bracket polynomial, so
    /// the result of `normal_form` is always reduced to standard tableaux
    /// and top-degree expressions become canonical degree-0 values.
    pub fn normal_form(&self) -> Result<Self> {
        let d = self.ring.d();
        if d > 0 && self.degree() == Some(d) && !self.is_zero() {
            let p = self.top_to_bracket()?;
            let nf = self.ring.bracket.straighten(&p)?;
            return Ok(GcExpression::scalar_poly(self.ring.clone(), nf));
        }
        let mut out = self.ring.zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), self.ring.bracket.straighten(c)?);
        }
        Ok(out)
    }

    /// Canonical rendering: blades ascending by (degree, indices); the
    /// degree-0 part renders as a bare bracket polynomial.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut blades: Vec<&Blade> = self.terms.keys().collect();
        blades.sort_by_key(|b| (b.degree(), b.indices().to_vec()));
        let mut out = String::new();
        for blade in blades {
            let coeff = &self.terms[blade];
            let piece = if blade.degree() == 0 {
                coeff.render()
            } else {
                let name = self.ring.render_blade(blade);
                if coeff == &Poly::one(coeff.table().clone()) {
                    name
                } else if coeff == &Poly::one(coeff.table().clone()).negate() {
                    format!("-{name}")
                } else if coeff.num_terms() == 1 {
                    format!("{}*{}", coeff.render(), name)
                } else {
                    format!("({})*{}", coeff.render(), name)
                }
            };
            if out.is_empty() || piece.starts_with('-') {
                out.push_str(&piece);
            } else {
                out.push('+');
                out.push_str(&piece);
            }
        }
        out
    }
}

/// Merges two sorted disjoint blades, counting the sign of the interleaving
/// permutation; `None` when they share a point.
fn merge_blades(a: &Blade, b: &Blade) -> Option<(i8, Blade)> {
    let mut out = Vec::with_capacity(a.degree() + b.degree());
    let (mut i, mut j) = (0, 0);
    let mut sign = 1i8;
    while i < a.0.len() && j < b.0.len() {
        if a.0[i] < b.0[j] {
            out.push(a.0[i]);
            i += 1;
        } else if b.0[j] < a.0[i] {
            // b's element jumps over the remaining elements of a.
            if (a.0.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b.0[j]);
            j += 1;
        } else {
            return None;
        }
    }
    out.extend_from_slice(&a.0[i..]);
    out.extend_from_slice(&b.0[j..]);
    Some((sign, Blade(out)))
}

impl fmt::Display for GcExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
