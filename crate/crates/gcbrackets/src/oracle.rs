//! Independent numeric backends for cross-checking the symbolic layers.
//!
//! Everything here works over exact rationals at concrete point
//! configurations: brackets evaluate to determinants, blades to wedge
//! products, and the meet to an honest subspace intersection computed by
//! nullspace linear algebra. Property tests compare the symbolic shuffle
//! product against [`classical_meet`] on randomized configurations.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::Rng;

use crate::bracket::BracketRing;
use crate::gc::GcExpression;
use crate::poly::{rat, Block, Poly, Rational};
use crate::{Error, Result};

/// Concrete coordinates for the `n` points: row `i` (0-based for point
/// `i+1`) is a length-`d` rational vector.
#[derive(Debug, Clone)]
pub struct PointAssignment {
    rows: Vec<Vec<Rational>>,
}

impl PointAssignment {
    pub fn new(rows: Vec<Vec<Rational>>) -> Self {
        Self { rows }
    }

    /// Integer coordinates sampled uniformly from `[-10, 10]`.
    pub fn random(n: usize, d: usize, rng: &mut impl Rng) -> Self {
        Self {
            rows: (0..n)
                .map(|_| (0..d).map(|_| rat(rng.gen_range(-10..=10))).collect())
                .collect(),
        }
    }

    pub fn row(&self, point: usize) -> &[Rational] {
        &self.rows[point - 1]
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn d(&self) -> usize {
        self.rows.first().map(Vec::len).unwrap_or(0)
    }
}

/// A degree-`k` element of the exterior algebra of the ambient `d`-space in
/// coordinates: sorted `k`-subsets of `{1..d}` mapped to rationals, zeros
/// omitted. Degree 0 is a scalar keyed by the empty subset. Zero extensors
/// compare equal regardless of nominal degree.
#[derive(Debug, Clone, Eq)]
pub struct NumericExtensor {
    degree: usize,
    coords: BTreeMap<Vec<usize>, Rational>,
}

impl PartialEq for NumericExtensor {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.is_empty() && other.coords.is_empty() {
            return true;
        }
        self.degree == other.degree && self.coords == other.coords
    }
}

impl NumericExtensor {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coords: BTreeMap::new() }
    }

    pub fn scalar(c: Rational) -> Self {
        let mut e = Self::zero(0);
        e.insert(Vec::new(), c);
        e
    }

    /// The wedge `v₁ ∧ … ∧ v_k` of explicit vectors: coordinates are the
    /// maximal minors of the `k×d` matrix they form.
    pub fn from_vectors(vectors: &[Vec<Rational>], d: usize) -> Self {
        let k = vectors.len();
        let mut e = Self::zero(k);
        for cols in (1..=d).combinations(k) {
            let minor = det(&submatrix(vectors, &cols));
            e.insert(cols, minor);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coords.iter()
    }

    pub fn coordinate(&self, key: &[usize]) -> Rational {
        self.coords.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// As a plain rational, for degree-0 extensors.
    pub fn as_scalar(&self) -> Result<Rational> {
        if self.degree != 0 {
            return Err(Error::Degree("extensor has positive degree".into()));
        }
        Ok(self.coordinate(&[]))
    }

    fn insert(&mut self, key: Vec<usize>, value: Rational) {
        if value.is_zero() {
            return;
        }
        match self.coords.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn add(&mut self, other: &Self) {
        for (k, v) in &other.coords {
            self.insert(k.clone(), v.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            coords: self.coords.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

/// Coordinate-level wedge of two extensors:
/// `(U ∧ V)_S = Σ_{S = A ⊔ B} sgn(A,B) · U_A · V_B`.
pub fn wedge(u: &NumericExtensor, v: &NumericExtensor) -> NumericExtensor {
    let mut out = NumericExtensor::zero(u.degree + v.degree);
    for (a, ca) in &u.coords {
        for (b, cb) in &v.coords {
            if a.iter().any(|x| b.contains(x)) {
                continue;
            }
            let mut inversions = 0usize;
            for x in a {
                inversions += b.iter().filter(|&&y| y < *x).count();
            }
            let mut key: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
            key.sort_unstable();
            let term = ca * cb;
            out.insert(key, if inversions % 2 == 0 { term } else { -term });
        }
    }
    out
}

/// `true` iff `u = c·v` for some nonzero rational `c`. Both zero counts as
/// proportional; degree mismatch does not.
pub fn projective_equal(u: &NumericExtensor, v: &NumericExtensor) -> bool {
    match (u.is_zero(), v.is_zero()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    if u.degree != v.degree {
        return false;
    }
    let (k0, a0) = u.coords.iter().next().expect("nonzero");
    let b0 = v.coordinate(k0);
    if b0.is_zero() {
        return false;
    }
    let c = a0 / &b0;
    u.coords.len() == v.coords.len() && *u == v.scale(&c)
}

/// Evaluates a bracket (and parameter) polynomial at concrete points:
/// brackets become `d×d` determinants; parameters are looked up in
/// `params`.
pub fn evaluate_poly(
    ring: &BracketRing,
    f: &Poly,
    pts: &PointAssignment,
    params: &BTreeMap<String, Rational>,
) -> Result<Rational> {
    let table = ring.table();
    let mut acc = Rational::zero();
    for (m, c) in f.terms() {
        let mut prod = c.clone();
        for (var, exp) in m.iter() {
            let base = match table.block(var) {
                Block::Bracket => {
                    let b = ring.bracket_at(var);
                    let rows: Vec<Vec<Rational>> = b
                        .indices()
                        .iter()
                        .map(|&i| pts.row(i).to_vec())
                        .collect();
                    det(&rows)
                }
                Block::Param => params
                    .get(table.name(var))
                    .cloned()
                    .ok_or_else(|| Error::UnboundParameter(table.name(var).into()))?,
                Block::Matrix => {
                    return Err(Error::Eval(
                        "matrix polynomials are evaluated against an explicit matrix".into(),
                    ))
                }
            };
            for _ in 0..exp {
                prod *= &base;
            }
        }
        acc += prod;
    }
    Ok(acc)
}

/// Evaluates a homogeneous Grassmann-Cayley expression at concrete points:
/// blades become wedges of the assigned vectors, coefficients evaluate
/// through [`evaluate_poly`].
pub fn evaluate_gc(
    expr: &GcExpression,
    pts: &PointAssignment,
    params: &BTreeMap<String, Rational>,
) -> Result<NumericExtensor> {
    let ring = expr.ring();
    let degree = expr
        .degree()
        .ok_or_else(|| Error::Degree("evaluation requires a homogeneous expression".into()))?;
    let d = ring.d();
    let mut out = NumericExtensor::zero(degree);
    for (blade, coeff) in expr.terms() {
        let c = evaluate_poly(ring.bracket_ring(), coeff, pts, params)?;
        if c.is_zero() {
            continue;
        }
        let vectors: Vec<Vec<Rational>> = blade
            .indices()
            .iter()
            .map(|&i| pts.row(i).to_vec())
            .collect();
        out.add(&NumericExtensor::from_vectors(&vectors, d).scale(&c));
    }
    Ok(out)
}

/// The classical meet of two subspaces given by explicit spanning vectors:
/// the wedge of a basis of their intersection, up to a nonzero scalar. When
/// `j + k = d` the intersection is trivial and the meet degenerates to the
/// scalar `det(u_span, v_span)`. Configurations whose union does not span
/// the ambient space signal [`Error::Degenerate`].
pub fn classical_meet(
    u_span: &[Vec<Rational>],
    v_span: &[Vec<Rational>],
    d: usize,
) -> Result<NumericExtensor> {
    let (j, k) = (u_span.len(), v_span.len());
    if j + k < d {
        return Err(Error::Degree(format!(
            "meet needs j + k >= d; got {j} + {k} < {d}"
        )));
    }
    let mut union: Vec<Vec<Rational>> = u_span.to_vec();
    union.extend_from_slice(v_span);
    if rank(&union) < d {
        return Err(Error::Degenerate);
    }
    if rank(u_span) < j || rank(v_span) < k {
        return Err(Error::Degenerate);
    }
    if j + k == d {
        return Ok(NumericExtensor::scalar(det(&union)));
    }
    // Solve A^T s = B^T t: nullspace of the d×(j+k) matrix [A^T | −B^T];
    // each null vector's s-part maps to a vector of the intersection.
    let mut m: Vec<Vec<Rational>> = (0..d)
        .map(|row| {
            (0..j + k)
                .map(|col| {
                    if col < j {
                        u_span[col][row].clone()
                    } else {
                        -v_span[col - j][row].clone()
                    }
                })
                .collect()
        })
        .collect();
    let null = nullspace(&mut m);
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for nv in &null {
        let mut x = vec![Rational::zero(); d];
        for (idx, s) in nv.iter().take(j).enumerate() {
            for (c, xc) in x.iter_mut().enumerate() {
                *xc += s * &u_span[idx][c];
            }
        }
        if x.iter().any(|c| !c.is_zero()) {
            basis.push(x);
        }
    }
    if basis.len() != j + k - d || rank(&basis) != j + k - d {
        return Err(Error::Degenerate);
    }
    Ok(NumericExtensor::from_vectors(&basis, d))
}

/// Probabilistic kernel-membership check: `true` when `f` evaluates to zero
/// at every one of `trials` random integer configurations.
pub fn random_membership_check(
    ring: &BracketRing,
    f: &Poly,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<bool> {
    let empty = BTreeMap::new();
    for _ in 0..trials {
        let pts = PointAssignment::random(ring.n(), ring.d(), rng);
        if !evaluate_poly(ring, f, &pts, &empty)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn submatrix(rows: &[Vec<Rational>], cols: &[usize]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| cols.iter().map(|&c| r[c - 1].clone()).collect())
        .collect()
}

/// Exact determinant by fraction-free-ish Gaussian elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut sign = Rational::one();
    let mut result = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        let p = a[col][col].clone();
        result *= &p;
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    sign * result
}

fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let (nr, nc) = (a.len(), a[0].len());
    let mut rank = 0;
    for col in 0..nc {
        let Some(pivot) = (rank..nr).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot, rank);
        let p = a[rank][col].clone();
        for r in 0..nr {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in 0..nc {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

/// Basis of the right nullspace of `m` (destroyed in place).
fn nullspace(m: &mut [Vec<Rational>]) -> Vec<Vec<Rational>> {
    let nr = m.len();
    if nr == 0 {
        return Vec::new();
    }
    let nc = m[0].len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..nc {
        let Some(p) = (row..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, row);
        let pv = m[row][col].clone();
        for c in 0..nc {
            m[row][c] = &m[row][c] / &pv;
        }
        for r in 0..nr {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..nc {
                let delta = &factor * &m[row][c];
                m[r][c] -= delta;
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == nr {
            break;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> =
        pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..nc).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rational::zero(); nc];
        v[free] = Rational::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}
