use super::{Block, VarTable};

/// Sparse power product: sorted `(variable index, exponent)` pairs with all
/// exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    /// The empty product 1.
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// A single variable to the first power.
    pub fn var(index: usize) -> Self {
        Self(vec![(index, 1)])
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs; repeated
    /// indices accumulate, zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(usize, u32)> = Vec::new();
        for (i, e) in pairs {
            if e == 0 {
                continue;
            }
            match v.binary_search_by_key(&i, |p| p.0) {
                Ok(pos) => v[pos].1 += e,
                Err(pos) => v.insert(pos, (i, e)),
            }
        }
        Self(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0
            .binary_search_by_key(&index, |p| p.0)
            .map(|pos| self.0[pos].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Total degree restricted to one block of the table.
    pub fn block_degree(&self, table: &VarTable, block: Block) -> u32 {
        self.0
            .iter()
            .filter(|&&(i, _)| table.block(i) == block)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ia, ea)), Some(&&(ib, eb))) => {
                    if ia < ib {
                        v.push((ia, ea));
                        a.next();
                    } else if ib < ia {
                        v.push((ib, eb));
                        b.next();
                    } else {
                        v.push((ia, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(_), None) => {
                    v.extend(a.by_ref().copied());
                    break;
                }
                (None, Some(_)) => {
                    v.extend(b.by_ref().copied());
                    break;
                }
                (None, None) => break,
            }
        }
        Self(v)
    }

    /// `true` when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// Componentwise quotient; caller must have checked divisibility.
    pub fn div(&self, divisor: &Self) -> Self {
        debug_assert!(divisor.divides(self));
        let mut v = Vec::with_capacity(self.0.len());
        for &(i, e) in &self.0 {
            let q = e - divisor.exponent(i);
            if q > 0 {
                v.push((i, q));
            }
        }
        Self(v)
    }

    /// The sub-product of variables lying in `block`.
    pub fn restrict(&self, table: &VarTable, block: Block) -> Self {
        Self(
            self.0
                .iter()
                .copied()
                .filter(|&(i, _)| table.block(i) == block)
                .collect(),
        )
    }

    /// The sub-product of variables lying outside `block`.
    pub fn restrict_complement(&self, table: &VarTable, block: Block) -> Self {
        Self(
            self.0
                .iter()
                .copied()
                .filter(|&(i, _)| table.block(i) != block)
                .collect(),
        )
    }

    /// Renders against the table: factors in rank order, `^` for exponents.
    pub fn render(&self, table: &VarTable) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    table.name(i).to_string()
                } else {
                    format!("{}^{}", table.name(i), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}
