use std::cmp::Ordering;
use std::sync::Arc;

use super::{Block, Monomial, VarTable};

/// Which comparison rule a [`MonomialOrder`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Graded reverse-lexicographic within the `Bracket` block, then within
    /// the `Param` block; the bracket block eliminates the parameter block.
    GrevlexBlocked,
    /// Plain lexicographic by rank (position 0 compares first).
    Lex,
}

/// A total, multiplicative monomial order over one variable table.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    kind: OrderKind,
    table: Arc<VarTable>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, table: Arc<VarTable>) -> Self {
        Self { kind, table }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        match self.kind {
            OrderKind::Lex => self.cmp_lex(a, b),
            OrderKind::GrevlexBlocked => {
                let o = self.cmp_grevlex_block(a, b, Block::Bracket);
                if o != Ordering::Equal {
                    return o;
                }
                let o = self.cmp_grevlex_block(a, b, Block::Param);
                if o != Ordering::Equal {
                    return o;
                }
                self.cmp_grevlex_block(a, b, Block::Matrix)
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for i in 0..self.table.len() {
            let o = a.exponent(i).cmp(&b.exponent(i));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    /// Grevlex restricted to one block: higher block degree wins; ties break
    /// at the lowest-ranked variable where exponents differ, smaller exponent
    /// winning.
    fn cmp_grevlex_block(&self, a: &Monomial, b: &Monomial, block: Block) -> Ordering {
        let da = a.block_degree(&self.table, block);
        let db = b.block_degree(&self.table, block);
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..self.table.len()).rev() {
            if self.table.block(i) != block {
                continue;
            }
            let (ea, eb) = (a.exponent(i), b.exponent(i));
            if ea != eb {
                // Reverse-lex: heavier tail means smaller monomial.
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }
}
