use std::collections::HashMap;

use crate::{Error, Result};

/// Block tag of a variable. Blocks drive the elimination structure of
/// [`OrderKind::GrevlexBlocked`](super::OrderKind::GrevlexBlocked): bracket
/// variables dominate parameter variables, so reduction by bracket-only
/// relations never disturbs parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    Bracket,
    Param,
    Matrix,
}

/// An ordered table of named variables.
///
/// Position in the table *is* the rank: position 0 is the highest-ranked
/// variable of the whole table. Blocks must be contiguous, with `Bracket`
/// preceding `Param`.
#[derive(Debug)]
pub struct VarTable {
    names: Vec<String>,
    blocks: Vec<Block>,
    by_name: HashMap<String, usize>,
    default_order: super::OrderKind,
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.blocks == other.blocks
    }
}
impl Eq for VarTable {}

impl VarTable {
    /// Builds a table from `(name, block)` pairs given in rank order.
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = (S, Block)>,
        default_order: super::OrderKind,
    ) -> Result<Self> {
        let mut names = Vec::new();
        let mut blocks = Vec::new();
        let mut by_name = HashMap::new();
        for (name, block) in vars {
            let name = name.into();
            if by_name.insert(name.clone(), names.len()).is_some() {
                return Err(Error::DuplicateName(name));
            }
            names.push(name);
            blocks.push(block);
        }
        // Blocks must form contiguous runs with Bracket ahead of Param.
        let mut seen_param = false;
        for b in &blocks {
            match b {
                Block::Param => seen_param = true,
                Block::Bracket if seen_param => {
                    return Err(Error::Eval(
                        "bracket variables must precede parameter variables".into(),
                    ))
                }
                _ => {}
            }
        }
        Ok(Self { names, blocks, by_name, default_order })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn block(&self, index: usize) -> Block {
        self.blocks[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Indices of all variables carrying `block`, in rank order.
    pub fn block_indices(&self, block: Block) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.blocks[i] == block)
    }

    /// The order this table's polynomials render and reduce under by default.
    pub fn default_order(&self) -> super::OrderKind {
        self.default_order
    }
}
