//! Partitions of `0..n` and signature-based partition refinement.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Assignment of elements `0..n` to blocks `0..block_count`. Blocks are
/// numbered in order of their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    block_of: Vec<usize>,
    block_count: usize,
}

impl Partition {
    /// Groups elements with equal keys.
    pub fn from_keys<K: Ord>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut ids: BTreeMap<K, usize> = BTreeMap::new();
        let mut block_of = Vec::new();
        for k in keys {
            let next = ids.len();
            block_of.push(*ids.entry(k).or_insert(next));
        }
        Partition {
            block_count: ids.len(),
            block_of,
        }
    }

    /// Splits blocks by `signature` until no block splits any more.
    pub fn refine<S: Ord>(mut self, signature: impl Fn(usize, &Partition) -> S) -> Self {
        loop {
            let next = Partition::from_keys(
                (0..self.len()).map(|u| (self.block_of[u], signature(u, &self))),
            );
            if next.block_count == self.block_count {
                return next;
            }
            self = next;
        }
    }

    pub fn block(&self, u: usize) -> usize {
        self.block_of[u]
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn same_block(&self, u: usize, w: usize) -> bool {
        self.block_of[u] == self.block_of[w]
    }

    /// Members of every block, in ascending order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (u, &b) in self.block_of.iter().enumerate() {
            out[b].push(u);
        }
        out
    }
}
