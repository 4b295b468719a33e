//! Clique-union shape expressions like `K4 + K2 + 2K1`, used to state the
//! exact disjoint-union structure of a graph.

use crate::error::{Error, Result};
use std::fmt;

/// A multiset of clique sizes. `K4 + 2K1` is the disjoint union of one
/// 4-clique and two isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeExpr {
    /// Clique sizes, descending.
    sizes: Vec<usize>,
}

impl ShapeExpr {
    pub fn new(mut sizes: Vec<usize>) -> Result<ShapeExpr> {
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::input("clique sizes must be ≥ 1"));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ShapeExpr { sizes })
    }

    /// The empty union (an empty graph).
    pub fn empty() -> ShapeExpr {
        ShapeExpr { sizes: Vec::new() }
    }

    /// Parses `"K4 + K2 + 2K1"`; a bare multiplier prefix repeats a term.
    pub fn parse(text: &str) -> Result<ShapeExpr> {
        let mut sizes = Vec::new();
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(ShapeExpr::empty());
        }
        for term in trimmed.split('+') {
            let term = term.trim();
            let (count, rest) = match term.find(['K', 'k']) {
                Some(0) => (1usize, &term[1..]),
                Some(pos) => {
                    let count: usize = term[..pos]
                        .trim()
                        .parse()
                        .map_err(|_| Error::input(format!("bad multiplier in shape term '{term}'")))?;
                    (count, &term[pos + 1..])
                }
                None => return Err(Error::input(format!("shape term '{term}' lacks a K"))),
            };
            let size: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("bad clique size in shape term '{term}'")))?;
            if count == 0 || size == 0 {
                return Err(Error::input(format!("zero count or size in shape term '{term}'")));
            }
            sizes.extend(std::iter::repeat(size).take(count));
        }
        ShapeExpr::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }
}

impl fmt::Display for ShapeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sizes.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.sizes.len() {
            let size = self.sizes[i];
            let mut count = 1;
            while i + count < self.sizes.len() && self.sizes[i + count] == size {
                count += 1;
            }
            if count == 1 {
                parts.push(format!("K{size}"));
            } else {
                parts.push(format!("{count}K{size}"));
            }
            i += count;
        }
        write!(f, "{}", parts.join(" + "))
    }
}
