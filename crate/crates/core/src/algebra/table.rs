//! Finite groups given by a full multiplication table.
//!
//! Table file layout (`#` starts a comment, blank lines ignored):
//!
//! ```text
//! order 3
//! identity 0
//! generators 1
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Row `i`, column `j` holds the index of the product `i·j`. Generator `k`
//! of the word alphabet is the `k`-th listed element.

use crate::{Error, Result};

/// Tables up to this order are checked for associativity on load.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    order: usize,
    identity: usize,
    generators: Vec<usize>,
    inverses: Vec<usize>,
    table: Vec<usize>,
}

impl TableGroup {
    pub fn new(
        order: usize,
        identity: usize,
        generators: Vec<usize>,
        table: Vec<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidGroup(msg));
        if order == 0 {
            return bad("order must be positive".into());
        }
        if table.len() != order * order {
            return bad(format!("expected {} table entries, got {}", order * order, table.len()));
        }
        if identity >= order {
            return bad(format!("identity {identity} out of range"));
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return bad(format!("generator element {g} out of range"));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= order) {
            return bad(format!("table entry {x} out of range"));
        }
        let at = |i: usize, j: usize| table[i * order + j];
        for i in 0..order {
            if at(identity, i) != i || at(i, identity) != i {
                return bad(format!("{identity} is not a two-sided identity"));
            }
        }
        // latin square: every row and column is a permutation
        for i in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for j in 0..order {
                if std::mem::replace(&mut row[at(i, j)], true)
                    || std::mem::replace(&mut col[at(j, i)], true)
                {
                    return bad(format!("row or column {i} repeats an element"));
                }
            }
        }
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for i in 0..order {
                for j in 0..order {
                    for k in 0..order {
                        if at(at(i, j), k) != at(i, at(j, k)) {
                            return bad(format!("not associative at ({i}, {j}, {k})"));
                        }
                    }
                }
            }
        }
        let inverses = (0..order)
            .map(|i| (0..order).find(|&j| at(i, j) == identity).expect("latin square"))
            .collect();
        Ok(Self { order, identity, generators, inverses, table })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidGroup(format!("table: {msg}"));
        let mut order = None;
        let mut identity = None;
        let mut generators = None;
        let mut rows: Vec<usize> = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let first = tokens.next().unwrap_or_default();
            let nums = |it: std::str::SplitWhitespace<'_>| -> Result<Vec<usize>> {
                it.map(|t| t.parse().map_err(|_| bad(format!("bad number `{t}`")))).collect()
            };
            match first {
                "order" => order = Some(single(nums(tokens)?, "order").map_err(bad)?),
                "identity" => identity = Some(single(nums(tokens)?, "identity").map_err(bad)?),
                "generators" => generators = Some(nums(tokens)?),
                _ => rows.extend(nums(line.split_whitespace())?),
            }
        }
        let order = order.ok_or_else(|| bad("missing `order`".into()))?;
        let identity = identity.ok_or_else(|| bad("missing `identity`".into()))?;
        let generators = generators.ok_or_else(|| bad("missing `generators`".into()))?;
        if order > 4096 {
            return Err(bad(format!("order {order} too large")));
        }
        Self::new(order, identity, generators, rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator(&self, k: usize) -> usize {
        self.generators[k]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }
}

fn single(v: Vec<usize>, what: &str) -> std::result::Result<usize, String> {
    match v.as_slice() {
        [x] => Ok(*x),
        _ => Err(format!("`{what}` takes exactly one number")),
    }
}
