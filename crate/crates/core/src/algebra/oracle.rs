use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use super::perm::Permutation;
use super::table::TableGroup;
use super::word::{Symbol, Word};
use crate::{Error, Result};

/// Named generator permutations of a symmetric group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricGroup {
    degree: usize,
    names: Vec<String>,
    generators: Vec<Permutation>,
}

impl SymmetricGroup {
    pub fn new(degree: usize, generators: Vec<(String, Permutation)>) -> Result<Self> {
        let mut names = Vec::with_capacity(generators.len());
        let mut perms = Vec::with_capacity(generators.len());
        for (name, perm) in generators {
            if perm.degree() != degree {
                return Err(Error::InvalidGroup(format!(
                    "generator `{name}` acts on {} points, expected {degree}",
                    perm.degree()
                )));
            }
            if names.contains(&name) {
                return Err(Error::InvalidGroup(format!("generator `{name}` declared twice")));
            }
            names.push(name);
            perms.push(perm);
        }
        Ok(Self { degree, names, generators: perms })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The permutation a word denotes. Symbols act left to right: the first
    /// symbol of the word is applied first.
    pub fn evaluate(&self, word: &Word) -> Permutation {
        let mut images: Vec<usize> = (0..self.degree).collect();
        for s in word.symbols() {
            let g = &self.generators[s.generator() as usize - 1];
            if s.is_inverse() {
                let inv = g.inverse();
                images.iter_mut().for_each(|x| *x = inv.images()[*x]);
            } else {
                images.iter_mut().for_each(|x| *x = g.images()[*x]);
            }
        }
        Permutation::from_images(images).expect("composition of permutations")
    }
}

/// The group behind an oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    /// `Z₂ᵏ` with the standard basis as generators.
    Z2 { rank: usize },
    /// `Zᵏ` with the standard basis as generators.
    FreeAbelian { rank: usize },
    /// `Zₙ` generated by 1.
    Cyclic { order: u64 },
    Symmetric(SymmetricGroup),
    /// Any finite group given by its multiplication table. `source` is the
    /// path the table was read from, kept for printing.
    Table { group: TableGroup, source: String },
    /// The free group of the given rank.
    Free { rank: usize },
}

impl Backend {
    pub fn generator_count(&self) -> usize {
        match self {
            Backend::Z2 { rank } | Backend::FreeAbelian { rank } | Backend::Free { rank } => *rank,
            Backend::Cyclic { .. } => 1,
            Backend::Symmetric(s) => s.generators.len(),
            Backend::Table { group, .. } => group.generator_count(),
        }
    }

    pub fn is_abelian_family(&self) -> bool {
        matches!(self, Backend::Z2 { .. } | Backend::FreeAbelian { .. } | Backend::Cyclic { .. })
    }

    fn evaluates_to_identity(&self, word: &Word) -> bool {
        match self {
            Backend::Z2 { rank } => {
                let mut parity = vec![false; *rank];
                for s in word.symbols() {
                    parity[s.generator() as usize - 1] ^= true;
                }
                parity.iter().all(|p| !p)
            }
            Backend::FreeAbelian { rank } => {
                let mut exps = vec![0i64; *rank];
                for s in word.symbols() {
                    exps[s.generator() as usize - 1] += if s.is_inverse() { -1 } else { 1 };
                }
                exps.iter().all(|&e| e == 0)
            }
            Backend::Cyclic { order } => {
                let n = *order as i128;
                let sum: i128 = word
                    .symbols()
                    .iter()
                    .map(|s| if s.is_inverse() { -1 } else { 1 })
                    .sum();
                sum.rem_euclid(n) == 0
            }
            Backend::Symmetric(s) => s.evaluate(word).is_identity(),
            Backend::Table { group, .. } => {
                let mut acc = group.identity();
                for s in word.symbols() {
                    let g = group.generator(s.generator() as usize - 1);
                    let g = if s.is_inverse() { group.inverse(g) } else { g };
                    acc = group.mul(acc, g);
                }
                acc == group.identity()
            }
            Backend::Free { .. } => word.free_reduce().is_empty(),
        }
    }

    /// The header line describing this backend in a graph file.
    pub fn header(&self) -> String {
        match self {
            Backend::Z2 { rank } => format!("group z2 {rank}"),
            Backend::FreeAbelian { rank } => format!("group z {rank}"),
            Backend::Cyclic { order } => format!("group cyclic {order}"),
            Backend::Free { rank } => format!("group free {rank}"),
            Backend::Table { source, .. } => format!("group table {source}"),
            Backend::Symmetric(s) => {
                let gens: Vec<String> = s
                    .names
                    .iter()
                    .zip(&s.generators)
                    .map(|(n, p)| format!("{n}={}", compact_cycles(p)))
                    .collect();
                format!("group sym {} gens {}", s.degree, gens.join(";"))
            }
        }
    }
}

/// Cycle notation with comma separators so that it stays one token.
fn compact_cycles(p: &Permutation) -> String {
    p.to_string().replace(' ', ",")
}

/// Counters describing the queries an oracle has answered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleStats {
    pub query_count: u64,
    pub max_query_length: u64,
    pub total_query_length: u64,
}

/// A word-problem oracle with query instrumentation.
///
/// Counters are atomics, so one oracle may be shared by concurrent readers.
#[derive(Debug)]
pub struct GroupOracle {
    backend: Backend,
    query_count: AtomicU64,
    max_query_length: AtomicU64,
    total_query_length: AtomicU64,
}

impl GroupOracle {
    pub fn new(backend: Backend) -> Self {
        Self {
            backend,
            query_count: AtomicU64::new(0),
            max_query_length: AtomicU64::new(0),
            total_query_length: AtomicU64::new(0),
        }
    }

    pub fn z2(rank: usize) -> Self {
        Self::new(Backend::Z2 { rank })
    }

    pub fn free_abelian(rank: usize) -> Self {
        Self::new(Backend::FreeAbelian { rank })
    }

    pub fn cyclic(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("cyclic order must be positive".into()));
        }
        Ok(Self::new(Backend::Cyclic { order }))
    }

    pub fn free(rank: usize) -> Self {
        Self::new(Backend::Free { rank })
    }

    /// Symmetric group on `degree` points with generators in cycle notation.
    pub fn symmetric(degree: usize, generators: &[(&str, &str)]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|(name, cycles)| Ok((name.to_string(), Permutation::parse_cycles(cycles, degree)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(Backend::Symmetric(SymmetricGroup::new(degree, gens)?)))
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn generator_count(&self) -> usize {
        self.backend.generator_count()
    }

    /// Generator names of the symmetric backend; `None` for numbered ones.
    pub fn generator_names(&self) -> Option<&[String]> {
        match &self.backend {
            Backend::Symmetric(s) => Some(&s.names),
            _ => None,
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        let count = self.generator_count();
        match word
            .symbols()
            .iter()
            .find(|s| s.generator() == 0 || s.generator() as usize > count)
        {
            Some(s) => Err(Error::UnknownGenerator { generator: s.generator(), count }),
            None => Ok(()),
        }
    }

    /// Answers whether `word` is the identity, counting one query of
    /// length `|word|`.
    pub fn is_identity(&self, word: &Word) -> Result<bool> {
        self.check_word(word)?;
        let len = word.len() as u64;
        self.query_count.fetch_add(1, Ordering::Relaxed);
        self.total_query_length.fetch_add(len, Ordering::Relaxed);
        self.max_query_length.fetch_max(len, Ordering::Relaxed);
        Ok(self.backend.evaluates_to_identity(word))
    }

    pub fn equals(&self, a: &Word, b: &Word) -> Result<bool> {
        self.is_identity(&a.concat(&b.invert()))
    }

    pub fn has_order_at_most_2(&self, w: &Word) -> Result<bool> {
        self.is_identity(&w.concat(w))
    }

    /// Tests the commutator `a b a⁻¹ b⁻¹`.
    pub fn commutes(&self, a: &Word, b: &Word) -> Result<bool> {
        let mut c = a.concat(b);
        c.extend_from(&a.invert());
        c.extend_from(&b.invert());
        self.is_identity(&c)
    }

    pub fn stats(&self) -> OracleStats {
        OracleStats {
            query_count: self.query_count.load(Ordering::Relaxed),
            max_query_length: self.max_query_length.load(Ordering::Relaxed),
            total_query_length: self.total_query_length.load(Ordering::Relaxed),
        }
    }

    pub fn reset_stats(&self) {
        self.query_count.store(0, Ordering::Relaxed);
        self.max_query_length.store(0, Ordering::Relaxed);
        self.total_query_length.store(0, Ordering::Relaxed);
    }

    /// Formats a word with this backend's generator names, e.g. `+r -s`
    /// or `+1 -2`.
    pub fn format_word(&self, word: &Word) -> String {
        match self.generator_names() {
            None => word.to_string(),
            Some(names) => word
                .symbols()
                .iter()
                .map(|s| format_symbol(*s, names))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    /// Parses one `+g` / `-g` token.
    pub fn parse_symbol(&self, token: &str) -> Result<Symbol> {
        let bad = || Error::InvalidGroup(format!("bad generator token `{token}`"));
        let (inverse, name) = if let Some(rest) = token.strip_prefix('+') {
            (false, rest)
        } else if let Some(rest) = token.strip_prefix('-') {
            (true, rest)
        } else {
            return Err(bad());
        };
        let generator = match self.generator_names() {
            Some(names) => names
                .iter()
                .position(|n| n == name)
                .map(|i| i as u32 + 1)
                .ok_or_else(|| Error::InvalidGroup(format!("unknown generator `{name}`")))?,
            None => {
                let id: u32 = name.parse().map_err(|_| bad())?;
                let count = self.generator_count();
                if id == 0 || id as usize > count {
                    return Err(Error::UnknownGenerator { generator: id, count });
                }
                id
            }
        };
        Ok(Symbol::new(generator, inverse))
    }
}

fn format_symbol(s: Symbol, names: &[String]) -> String {
    let sign = if s.is_inverse() { '-' } else { '+' };
    match names.get((s.generator() as usize).wrapping_sub(1)) {
        Some(n) => format!("{sign}{n}"),
        None => s.to_string(),
    }
}

impl Clone for GroupOracle {
    fn clone(&self) -> Self {
        let stats = self.stats();
        Self {
            backend: self.backend.clone(),
            query_count: AtomicU64::new(stats.query_count),
            max_query_length: AtomicU64::new(stats.max_query_length),
            total_query_length: AtomicU64::new(stats.total_query_length),
        }
    }
}

impl fmt::Display for GroupOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.backend.header())
    }
}
