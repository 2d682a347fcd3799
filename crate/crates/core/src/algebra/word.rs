use std::fmt;

/// A generator or its formal inverse. Generator ids start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    generator: u32,
    inverse: bool,
}

impl Symbol {
    pub const fn new(generator: u32, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub const fn pos(generator: u32) -> Self {
        Self::new(generator, false)
    }

    pub const fn neg(generator: u32) -> Self {
        Self::new(generator, true)
    }

    pub fn generator(self) -> u32 {
        self.generator
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        Self::new(self.generator, !self.inverse)
    }

    fn cancels(self, other: Self) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.inverse { '-' } else { '+' };
        write!(f, "{sign}{}", self.generator)
    }
}

/// A formal word over generator symbols. Nothing is reduced implicitly:
/// two words may name the same group element without being equal here.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Self(symbols)
    }

    /// Builds a word from signed ids, `+g` for a generator and `-g` for its
    /// inverse.
    ///
    /// # Panics
    /// If any entry is zero.
    pub fn from_signed(ids: &[i32]) -> Self {
        Self(
            ids.iter()
                .map(|&id| {
                    assert!(id != 0, "generator ids start at 1");
                    Symbol::new(id.unsigned_abs(), id < 0)
                })
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    #[must_use]
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    /// Reverses the word and flips every sign.
    #[must_use]
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// Deletes adjacent `g g⁻¹` / `g⁻¹ g` pairs until none are left.
    #[must_use]
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Symbol> = Vec::with_capacity(self.len());
        for &s in &self.0 {
            match out.last() {
                Some(&top) if top.cancels(s) => {
                    out.pop();
                }
                _ => out.push(s),
            }
        }
        Word(out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Largest generator id used, or 0 for the empty word.
    pub fn max_generator(&self) -> u32 {
        self.0.iter().map(|s| s.generator).max().unwrap_or(0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}
