use std::fmt;

use crate::{Error, Result};

/// A permutation of `{1, …, n}`, stored as zero-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree).collect())
    }

    /// `images[i]` is the zero-based image of point `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidGroup(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The permutation that applies `self` first and `then` second.
    #[must_use]
    pub fn then(&self, then: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| then.0[i]).collect())
    }

    #[must_use]
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// Parses disjoint cycle notation on points `1..=degree`.
    ///
    /// Points inside a cycle are separated by spaces or commas; when the
    /// degree is below 10 they may also be run together, as in `(123)`.
    /// `()` and the empty string are the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let err = |msg: String| Error::InvalidGroup(format!("cycles `{text}`: {msg}"));
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(err("expected `(`".into()));
            };
            let Some(close) = body.find(')') else {
                return Err(err("unclosed `(`".into()));
            };
            let inner = &body[..close];
            rest = body[close + 1..].trim_start();

            let tokens: Vec<&str> = if inner.contains(|c: char| c == ',' || c.is_whitespace()) {
                inner
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .collect()
            } else if degree < 10 {
                inner
                    .char_indices()
                    .map(|(i, c)| &inner[i..i + c.len_utf8()])
                    .collect()
            } else if inner.is_empty() {
                Vec::new()
            } else {
                vec![inner]
            };
            let mut cycle = Vec::with_capacity(tokens.len());
            for t in tokens {
                let p: usize = t.parse().map_err(|_| err(format!("bad point `{t}`")))?;
                if p == 0 || p > degree {
                    return Err(err(format!("point {p} outside 1..={degree}")));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(err(format!("point {p} repeated")));
                }
                cycle.push(p - 1);
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation(images))
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycles with 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut points = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                points.push((p + 1).to_string());
                p = self.0[p];
            }
            write!(f, "({})", points.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}
