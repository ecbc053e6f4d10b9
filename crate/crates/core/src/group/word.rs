//! Freely reduced words in a free group on named generators.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::WordError;

/// A generator name. Names start with a letter or `_` and contain only
/// ASCII alphanumerics and `_`, so every text format can carry them verbatim.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenId(Arc<str>);

impl GenId {
    pub fn new(name: &str) -> Result<Self, WordError> {
        let mut chars = name.chars();
        let ok = match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if !ok {
            return Err(WordError::InvalidName(name.to_string()));
        }
        Ok(GenId(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    gen: GenId,
    inverse: bool,
}

impl Letter {
    pub fn new(gen: GenId, exponent: i32) -> Result<Self, WordError> {
        match exponent {
            1 => Ok(Letter { gen, inverse: false }),
            -1 => Ok(Letter { gen, inverse: true }),
            e => Err(WordError::Parse(format!("letter exponent must be +1 or -1, got {e}"))),
        }
    }

    pub fn pos(gen: &GenId) -> Self {
        Letter { gen: gen.clone(), inverse: false }
    }

    pub fn neg(gen: &GenId) -> Self {
        Letter { gen: gen.clone(), inverse: true }
    }

    pub fn gen(&self) -> &GenId {
        &self.gen
    }

    pub fn exponent(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn inverse(&self) -> Letter {
        Letter { gen: self.gen.clone(), inverse: !self.inverse }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: &GenId) -> Self {
        Word(vec![Letter::pos(g)])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.cancels(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn inv(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    /// `t⁻¹ · self · t`.
    pub fn conjugate(&self, t: &Word) -> Word {
        t.inv().mul(self).mul(t)
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn exponent_sum(&self, g: &GenId) -> i64 {
        self.0.iter().filter(|l| &l.gen == g).map(|l| l.exponent() as i64).sum()
    }

    pub fn generators(&self) -> BTreeSet<GenId> {
        self.0.iter().map(|l| l.gen.clone()).collect()
    }

    pub fn mentions(&self, g: &GenId) -> bool {
        self.0.iter().any(|l| &l.gen == g)
    }

    /// Letterwise substitution followed by free reduction. Generators for
    /// which `image` returns `None` are kept as they are.
    pub fn substitute<'a, F>(&self, mut image: F) -> Word
    where
        F: FnMut(&GenId) -> Option<&'a Word>,
    {
        let mut out = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            match image(&l.gen) {
                Some(w) if l.inverse => out.extend(w.inv().0),
                Some(w) => out.extend(w.0.iter().cloned()),
                None => out.push(l.clone()),
            }
        }
        Word::reduce(out)
    }

    /// Strips letters that cancel between the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let w = &self.0;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo].cancels(&w[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word(w[lo..hi].to_vec())
    }

    /// Representative of the class of `self` under cyclic rotation and
    /// inversion: the lexicographically least rotation of the cyclically
    /// reduced word or of its inverse.
    pub fn canonical_relator(&self) -> Word {
        let w = self.cyclically_reduced();
        if w.is_empty() {
            return w;
        }
        let winv = w.inv();
        let n = w.len();
        let mut best: Option<Vec<Letter>> = None;
        for base in [&w.0, &winv.0] {
            for shift in 0..n {
                let cand: Vec<Letter> = base[shift..].iter().chain(&base[..shift]).cloned().collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        Word(best.unwrap_or_default())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if l.inverse {
                write!(f, "{}^-1", l.gen)?;
            } else {
                write!(f, "{}", l.gen)?;
            }
        }
        Ok(())
    }
}

/// `[a, b] = a⁻¹ b⁻¹ a b`.
pub fn commutator(a: &Word, b: &Word) -> Word {
    Word::reduce(
        a.inv().0.into_iter().chain(b.inv().0).chain(a.0.iter().cloned()).chain(b.0.iter().cloned()),
    )
}

/// Product of a sequence of words.
pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
    Word::reduce(words.into_iter().flat_map(|w| w.0.iter().cloned()))
}
