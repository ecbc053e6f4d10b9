//! Index-set calculus behind the cube category.
//!
//! An [`IndexSet`] is an element of `C^n_p`: a strictly increasing tuple of
//! `p` indices taken from `[1..n]`. The ambient size `n` is carried
//! explicitly so that complements are well defined and mismatched operands
//! are reported instead of silently producing garbage. Indices are 1-based
//! everywhere in the public interface.

use std::fmt;
use std::str::FromStr;

use crate::error::CubeError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    ambient: usize,
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(ambient: usize, indices: Vec<usize>) -> Result<Self, CubeError> {
        if let Some(&first) = indices.first() {
            if first == 0 {
                return Err(CubeError::InvalidIndexSet(format!(
                    "index 0 is out of range [1..{ambient}]"
                )));
            }
        }
        if let Some(w) = indices.windows(2).find(|w| w[0] >= w[1]) {
            return Err(CubeError::InvalidIndexSet(format!(
                "indices must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        if let Some(&last) = indices.last() {
            if last > ambient {
                return Err(CubeError::InvalidIndexSet(format!(
                    "index {last} is out of range [1..{ambient}]"
                )));
            }
        }
        Ok(Self { ambient, indices })
    }

    pub fn empty(ambient: usize) -> Self {
        Self { ambient, indices: Vec::new() }
    }

    /// The full set `(1, 2, ..., n)`.
    pub fn full(ambient: usize) -> Self {
        Self { ambient, indices: (1..=ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// All elements of `C^n_p` in lexicographic order.
    pub fn all(ambient: usize, card: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        if card > ambient {
            return out;
        }
        let mut current = Vec::with_capacity(card);
        fn rec(start: usize, n: usize, card: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == card {
                out.push(IndexSet { ambient: n, indices: cur.clone() });
                return;
            }
            let remaining = card - cur.len();
            for x in start..=(n + 1 - remaining) {
                cur.push(x);
                rec(x + 1, n, card, cur, out);
                cur.pop();
            }
        }
        rec(1, ambient, card, &mut current, &mut out);
        out
    }

    /// Every subset of `[1..n]`, grouped by cardinality.
    pub fn all_subsets(ambient: usize) -> Vec<IndexSet> {
        (0..=ambient).flat_map(|p| IndexSet::all(ambient, p)).collect()
    }

    /// Complement in `[1..n]`.
    pub fn complement(&self) -> IndexSet {
        let indices = (1..=self.ambient).filter(|x| !self.contains(*x)).collect();
        IndexSet { ambient: self.ambient, indices }
    }

    /// `self ∧ i = (i_{j_1}, ..., i_{j_q})`; requires `self.ambient == |i|`.
    pub fn wedge(&self, i: &IndexSet) -> Result<IndexSet, CubeError> {
        if self.ambient != i.len() {
            return Err(CubeError::AmbientMismatch {
                op: "wedge",
                expected: i.len(),
                found: self.ambient,
            });
        }
        let indices = self.indices.iter().map(|&x| i.indices[x - 1]).collect();
        Ok(IndexSet { ambient: i.ambient, indices })
    }

    /// `self ∨ i = i + (self ∧ ∁i)`; requires `self.ambient == n - |i|`.
    pub fn vee(&self, i: &IndexSet) -> Result<IndexSet, CubeError> {
        self.check_vee(i, "vee")?;
        let added = self.wedge(&i.complement())?;
        Ok(IndexSet { ambient: i.ambient, indices: merge_sorted(&i.indices, &added.indices) })
    }

    /// `[self, i]`: the positions of the entries of `i` inside `self ∨ i`.
    pub fn bracket(&self, i: &IndexSet) -> Result<IndexSet, CubeError> {
        self.check_vee(i, "bracket")?;
        let joined = self.vee(i)?;
        let mut positions = Vec::with_capacity(i.len());
        let mut cursor = 0;
        for (pos, x) in joined.indices.iter().enumerate() {
            if cursor < i.len() && i.indices[cursor] == *x {
                positions.push(pos + 1);
                cursor += 1;
            }
        }
        Ok(IndexSet { ambient: joined.len(), indices: positions })
    }

    fn check_vee(&self, i: &IndexSet, op: &'static str) -> Result<(), CubeError> {
        let expected = i.ambient - i.len();
        if self.ambient != expected {
            return Err(CubeError::AmbientMismatch { op, expected, found: self.ambient });
        }
        Ok(())
    }
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        if a[x] < b[y] {
            out.push(a[x]);
            x += 1;
        } else {
            out.push(b[y]);
            y += 1;
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend_from_slice(&b[y..]);
    out
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{{", self.ambient)?;
        for (n, x) in self.indices.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for IndexSet {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CubeError::Parse(format!("expected `n:{{i1,i2,...}}`, got `{s}`"));
        let (ambient, rest) = s.split_once(':').ok_or_else(bad)?;
        let ambient: usize = ambient.trim().parse().map_err(|_| bad())?;
        let body = rest
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(bad)?;
        let indices = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        };
        IndexSet::new(ambient, indices)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// An index set with one sign per entry: the datum `(i, ε)` of a face map `f_i^ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedIndexSet {
    base: IndexSet,
    signs: Vec<Sign>,
}

impl SignedIndexSet {
    pub fn new(base: IndexSet, signs: Vec<Sign>) -> Result<Self, CubeError> {
        if base.len() != signs.len() {
            return Err(CubeError::SignLengthMismatch { indices: base.len(), signs: signs.len() });
        }
        Ok(Self { base, signs })
    }

    pub fn empty(ambient: usize) -> Self {
        Self { base: IndexSet::empty(ambient), signs: Vec::new() }
    }

    pub fn base(&self) -> &IndexSet {
        &self.base
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// All signed index sets over `[1..n]` (there are `3^n` of them).
    pub fn all(ambient: usize) -> Vec<SignedIndexSet> {
        let mut out = Vec::new();
        for base in IndexSet::all_subsets(ambient) {
            let p = base.len();
            for mask in 0..(1u32 << p) {
                let signs = (0..p)
                    .map(|b| if mask >> b & 1 == 1 { Sign::Minus } else { Sign::Plus })
                    .collect();
                out.push(SignedIndexSet { base: base.clone(), signs });
            }
        }
        out
    }
}

/// Colored union `ε_{j∨i}`: the entries of `j ∨ i` coming from `i` keep the
/// signs of `i`, the others take the signs of `j` in order.
pub fn merge_signs(i: &SignedIndexSet, j: &SignedIndexSet) -> Result<SignedIndexSet, CubeError> {
    let base = j.base.vee(&i.base)?;
    let from_i = j.base.bracket(&i.base)?;
    let from_j = from_i.complement();
    let mut signs = vec![Sign::Plus; base.len()];
    for (pos, sign) in from_i.indices().iter().zip(&i.signs) {
        signs[pos - 1] = *sign;
    }
    for (pos, sign) in from_j.indices().iter().zip(&j.signs) {
        signs[pos - 1] = *sign;
    }
    Ok(SignedIndexSet { base, signs })
}

impl fmt::Display for SignedIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/[", self.base)?;
        for (n, s) in self.signs.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedIndexSet {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CubeError::Parse(format!("expected `n:{{...}}/[+,-,...]`, got `{s}`"));
        let (base, signs) = s.split_once('/').ok_or_else(bad)?;
        let base: IndexSet = base.parse()?;
        let body = signs
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let signs = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|t| match t.trim() {
                    "+" | "+1" => Ok(Sign::Plus),
                    "-" | "-1" => Ok(Sign::Minus),
                    _ => Err(bad()),
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        SignedIndexSet::new(base, signs)
    }
}

/// A morphism `f_i^ε : p → p - |i|` of the cube category.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeMorphism {
    source: usize,
    data: SignedIndexSet,
}

impl CubeMorphism {
    pub fn new(source: usize, data: SignedIndexSet) -> Result<Self, CubeError> {
        if data.base.ambient() != source {
            return Err(CubeError::AmbientMismatch {
                op: "morphism",
                expected: source,
                found: data.base.ambient(),
            });
        }
        Ok(Self { source, data })
    }

    pub fn identity(object: usize) -> Self {
        Self { source: object, data: SignedIndexSet::empty(object) }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.source - self.data.base.len()
    }

    pub fn data(&self) -> &SignedIndexSet {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        self.data.base.is_empty()
    }

    /// Every morphism with the given source.
    pub fn all_from(source: usize) -> Vec<CubeMorphism> {
        SignedIndexSet::all(source)
            .into_iter()
            .map(|data| CubeMorphism { source, data })
            .collect()
    }
}

/// `g ∘ f`, defined when `g.source() == f.target()`.
pub fn compose(g: &CubeMorphism, f: &CubeMorphism) -> Result<CubeMorphism, CubeError> {
    if g.source != f.target() {
        return Err(CubeError::SourceTargetMismatch { f_target: f.target(), g_source: g.source });
    }
    let data = merge_signs(&f.data, &g.data)?;
    Ok(CubeMorphism { source: f.source, data })
}
