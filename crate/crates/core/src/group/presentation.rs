use std::collections::{BTreeMap, BTreeSet};

use crate::error::WordError;
use crate::group::word::{GenId, Letter, Word};

/// A finite presentation `⟨generators | relators⟩`.
///
/// Relators are stored freely and cyclically reduced; a relation `u = v` is
/// stored as `u · v⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<GenId>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<GenId>, relators: Vec<Word>) -> Result<Self, WordError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(WordError::DuplicateGenerator(g.to_string()));
            }
        }
        let mut p = Presentation { generators, relators: Vec::with_capacity(relators.len()) };
        for r in relators {
            p.check_word(&r)?;
            p.relators.push(r.cyclically_reduced());
        }
        Ok(p)
    }

    /// The free group on the given names.
    pub fn free<S: AsRef<str>>(names: &[S]) -> Result<Self, WordError> {
        let gens = names.iter().map(|n| GenId::new(n.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Presentation::new(gens, Vec::new())
    }

    pub fn generators(&self) -> &[GenId] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, g: &GenId) -> bool {
        self.generators.contains(g)
    }

    pub fn generator(&self, name: &str) -> Result<GenId, WordError> {
        self.generators
            .iter()
            .find(|g| g.as_str() == name)
            .cloned()
            .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))
    }

    pub fn position(&self, g: &GenId) -> Option<usize> {
        self.generators.iter().position(|x| x == g)
    }

    /// Reduces a raw letter sequence, rejecting letters not declared here.
    pub fn word<I: IntoIterator<Item = Letter>>(&self, letters: I) -> Result<Word, WordError> {
        let w = Word::reduce(letters);
        self.check_word(&w)?;
        Ok(w)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), WordError> {
        match w.letters().iter().find(|l| !self.contains(l.gen())) {
            Some(l) => Err(WordError::UnknownGenerator(l.gen().to_string())),
            None => Ok(()),
        }
    }

    pub fn with_relator(&self, r: Word) -> Result<Presentation, WordError> {
        self.check_word(&r)?;
        let mut p = self.clone();
        p.relators.push(r.cyclically_reduced());
        Ok(p)
    }

    pub fn with_relators<I: IntoIterator<Item = Word>>(&self, rs: I) -> Result<Presentation, WordError> {
        let mut p = self.clone();
        for r in rs {
            p.check_word(&r)?;
            p.relators.push(r.cyclically_reduced());
        }
        Ok(p)
    }

    /// Appends fresh generators at the end of the generator list.
    pub fn with_generators<I: IntoIterator<Item = GenId>>(&self, gens: I) -> Result<Presentation, WordError> {
        let mut all = self.generators.clone();
        all.extend(gens);
        Presentation::new(all, self.relators.clone())
    }

    /// Non-trivial relators up to free reduction, cyclic rotation and inversion.
    pub fn relator_classes(&self) -> BTreeSet<Word> {
        self.relators
            .iter()
            .map(Word::canonical_relator)
            .filter(|w| !w.is_identity())
            .collect()
    }

    /// Relator-by-generator matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for l in r.letters() {
                    if let Some(c) = self.position(l.gen()) {
                        row[c] += l.exponent() as i64;
                    }
                }
                row
            })
            .collect()
    }
}

/// Eliminates generators by substitution.
///
/// Every key of `defs` is removed from the generator list and replaced in
/// each relator by its image; relators that become trivial are dropped.
pub fn substitute_generators(
    p: &Presentation,
    defs: &BTreeMap<GenId, Word>,
) -> Result<Presentation, WordError> {
    for (g, w) in defs {
        if !p.contains(g) {
            return Err(WordError::UnknownGenerator(g.to_string()));
        }
        if w.letters().iter().any(|l| defs.contains_key(l.gen())) {
            return Err(WordError::CyclicDefinition(g.to_string()));
        }
        p.check_word(w)?;
    }
    let generators = p.generators.iter().filter(|g| !defs.contains_key(*g)).cloned().collect();
    let relators = p
        .relators
        .iter()
        .map(|r| r.substitute(|g| defs.get(g)).cyclically_reduced())
        .filter(|r| !r.is_identity())
        .collect();
    Ok(Presentation { generators, relators })
}

/// A homomorphism given by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Presentation,
    target: Presentation,
    images: BTreeMap<GenId, Word>,
}

impl GroupHom {
    pub fn new(
        source: Presentation,
        target: Presentation,
        images: BTreeMap<GenId, Word>,
    ) -> Result<Self, WordError> {
        for g in images.keys() {
            if !source.contains(g) {
                return Err(WordError::UnknownGenerator(g.to_string()));
            }
        }
        for g in source.generators() {
            match images.get(g) {
                Some(w) => target.check_word(w)?,
                None => return Err(WordError::UnknownGenerator(format!("no image for {g}"))),
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(p: &Presentation) -> Self {
        let images = p.generators().iter().map(|g| (g.clone(), Word::gen(g))).collect();
        GroupHom { source: p.clone(), target: p.clone(), images }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn image(&self, g: &GenId) -> Option<&Word> {
        self.images.get(g)
    }

    pub fn images(&self) -> &BTreeMap<GenId, Word> {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        self.source.check_word(w)?;
        Ok(w.substitute(|g| self.images.get(g)))
    }
}
