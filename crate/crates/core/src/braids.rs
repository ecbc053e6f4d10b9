//! Pure braid group presentations: Artin's presentation of `P_k`, the
//! presentation of `P_k` of the Möbius band, and the two-step derivation of
//! the latter from the former (mapping-torus Van Kampen, then 2-cells).
//!
//! Generators are named `A_j_i` (Artin, `1 <= i < j <= k`) and `rho_r`
//! (Möbius, `1 <= r <= k`). Relator families are emitted in a fixed order,
//! index tuples lexicographically within each family.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cube::Sign;
use crate::error::{BraidError, WordError};
use crate::group::{commutator, product, substitute_generators, GenId, GroupHom, Presentation, Word};

/// Which form of the sixth Artin relation family to use.
///
/// `Theorem` is `[A_{s,j}, A_{s,r} A_{r,i} A_{s,r}⁻¹]`, `Proof` is
/// `[A_{s,j}, A_{s,r}⁻¹ A_{r,i} A_{s,r}]`. Only `Theorem` holds in the
/// pure braid group once k >= 4; `Proof` is kept for comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Yb6Variant {
    #[default]
    Theorem,
    Proof,
}

impl FromStr for Yb6Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "theorem" => Ok(Yb6Variant::Theorem),
            "proof" => Ok(Yb6Variant::Proof),
            other => Err(format!("unknown variant `{other}` (expected theorem or proof)")),
        }
    }
}

impl fmt::Display for Yb6Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Yb6Variant::Theorem => "theorem",
            Yb6Variant::Proof => "proof",
        })
    }
}

/// The Artin generator `A_{j,i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArtinGenerator {
    pub j: usize,
    pub i: usize,
}

impl ArtinGenerator {
    pub fn new(j: usize, i: usize, k: usize) -> Result<Self, BraidError> {
        if !(1 <= i && i < j && j <= k) {
            return Err(BraidError::IndexError { j, i, k });
        }
        Ok(ArtinGenerator { j, i })
    }

    pub fn id(&self) -> GenId {
        GenId::new(&format!("A_{}_{}", self.j, self.i)).expect("valid generator name")
    }

    pub fn word(&self) -> Word {
        Word::gen(&self.id())
    }
}

/// The Möbius generator `ρ_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MobiusGenerator {
    pub r: usize,
}

impl MobiusGenerator {
    pub fn new(r: usize, k: usize) -> Result<Self, BraidError> {
        if !(1..=k).contains(&r) {
            return Err(BraidError::StrandOutOfRange { r, k });
        }
        Ok(MobiusGenerator { r })
    }

    pub fn id(&self) -> GenId {
        GenId::new(&format!("rho_{}", self.r)).expect("valid generator name")
    }

    pub fn word(&self) -> Word {
        Word::gen(&self.id())
    }
}

fn a(j: usize, i: usize) -> Word {
    ArtinGenerator { j, i }.word()
}

fn rho(r: usize) -> Word {
    MobiusGenerator { r }.word()
}

fn comm(x: &Word, y: &Word) -> Word {
    commutator(x, y)
}

fn check_strands(k: usize) -> Result<(), BraidError> {
    if k < 1 {
        return Err(BraidError::InvalidStrandCount(k));
    }
    Ok(())
}

fn pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=k).flat_map(move |i| (i + 1..=k).map(move |j| (i, j)))
}

fn triples(k: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(k).flat_map(move |(i, j)| (j + 1..=k).map(move |r| (i, j, r)))
}

fn quadruples(k: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    triples(k).flat_map(move |(i, j, r)| (r + 1..=k).map(move |s| (i, j, r, s)))
}

/// Generator list of `P_k`: `A_j_i` ordered by `j`, then `i`.
pub fn artin_generators(k: usize) -> Vec<GenId> {
    (2..=k).flat_map(|j| (1..j).map(move |i| ArtinGenerator { j, i }.id())).collect()
}

pub fn mobius_generators(k: usize) -> Vec<GenId> {
    (1..=k).map(|r| MobiusGenerator { r }.id()).collect()
}

pub fn artin_presentation(k: usize) -> Result<Presentation, BraidError> {
    artin_presentation_with(k, Yb6Variant::Theorem)
}

pub fn artin_presentation_with(k: usize, variant: Yb6Variant) -> Result<Presentation, BraidError> {
    check_strands(k)?;
    Ok(artin_unchecked(k, variant))
}

// Also used for k = 0, the source of the edge maps when k = 1.
fn artin_unchecked(k: usize, variant: Yb6Variant) -> Presentation {
    let mut rels = Vec::new();
    for (i, j, r) in triples(k) {
        rels.push(comm(&a(j, i), &a(r, i).mul(&a(r, j))));
    }
    for (i, j, r) in triples(k) {
        rels.push(comm(&a(r, i), &a(r, j).mul(&a(j, i))));
    }
    for (i, j, r, s) in quadruples(k) {
        rels.push(comm(&a(s, r), &a(j, i)));
    }
    for (i, j, r, s) in quadruples(k) {
        rels.push(comm(&a(s, i), &a(r, j)));
    }
    for (i, j, r, s) in quadruples(k) {
        rels.push(comm(&a(s, j), &a(r, i).conjugate(&a(r, j))));
    }
    for (i, j, r, s) in quadruples(k) {
        let conj = match variant {
            Yb6Variant::Theorem => a(r, i).conjugate(&a(s, r).inv()),
            Yb6Variant::Proof => a(r, i).conjugate(&a(s, r)),
        };
        rels.push(comm(&a(s, j), &conj));
    }
    Presentation::new(artin_generators(k), rels).expect("Artin relators use declared generators")
}

/// `B_{j,i}` written in the Artin generators:
/// `A_{j,j-1}⁻¹ ⋯ A_{j,i+1}⁻¹ A_{j,i} A_{j,i+1} ⋯ A_{j,j-1}`.
pub fn b_word(j: usize, i: usize, k: usize) -> Result<Word, BraidError> {
    ArtinGenerator::new(j, i, k)?;
    let tail = product((i + 1..j).map(|m| a(j, m)).collect::<Vec<_>>().iter());
    Ok(a(j, i).conjugate(&tail))
}

pub fn mobius_presentation(k: usize) -> Result<Presentation, BraidError> {
    check_strands(k)?;
    let mut rels = Vec::new();
    for (i, j) in pairs(k) {
        let lhs = comm(&rho(i).inv(), &rho(j).inv());
        let left: Vec<Word> = (i + 1..j).rev().map(|m| comm(&rho(m), &rho(j))).collect();
        let right: Vec<Word> = (i..j).map(|m| comm(&rho(j), &rho(m))).collect();
        let rhs = product(left.iter().chain(&right));
        rels.push(lhs.mul(&rhs.inv()));
    }
    for (i, j, r) in triples(k) {
        rels.push(comm(&comm(&rho(i), &rho(j)), &rho(r)));
    }
    for (i, j, r) in triples(k) {
        rels.push(comm(&comm(&rho(i), &rho(r).inv()), &rho(j)));
    }
    for (i, j, r) in triples(k) {
        let rhs = comm(&rho(r), &rho(i)).mul(&comm(&rho(r), &rho(j)));
        rels.push(comm(&comm(&rho(j), &rho(i)), &rhs));
    }
    for (i, j, r) in triples(k) {
        let rhs = comm(&rho(r), &rho(j)).mul(&comm(&rho(j), &rho(i)));
        rels.push(comm(&comm(&rho(r), &rho(i)), &rhs));
    }
    for (i, j, r, s) in quadruples(k) {
        let rhs = product(&[comm(&rho(j), &rho(r)), comm(&rho(r), &rho(i)), comm(&rho(r), &rho(j))]);
        rels.push(comm(&comm(&rho(s), &rho(j)), &rhs));
    }
    for (i, j, r, s) in quadruples(k) {
        let rhs = product(&[comm(&rho(s), &rho(r)), comm(&rho(r), &rho(i)), comm(&rho(r), &rho(s))]);
        rels.push(comm(&comm(&rho(s), &rho(j)), &rhs));
    }
    Ok(Presentation::new(mobius_generators(k), rels)?)
}

/// The map `P_k → P_k(Möbius)` induced by the inclusion of the square:
/// `A_{j,i} ↦ [ρ_j, ρ_i]`.
pub fn inclusion_hom(k: usize) -> Result<GroupHom, BraidError> {
    let source = artin_presentation(k)?;
    let target = mobius_presentation(k)?;
    let images = (2..=k)
        .flat_map(|j| (1..j).map(move |i| (j, i)))
        .map(|(j, i)| (ArtinGenerator { j, i }.id(), comm(&rho(j), &rho(i))))
        .collect();
    Ok(GroupHom::new(source, target, images)?)
}

/// Input of the mapping-torus Van Kampen step: the base group, the name of
/// the stable letter, and for each edge-group generator the pair
/// `(plus-side image, minus-side image)` already conjugated to the base point.
#[derive(Debug, Clone)]
pub struct MappingTorusInput {
    pub base: Presentation,
    pub stable_name: GenId,
    pub edge_pairs: Vec<(Word, Word)>,
}

/// Adjoins the stable letter `ρ` and one relator `u⁻¹ ρ⁻¹ v ρ` per edge pair.
pub fn vk_mapping_torus(input: &MappingTorusInput) -> Result<Presentation, BraidError> {
    if input.base.contains(&input.stable_name) {
        return Err(WordError::NameCollision(input.stable_name.to_string()).into());
    }
    let stable = Word::gen(&input.stable_name);
    let mut rels = Vec::with_capacity(input.edge_pairs.len());
    for (u, v) in &input.edge_pairs {
        input.base.check_word(u)?;
        input.base.check_word(v)?;
        rels.push(product(&[u.inv(), stable.inv(), v.clone(), stable.clone()]));
    }
    let p = input.base.with_generators([input.stable_name.clone()])?;
    Ok(p.with_relators(rels)?)
}

/// Images of the generators of `P_{k-1}` in `P_k` under the edge map that
/// inserts a strand at position `r`, on the given side of the band.
pub fn mobius_edge_images(k: usize, r: usize, side: Sign) -> Result<GroupHom, BraidError> {
    check_strands(k)?;
    MobiusGenerator::new(r, k)?;
    let source = artin_unchecked(k - 1, Yb6Variant::Theorem);
    let target = artin_unchecked(k, Yb6Variant::Theorem);
    let mut images = BTreeMap::new();
    for j in 2..k {
        for i in 1..j {
            let image = if j < r {
                a(j, i)
            } else if r <= i {
                a(j + 1, i + 1)
            } else {
                match side {
                    Sign::Minus => a(j + 1, i),
                    Sign::Plus => a(j + 1, i).conjugate(&a(j + 1, r)),
                }
            };
            images.insert(ArtinGenerator { j, i }.id(), image);
        }
    }
    Ok(GroupHom::new(source, target, images)?)
}

pub fn mobius_stage1(k: usize) -> Result<Presentation, BraidError> {
    mobius_stage1_with(k, Yb6Variant::Theorem)
}

/// Fundamental group of the 1-skeleton of the cubical resolution: Artin's
/// `P_k` with one stable letter `rho_r` per edge family.
pub fn mobius_stage1_with(k: usize, variant: Yb6Variant) -> Result<Presentation, BraidError> {
    let mut p = artin_presentation_with(k, variant)?;
    let edge_gens = artin_generators(k - 1);
    for r in 1..=k {
        let plus = mobius_edge_images(k, r, Sign::Plus)?;
        let minus = mobius_edge_images(k, r, Sign::Minus)?;
        let edge_pairs = edge_gens
            .iter()
            .map(|g| (plus.images()[g].clone(), minus.images()[g].clone()))
            .collect();
        let input = MappingTorusInput { base: p, stable_name: MobiusGenerator { r }.id(), edge_pairs };
        p = vk_mapping_torus(&input)?;
    }
    Ok(p)
}

/// The relations added by the first step, enumerated directly:
/// `[A_{j,i}, ρ_r]` for `i<j<r` or `r<i<j`, and
/// `A_{j,r}⁻¹ A_{j,i} A_{j,r} ρ_r⁻¹ A_{j,i}⁻¹ ρ_r` for `i<r<j`.
pub fn r1_relators(k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for r in 1..=k {
        for (i, j) in pairs(k) {
            if j < r || r < i {
                out.push(comm(&a(j, i), &rho(r)));
            } else if i < r && r < j {
                out.push(product(&[
                    a(j, i).conjugate(&a(j, r)),
                    rho(r).inv(),
                    a(j, i).inv(),
                    rho(r),
                ]));
            }
        }
    }
    out
}

/// Attaching words of the 2-cells, two per pair `p < q`:
/// `ρ_q ρ_p A_{q,p}⁻¹ ρ_q⁻¹ ρ_p⁻¹` and `B_{q,p} ρ_q ρ_p ρ_q⁻¹ ρ_p⁻¹`.
pub fn mobius_two_cell_relators(k: usize) -> Result<Vec<Word>, BraidError> {
    if k < 2 {
        return Err(BraidError::InvalidStrandCount(k));
    }
    let mut out = Vec::new();
    for (p, q) in pairs(k) {
        out.push(product(&[rho(q), rho(p), a(q, p).inv(), rho(q).inv(), rho(p).inv()]));
        out.push(product(&[b_word(q, p, k)?, rho(q), rho(p), rho(q).inv(), rho(p).inv()]));
    }
    Ok(out)
}

pub fn mobius_pipeline(k: usize) -> Result<Presentation, BraidError> {
    mobius_pipeline_with(k, Yb6Variant::Theorem)
}

/// Stage 1 plus the 2-cells, with every `A_{j,i}` then eliminated through
/// `A_{j,i} = [ρ_j, ρ_i]`.
pub fn mobius_pipeline_with(k: usize, variant: Yb6Variant) -> Result<Presentation, BraidError> {
    let mut p = mobius_stage1_with(k, variant)?;
    if k >= 2 {
        p = p.with_relators(mobius_two_cell_relators(k)?)?;
    }
    let defs: BTreeMap<GenId, Word> = pairs(k)
        .map(|(i, j)| (ArtinGenerator { j, i }.id(), comm(&rho(j), &rho(i))))
        .collect();
    Ok(substitute_generators(&p, &defs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(p: &Presentation) -> Vec<String> {
        p.generators().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn artin_small_cases() {
        assert!(matches!(artin_presentation(0), Err(BraidError::InvalidStrandCount(0))));
        let p1 = artin_presentation(1).unwrap();
        assert_eq!((p1.rank(), p1.relators().len()), (0, 0));
        let p2 = artin_presentation(2).unwrap();
        assert_eq!(names(&p2), vec!["A_2_1"]);
        assert!(p2.relators().is_empty());
        let p4 = artin_presentation(4).unwrap();
        assert_eq!((p4.rank(), p4.relators().len()), (6, 12));
        assert_eq!(names(&p4), vec!["A_2_1", "A_3_1", "A_3_2", "A_4_1", "A_4_2", "A_4_3"]);
    }

    #[test]
    fn artin_relator_order_and_shape() {
        let p = artin_presentation(3).unwrap();
        assert_eq!(p.relators()[0].to_string(), "A_2_1^-1 A_3_2^-1 A_3_1^-1 A_2_1 A_3_1 A_3_2");
        assert_eq!(p.relators()[1].to_string(), "A_3_1^-1 A_2_1^-1 A_3_2^-1 A_3_1 A_3_2 A_2_1");
    }

    #[test]
    fn sixth_family_variants_differ_only_in_conjugation() {
        let t = artin_presentation_with(4, Yb6Variant::Theorem).unwrap();
        let p = artin_presentation_with(4, Yb6Variant::Proof).unwrap();
        assert_eq!(t.relators()[..11], p.relators()[..11]);
        assert_eq!(
            t.relators()[11].to_string(),
            "A_4_2^-1 A_4_3 A_3_1^-1 A_4_3^-1 A_4_2 A_4_3 A_3_1 A_4_3^-1"
        );
        assert_eq!(
            p.relators()[11].to_string(),
            "A_4_2^-1 A_4_3^-1 A_3_1^-1 A_4_3 A_4_2 A_4_3^-1 A_3_1 A_4_3"
        );
        assert_eq!("proof".parse::<Yb6Variant>(), Ok(Yb6Variant::Proof));
        assert!("other".parse::<Yb6Variant>().is_err());
    }

    #[test]
    fn b_words() {
        assert_eq!(b_word(2, 1, 3).unwrap().to_string(), "A_2_1");
        assert_eq!(b_word(3, 1, 3).unwrap().to_string(), "A_3_2^-1 A_3_1 A_3_2");
        assert_eq!(b_word(5, 2, 5).unwrap().to_string(), "A_5_4^-1 A_5_3^-1 A_5_2 A_5_3 A_5_4");
        assert!(matches!(b_word(2, 2, 3), Err(BraidError::IndexError { .. })));
        assert!(matches!(b_word(4, 1, 3), Err(BraidError::IndexError { .. })));
        assert!(b_word(2, 0, 3).is_err());
    }

    #[test]
    fn mobius_small_cases() {
        let m1 = mobius_presentation(1).unwrap();
        assert_eq!((m1.rank(), m1.relators().len()), (1, 0));
        let m2 = mobius_presentation(2).unwrap();
        assert_eq!(m2.relators().len(), 1);
        // [ρ_1⁻¹, ρ_2⁻¹] [ρ_2, ρ_1]⁻¹
        assert_eq!(
            m2.relators()[0].to_string(),
            "rho_1 rho_2 rho_1^-1 rho_2^-1 rho_1^-1 rho_2^-1 rho_1 rho_2"
        );
        assert_eq!(mobius_presentation(3).unwrap().relators().len(), 7);
        assert!(mobius_presentation(0).is_err());
    }

    #[test]
    fn inclusion_images() {
        let h = inclusion_hom(2).unwrap();
        let g = ArtinGenerator { j: 2, i: 1 }.id();
        assert_eq!(h.image(&g).unwrap().to_string(), "rho_2^-1 rho_1^-1 rho_2 rho_1");
        let w = h.apply(&b_word(2, 1, 2).unwrap()).unwrap();
        assert_eq!(&w, h.image(&g).unwrap());
        let inv = h.apply(&a(2, 1).inv()).unwrap();
        assert_eq!(inv, comm(&rho(2), &rho(1)).inv());
    }

    #[test]
    fn mapping_torus_examples() {
        let base = Presentation::free(&["x"]).unwrap();
        let x = Word::gen(&base.generators()[0]);
        let stable = GenId::new("rho").unwrap();
        let input = MappingTorusInput { base: base.clone(), stable_name: stable.clone(), edge_pairs: vec![(x.clone(), x.clone())] };
        let p = vk_mapping_torus(&input).unwrap();
        assert_eq!(p.relators()[0].to_string(), "x^-1 rho^-1 x rho");

        let klein = MappingTorusInput { base: base.clone(), stable_name: stable.clone(), edge_pairs: vec![(x.inv(), x.clone())] };
        assert_eq!(vk_mapping_torus(&klein).unwrap().relators()[0].to_string(), "x rho^-1 x rho");

        let clash = MappingTorusInput { base: base.clone(), stable_name: base.generators()[0].clone(), edge_pairs: vec![] };
        assert!(matches!(vk_mapping_torus(&clash), Err(BraidError::Word(WordError::NameCollision(_)))));

        let foreign = MappingTorusInput { base, stable_name: stable, edge_pairs: vec![(Word::gen(&GenId::new("y").unwrap()), x)] };
        assert!(vk_mapping_torus(&foreign).is_err());
    }

    #[test]
    fn edge_image_cases() {
        let h = mobius_edge_images(2, 1, Sign::Minus).unwrap();
        assert!(h.images().is_empty());
        let g21 = ArtinGenerator { j: 2, i: 1 }.id();
        let plus = mobius_edge_images(3, 2, Sign::Plus).unwrap();
        assert_eq!(plus.images()[&g21].to_string(), "A_3_2^-1 A_3_1 A_3_2");
        let minus = mobius_edge_images(3, 2, Sign::Minus).unwrap();
        assert_eq!(minus.images()[&g21].to_string(), "A_3_1");
        let low = mobius_edge_images(3, 3, Sign::Minus).unwrap();
        assert_eq!(low.images()[&g21].to_string(), "A_2_1");
        let high = mobius_edge_images(3, 1, Sign::Plus).unwrap();
        assert_eq!(high.images()[&g21].to_string(), "A_3_2");
        assert!(mobius_edge_images(3, 4, Sign::Plus).is_err());
        assert!(mobius_edge_images(3, 0, Sign::Plus).is_err());
    }

    #[test]
    fn stage1_small_cases() {
        let s2 = mobius_stage1(2).unwrap();
        assert_eq!(names(&s2), vec!["A_2_1", "rho_1", "rho_2"]);
        assert!(s2.relators().is_empty());
        assert!(r1_relators(2).is_empty());
        let s3 = mobius_stage1(3).unwrap();
        let expected = comm(&a(2, 1), &rho(3)).canonical_relator();
        assert!(s3.relator_classes().contains(&expected));
    }

    #[test]
    fn two_cells() {
        let cells = mobius_two_cell_relators(2).unwrap();
        assert_eq!(cells[0].to_string(), "rho_2 rho_1 A_2_1^-1 rho_2^-1 rho_1^-1");
        assert_eq!(cells[1].to_string(), "A_2_1 rho_2 rho_1 rho_2^-1 rho_1^-1");
        assert!(mobius_two_cell_relators(1).is_err());
    }

    #[test]
    fn pipeline_small_cases() {
        let p1 = mobius_pipeline(1).unwrap();
        assert_eq!(names(&p1), vec!["rho_1"]);
        assert!(p1.relators().is_empty());
        let p2 = mobius_pipeline(2).unwrap();
        assert_eq!(names(&p2), vec!["rho_1", "rho_2"]);
        assert_eq!(p2.relators().len(), 1);
        assert_eq!(p2.relator_classes(), mobius_presentation(2).unwrap().relator_classes());
    }
}
