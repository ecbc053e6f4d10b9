//! Free-group words, finite presentations, and the algebraic oracles used to
//! compare presentations: abelianization, coset enumeration and
//! homomorphism counting into small finite groups.

pub mod coset;
pub mod finite;
pub mod format;
pub mod presentation;
pub mod smith;
pub mod word;

pub use coset::{todd_coxeter, CosetOutcome};
pub use finite::{catalog, hom_count, FiniteGroupTable};
pub use format::Format;
pub use presentation::{substitute_generators, GroupHom, Presentation};
pub use smith::{abelianization, Abelianization};
pub use word::{commutator, product, GenId, Letter, Word};
