//! Constructors for the bimonoid corpus.

pub mod algebra;
pub mod category;
pub mod random;
pub mod spec;

pub use algebra::{monoid_algebra, sweedler, Rat, StructureConstants};
pub use category::{Arrow, Category, FiniteCategory};
pub use spec::{corpus, random_categories, CorpusEntry, ModelSpec};
