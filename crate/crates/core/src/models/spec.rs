//! Serializable model descriptions and the seeded corpus.

use super::algebra::{cyclic_table, group_inverses, idempotent_table, linearized_category, monoid_algebra, s3_table, sweedler, StructureConstants};
use super::category::{Category, FiniteCategory};
use crate::bimonoid::Bimonoid;
use crate::error::{Error, Result};
use crate::frob::{Frob, Preset};
use crate::map::Map;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A bimonoid by construction recipe.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ModelSpec {
    TrivialI,
    TrivialJ,
    /// The arrow span in the span backend; the linearized category in gvec.
    Category { category: FiniteCategory },
    Discrete { objects: usize },
    WalkingArrow,
    CyclicGroupoid { objects: usize, order: usize },
    CyclicMonoid { index: usize, period: usize },
    /// Group algebra from a multiplication table with unit `0`.
    GroupAlgebra { table: Vec<Vec<usize>> },
    MonoidAlgebra { table: Vec<Vec<usize>> },
    CyclicGroupAlgebra { order: usize },
    S3Algebra,
    IdempotentAlgebra,
    Sweedler,
    Bialgebra { constants: StructureConstants },
}

impl ModelSpec {
    /// The category behind a category-style spec.
    pub fn category(&self) -> Result<Option<Category>> {
        Ok(Some(match self {
            ModelSpec::Category { category } => category.clone().validate()?,
            ModelSpec::Discrete { objects } => Category::discrete(*objects),
            ModelSpec::WalkingArrow => Category::walking_arrow(),
            ModelSpec::CyclicGroupoid { objects, order } => Category::cyclic_groupoid(*objects, *order)?,
            ModelSpec::CyclicMonoid { index, period } => Category::cyclic_monoid(*index, *period)?,
            _ => return Ok(None),
        }))
    }

    /// Structure constants of an algebra-style spec.
    pub fn constants(&self) -> Result<Option<StructureConstants>> {
        Ok(Some(match self {
            ModelSpec::GroupAlgebra { table } => {
                let sc = monoid_algebra(table)?;
                if group_inverses(table).is_none() {
                    return Err(Error::Invalid("group table has an element without inverse".into()));
                }
                sc
            }
            ModelSpec::MonoidAlgebra { table } => monoid_algebra(table)?,
            ModelSpec::CyclicGroupAlgebra { order } => monoid_algebra(&cyclic_table(*order))?,
            ModelSpec::S3Algebra => monoid_algebra(&s3_table())?,
            ModelSpec::IdempotentAlgebra => monoid_algebra(&idempotent_table())?,
            ModelSpec::Sweedler => sweedler(),
            ModelSpec::Bialgebra { constants } => constants.clone(),
            _ => return Ok(None),
        }))
    }

    pub fn label(&self) -> String {
        match self {
            ModelSpec::TrivialI => "i".into(),
            ModelSpec::TrivialJ => "j".into(),
            ModelSpec::Category { category } => format!("category({} objects, {} arrows)", category.objects, category.arrows.len()),
            ModelSpec::Discrete { objects } => format!("discrete({objects})"),
            ModelSpec::WalkingArrow => "walking-arrow".into(),
            ModelSpec::CyclicGroupoid { objects, order } => format!("cyclic-groupoid({objects}, {order})"),
            ModelSpec::CyclicMonoid { index, period } => format!("cyclic-monoid({index}, {period})"),
            ModelSpec::GroupAlgebra { table } => format!("group-algebra(order {})", table.len()),
            ModelSpec::MonoidAlgebra { table } => format!("monoid-algebra(order {})", table.len()),
            ModelSpec::CyclicGroupAlgebra { order } => format!("QZ{order}"),
            ModelSpec::S3Algebra => "QS3".into(),
            ModelSpec::IdempotentAlgebra => "Q{1,e}".into(),
            ModelSpec::Sweedler => "sweedler".into(),
            ModelSpec::Bialgebra { .. } => "bialgebra".into(),
        }
    }

    /// Build and validate the bimonoid in the given context. Categories are
    /// arrow spans in the span backend and linearized in the graded one.
    pub fn build<M: Map>(&self, fr: &Frob<M>) -> Result<Bimonoid<M>> {
        let label = self.label();
        let mut b = match self {
            ModelSpec::TrivialI => fr.trivial_i(),
            ModelSpec::TrivialJ => fr.trivial_j()?,
            _ => {
                if let Some(c) = self.category()? {
                    match fr.preset {
                        Preset::Span { .. } => c.bimonoid(fr)?,
                        Preset::GvecCommutative { .. } => linearized_category(&c).bimonoid(fr, &label)?,
                        Preset::GvecWeak { .. } => return Err(Error::Invalid("categories are not modelled over the weak base".into())),
                    }
                } else if let Some(sc) = self.constants()? {
                    sc.bimonoid(fr, &label)?
                } else {
                    unreachable!("every spec is a trivial, category or algebra model")
                }
            }
        };
        b.name = label;
        Ok(b)
    }
}

/// A corpus member: where to build it and how.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub preset: Preset,
    pub spec: ModelSpec,
}

impl CorpusEntry {
    pub fn name(&self) -> String {
        format!("{} {}", preset_label(&self.preset), self.spec.label())
    }
}

pub fn preset_label(p: &Preset) -> String {
    match p {
        Preset::Span { size } => format!("span({size})"),
        Preset::GvecCommutative { n } => format!("gvec({n})"),
        Preset::GvecWeak { n } => format!("gvec-weak({n})"),
    }
}

/// `count` random categories with at most 4 objects and 12 arrows.
pub fn random_categories(seed: u64, count: usize) -> Vec<Category> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| Category::random(&mut rng, 4, 12)).collect()
}

/// The fixed models plus `random` seeded categories, each in the span
/// backend and linearized in the commutative graded backend.
pub fn corpus(seed: u64, random: usize) -> Vec<CorpusEntry> {
    let span = |size| Preset::Span { size };
    let gvec = |n| Preset::GvecCommutative { n };
    let mut out = Vec::new();
    let both = |size: usize, spec: ModelSpec, out: &mut Vec<CorpusEntry>| {
        out.push(CorpusEntry { preset: span(size), spec: spec.clone() });
        out.push(CorpusEntry { preset: gvec(size), spec });
    };
    for n in 1..=3 {
        both(n, ModelSpec::TrivialI, &mut out);
        both(n, ModelSpec::TrivialJ, &mut out);
    }
    both(2, ModelSpec::Discrete { objects: 2 }, &mut out);
    both(2, ModelSpec::WalkingArrow, &mut out);
    both(2, ModelSpec::CyclicGroupoid { objects: 2, order: 1 }, &mut out);
    both(1, ModelSpec::CyclicGroupoid { objects: 1, order: 2 }, &mut out);
    both(1, ModelSpec::CyclicGroupoid { objects: 1, order: 3 }, &mut out);
    both(1, ModelSpec::CyclicMonoid { index: 1, period: 1 }, &mut out);
    both(3, ModelSpec::CyclicGroupoid { objects: 3, order: 1 }, &mut out);
    for spec in [
        ModelSpec::CyclicGroupAlgebra { order: 2 },
        ModelSpec::CyclicGroupAlgebra { order: 3 },
        ModelSpec::S3Algebra,
        ModelSpec::IdempotentAlgebra,
        ModelSpec::Sweedler,
    ] {
        out.push(CorpusEntry { preset: gvec(1), spec });
    }
    for c in random_categories(seed, random) {
        let objects = c.data.objects;
        both(objects, ModelSpec::Category { category: c.data }, &mut out);
    }
    out
}
