//! Model constructors, validation and serialization.

use duoidal::models::algebra::{cyclic_table, monoid_algebra};
use duoidal::models::{corpus, random_categories, Arrow, Category, FiniteCategory, ModelSpec};
use duoidal::{Error, Frob, GvecFrob, Preset, SpanFrob};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arrow(src: usize, tgt: usize) -> Arrow {
    Arrow { src, tgt, name: None }
}

fn pair_groupoid() -> FiniteCategory {
    FiniteCategory {
        objects: 2,
        arrows: vec![arrow(0, 0), arrow(1, 1), arrow(0, 1), arrow(1, 0)],
        identities: vec![0, 1],
        compose: vec![[0, 0, 0], [1, 1, 1], [0, 2, 2], [2, 1, 2], [1, 3, 3], [3, 0, 3], [2, 3, 0], [3, 2, 1]],
    }
}

#[test]
fn explicit_pair_groupoid_validates() {
    let c = pair_groupoid().validate().unwrap();
    assert!(c.is_groupoid());
    assert_eq!(c.inverse_of(2), Some(3));
}

#[test]
fn validation_catches_bad_tables() {
    let mut missing = pair_groupoid();
    missing.compose.pop();
    assert!(matches!(missing.validate(), Err(Error::Invalid(_))));

    let mut clash = pair_groupoid();
    clash.compose.push([2, 3, 1]);
    assert!(clash.validate().is_err());

    let mut loose = pair_groupoid();
    loose.identities = vec![2, 1];
    assert!(loose.validate().is_err());

    // a two-element monoid with x·x = 1 declared but 1 not a unit
    let bad_unit = FiniteCategory { objects: 1, arrows: vec![arrow(0, 0), arrow(0, 0)], identities: vec![0], compose: vec![[0, 0, 1], [0, 1, 1], [1, 0, 1], [1, 1, 0]] };
    assert!(bad_unit.validate().is_err());
}

#[test]
fn non_associative_table_is_an_axiom_failure() {
    // unit 0; 1·1 = 2, 1·2 = 1, 2·1 = 2, 2·2 = 2 breaks (1·1)·1 = 1·(1·1)
    let table = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]];
    assert!(matches!(monoid_algebra(&table), Err(Error::Axiom { .. })));
    let cat = Category::one_object(&table);
    assert!(matches!(cat, Err(Error::Axiom { .. })));
}

#[test]
fn named_constructors() {
    assert_eq!(Category::discrete(3).len(), 3);
    assert!(Category::discrete(3).is_groupoid());
    let w = Category::walking_arrow();
    assert_eq!(w.len(), 3);
    assert!(!w.is_groupoid());
    let g = Category::cyclic_groupoid(2, 3).unwrap();
    assert_eq!(g.len(), 12);
    assert!(g.is_groupoid());
    let thin = Category::thin(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(thin.len(), 6);
    let free = Category::free_acyclic(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(free.len(), 6);
    assert_eq!(Category::discrete(1).sum(&w).data.objects, 3);
    assert_eq!(monoid_algebra(&cyclic_table(4)).unwrap().dim(), 4);
}

#[test]
fn spec_json_round_trips() {
    for e in corpus(0, 6) {
        let text = serde_json::to_string(&e).unwrap();
        let back: duoidal::models::CorpusEntry = serde_json::from_str(&text).unwrap();
        assert_eq!(back, e);
    }
    let spec: ModelSpec = serde_json::from_str(r#"{"kind": "cyclic-groupoid", "objects": 1, "order": 2}"#).unwrap();
    assert_eq!(spec, ModelSpec::CyclicGroupoid { objects: 1, order: 2 });
    let p: Preset = serde_json::from_str(&serde_json::to_string(&Preset::GvecCommutative { n: 2 }).unwrap()).unwrap();
    assert_eq!(p, Preset::GvecCommutative { n: 2 });
}

#[test]
fn corpus_is_deterministic_and_buildable() {
    assert_eq!(corpus(4, 5), corpus(4, 5));
    for e in corpus(4, 5) {
        match e.preset {
            Preset::Span { size } => {
                e.spec.build(&SpanFrob::span(size).unwrap()).unwrap();
            }
            Preset::GvecCommutative { n } => {
                e.spec.build(&GvecFrob::gvec_commutative(n).unwrap()).unwrap();
            }
            Preset::GvecWeak { .. } => panic!("weak entry in the corpus"),
        }
    }
}

#[test]
fn categories_are_not_modelled_over_the_weak_base() {
    let fr: Frob<_> = GvecFrob::gvec_weak(1).unwrap();
    assert!(ModelSpec::WalkingArrow.build(&fr).is_err());
    assert!(ModelSpec::TrivialI.build(&fr).is_ok());
}

fn has_inverses(c: &FiniteCategory) -> bool {
    (0..c.arrows.len()).all(|f| {
        (0..c.arrows.len()).any(|g| c.compose.contains(&[f, g, c.identities[c.arrows[f].src]]) && c.compose.contains(&[g, f, c.identities[c.arrows[f].tgt]]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_categories_are_small_valid_and_classified(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = Category::random(&mut rng, 4, 12);
        prop_assert!(c.data.objects >= 1 && c.data.objects <= 4);
        prop_assert!(c.len() <= 12);
        let again = c.data.clone().validate().unwrap();
        prop_assert_eq!(again.is_groupoid(), has_inverses(&c.data));
    }

    #[test]
    fn random_category_lists_are_reproducible(seed in any::<u64>()) {
        let a: Vec<_> = random_categories(seed, 3).into_iter().map(|c| c.data).collect();
        let b: Vec<_> = random_categories(seed, 3).into_iter().map(|c| c.data).collect();
        prop_assert_eq!(a, b);
    }
}
