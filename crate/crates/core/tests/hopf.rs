//! Antipodes, Hopf maps and diagnostics on named models.

use duoidal::antipode::{Antipode, Direct};
use duoidal::diagnose::Verdict;
use duoidal::frob::{user_positions, ElemView};
use duoidal::models::algebra::{cyclic_table, idempotent_table, linearized_category, monoid_algebra, s3_table, sweedler};
use duoidal::models::random::random_endo;
use duoidal::models::{Category, StructureConstants};
use duoidal::{GvecFrob, Map, SpanFrob};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn groupoid_inverse_by_search(c: &Category, f: usize) -> usize {
    let d = &c.data;
    let id = |x: usize| d.identities[x];
    (0..d.arrows.len())
        .find(|&g| d.compose.contains(&[f, g, id(d.arrows[f].src)]) && d.compose.contains(&[g, f, id(d.arrows[f].tgt)]))
        .expect("groupoid arrow without inverse")
}

fn span_antipode_is_inversion(c: &Category) {
    let fr = SpanFrob::span(c.data.objects).unwrap();
    let b = c.bimonoid(&fr).unwrap();
    let Antipode::Found(sigma) = fr.antipode_solve(&b).unwrap() else { panic!("groupoid without antipode") };
    let (cs, ct) = (fr.carrier(&sigma.src), fr.carrier(&sigma.tgt));
    let (ps, pt) = (user_positions(&sigma.src), user_positions(&sigma.tgt));
    for t in 0..ct.len() {
        let s = sigma.map.image(t);
        let (tv, sv) = (ElemView::new(&ct, t, &pt), ElemView::new(&cs, s, &ps));
        assert_eq!(groupoid_inverse_by_search(c, sv.user[0] as usize), tv.user[0] as usize);
    }
}

#[test]
fn groupoid_antipodes_invert_arrows() {
    span_antipode_is_inversion(&Category::cyclic_groupoid(1, 3).unwrap());
    span_antipode_is_inversion(&Category::cyclic_groupoid(2, 2).unwrap());
    span_antipode_is_inversion(&Category::cyclic_groupoid(3, 1).unwrap());
    span_antipode_is_inversion(&Category::one_object(&s3_table()).unwrap());
}

#[test]
fn transform_path_matches_direct_solve() {
    let fr = GvecFrob::gvec_commutative(1).unwrap();
    for (name, sc) in [("QS3", monoid_algebra(&s3_table()).unwrap()), ("sweedler", sweedler())] {
        let b = sc.bimonoid(&fr, name).unwrap();
        let via = fr.antipode_via_transform(&b).unwrap();
        match fr.antipode_direct(&b).unwrap() {
            Direct::Unique(s) => assert_eq!(Some(&s), via.cell(), "{name}"),
            Direct::Skipped => {}
            _ => panic!("{name}: direct solve is not unique"),
        }
        fr.check_antipode(&b, via.cell().unwrap()).unwrap();
    }
}

#[test]
fn idempotent_monoid_has_no_antipode() {
    let fr = GvecFrob::gvec_commutative(1).unwrap();
    let b = monoid_algebra(&idempotent_table()).unwrap().bimonoid(&fr, "Q{1,e}").unwrap();
    let beta = fr.hopf_map(&b).unwrap();
    match fr.antipode_solve(&b).unwrap() {
        Antipode::Missing(w) => assert!(beta.map.refuted_by(&w)),
        Antipode::Found(_) => panic!("Q{{1,e}} has an antipode"),
    }
}

#[test]
fn involutivity_in_reports() {
    let fr = GvecFrob::gvec_commutative(1).unwrap();
    let z3 = monoid_algebra(&cyclic_table(3)).unwrap().bimonoid(&fr, "QZ3").unwrap();
    assert_eq!(fr.diagnose(&z3, 1, 0).unwrap().antipode_involutive, Some(true));
    let sw = sweedler().bimonoid(&fr, "sweedler").unwrap();
    let rep = fr.diagnose(&sw, 1, 0).unwrap();
    assert_eq!(rep.antipode_involutive, Some(false));
    assert!(rep.all_positive());
    assert_eq!(rep.verdicts.a, Verdict::Holds);
}

#[test]
fn walking_arrow_report_lists_replayable_witnesses() {
    let fr = SpanFrob::span(2).unwrap();
    let rep = fr.diagnose(&Category::walking_arrow().bimonoid(&fr).unwrap(), 2, 5).unwrap();
    assert!(!rep.is_hopf());
    assert!(rep.antipode.is_none());
    assert!(matches!(rep.verdicts.a, Verdict::Fails { witness: 0 }));
    assert!(rep.witnesses.iter().all(|w| w.replays()));
    assert_eq!(rep.implied.h, rep.verdicts.h);
}

#[test]
fn broken_comultiplication_is_rejected() {
    let mut sc: StructureConstants = monoid_algebra(&cyclic_table(2)).unwrap();
    sc.comul.retain(|(z, _, _, _)| *z != 1);
    let fr = GvecFrob::gvec_commutative(1).unwrap();
    assert!(sc.bimonoid(&fr, "broken").is_err());
}

#[test]
fn linearized_groupoid_matches_span_model() {
    let c = Category::cyclic_groupoid(2, 2).unwrap();
    let (s, g) = (SpanFrob::span(2).unwrap(), GvecFrob::gvec_commutative(2).unwrap());
    let bs = c.bimonoid(&s).unwrap();
    let bg = linearized_category(&c).bimonoid(&g, "lin").unwrap();
    assert_eq!(s.carrier(&bs.a).len(), g.carrier(&bg.a).len());
    assert!(s.antipode_solve(&bs).unwrap().cell().is_some());
    assert!(g.antipode_solve(&bg).unwrap().cell().is_some());
}

#[test]
fn trivial_equivalence_in_small_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fr = SpanFrob::span(2).unwrap();
    for k in 0..5 {
        let x = random_endo(&fr, &mut rng, &format!("x{k}"), 3).unwrap();
        assert!(fr.try_invert(&fr.trivial_unit_at(&x).unwrap()).is_ok());
        assert!(fr.try_invert(&fr.trivial_counit_at(&x).unwrap()).is_ok());
    }
    let fr = GvecFrob::gvec_commutative(1).unwrap();
    for k in 0..5 {
        let x = random_endo(&fr, &mut rng, &format!("y{k}"), 3).unwrap();
        assert!(fr.try_invert(&fr.trivial_unit_at(&x).unwrap()).is_ok());
        assert!(fr.try_invert(&fr.trivial_counit_at(&x).unwrap()).is_ok());
    }
}

fn groupoid_laws<M: Map>(fr: &duoidal::Frob<M>, b: &duoidal::bimonoid::Bimonoid<M>) -> Result<(), TestCaseError> {
    let Antipode::Found(sigma) = fr.antipode_solve(b).unwrap() else { return Err(TestCaseError::fail("no antipode")) };
    fr.antipode_morphism_check(b, &sigma).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(fr.is_identity(&fr.antipode_square(b, &sigma).unwrap()));
    fr.transform_identity(b).map_err(|e| TestCaseError::fail(e.to_string()))?;
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cyclic_groupoids_have_involutive_antipodes(objects in 1usize..=3, order in 1usize..=3) {
        let c = Category::cyclic_groupoid(objects, order).unwrap();
        let s = SpanFrob::span(objects).unwrap();
        groupoid_laws(&s, &c.bimonoid(&s).unwrap())?;
        let g = GvecFrob::gvec_commutative(objects).unwrap();
        groupoid_laws(&g, &linearized_category(&c).bimonoid(&g, "lin").unwrap())?;
    }

    #[test]
    fn cyclic_monoids_are_hopf_only_when_groups(index in 0usize..=2, period in 1usize..=3) {
        prop_assume!(Category::cyclic_monoid(index, period).is_ok());
        let c = Category::cyclic_monoid(index, period).unwrap();
        let s = SpanFrob::span(1).unwrap();
        let found = s.antipode_solve(&c.bimonoid(&s).unwrap()).unwrap().cell().is_some();
        prop_assert_eq!(found, index == 0);
    }
}
