//! Carriers, composition and basic 2-cell algebra in both backends.

use duoidal::frob::{Cell, Frob};
use duoidal::linalg::{q, QMat};
use duoidal::models::random::two_cell_between;
use duoidal::{GvecFrob, Map, OneCell, SpanFrob, Witness};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

type Counts = BTreeMap<(u32, u32), usize>;

fn counts<M: Map>(fr: &Frob<M>, c: &OneCell) -> Counts {
    let car = fr.carrier(c);
    let mut out = Counts::new();
    for i in 0..car.len() {
        *out.entry((car.input(i)[0], car.out(i)[0])).or_default() += 1;
    }
    out
}

fn random_legs(rng: &mut ChaCha8Rng, base: usize, max: usize) -> Vec<(u32, u32)> {
    let mut v: Vec<(u32, u32)> = (0..rng.gen_range(1..=max)).map(|_| (rng.gen_range(0..base) as u32, rng.gen_range(0..base) as u32)).collect();
    v.sort_unstable();
    v
}

fn endo<M: Map>(fr: &Frob<M>, name: &str, legs: &[(u32, u32)]) -> OneCell {
    OneCell::atom(&fr.endo_atom(name, legs).unwrap())
}

/// Counts of a composite computed by pairing elements whose middle legs meet.
fn pullback(f: &Counts, g: &Counts) -> Counts {
    let mut out = Counts::new();
    for (&(a, b), &n) in f {
        for (&(c, d), &m) in g {
            if b == c {
                *out.entry((a, d)).or_default() += n * m;
            }
        }
    }
    out
}

fn pointwise(f: &Counts, g: &Counts) -> Counts {
    f.iter().filter_map(|(k, &n)| g.get(k).map(|&m| (*k, n * m))).filter(|(_, n)| *n > 0).collect()
}

fn swapped(f: &Counts) -> Counts {
    f.iter().map(|(&(a, b), &n)| ((b, a), n)).collect()
}

fn carrier_laws<M: Map>(fr: &Frob<M>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = fr.base();
    for k in 0..12 {
        let f = endo(fr, &format!("f{k}"), &random_legs(&mut rng, base, 4));
        let g = endo(fr, &format!("g{k}"), &random_legs(&mut rng, base, 4));
        let (cf, cg) = (counts(fr, &f), counts(fr, &g));
        assert_eq!(counts(fr, &fr.circ(&f, &g).unwrap()), pullback(&cf, &cg));
        assert_eq!(counts(fr, &fr.bullet(&f, &g).unwrap()), pointwise(&cf, &cg));
        assert_eq!(counts(fr, &fr.minus(&f).unwrap()), swapped(&cf));
        assert_eq!(counts(fr, &fr.plus(&f).unwrap()), swapped(&cf));
    }
}

#[test]
fn composites_have_the_expected_carriers() {
    for n in 1..=3 {
        carrier_laws(&SpanFrob::span(n).unwrap(), n as u64);
        carrier_laws(&GvecFrob::gvec_commutative(n).unwrap(), 10 + n as u64);
    }
}

#[test]
fn unit_carriers() {
    for n in 1..=3u32 {
        let fr = SpanFrob::span(n as usize).unwrap();
        let all: Counts = (0..n).flat_map(|a| (0..n).map(move |b| ((a, b), 1))).collect();
        let diag: Counts = (0..n).map(|a| ((a, a), 1)).collect();
        assert_eq!(counts(&fr, &fr.unit_j()), all);
        assert_eq!(counts(&fr, &fr.unit_i()), diag);
    }
    let fr = SpanFrob::span(2).unwrap();
    assert_eq!(fr.carrier(&fr.unit_j()).len(), 4);
    assert_eq!(fr.carrier(&fr.unit_i()).len(), 2);
}

#[test]
fn units_are_neutral_up_to_coherence() {
    let fr = GvecFrob::gvec_commutative(2).unwrap();
    let f = endo(&fr, "f", &[(0, 0), (0, 1), (0, 1), (1, 1)]);
    let (i, j) = (fr.unit_i(), fr.unit_j());
    for wrapped in [fr.circ(&i, &f).unwrap(), fr.circ(&f, &i).unwrap(), fr.bullet(&j, &f).unwrap(), fr.bullet(&f, &j).unwrap()] {
        let c = fr.coh(&wrapped, &f).unwrap();
        assert!(fr.try_invert(&c).is_ok(), "{wrapped}");
    }
}

#[test]
fn dual_of_graded_dimensions() {
    // dims [[1,2],[0,1]] become [[1,0],[2,1]]
    let fr = GvecFrob::gvec_commutative(2).unwrap();
    let f = endo(&fr, "f", &[(0, 0), (0, 1), (0, 1), (1, 1)]);
    let want: Counts = [((0, 0), 1), ((1, 0), 2), ((1, 1), 1)].into_iter().collect();
    assert_eq!(counts(&fr, &fr.minus(&f).unwrap()), want);
}

#[test]
fn arrow_span_dual_swaps_legs() {
    let fr = SpanFrob::span(2).unwrap();
    let arrows = endo(&fr, "arr", &[(0, 0), (0, 1), (1, 1)]);
    let want: Counts = [((0, 0), 1), ((1, 0), 1), ((1, 1), 1)].into_iter().collect();
    assert_eq!(counts(&fr, &fr.minus(&arrows).unwrap()), want);
}

fn matrix_cell(fr: &GvecFrob, m: &[&[i64]]) -> Cell<QMat> {
    let legs = vec![(0, 0); m.len()];
    let (s, t) = (endo(fr, "s", &legs), endo(fr, "t", &legs));
    fr.cell(&s, &t, QMat::from_ints(m)).unwrap()
}

#[test]
fn inverse_of_a_shear() {
    let fr = GvecFrob::gvec_commutative(1).unwrap();
    let c = matrix_cell(&fr, &[&[1, 1], &[0, 1]]);
    let inv = fr.invert(&c).unwrap();
    assert_eq!(inv.map, QMat::from_ints(&[&[1, -1], &[0, 1]]));
    assert!(fr.is_identity(&fr.vcomp(&c, &inv).unwrap()));
}

#[test]
fn singular_matrix_has_a_kernel_witness() {
    let fr = GvecFrob::gvec_commutative(1).unwrap();
    let c = matrix_cell(&fr, &[&[1, 1], &[1, 1]]);
    match fr.try_invert(&c) {
        Err(Witness::Kernel { vector }) => {
            let mut v = [q(0), q(0)];
            for (i, x) in vector {
                v[i] = x;
            }
            assert!(v[0] != q(0));
            assert_eq!(v[0], -v[1].clone());
        }
        other => panic!("expected a kernel witness, got {other:?}"),
    }
}

#[test]
fn span_cells_reject_non_functions() {
    let fr = SpanFrob::span(2).unwrap();
    let s = endo(&fr, "s", &[(0, 1)]);
    let t = endo(&fr, "t", &[(1, 0)]);
    assert!(fr.relation(&s, &t, &[(0, 0)]).is_err());
    let s2 = endo(&fr, "s2", &[(0, 1), (0, 1)]);
    let t2 = endo(&fr, "t2", &[(0, 1)]);
    assert!(fr.relation(&s2, &t2, &[(0, 0)]).is_ok());
    assert!(fr.relation(&s2, &t2, &[(0, 0), (0, 1)]).is_err());
    assert!(fr.relation(&s2, &t2, &[]).is_err());
}

#[test]
fn xi_dual_and_upsilon_are_invertible() {
    let fr = SpanFrob::span(2).unwrap();
    let f = endo(&fr, "f", &[(0, 0), (0, 1), (1, 1)]);
    let g = endo(&fr, "g", &[(0, 1), (1, 0)]);
    let xi = fr.xi_dual(&f, &g).unwrap();
    assert_eq!(counts(&fr, &xi.src), pullback(&swapped(&counts(&fr, &g)), &swapped(&counts(&fr, &f))));
    assert_eq!(counts(&fr, &xi.tgt), swapped(&pullback(&counts(&fr, &f), &counts(&fr, &g))));
    assert!(fr.try_invert(&xi).is_ok());
    let up = fr.upsilon(&f, &g).unwrap();
    assert!(fr.try_invert(&up).is_ok());
}

/// Legs for a chain of atoms where every target leg occurs in the source.
fn chain_legs(rng: &mut ChaCha8Rng, base: usize, len: usize) -> Vec<Vec<(u32, u32)>> {
    let mut out = vec![random_legs(rng, base, 4)];
    for _ in 1..len {
        let prev = out.last().unwrap().clone();
        let mut next: Vec<_> = (0..rng.gen_range(1..=4)).map(|_| prev[rng.gen_range(0..prev.len())]).collect();
        next.sort_unstable();
        out.push(next);
    }
    out
}

fn chain<M: Map>(fr: &Frob<M>, seed: u64, len: usize, tag: &str) -> Vec<Cell<M>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<OneCell> = chain_legs(&mut rng, fr.base(), len + 1).iter().enumerate().map(|(k, l)| endo(fr, &format!("{tag}{k}"), l)).collect();
    cells.windows(2).map(|w| two_cell_between(fr, &mut rng, &w[0], &w[1]).unwrap()).collect()
}

fn vertical_laws<M: Map>(fr: &Frob<M>, seed: u64) -> Result<(), TestCaseError> {
    let c = chain(fr, seed, 3, "x");
    let left = fr.vcomp(&fr.vcomp(&c[0], &c[1]).unwrap(), &c[2]).unwrap();
    let right = fr.vcomp(&c[0], &fr.vcomp(&c[1], &c[2]).unwrap()).unwrap();
    prop_assert_eq!(&left, &right);
    prop_assert_eq!(&fr.vcomp(&fr.id2(&c[0].src), &c[0]).unwrap(), &c[0]);
    prop_assert_eq!(&fr.vcomp(&c[0], &fr.id2(&c[0].tgt)).unwrap(), &c[0]);
    Ok(())
}

fn interchange<M: Map>(fr: &Frob<M>, seed: u64) -> Result<(), TestCaseError> {
    let a = chain(fr, seed, 2, "p");
    let b = chain(fr, seed ^ 0x5555, 2, "q");
    for (h, h2) in [(Frob::circ2 as fn(&Frob<M>, &Cell<M>, &Cell<M>) -> duoidal::Result<Cell<M>>, "circ"), (Frob::bullet2, "bullet")].map(|(f, n)| (f, n)) {
        let lhs = h(fr, &fr.vcomp(&a[0], &a[1]).unwrap(), &fr.vcomp(&b[0], &b[1]).unwrap()).unwrap();
        let rhs = fr.vcomp(&h(fr, &a[0], &b[0]).unwrap(), &h(fr, &a[1], &b[1]).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs, "interchange for {}", h2);
    }
    Ok(())
}

fn duals_are_functorial<M: Map>(fr: &Frob<M>, seed: u64) -> Result<(), TestCaseError> {
    let c = chain(fr, seed, 2, "d");
    let both = fr.vcomp(&c[0], &c[1]).unwrap();
    prop_assert_eq!(fr.minus2(&both).unwrap(), fr.vcomp(&fr.minus2(&c[0]).unwrap(), &fr.minus2(&c[1]).unwrap()).unwrap());
    prop_assert_eq!(fr.plus2(&both).unwrap(), fr.vcomp(&fr.plus2(&c[0]).unwrap(), &fr.plus2(&c[1]).unwrap()).unwrap());
    prop_assert!(fr.is_identity(&fr.minus2(&fr.id2(&c[0].src)).unwrap()));
    fr.roundtrip_check(&c[0]).map_err(|e| TestCaseError::fail(e.to_string()))?;
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn vertical_composition_is_associative_and_unital(seed in any::<u64>(), n in 1usize..=3) {
        vertical_laws(&SpanFrob::span(n).unwrap(), seed)?;
        vertical_laws(&GvecFrob::gvec_commutative(n).unwrap(), seed)?;
    }

    #[test]
    fn both_products_satisfy_interchange(seed in any::<u64>(), n in 1usize..=2) {
        interchange(&SpanFrob::span(n).unwrap(), seed)?;
        interchange(&GvecFrob::gvec_commutative(n).unwrap(), seed)?;
    }

    #[test]
    fn mates_are_functorial_and_round_trip(seed in any::<u64>(), n in 1usize..=2) {
        duals_are_functorial(&SpanFrob::span(n).unwrap(), seed)?;
        duals_are_functorial(&GvecFrob::gvec_commutative(n).unwrap(), seed)?;
    }

    #[test]
    fn invertible_graded_cells_invert(seed in any::<u64>()) {
        let fr = GvecFrob::gvec_commutative(1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=4);
        // unitriangular, hence invertible
        let rows: Vec<Vec<i64>> = (0..k).map(|r| (0..k).map(|c| if r == c { 1 } else if c > r { rng.gen_range(-3..=3) } else { 0 }).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let c = matrix_cell(&fr, &refs);
        let inv = fr.invert(&c).unwrap();
        prop_assert!(fr.is_identity(&fr.vcomp(&c, &inv).unwrap()));
        prop_assert!(fr.is_identity(&fr.vcomp(&inv, &c).unwrap()));
    }
}
