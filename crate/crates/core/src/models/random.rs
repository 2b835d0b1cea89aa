//! Random endo-1-cells and 2-cells for property checks.

use crate::cell::OneCell;
use crate::error::Result;
use crate::frob::{Cell, Frob, ElemView};
use crate::linalg::{q, Q};
use crate::map::Map;
use rand::Rng;
use std::collections::HashMap;

/// Largest carrier drawn for span cells.
pub const SPAN_MAX_ELEMS: usize = 8;
/// Largest total dimension drawn for graded cells.
pub const GVEC_MAX_DIM: usize = 6;

/// Size cap for random cells in the given backend.
pub fn default_cap<M: Map>() -> usize {
    if M::BACKEND == "span" {
        SPAN_MAX_ELEMS
    } else {
        GVEC_MAX_DIM
    }
}

fn random_legs<R: Rng>(rng: &mut R, base: usize, min: usize, max: usize) -> Vec<(u32, u32)> {
    let k = rng.gen_range(min..=max.max(min));
    let mut legs: Vec<(u32, u32)> = (0..k).map(|_| (rng.gen_range(0..base) as u32, rng.gen_range(0..base) as u32)).collect();
    legs.sort_unstable();
    legs
}

/// A random endo-1-cell `M -> M` with between 1 and `max` elements.
pub fn random_endo<M: Map, R: Rng>(fr: &Frob<M>, rng: &mut R, name: &str, max: usize) -> Result<OneCell> {
    let legs = random_legs(rng, fr.base(), 1, max);
    Ok(OneCell::atom(&fr.endo_atom(name, &legs)?))
}

/// A random 2-cell between two random endo-1-cells. In the span backend it
/// is a leg-preserving function; in the graded backend a grade-preserving
/// matrix with entries in `-2..=2`.
pub fn random_two_cell<M: Map, R: Rng>(fr: &Frob<M>, rng: &mut R, names: (&str, &str), max: usize) -> Result<Cell<M>> {
    let base = fr.base();
    let src_legs = random_legs(rng, base, 1, max);
    let tgt_legs: Vec<(u32, u32)> = if M::BACKEND == "span" {
        // every target element must have a source element over the same legs
        let k = rng.gen_range(1..=max);
        let mut t: Vec<_> = (0..k).map(|_| src_legs[rng.gen_range(0..src_legs.len())]).collect();
        t.sort_unstable();
        t
    } else {
        random_legs(rng, base, 1, max)
    };
    let src = OneCell::atom(&fr.endo_atom(names.0, &src_legs)?);
    let tgt = OneCell::atom(&fr.endo_atom(names.1, &tgt_legs)?);
    two_cell_between(fr, rng, &src, &tgt)
}

/// A random 2-cell between given single-atom endo-1-cells.
pub fn two_cell_between<M: Map, R: Rng>(fr: &Frob<M>, rng: &mut R, src: &OneCell, tgt: &OneCell) -> Result<Cell<M>> {
    let legs = |c: &OneCell| -> Vec<(u32, u32)> {
        let car = fr.carrier(c);
        (0..car.len()).map(|i| (car.input(i)[0], car.out(i)[0])).collect()
    };
    let (sl, tl) = (legs(src), legs(tgt));
    let mut coef: HashMap<(usize, usize), Q> = HashMap::new();
    for (t, lt) in tl.iter().enumerate() {
        let same: Vec<usize> = (0..sl.len()).filter(|&s| sl[s] == *lt).collect();
        if M::BACKEND == "span" {
            if !same.is_empty() {
                coef.insert((t, same[rng.gen_range(0..same.len())]), q(1));
            }
        } else {
            for s in same {
                coef.insert((t, s), q(rng.gen_range(-2..=2)));
            }
        }
    }
    fr.cell_by(src, tgt, |t: &ElemView, s: &ElemView| coef.get(&(t.index, s.index)).cloned())
}
