//! Canonical comparison 2-cells between normal forms.
//!
//! Two kinds are provided. Interchange comparisons relate layer sequences that
//! draw the same string diagram (same atoms consuming the same wires); they
//! only permute layer choices and exist over every preset. Structural
//! comparisons match elements by their legs and their user-layer choices; they
//! realize the unit, associativity and mate isomorphisms of the monoidale and
//! exist whenever that matching is a bijection.

use crate::cell::{Kind, OneCell};
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob, Preset};
use crate::map::Map;
use std::collections::HashMap;

struct Sim {
    consumed: Vec<Vec<usize>>,
    produced: Vec<Vec<usize>>,
    finals: Vec<usize>,
}

fn simulate_ids(c: &OneCell) -> Sim {
    let mut wires: Vec<usize> = (0..c.dom()).collect();
    let mut fresh = c.dom();
    let (mut consumed, mut produced) = (Vec::new(), Vec::new());
    for l in c.layers() {
        let ins: Vec<usize> = wires[l.off..l.off + l.atom.dom].to_vec();
        let outs: Vec<usize> = (fresh..fresh + l.atom.cod).collect();
        fresh += l.atom.cod;
        wires.splice(l.off..l.off + l.atom.dom, outs.iter().copied());
        consumed.push(ins);
        produced.push(outs);
    }
    Sim { consumed, produced, finals: wires }
}

/// Closed components of the structural part of the diagram: sets of wires
/// joined through structural nodes that touch neither the boundary nor a user
/// node. Returns one representative wire id per component, in order of
/// first appearance.
fn floating_components(c: &OneCell) -> Vec<usize> {
    let sim = simulate_ids(c);
    let nwires = c.dom() + sim.produced.iter().map(Vec::len).sum::<usize>();
    let mut parent: Vec<usize> = (0..nwires).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut pinned = vec![false; nwires];
    for &w in (0..c.dom()).collect::<Vec<_>>().iter().chain(&sim.finals) {
        pinned[w] = true;
    }
    for (i, l) in c.layers().iter().enumerate() {
        let legs: Vec<usize> = sim.consumed[i].iter().chain(&sim.produced[i]).copied().collect();
        if l.atom.kind == Kind::User {
            for &w in &legs {
                pinned[w] = true;
            }
        } else if let Some((&first, rest)) = legs.split_first() {
            for &w in rest {
                let (a, b) = (find(&mut parent, first), find(&mut parent, w));
                parent[a] = b;
            }
        }
    }
    let mut root_pinned = vec![false; nwires];
    for w in 0..nwires {
        if pinned[w] {
            let r = find(&mut parent, w);
            root_pinned[r] = true;
        }
    }
    let mut seen = vec![false; nwires];
    let mut reps = Vec::new();
    for w in 0..nwires {
        let r = find(&mut parent, w);
        if !root_pinned[r] && !seen[r] {
            seen[r] = true;
            reps.push(w);
        }
    }
    reps
}

/// Values carried by every wire id for one element.
fn wire_values(c: &OneCell, input: &[u32], choices: &[u32]) -> Vec<u32> {
    let mut vals = input.to_vec();
    for (l, &ch) in c.layers().iter().zip(choices) {
        vals.extend_from_slice(&l.atom.elems()[ch as usize].outs);
    }
    vals
}

/// For each target layer, the source layer drawing the same node, if the two
/// sequences are related by interchange alone.
pub fn interchange_matching(src: &OneCell, tgt: &OneCell) -> Option<Vec<usize>> {
    if src.dom() != tgt.dom() || src.cod() != tgt.cod() || src.len() != tgt.len() {
        return None;
    }
    let sim = simulate_ids(src);
    let mut used = vec![false; src.len()];
    let mut perm = Vec::with_capacity(tgt.len());
    let wires: Vec<usize> = (0..tgt.dom()).collect();
    if search(src, tgt, &sim, 0, wires, &mut used, &mut perm) {
        Some(perm)
    } else {
        None
    }
}

fn search(src: &OneCell, tgt: &OneCell, sim: &Sim, j: usize, wires: Vec<usize>, used: &mut [bool], perm: &mut Vec<usize>) -> bool {
    if j == tgt.len() {
        return wires == sim.finals;
    }
    let l = &tgt.layers()[j];
    let ins = &wires[l.off..l.off + l.atom.dom];
    for i in 0..src.len() {
        if used[i] || src.layers()[i].atom != l.atom || sim.consumed[i] != ins {
            continue;
        }
        let mut w = wires.clone();
        w.splice(l.off..l.off + l.atom.dom, sim.produced[i].iter().copied());
        used[i] = true;
        perm.push(i);
        if search(src, tgt, sim, j + 1, w, used, perm) {
            return true;
        }
        perm.pop();
        used[i] = false;
    }
    false
}

impl<M: Map> Frob<M> {
    /// The interchange comparison `src => tgt`.
    pub fn interchange(&self, src: &OneCell, tgt: &OneCell) -> Result<Cell<M>> {
        let perm = interchange_matching(src, tgt).ok_or_else(|| Error::Coherence(format!("`{src}` and `{tgt}` do not draw the same diagram")))?;
        let (cs, ct) = (self.carrier(src), self.carrier(tgt));
        let mut inv = vec![0usize; perm.len()];
        for (j, &i) in perm.iter().enumerate() {
            inv[i] = j;
        }
        let mut pairs = Vec::with_capacity(ct.len());
        let mut key = Vec::new();
        for t in 0..ct.len() {
            let ch = ct.choices(t);
            key.clear();
            key.extend_from_slice(ct.input(t));
            key.extend(inv.iter().map(|&j| ch[j]));
            let s = cs.find(&key).ok_or_else(|| Error::Coherence("interchange lost an element".into()))?;
            pairs.push((t as u32, s as u32));
        }
        self.relation(src, tgt, &pairs)
    }

    /// Pairs `(t, s)` of target and source elements with equal legs and equal
    /// user choices, where target user layer `k` corresponds to source user
    /// layer `perm[k]` (the identity correspondence when `perm` is `None`).
    pub fn semantic_pairs(&self, src: &OneCell, tgt: &OneCell, perm: Option<&[usize]>) -> Result<Vec<(u32, u32)>> {
        if src.dom() != tgt.dom() || src.cod() != tgt.cod() {
            return Err(Error::Shape(format!("`{src}` and `{tgt}` are not parallel")));
        }
        let su: Vec<usize> = (0..src.len()).filter(|&i| src.layers()[i].atom.kind == Kind::User).collect();
        let tu: Vec<usize> = (0..tgt.len()).filter(|&i| tgt.layers()[i].atom.kind == Kind::User).collect();
        if su.len() != tu.len() {
            return Err(Error::Coherence(format!("`{src}` and `{tgt}` have different numbers of user layers")));
        }
        let ident: Vec<usize> = (0..tu.len()).collect();
        let perm = perm.unwrap_or(&ident);
        if perm.len() != tu.len() {
            return Err(Error::Coherence("user correspondence has the wrong length".into()));
        }
        for (k, &p) in perm.iter().enumerate() {
            if p >= su.len() || tgt.layers()[tu[k]].atom != src.layers()[su[p]].atom {
                return Err(Error::Coherence(format!("user layer {k} of `{tgt}` does not correspond to layer {p} of `{src}`")));
            }
        }
        let (cs, ct) = (self.carrier(src), self.carrier(tgt));
        let spider = !matches!(self.preset, Preset::GvecWeak { .. });
        let (fs, ft) = if spider { (floating_components(src), floating_components(tgt)) } else { (Vec::new(), Vec::new()) };
        if fs.len() != ft.len() {
            return Err(Error::Coherence(format!("`{src}` and `{tgt}` have different numbers of closed components")));
        }
        let mut by_key: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
        for t in 0..ct.len() {
            let ch = ct.choices(t);
            let mut key = ct.input(t).to_vec();
            key.extend_from_slice(ct.out(t));
            key.extend(tu.iter().map(|&i| ch[i]));
            if !ft.is_empty() {
                let v = wire_values(tgt, ct.input(t), ch);
                key.extend(ft.iter().map(|&w| v[w]));
            }
            by_key.entry(key).or_default().push(t as u32);
        }
        let mut pairs = Vec::new();
        for s in 0..cs.len() {
            let ch = cs.choices(s);
            let mut key = cs.input(s).to_vec();
            key.extend_from_slice(cs.out(s));
            key.extend(perm.iter().map(|&p| ch[su[p]]));
            if !fs.is_empty() {
                let v = wire_values(src, cs.input(s), ch);
                key.extend(fs.iter().map(|&w| v[w]));
            }
            if let Some(ts) = by_key.get(&key) {
                pairs.extend(ts.iter().map(|&t| (t, s as u32)));
            }
        }
        pairs.sort_unstable();
        Ok(pairs)
    }

    /// The structural 2-cell obtained by leg and user-choice matching. It need
    /// not be invertible; over spider presets every composite of structural
    /// cells whiskered by user cells has this form.
    pub fn structural(&self, src: &OneCell, tgt: &OneCell, perm: Option<&[usize]>) -> Result<Cell<M>> {
        let pairs = self.semantic_pairs(src, tgt, perm)?;
        self.relation(src, tgt, &pairs)
    }

    /// Structural comparison required to be invertible.
    pub fn coh_perm(&self, src: &OneCell, tgt: &OneCell, perm: &[usize]) -> Result<Cell<M>> {
        self.coh_inner(src, tgt, Some(perm))
    }

    fn coh_inner(&self, src: &OneCell, tgt: &OneCell, perm: Option<&[usize]>) -> Result<Cell<M>> {
        let pairs = self.semantic_pairs(src, tgt, perm)?;
        let (ns, nt) = (self.carrier(src).len(), self.carrier(tgt).len());
        let mut ds = vec![0u32; ns];
        let mut dt = vec![0u32; nt];
        for &(t, s) in &pairs {
            ds[s as usize] += 1;
            dt[t as usize] += 1;
        }
        if ns != nt || ds.iter().chain(&dt).any(|&d| d != 1) {
            return Err(Error::Coherence(format!("`{src}` and `{tgt}` are not canonically isomorphic")));
        }
        self.relation(src, tgt, &pairs)
    }

    /// Canonical comparison: interchange when the diagrams agree, otherwise the
    /// structural isomorphism with order-preserving user correspondence.
    pub fn coh(&self, src: &OneCell, tgt: &OneCell) -> Result<Cell<M>> {
        if src == tgt {
            return Ok(self.id2(src));
        }
        if interchange_matching(src, tgt).is_some() {
            return self.interchange(src, tgt);
        }
        self.coh_inner(src, tgt, None)
    }
}
