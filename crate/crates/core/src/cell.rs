//! 1-cells in Gray normal form: a sequence of atomic layers, each acting on a
//! contiguous block of wires. Carriers enumerate the elements (basis vectors or
//! span points) of such a sequence over a finite base index set.

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    M,
    U,
    MStar,
    UStar,
    User,
}

impl Kind {
    pub fn transpose(self) -> Kind {
        match self {
            Kind::M => Kind::MStar,
            Kind::MStar => Kind::M,
            Kind::U => Kind::UStar,
            Kind::UStar => Kind::U,
            Kind::User => Kind::User,
        }
    }
}

/// One element of an atom: its input and output legs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Elem {
    pub ins: Vec<u32>,
    pub outs: Vec<u32>,
}

/// A generating 1-cell `M^dom -> M^cod` given by its finite set of elements.
/// Several elements may share the same legs (multiplicity).
#[derive(Clone)]
pub struct Atom {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
    pub kind: Kind,
    elems: Vec<Elem>,
    by_in: HashMap<Vec<u32>, Vec<u32>>,
}

impl PartialEq for Atom {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name && self.dom == o.dom && self.cod == o.cod && self.kind == o.kind && self.elems == o.elems
    }
}
impl Eq for Atom {}

impl Hash for Atom {
    fn hash<H: Hasher>(&self, h: &mut H) {
        (&self.name, self.dom, self.cod, self.kind, self.elems.len()).hash(h)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}->{}[{}]", self.name, self.dom, self.cod, self.elems.len())
    }
}

impl Atom {
    pub fn new(name: impl Into<String>, dom: usize, cod: usize, kind: Kind, elems: Vec<Elem>, base: usize) -> Result<Self, Error> {
        let name = name.into();
        let mut by_in: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
        for (i, e) in elems.iter().enumerate() {
            if e.ins.len() != dom || e.outs.len() != cod {
                return Err(Error::Invalid(format!("element {i} of {name} has legs of the wrong arity")));
            }
            if e.ins.iter().chain(&e.outs).any(|&x| x as usize >= base) {
                return Err(Error::Invalid(format!("element {i} of {name} has a leg outside the base of size {base}")));
            }
            by_in.entry(e.ins.clone()).or_default().push(i as u32);
        }
        Ok(Atom { name, dom, cod, kind, elems, by_in })
    }

    /// A user atom `M -> M` from `(in, out)` leg pairs.
    pub fn endo(name: impl Into<String>, legs: &[(u32, u32)], base: usize) -> Result<Self, Error> {
        let elems = legs.iter().map(|&(i, o)| Elem { ins: vec![i], outs: vec![o] }).collect();
        Atom::new(name, 1, 1, Kind::User, elems, base)
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn by_in(&self, ins: &[u32]) -> &[u32] {
        self.by_in.get(ins).map_or(&[], |v| v.as_slice())
    }

    /// The transpose: legs swapped, structural kind swapped.
    pub fn transposed(&self, base: usize) -> Atom {
        let name = match self.name.strip_suffix('*') {
            Some(s) => s.to_string(),
            None => format!("{}*", self.name),
        };
        let elems = self.elems.iter().map(|e| Elem { ins: e.outs.clone(), outs: e.ins.clone() }).collect();
        Atom::new(name, self.cod, self.dom, self.kind.transpose(), elems, base).expect("transpose keeps legs in range")
    }
}

#[derive(Clone)]
pub struct Layer {
    pub off: usize,
    pub atom: Arc<Atom>,
}

impl PartialEq for Layer {
    fn eq(&self, o: &Self) -> bool {
        self.off == o.off && (Arc::ptr_eq(&self.atom, &o.atom) || *self.atom == *o.atom)
    }
}
impl Eq for Layer {}

impl Hash for Layer {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.off.hash(h);
        self.atom.hash(h);
    }
}

impl fmt::Debug for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.atom.name, self.off)
    }
}

impl Layer {
    pub fn new(atom: &Arc<Atom>, off: usize) -> Self {
        Layer { off, atom: atom.clone() }
    }

    pub fn shifted(&self, k: usize) -> Self {
        Layer { off: self.off + k, atom: self.atom.clone() }
    }
}

/// A 1-cell `M^dom -> M^cod`. Layers act first to last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OneCell {
    dom: usize,
    cod: usize,
    layers: Arc<[Layer]>,
}

impl fmt::Debug for OneCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for OneCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "1[{}]", self.dom);
        }
        let parts: Vec<String> = self.layers.iter().map(|l| format!("{l:?}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl OneCell {
    pub fn new(dom: usize, layers: Vec<Layer>) -> Result<Self, Error> {
        let mut w = dom;
        for (i, l) in layers.iter().enumerate() {
            if l.off + l.atom.dom > w {
                return Err(Error::Arity(format!("layer {i} ({l:?}) does not fit on {w} wires")));
            }
            w = w - l.atom.dom + l.atom.cod;
        }
        Ok(OneCell { dom, cod: w, layers: layers.into() })
    }

    pub fn id(p: usize) -> Self {
        OneCell { dom: p, cod: p, layers: Arc::from(Vec::new()) }
    }

    pub fn atom(a: &Arc<Atom>) -> Self {
        OneCell { dom: a.dom, cod: a.cod, layers: Arc::from(vec![Layer::new(a, 0)]) }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Horizontal composite "self, then g" (written g.f elsewhere).
    pub fn then(&self, g: &OneCell) -> Result<Self, Error> {
        if self.cod != g.dom {
            return Err(Error::Composition { left: self.to_string(), right: g.to_string(), detail: format!("codomain {} vs domain {}", self.cod, g.dom) });
        }
        let mut v = self.layers.to_vec();
        v.extend(g.layers.iter().cloned());
        Ok(OneCell { dom: self.dom, cod: g.cod, layers: v.into() })
    }

    /// Tensor product: `self` on the left wires, `g` on the right.
    pub fn tensor(&self, g: &OneCell) -> Self {
        let mut v = self.layers.to_vec();
        v.extend(g.layers.iter().map(|l| l.shifted(self.cod)));
        OneCell { dom: self.dom + g.dom, cod: self.cod + g.cod, layers: v.into() }
    }

    /// Layers shifted right by `k` wires.
    pub fn shifted_layers(&self, k: usize) -> Vec<Layer> {
        self.layers.iter().map(|l| l.shifted(k)).collect()
    }

    /// Wire count after the first `i` layers.
    pub fn width_at(&self, i: usize) -> usize {
        self.layers[..i].iter().fold(self.dom, |w, l| w - l.atom.dom + l.atom.cod)
    }

    pub fn user_atoms(&self) -> Vec<Arc<Atom>> {
        self.layers.iter().filter(|l| l.atom.kind == Kind::User).map(|l| l.atom.clone()).collect()
    }
}

/// Run the layers on an input tuple with fixed element choices, returning the wires.
pub fn simulate(layers: &[Layer], input: &[u32], choices: &[u32]) -> Vec<u32> {
    let mut w = input.to_vec();
    for (l, &c) in layers.iter().zip(choices) {
        let e = &l.atom.elems[c as usize];
        w.splice(l.off..l.off + l.atom.dom, e.outs.iter().copied());
    }
    w
}

/// The enumerated elements of a 1-cell. An element is the flat key
/// `inputs ++ choices`, one choice per layer; keys are sorted lexicographically.
pub struct Carrier {
    pub dom: usize,
    pub cod: usize,
    pub depth: usize,
    keys: Vec<Vec<u32>>,
    outs: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Carrier({} elements)", self.keys.len())
    }
}

impl Carrier {
    pub fn enumerate(cell: &OneCell, base: usize) -> Carrier {
        let mut keys = Vec::new();
        let mut outs = Vec::new();
        let mut input = vec![0u32; cell.dom];
        let total = base.pow(cell.dom as u32);
        for code in 0..total {
            let mut c = code;
            for slot in input.iter_mut().rev() {
                *slot = (c % base) as u32;
                c /= base;
            }
            let mut key = input.clone();
            dfs(cell.layers(), 0, input.clone(), &mut key, &mut keys, &mut outs);
        }
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i as u32)).collect();
        Carrier { dom: cell.dom, cod: cell.cod, depth: cell.len(), keys, outs, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn key(&self, i: usize) -> &[u32] {
        &self.keys[i]
    }

    pub fn input(&self, i: usize) -> &[u32] {
        &self.keys[i][..self.dom]
    }

    pub fn choices(&self, i: usize) -> &[u32] {
        &self.keys[i][self.dom..]
    }

    pub fn out(&self, i: usize) -> &[u32] {
        &self.outs[i]
    }

    pub fn find(&self, key: &[u32]) -> Option<usize> {
        self.index.get(key).map(|&i| i as usize)
    }
}

fn dfs(layers: &[Layer], depth: usize, wires: Vec<u32>, key: &mut Vec<u32>, keys: &mut Vec<Vec<u32>>, outs: &mut Vec<Vec<u32>>) {
    if depth == layers.len() {
        keys.push(key.clone());
        outs.push(wires);
        return;
    }
    let l = &layers[depth];
    let ins = &wires[l.off..l.off + l.atom.dom];
    for &e in l.atom.by_in(ins) {
        let mut w = wires.clone();
        w.splice(l.off..l.off + l.atom.dom, l.atom.elems[e as usize].outs.iter().copied());
        key.push(e);
        dfs(layers, depth + 1, w, key, keys, outs);
        key.pop();
    }
}
