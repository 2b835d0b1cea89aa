//! Finite categories as bimonoids: the arrow span with composition as
//! comultiplication and identities as counit.

use crate::bimonoid::Bimonoid;
use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::Frob;
use crate::map::Map;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// A finite category given by an explicit composition table. An entry
/// `[f, g, h]` says that `f` followed by `g` is `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCategory {
    pub objects: usize,
    pub arrows: Vec<Arrow>,
    pub identities: Vec<usize>,
    pub compose: Vec<[usize; 3]>,
}

/// A validated category with a composition lookup.
#[derive(Clone, Debug)]
pub struct Category {
    pub data: FiniteCategory,
    table: HashMap<(usize, usize), usize>,
}

impl FiniteCategory {
    pub fn validate(self) -> Result<Category> {
        let n = self.arrows.len();
        let bad = |m: String| Err(Error::Invalid(m));
        if self.identities.len() != self.objects {
            return bad(format!("{} identities for {} objects", self.identities.len(), self.objects));
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.src >= self.objects || a.tgt >= self.objects {
                return bad(format!("arrow {i} has an endpoint outside the {} objects", self.objects));
            }
        }
        for (x, &e) in self.identities.iter().enumerate() {
            if e >= n || self.arrows[e].src != x || self.arrows[e].tgt != x {
                return bad(format!("identity of object {x} is not a loop on {x}"));
            }
        }
        let mut table = HashMap::new();
        for &[f, g, h] in &self.compose {
            if f >= n || g >= n || h >= n {
                return bad(format!("composition entry [{f}, {g}, {h}] names a missing arrow"));
            }
            if self.arrows[f].tgt != self.arrows[g].src {
                return bad(format!("composition entry [{f}, {g}, {h}]: {f} and {g} are not composable"));
            }
            if self.arrows[h].src != self.arrows[f].src || self.arrows[h].tgt != self.arrows[g].tgt {
                return bad(format!("composition entry [{f}, {g}, {h}]: {h} has the wrong endpoints"));
            }
            if table.insert((f, g), h).is_some_and(|old| old != h) {
                return bad(format!("arrows {f} and {g} have two composites"));
            }
        }
        for f in 0..n {
            for g in 0..n {
                if self.arrows[f].tgt == self.arrows[g].src && !table.contains_key(&(f, g)) {
                    return bad(format!("missing composite of {f} then {g}"));
                }
            }
        }
        let c = Category { data: self, table };
        for f in 0..n {
            let a = &c.data.arrows[f];
            if c.then(c.data.identities[a.src], f) != Some(f) || c.then(f, c.data.identities[a.tgt]) != Some(f) {
                return bad(format!("unit law fails at arrow {f}"));
            }
        }
        for f in 0..n {
            for g in c.out_of(c.data.arrows[f].tgt) {
                let fg = c.table[&(f, g)];
                for h in c.out_of(c.data.arrows[g].tgt) {
                    if c.table[&(fg, h)] != c.table[&(f, c.table[&(g, h)])] {
                        return Err(Error::Axiom { axiom: "associativity".into(), detail: format!("triple ({f}, {g}, {h})") });
                    }
                }
            }
        }
        Ok(c)
    }
}

impl Category {
    pub fn len(&self) -> usize {
        self.data.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.arrows.is_empty()
    }

    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        self.table.get(&(f, g)).copied()
    }

    pub fn out_of(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.data.arrows[g].src == x).collect()
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.data.identities.contains(&f)
    }

    /// A two-sided inverse of `f`, by exhaustive search.
    pub fn inverse_of(&self, f: usize) -> Option<usize> {
        let a = &self.data.arrows[f];
        (0..self.len()).find(|&g| {
            self.then(f, g) == Some(self.data.identities[a.src]) && self.then(g, f) == Some(self.data.identities[a.tgt])
        })
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.len()).all(|f| self.inverse_of(f).is_some())
    }

    /// Arrow legs as `(source, target)` pairs.
    pub fn legs(&self) -> Vec<(u32, u32)> {
        self.data.arrows.iter().map(|a| (a.src as u32, a.tgt as u32)).collect()
    }

    pub fn discrete(objects: usize) -> Category {
        let arrows = (0..objects).map(|x| Arrow { src: x, tgt: x, name: None }).collect();
        let compose = (0..objects).map(|x| [x, x, x]).collect();
        FiniteCategory { objects, arrows, identities: (0..objects).collect(), compose }.validate().expect("discrete category")
    }

    /// `0 -> 1` with its two identities.
    pub fn walking_arrow() -> Category {
        let arrows = vec![
            Arrow { src: 0, tgt: 0, name: Some("id0".into()) },
            Arrow { src: 1, tgt: 1, name: Some("id1".into()) },
            Arrow { src: 0, tgt: 1, name: Some("f".into()) },
        ];
        let compose = vec![[0, 0, 0], [1, 1, 1], [0, 2, 2], [2, 1, 2]];
        FiniteCategory { objects: 2, arrows, identities: vec![0, 1], compose }.validate().expect("walking arrow")
    }

    /// The one-object category of a monoid with multiplication `table[x][y] = x·y`
    /// and unit `0`; composition `f` then `g` is `g·f` so that a group gives a groupoid.
    pub fn one_object(table: &[Vec<usize>]) -> Result<Category> {
        let n = table.len();
        let arrows = (0..n).map(|_| Arrow { src: 0, tgt: 0, name: None }).collect();
        let mut compose = Vec::new();
        for f in 0..n {
            for g in 0..n {
                compose.push([f, g, table[g][f]]);
            }
        }
        FiniteCategory { objects: 1, arrows, identities: vec![0], compose }.validate()
    }

    /// The cyclic monoid generated by `t` with `t^(index+period) = t^index`.
    pub fn cyclic_monoid(index: usize, period: usize) -> Result<Category> {
        let n = index + period;
        let reduce = |k: usize| if k < n { k } else { index + (k - index) % period };
        let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| reduce(x + y)).collect()).collect();
        Category::one_object(&table)
    }

    /// The thin category on `objects` with an arrow `x -> y` exactly when `y`
    /// is reachable from `x` along `edges`: the quotient of the free category
    /// on the graph identifying parallel paths.
    pub fn thin(objects: usize, edges: &[(usize, usize)]) -> Result<Category> {
        let mut reach = vec![vec![false; objects]; objects];
        for (x, row) in reach.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in edges {
            reach[x][y] = true;
        }
        for k in 0..objects {
            for x in 0..objects {
                for y in 0..objects {
                    if reach[x][k] && reach[k][y] {
                        reach[x][y] = true;
                    }
                }
            }
        }
        let mut arrows = Vec::new();
        let mut id = HashMap::new();
        for x in 0..objects {
            for y in 0..objects {
                if reach[x][y] {
                    id.insert((x, y), arrows.len());
                    arrows.push(Arrow { src: x, tgt: y, name: None });
                }
            }
        }
        let mut compose = Vec::new();
        for (&(x, y), &f) in &id {
            for z in 0..objects {
                if let Some(&g) = id.get(&(y, z)) {
                    compose.push([f, g, id[&(x, z)]]);
                }
            }
        }
        compose.sort();
        let identities = (0..objects).map(|x| id[&(x, x)]).collect();
        FiniteCategory { objects, arrows, identities, compose }.validate()
    }

    /// The free category on an acyclic graph: arrows are paths.
    pub fn free_acyclic(objects: usize, edges: &[(usize, usize)]) -> Result<Category> {
        let mut paths: Vec<Vec<usize>> = (0..objects).map(|_| Vec::new()).collect();
        let mut ends: Vec<(usize, usize)> = (0..objects).map(|x| (x, x)).collect();
        let mut frontier: Vec<usize> = (0..objects).collect();
        while let Some(p) = frontier.pop() {
            for (e, &(x, y)) in edges.iter().enumerate() {
                if x == ends[p].1 {
                    let mut q = paths[p].clone();
                    q.push(e);
                    if q.len() > edges.len() {
                        return Err(Error::Invalid("graph has a cycle".into()));
                    }
                    paths.push(q);
                    ends.push((ends[p].0, y));
                    frontier.push(paths.len() - 1);
                }
            }
        }
        let index: HashMap<(usize, Vec<usize>), usize> = paths.iter().enumerate().map(|(i, p)| ((ends[i].0, p.clone()), i)).collect();
        let mut compose = Vec::new();
        for f in 0..paths.len() {
            for g in 0..paths.len() {
                if ends[f].1 == ends[g].0 {
                    let mut q = paths[f].clone();
                    q.extend(&paths[g]);
                    compose.push([f, g, index[&(ends[f].0, q)]]);
                }
            }
        }
        let arrows = ends.iter().map(|&(x, y)| Arrow { src: x, tgt: y, name: None }).collect();
        FiniteCategory { objects, arrows, identities: (0..objects).collect(), compose }.validate()
    }

    /// The groupoid with `objects` isomorphic objects and vertex group `Z/order`.
    pub fn cyclic_groupoid(objects: usize, order: usize) -> Result<Category> {
        let idx = |x: usize, y: usize, k: usize| (x * objects + y) * order + k;
        let mut arrows = Vec::new();
        for x in 0..objects {
            for y in 0..objects {
                for _ in 0..order {
                    arrows.push(Arrow { src: x, tgt: y, name: None });
                }
            }
        }
        let mut compose = Vec::new();
        for x in 0..objects {
            for y in 0..objects {
                for z in 0..objects {
                    for k in 0..order {
                        for l in 0..order {
                            compose.push([idx(x, y, k), idx(y, z, l), idx(x, z, (k + l) % order)]);
                        }
                    }
                }
            }
        }
        FiniteCategory { objects, arrows, identities: (0..objects).map(|x| idx(x, x, 0)).collect(), compose }.validate()
    }

    /// Disjoint union.
    pub fn sum(&self, other: &Category) -> Category {
        let (n, k) = (self.data.objects, self.len());
        let mut arrows = self.data.arrows.clone();
        arrows.extend(other.data.arrows.iter().map(|a| Arrow { src: a.src + n, tgt: a.tgt + n, name: a.name.clone() }));
        let mut identities = self.data.identities.clone();
        identities.extend(other.data.identities.iter().map(|&e| e + k));
        let mut compose = self.data.compose.clone();
        compose.extend(other.data.compose.iter().map(|&[f, g, h]| [f + k, g + k, h + k]));
        FiniteCategory { objects: n + other.data.objects, arrows, identities, compose }.validate().expect("sum of categories")
    }

    /// A random category with at most `max_objects` objects and `max_arrows` arrows.
    pub fn random<R: Rng>(rng: &mut R, max_objects: usize, max_arrows: usize) -> Category {
        loop {
            let c = match rng.gen_range(0..6) {
                0 => {
                    let n = rng.gen_range(1..=max_objects);
                    let edges = random_edges(rng, n, true);
                    Category::thin(n, &edges)
                }
                1 => {
                    let n = rng.gen_range(1..=max_objects);
                    let edges = random_edges(rng, n, false);
                    Category::free_acyclic(n, &edges)
                }
                2 => Category::cyclic_monoid(rng.gen_range(0..3), rng.gen_range(1..5)),
                3 => Category::cyclic_groupoid(rng.gen_range(1..=2.min(max_objects)), rng.gen_range(1..4)),
                4 if max_arrows >= 2 => {
                    let a = Category::random(rng, (max_objects / 2).max(1), max_arrows / 2);
                    let b = Category::random(rng, (max_objects / 2).max(1), max_arrows / 2);
                    Ok(a.sum(&b))
                }
                _ => Ok(Category::discrete(rng.gen_range(1..=max_objects))),
            };
            if let Ok(c) = c {
                if c.data.objects <= max_objects && c.len() <= max_arrows && !c.is_empty() {
                    return c;
                }
            }
        }
    }

    /// Build the arrow-span bimonoid: `δ` is composition, `ε` picks identities,
    /// and the convolution structure is diagonal.
    pub fn bimonoid<M: Map>(&self, fr: &Frob<M>) -> Result<Bimonoid<M>> {
        if fr.base() != self.data.objects {
            return Err(Error::Invalid(format!("a category on {} objects needs a base of that size, not {}", self.data.objects, fr.base())));
        }
        let atom = fr.endo_atom("a", &self.legs())?;
        let a = OneCell::atom(&atom);
        let (aa, a_a) = (fr.bullet(&a, &a)?, fr.circ(&a, &a)?);
        let one = || Some(crate::linalg::Q::one());
        let mu = fr.cell_by(&aa, &a, |t, s| (s.user[0] == t.user[0] && s.user[1] == t.user[0]).then(one).flatten())?;
        let eta = fr.cell_by(&fr.unit_j(), &a, |_, _| one())?;
        let delta = fr.cell_by(&a, &a_a, |t, s| (self.then(t.user[0] as usize, t.user[1] as usize) == Some(s.user[0] as usize)).then(one).flatten())?;
        let eps = fr.cell_by(&a, &fr.unit_i(), |_, s| self.is_identity(s.user[0] as usize).then(one).flatten())?;
        let b = Bimonoid { name: "category".into(), a, mu, eta, delta, eps };
        fr.validate(&b)?;
        Ok(b)
    }
}

fn random_edges<R: Rng>(rng: &mut R, n: usize, cycles: bool) -> Vec<(usize, usize)> {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| if cycles { x != y } else { x < y }).collect();
    all.shuffle(rng);
    let k = rng.gen_range(0..=all.len().min(4));
    let set: BTreeSet<_> = all.into_iter().take(k).collect();
    set.into_iter().collect()
}
