//! Bialgebras and bialgebroids given by structure constants over a graded basis.

use crate::bimonoid::Bimonoid;
use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::Frob;
use crate::map::Map;
use crate::linalg::{q, q_parse, q_to_string, Q};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A rational serialized as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Rat(pub Q);

impl TryFrom<String> for Rat {
    type Error = String;
    fn try_from(s: String) -> std::result::Result<Self, String> {
        q_parse(&s).map(Rat).ok_or_else(|| format!("{s:?} is not a rational of the form p/q"))
    }
}

impl From<Rat> for String {
    fn from(r: Rat) -> String {
        q_to_string(&r.0)
    }
}

/// Structure constants of a bialgebra(oid) on basis vectors graded by
/// `(source, target)` base points. Sparse lists of coefficients:
/// `mul` entries `(x, y, z, c)` mean `x·y` contains `c z`; `unit` entries
/// `(s, t, z, c)` mean the unit at grade `(s, t)` contains `c z`;
/// `comul` entries `(z, x, y, c)` mean `Δz` contains `c x⊗y`;
/// `counit` entries `(z, c)` mean `ε(z) = c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub grades: Vec<(u32, u32)>,
    pub mul: Vec<(usize, usize, usize, Rat)>,
    pub unit: Vec<(u32, u32, usize, Rat)>,
    pub comul: Vec<(usize, usize, usize, Rat)>,
    pub counit: Vec<(usize, Rat)>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    /// Ungraded data over `Q` with unit `unit_elem`.
    pub fn ungraded(dim: usize, unit_elem: usize, mul: Vec<(usize, usize, usize, Q)>, comul: Vec<(usize, usize, usize, Q)>, counit: Vec<(usize, Q)>) -> Self {
        let r = |v: Q| Rat(v);
        StructureConstants {
            grades: vec![(0, 0); dim],
            mul: mul.into_iter().map(|(a, b, c, v)| (a, b, c, r(v))).collect(),
            unit: vec![(0, 0, unit_elem, r(q(1)))],
            comul: comul.into_iter().map(|(a, b, c, v)| (a, b, c, r(v))).collect(),
            counit: counit.into_iter().map(|(a, v)| (a, r(v))).collect(),
        }
    }

    /// Wrap as a bimonoid, validating every axiom. Span contexts accept only
    /// constants that describe functions.
    pub fn bimonoid<M: Map>(&self, fr: &Frob<M>, name: &str) -> Result<Bimonoid<M>> {
        let n = self.dim();
        let check = |i: usize, what: &str| if i < n { Ok(()) } else { Err(Error::Invalid(format!("{what} names basis element {i} of {n}"))) };
        let mut mul: HashMap<(u32, u32, u32), Q> = HashMap::new();
        for (x, y, z, c) in &self.mul {
            for &i in [x, y, z] {
                check(i, "mul")?;
            }
            *mul.entry((*x as u32, *y as u32, *z as u32)).or_default() += &c.0;
        }
        let mut unit: HashMap<(u32, u32, u32), Q> = HashMap::new();
        for (s, t, z, c) in &self.unit {
            check(*z, "unit")?;
            *unit.entry((*s, *t, *z as u32)).or_default() += &c.0;
        }
        let mut comul: HashMap<(u32, u32, u32), Q> = HashMap::new();
        for (z, x, y, c) in &self.comul {
            for &i in [x, y, z] {
                check(i, "comul")?;
            }
            *comul.entry((*z as u32, *x as u32, *y as u32)).or_default() += &c.0;
        }
        let mut counit: HashMap<u32, Q> = HashMap::new();
        for (z, c) in &self.counit {
            check(*z, "counit")?;
            *counit.entry(*z as u32).or_default() += &c.0;
        }
        let atom = fr.endo_atom("a", &self.grades)?;
        let a = OneCell::atom(&atom);
        let mu = fr.cell_by(&fr.bullet(&a, &a)?, &a, |t, s| mul.get(&(s.user[0], s.user[1], t.user[0])).cloned())?;
        let eta = fr.cell_by(&fr.unit_j(), &a, |t, s| unit.get(&(s.input[0], s.out[0], t.user[0])).cloned())?;
        let delta = fr.cell_by(&a, &fr.circ(&a, &a)?, |t, s| comul.get(&(s.user[0], t.user[0], t.user[1])).cloned())?;
        let eps = fr.cell_by(&a, &fr.unit_i(), |_, s| counit.get(&s.user[0]).cloned())?;
        let b = Bimonoid { name: name.into(), a, mu, eta, delta, eps };
        fr.validate(&b)?;
        Ok(b)
    }
}

/// Group or monoid algebra `Q[G]` from a multiplication table with unit `0`.
pub fn monoid_algebra(table: &[Vec<usize>]) -> Result<StructureConstants> {
    let n = table.len();
    if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&z| z >= n)) {
        return Err(Error::Invalid("multiplication table must be square with entries in range".into()));
    }
    for x in 0..n {
        if table[0][x] != x || table[x][0] != x {
            return Err(Error::Axiom { axiom: "unit".into(), detail: format!("0 is not a unit at {x}") });
        }
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(Error::Axiom { axiom: "associativity".into(), detail: format!("triple ({x}, {y}, {z})") });
                }
            }
        }
    }
    let mul = (0..n).flat_map(|x| (0..n).map(move |y| (x, y, table[x][y], q(1)))).collect();
    let comul = (0..n).map(|x| (x, x, x, q(1))).collect();
    let counit = (0..n).map(|x| (x, q(1))).collect();
    Ok(StructureConstants::ungraded(n, 0, mul, comul, counit))
}

/// Multiplication table of `Z/n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect()
}

/// Multiplication table of `S3`, elements listed as permutations of `{0,1,2}`
/// in lexicographic order (so the identity is `0`); `x·y` applies `y` first.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|&r| r == p).expect("permutation");
    perms.iter().map(|x| perms.iter().map(|y| idx([x[y[0]], x[y[1]], x[y[2]]])).collect()).collect()
}

/// Inverse of each element in a group table with unit `0`.
pub fn group_inverses(table: &[Vec<usize>]) -> Option<Vec<usize>> {
    (0..table.len()).map(|x| (0..table.len()).find(|&y| table[x][y] == 0 && table[y][x] == 0)).collect()
}

/// The idempotent monoid `{1, e}`.
pub fn idempotent_table() -> Vec<Vec<usize>> {
    vec![vec![0, 1], vec![1, 1]]
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`
/// with `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler() -> StructureConstants {
    // basis words: (power of g, power of x)
    let words = [(0, 0), (1, 0), (0, 1), (1, 1)];
    let idx = |g: usize, x: usize| words.iter().position(|&w| w == (g % 2, x)).expect("word");
    let mut mul = Vec::new();
    for (i, &(g1, x1)) in words.iter().enumerate() {
        for (j, &(g2, x2)) in words.iter().enumerate() {
            if x1 + x2 > 1 {
                continue;
            }
            // g^g1 x^x1 g^g2 x^x2 = (-1)^(x1 g2) g^(g1+g2) x^(x1+x2)
            let sign = if x1 * g2 % 2 == 1 { -1 } else { 1 };
            mul.push((i, j, idx(g1 + g2, x1 + x2), q(sign)));
        }
    }
    // Δ(gx) = (g⊗g)(x⊗1 + g⊗x) = gx⊗g + 1⊗gx
    let comul = vec![(0, 0, 0, q(1)), (1, 1, 1, q(1)), (2, 2, 0, q(1)), (2, 1, 2, q(1)), (3, 3, 1, q(1)), (3, 0, 3, q(1))];
    let counit = vec![(0, q(1)), (1, q(1))];
    StructureConstants::ungraded(4, 0, mul, comul, counit)
}

/// The linearized category over the commutative base `Q^objects`.
pub fn linearized_category(c: &super::Category) -> StructureConstants {
    let r = |v: i64| Rat(q(v));
    let n = c.len();
    let legs = c.legs();
    StructureConstants {
        grades: legs.clone(),
        mul: (0..n).map(|f| (f, f, f, r(1))).collect(),
        unit: (0..n).map(|f| (legs[f].0, legs[f].1, f, r(1))).collect(),
        comul: (0..n).flat_map(|g| (0..n).filter_map(move |h| c.then(g, h).map(|f| (f, g, h, r(1))))).collect(),
        counit: c.data.identities.iter().map(|&e| (e, r(1))).collect(),
    }
}
