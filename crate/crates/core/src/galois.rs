//! Modules and comodules of a bimonoid, Galois and co-Galois maps, the
//! comparison functors into Hopf modules, and the trivial/cotrivial
//! equivalence between `j`-comodules and `i`-modules.

use crate::bimonoid::{require_eq, Bimonoid};
use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob};
use crate::map::Map;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// A `•`-action: `q • a => q` (right) or `a • q => q` (left).
#[derive(Clone, Debug)]
pub struct Module<M: Map> {
    pub q: OneCell,
    pub action: Cell<M>,
    pub side: Side,
}

/// A `∘`-coaction: `p => p ∘ a` (right) or `p => a ∘ p` (left).
#[derive(Clone, Debug)]
pub struct Comodule<M: Map> {
    pub p: OneCell,
    pub coaction: Cell<M>,
    pub side: Side,
}

/// An object of the category of right `a`-modules in right `a`-comodules.
#[derive(Clone, Debug)]
pub struct HopfModule<M: Map> {
    pub h: OneCell,
    pub action: Cell<M>,
    pub coaction: Cell<M>,
}

fn sided(side: Side, x: &OneCell, a: &OneCell) -> (OneCell, OneCell) {
    match side {
        Side::Right => (x.clone(), a.clone()),
        Side::Left => (a.clone(), x.clone()),
    }
}

impl<M: Map> Frob<M> {
    fn side_bullet(&self, side: Side, x: &OneCell, a: &OneCell) -> Result<OneCell> {
        let (l, r) = sided(side, x, a);
        self.bullet(&l, &r)
    }

    fn side_circ(&self, side: Side, x: &OneCell, a: &OneCell) -> Result<OneCell> {
        let (l, r) = sided(side, x, a);
        self.circ(&l, &r)
    }

    fn side_bullet2(&self, side: Side, x: &Cell<M>, a: &Cell<M>) -> Result<Cell<M>> {
        match side {
            Side::Right => self.bullet2(x, a),
            Side::Left => self.bullet2(a, x),
        }
    }

    fn side_circ2(&self, side: Side, x: &Cell<M>, a: &Cell<M>) -> Result<Cell<M>> {
        match side {
            Side::Right => self.circ2(x, a),
            Side::Left => self.circ2(a, x),
        }
    }

    /// Check associativity and unitality of an action.
    pub fn validate_module(&self, b: &Bimonoid<M>, md: &Module<M>) -> Result<()> {
        let (q, a, s) = (&md.q, &b.a, md.side);
        let qa = self.side_bullet(s, q, a)?;
        if md.action.src != qa || &md.action.tgt != q {
            return Err(Error::Shape(format!("action must be `{qa}` => `{q}`")));
        }
        let (idq, ida) = (self.id2(q), self.id2(a));
        let twice = self.chain(&[&self.side_bullet2(s, &md.action, &ida)?, &md.action])?;
        let via_mu = self.chain(&[
            &self.coh(&twice.src, &self.side_bullet(s, q, &self.bullet(a, a)?)?)?,
            &self.side_bullet2(s, &idq, &b.mu)?,
            &md.action,
        ])?;
        require_eq("module associativity", &twice, &via_mu)?;
        let unit = self.side_bullet2(s, &idq, &b.eta)?;
        let unit = self.chain(&[&self.coh(q, &unit.src)?, &unit, &md.action])?;
        require_eq("module unit", &unit, &idq)
    }

    /// Check coassociativity and counitality of a coaction.
    pub fn validate_comodule(&self, b: &Bimonoid<M>, cm: &Comodule<M>) -> Result<()> {
        let (p, a, s) = (&cm.p, &b.a, cm.side);
        let pa = self.side_circ(s, p, a)?;
        if &cm.coaction.src != p || cm.coaction.tgt != pa {
            return Err(Error::Shape(format!("coaction must be `{p}` => `{pa}`")));
        }
        let (idp, ida) = (self.id2(p), self.id2(a));
        let twice = self.vcomp(&cm.coaction, &self.side_circ2(s, &cm.coaction, &ida)?)?;
        let via_delta = self.vcomp(&cm.coaction, &self.side_circ2(s, &idp, &b.delta)?)?;
        require_eq("comodule coassociativity", &twice, &via_delta)?;
        let counit = self.vcomp(&cm.coaction, &self.side_circ2(s, &idp, &b.eps)?)?;
        let back = self.coh(&counit.tgt, p)?;
        require_eq("comodule counit", &self.vcomp(&counit, &back)?, &idp)
    }

    /// The free module `x • a` (right) or `a • x` (left).
    pub fn free_module(&self, b: &Bimonoid<M>, x: &OneCell, side: Side) -> Result<Module<M>> {
        let a = &b.a;
        let q = self.side_bullet(side, x, a)?;
        let src = self.side_bullet(side, &q, a)?;
        let assoc = self.coh(&src, &self.side_bullet(side, x, &self.bullet(a, a)?)?)?;
        let action = self.vcomp(&assoc, &self.side_bullet2(side, &self.id2(x), &b.mu)?)?;
        Ok(Module { q, action, side })
    }

    /// The cofree comodule `y ∘ a` (right) or `a ∘ y` (left).
    pub fn cofree_comodule(&self, b: &Bimonoid<M>, y: &OneCell, side: Side) -> Result<Comodule<M>> {
        let p = self.side_circ(side, y, &b.a)?;
        let coaction = self.side_circ2(side, &self.id2(y), &b.delta)?;
        Ok(Comodule { p, coaction, side })
    }

    /// `a` as a right module over itself.
    pub fn regular_module(&self, b: &Bimonoid<M>) -> Module<M> {
        Module { q: b.a.clone(), action: b.mu.clone(), side: Side::Right }
    }

    /// `a` as a right comodule over itself.
    pub fn regular_comodule(&self, b: &Bimonoid<M>) -> Comodule<M> {
        Comodule { p: b.a.clone(), coaction: b.delta.clone(), side: Side::Right }
    }

    /// The Galois map `β_{q,x} : (q∘x)•a => q∘(x•a)` of a right module.
    pub fn galois_map(&self, b: &Bimonoid<M>, md: &Module<M>, x: &OneCell) -> Result<Cell<M>> {
        if md.side != Side::Right {
            return Err(Error::Invalid("Galois maps need a right module".into()));
        }
        let (q, a) = (&md.q, &b.a);
        let qx = self.circ(q, x)?;
        self.chain(&[
            &self.bullet2(&self.id2(&qx), &b.delta)?,
            &self.xi(q, x, a, a)?,
            &self.circ2(&md.action, &self.id2(&self.bullet(x, a)?))?,
        ])
    }

    /// The co-Galois map `ζ_{p,x} : p•(x∘a) => (p•x)∘a` of a right comodule.
    pub fn cogalois_map(&self, b: &Bimonoid<M>, cm: &Comodule<M>, x: &OneCell) -> Result<Cell<M>> {
        if cm.side != Side::Right {
            return Err(Error::Invalid("co-Galois maps need a right comodule".into()));
        }
        let (p, a) = (&cm.p, &b.a);
        let xa = self.circ(x, a)?;
        self.chain(&[
            &self.bullet2(&cm.coaction, &self.id2(&xa))?,
            &self.xi(p, a, x, a)?,
            &self.circ2(&self.id2(&self.bullet(p, x)?), &b.mu)?,
        ])
    }

    /// `p•(x∘q) => (p•x)∘q` for a left module `q` and a right comodule `p`.
    pub fn can_left(&self, b: &Bimonoid<M>, md: &Module<M>, cm: &Comodule<M>, x: &OneCell) -> Result<Cell<M>> {
        if md.side != Side::Left || cm.side != Side::Right {
            return Err(Error::Invalid("can_left needs a left module and a right comodule".into()));
        }
        let (p, q, a) = (&cm.p, &md.q, &b.a);
        self.chain(&[
            &self.bullet2(&cm.coaction, &self.id2(&self.circ(x, q)?))?,
            &self.xi(p, a, x, q)?,
            &self.circ2(&self.id2(&self.bullet(p, x)?), &md.action)?,
        ])
    }

    /// `(q∘x)•p => q∘(x•p)` for a right module `q` and a left comodule `p`.
    pub fn can_right(&self, b: &Bimonoid<M>, md: &Module<M>, cm: &Comodule<M>, x: &OneCell) -> Result<Cell<M>> {
        if md.side != Side::Right || cm.side != Side::Left {
            return Err(Error::Invalid("can_right needs a right module and a left comodule".into()));
        }
        let (p, q, a) = (&cm.p, &md.q, &b.a);
        self.chain(&[
            &self.bullet2(&self.id2(&self.circ(q, x)?), &cm.coaction)?,
            &self.xi(q, x, a, p)?,
            &self.circ2(&md.action, &self.id2(&self.bullet(x, p)?))?,
        ])
    }

    /// The action of `h ∘ a` induced from a right action on `h`: the tensor
    /// product of modules `h` and `a`.
    fn circ_a_action(&self, b: &Bimonoid<M>, h: &OneCell, action: &Cell<M>) -> Result<Cell<M>> {
        let a = &b.a;
        let ha = self.circ(h, a)?;
        self.chain(&[
            &self.bullet2(&self.id2(&ha), &b.delta)?,
            &self.xi(h, a, a, a)?,
            &self.circ2(action, &b.mu)?,
        ])
    }

    /// Check a Hopf module: a right module, a right comodule, and the
    /// coaction a module morphism into `h ∘ a`.
    pub fn validate_hopf_module(&self, b: &Bimonoid<M>, hm: &HopfModule<M>) -> Result<()> {
        self.validate_module(b, &Module { q: hm.h.clone(), action: hm.action.clone(), side: Side::Right })?;
        self.validate_comodule(b, &Comodule { p: hm.h.clone(), coaction: hm.coaction.clone(), side: Side::Right })?;
        let lhs = self.vcomp(&hm.action, &hm.coaction)?;
        let rhs = self.vcomp(&self.bullet2(&hm.coaction, &self.id2(&b.a))?, &self.circ_a_action(b, &hm.h, &hm.action)?)?;
        require_eq("coaction is a module morphism", &lhs, &rhs)
    }

    /// `K(p) = p • a` for a right `j`-comodule `p`.
    pub fn comparison_k(&self, b: &Bimonoid<M>, p: &OneCell, rho: &Cell<M>) -> Result<HopfModule<M>> {
        let j = self.unit_j();
        let a = &b.a;
        let pj = self.circ(p, &j)?;
        if &rho.src != p || rho.tgt != pj {
            return Err(Error::Shape(format!("a j-coaction on `{p}` must land in `{pj}`")));
        }
        let free = self.free_module(b, p, Side::Right)?;
        let h = free.q;
        let mixed = self.chain(&[&self.bullet2(rho, &b.delta)?, &self.xi(p, &j, a, a)?])?;
        let coaction = self.vcomp(&mixed, &self.coh(&mixed.tgt, &self.circ(&h, a)?)?)?;
        Ok(HopfModule { h, action: free.action, coaction })
    }

    /// `K'(q) = q ∘ a` for a right `i`-module `q`.
    pub fn comparison_k_prime(&self, b: &Bimonoid<M>, q: &OneCell, gamma: &Cell<M>) -> Result<HopfModule<M>> {
        let i = self.unit_i();
        let a = &b.a;
        let qi = self.bullet(q, &i)?;
        if gamma.src != qi || &gamma.tgt != q {
            return Err(Error::Shape(format!("an i-action on `{q}` must start at `{qi}`")));
        }
        let cofree = self.cofree_comodule(b, q, Side::Right)?;
        let h = cofree.p;
        let src = self.bullet(&h, a)?;
        let action = self.chain(&[
            &self.coh(&src, &self.bullet(&h, &self.circ(&i, a)?)?)?,
            &self.xi(q, a, &i, a)?,
            &self.circ2(gamma, &b.mu)?,
        ])?;
        Ok(HopfModule { h, action, coaction: cofree.coaction })
    }

    /// Unit of `FV ⊣ GU` at the cofree `j`-comodule `x ∘ j`:
    /// `x∘j => x∘j∘j ≅ ((x∘j)•j)∘j => ((x∘j)•i)∘j`.
    pub fn trivial_unit_at(&self, x: &OneCell) -> Result<Cell<M>> {
        let (i, j) = (self.unit_i(), self.unit_j());
        let xj = self.circ(x, &j)?;
        let grow = self.circ2(&self.id2(x), &self.xi0()?)?;
        let xjj = self.circ(&self.bullet(&xj, &j)?, &j)?;
        let shrink = self.circ2(&self.bullet2(&self.id2(&xj), &self.xi00())?, &self.id2(&j))?;
        debug_assert_eq!(shrink.tgt, self.circ(&self.bullet(&xj, &i)?, &j)?);
        self.chain(&[&grow, &self.coh(&grow.tgt, &xjj)?, &shrink])
    }

    /// Counit of `FV ⊣ GU` at the free `i`-module `x • i`:
    /// `((x•i)∘j)•i => ((x•i)∘i)•i ≅ x•i•i => x•i`.
    pub fn trivial_counit_at(&self, x: &OneCell) -> Result<Cell<M>> {
        let (i, j) = (self.unit_i(), self.unit_j());
        let xi = self.bullet(x, &i)?;
        let first = self.bullet2(&self.circ2(&self.id2(&xi), &self.xi00())?, &self.id2(&i))?;
        debug_assert_eq!(first.src, self.bullet(&self.circ(&xi, &j)?, &i)?);
        let last = self.bullet2(&self.id2(x), &self.xi_sub0())?;
        self.chain(&[&first, &self.coh(&first.tgt, &last.src)?, &last])
    }

    /// The cofree `j`-comodule `x ∘ j` with coaction `1 ∘ ξ⁰`.
    pub fn cofree_j_comodule(&self, x: &OneCell) -> Result<(OneCell, Cell<M>)> {
        let j = self.unit_j();
        Ok((self.circ(x, &j)?, self.circ2(&self.id2(x), &self.xi0()?)?))
    }

    /// Tensor product of right `j`-comodules: `ρ•ρ' ; ξ ; 1∘(j•j ≅ j)`.
    pub fn j_comodule_tensor(&self, p: (&OneCell, &Cell<M>), p2: (&OneCell, &Cell<M>)) -> Result<(OneCell, Cell<M>)> {
        let j = self.unit_j();
        let pp = self.bullet(p.0, p2.0)?;
        let mu_j = self.coh(&self.bullet(&j, &j)?, &j)?;
        let coaction = self.chain(&[&self.bullet2(p.1, p2.1)?, &self.xi(p.0, &j, p2.0, &j)?, &self.circ2(&self.id2(&pp), &mu_j)?])?;
        Ok((pp, coaction))
    }

    /// The binary cell of the monoidal structure on `FV`:
    /// `p•p'•i => (p∘j)•p'•i ≅ (p∘j)•(i∘(p'•i)) => (p•i)∘(p'•i)`.
    pub fn trivial_binary_cell(&self, p: (&OneCell, &Cell<M>), p2: &OneCell) -> Result<Cell<M>> {
        let (i, j) = (self.unit_i(), self.unit_j());
        let p2i = self.bullet(p2, &i)?;
        let start = self.bullet(&self.bullet(p.0, p2)?, &i)?;
        let pj = self.circ(p.0, &j)?;
        let lift = self.bullet2(p.1, &self.id2(&p2i))?;
        let to_xi = self.bullet(&pj, &self.circ(&i, &p2i)?)?;
        let xi = self.xi(p.0, &j, &i, &p2i)?;
        let end = self.circ(&self.bullet(p.0, &i)?, &p2i)?;
        self.chain(&[&self.coh(&start, &lift.src)?, &lift, &self.coh(&lift.tgt, &to_xi)?, &xi, &self.coh(&xi.tgt, &end)?])
    }

    /// Associativity of the binary cell on `(p, p', p'')`: both ways from
    /// `F(p•p'•p'')` to `F p ∘ F p' ∘ F p''` agree.
    pub fn trivial_binary_assoc(&self, p: (&OneCell, &Cell<M>), p2: (&OneCell, &Cell<M>), p3: (&OneCell, &Cell<M>)) -> Result<()> {
        let i = self.unit_i();
        let f = |x: &OneCell| self.bullet(x, &i);
        let (p23, _) = self.j_comodule_tensor(p2, p3)?;
        let (p12, rho12) = self.j_comodule_tensor(p, p2)?;
        let right = self.chain(&[
            &self.trivial_binary_cell(p, &p23)?,
            &self.circ2(&self.id2(&f(p.0)?), &self.trivial_binary_cell(p2, p3.0)?)?,
        ])?;
        let left = self.vcomp(&self.trivial_binary_cell((&p12, &rho12), p3.0)?, &self.circ2(&self.trivial_binary_cell(p, p2.0)?, &self.id2(&f(p3.0)?))?)?;
        let left = self.vcomp(&self.coh(&right.src, &left.src)?, &left)?;
        let left = self.vcomp(&left, &self.coh(&left.tgt, &right.tgt)?)?;
        require_eq("associativity of the binary cell", &left, &right)
    }
}
