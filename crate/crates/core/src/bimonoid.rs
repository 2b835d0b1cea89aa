//! Bimonoids in the duoidal hom-category: monoidal comonads on `M`.

use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob, Paste};
use crate::linalg::q_to_string;
use crate::map::Map;

/// A `•`-monoid and `∘`-comonoid `a` with compatible structure.
#[derive(Clone, Debug)]
pub struct Bimonoid<M: Map> {
    pub name: String,
    pub a: OneCell,
    /// `a • a => a`
    pub mu: Cell<M>,
    /// `j => a`
    pub eta: Cell<M>,
    /// `a => a ∘ a`
    pub delta: Cell<M>,
    /// `a => i`
    pub eps: Cell<M>,
}

/// First entry where two parallel cells differ, or `None` when equal.
pub fn difference<M: Map>(x: &Cell<M>, y: &Cell<M>) -> Option<String> {
    if x.src != y.src || x.tgt != y.tgt {
        return Some(format!("boundaries differ: `{}` => `{}` vs `{}` => `{}`", x.src, x.tgt, y.src, y.tgt));
    }
    if x.map == y.map {
        return None;
    }
    let (p, q) = (x.map.to_qmat(), y.map.to_qmat());
    for (t, s) in p.entries().map(|(t, s, _)| (t, s)).chain(q.entries().map(|(t, s, _)| (t, s))) {
        let (u, v) = (p.get(t, s), q.get(t, s));
        if u != v {
            return Some(format!("entry (target {t}, source {s}) is {} vs {}", q_to_string(&u), q_to_string(&v)));
        }
    }
    Some("payloads differ".into())
}

/// `Ok` when equal, otherwise an axiom error naming `what`.
pub fn require_eq<M: Map>(what: &str, x: &Cell<M>, y: &Cell<M>) -> Result<()> {
    match difference(x, y) {
        None => Ok(()),
        Some(detail) => Err(Error::Axiom { axiom: what.into(), detail }),
    }
}

impl<M: Map> Frob<M> {
    /// Check every bimonoid axiom exactly.
    pub fn validate(&self, b: &Bimonoid<M>) -> Result<()> {
        let a = &b.a;
        let aa = self.bullet(a, a)?;
        let expect = |c: &Cell<M>, src: &OneCell, tgt: &OneCell, what: &str| -> Result<()> {
            if &c.src != src || &c.tgt != tgt {
                return Err(Error::Shape(format!("{what} must be `{src}` => `{tgt}`, found `{}` => `{}`", c.src, c.tgt)));
            }
            Ok(())
        };
        expect(&b.mu, &aa, a, "mu")?;
        expect(&b.eta, &self.unit_j(), a, "eta")?;
        expect(&b.delta, a, &self.circ(a, a)?, "delta")?;
        expect(&b.eps, a, &self.unit_i(), "eps")?;
        let ida = self.id2(a);

        let left = self.chain(&[&self.bullet2(&b.mu, &ida)?, &b.mu])?;
        let assoc = self.coh(&left.src, &self.bullet(a, &aa)?)?;
        let right = self.chain(&[&assoc, &self.bullet2(&ida, &b.mu)?, &b.mu])?;
        require_eq("associativity of mu", &left, &right)?;

        let lu = self.bullet2(&b.eta, &ida)?;
        let lu = self.vcomp(&lu, &b.mu)?;
        require_eq("left unit of mu", &lu, &self.coh(&lu.src, a)?)?;
        let ru = self.vcomp(&self.bullet2(&ida, &b.eta)?, &b.mu)?;
        require_eq("right unit of mu", &ru, &self.coh(&ru.src, a)?)?;

        let c1 = self.vcomp(&b.delta, &self.circ2(&b.delta, &ida)?)?;
        let c2 = self.vcomp(&b.delta, &self.circ2(&ida, &b.delta)?)?;
        require_eq("coassociativity of delta", &c1, &c2)?;
        require_eq("left counit of delta", &self.vcomp(&b.delta, &self.circ2(&b.eps, &ida)?)?, &ida)?;
        require_eq("right counit of delta", &self.vcomp(&b.delta, &self.circ2(&ida, &b.eps)?)?, &ida)?;

        let dm = self.vcomp(&b.mu, &b.delta)?;
        let other = self.chain(&[&self.bullet2(&b.delta, &b.delta)?, &self.xi(a, a, a, a)?, &self.circ2(&b.mu, &b.mu)?])?;
        require_eq("delta.mu = (mu∘mu).xi.(delta•delta)", &dm, &other)?;
        let de = self.vcomp(&b.eta, &b.delta)?;
        let other = self.vcomp(&self.xi0()?, &self.circ2(&b.eta, &b.eta)?)?;
        require_eq("delta.eta = (eta∘eta).xi0", &de, &other)?;
        let em = self.vcomp(&b.mu, &b.eps)?;
        let other = self.vcomp(&self.bullet2(&b.eps, &b.eps)?, &self.xi_sub0())?;
        require_eq("eps.mu = xi_0.(eps•eps)", &em, &other)?;
        require_eq("eps.eta = xi00", &self.vcomp(&b.eta, &b.eps)?, &self.xi00())?;
        Ok(())
    }

    /// `a₂ : m.aa => a.m`.
    pub fn a_lower2(&self, b: &Bimonoid<M>) -> Result<Cell<M>> {
        let start = self.seq(2, "$0@0 $0@1 m", &[&b.a])?;
        Ok(Paste::new(self, &start).apply_with(0, 0, &self.gens().eta_m)?.apply_with(1, 0, &b.mu)?.finish())
    }

    /// `a² : aa.m* => m*.a`.
    pub fn a_upper2(&self, b: &Bimonoid<M>) -> Result<Cell<M>> {
        let start = self.seq(1, "m* $0@0 $0@1", &[&b.a])?;
        let pos = start.len();
        Ok(Paste::new(self, &start).apply_with(pos, 0, &self.gens().eta_m)?.apply_with(0, 0, &b.mu)?.finish())
    }

    /// `a₀ : u => a.u`.
    pub fn a_lower0(&self, b: &Bimonoid<M>) -> Result<Cell<M>> {
        Ok(Paste::new(self, &self.ucell()).apply_with(0, 0, &self.gens().eta_u)?.apply_with(1, 0, &b.eta)?.finish())
    }

    /// `a⁰ : u* => u*.a`.
    pub fn a_upper0(&self, b: &Bimonoid<M>) -> Result<Cell<M>> {
        Ok(Paste::new(self, &self.uscell()).apply_with(1, 0, &self.gens().eta_u)?.apply_with(0, 0, &b.eta)?.finish())
    }

    /// The Hopf map `β̂ : m.aa => a.m.a1`: `δ` on the left factor, then `a₂`.
    pub fn hopf_map(&self, b: &Bimonoid<M>) -> Result<Cell<M>> {
        let start = self.seq(2, "$0@0 $0@1 m", &[&b.a])?;
        let a2 = self.a_lower2(b)?;
        Ok(Paste::new(self, &start).apply_with(0, 0, &b.delta)?.apply_with(b.a.len(), 0, &a2)?.finish())
    }

    /// The co-Hopf map `ζ̂ : aa.m* => 1a.m*.a`: `δ` on the right factor, then `a²`.
    pub fn cohopf_map(&self, b: &Bimonoid<M>) -> Result<Cell<M>> {
        let start = self.seq(1, "m* $0@0 $0@1", &[&b.a])?;
        let a2 = self.a_upper2(b)?;
        let pos = 1 + b.a.len();
        Ok(Paste::new(self, &start).apply_with(pos, 1, &b.delta)?.apply_with(0, 0, &a2)?.finish())
    }

    /// The `∘`-trivial bialgebra `i`.
    pub fn trivial_i(&self) -> Bimonoid<M> {
        let i = self.unit_i();
        Bimonoid {
            name: "i".into(),
            a: i.clone(),
            mu: self.xi_sub0(),
            eta: self.xi00(),
            delta: self.id2(&i),
            eps: self.id2(&i),
        }
    }

    /// The `•`-trivial bialgebra `j`.
    pub fn trivial_j(&self) -> Result<Bimonoid<M>> {
        let j = self.unit_j();
        Ok(Bimonoid {
            name: "j".into(),
            mu: self.coh(&self.bullet(&j, &j)?, &j)?,
            eta: self.id2(&j),
            delta: self.xi0()?,
            eps: self.xi00(),
            a: j,
        })
    }
}
