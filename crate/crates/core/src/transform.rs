//! Mixed algebras for the monad `T` and comonad `G` on `ℳ(M², M)`, and the
//! two-object transform category `𝒯ᶜᵦ` on the objects `GTx` and `GTy`.

use crate::bimonoid::{difference, Bimonoid};
use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob, Paste};
use crate::map::Map;
use serde::{Deserialize, Serialize};

/// A `∘`-comonoid.
#[derive(Clone, Debug)]
pub struct Comonoid<M: Map> {
    pub c: OneCell,
    pub delta: Cell<M>,
    pub eps: Cell<M>,
}

/// A `•`-monoid.
#[derive(Clone, Debug)]
pub struct Monoid<M: Map> {
    pub b: OneCell,
    pub mu: Cell<M>,
    pub eta: Cell<M>,
}

impl<M: Map> Bimonoid<M> {
    pub fn comonoid(&self) -> Comonoid<M> {
        Comonoid { c: self.a.clone(), delta: self.delta.clone(), eps: self.eps.clone() }
    }

    pub fn monoid(&self) -> Monoid<M> {
        Monoid { b: self.a.clone(), mu: self.mu.clone(), eta: self.eta.clone() }
    }
}

impl<M: Map> Frob<M> {
    /// `c • d` with comultiplication `ξ.(δ•δ)` and counit `ξ₀.(ε•ε)`.
    pub fn bullet_comonoid(&self, c: &Comonoid<M>, d: &Comonoid<M>) -> Result<Comonoid<M>> {
        let delta = self.vcomp(&self.bullet2(&c.delta, &d.delta)?, &self.xi(&c.c, &c.c, &d.c, &d.c)?)?;
        let eps = self.vcomp(&self.bullet2(&c.eps, &d.eps)?, &self.xi_sub0())?;
        Ok(Comonoid { c: self.bullet(&c.c, &d.c)?, delta, eps })
    }

    /// `a ∘ b` with multiplication `(μ∘μ).ξ` and unit `(η∘η).ξ⁰`.
    pub fn circ_monoid(&self, a: &Monoid<M>, b: &Monoid<M>) -> Result<Monoid<M>> {
        let mu = self.vcomp(&self.xi(&a.b, &b.b, &a.b, &b.b)?, &self.circ2(&a.mu, &b.mu)?)?;
        let eta = self.vcomp(&self.xi0()?, &self.circ2(&a.eta, &b.eta)?)?;
        Ok(Monoid { b: self.circ(&a.b, &b.b)?, mu, eta })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Obj {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomType {
    XX,
    XY,
    YX,
    YY,
}

impl HomType {
    pub fn new(src: Obj, tgt: Obj) -> HomType {
        match (src, tgt) {
            (Obj::X, Obj::X) => HomType::XX,
            (Obj::X, Obj::Y) => HomType::XY,
            (Obj::Y, Obj::X) => HomType::YX,
            (Obj::Y, Obj::Y) => HomType::YY,
        }
    }

    pub fn ends(self) -> (Obj, Obj) {
        match self {
            HomType::XX => (Obj::X, Obj::X),
            HomType::XY => (Obj::X, Obj::Y),
            HomType::YX => (Obj::Y, Obj::X),
            HomType::YY => (Obj::Y, Obj::Y),
        }
    }
}

/// A morphism of the transform category with its underlying 2-cell out of `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformMorphism<M> {
    pub hom_type: HomType,
    pub cell: Cell<M>,
}

/// The monad `T = m.(- ⊗ b).(1 ⊗ m*)` and comonad `G = - . (c ⊗ 1)` on `ℳ(M², M)`.
pub struct Mixed<'a, M: Map> {
    pub fr: &'a Frob<M>,
    pub c: Comonoid<M>,
    pub b: Monoid<M>,
}

impl<'a, M: Map> Mixed<'a, M> {
    pub fn new(fr: &'a Frob<M>, c: Comonoid<M>, b: Monoid<M>) -> Self {
        Mixed { fr, c, b }
    }

    pub fn of(fr: &'a Frob<M>, a: &Bimonoid<M>) -> Self {
        Mixed::new(fr, a.comonoid(), a.monoid())
    }

    /// `x = M u*`.
    pub fn x(&self) -> OneCell {
        self.fr.seq(2, "u*@1", &[]).expect("x")
    }

    /// `y = u.u*.m`.
    pub fn y(&self) -> OneCell {
        self.fr.seq(2, "m u* u", &[]).expect("y")
    }

    pub fn obj(&self, o: Obj) -> OneCell {
        match o {
            Obj::X => self.x(),
            Obj::Y => self.y(),
        }
    }

    pub fn g(&self, w: &OneCell) -> Result<OneCell> {
        self.fr.seq(2, "$0@0 $1@0", &[&self.c.c, w])
    }

    pub fn t(&self, w: &OneCell) -> Result<OneCell> {
        self.fr.seq(2, "m*@1 $0@0 $1@1 m@0", &[w, &self.b.b])
    }

    pub fn gt(&self, o: Obj) -> Result<OneCell> {
        self.g(&self.t(&self.obj(o))?)
    }

    /// `T` on a 2-cell between 1-cells `M² -> M`.
    pub fn t2(&self, f: &Cell<M>) -> Result<Cell<M>> {
        let post = self.fr.seq(2, "$0@1 m@0", &[&self.b.b])?;
        self.fr.whisker_at(&self.fr.seq(2, "m*@1", &[])?, 0, f, post.layers())
    }

    pub fn g2(&self, f: &Cell<M>) -> Result<Cell<M>> {
        self.fr.whisker_at(&self.fr.seq(2, "$0@0", &[&self.c.c])?, 0, f, &[])
    }

    /// Unit `w => Tw` of the monad.
    pub fn eta_t(&self, w: &OneCell) -> Result<Cell<M>> {
        let mid = self.fr.seq(2, "m*@1 $0@0 u*@1 u@1 m@0", &[w])?;
        Ok(Paste::new(self.fr, w).coh(&mid)?.apply_with(1 + w.len(), 1, &self.b.eta)?.finish())
    }

    /// Multiplication `TTz => Tz` of the monad.
    pub fn mu_t(&self, z: &OneCell) -> Result<Cell<M>> {
        let start = self.t(&self.t(z)?)?;
        let mid = self.fr.seq(2, "m*@1 $0@0 m*@1 $1@1 $1@2 m@1 m@0", &[z, &self.b.b])?;
        Ok(Paste::new(self.fr, &start).coh(&mid)?.apply_with(1 + z.len(), 1, &self.b.mu)?.finish())
    }

    /// Counit `Gw => w` of the comonad.
    pub fn eps_g(&self, w: &OneCell) -> Result<Cell<M>> {
        Ok(Paste::new(self.fr, &self.g(w)?).apply_with(0, 0, &self.c.eps)?.finish())
    }

    /// Comultiplication `Gw => GGw` of the comonad.
    pub fn delta_g(&self, w: &OneCell) -> Result<Cell<M>> {
        Ok(Paste::new(self.fr, &self.g(w)?).apply_with(0, 0, &self.c.delta)?.finish())
    }

    /// The `T`-action on `GTw`: `TGTw ≅ GTTw => GTw`.
    pub fn action(&self, w: &OneCell) -> Result<Cell<M>> {
        let tw = self.t(w)?;
        let ex = self.fr.interchange(&self.t(&self.g(&tw)?)?, &self.g(&self.t(&tw)?)?)?;
        self.fr.vcomp(&ex, &self.g2(&self.mu_t(w)?)?)
    }

    /// Whether `f : GTw => GTz` respects the action and the coaction.
    pub fn check_mixed(&self, f: &Cell<M>, w: Obj, z: Obj) -> Result<()> {
        let (w, z) = (self.obj(w), self.obj(z));
        let (gtw, gtz) = (self.g(&self.t(&w)?)?, self.g(&self.t(&z)?)?);
        if f.src != gtw || f.tgt != gtz {
            return Err(Error::NotMixed(format!("expected a cell `{gtw}` => `{gtz}`, found `{}` => `{}`", f.src, f.tgt)));
        }
        let lhs = self.fr.vcomp(&self.action(&w)?, f)?;
        let rhs = self.fr.vcomp(&self.t2(f)?, &self.action(&z)?)?;
        if let Some(d) = difference(&lhs, &rhs) {
            return Err(Error::NotMixed(format!("not a T-algebra morphism: {d}")));
        }
        let lhs = self.fr.vcomp(f, &self.delta_g(&self.t(&z)?)?)?;
        let rhs = self.fr.vcomp(&self.delta_g(&self.t(&w)?)?, &self.g2(f)?)?;
        if let Some(d) = difference(&lhs, &rhs) {
            return Err(Error::NotMixed(format!("not a G-coalgebra morphism: {d}")));
        }
        Ok(())
    }

    pub fn is_mixed(&self, f: &Cell<M>, w: Obj, z: Obj) -> bool {
        self.check_mixed(f, w, z).is_ok()
    }

    /// The correspondent `Gw => Tz` of a mixed morphism `GTw => GTz`.
    fn prime(&self, f: &Cell<M>, w: &OneCell, z: &OneCell) -> Result<Cell<M>> {
        let gw = self.g(w)?;
        let unit = self.eta_t(&gw)?;
        let ex = self.fr.interchange(&unit.tgt, &self.g(&self.t(w)?)?)?;
        self.fr.chain(&[&unit, &ex, f, &self.eps_g(&self.t(z)?)?])
    }

    /// The mixed morphism `GTw => GTz` determined by `f' : Gw => Tz`.
    fn unprime(&self, fp: &Cell<M>, w: &OneCell, z: &OneCell) -> Result<Cell<M>> {
        let gtw = self.g(&self.t(w)?)?;
        let ex = self.fr.interchange(&gtw, &self.t(&self.g(w)?)?)?;
        let h = self.fr.chain(&[&ex, &self.t2(fp)?, &self.mu_t(z)?])?;
        let pre = self.fr.seq(2, "$0@0", &[&self.c.c])?;
        self.fr.vcomp(&self.delta_g(&self.t(w)?)?, &self.fr.whisker_at(&pre, 0, &h, &[])?)
    }

    /// The target of a transform morphism of the given type.
    pub fn target(&self, h: HomType) -> Result<OneCell> {
        let fr = self.fr;
        let b = &self.b.b;
        match h {
            HomType::XX => fr.bullet(&fr.unit_i(), &fr.circ(&fr.unit_j(), b)?),
            HomType::XY => Ok(b.clone()),
            HomType::YX => fr.minus(b),
            HomType::YY => fr.bullet(&fr.circ(b, &fr.unit_j())?, &fr.unit_i()),
        }
    }

    /// Intermediate shape `c => P` through which each transform factors.
    fn pre_target(&self, src: Obj, tz: &OneCell) -> Result<OneCell> {
        match src {
            Obj::X => self.fr.seq(1, "u@1 $0@0", &[tz]),
            Obj::Y => self.fr.seq(1, "u@1 m*@1 $0@0 u*@0", &[tz]),
        }
    }

    pub fn transform(&self, f: &Cell<M>, src: Obj, tgt: Obj) -> Result<TransformMorphism<M>> {
        self.check_mixed(f, src, tgt)?;
        self.transform_unchecked(f, src, tgt)
    }

    pub fn transform_unchecked(&self, f: &Cell<M>, src: Obj, tgt: Obj) -> Result<TransformMorphism<M>> {
        let fr = self.fr;
        let (w, z) = (self.obj(src), self.obj(tgt));
        let fp = self.prime(f, &w, &z)?;
        let c = &self.c.c;
        let tz = self.t(&z)?;
        let hom_type = HomType::new(src, tgt);
        let target = self.target(hom_type)?;
        let cell = match src {
            Obj::X => {
                let mid = fr.seq(1, "u@1 $0@0 u*@1", &[c])?;
                let wf = fr.whisker_at(&fr.seq(1, "u@1", &[])?, 0, &fp, &[])?;
                Paste::new(fr, c).apply_with(0, 1, &fr.gens().eta_u)?.reorder(&mid)?.then(&wf)?.coh(&target)?.finish()
            }
            Obj::Y => {
                let k = fr.seq(2, "$0@0 m@0 u*@0", &[c])?;
                let us = fr.seq(1, "u*@0", &[])?;
                let tau = Paste::new(fr, &k).apply_with(k.len(), 0, &fr.gens().eta_u)?.then(&fr.whisker_at(&OneCell::id(2), 0, &fp, us.layers())?)?.finish();
                let start = fr.seq(1, "u@1 m*@1 $0@0 m@0 u*@0", &[c])?;
                let wt = fr.whisker_at(&fr.seq(1, "u@1 m*@1", &[])?, 0, &tau, &[])?;
                debug_assert_eq!(wt.tgt, self.pre_target(Obj::Y, &tz)?);
                Paste::new(fr, c).coh(&start)?.then(&wt)?.coh(&target)?.finish()
            }
        };
        Ok(TransformMorphism { hom_type, cell })
    }

    /// Inverse of `transform`.
    pub fn untransform(&self, t: &TransformMorphism<M>) -> Result<Cell<M>> {
        let fr = self.fr;
        let (src, tgt) = t.hom_type.ends();
        let (w, z) = (self.obj(src), self.obj(tgt));
        let target = self.target(t.hom_type)?;
        if t.cell.src != self.c.c || t.cell.tgt != target {
            return Err(Error::Shape(format!("a {:?} morphism must be `{}` => `{target}`", t.hom_type, self.c.c)));
        }
        let tz = self.t(&z)?;
        let p = self.pre_target(src, &tz)?;
        let g = fr.vcomp(&t.cell, &fr.coh(&target, &p)?)?;
        let fp = match src {
            Obj::X => {
                let gx = self.g(&w)?;
                let swapped = fr.seq(2, "u*@1 $0@0", &[&self.c.c])?;
                let wg = fr.whisker_at(&fr.seq(2, "u*@1", &[])?, 0, &g, &[])?;
                Paste::new(fr, &gx).reorder(&swapped)?.then(&wg)?.apply_with(0, 1, &fr.gens().eps_u)?.finish()
            }
            Obj::Y => {
                let post = fr.seq(1, "m@0 u*@0", &[])?;
                let tail = fr.seq(2, "$0@0 u*@0", &[&tz])?;
                let tau = Paste::from_cell(fr, fr.whisker_at(&OneCell::id(2), 0, &g, post.layers())?).coh(&tail)?.finish();
                let u = fr.seq(0, "u", &[])?;
                let wt = fr.whisker_at(&OneCell::id(2), 0, &tau, u.layers())?;
                let pos = wt.tgt.len() - 2;
                Paste::from_cell(fr, wt).apply_with(pos, 0, &fr.gens().eps_u)?.finish()
            }
        };
        if fp.src != self.g(&w)? {
            return Err(Error::Coherence(format!("untransform produced a cell out of `{}`", fp.src)));
        }
        self.unprime(&fp, &w, &z)
    }

    /// The identity of `X` or `Y` in `𝒯`, through `ε`, `ξ⁰` and `η`.
    pub fn identity(&self, o: Obj) -> Result<TransformMorphism<M>> {
        let fr = self.fr;
        let (i, j) = (fr.unit_i(), fr.unit_j());
        let (idi, idj) = (fr.id2(&i), fr.id2(&j));
        let (hom_type, steps) = match o {
            Obj::X => {
                let ij = fr.bullet(&i, &j)?;
                (HomType::XX, vec![fr.coh(&i, &ij)?, fr.bullet2(&idi, &fr.xi0()?)?, fr.bullet2(&idi, &fr.circ2(&idj, &self.b.eta)?)?])
            }
            Obj::Y => {
                let ji = fr.bullet(&j, &i)?;
                (HomType::YY, vec![fr.coh(&i, &ji)?, fr.bullet2(&fr.xi0()?, &idi)?, fr.bullet2(&fr.circ2(&self.b.eta, &idj)?, &idi)?])
            }
        };
        let mut cell = self.c.eps.clone();
        for s in &steps {
            cell = fr.vcomp(&cell, s)?;
        }
        Ok(TransformMorphism { hom_type, cell })
    }

    /// Composite `s` then `t` for `s : X -> Y`, `t : Y -> X` or the reverse,
    /// via `δ`, `φ` or `ψ`, and `μ`.
    pub fn compose_cross(&self, s: &TransformMorphism<M>, t: &TransformMorphism<M>) -> Result<TransformMorphism<M>> {
        let fr = self.fr;
        let b = &self.b.b;
        let (i, j) = (fr.unit_i(), fr.unit_j());
        let (idi, idj) = (fr.id2(&i), fr.id2(&j));
        match (s.hom_type, t.hom_type) {
            (HomType::YX, HomType::XY) => {
                let cell = fr.chain(&[&self.c.delta, &fr.circ2(&t.cell, &s.cell)?, &fr.phi(b, b)?, &fr.bullet2(&fr.circ2(&self.b.mu, &idj)?, &idi)?])?;
                Ok(TransformMorphism { hom_type: HomType::YY, cell })
            }
            (HomType::XY, HomType::YX) => {
                let cell = fr.chain(&[&self.c.delta, &fr.circ2(&t.cell, &s.cell)?, &fr.psi(b, b)?, &fr.bullet2(&idi, &fr.circ2(&idj, &self.b.mu)?)?])?;
                Ok(TransformMorphism { hom_type: HomType::XX, cell })
            }
            (x, y) => Err(Error::Invalid(format!("cross composite needs types XY and YX, found {x:?} and {y:?}"))),
        }
    }

    /// General composite `s` then `t`, computed among mixed morphisms.
    pub fn compose(&self, s: &TransformMorphism<M>, t: &TransformMorphism<M>) -> Result<TransformMorphism<M>> {
        let (a, b1) = s.hom_type.ends();
        let (b2, c) = t.hom_type.ends();
        if b1 != b2 {
            return Err(Error::Composition { left: format!("{:?}", s.hom_type), right: format!("{:?}", t.hom_type), detail: "objects do not match".into() });
        }
        let f = self.fr.vcomp(&self.untransform(s)?, &self.untransform(t)?)?;
        self.transform_unchecked(&f, a, c)
    }

    /// `β̂` seen as a mixed morphism `GTx => GTy`.
    pub fn hopf_mixed(&self, beta: &Cell<M>) -> Result<Cell<M>> {
        let fr = self.fr;
        let (gtx, gty) = (self.gt(Obj::X)?, self.gt(Obj::Y)?);
        fr.chain(&[&fr.coh(&gtx, &beta.src)?, beta, &fr.coh(&beta.tgt, &gty)?])
    }
}
