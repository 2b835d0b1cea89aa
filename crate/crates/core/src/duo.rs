//! The duoidal structure on endo-1-cells of `M`: composition `∘` with unit
//! `i`, convolution `•` with unit `j`, and the interchange cells.

use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob, Paste};
use crate::map::Map;

fn endo(f: &OneCell) -> Result<()> {
    if f.dom() == 1 && f.cod() == 1 {
        Ok(())
    } else {
        Err(Error::Arity(format!("`{f}` is not an endo-1-cell of M")))
    }
}

impl<M: Map> Frob<M> {
    pub fn unit_i(&self) -> OneCell {
        OneCell::id(1)
    }

    pub fn unit_j(&self) -> OneCell {
        self.seq(1, "u* u", &[]).expect("j is well formed")
    }

    /// `f ∘ g`: first `f`, then `g`.
    pub fn circ(&self, f: &OneCell, g: &OneCell) -> Result<OneCell> {
        endo(f)?;
        endo(g)?;
        f.then(g)
    }

    /// `f • g = m.(fg).m*`.
    pub fn bullet(&self, f: &OneCell, g: &OneCell) -> Result<OneCell> {
        endo(f)?;
        endo(g)?;
        self.seq(1, "m* $0@0 $1@1 m", &[f, g])
    }

    pub fn circ_all(&self, fs: &[&OneCell]) -> Result<OneCell> {
        let mut acc = self.unit_i();
        for f in fs {
            acc = self.circ(&acc, f)?;
        }
        Ok(acc)
    }

    /// Left-nested convolution product `((f0 • f1) • f2) ...`.
    pub fn bullet_all(&self, fs: &[&OneCell]) -> Result<OneCell> {
        let (first, rest) = fs.split_first().ok_or_else(|| Error::Invalid("empty product".into()))?;
        let mut acc = (*first).clone();
        for f in rest {
            acc = self.bullet(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn circ2(&self, a: &Cell<M>, b: &Cell<M>) -> Result<Cell<M>> {
        self.hcomp(a, b)
    }

    pub fn bullet2(&self, a: &Cell<M>, b: &Cell<M>) -> Result<Cell<M>> {
        let start = self.bullet(&a.src, &b.src)?;
        let pos_b = 1 + a.tgt.len();
        Ok(Paste::new(self, &start).apply_with(1, 0, a)?.apply_with(pos_b, 1, b)?.finish())
    }

    /// `ξ : (w∘x)•(y∘z) => (w•y)∘(x•z)`.
    pub fn xi(&self, w: &OneCell, x: &OneCell, y: &OneCell, z: &OneCell) -> Result<Cell<M>> {
        let src = self.bullet(&self.circ(w, x)?, &self.circ(y, z)?)?;
        let mid = self.seq(1, "m* $0@0 $1@1 $2@0 $3@1 m", &[w, y, x, z])?;
        let pos = 1 + w.len() + y.len();
        let c = Paste::new(self, &src).reorder(&mid)?.apply_with(pos, 0, &self.gens().eta_m)?.finish();
        debug_assert_eq!(c.tgt, self.circ(&self.bullet(w, y)?, &self.bullet(x, z)?)?);
        Ok(c)
    }

    /// `ξ⁰ : j => j∘j`.
    pub fn xi0(&self) -> Result<Cell<M>> {
        Ok(Paste::new(self, &self.unit_j()).apply_with(1, 0, &self.gens().eta_u)?.finish())
    }

    /// `ξ₀ : i•i => i`.
    pub fn xi_sub0(&self) -> Cell<M> {
        self.gens().eps_m.clone()
    }

    /// `ξ⁰₀ : j => i`.
    pub fn xi00(&self) -> Cell<M> {
        self.gens().eps_u.clone()
    }
}
