//! Self-duality of a naturally Frobenius map-monoidale: the mates `f⁻`, `f⁺`
//! and the cells comparing the duoidal structure with its dual.

use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob, Paste};
use crate::map::Map;

/// Correspondence for `coh_perm` when the target lists blocks of user layers in
/// the order `order` (indices into the source block list).
pub fn block_perm(sizes: &[usize], order: &[usize]) -> Vec<usize> {
    let mut start = vec![0; sizes.len()];
    for i in 1..sizes.len() {
        start[i] = start[i - 1] + sizes[i - 1];
    }
    order.iter().flat_map(|&b| start[b]..start[b] + sizes[b]).collect()
}

pub fn user_count(f: &OneCell) -> usize {
    f.user_atoms().len()
}

impl<M: Map> Frob<M> {
    /// The mate `f⁻ : M^q -> M^p` of `f : M^p -> M^q`; for endo-cells this is
    /// `u*1 . m1 . 1f1 . 1m* . 1u`.
    pub fn minus(&self, f: &OneCell) -> Result<OneCell> {
        let (p, q) = (f.dom(), f.cod());
        let mut spec = String::new();
        for i in 0..p {
            spec += &format!("u@{k} m*@{k} ", k = q + i);
        }
        spec += &format!("$0@{q} ");
        for i in 0..q {
            spec += &format!("m@{k} u*@{k} ", k = q - 1 - i);
        }
        self.seq(q, &spec, &[f])
    }

    /// The mate `f⁺ = 1u* . 1m . 1f1 . m*1 . u1` of an endo-cell.
    pub fn plus(&self, f: &OneCell) -> Result<OneCell> {
        if f.dom() != 1 || f.cod() != 1 {
            return Err(Error::Arity(format!("`{f}` is not an endo-1-cell of M")));
        }
        self.seq(1, "u@0 m*@0 $0@1 m@1 u*@1", &[f])
    }

    /// `θ⁻ : f⁻ => g⁻`, covariant in `θ : f => g`.
    pub fn minus2(&self, t: &Cell<M>) -> Result<Cell<M>> {
        let start = self.minus(&t.src)?;
        Ok(Paste::new(self, &start).apply_with(2 * t.src.dom(), t.src.cod(), t)?.finish())
    }

    pub fn plus2(&self, t: &Cell<M>) -> Result<Cell<M>> {
        let start = self.plus(&t.src)?;
        Ok(Paste::new(self, &start).apply_with(2, 1, t)?.finish())
    }

    /// `(f⁻)⁺ ≅ f`.
    pub fn roundtrip(&self, f: &OneCell) -> Result<Cell<M>> {
        self.coh(&self.plus(&self.minus(f)?)?, f)
    }

    /// `(f⁺)⁻ ≅ f`.
    pub fn roundtrip_plus(&self, f: &OneCell) -> Result<Cell<M>> {
        self.coh(&self.minus(&self.plus(f)?)?, f)
    }

    /// `Ξ_{f,g} : g⁻ ∘ f⁻ => (f∘g)⁻`.
    pub fn xi_dual(&self, f: &OneCell, g: &OneCell) -> Result<Cell<M>> {
        let src = self.circ(&self.minus(g)?, &self.minus(f)?)?;
        let mid = self.seq(1, "u@1 m*@1 $0@1 u@1 m*@1 m@2 u*@2 $1@1 m@0 u*@0", &[f, g])?;
        let pos = 3 + f.len();
        let tgt = self.minus(&self.circ(f, g)?)?;
        Ok(Paste::new(self, &src).reorder(&mid)?.apply_with(pos, 1, &self.gens().pi_p)?.coh(&tgt)?.finish())
    }

    /// `Ξ₀ : i => i⁻`.
    pub fn xi0_dual(&self) -> Result<Cell<M>> {
        let mid = self.seq(1, "u@1 m@0 m*@0 u*@0", &[])?;
        let tgt = self.minus(&self.unit_i())?;
        let c = Paste::new(self, &self.unit_i()).coh(&mid)?.apply_with(1, 0, &self.gens().pi_inv)?.finish();
        debug_assert_eq!(c.tgt, tgt);
        Ok(c)
    }

    /// `Υ_{f,g} : g⁻ • f⁻ => (f•g)⁻`.
    pub fn upsilon(&self, f: &OneCell, g: &OneCell) -> Result<Cell<M>> {
        let src = self.bullet(&self.minus(g)?, &self.minus(f)?)?;
        let r2 = self.seq(1, "u@1 m*@1 $0@1 m*@0 m@1 u*@1 u@1 m*@1 m@2 $1@1 m@0 u*@0", &[f, g])?;
        let perm = block_perm(&[user_count(g), user_count(f)], &[1, 0]);
        let tgt = self.minus(&self.bullet(f, g)?)?;
        let lf = f.len();
        Ok(Paste::new(self, &src)
            .coh_perm(&r2, &perm)?
            .apply_with(2 + lf, 0, &self.gens().pi_p)?
            .apply_with(6 + lf, 1, &self.gens().pi_p)?
            .coh(&tgt)?
            .finish())
    }

    /// `Υ₀ : j => j⁻`.
    pub fn upsilon0(&self) -> Result<Cell<M>> {
        self.coh(&self.unit_j(), &self.minus(&self.unit_j())?)
    }

    /// `χ : m*⁻ => m`.
    pub fn chi(&self) -> Result<Cell<M>> {
        self.coh(&self.minus(&self.mscell())?, &self.mcell())
    }

    /// `φ_{f,g} : f ∘ g⁻ => ((f•g)∘j)•i`.
    pub fn phi(&self, f: &OneCell, g: &OneCell) -> Result<Cell<M>> {
        let src = self.circ(f, &self.minus(g)?)?;
        let mid = self.seq(1, "u@1 m*@1 $0@0 $1@1 m@0 u*@0", &[f, g])?;
        let tgt = self.phi_target(f, g)?;
        Ok(Paste::new(self, &src).reorder(&mid)?.apply_with(1, 0, &self.gens().eta_m)?.coh(&tgt)?.finish())
    }

    pub fn phi_target(&self, f: &OneCell, g: &OneCell) -> Result<OneCell> {
        self.bullet(&self.circ(&self.bullet(f, g)?, &self.unit_j())?, &self.unit_i())
    }

    /// `ψ_{f,g} : f⁻ ∘ g => i•(j∘(f•g))`.
    pub fn psi(&self, f: &OneCell, g: &OneCell) -> Result<Cell<M>> {
        let src = self.circ(&self.minus(f)?, g)?;
        let mid = self.seq(1, "u@1 m*@1 $0@1 $1@2 m@0 u*@0", &[f, g])?;
        let tgt = self.psi_target(f, g)?;
        let pos = 3 + f.len() + g.len();
        Ok(Paste::new(self, &src).reorder(&mid)?.apply_with(pos, 0, &self.gens().eta_m)?.coh(&tgt)?.finish())
    }

    pub fn psi_target(&self, f: &OneCell, g: &OneCell) -> Result<OneCell> {
        self.bullet(&self.unit_i(), &self.circ(&self.unit_j(), &self.bullet(f, g)?)?)
    }

    /// `ϑ_{f,g,h} : f ∘ ((g∘j)•i) ∘ h⁻ => ((f•h)∘g∘j)•i`.
    pub fn theta(&self, f: &OneCell, g: &OneCell, h: &OneCell) -> Result<Cell<M>> {
        let src = self.theta_source(f, g, h)?;
        let q = self.seq(1, "m* u*@1 u@1 m*@1 $0@0 m*@0 $2@2 m@1 u*@1 $1@0 u*@0 u@0 m", &[f, g, h])?;
        let perm = block_perm(&[user_count(f), user_count(g), user_count(h)], &[0, 2, 1]);
        let mid = self.seq(1, "m* m*@1 $0@0 $2@1 m*@0 m@1 u*@1 $1@0 u*@0 u@0 m", &[f, g, h])?;
        let tgt = self.theta_target(f, g, h)?;
        let (lf, lh) = (f.len(), h.len());
        Ok(Paste::new(self, &src)
            .coh_perm(&q, &perm)?
            .apply_with(1, 1, &self.gens().eps_u)?
            .reorder(&mid)?
            .apply_with(2 + lf + lh, 0, &self.gens().pi_p)?
            .coh(&tgt)?
            .finish())
    }

    pub fn theta_source(&self, f: &OneCell, g: &OneCell, h: &OneCell) -> Result<OneCell> {
        let mid = self.bullet(&self.circ(g, &self.unit_j())?, &self.unit_i())?;
        self.circ_all(&[f, &mid, &self.minus(h)?])
    }

    pub fn theta_target(&self, f: &OneCell, g: &OneCell, h: &OneCell) -> Result<OneCell> {
        let inner = self.circ_all(&[&self.bullet(f, h)?, g, &self.unit_j()])?;
        self.bullet(&inner, &self.unit_i())
    }
}
