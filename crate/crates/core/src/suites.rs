//! Diagram suites. Every check evaluates both paths of a diagram exactly,
//! inserting canonical comparisons where the paths differ only in bracketing.

use crate::antipode::Antipode;
use crate::bimonoid::{require_eq, Bimonoid};
use crate::cell::OneCell;
use crate::dualizer::{block_perm, user_count};
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob, Paste, Preset};
use crate::linalg::QMat;
use crate::map::{FnMap, Map};
use crate::models::random::{default_cap, random_endo, random_two_cell};
use crate::models::spec::corpus;
use crate::transform::{Comonoid, HomType, Mixed, Monoid, Obj, TransformMorphism};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest carrier of the random cells fed to the four-argument diagrams.
pub const DIAGRAM_CELL_MAX: usize = 3;

/// An inverse pair `σ : c -> b`, `σ' : c -> b⁻` in `𝒯ᶜᵦ`.
#[derive(Clone, Debug)]
pub struct TransformPair<M: Map> {
    pub c: Comonoid<M>,
    pub b: Monoid<M>,
    pub sigma: Cell<M>,
    pub sigma_inv: Cell<M>,
}

impl<M: Map> Frob<M> {
    /// Vertical composite that bridges any boundary mismatch with the
    /// canonical comparison.
    pub fn glue(&self, cells: &[&Cell<M>]) -> Result<Cell<M>> {
        let (first, rest) = cells.split_first().ok_or_else(|| Error::Invalid("nothing to glue".into()))?;
        let mut acc = (*first).clone();
        for c in rest {
            if acc.tgt != c.src {
                acc = self.vcomp(&acc, &self.coh(&acc.tgt, &c.src)?)?;
            }
            acc = self.vcomp(&acc, c)?;
        }
        Ok(acc)
    }

    /// `x` followed by the comparison into `tgt`.
    fn land(&self, x: Cell<M>, tgt: &OneCell) -> Result<Cell<M>> {
        if &x.tgt == tgt {
            Ok(x)
        } else {
            self.vcomp(&x, &self.coh(&x.tgt, tgt)?)
        }
    }

    pub fn triangle_identities(&self) -> Result<()> {
        let g = self.gens();
        let m = self.mcell();
        let t = Paste::new(self, &m).apply_with(0, 0, &g.eta_m)?.apply_with(1, 0, &g.eps_m)?.finish();
        require_eq("m triangle", &t, &self.id2(&m))?;
        let ms = self.mscell();
        let t = Paste::new(self, &ms).apply_with(1, 0, &g.eta_m)?.apply_with(0, 0, &g.eps_m)?.finish();
        require_eq("m* triangle", &t, &self.id2(&ms))?;
        let u = self.ucell();
        let t = Paste::new(self, &u).apply_with(0, 0, &g.eta_u)?.apply_with(1, 0, &g.eps_u)?.finish();
        require_eq("u triangle", &t, &self.id2(&u))?;
        let us = self.uscell();
        let t = Paste::new(self, &us).apply_with(1, 0, &g.eta_u)?.apply_with(0, 0, &g.eps_u)?.finish();
        require_eq("u* triangle", &t, &self.id2(&us))
    }

    /// `π` and `π′` agree with the leg-matching bijections and are invertible.
    pub fn pi_checks(&self) -> Result<()> {
        let g = self.gens();
        require_eq("pi against its direct form", &g.pi, &self.pi_direct()?)?;
        require_eq("pi' against its direct form", &g.pi_p, &self.pi_prime_direct()?)?;
        for (name, c, inv) in [("pi", &g.pi, &g.pi_inv), ("pi'", &g.pi_p, &g.pi_p_inv)] {
            require_eq(&format!("{name} inverse"), &self.invert(c)?, inv)?;
            require_eq(&format!("{name} then inverse"), &self.vcomp(c, inv)?, &self.id2(&c.src))?;
        }
        Ok(())
    }

    /// Associativity and unit compatibilities of the interchange `ξ`.
    pub fn xi_coherence(&self, w: &OneCell, x: &OneCell, y: &OneCell, z: &OneCell, s: &OneCell, t: &OneCell) -> Result<()> {
        let circ = |p: &OneCell, q: &OneCell| self.circ(p, q);
        let bul = |p: &OneCell, q: &OneCell| self.bullet(p, q);
        // convolution associativity
        let left = self.glue(&[
            &self.bullet2(&self.xi(w, x, y, z)?, &self.id2(&circ(s, t)?))?,
            &self.xi(&bul(w, y)?, &bul(x, z)?, s, t)?,
        ])?;
        let src = self.bullet(&circ(w, x)?, &self.bullet(&circ(y, z)?, &circ(s, t)?)?)?;
        let right = self.glue(&[
            &self.coh(&left.src, &src)?,
            &self.bullet2(&self.id2(&circ(w, x)?), &self.xi(y, z, s, t)?)?,
            &self.xi(w, x, &bul(y, s)?, &bul(z, t)?)?,
        ])?;
        require_eq("xi and convolution associativity", &left, &self.land(right, &left.tgt)?)?;
        // composition associativity
        let l = self.chain(&[&self.xi(w, &circ(x, s)?, y, &circ(z, t)?)?, &self.circ2(&self.id2(&bul(w, y)?), &self.xi(x, s, z, t)?)?])?;
        let r = self.chain(&[&self.xi(&circ(w, x)?, s, &circ(y, z)?, t)?, &self.circ2(&self.xi(w, x, y, z)?, &self.id2(&bul(s, t)?))?])?;
        require_eq("xi and composition associativity", &l, &r)?;
        // unit i
        let i = self.unit_i();
        let l = self.glue(&[&self.xi(&i, w, &i, x)?, &self.circ2(&self.xi_sub0(), &self.id2(&bul(w, x)?))?])?;
        require_eq("xi and the unit i", &l, &self.id2(&bul(w, x)?))?;
        // unit j
        let j = self.unit_j();
        let wx = circ(w, x)?;
        let l = self.glue(&[&self.bullet2(&self.id2(&wx), &self.xi0()?)?, &self.xi(w, x, &j, &j)?])?;
        let l = self.land(l, &wx)?;
        require_eq("xi and the unit j", &l, &self.coh(&self.bullet(&wx, &j)?, &wx)?)
    }

    /// `(f⁻)⁺ ≅ f` and `(f⁺)⁻ ≅ f` are invertible and natural in `α : f => f'`.
    pub fn roundtrip_check(&self, alpha: &Cell<M>) -> Result<()> {
        let (f, f2) = (&alpha.src, &alpha.tgt);
        for r in [self.roundtrip(f)?, self.roundtrip_plus(f)?] {
            self.invert(&r)?;
        }
        let l = self.vcomp(&self.plus2(&self.minus2(alpha)?)?, &self.roundtrip(f2)?)?;
        let r = self.vcomp(&self.roundtrip(f)?, alpha)?;
        require_eq("roundtrip naturality", &l, &r)?;
        let l = self.vcomp(&self.minus2(&self.plus2(alpha)?)?, &self.roundtrip_plus(f2)?)?;
        let r = self.vcomp(&self.roundtrip_plus(f)?, alpha)?;
        require_eq("roundtrip_plus naturality", &l, &r)
    }

    /// Naturality of `φ`, `ψ` and `ϑ` in each argument along `α : f => f'`.
    pub fn naturality_check(&self, alpha: &Cell<M>, g: &OneCell, h: &OneCell) -> Result<()> {
        let (f, f2) = (&alpha.src, &alpha.tgt);
        let a_m = self.minus2(alpha)?;
        let (idi, idj, idg, idh) = (self.id2(&self.unit_i()), self.id2(&self.unit_j()), self.id2(g), self.id2(h));
        let post_phi = |x: &Cell<M>| self.bullet2(&self.circ2(x, &idj)?, &idi);
        let post_psi = |x: &Cell<M>| self.bullet2(&idi, &self.circ2(&idj, x)?);
        let mg = self.id2(&self.minus(g)?);

        let l = self.vcomp(&self.circ2(alpha, &mg)?, &self.phi(f2, g)?)?;
        let r = self.vcomp(&self.phi(f, g)?, &post_phi(&self.bullet2(alpha, &idg)?)?)?;
        require_eq("phi natural in its first argument", &l, &r)?;
        let l = self.vcomp(&self.circ2(&idg, &a_m)?, &self.phi(g, f2)?)?;
        let r = self.vcomp(&self.phi(g, f)?, &post_phi(&self.bullet2(&idg, alpha)?)?)?;
        require_eq("phi natural in its second argument", &l, &r)?;

        let l = self.vcomp(&self.circ2(&a_m, &idg)?, &self.psi(f2, g)?)?;
        let r = self.vcomp(&self.psi(f, g)?, &post_psi(&self.bullet2(alpha, &idg)?)?)?;
        require_eq("psi natural in its first argument", &l, &r)?;
        let l = self.vcomp(&self.circ2(&mg, alpha)?, &self.psi(g, f2)?)?;
        let r = self.vcomp(&self.psi(g, f)?, &post_psi(&self.bullet2(&idg, alpha)?)?)?;
        require_eq("psi natural in its second argument", &l, &r)?;

        let mid = |x: &OneCell| self.bullet(&self.circ(x, &self.unit_j())?, &self.unit_i());
        let mid2 = |x: &Cell<M>| self.bullet2(&self.circ2(x, &idj)?, &idi);
        let mh = self.id2(&self.minus(h)?);
        // first slot
        let l = self.vcomp(&self.circ2(&self.circ2(alpha, &self.id2(&mid(g)?))?, &mh)?, &self.theta(f2, g, h)?)?;
        let r = self.vcomp(&self.theta(f, g, h)?, &mid2(&self.circ2(&self.bullet2(alpha, &idh)?, &idg)?)?)?;
        require_eq("theta natural in its first argument", &l, &r)?;
        // middle slot
        let l = self.vcomp(&self.circ2(&self.circ2(&self.id2(g), &mid2(alpha)?)?, &mh)?, &self.theta(g, f2, h)?)?;
        let r = self.vcomp(&self.theta(g, f, h)?, &mid2(&self.circ2(&self.id2(&self.bullet(g, h)?), alpha)?)?)?;
        require_eq("theta natural in its middle argument", &l, &r)?;
        // last slot
        let l = self.vcomp(&self.circ2(&self.id2(&self.circ(g, &mid(h)?)?), &a_m)?, &self.theta(g, h, f2)?)?;
        let r = self.vcomp(&self.theta(g, h, f)?, &mid2(&self.circ2(&self.bullet2(&idg, alpha)?, &idh)?)?)?;
        require_eq("theta natural in its last argument", &l, &r)
    }

    /// The `ψ` diagram: both routes `(f⁻∘g)•(h⁻∘k) => i•(j∘(h•f•g•k))`.
    pub fn lemma45_first(&self, f: &OneCell, g: &OneCell, h: &OneCell, k: &OneCell) -> Result<()> {
        let (fm, hm) = (self.minus(f)?, self.minus(h)?);
        let (i, j) = (self.unit_i(), self.unit_j());
        let idi = self.id2(&i);
        let (fg, gk, hf) = (self.bullet(f, g)?, self.bullet(g, k)?, self.bullet(h, f)?);
        let left = self.chain(&[
            &self.xi(&fm, g, &hm, k)?,
            &self.circ2(&self.upsilon(h, f)?, &self.id2(&gk))?,
            &self.psi(&hf, &gk)?,
        ])?;
        let fgk = self.bullet(&fg, k)?;
        let xi = self.glue(&[&self.xi(&j, &fg, &hm, k)?, &self.circ2(&self.coh(&self.bullet(&j, &hm)?, &hm)?, &self.id2(&fgk))?])?;
        let right = self.glue(&[
            &self.bullet2(&self.psi(f, g)?, &self.id2(&self.circ(&hm, k)?))?,
            &self.bullet2(&idi, &xi)?,
            &self.bullet2(&idi, &self.psi(h, &fgk)?)?,
            &self.bullet2(&self.xi_sub0(), &self.id2(&self.circ(&j, &self.bullet(h, &fgk)?)?))?,
        ])?;
        require_eq("first phi-psi diagram", &left, &self.land(right, &left.tgt)?)
    }

    /// The `φ` diagram: both routes `(f∘g⁻)•(h∘k⁻) => ((f•h•k•g)∘j)•i`.
    pub fn lemma45_second(&self, f: &OneCell, g: &OneCell, h: &OneCell, k: &OneCell) -> Result<()> {
        let (gm, km) = (self.minus(g)?, self.minus(k)?);
        let (i, j) = (self.unit_i(), self.unit_j());
        let idi = self.id2(&i);
        let (fh, kg, hk) = (self.bullet(f, h)?, self.bullet(k, g)?, self.bullet(h, k)?);
        let left = self.chain(&[
            &self.xi(f, &gm, h, &km)?,
            &self.circ2(&self.id2(&fh), &self.upsilon(k, g)?)?,
            &self.phi(&fh, &kg)?,
        ])?;
        let fhk = self.bullet(f, &hk)?;
        let xi = self.glue(&[&self.xi(f, &gm, &hk, &j)?, &self.circ2(&self.id2(&fhk), &self.coh(&self.bullet(&gm, &j)?, &gm)?)?])?;
        let outer = self.circ(&self.bullet(&fhk, g)?, &j)?;
        let right = self.glue(&[
            &self.bullet2(&self.id2(&self.circ(f, &gm)?), &self.phi(h, k)?)?,
            &self.bullet2(&xi, &idi)?,
            &self.bullet2(&self.phi(&fhk, g)?, &idi)?,
            &self.bullet2(&self.id2(&outer), &self.xi_sub0())?,
        ])?;
        require_eq("second phi-psi diagram", &left, &self.land(right, &left.tgt)?)
    }

    /// `ϑ_{f,i,h} = φ_{f,h}` up to `j•i ≅ i`.
    pub fn lemma46_ii(&self, f: &OneCell, h: &OneCell) -> Result<()> {
        let theta = self.theta(f, &self.unit_i(), h)?;
        let phi = self.phi(f, h)?;
        let left = self.vcomp(&self.coh(&phi.src, &theta.src)?, &theta)?;
        require_eq("theta at i", &left, &self.land(phi, &left.tgt)?)
    }

    pub fn lemma46_iii(&self, f: &OneCell, g: &OneCell, h: &OneCell, k: &OneCell) -> Result<()> {
        let (idi, idj) = (self.id2(&self.unit_i()), self.id2(&self.unit_j()));
        let (fg, kh) = (self.circ(f, g)?, self.circ(k, h)?);
        let p1 = self.chain(&[
            &self.circ2(&self.id2(&fg), &self.xi_dual(k, h)?)?,
            &self.phi(&fg, &kh)?,
            &self.bullet2(&self.circ2(&self.xi(f, g, k, h)?, &idj)?, &idi)?,
        ])?;
        let p2 = self.chain(&[
            &self.circ2(&self.circ2(&self.id2(f), &self.phi(g, h)?)?, &self.id2(&self.minus(k)?))?,
            &self.theta(f, &self.bullet(g, h)?, k)?,
        ])?;
        require_eq("theta against phi and Xi", &p1, &p2)
    }

    pub fn lemma46_iv(&self, f: &OneCell, g: &OneCell, h: &OneCell) -> Result<()> {
        let (idi, xi0) = (self.id2(&self.unit_i()), self.xi0()?);
        let fhg = self.circ(&self.bullet(f, h)?, g)?;
        let p1 = self.vcomp(&self.theta(f, g, h)?, &self.bullet2(&self.circ2(&self.id2(&fhg), &xi0)?, &idi)?)?;
        let inner = self.bullet2(&self.circ2(&self.id2(g), &xi0)?, &idi)?;
        let p2 = self.vcomp(
            &self.circ2(&self.circ2(&self.id2(f), &inner)?, &self.id2(&self.minus(h)?))?,
            &self.theta(f, &self.circ(g, &self.unit_j())?, h)?,
        )?;
        require_eq("theta against xi0", &p1, &p2)
    }

    /// The bimonoid `a⁻` with structure transported along `Υ`, `Υ₀`, `Ξ`, `Ξ₀`.
    pub fn dual_bimonoid(&self, b: &Bimonoid<M>) -> Result<Bimonoid<M>> {
        let a = &b.a;
        let d = Bimonoid {
            name: format!("{}⁻", b.name),
            a: self.minus(a)?,
            mu: self.vcomp(&self.upsilon(a, a)?, &self.minus2(&b.mu)?)?,
            eta: self.vcomp(&self.upsilon0()?, &self.minus2(&b.eta)?)?,
            delta: self.vcomp(&self.minus2(&b.delta)?, &self.invert(&self.xi_dual(a, a)?)?)?,
            eps: self.vcomp(&self.minus2(&b.eps)?, &self.invert(&self.xi0_dual()?)?)?,
        };
        self.validate(&d)?;
        Ok(d)
    }

    /// The Hopf map of `a⁻` is the dual of the co-Hopf map of `a`.
    pub fn beta_zeta_duality(&self, b: &Bimonoid<M>) -> Result<()> {
        let d = self.dual_bimonoid(b)?;
        let beta = self.hopf_map(&d)?;
        let zeta = self.minus2(&self.cohopf_map(b)?)?;
        let n = user_count(&b.a);
        let swap = block_perm(&[n, n], &[1, 0]);
        // the mate reverses tensor order, so the two copies of `a` trade places
        let left = self.vcomp(&beta, &self.coh_perm(&beta.tgt, &zeta.tgt, &swap)?)?;
        let right = self.vcomp(&self.coh_perm(&beta.src, &zeta.src, &swap)?, &zeta)?;
        require_eq("beta-zeta duality", &left, &right)
    }

    fn compose_is_identity(&self, mx: &Mixed<'_, M>, s: &TransformMorphism<M>, t: &TransformMorphism<M>, what: &str) -> Result<()> {
        let c = mx.compose_cross(s, t)?;
        let o = if c.hom_type == HomType::XX { Obj::X } else { Obj::Y };
        require_eq(what, &c.cell, &mx.identity(o)?.cell)
    }

    pub fn check_inverse_pair(&self, p: &TransformPair<M>) -> Result<()> {
        let mx = Mixed::new(self, p.c.clone(), p.b.clone());
        let s = TransformMorphism { hom_type: HomType::XY, cell: p.sigma.clone() };
        let t = TransformMorphism { hom_type: HomType::YX, cell: p.sigma_inv.clone() };
        self.compose_is_identity(&mx, &t, &s, "inverse pair at Y")?;
        self.compose_is_identity(&mx, &s, &t, "inverse pair at X")
    }

    /// `(id, σ)` for a bimonoid with antipode `σ`, moved along `η : j -> a`
    /// on the comonoid side and `ε : a -> i` on the monoid side.
    pub fn hopf_pairs(&self, b: &Bimonoid<M>, antipode: &Cell<M>) -> Result<Vec<TransformPair<M>>> {
        let (ti, tj) = (self.trivial_i(), self.trivial_j()?);
        let mut out = Vec::new();
        for along_eta in [false, true] {
            for along_eps in [false, true] {
                let (c, mut s, mut s_inv) = if along_eta {
                    (tj.comonoid(), b.eta.clone(), self.vcomp(&b.eta, antipode)?)
                } else {
                    (b.comonoid(), self.id2(&b.a), antipode.clone())
                };
                let m = if along_eps {
                    s = self.vcomp(&s, &b.eps)?;
                    s_inv = self.vcomp(&s_inv, &self.minus2(&b.eps)?)?;
                    ti.monoid()
                } else {
                    b.monoid()
                };
                out.push(TransformPair { c, b: m, sigma: s, sigma_inv: s_inv });
            }
        }
        Ok(out)
    }

    /// Tensor side: the composite pair over `c•d` is inverse, and
    /// its `Y`-composite equals the lower route through `δ•ε`.
    pub fn figure1_bullet(&self, p: &TransformPair<M>, q: &TransformPair<M>) -> Result<()> {
        if p.b.b != q.b.b {
            return Err(Error::Invalid("both pairs must share the monoid".into()));
        }
        let b = &p.b;
        let bb = &b.b;
        let mx = Mixed::new(self, self.bullet_comonoid(&p.c, &q.c)?, b.clone());
        let s = TransformMorphism { hom_type: HomType::XY, cell: self.vcomp(&self.bullet2(&p.sigma, &q.sigma)?, &b.mu)? };
        let t = TransformMorphism {
            hom_type: HomType::YX,
            cell: self.chain(&[&self.bullet2(&p.sigma_inv, &q.sigma_inv)?, &self.upsilon(bb, bb)?, &self.minus2(&b.mu)?])?,
        };
        let upper = mx.compose_cross(&t, &s)?.cell;
        let (i, j) = (self.unit_i(), self.unit_j());
        let idi = self.id2(&i);
        let inner = self.circ(&self.bullet(bb, bb)?, &j)?;
        let lower = self.glue(&[
            &self.bullet2(&p.c.delta, &q.c.eps)?,
            &self.bullet2(&self.circ2(&p.sigma, &p.sigma_inv)?, &idi)?,
            &self.bullet2(&self.phi(bb, bb)?, &idi)?,
            &self.bullet2(&self.id2(&inner), &self.xi_sub0())?,
            &self.bullet2(&self.circ2(&b.mu, &self.id2(&j))?, &idi)?,
        ])?;
        let lower = self.land(lower, &upper.tgt)?;
        require_eq("upper diagram outer paths", &upper, &lower)?;
        require_eq("upper diagram lower path", &lower, &mx.identity(Obj::Y)?.cell)?;
        self.compose_is_identity(&mx, &s, &t, "convolution pair at X")
    }

    /// Composition side: the composite pair into `a∘b` is inverse, and
    /// its `Y`-composite equals the lower route through `σ∘σ'`.
    pub fn figure1_circ(&self, p: &TransformPair<M>, q: &TransformPair<M>) -> Result<()> {
        if p.c.c != q.c.c {
            return Err(Error::Invalid("both pairs must share the comonoid".into()));
        }
        let c = &p.c;
        let (a, b) = (&p.b, &q.b);
        let mx = Mixed::new(self, c.clone(), self.circ_monoid(a, b)?);
        let s = TransformMorphism { hom_type: HomType::XY, cell: self.vcomp(&c.delta, &self.circ2(&p.sigma, &q.sigma)?)? };
        let t = TransformMorphism {
            hom_type: HomType::YX,
            cell: self.chain(&[&c.delta, &self.circ2(&q.sigma_inv, &p.sigma_inv)?, &self.xi_dual(&a.b, &b.b)?])?,
        };
        let upper = mx.compose_cross(&t, &s)?.cell;
        let (i, j) = (self.unit_i(), self.unit_j());
        let (idi, idj, ida) = (self.id2(&i), self.id2(&j), self.id2(&a.b));
        let lower = self.chain(&[
            &c.delta,
            &self.circ2(&p.sigma, &p.sigma_inv)?,
            &self.phi(&a.b, &a.b)?,
            &self.bullet2(&self.circ2(&a.mu, &idj)?, &idi)?,
            &self.bullet2(&self.circ2(&ida, &self.xi0()?)?, &idi)?,
            &self.bullet2(&self.circ2(&self.circ2(&ida, &b.eta)?, &idj)?, &idi)?,
        ])?;
        require_eq("lower diagram outer paths", &upper, &lower)?;
        require_eq("lower diagram lower path", &lower, &mx.identity(Obj::Y)?.cell)?;
        self.compose_is_identity(&mx, &s, &t, "composition pair at X")
    }

    /// `transform(β̂) = id_a`, and `untransform` recovers `β̂`.
    pub fn transform_identity(&self, b: &Bimonoid<M>) -> Result<()> {
        let mx = Mixed::of(self, b);
        let beta = mx.hopf_mixed(&self.hopf_map(b)?)?;
        let t = mx.transform(&beta, Obj::X, Obj::Y)?;
        require_eq("transform of the Hopf map", &t.cell, &self.id2(&b.a))?;
        require_eq("untransform of the identity", &mx.untransform(&t)?, &beta)
    }
}

/// Which family of identities to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Triangle identities, `π`/`π′`, `ξ` coherence, mate roundtrips and naturality.
    Coherence,
    Lemma45,
    Lemma46,
    Duality,
    Figure1,
    Transform,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Coherence, Suite::Lemma45, Suite::Lemma46, Suite::Duality, Suite::Figure1, Suite::Transform];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coherence => "coherence",
            Suite::Lemma45 => "lemma45",
            Suite::Lemma46 => "lemma46",
            Suite::Duality => "duality",
            Suite::Figure1 => "figure1",
            Suite::Transform => "transform",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Invalid(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    Span,
    Gvec,
}

impl Backend {
    pub const ALL: [Backend; 2] = [Backend::Span, Backend::Gvec];

    fn preset(self, size: usize) -> Preset {
        match self {
            Backend::Span => Preset::Span { size },
            Backend::Gvec => Preset::GvecCommutative { n: size },
        }
    }
}

/// Outcome of one suite on one backend.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub backend: Backend,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.instances > 0
    }
}

/// Run `suite` on `count` seeded instances in `backend`. Random-cell suites
/// cycle the base through sizes 1 to 3; corpus suites draw Hopf bimonoids
/// for the inverse-pair diagrams or arbitrary bimonoids from the seeded corpus.
pub fn run_suite(suite: Suite, backend: Backend, count: usize, seed: u64) -> Result<SuiteReport> {
    match backend {
        Backend::Span => {
            let frs = (1..=4).map(|s| Frob::<FnMap>::new(backend.preset(s))).collect::<Result<Vec<_>>>()?;
            run_in(&frs, suite, backend, count, seed)
        }
        Backend::Gvec => {
            let frs = (1..=4).map(|s| Frob::<QMat>::new(backend.preset(s))).collect::<Result<Vec<_>>>()?;
            run_in(&frs, suite, backend, count, seed)
        }
    }
}

fn run_in<M: Map>(frs: &[Frob<M>], suite: Suite, backend: Backend, count: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut instances = 0;
    let mut record = |what: String, r: Result<()>| {
        if let Err(e) = r {
            failures.push(format!("{what}: {e}"));
        }
    };
    match suite {
        Suite::Coherence | Suite::Lemma45 | Suite::Lemma46 => {
            for fr in &frs[..3] {
                if suite == Suite::Coherence {
                    record(format!("{} triangles", fr.preset.name()), fr.triangle_identities());
                    record(format!("{} pi", fr.preset.name()), fr.pi_checks());
                }
            }
            for k in 0..count {
                let fr = &frs[k % 3];
                let tag = format!("{:?} instance {k}", fr.preset);
                let r = random_instance(fr, suite, &mut rng);
                instances += 1;
                record(tag, r);
            }
        }
        Suite::Duality | Suite::Transform | Suite::Figure1 => {
            let entries = corpus(seed, 4 * count);
            for e in entries.iter().filter(|e| backend.preset(e.preset.parameter()) == e.preset) {
                if instances >= count {
                    break;
                }
                let fr = &frs[e.preset.parameter() - 1];
                let b = match e.spec.build(fr) {
                    Ok(b) => b,
                    Err(err) => {
                        record(e.name(), Err(err));
                        continue;
                    }
                };
                let r = match suite {
                    Suite::Duality => fr.beta_zeta_duality(&b),
                    Suite::Transform => fr.transform_identity(&b),
                    _ => match fr.antipode_solve(&b)? {
                        Antipode::Missing(_) => continue,
                        Antipode::Found(s) => figure1_all(fr, &b, &s),
                    },
                };
                instances += 1;
                record(e.name(), r);
            }
        }
    }
    Ok(SuiteReport { suite, backend, instances, failures })
}

fn figure1_all<M: Map>(fr: &Frob<M>, b: &Bimonoid<M>, s: &Cell<M>) -> Result<()> {
    let pairs = fr.hopf_pairs(b, s)?;
    for p in &pairs {
        fr.check_inverse_pair(p)?;
    }
    for p in &pairs {
        for q in &pairs {
            if p.b.b == q.b.b {
                fr.figure1_bullet(p, q)?;
            }
            if p.c.c == q.c.c {
                fr.figure1_circ(p, q)?;
            }
        }
    }
    Ok(())
}

fn random_instance<M: Map>(fr: &Frob<M>, suite: Suite, rng: &mut ChaCha8Rng) -> Result<()> {
    let cap = DIAGRAM_CELL_MAX;
    let mut cells = Vec::new();
    for (n, name) in ["f", "g", "h", "k"].iter().enumerate() {
        let max = if suite == Suite::Coherence && n > 1 { 2 } else { cap };
        cells.push(random_endo(fr, rng, name, max)?);
    }
    let [f, g, h, k] = &cells[..] else { unreachable!() };
    match suite {
        Suite::Coherence => {
            let alpha = random_two_cell(fr, rng, ("p", "q"), default_cap::<M>())?;
            fr.roundtrip_check(&alpha)?;
            let alpha = random_two_cell(fr, rng, ("p", "q"), cap)?;
            fr.naturality_check(&alpha, f, g)?;
            let s = random_endo(fr, rng, "s", 2)?;
            let t = random_endo(fr, rng, "t", 2)?;
            fr.xi_coherence(f, g, h, k, &s, &t)
        }
        Suite::Lemma45 => {
            fr.lemma45_first(f, g, h, k)?;
            fr.lemma45_second(f, g, h, k)
        }
        _ => {
            fr.lemma46_ii(f, h)?;
            fr.lemma46_iii(f, g, h, k)?;
            fr.lemma46_iv(f, g, h)
        }
    }
}
