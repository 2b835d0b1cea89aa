//! Antipodes `σ : a => a⁻`: synthesis through the transform category, exact
//! re-verification, and an independent direct solve of the defining diagrams.

use crate::bimonoid::{require_eq, Bimonoid};
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob};
use crate::linalg::{solve, Solution, Q};
use crate::map::{Map, WhiskerPlan, Witness};
use crate::transform::{Mixed, Obj};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// Result of the transform path.
#[derive(Clone, Debug)]
pub enum Antipode<M> {
    Found(Cell<M>),
    /// `β̂` is not invertible.
    Missing(Witness),
}

impl<M> Antipode<M> {
    pub fn cell(&self) -> Option<&Cell<M>> {
        match self {
            Antipode::Found(c) => Some(c),
            Antipode::Missing(_) => None,
        }
    }
}

/// Outcome of solving the antipode diagrams directly.
#[derive(Clone, Debug)]
pub enum Direct<M> {
    None,
    Unique(Cell<M>),
    /// The solution set has this many degrees of freedom (or candidates).
    Many(usize),
    /// The search was skipped because the carrier is too large.
    Skipped,
}

/// One antipode diagram `δ ; W(σ) ; R = rhs` with `W` a whiskering of `σ`.
struct Diagram<M> {
    rest: Cell<M>,
    plan: WhiskerPlan,
    rhs: Cell<M>,
}

/// Span carriers above this size are not searched directly.
pub const SPAN_SEARCH_LIMIT: usize = 12;

impl<M: Map> Frob<M> {
    /// The left-hand side of the first antipode diagram: `(μ∘j)•i . φ . (a∘σ) . δ`.
    pub fn antipode_lhs1(&self, b: &Bimonoid<M>, sigma: &Cell<M>) -> Result<Cell<M>> {
        let (idi, idj, ida) = (self.id2(&self.unit_i()), self.id2(&self.unit_j()), self.id2(&b.a));
        self.chain(&[&b.delta, &self.circ2(&ida, sigma)?, &self.phi(&b.a, &b.a)?, &self.bullet2(&self.circ2(&b.mu, &idj)?, &idi)?])
    }

    /// The left-hand side of the second antipode diagram: `i•(j∘μ) . ψ . (σ∘a) . δ`.
    pub fn antipode_lhs2(&self, b: &Bimonoid<M>, sigma: &Cell<M>) -> Result<Cell<M>> {
        let (idi, idj, ida) = (self.id2(&self.unit_i()), self.id2(&self.unit_j()), self.id2(&b.a));
        self.chain(&[&b.delta, &self.circ2(sigma, &ida)?, &self.psi(&b.a, &b.a)?, &self.bullet2(&idi, &self.circ2(&idj, &b.mu)?)?])
    }

    /// Check both defining diagrams of an antipode exactly.
    pub fn check_antipode(&self, b: &Bimonoid<M>, sigma: &Cell<M>) -> Result<()> {
        let mx = Mixed::of(self, b);
        require_eq("antipode diagram through phi", &self.antipode_lhs1(b, sigma)?, &mx.identity(Obj::Y)?.cell)?;
        require_eq("antipode diagram through psi", &self.antipode_lhs2(b, sigma)?, &mx.identity(Obj::X)?.cell)
    }

    /// `σ = transform(β̂⁻¹)`, or the witness that `β̂` has no inverse.
    pub fn antipode_via_transform(&self, b: &Bimonoid<M>) -> Result<Antipode<M>> {
        let beta = self.hopf_map(b)?;
        let inv = match self.try_invert(&beta) {
            Ok(inv) => inv,
            Err(w) => return Ok(Antipode::Missing(w)),
        };
        let mx = Mixed::of(self, b);
        let (gtx, gty) = (mx.gt(Obj::X)?, mx.gt(Obj::Y)?);
        let f = self.chain(&[&self.coh(&gty, &inv.src)?, &inv, &self.coh(&inv.tgt, &gtx)?])?;
        Ok(Antipode::Found(mx.transform(&f, Obj::Y, Obj::X)?.cell))
    }

    fn antipode_diagrams(&self, b: &Bimonoid<M>) -> Result<[Diagram<M>; 2]> {
        let mx = Mixed::of(self, b);
        let (a, am) = (&b.a, self.minus(&b.a)?);
        let (idi, idj) = (self.id2(&self.unit_i()), self.id2(&self.unit_j()));
        let (_, t1, plan1) = self.whisker_plan(a, 0, a, &am, &[])?;
        let rest1 = self.vcomp(&self.phi(a, a)?, &self.bullet2(&self.circ2(&b.mu, &idj)?, &idi)?)?;
        debug_assert_eq!(rest1.src, t1);
        let (_, _, plan2) = self.whisker_plan(&self.unit_i(), 0, a, &am, a.layers())?;
        let rest2 = self.vcomp(&self.psi(a, a)?, &self.bullet2(&idi, &self.circ2(&idj, &b.mu)?)?)?;
        Ok([
            Diagram { rest: rest1, plan: plan1, rhs: mx.identity(Obj::Y)?.cell },
            Diagram { rest: rest2, plan: plan2, rhs: mx.identity(Obj::X)?.cell },
        ])
    }

    /// Solve the antipode diagrams for `σ` without the transform: an exact
    /// linear system for graded spaces, a pointwise search for spans.
    pub fn antipode_direct(&self, b: &Bimonoid<M>) -> Result<Direct<M>> {
        let am = self.minus(&b.a)?;
        let (ca, cm) = (self.carrier(&b.a), self.carrier(&am));
        let functional = M::BACKEND == "span";
        if functional && cm.len() > SPAN_SEARCH_LIMIT {
            return Ok(Direct::Skipped);
        }
        // unknowns: leg-compatible pairs (p in a⁻, i in a)
        let mut unknowns: Vec<(u32, u32)> = Vec::new();
        let mut index: HashMap<(u32, u32), usize> = HashMap::new();
        for p in 0..cm.len() {
            for i in 0..ca.len() {
                if cm.input(p) == ca.input(i) && cm.out(p) == ca.out(i) {
                    index.insert((p as u32, i as u32), unknowns.len());
                    unknowns.push((p as u32, i as u32));
                }
            }
        }
        let delta_rows = b.delta.map.to_qmat().transpose();
        let mut equations: Vec<(BTreeMap<usize, Q>, Q)> = Vec::new();
        for d in self.antipode_diagrams(b)? {
            let rest_rows = d.rest.map.to_qmat().transpose();
            let rhs = d.rhs.map.to_qmat();
            let mut eq: BTreeMap<(usize, usize), BTreeMap<usize, Q>> = BTreeMap::new();
            for t in 0..rest_rows.cols() {
                for (r, rv) in rest_rows.col(t) {
                    let (ctx, p) = d.plan.tgt_split[*r as usize];
                    for i in 0..ca.len() as u32 {
                        let (Some(&q), Some(&u)) = (d.plan.src_join.get(&(ctx, i)), index.get(&(p, i))) else { continue };
                        for (s0, dv) in delta_rows.col(q as usize) {
                            *eq.entry((t, *s0 as usize)).or_default().entry(u).or_insert_with(Q::zero) += rv * dv;
                        }
                    }
                }
            }
            for (t, s0, _) in rhs.entries() {
                eq.entry((t, s0)).or_default();
            }
            for ((t, s0), coefs) in eq {
                equations.push((coefs.into_iter().filter(|(_, v)| !v.is_zero()).collect(), rhs.get(t, s0)));
            }
        }
        if functional {
            self.search_functions(&am, b, &unknowns, &equations, cm.len())
        } else {
            let dense: Vec<Vec<Q>> = equations
                .iter()
                .map(|(c, _)| {
                    let mut row = vec![Q::zero(); unknowns.len()];
                    for (u, v) in c {
                        row[*u] = v.clone();
                    }
                    row
                })
                .collect();
            let rhs: Vec<Q> = equations.iter().map(|(_, r)| r.clone()).collect();
            match solve(&dense, &rhs, unknowns.len()) {
                Solution::Inconsistent => Ok(Direct::None),
                Solution::Many(_, dim) => Ok(Direct::Many(dim)),
                Solution::Unique(x) => {
                    let entries = unknowns.iter().zip(x).map(|(&(p, i), v)| (p, i, v)).collect();
                    Ok(Direct::Unique(self.cell(&b.a, &am, M::from_weighted(cm.len(), ca.len(), entries)?)?))
                }
            }
        }
    }

    /// Pointwise search: each equation constrains the value of `σ` at one point.
    fn search_functions(&self, am: &crate::cell::OneCell, b: &Bimonoid<M>, unknowns: &[(u32, u32)], equations: &[(BTreeMap<usize, Q>, Q)], points: usize) -> Result<Direct<M>> {
        let mut candidates: Vec<Vec<u32>> = vec![Vec::new(); points];
        for &(p, i) in unknowns {
            candidates[p as usize].push(i);
        }
        let mut by_point: Vec<Vec<usize>> = vec![Vec::new(); points];
        for (k, (coefs, rhs)) in equations.iter().enumerate() {
            let mut ps: Vec<u32> = coefs.keys().map(|&u| unknowns[u].0).collect();
            ps.dedup();
            match ps.len() {
                0 if !rhs.is_zero() => return Ok(Direct::None),
                0 => {}
                1 => by_point[ps[0] as usize].push(k),
                _ => return Err(Error::Invalid("antipode equations are not pointwise".into())),
            }
        }
        let index: HashMap<(u32, u32), usize> = unknowns.iter().enumerate().map(|(k, &pi)| (pi, k)).collect();
        let mut choice = Vec::with_capacity(points);
        let mut ambiguous = 0;
        for p in 0..points {
            let ok: Vec<u32> = candidates[p]
                .iter()
                .copied()
                .filter(|&i| {
                    let u = index[&(p as u32, i)];
                    by_point[p].iter().all(|&k| {
                        let (coefs, rhs) = &equations[k];
                        coefs.get(&u).cloned().unwrap_or_else(Q::zero) == *rhs
                    })
                })
                .collect();
            match ok.len() {
                0 => return Ok(Direct::None),
                1 => choice.push((p as u32, ok[0], Q::from_integer(1.into()))),
                n => {
                    ambiguous += n - 1;
                    choice.push((p as u32, ok[0], Q::from_integer(1.into())));
                }
            }
        }
        if ambiguous > 0 {
            return Ok(Direct::Many(ambiguous));
        }
        let ca = self.carrier(&b.a).len();
        Ok(Direct::Unique(self.cell(&b.a, am, M::from_weighted(points, ca, choice)?)?))
    }

    /// Transform-path antipode, re-verified and cross-checked against the direct
    /// solve. Any disagreement between the two is an error.
    pub fn antipode_solve(&self, b: &Bimonoid<M>) -> Result<Antipode<M>> {
        let via = self.antipode_via_transform(b)?;
        if let Antipode::Found(sigma) = &via {
            self.check_antipode(b, sigma).map_err(|e| Error::Disagreement(format!("transform-path antipode fails its diagrams: {e}")))?;
        }
        match (self.antipode_direct(b)?, &via) {
            (Direct::Skipped, _) => {}
            (Direct::Unique(s), Antipode::Found(sigma)) if &s == sigma => {}
            (Direct::Unique(_), Antipode::Found(_)) => return Err(Error::Disagreement("direct solve and transform path give different antipodes".into())),
            (Direct::None, Antipode::Missing(_)) => {}
            (Direct::Many(k), _) => return Err(Error::Disagreement(format!("antipode diagrams have a {k}-dimensional family of solutions"))),
            (Direct::Unique(_), Antipode::Missing(w)) => return Err(Error::Disagreement(format!("direct solve finds an antipode but the Hopf map is singular ({w})"))),
            (Direct::None, Antipode::Found(_)) => return Err(Error::Disagreement("transform path finds an antipode the direct solve rejects".into())),
        }
        Ok(via)
    }

    /// The four compatibilities of an antipode with the bimonoid structure.
    pub fn antipode_morphism_check(&self, b: &Bimonoid<M>, sigma: &Cell<M>) -> Result<()> {
        let a = &b.a;
        let unit_l = self.vcomp(&b.eta, sigma)?;
        let unit_r = self.vcomp(&self.upsilon0()?, &self.minus2(&b.eta)?)?;
        require_eq("sigma.eta = eta⁻.Upsilon0", &unit_l, &unit_r)?;
        let counit_l = self.vcomp(sigma, &self.minus2(&b.eps)?)?;
        let counit_r = self.vcomp(&b.eps, &self.xi0_dual()?)?;
        require_eq("eps⁻.sigma = Xi0.eps", &counit_l, &counit_r)?;
        let mul_l = self.vcomp(&b.mu, sigma)?;
        let mul_r = self.chain(&[&self.bullet2(sigma, sigma)?, &self.upsilon(a, a)?, &self.minus2(&b.mu)?])?;
        require_eq("sigma.mu = mu⁻.Upsilon.(sigma•sigma)", &mul_l, &mul_r)?;
        let com_l = self.vcomp(sigma, &self.minus2(&b.delta)?)?;
        let com_r = self.chain(&[&b.delta, &self.circ2(sigma, sigma)?, &self.xi_dual(a, a)?])?;
        require_eq("delta⁻.sigma = Xi.(sigma∘sigma).delta", &com_l, &com_r)
    }
}
