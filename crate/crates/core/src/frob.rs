//! The ambient context: a finite base with a chosen naturally Frobenius
//! map-monoidale `(M, m, u)` and the 2-cell calculus over a payload backend.

use crate::cell::{simulate, Atom, Carrier, Elem, Kind, Layer, OneCell};
use crate::error::{Error, Result};
use crate::linalg::{QMat, Q};
use crate::map::{FnMap, Map, WhiskerPlan, Witness};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "kebab-case")]
pub enum Preset {
    /// Spans over a set of `size` points with the diagonal monoidale.
    Span { size: usize },
    /// Bimodules over the commutative algebra `Q^n`.
    GvecCommutative { n: usize },
    /// Bimodules over `R^op R` for `R = Q^n`; the base index set is `[n]^2`.
    GvecWeak { n: usize },
}

impl Preset {
    pub fn base(&self) -> usize {
        match *self {
            Preset::Span { size } => size,
            Preset::GvecCommutative { n } => n,
            Preset::GvecWeak { n } => n * n,
        }
    }

    /// The size parameter: `|X|` for spans, `n` for the graded presets.
    pub fn parameter(&self) -> usize {
        match *self {
            Preset::Span { size } => size,
            Preset::GvecCommutative { n } | Preset::GvecWeak { n } => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Span { .. } => "span",
            Preset::GvecCommutative { .. } => "gvec-commutative",
            Preset::GvecWeak { .. } => "gvec-weak",
        }
    }
}

/// A 2-cell `src => tgt` with its backend payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell<M> {
    pub src: OneCell,
    pub tgt: OneCell,
    pub map: M,
}

pub type SpanCell2 = Cell<FnMap>;
pub type GvecCell2 = Cell<QMat>;

/// The structural 2-cells of the monoidale.
#[derive(Clone, Debug)]
pub struct Gens<M> {
    pub alpha: Cell<M>,
    pub alpha_inv: Cell<M>,
    pub lambda: Cell<M>,
    pub rho: Cell<M>,
    pub eta_m: Cell<M>,
    pub eps_m: Cell<M>,
    pub eta_u: Cell<M>,
    pub eps_u: Cell<M>,
    pub pi: Cell<M>,
    pub pi_inv: Cell<M>,
    pub pi_p: Cell<M>,
    pub pi_p_inv: Cell<M>,
}

pub struct Frob<M: Map> {
    pub preset: Preset,
    base: usize,
    pub m: Arc<Atom>,
    pub u: Arc<Atom>,
    pub ms: Arc<Atom>,
    pub us: Arc<Atom>,
    carriers: RwLock<HashMap<OneCell, Arc<Carrier>>>,
    gens: OnceLock<Gens<M>>,
}

pub type SpanFrob = Frob<FnMap>;
pub type GvecFrob = Frob<QMat>;

impl SpanFrob {
    pub fn span(size: usize) -> Result<Self> {
        Frob::new(Preset::Span { size })
    }
}

impl GvecFrob {
    pub fn gvec_commutative(n: usize) -> Result<Self> {
        Frob::new(Preset::GvecCommutative { n })
    }

    pub fn gvec_weak(n: usize) -> Result<Self> {
        Frob::new(Preset::GvecWeak { n })
    }
}

impl<M: Map> Frob<M> {
    pub fn new(preset: Preset) -> Result<Self> {
        let base = preset.base();
        if base == 0 {
            return Err(Error::Invalid("the base index set must be nonempty".into()));
        }
        let (m_elems, u_elems): (Vec<Elem>, Vec<Elem>) = match preset {
            Preset::Span { .. } | Preset::GvecCommutative { .. } => (
                (0..base as u32).map(|x| Elem { ins: vec![x, x], outs: vec![x] }).collect(),
                (0..base as u32).map(|x| Elem { ins: vec![], outs: vec![x] }).collect(),
            ),
            Preset::GvecWeak { n } => {
                let n = n as u32;
                let pair = |i: u32, j: u32| i * n + j;
                let mut me = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        for l in 0..n {
                            me.push(Elem { ins: vec![pair(i, j), pair(j, l)], outs: vec![pair(i, l)] });
                        }
                    }
                }
                (me, (0..n).map(|i| Elem { ins: vec![], outs: vec![pair(i, i)] }).collect())
            }
        };
        let m = Atom::new("m", 2, 1, Kind::M, m_elems, base)?;
        let u = Atom::new("u", 0, 1, Kind::U, u_elems, base)?;
        let ms = m.transposed(base);
        let us = u.transposed(base);
        let fr = Frob {
            preset,
            base,
            m: Arc::new(m),
            u: Arc::new(u),
            ms: Arc::new(ms),
            us: Arc::new(us),
            carriers: RwLock::new(HashMap::new()),
            gens: OnceLock::new(),
        };
        let gens = fr.build_gens()?;
        let _ = fr.gens.set(gens);
        Ok(fr)
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn gens(&self) -> &Gens<M> {
        self.gens.get().expect("generators are built in the constructor")
    }

    pub fn carrier(&self, c: &OneCell) -> Arc<Carrier> {
        if let Some(k) = self.carriers.read().expect("carrier cache").get(c) {
            return k.clone();
        }
        let k = Arc::new(Carrier::enumerate(c, self.base));
        self.carriers.write().expect("carrier cache").insert(c.clone(), k.clone());
        k
    }

    /// Register a user atom `M^dom -> M^cod` over this base.
    pub fn atom(&self, name: &str, dom: usize, cod: usize, elems: Vec<Elem>) -> Result<Arc<Atom>> {
        Ok(Arc::new(Atom::new(name, dom, cod, Kind::User, elems, self.base)?))
    }

    pub fn endo_atom(&self, name: &str, legs: &[(u32, u32)]) -> Result<Arc<Atom>> {
        Ok(Arc::new(Atom::endo(name, legs, self.base)?))
    }

    fn structural_atom(&self, name: &str) -> Option<&Arc<Atom>> {
        match name {
            "m" => Some(&self.m),
            "u" => Some(&self.u),
            "m*" => Some(&self.ms),
            "u*" => Some(&self.us),
            _ => None,
        }
    }

    /// Build a 1-cell from a layer string such as `"m* $0@0 $1@1 m"`.
    /// `$k` splices the layers of `args[k]` shifted by the given offset.
    pub fn seq(&self, dom: usize, spec: &str, args: &[&OneCell]) -> Result<OneCell> {
        let mut layers = Vec::new();
        for tok in spec.split_whitespace() {
            let (name, off) = match tok.split_once('@') {
                Some((n, o)) => (n, o.parse::<usize>().map_err(|_| Error::Invalid(format!("bad offset in {tok:?}")))?),
                None => (tok, 0),
            };
            if let Some(k) = name.strip_prefix('$') {
                let k: usize = k.parse().map_err(|_| Error::Invalid(format!("bad argument in {tok:?}")))?;
                let arg = args.get(k).ok_or_else(|| Error::Invalid(format!("missing argument {k}")))?;
                layers.extend(arg.shifted_layers(off));
            } else {
                let a = self.structural_atom(name).ok_or_else(|| Error::Invalid(format!("unknown layer {name:?}")))?;
                layers.push(Layer::new(a, off));
            }
        }
        OneCell::new(dom, layers)
    }

    pub fn mcell(&self) -> OneCell {
        OneCell::atom(&self.m)
    }
    pub fn ucell(&self) -> OneCell {
        OneCell::atom(&self.u)
    }
    pub fn mscell(&self) -> OneCell {
        OneCell::atom(&self.ms)
    }
    pub fn uscell(&self) -> OneCell {
        OneCell::atom(&self.us)
    }

    pub fn id2(&self, c: &OneCell) -> Cell<M> {
        let n = self.carrier(c).len();
        Cell { src: c.clone(), tgt: c.clone(), map: M::identity(n) }
    }

    /// A 2-cell from a 0/1 relation between target and source elements.
    pub fn relation(&self, src: &OneCell, tgt: &OneCell, pairs: &[(u32, u32)]) -> Result<Cell<M>> {
        let (cs, ct) = (self.carrier(src), self.carrier(tgt));
        self.cell(src, tgt, M::from_relation(ct.len(), cs.len(), pairs)?)
    }

    /// A 2-cell whose entry at a leg-compatible pair of elements is `coef(target, source)`.
    pub fn cell_by(&self, src: &OneCell, tgt: &OneCell, coef: impl Fn(&ElemView, &ElemView) -> Option<Q>) -> Result<Cell<M>> {
        if src.dom() != tgt.dom() || src.cod() != tgt.cod() {
            return Err(Error::Shape(format!("`{src}` and `{tgt}` are not parallel")));
        }
        let (cs, ct) = (self.carrier(src), self.carrier(tgt));
        let (us, ut) = (user_positions(src), user_positions(tgt));
        let mut by_legs: HashMap<(&[u32], &[u32]), Vec<usize>> = HashMap::new();
        for s in 0..cs.len() {
            by_legs.entry((cs.input(s), cs.out(s))).or_default().push(s);
        }
        let mut entries = Vec::new();
        for t in 0..ct.len() {
            let Some(ss) = by_legs.get(&(ct.input(t), ct.out(t))) else { continue };
            let tv = ElemView::new(&ct, t, &ut);
            for &s in ss {
                if let Some(v) = coef(&tv, &ElemView::new(&cs, s, &us)) {
                    entries.push((t as u32, s as u32, v));
                }
            }
        }
        self.cell(src, tgt, M::from_weighted(ct.len(), cs.len(), entries)?)
    }

    /// Wrap a raw payload, checking shape and leg compatibility.
    pub fn cell(&self, src: &OneCell, tgt: &OneCell, map: M) -> Result<Cell<M>> {
        if src.dom() != tgt.dom() || src.cod() != tgt.cod() {
            return Err(Error::Shape(format!("`{src}` and `{tgt}` are not parallel")));
        }
        let (cs, ct) = (self.carrier(src), self.carrier(tgt));
        if map.rows() != ct.len() || map.cols() != cs.len() {
            return Err(Error::Shape(format!("payload is {}x{}, carriers are {}x{}", map.rows(), map.cols(), ct.len(), cs.len())));
        }
        for (t, s, _) in map.to_qmat().entries() {
            if ct.input(t) != cs.input(s) || ct.out(t) != cs.out(s) {
                return Err(Error::Shape(format!("payload links target {t} and source {s}, whose legs differ")));
            }
        }
        Ok(Cell { src: src.clone(), tgt: tgt.clone(), map })
    }

    /// Vertical composite: `a` first, then `b`.
    pub fn vcomp(&self, a: &Cell<M>, b: &Cell<M>) -> Result<Cell<M>> {
        if a.tgt != b.src {
            return Err(Error::Composition { left: a.tgt.to_string(), right: b.src.to_string(), detail: "target and source differ".into() });
        }
        Ok(Cell { src: a.src.clone(), tgt: b.tgt.clone(), map: a.map.then(&b.map) })
    }

    /// Vertical composite of a chain, first to last.
    pub fn chain(&self, cells: &[&Cell<M>]) -> Result<Cell<M>> {
        let mut it = cells.iter();
        let mut acc = (*it.next().ok_or_else(|| Error::Invalid("empty chain".into()))?).clone();
        for c in it {
            acc = self.vcomp(&acc, c)?;
        }
        Ok(acc)
    }

    pub fn invert(&self, a: &Cell<M>) -> Result<Cell<M>> {
        let map = a.map.inverse().map_err(Error::NotInvertible)?;
        Ok(Cell { src: a.tgt.clone(), tgt: a.src.clone(), map })
    }

    pub fn try_invert(&self, a: &Cell<M>) -> std::result::Result<Cell<M>, Witness> {
        a.map.inverse().map(|map| Cell { src: a.tgt.clone(), tgt: a.src.clone(), map })
    }

    pub fn is_identity(&self, a: &Cell<M>) -> bool {
        a.src == a.tgt && a.map.is_identity()
    }

    /// `pre`, then `a` acting on wires `off..`, then the layers `post`.
    pub fn whisker_at(&self, pre: &OneCell, off: usize, a: &Cell<M>, post: &[Layer]) -> Result<Cell<M>> {
        if a.src == a.tgt && a.map.is_identity() {
            let src = self.whiskered(pre, off, &a.src, post)?;
            return Ok(self.id2(&src));
        }
        let (src, tgt, plan) = self.whisker_plan(pre, off, &a.src, &a.tgt, post)?;
        Ok(Cell { src, tgt, map: a.map.whisker(&plan) })
    }

    fn whiskered(&self, pre: &OneCell, off: usize, inner: &OneCell, post: &[Layer]) -> Result<OneCell> {
        if off + inner.dom() > pre.cod() {
            return Err(Error::Arity(format!("cell of domain {} at offset {off} exceeds {} wires", inner.dom(), pre.cod())));
        }
        let mut v = pre.layers().to_vec();
        v.extend(inner.shifted_layers(off));
        v.extend(post.iter().cloned());
        OneCell::new(pre.dom(), v)
    }

    /// The whiskered source and target together with the splitting of their
    /// elements into a shared context and an inner element.
    pub fn whisker_plan(&self, pre: &OneCell, off: usize, inner_src: &OneCell, inner_tgt: &OneCell, post: &[Layer]) -> Result<(OneCell, OneCell, WhiskerPlan)> {
        let src = self.whiskered(pre, off, inner_src, post)?;
        let tgt = self.whiskered(pre, off, inner_tgt, post)?;
        let np = pre.len();
        let mut ctx_ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut split = |whole: &OneCell, inner: &OneCell| -> (Vec<(u32, u32)>, HashMap<(u32, u32), u32>) {
            let cw = self.carrier(whole);
            let ci = self.carrier(inner);
            let ni = inner.len();
            let mut parts = Vec::with_capacity(cw.len());
            let mut join = HashMap::with_capacity(cw.len());
            for e in 0..cw.len() {
                let input = cw.input(e);
                let ch = cw.choices(e);
                let wires = simulate(pre.layers(), input, &ch[..np]);
                let mut sub = wires[off..off + inner.dom()].to_vec();
                sub.extend_from_slice(&ch[np..np + ni]);
                let a_idx = ci.find(&sub).expect("inner element exists") as u32;
                let mut ctx = input.to_vec();
                ctx.extend_from_slice(&ch[..np]);
                ctx.push(u32::MAX);
                ctx.extend_from_slice(&ch[np + ni..]);
                let next = ctx_ids.len() as u32;
                let cid = *ctx_ids.entry(ctx).or_insert(next);
                parts.push((cid, a_idx));
                join.insert((cid, a_idx), e as u32);
            }
            (parts, join)
        };
        let (src_split, src_join) = split(&src, inner_src);
        let (tgt_split, tgt_join) = split(&tgt, inner_tgt);
        Ok((src, tgt, WhiskerPlan { src_split, tgt_split, src_join, tgt_join }))
    }

    /// Whisker by 1-cells: `f`, then `a`, then `g`.
    pub fn whisker(&self, f: &OneCell, a: &Cell<M>, g: &OneCell) -> Result<Cell<M>> {
        if f.cod() != a.src.dom() || a.src.cod() != g.dom() {
            return Err(Error::Composition { left: f.to_string(), right: g.to_string(), detail: format!("cannot whisker a cell {} -> {}", a.src.dom(), a.src.cod()) });
        }
        self.whisker_at(f, 0, a, g.layers())
    }

    /// Horizontal composite: `a` then `b` along the 1-cell direction.
    pub fn hcomp(&self, a: &Cell<M>, b: &Cell<M>) -> Result<Cell<M>> {
        let left = self.whisker(&OneCell::id(a.src.dom()), a, &b.src)?;
        let right = self.whisker(&a.tgt, b, &OneCell::id(b.src.cod()))?;
        self.vcomp(&left, &right)
    }

    /// Tensor of 2-cells: `a` on the left wires, `b` on the right.
    pub fn tensor2(&self, a: &Cell<M>, b: &Cell<M>) -> Result<Cell<M>> {
        let p = a.src.dom();
        let left = self.whisker_at(&OneCell::id(p + b.src.dom()), 0, a, &b.src.shifted_layers(a.src.cod()))?;
        let right = self.whisker_at(&OneCell::id(p + b.src.dom()).then_layers(a.tgt.layers())?, a.tgt.cod(), b, &[])?;
        self.vcomp(&left, &right)
    }

    fn build_gens(&self) -> Result<Gens<M>> {
        let alpha = self.structural_iso(&self.seq(3, "m@0 m@0", &[])?, &self.seq(3, "m@1 m@0", &[])?)?;
        let lambda = self.structural_iso(&self.seq(1, "u@0 m@0", &[])?, &OneCell::id(1))?;
        let rho = self.structural_iso(&self.seq(1, "u@1 m@0", &[])?, &OneCell::id(1))?;
        let alpha_inv = self.invert(&alpha)?;
        let (eta_m, eps_m) = (self.unit_of(&self.m)?, self.counit_of(&self.m)?);
        let (eta_u, eps_u) = (self.unit_of(&self.u)?, self.counit_of(&self.u)?);
        let partial = Gens {
            alpha,
            alpha_inv,
            lambda,
            rho,
            eta_m,
            eps_m,
            eta_u,
            eps_u,
            pi: Cell { src: OneCell::id(0), tgt: OneCell::id(0), map: M::identity(1) },
            pi_inv: Cell { src: OneCell::id(0), tgt: OneCell::id(0), map: M::identity(1) },
            pi_p: Cell { src: OneCell::id(0), tgt: OneCell::id(0), map: M::identity(1) },
            pi_p_inv: Cell { src: OneCell::id(0), tgt: OneCell::id(0), map: M::identity(1) },
        };
        let pi = self.pi_mate(&partial)?;
        let pi_p = self.pi_prime_mate(&partial)?;
        let pi_inv = self.invert(&pi)?;
        let pi_p_inv = self.invert(&pi_p)?;
        Ok(Gens { pi, pi_inv, pi_p, pi_p_inv, ..partial })
    }

    /// The unique leg-preserving bijection between two structural composites.
    fn structural_iso(&self, src: &OneCell, tgt: &OneCell) -> Result<Cell<M>> {
        let pairs = self.semantic_pairs(src, tgt, None)?;
        let c = self.relation(src, tgt, &pairs)?;
        self.invert(&c).map_err(|_| Error::Coherence(format!("`{src}` and `{tgt}` are not canonically isomorphic")))?;
        Ok(c)
    }

    /// Unit `1 => f* . f` of the adjunction `f -| f*` for a structural map `f`:
    /// each input is sent to the sum of the round trips through the elements over it.
    pub fn unit_of(&self, f: &Arc<Atom>) -> Result<Cell<M>> {
        let fs = Arc::new(f.transposed(self.base));
        let src = OneCell::id(f.dom);
        let tgt = OneCell::new(f.dom, vec![Layer::new(f, 0), Layer::new(&fs, 0)])?;
        let (cs, ct) = (self.carrier(&src), self.carrier(&tgt));
        let mut pairs = Vec::new();
        for t in 0..ct.len() {
            let ch = ct.choices(t);
            if ch[0] == ch[1] {
                pairs.push((t as u32, cs.find(ct.input(t)).expect("identity carrier") as u32));
            }
        }
        self.relation(&src, &tgt, &pairs)
    }

    /// Counit `f . f* => 1`: a round trip through the same element collapses to its output.
    pub fn counit_of(&self, f: &Arc<Atom>) -> Result<Cell<M>> {
        let fs = Arc::new(f.transposed(self.base));
        let src = OneCell::new(f.cod, vec![Layer::new(&fs, 0), Layer::new(f, 0)])?;
        let tgt = OneCell::id(f.cod);
        let (cs, ct) = (self.carrier(&src), self.carrier(&tgt));
        let mut pairs = Vec::new();
        for s in 0..cs.len() {
            let ch = cs.choices(s);
            if ch[0] == ch[1] {
                pairs.push((ct.find(cs.out(s)).expect("identity carrier") as u32, s as u32));
            }
        }
        self.relation(&src, &tgt, &pairs)
    }

    /// `pi : 1m* . m1 => m* . m` as the mate of the associator.
    fn pi_mate(&self, g: &Gens<M>) -> Result<Cell<M>> {
        let start = self.seq(2, "m*@1 m@0", &[])?;
        Ok(Paste::new(self, &start).apply_with(2, 0, &g.eta_m)?.apply_with(1, 0, &g.alpha)?.apply_with(0, 1, &g.eps_m)?.finish())
    }

    /// `pi' : m*1 . 1m => m* . m` as the mate of the inverse associator.
    fn pi_prime_mate(&self, g: &Gens<M>) -> Result<Cell<M>> {
        let start = self.seq(2, "m*@0 m@1", &[])?;
        Ok(Paste::new(self, &start).apply_with(2, 0, &g.eta_m)?.apply_with(1, 0, &g.alpha_inv)?.apply_with(0, 0, &g.eps_m)?.finish())
    }

    /// The explicit bijection between the carriers of `1m* . m1` and `m* . m`,
    /// obtained by matching legs.
    pub fn pi_direct(&self) -> Result<Cell<M>> {
        self.structural_iso(&self.seq(2, "m*@1 m@0", &[])?, &self.seq(2, "m@0 m*@0", &[])?)
    }

    pub fn pi_prime_direct(&self) -> Result<Cell<M>> {
        self.structural_iso(&self.seq(2, "m*@0 m@1", &[])?, &self.seq(2, "m@0 m*@0", &[])?)
    }
}

/// Legs and user-layer choices of one carrier element.
pub struct ElemView<'c> {
    pub index: usize,
    pub input: &'c [u32],
    pub out: &'c [u32],
    pub user: Vec<u32>,
}

impl<'c> ElemView<'c> {
    pub fn new(c: &'c Carrier, i: usize, user_pos: &[usize]) -> Self {
        let ch = c.choices(i);
        ElemView { index: i, input: c.input(i), out: c.out(i), user: user_pos.iter().map(|&p| ch[p]).collect() }
    }
}

pub fn user_positions(c: &OneCell) -> Vec<usize> {
    (0..c.len()).filter(|&i| c.layers()[i].atom.kind == Kind::User).collect()
}

impl OneCell {
    /// Append raw layers, checking arities.
    pub fn then_layers(&self, layers: &[Layer]) -> Result<OneCell> {
        let mut v = self.layers().to_vec();
        v.extend(layers.iter().cloned());
        OneCell::new(self.dom(), v)
    }
}

/// Incremental construction of a vertical composite by local rewrites of the
/// current target 1-cell.
pub struct Paste<'a, M: Map> {
    fr: &'a Frob<M>,
    cell: Cell<M>,
}

impl<'a, M: Map> Paste<'a, M> {
    pub fn new(fr: &'a Frob<M>, start: &OneCell) -> Self {
        Paste { fr, cell: fr.id2(start) }
    }

    pub fn from_cell(fr: &'a Frob<M>, cell: Cell<M>) -> Self {
        Paste { fr, cell }
    }

    pub fn current(&self) -> &OneCell {
        &self.cell.tgt
    }

    /// Rewrite the layers `pos..pos+len(src)` of the current target, which must
    /// equal the source of `c` shifted by `off`.
    pub fn apply_with(self, pos: usize, off: usize, c: &Cell<M>) -> Result<Self> {
        let cur = &self.cell.tgt;
        let k = c.src.len();
        let expect = c.src.shifted_layers(off);
        if pos + k > cur.len() || cur.layers()[pos..pos + k] != expect[..] {
            return Err(Error::Composition {
                left: cur.to_string(),
                right: c.src.to_string(),
                detail: format!("no match at layer {pos} with offset {off}"),
            });
        }
        let pre = OneCell::new(cur.dom(), cur.layers()[..pos].to_vec())?;
        let w = self.fr.whisker_at(&pre, off, c, &cur.layers()[pos + k..])?;
        let cell = self.fr.vcomp(&self.cell, &w)?;
        Ok(Paste { fr: self.fr, cell })
    }

    /// Compose with a full 2-cell out of the current target.
    pub fn then(self, c: &Cell<M>) -> Result<Self> {
        let cell = self.fr.vcomp(&self.cell, c)?;
        Ok(Paste { fr: self.fr, cell })
    }

    pub fn reorder(self, tgt: &OneCell) -> Result<Self> {
        let c = self.fr.interchange(&self.cell.tgt, tgt)?;
        self.then(&c)
    }

    pub fn coh(self, tgt: &OneCell) -> Result<Self> {
        let c = self.fr.coh(&self.cell.tgt, tgt)?;
        self.then(&c)
    }

    pub fn coh_perm(self, tgt: &OneCell, perm: &[usize]) -> Result<Self> {
        let c = self.fr.coh_perm(&self.cell.tgt, tgt, perm)?;
        self.then(&c)
    }

    pub fn finish(self) -> Cell<M> {
        self.cell
    }
}
