//! Backend payloads of 2-cells. A payload relates the carrier of the target
//! (rows) to the carrier of the source (columns).

use crate::error::Error;
use crate::linalg::{q_to_string, qvec_serde, QMat, Singular, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Evidence that a 2-cell has no inverse. Indices refer to carrier elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A source element outside the image of the underlying function.
    Unhit { element: usize },
    /// A source element hit by two distinct target elements.
    Collision { element: usize, preimages: [usize; 2] },
    Kernel {
        #[serde(with = "qvec_serde")]
        vector: Vec<(usize, Q)>,
    },
    Cokernel {
        #[serde(with = "qvec_serde")]
        vector: Vec<(usize, Q)>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[(usize, Q)]| v.iter().map(|(i, x)| format!("{}e{i}", q_to_string(x))).collect::<Vec<_>>().join(" + ");
        match self {
            Witness::Unhit { element } => write!(f, "element {element} has no preimage"),
            Witness::Collision { element, preimages } => write!(f, "element {element} has preimages {} and {}", preimages[0], preimages[1]),
            Witness::Kernel { vector } => write!(f, "kernel vector {}", show(vector)),
            Witness::Cokernel { vector } => write!(f, "cokernel vector {}", show(vector)),
        }
    }
}

/// Index bookkeeping for whiskering: every element of the whiskered source
/// (target) splits into a context id and an element of the inner source (target).
pub struct WhiskerPlan {
    pub src_split: Vec<(u32, u32)>,
    pub tgt_split: Vec<(u32, u32)>,
    pub src_join: HashMap<(u32, u32), u32>,
    pub tgt_join: HashMap<(u32, u32), u32>,
}

pub trait Map: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    const BACKEND: &'static str;
    /// Idempotent 2-cells split (through their image).
    const IDEMPOTENTS_SPLIT: bool;
    fn identity(n: usize) -> Self;
    /// Build from a 0/1 relation given as `(target, source)` pairs.
    fn from_relation(rows: usize, cols: usize, pairs: &[(u32, u32)]) -> Result<Self, Error>;
    /// Build from weighted `(target, source, value)` entries; zero values are dropped.
    fn from_weighted(rows: usize, cols: usize, entries: Vec<(u32, u32, Q)>) -> Result<Self, Error>;
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    /// Vertical composite: `self` first, then `next`.
    fn then(&self, next: &Self) -> Self;
    fn whisker(&self, plan: &WhiskerPlan) -> Self;
    fn inverse(&self) -> Result<Self, Witness>;
    fn is_identity(&self) -> bool;
    /// The linear map induced on free vector spaces.
    fn to_qmat(&self) -> QMat;

    /// True when the witness really shows non-invertibility of `self`.
    fn refuted_by(&self, w: &Witness) -> bool {
        let m = self.to_qmat();
        match w {
            Witness::Kernel { vector } => {
                let mut v = vec![Q::zero(); m.cols()];
                for (i, x) in vector {
                    if *i >= v.len() {
                        return false;
                    }
                    v[*i] = x.clone();
                }
                v.iter().any(|x| !x.is_zero()) && m.apply(&v).iter().all(Zero::is_zero)
            }
            Witness::Cokernel { vector } => {
                let mut v = vec![Q::zero(); m.rows()];
                for (i, x) in vector {
                    if *i >= v.len() {
                        return false;
                    }
                    v[*i] = x.clone();
                }
                v.iter().any(|x| !x.is_zero()) && m.apply_left(&v).iter().all(Zero::is_zero)
            }
            Witness::Unhit { element } => *element < m.cols() && m.col(*element).is_empty(),
            Witness::Collision { element, preimages } => {
                *element < m.cols() && preimages[0] != preimages[1] && preimages.iter().all(|&p| !m.get(p, *element).is_zero())
            }
        }
    }
}

/// Span payload: a function from target elements to source elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FnMap {
    src_len: usize,
    f: Vec<u32>,
}

impl fmt::Debug for FnMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FnMap({} -> {}) {:?}", self.f.len(), self.src_len, self.f)
    }
}

impl FnMap {
    pub fn new(src_len: usize, f: Vec<u32>) -> Result<Self, Error> {
        if let Some(t) = f.iter().position(|&s| s as usize >= src_len) {
            return Err(Error::Shape(format!("function sends {t} outside a source of size {src_len}")));
        }
        Ok(FnMap { src_len, f })
    }

    pub fn image(&self, t: usize) -> usize {
        self.f[t] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.f
    }
}

impl Map for FnMap {
    const BACKEND: &'static str = "span";
    const IDEMPOTENTS_SPLIT: bool = true;

    fn identity(n: usize) -> Self {
        FnMap { src_len: n, f: (0..n as u32).collect() }
    }

    fn from_relation(rows: usize, cols: usize, pairs: &[(u32, u32)]) -> Result<Self, Error> {
        let mut f = vec![u32::MAX; rows];
        for &(t, s) in pairs {
            if f[t as usize] != u32::MAX && f[t as usize] != s {
                return Err(Error::Invalid(format!("relation is not a function: element {t} has several images")));
            }
            f[t as usize] = s;
        }
        if let Some(t) = f.iter().position(|&s| s == u32::MAX) {
            return Err(Error::Invalid(format!("relation is not a function: element {t} has no image")));
        }
        FnMap::new(cols, f)
    }

    fn from_weighted(rows: usize, cols: usize, entries: Vec<(u32, u32, Q)>) -> Result<Self, Error> {
        let mut pairs = Vec::with_capacity(entries.len());
        for (t, s, v) in entries {
            if v.is_zero() {
                continue;
            }
            if !v.is_one() {
                return Err(Error::Invalid(format!("span cells carry no coefficients, found {} at ({t}, {s})", q_to_string(&v))));
            }
            pairs.push((t, s));
        }
        Self::from_relation(rows, cols, &pairs)
    }

    fn rows(&self) -> usize {
        self.f.len()
    }

    fn cols(&self) -> usize {
        self.src_len
    }

    fn then(&self, next: &Self) -> Self {
        assert_eq!(self.f.len(), next.src_len, "vertical composite shape mismatch");
        FnMap { src_len: self.src_len, f: next.f.iter().map(|&b| self.f[b as usize]).collect() }
    }

    fn whisker(&self, plan: &WhiskerPlan) -> Self {
        let f = plan
            .tgt_split
            .iter()
            .map(|&(ctx, b)| *plan.src_join.get(&(ctx, self.f[b as usize])).expect("whiskered function stays leg compatible"))
            .collect();
        FnMap { src_len: plan.src_split.len(), f }
    }

    fn inverse(&self) -> Result<Self, Witness> {
        let mut inv = vec![u32::MAX; self.src_len];
        for (t, &s) in self.f.iter().enumerate() {
            let slot = &mut inv[s as usize];
            if *slot != u32::MAX {
                return Err(Witness::Collision { element: s as usize, preimages: [*slot as usize, t] });
            }
            *slot = t as u32;
        }
        if let Some(s) = inv.iter().position(|&t| t == u32::MAX) {
            return Err(Witness::Unhit { element: s });
        }
        Ok(FnMap { src_len: self.f.len(), f: inv })
    }

    fn is_identity(&self) -> bool {
        self.src_len == self.f.len() && self.f.iter().enumerate().all(|(i, &s)| i as u32 == s)
    }

    fn to_qmat(&self) -> QMat {
        QMat::from_entries(self.f.len(), self.src_len, self.f.iter().enumerate().map(|(t, &s)| (t, s as usize, Q::one())))
    }
}

impl Map for QMat {
    const BACKEND: &'static str = "gvec";
    const IDEMPOTENTS_SPLIT: bool = true;

    fn identity(n: usize) -> Self {
        QMat::identity(n)
    }

    fn from_relation(rows: usize, cols: usize, pairs: &[(u32, u32)]) -> Result<Self, Error> {
        Ok(QMat::from_entries(rows, cols, pairs.iter().map(|&(t, s)| (t as usize, s as usize, Q::one()))))
    }

    fn from_weighted(rows: usize, cols: usize, entries: Vec<(u32, u32, Q)>) -> Result<Self, Error> {
        Ok(QMat::from_entries(rows, cols, entries.into_iter().map(|(t, s, v)| (t as usize, s as usize, v))))
    }

    fn rows(&self) -> usize {
        QMat::rows(self)
    }

    fn cols(&self) -> usize {
        QMat::cols(self)
    }

    fn then(&self, next: &Self) -> Self {
        next.mul(self)
    }

    fn whisker(&self, plan: &WhiskerPlan) -> Self {
        let mut entries = Vec::new();
        for (s, &(ctx, a)) in plan.src_split.iter().enumerate() {
            for (b, v) in self.col(a as usize) {
                let t = *plan.tgt_join.get(&(ctx, *b)).expect("whiskered matrix stays leg compatible");
                entries.push((t as usize, s, v.clone()));
            }
        }
        QMat::from_entries(plan.tgt_split.len(), plan.src_split.len(), entries)
    }

    fn inverse(&self) -> Result<Self, Witness> {
        QMat::inverse(self).map_err(|e| match e {
            Singular::Kernel(vector) => Witness::Kernel { vector },
            Singular::Cokernel(vector) => Witness::Cokernel { vector },
        })
    }

    fn is_identity(&self) -> bool {
        QMat::is_identity(self)
    }

    fn to_qmat(&self) -> QMat {
        self.clone()
    }
}
