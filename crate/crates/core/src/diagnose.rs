//! Verdicts on the nine equivalent Hopf conditions for one bimonoid.
//!
//! Conditions (a) to (c) are decided exactly. Conditions (d) to (g) quantify
//! over all 1-cells and all (co)modules; they are tested on free and cofree
//! generators, including the ones the well-pointedness argument relies on,
//! plus random 1-cells. Conditions (h) and (i) reuse the Galois criteria of
//! (e) and (g) and additionally construct and check the comparison Hopf modules.

use crate::antipode::Antipode;
use crate::bimonoid::Bimonoid;
use crate::cell::OneCell;
use crate::error::{Error, Result};
use crate::frob::{Cell, Frob, Preset};
use crate::galois::Side;
use crate::linalg::QMat;
use crate::map::{Map, Witness};
use crate::models::random::random_endo;
use crate::models::Rat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Size cap of the random 1-cells used by `diagnose`.
pub const SAMPLE_CELL_MAX: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    /// `witness` indexes the report's witness list.
    Fails { witness: usize },
    SampledHolds { n: usize },
    NotChecked,
}

impl Verdict {
    /// Holds exactly or on every sample.
    pub fn positive(&self) -> bool {
        matches!(self, Verdict::Holds | Verdict::SampledHolds { .. })
    }
}

/// A 2-cell written out entry by entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellDump {
    pub src: String,
    pub tgt: String,
    /// Carrier elements as `inputs ++ choices`, in canonical order.
    pub src_elements: Vec<Vec<u32>>,
    pub tgt_elements: Vec<Vec<u32>>,
    /// `(target, source, value)` triples.
    pub entries: Vec<(usize, usize, Rat)>,
}

impl CellDump {
    pub fn of<M: Map>(fr: &Frob<M>, c: &Cell<M>) -> CellDump {
        let (cs, ct) = (fr.carrier(&c.src), fr.carrier(&c.tgt));
        CellDump {
            src: c.src.to_string(),
            tgt: c.tgt.to_string(),
            src_elements: (0..cs.len()).map(|i| cs.key(i).to_vec()).collect(),
            tgt_elements: (0..ct.len()).map(|i| ct.key(i).to_vec()).collect(),
            entries: c.map.to_qmat().entries().map(|(t, s, v)| (t, s, Rat(v.clone()))).collect(),
        }
    }

    pub fn matrix(&self) -> QMat {
        QMat::from_entries(self.tgt_elements.len(), self.src_elements.len(), self.entries.iter().map(|(t, s, v)| (*t, *s, v.0.clone())))
    }
}

/// A failed invertibility check, with enough data to re-verify offline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub condition: String,
    pub map: String,
    pub cell: CellDump,
    pub witness: Witness,
}

impl WitnessRecord {
    /// Re-check the witness against the recorded cell alone.
    pub fn replays(&self) -> bool {
        self.cell.matrix().refuted_by(&self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub a: Verdict,
    pub b: Verdict,
    pub c: Verdict,
    pub d: Verdict,
    pub e: Verdict,
    pub f: Verdict,
    pub g: Verdict,
    pub h: Verdict,
    pub i: Verdict,
}

impl Verdicts {
    pub fn all(&self) -> [(&'static str, &Verdict); 9] {
        [("a", &self.a), ("b", &self.b), ("c", &self.c), ("d", &self.d), ("e", &self.e), ("f", &self.f), ("g", &self.g), ("h", &self.h), ("i", &self.i)]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsReport {
    pub model: String,
    pub backend: Preset,
    pub samples: usize,
    pub seed: u64,
    /// The 1-cell `v : I -> M` used for well-pointedness.
    pub well_pointing: String,
    pub verdicts: Verdicts,
    /// What the exact verdicts imply for every condition.
    pub implied: Verdicts,
    pub antipode: Option<CellDump>,
    /// Whether `σ⁻.σ` is the identity up to the canonical `a⁻⁻ ≅ a`.
    pub antipode_involutive: Option<bool>,
    pub witnesses: Vec<WitnessRecord>,
    /// Comparison Hopf modules built and checked.
    pub hopf_modules_checked: usize,
}

impl DiagnosticsReport {
    /// The common value of the exact verdicts.
    pub fn is_hopf(&self) -> bool {
        self.verdicts.a.positive()
    }

    pub fn all_positive(&self) -> bool {
        self.verdicts.all().iter().all(|(_, v)| v.positive())
    }
}

/// The registered well-pointing 1-cell for a preset, if any.
pub fn well_pointing(p: &Preset) -> Option<&'static str> {
    match p {
        Preset::Span { .. } | Preset::GvecCommutative { .. } => Some("v = u"),
        Preset::GvecWeak { .. } => Some("v = the ring map I -> R^op R"),
    }
}

struct Collector<'f, M: Map> {
    fr: &'f Frob<M>,
    witnesses: Vec<WitnessRecord>,
}

impl<M: Map> Collector<'_, M> {
    /// Check invertibility of each cell; stop at the first failure.
    fn sampled(&mut self, condition: &str, cells: impl IntoIterator<Item = Result<(String, Cell<M>)>>) -> Result<Verdict> {
        let mut n = 0;
        for c in cells {
            let (what, cell) = c?;
            if let Err(w) = self.fr.try_invert(&cell) {
                return Ok(self.fail(condition, what, &cell, w));
            }
            n += 1;
        }
        Ok(Verdict::SampledHolds { n })
    }

    fn exact(&mut self, condition: &str, what: &str, cell: &Cell<M>) -> Verdict {
        match self.fr.try_invert(cell) {
            Ok(_) => Verdict::Holds,
            Err(w) => self.fail(condition, what.into(), cell, w),
        }
    }

    fn fail(&mut self, condition: &str, map: String, cell: &Cell<M>, witness: Witness) -> Verdict {
        self.witnesses.push(WitnessRecord { condition: condition.into(), map, cell: CellDump::of(self.fr, cell), witness });
        Verdict::Fails { witness: self.witnesses.len() - 1 }
    }
}

impl<M: Map> Frob<M> {
    /// `σ⁻.σ` followed by the canonical `a⁻⁻ ≅ a`.
    pub fn antipode_square(&self, b: &Bimonoid<M>, sigma: &Cell<M>) -> Result<Cell<M>> {
        let two = self.vcomp(sigma, &self.minus2(sigma)?)?;
        self.vcomp(&two, &self.coh(&two.tgt, &b.a)?)
    }

    /// The 1-cell `y = w1.m*.u.u*` with `w = u*.m.v1` from the copointed
    /// half of the well-pointedness argument.
    pub fn copointed_generator(&self) -> Result<OneCell> {
        self.seq(1, "u* u m* u@0 m@0 u*@0", &[])
    }

    /// Diagnose all nine conditions. `samples` random 1-cells are drawn from
    /// a generator seeded with `seed`.
    pub fn diagnose(&self, b: &Bimonoid<M>, samples: usize, seed: u64) -> Result<DiagnosticsReport> {
        let Some(wp) = well_pointing(&self.preset) else {
            return Err(Error::Refused("no well-pointing 1-cell is registered for this backend, so Galois invertibility cannot imply the Hopf property".into()));
        };
        assert!(M::IDEMPOTENTS_SPLIT, "idempotent 2-cells must split in the backend");
        let mut col = Collector { fr: self, witnesses: Vec::new() };
        let (i, j) = (self.unit_i(), self.unit_j());

        let antipode = self.antipode_solve(b)?;
        let beta = self.hopf_map(b)?;
        let zeta = self.cohopf_map(b)?;
        let va = match &antipode {
            Antipode::Found(_) => Verdict::Holds,
            Antipode::Missing(w) => col.fail("a", "Hopf map (no antipode)".into(), &beta, w.clone()),
        };
        let vb = col.exact("b", "Hopf map", &beta);
        let vc = col.exact("c", "co-Hopf map", &zeta);
        if va.positive() != vb.positive() || vb.positive() != vc.positive() {
            return Err(Error::Disagreement(format!("exact verdicts disagree: antipode {}, Hopf map {}, co-Hopf map {}", va.positive(), vb.positive(), vc.positive())));
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut xs = vec![("i".to_string(), i.clone()), ("j".to_string(), j.clone())];
        let mut ys = vec![("i".to_string(), i.clone()), ("j".to_string(), j.clone())];
        for k in 0..samples {
            xs.push((format!("x{k}"), random_endo(self, &mut rng, &format!("x{k}"), SAMPLE_CELL_MAX)?));
            ys.push((format!("y{k}"), random_endo(self, &mut rng, &format!("y{k}"), SAMPLE_CELL_MAX)?));
        }
        let mut module_gens = ys.clone();
        module_gens.push(("w".into(), self.copointed_generator()?));

        let free = |y: &OneCell, side| self.free_module(b, y, side);
        let cofree = |y: &OneCell, side| self.cofree_comodule(b, y, side);
        let pair = |k: usize| (&xs[k % xs.len()], &ys[k % ys.len()], &module_gens[k % module_gens.len()]);
        let rounds = xs.len().max(module_gens.len());

        let vd = col.sampled(
            "d",
            (0..rounds).flat_map(|k| {
                let ((xn, x), (yn, y), (qn, q)) = pair(k);
                [
                    free(q, Side::Right).and_then(|m| Ok((format!("Galois map with q = {qn}•a, x = {xn}"), self.galois_map(b, &m, x)?))),
                    free(q, Side::Right).and_then(|m| {
                        let c = cofree(y, Side::Left)?;
                        Ok((format!("right canonical map with q = {qn}•a, p = a∘{yn}, x = {xn}"), self.can_right(b, &m, &c, x)?))
                    }),
                ]
            }),
        )?;
        let ve = col.sampled(
            "e",
            module_gens.iter().map(|(qn, q)| free(q, Side::Right).and_then(|m| Ok((format!("Galois map with q = {qn}•a, x = j"), self.galois_map(b, &m, &j)?)))),
        )?;
        let vf = col.sampled(
            "f",
            (0..rounds).flat_map(|k| {
                let ((xn, x), (yn, y), (qn, q)) = pair(k);
                [
                    cofree(y, Side::Right).and_then(|c| Ok((format!("co-Galois map with p = {yn}∘a, x = {xn}"), self.cogalois_map(b, &c, x)?))),
                    cofree(y, Side::Right).and_then(|c| {
                        let m = free(q, Side::Left)?;
                        Ok((format!("left canonical map with q = a•{qn}, p = {yn}∘a, x = {xn}"), self.can_left(b, &m, &c, x)?))
                    }),
                ]
            }),
        )?;
        let vg = col.sampled(
            "g",
            ys.iter().map(|(yn, y)| cofree(y, Side::Right).and_then(|c| Ok((format!("co-Galois map with p = {yn}∘a, x = i"), self.cogalois_map(b, &c, &i)?)))),
        )?;

        let mut hopf_modules = 0;
        for (_, x) in &xs {
            let (p, rho) = self.cofree_j_comodule(x)?;
            self.validate_hopf_module(b, &self.comparison_k(b, &p, &rho)?)?;
            let fi = self.free_module(&self.trivial_i(), x, Side::Right)?;
            self.validate_hopf_module(b, &self.comparison_k_prime(b, &fi.q, &fi.action)?)?;
            hopf_modules += 2;
        }
        let vh = ve.clone();
        let vi = vg.clone();

        let exact = va.positive();
        for (name, v) in [("d", &vd), ("e", &ve), ("f", &vf), ("g", &vg)] {
            if v.positive() != exact {
                return Err(Error::Disagreement(format!("condition ({name}) is {} on the samples while the exact verdicts say {exact}", v.positive())));
            }
        }
        let implied_one = if exact { Verdict::Holds } else { Verdict::NotChecked };
        let implied = |v: &Verdict| match v {
            Verdict::Fails { .. } => v.clone(),
            _ => implied_one.clone(),
        };
        let verdicts = Verdicts { a: va, b: vb, c: vc, d: vd, e: ve, f: vf, g: vg, h: vh, i: vi };
        let implied = Verdicts {
            a: implied(&verdicts.a),
            b: implied(&verdicts.b),
            c: implied(&verdicts.c),
            d: implied(&verdicts.d),
            e: implied(&verdicts.e),
            f: implied(&verdicts.f),
            g: implied(&verdicts.g),
            h: implied(&verdicts.h),
            i: implied(&verdicts.i),
        };

        let (dump, involutive) = match &antipode {
            Antipode::Found(s) => (Some(CellDump::of(self, s)), self.antipode_square(b, s).ok().map(|c| self.is_identity(&c))),
            Antipode::Missing(_) => (None, None),
        };
        Ok(DiagnosticsReport {
            model: b.name.clone(),
            backend: self.preset,
            samples,
            seed,
            well_pointing: wp.into(),
            verdicts,
            implied,
            antipode: dump,
            antipode_involutive: involutive,
            witnesses: col.witnesses,
            hopf_modules_checked: hopf_modules,
        })
    }
}
