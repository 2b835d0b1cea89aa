//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines always reach the terminal.

use duoidal::antipode::Antipode;
use duoidal::bimonoid::Bimonoid;
use duoidal::diagnose::{CellDump, DiagnosticsReport, WitnessRecord};
use duoidal::frob::{user_positions, ElemView};
use duoidal::models::algebra::{cyclic_table, group_inverses, idempotent_table, monoid_algebra, s3_table, sweedler};
use duoidal::models::random::random_endo;
use duoidal::models::{corpus, random_categories, Category, CorpusEntry, ModelSpec, StructureConstants};
use duoidal::suites::{run_suite, Backend, Suite};
use duoidal::{Cell, Frob, GvecFrob, Map, Preset, SpanFrob, Witness};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

type Outcome = Result<String, String>;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Groupoid check straight from the composition table.
fn groupoid_oracle(c: &Category) -> bool {
    let d = &c.data;
    let comp: HashMap<(usize, usize), usize> = d.compose.iter().map(|&[f, g, h]| ((f, g), h)).collect();
    (0..d.arrows.len()).all(|f| {
        let (s, t) = (d.arrows[f].src, d.arrows[f].tgt);
        (0..d.arrows.len()).any(|g| comp.get(&(f, g)) == Some(&d.identities[s]) && comp.get(&(g, f)) == Some(&d.identities[t]))
    })
}

fn exact_flags(rep: &DiagnosticsReport) -> [bool; 3] {
    [rep.verdicts.a.positive(), rep.verdicts.b.positive(), rep.verdicts.c.positive()]
}

fn criterion1() -> Outcome {
    let cats = random_categories(101, 200);
    let (mut groupoids, mut others) = (0, 0);
    for (k, c) in cats.iter().enumerate() {
        let fr_k = SpanFrob::span(c.data.objects).map_err(|e| e.to_string())?;
        let b = c.bimonoid(&fr_k).map_err(|e| format!("category {k}: {e}"))?;
        let rep = fr_k.diagnose(&b, 0, k as u64).map_err(|e| format!("category {k}: {e}"))?;
        let expect = groupoid_oracle(c);
        if exact_flags(&rep) != [expect; 3] {
            return Err(format!("category {k}: verdicts {:?}, groupoid {expect}", exact_flags(&rep)));
        }
        if expect {
            groupoids += 1
        } else {
            others += 1
        }
    }
    if groupoids == 0 || others == 0 {
        return Err(format!("degenerate sample: {groupoids} groupoids, {others} others"));
    }
    Ok(format!("200 categories agree ({groupoids} groupoids, {others} not)"))
}

fn three_verdicts<M: Map>(fr: &Frob<M>, b: &Bimonoid<M>) -> Result<[bool; 3], String> {
    let s = fr.antipode_solve(b).map_err(|e| e.to_string())?.cell().is_some();
    let beta = fr.hopf_map(b).map_err(|e| e.to_string())?;
    let zeta = fr.cohopf_map(b).map_err(|e| e.to_string())?;
    Ok([s, fr.try_invert(&beta).is_ok(), fr.try_invert(&zeta).is_ok()])
}

fn for_corpus(seed: u64, random: usize, mut span: impl FnMut(&CorpusEntry, &SpanFrob) -> Result<(), String>, mut gvec: impl FnMut(&CorpusEntry, &GvecFrob) -> Result<(), String>) -> Result<usize, String> {
    let mut frames_s: HashMap<usize, SpanFrob> = HashMap::new();
    let mut frames_g: HashMap<usize, GvecFrob> = HashMap::new();
    let entries = corpus(seed, random);
    for e in &entries {
        match e.preset {
            Preset::Span { size } => {
                if !frames_s.contains_key(&size) {
                    frames_s.insert(size, SpanFrob::span(size).map_err(|x| x.to_string())?);
                }
                span(e, &frames_s[&size]).map_err(|m| format!("{}: {m}", e.name()))?
            }
            Preset::GvecCommutative { n } => {
                if !frames_g.contains_key(&n) {
                    frames_g.insert(n, GvecFrob::gvec_commutative(n).map_err(|x| x.to_string())?);
                }
                gvec(e, &frames_g[&n]).map_err(|m| format!("{}: {m}", e.name()))?
            }
            Preset::GvecWeak { .. } => unreachable!("the corpus has no weak entries"),
        }
    }
    Ok(entries.len())
}

fn criterion2() -> Outcome {
    fn check<M: Map>(e: &CorpusEntry, fr: &Frob<M>) -> Result<(), String> {
        let b = e.spec.build(fr).map_err(|x| x.to_string())?;
        let v = three_verdicts(fr, &b)?;
        if v[0] == v[1] && v[1] == v[2] {
            Ok(())
        } else {
            Err(format!("verdicts {v:?}"))
        }
    }
    let n = for_corpus(3, 15, check, check)?;
    Ok(format!("{n} corpus entries"))
}

fn criterion3() -> Outcome {
    fn check<M: Map>(e: &CorpusEntry, fr: &Frob<M>) -> Result<(), String> {
        let b = e.spec.build(fr).map_err(|x| x.to_string())?;
        fr.transform_identity(&b).map_err(|x| x.to_string())
    }
    let n = for_corpus(5, 15, check, check)?;
    Ok(format!("{n} corpus entries"))
}

/// Solve a linear system over `Q` by Gauss-Jordan elimination; `None` unless
/// the solution exists and is unique.
fn solve_unique(mut rows: Vec<(Vec<BigRational>, BigRational)>, vars: usize) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..vars {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else { continue };
        rows.swap(top, p);
        let inv = BigRational::one() / rows[top].0[col].clone();
        for x in rows[top].0.iter_mut() {
            *x *= inv.clone();
        }
        rows[top].1 *= inv;
        for i in 0..rows.len() {
            if i != top && !rows[i].0[col].is_zero() {
                let f = rows[i].0[col].clone();
                let (pv, pb) = rows[top].clone();
                for (x, y) in rows[i].0.iter_mut().zip(pv) {
                    *x -= f.clone() * y;
                }
                rows[i].1 -= f * pb;
            }
        }
        pivots.push(col);
        top += 1;
    }
    if rows[top..].iter().any(|(_, b)| !b.is_zero()) || pivots.len() < vars {
        return None;
    }
    let mut x = vec![BigRational::zero(); vars];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i].1.clone();
    }
    Some(x)
}

/// The convolution inverse of the identity: `S[t][s]` with `S(e_s) = Σ S[t][s] e_t`,
/// from `m(S⊗1)Δ = uε = m(1⊗S)Δ`.
fn convolution_inverse(sc: &StructureConstants) -> Option<Vec<Vec<BigRational>>> {
    let d = sc.dim();
    let var = |t: usize, s: usize| t * d + s;
    let unit: Vec<BigRational> = {
        let mut u = vec![BigRational::zero(); d];
        for (_, _, z, c) in &sc.unit {
            u[*z] += c.0.clone();
        }
        u
    };
    let eps = |z: usize| sc.counit.iter().filter(|(w, _)| *w == z).fold(BigRational::zero(), |acc, (_, c)| acc + c.0.clone());
    let mut rows = Vec::new();
    for left in [true, false] {
        for z in 0..d {
            for w in 0..d {
                let mut row = vec![BigRational::zero(); d * d];
                for (zz, x, y, c) in &sc.comul {
                    if *zz != z {
                        continue;
                    }
                    for (p, q2, out, c2) in &sc.mul {
                        if *out != w {
                            continue;
                        }
                        // left: S(x)·y, so p ranges over S's output and q2 = y
                        if left && *q2 == *y {
                            row[var(*p, *x)] += c.0.clone() * c2.0.clone();
                        }
                        if !left && *p == *x {
                            row[var(*q2, *y)] += c.0.clone() * c2.0.clone();
                        }
                    }
                }
                rows.push((row, eps(z) * unit[w].clone()));
            }
        }
    }
    let x = solve_unique(rows, d * d)?;
    Some((0..d).map(|t| (0..d).map(|s| x[var(t, s)].clone()).collect()).collect())
}

/// `σ` as a basis matrix, reading basis indices off the user layer.
fn antipode_matrix(fr: &GvecFrob, b: &Bimonoid<duoidal::QMat>, sigma: &Cell<duoidal::QMat>, d: usize) -> Vec<Vec<BigRational>> {
    let (cs, ct) = (fr.carrier(&b.a), fr.carrier(&sigma.tgt));
    let (ps, pt) = (user_positions(&b.a), user_positions(&sigma.tgt));
    let mut out = vec![vec![BigRational::zero(); d]; d];
    for (t, s, v) in sigma.map.entries() {
        let (es, et) = (ElemView::new(&cs, s, &ps), ElemView::new(&ct, t, &pt));
        out[et.user[0] as usize][es.user[0] as usize] += v.clone();
    }
    out
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())).collect()).collect()
}

fn is_unit_matrix(a: &[Vec<BigRational>]) -> bool {
    a.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| *x == if i == j { r(1) } else { r(0) }))
}

fn criterion4() -> Outcome {
    let fr = GvecFrob::gvec_commutative(1).map_err(|e| e.to_string())?;
    let groups = [("QZ2", cyclic_table(2)), ("QZ3", cyclic_table(3)), ("QS3", s3_table())];
    let mut cases: Vec<(&str, StructureConstants, Option<Vec<usize>>)> = groups.iter().map(|(n, t)| (*n, monoid_algebra(t).unwrap(), group_inverses(t))).collect();
    cases.push(("sweedler", sweedler(), None));
    for (name, sc, inverses) in &cases {
        let b = sc.bimonoid(&fr, name).map_err(|e| e.to_string())?;
        let Antipode::Found(sigma) = fr.antipode_solve(&b).map_err(|e| e.to_string())? else {
            return Err(format!("{name}: no antipode"));
        };
        let got = antipode_matrix(&fr, &b, &sigma, sc.dim());
        let want = convolution_inverse(sc).ok_or(format!("{name}: oracle has no unique solution"))?;
        if got != want {
            return Err(format!("{name}: antipode differs from the convolution inverse"));
        }
        if let Some(inv) = inverses {
            for (s, &t) in inv.iter().enumerate() {
                for t2 in 0..sc.dim() {
                    if got[t2][s] != if t2 == t { r(1) } else { r(0) } {
                        return Err(format!("{name}: antipode is not the inversion map at {s}"));
                    }
                }
            }
        }
        if *name == "sweedler" {
            let sq = fr.antipode_square(&b, &sigma).map_err(|e| e.to_string())?;
            let four = fr.vcomp(&sq, &sq).map_err(|e| e.to_string())?;
            if fr.is_identity(&sq) || !fr.is_identity(&four) {
                return Err("sweedler: expected σ² ≠ id and σ⁴ = id".into());
            }
            let sq_m = mat_mul(&want, &want);
            if is_unit_matrix(&sq_m) || !is_unit_matrix(&mat_mul(&sq_m, &sq_m)) {
                return Err("sweedler: oracle order is not 4".into());
            }
        }
    }
    Ok("QZ2, QZ3, QS3, Sweedler match the convolution inverse; Sweedler has order 4".into())
}

/// Replays a witness against the dumped cell with plain sparse arithmetic.
fn replay(rec: &WitnessRecord) -> bool {
    let d: &CellDump = &rec.cell;
    let (rows, cols) = (d.tgt_elements.len(), d.src_elements.len());
    let entry: HashMap<(usize, usize), BigRational> = d.entries.iter().map(|(t, s, v)| ((*t, *s), v.0.clone())).collect();
    let at = |t: usize, s: usize| entry.get(&(t, s)).cloned().unwrap_or_else(BigRational::zero);
    match &rec.witness {
        Witness::Kernel { vector } => {
            !vector.is_empty()
                && vector.iter().all(|(i, x)| *i < cols && !x.is_zero())
                && (0..rows).all(|t| vector.iter().fold(BigRational::zero(), |acc, (s, x)| acc + at(t, *s) * x.clone()).is_zero())
        }
        Witness::Cokernel { vector } => {
            !vector.is_empty()
                && vector.iter().all(|(i, x)| *i < rows && !x.is_zero())
                && (0..cols).all(|s| vector.iter().fold(BigRational::zero(), |acc, (t, x)| acc + x.clone() * at(*t, s)).is_zero())
        }
        Witness::Unhit { element } => *element < cols && (0..rows).all(|t| at(t, *element).is_zero()),
        Witness::Collision { element, preimages } => *element < cols && preimages[0] != preimages[1] && preimages.iter().all(|&t| t < rows && !at(t, *element).is_zero()),
    }
}

fn all_fail(name: &str, rep: &DiagnosticsReport) -> Result<(), String> {
    let v = &rep.verdicts;
    for (c, verdict) in [("a", &v.a), ("b", &v.b), ("c", &v.c), ("d", &v.d), ("e", &v.e), ("f", &v.f), ("g", &v.g)] {
        if verdict.positive() {
            return Err(format!("{name}: condition ({c}) holds"));
        }
    }
    if rep.witnesses.is_empty() || !rep.witnesses.iter().all(|w| replay(w) && w.replays()) {
        return Err(format!("{name}: witnesses do not replay"));
    }
    Ok(())
}

fn criterion5() -> Outcome {
    let g = GvecFrob::gvec_commutative(1).map_err(|e| e.to_string())?;
    let b = monoid_algebra(&idempotent_table()).and_then(|sc| sc.bimonoid(&g, "Q{1,e}")).map_err(|e| e.to_string())?;
    let rep = g.diagnose(&b, 3, 11).map_err(|e| e.to_string())?;
    all_fail("Q{1,e}", &rep)?;
    let mut n = rep.witnesses.len();
    let s = SpanFrob::span(2).map_err(|e| e.to_string())?;
    let b = Category::walking_arrow().bimonoid(&s).map_err(|e| e.to_string())?;
    let rep = s.diagnose(&b, 3, 11).map_err(|e| e.to_string())?;
    all_fail("walking arrow (span)", &rep)?;
    n += rep.witnesses.len();
    let g2 = GvecFrob::gvec_commutative(2).map_err(|e| e.to_string())?;
    let b = ModelSpec::WalkingArrow.build(&g2).map_err(|e| e.to_string())?;
    let rep = g2.diagnose(&b, 3, 11).map_err(|e| e.to_string())?;
    all_fail("walking arrow (gvec)", &rep)?;
    n += rep.witnesses.len();
    Ok(format!("{n} witnesses replayed"))
}

fn trivial_antipodes<M: Map>(fr: &Frob<M>) -> Result<(), String> {
    let i = fr.antipode_solve(&fr.trivial_i()).map_err(|e| e.to_string())?;
    let j = fr.antipode_solve(&fr.trivial_j().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if i.cell() != Some(&fr.xi0_dual().map_err(|e| e.to_string())?) {
        return Err("antipode(i) differs from Ξ₀".into());
    }
    if j.cell() != Some(&fr.upsilon0().map_err(|e| e.to_string())?) {
        return Err("antipode(j) differs from Υ₀".into());
    }
    Ok(())
}

fn criterion6() -> Outcome {
    for n in 1..=3 {
        trivial_antipodes(&SpanFrob::span(n).map_err(|e| e.to_string())?).map_err(|m| format!("span({n}): {m}"))?;
        trivial_antipodes(&GvecFrob::gvec_commutative(n).map_err(|e| e.to_string())?).map_err(|m| format!("gvec({n}): {m}"))?;
    }
    Ok("span and gvec at sizes 1 to 3".into())
}

fn criterion7() -> Outcome {
    fn laws<M: Map>(fr: &Frob<M>, e: &CorpusEntry) -> Result<bool, String> {
        let b = e.spec.build(fr).map_err(|x| x.to_string())?;
        match fr.antipode_solve(&b).map_err(|x| x.to_string())? {
            Antipode::Found(s) => fr.antipode_morphism_check(&b, &s).map(|_| true).map_err(|x| x.to_string()),
            Antipode::Missing(_) => Ok(false),
        }
    }
    let (mut found_s, mut found_g) = (0, 0);
    let n = for_corpus(
        7,
        15,
        |e, fr| {
            found_s += laws(fr, e)? as usize;
            Ok(())
        },
        |e, fr| {
            found_g += laws(fr, e)? as usize;
            Ok(())
        },
    )?;
    Ok(format!("{} of {n} corpus entries have an antipode; all four laws hold", found_s + found_g))
}

fn suites(list: &[Suite], count: usize, seed: u64) -> Outcome {
    let mut parts = Vec::new();
    for &suite in list {
        for backend in Backend::ALL {
            let rep = run_suite(suite, backend, count, seed).map_err(|e| format!("{suite} on {backend:?}: {e}"))?;
            if rep.instances < count {
                return Err(format!("{suite} on {backend:?}: only {} instances", rep.instances));
            }
            if !rep.passed() {
                return Err(format!("{suite} on {backend:?}: {}", rep.failures.join("; ")));
            }
            parts.push(format!("{suite}/{backend:?} {}", rep.instances));
        }
    }
    Ok(parts.join(", "))
}

fn criterion8() -> Outcome {
    suites(&[Suite::Lemma45, Suite::Lemma46, Suite::Duality, Suite::Figure1], 20, 8)
}

fn criterion9() -> Outcome {
    let fr = GvecFrob::gvec_commutative(2).map_err(|e| e.to_string())?;
    let e = |x: duoidal::Error| x.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut comodules = Vec::new();
    for k in 0..10 {
        let x = random_endo(&fr, &mut rng, &format!("x{k}"), 3).map_err(e)?;
        let unit = fr.trivial_unit_at(&x).map_err(e)?;
        if fr.try_invert(&unit).is_err() {
            return Err(format!("unit at cofree comodule {k} is not invertible"));
        }
        let counit = fr.trivial_counit_at(&x).map_err(e)?;
        if fr.try_invert(&counit).is_err() {
            return Err(format!("counit at free module {k} is not invertible"));
        }
        comodules.push(fr.cofree_j_comodule(&x).map_err(e)?);
    }
    for k in 0..10 {
        let (p, p2, p3) = (&comodules[k], &comodules[(k + 1) % 10], &comodules[(k + 3) % 10]);
        let cell = fr.trivial_binary_cell((&p.0, &p.1), &p2.0).map_err(e)?;
        if fr.try_invert(&cell).is_err() {
            return Err(format!("binary cell {k} is not invertible"));
        }
        fr.trivial_binary_assoc((&p.0, &p.1), (&p2.0, &p2.1), (&p3.0, &p3.1)).map_err(|x| format!("triple {k}: {x}"))?;
    }
    Ok("10 units, 10 counits, 10 binary cells and triples".into())
}

fn criterion10() -> Outcome {
    for (k, c) in random_categories(1010, 25).iter().enumerate() {
        let objects = c.data.objects;
        let spec = ModelSpec::Category { category: c.data.clone() };
        let s = SpanFrob::span(objects).map_err(|e| e.to_string())?;
        let g = GvecFrob::gvec_commutative(objects).map_err(|e| e.to_string())?;
        let rs = s.diagnose(&spec.build(&s).map_err(|e| e.to_string())?, 1, k as u64).map_err(|e| format!("category {k} span: {e}"))?;
        let rg = g.diagnose(&spec.build(&g).map_err(|e| e.to_string())?, 1, k as u64).map_err(|e| format!("category {k} gvec: {e}"))?;
        let flags = |r: &DiagnosticsReport| r.verdicts.all().map(|(_, v)| v.positive());
        if flags(&rs) != flags(&rg) {
            return Err(format!("category {k}: span {:?} vs gvec {:?}", flags(&rs), flags(&rg)));
        }
    }
    Ok("25 categories".into())
}

fn criterion11() -> Outcome {
    suites(&[Suite::Coherence], 50, 11)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("exact verdicts match the groupoid oracle", criterion1),
        ("three exact verdicts agree on the corpus", criterion2),
        ("transform of the Hopf map is the identity", criterion3),
        ("antipodes match the convolution inverse", criterion4),
        ("non-Hopf models fail with replayable witnesses", criterion5),
        ("trivial antipodes", criterion6),
        ("antipode anti-homomorphism laws", criterion7),
        ("lemma, duality and figure diagrams", criterion8),
        ("trivial equivalence and strong monoidality", criterion9),
        ("span and linearized verdicts agree", criterion10),
        ("triangle, π, ξ coherence and round trips", criterion11),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let out = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t0.elapsed().as_millis();
        match out {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail} [{ms} ms]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} [{ms} ms]", k + 1)
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
