mod input;

use clap::{Parser, Subcommand, ValueEnum};
use duoidal::antipode::Antipode;
use duoidal::diagnose::{CellDump, DiagnosticsReport, Verdict, WitnessRecord};
use duoidal::models::spec::preset_label;
use duoidal::suites::{run_suite, Backend, Suite, SuiteReport};
use duoidal::{Error, FnMap, Frob, Map, Preset, QMat};
use input::{BackendName, InputDocument, InputError};
use serde::Serialize;
use std::process::ExitCode;
use std::time::Instant;

const WEAK_MODELS: &str = "weak-models";

#[derive(Parser, Debug)]
#[command(name = "duoidal", version, about = "Hopf diagnostics for bimonoids in duoidal hom-categories")]
struct Cli {
    /// Enable an optional feature (`weak-models` unlocks the gvec-weak backend).
    #[arg(long = "feature", global = true)]
    features: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the model and check every bimonoid axiom.
    Validate {
        file: String,
        #[arg(long)]
        backend_override: Option<BackendName>,
    },
    /// Decide the nine Hopf conditions.
    Diagnose {
        file: String,
        #[arg(long)]
        backend_override: Option<BackendName>,
        /// Random 1-cells per sampled condition [default: 20].
        #[arg(long)]
        samples: Option<usize>,
        /// [default: 0]
        #[arg(long)]
        seed: Option<u64>,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<String>,
    },
    /// Print the antipode, or the witness that there is none.
    Antipode {
        file: String,
        #[arg(long)]
        backend_override: Option<BackendName>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Run the built-in identity suites.
    Selftest {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "all")]
        backend: BackendArg,
        /// Instances per suite and backend.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Coherence,
    Lemma45,
    Lemma46,
    Duality,
    Figure1,
    Transform,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Span,
    Gvec,
    All,
}

/// Exit status: 0 all checks hold, 1 a condition fails, 2 bad input.
enum Outcome {
    Pass,
    Fail,
}

#[derive(Serialize)]
struct Timing {
    build_ms: f64,
    run_ms: f64,
}

#[derive(Serialize)]
struct DiagnoseOutput<'a> {
    #[serde(flatten)]
    report: &'a DiagnosticsReport,
    timing: Timing,
}

#[derive(Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
enum AntipodeOutput {
    Found { model: String, backend: Preset, antipode: CellDump },
    Missing { model: String, backend: Preset, witness: WitnessRecord },
}

enum Failure {
    Input(InputError),
    Engine(Error),
    Io(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn emit<T: Serialize>(target: &Option<String>, value: &T) -> Result<(), Failure> {
    let Some(path) = target else { return Ok(()) };
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    if path == "-" {
        use std::io::Write;
        match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Io(e.to_string())),
            _ => Ok(()),
        }
    } else {
        std::fs::write(path, text + "\n").map_err(|e| Failure::Io(format!("cannot write {path}: {e}")))
    }
}

fn load(file: &str, backend_override: Option<BackendName>, weak: bool) -> Result<(InputDocument, Preset), InputError> {
    let doc = input::load(file)?;
    let backend = backend_override.unwrap_or(doc.backend);
    if backend == BackendName::GvecWeak && !weak {
        let ptr = if backend_override.is_some() { "" } else { "/backend" };
        return Err(InputError::at(ptr, "the gvec-weak backend requires --feature weak-models"));
    }
    if doc.parameters.size == 0 {
        return Err(InputError::at("/parameters/size", "the size parameter must be positive"));
    }
    let preset = doc.preset(backend);
    Ok((doc, preset))
}

/// Construction errors are input errors; axiom failures are failed conditions.
fn build<M: Map>(fr: &Frob<M>, doc: &InputDocument) -> Result<Result<duoidal::bimonoid::Bimonoid<M>, Error>, Failure> {
    match doc.model.build(fr) {
        Ok(b) => Ok(Ok(b)),
        Err(e @ Error::Axiom { .. }) => Ok(Err(e)),
        Err(e) => Err(Failure::Input(InputError::at("/model", e.to_string()))),
    }
}

fn validate<M: Map>(fr: &Frob<M>, doc: &InputDocument) -> Result<Outcome, Failure> {
    match build(fr, doc)? {
        Ok(b) => {
            println!("{} in {}: valid bimonoid (carrier of size {})", b.name, preset_label(&fr.preset), fr.carrier(&b.a).len());
            Ok(Outcome::Pass)
        }
        Err(e) => {
            println!("{} in {}: {e}", doc.model.label(), preset_label(&fr.preset));
            Ok(Outcome::Fail)
        }
    }
}

fn diagnose<M: Map>(fr: &Frob<M>, doc: &InputDocument, samples: usize, seed: u64, json: &Option<String>) -> Result<Outcome, Failure> {
    let t = Instant::now();
    let b = match build(fr, doc)? {
        Ok(b) => b,
        Err(e) => {
            println!("{}: not a bimonoid: {e}", doc.model.label());
            return Ok(Outcome::Fail);
        }
    };
    let build_ms = ms(t);
    let t = Instant::now();
    let report = fr.diagnose(&b, samples, seed)?;
    let timing = Timing { build_ms, run_ms: ms(t) };
    if json.as_deref() != Some("-") {
        println!("{} in {} ({} samples, seed {})", report.model, preset_label(&report.backend), samples, seed);
        let names = [
            "antipode exists",
            "Hopf map invertible",
            "co-Hopf map invertible",
            "canonical maps invertible",
            "Galois maps invertible",
            "left canonical and co-Galois maps invertible",
            "co-Galois maps invertible",
            "fundamental theorem of Hopf modules",
            "dual fundamental theorem of Hopf modules",
        ];
        for ((key, v), name) in report.verdicts.all().into_iter().zip(names) {
            let shown = match v {
                Verdict::Holds => "holds".to_string(),
                Verdict::Fails { witness } => format!("fails (witness {witness})"),
                Verdict::SampledHolds { n } => format!("sampled-holds ({n} maps)"),
                Verdict::NotChecked => "not checked".to_string(),
            };
            println!("  ({key}) {name}: {shown}");
        }
        for (k, w) in report.witnesses.iter().enumerate() {
            println!("  witness {k} for ({}): {} is not invertible: {}", w.condition, w.map, w.witness);
        }
        if let Some(inv) = report.antipode_involutive {
            println!("  antipode involutive: {inv}");
        }
        println!("  time: {:.1} ms", timing.run_ms);
    }
    emit(json, &DiagnoseOutput { report: &report, timing })?;
    Ok(if report.all_positive() { Outcome::Pass } else { Outcome::Fail })
}

fn antipode<M: Map>(fr: &Frob<M>, doc: &InputDocument, json: &Option<String>) -> Result<Outcome, Failure> {
    let b = match build(fr, doc)? {
        Ok(b) => b,
        Err(e) => {
            println!("{}: not a bimonoid: {e}", doc.model.label());
            return Ok(Outcome::Fail);
        }
    };
    let (out, outcome) = match fr.antipode_solve(&b)? {
        Antipode::Found(s) => (AntipodeOutput::Found { model: b.name.clone(), backend: fr.preset, antipode: CellDump::of(fr, &s) }, Outcome::Pass),
        Antipode::Missing(w) => {
            let beta = fr.hopf_map(&b)?;
            let record = WitnessRecord { condition: "a".into(), map: "Hopf map".into(), cell: CellDump::of(fr, &beta), witness: w };
            (AntipodeOutput::Missing { model: b.name.clone(), backend: fr.preset, witness: record }, Outcome::Fail)
        }
    };
    if json.is_none() {
        emit(&Some("-".into()), &out)?;
    } else {
        match &out {
            AntipodeOutput::Found { antipode, .. } => println!("{}: antipode found, {} nonzero entries", b.name, antipode.entries.len()),
            AntipodeOutput::Missing { witness, .. } => println!("{}: no antipode: {}", b.name, witness.witness),
        }
        emit(json, &out)?;
    }
    Ok(outcome)
}

fn selftest(suite: SuiteArg, backend: BackendArg, count: usize, seed: u64, json: &Option<String>) -> Result<Outcome, Failure> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        s => vec![s.to_possible_value().and_then(|v| v.get_name().parse().ok()).expect("suite names agree")],
    };
    let backends: Vec<Backend> = match backend {
        BackendArg::Span => vec![Backend::Span],
        BackendArg::Gvec => vec![Backend::Gvec],
        BackendArg::All => Backend::ALL.to_vec(),
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in suites {
        for &b in &backends {
            let t = Instant::now();
            let r = run_suite(s, b, count, seed)?;
            if json.as_deref() != Some("-") {
                let status = if r.passed() { "pass" } else { "FAIL" };
                println!("{s} {:?}: {status} ({} instances, {:.0} ms)", b, r.instances, ms(t));
                for f in &r.failures {
                    println!("  {f}");
                }
            }
            reports.push(r);
        }
    }
    emit(json, &reports)?;
    Ok(if reports.iter().all(|r| r.passed()) { Outcome::Pass } else { Outcome::Fail })
}

fn dispatch<R>(preset: Preset, span: impl FnOnce(&Frob<FnMap>) -> R, gvec: impl FnOnce(&Frob<QMat>) -> R) -> Result<R, Failure> {
    match preset {
        Preset::Span { .. } => Ok(span(&Frob::<FnMap>::new(preset)?)),
        _ => Ok(gvec(&Frob::<QMat>::new(preset)?)),
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    for f in &cli.features {
        if f != WEAK_MODELS {
            return Err(Failure::Input(InputError::at("", format!("unknown feature `{f}`"))));
        }
    }
    let weak = cli.features.iter().any(|f| f == WEAK_MODELS);
    match cli.command {
        Command::Validate { file, backend_override } => {
            let (doc, preset) = load(&file, backend_override, weak)?;
            dispatch(preset, |fr| validate(fr, &doc), |fr| validate(fr, &doc))?
        }
        Command::Diagnose { file, backend_override, samples, seed, json } => {
            let (doc, preset) = load(&file, backend_override, weak)?;
            let samples = samples.or(doc.options.samples).unwrap_or(20);
            let seed = seed.or(doc.options.seed).unwrap_or(0);
            dispatch(preset, |fr| diagnose(fr, &doc, samples, seed, &json), |fr| diagnose(fr, &doc, samples, seed, &json))?
        }
        Command::Antipode { file, backend_override, json } => {
            let (doc, preset) = load(&file, backend_override, weak)?;
            dispatch(preset, |fr| antipode(fr, &doc, &json), |fr| antipode(fr, &doc, &json))?
        }
        Command::Selftest { suite, backend, count, seed, json } => selftest(suite, backend, count, seed, &json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
