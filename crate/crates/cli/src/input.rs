//! Input documents and schema errors with JSON-pointer locations.

use duoidal::models::ModelSpec;
use duoidal::Preset;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum BackendName {
    Span,
    GvecCommutative,
    GvecWeak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    /// `|X|` for spans, `n` for the graded backends.
    #[serde(alias = "n")]
    pub size: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub backend: BackendName,
    pub parameters: Parameters,
    pub model: ModelSpec,
    #[serde(default)]
    pub options: Options,
}

impl InputDocument {
    pub fn preset(&self, backend: BackendName) -> Preset {
        let n = self.parameters.size;
        match backend {
            BackendName::Span => Preset::Span { size: n },
            BackendName::GvecCommutative => Preset::GvecCommutative { n },
            BackendName::GvecWeak => Preset::GvecWeak { n },
        }
    }
}

/// A rejected document: where, and why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "(document root)" } else { &self.pointer };
        write!(f, "input error at {at}: {}", self.message)
    }
}

impl InputError {
    pub fn at(pointer: &str, message: impl Into<String>) -> Self {
        InputError { pointer: pointer.into(), message: message.into() }
    }
}

fn escape(s: &str) -> String {
    s.replace('~', "~0").replace('/', "~1")
}

/// RFC 6901 pointer for a deserialization path.
pub fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out += &format!("/{index}"),
            Segment::Map { key } => out += &format!("/{}", escape(key)),
            Segment::Enum { .. } | Segment::Unknown => {}
        }
    }
    out
}

pub fn parse(text: &str) -> Result<InputDocument, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let ptr = pointer(e.path());
        InputError::at(&ptr, e.inner().to_string())
    })
}

pub fn load(path: &str) -> Result<InputDocument, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::at("", format!("cannot read {path}: {e}")))?;
    parse(&text)
}
