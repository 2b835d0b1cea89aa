//! Exact computations in duoidal hom-categories of naturally Frobenius
//! map-monoidales: duality, Hopf and Galois maps, transforms and antipodes,
//! over finite spans and graded rational vector spaces.

pub mod antipode;
pub mod bimonoid;
pub mod cell;
pub mod coherence;
pub mod diagnose;
pub mod dualizer;
pub mod duo;
pub mod error;
pub mod frob;
pub mod galois;
pub mod linalg;
pub mod map;
pub mod models;
pub mod suites;
pub mod transform;

pub use cell::{Atom, Carrier, Elem, Kind, Layer, OneCell};
pub use error::{Error, Result};
pub use frob::{Cell, Frob, GvecFrob, Paste, Preset, SpanFrob};
pub use linalg::{QMat, Q};
pub use map::{FnMap, Map, Witness};
