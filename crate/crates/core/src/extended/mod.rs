//! The extended space E = g + g* with its split pairing, generalized
//! (para)complex structures, classical decomposition, integrability and
//! the interpolation curve between extremal structures.

mod classical;
mod curve;
mod extremal;
mod integrability;
mod metric;
mod space;
mod structure;

pub use classical::{assemble_classical, from_classical, to_classical, ClassicalForm};
pub use curve::{curve_point, CurveSpec};
pub use extremal::{build_extremal, extract_extremal, Extremal, ExtremalKind};
pub use integrability::{
    eigenspace_involutivity, nijenhuis_integrability, EigenBasis, InvolutivityReport,
    NijenhuisReport,
};
pub use metric::PseudoMetric;
pub use space::ExtendedSpace;
pub use structure::{AlgebraicReport, CheckOutcome, GenStructure};
