//! Exact Hilbert-Samuel theory for m-primary monomial ideals.

pub mod error;
pub mod filtration;
pub mod hilbert;
pub mod lp;
pub mod monomial;
pub mod poly;
pub mod theorems;

pub use error::{Error, Result};
pub use filtration::{AxisKind, Filtration, RrConfig};
pub use hilbert::{FitConfig, HilbertPolynomial, HilbertSummary, Postulation, Window};
pub use theorems::{CheckConfig, TheoremReport, Verdict};
pub use monomial::{AmbientRing, CmStatus, ExponentVector, MonomialIdeal};
