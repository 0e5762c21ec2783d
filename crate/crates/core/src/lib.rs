//! Kauffman's two-variable regular-isotopy polynomial for link diagrams,
//! standard-format diagrams of rational links built from Conway codes, and
//! checks tying the polynomial's next-to-top coefficients to the twist sites
//! of the standard diagram.

pub mod diagram;
pub mod kauffman;
pub mod notation;
pub mod theorem;

pub use diagram::{CrossingId, DiagramError, LinkDiagram, PdRecord, SmoothingKind, SmoothingMode};
pub use kauffman::{lambda, LambdaEngine, LaurentPoly2, TruncatedLambda};
pub use notation::{ConwayCode, NotationError, TwistCensus, UTriple};
pub use theorem::{Chirality, Obstruction, TheoremError, VerificationReport, Verifier};
