//! Verification suites and supporting machinery for `kkpoly`: the embedding
//! of a Weyl group into the group of rank two larger, length formulas for
//! the twisted images of involutions, and report emission.

pub mod distinguish;
pub mod embedding;
pub mod report;
pub mod suites;

pub use embedding::{Embedding, LengthCheck, Sign};
pub use report::VerificationReport;
