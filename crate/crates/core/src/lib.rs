//! Exact computation of Kostant-Kumar polynomials for Weyl groups of
//! types A, B and C through the nil-Hecke ring.
//!
//! The crate is organised bottom-up:
//!
//! * [`root_system`] builds positive roots and their coordinate systems.
//! * [`weyl`] implements signed-permutation arithmetic, length, reduced
//!   words, the Bruhat order, involution supports and parabolic factorizations.
//! * [`exactalg`] provides sparse polynomials over the rationals in the simple
//!   roots and rational functions whose denominators are products of roots.
//! * [`nilhecke`] computes the structure constants `c_{w,v}`, the polynomials
//!   `d_w` and the inverse change of basis.
//! * [`coadjoint`] computes dimensions of coadjoint orbits attached to
//!   involutions by exact matrix rank.

pub mod coadjoint;
pub mod error;
pub mod exactalg;
pub mod nilhecke;
pub mod root_system;
pub mod weyl;

pub use error::{Error, Result};
pub use exactalg::{LinearForm, Polynomial, RationalFunction};
pub use nilhecke::{KKPolynomial, NilHeckeElement};
pub use root_system::{CartanType, Kind, Root, RootSystem, SignedRoot};
pub use weyl::{GroupElement, RankMatrix, Word};
