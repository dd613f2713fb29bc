//! Choice of `(k1, k2, sign)` separating two distinct involutions of equal
//! length by the lengths of their twisted images in `W''`.

use kkpoly::weyl::signed_position;
use kkpoly::{Error, GroupElement, Kind, Result};
use serde::Serialize;

use crate::embedding::{Embedding, Sign};

/// Which branch of the case analysis produced the embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// Type A: `w1(k) = m1 > m2 = w2(k)`.
    TypeA,
    /// `w1(e_k) = -e_k`.
    NegatesK,
    /// `w1(e_k) < 0 < w2(e_k)`.
    OppositeSigns,
    /// Both images positive.
    BothPositive,
    /// Both images negative, with roles exchanged so that `m1 > m2`.
    BothNegative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Choice {
    pub embedding: Embedding,
    pub sign: Sign,
    pub case: Case,
    /// First index where the two involutions differ.
    pub k: usize,
    /// The pair in the order used by the case analysis.
    pub w1: GroupElement,
    pub w2: GroupElement,
    /// The pair was relabelled against the root-order convention.
    pub relabelled: bool,
}

impl Choice {
    /// Lengths of the two twisted elements in `W''`.
    pub fn lengths(&self) -> Result<(usize, usize)> {
        let l1 = self.embedding.twisted(&self.w1, self.sign)?.length();
        let l2 = self.embedding.twisted(&self.w2, self.sign)?.length();
        Ok((l1, l2))
    }

    pub fn separates(&self) -> Result<bool> {
        let (a, b) = self.lengths()?;
        Ok(a != b)
    }
}

/// Builds the separating embedding for two distinct involutions.
///
/// Returns `Ok(None)` when a type C pair falls outside every case.
pub fn choose(u: &GroupElement, v: &GroupElement) -> Result<Option<Choice>> {
    if u.cartan() != v.cartan() {
        return Err(Error::GroupMismatch {
            left: u.cartan().to_string(),
            right: v.cartan().to_string(),
        });
    }
    if u == v || !u.is_involution() || !v.is_involution() {
        return Err(Error::Precondition("need two distinct involutions".into()));
    }
    let ct = u.cartan();
    let k = (1..=ct.points())
        .find(|&i| u.apply(i as i32) != v.apply(i as i32))
        .expect("distinct elements differ somewhere");
    let make = |w1: &GroupElement, w2: &GroupElement, k2: usize, sign: Sign, case: Case, relabelled: bool| {
        Ok(Some(Choice {
            embedding: Embedding::new(ct, k + 1, k2)?,
            sign,
            case,
            k,
            w1: w1.clone(),
            w2: w2.clone(),
            relabelled,
        }))
    };
    let ki = k as i32;
    match ct.kind() {
        Kind::A => {
            let (w1, w2) = if u.apply(ki) > v.apply(ki) { (u, v) } else { (v, u) };
            let m1 = w1.apply(ki) as usize;
            make(w1, w2, m1 + 1, Sign::Minus, Case::TypeA, false)
        }
        Kind::C => {
            // w1(e_k) is the smaller of the two in the root order, which on
            // signed basis vectors is the reverse of 1 < ... < n < -n < ... < -1.
            let n = ct.points();
            let (w1, w2) = if signed_position(u.apply(ki), n) > signed_position(v.apply(ki), n) {
                (u, v)
            } else {
                (v, u)
            };
            let (x1, x2) = (w1.apply(ki), w2.apply(ki));
            if x1 == -ki {
                make(w1, w2, k + 2, Sign::Plus, Case::NegatesK, false)
            } else if x1 < 0 && x2 > 0 {
                make(w1, w2, n + 2, Sign::Minus, Case::OppositeSigns, false)
            } else if x1 > 0 && x2 > 0 {
                make(w1, w2, x1 as usize + 1, Sign::Minus, Case::BothPositive, false)
            } else if x1 < 0 && x2 < 0 {
                // the pair is relabelled so that w1(e_k) = -e_{m1} with m1 > m2
                let (m1, m2) = (x1.unsigned_abs() as usize, x2.unsigned_abs() as usize);
                if m1 > m2 {
                    make(w1, w2, m1 + 1, Sign::Plus, Case::BothNegative, false)
                } else {
                    make(w2, w1, m2 + 1, Sign::Plus, Case::BothNegative, true)
                }
            } else {
                Ok(None)
            }
        }
        Kind::B => Err(Error::UnsupportedKind {
            kind: Kind::B,
            what: "distinguishing embedding",
        }),
    }
}
