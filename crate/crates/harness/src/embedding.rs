//! The rank-two-larger group `W''` and the embedding of `W` into the
//! stabilizer of two points `k1 < k2`.
//!
//! Source indices `k` are sent to `k'`: `k` itself below `k1`, `k + 1` up to
//! `k2 - 2`, and `k + 2` from `k2 - 1` on. The derived sets are
//! `A = {1..k1-1}`, `B = {k1+1..k2-1}`, `C = {k2+1..m+2}` with `m` the number
//! of source points.

use std::fmt;

use kkpoly::{CartanType, Error, GroupElement, Kind, Result};
use serde::Serialize;

/// Which reflection `s_{e_k1 -+ e_k2}` is appended to the embedded element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Plus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Embedding {
    source: CartanType,
    target: CartanType,
    k1: usize,
    k2: usize,
}

impl Embedding {
    pub fn new(source: CartanType, k1: usize, k2: usize) -> Result<Self> {
        let total = source.points() + 2;
        if !(1 <= k1 && k1 < k2 && k2 <= total) {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= k1 < k2 <= {total}, got k1={k1}, k2={k2}"
            )));
        }
        let target = CartanType::new(source.kind(), source.rank() + 2)?;
        Ok(Embedding {
            source,
            target,
            k1,
            k2,
        })
    }

    /// All admissible `(k1, k2)` for a source group.
    pub fn all(source: CartanType) -> Vec<Embedding> {
        let total = source.points() + 2;
        let mut out = Vec::new();
        for k1 in 1..total {
            for k2 in k1 + 1..=total {
                out.push(Embedding::new(source, k1, k2).expect("indices in range"));
            }
        }
        out
    }

    pub fn source(&self) -> CartanType {
        self.source
    }

    pub fn target(&self) -> CartanType {
        self.target
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }

    /// The index map `k -> k'`.
    pub fn prime(&self, k: usize) -> usize {
        if k < self.k1 {
            k
        } else if k + 2 <= self.k2 {
            k + 1
        } else {
            k + 2
        }
    }

    pub fn set_a(&self) -> Vec<usize> {
        (1..self.k1).collect()
    }

    pub fn set_b(&self) -> Vec<usize> {
        (self.k1 + 1..self.k2).collect()
    }

    pub fn set_c(&self) -> Vec<usize> {
        (self.k2 + 1..=self.target.points()).collect()
    }

    /// The image of `w`; fixes `k1` and `k2`.
    pub fn embed(&self, w: &GroupElement) -> Result<GroupElement> {
        if w.cartan() != self.source {
            return Err(Error::GroupMismatch {
                left: self.source.to_string(),
                right: w.cartan().to_string(),
            });
        }
        let mut images: Vec<i32> = (1..=self.target.points() as i32).collect();
        for (i, &x) in w.images().iter().enumerate() {
            let j = self.prime(x.unsigned_abs() as usize) as i32;
            images[self.prime(i + 1) - 1] = if x < 0 { -j } else { j };
        }
        GroupElement::from_images(self.target, images)
    }

    /// `s_{e_k1 - e_k2}` or `s_{e_k1 + e_k2}` in the target.
    pub fn extra_reflection(&self, sign: Sign) -> Result<GroupElement> {
        let mut images: Vec<i32> = (1..=self.target.points() as i32).collect();
        let (a, b) = (self.k1 as i32, self.k2 as i32);
        match sign {
            Sign::Minus => {
                images[self.k1 - 1] = b;
                images[self.k2 - 1] = a;
            }
            Sign::Plus => {
                if self.target.kind() == Kind::A {
                    return Err(Error::UnsupportedKind {
                        kind: Kind::A,
                        what: "reflection in e_k1 + e_k2",
                    });
                }
                images[self.k1 - 1] = -b;
                images[self.k2 - 1] = -a;
            }
        }
        GroupElement::from_images(self.target, images)
    }

    /// `w' = w * s_{e_k1 -+ e_k2}` with `w` embedded.
    pub fn twisted(&self, w: &GroupElement, sign: Sign) -> Result<GroupElement> {
        self.embed(w)?.compose(&self.extra_reflection(sign)?)
    }
}

/// Three evaluations of the length of `w'` in `W''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthCheck {
    /// Inversion count.
    pub direct: usize,
    /// Closed form with the constant `2(k2 - k1)`.
    pub printed: usize,
    /// Closed form with `2|B| = 2(k2 - k1 - 1)`.
    pub corrected: usize,
}

impl LengthCheck {
    pub fn corrected_holds(&self) -> bool {
        self.direct == self.corrected
    }

    pub fn printed_holds(&self) -> bool {
        self.direct == self.printed
    }

    /// `printed - direct`.
    pub fn printed_offset(&self) -> i64 {
        self.printed as i64 - self.direct as i64
    }
}

/// `|{a in X : w(a) in Y}|` for signed target indices.
fn count_into(w: &GroupElement, from: &[usize], to: &[i32]) -> usize {
    from.iter().filter(|&&a| to.contains(&w.apply(a as i32))).count()
}

fn signed(xs: &[usize], sign: i32) -> Vec<i32> {
    xs.iter().map(|&x| sign * x as i32).collect()
}

fn require_involution(w: &GroupElement) -> Result<()> {
    if w.is_involution() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{w} is not an involution")))
    }
}

/// Length of `w s_{e_k1 - e_k2}` for a type A involution.
pub fn length_lemma_a(e: &Embedding, w: &GroupElement) -> Result<LengthCheck> {
    if e.source.kind() != Kind::A {
        return Err(Error::UnsupportedKind {
            kind: e.source.kind(),
            what: "type A length formula",
        });
    }
    require_involution(w)?;
    let direct = e.twisted(w, Sign::Minus)?.length();
    let we = e.embed(w)?;
    let ac = count_into(&we, &e.set_a(), &signed(&e.set_c(), 1));
    let rest = 4 * ac + w.length() + 1;
    Ok(LengthCheck {
        direct,
        printed: 2 * (e.k2 - e.k1) + rest,
        corrected: 2 * e.set_b().len() + rest,
    })
}

/// Length of `w s_{e_k1 -+ e_k2}` for a type C involution.
pub fn length_lemma_c(e: &Embedding, w: &GroupElement, sign: Sign) -> Result<LengthCheck> {
    if e.source.kind() != Kind::C {
        return Err(Error::UnsupportedKind {
            kind: e.source.kind(),
            what: "type C length formula",
        });
    }
    require_involution(w)?;
    let direct = e.twisted(w, sign)?.length();
    let we = e.embed(w)?;
    let a = e.set_a();
    let b = e.set_b();
    let c = e.set_c();
    let a_minus = count_into(&we, &a, &signed(&a, -1));
    let b_minus = count_into(&we, &a, &signed(&b, -1));
    let tail = 4 * b_minus + 4 * a_minus + w.length() + 1;
    let (printed, corrected) = match sign {
        Sign::Minus => {
            let mut c_pm = signed(&c, 1);
            c_pm.extend(signed(&c, -1));
            let base = 4 * count_into(&we, &a, &c_pm) + tail;
            (2 * (e.k2 - e.k1) + base, 2 * b.len() + base)
        }
        Sign::Plus => {
            let base = 2 + 4 * c.len() + tail;
            (2 * (e.k2 - e.k1) + base, 2 * b.len() + base)
        }
    };
    Ok(LengthCheck {
        direct,
        printed,
        corrected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use kkpoly::weyl::enumerate_involutions;

    fn ct(kind: Kind, n: usize) -> CartanType {
        CartanType::new(kind, n).unwrap()
    }

    #[test]
    fn index_map() {
        let e = Embedding::new(ct(Kind::C, 3), 2, 4).unwrap();
        let images: Vec<usize> = (1..=3).map(|k| e.prime(k)).collect();
        assert_eq!(images, vec![1, 3, 5]);
        assert_eq!(e.set_a(), vec![1]);
        assert_eq!(e.set_b(), vec![3]);
        assert_eq!(e.set_c(), vec![5]);
        assert!(Embedding::new(ct(Kind::C, 3), 3, 3).is_err());
        assert!(Embedding::new(ct(Kind::C, 3), 1, 6).is_err());
    }

    #[test]
    fn embedding_of_a_transposition() {
        let e = Embedding::new(ct(Kind::A, 1), 1, 2).unwrap();
        let s = GroupElement::parse(ct(Kind::A, 1), "2,1").unwrap();
        assert_eq!(e.embed(&s).unwrap().images(), &[1, 2, 4, 3]);
        let id = GroupElement::identity(ct(Kind::A, 1));
        assert!(e.embed(&id).unwrap().is_identity());
    }

    #[test]
    fn embedded_involutions_fix_the_two_points() {
        let source = ct(Kind::C, 2);
        for e in Embedding::all(source) {
            for w in enumerate_involutions(source) {
                let we = e.embed(&w).unwrap();
                assert!(we.is_involution());
                assert_eq!(we.apply(e.k1() as i32), e.k1() as i32);
                assert_eq!(we.apply(e.k2() as i32), e.k2() as i32);
                assert!(e.twisted(&w, Sign::Plus).unwrap().is_involution());
            }
        }
    }

    #[test]
    fn worked_lengths() {
        let a1 = ct(Kind::A, 1);
        let id = GroupElement::identity(a1);
        let near = length_lemma_a(&Embedding::new(a1, 1, 2).unwrap(), &id).unwrap();
        assert_eq!((near.direct, near.printed, near.corrected), (1, 3, 1));
        let far = length_lemma_a(&Embedding::new(a1, 1, 4).unwrap(), &id).unwrap();
        assert_eq!(far.direct, 5);
        assert!(far.corrected_holds());

        let c2 = ct(Kind::C, 2);
        let id = GroupElement::identity(c2);
        let e = Embedding::new(c2, 1, 2).unwrap();
        let m = length_lemma_c(&e, &id, Sign::Minus).unwrap();
        assert_eq!((m.direct, m.printed, m.corrected), (1, 3, 1));
        let p = length_lemma_c(&e, &id, Sign::Plus).unwrap();
        assert_eq!((p.direct, p.printed, p.corrected), (11, 13, 11));
    }

    #[test]
    fn long_root_reflection_matches_everywhere_at_rank_two() {
        let c2 = ct(Kind::C, 2);
        let w = GroupElement::parse(c2, "-1,2").unwrap();
        for e in Embedding::all(c2) {
            for sign in [Sign::Minus, Sign::Plus] {
                assert!(length_lemma_c(&e, &w, sign).unwrap().corrected_holds());
            }
        }
    }

    #[test]
    fn rejects_non_involutions() {
        let a2 = ct(Kind::A, 2);
        let w = GroupElement::parse(a2, "2,3,1").unwrap();
        let e = Embedding::new(a2, 1, 3).unwrap();
        assert!(matches!(length_lemma_a(&e, &w), Err(Error::Precondition(_))));
    }
}
