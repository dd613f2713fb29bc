//! Weyl groups of types A, B, C as (signed) permutation groups.
//!
//! An element is stored by its images of `1..=m`, where `m` is the number of
//! permuted letters (`n + 1` in type `A_n`, `n` in types `B_n`/`C_n`). In
//! types B and C, `w(-i) = -w(i)` is implicit.

mod bruhat;

pub use bruhat::{RankMatrix, bruhat_leq, bruhat_leq_subword, involution_leq};

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{CartanType, Kind, Root, RootSystem, SignedRoot};

/// Position of a signed letter in the order `1 < 2 < ... < n < -n < ... < -1`.
pub fn signed_position(x: i32, n: usize) -> usize {
    if x > 0 {
        x as usize
    } else {
        (2 * n as i32 + 1 + x) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    cartan: CartanType,
    images: Vec<i32>,
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cartan.cmp(&other.cartan).then_with(|| {
            let n = self.images.len();
            let a = self.images.iter().map(|&x| signed_position(x, n));
            let b = other.images.iter().map(|&x| signed_position(x, n));
            a.cmp(b)
        })
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GroupElement {
    pub fn identity(ct: CartanType) -> Self {
        GroupElement {
            cartan: ct,
            images: (1..=ct.points() as i32).collect(),
        }
    }

    pub fn from_images(ct: CartanType, images: Vec<i32>) -> Result<Self> {
        let m = ct.points();
        if images.len() != m {
            return Err(Error::InvalidArgument(format!(
                "{ct} permutes {m} letters, got {} images",
                images.len()
            )));
        }
        let mut seen = vec![false; m + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > m || seen[a] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a signed permutation of 1..{m}"
                )));
            }
            if x < 0 && ct.kind() == Kind::A {
                return Err(Error::InvalidArgument(
                    "type A elements cannot have negative images".into(),
                ));
            }
            seen[a] = true;
        }
        Ok(GroupElement { cartan: ct, images })
    }

    /// Parses the comma-separated bottom row of two-line notation, e.g. `-3,-2,4,-1`.
    pub fn parse(ct: CartanType, text: &str) -> Result<Self> {
        let images = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(ct, images)
    }

    /// `i` is 1-based; `s_n` in types B/C is the sign change at `n`.
    pub fn simple_reflection(ct: CartanType, i: usize) -> Result<Self> {
        if i == 0 || i > ct.rank() {
            return Err(Error::InvalidArgument(format!(
                "simple reflection index {i} out of range 1..={}",
                ct.rank()
            )));
        }
        let mut images: Vec<i32> = (1..=ct.points() as i32).collect();
        if i < ct.points() {
            images.swap(i - 1, i);
        } else {
            images[i - 1] = -(i as i32);
        }
        Ok(GroupElement { cartan: ct, images })
    }

    /// The reflection `s_alpha` for a positive root.
    pub fn from_reflection(rs: &RootSystem, alpha: &Root) -> Result<Self> {
        let ct = rs.cartan();
        if !rs.contains(alpha) {
            return Err(Error::InvalidArgument(format!("{alpha} is not a positive root of {ct}")));
        }
        let m = ct.points();
        let a = alpha.eps();
        let norm: i64 = a.iter().map(|x| x * x).sum();
        let mut images = Vec::with_capacity(m);
        for k in 0..m {
            // s_alpha(e_k) = e_k - 2 a_k / (a, a) * alpha
            let c = 2 * a[k];
            let mut v: Vec<i64> = a.iter().map(|&x| -c * x).collect();
            v[k] += norm;
            let (idx, val) = v
                .iter()
                .enumerate()
                .find(|(_, &x)| x != 0)
                .expect("reflection of a basis vector is nonzero");
            images.push(((idx + 1) as i32) * (val.signum() as i32));
        }
        Ok(GroupElement { cartan: ct, images })
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(x)` for a signed letter `x`.
    pub fn apply(&self, x: i32) -> i32 {
        let v = self.images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            v
        } else {
            -v
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.cartan != other.cartan {
            return Err(Error::GroupMismatch {
                left: self.cartan.to_string(),
                right: other.cartan.to_string(),
            });
        }
        Ok(())
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        GroupElement {
            cartan: self.cartan,
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0i32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let pos = (i + 1) as i32;
            images[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        GroupElement {
            cartan: self.cartan,
            images,
        }
    }

    /// Right multiplication by the simple reflection `s_i`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        if i < images.len() {
            images.swap(i - 1, i);
        } else {
            images[i - 1] = -images[i - 1];
        }
        GroupElement {
            cartan: self.cartan,
            images,
        }
    }

    /// Left multiplication by the simple reflection `s_i`.
    pub fn simple_mul(&self, i: usize) -> Self {
        let m = self.images.len() as i32;
        let i = i as i32;
        let images = self
            .images
            .iter()
            .map(|&x| {
                let (a, s) = (x.abs(), x.signum());
                if i < m {
                    if a == i {
                        s * (i + 1)
                    } else if a == i + 1 {
                        s * i
                    } else {
                        x
                    }
                } else if a == i {
                    -x
                } else {
                    x
                }
            })
            .collect();
        GroupElement {
            cartan: self.cartan,
            images,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == (i + 1) as i32)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.apply(x) == (i + 1) as i32)
    }

    /// Applies `w` to a vector in eps coordinates.
    pub fn act_on_eps(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                let x = self.images[i];
                out[x.unsigned_abs() as usize - 1] += c * i64::from(x.signum());
            }
        }
        out
    }

    /// Applies `w` to a linear form given in simple-root coordinates.
    pub fn act_on_alpha(&self, alpha: &[i64]) -> Vec<i64> {
        let eps = self.cartan.alpha_to_eps(alpha);
        self.cartan
            .eps_to_alpha(&self.act_on_eps(&eps))
            .expect("the Weyl group preserves the root lattice")
    }

    pub fn act_on_root(&self, rs: &RootSystem, r: &Root) -> Result<SignedRoot> {
        if rs.cartan() != self.cartan {
            return Err(Error::GroupMismatch {
                left: self.cartan.to_string(),
                right: rs.cartan().to_string(),
            });
        }
        rs.signed_root_from_eps(&self.act_on_eps(r.eps()))
            .ok_or_else(|| Error::InvalidArgument(format!("{r} is not a root of {}", rs.cartan())))
    }

    /// Whether `w(alpha_i) < 0`, i.e. `i` is a right descent.
    pub fn is_right_descent(&self, i: usize) -> bool {
        let m = self.images.len();
        if i < m {
            let (a, b) = (self.images[i - 1], self.images[i]);
            signed_position(a, m) > signed_position(b, m)
        } else {
            self.images[i - 1] < 0
        }
    }

    /// Whether `w^{-1}(alpha_i) < 0`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        self.inverse().is_right_descent(i)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let m = self.images.len();
        let signed = self.cartan.kind() != Kind::A;
        let mut count = 0;
        for i in 0..m {
            let (ai, si) = (self.images[i].unsigned_abs(), self.images[i].signum());
            if signed && si < 0 {
                count += 1;
            }
            for j in i + 1..m {
                let (aj, sj) = (self.images[j].unsigned_abs(), self.images[j].signum());
                // e_i - e_j
                if (ai < aj && si < 0) || (aj < ai && sj > 0) {
                    count += 1;
                }
                // e_i + e_j
                if signed && ((ai < aj && si < 0) || (aj < ai && sj < 0)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Reduced word by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        let n = self.cartan.rank();
        'outer: loop {
            for i in 1..=n {
                if cur.is_right_descent(i) {
                    letters.push(i);
                    cur = cur.mul_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        letters.reverse();
        Word {
            letters,
            reduced: true,
        }
    }

    /// Product of simple reflections, left to right.
    pub fn from_word(ct: CartanType, letters: &[usize]) -> Result<Self> {
        let mut w = Self::identity(ct);
        for &i in letters {
            if i == 0 || i > ct.rank() {
                return Err(Error::InvalidArgument(format!(
                    "letter {i} out of range 1..={}",
                    ct.rank()
                )));
            }
            w = w.mul_simple(i);
        }
        Ok(w)
    }

    /// The support of an involution: the orthogonal set of positive roots
    /// whose reflections multiply to it.
    pub fn support(&self, rs: &RootSystem) -> Result<Vec<Root>> {
        if !self.is_involution() {
            return Err(Error::Precondition(format!("{self} is not an involution")));
        }
        let m = self.images.len();
        let ct = self.cartan;
        let mut out = Vec::new();
        for i in 1..=m {
            let x = self.images[i - 1];
            let j = x.unsigned_abs() as usize;
            let mut eps = vec![0i64; m];
            if x > 0 && j > i {
                eps[i - 1] = 1;
                eps[j - 1] = -1;
            } else if x < 0 && j > i {
                eps[i - 1] = 1;
                eps[j - 1] = 1;
            } else if x < 0 && j == i {
                eps[i - 1] = if ct.kind() == Kind::C { 2 } else { 1 };
            } else {
                continue;
            }
            let root = Root::from_eps(ct, eps).expect("support roots are roots");
            debug_assert!(rs.contains(&root));
            out.push(root);
        }
        Ok(out)
    }

    /// Factorization `w = u v` with `v` in the parabolic subgroup generated
    /// by `{s_i : i in J}` and `u` the minimal-length representative of `w W_J`.
    pub fn parabolic_decompose(&self, subset: &[usize]) -> Result<(Self, Self)> {
        for &i in subset {
            if i == 0 || i > self.cartan.rank() {
                return Err(Error::InvalidArgument(format!("index {i} out of range")));
            }
        }
        let mut u = self.clone();
        let mut v = Self::identity(self.cartan);
        'outer: loop {
            for &i in subset {
                if u.is_right_descent(i) {
                    u = u.mul_simple(i);
                    v = v.simple_mul(i);
                    continue 'outer;
                }
            }
            break;
        }
        Ok((u, v))
    }

    /// Two-line notation.
    pub fn two_line(&self) -> String {
        let top: Vec<String> = (1..=self.images.len()).map(|i| i.to_string()).collect();
        let bottom: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        let width = top.iter().chain(&bottom).map(String::len).max().unwrap_or(1);
        let fmt_row = |row: &[String]| {
            row.iter()
                .map(|s| format!("{s:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}\n{}", fmt_row(&top), fmt_row(&bottom))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<usize>,
    pub reduced: bool,
}

impl Word {
    /// Builds a word and records whether it is reduced.
    pub fn new(ct: CartanType, letters: Vec<usize>) -> Result<Self> {
        let w = GroupElement::from_word(ct, &letters)?;
        let reduced = w.length() == letters.len();
        Ok(Word { letters, reduced })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// All elements of the Weyl group, lexicographic on images in the order
/// `1 < ... < n < -n < ... < -1`.
pub fn enumerate(ct: CartanType) -> impl Iterator<Item = GroupElement> {
    let m = ct.points();
    let signed = ct.kind() != Kind::A;
    // candidate letters in increasing signed order
    let mut candidates: Vec<i32> = (1..=m as i32).collect();
    if signed {
        candidates.extend((1..=m as i32).rev().map(|x| -x));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    let mut used = vec![false; m + 1];
    fill(&candidates, &mut current, &mut used, m, &mut out);
    out.into_iter()
        .map(move |images| GroupElement { cartan: ct, images })
}

fn fill(
    candidates: &[i32],
    current: &mut Vec<i32>,
    used: &mut [bool],
    m: usize,
    out: &mut Vec<Vec<i32>>,
) {
    if current.len() == m {
        out.push(current.clone());
        return;
    }
    for &c in candidates {
        let a = c.unsigned_abs() as usize;
        if used[a] {
            continue;
        }
        used[a] = true;
        current.push(c);
        fill(candidates, current, used, m, out);
        current.pop();
        used[a] = false;
    }
}

/// All involutions, in enumeration order.
pub fn enumerate_involutions(ct: CartanType) -> impl Iterator<Item = GroupElement> {
    enumerate(ct).filter(GroupElement::is_involution)
}

/// Order of the Weyl group.
pub fn group_order(ct: CartanType) -> usize {
    let fact: usize = (1..=ct.points()).product();
    match ct.kind() {
        Kind::A => fact,
        Kind::B | Kind::C => fact << ct.rank(),
    }
}

/// The longest element.
pub fn longest_element(ct: CartanType) -> GroupElement {
    let m = ct.points() as i32;
    let images = match ct.kind() {
        Kind::A => (1..=m).rev().collect(),
        Kind::B | Kind::C => (1..=m).map(|x| -x).collect(),
    };
    GroupElement { cartan: ct, images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Kind;

    fn ct(kind: Kind, n: usize) -> CartanType {
        CartanType::new(kind, n).unwrap()
    }

    fn brute_length(w: &GroupElement) -> usize {
        let rs = RootSystem::from_cartan(w.cartan());
        rs.positive_roots()
            .iter()
            .filter(|r| !w.act_on_root(&rs, r).unwrap().positive)
            .count()
    }

    #[test]
    fn from_reflection_examples() {
        let c5 = RootSystem::build(Kind::C, 5).unwrap();
        let w = GroupElement::from_reflection(&c5, &c5.parse_root("e1+e5").unwrap()).unwrap();
        assert_eq!(w.images(), &[-5, 2, 3, 4, -1]);
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        let w = GroupElement::from_reflection(&c3, &c3.parse_root("2e2").unwrap()).unwrap();
        assert_eq!(w.images(), &[1, -2, 3]);
        let a3 = RootSystem::build(Kind::A, 3).unwrap();
        let w = GroupElement::from_reflection(&a3, a3.simple_root(1)).unwrap();
        assert_eq!(w.images(), &[2, 1, 3, 4]);
    }

    #[test]
    fn from_reflection_of_simple_root_is_simple_reflection() {
        for (kind, n) in [(Kind::A, 3), (Kind::B, 3), (Kind::C, 4)] {
            let rs = RootSystem::build(kind, n).unwrap();
            for i in 1..=n {
                let a = GroupElement::from_reflection(&rs, rs.simple_root(i)).unwrap();
                assert_eq!(a, GroupElement::simple_reflection(rs.cartan(), i).unwrap());
            }
        }
    }

    #[test]
    fn two_line_product() {
        let c5 = RootSystem::build(Kind::C, 5).unwrap();
        let s = |t: &str| GroupElement::from_reflection(&c5, &c5.parse_root(t).unwrap()).unwrap();
        let w = s("e1+e5").compose(&s("2e3").compose(&s("e2-e4")).unwrap()).unwrap();
        assert_eq!(w.to_string(), "-5,4,-3,2,-1");
    }

    #[test]
    fn compose_mismatch() {
        let a = GroupElement::identity(ct(Kind::B, 2));
        let b = GroupElement::identity(ct(Kind::C, 2));
        assert!(matches!(a.compose(&b), Err(Error::GroupMismatch { .. })));
    }

    #[test]
    fn inverse_and_identity() {
        for w in enumerate(ct(Kind::B, 3)) {
            assert!(w.compose(&w.inverse()).unwrap().is_identity());
            assert!(w.inverse().compose(&w).unwrap().is_identity());
            if w.is_involution() {
                assert_eq!(w.inverse(), w);
            }
        }
    }

    #[test]
    fn act_on_root_examples() {
        let c2 = RootSystem::build(Kind::C, 2).unwrap();
        let w = GroupElement::parse(c2.cartan(), "-1,2").unwrap();
        let r = w.act_on_root(&c2, &c2.parse_root("e1-e2").unwrap()).unwrap();
        assert!(!r.positive);
        assert_eq!(r.root.eps_string(), "e1+e2");
        let w0 = longest_element(c2.cartan());
        let r = w0.act_on_root(&c2, &c2.parse_root("2e1").unwrap()).unwrap();
        assert!(!r.positive);
        assert_eq!(r.root.eps_string(), "2e1");
        let id = GroupElement::identity(c2.cartan());
        for root in c2.positive_roots() {
            let r = id.act_on_root(&c2, root).unwrap();
            assert!(r.positive);
            assert_eq!(&r.root, root);
        }
    }

    #[test]
    fn act_matches_reflect() {
        let rs = RootSystem::build(Kind::C, 3).unwrap();
        for a in rs.positive_roots() {
            let s = GroupElement::from_reflection(&rs, a).unwrap();
            for b in rs.positive_roots() {
                assert_eq!(s.act_on_root(&rs, b).unwrap(), rs.reflect(a, b).unwrap());
            }
        }
    }

    #[test]
    fn lengths() {
        let c2 = ct(Kind::C, 2);
        assert_eq!(GroupElement::identity(c2).length(), 0);
        let rs = RootSystem::from_cartan(c2);
        let s2e1 = GroupElement::from_reflection(&rs, &rs.parse_root("2e1").unwrap()).unwrap();
        assert_eq!(s2e1.length(), 3);
        assert_eq!(longest_element(c2).length(), 4);
        for (kind, n) in [(Kind::A, 3), (Kind::B, 3), (Kind::C, 3)] {
            let t = ct(kind, n);
            for i in 1..=n {
                assert_eq!(GroupElement::simple_reflection(t, i).unwrap().length(), 1);
            }
            for w in enumerate(t) {
                assert_eq!(w.length(), brute_length(&w));
                assert_eq!(w.length(), w.inverse().length());
            }
        }
    }

    #[test]
    fn w0_is_minus_identity_in_c2() {
        let c2 = ct(Kind::C, 2);
        let max = enumerate(c2).max_by_key(GroupElement::length).unwrap();
        assert_eq!(max.images(), &[-1, -2]);
    }

    #[test]
    fn descent_changes_length_by_one() {
        for (kind, n) in [(Kind::A, 3), (Kind::B, 3), (Kind::C, 3)] {
            let t = ct(kind, n);
            let rs = RootSystem::from_cartan(t);
            for w in enumerate(t) {
                for i in 1..=n {
                    let ws = w.mul_simple(i);
                    let neg = !w.act_on_root(&rs, rs.simple_root(i)).unwrap().positive;
                    assert_eq!(w.is_right_descent(i), neg);
                    let expected = if neg { w.length() - 1 } else { w.length() + 1 };
                    assert_eq!(ws.length(), expected);
                    let s = GroupElement::simple_reflection(t, i).unwrap();
                    assert_eq!(ws, w.compose(&s).unwrap());
                    assert_eq!(w.simple_mul(i), s.compose(&w).unwrap());
                }
            }
        }
    }

    #[test]
    fn reduced_words() {
        let a2 = ct(Kind::A, 2);
        let w = GroupElement::from_word(a2, &[1, 2, 1]).unwrap();
        let word = w.reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(GroupElement::from_word(a2, &word.letters).unwrap(), w);
        assert!(GroupElement::identity(a2).reduced_word().is_empty());

        let c2 = ct(Kind::C, 2);
        let w0 = GroupElement::from_word(c2, &[2, 1, 2, 1]).unwrap();
        assert_eq!(w0, longest_element(c2));
        assert_eq!(w0.reduced_word().len(), 4);
        // no word of length < 4 reaches w0
        for len in 0..4u32 {
            for code in 0..2usize.pow(len) {
                let letters: Vec<usize> = (0..len).map(|b| 1 + ((code >> b) & 1)).collect();
                assert_ne!(GroupElement::from_word(c2, &letters).unwrap(), w0);
            }
        }
        for w in enumerate(ct(Kind::B, 3)) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(GroupElement::from_word(w.cartan(), &word.letters).unwrap(), w);
        }
    }

    #[test]
    fn word_reducedness_flag() {
        let a2 = ct(Kind::A, 2);
        assert!(Word::new(a2, vec![1, 2, 1]).unwrap().reduced);
        assert!(!Word::new(a2, vec![1, 1]).unwrap().reduced);
    }

    #[test]
    fn group_sizes_and_involutions() {
        assert_eq!(enumerate(ct(Kind::C, 2)).count(), 8);
        assert_eq!(enumerate_involutions(ct(Kind::C, 2)).count(), 6);
        assert_eq!(enumerate(ct(Kind::A, 2)).count(), 6);
        assert_eq!(enumerate_involutions(ct(Kind::A, 2)).count(), 4);
        // i(n) = 2 i(n-1) + 2 (n-1) i(n-2), i(0) = 1, i(1) = 2
        let mut rec = vec![1usize, 2];
        for n in 2..=4 {
            rec.push(2 * rec[n - 1] + 2 * (n - 1) * rec[n - 2]);
        }
        for n in 2..=4 {
            for kind in [Kind::B, Kind::C] {
                let t = ct(kind, n);
                assert_eq!(enumerate(t).count(), group_order(t));
                assert_eq!(enumerate_involutions(t).count(), rec[n]);
            }
        }
        assert_eq!(rec[2..], [6, 20, 76]);
    }

    #[test]
    fn enumeration_is_ordered_and_distinct() {
        let all: Vec<_> = enumerate(ct(Kind::C, 3)).collect();
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert!(all[0].is_identity());
    }

    #[test]
    fn support_examples() {
        let c6 = RootSystem::build(Kind::C, 6).unwrap();
        let s = GroupElement::parse(c6.cartan(), "-6,-2,5,4,3,-1").unwrap();
        let supp: Vec<String> = s.support(&c6).unwrap().iter().map(Root::eps_string).collect();
        assert_eq!(supp, ["e1+e6", "2e2", "e3-e5"]);
        assert!(GroupElement::identity(c6.cartan()).support(&c6).unwrap().is_empty());
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        let r = c3.parse_root("e1-e2").unwrap();
        let s = GroupElement::from_reflection(&c3, &r).unwrap();
        assert_eq!(s.support(&c3).unwrap(), vec![r]);
        let not_inv = GroupElement::parse(c3.cartan(), "2,3,1").unwrap();
        assert!(matches!(not_inv.support(&c3), Err(Error::Precondition(_))));
    }

    #[test]
    fn involution_is_product_of_support_reflections() {
        for (kind, n) in [(Kind::A, 4), (Kind::B, 3), (Kind::C, 4)] {
            let rs = RootSystem::build(kind, n).unwrap();
            for sigma in enumerate_involutions(rs.cartan()) {
                let supp = sigma.support(&rs).unwrap();
                let refl: Vec<_> = supp
                    .iter()
                    .map(|r| GroupElement::from_reflection(&rs, r).unwrap())
                    .collect();
                // forward, reversed, and rotated orders
                let mut orders = vec![refl.clone()];
                orders.push(refl.iter().rev().cloned().collect());
                let mut rot = refl.clone();
                if !rot.is_empty() {
                    rot.rotate_left(1);
                }
                orders.push(rot);
                for order in orders {
                    let prod = order
                        .iter()
                        .fold(GroupElement::identity(rs.cartan()), |acc, s| acc.compose(s).unwrap());
                    assert_eq!(prod, sigma);
                }
                if kind != Kind::A {
                    for k in 1..=n as i64 {
                        let col = rs.column(k).unwrap();
                        assert!(supp.iter().filter(|r| col.contains(r)).count() <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn parabolic_examples() {
        let n = 5;
        let t = ct(Kind::C, n);
        let rest: Vec<usize> = (2..=n).collect();
        for w in enumerate_involutions(t) {
            let (u, v) = w.parabolic_decompose(&rest).unwrap();
            assert_eq!(u.compose(&v).unwrap(), w);
            assert_eq!(u.length() + v.length(), w.length());
            assert_eq!(v.apply(1), 1);
            for &i in &rest {
                assert!(!u.is_right_descent(i));
            }
            let x = w.apply(1);
            let j = x.unsigned_abs() as usize;
            let expected: Vec<usize> = if x > 1 {
                (1..j).rev().collect()
            } else if x == -1 {
                (1..n).chain((1..=n).rev()).collect()
            } else if x < 0 {
                (j..n).chain((1..=n).rev()).collect()
            } else {
                vec![]
            };
            assert_eq!(u, GroupElement::from_word(t, &expected).unwrap(), "w = {w}");
        }
        let w = GroupElement::from_word(t, &[2, 3, 2, 5]).unwrap();
        let (u, v) = w.parabolic_decompose(&rest).unwrap();
        assert!(u.is_identity());
        assert_eq!(v, w);
    }
}
