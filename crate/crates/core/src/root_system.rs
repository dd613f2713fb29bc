//! Root systems of types A, B and C.
//!
//! Roots are stored in two coordinate systems: the simple-root basis
//! (`alpha`) which is what polynomials are written in, and the standard
//! orthonormal basis (`eps`) which is what signed permutations act on.
//!
//! Conventions: `A_n` lives in `R^{n+1}` with `alpha_i = e_i - e_{i+1}`;
//! `B_n` and `C_n` live in `R^n` with `alpha_i = e_i - e_{i+1}` for `i < n`
//! and `alpha_n = e_n` (B) or `2 e_n` (C).

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            "C" | "c" => Ok(Kind::C),
            other => Err(Error::Parse(format!("unknown root system type {other:?}"))),
        }
    }
}

/// A validated (kind, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    kind: Kind,
    rank: usize,
}

impl CartanType {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        match kind {
            Kind::A if rank < 1 => Err(Error::InvalidArgument(format!(
                "type A requires rank >= 1, got {rank}"
            ))),
            Kind::B | Kind::C if rank < 2 => Err(Error::InvalidArgument(format!(
                "type {kind} requires rank >= 2, got {rank}"
            ))),
            _ => Ok(CartanType { kind, rank }),
        }
    }

    /// Like [`CartanType::new`] but also allows `B_1`/`C_1`.
    ///
    /// Rank one in types B and C is the group of order two; it shows up as a
    /// parabolic piece or as an embedding source, never as a user-facing system.
    pub fn new_unchecked_rank(kind: Kind, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        Ok(CartanType { kind, rank })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of letters permuted by the Weyl group (and the dimension of
    /// the ambient eps-space).
    pub fn points(&self) -> usize {
        match self.kind {
            Kind::A => self.rank + 1,
            Kind::B | Kind::C => self.rank,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.kind {
            Kind::A => n * (n + 1) / 2,
            Kind::B | Kind::C => n * n,
        }
    }

    /// Converts simple-root coordinates to eps coordinates.
    pub fn alpha_to_eps(&self, alpha: &[i64]) -> Vec<i64> {
        let n = self.rank;
        debug_assert_eq!(alpha.len(), n);
        let mut eps = vec![0i64; self.points()];
        let prev = |i: usize| if i == 0 { 0 } else { alpha[i - 1] };
        match self.kind {
            Kind::A => {
                for i in 0..n {
                    eps[i] = alpha[i] - prev(i);
                }
                eps[n] = -alpha[n - 1];
            }
            Kind::B => {
                for i in 0..n {
                    eps[i] = alpha[i] - prev(i);
                }
            }
            Kind::C => {
                for i in 0..n - 1 {
                    eps[i] = alpha[i] - prev(i);
                }
                eps[n - 1] = 2 * alpha[n - 1] - prev(n - 1);
            }
        }
        eps
    }

    /// Converts eps coordinates to simple-root coordinates; `None` when the
    /// vector is not in the root lattice.
    pub fn eps_to_alpha(&self, eps: &[i64]) -> Option<Vec<i64>> {
        let n = self.rank;
        if eps.len() != self.points() {
            return None;
        }
        let mut alpha = Vec::with_capacity(n);
        let mut partial = 0i64;
        for (i, &e) in eps.iter().enumerate().take(n) {
            partial += e;
            if self.kind == Kind::C && i == n - 1 {
                if partial % 2 != 0 {
                    return None;
                }
                alpha.push(partial / 2);
            } else {
                alpha.push(partial);
            }
        }
        if self.kind == Kind::A && partial + eps[n] != 0 {
            return None;
        }
        Some(alpha)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

/// The shape of a root in eps coordinates; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootShape {
    /// `e_i - e_j`, `i < j` for positive roots.
    Diff(usize, usize),
    /// `e_i + e_j`, `i < j`.
    Sum(usize, usize),
    /// `e_i` (type B).
    Short(usize),
    /// `2 e_i` (type C).
    Long(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    alpha: Vec<i64>,
    eps: Vec<i64>,
}

impl Root {
    pub fn from_alpha(ct: CartanType, alpha: Vec<i64>) -> Self {
        let eps = ct.alpha_to_eps(&alpha);
        Root { alpha, eps }
    }

    pub fn from_eps(ct: CartanType, eps: Vec<i64>) -> Option<Self> {
        let alpha = ct.eps_to_alpha(&eps)?;
        Some(Root { alpha, eps })
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn is_positive(&self) -> bool {
        self.alpha.iter().any(|&c| c != 0) && self.alpha.iter().all(|&c| c >= 0)
    }

    pub fn negate(&self) -> Root {
        Root {
            alpha: self.alpha.iter().map(|c| -c).collect(),
            eps: self.eps.iter().map(|c| -c).collect(),
        }
    }

    pub fn shape(&self) -> Option<RootShape> {
        let nz: Vec<(usize, i64)> = self
            .eps
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
            .collect();
        match nz.as_slice() {
            [(i, 1)] => Some(RootShape::Short(*i)),
            [(i, 2)] => Some(RootShape::Long(*i)),
            [(i, 1), (j, -1)] => Some(RootShape::Diff(*i, *j)),
            [(i, 1), (j, 1)] => Some(RootShape::Sum(*i, *j)),
            _ => None,
        }
    }

    /// eps-form text, e.g. `e1-e2`, `e1+e2`, `2e1`, `e3`.
    pub fn eps_string(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.eps.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// alpha-form text, e.g. `a1+2*a2`.
    pub fn alpha_string(&self) -> String {
        linear_form_string(&self.alpha)
    }

    fn dot_eps(&self, other: &Root) -> i64 {
        self.eps.iter().zip(&other.eps).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.eps_string())
    }
}

/// Renders an integer vector in the simple-root basis as `a1+2*a2`.
pub fn linear_form_string(coords: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push_str(&format!("a{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A root together with its sign: `positive == false` means the value is
/// `-root`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub root: Root,
    pub positive: bool,
}

impl SignedRoot {
    /// Coordinates of the signed value in the simple-root basis.
    pub fn alpha_value(&self) -> Vec<i64> {
        if self.positive {
            self.root.alpha.clone()
        } else {
            self.root.alpha.iter().map(|c| -c).collect()
        }
    }
}

impl fmt::Display for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.root)
        } else {
            write!(f, "-({})", self.root)
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanType,
    positive_roots: Vec<Root>,
    simple_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    /// Builds the positive roots ordered by column, and within column `i`
    /// as `e_i - e_{i+1}, ..., e_i - e_n, e_i | 2e_i, e_i + e_n, ..., e_i + e_{i+1}`.
    pub fn build(kind: Kind, rank: usize) -> Result<Self> {
        Ok(Self::from_cartan(CartanType::new(kind, rank)?))
    }

    pub fn from_cartan(ct: CartanType) -> Self {
        let m = ct.points();
        let unit = |i: usize, c: i64| {
            let mut v = vec![0i64; m];
            v[i - 1] = c;
            v
        };
        let mut eps_list: Vec<Vec<i64>> = Vec::with_capacity(ct.num_positive_roots());
        for i in 1..=ct.rank {
            for j in i + 1..=m {
                let mut v = unit(i, 1);
                v[j - 1] = -1;
                eps_list.push(v);
            }
            match ct.kind {
                Kind::A => {}
                Kind::B => eps_list.push(unit(i, 1)),
                Kind::C => eps_list.push(unit(i, 2)),
            }
            if ct.kind != Kind::A {
                for j in (i + 1..=m).rev() {
                    let mut v = unit(i, 1);
                    v[j - 1] = 1;
                    eps_list.push(v);
                }
            }
        }
        let positive_roots: Vec<Root> = eps_list
            .into_iter()
            .map(|e| Root::from_eps(ct, e).expect("positive roots lie in the root lattice"))
            .collect();
        let simple_roots = (0..ct.rank)
            .map(|i| {
                let mut a = vec![0i64; ct.rank];
                a[i] = 1;
                Root::from_alpha(ct, a)
            })
            .collect();
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.alpha.clone(), k))
            .collect();
        RootSystem {
            cartan: ct,
            positive_roots,
            simple_roots,
            index,
        }
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn kind(&self) -> Kind {
        self.cartan.kind
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    /// `i` is 1-based.
    pub fn simple_root(&self, i: usize) -> &Root {
        &self.simple_roots[i - 1]
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.index.get(&root.alpha).copied()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.index_of(root).is_some()
    }

    /// Looks up a root by eps coordinates, returning it with its sign.
    pub fn signed_root_from_eps(&self, eps: &[i64]) -> Option<SignedRoot> {
        let alpha = self.cartan.eps_to_alpha(eps)?;
        if let Some(&k) = self.index.get(&alpha) {
            return Some(SignedRoot {
                root: self.positive_roots[k].clone(),
                positive: true,
            });
        }
        let neg: Vec<i64> = alpha.iter().map(|c| -c).collect();
        self.index.get(&neg).map(|&k| SignedRoot {
            root: self.positive_roots[k].clone(),
            positive: false,
        })
    }

    /// Parses an eps-form root such as `e1-e2`, `2e3` or `e1+e4`.
    pub fn parse_root(&self, text: &str) -> Result<Root> {
        let mut eps = vec![0i64; self.cartan.points()];
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        if rest.is_empty() {
            return Err(Error::Parse("empty root".into()));
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1..]
                .find(['+', '-'])
                .map(|p| p + 1)
                .unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let epos = term
                .find('e')
                .ok_or_else(|| Error::Parse(format!("bad root term {term:?}")))?;
            let coeff: i64 = if epos == 0 {
                1
            } else {
                term[..epos]
                    .trim_end_matches('*')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
            };
            let idx: usize = term[epos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in {term:?}")))?;
            if idx == 0 || idx > eps.len() {
                return Err(Error::Parse(format!("index {idx} out of range")));
            }
            eps[idx - 1] += sign * coeff;
        }
        let signed = self
            .signed_root_from_eps(&eps)
            .ok_or_else(|| Error::Parse(format!("{text:?} is not a root of {}", self.cartan)))?;
        if !signed.positive {
            return Err(Error::Parse(format!("{text:?} is a negative root")));
        }
        Ok(signed.root)
    }

    /// `(row, col)` bookkeeping for B/C positive roots:
    /// `row(e_i - e_j) = j`, `row(e_i + e_j) = -j`, `row(e_i) = 0`,
    /// `row(2e_i) = -i`, and `col = i` throughout.
    pub fn row_col(&self, root: &Root) -> Result<(i64, i64)> {
        if self.kind() == Kind::A {
            return Err(Error::UnsupportedKind {
                kind: Kind::A,
                what: "row/column maps",
            });
        }
        if !self.contains(root) {
            return Err(Error::InvalidArgument(format!(
                "{root} is not a positive root of {}",
                self.cartan
            )));
        }
        let (row, col) = match root.shape() {
            Some(RootShape::Diff(i, j)) => (j as i64, i),
            Some(RootShape::Sum(i, j)) => (-(j as i64), i),
            Some(RootShape::Short(i)) => (0, i),
            Some(RootShape::Long(i)) => (-(i as i64), i),
            None => unreachable!("positive roots always have a recognised shape"),
        };
        Ok((row, col as i64))
    }

    /// The `k`-th column `C_k`.
    pub fn column(&self, k: i64) -> Result<Vec<Root>> {
        self.filter_roots(|rc| rc.1 == k)
    }

    /// The `k`-th row `R_k`.
    pub fn row(&self, k: i64) -> Result<Vec<Root>> {
        self.filter_roots(|rc| rc.0 == k)
    }

    fn filter_roots(&self, pred: impl Fn((i64, i64)) -> bool) -> Result<Vec<Root>> {
        let mut out = Vec::new();
        for r in &self.positive_roots {
            if pred(self.row_col(r)?) {
                out.push(r.clone());
            }
        }
        Ok(out)
    }

    /// `s_alpha(beta) = beta - 2 (beta, alpha) / (alpha, alpha) alpha`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<SignedRoot> {
        if alpha.eps.len() != self.cartan.points() || beta.eps.len() != self.cartan.points() {
            return Err(Error::InvalidArgument("root from a different system".into()));
        }
        let num = 2 * beta.dot_eps(alpha);
        let den = alpha.dot_eps(alpha);
        if den == 0 || num % den != 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot reflect {beta} in {alpha}"
            )));
        }
        let c = num / den;
        let eps: Vec<i64> = beta
            .eps
            .iter()
            .zip(&alpha.eps)
            .map(|(b, a)| b - c * a)
            .collect();
        self.signed_root_from_eps(&eps)
            .ok_or_else(|| Error::Invariant(format!("reflection of {beta} in {alpha} left the root system")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps_strings(rs: &RootSystem) -> Vec<String> {
        rs.positive_roots().iter().map(Root::eps_string).collect()
    }

    #[test]
    fn c2_positive_roots() {
        let rs = RootSystem::build(Kind::C, 2).unwrap();
        assert_eq!(eps_strings(&rs), ["e1-e2", "2e1", "e1+e2", "2e2"]);
    }

    #[test]
    fn a2_positive_roots() {
        let rs = RootSystem::build(Kind::A, 2).unwrap();
        let alphas: Vec<String> = rs.positive_roots().iter().map(Root::alpha_string).collect();
        assert_eq!(alphas, ["a1", "a1+a2", "a2"]);
    }

    #[test]
    fn b2_short_simple_root() {
        let rs = RootSystem::build(Kind::B, 2).unwrap();
        assert_eq!(rs.positive_roots().len(), 4);
        assert_eq!(rs.simple_root(2).eps_string(), "e2");
        let rc = RootSystem::build(Kind::C, 2).unwrap();
        assert_eq!(rc.simple_root(2).eps_string(), "2e2");
    }

    #[test]
    fn rank_constraints() {
        assert!(RootSystem::build(Kind::A, 0).is_err());
        assert!(RootSystem::build(Kind::B, 1).is_err());
        assert!(RootSystem::build(Kind::C, 1).is_err());
        assert!(RootSystem::build(Kind::A, 1).is_ok());
    }

    #[test]
    fn root_counts() {
        for n in 1..=5 {
            assert_eq!(RootSystem::build(Kind::A, n).unwrap().positive_roots().len(), n * (n + 1) / 2);
        }
        for n in 2..=5 {
            assert_eq!(RootSystem::build(Kind::B, n).unwrap().positive_roots().len(), n * n);
            assert_eq!(RootSystem::build(Kind::C, n).unwrap().positive_roots().len(), n * n);
        }
    }

    #[test]
    fn row_col_values() {
        let c6 = RootSystem::build(Kind::C, 6).unwrap();
        assert_eq!(c6.row_col(&c6.parse_root("e1+e6").unwrap()).unwrap(), (-6, 1));
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        assert_eq!(c3.row_col(&c3.parse_root("2e3").unwrap()).unwrap(), (-3, 3));
        let b3 = RootSystem::build(Kind::B, 3).unwrap();
        assert_eq!(b3.row_col(&b3.parse_root("e2").unwrap()).unwrap(), (0, 2));
        let a3 = RootSystem::build(Kind::A, 3).unwrap();
        let r = a3.positive_roots()[0].clone();
        assert!(matches!(a3.row_col(&r), Err(Error::UnsupportedKind { .. })));
    }

    #[test]
    fn columns_partition() {
        for kind in [Kind::B, Kind::C] {
            for n in 2..=5 {
                let rs = RootSystem::build(kind, n).unwrap();
                let mut total = 0;
                for k in 1..=n as i64 {
                    let col = rs.column(k).unwrap();
                    assert_eq!(col.len(), 2 * (n - k as usize) + 1);
                    total += col.len();
                }
                assert_eq!(total, rs.positive_roots().len());
            }
        }
    }

    #[test]
    fn reflect_examples() {
        let c2 = RootSystem::build(Kind::C, 2).unwrap();
        let r = c2
            .reflect(&c2.parse_root("2e1").unwrap(), &c2.parse_root("e1-e2").unwrap())
            .unwrap();
        assert!(!r.positive);
        assert_eq!(r.root.eps_string(), "e1+e2");

        let a2 = RootSystem::build(Kind::A, 2).unwrap();
        let r = a2.reflect(a2.simple_root(1), a2.simple_root(2)).unwrap();
        assert!(r.positive);
        assert_eq!(r.root.alpha_string(), "a1+a2");

        let b2 = RootSystem::build(Kind::B, 2).unwrap();
        let e2 = b2.parse_root("e2").unwrap();
        let r = b2.reflect(&e2, &e2).unwrap();
        assert_eq!(r, SignedRoot { root: e2, positive: false });
    }

    #[test]
    fn simple_reflections_permute_other_positive_roots() {
        for (kind, lo) in [(Kind::A, 1), (Kind::B, 2), (Kind::C, 2)] {
            for n in lo..=4 {
                let rs = RootSystem::build(kind, n).unwrap();
                for i in 1..=n {
                    let ai = rs.simple_root(i).clone();
                    for beta in rs.positive_roots() {
                        let img = rs.reflect(&ai, beta).unwrap();
                        assert_eq!(!img.positive, *beta == ai, "{kind:?}{n} s{i}({beta})");
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_eps_round_trip() {
        for (kind, lo) in [(Kind::A, 1), (Kind::B, 2), (Kind::C, 2)] {
            for n in lo..=6 {
                let rs = RootSystem::build(kind, n).unwrap();
                let ct = rs.cartan();
                for r in rs.positive_roots() {
                    assert_eq!(ct.eps_to_alpha(&ct.alpha_to_eps(r.alpha())).unwrap(), r.alpha());
                    assert_eq!(ct.alpha_to_eps(&ct.eps_to_alpha(r.eps()).unwrap()), r.eps());
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        let r = c3.parse_root("e1+e2").unwrap();
        assert_eq!(r.alpha_string(), "a1+2*a2+a3");
        assert_eq!(r.to_string(), "e1+e2");
        assert!(c3.parse_root("3e1").is_err());
        assert!(c3.parse_root("e2-e1").is_err());
    }
}
