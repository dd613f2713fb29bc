//! Bruhat order: rank-matrix criterion and the subword oracle.

use std::fmt;

use super::{signed_position, GroupElement};
use crate::error::Result;
use crate::root_system::Kind;

/// South-West rook counts of the permutation matrix of `w`.
///
/// For types B/C rows and columns are labelled `1..n, -n..-1` (top to
/// bottom, left to right); for type A they are `1..n+1`. Entry `(i, j)`
/// counts rooks in rows at or below `i` and columns at or left of `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankMatrix {
    labels: Vec<i32>,
    entries: Vec<Vec<u32>>,
}

impl RankMatrix {
    pub fn of(w: &GroupElement) -> Self {
        let m = w.images().len();
        let (labels, size): (Vec<i32>, usize) = match w.cartan().kind() {
            Kind::A => ((1..=m as i32).collect(), m),
            Kind::B | Kind::C => {
                let mut l: Vec<i32> = (1..=m as i32).collect();
                l.extend((1..=m as i32).rev().map(|x| -x));
                (l, 2 * m)
            }
        };
        let pos = |x: i32| signed_position(x, m) - 1;
        // rook_row[c] = row index of the rook in column c
        let rook_row: Vec<usize> = labels.iter().map(|&c| pos(w.apply(c))).collect();
        let mut entries = vec![vec![0u32; size]; size];
        for i in (0..size).rev() {
            let mut run = 0u32;
            for j in 0..size {
                if rook_row[j] == i {
                    run += 1;
                }
                let below = if i + 1 < size { entries[i + 1][j] } else { 0 };
                entries[i][j] = below + run;
            }
        }
        RankMatrix { labels, entries }
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry by row/column labels.
    pub fn get(&self, row: i32, col: i32) -> u32 {
        let idx = |x: i32| self.labels.iter().position(|&l| l == x).expect("label in range");
        self.entries[idx(row)][idx(col)]
    }

    /// The strictly lower-triangular part (row position greater than column position).
    pub fn strict_lower(&self) -> RankMatrix {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i > j { x } else { 0 })
                    .collect()
            })
            .collect();
        RankMatrix {
            labels: self.labels.clone(),
            entries,
        }
    }

    /// Entrywise `self <= other`.
    pub fn dominated_by(&self, other: &RankMatrix) -> bool {
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.entries.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let parts: Vec<String> = row.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

impl GroupElement {
    pub fn rank_matrix(&self) -> RankMatrix {
        RankMatrix::of(self)
    }
}

/// `v <= w` in Bruhat order via entrywise rank-matrix comparison.
pub fn bruhat_leq(v: &GroupElement, w: &GroupElement) -> Result<bool> {
    v.check_same(w)?;
    Ok(v.rank_matrix().dominated_by(&w.rank_matrix()))
}

/// `v <= w` by scanning one reduced word of `w` from the right and
/// stripping every letter that is a right descent of the current `v`;
/// `v <= w` iff this ends at the identity.
///
/// This is the subword property in its one-sided form: if `s` is a right
/// descent of `w` then `v <= w` iff `min(v, vs) <= ws`.
pub fn bruhat_leq_subword(v: &GroupElement, w: &GroupElement) -> Result<bool> {
    v.check_same(w)?;
    let word = w.reduced_word();
    let mut cur = v.clone();
    for &i in word.letters.iter().rev() {
        if cur.is_right_descent(i) {
            cur = cur.mul_simple(i);
        }
    }
    Ok(cur.is_identity())
}

/// Involution comparison through the strictly lower-triangular rank matrices.
pub fn involution_leq(sigma: &GroupElement, tau: &GroupElement) -> Result<bool> {
    sigma.check_same(tau)?;
    Ok(sigma
        .rank_matrix()
        .strict_lower()
        .dominated_by(&tau.rank_matrix().strict_lower()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, RootSystem};
    use crate::weyl::{enumerate, enumerate_involutions};

    const PRINTED: [[u32; 8]; 8] = [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [1, 2, 3, 4, 4, 5, 6, 7],
        [1, 2, 3, 4, 4, 5, 5, 6],
        [1, 2, 3, 4, 4, 5, 5, 5],
        [1, 2, 2, 3, 3, 4, 4, 4],
        [1, 2, 2, 3, 3, 3, 3, 3],
        [0, 1, 1, 2, 2, 2, 2, 2],
        [0, 0, 0, 1, 1, 1, 1, 1],
    ];

    #[test]
    fn printed_rank_matrix() {
        for kind in [Kind::B, Kind::C] {
            let t = CartanType::new(kind, 4).unwrap();
            let w = GroupElement::parse(t, "-3,-2,4,-1").unwrap();
            let r = w.rank_matrix();
            for (i, row) in PRINTED.iter().enumerate() {
                assert_eq!(r.entries()[i], row.to_vec(), "row {i}");
            }
            assert_eq!(r.get(-1, 1), 0);
            assert_eq!(r.get(4, -1), 5);
            assert_eq!(r.get(-4, 4), 3);
            assert_eq!(r.labels(), &[1, 2, 3, 4, -4, -3, -2, -1]);
        }
    }

    #[test]
    fn unit_steps_and_top_row() {
        let t = CartanType::new(Kind::C, 3).unwrap();
        for w in enumerate(t) {
            let r = w.rank_matrix();
            let e = r.entries();
            let s = r.size();
            assert_eq!(e[0], (1..=s as u32).collect::<Vec<_>>());
            for i in 0..s {
                for j in 0..s {
                    let left = if j > 0 { e[i][j - 1] } else { 0 };
                    let below = if i + 1 < s { e[i + 1][j] } else { 0 };
                    assert!(e[i][j] - left <= 1);
                    assert!(e[i][j] - below <= 1);
                }
            }
        }
    }

    #[test]
    fn identity_rank_matrix() {
        let t = CartanType::new(Kind::B, 3).unwrap();
        let r = GroupElement::identity(t).rank_matrix();
        for i in 0..6 {
            for j in 0..6 {
                let expected = (j + 1usize).saturating_sub(i) as u32;
                assert_eq!(r.entries()[i][j], expected);
            }
        }
    }

    #[test]
    fn rank_and_subword_agree() {
        for (kind, n) in [(Kind::A, 2), (Kind::B, 2), (Kind::C, 2), (Kind::A, 3)] {
            let t = CartanType::new(kind, n).unwrap();
            let all: Vec<_> = enumerate(t).collect();
            for v in &all {
                for w in &all {
                    assert_eq!(
                        bruhat_leq(v, w).unwrap(),
                        bruhat_leq_subword(v, w).unwrap(),
                        "{v} <= {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_is_minimum() {
        let t = CartanType::new(Kind::C, 3).unwrap();
        let id = GroupElement::identity(t);
        for w in enumerate(t) {
            assert!(bruhat_leq(&id, &w).unwrap());
            assert!(bruhat_leq_subword(&id, &w).unwrap());
            assert!(bruhat_leq_subword(&w, &w).unwrap());
        }
    }

    #[test]
    fn remark_chain_in_c3() {
        let rs = RootSystem::build(Kind::C, 3).unwrap();
        let s = |t: &str| GroupElement::from_reflection(&rs, &rs.parse_root(t).unwrap()).unwrap();
        let chain = ["e1-e2", "e1-e3", "e1+e3", "e1+e2"];
        for p in chain.windows(2) {
            assert!(bruhat_leq(&s(p[0]), &s(p[1])).unwrap());
            assert!(!bruhat_leq(&s(p[1]), &s(p[0])).unwrap());
        }
        // comparisons with a long root hold for k <= i only
        assert!(bruhat_leq(&s("e2-e3"), &s("2e1")).unwrap());
        assert!(bruhat_leq(&s("e2-e3"), &s("2e2")).unwrap());
        assert!(!bruhat_leq(&s("e1-e2"), &s("2e3")).unwrap());
        assert!(!bruhat_leq(&s("e2+e3"), &s("2e1")).unwrap());
        assert!(!bruhat_leq(&s("2e1"), &s("e2+e3")).unwrap());
    }

    #[test]
    fn involution_criterion_agrees_on_b2() {
        let t = CartanType::new(Kind::B, 2).unwrap();
        let inv: Vec<_> = enumerate_involutions(t).collect();
        for a in &inv {
            for b in &inv {
                assert_eq!(involution_leq(a, b).unwrap(), bruhat_leq(a, b).unwrap());
            }
        }
    }
}
