//! Coadjoint orbits of the Borel subalgebra on `n*` for `sl_n` and `sp_2n`.
//!
//! For an involution `w` the functional `f_w = sum_{b in Supp(w)} e_b^*` is
//! paired with brackets: the tangent space of the orbit at `f_w` is spanned by
//! `y -> f_w([y, x])` for `x` in `b`, so its dimension is the rank of the
//! matrix `M[k][m] = f_w([y_m, x_k])`.
//!
//! Matrices for type C are indexed `1..n, -n..-1`, so `n` is strictly upper
//! triangular in both types.

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, Kind, Root, RootShape, RootSystem};
use crate::weyl::GroupElement;

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zero(size: usize) -> Self {
        Matrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.size + c]
    }

    fn add_at(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.size + c] += v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.size;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix {
            size: self.size,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// `[self, other] = self*other - other*self`.
    pub fn bracket(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Strictly upper triangular part.
    pub fn upper_part(&self) -> Matrix {
        let mut out = Matrix::zero(self.size);
        for i in 0..self.size {
            for j in i + 1..self.size {
                out.data[i * self.size + j] = self.get(i, j);
            }
        }
        out
    }
}

/// Matrix realization of `b` and `n` with root vectors as the basis of `n`.
#[derive(Debug, Clone)]
pub struct OrbitProblem {
    rs: RootSystem,
    size: usize,
    basis_b: Vec<Matrix>,
    basis_n: Vec<Matrix>,
    /// Matrix entry from which the coefficient of each `e_b` is read.
    readout: Vec<(usize, usize)>,
}

impl OrbitProblem {
    /// `sl_n` for `kind = A` (so `n >= 2`), `sp_2n` for `kind = C`.
    pub fn realize(kind: Kind, n: usize) -> Result<Self> {
        match kind {
            Kind::A => {
                if n < 2 {
                    return Err(Error::InvalidArgument(format!("sl_{n} has no positive roots")));
                }
                Self::for_cartan(CartanType::new(Kind::A, n - 1)?)
            }
            _ => Self::for_cartan(CartanType::new(kind, n)?),
        }
    }

    pub fn for_cartan(ct: CartanType) -> Result<Self> {
        let n = ct.rank();
        let (size, pos): (usize, Box<dyn Fn(i64) -> usize>) = match ct.kind() {
            Kind::A => (n + 1, Box::new(|i: i64| (i - 1) as usize)),
            Kind::C => {
                let m = n as i64;
                (
                    2 * n,
                    Box::new(move |i: i64| if i > 0 { (i - 1) as usize } else { (2 * m + i) as usize }),
                )
            }
            Kind::B => {
                return Err(Error::UnsupportedKind {
                    kind: Kind::B,
                    what: "coadjoint orbit realization",
                })
            }
        };
        let rs = RootSystem::from_cartan(ct);
        let mut basis_n = Vec::new();
        let mut readout = Vec::new();
        for root in rs.positive_roots() {
            let mut e = Matrix::zero(size);
            let at = match (ct.kind(), shape(root)?) {
                (Kind::A, RootShape::Diff(i, j)) => {
                    let (i, j) = (i as i64, j as i64);
                    e.add_at(pos(i), pos(j), 1);
                    (pos(i), pos(j))
                }
                (Kind::C, RootShape::Diff(i, j)) => {
                    let (i, j) = (i as i64, j as i64);
                    e.add_at(pos(i), pos(j), 1);
                    e.add_at(pos(-j), pos(-i), -1);
                    (pos(i), pos(j))
                }
                (Kind::C, RootShape::Sum(i, j)) => {
                    let (i, j) = (i as i64, j as i64);
                    e.add_at(pos(i), pos(-j), 1);
                    e.add_at(pos(j), pos(-i), 1);
                    (pos(i), pos(-j))
                }
                (Kind::C, RootShape::Long(i)) => {
                    let i = i as i64;
                    e.add_at(pos(i), pos(-i), 1);
                    (pos(i), pos(-i))
                }
                _ => return Err(Error::Invariant(format!("unexpected root {}", root.eps_string()))),
            };
            basis_n.push(e);
            readout.push(at);
        }
        let mut basis_b = Vec::new();
        for i in 1..=n as i64 {
            let mut h = Matrix::zero(size);
            match ct.kind() {
                Kind::A => {
                    h.add_at(pos(i), pos(i), 1);
                    h.add_at(pos(i + 1), pos(i + 1), -1);
                }
                _ => {
                    h.add_at(pos(i), pos(i), 1);
                    h.add_at(pos(-i), pos(-i), -1);
                }
            }
            basis_b.push(h);
        }
        basis_b.extend(basis_n.iter().cloned());
        let problem = OrbitProblem {
            rs,
            size,
            basis_b,
            basis_n,
            readout,
        };
        problem.check_closure()?;
        Ok(problem)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn matrix_size(&self) -> usize {
        self.size
    }

    pub fn basis_b(&self) -> &[Matrix] {
        &self.basis_b
    }

    pub fn basis_n(&self) -> &[Matrix] {
        &self.basis_n
    }

    /// Coordinates of an element of `n` in the root-vector basis.
    pub fn coordinates(&self, z: &Matrix) -> Vec<i64> {
        self.readout.iter().map(|&(r, c)| z.get(r, c)).collect()
    }

    fn span_element(&self, coords: &[i64]) -> Matrix {
        let mut out = Matrix::zero(self.size);
        for (c, e) in coords.iter().zip(&self.basis_n) {
            if *c != 0 {
                for (o, x) in out.data.iter_mut().zip(&e.data) {
                    *o += c * x;
                }
            }
        }
        out
    }

    fn check_closure(&self) -> Result<()> {
        for x in &self.basis_b {
            for y in &self.basis_n {
                let z = y.bracket(x);
                if self.span_element(&self.coordinates(&z)) != z {
                    return Err(Error::Invariant("[b, n] is not contained in n".into()));
                }
            }
        }
        Ok(())
    }

    /// Coefficients of `f_w` over the dual root-vector basis.
    pub fn f_of(&self, sigma: &GroupElement) -> Result<Vec<i64>> {
        let supp = sigma.support(&self.rs)?;
        Ok(self
            .rs
            .positive_roots()
            .iter()
            .map(|r| i64::from(supp.contains(r)))
            .collect())
    }

    fn evaluate(&self, f: &[i64], z: &Matrix) -> i64 {
        self.coordinates(z).iter().zip(f).map(|(a, b)| a * b).sum()
    }

    /// `M[k][m] = f([y_m, x_k])`; with `flipped`, `f([x_k, y_m])`; with
    /// `project`, the bracket is first projected to `n`.
    pub fn tangent_matrix(&self, f: &[i64], flipped: bool, project: bool) -> Vec<Vec<i64>> {
        self.basis_b
            .iter()
            .map(|x| {
                self.basis_n
                    .iter()
                    .map(|y| {
                        let mut z = if flipped { x.bracket(y) } else { y.bracket(x) };
                        if project {
                            z = z.upper_part();
                        }
                        self.evaluate(f, &z)
                    })
                    .collect()
            })
            .collect()
    }

    /// Dimension of the orbit of `f_sigma`.
    pub fn orbit_dim(&self, sigma: &GroupElement) -> Result<usize> {
        let f = self.f_of(sigma)?;
        Ok(rank(&self.tangent_matrix(&f, false, false)))
    }
}

fn shape(root: &Root) -> Result<RootShape> {
    root.shape()
        .ok_or_else(|| Error::Invariant(format!("root {} has no standard shape", root.eps_string())))
}

/// Rank over the rationals by Gaussian elimination.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &factor * p;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
