use std::fmt;

use num::integer::Integer;
use serde::{Deserialize, Serialize};

use crate::root_system::{linear_form_string, Root};

/// A linear form `sum c_i a_i` with integer coefficients in the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm(pub Vec<i64>);

impl LinearForm {
    pub fn new(coords: Vec<i64>) -> Self {
        LinearForm(coords)
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        LinearForm(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Index and coefficient of the first nonzero variable (the leading
    /// variable in graded-lex order with `a1 > a2 > ...`).
    pub fn leading(&self) -> Option<(usize, i64)> {
        self.0.iter().enumerate().find(|(_, &c)| c != 0).map(|(i, &c)| (i, c))
    }

    pub fn neg(&self) -> Self {
        LinearForm(self.0.iter().map(|c| -c).collect())
    }

    /// Splits into `scale * primitive` with `primitive` having nonnegative
    /// coefficients and content one. `None` when the form is zero or has
    /// coefficients of both signs (then it is not `±` a positive root).
    pub fn split_positive(&self) -> Option<(i64, LinearForm)> {
        if self.is_zero() {
            return None;
        }
        let pos = self.0.iter().all(|&c| c >= 0);
        let neg = self.0.iter().all(|&c| c <= 0);
        if !pos && !neg {
            return None;
        }
        let g = self.0.iter().fold(0i64, |g, &c| g.gcd(&c));
        let sign = if pos { 1 } else { -1 };
        let scale = sign * g;
        Some((scale, LinearForm(self.0.iter().map(|c| c / scale).collect())))
    }
}

impl From<&Root> for LinearForm {
    fn from(r: &Root) -> Self {
        LinearForm(r.alpha().to_vec())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&linear_form_string(&self.0))
    }
}
