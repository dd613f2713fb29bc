//! Exact arithmetic in `Q[a1, ..., an]` (variables are the simple roots)
//! and in rational functions whose denominators are products of roots.

mod linear;
mod poly;
mod ratfunc;

pub use linear::LinearForm;
pub use poly::{Monomial, Polynomial};
pub use ratfunc::RationalFunction;

pub use num::{BigInt, BigRational};

pub(crate) fn rational_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(crate::Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
    }
}
