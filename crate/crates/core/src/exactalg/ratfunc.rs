use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Zero};
use serde_json::Value;

use super::{LinearForm, Polynomial};
use crate::error::{Error, Result};
use crate::weyl::GroupElement;

/// `numerator / prod(denominator)` where the denominator is a multiset of
/// primitive linear forms with nonnegative coefficients (positive roots).
///
/// Normal form: no denominator factor divides the numerator, and zero has an
/// empty denominator. Since the factors are pairwise non-associate
/// irreducibles, the normal form is unique and structural equality is
/// equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: BTreeMap<LinearForm, u32>,
}

impl RationalFunction {
    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(Polynomial::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Polynomial::one(nvars))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::from_poly(Polynomial::constant(nvars, c))
    }

    /// Builds `num / prod(den)` and normalizes. Each denominator entry must be
    /// `±` a positive-coefficient form.
    pub fn new(num: Polynomial, den: &[LinearForm]) -> Result<Self> {
        let mut f = Self::from_poly(num);
        for l in den {
            f = f.div_linear(l)?;
        }
        Ok(f)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// Denominator factors with multiplicities.
    pub fn denominator(&self) -> &BTreeMap<LinearForm, u32> {
        &self.den
    }

    /// Denominator factors listed with repetition, simple roots first
    /// (`a1, a2, ...`), then by height.
    pub fn denominator_factors(&self) -> Vec<LinearForm> {
        self.display_order()
            .into_iter()
            .flat_map(|(l, k)| std::iter::repeat_n(l.clone(), k as usize))
            .collect()
    }

    fn display_order(&self) -> Vec<(&LinearForm, u32)> {
        let mut v: Vec<(&LinearForm, u32)> = self.den.iter().map(|(l, &k)| (l, k)).collect();
        v.sort_by(|(a, _), (b, _)| {
            let height = |l: &LinearForm| l.coords().iter().sum::<i64>();
            height(a).cmp(&height(b)).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn denominator_degree(&self) -> u32 {
        self.den.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn into_polynomial(self) -> Option<Polynomial> {
        if self.den.is_empty() {
            Some(self.num)
        } else {
            None
        }
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<LinearForm> = self.den.keys().cloned().collect();
        for l in keys {
            let count = self.den.get_mut(&l).expect("key present");
            while *count > 0 {
                match self
                    .num
                    .divide_by_linear(&l)
                    .expect("denominator forms are nonzero")
                {
                    Some(q) => {
                        self.num = q;
                        *count -= 1;
                    }
                    None => break,
                }
            }
            if *count == 0 {
                self.den.remove(&l);
            }
        }
        self
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::VariableMismatch(self.nvars(), other.nvars()));
        }
        Ok(())
    }

    /// Sum over the least common denominator multiset.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let mut den = self.den.clone();
        for (l, &k) in &other.den {
            let e = den.entry(l.clone()).or_insert(0);
            *e = (*e).max(k);
        }
        let lift = |f: &Self| {
            let mut p = f.num.clone();
            for (l, &k) in &den {
                let have = f.den.get(l).copied().unwrap_or(0);
                for _ in have..k {
                    p = p.mul_linear(l);
                }
            }
            p
        };
        let num = &lift(self) + &lift(other);
        Ok(RationalFunction { num, den }.normalize())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars()));
        }
        let num = &self.num * &other.num;
        let mut den = self.den.clone();
        for (l, &k) in &other.den {
            *den.entry(l.clone()).or_insert(0) += k;
        }
        Ok(RationalFunction { num, den }.normalize())
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Result<Self> {
        self.checked_mul(&Self::from_poly(p.clone()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// `1 / l` for `l = ±` a positive-coefficient linear form.
    pub fn inv_linear(l: &LinearForm) -> Result<Self> {
        if l.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (scale, prim) = l.split_positive().ok_or_else(|| {
            Error::InvalidArgument(format!("{l} is not a signed positive-root form"))
        })?;
        let n = l.nvars();
        let mut den = BTreeMap::new();
        den.insert(prim, 1);
        Ok(RationalFunction {
            num: Polynomial::constant(n, BigRational::new(1.into(), scale.into())),
            den,
        })
    }

    /// `self / l`.
    pub fn div_linear(&self, l: &LinearForm) -> Result<Self> {
        if l.nvars() != self.nvars() {
            return Err(Error::VariableMismatch(self.nvars(), l.nvars()));
        }
        let inv = Self::inv_linear(l)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        self.checked_mul(&inv)
    }

    /// `1 / self` when the numerator is a nonzero constant.
    pub fn recip(&self) -> Result<Self> {
        let c = self
            .num
            .constant_value()
            .ok_or_else(|| Error::InvalidArgument(format!("cannot invert {self}: numerator is not constant")))?;
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.nvars();
        let num = self
            .den
            .iter()
            .fold(Polynomial::constant(n, c.recip()), |acc, (l, &k)| {
                (0..k).fold(acc, |a, _| a.mul_linear(l))
            });
        Ok(Self::from_poly(num))
    }

    /// Weyl group action; denominator roots are mapped to (signed) roots.
    pub fn act(&self, w: &GroupElement) -> Result<Self> {
        let mut num = self.num.act(w)?;
        let mut den = BTreeMap::new();
        for (l, &k) in &self.den {
            let img = LinearForm(w.act_on_alpha(l.coords()));
            let (scale, prim) = img.split_positive().ok_or_else(|| {
                Error::Invariant(format!("{w} maps denominator factor {l} to the non-root {img}"))
            })?;
            let factor = BigRational::new(1.into(), scale.into());
            for _ in 0..k {
                num = num.scale(&factor);
            }
            *den.entry(prim).or_insert(0) += k;
        }
        Ok(RationalFunction { num, den })
    }

    /// Adds a `"den"` entry (factors with repetition) to the numerator JSON.
    pub fn to_json(&self) -> Value {
        let mut v = self.num.to_json();
        let den: Vec<String> = self.denominator_factors().iter().map(|l| l.to_string()).collect();
        v["den"] = den.into();
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = Polynomial::from_json(v)?;
        let n = num.nvars();
        let mut den = Vec::new();
        if let Some(list) = v.get("den").and_then(Value::as_array) {
            for item in list {
                let s = item
                    .as_str()
                    .ok_or_else(|| Error::Parse("den entries must be strings".into()))?;
                den.push(parse_linear(n, s)?);
            }
        }
        Self::new(num, &den)
    }
}

/// Parses `a1+2*a2` style linear forms.
pub(crate) fn parse_linear(nvars: usize, s: &str) -> Result<LinearForm> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coords = vec![0i64; nvars];
    let bad = || Error::Parse(format!("bad linear form {s:?}"));
    let mut rest = s.as_str();
    if rest.is_empty() {
        return Err(bad());
    }
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let apos = term.find('a').ok_or_else(bad)?;
        let coeff: i64 = if apos == 0 {
            1
        } else {
            term[..apos].trim_end_matches('*').parse().map_err(|_| bad())?
        };
        let idx: usize = term[apos + 1..].parse().map_err(|_| bad())?;
        if idx == 0 || idx > nvars {
            return Err(bad());
        }
        coords[idx - 1] += sign * coeff;
    }
    Ok(LinearForm(coords))
}

impl fmt::Display for RationalFunction {
    /// `numerator` or `(numerator)/(f1*f2^2*...)`, e.g. `1/(a1*a2*(a1+a2))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let factors: Vec<String> = self
            .display_order()
            .into_iter()
            .map(|(l, k)| {
                let base = if l.coords().iter().filter(|&&c| c != 0).count() > 1
                    || l.coords().iter().any(|&c| c > 1)
                {
                    format!("({l})")
                } else {
                    l.to_string()
                };
                if k > 1 {
                    format!("{base}^{k}")
                } else {
                    base
                }
            })
            .collect();
        if factors.len() == 1 && !factors[0].contains('^') {
            write!(f, "/{}", factors[0])
        } else {
            write!(f, "/({})", factors.join("*"))
        }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero(0)
    }
}

impl RationalFunction {
    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.constant_value().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(v: &[i64]) -> LinearForm {
        LinearForm(v.to_vec())
    }

    fn inv(v: &[i64]) -> RationalFunction {
        RationalFunction::inv_linear(&lin(v)).unwrap()
    }

    #[test]
    fn two_sequence_sum() {
        let t1 = inv(&[1, 0]).checked_mul(&inv(&[0, 1])).unwrap().checked_mul(&inv(&[1, 0])).unwrap();
        let t2 = inv(&[-1, 0]).checked_mul(&inv(&[1, 1])).unwrap().checked_mul(&inv(&[1, 0])).unwrap();
        let sum = t1.checked_add(&t2).unwrap();
        let expected = inv(&[1, 0]).checked_mul(&inv(&[0, 1])).unwrap().checked_mul(&inv(&[1, 1])).unwrap();
        assert_eq!(sum, expected);
        assert_eq!(sum.to_string(), "1/(a1*a2*(a1+a2))");
    }

    #[test]
    fn identities() {
        let f = inv(&[1, 1]).scale(&BigRational::from_integer(3.into()));
        assert_eq!(f.checked_add(&RationalFunction::zero(2)).unwrap(), f);
        assert_eq!(f.checked_mul(&RationalFunction::one(2)).unwrap(), f);
        let sq = RationalFunction::from_poly(Polynomial::var(2, 0).pow(2));
        let r = inv(&[1, 0]).checked_mul(&sq).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.numerator(), &Polynomial::var(2, 0));
    }

    #[test]
    fn zero_and_errors() {
        let z = inv(&[1, 0]).checked_sub(&inv(&[1, 0])).unwrap();
        assert!(z.is_zero() && z.is_polynomial());
        assert!(matches!(
            RationalFunction::inv_linear(&lin(&[0, 0])),
            Err(Error::DivisionByZero)
        ));
        assert!(RationalFunction::inv_linear(&lin(&[1, -1])).is_err());
    }

    #[test]
    fn non_primitive_forms_are_canonical() {
        let a = inv(&[2, 2]);
        let b = inv(&[1, 1]).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(a, b);
    }

    #[test]
    fn recip_of_root_product() {
        let f = inv(&[1, 0]).checked_mul(&inv(&[-1, -1])).unwrap();
        let g = f.recip().unwrap();
        assert_eq!(g.checked_mul(&f).unwrap(), RationalFunction::one(2));
    }

    #[test]
    fn json_round_trip() {
        let f = inv(&[1, 0])
            .checked_mul(&inv(&[1, 2]))
            .unwrap()
            .checked_mul(&RationalFunction::from_poly(Polynomial::var(2, 1)))
            .unwrap();
        let j = f.to_json();
        assert_eq!(j["den"], serde_json::json!(["a1", "a1+2*a2"]));
        assert_eq!(RationalFunction::from_json(&j).unwrap(), f);
    }
}
