use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};
use serde_json::{json, Value};

use super::{parse_rational, rational_string, LinearForm};
use crate::error::{Error, Result};
use crate::weyl::GroupElement;

/// Exponent vector, ordered graded-lexicographically with `a1 > a2 > ... > an`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over `Q`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn add_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        add_term(&mut p.terms, Monomial::one(nvars), c);
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(c.into()))
    }

    /// The variable `a_{i+1}` (`i` is 0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn from_linear(l: &LinearForm) -> Self {
        let n = l.nvars();
        let mut p = Self::zero(n);
        for (i, &c) in l.coords().iter().enumerate() {
            if c != 0 {
                let mut m = Monomial::one(n);
                m.0[i] = 1;
                p.terms.insert(m, BigRational::from_integer(c.into()));
            }
        }
        p
    }

    /// Builds from `(coefficient, exponents)` pairs; coefficients are summed.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigRational, Vec<u32>)>,
    {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch(nvars, e.len()));
            }
            add_term(&mut p.terms, Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if !self.is_constant() {
            return None;
        }
        self.terms.values().next().cloned()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut terms, m1.times(m2), c1 * c2);
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_linear(&self, l: &LinearForm) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            for (i, &li) in l.coords().iter().enumerate() {
                if li != 0 {
                    let mut mm = m.clone();
                    mm.0[i] += 1;
                    add_term(&mut terms, mm, c * BigRational::from_integer(li.into()));
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by a nonzero linear form.
    ///
    /// Returns `Ok(None)` when the form does not divide `self`. Uses
    /// synthetic division along the leading variable of `l`: if `l * q = p`
    /// then the leading monomial of `p` is the leading variable of `l` times
    /// the leading monomial of `q`.
    pub fn divide_by_linear(&self, l: &LinearForm) -> Result<Option<Self>> {
        if l.nvars() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, l.nvars()));
        }
        let (lead, lc) = l
            .leading()
            .ok_or_else(|| Error::InvalidArgument("division by the zero linear form".into()))?;
        let lc = BigRational::from_integer(lc.into());
        let others: Vec<(usize, BigRational)> = l
            .coords()
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c != 0 && i != lead)
            .map(|(i, &c)| (i, BigRational::from_integer(c.into())))
            .collect();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.pop_last() {
            if m.0[lead] == 0 {
                return Ok(None);
            }
            let mut qm = m;
            qm.0[lead] -= 1;
            let qc = c / &lc;
            for (i, li) in &others {
                let mut mm = qm.clone();
                mm.0[*i] += 1;
                add_term(&mut rem, mm, -(&qc * li));
            }
            quot.insert(qm, qc);
        }
        Ok(Some(Polynomial {
            nvars: self.nvars,
            terms: quot,
        }))
    }

    /// Substitutes the linear form `images[i]` for the variable `a_{i+1}`.
    pub fn substitute(&self, images: &[LinearForm]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, images.len()));
        }
        let n = self.nvars;
        let bases: Vec<Polynomial> = images.iter().map(Polynomial::from_linear).collect();
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| bases[i].pow(e));
                term = &term * &*p;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// The natural action of a Weyl group element: each variable `a_i` is
    /// replaced by the simple-root expansion of `w(a_i)`.
    pub fn act(&self, w: &GroupElement) -> Result<Self> {
        if w.cartan().rank() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, w.cartan().rank()));
        }
        let images: Vec<LinearForm> = (0..self.nvars)
            .map(|i| LinearForm(w.act_on_alpha(LinearForm::variable(self.nvars, i).coords())))
            .collect();
        self.substitute(&images)
    }

    pub fn to_json(&self) -> Value {
        let vars: Vec<String> = (1..=self.nvars).map(|i| format!("a{i}")).collect();
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| json!({"c": rational_string(c), "e": m.0}))
            .collect();
        json!({"vars": vars, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let nvars = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing vars"))?
            .len();
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut pairs = Vec::with_capacity(terms.len());
        for t in terms {
            let c = parse_rational(t.get("c").and_then(Value::as_str).ok_or_else(|| bad("term without c"))?)?;
            let e = t
                .get("e")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("term without e"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<Vec<u32>>>()?;
            pairs.push((c, e));
        }
        Self::from_terms(nvars, pairs)
    }
}

fn monomial_string(m: &Monomial) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("a{}", i + 1)
            } else {
                format!("a{}^{}", i + 1, e)
            }
        })
        .collect();
    parts.join("*")
}

impl fmt::Display for Polynomial {
    /// Descending graded-lex, e.g. `a1^2*a2 + a1*a2^2 - 1/2*a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono = monomial_string(m);
            if mono.is_empty() {
                f.write_str(&rational_string(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", rational_string(&abs), mono)?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on a variable-count mismatch; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials over the same variables")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials over the same variables")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials over the same variables")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
