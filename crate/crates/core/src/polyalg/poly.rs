use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Rational, Scalar};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map from [`Monomial`] to a nonzero coefficient, so two
/// polynomials are equal exactly when their term maps are equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(name: &str) -> Self {
        Self::term(Rational::one(), Monomial::var(name))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Highest total degree in the given variables only.
    pub fn degree_in(&self, vars: &[&str]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|v| m.exponent(v)).sum())
            .max()
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.variables().map(str::to_string))
            .collect()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of `m` when `self` is viewed as a polynomial in `vars`
    /// whose coefficients are polynomials in the remaining variables.
    pub fn coefficient_of(&self, m: &Monomial, vars: &[&str]) -> MultiPoly {
        Self::from_terms(self.terms.iter().filter_map(|(mono, c)| {
            let (inside, outside) = mono.split(vars);
            (inside == *m).then(|| (outside, c.clone()))
        }))
    }

    /// Groups terms by their monomial over `vars`.
    pub fn collect_in(&self, vars: &[&str]) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (mono, c) in &self.terms {
            let (inside, outside) = mono.split(vars);
            out.entry(inside).or_default().add_term(outside, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }

    /// Replaces every variable by the mapped polynomial. Every variable of
    /// `self` must have an entry.
    pub fn subst(&self, map: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly, PolyError> {
        if let Some(v) = self.variables().into_iter().find(|v| !map.contains_key(v)) {
            return Err(PolyError::MissingSubstitution(v));
        }
        Ok(self.subst_partial(map))
    }

    /// Like [`subst`](Self::subst), but variables without an entry are kept.
    pub fn subst_partial(&self, map: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let mut powers: HashMap<(&str, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (mono, c) in &self.terms {
            let mut prod = MultiPoly::constant(c.clone());
            for (v, e) in mono.iter() {
                let factor = match map.get(v) {
                    Some(image) => powers.entry((v, e)).or_insert_with(|| image.pow(e)).clone(),
                    None => MultiPoly::term(Rational::one(), Monomial::from_pairs([(v, e)])),
                };
                prod = prod * &factor;
            }
            out = out + prod;
        }
        out
    }

    /// Evaluates at rational values for some of the variables.
    pub fn eval_partial(&self, values: &BTreeMap<String, Rational>) -> MultiPoly {
        let map = values
            .iter()
            .map(|(k, v)| (k.clone(), MultiPoly::constant(v.clone())))
            .collect();
        self.subst_partial(&map)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (or `divisor` is zero).
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            // If the divisor divides exactly, the leading term of every
            // intermediate remainder is a multiple of the divisor's.
            let qm = m.div(lead_m)?;
            let qc = c / lead_c;
            let step = MultiPoly::term(qc.clone(), qm.clone());
            rem = rem - step * divisor;
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Scalar for MultiPoly {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }
}

impl<'a> Add<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: &'a MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m, c) in small.terms {
            big.add_term(m, c);
        }
        big
    }
}

impl<'a> Sub<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;

    fn sub(mut self, rhs: &'a MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self - &rhs
    }
}

impl<'a> Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        &self * rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text: descending graded-lex, e.g. `x1^3 + 3x1^2x2 - 3/2 x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else if abs.is_integer() {
                write!(f, "{abs}{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}
