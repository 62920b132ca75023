use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A power product of named variables. Zero exponents are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: BTreeMap<String, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: &str) -> Self {
        Self::from_pairs([(name, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs. Repeated
    /// variables accumulate; zero exponents are dropped.
    pub fn from_pairs<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, u32)>,
    {
        let mut exps = BTreeMap::new();
        for (name, e) in pairs {
            if e > 0 {
                *exps.entry(name.to_string()).or_insert(0) += e;
            }
        }
        Self { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.exps.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.exps.keys().map(String::as_str)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (k, &v) in &other.exps {
            *exps.entry(k.clone()).or_insert(0) += v;
        }
        Monomial { exps }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (k, &v) in &other.exps {
            let e = exps.get_mut(k)?;
            match (*e).cmp(&v) {
                Ordering::Less => return None,
                Ordering::Equal => {
                    exps.remove(k);
                }
                Ordering::Greater => *e -= v,
            }
        }
        Some(Monomial { exps })
    }

    /// Splits into the part over `vars` and the part over everything else.
    pub fn split(&self, vars: &[&str]) -> (Monomial, Monomial) {
        let (inside, outside): (BTreeMap<_, _>, BTreeMap<_, _>) = self
            .exps
            .iter()
            .map(|(k, &v)| (k.clone(), v))
            .partition(|(k, _)| vars.contains(&k.as_str()));
        (Monomial { exps: inside }, Monomial { exps: outside })
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order: total degree first, then the exponent of
    /// the alphabetically smallest variable on which the two differ.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ka, ea)), Some((kb, eb))) => match ka.cmp(kb) {
                    // `a` has a variable that `b` lacks.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, &e) in &self.exps {
            if e == 1 {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}^{e}")?;
            }
        }
        Ok(())
    }
}
