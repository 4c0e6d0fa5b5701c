//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// A polynomial in x₁..x_d; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(d: usize, c: Rational) -> Self {
        Self::term(Monomial::one(d), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order. `Display` prints higher degrees first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds c·m in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    /// self += c · m · other.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational, m: &Monomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in &self.terms {
            p.add_scaled(other, c, m);
        }
        p
    }

    /// Reduction modulo x₁: drops every term divisible by x₁.
    pub fn substitute_x1_zero(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.has_var(1))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Renames variables: x_i ↦ x_{perm[i-1]}.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; m.nvars()];
            for i in 1..=m.nvars() {
                e[perm[i - 1] - 1] = m.exp(i);
            }
            p.add_term(Monomial::from_exponents(&e), c.clone());
        }
        p
    }

    /// The common degree of all terms, or `None` if zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        degs.all(|g| g == first).then_some(first)
    }

    /// True when some term is a nonzero constant.
    pub fn has_constant_term(&self) -> bool {
        self.terms.keys().any(|m| m.degree() == 0)
    }

    /// Parses the `Display` form, e.g. `-x1^2 + 3/2*x2*x3 - 5`, over `d` variables.
    pub fn parse(d: usize, s: &str) -> Result<Polynomial> {
        let bad = || Error::Input(format!("malformed polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        if compact == "0" {
            return Ok(Polynomial::zero());
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        let mut p = Polynomial::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; d];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, e) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad())?;
                    if idx == 0 || idx > d {
                        return Err(bad());
                    }
                    exps[idx - 1] += e;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(Monomial::from_exponents(&exps), coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.degree() == 0 {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&m.to_product_string())?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), m.to_product_string())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parsing needs the variable count; `FromStr` infers it from the largest index seen.
impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let d = s
            .split(|c: char| !c.is_ascii_alphanumeric())
            .filter_map(|tok| tok.strip_prefix('x'))
            .filter_map(|i| i.parse::<usize>().ok())
            .max()
            .unwrap_or(1);
        Polynomial::parse(d, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::rational::rat;
    use proptest::prelude::*;

    fn p(d: usize, s: &str) -> Polynomial {
        Polynomial::parse(d, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p(2, "x1 + x2");
        let b = p(2, "x1 - x2");
        assert_eq!(a.mul(&b), p(2, "x1^2 - x2^2"));
    }

    #[test]
    fn mod_x1() {
        let q = p(3, "7*x1*x2 + x1*x3");
        let g = p(3, "5*x2").sub(&q.mul(&p(3, "x1")).scale(&rat(1)));
        assert_eq!(g.substitute_x1_zero(), p(3, "5*x2"));
    }

    #[test]
    fn cancellation_leaves_empty_map() {
        let a = p(3, "x1*x2 - 3/4*x3^2");
        let z = a.add(&a.scale(&rat(-1)));
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["x1^2 - x2^2", "-3/2*x1*x3 + x2^2 + 5", "0", "-x3"] {
            assert_eq!(p(3, s).to_string(), s);
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(cs in proptest::collection::vec(-4i64..5, 9)) {
            let mk = |c: &[i64]| {
                let mut q = Polynomial::zero();
                for (i, &v) in c.iter().enumerate() {
                    q.add_term(Monomial::var(3, i + 1), rat(v));
                }
                q
            };
            let (a, b, c) = (mk(&cs[0..3]), mk(&cs[3..6]), mk(&cs[6..9]));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            let s = a.add(&b).to_string();
            prop_assert_eq!(p(3, &s), a.add(&b));
        }
    }
}
