//! Monomials in x₁..x_d and the global monomial order.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 12;

/// A monomial x₁^e₁ ⋯ x_d^e_d. Variables are numbered from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    /// The constant monomial 1 in `d` variables.
    pub fn one(d: usize) -> Self {
        assert!(d <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial { exps: [0; MAX_VARS], nvars: d as u8 }
    }

    /// The variable x_i (1-based).
    pub fn var(d: usize, i: usize) -> Self {
        let mut m = Self::one(d);
        m.exps[i - 1] = 1;
        m
    }

    /// Monomial with the given exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Self::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent too large");
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    /// Exponent of x_i (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1] as u32
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.exps[..self.nvars()].iter().map(|&e| e as u32).collect()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut m = *self;
        for i in 0..self.nvars() {
            m.exps[i] += other.exps[i];
        }
        m
    }

    /// x_i · self.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.exps[i - 1] += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..self.nvars()).all(|i| self.exps[i] <= other.exps[i])
    }

    pub fn has_var(&self, i: usize) -> bool {
        self.exps[i - 1] > 0
    }

    /// self / other, or `None` when other does not divide self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..self.nvars() {
            m.exps[i] -= other.exps[i];
        }
        Some(m)
    }

    /// self / x_i, or `None` when x_i does not divide self.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i - 1] == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i - 1] -= 1;
        Some(m)
    }

    /// Smallest index i with x_i | self; `None` for the constant monomial.
    pub fn least(&self) -> Option<usize> {
        (1..=self.nvars()).find(|&i| self.has_var(i))
    }

    /// Text form used in files and dumps, e.g. `[2,0,1,0]`.
    pub fn to_bracket_string(&self) -> String {
        let parts: Vec<String> = self.exponents().iter().map(|e| e.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Product notation, e.g. `x1^2*x3`; `1` for the constant monomial.
    pub fn to_product_string(&self) -> String {
        let mut parts = Vec::new();
        for i in 1..=self.nvars() {
            match self.exp(i) {
                0 => {}
                1 => parts.push(format!("x{i}")),
                e => parts.push(format!("x{i}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    /// Graded; within a degree the lexicographically larger monomial
    /// (x₁ > x₂ > … > x_d) comes first, so enumerations run upward.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_product_string())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_product_string())
    }
}

/// All monomials of the given degree in x_low..x_d, in increasing global order.
pub fn monomials_of_degree(d: usize, low_var: usize, degree: u32) -> Vec<Monomial> {
    assert!((1..=d).contains(&low_var), "low_var out of range");
    let mut out = Vec::new();
    let mut cur = Monomial::one(d);
    fill(&mut out, &mut cur, low_var, d, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Monomial, i: usize, d: usize, left: u32) {
    if i == d {
        cur.exps[i - 1] = left as u16;
        out.push(*cur);
        cur.exps[i - 1] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur.exps[i - 1] = e as u16;
        fill(out, cur, i + 1, d, left - e);
    }
    cur.exps[i - 1] = 0;
}

/// Binomial coefficient C(n, k) (zero when k > n).
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            monomials_of_degree(3, 2, 2),
            vec![m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]
        );
        assert_eq!(
            monomials_of_degree(4, 1, 1),
            (1..=4).map(|i| Monomial::var(4, i)).collect::<Vec<_>>()
        );
        assert_eq!(monomials_of_degree(4, 2, 0), vec![Monomial::one(4)]);
    }

    #[test]
    fn least_and_division() {
        let x = m(&[0, 1, 0, 2]);
        assert_eq!(x.least(), Some(2));
        assert_eq!(Monomial::one(4).least(), None);
        assert_eq!(x.div_var(4), Some(m(&[0, 1, 0, 1])));
        assert_eq!(x.div_var(3), None);
        assert_eq!(x.to_bracket_string(), "[0,1,0,2]");
        assert_eq!(x.to_product_string(), "x2*x4^2");
    }

    proptest! {
        #[test]
        fn enumeration_counts_and_order(d in 3usize..7, low in 1usize..4, s in 0u32..5) {
            let low = low.min(d);
            let mons = monomials_of_degree(d, low, s);
            let k = (d - low + 1) as i64;
            prop_assert_eq!(mons.len() as u64, binomial(s as i64 + k - 1, k - 1));
            for w in mons.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            for x in &mons {
                prop_assert_eq!(x.degree(), s);
                prop_assert!(x.least().map_or(true, |l| l >= low));
            }
        }

        #[test]
        fn order_is_total(a in proptest::collection::vec(0u32..3, 4), b in proptest::collection::vec(0u32..3, 4)) {
            let (x, y) = (m(&a), m(&b));
            let outcomes = [x < y, x == y, x > y];
            prop_assert_eq!(outcomes.iter().filter(|&&t| t).count(), 1);
        }
    }
}
