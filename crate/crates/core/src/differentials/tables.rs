//! Closed-form columns of b_r whose targets are standard basis elements.

use std::collections::HashMap;

use super::{Column, Context};
use crate::hookbasis::{expand_kappa, gamma, BasisElement, Kind};
use crate::ringcore::{monomials_of_degree, rat, Monomial, Polynomial, Rational};

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Precomputed contractions G(u, w) and H(u, v) over x₁-free arguments.
pub(crate) struct Sums {
    g: HashMap<(Monomial, Monomial), Rational>,
    h: HashMap<(Monomial, Monomial), Rational>,
}

impl Sums {
    pub fn new(cx: &Context) -> Self {
        let (d, n) = (cx.d, cx.n as u32);
        let low = monomials_of_degree(d, 1, n - 2);
        let deg_n = monomials_of_degree(d, 2, n);
        let deg_n1 = monomials_of_degree(d, 2, n - 1);
        let q = |a: &Monomial, b: &Monomial| cx.cat.q_entry(a, b).clone();
        let mut g = HashMap::new();
        for u in &deg_n {
            for w in &deg_n1 {
                let mut s = rat(0);
                for m1 in &low {
                    let t = cx.phi.t(&m1.mul(u));
                    if !num_traits::Zero::is_zero(&t) {
                        s += t * q(&m1.mul_var(1), w);
                    }
                }
                g.insert((*u, *w), s);
            }
        }
        // W_v[m₂] = Σ_{m₁} Q_{x₁m₁,x₁m₂} t_{v m₁}
        let w_of: HashMap<Monomial, Vec<Rational>> = deg_n
            .iter()
            .map(|v| {
                let row = low
                    .iter()
                    .map(|m2| {
                        low.iter().fold(rat(0), |acc, m1| acc + q(&m1.mul_var(1), &m2.mul_var(1)) * cx.phi.t(&v.mul(m1)))
                    })
                    .collect();
                (*v, row)
            })
            .collect();
        let mut h = HashMap::new();
        for u in &deg_n {
            let tu: Vec<Rational> = low.iter().map(|m2| cx.phi.t(&u.mul(m2))).collect();
            for v in &deg_n {
                let s = tu.iter().zip(&w_of[v]).fold(rat(0), |acc, (a, b)| acc + a * b);
                h.insert((*u, *v), s);
            }
        }
        Sums { g, h }
    }

    fn g(&self, u: &Monomial, w: &Monomial) -> &Rational {
        &self.g[&(*u, *w)]
    }

    fn h(&self, u: &Monomial, v: &Monomial) -> &Rational {
        &self.h[&(*u, *v)]
    }
}

struct Acc<'c, 'a> {
    cx: &'c Context<'a>,
    col: Column,
}

impl Acc<'_, '_> {
    fn x1(&mut self, target: BasisElement, c: Rational) {
        if !num_traits::Zero::is_zero(&c) {
            let p = self.cx.x1(&c);
            self.col.entry(target).or_default().add_assign(&p);
        }
    }

    fn delta(&mut self, target: BasisElement, s: i64, var: usize) {
        let p = Polynomial::term(Monomial::var(self.cx.d, var), &self.cx.cat.delta * rat(s));
        self.col.entry(target).or_default().add_assign(&p);
    }

    fn finish(mut self) -> Column {
        self.col.retain(|_, p| !p.is_zero());
        self.col
    }
}

fn without(a: &[usize], drop: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| !drop.contains(x)).collect()
}

/// a₁..a_{γ−1}, γ+1, then a_γ..a_r without a_j and a_k.
fn splice(a: &[usize], g: usize, j: usize, k: usize) -> Vec<usize> {
    let mut w: Vec<usize> = a[..g - 1].to_vec();
    w.push(g + 1);
    w.extend(a[g - 1..].iter().copied().filter(|&x| x != a[j - 1] && x != a[k - 1]));
    w
}

fn with_front(l: usize, rest: Vec<usize>) -> Vec<usize> {
    let mut w = vec![l];
    w.extend(rest);
    w
}

fn chi_div(m: &Monomial, var: usize) -> Option<Monomial> {
    m.div_var(var)
}

/// Entry of [b₁] for a basis element of B₁.
pub(crate) fn b1_entry(cx: &Context, e: &BasisElement) -> Polynomial {
    let (d, n) = (cx.d, cx.n as u32);
    let a1 = e.wedge[0];
    let mut p = Polynomial::zero();
    match e.kind {
        Kind::X => {
            let w = e.mono.div_var(a1).expect("a1 divides m for X elements");
            for m1 in monomials_of_degree(d, 1, n - 1) {
                p.add_term(m1.mul_var(1), cx.cat.q_entry(&m1, &w).clone());
            }
        }
        Kind::Y => {
            let mu = e.mono.mul_var(a1);
            p.add_term(mu, cx.cat.delta.clone());
            p.add_assign(&x1_q_tilde(cx, &mu).scale(&rat(-1)));
        }
    }
    p
}

/// x₁·Σ_{m₁,m₂} m₂ Q_{m₂,x₁m₁} t_{m₁μ}.
fn x1_q_tilde(cx: &Context, mu: &Monomial) -> Polynomial {
    let (d, n) = (cx.d, cx.n as u32);
    let mut p = Polynomial::zero();
    for m1 in monomials_of_degree(d, 1, n - 2) {
        let t = cx.phi.t(&m1.mul(mu));
        if num_traits::Zero::is_zero(&t) {
            continue;
        }
        for m2 in monomials_of_degree(d, 1, n - 1) {
            p.add_term(m2.mul_var(1), cx.cat.q_entry(&m2, &m1.mul_var(1)) * &t);
        }
    }
    p
}

/// The single column of [b_d].
pub(crate) fn bd_column(cx: &Context) -> Column {
    let (d, n) = (cx.d, cx.n as u32);
    let full: Vec<usize> = (2..=d).collect();
    let mut col = Column::new();
    for m in monomials_of_degree(d, 2, n) {
        let mut p = Polynomial::term(m, cx.cat.delta.clone());
        p.add_assign(&x1_q_tilde(cx, &m).scale(&rat(-1)));
        col.insert(BasisElement::x(full.clone(), m), p);
    }
    for m in monomials_of_degree(d, 2, n - 1) {
        let mut p = Polynomial::zero();
        for m1 in monomials_of_degree(d, 1, n - 1) {
            p.add_term(m1.mul_var(1), -cx.cat.q_entry(&m1, &m).clone());
        }
        col.insert(BasisElement::y(full.clone(), m), p);
    }
    col.retain(|_, p| !p.is_zero());
    col
}

pub(crate) fn column_x(cx: &Context, e: &BasisElement) -> Column {
    column_x_with(cx, &Sums::new(cx), e)
}

pub(crate) fn column_y(cx: &Context, e: &BasisElement) -> Column {
    column_y_with(cx, &Sums::new(cx), e)
}

/// b_r(X_{a,m}) in seven summands.
pub(crate) fn column_x_with(cx: &Context, s: &Sums, e: &BasisElement) -> Column {
    let (d, n) = (cx.d, cx.n as u32);
    let (a, m) = (&e.wedge, &e.mono);
    let r = a.len();
    let g = gamma(a);
    let lm = m.least().expect("deg m = n");
    let mut acc = Acc { cx, col: Column::new() };
    let at = |k: usize| a[k - 1];

    for l in 2..=g {
        for k in l..=r {
            for m2 in monomials_of_degree(d, l, n - 1) {
                let mut c = rat(0);
                if let Some(q) = chi_div(m, at(k)) {
                    c += s.g(&m2.mul_var(l), &q);
                }
                if let Some(q) = chi_div(m, l) {
                    c -= s.g(&m2.mul_var(at(k)), &q);
                }
                acc.x1(BasisElement::x(without(a, &[at(k)]), m2.mul_var(l)), c * rat(sign(k)));
            }
        }
    }
    for j in g..=r {
        for k in j + 1..=r {
            for m2 in monomials_of_degree(d, g + 1, n - 1) {
                let mut c = rat(0);
                if let Some(q) = chi_div(m, at(k)) {
                    c += s.g(&m2.mul_var(at(j)), &q);
                }
                if let Some(q) = chi_div(m, at(j)) {
                    c -= s.g(&m2.mul_var(at(k)), &q);
                }
                acc.x1(BasisElement::x(splice(a, g, j, k), m2.mul_var(g + 1)), c * rat(sign(g + j + k)));
            }
        }
    }
    for j in 1..lm {
        for k in j + 1..=r {
            if let Some(q) = chi_div(m, at(k)) {
                acc.delta(BasisElement::x(without(a, &[at(k)]), q.mul_var(j + 1)), sign(k + 1), at(j));
            }
        }
    }
    for j in lm..=r {
        acc.delta(BasisElement::x(without(a, &[at(j)]), *m), sign(j), at(j));
    }
    let q_ent = |u: &Monomial, v: &Monomial| cx.cat.q_entry(u, v).clone();
    let m_a1 = chi_div(m, at(1));
    for k in 2..=r {
        for m1 in monomials_of_degree(d, at(1), n - 1) {
            let mut c = rat(0);
            if let Some(q) = chi_div(m, at(k)) {
                c += q_ent(&m1, &q);
            }
            if let (Some(u), Some(q)) = (m1.mul_var(at(1)).div_var(at(k)), m_a1) {
                c -= q_ent(&u, &q);
            }
            acc.x1(BasisElement::y(without(a, &[at(k)]), m1), c * rat(sign(k)));
        }
    }
    if let Some(q) = m_a1 {
        for l in at(1) + 1..at(2) {
            for k in 2..=r {
                for m1 in monomials_of_degree(d, l, n - 1) {
                    if let Some(u) = m1.mul_var(l).div_var(at(k)) {
                        let w = with_front(l, without(&a[1..], &[at(k)]));
                        acc.x1(BasisElement::y(w, m1), q_ent(&u, &q) * rat(sign(k + 1)));
                    }
                }
            }
        }
        for m1 in monomials_of_degree(d, at(2), n - 1) {
            acc.x1(BasisElement::y(a[1..].to_vec(), m1), -q_ent(&m1, &q));
        }
    }
    acc.finish()
}

/// b_r(Y_{a,m}) in nine summands.
pub(crate) fn column_y_with(cx: &Context, s: &Sums, e: &BasisElement) -> Column {
    let (d, n) = (cx.d, cx.n as u32);
    let (a, m) = (&e.wedge, &e.mono);
    let r = a.len();
    let g = gamma(a);
    let lm = m.least().expect("deg m = n-1");
    let mut acc = Acc { cx, col: Column::new() };
    let at = |k: usize| a[k - 1];
    let xm = |i: usize| m.mul_var(i);

    for l in 2..=g {
        for k in l..=r {
            for m3 in monomials_of_degree(d, l, n - 1) {
                let c = s.h(&xm(l), &m3.mul_var(at(k))) - s.h(&xm(at(k)), &m3.mul_var(l));
                acc.x1(BasisElement::x(without(a, &[at(k)]), m3.mul_var(l)), c * rat(sign(k)));
            }
        }
    }
    for j in g..=r {
        for k in j + 1..=r {
            for m3 in monomials_of_degree(d, g + 1, n - 1) {
                let c = s.h(&xm(at(j)), &m3.mul_var(at(k))) - s.h(&xm(at(k)), &m3.mul_var(at(j)));
                acc.x1(BasisElement::x(splice(a, g, j, k), m3.mul_var(g + 1)), c * rat(sign(j + g + k)));
            }
        }
    }
    for l in 2..at(1) {
        for j in 1..=r {
            for k in j + 1..=r {
                for m1 in monomials_of_degree(d, l, n - 1) {
                    let lm1 = m1.mul_var(l);
                    let mut c = rat(0);
                    if let Some(w) = lm1.div_var(at(j)) {
                        c += s.g(&xm(at(k)), &w);
                    }
                    if let Some(w) = lm1.div_var(at(k)) {
                        c -= s.g(&xm(at(j)), &w);
                    }
                    let w = with_front(l, without(a, &[at(j), at(k)]));
                    acc.x1(BasisElement::y(w, m1), c * rat(sign(k + j)));
                }
            }
        }
    }
    for k in 2..=r {
        for m1 in monomials_of_degree(d, at(1), n - 1) {
            let mut c = -s.g(&xm(at(k)), &m1);
            if let Some(w) = m1.mul_var(at(1)).div_var(at(k)) {
                c += s.g(&xm(at(1)), &w);
            }
            acc.x1(BasisElement::y(without(a, &[at(k)]), m1), c * rat(sign(k)));
        }
    }
    for l in at(1) + 1..at(2) {
        for k in 2..=r {
            for m1 in monomials_of_degree(d, l, n - 1) {
                if let Some(w) = m1.mul_var(l).div_var(at(k)) {
                    let t = with_front(l, without(&a[1..], &[at(k)]));
                    acc.x1(BasisElement::y(t, m1), s.g(&xm(at(1)), &w) * rat(sign(k)));
                }
            }
        }
    }
    for m1 in monomials_of_degree(d, at(2), n - 1) {
        acc.x1(BasisElement::y(a[1..].to_vec(), m1), s.g(&xm(at(1)), &m1).clone());
    }
    for j in 2..=r {
        acc.delta(BasisElement::y(without(a, &[at(j)]), *m), sign(j), at(j));
    }
    if at(2) <= lm {
        acc.delta(BasisElement::y(a[1..].to_vec(), *m), -1, at(1));
    } else {
        for (t, c) in expand_kappa(&a[1..], m) {
            acc.delta(t, -c, at(1));
        }
    }
    acc.finish()
}
