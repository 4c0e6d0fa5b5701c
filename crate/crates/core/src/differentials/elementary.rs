//! Columns of b_r from the images of elementary generators η(θ⊗m*) and
//! κ(θ⊗m), straightened into the standard basis afterwards. Shares no
//! intermediate sums with the closed-form tables.

use std::collections::BTreeMap;

use super::{Column, Context};
use crate::hookbasis::{expand_eta, expand_kappa, interior, BasisElement, Kind, LinComb};
use crate::invsys::DualElement;
use crate::ringcore::{monomials_of_degree, rat, Monomial, Polynomial, Rational};

fn x1_times(cx: &Context, p: &Polynomial) -> Polynomial {
    p.mul(&Polynomial::monomial(Monomial::var(cx.d, 1)))
}

fn push(col: &mut Column, comb: &LinComb, coeff: &Polynomial) {
    for (t, c) in comb {
        col.entry(t.clone()).or_default().add_assign(&coeff.scale(&rat(*c)));
    }
}

/// Column of b_r on a standard element, for every 1 ≤ r ≤ d.
pub(crate) fn column(cx: &Context, e: &BasisElement) -> Column {
    let d = cx.d;
    let mut col = if e.r == 1 {
        Column::from([(BasisElement::unit(d), b1(cx, e))])
    } else if e.r == d {
        bd(cx)
    } else if e.kind == Kind::X {
        eta_image(cx, &e.wedge, &e.mono)
    } else {
        kappa_image(cx, &e.wedge, &e.mono)
    };
    col.retain(|_, p| !p.is_zero());
    col
}

/// b₁ through q and the contraction by Φ̃.
fn b1(cx: &Context, e: &BasisElement) -> Polynomial {
    let a1 = e.wedge[0];
    match e.kind {
        Kind::X => {
            let nu = DualElement::basis(e.mono.div_var(a1).expect("a1 divides m"));
            x1_times(cx, &cx.phi.q_of(&cx.cat, &nu))
        }
        Kind::Y => delta_minus_x1_q_tilde(cx, &e.mono.mul_var(a1)),
    }
}

/// δμ − x₁·q(μ(Φ̃)).
fn delta_minus_x1_q_tilde(cx: &Context, mu: &Monomial) -> Polynomial {
    let tilde = cx.phi.tilde_contract(mu).expect("x1-free monomial");
    let mut p = Polynomial::term(*mu, cx.cat.delta.clone());
    p.add_assign(&x1_times(cx, &cx.phi.q_of(&cx.cat, &tilde)).scale(&rat(-1)));
    p
}

fn bd(cx: &Context) -> Column {
    let (d, n) = (cx.d, cx.n as u32);
    let theta: Vec<usize> = (2..=d).collect();
    let mut col = Column::new();
    for m in monomials_of_degree(d, 2, n) {
        push(&mut col, &expand_eta(&theta, &m), &delta_minus_x1_q_tilde(cx, &m));
    }
    for m in monomials_of_degree(d, 2, n - 1) {
        let q = x1_times(cx, &cx.phi.q_of(&cx.cat, &DualElement::basis(m))).scale(&rat(-1));
        push(&mut col, &expand_kappa(&theta, &m), &q);
    }
    col
}

/// Accumulates rational multiples of x₁ on elementary generators before straightening.
#[derive(Default)]
struct Pending {
    eta: BTreeMap<(Vec<usize>, Monomial), Rational>,
    kappa: BTreeMap<(Vec<usize>, Monomial), Rational>,
}

impl Pending {
    fn flush(self, cx: &Context, col: &mut Column) {
        for ((w, m), c) in self.eta {
            push(col, &expand_eta(&w, &m), &x1_times(cx, &Polynomial::constant(cx.d, c)));
        }
        for ((w, m), c) in self.kappa {
            push(col, &expand_kappa(&w, &m), &x1_times(cx, &Polynomial::constant(cx.d, c)));
        }
    }
}

fn add(map: &mut BTreeMap<(Vec<usize>, Monomial), Rational>, key: (Vec<usize>, Monomial), c: Rational) {
    if !num_traits::Zero::is_zero(&c) {
        *map.entry(key).or_insert_with(|| rat(0)) += c;
    }
}

fn delta_kos(cx: &Context, col: &mut Column, j: usize, sign: i64, comb: &LinComb) {
    let p = Polynomial::term(Monomial::var(cx.d, j), &cx.cat.delta * rat(-sign));
    push(col, comb, &p);
}

/// b_r(η(θ⊗m*)) for deg m = n.
fn eta_image(cx: &Context, theta: &[usize], m: &Monomial) -> Column {
    let (d, n) = (cx.d, cx.n as u32);
    let low = monomials_of_degree(d, 1, n - 2);
    let top = monomials_of_degree(d, 2, n);
    let mid = monomials_of_degree(d, 2, n - 1);
    let mut col = Column::new();
    let mut pend = Pending::default();
    for j in 2..=d {
        let Some((s, rest)) = interior(j, theta) else { continue };
        delta_kos(cx, &mut col, j, s, &expand_eta(&rest, m));
        let Some(mj) = m.div_var(j) else { continue };
        for m1 in &low {
            let q = cx.cat.q_entry(&m1.mul_var(1), &mj);
            for m2 in &top {
                let c = cx.phi.t(&m1.mul(m2)) * q * rat(-s);
                add(&mut pend.eta, (rest.clone(), *m2), c);
            }
        }
        for m1 in &mid {
            add(&mut pend.kappa, (rest.clone(), *m1), cx.cat.q_entry(m1, &mj) * rat(-s));
        }
    }
    pend.flush(cx, &mut col);
    col
}

/// b_r(κ(θ⊗m)) for deg m = n−1.
fn kappa_image(cx: &Context, theta: &[usize], m: &Monomial) -> Column {
    let (d, n) = (cx.d, cx.n as u32);
    let low = monomials_of_degree(d, 1, n - 2);
    let top = monomials_of_degree(d, 2, n);
    let mid = monomials_of_degree(d, 2, n - 1);
    let mut col = Column::new();
    let mut pend = Pending::default();
    for j in 2..=d {
        let Some((s, rest)) = interior(j, theta) else { continue };
        delta_kos(cx, &mut col, j, s, &expand_kappa(&rest, m));
        let xjm = m.mul_var(j);
        for m2 in &low {
            let t1 = cx.phi.t(&xjm.mul(m2));
            if num_traits::Zero::is_zero(&t1) {
                continue;
            }
            for m1 in &low {
                let q = cx.cat.q_entry(&m1.mul_var(1), &m2.mul_var(1));
                for m3 in &top {
                    add(&mut pend.eta, (rest.clone(), *m3), &t1 * q * cx.phi.t(&m1.mul(m3)) * rat(s));
                }
            }
            for m1 in &mid {
                add(&mut pend.kappa, (rest.clone(), *m1), &t1 * cx.cat.q_entry(m1, &m2.mul_var(1)) * rat(s));
            }
        }
    }
    pend.flush(cx, &mut col);
    col
}
