//! The standard basis of the free modules B_r, straightening of elementary
//! generators, the Koszul blocks of the skeleton, and the perfect pairing.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ringcore::{binomial, monomials_of_degree, Monomial, PolyMatrix, Polynomial, rat};

/// X elements come from η (divided-power side), Y elements from κ (symmetric side).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    X,
    Y,
}

/// A standard basis element X^{(r)}_{a,m} or Y^{(r)}_{a,m}.
///
/// The boundary elements are Y^{(0)} = 1 (empty wedge, m = 1) and
/// X^{(d)} = x₂∧…∧x_d (full wedge, m = 1, r = d).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub kind: Kind,
    pub r: usize,
    pub wedge: Vec<usize>,
    pub mono: Monomial,
}

/// Signed integer combination of basis elements.
pub type LinComb = BTreeMap<BasisElement, i64>;

fn add_to(comb: &mut LinComb, e: BasisElement, c: i64) {
    if c == 0 {
        return;
    }
    let slot = comb.entry(e.clone()).or_insert(0);
    *slot += c;
    if *slot == 0 {
        comb.remove(&e);
    }
}

impl BasisElement {
    pub fn x(wedge: Vec<usize>, mono: Monomial) -> Self {
        BasisElement { kind: Kind::X, r: wedge.len(), wedge, mono }
    }

    pub fn y(wedge: Vec<usize>, mono: Monomial) -> Self {
        BasisElement { kind: Kind::Y, r: wedge.len(), wedge, mono }
    }

    /// Y^{(0)} = 1.
    pub fn unit(d: usize) -> Self {
        BasisElement { kind: Kind::Y, r: 0, wedge: Vec::new(), mono: Monomial::one(d) }
    }

    /// X^{(d)} = x₂∧…∧x_d.
    pub fn top(d: usize) -> Self {
        BasisElement { kind: Kind::X, r: d, wedge: (2..=d).collect(), mono: Monomial::one(d) }
    }

    pub fn is_boundary(&self) -> bool {
        self.r == 0 || self.r == self.mono.nvars()
    }

    /// Checks membership in the standard basis for parameters (d, n).
    pub fn validate(&self, n: usize) -> Result<()> {
        let d = self.mono.nvars();
        let bad = |why: &str| Err(Error::InvalidBasis(format!("{self}: {why}")));
        if *self == BasisElement::unit(d) || *self == BasisElement::top(d) {
            return Ok(());
        }
        if self.r == 0 || self.r >= d || self.wedge.len() != self.r {
            return bad("homological degree out of range");
        }
        if !self.wedge.windows(2).all(|w| w[0] < w[1]) || self.wedge[0] < 2 || self.wedge[self.r - 1] > d {
            return bad("wedge indices must increase within [2, d]");
        }
        if self.mono.has_var(1) {
            return bad("monomial must be free of x1");
        }
        let least = self.mono.least().unwrap_or(d + 1);
        match self.kind {
            Kind::X => {
                if self.mono.degree() as usize != n {
                    return bad("X needs a degree-n monomial");
                }
                if !(2..=least).all(|i| self.wedge.contains(&i)) {
                    return bad("X needs [2, least(m)] inside the wedge");
                }
            }
            Kind::Y => {
                if self.mono.degree() as usize != n - 1 {
                    return bad("Y needs a degree-(n-1) monomial");
                }
                if self.wedge[0] > least {
                    return bad("Y needs a1 <= least(m)");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::X => "X",
            Kind::Y => "Y",
        };
        let w: Vec<String> = self.wedge.iter().map(|a| a.to_string()).collect();
        write!(f, "{k}({}; {}; {})", self.r, w.join(","), self.mono.to_bracket_string())
    }
}

impl fmt::Debug for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered list of signed basis elements of B_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedBasis {
    pub r: usize,
    pub elements: Vec<(i64, BasisElement)>,
}

impl OrderedBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(i64, BasisElement)> {
        self.elements.iter()
    }

    /// Map from element to (position, sign).
    pub fn index(&self) -> BTreeMap<BasisElement, (usize, i64)> {
        self.elements.iter().enumerate().map(|(i, (s, e))| (e.clone(), (i, *s))).collect()
    }

    /// Positions of the X and Y elements.
    pub fn positions(&self, kind: Kind) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.elements[i].1.kind == kind).collect()
    }

    /// Text labels, with a leading `-` on negated elements.
    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(|(s, e)| if *s < 0 { format!("-{e}") } else { e.to_string() }).collect()
    }
}

/// The standard basis of B_r: all X elements, then all Y elements, each
/// ordered by wedge (lexicographic) and then monomial.
pub fn enumerate_basis(d: usize, n: usize, r: usize) -> OrderedBasis {
    assert!(r <= d, "homological degree out of range");
    let raw: Vec<BasisElement> = if r == 0 {
        vec![BasisElement::unit(d)]
    } else if r == d {
        vec![BasisElement::top(d)]
    } else {
        let wedges = subsets(d, r);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for a in &wedges {
            for m in monomials_of_degree(d, 2, n as u32) {
                let least = m.least().expect("positive degree");
                if (2..=least).all(|i| a.contains(&i)) {
                    xs.push(BasisElement::x(a.clone(), m));
                }
            }
            for m in monomials_of_degree(d, a[0], (n - 1) as u32) {
                ys.push(BasisElement::y(a.clone(), m));
            }
        }
        xs.into_iter().chain(ys).collect()
    };
    OrderedBasis { r, elements: raw.into_iter().map(|e| (1, e)).collect() }
}

/// Strictly increasing r-subsets of [2, d] in lexicographic order.
fn subsets(d: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in start..=d {
            if d + 1 - a < left {
                break;
            }
            cur.push(a);
            rec(a + 1, d, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(2, d, r, &mut Vec::new(), &mut out);
    out
}

/// (k_r, ℓ_r, β_r): ranks of the X part, the Y part, and B_r, for 1 ≤ r ≤ d−1.
pub fn rank_formulas(d: usize, n: usize, r: usize) -> (u64, u64, u64) {
    assert!((1..d).contains(&r), "rank formulas cover 1 <= r <= d-1");
    let (d, n, r) = (d as i64, n as i64, r as i64);
    let k = binomial(d + n - 2, r - 1) * binomial(d + n - r - 2, n - 1);
    let l = binomial(d + n - 2, r - 1 + n) * binomial(r + n - 2, r - 1);
    let num = (2 * n + d - 2) as u64 * binomial(n + d - 2, r - 1) * binomial(n + d - r - 2, n - 1);
    let beta = num / (n + r - 1) as u64;
    debug_assert_eq!(num % (n + r - 1) as u64, 0);
    debug_assert_eq!(k + l, beta);
    (k, l, beta)
}

/// Betti numbers β₀..β_d.
pub fn betti_numbers(d: usize, n: usize) -> Vec<u64> {
    (0..=d).map(|r| if r == 0 || r == d { 1 } else { rank_formulas(d, n, r).2 }).collect()
}

/// Generator degrees of B₀..B_d: 0, n, n+1, …, n+d−2, 2n+d−2.
pub fn twists(d: usize, n: usize) -> Vec<u32> {
    (0..=d)
        .map(|r| match r {
            0 => 0,
            r if r == d => (2 * n + d - 2) as u32,
            r => (n + r - 1) as u32,
        })
        .collect()
}

/// Largest g with [2, g] ⊆ wedge (g = 1 when 2 ∉ wedge).
pub fn gamma(wedge: &[usize]) -> usize {
    let mut g = 1;
    while wedge.contains(&(g + 1)) {
        g += 1;
    }
    g
}

/// x_j*(x_{a₁}∧…∧x_{a_r}) = (−1)^{k−1}·(wedge without a_k) when a_k = j.
pub fn interior(j: usize, wedge: &[usize]) -> Option<(i64, Vec<usize>)> {
    let k = wedge.iter().position(|&a| a == j)?;
    let mut rest = wedge.to_vec();
    rest.remove(k);
    Some((if k % 2 == 0 { 1 } else { -1 }, rest))
}

/// Sorts a wedge, returning the permutation sign; `None` if an index repeats.
pub fn sort_wedge(wedge: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut w = wedge.to_vec();
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((sign, w))
}

/// Straightening of η(x_{c₁}∧…∧x_{c_s} ⊗ m*) into standard X^{(s)} elements (deg m = n).
pub fn expand_eta(c: &[usize], m: &Monomial) -> LinComb {
    let mut out = LinComb::new();
    let g = gamma(c);
    let least = m.least().expect("m has positive degree");
    if least <= g {
        add_to(&mut out, BasisElement::x(c.to_vec(), *m), 1);
        return out;
    }
    // positions k = g..=s (1-based) of c, with g+1 inserted after c_{g−1}
    for k in g..=c.len() {
        let ck = c[k - 1];
        let Some(q) = m.div_var(ck) else { continue };
        let mut w: Vec<usize> = c[..g - 1].to_vec();
        w.push(g + 1);
        w.extend(c[g - 1..].iter().copied().filter(|&a| a != ck));
        let sign = if (k + g) % 2 == 0 { 1 } else { -1 };
        add_to(&mut out, BasisElement::x(w, q.mul_var(g + 1)), sign);
    }
    out
}

/// Straightening of κ(x_{c₁}∧…∧x_{c_s} ⊗ m) into standard Y^{(s)} elements (deg m = n−1).
pub fn expand_kappa(c: &[usize], m: &Monomial) -> LinComb {
    let mut out = LinComb::new();
    let least = m.least().expect("m has positive degree");
    if c[0] <= least {
        add_to(&mut out, BasisElement::y(c.to_vec(), *m), 1);
        return out;
    }
    let base = m.div_var(least).expect("least variable divides m");
    for (k, &ck) in c.iter().enumerate() {
        let mut w = vec![least];
        w.extend(c.iter().copied().filter(|&a| a != ck));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        add_to(&mut out, BasisElement::y(w, base.mul_var(ck)), sign);
    }
    out
}

/// Column of the Koszul map on a standard element of B_r (2 ≤ r ≤ d−1):
/// Kos(η(θ⊗m*)) = −Σ_j x_j·η(x_j*(θ)⊗m*), and likewise for κ.
pub fn koszul_column(e: &BasisElement) -> BTreeMap<BasisElement, Polynomial> {
    let d = e.mono.nvars();
    let mut col: BTreeMap<BasisElement, Polynomial> = BTreeMap::new();
    for j in 2..=d {
        let Some((s, rest)) = interior(j, &e.wedge) else { continue };
        let comb = match e.kind {
            Kind::X => expand_eta(&rest, &e.mono),
            Kind::Y => expand_kappa(&rest, &e.mono),
        };
        for (t, c) in comb {
            col.entry(t).or_default().add_term(Monomial::var(d, j), rat(-s * c));
        }
    }
    col.retain(|_, p| !p.is_zero());
    col
}

/// Matrices of the Koszul map B_r → B_{r−1} restricted to X→X and Y→Y, in
/// the standard orderings (no δ factor).
pub fn skeleton_kos_blocks(d: usize, n: usize, r: usize) -> (PolyMatrix, PolyMatrix) {
    assert!((2..d).contains(&r), "Koszul blocks cover 2 <= r <= d-1");
    let src = enumerate_basis(d, n, r);
    let tgt = enumerate_basis(d, n, r - 1);
    let block = |kind: Kind| {
        let cols = src.positions(kind);
        let rows = tgt.positions(kind);
        let row_index: BTreeMap<&BasisElement, usize> = rows.iter().enumerate().map(|(i, &p)| (&tgt.elements[p].1, i)).collect();
        let mut m = PolyMatrix::zeros(rows.len(), cols.len());
        for (j, &p) in cols.iter().enumerate() {
            for (t, poly) in koszul_column(&src.elements[p].1) {
                let i = row_index[&t];
                m.get_mut(i, j).add_assign(&poly);
            }
        }
        m
    };
    (block(Kind::X), block(Kind::Y))
}

/// The pairing pp(u ⊗ v) for u ∈ B_r, v ∈ B_{d−r}, as the coefficient of X^{(d)}.
pub fn pairing(u: &BasisElement, v: &BasisElement) -> i64 {
    let d = u.mono.nvars();
    if u.r == 0 || u.r == d {
        return i64::from(*v == BasisElement::top(d) && u.r == 0 || *v == BasisElement::unit(d) && u.r == d);
    }
    match (u.kind, v.kind) {
        (Kind::Y, Kind::X) => wedge_pairing(&u.mono, &v.mono, &u.wedge, &v.wedge),
        (Kind::X, Kind::Y) => -wedge_pairing(&v.mono, &u.mono, &u.wedge, &v.wedge),
        _ => 0,
    }
}

/// [μ(ν*)](θ) ∧ θ' as a multiple of x₂∧…∧x_d, with μ = `mu`, ν = `nu`.
fn wedge_pairing(mu: &Monomial, nu: &Monomial, theta: &[usize], theta2: &[usize]) -> i64 {
    let Some(q) = nu.div(mu) else { return 0 };
    if q.degree() != 1 {
        return 0;
    }
    let i = q.least().expect("degree one");
    let Some((s, rest)) = interior(i, theta) else { return 0 };
    let mut w = rest;
    w.extend_from_slice(theta2);
    match sort_wedge(&w) {
        Some((t, sorted)) if sorted.len() == mu.nvars() - 1 => s * t,
        _ => 0,
    }
}

/// The basis of B_{d−r} ordered and signed so that pp(e_i ⊗ f_j) = χ(i = j),
/// where e is `enumerate_basis(d, n, r)`.
pub fn dual_ordered_basis(d: usize, n: usize, r: usize) -> OrderedBasis {
    dual_of(&enumerate_basis(d, n, r), &enumerate_basis(d, n, d - r))
}

/// Orders and signs the elements of `pool` (a basis of B_{d−r}) dual to `basis`.
pub fn dual_of(basis: &OrderedBasis, pool: &OrderedBasis) -> OrderedBasis {
    let elements = basis
        .iter()
        .map(|(s, e)| {
            let hits: Vec<(i64, &BasisElement)> =
                pool.iter().map(|(_, f)| (pairing(e, f), f)).filter(|(v, _)| *v != 0).collect();
            assert_eq!(hits.len(), 1, "pairing is not a signed permutation at {e}");
            let (v, f) = hits[0];
            (s * v, f.clone())
        })
        .collect();
    OrderedBasis { r: pool.r, elements }
}

/// Self-dual ordered bases B₀..B_d: raw for 2r < d, dual of raw B_{d−r} for
/// 2r > d, and for 2r = d the raw X block followed by its dual Y block.
pub fn self_dual_bases(d: usize, n: usize) -> Vec<OrderedBasis> {
    (0..=d)
        .map(|r| {
            if 2 * r < d {
                enumerate_basis(d, n, r)
            } else if 2 * r > d {
                dual_ordered_basis(d, n, d - r)
            } else {
                let raw = enumerate_basis(d, n, r);
                let xs = OrderedBasis { r, elements: raw.iter().filter(|(_, e)| e.kind == Kind::X).cloned().collect() };
                let ys = OrderedBasis { r, elements: raw.iter().filter(|(_, e)| e.kind == Kind::Y).cloned().collect() };
                let dual_ys = dual_of(&xs, &ys);
                OrderedBasis { r, elements: xs.elements.into_iter().chain(dual_ys.elements).collect() }
            }
        })
        .collect()
}

/// Explicit coordinates in ∧U₀ ⊗ D (for X) or ∧U₀ ⊗ Sym (for Y).
pub mod ambient {
    use super::*;

    /// A vector in ∧^s U₀ ⊗ (D_k or Sym_k), keyed by (sorted wedge, monomial).
    pub type Coords = BTreeMap<(Vec<usize>, Monomial), i64>;

    fn add(v: &mut Coords, key: (Vec<usize>, Monomial), c: i64) {
        let slot = v.entry(key.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            v.remove(&key);
        }
    }

    /// η(x_w ⊗ m*) = Σ_i x_i*(x_w) ⊗ (m/x_i)*.
    pub fn eta(wedge: &[usize], m: &Monomial) -> Coords {
        let mut v = Coords::new();
        let (s0, w) = sort_wedge(wedge).expect("wedge without repeats");
        for &i in &w {
            let Some(q) = m.div_var(i) else { continue };
            let (s, rest) = interior(i, &w).expect("i in wedge");
            add(&mut v, (rest, q), s0 * s);
        }
        v
    }

    /// κ(x_w ⊗ m) = Σ_i x_i*(x_w) ⊗ x_i·m.
    pub fn kappa(wedge: &[usize], m: &Monomial) -> Coords {
        let mut v = Coords::new();
        let (s0, w) = sort_wedge(wedge).expect("wedge without repeats");
        for &i in &w {
            let (s, rest) = interior(i, &w).expect("i in wedge");
            add(&mut v, (rest, m.mul_var(i)), s0 * s);
        }
        v
    }

    /// Coordinates of a standard basis element (interior degrees only).
    pub fn embed(e: &BasisElement) -> Coords {
        match e.kind {
            Kind::X => eta(&e.wedge, &e.mono),
            Kind::Y => kappa(&e.wedge, &e.mono),
        }
    }

    /// Coordinates of a combination of standard elements.
    pub fn embed_comb(comb: &LinComb) -> Coords {
        let mut v = Coords::new();
        for (e, c) in comb {
            for (k, x) in embed(e) {
                add(&mut v, k, c * x);
            }
        }
        v
    }
}
