//! Dense rational and polynomial matrices, sparse matrices, and exact linear algebra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::polynomial::Polynomial;
use super::rational::{inv_mod, mul_mod, rational_mod, Rational};

/// Dense matrix over ℚ, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RatMatrix { nrows, ncols, data: vec![Rational::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RatMatrix { nrows, ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch");
        let mut out = RatMatrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.ncols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix { nrows: self.nrows, ncols: self.ncols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows == self.ncols
            && (0..self.nrows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rank(&self) -> usize {
        echelon(integer_rows(self), false).pivots.len()
    }

    /// Basis of the right null space, as primitive integer vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = echelon(integer_rows(self), true);
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = Rational::one();
            for &(row, col) in &ech.pivots {
                let r = &ech.rows[row];
                v[col] = -Rational::new(r[free].clone(), r[col].clone());
            }
            basis.push(primitive(v));
        }
        basis
    }

    /// Determinant by Bareiss elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.nrows, self.ncols, "determinant of a non-square matrix");
        let n = self.nrows;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let (row, l) = clear_denominators(self.row(i));
            scale *= l;
            a.push(row);
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Rational::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Rational::new(sign * &a[n - 1][n - 1], scale)
    }

    /// (det M, adj M) with M·adj = det·I.
    pub fn det_and_adjugate(&self) -> (Rational, RatMatrix) {
        let n = self.nrows;
        let det = self.det();
        if !det.is_zero() {
            let inv = self.inverse_nonsingular();
            return (det.clone(), inv.scale(&det));
        }
        let mut adj = RatMatrix::zeros(n, n);
        if n == 1 {
            adj.set(0, 0, Rational::one());
            return (det, adj);
        }
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i).det();
                let c = if (i + j) % 2 == 0 { minor } else { -minor };
                adj.set(i, j, c);
            }
        }
        (det, adj)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> RatMatrix {
        let rows = (0..self.nrows)
            .filter(|&i| i != skip_row)
            .map(|i| (0..self.ncols).filter(|&j| j != skip_col).map(|j| self.get(i, j).clone()).collect())
            .collect();
        RatMatrix::from_rows(rows)
    }

    fn inverse_nonsingular(&self) -> RatMatrix {
        let n = self.nrows;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero()).expect("matrix is nonsingular");
            a.swap(p, k);
            let piv = a[k][k].clone();
            for v in a[k].iter_mut() {
                *v /= &piv;
            }
            let pivot_row = a[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k || row[k].is_zero() {
                    continue;
                }
                let f = row[k].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
        }
        RatMatrix::from_rows(a.into_iter().map(|r| r[n..].to_vec()).collect())
    }
}

/// Row i of `m` scaled to integers; returns the row and the scale factor used.
fn clear_denominators(row: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    (ints, l)
}

fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.nrows).map(|i| clear_denominators(m.row(i)).0).collect()
}

fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let (ints, _) = clear_denominators(&v);
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let g = match ints.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => -g,
        _ => g,
    };
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// (row index, pivot column) in order of discovery.
    pivots: Vec<(usize, usize)>,
}

/// Fraction-free integer row reduction with content removal; `full` also clears above pivots.
fn echelon(mut rows: Vec<Vec<BigInt>>, full: bool) -> Echelon {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(p) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, next);
        let pivot_row = rows[next].clone();
        let targets: Vec<usize> = if full { (0..rows.len()).filter(|&i| i != next).collect() } else { (next + 1..rows.len()).collect() };
        for i in targets {
            if rows[i][col].is_zero() {
                continue;
            }
            let g = pivot_row[col].gcd(&rows[i][col]);
            let a = &pivot_row[col] / &g;
            let b = &rows[i][col] / &g;
            let row = &mut rows[i];
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = &a * &*v - &b * pv;
            }
            let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for v in row.iter_mut() {
                    *v /= &content;
                }
            }
        }
        pivots.push((next, col));
        next += 1;
    }
    Echelon { rows, pivots }
}

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        PolyMatrix { nrows, ncols, data: vec![Polynomial::zero(); nrows * ncols] }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.ncols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.ncols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<&Polynomial> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix { nrows: self.nrows, ncols: self.ncols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch");
        PolyMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch");
        let mut out = PolyMatrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let prod = a.mul(b);
                        out.get_mut(i, j).add_assign(&prod);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    /// Position of the first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data.iter().position(|p| !p.is_zero()).map(|k| (k / self.ncols, k % self.ncols))
    }

    pub fn substitute_x1_zero(&self) -> PolyMatrix {
        self.map(|p| p.substitute_x1_zero())
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }
}

/// Sparse rational matrix given by triplets; used for graded-piece rank computations.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<(usize, usize, Rational)>,
}

/// Large prime used for modular rank lower bounds.
pub const RANK_PRIME: u64 = (1 << 61) - 1;

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, entries: Vec::new() }
    }

    pub fn push(&mut self, i: usize, j: usize, v: Rational) {
        if !v.is_zero() {
            self.entries.push((i, j, v));
        }
    }

    /// Connected components of the row/column incidence graph, as (rows, cols) lists.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.nrows + self.ncols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(i, j, _) in &self.entries {
            let (a, b) = (find(&mut parent, i), find(&mut parent, self.nrows + j));
            if a != b {
                parent[a] = b;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
        for i in 0..self.nrows {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().0.push(i);
        }
        for j in 0..self.ncols {
            let r = find(&mut parent, self.nrows + j);
            groups.entry(r).or_default().1.push(j);
        }
        groups.into_values().filter(|(r, c)| !r.is_empty() && !c.is_empty()).collect()
    }

    fn split(&self) -> Vec<Vec<(usize, usize, &Rational)>> {
        let comps = self.components();
        let mut row_of = vec![(usize::MAX, 0); self.nrows];
        let mut col_of = vec![0; self.ncols];
        for (k, (rows, cols)) in comps.iter().enumerate() {
            for (a, &i) in rows.iter().enumerate() {
                row_of[i] = (k, a);
            }
            for (b, &j) in cols.iter().enumerate() {
                col_of[j] = b;
            }
        }
        let mut parts: Vec<Vec<(usize, usize, &Rational)>> = vec![Vec::new(); comps.len()];
        for (i, j, v) in &self.entries {
            let (k, a) = row_of[*i];
            parts[k].push((a, col_of[*j], v));
        }
        parts
    }

    /// Exact rank over ℚ, computed component by component.
    pub fn rank_exact(&self) -> usize {
        let mut total = 0;
        for part in self.split() {
            let nr = part.iter().map(|e| e.0).max().map_or(0, |x| x + 1);
            let nc = part.iter().map(|e| e.1).max().map_or(0, |x| x + 1);
            let mut m = RatMatrix::zeros(nr, nc);
            for (a, b, v) in part {
                m.set(a, b, v.clone());
            }
            total += m.rank();
        }
        total
    }

    /// Rank modulo [`RANK_PRIME`]; a lower bound for the rank over ℚ.
    /// `None` if the prime divides a denominator.
    pub fn rank_mod_p(&self) -> Option<usize> {
        let p = RANK_PRIME;
        let mut total = 0;
        for part in self.split() {
            let nr = part.iter().map(|e| e.0).max().map_or(0, |x| x + 1);
            let nc = part.iter().map(|e| e.1).max().map_or(0, |x| x + 1);
            let mut m = vec![vec![0u64; nc]; nr];
            for (a, b, v) in part {
                m[a][b] = (m[a][b] + rational_mod(v, p)?) % p;
            }
            total += rank_mod(m, p);
        }
        Some(total)
    }
}

/// Dense Gaussian elimination over 𝔽_p.
pub fn rank_mod(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(piv, rank);
        let inv = inv_mod(m[rank][col], p);
        for v in m[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if pv != 0 {
                    *v = (*v + p - mul_mod(f, pv, p)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::rational::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(m(&[&[1, 1]]).kernel_basis(), vec![vec![rat(1), rat(-1)]]);
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        let z = RatMatrix::zeros(2, 2).kernel_basis();
        assert_eq!(z, vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
    }

    #[test]
    fn det_adj_examples() {
        assert_eq!(RatMatrix::identity(3).det_and_adjugate(), (rat(1), RatMatrix::identity(3)));
        let (d, a) = m(&[&[1, 2], &[3, 4]]).det_and_adjugate();
        assert_eq!(d, rat(-2));
        assert_eq!(a, m(&[&[4, -2], &[-3, 1]]));
    }

    #[test]
    fn singular_adjugate() {
        let s = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (d, a) = s.det_and_adjugate();
        assert_eq!(d, rat(0));
        assert!(s.mul(&a) == RatMatrix::zeros(3, 3));
        assert_ne!(a, RatMatrix::zeros(3, 3));
    }

    fn laplace(a: &RatMatrix) -> Rational {
        let n = a.nrows();
        if n == 1 {
            return a.get(0, 0).clone();
        }
        (0..n)
            .map(|j| {
                let c = a.get(0, j) * laplace(&a.minor(0, j));
                if j % 2 == 0 { c } else { -c }
            })
            .sum()
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec((-6i64..7, 1i64..4), n * n).prop_map(move |v| {
            RatMatrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&(p, q)| Rational::new(p.into(), q.into())).collect()).collect())
        })
    }

    proptest! {
        #[test]
        fn adjugate_identity(a in small_matrix(4)) {
            let (d, adj) = a.det_and_adjugate();
            prop_assert_eq!(&d, &laplace(&a));
            prop_assert_eq!(a.mul(&adj), RatMatrix::identity(4).scale(&d));
            prop_assert_eq!(adj.mul(&a), RatMatrix::identity(4).scale(&d));
        }

        #[test]
        fn rank_nullity(v in proptest::collection::vec(-2i64..3, 12), cols in 2usize..6) {
            let rows: Vec<Vec<Rational>> = v.chunks(cols).filter(|c| c.len() == cols).map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
            prop_assume!(!rows.is_empty());
            let a = RatMatrix::from_rows(rows);
            let ker = a.kernel_basis();
            prop_assert_eq!(a.rank() + ker.len(), a.ncols());
            for k in &ker {
                for i in 0..a.nrows() {
                    let s: Rational = a.row(i).iter().zip(k).map(|(x, y)| x * y).sum();
                    prop_assert!(s.is_zero());
                }
            }
        }

        #[test]
        fn sparse_ranks_agree(v in proptest::collection::vec(-2i64..3, 30)) {
            let mut s = SparseMatrix::new(5, 6);
            let mut dense = RatMatrix::zeros(5, 6);
            for (k, &x) in v.iter().enumerate() {
                s.push(k / 6, k % 6, rat(x));
                dense.set(k / 6, k % 6, rat(x));
            }
            prop_assert_eq!(s.rank_exact(), dense.rank());
            prop_assert_eq!(s.rank_mod_p(), Some(dense.rank()));
        }
    }
}
