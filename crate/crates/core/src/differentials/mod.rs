//! The differentials [b₁], …, [b_d] of the Gorenstein-linear resolution of
//! A = S/ann(φ), built by two independent routes, plus the pairing and the
//! skeleton (reduction mod x₁).

mod elementary;
pub mod export;
mod pairing;
mod tables;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hookbasis::{enumerate_basis, twists, BasisElement, Kind, OrderedBasis};
use crate::invsys::{Catalecticant, InverseSystem};
use crate::ringcore::{PolyMatrix, Polynomial, Rational};

pub use pairing::{pp_matrix, PairingMatrix};

/// A column of b_r: coefficients on basis elements of B_{r−1}.
pub type Column = BTreeMap<BasisElement, Polynomial>;

/// The resolution 0 → B_d → ⋯ → B₁ → B₀ of A = S/ann(φ).
#[derive(Clone, Debug)]
pub struct Resolution {
    pub d: usize,
    pub n: usize,
    pub phi: InverseSystem,
    pub delta: Rational,
    /// Ordered bases of B₀..B_d.
    pub bases: Vec<OrderedBasis>,
    /// `matrices[r − 1]` is [b_r], with rows indexed by B_{r−1} and columns by B_r.
    pub matrices: Vec<PolyMatrix>,
    /// Generator degrees of B₀..B_d.
    pub twists: Vec<u32>,
}

impl Resolution {
    /// [b_r] for 1 ≤ r ≤ d.
    pub fn matrix(&self, r: usize) -> &PolyMatrix {
        &self.matrices[r - 1]
    }

    pub fn betti(&self) -> Vec<usize> {
        self.bases.iter().map(OrderedBasis::len).collect()
    }

    /// Re-expresses every matrix in new signed orderings of the same bases.
    pub fn in_bases(&self, bases: Vec<OrderedBasis>) -> Result<Resolution> {
        if bases.len() != self.bases.len() {
            return Err(Error::InvalidBasis("wrong number of bases".into()));
        }
        let mut moves = Vec::new();
        for (old, new) in self.bases.iter().zip(&bases) {
            let index = old.index();
            let mut mv = Vec::with_capacity(new.len());
            for (s, e) in new.iter() {
                let &(pos, t) = index.get(e).ok_or_else(|| Error::InvalidBasis(format!("{e} is not in B_{}", old.r)))?;
                mv.push((pos, s * t));
            }
            if mv.len() != old.len() {
                return Err(Error::InvalidBasis(format!("B_{} reordering has the wrong size", old.r)));
            }
            moves.push(mv);
        }
        let matrices = self
            .matrices
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let (rows, cols) = (&moves[k], &moves[k + 1]);
                let mut out = PolyMatrix::zeros(rows.len(), cols.len());
                for (i, &(pi, si)) in rows.iter().enumerate() {
                    for (j, &(pj, sj)) in cols.iter().enumerate() {
                        let p = m.get(pi, pj);
                        if !p.is_zero() {
                            out.set(i, j, if si * sj < 0 { p.scale(&crate::ringcore::rat(-1)) } else { p.clone() });
                        }
                    }
                }
                out
            })
            .collect();
        Ok(Resolution { bases, matrices, ..self.clone() })
    }
}

/// Shared data for building columns: the catalecticant and the contracted
/// sums G(u, w) = Σ t_{m₁u}Q_{x₁m₁,w} and H(u, v) = Σ t_{u m₂}Q_{x₁m₁,x₁m₂}t_{v m₁}.
pub(crate) struct Context<'a> {
    pub phi: &'a InverseSystem,
    pub cat: Catalecticant,
    pub d: usize,
    pub n: usize,
}

impl<'a> Context<'a> {
    /// Requires δ ≠ 0.
    pub fn new(phi: &'a InverseSystem) -> Result<Self> {
        let cat = phi.require_admissible()?;
        Ok(Context { phi, cat, d: phi.d(), n: phi.n() })
    }

    /// Any φ; Q = adj T is defined even when δ = 0.
    pub fn any(phi: &'a InverseSystem) -> Self {
        Context { phi, cat: phi.delta_and_q(), d: phi.d(), n: phi.n() }
    }

    pub fn x1(&self, c: &Rational) -> Polynomial {
        Polynomial::term(crate::ringcore::Monomial::var(self.d, 1), c.clone())
    }
}

fn assemble(tgt: &OrderedBasis, src: &OrderedBasis, column: impl Fn(&BasisElement) -> Result<Column>) -> Result<PolyMatrix> {
    let index = tgt.index();
    let mut m = PolyMatrix::zeros(tgt.len(), src.len());
    for (j, (_, e)) in src.iter().enumerate() {
        for (t, p) in column(e)? {
            let &(i, _) = index.get(&t).ok_or_else(|| Error::InvalidBasis(format!("{t} is not a standard element")))?;
            m.get_mut(i, j).add_assign(&p);
        }
    }
    Ok(m)
}

fn validated(e: &BasisElement, n: usize, r: usize) -> Result<()> {
    e.validate(n)?;
    if e.r != r || e.is_boundary() {
        return Err(Error::InvalidBasis(format!("{e} is not an interior element of B_{r}")));
    }
    Ok(())
}

/// [b₁]: the 1 × β₁ row of minimal generators of ann(φ) in degree n.
pub fn b1_matrix(phi: &InverseSystem) -> Result<PolyMatrix> {
    let cx = Context::any(phi);
    let (b0, b1) = (enumerate_basis(cx.d, cx.n, 0), enumerate_basis(cx.d, cx.n, 1));
    assemble(&b0, &b1, |e| Ok(Column::from([(BasisElement::unit(cx.d), tables::b1_entry(&cx, e))])))
}

/// [b_d]: the β_{d−1} × 1 column.
pub fn bd_matrix(phi: &InverseSystem) -> Result<PolyMatrix> {
    let cx = Context::any(phi);
    let (lo, top) = (enumerate_basis(cx.d, cx.n, cx.d - 1), enumerate_basis(cx.d, cx.n, cx.d));
    assemble(&lo, &top, |_| Ok(tables::bd_column(&cx)))
}

/// Column b_r(X_{a,m}) for 2 ≤ r ≤ d−1, targets in the standard basis of B_{r−1}.
pub fn br_column_x(phi: &InverseSystem, r: usize, e: &BasisElement) -> Result<Column> {
    let cx = Context::any(phi);
    validated(e, cx.n, r)?;
    if e.kind != Kind::X {
        return Err(Error::InvalidBasis(format!("{e} is not an X element")));
    }
    Ok(tables::column_x(&cx, e))
}

/// Column b_r(Y_{a,m}) for 2 ≤ r ≤ d−1.
pub fn br_column_y(phi: &InverseSystem, r: usize, e: &BasisElement) -> Result<Column> {
    let cx = Context::any(phi);
    validated(e, cx.n, r)?;
    if e.kind != Kind::Y {
        return Err(Error::InvalidBasis(format!("{e} is not a Y element")));
    }
    Ok(tables::column_y(&cx, e))
}

fn build(phi: &InverseSystem, via_elementary: bool) -> Result<Resolution> {
    let cx = Context::new(phi)?;
    let (d, n) = (cx.d, cx.n);
    let bases: Vec<OrderedBasis> = (0..=d).map(|r| enumerate_basis(d, n, r)).collect();
    let mut matrices = Vec::with_capacity(d);
    if via_elementary {
        for r in 1..=d {
            matrices.push(assemble(&bases[r - 1], &bases[r], |e| Ok(elementary::column(&cx, e)))?);
        }
    } else {
        let g = tables::Sums::new(&cx);
        for r in 1..=d {
            matrices.push(assemble(&bases[r - 1], &bases[r], |e| {
                Ok(match r {
                    1 => Column::from([(BasisElement::unit(d), tables::b1_entry(&cx, e))]),
                    r if r == d => tables::bd_column(&cx),
                    _ if e.kind == Kind::X => tables::column_x_with(&cx, &g, e),
                    _ => tables::column_y_with(&cx, &g, e),
                })
            })?);
        }
    }
    Ok(Resolution { d, n, phi: phi.clone(), delta: cx.cat.delta.clone(), bases, matrices, twists: twists(d, n) })
}

/// Builds the resolution from the closed-form column tables.
pub fn build_resolution(phi: &InverseSystem) -> Result<Resolution> {
    build(phi, false)
}

/// Builds the resolution from the elementary-generator formulas followed by
/// straightening; an independent route used as a cross-check.
pub fn build_resolution_via_elementary(phi: &InverseSystem) -> Result<Resolution> {
    build(phi, true)
}

/// Every matrix reduced mod x₁. For interior r, fails if a mixed X→Y or Y→X
/// block survives.
pub fn skeleton(res: &Resolution) -> Result<Vec<PolyMatrix>> {
    let mut out = Vec::with_capacity(res.d);
    for r in 1..=res.d {
        let m = res.matrix(r).substitute_x1_zero();
        if (2..res.d).contains(&r) {
            for (i, (_, row)) in res.bases[r - 1].iter().enumerate() {
                for (j, (_, col)) in res.bases[r].iter().enumerate() {
                    if row.kind != col.kind && !m.get(i, j).is_zero() {
                        return Err(Error::Structure(format!("skeleton of b_{r} has a mixed entry at ({row}, {col})")));
                    }
                }
            }
        }
        out.push(m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hookbasis::{self_dual_bases, skeleton_kos_blocks};
    use crate::invsys::random_invsys;

    fn sum_sq(d: usize) -> InverseSystem {
        InverseSystem::sum_of_powers(d, 2).unwrap()
    }

    fn first_mismatch(a: &Resolution, b: &Resolution) -> Option<(usize, usize, usize)> {
        (1..=a.d).find_map(|r| {
            let (x, y) = (a.matrix(r), b.matrix(r));
            (0..x.nrows()).flat_map(|i| (0..x.ncols()).map(move |j| (i, j))).find(|&(i, j)| x.get(i, j) != y.get(i, j)).map(|(i, j)| (r, i, j))
        })
    }

    #[test]
    fn b1_on_sum_of_squares_d3() {
        let b1 = b1_matrix(&sum_sq(3)).unwrap();
        let got: Vec<String> = (0..5).map(|j| b1.get(0, j).to_string()).collect();
        assert_eq!(got, ["x1*x2", "x1*x3", "-x1^2 + x2^2", "x2*x3", "-x1^2 + x3^2"]);
    }

    #[test]
    fn routes_agree_and_square_to_zero() {
        for (d, n, seed) in [(3, 2, 1), (3, 3, 2), (4, 2, 3), (4, 3, 4), (5, 2, 5)] {
            let phi = random_invsys(d, n, seed, 5).unwrap();
            let a = build_resolution(&phi).unwrap();
            let b = build_resolution_via_elementary(&phi).unwrap();
            if let Some((r, i, j)) = first_mismatch(&a, &b) {
                panic!(
                    "d={d} n={n} b_{r} at ({}, {}): tables {} vs elementary {}",
                    a.bases[r - 1].elements[i].1,
                    a.bases[r].elements[j].1,
                    a.matrix(r).get(i, j),
                    b.matrix(r).get(i, j)
                );
            }
            for r in 1..d {
                assert!(a.matrix(r).mul(a.matrix(r + 1)).is_zero(), "d={d} n={n} r={r}");
            }
        }
    }

    #[test]
    fn skeleton_is_delta_times_koszul() {
        let phi = random_invsys(4, 3, 11, 5).unwrap();
        let res = build_resolution(&phi).unwrap();
        let sk = skeleton(&res).unwrap();
        for r in 2..4 {
            let (k, l) = skeleton_kos_blocks(4, 3, r);
            let rows = |kind| res.bases[r - 1].positions(kind);
            let cols = |kind| res.bases[r].positions(kind);
            assert_eq!(sk[r - 1].select(&rows(Kind::X), &cols(Kind::X)), k.scale(&res.delta));
            assert_eq!(sk[r - 1].select(&rows(Kind::Y), &cols(Kind::Y)), l.scale(&res.delta));
        }
    }

    #[test]
    fn shapes_d4_n2() {
        let res = build_resolution(&random_invsys(4, 2, 7, 5).unwrap()).unwrap();
        let shapes: Vec<_> = res.matrices.iter().map(|m| (m.nrows(), m.ncols())).collect();
        assert_eq!(shapes, [(1, 9), (9, 16), (16, 9), (9, 1)]);
        assert_eq!(res.twists, [0, 2, 3, 4, 6]);
    }

    #[test]
    fn last_is_transpose_of_first_in_self_dual_bases() {
        for (d, n) in [(3, 2), (4, 2), (5, 2), (4, 3)] {
            let phi = random_invsys(d, n, 3, 5).unwrap();
            let res = build_resolution(&phi).unwrap().in_bases(self_dual_bases(d, n)).unwrap();
            assert_eq!(res.matrix(d).transpose(), *res.matrix(1), "d={d} n={n}");
        }
    }

    #[test]
    fn inadmissible_is_refused() {
        let zero = InverseSystem::new(3, 2, Default::default()).unwrap();
        assert!(matches!(build_resolution(&zero), Err(Error::Inadmissible(_))));
        assert!(matches!(build_resolution_via_elementary(&zero), Err(Error::Inadmissible(_))));
        assert!(b1_matrix(&zero).unwrap().is_zero());
    }

    #[test]
    fn example_bases_pair_as_expected_d4_n2() {
        let b = self_dual_bases(4, 2);
        assert!(pp_matrix(&b[1], &b[3]).is_identity());
        let f = pp_matrix(&b[2], &b[2]);
        for i in 0..16 {
            for j in 0..16 {
                assert_eq!(f.entries[i][j], i64::from(i.abs_diff(j) == 8), "({i}, {j})");
            }
        }
        assert!(pp_matrix(&b[0], &b[4]).is_identity());
    }

    #[test]
    fn skeleton_depends_on_phi_only_through_delta() {
        let a = build_resolution(&random_invsys(4, 2, 1, 5).unwrap()).unwrap();
        let b = build_resolution(&random_invsys(4, 2, 2, 5).unwrap()).unwrap();
        assert_ne!(a.delta, b.delta);
        for (x, y) in skeleton(&a).unwrap().iter().zip(skeleton(&b).unwrap()) {
            assert_eq!(x.scale(&b.delta), y.scale(&a.delta));
        }
    }

    #[test]
    fn last_column_on_sum_of_squares_d3() {
        let phi = sum_sq(3);
        let bd = bd_matrix(&phi).unwrap();
        let mut got: Vec<String> = (0..5).map(|i| bd.get(i, 0).to_string()).collect();
        got.sort();
        let mut want = ["-x1*x2", "-x1*x3", "-x1^2 + x2^2", "x2*x3", "-x1^2 + x3^2"].map(String::from).to_vec();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn single_columns_validate_their_input() {
        let phi = random_invsys(4, 2, 9, 5).unwrap();
        let y = BasisElement::y(vec![2, 4], crate::ringcore::Monomial::from_exponents(&[0, 1, 0, 0]));
        assert!(br_column_x(&phi, 2, &y).is_err());
        assert!(br_column_y(&phi, 3, &y).is_err());
        let bad = BasisElement::y(vec![3, 4], crate::ringcore::Monomial::from_exponents(&[0, 1, 0, 0]));
        assert!(br_column_y(&phi, 2, &bad).is_err());
        let col = br_column_y(&phi, 2, &y).unwrap();
        let res = build_resolution(&phi).unwrap();
        let j = res.bases[2].index()[&y].0;
        let idx = res.bases[1].index();
        for (t, p) in &col {
            assert_eq!(res.matrix(2).get(idx[t].0, j), p);
        }
    }
}
