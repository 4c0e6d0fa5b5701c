//! Checks of a built resolution against independent oracles: the complex
//! property, ranks and degrees, the Euler characteristic, degreewise
//! exactness, the annihilator, the skeleton, self-duality and the weak
//! Lefschetz property.

mod exactness;
pub mod golden;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::differentials::{build_resolution, pp_matrix, skeleton, PairingMatrix, Resolution};
use crate::error::{Error, Result};
use crate::hookbasis::{betti_numbers, enumerate_basis, self_dual_bases, skeleton_kos_blocks, twists, Kind};
use crate::invsys::apply;
use crate::ringcore::{binomial, format_rational, monomials_of_degree, rat, Monomial, PolyMatrix, Polynomial, RatMatrix};

pub use exactness::{check_exactness_up_to, graded_piece, DIRECT_RANK_BUDGET};

/// A named check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Complex,
    Betti,
    Euler,
    Exactness,
    Ann,
    Skeleton,
    Duality,
    Wlp,
}

impl Check {
    pub const ALL: [Check; 8] =
        [Check::Complex, Check::Betti, Check::Euler, Check::Exactness, Check::Ann, Check::Skeleton, Check::Duality, Check::Wlp];

    pub fn name(self) -> &'static str {
        match self {
            Check::Complex => "complex",
            Check::Betti => "betti",
            Check::Euler => "euler",
            Check::Exactness => "exactness",
            Check::Ann => "ann",
            Check::Skeleton => "skeleton",
            Check::Duality => "duality",
            Check::Wlp => "wlp",
        }
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Input(format!("unknown check '{s}' (known: {})", Check::ALL.map(Check::name).join(", "))))
    }
}

/// Result of one check; a failure always names a finite witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed: true, detail: detail.into(), witness: None }
    }

    pub fn fail(name: &str, detail: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed: false, detail: detail.into(), witness: Some(witness.into()) }
    }
}

/// Outcomes of the selected checks, in fixed order.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub d: usize,
    pub n: usize,
    pub delta: String,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification d={} n={} delta={}", self.d, self.n, self.delta)?;
        for c in &self.checks {
            write!(f, "{} {:<10} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            if let Some(w) = &c.witness {
                write!(f, " [witness: {w}]")?;
            }
            writeln!(f)?;
        }
        write!(f, "overall: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// Runs the selected checks in the order of [`Check::ALL`].
pub fn run_checks(res: &Resolution, checks: &[Check], dmax: u32) -> Report {
    let outcomes: Vec<CheckOutcome> = Check::ALL
        .into_iter()
        .filter(|c| checks.contains(c))
        .map(|c| match c {
            Check::Complex => check_complex(res),
            Check::Betti => check_betti_and_degrees(res),
            Check::Euler => check_euler_hilbert(res),
            Check::Exactness => check_exactness_up_to(res, dmax),
            Check::Ann => check_ann_match(res),
            Check::Skeleton => check_skeleton(res),
            Check::Duality => check_duality(res),
            Check::Wlp => check_wlp(res),
        })
        .collect();
    Report {
        d: res.d,
        n: res.n,
        delta: format_rational(&res.delta),
        passed: outcomes.iter().all(|c| c.passed),
        checks: outcomes,
    }
}

/// Default exactness bound 2n + d.
pub fn default_dmax(d: usize, n: usize) -> u32 {
    (2 * n + d) as u32
}

fn label(res: &Resolution, r: usize, i: usize) -> String {
    let (s, e) = &res.bases[r].elements[i];
    if *s < 0 {
        format!("-{e}")
    } else {
        e.to_string()
    }
}

/// [b_r]·[b_{r+1}] = 0 for 1 ≤ r ≤ d−1.
pub fn check_complex(res: &Resolution) -> CheckOutcome {
    for r in 1..res.d {
        if let Some((i, j)) = res.matrix(r).mul(res.matrix(r + 1)).first_nonzero() {
            return CheckOutcome::fail(
                "complex",
                format!("b_{r}·b_{} is nonzero", r + 1),
                format!("r={r}, row {i} ({}), col {j} ({})", label(res, r - 1, i), label(res, r + 1, j)),
            );
        }
    }
    CheckOutcome::pass("complex", format!("b_r·b_(r+1) = 0 for 1 <= r <= {}", res.d - 1))
}

/// Shapes match the rank formulas, twists match, entries have degree n, 1, …, 1, n.
pub fn check_betti_and_degrees(res: &Resolution) -> CheckOutcome {
    let name = "betti";
    let (d, n) = (res.d, res.n);
    let want = betti_numbers(d, n);
    let got: Vec<u64> = res.betti().iter().map(|&b| b as u64).collect();
    if got != want {
        return CheckOutcome::fail(name, "basis sizes differ from the rank formulas", format!("got {got:?}, expected {want:?}"));
    }
    if res.twists != twists(d, n) {
        return CheckOutcome::fail(name, "twists differ", format!("got {:?}, expected {:?}", res.twists, twists(d, n)));
    }
    for r in 1..=d {
        let m = res.matrix(r);
        if (m.nrows() as u64, m.ncols() as u64) != (want[r - 1], want[r]) {
            return CheckOutcome::fail(name, "matrix shape", format!("b_{r} is {}x{}", m.nrows(), m.ncols()));
        }
        let deg = res.twists[r] - res.twists[r - 1];
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let p = m.get(i, j);
                if p.is_zero() {
                    continue;
                }
                if p.has_constant_term() {
                    return CheckOutcome::fail(name, "constant entry (not minimal)", format!("b_{r} at ({i}, {j}): {p}"));
                }
                if p.homogeneous_degree() != Some(deg) {
                    return CheckOutcome::fail(name, format!("entry is not homogeneous of degree {deg}"), format!("b_{r} at ({i}, {j}): {p}"));
                }
            }
        }
    }
    let pattern: Vec<u32> = (1..=d).map(|r| res.twists[r] - res.twists[r - 1]).collect();
    CheckOutcome::pass(name, format!("betti {want:?}, twists {:?}, entry degrees {pattern:?}", res.twists))
}

fn mul_series(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn series_string(c: &[i64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, x)| **x != 0)
        .map(|(k, x)| {
            let c = match (k, x) {
                (0, _) => return x.to_string(),
                (_, 1) => String::new(),
                (_, -1) => "-".into(),
                _ => x.to_string(),
            };
            if k == 1 {
                format!("{c}t")
            } else {
                format!("{c}t^{k}")
            }
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

/// Σ(−1)^r β_r t^{twist_r} = (1 − t)^d · Σ h_j t^j.
pub fn check_euler_hilbert(res: &Resolution) -> CheckOutcome {
    let name = "euler";
    let h = match res.phi.hilbert_function() {
        Ok(h) => h,
        Err(e) => return CheckOutcome::fail(name, "no Hilbert function", e.to_string()),
    };
    let top = *res.twists.iter().max().unwrap_or(&0) as usize;
    let mut lhs = vec![0i64; top + 1];
    for (r, b) in res.betti().iter().enumerate() {
        lhs[res.twists[r] as usize] += if r % 2 == 0 { *b as i64 } else { -(*b as i64) };
    }
    let mut rhs: Vec<i64> = h.iter().map(|&x| x as i64).collect();
    for _ in 0..res.d {
        rhs = mul_series(&rhs, &[1, -1]);
    }
    while lhs.len() > 1 && lhs.last() == Some(&0) {
        lhs.pop();
    }
    if lhs == rhs {
        CheckOutcome::pass(name, format!("{} = (1-t)^{}·HS_A(t), h = {h:?}", series_string(&lhs), res.d))
    } else {
        CheckOutcome::fail(name, "Euler characteristic differs from (1-t)^d·HS_A", format!("{} vs {}", series_string(&lhs), series_string(&rhs)))
    }
}

fn coordinate_rank(polys: &[Polynomial], mons: &[Monomial]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(polys.iter().map(|p| mons.iter().map(|m| p.coeff(m)).collect()).collect()).rank()
}

/// Columns of [b₁] span ann(φ)_n and are linearly independent.
pub fn check_ann_match(res: &Resolution) -> CheckOutcome {
    let name = "ann";
    let b1 = res.matrix(1);
    let cols: Vec<Polynomial> = (0..b1.ncols()).map(|j| b1.get(0, j).clone()).collect();
    let phi = res.phi.as_dual();
    if let Some(j) = cols.iter().position(|g| !apply(g, &phi).is_zero()) {
        return CheckOutcome::fail(name, "generator does not annihilate φ", format!("column {j}: {}", cols[j]));
    }
    let oracle = res.phi.ann_degree(res.n as u32);
    let mons = monomials_of_degree(res.d, 1, res.n as u32);
    let rb = coordinate_rank(&cols, &mons);
    let ro = coordinate_rank(&oracle, &mons);
    let both: Vec<Polynomial> = cols.iter().chain(&oracle).cloned().collect();
    let rj = coordinate_rank(&both, &mons);
    if rb == cols.len() && rb == ro && rj == rb {
        CheckOutcome::pass(name, format!("span of {} generators = ann(phi)_{} (dim {ro})", cols.len(), res.n))
    } else {
        CheckOutcome::fail(name, "spans differ", format!("rank b_1 = {rb} of {}, dim ann = {ro}, joint rank = {rj}", cols.len()))
    }
}

fn polys_equal_scaled(got: &PolyMatrix, want: &PolyMatrix, r: usize) -> std::result::Result<(), String> {
    if (got.nrows(), got.ncols()) != (want.nrows(), want.ncols()) {
        return Err(format!("b_{r}: shape {}x{} vs {}x{}", got.nrows(), got.ncols(), want.nrows(), want.ncols()));
    }
    for i in 0..got.nrows() {
        for j in 0..got.ncols() {
            if got.get(i, j) != want.get(i, j) {
                return Err(format!("b_{r} at ({i}, {j}): {} vs expected {}", got.get(i, j), want.get(i, j)));
            }
        }
    }
    Ok(())
}

fn golden_matrix<const C: usize>(rows: &[[&str; C]], d: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(rows.len(), C);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, Polynomial::parse(d, s).expect("golden entry parses"));
        }
    }
    m
}

/// Skeleton block structure, its Koszul blocks, the boundary maps, the
/// Y strand resolving S̄/(x₂, …, x_d)ⁿ, and for (d, n) = (4, 2) the golden matrices.
pub fn check_skeleton(res: &Resolution) -> CheckOutcome {
    let name = "skeleton";
    let (d, n) = (res.d, res.n);
    let raw = match res.in_bases((0..=d).map(|r| enumerate_basis(d, n, r)).collect()) {
        Ok(r) => r,
        Err(e) => return CheckOutcome::fail(name, "cannot return to the standard bases", e.to_string()),
    };
    let sk = match skeleton(&raw) {
        Ok(s) => s,
        Err(e) => return CheckOutcome::fail(name, "mixed blocks survive mod x1", e.to_string()),
    };
    let delta = &raw.delta;
    for r in 2..d {
        let (k, l) = skeleton_kos_blocks(d, n, r);
        for (kind, kos) in [(Kind::X, k), (Kind::Y, l)] {
            let block = sk[r - 1].select(&raw.bases[r - 1].positions(kind), &raw.bases[r].positions(kind));
            if let Err(w) = polys_equal_scaled(&block, &kos.scale(delta), r) {
                return CheckOutcome::fail(name, format!("{kind:?} block is not delta times Koszul"), w);
            }
        }
    }
    let mut first = PolyMatrix::zeros(1, raw.bases[1].len());
    for (j, (_, e)) in raw.bases[1].iter().enumerate() {
        if e.kind == Kind::Y {
            first.set(0, j, Polynomial::term(e.mono.mul_var(e.wedge[0]), delta.clone()));
        }
    }
    if let Err(w) = polys_equal_scaled(&sk[0], &first, 1) {
        return CheckOutcome::fail(name, "b_1 mod x1 is not delta times the powers of the maximal ideal", w);
    }
    let mut last = PolyMatrix::zeros(raw.bases[d - 1].len(), 1);
    for (i, (_, e)) in raw.bases[d - 1].iter().enumerate() {
        if e.kind == Kind::X {
            last.set(i, 0, Polynomial::term(e.mono, delta.clone()));
        }
    }
    if let Err(w) = polys_equal_scaled(&sk[d - 1], &last, d) {
        return CheckOutcome::fail(name, "b_d mod x1 has the wrong shape", w);
    }
    if let Err(w) = y_strand_resolves(&raw, &sk) {
        return CheckOutcome::fail(name, "Y strand does not resolve S/(x2..xd)^n", w);
    }
    let mut detail = format!("mod x1: block diagonal, blocks = delta·Koszul, Y strand resolves S/(x2..x{d})^{n}");
    if (d, n) == (4, 2) {
        let sd = match raw.in_bases(self_dual_bases(d, n)) {
            Ok(r) => r,
            Err(e) => return CheckOutcome::fail(name, "self-dual bases", e.to_string()),
        };
        let sk = sd.matrices.iter().map(|m| m.substitute_x1_zero()).collect::<Vec<_>>();
        let b1 = golden_matrix(&[golden::B1], d).scale(delta);
        let b2 = golden_matrix(&golden::B2, d).scale(delta);
        let b3 = golden_matrix(&golden::B3, d).scale(delta);
        let b4 = b1.transpose();
        for (r, want) in [(1, b1), (2, b2), (3, b3), (4, b4)] {
            if let Err(w) = polys_equal_scaled(&sk[r - 1], &want, r) {
                return CheckOutcome::fail(name, "golden d=4, n=2 skeleton mismatch", w);
            }
        }
        let labels: [&[&str]; 3] = [&golden::LABELS_B1, &golden::LABELS_B2, &golden::LABELS_B3];
        for (r, want) in labels.into_iter().enumerate() {
            let got = sd.bases[r + 1].labels();
            if got != want {
                return CheckOutcome::fail(name, "golden basis labels differ", format!("B_{}: {got:?}", r + 1));
            }
        }
        detail.push_str("; golden d=4, n=2 matrices match");
    }
    CheckOutcome::pass(name, detail)
}

/// Degreewise exactness of the Y strand over x₂..x_d up to degree 2n + d.
fn y_strand_resolves(raw: &Resolution, sk: &[PolyMatrix]) -> std::result::Result<(), String> {
    let (d, n) = (raw.d, raw.n);
    let inv = rat(1) / &raw.delta;
    let mats: Vec<PolyMatrix> = (1..d)
        .map(|r| sk[r - 1].select(&raw.bases[r - 1].positions(Kind::Y), &raw.bases[r].positions(Kind::Y)).scale(&inv))
        .collect();
    for r in 1..d - 1 {
        if let Some((i, j)) = mats[r - 1].mul(&mats[r]).first_nonzero() {
            return Err(format!("Y strand not a complex at position {r}: ({i}, {j})"));
        }
    }
    let tw = &raw.twists;
    let size = |r: usize| raw.bases[r].positions(Kind::Y).len() as u64;
    let dim = |vars: usize, k: i64| if k < 0 { 0 } else { binomial(k + vars as i64 - 1, vars as i64 - 1) };
    for e in 0..=(2 * n + d) as u32 {
        let ranks: Vec<u64> = (1..d)
            .map(|r| graded_piece(&mats[r - 1], tw[r], tw[r - 1], e, 2, d).rank_exact() as u64)
            .chain([0])
            .collect();
        let coker = dim(d - 1, e as i64) - ranks[0];
        let want = if (e as usize) < n { dim(d - 1, e as i64) } else { 0 };
        if coker != want {
            return Err(format!("degree {e}: cokernel dimension {coker}, expected {want}"));
        }
        for r in 1..d {
            let dim_r = size(r) * dim(d - 1, e as i64 - tw[r] as i64);
            if ranks[r - 1] + ranks[r] != dim_r {
                return Err(format!("position {r}, degree {e}: ranks {} + {} vs dim {dim_r}", ranks[r - 1], ranks[r]));
            }
        }
    }
    Ok(())
}

/// Self-duality: [b_d] = [b₁]ᵀ and the low-d block identities in self-dual
/// bases, plus the graded product rule for the pairing on all basis pairs.
pub fn check_duality(res: &Resolution) -> CheckOutcome {
    let name = "duality";
    let (d, n) = (res.d, res.n);
    let raw = match res.in_bases((0..=d).map(|r| enumerate_basis(d, n, r)).collect()) {
        Ok(r) => r,
        Err(e) => return CheckOutcome::fail(name, "cannot return to the standard bases", e.to_string()),
    };
    let sd = match raw.in_bases(self_dual_bases(d, n)) {
        Ok(r) => r,
        Err(e) => return CheckOutcome::fail(name, "self-dual bases", e.to_string()),
    };
    if let Err(w) = polys_equal_scaled(sd.matrix(d), &sd.matrix(1).transpose(), d) {
        return CheckOutcome::fail(name, "b_d is not the transpose of b_1", w);
    }
    let mut detail = String::from("b_d = b_1^T");
    if d == 3 {
        let m = sd.matrix(2);
        if let Err(w) = polys_equal_scaled(m, &m.transpose().scale(&rat(-1)), 2) {
            return CheckOutcome::fail(name, "b_2 is not alternating", w);
        }
        detail.push_str("; b_2 alternating");
    }
    if d == 4 {
        let half = n * n + 2 * n;
        let b2 = sd.matrix(2);
        let rows: Vec<usize> = (0..b2.nrows()).collect();
        let a = b2.select(&rows, &(0..half).collect::<Vec<_>>());
        let b = b2.select(&rows, &(half..2 * half).collect::<Vec<_>>());
        let mut want = PolyMatrix::zeros(2 * half, b2.nrows());
        for i in 0..half {
            for j in 0..b2.nrows() {
                want.set(i, j, b.get(j, i).scale(&rat(-1)));
                want.set(half + i, j, a.get(j, i).scale(&rat(-1)));
            }
        }
        if let Err(w) = polys_equal_scaled(sd.matrix(3), &want, 3) {
            return CheckOutcome::fail(name, "b_3 is not -[B^T ; A^T]", w);
        }
        detail.push_str("; b_3 = -[B^T ; A^T]");
    }
    let pps: Vec<PairingMatrix> = (0..=d).map(|r| pp_matrix(&raw.bases[r], &raw.bases[d - r])).collect();
    let mut perms = Vec::with_capacity(d + 1);
    for (r, p) in pps.iter().enumerate() {
        let Some(perm) = p.permutation() else {
            return CheckOutcome::fail(name, "pairing is not a signed permutation", format!("r = {r}"));
        };
        let sign = if (r * (d - r)) % 2 == 0 { 1 } else { -1 };
        for (i, &(j, s)) in perm.iter().enumerate() {
            if pps[d - r].entries[j][i] != sign * s {
                return CheckOutcome::fail(name, "pairing is not graded-commutative", format!("r = {r}, pair ({i}, {j})"));
            }
        }
        perms.push(perm);
    }
    for r in 0..d {
        if let Err(w) = product_rule(&raw, &perms, r) {
            return CheckOutcome::fail(name, "product rule residual is nonzero", w);
        }
    }
    detail.push_str(&format!("; pairing product rule holds on all basis pairs for r = 0..{}", d - 1));
    CheckOutcome::pass(name, detail)
}

/// pp(b_{r+1}Θ ⊗ Θ′) + (−1)^{r+1} pp(Θ ⊗ b_{d−r}Θ′) = 0 for Θ ∈ B_{r+1}, Θ′ ∈ B_{d−r}.
fn product_rule(raw: &Resolution, perms: &[Vec<(usize, i64)>], r: usize) -> std::result::Result<(), String> {
    let d = raw.d;
    let hi = raw.matrix(r + 1);
    let lo = raw.matrix(d - r);
    let mut resid = PolyMatrix::zeros(hi.ncols(), lo.ncols());
    for (i, &(c, s)) in perms[r].iter().enumerate() {
        for a in 0..hi.ncols() {
            let p = hi.get(i, a);
            if !p.is_zero() {
                resid.get_mut(a, c).add_assign(&p.scale(&rat(s)));
            }
        }
    }
    let sign = if (r + 1) % 2 == 0 { 1 } else { -1 };
    for (a, &(j, s)) in perms[r + 1].iter().enumerate() {
        for c in 0..lo.ncols() {
            let p = lo.get(j, c);
            if !p.is_zero() {
                resid.get_mut(a, c).add_assign(&p.scale(&rat(sign * s)));
            }
        }
    }
    match resid.first_nonzero() {
        None => Ok(()),
        Some((a, c)) => Err(format!("r = {r}: ({}, {}) residual {}", raw.bases[r + 1].elements[a].1, raw.bases[d - r].elements[c].1, resid.get(a, c))),
    }
}

/// Whether x₁·S_{n−1} + span(columns of b₁) = S_n.
fn x1_surjects(res: &Resolution) -> (usize, usize) {
    let (d, n) = (res.d, res.n as u32);
    let mons = monomials_of_degree(d, 1, n);
    let mut polys: Vec<Polynomial> = monomials_of_degree(d, 1, n - 1).into_iter().map(|m| Polynomial::monomial(m.mul_var(1))).collect();
    let b1 = res.matrix(1);
    polys.extend((0..b1.ncols()).map(|j| b1.get(0, j).clone()));
    (coordinate_rank(&polys, &mons), mons.len())
}

/// Multiplication by x₁ (and by x₂, after relabeling) maps A_{n−1} onto A_n.
pub fn check_wlp(res: &Resolution) -> CheckOutcome {
    let name = "wlp";
    let (r1, dim) = x1_surjects(res);
    if r1 != dim {
        return CheckOutcome::fail(name, "x1·A_(n-1) != A_n", format!("rank {r1} < dim S_n = {dim}"));
    }
    let mut perm: Vec<usize> = (1..=res.d).collect();
    perm.swap(0, 1);
    let swapped = match build_resolution(&res.phi.permute_vars(&perm)) {
        Ok(r) => r,
        Err(e) => return CheckOutcome::fail(name, "relabeled instance failed to build", e.to_string()),
    };
    let (r2, _) = x1_surjects(&swapped);
    if r2 != dim {
        return CheckOutcome::fail(name, "x2·A_(n-1) != A_n", format!("rank {r2} < dim S_n = {dim}"));
    }
    CheckOutcome::pass(name, format!("x1 and x2 map A_{} onto A_{}", res.n - 1, res.n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::differentials::build_resolution;
    use crate::invsys::{random_invsys, InverseSystem};

    #[test]
    fn all_checks_pass_d4_n2() {
        let res = build_resolution(&random_invsys(4, 2, 7, 5).unwrap()).unwrap();
        let report = run_checks(&res, &Check::ALL, default_dmax(4, 2));
        assert!(report.passed, "{report}");
        assert!(report.checks[5].detail.contains("golden"));
    }

    #[test]
    fn all_checks_pass_sum_of_squares_d3() {
        let res = build_resolution(&InverseSystem::sum_of_powers(3, 2).unwrap()).unwrap();
        let report = run_checks(&res, &Check::ALL, 7);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn euler_strings() {
        let res = build_resolution(&random_invsys(4, 2, 1, 5).unwrap()).unwrap();
        assert_eq!(check_euler_hilbert(&res).detail, "1 - 9t^2 + 16t^3 - 9t^4 + t^6 = (1-t)^4·HS_A(t), h = [1, 4, 1]");
        let res = build_resolution(&InverseSystem::sum_of_powers(3, 2).unwrap()).unwrap();
        assert!(check_euler_hilbert(&res).detail.starts_with("1 - 5t^2 + 5t^3 - t^5 ="));
    }

    #[test]
    fn corruption_is_caught_with_witness() {
        let mut res = build_resolution(&random_invsys(4, 2, 2, 5).unwrap()).unwrap();
        let p = res.matrices[1].get(0, 0).add(&Polynomial::monomial(Monomial::var(4, 2)));
        res.matrices[1].set(0, 0, p);
        let c = check_complex(&res);
        assert!(!c.passed);
        assert!(c.witness.unwrap().starts_with("r=1"));
        assert!(!check_exactness_up_to(&res, 8).passed);

        let mut res = build_resolution(&random_invsys(4, 2, 2, 5).unwrap()).unwrap();
        res.matrices[2].set(0, 0, Polynomial::parse(4, "x2^2").unwrap());
        let c = check_betti_and_degrees(&res);
        assert!(!c.passed && c.witness.is_some());
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }
}
