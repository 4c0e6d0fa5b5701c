//! Macaulay inverse systems, contraction, catalecticants, and the annihilator oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ringcore::{format_rational, monomials_of_degree, parse_rational, rat, Monomial, Polynomial, RatMatrix, Rational, MAX_VARS};

/// Number of generator attempts before `random_invsys` gives up.
pub const RETRY_BUDGET: u64 = 64;

/// An element Σ c_m·m* of a divided-power space; keys share one degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl DualElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element m*.
    pub fn basis(m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, Rational::one());
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> DualElement {
        let mut out = DualElement::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }
}

/// Contraction in the dual-basis convention: μ(m*) = (m/μ)* if μ | m, else 0.
pub fn contract(mu: &Monomial, nu: &DualElement) -> DualElement {
    let mut out = DualElement::zero();
    for (m, c) in nu.terms() {
        if let Some(q) = m.div(mu) {
            out.add_term(q, c.clone());
        }
    }
    out
}

/// g(ν) for a polynomial g, extended linearly.
pub fn apply(g: &Polynomial, nu: &DualElement) -> DualElement {
    let mut out = DualElement::zero();
    for (mu, c) in g.terms() {
        for (m, v) in contract(mu, nu).terms() {
            out.add_term(*m, c * v);
        }
    }
    out
}

/// A graded inverse system φ ∈ D_{2n−2}, stored as its coefficients t_m = φ(m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSystem {
    d: usize,
    n: usize,
    coeffs: BTreeMap<Monomial, Rational>,
}

/// The catalecticant T over degree-(n−1) monomials, δ = det T and Q = adj T.
#[derive(Clone, Debug)]
pub struct Catalecticant {
    pub monomials: Vec<Monomial>,
    pub t: RatMatrix,
    pub delta: Rational,
    pub q: RatMatrix,
    index: HashMap<Monomial, usize>,
}

impl Catalecticant {
    pub fn is_admissible(&self) -> bool {
        !self.delta.is_zero()
    }

    /// Position of a degree-(n−1) monomial in the row/column order.
    pub fn index(&self, m: &Monomial) -> usize {
        self.index[m]
    }

    /// Q_{m₁,m₂}.
    pub fn q_entry(&self, m1: &Monomial, m2: &Monomial) -> &Rational {
        self.q.get(self.index[m1], self.index[m2])
    }
}

impl InverseSystem {
    /// Validates degrees and drops zero coefficients.
    pub fn new(d: usize, n: usize, coeffs: BTreeMap<Monomial, Rational>) -> Result<Self> {
        if d < 3 {
            return Err(Error::Input(format!("d must be at least 3, got {d}")));
        }
        if n < 2 {
            return Err(Error::Input(format!("n must be at least 2, got {n}")));
        }
        if d > MAX_VARS {
            return Err(Error::Input(format!("d must be at most {MAX_VARS}, got {d}")));
        }
        let socle = (2 * n - 2) as u32;
        for m in coeffs.keys() {
            if m.nvars() != d {
                return Err(Error::Input(format!("monomial {} has {} variables, expected {d}", m.to_bracket_string(), m.nvars())));
            }
            if m.degree() != socle {
                return Err(Error::Input(format!("monomial {} has degree {}, expected {socle}", m.to_bracket_string(), m.degree())));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(InverseSystem { d, n, coeffs })
    }

    /// φ = Σ (x_i^{2n−2})*, whose catalecticant is the identity when n = 2.
    pub fn sum_of_powers(d: usize, n: usize) -> Result<Self> {
        let coeffs = (1..=d)
            .map(|i| {
                let mut e = vec![0u32; d];
                e[i - 1] = (2 * n - 2) as u32;
                (Monomial::from_exponents(&e), rat(1))
            })
            .collect();
        Self::new(d, n, coeffs)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn socle_degree(&self) -> u32 {
        (2 * self.n - 2) as u32
    }

    /// Nonzero coefficients in monomial order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.coeffs.iter()
    }

    /// t_m; zero for monomials absent from the map or of the wrong degree.
    pub fn t(&self, m: &Monomial) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// φ as an element of D_{2n−2}.
    pub fn as_dual(&self) -> DualElement {
        let mut e = DualElement::zero();
        for (m, c) in &self.coeffs {
            e.add_term(*m, c.clone());
        }
        e
    }

    /// Matrix with entry t_{u·v}, rows u of degree j, columns v of degree 2n−2−j.
    pub fn catalecticant_matrix(&self, j: u32) -> RatMatrix {
        assert!(j <= self.socle_degree(), "catalecticant degree out of range");
        let rows = monomials_of_degree(self.d, 1, j);
        let cols = monomials_of_degree(self.d, 1, self.socle_degree() - j);
        RatMatrix::from_rows(rows.iter().map(|u| cols.iter().map(|v| self.t(&u.mul(v))).collect()).collect())
    }

    /// T, δ = det T and Q = adj T.
    pub fn delta_and_q(&self) -> Catalecticant {
        let monomials = monomials_of_degree(self.d, 1, (self.n - 1) as u32);
        let t = self.catalecticant_matrix((self.n - 1) as u32);
        let (delta, q) = t.det_and_adjugate();
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Catalecticant { monomials, t, delta, q, index }
    }

    pub fn delta(&self) -> Rational {
        self.catalecticant_matrix((self.n - 1) as u32).det()
    }

    /// Fails with a diagnostic when δ = 0.
    pub fn require_admissible(&self) -> Result<Catalecticant> {
        let cat = self.delta_and_q();
        if cat.is_admissible() {
            Ok(cat)
        } else {
            let rank = cat.t.rank();
            Err(Error::Inadmissible(format!(
                "δ = det T = 0: the degree-{} catalecticant has rank {rank} < {}, so ann(φ) has nonzero generators in degree {} and A has no Gorenstein-linear resolution",
                self.n - 1,
                cat.monomials.len(),
                self.n - 1
            )))
        }
    }

    /// q(ν) = Σ_{m₁,m₂} ν_{m₂}·Q_{m₁,m₂}·m₁ for ν ∈ D_{n−1}.
    pub fn q_of(&self, cat: &Catalecticant, nu: &DualElement) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m2, c) in nu.terms() {
            assert_eq!(m2.degree() as usize, self.n - 1, "q is defined on D_(n-1)");
            for m1 in &cat.monomials {
                p.add_term(*m1, c * cat.q_entry(m1, m2));
            }
        }
        p
    }

    /// m(Φ̃) = Σ_{m₂} t_{m·m₂}(x₁m₂)* for m free of x₁.
    pub fn tilde_contract(&self, m: &Monomial) -> Result<DualElement> {
        if m.has_var(1) {
            return Err(Error::Input(format!("tilde contraction needs an x1-free monomial, got {m}")));
        }
        let r = m.degree();
        if r > self.socle_degree() {
            return Ok(DualElement::zero());
        }
        let mut out = DualElement::zero();
        for m2 in monomials_of_degree(self.d, 1, self.socle_degree() - r) {
            out.add_term(m2.mul_var(1), self.t(&m.mul(&m2)));
        }
        Ok(out)
    }

    /// Basis of {g ∈ S_j : g(φ) = 0}.
    pub fn ann_degree(&self, j: u32) -> Vec<Polynomial> {
        let mons = monomials_of_degree(self.d, 1, j);
        if j > self.socle_degree() {
            return mons.into_iter().map(Polynomial::monomial).collect();
        }
        let map = self.catalecticant_matrix(self.socle_degree() - j);
        map.kernel_basis()
            .into_iter()
            .map(|v| {
                let mut p = Polynomial::zero();
                for (m, c) in mons.iter().zip(v) {
                    p.add_term(*m, c);
                }
                p
            })
            .collect()
    }

    /// dim A_j for j = 0..=2n−2, where A = S/ann(φ).
    pub fn hilbert_function(&self) -> Result<Vec<usize>> {
        self.require_admissible()?;
        Ok((0..=self.socle_degree()).map(|j| self.catalecticant_matrix(j).rank()).collect())
    }

    /// Relabels variables: x_i ↦ x_{perm[i−1]}.
    pub fn permute_vars(&self, perm: &[usize]) -> InverseSystem {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; self.d];
                for i in 1..=self.d {
                    e[perm[i - 1] - 1] = m.exp(i);
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        InverseSystem { d: self.d, n: self.n, coeffs }
    }

    /// Canonical JSON text; parsing it back and re-serializing is byte-identical.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{{\n  \"d\": {},\n  \"n\": {},\n  \"coefficients\": [", self.d, self.n);
        let lines: Vec<String> = self
            .coeffs
            .iter()
            .map(|(m, c)| format!("    [{}, \"{}\"]", m.to_bracket_string(), format_rational(c)))
            .collect();
        s.push_str(&lines.join(",\n"));
        if !lines.is_empty() {
            s.push('\n');
        }
        s.push_str("  ]\n}\n");
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct File {
            d: usize,
            n: usize,
            coefficients: Vec<(Vec<u32>, String)>,
        }
        let file: File = serde_json::from_str(text).map_err(|e| Error::Input(format!("inverse-system file: {e}")))?;
        let mut coeffs = BTreeMap::new();
        for (exps, value) in file.coefficients {
            if exps.len() != file.d {
                return Err(Error::Input(format!("exponent vector {exps:?} has length {}, expected {}", exps.len(), file.d)));
            }
            if file.d > MAX_VARS {
                return Err(Error::Input(format!("d must be at most {MAX_VARS}")));
            }
            let m = Monomial::from_exponents(&exps);
            let c = parse_rational(&value)?;
            if coeffs.insert(m, c).is_some() {
                return Err(Error::Input(format!("duplicate monomial {exps:?}")));
            }
        }
        Self::new(file.d, file.n, coeffs)
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// Seeded random integer inverse system with δ ≠ 0, coefficients in [−bound, bound].
pub fn random_invsys(d: usize, n: usize, seed: u64, bound: u64) -> Result<InverseSystem> {
    InverseSystem::new(d, n, BTreeMap::new())?;
    let mons = monomials_of_degree(d, 1, (2 * n - 2) as u32);
    let bound = bound as i64;
    for attempt in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        let coeffs = mons.iter().map(|m| (*m, rat(rng.gen_range(-bound..=bound)))).collect();
        let phi = InverseSystem::new(d, n, coeffs)?;
        if !phi.delta().is_zero() {
            return Ok(phi);
        }
    }
    Err(Error::Inadmissible(format!(
        "no admissible inverse system found for d={d}, n={n}, seed={seed}, bound={bound} after {RETRY_BUDGET} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn contraction_examples() {
        let x1 = Monomial::var(3, 1);
        assert_eq!(contract(&x1, &DualElement::basis(m(&[2, 1, 0]))), DualElement::basis(m(&[1, 1, 0])));
        assert!(contract(&Monomial::var(3, 3), &DualElement::basis(m(&[2, 0, 0]))).is_zero());
        assert_eq!(contract(&m(&[2, 1, 0]), &DualElement::basis(m(&[2, 1, 0]))), DualElement::basis(Monomial::one(3)));
    }

    #[test]
    fn sum_of_squares_catalecticant() {
        let phi = InverseSystem::sum_of_powers(3, 2).unwrap();
        assert_eq!(phi.catalecticant_matrix(1), RatMatrix::identity(3));
        let row = phi.catalecticant_matrix(0);
        assert_eq!((row.nrows(), row.ncols()), (1, 6));
        let cat = phi.delta_and_q();
        assert_eq!(cat.delta, rat(1));
        assert_eq!(cat.q, RatMatrix::identity(3));
        for j in 1..=3 {
            assert_eq!(phi.q_of(&cat, &DualElement::basis(Monomial::var(3, j))), Polynomial::monomial(Monomial::var(3, j)));
        }
        assert_eq!(phi.tilde_contract(&Monomial::var(3, 2)).unwrap(), DualElement::basis(m(&[1, 1, 0])));
        assert!(phi.tilde_contract(&Monomial::var(3, 1)).is_err());
        assert_eq!(phi.hilbert_function().unwrap(), vec![1, 3, 1]);
        assert_eq!(phi.ann_degree(2).len(), 5);
        assert!(phi.ann_degree(1).is_empty());
        assert_eq!(phi.ann_degree(3).len(), 10);
    }

    #[test]
    fn tilde_contract_of_one_lists_all_coefficients() {
        let phi = random_invsys(3, 2, 4, 5).unwrap();
        let e = phi.tilde_contract(&Monomial::one(3)).unwrap();
        for (mon, c) in phi.coefficients() {
            assert_eq!(&e.coeff(&mon.mul_var(1)), c);
        }
    }

    #[test]
    fn top_size() {
        let phi = random_invsys(4, 2, 1, 5).unwrap();
        assert_eq!(phi.delta_and_q().t.nrows(), 4);
        assert_eq!(phi.hilbert_function().unwrap(), vec![1, 4, 1]);
    }

    #[test]
    fn generator_is_reproducible() {
        let a = random_invsys(3, 2, 1, 5).unwrap();
        assert_eq!(a, random_invsys(3, 2, 1, 5).unwrap());
        assert!(!a.delta().is_zero());
        assert_ne!(a, random_invsys(3, 2, 2, 5).unwrap());
        assert!(matches!(random_invsys(3, 2, 1, 0), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(m(&[2, 0, 0]), parse_rational("1/3").unwrap());
        coeffs.insert(m(&[0, 1, 1]), rat(-7));
        let phi = InverseSystem::new(3, 2, coeffs).unwrap();
        let text = phi.to_json();
        let back = InverseSystem::from_json(&text).unwrap();
        assert_eq!(back, phi);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(InverseSystem::from_json("{").is_err());
        assert!(InverseSystem::from_json(r#"{"d":3,"n":2,"coefficients":[[[1,0,0],"1"]]}"#).is_err());
        assert!(InverseSystem::from_json(r#"{"d":3,"n":2,"coefficients":[[[2,0],"1"]]}"#).is_err());
        assert!(InverseSystem::from_json(r#"{"d":2,"n":2,"coefficients":[]}"#).is_err());
        assert!(InverseSystem::from_json(r#"{"d":3,"n":2,"coefficients":[[[2,0,0],"1/0"]]}"#).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn catalecticant_identities(d in 3usize..5, n in 2usize..4, seed in 0u64..1000) {
            let phi = random_invsys(d, n, seed, 5).unwrap();
            let cat = phi.delta_and_q();
            prop_assert!(cat.t.is_symmetric());
            let k = cat.monomials.len();
            prop_assert_eq!(cat.t.mul(&cat.q), RatMatrix::identity(k).scale(&cat.delta));
            prop_assert_eq!(cat.q.mul(&cat.t), RatMatrix::identity(k).scale(&cat.delta));
            let hf = phi.hilbert_function().unwrap();
            prop_assert_eq!(hf[0], 1);
            prop_assert_eq!(hf[1], d);
            let rev: Vec<usize> = hf.iter().rev().cloned().collect();
            prop_assert_eq!(&hf, &rev);
        }

        #[test]
        fn q_is_symmetric_and_inverts_phi(seed in 0u64..1000, i in 0usize..6, j in 0usize..6) {
            let phi = random_invsys(3, 3, seed, 5).unwrap();
            let cat = phi.delta_and_q();
            let (a, b) = (cat.monomials[i], cat.monomials[j]);
            let nu = DualElement::basis(a);
            let nu2 = DualElement::basis(b);
            let qa = phi.q_of(&cat, &nu);
            let qb = phi.q_of(&cat, &nu2);
            prop_assert_eq!(apply(&qa, &nu2), apply(&qb, &nu));
            prop_assert_eq!(apply(&qa, &phi.as_dual()), nu.scale(&cat.delta));
        }

        #[test]
        fn annihilator_kills_phi(d in 3usize..5, n in 2usize..4, seed in 0u64..1000, j in 0u32..6) {
            let phi = random_invsys(d, n, seed, 5).unwrap();
            let j = j.min(2 * n as u32 - 1);
            let ann = phi.ann_degree(j);
            let dim_s = monomials_of_degree(d, 1, j).len();
            prop_assert_eq!(dim_s - ann.len(), if j <= phi.socle_degree() { phi.catalecticant_matrix(j).rank() } else { 0 });
            for g in &ann {
                prop_assert!(apply(g, &phi.as_dual()).is_zero());
            }
        }

        #[test]
        fn delta_mu_minus_x1_q_annihilates(seed in 0u64..1000, k in 0usize..10) {
            let phi = random_invsys(4, 3, seed, 5).unwrap();
            let cat = phi.delta_and_q();
            let mons = monomials_of_degree(4, 2, 3);
            let mu = mons[k % mons.len()];
            let mu_tilde = phi.tilde_contract(&mu).unwrap();
            let mut g = Polynomial::term(mu, cat.delta.clone());
            let q = phi.q_of(&cat, &mu_tilde);
            g.add_assign(&q.mul(&Polynomial::monomial(Monomial::var(4, 1))).scale(&rat(-1)));
            prop_assert!(apply(&g, &phi.as_dual()).is_zero());
        }
    }
}
