//! Matrices of the perfect pairing B_r ⊗ B_{d−r} → B_d.

use crate::hookbasis::{pairing, OrderedBasis};

/// Pairing values pp(e_i ⊗ f_j) as coefficients of X^{(d)}, for signed
/// bases e of B_r and f of B_{d−r}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub r: usize,
    pub entries: Vec<Vec<i64>>,
}

impl PairingMatrix {
    /// For each row, the unique column with a nonzero entry and its sign;
    /// `None` if the matrix is not a signed permutation.
    pub fn permutation(&self) -> Option<Vec<(usize, i64)>> {
        let mut seen = vec![false; self.entries.first().map_or(0, Vec::len)];
        let mut out = Vec::with_capacity(self.entries.len());
        for row in &self.entries {
            let hits: Vec<(usize, i64)> = row.iter().copied().enumerate().filter(|(_, v)| *v != 0).collect();
            match hits.as_slice() {
                [(j, v)] if v.abs() == 1 && !seen[*j] => {
                    seen[*j] = true;
                    out.push((*j, *v));
                }
                _ => return None,
            }
        }
        (out.len() == seen.len()).then_some(out)
    }

    pub fn is_identity(&self) -> bool {
        self.permutation().is_some_and(|p| p.iter().enumerate().all(|(i, &(j, s))| i == j && s == 1))
    }
}

/// The pairing matrix between `left` (a basis of B_r) and `right` (of B_{d−r}).
pub fn pp_matrix(left: &OrderedBasis, right: &OrderedBasis) -> PairingMatrix {
    let entries = left
        .iter()
        .map(|(s, e)| right.iter().map(|(t, f)| s * t * pairing(e, f)).collect())
        .collect();
    PairingMatrix { r: left.r, entries }
}
