//! Deterministic dumps of a resolution: labeled text, JSON, and a Macaulay2 script.

use serde::Serialize;

use super::Resolution;
use crate::ringcore::format_rational;

#[derive(Serialize)]
struct JsonMatrix {
    r: usize,
    nrows: usize,
    ncols: usize,
    /// Nonzero entries as (row, column, polynomial).
    entries: Vec<(usize, usize, String)>,
}

#[derive(Serialize)]
struct JsonResolution {
    d: usize,
    n: usize,
    delta: String,
    betti: Vec<usize>,
    twists: Vec<u32>,
    phi: serde_json::Value,
    bases: Vec<Vec<String>>,
    matrices: Vec<JsonMatrix>,
}

/// Summary lines: δ, Betti numbers, twists.
pub fn summary(res: &Resolution) -> String {
    let join = |v: Vec<String>| v.join(" ");
    format!(
        "d = {}, n = {}\ndelta = {}\nbetti = {}\ntwists = {}\nshapes = {}\n",
        res.d,
        res.n,
        format_rational(&res.delta),
        join(res.betti().iter().map(ToString::to_string).collect()),
        join(res.twists.iter().map(ToString::to_string).collect()),
        join(res.matrices.iter().map(|m| format!("{}x{}", m.nrows(), m.ncols())).collect()),
    )
}

/// Labeled text: the bases, then every nonzero entry with its row and column labels.
pub fn to_text(res: &Resolution) -> String {
    let mut out = summary(res);
    out.push_str(&format!("phi = {}\n", res.phi.to_json()));
    for (r, b) in res.bases.iter().enumerate() {
        out.push_str(&format!("\nbasis B_{r} ({})\n", b.len()));
        for (i, l) in b.labels().iter().enumerate() {
            out.push_str(&format!("  {i}: {l}\n"));
        }
    }
    for r in 1..=res.d {
        let m = res.matrix(r);
        out.push_str(&format!("\nmatrix b_{r} ({} x {})\n", m.nrows(), m.ncols()));
        let (rows, cols) = (res.bases[r - 1].labels(), res.bases[r].labels());
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                let p = m.get(i, j);
                if !p.is_zero() {
                    out.push_str(&format!("  ({i}, {j}) {} <- {}: {p}\n", rows[i], cols[j]));
                }
            }
        }
    }
    out
}

/// JSON document with the bases and the sparse entries of every matrix.
pub fn to_json(res: &Resolution) -> String {
    let doc = JsonResolution {
        d: res.d,
        n: res.n,
        delta: format_rational(&res.delta),
        betti: res.betti(),
        twists: res.twists.clone(),
        phi: serde_json::from_str(&res.phi.to_json()).expect("inverse system JSON is valid"),
        bases: res.bases.iter().map(|b| b.labels()).collect(),
        matrices: (1..=res.d)
            .map(|r| {
                let m = res.matrix(r);
                let entries = (0..m.nrows())
                    .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
                    .filter(|&(i, j)| !m.get(i, j).is_zero())
                    .map(|(i, j)| (i, j, m.get(i, j).to_string()))
                    .collect();
                JsonMatrix { r, nrows: m.nrows(), ncols: m.ncols(), entries }
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("resolution serializes") + "\n"
}

/// Macaulay2 script defining the ring and matrices and asserting the complex
/// property, homogeneity, and exactness.
pub fn to_macaulay2(res: &Resolution) -> String {
    let vars: Vec<String> = (1..=res.d).map(|i| format!("x{i}")).collect();
    let mut out = format!("-- resolution of S/ann(phi), d = {}, n = {}, delta = {}\n", res.d, res.n, format_rational(&res.delta));
    out.push_str(&format!("S = QQ[{}];\n", vars.join(",")));
    for r in 1..=res.d {
        let m = res.matrix(r);
        let src = res.twists[r];
        let rows: Vec<String> = (0..m.nrows())
            .map(|i| format!("{{{}}}", (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        let tgt = res.twists[r - 1];
        out.push_str(&format!(
            "b{r} = map(S^{{{}:-{tgt}}}, S^{{{}:-{src}}}, {{{}}});\n",
            m.nrows(),
            m.ncols(),
            rows.join(", ")
        ));
    }
    for r in 1..=res.d {
        out.push_str(&format!("assert isHomogeneous b{r};\n"));
    }
    for r in 1..res.d {
        out.push_str(&format!("assert(b{r} * b{} == 0);\n", r + 1));
    }
    let maps: Vec<String> = (1..=res.d).map(|r| format!("b{r}")).collect();
    out.push_str(&format!("C = chainComplex {{{}}};\n", maps.join(", ")));
    out.push_str(&format!("assert all(1..{}, i -> HH_i C == 0);\n", res.d));
    out.push_str("print betti C;\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::differentials::build_resolution;
    use crate::invsys::InverseSystem;

    #[test]
    fn dumps_are_deterministic_and_labeled() {
        let phi = InverseSystem::sum_of_powers(3, 2).unwrap();
        let a = build_resolution(&phi).unwrap();
        let b = build_resolution(&phi).unwrap();
        assert_eq!(to_text(&a), to_text(&b));
        assert_eq!(to_json(&a), to_json(&b));
        assert!(summary(&a).starts_with("d = 3, n = 2\ndelta = 1\nbetti = 1 5 5 1\ntwists = 0 2 3 5\n"));
        assert!(to_text(&a).contains("(0, 0) Y(0; ; [0,0,0]) <- X(1; 2; [0,2,0]): x1*x2"));
        let v: serde_json::Value = serde_json::from_str(&to_json(&a)).unwrap();
        assert_eq!(v["matrices"][1]["nrows"], 5);
        let m2 = to_macaulay2(&a);
        assert!(m2.contains("S = QQ[x1,x2,x3];"));
        assert!(m2.contains("b1 = map(S^{1:-0}, S^{5:-2}, {{x1*x2, x1*x3, -x1^2 + x2^2, x2*x3, -x1^2 + x3^2}});"));
    }
}
