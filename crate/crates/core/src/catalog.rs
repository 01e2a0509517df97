//! Named diagrams used by the CLI reproductions and the test corpus.

use crate::diagram::{CoxeterDiagram, Label};

/// `I2(m)` on vertices `a`, `b`.
pub fn dihedral(m: u32) -> CoxeterDiagram {
    CoxeterDiagram::from_edges(&["a", "b"], &[("a", "b", m)]).expect("valid dihedral diagram")
}

/// Linear diagram `s1 - s2 - ... ` with the given consecutive labels; all
/// non-consecutive pairs commute.
pub fn linear(labels: &[u32]) -> CoxeterDiagram {
    let names: Vec<String> = (1..=labels.len() + 1).map(|i| format!("s{i}")).collect();
    let mut d = CoxeterDiagram::new(names.iter().cloned()).expect("valid names");
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            let m = if j == i + 1 { labels[i] } else { 2 };
            d = d.with_edge(&names[i], &names[j], Label::Finite(m)).expect("valid label");
        }
    }
    d
}

/// `A_n`.
pub fn type_a(n: usize) -> CoxeterDiagram {
    if n == 1 {
        return CoxeterDiagram::new(["s1"]).expect("valid names");
    }
    linear(&vec![3; n - 1])
}

/// `B_n` with the 4 on the last bond.
pub fn type_b(n: usize) -> CoxeterDiagram {
    let mut labels = vec![3; n - 1];
    labels[n - 2] = 4;
    linear(&labels)
}

/// `D_n`: a path `s1 .. s(n-1)` with `sn` also attached to `s(n-2)`.
pub fn type_d(n: usize) -> CoxeterDiagram {
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let bonded = |i: usize, j: usize| (j == i + 1 && j < n - 1) || (i == n - 3 && j == n - 1);
    let mut d = CoxeterDiagram::new(names.iter().cloned()).expect("valid names");
    for i in 0..n {
        for j in i + 1..n {
            let m = if bonded(i, j) { 3 } else { 2 };
            d = d.with_edge(&names[i], &names[j], Label::Finite(m)).expect("valid label");
        }
    }
    d
}

/// `H3`.
pub fn type_h3() -> CoxeterDiagram {
    linear(&[5, 3])
}

/// `n` pairwise commuting generators, `A1^n`.
pub fn commuting(n: usize) -> CoxeterDiagram {
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let mut d = CoxeterDiagram::new(names.iter().cloned()).expect("valid names");
    for i in 0..n {
        for j in i + 1..n {
            d = d.with_edge(&names[i], &names[j], Label::Finite(2)).expect("valid label");
        }
    }
    d
}

/// Two generators `a`, `b` with label `2k`.
pub fn dihedral_pair(k: u32) -> CoxeterDiagram {
    dihedral(2 * k)
}

/// Triangle `a - b` labeled `k`, with `c` commuting with both: `I2(k) x A1`.
/// For odd `k` it defines the same group as [`dihedral_pair`].
pub fn dihedral_times_a1(k: u32) -> CoxeterDiagram {
    CoxeterDiagram::from_edges(&["a", "b", "c"], &[("a", "b", k), ("a", "c", 2), ("b", "c", 2)])
        .expect("valid diagram")
}

/// `x1 -2- x2 -3- x3 -2- x4`, all other pairs infinite.
pub fn twist_path() -> CoxeterDiagram {
    CoxeterDiagram::from_edges(
        &["x1", "x2", "x3", "x4"],
        &[("x1", "x2", 2), ("x2", "x3", 3), ("x3", "x4", 2)],
    )
    .expect("valid diagram")
}

/// `x2` joined to `x1` (2), `x3` (3) and `x4` (2), all other pairs infinite.
/// Obtained from [`twist_path`] by twisting `x4` around `{x2, x3}`.
pub fn twist_star() -> CoxeterDiagram {
    CoxeterDiagram::from_edges(
        &["x1", "x2", "x3", "x4"],
        &[("x1", "x2", 2), ("x2", "x3", 3), ("x2", "x4", 2)],
    )
    .expect("valid diagram")
}

/// The finite corpus exercised by the brute-force checks, with display names.
pub fn finite_corpus() -> Vec<(String, CoxeterDiagram)> {
    let mut out: Vec<(String, CoxeterDiagram)> =
        (3..=8).map(|m| (format!("I2({m})"), dihedral(m))).collect();
    out.push(("A3".into(), type_a(3)));
    out.push(("B3".into(), type_b(3)));
    out.push(("I2(3)xA1".into(), dihedral_times_a1(3)));
    out.push(("A1^3".into(), commuting(3)));
    out.push(("I2(5)xA1".into(), dihedral_times_a1(5)));
    out
}
