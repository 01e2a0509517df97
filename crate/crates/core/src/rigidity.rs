//! Hypotheses of the reflection-rigidity theorems, checked on a diagram.
//!
//! The three odd-label conditions:
//!
//! 1. every pair `{s,t}` with `m(s,t)` odd is a maximal spherical subset;
//! 2. no vertex has two distinct odd neighbours;
//! 3. every odd pair meets at most two maximal spherical subsets (the pair
//!    itself included).
//!
//! Even systems and finite systems are reflection rigid independently of
//! these conditions; the report records which results apply.

use std::collections::BTreeSet;
use std::fmt;

use crate::classify::{self, maximal_masks};
use crate::diagram::CoxeterDiagram;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Even systems are reflection rigid.
    EvenRigidity,
    /// Systems with `W` finite are reflection rigid.
    FiniteRigidity,
    /// Conditions (1), (2), (3) together imply reflection rigidity.
    MainTheorem,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::EvenRigidity => "even",
            Theorem::FiniteRigidity => "finite",
            Theorem::MainTheorem => "main",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition1 {
    pub holds: bool,
    /// Odd pairs strictly contained in a larger spherical subset.
    pub violations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition2 {
    pub holds: bool,
    /// `(s, t, u)` with `m(s,t)` and `m(t,u)` odd; `t` is the shared vertex, `s < u`.
    pub violations: Vec<(String, String, String)>,
}

pub type OddPair = (String, String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition3 {
    pub holds: bool,
    /// For every odd pair, the number of maximal spherical subsets meeting it.
    pub counts: Vec<((String, String), usize)>,
    /// The maximal spherical subsets meeting each over-counted pair.
    pub witnesses: Vec<(OddPair, Vec<Vec<String>>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub condition1: Condition1,
    pub condition2: Condition2,
    pub condition3: Condition3,
    pub is_even: bool,
    pub is_finite: bool,
    pub applicable: BTreeSet<Theorem>,
}

impl RigidityReport {
    pub fn conditions_hold(&self) -> bool {
        self.condition1.holds && self.condition2.holds && self.condition3.holds
    }

    /// True when at least one rigidity result covers the system.
    pub fn is_rigid(&self) -> bool {
        !self.applicable.is_empty()
    }
}

fn pair_mask(i: usize, j: usize) -> u32 {
    (1 << i) | (1 << j)
}

pub fn check_condition_1(d: &CoxeterDiagram) -> Result<Condition1> {
    let maximal = maximal_masks(d)?;
    let violations: Vec<(String, String)> = d
        .odd_pairs()
        .into_iter()
        .filter(|&(i, j)| !maximal.contains(&pair_mask(i, j)))
        .map(|(i, j)| (d.name(i).to_string(), d.name(j).to_string()))
        .collect();
    Ok(Condition1 {
        holds: violations.is_empty(),
        violations,
    })
}

pub fn check_condition_2(d: &CoxeterDiagram) -> Condition2 {
    let n = d.len();
    let mut violations = Vec::new();
    for t in 0..n {
        let odd: Vec<usize> = (0..n).filter(|&u| u != t && d.label(t, u).is_odd()).collect();
        for (a, &s) in odd.iter().enumerate() {
            for &u in &odd[a + 1..] {
                violations.push((
                    d.name(s).to_string(),
                    d.name(t).to_string(),
                    d.name(u).to_string(),
                ));
            }
        }
    }
    Condition2 {
        holds: violations.is_empty(),
        violations,
    }
}

pub fn check_condition_3(d: &CoxeterDiagram) -> Result<Condition3> {
    let maximal = maximal_masks(d)?;
    let mut counts = Vec::new();
    let mut witnesses = Vec::new();
    for (i, j) in d.odd_pairs() {
        let pair = pair_mask(i, j);
        let meeting: Vec<u32> = maximal.iter().copied().filter(|&m| m & pair != 0).collect();
        let key = (d.name(i).to_string(), d.name(j).to_string());
        if meeting.len() > 2 {
            witnesses.push((
                key.clone(),
                meeting
                    .iter()
                    .map(|&m| d.names_of(&classify::mask_to_indices(m)))
                    .collect(),
            ));
        }
        counts.push((key, meeting.len()));
    }
    Ok(Condition3 {
        holds: counts.iter().all(|&(_, c)| c <= 2),
        counts,
        witnesses,
    })
}

pub fn rigidity_report(d: &CoxeterDiagram) -> Result<RigidityReport> {
    let condition1 = check_condition_1(d)?;
    let condition2 = check_condition_2(d);
    let condition3 = check_condition_3(d)?;
    let is_even = d.is_even();
    let is_finite = classify::group_order(d).finite().is_some();
    let mut applicable = BTreeSet::new();
    if is_even {
        applicable.insert(Theorem::EvenRigidity);
    }
    if is_finite {
        applicable.insert(Theorem::FiniteRigidity);
    }
    if condition1.holds && condition2.holds && condition3.holds {
        applicable.insert(Theorem::MainTheorem);
    }
    Ok(RigidityReport {
        condition1,
        condition2,
        condition3,
        is_even,
        is_finite,
        applicable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[&str], e: &[(&str, &str, u32)]) -> CoxeterDiagram {
        CoxeterDiagram::from_edges(v, e).unwrap()
    }

    fn fig2_left() -> CoxeterDiagram {
        d(
            &["x1", "x2", "x3", "x4"],
            &[("x1", "x2", 2), ("x2", "x3", 3), ("x3", "x4", 2)],
        )
    }

    fn fig2_right() -> CoxeterDiagram {
        d(
            &["x1", "x2", "x3", "x4"],
            &[("x1", "x2", 2), ("x2", "x3", 3), ("x2", "x4", 2)],
        )
    }

    #[test]
    fn condition_one() {
        assert!(check_condition_1(&fig2_left()).unwrap().holds);
        let a3 = d(&["s1", "s2", "s3"], &[("s1", "s2", 3), ("s2", "s3", 3), ("s1", "s3", 2)]);
        let c = check_condition_1(&a3).unwrap();
        assert!(!c.holds);
        assert!(c.violations.contains(&("s1".into(), "s2".into())));
        let even = d(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]);
        assert!(check_condition_1(&even).unwrap().holds);
    }

    #[test]
    fn condition_two() {
        assert!(check_condition_2(&fig2_left()).holds);
        let p = d(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3)]);
        let c = check_condition_2(&p);
        assert_eq!(c.violations, vec![("a".into(), "b".into(), "c".into())]);
        assert!(check_condition_2(&d(&["a", "b"], &[("a", "b", 2)])).holds);
    }

    #[test]
    fn condition_three() {
        let c = check_condition_3(&fig2_left()).unwrap();
        assert!(!c.holds);
        assert_eq!(c.counts, vec![(("x2".into(), "x3".into()), 3)]);
        assert_eq!(c.witnesses[0].1.len(), 3);

        let i25 = d(&["a", "b"], &[("a", "b", 5)]);
        let c = check_condition_3(&i25).unwrap();
        assert!(c.holds);
        assert_eq!(c.counts, vec![(("a".into(), "b".into()), 1)]);

        let c = check_condition_3(&fig2_right()).unwrap();
        assert!(!c.holds);
        assert_eq!(c.counts[0].1, 3);
    }

    #[test]
    fn reports() {
        let r = rigidity_report(&fig2_left()).unwrap();
        assert!(r.condition1.holds && r.condition2.holds && !r.condition3.holds);
        assert!(!r.is_even && !r.is_finite);
        assert!(r.applicable.is_empty());

        let even = d(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]);
        let r = rigidity_report(&even).unwrap();
        assert!(r.is_even && !r.is_finite);
        assert_eq!(
            r.applicable,
            [Theorem::EvenRigidity, Theorem::MainTheorem].into_iter().collect()
        );

        let r = rigidity_report(&d(&["a", "b"], &[("a", "b", 5)])).unwrap();
        assert_eq!(
            r.applicable,
            [Theorem::FiniteRigidity, Theorem::MainTheorem].into_iter().collect()
        );
    }
}
