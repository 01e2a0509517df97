use std::collections::BTreeSet;

use coxeter_rigidity::classify::{is_spherical, maximal_spherical_subsets, spherical_subsets, classify_component, irreducible_components};
use coxeter_rigidity::twist::{apply_twist, verify_twist, w0_automorphism, TwistSpec};
use coxeter_rigidity::words::DEFAULT_BUDGET;
use coxeter_rigidity::{diagram_isomorphic, parse_diagram, rigidity_report, CoxeterDiagram, Label};
use proptest::prelude::*;

const LABELS: [Label; 7] = [
    Label::Finite(2),
    Label::Finite(3),
    Label::Finite(4),
    Label::Finite(5),
    Label::Finite(6),
    Label::Infinity,
    Label::Infinity,
];

fn build(n: usize, picks: &[usize]) -> CoxeterDiagram {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut d = CoxeterDiagram::new(names.iter().cloned()).unwrap();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            let label = LABELS[picks[k] % LABELS.len()];
            d = d.with_edge(&names[i], &names[j], label).unwrap();
            k += 1;
        }
    }
    d
}

fn diagram() -> impl Strategy<Value = CoxeterDiagram> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(0usize..LABELS.len(), n * (n - 1) / 2).prop_map(move |p| build(n, &p))
    })
}

fn even_diagram() -> impl Strategy<Value = CoxeterDiagram> {
    diagram().prop_map(|d| {
        d.vertices()
            .iter()
            .enumerate()
            .flat_map(|(i, s)| d.vertices()[i + 1..].iter().map(move |t| (s.clone(), t.clone())))
            .fold(d.clone(), |acc, (s, t)| {
                let l = match d.label_of(&s, &t).unwrap() {
                    Label::Finite(m) if m % 2 == 1 => Label::Finite(m + 1),
                    l => l,
                };
                acc.with_edge(&s, &t, l).unwrap()
            })
    })
}

/// Renames `v{i}` to `w{perm[i]}`.
fn permuted(d: &CoxeterDiagram, perm: &[usize]) -> CoxeterDiagram {
    d.renamed(|name| {
        let i: usize = name[1..].parse().unwrap();
        format!("w{}", perm[i % perm.len()])
    })
    .unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn with_perm() -> impl Strategy<Value = (CoxeterDiagram, Vec<usize>)> {
    diagram().prop_flat_map(|d| {
        let n = d.len();
        (Just(d), permutation(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_round_trip(d in diagram()) {
        let text = d.serialize();
        let back = parse_diagram(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn odd_components_partition(d in diagram()) {
        let blocks = d.odd_components();
        let mut all: Vec<String> = blocks.iter().flatten().cloned().collect();
        all.sort();
        prop_assert_eq!(&all[..], d.vertices());
        // Vertices in different blocks never share an odd label.
        for (a, b1) in blocks.iter().enumerate() {
            for b2 in &blocks[a + 1..] {
                for s in b1 {
                    for t in b2 {
                        prop_assert!(!d.label_of(s, t).unwrap().is_odd());
                    }
                }
            }
        }
    }

    #[test]
    fn isomorphism_search((d, perm) in with_perm()) {
        let p = permuted(&d, &perm);
        let fwd = diagram_isomorphic(&d, &p);
        prop_assert!(fwd.is_some());
        prop_assert!(fwd.unwrap().preserves_labels(&d, &p));
        let back = diagram_isomorphic(&p, &d).unwrap();
        prop_assert!(back.preserves_labels(&p, &d));
        prop_assert!(diagram_isomorphic(&d, &d).is_some());
    }

    #[test]
    fn isomorphism_is_symmetric(a in diagram(), b in diagram()) {
        prop_assert_eq!(diagram_isomorphic(&a, &b).is_some(), diagram_isomorphic(&b, &a).is_some());
        if let Some(m) = diagram_isomorphic(&a, &b) {
            prop_assert!(m.preserves_labels(&a, &b));
        }
    }

    #[test]
    fn classification_invariant_under_renaming((d, perm) in with_perm()) {
        let p = permuted(&d, &perm);
        let rename = |s: &str| format!("w{}", perm[s[1..].parse::<usize>().unwrap()]);
        for comp in irreducible_components(&d, d.vertices()).unwrap() {
            let image: Vec<String> = comp.iter().map(|s| rename(s)).collect();
            prop_assert_eq!(
                classify_component(&d, &comp).unwrap(),
                classify_component(&p, &image).unwrap()
            );
        }
    }

    #[test]
    fn spherical_subsets_are_downward_closed(d in diagram()) {
        let all = spherical_subsets(&d).unwrap();
        let sets: BTreeSet<Vec<String>> = all.iter().map(|s| s.vertices.clone()).collect();
        for s in &all {
            for drop in 0..s.vertices.len() {
                let mut sub = s.vertices.clone();
                sub.remove(drop);
                prop_assert!(sets.contains(&sub));
                prop_assert!(is_spherical(&d, &sub).unwrap());
            }
        }
        // And the list is complete.
        let n = d.len();
        for mask in 0u32..(1 << n) {
            let sub: Vec<String> = (0..n).filter(|b| mask & (1 << b) != 0).map(|b| d.name(b).to_string()).collect();
            prop_assert_eq!(is_spherical(&d, &sub).unwrap(), sets.contains(&sub));
        }
    }

    #[test]
    fn maximal_subsets_cover_and_are_incomparable(d in diagram()) {
        let all = spherical_subsets(&d).unwrap();
        let max = maximal_spherical_subsets(&d).unwrap();
        let contains = |big: &[String], small: &[String]| small.iter().all(|v| big.contains(v));
        for (i, a) in max.iter().enumerate() {
            for (j, b) in max.iter().enumerate() {
                if i != j {
                    prop_assert!(!contains(&a.vertices, &b.vertices));
                }
            }
        }
        for s in &all {
            prop_assert!(max.iter().any(|m| contains(&m.vertices, &s.vertices)));
        }
    }

    #[test]
    fn rigidity_verdicts_are_isomorphism_invariant((d, perm) in with_perm()) {
        let p = permuted(&d, &perm);
        let (r1, r2) = (rigidity_report(&d).unwrap(), rigidity_report(&p).unwrap());
        prop_assert_eq!(r1.condition1.holds, r2.condition1.holds);
        prop_assert_eq!(r1.condition2.holds, r2.condition2.holds);
        prop_assert_eq!(r1.condition3.holds, r2.condition3.holds);
        prop_assert_eq!(r1.is_even, r2.is_even);
        prop_assert_eq!(r1.is_finite, r2.is_finite);
        prop_assert_eq!(r1.applicable, r2.applicable);
    }

    #[test]
    fn rigidity_witnesses_are_sound(d in diagram()) {
        let r = rigidity_report(&d).unwrap();
        let max = maximal_spherical_subsets(&d).unwrap();
        for (s, t) in &r.condition1.violations {
            prop_assert!(d.label_of(s, t).unwrap().is_odd());
            prop_assert!(!max.iter().any(|m| m.vertices == vec![s.clone(), t.clone()]));
            prop_assert!(max.iter().any(|m| m.vertices.len() > 2 && m.contains(s) && m.contains(t)));
        }
        for (s, t, u) in &r.condition2.violations {
            prop_assert!(d.label_of(s, t).unwrap().is_odd());
            prop_assert!(d.label_of(t, u).unwrap().is_odd());
            prop_assert!(s != u);
        }
        for ((s, t), count) in &r.condition3.counts {
            let meeting = max.iter().filter(|m| m.contains(s) || m.contains(t)).count();
            prop_assert_eq!(*count, meeting);
        }
        prop_assert_eq!(r.applicable.contains(&coxeter_rigidity::Theorem::MainTheorem), r.conditions_hold());
    }

    #[test]
    fn even_diagrams_satisfy_conditions(d in even_diagram()) {
        let r = rigidity_report(&d).unwrap();
        prop_assert!(r.is_even);
        prop_assert!(r.conditions_hold());
    }
}

/// Diagrams with `A, J, B` valid for a twist: `J` is a random spherical set,
/// `A`–`B` labels forced to infinity.
fn twistable() -> impl Strategy<Value = (CoxeterDiagram, TwistSpec)> {
    (diagram(), any::<u64>()).prop_filter_map("needs a spherical J", |(d, seed)| {
        let n = d.len();
        if n < 2 {
            return None;
        }
        let spherical: Vec<Vec<String>> = spherical_subsets(&d)
            .unwrap()
            .into_iter()
            .map(|s| s.vertices)
            .filter(|v| !v.is_empty() && v.len() < n)
            .collect();
        if spherical.is_empty() {
            return None;
        }
        let j = spherical[(seed as usize) % spherical.len()].clone();
        let rest: Vec<String> = d.vertices().iter().filter(|v| !j.contains(v)).cloned().collect();
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (k, v) in rest.into_iter().enumerate() {
            if (seed >> (k + 8)) & 1 == 0 { a.push(v) } else { b.push(v) }
        }
        let mut g = d;
        for x in &a {
            for y in &b {
                g = g.with_edge(x, y, Label::Infinity).unwrap();
            }
        }
        Some((g, TwistSpec::new(j, a, b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn twists_preserve_the_group((d, spec) in twistable()) {
        prop_assert!(verify_twist(&d, &spec, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn sigma_is_a_diagram_automorphism((d, spec) in twistable()) {
        let sigma = w0_automorphism(&d, &spec.j).unwrap();
        let sub = d.induced(&spec.j).unwrap();
        prop_assert!(sigma.preserves_labels(&sub, &sub));
    }

    #[test]
    fn twisting_twice_returns_the_diagram((d, spec) in twistable()) {
        let once = apply_twist(&d, &spec).unwrap();
        let moved: Vec<String> = spec.b.iter().map(|b| format!("{b}'")).collect();
        let again = apply_twist(&once.twisted, &TwistSpec::new(spec.j.clone(), spec.a.clone(), moved)).unwrap();
        prop_assert!(diagram_isomorphic(&again.twisted, &d).is_some());
    }
}
