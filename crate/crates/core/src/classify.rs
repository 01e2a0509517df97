//! Finite parabolic subgroups by shape-matching against the classification of
//! irreducible finite Coxeter groups.
//!
//! Everything here stays in integer arithmetic: a component is finite exactly
//! when its labeled graph is one of A_n, B_n, D_n, E6-8, F4, H3, H4 or I2(m).

use std::fmt;

use crate::diagram::{CoxeterDiagram, Label};
use crate::error::{Error, Result};

/// Largest vertex set for which subsets are enumerated.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

/// Irreducible finite Coxeter type. Rank-2 aliases are normalized: label 3 is
/// `A(2)`, label 4 is `B(2)`, labels `>= 5` are `I2(m)`. `D3` reports as `A(3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl TypeLabel {
    pub fn rank(self) -> usize {
        match self {
            TypeLabel::A(n) | TypeLabel::B(n) | TypeLabel::D(n) => n,
            TypeLabel::E6 => 6,
            TypeLabel::E7 => 7,
            TypeLabel::E8 => 8,
            TypeLabel::F4 | TypeLabel::H4 => 4,
            TypeLabel::H3 => 3,
            TypeLabel::I2(_) => 2,
        }
    }

    /// Group order from the classical formulas.
    pub fn order(self) -> u128 {
        match self {
            TypeLabel::A(n) => factorial(n + 1),
            TypeLabel::B(n) => (1u128 << n) * factorial(n),
            TypeLabel::D(n) => (1u128 << (n - 1)) * factorial(n),
            TypeLabel::E6 => 51_840,
            TypeLabel::E7 => 2_903_040,
            TypeLabel::E8 => 696_729_600,
            TypeLabel::F4 => 1_152,
            TypeLabel::H3 => 120,
            TypeLabel::H4 => 14_400,
            TypeLabel::I2(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::A(n) => write!(f, "A{n}"),
            TypeLabel::B(n) => write!(f, "B{n}"),
            TypeLabel::D(n) => write!(f, "D{n}"),
            TypeLabel::E6 => f.write_str("E6"),
            TypeLabel::E7 => f.write_str("E7"),
            TypeLabel::E8 => f.write_str("E8"),
            TypeLabel::F4 => f.write_str("F4"),
            TypeLabel::H3 => f.write_str("H3"),
            TypeLabel::H4 => f.write_str("H4"),
            TypeLabel::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Order of a (parabolic sub)group, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupOrder {
    Finite(u128),
    Infinite,
}

impl GroupOrder {
    pub fn finite(self) -> Option<u128> {
        match self {
            GroupOrder::Finite(n) => Some(n),
            GroupOrder::Infinite => None,
        }
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// A subset `T` with finite `W_T`, with its irreducible decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalSubset {
    pub vertices: Vec<String>,
    pub components: Vec<(Vec<String>, TypeLabel)>,
    pub order: u128,
}

impl SphericalSubset {
    pub fn contains(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| x == v)
    }

    /// Human-readable type, e.g. `A2xA1`; `1` for the empty set.
    pub fn type_string(&self) -> String {
        if self.components.is_empty() {
            return "1".into();
        }
        self.components
            .iter()
            .map(|(_, t)| t.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Components of `T` under the relation "label >= 3 or infinite".
pub fn irreducible_components<I, S>(d: &CoxeterDiagram, subset: I) -> Result<Vec<Vec<String>>>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let idx = d.indices_of(subset)?;
    Ok(components_by_index(d, &idx)
        .into_iter()
        .map(|c| d.names_of(&c))
        .collect())
}

pub(crate) fn components_by_index(d: &CoxeterDiagram, idx: &[usize]) -> Vec<Vec<usize>> {
    let linked = |a: usize, b: usize| d.label(a, b) != Label::Finite(2);
    let mut seen = vec![false; idx.len()];
    let mut out = Vec::new();
    for start in 0..idx.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![idx[start]];
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            for q in 0..idx.len() {
                if !seen[q] && linked(idx[p], idx[q]) {
                    seen[q] = true;
                    comp.push(idx[q]);
                    stack.push(q);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Classifies one irreducible component by name.
pub fn classify_component<I, S>(d: &CoxeterDiagram, component: I) -> Result<Option<TypeLabel>>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let idx = d.indices_of(component)?;
    Ok(classify_by_index(d, &idx))
}

pub(crate) fn classify_by_index(d: &CoxeterDiagram, comp: &[usize]) -> Option<TypeLabel> {
    let n = comp.len();
    match n {
        0 => return None,
        1 => return Some(TypeLabel::A(1)),
        _ => {}
    }
    // Bonds: pairs with label >= 3. Infinity anywhere means infinite.
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    let mut bonds = 0;
    for p in 0..n {
        for q in p + 1..n {
            match d.label(comp[p], comp[q]) {
                Label::Infinity => return None,
                Label::Finite(2) => {}
                Label::Finite(m) => {
                    adj[p].push((q, m));
                    adj[q].push((p, m));
                    bonds += 1;
                }
            }
        }
    }
    if n == 2 {
        return match adj[0].first().map(|&(_, m)| m) {
            Some(3) => Some(TypeLabel::A(2)),
            Some(4) => Some(TypeLabel::B(2)),
            Some(m) => Some(TypeLabel::I2(m)),
            None => None,
        };
    }
    // A connected graph on n vertices with n-1 edges is a tree.
    if bonds != n - 1 || !connected(&adj) {
        return None;
    }
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);

    if max_degree <= 2 {
        let labels = path_labels(&adj);
        return classify_path(&labels);
    }

    // A single branch point of degree three, all bonds simple.
    if max_degree != 3 || degrees.iter().filter(|&&k| k == 3).count() != 1 {
        return None;
    }
    if adj.iter().flatten().any(|&(_, m)| m != 3) {
        return None;
    }
    let center = degrees.iter().position(|&k| k == 3).unwrap();
    let mut arms: Vec<usize> = adj[center]
        .iter()
        .map(|&(start, _)| arm_length(&adj, center, start))
        .collect();
    arms.sort_unstable();
    match arms[..] {
        [1, 1, _] => Some(TypeLabel::D(n)),
        [1, 2, 2] => Some(TypeLabel::E6),
        [1, 2, 3] => Some(TypeLabel::E7),
        [1, 2, 4] => Some(TypeLabel::E8),
        _ => None,
    }
}

fn connected(adj: &[Vec<(usize, u32)>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(u, _) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Labels along a path graph, read from one endpoint.
fn path_labels(adj: &[Vec<(usize, u32)>]) -> Vec<u32> {
    let start = adj.iter().position(|a| a.len() == 1).unwrap_or(0);
    let mut labels = Vec::with_capacity(adj.len() - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    while let Some(&(next, m)) = adj[cur].iter().find(|&&(u, _)| u != prev) {
        labels.push(m);
        prev = cur;
        cur = next;
    }
    labels
}

/// Number of vertices on the branch leaving `center` through `start`.
fn arm_length(adj: &[Vec<(usize, u32)>], center: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    while let Some(&(next, _)) = adj[cur].iter().find(|&&(u, _)| u != prev) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

fn classify_path(labels: &[u32]) -> Option<TypeLabel> {
    let n = labels.len() + 1;
    let special: Vec<(usize, u32)> = labels
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, m)| m != 3)
        .collect();
    let at_end = |pos: usize| pos == 0 || pos == labels.len() - 1;
    match special[..] {
        [] => Some(TypeLabel::A(n)),
        [(pos, 4)] if at_end(pos) => Some(TypeLabel::B(n)),
        [(1, 4)] if n == 4 => Some(TypeLabel::F4),
        [(pos, 5)] if at_end(pos) && n == 3 => Some(TypeLabel::H3),
        [(pos, 5)] if at_end(pos) && n == 4 => Some(TypeLabel::H4),
        _ => None,
    }
}

/// Decomposition of `idx` into typed components, or `None` if some component
/// is infinite.
pub(crate) fn decompose(d: &CoxeterDiagram, idx: &[usize]) -> Option<Vec<(Vec<usize>, TypeLabel)>> {
    components_by_index(d, idx)
        .into_iter()
        .map(|c| classify_by_index(d, &c).map(|t| (c, t)))
        .collect()
}

pub(crate) fn order_by_index(d: &CoxeterDiagram, idx: &[usize]) -> GroupOrder {
    match decompose(d, idx) {
        None => GroupOrder::Infinite,
        Some(parts) => parts
            .iter()
            .try_fold(1u128, |acc, (_, t)| acc.checked_mul(t.order()))
            .map_or(GroupOrder::Infinite, GroupOrder::Finite),
    }
}

pub fn is_spherical<I, S>(d: &CoxeterDiagram, subset: I) -> Result<bool>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let idx = d.indices_of(subset)?;
    Ok(decompose(d, &idx).is_some())
}

pub fn parabolic_order<I, S>(d: &CoxeterDiagram, subset: I) -> Result<GroupOrder>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let idx = d.indices_of(subset)?;
    Ok(order_by_index(d, &idx))
}

/// Order of the whole group `W`.
pub fn group_order(d: &CoxeterDiagram) -> GroupOrder {
    let all: Vec<usize> = (0..d.len()).collect();
    order_by_index(d, &all)
}

fn spherical_record(d: &CoxeterDiagram, idx: &[usize]) -> Option<SphericalSubset> {
    let parts = decompose(d, idx)?;
    let order = parts.iter().map(|(_, t)| t.order()).product();
    Some(SphericalSubset {
        vertices: d.names_of(idx),
        components: parts
            .into_iter()
            .map(|(c, t)| (d.names_of(&c), t))
            .collect(),
        order,
    })
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).collect()
}

/// Bitmasks of all spherical subsets, sorted by size then by vertex indices.
pub(crate) fn spherical_masks(d: &CoxeterDiagram) -> Result<Vec<u32>> {
    let n = d.len();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooManyVertices(n, MAX_ENUMERATION_VERTICES));
    }
    let mut found = Vec::new();
    // Depth-first over subsets in increasing vertex order. Sphericity is
    // inherited by subsets, so a non-spherical set ends its branch.
    let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
    while let Some((mask, next)) = stack.pop() {
        found.push(mask);
        for v in next..n {
            if bits(mask).iter().any(|&u| d.label(u, v) == Label::Infinity) {
                continue;
            }
            let grown = mask | (1 << v);
            if decompose(d, &bits(grown)).is_some() {
                stack.push((grown, v + 1));
            }
        }
    }
    found.sort_by_key(|&m| (m.count_ones(), bits(m)));
    Ok(found)
}

pub(crate) fn maximal_masks(d: &CoxeterDiagram) -> Result<Vec<u32>> {
    let all = spherical_masks(d)?;
    Ok(all
        .iter()
        .copied()
        .filter(|&m| !all.iter().any(|&o| o != m && o & m == m))
        .collect())
}

pub fn spherical_subsets(d: &CoxeterDiagram) -> Result<Vec<SphericalSubset>> {
    Ok(spherical_masks(d)?
        .into_iter()
        .filter_map(|m| spherical_record(d, &bits(m)))
        .collect())
}

pub fn maximal_spherical_subsets(d: &CoxeterDiagram) -> Result<Vec<SphericalSubset>> {
    Ok(maximal_masks(d)?
        .into_iter()
        .filter_map(|m| spherical_record(d, &bits(m)))
        .collect())
}

pub(crate) fn mask_to_indices(mask: u32) -> Vec<usize> {
    bits(mask)
}
