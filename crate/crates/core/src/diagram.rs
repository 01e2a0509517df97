//! Coxeter systems as labeled diagrams.
//!
//! A pair of vertices with no declared edge carries the label `∞`. Every
//! finite bond, including `2`, has to be written out explicitly. This is the
//! opposite of the usual Dynkin-style drawing where a missing edge means the
//! generators commute.
//!
//! Text format:
//!
//! ```text
//! # comments start with '#'
//! vertices: x1 x2 x3 x4
//! edge x1 x2 2
//! edge x2 x3 3
//! edge x3 x4 2
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard limit on the number of generators a diagram may carry.
pub const MAX_VERTICES: usize = 64;

/// The label `m(s,t)`: the order of `st`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn value(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 1)
    }

    pub fn is_even(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Label::Infinity);
        }
        s.parse::<u32>()
            .map(Label::Finite)
            .map_err(|_| Error::BadLabel(s.to_string()))
    }
}

/// A Coxeter system `(W, S)` given by its diagram.
///
/// Vertices are kept sorted by name, so vertex indices follow the
/// lexicographic order of the names. Values are immutable once built;
/// [`CoxeterDiagram::with_edge`] returns a new diagram.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    labels: Vec<Label>,
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() {
        return Err(Error::EmptyVertexName);
    }
    if name.chars().any(|c| c.is_whitespace() || c == '#' || c == ',') {
        return Err(Error::Syntax {
            line: 0,
            reason: format!("invalid vertex name `{name}`"),
        });
    }
    Ok(())
}

impl CoxeterDiagram {
    /// A diagram on the given vertices with every pair labeled `∞`.
    pub fn new<I, S>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for name in &names {
            check_name(name)?;
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len(), MAX_VERTICES));
        }
        let n = names.len();
        let mut labels = vec![Label::Infinity; n * n];
        for i in 0..n {
            labels[i * n + i] = Label::Finite(1);
        }
        Ok(CoxeterDiagram { names, labels })
    }

    /// Convenience constructor from finite edges.
    pub fn from_edges(vertices: &[&str], edges: &[(&str, &str, u32)]) -> Result<Self> {
        edges.iter().try_fold(
            CoxeterDiagram::new(vertices.iter().copied())?,
            |d, &(a, b, m)| d.with_edge(a, b, Label::Finite(m)),
        )
    }

    /// Returns a copy with `m(a,b) = m(b,a) = label`.
    pub fn with_edge(mut self, a: &str, b: &str, label: Label) -> Result<Self> {
        let i = self.require(a)?;
        let j = self.require(b)?;
        if i == j {
            return Err(Error::Loop(a.to_string()));
        }
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(Error::LabelTooSmall {
                    a: a.to_string(),
                    b: b.to_string(),
                    label: m as u64,
                });
            }
        }
        let n = self.names.len();
        self.labels[i * n + j] = label;
        self.labels[j * n + i] = label;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in sorted order; position in this slice is the vertex index.
    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Resolves names to sorted, deduplicated indices.
    pub fn indices_of<I, S>(&self, names: I) -> Result<Vec<usize>>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = names
            .into_iter()
            .map(|s| self.require(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn names_of(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Label by vertex index; `Finite(1)` on the diagonal.
    #[inline]
    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels[i * self.names.len() + j]
    }

    /// `m(s,t)` by name.
    pub fn label_of(&self, s: &str, t: &str) -> Result<Label> {
        Ok(self.label(self.require(s)?, self.require(t)?))
    }

    /// Finite off-diagonal labels as `(i, j, m)` with `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| self.label(i, j).value().map(|m| (i, j, m)))
        })
    }

    /// Pairs `i < j` whose label is finite and odd.
    pub fn odd_pairs(&self) -> Vec<(usize, usize)> {
        self.edges()
            .filter(|&(_, _, m)| m % 2 == 1)
            .map(|(i, j, _)| (i, j))
            .collect()
    }

    /// All finite labels even (`∞` allowed).
    pub fn is_even(&self) -> bool {
        self.edges().all(|(_, _, m)| m % 2 == 0)
    }

    pub fn odd_graph(&self) -> OddGraph {
        OddGraph {
            vertices: self.names.clone(),
            edges: self
                .odd_pairs()
                .into_iter()
                .map(|(i, j)| (self.names[i].clone(), self.names[j].clone()))
                .collect(),
        }
    }

    /// Connected components of the odd graph, each sorted, blocks ordered by
    /// their first vertex.
    pub fn odd_components(&self) -> Vec<Vec<String>> {
        self.odd_component_indices()
            .into_iter()
            .map(|c| self.names_of(&c))
            .collect()
    }

    pub(crate) fn odd_component_indices(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (u, flag) in seen.iter_mut().enumerate() {
                    if !*flag && self.label(v, u).is_odd() {
                        *flag = true;
                        block.push(u);
                        stack.push(u);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// The diagram of the parabolic subgroup on `subset`.
    pub fn induced<I, S>(&self, subset: I) -> Result<CoxeterDiagram>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let idx = self.indices_of(subset)?;
        Ok(self.induced_by_index(&idx))
    }

    pub(crate) fn induced_by_index(&self, idx: &[usize]) -> CoxeterDiagram {
        let k = idx.len();
        let mut labels = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                labels.push(self.label(i, j));
            }
        }
        // idx is sorted, so names stay sorted.
        CoxeterDiagram {
            names: self.names_of(idx),
            labels,
        }
    }

    /// Same diagram with each vertex renamed through `rename`.
    pub fn renamed<F>(&self, mut rename: F) -> Result<CoxeterDiagram>
    where
        F: FnMut(&str) -> String,
    {
        let new_names: Vec<String> = self.names.iter().map(|n| rename(n)).collect();
        let mut d = CoxeterDiagram::new(new_names.iter().cloned())?;
        for (i, j, m) in self.edges() {
            d = d.with_edge(&new_names[i], &new_names[j], Label::Finite(m))?;
        }
        Ok(d)
    }

    /// Canonical text form: vertices sorted, finite edges sorted by endpoint pair.
    pub fn serialize(&self) -> String {
        let mut out = String::from("vertices:");
        for name in &self.names {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        for (i, j, m) in self.edges() {
            out.push_str(&format!("edge {} {} {}\n", self.names[i], self.names[j], m));
        }
        out
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl FromStr for CoxeterDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_diagram(text)
    }
}

pub fn parse_diagram(text: &str) -> Result<CoxeterDiagram> {
    let mut diagram: Option<CoxeterDiagram> = None;
    let mut declared: BTreeMap<(usize, usize), Label> = BTreeMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |reason: String| Error::Syntax {
            line: line_no,
            reason,
        };
        match diagram.take() {
            None => {
                let rest = line
                    .strip_prefix("vertices:")
                    .ok_or_else(|| syntax("expected `vertices:` line first".into()))?;
                diagram = Some(CoxeterDiagram::new(rest.split_whitespace())?);
            }
            Some(d) => {
                let fields: Vec<&str> = line.split_whitespace().collect();
                let [kw, a, b, m] = fields[..] else {
                    return Err(syntax(format!("expected `edge a b M`, got `{line}`")));
                };
                if kw != "edge" {
                    return Err(syntax(format!("unknown directive `{kw}`")));
                }
                let label: Label = m.parse()?;
                let i = d.require(a)?;
                let j = d.require(b)?;
                let key = (i.min(j), i.max(j));
                if let Some(&prev) = declared.get(&key) {
                    if prev != label {
                        return Err(Error::ConflictingEdge {
                            a: a.to_string(),
                            b: b.to_string(),
                        });
                    }
                }
                declared.insert(key, label);
                diagram = Some(d.with_edge(a, b, label)?);
            }
        }
    }
    diagram.ok_or(Error::Syntax {
        line: 0,
        reason: "missing `vertices:` line".into(),
    })
}

pub fn serialize_diagram(d: &CoxeterDiagram) -> String {
    d.serialize()
}

/// Graph on `S` whose edges are the pairs with finite odd label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// A bijection between the vertex sets of two diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexBijection {
    mapping: BTreeMap<String, String>,
}

impl VertexBijection {
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (String, String)>,
    {
        VertexBijection {
            mapping: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, s: &str) -> Option<&str> {
        self.mapping.get(s).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.mapping.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().all(|(a, b)| a == b)
    }

    pub fn inverse(&self) -> VertexBijection {
        VertexBijection::from_pairs(self.mapping.iter().map(|(a, b)| (b.clone(), a.clone())))
    }

    /// Checks `m(s,t) = m'(ψ(s),ψ(t))` for every pair, and that the map is a bijection.
    pub fn preserves_labels(&self, from: &CoxeterDiagram, to: &CoxeterDiagram) -> bool {
        if from.len() != to.len() || self.len() != from.len() {
            return false;
        }
        let Some(image) = from
            .vertices()
            .iter()
            .map(|s| self.get(s).and_then(|t| to.index_of(t)))
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != image.len() {
            return false;
        }
        (0..from.len()).all(|i| (0..from.len()).all(|j| from.label(i, j) == to.label(image[i], image[j])))
    }
}

impl fmt::Display for VertexBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mapping.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Per-vertex invariant used for pruning: the sorted multiset of labels to the
/// other vertices.
fn label_profile(d: &CoxeterDiagram, v: usize) -> Vec<Label> {
    let mut p: Vec<Label> = (0..d.len()).filter(|&u| u != v).map(|u| d.label(v, u)).collect();
    p.sort_unstable();
    p
}

/// Finds a label-preserving bijection `d1 -> d2`, lexicographically first in
/// the backtracking order, or `None`.
pub fn diagram_isomorphic(d1: &CoxeterDiagram, d2: &CoxeterDiagram) -> Option<VertexBijection> {
    let n = d1.len();
    if n != d2.len() {
        return None;
    }
    let p1: Vec<Vec<Label>> = (0..n).map(|v| label_profile(d1, v)).collect();
    let p2: Vec<Vec<Label>> = (0..n).map(|v| label_profile(d2, v)).collect();
    let mut s1 = p1.clone();
    let mut s2 = p2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return None;
    }

    fn extend(
        d1: &CoxeterDiagram,
        d2: &CoxeterDiagram,
        p1: &[Vec<Label>],
        p2: &[Vec<Label>],
        assign: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let v = assign.len();
        if v == d1.len() {
            return true;
        }
        for c in 0..d2.len() {
            if used[c] || p1[v] != p2[c] {
                continue;
            }
            if assign
                .iter()
                .enumerate()
                .any(|(u, &img)| d1.label(v, u) != d2.label(c, img))
            {
                continue;
            }
            used[c] = true;
            assign.push(c);
            if extend(d1, d2, p1, p2, assign, used) {
                return true;
            }
            assign.pop();
            used[c] = false;
        }
        false
    }

    let mut assign = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if extend(d1, d2, &p1, &p2, &mut assign, &mut used) {
        Some(VertexBijection::from_pairs(
            assign
                .iter()
                .enumerate()
                .map(|(v, &c)| (d1.name(v).to_string(), d2.name(c).to_string())),
        ))
    } else {
        None
    }
}
