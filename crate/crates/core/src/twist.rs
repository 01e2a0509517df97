//! Elementary diagram twist.
//!
//! Let `S = A ⊔ J ⊔ B` where `J` is spherical and every pair `(a, b)` with
//! `a ∈ A`, `b ∈ B` has label `∞`. Replacing each `b` by `w0 b w0`, with `w0`
//! the longest element of `W_J`, gives another Coxeter generating set of the
//! same group. Its diagram keeps the labels inside `A ∪ J` and inside `B`,
//! and bonds `b'` to `j` with the old label of `(b, σ(j))`, where `σ` is
//! conjugation by `w0` restricted to `J`.

use std::collections::BTreeSet;

use crate::classify;
use crate::diagram::{diagram_isomorphic, CoxeterDiagram, Label, VertexBijection};
use crate::error::{Error, Result};
use crate::words::{verify_isomorphism, GeneratorMap, Word, WordEngine, DEFAULT_BUDGET};

/// Suffix marking a twisted generator.
pub const TICK: &str = "'";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    pub j: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl TwistSpec {
    pub fn new<S: Into<String>>(
        j: impl IntoIterator<Item = S>,
        a: impl IntoIterator<Item = S>,
        b: impl IntoIterator<Item = S>,
    ) -> TwistSpec {
        let sorted = |it: Vec<String>| {
            let mut v = it;
            v.sort();
            v
        };
        TwistSpec {
            j: sorted(j.into_iter().map(Into::into).collect()),
            a: sorted(a.into_iter().map(Into::into).collect()),
            b: sorted(b.into_iter().map(Into::into).collect()),
        }
    }

    /// `A` is everything outside `J ∪ B`.
    pub fn with_complement<S: AsRef<str>>(d: &CoxeterDiagram, j: &[S], b: &[S]) -> Result<TwistSpec> {
        let j = d.indices_of(j)?;
        let b = d.indices_of(b)?;
        let a: Vec<usize> = (0..d.len()).filter(|v| !j.contains(v) && !b.contains(v)).collect();
        Ok(TwistSpec {
            j: d.names_of(&j),
            a: d.names_of(&a),
            b: d.names_of(&b),
        })
    }

    pub fn validate(&self, d: &CoxeterDiagram) -> Result<()> {
        let mut seen = BTreeSet::new();
        for v in self.j.iter().chain(&self.a).chain(&self.b) {
            d.require(v)?;
            if !seen.insert(v.as_str()) {
                return Err(Error::NotApplicable(format!("`{v}` appears in two parts")));
            }
        }
        if seen.len() != d.len() {
            return Err(Error::NotApplicable("A, J, B do not cover the vertex set".into()));
        }
        if !classify::is_spherical(d, &self.j)? {
            return Err(Error::NotSpherical(self.j.join(",")));
        }
        for a in &self.a {
            for b in &self.b {
                if d.label_of(a, b)?.is_finite() {
                    return Err(Error::NotApplicable(format!("{a}-{b} has a finite label")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct TwistResult {
    pub twisted: CoxeterDiagram,
    /// Original generators as words in the twisted ones.
    pub substitution: GeneratorMap,
    /// Twisted generators as words in the original ones.
    pub inverse: GeneratorMap,
    pub longest: Word,
    pub sigma: VertexBijection,
}

fn require_spherical(d: &CoxeterDiagram, j: &[usize]) -> Result<()> {
    if classify::decompose(d, j).is_none() {
        return Err(Error::NotSpherical(d.names_of(j).join(",")));
    }
    Ok(())
}

/// Longest element of `W_J` by ascent: keep right-multiplying by a generator
/// of `J` that increases length.
pub fn longest_element_with<S: AsRef<str>>(engine: &WordEngine, j: &[S]) -> Result<Word> {
    let d = engine.diagram();
    let j = d.indices_of(j)?;
    require_spherical(d, &j)?;
    let mut w = Vec::new();
    loop {
        let class = engine.class_of_reduced(&w)?;
        let Some(&s) = j.iter().find(|&&s| !class.has_descent(s as u8)) else {
            return Ok(engine.word(class.canonical()));
        };
        w = engine.append(&w, s as u8)?;
    }
}

pub fn longest_element<S: AsRef<str>>(d: &CoxeterDiagram, j: &[S]) -> Result<Word> {
    longest_element_with(&WordEngine::new(d.clone()), j)
}

/// `σ(j) = w0 j w0` on `J`.
pub fn w0_automorphism_with<S: AsRef<str>>(engine: &WordEngine, j: &[S]) -> Result<VertexBijection> {
    let w0 = longest_element_with(engine, j)?;
    let mut pairs = Vec::new();
    for name in engine.diagram().names_of(&engine.diagram().indices_of(j)?) {
        let conj = w0.concat(&Word::new([name.clone()])).concat(&w0);
        let c = engine.canonical(&conj)?;
        match c.word().letters() {
            [single] => pairs.push((name, single.clone())),
            _ => {
                return Err(Error::Internal(format!(
                    "w0 {name} w0 = {c} is not a generator"
                )))
            }
        }
    }
    Ok(VertexBijection::from_pairs(pairs))
}

pub fn w0_automorphism<S: AsRef<str>>(d: &CoxeterDiagram, j: &[S]) -> Result<VertexBijection> {
    w0_automorphism_with(&WordEngine::new(d.clone()), j)
}

pub fn apply_twist(d: &CoxeterDiagram, spec: &TwistSpec) -> Result<TwistResult> {
    spec.validate(d)?;
    let engine = WordEngine::new(d.clone());
    let w0 = longest_element_with(&engine, &spec.j)?;
    let sigma = w0_automorphism_with(&engine, &spec.j)?;

    let ticked = |b: &str| format!("{b}{TICK}");
    let in_b = |v: &str| spec.b.iter().any(|b| b == v);
    let rename = |v: &str| if in_b(v) { ticked(v) } else { v.to_string() };

    let mut twisted = CoxeterDiagram::new(d.vertices().iter().map(|v| rename(v)))?;
    for (i, k, m) in d.edges() {
        let (u, v) = (d.name(i), d.name(k));
        // B–J bonds are rewired through σ below.
        let crosses = (in_b(u) && spec.j.iter().any(|j| j == v)) || (in_b(v) && spec.j.iter().any(|j| j == u));
        if !crosses {
            twisted = twisted.with_edge(&rename(u), &rename(v), Label::Finite(m))?;
        }
    }
    for b in &spec.b {
        for j in &spec.j {
            let sj = sigma.get(j).expect("σ is total on J");
            let label = d.label_of(b, sj)?;
            twisted = twisted.with_edge(&ticked(b), j, label)?;
        }
    }

    let conjugated = |letter: String| w0.concat(&Word::new([letter])).concat(&w0);
    let substitution = GeneratorMap::new(
        d.clone(),
        twisted.clone(),
        d.vertices().iter().map(|v| {
            let img = if in_b(v) { conjugated(ticked(v)) } else { Word::new([v.clone()]) };
            (v.clone(), img)
        }),
    )?;
    let inverse = GeneratorMap::new(
        twisted.clone(),
        d.clone(),
        d.vertices().iter().map(|v| {
            if in_b(v) {
                (ticked(v), conjugated(v.clone()))
            } else {
                (v.clone(), Word::new([v.clone()]))
            }
        }),
    )?;

    Ok(TwistResult {
        twisted,
        substitution,
        inverse,
        longest: w0,
        sigma,
    })
}

/// Applies the twist and certifies with the word problem that the twisted
/// generators give the same group.
pub fn verify_twist(d: &CoxeterDiagram, spec: &TwistSpec, budget: usize) -> Result<bool> {
    let t = apply_twist(d, spec)?;
    verify_isomorphism(&t.substitution, &t.inverse, budget)
}

/// Outcome of twisting the 2-3-2 path into the star.
#[derive(Clone, Debug)]
pub struct TwistDemo {
    pub source: CoxeterDiagram,
    pub expected: CoxeterDiagram,
    pub result: TwistResult,
    /// How the twisted diagram matches the expected star.
    pub matches_expected: Option<VertexBijection>,
    pub isomorphism_verified: bool,
    /// Whether the two diagrams themselves are isomorphic (they are not).
    pub diagrams_isomorphic: bool,
}

impl TwistDemo {
    pub fn passed(&self) -> bool {
        self.matches_expected.is_some() && self.isomorphism_verified && !self.diagrams_isomorphic
    }
}

pub fn twist_demo(budget: usize) -> Result<TwistDemo> {
    use crate::catalog::{twist_path, twist_star};
    let source = twist_path();
    let expected = twist_star();
    let spec = TwistSpec::new(["x2", "x3"], ["x1"], ["x4"]);
    let result = apply_twist(&source, &spec)?;
    let isomorphism_verified = verify_isomorphism(&result.substitution, &result.inverse, budget)?;
    Ok(TwistDemo {
        matches_expected: diagram_isomorphic(&result.twisted, &expected),
        diagrams_isomorphic: diagram_isomorphic(&source, &expected).is_some(),
        source,
        expected,
        result,
        isomorphism_verified,
    })
}

pub fn default_twist_demo() -> Result<TwistDemo> {
    twist_demo(DEFAULT_BUDGET)
}
