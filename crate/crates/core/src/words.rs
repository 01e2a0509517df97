//! Word problem for Coxeter groups via braid moves (Tits / Matsumoto).
//!
//! Two reduced words represent the same element iff they are connected by
//! braid moves, and a word is reduced iff no word in its braid class has two
//! equal adjacent letters. Canonical forms are the lexicographically least
//! member of the braid class of a reduced word, with letters ordered by
//! vertex name.
//!
//! Closures are exponential in the worst case. Every closure is bounded by a
//! word budget; running past it is an error, never a silent wrong answer.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use crate::diagram::CoxeterDiagram;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 100_000;
pub const DEFAULT_ORDER_CAP: usize = 64;

/// A word over the generators, by vertex name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<String>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn new<I, S>(letters: I) -> Word
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Word(letters.into_iter().map(Into::into).collect())
    }

    /// Whitespace-separated letters; the empty string is the identity.
    pub fn parse(text: &str) -> Word {
        Word::new(text.split_whitespace())
    }

    pub fn letters(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// The inverse element: generators are involutions.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.iter().cloned().cycle().take(self.0.len() * n).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

impl FromStr for Word {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(Word::parse(s))
    }
}

/// A reduced word that is lexicographically least in its braid class.
/// Equal elements have equal canonical forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalElement {
    word: Word,
}

impl CanonicalElement {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

impl fmt::Display for CanonicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str("1")
        } else {
            self.word.fmt(f)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(usize),
    /// No power up to the cap is trivial. Not a certificate of infinite order.
    ExceedsCap(usize),
}

pub(crate) type Letters = Vec<u8>;

/// The braid class of a reduced word.
#[derive(Debug)]
pub(crate) struct BraidClass {
    /// Sorted; `members[0]` is the canonical form.
    members: Vec<Letters>,
    /// For each generator, a member ending in it, if any.
    ending: Vec<Option<usize>>,
}

impl BraidClass {
    fn new(mut members: Vec<Letters>, rank: usize) -> BraidClass {
        members.sort_unstable();
        let mut ending = vec![None; rank];
        for (k, m) in members.iter().enumerate() {
            if let Some(&last) = m.last() {
                ending[last as usize].get_or_insert(k);
            }
        }
        BraidClass { members, ending }
    }

    pub(crate) fn canonical(&self) -> &Letters {
        &self.members[0]
    }

    fn ending_with(&self, s: u8) -> Option<&Letters> {
        self.ending[s as usize].map(|k| &self.members[k])
    }

    /// Whether some member ends in `s`, i.e. `l(ws) < l(w)`.
    pub(crate) fn has_descent(&self, s: u8) -> bool {
        self.ending[s as usize].is_some()
    }

    fn has_odd_palindrome(&self) -> bool {
        self.members
            .iter()
            .any(|m| m.len() % 2 == 1 && m.iter().eq(m.iter().rev()))
    }
}

/// Word-problem solver for one diagram.
///
/// Braid classes of reduced words are memoized behind a lock; the engine is
/// `Sync` and results do not depend on call interleaving.
pub struct WordEngine {
    diagram: CoxeterDiagram,
    /// Finite labels as `usize`, `0` for infinity; row-major.
    bonds: Vec<usize>,
    budget: usize,
    cache: RwLock<HashMap<Letters, Arc<BraidClass>>>,
}

impl fmt::Debug for WordEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WordEngine")
            .field("diagram", &self.diagram)
            .field("budget", &self.budget)
            .finish_non_exhaustive()
    }
}

impl WordEngine {
    pub fn new(diagram: CoxeterDiagram) -> WordEngine {
        WordEngine::with_budget(diagram, DEFAULT_BUDGET)
    }

    pub fn with_budget(diagram: CoxeterDiagram, budget: usize) -> WordEngine {
        let n = diagram.len();
        let mut bonds = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                bonds[i * n + j] = diagram.label(i, j).value().map_or(0, |m| m as usize);
            }
        }
        WordEngine {
            diagram,
            bonds,
            budget,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub(crate) fn rank(&self) -> usize {
        self.diagram.len()
    }

    pub(crate) fn letters(&self, w: &Word) -> Result<Letters> {
        w.letters()
            .iter()
            .map(|s| self.diagram.require(s).map(|i| i as u8))
            .collect()
    }

    pub(crate) fn word(&self, letters: &[u8]) -> Word {
        Word::new(letters.iter().map(|&i| self.diagram.name(i as usize).to_string()))
    }

    fn bond(&self, s: u8, t: u8) -> usize {
        self.bonds[s as usize * self.diagram.len() + t as usize]
    }

    /// Every word reachable by one braid move.
    fn braid_neighbours(&self, w: &[u8], mut visit: impl FnMut(Letters)) {
        for i in 0..w.len().saturating_sub(1) {
            let (s, t) = (w[i], w[i + 1]);
            if s == t {
                continue;
            }
            let m = self.bond(s, t);
            if m == 0 || i + m > w.len() {
                continue;
            }
            let alternates = (0..m).all(|k| w[i + k] == if k % 2 == 0 { s } else { t });
            if alternates {
                let mut next = w.to_vec();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { t } else { s };
                }
                visit(next);
            }
        }
    }

    fn closure_letters(&self, start: &[u8]) -> Result<Vec<Letters>> {
        let mut seen: HashSet<Letters> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.to_vec());
        queue.push_back(start.to_vec());
        while let Some(w) = queue.pop_front() {
            let mut overflow = false;
            self.braid_neighbours(&w, |next| {
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                    if seen.len() > self.budget {
                        overflow = true;
                    }
                }
            });
            if overflow {
                return Err(Error::BudgetExceeded(self.budget));
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Braid class of a word already known to be reduced.
    pub(crate) fn class_of_reduced(&self, w: &[u8]) -> Result<Arc<BraidClass>> {
        if let Some(c) = self.cache.read().expect("cache lock").get(w) {
            return Ok(Arc::clone(c));
        }
        let class = Arc::new(BraidClass::new(self.closure_letters(w)?, self.rank()));
        let mut cache = self.cache.write().expect("cache lock");
        for m in &class.members {
            cache.entry(m.clone()).or_insert_with(|| Arc::clone(&class));
        }
        Ok(class)
    }

    /// Right multiplication of a reduced word by a generator; the result is
    /// reduced. Uses the exchange condition: `l(ws) < l(w)` iff some reduced
    /// expression of `w` ends in `s`.
    pub(crate) fn append(&self, w: &[u8], s: u8) -> Result<Letters> {
        let class = self.class_of_reduced(w)?;
        Ok(match class.ending_with(s) {
            Some(m) => m[..m.len() - 1].to_vec(),
            None => {
                let mut out = w.to_vec();
                out.push(s);
                out
            }
        })
    }

    pub(crate) fn reduce_letters(&self, w: &[u8]) -> Result<Letters> {
        w.iter().try_fold(Vec::new(), |acc, &s| self.append(&acc, s))
    }

    pub(crate) fn canonical_letters(&self, w: &[u8]) -> Result<Letters> {
        let reduced = self.reduce_letters(w)?;
        Ok(self.class_of_reduced(&reduced)?.canonical().clone())
    }

    /// Canonical form of `canon · s`.
    pub(crate) fn right_multiply(&self, canon: &[u8], s: u8) -> Result<Letters> {
        let w = self.append(canon, s)?;
        Ok(self.class_of_reduced(&w)?.canonical().clone())
    }

    pub(crate) fn multiply_letters(&self, u: &[u8], v: &[u8]) -> Result<Letters> {
        let prod = v.iter().try_fold(u.to_vec(), |acc, &s| self.append(&acc, s))?;
        Ok(self.class_of_reduced(&prod)?.canonical().clone())
    }

    fn canonical_element(&self, letters: &[u8]) -> CanonicalElement {
        CanonicalElement {
            word: self.word(letters),
        }
    }

    /// All words reachable from `w` by braid moves, sorted.
    pub fn braid_closure(&self, w: &Word) -> Result<Vec<Word>> {
        let mut all = self.closure_letters(&self.letters(w)?)?;
        all.sort_unstable();
        Ok(all.iter().map(|l| self.word(l)).collect())
    }

    /// A reduced word for the same element.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        Ok(self.word(&self.reduce_letters(&self.letters(w)?)?))
    }

    /// Tits' reduction applied to the whole word: cancel adjacent equal
    /// letters, and when there are none, move through the braid class to a
    /// word that has some.
    pub fn tits_reduce(&self, w: &Word) -> Result<Word> {
        let mut cur = self.letters(w)?;
        'outer: loop {
            if let Some(i) = cur.windows(2).position(|p| p[0] == p[1]) {
                cur.drain(i..i + 2);
                continue;
            }
            for member in self.closure_letters(&cur)? {
                if let Some(i) = member.windows(2).position(|p| p[0] == p[1]) {
                    cur = member;
                    cur.drain(i..i + 2);
                    continue 'outer;
                }
            }
            return Ok(self.word(&cur));
        }
    }

    pub fn canonical(&self, w: &Word) -> Result<CanonicalElement> {
        Ok(self.canonical_element(&self.canonical_letters(&self.letters(w)?)?))
    }

    pub fn multiply(&self, u: &Word, v: &Word) -> Result<CanonicalElement> {
        let u = self.reduce_letters(&self.letters(u)?)?;
        let v = self.letters(v)?;
        Ok(self.canonical_element(&self.multiply_letters(&u, &v)?))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        Ok(self.canonical(u)? == self.canonical(v)?)
    }

    /// Least `n >= 1` with `w^n = 1`, searched up to `cap`.
    pub fn element_order(&self, w: &Word, cap: usize) -> Result<ElementOrder> {
        let g = self.canonical_letters(&self.letters(w)?)?;
        if g.is_empty() {
            return Ok(ElementOrder::Finite(1));
        }
        let mut power = g.clone();
        for n in 2..=cap {
            power = self.multiply_letters(&power, &g)?;
            if power.is_empty() {
                return Ok(ElementOrder::Finite(n));
            }
        }
        Ok(ElementOrder::ExceedsCap(cap))
    }

    /// A word is a reflection iff its reduced braid class contains an odd
    /// palindrome `u s u⁻¹`.
    pub fn is_reflection(&self, w: &Word) -> Result<bool> {
        let reduced = self.reduce_letters(&self.letters(w)?)?;
        Ok(self.class_of_reduced(&reduced)?.has_odd_palindrome())
    }

    /// Length of `w` as an element.
    pub fn length(&self, w: &Word) -> Result<usize> {
        Ok(self.reduce_letters(&self.letters(w)?)?.len())
    }

    /// Number of braid classes currently memoized.
    pub fn cached_words(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }
}

/// Assignment of a target word to every source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    source: CoxeterDiagram,
    target: CoxeterDiagram,
    images: BTreeMap<String, Word>,
}

impl GeneratorMap {
    pub fn new<I>(source: CoxeterDiagram, target: CoxeterDiagram, images: I) -> Result<GeneratorMap>
    where
        I: IntoIterator<Item = (String, Word)>,
    {
        let images: BTreeMap<String, Word> = images.into_iter().collect();
        for s in images.keys() {
            source.require(s)?;
        }
        if let Some(missing) = source.vertices().iter().find(|s| !images.contains_key(*s)) {
            return Err(Error::Precondition(format!("generator `{missing}` has no image")));
        }
        for w in images.values() {
            for letter in w.letters() {
                target.require(letter)?;
            }
        }
        Ok(GeneratorMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(d: &CoxeterDiagram) -> GeneratorMap {
        GeneratorMap {
            source: d.clone(),
            target: d.clone(),
            images: d
                .vertices()
                .iter()
                .map(|s| (s.clone(), Word::new([s.clone()])))
                .collect(),
        }
    }

    /// Parses lines of the form `s -> t u t`; `#` starts a comment.
    pub fn parse(source: CoxeterDiagram, target: CoxeterDiagram, text: &str) -> Result<GeneratorMap> {
        let mut images = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| Error::Syntax {
                line: lineno + 1,
                reason: format!("expected `s -> word`, got `{line}`"),
            })?;
            images.push((lhs.trim().to_string(), Word::parse(rhs)));
        }
        GeneratorMap::new(source, target, images)
    }

    pub fn source(&self) -> &CoxeterDiagram {
        &self.source
    }

    pub fn target(&self) -> &CoxeterDiagram {
        &self.target
    }

    pub fn image(&self, s: &str) -> Option<&Word> {
        self.images.get(s)
    }

    pub fn images(&self) -> impl Iterator<Item = (&str, &Word)> {
        self.images.iter().map(|(s, w)| (s.as_str(), w))
    }

    /// Substitutes every letter of a source word.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::new();
        for s in w.letters() {
            let img = self
                .images
                .get(s)
                .ok_or_else(|| Error::UnknownVertex(s.clone()))?;
            out.extend(img.letters().iter().cloned());
        }
        Ok(Word::new(out))
    }

    pub fn serialize(&self) -> String {
        self.images
            .iter()
            .map(|(s, w)| format!("{s} -> {w}\n"))
            .collect()
    }
}

/// Checks every defining relation of the source against the target engine.
pub fn check_homomorphism_with(map: &GeneratorMap, target: &WordEngine) -> Result<bool> {
    if target.diagram() != map.target() {
        return Err(Error::MismatchedMaps("engine is not built on the map's target".into()));
    }
    let src = map.source();
    let images: Vec<Letters> = src
        .vertices()
        .iter()
        .map(|s| target.reduce_letters(&target.letters(&map.images[s])?))
        .collect::<Result<_>>()?;
    for (i, img) in images.iter().enumerate() {
        if !target.multiply_letters(img, img)?.is_empty() {
            return Ok(false);
        }
        for (j, other) in images.iter().enumerate().skip(i + 1) {
            let Some(m) = src.label(i, j).value() else {
                continue;
            };
            let prod = target.multiply_letters(img, other)?;
            let mut power = Vec::new();
            for _ in 0..m {
                power = target.multiply_letters(&power, &prod)?;
            }
            if !power.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn check_homomorphism(map: &GeneratorMap, budget: usize) -> Result<bool> {
    check_homomorphism_with(map, &WordEngine::with_budget(map.target().clone(), budget))
}

/// Certifies a group isomorphism: both maps are homomorphisms and both
/// composites fix every generator.
pub fn verify_isomorphism(fwd: &GeneratorMap, back: &GeneratorMap, budget: usize) -> Result<bool> {
    if fwd.target() != back.source() || back.target() != fwd.source() {
        return Err(Error::MismatchedMaps(
            "backward map must run from the forward target to the forward source".into(),
        ));
    }
    let src = WordEngine::with_budget(fwd.source().clone(), budget);
    let dst = WordEngine::with_budget(fwd.target().clone(), budget);
    if !check_homomorphism_with(fwd, &dst)? || !check_homomorphism_with(back, &src)? {
        return Ok(false);
    }
    let round_trip = |there: &GeneratorMap, back_again: &GeneratorMap, home: &WordEngine| -> Result<bool> {
        for s in there.source().vertices() {
            let w = back_again.apply(&there.images[s])?;
            if home.canonical(&w)?.word() != &Word::new([s.clone()]) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(round_trip(fwd, back, &src)? && round_trip(back, fwd, &dst)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(m: u32) -> WordEngine {
        WordEngine::new(CoxeterDiagram::from_edges(&["a", "b"], &[("a", "b", m)]).unwrap())
    }

    fn w(s: &str) -> Word {
        Word::parse(s)
    }

    fn strings(ws: Vec<Word>) -> Vec<String> {
        ws.into_iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn closures() {
        let e = dihedral(3);
        assert_eq!(strings(e.braid_closure(&w("a b a")).unwrap()), ["a b a", "b a b"]);
        assert_eq!(strings(e.braid_closure(&w("a")).unwrap()), ["a"]);
        let a3 = WordEngine::new(
            CoxeterDiagram::from_edges(
                &["s1", "s2", "s3"],
                &[("s1", "s2", 3), ("s2", "s3", 3), ("s1", "s3", 2)],
            )
            .unwrap(),
        );
        assert_eq!(strings(a3.braid_closure(&w("s3 s1")).unwrap()), ["s1 s3", "s3 s1"]);
    }

    #[test]
    fn budget_is_enforced() {
        let d = CoxeterDiagram::from_edges(
            &["a", "b", "c", "d"],
            &[("a", "b", 2), ("a", "c", 2), ("a", "d", 2), ("b", "c", 2), ("b", "d", 2), ("c", "d", 2)],
        )
        .unwrap();
        let e = WordEngine::with_budget(d, 5);
        assert_eq!(e.braid_closure(&w("a b c d")), Err(Error::BudgetExceeded(5)));
    }

    #[test]
    fn reduction() {
        let e = dihedral(3);
        assert_eq!(e.reduce(&w("a b a b")).unwrap().to_string(), "b a");
        assert_eq!(e.tits_reduce(&w("a b a b")).unwrap().to_string(), "b a");
        assert!(e.reduce(&w("a a")).unwrap().is_empty());
        let free = WordEngine::new(CoxeterDiagram::new(["a", "b"]).unwrap());
        assert_eq!(free.reduce(&w("a b")).unwrap().to_string(), "a b");
        assert!(matches!(e.reduce(&w("a z")), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn canonical_forms() {
        let e = dihedral(3);
        assert_eq!(e.canonical(&w("b a b")).unwrap().to_string(), "a b a");
        assert!(e.canonical(&w("")).unwrap().is_identity());
        assert_eq!(e.canonical(&w("a b a b")).unwrap().to_string(), "b a");
    }

    #[test]
    fn products() {
        let e = dihedral(3);
        assert!(e.multiply(&w("a"), &w("a")).unwrap().is_identity());
        assert_eq!(e.multiply(&w("a b"), &w("a b")).unwrap().to_string(), "b a");
        assert_eq!(e.multiply(&w("b a b"), &w("")).unwrap(), e.canonical(&w("b a b")).unwrap());
    }

    #[test]
    fn orders() {
        let e = dihedral(3);
        assert_eq!(e.element_order(&w("a b"), 64).unwrap(), ElementOrder::Finite(3));
        assert_eq!(e.element_order(&w("a"), 64).unwrap(), ElementOrder::Finite(2));
        assert_eq!(e.element_order(&w(""), 64).unwrap(), ElementOrder::Finite(1));
        let fig2 = WordEngine::new(
            CoxeterDiagram::from_edges(
                &["x1", "x2", "x3", "x4"],
                &[("x1", "x2", 2), ("x2", "x3", 3), ("x3", "x4", 2)],
            )
            .unwrap(),
        );
        assert_eq!(
            fig2.element_order(&w("x1 x3"), 100).unwrap(),
            ElementOrder::ExceedsCap(100)
        );
        for m in 2..=8 {
            assert_eq!(dihedral(m).element_order(&w("a b"), 64).unwrap(), ElementOrder::Finite(m as usize));
        }
    }

    #[test]
    fn reflections() {
        let e = dihedral(3);
        assert!(e.is_reflection(&w("a b a")).unwrap());
        assert!(!e.is_reflection(&w("a b")).unwrap());
        assert!(!e.is_reflection(&w("")).unwrap());
        // I2(5): the five odd-length elements are the reflections.
        let e = dihedral(5);
        let mut elements = HashSet::new();
        for len in 0..=5 {
            for start in ["a", "b"] {
                let other = if start == "a" { "b" } else { "a" };
                let word = Word::new((0..len).map(|k| if k % 2 == 0 { start } else { other }));
                elements.insert(e.canonical(&word).unwrap());
            }
        }
        assert_eq!(elements.len(), 10);
        let count = elements
            .iter()
            .filter(|c| e.is_reflection(c.word()).unwrap())
            .count();
        assert_eq!(count, 5);
    }

    #[test]
    fn homomorphisms() {
        let d = CoxeterDiagram::from_edges(&["a", "b"], &[("a", "b", 3)]).unwrap();
        let id = GeneratorMap::identity(&d);
        assert!(check_homomorphism(&id, DEFAULT_BUDGET).unwrap());
        assert!(verify_isomorphism(&id, &id, DEFAULT_BUDGET).unwrap());

        let collapse = GeneratorMap::new(
            d.clone(),
            d.clone(),
            [("a".into(), w("a")), ("b".into(), w("a"))],
        )
        .unwrap();
        assert!(check_homomorphism(&collapse, DEFAULT_BUDGET).unwrap());
        assert!(!verify_isomorphism(&collapse, &id, DEFAULT_BUDGET).unwrap());

        // a -> a, b -> a b: (a · ab) = b has order 2, not 3.
        let bad = GeneratorMap::new(
            d.clone(),
            d.clone(),
            [("a".into(), w("a")), ("b".into(), w("a b"))],
        )
        .unwrap();
        assert!(!check_homomorphism(&bad, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn generator_map_validation() {
        let d = CoxeterDiagram::from_edges(&["a", "b"], &[("a", "b", 3)]).unwrap();
        assert!(matches!(
            GeneratorMap::new(d.clone(), d.clone(), [("a".into(), w("a"))]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            GeneratorMap::new(d.clone(), d.clone(), [("a".into(), w("a")), ("b".into(), w("q"))]),
            Err(Error::UnknownVertex(_))
        ));
        let parsed = GeneratorMap::parse(d.clone(), d.clone(), "a -> b a b  # conj\nb -> b\n").unwrap();
        assert_eq!(parsed.image("a").unwrap().to_string(), "b a b");
        assert_eq!(parsed.serialize(), "a -> b a b\nb -> b\n");
    }
}
