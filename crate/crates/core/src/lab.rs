//! Brute-force experiments on small finite Coxeter groups.
//!
//! A [`FiniteGroupTable`] enumerates `W` from its canonical forms and stores
//! the Cayley graph for right multiplication by generators. On top of that,
//! this module searches all alternative Coxeter generating sets of `W`
//! (certified by comparing `|W|` with the classification order of the
//! induced diagram), groups them by reflection set, and checks the rigidity
//! statements directly.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::classify::{self, maximal_masks, mask_to_indices, GroupOrder};
use crate::diagram::{diagram_isomorphic, CoxeterDiagram, Label, VertexBijection};
use crate::error::{Error, Result};
use crate::rigidity::rigidity_report;
use crate::words::{CanonicalElement, Letters, Word, WordEngine, DEFAULT_BUDGET};

pub const DEFAULT_ELEMENT_CAP: usize = 5000;
/// Largest group on which generating sets are searched.
pub const MAX_SEARCH_ORDER: usize = 200;
/// Product tables are materialized up to this order.
const DENSE_PRODUCT_LIMIT: usize = 2048;

pub struct FiniteGroupTable {
    engine: WordEngine,
    elements: Vec<Letters>,
    index: HashMap<Letters, usize>,
    /// `right[x * rank + s]` is the index of `x · s`.
    right: Vec<usize>,
    product: Option<Vec<u32>>,
    inverse: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroupTable")
            .field("diagram", self.engine.diagram())
            .field("order", &self.elements.len())
            .finish_non_exhaustive()
    }
}

impl FiniteGroupTable {
    /// Breadth-first enumeration from the identity.
    pub fn enumerate(d: &CoxeterDiagram, cap: usize) -> Result<FiniteGroupTable> {
        FiniteGroupTable::enumerate_with_budget(d, cap, DEFAULT_BUDGET)
    }

    pub fn enumerate_with_budget(d: &CoxeterDiagram, cap: usize, budget: usize) -> Result<FiniteGroupTable> {
        let engine = WordEngine::with_budget(d.clone(), budget);
        let rank = d.len();
        let mut elements: Vec<Letters> = vec![Vec::new()];
        let mut index: HashMap<Letters, usize> = HashMap::from([(Vec::new(), 0)]);
        let mut right: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            right.resize((x + 1) * rank, usize::MAX);
            for s in 0..rank {
                let y = engine.right_multiply(&elements[x], s as u8)?;
                let next = match index.get(&y) {
                    Some(&k) => k,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::CapExceeded(cap));
                        }
                        let k = elements.len();
                        index.insert(y.clone(), k);
                        elements.push(y);
                        queue.push_back(k);
                        k
                    }
                };
                right[x * rank + s] = next;
            }
        }
        let mut table = FiniteGroupTable {
            engine,
            elements,
            index,
            right,
            product: None,
            inverse: Vec::new(),
        };
        let n = table.order();
        table.inverse = (0..n)
            .map(|x| table.fold(0, table.elements[x].iter().rev().copied()))
            .collect();
        if n <= DENSE_PRODUCT_LIMIT {
            let mut product = vec![0u32; n * n];
            for x in 0..n {
                for y in 0..n {
                    product[x * n + y] = table.fold(x, table.elements[y].iter().copied()) as u32;
                }
            }
            table.product = Some(product);
        }
        Ok(table)
    }

    fn fold(&self, start: usize, letters: impl Iterator<Item = u8>) -> usize {
        let rank = self.rank();
        letters.fold(start, |x, s| self.right[x * rank + s as usize])
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        self.engine.diagram()
    }

    pub fn engine(&self) -> &WordEngine {
        &self.engine
    }

    pub fn rank(&self) -> usize {
        self.engine.diagram().len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, x: usize) -> CanonicalElement {
        self.engine.canonical(&self.engine.word(&self.elements[x])).expect("stored forms are canonical")
    }

    pub fn word(&self, x: usize) -> Word {
        self.engine.word(&self.elements[x])
    }

    pub fn length(&self, x: usize) -> usize {
        self.elements[x].len()
    }

    /// Index of the element a word represents.
    pub fn index_of(&self, w: &Word) -> Result<usize> {
        let letters = self.engine.letters(w)?;
        Ok(self.fold(0, letters.into_iter()))
    }

    pub fn index_of_canonical(&self, c: &CanonicalElement) -> Option<usize> {
        self.engine.letters(c.word()).ok().and_then(|l| self.index.get(&l).copied())
    }

    /// Indices of the standard generators, in vertex order.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.rank()).map(|s| self.right[s]).collect()
    }

    #[inline]
    pub fn product(&self, x: usize, y: usize) -> usize {
        match &self.product {
            Some(p) => p[x * self.order() + y] as usize,
            None => self.fold(x, self.elements[y].iter().copied()),
        }
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.product(self.product(g, x), self.inverse(g))
    }

    pub fn is_involution(&self, x: usize) -> bool {
        x != 0 && self.product(x, x) == 0
    }

    pub fn involutions(&self) -> Vec<usize> {
        (1..self.order()).filter(|&x| self.is_involution(x)).collect()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut p = x;
        let mut n = 1;
        while p != 0 {
            p = self.product(p, x);
            n += 1;
        }
        n
    }

    pub fn conjugacy_class(&self, x: usize) -> BTreeSet<usize> {
        (0..self.order()).map(|g| self.conjugate(g, x)).collect()
    }

    /// Membership vector of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.product(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.subgroup(gens).into_iter().all(|m| m)
    }

    /// Identity, associativity and inverse laws, checked exhaustively.
    pub fn verify_laws(&self) -> bool {
        let n = self.order();
        let identity = (0..n).all(|x| self.product(0, x) == x && self.product(x, 0) == x);
        let inverses = (0..n).all(|x| self.product(x, self.inverse(x)) == 0 && self.product(self.inverse(x), x) == 0);
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.product(x, y);
                (0..n).all(|z| self.product(xy, z) == self.product(x, self.product(y, z)))
            })
        });
        identity && inverses && assoc
    }

    /// Display name for an element: its canonical letters joined by `.`.
    pub fn element_name(&self, x: usize) -> String {
        if x == 0 {
            return "1".into();
        }
        self.word(x).letters().join(".")
    }
}

pub fn enumerate_elements(d: &CoxeterDiagram, cap: usize) -> Result<FiniteGroupTable> {
    FiniteGroupTable::enumerate(d, cap)
}

/// The reflections of a generating set, as element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReflectionSet(pub BTreeSet<usize>);

impl ReflectionSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }
}

pub fn reflection_set(table: &FiniteGroupTable, generators: &[usize]) -> ReflectionSet {
    ReflectionSet(
        (0..table.order())
            .flat_map(|g| generators.iter().map(move |&s| (g, s)))
            .map(|(g, s)| table.conjugate(g, s))
            .collect(),
    )
}

/// A Coxeter generating set found inside a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSetRecord {
    /// Element indices, aligned with the vertex order of `induced`.
    pub generators: Vec<usize>,
    /// Pairwise orders of the generators as a diagram.
    pub induced: CoxeterDiagram,
    pub reflections: ReflectionSet,
}

impl GeneratingSetRecord {
    pub fn size(&self) -> usize {
        self.generators.len()
    }

    /// Builds the record for `gens` without checking that it is a Coxeter
    /// generating set.
    pub fn from_elements(table: &FiniteGroupTable, gens: &[usize]) -> Result<GeneratingSetRecord> {
        let induced = induced_diagram(table, gens)?;
        let generators = induced
            .vertices()
            .iter()
            .map(|name| {
                gens.iter()
                    .copied()
                    .find(|&g| element_label(table, g, gens) == *name)
                    .expect("every vertex comes from a generator")
            })
            .collect();
        Ok(GeneratingSetRecord {
            generators,
            induced,
            reflections: reflection_set(table, gens),
        })
    }

    /// The standard generating set of the table's own diagram.
    pub fn standard(table: &FiniteGroupTable) -> GeneratingSetRecord {
        let generators = table.generators();
        GeneratingSetRecord {
            reflections: reflection_set(table, &generators),
            generators,
            induced: table.diagram().clone(),
        }
    }
}

fn element_label(table: &FiniteGroupTable, g: usize, all: &[usize]) -> String {
    let names: BTreeSet<String> = all.iter().map(|&x| table.element_name(x)).collect();
    if names.len() == all.len() && names.iter().all(|n| !n.contains(char::is_whitespace)) {
        table.element_name(g)
    } else {
        format!("g{g}")
    }
}

fn induced_diagram(table: &FiniteGroupTable, gens: &[usize]) -> Result<CoxeterDiagram> {
    let names: Vec<String> = gens.iter().map(|&g| element_label(table, g, gens)).collect();
    let mut d = CoxeterDiagram::new(names.iter().cloned())?;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let m = table.element_order(table.product(gens[i], gens[j]));
            d = d.with_edge(&names[i], &names[j], Label::Finite(m as u32))?;
        }
    }
    Ok(d)
}

fn check_search_limits(table: &FiniteGroupTable, max_size: usize) -> Result<()> {
    if table.order() > MAX_SEARCH_ORDER {
        return Err(Error::SearchLimit(format!(
            "group order {} exceeds {MAX_SEARCH_ORDER}",
            table.order()
        )));
    }
    if max_size > table.rank() + 2 {
        return Err(Error::SearchLimit(format!(
            "max size {max_size} exceeds rank + 2 = {}",
            table.rank() + 2
        )));
    }
    Ok(())
}

/// Every set of involutions of size `<= max_size` that is a Coxeter
/// generating set of `W`. Sorted by size, then by element indices.
pub fn find_coxeter_generating_sets(table: &FiniteGroupTable, max_size: usize) -> Result<Vec<GeneratingSetRecord>> {
    check_search_limits(table, max_size)?;
    let n = table.order();
    let invs = table.involutions();
    let k = invs.len();
    // Pairwise orders among involutions.
    let mut orders = vec![0u32; k * k];
    for a in 0..k {
        for b in 0..k {
            orders[a * k + b] = table.element_order(table.product(invs[a], invs[b])) as u32;
        }
    }
    let diagram_of = |chosen: &[usize]| -> CoxeterDiagram {
        let names: Vec<String> = (0..chosen.len()).map(|i| format!("v{i:02}")).collect();
        let mut d = CoxeterDiagram::new(names.iter().cloned()).expect("distinct names");
        for i in 0..chosen.len() {
            for j in i + 1..chosen.len() {
                let m = orders[chosen[i] * k + chosen[j]];
                d = d.with_edge(&names[i], &names[j], Label::Finite(m)).expect("labels >= 2");
            }
        }
        d
    };

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    // Every subset of a finite Coxeter generating set is spherical, so a
    // non-spherical partial choice is abandoned.
    #[allow(clippy::too_many_arguments)]
    fn search(
        start: usize,
        k: usize,
        max_size: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
        diagram_of: &dyn Fn(&[usize]) -> CoxeterDiagram,
        generates: &dyn Fn(&[usize]) -> bool,
    ) {
        let d = diagram_of(chosen);
        let order = classify::group_order(&d);
        let GroupOrder::Finite(order) = order else {
            return;
        };
        if order == n as u128 && generates(chosen) {
            found.push(chosen.clone());
        }
        if chosen.len() == max_size {
            return;
        }
        for next in start..k {
            chosen.push(next);
            search(next + 1, k, max_size, n, chosen, found, diagram_of, generates);
            chosen.pop();
        }
    }
    let generates = |c: &[usize]| {
        let gens: Vec<usize> = c.iter().map(|&i| invs[i]).collect();
        table.generates(&gens)
    };
    search(0, k, max_size, n, &mut chosen, &mut found, &diagram_of, &generates);

    let mut records = found
        .into_iter()
        .map(|c| {
            let gens: Vec<usize> = c.iter().map(|&i| invs[i]).collect();
            GeneratingSetRecord::from_elements(table, &gens)
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by_key(|r| {
        let mut g = r.generators.clone();
        g.sort_unstable();
        (g.len(), g)
    });
    Ok(records)
}

/// Records that share a reflection set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionClass {
    pub reflection_count: usize,
    /// Indices into the record list.
    pub members: Vec<usize>,
    pub sizes: BTreeSet<usize>,
    pub pairwise_isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityCheck {
    pub classes: Vec<ReflectionClass>,
    /// Record pairs with equal reflection sets but non-isomorphic diagrams.
    pub violations: Vec<(usize, usize)>,
}

impl RigidityCheck {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn empirical_reflection_rigidity(records: &[GeneratingSetRecord]) -> RigidityCheck {
    let mut groups: BTreeMap<&ReflectionSet, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        groups.entry(&r.reflections).or_default().push(i);
    }
    let mut classes = Vec::new();
    let mut violations = Vec::new();
    for (refl, members) in groups {
        let mut ok = true;
        for (p, &i) in members.iter().enumerate() {
            for &j in &members[p + 1..] {
                if diagram_isomorphic(&records[i].induced, &records[j].induced).is_none() {
                    ok = false;
                    violations.push((i, j));
                }
            }
        }
        classes.push(ReflectionClass {
            reflection_count: refl.len(),
            sizes: members.iter().map(|&i| records[i].size()).collect(),
            members,
            pairwise_isomorphic: ok,
        });
    }
    classes.sort_by_key(|c| c.members[0]);
    RigidityCheck { classes, violations }
}

/// Equal reflection sets force equal generator counts.
pub fn verify_size_lemma(records: &[GeneratingSetRecord]) -> bool {
    records.iter().enumerate().all(|(i, r)| {
        records[i + 1..]
            .iter()
            .all(|o| o.reflections != r.reflections || o.size() == r.size())
    })
}

/// Partition of the standard generators by conjugacy in `W`.
pub fn generator_conjugacy_classes(table: &FiniteGroupTable) -> Vec<Vec<String>> {
    let gens = table.generators();
    let d = table.diagram();
    let mut assigned = vec![false; gens.len()];
    let mut out = Vec::new();
    for i in 0..gens.len() {
        if assigned[i] {
            continue;
        }
        let class = table.conjugacy_class(gens[i]);
        let block: Vec<usize> = (0..gens.len()).filter(|&j| class.contains(&gens[j])).collect();
        for &j in &block {
            assigned[j] = true;
        }
        out.push(d.names_of(&block));
    }
    out
}

/// Generators are conjugate iff they are joined by a path of odd labels.
pub fn verify_conjugacy_lemma(table: &FiniteGroupTable) -> bool {
    generator_conjugacy_classes(table) == table.diagram().odd_components()
}

/// `W_T = w · W'_{T'} · w⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub source_subset: Vec<String>,
    pub target_subset: Vec<String>,
    pub conjugator: usize,
    pub source_subgroup: Vec<usize>,
    pub target_subgroup: Vec<usize>,
}

fn members(v: &[bool]) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect()
}

/// Maximal spherical subsets of a record, as (names, subgroup) pairs.
fn maximal_parabolics(
    table: &FiniteGroupTable,
    d: &CoxeterDiagram,
    gens: &[usize],
) -> Result<Vec<(Vec<String>, Vec<bool>)>> {
    Ok(maximal_masks(d)?
        .into_iter()
        .map(|m| {
            let idx = mask_to_indices(m);
            let g: Vec<usize> = idx.iter().map(|&i| gens[i]).collect();
            (d.names_of(&idx), table.subgroup(&g))
        })
        .collect())
}

/// For each maximal spherical subset `T` of the table's diagram, the unique
/// maximal spherical subset `T'` of the record conjugate to it.
pub fn verify_max_spherical_correspondence(
    table: &FiniteGroupTable,
    record: &GeneratingSetRecord,
) -> Result<Vec<ConjugacyWitness>> {
    correspondence_between(table, &GeneratingSetRecord::standard(table), record)
}

/// Same as [`verify_max_spherical_correspondence`] between two arbitrary
/// generating sets of the table's group.
pub fn correspondence_between(
    table: &FiniteGroupTable,
    from: &GeneratingSetRecord,
    to: &GeneratingSetRecord,
) -> Result<Vec<ConjugacyWitness>> {
    let n = table.order();
    let source = maximal_parabolics(table, &from.induced, &from.generators)?;
    let target = maximal_parabolics(table, &to.induced, &to.generators)?;
    let mut witnesses = Vec::new();
    for (t_names, w_t) in &source {
        let size = w_t.iter().filter(|&&m| m).count();
        let mut hits = Vec::new();
        for (tp_names, w_tp) in &target {
            let tp_members = members(w_tp);
            if tp_members.len() != size {
                continue;
            }
            if let Some(g) = (0..n).find(|&g| tp_members.iter().all(|&x| w_t[table.conjugate(g, x)])) {
                hits.push((tp_names, g, tp_members));
            }
        }
        let label = format!("{{{}}}", t_names.join(","));
        match hits.len() {
            0 => return Err(Error::NoCorrespondent(label)),
            1 => {}
            _ => return Err(Error::NotUnique(label)),
        }
        let (tp_names, g, tp_members) = hits.pop().expect("one hit");
        witnesses.push(ConjugacyWitness {
            source_subset: t_names.clone(),
            target_subset: tp_names.clone(),
            conjugator: g,
            source_subgroup: members(w_t),
            target_subgroup: tp_members,
        });
    }
    Ok(witnesses)
}

fn require_main_hypotheses(table: &FiniteGroupTable, record: &GeneratingSetRecord) -> Result<()> {
    if !rigidity_report(table.diagram())?.conditions_hold() {
        return Err(Error::Precondition("diagram violates conditions (1)-(3)".into()));
    }
    let standard = reflection_set(table, &table.generators());
    if record.reflections != standard {
        return Err(Error::Precondition("record has a different reflection set".into()));
    }
    Ok(())
}

/// Whether conditions (1)-(3) carry over to a generating set with the same
/// reflections.
pub fn verify_condition_transfer(table: &FiniteGroupTable, record: &GeneratingSetRecord) -> Result<bool> {
    require_main_hypotheses(table, record)?;
    Ok(rigidity_report(&record.induced)?.conditions_hold())
}

/// Builds `ψ: S -> S'` with `ψ(s)` conjugate to `s`, even maximal spherical
/// subsets mapped into their correspondents and odd maximal pairs onto
/// theirs, then certifies `m(s,t) = m'(ψ(s),ψ(t))`. The first bijection in
/// vertex order that passes is returned.
pub fn construct_psi(table: &FiniteGroupTable, record: &GeneratingSetRecord) -> Result<VertexBijection> {
    require_main_hypotheses(table, record)?;
    let d = table.diagram();
    let d2 = &record.induced;
    let n = d.len();
    if d2.len() != n {
        return Err(Error::NoValidPsi);
    }
    let std_gens = table.generators();
    let witnesses = verify_max_spherical_correspondence(table, record)?;

    // allowed[s][t']: every rule that constrains ψ(s) admits t'.
    let mut allowed = vec![vec![true; n]; n];
    for s in 0..n {
        let class = table.conjugacy_class(std_gens[s]);
        for (t, row) in allowed[s].iter_mut().enumerate() {
            *row = class.contains(&record.generators[t]);
        }
    }
    for w in &witnesses {
        let t = d.indices_of(&w.source_subset)?;
        let tp = d2.indices_of(&w.target_subset)?;
        let even = t.iter().all(|&a| t.iter().all(|&b| a == b || d.label(a, b).is_even()));
        let odd_pair = t.len() == 2 && d.label(t[0], t[1]).is_odd();
        if even || odd_pair {
            if odd_pair && tp.len() != 2 {
                return Err(Error::NoValidPsi);
            }
            for &s in &t {
                for (x, ok) in allowed[s].iter_mut().enumerate() {
                    *ok &= tp.contains(&x);
                }
            }
        }
    }

    fn extend(
        d: &CoxeterDiagram,
        d2: &CoxeterDiagram,
        allowed: &[Vec<bool>],
        assign: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let s = assign.len();
        if s == d.len() {
            return true;
        }
        for t in 0..d2.len() {
            if used[t] || !allowed[s][t] {
                continue;
            }
            if assign.iter().enumerate().any(|(u, &img)| d.label(s, u) != d2.label(t, img)) {
                continue;
            }
            used[t] = true;
            assign.push(t);
            if extend(d, d2, allowed, assign, used) {
                return true;
            }
            assign.pop();
            used[t] = false;
        }
        false
    }
    let mut assign = Vec::new();
    let mut used = vec![false; n];
    if !extend(d, d2, &allowed, &mut assign, &mut used) {
        return Err(Error::NoValidPsi);
    }
    let psi = VertexBijection::from_pairs(
        assign
            .iter()
            .enumerate()
            .map(|(s, &t)| (d.name(s).to_string(), d2.name(t).to_string())),
    );
    if !psi.preserves_labels(d, d2) {
        return Err(Error::Internal("ψ failed its label certificate".into()));
    }
    Ok(psi)
}

/// All group isomorphisms `t1 -> t2`, as element maps, found by assigning
/// involutions to the generators of `t1` with matching pairwise orders and
/// keeping the assignments whose images generate `t2`.
pub fn group_isomorphisms(t1: &FiniteGroupTable, t2: &FiniteGroupTable) -> Vec<Vec<usize>> {
    if t1.order() != t2.order() {
        return Vec::new();
    }
    let d = t1.diagram();
    let invs = t2.involutions();
    let mut out = Vec::new();

    fn extend(
        t1: &FiniteGroupTable,
        t2: &FiniteGroupTable,
        d: &CoxeterDiagram,
        invs: &[usize],
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let s = images.len();
        if s == d.len() {
            if t2.generates(images) {
                out.push(extend_to_elements(t1, t2, images));
            }
            return;
        }
        for &x in invs {
            let consistent = images.iter().enumerate().all(|(u, &y)| {
                d.label(s, u).value() == Some(t2.element_order(t2.product(x, y)) as u32)
            });
            if consistent {
                images.push(x);
                extend(t1, t2, d, invs, images, out);
                images.pop();
            }
        }
    }
    extend(t1, t2, d, &invs, &mut Vec::new(), &mut out);
    out
}

/// The homomorphism determined by generator images, along the Cayley graph.
fn extend_to_elements(t1: &FiniteGroupTable, t2: &FiniteGroupTable, images: &[usize]) -> Vec<usize> {
    (0..t1.order())
        .map(|x| {
            t1.elements[x]
                .iter()
                .fold(0, |acc, &s| t2.product(acc, images[s as usize]))
        })
        .collect()
}

/// Whether an element map sends one reflection set exactly onto another.
pub fn carries_reflections(phi: &[usize], from: &ReflectionSet, to: &ReflectionSet) -> bool {
    from.len() == to.len() && from.0.iter().all(|&r| to.contains(phi[r]))
}

/// `I2(2k)` against `I2(k) x A1` for odd `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralTwinReport {
    pub k: u32,
    pub order_left: usize,
    pub order_right: usize,
    /// Generator images of the first isomorphism found, as words on the right.
    pub isomorphism: Option<Vec<(String, Word)>>,
    pub isomorphism_count: usize,
    pub reflections_left: usize,
    pub reflections_right: usize,
    /// Isomorphisms mapping the left reflections onto the right ones.
    pub reflection_compatible: usize,
}

impl DihedralTwinReport {
    pub fn passed(&self) -> bool {
        let k = self.k as usize;
        self.order_left == 4 * k
            && self.order_right == 4 * k
            && self.isomorphism.is_some()
            && self.reflections_left == 2 * k
            && self.reflections_right == k + 1
            && self.reflection_compatible == 0
    }
}

pub fn compare_dihedral_presentations(k: u32, cap: usize) -> Result<DihedralTwinReport> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::Precondition(format!("k must be odd and at least 3, got {k}")));
    }
    let left = FiniteGroupTable::enumerate(&crate::catalog::dihedral_pair(k), cap)?;
    let right = FiniteGroupTable::enumerate(&crate::catalog::dihedral_times_a1(k), cap)?;
    let r_left = reflection_set(&left, &left.generators());
    let r_right = reflection_set(&right, &right.generators());
    let isos = group_isomorphisms(&left, &right);
    let gens = left.generators();
    let isomorphism = isos.first().map(|phi| {
        left.diagram()
            .vertices()
            .iter()
            .zip(&gens)
            .map(|(name, &g)| (name.clone(), right.word(phi[g])))
            .collect()
    });
    Ok(DihedralTwinReport {
        k,
        order_left: left.order(),
        order_right: right.order(),
        isomorphism,
        isomorphism_count: isos.len(),
        reflections_left: r_left.len(),
        reflections_right: r_right.len(),
        reflection_compatible: isos.iter().filter(|phi| carries_reflections(phi, &r_left, &r_right)).count(),
    })
}

/// Cross-checks of the word engine against the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineCheck {
    pub element_count: usize,
    pub formula_order: GroupOrder,
    /// `element_order(s t) = m(s,t)` for all finite-label pairs.
    pub pair_orders_match: bool,
    /// `is_reflection` agrees with conjugation-closure membership.
    pub reflection_test_agrees: bool,
}

impl EngineCheck {
    pub fn passes(&self) -> bool {
        self.formula_order == GroupOrder::Finite(self.element_count as u128)
            && self.pair_orders_match
            && self.reflection_test_agrees
    }
}

pub fn check_engine(table: &FiniteGroupTable) -> Result<EngineCheck> {
    let d = table.diagram();
    let engine = table.engine();
    let mut pair_orders_match = true;
    for (i, j, m) in d.edges() {
        let w = Word::new([d.name(i), d.name(j)]);
        let got = engine.element_order(&w, m as usize + 1)?;
        pair_orders_match &= got == crate::words::ElementOrder::Finite(m as usize);
    }
    let reflections = reflection_set(table, &table.generators());
    let mut reflection_test_agrees = true;
    for x in 0..table.order() {
        reflection_test_agrees &= engine.is_reflection(&table.word(x))? == reflections.contains(x);
    }
    Ok(EngineCheck {
        element_count: table.order(),
        formula_order: classify::group_order(d),
        pair_orders_match,
        reflection_test_agrees,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct LabOptions {
    pub cap: usize,
    pub max_size: Option<usize>,
    pub budget: usize,
}

impl Default for LabOptions {
    fn default() -> Self {
        LabOptions {
            cap: DEFAULT_ELEMENT_CAP,
            max_size: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Record index, condition transfer, and ψ (or the reason it failed).
pub type MainTheoremCheck = (usize, bool, std::result::Result<VertexBijection, String>);

/// Everything the lab can say about one finite diagram.
#[derive(Clone, Debug)]
pub struct LabReport {
    pub order: usize,
    pub laws_hold: bool,
    pub engine: EngineCheck,
    pub reflection_count: usize,
    pub conjugacy_lemma: bool,
    pub records: Vec<GeneratingSetRecord>,
    pub rigidity: RigidityCheck,
    pub size_lemma: bool,
    /// Records sharing the standard reflection set.
    pub same_reflection_records: Vec<usize>,
    /// Correspondence witnesses per record; `Err` text on falsification.
    pub correspondence: Vec<std::result::Result<usize, String>>,
    /// Present when conditions (1)-(3) hold: per same-reflection record,
    /// condition transfer and ψ.
    pub main_theorem: Option<Vec<MainTheoremCheck>>,
}

impl LabReport {
    pub fn passed(&self) -> bool {
        self.laws_hold
            && self.engine.passes()
            && self.conjugacy_lemma
            && self.rigidity.passes()
            && self.size_lemma
            && self.correspondence.iter().all(|c| c.is_ok())
            && self
                .main_theorem
                .as_ref()
                .is_none_or(|m| m.iter().all(|(_, t, p)| *t && p.is_ok()))
    }
}

pub fn run_lab(d: &CoxeterDiagram, opts: LabOptions) -> Result<LabReport> {
    let table = FiniteGroupTable::enumerate_with_budget(d, opts.cap, opts.budget)?;
    let max_size = opts.max_size.unwrap_or(d.len() + 2);
    let records = find_coxeter_generating_sets(&table, max_size)?;
    let standard = reflection_set(&table, &table.generators());
    let same: Vec<usize> = (0..records.len()).filter(|&i| records[i].reflections == standard).collect();
    let correspondence = records
        .iter()
        .map(|r| {
            verify_max_spherical_correspondence(&table, r)
                .map(|w| w.len())
                .map_err(|e| e.to_string())
        })
        .collect();
    let main_theorem = if rigidity_report(d)?.conditions_hold() {
        Some(
            same.iter()
                .map(|&i| {
                    let transfer = verify_condition_transfer(&table, &records[i])?;
                    let psi = construct_psi(&table, &records[i]).map_err(|e| e.to_string());
                    Ok((i, transfer, psi))
                })
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    Ok(LabReport {
        order: table.order(),
        laws_hold: table.verify_laws(),
        engine: check_engine(&table)?,
        reflection_count: standard.len(),
        conjugacy_lemma: verify_conjugacy_lemma(&table),
        rigidity: empirical_reflection_rigidity(&records),
        size_lemma: verify_size_lemma(&records),
        same_reflection_records: same,
        correspondence,
        main_theorem,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{commuting, dihedral, dihedral_times_a1};

    fn table(d: &CoxeterDiagram) -> FiniteGroupTable {
        FiniteGroupTable::enumerate(d, DEFAULT_ELEMENT_CAP).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(table(&dihedral(3)).order(), 6);
        let one = table(&CoxeterDiagram::new(["a"]).unwrap());
        assert_eq!(one.order(), 2);
        assert_eq!(one.element(1).to_string(), "a");
        assert!(matches!(
            FiniteGroupTable::enumerate(&crate::catalog::twist_path(), 10_000),
            Err(Error::CapExceeded(10_000))
        ));
        assert!(table(&dihedral(5)).verify_laws());
    }

    #[test]
    fn reflections() {
        let t = table(&dihedral(6));
        assert_eq!(reflection_set(&t, &t.generators()).len(), 6);
        let t = table(&dihedral_times_a1(3));
        assert_eq!(reflection_set(&t, &t.generators()).len(), 4);
        let t = table(&commuting(2));
        assert_eq!(reflection_set(&t, &t.generators()).len(), 2);
    }

    #[test]
    fn generating_sets_of_i2_3() {
        let t = table(&dihedral(3));
        let recs = find_coxeter_generating_sets(&t, 4).unwrap();
        assert_eq!(recs.len(), 3);
        for r in &recs {
            assert_eq!(r.size(), 2);
            assert_eq!(r.induced.edges().next().unwrap().2, 3);
        }
    }

    #[test]
    fn generating_sets_of_i2_6() {
        let t = table(&dihedral(6));
        let recs = find_coxeter_generating_sets(&t, 4).unwrap();
        assert!(recs.iter().any(|r| r.size() == 2 && r.induced.edges().next().unwrap().2 == 6));
        let fig1_right = dihedral_times_a1(3);
        assert!(recs
            .iter()
            .any(|r| r.size() == 3 && diagram_isomorphic(&r.induced, &fig1_right).is_some()));
        let check = empirical_reflection_rigidity(&recs);
        assert!(check.passes());
        let counts: BTreeSet<(usize, usize)> = check
            .classes
            .iter()
            .flat_map(|c| c.sizes.iter().map(move |&s| (s, c.reflection_count)))
            .collect();
        assert!(counts.contains(&(2, 6)) && counts.contains(&(3, 4)));
        assert!(verify_size_lemma(&recs));
    }

    #[test]
    fn trivial_group() {
        let t = table(&CoxeterDiagram::new(Vec::<String>::new()).unwrap());
        let recs = find_coxeter_generating_sets(&t, 2).unwrap();
        assert_eq!(recs.len(), 1);
        assert!(recs[0].generators.is_empty());
    }

    #[test]
    fn search_limits() {
        let t = table(&dihedral(3));
        assert!(matches!(find_coxeter_generating_sets(&t, 5), Err(Error::SearchLimit(_))));
    }

    #[test]
    fn conjugacy_classes() {
        let t = table(&dihedral_times_a1(3));
        assert_eq!(generator_conjugacy_classes(&t), vec![vec!["a", "b"], vec!["c"]]);
        assert!(verify_conjugacy_lemma(&t));
        let t = table(&dihedral(4));
        assert_eq!(generator_conjugacy_classes(&t).len(), 2);
        assert!(verify_conjugacy_lemma(&t));
        assert!(verify_conjugacy_lemma(&table(&dihedral(3))));
    }

    #[test]
    fn correspondence_and_psi() {
        let t = table(&dihedral(5));
        let a = t.index_of(&Word::parse("a")).unwrap();
        let aba = t.index_of(&Word::parse("a b a")).unwrap();
        let rec = GeneratingSetRecord::from_elements(&t, &[a, aba]).unwrap();
        assert_eq!(rec.induced.edges().next().unwrap().2, 5);
        assert!(verify_condition_transfer(&t, &rec).unwrap());
        let psi = construct_psi(&t, &rec).unwrap();
        assert_eq!(psi.get("a"), Some("a"));
        assert_eq!(psi.get("b"), Some("a.b.a"));

        let std = GeneratingSetRecord::standard(&t);
        assert!(construct_psi(&t, &std).unwrap().is_identity());

        let w = verify_max_spherical_correspondence(&t, &rec).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].conjugator, 0);
        assert_eq!(w[0].source_subgroup.len(), 10);
    }

    #[test]
    fn psi_requires_hypotheses() {
        let t = table(&crate::catalog::type_a(3));
        let std = GeneratingSetRecord::standard(&t);
        assert!(matches!(construct_psi(&t, &std), Err(Error::Precondition(_))));
    }

    #[test]
    fn dihedral_twins() {
        let r = compare_dihedral_presentations(3, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!((r.order_left, r.order_right), (12, 12));
        assert_eq!((r.reflections_left, r.reflections_right), (6, 4));
        assert!(r.isomorphism.is_some());
        assert_eq!(r.reflection_compatible, 0);
        assert!(r.passed());
        assert!(matches!(
            compare_dihedral_presentations(4, DEFAULT_ELEMENT_CAP),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lab_run() {
        let r = run_lab(&dihedral(5), LabOptions::default()).unwrap();
        assert!(r.passed());
        assert!(r.main_theorem.is_some());
    }
}
