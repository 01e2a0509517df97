//! Test-only oracle: Todd–Coxeter coset enumeration over the trivial
//! subgroup. It works from the presentation alone and never touches the
//! braid-move engine, so the regular action it produces is an independent
//! model of `W`.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use coxeter_rigidity::CoxeterDiagram;

const UNDEF: usize = usize::MAX;

/// `W` acting on itself by right multiplication. Coset `0` is the identity.
pub struct RegularAction {
    pub rank: usize,
    /// `act[c][s]`: the coset `c · s`.
    pub act: Vec<Vec<usize>>,
    /// A word (as letters) reaching each coset from the identity.
    pub words: Vec<Vec<usize>>,
}

struct Enumerator {
    rank: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
    limit: usize,
}

impl Enumerator {
    fn rep(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            let p = self.parent[c];
            self.parent[c] = self.parent[p];
            c = p;
        }
        c
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, s: usize) -> Option<()> {
        if self.table.len() >= self.limit {
            return None;
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.rank]);
        self.parent.push(d);
        self.table[c][s] = d;
        self.table[d][s] = c;
        Some(())
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = (a.min(b), a.max(b));
        self.parent[drop] = keep;
        self.queue.push_back(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(g) = self.queue.pop_front() {
            for s in 0..self.rank {
                let d = self.table[g][s];
                if d == UNDEF {
                    continue;
                }
                // Generators are involutions: the inverse column is the same column.
                if self.table[d][s] == g {
                    self.table[d][s] = UNDEF;
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu][s] != UNDEF {
                    let t = self.table[mu][s];
                    self.merge(nu, t);
                } else {
                    self.table[mu][s] = nu;
                }
                let (mu, nu) = (self.rep(mu), self.rep(nu));
                if self.table[nu][s] != UNDEF {
                    let t = self.table[nu][s];
                    self.merge(mu, t);
                } else {
                    self.table[nu][s] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) -> Option<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, rel.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][rel[i]] != UNDEF {
                f = self.table[f][rel[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j >= i as isize && self.table[b][rel[j as usize]] != UNDEF {
                b = self.table[b][rel[j as usize]];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Some(());
            } else if j == i as isize {
                self.table[f][rel[i]] = b;
                self.table[b][rel[i]] = f;
                return Some(());
            } else {
                self.define(f, rel[i])?;
            }
        }
    }
}

/// Enumerates `W` for a diagram with every label finite. Returns `None` if
/// more than `limit` cosets are ever defined.
pub fn todd_coxeter(d: &CoxeterDiagram, limit: usize) -> Option<RegularAction> {
    let rank = d.len();
    let mut relators: Vec<Vec<usize>> = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            let m = d.label(i, j).value()? as usize;
            relators.push((0..2 * m).map(|k| if k % 2 == 0 { i } else { j }).collect());
        }
    }
    let mut e = Enumerator {
        rank,
        table: vec![vec![UNDEF; rank]],
        parent: vec![0],
        queue: VecDeque::new(),
        limit,
    };
    let mut c = 0;
    while c < e.table.len() {
        for r in &relators {
            if !e.live(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        for s in 0..rank {
            if e.live(c) && e.table[c][s] == UNDEF {
                e.define(c, s)?;
            }
        }
        c += 1;
    }

    // Renumber live cosets breadth-first from the identity.
    let mut number = vec![UNDEF; e.table.len()];
    let mut words = vec![Vec::new()];
    let mut order = vec![0usize];
    number[0] = 0;
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for s in 0..rank {
            let d = e.rep(e.table[c][s]);
            if number[d] == UNDEF {
                number[d] = order.len();
                let mut w = words[number[c]].clone();
                w.push(s);
                words.push(w);
                order.push(d);
            }
        }
        k += 1;
    }
    let mut act = vec![vec![0; rank]; order.len()];
    for (idx, &c) in order.iter().enumerate() {
        for (s, slot) in act[idx].iter_mut().enumerate() {
            *slot = number[e.rep(e.table[c][s])];
        }
    }
    Some(RegularAction { rank, act, words })
}

impl RegularAction {
    pub fn order(&self) -> usize {
        self.act.len()
    }

    pub fn apply(&self, start: usize, letters: &[usize]) -> usize {
        letters.iter().fold(start, |c, &s| self.act[c][s])
    }

    /// The element a word represents.
    pub fn element(&self, letters: &[usize]) -> usize {
        self.apply(0, letters)
    }

    pub fn product(&self, x: usize, y: usize) -> usize {
        self.apply(x, &self.words[y])
    }

    pub fn inverse(&self, x: usize) -> usize {
        let rev: Vec<usize> = self.words[x].iter().rev().copied().collect();
        self.element(&rev)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let (mut p, mut n) = (x, 1);
        while p != 0 {
            p = self.product(p, x);
            n += 1;
        }
        n
    }

    /// Conjugates of the standard generators.
    pub fn reflections(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for g in 0..self.order() {
            let gi = self.inverse(g);
            for s in 0..self.rank {
                out.insert(self.product(self.product(g, self.element(&[s])), gi));
            }
        }
        out
    }

    /// Coxeter length of each element: BFS distance in the Cayley graph.
    pub fn lengths(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }
}

/// Letters of a word over `d` as vertex indices.
pub fn letters(d: &CoxeterDiagram, w: &coxeter_rigidity::Word) -> Vec<usize> {
    w.letters().iter().map(|s| d.index_of(s).unwrap()).collect()
}
