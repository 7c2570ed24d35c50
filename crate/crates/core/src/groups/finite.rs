//! Finite groups as multiplication tables.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Roots;

use super::word::{Letter, Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("table is empty or not square ({0} entries)")]
    Shape(usize),
    #[error("table entry {0} out of range")]
    OutOfRange(u32),
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("{0} labels for {1} elements")]
    LabelCount(usize, usize),
    #[error("element index {0} out of range")]
    BadElement(usize),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not central")]
    NotCentral,
}

/// A group given by its Cayley table. Element `i` has label `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    labels: Vec<String>,
    generators: Option<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates identity and inverses exhaustively and associativity with
    /// Light's test over a generating set, which is complete.
    pub fn from_table(table: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len().sqrt();
        if n == 0 || n * n != table.len() {
            return Err(GroupError::Shape(table.len()));
        }
        if let Some(&bad) = table.iter().find(|&&x| x as usize >= n) {
            return Err(GroupError::OutOfRange(bad));
        }
        let labels = match labels {
            Some(l) if l.len() != n => return Err(GroupError::LabelCount(l.len(), n)),
            Some(l) => l,
            None => (0..n).map(|i| format!("{i}")).collect(),
        };
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)).ok_or(GroupError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n).find(|&y| at(x, y) == identity && at(y, x) == identity).ok_or(GroupError::NoInverse(x))?;
            inverses.push(y as u32);
        }
        let g = FiniteGroup { order: n, table, identity, inverses, labels, generators: None };
        // element orders are not yet meaningful, so take candidates in index order
        let gens = g.greedy_from((0..n).filter(|&i| i != identity).collect());
        for &s in &gens {
            for x in 0..n {
                for y in 0..n {
                    if g.mul(g.mul(x, s), y) != g.mul(x, g.mul(s, y)) {
                        return Err(GroupError::NotAssociative(x, s, y));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        if labels.len() != self.order {
            return Err(GroupError::LabelCount(labels.len(), self.order));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Fixes the generating set used for presentations and hom searches.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Result<Self, GroupError> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= self.order) {
            return Err(GroupError::BadElement(bad));
        }
        if self.subgroup_generated(&gens).len() != self.order {
            return Err(GroupError::NotSubgroup);
        }
        self.generators = Some(gens);
        Ok(self)
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: alloc::vec![0],
            identity: 0,
            inverses: alloc::vec![0],
            labels: alloc::vec!["1".into()],
            generators: None,
        }
    }

    /// `Z/n` with elements `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        let inverses = (0..n).map(|i| ((n - i) % n) as u32).collect();
        let labels = (0..n).map(|i| format!("{i}")).collect();
        let generators = if n > 1 { Some(alloc::vec![1]) } else { None };
        FiniteGroup { order: n, table, identity: 0, inverses, labels, generators }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order).all(|x| self.mul(a, x) == self.mul(x, a))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.is_central(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Central elements of order 2.
    pub fn central_involutions(&self) -> Vec<usize> {
        self.center().into_iter().filter(|&a| self.element_order(a) == 2).collect()
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.order];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity] = true;
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    /// Elements of highest order first, each added if it enlarges the span.
    fn greedy_generators(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut candidates: Vec<usize> = (0..self.order).filter(|&i| i != self.identity).collect();
        candidates.sort_by_key(|&i| (core::cmp::Reverse(orders[i]), i));
        self.greedy_from(candidates)
    }

    fn greedy_from(&self, candidates: Vec<usize>) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = alloc::vec![false; self.order];
        span[self.identity] = true;
        let mut size = 1;
        for c in candidates {
            if size == self.order {
                break;
            }
            if !span[c] {
                gens.push(c);
                let sub = self.subgroup_generated(&gens);
                size = sub.len();
                for x in sub {
                    span[x] = true;
                }
            }
        }
        gens
    }

    /// The fixed generating set if one was given, else a greedy one.
    pub fn generating_set(&self) -> Vec<usize> {
        self.generators.clone().unwrap_or_else(|| self.greedy_generators())
    }

    /// Presentation on `generating_set()` whose relators are the Schreier
    /// relators `w_g s w_{gs}^-1` of the Cayley graph, where `w_g` is the
    /// breadth-first word for `g`. Returns the presentation and every
    /// element's word.
    pub fn cayley_presentation(&self) -> (Presentation, Vec<Word>) {
        let gens = self.generating_set();
        let names: Vec<String> = (0..gens.len()).map(|i| format!("g{}", i + 1)).collect();
        let mut words: Vec<Option<Word>> = alloc::vec![None; self.order];
        words[self.identity] = Some(Word::identity());
        let mut queue = VecDeque::from([self.identity]);
        let mut tree_edges = alloc::collections::BTreeSet::new();
        while let Some(x) = queue.pop_front() {
            for (k, &s) in gens.iter().enumerate() {
                let y = self.mul(x, s);
                if words[y].is_none() {
                    let w = words[x].as_ref().unwrap().concat(&Word::gen(k));
                    words[y] = Some(w);
                    tree_edges.insert((x, k));
                    queue.push_back(y);
                }
            }
        }
        let words: Vec<Word> = words.into_iter().map(|w| w.expect("generating set spans")).collect();
        let mut relators = Vec::new();
        for x in 0..self.order {
            for (k, &s) in gens.iter().enumerate() {
                if tree_edges.contains(&(x, k)) {
                    continue;
                }
                let y = self.mul(x, s);
                let mut r = words[x].clone();
                r.0.push(Letter { gen: k, inverse: false });
                relators.push(r.concat(&words[y].inverse()).free_reduce());
            }
        }
        relators.retain(|r| !r.is_empty());
        relators.sort();
        relators.dedup();
        let p = Presentation::new(names, relators).expect("valid names");
        (p, words)
    }

    /// Evaluates a word given images of the generators.
    pub fn eval_word(&self, w: &Word, images: &[usize]) -> usize {
        w.letters().iter().fold(self.identity, |acc, l| {
            let x = images[l.gen];
            self.mul(acc, if l.inverse { self.inv(x) } else { x })
        })
    }

    /// Checks whether `sub` (any order) is a subgroup.
    pub fn is_subgroup(&self, sub: &[usize]) -> bool {
        let mut member = alloc::vec![false; self.order];
        for &x in sub {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        member[self.identity] && sub.iter().all(|&a| member[self.inv(a)] && sub.iter().all(|&b| member[self.mul(a, b)]))
    }
}

/// `a x b` with element `(i, j)` at index `i * |b| + j`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order, b.order);
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xi, xj) = (x / nb, x % nb);
        for y in 0..n {
            let (yi, yj) = (y / nb, y % nb);
            table.push((a.mul(xi, yi) * nb + b.mul(xj, yj)) as u32);
        }
    }
    let inverses = (0..n).map(|x| (a.inv(x / nb) * nb + b.inv(x % nb)) as u32).collect();
    let labels = (0..n).map(|x| format!("({}, {})", a.labels[x / nb], b.labels[x % nb])).collect();
    let generators = match (&a.generators, &b.generators) {
        (Some(ga), Some(gb)) => {
            let mut g: Vec<usize> = ga.iter().map(|&s| s * nb + b.identity).collect();
            g.extend(gb.iter().map(|&s| a.identity * nb + s));
            Some(g)
        }
        _ => None,
    };
    FiniteGroup { order: n, table, identity: a.identity * nb + b.identity, inverses, labels, generators }
}

/// `g / sub` for a central subgroup. Cosets are numbered by their least
/// element and labelled `[label]` of that element. Returns the quotient
/// and the projection of every element of `g`.
pub fn central_quotient(g: &FiniteGroup, sub: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    if let Some(&bad) = sub.iter().find(|&&x| x >= g.order) {
        return Err(GroupError::BadElement(bad));
    }
    if !g.is_subgroup(sub) {
        return Err(GroupError::NotSubgroup);
    }
    if !sub.iter().all(|&x| g.is_central(x)) {
        return Err(GroupError::NotCentral);
    }
    let mut rep_of = alloc::vec![usize::MAX; g.order];
    let mut reps = Vec::new();
    for x in 0..g.order {
        if rep_of[x] == usize::MAX {
            let idx = reps.len();
            reps.push(x);
            for &h in sub {
                rep_of[g.mul(x, h)] = idx;
            }
        }
    }
    let n = reps.len();
    let mut table = Vec::with_capacity(n * n);
    for &a in &reps {
        for &b in &reps {
            table.push(rep_of[g.mul(a, b)] as u32);
        }
    }
    let inverses = reps.iter().map(|&a| rep_of[g.inv(a)] as u32).collect();
    let labels = reps.iter().map(|&a| format!("[{}]", g.labels[a])).collect();
    let generators = g.generators.as_ref().map(|gs| {
        let mut out: Vec<usize> = gs.iter().map(|&s| rep_of[s]).filter(|&c| c != rep_of[g.identity]).collect();
        out.dedup();
        out
    });
    let q = FiniteGroup { order: n, table, identity: rep_of[g.identity], inverses, labels, generators };
    let q = match &q.generators {
        Some(gs) if q.subgroup_generated(gs).len() != n => FiniteGroup { generators: None, ..q },
        _ => q,
    };
    Ok((q, rep_of))
}
