//! Coset enumeration over the trivial subgroup (HLT strategy, no lookahead).

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;

use super::finite::FiniteGroup;
use super::word::{Presentation, Word};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TcError {
    #[error("coset enumeration exceeded {0} cosets")]
    Exceeded(usize),
    #[error("max_cosets must be at least 1")]
    ZeroCap,
}

const NONE: u32 = u32::MAX;

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    max: usize,
}

impl Enumerator {
    fn new(ncols: usize, max: usize) -> Self {
        Enumerator { ncols, table: alloc::vec![NONE; ncols], parent: alloc::vec![0], queue: Vec::new(), max }
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), TcError> {
        if self.count() >= self.max {
            return Err(TcError::Exceeded(self.max));
        }
        let d = self.count() as u32;
        self.parent.push(d);
        self.table.extend(core::iter::repeat_n(NONE, self.ncols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != r {
            let next = self.parent[k as usize];
            self.parent[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (pa, pb) = (self.rep(a), self.rep(b));
        if pa != pb {
            let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                if self.get(d, x ^ 1) == g {
                    self.set(d, x ^ 1, NONE);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, x ^ 1);
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<(), TcError> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

fn columns(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|l| 2 * l.gen + usize::from(l.inverse)).collect()
}

/// Enumerates the cosets of the trivial subgroup and returns the regular
/// representation. Elements are numbered in breadth-first order from the
/// identity over the columns `g1, g1^-1, g2, ...`, labelled by their
/// breadth-first words, and the group's generating set is the images of the
/// presentation's generators (identity images dropped).
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<FiniteGroup, TcError> {
    todd_coxeter_with_images(p, max_cosets).map(|(g, _)| g)
}

/// As [`todd_coxeter`], also returning the element each generator maps to.
pub fn todd_coxeter_with_images(p: &Presentation, max_cosets: usize) -> Result<(FiniteGroup, Vec<usize>), TcError> {
    if max_cosets == 0 {
        return Err(TcError::ZeroCap);
    }
    let ncols = 2 * p.ngens();
    let rels: Vec<Vec<usize>> = p.relators().iter().map(|r| columns(&r.free_reduce())).filter(|r| !r.is_empty()).collect();
    let mut e = Enumerator::new(ncols, max_cosets);
    let mut c = 0u32;
    while (c as usize) < e.count() {
        if e.live(c) {
            for r in &rels {
                e.scan_and_fill(c, r)?;
                if !e.live(c) {
                    break;
                }
            }
            if e.live(c) {
                for x in 0..ncols {
                    if e.get(c, x) == NONE {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }

    // standardize: breadth-first from coset 0
    let mut index = alloc::vec![usize::MAX; e.count()];
    let mut order: Vec<u32> = Vec::new();
    let mut words: Vec<Word> = Vec::new();
    let mut queue = VecDeque::from([0u32]);
    index[0] = 0;
    order.push(0);
    words.push(Word::identity());
    while let Some(c) = queue.pop_front() {
        for x in 0..ncols {
            let d = e.rep(e.get(c, x));
            if index[d as usize] == usize::MAX {
                index[d as usize] = order.len();
                let w = words[index[c as usize]].concat(&Word(alloc::vec![super::word::Letter { gen: x / 2, inverse: x % 2 == 1 }]));
                order.push(d);
                words.push(w);
                queue.push_back(d);
            }
        }
    }
    let n = order.len();
    // action[i][x] = index of element i * generator column x
    let action: Vec<Vec<usize>> = order.iter().map(|&c| (0..ncols).map(|x| index[e.rep(e.get(c, x)) as usize]).collect()).collect();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for w in &words {
            let k = columns(w).iter().fold(i, |acc, &x| action[acc][x]);
            table.push(k as u32);
        }
    }
    let labels: Vec<String> = words.iter().map(|w| p.format_word(w)).collect();
    let g = FiniteGroup::from_table(table, Some(labels)).expect("coset enumeration yields a group");
    let images: Vec<usize> = (0..p.ngens()).map(|k| action[0][2 * k]).collect();
    let mut gens: Vec<usize> = images.iter().copied().filter(|&x| x != 0).collect();
    gens.dedup();
    let g = if gens.is_empty() { g } else { g.with_generators(gens).expect("generators span") };
    Ok((g, images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &str, rels: &[&str]) -> Presentation {
        Presentation::parse(gens, rels).unwrap()
    }

    #[test]
    fn cyclic_orders() {
        assert_eq!(todd_coxeter(&pres("a", &["a^5"]), 100).unwrap().order(), 5);
        assert_eq!(todd_coxeter(&pres("a", &["a"]), 100).unwrap().order(), 1);
        let g = todd_coxeter(&pres("a b", &["a^3", "b^2", "[a,b]"]), 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn binary_polyhedral_orders() {
        let i = todd_coxeter(&pres("s t", &["(st)^2 s^-3", "s^3 t^-5"]), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(i.order(), 120);
        assert_eq!(i.center().len(), 2);
        let o = todd_coxeter(&pres("s t", &["(st)^2 s^-3", "s^3 t^-4"]), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(o.order(), 48);
        assert_eq!(o.center().len(), 2);
    }

    #[test]
    fn labels_name_the_words() {
        let g = todd_coxeter(&pres("a", &["a^3"]), 10).unwrap();
        assert_eq!(g.labels(), ["1", "a", "a^-1"]);
        let a = g.element_by_label("a").unwrap();
        assert_eq!(g.mul(a, a), g.element_by_label("a^-1").unwrap());
    }

    #[test]
    fn infinite_groups_hit_the_cap() {
        assert_eq!(todd_coxeter(&pres("a b", &["[a,b]"]), 500), Err(TcError::Exceeded(500)));
        assert_eq!(todd_coxeter(&pres("a", &[]), 0), Err(TcError::ZeroCap));
    }
}
