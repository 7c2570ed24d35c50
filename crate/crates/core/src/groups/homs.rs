//! Constrained homomorphism enumeration into a finite target.

use alloc::vec::Vec;

use super::finite::FiniteGroup;
use super::word::{Presentation, Word};

/// Images of the source generators, in source generator order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Homomorphism {
    pub images: Vec<usize>,
}

impl Homomorphism {
    pub fn apply(&self, target: &FiniteGroup, w: &Word) -> usize {
        target.eval_word(w, &self.images)
    }

    /// Order of the image subgroup.
    pub fn image_order(&self, target: &FiniteGroup) -> usize {
        target.subgroup_generated(&self.images).len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomOptions {
    /// Keep one lexicographically minimal representative per orbit under
    /// conjugation by the centralizer of the constrained images.
    pub up_to_conjugacy: bool,
    /// Stop after this many results.
    pub limit: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSearch {
    /// Sorted lexicographically by images.
    pub homs: Vec<Homomorphism>,
    /// True if the search stopped at `limit`.
    pub truncated: bool,
}

struct Search<'a> {
    target: &'a FiniteGroup,
    ngens: usize,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    /// (word, required image) checked once every generator in it is assigned
    checks_at: Vec<Vec<(Word, usize)>>,
    allowed_conjugators: Vec<usize>,
    options: &'a HomOptions,
    images: Vec<usize>,
    out: Vec<Homomorphism>,
    truncated: bool,
}

impl Search<'_> {
    fn run(&mut self, level: usize) {
        if self.truncated {
            return;
        }
        if level == self.ngens {
            if self.options.up_to_conjugacy && !self.is_canonical() {
                return;
            }
            self.out.push(Homomorphism { images: self.images.clone() });
            if self.options.limit.is_some_and(|l| self.out.len() >= l) {
                self.truncated = true;
            }
            return;
        }
        let gen = self.order[level];
        for ci in 0..self.candidates[gen].len() {
            self.images[gen] = self.candidates[gen][ci];
            if self.checks_at[level].iter().all(|(w, req)| self.target.eval_word(w, &self.images) == *req) {
                self.run(level + 1);
                if self.truncated {
                    return;
                }
            }
        }
    }

    fn is_canonical(&self) -> bool {
        let t = self.target;
        for &g in &self.allowed_conjugators {
            for &x in &self.images {
                let c = t.conjugate(g, x);
                if c < x {
                    return false;
                }
                if c > x {
                    break;
                }
            }
        }
        true
    }
}

/// All assignments of target elements to the source generators under
/// which every relator maps to the identity and each `(word, element)`
/// constraint holds. Generators are searched most-constrained first;
/// the result is in lexicographic order of the image tuple.
pub fn enumerate_homs(source: &Presentation, target: &FiniteGroup, constraints: &[(Word, usize)], options: &HomOptions) -> HomSearch {
    enumerate_homs_with_orders(source, None, target, constraints, options)
}

/// As [`enumerate_homs`], with optional element orders of the source
/// generators: a generator's image must have order dividing its own.
pub fn enumerate_homs_with_orders(
    source: &Presentation,
    generator_orders: Option<&[usize]>,
    target: &FiniteGroup,
    constraints: &[(Word, usize)],
    options: &HomOptions,
) -> HomSearch {
    let g = source.ngens();
    let n = target.order();
    let torders = target.element_orders();
    let mut candidates: Vec<Vec<usize>> = (0..g)
        .map(|k| {
            (0..n)
                .filter(|&x| generator_orders.is_none_or(|o| o[k] % torders[x] == 0))
                .filter(|&x| {
                    // relators and constraints in this generator alone
                    let mut imgs = alloc::vec![target.identity(); g];
                    imgs[k] = x;
                    let single = |w: &Word| w.letters().iter().all(|l| l.gen == k);
                    source.relators().iter().filter(|r| single(r)).all(|r| target.eval_word(r, &imgs) == target.identity())
                        && constraints.iter().filter(|(w, _)| single(w) && !w.is_empty()).all(|(w, req)| target.eval_word(w, &imgs) == *req)
                })
                .collect()
        })
        .collect();
    if constraints.iter().any(|(w, req)| w.is_empty() && *req != target.identity()) {
        candidates.iter_mut().for_each(Vec::clear);
    }

    // tightest generators first, stable on index
    let mut order: Vec<usize> = (0..g).collect();
    order.sort_by_key(|&k| (candidates[k].len(), k));
    let mut position = alloc::vec![0; g];
    for (lvl, &k) in order.iter().enumerate() {
        position[k] = lvl;
    }
    let mut checks_at: Vec<Vec<(Word, usize)>> = alloc::vec![Vec::new(); g.max(1)];
    let level_of = |w: &Word| w.letters().iter().map(|l| position[l.gen]).max().unwrap_or(0);
    for r in source.relators() {
        if !r.is_empty() {
            checks_at[level_of(r)].push((r.clone(), target.identity()));
        }
    }
    for (w, req) in constraints {
        if !w.is_empty() {
            checks_at[level_of(w)].push((w.clone(), *req));
        }
    }
    let fixed: Vec<usize> = constraints.iter().map(|(_, r)| *r).collect();
    let allowed_conjugators =
        if options.up_to_conjugacy { (0..n).filter(|&c| fixed.iter().all(|&f| target.conjugate(c, f) == f)).collect() } else { Vec::new() };
    if g == 0 {
        let ok = constraints.iter().all(|(_, req)| *req == target.identity());
        return HomSearch { homs: if ok { alloc::vec![Homomorphism { images: Vec::new() }] } else { Vec::new() }, truncated: false };
    }
    let mut s = Search {
        target,
        ngens: g,
        order,
        candidates,
        checks_at,
        allowed_conjugators,
        options,
        images: alloc::vec![target.identity(); g],
        out: Vec::new(),
        truncated: false,
    };
    s.run(0);
    let mut homs = s.out;
    homs.sort();
    HomSearch { homs, truncated: s.truncated }
}

/// Homs out of a finite group, searched on its generating set with
/// element constraints. Images are listed for `source.generating_set()`.
pub fn enumerate_homs_finite(
    source: &FiniteGroup,
    target: &FiniteGroup,
    constraints: &[(usize, usize)],
    options: &HomOptions,
) -> HomSearch {
    let (p, words) = source.cayley_presentation();
    let orders: Vec<usize> = source.generating_set().iter().map(|&s| source.element_order(s)).collect();
    let cons: Vec<(Word, usize)> = constraints.iter().map(|&(x, y)| (words[x].clone(), y)).collect();
    enumerate_homs_with_orders(&p, Some(&orders), target, &cons, options)
}

/// Extends generator images of a finite source to every element.
pub fn extend_to_elements(source: &FiniteGroup, target: &FiniteGroup, h: &Homomorphism) -> Vec<usize> {
    let (_, words) = source.cayley_presentation();
    words.iter().map(|w| target.eval_word(w, &h.images)).collect()
}
