//! Graded subspaces and ideals of truncated `Vec_n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{basis_of_degree, bracket_monomials, Truncation, VecElem, VecError, VecMonomial};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::Rational;

/// Largest truncation level accepted by [`enumerate_graded_ideals_vec1`].
pub const MAX_EXHAUSTIVE_DEGREE: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("truncation level {0} exceeds the exhaustive enumeration cap {MAX_EXHAUSTIVE_DEGREE}")]
    TooLarge(u32),
    #[error("truncation level {0} is below the supported minimum 3")]
    TooSmall(u32),
    #[error(transparent)]
    Vec(#[from] VecError),
}

/// A subspace of truncated `Vec_n` spanned by homogeneous vectors, stored
/// as one reduced echelon basis per Euler degree `0..=K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    n: usize,
    level: Truncation,
    pieces: Vec<Echelon<VecMonomial>>,
}

impl GradedSubspace {
    pub fn zero(n: usize, level: Truncation) -> Self {
        GradedSubspace { n, level, pieces: (0..=level.0).map(|_| Echelon::new()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> Truncation {
        self.level
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Echelon::rank).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.iter().map(Echelon::rank).sum()
    }

    /// Degrees whose component is nonzero.
    pub fn support(&self) -> Vec<u32> {
        (0..=self.level.0).filter(|&d| self.pieces[d as usize].rank() > 0).collect()
    }

    /// Whether degree `d` is the full graded piece of `Vec_n`.
    pub fn is_full_in_degree(&self, d: u32) -> bool {
        self.pieces[d as usize].rank() == basis_of_degree(self.n, d).len()
    }

    /// Basis vectors, degree by degree, as elements of `Vec_n`.
    pub fn basis(&self) -> Vec<VecElem> {
        self.pieces
            .iter()
            .flat_map(|e| e.rows().iter())
            .map(|row| {
                let mut v = VecElem::zero(self.n);
                for (m, c) in row {
                    v.add_term(m.clone(), c.clone());
                }
                v
            })
            .collect()
    }

    /// Inserts a homogeneous vector; returns the new basis row if the span grew.
    fn insert_homogeneous(&mut self, v: &VecElem) -> Option<VecElem> {
        let deg = v.max_degree()?;
        let row: SparseVec<VecMonomial> = v.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        let added = self.pieces[deg as usize].insert(row)?;
        let mut out = VecElem::zero(self.n);
        for (m, c) in added {
            out.add_term(m, c);
        }
        Some(out)
    }

    pub fn contains(&self, v: &VecElem) -> bool {
        v.grade_decompose().into_iter().all(|(d, part)| {
            if d > self.level.0 {
                return part.is_zero();
            }
            let row: SparseVec<VecMonomial> = part.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            self.pieces[d as usize].contains(&row)
        })
    }

    /// Closed under bracket with every basis monomial of the truncated algebra.
    pub fn is_ideal(&self) -> bool {
        let monomials = self.level.basis(self.n);
        self.basis().iter().all(|b| {
            monomials.iter().all(|m| {
                let br = VecElem::monomial(m.clone()).bracket(b).expect("same dimension").truncate(self.level.0);
                self.contains(&br)
            })
        })
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }
}

/// Smallest graded ideal of `Vec_n / (degree > level)` containing `generators`.
///
/// Each generator is split into homogeneous components (the ideal contains
/// them, since `ad(E)` acts with distinct eigenvalues on distinct degrees);
/// new basis rows are bracketed with every basis monomial until no new
/// direction appears.
pub fn graded_ideal_closure(generators: &[VecElem], n: usize, level: Truncation) -> Result<GradedSubspace, IdealError> {
    let mut space = GradedSubspace::zero(n, level);
    let mut queue: VecDeque<VecElem> = VecDeque::new();
    for g in generators {
        if g.dim() != n {
            return Err(VecError::DimensionMismatch(n, g.dim()).into());
        }
        level.check(g)?;
        queue.extend(g.grade_decompose().into_values());
    }
    let by_degree: Vec<Vec<VecMonomial>> = (0..=level.0).map(|d| basis_of_degree(n, d)).collect();
    while let Some(v) = queue.pop_front() {
        let Some(row) = space.insert_homogeneous(&v) else { continue };
        let deg = row.max_degree().expect("nonzero row");
        for e in 0..=(level.0 - deg) {
            for m in &by_degree[e as usize] {
                let mut br = VecElem::zero(n);
                for (rm, rc) in row.terms() {
                    for (t, k) in bracket_monomials(m, rm) {
                        br.add_term(t, rc * Rational::from_integer(k.into()));
                    }
                }
                if !br.is_zero() {
                    queue.push_back(br);
                }
            }
        }
    }
    Ok(space)
}

/// All graded ideals of truncated `Vec_1`, as sorted degree sets.
///
/// The graded pieces of `Vec_1` are the lines spanned by `x^(d+1) d`, and
/// `[x^(a+1) d, x^(b+1) d] = (b - a) x^(a+b+1) d`. A degree set `S` spans an
/// ideal iff `a + b` lies in `S` whenever `a` does, `b != a` and
/// `a + b <= K`. All `2^(K+1)` subsets are checked.
pub fn enumerate_graded_ideals_vec1(level: u32) -> Result<Vec<Vec<u32>>, IdealError> {
    if level > MAX_EXHAUSTIVE_DEGREE {
        return Err(IdealError::TooLarge(level));
    }
    if level < 3 {
        return Err(IdealError::TooSmall(level));
    }
    let k = level;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << (k + 1)) {
        let member = |d: u32| mask & (1 << d) != 0;
        let closed = (0..=k).filter(|&a| member(a)).all(|a| (0..=(k - a)).all(|b| b == a || member(a + b)));
        if closed {
            out.push((0..=k).filter(|&d| member(d)).collect::<Vec<u32>>());
        }
    }
    out.sort();
    Ok(out)
}

/// Basis of `sl_n` inside degree zero: `x_i d_j` for `i != j` and
/// `x_i d_i - x_(i+1) d_(i+1)`.
pub fn sl_basis(n: usize) -> Vec<VecElem> {
    let unit = |i: usize| {
        let mut a = vec![0; n];
        a[i] = 1;
        a
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(VecElem::mono(&unit(i), j, 1));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        out.push(VecElem::mono(&unit(i), i, 1).sub(&VecElem::mono(&unit(i + 1), i + 1, 1)));
    }
    out
}

/// Outcome of [`sl_span_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlSpanReport {
    pub n: usize,
    pub level: u32,
    /// `n^2 - 1` in degree 0, then the full graded dimension.
    pub expected_dims: Vec<usize>,
    pub computed_dims: Vec<usize>,
    /// Every degree-0 vector in the span is trace free.
    pub traceless_degree_zero: bool,
    pub pass: bool,
}

/// Span of `[m, s]` over truncated basis monomials `m` and `s` in `sl_n`.
///
/// The span should be `sl_n` in degree zero (the Euler direction is never
/// reached) and everything in degrees `1..=K`.
pub fn sl_span_check(n: usize, level: u32) -> SlSpanReport {
    let t = Truncation(level);
    let sl = sl_basis(n);
    let mut pieces: Vec<Echelon<VecMonomial>> = (0..=level).map(|_| Echelon::new()).collect();
    for m in t.basis(n) {
        let mv = VecElem::monomial(m);
        for s in &sl {
            let br = mv.bracket(s).expect("same dimension");
            for (d, part) in br.grade_decompose() {
                if d <= level {
                    pieces[d as usize].insert(part.terms().map(|(m, c)| (m.clone(), c.clone())).collect());
                }
            }
        }
    }
    let computed_dims: Vec<usize> = pieces.iter().map(Echelon::rank).collect();
    let mut expected_dims = vec![n * n - 1];
    expected_dims.extend((1..=level).map(|d| basis_of_degree(n, d).len()));
    let traceless_degree_zero = pieces[0].rows().iter().all(|row| {
        let trace: Rational =
            row.iter().filter(|(m, _)| m.alpha.get(m.dir) == 1).map(|(_, c)| c.clone()).fold(Rational::zero(), |a, b| a + b);
        trace.is_zero()
    });
    let pass = traceless_degree_zero && computed_dims == expected_dims;
    SlSpanReport { n, level, expected_dims, computed_dims, traceless_degree_zero, pass }
}
