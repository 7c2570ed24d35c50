//! Abelianization, mod-2 solving, and cyclic characters.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::snf::{smith_normal_form, IntMatrix};
use super::word::{Presentation, Word};

/// Cokernel of the relator exponent matrix, with the image of a chosen word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Invariant factors, each at least 2, each dividing the next.
    pub factors: Vec<BigInt>,
    /// Coordinates of z in the torsion part, reduced mod `factors`.
    pub z_torsion: Vec<BigInt>,
    /// Coordinates of z in the free part.
    pub z_free: Vec<BigInt>,
    /// Row `j` gives the coordinates of generator `j`: first the torsion
    /// coordinates (unreduced), then the free ones.
    pub generator_coords: Vec<Vec<BigInt>>,
}

impl AbelianInvariants {
    pub fn z_is_trivial(&self) -> bool {
        self.z_torsion.iter().all(Zero::is_zero) && self.z_free.iter().all(Zero::is_zero)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.factors.is_empty()
    }

    /// Exponent of the torsion subgroup (1 if torsion free).
    pub fn torsion_exponent(&self) -> BigInt {
        self.factors.last().cloned().unwrap_or_else(BigInt::one)
    }
}

/// Relator exponent-sum matrix, one row per relator.
pub fn exponent_matrix(p: &Presentation) -> IntMatrix {
    p.relators().iter().map(|r| r.exponent_sums(p.ngens()).into_iter().map(BigInt::from).collect()).collect()
}

pub fn abelianization(p: &Presentation, z: &Word) -> AbelianInvariants {
    let g = p.ngens();
    let a = exponent_matrix(p);
    let (diag, v) = if a.is_empty() {
        (Vec::new(), super::snf::identity_matrix(g))
    } else {
        let s = smith_normal_form(&a);
        (s.diagonal(), s.v)
    };
    // columns of V: nonzero diagonal positions give torsion (or trivial) coordinates
    let nonzero: Vec<usize> = (0..diag.len()).filter(|&i| !diag[i].is_zero()).collect();
    let torsion_cols: Vec<usize> = nonzero.iter().copied().filter(|&i| !diag[i].is_one()).collect();
    let free_cols: Vec<usize> = (nonzero.len()..g).collect();
    let factors: Vec<BigInt> = torsion_cols.iter().map(|&i| diag[i].clone()).collect();

    let cols: Vec<usize> = torsion_cols.iter().chain(free_cols.iter()).copied().collect();
    let generator_coords: Vec<Vec<BigInt>> = (0..g).map(|j| cols.iter().map(|&c| v[j][c].clone()).collect()).collect();

    let zs = z.exponent_sums(g);
    let mut coords = alloc::vec![BigInt::zero(); cols.len()];
    for (j, e) in zs.iter().enumerate() {
        if *e != 0 {
            for (k, c) in coords.iter_mut().enumerate() {
                *c += &generator_coords[j][k] * BigInt::from(*e);
            }
        }
    }
    let t = factors.len();
    let z_torsion = (0..t).map(|k| coords[k].mod_floor(&factors[k])).collect();
    let z_free = coords[t..].to_vec();
    AbelianInvariants { free_rank: free_cols.len(), factors, z_torsion, z_free, generator_coords }
}

/// Solutions of `R a = 0, z . a = 1` over the field with two elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Solutions {
    /// One solution, if any.
    pub particular: Option<Vec<u8>>,
    /// Basis of the homogeneous solution space of `R a = 0, z . a = 0`.
    pub kernel: Vec<Vec<u8>>,
}

impl F2Solutions {
    pub fn count(&self) -> BigUint {
        if self.particular.is_none() {
            BigUint::zero()
        } else {
            BigUint::one() << self.kernel.len()
        }
    }

    /// Every solution, in lexicographic order.
    pub fn all(&self) -> Vec<Vec<u8>> {
        let Some(p) = &self.particular else { return Vec::new() };
        let k = self.kernel.len();
        assert!(k < 24, "too many solutions to list");
        let mut out: Vec<Vec<u8>> = (0u32..1 << k)
            .map(|mask| {
                let mut s = p.clone();
                for (b, v) in self.kernel.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        for (x, y) in s.iter_mut().zip(v) {
                            *x ^= y;
                        }
                    }
                }
                s
            })
            .collect();
        out.sort();
        out
    }
}

/// Reduced row echelon form over F2; returns pivot columns.
fn rref_f2(rows: &mut Vec<Vec<u8>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Homomorphisms to Z/2 sending `z` to the nontrivial element, as generator images.
pub fn solve_mod2(p: &Presentation, z: &Word) -> F2Solutions {
    let g = p.ngens();
    // augmented system: relator rows with rhs 0, the z row with rhs 1
    let mut rows: Vec<Vec<u8>> = p
        .relators()
        .iter()
        .map(|r| {
            let mut row: Vec<u8> = r.exponent_sums(g).iter().map(|e| e.rem_euclid(2) as u8).collect();
            row.push(0);
            row
        })
        .collect();
    let mut zrow: Vec<u8> = z.exponent_sums(g).iter().map(|e| e.rem_euclid(2) as u8).collect();
    zrow.push(1);
    rows.push(zrow);
    let pivots = rref_f2(&mut rows, g + 1);
    if pivots.last() == Some(&g) {
        return F2Solutions { particular: None, kernel: Vec::new() };
    }
    let mut particular = alloc::vec![0u8; g];
    for (row, &c) in rows.iter().zip(&pivots) {
        particular[c] = row[g];
    }
    let kernel = (0..g)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = alloc::vec![0u8; g];
            v[free] = 1;
            for (row, &c) in rows.iter().zip(&pivots) {
                v[c] = row[free];
            }
            v
        })
        .collect();
    F2Solutions { particular: Some(particular), kernel }
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// A character `Ab -> Z/2m` with `z -> m`, as images of the presentation's
/// generators, or `None` if there is none. Free coordinates map to 0.
pub fn cyclic_character(inv: &AbelianInvariants, m: &BigInt) -> Option<Vec<BigInt>> {
    assert!(m.is_positive());
    if inv.z_free.iter().any(|c| !c.is_zero()) {
        return None;
    }
    let n = m * 2;
    // y_k = c_k * (n / gcd(d_k, n)) with c_k free; need sum a_k c_k = m mod n
    let steps: Vec<BigInt> = inv.factors.iter().map(|d| &n / d.gcd(&n)).collect();
    let a: Vec<BigInt> = inv.z_torsion.iter().zip(&steps).map(|(t, s)| (t * s).mod_floor(&n)).collect();
    let mut g = n.clone();
    let mut coeffs = alloc::vec![BigInt::zero(); a.len()];
    for k in 0..a.len() {
        let (h, x, y) = ext_gcd(&g, &a[k]);
        for c in coeffs.iter_mut() {
            *c *= &x;
        }
        coeffs[k] = y;
        g = h;
    }
    if !m.is_multiple_of(&g) {
        return None;
    }
    let scale = m / &g;
    let y: Vec<BigInt> = coeffs.iter().zip(&steps).map(|(c, s)| (c * &scale * s).mod_floor(&n)).collect();
    let images =
        inv.generator_coords.iter().map(|row| row.iter().zip(&y).fold(BigInt::zero(), |acc, (r, yk)| acc + r * yk).mod_floor(&n)).collect();
    Some(images)
}

/// Checks a candidate character on the presentation directly.
pub fn is_character(p: &Presentation, images: &[BigInt], modulus: &BigInt) -> bool {
    let eval = |w: &Word| -> BigInt {
        w.exponent_sums(p.ngens()).iter().zip(images).fold(BigInt::zero(), |acc, (e, x)| acc + x * BigInt::from(*e)).mod_floor(modulus)
    };
    p.relators().iter().all(|r| eval(r).is_zero())
}

pub fn eval_character(w: &Word, images: &[BigInt], modulus: &BigInt) -> BigInt {
    w.exponent_sums(images.len()).iter().zip(images).fold(BigInt::zero(), |acc, (e, x)| acc + x * BigInt::from(*e)).mod_floor(modulus)
}

/// Smallest `m` dividing half the torsion exponent with a character `z -> m` in `Z/2m`.
pub fn smallest_circle_modulus(inv: &AbelianInvariants) -> Option<BigInt> {
    if inv.z_is_trivial() {
        return None;
    }
    let e = inv.torsion_exponent();
    let half: BigInt = &e / 2;
    if let Some(h) = half.to_u64().filter(|&h| h <= 1 << 32) {
        for m in 1..=h {
            if h % m == 0 && cyclic_character(inv, &BigInt::from(m)).is_some() {
                return Some(BigInt::from(m));
            }
        }
    }
    cyclic_character(inv, &half).map(|_| half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn quoted_abelianizations() {
        let p = Presentation::parse("a b", &["a b a-1 b-1"]).unwrap();
        let inv = abelianization(&p, &Word::identity());
        assert_eq!((inv.free_rank, inv.factors.len()), (2, 0));
        assert!(inv.z_is_trivial());

        let p = Presentation::parse("s t", &["(st)^2 s^-3", "s^3 t^-5"]).unwrap();
        let inv = abelianization(&p, &p.parse_word("(st)^2").unwrap());
        assert!(inv.is_trivial() && inv.z_is_trivial());

        let p = Presentation::parse("a z", &["z^2", "a z a-1 z-1"]).unwrap();
        let inv = abelianization(&p, &Word::gen(1));
        assert_eq!(inv.free_rank, 1);
        assert_eq!(inv.factors, vec![b(2)]);
        assert_eq!(inv.z_torsion, vec![b(1)]);
    }

    #[test]
    fn mod2_solutions() {
        let klein = Presentation::parse("a z", &["a^2", "z^2", "[a,z]"]).unwrap();
        let s = solve_mod2(&klein, &Word::gen(1));
        assert_eq!(s.count(), BigUint::from(2u32));
        assert_eq!(s.all(), vec![vec![0, 1], vec![1, 1]]);

        let z4 = Presentation::parse("g", &["g^4"]).unwrap();
        assert_eq!(solve_mod2(&z4, &Word::gen(0).pow(2)).count(), BigUint::zero());
    }

    #[test]
    fn cyclic_characters() {
        let z4 = Presentation::parse("g", &["g^4"]).unwrap();
        let z = Word::gen(0).pow(2);
        let inv = abelianization(&z4, &z);
        assert!(cyclic_character(&inv, &b(1)).is_none());
        let chi = cyclic_character(&inv, &b(2)).unwrap();
        assert!(is_character(&z4, &chi, &b(4)));
        assert_eq!(eval_character(&z, &chi, &b(4)), b(2));
        assert_eq!(smallest_circle_modulus(&inv), Some(b(2)));

        let z6 = Presentation::parse("g", &["g^6"]).unwrap();
        let z = Word::gen(0).pow(3);
        let inv = abelianization(&z6, &z);
        let chi = cyclic_character(&inv, &b(3)).unwrap();
        assert!(is_character(&z6, &chi, &b(6)));
        assert_eq!(eval_character(&z, &chi, &b(6)), b(3));
        assert_eq!(smallest_circle_modulus(&inv), Some(b(1)));
    }

    #[test]
    fn mixed_torsion_character() {
        // Z/4 x Z/6 with z = (2, 3)
        let p = Presentation::parse("a c", &["a^4", "c^6", "[a,c]"]).unwrap();
        let z = p.parse_word("a^2 c^3").unwrap();
        let inv = abelianization(&p, &z);
        for m in 1..=6 {
            let m = b(m);
            if let Some(chi) = cyclic_character(&inv, &m) {
                let n = &m * 2;
                assert!(is_character(&p, &chi, &n));
                assert_eq!(eval_character(&z, &chi, &n), m);
            }
        }
        assert!(cyclic_character(&inv, &b(1)).is_some());
    }
}
