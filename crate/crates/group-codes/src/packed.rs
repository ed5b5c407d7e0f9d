//! Bit-packed F_2 group algebra for groups of order <= 64: elements are u64
//! masks, multiplication runs on per-element translation tables, and the
//! exhaustive scans (idempotents, minimum weights) work on packed rows.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::falgebra::FAlgebraElement;
use crate::group::FiniteGroup;

/// F_2 G with |G| <= 64, one bit per group element.
pub struct PackedAlgebra {
    group: Arc<FiniteGroup>,
    n: usize,
    chunks: usize,
    /// `trans[(g * chunks + c) * 256 + byte]` is the image of byte `byte` of
    /// chunk `c` under left translation by `g`: 3 table lookups per
    /// translation at n = 24.
    trans: Vec<u64>,
    star_perm: Vec<u8>,
}

impl PackedAlgebra {
    pub fn new(group: Arc<FiniteGroup>) -> Result<Self> {
        let n = group.order();
        if n > 64 {
            return Err(Error::InvalidParameter(format!(
                "packed algebra supports |G| <= 64, got {n}"
            )));
        }
        let chunks = n.div_ceil(8);
        let mut trans = vec![0u64; n * chunks * 256];
        for g in 0..n {
            for c in 0..chunks {
                let base = (g * chunks + c) * 256;
                for byte in 0usize..256 {
                    let mut out = 0u64;
                    let mut bits = byte;
                    while bits != 0 {
                        let h = 8 * c + bits.trailing_zeros() as usize;
                        if h < n {
                            out |= 1u64 << group.mul(g, h);
                        }
                        bits &= bits - 1;
                    }
                    trans[base + byte] = out;
                }
            }
        }
        let star_perm = (0..n).map(|g| group.inv(g) as u8).collect();
        Ok(PackedAlgebra { group, n, chunks, trans, star_perm })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Left translation g * b.
    #[inline]
    pub fn translate(&self, g: usize, b: u64) -> u64 {
        let mut out = 0u64;
        let base = g * self.chunks * 256;
        for c in 0..self.chunks {
            let byte = ((b >> (8 * c)) & 0xff) as usize;
            out ^= self.trans[base + c * 256 + byte];
        }
        out
    }

    /// Product in F_2 G: XOR of translates of `b` over the support of `a`.
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        let mut bits = a;
        while bits != 0 {
            let g = bits.trailing_zeros() as usize;
            out ^= self.translate(g, b);
            bits &= bits - 1;
        }
        out
    }

    #[inline]
    pub fn is_idempotent(&self, a: u64) -> bool {
        self.mul(a, a) == a
    }

    /// The conjugation map g -> g^-1.
    #[inline]
    pub fn star(&self, a: u64) -> u64 {
        let mut out = 0u64;
        let mut bits = a;
        while bits != 0 {
            let g = bits.trailing_zeros() as usize;
            out |= 1u64 << self.star_perm[g];
            bits &= bits - 1;
        }
        out
    }

    pub fn pack(&self, e: &FAlgebraElement) -> u64 {
        e.coeffs()
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, &c)| if c != 0 { m | (1 << i) } else { m })
    }

    pub fn unpack(&self, mask: u64) -> FAlgebraElement {
        let coeffs = (0..self.n).map(|i| ((mask >> i) & 1) as u32).collect();
        FAlgebraElement::from_coeffs(self.group.clone(), 2, coeffs).unwrap()
    }

    /// Canonical packed basis of the left ideal F_2 G e.
    pub fn ideal_basis(&self, e: u64) -> Vec<u64> {
        let mut rows: Vec<u64> = (0..self.n).map(|g| self.translate(g, e)).collect();
        rref_packed(&mut rows, self.n);
        rows
    }
}

/// In-place reduced row echelon form of packed F_2 rows; returns pivot
/// columns. Zero rows are dropped; the result is canonical.
pub fn rref_packed(rows: &mut Vec<u64>, ncols: usize) -> Vec<usize> {
    rows.retain(|&r| r != 0);
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for col in 0..ncols {
        let bit = 1u64 << col;
        let Some(r) = (next..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(next, r);
        let pivot_row = rows[next];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

/// Basis of `{v : row . v = 0 for all rows}` over F_2 (dot product =
/// parity of AND).
pub fn nullspace_packed(rows: &[u64], ncols: usize) -> Vec<u64> {
    let mut m = rows.to_vec();
    let pivots = rref_packed(&mut m, ncols);
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = 1u64 << free;
        for (row, &pc) in m.iter().zip(&pivots) {
            if row & (1u64 << free) != 0 {
                v |= 1u64 << pc;
            }
        }
        out.push(v);
    }
    out
}

/// Minimum Hamming weight of the packed row space, by a Gray-code walk.
/// Stops early and returns the offending weight as soon as a codeword of
/// weight <= `floor` appears (that weight is then <= floor, signalling "no
/// better than floor"). The zero code reports `u32::MAX`.
pub fn min_weight_upto(rows: &[u64], floor: u32) -> u32 {
    let k = rows.len();
    if k == 0 {
        return u32::MAX;
    }
    assert!(k < 64, "dimension too large for exhaustive walk");
    let mut word = 0u64;
    let mut best = u32::MAX;
    for i in 1u64..(1u64 << k) {
        word ^= rows[i.trailing_zeros() as usize];
        let w = word.count_ones();
        if w < best {
            best = w;
            if best <= floor {
                return best;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fcodes::GroupCodeF;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn packed_mul_matches_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for group in [
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
        ] {
            let pa = PackedAlgebra::new(group.clone()).unwrap();
            let n = group.order();
            for _ in 0..50 {
                let a: u64 = rng.gen_range(0..1u64 << n);
                let b: u64 = rng.gen_range(0..1u64 << n);
                let dense = pa.unpack(a).mul(&pa.unpack(b)).unwrap();
                assert_eq!(pa.mul(a, b), pa.pack(&dense));
                assert_eq!(pa.star(a), pa.pack(&pa.unpack(a).star()));
            }
        }
    }

    #[test]
    fn packed_idempotents_match_dense() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let pa = PackedAlgebra::new(c3).unwrap();
        let idems: Vec<u64> = (0..8).filter(|&m| pa.is_idempotent(m)).collect();
        // {0, 1, x+x^2, 1+x+x^2}
        assert_eq!(idems, vec![0b000, 0b001, 0b110, 0b111]);
    }

    #[test]
    fn rref_and_nullspace() {
        let mut rows = vec![0b110u64, 0b011, 0b101];
        let pivots = rref_packed(&mut rows, 3);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows.len(), 2);
        let ns = nullspace_packed(&rows, 3);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for r in &rows {
                assert_eq!((v & r).count_ones() % 2, 0);
            }
        }
    }

    #[test]
    fn ideal_basis_matches_group_code() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let pa = PackedAlgebra::new(c3.clone()).unwrap();
        let e = 0b110u64; // x + x^2
        let basis = pa.ideal_basis(e);
        let code = GroupCodeF::from_idempotent(&pa.unpack(e)).unwrap();
        let expected: Vec<u64> = code.basis().iter().map(|r| {
            r.iter().enumerate().fold(0u64, |m, (i, &c)| if c != 0 { m | 1 << i } else { m })
        }).collect();
        assert_eq!(basis, expected);
    }

    #[test]
    fn min_weight_matches_dense_walk() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let pa = PackedAlgebra::new(d6.clone()).unwrap();
        for e in (0..64u64).filter(|&m| pa.is_idempotent(m)) {
            let basis = pa.ideal_basis(e);
            let packed = min_weight_upto(&basis, 0);
            let code = GroupCodeF::from_idempotent(&pa.unpack(e)).unwrap();
            match code.min_hamming_distance(None).unwrap() {
                Some(d) => assert_eq!(packed, d),
                None => assert_eq!(packed, u32::MAX),
            }
        }
    }

    #[test]
    fn min_weight_floor_aborts() {
        // Full space contains weight-1 words; any floor >= 1 stops at 1.
        let rows = vec![0b001u64, 0b010, 0b100];
        assert!(min_weight_upto(&rows, 2) <= 2);
        assert_eq!(min_weight_upto(&rows, 0), 1);
    }
}
