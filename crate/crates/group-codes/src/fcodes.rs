//! Group codes over F_p: left ideals in F_p G.
//!
//! A code is held as a reduced-row-echelon basis, which is canonical: equal
//! ideals always produce identical matrices, so codes can be compared and
//! deduplicated by their basis alone.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::falgebra::FAlgebraElement;
use crate::group::{same_group, FiniteGroup};
use crate::linalg;

/// Exhaustive minimum-distance enumeration refuses more than 2^28 codewords
/// by default.
pub const DEFAULT_DIM_CUTOFF: u32 = 28;

/// A group code over F_p with canonical reduced-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupCodeF {
    group: Arc<FiniteGroup>,
    p: u32,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl GroupCodeF {
    /// The code spanned by the given rows (echelonized; rows need not be
    /// independent). The caller is responsible for the span being a left
    /// ideal; see [`GroupCodeF::is_left_ideal`].
    pub fn from_span(group: Arc<FiniteGroup>, p: u32, rows: Vec<Vec<u32>>) -> Self {
        let mut basis: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| c % p).collect())
            .collect();
        let pivots = linalg::rref(&mut basis, p);
        GroupCodeF { group, p, basis, pivots }
    }

    pub fn zero(group: Arc<FiniteGroup>, p: u32) -> Self {
        GroupCodeF { group, p, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(group: Arc<FiniteGroup>, p: u32) -> Self {
        let n = group.order();
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0u32; n];
                r[i] = 1;
                r
            })
            .collect();
        Self::from_span(group, p, rows)
    }

    /// The left ideal F_p G e generated by an idempotent: the echelonized
    /// span of all translates g*e. `e` is a right identity of the result.
    pub fn from_idempotent(e: &FAlgebraElement) -> Result<Self> {
        if !e.is_idempotent() {
            return Err(Error::InvalidGenerator("element is not idempotent".into()));
        }
        let group = e.group().clone();
        let rows = (0..group.order())
            .map(|g| e.translate(g).coeffs().to_vec())
            .collect();
        Ok(Self::from_span(group, e.p(), rows))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis matrix; the deduplication key for codes.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<FAlgebraElement> {
        self.basis
            .iter()
            .map(|r| {
                FAlgebraElement::from_coeffs(self.group.clone(), self.p, r.clone()).unwrap()
            })
            .collect()
    }

    pub fn contains_row(&self, row: &[u32]) -> bool {
        linalg::in_row_space(&self.basis, &self.pivots, row, self.p)
    }

    pub fn contains(&self, e: &FAlgebraElement) -> bool {
        same_group(&self.group, e.group()) && self.p == e.p() && self.contains_row(e.coeffs())
    }

    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|r| other.contains_row(r))
    }

    /// Closure under left multiplication by every group element.
    pub fn is_left_ideal(&self) -> bool {
        for row in &self.basis {
            let e = FAlgebraElement::from_coeffs(self.group.clone(), self.p, row.clone()).unwrap();
            for g in 0..self.group.order() {
                if !self.contains_row(e.translate(g).coeffs()) {
                    return false;
                }
            }
        }
        true
    }

    /// The dual code w.r.t. the G-invariant dot product, computed as the
    /// nullspace of the Gram pairing.
    ///
    /// When a generating idempotent `e` is supplied the dual is also computed
    /// as F_p G (1 - e*); the two routes must agree, and disagreement is a
    /// hard failure.
    pub fn dual(&self, witness: Option<&FAlgebraElement>) -> Result<Self> {
        let n = self.group.order();
        let ns = linalg::nullspace(&self.basis, n, self.p);
        let by_nullspace = Self::from_span(self.group.clone(), self.p, ns);
        if by_nullspace.dim() + self.dim() != n {
            return Err(Error::InternalConsistency(format!(
                "dim C + dim C^perp = {} != |G| = {}",
                by_nullspace.dim() + self.dim(),
                n
            )));
        }
        if let Some(e) = witness {
            let one = FAlgebraElement::one(self.group.clone(), self.p);
            let f = one.sub(&e.star())?;
            let by_formula = Self::from_idempotent(&f)?;
            if by_formula != by_nullspace {
                return Err(Error::InternalConsistency(
                    "dual via 1 - e* disagrees with Gram nullspace".into(),
                ));
            }
        }
        Ok(by_nullspace)
    }

    /// An idempotent e in this code with b*e = b for every basis row b, if
    /// one exists (then the code equals F_p G e). Absent iff the code is not
    /// projective.
    pub fn projectivity_witness(&self) -> Option<FAlgebraElement> {
        let k = self.dim();
        if k == 0 {
            return Some(FAlgebraElement::zero(self.group.clone(), self.p));
        }
        let rows = self.basis_elements();
        // Unknowns t_j with e = sum t_j b_j; equations b_i * e = b_i.
        let n = self.group.order();
        let mut system = Vec::with_capacity(k * n);
        let mut rhs = Vec::with_capacity(k * n);
        for b_i in &rows {
            let products: Vec<FAlgebraElement> =
                rows.iter().map(|b_j| b_i.mul(b_j).unwrap()).collect();
            for coord in 0..n {
                let eq: Vec<u32> = products.iter().map(|p_ij| p_ij.coeffs()[coord]).collect();
                system.push(eq);
                rhs.push(b_i.coeffs()[coord]);
            }
        }
        let t = linalg::solve(&system, &rhs, k, self.p)?;
        let mut e = FAlgebraElement::zero(self.group.clone(), self.p);
        for (t_j, b_j) in t.iter().zip(&rows) {
            e = e.add(&b_j.scale(*t_j)).unwrap();
        }
        debug_assert!(e.is_idempotent());
        Some(e)
    }

    /// True iff the G-invariant form vanishes on all pairs of basis rows.
    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.basis_elements();
        rows.iter().all(|a| rows.iter().all(|b| a.bilinear_form(b).unwrap() == 0))
    }

    /// Minimum Hamming weight over all nonzero codewords, or `None` for the
    /// zero code. Exhaustive: refuses codes with more than `2^cutoff`
    /// codewords (default cutoff [`DEFAULT_DIM_CUTOFF`]).
    pub fn min_hamming_distance(&self, cutoff: Option<u32>) -> Result<Option<u32>> {
        let cutoff = cutoff.unwrap_or(DEFAULT_DIM_CUTOFF);
        let k = self.dim() as u32;
        if k == 0 {
            return Ok(None);
        }
        let words = (self.p as f64).powi(k as i32);
        if words > (1u64 << cutoff.min(63)) as f64 {
            return Err(Error::BudgetExceeded {
                required: words as u64,
                budget: 1u64 << cutoff.min(63),
            });
        }
        if self.p == 2 && self.group.order() <= 64 {
            // Gray-code walk over packed rows: one XOR per codeword.
            let rows: Vec<u64> = self
                .basis
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .fold(0u64, |m, (i, &c)| if c != 0 { m | (1 << i) } else { m })
                })
                .collect();
            let mut word = 0u64;
            let mut best = u32::MAX;
            for i in 1u64..(1u64 << k) {
                word ^= rows[i.trailing_zeros() as usize];
                best = best.min(word.count_ones());
                if best == 1 {
                    break;
                }
            }
            return Ok(Some(best));
        }
        // Generic odometer: each step adds one basis row to the running word.
        let n = self.group.order();
        let p = self.p;
        let mut word = vec![0u32; n];
        let mut digits = vec![0u32; k as usize];
        let mut best = u32::MAX;
        let total = (p as u64).pow(k);
        let add_row = |word: &mut Vec<u32>, row: &[u32]| {
            for (w, &r) in word.iter_mut().zip(row) {
                *w = (*w + r) % p;
            }
        };
        for _ in 1..total {
            let mut d = 0;
            loop {
                add_row(&mut word, &self.basis[d]);
                digits[d] += 1;
                if digits[d] < p {
                    break;
                }
                digits[d] = 0; // p additions of a row cancel mod p
                d += 1;
            }
            let w = word.iter().filter(|&&c| c != 0).count() as u32;
            best = best.min(w);
            if best == 1 {
                break;
            }
        }
        Ok(Some(best))
    }
}
