//! Arithmetic in the group algebra F_p G over the residue field.
//!
//! Elements are dense coefficient vectors indexed by group elements. All
//! operations are pure; elements are immutable values and safe for
//! data-parallel scanning. A packed fast path for p = 2 lives in
//! [`crate::packed`] and must agree with the generic path here (tested).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{same_group, FiniteGroup};

/// An element of F_p G: `coeffs[g]` is the coefficient of group element `g`.
///
/// Invariants: all coefficients lie in `[0, p)` and the vector length equals
/// the group order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FAlgebraElement {
    group: Arc<FiniteGroup>,
    p: u32,
    coeffs: Vec<u32>,
}

impl FAlgebraElement {
    pub fn zero(group: Arc<FiniteGroup>, p: u32) -> Self {
        let n = group.order();
        FAlgebraElement { group, p, coeffs: vec![0; n] }
    }

    pub fn one(group: Arc<FiniteGroup>, p: u32) -> Self {
        let mut e = Self::zero(group, p);
        e.coeffs[0] = 1 % e.p;
        e
    }

    /// The basis element for group index `g`.
    pub fn basis(group: Arc<FiniteGroup>, p: u32, g: usize) -> Self {
        let mut e = Self::zero(group, p);
        e.coeffs[g] = 1 % e.p;
        e
    }

    pub fn from_coeffs(group: Arc<FiniteGroup>, p: u32, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidParameter(format!(
                "coefficient vector length {} != group order {}",
                coeffs.len(),
                group.order()
            )));
        }
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        Ok(FAlgebraElement { group, p, coeffs })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !same_group(&self.group, &other.group) || self.p != other.p {
            return Err(Error::IncompatibleOperands(format!(
                "({}, p={}) vs ({}, p={})",
                self.group.label(),
                self.p,
                other.group.label(),
                other.p
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        Ok(FAlgebraElement { group: self.group.clone(), p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        Ok(FAlgebraElement { group: self.group.clone(), p: self.p, coeffs })
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.p;
        let coeffs = self.coeffs.iter().map(|&a| (a * c) % self.p).collect();
        FAlgebraElement { group: self.group.clone(), p: self.p, coeffs }
    }

    /// Convolution product: `result[gh] += a[g] * b[h]` over all pairs.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.group.order();
        let mut coeffs = vec![0u64; n];
        for g in 0..n {
            let a = self.coeffs[g] as u64;
            if a == 0 {
                continue;
            }
            for h in 0..n {
                let b = other.coeffs[h] as u64;
                if b == 0 {
                    continue;
                }
                let k = self.group.mul(g, h);
                coeffs[k] = (coeffs[k] + a * b) % self.p as u64;
            }
        }
        Ok(FAlgebraElement {
            group: self.group.clone(),
            p: self.p,
            coeffs: coeffs.into_iter().map(|c| c as u32).collect(),
        })
    }

    /// Left translate by a group element: `g * self`.
    pub fn translate(&self, g: usize) -> Self {
        let n = self.group.order();
        let mut coeffs = vec![0u32; n];
        for h in 0..n {
            coeffs[self.group.mul(g, h)] = self.coeffs[h];
        }
        FAlgebraElement { group: self.group.clone(), p: self.p, coeffs }
    }

    /// The conjugation map `g -> g^-1` extended linearly. An
    /// anti-automorphism and the adjoint of the G-invariant dot product.
    pub fn star(&self) -> Self {
        let n = self.group.order();
        let mut coeffs = vec![0u32; n];
        for g in 0..n {
            coeffs[g] = self.coeffs[self.group.inv(g)];
        }
        FAlgebraElement { group: self.group.clone(), p: self.p, coeffs }
    }

    /// The symmetric, non-degenerate, G-invariant form: sum of a_g b_g mod p.
    ///
    /// Equals the identity coefficient of `self * other.star()`.
    pub fn bilinear_form(&self, other: &Self) -> Result<u32> {
        self.check_compatible(other)?;
        let mut acc = 0u64;
        for (&a, &b) in self.coeffs.iter().zip(&other.coeffs) {
            acc = (acc + a as u64 * b as u64) % self.p as u64;
        }
        Ok(acc as u32)
    }

    pub fn is_idempotent(&self) -> bool {
        match self.mul(self) {
            Ok(sq) => sq == *self,
            Err(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elem(group: &Arc<FiniteGroup>, p: u32, coeffs: &[u32]) -> FAlgebraElement {
        FAlgebraElement::from_coeffs(group.clone(), p, coeffs.to_vec()).unwrap()
    }

    /// Independent oracle for C_n: multiply polynomials mod (x^n - 1, p).
    fn cyclic_convolve(a: &[u32], b: &[u32], n: usize, p: u32) -> Vec<u32> {
        let mut out = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                out[(i + j) % n] = (out[(i + j) % n] + a[i] * b[j]) % p;
            }
        }
        out
    }

    #[test]
    fn mul_matches_polynomial_oracle_f2c3() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        // (1+x)(1+x+x^2) = 0 in F2[x]/(x^3-1).
        let a = elem(&c3, 2, &[1, 1, 0]);
        let b = elem(&c3, 2, &[1, 1, 1]);
        assert_eq!(cyclic_convolve(&[1, 1, 0], &[1, 1, 1], 3, 2), vec![0, 0, 0]);
        assert!(a.mul(&b).unwrap().is_zero());

        // (x+x^2)^2 = x+x^2.
        let e = elem(&c3, 2, &[0, 1, 1]);
        assert_eq!(cyclic_convolve(&[0, 1, 1], &[0, 1, 1], 3, 2), vec![0, 1, 1]);
        assert_eq!(e.mul(&e).unwrap(), e);
    }

    #[test]
    fn unit_law() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let one = FAlgebraElement::one(d6.clone(), 3);
        let b = elem(&d6, 3, &[2, 1, 0, 2, 0, 1]);
        assert_eq!(one.mul(&b).unwrap(), b);
        assert_eq!(b.mul(&one).unwrap(), b);
    }

    #[test]
    fn star_basics() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let x = FAlgebraElement::basis(c3.clone(), 2, 1);
        assert_eq!(x.star(), FAlgebraElement::basis(c3.clone(), 2, 2));
        let e = elem(&c3, 2, &[0, 1, 1]);
        assert_eq!(e.star(), e); // inverse-closed support
    }

    #[test]
    fn bilinear_form_values() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let a = elem(&c3, 2, &[1, 1, 0]);
        let b = elem(&c3, 2, &[0, 1, 1]);
        assert_eq!(a.bilinear_form(&b).unwrap(), 1);

        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v = elem(&c2, 2, &[1, 1]);
        assert_eq!(v.bilinear_form(&v).unwrap(), 0); // two ones, char 2
    }

    #[test]
    fn form_is_identity_coefficient_of_a_bstar() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let a = elem(&d6, 3, &[1, 2, 0, 1, 1, 2]);
        let b = elem(&d6, 3, &[0, 1, 2, 2, 0, 1]);
        let prod = a.mul(&b.star()).unwrap();
        assert_eq!(a.bilinear_form(&b).unwrap(), prod.coeffs()[0]);
    }

    #[test]
    fn idempotent_examples() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert!(FAlgebraElement::zero(c3.clone(), 2).is_idempotent());
        assert!(FAlgebraElement::one(c3.clone(), 2).is_idempotent());
        assert!(elem(&c3, 2, &[0, 1, 1]).is_idempotent());

        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(!elem(&c2, 2, &[1, 1]).is_idempotent()); // (1+x)^2 = 0
    }

    #[test]
    fn mismatched_operands_rejected() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let a = FAlgebraElement::one(c3.clone(), 2);
        let b = FAlgebraElement::one(c4, 2);
        assert!(a.mul(&b).is_err());
        let c = FAlgebraElement::one(c3, 3);
        assert!(a.add(&c).is_err());
    }

    proptest! {
        #[test]
        fn associativity_and_distributivity(
            seed in proptest::collection::vec(0u32..6, 3 * 8),
            p in prop::sample::select(vec![2u32, 3, 5]),
        ) {
            let g = FiniteGroup::dihedral(4).unwrap(); // order 8
            let n = g.order();
            let a = elem(&g, p, &seed[0..n]);
            let b = elem(&g, p, &seed[n..2 * n]);
            let c = elem(&g, p, &seed[2 * n..3 * n]);
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&ab_c, &a_bc);
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
        }

        #[test]
        fn star_is_anti_automorphism(
            seed in proptest::collection::vec(0u32..3, 2 * 12),
        ) {
            let g = FiniteGroup::dihedral(6).unwrap();
            let n = g.order();
            let a = elem(&g, 3, &seed[0..n]);
            let b = elem(&g, 3, &seed[n..2 * n]);
            let lhs = a.mul(&b).unwrap().star();
            let rhs = b.star().mul(&a.star()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(a.star().star(), a);
        }

        #[test]
        fn form_g_invariance_and_adjointness(
            seed in proptest::collection::vec(0u32..2, 3 * 10),
            g_idx in 0usize..10,
        ) {
            let g = FiniteGroup::dihedral(5).unwrap();
            let n = g.order();
            let a = elem(&g, 2, &seed[0..n]);
            let b = elem(&g, 2, &seed[n..2 * n]);
            let c = elem(&g, 2, &seed[2 * n..3 * n]);
            // (ga, gb) = (a, b)
            let ga = a.translate(g_idx);
            let gb = b.translate(g_idx);
            prop_assert_eq!(
                ga.bilinear_form(&gb).unwrap(),
                a.bilinear_form(&b).unwrap()
            );
            // (a c, b) = (a, b c*)
            let lhs = a.mul(&c).unwrap().bilinear_form(&b).unwrap();
            let rhs = a.bilinear_form(&b.mul(&c.star()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
