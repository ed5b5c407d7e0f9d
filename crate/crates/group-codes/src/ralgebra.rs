//! Arithmetic in the group algebra RG over a chain ring, and idempotent
//! lifting from the residue field.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::falgebra::FAlgebraElement;
use crate::group::{same_group, FiniteGroup};
use crate::ring::{ChainRingSpec, RScalar};

/// An element of RG: `coeffs[g]` is the coefficient of group element `g`,
/// canonically reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RAlgebraElement {
    group: Arc<FiniteGroup>,
    spec: ChainRingSpec,
    coeffs: Vec<RScalar>,
}

impl RAlgebraElement {
    pub fn zero(group: Arc<FiniteGroup>, spec: ChainRingSpec) -> Self {
        let n = group.order();
        RAlgebraElement { group, spec, coeffs: vec![RScalar(0); n] }
    }

    pub fn one(group: Arc<FiniteGroup>, spec: ChainRingSpec) -> Self {
        let mut e = Self::zero(group, spec);
        e.coeffs[0] = spec.one();
        e
    }

    pub fn from_coeffs(
        group: Arc<FiniteGroup>,
        spec: ChainRingSpec,
        coeffs: Vec<RScalar>,
    ) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidParameter(format!(
                "coefficient vector length {} != group order {}",
                coeffs.len(),
                group.order()
            )));
        }
        let m = spec.modulus();
        let coeffs = coeffs.into_iter().map(|c| RScalar(c.0 % m)).collect();
        Ok(RAlgebraElement { group, spec, coeffs })
    }

    /// Coefficientwise canonical lift of a residue-field element (every
    /// coefficient taken from `{0..p-1}`).
    pub fn lift_of(e: &FAlgebraElement, spec: ChainRingSpec) -> Result<Self> {
        if e.p() != spec.p {
            return Err(Error::IncompatibleOperands(format!(
                "field element over F_{} vs ring with residue field F_{}",
                e.p(),
                spec.p
            )));
        }
        let coeffs = e.coeffs().iter().map(|&c| spec.alpha_j_up(c, 0)).collect();
        Ok(RAlgebraElement { group: e.group().clone(), spec, coeffs })
    }

    /// Reduction mod the maximal ideal: the image under alpha_0 in F_p G.
    pub fn reduce_mod_m(&self) -> FAlgebraElement {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| (c.0 % self.spec.p as u64) as u32)
            .collect();
        FAlgebraElement::from_coeffs(self.group.clone(), self.spec.p, coeffs).unwrap()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn spec(&self) -> ChainRingSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[RScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.0 == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !same_group(&self.group, &other.group) || self.spec != other.spec {
            return Err(Error::IncompatibleOperands(format!(
                "({}, {}) vs ({}, {})",
                self.group.label(),
                self.spec.spec_string(),
                other.group.label(),
                other.spec.spec_string()
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
            .map(|(&a, &b)| self.spec.add(a, b))
            .collect();
        Ok(RAlgebraElement { group: self.group.clone(), spec: self.spec, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.spec.sub(a, b))
            .collect();
        Ok(RAlgebraElement { group: self.group.clone(), spec: self.spec, coeffs })
    }

    pub fn scale(&self, c: RScalar) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.spec.mul(a, c)).collect();
        RAlgebraElement { group: self.group.clone(), spec: self.spec, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.group.order();
        let mut coeffs = vec![RScalar(0); n];
        for g in 0..n {
            let a = self.coeffs[g];
            if a.0 == 0 {
                continue;
            }
            for h in 0..n {
                let b = other.coeffs[h];
                if b.0 == 0 {
                    continue;
                }
                let k = self.group.mul(g, h);
                coeffs[k] = self.spec.add(coeffs[k], self.spec.mul(a, b));
            }
        }
        Ok(RAlgebraElement { group: self.group.clone(), spec: self.spec, coeffs })
    }

    pub fn translate(&self, g: usize) -> Self {
        let n = self.group.order();
        let mut coeffs = vec![RScalar(0); n];
        for h in 0..n {
            coeffs[self.group.mul(g, h)] = self.coeffs[h];
        }
        RAlgebraElement { group: self.group.clone(), spec: self.spec, coeffs }
    }

    pub fn star(&self) -> Self {
        let n = self.group.order();
        let mut coeffs = vec![RScalar(0); n];
        for g in 0..n {
            coeffs[g] = self.coeffs[self.group.inv(g)];
        }
        RAlgebraElement { group: self.group.clone(), spec: self.spec, coeffs }
    }

    /// The G-invariant form on RG: sum of a_g b_g.
    pub fn bilinear_form(&self, other: &Self) -> Result<RScalar> {
        self.check_compatible(other)?;
        let mut acc = RScalar(0);
        for (&a, &b) in self.coeffs.iter().zip(&other.coeffs) {
            acc = self.spec.add(acc, self.spec.mul(a, b));
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self) -> bool {
        match self.mul(self) {
            Ok(sq) => sq == *self,
            Err(_) => false,
        }
    }

    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|c| c.0 != 0).count()
    }
}

/// Lift an idempotent of F_p G to the unique-up-to-conjugation idempotent of
/// RG above it: lift coefficientwise, then iterate `eps <- 3 eps^2 - 2 eps^3`
/// until `eps^2 = eps` (valuation of the defect doubles each step; hard cap
/// `ell` iterations). The result is verified by squaring before return.
pub fn lift_idempotent(e: &FAlgebraElement, spec: ChainRingSpec) -> Result<RAlgebraElement> {
    if !e.is_idempotent() {
        return Err(Error::PreconditionViolation(
            "lift_idempotent requires an idempotent input".into(),
        ));
    }
    let eps = newton_idempotent(&RAlgebraElement::lift_of(e, spec)?)?;
    if eps.reduce_mod_m() != *e {
        return Err(Error::InternalConsistency(
            "lifted idempotent does not reduce to its seed".into(),
        ));
    }
    Ok(eps)
}

/// Refine an approximate idempotent (`x^2 = x` modulo the maximal ideal) to
/// an exact one via `x <- 3x^2 - 2x^3`; the valuation of the defect doubles
/// each step. Every step is a polynomial in `x` with zero constant term, so
/// an exact two-sided relation `y x = x y = 0` survives the refinement.
pub fn newton_idempotent(x: &RAlgebraElement) -> Result<RAlgebraElement> {
    let spec = x.spec();
    let three = spec.from_int(3);
    let two = spec.from_int(2);
    let mut eps = x.clone();
    for _ in 0..=spec.ell {
        let sq = eps.mul(&eps)?;
        if sq == eps {
            return Ok(eps);
        }
        let cube = sq.mul(&eps)?;
        eps = sq.scale(three).sub(&cube.scale(two))?;
    }
    Err(Error::LiftingFailure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingFlavor;

    fn z4() -> ChainRingSpec {
        ChainRingSpec::new(2, 2, RingFlavor::IntegerResidue).unwrap()
    }

    #[test]
    fn lift_trivial_idempotents() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        for spec in [z4(), ChainRingSpec::new(2, 3, RingFlavor::Polynomial).unwrap()] {
            let zero = FAlgebraElement::zero(c3.clone(), 2);
            assert!(lift_idempotent(&zero, spec).unwrap().is_zero());
            let one = FAlgebraElement::one(c3.clone(), 2);
            assert_eq!(
                lift_idempotent(&one, spec).unwrap(),
                RAlgebraElement::one(c3.clone(), spec)
            );
        }
    }

    #[test]
    fn lift_even_weight_idempotent_to_z4() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let e = FAlgebraElement::from_coeffs(c3.clone(), 2, vec![0, 1, 1]).unwrap();
        let eps = lift_idempotent(&e, z4()).unwrap();
        // Unique lift in this commutative algebra: 2 + x + x^2.
        assert_eq!(eps.coeffs(), &[RScalar(2), RScalar(1), RScalar(1)]);
        assert!(eps.is_idempotent());
    }

    #[test]
    fn lift_to_z8_verified_by_squaring() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let e = FAlgebraElement::from_coeffs(c3.clone(), 2, vec![0, 1, 1]).unwrap();
        let spec = ChainRingSpec::new(2, 3, RingFlavor::IntegerResidue).unwrap();
        let eps = lift_idempotent(&e, spec).unwrap();
        assert!(eps.is_idempotent());
        assert_eq!(eps.reduce_mod_m(), e);
    }

    #[test]
    fn lift_rejects_non_idempotent() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let a = FAlgebraElement::from_coeffs(c2, 2, vec![1, 1]).unwrap();
        assert!(lift_idempotent(&a, z4()).is_err());
    }

    #[test]
    fn ring_algebra_mul_agrees_with_field_after_reduction() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let spec = z4();
        let a = RAlgebraElement::from_coeffs(
            d6.clone(),
            spec,
            [3u64, 1, 0, 2, 1, 3].map(RScalar).to_vec(),
        )
        .unwrap();
        let b = RAlgebraElement::from_coeffs(
            d6.clone(),
            spec,
            [1u64, 2, 3, 0, 1, 2].map(RScalar).to_vec(),
        )
        .unwrap();
        let prod = a.mul(&b).unwrap().reduce_mod_m();
        let prod_f = a.reduce_mod_m().mul(&b.reduce_mod_m()).unwrap();
        assert_eq!(prod, prod_f);
    }

    #[test]
    fn star_involution_over_r() {
        let d8 = FiniteGroup::dihedral(4).unwrap();
        let spec = ChainRingSpec::new(3, 2, RingFlavor::IntegerResidue).unwrap();
        let a = RAlgebraElement::from_coeffs(
            d8.clone(),
            spec,
            (0..8).map(|i| RScalar(i % 9)).collect(),
        )
        .unwrap();
        assert_eq!(a.star().star(), a);
    }
}
