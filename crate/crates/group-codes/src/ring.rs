//! Scalar arithmetic of the chain ring R and its layer maps.
//!
//! Two flavors realize every chain ring needed here: the integer residue
//! ring Z/p^l Z and the polynomial ring F_p[u]/(u^l). Both have maximal
//! ideal pi R (pi = p resp. u), residue field F_p and length l.
//!
//! A scalar is stored as its base-p digit vector packed into a single
//! integer value sum d_i p^i. The encoding is positional in pi for both
//! flavors, so valuation, the layer maps alpha_j and pi-scaling are
//! flavor-independent; only add/mul/neg differ (with or without carries).

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RingFlavor {
    /// Z / p^l Z with pi = p.
    IntegerResidue,
    /// F_p[u] / (u^l) with pi = u.
    Polynomial,
}

/// A chain ring R with residue field F_p and length `ell` (pi^ell = 0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ChainRingSpec {
    pub p: u32,
    pub ell: u32,
    pub flavor: RingFlavor,
}

/// An element of R, canonically reduced. Digits base p, value < p^ell.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct RScalar(pub u64);

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl ChainRingSpec {
    pub fn new(p: u32, ell: u32, flavor: RingFlavor) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("p = {p} is not prime")));
        }
        if ell == 0 {
            return Err(Error::InvalidParameter("length must be >= 1".into()));
        }
        let modulus = (p as u64).checked_pow(ell);
        match modulus {
            Some(m) if m < (1 << 31) => Ok(ChainRingSpec { p, ell, flavor }),
            _ => Err(Error::InvalidParameter(format!("p^ell = {p}^{ell} too large"))),
        }
    }

    /// Parse a CLI ring spec: `Z:p^ell` or `poly:p^ell`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let (flavor, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("ring spec `{spec}` (want flavor:p^ell)")))?;
        let flavor = match flavor {
            "Z" => RingFlavor::IntegerResidue,
            "poly" => RingFlavor::Polynomial,
            _ => return Err(Error::Parse(format!("unknown ring flavor `{flavor}`"))),
        };
        let (p, ell) = rest
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("ring spec `{spec}`: want p^ell")))?;
        let p: u32 = p.parse().map_err(|_| Error::Parse(format!("bad prime in `{spec}`")))?;
        let ell: u32 =
            ell.parse().map_err(|_| Error::Parse(format!("bad length in `{spec}`")))?;
        Self::new(p, ell, flavor)
    }

    pub fn spec_string(&self) -> String {
        let f = match self.flavor {
            RingFlavor::IntegerResidue => "Z",
            RingFlavor::Polynomial => "poly",
        };
        format!("{}:{}^{}", f, self.p, self.ell)
    }

    /// p^ell, the number of ring elements.
    pub fn modulus(&self) -> u64 {
        (self.p as u64).pow(self.ell)
    }

    pub fn zero(&self) -> RScalar {
        RScalar(0)
    }

    pub fn one(&self) -> RScalar {
        RScalar(if self.modulus() == 1 { 0 } else { 1 })
    }

    /// The canonical image of an integer in R.
    pub fn from_int(&self, k: i64) -> RScalar {
        match self.flavor {
            RingFlavor::IntegerResidue => {
                let m = self.modulus() as i64;
                RScalar(k.rem_euclid(m) as u64)
            }
            // Z -> F_p[u]/(u^l) factors through F_p.
            RingFlavor::Polynomial => RScalar(k.rem_euclid(self.p as i64) as u64),
        }
    }

    fn digits(&self, x: RScalar) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.ell as usize);
        let mut x = x.0;
        let p = self.p as u64;
        for _ in 0..self.ell {
            v.push((x % p) as u32);
            x /= p;
        }
        v
    }

    fn from_digits(&self, d: &[u32]) -> RScalar {
        let p = self.p as u64;
        let mut x = 0u64;
        for &di in d.iter().rev() {
            x = x * p + di as u64;
        }
        RScalar(x)
    }

    pub fn add(&self, a: RScalar, b: RScalar) -> RScalar {
        match self.flavor {
            RingFlavor::IntegerResidue => RScalar((a.0 + b.0) % self.modulus()),
            RingFlavor::Polynomial => {
                let (da, db) = (self.digits(a), self.digits(b));
                let sum: Vec<u32> =
                    da.iter().zip(&db).map(|(&x, &y)| (x + y) % self.p).collect();
                self.from_digits(&sum)
            }
        }
    }

    pub fn neg(&self, a: RScalar) -> RScalar {
        match self.flavor {
            RingFlavor::IntegerResidue => {
                let m = self.modulus();
                RScalar((m - a.0 % m) % m)
            }
            RingFlavor::Polynomial => {
                let d: Vec<u32> =
                    self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
                self.from_digits(&d)
            }
        }
    }

    pub fn sub(&self, a: RScalar, b: RScalar) -> RScalar {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: RScalar, b: RScalar) -> RScalar {
        match self.flavor {
            RingFlavor::IntegerResidue => RScalar(a.0 * b.0 % self.modulus()),
            RingFlavor::Polynomial => {
                let (da, db) = (self.digits(a), self.digits(b));
                let l = self.ell as usize;
                let mut out = vec![0u32; l];
                for i in 0..l {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..l - i {
                        out[i + j] = (out[i + j] + da[i] * db[j]) % self.p;
                    }
                }
                self.from_digits(&out)
            }
        }
    }

    /// Largest j with x in m^j; valuation(0) = ell by convention.
    pub fn valuation(&self, x: RScalar) -> u32 {
        if x.0 == 0 {
            return self.ell;
        }
        let p = self.p as u64;
        let mut v = 0;
        let mut x = x.0;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    }

    pub fn is_unit(&self, x: RScalar) -> bool {
        self.valuation(x) == 0
    }

    /// The layer map alpha_j: pi^j r |-> r mod m. Requires valuation >= j.
    pub fn alpha_j(&self, x: RScalar, j: u32) -> Result<u32> {
        let v = self.valuation(x);
        if v < j {
            return Err(Error::NotInLayer { layer: j, valuation: v });
        }
        Ok((x.0 / (self.p as u64).pow(j) % self.p as u64) as u32)
    }

    /// Section of alpha_j fixing the canonical representative `{0..p-1}`:
    /// f |-> pi^j f.
    pub fn alpha_j_up(&self, f: u32, j: u32) -> RScalar {
        debug_assert!(j < self.ell);
        RScalar((f % self.p) as u64 * (self.p as u64).pow(j))
    }

    /// Multiply by pi^k (digit shift; zero once k >= ell).
    pub fn shift_up(&self, x: RScalar, k: u32) -> RScalar {
        if k >= self.ell {
            return RScalar(0);
        }
        let m = self.modulus();
        RScalar(x.0 * (self.p as u64).pow(k) % m)
    }

    /// Exact division by pi^k. Requires valuation >= k.
    pub fn shift_down(&self, x: RScalar, k: u32) -> RScalar {
        debug_assert!(self.valuation(x) >= k);
        RScalar(x.0 / (self.p as u64).pow(k))
    }

    /// Split x = low + pi^k * high with low having digits only below k.
    pub fn split(&self, x: RScalar, k: u32) -> (RScalar, RScalar) {
        let pk = (self.p as u64).pow(k.min(self.ell));
        (RScalar(x.0 % pk), RScalar(x.0 / pk))
    }

    /// Inverse of a unit.
    pub fn inv_unit(&self, x: RScalar) -> RScalar {
        debug_assert!(self.is_unit(x));
        match self.flavor {
            RingFlavor::IntegerResidue => {
                // Hensel-style: start from the inverse mod p, square the
                // precision each step.
                let m = self.modulus();
                let mut inv = crate::linalg::inv_mod_p((x.0 % self.p as u64) as u32, self.p)
                    as u64;
                loop {
                    let err = inv * (x.0 % m) % m;
                    if err == 1 % m {
                        return RScalar(inv);
                    }
                    inv = inv * ((2 % m + m - err) % m) % m;
                }
            }
            RingFlavor::Polynomial => {
                // Series inversion digit by digit.
                let d = self.digits(x);
                let l = self.ell as usize;
                let d0_inv = crate::linalg::inv_mod_p(d[0], self.p);
                let mut b = vec![0u32; l];
                b[0] = d0_inv;
                for k in 1..l {
                    let mut s = 0u32;
                    for i in 1..=k {
                        s = (s + d[i] * b[k - i]) % self.p;
                    }
                    b[k] = (d0_inv as u64 * ((self.p - s) % self.p) as u64
                        % self.p as u64) as u32;
                }
                self.from_digits(&b)
            }
        }
    }

    /// Canonical text form of a scalar: decimal for the integer flavor,
    /// polynomial in u for the polynomial flavor.
    pub fn format_scalar(&self, x: RScalar) -> String {
        match self.flavor {
            RingFlavor::IntegerResidue => x.0.to_string(),
            RingFlavor::Polynomial => {
                let d = self.digits(x);
                let mut terms = Vec::new();
                for (i, &c) in d.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let t = match (i, c) {
                        (0, c) => c.to_string(),
                        (1, 1) => "u".into(),
                        (1, c) => format!("{c}u"),
                        (i, 1) => format!("u^{i}"),
                        (i, c) => format!("{c}u^{i}"),
                    };
                    terms.push(t);
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
        }
    }
}

impl fmt::Display for RScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z8() -> ChainRingSpec {
        ChainRingSpec::new(2, 3, RingFlavor::IntegerResidue).unwrap()
    }

    fn f2u2() -> ChainRingSpec {
        ChainRingSpec::new(2, 2, RingFlavor::Polynomial).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(z8().valuation(RScalar(4)), 2);
        assert_eq!(z8().valuation(RScalar(0)), 3);
        assert_eq!(f2u2().valuation(RScalar(2)), 1); // u
    }

    #[test]
    fn alpha_examples() {
        // Z/8: alpha_1(6) = 3 mod 2 = 1.
        assert_eq!(z8().alpha_j(RScalar(6), 1).unwrap(), 1);
        // alpha_0 on a unit is reduction mod m.
        assert_eq!(z8().alpha_j(RScalar(5), 0).unwrap(), 1);
        // alpha_j_up(1, 2) in Z/8 = 4.
        assert_eq!(z8().alpha_j_up(1, 2), RScalar(4));
        // Round trip.
        let s = z8();
        for f in 0..2 {
            for j in 0..3 {
                assert_eq!(s.alpha_j(s.alpha_j_up(f, j), j).unwrap(), f);
            }
        }
        assert!(matches!(
            z8().alpha_j(RScalar(2), 2),
            Err(Error::NotInLayer { layer: 2, valuation: 1 })
        ));
    }

    #[test]
    fn valuation_is_additive_under_mul() {
        for spec in [z8(), f2u2(), ChainRingSpec::new(3, 3, RingFlavor::Polynomial).unwrap()] {
            let m = spec.modulus();
            for a in 0..m {
                for b in 0..m {
                    let (a, b) = (RScalar(a), RScalar(b));
                    let va = spec.valuation(a);
                    let vb = spec.valuation(b);
                    assert_eq!(
                        spec.valuation(spec.mul(a, b)),
                        (va + vb).min(spec.ell),
                        "{a:?} * {b:?} in {spec:?}"
                    );
                    assert!(spec.valuation(spec.add(a, b)) >= va.min(vb));
                }
            }
        }
    }

    #[test]
    fn alpha_0_is_ring_homomorphism() {
        for spec in [z8(), f2u2()] {
            let m = spec.modulus();
            for a in 0..m {
                for b in 0..m {
                    let (a, b) = (RScalar(a), RScalar(b));
                    let a0 = |x: RScalar| spec.alpha_j(x, 0).unwrap();
                    assert_eq!(a0(spec.add(a, b)), (a0(a) + a0(b)) % spec.p);
                    assert_eq!(a0(spec.mul(a, b)), (a0(a) * a0(b)) % spec.p);
                }
            }
        }
    }

    #[test]
    fn unit_inverses() {
        for spec in [
            z8(),
            f2u2(),
            ChainRingSpec::new(3, 2, RingFlavor::IntegerResidue).unwrap(),
            ChainRingSpec::new(3, 3, RingFlavor::Polynomial).unwrap(),
        ] {
            for x in 0..spec.modulus() {
                let x = RScalar(x);
                if spec.is_unit(x) {
                    assert_eq!(spec.mul(x, spec.inv_unit(x)), spec.one());
                }
            }
        }
    }

    #[test]
    fn parse_and_format_specs() {
        let s = ChainRingSpec::parse_spec("Z:2^2").unwrap();
        assert_eq!((s.p, s.ell, s.flavor), (2, 2, RingFlavor::IntegerResidue));
        assert_eq!(s.spec_string(), "Z:2^2");
        let s = ChainRingSpec::parse_spec("poly:3^2").unwrap();
        assert_eq!(s.flavor, RingFlavor::Polynomial);
        assert!(ChainRingSpec::parse_spec("Z:4^2").is_err()); // not prime
        assert!(ChainRingSpec::parse_spec("Z:2^0").is_err());
        assert!(ChainRingSpec::parse_spec("gf:2^2").is_err());
    }

    #[test]
    fn format_scalars() {
        assert_eq!(z8().format_scalar(RScalar(6)), "6");
        let s = ChainRingSpec::new(2, 3, RingFlavor::Polynomial).unwrap();
        assert_eq!(s.format_scalar(RScalar(6)), "u+u^2");
        assert_eq!(s.format_scalar(RScalar(0)), "0");
    }
}
