//! Univariate polynomial arithmetic over F_p and the factorization of
//! x^n - 1 (distinct-degree splitting followed by Cantor-Zassenhaus
//! equal-degree splitting, derandomized by a fixed seed).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::inv_mod_p;

/// Dense polynomial over F_p, lowest-degree coefficient first, normalized so
/// the leading coefficient is nonzero (the zero polynomial has no
/// coefficients).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Poly {
    pub p: u32,
    pub coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Poly { p, coeffs: vec![] }
    }

    pub fn one(p: u32) -> Self {
        Poly { p, coeffs: vec![1] }
    }

    pub fn x(p: u32) -> Self {
        Poly { p, coeffs: vec![0, 1] }
    }

    /// x^n - 1.
    pub fn xn_minus_1(n: usize, p: u32) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = p - 1;
        c[n] = 1;
        Poly::new(p, c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial reports 0 here and is guarded at call
    /// sites.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u32; n];
        for (i, v) in c.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *v = (a + b) % self.p;
        }
        Poly::new(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u32; n];
        for (i, v) in c.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *v = (a + self.p - b) % self.p;
        }
        Poly::new(self.p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a as u64 * b as u64) % self.p as u64;
            }
        }
        Poly::new(self.p, c.into_iter().map(|x| x as u32).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let p = self.p;
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return (Poly::zero(p), self.clone());
        }
        let lead_inv = inv_mod_p(*d.coeffs.last().unwrap(), p);
        let mut q = vec![0u32; r.len() - d.coeffs.len() + 1];
        for k in (0..q.len()).rev() {
            let top = r[k + d.coeffs.len() - 1];
            if top == 0 {
                continue;
            }
            let c = (top as u64 * lead_inv as u64 % p as u64) as u32;
            q[k] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let sub = (c as u64 * dc as u64 % p as u64) as u32;
                r[k + i] = (r[k + i] + p - sub) % p;
            }
        }
        (Poly::new(p, q), Poly::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divmod(d).1
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod_p(*self.coeffs.last().unwrap(), self.p) as u64;
        let c = self
            .coeffs
            .iter()
            .map(|&a| (a as u64 * inv % self.p as u64) as u32)
            .collect();
        Poly::new(self.p, c)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// self^e mod m by square-and-multiply.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| (a as u64 * (i as u64 % self.p as u64) % self.p as u64) as u32)
            .collect();
        Poly::new(self.p, c)
    }

    /// Inverse of `self` modulo `m` when gcd(self, m) = 1.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        // Extended Euclid: track a = s * self mod m.
        let (mut a, mut b) = (self.rem(m), m.clone());
        let (mut sa, mut sb) = (Poly::one(self.p), Poly::zero(self.p));
        while !b.is_zero() {
            let (q, r) = a.divmod(&b);
            let sr = sa.sub(&q.mul(&sb)).rem(m);
            a = b;
            sa = sb;
            b = r;
            sb = sr;
        }
        if a.degree() != 0 || a.is_zero() {
            return None;
        }
        let inv = inv_mod_p(a.coeffs[0], self.p) as u64;
        let c = sa
            .coeffs
            .iter()
            .map(|&x| (x as u64 * inv % self.p as u64) as u32)
            .collect();
        Some(Poly::new(self.p, c).rem(m))
    }

    /// Render as a human-readable polynomial in `var`.
    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}{var}"),
                (i, 1) => format!("{var}^{i}"),
                (i, c) => format!("{c}{var}^{i}"),
            };
            parts.push(term);
        }
        parts.join("+")
    }
}

/// Irreducibility by the distinct-degree criterion: f of degree d is
/// irreducible iff x^(p^d) = x mod f and gcd(f, x^(p^i) - x) = 1 for every
/// prime-quotient exponent i = d / q.
pub fn is_irreducible(f: &Poly) -> bool {
    let d = f.degree();
    if f.is_zero() || d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let p = f.p;
    // h_i = x^(p^i) mod f, advanced one Frobenius step at a time.
    let frob_step = |h: &Poly| h.pow_mod(p as u128, f);
    let x = Poly::x(p);
    let mut h = x.clone();
    let mut powers = vec![h.clone()]; // powers[i] = x^(p^i) mod f
    for _ in 0..d {
        h = frob_step(&h);
        powers.push(h.clone());
    }
    if powers[d] != x.rem(f) {
        return false;
    }
    let mut prime_quotients = Vec::new();
    let mut m = d;
    let mut divisor = 2;
    while divisor * divisor <= m {
        if m % divisor == 0 {
            prime_quotients.push(d / divisor);
            while m % divisor == 0 {
                m /= divisor;
            }
        }
        divisor += 1;
    }
    if m > 1 {
        prime_quotients.push(d / m);
    }
    for &i in &prime_quotients {
        if !f.gcd(&powers[i].sub(&x)).is_one() {
            return false;
        }
    }
    true
}

/// Canonical factor order: by degree, then lexicographically from the
/// leading coefficient down.
fn factor_sort_key(f: &Poly) -> (usize, Vec<u32>) {
    (f.degree(), f.coeffs.iter().rev().copied().collect())
}

/// Equal-degree splitting of a monic squarefree product `g` of irreducibles
/// all of degree `d` (Cantor-Zassenhaus; fixed-seed randomness).
fn equal_degree_factor(g: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    if g.degree() == d {
        out.push(g.monic());
        return;
    }
    let p = g.p;
    loop {
        let r = Poly::new(
            p,
            (0..g.degree()).map(|_| rng.gen_range(0..p)).collect(),
        );
        if r.is_zero() {
            continue;
        }
        let w = if p == 2 {
            // Trace map r + r^2 + r^4 + ... + r^(2^(d-1)) mod g.
            let mut t = Poly::zero(2);
            let mut cur = r.rem(g);
            for _ in 0..d {
                t = t.add(&cur);
                cur = cur.mul(&cur).rem(g);
            }
            t
        } else {
            let e = (p as u128)
                .checked_pow(d as u32)
                .expect("desk-scale degrees")
                / 2;
            r.pow_mod(e, g).sub(&Poly::one(p))
        };
        let h = g.gcd(&w);
        if !h.is_one() && h.degree() < g.degree() {
            equal_degree_factor(&h, d, rng, out);
            equal_degree_factor(&g.divmod(&h).0, d, rng, out);
            return;
        }
    }
}

/// Factor a monic squarefree polynomial into monic irreducibles.
fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    let p = f.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0x67726f75_70636f64); // fixed seed
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = Poly::x(p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.degree() >= 1 {
        d += 1;
        if 2 * d > rest.degree() {
            out.push(rest.clone());
            break;
        }
        h = h.pow_mod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            equal_degree_factor(&g, d, &mut rng, &mut out);
            rest = rest.divmod(&g).0;
            h = h.rem(&rest);
        }
    }
    out.sort_by_key(factor_sort_key);
    out
}

/// Monic irreducible factors of x^n - 1 over F_p, with multiplicity when
/// p | n (then x^n - 1 = (x^(n/p^k) - 1)^(p^k)). The factorization is
/// verified by re-multiplication and per-factor irreducibility checks.
pub fn factor_xn_minus_1(n: usize, p: u32) -> Result<Vec<Poly>> {
    if n == 0 {
        return Err(Error::InvalidParameter("x^0 - 1 has no factorization".into()));
    }
    let mut mult = 1usize;
    let mut core = n;
    while core % p as usize == 0 {
        core /= p as usize;
        mult *= p as usize;
    }
    let squarefree = factor_squarefree(&Poly::xn_minus_1(core, p));
    let mut out = Vec::new();
    for f in squarefree {
        for _ in 0..mult {
            out.push(f.clone());
        }
    }
    out.sort_by_key(factor_sort_key);
    let mut prod = Poly::one(p);
    for f in &out {
        if !is_irreducible(f) {
            return Err(Error::InternalConsistency(format!(
                "factor {} of x^{n}-1 over F_{p} is not irreducible",
                f.format("x")
            )));
        }
        prod = prod.mul(f);
    }
    if prod != Poly::xn_minus_1(n, p) {
        return Err(Error::InternalConsistency(format!(
            "factors of x^{n}-1 over F_{p} do not re-multiply"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, c: &[u32]) -> Poly {
        Poly::new(p, c.to_vec())
    }

    #[test]
    fn divmod_round_trips() {
        let a = poly(5, &[3, 0, 2, 4, 1]);
        let d = poly(5, &[1, 2, 3]);
        let (q, r) = a.divmod(&d);
        assert!(r.degree() < d.degree() || r.is_zero());
        assert_eq!(q.mul(&d).add(&r), a);
    }

    #[test]
    fn factor_x3_minus_1_over_f2() {
        // (x+1)(x^2+x+1)
        let fs = factor_xn_minus_1(3, 2).unwrap();
        assert_eq!(fs, vec![poly(2, &[1, 1]), poly(2, &[1, 1, 1])]);
    }

    #[test]
    fn factor_x7_minus_1_over_f2() {
        // (x+1)(x^3+x+1)(x^3+x^2+1)
        let fs = factor_xn_minus_1(7, 2).unwrap();
        assert_eq!(
            fs,
            vec![poly(2, &[1, 1]), poly(2, &[1, 1, 0, 1]), poly(2, &[1, 0, 1, 1])]
        );
    }

    #[test]
    fn factor_x1_minus_1() {
        for p in [2, 3, 5] {
            assert_eq!(factor_xn_minus_1(1, p).unwrap(), vec![poly(p, &[p - 1, 1])]);
        }
    }

    #[test]
    fn factor_with_multiplicity_when_p_divides_n() {
        // x^6 - 1 = (x^3 - 1)^2 over F_2.
        let fs = factor_xn_minus_1(6, 2).unwrap();
        assert_eq!(fs.len(), 4);
        let mut prod = Poly::one(2);
        for f in &fs {
            prod = prod.mul(f);
        }
        assert_eq!(prod, Poly::xn_minus_1(6, 2));
    }

    #[test]
    fn factorization_re_multiplies_over_a_range() {
        for p in [2u32, 3, 5] {
            for n in 1..=20usize {
                let fs = factor_xn_minus_1(n, p).unwrap();
                let mut prod = Poly::one(p);
                for f in &fs {
                    assert!(is_irreducible(f), "n={n} p={p} f={}", f.format("x"));
                    prod = prod.mul(f);
                }
                assert_eq!(prod, Poly::xn_minus_1(n, p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn irreducibility_oracle_by_trial_division() {
        // Compare is_irreducible against trial division by all monic
        // polynomials of lower degree, for all polynomials of degree <= 4
        // over F_2.
        let p = 2u32;
        let all_monic = |deg: usize| -> Vec<Poly> {
            (0..1u32 << deg)
                .map(|mask| {
                    let mut c: Vec<u32> = (0..deg).map(|i| (mask >> i) & 1).collect();
                    c.push(1);
                    Poly::new(p, c)
                })
                .collect()
        };
        for deg in 1..=4usize {
            for f in all_monic(deg) {
                let divisible = (1..deg)
                    .flat_map(all_monic)
                    .any(|d| f.rem(&d).is_zero());
                assert_eq!(is_irreducible(&f), !divisible, "{}", f.format("x"));
            }
        }
    }

    #[test]
    fn inverse_mod_works() {
        let m = poly(2, &[1, 1, 1]); // x^2+x+1
        let a = poly(2, &[0, 1]); // x
        let inv = a.inverse_mod(&m).unwrap();
        assert!(a.mul(&inv).rem(&m).is_one());
        // Non-coprime has no inverse.
        assert!(poly(2, &[1, 1]).inverse_mod(&poly(2, &[1, 0, 1])).is_none());
    }

    #[test]
    fn format_renders() {
        assert_eq!(poly(2, &[1, 1, 1]).format("x"), "1+x+x^2");
        assert_eq!(poly(3, &[0, 2]).format("x"), "2x");
        assert_eq!(Poly::zero(2).format("x"), "0");
    }
}
