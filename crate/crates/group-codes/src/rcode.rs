//! Group codes over a chain ring: left ideals in RG held in standard form.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{same_group, FiniteGroup};
use crate::ralgebra::RAlgebraElement;
use crate::ring::{ChainRingSpec, RScalar};
use crate::rlinalg::{kernel, HowellForm};

/// A left ideal in RG, held as a canonical standard-form (Howell) generator
/// matrix with pivot valuations. Equal ideals yield identical matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RCode {
    group: Arc<FiniteGroup>,
    spec: ChainRingSpec,
    form: HowellForm,
}

impl RCode {
    /// The left ideal generated by `gens`: the row module of all left
    /// translates g * gen.
    pub fn from_ideal_generators(gens: &[RAlgebraElement]) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::InvalidParameter("need at least one generator".into()))?;
        let group = first.group().clone();
        let spec = first.spec();
        let n = group.order();
        let mut rows = Vec::with_capacity(gens.len() * n);
        for gen in gens {
            if !same_group(gen.group(), &group) || gen.spec() != spec {
                return Err(Error::IncompatibleOperands("mixed generators".into()));
            }
            for g in 0..n {
                rows.push(gen.translate(g).coeffs().to_vec());
            }
        }
        Ok(RCode { group, spec, form: HowellForm::new(spec, n, rows) })
    }

    /// The principal left ideal RG g.
    pub fn principal(gen: &RAlgebraElement) -> Self {
        Self::from_ideal_generators(std::slice::from_ref(gen)).unwrap()
    }

    pub fn zero(group: Arc<FiniteGroup>, spec: ChainRingSpec) -> Self {
        let n = group.order();
        RCode { group, spec, form: HowellForm::new(spec, n, Vec::new()) }
    }

    /// The full algebra RG as an ideal.
    pub fn full(group: Arc<FiniteGroup>, spec: ChainRingSpec) -> Self {
        let one = RAlgebraElement::one(group, spec);
        Self::principal(&one)
    }

    /// Row module from explicit rows (howellized). Does not enforce ideal
    /// closure; used where closure is guaranteed (duals, intersections).
    pub(crate) fn from_rows(
        group: Arc<FiniteGroup>,
        spec: ChainRingSpec,
        rows: Vec<Vec<RScalar>>,
    ) -> Self {
        let n = group.order();
        RCode { group, spec, form: HowellForm::new(spec, n, rows) }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn spec(&self) -> ChainRingSpec {
        self.spec
    }

    /// Standard-form rows in internal (pivot-column) order.
    pub fn rows(&self) -> &[Vec<RScalar>] {
        &self.form.rows
    }

    /// `(pivot column, pivot valuation)` per row.
    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.form.pivots
    }

    /// Standard-form rows sorted by pivot valuation (ties by column); this
    /// is the serialized presentation.
    pub fn standard_rows(&self) -> Vec<(Vec<RScalar>, usize, u32)> {
        let mut out: Vec<(Vec<RScalar>, usize, u32)> = self
            .form
            .rows
            .iter()
            .zip(&self.form.pivots)
            .map(|(r, &(c, a))| (r.clone(), c, a))
            .collect();
        out.sort_by_key(|&(_, c, a)| (a, c));
        out
    }

    /// log_p of the ideal cardinality.
    pub fn log_cardinality(&self) -> u32 {
        self.form.log_cardinality()
    }

    /// Cardinality as u128; only valid while it fits (desk scale).
    pub fn cardinality(&self) -> u128 {
        (self.spec.p as u128).pow(self.log_cardinality())
    }

    pub fn is_zero(&self) -> bool {
        self.form.rows.is_empty()
    }

    pub fn contains_row(&self, v: &[RScalar]) -> bool {
        self.form.is_member(v)
    }

    pub fn contains(&self, e: &RAlgebraElement) -> bool {
        same_group(&self.group, e.group())
            && self.spec == e.spec()
            && self.contains_row(e.coeffs())
    }

    pub fn row_elements(&self) -> Vec<RAlgebraElement> {
        self.form
            .rows
            .iter()
            .map(|r| {
                RAlgebraElement::from_coeffs(self.group.clone(), self.spec, r.clone()).unwrap()
            })
            .collect()
    }

    /// Closure under left multiplication by every group element.
    pub fn is_left_ideal(&self) -> bool {
        self.row_elements().iter().all(|e| {
            (0..self.group.order()).all(|g| self.contains_row(e.translate(g).coeffs()))
        })
    }

    /// The dual ideal w.r.t. the G-invariant form on RG, computed as the
    /// nullspace of the pairing against the generator rows.
    pub fn dual(&self) -> Self {
        let n = self.group.order();
        let ker = kernel(self.spec, &self.form.rows, n);
        let dual = Self::from_rows(self.group.clone(), self.spec, ker);
        // |C| * |C_perp| = |R|^n.
        debug_assert_eq!(
            dual.log_cardinality() + self.log_cardinality(),
            self.spec.ell * n as u32
        );
        dual
    }

    /// The submodule `C intersect m^j RG`, via duality:
    /// `A cap B = (A_perp + B_perp)_perp` with `(m^j RG)_perp = m^(ell-j) RG`.
    pub fn intersect_m_power(&self, j: u32) -> Self {
        if j == 0 {
            return self.clone();
        }
        let n = self.group.order();
        if j >= self.spec.ell {
            return Self::zero(self.group.clone(), self.spec);
        }
        let mut rows = self.dual().form.rows;
        let pi_pow = self.spec.shift_up(self.spec.one(), self.spec.ell - j);
        for i in 0..n {
            let mut r = vec![RScalar(0); n];
            r[i] = pi_pow;
            rows.push(r);
        }
        Self::from_rows(self.group.clone(), self.spec, rows).dual()
    }

    /// Visit every element of the ideal exactly once (including zero).
    /// Errors if the cardinality exceeds `budget` elements.
    pub fn for_each_element<F: FnMut(&[RScalar])>(&self, budget: u64, mut f: F) -> Result<()> {
        let log = self.log_cardinality();
        let total = (self.spec.p as f64).powi(log as i32);
        if total > budget as f64 {
            return Err(Error::BudgetExceeded { required: total as u64, budget });
        }
        let n = self.group.order();
        let spec = self.spec;
        // A row with pivot valuation a has p^(ell - a) distinct multiples,
        // its coefficient running over a transversal of R / pi^(ell - a) R.
        // Walk that transversal digit by digit against the virtual rows
        // pi^j * row, j < ell - a: plain integer multiples of the row only
        // reach the prime subring's worth of coefficients, which misses
        // e.g. u * row in F_p[u]/(u^l), where every element has additive
        // order p. A rollover of one digit has accumulated p * (pi^j row),
        // which is subtracted explicitly (zero in the polynomial flavor,
        // pi^(j+1) row in the integer flavor).
        let mut vrows: Vec<Vec<RScalar>> = Vec::new();
        for (row, &(_, a)) in self.form.rows.iter().zip(&self.form.pivots) {
            for j in 0..spec.ell - a {
                vrows.push(row.iter().map(|&x| spec.shift_up(x, j)).collect());
            }
        }
        let p_in_r = spec.from_int(spec.p as i64);
        let wraps: Vec<Vec<RScalar>> = vrows
            .iter()
            .map(|r| r.iter().map(|&x| spec.mul(x, p_in_r)).collect())
            .collect();
        let cap = spec.p as u64;
        let mut cur = vec![RScalar(0); n];
        let mut digits = vec![0u64; vrows.len()];
        f(&cur);
        let total = total as u64;
        for _ in 1..total {
            let mut d = 0;
            loop {
                for (c, &r) in cur.iter_mut().zip(&vrows[d]) {
                    *c = spec.add(*c, r);
                }
                digits[d] += 1;
                if digits[d] < cap {
                    break;
                }
                digits[d] = 0;
                for (c, &w) in cur.iter_mut().zip(&wraps[d]) {
                    *c = spec.sub(*c, w);
                }
                d += 1;
            }
            f(&cur);
        }
        Ok(())
    }
}
