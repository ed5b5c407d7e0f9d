//! Row-module normal forms over a chain ring.
//!
//! The standard form used throughout is the Howell form: echelon with pivots
//! pi^a (unit part normalized away), exact zeros below each pivot, entries
//! above each pivot reduced mod pi^a, and pi-saturated so that greedy
//! reduction decides membership. The form is canonical: two generating sets
//! of the same row module produce identical matrices.

use crate::ring::{ChainRingSpec, RScalar};

/// Howell form of a row module: rows ordered by pivot column, with
/// `pivots[i] = (column, valuation)` for row i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HowellForm {
    pub spec: ChainRingSpec,
    pub ncols: usize,
    pub rows: Vec<Vec<RScalar>>,
    pub pivots: Vec<(usize, u32)>,
}

fn row_is_zero(r: &[RScalar]) -> bool {
    r.iter().all(|c| c.0 == 0)
}

fn scale_row(spec: &ChainRingSpec, row: &mut [RScalar], c: RScalar) {
    for x in row.iter_mut() {
        *x = spec.mul(*x, c);
    }
}

fn sub_scaled(spec: &ChainRingSpec, dst: &mut [RScalar], src: &[RScalar], c: RScalar) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = spec.sub(*d, spec.mul(c, s));
    }
}

/// Echelonize in place. Afterwards rows are in pivot-column order, each
/// pivot entry is exactly pi^a, and every other row has an exact zero in
/// every pivot column processed while it was still unpivoted (in
/// particular: exact zeros below pivots).
fn echelonize(spec: &ChainRingSpec, ncols: usize, rows: &mut Vec<Vec<RScalar>>) -> Vec<(usize, u32)> {
    rows.retain(|r| !row_is_zero(r));
    let mut pivots = Vec::new();
    let mut next = 0usize; // rows[..next] are pivot rows
    for col in 0..ncols {
        // Pivot: the entry of minimal valuation in this column among
        // unpivoted rows.
        let best = (next..rows.len())
            .filter(|&r| rows[r][col].0 != 0)
            .min_by_key(|&r| spec.valuation(rows[r][col]));
        let Some(r) = best else { continue };
        rows.swap(next, r);
        let a = spec.valuation(rows[next][col]);
        let unit = spec.shift_down(rows[next][col], a);
        let unit_inv = spec.inv_unit(unit);
        scale_row(spec, &mut rows[next], unit_inv);
        debug_assert_eq!(rows[next][col], spec.shift_up(spec.one(), a));
        for r in next + 1..rows.len() {
            let y = rows[r][col];
            if y.0 != 0 {
                // val(y) >= a by pivot minimality; clear exactly.
                let q = spec.shift_down(y, a);
                let (head, tail) = rows.split_at_mut(r);
                sub_scaled(spec, &mut tail[0], &head[next], q);
                debug_assert_eq!(rows[r][col].0, 0);
            }
        }
        pivots.push((col, a));
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

/// Greedy reduction of `v` against pivot rows in column order. Reduces each
/// pivot-column entry to zero when its valuation admits exact division;
/// returns true iff the remainder is identically zero (membership, once the
/// form is Howell).
pub fn reduce_row(
    spec: &ChainRingSpec,
    rows: &[Vec<RScalar>],
    pivots: &[(usize, u32)],
    v: &mut [RScalar],
) -> bool {
    for (i, &(col, a)) in pivots.iter().enumerate() {
        let y = v[col];
        if y.0 == 0 {
            continue;
        }
        if spec.valuation(y) < a {
            return false;
        }
        let q = spec.shift_down(y, a);
        sub_scaled(spec, v, &rows[i], q);
    }
    row_is_zero(v)
}

impl HowellForm {
    /// Compute the Howell form of the module generated by `gens`.
    pub fn new(spec: ChainRingSpec, ncols: usize, gens: Vec<Vec<RScalar>>) -> Self {
        let mut rows = gens;
        let mut pivots = echelonize(&spec, ncols, &mut rows);
        // pi-saturation: pi^(ell-a) kills a pivot but may leave a tail that
        // the current rows cannot reduce; iterate until closed.
        loop {
            let mut added = false;
            for i in 0..rows.len() {
                let (_, a) = pivots[i];
                if a == 0 {
                    continue;
                }
                let mut s: Vec<RScalar> = rows[i]
                    .iter()
                    .map(|&x| spec.shift_up(x, spec.ell - a))
                    .collect();
                if !reduce_row(&spec, &rows, &pivots, &mut s) {
                    rows.push(s);
                    added = true;
                }
            }
            if !added {
                break;
            }
            pivots = echelonize(&spec, ncols, &mut rows);
        }
        // Back-substitution: reduce entries above each pivot mod pi^a.
        // Processing pivots left to right keeps earlier pivot columns
        // untouched (each pivot row has exact zeros at all earlier columns).
        for j in 0..rows.len() {
            let (col, a) = pivots[j];
            for i in 0..j {
                let (_, high) = spec.split(rows[i][col], a);
                if high.0 != 0 {
                    let (head, tail) = rows.split_at_mut(j);
                    sub_scaled(&spec, &mut head[i], &tail[0], high);
                }
            }
        }
        HowellForm { spec, ncols, rows, pivots }
    }

    pub fn is_member(&self, v: &[RScalar]) -> bool {
        let mut v = v.to_vec();
        reduce_row(&self.spec, &self.rows, &self.pivots, &mut v)
    }

    /// log_p of the module cardinality: sum of (ell - a) over pivots.
    pub fn log_cardinality(&self) -> u32 {
        self.pivots.iter().map(|&(_, a)| self.spec.ell - a).sum()
    }
}

/// Generators of the kernel `{x : M x = 0}` of an m x n matrix over R,
/// given row-wise. Computed from the Howell form of the module
/// `{(M x | x) : x}`: rows whose constraint block vanishes carry the kernel.
pub fn kernel(spec: ChainRingSpec, m_rows: &[Vec<RScalar>], ncols: usize) -> Vec<Vec<RScalar>> {
    let m = m_rows.len();
    let aug: Vec<Vec<RScalar>> = (0..ncols)
        .map(|i| {
            let mut row: Vec<RScalar> = m_rows.iter().map(|r| r[i]).collect();
            row.resize(m + ncols, RScalar(0));
            row[m + i] = spec.one();
            row
        })
        .collect();
    let h = HowellForm::new(spec, m + ncols, aug);
    h.rows
        .iter()
        .zip(&h.pivots)
        .filter(|(_, &(col, _))| col >= m)
        .map(|(row, _)| row[m..].to_vec())
        .collect()
}
