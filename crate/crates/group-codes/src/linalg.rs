//! Dense linear algebra over the prime field F_p.
//!
//! Matrices are `Vec<Vec<u32>>` with entries already reduced mod p. Sizes
//! here are bounded by the group order (<= 64), so simple Gaussian
//! elimination is all that is needed.

/// Multiplicative inverse mod a prime `p`.
pub fn inv_mod_p(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p.
    debug_assert!(a % p != 0);
    let mut base = (a % p) as u64;
    let mut exp = p - 2;
    let mut acc = 1u64;
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

/// Reduce `mat` in place to reduced row echelon form; returns pivot columns.
/// Zero rows are removed, so afterwards `mat.len()` is the rank and pivot
/// columns are strictly increasing: the result is canonical for the row
/// space.
pub fn rref(mat: &mut Vec<Vec<u32>>, p: u32) -> Vec<usize> {
    let ncols = mat.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (row..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(row, pivot_row);
        let inv = inv_mod_p(mat[row][col], p);
        for x in mat[row].iter_mut() {
            *x = ((*x as u64) * inv as u64 % p as u64) as u32;
        }
        for r in 0..mat.len() {
            if r != row && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in 0..ncols {
                    let sub = (factor as u64 * mat[row][c] as u64) % p as u64;
                    mat[r][c] = ((mat[r][c] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    mat.truncate(row);
    pivots
}

/// Basis of the right nullspace of `mat` (solutions x of mat . x = 0),
/// in reduced echelon form.
pub fn nullspace(mat: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut m: Vec<Vec<u32>> = mat.to_vec();
    let pivots = rref(&mut m, p);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot variable = -coefficient of the free variable
            v[pc] = (p - m[r][free] % p) % p;
        }
        basis.push(v);
    }
    rref(&mut basis, p);
    basis
}

/// Solve `a . x = rhs` for one solution, where `a` is given row-wise
/// (`a.len()` equations in `unknowns` unknowns). Returns `None` if
/// inconsistent.
pub fn solve(a: &[Vec<u32>], rhs: &[u32], unknowns: usize, p: u32) -> Option<Vec<u32>> {
    let mut aug: Vec<Vec<u32>> = a
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b % p);
            r
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.contains(&unknowns) {
        return None; // pivot in the rhs column
    }
    let mut x = vec![0u32; unknowns];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][unknowns];
    }
    Some(x)
}

/// Membership of `v` in the row space of an RREF matrix `basis`.
pub fn in_row_space(basis: &[Vec<u32>], pivots: &[usize], v: &[u32], p: u32) -> bool {
    let mut v = v.to_vec();
    for (r, &pc) in pivots.iter().enumerate() {
        if v[pc] != 0 {
            let factor = v[pc];
            for c in 0..v.len() {
                let sub = (factor as u64 * basis[r][c] as u64) % p as u64;
                v[c] = ((v[c] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_small_primes() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod_p(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn rref_canonical() {
        // Two generating sets of the same row space over F3.
        let mut a = vec![vec![1, 2, 0], vec![0, 1, 1]];
        let mut b = vec![vec![1, 0, 1], vec![2, 2, 1], vec![1, 2, 0]];
        rref(&mut a, 3);
        rref(&mut b, 3);
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![1, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn nullspace_orthogonal() {
        let mat = vec![vec![1u32, 1, 0, 1], vec![0, 1, 1, 1]];
        let ns = nullspace(&mat, 4, 2);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &mat {
                let dot: u32 = row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % 2;
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = vec![vec![1u32, 1], vec![0, 1]];
        let x = solve(&a, &[0, 1], 2, 2).unwrap();
        assert_eq!(x, vec![1, 1]);
        let a2 = vec![vec![1u32, 1], vec![1, 1]];
        assert!(solve(&a2, &[0, 1], 2, 2).is_none());
    }
}
