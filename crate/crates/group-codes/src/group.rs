//! Finite groups as explicit multiplication tables.
//!
//! Only concrete small groups are needed, so a group is stored as its full
//! multiplication table. This makes group-algebra convolution a pure
//! table-lookup loop and keeps serialized codes portable: element indices
//! are fixed by the constructors below and never depend on run-time state.
//!
//! Index conventions:
//! * cyclic of order n: index `i` is `x^i`, so `mul[i][j] = (i + j) mod n`.
//! * dihedral of order 2n: index `i + n*j` (0 <= i < n, j in {0,1}) is
//!   `r^i s^j` with `r^n = s^2 = 1` and `s r s = r^-1`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// The identity is always element 0. Immutable after construction and safe
/// to share read-only across parallel workers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    /// Flattened order x order table: `mul[a * order + b]` is the index of ab.
    mul: Vec<usize>,
    inv: Vec<usize>,
    label: String,
}

/// First invariant violation found by [`FiniteGroup::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupViolation {
    /// `mul[0][g]` or `mul[g][0]` is not `g`.
    Identity { g: usize },
    /// `mul[a][mul[b][c]] != mul[mul[a][b]][c]`.
    Associativity { a: usize, b: usize, c: usize },
    /// `mul[g][inv[g]]` or `mul[inv[g]][g]` is not the identity.
    Inverse { g: usize },
    /// A table entry is out of range.
    Range { index: usize },
}

impl FiniteGroup {
    /// Cyclic group of order `n`; element `i` represents `x^i`.
    pub fn cyclic(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be >= 1".into()));
        }
        let mut mul = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = (i + j) % n;
            }
        }
        let inv = (0..n).map(|i| (n - i) % n).collect();
        Ok(Arc::new(FiniteGroup {
            order: n,
            mul,
            inv,
            label: format!("cyclic:{n}"),
        }))
    }

    /// Dihedral group of order `2n` with presentation
    /// `<r, s | r^n = s^2 = 1, s r s = r^-1>`.
    ///
    /// Element index `i + n*j` represents `r^i s^j`.
    pub fn dihedral(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidParameter("dihedral parameter must be >= 1".into()));
        }
        let order = 2 * n;
        let mut mul = vec![0usize; order * order];
        for a in 0..n {
            for b in 0..2 {
                for c in 0..n {
                    for d in 0..2 {
                        // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b xor d)
                        let rot = if b == 0 { (a + c) % n } else { (a + n - c % n) % n };
                        let refl = b ^ d;
                        mul[(a + n * b) * order + (c + n * d)] = rot + n * refl;
                    }
                }
            }
        }
        let mut inv = vec![0usize; order];
        for i in 0..n {
            inv[i] = (n - i) % n; // rotations invert as in the cyclic group
            inv[i + n] = i + n; // every reflection is an involution
        }
        Ok(Arc::new(FiniteGroup {
            order,
            mul,
            inv,
            label: format!("dihedral:{order}"),
        }))
    }

    /// Parse a CLI group spec: `cyclic:n` or `dihedral:N` where `N` is the
    /// group order (so `dihedral:6` is D6 with n = 3).
    pub fn parse_spec(spec: &str) -> Result<Arc<Self>> {
        let (family, num) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec `{spec}` (want family:n)")))?;
        let n: usize = num
            .parse()
            .map_err(|_| Error::Parse(format!("group spec `{spec}`: bad number `{num}`")))?;
        match family {
            "cyclic" => Self::cyclic(n),
            "dihedral" => {
                if n == 0 || n % 2 != 0 {
                    return Err(Error::Parse(format!(
                        "dihedral spec `{spec}`: order must be a positive even number"
                    )));
                }
                Self::dihedral(n / 2)
            }
            _ => Err(Error::Parse(format!("unknown group family `{family}`"))),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The spec string this group was constructed from.
    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Order of a single element.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Check the type invariants exhaustively, reporting the first violation.
    pub fn validate(&self) -> std::result::Result<(), GroupViolation> {
        let n = self.order;
        for (i, &e) in self.mul.iter().enumerate() {
            if e >= n {
                return Err(GroupViolation::Range { index: i });
            }
        }
        for g in 0..n {
            if self.inv[g] >= n {
                return Err(GroupViolation::Range { index: g });
            }
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupViolation::Identity { g });
            }
        }
        for g in 0..n {
            if self.mul(g, self.inv(g)) != 0 || self.mul(self.inv(g), g) != 0 {
                return Err(GroupViolation::Inverse { g });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupViolation::Associativity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Build a group directly from tables. Used by tests to construct
    /// deliberately broken tables; `validate` is not called here.
    pub fn from_tables(mul: Vec<usize>, inv: Vec<usize>, label: String) -> Result<Arc<Self>> {
        let order = inv.len();
        if order == 0 || mul.len() != order * order {
            return Err(Error::InvalidParameter("table sizes do not match".into()));
        }
        Ok(Arc::new(FiniteGroup { order, mul, inv, label }))
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

/// `true` if both operands refer to the same group.
pub fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
