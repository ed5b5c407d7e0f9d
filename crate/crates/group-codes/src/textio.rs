//! Text syntax for group-algebra elements: polynomials in x for cyclic
//! groups, words in r and s for dihedral groups, and comma-separated
//! coefficient lists as a fallback for arbitrary groups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::falgebra::FAlgebraElement;
use crate::group::FiniteGroup;
use crate::ralgebra::RAlgebraElement;
use crate::ring::ChainRingSpec;

fn parse_coeff_list(group: &Arc<FiniteGroup>, s: &str) -> Result<Vec<u64>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let vals = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != group.order() {
        return Err(Error::Parse(format!(
            "coefficient list has length {}, group order is {}",
            vals.len(),
            group.order()
        )));
    }
    Ok(vals)
}

/// One `+`-separated term: optional integer coefficient, then a word in the
/// group's generators (x for cyclic, r and s for dihedral; `1` is the
/// identity). Returns (coefficient, group element index).
fn parse_term(group: &Arc<FiniteGroup>, term: &str) -> Result<(u64, usize)> {
    let chars: Vec<char> = term.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    // Leading coefficient digits.
    let mut coeff_digits = String::new();
    while i < chars.len() && chars[i].is_ascii_digit() {
        coeff_digits.push(chars[i]);
        i += 1;
    }
    if i < chars.len() && chars[i] == '*' {
        i += 1;
    }
    let mut coeff: u64 = if coeff_digits.is_empty() {
        1
    } else {
        coeff_digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?
    };
    // `3` alone is 3 * identity; `31` is the coefficient 31.
    let mut g = 0usize; // identity
    let dihedral = group.label().starts_with("dihedral:");
    let n = if dihedral { group.order() / 2 } else { group.order() };
    while i < chars.len() {
        let c = chars[i];
        let generator = match c {
            'x' if !dihedral => 1usize,
            'r' if dihedral => 1usize,
            's' if dihedral => n, // index of s is n
            _ => {
                return Err(Error::Parse(format!(
                    "unexpected `{c}` in term `{term}` for group {}",
                    group.label()
                )))
            }
        };
        i += 1;
        let mut exp = 1u64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let mut digits = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                digits.push(chars[i]);
                i += 1;
            }
            exp = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?;
        }
        for _ in 0..exp % group.element_order(generator) as u64 {
            g = group.mul(g, generator);
        }
    }
    if coeff_digits.is_empty() && chars.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    if !coeff_digits.is_empty() && chars.len() == coeff_digits.len() {
        // Pure number: already handled (identity term).
        coeff = coeff_digits.parse().unwrap();
    }
    Ok((coeff, g))
}

fn parse_raw(group: &Arc<FiniteGroup>, s: &str) -> Result<Vec<u64>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty element literal".into()));
    }
    if trimmed.contains(',') {
        return parse_coeff_list(group, trimmed);
    }
    if trimmed == "0" {
        return Ok(vec![0; group.order()]);
    }
    let mut coeffs = vec![0u64; group.order()];
    for term in trimmed.split('+') {
        let (c, g) = parse_term(group, term)?;
        coeffs[g] += c;
    }
    Ok(coeffs)
}

/// Parse a residue-field element literal.
pub fn parse_element_f(group: &Arc<FiniteGroup>, p: u32, s: &str) -> Result<FAlgebraElement> {
    let raw = parse_raw(group, s)?;
    FAlgebraElement::from_coeffs(
        group.clone(),
        p,
        raw.into_iter().map(|c| (c % p as u64) as u32).collect(),
    )
}

/// Parse a chain-ring element literal (integer coefficients, reduced).
pub fn parse_element_r(
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    s: &str,
) -> Result<RAlgebraElement> {
    let raw = parse_raw(group, s)?;
    RAlgebraElement::from_coeffs(
        group.clone(),
        spec,
        raw.into_iter().map(|c| spec.from_int(c as i64)).collect(),
    )
}

fn monomial(group: &Arc<FiniteGroup>, g: usize) -> String {
    let dihedral = group.label().starts_with("dihedral:");
    if g == 0 {
        return "1".into();
    }
    if dihedral {
        let n = group.order() / 2;
        let (i, j) = (g % n, g / n);
        let r_part = match i {
            0 => String::new(),
            1 => "r".into(),
            _ => format!("r^{i}"),
        };
        let s_part = if j == 1 { "s" } else { "" };
        format!("{r_part}{s_part}")
    } else if g == 1 {
        "x".into()
    } else {
        format!("x^{g}")
    }
}

fn join_terms(group: &Arc<FiniteGroup>, coeffs: Vec<String>) -> String {
    let mut parts = Vec::new();
    for (g, c) in coeffs.into_iter().enumerate() {
        if c == "0" {
            continue;
        }
        let m = monomial(group, g);
        let term = if m == "1" {
            c
        } else if c == "1" {
            m
        } else if c.contains('+') {
            format!("({c}){m}")
        } else {
            format!("{c}{m}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// Render a residue-field element in the group's literal syntax.
pub fn format_element_f(e: &FAlgebraElement) -> String {
    join_terms(e.group(), e.coeffs().iter().map(|c| c.to_string()).collect())
}

/// Render a chain-ring element; polynomial-flavor coefficients appear as
/// u-polynomials in parentheses.
pub fn format_element_r(e: &RAlgebraElement) -> String {
    let spec = e.spec();
    join_terms(
        e.group(),
        e.coeffs().iter().map(|&c| spec.format_scalar(c)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingFlavor;

    #[test]
    fn cyclic_round_trip() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let e = parse_element_f(&c3, 2, "x+x^2").unwrap();
        assert_eq!(e.coeffs(), &[0, 1, 1]);
        assert_eq!(format_element_f(&e), "x+x^2");
        let one = parse_element_f(&c3, 2, "1").unwrap();
        assert_eq!(one.coeffs(), &[1, 0, 0]);
        assert_eq!(parse_element_f(&c3, 2, "0").unwrap().coeffs(), &[0, 0, 0]);
        // Exponents wrap and coefficients reduce mod p.
        assert_eq!(parse_element_f(&c3, 2, "x^3+2x").unwrap().coeffs(), &[1, 0, 0]);
    }

    #[test]
    fn dihedral_words() {
        let d10 = FiniteGroup::dihedral(5).unwrap();
        let e = parse_element_f(&d10, 2, "1+r^2s+sr").unwrap();
        // sr = r^-1 s = r^4 s -> index 4 + 5 = 9; r^2 s -> index 7.
        let mut expect = vec![0u32; 10];
        expect[0] = 1;
        expect[7] = 1;
        expect[9] = 1;
        assert_eq!(e.coeffs(), &expect[..]);
        assert_eq!(format_element_f(&e), "1+r^2s+r^4s");
    }

    #[test]
    fn coefficient_list_fallback() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let e = parse_element_f(&c3, 3, "[1, 2, 0]").unwrap();
        assert_eq!(e.coeffs(), &[1, 2, 0]);
        let e = parse_element_f(&c3, 3, "1,2,0").unwrap();
        assert_eq!(e.coeffs(), &[1, 2, 0]);
        assert!(parse_element_f(&c3, 3, "1,2").is_err());
    }

    #[test]
    fn ring_element_round_trip() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let z4 = ChainRingSpec::new(2, 2, RingFlavor::IntegerResidue).unwrap();
        let e = parse_element_r(&c3, z4, "2+x+x^2").unwrap();
        assert_eq!(format_element_r(&e), "2+x+x^2");
        assert_eq!(format_element_r(&parse_element_r(&c3, z4, "3x+6").unwrap()), "2+3x");

        // Polynomial-flavor coefficients render as u-polynomials, with
        // parentheses where needed.
        let f2u = ChainRingSpec::new(2, 2, RingFlavor::Polynomial).unwrap();
        let e = RAlgebraElement::from_coeffs(
            c3.clone(),
            f2u,
            vec![crate::ring::RScalar(2), crate::ring::RScalar(3), crate::ring::RScalar(0)],
        )
        .unwrap();
        assert_eq!(format_element_r(&e), "u+(1+u)x");
    }

    #[test]
    fn parse_errors() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert!(parse_element_f(&c3, 2, "r+s").is_err());
        assert!(parse_element_f(&c3, 2, "").is_err());
        let d6 = FiniteGroup::dihedral(3).unwrap();
        assert!(parse_element_f(&d6, 2, "x^2").is_err());
    }
}
