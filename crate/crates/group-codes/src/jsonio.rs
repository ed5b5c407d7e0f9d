//! JSON representations of codes and chains, round-trippable and stable:
//! rows are emitted in canonical order with scalars in canonical text.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chain::CodeChain;
use crate::error::{Error, Result};
use crate::falgebra::FAlgebraElement;
use crate::fcodes::GroupCodeF;
use crate::group::FiniteGroup;
use crate::rcode::RCode;
use crate::ring::{ChainRingSpec, RScalar, RingFlavor};
use crate::search::SearchReport;

/// Parse a scalar in canonical text: decimal for Z/p^l, a polynomial in u
/// for F_p[u]/(u^l).
pub fn parse_scalar(spec: &ChainRingSpec, s: &str) -> Result<RScalar> {
    let s = s.trim();
    match spec.flavor {
        RingFlavor::IntegerResidue => {
            let v: u64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?;
            Ok(RScalar(v % spec.modulus()))
        }
        RingFlavor::Polynomial => {
            if s == "0" {
                return Ok(RScalar(0));
            }
            let mut value = 0u64;
            for term in s.split('+') {
                let term = term.trim();
                let (coeff_str, power) = match term.find('u') {
                    None => (term, None),
                    Some(i) => {
                        let exp = match term[i + 1..].strip_prefix('^') {
                            Some(e) => e
                                .parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad scalar term `{term}`")))?,
                            None if term[i + 1..].is_empty() => 1,
                            None => {
                                return Err(Error::Parse(format!("bad scalar term `{term}`")))
                            }
                        };
                        (&term[..i], Some(exp))
                    }
                };
                let coeff: u64 = if coeff_str.is_empty() {
                    1
                } else {
                    coeff_str
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad scalar term `{term}`")))?
                };
                let power = power.unwrap_or(0);
                if power >= spec.ell {
                    continue; // u^ell = 0
                }
                value += (coeff % spec.p as u64) * (spec.p as u64).pow(power);
            }
            Ok(RScalar(value % spec.modulus()))
        }
    }
}

/// JSON form of a residue-field group code.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldCodeJson {
    pub kind: String,
    pub group: String,
    pub p: u32,
    pub basis: Vec<Vec<u32>>,
}

pub fn field_code_to_json(code: &GroupCodeF) -> FieldCodeJson {
    FieldCodeJson {
        kind: "field-code".into(),
        group: code.group().label().to_string(),
        p: code.p(),
        basis: code.basis().to_vec(),
    }
}

pub fn field_code_from_json(json: &FieldCodeJson) -> Result<GroupCodeF> {
    if json.kind != "field-code" {
        return Err(Error::Parse(format!("expected kind field-code, got `{}`", json.kind)));
    }
    let group = FiniteGroup::parse_spec(&json.group)?;
    let code = GroupCodeF::from_span(group, json.p, json.basis.clone());
    if code.basis() != json.basis.as_slice() {
        return Err(Error::Parse("basis rows are not in canonical form".into()));
    }
    Ok(code)
}

/// JSON form of a chain-ring group code: canonical standard-form rows plus
/// their pivot data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingCodeJson {
    pub kind: String,
    pub ring: String,
    pub group: String,
    pub rows: Vec<Vec<String>>,
    pub pivot_columns: Vec<usize>,
    pub pivot_valuations: Vec<u32>,
}

pub fn ring_code_to_json(code: &RCode) -> RingCodeJson {
    let spec = code.spec();
    let standard = code.standard_rows();
    RingCodeJson {
        kind: "ring-code".into(),
        ring: spec.spec_string(),
        group: code.group().label().to_string(),
        rows: standard
            .iter()
            .map(|(r, _, _)| r.iter().map(|&x| spec.format_scalar(x)).collect())
            .collect(),
        pivot_columns: standard.iter().map(|&(_, c, _)| c).collect(),
        pivot_valuations: standard.iter().map(|&(_, _, a)| a).collect(),
    }
}

pub fn ring_code_from_json(json: &RingCodeJson) -> Result<RCode> {
    if json.kind != "ring-code" {
        return Err(Error::Parse(format!("expected kind ring-code, got `{}`", json.kind)));
    }
    let spec = ChainRingSpec::parse_spec(&json.ring)?;
    let group = FiniteGroup::parse_spec(&json.group)?;
    let rows = json
        .rows
        .iter()
        .map(|r| r.iter().map(|s| parse_scalar(&spec, s)).collect())
        .collect::<Result<Vec<Vec<RScalar>>>>()?;
    let code = RCode::from_rows(group, spec, rows);
    if !code.is_left_ideal() {
        return Err(Error::InvalidGenerator(
            "serialized rows do not span a left ideal".into(),
        ));
    }
    let round = ring_code_to_json(&code);
    if round.rows != json.rows {
        return Err(Error::Parse("rows are not the canonical standard form".into()));
    }
    Ok(code)
}

/// JSON form of a chain of field codes with their idempotent witnesses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainJson {
    pub kind: String,
    pub ring: String,
    pub codes: Vec<FieldCodeJson>,
    pub idempotents: Vec<Option<Vec<u32>>>,
}

pub fn chain_to_json(chain: &CodeChain) -> ChainJson {
    ChainJson {
        kind: "code-chain".into(),
        ring: chain.spec.spec_string(),
        codes: chain.codes.iter().map(field_code_to_json).collect(),
        idempotents: chain
            .idems
            .iter()
            .map(|w| w.as_ref().map(|e| e.coeffs().to_vec()))
            .collect(),
    }
}

pub fn chain_from_json(json: &ChainJson) -> Result<CodeChain> {
    if json.kind != "code-chain" {
        return Err(Error::Parse(format!("expected kind code-chain, got `{}`", json.kind)));
    }
    let spec = ChainRingSpec::parse_spec(&json.ring)?;
    let codes = json
        .codes
        .iter()
        .map(field_code_from_json)
        .collect::<Result<Vec<_>>>()?;
    let idems = json
        .idempotents
        .iter()
        .zip(&codes)
        .map(|(w, code)| {
            w.as_ref()
                .map(|coeffs| {
                    FAlgebraElement::from_coeffs(code.group().clone(), code.p(), coeffs.clone())
                })
                .transpose()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CodeChain { spec, codes, idems })
}

/// A self-dual search certificate: the report plus everything needed to
/// re-verify it offline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub kind: String,
    pub report: SearchReport,
    pub chain: ChainJson,
    pub code: RingCodeJson,
}

pub fn certificate_to_json(report: &SearchReport, chain: &CodeChain, code: &RCode) -> CertificateJson {
    CertificateJson {
        kind: "selfdual-certificate".into(),
        report: report.clone(),
        chain: chain_to_json(chain),
        code: ring_code_to_json(code),
    }
}

/// Group handle for a serialized report.
pub fn group_of_report(report: &SearchReport) -> Result<Arc<FiniteGroup>> {
    FiniteGroup::parse_spec(&report.group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::build_code_from_chain;
    use crate::ralgebra::RAlgebraElement;

    fn z4() -> ChainRingSpec {
        ChainRingSpec::new(2, 2, RingFlavor::IntegerResidue).unwrap()
    }

    #[test]
    fn scalar_text_round_trip() {
        let z8 = ChainRingSpec::new(2, 3, RingFlavor::IntegerResidue).unwrap();
        for v in 0..8u64 {
            let s = z8.format_scalar(RScalar(v));
            assert_eq!(parse_scalar(&z8, &s).unwrap(), RScalar(v));
        }
        let f2u3 = ChainRingSpec::new(2, 3, RingFlavor::Polynomial).unwrap();
        for v in 0..8u64 {
            let s = f2u3.format_scalar(RScalar(v));
            assert_eq!(parse_scalar(&f2u3, &s).unwrap(), RScalar(v), "text `{s}`");
        }
        let f3u2 = ChainRingSpec::new(3, 2, RingFlavor::Polynomial).unwrap();
        for v in 0..9u64 {
            let s = f3u2.format_scalar(RScalar(v));
            assert_eq!(parse_scalar(&f3u2, &s).unwrap(), RScalar(v), "text `{s}`");
        }
    }

    #[test]
    fn ring_code_round_trip() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let eps = RAlgebraElement::from_coeffs(
            c3,
            z4(),
            vec![RScalar(2), RScalar(1), RScalar(1)],
        )
        .unwrap();
        let code = RCode::principal(&eps);
        let json = ring_code_to_json(&code);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: RingCodeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ring_code_from_json(&parsed).unwrap(), code);
    }

    #[test]
    fn field_code_and_chain_round_trip() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let e = FAlgebraElement::from_coeffs(c3.clone(), 2, vec![0, 1, 1]).unwrap();
        let c0 = GroupCodeF::from_idempotent(&e).unwrap();
        assert_eq!(
            field_code_from_json(&field_code_to_json(&c0)).unwrap(),
            c0
        );

        let chain = CodeChain {
            spec: z4(),
            codes: vec![c0.clone(), c0],
            idems: vec![Some(e.clone()), Some(e)],
        };
        chain.validate().unwrap();
        let back = chain_from_json(&chain_to_json(&chain)).unwrap();
        assert!(back.same_codes(&chain));
        assert_eq!(back.idems, chain.idems);
        // And the rebuilt chain still builds the same code.
        assert_eq!(
            build_code_from_chain(&back).unwrap(),
            build_code_from_chain(&chain).unwrap()
        );
    }

    #[test]
    fn non_canonical_rows_rejected() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let code = RCode::full(c3, z4());
        let mut json = ring_code_to_json(&code);
        json.rows[0][0] = "3".into(); // scale a row: same ideal, wrong form
        assert!(ring_code_from_json(&json).is_err());
    }
}
