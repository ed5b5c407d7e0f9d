//! Verification suites: systematic property checks over all chains of a
//! given group and ring, shared by the CLI `verify` command and the
//! integration tests.

use std::str::FromStr;
use std::sync::Arc;

use crate::chain::{
    build_code_from_chain, chain_extract, decide_relative_projective, euclidean_weights,
    min_hamming_r, DistanceMode, Verdict,
};
use crate::error::{Error, Result};
use crate::fcodes::GroupCodeF;
use crate::group::FiniteGroup;
use crate::rcode::RCode;
use crate::ring::{ChainRingSpec, RingFlavor};
use crate::search::{all_chains, enumerate_idempotents_exhaustive};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Roundtrip,
    Duality,
    Distance,
    Euclidean,
    Parity,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "roundtrip" => Ok(Suite::Roundtrip),
            "duality" => Ok(Suite::Duality),
            "distance" => Ok(Suite::Distance),
            "euclidean" => Ok(Suite::Euclidean),
            "parity" => Ok(Suite::Parity),
            _ => Err(Error::Parse(format!(
                "unknown suite `{s}` (want roundtrip|duality|distance|euclidean|parity)"
            ))),
        }
    }
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Duality => "duality",
            Suite::Distance => "distance",
            Suite::Euclidean => "euclidean",
            Suite::Parity => "parity",
        }
    }
}

/// Result of one suite run over one (group, ring) pair.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub group: String,
    pub ring: String,
    pub checks: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: Suite, group: &Arc<FiniteGroup>, spec: ChainRingSpec) -> Self {
        SuiteOutcome {
            suite: suite.name().into(),
            group: group.label().to_string(),
            ring: spec.spec_string(),
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run one suite; `budget` caps every exhaustive enumeration inside.
pub fn run_suite(
    suite: Suite,
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    budget: u64,
) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new(suite, group, spec);
    match suite {
        Suite::Roundtrip => roundtrip(group, spec, budget, &mut out)?,
        Suite::Duality => duality(group, spec, budget, &mut out)?,
        Suite::Distance => distance(group, spec, budget, &mut out)?,
        Suite::Euclidean => euclidean(group, spec, budget, &mut out)?,
        Suite::Parity => parity(group, spec, budget, &mut out)?,
    }
    Ok(out)
}

fn built_chains(
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    budget: u64,
) -> Result<Vec<(crate::chain::CodeChain, RCode)>> {
    all_chains(group, spec, budget)?
        .into_iter()
        .map(|ch| {
            let code = build_code_from_chain(&ch)?;
            Ok((ch, code))
        })
        .collect()
}

/// Chain -> code -> chain is the identity; distinct chains give distinct
/// codes; verdicts are Yes (Indeterminate is logged, never coerced).
fn roundtrip(
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    budget: u64,
    out: &mut SuiteOutcome,
) -> Result<()> {
    let mut codes_seen: std::collections::BTreeMap<String, usize> = Default::default();
    for (i, (chain, code)) in built_chains(group, spec, budget)?.into_iter().enumerate() {
        out.checks += 1;
        let back = chain_extract(&code);
        if !back.same_codes(&chain) {
            out.failures.push(format!("chain {i}: extract(build) differs"));
            continue;
        }
        match decide_relative_projective(&code)? {
            Verdict::Yes(cert) => {
                if !cert.same_codes(&chain) {
                    out.failures.push(format!("chain {i}: verdict chain differs"));
                }
            }
            Verdict::No(_) => out.failures.push(format!("chain {i}: verdict No")),
            Verdict::Indeterminate { .. } => {
                out.notes.push(format!("chain {i}: Indeterminate verdict (logged)"));
            }
        }
        let key = format!("{:?}", code.standard_rows());
        if let Some(&j) = codes_seen.get(&key) {
            out.failures.push(format!("chains {j} and {i} built the same code"));
        }
        codes_seen.insert(key, i);
    }
    Ok(())
}

/// Duality involution, dual-chain reversal, and agreement of the two dual
/// constructions over the residue field.
fn duality(
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    budget: u64,
    out: &mut SuiteOutcome,
) -> Result<()> {
    for e in enumerate_idempotents_exhaustive(group, spec.p, budget)? {
        out.checks += 1;
        // dual() cross-checks F_p G (1 - e*) against the Gram nullspace
        // internally and errors on divergence.
        if let Err(err) = GroupCodeF::from_idempotent(&e)?.dual(Some(&e)) {
            out.failures.push(format!("field dual divergence: {err}"));
        }
    }
    for (i, (chain, code)) in built_chains(group, spec, budget)?.into_iter().enumerate() {
        out.checks += 1;
        let dual = code.dual();
        if dual.dual() != code {
            out.failures.push(format!("chain {i}: dual not an involution"));
            continue;
        }
        let dual_chain = chain_extract(&dual);
        let expected = chain.reversed_dual()?;
        if !dual_chain.same_codes(&expected) {
            out.failures.push(format!("chain {i}: dual chain is not the reversed duals"));
        }
    }
    Ok(())
}

/// Theorem-mode distance equals exhaustive-mode distance (codes whose
/// cardinality exceeds the budget are skipped and noted).
fn distance(
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    budget: u64,
    out: &mut SuiteOutcome,
) -> Result<()> {
    let mut skipped = 0u64;
    for (i, (_, code)) in built_chains(group, spec, budget)?.into_iter().enumerate() {
        let theorem = min_hamming_r(&code, DistanceMode::Theorem, budget)?;
        match min_hamming_r(&code, DistanceMode::Exhaustive, budget) {
            Ok(exhaustive) => {
                out.checks += 1;
                if theorem != exhaustive {
                    out.failures.push(format!(
                        "chain {i}: theorem {theorem:?} != exhaustive {exhaustive:?}"
                    ));
                }
            }
            Err(Error::BudgetExceeded { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    if skipped > 0 {
        out.notes.push(format!("{skipped} codes over the enumeration budget, skipped"));
    }
    Ok(())
}

/// d_E >= gamma bound on every code (enforced inside euclidean_weights).
fn euclidean(
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    budget: u64,
    out: &mut SuiteOutcome,
) -> Result<()> {
    if spec.flavor != RingFlavor::IntegerResidue {
        return Err(Error::UnsupportedRing(
            "euclidean suite needs the integer-residue flavor".into(),
        ));
    }
    let mut unbounded = 0u64;
    for (i, (_, code)) in built_chains(group, spec, budget)?.into_iter().enumerate() {
        out.checks += 1;
        let rep = euclidean_weights(&code, budget)?;
        match (rep.d_e_exhaustive, rep.gamma_bound) {
            (Some(de), Some(g)) if de < g => {
                out.failures.push(format!("chain {i}: d_E {de} below bound {g}"));
            }
            (None, Some(_)) if !code.is_zero() => unbounded += 1,
            _ => {}
        }
    }
    if unbounded > 0 {
        out.notes
            .push(format!("{unbounded} codes over the enumeration budget (bound only)"));
    }
    Ok(())
}

/// Self-dual codes exist among all chains iff the ring length is even.
fn parity(
    group: &Arc<FiniteGroup>,
    spec: ChainRingSpec,
    budget: u64,
    out: &mut SuiteOutcome,
) -> Result<()> {
    let n = group.order() as u32;
    let target = n * spec.ell; // log |R|^|G|; self-dual needs half of it
    let mut found = 0u64;
    for (_, code) in built_chains(group, spec, budget)? {
        out.checks += 1;
        if 2 * code.log_cardinality() != target {
            continue;
        }
        if code == code.dual() {
            found += 1;
        }
    }
    let even = spec.ell % 2 == 0;
    match (even, found) {
        (true, 0) => out
            .failures
            .push("length is even but no self-dual chain code exists".into()),
        (false, f) if f > 0 => out
            .failures
            .push(format!("length is odd but {f} self-dual chain codes exist")),
        (true, f) => out.notes.push(format!("{f} self-dual codes found (ell even)")),
        (false, _) => out
            .notes
            .push("no self-dual relative projective codes (ell odd)".into()),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> ChainRingSpec {
        ChainRingSpec::new(2, 2, RingFlavor::IntegerResidue).unwrap()
    }

    #[test]
    fn suites_pass_on_c3_z4() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        for suite in [
            Suite::Roundtrip,
            Suite::Duality,
            Suite::Distance,
            Suite::Euclidean,
            Suite::Parity,
        ] {
            let out = run_suite(suite, &c3, z4(), 1 << 20).unwrap();
            assert!(out.passed(), "{suite:?}: {:?}", out.failures);
            assert!(out.checks > 0);
        }
    }

    #[test]
    fn parity_odd_length() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let z8 = ChainRingSpec::new(2, 3, RingFlavor::IntegerResidue).unwrap();
        let out = run_suite(Suite::Parity, &c3, z8, 1 << 20).unwrap();
        assert!(out.passed(), "{:?}", out.failures);
        assert!(out.notes.iter().any(|n| n.contains("ell odd")));
    }

    #[test]
    fn euclidean_suite_rejects_polynomial_flavor() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let f2u = ChainRingSpec::new(2, 2, RingFlavor::Polynomial).unwrap();
        assert!(run_suite(Suite::Euclidean, &c3, f2u, 1 << 20).is_err());
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("roundtrip".parse::<Suite>().unwrap(), Suite::Roundtrip);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
