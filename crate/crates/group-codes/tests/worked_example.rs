//! A complete worked example over G = C7, R = Z/4Z: from the factorization
//! of x^7 - 1 through idempotents, a chain, the ring code, its dual, and
//! both distance computations.

use group_codes::chain::{
    build_code_from_chain, chain_extract, decide_relative_projective, min_hamming_r,
    DistanceMode, Verdict,
};
use group_codes::search::all_projective_codes;
use group_codes::{
    lift_idempotent, ChainRingSpec, CodeChain, FiniteGroup, RingFlavor,
};

#[test]
fn c7_end_to_end() {
    let g = FiniteGroup::cyclic(7).unwrap();
    let spec = ChainRingSpec::new(2, 2, RingFlavor::IntegerResidue).unwrap();

    // x^7 - 1 = (x + 1)(x^3 + x + 1)(x^3 + x^2 + 1) over F_2, so F_2 C7 has
    // 2^3 = 8 idempotents and 8 projective codes.
    let codes = all_projective_codes(&g, 2, 1 << 10).unwrap();
    assert_eq!(codes.len(), 8);

    // Pick the dimension-3 code C_0 (a Hamming-code relative) and the
    // dimension-4 code C_1 containing it; [C_0 <= C_1] is a chain.
    let (c0, e0) = codes
        .iter()
        .find(|(c, _)| c.dim() == 3 && c.is_self_orthogonal())
        .expect("self-orthogonal simplex code");
    let (c1, e1) = codes
        .iter()
        .find(|(c, _)| c.dim() == 4 && c0.is_subcode_of(c))
        .expect("containing Hamming code");
    assert_eq!(c0.min_hamming_distance(None).unwrap(), Some(4));
    assert_eq!(c1.min_hamming_distance(None).unwrap(), Some(3));

    // Idempotent generators lift to Z/4Z with the same reduction.
    for e in [e0, e1] {
        let eps = lift_idempotent(e, spec).unwrap();
        assert!(eps.is_idempotent());
        assert_eq!(eps.reduce_mod_m(), *e);
    }

    // Chain -> ring code: |C| = 2^(dim C_0 + dim C_1) and the chain comes
    // back out unchanged.
    let chain = CodeChain::from_codes(spec, vec![c0.clone(), c1.clone()]).unwrap();
    let code = build_code_from_chain(&chain).unwrap();
    assert_eq!(code.log_cardinality(), 7);
    assert!(matches!(
        decide_relative_projective(&code).unwrap(),
        Verdict::Yes(ref back) if back.same_codes(&chain)
    ));

    // d_H(C) = d_H(C_1) = 3, by the layer theorem and by brute force.
    assert_eq!(
        min_hamming_r(&code, DistanceMode::Theorem, 1 << 10).unwrap(),
        Some(3)
    );
    assert_eq!(
        min_hamming_r(&code, DistanceMode::Exhaustive, 1 << 10).unwrap(),
        Some(3)
    );

    // The dual's chain is the reversed chain of duals: [C_1^perp <= C_0^perp]
    // with dimensions 3 and 4 again (C_0^perp is the Hamming code itself).
    let dual_chain = chain_extract(&code.dual());
    assert!(dual_chain.same_codes(&chain.reversed_dual().unwrap()));
    assert_eq!(dual_chain.codes[0].dim(), 3);
    assert_eq!(dual_chain.codes[1].dim(), 4);
}
