use proptest::prelude::*;

use parastat::fockmodule::{
    check_adjointness, check_variant_link, matrix, verify_relations, FockBasis, GeneratorLabel,
    Variant,
};
use parastat::gzbasis::{basis, GzPattern, Signature};

fn small_signature() -> impl Strategy<Value = Signature> {
    (1usize..=2, 1usize..=2, 1i64..=3).prop_map(|(m, n, p)| Signature::new(m, n, p, 4).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn relations_hold_for_both_gradings(sig in small_signature()) {
        let basis = FockBasis::new(sig);
        for v in [Variant::Osp, Variant::Pso] {
            let rep = verify_relations(&basis, v).unwrap();
            prop_assert!(rep.passed(), "{:?}", rep.failures().next());
            prop_assert!(check_adjointness(&basis, v).unwrap().passed());
        }
        prop_assert!(check_variant_link(&basis).unwrap().passed());
    }

    #[test]
    fn generators_move_one_level(sig in small_signature(), j in 1usize..=4, plus in any::<bool>()) {
        let r = sig.m + sig.n;
        let j = (j - 1) % r + 1;
        let sign = if plus { 1 } else { -1 };
        let gen = GeneratorLabel::from_unified(j, sig.m, sign, Variant::Pso);
        let fock = FockBasis::new(sig);
        let mat = matrix(&gen, &fock).unwrap();
        for (row, col, _) in mat.entries() {
            prop_assert_eq!(fock.patterns[row].level() - fock.patterns[col].level(), sign);
        }
    }

    #[test]
    fn pattern_text_round_trips(sig in small_signature()) {
        for pat in basis(&sig) {
            let back = GzPattern::parse(sig.m, sig.n, &pat.to_string()).unwrap();
            prop_assert_eq!(back, pat);
        }
    }
}
