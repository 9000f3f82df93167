mod common;

use std::sync::OnceLock;

use dedukt::correspondence::{annotate, erase_judgement, erase_proof, erase_signature, extend_signature, roundtrip};
use dedukt::lambda::{check_lambda_proof, LambdaJudgement, LambdaRuleName};
use dedukt::prop::{check_prop_proof, coherence_check, PropJudgement, PropRuleName, Transport};
use dedukt::search::{enumerate_all_proofs, SearchBudget};
use dedukt::{samples, ProofTree};
use proptest::prelude::*;
use proptest::sample::Index;

fn prop_proofs() -> &'static [(PropJudgement, ProofTree<PropRuleName>)] {
    static CELL: OnceLock<Vec<(PropJudgement, ProofTree<PropRuleName>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        enumerate_all_proofs(&samples::sig_pl(), &SearchBudget::new(4, 2, 1))
            .into_iter()
            .flat_map(|(j, ts)| ts.into_iter().map(move |t| (j.clone(), t)))
            .collect()
    })
}

fn lambda_proofs() -> &'static [(LambdaJudgement, ProofTree<LambdaRuleName>)] {
    static CELL: OnceLock<Vec<(LambdaJudgement, ProofTree<LambdaRuleName>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let sig = extend_signature(&samples::sig_pl());
        enumerate_all_proofs(&sig, &SearchBudget::new(4, 2, 1).with_term_vars(2))
            .into_iter()
            .flat_map(|(j, ts)| ts.into_iter().map(move |t| (j.clone(), t)))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn annotation_is_a_section_of_erasure(i in any::<Index>()) {
        let sig = samples::sig_pl();
        let (j, tree) = i.get(prop_proofs());
        let ann = annotate(&sig, tree).unwrap();
        prop_assert_eq!(&erase_signature(&ann.signature), &sig);
        prop_assert_eq!(&erase_judgement(&ann.judgement), j);
        prop_assert_eq!(check_lambda_proof(&ann.signature, &ann.proof), Ok(ann.judgement.clone()));
        prop_assert!(roundtrip(&sig, tree).is_ok());
    }

    #[test]
    fn erasure_preserves_proofs(i in any::<Index>()) {
        let sig = samples::sig_pl();
        let lsig = extend_signature(&sig);
        let (j, tree) = i.get(lambda_proofs());
        let erased = erase_proof(&lsig, tree).unwrap();
        prop_assert_eq!(check_prop_proof(&sig, &erased), Ok(erase_judgement(j)));
        prop_assert_eq!(erased.size(), tree.size());
    }

    #[test]
    fn mutations_never_prove_the_original(i in any::<Index>(), k in any::<Index>()) {
        let sig = samples::sig_pl();
        let (j, tree) = i.get(prop_proofs());
        let mutants = common::mutations(tree);
        let mutant = k.get(&mutants);
        prop_assert_ne!(check_prop_proof(&sig, mutant), Ok(j.clone()));
    }

    #[test]
    fn morphisms_carry_proofs(i in any::<Index>(), which in 0usize..3) {
        let (target, m) = [samples::primed_morphism, samples::collapse_morphism, samples::flipped_morphism][which]();
        let (j, tree) = i.get(prop_proofs());
        prop_assert_eq!(check_prop_proof(&target, &tree.transport(&m)), Ok(j.transport(&m)));
    }
}

#[test]
fn golden_mutations_all_fail() {
    let sig = samples::sig_pl();
    let tree = samples::or_comm_proof();
    let mutants = common::mutations(&tree);
    assert!(mutants.len() >= 3 * tree.size());
    for m in mutants {
        assert!(check_prop_proof(&sig, &m).is_err());
    }
}

#[test]
fn coherence_for_all_sample_morphisms() {
    let sig = samples::sig_pl();
    let budget = SearchBudget::new(3, 2, 1);
    for (target, m) in [samples::primed_morphism(), samples::collapse_morphism(), samples::flipped_morphism()] {
        let report = coherence_check(&sig, &target, &m, &budget);
        assert!(report.passed(), "{:?}", report.failures);
    }
}
