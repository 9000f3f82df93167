//! The forgetful translation from the λ-calculus to propositional logic —
//! signatures (T), judgements (α) and proofs (β) — and its section on
//! proofs: [`annotate`] builds, for any propositional proof, a λ proof that
//! erases back to it.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::deduction::ProofTree;
use crate::format::Codec;
use crate::lambda::{
    check_lambda_proof, Branch, LambdaCheckError, LambdaConclusion, LambdaContext, LambdaJudgement, LambdaRuleName,
    LambdaSignature, TermAlphabet, Term,
};
use crate::prop::{check_prop_proof, Adjective, PropCheckError, PropJudgement, PropRuleName, PropSignature, Proposition};
use crate::search::{enumerate_all_proofs, SearchBudget};
use crate::symbol::Symbol;

/// T: forget the term variables.
pub fn erase_signature(sig: &LambdaSignature) -> PropSignature {
    sig.base().clone()
}

/// Adds an ℕ-indexed alphabet of term variables: `x0, x1, …`, or with a
/// longer prefix (`x_`, `x__`, …) if some propositional variable would clash.
pub fn extend_signature(sig: &PropSignature) -> LambdaSignature {
    let mut prefix = String::from("x");
    loop {
        let alphabet = TermAlphabet::Indexed(Symbol::from(prefix.as_str()));
        if let Ok(extended) = LambdaSignature::new(sig.clone(), alphabet) {
            return extended;
        }
        prefix.push('_');
    }
}

fn erase_context(context: &LambdaContext) -> Vec<Proposition> {
    context.iter().map(|(_, p)| p.clone()).collect()
}

fn erase_conclusion(conclusion: &LambdaConclusion) -> (Proposition, Adjective) {
    match conclusion {
        LambdaConclusion::TypeDecl(p) => (p.clone(), Adjective::Prop),
        LambdaConclusion::Typing(_, p) => (p.clone(), Adjective::True),
    }
}

/// α: `x0:P0, …, x(n-1):P(n-1) ⊢ t : P` becomes `P0, …, P(n-1) ⊢ P true`;
/// `P type` becomes `P prop`.
pub fn erase_judgement(j: &LambdaJudgement) -> PropJudgement {
    let (conclusion, adjective) = erase_conclusion(&j.conclusion);
    PropJudgement::new(erase_context(&j.context), conclusion, adjective)
}

/// β on a single node: same species, term payloads dropped.
pub fn erase_rule(rule: &LambdaRuleName) -> PropRuleName {
    match rule {
        LambdaRuleName::Var(p) => PropRuleName::Var(p.clone()),
        LambdaRuleName::Hyp { context, prop, .. } => PropRuleName::Hyp {
            context: erase_context(context),
            prop: prop.clone(),
        },
        LambdaRuleName::Weak {
            context,
            prop,
            conclusion,
            ..
        } => {
            let (q, adjective) = erase_conclusion(conclusion);
            PropRuleName::Weak {
                context: erase_context(context),
                prop: prop.clone(),
                conclusion: q,
                adjective,
            }
        }
        LambdaRuleName::Form {
            connective,
            context,
            args,
        } => PropRuleName::Form {
            connective: connective.clone(),
            context: erase_context(context),
            args: args.clone(),
        },
        LambdaRuleName::Intro {
            connective,
            rule,
            context,
            args,
            ..
        } => PropRuleName::Intro {
            connective: connective.clone(),
            rule: rule.clone(),
            context: erase_context(context),
            args: args.clone(),
        },
        LambdaRuleName::Elim {
            connective,
            context,
            args,
            target,
            ..
        } => PropRuleName::Elim {
            connective: connective.clone(),
            context: erase_context(context),
            args: args.clone(),
            target: target.clone(),
        },
    }
}

/// β without checking the input first.
pub fn erase_tree(tree: &ProofTree<LambdaRuleName>) -> ProofTree<PropRuleName> {
    tree.map_rules(&mut erase_rule)
}

/// β: checks the λ proof, then relabels it node by node.
pub fn erase_proof(
    sig: &LambdaSignature,
    tree: &ProofTree<LambdaRuleName>,
) -> Result<ProofTree<PropRuleName>, LambdaCheckError> {
    check_lambda_proof(sig, tree)?;
    Ok(erase_tree(tree))
}

/// The λ side of a propositional proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annotation {
    pub signature: LambdaSignature,
    pub judgement: LambdaJudgement,
    pub proof: ProofTree<LambdaRuleName>,
}

impl Annotation {
    /// The extracted term, for truth judgements.
    pub fn term(&self) -> Option<&Term> {
        self.judgement.conclusion.term()
    }
}

fn name_context(alphabet: &TermAlphabet, context: &[Proposition]) -> LambdaContext {
    context
        .iter()
        .enumerate()
        .map(|(i, p)| (alphabet.nth(i).expect("indexed alphabets are infinite"), p.clone()))
        .collect()
}

/// Builds the λ proof mirroring `tree`, naming the variable at context
/// position `i` by the `i`-th name of the alphabet. Returns the proof and
/// its conclusion.
fn lift(
    alphabet: &TermAlphabet,
    tree: &ProofTree<PropRuleName>,
) -> (ProofTree<LambdaRuleName>, LambdaConclusion) {
    let children: Vec<_> = tree.children().iter().map(|c| lift(alphabet, c)).collect();
    let term_of = |i: usize| -> Term {
        children[i]
            .1
            .term()
            .cloned()
            .expect("checked proof: truth premise has a term")
    };
    let named = |ctx: &[Proposition]| name_context(alphabet, ctx);
    let (rule, conclusion) = match tree.rule() {
        PropRuleName::Var(p) => (
            LambdaRuleName::Var(p.clone()),
            LambdaConclusion::TypeDecl(Proposition::Atomic(p.clone())),
        ),
        PropRuleName::Hyp { context, prop } => {
            let x = alphabet.nth(context.len()).expect("infinite");
            (
                LambdaRuleName::Hyp {
                    context: named(context),
                    var: x.clone(),
                    prop: prop.clone(),
                },
                LambdaConclusion::Typing(Term::Var(x), prop.clone()),
            )
        }
        PropRuleName::Weak { context, prop, .. } => {
            let conclusion = children[1].1.clone();
            (
                LambdaRuleName::Weak {
                    context: named(context),
                    var: alphabet.nth(context.len()).expect("infinite"),
                    prop: prop.clone(),
                    conclusion: conclusion.clone(),
                },
                conclusion,
            )
        }
        PropRuleName::Form {
            connective,
            context,
            args,
        } => (
            LambdaRuleName::Form {
                connective: connective.clone(),
                context: named(context),
                args: args.clone(),
            },
            LambdaConclusion::TypeDecl(Proposition::apply(connective.clone(), args.clone())),
        ),
        PropRuleName::Intro {
            connective,
            rule,
            context,
            args,
        } => {
            let terms: Vec<Term> = children
                .iter()
                .enumerate()
                .filter(|(_, (_, c))| c.term().is_some())
                .map(|(i, _)| term_of(i))
                .collect();
            (
                LambdaRuleName::Intro {
                    connective: connective.clone(),
                    rule: rule.clone(),
                    context: named(context),
                    args: args.clone(),
                    terms: terms.clone(),
                },
                LambdaConclusion::Typing(
                    Term::ctor(connective.clone(), rule.clone(), terms),
                    Proposition::apply(connective.clone(), args.clone()),
                ),
            )
        }
        PropRuleName::Elim {
            connective,
            context,
            args,
            target,
        } => {
            let scrutinee = term_of(0);
            let branches: Vec<Branch> = tree.children()[1..]
                .iter()
                .enumerate()
                .map(|(k, branch)| {
                    // the branch premise's context extends `context` by the
                    // rule's truth positions; bind them by position
                    let binders = (context.len()..premise_context_len(branch.rule()))
                        .map(|i| alphabet.nth(i).expect("infinite"))
                        .collect();
                    Branch::new(binders, term_of(k + 1))
                })
                .collect();
            (
                LambdaRuleName::Elim {
                    connective: connective.clone(),
                    context: named(context),
                    args: args.clone(),
                    target: target.clone(),
                    scrutinee: scrutinee.clone(),
                    branches: branches.clone(),
                },
                LambdaConclusion::Typing(Term::elim(connective.clone(), scrutinee, branches), target.clone()),
            )
        }
    };
    let lambda_children = children.into_iter().map(|(t, _)| t).collect();
    (ProofTree::new(rule, lambda_children), conclusion)
}

/// Context length of the judgement a rule concludes.
fn premise_context_len(rule: &PropRuleName) -> usize {
    match rule {
        PropRuleName::Var(_) => 0,
        PropRuleName::Hyp { context, .. } | PropRuleName::Weak { context, .. } => context.len() + 1,
        PropRuleName::Form { context, .. }
        | PropRuleName::Intro { context, .. }
        | PropRuleName::Elim { context, .. } => context.len(),
    }
}

/// Extracts a λ proof from a propositional one. The result erases back:
/// β(proof) = `tree`, α(judgement) = the judgement `tree` proves, and
/// T(signature) = `sig`.
pub fn annotate(sig: &PropSignature, tree: &ProofTree<PropRuleName>) -> Result<Annotation, PropCheckError> {
    let proved = check_prop_proof(sig, tree)?;
    let signature = extend_signature(sig);
    let (proof, conclusion) = lift(signature.termvars(), tree);
    let judgement = LambdaJudgement::new(name_context(signature.termvars(), &proved.context), conclusion);
    Ok(Annotation {
        signature,
        judgement,
        proof,
    })
}

/// A λ triple and the propositional triple it erases to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismWitness {
    pub source: (LambdaSignature, LambdaJudgement, ProofTree<LambdaRuleName>),
    pub target: (PropSignature, PropJudgement, ProofTree<PropRuleName>),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RoundtripError {
    #[error("input proof does not check: {0}")]
    Input(#[from] PropCheckError),
    #[error("annotated proof does not check: {0}")]
    Annotated(LambdaCheckError),
    #[error("erasing the annotated signature does not give back the input signature")]
    Signature,
    #[error("annotated judgement erases to `{found}`, expected `{expected}`")]
    Judgement { expected: PropJudgement, found: PropJudgement },
    #[error("annotated proof proves `{found}`, but its judgement is `{expected}`")]
    Conclusion {
        expected: LambdaJudgement,
        found: LambdaJudgement,
    },
    #[error("erasing the annotated proof does not give back the input proof")]
    Proof,
}

/// Annotates `tree` and verifies every erasure equation, returning both
/// triples.
pub fn roundtrip(sig: &PropSignature, tree: &ProofTree<PropRuleName>) -> Result<MorphismWitness, RoundtripError> {
    let proved = check_prop_proof(sig, tree)?;
    let ann = annotate(sig, tree)?;
    let checked = check_lambda_proof(&ann.signature, &ann.proof).map_err(RoundtripError::Annotated)?;
    if checked != ann.judgement {
        return Err(RoundtripError::Conclusion {
            expected: ann.judgement,
            found: checked,
        });
    }
    if erase_signature(&ann.signature) != *sig {
        return Err(RoundtripError::Signature);
    }
    let erased = erase_judgement(&ann.judgement);
    if erased != proved {
        return Err(RoundtripError::Judgement {
            expected: proved,
            found: erased,
        });
    }
    if erase_tree(&ann.proof) != *tree {
        return Err(RoundtripError::Proof);
    }
    Ok(MorphismWitness {
        source: (ann.signature, ann.judgement, ann.proof),
        target: (sig.clone(), proved, tree.clone()),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorollaryReport {
    /// λ proofs whose erasure was checked.
    pub lambda_proofs: usize,
    pub erasure_failures: Vec<String>,
    /// Provable propositional judgements, and the proofs of them annotated.
    pub prop_judgements: usize,
    pub prop_proofs: usize,
    pub annotation_failures: Vec<String>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.erasure_failures.is_empty() && self.annotation_failures.is_empty()
    }
}

/// Both directions of the correspondence inside a budget.
///
/// Erasure: every λ proof over `extend_signature(sig)` maps under β to a
/// proof of its α-erased judgement. Annotation: every proof of every
/// provable propositional judgement annotates to a checking λ proof whose
/// α-image is that judgement. With a goal, only judgements erasing to /
/// equal to it are considered.
pub fn corollary_check(sig: &PropSignature, goal: Option<&PropJudgement>, budget: &SearchBudget) -> CorollaryReport {
    let lambda_sig = extend_signature(sig);
    let wanted = |j: &PropJudgement| goal.is_none_or(|g| g == j);

    let lambda_proofs: Vec<(LambdaJudgement, ProofTree<LambdaRuleName>)> = enumerate_all_proofs(&lambda_sig, budget)
        .into_iter()
        .filter(|(j, _)| wanted(&erase_judgement(j)))
        .flat_map(|(j, trees)| trees.into_iter().map(move |t| (j.clone(), t)))
        .collect();
    let erasure_failures: Vec<String> = lambda_proofs
        .par_iter()
        .filter_map(|(j, t)| {
            let expected = erase_judgement(j);
            match erase_proof(&lambda_sig, t).map(|p| check_prop_proof(sig, &p)) {
                Ok(Ok(found)) if found == expected => None,
                Ok(Ok(found)) => Some(format!("{}: erases to a proof of {found}", t.render())),
                Ok(Err(e)) => Some(format!("{}: erasure rejected: {e}", t.render())),
                Err(e) => Some(format!("{}: λ proof rejected: {e}", t.render())),
            }
        })
        .collect();

    let prop_proofs: Vec<(PropJudgement, Vec<ProofTree<PropRuleName>>)> = enumerate_all_proofs(sig, budget)
        .into_iter()
        .filter(|(j, _)| wanted(j))
        .collect();
    let annotation_failures: Vec<String> = prop_proofs
        .par_iter()
        .flat_map_iter(|(j, trees)| {
            trees.iter().filter_map(move |t| match roundtrip(sig, t) {
                Ok(w) if &w.target.1 == j => None,
                Ok(w) => Some(format!("{}: annotation erases to {}", t.render(), w.target.1)),
                Err(e) => Some(format!("{}: {e}", t.render())),
            })
        })
        .collect();

    CorollaryReport {
        lambda_proofs: lambda_proofs.len(),
        erasure_failures,
        prop_judgements: prop_proofs.len(),
        prop_proofs: prop_proofs.iter().map(|(_, t)| t.len()).sum(),
        annotation_failures,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InjectivityReport {
    pub lambda_proofs: usize,
    pub lambda_judgements: usize,
    /// Propositional judgements with two or more provable α-preimages.
    pub multi_preimage: Vec<(PropJudgement, Vec<LambdaJudgement>)>,
    /// λ judgements with two or more proofs, with their proof counts.
    pub multi_proof: Vec<(LambdaJudgement, usize)>,
    /// Propositional proofs that are the β-image of two or more λ proofs.
    pub beta_collisions: Vec<(ProofTree<PropRuleName>, usize)>,
}

/// Where α and β fail to be injective, among the λ proofs in the budget.
pub fn injectivity_report(sig: &LambdaSignature, budget: &SearchBudget) -> InjectivityReport {
    let all = enumerate_all_proofs(sig, budget);
    let mut preimages: BTreeMap<PropJudgement, BTreeSet<LambdaJudgement>> = BTreeMap::new();
    let mut images: BTreeMap<ProofTree<PropRuleName>, usize> = BTreeMap::new();
    let mut multi_proof = Vec::new();
    for (j, trees) in &all {
        preimages.entry(erase_judgement(j)).or_default().insert(j.clone());
        if trees.len() >= 2 {
            multi_proof.push((j.clone(), trees.len()));
        }
        for t in trees {
            *images.entry(erase_tree(t)).or_default() += 1;
        }
    }
    let mut multi_preimage: Vec<_> = preimages
        .into_iter()
        .filter(|(_, js)| js.len() >= 2)
        .map(|(p, js)| {
            let mut js: Vec<_> = js.into_iter().collect();
            js.sort_by_cached_key(Codec::render);
            (p, js)
        })
        .collect();
    multi_preimage.sort_by_cached_key(|(p, _)| p.render());
    let mut beta_collisions: Vec<_> = images.into_iter().filter(|(_, n)| *n >= 2).collect();
    beta_collisions.sort_by_cached_key(|(t, _)| t.render());
    InjectivityReport {
        lambda_proofs: all.iter().map(|(_, t)| t.len()).sum(),
        lambda_judgements: all.len(),
        multi_preimage,
        multi_proof,
        beta_collisions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{self, a, b, or};

    fn x(i: usize) -> Symbol {
        Symbol::from(format!("x{i}"))
    }

    #[test]
    fn golden_annotation() {
        let sig = samples::sig_pl();
        let ann = annotate(&sig, &samples::or_comm_proof()).unwrap();
        let swap = Term::elim(
            "or",
            Term::var("x0"),
            vec![
                Branch::new(vec![x(1)], Term::ctor("or", "right", vec![Term::var("x1")])),
                Branch::new(vec![x(1)], Term::ctor("or", "left", vec![Term::var("x1")])),
            ],
        );
        assert_eq!(ann.judgement, LambdaJudgement::typing(vec![(x(0), or(a(), b()))], swap, or(b(), a())));
        assert!(roundtrip(&sig, &samples::or_comm_proof()).is_ok());
    }

    #[test]
    fn intro_left_annotation() {
        let sig = samples::sig_pl();
        let var = |p: &str| ProofTree::leaf(PropRuleName::Var(p.into()));
        let tree = ProofTree::new(
            PropRuleName::Intro {
                connective: "or".into(),
                rule: "left".into(),
                context: vec![a()],
                args: vec![a(), b()],
            },
            vec![
                ProofTree::new(PropRuleName::Hyp { context: vec![], prop: a() }, vec![var("A")]),
                ProofTree::new(
                    PropRuleName::Weak {
                        context: vec![],
                        prop: a(),
                        conclusion: b(),
                        adjective: Adjective::Prop,
                    },
                    vec![var("A"), var("B")],
                ),
            ],
        );
        let ann = annotate(&sig, &tree).unwrap();
        assert_eq!(
            ann.judgement,
            LambdaJudgement::typing(
                vec![(x(0), a())],
                Term::ctor("or", "left", vec![Term::var("x0")]),
                or(a(), b())
            )
        );
        assert_eq!(erase_tree(&ann.proof), tree);
    }

    #[test]
    fn var_annotation_has_no_term() {
        let sig = samples::sig_pl();
        let ann = annotate(&sig, &ProofTree::leaf(PropRuleName::Var("A".into()))).unwrap();
        assert_eq!(ann.judgement, LambdaJudgement::type_decl(vec![], a()));
        assert_eq!(ann.term(), None);
    }

    #[test]
    fn erasure_examples() {
        let j = LambdaJudgement::typing(
            vec![(x(0), a()), (x(1), b())],
            Term::ctor("or", "left", vec![Term::var("x0")]),
            or(a(), b()),
        );
        assert_eq!(erase_judgement(&j), PropJudgement::truth(vec![a(), b()], or(a(), b())));
        assert_eq!(
            erase_judgement(&LambdaJudgement::type_decl(vec![(x(0), a())], b())),
            PropJudgement::prop(vec![a()], b())
        );
    }

    #[test]
    fn signature_extension() {
        let sig = samples::sig_pl();
        assert_eq!(erase_signature(&extend_signature(&sig)), sig);
        let clashing = PropSignature::new(vec!["x0".into()], vec![]).unwrap();
        let ext = extend_signature(&clashing);
        assert_eq!(ext.termvars(), &TermAlphabet::Indexed("x_".into()));
        let other = LambdaSignature::new(sig.clone(), TermAlphabet::Finite(vec!["u".into()])).unwrap();
        assert_eq!(erase_signature(&other), erase_signature(&extend_signature(&sig)));
    }

    #[test]
    fn depth_one_has_no_multiplicities() {
        let sig = extend_signature(&samples::sig_pl());
        let report = injectivity_report(&sig, &SearchBudget::new(1, 2, 1));
        assert_eq!(report.lambda_proofs, 2);
        assert!(report.multi_preimage.is_empty());
        assert!(report.multi_proof.is_empty());
        assert!(report.beta_collisions.is_empty());
    }

    #[test]
    fn renamed_self_collides_under_beta() {
        let sig = extend_signature(&samples::sig_pl());
        let var_a = ProofTree::leaf(LambdaRuleName::Var("A".into()));
        let hyp = |v: usize| ProofTree::new(LambdaRuleName::Hyp { context: vec![], var: x(v), prop: a() }, vec![var_a.clone()]);
        assert_ne!(hyp(0), hyp(1));
        assert_eq!(erase_proof(&sig, &hyp(0)), erase_proof(&sig, &hyp(1)));
        let report = injectivity_report(&sig, &SearchBudget::new(2, 1, 0).with_term_vars(2));
        assert!(!report.beta_collisions.is_empty());
    }

    #[test]
    fn corollary_on_bare_signature() {
        let report = corollary_check(&samples::sig_bare(), None, &SearchBudget::new(3, 2, 0));
        assert!(report.passed());
        assert!(report.lambda_proofs > 0 && report.prop_proofs > 0);
        let unprovable = PropJudgement::truth(vec![], a());
        let report = corollary_check(&samples::sig_pl(), Some(&unprovable), &SearchBudget::new(3, 2, 1));
        assert!(report.passed());
        assert_eq!((report.lambda_proofs, report.prop_proofs), (0, 0));
    }
}
