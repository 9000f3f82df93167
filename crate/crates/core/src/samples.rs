//! Ready-made signatures, proofs and morphisms used by the CLI defaults and
//! the test suites.

use crate::deduction::ProofTree;
use crate::prop::{
    Adjective, ConnectiveDecl, Header, MorphismSpec, PropRuleName, PropSignature,
    PropSignatureMorphism, Proposition,
};
use crate::symbol::Symbol;

use Adjective::{Prop, True};

fn or_decl(name: &str, left: &str, right: &str) -> ConnectiveDecl {
    ConnectiveDecl::new(
        name,
        2,
        vec![
            (left.into(), Header::from([True, Prop])),
            (right.into(), Header::from([Prop, True])),
        ],
    )
}

fn and_decl(name: &str, pair: &str) -> ConnectiveDecl {
    ConnectiveDecl::new(name, 2, vec![(pair.into(), Header::from([True, True]))])
}

/// Propositional variables `A`, `B`; disjunction `or` (rules `left`,
/// `right`) and positive conjunction `and` (single rule `pair`).
pub fn sig_pl() -> PropSignature {
    PropSignature::new(vec!["A".into(), "B".into()], vec![or_decl("or", "left", "right"), and_decl("and", "pair")])
        .expect("well-formed")
}

/// [`sig_pl`] with only the variable `A`.
pub fn sig_pl_single() -> PropSignature {
    PropSignature::new(vec!["A".into()], vec![or_decl("or", "left", "right"), and_decl("and", "pair")])
        .expect("well-formed")
}

/// No connectives, one variable.
pub fn sig_bare() -> PropSignature {
    PropSignature::new(vec!["A".into()], vec![]).expect("well-formed")
}

pub fn a() -> Proposition {
    Proposition::atom("A")
}

pub fn b() -> Proposition {
    Proposition::atom("B")
}

pub fn or(x: Proposition, y: Proposition) -> Proposition {
    Proposition::apply("or", vec![x, y])
}

pub fn and(x: Proposition, y: Proposition) -> Proposition {
    Proposition::apply("and", vec![x, y])
}

fn node(rule: PropRuleName, children: Vec<ProofTree<PropRuleName>>) -> ProofTree<PropRuleName> {
    ProofTree::new(rule, children)
}

fn var(p: &str) -> ProofTree<PropRuleName> {
    ProofTree::leaf(PropRuleName::Var(p.into()))
}

/// The derivation of `A ∨ B ⊢ B ∨ A true`, with the elided subproofs filled
/// in from the leaves that are shown.
pub fn or_comm_proof() -> ProofTree<PropRuleName> {
    let ab = or(a(), b());
    let form_ab = node(
        PropRuleName::Form { connective: "or".into(), context: vec![], args: vec![a(), b()] },
        vec![var("A"), var("B")],
    );
    // A∨B ⊢ A∨B true
    let scrutinee = node(PropRuleName::Hyp { context: vec![], prop: ab.clone() }, vec![form_ab.clone()]);
    // A∨B ⊢ X prop
    let in_ab = |x: Proposition, leaf: &str| {
        node(
            PropRuleName::Weak { context: vec![], prop: ab.clone(), conclusion: x, adjective: Prop },
            vec![form_ab.clone(), var(leaf)],
        )
    };
    let ab_a = in_ab(a(), "A");
    let ab_b = in_ab(b(), "B");
    let gamma = vec![ab.clone()];

    // A∨B, A ⊢ B∨A true
    let left_branch = node(
        PropRuleName::Intro {
            connective: "or".into(),
            rule: "right".into(),
            context: vec![ab.clone(), a()],
            args: vec![b(), a()],
        },
        vec![
            node(
                PropRuleName::Weak { context: gamma.clone(), prop: a(), conclusion: b(), adjective: Prop },
                vec![ab_a.clone(), ab_b.clone()],
            ),
            node(PropRuleName::Hyp { context: gamma.clone(), prop: a() }, vec![ab_a.clone()]),
        ],
    );
    // A∨B, B ⊢ B∨A true
    let right_branch = node(
        PropRuleName::Intro {
            connective: "or".into(),
            rule: "left".into(),
            context: vec![ab.clone(), b()],
            args: vec![b(), a()],
        },
        vec![
            node(PropRuleName::Hyp { context: gamma.clone(), prop: b() }, vec![ab_b.clone()]),
            node(
                PropRuleName::Weak { context: gamma.clone(), prop: b(), conclusion: a(), adjective: Prop },
                vec![ab_b, ab_a],
            ),
        ],
    );
    node(
        PropRuleName::Elim { connective: "or".into(), context: gamma, args: vec![a(), b()], target: or(b(), a()) },
        vec![scrutinee, left_branch, right_branch],
    )
}

fn spec(
    connectives: &[(&str, &str)],
    rules: &[(&str, &str, &str)],
    vars: &[(&str, &str)],
) -> MorphismSpec {
    let s = |x: &str| Symbol::from(x);
    MorphismSpec {
        connectives: connectives.iter().map(|(a, b)| (s(a), s(b))).collect(),
        rules: rules.iter().map(|(c, r, r2)| (s(c), s(r), s(r2))).collect(),
        vars: vars.iter().map(|(a, b)| (s(a), s(b))).collect(),
    }
}

/// A copy of [`sig_pl`] with every name primed, and the renaming morphism.
pub fn primed_morphism() -> (PropSignature, PropSignatureMorphism) {
    let target = PropSignature::new(
        vec!["A'".into(), "B'".into()],
        vec![or_decl("or'", "left'", "right'"), and_decl("and'", "pair'")],
    )
    .expect("well-formed");
    let m = PropSignatureMorphism::new(
        &sig_pl(),
        &target,
        &spec(
            &[("or", "or'"), ("and", "and'")],
            &[("or", "left", "left'"), ("or", "right", "right'"), ("and", "pair", "pair'")],
            &[("A", "A'"), ("B", "B'")],
        ),
    )
    .expect("renaming preserves headers");
    (target, m)
}

/// Identifies `B` with `A` inside [`sig_pl`].
pub fn collapse_morphism() -> (PropSignature, PropSignatureMorphism) {
    let sig = sig_pl();
    let m = PropSignatureMorphism::new(
        &sig,
        &sig,
        &spec(
            &[("or", "or"), ("and", "and")],
            &[("or", "left", "left"), ("or", "right", "right"), ("and", "pair", "pair")],
            &[("A", "A"), ("B", "A")],
        ),
    )
    .expect("collapse preserves headers");
    (sig, m)
}

/// Into a signature whose disjunction declares its rules in the opposite
/// order (`inr` first), with `left ↦ inl`, `right ↦ inr`, and the variables
/// swapped.
pub fn flipped_morphism() -> (PropSignature, PropSignatureMorphism) {
    let flipped_or = ConnectiveDecl::new(
        "plus",
        2,
        vec![("inr".into(), Header::from([Prop, True])), ("inl".into(), Header::from([True, Prop]))],
    );
    let target =
        PropSignature::new(vec!["P".into(), "Q".into()], vec![and_decl("times", "tuple"), flipped_or])
            .expect("well-formed");
    let m = PropSignatureMorphism::new(
        &sig_pl(),
        &target,
        &spec(
            &[("or", "plus"), ("and", "times")],
            &[("or", "left", "inl"), ("or", "right", "inr"), ("and", "pair", "tuple")],
            &[("A", "Q"), ("B", "P")],
        ),
    )
    .expect("flip preserves headers");
    (target, m)
}
