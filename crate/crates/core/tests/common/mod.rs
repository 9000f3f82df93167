// Generators shared by the integration suites. Generated values only need to
// be syntactically valid; most are not well-typed.
#![allow(dead_code)]

use dedukt::format::Document;
use dedukt::lambda::{Branch, LambdaConclusion, LambdaJudgement, LambdaRuleName, LambdaSignature, TermAlphabet, Term};
use dedukt::prop::{Adjective, ConnectiveDecl, Header, MorphismSpec, PropJudgement, PropRuleName, PropSignature, Proposition};
use dedukt::{ProofTree, Symbol};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

const ATOMS: &[&str] = &["A", "B", "C", "P'"];
const CONNECTIVES: &[&str] = &["or", "and", "top", "imp", "sum3"];
const LABELS: &[&str] = &["left", "right", "pair", "in1", "unit"];
const TERMVARS: &[&str] = &["x0", "x1", "x2", "u", "v_1"];

fn sym(pool: &'static [&'static str]) -> impl Strategy<Value = Symbol> {
    select(pool).prop_map(Symbol::from)
}

pub fn adjective() -> impl Strategy<Value = Adjective> {
    prop_oneof![Just(Adjective::Prop), Just(Adjective::True)]
}

pub fn proposition() -> impl Strategy<Value = Proposition> {
    sym(ATOMS).prop_map(Proposition::Atomic).prop_recursive(3, 16, 3, |inner| {
        (sym(CONNECTIVES), prop::collection::vec(inner, 0..3)).prop_map(|(c, args)| Proposition::apply(c, args))
    })
}

fn props(max: usize) -> impl Strategy<Value = Vec<Proposition>> {
    prop::collection::vec(proposition(), 0..=max)
}

pub fn judgement() -> impl Strategy<Value = PropJudgement> {
    (props(3), proposition(), adjective()).prop_map(|(c, p, a)| PropJudgement::new(c, p, a))
}

pub fn term() -> impl Strategy<Value = Term> {
    sym(TERMVARS).prop_map(Term::Var).prop_recursive(3, 16, 3, |inner| {
        let branch = (prop::collection::vec(sym(TERMVARS), 0..3), inner.clone()).prop_map(|(b, t)| Branch::new(b, t));
        prop_oneof![
            (sym(CONNECTIVES), sym(LABELS), prop::collection::vec(inner.clone(), 0..3))
                .prop_map(|(c, r, args)| Term::ctor(c, r, args)),
            (sym(CONNECTIVES), inner, prop::collection::vec(branch, 0..3))
                .prop_map(|(c, s, bs)| Term::elim(c, s, bs)),
        ]
    })
}

pub fn lambda_context() -> impl Strategy<Value = Vec<(Symbol, Proposition)>> {
    prop::collection::vec((sym(TERMVARS), proposition()), 0..3)
}

pub fn lambda_conclusion() -> impl Strategy<Value = LambdaConclusion> {
    prop_oneof![
        proposition().prop_map(LambdaConclusion::TypeDecl),
        (term(), proposition()).prop_map(|(t, p)| LambdaConclusion::Typing(t, p)),
    ]
}

pub fn lambda_judgement() -> impl Strategy<Value = LambdaJudgement> {
    (lambda_context(), lambda_conclusion()).prop_map(|(c, j)| LambdaJudgement::new(c, j))
}

fn connective_decl(name: Symbol) -> impl Strategy<Value = ConnectiveDecl> {
    (0usize..=3).prop_flat_map(move |arity| {
        let name = name.clone();
        subsequence(LABELS, 0..=3).prop_flat_map(move |labels| {
            let name = name.clone();
            let n = labels.len();
            prop::collection::vec(prop::collection::vec(adjective(), arity), n).prop_map(move |headers| {
                let rules = labels
                    .iter()
                    .zip(headers)
                    .map(|(l, h)| (Symbol::from(*l), Header::new(h)))
                    .collect();
                ConnectiveDecl::new(name.clone(), arity, rules)
            })
        })
    })
}

pub fn signature() -> impl Strategy<Value = PropSignature> {
    (subsequence(ATOMS, 0..=3), subsequence(CONNECTIVES, 0..=3)).prop_flat_map(|(vars, names)| {
        let decls: Vec<_> = names.into_iter().map(|n| connective_decl(n.into())).collect();
        decls.prop_map(move |connectives| {
            PropSignature::new(vars.iter().map(|v| Symbol::from(*v)).collect(), connectives).expect("distinct names")
        })
    })
}

pub fn lambda_signature() -> impl Strategy<Value = LambdaSignature> {
    let alphabet = prop_oneof![
        select(&["x", "y", "var_"][..]).prop_map(|p| TermAlphabet::Indexed(p.into())),
        subsequence(&["u", "v", "w"][..], 1..=3).prop_map(|ns| TermAlphabet::Finite(ns.into_iter().map(Symbol::from).collect())),
    ];
    (signature(), alphabet).prop_map(|(s, a)| LambdaSignature::new(s, a).expect("no clash"))
}

pub fn morphism_spec() -> impl Strategy<Value = MorphismSpec> {
    let pair = |a, b| (sym(a), sym(b));
    (
        prop::collection::vec(pair(CONNECTIVES, CONNECTIVES), 0..4),
        prop::collection::vec((sym(CONNECTIVES), sym(LABELS), sym(LABELS)), 0..4),
        prop::collection::vec(pair(ATOMS, ATOMS), 0..4),
    )
        .prop_map(|(connectives, rules, vars)| MorphismSpec { connectives, rules, vars })
}

pub fn prop_rule() -> BoxedStrategy<PropRuleName> {
    prop_oneof![
        sym(ATOMS).prop_map(PropRuleName::Var),
        (props(2), proposition()).prop_map(|(context, prop)| PropRuleName::Hyp { context, prop }),
        (props(2), proposition(), proposition(), adjective()).prop_map(|(context, prop, conclusion, adjective)| {
            PropRuleName::Weak { context, prop, conclusion, adjective }
        }),
        (sym(CONNECTIVES), props(2), props(3)).prop_map(|(connective, context, args)| PropRuleName::Form {
            connective,
            context,
            args
        }),
        (sym(CONNECTIVES), sym(LABELS), props(2), props(3)).prop_map(|(connective, rule, context, args)| {
            PropRuleName::Intro { connective, rule, context, args }
        }),
        (sym(CONNECTIVES), props(2), props(3), proposition()).prop_map(|(connective, context, args, target)| {
            PropRuleName::Elim { connective, context, args, target }
        }),
    ]
    .boxed()
}

pub fn lambda_rule() -> BoxedStrategy<LambdaRuleName> {
    let branch = (prop::collection::vec(sym(TERMVARS), 0..3), term()).prop_map(|(b, t)| Branch::new(b, t));
    prop_oneof![
        sym(ATOMS).prop_map(LambdaRuleName::Var),
        (lambda_context(), sym(TERMVARS), proposition())
            .prop_map(|(context, var, prop)| LambdaRuleName::Hyp { context, var, prop }),
        (lambda_context(), sym(TERMVARS), proposition(), lambda_conclusion()).prop_map(
            |(context, var, prop, conclusion)| LambdaRuleName::Weak { context, var, prop, conclusion }
        ),
        (sym(CONNECTIVES), lambda_context(), props(3)).prop_map(|(connective, context, args)| LambdaRuleName::Form {
            connective,
            context,
            args
        }),
        (sym(CONNECTIVES), sym(LABELS), lambda_context(), props(3), prop::collection::vec(term(), 0..3)).prop_map(
            |(connective, rule, context, args, terms)| LambdaRuleName::Intro { connective, rule, context, args, terms }
        ),
        (sym(CONNECTIVES), lambda_context(), props(3), proposition(), term(), prop::collection::vec(branch, 0..3))
            .prop_map(|(connective, context, args, target, scrutinee, branches)| LambdaRuleName::Elim {
                connective,
                context,
                args,
                target,
                scrutinee,
                branches
            }),
    ]
    .boxed()
}

pub fn tree<R: Clone + std::fmt::Debug + 'static>(
    rule: BoxedStrategy<R>,
) -> impl Strategy<Value = ProofTree<R>> {
    rule.clone().prop_map(ProofTree::leaf).prop_recursive(3, 12, 3, move |inner| {
        (rule.clone(), prop::collection::vec(inner, 0..3)).prop_map(|(r, cs)| ProofTree::new(r, cs))
    })
}

pub fn document(kind: dedukt::format::DocumentKind) -> BoxedStrategy<Document> {
    use dedukt::format::DocumentKind as K;
    match kind {
        K::Proposition => proposition().prop_map(Document::Proposition).boxed(),
        K::Signature => signature().prop_map(Document::Signature).boxed(),
        K::LambdaSignature => lambda_signature().prop_map(Document::LambdaSignature).boxed(),
        K::Judgement => judgement().prop_map(Document::Judgement).boxed(),
        K::LambdaJudgement => lambda_judgement().prop_map(Document::LambdaJudgement).boxed(),
        K::Term => term().prop_map(Document::Term).boxed(),
        K::Proof => tree(prop_rule()).prop_map(Document::Proof).boxed(),
        K::LambdaProof => tree(lambda_rule()).prop_map(Document::LambdaProof).boxed(),
        K::Morphism => morphism_spec().prop_map(Document::Morphism).boxed(),
    }
}

/// Single-node mutations of a proof over SIG_PL: swap A and B in one rule
/// name, replace one rule by `Var(A)`, drop a node's last premise, or give a
/// node an extra premise.
pub fn mutations(tree: &ProofTree<PropRuleName>) -> Vec<ProofTree<PropRuleName>> {
    use dedukt::prop::{PropSignatureMorphism, Transport};
    let sig = dedukt::samples::sig_pl();
    let mut spec = PropSignatureMorphism::identity(&sig).to_spec();
    for (_, to) in spec.vars.iter_mut() {
        *to = if to.as_str() == "A" { "B".into() } else { "A".into() };
    }
    let swap = PropSignatureMorphism::new(&sig, &sig, &spec).expect("swap is a morphism");
    let var_a = PropRuleName::Var("A".into());
    let mut out = Vec::new();
    for path in tree.paths() {
        let node = tree.subtree(&path.0).expect("path");
        let children = node.children().to_vec();
        let mut replacements = vec![
            ProofTree::new(node.rule().transport(&swap), children.clone()),
            ProofTree::new(var_a.clone(), children.clone()),
        ];
        if !children.is_empty() {
            replacements.push(ProofTree::new(node.rule().clone(), children[..children.len() - 1].to_vec()));
        }
        let mut extra = children.clone();
        extra.push(ProofTree::leaf(var_a.clone()));
        replacements.push(ProofTree::new(node.rule().clone(), extra));
        for r in replacements {
            if r != *node {
                out.push(tree.replace_at(&path.0, r).expect("path"));
            }
        }
    }
    out
}
