//! Signature morphisms and the induced translation of propositions,
//! judgements and proofs.

use std::collections::BTreeMap;

use thiserror::Error;

use super::rules::PropRuleName;
use super::signature::PropSignature;
use super::syntax::{PropJudgement, Proposition};
use super::rules::check_prop_proof;
use crate::deduction::ProofTree;
use crate::format::Codec;
use crate::search::{enumerate_all_proofs, SearchBudget};
use crate::symbol::Symbol;

/// The raw maps of a morphism, in the order they were written.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismSpec {
    pub connectives: Vec<(Symbol, Symbol)>,
    /// `(source connective, source rule, target rule)`
    pub rules: Vec<(Symbol, Symbol, Symbol)>,
    pub vars: Vec<(Symbol, Symbol)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("no image given for connective `{0}`")]
    MissingConnective(Symbol),
    #[error("no image given for rule `{rule}` of `{connective}`")]
    MissingRule { connective: Symbol, rule: Symbol },
    #[error("no image given for variable `{0}`")]
    MissingVariable(Symbol),
    #[error("`{0}` is not declared in the source signature")]
    UnknownSource(String),
    #[error("`{0}` is not declared in the target signature")]
    UnknownTarget(String),
    #[error("`{0}` is mapped twice")]
    Duplicate(String),
    #[error("`{source_name}` has arity {source_arity} but its image `{target_name}` has arity {target_arity}")]
    ArityNotPreserved {
        source_name: Symbol,
        source_arity: usize,
        target_name: Symbol,
        target_arity: usize,
    },
    #[error("rule `{connective}`/`{rule}` and its image have different headers")]
    HeaderNotPreserved { connective: Symbol, rule: Symbol },
    #[error("rules of `{0}` are not mapped one-to-one onto the rules of its image")]
    RulesNotBijective(Symbol),
}

/// Connective map `f` (arity-preserving), per-connective rule maps `g_c`
/// (header-preserving, one-to-one onto the rules of `f(c)`), and variable
/// map `h`.
///
/// Elimination rules have one branch premise per introduction rule, so a
/// proof can only be carried across when every `g_c` is a bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropSignatureMorphism {
    connectives: BTreeMap<Symbol, Symbol>,
    rules: BTreeMap<(Symbol, Symbol), Symbol>,
    vars: BTreeMap<Symbol, Symbol>,
    /// For each source connective: the source rule index feeding each
    /// target branch, in target declaration order.
    branch_order: BTreeMap<Symbol, Vec<usize>>,
}

impl PropSignatureMorphism {
    pub fn new(
        source: &PropSignature,
        target: &PropSignature,
        spec: &MorphismSpec,
    ) -> Result<Self, MorphismError> {
        let mut connectives = BTreeMap::new();
        for (from, to) in &spec.connectives {
            let decl = source
                .connective(from)
                .ok_or_else(|| MorphismError::UnknownSource(from.to_string()))?;
            let image = target
                .connective(to)
                .ok_or_else(|| MorphismError::UnknownTarget(to.to_string()))?;
            if decl.arity != image.arity {
                return Err(MorphismError::ArityNotPreserved {
                    source_name: from.clone(),
                    source_arity: decl.arity,
                    target_name: to.clone(),
                    target_arity: image.arity,
                });
            }
            if connectives.insert(from.clone(), to.clone()).is_some() {
                return Err(MorphismError::Duplicate(from.to_string()));
            }
        }
        let mut rules = BTreeMap::new();
        for (c, r, r2) in &spec.rules {
            let header = source
                .header(c, r)
                .ok_or_else(|| MorphismError::UnknownSource(format!("{c}/{r}")))?;
            let c2 = connectives
                .get(c)
                .ok_or_else(|| MorphismError::MissingConnective(c.clone()))?;
            let header2 = target
                .header(c2, r2)
                .ok_or_else(|| MorphismError::UnknownTarget(format!("{c2}/{r2}")))?;
            if header != header2 {
                return Err(MorphismError::HeaderNotPreserved {
                    connective: c.clone(),
                    rule: r.clone(),
                });
            }
            if rules.insert((c.clone(), r.clone()), r2.clone()).is_some() {
                return Err(MorphismError::Duplicate(format!("{c}/{r}")));
            }
        }
        let mut vars = BTreeMap::new();
        for (from, to) in &spec.vars {
            if !source.has_propvar(from) {
                return Err(MorphismError::UnknownSource(from.to_string()));
            }
            if !target.has_propvar(to) {
                return Err(MorphismError::UnknownTarget(to.to_string()));
            }
            if vars.insert(from.clone(), to.clone()).is_some() {
                return Err(MorphismError::Duplicate(from.to_string()));
            }
        }
        let mut branch_order = BTreeMap::new();
        for decl in source.connectives() {
            let image = connectives
                .get(&decl.name)
                .and_then(|c| target.connective(c))
                .ok_or_else(|| MorphismError::MissingConnective(decl.name.clone()))?;
            let mut order = vec![None; image.rules.len()];
            for (i, (label, _)) in decl.rules.iter().enumerate() {
                let r2 = rules.get(&(decl.name.clone(), label.clone())).ok_or_else(|| {
                    MorphismError::MissingRule {
                        connective: decl.name.clone(),
                        rule: label.clone(),
                    }
                })?;
                let j = image.rule_index(r2).expect("checked above");
                if order[j].replace(i).is_some() {
                    return Err(MorphismError::RulesNotBijective(decl.name.clone()));
                }
            }
            let order: Option<Vec<usize>> = order.into_iter().collect();
            let order = order.ok_or_else(|| MorphismError::RulesNotBijective(decl.name.clone()))?;
            branch_order.insert(decl.name.clone(), order);
        }
        for v in source.propvars() {
            if !vars.contains_key(v) {
                return Err(MorphismError::MissingVariable(v.clone()));
            }
        }
        Ok(PropSignatureMorphism {
            connectives,
            rules,
            vars,
            branch_order,
        })
    }

    pub fn identity(sig: &PropSignature) -> Self {
        let spec = MorphismSpec {
            connectives: sig.connectives().iter().map(|d| (d.name.clone(), d.name.clone())).collect(),
            rules: sig
                .connectives()
                .iter()
                .flat_map(|d| d.rules.iter().map(|(r, _)| (d.name.clone(), r.clone(), r.clone())))
                .collect(),
            vars: sig.propvars().iter().map(|v| (v.clone(), v.clone())).collect(),
        };
        Self::new(sig, sig, &spec).expect("identity is always a morphism")
    }

    /// The maps in sorted order.
    pub fn to_spec(&self) -> MorphismSpec {
        MorphismSpec {
            connectives: self.connectives.iter().map(|(a, b)| (a.clone(), b.clone())).collect(),
            rules: self
                .rules
                .iter()
                .map(|((c, r), r2)| (c.clone(), r.clone(), r2.clone()))
                .collect(),
            vars: self.vars.iter().map(|(a, b)| (a.clone(), b.clone())).collect(),
        }
    }

    // Names outside the source signature are left alone; transport is only
    // meaningful on well-formed input.
    pub fn connective(&self, c: &Symbol) -> Symbol {
        self.connectives.get(c).unwrap_or(c).clone()
    }

    pub fn rule(&self, c: &Symbol, r: &Symbol) -> Symbol {
        self.rules.get(&(c.clone(), r.clone())).unwrap_or(r).clone()
    }

    pub fn var(&self, v: &Symbol) -> Symbol {
        self.vars.get(v).unwrap_or(v).clone()
    }
}

/// Values that can be carried along a signature morphism.
pub trait Transport {
    fn transport(&self, m: &PropSignatureMorphism) -> Self;
}

impl Transport for Proposition {
    fn transport(&self, m: &PropSignatureMorphism) -> Self {
        match self {
            Proposition::Atomic(v) => Proposition::Atomic(m.var(v)),
            Proposition::Apply(c, args) => {
                Proposition::Apply(m.connective(c), args.iter().map(|a| a.transport(m)).collect())
            }
        }
    }
}

impl<T: Transport> Transport for Vec<T> {
    fn transport(&self, m: &PropSignatureMorphism) -> Self {
        self.iter().map(|x| x.transport(m)).collect()
    }
}

impl Transport for PropJudgement {
    fn transport(&self, m: &PropSignatureMorphism) -> Self {
        PropJudgement::new(self.context.transport(m), self.conclusion.transport(m), self.adjective)
    }
}

impl Transport for PropRuleName {
    fn transport(&self, m: &PropSignatureMorphism) -> Self {
        match self {
            PropRuleName::Var(v) => PropRuleName::Var(m.var(v)),
            PropRuleName::Hyp { context, prop } => PropRuleName::Hyp {
                context: context.transport(m),
                prop: prop.transport(m),
            },
            PropRuleName::Weak {
                context,
                prop,
                conclusion,
                adjective,
            } => PropRuleName::Weak {
                context: context.transport(m),
                prop: prop.transport(m),
                conclusion: conclusion.transport(m),
                adjective: *adjective,
            },
            PropRuleName::Form {
                connective,
                context,
                args,
            } => PropRuleName::Form {
                connective: m.connective(connective),
                context: context.transport(m),
                args: args.transport(m),
            },
            PropRuleName::Intro {
                connective,
                rule,
                context,
                args,
            } => PropRuleName::Intro {
                connective: m.connective(connective),
                rule: m.rule(connective, rule),
                context: context.transport(m),
                args: args.transport(m),
            },
            PropRuleName::Elim {
                connective,
                context,
                args,
                target,
            } => PropRuleName::Elim {
                connective: m.connective(connective),
                context: context.transport(m),
                args: args.transport(m),
                target: target.transport(m),
            },
        }
    }
}

impl Transport for ProofTree<PropRuleName> {
    fn transport(&self, m: &PropSignatureMorphism) -> Self {
        self.fold(&mut |rule, mut children: Vec<ProofTree<PropRuleName>>| {
            if let PropRuleName::Elim { connective, .. } = rule {
                // branches follow the target's rule declaration order
                if let Some(order) = m.branch_order.get(connective) {
                    if children.len() == order.len() + 1 {
                        let branches: Vec<_> = order.iter().map(|&i| children[1 + i].clone()).collect();
                        children.truncate(1);
                        children.extend(branches);
                    }
                }
            }
            ProofTree::new(rule.transport(m), children)
        })
    }
}

/// `transport_prop`: carries any propositional value along `m`.
pub fn transport_prop<T: Transport>(m: &PropSignatureMorphism, x: &T) -> T {
    x.transport(m)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoherenceReport {
    pub proofs: usize,
    pub failures: Vec<String>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every proof over `source` inside the budget, carried along `m`, must
/// check over `target` and prove the carried judgement.
pub fn coherence_check(
    source: &PropSignature,
    target: &PropSignature,
    m: &PropSignatureMorphism,
    budget: &SearchBudget,
) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (j, trees) in enumerate_all_proofs(source, budget) {
        let expected = j.transport(m);
        for t in trees {
            report.proofs += 1;
            match check_prop_proof(target, &t.transport(m)) {
                Ok(found) if found == expected => {}
                Ok(found) => report.failures.push(format!("{}: proves {found}, expected {expected}", t.render())),
                Err(e) => report.failures.push(format!("{}: {e}", t.render())),
            }
        }
    }
    report
}
