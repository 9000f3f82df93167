use thiserror::Error;

use super::signature::{Adjective, ConnectiveDecl, PropSignature};
use super::syntax::{PropJudgement, Proposition};
use crate::deduction::{check_deduction, CheckError, Inference, ProofTree, Ruleset};
use crate::symbol::Symbol;

/// Rule names of the propositional ruleset. Each name carries every
/// parameter needed to compute its inference.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropRuleName {
    /// `⊢ p prop`
    Var(Symbol),
    /// The Self rule: from `Γ ⊢ P prop` conclude `Γ, P ⊢ P true`.
    Hyp {
        context: Vec<Proposition>,
        prop: Proposition,
    },
    /// From `Γ ⊢ P prop` and `Γ ⊢ Q adj` conclude `Γ, P ⊢ Q adj`.
    Weak {
        context: Vec<Proposition>,
        prop: Proposition,
        conclusion: Proposition,
        adjective: Adjective,
    },
    Form {
        connective: Symbol,
        context: Vec<Proposition>,
        args: Vec<Proposition>,
    },
    Intro {
        connective: Symbol,
        rule: Symbol,
        context: Vec<Proposition>,
        args: Vec<Proposition>,
    },
    Elim {
        connective: Symbol,
        context: Vec<Proposition>,
        args: Vec<Proposition>,
        target: Proposition,
    },
}

impl PropRuleName {
    pub fn species(&self) -> &'static str {
        match self {
            PropRuleName::Var(_) => "var",
            PropRuleName::Hyp { .. } => "self",
            PropRuleName::Weak { .. } => "weak",
            PropRuleName::Form { .. } => "form",
            PropRuleName::Intro { .. } => "intro",
            PropRuleName::Elim { .. } => "elim",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropRuleError {
    #[error("unknown connective `{0}`")]
    UnknownConnective(Symbol),
    #[error("connective `{connective}` has no rule `{label}`")]
    UnknownRuleLabel { connective: Symbol, label: Symbol },
    #[error("unknown propositional variable `{0}`")]
    UnknownVariable(Symbol),
    #[error("connective `{connective}` takes {expected} argument(s), got {found}")]
    ArityMismatch {
        connective: Symbol,
        expected: usize,
        found: usize,
    },
}

pub type PropCheckError = CheckError<PropJudgement, PropRuleError>;

fn lookup<'s>(
    sig: &'s PropSignature,
    connective: &Symbol,
    args: &[Proposition],
) -> Result<&'s ConnectiveDecl, PropRuleError> {
    let decl = sig
        .connective(connective)
        .ok_or_else(|| PropRuleError::UnknownConnective(connective.clone()))?;
    if decl.arity != args.len() {
        return Err(PropRuleError::ArityMismatch {
            connective: connective.clone(),
            expected: decl.arity,
            found: args.len(),
        });
    }
    args.iter().try_for_each(|a| a.check(sig))?;
    Ok(decl)
}

fn check_context(sig: &PropSignature, context: &[Proposition]) -> Result<(), PropRuleError> {
    context.iter().try_for_each(|p| p.check(sig))
}

fn extended(context: &[Proposition], more: impl IntoIterator<Item = Proposition>) -> Vec<Proposition> {
    let mut out = context.to_vec();
    out.extend(more);
    out
}

/// Computes the inference a rule name denotes.
pub fn instantiate_prop_rule(
    sig: &PropSignature,
    name: &PropRuleName,
) -> Result<Inference<PropJudgement>, PropRuleError> {
    match name {
        PropRuleName::Var(p) => {
            if !sig.has_propvar(p) {
                return Err(PropRuleError::UnknownVariable(p.clone()));
            }
            Ok(Inference::axiom(PropJudgement::prop(vec![], Proposition::Atomic(p.clone()))))
        }
        PropRuleName::Hyp { context, prop } => {
            check_context(sig, context)?;
            prop.check(sig)?;
            Ok(Inference::new(
                vec![PropJudgement::prop(context.clone(), prop.clone())],
                PropJudgement::truth(extended(context, [prop.clone()]), prop.clone()),
            ))
        }
        PropRuleName::Weak {
            context,
            prop,
            conclusion,
            adjective,
        } => {
            check_context(sig, context)?;
            prop.check(sig)?;
            conclusion.check(sig)?;
            Ok(Inference::new(
                vec![
                    PropJudgement::prop(context.clone(), prop.clone()),
                    PropJudgement::new(context.clone(), conclusion.clone(), *adjective),
                ],
                PropJudgement::new(extended(context, [prop.clone()]), conclusion.clone(), *adjective),
            ))
        }
        PropRuleName::Form {
            connective,
            context,
            args,
        } => {
            lookup(sig, connective, args)?;
            check_context(sig, context)?;
            let premises = args
                .iter()
                .map(|p| PropJudgement::prop(context.clone(), p.clone()))
                .collect();
            Ok(Inference::new(
                premises,
                PropJudgement::prop(context.clone(), Proposition::apply(connective.clone(), args.clone())),
            ))
        }
        PropRuleName::Intro {
            connective,
            rule,
            context,
            args,
        } => {
            let decl = lookup(sig, connective, args)?;
            check_context(sig, context)?;
            let header = decl.header(rule).ok_or_else(|| PropRuleError::UnknownRuleLabel {
                connective: connective.clone(),
                label: rule.clone(),
            })?;
            let premises = args
                .iter()
                .zip(header.entries())
                .map(|(p, adj)| PropJudgement::new(context.clone(), p.clone(), *adj))
                .collect();
            Ok(Inference::new(
                premises,
                PropJudgement::truth(context.clone(), Proposition::apply(connective.clone(), args.clone())),
            ))
        }
        PropRuleName::Elim {
            connective,
            context,
            args,
            target,
        } => {
            let decl = lookup(sig, connective, args)?;
            check_context(sig, context)?;
            target.check(sig)?;
            let mut premises = Vec::with_capacity(1 + decl.rules.len());
            premises.push(PropJudgement::truth(
                context.clone(),
                Proposition::apply(connective.clone(), args.clone()),
            ));
            for (_, header) in &decl.rules {
                let ctx = extended(context, header.filter_true(args).cloned());
                premises.push(PropJudgement::truth(ctx, target.clone()));
            }
            Ok(Inference::new(premises, PropJudgement::truth(context.clone(), target.clone())))
        }
    }
}

impl Ruleset for PropSignature {
    type Rule = PropRuleName;
    type Judgement = PropJudgement;
    type Error = PropRuleError;

    fn instantiate(&self, rule: &PropRuleName) -> Result<Inference<PropJudgement>, PropRuleError> {
        instantiate_prop_rule(self, rule)
    }
}

/// Checks a propositional proof and returns the judgement it proves.
pub fn check_prop_proof(
    sig: &PropSignature,
    tree: &ProofTree<PropRuleName>,
) -> Result<PropJudgement, PropCheckError> {
    check_deduction(sig, tree)
}
