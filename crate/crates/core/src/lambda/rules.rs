use std::collections::HashSet;

use thiserror::Error;

use super::syntax::{Branch, LambdaConclusion, LambdaContext, LambdaJudgement, Term};
use super::LambdaSignature;
use crate::deduction::{check_deduction, CheckError, Inference, ProofTree, Ruleset};
use crate::prop::{Adjective, ConnectiveDecl, PropRuleError, Proposition};
use crate::symbol::Symbol;

/// Rule names of the λ ruleset. Term payloads are explicit, so the
/// conclusion of every rule is a function of its name alone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LambdaRuleName {
    /// `⊢ p type`
    Var(Symbol),
    /// From `Γ ⊢ P type` conclude `Γ, x:P ⊢ x : P`, `x` fresh for `Γ`.
    Hyp {
        context: LambdaContext,
        var: Symbol,
        prop: Proposition,
    },
    /// From `Γ ⊢ P type` and `Γ ⊢ 𝒥` conclude `Γ, x:P ⊢ 𝒥`, `x` fresh.
    Weak {
        context: LambdaContext,
        var: Symbol,
        prop: Proposition,
        conclusion: LambdaConclusion,
    },
    Form {
        connective: Symbol,
        context: LambdaContext,
        args: Vec<Proposition>,
    },
    Intro {
        connective: Symbol,
        rule: Symbol,
        context: LambdaContext,
        args: Vec<Proposition>,
        /// One per `true` header entry, in position order.
        terms: Vec<Term>,
    },
    Elim {
        connective: Symbol,
        context: LambdaContext,
        args: Vec<Proposition>,
        target: Proposition,
        scrutinee: Term,
        /// One per rule of the connective, in declaration order.
        branches: Vec<Branch>,
    },
}

impl LambdaRuleName {
    pub fn species(&self) -> &'static str {
        match self {
            LambdaRuleName::Var(_) => "var",
            LambdaRuleName::Hyp { .. } => "self",
            LambdaRuleName::Weak { .. } => "weak",
            LambdaRuleName::Form { .. } => "form",
            LambdaRuleName::Intro { .. } => "intro",
            LambdaRuleName::Elim { .. } => "elim",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaRuleError {
    #[error(transparent)]
    Prop(#[from] PropRuleError),
    #[error("`{0}` is not a term variable of the signature")]
    NotATermVariable(Symbol),
    #[error("variable `{0}` already occurs in the context")]
    FreshnessViolation(Symbol),
    #[error("constructor `{connective}`/`{rule}` takes {expected} term(s), got {found}")]
    TermCountMismatch {
        connective: Symbol,
        rule: Symbol,
        expected: usize,
        found: usize,
    },
    #[error("eliminator of `{connective}` needs {expected} branch(es), got {found}")]
    BranchCountMismatch {
        connective: Symbol,
        expected: usize,
        found: usize,
    },
    #[error("branch `{rule}` of `{connective}` binds {expected} variable(s), got {found}")]
    BinderCountMismatch {
        connective: Symbol,
        rule: Symbol,
        expected: usize,
        found: usize,
    },
    #[error("variable `{0}` bound twice in one branch")]
    DuplicateBinder(Symbol),
}

pub type LambdaCheckError = CheckError<LambdaJudgement, LambdaRuleError>;

fn check_context(sig: &LambdaSignature, context: &LambdaContext) -> Result<(), LambdaRuleError> {
    let mut seen = HashSet::new();
    for (x, p) in context {
        if !sig.termvars().contains(x) {
            return Err(LambdaRuleError::NotATermVariable(x.clone()));
        }
        if !seen.insert(x) {
            return Err(LambdaRuleError::FreshnessViolation(x.clone()));
        }
        p.check(sig.base())?;
    }
    Ok(())
}

fn fresh_var(sig: &LambdaSignature, context: &LambdaContext, x: &Symbol) -> Result<(), LambdaRuleError> {
    if !sig.termvars().contains(x) {
        return Err(LambdaRuleError::NotATermVariable(x.clone()));
    }
    if context.iter().any(|(y, _)| y == x) {
        return Err(LambdaRuleError::FreshnessViolation(x.clone()));
    }
    Ok(())
}

fn lookup<'s>(
    sig: &'s LambdaSignature,
    connective: &Symbol,
    args: &[Proposition],
) -> Result<&'s ConnectiveDecl, LambdaRuleError> {
    let decl = sig
        .base()
        .connective(connective)
        .ok_or_else(|| PropRuleError::UnknownConnective(connective.clone()))?;
    if decl.arity != args.len() {
        return Err(PropRuleError::ArityMismatch {
            connective: connective.clone(),
            expected: decl.arity,
            found: args.len(),
        }
        .into());
    }
    for a in args {
        a.check(sig.base())?;
    }
    Ok(decl)
}

fn check_conclusion(sig: &LambdaSignature, conclusion: &LambdaConclusion) -> Result<(), LambdaRuleError> {
    conclusion.prop().check(sig.base())?;
    if let LambdaConclusion::Typing(t, _) = conclusion {
        t.check(sig)?;
    }
    Ok(())
}

fn extended(context: &LambdaContext, more: impl IntoIterator<Item = (Symbol, Proposition)>) -> LambdaContext {
    let mut out = context.clone();
    out.extend(more);
    out
}

/// Computes the inference a λ rule name denotes.
pub fn instantiate_lambda_rule(
    sig: &LambdaSignature,
    name: &LambdaRuleName,
) -> Result<Inference<LambdaJudgement>, LambdaRuleError> {
    match name {
        LambdaRuleName::Var(p) => {
            if !sig.base().has_propvar(p) {
                return Err(PropRuleError::UnknownVariable(p.clone()).into());
            }
            Ok(Inference::axiom(LambdaJudgement::type_decl(vec![], Proposition::Atomic(p.clone()))))
        }
        LambdaRuleName::Hyp { context, var, prop } => {
            check_context(sig, context)?;
            fresh_var(sig, context, var)?;
            prop.check(sig.base())?;
            Ok(Inference::new(
                vec![LambdaJudgement::type_decl(context.clone(), prop.clone())],
                LambdaJudgement::typing(
                    extended(context, [(var.clone(), prop.clone())]),
                    Term::Var(var.clone()),
                    prop.clone(),
                ),
            ))
        }
        LambdaRuleName::Weak {
            context,
            var,
            prop,
            conclusion,
        } => {
            check_context(sig, context)?;
            fresh_var(sig, context, var)?;
            prop.check(sig.base())?;
            check_conclusion(sig, conclusion)?;
            Ok(Inference::new(
                vec![
                    LambdaJudgement::type_decl(context.clone(), prop.clone()),
                    LambdaJudgement::new(context.clone(), conclusion.clone()),
                ],
                LambdaJudgement::new(extended(context, [(var.clone(), prop.clone())]), conclusion.clone()),
            ))
        }
        LambdaRuleName::Form {
            connective,
            context,
            args,
        } => {
            lookup(sig, connective, args)?;
            check_context(sig, context)?;
            let premises = args
                .iter()
                .map(|p| LambdaJudgement::type_decl(context.clone(), p.clone()))
                .collect();
            Ok(Inference::new(
                premises,
                LambdaJudgement::type_decl(context.clone(), Proposition::apply(connective.clone(), args.clone())),
            ))
        }
        LambdaRuleName::Intro {
            connective,
            rule,
            context,
            args,
            terms,
        } => {
            let decl = lookup(sig, connective, args)?;
            check_context(sig, context)?;
            let header = decl.header(rule).ok_or_else(|| PropRuleError::UnknownRuleLabel {
                connective: connective.clone(),
                label: rule.clone(),
            })?;
            if header.true_count() != terms.len() {
                return Err(LambdaRuleError::TermCountMismatch {
                    connective: connective.clone(),
                    rule: rule.clone(),
                    expected: header.true_count(),
                    found: terms.len(),
                });
            }
            for t in terms {
                t.check(sig)?;
            }
            let mut supplied = terms.iter();
            let premises = args
                .iter()
                .zip(header.entries())
                .map(|(p, adj)| match adj {
                    Adjective::Prop => LambdaJudgement::type_decl(context.clone(), p.clone()),
                    Adjective::True => {
                        let t = supplied.next().expect("counted above").clone();
                        LambdaJudgement::typing(context.clone(), t, p.clone())
                    }
                })
                .collect();
            Ok(Inference::new(
                premises,
                LambdaJudgement::typing(
                    context.clone(),
                    Term::ctor(connective.clone(), rule.clone(), terms.clone()),
                    Proposition::apply(connective.clone(), args.clone()),
                ),
            ))
        }
        LambdaRuleName::Elim {
            connective,
            context,
            args,
            target,
            scrutinee,
            branches,
        } => {
            let decl = lookup(sig, connective, args)?;
            check_context(sig, context)?;
            target.check(sig.base())?;
            scrutinee.check(sig)?;
            if decl.rules.len() != branches.len() {
                return Err(LambdaRuleError::BranchCountMismatch {
                    connective: connective.clone(),
                    expected: decl.rules.len(),
                    found: branches.len(),
                });
            }
            let mut premises = Vec::with_capacity(1 + branches.len());
            premises.push(LambdaJudgement::typing(
                context.clone(),
                scrutinee.clone(),
                Proposition::apply(connective.clone(), args.clone()),
            ));
            for ((label, header), branch) in decl.rules.iter().zip(branches) {
                if branch.binders.len() != header.true_count() {
                    return Err(LambdaRuleError::BinderCountMismatch {
                        connective: connective.clone(),
                        rule: label.clone(),
                        expected: header.true_count(),
                        found: branch.binders.len(),
                    });
                }
                let mut seen = HashSet::new();
                for x in &branch.binders {
                    fresh_var(sig, context, x)?;
                    if !seen.insert(x) {
                        return Err(LambdaRuleError::DuplicateBinder(x.clone()));
                    }
                }
                branch.body.check(sig)?;
                let ctx = extended(
                    context,
                    branch.binders.iter().cloned().zip(header.filter_true(args).cloned()),
                );
                premises.push(LambdaJudgement::typing(ctx, branch.body.clone(), target.clone()));
            }
            Ok(Inference::new(
                premises,
                LambdaJudgement::typing(
                    context.clone(),
                    Term::elim(connective.clone(), scrutinee.clone(), branches.clone()),
                    target.clone(),
                ),
            ))
        }
    }
}

impl Ruleset for LambdaSignature {
    type Rule = LambdaRuleName;
    type Judgement = LambdaJudgement;
    type Error = LambdaRuleError;

    fn instantiate(&self, rule: &LambdaRuleName) -> Result<Inference<LambdaJudgement>, LambdaRuleError> {
        instantiate_lambda_rule(self, rule)
    }
}

/// Checks a λ proof and returns the typing or type-formation judgement it
/// proves. Context variables are kept distinct at every node.
pub fn check_lambda_proof(
    sig: &LambdaSignature,
    tree: &ProofTree<LambdaRuleName>,
) -> Result<LambdaJudgement, LambdaCheckError> {
    check_deduction(sig, tree)
}
