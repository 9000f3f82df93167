use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use super::rules::LambdaRuleError;
use super::LambdaSignature;
use crate::prop::{PropRuleError, Proposition};
use crate::symbol::Symbol;

/// Terms: variables, one constructor per (connective, rule), and one
/// eliminator per connective.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(Symbol),
    /// `λ_c^r(args)`: one argument per `true` entry of the rule's header.
    Ctor {
        connective: Symbol,
        rule: Symbol,
        args: Arc<[Term]>,
    },
    /// `ε_c(scrutinee; branches)`: one branch per rule of `c`, in order.
    Elim {
        connective: Symbol,
        scrutinee: Arc<Term>,
        branches: Arc<[Branch]>,
    },
}

/// A case arm: variables bound for the rule's `true` positions, and a body.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Branch {
    pub binders: Vec<Symbol>,
    pub body: Term,
}

impl Branch {
    pub fn new(binders: Vec<Symbol>, body: Term) -> Self {
        Branch { binders, body }
    }
}

impl Term {
    pub fn var(name: impl Into<Symbol>) -> Self {
        Term::Var(name.into())
    }

    pub fn ctor(connective: impl Into<Symbol>, rule: impl Into<Symbol>, args: Vec<Term>) -> Self {
        Term::Ctor {
            connective: connective.into(),
            rule: rule.into(),
            args: args.into(),
        }
    }

    pub fn elim(connective: impl Into<Symbol>, scrutinee: Term, branches: Vec<Branch>) -> Self {
        Term::Elim {
            connective: connective.into(),
            scrutinee: Arc::new(scrutinee),
            branches: branches.into(),
        }
    }

    /// Checks constructor/eliminator shapes against the signature.
    pub fn check(&self, sig: &LambdaSignature) -> Result<(), LambdaRuleError> {
        match self {
            Term::Var(x) => {
                if sig.termvars().contains(x) {
                    Ok(())
                } else {
                    Err(LambdaRuleError::NotATermVariable(x.clone()))
                }
            }
            Term::Ctor {
                connective,
                rule,
                args,
            } => {
                let decl = sig
                    .base()
                    .connective(connective)
                    .ok_or_else(|| PropRuleError::UnknownConnective(connective.clone()))?;
                let header = decl.header(rule).ok_or_else(|| PropRuleError::UnknownRuleLabel {
                    connective: connective.clone(),
                    label: rule.clone(),
                })?;
                if header.true_count() != args.len() {
                    return Err(LambdaRuleError::TermCountMismatch {
                        connective: connective.clone(),
                        rule: rule.clone(),
                        expected: header.true_count(),
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|t| t.check(sig))
            }
            Term::Elim {
                connective,
                scrutinee,
                branches,
            } => {
                let decl = sig
                    .base()
                    .connective(connective)
                    .ok_or_else(|| PropRuleError::UnknownConnective(connective.clone()))?;
                if decl.rules.len() != branches.len() {
                    return Err(LambdaRuleError::BranchCountMismatch {
                        connective: connective.clone(),
                        expected: decl.rules.len(),
                        found: branches.len(),
                    });
                }
                scrutinee.check(sig)?;
                for ((label, header), branch) in decl.rules.iter().zip(branches.iter()) {
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
                        if !sig.termvars().contains(x) {
                            return Err(LambdaRuleError::NotATermVariable(x.clone()));
                        }
                        if !seen.insert(x) {
                            return Err(LambdaRuleError::DuplicateBinder(x.clone()));
                        }
                    }
                    branch.body.check(sig)?;
                }
                Ok(())
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Ctor { args, .. } => 1 + args.iter().map(Term::size).sum::<usize>(),
            Term::Elim {
                scrutinee, branches, ..
            } => 1 + scrutinee.size() + branches.iter().map(|b| b.body.size()).sum::<usize>(),
        }
    }
}

/// Free variables; eliminator binders are excluded within their own branch.
pub fn free_termvars(term: &Term) -> BTreeSet<Symbol> {
    fn go(term: &Term, out: &mut BTreeSet<Symbol>) {
        match term {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Ctor { args, .. } => args.iter().for_each(|t| go(t, out)),
            Term::Elim {
                scrutinee, branches, ..
            } => {
                go(scrutinee, out);
                for branch in branches.iter() {
                    let mut inner = BTreeSet::new();
                    go(&branch.body, &mut inner);
                    for b in &branch.binders {
                        inner.remove(b);
                    }
                    out.extend(inner);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    go(term, &mut out);
    out
}

pub type LambdaContext = Vec<(Symbol, Proposition)>;

/// Right-hand side of a λ judgement.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LambdaConclusion {
    /// `P type`
    TypeDecl(Proposition),
    /// `t : P`
    Typing(Term, Proposition),
}

impl LambdaConclusion {
    pub fn prop(&self) -> &Proposition {
        match self {
            LambdaConclusion::TypeDecl(p) | LambdaConclusion::Typing(_, p) => p,
        }
    }

    pub fn term(&self) -> Option<&Term> {
        match self {
            LambdaConclusion::Typing(t, _) => Some(t),
            LambdaConclusion::TypeDecl(_) => None,
        }
    }
}

/// `x0 : P0, …, x(n-1) : P(n-1) ⊢ 𝒥`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaJudgement {
    pub context: LambdaContext,
    pub conclusion: LambdaConclusion,
}

impl LambdaJudgement {
    pub fn new(context: LambdaContext, conclusion: LambdaConclusion) -> Self {
        LambdaJudgement {
            context,
            conclusion,
        }
    }

    pub fn type_decl(context: LambdaContext, prop: Proposition) -> Self {
        Self::new(context, LambdaConclusion::TypeDecl(prop))
    }

    pub fn typing(context: LambdaContext, term: Term, prop: Proposition) -> Self {
        Self::new(context, LambdaConclusion::Typing(term, prop))
    }

    /// Context variables pairwise distinct, and every free variable of the
    /// subject declared.
    pub fn is_well_scoped(&self) -> bool {
        let declared: HashSet<&Symbol> = self.context.iter().map(|(x, _)| x).collect();
        if declared.len() != self.context.len() {
            return false;
        }
        match &self.conclusion {
            LambdaConclusion::TypeDecl(_) => true,
            LambdaConclusion::Typing(t, _) => free_termvars(t).iter().all(|x| declared.contains(x)),
        }
    }

    pub fn nesting(&self) -> usize {
        self.context
            .iter()
            .map(|(_, p)| p)
            .chain(std::iter::once(self.conclusion.prop()))
            .map(Proposition::nesting)
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(names: &[&str]) -> BTreeSet<Symbol> {
        names.iter().map(|n| Symbol::from(*n)).collect()
    }

    #[test]
    fn free_variables() {
        assert_eq!(free_termvars(&Term::var("x")), set(&["x"]));
        assert_eq!(free_termvars(&Term::ctor("or", "left", vec![Term::var("x")])), set(&["x"]));
        let case = Term::elim(
            "or",
            Term::var("x0"),
            vec![
                Branch::new(vec!["x1".into()], Term::ctor("or", "right", vec![Term::var("x1")])),
                Branch::new(vec!["x1".into()], Term::ctor("or", "left", vec![Term::var("x1")])),
            ],
        );
        assert_eq!(free_termvars(&case), set(&["x0"]));
        // a binder only scopes over its own branch
        let leaky = Term::elim(
            "or",
            Term::var("x0"),
            vec![
                Branch::new(vec!["x1".into()], Term::var("x1")),
                Branch::new(vec!["x2".into()], Term::var("x1")),
            ],
        );
        assert_eq!(free_termvars(&leaky), set(&["x0", "x1"]));
    }

    #[test]
    fn scoping_invariant() {
        let a = Proposition::atom("A");
        let j = LambdaJudgement::typing(vec![("x0".into(), a.clone())], Term::var("x0"), a.clone());
        assert!(j.is_well_scoped());
        let j = LambdaJudgement::typing(vec![("x0".into(), a.clone())], Term::var("x1"), a.clone());
        assert!(!j.is_well_scoped());
        let j = LambdaJudgement::type_decl(vec![("x0".into(), a.clone()), ("x0".into(), a.clone())], a);
        assert!(!j.is_well_scoped());
    }
}
