use std::sync::Arc;

use super::signature::{Adjective, PropSignature};
use super::rules::PropRuleError;
use crate::symbol::Symbol;

/// Formulas over a signature: variables, and connectives applied to as many
/// formulas as their arity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Proposition {
    Atomic(Symbol),
    Apply(Symbol, Arc<[Proposition]>),
}

impl Proposition {
    pub fn atom(name: impl Into<Symbol>) -> Self {
        Proposition::Atomic(name.into())
    }

    pub fn apply(connective: impl Into<Symbol>, args: Vec<Proposition>) -> Self {
        Proposition::Apply(connective.into(), args.into())
    }

    /// Connective nesting: variables are 0, `c(Ps)` is one more than its
    /// deepest argument (so a nullary `c()` is 1).
    pub fn nesting(&self) -> usize {
        match self {
            Proposition::Atomic(_) => 0,
            Proposition::Apply(_, args) => 1 + args.iter().map(|a| a.nesting()).max().unwrap_or(0),
        }
    }

    pub fn head(&self) -> Option<(&Symbol, &[Proposition])> {
        match self {
            Proposition::Apply(c, args) => Some((c, args)),
            Proposition::Atomic(_) => None,
        }
    }

    pub fn check(&self, sig: &PropSignature) -> Result<(), PropRuleError> {
        match self {
            Proposition::Atomic(v) if sig.has_propvar(v) => Ok(()),
            Proposition::Atomic(v) => Err(PropRuleError::UnknownVariable(v.clone())),
            Proposition::Apply(c, args) => {
                let decl = sig
                    .connective(c)
                    .ok_or_else(|| PropRuleError::UnknownConnective(c.clone()))?;
                if decl.arity != args.len() {
                    return Err(PropRuleError::ArityMismatch {
                        connective: c.clone(),
                        expected: decl.arity,
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|a| a.check(sig))
            }
        }
    }
}

/// `P0, …, Pn ⊢ P adjective`. Contexts are plain lists: order matters and
/// duplicates are allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropJudgement {
    pub context: Vec<Proposition>,
    pub conclusion: Proposition,
    pub adjective: Adjective,
}

impl PropJudgement {
    pub fn new(context: Vec<Proposition>, conclusion: Proposition, adjective: Adjective) -> Self {
        PropJudgement {
            context,
            conclusion,
            adjective,
        }
    }

    /// `Γ ⊢ P prop`
    pub fn prop(context: Vec<Proposition>, conclusion: Proposition) -> Self {
        Self::new(context, conclusion, Adjective::Prop)
    }

    /// `Γ ⊢ P true`
    pub fn truth(context: Vec<Proposition>, conclusion: Proposition) -> Self {
        Self::new(context, conclusion, Adjective::True)
    }

    pub fn check(&self, sig: &PropSignature) -> Result<(), PropRuleError> {
        self.context.iter().try_for_each(|p| p.check(sig))?;
        self.conclusion.check(sig)
    }

    /// Deepest connective nesting over context and conclusion.
    pub fn nesting(&self) -> usize {
        self.context
            .iter()
            .chain(std::iter::once(&self.conclusion))
            .map(Proposition::nesting)
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nesting_depth() {
        let a = Proposition::atom("A");
        assert_eq!(a.nesting(), 0);
        let ab = Proposition::apply("or", vec![a.clone(), Proposition::atom("B")]);
        assert_eq!(ab.nesting(), 1);
        assert_eq!(Proposition::apply("and", vec![ab.clone(), a.clone()]).nesting(), 2);
        assert_eq!(Proposition::apply("top", vec![]).nesting(), 1);
        assert_eq!(PropJudgement::truth(vec![ab.clone()], a).nesting(), 1);
    }
}
