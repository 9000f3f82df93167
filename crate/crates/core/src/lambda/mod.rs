//! The typed λ-calculus instance over a propositional signature: terms with
//! one constructor per introduction rule and one eliminator per connective.

mod rules;
mod signature;
mod syntax;

pub use rules::{check_lambda_proof, instantiate_lambda_rule, LambdaCheckError, LambdaRuleError, LambdaRuleName};
pub use signature::{LambdaSignature, TermAlphabet};
pub use syntax::{free_termvars, Branch, LambdaConclusion, LambdaContext, LambdaJudgement, Term};
