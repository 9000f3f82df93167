//! The propositional instance: signatures, propositions, judgements, the
//! Var/Self/Weak/Form/Intro/Elim rule species, and signature morphisms.

mod morphism;
mod rules;
mod signature;
mod syntax;

pub use morphism::{coherence_check, transport_prop, CoherenceReport, MorphismError, MorphismSpec, PropSignatureMorphism, Transport};
pub use rules::{check_prop_proof, instantiate_prop_rule, PropCheckError, PropRuleError, PropRuleName};
pub use signature::{Adjective, ConnectiveDecl, Header, PropSignature, SignatureError};
pub use syntax::{PropJudgement, Proposition};
