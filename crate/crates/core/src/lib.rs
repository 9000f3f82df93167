//! A parameterized natural-deduction toolkit: a propositional logic and a
//! typed λ-calculus generated from the same signature, the forgetful
//! translation between them, and term extraction from propositional proofs.

// Check errors carry the offending judgements by value.
#![allow(clippy::result_large_err, clippy::type_complexity)]

mod symbol;

pub mod correspondence;
pub mod deduction;
pub mod format;
pub mod lambda;
pub mod prop;
pub mod samples;
pub mod search;
pub mod tarski;

pub use deduction::{check_deduction, CheckError, Inference, NodePath, Predicate, ProofTree, Ruleset};
pub use symbol::Symbol;
