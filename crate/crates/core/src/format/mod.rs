//! S-expression text formats for every document kind, with a canonical
//! printer: `parse(print(x)) == x` and `print(parse(print(x))) == print(x)`.
//!
//! ```text
//! proposition  A | (or A B) | (top)
//! judgement    (judgement (ctx P…) (concl P prop|true))
//! λ judgement  (judgement (ctx (x0 P)…) (concl P type))
//!              (judgement (ctx (x0 P)…) (typed t P))
//! term         x0 | (ctor or left t…) | (case or t ((x1) t) ((x1) t))
//! signature    (signature (propvars A B) [(termvars (indexed x))]
//!                (connective or (arity 2) (rule left (header true prop)) …) …)
//! morphism     (morphism (connectives (or or')…) (rules (or left left')…) (vars (A A')…))
//! proof        (proof (<head> <params>…) <child>…)
//! ```

mod codec;
mod sexp;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::deduction::ProofTree;
use crate::lambda::{LambdaJudgement, LambdaRuleName, LambdaSignature, Term};
use crate::prop::{MorphismSpec, PropJudgement, PropRuleName, PropSignature, Proposition};

pub use sexp::{read, Pos, Sexp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: expected {expected}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, expected: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            expected: expected.into(),
        }
    }
}

/// A value with an s-expression encoding.
pub trait Codec: Sized {
    fn encode(&self) -> Sexp;
    fn decode(sexp: &Sexp) -> Result<Self, ParseError>;

    /// Canonical text. Single-line unless the kind has a layout of its own.
    fn render(&self) -> String {
        self.encode().to_string()
    }

    fn parse(text: &str) -> Result<Self, ParseError> {
        Self::decode(&read(text)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DocumentKind {
    Proposition,
    Signature,
    LambdaSignature,
    Judgement,
    LambdaJudgement,
    Term,
    Proof,
    LambdaProof,
    Morphism,
}

impl DocumentKind {
    pub const ALL: [DocumentKind; 9] = [
        DocumentKind::Proposition,
        DocumentKind::Signature,
        DocumentKind::LambdaSignature,
        DocumentKind::Judgement,
        DocumentKind::LambdaJudgement,
        DocumentKind::Term,
        DocumentKind::Proof,
        DocumentKind::LambdaProof,
        DocumentKind::Morphism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DocumentKind::Proposition => "proposition",
            DocumentKind::Signature => "signature",
            DocumentKind::LambdaSignature => "lambda-signature",
            DocumentKind::Judgement => "judgement",
            DocumentKind::LambdaJudgement => "lambda-judgement",
            DocumentKind::Term => "term",
            DocumentKind::Proof => "proof",
            DocumentKind::LambdaProof => "lambda-proof",
            DocumentKind::Morphism => "morphism",
        }
    }
}

impl fmt::Display for DocumentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DocumentKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        DocumentKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown document kind `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Proposition(Proposition),
    Signature(PropSignature),
    LambdaSignature(LambdaSignature),
    Judgement(PropJudgement),
    LambdaJudgement(LambdaJudgement),
    Term(Term),
    Proof(ProofTree<PropRuleName>),
    LambdaProof(ProofTree<LambdaRuleName>),
    Morphism(MorphismSpec),
}

impl Document {
    pub fn kind(&self) -> DocumentKind {
        match self {
            Document::Proposition(_) => DocumentKind::Proposition,
            Document::Signature(_) => DocumentKind::Signature,
            Document::LambdaSignature(_) => DocumentKind::LambdaSignature,
            Document::Judgement(_) => DocumentKind::Judgement,
            Document::LambdaJudgement(_) => DocumentKind::LambdaJudgement,
            Document::Term(_) => DocumentKind::Term,
            Document::Proof(_) => DocumentKind::Proof,
            Document::LambdaProof(_) => DocumentKind::LambdaProof,
            Document::Morphism(_) => DocumentKind::Morphism,
        }
    }
}

pub fn parse(kind: DocumentKind, text: &str) -> Result<Document, ParseError> {
    Ok(match kind {
        DocumentKind::Proposition => Document::Proposition(Codec::parse(text)?),
        DocumentKind::Signature => Document::Signature(Codec::parse(text)?),
        DocumentKind::LambdaSignature => Document::LambdaSignature(Codec::parse(text)?),
        DocumentKind::Judgement => Document::Judgement(Codec::parse(text)?),
        DocumentKind::LambdaJudgement => Document::LambdaJudgement(Codec::parse(text)?),
        DocumentKind::Term => Document::Term(Codec::parse(text)?),
        DocumentKind::Proof => Document::Proof(Codec::parse(text)?),
        DocumentKind::LambdaProof => Document::LambdaProof(Codec::parse(text)?),
        DocumentKind::Morphism => Document::Morphism(Codec::parse(text)?),
    })
}

pub fn print(doc: &Document) -> String {
    match doc {
        Document::Proposition(x) => x.render(),
        Document::Signature(x) => x.render(),
        Document::LambdaSignature(x) => x.render(),
        Document::Judgement(x) => x.render(),
        Document::LambdaJudgement(x) => x.render(),
        Document::Term(x) => x.render(),
        Document::Proof(x) => x.render(),
        Document::LambdaProof(x) => x.render(),
        Document::Morphism(x) => x.render(),
    }
}

macro_rules! display_via_codec {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.render())
            }
        }
    )*};
}

display_via_codec!(
    Proposition,
    PropJudgement,
    Term,
    LambdaJudgement,
    crate::lambda::LambdaConclusion,
    PropRuleName,
    LambdaRuleName
);
