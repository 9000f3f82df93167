use std::collections::HashSet;

use crate::prop::{PropSignature, SignatureError};
use crate::symbol::Symbol;

/// The alphabet of term variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermAlphabet {
    /// `prefix0, prefix1, …` with canonical decimal indices.
    Indexed(Symbol),
    Finite(Vec<Symbol>),
}

impl TermAlphabet {
    /// `x0, x1, x2, …`
    pub fn canonical() -> Self {
        TermAlphabet::Indexed("x".into())
    }

    pub fn contains(&self, name: &str) -> bool {
        match self {
            TermAlphabet::Indexed(prefix) => name
                .strip_prefix(prefix.as_str())
                .is_some_and(|digits| {
                    !digits.is_empty()
                        && digits.bytes().all(|b| b.is_ascii_digit())
                        && (digits == "0" || !digits.starts_with('0'))
                }),
            TermAlphabet::Finite(names) => names.iter().any(|n| n.as_str() == name),
        }
    }

    /// Position of `name` in the alphabet.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        match self {
            TermAlphabet::Indexed(prefix) => {
                if !self.contains(name) {
                    return None;
                }
                name[prefix.len()..].parse().ok()
            }
            TermAlphabet::Finite(names) => names.iter().position(|n| n.as_str() == name),
        }
    }

    pub fn nth(&self, i: usize) -> Option<Symbol> {
        match self {
            TermAlphabet::Indexed(prefix) => Some(Symbol::from(format!("{prefix}{i}"))),
            TermAlphabet::Finite(names) => names.get(i).cloned(),
        }
    }

    /// The first `n` names (fewer if the alphabet is smaller).
    pub fn first(&self, n: usize) -> Vec<Symbol> {
        (0..n).map_while(|i| self.nth(i)).collect()
    }
}

/// A propositional signature together with an alphabet of term variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSignature {
    base: PropSignature,
    termvars: TermAlphabet,
}

impl LambdaSignature {
    pub fn new(base: PropSignature, termvars: TermAlphabet) -> Result<Self, SignatureError> {
        if let TermAlphabet::Finite(names) = &termvars {
            let mut seen = HashSet::new();
            for n in names {
                if !seen.insert(n) {
                    return Err(SignatureError::DuplicateTermVar(n.clone()));
                }
            }
        }
        if let Some(v) = base.propvars().iter().find(|v| termvars.contains(v)) {
            return Err(SignatureError::VariableClash(v.clone()));
        }
        Ok(LambdaSignature { base, termvars })
    }

    /// `base` with the canonical `x0, x1, …` alphabet.
    pub fn canonical(base: PropSignature) -> Result<Self, SignatureError> {
        Self::new(base, TermAlphabet::canonical())
    }

    pub fn base(&self) -> &PropSignature {
        &self.base
    }

    pub fn termvars(&self) -> &TermAlphabet {
        &self.termvars
    }

    pub fn into_base(self) -> PropSignature {
        self.base
    }
}
