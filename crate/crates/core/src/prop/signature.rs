use std::collections::HashSet;
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::symbol::Symbol;

/// Qualifier on a judgement's conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Adjective {
    /// Well-formedness: `P prop` (written `P type` on the λ side).
    Prop,
    /// Truth: `P true`.
    True,
}

impl Adjective {
    pub fn keyword(self) -> &'static str {
        match self {
            Adjective::Prop => "prop",
            Adjective::True => "true",
        }
    }
}

impl fmt::Display for Adjective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// The adjective vector attached to one introduction rule, one entry per
/// argument of the connective.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Header(Vec<Adjective>);

impl Header {
    pub fn new(entries: Vec<Adjective>) -> Self {
        Header(entries)
    }

    pub fn entries(&self) -> &[Adjective] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions whose entry is `true`, in order.
    pub fn true_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, a)| **a == Adjective::True)
            .map(|(i, _)| i)
    }

    pub fn true_count(&self) -> usize {
        self.true_positions().count()
    }

    /// The elements of `items` sitting at `true` positions, order kept.
    pub fn filter_true<'a, T>(&'a self, items: &'a [T]) -> impl Iterator<Item = &'a T> + 'a {
        self.true_positions().filter_map(move |i| items.get(i))
    }
}

impl<const N: usize> From<[Adjective; N]> for Header {
    fn from(entries: [Adjective; N]) -> Self {
        Header(entries.to_vec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectiveDecl {
    pub name: Symbol,
    pub arity: usize,
    /// Introduction rules in declaration order.
    pub rules: Vec<(Symbol, Header)>,
}

impl ConnectiveDecl {
    pub fn new(name: impl Into<Symbol>, arity: usize, rules: Vec<(Symbol, Header)>) -> Self {
        ConnectiveDecl {
            name: name.into(),
            arity,
            rules,
        }
    }

    pub fn header(&self, label: &str) -> Option<&Header> {
        self.rules
            .iter()
            .find(|(l, _)| l.as_str() == label)
            .map(|(_, h)| h)
    }

    pub fn rule_index(&self, label: &str) -> Option<usize> {
        self.rules.iter().position(|(l, _)| l.as_str() == label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("connective `{0}` declared twice")]
    DuplicateConnective(Symbol),
    #[error("rule `{rule}` declared twice for connective `{connective}`")]
    DuplicateRule { connective: Symbol, rule: Symbol },
    #[error("propositional variable `{0}` declared twice")]
    DuplicatePropVar(Symbol),
    #[error("term variable `{0}` declared twice")]
    DuplicateTermVar(Symbol),
    #[error("header of `{connective}`/`{rule}` has length {found}, arity is {arity}")]
    HeaderLength {
        connective: Symbol,
        rule: Symbol,
        arity: usize,
        found: usize,
    },
    #[error("`{0}` is both a propositional and a term variable")]
    VariableClash(Symbol),
}

/// Connectives with arities, rule labels and headers, plus propositional
/// variables.
#[derive(Clone, Debug)]
pub struct PropSignature {
    connectives: Vec<ConnectiveDecl>,
    index: IndexMap<Symbol, usize>,
    propvars: Vec<Symbol>,
}

impl PropSignature {
    pub fn new(
        propvars: Vec<Symbol>,
        connectives: Vec<ConnectiveDecl>,
    ) -> Result<Self, SignatureError> {
        let mut seen = HashSet::new();
        for v in &propvars {
            if !seen.insert(v) {
                return Err(SignatureError::DuplicatePropVar(v.clone()));
            }
        }
        let mut index = IndexMap::new();
        for (i, decl) in connectives.iter().enumerate() {
            if index.insert(decl.name.clone(), i).is_some() {
                return Err(SignatureError::DuplicateConnective(decl.name.clone()));
            }
            let mut labels = HashSet::new();
            for (label, header) in &decl.rules {
                if !labels.insert(label) {
                    return Err(SignatureError::DuplicateRule {
                        connective: decl.name.clone(),
                        rule: label.clone(),
                    });
                }
                if header.len() != decl.arity {
                    return Err(SignatureError::HeaderLength {
                        connective: decl.name.clone(),
                        rule: label.clone(),
                        arity: decl.arity,
                        found: header.len(),
                    });
                }
            }
        }
        Ok(PropSignature {
            connectives,
            index,
            propvars,
        })
    }

    pub fn connectives(&self) -> &[ConnectiveDecl] {
        &self.connectives
    }

    pub fn connective(&self, name: &str) -> Option<&ConnectiveDecl> {
        self.index.get(name).map(|&i| &self.connectives[i])
    }

    pub fn propvars(&self) -> &[Symbol] {
        &self.propvars
    }

    pub fn has_propvar(&self, name: &str) -> bool {
        self.propvars.iter().any(|v| v.as_str() == name)
    }

    pub fn header(&self, connective: &str, rule: &str) -> Option<&Header> {
        self.connective(connective)?.header(rule)
    }
}

impl PartialEq for PropSignature {
    fn eq(&self, other: &Self) -> bool {
        self.connectives == other.connectives && self.propvars == other.propvars
    }
}

impl Eq for PropSignature {}
