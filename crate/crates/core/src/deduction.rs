//! Generic deductive-system machinery.
//!
//! A [`Ruleset`] maps rule names to [`Inference`]s. Proofs are the trees
//! freely generated by applying named rules to proofs of their premises;
//! [`check_deduction`] decides whether a tree is such a proof and returns the
//! unique judgement it proves.

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use thiserror::Error;

/// A single step: premises in a fixed slot order, and a conclusion.
///
/// Premise slots are labelled by their position, `0..premises.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inference<J> {
    pub premises: Vec<J>,
    pub conclusion: J,
}

impl<J> Inference<J> {
    pub fn new(premises: Vec<J>, conclusion: J) -> Self {
        Inference {
            premises,
            conclusion,
        }
    }

    pub fn axiom(conclusion: J) -> Self {
        Inference {
            premises: Vec::new(),
            conclusion,
        }
    }

    pub fn labels(&self) -> Range<usize> {
        0..self.premises.len()
    }
}

/// An indexed family of inferences. `instantiate` is partial: a name may be
/// ill-formed, in which case the instance reports why.
pub trait Ruleset {
    type Rule;
    type Judgement: Clone + PartialEq;
    type Error;

    fn instantiate(&self, rule: &Self::Rule) -> Result<Inference<Self::Judgement>, Self::Error>;
}

impl<S: Ruleset + ?Sized> Ruleset for &S {
    type Rule = S::Rule;
    type Judgement = S::Judgement;
    type Error = S::Error;

    fn instantiate(&self, rule: &Self::Rule) -> Result<Inference<Self::Judgement>, Self::Error> {
        (**self).instantiate(rule)
    }
}

/// A proof tree: a rule name applied to one subproof per premise slot.
///
/// Cheap to clone; subtrees are shared. Equality is structural.
#[derive(PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProofTree<R>(Arc<ProofNode<R>>);

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProofNode<R> {
    pub rule: R,
    pub children: Vec<ProofTree<R>>,
}

impl<R> Clone for ProofTree<R> {
    fn clone(&self) -> Self {
        ProofTree(Arc::clone(&self.0))
    }
}

impl<R> ProofTree<R> {
    pub fn new(rule: R, children: Vec<ProofTree<R>>) -> Self {
        ProofTree(Arc::new(ProofNode { rule, children }))
    }

    pub fn leaf(rule: R) -> Self {
        Self::new(rule, Vec::new())
    }

    pub fn rule(&self) -> &R {
        &self.0.rule
    }

    pub fn children(&self) -> &[ProofTree<R>] {
        &self.0.children
    }

    /// Longest root-to-leaf path, counted in nodes. A leaf has height 1.
    pub fn height(&self) -> usize {
        1 + self.children().iter().map(|c| c.height()).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Structural fold, bottom-up: `f` sees each rule with its children's results.
    pub fn fold<T>(&self, f: &mut impl FnMut(&R, Vec<T>) -> T) -> T {
        let children = self.children().iter().map(|c| c.fold(f)).collect();
        f(self.rule(), children)
    }

    /// Relabels every node, keeping the shape.
    pub fn map_rules<S>(&self, f: &mut impl FnMut(&R) -> S) -> ProofTree<S> {
        self.fold(&mut |rule, children| ProofTree::new(f(rule), children))
    }

    /// Node at `path`, if it exists.
    pub fn subtree(&self, path: &[usize]) -> Option<&ProofTree<R>> {
        let mut node = self;
        for &i in path {
            node = node.children().get(i)?;
        }
        Some(node)
    }

    /// Every node path, in pre-order.
    pub fn paths(&self) -> Vec<NodePath> {
        fn walk<R>(tree: &ProofTree<R>, here: &mut Vec<usize>, out: &mut Vec<NodePath>) {
            out.push(NodePath(here.clone()));
            for (i, child) in tree.children().iter().enumerate() {
                here.push(i);
                walk(child, here, out);
                here.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Copy of this tree with the node at `path` replaced.
    pub fn replace_at(&self, path: &[usize], with: ProofTree<R>) -> Option<ProofTree<R>>
    where
        R: Clone,
    {
        match path.split_first() {
            None => Some(with),
            Some((&i, rest)) => {
                let child = self.children().get(i)?.replace_at(rest, with)?;
                let mut children = self.children().to_vec();
                children[i] = child;
                Some(ProofTree::new(self.rule().clone(), children))
            }
        }
    }
}

impl<R: fmt::Debug> fmt::Debug for ProofTree<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProofTree")
            .field("rule", self.rule())
            .field("children", &self.children())
            .finish()
    }
}

/// Position of a node: child indices from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodePath(pub Vec<usize>);

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in &self.0 {
            write!(f, ".{i}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError<J: fmt::Display, E: fmt::Display> {
    #[error("at {path}: ill-formed rule: {source}")]
    UnknownRule { path: NodePath, source: E },
    #[error("at {path}: rule expects {expected} premise(s), tree has {found}")]
    ArityMismatch {
        path: NodePath,
        expected: usize,
        found: usize,
    },
    #[error("at {path}: premise {slot} expects `{expected}` but the subproof proves `{found}`")]
    PremiseMismatch {
        path: NodePath,
        slot: usize,
        expected: J,
        found: J,
    },
}

impl<J: fmt::Display, E: fmt::Display> CheckError<J, E> {
    pub fn path(&self) -> &NodePath {
        match self {
            CheckError::UnknownRule { path, .. }
            | CheckError::ArityMismatch { path, .. }
            | CheckError::PremiseMismatch { path, .. } => path,
        }
    }
}

/// Checks `tree` against `rules` and returns the judgement it proves.
pub fn check_deduction<S>(
    rules: &S,
    tree: &ProofTree<S::Rule>,
) -> Result<S::Judgement, CheckError<S::Judgement, S::Error>>
where
    S: Ruleset + ?Sized,
    S::Judgement: fmt::Display,
    S::Error: fmt::Display,
{
    fn go<S>(
        rules: &S,
        tree: &ProofTree<S::Rule>,
        path: &mut Vec<usize>,
    ) -> Result<S::Judgement, CheckError<S::Judgement, S::Error>>
    where
        S: Ruleset + ?Sized,
        S::Judgement: fmt::Display,
        S::Error: fmt::Display,
    {
        let inference = rules
            .instantiate(tree.rule())
            .map_err(|source| CheckError::UnknownRule {
                path: NodePath(path.clone()),
                source,
            })?;
        if inference.premises.len() != tree.children().len() {
            return Err(CheckError::ArityMismatch {
                path: NodePath(path.clone()),
                expected: inference.premises.len(),
                found: tree.children().len(),
            });
        }
        for (slot, (expected, child)) in inference.premises.into_iter().zip(tree.children()).enumerate() {
            path.push(slot);
            let found = go(rules, child, path)?;
            path.pop();
            if found != expected {
                return Err(CheckError::PremiseMismatch {
                    path: NodePath(path.clone()),
                    slot,
                    expected,
                    found,
                });
            }
        }
        Ok(inference.conclusion)
    }
    go(rules, tree, &mut Vec::new())
}

/// The proofful reading of a deductive system: a judgement holds when some
/// tree checks against it.
pub trait Predicate: Ruleset {
    fn proves(&self, tree: &ProofTree<Self::Rule>, judgement: &Self::Judgement) -> bool;
}

impl<S> Predicate for S
where
    S: Ruleset,
    S::Judgement: fmt::Display,
    S::Error: fmt::Display,
{
    fn proves(&self, tree: &ProofTree<Self::Rule>, judgement: &Self::Judgement) -> bool {
        check_deduction(self, tree).is_ok_and(|j| &j == judgement)
    }
}
