//! Bounded exhaustive proof search.
//!
//! Rule names quantify over arbitrary contexts and propositions, so every
//! search runs inside a [`SearchBudget`]: a tree qualifies when its height is
//! at most `max_depth` and every judgement at every node stays inside the
//! context-length, nesting and term-variable bounds.
//!
//! Goals are answered by memoized backward search; whole-system enumeration
//! saturates forwards level by level, either counting or building trees.

mod engine;
mod lambda;
mod prop;

use std::hash::Hash;

use crate::deduction::ProofTree;
use crate::format::Codec;
use crate::prop::{PropSignature, Proposition};

pub use engine::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    /// Maximum tree height; a single axiom has height 1.
    pub max_depth: usize,
    pub max_context: usize,
    /// Maximum connective nesting of any proposition in any judgement.
    pub prop_depth: usize,
    /// λ only: contexts and binders draw from this many leading names of the
    /// term-variable alphabet.
    pub term_vars: usize,
}

impl SearchBudget {
    pub fn new(max_depth: usize, max_context: usize, prop_depth: usize) -> Self {
        SearchBudget {
            max_depth: max_depth.max(1),
            max_context,
            prop_depth,
            term_vars: max_context,
        }
    }

    pub fn with_term_vars(self, term_vars: usize) -> Self {
        SearchBudget { term_vars, ..self }
    }

    pub fn with_depth(self, max_depth: usize) -> Self {
        SearchBudget {
            max_depth: max_depth.max(1),
            ..self
        }
    }

    /// Componentwise `≤`.
    pub fn within(&self, other: &SearchBudget) -> bool {
        self.max_depth <= other.max_depth
            && self.max_context <= other.max_context
            && self.prop_depth <= other.prop_depth
            && self.term_vars <= other.term_vars
    }
}

/// A deductive system the search can drive.
pub trait SearchSpace {
    type Rule: Clone + Eq + Hash + Codec;
    type Judgement: Clone + Eq + Hash + Codec;
    /// Budget-dependent tables computed once per search.
    type Tables;

    fn prepare(&self, budget: &SearchBudget) -> Self::Tables;

    /// Whether a judgement respects the budget's bounds.
    fn fits(&self, judgement: &Self::Judgement, budget: &SearchBudget) -> bool;

    /// Every rule name whose conclusion is `goal`, with its premises. Names
    /// whose premises leave the budget may be omitted.
    fn backward(
        &self,
        tables: &Self::Tables,
        goal: &Self::Judgement,
        budget: &SearchBudget,
    ) -> Vec<Instance<Self::Rule, Self::Judgement>>;

    /// Every rule instance whose premises all lie in `known` and whose
    /// conclusion fits the budget, each exactly once.
    fn forward(
        &self,
        tables: &Self::Tables,
        known: &[&Self::Judgement],
        budget: &SearchBudget,
    ) -> Vec<Instance<Self::Rule, Self::Judgement>>;

    /// A budget large enough for the usual small proofs of `goal`.
    fn default_budget(&self, goal: &Self::Judgement, depth: usize) -> SearchBudget;
}

fn by_render<T: Codec>(items: &mut [T]) {
    items.sort_by_cached_key(Codec::render);
}

/// All proofs of `goal` within the budget, ordered by their printed form.
pub fn enumerate_proofs<S: SearchSpace>(sys: &S, goal: &S::Judgement, budget: &SearchBudget) -> Vec<ProofTree<S::Rule>>
{
    if !sys.fits(goal, budget) {
        return Vec::new();
    }
    let mut trees = engine::backward(sys, goal, budget);
    by_render(&mut trees);
    trees
}

/// Every judgement with at least one proof in the budget, with its number of
/// proofs, ordered by printed judgement.
pub fn enumerate_provable<S: SearchSpace>(sys: &S, budget: &SearchBudget) -> Vec<(S::Judgement, u128)>
{
    let mut out: Vec<_> = engine::saturate_counts(sys, budget).into_iter().collect();
    out.sort_by_cached_key(|(j, _)| j.render());
    out
}

/// Every proof in the budget, grouped by conclusion.
pub fn enumerate_all_proofs<S: SearchSpace>(sys: &S, budget: &SearchBudget) -> Vec<(S::Judgement, Vec<ProofTree<S::Rule>>)>
{
    let mut out: Vec<_> = engine::saturate_trees(sys, budget).into_iter().collect();
    out.sort_by_cached_key(|(j, _)| j.render());
    for (_, trees) in &mut out {
        by_render(trees);
    }
    out
}

/// Whether `goal` has a proof of height at most `depth`, searched inside the
/// system's default budget for the goal.
pub fn holds<S: SearchSpace>(sys: &S, goal: &S::Judgement, depth: usize) -> bool
{
    let budget = sys.default_budget(goal, depth);
    sys.fits(goal, &budget) && !engine::backward(sys, goal, &budget).is_empty()
}

/// All propositions of nesting at most `depth`: atoms first, then by level.
pub fn propositions_up_to(sig: &PropSignature, depth: usize) -> Vec<Proposition> {
    let atoms: Vec<Proposition> = sig.propvars().iter().cloned().map(Proposition::Atomic).collect();
    let mut all = atoms.clone();
    let mut seen: std::collections::HashSet<Proposition> = all.iter().cloned().collect();
    let mut previous = atoms;
    for _ in 0..depth {
        let mut next = previous.clone();
        for decl in sig.connectives() {
            for args in tuples(&previous, decl.arity) {
                let p = Proposition::apply(decl.name.clone(), args);
                if !seen.contains(&p) {
                    next.push(p);
                }
            }
        }
        for p in &next {
            if seen.insert(p.clone()) {
                all.push(p.clone());
            }
        }
        previous = next;
    }
    all
}

/// All `n`-tuples over `items`, lexicographic in item order.
pub(crate) fn tuples<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                items.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// All lists over `items` of length at most `max_len`, shortest first.
pub(crate) fn lists_up_to<T: Clone>(items: &[T], max_len: usize) -> Vec<Vec<T>> {
    (0..=max_len).flat_map(|n| tuples(items, n)).collect()
}
