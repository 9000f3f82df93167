use std::collections::HashMap;
use std::sync::Arc;

use indexmap::IndexMap;

use super::{SearchBudget, SearchSpace};
use crate::deduction::ProofTree;

/// A rule name together with the inference it denotes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance<R, J> {
    pub rule: R,
    pub premises: Vec<J>,
    pub conclusion: J,
}

fn product<T: Clone>(lists: &[&[T]]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

type Trees<R> = Arc<Vec<ProofTree<R>>>;

pub(crate) fn backward<S>(sys: &S, goal: &S::Judgement, budget: &SearchBudget) -> Vec<ProofTree<S::Rule>>
where
    S: SearchSpace,
{
    struct Search<'a, S: SearchSpace> {
        sys: &'a S,
        tables: S::Tables,
        budget: &'a SearchBudget,
        candidates: HashMap<S::Judgement, Arc<Vec<Instance<S::Rule, S::Judgement>>>>,
        memo: HashMap<(S::Judgement, usize), Trees<S::Rule>>,
    }

    impl<S: SearchSpace> Search<'_, S> {
        fn go(&mut self, goal: &S::Judgement, depth: usize) -> Trees<S::Rule> {
            if let Some(hit) = self.memo.get(&(goal.clone(), depth)) {
                return hit.clone();
            }
            let candidates = match self.candidates.get(goal) {
                Some(c) => c.clone(),
                None => {
                    let (sys, budget) = (self.sys, self.budget);
                    let c: Vec<_> = sys
                        .backward(&self.tables, goal, budget)
                        .into_iter()
                        .filter(|i| i.premises.iter().all(|p| sys.fits(p, budget)))
                        .collect();
                    let c = Arc::new(c);
                    self.candidates.insert(goal.clone(), c.clone());
                    c
                }
            };
            let mut out = Vec::new();
            for inst in candidates.iter() {
                if inst.premises.is_empty() {
                    out.push(ProofTree::leaf(inst.rule.clone()));
                    continue;
                }
                if depth < 2 {
                    continue;
                }
                let mut subs = Vec::with_capacity(inst.premises.len());
                for p in &inst.premises {
                    let trees = self.go(p, depth - 1);
                    if trees.is_empty() {
                        break;
                    }
                    subs.push(trees);
                }
                if subs.len() < inst.premises.len() {
                    continue;
                }
                let lists: Vec<&[ProofTree<S::Rule>]> = subs.iter().map(|t| t.as_slice()).collect();
                out.extend(product(&lists).into_iter().map(|children| ProofTree::new(inst.rule.clone(), children)));
            }
            let out = Arc::new(out);
            self.memo.insert((goal.clone(), depth), out.clone());
            out
        }
    }

    let mut search = Search {
        sys,
        tables: sys.prepare(budget),
        budget,
        candidates: HashMap::new(),
        memo: HashMap::new(),
    };
    search.go(goal, budget.max_depth).as_ref().clone()
}

/// Level `k` holds the judgements with a proof of height `≤ k`.
fn saturate<S, V>(
    sys: &S,
    budget: &SearchBudget,
    combine: impl Fn(&Instance<S::Rule, S::Judgement>, &IndexMap<S::Judgement, V>, &mut V),
) -> IndexMap<S::Judgement, V>
where
    S: SearchSpace,
    V: Default,
{
    let tables = sys.prepare(budget);
    let mut level: IndexMap<S::Judgement, V> = IndexMap::new();
    for _ in 0..budget.max_depth {
        let known: Vec<&S::Judgement> = level.keys().collect();
        let instances = sys.forward(&tables, &known, budget);
        let mut next: IndexMap<S::Judgement, V> = IndexMap::new();
        for inst in &instances {
            debug_assert!(sys.fits(&inst.conclusion, budget));
            combine(inst, &level, next.entry(inst.conclusion.clone()).or_default());
        }
        level = next;
    }
    level
}

pub(crate) fn saturate_counts<S>(sys: &S, budget: &SearchBudget) -> IndexMap<S::Judgement, u128>
where
    S: SearchSpace,
{
    saturate(sys, budget, |inst, level, acc: &mut u128| {
        let n = inst
            .premises
            .iter()
            .map(|p| level[p])
            .fold(1u128, u128::saturating_mul);
        *acc = acc.saturating_add(n);
    })
}

pub(crate) fn saturate_trees<S>(sys: &S, budget: &SearchBudget) -> IndexMap<S::Judgement, Vec<ProofTree<S::Rule>>>
where
    S: SearchSpace,
{
    saturate(sys, budget, |inst, level, acc: &mut Vec<ProofTree<S::Rule>>| {
        let lists: Vec<&[ProofTree<S::Rule>]> = inst.premises.iter().map(|p| level[p].as_slice()).collect();
        acc.extend(product(&lists).into_iter().map(|children| ProofTree::new(inst.rule.clone(), children)));
    })
}
