use std::collections::BTreeMap;

use indexmap::IndexMap;

use super::{propositions_up_to, tuples, Instance, SearchBudget, SearchSpace};
use crate::lambda::{
    instantiate_lambda_rule, Branch, LambdaConclusion, LambdaContext, LambdaJudgement, LambdaRuleName,
    LambdaSignature, Term,
};
use crate::prop::{Adjective, Proposition};
use crate::symbol::Symbol;

pub struct LambdaTables {
    compound: Vec<Proposition>,
    props: Vec<Proposition>,
    /// The leading names of the alphabet the budget allows.
    names: Vec<Symbol>,
    /// Every context inside the bounds; only built for nullary connectives.
    contexts: Vec<LambdaContext>,
}

fn instance(sig: &LambdaSignature, rule: LambdaRuleName) -> Option<Instance<LambdaRuleName, LambdaJudgement>> {
    let inf = instantiate_lambda_rule(sig, &rule).ok()?;
    Some(Instance {
        rule,
        premises: inf.premises,
        conclusion: inf.conclusion,
    })
}

fn split_last(context: &LambdaContext) -> Option<(LambdaContext, &Symbol, &Proposition)> {
    let ((x, p), init) = context.split_last()?;
    Some((init.to_vec(), x, p))
}

fn fresh<'a>(names: &'a [Symbol], context: &LambdaContext) -> Vec<&'a Symbol> {
    names.iter().filter(|n| context.iter().all(|(x, _)| x != *n)).collect()
}

/// Ordered selections of `k` distinct items.
fn arrangements<T: Copy + PartialEq>(items: &[T], k: usize) -> Vec<Vec<T>> {
    tuples(items, k)
        .into_iter()
        .filter(|v| v.iter().enumerate().all(|(i, x)| !v[..i].contains(x)))
        .collect()
}

fn all_contexts(names: &[Symbol], props: &[Proposition], max_len: usize) -> Vec<LambdaContext> {
    let mut out = vec![LambdaContext::new()];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for ctx in &frontier {
            for x in fresh(names, ctx) {
                for p in props {
                    let mut c = ctx.clone();
                    c.push((x.clone(), p.clone()));
                    next.push(c);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn term_symbols(t: &Term, out: &mut Vec<Symbol>) {
    match t {
        Term::Var(x) => out.push(x.clone()),
        Term::Ctor { args, .. } => args.iter().for_each(|a| term_symbols(a, out)),
        Term::Elim {
            scrutinee, branches, ..
        } => {
            term_symbols(scrutinee, out);
            for b in branches.iter() {
                out.extend(b.binders.iter().cloned());
                term_symbols(&b.body, out);
            }
        }
    }
}

impl SearchSpace for LambdaSignature {
    type Rule = LambdaRuleName;
    type Judgement = LambdaJudgement;
    type Tables = LambdaTables;

    fn prepare(&self, budget: &SearchBudget) -> LambdaTables {
        let props = propositions_up_to(self.base(), budget.prop_depth);
        let compound = props.iter().filter(|p| p.head().is_some()).cloned().collect();
        let names = self.termvars().first(budget.term_vars);
        let contexts = if self.base().connectives().iter().any(|c| c.arity == 0) {
            all_contexts(&names, &props, budget.max_context)
        } else {
            Vec::new()
        };
        LambdaTables {
            compound,
            props,
            names,
            contexts,
        }
    }

    fn fits(&self, j: &LambdaJudgement, budget: &SearchBudget) -> bool {
        j.context.len() <= budget.max_context
            && j.nesting() <= budget.prop_depth
            && j.context
                .iter()
                .all(|(x, _)| self.termvars().index_of(x).is_some_and(|i| i < budget.term_vars))
    }

    fn backward(
        &self,
        tables: &LambdaTables,
        goal: &LambdaJudgement,
        _budget: &SearchBudget,
    ) -> Vec<Instance<LambdaRuleName, LambdaJudgement>> {
        let context = &goal.context;
        let mut names = Vec::new();
        match &goal.conclusion {
            LambdaConclusion::TypeDecl(p) => {
                if let (true, Proposition::Atomic(v)) = (context.is_empty(), p) {
                    names.push(LambdaRuleName::Var(v.clone()));
                }
                if let Some((c, args)) = p.head() {
                    names.push(LambdaRuleName::Form {
                        connective: c.clone(),
                        context: context.clone(),
                        args: args.to_vec(),
                    });
                }
            }
            LambdaConclusion::Typing(t, p) => match t {
                Term::Var(x) => {
                    if let Some((init, y, q)) = split_last(context) {
                        if x == y && p == q {
                            names.push(LambdaRuleName::Hyp {
                                context: init,
                                var: x.clone(),
                                prop: p.clone(),
                            });
                        }
                    }
                }
                Term::Ctor {
                    connective,
                    rule,
                    args: terms,
                } => {
                    if let Some((c, args)) = p.head().filter(|(c, _)| *c == connective) {
                        names.push(LambdaRuleName::Intro {
                            connective: c.clone(),
                            rule: rule.clone(),
                            context: context.clone(),
                            args: args.to_vec(),
                            terms: terms.to_vec(),
                        });
                    }
                }
                Term::Elim {
                    connective,
                    scrutinee,
                    branches,
                } => {
                    for s in &tables.compound {
                        let (c, args) = s.head().expect("compound");
                        if c == connective {
                            names.push(LambdaRuleName::Elim {
                                connective: c.clone(),
                                context: context.clone(),
                                args: args.to_vec(),
                                target: p.clone(),
                                scrutinee: (**scrutinee).clone(),
                                branches: branches.to_vec(),
                            });
                        }
                    }
                }
            },
        }
        if let Some((init, x, p)) = split_last(context) {
            names.push(LambdaRuleName::Weak {
                context: init,
                var: x.clone(),
                prop: p.clone(),
                conclusion: goal.conclusion.clone(),
            });
        }
        names.into_iter().filter_map(|n| instance(self, n)).collect()
    }

    fn forward(
        &self,
        tables: &LambdaTables,
        known: &[&LambdaJudgement],
        budget: &SearchBudget,
    ) -> Vec<Instance<LambdaRuleName, LambdaJudgement>> {
        type Entry<'a> = (Vec<&'a Proposition>, Vec<(&'a Term, &'a Proposition)>);
        let mut by_context: IndexMap<&LambdaContext, Entry> = IndexMap::new();
        for j in known {
            let entry = by_context.entry(&j.context).or_default();
            match &j.conclusion {
                LambdaConclusion::TypeDecl(p) => entry.0.push(p),
                LambdaConclusion::Typing(t, p) => entry.1.push((t, p)),
            }
        }
        let mut names = Vec::new();
        for p in self.base().propvars() {
            names.push(LambdaRuleName::Var(p.clone()));
        }
        for decl in self.base().connectives().iter().filter(|d| d.arity == 0) {
            for context in &tables.contexts {
                names.push(LambdaRuleName::Form {
                    connective: decl.name.clone(),
                    context: context.clone(),
                    args: vec![],
                });
                for (r, _) in &decl.rules {
                    names.push(LambdaRuleName::Intro {
                        connective: decl.name.clone(),
                        rule: r.clone(),
                        context: context.clone(),
                        args: vec![],
                        terms: vec![],
                    });
                }
            }
        }
        let depth = budget.prop_depth;
        for (context, (types, typings)) in &by_context {
            let context: &LambdaContext = context;
            if context.len() < budget.max_context {
                for x in fresh(&tables.names, context) {
                    for p in types {
                        names.push(LambdaRuleName::Hyp {
                            context: context.clone(),
                            var: x.clone(),
                            prop: (*p).clone(),
                        });
                        let judged = types
                            .iter()
                            .map(|q| LambdaConclusion::TypeDecl((*q).clone()))
                            .chain(typings.iter().map(|(t, q)| LambdaConclusion::Typing((*t).clone(), (*q).clone())));
                        for conclusion in judged {
                            names.push(LambdaRuleName::Weak {
                                context: context.clone(),
                                var: x.clone(),
                                prop: (*p).clone(),
                                conclusion,
                            });
                        }
                    }
                }
            }
            let small_types: Vec<&Proposition> = types.iter().copied().filter(|p| p.nesting() < depth).collect();
            let small_typings: Vec<(&Term, &Proposition)> =
                typings.iter().copied().filter(|(_, p)| p.nesting() < depth).collect();
            for decl in self.base().connectives().iter().filter(|d| d.arity > 0) {
                for args in tuples(&small_types, decl.arity) {
                    names.push(LambdaRuleName::Form {
                        connective: decl.name.clone(),
                        context: context.clone(),
                        args: args.into_iter().cloned().collect(),
                    });
                }
                for (r, header) in &decl.rules {
                    // (args, terms) built position by position
                    let mut choices: Vec<(Vec<Proposition>, Vec<Term>)> = vec![(vec![], vec![])];
                    for adj in header.entries() {
                        choices = choices
                            .into_iter()
                            .flat_map(|(args, terms)| -> Vec<(Vec<Proposition>, Vec<Term>)> {
                                match adj {
                                    Adjective::Prop => small_types
                                        .iter()
                                        .map(|p| {
                                            let mut a = args.clone();
                                            a.push((*p).clone());
                                            (a, terms.clone())
                                        })
                                        .collect(),
                                    Adjective::True => small_typings
                                        .iter()
                                        .map(|(t, p)| {
                                            let mut a = args.clone();
                                            a.push((*p).clone());
                                            let mut ts = terms.clone();
                                            ts.push((*t).clone());
                                            (a, ts)
                                        })
                                        .collect(),
                                }
                            })
                            .collect();
                    }
                    for (args, terms) in choices {
                        names.push(LambdaRuleName::Intro {
                            connective: decl.name.clone(),
                            rule: r.clone(),
                            context: context.clone(),
                            args,
                            terms,
                        });
                    }
                }
            }
            let available = fresh(&tables.names, context);
            for (scrutinee, s_type) in typings {
                let Some((c, args)) = s_type.head() else { continue };
                let Some(decl) = self.base().connective(c) else { continue };
                // per rule: target → the branches that reach it
                let mut per_rule: Vec<BTreeMap<&Proposition, Vec<Branch>>> = Vec::new();
                for (_, header) in &decl.rules {
                    let hyps: Vec<&Proposition> = header.filter_true(args).collect();
                    let mut reach: BTreeMap<&Proposition, Vec<Branch>> = BTreeMap::new();
                    if context.len() + hyps.len() <= budget.max_context {
                        for binders in arrangements(&available, hyps.len()) {
                            let mut branch_ctx = context.clone();
                            branch_ctx.extend(binders.iter().map(|x| (*x).clone()).zip(hyps.iter().map(|p| (*p).clone())));
                            let Some((_, bodies)) = by_context.get(&branch_ctx) else { continue };
                            let binders: Vec<Symbol> = binders.into_iter().cloned().collect();
                            for (body, target) in bodies {
                                reach
                                    .entry(*target)
                                    .or_default()
                                    .push(Branch::new(binders.clone(), (*body).clone()));
                            }
                        }
                    }
                    per_rule.push(reach);
                }
                let targets: Vec<&Proposition> = match per_rule.first() {
                    None => tables.props.iter().collect(),
                    Some(first) => first
                        .keys()
                        .copied()
                        .filter(|t| per_rule.iter().all(|m| m.contains_key(t)))
                        .collect(),
                };
                for target in targets {
                    let mut combos: Vec<Vec<Branch>> = vec![vec![]];
                    for m in &per_rule {
                        let options = &m[target];
                        combos = combos
                            .into_iter()
                            .flat_map(|prefix| {
                                options.iter().map(move |b| {
                                    let mut v = prefix.clone();
                                    v.push(b.clone());
                                    v
                                })
                            })
                            .collect();
                    }
                    for branches in combos {
                        names.push(LambdaRuleName::Elim {
                            connective: c.clone(),
                            context: context.clone(),
                            args: args.to_vec(),
                            target: target.clone(),
                            scrutinee: (*scrutinee).clone(),
                            branches,
                        });
                    }
                }
            }
        }
        names.into_iter().filter_map(|n| instance(self, n)).collect()
    }

    fn default_budget(&self, goal: &LambdaJudgement, depth: usize) -> SearchBudget {
        let widest = self.base().connectives().iter().map(|c| c.arity).max().unwrap_or(0);
        let max_context = goal.context.len() + widest;
        let mut used: Vec<Symbol> = goal.context.iter().map(|(x, _)| x.clone()).collect();
        if let Some(t) = goal.conclusion.term() {
            term_symbols(t, &mut used);
        }
        let highest = used.iter().filter_map(|x| self.termvars().index_of(x)).map(|i| i + 1).max().unwrap_or(0);
        SearchBudget::new(depth, max_context, goal.nesting().max(1)).with_term_vars(highest.max(max_context))
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::lambda::check_lambda_proof;
    use crate::samples::{a, b, or, sig_pl};

    fn x(i: usize) -> Symbol {
        Symbol::from(format!("x{i}"))
    }

    #[test]
    fn swap_term_is_typed() {
        let sig = LambdaSignature::canonical(sig_pl()).unwrap();
        let term = Term::elim(
            "or",
            Term::var("x0"),
            vec![
                Branch::new(vec![x(1)], Term::ctor("or", "right", vec![Term::var("x1")])),
                Branch::new(vec![x(1)], Term::ctor("or", "left", vec![Term::var("x1")])),
            ],
        );
        let goal = LambdaJudgement::typing(vec![(x(0), or(a(), b()))], term, or(b(), a()));
        assert!(holds(&sig, &goal, 6));
        assert!(!holds(&sig, &goal, 5));
        for t in enumerate_proofs(&sig, &goal, &sig.default_budget(&goal, 6)) {
            assert_eq!(check_lambda_proof(&sig, &t), Ok(goal.clone()));
        }
    }

    #[test]
    fn two_variables_two_judgements() {
        let sig = LambdaSignature::canonical(sig_pl()).unwrap();
        let budget = SearchBudget::new(3, 2, 0).with_term_vars(2);
        let provable: Vec<LambdaJudgement> = enumerate_provable(&sig, &budget).into_iter().map(|(j, _)| j).collect();
        let ctx = vec![(x(0), a()), (x(1), a())];
        assert!(provable.contains(&LambdaJudgement::typing(ctx.clone(), Term::var("x0"), a())));
        assert!(provable.contains(&LambdaJudgement::typing(ctx, Term::var("x1"), a())));
    }

    #[test]
    fn arrangements_are_injective() {
        assert_eq!(arrangements(&[1, 2, 3], 2).len(), 6);
        assert_eq!(arrangements(&[1], 2).len(), 0);
    }
}
