use indexmap::IndexMap;

use super::{lists_up_to, propositions_up_to, tuples, Instance, SearchBudget, SearchSpace};
use crate::prop::{instantiate_prop_rule, Adjective, PropJudgement, PropRuleName, PropSignature, Proposition};

pub struct PropTables {
    /// Compound propositions inside the nesting bound: Elim scrutinee types.
    compound: Vec<Proposition>,
    /// Every proposition inside the nesting bound.
    props: Vec<Proposition>,
    /// Every context inside the bounds; only built when a nullary connective
    /// makes premise-free rules at arbitrary contexts.
    contexts: Vec<Vec<Proposition>>,
}

fn instance(sig: &PropSignature, rule: PropRuleName) -> Option<Instance<PropRuleName, PropJudgement>> {
    let inf = instantiate_prop_rule(sig, &rule).ok()?;
    Some(Instance {
        rule,
        premises: inf.premises,
        conclusion: inf.conclusion,
    })
}

fn split_last(context: &[Proposition]) -> Option<(Vec<Proposition>, &Proposition)> {
    let (last, init) = context.split_last()?;
    Some((init.to_vec(), last))
}

impl SearchSpace for PropSignature {
    type Rule = PropRuleName;
    type Judgement = PropJudgement;
    type Tables = PropTables;

    fn prepare(&self, budget: &SearchBudget) -> PropTables {
        let props = propositions_up_to(self, budget.prop_depth);
        let compound = props.iter().filter(|p| p.head().is_some()).cloned().collect();
        let contexts = if self.connectives().iter().any(|c| c.arity == 0) {
            lists_up_to(&props, budget.max_context)
        } else {
            Vec::new()
        };
        PropTables {
            compound,
            props,
            contexts,
        }
    }

    fn fits(&self, j: &PropJudgement, budget: &SearchBudget) -> bool {
        j.context.len() <= budget.max_context && j.nesting() <= budget.prop_depth
    }

    fn backward(
        &self,
        tables: &PropTables,
        goal: &PropJudgement,
        _budget: &SearchBudget,
    ) -> Vec<Instance<PropRuleName, PropJudgement>> {
        let PropJudgement {
            context,
            conclusion,
            adjective,
        } = goal;
        let mut names = Vec::new();
        match adjective {
            Adjective::Prop => {
                if let (true, Proposition::Atomic(p)) = (context.is_empty(), conclusion) {
                    names.push(PropRuleName::Var(p.clone()));
                }
                if let Some((c, args)) = conclusion.head() {
                    names.push(PropRuleName::Form {
                        connective: c.clone(),
                        context: context.clone(),
                        args: args.to_vec(),
                    });
                }
            }
            Adjective::True => {
                if let Some((init, last)) = split_last(context) {
                    if last == conclusion {
                        names.push(PropRuleName::Hyp {
                            context: init,
                            prop: last.clone(),
                        });
                    }
                }
                if let Some((c, args)) = conclusion.head() {
                    for (r, _) in self.connective(c).map(|d| d.rules.as_slice()).unwrap_or_default() {
                        names.push(PropRuleName::Intro {
                            connective: c.clone(),
                            rule: r.clone(),
                            context: context.clone(),
                            args: args.to_vec(),
                        });
                    }
                }
                for scrutinee in &tables.compound {
                    let (c, args) = scrutinee.head().expect("compound");
                    names.push(PropRuleName::Elim {
                        connective: c.clone(),
                        context: context.clone(),
                        args: args.to_vec(),
                        target: conclusion.clone(),
                    });
                }
            }
        }
        if let Some((init, last)) = split_last(context) {
            names.push(PropRuleName::Weak {
                context: init,
                prop: last.clone(),
                conclusion: conclusion.clone(),
                adjective: *adjective,
            });
        }
        names.into_iter().filter_map(|n| instance(self, n)).collect()
    }

    fn forward(
        &self,
        tables: &PropTables,
        known: &[&PropJudgement],
        budget: &SearchBudget,
    ) -> Vec<Instance<PropRuleName, PropJudgement>> {
        // per context: the propositions known well-formed, and known true
        let mut by_context: IndexMap<&[Proposition], (Vec<&Proposition>, Vec<&Proposition>)> = IndexMap::new();
        for j in known {
            let entry = by_context.entry(j.context.as_slice()).or_default();
            match j.adjective {
                Adjective::Prop => entry.0.push(&j.conclusion),
                Adjective::True => entry.1.push(&j.conclusion),
            }
        }
        let mut names = Vec::new();
        for p in self.propvars() {
            names.push(PropRuleName::Var(p.clone()));
        }
        for decl in self.connectives().iter().filter(|d| d.arity == 0) {
            for context in &tables.contexts {
                names.push(PropRuleName::Form {
                    connective: decl.name.clone(),
                    context: context.clone(),
                    args: vec![],
                });
                for (r, _) in &decl.rules {
                    names.push(PropRuleName::Intro {
                        connective: decl.name.clone(),
                        rule: r.clone(),
                        context: context.clone(),
                        args: vec![],
                    });
                }
            }
        }
        let shallow = |p: &&Proposition| p.nesting() < budget.prop_depth;
        for (context, (props, truths)) in &by_context {
            let context = context.to_vec();
            if context.len() < budget.max_context {
                for p in props {
                    names.push(PropRuleName::Hyp {
                        context: context.clone(),
                        prop: (*p).clone(),
                    });
                    let judged = props
                        .iter()
                        .map(|q| (q, Adjective::Prop))
                        .chain(truths.iter().map(|q| (q, Adjective::True)));
                    for (q, adjective) in judged {
                        names.push(PropRuleName::Weak {
                            context: context.clone(),
                            prop: (*p).clone(),
                            conclusion: (*q).clone(),
                            adjective,
                        });
                    }
                }
            }
            let small_props: Vec<&Proposition> = props.iter().copied().filter(shallow).collect();
            let small_truths: Vec<&Proposition> = truths.iter().copied().filter(shallow).collect();
            for decl in self.connectives().iter().filter(|d| d.arity > 0) {
                for args in tuples(&small_props, decl.arity) {
                    names.push(PropRuleName::Form {
                        connective: decl.name.clone(),
                        context: context.clone(),
                        args: args.into_iter().cloned().collect(),
                    });
                }
                for (r, header) in &decl.rules {
                    let mut choices: Vec<Vec<Proposition>> = vec![vec![]];
                    for adj in header.entries() {
                        let pool = match adj {
                            Adjective::Prop => &small_props,
                            Adjective::True => &small_truths,
                        };
                        choices = choices
                            .into_iter()
                            .flat_map(|prefix| {
                                pool.iter().map(move |p| {
                                    let mut v = prefix.clone();
                                    v.push((*p).clone());
                                    v
                                })
                            })
                            .collect();
                    }
                    for args in choices {
                        names.push(PropRuleName::Intro {
                            connective: decl.name.clone(),
                            rule: r.clone(),
                            context: context.clone(),
                            args,
                        });
                    }
                }
            }
            for scrutinee in truths {
                let Some((c, args)) = scrutinee.head() else { continue };
                let Some(decl) = self.connective(c) else { continue };
                let targets: Vec<&Proposition> = if decl.rules.is_empty() {
                    tables.props.iter().collect()
                } else {
                    let mut common: Option<Vec<&Proposition>> = None;
                    for (_, header) in &decl.rules {
                        let mut branch = context.clone();
                        branch.extend(header.filter_true(args).cloned());
                        let found: Vec<&Proposition> = by_context
                            .get(branch.as_slice())
                            .map(|(_, t)| t.clone())
                            .unwrap_or_default();
                        common = Some(match common {
                            None => found,
                            Some(prev) => prev.into_iter().filter(|p| found.contains(p)).collect(),
                        });
                    }
                    common.unwrap_or_default()
                };
                for target in targets {
                    names.push(PropRuleName::Elim {
                        connective: c.clone(),
                        context: context.clone(),
                        args: args.to_vec(),
                        target: target.clone(),
                    });
                }
            }
        }
        names.into_iter().filter_map(|n| instance(self, n)).collect()
    }

    fn default_budget(&self, goal: &PropJudgement, depth: usize) -> SearchBudget {
        let widest = self.connectives().iter().map(|c| c.arity).max().unwrap_or(0);
        SearchBudget::new(depth, goal.context.len() + widest, goal.nesting().max(1))
    }
}
