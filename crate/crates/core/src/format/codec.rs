use super::sexp::{Pos, Sexp};
use super::{Codec, ParseError};
use crate::deduction::ProofTree;
use crate::lambda::{
    Branch, LambdaConclusion, LambdaContext, LambdaJudgement, LambdaRuleName, LambdaSignature, TermAlphabet, Term,
};
use crate::prop::{Adjective, ConnectiveDecl, Header, MorphismSpec, PropJudgement, PropRuleName, PropSignature, Proposition};
use crate::symbol::Symbol;

/// Walks the items of `(head item…)`.
struct Form<'a> {
    items: std::slice::Iter<'a, Sexp>,
    close: Pos,
}

impl<'a> Form<'a> {
    fn open(sexp: &'a Sexp, head: &str) -> Result<Self, ParseError> {
        let mut form = Self::open_any(sexp, &format!("`({head} …)`"))?;
        match form.items.next() {
            Some(Sexp::Atom(h, _)) if h == head => Ok(form),
            _ => Err(sexp.error(format!("`({head} …)`"))),
        }
    }

    fn open_any(sexp: &'a Sexp, expected: &str) -> Result<Self, ParseError> {
        match sexp {
            Sexp::List(items, _, close) => Ok(Form {
                items: items.iter(),
                close: *close,
            }),
            Sexp::Atom(..) => Err(sexp.error(expected.to_string())),
        }
    }

    fn next(&mut self, expected: &str) -> Result<&'a Sexp, ParseError> {
        self.items
            .next()
            .ok_or_else(|| ParseError::new(self.close.line, self.close.col, expected.to_string()))
    }

    fn peek(&self) -> Option<&'a Sexp> {
        self.items.clone().next()
    }

    fn rest(&mut self) -> std::slice::Iter<'a, Sexp> {
        std::mem::take(&mut self.items)
    }

    fn finish(mut self) -> Result<(), ParseError> {
        match self.items.next() {
            None => Ok(()),
            Some(extra) => Err(extra.error("`)`")),
        }
    }
}

fn ident(sexp: &Sexp, what: &str) -> Result<Symbol, ParseError> {
    match sexp.as_atom() {
        Some(s) if Symbol::is_identifier(s) => Ok(Symbol::from(s)),
        _ => Err(sexp.error(what.to_string())),
    }
}

fn keyword(sexp: &Sexp, words: &[&str]) -> Result<usize, ParseError> {
    sexp.as_atom()
        .and_then(|s| words.iter().position(|w| *w == s))
        .ok_or_else(|| {
            let alts: Vec<String> = words.iter().map(|w| format!("`{w}`")).collect();
            sexp.error(alts.join(" or "))
        })
}

fn atom(s: &Symbol) -> Sexp {
    Sexp::atom(s.as_str())
}

fn symbols(sexp: &Sexp, head: &str, what: &str) -> Result<Vec<Symbol>, ParseError> {
    let mut form = Form::open(sexp, head)?;
    form.rest().map(|s| ident(s, what)).collect()
}

fn seq<T: Codec>(head: &str, items: &[T]) -> Sexp {
    Sexp::tagged(head, items.iter().map(Codec::encode))
}

fn decode_seq<T: Codec>(sexp: &Sexp, head: &str) -> Result<Vec<T>, ParseError> {
    let mut form = Form::open(sexp, head)?;
    form.rest().map(T::decode).collect()
}

impl Codec for Proposition {
    fn encode(&self) -> Sexp {
        match self {
            Proposition::Atomic(v) => atom(v),
            Proposition::Apply(c, args) => Sexp::tagged(c.as_str(), args.iter().map(Codec::encode)),
        }
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        match sexp {
            Sexp::Atom(..) => Ok(Proposition::Atomic(ident(sexp, "a proposition")?)),
            Sexp::List(..) => {
                let mut form = Form::open_any(sexp, "a proposition")?;
                let c = ident(form.next("a connective name")?, "a connective name")?;
                let args = form.rest().map(Proposition::decode).collect::<Result<Vec<_>, _>>()?;
                Ok(Proposition::apply(c, args))
            }
        }
    }
}

impl Codec for Adjective {
    fn encode(&self) -> Sexp {
        Sexp::atom(self.keyword())
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        Ok([Adjective::Prop, Adjective::True][keyword(sexp, &["prop", "true"])?])
    }
}

fn encode_prop_ctx(ctx: &[Proposition]) -> Sexp {
    seq("ctx", ctx)
}

fn encode_concl(p: &Proposition, adj: Adjective) -> Sexp {
    Sexp::tagged("concl", [p.encode(), adj.encode()])
}

fn decode_concl(sexp: &Sexp) -> Result<(Proposition, Adjective), ParseError> {
    let mut form = Form::open(sexp, "concl")?;
    let p = Proposition::decode(form.next("a proposition")?)?;
    let adj = Adjective::decode(form.next("`prop` or `true`")?)?;
    form.finish()?;
    Ok((p, adj))
}

impl Codec for PropJudgement {
    fn encode(&self) -> Sexp {
        Sexp::tagged(
            "judgement",
            [encode_prop_ctx(&self.context), encode_concl(&self.conclusion, self.adjective)],
        )
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let mut form = Form::open(sexp, "judgement")?;
        let context = decode_seq(form.next("`(ctx …)`")?, "ctx")?;
        let (conclusion, adjective) = decode_concl(form.next("`(concl …)`")?)?;
        form.finish()?;
        Ok(PropJudgement::new(context, conclusion, adjective))
    }
}

impl Codec for Branch {
    fn encode(&self) -> Sexp {
        Sexp::list(vec![Sexp::list(self.binders.iter().map(atom).collect()), self.body.encode()])
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let mut form = Form::open_any(sexp, "a branch `((x…) body)`")?;
        let binders_sexp = form.next("binder list `(x…)`")?;
        let mut binders_form = Form::open_any(binders_sexp, "binder list `(x…)`")?;
        let binders = binders_form
            .rest()
            .map(|s| ident(s, "a term variable"))
            .collect::<Result<Vec<_>, _>>()?;
        let body = Term::decode(form.next("a branch body")?)?;
        form.finish()?;
        Ok(Branch::new(binders, body))
    }
}

impl Codec for Term {
    fn encode(&self) -> Sexp {
        match self {
            Term::Var(x) => atom(x),
            Term::Ctor { connective, rule, args } => {
                let mut v = vec![Sexp::atom("ctor"), atom(connective), atom(rule)];
                v.extend(args.iter().map(Codec::encode));
                Sexp::list(v)
            }
            Term::Elim { connective, scrutinee, branches } => {
                let mut v = vec![Sexp::atom("case"), atom(connective), scrutinee.encode()];
                v.extend(branches.iter().map(Codec::encode));
                Sexp::list(v)
            }
        }
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        if let Sexp::Atom(..) = sexp {
            return Ok(Term::Var(ident(sexp, "a term")?));
        }
        let mut form = Form::open_any(sexp, "a term")?;
        let head = form.next("`ctor` or `case`")?;
        match keyword(head, &["ctor", "case"])? {
            0 => {
                let c = ident(form.next("a connective name")?, "a connective name")?;
                let r = ident(form.next("a rule label")?, "a rule label")?;
                let args = form.rest().map(Term::decode).collect::<Result<Vec<_>, _>>()?;
                Ok(Term::ctor(c, r, args))
            }
            _ => {
                let c = ident(form.next("a connective name")?, "a connective name")?;
                let scrutinee = Term::decode(form.next("a scrutinee term")?)?;
                let branches = form.rest().map(Branch::decode).collect::<Result<Vec<_>, _>>()?;
                Ok(Term::elim(c, scrutinee, branches))
            }
        }
    }
}

fn encode_lambda_ctx(ctx: &LambdaContext) -> Sexp {
    Sexp::tagged("ctx", ctx.iter().map(|(x, p)| Sexp::list(vec![atom(x), p.encode()])))
}

fn decode_lambda_ctx(sexp: &Sexp) -> Result<LambdaContext, ParseError> {
    let mut form = Form::open(sexp, "ctx")?;
    form.rest()
        .map(|entry| {
            let mut e = Form::open_any(entry, "a declaration `(x P)`")?;
            let x = ident(e.next("a term variable")?, "a term variable")?;
            let p = Proposition::decode(e.next("a proposition")?)?;
            e.finish()?;
            Ok((x, p))
        })
        .collect()
}

impl Codec for LambdaConclusion {
    fn encode(&self) -> Sexp {
        match self {
            LambdaConclusion::TypeDecl(p) => Sexp::tagged("concl", [p.encode(), Sexp::atom("type")]),
            LambdaConclusion::Typing(t, p) => Sexp::tagged("typed", [t.encode(), p.encode()]),
        }
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let mut form = Form::open_any(sexp, "`(concl P type)` or `(typed t P)`")?;
        let head = form.next("`concl` or `typed`")?;
        let out = match keyword(head, &["concl", "typed"])? {
            0 => {
                let p = Proposition::decode(form.next("a proposition")?)?;
                // `prop` is accepted as a synonym of `type`
                keyword(form.next("`type`")?, &["type", "prop"])?;
                LambdaConclusion::TypeDecl(p)
            }
            _ => {
                let t = Term::decode(form.next("a term")?)?;
                let p = Proposition::decode(form.next("a proposition")?)?;
                LambdaConclusion::Typing(t, p)
            }
        };
        form.finish()?;
        Ok(out)
    }
}

impl Codec for LambdaJudgement {
    fn encode(&self) -> Sexp {
        Sexp::tagged("judgement", [encode_lambda_ctx(&self.context), self.conclusion.encode()])
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let mut form = Form::open(sexp, "judgement")?;
        let context = decode_lambda_ctx(form.next("`(ctx …)`")?)?;
        let conclusion = LambdaConclusion::decode(form.next("`(concl P type)` or `(typed t P)`")?)?;
        form.finish()?;
        Ok(LambdaJudgement::new(context, conclusion))
    }
}

impl Codec for ConnectiveDecl {
    fn encode(&self) -> Sexp {
        let mut v = vec![
            Sexp::atom("connective"),
            atom(&self.name),
            Sexp::tagged("arity", [Sexp::atom(self.arity.to_string())]),
        ];
        for (label, header) in &self.rules {
            v.push(Sexp::tagged(
                "rule",
                [atom(label), Sexp::tagged("header", header.entries().iter().map(Codec::encode))],
            ));
        }
        Sexp::list(v)
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let mut form = Form::open(sexp, "connective")?;
        let name = ident(form.next("a connective name")?, "a connective name")?;
        let arity_sexp = form.next("`(arity n)`")?;
        let mut arity_form = Form::open(arity_sexp, "arity")?;
        let n = arity_form.next("a natural number")?;
        let arity = n
            .as_atom()
            .filter(|s| s.bytes().all(|b| b.is_ascii_digit()) && (*s == "0" || !s.starts_with('0')))
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| n.error("a natural number"))?;
        arity_form.finish()?;
        let mut rules = Vec::new();
        for r in form.rest() {
            let mut rf = Form::open(r, "rule")?;
            let label = ident(rf.next("a rule label")?, "a rule label")?;
            let header = decode_seq::<Adjective>(rf.next("`(header …)`")?, "header")?;
            rf.finish()?;
            rules.push((label, Header::new(header)));
        }
        Ok(ConnectiveDecl::new(name, arity, rules))
    }
}

fn encode_signature(sig: &PropSignature, termvars: Option<&TermAlphabet>) -> Sexp {
    let mut v = vec![Sexp::atom("signature"), Sexp::tagged("propvars", sig.propvars().iter().map(atom))];
    if let Some(alphabet) = termvars {
        v.push(match alphabet {
            TermAlphabet::Indexed(prefix) => {
                Sexp::tagged("termvars", [Sexp::tagged("indexed", [atom(prefix)])])
            }
            TermAlphabet::Finite(names) => Sexp::tagged("termvars", names.iter().map(atom)),
        });
    }
    v.extend(sig.connectives().iter().map(Codec::encode));
    Sexp::list(v)
}

fn decode_signature(sexp: &Sexp, lambda: bool) -> Result<(PropSignature, Option<TermAlphabet>), ParseError> {
    let mut form = Form::open(sexp, "signature")?;
    let propvars = symbols(form.next("`(propvars …)`")?, "propvars", "a propositional variable")?;
    let mut termvars = None;
    if let Some(next @ Sexp::List(items, ..)) = form.peek() {
        if items.first().and_then(Sexp::as_atom) == Some("termvars") {
            if !lambda {
                return Err(next.error("`(connective …)`; term variables belong to λ signatures"));
            }
            form.next("")?;
            let mut tf = Form::open(next, "termvars")?;
            termvars = Some(match tf.peek() {
                Some(indexed @ Sexp::List(..)) => {
                    let mut inf = Form::open(indexed, "indexed")?;
                    let prefix = ident(inf.next("a variable prefix")?, "a variable prefix")?;
                    inf.finish()?;
                    tf.next("")?;
                    tf.finish()?;
                    TermAlphabet::Indexed(prefix)
                }
                _ => TermAlphabet::Finite(
                    tf.rest().map(|s| ident(s, "a term variable")).collect::<Result<_, _>>()?,
                ),
            });
        }
    }
    let connectives = form.rest().map(ConnectiveDecl::decode).collect::<Result<Vec<_>, _>>()?;
    let sig = PropSignature::new(propvars, connectives)
        .map_err(|e| sexp.error(format!("a well-formed signature ({e})")))?;
    Ok((sig, termvars))
}

fn render_signature(sexp: &Sexp) -> String {
    let Sexp::List(items, ..) = sexp else { return sexp.to_string() };
    let mut out = format!("({}", items[0]);
    for item in &items[1..] {
        out.push_str("\n  ");
        out.push_str(&item.to_string());
    }
    out.push(')');
    out
}

impl Codec for PropSignature {
    fn encode(&self) -> Sexp {
        encode_signature(self, None)
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        Ok(decode_signature(sexp, false)?.0)
    }

    fn render(&self) -> String {
        render_signature(&self.encode())
    }
}

impl Codec for LambdaSignature {
    fn encode(&self) -> Sexp {
        encode_signature(self.base(), Some(self.termvars()))
    }

    /// A missing `termvars` clause means the canonical `x0, x1, …`.
    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let (base, termvars) = decode_signature(sexp, true)?;
        LambdaSignature::new(base, termvars.unwrap_or_else(TermAlphabet::canonical))
            .map_err(|e| sexp.error(format!("a well-formed signature ({e})")))
    }

    fn render(&self) -> String {
        render_signature(&self.encode())
    }
}

impl Codec for MorphismSpec {
    fn encode(&self) -> Sexp {
        let pair = |(a, b): &(Symbol, Symbol)| Sexp::list(vec![atom(a), atom(b)]);
        Sexp::tagged(
            "morphism",
            [
                Sexp::tagged("connectives", self.connectives.iter().map(pair)),
                Sexp::tagged(
                    "rules",
                    self.rules.iter().map(|(c, r, r2)| Sexp::list(vec![atom(c), atom(r), atom(r2)])),
                ),
                Sexp::tagged("vars", self.vars.iter().map(pair)),
            ],
        )
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        fn tuples(sexp: &Sexp, head: &str, n: usize) -> Result<Vec<Vec<Symbol>>, ParseError> {
            let mut form = Form::open(sexp, head)?;
            form.rest()
                .map(|entry| {
                    let mut e = Form::open_any(entry, &format!("a {n}-element entry"))?;
                    let names = (0..n)
                        .map(|_| ident(e.next("a name")?, "a name"))
                        .collect::<Result<Vec<_>, _>>()?;
                    e.finish()?;
                    Ok(names)
                })
                .collect()
        }
        let mut form = Form::open(sexp, "morphism")?;
        let connectives = tuples(form.next("`(connectives …)`")?, "connectives", 2)?;
        let rules = tuples(form.next("`(rules …)`")?, "rules", 3)?;
        let vars = tuples(form.next("`(vars …)`")?, "vars", 2)?;
        form.finish()?;
        let two = |mut v: Vec<Symbol>| {
            let b = v.pop().unwrap();
            (v.pop().unwrap(), b)
        };
        Ok(MorphismSpec {
            connectives: connectives.into_iter().map(two).collect(),
            rules: rules
                .into_iter()
                .map(|mut v| {
                    let r2 = v.pop().unwrap();
                    let r = v.pop().unwrap();
                    (v.pop().unwrap(), r, r2)
                })
                .collect(),
            vars: vars.into_iter().map(two).collect(),
        })
    }

    fn render(&self) -> String {
        render_signature(&self.encode())
    }
}

fn args(ps: &[Proposition]) -> Sexp {
    seq("args", ps)
}

impl Codec for PropRuleName {
    fn encode(&self) -> Sexp {
        match self {
            PropRuleName::Var(p) => Sexp::tagged("var", [atom(p)]),
            PropRuleName::Hyp { context, prop } => Sexp::tagged("self", [encode_prop_ctx(context), prop.encode()]),
            PropRuleName::Weak { context, prop, conclusion, adjective } => Sexp::tagged(
                "weak",
                [encode_prop_ctx(context), prop.encode(), encode_concl(conclusion, *adjective)],
            ),
            PropRuleName::Form { connective, context, args: ps } => {
                Sexp::tagged("form", [atom(connective), encode_prop_ctx(context), args(ps)])
            }
            PropRuleName::Intro { connective, rule, context, args: ps } => {
                Sexp::tagged("intro", [atom(connective), atom(rule), encode_prop_ctx(context), args(ps)])
            }
            PropRuleName::Elim { connective, context, args: ps, target } => Sexp::tagged(
                "elim",
                [atom(connective), encode_prop_ctx(context), args(ps), target.encode()],
            ),
        }
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let mut form = Form::open_any(sexp, "a rule head")?;
        let head = form.next("a rule species")?;
        let ctx = |form: &mut Form| decode_seq::<Proposition>(form.next("`(ctx …)`")?, "ctx");
        let name = |form: &mut Form, what: &str| ident(form.next(what)?, what);
        let prop = |form: &mut Form| Proposition::decode(form.next("a proposition")?);
        let out = match keyword(head, &["var", "self", "weak", "form", "intro", "elim"])? {
            0 => PropRuleName::Var(name(&mut form, "a propositional variable")?),
            1 => PropRuleName::Hyp { context: ctx(&mut form)?, prop: prop(&mut form)? },
            2 => {
                let context = ctx(&mut form)?;
                let p = prop(&mut form)?;
                let (conclusion, adjective) = decode_concl(form.next("`(concl …)`")?)?;
                PropRuleName::Weak { context, prop: p, conclusion, adjective }
            }
            3 => PropRuleName::Form {
                connective: name(&mut form, "a connective name")?,
                context: ctx(&mut form)?,
                args: decode_seq(form.next("`(args …)`")?, "args")?,
            },
            4 => PropRuleName::Intro {
                connective: name(&mut form, "a connective name")?,
                rule: name(&mut form, "a rule label")?,
                context: ctx(&mut form)?,
                args: decode_seq(form.next("`(args …)`")?, "args")?,
            },
            _ => PropRuleName::Elim {
                connective: name(&mut form, "a connective name")?,
                context: ctx(&mut form)?,
                args: decode_seq(form.next("`(args …)`")?, "args")?,
                target: prop(&mut form)?,
            },
        };
        form.finish()?;
        Ok(out)
    }
}

impl Codec for LambdaRuleName {
    fn encode(&self) -> Sexp {
        match self {
            LambdaRuleName::Var(p) => Sexp::tagged("var", [atom(p)]),
            LambdaRuleName::Hyp { context, var, prop } => {
                Sexp::tagged("self", [encode_lambda_ctx(context), atom(var), prop.encode()])
            }
            LambdaRuleName::Weak { context, var, prop, conclusion } => Sexp::tagged(
                "weak",
                [encode_lambda_ctx(context), atom(var), prop.encode(), conclusion.encode()],
            ),
            LambdaRuleName::Form { connective, context, args: ps } => {
                Sexp::tagged("form", [atom(connective), encode_lambda_ctx(context), args(ps)])
            }
            LambdaRuleName::Intro { connective, rule, context, args: ps, terms } => Sexp::tagged(
                "intro",
                [atom(connective), atom(rule), encode_lambda_ctx(context), args(ps), seq("terms", terms)],
            ),
            LambdaRuleName::Elim { connective, context, args: ps, target, scrutinee, branches } => Sexp::tagged(
                "elim",
                [
                    atom(connective),
                    encode_lambda_ctx(context),
                    args(ps),
                    target.encode(),
                    scrutinee.encode(),
                    seq("branches", branches),
                ],
            ),
        }
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        let mut form = Form::open_any(sexp, "a rule head")?;
        let head = form.next("a rule species")?;
        let ctx = |form: &mut Form| decode_lambda_ctx(form.next("`(ctx …)`")?);
        let name = |form: &mut Form, what: &str| ident(form.next(what)?, what);
        let prop = |form: &mut Form| Proposition::decode(form.next("a proposition")?);
        let out = match keyword(head, &["var", "self", "weak", "form", "intro", "elim"])? {
            0 => LambdaRuleName::Var(name(&mut form, "a propositional variable")?),
            1 => LambdaRuleName::Hyp {
                context: ctx(&mut form)?,
                var: name(&mut form, "a term variable")?,
                prop: prop(&mut form)?,
            },
            2 => LambdaRuleName::Weak {
                context: ctx(&mut form)?,
                var: name(&mut form, "a term variable")?,
                prop: prop(&mut form)?,
                conclusion: LambdaConclusion::decode(form.next("`(concl P type)` or `(typed t P)`")?)?,
            },
            3 => LambdaRuleName::Form {
                connective: name(&mut form, "a connective name")?,
                context: ctx(&mut form)?,
                args: decode_seq(form.next("`(args …)`")?, "args")?,
            },
            4 => LambdaRuleName::Intro {
                connective: name(&mut form, "a connective name")?,
                rule: name(&mut form, "a rule label")?,
                context: ctx(&mut form)?,
                args: decode_seq(form.next("`(args …)`")?, "args")?,
                terms: decode_seq(form.next("`(terms …)`")?, "terms")?,
            },
            _ => LambdaRuleName::Elim {
                connective: name(&mut form, "a connective name")?,
                context: ctx(&mut form)?,
                args: decode_seq(form.next("`(args …)`")?, "args")?,
                target: prop(&mut form)?,
                scrutinee: Term::decode(form.next("a scrutinee term")?)?,
                branches: decode_seq(form.next("`(branches …)`")?, "branches")?,
            },
        };
        form.finish()?;
        Ok(out)
    }
}

fn encode_tree<R: Codec>(tree: &ProofTree<R>) -> Sexp {
    let mut v = vec![Sexp::atom("proof"), tree.rule().encode()];
    v.extend(tree.children().iter().map(encode_tree));
    Sexp::list(v)
}

fn decode_tree<R: Codec>(sexp: &Sexp) -> Result<ProofTree<R>, ParseError> {
    let mut form = Form::open(sexp, "proof")?;
    let rule = R::decode(form.next("a rule head")?)?;
    let children = form.rest().map(decode_tree).collect::<Result<Vec<_>, _>>()?;
    Ok(ProofTree::new(rule, children))
}

/// One node per line, children indented two spaces below their parent.
fn render_tree<R: Codec>(tree: &ProofTree<R>) -> String {
    fn go<R: Codec>(tree: &ProofTree<R>, indent: usize, out: &mut String) {
        out.push_str("(proof ");
        out.push_str(&tree.rule().encode().to_string());
        for child in tree.children() {
            out.push('\n');
            out.extend(std::iter::repeat_n(' ', indent + 2));
            go(child, indent + 2, out);
        }
        out.push(')');
    }
    let mut out = String::new();
    go(tree, 0, &mut out);
    out
}

impl<R: Codec> Codec for ProofTree<R> {
    fn encode(&self) -> Sexp {
        encode_tree(self)
    }

    fn decode(sexp: &Sexp) -> Result<Self, ParseError> {
        decode_tree(sexp)
    }

    fn render(&self) -> String {
        render_tree(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{self, a, b, or};

    #[test]
    fn connective_entry() {
        let decl =
            ConnectiveDecl::parse("(connective or (arity 2) (rule left (header true prop)) (rule right (header prop true)))")
                .unwrap();
        assert_eq!(&decl, samples::sig_pl().connective("or").unwrap());
    }

    #[test]
    fn judgement_text() {
        let j = PropJudgement::truth(vec![or(a(), b())], or(b(), a()));
        let text = "(judgement (ctx (or A B)) (concl (or B A) true))";
        assert_eq!(j.render(), text);
        assert_eq!(PropJudgement::parse(text), Ok(j));
    }

    #[test]
    fn lambda_type_alias() {
        let j = LambdaJudgement::parse("(judgement (ctx (x0 A)) (concl B prop))").unwrap();
        assert_eq!(j, LambdaJudgement::type_decl(vec![("x0".into(), a())], b()));
        assert_eq!(j.render(), "(judgement (ctx (x0 A)) (concl B type))");
    }

    #[test]
    fn golden_proof_layout() {
        let text = samples::or_comm_proof().render();
        assert!(text.starts_with("(proof (elim or (ctx (or A B)) (args A B) (or B A))\n  (proof (self (ctx) (or A B))\n    (proof (form or (ctx) (args A B))\n      (proof (var A))\n      (proof (var B))))"));
        assert_eq!(ProofTree::<PropRuleName>::parse(&text).unwrap(), samples::or_comm_proof());
    }

    #[test]
    fn signature_layout() {
        let text = samples::sig_pl().render();
        assert_eq!(
            text,
            "(signature\n  (propvars A B)\n  (connective or (arity 2) (rule left (header true prop)) (rule right (header prop true)))\n  (connective and (arity 2) (rule pair (header true true))))"
        );
        assert_eq!(PropSignature::parse(&text), Ok(samples::sig_pl()));
        let lambda = LambdaSignature::parse(&text).unwrap();
        assert_eq!(lambda.termvars(), &TermAlphabet::canonical());
        assert_eq!(LambdaSignature::parse(&lambda.render()), Ok(lambda));
    }

    #[test]
    fn error_positions() {
        let err = PropJudgement::parse("(judgement (ctx A)\n  (concl A maybe))").unwrap_err();
        assert_eq!((err.line, err.col), (2, 12));
        assert!(err.expected.contains("`true`"));
        let err = PropSignature::parse("(signature (propvars A) (termvars x0))").unwrap_err();
        assert_eq!((err.line, err.col), (1, 25));
        let err = PropSignature::parse("(signature (propvars A A))").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
        let err = Term::parse("(ctor or)").unwrap_err();
        assert_eq!((err.line, err.col), (1, 9));
        assert!(Proposition::parse("1A").is_err());
        assert!(Proposition::parse("()").is_err());
    }

    #[test]
    fn terms() {
        let t = Term::elim(
            "or",
            Term::var("x0"),
            vec![
                Branch::new(vec!["x1".into()], Term::ctor("or", "right", vec![Term::var("x1")])),
                Branch::new(vec!["x1".into()], Term::ctor("or", "left", vec![Term::var("x1")])),
            ],
        );
        let text = "(case or x0 ((x1) (ctor or right x1)) ((x1) (ctor or left x1)))";
        assert_eq!(t.render(), text);
        assert_eq!(Term::parse(text), Ok(t));
    }
}
