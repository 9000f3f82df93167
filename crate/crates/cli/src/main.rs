//! `dedukt`: batch front end for checking, erasing, annotating and searching
//! proofs, and for the bounded property reports.
//!
//! Exit status: 0 on success, 1 when a proof is rejected or a checked property
//! fails (details on stderr), 2 on unreadable input or bad usage.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dedukt::correspondence::{
    annotate, corollary_check, erase_judgement, erase_proof, erase_signature, extend_signature, injectivity_report,
    roundtrip,
};
use dedukt::format::{Codec, ParseError};
use dedukt::lambda::{check_lambda_proof, LambdaJudgement, LambdaRuleName, LambdaSignature};
use dedukt::prop::{check_prop_proof, PropJudgement, PropRuleName, PropSignature};
use dedukt::search::{enumerate_proofs, SearchBudget, SearchSpace};
use dedukt::{samples, tarski, ProofTree};

#[derive(Parser)]
#[command(name = "dedukt", version, about = "Natural-deduction proof checking, proof-term annotation and search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum System {
    Prop,
    Lambda,
}

#[derive(Args)]
struct SigArg {
    /// Signature file; defaults to the built-in ∨/∧ signature over A, B.
    #[arg(long)]
    sig: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    max_context: Option<usize>,
    /// Maximum connective nesting of any proposition in the search.
    #[arg(long)]
    prop_depth: Option<usize>,
    /// λ only: how many term variables contexts may draw from.
    #[arg(long)]
    term_vars: Option<usize>,
}

impl BudgetArgs {
    fn apply(&self, mut budget: SearchBudget) -> SearchBudget {
        if let Some(n) = self.max_context {
            budget.max_context = n;
            budget.term_vars = budget.term_vars.max(n);
        }
        if let Some(n) = self.prop_depth {
            budget.prop_depth = n;
        }
        if let Some(n) = self.term_vars {
            budget.term_vars = n;
        }
        budget
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof and print the judgement it proves.
    Check {
        #[arg(long, value_enum)]
        system: System,
        #[command(flatten)]
        sig: SigArg,
        #[arg(long)]
        proof: PathBuf,
    },
    /// Erase a λ signature, and optionally a judgement and a proof, to the
    /// propositional counterparts.
    Erase {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long)]
        judgement: Option<PathBuf>,
        #[arg(long)]
        proof: Option<PathBuf>,
    },
    /// Annotate a propositional proof with proof terms.
    Annotate {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long)]
        proof: PathBuf,
    },
    /// Check that erasing the annotation of a proof gives the proof back.
    Roundtrip {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long)]
        proof: PathBuf,
    },
    /// Print every proof of a goal within the bounds.
    Search {
        #[arg(long, value_enum, default_value = "prop")]
        system: System,
        #[command(flatten)]
        sig: SigArg,
        #[arg(long)]
        goal: PathBuf,
        #[arg(long)]
        max_depth: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print only the number of proofs.
        #[arg(long)]
        count: bool,
    },
    /// Where erasure fails to be injective among small λ proofs.
    ReportInjectivity {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        max_context: usize,
        #[arg(long, default_value_t = 1)]
        prop_depth: usize,
        /// How many witnesses of each kind to print.
        #[arg(long, default_value_t = 3)]
        examples: usize,
    },
    /// Check both directions of the proof correspondence on small proofs.
    Corollary {
        #[command(flatten)]
        sig: SigArg,
        #[arg(long)]
        depth: usize,
        /// Restrict to one propositional judgement.
        #[arg(long)]
        goal: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        max_context: usize,
        #[arg(long, default_value_t = 2)]
        prop_depth: usize,
    },
    /// Random trials of the relation/system correspondence on finite universes.
    Tarski {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Base seed; the DEDUKT_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Semantic(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Semantic(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Semantic(m) => f.write_str(m),
        }
    }
}

fn semantic(e: impl fmt::Display) -> Failure {
    Failure::Semantic(e.to_string())
}

fn read<T: Codec>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    T::parse(&text).map_err(|e: ParseError| Failure::Usage(format!("{}:{e}", path.display())))
}

fn prop_sig(arg: &SigArg) -> Result<PropSignature, Failure> {
    arg.sig.as_deref().map_or_else(|| Ok(samples::sig_pl()), read)
}

/// A λ signature file; a propositional one gets the canonical alphabet.
fn lambda_sig(arg: &SigArg) -> Result<LambdaSignature, Failure> {
    arg.sig
        .as_deref()
        .map_or_else(|| Ok(extend_signature(&samples::sig_pl())), read)
}

fn print_proofs<S: SearchSpace>(sys: &S, goal: &S::Judgement, budget: &SearchBudget, count: bool) {
    let proofs = enumerate_proofs(sys, goal, budget);
    if count {
        println!("{}", proofs.len());
    } else {
        let texts: Vec<String> = proofs.iter().map(Codec::render).collect();
        if !texts.is_empty() {
            println!("{}", texts.join("\n\n"));
        }
    }
    eprintln!("{} proofs of height ≤ {}", proofs.len(), budget.max_depth);
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Check { system, sig, proof } => match system {
            System::Prop => {
                let s = prop_sig(&sig)?;
                let tree: ProofTree<PropRuleName> = read(&proof)?;
                println!("{}", check_prop_proof(&s, &tree).map_err(semantic)?);
            }
            System::Lambda => {
                let s = lambda_sig(&sig)?;
                let tree: ProofTree<LambdaRuleName> = read(&proof)?;
                println!("{}", check_lambda_proof(&s, &tree).map_err(semantic)?);
            }
        },
        Command::Erase { sig, judgement, proof } => {
            let s = lambda_sig(&sig)?;
            let mut out = vec![erase_signature(&s).render()];
            if let Some(path) = judgement {
                let j: LambdaJudgement = read(&path)?;
                out.push(erase_judgement(&j).render());
            }
            if let Some(path) = proof {
                let tree: ProofTree<LambdaRuleName> = read(&path)?;
                out.push(erase_proof(&s, &tree).map_err(semantic)?.render());
            }
            println!("{}", out.join("\n\n"));
        }
        Command::Annotate { sig, proof } => {
            let s = prop_sig(&sig)?;
            let tree: ProofTree<PropRuleName> = read(&proof)?;
            let ann = annotate(&s, &tree).map_err(semantic)?;
            let mut out = vec![ann.signature.render(), ann.judgement.render(), ann.proof.render()];
            if let Some(t) = ann.term() {
                out.push(t.render());
            }
            println!("{}", out.join("\n\n"));
        }
        Command::Roundtrip { sig, proof } => {
            let s = prop_sig(&sig)?;
            let tree: ProofTree<PropRuleName> = read(&proof)?;
            roundtrip(&s, &tree).map_err(semantic)?;
            println!("beta(annotate(p)) == p");
        }
        Command::Search {
            system,
            sig,
            goal,
            max_depth,
            budget,
            count,
        } => match system {
            System::Prop => {
                let s = prop_sig(&sig)?;
                let g: PropJudgement = read(&goal)?;
                print_proofs(&s, &g, &budget.apply(s.default_budget(&g, max_depth)), count);
            }
            System::Lambda => {
                let s = lambda_sig(&sig)?;
                let g: LambdaJudgement = read(&goal)?;
                print_proofs(&s, &g, &budget.apply(s.default_budget(&g, max_depth)), count);
            }
        },
        Command::ReportInjectivity {
            sig,
            depth,
            max_context,
            prop_depth,
            examples,
        } => {
            let s = lambda_sig(&sig)?;
            let report = injectivity_report(&s, &SearchBudget::new(depth, max_context, prop_depth));
            println!("lambda proofs: {}", report.lambda_proofs);
            println!("lambda judgements: {}", report.lambda_judgements);
            println!("judgements with several preimages: {}", report.multi_preimage.len());
            for (p, ls) in report.multi_preimage.iter().take(examples) {
                println!("  {p}");
                for l in ls {
                    println!("    <- {l}");
                }
            }
            println!("judgements with several proofs: {}", report.multi_proof.len());
            for (j, n) in report.multi_proof.iter().take(examples) {
                println!("  {j}: {n} proofs");
            }
            println!("beta collisions: {}", report.beta_collisions.len());
        }
        Command::Corollary {
            sig,
            depth,
            goal,
            max_context,
            prop_depth,
        } => {
            let s = prop_sig(&sig)?;
            let goal: Option<PropJudgement> = goal.as_deref().map(read).transpose()?;
            let budget = SearchBudget::new(depth, max_context, prop_depth);
            let report = corollary_check(&s, goal.as_ref(), &budget);
            println!(
                "erasure: {} lambda proofs, {} failures",
                report.lambda_proofs,
                report.erasure_failures.len()
            );
            println!(
                "annotation: {} judgements, {} proofs, {} failures",
                report.prop_judgements,
                report.prop_proofs,
                report.annotation_failures.len()
            );
            if !report.passed() {
                let all: Vec<_> = report.erasure_failures.iter().chain(&report.annotation_failures).cloned().collect();
                return Err(Failure::Semantic(all.join("\n")));
            }
        }
        Command::Tarski { trials, seed } => {
            let seed = match std::env::var("DEDUKT_SEED") {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("DEDUKT_SEED: `{v}` is not a seed")))?,
                Err(_) => seed,
            };
            let report = tarski::adjunction_check(seed, trials);
            println!("{}", report.summary());
            if !report.passed() {
                return Err(Failure::Semantic(report.counterexamples.join("\n")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
