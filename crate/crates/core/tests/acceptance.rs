// One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use dedukt::correspondence::{corollary_check, extend_signature, injectivity_report, roundtrip, CorollaryReport};
use dedukt::format::{parse, print, Codec, DocumentKind};
use dedukt::prop::{check_prop_proof, coherence_check, Adjective};
use dedukt::search::{enumerate_all_proofs, SearchBudget};
use dedukt::{samples, tarski};
use proptest::test_runner::{Config, TestCaseError, TestRunner};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn golden() -> Outcome {
    let sig = samples::sig_pl();
    let tree = samples::or_comm_proof();
    let printed = match check_prop_proof(&sig, &tree) {
        Ok(j) => j.render(),
        Err(e) => return outcome(false, format!("golden proof rejected: {e}")),
    };
    let expected = "(judgement (ctx (or A B)) (concl (or B A) true))";
    if printed != expected {
        return outcome(false, format!("proved {printed}"));
    }
    let mutants = common::mutations(&tree);
    let accepted = mutants.iter().filter(|m| check_prop_proof(&sig, m).is_ok()).count();
    outcome(
        accepted == 0,
        format!("{printed}; {} single-node mutants, {accepted} accepted", mutants.len()),
    )
}

fn surjectivity() -> Outcome {
    let sig = samples::sig_pl();
    let all = enumerate_all_proofs(&sig, &SearchBudget::new(4, 2, 2));
    let trees: Vec<_> = all.iter().flat_map(|(_, ts)| ts).collect();
    let failures: Vec<String> = trees
        .iter()
        .filter_map(|t| roundtrip(&sig, t).err().map(|e| format!("{}: {e}", t.render())))
        .collect();
    let first = failures.first().cloned().unwrap_or_default();
    outcome(
        failures.is_empty(),
        format!("{} proofs of {} judgements, {} failures {first}", trees.len(), all.len(), failures.len()),
    )
}

fn corollary() -> CorollaryReport {
    corollary_check(&samples::sig_pl(), None, &SearchBudget::new(3, 2, 2).with_term_vars(2))
}

fn erasure_direction(report: &CorollaryReport) -> Outcome {
    outcome(
        report.erasure_failures.is_empty() && report.lambda_proofs > 0,
        format!(
            "{} λ proofs erased, {} failures {}",
            report.lambda_proofs,
            report.erasure_failures.len(),
            report.erasure_failures.first().cloned().unwrap_or_default()
        ),
    )
}

fn annotation_direction(report: &CorollaryReport) -> Outcome {
    outcome(
        report.annotation_failures.is_empty() && report.prop_judgements > 0,
        format!(
            "{} provable judgements, {} proofs annotated, {} failures {}",
            report.prop_judgements,
            report.prop_proofs,
            report.annotation_failures.len(),
            report.annotation_failures.first().cloned().unwrap_or_default()
        ),
    )
}

fn non_injectivity() -> Outcome {
    let sig = extend_signature(&samples::sig_pl());
    let report = injectivity_report(&sig, &SearchBudget::new(5, 2, 1).with_term_vars(2));
    let preimage = report
        .multi_preimage
        .iter()
        .find(|(p, _)| p.adjective == Adjective::True)
        .map(|(p, ls)| format!("{p} has {} preimages, among them {} and {}", ls.len(), ls[0], ls[1]))
        .unwrap_or_else(|| "no judgement with several preimages".into());
    let proofs = report
        .multi_proof
        .iter()
        .max_by_key(|(_, n)| *n)
        .map(|(j, n)| format!("{j} has {n} proofs"))
        .unwrap_or_else(|| "no judgement with several proofs".into());
    outcome(
        !report.multi_preimage.is_empty() && !report.multi_proof.is_empty(),
        format!(
            "{} λ proofs; {} multi-preimage judgements, e.g. {preimage}; {} multi-proof judgements, e.g. {proofs}; {} β collisions",
            report.lambda_proofs,
            report.multi_preimage.len(),
            report.multi_proof.len(),
            report.beta_collisions.len()
        ),
    )
}

fn tarski_harness() -> Outcome {
    let report = tarski::adjunction_check(42, 100);
    let first = report.counterexamples.first().cloned().unwrap_or_default();
    outcome(
        report.passed() && report.iff_pass == 100 && report.finitary_pass == 100,
        format!(
            "{} ({} monotonic instances) {first}",
            report.summary(),
            report.monotonic_applicable
        ),
    )
}

fn coherence() -> Outcome {
    let sig = samples::sig_pl();
    let budget = SearchBudget::new(3, 2, 2);
    let mut details = Vec::new();
    let mut passed = true;
    for (name, (target, m)) in [
        ("primed", samples::primed_morphism()),
        ("collapse", samples::collapse_morphism()),
        ("flipped", samples::flipped_morphism()),
    ] {
        let report = coherence_check(&sig, &target, &m, &budget);
        passed &= report.passed() && report.proofs > 0;
        details.push(format!("{name}: {} proofs, {} failures", report.proofs, report.failures.len()));
    }
    outcome(passed, details.join("; "))
}

fn format_roundtrip() -> Outcome {
    let mut failures = Vec::new();
    for kind in DocumentKind::ALL {
        let mut runner = TestRunner::new(Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        });
        let result = runner.run(&common::document(kind), |doc| {
            let text = print(&doc);
            match parse(kind, &text) {
                Ok(back) if back == doc => Ok(()),
                Ok(_) => Err(TestCaseError::fail(format!("changed: {text}"))),
                Err(e) => Err(TestCaseError::fail(format!("{e}: {text}"))),
            }
        });
        if let Err(e) = result {
            failures.push(format!("{kind}: {e}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!("1000 documents × {} kinds, {} kinds failing {}", DocumentKind::ALL.len(), failures.len(), failures.join("; ")),
    )
}

fn report(number: usize, name: &str, limit: Option<Duration>, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut result = run();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            result.passed = false;
            result.detail.push_str(&format!(" [over the {:.0?} limit]", limit));
        }
    }
    let status = if result.passed { "PASS" } else { "FAIL" };
    println!("{status} {number} {name}: {} ({:.2?})", result.detail.trim_end(), elapsed);
    result.passed
}

fn main() {
    let secs = Duration::from_secs;
    let mut ok = true;
    ok &= report(1, "golden proof", Some(secs(1)), golden);
    ok &= report(2, "annotation is a section of erasure", Some(secs(60)), surjectivity);
    let start = Instant::now();
    let cor = corollary();
    let shared = start.elapsed();
    ok &= report(3, "erasure preserves proofs", None, || erasure_direction(&cor));
    ok &= report(4, "provable judgements annotate", None, || annotation_direction(&cor));
    println!("     (criteria 3 and 4 share one {:.2?} enumeration)", shared);
    ok &= report(5, "non-injectivity witnesses", None, non_injectivity);
    ok &= report(6, "deductive relation adjunction", Some(secs(30)), tarski_harness);
    ok &= report(7, "coherence transport", None, coherence);
    ok &= report(8, "format roundtrip", None, format_roundtrip);
    if !ok {
        std::process::exit(1);
    }
}
