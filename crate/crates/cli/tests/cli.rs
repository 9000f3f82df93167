use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn dedukt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dedukt"))
        .args(args)
        .env_remove("DEDUKT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn check_prints_the_judgement() {
    let (sig, proof) = (data("pl.sx"), data("orcomm.sx"));
    let out = dedukt(&["check", "--system", "prop", "--sig", sig.to_str().unwrap(), "--proof", proof.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(judgement (ctx (or A B)) (concl (or B A) true))\n");
}

#[test]
fn roundtrip_of_the_sample_proof() {
    let (sig, proof) = (data("pl.sx"), data("orcomm.sx"));
    let out = dedukt(&["roundtrip", "--sig", sig.to_str().unwrap(), "--proof", proof.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "beta(annotate(p)) == p\n");
}

#[test]
fn tarski_summary_and_seed_override() {
    let out = dedukt(&["tarski", "--trials", "100", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "iff: 100/100, finitary⇒: 100/100, monotonic⇒: pass-on-applicable\n");
    let env = Command::new(env!("CARGO_BIN_EXE_dedukt"))
        .args(["tarski", "--trials", "5", "--seed", "1"])
        .env("DEDUKT_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(0));
    assert!(stdout(&env).starts_with("iff: 5/5"));
    let bad = Command::new(env!("CARGO_BIN_EXE_dedukt"))
        .args(["tarski", "--trials", "5"])
        .env("DEDUKT_SEED", "nine")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn annotated_proof_checks_as_lambda() {
    let proof = data("orcomm.sx");
    let out = dedukt(&["annotate", "--proof", proof.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parts: Vec<&str> = text.trim_end().split("\n\n").collect();
    assert_eq!(parts.len(), 4);
    assert_eq!(parts[3], "(case or x0 ((x1) (ctor or right x1)) ((x1) (ctor or left x1)))");
    let (sig, lproof) = (temp(parts[0]), temp(parts[2]));
    let checked = dedukt(&[
        "check",
        "--system",
        "lambda",
        "--sig",
        sig.path().to_str().unwrap(),
        "--proof",
        lproof.path().to_str().unwrap(),
    ]);
    assert_eq!(checked.status.code(), Some(0));
    assert_eq!(stdout(&checked).trim_end(), parts[1]);

    let erased = dedukt(&["erase", "--sig", sig.path().to_str().unwrap(), "--proof", lproof.path().to_str().unwrap()]);
    assert_eq!(erased.status.code(), Some(0));
    let original = std::fs::read_to_string(proof).unwrap();
    assert!(stdout(&erased).ends_with(&original));
}

#[test]
fn search_finds_the_sample_proof() {
    let goal = data("orcomm-goal.sx");
    let out = dedukt(&["search", "--goal", goal.to_str().unwrap(), "--max-depth", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let original = std::fs::read_to_string(data("orcomm.sx")).unwrap();
    assert!(stdout(&out).split("\n\n").any(|p| p.trim_end() == original.trim_end()));
    let count = dedukt(&["search", "--goal", goal.to_str().unwrap(), "--max-depth", "5", "--count"]);
    assert_eq!(stdout(&count), "0\n");
}

#[test]
fn reports_succeed() {
    let cor = dedukt(&["corollary", "--depth", "3"]);
    assert_eq!(cor.status.code(), Some(0));
    assert!(stdout(&cor).contains("0 failures"));
    let inj = dedukt(&["report-injectivity", "--depth", "3"]);
    assert_eq!(inj.status.code(), Some(0));
    assert!(stdout(&inj).contains("judgements with several proofs"));
}

#[test]
fn output_is_deterministic() {
    let proof = data("orcomm.sx");
    let a = dedukt(&["annotate", "--proof", proof.to_str().unwrap()]);
    let b = dedukt(&["annotate", "--proof", proof.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rejected_proof_exits_1() {
    let original = std::fs::read_to_string(data("orcomm.sx")).unwrap();
    let broken = temp(&original.replacen("(intro or right", "(intro or left", 1));
    let out = dedukt(&["check", "--system", "prop", "--proof", broken.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let bad = temp("(proof (var A)\n");
    let out = dedukt(&["check", "--system", "prop", "--proof", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected"));
    assert_eq!(dedukt(&["check", "--system", "modal"]).status.code(), Some(2));
    assert_eq!(dedukt(&["nonsense"]).status.code(), Some(2));
}
