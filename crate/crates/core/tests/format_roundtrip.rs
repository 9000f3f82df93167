mod common;

use dedukt::format::{parse, print, Codec, DocumentKind};
use dedukt::prop::{PropJudgement, PropSignature};
use dedukt::samples;
use proptest::prelude::*;

fn roundtrips(kind: DocumentKind) {
    proptest!(ProptestConfig::with_cases(256), |(doc in common::document(kind))| {
        let text = print(&doc);
        let back = parse(kind, &text).map_err(|e| TestCaseError::fail(format!("{e} in\n{text}")))?;
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(print(&back), text);
    });
}

#[test]
fn every_kind_roundtrips() {
    for kind in DocumentKind::ALL {
        roundtrips(kind);
    }
}

#[test]
fn canonical_print_normalizes_whitespace() {
    let messy = "( judgement\n (ctx (or A   B))\t(concl (or B A) true) ) ; trailing";
    let j = PropJudgement::parse(messy).unwrap();
    assert_eq!(j.render(), "(judgement (ctx (or A B)) (concl (or B A) true))");
}

#[test]
fn sample_signature_text() {
    let sig = samples::sig_pl();
    assert_eq!(PropSignature::parse(&sig.render()).unwrap(), sig);
}

#[test]
fn errors_carry_positions() {
    let err = PropJudgement::parse("(judgement\n  (ctx A)\n  (concl A maybe))").unwrap_err();
    assert_eq!((err.line, err.col), (3, 12));
    assert!(err.to_string().starts_with("3:12: expected"));
}
