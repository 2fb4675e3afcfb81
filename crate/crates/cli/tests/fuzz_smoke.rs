//! The fuzz target properties on the checked-in corpus and on random
//! strings, so they run on a stable toolchain.

use std::path::PathBuf;

use clw_cli::eval::eval_str;
use clw_cli::expr::parse;
use clw_core::{Scalar, SuperSpace};
use proptest::prelude::*;

fn corpus(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| std::fs::read_to_string(entry.unwrap().path()).unwrap())
        .collect();
    out.sort();
    out
}

fn scalar_property(text: &str) {
    if let Ok(c) = Scalar::parse(text) {
        assert_eq!(Scalar::parse(&c.to_string()).unwrap(), c, "{text}");
    }
}

fn descriptor_property(text: &str) {
    if let Ok(sp) = SuperSpace::parse_descriptor(text) {
        let back = SuperSpace::parse_descriptor(&sp.to_descriptor()).unwrap();
        assert_eq!(back.to_descriptor(), sp.to_descriptor());
    }
}

fn eval_property(text: &str) {
    let sp = SuperSpace::witt(1, true, 1);
    let _ = parse(text, &sp);
    if let Ok(v) = eval_str(text, &sp) {
        let printed = v.to_text(&sp);
        assert!(eval_str(&printed, &sp).unwrap().same_as(&v, &sp), "{text} printed as {printed}");
    }
}

#[test]
fn corpus_seeds_hold_their_properties() {
    corpus("scalar_parse").iter().for_each(|t| scalar_property(t));
    corpus("descriptor_parse").iter().for_each(|t| descriptor_property(t));
    assert!(corpus("descriptor_parse").iter().any(|t| SuperSpace::parse_descriptor(t).is_ok()));
    corpus("expr_parse").iter().chain(&corpus("expr_eval")).for_each(|t| eval_property(t));
}

proptest! {
    #[test]
    fn random_scalar_text(text in "[0-9ir2+*/() -]{0,24}") {
        scalar_property(&text);
    }

    #[test]
    fn random_expression_text(text in r"[0-9eix12*^.&'+/:<>\[\](), s-]{0,32}") {
        eval_property(&text);
    }

    #[test]
    fn random_descriptor_lines(lines in proptest::collection::vec("(space [0-3] [0-2]|G|W|star|[0-2](, ?-?[0-2])?|labels[01]( [a-z])*)", 0..10)) {
        descriptor_property(&lines.join("\n"));
    }
}
