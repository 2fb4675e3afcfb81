//! End-to-end behaviour of the `clw` binary and the expression printer.

use std::process::Command;

use clw_cli::app::run_captured;
use clw_cli::eval::eval_str;
use clw_core::random;
use clw_core::SuperSpace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn root_tables_match_golden_files() {
    for (witt, stem) in [("2,0", "n2_m0"), ("0,2", "n0_m2")] {
        assert_eq!(run_captured(&["--witt", witt, "roots", "--format", "tsv"]).1, golden(&format!("roots_{stem}.tsv")));
        assert_eq!(run_captured(&["--witt", witt, "roots"]).1, golden(&format!("roots_{stem}.txt")));
    }
}

#[test]
fn weight_tables_match_golden_files() {
    assert_eq!(run_captured(&["--witt", "2,0", "weights", "--rep", "ext:2", "--format", "tsv"]).1, golden("weights_ext2_n2_m0.tsv"));
    assert_eq!(run_captured(&["--witt", "0,2", "weights", "--rep", "sym:2", "--format", "tsv"]).1, golden("weights_sym2_n0_m2.tsv"));
}

#[test]
fn printed_elements_parse_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let sp = if rng.gen_bool(0.5) {
            SuperSpace::witt(rng.gen_range(0..=2), rng.gen_bool(0.5), rng.gen_range(0..=2))
        } else {
            random::space(&mut rng, 3, 4)
        };
        let x = random::clw(&mut rng, sp.n0(), sp.n1(), 3, 4, None);
        let text = x.to_text(&sp);
        let back = eval_str(&text, &sp).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(back.into_elem(&sp), x, "{text}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_clw");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["check", "--cases", "20"]), Some(0));
    assert_eq!(status(&["--witt", "1,1", "eval", "-e", "e1^^e1*"]), Some(2));
    assert_eq!(status(&["--witt", "1,1", "eval", "-e", "[x1, x1^]s"]), Some(0));
    assert_eq!(status(&["--bogus"]), Some(2));
}

#[test]
fn script_mode_and_errors() {
    let dir = std::env::temp_dir().join(format!("clw-script-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let script = dir.join("in.txt");
    std::fs::write(&script, "# comment\ne1 * e1*\n\n<x1, x1^>\n").unwrap();
    let (code, out, _) = run_captured(&["--witt", "1,1", "eval", "--script", script.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "1 + e1^e1*\n1\n"));
    let (code, _, err) = run_captured(&["--witt", "1,1", "eval", "-e", "e1^^e2"]);
    assert_eq!(code, 2);
    assert!(err.contains("column 4"), "{err}");
}

#[test]
fn osp_embed_inverts_osp_project() {
    let dir = std::env::temp_dir().join(format!("clw-osp-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let x = "1/2*e1^e1* + e1 & x1 - x1^.x1^";
    let (code, matrix, _) = run_captured(&["--witt", "1,1", "osp-project", x]);
    assert_eq!(code, 0);
    let file = dir.join("t.csv");
    std::fs::write(&file, &matrix).unwrap();
    let (code, out, err) = run_captured(&["--witt", "1,1", "osp-embed", "--matrix", file.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let sp = SuperSpace::witt(1, false, 1);
    assert!(eval_str(out.trim(), &sp).unwrap().same_as(&eval_str(x, &sp).unwrap(), &sp));
}
