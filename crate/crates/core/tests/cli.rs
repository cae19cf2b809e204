use std::path::PathBuf;

use stableshell::cli::run;

fn out_path(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("stableshell-cli-{}-{tag}.txt", std::process::id()))
}

/// Runs the CLI with output redirected; returns the exit code and the output.
fn call(tag: &str, args: &[&str]) -> (i32, String) {
    let out = out_path(tag);
    let mut argv = vec!["stableshell", "--out", out.to_str().unwrap()];
    argv.extend_from_slice(args);
    let code = run(argv);
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    let _ = std::fs::remove_file(&out);
    (code, text.trim().to_string())
}

#[test]
fn eulerian_methods_agree() {
    for m in ["formula", "descents", "lattice"] {
        let (code, text) = call(&format!("eul-{m}"), &["eulerian", "--d", "2", "--l", "1", "--r", "2", "--method", m]);
        assert_eq!(code, 0, "{m}");
        assert!(text.contains("6x+2x^2"), "{m}: {text}");
    }
}

#[test]
fn construct_then_check_shelling() {
    let (code, scenario) = call("construct", &["--format", "json", "construct", "pile-nonstable"]);
    assert_eq!(code, 0);
    let (code, text) = call("shelling", &["--format", "json", "shelling", "--complex", &scenario]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(text.contains("\"stable\""), "{text}");
    assert!(v.is_object());
}

#[test]
fn interlace_verdicts() {
    let (code, text) = call("interlace", &["interlace", "1,1", "2,3,1"]);
    assert_eq!(code, 0);
    assert!(text.contains("true"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(call("ok", &["verify", "eulerian-3way"]).0, 0);
    assert_eq!(call("bad-suite", &["verify", "no-such-suite"]).0, 2);
    assert_eq!(call("bad-arg", &["eulerian", "--d", "0", "--l", "0", "--r", "2"]).0, 2);
    assert_eq!(call("bad-json", &["faces", "--complex", "{not json"]).0, 2);
    assert_eq!(run(["stableshell", "no-such-command"]), 2);
}

#[test]
fn verify_mismatch_exits_one() {
    assert_eq!(call("mismatch", &["verify", "table-top"]).0, 1);
}

#[test]
fn line_shelling_of_the_square() {
    let (code, text) = call("line", &["lineshell", "--polytope", "cube:2", "--point", "1/4,1/3", "--dir", "1,2"]);
    assert_eq!(code, 0, "{text}");
    let (code, text) = call("line-bad", &["lineshell", "--polytope", "cube:2", "--point", "1/2,1/2", "--dir", "1,1"]);
    assert_eq!(code, 2, "{text}");
}
