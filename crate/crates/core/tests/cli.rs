use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn qborel(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qborel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn bundled_sessions_run_cleanly() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/sessions");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "qb") {
            for format in ["text", "json"] {
                let out = qborel(&[path.to_str().unwrap(), "--format", format], "");
                assert!(out.status.success(), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
                if format == "json" {
                    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
                    assert!(v.get("error").is_none());
                }
            }
            seen += 1;
        }
    }
    assert!(seen >= 4);
}

#[test]
fn exit_codes() {
    let ok = qborel(&["-"], "vars a b; ideal I = Q[P](b); cmd close I;");
    assert_eq!(ok.status.code(), Some(2), "undeclared poset is a parse error");

    let ok = qborel(&[], "vars a b; poset P { a < b } ideal I = Q[P](b); cmd close I;");
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "> close I\n(a, b)\n");

    let math = qborel(&["--format", "json"], "vars a b; ideal I = (b); cmd resolve ek I;");
    assert_eq!(math.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&math.stdout).unwrap();
    assert_eq!(v["error"]["index"], 0);

    let parse = qborel(&["--format", "json"], "vars a b;\nposet P { b < a }");
    assert_eq!(parse.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&parse.stdout).unwrap();
    assert_eq!(v["error"]["line"], 2);
}

#[test]
fn selfcheck_passes() {
    let out = qborel(&["--seed", "7", "--rounds", "5"], "");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}
