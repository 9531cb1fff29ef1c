use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sdepthlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdepthlab")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn family_text_and_json() {
    let out = sdepthlab(&["family", "--kind", "cycle", "--n", "5", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n=5: x1*x2, x1*x5, x2*x3, x3*x4, x4*x5\nphi=2 psi=2\npd=3 depth=2\n");

    let out = sdepthlab(&["family", "--kind", "line", "--n", "3", "--m", "3", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["generators"], serde_json::json!(["x1*x2*x3"]));
    assert_eq!(v["degenerate"], "principal");
    assert_eq!(v["formulas"]["phi"], 2);

    let out = sdepthlab(&["family", "--kind", "line", "--n", "3", "--m", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sdepth_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ideal = write(dir.path(), "j42.txt", "n=4: x1*x2, x2*x3, x3*x4, x4*x1\n");
    let cert = dir.path().join("cert.txt");
    let out = sdepthlab(&["sdepth", "--ideal-file", &ideal, "--certificate", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "sdepth=1\n");
    let cert = cert.to_str().unwrap();

    let out = sdepthlab(&["verify-decomp", "--ideal-file", &ideal, "--decomp-file", cert, "--k", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = sdepthlab(&["verify-decomp", "--ideal-file", &ideal, "--decomp-file", cert, "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("invalid:"));

    let tampered = fs::read_to_string(cert).unwrap().lines().skip(1).collect::<Vec<_>>().join("\n");
    let tampered = write(dir.path(), "bad.txt", &tampered);
    let out = sdepthlab(&["verify-decomp", "--ideal-file", &ideal, "--decomp-file", &tampered, "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("uncovered"), "{}", stdout(&out));
}

#[test]
fn sdepth_of_a_module() {
    let dir = tempfile::tempdir().unwrap();
    let j = write(dir.path(), "j.txt", "n=5: x1*x2, x2*x3, x3*x4, x4*x5, x5*x1");
    let i = write(dir.path(), "i.txt", "n=5: x1*x2, x2*x3, x3*x4, x4*x5");
    let out = sdepthlab(&["sdepth", "--ideal-file", &j, "--quotient-by", &i]);
    assert_eq!(stdout(&out), "sdepth=3\n");
    // reversed containment is an input error
    let out = sdepthlab(&["sdepth", "--ideal-file", &i, "--quotient-by", &j]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn depth_and_betti() {
    let dir = tempfile::tempdir().unwrap();
    let ideal = write(dir.path(), "tri.txt", "n=3: x1*x2*x3");
    let out = sdepthlab(&["depth", "--ideal-file", &ideal]);
    assert_eq!(stdout(&out), "depth=2\npd=1\n");
    let out = sdepthlab(&["depth", "--ideal-file", &ideal, "--betti"]);
    assert_eq!(stdout(&out), "i,F,rank\n0,1,1\n1,x1*x2*x3,1\n");
    let sq = write(dir.path(), "sq.txt", "n=2: x1^2");
    assert_eq!(sdepthlab(&["depth", "--ideal-file", &sq]).status.code(), Some(3));
}

#[test]
fn input_and_resource_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "n=2: x1 x2");
    let out = sdepthlab(&["sdepth", "--ideal-file", &bad]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 8"));
    let missing = dir.path().join("missing.txt");
    assert_eq!(sdepthlab(&["depth", "--ideal-file", missing.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(sdepthlab(&["scan", "--check", "nope"]).status.code(), Some(3));

    let ideal = write(dir.path(), "j.txt", "n=4: x1*x2, x2*x3, x3*x4, x4*x1");
    let out = sdepthlab(&["sdepth", "--ideal-file", &ideal, "--max-poset", "3"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn scan_formats() {
    let out = sdepthlab(&["scan", "--check", "thm14", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = stdout(&out);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,m,check,psi,phi,sdepth,depth,bound_lo,bound_hi,status,ms");
    assert_eq!(lines[1], "3,2,thm14,1,1,1,1,1,1,ok,");
    assert_eq!(lines[2], "4,2,thm14,1,2,1,1,1,2,ok,");
    assert_eq!(lines.len(), 7);

    let out = sdepthlab(&["scan", "--check", "thm14", "--n-max", "4", "--format", "json", "--timings"]);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert!(rows[0]["ms"].is_u64());
    assert_eq!(rows[1]["status"], "ok");

    let out =
        sdepthlab(&["scan", "--check", "cor15", "--n-max", "5", "--m-min", "3", "--m-max", "3", "--format", "md"]);
    let md = stdout(&out);
    assert!(md.contains("| 5 | 3 | cor15:printed-cond |"), "{md}");
    assert!(md.contains("| 4 | 3 | cor15 |"), "{md}");
}

#[test]
fn scan_exit_codes() {
    // conjecture rows never fail the process
    assert_eq!(sdepthlab(&["scan", "--check", "conjecture", "--n-max", "10"]).status.code(), Some(0));
    // the quotient bound is exceeded for m >= 3
    let out = sdepthlab(&["scan", "--check", "prop16", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("4,3,prop16,2,2,3,3,4,,violation,"));
    assert_eq!(sdepthlab(&["scan", "--check", "prop16", "--n-max", "6", "--m-max", "2"]).status.code(), Some(0));
}

#[test]
fn scan_writes_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let certs = dir.path().join("certs");
    let out = sdepthlab(&["scan", "--check", "thm14", "--n-max", "4", "--cert-dir", certs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut names: Vec<String> =
        fs::read_dir(&certs).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names, vec!["thm14_n3_m2.txt", "thm14_n4_m2.txt", "thm14_n4_m3.txt"]);
    let ideal = write(dir.path(), "j.txt", "n=4: x1*x2, x2*x3, x3*x4, x4*x1");
    let cert = certs.join("thm14_n4_m2.txt");
    let out =
        sdepthlab(&["verify-decomp", "--ideal-file", &ideal, "--decomp-file", cert.to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
}
