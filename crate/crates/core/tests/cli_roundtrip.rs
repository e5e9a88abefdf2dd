use std::path::Path;
use std::process::Command;

fn finlift(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_finlift")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const PLANE: &str = "field Q\nring X Y Z\nideal: Z\nmap: X -> X^2; Y -> Y^2; Z -> 0\n";

#[test]
fn lift_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "plane.txt", PLANE);
    let cert = dir.path().join("plane.cert");
    let cert = cert.to_str().unwrap();
    let (code, out, err) = finlift(&["lift", "--input", &input, "--out", cert]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("X -> X^2\nY -> Y^2\nZ -> Z\n"), "{out}");

    let (code, out, _) = finlift(&["verify", "--input", &input, "--lift", cert]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "commutation: pass\nideal_preserved: pass\nm_primary: pass (quotient dimension 4)\n"
    );
}

#[test]
fn tampered_certificate_fails() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "plane.txt", PLANE);
    let (code, text, _) = finlift(&["lift", "--input", &input]);
    assert_eq!(code, 0);
    let tampered = write(dir.path(), "bad.cert", &text.replace("Z -> Z\n", "Z -> 0\n"));
    let (code, out, _) = finlift(&["verify", "--input", &input, "--lift", &tampered]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("m_primary: fail"), "{out}");
    assert!(out.contains("commutation: pass"), "{out}");
}

#[test]
fn invariant_commands() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "cone.txt", "field F 101\nring X Y Z\nideal: Z^2 - X*Y\nmode: graded\n");
    let (code, out, _) = finlift(&["dim", "--input", &input]);
    assert_eq!((code, out.as_str()), (0, "dimension: 2, witness: {X, Z}\n"));
    let (code, out, _) = finlift(&["gb", "--input", &input]);
    assert_eq!(code, 0);
    assert!(out.starts_with("order: "), "{out}");
    let (code, out, _) = finlift(&["sop", "--input", &input]);
    assert_eq!(code, 0);
    assert!(out.starts_with("dimension: 2\n"), "{out}");
    let (code, _, err) = finlift(&["lift", "--input", &input]);
    assert_eq!(code, 2, "missing map should be a validation error: {err}");
}
