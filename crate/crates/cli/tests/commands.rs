use std::path::PathBuf;
use std::process::{Command, Output};

fn exobi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exobi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp_file(name: &str, text: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn machine_status(out: &str, tag: &str) -> Option<String> {
    out.lines().find_map(|l| {
        let mut it = l.split('\t');
        (it.next() == Some(tag)).then(|| it.next().unwrap_or("").to_string())
    })
}

#[test]
fn relations_s03() {
    let o = exobi(&["relations", "S03", "--machine"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("relations.count\tinfo\t8 relations"));
    assert_eq!(machine_status(&out, "ideal.printed").as_deref(), Some("pass"));
    assert_eq!(machine_status(&out, "relations.07").as_deref(), Some("info"));
}

#[test]
fn relations_s14_generic() {
    let o = exobi(&["relations", "S14", "--machine"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("10 relations"));
}

#[test]
fn relations_s14_at_one_reports_both_comparisons() {
    let o = exobi(&["relations", "S14", "--q", "1", "--machine"]);
    let out = stdout(&o);
    assert!(out.contains("6 relations"));
    assert_eq!(machine_status(&out, "ideal.printed").as_deref(), Some("fail"));
    assert_eq!(machine_status(&out, "ideal.tilde").as_deref(), Some("pass"));
    assert_eq!(o.status.code(), Some(1));
    let same = exobi(&["relations", "S14q1", "--machine"]);
    assert_eq!(stdout(&same).lines().skip(1).collect::<Vec<_>>(), out.lines().skip(1).collect::<Vec<_>>());
}

#[test]
fn relations_from_files() {
    let id = tmp_file("identity.rmat", "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    let o = exobi(&["relations", "--rmatrix", id.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("6 relations"));
    assert!(stdout(&o).contains("ba - ab = 0") || stdout(&o).contains("ab - ba = 0"), "{}", stdout(&o));
    let flip = tmp_file("flip.rmat", "# flip\n1, 0, 0, 0\n0, 0, 1, 0\n0, 1, 0, 0\n0, 0, 0, 1\n");
    let o = exobi(&["relations", "--rmatrix", flip.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("no relations"));
}

#[test]
fn bad_files_are_rejected() {
    let bad = tmp_file("bad.rmat", "1 0 0 0\n0 1 x 0\n");
    let o = exobi(&["relations", "--rmatrix", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let short = tmp_file("short.rmat", "1 0 0 0\n");
    assert_eq!(exobi(&["relations", "--rmatrix", short.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn non_ybe_matrix_fails() {
    let broken = tmp_file("broken.rmat", "1 1 0 1\n0 1 1 0\n0 1 -1 0\n-1 0 0 1\n");
    let o = exobi(&["relations", "--rmatrix", broken.to_str().unwrap(), "--machine"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(machine_status(&stdout(&o), "yang_baxter").as_deref(), Some("fail"));
    let o = exobi(&["gauge", "--rmatrix", broken.to_str().unwrap(), "--machine"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(machine_status(&stdout(&o), "ybe.file").as_deref(), Some("fail"));
}

#[test]
fn unknown_names_are_rejected() {
    for args in [&["verify", "s99"][..], &["frobnicate"], &["reps", "S03"], &["basis", "s03"], &["relations", "S99"]] {
        let o = exobi(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_duals() {
    for alg in ["s03", "s14", "s14o"] {
        let o = exobi(&["verify", alg, "--machine"]);
        assert!(o.status.success(), "{alg}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("summary\tpass\t0 failed\n"));
    }
    let out = stdout(&exobi(&["verify", "s03", "--machine"]));
    assert_eq!(machine_status(&out, "s03.relation.00").as_deref(), Some("pass"));
    assert_eq!(machine_status(&out, "s03.antipode.B").as_deref(), Some("pass"));
    let out = stdout(&exobi(&["verify", "s14o", "--machine"]));
    assert_eq!(machine_status(&out, "s14o.omega.gamma_m").as_deref(), Some("pass"));
    assert_eq!(machine_status(&out, "s14o.sl2.02").as_deref(), Some("pass"));
}

#[test]
fn verify_at_degree_zero_warns() {
    let o = exobi(&["verify", "s03", "--maxdeg", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("WARN  maxdeg 0"));
}

#[test]
fn verify_presentations() {
    for alg in ["S03", "S14", "S14o", "S14o-hatted"] {
        let o = exobi(&["verify", alg, "--maxdeg", "3"]);
        assert!(o.status.success(), "{alg}");
    }
}

#[test]
fn reps_s03_regular() {
    for src in ["lrr", "rrr"] {
        let o = exobi(&["reps", "s03", "--source", src]);
        assert!(o.status.success());
        let out = stdout(&o);
        assert!(out.contains("irreducible factors: 7"), "{out}");
        assert!(out.contains("2 × [dim 2: Ã = 1, B̃² = 1, D̃² = 1]"));
        assert_eq!(out.matches("1 × [dim 1: Ã = free, B̃² = 1").count(), 4);
    }
}

#[test]
fn reps_s14_degree_four() {
    let o = exobi(&["reps", "s14", "--source", "pir", "--degree", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("spectrum {-4, -2, 0, 2, 4}").count(), 2);
}

#[test]
fn reps_s03_degree_space() {
    let o = exobi(&["reps", "s03", "--source", "pir", "--degree", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("4 × [dim 1: Ã = 3").count(), 4);
}

#[test]
fn reps_weights() {
    let o = exobi(&["reps", "s14", "--weight", "D=1"]);
    assert!(o.status.success());
    let o = exobi(&["reps", "s03", "--weight", "D=2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("inadmissible"));
}

#[test]
fn reps_induced() {
    let o = exobi(&["reps", "s14o", "--induced", "3", "3", "--L", "12", "--machine"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("induced.submodules\tpass\tinvariant submodules below the boundary: dimension 4"));
    let o = exobi(&["reps", "s14o", "--induced", "2", "0", "--eta", "--machine"]);
    assert_eq!(machine_status(&stdout(&o), "eta.intertwiner").as_deref(), Some("pass"));
    let o = exobi(&["reps", "s14o", "--induced", "-2", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("dimension none"));
    assert_eq!(exobi(&["reps", "s14o", "--induced", "3", "2"]).status.code(), Some(2));
    assert_eq!(exobi(&["reps", "s03", "--induced", "3", "3"]).status.code(), Some(2));
}

#[test]
fn gauge_and_basis() {
    assert!(exobi(&["gauge"]).status.success());
    let out = stdout(&exobi(&["basis", "S14o", "--maxdeg", "5", "--machine"]));
    assert!(out.contains("S14o.dim.5\tpass\tdegree 5: 56 basis words"));
    let out = stdout(&exobi(&["basis", "S03", "--maxdeg", "2", "--degree", "2"]));
    assert!(out.contains("b̃c̃") && out.contains("d̃^2"));
}

#[test]
fn pairing_values() {
    let out = stdout(&exobi(&["pair", "s03", "B", "bt"]));
    assert!(out.contains("⟨B, bt⟩ = 1"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["reps", "s03", "--source", "lrr", "--machine"][..], &["verify", "s14", "--maxdeg", "5"]] {
        let a = exobi(args);
        let b = exobi(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
