use std::path::Path;
use std::process::{Command, Output};

fn flagstone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagstone"))
        .args(args)
        .env_remove("FLAGSTONE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path = path.to_str().unwrap().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let o = flagstone(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn gen_formats() {
    let o = flagstone(&["gen", "cycle", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("5 5\n0 1\n"));
    let o = flagstone(&["gen", "multipartite", "2,2,2", "--format", "graph6"]);
    assert_eq!(stdout(&o).trim(), "E]~o");
    assert_eq!(flagstone(&["gen", "cycle"]).status.code(), Some(2));
    assert_eq!(flagstone(&["gen", "nonsense", "3"]).status.code(), Some(2));
}

#[test]
fn check_corpus_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        gen_to(dir.path(), "c5.txt", &["cycle", "5"]),
        gen_to(dir.path(), "octahedron.g6", &["cross-polytope", "2", "--format", "graph6"]),
        gen_to(dir.path(), "c4c4.txt", &["join-of-cycles", "2", "8"]),
        gen_to(dir.path(), "torus.txt", &["torus", "4", "4"]),
    ];
    let json = dir.path().join("out.json");
    let mut args = vec!["check"];
    args.extend(files.iter().map(String::as_str));
    args.extend(["--json", json.to_str().unwrap()]);
    let o = flagstone(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("c4c4.txt: n=8 edges=24 s=2 leveled(d=3)=true thm_odd=holds (equality)"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["summary"]["checked"], 4);
    assert_eq!(v["entries"][3]["result"]["Ok"]["complex"]["klee"]["holds"], true);
}

#[test]
fn check_reports_parse_errors_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let good = gen_to(dir.path(), "c4.txt", &["cycle", "4"]);
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n1 7\n").unwrap();
    let o = flagstone(&["check", &good, bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("c4.txt: n=4"));
    assert!(text.contains("bad.txt: error: line 3"), "{text}");
}

#[test]
fn bounds_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = gen_to(dir.path(), "c5c5.txt", &["join-of-cycles", "2", "10"]);
    let o = flagstone(&["bounds", &file, "--s", "2", "--C", "3/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instance"], "c5c5");
    assert_eq!(v["edges"], 35);
    assert_eq!(v["C"], "3/2");
    assert_eq!(v["bounds"]["thm_odd"]["value"], "35/1");
    assert_eq!(v["bounds"]["thm_odd"]["equality"], true);
    assert_eq!(v["gamma"]["g1"], 2);
    assert_eq!(flagstone(&["bounds", &file, "--s", "2", "--C", "x"]).status.code(), Some(2));
}

#[test]
fn search_writes_json_and_respects_cap() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("search.json");
    let o = flagstone(&["search", "--mode", "exhaustive", "--d", "1", "--n", "4..6", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("searched range 4..6"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["summaries"][2]["max_edges"], 6);

    let o = flagstone(&["search", "--mode", "exhaustive", "--d", "3", "--n", "1..9", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = flagstone(&["search", "--mode", "random", "--d", "3", "--n", "8..10", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (p, w) in [(&a, "1"), (&b, "3")] {
        let o = flagstone(&[
            "search", "--mode", "random", "--d", "3", "--n", "8..12", "--seed", "5", "--budget", "40", "--workers", w,
            "--out", p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
