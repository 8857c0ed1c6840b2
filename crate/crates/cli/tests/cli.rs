use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn eqadj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqadj")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix('=')).unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let path = dir.path().join(name);
    let p = path.to_str().unwrap().to_string();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &p]);
    assert!(eqadj(&all).status.success());
    p
}

#[test]
fn generated_files_match_golden() {
    let dir = TempDir::new().unwrap();
    for (name, args) in [
        ("s33.graph", vec!["--family", "S", "--s", "3", "--t", "3"]),
        ("p4.graph", vec!["--family", "path", "--t", "4"]),
        ("p5.graph", vec!["--family", "path", "--t", "5"]),
        ("k33.graph", vec!["--family", "biclique", "--t", "3"]),
        ("udg20.udg", vec!["--family", "udg", "--n", "20", "--r", "2", "--seed", "7"]),
    ] {
        let p = gen(&dir, name, &args);
        assert_eq!(std::fs::read(p).unwrap(), std::fs::read(golden(name)).unwrap(), "{name}");
    }
}

#[test]
fn s33_has_ten_vertices() {
    let text = std::fs::read_to_string(golden("s33.graph")).unwrap();
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    let n: usize = header[1].parse::<usize>().unwrap() + header[2].parse::<usize>().unwrap();
    assert_eq!(n, 10);
}

#[test]
fn reports_match_golden() {
    for (name, args) in [
        ("s33.decompose", vec!["decompose", "s33.graph"]),
        ("p5.decompose", vec!["decompose", "p5.graph"]),
        ("udg20.protocol", vec!["protocol", "--proto", "udg", "udg20.udg"]),
    ] {
        let args: Vec<String> =
            args.iter().map(|a| if a.contains('.') { golden(a).to_str().unwrap().to_string() } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = eqadj(&args);
        assert!(o.status.success());
        assert_eq!(stdout(&o), std::fs::read_to_string(golden(name)).unwrap(), "{name}");
    }
}

#[test]
fn output_does_not_depend_on_threads() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "r.graph", &["--family", "connected", "--nl", "9", "--nr", "9", "--p", "0.3", "--seed", "4"]);
    let one = eqadj(&["protocol", &g, "--threads", "1"]);
    let four = eqadj(&["protocol", &g, "--threads", "4"]);
    assert_eq!(one.stdout, four.stdout);
    let a = dir.path().join("a.lab");
    let b = dir.path().join("b.lab");
    assert!(eqadj(&["label", &g, "--cost-ceiling", "64", "--threads", "1", "--out", a.to_str().unwrap()]).status.success());
    assert!(eqadj(&["label", &g, "--cost-ceiling", "64", "--threads", "3", "--out", b.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn oracle_values() {
    let ch = stdout(&eqadj(&["oracle", "ch", golden("p4.graph").to_str().unwrap()]));
    assert_eq!(value(&ch, "value"), "2");
    let eat = stdout(&eqadj(&["oracle", "eat", golden("s33.graph").to_str().unwrap()]));
    assert_eq!(value(&eat, "result"), "FOUND");
    let deg = stdout(&eqadj(&["oracle", "degeneracy", golden("k33.graph").to_str().unwrap()]));
    assert_eq!(value(&deg, "value"), "3");
    let eq = stdout(&eqadj(&["oracle", "equivgraph", golden("k33.graph").to_str().unwrap()]));
    assert_eq!(value(&eq, "bicliques"), "1");
    let induced = stdout(&eqadj(&[
        "oracle",
        "induced",
        golden("s33.graph").to_str().unwrap(),
        "--pattern",
        golden("p4.graph").to_str().unwrap(),
    ]));
    assert_eq!(value(&induced, "result"), "FOUND");
}

#[test]
fn equivalence_graph_costs_two() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "e.graph", &["--family", "equivalence", "--count", "40", "--seed", "2"]);
    let o = eqadj(&["protocol", &g]);
    assert!(o.status.success());
    assert_eq!(value(&stdout(&o), "max_cost"), "2");
}

#[test]
fn equivalence_labels_at_512() {
    let dir = TempDir::new().unwrap();
    let mut seed = 0;
    let g = loop {
        let g = gen(&dir, "e.graph", &["--family", "equivalence", "--count", "200", "--seed", &seed.to_string()]);
        let text = std::fs::read_to_string(&g).unwrap();
        let h: Vec<usize> = text.lines().next().unwrap().split_whitespace().skip(1).map(|t| t.parse().unwrap()).collect();
        if h[0] + h[1] >= 512 {
            break g;
        }
        seed += 1;
    };
    let lab = dir.path().join("e.lab");
    assert!(eqadj(&["label", &g, "--out", lab.to_str().unwrap()]).status.success());
    let o = eqadj(&["label-verify", lab.to_str().unwrap(), &g]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(value(&text, "verdict"), "PASS");
    assert!(value(&text, "max_bits").parse::<usize>().unwrap() <= 4 * (2 * 10 + 2) + 64);
}

#[test]
fn label_round_trip_and_corruption() {
    let dir = TempDir::new().unwrap();
    let u = gen(&dir, "u.udg", &["--family", "udg", "--n", "30", "--r", "2", "--seed", "5"]);
    let lab = dir.path().join("u.lab");
    let lab = lab.to_str().unwrap();
    assert!(eqadj(&["label", "--proto", "udg", &u, "--out", lab]).status.success());
    let ok = eqadj(&["label-verify", "--proto", "udg", lab, &u]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(value(&stdout(&ok), "mismatches"), "0");

    let mut bytes = std::fs::read(lab).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0x10;
    std::fs::write(lab, &bytes).unwrap();
    let bad = eqadj(&["label-verify", "--proto", "udg", lab, &u]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("decode_error="));
}

#[test]
fn signrank3_protocol_passes() {
    let dir = TempDir::new().unwrap();
    let v = gen(&dir, "v.vec", &["--family", "signrank3", "--nl", "10", "--nr", "10", "--seed", "3"]);
    assert!(std::fs::read_to_string(&v).unwrap().starts_with("vectors 3 10 10"));
    let o = eqadj(&["protocol", "--proto", "signrank3", &v]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "verdict"), "PASS");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(eqadj(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(eqadj(&["gen", "--family", "path"]).status.code(), Some(2));
    let v = gen(&dir, "v.vec", &["--family", "signrank3", "--nl", "4", "--nr", "4"]);
    assert_eq!(eqadj(&["protocol", "--proto", "gyarfas", &v]).status.code(), Some(2));

    let h = gen(&dir, "h.graph", &["--family", "half", "--k", "6"]);
    let lab = dir.path().join("h.lab");
    let o = eqadj(&["label", &h, "--cost-ceiling", "3", "--out", lab.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!lab.exists());

    let big = gen(&dir, "big.graph", &["--family", "path", "--t", "100"]);
    assert_eq!(eqadj(&["oracle", "ch", &big]).status.code(), Some(3));
}
