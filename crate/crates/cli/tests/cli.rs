use std::path::PathBuf;
use std::process::Command;

use shirshov::{parse_presentation, print_presentation, run};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.pop();
    p.pop();
    p.push("fixtures");
    p.push(name);
    p.display().to_string()
}

fn gs(args: &[&str]) -> shirshov::CommandResult {
    run(std::iter::once("gs").chain(args.iter().copied()))
}

#[test]
fn check_v_is_overlap_free() {
    let r = gs(&["check", &fixture("v.pres"), "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = r.document.unwrap();
    assert_eq!(doc["overlap_free"], true);
    assert_eq!(doc["verdict"], true);
    assert_eq!(doc["degree_bound"], 6);
}

#[test]
fn check_reports_failed_composition() {
    let r = gs(&["check", &fixture("zyx.pres")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("composition at z y x: z x y"), "{}", r.stdout);
}

#[test]
fn rips_then_hilbert() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("L.pres");
    let out = out.to_str().unwrap();
    let r = gs(&["construct", "rips", &fixture("plane.pres"), "-o", out]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = gs(&["hilbert", out, "--max-degree", "4", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = r.document.unwrap();
    assert_eq!(doc["degree_bound"], 4);
    assert_eq!(doc["dims"].as_array().unwrap().len(), 4);
    assert_eq!(doc["dims"][0], 4);
}

#[test]
fn nf_on_yx_minus_x() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.pres");
    std::fs::write(&path, "[generators]\nx y\n[relators]\ny x - x\n").unwrap();
    let r = gs(&["nf", path.to_str().unwrap(), "--expr", "[y,[y,x]]"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "x\n");
}

#[test]
fn exit_codes() {
    assert_eq!(gs(&["frobnicate"]).code, 2);
    assert_eq!(gs(&["nf", &fixture("v.pres")]).code, 2);
    assert_eq!(gs(&["check", "/definitely/not/here.pres"]).code, 2);
    assert_eq!(gs(&["nf", &fixture("v.pres"), "--expr", "y x"]).code, 3);
    assert_eq!(gs(&["member", &fixture("v.pres"), "--expr", "[x, q]"]).code, 3);
    assert_eq!(gs(&["complete", &fixture("zyx.pres"), "--max-relators", "2"]).code, 4);
    assert_eq!(gs(&["center", &fixture("heisenberg.pres"), "--max-degree", "2"]).code, 1);
    assert_eq!(gs(&["lcs", &fixture("heisenberg.pres"), "--expr", "e3 e2", "--n", "2"]).code, 0);
    assert_eq!(gs(&["lcs", &fixture("heisenberg.pres"), "--expr", "e3", "--n", "2"]).code, 1);
    assert_eq!(gs(&["member", &fixture("v.pres"), "--expr", "x x y x y - x"]).code, 0);
}

#[test]
fn fixtures_round_trip() {
    for name in ["v.pres", "w2.pres", "heisenberg.pres", "sl2.pres"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let (p, _) = parse_presentation(&text).unwrap();
        assert_eq!(print_presentation(&p), text, "{name}");
    }
    // bracket syntax normalizes to plain words, which then round-trip
    let text = std::fs::read_to_string(fixture("gamma.pres")).unwrap();
    let (p, _) = parse_presentation(&text).unwrap();
    let canonical = print_presentation(&p);
    assert!(canonical.contains("x y z - z"));
    assert_eq!(print_presentation(&parse_presentation(&canonical).unwrap().0), canonical);
}

#[test]
fn examples_match_fixtures() {
    for (name, file) in [("V", "v.pres"), ("heisenberg", "heisenberg.pres"), ("sl2", "sl2.pres")] {
        let r = gs(&["example", name]);
        assert_eq!(r.code, 0);
        assert_eq!(r.stdout, std::fs::read_to_string(fixture(file)).unwrap());
    }
    let r = gs(&["example", "wi", "--index", "2"]);
    assert_eq!(r.stdout, std::fs::read_to_string(fixture("w2.pres")).unwrap());
    assert_eq!(gs(&["example", "wi"]).code, 2);
}

#[test]
fn construct_subcommands() {
    let h = fixture("heisenberg.pres");
    let r = gs(&["construct", "htilde", &h, "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.document.unwrap()["presentation"]["metadata"]["construction"], "htilde");
    let r = gs(&["construct", "sq", &h, "--q", "3", "--m", "1", "--n", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("construction = sq"), "{}", r.stdout);
    let r = gs(&["construct", "free-product", &h, &fixture("sl2.pres"), "--order", "second-below"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (p, cert) = parse_presentation(&r.stdout).unwrap();
    assert_eq!(p.alphabet().len(), 6);
    assert!(cert.unwrap().certified);
}

#[test]
fn embed_from_structure_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.pres");
    let b = dir.path().join("b.pres");
    std::fs::write(&a, "[generators]\na1 a2 a3 a4\n[relators]\na3 a2 - a1\n").unwrap();
    std::fs::write(&b, "[generators]\nb1 b2 b3 b4\n[relators]\nb3 b2 + b4\nb4 b2 + b1\n").unwrap();
    let r = gs(&[
        "construct",
        "embed",
        "--a",
        a.to_str().unwrap(),
        "--b",
        b.to_str().unwrap(),
        "--h",
        &fixture("heisenberg.pres"),
        "--n",
        "3",
        "-o",
        dir.path().join("g.pres").to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let g = dir.path().join("g.pres");
    let r = gs(&["lemma-l1", g.to_str().unwrap(), "--samples", "20", "--seed", "5", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.document.unwrap()["passes"], 20);
}

#[test]
fn oracle_and_engine_agree_on_v() {
    let v = fixture("v.pres");
    let engine = gs(&["hilbert", &v, "--max-degree", "4", "--json"]).document.unwrap();
    let oracle = gs(&["oracle-dims", &v, "--max-degree", "4", "--json"]).document.unwrap();
    assert_eq!(engine["dims"], oracle["dims"]);
    assert_eq!(oracle["lift_bound"], 8);
    let h = gs(&["homology", &v, "--json"]).document.unwrap();
    assert_eq!((h["h1"].clone(), h["h2"].clone()), (0.into(), 0.into()));
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_gs");
    let g = fixture("gamma.pres");
    let once = || {
        Command::new(bin)
            .args(["basis-words", &g, "--max-degree", "5", "--json"])
            .output()
            .unwrap()
    };
    let (a, b) = (once(), once());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["degree_bound"], 5);
}
