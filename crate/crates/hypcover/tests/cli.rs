use std::fs;
use std::path::Path;

use hypcover::cli::run;
use hypcover::io::{read_cover, read_edge_list};
use hypcover_core::graph::verify_cover;
use hypcover_core::solver::vc_brute_force;
use tempfile::TempDir;

fn hc(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hypcover").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.split_whitespace()
        .find_map(|t| t.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key}= in {text}"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, text).unwrap();
    p
}

fn petersen_text() -> String {
    let mut s = String::new();
    for i in 0..5 {
        s += &format!("{} {}\n{} {}\n{} {}\n", i, (i + 1) % 5, 5 + i, 5 + (i + 2) % 5, i, i + 5);
    }
    s
}

#[test]
fn help_and_usage_errors() {
    let (code, out, _) = hc(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("generate"));
    let (code, _, err) = hc(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    let (code, _, _) = hc(&["generate", "--n", "100", "--alpha", "0.4"]);
    assert_eq!(code, 1);
}

#[test]
fn generate_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let (e1, c1, e2, c2) = (path(&dir, "a.txt"), path(&dir, "a.coords"), path(&dir, "b.txt"), path(&dir, "b.coords"));
    let (code, out, _) = hc(&["generate", "--n", "979", "--seed", "1", "--out-edges", &e1, "--out-coords", &c1]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "n"), "979");
    assert_eq!(field(&out, "R"), "11.483604");
    let avg: f64 = field(&out, "avg_degree").parse().unwrap();
    assert!((10.0..20.0).contains(&avg), "{avg}");
    hc(&["generate", "--n", "979", "--seed", "1", "--out-edges", &e2, "--out-coords", &c2]);
    assert_eq!(fs::read(&e1).unwrap(), fs::read(&e2).unwrap());
    assert_eq!(fs::read(&c1).unwrap(), fs::read(&c2).unwrap());
    let g = read_edge_list(fs::read(&e1).unwrap().as_slice()).unwrap().graph;
    assert_eq!(g.n(), 979);
    assert_eq!(g.m().to_string(), field(&out, "m"));
}

#[test]
fn generate_zero_vertices() {
    let dir = TempDir::new().unwrap();
    let (e, c) = (path(&dir, "e.txt"), path(&dir, "c.txt"));
    let (code, out, _) = hc(&["generate", "--n", "0", "--out-edges", &e, "--out-coords", &c]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "n=0 m=0 avg_degree=0.000 R=undefined");
    let g = read_edge_list(fs::read(&e).unwrap().as_slice()).unwrap().graph;
    assert_eq!(g.n(), 0);
    let (code, out, _) = hc(&["solve", "--edges", &e]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "size"), "0");
}

#[test]
fn solve_matches_brute_force_and_writes_a_valid_cover() {
    let dir = TempDir::new().unwrap();
    let (e, c, cov, trace) = (path(&dir, "g.txt"), path(&dir, "g.coords"), path(&dir, "g.cover"), path(&dir, "t.csv"));
    hc(&["generate", "--n", "60", "--seed", "4", "--out-edges", &e, "--out-coords", &c]);
    let g = read_edge_list(fs::read(&e).unwrap().as_slice()).unwrap();
    let want = vc_brute_force(&g.graph).unwrap().size();
    for extra in [vec![], vec!["--coords", c.as_str()]] {
        let mut args = vec!["solve", "--edges", &e, "--out", &cov, "--trace", &trace];
        args.extend(extra);
        let (code, out, err) = hc(&args);
        assert_eq!(code, 0, "{err}");
        assert_eq!(field(&out, "size"), want.to_string());
        assert_eq!(field(&out, "optimal"), "true");
        let cover = read_cover(fs::read(&cov).unwrap().as_slice(), &g.labels).unwrap();
        assert_eq!(cover.len(), want);
        assert!(verify_cover(&g.graph, &cover));
        let trace = fs::read_to_string(&trace).unwrap();
        assert!(trace.starts_with("step,vertex,witness"));
        let forced: usize = field(&out, "kernel_forced").parse().unwrap();
        assert_eq!(trace.lines().count(), forced + 1);
    }
}

#[test]
fn covers_keep_original_labels() {
    let dir = TempDir::new().unwrap();
    let e = write(&dir, "star.txt", "% star\n100 7\n100 8\n100 9\n");
    let cov = path(&dir, "star.cover");
    let (code, out, _) = hc(&["solve", "--edges", &e, "--out", &cov]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "size"), "1");
    let text = fs::read_to_string(&cov).unwrap();
    assert_eq!(text.lines().nth(1), Some("100"));
}

#[test]
fn empty_edge_file() {
    let dir = TempDir::new().unwrap();
    let e = write(&dir, "empty.txt", "");
    let (code, out, _) = hc(&["solve", "--edges", &e]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "size"), "0");
    let (code, out, _) = hc(&["approx", "--edges", &e, "--k", "4"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "size"), "0");
}

#[test]
fn malformed_input_exits_one() {
    let dir = TempDir::new().unwrap();
    let e = write(&dir, "bad.txt", "1 2\n3 x\n");
    let (code, _, err) = hc(&["solve", "--edges", &e]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = hc(&["solve", "--edges", &path(&dir, "missing.txt")]);
    assert_eq!(code, 1);
}

#[test]
fn coordinates_that_disagree_with_edges_are_rejected() {
    let dir = TempDir::new().unwrap();
    let (e, c) = (path(&dir, "g.txt"), path(&dir, "g.coords"));
    hc(&["generate", "--n", "40", "--seed", "2", "--out-edges", &e, "--out-coords", &c]);
    let (_, c_other) = (path(&dir, "h.txt"), path(&dir, "h.coords"));
    hc(&["generate", "--n", "40", "--seed", "3", "--out-coords", &c_other]);
    let (code, _, err) = hc(&["decompose", "--edges", &e, "--coords", &c_other]);
    assert_eq!(code, 1, "{err}");
    let (code, _, _) = hc(&["decompose", "--edges", &e, "--coords", &c]);
    assert_eq!(code, 0);
}

#[test]
fn resource_limits_exit_two() {
    let dir = TempDir::new().unwrap();
    let e = write(&dir, "petersen.txt", &petersen_text());
    let (code, out, err) = hc(&["solve", "--edges", &e, "--width-cap", "1", "--budget", "1"]);
    assert_eq!(code, 2, "{out}{err}");
    assert!(out.contains("kernel_forced=0"));
    let (code, out, _) = hc(&["solve", "--edges", &e]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "size"), "6");
}

#[test]
fn approx_variants() {
    let dir = TempDir::new().unwrap();
    let c9: String = (0..9).map(|i| format!("{} {}\n", i, (i + 1) % 9)).collect();
    let e = write(&dir, "c9.txt", &c9);
    let (_, out, _) = hc(&["approx", "--edges", &e, "--k", "2"]);
    assert_eq!(field(&out, "size"), "5");
    let (_, out, _) = hc(&["approx", "--edges", &e, "--k", "0"]);
    let greedy = hypcover_core::approx::greedy_vc(&read_edge_list(c9.as_bytes()).unwrap().graph);
    assert_eq!(field(&out, "size"), greedy.size().to_string());
}

#[test]
fn analyze_modes() {
    let dir = TempDir::new().unwrap();
    let (e, c) = (path(&dir, "net.txt"), path(&dir, "net.coords"));
    hc(&["generate", "--n", "500", "--seed", "9", "--out-edges", &e, "--out-coords", &c]);

    let (code, out, err) = hc(&["analyze", "--edges", &e, "--mode", "table1"]);
    assert_eq!(code, 0, "{err}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "network,easy,dom,tw,greedy,two_ad,four_ad,comp");
    let cells: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cells.len(), 8);
    assert_eq!(cells[0], "net");
    assert_eq!(cells[1], "true");

    let (code, out, _) = hc(&["analyze", "--edges", &e, "--coords", &c, "--mode", "dominance"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert_eq!(out.lines().nth(1).unwrap().split(',').count(), 7);

    let (code, _, _) = hc(&["analyze", "--edges", &e, "--mode", "width"]);
    assert_eq!(code, 1);
    let (code, out, _) = hc(&["analyze", "--edges", &e, "--coords", &c, "--mode", "width", "--d", "8,16"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);

    let (code, _, _) = hc(&["analyze", "--edges", &e, "--mode", "nonsense"]);
    assert_eq!(code, 1);
}

#[test]
fn sweeps_write_csv() {
    let dir = TempDir::new().unwrap();
    let (a, b, summary) = (path(&dir, "a.csv"), path(&dir, "b.csv"), path(&dir, "s.csv"));
    for (out, threads) in [(&a, "1"), (&b, "2")] {
        let (code, _, err) = hc(&[
            "sweep", "width", "--n", "300,600", "--seeds", "2", "--d", "8", "--threads", threads, "--out", out,
            "--summary", &summary,
        ]);
        assert_eq!(code, 0, "{err}");
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(fs::read_to_string(&a).unwrap().lines().count(), 1 + 2 * 2 * 2);
    assert_eq!(fs::read_to_string(&summary).unwrap().lines().count(), 1 + 2 * 2);

    let (code, out, _) = hc(&["sweep", "dominance", "--n", "400", "--seeds", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    let (code, out, _) = hc(&["sweep", "table1", "--n", "300", "--seeds", "1", "--seed", "5"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().starts_with("hrg-n300-s5,"));
}

#[test]
fn decompose_writes_pace() {
    let dir = TempDir::new().unwrap();
    let e = write(&dir, "p.txt", &petersen_text());
    let td = path(&dir, "p.td");
    let (code, out, _) = hc(&["decompose", "--edges", &e, "--out", &td]);
    assert_eq!(code, 0);
    let width: usize = field(&out, "width").parse().unwrap();
    let text = fs::read_to_string(Path::new(&td)).unwrap();
    let header: Vec<&str> = text.lines().next().unwrap().split(' ').collect();
    assert_eq!(header[0..2], ["s", "td"]);
    assert_eq!(header[3], (width + 1).to_string());
    assert_eq!(header[4], "10");
}
