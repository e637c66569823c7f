use std::io::Write;
use std::process::{Command, Output, Stdio};

use qdb::constructions::{cycle, QuasiFamily};
use qdb::to_graph6;

fn qdb(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qdb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn construct(args: &[&str]) -> String {
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    let o = qdb(&full, "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    stdout(&o).lines().next().unwrap().to_string()
}

#[test]
fn classify_examples() {
    let g5 = construct(&["g5"]);
    let o = qdb(&["classify", "--n", "1"], &g5);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict=quasi lambda=8/7"), "{}", stdout(&o));

    let c4 = to_graph6(&cycle(4).unwrap()).unwrap();
    assert!(stdout(&qdb(&["classify", "--n", "2"], &c4)).contains("verdict=balanced"));
    assert!(stdout(&qdb(&["classify", "--n", "5"], &c4)).contains("verdict=no-pairs"));
}

#[test]
fn classify_reports_bad_lines_and_continues() {
    let o = qdb(&["classify"], "Bw\nA!\nA?\nCF\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("# line 3 A?") && out.contains("disconnected"));
    assert!(out.contains("# line 4 CF\nn=1 verdict=quasi lambda=3/1"));
}

#[test]
fn classify_disconnected_only_is_not_an_input_error() {
    let o = qdb(&["classify"], "A?\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("disconnected"));
}

#[test]
fn classify_edge_list() {
    let o = qdb(&["classify", "--n", "1"], "4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict=balanced"));
    let o = qdb(&["classify", "--format", "edgelist"], "3\n0 5\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn classify_unreadable_file() {
    let o = qdb(&["classify", "/nonexistent/graphs.g6"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn wsets_examples() {
    let o = qdb(&["wsets", "--graph", "Bg", "0", "1"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("Wu={0} Wv={1,2} eq={}\n"), "{}", stdout(&o));

    let c5 = to_graph6(&cycle(5).unwrap()).unwrap();
    assert!(stdout(&qdb(&["wsets", "0", "1"], &c5)).contains("eq={3}"));

    let fam = QuasiFamily::Fig8 { n: 5, d: 8, m: 4 };
    let l = fam.build().unwrap();
    let (x, y) = (l.cliques[0][0], *l.cliques[2].last().unwrap());
    let g6 = to_graph6(&l.graph).unwrap();
    let (xs, ys) = (x.to_string(), y.to_string());
    let out = stdout(&qdb(&["wsets", "--graph", &g6, &xs, &ys], ""));
    assert!(out.contains("|Wu|=5 |Wv|=4") && out.contains("dist=3"), "{out}");
}

#[test]
fn wsets_errors() {
    assert_eq!(qdb(&["wsets", "--graph", "Bg", "0", "0"], "").status.code(), Some(2));
    assert_eq!(qdb(&["wsets", "--graph", "Bg", "0", "9"], "").status.code(), Some(2));
}

#[test]
fn construct_examples_reparse() {
    for (args, order) in [
        (vec!["g1", "--m", "3", "--n", "2"], 8),
        (vec!["hgraph", "--m", "3", "--core", "k4-incidence", "--k", "2"], 15),
        (vec!["pendants", "--q", "4", "--roots", "2"], 6),
    ] {
        let o = qdb(&[&["construct"], &args[..]].concat(), "");
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let mut lines = out.lines();
        let g6 = lines.next().unwrap();
        assert!(lines.next().unwrap().starts_with("# blocks"));
        assert_eq!(qdb::parse_graph6(g6).unwrap().order(), order);
        assert_eq!(qdb(&["classify"], &out).status.code(), Some(0));
    }
}

#[test]
fn construct_errors() {
    let o = qdb(&["construct", "petersen"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = qdb(&["construct", "fig9", "--n", "6", "--m", "4"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("m >= 5"), "{}", stderr(&o));
    let o = qdb(&["construct", "hgraph", "--m", "4", "--core", "c6", "--k", "1"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("size constraint"));
}

#[test]
fn verify_exit_codes() {
    for args in [
        ["verify", "bipartite-theorem", "--max-n", "7"],
        ["verify", "corona", "--max-n", "4"],
        ["verify", "pendant-proposition", "--max-n", "7"],
    ] {
        let o = qdb(&args, "");
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert!(!stdout(&o).contains("\tcounterexample\t"));
    }
    let o = qdb(&["verify", "edge-removal", "--max-n", "7"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("edge-removal\tF?]u_\tcounterexample"));
    assert_eq!(qdb(&["verify", "no-such-check"], "").status.code(), Some(2));
    assert_eq!(qdb(&["verify", "bipartite-theorem", "--max-n", "11"], "").status.code(), Some(2));
    assert_eq!(qdb(&["verify", "corona", "--max-n", "9"], "").status.code(), Some(2));
}

#[test]
fn verify_respects_env_ceiling() {
    let o = Command::new(env!("CARGO_BIN_EXE_qdb"))
        .args(["verify", "bipartite-theorem", "--max-n", "6"])
        .env("QDB_MAX_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("envelope of 5"));
}

#[test]
fn verify_ingest_and_output_file() {
    let dir = std::env::temp_dir().join(format!("qdb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let list = dir.join("in.g6");
    std::fs::write(&list, "# star and path\nCF\nCh\nBw\n").unwrap();
    let out = dir.join("findings.tsv");
    let o = qdb(
        &[
            "verify",
            "bipartite-theorem",
            "--max-n",
            "4",
            "--ingest",
            list.to_str().unwrap(),
            "--output",
            out.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text, "bipartite-theorem\tCF\tconfirmed\tn=1 verdict=quasi lambda=3/1; bipartite=yes\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn search_is_data_and_independent_of_jobs() {
    let one = qdb(&["search", "conjecture", "--max-n", "7", "--jobs", "1"], "");
    let four = qdb(&["search", "conjecture", "--max-n", "7", "--jobs", "4"], "");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert!(stdout(&one).contains("\tcounterexample\t"));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn formats_lists_inputs() {
    let o = qdb(&["formats"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("graph6") && stdout(&o).contains("edgelist"));
}
