use std::io::Write;
use std::process::{Command, Output};

fn bek(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bek")).args(args).output().unwrap()
}

fn bek_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bek")).args(args).env(key, value).output().unwrap()
}

fn file(suffix: &str, contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const L33: &str = "6\n1 2\n1 3\n2 3\n3 4\n4 5\n5 6\n";

#[test]
fn classify_complete_bipartite() {
    let f = file(".txt", "5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    let o = bek(&["classify", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pure"]["verdict"], "CompleteBipartite");
    assert_eq!(v["linear"], false);
    assert_eq!(v["closed"], false);
}

#[test]
fn classify_reads_json_and_graph6() {
    let f = file(".json", r#"{"n":5,"edges":[[1,2],[2,3],[3,4],[4,5],[5,1]]}"#);
    let v: serde_json::Value = serde_json::from_str(&stdout(&bek(&["classify", f.path().to_str().unwrap()]))).unwrap();
    assert_eq!(v["pure"]["hint"], "induced C_m, m≥5");

    let g = file(".g6", "C~\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&bek(&["classify", g.path().to_str().unwrap()]))).unwrap();
    assert_eq!(v["pure"]["verdict"], "Complete");
    assert_eq!(v["linear"], true);
}

#[test]
fn classify_rejects_isolated_vertices() {
    let f = file(".json", r#"{"n":3,"edges":[[1,2]]}"#);
    let o = bek(&["classify", f.path().to_str().unwrap()]);
    assert!(!o.status.success());
}

#[test]
fn formula_table_of_lollipop() {
    let f = file(".txt", L33);
    let o = bek(&["betti", f.path().to_str().unwrap(), "--method", "formula"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let json_line = out.lines().find(|l| l.starts_with('{')).unwrap();
    let v: serde_json::Value = serde_json::from_str(json_line).unwrap();
    assert_eq!((v["pd"].as_u64(), v["reg"].as_u64()), (Some(5), Some(4)));
    assert!(out.starts_with("        0  1  2  3  4  5\n"));
}

#[test]
fn diagram_and_json_hold_the_same_entries() {
    let f = file(".txt", L33);
    let out = stdout(&bek(&["betti", f.path().to_str().unwrap(), "--method", "oracle"]));
    let mut from_diagram = Vec::new();
    for line in out.lines().skip(2).take_while(|l| !l.is_empty()) {
        let (row, cells) = line.split_once(':').unwrap();
        let r: usize = row.trim().parse().unwrap();
        for (i, cell) in cells.split_whitespace().enumerate() {
            if cell != "." {
                from_diagram.push((i as u64, (i + r) as u64, cell.parse::<u64>().unwrap()));
            }
        }
    }
    let json_line = out.lines().find(|l| l.starts_with('{')).unwrap();
    let v: serde_json::Value = serde_json::from_str(json_line).unwrap();
    let mut from_json: Vec<(u64, u64, u64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["count"].as_u64().unwrap()))
        .collect();
    from_diagram.sort();
    from_json.sort();
    assert_eq!(from_diagram, from_json);
    assert!(out.contains("Cohen-Macaulay"));
}

#[test]
fn formula_and_oracle_refusals() {
    let k23 = file(".txt", "5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    let o = bek(&["betti", k23.path().to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("no closed-form available"));
    let o = bek(&["betti", k23.path().to_str().unwrap(), "--method", "oracle"]);
    assert!(!o.status.success());
}

#[test]
fn subset_cap_from_environment() {
    let f = file(".txt", L33);
    let o = bek_env(&["betti", f.path().to_str().unwrap(), "--method", "oracle"], "BEK_SUBSET_CAP", "8");
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn strand_reports_oracle_rows() {
    let f = file(".txt", L33);
    let o = bek(&["strand", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("status: TheoremBacked"));
    assert!(out.contains("beta_{1,3} = 2"));
    assert!(out.contains("  1: 2 2 2"));
}

#[test]
fn switch_and_reduce() {
    let f = file(".txt", L33);
    let o = bek(&["switch", f.path().to_str().unwrap(), "--remove", "4,5", "--add", "2,5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "6\n1 2\n1 3\n2 3\n2 5\n3 4\n5 6\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("k_3=1"));

    let bad = bek(&["switch", f.path().to_str().unwrap(), "--remove", "1,2", "--add", "1,4"]);
    assert!(!bad.status.success());

    let o = bek(&["reduce", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "free cut edges: {3,4} {4,5} {5,6}\nreduced graph:\n6\n1 2\n1 3\n2 3\n");
}

#[test]
fn verify_suites_exit_cleanly() {
    let o = bek(&["verify", "closed-strand", "--max-n", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 mismatches"));
    let o = bek(&["verify", "lollipop", "--max-m", "3", "--max-t", "2"]);
    assert!(o.status.success());
    let o = bek(&["verify", "closed-strand", "--max-n", "9"]);
    assert!(!o.status.success());
}
