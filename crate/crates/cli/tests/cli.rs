use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ke_square(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ke-square"))
        .args(args)
        .env_remove("KE_SQUARE_JOBS")
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

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn classify_p4_structured() {
    let o = ke_square(&["classify", "--output", "structured"], "Ch\n");
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    assert_eq!(r["ke_square"], true);
    assert_eq!(r["square_stable"], true);
    assert_eq!(r["very_well_covered"], true);
    assert_eq!(r["leaf_count"], 2);
    assert_eq!(r["pendant_pm"]["edges"], serde_json::json!([[0, 1], [2, 3]]));
    assert_eq!(r["equivalence_consistent"], true);
}

#[test]
fn structured_output_ignores_flag_order() {
    let a = ke_square(&["--output", "structured", "classify", "-"], "Ch\nC~\n");
    let b = ke_square(&["classify", "-", "--output", "structured", "--format", "graph6"], "Ch\nC~\n");
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(json_lines(&a).len(), 2);
}

#[test]
fn square_of_p4() {
    let o = ke_square(&["square"], "Ch\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Cz\n");
    let back = ke_square(&["square", "--format", "edgelist"], "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(stdout(&back), "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
}

#[test]
fn square_output_feeds_classify() {
    for format in ["graph6", "edgelist"] {
        let input = if format == "graph6" { "Ch\nDqS\n".to_string() } else { "5 5\n0 1\n0 2\n1 3\n1 4\n3 4\n".to_string() };
        let sq = ke_square(&["square", "--format", format], &input);
        let o = ke_square(&["classify", "--format", format, "--output", "structured"], &stdout(&sq));
        assert_eq!(o.status.code(), Some(0), "{format}");
    }
}

#[test]
fn invariants_of_c5() {
    let o = ke_square(&["invariants", "--output", "structured"], "Dhc\n");
    let b = &json_lines(&o)[0];
    let values: Vec<u64> = ["alpha_g2", "theta_g2", "gamma", "i_dom", "alpha", "theta"]
        .iter()
        .map(|k| b[*k].as_u64().unwrap())
        .collect();
    assert_eq!(values, [1, 1, 2, 2, 2, 3]);
}

#[test]
fn parse_errors_exit_2_with_location() {
    let o = ke_square(&["classify"], "Ch\nC~x\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("offset 2"), "{err}");

    let o = ke_square(&["classify", "--format", "edgelist"], "3 1\n0 7\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));
}

#[test]
fn verify_connected_to_six_counts_every_graph() {
    let o = ke_square(
        &["verify", "--corpus", "exhaustive-connected", "--n-max", "6", "--output", "structured"],
        "",
    );
    let reports = json_lines(&o);
    assert_eq!(reports.len(), 7);
    for r in &reports {
        assert_eq!(r["graphs_tested"], 1 + 4 + 38 + 728 + 26704);
    }
    // Only the four-way check fails, and only on K2.
    let failing: Vec<_> = reports.iter().filter(|r| r["violation_count"] != 0).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["check_name"], "theorem_main");
    assert_eq!(failing[0]["violations"][0]["graph6"], "A_");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_selected_checks_pass() {
    let o = ke_square(
        &["verify", "--n-max", "6", "--checks", "lemma_square_stable,necessity,chain,graph6_roundtrip"],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(": ok,")).count(), 4);
}

#[test]
fn verify_graph6_file_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sample.g6");
    std::fs::write(&path, ">>graph6<<Ch\n# comment\n\nCl\nEhEG\n").unwrap();
    let o = ke_square(
        &["verify", "--corpus", "graph6-file", "--checks", "necessity", "--output", "structured", path.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    assert_eq!(r["graphs_tested"], 3);
    assert!(r["non_converse_witnesses"].as_u64().unwrap() >= 1);

    std::fs::write(&path, "Ch\nC~~\n").unwrap();
    let o = ke_square(&["verify", "--corpus", "graph6-file", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains(":2:"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ke_square(&["verify", "--checks", "nope"], "").status.code(), Some(2));
    assert_eq!(ke_square(&["verify", "--n-max", "8"], "").status.code(), Some(2));
    assert_eq!(ke_square(&["verify", "--corpus", "graph6-file"], "").status.code(), Some(2));
}

#[test]
fn fixtures_are_listed() {
    let o = ke_square(&["fixtures", "--output", "structured"], "");
    let names: Vec<_> = json_lines(&o).iter().map(|r| r["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names, ["fig1", "fig3", "fig4"]);
    let human = stdout(&ke_square(&["fixtures"], ""));
    assert!(human.contains("DqS\n5 5\n"));
}

#[test]
fn jobs_flag_does_not_change_reports() {
    let run = |jobs: &str| {
        let o = ke_square(&["verify", "--n-max", "5", "--checks", "chain", "--jobs", jobs, "--output", "structured"], "");
        let mut r = json_lines(&o).remove(0);
        r.as_object_mut().unwrap().remove("elapsed_ms");
        r
    };
    assert_eq!(run("1"), run("3"));
}
