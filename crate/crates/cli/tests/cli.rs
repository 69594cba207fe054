use std::process::{Command, Output};

fn pnw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pnw"))
        .args(args)
        .arg("--quiet")
        .output()
        .expect("run pnw")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Rows of a CSV with a header, as integers or floats.
fn csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn test_exit_codes() {
    assert_eq!(pnw(&["test", "110100"]).status.code(), Some(0));
    let out = pnw(&["test", "1011"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness"));
    assert_eq!(pnw(&["test", "10a1"]).status.code(), Some(2));
    assert_eq!(pnw(&["test"]).status.code(), Some(2));
    assert_eq!(
        pnw(&["test", "110", "--method", "bogus"]).status.code(),
        Some(2)
    );
    for method in ["naive", "vseq", "doubling", "member", "gaps", "pnf-eq"] {
        assert_eq!(
            pnw(&["test", "110101", "--method", method]).status.code(),
            Some(0)
        );
        assert_eq!(
            pnw(&["test", "110111", "--method", method]).status.code(),
            Some(1)
        );
    }
}

#[test]
fn test_reads_word_files() {
    let dir = std::env::temp_dir().join(format!("pnw-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("words.txt");
    std::fs::write(&path, "110100\n\n111000\n").unwrap();
    let out = pnw(&["test", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 2);
    std::fs::write(&path, "110100\n0001\n").unwrap();
    assert_eq!(
        pnw(&["test", "--file", path.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn query_answers() {
    let w = "10100110110001110010";
    assert_eq!(
        stdout(&pnw(&["query", w, "--ones", "5", "--zeros", "6"])),
        "yes (5,7)\n"
    );
    assert_eq!(
        stdout(&pnw(&["query", w, "--ones", "8", "--zeros", "3"])),
        "no (5,7)\n"
    );
    assert_eq!(
        pnw(&["query", w, "--ones", "15", "--zeros", "6"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enum_csv_is_consistent() {
    let (header, rows) = csv(&stdout(&pnw(&["enum", "--max-n", "12", "--density"])));
    assert_eq!(header[..3], ["n", "pnw", "pnw_d0"]);
    assert_eq!(header.len(), 2 + 13);
    for row in &rows {
        let total: f64 = row[2..].iter().sum();
        assert_eq!(total, row[1]);
    }
    assert_eq!(rows[5][1], 23.0);
    let (header, rows) = csv(&stdout(&pnw(&["enum", "--max-n", "5"])));
    assert_eq!(header, ["n", "pnw"]);
    assert_eq!(rows.len(), 5);
}

#[test]
fn crit_csv_satisfies_recurrence() {
    let (header, rows) = csv(&stdout(&pnw(&["crit", "--max-n", "12"])));
    assert_eq!(header, ["n", "pnw", "crit", "ratio", "scaled_ratio"]);
    for pair in rows.windows(2) {
        assert_eq!(pair[1][1], 2.0 * pair[0][1] - pair[0][2]);
    }
    for row in &rows {
        assert!((row[3] - row[2] / row[1]).abs() <= 0.0005);
    }
}

#[test]
fn ratios_csv() {
    let text = stdout(&pnw(&["ratios", "--min-n", "10", "--max-n", "12"]));
    assert_eq!(
        text,
        "n,M_trivial,ratio_trivial,M_both,ratio_both\n\
         10,256,2.500,222,2.168\n11,472,2.535,405,2.175\n12,874,2.561,731,2.142\n"
    );
}

#[test]
fn ext_counts() {
    assert_eq!(stdout(&pnw(&["ext", "1010", "--m", "4"])), "8\n");
    // Equals pnw(5, 4).
    assert_eq!(
        stdout(&pnw(&["ext", "10", "--m", "6", "--density", "4"])),
        "3\n"
    );
    assert_eq!(
        stdout(&pnw(&["ext", "1", "--distinct-from", "11"])),
        "distinct: 011\n"
    );
    assert_eq!(pnw(&["ext", "1", "--m", "40"]).status.code(), Some(2));
}

#[test]
fn games() {
    let out = stdout(&pnw(&["game", "solve", "--n", "5"]));
    assert!(out.starts_with("winner: Alice\nfirst winning move: position"));
    assert!(stdout(&pnw(&["game", "solve", "--n", "7"])).starts_with("winner: Bob\n"));
    assert!(stdout(&pnw(&["game", "solve", "--from", "10_0_"])).starts_with("winner: Alice\n"));
    assert_eq!(
        stdout(&pnw(&["game", "blocks", "--n", "8", "--k", "1", "--count"])),
        "outcomes: 4 (binomial formula: 4)\n"
    );
    assert!(stdout(&pnw(&[
        "game", "blocks", "--n", "10", "--k", "1", "--verify"
    ]))
    .ends_with("lemma holds: true\n"));
    assert_eq!(
        pnw(&["game", "blocks", "--n", "7", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budgets_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_pnw"))
        .args(["enum", "--max-n", "12"])
        .env("PNW_MAX_ENUM_N", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert_eq!(
        pnw(&["game", "solve", "--n", "9", "--max-game-n", "8"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bounds_csv() {
    let (header, rows) =
        csv(&stdout(&pnw(&["bounds", "--max-n", "14", "--with-counts"])).replace("true", "1"));
    assert_eq!(header.last().unwrap(), "upper_holds");
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r[7] == 1.0 && r[6] <= r[2] + 0.0005));
}

#[test]
fn output_is_reproducible() {
    for args in [
        &[
            "agree",
            "--length",
            "200",
            "--samples",
            "300",
            "--seed",
            "5",
        ][..],
        &["crit", "--max-n", "16", "--threads", "1"][..],
    ] {
        let a = pnw(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, pnw(args).stdout);
    }
    let single = pnw(&["enum", "--max-n", "16", "--threads", "1"]).stdout;
    assert_eq!(single, pnw(&["enum", "--max-n", "16"]).stdout);
}
