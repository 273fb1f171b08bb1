use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_apriori-bench"));
    cmd.env_remove("MINE_THREADS");
    cmd
}

fn example() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/example.fimi")
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn lines(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

#[test]
fn mine_example_csv() {
    let out = run(bin()
        .args([
            "mine",
            "--min-sup",
            "2",
            "--algo",
            "prefix",
            "--out-format",
            "csv",
            "--input",
        ])
        .arg(example()));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let l3: Vec<&str> = text.lines().filter(|l| l.starts_with("3,")).collect();
    assert_eq!(l3, vec!["3,A;B;C,2", "3,A;B;E,2"]);
    assert!(!text.lines().any(|l| l.starts_with("4,")));
}

#[test]
fn every_algorithm_prints_the_same_itemsets() {
    let outputs: Vec<String> = ["classical", "prefix", "oracle"]
        .iter()
        .map(|algo| {
            let out = run(bin()
                .args([
                    "mine",
                    "--min-sup",
                    "2",
                    "--out-format",
                    "csv",
                    "--algo",
                    algo,
                    "--input",
                ])
                .arg(example()));
            assert!(out.status.success());
            stdout(&out)
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn percent_threshold_rounds_up() {
    let out = run(bin()
        .args(["mine", "--min-sup", "2%", "--input"])
        .arg(example()));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"absolute\": 1"), "{text}");
    // Threshold 1 keeps the single-occurrence itemset ACE.
    let csv = stdout(&run(bin()
        .args(["mine", "--min-sup", "2%", "--out-format", "csv", "--input"])
        .arg(example())));
    assert!(csv.lines().any(|l| l == "3,A;C;E,1"));
}

#[test]
fn json_metrics_only_on_request() {
    let plain = stdout(&run(bin()
        .args(["mine", "--min-sup", "2", "--input"])
        .arg(example())));
    assert!(!plain.contains("join_item_comparisons"));
    let with = stdout(&run(bin()
        .args(["mine", "--min-sup", "2", "--metrics", "--input"])
        .arg(example())));
    assert!(with.contains("join_item_comparisons"));
}

#[test]
fn csv_metrics_go_to_stderr() {
    let out = run(bin()
        .args([
            "mine",
            "--min-sup",
            "2",
            "--metrics",
            "--out-format",
            "csv",
            "--input",
        ])
        .arg(example()));
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("k,join_item_comparisons"));
    assert_eq!(err.lines().count(), 1 + 4);
}

#[test]
fn mine_usage_and_io_errors() {
    let bad_sup = run(bin()
        .args(["mine", "--min-sup", "abc", "--input"])
        .arg(example()));
    assert_eq!(bad_sup.status.code(), Some(2));
    let zero_k = run(bin()
        .args(["mine", "--min-sup", "2", "--max-k", "0", "--input"])
        .arg(example()));
    assert_eq!(zero_k.status.code(), Some(2));
    let missing = run(bin().args(["mine", "--min-sup", "2", "--input", "/nonexistent/x.fimi"]));
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn oracle_refuses_large_universe() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wide.fimi");
    let row: Vec<String> = (0..25).map(|i| format!("x{i}")).collect();
    fs::write(&path, row.join(" ") + "\n").unwrap();
    let out = run(bin()
        .args(["mine", "--min-sup", "1", "--algo", "oracle", "--input"])
        .arg(&path));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("25"), "{err}");
}

#[test]
fn bench_support_rows_and_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("support.csv");
    let out = run(bin()
        .args([
            "bench-support",
            "--sup-list",
            "6,5,4,3,2,1",
            "--repeats",
            "1",
            "--input",
        ])
        .arg(example())
        .arg("--out")
        .arg(&path));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows = lines(&path);
    assert_eq!(
        rows[0],
        "varied_param,classical_ms,improved_ms,improvement_pct,classical_join_cmp,prefix_join_cmp,classical_prune_lookups,prefix_prune_lookups"
    );
    assert_eq!(rows.len(), 7);
    let params: Vec<&str> = rows[1..]
        .iter()
        .map(|r| r.split(',').next().unwrap())
        .collect();
    assert_eq!(params, ["6", "5", "4", "3", "2", "1"]);
}

#[test]
fn bench_row_pct_matches_times() {
    let text = stdout(&run(bin().args([
        "bench-support",
        "--sup-list",
        "2%",
        "--repeats",
        "1",
        "--synthetic",
        "n=2000,items=30,mean=6,dist=zipf:1.0,seed=3",
    ])));
    let row: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .skip(1)
        .take(3)
        .map(|f| f.parse().unwrap())
        .collect();
    let recomputed = if row[0] > 0.0 {
        (row[0] - row[1]) / row[0] * 100.0
    } else {
        0.0
    };
    assert!((recomputed - row[2]).abs() <= 0.01, "{row:?}");
}

#[test]
fn repeats_change_times_not_itemsets() {
    let counters = |repeats: &str| -> Vec<String> {
        let text = stdout(&run(bin()
            .args([
                "bench-support",
                "--sup-list",
                "3,2",
                "--repeats",
                repeats,
                "--input",
            ])
            .arg(example())));
        text.lines()
            .skip(1)
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                [f[0], f[4], f[5], f[6], f[7]].join(",")
            })
            .collect()
    };
    assert_eq!(counters("1"), counters("5"));
}

#[test]
fn bench_size_bounds() {
    let too_big = run(bin()
        .args([
            "bench-size",
            "--sizes",
            "5,10",
            "--min-sup-pct",
            "20",
            "--input",
        ])
        .arg(example()));
    assert_eq!(too_big.status.code(), Some(2));

    let whole = run(bin()
        .args([
            "bench-size",
            "--sizes",
            "9",
            "--min-sup-pct",
            "20",
            "--repeats",
            "1",
            "--input",
        ])
        .arg(example()));
    assert!(whole.status.success());
    let text = stdout(&whole);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("9,"));
    // ceil(0.2 * 9) = 2: joins over L1, L2 and L3 of the example cost 10 + 21 + 3.
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[4], "34");
}

#[test]
fn bench_size_on_synthetic() {
    let text = stdout(&run(bin().args([
        "bench-size",
        "--sizes",
        "100,200,300",
        "--min-sup-pct",
        "5",
        "--repeats",
        "1",
        "--synthetic",
        "n=300,items=20,mean=4,dist=uniform,seed=1",
    ])));
    let params: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(params, ["100", "200", "300"]);
}

#[test]
fn input_and_synthetic_conflict() {
    let out = run(bin()
        .args([
            "bench-support",
            "--sup-list",
            "2",
            "--synthetic",
            "n=10,items=3,mean=1,dist=uniform,seed=0",
            "--input",
        ])
        .arg(example()));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.fimi"), dir.path().join("b.fimi"));
    for path in [&a, &b] {
        let out = run(bin()
            .args([
                "gen",
                "--n",
                "5",
                "--items",
                "3",
                "--mean-len",
                "2",
                "--seed",
                "7",
                "--out",
            ])
            .arg(path));
        assert!(out.status.success());
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    assert_eq!(lines(&a).len(), 5);
}

#[test]
fn gen_empty_and_invalid() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.fimi");
    let out = run(bin()
        .args([
            "gen",
            "--n",
            "0",
            "--items",
            "3",
            "--mean-len",
            "2",
            "--out",
        ])
        .arg(&empty));
    assert!(out.status.success());
    assert!(fs::read(&empty).unwrap().is_empty());

    let out = run(bin().args(["gen", "--n", "5", "--items", "5", "--mean-len", "10"]));
    assert_eq!(out.status.code(), Some(2));
    let out = run(bin().args([
        "gen",
        "--n",
        "5",
        "--items",
        "5",
        "--mean-len",
        "2",
        "--dist",
        "pareto",
    ]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_output_feeds_mine() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.fimi");
    let out = run(bin()
        .args([
            "gen",
            "--n",
            "200",
            "--items",
            "12",
            "--mean-len",
            "4",
            "--dist",
            "zipf:1.2",
            "--seed",
            "9",
            "--out",
        ])
        .arg(&path));
    assert!(out.status.success());
    let mine = |algo: &str| {
        stdout(&run(bin()
            .args([
                "mine",
                "--min-sup",
                "5%",
                "--out-format",
                "csv",
                "--algo",
                algo,
                "--input",
            ])
            .arg(&path)))
    };
    assert_eq!(mine("prefix"), mine("oracle"));
}

#[test]
fn threads_env_is_validated() {
    let out = run(bin()
        .env("MINE_THREADS", "0")
        .args(["mine", "--min-sup", "2", "--input"])
        .arg(example()));
    assert_eq!(out.status.code(), Some(2));
    let serial = stdout(&run(bin()
        .args(["mine", "--min-sup", "2", "--out-format", "csv", "--input"])
        .arg(example())));
    let threaded = stdout(&run(bin()
        .env("MINE_THREADS", "4")
        .args(["mine", "--min-sup", "2", "--out-format", "csv", "--input"])
        .arg(example())));
    assert_eq!(serial, threaded);
}
