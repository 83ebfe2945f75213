use std::process::Command;

fn nakphi(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nakphi"))
        .args(args)
        .env_remove("NAKPHI_WORKERS")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn info_reports_presentation() {
    let (code, out, _) = nakphi(&["info", "--kupisch", "3,5,4,5,4"]);
    assert_eq!(code, 0);
    for line in [
        "N: 5",
        "relations: 1:3;3:4",
        "r: 2",
        "S: 3,1",
        "S': 4,2",
        "Δ1 = [S2;S3] (2:2)",
        "Δ2 = [S4;S5;S1] (4:3)",
        "delta kupisch: 2,2",
    ] {
        assert!(out.contains(line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn phi_all_text() {
    let (code, out, _) = nakphi(&["phi", "--kupisch", "3,5,4,5,4", "--all"]);
    assert_eq!(code, 0);
    assert!(out.contains("phi_dim: 2"));
    assert!(out.contains("alpha_trace: 16,5,2"));
    assert!(out.contains("2:2 -> 4:3, 4:3 -> 2:2"));
}

#[test]
fn phi_module_list_json() {
    let (code, out, _) = nakphi(&[
        "phi",
        "--kupisch",
        "3,5,4,5,4",
        "--module",
        "1:2,3:1",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["alpha_trace", "omega_per", "phi", "rho"]);
    assert_eq!(v["rho"]["3:1"], 1);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = nakphi(&[
        "verify",
        "--relations",
        "1:11;4:11;5:12;7:12",
        "--vertices",
        "8",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("phi_dim 6"));
    let (code, _, err) = nakphi(&["verify", "--relations", "1:11"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = nakphi(&[
        "verify",
        "--kupisch",
        "3,5,4,5,4",
        "--relations",
        "1:3;3:4",
        "--vertices",
        "5",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn census_writes_csv_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let (code, out, _) = nakphi(&[
        "census",
        "--vertices",
        "4",
        "--max-proj-len",
        "9",
        "--out",
        a.to_str().unwrap(),
        "--workers",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("all checks passed: true"));
    let status = Command::new(env!("CARGO_BIN_EXE_nakphi"))
        .args([
            "census",
            "--vertices",
            "4",
            "--max-proj-len",
            "9",
            "--out",
            b.to_str().unwrap(),
        ])
        .env("NAKPHI_WORKERS", "2")
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        [
            "kupisch",
            "N",
            "r",
            "self_injective",
            "gldim",
            "findim",
            "phi_dim",
            "gustafson_d",
            "delta_in_omega_per",
            "checks_passed"
        ]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert!(rows.iter().all(|r| &r[9] == "true"));
    assert!(rows.iter().any(|r| &r[4] == "inf"));
    assert!(text.contains("\"2,2,2,2\","));
}

#[test]
fn census_range_to_stdout() {
    let (code, out, err) = nakphi(&["census", "--vertices", "3..4", "--max-proj-len", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("kupisch,N,"));
    assert!(err.contains("algebras"));
    let (code, _, _) = nakphi(&["census", "--vertices", "2", "--max-proj-len", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_worker_env_is_an_input_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_nakphi"))
        .args(["census", "--vertices", "3", "--max-proj-len", "3"])
        .env("NAKPHI_WORKERS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
