//! End-to-end tests driving the compiled binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const KEY: &str = "000102030405060708090a0b0c0d0e0f";
const OTHER_KEY: &str = "ffffffffffffffffffffffffffffffff";
const IV: &str = "f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aesimg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary launches")
}

fn run_ok(args: &[&str]) -> Output {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("no signal")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn p(path: &Path) -> String {
    path.display().to_string()
}

fn gen_image(dir: &Path, name: &str, w: u32, h: u32, seed: u64, pattern: &str) -> PathBuf {
    let path = dir.join(name);
    run_ok(&[
        "gen-test-image",
        "--width",
        &w.to_string(),
        "--height",
        &h.to_string(),
        "--seed",
        &seed.to_string(),
        "--pattern",
        pattern,
        "-o",
        &p(&path),
    ]);
    path
}

#[test]
fn generates_encrypts_and_decrypts_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 120, 75, 3, "flat-regions");
    let container = dir.path().join("in.aesi");
    let decrypted = dir.path().join("out.pgm");

    for mode in ["ctr", "ecb"] {
        for engine in ["unrolled", "fsm"] {
            run_ok(&[
                "encrypt",
                "-i",
                &p(&img),
                "-o",
                &p(&container),
                "--key",
                KEY,
                "--mode",
                mode,
                "--engine",
                engine,
            ]);
            run_ok(&[
                "decrypt",
                "-i",
                &p(&container),
                "-o",
                &p(&decrypted),
                "--key",
                KEY,
                "--engine",
                engine,
            ]);
            assert_eq!(
                fs::read(&img).unwrap(),
                fs::read(&decrypted).unwrap(),
                "{mode}/{engine} round trip must preserve every byte"
            );
            let side = dir.path().join("in.aesi.cipher.pgm");
            assert!(side.exists(), "cipher rendering is always written");
        }
    }
}

#[test]
fn fixed_iv_runs_are_deterministic_and_random_ivs_are_not() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 64, 64, 1, "noise");
    let a = dir.path().join("a.aesi");
    let b = dir.path().join("b.aesi");

    let fixed = |out: &Path| {
        run_ok(&[
            "encrypt",
            "-i",
            &p(&img),
            "-o",
            &p(out),
            "--key",
            KEY,
            "--mode",
            "ctr",
            "--iv",
            IV,
            "--allow-iv-reuse",
        ]);
    };
    fixed(&a);
    fixed(&b);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let fresh = |out: &Path| {
        run_ok(&[
            "encrypt",
            "-i",
            &p(&img),
            "-o",
            &p(out),
            "--key",
            KEY,
            "--mode",
            "ctr",
        ]);
    };
    fresh(&a);
    fresh(&b);
    assert_ne!(
        fs::read(&a).unwrap(),
        fs::read(&b).unwrap(),
        "fresh IVs must differ between runs"
    );
}

#[test]
fn key_file_is_equivalent_to_hex_key() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 32, 32, 9, "gradient");
    let key_file = dir.path().join("key.bin");
    fs::write(&key_file, hex::decode(KEY).unwrap()).unwrap();
    let a = dir.path().join("a.aesi");
    let b = dir.path().join("b.aesi");

    run_ok(&[
        "encrypt",
        "-i",
        &p(&img),
        "-o",
        &p(&a),
        "--key",
        KEY,
        "--mode",
        "ctr",
        "--iv",
        IV,
        "--allow-iv-reuse",
    ]);
    run_ok(&[
        "encrypt",
        "-i",
        &p(&img),
        "-o",
        &p(&b),
        "--key-file",
        &p(&key_file),
        "--mode",
        "ctr",
        "--iv",
        IV,
        "--allow-iv-reuse",
    ]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn json_mode_keeps_stdout_pure() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 64, 64, 2, "flat-regions");
    let container = dir.path().join("in.aesi");
    let decrypted = dir.path().join("out.pgm");

    let out = run_ok(&[
        "encrypt",
        "-i",
        &p(&img),
        "-o",
        &p(&container),
        "--key",
        KEY,
        "--mode",
        "ctr",
        "--iv",
        IV,
        "--allow-iv-reuse",
        "--json",
    ]);
    let doc = json_stdout(&out);
    assert_eq!(doc["mode"], "ctr");
    assert_eq!(doc["iv"], IV);
    assert_eq!(doc["width"], 64);
    assert!(!out.stderr.is_empty(), "human summary goes to stderr");

    let out = run_ok(&[
        "decrypt",
        "-i",
        &p(&container),
        "-o",
        &p(&decrypted),
        "--key",
        KEY,
        "--json",
    ]);
    assert_eq!(json_stdout(&out)["height"], 64);

    let out = run_ok(&[
        "gen-test-image",
        "--width",
        "32",
        "--height",
        "32",
        "--pattern",
        "noise",
        "-o",
        &p(&dir.path().join("n.pgm")),
        "--json",
    ]);
    assert_eq!(json_stdout(&out)["pattern"], "noise");
}

#[test]
fn analyze_reports_the_documented_schema_and_csv_files() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 256, 256, 4, "flat-regions");
    let container = dir.path().join("in.aesi");
    run_ok(&[
        "encrypt",
        "-i",
        &p(&img),
        "-o",
        &p(&container),
        "--key",
        KEY,
        "--mode",
        "ctr",
    ]);
    let cipher_img = dir.path().join("in.aesi.cipher.pgm");
    let out_dir = dir.path().join("csv");

    let out = run_ok(&[
        "analyze",
        "-i",
        &p(&img),
        "-c",
        &p(&cipher_img),
        "--out-dir",
        &p(&out_dir),
        "--json",
    ]);
    let doc = json_stdout(&out);

    for key in [
        "entropy",
        "correlation",
        "npcr",
        "uaci",
        "chi_square",
        "histogram_files",
    ] {
        assert!(doc.get(key).is_some(), "missing top-level key {key}");
    }
    assert!(doc["entropy"]["cipher"].as_f64().unwrap() > 7.9);
    for direction in ["horizontal", "vertical", "diagonal"] {
        let node = &doc["correlation"][direction];
        assert!(
            node["input"].as_f64().unwrap() > 0.9,
            "{direction} plaintext correlation"
        );
        assert!(node["cipher"].as_f64().unwrap().abs() < 0.05);
    }
    assert_eq!(doc["histogram_files"].as_array().unwrap().len(), 2);

    let hist = fs::read_to_string(out_dir.join("cipher_histogram.csv")).unwrap();
    assert!(hist.starts_with("level,count\n"));
    assert_eq!(
        hist.lines().count(),
        257,
        "header plus one row per gray level"
    );
    let scatter = fs::read_to_string(out_dir.join("cipher_scatter_horizontal.csv")).unwrap();
    assert!(scatter.starts_with("x,y\n"));
    assert_eq!(
        scatter.lines().count(),
        2001,
        "header plus one row per sampled pair"
    );
    for label in ["input", "cipher"] {
        for direction in ["horizontal", "vertical", "diagonal"] {
            assert!(out_dir
                .join(format!("{label}_scatter_{direction}.csv"))
                .exists());
        }
    }
}

#[test]
fn keysens_writes_all_artifacts_for_both_variants() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 64, 64, 5, "flat-regions");

    let ks = dir.path().join("ks");
    let out = run_ok(&[
        "keysens",
        "-i",
        &p(&img),
        "--key",
        KEY,
        "--flip-bit",
        "17",
        "--mode",
        "ctr",
        "--iv",
        IV,
        "--allow-iv-reuse",
        "--out-dir",
        &p(&ks),
        "--json",
    ]);
    let doc = json_stdout(&out);
    assert_eq!(doc["variant"], "key");
    assert_eq!(doc["flip_bit"], 17);
    assert!(doc["npcr"].as_f64().unwrap() > 90.0);
    assert_eq!(doc["wrong_key"]["outcome"], "decrypted");
    assert_eq!(doc["right_key_exact"], true);
    for name in [
        "original.pgm",
        "cipher_right.pgm",
        "cipher_flipped.pgm",
        "diff.pgm",
        "decrypt_wrong.pgm",
        "decrypt_right.pgm",
    ] {
        assert!(ks.join(name).exists(), "missing artifact {name}");
    }

    let pd = dir.path().join("pd");
    let out = run_ok(&[
        "keysens",
        "-i",
        &p(&img),
        "--key",
        KEY,
        "--flip-bit",
        "0",
        "--mode",
        "ctr",
        "--iv",
        IV,
        "--allow-iv-reuse",
        "--plaintext-diff",
        "--out-dir",
        &p(&pd),
        "--json",
    ]);
    let doc = json_stdout(&out);
    assert_eq!(doc["variant"], "plaintext");
    let npcr = doc["npcr"].as_f64().unwrap();
    assert!(
        npcr > 0.0 && npcr < 1.0,
        "a CTR plaintext flip touches one byte, got npcr {npcr}"
    );
    assert!(pd.join("diff.pgm").exists());
}

#[test]
fn ecb_keysens_reports_a_rejected_wrong_key() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 64, 64, 6, "noise");
    let ks = dir.path().join("ks");
    let out = run_ok(&[
        "keysens",
        "-i",
        &p(&img),
        "--key",
        KEY,
        "--flip-bit",
        "40",
        "--mode",
        "ecb",
        "--out-dir",
        &p(&ks),
        "--json",
    ]);
    let doc = json_stdout(&out);
    assert_eq!(doc["wrong_key"]["outcome"], "rejected");
    assert!(!ks.join("decrypt_wrong.pgm").exists());
    assert!(ks.join("decrypt_right.pgm").exists());
}

#[test]
fn bench_emits_measured_model_and_reference_sections() {
    let out = run_ok(&["bench", "--buffer-mib", "1", "--seconds", "0.05", "--json"]);
    let doc = json_stdout(&out);

    let measured = doc["measured"].as_array().unwrap();
    assert_eq!(measured.len(), 4, "engine x mode grid");
    for record in measured {
        assert!(record["throughput_gbps"].as_f64().unwrap() > 0.0);
    }
    let model = doc["model"].as_array().unwrap();
    assert_eq!(model.len(), 2);
    assert!((model[0]["throughput_gbps"].as_f64().unwrap() - 3.3888).abs() < 1e-9);
    assert_eq!(model[0]["latency_inferred"], true);
    let reference = doc["reference"].as_array().unwrap();
    assert_eq!(reference.len(), 6);
    assert_eq!(reference[1]["throughput_gbps"].as_f64().unwrap(), 3.39);
    assert!(doc["parallel_ctr"].is_null());
}

#[test]
fn exit_codes_separate_the_failure_classes() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 64, 64, 7, "noise");
    let other = gen_image(dir.path(), "other.pgm", 32, 64, 7, "noise");
    let container = dir.path().join("in.aesi");
    run_ok(&[
        "encrypt",
        "-i",
        &p(&img),
        "-o",
        &p(&container),
        "--key",
        KEY,
        "--mode",
        "ecb",
    ]);
    let out_pgm = p(&dir.path().join("out.pgm"));
    let missing = p(&dir.path().join("missing.pgm"));

    // usage errors
    assert_eq!(
        exit_code(&["encrypt", "-i", &p(&img), "-o", "x.aesi", "--key", "abc"]),
        2
    );
    assert_eq!(exit_code(&["encrypt", "-i", &p(&img), "-o", "x.aesi"]), 2);
    assert_eq!(
        exit_code(&[
            "encrypt",
            "-i",
            &p(&img),
            "-o",
            "x.aesi",
            "--key",
            KEY,
            "--mode",
            "ctr",
            "--iv",
            IV,
        ]),
        2,
        "a pinned IV needs --allow-iv-reuse"
    );
    assert_eq!(
        exit_code(&[
            "encrypt",
            "-i",
            &p(&img),
            "-o",
            "x.aesi",
            "--key",
            KEY,
            "--mode",
            "ecb",
            "--iv",
            IV,
            "--allow-iv-reuse",
        ]),
        2,
        "ECB takes no IV"
    );
    assert_eq!(
        exit_code(&["keysens", "-i", &p(&img), "--key", KEY, "--flip-bit", "128"]),
        2
    );
    assert_eq!(exit_code(&["analyze", "-i", &p(&img), "-c", &p(&other)]), 2);
    assert_eq!(
        exit_code(&[
            "gen-test-image",
            "--width",
            "8",
            "--height",
            "8",
            "--pattern",
            "noise",
            "-o",
            &out_pgm
        ]),
        2
    );
    let short_key = dir.path().join("short.key");
    fs::write(&short_key, [0u8; 15]).unwrap();
    assert_eq!(
        exit_code(&[
            "encrypt",
            "-i",
            &p(&img),
            "-o",
            "x.aesi",
            "--key-file",
            &p(&short_key)
        ]),
        2
    );

    // I/O errors
    assert_eq!(
        exit_code(&["encrypt", "-i", &missing, "-o", "x.aesi", "--key", KEY]),
        3
    );
    assert_eq!(
        exit_code(&["decrypt", "-i", &missing, "-o", &out_pgm, "--key", KEY]),
        3
    );

    // malformed inputs
    let junk = dir.path().join("junk.aesi");
    fs::write(&junk, b"JUNKJUNKJUNKJUNKJUNKJUNK").unwrap();
    assert_eq!(
        exit_code(&["decrypt", "-i", &p(&junk), "-o", &out_pgm, "--key", KEY]),
        4
    );
    let bad_pgm = dir.path().join("bad.pgm");
    fs::write(&bad_pgm, b"P6\n2 2\n255\nXXXX").unwrap();
    assert_eq!(
        exit_code(&["encrypt", "-i", &p(&bad_pgm), "-o", "x.aesi", "--key", KEY]),
        4
    );
    let mut truncated = fs::read(&container).unwrap();
    truncated.truncate(20);
    let trunc_path = dir.path().join("trunc.aesi");
    fs::write(&trunc_path, truncated).unwrap();
    assert_eq!(
        exit_code(&[
            "decrypt",
            "-i",
            &p(&trunc_path),
            "-o",
            &out_pgm,
            "--key",
            KEY
        ]),
        4
    );

    // integrity failure: ECB under the wrong key
    assert_eq!(
        exit_code(&[
            "decrypt",
            "-i",
            &p(&container),
            "-o",
            &out_pgm,
            "--key",
            OTHER_KEY
        ]),
        5
    );
}

#[test]
fn ecb_repeats_blocks_where_ctr_does_not() {
    let dir = tempfile::tempdir().unwrap();
    let img = gen_image(dir.path(), "in.pgm", 256, 256, 8, "flat-regions");

    let count_max_block_repeat = |path: &Path| {
        let bytes = fs::read(path).unwrap();
        let body = &bytes[38..];
        let mut counts = std::collections::HashMap::new();
        for block in body.chunks_exact(16) {
            *counts.entry(block.to_vec()).or_insert(0u32) += 1;
        }
        counts.into_values().max().unwrap()
    };

    let ecb = dir.path().join("ecb.aesi");
    run_ok(&[
        "encrypt",
        "-i",
        &p(&img),
        "-o",
        &p(&ecb),
        "--key",
        KEY,
        "--mode",
        "ecb",
    ]);
    assert!(
        count_max_block_repeat(&ecb) >= 2,
        "flat regions must collide under ECB"
    );

    let ctr = dir.path().join("ctr.aesi");
    run_ok(&[
        "encrypt",
        "-i",
        &p(&img),
        "-o",
        &p(&ctr),
        "--key",
        KEY,
        "--mode",
        "ctr",
    ]);
    assert_eq!(count_max_block_repeat(&ctr), 1);
}
