use cyclosrg::cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &str) -> Outcome {
    run(std::iter::once("cyclosrg").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn delange_certificate_json() {
    let v = json("verify-example --name delange --format json");
    assert_eq!(v["v"], 4096);
    assert_eq!(v["k"], 273);
    assert_eq!(v["lambda"], 20);
    assert_eq!(v["mu"], 18);
    assert_eq!((v["r"].clone(), v["s"].clone()), (17.into(), (-15).into()));
    assert_eq!(v["source"], "SPECTRUM");
    assert_eq!(v["inputs"]["D"], serde_json::json!([0, 5, 10]));
    assert_eq!(v["oracle_agrees"], true);
}

#[test]
fn json_is_byte_stable_and_sorted() {
    let a = cli("scan-triples --format json");
    let b = cli("scan-triples --format json");
    assert_eq!(a, b);
    let a = cli("verify-srg --p 2 --f 6 --n 9 --classes 0,3 --oracle --format json");
    assert_eq!(
        a,
        cli("verify-srg --p 2 --f 6 --n 9 --classes 0,3 --oracle --format json")
    );
    let keys: Vec<&str> = a
        .stdout
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn class_number_pretty() {
    let out = cli("class-number --d 7");
    assert_eq!((out.code, out.stdout.as_str()), (0, "1\n"));
    assert_eq!(json("class-number --d 499 --format json")["h"], 3);
    assert_eq!(cli("class-number --d 12").code, 2);
}

#[test]
fn verify_srg_exit_codes() {
    let out = cli("verify-srg --p 2 --f 4 --n 5 --classes 0");
    assert!(out.code == 0 || out.code == 1, "{out:?}");
    // three distinct restricted eigenvalues
    let out = cli("verify-srg --p 2 --f 11 --n 23 --classes 0");
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("not strongly regular"));
    let out = cli("verify-srg --p 13 --f 1 --n 4 --classes 0");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("negation"));
    let out = cli("verify-srg --p 3 --f 2 --n 2 --classes 0 --oracle --format tsv");
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "srg\tv\tk\tlambda\tmu\tr\ts\tmult_r\tmult_s\ntrue\t9\t4\t1\t2\t1\t-2\t4\t4\n"
    );
}

#[test]
fn usage_errors() {
    let out = cli("no-such-command");
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("Usage"));
    assert!(out.stdout.is_empty());
    let out = cli("class-number --d 7 --bogus");
    assert_eq!(out.code, 2);
    let out = cli("--help");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify-example"));
}

#[test]
fn gauss_commands() {
    let v = json("gauss-index2 --p 2 --p1 7 --m 2 --format json");
    assert_eq!(v["case"], "PRIME_POWER");
    assert_eq!(
        (v["h"].clone(), v["h0"].clone(), v["b"].clone()),
        (1.into(), 10.into(), (-1).into())
    );
    let v = json("gauss-index2 --p 2 --p1 5 --p2 3 --m 2 --format json");
    assert_eq!(v["h0"], 9);
    assert_eq!(v["inputs"]["N"], 75);
    let out = cli("gauss-semiprimitive --p 2 --n 5 --r 8 --format tsv");
    assert!(out.stdout.ends_with("\t-16\n"), "{}", out.stdout);
    let v = json("gauss-numeric --p 3 --f 2 --n 4 --format json");
    assert!((v["re"].as_f64().unwrap() + 3.0).abs() < 1e-9);
    assert_eq!(cli("classify-index2 --p 2 --n 11").code, 1);
    assert_eq!(
        cli("classify-index2 --p 2 --n 7 --format pretty").stdout,
        "PRIME_POWER\n"
    );
    assert_eq!(cli("mult-order --p 2 --n 49").stdout, "21\n");
}

#[test]
fn field_and_period_dumps() {
    let v = json("build-field --p 2 --f 2 --format json");
    assert_eq!(v["modulus"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["trace"], serde_json::json!([0, 0, 1, 1]));
    assert_eq!(v["log"][0], Value::Null);
    let out = cli("build-field --p 3 --f 2 --modulus 2,1,1 --format tsv");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 10);
    let out = cli("periods --p 2 --f 2 --n 3 --format tsv");
    assert_eq!(out.stdout, "a\teta\n0\t1\n1\t-1\n2\t-1\n");
}

#[test]
fn scans() {
    let out = cli("scan-pairs --p-max 50 --p1-max 500 --format tsv");
    let rows: Vec<&str> = out.stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[0].starts_with("2\t7\t-\t1\t-1\t3\t(2^3-1)/7\t1\t-1"));
    let v = json("scan-triples --p-max 2 --n-max 14 --format json");
    assert_eq!(v["hits"], serde_json::json!([]));
}
