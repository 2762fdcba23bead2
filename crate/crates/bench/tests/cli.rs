use std::path::Path;
use std::process::{Command, Output};

use bkm_bench::output::HEADER;

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkm-bench")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn rows(out: &Output) -> Vec<Vec<String>> {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn list_problems_names_every_problem() {
    let out = bench(&["list-problems"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for p in bkm_bench::builtin_problems() {
        assert!(text.contains(p.name));
    }
}

#[test]
fn run_writes_one_row_in_column_order() {
    let out = bench(&["run", "--problem", "helmholtz2d_square", "--boundary-knots", "24", "--scheme", "unsym", "--seed", "5"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let rows = rows(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0], HEADER);
    let r = &rows[1];
    assert_eq!(&r[..7], ["helmholtz2d_square", "unsym", "24", "0", "0", "460", "5"]);
    for field in &r[7..] {
        let mantissa = field.split('e').next().unwrap();
        assert_eq!(mantissa.trim_start_matches('-').replace('.', "").len(), 6, "{field}");
        assert!(field.parse::<f64>().unwrap().is_finite());
    }
    assert!(r[7].parse::<f64>().unwrap() < 1e-8);
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        &["run", "--problem", "no_such_problem"][..],
        &["run"],
        &["run", "--problem", "helmholtz2d_square", "--scheme", "skew"],
        &["run", "--problem", "helmholtz2d_square", "--bogus"],
        &["run", "--problem", "helmholtz2d_square", "--boundary-knots", "0"],
        &["run", "--problem", "helmholtz2d_square", "--eval-knots", "0"],
        &["run", "--problem", "helmholtz3d_hom", "--inner-knots", "5"],
        &["run", "--problem", "helmholtz2d_square", "--domain-config", "/nonexistent/config.toml"],
        &["sweep", "--problem", "helmholtz2d_square", "--boundary-knots", "24"],
        &["sweep", "--problem", "helmholtz2d_square", "--boundary-knots", "24,24"],
        &["frobnicate"],
    ] {
        let out = bench(args);
        assert_eq!(code(&out), 1, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn numerical_failure_exits_with_two() {
    let out = bench(&["run", "--problem", "helmholtz2d_inhom", "--precision", "f64", "--eval-knots", "20"]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn config_file_is_read_and_flags_take_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "square.toml",
        "problem = \"helmholtz2d_square\"\nscheme = \"sym\"\nboundary_knots = 20\neval_knots = 30\nseed = 2\n\n\
         [domain]\nkind = \"rect2d\"\nlower = [0.0, 0.0]\nupper = [1.5, 1.0]\n",
    );
    let out = bench(&["run", "--domain-config", &cfg]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(&rows(&out)[1][..7], ["helmholtz2d_square", "sym", "20", "0", "0", "30", "2"]);
    let out = bench(&["run", "--domain-config", &cfg, "--scheme", "unsym", "--seed", "9"]);
    assert_eq!(&rows(&out)[1][..7], ["helmholtz2d_square", "unsym", "20", "0", "0", "30", "9"]);
}

#[test]
fn unknown_config_keys_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    for (i, text) in [
        "problem = \"helmholtz2d_square\"\nseeed = 1\n",
        "problem = \"helmholtz2d_square\"\n[domain]\nkind = \"rect2d\"\nlower = [0.0, 0.0]\nupper = [1.0, 1.0]\nextra = 1\n",
        "problem = \"helmholtz2d_inhom\"\n[params]\nomega = 2.0\n",
        "problem = \"helmholtz2d_square\"\n[sweep]\ncounts = [1, 2]\n",
    ]
    .iter()
    .enumerate()
    {
        let cfg = write(dir.path(), &format!("c{i}.toml"), text);
        let out = bench(&["run", "--domain-config", &cfg]);
        assert_eq!(code(&out), 1, "{text}");
    }
}

#[test]
fn dimension_mismatch_in_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "cube.toml",
        "problem = \"helmholtz2d_square\"\n[domain]\nkind = \"cube\"\nlower = [0.0, 0.0, 0.0]\nupper = [1.0, 1.0, 1.0]\n",
    );
    assert_eq!(code(&bench(&["run", "--domain-config", &cfg])), 1);
}

#[test]
fn sweep_rows_are_ordered_by_scheme_then_count() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("sweep.csv");
    let out = bench(&[
        "sweep",
        "--problem",
        "helmholtz2d_square",
        "--boundary-knots",
        "24,16",
        "--eval-knots",
        "50",
        "--no-timing",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_path).unwrap();
    let keys: Vec<(String, String, String)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f[10], "NaN");
            (f[1].to_string(), f[2].to_string(), f[6].to_string())
        })
        .collect();
    let expect = [("unsym", "16"), ("unsym", "24"), ("sym", "16"), ("sym", "24")];
    assert_eq!(keys.len(), 4);
    for ((scheme, count, seed), (s, c)) in keys.iter().zip(expect) {
        assert_eq!((scheme.as_str(), count.as_str(), seed.as_str()), (s, c, "0"));
    }
}

#[test]
fn sweep_reads_its_section_from_the_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "sweep.toml",
        "problem = \"helmholtz2d_square\"\neval_knots = 40\n[sweep]\nboundary_knots = [12, 20, 16]\nschemes = [\"sym\"]\n",
    );
    let out = bench(&["sweep", "--domain-config", &cfg]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let counts: Vec<String> = rows(&out)[1..].iter().map(|r| r[2].clone()).collect();
    assert_eq!(counts, ["12", "16", "20"]);
}

#[test]
fn repeated_runs_are_byte_identical_without_timing() {
    let args = ["run", "--problem", "diffreact2d_d5", "--boundary-knots", "25", "--eval-knots", "60", "--seed", "3"];
    let a = bench(&[&args[..], &["--no-timing"]].concat());
    let b = bench(&[&args[..], &["--no-timing"]].concat());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
