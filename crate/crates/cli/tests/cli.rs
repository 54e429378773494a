use std::process::{Command, Output};

fn refinemask(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_refinemask"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn poly_from_mask() {
    let out = refinemask(&["poly-from-mask", "0:1/64,3/64,3/64,1/64"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "5/2,-3,1\n"));

    let out = refinemask(&["poly-from-mask", "0:1/16,3/16,3/16,1/16"]);
    assert_eq!(stdout(&out), "1\n");

    let out = refinemask(&["poly-from-mask", "0:1/8,3/8,3/8,1/8"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("mask does not refine a polynomial"));
}

#[test]
fn parse_failures_exit_with_two() {
    for args in [
        &["poly-from-mask", "1/64,3/64"][..],
        &["poly-from-mask", "0:1/0"],
        &["verify", "0:1/2", "1,x"],
        &["mask-from-poly", "1,2", "--nodes", "0,a"],
        &["cascade", "0:1/2", "--tol", "0.5"],
        &["render-csv", "0:1/2", "--samples", "0"],
        &["no-such-command"],
    ] {
        assert_eq!(code(&refinemask(args)), 2, "{args:?}");
    }
}

#[test]
fn mask_from_poly() {
    let out = refinemask(&["mask-from-poly", "5/2,-3,1"]);
    assert_eq!(stdout(&out), "0:1/32,0,3/32\n");
    assert_eq!(stdout(&refinemask(&["mask-from-poly", "1"])), "0:1/2\n");
    let out = refinemask(&["mask-from-poly", "5/2,-3,1", "--nodes", "0,1,2"]);
    assert_eq!(stdout(&out), "0:1/32,0,3/32\n");
    let out = refinemask(&["mask-from-poly", "-3/2,1", "--nodes", "-1,4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("-1:"));
    assert_eq!(
        code(&refinemask(&[
            "mask-from-poly",
            "5/2,-3,1",
            "--nodes",
            "0,1"
        ])),
        1
    );
    assert_eq!(code(&refinemask(&["mask-from-poly", "0"])), 1);
}

#[test]
fn verify() {
    let out = refinemask(&["verify", "0:3/8,-3/8,1/8", "1,2,1"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "OK\n"));
    let out = refinemask(&["verify", "0:1/32,0,3/32", "5/2,-3,1"]);
    assert_eq!(stdout(&out), "OK\n");
    let out = refinemask(&["verify", "0:1/16,3/16,3/16,1/16", "0,1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "residual: -3/2,1\n");
}

#[test]
fn equiv_and_reduce() {
    let out = refinemask(&["equiv", "0:1/64,3/64,3/64,1/64", "0:1/32,0,3/32"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "equivalent\nwitness: 0:-1/64\n");

    let out = refinemask(&["equiv", "0:1/64,3/64,3/64,1/64", "0:1/32,3/32,3/32,1/32"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (1, "not equivalent\n"));

    let out = refinemask(&["reduce", "0:1/64,3/64,3/64,1/64"]);
    assert_eq!(stdout(&out), "0:1/32,0,3/32\n");
    let out = refinemask(&["reduce", "-2:1/4,1/4,-1/4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&refinemask(&["reduce", "0:1/3"])), 1);
}

#[test]
fn cascade_report() {
    let out = refinemask(&[
        "cascade",
        "0:1/64,3/64,3/64,1/64",
        "--tol",
        "1/1099511627776",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let field = |name: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{name}: ")))
            .unwrap_or_else(|| panic!("missing {name} in {text}"))
            .to_string()
    };
    assert_eq!(field("converged"), "true");
    assert_eq!(field("approx"), "2.5,-3,1");
    let result: refinemask::Polynomial = field("result").parse().unwrap();
    let exact: refinemask::Polynomial = "5/2,-3,1".parse().unwrap();
    let tol = refinemask::algebra::pow2(-40);
    assert!(refinemask::algebra::sup_distance(result.coeffs(), exact.coeffs()) < tol);

    let out = refinemask(&["cascade", "0:1/64,3/64,3/64,1/64", "--max-iter", "3"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("converged: false"));

    let out = refinemask(&["cascade", "0:1/64,3/64,3/64,1/64", "--p0", "5/2,-3,1"]);
    assert!(stdout(&out).contains("iterations: 1\nfinal_delta: 0\n"));

    assert_eq!(
        code(&refinemask(&[
            "cascade",
            "0:1/64,3/64,3/64,1/64",
            "--p0",
            "0,1"
        ])),
        1
    );
}

#[test]
fn render_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quadratic.csv");
    let out = refinemask(&[
        "render-csv",
        "0:1/32,0,3/32",
        "--t-min",
        "-1/2",
        "--t-max",
        "1",
        "--samples",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,total,part_0,part_1,part_2");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("-0.5,4.25,"));
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn render_csv_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let out = refinemask(&["render-csv", "0:1/2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn printed_values_reparse() {
    for args in [
        &["poly-from-mask", "-3:1/7,2/9,-1/7,-2/9,1/8"][..],
        &["mask-from-poly", "1/3,-2/5,7/2,1"],
        &["reduce", "-3:1/7,2/9,-1/7,-2/9,1/8"],
    ] {
        let out = refinemask(args);
        assert_eq!(code(&out), 0, "{args:?}");
        let text = stdout(&out);
        let line = text.trim_end();
        let reparsed = if args[0] == "poly-from-mask" {
            line.parse::<refinemask::Polynomial>().unwrap().to_string()
        } else {
            line.parse::<refinemask::Mask>().unwrap().to_string()
        };
        assert_eq!(reparsed, line);
    }
}
