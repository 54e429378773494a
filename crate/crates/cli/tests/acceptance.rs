//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every exact criterion compares rationals with zero tolerance.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use refinemask::algebra::{pow2, ratio, solve_general, sup_distance};
use refinemask::{
    antiderivative_constant, cascade, cascade_iterates, equivalence_witness, extend_mask,
    integration_constant, mask_from_poly, mask_from_poly_at_nodes, masks_equivalent,
    poly_from_mask, refinement_matrix, verify_refines, IntegrationConstant, Mask, Polynomial,
    Rational,
};

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mask(s: &str) -> Mask {
    s.parse().expect("fixture mask")
}

fn poly(s: &str) -> Polynomial {
    s.parse().expect("fixture polynomial")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator and denominator bounded by 100 in absolute value.
fn rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-100..=100), rng.gen_range(1..=100))
}

fn monic(rng: &mut impl Rng, degree: usize) -> Polynomial {
    let mut c: Vec<Rational> = (0..degree).map(|_| rational(rng)).collect();
    c.push(Rational::one());
    Polynomial::new(c)
}

fn nonzero_poly(rng: &mut impl Rng, degree: usize) -> Polynomial {
    let mut c: Vec<Rational> = (0..degree).map(|_| rational(rng)).collect();
    let lead = loop {
        let r = rational(rng);
        if !r.is_zero() {
            break r;
        }
    };
    c.push(lead);
    Polynomial::new(c)
}

fn random_mask(rng: &mut impl Rng, max_width: usize) -> Mask {
    let width = rng.gen_range(1..=max_width);
    Mask::new(
        rng.gen_range(-3..=3),
        (0..width).map(|_| rational(rng)).collect(),
    )
}

/// Mask of width at most `max_width` with sum `2^(-n-1)`.
fn valid_mask(rng: &mut impl Rng, n: usize, max_width: usize) -> Mask {
    let width = rng.gen_range(1..=max_width);
    let mut c: Vec<Rational> = (0..width - 1).map(|_| rational(rng)).collect();
    let partial: Rational = c.iter().sum();
    c.push(pow2(-(n as i64) - 1) - partial);
    Mask::new(rng.gen_range(-3..=3), c)
}

fn criterion_1() -> Result<(), String> {
    for (m, p) in [
        ("0:1/16,3/16,3/16,1/16", "1"),
        ("0:1/32,3/32,3/32,1/32", "-3/2,1"),
        ("0:1/64,3/64,3/64,1/64", "5/2,-3,1"),
    ] {
        let got = poly_from_mask(&mask(m)).map_err(|e| e.to_string())?;
        ensure(got == poly(p), || format!("{m}: got {got}, expected {p}"))?;
    }
    Ok(())
}

fn criterion_2() -> Result<(), String> {
    let m = mask("0:3/8,-3/8,1/8");
    let p = poly("1,2,1");
    ensure(verify_refines(&m, &p), || "verify_refines is false".into())?;
    let got = poly_from_mask(&m).map_err(|e| e.to_string())?;
    ensure(got == p, || format!("poly_from_mask gave {got}"))
}

fn criterion_3() -> Result<(), String> {
    let short = mask_from_poly(&poly("5/2,-3,1")).map_err(|e| e.to_string())?;
    ensure(short == mask("0:1/32,0,3/32"), || {
        format!("short mask {short}")
    })?;
    let long = mask("0:1/64,3/64,3/64,1/64");
    ensure(masks_equivalent(&long, &short), || "not equivalent".into())?;
    let witness = equivalence_witness(&long, &short);
    ensure(witness == Some(Mask::impulse(0, ratio(-1, 64))), || {
        format!("witness {witness:?}")
    })
}

fn criterion_4() -> Result<(), String> {
    let mut r = rng(4);
    for case in 0..200 {
        let degree = r.gen_range(0..=6);
        let p = monic(&mut r, degree);
        let m = mask_from_poly(&p).map_err(|e| e.to_string())?;
        let back = poly_from_mask(&m).map_err(|e| e.to_string())?;
        ensure(back == p, || format!("case {case}: {p} -> {m} -> {back}"))?;
    }
    for case in 0..200 {
        let n = r.gen_range(0..=6);
        let m = valid_mask(&mut r, n, 9);
        let p = poly_from_mask(&m).map_err(|e| e.to_string())?;
        ensure(verify_refines(&m, &p), || {
            format!("case {case}: {m} does not refine {p}")
        })?;
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    let mut r = rng(5);
    for case in 0..100 {
        let n = r.gen_range(0..=6);
        let p = nonzero_poly(&mut r, n);
        let v = random_mask(&mut r, 4);
        let m = extend_mask(&mask_from_poly(&p).map_err(|e| e.to_string())?, &v, n);
        ensure(verify_refines(&m, &p), || {
            format!("case {case}: {m} vs {p}")
        })?;
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    let mut r = rng(6);
    for case in 0..50 {
        let n = r.gen_range(0..=6);
        let m = valid_mask(&mut r, n, 9);
        let matrix = refinement_matrix(&m, n);
        let expected: Vec<Rational> = (0..=n).map(|j| pow2(j as i64 - n as i64)).collect();
        ensure(matrix.diagonal() == expected, || {
            format!("case {case}: diagonal of {m}")
        })?;
        let d = poly_from_mask(&m).map_err(|e| e.to_string())?.derivative();
        let dv = d.padded(n + 1);
        let image = matrix.mul_vec(&dv).map_err(|e| e.to_string())?;
        let half: Vec<Rational> = dv.iter().map(|c| c * ratio(1, 2)).collect();
        ensure(image == half, || {
            format!("case {case}: derivative not an eigenvector for {m}")
        })?;
    }
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    let m = mask("0:1/64,3/64,3/64,1/64");
    let exact = poly("5/2,-3,1");
    let p0 = poly("0,0,1");
    let errors: Vec<Rational> = cascade_iterates(&m, &p0)
        .map_err(|e| e.to_string())?
        .take(20)
        .map(|p| sup_distance(p.coeffs(), exact.coeffs()))
        .collect();
    // errors[j - 1] is the error after j iterations.
    for j in 10..20 {
        let rate = &errors[j] / &errors[j - 1];
        ensure(rate >= ratio(4, 10) && rate <= ratio(6, 10), || {
            format!("error ratio {rate} between iterations {j} and {}", j + 1)
        })?;
    }
    let tol = pow2(-40);
    let report = cascade(&m, &p0, 60, &tol).map_err(|e| e.to_string())?;
    let err = sup_distance(report.result.coeffs(), exact.coeffs());
    ensure(report.converged && report.iterations <= 60, || {
        format!("not converged after {} iterations", report.iterations)
    })?;
    ensure(err < tol, || format!("final error {err} exceeds 2^-40"))
}

fn criterion_8() -> Result<(), String> {
    let mut r = rng(8);
    for case in 0..100 {
        let n = r.gen_range(0..=6);
        let p = nonzero_poly(&mut r, n);
        let structured = mask_from_poly(&p).map_err(|e| e.to_string())?;

        let full = p.shifted_poly_matrix().map_err(|e| e.to_string())?;
        let rhs = p.shrink(&ratio(1, 2)).scale(&ratio(1, 2)).padded(n + 1);
        let direct = Mask::new(0, solve_general(&full, &rhs).map_err(|e| e.to_string())?);
        ensure(structured == direct, || {
            format!("case {case}: {structured} vs {direct}")
        })?;

        let nodes: Vec<i64> = (0..=n as i64).collect();
        let vandermonde = mask_from_poly_at_nodes(&p, &nodes).map_err(|e| e.to_string())?;
        ensure(structured == vandermonde, || {
            format!("case {case}: {structured} vs {vandermonde}")
        })?;
    }
    Ok(())
}

fn criterion_9() -> Result<(), String> {
    let unique = antiderivative_constant(&mask("0:1/16,3/16,3/16,1/16"), &poly("1"))
        .map_err(|e| e.to_string())?;
    ensure(unique == IntegrationConstant::Unique(ratio(-3, 2)), || {
        format!("{unique:?}")
    })?;

    // Sum-one masks: δ₀ kills every shift term of Φ = t, δ₁ does not.
    let arbitrary = integration_constant(&Mask::delta(), &poly("0,1"));
    ensure(arbitrary == IntegrationConstant::Arbitrary, || {
        format!("{arbitrary:?}")
    })?;
    let none = integration_constant(&Mask::impulse(1, ratio(1, 1)), &poly("0,1"));
    ensure(none == IntegrationConstant::Impossible, || {
        format!("{none:?}")
    })
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_refinemask"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_10() -> Result<(), String> {
    let cases: [(&[&str], i32, &str); 7] = [
        (&["poly-from-mask", "0:1/16,3/16,3/16,1/16"], 0, "1\n"),
        (&["poly-from-mask", "0:1/32,3/32,3/32,1/32"], 0, "-3/2,1\n"),
        (
            &["poly-from-mask", "0:1/64,3/64,3/64,1/64"],
            0,
            "5/2,-3,1\n",
        ),
        (&["verify", "0:3/8,-3/8,1/8", "1,2,1"], 0, "OK\n"),
        (&["poly-from-mask", "0:3/8,-3/8,1/8"], 0, "1,2,1\n"),
        (&["mask-from-poly", "5/2,-3,1"], 0, "0:1/32,0,3/32\n"),
        (
            &["equiv", "0:1/64,3/64,3/64,1/64", "0:1/32,0,3/32"],
            0,
            "equivalent\nwitness: 0:-1/64\n",
        ),
    ];
    for (args, code, expected) in cases {
        let (got_code, got) = run_cli(args);
        ensure(got_code == code && got == expected, || {
            format!("{args:?}: exit {got_code}, output {got:?}")
        })?;
    }

    for m in [
        "0:1/16,3/16,3/16,1/16",
        "0:1/32,3/32,3/32,1/32",
        "0:1/64,3/64,3/64,1/64",
    ] {
        let (code, csv) = run_cli(&[
            "render-csv",
            m,
            "--t-min",
            "0",
            "--t-max",
            "3",
            "--samples",
            "301",
        ]);
        ensure(code == 0, || format!("render-csv {m} exited {code}"))?;
        let mut lines = csv.lines();
        let header = lines.next().unwrap_or_default();
        ensure(header == "t,total,part_0,part_1,part_2,part_3", || {
            format!("header {header}")
        })?;
        let mut rows = 0;
        for line in lines {
            let values: Vec<f64> = line
                .split(',')
                .map(|v| v.parse::<f64>().map_err(|e| format!("{v}: {e}")))
                .collect::<Result<_, _>>()?;
            let parts: f64 = values[2..].iter().sum();
            ensure((parts - values[1]).abs() <= 1e-9, || {
                format!(
                    "{m} at t={}: parts {parts} vs total {}",
                    values[0], values[1]
                )
            })?;
            rows += 1;
        }
        ensure(rows == 301, || format!("{rows} rows"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("1 worked-example chain (exact)", criterion_1),
        ("2 conversions-intro example (exact)", criterion_2),
        ("3 minimal mask and coset witness (exact)", criterion_3),
        ("4 round trips, 200 cases each (exact)", criterion_4),
        ("5 coset closure, 100 cases (exact)", criterion_5),
        ("6 eigenstructure, 50 masks (exact)", criterion_6),
        (
            "7 cascade rate in [0.4, 0.6], error < 2^-40 within 60 steps",
            criterion_7,
        ),
        (
            "8 difference-LU vs direct solve vs Vandermonde, 100 cases (exact)",
            criterion_8,
        ),
        ("9 integration-constant cases", criterion_9),
        ("10 CLI outputs and CSV part sums within 1e-9", criterion_10),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
