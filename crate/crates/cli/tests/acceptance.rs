// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance run: one pass/fail line per criterion, nonzero exit if any fail.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use gausscalc::experiments::{self, ConvolutionInput};
use gausscalc::Verdict;
use gausscalc_core::gaussian::{inner_product, Variance};
use gausscalc_core::matrixrep::{bch_check, GradedBasis};
use gausscalc_core::random::{random_multi_index, random_polynomial, rng, PolySpec};
use gausscalc_core::rational::{int, ratio};
use gausscalc_core::semigroups::*;
use gausscalc_core::{Polynomial, Rational};
use rand::Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn grid_params() -> Vec<VarianceParams> {
    let mut out = Vec::new();
    for s in [1, 4, 9] {
        for l in [ratio(1, 2), ratio(2, 3), ratio(3, 5)] {
            out.push(VarianceParams::from_lambda(int(s), l).unwrap());
        }
    }
    out
}

fn random_polys(seed: u64, count: usize) -> Vec<Polynomial> {
    let mut r = rng(seed);
    let spec = PolySpec { max_vars: 4, max_degree: 8, ..PolySpec::default() };
    (0..count).map(|_| random_polynomial(&mut r, &spec)).collect()
}

fn orthogonality() -> Outcome {
    let basis = GradedBasis::new(3, 6).unwrap();
    let mut pairs = 0usize;
    let mut bad = Vec::new();
    for s in [int(1), ratio(1, 2), int(4)] {
        let var = Variance::new(s.clone()).unwrap();
        let hs: Vec<_> = basis.monomials().iter().map(|a| hermite(a, &var)).collect();
        for (i, a) in basis.monomials().iter().enumerate() {
            for (j, b) in basis.monomials().iter().enumerate().skip(i) {
                let got = inner_product(&hs[i], &hs[j], &var);
                let want = if i == j {
                    Rational::from_integer(a.factorial()) * num_traits::pow(s.clone(), a.degree() as usize)
                } else {
                    int(0)
                };
                pairs += 1;
                if got != want {
                    bad.push(format!("<h_{a}, h_{b}> at s = {s}"));
                }
            }
        }
    }
    check(bad.is_empty(), format!("{pairs} pairs, {} mismatches {:?}", bad.len(), bad.first()))
}

fn intertwining() -> Outcome {
    let mut r = rng(11);
    let mut bad = 0;
    for _ in 0..100 {
        let alpha = random_multi_index(&mut r, 3, 8);
        let s = ratio(r.random_range(1..=40), r.random_range(1..=4));
        let t = &s * ratio(r.random_range(-20..=19), 20);
        let check = verify_intertwining(&alpha, &Variance::new(s).unwrap(), &t).unwrap();
        bad += usize::from(!check.holds);
    }
    check(bad == 0, format!("100 cases, {bad} failures"))
}

fn central_identity(polys: &[Polynomial]) -> Outcome {
    let mut bad = 0;
    let mut cases = 0;
    for params in grid_params() {
        for f in polys {
            let c = verify_ident2(f, &params);
            cases += 1;
            bad += usize::from(!c.holds || !c.witness.is_zero());
        }
    }
    check(bad == 0, format!("{} polynomials x 9 (s, lambda), {cases} cases, {bad} failures", polys.len()))
}

fn commutators(polys: &[Polynomial]) -> Outcome {
    let bad = polys.iter().filter(|f| !verify_commutator(f).holds || !verify_nested_commutator(f).holds).count();
    check(bad == 0, format!("{} polynomials, {bad} failures", polys.len()))
}

fn bch() -> Outcome {
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for m in [1, 2] {
        for n in [4, 6] {
            let basis = Arc::new(GradedBasis::new(m, n).unwrap());
            for s in [int(1), int(4)] {
                for l in [ratio(1, 2), ratio(2, 3)] {
                    let r = bch_check(&s, &l, &basis, 1e-10).unwrap();
                    worst = worst.max(r.bch_discrepancy).max(r.bch2_discrepancy).max(r.float_vs_exact_discrepancy);
                    if !r.passed() || !r.exact_route_holds() {
                        bad.push(format!("m={m} n={n} s={s} lambda={l}"));
                    }
                }
            }
        }
    }
    check(bad.is_empty(), format!("16 grid points, worst float discrepancy {worst:.3e}, failures {bad:?}"))
}

fn nonclosability() -> Outcome {
    let s = Variance::new(int(1)).unwrap();
    let t = ratio(1, 2);
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [10u32, 100, 1000] {
        let f = experiments::nonclosability_sequence(s.value(), n);
        let norm = inner_product(&f, &f, &s);
        let lap_ok = laplacian(&f) == Polynomial::constant(int(2));
        let heat_ok = &heat(&f, &t) - &f == Polynomial::constant(t.clone());
        let norm_ok = norm == ratio(2, n as i64);
        ok &= lap_ok && heat_ok && norm_ok;
        notes.push(format!("n={n}: norm^2 = {norm}"));
    }
    check(ok, notes.join(", "))
}

fn l2_contraction(polys: &[Polynomial]) -> Outcome {
    let mut bad = 0;
    let mut worst = int(0);
    let basis = GradedBasis::new(2, 6).unwrap();
    for params in grid_params() {
        let source = params.variance();
        let target = params.heat_variance();
        for f in polys.iter().filter(|f| !f.is_zero()) {
            let r = l2_contraction_ratio(f, &params).unwrap();
            let g = heat(f, params.t());
            let direct = inner_product(&g, &g, &target) / inner_product(f, f, &source);
            bad += usize::from(r > int(1) || r != direct);
            if r > worst {
                worst = r;
            }
        }
        for a in basis.monomials() {
            let want = num_traits::pow(params.lambda_squared(), a.degree() as usize);
            bad += usize::from(l2_contraction_ratio(&hermite(a, &source), &params) != Some(want));
        }
    }
    check(
        bad == 0,
        format!(
            "{} polynomials and {} Hermite inputs x 9 (s, lambda), largest ratio^2 {worst}, {bad} failures",
            polys.len(),
            basis.dim()
        ),
    )
}

fn hypercontractive() -> Outcome {
    let cases = [
        ("2", "2", "--lambda", "1/2"),
        ("2", "3", "--lambda", "1/2"),
        ("2", "3", "--t", "1/2"),
        ("3", "2", "--lambda", "1/2"),
        ("3", "2", "--lambda", "9/10"),
    ];
    let mut bad = Vec::new();
    for (p, q, flag, value) in cases {
        let out = gausscalc::run([
            "gausscalc",
            "sharpness-probe",
            "--p",
            p,
            "--q",
            q,
            "--s",
            "1",
            flag,
            value,
            "--tol",
            "1e-6",
        ]);
        let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap_or_default();
        let condition = report["results"][0]["values"]["holds"] == serde_json::Value::Bool(true);
        if out.code != 0 || report["verdict"] != "pass" || !condition {
            bad.push(format!("p={p} q={q} {flag} {value}"));
        }
    }
    check(bad.is_empty(), format!("{} (p, q, scaling) probes, failures {bad:?}", cases.len()))
}

fn convolution() -> Outcome {
    let report = experiments::convolution_check(&ConvolutionInput::Random { trials: 50, seed: 5 }, 1e-10).unwrap();
    let worst =
        report.results.iter().filter_map(|r| r.values.get("relative").and_then(|v| v.as_f64())).fold(0.0, f64::max);
    check(
        report.verdict == Verdict::Pass && report.results.len() == 50,
        format!("50 cases, worst relative {worst:.3e}"),
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_gausscalc");
    let runs: &[&[&str]] = &[
        &["check-identity", "--f", "x1^2 x2 - 1/3 x3", "--s", "4", "--lambda", "2/3"],
        &["check-identity", "--f", "x1^3", "--s", "1", "--t", "1/2"],
        &["check-commutator", "--f", "x1^4 x2 + x2^3"],
        &["bch-check", "--m", "2", "--n", "4", "--s", "1", "--lambda", "1/2"],
        &["hermite", "--alpha", "2,1", "--s", "1/2"],
        &["apply-heat", "--f", "x1^4", "--t", "-1"],
        &["nonclosability-demo", "--s", "1", "--n", "100", "--t", "1/2"],
        &[
            "hypercontractivity-scan",
            "--s",
            "1",
            "--lambda",
            "1/2",
            "--p",
            "2",
            "--q",
            "2",
            "--degree-cap",
            "6",
            "--random",
            "5",
        ],
        &[
            "hypercontractivity-scan",
            "--s",
            "1",
            "--lambda",
            "1/2",
            "--p",
            "3",
            "--q",
            "2",
            "--degree-cap",
            "3",
            "--samples",
            "20000",
        ],
        &["sharpness-probe", "--p", "3", "--q", "2", "--s", "1", "--lambda", "1/2", "--samples", "20000"],
        &["sharpness-probe", "--p", "2", "--q", "4", "--s", "1", "--t", "1/2"],
        &["convolution-check", "--random", "10"],
        &["convolution-check", "--f", "x1^4", "--t", "2", "--x", "x1=1"],
    ];
    let dir = std::env::temp_dir().join(format!("gausscalc-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut bad = Vec::new();
    for (i, args) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for k in 0..2 {
            let path = dir.join(format!("{i}-{k}.json"));
            let out = Command::new(bin).args(*args).args(["--seed", "42", "--json-out"]).arg(&path).output().unwrap();
            let file = std::fs::read(&path).unwrap_or_default();
            outputs.push((out.status.code(), out.stdout, file));
        }
        let (a, b) = (&outputs[0], &outputs[1]);
        if a != b || a.1.is_empty() || a.1 != a.2 {
            bad.push(args[0].to_string());
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    check(bad.is_empty(), format!("{} invocations run twice, differing {bad:?}", runs.len()))
}

fn main() -> ExitCode {
    let polys = random_polys(2026, 200);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("hermite orthogonality and normalization", Box::new(orthogonality)),
        ("heat intertwines hermite families", Box::new(intertwining)),
        ("dilated heat equals hermite semigroup", Box::new(|| central_identity(&polys))),
        ("commutator and nilpotency", Box::new(|| commutators(&polys))),
        ("matrix exponential factorisation", Box::new(bch)),
        ("nonclosability sequence", Box::new(nonclosability)),
        ("L2 contraction ratios", Box::new(|| l2_contraction(&polys[..100]))),
        ("hypercontractive regime", Box::new(hypercontractive)),
        ("heat kernel convolution", Box::new(convolution)),
        ("byte-identical reports", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} pass  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({detail}) [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
