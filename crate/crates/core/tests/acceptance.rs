//! One line per acceptance criterion; exits non-zero if any criterion fails.

use lommel::lommel::lommel_terminating;
use lommel::ode::*;
use lommel::verify::{
    annulus_grid, lommel_grid, lommel_residual, regime_cases, rel_diff, run_suite, terminating_vs_assembly, Options,
    Suite,
};
use lommel::{LogPoint, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;

type Criterion = (&'static str, fn() -> Outcome);

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn zero() -> C64 {
    c(0.0)
}

/// Outcome of one criterion: pass flag and a short summary.
struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn table_solution(nu: f64, mu: f64, sigma: C64) -> SolutionSpec {
    let spec = OdeSpec::new(c(2.0), c(0.5), zero(), c(nu), vec![Forcing { sigma, mu: c(mu) }]).unwrap();
    SolutionSpec::new(zero(), zero(), spec)
}

const SAMPLE_Z: [C64; 5] = [
    C64 { re: 0.3, im: 0.0 },
    C64 { re: -1.0, im: 0.5 },
    C64 { re: 1.5, im: -2.0 },
    C64 { re: 0.0, im: 3.0 },
    C64 { re: -2.5, im: -1.0 },
];

fn closed_forms() -> Outcome {
    let sigma = C64::new(1.3, -0.4);
    type Form = fn(C64, C64) -> C64;
    let examples: [(&str, f64, f64, Form); 4] = [
        ("even Neumann", 2.0, 1.0, |s, z| s + s * (-z).exp()),
        ("odd Neumann", 3.0, 0.0, |s, z| s / 2.0 * (-z / 2.0).exp() + s * (-1.5 * z).exp()),
        ("Schlafli", 4.0, -1.0, |s, z| s / 4.0 * (-z).exp() + 0.75 * s * (-2.0 * z).exp()),
        ("Struve", 1.5, 1.5, |s, z| s * 2f64.sqrt() * (z / 4.0).exp() * (1.0 + 0.5 * (-z).exp())),
    ];
    let (mut worst_val, mut worst_res) = (0.0f64, 0.0f64);
    for (_, nu, mu, form) in examples {
        let sol = table_solution(nu, mu, sigma);
        for z in SAMPLE_Z {
            let got = match sol.eval(z) {
                Ok(e) => e.value,
                Err(_) => return outcome(false, format!("evaluation failed at {z}")),
            };
            worst_val = worst_val.max(rel_diff(got, form(sigma, z)));
            worst_res = worst_res.max(ode_residual(&sol, z).unwrap_or(f64::INFINITY));
        }
    }
    outcome(
        worst_val <= 1e-10 && worst_res <= 1e-9,
        format!("4 examples x 5 points, worst value error {worst_val:.1e}, worst residual {worst_res:.1e}"),
    )
}

fn table_one() -> Outcome {
    let mut worst = 0.0f64;
    let mut k_ok = true;
    for case in 1..=4u8 {
        for p in 0..4u32 {
            let q = quantization_case(case, p, C64::new(0.7, -0.2)).unwrap();
            let pi = p as i64;
            let want = match case {
                1 => Rational::new(pi * pi, 1),
                2 => Rational::new((2 * pi + 1) * (2 * pi + 1), 4),
                3 => Rational::new((pi + 1) * (pi + 1), 1),
                _ => Rational::new((2 * pi + 1) * (2 * pi + 1), 16),
            };
            k_ok &= q.k == want;
            for z in SAMPLE_Z {
                worst = worst.max(ode_residual(&q.solution, z).unwrap_or(f64::INFINITY));
            }
        }
    }
    outcome(k_ok && worst <= 1e-8, format!("16 rows, K exact: {k_ok}, worst residual {worst:.1e}"))
}

fn terminating() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 50 {
        let nu = C64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-0.5..0.5));
        let p = rng.gen_range(0..=5u32);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let mu = c((2 * p + 1) as f64) - sign * nu;
        let pt = LogPoint::from_polar(rng.gen_range(0.5..10.0), rng.gen_range(-3.0..3.0));
        // the assembly needs K finite, which fails when mu - nu is also odd negative
        if lommel_terminating(mu, nu, pt).is_err() {
            continue;
        }
        match terminating_vs_assembly(mu, nu, pt) {
            Ok(e) => worst = worst.max(e),
            Err(_) => continue,
        }
        done += 1;
    }
    outcome(worst <= 1e-8, format!("50 random cases, worst relative gap {worst:.1e}"))
}

fn lommel_ode() -> Outcome {
    let grid = lommel_grid();
    let cases = regime_cases();
    let mut worst = (0.0f64, String::new());
    for &(mu, nu) in &cases {
        for &p in &grid {
            let r = lommel_residual(mu, nu, p).unwrap_or(f64::INFINITY);
            if r > worst.0 {
                worst = (r, format!("mu={mu} nu={nu} zeta={:.3}", p.zeta()));
            }
        }
    }
    outcome(
        worst.0 <= 1e-6,
        format!("{} parameter sets x {} points, worst residual {:.1e} ({})", cases.len(), grid.len(), worst.0, worst.1),
    )
}

fn suite_line(suite: Suite, samples: usize) -> Outcome {
    let rep = run_suite(suite, Options { samples, seed: 0, tol: None });
    for f in &rep.failures {
        eprintln!("    {f}");
    }
    let worst = rep.worst.map(|w| format!(", worst {:.1e} vs {:.0e} ({})", w.error, w.tol, w.case)).unwrap_or_default();
    outcome(rep.fail == 0, format!("{} checks passed, {} failed{worst}", rep.pass, rep.fail))
}

fn continuation() -> Outcome {
    let o = suite_line(Suite::Continuation, 30);
    outcome(o.pass, format!("annulus of {} points; {}", annulus_grid().len(), o.detail))
}

fn growth() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let spec = OdeSpec::new(c(2.0), c(0.5), zero(), c(0.3), vec![]).unwrap();
    let hankel = SolutionSpec::new(c(1.0), C64::new(0.0, 1.0), spec);
    let struve = SolutionSpec::struve(c(0.3), c(1.0), c(1.0)).unwrap();
    for (name, sol) in [("Hankel", hankel), ("Struve", struve)] {
        let g = growth_probe(&sol, 8).unwrap();
        let tail = g.tail.unwrap_or(f64::NAN);
        let rel = (tail / g.expected_if_unbounded - 1.0).abs();
        pass &= rel <= 0.1;
        notes.push(format!("{name} tail {tail:.4} vs {:.4}", g.expected_if_unbounded));
    }
    let mut bounded = 0;
    let mut total = 0;
    for case in 1..=4u8 {
        for p in 0..4u32 {
            let q = quantization_case(case, p, c(1.0)).unwrap();
            if !classify_subnormal(&q.solution).unwrap().is_subnormal() {
                continue;
            }
            total += 1;
            let g = growth_probe(&q.solution, 8).unwrap();
            if g.bounded {
                bounded += 1;
            }
        }
    }
    pass &= bounded == total;
    notes.push(format!("{bounded}/{total} certified subnormal solutions bounded"));
    outcome(pass, notes.join(", "))
}

fn classifier() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut agree = 0;
    let total = 200;
    for k in 0..total {
        let p = rng.gen_range(0..=5u32);
        let nu = rng.gen_range(-3.0..3.0f64);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let mut mu = (2 * p + 1) as f64 - sign * nu;
        let perturbed = k % 2 == 1;
        if perturbed {
            mu += if rng.gen_bool(0.5) { 1e-3 } else { -1e-3 };
        }
        let spec = OdeSpec::new(
            C64::new(rng.gen_range(0.5..3.0), rng.gen_range(-1.0..1.0)),
            C64::new(rng.gen_range(0.2..2.0), rng.gen_range(-0.5..0.5)),
            zero(),
            c(nu),
            vec![Forcing { sigma: C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)), mu: c(mu) }],
        )
        .unwrap();
        let sol = SolutionSpec::new(zero(), zero(), spec);
        let got = match classify_subnormal(&sol) {
            Ok(v) => v.is_subnormal(),
            Err(_) => continue,
        };
        if got != perturbed {
            agree += 1;
        } else {
            eprintln!("    disagreement: mu={mu} nu={nu} constructed terminating={}", !perturbed);
        }
    }
    outcome(agree == total, format!("{agree}/{total} verdicts agree with construction"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("closed-form examples", closed_forms),
        ("quantization table", table_one),
        ("terminating Lommel vs general assembly", terminating),
        ("Lommel equation residual, all regimes", lommel_ode),
        ("continuation engine", continuation),
        ("appendix identities", || suite_line(Suite::Relations, 30)),
        ("growth dichotomy", growth),
        ("subnormal classifier", classifier),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
