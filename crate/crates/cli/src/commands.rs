use crate::num::{complex, num, parse_complex};
use crate::Command;
use crate::{
    EvalArgs, Function, ProbeArgs, ProbeFunction, SpecArgs, TableArgs, VerifyArgs, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE,
    EXIT_VERIFY_FAILED,
};
use lommel::bessel::{bessel_j, bessel_y, hankel1, hankel2};
use lommel::continuation::continue_s;
use lommel::lommel::{lommel_big_s, lommel_small_s};
use lommel::ode::{
    classify_subnormal, growth_probe, ode_residual, quantization_case, solution_string, Forcing, NotSubnormalReason,
    OdeSpec, SolutionSpec, SubnormalVerdict,
};
use lommel::special::{gegenbauer_a, neumann_o, schlafli_s, struve_h, struve_k};
use lommel::verify::{run_suite, Options};
use lommel::{Error, Eval, LogPoint, C64};
use serde_json::{json, Map, Value};
use std::io::Write;

/// Largest `Re w` accepted; beyond it `exp(w)` leaves the double range.
const MAX_LOG_MODULUS: f64 = 700.0;

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

type Outcome = Result<(Value, u8), Failure>;

pub fn run(cmd: Command) -> u8 {
    let result = match cmd {
        Command::Eval(a) if a.csv => return csv(&a),
        Command::Eval(a) => eval(&a),
        Command::Verify(a) => verify(&a),
        Command::Classify(a) => classify(&a),
        Command::Probe(a) => probe(&a),
        Command::Table1(a) => table1(&a),
    };
    match result {
        Ok((v, code)) => {
            print_json(&v);
            code
        }
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> u8 {
    match f {
        Failure::Usage(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Failure::Domain(e) => {
            print_json(&json!({ "error": e.kind(), "message": e.to_string() }));
            EXIT_DOMAIN
        }
    }
}

fn print_json(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{v}");
}

fn need<T: Copy>(v: Option<T>, flag: &str, f: Function) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for --fn {f:?}")))
}

fn checked_point(w: C64) -> Result<LogPoint, Failure> {
    if !w.re.is_finite() || w.re > MAX_LOG_MODULUS {
        return Err(Failure::Domain(Error::Domain(format!("log|zeta| = {} is out of range", w.re))));
    }
    Ok(LogPoint::new(w))
}

fn base_point(a: &EvalArgs) -> Result<LogPoint, Failure> {
    match (a.w, a.zeta) {
        (Some(w), _) => checked_point(w),
        (None, Some(z)) if z == C64::new(0.0, 0.0) => {
            Err(Failure::Domain(Error::Domain("zeta = 0 has no logarithm".into())))
        }
        (None, Some(z)) => checked_point(z.ln()),
        (None, None) => Err(Failure::Usage("one of --w or --zeta is required".into())),
    }
}

fn evaluate(a: &EvalArgs, p: LogPoint) -> Result<Eval, Failure> {
    let f = a.function;
    let shifted = p.branch_shift(a.branch);
    let e = match f {
        Function::J => bessel_j(need(a.nu, "nu", f)?, shifted)?,
        Function::Y => bessel_y(need(a.nu, "nu", f)?, shifted)?,
        Function::H1 => hankel1(need(a.nu, "nu", f)?, shifted)?,
        Function::H2 => hankel2(need(a.nu, "nu", f)?, shifted)?,
        Function::SmallS => lommel_small_s(need(a.mu, "mu", f)?, need(a.nu, "nu", f)?, shifted)?,
        Function::BigS => {
            let (mu, nu) = (need(a.mu, "mu", f)?, need(a.nu, "nu", f)?);
            if a.branch == 0 {
                lommel_big_s(mu, nu, p)?
            } else {
                continue_s(mu, nu, a.branch, p)?
            }
        }
        Function::StruveH => struve_h(need(a.nu, "nu", f)?, shifted)?,
        Function::StruveK => struve_k(need(a.nu, "nu", f)?, shifted)?,
        Function::NeumannO => neumann_o(need(a.n, "n", f)?, shifted),
        Function::GegenbauerA => gegenbauer_a(need(a.n, "n", f)?, need(a.nu, "nu", f)?, shifted)?,
        Function::SchlafliS => schlafli_s(need(a.n, "n", f)?, shifted),
    };
    Ok(e)
}

fn eval(a: &EvalArgs) -> Outcome {
    let e = evaluate(a, base_point(a)?)?;
    Ok((
        json!({
            "value": complex(e.value),
            "abs_err_est": num(e.abs_err_est),
            "terms": e.terms_used,
            "method": e.method.as_str(),
        }),
        EXIT_OK,
    ))
}

fn parse_range(s: &str, flag: &str) -> Result<(f64, f64, usize), Failure> {
    let bad = || Failure::Usage(format!("--{flag} expects START,END,COUNT, got {s:?}"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let a: f64 = parts[0].parse().map_err(|_| bad())?;
    let b: f64 = parts[1].parse().map_err(|_| bad())?;
    let n: usize = parts[2].parse().map_err(|_| bad())?;
    if n == 0 || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    Ok((a, b, n))
}

fn spaced(a: f64, b: f64, n: usize, i: usize) -> f64 {
    if n == 1 {
        a
    } else {
        a + (b - a) * i as f64 / (n - 1) as f64
    }
}

fn csv(a: &EvalArgs) -> u8 {
    let grid = || -> Result<Vec<LogPoint>, Failure> {
        let (r0, r1, nr) = parse_range(a.radii.as_deref().unwrap_or_default(), "radii")?;
        let (t0, t1, nt) = parse_range(a.args.as_deref().unwrap_or_default(), "args")?;
        if r0 <= 0.0 || r1 <= 0.0 {
            return Err(Failure::Usage("--radii must be positive".into()));
        }
        let mut pts = Vec::with_capacity(nr * nt);
        for i in 0..nr {
            let lr = spaced(r0.ln(), r1.ln(), nr, i);
            for j in 0..nt {
                pts.push(LogPoint::new(C64::new(lr, spaced(t0, t1, nt, j))));
            }
        }
        Ok(pts)
    };
    let pts = match grid() {
        Ok(p) => p,
        Err(f) => return report(f),
    };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "re_z,im_z,re_f,im_f,err");
    for p in pts {
        let z = p.zeta();
        let (zr, zi) = (crate::num::g17(z.re), crate::num::g17(z.im));
        match evaluate(a, p) {
            Ok(e) => {
                let g = crate::num::g17;
                let _ = writeln!(out, "{zr},{zi},{},{},{}", g(e.value.re), g(e.value.im), g(e.abs_err_est));
            }
            Err(Failure::Usage(msg)) => {
                drop(out);
                return report(Failure::Usage(msg));
            }
            Err(Failure::Domain(e)) => {
                let _ = writeln!(out, "{zr},{zi},,,{}", e.kind());
            }
        }
    }
    EXIT_OK
}

fn verify(a: &VerifyArgs) -> Outcome {
    if a.samples == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    if let Some(t) = a.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(Failure::Usage("--tol must be a positive number".into()));
        }
    }
    let rep = run_suite(a.suite, Options { samples: a.samples, seed: a.seed, tol: a.tol });
    let worst = match &rep.worst {
        Some(w) => json!({ "case": w.case, "error": num(w.error), "tol": num(w.tol) }),
        None => Value::Null,
    };
    let v = json!({
        "suite": rep.suite,
        "samples": a.samples,
        "seed": a.seed,
        "pass": rep.pass,
        "fail": rep.fail,
        "worst": worst,
        "failures": rep.failures,
    });
    Ok((v, if rep.fail == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED }))
}

fn parse_forcing(s: &str) -> Result<Vec<Forcing>, Failure> {
    let mut out = Vec::new();
    for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (mu, sigma) =
            item.split_once(':').ok_or_else(|| Failure::Usage(format!("forcing term {item:?} must be MU:SIGMA")))?;
        let mu = parse_complex(mu).map_err(Failure::Usage)?;
        let sigma = parse_complex(sigma).map_err(Failure::Usage)?;
        out.push(Forcing { sigma, mu });
    }
    Ok(out)
}

fn solution(a: &SpecArgs) -> Result<SolutionSpec, Failure> {
    let spec = OdeSpec::new(a.l, a.m, a.n, a.nu, parse_forcing(&a.forcing)?)?;
    Ok(SolutionSpec::new(a.a, a.b, spec))
}

fn verdict_json(sol: &SolutionSpec, v: &SubnormalVerdict) -> Value {
    let mut m = Map::new();
    match v {
        SubnormalVerdict::Subnormal { terms } => {
            m.insert("verdict".into(), "subnormal".into());
            m.insert("reason".into(), Value::Null);
            let terms: Vec<Value> = terms
                .iter()
                .map(|t| {
                    json!({
                        "index": t.index,
                        "sigma": complex(t.sigma),
                        "mu": complex(t.lommel.mu),
                        "nu": complex(t.lommel.nu),
                        "p": t.lommel.p,
                        "coeffs": t.lommel.coeffs.iter().map(|&c| complex(c)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            m.insert("terms".into(), Value::Array(terms));
        }
        SubnormalVerdict::NotSubnormal { reason } => {
            m.insert("verdict".into(), "not_subnormal".into());
            let reason = match reason {
                NotSubnormalReason::NonzeroAB => json!({ "kind": "NonzeroAB" }),
                NotSubnormalReason::NonterminatingIndex(j) => json!({ "kind": "NonterminatingIndex", "index": j }),
            };
            m.insert("reason".into(), reason);
            m.insert("terms".into(), Value::Array(Vec::new()));
        }
    }
    m.insert("solution_string".into(), solution_string(sol, v).into());
    Value::Object(m)
}

fn classify(a: &SpecArgs) -> Outcome {
    let sol = solution(a)?;
    let v = classify_subnormal(&sol)?;
    Ok((verdict_json(&sol, &v), EXIT_OK))
}

fn probe(a: &ProbeArgs) -> Outcome {
    let sol = match a.function {
        ProbeFunction::Spec => solution(&a.spec)?,
        ProbeFunction::StruveH => SolutionSpec::struve(a.spec.nu, a.spec.l, a.spec.m)?,
    };
    let g = growth_probe(&sol, a.n_max)?;
    let opt = |x: Option<f64>| x.map(num).unwrap_or(Value::Null);
    let samples: Vec<Value> = g
        .samples
        .iter()
        .map(|s| {
            json!({
                "n": s.n,
                "r_n": num(s.r_n),
                "z_n": complex(s.z_n),
                "log_abs_f": opt(s.log_abs_f),
                "loglogM_over_r": opt(s.loglog_over_r),
                "log_over_r": opt(s.log_over_r),
                "error": s.error,
            })
        })
        .collect();
    let v = json!({
        "samples": samples,
        "tail": opt(g.tail),
        "expected_if_unbounded": num(g.expected_if_unbounded),
        "bounded": g.bounded,
        "bound": num(g.bound),
        "achieved_n": g.achieved_n,
        "c_branch": g.c_branch,
    });
    Ok((v, EXIT_OK))
}

/// Sample points for the table residual check.
const TABLE_POINTS: [C64; 3] = [C64 { re: 0.3, im: 0.0 }, C64 { re: -0.5, im: 1.0 }, C64 { re: 1.2, im: -2.0 }];

/// Residual bound promised for every table row.
const TABLE_RESIDUAL: f64 = 1e-8;

fn table1(a: &TableArgs) -> Outcome {
    let q = quantization_case(a.case, a.p, a.sigma)?;
    let v = classify_subnormal(&q.solution)?;
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for z in TABLE_POINTS {
        let r = ode_residual(&q.solution, z)?;
        worst = worst.max(r);
        rows.push(json!({ "z": complex(z), "residual": num(r) }));
    }
    let out = json!({
        "case": q.case_id,
        "p": q.p,
        "sigma": complex(q.sigma),
        "K": q.k.to_string(),
        "K_value": num(q.k.to_f64()),
        "mu": num(q.mu),
        "nu": num(q.nu),
        "description": q.description,
        "solution_string": solution_string(&q.solution, &v),
        "residual_at": rows,
    });
    Ok((out, if worst <= TABLE_RESIDUAL { EXIT_OK } else { EXIT_VERIFY_FAILED }))
}
