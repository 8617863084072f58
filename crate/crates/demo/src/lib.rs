//! Browser bindings for a few evaluations. Each call returns
//! `[re, im, abs_err_est]` or an error message.

use lommel::bessel::bessel_j;
use lommel::continuation::continue_s;
use lommel::ode::{classify_subnormal, ode_residual, quantization_case, solution_string};
use lommel::{Eval, LogPoint, C64};
use wasm_bindgen::prelude::*;

fn point(z_re: f64, z_im: f64) -> Result<LogPoint, String> {
    let z = C64::new(z_re, z_im);
    if !z.is_finite() || z == C64::new(0.0, 0.0) {
        return Err("zeta must be finite and nonzero".into());
    }
    Ok(LogPoint::from_zeta(z))
}

fn triple(e: Eval) -> Vec<f64> {
    vec![e.value.re, e.value.im, e.abs_err_est]
}

/// `S_{mu,nu}(zeta e^{-branch pi i})`.
#[wasm_bindgen]
pub fn lommel_s(
    mu_re: f64,
    mu_im: f64,
    nu_re: f64,
    nu_im: f64,
    z_re: f64,
    z_im: f64,
    branch: i32,
) -> Result<Vec<f64>, String> {
    let p = point(z_re, z_im)?;
    let e = continue_s(C64::new(mu_re, mu_im), C64::new(nu_re, nu_im), branch as i64, p).map_err(|e| e.to_string())?;
    Ok(triple(e))
}

/// `J_nu(zeta)` on the principal sheet.
#[wasm_bindgen]
pub fn bessel(nu_re: f64, nu_im: f64, z_re: f64, z_im: f64) -> Result<Vec<f64>, String> {
    let e = bessel_j(C64::new(nu_re, nu_im), point(z_re, z_im)?).map_err(|e| e.to_string())?;
    Ok(triple(e))
}

/// One quantization-table row as display text: K, the closed form and
/// the worst ODE residual at three points.
#[wasm_bindgen]
pub fn table_row(case_id: u8, p: u32) -> Result<String, String> {
    let q = quantization_case(case_id, p, C64::new(1.0, 0.0)).map_err(|e| e.to_string())?;
    let v = classify_subnormal(&q.solution).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for z in [C64::new(0.3, 0.0), C64::new(-0.5, 1.0), C64::new(1.2, -2.0)] {
        worst = worst.max(ode_residual(&q.solution, z).map_err(|e| e.to_string())?);
    }
    Ok(format!("K = {}\n{}\n{}\nmax residual {:.2e}", q.k, q.description, solution_string(&q.solution, &v), worst))
}
