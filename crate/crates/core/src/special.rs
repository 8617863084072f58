//! Neumann, Gegenbauer and Schläfli polynomials and the Struve functions
//! `H_nu`, `K_nu`.

use crate::bessel::{bessel_j, bessel_y};
use crate::dd::CDd;
use crate::error::{Error, Result};
use crate::gamma::{factorial, gamma, rgamma};
use crate::logpoint::{logpoint_pow, Combo, Eval, LogPoint, Method, C64};
use crate::lommel::{classify_regime, lommel_big_s, Regime};
use crate::series::sum_series;
use std::f64::consts::{LN_2, PI};

const EPS: f64 = f64::EPSILON;
/// Below this modulus the Struve series is always used.
const STRUVE_SERIES_ONLY: f64 = 10.0;

/// Sums `coef_k * zeta^{pow_k}` exactly as written, with rounding bound.
fn power_sum(p: LogPoint, terms: impl Iterator<Item = (C64, f64)>) -> Eval {
    let mut c = Combo::new();
    let mut n = 0;
    for (coef, pow) in terms {
        let t = coef * logpoint_pow(p, C64::new(pow, 0.0));
        c.add_exact(t);
        n += 1;
    }
    Eval { terms_used: n, ..c.finish(Method::ClosedForm) }
}

/// Neumann polynomial `O_n`, a polynomial in `1/zeta`.
pub fn neumann_o(n: u32, p: LogPoint) -> Eval {
    if n == 0 {
        return power_sum(p, std::iter::once((C64::new(1.0, 0.0), -1.0)));
    }
    let nf = n as f64;
    let terms = (0..=n).filter(|m| (m + n).is_multiple_of(2)).map(move |m| {
        let mf = m as f64;
        // Gamma((n+m)/2) / Gamma((n-m)/2 + 1), both at integers
        let a = factorial((n + m) / 2 - 1);
        let b = factorial((n - m) / 2);
        let coef = 0.25 * nf * a / b * 2f64.powi(m as i32 + 1);
        (C64::new(coef, 0.0), -mf - 1.0)
    });
    power_sum(p, terms)
}

/// Gegenbauer polynomial
/// `A_{n,nu} = 2^{nu+n} (nu+n) / zeta^{n+1} sum_{m <= n/2} Gamma(nu+n-m)/m! (zeta/2)^{2m}`.
pub fn gegenbauer_a(n: u32, nu: C64, p: LogPoint) -> Result<Eval> {
    let base = nu + n as f64;
    let pref = (base * LN_2).exp();
    let mut out = Vec::new();
    for m in 0..=n / 2 {
        let g = if m == 0 && base.norm() < 1e-12 {
            // (nu+n) Gamma(nu+n) -> Gamma(nu+n+1) = 1
            C64::new(1.0, 0.0)
        } else {
            base * gamma(base - m as f64)?
        };
        let coef = pref * g / factorial(m) / 4f64.powi(m as i32);
        out.push((coef, 2.0 * m as f64 - n as f64 - 1.0));
    }
    Ok(power_sum(p, out.into_iter()))
}

/// Schläfli polynomial `S_n`; `S_0 = 0`.
pub fn schlafli_s(n: u32, p: LogPoint) -> Eval {
    let half = n / 2;
    if n.is_multiple_of(2) {
        let terms = (1..=half).map(move |m| {
            let coef = factorial(half + m - 1) / factorial(half - m) * 4f64.powi(m as i32);
            (C64::new(coef, 0.0), -2.0 * m as f64)
        });
        power_sum(p, terms)
    } else {
        let terms = (0..=half).map(move |m| {
            let coef = factorial(half + m) / factorial(half - m) * 2f64.powi(2 * m as i32 + 1);
            (C64::new(coef, 0.0), -2.0 * m as f64 - 1.0)
        });
        power_sum(p, terms)
    }
}

/// `nu = -n - 1/2` for a non-negative integer `n`.
fn negative_half_integer(nu: C64) -> Option<u32> {
    let x = -nu.re - 0.5;
    let n = x.round();
    if n >= 0.0 && (nu + (n + 0.5)).norm() < 1e-12 {
        Some(n as u32)
    } else {
        None
    }
}

/// `2^{1-nu} / (sqrt(pi) Gamma(nu + 1/2))`, zero at the poles.
pub fn struve_sigma(nu: C64) -> C64 {
    ((1.0 - nu) * LN_2).exp() * rgamma(nu + 0.5) / PI.sqrt()
}

fn struve_h_series(nu: C64, p: LogPoint) -> Result<Eval> {
    let h = p.w - LN_2;
    let q = CDd::from(-(2.0 * h).exp());
    let nud = CDd::from(nu);
    let first = CDd::from(rgamma(C64::new(1.5, 0.0)) * rgamma(nu + 1.5));
    let s = sum_series(first, |m| {
        let a = CDd::from(m as f64 + 1.5);
        (CDd::ONE, q / (a * (nud + a)))
    })?;
    let pref = ((nu + 1.0) * h).exp();
    let rel_var = EPS * (1.0 + 2.0 * h.norm());
    let err = pref.norm() * (s.err(rel_var) + EPS * (4.0 + ((nu + 1.0) * h).norm()) * s.sum.abs());
    Ok(Eval::new(pref * s.value(), err, s.terms, Method::Series))
}

/// Struve function `H_nu`.
pub fn struve_h(nu: C64, p: LogPoint) -> Result<Eval> {
    if let Some(n) = negative_half_integer(nu) {
        let j = bessel_j(C64::new(n as f64 + 0.5, 0.0), p)?;
        return Ok(if n % 2 == 0 { j } else { j.scale(C64::new(-1.0, 0.0)) });
    }
    let series = struve_h_series(nu, p);
    if p.modulus() < STRUVE_SERIES_ONLY {
        return series;
    }
    let via_lommel = (|| {
        let y = bessel_y(nu, p)?;
        let s = lommel_big_s(nu, nu, p)?;
        let mut c = Combo::new();
        c.add(C64::new(1.0, 0.0), &y).add(struve_sigma(nu), &s);
        Ok::<Eval, Error>(c.finish(s.method))
    })();
    match (series, via_lommel) {
        (Ok(a), Ok(b)) => Ok(if b.abs_err_est < a.abs_err_est { b } else { a }),
        (Ok(a), Err(_)) => Ok(a),
        (Err(_), Ok(b)) => Ok(b),
        (Err(e), Err(_)) => Err(e),
    }
}

/// `K_nu = H_nu - Y_nu`, computed as `2^{1-nu}/(sqrt(pi) Gamma(nu+1/2)) S_{nu,nu}`
/// so that nothing cancels at large arguments.
pub fn struve_k(nu: C64, p: LogPoint) -> Result<Eval> {
    if negative_half_integer(nu).is_some() || matches!(classify_regime(nu, nu), Regime::Singular { .. }) {
        let h = struve_h(nu, p)?;
        let y = bessel_y(nu, p)?;
        let mut c = Combo::new();
        c.add(C64::new(1.0, 0.0), &h).add(C64::new(-1.0, 0.0), &y);
        return Ok(c.finish(Method::Series));
    }
    let s = lommel_big_s(nu, nu, p)?;
    Ok(s.scale(struve_sigma(nu)))
}
