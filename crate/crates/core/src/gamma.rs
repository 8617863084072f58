//! Complex gamma, reciprocal gamma, digamma, trigamma and Pochhammer symbols,
//! plus `sin(pi z)` / `cos(pi z)` with exact argument reduction.

use crate::error::{Error, Result};
use crate::logpoint::C64;
use std::f64::consts::PI;

const POLE_TOL: f64 = 1e-12;
const SHIFT_TO: f64 = 15.0;
const LN_SQRT_2PI: f64 = 0.9189385332046728;

// B_{2k} / (2k (2k-1))
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

// B_{2k} / (2k)
const DIGAMMA_ASY: [f64; 8] =
    [1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0, -3617.0 / 8160.0];

// B_{2k}
const TRIGAMMA_ASY: [f64; 8] =
    [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0];

// Lanczos coefficients for g = 607/128
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
/// Lanczos is used for `Re z >= 1/2` and `|z|` up to this bound.
const LANCZOS_MAX: f64 = 30.0;

/// `(t, series)` with `Gamma(z) = sqrt(2 pi) t^{z-1/2} e^{-t} series`.
fn lanczos_parts(z: C64) -> (C64, C64) {
    let zz = z - 1.0;
    let mut x = C64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (zz + i as f64);
    }
    (zz + LANCZOS_G + 0.5, x)
}

/// `(sin(pi x), cos(pi x))` for real `x`, exact at integers and half-integers.
pub fn sincos_pi_real(x: f64) -> (f64, f64) {
    if !x.is_finite() {
        return (f64::NAN, f64::NAN);
    }
    let n = (2.0 * x).round();
    let f = x - 0.5 * n;
    let (s, c) = (PI * f).sin_cos();
    match (n as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

pub fn sin_pi(z: C64) -> C64 {
    let (s, c) = sincos_pi_real(z.re);
    let y = PI * z.im;
    C64::new(s * y.cosh(), c * y.sinh())
}

pub fn cos_pi(z: C64) -> C64 {
    let (s, c) = sincos_pi_real(z.re);
    let y = PI * z.im;
    C64::new(c * y.cosh(), -s * y.sinh())
}

/// `exp(i pi z)` with exact reduction of the real part.
pub fn exp_i_pi(z: C64) -> C64 {
    let (s, c) = sincos_pi_real(z.re);
    C64::new(c, s) * (-PI * z.im).exp()
}

/// Distance from `z` to the nearest non-positive integer, if that integer is
/// closer than `tol`.
pub fn near_nonpositive_integer(z: C64, tol: f64) -> Option<i64> {
    let n = z.re.round();
    if n <= 0.0 && (z - C64::new(n, 0.0)).norm() < tol {
        Some(n as i64)
    } else {
        None
    }
}

fn check_pole(z: C64) -> Result<()> {
    if near_nonpositive_integer(z, POLE_TOL).is_some() {
        return Err(Error::Pole(z));
    }
    Ok(())
}

fn shift_count(z: C64) -> usize {
    if z.re >= SHIFT_TO {
        0
    } else {
        (SHIFT_TO - z.re).ceil() as usize
    }
}

fn stirling_log_gamma(z: C64) -> C64 {
    let zi = z.inv();
    let z2 = zi * zi;
    let mut corr = C64::new(0.0, 0.0);
    let mut p = zi;
    for c in STIRLING {
        corr += p * c;
        p *= z2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + corr
}

/// Principal branch of `log Gamma(z)`: analytic off the negative real axis,
/// continuous from above on it.
pub fn log_gamma(z: C64) -> Result<C64> {
    check_pole(z)?;
    let n = shift_count(z);
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        let t = z + k as f64;
        // keep the cut approached from above for real negative arguments
        let t = if t.im == 0.0 && t.re < 0.0 { C64::new(t.re, 0.0) } else { t };
        acc += t.ln();
    }
    Ok(stirling_log_gamma(z + n as f64) - acc)
}

pub fn gamma(z: C64) -> Result<C64> {
    check_pole(z)?;
    if z.re < 0.5 {
        let s = sin_pi(z);
        let g = gamma(C64::new(1.0, 0.0) - z)?;
        let d = s * g;
        if d.norm() == 0.0 {
            return Err(Error::Overflow(format!("gamma({z})")));
        }
        return Ok(C64::new(PI, 0.0) / d);
    }
    if z.norm() <= LANCZOS_MAX {
        let (t, x) = lanczos_parts(z);
        return Ok((2.0 * PI).sqrt() * ((z - 0.5) * t.ln() - t).exp() * x);
    }
    let lg = log_gamma(z)?;
    if lg.re > 709.0 {
        return Err(Error::Overflow(format!("gamma({z})")));
    }
    Ok(lg.exp())
}

/// `1 / Gamma(z)`, entire; exactly zero at the non-positive integers.
pub fn rgamma(z: C64) -> C64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return C64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        let one_minus = C64::new(1.0, 0.0) - z;
        if one_minus.norm() <= LANCZOS_MAX {
            let (t, x) = lanczos_parts(one_minus);
            return sin_pi(z) * (2.0 * PI).sqrt() * ((one_minus - 0.5) * t.ln() - t).exp() * x / PI;
        }
        let lg = log_gamma(one_minus).expect("1 - z has positive real part");
        return sin_pi(z) * lg.exp() / PI;
    }
    if z.norm() <= LANCZOS_MAX {
        let (t, x) = lanczos_parts(z);
        return ((0.5 - z) * t.ln() + t).exp() / (x * (2.0 * PI).sqrt());
    }
    let lg = log_gamma(z).expect("positive real part");
    (-lg).exp()
}

pub fn digamma(z: C64) -> Result<C64> {
    check_pole(z)?;
    let n = shift_count(z);
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        acc += (z + k as f64).inv();
    }
    let x = z + n as f64;
    let xi = x.inv();
    let x2 = xi * xi;
    let mut s = C64::new(0.0, 0.0);
    let mut p = x2;
    for c in DIGAMMA_ASY {
        s += p * c;
        p *= x2;
    }
    Ok(x.ln() - 0.5 * xi - s - acc)
}

pub fn trigamma(z: C64) -> Result<C64> {
    check_pole(z)?;
    let n = shift_count(z);
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        let t = (z + k as f64).inv();
        acc += t * t;
    }
    let x = z + n as f64;
    let xi = x.inv();
    let x2 = xi * xi;
    let mut s = xi + 0.5 * x2;
    let mut p = x2 * xi;
    for c in TRIGAMMA_ASY {
        s += p * c;
        p *= x2;
    }
    Ok(s + acc)
}

/// `(psi(z), psi'(z))`.
pub fn polygamma01(z: C64) -> Result<(C64, C64)> {
    Ok((digamma(z)?, trigamma(z)?))
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer(a: C64, n: u32) -> C64 {
    let mut p = C64::new(1.0, 0.0);
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

pub fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
