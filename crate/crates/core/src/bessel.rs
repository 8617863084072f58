//! Bessel functions of complex order on the logarithmic surface.
//!
//! Small and moderate arguments use the ascending series summed in
//! double-double; large arguments use the Hankel expansions on the sheet
//! `|arg| <= pi/2` and the exact sheet-change formulas elsewhere.

use crate::continuation::chebyshev_u;
use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};
use crate::gamma::{cos_pi, exp_i_pi, rgamma, sin_pi};
use crate::logpoint::{logpoint_pow, term_cap, Combo, Eval, LogPoint, Method, C64, I};
use crate::path;
use crate::series::sum_series;
use std::f64::consts::{FRAC_2_PI, LN_2, PI};

const EPS: f64 = f64::EPSILON;
/// Orders closer than this to an integer use the integer-order formula for Y.
pub const INTEGER_ORDER_TOL: f64 = 1e-8;
/// Below this modulus the Hankel expansion is never tried.
const ASYMPTOTIC_FLOOR: f64 = 6.0;
/// Above this modulus the ascending series is not attempted.
const SERIES_CEILING: f64 = 80.0;

pub fn switch_radius(nu: C64) -> f64 {
    18f64.max(nu.norm_sqr() / 2.0)
}

/// Integer `n` with `|nu - n| < tol`.
pub fn nearest_integer(nu: C64, tol: f64) -> Option<i64> {
    let n = nu.re.round();
    if (nu - C64::new(n, 0.0)).norm() < tol {
        Some(n as i64)
    } else {
        None
    }
}

fn is_exact_integer(nu: C64) -> Option<i64> {
    if nu.im == 0.0 && nu.re == nu.re.round() {
        Some(nu.re as i64)
    } else {
        None
    }
}

fn sign_pow(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn half_log(p: LogPoint) -> CDd {
    CDd::from(p.w) - CDd::from_real(Dd::LN_2)
}

/// Ascending series for `J_nu`, valid on every sheet.
pub fn bessel_j_series(nu: C64, p: LogPoint) -> Result<Eval> {
    if let Some(n) = is_exact_integer(nu) {
        if n < 0 {
            return Ok(bessel_j_series(C64::new(-n as f64, 0.0), p)?.scale(C64::new(sign_pow(n), 0.0)));
        }
    }
    let h = p.w - LN_2;
    let q = -(2.0 * h).exp();
    let qd = CDd::from(q);
    let nud = CDd::from(nu);
    let s = sum_series(CDd::ONE, |k| {
        let kk = Dd::new((k + 1) as f64);
        let den = (nud + CDd::from_real(kk)).scale(kk);
        (CDd::ONE, qd / den)
    })?;
    let pref = (nu * h).exp() * rgamma(nu + 1.0);
    let rel_var = EPS * (1.0 + 2.0 * h.norm());
    let value = pref * s.value();
    let err = pref.norm() * (s.err(rel_var) + EPS * (8.0 + (nu * h).norm()) * s.sum.abs());
    Ok(Eval::new(value, err, s.terms, Method::Series))
}

/// `pi * Y_n` for integer `n >= 0` via the logarithmic series.
fn y_integer_series(n: u32, p: LogPoint) -> Result<Eval> {
    let h = p.w - LN_2;
    let l2 = half_log(p).scale(Dd::new(2.0));
    let q = -(2.0 * h).exp();
    let qd = CDd::from(q);
    let mut inv_fact = Dd::ONE;
    let mut harm_n = Dd::ZERO;
    for k in 1..=n {
        inv_fact = inv_fact / Dd::new(k as f64);
        harm_n = harm_n + Dd::new(k as f64).recip();
    }
    // psi(k+1) and psi(n+k+1) carried along in double-double
    let mut psi_k = -Dd::EULER_GAMMA;
    let mut psi_nk = -Dd::EULER_GAMMA + harm_n;
    let nf = n as f64;
    let s = sum_series(CDd::from_real(inv_fact), |k| {
        let c = l2 - CDd::from_real(psi_k + psi_nk);
        let k1 = Dd::new((k + 1) as f64);
        let d = CDd::from_real(k1 * Dd::new(nf + (k + 1) as f64));
        psi_k = psi_k + k1.recip();
        psi_nk = psi_nk + Dd::new(nf + (k + 1) as f64).recip();
        (c, qd / d)
    })?;
    let pref = (nf * h).exp();
    let mut combo = Combo::new();
    let rel_var = EPS * (1.0 + 2.0 * h.norm());
    let main =
        Eval::new(s.value(), s.err(rel_var) + EPS * (4.0 + nf * h.norm()) * s.sum.abs(), s.terms, Method::Series);
    combo.add(pref / PI, &main);
    // finite part: -(1/pi) sum_{k<n} (n-k-1)!/k! (zeta/2)^{2k-n}
    let mut coef = (1..n).fold(1.0, |a, k| a * k as f64);
    for k in 0..n {
        let t = coef * ((2.0 * k as f64 - nf) * h).exp();
        combo.add_exact(-t / PI);
        // (n-k-2)!/(k+1)! from (n-k-1)!/k!
        if k + 1 < n {
            coef /= (nf - k as f64 - 1.0) * (k as f64 + 1.0);
        }
    }
    Ok(combo.finish(Method::Series))
}

/// Ascending-series `Y_nu` (quotient form away from integers).
pub fn bessel_y_series(nu: C64, p: LogPoint) -> Result<Eval> {
    if let Some(n) = nearest_integer(nu, INTEGER_ORDER_TOL) {
        let y = y_integer_series(n.unsigned_abs() as u32, p)?;
        let y = if n < 0 { y.scale(C64::new(sign_pow(n), 0.0)) } else { y };
        let delta = (nu - C64::new(n as f64, 0.0)).norm();
        if delta == 0.0 {
            return Ok(y);
        }
        let j = bessel_j_series(C64::new(n as f64, 0.0), p)?;
        let extra = delta * (y.value.norm() + j.value.norm()) * (p.w.norm() + 3.0);
        return Ok(Eval { abs_err_est: y.abs_err_est + extra, ..y });
    }
    let jp = bessel_j_series(nu, p)?;
    let jm = bessel_j_series(-nu, p)?;
    let s = sin_pi(nu);
    let c = cos_pi(nu);
    let mut combo = Combo::new();
    combo.add(c / s, &jp).add(-s.inv(), &jm);
    let mut e = combo.finish(Method::Series);
    e.terms_used = jp.terms_used.max(jm.terms_used);
    Ok(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelKind {
    First,
    Second,
}

/// `value = mantissa * exp(exponent)`; keeps Hankel functions usable where
/// they overflow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    pub exponent: C64,
    pub mantissa: C64,
    pub rel_err: f64,
    pub terms: usize,
}

impl Scaled {
    pub fn log_abs(&self) -> f64 {
        self.exponent.re + self.mantissa.norm().ln()
    }

    pub fn to_eval(&self) -> Result<Eval> {
        if self.exponent.re > 700.0 {
            return Err(Error::Overflow("Hankel function magnitude".into()));
        }
        let v = self.mantissa * self.exponent.exp();
        let err = v.norm() * (self.rel_err + 4.0 * EPS * (1.0 + self.exponent.norm()));
        Ok(Eval::new(v, err, self.terms, Method::Asymptotic))
    }
}

/// Hankel expansion with optimal truncation. Meant for `|arg zeta| <= pi/2`
/// where both expansions are accurate.
pub fn hankel_asymptotic_scaled(kind: HankelKind, nu: C64, p: LogPoint) -> Scaled {
    let zeta = p.zeta();
    let (sgn, phase) = match kind {
        HankelKind::First => (1.0, exp_i_pi(-nu / 2.0 - 0.25)),
        HankelKind::Second => (-1.0, exp_i_pi(nu / 2.0 + 0.25)),
    };
    let two_i_zeta = I * (2.0 * sgn) * zeta;
    let cap = term_cap();
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    let mut last = 1.0f64;
    let mut err = 0.0;
    let mut used = 1;
    for k in 0..cap {
        let kf = k as f64;
        let next = term * (0.5 - nu + kf) * (0.5 + nu + kf) / ((kf + 1.0) * two_i_zeta);
        let a = next.norm();
        if a == 0.0 {
            err = 0.0;
            break;
        }
        if a > last {
            err = last;
            break;
        }
        sum += next;
        term = next;
        last = a;
        used = k + 2;
        if a <= 0.25 * EPS * sum.norm() {
            err = a;
            break;
        }
        err = a;
    }
    let pref = logpoint_pow(p, C64::new(-0.5, 0.0)) * FRAC_2_PI.sqrt() * phase;
    Scaled {
        exponent: I * sgn * zeta,
        mantissa: pref * sum,
        rel_err: err / sum.norm() + 2.0 * EPS * used as f64,
        terms: used,
    }
}

pub fn hankel_asymptotic(kind: HankelKind, nu: C64, p: LogPoint) -> Result<Eval> {
    hankel_asymptotic_scaled(kind, nu, p).to_eval()
}

/// `J_nu(zeta e^{k pi i})` from `J_nu(zeta)`.
pub fn bessel_j_rotated(nu: C64, k: i64, j: C64) -> C64 {
    exp_i_pi(nu * k as f64) * j
}

/// `Y_nu(zeta e^{k pi i})` from `J_nu(zeta)` and `Y_nu(zeta)`; the integer
/// orders come out of the same expression because `sin(k nu pi) cot(nu pi)`
/// is written as `U_{k-1}(cos nu pi) cos(nu pi)`.
pub fn bessel_y_rotated(nu: C64, k: i64, j: C64, y: C64) -> C64 {
    let u = chebyshev_u(k - 1, nu);
    exp_i_pi(-nu * k as f64) * y + 2.0 * I * u * cos_pi(nu) * j
}

/// `(a, b, c, d)` with `H1(zeta e^{k pi i}) = a H1 + b H2` and
/// `H2(zeta e^{k pi i}) = c H1 + d H2`; Chebyshev values keep integer
/// orders finite.
pub fn hankel_continuation_coeffs(k: i64, nu: C64) -> (C64, C64, C64, C64) {
    let uk1 = chebyshev_u(k - 1, nu);
    (chebyshev_u(-k, nu), -exp_i_pi(-nu) * uk1, exp_i_pi(nu) * uk1, chebyshev_u(k, nu))
}

/// `(H1, H2)(zeta e^{k pi i})` from the pair at `zeta`.
pub fn hankel_rotated(nu: C64, k: i64, h1: C64, h2: C64) -> (C64, C64) {
    let (a, b, c, d) = hankel_continuation_coeffs(k, nu);
    (a * h1 + b * h2, c * h1 + d * h2)
}

fn rotate_pair(nu: C64, k: i64, h1: &Eval, h2: &Eval) -> (Eval, Eval) {
    if k == 0 {
        return (*h1, *h2);
    }
    let (a, b, c, d) = hankel_continuation_coeffs(k, nu);
    let mut x = Combo::new();
    x.add(a, h1).add(b, h2);
    let mut y = Combo::new();
    y.add(c, h1).add(d, h2);
    (x.finish(Method::Continuation), y.finish(Method::Continuation))
}

fn hankel_pair_asymptotic(nu: C64, p: LogPoint) -> Result<(Eval, Eval)> {
    let (m, p0) = p.reduce_half_plane();
    let h1 = hankel_asymptotic(HankelKind::First, nu, p0)?;
    let h2 = hankel_asymptotic(HankelKind::Second, nu, p0)?;
    Ok(rotate_pair(nu, -m, &h1, &h2))
}

fn hankel_pair_series(nu: C64, p: LogPoint) -> Result<(Eval, Eval)> {
    let j = bessel_j_series(nu, p)?;
    let y = bessel_y_series(nu, p)?;
    let mut a = Combo::new();
    a.add(C64::new(1.0, 0.0), &j).add(I, &y);
    let mut b = Combo::new();
    b.add(C64::new(1.0, 0.0), &j).add(-I, &y);
    Ok((a.finish(Method::Series), b.finish(Method::Series)))
}

fn better(a: Eval, b: Eval) -> Eval {
    if b.abs_err_est < a.abs_err_est {
        b
    } else {
        a
    }
}

/// The Hankel function that is small at `p` (first kind above the real
/// axis), integrated in from the asymptotic region at the height of `p`.
fn hankel_path(kind: HankelKind, nu: C64, p: LogPoint) -> Result<Eval> {
    let start = path::start_for(p).ok_or_else(|| Error::Domain("path not applicable".into()))?;
    let ps = LogPoint::from_zeta(start);
    let h = hankel_asymptotic(kind, nu, ps)?;
    let hm = hankel_asymptotic(kind, nu - 1.0, ps)?;
    let dh = hm.value - nu / start * h.value;
    let end = path::continue_along(nu, None, start, h.value, dh, h.abs_err_est + hm.abs_err_est, p.zeta())?;
    Ok(path::to_eval(&end))
}

/// Replaces the recessive member of the pair when the path does better.
fn improve_recessive(pair: (Eval, Eval), nu: C64, p: LogPoint) -> (Eval, Eval) {
    let (h1, h2) = pair;
    let upper = p.zeta().im > 0.0;
    let weak = if upper { h1 } else { h2 };
    if weak.relative_err() <= 1e-13 {
        return (h1, h2);
    }
    let kind = if upper { HankelKind::First } else { HankelKind::Second };
    match hankel_path(kind, nu, p) {
        Ok(e) if e.abs_err_est < weak.abs_err_est => {
            if upper {
                (e, h2)
            } else {
                (h1, e)
            }
        }
        _ => (h1, h2),
    }
}

/// Both Hankel functions, each from whichever route has the smaller error.
pub fn hankel_pair(nu: C64, p: LogPoint) -> Result<(Eval, Eval)> {
    Ok(improve_recessive(hankel_pair_direct(nu, p)?, nu, p))
}

fn hankel_pair_direct(nu: C64, p: LogPoint) -> Result<(Eval, Eval)> {
    let r = p.modulus();
    if r >= switch_radius(nu) {
        let asy = hankel_pair_asymptotic(nu, p)?;
        let worst = asy.0.relative_err().max(asy.1.relative_err());
        if worst > 1e-13 && r < SERIES_CEILING {
            if let Ok(ser) = hankel_pair_series(nu, p) {
                return Ok((better(asy.0, ser.0), better(asy.1, ser.1)));
            }
        }
        return Ok(asy);
    }
    let ser = hankel_pair_series(nu, p)?;
    if r >= ASYMPTOTIC_FLOOR {
        if let Ok(asy) = hankel_pair_asymptotic(nu, p) {
            return Ok((better(ser.0, asy.0), better(ser.1, asy.1)));
        }
    }
    Ok(ser)
}

pub fn hankel1(nu: C64, p: LogPoint) -> Result<Eval> {
    Ok(hankel_pair(nu, p)?.0)
}

pub fn hankel2(nu: C64, p: LogPoint) -> Result<Eval> {
    Ok(hankel_pair(nu, p)?.1)
}

pub fn bessel_j(nu: C64, p: LogPoint) -> Result<Eval> {
    let r = p.modulus();
    if r < switch_radius(nu) {
        return bessel_j_series(nu, p);
    }
    let (m, p0) = p.reduce_half_plane();
    let h1 = hankel_asymptotic(HankelKind::First, nu, p0)?;
    let h2 = hankel_asymptotic(HankelKind::Second, nu, p0)?;
    let mut c = Combo::new();
    let f = exp_i_pi(-nu * m as f64) * 0.5;
    c.add(f, &h1).add(f, &h2);
    let asy = c.finish(if m == 0 { Method::Asymptotic } else { Method::Continuation });
    if asy.relative_err() > 1e-13 && r < SERIES_CEILING {
        if let Ok(s) = bessel_j_series(nu, p) {
            return Ok(better(asy, s));
        }
    }
    Ok(asy)
}

pub fn bessel_y(nu: C64, p: LogPoint) -> Result<Eval> {
    let r = p.modulus();
    if r < switch_radius(nu) {
        return bessel_y_series(nu, p);
    }
    let (h1, h2) = hankel_pair(nu, p)?;
    let mut c = Combo::new();
    c.add(-0.5 * I, &h1).add(0.5 * I, &h2);
    Ok(c.finish(h1.method))
}

/// `d/dzeta H_0^{(kind)} = -H_1^{(kind)}`.
pub fn hankel_order01_derivative(kind: HankelKind, p: LogPoint) -> Result<Eval> {
    let (h1, h2) = hankel_pair(C64::new(1.0, 0.0), p)?;
    let h = match kind {
        HankelKind::First => h1,
        HankelKind::Second => h2,
    };
    Ok(h.scale(C64::new(-1.0, 0.0)))
}

/// `(J_nu, Y_nu)` in one call.
pub fn bessel_jy(nu: C64, p: LogPoint) -> Result<(Eval, Eval)> {
    Ok((bessel_j(nu, p)?, bessel_y(nu, p)?))
}
