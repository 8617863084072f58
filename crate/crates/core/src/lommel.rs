//! Lommel functions `s_{mu,nu}` and `S_{mu,nu}` for complex parameters on
//! every sheet of the logarithm.
//!
//! `S` is assembled from `s` and Bessel functions in the generic case, is an
//! explicit finite sum when the asymptotic series terminates, and is built
//! from `S_{nu-1,nu}`, `S_{-1,0}` and their derivatives when `mu +- nu` is an
//! odd negative integer.

use crate::bessel::{bessel_y, hankel_pair, nearest_integer};
use crate::continuation;
use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};
use crate::gamma::{digamma, factorial, gamma, pochhammer, rgamma, sin_pi};
use crate::logpoint::{logpoint_pow, term_cap, Combo, Eval, LogPoint, Method, C64};
use crate::path;
use crate::series::sum_series;
use std::f64::consts::{LN_2, PI};

const EPS: f64 = f64::EPSILON;
/// Parameters within this distance of an odd integer belong to the special
/// regimes.
pub const REGIME_TOL: f64 = 1e-10;
/// Below this modulus only the convergent representations are used.
const ASYMPTOTIC_FLOOR: f64 = 10.0;
/// Above this modulus the ascending series are not attempted.
const SERIES_CEILING: f64 = 60.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Regime {
    /// Neither `mu + nu` nor `mu - nu` is an odd integer.
    Generic,
    /// The asymptotic series stops after the `p`-th term.
    Terminating { p: u32 },
    /// `mu = nu_l - 2p - 1` with `nu_l = +-nu`.
    Singular { nu_l: C64, p: u32 },
}

/// Non-negative `p` with `x` within `tol` of `2p+1` (`sign = 1`) or of
/// `-(2p+1)` (`sign = -1`).
fn odd_index(x: C64, sign: f64, tol: f64) -> Option<(u32, f64)> {
    let y = x * sign;
    let k = ((y.re - 1.0) / 2.0).round();
    if k < 0.0 {
        return None;
    }
    let d = (y - C64::new(2.0 * k + 1.0, 0.0)).norm();
    if d < tol {
        Some((k as u32, d))
    } else {
        None
    }
}

pub fn classify_regime(mu: C64, nu: C64) -> Regime {
    classify_regime_tol(mu, nu, REGIME_TOL)
}

pub fn classify_regime_tol(mu: C64, nu: C64, tol: f64) -> Regime {
    let plus = mu + nu;
    let minus = mu - nu;
    let tp = odd_index(plus, 1.0, tol);
    let tm = odd_index(minus, 1.0, tol);
    match (tp, tm) {
        (Some((a, _)), Some((b, _))) => return Regime::Terminating { p: a.min(b) },
        (Some((a, _)), None) | (None, Some((a, _))) => return Regime::Terminating { p: a },
        _ => {}
    }
    let sm = odd_index(minus, -1.0, tol);
    let sp = odd_index(plus, -1.0, tol);
    if let Some(n) = nearest_integer(nu, tol) {
        if sm.is_some() || sp.is_some() {
            // both are odd and negative; use nu_l = -|nu|
            let nl = -(n.abs() as f64);
            let p = ((nl - mu.re - 1.0) / 2.0).round();
            return Regime::Singular { nu_l: C64::new(nl, 0.0), p: p as u32 };
        }
    }
    if let Some((p, _)) = sm {
        return Regime::Singular { nu_l: nu, p };
    }
    if let Some((p, _)) = sp {
        return Regime::Singular { nu_l: -nu, p };
    }
    Regime::Generic
}

/// Distance of the parameters from the boundary of their regime.
fn regime_offset(mu: C64, nu: C64, regime: Regime) -> f64 {
    match regime {
        Regime::Generic => 0.0,
        Regime::Terminating { .. } => {
            let a = odd_index(mu + nu, 1.0, REGIME_TOL).map(|x| x.1).unwrap_or(f64::INFINITY);
            let b = odd_index(mu - nu, 1.0, REGIME_TOL).map(|x| x.1).unwrap_or(f64::INFINITY);
            a.min(b)
        }
        Regime::Singular { nu_l, p } => {
            let snapped_mu = nu_l - (2 * p + 1) as f64;
            let dnu = if nu_l.im == 0.0 && nu_l.re == nu_l.re.round() {
                (nu.norm() - nu_l.norm()).abs().max((nu.im).abs())
            } else {
                0.0
            };
            (mu - snapped_mu).norm().max(dnu)
        }
    }
}

fn denominator(mu: CDd, nu2: CDd, m: usize) -> CDd {
    let a = mu + CDd::from((2 * m + 1) as f64);
    a * a - nu2
}

/// `s_{mu,nu}(zeta) = sum_m (-1)^m zeta^{mu+1+2m} / prod_{k<=m} ((mu+2k+1)^2 - nu^2)`.
pub fn lommel_small_s(mu: C64, nu: C64, p: LogPoint) -> Result<Eval> {
    if odd_index(mu - nu, -1.0, REGIME_TOL).is_some() || odd_index(mu + nu, -1.0, REGIME_TOL).is_some() {
        return Err(Error::SingularParams(format!("s_(mu,nu) undefined for mu={mu}, nu={nu}")));
    }
    let mud = CDd::from(mu);
    let nud = CDd::from(nu);
    let nu2 = nud * nud;
    let d0 = denominator(mud, nu2, 0);
    if d0.abs() == 0.0 {
        return Err(Error::SingularParams(format!("s_(mu,nu) undefined for mu={mu}, nu={nu}")));
    }
    let q = CDd::from(-(2.0 * p.w).exp());
    let s = sum_series(d0.recip(), |m| (CDd::ONE, q / denominator(mud, nu2, m + 1)))?;
    let pref = logpoint_pow(p, mu + 1.0);
    let rel_var = EPS * (1.0 + 2.0 * p.w.norm());
    let value = pref * s.value();
    let err = pref.norm() * (s.err(rel_var) + EPS * (4.0 + ((mu + 1.0) * p.w).norm()) * s.sum.abs());
    Ok(Eval::new(value, err, s.terms, Method::Series))
}

/// `K = 2^{mu-1} Gamma((mu-nu+1)/2) Gamma((mu+nu+1)/2)`.
pub fn lommel_k(mu: C64, nu: C64) -> Result<C64> {
    let a = gamma((mu - nu + 1.0) / 2.0)?;
    let b = gamma((mu + nu + 1.0) / 2.0)?;
    Ok(((mu - 1.0) * LN_2).exp() * a * b)
}

/// `S = s + K [J_nu sin((mu-nu) pi/2) - Y_nu cos((mu-nu) pi/2)]`, forced even
/// when a closed form exists.
pub fn lommel_generic_assembly(mu: C64, nu: C64, p: LogPoint) -> Result<Eval> {
    let s = lommel_small_s(mu, nu, p)?;
    let k = lommel_k(mu, nu)?;
    let half = (mu - nu) / 2.0;
    let sn = sin_pi(half);
    let cs = sin_pi(half + 0.5);
    let j = crate::bessel::bessel_j(nu, p)?;
    let y = bessel_y(nu, p)?;
    let mut c = Combo::new();
    c.add(C64::new(1.0, 0.0), &s).add(k * sn, &j).add(-k * cs, &y);
    Ok(c.finish(Method::Series))
}

/// Coefficients `c_0 = 1`, `c_k = prod_{m=1}^k ((mu-2m+1)^2 - nu^2)`, `k <= p`.
pub fn terminating_coeffs(mu: C64, nu: C64, p: u32) -> Vec<C64> {
    let mut out = Vec::with_capacity(p as usize + 1);
    let mut c = C64::new(1.0, 0.0);
    out.push(c);
    for m in 1..=p {
        let a = mu - (2 * m) as f64 + 1.0;
        c *= a * a - nu * nu;
        out.push(c);
    }
    out
}

/// Closed-form data of `S_{mu,nu}` when `mu + nu` or `mu - nu` is `2p+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TerminatingLommel {
    pub mu: C64,
    pub nu: C64,
    pub p: u32,
    pub coeffs: Vec<C64>,
}

impl TerminatingLommel {
    /// `zeta^{mu-1} sum_k (-1)^k c_k zeta^{-2k}`.
    pub fn eval(&self, p: LogPoint) -> Eval {
        terminating_sum(self.mu, &self.coeffs, p)
    }
}

pub fn terminating_lommel(mu: C64, nu: C64) -> Result<TerminatingLommel> {
    match classify_regime(mu, nu) {
        Regime::Terminating { p } => Ok(TerminatingLommel { mu, nu, p, coeffs: terminating_coeffs(mu, nu, p) }),
        _ => Err(Error::NotTerminating(format!("mu={mu}, nu={nu}"))),
    }
}

/// `S = zeta^{mu-1} sum_{k=0}^p (-1)^k c_k zeta^{-2k}`; requires the
/// terminating regime.
pub fn lommel_terminating(mu: C64, nu: C64, p: LogPoint) -> Result<Eval> {
    Ok(terminating_lommel(mu, nu)?.eval(p))
}

fn terminating_sum(mu: C64, coeffs: &[C64], p: LogPoint) -> Eval {
    let z2inv = (-2.0 * p.w).exp();
    let mut pw = C64::new(1.0, 0.0);
    let mut sum = C64::new(0.0, 0.0);
    let mut mag = 0.0;
    for (k, c) in coeffs.iter().enumerate() {
        let t = if k % 2 == 0 { *c * pw } else { -*c * pw };
        sum += t;
        mag += t.norm();
        pw *= z2inv;
    }
    let pref = logpoint_pow(p, mu - 1.0);
    let v = pref * sum;
    let err = pref.norm() * mag * EPS * (6.0 + 2.0 * coeffs.len() as f64 + ((mu - 1.0) * p.w).norm());
    Eval::new(v, err, coeffs.len(), Method::ClosedForm)
}

/// `S_{mu+2,nu} = zeta^{mu+1} - ((mu+1)^2 - nu^2) S_{mu,nu}`.
pub fn lommel_recurrence_step(mu: C64, nu: C64, s: &Eval, p: LogPoint) -> Eval {
    let a = mu + 1.0;
    let mut c = Combo::new();
    c.add_exact(logpoint_pow(p, a)).add(-(a * a - nu * nu), s);
    c.finish(s.method)
}

/// The asymptotic sum truncated after `zeta^{mu-1-2 order}`; the error
/// estimate is the first omitted term.
pub fn lommel_asymptotic_truncated(mu: C64, nu: C64, p: LogPoint, order: u32) -> Result<Eval> {
    if p.w.im.abs() >= PI {
        return Err(Error::Domain(format!("asymptotic form needs |arg zeta| < pi, got {}", p.w.im)));
    }
    let coeffs = terminating_coeffs(mu, nu, order + 1);
    let mut e = terminating_sum(mu, &coeffs[..=order as usize], p);
    let next = coeffs[order as usize + 1] * logpoint_pow(p, mu - 3.0 - 2.0 * order as f64);
    e.abs_err_est += next.norm();
    e.method = Method::Asymptotic;
    Ok(e)
}

/// Asymptotic series `zeta^{mu-1} sum_k (-1)^k c_k zeta^{-2k}` with optimal
/// truncation; meant for `|arg zeta| <= pi/2`. Also returns
/// `zeta d/dzeta` of the same truncated sum.
pub fn lommel_asymptotic_with_derivative(mu: C64, nu: C64, p: LogPoint) -> (Eval, Eval) {
    let z2inv = (-2.0 * p.w).exp();
    let cap = term_cap();
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    let mut dsum = mu - 1.0;
    let mut last = 1.0f64;
    let mut err = 0.0;
    let mut used = 1;
    for k in 1..cap {
        let a = mu - (2 * k) as f64 + 1.0;
        let next = -term * (a * a - nu * nu) * z2inv;
        let m = next.norm();
        if m == 0.0 {
            err = 0.0;
            break;
        }
        if m > last {
            err = last;
            break;
        }
        sum += next;
        dsum += next * (mu - 1.0 - (2 * k) as f64);
        term = next;
        last = m;
        used = k + 1;
        err = m;
        if m <= 0.25 * EPS * sum.norm() {
            break;
        }
    }
    let pref = logpoint_pow(p, mu - 1.0);
    // the remainder near |arg| = pi/2 is a few times the smallest term
    let rel = 5.0 * err / sum.norm() + EPS * (4.0 + used as f64 + ((mu - 1.0) * p.w).norm());
    let v = pref * sum;
    let dv = pref * dsum;
    let kfac = (mu - 1.0).norm() + 2.0 * used as f64;
    (
        Eval::new(v, rel * v.norm(), used, Method::Asymptotic),
        Eval::new(dv, rel * kfac * v.norm() + rel * dv.norm(), used, Method::Asymptotic),
    )
}

pub fn lommel_asymptotic(mu: C64, nu: C64, p: LogPoint) -> Eval {
    lommel_asymptotic_with_derivative(mu, nu, p).0
}

/// `S_{nu-1,nu}` for `nu` not a non-positive integer, with `log zeta = w`.
pub fn lommel_nu_minus_one(nu: C64, p: LogPoint) -> Result<Eval> {
    if crate::gamma::near_nonpositive_integer(nu, REGIME_TOL).is_some() {
        return Err(Error::Domain(format!("S_(nu-1,nu) at nu={nu} needs the integer route")));
    }
    let h = p.w - LN_2;
    let q = CDd::from(-(2.0 * h).exp());
    let nud = CDd::from(nu);
    let two_w = CDd::from(p.w * 2.0);
    let two_ln2 = CDd::from_real(Dd::LN_2 + Dd::LN_2);
    let mut psi_num = CDd::from(digamma(nu + 1.0)?);
    let mut psi_m = CDd::from_real(-Dd::EULER_GAMMA);
    // (zeta^nu/4) sum_m t_m [2w - A(m)], t_m = (-zeta^2/4)^m/(m! Gamma(nu+m+1)) 2^{-...}
    let s = sum_series(CDd::from(rgamma(nu + 1.0)), |m| {
        let c = two_w - (two_ln2 + psi_num + psi_m);
        let k1 = Dd::new((m + 1) as f64);
        let nk = nud + CDd::from_real(k1);
        psi_num = psi_num + nk.recip();
        psi_m = psi_m + CDd::from_real(k1.recip());
        (c, q / nk.scale(k1))
    })?;
    // (zeta/2)^{2m} zeta^nu / 4 = zeta^nu (-q)^m / 4
    let zn = logpoint_pow(p, nu);
    let rel_var = EPS * (1.0 + 2.0 * h.norm());
    let main =
        Eval::new(s.value(), s.err(rel_var) + EPS * (6.0 + (nu * p.w).norm()) * s.sum.abs(), s.terms, Method::Series);
    let y = bessel_y(nu, p)?;
    let g = gamma(nu)?;
    let two_pow = ((nu - 2.0) * LN_2).exp();
    let mut c = Combo::new();
    c.add(g * zn / 4.0, &main).add(-g * two_pow * PI, &y);
    Ok(c.finish(Method::Series))
}

/// `(S_{-1,0}(zeta), zeta S'_{-1,0}(zeta))` with `log zeta = w`.
pub fn lommel_minus_one_zero(p: LogPoint) -> Result<(Eval, Eval)> {
    let h = p.w - LN_2;
    let q = CDd::from(-(2.0 * h).exp());
    let l = CDd::from(p.w) - CDd::from_real(Dd::LN_2);
    let pi = Dd::PI;
    let pi2_4 = pi * pi / Dd::new(4.0);
    let pi2_6 = Dd { hi: 1.6449340668482264, lo: 3.040672350398476e-17 };
    let coef = |m: usize, psi: Dd, tri: Dd| -> (CDd, CDd) {
        let d = l - CDd::from_real(psi);
        let f = d * d - CDd::from_real(tri / Dd::new(2.0)) + CDd::from_real(pi2_4);
        let g = f.scale(Dd::new(2.0 * m as f64)) + d.scale(Dd::new(2.0));
        (f, g)
    };
    let mut psi = -Dd::EULER_GAMMA;
    let mut tri = pi2_6;
    let s = sum_series(CDd::from(0.5), |m| {
        let (f, _) = coef(m, psi, tri);
        let k1 = Dd::new((m + 1) as f64);
        psi = psi + k1.recip();
        tri = tri - (k1 * k1).recip();
        (f, q / CDd::from_real(k1 * k1))
    })?;
    let mut psi = -Dd::EULER_GAMMA;
    let mut tri = pi2_6;
    let ds = sum_series(CDd::from(0.5), |m| {
        let (_, g) = coef(m, psi, tri);
        let k1 = Dd::new((m + 1) as f64);
        psi = psi + k1.recip();
        tri = tri - (k1 * k1).recip();
        (g, q / CDd::from_real(k1 * k1))
    })?;
    let rel_var = EPS * (1.0 + 2.0 * h.norm());
    let lw = 4.0 + 2.0 * h.norm();
    Ok((
        Eval::new(s.value(), s.err(rel_var) * lw, s.terms, Method::Series),
        Eval::new(ds.value(), ds.err(rel_var) * lw, ds.terms, Method::Series),
    ))
}

/// Polynomial with real coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn eval(&self, z: C64) -> C64 {
        self.0.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Sum of `|c_k| |z|^k`, a bound on rounding in `eval`.
    pub fn eval_abs(&self, r: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * r + c.abs())
    }

    pub fn odd_part(&self) -> Poly {
        Poly(self.0.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { c } else { 0.0 }).collect())
    }

    /// `P(zeta e^{-m pi i}) = P(zeta) - delta_m Phat(zeta)`.
    pub fn rotated(&self, m: i64) -> Poly {
        if m.rem_euclid(2) == 0 {
            return self.clone();
        }
        Poly(self.0.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { -c } else { c }).collect())
    }

    fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|k| self.0.get(k).copied().unwrap_or(0.0) + o.0.get(k).copied().unwrap_or(0.0)).collect())
    }

    fn scale(&self, s: f64) -> Poly {
        Poly(self.0.iter().map(|c| c * s).collect())
    }

    /// `zeta d/dzeta`.
    fn euler(&self) -> Poly {
        Poly(self.0.iter().enumerate().map(|(k, c)| c * k as f64).collect())
    }

    fn shift(&self, k: usize) -> Poly {
        let mut v = vec![0.0; k];
        v.extend_from_slice(&self.0);
        Poly(v)
    }
}

/// Polynomials `A_n, B_n, C_n` with
/// `S_{-n-1,-n} = (-1)^n zeta^{-n} / (2^n n!) [A_n + B_n S_{-1,0} + zeta C_n S'_{-1,0}]`.
pub fn abc_polynomials(n: u32) -> (Poly, Poly, Poly) {
    assert!(n >= 1);
    let mut a = Poly(vec![0.0]);
    let mut b = Poly(vec![0.0]);
    let mut c = Poly(vec![1.0]);
    for k in 2..=n {
        let f = -2.0 * (k - 1) as f64;
        let a2 = a.scale(f).add(&a.euler()).add(&c);
        let b2 = b.scale(f).add(&b.euler()).add(&c.shift(2).scale(-1.0));
        let c2 = c.scale(f).add(&b).add(&c.euler());
        a = a2;
        b = b2;
        c = c2;
    }
    (a, b, c)
}

/// `S_{-n-1,-n}` for `n >= 1`.
pub fn lommel_negative_integer(n: u32, p: LogPoint) -> Result<Eval> {
    let (s, ds) = lommel_minus_one_zero(p)?;
    Ok(negative_integer_from(n, p, &s, &ds))
}

pub(crate) fn negative_integer_from(n: u32, p: LogPoint, s: &Eval, ds: &Eval) -> Eval {
    let (a, b, c) = abc_polynomials(n);
    let z = p.zeta();
    let r = z.norm();
    let pref = logpoint_pow(p, C64::new(-(n as f64), 0.0)) * (sign(n as i64) / (2f64.powi(n as i32) * factorial(n)));
    let mut combo = Combo::new();
    combo.add_exact(pref * a.eval(z));
    combo.add(pref * b.eval(z), s).add(pref * c.eval(z), ds);
    combo.err +=
        pref.norm() * EPS * (a.eval_abs(r) + b.eval_abs(r) * s.value.norm() + c.eval_abs(r) * ds.value.norm()) * 4.0;
    combo.finish(Method::Series)
}

fn sign(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Base of the singular ladder, `S_{nu_l-1,nu_l}`.
pub fn singular_base(nu_l: C64, p: LogPoint) -> Result<Eval> {
    match nearest_integer(nu_l, REGIME_TOL) {
        Some(0) => Ok(lommel_minus_one_zero(p)?.0),
        Some(n) if n < 0 => lommel_negative_integer((-n) as u32, p),
        _ => lommel_nu_minus_one(nu_l, p),
    }
}

/// Finite part and base coefficient of the ladder
/// `S_{nu-2p-1,nu} = sum_{m<p} (...) + coef * S_{nu-1,nu}`.
pub(crate) fn ladder_parts(nu_l: C64, pl: u32, p: LogPoint) -> Result<(C64, f64, C64)> {
    let one = C64::new(1.0, 0.0);
    let poch = pochhammer(one - nu_l, pl);
    if poch.norm() == 0.0 {
        return Err(Error::SingularParams(format!("ladder from nu={nu_l} with p={pl}")));
    }
    let coef = sign(pl as i64) / (4f64.powi(pl as i32) * factorial(pl)) / poch;
    let mut fin = C64::new(0.0, 0.0);
    let mut mag = 0.0;
    let pf = pl as f64;
    for m in 0..pl {
        let den = 4f64.powi(m as i32 + 1) * pochhammer(C64::new(-pf, 0.0), m + 1) * pochhammer(nu_l - pf, m + 1);
        let t = logpoint_pow(p, nu_l - 2.0 * pf + 2.0 * m as f64) / den * sign(m as i64);
        fin += t;
        mag += t.norm();
    }
    Ok((fin, mag, coef))
}

/// `S_{nu_l-2p-1,nu_l}` on the singular ladder.
pub fn lommel_singular(nu_l: C64, pl: u32, p: LogPoint) -> Result<Eval> {
    let base = singular_base(nu_l, p)?;
    let (fin, mag, coef) = ladder_parts(nu_l, pl, p)?;
    let mut c = Combo::new();
    c.add(coef, &base);
    c.value += fin;
    c.mag += mag;
    Ok(c.finish(Method::Series))
}

/// Candidate built from the asymptotic series on the nearest sheet with
/// `|arg| <= pi/2`, carried over by the continuation formulas.
fn large_argument(mu: C64, nu: C64, regime: Regime, p: LogPoint) -> Result<Eval> {
    let (m, p0) = p.reduce_half_plane();
    if m == 0 {
        return Ok(lommel_asymptotic(mu, nu, p0));
    }
    let base = lommel_asymptotic_with_derivative(mu, nu, p0);
    let e = continuation::continue_from_base(mu, nu, regime, m, p0, &base.0, &mut |k| match k {
        continuation::Aux::Hankel(order) => {
            let (a, b) = hankel_pair(order, p0)?;
            Ok(vec![a, b])
        }
        continuation::Aux::MinusOneZero => {
            let (s, ds) = lommel_asymptotic_with_derivative(C64::new(-1.0, 0.0), C64::new(0.0, 0.0), p0);
            Ok(vec![s, ds])
        }
    })?;
    Ok(Eval { method: Method::Continuation, ..e })
}

fn pick(a: Result<Eval>, b: Result<Eval>) -> Result<Eval> {
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(if y.abs_err_est < x.abs_err_est { y } else { x }),
        (Ok(x), Err(_)) => Ok(x),
        (Err(_), Ok(y)) => Ok(y),
        (Err(e), Err(_)) => Err(e),
    }
}

/// Candidate from the asymptotic series at `|zeta| = PATH_START`, carried
/// horizontally to `p` by integrating the equation.
pub fn lommel_path(mu: C64, nu: C64, p: LogPoint) -> Result<Eval> {
    let start = path::start_for(p).ok_or_else(|| Error::Domain("path not applicable".into()))?;
    let (s, zds) = lommel_asymptotic_with_derivative(mu, nu, LogPoint::from_zeta(start));
    let end = path::continue_along(nu, Some(mu), start, s.value, zds.value / start, s.abs_err_est, p.zeta())?;
    Ok(path::to_eval(&end))
}

fn with_path(best: Result<Eval>, mu: C64, nu: C64, p: LogPoint) -> Result<Eval> {
    match &best {
        Ok(e) if e.relative_err() <= 1e-13 => best,
        _ => pick(best, lommel_path(mu, nu, p)),
    }
}

/// `S_{mu,nu}(zeta)` in every regime.
pub fn lommel_big_s(mu: C64, nu: C64, p: LogPoint) -> Result<Eval> {
    let regime = classify_regime(mu, nu);
    let r = p.modulus();
    let off = regime_offset(mu, nu, regime);
    match regime {
        Regime::Terminating { p: pc } => {
            if off == 0.0 {
                return Ok(terminating_sum(mu, &terminating_coeffs(mu, nu, pc), p));
            }
            let conv = if r < SERIES_CEILING {
                lommel_generic_assembly(mu, nu, p)
            } else {
                Err(Error::Domain("large".into()))
            };
            let best =
                if r >= ASYMPTOTIC_FLOOR { pick(conv, large_argument(mu, nu, Regime::Generic, p)) } else { conv };
            with_path(best, mu, nu, p)
        }
        Regime::Singular { nu_l, p: pl } => {
            let snapped_mu = nu_l - (2 * pl + 1) as f64;
            let conv =
                if r < SERIES_CEILING { lommel_singular(nu_l, pl, p) } else { Err(Error::Domain("large".into())) };
            let best =
                if r >= ASYMPTOTIC_FLOOR { pick(conv, large_argument(snapped_mu, nu_l, regime, p)) } else { conv };
            let best = with_path(best, snapped_mu, nu_l, p)?;
            if off > 0.0 {
                let extra = off * best.value.norm() * (p.w.norm() + 10.0);
                return Ok(Eval { abs_err_est: best.abs_err_est + extra, ..best });
            }
            Ok(best)
        }
        Regime::Generic => {
            let conv = if r < SERIES_CEILING {
                lommel_generic_assembly(mu, nu, p)
            } else {
                Err(Error::Domain("large".into()))
            };
            let best = if r >= ASYMPTOTIC_FLOOR { pick(conv, large_argument(mu, nu, regime, p)) } else { conv };
            with_path(best, mu, nu, p)
        }
    }
}
