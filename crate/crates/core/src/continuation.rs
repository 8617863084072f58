//! Analytic continuation of Lommel functions across sheets.
//!
//! Every formula here maps values at `zeta` to values at `zeta e^{-m pi i}`.

use crate::bessel::{hankel_pair, nearest_integer};
use crate::error::{Error, Result};
use crate::gamma::{cos_pi, exp_i_pi, factorial, gamma, pochhammer};
use crate::logpoint::{logpoint_pow, Combo, Eval, LogPoint, Method, C64, I};
use crate::lommel::{
    abc_polynomials, classify_regime, lommel_asymptotic_with_derivative, lommel_big_s, lommel_k, lommel_minus_one_zero,
    Poly, Regime, REGIME_TOL,
};
use std::f64::consts::PI;

/// A denominator factor smaller than this makes the closed P/Q forms
/// unusable.
pub const DEGENERATE_TOL: f64 = 1e-6;
/// Beyond this modulus `S_{-1,0}` is taken from its asymptotic series.
const MINUS_ONE_ZERO_SERIES_MAX: f64 = 30.0;

/// Chebyshev polynomial of the second kind `U_k(cos nu pi)` for any integer
/// `k`, with `U_{-1} = 0` and `U_{-k} = -U_{k-2}`.
pub fn chebyshev_u(k: i64, nu: C64) -> C64 {
    if k == -1 {
        return C64::new(0.0, 0.0);
    }
    if k < -1 {
        return -chebyshev_u(-k - 2, nu);
    }
    let x = cos_pi(nu);
    match k {
        0 => return C64::new(1.0, 0.0),
        1 => return 2.0 * x,
        2 => return 4.0 * x * x - 1.0,
        _ => {}
    }
    let mut prev = C64::new(0.0, 0.0);
    let mut cur = C64::new(1.0, 0.0);
    for _ in 0..k {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn sign(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(P_m, Q_m)` from the sums over Chebyshev values; no denominators, so
/// usable right up to the terminating parameters.
pub fn pq_recursive(m: i64, mu: C64, nu: C64) -> (C64, C64) {
    if m == 0 {
        return (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
    }
    let e = exp_i_pi(-mu);
    if m > 0 {
        let mut p = C64::new(0.0, 0.0);
        let mut q = C64::new(0.0, 0.0);
        let mut ej = C64::new(1.0, 0.0);
        for j in 0..=m {
            let s = sign(j) * ej;
            p += s * chebyshev_u(m - j - 1, nu);
            if j < m {
                q += s * chebyshev_u(m - j - 2, nu);
            }
            ej *= e;
        }
        return (p, q);
    }
    let (pp, qq) = pq_recursive(-m, mu, nu);
    let f = sign(m + 1) * exp_i_pi(-(m as f64) * mu);
    let um = chebyshev_u(m, nu);
    let um1 = chebyshev_u(m - 1, nu);
    let umm = chebyshev_u(-m, nu);
    (f * (pp * um - qq * um1), f * (pp * um1 + qq * umm))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PqPair {
    pub m: i64,
    pub p: C64,
    pub q: C64,
    pub k_plus: C64,
}

/// `K_+ = K i [1 + e^{(nu-mu) pi i}] cos((mu+nu) pi/2)`.
pub fn k_plus(mu: C64, nu: C64) -> Result<C64> {
    let k = lommel_k(mu, nu)?;
    Ok(k * I * (1.0 + exp_i_pi(nu - mu)) * cos_pi((mu + nu) / 2.0))
}

/// `P_m`, `Q_m` from their rational closed forms, plus `K_+`.
pub fn continuation_pq(m: i64, mu: C64, nu: C64) -> Result<PqPair> {
    let d1 = 1.0 + exp_i_pi(-(mu + nu));
    let d2 = 1.0 + exp_i_pi(-(mu - nu));
    if d1.norm() < DEGENERATE_TOL || d2.norm() < DEGENERATE_TOL {
        return Err(Error::Degenerate(format!("mu +- nu is (nearly) an odd integer: mu={mu}, nu={nu}")));
    }
    let den = d1 * d2;
    let e = exp_i_pi(-mu);
    let mf = m as f64;
    let p = (chebyshev_u(m - 1, nu) + e * chebyshev_u(m, nu) + sign(m + 1) * exp_i_pi(-(mf + 1.0) * mu)) / den;
    let q = (chebyshev_u(m - 2, nu) + e * chebyshev_u(m - 1, nu) + sign(m) * exp_i_pi(-mf * mu)) / den;
    Ok(PqPair { m, p, q, k_plus: k_plus(mu, nu)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularCase {
    /// `-nu` not a non-negative integer; coefficients `K'_+-`.
    NuGeneric,
    /// `nu = 0`; coefficients `K''_+-`.
    NuZero,
}

/// `(K'_+, K'_-)` or `(K''_+, K''_-)`.
pub fn singular_k_coeffs(case: SingularCase, nu: C64, m: i64) -> Result<(C64, C64)> {
    match case {
        SingularCase::NuZero => {
            if nu.norm() > REGIME_TOL {
                return Err(Error::Domain(format!("K'' needs nu = 0, got {nu}")));
            }
            let (a, b) = k_double_prime(m);
            Ok((C64::new(a, 0.0), C64::new(b, 0.0)))
        }
        SingularCase::NuGeneric => {
            if crate::gamma::near_nonpositive_integer(nu, REGIME_TOL).is_some() {
                return Err(Error::Domain(format!("K' needs -nu outside 0,1,2,..., got {nu}")));
            }
            let mf = m as f64;
            let pref = PI * ((nu - 2.0) * std::f64::consts::LN_2).exp() * I * exp_i_pi(-mf * nu) * gamma(nu)?;
            let u = chebyshev_u(m - 1, nu);
            let kp = pref * (u * exp_i_pi((mf + 1.0) * nu) - mf);
            let km = pref * (u * exp_i_pi((mf - 1.0) * nu) - mf);
            Ok((kp, km))
        }
    }
}

/// `K''_+- = -m pi^2 (m +- 1) / 4`.
pub fn k_double_prime(m: i64) -> (f64, f64) {
    let mf = m as f64;
    (-mf * PI * PI * (mf + 1.0) / 4.0, -mf * PI * PI * (mf - 1.0) / 4.0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolySplit {
    pub hat: Poly,
    pub bar: Poly,
    pub delta_m: i64,
}

/// Odd part of `poly` and `poly(zeta e^{-m pi i})` as a polynomial in `zeta`.
pub fn poly_branch_split(poly: &Poly, m: i64) -> PolySplit {
    let delta_m = 1 + sign(m - 1) as i64;
    PolySplit { hat: poly.odd_part(), bar: poly.rotated(m), delta_m }
}

/// Side information a continuation formula may ask for, all at the base
/// point.
pub(crate) enum Aux {
    /// `[H^(1)_nu, H^(2)_nu]`.
    Hankel(C64),
    /// `[S_{-1,0}, zeta S'_{-1,0}]`.
    MinusOneZero,
}

type AuxFn<'a> = dyn FnMut(Aux) -> Result<Vec<Eval>> + 'a;

/// `S_{mu,nu}(zeta e^{-m pi i})` from `s = S_{mu,nu}(zeta)` and whatever
/// Hankel or `S_{-1,0}` data the regime needs.
pub(crate) fn continue_from_base(
    mu: C64,
    nu: C64,
    regime: Regime,
    m: i64,
    p: LogPoint,
    s: &Eval,
    aux: &mut AuxFn,
) -> Result<Eval> {
    if m == 0 {
        return Ok(*s);
    }
    let mf = m as f64;
    match regime {
        Regime::Terminating { .. } => Ok(s.scale(sign(m) * exp_i_pi(-mf * mu))),
        Regime::Generic => {
            let (pm, qm) = pq_recursive(m, mu, nu);
            let kp = k_plus(mu, nu)?;
            let h = aux(Aux::Hankel(nu))?;
            let mut c = Combo::new();
            c.add(sign(m) * exp_i_pi(-mf * mu), s).add(kp * pm, &h[0]).add(kp * exp_i_pi(-nu) * qm, &h[1]);
            Ok(c.finish(Method::Continuation))
        }
        Regime::Singular { nu_l, p: pl } => match nearest_integer(nu_l, REGIME_TOL) {
            Some(n) if n <= 0 => {
                let n = (-n) as u32;
                let h0 = aux(Aux::Hankel(C64::new(0.0, 0.0)))?;
                let (kp, km) = k_double_prime(m);
                if n == 0 {
                    let f = sign(pl as i64) / (4f64.powi(pl as i32) * factorial(pl).powi(2));
                    let mut c = Combo::new();
                    c.add(C64::new(1.0, 0.0), s).add(C64::new(f * kp, 0.0), &h0[0]).add(C64::new(f * km, 0.0), &h0[1]);
                    return Ok(c.finish(Method::Continuation));
                }
                let h1 = aux(Aux::Hankel(C64::new(1.0, 0.0)))?;
                let base = aux(Aux::MinusOneZero)?;
                Ok(negative_integer_extra(n, pl, m, p, s, &base[0], &base[1], &h0, &h1, kp, km))
            }
            _ => {
                let (kp, km) = singular_k_coeffs(SingularCase::NuGeneric, nu_l, m)?;
                let f = sign(pl as i64) / (4f64.powi(pl as i32) * factorial(pl)) / pochhammer(1.0 - nu_l, pl);
                let h = aux(Aux::Hankel(nu_l))?;
                let mut c = Combo::new();
                c.add(exp_i_pi(-mf * nu_l), s).add(f * kp, &h[0]).add(f * km, &h[1]);
                Ok(c.finish(Method::Continuation))
            }
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn negative_integer_extra(
    n: u32,
    pl: u32,
    m: i64,
    p: LogPoint,
    s: &Eval,
    s10: &Eval,
    zds10: &Eval,
    h0: &[Eval],
    h1: &[Eval],
    kp: f64,
    km: f64,
) -> Eval {
    let (a, b, c) = abc_polynomials(n);
    let z = p.zeta();
    let r = z.norm();
    let mn = m * n as i64;
    let scale = sign(mn + n as i64 + pl as i64)
        / (2f64.powi(2 * pl as i32 + n as i32)
            * factorial(n)
            * factorial(pl)
            * pochhammer(C64::new(1.0 + n as f64, 0.0), pl).re);
    let pref = logpoint_pow(p, C64::new(-(n as f64), 0.0)) * scale;
    let sa = poly_branch_split(&a, m);
    let sb = poly_branch_split(&b, m);
    let sc = poly_branch_split(&c, m);
    let d = sa.delta_m as f64;
    let mut combo = Combo::new();
    combo.add(C64::new(sign(mn), 0.0), s);
    combo.add_exact(-pref * d * sa.hat.eval(z));
    combo.add(-pref * d * sb.hat.eval(z), s10);
    combo.add(-pref * d * sc.hat.eval(z), zds10);
    let bb = pref * sb.bar.eval(z);
    let cc = -pref * z * sc.bar.eval(z);
    combo.add(bb * kp, &h0[0]).add(bb * km, &h0[1]);
    combo.add(cc * kp, &h1[0]).add(cc * km, &h1[1]);
    combo.err += pref.norm()
        * f64::EPSILON
        * 4.0
        * (a.eval_abs(r) + b.eval_abs(r) * s10.value.norm() + c.eval_abs(r) * zds10.value.norm());
    combo.finish(Method::Continuation)
}

/// `(S_{-1,0}, zeta S'_{-1,0})` at any point, including large arguments off
/// the right half-plane.
pub fn minus_one_zero_any(p: LogPoint) -> Result<(Eval, Eval)> {
    if p.modulus() < MINUS_ONE_ZERO_SERIES_MAX {
        return lommel_minus_one_zero(p);
    }
    let (m, p0) = p.reduce_half_plane();
    let zero = C64::new(0.0, 0.0);
    let (s, ds) = lommel_asymptotic_with_derivative(C64::new(-1.0, 0.0), zero, p0);
    if m == 0 {
        return Ok((s, ds));
    }
    let (kp, km) = k_double_prime(m);
    let (a0, b0) = hankel_pair(zero, p0)?;
    let (a1, b1) = hankel_pair(C64::new(1.0, 0.0), p0)?;
    let z = p0.zeta();
    let mut c = Combo::new();
    c.add(C64::new(1.0, 0.0), &s).add(C64::new(kp, 0.0), &a0).add(C64::new(km, 0.0), &b0);
    let mut d = Combo::new();
    d.add(C64::new(1.0, 0.0), &ds).add(-z * kp, &a1).add(-z * km, &b1);
    Ok((c.finish(Method::Continuation), d.finish(Method::Continuation)))
}

fn aux_at(p: LogPoint) -> impl FnMut(Aux) -> Result<Vec<Eval>> {
    move |a| match a {
        Aux::Hankel(order) => {
            let (x, y) = hankel_pair(order, p)?;
            Ok(vec![x, y])
        }
        Aux::MinusOneZero => {
            let (s, ds) = minus_one_zero_any(p)?;
            Ok(vec![s, ds])
        }
    }
}

/// `S_{mu,nu}(zeta e^{-m pi i})` from values on the sheet of `w`.
pub fn continue_s(mu: C64, nu: C64, m: i64, p: LogPoint) -> Result<Eval> {
    let regime = classify_regime(mu, nu);
    let s = lommel_big_s(mu, nu, p)?;
    if m == 0 {
        return Ok(s);
    }
    let (mu_c, nu_c) = match regime {
        Regime::Singular { nu_l, p: pl } => (nu_l - (2 * pl + 1) as f64, nu_l),
        _ => (mu, nu),
    };
    continue_from_base(mu_c, nu_c, regime, m, p, &s, &mut aux_at(p))
}

/// `S_{nu-2p-1,nu}(zeta e^{-m pi i})` from the continuation formulas for the
/// singular ladder.
pub fn continue_s_singular(nu: C64, pl: u32, m: i64, p: LogPoint) -> Result<Eval> {
    let mu = nu - (2 * pl + 1) as f64;
    let nu_l = match nearest_integer(nu, REGIME_TOL) {
        Some(n) if n > 0 => {
            return Err(Error::Domain(format!("nu = {n} > 0: use nu = {} instead", -n)));
        }
        Some(n) => C64::new(n as f64, 0.0),
        None => nu,
    };
    let regime = Regime::Singular { nu_l, p: pl };
    let s = crate::lommel::lommel_singular(nu_l, pl, p)?;
    if m == 0 {
        return Ok(s);
    }
    continue_from_base(mu, nu_l, regime, m, p, &s, &mut aux_at(p))
}

/// `H_nu(zeta e^{-m pi i}) = (-1)^m e^{-m nu pi i} H_nu(zeta)`.
pub fn struve_continuation(nu: C64, m: i64, p: LogPoint) -> Result<Eval> {
    let h = crate::special::struve_h(nu, p)?;
    Ok(h.scale(sign(m) * exp_i_pi(-(m as f64) * nu)))
}
