//! Taylor-series continuation of solutions of
//! `zeta^2 y'' + zeta y' + (zeta^2 - nu^2) y = zeta^{mu+1}` (or the
//! homogeneous equation) along a horizontal segment.
//!
//! On a line of constant `Im zeta` both Hankel functions keep their size up
//! to algebraic factors, so rounding errors are not amplified. Starting from
//! the asymptotic expansions at `|zeta| = PATH_START` this reaches points of
//! moderate modulus far from the real axis, where the convergent series
//! cancel catastrophically and the asymptotic series are too short.

use crate::error::{Error, Result};
use crate::logpoint::{logpoint_pow, Eval, LogPoint, Method, C64};

const EPS: f64 = f64::EPSILON;

/// Modulus where the integration starts; the asymptotic series are accurate
/// to rounding there.
pub const PATH_START: f64 = 42.0;

/// Smallest `|Im zeta|` for which the path is offered.
pub const PATH_MIN_IMAG: f64 = 2.0;

const MAX_TERMS: usize = 200;

/// Value and derivative at the end of the path with accumulated error bounds.
pub struct PathEnd {
    pub y: C64,
    pub dy: C64,
    pub err: f64,
    pub steps: usize,
}

/// Integrates from `(z0, y, dy)` to `target` along the straight segment.
/// `mu` selects the forced equation; the forcing is taken on the principal
/// branch, so the segment must not cross the negative real axis.
pub fn continue_along(
    nu: C64,
    mu: Option<C64>,
    z0: C64,
    y: C64,
    dy: C64,
    start_err: f64,
    target: C64,
) -> Result<PathEnd> {
    let nu2 = nu * nu;
    let mut z = z0;
    let (mut y, mut dy) = (y, dy);
    let mut err = start_err;
    let mut steps = 0;
    loop {
        let rest = target - z;
        let dist = rest.norm();
        if dist == 0.0 {
            break;
        }
        let hmax = (z.norm() / 4.0).min(1.0);
        let h = if dist <= hmax { rest } else { rest * (hmax / dist) };
        let (ny, ndy, local) = taylor_step(nu2, mu, z, y, dy, h)?;
        err += local;
        z += h;
        y = ny;
        dy = ndy;
        steps += 1;
    }
    // perturbations of the homogeneous modes scale like |zeta|^{-1/2}
    let growth = (z0.norm() / target.norm()).sqrt().max(1.0);
    Ok(PathEnd { y, dy, err: 2.0 * growth * err, steps })
}

/// One Taylor step of length `h` about `z`, with coefficients scaled by `h^n`.
fn taylor_step(nu2: C64, mu: Option<C64>, z: C64, y: C64, dy: C64, h: C64) -> Result<(C64, C64, f64)> {
    let z2 = z * z;
    let t = h / z;
    let mut a: Vec<C64> = Vec::with_capacity(64);
    a.push(y);
    a.push(h * dy);
    // forcing coefficients zeta0^{mu+1} binom(mu+1, n) (h/zeta0)^n
    let mut b = mu.map(|m| logpoint_pow(LogPoint::from_zeta(z), m + 1.0));
    let mut sum = a[0] + a[1];
    let mut dsum = a[1];
    let mut mag = a[0].norm() + a[1].norm();
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let bn = b.unwrap_or_default();
        let get = |k: isize| if k >= 0 { a[k as usize] } else { C64::default() };
        let ni = n as isize;
        let num = bn * h * h
            - z * h * ((nf + 1.0) * (2.0 * nf + 1.0)) * a[n + 1]
            - (z2 - nu2 + nf * nf) * h * h * a[n]
            - 2.0 * z * h * h * h * get(ni - 1)
            - h * h * h * h * get(ni - 2);
        let next = num / (z2 * ((nf + 1.0) * (nf + 2.0)));
        a.push(next);
        sum += next;
        dsum += next * (nf + 2.0);
        let m = next.norm();
        mag += m;
        if let (Some(bv), Some(mv)) = (b.as_mut(), mu) {
            *bv *= (mv + 1.0 - nf) / (nf + 1.0) * t;
        }
        if m <= EPS * 1e-3 * sum.norm() && n >= 4 {
            small += 1;
            if small >= 3 {
                let local = 4.0 * EPS * mag;
                return Ok((sum, dsum / h, local));
            }
        } else {
            small = 0;
        }
        if !m.is_finite() {
            break;
        }
    }
    Err(Error::Nonconvergence { terms: MAX_TERMS })
}

/// Start point on the circle `|zeta| = PATH_START` at the height of `p`, or
/// `None` when the path does not apply.
pub fn start_for(p: LogPoint) -> Option<C64> {
    let zeta = p.zeta();
    if p.w.im.abs() >= std::f64::consts::PI || zeta.im.abs() < PATH_MIN_IMAG || zeta.norm() >= PATH_START {
        return None;
    }
    let x = (PATH_START * PATH_START - zeta.im * zeta.im).sqrt();
    Some(C64::new(x, zeta.im))
}

/// Wraps a path result as an evaluation.
pub fn to_eval(end: &PathEnd) -> Eval {
    Eval::new(end.y, end.err + 4.0 * EPS * end.y.norm(), end.steps, Method::Integration)
}
