//! Points on the logarithmic Riemann surface and evaluation records.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};

pub type C64 = Complex64;

pub const I: C64 = C64 { re: 0.0, im: 1.0 };

/// A point `zeta = exp(w)` remembered together with its logarithm, so that
/// the sheet is never lost.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogPoint {
    pub w: C64,
}

impl LogPoint {
    pub fn new(w: C64) -> LogPoint {
        LogPoint { w }
    }

    /// Principal-sheet point for a nonzero `zeta`.
    pub fn from_zeta(zeta: C64) -> LogPoint {
        LogPoint { w: zeta.ln() }
    }

    pub fn from_polar(r: f64, theta: f64) -> LogPoint {
        LogPoint { w: C64::new(r.ln(), theta) }
    }

    pub fn zeta(&self) -> C64 {
        self.w.exp()
    }

    pub fn modulus(&self) -> f64 {
        self.w.re.exp()
    }

    /// Argument on the current sheet (not reduced).
    pub fn arg(&self) -> f64 {
        self.w.im
    }

    /// `zeta -> zeta * exp(-m pi i)`.
    pub fn branch_shift(&self, m: i64) -> LogPoint {
        branch_shift(*self, m)
    }

    /// Integer `m` and point `w0` with `w = w0 - i m pi` and `|arg w0| <= pi/2`.
    pub fn reduce_half_plane(&self) -> (i64, LogPoint) {
        let m = (-self.w.im / PI).round() as i64;
        let w0 = C64::new(self.w.re, self.w.im + m as f64 * PI);
        (m, LogPoint { w: w0 })
    }
}

/// `zeta^mu` evaluated as `exp(mu w)`; the only way powers are taken.
pub fn logpoint_pow(p: LogPoint, mu: C64) -> C64 {
    (mu * p.w).exp()
}

pub fn branch_shift(p: LogPoint, m: i64) -> LogPoint {
    LogPoint { w: p.w - I * (m as f64 * PI) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Series,
    Asymptotic,
    ClosedForm,
    Recurrence,
    Continuation,
    Integration,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
            Method::ClosedForm => "closed_form",
            Method::Recurrence => "recurrence",
            Method::Continuation => "continuation",
            Method::Integration => "integration",
        }
    }
}

/// A value together with an absolute error estimate and how it was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eval {
    pub value: C64,
    pub abs_err_est: f64,
    pub terms_used: usize,
    pub method: Method,
}

impl Eval {
    pub fn new(value: C64, abs_err_est: f64, terms_used: usize, method: Method) -> Eval {
        Eval { value, abs_err_est, terms_used, method }
    }

    pub fn exact(value: C64, method: Method) -> Eval {
        Eval::new(value, 4.0 * f64::EPSILON * value.norm(), 0, method)
    }

    /// Multiply by a coefficient known to about machine precision.
    pub fn scale(self, c: C64) -> Eval {
        let v = self.value * c;
        Eval { value: v, abs_err_est: self.abs_err_est * c.norm() + 2.0 * f64::EPSILON * v.norm(), ..self }
    }

    pub fn relative_err(&self) -> f64 {
        let n = self.value.norm();
        if n > 0.0 {
            self.abs_err_est / n
        } else {
            self.abs_err_est
        }
    }
}

/// Accumulates a linear combination of evaluations with error bookkeeping.
#[derive(Clone, Copy, Debug)]
pub struct Combo {
    pub value: C64,
    pub err: f64,
    pub mag: f64,
    pub terms: usize,
}

impl Default for Combo {
    fn default() -> Self {
        Combo::new()
    }
}

impl Combo {
    pub fn new() -> Combo {
        Combo { value: C64::new(0.0, 0.0), err: 0.0, mag: 0.0, terms: 0 }
    }

    pub fn add(&mut self, c: C64, e: &Eval) -> &mut Self {
        let t = c * e.value;
        self.value += t;
        self.err += c.norm() * e.abs_err_est;
        self.mag += t.norm();
        self.terms = self.terms.max(e.terms_used);
        self
    }

    /// Add a term that carries only rounding error.
    pub fn add_exact(&mut self, t: C64) -> &mut Self {
        self.value += t;
        self.mag += t.norm();
        self
    }

    pub fn finish(&self, method: Method) -> Eval {
        Eval {
            value: self.value,
            abs_err_est: self.err + 4.0 * f64::EPSILON * self.mag,
            terms_used: self.terms,
            method,
        }
    }
}

pub const DEFAULT_TERM_CAP: usize = 500;

static TERM_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_TERM_CAP);

/// Maximum number of terms any series or expansion may use.
pub fn term_cap() -> usize {
    TERM_CAP.load(Ordering::Relaxed)
}

pub fn set_term_cap(n: usize) {
    TERM_CAP.store(n.max(1), Ordering::Relaxed);
}
