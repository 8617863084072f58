//! Second-order equations with exponential coefficients,
//! `f'' + 2N f' + [L^2 M^2 e^{2Mz} + N^2 - nu^2 M^2] f = sum_j sigma_j L^{mu_j+1} M^2 e^{(M(mu_j+1) - N) z}`,
//! solved through Bessel and Lommel functions of `zeta = L e^{Mz}`.

use crate::bessel::{bessel_j, bessel_y, hankel1, hankel2, hankel_asymptotic_scaled, HankelKind};
use crate::error::{Error, Result};
use crate::logpoint::{Combo, Eval, LogPoint, Method, C64, I};
use crate::lommel::{classify_regime, lommel_big_s, terminating_lommel, Regime, TerminatingLommel};
use crate::special::{neumann_o, schlafli_s, struve_h, struve_sigma};
use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use std::fmt;

/// Hankel coefficients below this are treated as zero by the growth probe
/// and the classifier.
pub const COEFF_ZERO_TOL: f64 = 1e-14;
/// Two forcing exponents closer than this in real part count as equal.
const DISTINCT_TOL: f64 = 1e-12;
/// Largest `Re w` the probe accepts before reporting overflow.
const PROBE_EXP_LIMIT: f64 = 700.0;
/// Below this modulus the probe uses unscaled Hankel values.
const PROBE_SCALED_FROM: f64 = 50.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Forcing {
    pub sigma: C64,
    pub mu: C64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OdeSpec {
    pub l: C64,
    pub m: C64,
    pub n: C64,
    pub nu: C64,
    pub forcing: Vec<Forcing>,
}

/// Coefficients of the equation written out in `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct OdeCoefficients {
    /// multiplies `f'`
    pub first: C64,
    /// `amp * e^{rate z}` part of the `f` coefficient
    pub exp_amp: C64,
    pub exp_rate: C64,
    /// constant part of the `f` coefficient
    pub constant: C64,
    /// right side terms `amp * e^{rate z}`
    pub rhs: Vec<(C64, C64)>,
}

impl OdeCoefficients {
    pub fn rhs_at(&self, z: C64) -> C64 {
        self.rhs.iter().map(|(a, r)| a * (r * z).exp()).sum()
    }

    pub fn potential_at(&self, z: C64) -> C64 {
        self.exp_amp * (self.exp_rate * z).exp() + self.constant
    }
}

impl OdeSpec {
    pub fn new(l: C64, m: C64, n: C64, nu: C64, forcing: Vec<Forcing>) -> Result<OdeSpec> {
        let s = OdeSpec { l, m, n, nu, forcing };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.l.norm() == 0.0 || self.m.norm() == 0.0 {
            return Err(Error::Domain("L and M must be nonzero".into()));
        }
        let bad = |c: C64| !c.re.is_finite() || !c.im.is_finite();
        if bad(self.l)
            || bad(self.m)
            || bad(self.n)
            || bad(self.nu)
            || self.forcing.iter().any(|f| bad(f.sigma) || bad(f.mu))
        {
            return Err(Error::Domain("parameters must be finite".into()));
        }
        Ok(())
    }

    /// The inner argument `w = log L + M z` on the principal sheet of `log L`.
    pub fn point(&self, z: C64) -> LogPoint {
        LogPoint::new(self.l.ln() + self.m * z)
    }

    pub fn coefficients(&self) -> OdeCoefficients {
        let m2 = self.m * self.m;
        OdeCoefficients {
            first: 2.0 * self.n,
            exp_amp: self.l * self.l * m2,
            exp_rate: 2.0 * self.m,
            constant: self.n * self.n - self.nu * self.nu * m2,
            rhs: self
                .forcing
                .iter()
                .map(|f| (f.sigma * ((f.mu + 1.0) * self.l.ln()).exp() * m2, self.m * (f.mu + 1.0) - self.n))
                .collect(),
        }
    }

    /// Forcing terms with nonzero `sigma`, with their 1-based positions.
    fn active(&self) -> impl Iterator<Item = (usize, &Forcing)> {
        self.forcing.iter().enumerate().filter(|(_, f)| f.sigma.norm() > 0.0).map(|(i, f)| (i + 1, f))
    }

    fn check_distinct(&self) -> Result<()> {
        let act: Vec<_> = self.active().collect();
        for (a, (i, fi)) in act.iter().enumerate() {
            for (j, fj) in &act[a + 1..] {
                if (fi.mu.re - fj.mu.re).abs() <= DISTINCT_TOL {
                    return Err(Error::Hypothesis(format!("forcing terms {i} and {j} share Re(mu) = {}", fi.mu.re)));
                }
            }
        }
        Ok(())
    }
}

/// The Lommel substitution `zeta = alpha e^{beta z}`, `f = e^{-gamma z} y`
/// taking the equation in `z` to
/// `zeta^2 y'' + zeta y' + (zeta^2 - nu^2) y = sum_j sigma_j zeta^{mu_j+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LommelTransform {
    pub alpha: C64,
    pub beta: C64,
    pub gamma: C64,
    pub order: u32,
    pub nu: C64,
    pub forcing: Vec<Forcing>,
}

impl LommelTransform {
    /// Substitutes back into `z`; reproduces the coefficients of the source
    /// equation.
    pub fn back_substitute(&self) -> OdeCoefficients {
        let b2 = self.beta * self.beta;
        OdeCoefficients {
            first: 2.0 * self.gamma,
            exp_amp: self.alpha * self.alpha * b2,
            exp_rate: 2.0 * self.beta,
            constant: self.gamma * self.gamma - self.nu * self.nu * b2,
            rhs: self
                .forcing
                .iter()
                .map(|f| (f.sigma * ((f.mu + 1.0) * self.alpha.ln()).exp() * b2, self.beta * (f.mu + 1.0) - self.gamma))
                .collect(),
        }
    }
}

impl fmt::Display for LommelTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "zeta = {} e^({} z), f = e^(-({}) z) y, zeta^2 y'' + zeta y' + (zeta^2 - ({})^2) y = ",
            fmt_c(self.alpha),
            fmt_c(self.beta),
            fmt_c(self.gamma),
            fmt_c(self.nu)
        )?;
        if self.forcing.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.forcing.iter().map(|t| format!("({}) zeta^({})", fmt_c(t.sigma), fmt_c(t.mu + 1.0))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn lommel_transform(spec: &OdeSpec) -> LommelTransform {
    LommelTransform { alpha: spec.l, beta: spec.m, gamma: spec.n, order: 1, nu: spec.nu, forcing: spec.forcing.clone() }
}

/// `f(z) = e^{-Nz} [A J_nu + B Y_nu + sum_j sigma_j S_{mu_j,nu}](L e^{Mz})`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpec {
    pub a: C64,
    pub b: C64,
    pub spec: OdeSpec,
}

impl SolutionSpec {
    pub fn new(a: C64, b: C64, spec: OdeSpec) -> SolutionSpec {
        SolutionSpec { a, b, spec }
    }

    /// `H_nu(L e^{Mz}) = Y_nu + sigma' S_{nu,nu}`, written as a solution of
    /// the equation forced by `e^{(nu+1) M z}`.
    pub fn struve(nu: C64, l: C64, m: C64) -> Result<SolutionSpec> {
        let spec = OdeSpec::new(l, m, C64::new(0.0, 0.0), nu, vec![Forcing { sigma: struve_sigma(nu), mu: nu }])?;
        Ok(SolutionSpec::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0), spec))
    }

    /// `(C, D)` with `A J + B Y = C H1 + D H2`.
    pub fn hankel_cd(&self) -> (C64, C64) {
        ((self.a - I * self.b) * 0.5, (self.a + I * self.b) * 0.5)
    }

    fn forcing_part(&self, p: LogPoint, c: &mut Combo) -> Result<Option<Method>> {
        let mut method = None;
        for f in self.spec.forcing.iter().filter(|f| f.sigma.norm() > 0.0) {
            let s = lommel_big_s(f.mu, self.spec.nu, p)?;
            method.get_or_insert(s.method);
            c.add(f.sigma, &s);
        }
        Ok(method)
    }

    fn finish(&self, z: C64, c: &Combo, method: Method) -> Eval {
        c.finish(method).scale((-self.spec.n * z).exp())
    }

    pub fn eval(&self, z: C64) -> Result<Eval> {
        let p = self.spec.point(z);
        let nu = self.spec.nu;
        let mut c = Combo::new();
        let mut method = None;
        if self.a.norm() > 0.0 {
            let j = bessel_j(nu, p)?;
            method = Some(j.method);
            c.add(self.a, &j);
        }
        if self.b.norm() > 0.0 {
            let y = bessel_y(nu, p)?;
            method.get_or_insert(y.method);
            c.add(self.b, &y);
        }
        let fm = self.forcing_part(p, &mut c)?;
        Ok(self.finish(z, &c, method.or(fm).unwrap_or(Method::ClosedForm)))
    }

    /// Same function assembled from the Hankel pair.
    pub fn eval_hankel(&self, z: C64) -> Result<Eval> {
        let p = self.spec.point(z);
        let nu = self.spec.nu;
        let (cc, dd) = self.hankel_cd();
        let mut c = Combo::new();
        let mut method = None;
        if cc.norm() > 0.0 {
            let h = hankel1(nu, p)?;
            method = Some(h.method);
            c.add(cc, &h);
        }
        if dd.norm() > 0.0 {
            let h = hankel2(nu, p)?;
            method.get_or_insert(h.method);
            c.add(dd, &h);
        }
        let fm = self.forcing_part(p, &mut c)?;
        Ok(self.finish(z, &c, method.or(fm).unwrap_or(Method::ClosedForm)))
    }
}

/// The evaluator `z -> f(z)` of a solution.
pub fn general_solution(sol: &SolutionSpec) -> impl Fn(C64) -> Result<Eval> + '_ {
    move |z| sol.eval(z)
}

const D1: [f64; 3] = [3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0];
const D2: [f64; 4] = [-49.0 / 18.0, 3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0];

/// Sixth-order central differences `(f, f', f'')` at `z` with step `h`.
pub fn derivatives<F>(f: F, z: C64, h: f64) -> Result<(C64, C64, C64)>
where
    F: Fn(C64) -> Result<C64>,
{
    let f0 = f(z)?;
    let mut d1 = C64::new(0.0, 0.0);
    let mut d2 = D2[0] * f0;
    for k in 1..=3 {
        let fp = f(z + k as f64 * h)?;
        let fm = f(z - k as f64 * h)?;
        d1 += D1[k - 1] * (fp - fm);
        d2 += D2[k] * (fp + fm);
    }
    Ok((f0, d1 / h, d2 / (h * h)))
}

/// Rough local frequency of the solution, used to pick the difference step.
fn frequency(spec: &OdeSpec, z: C64) -> f64 {
    let zeta = spec.point(z).modulus();
    let mut w = 1.0f64.max(spec.m.norm() * zeta.max(spec.nu.norm())).max(spec.n.norm());
    for f in &spec.forcing {
        w = w.max((spec.m * (f.mu + 1.0) - spec.n).norm());
    }
    w
}

/// Relative residual of the equation at `z`, normalised by the largest term.
pub fn ode_residual(sol: &SolutionSpec, z: C64) -> Result<f64> {
    let coef = sol.spec.coefficients();
    let h = 0.05 / frequency(&sol.spec, z);
    let (f, d1, d2) = derivatives(|t| sol.eval(t).map(|e| e.value), z, h)?;
    residual_from(&coef, z, f, d1, d2)
}

/// Residual of an arbitrary function against the equation of `spec`.
pub fn ode_residual_of<F>(spec: &OdeSpec, f: F, z: C64) -> Result<f64>
where
    F: Fn(C64) -> Result<C64>,
{
    let coef = spec.coefficients();
    let h = 0.05 / frequency(spec, z);
    let (v, d1, d2) = derivatives(f, z, h)?;
    residual_from(&coef, z, v, d1, d2)
}

fn residual_from(coef: &OdeCoefficients, z: C64, f: C64, d1: C64, d2: C64) -> Result<f64> {
    let t1 = coef.first * d1;
    let t0 = coef.potential_at(z) * f;
    let rhs = coef.rhs_at(z);
    let scale = d2.norm().max(t1.norm()).max(t0.norm()).max(rhs.norm()).max(1e-300);
    let r = (d2 + t1 + t0 - rhs).norm() / scale;
    if r.is_finite() {
        Ok(r)
    } else {
        Err(Error::Overflow("residual terms are not finite".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotSubnormalReason {
    NonzeroAB,
    /// 1-based position of the first forcing term that does not terminate
    NonterminatingIndex(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubnormalTerm {
    pub index: usize,
    pub sigma: C64,
    pub lommel: TerminatingLommel,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SubnormalVerdict {
    Subnormal { terms: Vec<SubnormalTerm> },
    NotSubnormal { reason: NotSubnormalReason },
}

impl SubnormalVerdict {
    pub fn is_subnormal(&self) -> bool {
        matches!(self, SubnormalVerdict::Subnormal { .. })
    }
}

/// Subnormal exactly when `A = B = 0` and every forcing term terminates.
pub fn classify_subnormal(sol: &SolutionSpec) -> Result<SubnormalVerdict> {
    sol.spec.validate()?;
    sol.spec.check_distinct()?;
    if sol.a.norm() > COEFF_ZERO_TOL || sol.b.norm() > COEFF_ZERO_TOL {
        return Ok(SubnormalVerdict::NotSubnormal { reason: NotSubnormalReason::NonzeroAB });
    }
    let mut terms = Vec::new();
    for (index, f) in sol.spec.active() {
        match classify_regime(f.mu, sol.spec.nu) {
            Regime::Terminating { .. } => {
                terms.push(SubnormalTerm { index, sigma: f.sigma, lommel: terminating_lommel(f.mu, sol.spec.nu)? })
            }
            _ => return Ok(SubnormalVerdict::NotSubnormal { reason: NotSubnormalReason::NonterminatingIndex(index) }),
        }
    }
    Ok(SubnormalVerdict::Subnormal { terms })
}

/// Formats a complex number compactly, dropping a zero part.
pub fn fmt_c(c: C64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else {
        format!("{}{:+}i", c.re, c.im)
    }
}

/// Human-readable closed form: an exponential sum when subnormal, the
/// Bessel/Lommel assembly otherwise.
pub fn solution_string(sol: &SolutionSpec, verdict: &SubnormalVerdict) -> String {
    let spec = &sol.spec;
    match verdict {
        SubnormalVerdict::Subnormal { terms } => {
            let mut parts = Vec::new();
            let log_l = spec.l.ln();
            for t in terms {
                for (k, c) in t.lommel.coeffs.iter().enumerate() {
                    if c.norm() == 0.0 {
                        continue;
                    }
                    let pw = t.lommel.mu - 1.0 - 2.0 * k as f64;
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    let amp = t.sigma * c * sign * (pw * log_l).exp();
                    let rate = spec.m * pw - spec.n;
                    parts.push(format!("({})*exp(({})*z)", fmt_c(amp), fmt_c(rate)));
                }
            }
            if parts.is_empty() {
                "f(z) = 0".into()
            } else {
                format!("f(z) = {}", parts.join(" + "))
            }
        }
        SubnormalVerdict::NotSubnormal { .. } => {
            let arg = format!("{}*exp(({})*z)", fmt_c(spec.l), fmt_c(spec.m));
            let nu = fmt_c(spec.nu);
            let mut parts =
                vec![format!("({})*J_{nu}({arg})", fmt_c(sol.a)), format!("({})*Y_{nu}({arg})", fmt_c(sol.b))];
            for f in spec.forcing.iter().filter(|f| f.sigma.norm() > 0.0) {
                parts.push(format!("({})*S_{{{},{nu}}}({arg})", fmt_c(f.sigma), fmt_c(f.mu)));
            }
            format!("f(z) = exp(-({})*z) * [{}]", fmt_c(spec.n), parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeSample {
    pub n: u32,
    pub r_n: f64,
    pub z_n: C64,
    pub log_abs_f: Option<f64>,
    /// `log log |f(z_n)| / r_n`, absent when `|f(z_n)| <= e`
    pub loglog_over_r: Option<f64>,
    pub log_over_r: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthProbe {
    pub samples: Vec<ProbeSample>,
    /// last available `log log |f| / r_n`
    pub tail: Option<f64>,
    pub expected_if_unbounded: f64,
    /// heuristic: `log |f| / r_n` stayed below `bound`
    pub bounded: bool,
    pub bound: f64,
    pub achieved_n: u32,
    /// whether the `C != 0` sequence was used
    pub c_branch: bool,
}

/// `(exponent, mantissa)` with value `mantissa * e^{exponent}`.
type Part = (f64, C64);

fn log_abs_sum(parts: &[Part]) -> f64 {
    let top = parts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let s: C64 = parts.iter().map(|(e, m)| m * (e - top).exp()).sum();
    top + s.norm().ln()
}

fn hankel_part(kind: HankelKind, coef: C64, nu: C64, p: LogPoint) -> Result<Part> {
    if p.modulus() < PROBE_SCALED_FROM {
        let h = match kind {
            HankelKind::First => hankel1(nu, p)?,
            HankelKind::Second => hankel2(nu, p)?,
        };
        return Ok((0.0, coef * h.value));
    }
    let s = hankel_asymptotic_scaled(kind, nu, p);
    Ok((s.exponent.re, coef * s.mantissa * C64::new(0.0, s.exponent.im).exp()))
}

fn probe_log_abs(sol: &SolutionSpec, z: C64, p: LogPoint) -> Result<f64> {
    let nu = sol.spec.nu;
    let (cc, dd) = sol.hankel_cd();
    let mut parts = Vec::new();
    if cc.norm() > 0.0 {
        parts.push(hankel_part(HankelKind::First, cc, nu, p)?);
    }
    if dd.norm() > 0.0 {
        parts.push(hankel_part(HankelKind::Second, dd, nu, p)?);
    }
    for f in sol.spec.forcing.iter().filter(|f| f.sigma.norm() > 0.0) {
        let s = lommel_big_s(f.mu, nu, p)?;
        parts.push((0.0, f.sigma * s.value));
    }
    if parts.is_empty() {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(log_abs_sum(&parts) - (sol.spec.n * z).re)
}

/// Samples `|f|` along `z_n = r_n e^{i(pi/4 - arg M)}`, where
/// `L e^{M z_n}` has argument `2 n pi -+ pi/4`; components are taken on the
/// principal sheet of that point.
pub fn growth_probe(sol: &SolutionSpec, n_max: u32) -> Result<GrowthProbe> {
    if n_max < 3 {
        return Err(Error::Domain(format!("growth probe needs n_max >= 3, got {n_max}")));
    }
    sol.spec.validate()?;
    let (cc, _) = sol.hankel_cd();
    let c_branch = cc.norm() > COEFF_ZERO_TOL;
    let sgn = if c_branch { -1.0 } else { 1.0 };
    let (m_abs, b) = (sol.spec.m.norm(), sol.spec.m.arg());
    let (l_abs, a) = (sol.spec.l.norm(), sol.spec.l.arg());
    let theta = FRAC_PI_4 - b;
    let mut samples = Vec::new();
    for n in 1..=n_max {
        let r_n = SQRT_2 / m_abs * (2.0 * n as f64 * PI + sgn * FRAC_PI_4 - a);
        let z_n = C64::from_polar(r_n, theta);
        let x = m_abs * r_n / SQRT_2 + l_abs.ln();
        let mut sample =
            ProbeSample { n, r_n, z_n, log_abs_f: None, loglog_over_r: None, log_over_r: None, error: None };
        if x > PROBE_EXP_LIMIT {
            sample.error = Some(format!("OverflowError: log|zeta_n| = {x:.1} exceeds the double range"));
        } else {
            let p = LogPoint::new(C64::new(x, sgn * FRAC_PI_4));
            match probe_log_abs(sol, z_n, p) {
                Ok(v) if v.is_finite() => {
                    sample.log_abs_f = Some(v);
                    sample.log_over_r = Some(v / r_n);
                    if v > 1.0 {
                        sample.loglog_over_r = Some(v.ln() / r_n);
                    }
                }
                Ok(_) => sample.error = Some("f(z_n) vanishes".into()),
                Err(e) => sample.error = Some(format!("{}: {e}", e.kind())),
            }
        }
        samples.push(sample);
    }
    let achieved_n = samples.iter().filter(|s| s.log_abs_f.is_some()).map(|s| s.n).max().unwrap_or(0);
    let tail = samples.iter().rev().find_map(|s| s.loglog_over_r);
    let mu_span = sol.spec.forcing.iter().map(|f| (f.mu.re + 1.0).abs()).fold(0.0, f64::max);
    let bound = 2.0 * mu_span * m_abs + sol.spec.n.norm() + 1.0;
    let bounded = samples.iter().filter_map(|s| s.log_over_r).all(|v| v <= bound);
    Ok(GrowthProbe { samples, tail, expected_if_unbounded: m_abs / SQRT_2, bounded, bound, achieved_n, c_branch })
}

/// Exact rational, used for the quantized constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(num, den).max(1) * den.signum();
        Rational { num: num / g, den: den / g }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// One row of the quantization table for `f'' + (e^z - K) f = sigma 2^{mu-1} e^{(mu+1)z/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantizationCase {
    pub case_id: u8,
    pub p: u32,
    pub sigma: C64,
    pub k: Rational,
    pub mu: f64,
    pub nu: f64,
    pub solution: SolutionSpec,
    pub description: String,
}

impl QuantizationCase {
    /// The tabulated closed form, built from the classical polynomials and
    /// Struve/Bessel functions rather than from `S`.
    pub fn closed_form(&self, z: C64) -> Result<Eval> {
        let p = LogPoint::new(C64::new(2f64.ln(), 0.0) + 0.5 * z);
        let half = (0.5 * z).exp();
        let sigma = self.sigma;
        let pf = self.p as f64;
        Ok(match self.case_id {
            1 => neumann_o(2 * self.p, p).scale(2.0 * sigma * half),
            2 => neumann_o(2 * self.p + 1, p).scale(2.0 * sigma * half / (2.0 * pf + 1.0)),
            3 => schlafli_s(2 * self.p + 2, p).scale(sigma / (4.0 * (pf + 1.0))),
            _ => {
                let nu = C64::new(pf + 0.5, 0.0);
                let h = struve_h(nu, p)?;
                let y = bessel_y(nu, p)?;
                let mut c = Combo::new();
                c.add(C64::new(1.0, 0.0), &h).add(C64::new(-1.0, 0.0), &y);
                let fact: f64 = (1..=self.p).map(|k| k as f64).product();
                c.finish(Method::ClosedForm).scale(sigma * 2f64.powf(pf - 0.5) * PI.sqrt() * fact)
            }
        })
    }
}

pub fn quantization_case(case_id: u8, p: u32, sigma: C64) -> Result<QuantizationCase> {
    let pi = p as i64;
    let (k, mu, nu, desc) = match case_id {
        1 => (Rational::new(pi * pi, 1), 1.0, 2.0 * p as f64, format!("f = 2 sigma e^(z/2) O_{}(2e^(z/2))", 2 * p)),
        2 => (
            Rational::new((2 * pi + 1).pow(2), 4),
            0.0,
            2.0 * p as f64 + 1.0,
            format!("f = (2 sigma/{}) e^(z/2) O_{}(2e^(z/2))", 2 * p + 1, 2 * p + 1),
        ),
        3 => (
            Rational::new((pi + 1).pow(2), 1),
            -1.0,
            2.0 * p as f64 + 2.0,
            format!("f = sigma/{} S_{}(2e^(z/2))", 4 * (p + 1), 2 * p + 2),
        ),
        4 => {
            let nu = p as f64 + 0.5;
            (
                Rational::new((2 * pi + 1).pow(2), 16),
                nu,
                nu,
                format!("f = sigma 2^({}) sqrt(pi) {}! [H_{nu} - Y_{nu}](2e^(z/2))", nu - 1.0, p),
            )
        }
        _ => return Err(Error::Domain(format!("case id must be 1..4, got {case_id}"))),
    };
    let spec = OdeSpec::new(
        C64::new(2.0, 0.0),
        C64::new(0.5, 0.0),
        C64::new(0.0, 0.0),
        C64::new(nu, 0.0),
        vec![Forcing { sigma, mu: C64::new(mu, 0.0) }],
    )?;
    let solution = SolutionSpec::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0), spec);
    let description = format!("mu = {mu}, K = {k}, {desc}");
    Ok(QuantizationCase { case_id, p, sigma, k, mu, nu, solution, description })
}
