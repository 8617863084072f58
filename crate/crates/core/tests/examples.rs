//! Golden values for individual operations. Numbers marked "oracle" come
//! from 40-digit mpmath evaluations; the rest are closed forms.

#![allow(clippy::excessive_precision)]

use lommel::bessel::{bessel_j, bessel_y, hankel1, hankel_continuation_coeffs, hankel_order01_derivative, HankelKind};
use lommel::continuation::{
    chebyshev_u, continuation_pq, continue_s, continue_s_singular, poly_branch_split, singular_k_coeffs,
    struve_continuation, SingularCase,
};
use lommel::gamma::{log_gamma, pochhammer, polygamma01};
use lommel::lommel::{
    abc_polynomials, lommel_asymptotic_truncated, lommel_big_s, lommel_k, lommel_small_s, terminating_lommel, Poly,
};
use lommel::special::{neumann_o, schlafli_s, struve_h};
use lommel::{branch_shift, logpoint_pow, Error, LogPoint, C64};
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(re: f64) -> C64 {
    c(re, 0.0)
}

fn at(zeta: f64) -> LogPoint {
    LogPoint::from_zeta(r(zeta))
}

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1e-300)
}

#[test]
fn gamma_family() {
    assert!(log_gamma(r(1.0)).unwrap().norm() < 1e-14);
    assert!((log_gamma(r(0.5)).unwrap() - r(PI.sqrt().ln())).norm() < 1e-13);
    // oracle
    assert!(close(log_gamma(c(3.7, 2.1)).unwrap(), c(0.7853469580738223888, 2.5830129251152622486), 1e-14));
    assert!(matches!(log_gamma(r(-2.0)), Err(Error::Pole(_))));
    let (psi, psi1) = polygamma01(r(1.0)).unwrap();
    assert!(close(psi, r(-0.5772156649015328606), 1e-15));
    assert!(close(psi1, r(PI * PI / 6.0), 1e-14));
    assert!(close(polygamma01(r(0.5)).unwrap().0, r(-1.9635100260214234794), 1e-15));
    assert_eq!(pochhammer(c(0.3, 0.2), 0), r(1.0));
    assert_eq!(pochhammer(r(1.0), 5), r(120.0));
    assert!(close(pochhammer(r(0.7), 3), r(0.7 * 1.7 * 2.7), 1e-15));
}

#[test]
fn powers_and_sheets() {
    assert_eq!(logpoint_pow(LogPoint::new(r(0.0)), c(2.3, -1.1)), r(1.0));
    assert!(close(logpoint_pow(LogPoint::new(r(2f64.ln())), r(3.0)), r(8.0), 1e-15));
    assert!((logpoint_pow(LogPoint::new(c(0.0, PI)), r(0.5)) - c(0.0, 1.0)).norm() < 1e-15);
    let p = LogPoint::new(c(0.0, PI / 2.0));
    assert_eq!(branch_shift(p, 0), p);
    assert!((branch_shift(p, 1).w - c(0.0, -PI / 2.0)).norm() < 1e-15);
    let q = LogPoint::new(c(1.0, PI / 4.0));
    assert!((branch_shift(q, -2).w - c(1.0, PI / 4.0 + 2.0 * PI)).norm() < 1e-14);
}

#[test]
fn bessel_examples() {
    let j0 = bessel_j(r(0.0), at(1e-8)).unwrap().value;
    assert!((j0 - r(1.0)).norm() <= 1e-15);
    let amp = (2.0 / (PI * 2.0)).sqrt();
    assert!(close(bessel_j(r(0.5), at(2.0)).unwrap().value, r(amp * 2f64.sin()), 1e-14));
    assert!(close(bessel_y(r(0.5), at(2.0)).unwrap().value, r(-amp * 2f64.cos()), 1e-14));
    // oracle
    let h = hankel1(r(0.0), at(5.0)).unwrap().value;
    assert!(close(h, c(-0.17759677131433830435, -0.30851762524903378007), 1e-14));
    assert_eq!(hankel_continuation_coeffs(0, c(0.3, 0.2)), (r(1.0), r(0.0), r(0.0), r(1.0)));
    let d = hankel_order01_derivative(HankelKind::First, at(2.0)).unwrap().value;
    assert!(close(d, -hankel1(r(1.0), at(2.0)).unwrap().value, 1e-15));
}

#[test]
fn lommel_examples() {
    // oracle
    assert!(close(lommel_small_s(r(0.0), r(0.0), at(1.0)).unwrap().value, r(0.89324374097502616834), 1e-15));
    let z = 1e-4;
    let s = lommel_small_s(r(1.0), r(0.0), at(z)).unwrap().value;
    assert!(close(s, r(z * z / 4.0), 1e-8));
    assert!(close(lommel_k(r(1.0), r(0.0)).unwrap(), r(1.0), 1e-15));
    // oracle
    assert!(close(lommel_k(r(0.4), r(0.2)).unwrap(), r(1.1438562484732153889), 1e-14));
    assert!(close(lommel_big_s(r(1.0), r(2.0), at(3.0)).unwrap().value, r(13.0 / 9.0), 1e-15));
    assert!(close(lommel_big_s(r(1.5), r(1.5), at(4.0)).unwrap().value, r(2.25), 1e-15));
    // oracle
    assert!(close(lommel_big_s(r(0.3), r(0.1), at(2.0)).unwrap().value, r(0.57651574116991389498), 1e-13));
    for (mu, nu, c1) in [(1.0, 2.0, -4.0), (0.0, 3.0, -8.0), (-1.0, 4.0, -12.0)] {
        let t = terminating_lommel(r(mu), r(nu)).unwrap();
        assert_eq!(t.p, 1);
        assert_eq!(t.coeffs, vec![r(1.0), r(c1)]);
    }
    assert!(matches!(terminating_lommel(r(0.3), r(0.1)), Err(Error::NotTerminating(_))));
    let (a, b, cc) = abc_polynomials(1);
    assert!(a.0.iter().all(|&x| x == 0.0) && b.0.iter().all(|&x| x == 0.0));
    assert_eq!(cc.eval(r(2.0)), r(1.0));
    let (a, b, cc) = abc_polynomials(2);
    let z = c(1.3, -0.4);
    assert_eq!((a.eval(z), b.eval(z), cc.eval(z)), (r(1.0), -z * z, r(-2.0)));
    for order in 1..4 {
        let e = lommel_asymptotic_truncated(r(1.0), r(2.0), at(3.0), order).unwrap();
        assert!(close(e.value, r(13.0 / 9.0), 1e-15));
        // the omitted coefficient vanishes, so only rounding is reported
        assert!(e.abs_err_est <= 1e-14 * e.value.norm(), "{}", e.abs_err_est);
    }
}

#[test]
fn continuation_examples() {
    let nu = c(0.37, 0.1);
    assert_eq!(chebyshev_u(0, nu), r(1.0));
    for m in 1..6 {
        assert!(close(chebyshev_u(m - 1, r(2.0)), r(m as f64), 1e-12));
    }
    let pq = continuation_pq(1, c(0.3, 0.1), nu).unwrap();
    assert!((pq.p - 1.0).norm() < 1e-14 && pq.q.norm() < 1e-14);
    let p = at(2.0);
    let s = lommel_big_s(r(0.3), r(0.1), p).unwrap().value;
    assert_eq!(continue_s(r(0.3), r(0.1), 0, p).unwrap().value, s);
    let (kp, km) = singular_k_coeffs(SingularCase::NuZero, r(0.0), 1).unwrap();
    assert!(close(kp, r(-PI * PI / 2.0), 1e-15));
    assert_eq!(km, r(0.0));
    let (kp, _) = singular_k_coeffs(SingularCase::NuGeneric, r(0.7), 0).unwrap();
    assert!(kp.norm() < 1e-15);
    // U_0 = 1 and the bracket e^{0} - 1 vanishes: K'_- at m = 1 is zero
    let (_, km) = singular_k_coeffs(SingularCase::NuGeneric, r(0.7), 1).unwrap();
    assert!(km.norm() < 1e-14);
    let split = poly_branch_split(&Poly(vec![2.5]), 3);
    assert!(split.hat.0.iter().all(|&x| x == 0.0));
    assert_eq!(split.bar.eval(r(1.7)), r(2.5));
    let split = poly_branch_split(&Poly(vec![0.0, 1.0]), 1);
    assert_eq!(split.delta_m, 2);
    assert_eq!(split.bar.eval(r(1.7)), r(-1.7));
    let poly = Poly(vec![1.0, 1.0, 1.0]);
    let split = poly_branch_split(&poly, 2);
    assert_eq!(split.delta_m, 0);
    assert_eq!(split.bar.eval(r(1.7)), poly.eval(r(1.7)));
    let base = lommel_big_s(r(0.7 - 3.0), r(0.7), at(1.5)).unwrap().value;
    assert_eq!(continue_s_singular(r(0.7), 1, 0, at(1.5)).unwrap().value, base);
    let h = struve_h(r(0.5), at(2.0)).unwrap().value;
    assert!(close(struve_continuation(r(0.5), 2, at(2.0)).unwrap().value, -h, 1e-15));
    assert_eq!(struve_continuation(r(0.5), 0, at(2.0)).unwrap().value, h);
}

#[test]
fn polynomial_examples() {
    assert!(close(neumann_o(1, at(2.0)).value, r(0.25), 1e-15));
    assert!(close(schlafli_s(2, at(2.0)).value, r(1.0), 1e-15));
}
