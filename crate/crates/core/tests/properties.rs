use lommel::bessel::{bessel_j, hankel_continuation_coeffs, hankel_pair};
use lommel::continuation::{chebyshev_u, continuation_pq, continue_s, poly_branch_split};
use lommel::gamma::{log_gamma, pochhammer};
use lommel::lommel::{
    abc_polynomials, classify_regime, lommel_big_s, lommel_generic_assembly, lommel_path, lommel_recurrence_step,
    terminating_lommel, Poly, Regime,
};
use lommel::verify::{odd_distance, rel_diff};
use lommel::{branch_shift, logpoint_pow, LogPoint, C64};
use proptest::prelude::*;
use std::f64::consts::PI;

fn complex(re: f64, im: f64) -> impl Strategy<Value = C64> {
    (-re..re, -im..im).prop_map(|(a, b)| C64::new(a, b))
}

fn point(r0: f64, r1: f64) -> impl Strategy<Value = LogPoint> {
    (r0.ln()..r1.ln(), -PI..PI).prop_map(|(a, t)| LogPoint::new(C64::new(a, t)))
}

/// `(mu, nu)` at least `0.05` away from the odd-integer lattice for `mu +- nu`.
fn generic_pair(re: f64) -> impl Strategy<Value = (C64, C64)> {
    (complex(re, 0.3), complex(re, 0.3))
        .prop_filter("generic", |&(mu, nu)| odd_distance(mu + nu) > 0.05 && odd_distance(mu - nu) > 0.05)
}

fn away_from_poles(z: C64) -> bool {
    z.re > 0.0 || (z - z.re.round()).norm() >= 0.1
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn log_gamma_recurrence(z in complex(20.0, 20.0).prop_filter("poles", |&z| away_from_poles(z) && z.norm() <= 19.0)) {
        let lhs = log_gamma(z + 1.0).unwrap().exp();
        let rhs = z * log_gamma(z).unwrap().exp();
        prop_assert!(rel_diff(lhs, rhs) <= 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn pochhammer_step_is_exact(a in complex(5.0, 5.0), n in 0u32..30) {
        prop_assert_eq!(pochhammer(a, n + 1), pochhammer(a, n) * (a + n as f64));
    }

    #[test]
    fn logpoint_pow_is_multiplicative(w in complex(3.0, 20.0), m1 in complex(3.0, 3.0), m2 in complex(3.0, 3.0)) {
        let p = LogPoint::new(w);
        let lhs = logpoint_pow(p, m1 + m2);
        let rhs = logpoint_pow(p, m1) * logpoint_pow(p, m2);
        prop_assert!(rel_diff(lhs, rhs) <= 1e-12);
    }

    #[test]
    fn branch_shift_composes(w in complex(3.0, 20.0), m1 in -20i64..20, m2 in -20i64..20) {
        let p = LogPoint::new(w);
        // exact when the shifts are applied as one integer multiple of pi
        let once = branch_shift(p, m1 + m2);
        let twice = branch_shift(branch_shift(p, m1), m2);
        prop_assert!((once.w - twice.w).norm() <= 1e-12 * (1.0 + p.w.norm()));
        prop_assert_eq!(branch_shift(p, 0), p);
    }

    #[test]
    fn bessel_j_rotation(nu in complex(3.0, 0.5), p in point(0.5, 20.0), m in -3i64..=3) {
        let base = bessel_j(nu, p).unwrap().value;
        let shifted = bessel_j(nu, branch_shift(p, -m)).unwrap().value;
        let want = (C64::new(0.0, m as f64 * PI) * nu).exp() * base;
        prop_assert!((shifted - want).norm() <= 1e-9 * want.norm().max(base.norm()), "{shifted} vs {want}");
    }

    #[test]
    fn hankel_coefficients_invert(nu in complex(3.0, 0.5), k in -4i64..=4) {
        let (a, b, c, d) = hankel_continuation_coeffs(k, nu);
        let (e, f, g, h) = hankel_continuation_coeffs(-k, nu);
        // rows act on (H1, H2); applying k then -k must give the identity
        let prod = [e * a + f * c, e * b + f * d, g * a + h * c, g * b + h * d];
        let id = [C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)];
        let scale = 1.0 + a.norm() + b.norm() + c.norm() + d.norm();
        for (x, y) in prod.iter().zip(id) {
            prop_assert!((x - y).norm() <= 1e-10 * scale * scale, "{prod:?}");
        }
    }

    #[test]
    fn hankel_pair_sums_to_twice_j(nu in complex(2.0, 0.3), p in point(0.5, 30.0)) {
        let (h1, h2) = hankel_pair(nu, p).unwrap();
        let j = bessel_j(nu, p).unwrap();
        let err = (h1.value + h2.value - 2.0 * j.value).norm();
        prop_assert!(err <= 1e-9 * (h1.value.norm() + h2.value.norm()));
    }

    #[test]
    fn big_s_is_even_in_nu((mu, nu) in generic_pair(2.5), p in point(0.5, 15.0)) {
        let a = lommel_big_s(mu, nu, p).unwrap().value;
        let b = lommel_big_s(mu, -nu, p).unwrap().value;
        prop_assert!(rel_diff(a, b) <= 1e-9, "{a} vs {b}");
    }

    #[test]
    fn three_term_recurrence((mu, nu) in generic_pair(2.5), p in point(0.5, 15.0)) {
        prop_assume!(odd_distance(mu + 2.0 + nu) > 0.05 && odd_distance(mu + 2.0 - nu) > 0.05);
        let s = lommel_big_s(mu, nu, p).unwrap();
        let next = lommel_big_s(mu + 2.0, nu, p).unwrap().value;
        let built = lommel_recurrence_step(mu, nu, &s, p).value;
        let scale = next.norm().max(logpoint_pow(p, mu + 1.0).norm());
        prop_assert!((next - built).norm() <= 1e-9 * scale, "{next} vs {built}");
    }

    #[test]
    fn shift_composition((mu, nu) in generic_pair(2.0), p in point(1.0, 5.0), m1 in -2i64..=2, m2 in -2i64..=2) {
        let twice = continue_s(mu, nu, m2, p.branch_shift(m1)).unwrap().value;
        let once = continue_s(mu, nu, m1 + m2, p).unwrap().value;
        prop_assert!(rel_diff(twice, once) <= 1e-7, "{twice} vs {once}");
    }

    #[test]
    fn chebyshev_triple(nu in complex(3.0, 0.3), m in -6i64..=6) {
        prop_assume!(odd_distance(nu + 1.0) > 0.02);
        let lhs = chebyshev_u(m - 1, nu).powi(2) + chebyshev_u(m, nu) * chebyshev_u(-m, nu);
        prop_assert!((lhs - 1.0).norm() <= 1e-11 * (1.0 + chebyshev_u(m, nu).norm().powi(2)));
    }

    #[test]
    fn q_is_previous_p((mu, nu) in generic_pair(2.0), m in -5i64..=5) {
        prop_assume!(m != 0 && m != 1);
        let a = continuation_pq(m, mu, nu).unwrap();
        let b = continuation_pq(m - 1, mu, nu).unwrap();
        prop_assert!((a.q - b.p).norm() <= 1e-11 * a.q.norm().max(1.0));
        prop_assert!(a.p.norm().max(a.q.norm()) > 0.0);
    }

    #[test]
    fn terminating_coefficients(nu in complex(3.0, 0.5), p in 0u32..6, plus in any::<bool>()) {
        let mu = if plus { C64::new((2 * p + 1) as f64, 0.0) - nu } else { C64::new((2 * p + 1) as f64, 0.0) + nu };
        let t = terminating_lommel(mu, nu).unwrap();
        prop_assert_eq!(t.p, p);
        prop_assert_eq!(t.coeffs[0], C64::new(1.0, 0.0));
        let mut c = C64::new(1.0, 0.0);
        for k in 1..=p as usize {
            let a = mu - (2 * k) as f64 + 1.0;
            c *= a * a - nu * nu;
            prop_assert!((t.coeffs[k] - c).norm() <= 1e-12 * c.norm().max(1.0));
        }
        let terminating = matches!(classify_regime(mu, nu), Regime::Terminating { .. });
        prop_assert!(terminating);
    }

    #[test]
    fn abc_shapes(n in 1u32..8) {
        let (a, b, c) = abc_polynomials(n);
        for poly in [&a, &b, &c] {
            prop_assert!(poly.0.len() <= n as usize + 1);
        }
        prop_assert!(b.0.iter().any(|&x| x != 0.0) || c.0.iter().any(|&x| x != 0.0));
        if n == 1 {
            prop_assert!(a.0.iter().all(|&x| x == 0.0) && b.0.iter().all(|&x| x == 0.0));
            prop_assert_eq!(c.eval(C64::new(0.7, 0.2)), C64::new(1.0, 0.0));
        }
    }

    #[test]
    fn poly_split_reconstructs(coeffs in prop::collection::vec(-5.0..5.0f64, 1..7), m in -4i64..=4) {
        let poly = Poly(coeffs);
        let split = poly_branch_split(&poly, m);
        prop_assert_eq!(split.delta_m, 1 + if (m - 1).rem_euclid(2) == 0 { 1 } else { -1 });
        let z = C64::new(0.9, -0.4);
        let back = split.bar.eval(z) + split.hat.eval(z) * split.delta_m as f64;
        prop_assert!((back - poly.eval(z)).norm() <= 1e-12 * (1.0 + poly.eval_abs(z.norm())));
    }

    #[test]
    fn integration_route_matches_series((mu, nu) in generic_pair(2.0), r in 2.5f64..6.0, t in 0.6f64..2.5, upper in any::<bool>()) {
        // at small modulus the series assembly is accurate, so both must agree
        let p = LogPoint::from_polar(r, if upper { t } else { -t });
        prop_assume!(p.zeta().im.abs() >= 2.0);
        let a = lommel_generic_assembly(mu, nu, p).unwrap();
        prop_assume!(a.relative_err() <= 1e-12);
        let b = lommel_path(mu, nu, p).unwrap();
        prop_assert!(rel_diff(a.value, b.value) <= 1e-10, "{} vs {}", a.value, b.value);
    }
}
