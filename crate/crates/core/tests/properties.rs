use coophunt::bifurcation::{admissible, bt_curves};
use coophunt::coeffs::*;
use coophunt::dynamics::{integrate_field, integrate_with, IntegratorOptions, Stepper};
use coophunt::equilibria::{positive_equilibria, quartic_f_prime, trace_factor};
use coophunt::hopf::{first_lyapunov_projection, focal_values, hopf_critical, in_p, FOCAL_TOL};
use coophunt::model::{field2, field3, jacobian3, rescaling_factor};
use coophunt::polyalg::{resultant_exact, DEFAULT_BIT_CAP, Poly};
use coophunt::{ParamSet, State};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = ParamSet> {
    (0.1f64..10.0, 0.1f64..10.0, 0.1f64..10.0, 0.1f64..10.0).prop_map(|(a, k, s, h)| ParamSet::new(a, k, s, h).unwrap())
}

fn state() -> impl Strategy<Value = State> {
    (0.01f64..5.0, 0.01f64..5.0).prop_map(|(x, y)| State::new(x, y))
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = Poly<BigInt>> {
    prop::collection::vec(-20i64..=20, 1..=max_deg + 1).prop_map(|c| Poly::new(c.into_iter().map(BigInt::from).collect()))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly<BigInt>> {
    int_poly(max_deg).prop_filter("nonzero", |p| p.degree().is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn jacobian_matches_central_differences(p in params(), s in state()) {
        let j = jacobian3(&p, s);
        let f = |x: f64, y: f64| field3(&p, State::new(x, y));
        for (col, (dx, dy)) in [(1.0, 0.0), (0.0, 1.0)].into_iter().enumerate() {
            let step = 1e-6 * if col == 0 { s.x.max(1e-3) } else { s.y.max(1e-3) };
            let plus = f(s.x + step * dx, s.y + step * dy);
            let minus = f(s.x - step * dx, s.y - step * dy);
            let fd = [(plus.0 - minus.0) / (2.0 * step), (plus.1 - minus.1) / (2.0 * step)];
            for row in 0..2 {
                let scale = j[row][0].abs().max(j[row][1].abs()).max(1e-12);
                prop_assert!((j[row][col] - fd[row]).abs() <= 1e-6 * scale, "J[{row}][{col}] = {} vs {}", j[row][col], fd[row]);
            }
        }
    }

    #[test]
    fn field3_is_positive_multiple_of_field2(p in params(), s in state()) {
        let (a, b) = field3(&p, s);
        let (c, d) = field2(&p, s);
        let r = rescaling_factor(&p, s);
        prop_assert!(r > 0.0);
        prop_assert!((a - r * c).abs() <= 1e-12 * (a.abs() + (r * c).abs() + 1e-300));
        prop_assert!((b - r * d).abs() <= 1e-12 * (b.abs() + (r * d).abs() + 1e-300));
    }

    #[test]
    fn axes_are_invariant(p in params(), t in 0.0f64..10.0) {
        prop_assert_eq!(field3(&p, State::new(0.0, t)).0, 0.0);
        prop_assert_eq!(field3(&p, State::new(t, 0.0)).1, 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn determinant_and_trace_sign_laws(
        a in 0.1f64..60.0, k in 0.2f64..5.0, s in 0.05f64..3.0, h in 0.05f64..0.95,
    ) {
        let p = ParamSet::new(a, k, s, h).unwrap();
        let fp = quartic_f_prime(&p);
        let eqs = positive_equilibria(&p).unwrap();
        for (i, e) in eqs.iter().enumerate() {
            let d = fp.eval(&e.point.x);
            if d.abs() > 1e-8 && !e.near_degenerate {
                prop_assert_eq!(e.det.signum(), -d.signum(), "det law at {:?}", e.point);
            }
            if i == 0 {
                let t = trace_factor(&p, e.point.x);
                if t.abs() > 1e-8 && !e.near_degenerate {
                    prop_assert_eq!(e.trace.signum(), t.signum(), "trace law at {:?}", e.point);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orbits_stay_in_the_orthant(p in params(), s in state(), t_end in 1.0f64..50.0) {
        let tr = integrate_with(&p, s, t_end, IntegratorOptions::default()).unwrap();
        prop_assert!(tr.samples.iter().all(|q| q.x >= -1e-10 && q.y >= -1e-10));
    }

    #[test]
    fn halving_tolerance_moves_endpoint_little(p in params(), s in state()) {
        let tol = 1e-8;
        let a = integrate_with(&p, s, 5.0, IntegratorOptions::with_tol(tol)).unwrap().last();
        let b = integrate_with(&p, s, 5.0, IntegratorOptions::with_tol(tol / 2.0)).unwrap().last();
        let scale = 1.0 + a.x.abs().max(a.y.abs());
        prop_assert!((a.x - b.x).abs().max((a.y - b.y).abs()) < 10.0 * tol * scale * 100.0);
    }

    #[test]
    fn orbits_of_both_fields_trace_the_same_curve(k in 0.5f64..2.0, s in 0.2f64..1.0, x in 0.2f64..1.0, y in 0.05f64..0.5) {
        let p = ParamSet::new(5.0, k, s, 0.5).unwrap();
        let s0 = State::new(x, y);
        let opts = IntegratorOptions { rtol: 1e-11, atol: 1e-14, ..Default::default() };
        let f3 = |q: State| field3(&p, q);
        let f2 = |q: State| field2(&p, q);
        let (a, _) = integrate_field(&f3, s0, 2.0, opts).unwrap();
        let end = a.last().unwrap();
        // Closest approach of the field2 orbit to the end of the field3 orbit,
        // located on the dense output and refined with full steps.
        let mut st = Stepper::new(&f2, s0, 2.0 * 60.0, opts);
        let dist = |q: State| (q.x - end.x).hypot(q.y - end.y);
        let mut best = (f64::INFINITY, None);
        while let Some(seg) = st.step().unwrap() {
            for i in 0..=32 {
                let dq = dist(seg.eval(seg.t0 + (seg.t1 - seg.t0) * i as f64 / 32.0));
                if dq < best.0 {
                    best = (dq, Some(seg));
                }
            }
        }
        let seg = best.1.unwrap();
        let q = (0..=2000)
            .map(|i| st.polish(&seg, (seg.t1 - seg.t0) * i as f64 / 2000.0))
            .min_by(|a, b| dist(*a).total_cmp(&dist(*b)))
            .unwrap();
        // Offset across the tangent line, so grid spacing along the orbit does not count.
        let (u, v) = f2(q);
        let d = ((end.x - q.x) * v - (end.y - q.y) * u).abs() / u.hypot(v);
        prop_assert!(d < 1e-6, "distance {d}");
    }

    #[test]
    fn printed_and_projected_first_lyapunov_agree(k in 0.7f64..6.0, h in 0.1f64..0.9, x1 in 0.2f64..1.4) {
        prop_assume!(in_p(k, h, x1));
        let c = hopf_critical(k, h, x1).unwrap();
        let r = focal_values(&c).unwrap();
        prop_assume!(r.f1.abs() > FOCAL_TOL * (1.0 + k.powi(5)));
        let proj = first_lyapunov_projection(&c.params(), c.e1());
        prop_assert_eq!(proj.signum(), r.l1.signum());
    }

    #[test]
    fn pseudo_division_identity(f in int_poly(8), g in nonzero_poly(5)) {
        let (q, r) = f.pseudo_div(&g);
        let dg = g.degree().unwrap();
        let k = f.degree().map_or(0, |df| (df + 1).saturating_sub(dg));
        let lhs = f.scale(&num_traits::pow(g.lc(), k));
        prop_assert_eq!(lhs, &(&q * &g) + &r);
        prop_assert!(r.degree().is_none_or(|d| d < dg));
    }

    #[test]
    fn resultant_identities(f in nonzero_poly(5), g in nonzero_poly(5), hh in nonzero_poly(3), a in -6i64..=6) {
        let res = |u: &Poly<BigInt>, v: &Poly<BigInt>| resultant_exact(u, v, DEFAULT_BIT_CAP).unwrap();
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        prop_assume!(m > 0 && n > 0 && hh.degree().unwrap() > 0);
        // Antisymmetry.
        let sign = if (m * n) % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        prop_assert_eq!(res(&f, &g), sign * res(&g, &f));
        // Multiplicativity.
        prop_assert_eq!(res(&(&f * &g), &hh), res(&f, &hh) * res(&g, &hh));
        // Against a linear factor: res(f, x − a) = (−1)^m f(a).
        let lin = Poly::new(vec![BigInt::from(-a), BigInt::one()]);
        let fa = f.eval(&BigInt::from(a));
        let expect = if m % 2 == 1 { -fa } else { fa };
        prop_assert_eq!(res(&f, &lin), expect);
        // Common factor.
        prop_assert!(res(&(&f * &hh), &(&g * &hh)).is_zero());
    }
}

/// β₁, β₂ in exact arithmetic from the stored coefficient tables.
fn betas_exact(x: &BigRational, h: &BigRational, e1: &BigRational, e2: &BigRational) -> (BigRational, BigRational) {
    let v = [x.clone(), h.clone(), e1.clone(), e2.clone()];
    let cd = [&C00, &C01, &C02, &C10, &C11, &C20, &D00, &D01, &D02, &D10, &D11, &D20];
    let vals: Vec<BigRational> = cd.iter().map(|c| c.eval_exact(&v)).collect();
    let [e00, e10, e01, e20, e02, e11] = [&E00, &E10, &E01, &E20, &E02, &E11].map(|e| e.eval_exact(&vals));
    let two = BigRational::from_integer(2.into());
    let f00 = &e00 - &e10 * &e01 / &e11 + &e20 * &e01 * &e01 / (&e11 * &e11);
    let f10 = &e10 - &two * &e20 * &e01 / &e11;
    let mu2 = &f10 - &two * &e02 * &f00;
    let a = &e20 + &two * &e02 * (&e02 * &f00 - &f10);
    let b = e11;
    let beta1 = num_traits::pow(b.clone(), 4) / num_traits::pow(a.clone(), 3) * &f00;
    let beta2 = &b * &b / (&a * &a) * mu2;
    (beta1, beta2)
}

/// det ∂(β₁, β₂)/∂(ε₁, ε₂) at the cusp, by central differences in exact arithmetic.
fn beta_jacobian_det(xq: BigRational, hq: BigRational) -> f64 {
    let step = BigRational::new(1.into(), BigInt::from(10).pow(12));
    let zero = BigRational::zero();
    let col = |u: &BigRational, v: &BigRational| {
        let (p1, p2) = betas_exact(&xq, &hq, u, v);
        let (m1, m2) = betas_exact(&xq, &hq, &-u, &-v);
        let two_step = &step + &step;
        [(p1 - m1) / &two_step, (p2 - m2) / &two_step]
    };
    let (c1, c2) = (col(&step, &zero), col(&zero, &step));
    let det = &c1[0] * &c2[1] - &c2[0] * &c1[1];
    coophunt::polyalg::rational_to_f64(&det)
}

#[test]
fn normal_form_anchored_on_admissible_grid() {
    let mut checked = 0;
    for i in 1..=14 {
        for j in 1..=9 {
            let (x, h) = (0.1 * i as f64, 0.1 * j as f64);
            if !admissible(x, h) {
                continue;
            }
            let Ok(bt) = bt_curves(x, h) else { continue };
            if !(bt.sigma_star > 0.0 && bt.alpha_star > 0.0 && bt.kappa2 > 0.0) {
                continue;
            }
            let nf = bt.normal_form(0.0, 0.0);
            assert!(nf.beta1.abs() < 1e-9 && nf.beta2.abs() < 1e-9, "({x},{h}): {nf:?}");
            assert!(nf.a < 0.0 && nf.b > 0.0, "({x},{h}): A = {}, B = {}", nf.a, nf.b);
            assert!(bt.f12 < bt.f22 && bt.f22 < bt.f32, "({x},{h}) curve order");
            let det = beta_jacobian_det(qr(i, 10), qr(j, 10));
            let want = bt.predicted_jacobian_det();
            assert!((det - want).abs() <= 1e-6 * want.abs(), "({x},{h}): det {det} vs {want}");
            checked += 1;
        }
    }
    assert!(checked > 40, "only {checked} grid points");
}
