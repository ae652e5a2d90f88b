//! Cross-module oracle tests: independent numerical routes (simulation,
//! finite fits, straddling trajectories) validating the exact machinery.

use allee::algebra::Rational;
use allee::equilibria::{self, EquilibriumKind, Sector};
use allee::model::{nondimensionalize, DimensionalParams, Params, State};
use allee::simulate::{
    self, integrate, integrate_generic, integrate_with_section, phase_portrait, Section,
    Tolerances, Window,
};

fn r(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn params(a: (i64, i64), b: (i64, i64), g: (i64, i64), d: (i64, i64), e: (i64, i64)) -> Params {
    Params::new(r(a.0, a.1), r(b.0, b.1), r(g.0, g.1), r(d.0, d.1), r(e.0, e.1)).unwrap()
}

#[test]
fn dimensional_and_scaled_trajectories_agree() {
    // states and time scale between the dimensional system and its
    // nondimensionalization; integrating both must agree to 1e-8
    let cases = [
        DimensionalParams {
            r: r(3, 2),
            k: r(2, 1),
            a: r(1, 3),
            b: r(1, 2),
            p: r(3, 4),
            h: r(1, 2),
            n: r(5, 4),
            d: r(1, 4),
        },
        DimensionalParams {
            r: r(1, 2),
            k: r(5, 1),
            a: r(2, 5),
            b: r(3, 2),
            p: r(1, 5),
            h: r(2, 3),
            n: r(1, 2),
            d: r(2, 1),
        },
    ];
    let tol = Tolerances {
        abs: 1e-12,
        rel: 1e-12,
    };
    for dp in cases {
        let p = nondimensionalize(&dp).unwrap();
        let (rr, kk) = (dp.r.to_f64(), dp.k.to_f64());
        let (aa, bb, pp, hh, nn, dd) = (
            dp.a.to_f64(),
            dp.b.to_f64(),
            dp.p.to_f64(),
            dp.h.to_f64(),
            dp.n.to_f64(),
            dp.d.to_f64(),
        );
        let dim_rhs = move |x: f64, y: f64| {
            (
                rr * x * (1.0 - x / kk - aa / (x + bb)) - pp * x * y,
                y * (hh - nn * y / (x + dd)),
            )
        };
        let (x0, y0) = (0.8, 0.4);
        let horizon = 6.0;
        let dim = integrate_generic(dim_rhs, State::new(x0, y0), horizon, tol).unwrap();
        // scaled initial state and horizon: x̄ = x/K, ȳ = n·y/(K·h), t̄ = r·t
        let init = State::new(x0 / kk, nn * y0 / (kk * hh));
        let scaled = integrate(&p.to_f64(), init, rr * horizon, tol).unwrap();
        let (_, end_dim) = *dim.last().unwrap();
        let (_, end_scaled) = scaled.last();
        assert!(
            (end_scaled.x * kk - end_dim.x).abs() < 1e-8,
            "prey mismatch: {} vs {}",
            end_scaled.x * kk,
            end_dim.x
        );
        assert!(
            (end_scaled.y * kk * hh / nn - end_dim.y).abs() < 1e-8,
            "predator mismatch: {} vs {}",
            end_scaled.y * kk * hh / nn,
            end_dim.y
        );
    }
}

#[test]
fn stability_tags_confirmed_by_simulation() {
    // attracting kinds shrink a small perturbation over one characteristic
    // time; repelling kinds grow it
    let sets = [
        params((1, 2), (3, 4), (1, 1), (1, 2), (1, 2)), // E1 stable node
        params((1, 4), (6, 25), (1, 2), (1, 2), (1, 4)), // interior stable + saddle
    ];
    let tol = Tolerances::default();
    for p in sets {
        let fp = p.to_f64();
        for e in equilibria::boundary_equilibria(&p)
            .into_iter()
            .chain(equilibria::positive_equilibria(&p))
        {
            let (cx, cy) = (e.x.to_f64(), e.y.to_f64());
            let attracting = matches!(
                e.kind,
                EquilibriumKind::StableNode | EquilibriumKind::StableFocus
            );
            let repelling = matches!(
                e.kind,
                EquilibriumKind::UnstableNode | EquilibriumKind::UnstableFocus
            );
            if !attracting && !repelling {
                continue;
            }
            // slowest contraction/expansion rate sets the wait
            let jac = fp.jacobian(cx.max(1e-12), cy.max(1e-12));
            let tr = jac.fx + jac.gy;
            let det = jac.fx * jac.gy - jac.fy * jac.gx;
            let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
            let rate = if attracting {
                ((tr + disc) / 2.0).abs() // least-negative eigenvalue
            } else {
                ((tr - disc) / 2.0).max(tr / 2.0).abs()
            };
            let horizon = 3.0 / rate.max(1e-3);
            let eps = 1e-4;
            let init = State::new((cx + eps).max(0.0), (cy + eps).max(0.0));
            let traj = integrate(&fp, init, horizon, tol).unwrap();
            let (_, end) = traj.last();
            let d0 = ((init.x - cx).powi(2) + (init.y - cy).powi(2)).sqrt();
            let d1 = ((end.x - cx).powi(2) + (end.y - cy).powi(2)).sqrt();
            if attracting {
                assert!(
                    d1 < 0.5 * d0,
                    "{} at ({cx:.4},{cy:.4}) should attract: {d0:.2e} -> {d1:.2e}",
                    e.label
                );
            } else {
                assert!(
                    d1 > 2.0 * d0,
                    "{} at ({cx:.4},{cy:.4}) should repel: {d0:.2e} -> {d1:.2e}",
                    e.label
                );
            }
        }
    }
}

#[test]
fn prey_axis_saddle_node_sector_is_repelling() {
    // double prey-axis point: trajectories straddling it off-axis both leave
    // a neighborhood (repelling parabolic sector)
    let p = params((1, 2), (9, 16), (1, 1), (1, 2), (1, 2));
    let e4 = equilibria::boundary_equilibria(&p)
        .into_iter()
        .find(|e| e.label == "E4")
        .unwrap();
    assert_eq!(
        e4.kind,
        EquilibriumKind::SaddleNode {
            sector: Sector::Repelling
        }
    );
    let (cx, cy) = (e4.x.to_f64(), 0.0);
    let fp = p.to_f64();
    let tol = Tolerances::default();
    for dx in [-0.002, 0.002] {
        let init = State::new(cx + dx, cy + 0.001);
        let traj = integrate(&fp, init, 60.0, tol).unwrap();
        let max_dist = traj
            .samples
            .iter()
            .map(|(_, s)| ((s.x - cx).powi(2) + (s.y - cy).powi(2)).sqrt())
            .fold(0.0f64, f64::max);
        assert!(
            max_dist > 0.05,
            "straddling trajectory (dx = {dx}) stayed near the saddle-node"
        );
    }
}

#[test]
fn slow_manifold_quadratic_fit_matches_coefficient_sign() {
    // interior fold point: the center-manifold drift rate fits a quadratic
    // whose sign equals sign(coefficient)·sign(trace) (the reported
    // coefficient lives in the trace-normalized time)
    let one = Rational::one();
    let (alpha, gamma, eta, delta) = (r(1, 4), r(1, 2), r(1, 4), r(1, 5));
    let s = &(&(&one + &alpha) + &(&alpha * &gamma)) - &(&gamma * &eta);
    let beta = &(&s * &s) / &(&Rational::int(4) * &(&one + &gamma));
    let p = Params::new(alpha, beta, gamma, delta, eta).unwrap();
    let e = equilibria::positive_equilibria(&p).remove(0);
    let coeff = equilibria::saddle_node_coefficient(&p, &e).unwrap();
    let trace = e.trace.to_f64();
    assert!(trace < 0.0, "sample point has an attracting center manifold");
    let expected_sign = coeff.signum() as f64 * trace.signum();

    let fp = p.to_f64();
    let (cx, cy) = (e.x.to_f64(), e.y.to_f64());
    let tol = Tolerances::default();
    let settle = 8.0 / trace.abs();
    let dt = 0.4 / trace.abs();
    // center direction is (1,1)/√2; measure the drift rate of the center
    // coordinate after the fast transversal has collapsed
    let mut cs = Vec::new();
    let mut rates = Vec::new();
    for s0 in [-0.012f64, -0.008, 0.008, 0.012] {
        let init = State::new(cx + s0 / 2f64.sqrt(), cy + s0 / 2f64.sqrt());
        let traj = integrate(&fp, init, settle + dt, tol).unwrap();
        let at = |t: f64| {
            let (_, st) = traj
                .samples
                .iter()
                .min_by(|(ta, _), (tb, _)| {
                    (ta - t).abs().partial_cmp(&(tb - t).abs()).unwrap()
                })
                .unwrap();
            ((st.x - cx) + (st.y - cy)) / 2f64.sqrt()
        };
        let c1 = at(settle);
        let c2 = at(settle + dt);
        cs.push((c1 + c2) / 2.0);
        rates.push((c2 - c1) / dt);
    }
    // least-squares fit rate ≈ a·c²
    let num: f64 = cs.iter().zip(&rates).map(|(c, v)| c * c * v).sum();
    let den: f64 = cs.iter().map(|c| c.powi(4)).sum();
    let fitted = num / den;
    assert!(
        fitted.signum() == expected_sign,
        "fitted quadratic rate {fitted:.3e} disagrees with sign {expected_sign}"
    );
}

#[test]
fn coextinction_portrait_converges_to_predator_only_state() {
    // above the fold every interior seed ends at (0, η)
    let p = params((1, 2), (1, 1), (1, 1), (1, 2), (1, 2));
    let window = Window {
        x0: 0.0,
        x1: 2.0,
        y0: 0.0,
        y1: 2.0,
    };
    let portrait = phase_portrait(&p, window, (4, 4), 400.0, Tolerances::default());
    assert!(portrait.failures.is_empty());
    let eta = p.eta.to_f64();
    for traj in &portrait.trajectories {
        let (_, end) = traj.last();
        if traj.samples[0].1.x == 0.0 && traj.samples[0].1.y == 0.0 {
            continue; // the origin seed is an equilibrium
        }
        assert!(
            end.x.abs() < 1e-3 && (end.y - eta).abs() < 1e-3,
            "seed ({}, {}) ended at ({}, {})",
            traj.samples[0].1.x,
            traj.samples[0].1.y,
            end.x,
            end.y
        );
    }
    // equilibria markers present and nullclines nonempty
    assert!(portrait.equilibria.iter().any(|(_, _, l)| l.starts_with("E1")));
    assert!(!portrait.nullclines.is_empty());
}

#[test]
fn saddle_separatrix_splits_nearby_seeds() {
    // bistable regime: interior saddle's stable manifold separates the
    // coexistence basin from the predator-only basin
    let p = params((1, 4), (6, 25), (1, 2), (1, 2), (1, 4));
    let reports = equilibria::positive_equilibria(&p);
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].kind, EquilibriumKind::Saddle);
    let fp = p.to_f64();
    let tol = Tolerances::default();
    let run = |x0: f64, y0: f64| {
        let traj = integrate(&fp, State::new(x0, y0), 800.0, tol).unwrap();
        traj.last().1
    };
    let left = run(0.030, 0.30);
    let right = run(0.080, 0.30);
    assert!(
        (left.x - right.x).abs() > 0.1,
        "seeds straddling the separatrix reached the same limit: ({}, {}) vs ({}, {})",
        left.x,
        left.y,
        right.x,
        right.y
    );
}

#[test]
fn empty_grid_gives_empty_portrait() {
    let p = params((1, 2), (1, 1), (1, 1), (1, 2), (1, 2));
    let window = Window {
        x0: 0.0,
        x1: 1.0,
        y0: 0.0,
        y1: 1.0,
    };
    let portrait = phase_portrait(&p, window, (0, 0), 10.0, Tolerances::default());
    assert!(portrait.trajectories.is_empty());
    assert!(portrait.failures.is_empty());
}

#[test]
fn attracting_cycle_pulls_from_both_sides() {
    // the constructed supercritical point of the acceptance suite: inside
    // and outside starts converge to the same cycle radius
    let h = allee::focal::HopfPoint::new(r(1, 10), r(1, 30), r(3, 4), r(1, 7)).unwrap();
    let mut p = h.params();
    p.delta = &p.delta - &r(1, 10_000);
    let fp = p.to_f64();
    let center = State::new(h.z.to_f64(), (&h.z + &h.eta).to_f64());
    let tol = Tolerances::default();
    let section = Section {
        center,
        angle: 0.0,
        min_radius: 0.0,
    };
    let settle_radius = |r0: f64| {
        let (ux, uy) = (1.0, 0.0);
        let init = State::new(center.x + r0 * ux, center.y + r0 * uy);
        let traj = integrate_with_section(&fp, init, 100_000.0, tol, section, 400).unwrap();
        traj.events.last().unwrap().radius
    };
    let from_inside = settle_radius(0.002);
    let from_outside = settle_radius(0.03);
    assert!(
        (from_inside - from_outside).abs() < 1e-4,
        "two-sided settling radii differ: {from_inside:.6e} vs {from_outside:.6e}"
    );
    let cycles = simulate::find_limit_cycles(
        &fp,
        center,
        0.0,
        &[0.002, 0.006, 0.012, 0.02, 0.03],
        4000.0,
        tol,
    )
    .unwrap()
    .cycles;
    assert_eq!(cycles.len(), 1);
    assert!((cycles[0].radius - from_inside).abs() < 1e-3);
    // attracting fixed point of an orientation-preserving return map
    assert!(cycles[0].floquet_slope > 0.0 && cycles[0].floquet_slope < 1.0);
}
