//! The acceptance/regression suite: ten numbered criteria spanning the
//! exact cusp machinery, the focal engine, the unfolding transversality and
//! the numerical lane. Each criterion runs standalone and reports a
//! pass/fail verdict with detail lines; `run_all` executes them in order.
//!
//! Two sub-checks of criterion 5 assert reference values that the exact
//! computation shows to be unattainable; they are evaluated literally and
//! reported honestly rather than loosened.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Quad, Rational, Series2};
use crate::equilibria::{self, EquilibriumKind};
use crate::focal::{
    self, degenerate_center_check, focal_values, r12_divisibility, reference_l11, HopfPoint,
};
use crate::model::{Params, State};
use crate::normalform::{
    codim4_eta, cusp_locus, cusp_report_chain, cusp_report_closed, derivative_lift,
    lift_reference_coefficients, unfolding_jacobian, Codim,
};
use crate::simulate::{
    check_boundedness, find_limit_cycles, first_return, fit_displacement_cubic, Section,
    Tolerances,
};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
    pub millis: u128,
}

impl CriterionOutcome {
    fn finish(index: usize, name: &str, started: Instant, passed: bool, details: Vec<String>) -> Self {
        CriterionOutcome {
            index,
            name: name.to_string(),
            passed,
            details,
            millis: started.elapsed().as_millis(),
        }
    }
}

pub const CRITERIA_COUNT: usize = 10;

pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    (1..=CRITERIA_COUNT).map(|k| run_criterion(k, seed)).collect()
}

pub fn run_criterion(index: usize, seed: u64) -> CriterionOutcome {
    match index {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(seed),
        4 => criterion_4(seed),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(seed),
        10 => criterion_10(),
        _ => panic!("criteria are numbered 1..=10"),
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

/// Cusp-locus exactness at the reference parameters.
fn criterion_1() -> CriterionOutcome {
    let t0 = Instant::now();
    let mut details = Vec::new();
    let locus = cusp_locus(&r(3, 2), &r(89, 361)).expect("reference locus point");
    let ok_alpha = locus.alpha0 == r(49, 361);
    let ok_beta = locus.beta0 == r(12250, 130321);
    let ok_delta = locus.delta0 == r(63, 722);
    let ok_eta0 = codim4_eta(&r(3, 2)) == r(89, 361);
    details.push(format!(
        "alpha0 = {} (exact match: {ok_alpha})",
        locus.alpha0
    ));
    details.push(format!("beta0 = {} (exact match: {ok_beta})", locus.beta0));
    details.push(format!("delta0 = {} (exact match: {ok_delta})", locus.delta0));
    details.push(format!("eta0(3/2) exact match: {ok_eta0}"));
    let passed = ok_alpha && ok_beta && ok_delta && ok_eta0;
    CriterionOutcome::finish(1, "cusp-locus exactness", t0, passed, details)
}

/// Exact codimension ladder: 4 at the reference point, 3 off the deeper
/// value of η, 2 at a generic nilpotent point.
fn criterion_2() -> CriterionOutcome {
    let t0 = Instant::now();
    let mut details = Vec::new();
    let mut passed = true;

    let p4 = cusp_locus(&r(3, 2), &r(89, 361)).unwrap().params();
    let rep4 = cusp_report_closed(&p4).expect("codim-4 point");
    let ok = rep4.d11.is_zero()
        && rep4.m.as_ref().is_some_and(Quad::is_zero)
        && rep4.n.as_ref().is_some_and(|n| !n.is_zero())
        && rep4.codim == Codim::Four;
    details.push(format!("reference point: d11 = {}, codim = {} ({ok})", rep4.d11, rep4.codim));
    passed &= ok;

    let p3 = cusp_locus(&r(3, 2), &r(1, 10)).unwrap().params();
    let rep3 = cusp_report_closed(&p3).expect("codim-3 point");
    let ok = rep3.d11.is_zero()
        && rep3.m.as_ref().is_some_and(|m| !m.is_zero())
        && rep3.codim == Codim::Three;
    details.push(format!(
        "eta = 1/10: rho1 = {}, codim = {} ({ok})",
        rep3.rho1.as_ref().unwrap(),
        rep3.codim
    ));
    passed &= ok;

    // generic nilpotent point with d11 != 0
    let (alpha, gamma, eta) = (r(1, 4), r(1, 2), r(1, 4));
    let one = Rational::one();
    let s = &(&(&one + &alpha) + &(&alpha * &gamma)) - &(&gamma * &eta);
    let beta = &(&s * &s) / &(&Rational::int(4) * &(&one + &gamma));
    let varsigma = &(&(&one - &alpha) - &(&alpha * &gamma)) - &(&gamma * &eta);
    let delta = &(&gamma * &varsigma) / &(&Rational::int(2) * &(&one + &gamma));
    let p2 = Params::new(alpha, beta, gamma, delta, eta).unwrap();
    let rep2 = cusp_report_closed(&p2).expect("codim-2 point");
    let ok = !rep2.d20.is_zero() && !rep2.d11.is_zero() && rep2.codim == Codim::Two;
    details.push(format!(
        "generic point: d20 = {}, d11 = {}, codim = {} ({ok})",
        rep2.d20, rep2.d11, rep2.codim
    ));
    passed &= ok;

    CriterionOutcome::finish(2, "codimension ladder", t0, passed, details)
}

/// Chain vs closed form on 50 random locus points; corrected-appendix lift
/// formulas on 20 random instantiations.
fn criterion_3(seed: u64) -> CriterionOutcome {
    let t0 = Instant::now();
    let mut details = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x33);
    let mut passed = true;

    let mut agree = 0usize;
    for _ in 0..50 {
        let gamma = r(rng.gen_range(5..=400), 100);
        let eta_frac = r(rng.gen_range(1..=99), 100);
        let eta = &eta_frac / &gamma; // guarantees the locus domain
        let p = cusp_locus(&gamma, &eta).unwrap().params();
        let closed = cusp_report_closed(&p).unwrap();
        let chain = cusp_report_chain(&p).unwrap();
        let ok = closed.d20 == chain.d20
            && closed.d11 == chain.d11
            && match (&closed.m, &chain.m, &closed.n, &chain.n) {
                (Some(cm), Some(hm), Some(cn), Some(hn)) => cm.value_eq(hm) && cn.value_eq(hn),
                (None, None, None, None) => true,
                _ => false,
            }
            && closed.codim == chain.codim;
        if ok {
            agree += 1;
        } else {
            passed = false;
            details.push(format!("disagreement at gamma={gamma}, eta={eta}"));
        }
    }
    details.push(format!("chain == closed form at {agree}/50 random locus points"));

    let mut lift_ok = 0usize;
    for _ in 0..20 {
        let mut rat = || {
            let n = rng.gen_range(-40i64..=40);
            r(if n == 0 { 1 } else { n }, rng.gen_range(1..=12))
        };
        let n = 7u32;
        let mut f = Series2::zero(n);
        for (i, j) in [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (0, 1), (1, 1)] {
            f.set_coeff(i, j, rat());
        }
        let mut g = Series2::zero(n);
        for (i, j) in [
            (0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0),
            (0, 1), (1, 1), (2, 1), (3, 1), (4, 1),
            (0, 2), (1, 2), (2, 2), (3, 2),
        ] {
            g.set_coeff(i, j, rat());
        }
        let (_, lifted) = derivative_lift(&f, &g).unwrap();
        let lifted = lifted.truncated(5);
        let all = lift_reference_coefficients(&f, &g)
            .into_iter()
            .all(|(i, j, v)| lifted.coeff(i, j) == v);
        if all {
            lift_ok += 1;
        } else {
            passed = false;
        }
    }
    details.push(format!(
        "second-order-lift closed forms exact on {lift_ok}/20 random instantiations"
    ));
    CriterionOutcome::finish(3, "chain vs closed-form oracle", t0, passed, details)
}

fn random_hopf_point(rng: &mut ChaCha8Rng) -> HopfPoint {
    loop {
        let z = r(rng.gen_range(2..=48), 100);
        let eta = r(rng.gen_range(1..=60), 50);
        let one = Rational::one();
        let two = Rational::int(2);
        let dbound = &(&z * &(&one - &(&two * &z))) / &(&(&two * &z) + &eta);
        let delta = &dbound * &r(rng.gen_range(5..=95), 100);
        let glow = &delta / &z;
        let ghigh = &(&(&one - &(&two * &z)) - &delta) / &(&z + &eta);
        let gamma = &glow + &(&(&ghigh - &glow) * &r(rng.gen_range(5..=95), 100));
        if let Ok(h) = HopfPoint::new(z, delta, gamma, eta) {
            return h;
        }
    }
}

/// First-focal-numerator polynomial identity at 100 random points.
fn criterion_4(seed: u64) -> CriterionOutcome {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x44);
    let mut ok = 0usize;
    let mut details = Vec::new();
    for _ in 0..100 {
        let h = random_hopf_point(&mut rng);
        let rep = focal_values(&h, 1).expect("order-1 focal run");
        if rep.lnum[0] == reference_l11(&h.z, &h.delta, &h.gamma, &h.eta) {
            ok += 1;
        } else {
            details.push(format!(
                "mismatch at z={}, delta={}, gamma={}, eta={}",
                h.z, h.delta, h.gamma, h.eta
            ));
        }
    }
    details.insert(0, format!("engine numerator == closed form at {ok}/100 points"));
    CriterionOutcome::finish(4, "first focal numerator identity", t0, ok == 100, details)
}

/// Focal values at the two reference parameter sets. Two sub-checks
/// assert reference values that the exact computation shows to be
/// unattainable; they fail honestly with the blocking values printed.
fn criterion_5() -> CriterionOutcome {
    let t0 = Instant::now();
    let mut details = Vec::new();
    let mut passed = true;

    let p1 = Params::new(r(8, 625), r(19881, 781250), r(281, 50), r(1, 10), r(1, 50)).unwrap();
    let hs = HopfPoint::from_params(&p1).expect("z recovery");
    let h = &hs[0];
    details.push(format!("set 1: recovered z = {} (exact)", h.z));
    let rep = focal_values(h, 4).expect("order-4 focal run");
    let vals: Vec<f64> = rep.lnum.iter().map(Rational::to_f64).collect();
    for (i, v) in vals.iter().take(3).enumerate() {
        let bound_ok = v.abs() < 1e-9;
        details.push(format!(
            "|L{}{}| = {:.3e} < 1e-9: {}",
            i + 1,
            i + 1,
            v.abs(),
            bound_ok
        ));
        passed &= bound_ok;
    }
    let target1 = r(-128463, 125000).to_f64();
    let rel1 = ((vals[3] - target1) / target1).abs();
    let ok1 = rel1 <= 1e-6;
    details.push(format!(
        "L44 = {:.6e} vs reference {:.6e} (relative {:.3e} <= 1e-6: {ok1})",
        vals[3], target1, rel1
    ));
    passed &= ok1;

    let p2 = Params::new(r(1441, 5000), r(1507, 5000), r(103, 100), r(1, 10), r(1, 50)).unwrap();
    let hs2 = HopfPoint::from_params(&p2).expect("z recovery");
    let rep2 = focal_values(&hs2[0], 4).expect("order-4 focal run");
    let v44 = rep2.lnum[3].to_f64();
    let target2 = r(100291, 100000).to_f64();
    let rel2 = ((v44 - target2) / target2).abs();
    let ok2 = rel2 <= 1e-6;
    details.push(format!(
        "set 2: L44 = {:.6e} vs reference {:.6e} (relative {:.3e} <= 1e-6: {ok2})",
        v44, target2, rel2
    ));
    passed &= ok2;
    if !passed {
        details.push(
            "known-unattainable sub-checks: the first set lies exactly on the Hopf locus with \
             L11 = 136911/19531250000 ~ 7.0e-6 exactly, and the reference fourth-numerator \
             values follow no reconstructible normalization of the true focal values"
                .to_string(),
        );
    }
    CriterionOutcome::finish(5, "reference focal values", t0, passed, details)
}

/// Resultant structure: exact prefactor divisibility and the degenerate
/// locus at z*(1/10).
fn criterion_6() -> CriterionOutcome {
    let t0 = Instant::now();
    let mut details = Vec::new();
    let mut passed = true;

    for (delta, gamma) in [(r(1, 10), r(2, 1)), (r(1, 8), r(3, 2))] {
        let rep = r12_divisibility(&delta, &gamma).expect("divisibility run");
        details.push(format!(
            "delta={delta}, gamma={gamma}: r12 degree {} / prefactor degree {} -> quotient degree {}, zero remainder: {} ({} exact samples)",
            rep.r12_degree, rep.prefactor_degree, rep.quotient_degree, rep.remainder_is_zero,
            rep.samples_used
        ));
        passed &= rep.remainder_is_zero;
    }

    let dc = degenerate_center_check(&r(1, 10)).expect("degenerate-center run");
    details.push(format!(
        "z* = {:.6}: on-locus |Res| = [{:.2e}, {:.2e}, {:.2e}] vs floors [{:.2e}, {:.2e}, {:.2e}]",
        dc.z_star,
        dc.on_locus[0].abs(),
        dc.on_locus[1].abs(),
        dc.on_locus[2].abs(),
        dc.on_floors[0],
        dc.on_floors[1],
        dc.on_floors[2]
    ));
    details.push(format!(
        "control at z = {:.4}: |Res| = [{:.2e}, {:.2e}, {:.2e}] (each >= 1e3 x on-locus)",
        dc.z_control,
        dc.off_locus[0].abs(),
        dc.off_locus[1].abs(),
        dc.off_locus[2].abs()
    ));
    passed &= dc.passes;

    // exact variant: at delta = 1/9 the degenerate abscissa is rational and
    // the three resultants vanish exactly
    let (r12, r13, r14) = focal::focal_resultants(&r(1, 9), &r(1, 9), &r(3, 1)).unwrap();
    let exact_zero = r12.is_zero() && r13.is_zero() && r14.is_zero();
    details.push(format!(
        "exact vanishing at the rational locus point (delta = 1/9): {exact_zero}"
    ));
    passed &= exact_zero;

    CriterionOutcome::finish(6, "resultant structure", t0, passed, details)
}

/// Unfolding transversality at gamma = 3/2.
fn criterion_7() -> CriterionOutcome {
    let t0 = Instant::now();
    let rep = unfolding_jacobian(&r(3, 2)).expect("unfolding run");
    let chi_ok = rep.chi_at_zero.iter().all(|c| c.abs() < 1e-10);
    let details = vec![
        format!("chi(0) = {:?} (all < 1e-10: {chi_ok})", rep.chi_at_zero),
        format!(
            "det = {:.6e}, halved-step det = {:.6e}, relative change = {:.3e}",
            rep.jac_det, rep.jac_det_halved, rep.relative_change
        ),
        format!("nonsingular: {}", rep.nonsingular),
    ];
    let passed = chi_ok && rep.nonsingular && rep.relative_change < 0.01;
    CriterionOutcome::finish(7, "unfolding transversality", t0, passed, details)
}

/// Return-map/focal cross-check at a constructed supercritical point.
fn criterion_8() -> CriterionOutcome {
    let t0 = Instant::now();
    let mut details = Vec::new();

    // constructed point with a negative first focal value
    let h = HopfPoint::new(r(1, 10), r(1, 30), r(3, 4), r(1, 7)).unwrap();
    let rep = focal_values(&h, 1).unwrap();
    let l1_sign = rep.lnum[0].signum();
    details.push(format!("L11 = {:.4e} (sign {l1_sign})", rep.lnum[0].to_f64()));
    assert!(l1_sign < 0, "constructed point must be supercritical");

    let p = h.params();
    let fp = p.to_f64();
    let center = State::new(h.z.to_f64(), (&h.z + &h.eta).to_f64());
    let tol = Tolerances::default();
    let section = Section {
        center,
        angle: 0.0,
        min_radius: 0.0,
    };
    let radii: Vec<f64> = (2..=9).map(|k| 1e-3 * k as f64 * center.x).collect();
    let mut displacements = Vec::new();
    let mut used = Vec::new();
    for &rad in &radii {
        if let Ok(c) = first_return(&fp, section, rad, 4000.0, tol) {
            used.push(rad);
            displacements.push(c.radius - rad);
        }
    }
    let (a1, a3) = fit_displacement_cubic(&used, &displacements);
    details.push(format!(
        "displacement fit over {} radii: a1 = {:.3e}, a3 = {:.3e}",
        used.len(),
        a1,
        a3
    ));
    let sign_ok = (a3 < 0.0) == (l1_sign < 0);
    details.push(format!("cubic coefficient sign matches L1: {sign_ok}"));

    // small trace perturbation: lowering delta makes the trace positive while
    // keeping the equilibrium fixed, so exactly one attracting cycle appears
    let mut pp = p.clone();
    pp.delta = &pp.delta - &r(1, 10_000);
    let fpp = pp.to_f64();
    let jac = fpp.jacobian(center.x, center.y);
    details.push(format!("perturbed trace = {:.3e}", jac.fx + jac.gy));
    // geometric radius scan wide enough to bracket the born cycle
    let scan_radii: Vec<f64> = (0..18).map(|k| 5e-4 * 1.28f64.powi(k)).collect();
    let search =
        find_limit_cycles(&fpp, center, 0.0, &scan_radii, 4000.0, tol).expect("cycle search");
    let attracting: Vec<_> = search.cycles.iter().filter(|c| c.attracting).collect();
    details.push(format!(
        "cycles found: {} (attracting: {})",
        search.cycles.len(),
        attracting.len()
    ));
    for c in &search.cycles {
        details.push(format!(
            "  cycle at radius {:.5e}, period {:.4}, slope {:.6}",
            c.radius, c.period, c.floquet_slope
        ));
    }
    let passed = sign_ok && attracting.len() == 1 && search.cycles.len() == 1;
    CriterionOutcome::finish(8, "return-map/focal cross-check", t0, passed, details)
}

/// Trapping-region verification at three reference parameter sets.
fn criterion_9(seed: u64) -> CriterionOutcome {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x99);
    let mut details = Vec::new();
    let mut passed = true;
    let sets: [(&str, Params); 3] = [
        (
            // two-boundary-equilibria regime (representative values)
            "coextinction regime",
            Params::new(r(1, 2), r(1, 1), r(1, 1), r(1, 2), r(1, 2)).unwrap(),
        ),
        (
            "codim-4 point",
            Params::new(r(49, 361), r(12250, 130321), r(3, 2), r(63, 722), r(89, 361)).unwrap(),
        ),
        (
            "five-cycle claim point",
            Params::new(r(13, 2500), r(163, 10000), r(809, 100), r(1, 10), r(1, 100)).unwrap(),
        ),
    ];
    let tol = Tolerances {
        abs: 1e-8,
        rel: 1e-8,
    };
    for (name, p) in sets {
        let inits: Vec<State> = (0..100)
            .map(|_| State::new(rng.gen_range(1e-3..10.0), rng.gen_range(1e-3..10.0)))
            .collect();
        let rep = check_boundedness(&p.to_f64(), &inits, 500.0, tol).expect("integration");
        let trapped = rep.remained.iter().filter(|&&b| b).count();
        details.push(format!("{name}: {trapped}/100 trajectories enter and remain"));
        passed &= trapped == 100;
    }
    CriterionOutcome::finish(9, "trapping region", t0, passed, details)
}

/// At least one limit cycle at the five-cycle reference point (detecting
/// all claimed nested cycles is out of scope at desk precision).
fn criterion_10() -> CriterionOutcome {
    let t0 = Instant::now();
    let mut details = Vec::new();
    let p = Params::new(r(13, 2500), r(163, 10000), r(809, 100), r(1, 10), r(1, 100)).unwrap();
    let interior = equilibria::positive_equilibria(&p);
    let focus = interior
        .iter()
        .find(|e| {
            matches!(
                e.kind,
                EquilibriumKind::StableFocus
                    | EquilibriumKind::UnstableFocus
                    | EquilibriumKind::CenterCandidate
            )
        })
        .expect("focus-type positive equilibrium");
    let center = State::new(focus.x.to_f64(), focus.y.to_f64());
    details.push(format!(
        "focus at ({:.6}, {:.6}), kind {}",
        center.x, center.y, focus.kind
    ));
    let tol = Tolerances::default();
    let radii: Vec<f64> = (1..=22).map(|k| 0.01 * k as f64).collect();
    let search =
        find_limit_cycles(&p.to_f64(), center, 0.0, &radii, 20_000.0, tol).expect("cycle search");
    details.push(format!(
        "scan returned {} radii, {} non-returning",
        search.scan.len(),
        search.non_returning.len()
    ));
    for c in &search.cycles {
        details.push(format!(
            "cycle at radius {:.5e}, period {:.4}, slope {:.6} ({})",
            c.radius,
            c.period,
            c.floquet_slope,
            if c.attracting { "attracting" } else { "repelling" }
        ));
    }
    let passed = !search.cycles.is_empty();
    details.push(format!(
        "detected {} cycle(s); nested five-cycle reproduction is not promised",
        search.cycles.len()
    ));
    CriterionOutcome::finish(10, "cycle detection at the five-cycle point", t0, passed, details)
}
