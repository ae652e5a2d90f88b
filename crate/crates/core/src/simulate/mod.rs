//! Numerical lane: trajectory integration, boundedness verification,
//! Poincaré return maps with limit-cycle detection, and phase-portrait data.
//!
//! Everything integrates the original (non-rescaled) system, since periods
//! and return times matter. The trapping region used by the boundedness
//! checks is {0 < x < 1, y < η+1}: every interior trajectory eventually
//! enters it and stays.

use std::fmt;

use serde::Serialize;

use crate::equilibria;
use crate::model::{FloatParams, Params, State};

mod dopri5;
pub mod output;

use dopri5::Dopri5;

#[derive(Debug, Clone, PartialEq)]
pub enum SimError {
    StepSizeUnderflow { t: f64, x: f64, y: f64 },
    NonFinite { t: f64 },
    NoReturn { radius: f64 },
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimError::StepSizeUnderflow { t, x, y } => {
                write!(f, "step size underflow at t = {t} near ({x}, {y})")
            }
            SimError::NonFinite { t } => write!(f, "state became non-finite at t = {t}"),
            SimError::NoReturn { radius } => {
                write!(f, "trajectory from radius {radius} did not return to the section")
            }
        }
    }
}

impl std::error::Error for SimError {}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerances {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        // tight defaults: nested limit cycles are separated by tiny gaps
        Tolerances {
            abs: 1e-10,
            rel: 1e-10,
        }
    }
}

/// A crossing of the configured Poincaré section.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SectionCrossing {
    pub t: f64,
    pub state: State,
    /// Distance from the section's base point along its ray.
    pub radius: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub params: FloatParams,
    pub samples: Vec<(f64, State)>,
    pub tolerances: Tolerances,
    pub events: Vec<SectionCrossing>,
}

impl Trajectory {
    pub fn last(&self) -> (f64, State) {
        *self.samples.last().expect("nonempty trajectory")
    }
}

/// Ray-based Poincaré section: points `center + r·(cos angle, sin angle)`
/// with `r > min_radius`, crossed in a fixed angular direction.
#[derive(Debug, Clone, Copy)]
pub struct Section {
    pub center: State,
    pub angle: f64,
    pub min_radius: f64,
}

impl Section {
    fn direction(&self) -> (f64, f64) {
        (self.angle.cos(), self.angle.sin())
    }

    /// Signed transversal coordinate (zero on the section's line).
    fn transversal(&self, s: &State) -> f64 {
        let (dx, dy) = (s.x - self.center.x, s.y - self.center.y);
        let (ux, uy) = self.direction();
        // normal chosen so that crossings in the direction of the rotation
        // around the center flip the sign from − to +
        -uy * dx + ux * dy
    }

    fn radius(&self, s: &State) -> f64 {
        let (dx, dy) = (s.x - self.center.x, s.y - self.center.y);
        let (ux, uy) = self.direction();
        ux * dx + uy * dy
    }
}

fn clamp_to_axes(s: &mut State, tol: f64) {
    if s.x < 0.0 && s.x > -10.0 * tol {
        s.x = 0.0;
    }
    if s.y < 0.0 && s.y > -10.0 * tol {
        s.y = 0.0;
    }
}

/// Integrates an arbitrary planar field (used by oracle tests that compare
/// against independently specified dynamics).
pub fn integrate_generic(
    rhs: impl Fn(f64, f64) -> (f64, f64),
    init: State,
    horizon: f64,
    tol: Tolerances,
) -> Result<Vec<(f64, State)>, SimError> {
    let mut solver = Dopri5::new(&rhs, tol, 0.0, init);
    let mut samples = vec![(0.0, init)];
    while solver.t < horizon {
        let rec = solver.step(horizon)?;
        if !rec.y1.x.is_finite() || !rec.y1.y.is_finite() {
            return Err(SimError::NonFinite { t: solver.t });
        }
        samples.push((solver.t, rec.y1));
    }
    Ok(samples)
}

/// Integrates from `init` to `horizon`, recording every accepted step.
pub fn integrate(
    p: &FloatParams,
    init: State,
    horizon: f64,
    tol: Tolerances,
) -> Result<Trajectory, SimError> {
    integrate_impl(p, init, horizon, tol, None, usize::MAX)
}

/// Integrates until the section has been crossed `max_crossings` times (or
/// the horizon runs out), recording the crossings as events.
pub fn integrate_with_section(
    p: &FloatParams,
    init: State,
    horizon: f64,
    tol: Tolerances,
    section: Section,
    max_crossings: usize,
) -> Result<Trajectory, SimError> {
    integrate_impl(p, init, horizon, tol, Some(section), max_crossings)
}

fn integrate_impl(
    p: &FloatParams,
    init: State,
    horizon: f64,
    tol: Tolerances,
    section: Option<Section>,
    max_crossings: usize,
) -> Result<Trajectory, SimError> {
    let fp = *p;
    let rhs = move |x: f64, y: f64| fp.vector_field(x, y);
    let mut solver = Dopri5::new(&rhs, tol, 0.0, init);
    let mut samples = vec![(0.0, init)];
    let mut events = Vec::new();
    let mut prev_g = section.map(|sec| sec.transversal(&init));
    while solver.t < horizon {
        let rec = solver.step(horizon)?;
        let mut state = rec.y1;
        if !state.x.is_finite() || !state.y.is_finite() {
            return Err(SimError::NonFinite { t: solver.t });
        }
        clamp_to_axes(&mut state, tol.abs);
        solver.state = state;
        samples.push((solver.t, state));

        if let (Some(sec), Some(g0)) = (section, prev_g) {
            let g1 = sec.transversal(&state);
            if g0 < 0.0 && g1 >= 0.0 {
                // refine the crossing on the dense output
                let mut lo = 0.0;
                let mut hi = 1.0;
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    if sec.transversal(&rec.interpolate(mid)) < 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let theta = 0.5 * (lo + hi);
                let cross_state = rec.interpolate(theta);
                let r = sec.radius(&cross_state);
                if r > sec.min_radius {
                    events.push(SectionCrossing {
                        t: rec.t0 + theta * rec.h,
                        state: cross_state,
                        radius: r,
                    });
                    if events.len() >= max_crossings {
                        break;
                    }
                }
            }
            prev_g = Some(g1);
        }
    }
    Ok(Trajectory {
        params: *p,
        samples,
        tolerances: tol,
        events,
    })
}

/// First-return map along the section ray: starts on the ray at radius `r`
/// and integrates to the next same-direction crossing.
pub fn first_return(
    p: &FloatParams,
    section: Section,
    r: f64,
    horizon: f64,
    tol: Tolerances,
) -> Result<SectionCrossing, SimError> {
    let (ux, uy) = section.direction();
    let init = State::new(section.center.x + r * ux, section.center.y + r * uy);
    let traj = integrate_with_section(p, init, horizon, tol, section, 1)?;
    traj.events
        .first()
        .copied()
        .ok_or(SimError::NoReturn { radius: r })
}

/// Trapping-region verification: per initial condition, the first time the
/// trajectory is inside {0 < x < 1, y < η+1} and whether it stays there.
#[derive(Debug, Clone, Serialize)]
pub struct BoundednessReport {
    pub horizon: f64,
    pub entry_times: Vec<Option<f64>>,
    pub remained: Vec<bool>,
    pub all_trapped: bool,
}

pub fn check_boundedness(
    p: &FloatParams,
    inits: &[State],
    horizon: f64,
    tol: Tolerances,
) -> Result<BoundednessReport, SimError> {
    let eta = p.eta;
    let inside = |s: &State| s.x > 0.0 && s.x < 1.0 && s.y < eta + 1.0;
    let mut entry_times = Vec::with_capacity(inits.len());
    let mut remained = Vec::with_capacity(inits.len());
    for &init in inits {
        let traj = integrate(p, init, horizon, tol)?;
        let mut entry = None;
        let mut stayed = true;
        for (t, s) in &traj.samples {
            match entry {
                None => {
                    if inside(s) {
                        entry = Some(*t);
                    }
                }
                Some(_) => {
                    // tolerate solver-scale boundary grazing
                    if s.x >= 1.0 + 1e-7 || s.y >= eta + 1.0 + 1e-7 || s.x <= -1e-7 {
                        stayed = false;
                        break;
                    }
                }
            }
        }
        remained.push(entry.is_some() && stayed);
        entry_times.push(entry);
    }
    let all_trapped = remained.iter().all(|&b| b);
    Ok(BoundednessReport {
        horizon,
        entry_times,
        remained,
        all_trapped,
    })
}

/// A periodic orbit located as a fixed point of the first-return map.
#[derive(Debug, Clone, Serialize)]
pub struct LimitCycle {
    pub section_point: State,
    pub radius: f64,
    pub period: f64,
    pub floquet_slope: f64,
    pub attracting: bool,
    /// |P(r) − r| at the reported fixed point.
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleSearch {
    pub cycles: Vec<LimitCycle>,
    /// (radius, P(radius)) for each scanned radius that returned.
    pub scan: Vec<(f64, f64)>,
    pub non_returning: Vec<f64>,
}

/// Scans the return map along a ray and refines each sign change of
/// P(r) − r to a fixed point by bisection.
pub fn find_limit_cycles(
    p: &FloatParams,
    center: State,
    angle: f64,
    radii: &[f64],
    horizon: f64,
    tol: Tolerances,
) -> Result<CycleSearch, SimError> {
    let section = Section {
        center,
        angle,
        min_radius: 0.0,
    };
    let mut scan = Vec::new();
    let mut non_returning = Vec::new();
    for &r in radii {
        match first_return(p, section, r, horizon, tol) {
            Ok(c) => scan.push((r, c.radius)),
            Err(SimError::NoReturn { .. }) => non_returning.push(r),
            Err(e) => return Err(e),
        }
    }
    let mut cycles = Vec::new();
    for pair in scan.windows(2) {
        let (r0, p0) = pair[0];
        let (r1, p1) = pair[1];
        let d0 = p0 - r0;
        let d1 = p1 - r1;
        if d0 == 0.0 || d0.signum() == d1.signum() {
            continue;
        }
        // bisection on d(r) = P(r) − r
        let (mut lo, mut hi, mut dlo) = (r0, r1, d0);
        let mut fixed = 0.5 * (lo + hi);
        let mut residual = f64::INFINITY;
        for _ in 0..60 {
            fixed = 0.5 * (lo + hi);
            let pr = first_return(p, section, fixed, horizon, tol)?.radius;
            let d = pr - fixed;
            residual = d.abs();
            if residual < 10.0 * tol.abs * (1.0 + fixed) || (hi - lo) < 1e-3 * tol.abs {
                break;
            }
            if d.signum() == dlo.signum() {
                lo = fixed;
                dlo = d;
            } else {
                hi = fixed;
            }
        }
        let ret = first_return(p, section, fixed, horizon, tol)?;
        let eps = (1e-4 * fixed).max(100.0 * tol.abs);
        let p_plus = first_return(p, section, fixed + eps, horizon, tol)?.radius;
        let p_minus = first_return(p, section, fixed - eps, horizon, tol)?.radius;
        let slope = (p_plus - p_minus) / (2.0 * eps);
        cycles.push(LimitCycle {
            section_point: ret.state,
            radius: fixed,
            period: ret.t,
            floquet_slope: slope,
            attracting: slope.abs() < 1.0,
            residual,
        });
    }
    Ok(CycleSearch {
        cycles,
        scan,
        non_returning,
    })
}

/// Rectangular window in phase space.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

#[derive(Debug, Clone)]
pub struct Portrait {
    pub window: Window,
    pub trajectories: Vec<Trajectory>,
    /// Seeds whose integration failed, with the failure text.
    pub failures: Vec<(State, String)>,
    pub equilibria: Vec<(f64, f64, String)>,
    /// Polylines of the nullclines (prey-rate zero set, then predator's).
    pub nullclines: Vec<Vec<(f64, f64)>>,
}

/// Integrates a grid of seeds and collects equilibria and nullclines for
/// plotting. Integration failures are recorded per seed, not fatal.
pub fn phase_portrait(
    params: &Params,
    window: Window,
    grid: (usize, usize),
    horizon: f64,
    tol: Tolerances,
) -> Portrait {
    let fp = params.to_f64();
    let mut trajectories = Vec::new();
    let mut failures = Vec::new();
    let (nx, ny) = grid;
    for i in 0..nx {
        for j in 0..ny {
            let fx = (i as f64 + 0.5) / nx as f64;
            let fy = (j as f64 + 0.5) / ny as f64;
            let seed = State::new(
                window.x0 + fx * (window.x1 - window.x0),
                window.y0 + fy * (window.y1 - window.y0),
            );
            if seed.x < 0.0 || seed.y < 0.0 {
                continue;
            }
            match integrate(&fp, seed, horizon, tol) {
                Ok(t) => trajectories.push(t),
                Err(e) => failures.push((seed, e.to_string())),
            }
        }
    }

    let mut equilibria_pts = Vec::new();
    for e in equilibria::boundary_equilibria(params)
        .into_iter()
        .chain(equilibria::positive_equilibria(params))
    {
        let (x, y) = (e.x.to_f64(), e.y.to_f64());
        if x >= window.x0 && x <= window.x1 && y >= window.y0 && y <= window.y1 {
            equilibria_pts.push((x, y, format!("{} ({})", e.label, e.kind)));
        }
    }

    let mut nullclines = Vec::new();
    // prey nullclines: x = 0 and y = ((1−x)(x+α)−β)/(γ(x+α))
    if window.x0 <= 0.0 {
        nullclines.push(vec![(0.0, window.y0.max(0.0)), (0.0, window.y1)]);
    }
    let mut curve = Vec::new();
    let n_samples = 400;
    for k in 0..=n_samples {
        let x = window.x0.max(0.0) + (window.x1 - window.x0.max(0.0)) * k as f64 / n_samples as f64;
        let y = ((1.0 - x) * (x + fp.alpha) - fp.beta) / (fp.gamma * (x + fp.alpha));
        if y.is_finite() && y >= window.y0 && y <= window.y1 {
            curve.push((x, y));
        } else if !curve.is_empty() {
            nullclines.push(std::mem::take(&mut curve));
        }
    }
    if !curve.is_empty() {
        nullclines.push(curve);
    }
    // predator nullclines: y = 0 and y = x + η
    if window.y0 <= 0.0 {
        nullclines.push(vec![(window.x0.max(0.0), 0.0), (window.x1, 0.0)]);
    }
    nullclines.push(vec![
        (window.x0.max(0.0), window.x0.max(0.0) + fp.eta),
        (window.x1, window.x1 + fp.eta),
    ]);

    Portrait {
        window,
        trajectories,
        failures,
        equilibria: equilibria_pts,
        nullclines,
    }
}

/// Least-squares fit of a displacement map d(r) ≈ a₁·r + a₃·r³.
pub fn fit_displacement_cubic(radii: &[f64], displacements: &[f64]) -> (f64, f64) {
    let mut s11 = 0.0;
    let mut s13 = 0.0;
    let mut s33 = 0.0;
    let mut b1 = 0.0;
    let mut b3 = 0.0;
    for (&r, &d) in radii.iter().zip(displacements) {
        let r3 = r * r * r;
        s11 += r * r;
        s13 += r * r3;
        s33 += r3 * r3;
        b1 += r * d;
        b3 += r3 * d;
    }
    let det = s11 * s33 - s13 * s13;
    ((s33 * b1 - s13 * b3) / det, (s11 * b3 - s13 * b1) / det)
}
