//! Embedded Dormand-Prince 5(4) integrator with PI step control and the
//! standard fourth-order continuous extension for event localization.

use crate::model::State;

use super::{SimError, Tolerances};

// Butcher tableau (stage times are unused: the field is autonomous)
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
// 5th-order weights are row 7 of A; error weights b5 − b4:
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
// dense-output coefficients
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

pub type Rhs<'a> = &'a dyn Fn(f64, f64) -> (f64, f64);

/// One accepted step with its dense-output data.
#[derive(Debug, Clone, Copy)]
pub struct StepRecord {
    pub t0: f64,
    pub h: f64,
    #[allow(dead_code)] // kept for test assertions
    pub y0: State,
    pub y1: State,
    rcont: [(f64, f64); 5],
}

impl StepRecord {
    /// Interpolated state at `t0 + theta·h`, 0 ≤ theta ≤ 1.
    pub fn interpolate(&self, theta: f64) -> State {
        let th1 = 1.0 - theta;
        let [r1, r2, r3, r4, r5] = self.rcont;
        let x = r1.0 + theta * (r2.0 + th1 * (r3.0 + theta * (r4.0 + th1 * r5.0)));
        let y = r1.1 + theta * (r2.1 + th1 * (r3.1 + theta * (r4.1 + th1 * r5.1)));
        State::new(x, y)
    }
}

pub struct Dopri5<'a> {
    pub rhs: Rhs<'a>,
    pub tol: Tolerances,
    pub t: f64,
    pub state: State,
    h: f64,
    err_old: f64,
}

impl<'a> Dopri5<'a> {
    pub fn new(rhs: Rhs<'a>, tol: Tolerances, t0: f64, init: State) -> Self {
        let (fx, fy) = rhs(init.x, init.y);
        let scale = (fx * fx + fy * fy).sqrt().max(1e-10);
        let h0 = (0.01 * (init.x * init.x + init.y * init.y).sqrt().max(1e-3) / scale).min(0.1);
        Dopri5 {
            rhs,
            tol,
            t: t0,
            state: init,
            h: h0.max(1e-8),
            err_old: 1e-2,
        }
    }

    /// Advances by one accepted step, clipped so that `t` never exceeds
    /// `t_end`. Returns the accepted step record.
    pub fn step(&mut self, t_end: f64) -> Result<StepRecord, SimError> {
        const SAFETY: f64 = 0.9;
        const ALPHA: f64 = 0.7 / 5.0;
        const BETA: f64 = 0.08;
        let mut h = self.h.min(t_end - self.t).max(0.0);
        if h == 0.0 {
            h = f64::EPSILON * self.t.abs().max(1.0);
        }
        loop {
            if h < 1e-14 * self.t.abs().max(1.0) {
                return Err(SimError::StepSizeUnderflow {
                    t: self.t,
                    x: self.state.x,
                    y: self.state.y,
                });
            }
            let y0 = self.state;
            let mut k = [(0.0f64, 0.0f64); 7];
            k[0] = (self.rhs)(y0.x, y0.y);
            for i in 1..7 {
                let mut ax = 0.0;
                let mut ay = 0.0;
                for (j, kj) in k.iter().enumerate().take(i) {
                    ax += A[i][j] * kj.0;
                    ay += A[i][j] * kj.1;
                }
                k[i] = (self.rhs)(y0.x + h * ax, y0.y + h * ay);
            }
            // k[6] is the derivative at the 5th-order solution (FSAL form)
            let y1 = State::new(y0.x + h * stage_dot(&k, 0), y0.y + h * stage_dot(&k, 1));
            let err_x = h * e_dot(&k, 0);
            let err_y = h * e_dot(&k, 1);
            if !y1.x.is_finite() || !y1.y.is_finite() {
                h *= 0.25;
                continue;
            }
            let sc_x = self.tol.abs + self.tol.rel * y0.x.abs().max(y1.x.abs());
            let sc_y = self.tol.abs + self.tol.rel * y0.y.abs().max(y1.y.abs());
            let err = (((err_x / sc_x).powi(2) + (err_y / sc_y).powi(2)) / 2.0).sqrt();

            if err <= 1.0 {
                let rcont = dense_coeffs(&k, y0, y1, h);
                let rec = StepRecord {
                    t0: self.t,
                    h,
                    y0,
                    y1,
                    rcont,
                };
                self.t += h;
                self.state = y1;
                let fac = SAFETY * err.max(1e-10).powf(-ALPHA) * self.err_old.powf(BETA);
                self.h = h * fac.clamp(0.2, 5.0);
                self.err_old = err.max(1e-10);
                return Ok(rec);
            }
            h *= (SAFETY * err.powf(-0.2)).clamp(0.1, 0.9);
        }
    }
}

fn stage_dot(k: &[(f64, f64); 7], comp: usize) -> f64 {
    let b = &A[6];
    let pick = |kk: (f64, f64)| if comp == 0 { kk.0 } else { kk.1 };
    b[0] * pick(k[0])
        + b[2] * pick(k[2])
        + b[3] * pick(k[3])
        + b[4] * pick(k[4])
        + b[5] * pick(k[5])
}

fn e_dot(k: &[(f64, f64); 7], comp: usize) -> f64 {
    let pick = |kk: (f64, f64)| if comp == 0 { kk.0 } else { kk.1 };
    (0..7).map(|i| E[i] * pick(k[i])).sum()
}

fn dense_coeffs(k: &[(f64, f64); 7], y0: State, y1: State, h: f64) -> [(f64, f64); 5] {
    let pick = |kk: (f64, f64), comp: usize| if comp == 0 { kk.0 } else { kk.1 };
    let mut out = [(0.0, 0.0); 5];
    for comp in 0..2 {
        let ydiff = pick((y1.x, y1.y), comp) - pick((y0.x, y0.y), comp);
        let bspl = h * pick(k[0], comp) - ydiff;
        let r1 = pick((y0.x, y0.y), comp);
        let r2 = ydiff;
        let r3 = bspl;
        let r4 = ydiff - h * pick(k[6], comp) - bspl;
        let r5: f64 = (0..7).map(|i| D[i] * pick(k[i], comp)).sum::<f64>() * h;
        let slot = |o: &mut [(f64, f64); 5], idx: usize, v: f64| {
            if comp == 0 {
                o[idx].0 = v;
            } else {
                o[idx].1 = v;
            }
        };
        slot(&mut out, 0, r1);
        slot(&mut out, 1, r2);
        slot(&mut out, 2, r3);
        slot(&mut out, 3, r4);
        slot(&mut out, 4, r5);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_linear_rotation_accurately() {
        // ẋ = −y, ẏ = x: circle with period 2π
        let rhs = |x: f64, y: f64| (-y, x);
        let tol = Tolerances {
            abs: 1e-10,
            rel: 1e-10,
        };
        let mut solver = Dopri5::new(&rhs, tol, 0.0, State::new(1.0, 0.0));
        let t_end = 2.0 * std::f64::consts::PI;
        while solver.t < t_end {
            solver.step(t_end).unwrap();
        }
        assert!((solver.state.x - 1.0).abs() < 1e-8);
        assert!(solver.state.y.abs() < 1e-8);
    }

    #[test]
    fn dense_output_matches_endpoints_and_midpoint() {
        let rhs = |x: f64, _y: f64| (x, 0.0); // ẋ = x: e^t
        let tol = Tolerances {
            abs: 1e-12,
            rel: 1e-12,
        };
        let mut solver = Dopri5::new(&rhs, tol, 0.0, State::new(1.0, 0.0));
        let rec = solver.step(10.0).unwrap();
        assert!((rec.interpolate(0.0).x - rec.y0.x).abs() < 1e-14);
        assert!((rec.interpolate(1.0).x - rec.y1.x).abs() < 1e-12);
        let mid = rec.interpolate(0.5).x;
        let exact = (rec.t0 + 0.5 * rec.h).exp();
        assert!((mid - exact).abs() < 1e-9 * exact);
    }
}
