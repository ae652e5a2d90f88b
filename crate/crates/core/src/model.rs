//! The predator-prey model, its nondimensionalization, the polynomial
//! time-rescaled variant, Jacobians and exact local expansions.
//!
//! Dimensional form:
//!
//! ```text
//! ẋ = r·x(1 − x/K − A/(x+B)) − p·x·y
//! ẏ = y(h − n·y/(x+d))
//! ```
//!
//! After x = K·x̄, y = (Kh/n)·ȳ, t = t̄/r this becomes the nondimensional
//! system studied everywhere else in the crate:
//!
//! ```text
//! ẋ = x(1−x) − γxy − βx/(x+α)      γ = Kph/(rn), α = B/K, β = A/K,
//! ẏ = δy(1 − y/(x+η))              δ = h/r,      η = d/K
//! ```
//!
//! Multiplying the right-hand sides by (x+α)(x+η) > 0 gives the polynomial
//! system used for Hopf analysis; its orbits in the open quadrant coincide
//! with the original ones up to time reparametrization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Coeff, Field2, Rational, Series2};

#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    NonPositive(&'static str),
    /// Evaluation at a pole of the Allee or predator term.
    Pole(&'static str),
    Algebra(AlgebraError),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NonPositive(name) => write!(f, "parameter {name} must be positive"),
            ModelError::Pole(which) => write!(f, "evaluation at a pole of {which}"),
            ModelError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ModelError {}

impl From<AlgebraError> for ModelError {
    fn from(e: AlgebraError) -> Self {
        ModelError::Algebra(e)
    }
}

/// Parameters of the dimensional model; all strictly positive.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimensionalParams {
    /// Prey intrinsic growth rate.
    pub r: Rational,
    /// Prey carrying capacity.
    pub k: Rational,
    /// Allee severity constant.
    pub a: Rational,
    /// Allee half-saturation population size.
    pub b: Rational,
    /// Predation coefficient.
    pub p: Rational,
    /// Predator intrinsic growth rate.
    pub h: Rational,
    /// Food-quality measure for prey-to-predator conversion.
    pub n: Rational,
    /// Measure of alternative food available to predators.
    pub d: Rational,
}

impl DimensionalParams {
    pub fn validate(&self) -> Result<(), ModelError> {
        for (v, name) in [
            (&self.r, "r"),
            (&self.k, "K"),
            (&self.a, "A"),
            (&self.b, "B"),
            (&self.p, "p"),
            (&self.h, "h"),
            (&self.n, "n"),
            (&self.d, "d"),
        ] {
            if !v.is_positive() {
                return Err(ModelError::NonPositive(name));
            }
        }
        Ok(())
    }
}

/// The five nondimensional parameters; all strictly positive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct Params {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub eta: Rational,
}

#[derive(Deserialize)]
struct RawParams {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
    delta: Rational,
    eta: Rational,
}

impl TryFrom<RawParams> for Params {
    type Error = String;
    fn try_from(raw: RawParams) -> Result<Self, String> {
        Params::new(raw.alpha, raw.beta, raw.gamma, raw.delta, raw.eta)
            .map_err(|e| e.to_string())
    }
}

impl Params {
    pub fn new(
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
        eta: Rational,
    ) -> Result<Self, ModelError> {
        for (v, name) in [
            (&alpha, "alpha"),
            (&beta, "beta"),
            (&gamma, "gamma"),
            (&delta, "delta"),
            (&eta, "eta"),
        ] {
            if !v.is_positive() {
                return Err(ModelError::NonPositive(name));
            }
        }
        Ok(Params {
            alpha,
            beta,
            gamma,
            delta,
            eta,
        })
    }

    pub fn to_f64(&self) -> FloatParams {
        FloatParams {
            alpha: self.alpha.to_f64(),
            beta: self.beta.to_f64(),
            gamma: self.gamma.to_f64(),
            delta: self.delta.to_f64(),
            eta: self.eta.to_f64(),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} beta={} gamma={} delta={} eta={}",
            self.alpha, self.beta, self.gamma, self.delta, self.eta
        )
    }
}

/// Float view of [`Params`] for the numerical lanes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FloatParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub eta: f64,
}

/// A point of the phase plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State {
    pub x: f64,
    pub y: f64,
}

impl State {
    pub fn new(x: f64, y: f64) -> Self {
        State { x, y }
    }
}

/// Nondimensionalization x = Kx̄, y = (Kh/n)ȳ, t = t̄/r.
pub fn nondimensionalize(dp: &DimensionalParams) -> Result<Params, ModelError> {
    dp.validate()?;
    Params::new(
        &dp.b / &dp.k,
        &dp.a / &dp.k,
        &(&dp.k * &dp.p) * &(&dp.h / &(&dp.r * &dp.n)),
        &dp.h / &dp.r,
        &dp.d / &dp.k,
    )
}

/// Right-hand side of the nondimensional system at a point, over any
/// coefficient field. Errors at the poles x = −α, x = −η.
pub fn vector_field_in<T: Coeff>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    delta: &T,
    eta: &T,
    x: &T,
    y: &T,
) -> Result<(T, T), ModelError> {
    let xa = x.clone() + alpha.clone();
    if xa.is_zero() {
        return Err(ModelError::Pole("the Allee term (x = -alpha)"));
    }
    let xe = x.clone() + eta.clone();
    if xe.is_zero() {
        return Err(ModelError::Pole("the predator term (x = -eta)"));
    }
    let one = T::one;
    let f = x.clone() * (one() - x.clone())
        - gamma.clone() * x.clone() * y.clone()
        - beta.clone() * x.clone() / xa;
    let g = delta.clone() * y.clone() * (one() - y.clone() / xe);
    Ok((f, g))
}

/// Right-hand side of the polynomial (time-rescaled) system; no poles.
pub fn rescaled_vector_field_in<T: Coeff>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    delta: &T,
    eta: &T,
    x: &T,
    y: &T,
) -> (T, T) {
    let one = T::one;
    let xa = x.clone() + alpha.clone();
    let xe = x.clone() + eta.clone();
    let q = (one() - x.clone()) * xa.clone() - gamma.clone() * y.clone() * xa.clone()
        - beta.clone();
    let f = x.clone() * xe.clone() * q;
    let g = delta.clone() * y.clone() * xa * (xe - y.clone());
    (f, g)
}

impl Params {
    /// Exact evaluation of the nondimensional vector field.
    pub fn vector_field(&self, x: &Rational, y: &Rational) -> Result<(Rational, Rational), ModelError> {
        vector_field_in(&self.alpha, &self.beta, &self.gamma, &self.delta, &self.eta, x, y)
    }

    /// Exact evaluation of the polynomial system.
    pub fn rescaled_vector_field(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        rescaled_vector_field_in(&self.alpha, &self.beta, &self.gamma, &self.delta, &self.eta, x, y)
    }

    /// Exact analytic Jacobian of the nondimensional system.
    pub fn jacobian(&self, x: &Rational, y: &Rational) -> Result<Jacobian<Rational>, ModelError> {
        jacobian_in(&self.alpha, &self.beta, &self.gamma, &self.delta, &self.eta, x, y)
    }

    /// Exact analytic Jacobian of the polynomial system.
    pub fn rescaled_jacobian(&self, x: &Rational, y: &Rational) -> Jacobian<Rational> {
        rescaled_jacobian_in(&self.alpha, &self.beta, &self.gamma, &self.delta, &self.eta, x, y)
    }
}

impl FloatParams {
    pub fn vector_field(&self, x: f64, y: f64) -> (f64, f64) {
        let f = x * (1.0 - x) - self.gamma * x * y - self.beta * x / (x + self.alpha);
        let g = self.delta * y * (1.0 - y / (x + self.eta));
        (f, g)
    }

    pub fn rescaled_vector_field(&self, x: f64, y: f64) -> (f64, f64) {
        rescaled_vector_field_in(&self.alpha, &self.beta, &self.gamma, &self.delta, &self.eta, &x, &y)
    }

    pub fn jacobian(&self, x: f64, y: f64) -> Jacobian<f64> {
        jacobian_in(&self.alpha, &self.beta, &self.gamma, &self.delta, &self.eta, &x, &y)
            .expect("pole inside the positive quadrant")
    }
}

/// 2×2 Jacobian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Jacobian<T> {
    pub fx: T,
    pub fy: T,
    pub gx: T,
    pub gy: T,
}

impl<T: Coeff> Jacobian<T> {
    pub fn trace(&self) -> T {
        self.fx.clone() + self.gy.clone()
    }

    pub fn det(&self) -> T {
        self.fx.clone() * self.gy.clone() - self.fy.clone() * self.gx.clone()
    }
}

pub fn jacobian_in<T: Coeff>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    _delta: &T,
    eta: &T,
    x: &T,
    y: &T,
) -> Result<Jacobian<T>, ModelError> {
    let delta = _delta;
    let xa = x.clone() + alpha.clone();
    if xa.is_zero() {
        return Err(ModelError::Pole("the Allee term (x = -alpha)"));
    }
    let xe = x.clone() + eta.clone();
    if xe.is_zero() {
        return Err(ModelError::Pole("the predator term (x = -eta)"));
    }
    let one = T::one;
    let two = T::from_ratio(2, 1);
    let fx = one() - two.clone() * x.clone() - gamma.clone() * y.clone()
        - alpha.clone() * beta.clone() / (xa.clone() * xa.clone());
    let fy = -(gamma.clone() * x.clone());
    let gx = delta.clone() * y.clone() * y.clone() / (xe.clone() * xe.clone());
    let gy = delta.clone() * (one() - two * y.clone() / xe);
    Ok(Jacobian { fx, fy, gx, gy })
}

pub fn rescaled_jacobian_in<T: Coeff>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    delta: &T,
    eta: &T,
    x: &T,
    y: &T,
) -> Jacobian<T> {
    let one = T::one;
    let two = T::from_ratio(2, 1);
    let xa = x.clone() + alpha.clone();
    let xe = x.clone() + eta.clone();
    let q = (one() - x.clone()) * xa.clone() - gamma.clone() * y.clone() * xa.clone()
        - beta.clone();
    let qx = one() - alpha.clone() - two.clone() * x.clone() - gamma.clone() * y.clone();
    let fx = (two.clone() * x.clone() + eta.clone()) * q.clone() + x.clone() * xe.clone() * qx;
    let fy = -(x.clone() * xe.clone() * gamma.clone() * xa.clone());
    let gx = delta.clone()
        * y.clone()
        * (two.clone() * x.clone() + alpha.clone() + eta.clone() - y.clone());
    let gy = delta.clone() * xa * (xe - two * y.clone());
    Jacobian { fx, fy, gx, gy }
}

/// Exact truncated Taylor expansion of the nondimensional system around a
/// center with positive `center_x + α` and `center_x + η` denominators.
/// The deviation variables are (X, Y) = (x − center_x, y − center_y).
#[allow(clippy::too_many_arguments)]
pub fn expand_at<T: Coeff>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    delta: &T,
    eta: &T,
    center_x: &T,
    center_y: &T,
    max_degree: u32,
) -> Result<Field2<T>, ModelError> {
    let n = max_degree;
    let xv = Series2::var_x(n);
    let yv = Series2::var_y(n);
    let x = Series2::constant(center_x.clone(), n).add(&xv)?;
    let y = Series2::constant(center_y.clone(), n).add(&yv)?;

    // geometric expansion of 1/(c + X) with c = center + pole offset
    let inv_shifted = |c: T| -> Result<Series2<T>, ModelError> {
        if c.is_zero() {
            return Err(ModelError::Pole("local expansion at a pole"));
        }
        Series2::constant(c, n)
            .add(&xv)?
            .inv_unit()
            .map_err(ModelError::from)
    };

    let inv_xa = inv_shifted(center_x.clone() + alpha.clone())?;
    let inv_xe = inv_shifted(center_x.clone() + eta.clone())?;

    let one = Series2::constant(T::one(), n);
    // f = x(1−x) − γxy − βx·(1/(x+α))
    let f = x
        .mul(&one.sub(&x)?)?
        .sub(&x.mul(&y)?.scale(gamma))?
        .sub(&x.mul(&inv_xa)?.scale(beta))?;
    // g = δy − δy²·(1/(x+η))
    let g = y
        .scale(delta)
        .sub(&y.mul(&y)?.mul(&inv_xe)?.scale(delta))?;
    Ok((f, g))
}

/// Exact expansion of the polynomial system around a center (no poles).
#[allow(clippy::too_many_arguments)]
pub fn expand_rescaled_at<T: Coeff>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    delta: &T,
    eta: &T,
    center_x: &T,
    center_y: &T,
    max_degree: u32,
) -> Field2<T> {
    let n = max_degree;
    let xv = Series2::var_x(n);
    let yv = Series2::var_y(n);
    let x = Series2::constant(center_x.clone(), n).add(&xv).unwrap();
    let y = Series2::constant(center_y.clone(), n).add(&yv).unwrap();
    let one = Series2::constant(T::one(), n);
    let xa = x.add(&Series2::constant(alpha.clone(), n)).unwrap();
    let xe = x.add(&Series2::constant(eta.clone(), n)).unwrap();
    let q = one
        .sub(&x)
        .unwrap()
        .mul(&xa)
        .unwrap()
        .sub(&y.mul(&xa).unwrap().scale(gamma))
        .unwrap()
        .sub(&Series2::constant(beta.clone(), n))
        .unwrap();
    let f = x.mul(&xe).unwrap().mul(&q).unwrap();
    let g = y
        .scale(delta)
        .mul(&xa)
        .unwrap()
        .mul(&xe.sub(&y).unwrap())
        .unwrap();
    (f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn params(a: (i64, i64), b: (i64, i64), g: (i64, i64), d: (i64, i64), e: (i64, i64)) -> Params {
        Params::new(r(a.0, a.1), r(b.0, b.1), r(g.0, g.1), r(d.0, d.1), r(e.0, e.1)).unwrap()
    }

    #[test]
    fn nondimensionalize_unit_ratios() {
        let one = Rational::one();
        let dp = DimensionalParams {
            r: one.clone(),
            k: one.clone(),
            a: one.clone(),
            b: one.clone(),
            p: one.clone(),
            h: one.clone(),
            n: one.clone(),
            d: one.clone(),
        };
        let p = nondimensionalize(&dp).unwrap();
        assert_eq!(p, params((1, 1), (1, 1), (1, 1), (1, 1), (1, 1)));
    }

    #[test]
    fn nondimensionalize_k_two() {
        let one = Rational::one;
        let dp = DimensionalParams {
            r: one(),
            k: r(2, 1),
            a: one(),
            b: one(),
            p: one(),
            h: one(),
            n: one(),
            d: one(),
        };
        let p = nondimensionalize(&dp).unwrap();
        assert_eq!(p, params((1, 2), (1, 2), (2, 1), (1, 1), (1, 2)));
    }

    #[test]
    fn nondimensionalize_rejects_nonpositive() {
        let one = Rational::one;
        let dp = DimensionalParams {
            r: r(0, 1),
            k: one(),
            a: one(),
            b: one(),
            p: one(),
            h: one(),
            n: one(),
            d: one(),
        };
        assert!(nondimensionalize(&dp).is_err());
    }

    #[test]
    fn origin_and_predator_axis_equilibria() {
        let p = params((1, 3), (2, 5), (3, 2), (1, 4), (1, 7));
        let z = Rational::zero();
        assert_eq!(p.vector_field(&z, &z).unwrap(), (z.clone(), z.clone()));
        assert_eq!(p.vector_field(&z, &p.eta.clone()).unwrap(), (z.clone(), z));
    }

    #[test]
    fn nilpotent_point_is_an_equilibrium() {
        let p = params((49, 361), (12250, 130321), (3, 2), (63, 722), (89, 361));
        let (f, g) = p.vector_field(&r(21, 361), &r(110, 361)).unwrap();
        assert!(f.is_zero() && g.is_zero());
    }

    #[test]
    fn rescaled_field_is_vf_times_positive_factor() {
        let p = params((1, 3), (2, 5), (3, 2), (1, 4), (1, 7));
        let mut k: i64 = 1;
        for _ in 0..100 {
            // deterministic pseudo-random rationals in (0, 4)
            k = (k * 48271) % 0x7fffffff;
            let x = r(1 + k % 400, 100);
            k = (k * 48271) % 0x7fffffff;
            let y = r(1 + k % 400, 100);
            let (f, g) = p.vector_field(&x, &y).unwrap();
            let (rf, rg) = p.rescaled_vector_field(&x, &y);
            let fac = (&x + &p.alpha) * (&x + &p.eta);
            assert_eq!(rf, &f * &fac);
            assert_eq!(rg, &g * &fac);
            assert_eq!(rf.signum(), f.signum());
            assert_eq!(rg.signum(), g.signum());
        }
    }

    #[test]
    fn axes_are_invariant() {
        let p = params((2, 7), (1, 2), (5, 3), (2, 9), (3, 8));
        for k in 1..20 {
            let v = r(k, 5);
            let (f, _) = p.vector_field(&Rational::zero(), &v).unwrap();
            assert!(f.is_zero());
            let (_, g) = p.vector_field(&v, &Rational::zero()).unwrap();
            assert!(g.is_zero());
            let (rf, _) = p.rescaled_vector_field(&Rational::zero(), &v);
            assert!(rf.is_zero());
            let (_, rg) = p.rescaled_vector_field(&v, &Rational::zero());
            assert!(rg.is_zero());
        }
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let p = params((1, 3), (2, 5), (3, 2), (1, 4), (1, 7)).to_f64();
        let hseed = [0.37, 0.91, 1.73, 2.49, 0.11];
        let mut idx = 0usize;
        for i in 0..10 {
            for j in 0..10 {
                let x = 0.05 + 0.35 * (i as f64) + hseed[idx % 5] * 0.01;
                let y = 0.05 + 0.35 * (j as f64) + hseed[(idx + 2) % 5] * 0.01;
                idx += 1;
                let jac = p.jacobian(x, y);
                let h = 1e-5;
                let fd = |fx: &dyn Fn(f64, f64) -> f64, dx: f64, dy: f64| {
                    (fx(x + h * dx, y + h * dy) - fx(x - h * dx, y - h * dy)) / (2.0 * h)
                };
                let f = |x, y| p.vector_field(x, y).0;
                let g = |x, y| p.vector_field(x, y).1;
                let scale = 1.0 + jac.fx.abs().max(jac.fy.abs()).max(jac.gx.abs()).max(jac.gy.abs());
                assert!((fd(&f, 1.0, 0.0) - jac.fx).abs() / scale < 1e-6);
                assert!((fd(&f, 0.0, 1.0) - jac.fy).abs() / scale < 1e-6);
                assert!((fd(&g, 1.0, 0.0) - jac.gx).abs() / scale < 1e-6);
                assert!((fd(&g, 0.0, 1.0) - jac.gy).abs() / scale < 1e-6);
            }
        }
    }

    #[test]
    fn trace_det_closed_forms_at_interior_equilibrium() {
        // Equilibrium (z, z+η) with trace-zero construction: α, β derived.
        let z = r(1, 5);
        let delta = r(1, 20);
        let gamma = r(1, 2);
        let eta = r(1, 10);
        let zd = &z + &delta;
        let s = &(&(&Rational::one() - &(&z * &r(2, 1))) - &(&z * &gamma)) - &(&gamma * &eta);
        let alpha = &(&z * &(&s - &delta)) / &zd;
        let disc = &(&(&Rational::one() - &z) - &(&z * &gamma)) - &(&gamma * &eta);
        let beta = &(&z * &(&disc * &disc)) / &zd;
        let p = Params::new(alpha.clone(), beta.clone(), gamma.clone(), delta.clone(), eta.clone())
            .unwrap();
        let y = &z + &eta;
        let (f, g) = p.vector_field(&z, &y).unwrap();
        assert!(f.is_zero() && g.is_zero(), "constructed point is an equilibrium");

        let jac = p.jacobian(&z, &y).unwrap();
        let xa = &z + &alpha;
        let ratio = &beta / &(&xa * &xa);
        let expected_trace = &(&z * &(&ratio - &Rational::one())) - &delta;
        let expected_det =
            &(&delta * &z) * &(&(&Rational::one() + &gamma) - &ratio);
        assert_eq!(jac.trace(), expected_trace);
        assert_eq!(jac.det(), expected_det);

        // rescaled Jacobian at an equilibrium = (x+α)(x+η) · Jacobian
        let rj = p.rescaled_jacobian(&z, &y);
        let fac = &xa * &(&z + &eta);
        assert_eq!(rj.trace(), &jac.trace() * &fac);
        assert_eq!(rj.det(), &(&jac.det() * &fac) * &fac);
    }

    #[test]
    fn expansion_consistency_between_systems() {
        // (polynomial system expansion) == (model expansion) · (x+α)(x+η),
        // exactly within the shared cutoff.
        let p = params((1, 3), (2, 5), (3, 2), (1, 4), (1, 7));
        let (cx, cy) = (r(1, 2), r(1, 3));
        let n = 6;
        let (f, g) = expand_at(&p.alpha, &p.beta, &p.gamma, &p.delta, &p.eta, &cx, &cy, n).unwrap();
        let (rf, rg) =
            expand_rescaled_at(&p.alpha, &p.beta, &p.gamma, &p.delta, &p.eta, &cx, &cy, n);
        let xa = Series2::constant(&cx + &p.alpha, n)
            .add(&Series2::var_x(n))
            .unwrap();
        let xe = Series2::constant(&cx + &p.eta, n)
            .add(&Series2::var_x(n))
            .unwrap();
        let fac = xa.mul(&xe).unwrap();
        assert_eq!(rf, f.mul(&fac).unwrap());
        assert_eq!(rg, g.mul(&fac).unwrap());
    }

    #[test]
    fn expansion_evaluates_like_the_polynomial_field() {
        let p = params((2, 7), (1, 2), (5, 3), (2, 9), (3, 8));
        let (cx, cy) = (r(3, 4), r(2, 5));
        let (f, g) =
            expand_rescaled_at(&p.alpha, &p.beta, &p.gamma, &p.delta, &p.eta, &cx, &cy, 4);
        for (dx, dy) in [(r(1, 9), r(-1, 8)), (r(-2, 11), r(3, 13)), (r(1, 2), r(1, 3))] {
            let (ef, eg) = p.rescaled_vector_field(&(&cx + &dx), &(&cy + &dy));
            assert_eq!(f.eval(&dx, &dy), ef);
            assert_eq!(g.eval(&dx, &dy), eg);
        }
    }

    #[test]
    fn params_parse_from_json_and_toml() {
        let js = r#"{"alpha":"49/361","beta":"12250/130321","gamma":"3/2","delta":"63/722","eta":"89/361"}"#;
        let p: Params = serde_json::from_str(js).unwrap();
        assert_eq!(p.alpha, r(49, 361));
        // integers are accepted; nonpositive values are rejected
        let p2: Result<Params, _> =
            serde_json::from_str(r#"{"alpha":1,"beta":2,"gamma":3,"delta":4,"eta":5}"#);
        assert!(p2.is_ok());
        let bad: Result<Params, _> =
            serde_json::from_str(r#"{"alpha":0,"beta":2,"gamma":3,"delta":4,"eta":5}"#);
        assert!(bad.is_err());
    }
}
