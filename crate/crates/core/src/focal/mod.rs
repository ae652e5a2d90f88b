//! Lyapunov focal values at the center-type positive equilibrium, the Hopf
//! locus parametrization, and the resultant identities between focal-value
//! numerators.
//!
//! The center candidate is E = (z, z+η) of the polynomial system with zero
//! trace and positive determinant; eliminating (α, β) gives the exact locus
//!
//! ```text
//! α₀ = z(1−2z−zγ−δ−γη)/(z+δ),   β₀ = z(1−z−zγ−γη)²/(z+δ),
//! ```
//!
//! valid on the region Ω* = {0<z<1/2, 0<δ<z(1−2z)/(2z+η), δ/z<γ<(1−2z−δ)/(z+η)}.
//! A linear change with the surd s = √((zγ−δ)/δ) and the constant time
//! rescale 1/√det put the system in unit-rotation form; the formal-series
//! engine in [`lyapunov`] then produces the focal values exactly in ℚ(s).
//! Each focal value is reported both as the exact value L_i and as its
//! polynomial numerator L_ii (the value cleared of its positive denominator).

mod lyapunov;

pub use lyapunov::lyapunov_values;

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{
    resultant, time_rescale, vf_transform, AlgebraError, Coeff, Quad, Rational, Series2, UniPoly,
};
use crate::model::{self, ModelError, Params};

#[derive(Debug, Clone, PartialEq)]
pub enum FocalError {
    Model(ModelError),
    Algebra(AlgebraError),
    /// A named Ω* inequality fails.
    OutsideOmegaStar(String),
    /// Focal orders above 5 are not supported.
    UnsupportedOrder(usize),
    /// No admissible equilibrium abscissa recovered from (α, β, γ, δ, η).
    NoAdmissibleAbscissa,
    /// The recovered abscissa is an irrational surd; exact focal values need
    /// a rational z.
    IrrationalAbscissa,
    /// Degenerate polynomial input to a resultant.
    DegeneratePolynomial,
    /// δ outside (0, 1/2).
    DeltaRange,
}

impl fmt::Display for FocalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FocalError::Model(e) => write!(f, "{e}"),
            FocalError::Algebra(e) => write!(f, "{e}"),
            FocalError::OutsideOmegaStar(which) => {
                write!(f, "outside the Hopf region: {which}")
            }
            FocalError::UnsupportedOrder(n) => write!(f, "focal order {n} unsupported (max 5)"),
            FocalError::NoAdmissibleAbscissa => {
                write!(f, "no equilibrium abscissa in (0,1/2) satisfies the Hopf region")
            }
            FocalError::IrrationalAbscissa => {
                write!(f, "recovered abscissa is irrational; use the float lane")
            }
            FocalError::DegeneratePolynomial => write!(f, "degenerate polynomial input"),
            FocalError::DeltaRange => write!(f, "delta must lie in (0, 1/2)"),
        }
    }
}

impl std::error::Error for FocalError {}

impl From<ModelError> for FocalError {
    fn from(e: ModelError) -> Self {
        FocalError::Model(e)
    }
}

impl From<AlgebraError> for FocalError {
    fn from(e: AlgebraError) -> Self {
        FocalError::Algebra(e)
    }
}

/// A point of the Hopf locus: equilibrium abscissa plus free (δ, γ, η), with
/// the derived (α₀, β₀) and the polynomial-system determinant at E.
#[derive(Debug, Clone)]
pub struct HopfPoint {
    pub z: Rational,
    pub delta: Rational,
    pub gamma: Rational,
    pub eta: Rational,
    pub alpha0: Rational,
    pub beta0: Rational,
    /// Determinant of the polynomial-system Jacobian at E (positive on Ω*).
    pub det: Rational,
}

impl HopfPoint {
    pub fn new(
        z: Rational,
        delta: Rational,
        gamma: Rational,
        eta: Rational,
    ) -> Result<Self, FocalError> {
        let one = Rational::one();
        let two = Rational::int(2);
        let fail = |s: String| Err(FocalError::OutsideOmegaStar(s));
        if !eta.is_positive() {
            return fail("η > 0".into());
        }
        if !z.is_positive() || z >= &one / &two {
            return fail(format!("0 < z < 1/2 (z = {z})"));
        }
        let dbound = &(&z * &(&one - &(&two * &z))) / &(&(&two * &z) + &eta);
        if !delta.is_positive() || delta >= dbound {
            return fail(format!("0 < δ < z(1−2z)/(2z+η) = {dbound} (δ = {delta})"));
        }
        let glow = &delta / &z;
        let ghigh = &(&(&one - &(&two * &z)) - &delta) / &(&z + &eta);
        if gamma <= glow || gamma >= ghigh {
            return fail(format!("δ/z < γ < (1−2z−δ)/(z+η): {glow} < γ < {ghigh} (γ = {gamma})"));
        }
        Ok(Self::new_unchecked(z, delta, gamma, eta))
    }

    /// Builds the derived quantities without Ω* checks; used internally for
    /// polynomial interpolation in η where only nonvanishing denominators
    /// matter.
    fn new_unchecked(z: Rational, delta: Rational, gamma: Rational, eta: Rational) -> Self {
        let one = Rational::one();
        let two = Rational::int(2);
        let zd = &z + &delta;
        let w = &(&(&one - &z) - &(&z * &gamma)) - &(&gamma * &eta); // 1−z−zγ−γη
        let alpha0 = &(&z * &(&(&(&one - &(&two * &z)) - &(&z * &gamma)) - &(&delta + &(&gamma * &eta))))
            / &zd;
        let beta0 = &(&z * &(&w * &w)) / &zd;
        let det = {
            let zg_d = &(&z * &gamma) - &delta;
            let ze = &z + &eta;
            &(&(&(&(&z * &z) * &delta) * &zg_d) * &(&(&ze * &ze) * &(&w * &w))) / &(&zd * &zd)
        };
        HopfPoint {
            z,
            delta,
            gamma,
            eta,
            alpha0,
            beta0,
            det,
        }
    }

    pub fn params(&self) -> Params {
        Params::new(
            self.alpha0.clone(),
            self.beta0.clone(),
            self.gamma.clone(),
            self.delta.clone(),
            self.eta.clone(),
        )
        .expect("Hopf locus values are positive")
    }

    /// Recovers z from (α, β, γ, δ, η) by solving the abscissa quadratic
    /// (2+γ)z² − (1−γη−δ−α)z + αδ = 0 exactly and keeping the roots inside
    /// the Hopf region. β is not used for the inversion (the locus recomputes
    /// it from z); callers can compare `beta0` with their β if they need a
    /// consistency diagnostic.
    pub fn from_params(p: &Params) -> Result<Vec<HopfPoint>, FocalError> {
        let one = Rational::one();
        let a = &Rational::int(2) + &p.gamma;
        let b = -&(&(&(&one - &(&p.gamma * &p.eta)) - &p.delta) - &p.alpha);
        let c = &p.alpha * &p.delta;
        let disc = &(&b * &b) - &(&(&Rational::int(4) * &a) * &c);
        if disc.is_negative() {
            return Err(FocalError::NoAdmissibleAbscissa);
        }
        let mut out = Vec::new();
        let mut saw_irrational_candidate = false;
        match disc.sqrt_exact() {
            Some(sq) => {
                let two_a = &Rational::int(2) * &a;
                for root in [&(&(-&b) - &sq) / &two_a, &(&(-&b) + &sq) / &two_a] {
                    if let Ok(h) = HopfPoint::new(
                        root,
                        p.delta.clone(),
                        p.gamma.clone(),
                        p.eta.clone(),
                    ) {
                        out.push(h);
                    }
                }
            }
            None => {
                // irrational roots: decide Ω* membership exactly, then report
                let sq = Quad::sqrt(disc);
                let two_a = Quad::rational(&Rational::int(2) * &a);
                let mb = Quad::rational(-&b);
                for root in [
                    (mb.clone() - sq.clone()) / two_a.clone(),
                    (mb + sq) / two_a,
                ] {
                    if quad_in_omega_star(&root, &p.delta, &p.gamma, &p.eta) {
                        saw_irrational_candidate = true;
                    }
                }
            }
        }
        if out.is_empty() {
            if saw_irrational_candidate {
                Err(FocalError::IrrationalAbscissa)
            } else {
                Err(FocalError::NoAdmissibleAbscissa)
            }
        } else {
            Ok(out)
        }
    }
}

fn quad_in_omega_star(z: &Quad, delta: &Rational, gamma: &Rational, eta: &Rational) -> bool {
    let one = Quad::one();
    let two = Quad::rational(Rational::int(2));
    let d = Quad::rational(delta.clone());
    let g = Quad::rational(gamma.clone());
    let e = Quad::rational(eta.clone());
    if !z.is_positive() || !(one.clone() - two.clone() * z.clone()).is_positive() {
        return false;
    }
    // δ(2z+η) < z(1−2z)
    let lhs = d.clone() * (two.clone() * z.clone() + e.clone());
    let rhs = z.clone() * (one.clone() - two.clone() * z.clone());
    if !(rhs - lhs).is_positive() {
        return false;
    }
    // δ < γz and γ(z+η) < 1−2z−δ
    if !(g.clone() * z.clone() - d.clone()).is_positive() {
        return false;
    }
    let upper = one - two * z.clone() - d;
    (upper - g * (z.clone() + e)).is_positive()
}

/// Focal values L₁..L_k and their numerators L₁₁..L_kk.
#[derive(Debug, Clone)]
pub struct FocalReport {
    /// Exact focal values (elements of ℚ(s), s² = (zγ−δ)/δ).
    pub l: Vec<Quad>,
    /// The numerators: each L_i cleared of its positive denominator.
    pub lnum: Vec<Rational>,
    /// 1-based index of the first nonzero focal value, if any.
    pub order: Option<usize>,
}

/// Positive denominator constants of L₁..L₅ (the engine's numerators are the
/// values multiplied by C_i·z^{2i−1}(z+η)^{2i−1}(1−z−zγ−γη)^{2i}·(δ(zγ−δ))^{(4i−1)/2}/γ).
const DENOM_CONSTANTS: [i64; 5] = [4, 96, 9216, 4_423_680, 25_480_396_800];

/// Engine-to-report normalization constant, frozen once against the
/// closed-form first numerator (the engine value is exactly half the
/// reported numerator's focal value in every order's convention here).
fn calibration(_i: usize) -> Rational {
    Rational::ratio(1, 2)
}

/// Builds the unit-rotation system at the Hopf point over any coefficient
/// field, given the surd s (s² = (zγ−δ)/δ) and 1/√det as field elements.
#[allow(clippy::too_many_arguments)]
fn rotation_system<T: Coeff>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    delta: &T,
    eta: &T,
    z: &T,
    s: &T,
    inv_sqrt_det: &T,
    cutoff: u32,
) -> Result<(Series2<T>, Series2<T>), FocalError> {
    let y0 = z.clone() + eta.clone();
    let (f, g) = model::expand_rescaled_at(alpha, beta, gamma, delta, eta, z, &y0, cutoff);
    // old (X, Y) = (u + s·v, u)
    let xs = Series2::var_x(cutoff)
        .add(&Series2::var_y(cutoff).scale(s))
        .map_err(FocalError::from)?;
    let ys = Series2::var_x(cutoff);
    let (nf, ng) = vf_transform(&f, &g, &xs, &ys).map_err(FocalError::from)?;
    let factor = Series2::constant(inv_sqrt_det.clone(), cutoff);
    let (nf, ng) = time_rescale(&nf, &ng, &factor).map_err(FocalError::from)?;
    Ok((nf, ng))
}

/// Exact focal values at a Hopf point, to the requested order (1..=5).
pub fn focal_values(h: &HopfPoint, max_order: usize) -> Result<FocalReport, FocalError> {
    if max_order == 0 || max_order > 5 {
        return Err(FocalError::UnsupportedOrder(max_order));
    }
    let m = &(&(&h.z * &h.gamma) - &h.delta) / &h.delta;
    assert!(m.is_positive(), "surd radicand must be positive on the locus");
    let one = Rational::one();
    let w = &(&(&one - &h.z) - &(&h.z * &h.gamma)) - &(&h.gamma * &h.eta);
    focal_values_impl(h, max_order, m, w)
}

/// B_i = C_i·z^{2i−1}(z+η)^{2i−1}w^{2i}·δ^{4i−1}·m^{2i−1} where the full
/// denominator of L_i is B_i·s.
fn denominator_rational_part(h: &HopfPoint, m: &Rational, w: &Rational, i: usize) -> Rational {
    let c = Rational::int(DENOM_CONSTANTS[i - 1]);
    let e = (2 * i - 1) as i32;
    let ze = &h.z + &h.eta;
    let mut out = c;
    out = &out * &h.z.pow(e);
    out = &out * &ze.pow(e);
    out = &out * &w.pow(2 * i as i32);
    out = &out * &h.delta.pow(4 * i as i32 - 1);
    out = &out * &m.pow(e);
    out
}

/// Float-lane focal numerators at arbitrary (possibly irrational) z.
pub fn focal_numerators_f64(
    z: f64,
    delta: f64,
    gamma: f64,
    eta: f64,
    max_order: usize,
) -> Vec<f64> {
    assert!((1..=5).contains(&max_order));
    let cutoff = 2 * max_order as u32 + 2;
    let zd = z + delta;
    let w = 1.0 - z - z * gamma - gamma * eta;
    let alpha0 = z * (1.0 - 2.0 * z - z * gamma - delta - gamma * eta) / zd;
    let beta0 = z * w * w / zd;
    let m = (z * gamma - delta) / delta;
    let s = m.sqrt();
    let sqrt_det = z * delta * (z + eta) * w * s / zd;
    let (f, g) = rotation_system(
        &alpha0,
        &beta0,
        &gamma,
        &delta,
        &eta,
        &z,
        &s,
        &(1.0 / sqrt_det),
        cutoff,
    )
    .expect("float rotation system");
    // clear float residue on the constant/linear slots before the series solve
    let mut p = f;
    let mut q = g;
    for s2 in [&mut p, &mut q] {
        s2.set_coeff(0, 0, 0.0);
        s2.set_coeff(1, 0, 0.0);
        s2.set_coeff(0, 1, 0.0);
    }
    let values = lyapunov_values(&p, &q, max_order);
    values
        .into_iter()
        .enumerate()
        .map(|(idx, v)| {
            let i = idx + 1;
            let e = (2 * i - 1) as i32;
            let b_i = DENOM_CONSTANTS[i - 1] as f64
                * z.powi(e)
                * (z + eta).powi(e)
                * w.powi(2 * i as i32)
                * delta.powi(4 * i as i32 - 1)
                * m.powi(e);
            let cal = calibration(i).to_f64();
            v * b_i * s / (gamma * cal)
        })
        .collect()
}

/// Closed form of the first focal numerator as a polynomial identity in
/// (z, δ, γ, η); the engine must reproduce it exactly.
pub fn reference_l11(z: &Rational, delta: &Rational, gamma: &Rational, eta: &Rational) -> Rational {
    let g = gamma;
    let d = delta;
    let e = eta;
    let int = Rational::int;
    let g2 = g * g;
    let g3 = &g2 * g;
    let d2 = d * d;
    let d3 = &d2 * d;
    let d4 = &d3 * d;
    let e2 = e * e;

    let c5 = &(&(&int(4) * &g2) + &(&int(7) * g)) + &int(2);
    let c4 = sum(&[
        &g3 * d,
        &(&int(10) * &g2) * d,
        &(&int(6) * &g2) * e,
        &(&int(5) * g) * e,
        &(&int(15) * g) * d,
        -&(&int(4) * g),
        &int(2) * d,
        &int(2) * e,
    ]);
    let c3 = sum(&[
        &(&(&int(2) * &g3) * d) * e,
        &(&(&int(14) * &g2) * d) * e,
        &(&int(2) * &g2) * &e2,
        &(&int(3) * &g2) * &d2,
        &(&int(5) * g) * &d2,
        -&(&(&int(2) * &g2) * d),
        &(&(&int(9) * g) * d) * e,
        &(&int(4) * d) * e,
        -&(&(&int(2) * g) * e),
        -&(&int(4) * &d2),
        -&(&(&int(10) * g) * d),
        &int(3) * d,
    ]);
    let c2 = sum(&[
        &(&g3 * d) * &e2,
        &(&(&int(4) * &g2) * d) * &e2,
        -&(&(g * d) * &e2),
        &(&(&int(4) * &g2) * &d2) * e,
        &(g * &d2) * e,
        &d2 * e,
        -&(&(&(&int(2) * &g2) * d) * e),
        -&(&(&(&int(4) * g) * d) * e),
        d * e,
        -&(&int(4) * &d3),
        -&(&(&int(2) * g) * &d2),
        &int(8) * &d2,
        g * d,
    ]);
    let c1 = sum(&[
        &(&g2 * &d2) * &e2,
        -&(&(&(&int(2) * g) * &d2) * &e2),
        -&(&(g * &d3) * e),
        -&(&(&int(2) * &d3) * e),
        &(&int(2) * &d2) * e,
        -&d4,
        &int(3) * &d3,
        -&d2,
    ]);
    let c0 = -&(&(&d3 * e) * &(&(d + &(g * e)) - &Rational::one()));

    let mut acc = c5;
    for c in [c4, c3, c2, c1, c0] {
        acc = &(&acc * z) + &c;
    }
    acc
}

fn sum(terms: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for t in terms {
        acc = &acc + t;
    }
    acc
}

/// The focal numerators L₁₁..L_kk as exact polynomials in η at fixed
/// (z, δ, γ), by Lagrange interpolation with degree discovery.
pub fn focal_numerators_eta(
    z: &Rational,
    delta: &Rational,
    gamma: &Rational,
    max_order: usize,
) -> Result<Vec<UniPoly<Rational>>, FocalError> {
    if max_order == 0 || max_order > 5 {
        return Err(FocalError::UnsupportedOrder(max_order));
    }
    // surd and denominators do not involve η, so one sample grid serves all
    let sample = |eta: &Rational| -> Result<Vec<Rational>, FocalError> {
        let h = HopfPoint::new_unchecked(z.clone(), delta.clone(), gamma.clone(), eta.clone());
        Ok(focal_values_unchecked(&h, max_order)?.lnum)
    };
    let mut degree_guess = 2 * max_order + 2;
    loop {
        let count = degree_guess + 3;
        let mut pts: Vec<(Rational, Vec<Rational>)> = Vec::with_capacity(count);
        for k in 0..count {
            let eta = Rational::ratio(k as i64 + 1, 97);
            pts.push((eta.clone(), sample(&eta)?));
        }
        let mut polys = Vec::with_capacity(max_order);
        let mut ok = true;
        for i in 0..max_order {
            let base: Vec<(Rational, Rational)> = pts[..=degree_guess]
                .iter()
                .map(|(e, v)| (e.clone(), v[i].clone()))
                .collect();
            let poly = UniPoly::interpolate("eta", &base);
            for (e, v) in &pts[degree_guess + 1..] {
                if poly.eval(e) != v[i] {
                    ok = false;
                    break;
                }
            }
            if !ok {
                break;
            }
            polys.push(poly);
        }
        if ok {
            return Ok(polys);
        }
        degree_guess += 4;
        assert!(degree_guess < 64, "focal numerator degree runaway");
    }
}

/// As [`focal_values`] but without the Ω* gate (used for η-interpolation;
/// requires the algebraic denominators to be nonzero).
fn focal_values_unchecked(h: &HopfPoint, max_order: usize) -> Result<FocalReport, FocalError> {
    let m = &(&(&h.z * &h.gamma) - &h.delta) / &h.delta;
    if !m.is_positive() {
        return Err(FocalError::OutsideOmegaStar("γz − δ > 0".into()));
    }
    let one = Rational::one();
    let w = &(&(&one - &h.z) - &(&h.z * &h.gamma)) - &(&h.gamma * &h.eta);
    if w.is_zero() || h.det.is_zero() {
        return Err(FocalError::OutsideOmegaStar("nonzero determinant".into()));
    }
    focal_values_impl(h, max_order, m, w)
}

fn focal_values_impl(
    h: &HopfPoint,
    max_order: usize,
    m: Rational,
    w: Rational,
) -> Result<FocalReport, FocalError> {
    let cutoff = 2 * max_order as u32 + 2;
    let s = Quad::sqrt(m.clone());
    let b = &(&(&(&h.z * &h.delta) * &(&h.z + &h.eta)) * &w) / &(&h.z + &h.delta);
    let sqrt_det = Quad::new(Rational::zero(), b, m.clone());
    let inv_sqrt_det = Quad::one() / sqrt_det;
    let qr = |r: &Rational| Quad::rational(r.clone());
    let (f, g) = rotation_system(
        &qr(&h.alpha0),
        &qr(&h.beta0),
        &qr(&h.gamma),
        &qr(&h.delta),
        &qr(&h.eta),
        &qr(&h.z),
        &s,
        &inv_sqrt_det,
        cutoff,
    )?;
    assert!(f.coeff(0, 1).value_eq(&Quad::one()) && f.coeff(1, 0).is_zero());
    assert!(g.coeff(1, 0).value_eq(&(-Quad::one())) && g.coeff(0, 1).is_zero());
    let mut p = f;
    p.set_coeff(0, 1, Quad::zero());
    let mut q = g;
    q.set_coeff(1, 0, Quad::zero());
    let values = lyapunov_values(&p, &q, max_order);
    let mut l = Vec::with_capacity(max_order);
    let mut lnum = Vec::with_capacity(max_order);
    let mut order = None;
    for (idx, v) in values.into_iter().enumerate() {
        let i = idx + 1;
        let cal = calibration(i);
        // the numerator clears the positive denominator B_i·s: multiply by
        // B_i·s/(γ·c_i); the result is rational (also when the surd radicand
        // happens to be a perfect square and ℚ(s) collapses).
        let b_i = denominator_rational_part(h, &m, &w, i);
        assert!(b_i.is_positive(), "focal denominator must be positive");
        let clear = Quad::new(Rational::zero(), &b_i / &(&h.gamma * &cal), m.clone());
        let num = (v.clone() * clear)
            .as_rational()
            .expect("cleared focal numerator is rational");
        if order.is_none() && !num.is_zero() {
            order = Some(i);
        }
        // the focal value itself, in the pinned normalization
        l.push(v * Quad::rational(&Rational::one() / &cal));
        lnum.push(num);
    }
    Ok(FocalReport { l, lnum, order })
}

/// Sylvester resultants (w.r.t. η) of the first focal numerator against the
/// second, third and fourth.
pub fn focal_resultants(
    z: &Rational,
    delta: &Rational,
    gamma: &Rational,
) -> Result<(Rational, Rational, Rational), FocalError> {
    let polys = focal_numerators_eta(z, delta, gamma, 4)?;
    if polys.iter().any(|p| p.is_zero()) {
        return Err(FocalError::DegeneratePolynomial);
    }
    let r12 = resultant(&polys[0], &polys[1]).map_err(FocalError::from)?;
    let r13 = resultant(&polys[0], &polys[2]).map_err(FocalError::from)?;
    let r14 = resultant(&polys[0], &polys[3]).map_err(FocalError::from)?;
    Ok((r12, r13, r14))
}

/// R₁ = 2z² + 5δz + 2δ² − δ.
pub fn resultant_factor_r1(z: &Rational, delta: &Rational) -> Rational {
    let int = Rational::int;
    sum(&[
        &int(2) * &(z * z),
        &(&int(5) * delta) * z,
        &int(2) * &(delta * delta),
        -delta,
    ])
}

/// R₂ = 2γz³ + δγ²z² + 4δγz² − δz² + δ²γz − 2δ²z − δ³.
pub fn resultant_factor_r2(z: &Rational, delta: &Rational, gamma: &Rational) -> Rational {
    let int = Rational::int;
    let z2 = z * z;
    let z3 = &z2 * z;
    let d2 = delta * delta;
    sum(&[
        &(&int(2) * gamma) * &z3,
        &(delta * &(gamma * gamma)) * &z2,
        &(&(&int(4) * delta) * gamma) * &z2,
        -&(delta * &z2),
        &(&d2 * gamma) * z,
        -&(&(&int(2) * &d2) * z),
        -&(&d2 * delta),
    ])
}

/// The positive root of R₁ in z: z* = (√(δ(8+9δ)) − 5δ)/4, for 0 < δ < 1/2.
pub fn z_star(delta: &Rational) -> Result<Quad, FocalError> {
    if !delta.is_positive() || *delta >= Rational::ratio(1, 2) {
        return Err(FocalError::DeltaRange);
    }
    let int = Rational::int;
    let radicand = delta * &(&int(8) + &(&int(9) * delta));
    let quarter = Rational::ratio(1, 4);
    let a = &(-&(&int(5) * delta)) * &quarter;
    Ok(Quad::new(a, quarter, radicand))
}

/// Divisibility structure of the first resultant: r₁₂ viewed as an exact
/// polynomial in z at fixed (δ, γ) must be divisible by
/// 4δ²γ⁴·z³(1−z)³(δ+z)¹⁰(δ−γz)⁶·R₁(z)·R₂(z).
#[derive(Debug, Clone)]
pub struct DivisibilityReport {
    pub r12_degree: usize,
    pub prefactor_degree: usize,
    pub quotient_degree: usize,
    pub remainder_is_zero: bool,
    pub samples_used: usize,
}

pub fn r12_divisibility(delta: &Rational, gamma: &Rational) -> Result<DivisibilityReport, FocalError> {
    // r12(z) by exact interpolation with degree discovery
    let sample = |z: &Rational| -> Result<Rational, FocalError> {
        let polys = focal_numerators_eta(z, delta, gamma, 2)?;
        resultant(&polys[0], &polys[1]).map_err(FocalError::from)
    };
    // z-grid strictly above δ/γ so the surd radicand stays positive
    let z_base = &(delta / gamma) + &Rational::ratio(1, 307);
    let mut degree_guess = 40usize;
    let poly = loop {
        let count = degree_guess + 4;
        let mut pts = Vec::with_capacity(count);
        for k in 0..count {
            let z = &z_base + &Rational::ratio(k as i64, 509);
            pts.push((z.clone(), sample(&z)?));
        }
        let base: Vec<(Rational, Rational)> = pts[..=degree_guess].to_vec();
        let poly = UniPoly::interpolate("z", &base);
        if pts[degree_guess + 1..]
            .iter()
            .all(|(z, v)| poly.eval(z) == *v)
        {
            break poly;
        }
        degree_guess += 10;
        if degree_guess > 120 {
            return Err(FocalError::DegeneratePolynomial);
        }
    };

    // prefactor as a z-polynomial at fixed (δ, γ)
    let one = Rational::one();
    let lin = |c0: Rational, c1: Rational| UniPoly::new("z", vec![c0, c1]);
    let mut pre = UniPoly::new(
        "z",
        vec![
            &(&(&Rational::int(4) * &(delta * delta)) * &(gamma * gamma)) * &(gamma * gamma),
        ],
    );
    let zpoly = lin(Rational::zero(), one.clone());
    for _ in 0..3 {
        pre = pre.mul(&zpoly);
    }
    for _ in 0..3 {
        pre = pre.mul(&lin(one.clone(), -&one));
    }
    for _ in 0..10 {
        pre = pre.mul(&lin(delta.clone(), one.clone()));
    }
    for _ in 0..6 {
        pre = pre.mul(&lin(delta.clone(), -gamma));
    }
    // R1, R2 as z-polynomials
    let r1 = UniPoly::new(
        "z",
        vec![
            &(&Rational::int(2) * &(delta * delta)) - delta,
            &Rational::int(5) * delta,
            Rational::int(2),
        ],
    );
    let d2 = delta * delta;
    let r2 = UniPoly::new(
        "z",
        vec![
            -&(&d2 * delta),
            &(&d2 * gamma) - &(&Rational::int(2) * &d2),
            &(&(delta * &(gamma * gamma)) + &(&(&Rational::int(4) * delta) * gamma)) - delta,
            &Rational::int(2) * gamma,
        ],
    );
    pre = pre.mul(&r1).mul(&r2);

    let (q, rem) = poly.div_rem(&pre);
    Ok(DivisibilityReport {
        r12_degree: poly.degree().unwrap_or(0),
        prefactor_degree: pre.degree().unwrap_or(0),
        quotient_degree: q.degree().unwrap_or(0),
        remainder_is_zero: rem.is_zero(),
        samples_used: degree_guess + 4,
    })
}

/// Numeric check of the simultaneous-vanishing structure at z = z*(δ): the
/// resultants of the first focal numerator against the second, third and
/// fourth (all in η, at z = z*) drop below the declared floor
/// 1e-8·‖f‖^deg g·‖g‖^deg f, while a control point far from the locus stays
/// well separated in the scale-free root-separation measure
/// |Res|/(lc(f)^deg g·lc(g)^deg f) = ∏|αᵢ−βⱼ| over the root pairs.
#[derive(Debug, Clone)]
pub struct DegenerateCenterReport {
    pub z_star: f64,
    pub z_control: f64,
    pub gamma: f64,
    /// Raw resultant magnitudes at z*.
    pub on_locus: [f64; 3],
    /// Declared floors 1e-8·norm-product at z*.
    pub on_floors: [f64; 3],
    /// Root-separation measure at z*.
    pub on_separation: [f64; 3],
    pub off_locus: [f64; 3],
    pub off_floors: [f64; 3],
    pub off_separation: [f64; 3],
    pub passes: bool,
}

pub fn degenerate_center_check(delta: &Rational) -> Result<DegenerateCenterReport, FocalError> {
    let zs = z_star(delta)?.to_f64();
    let d = delta.to_f64();
    // any γ in the admissible strip works; keep it comfortably inside
    let gamma = 2.0 * d / zs + 1.0;
    let (on, on_floors, on_sep) = eta_resultants_f64(zs, d, gamma)?;
    let z_off = zs * 2.25;
    let (off, off_floors, off_sep) = eta_resultants_f64(z_off, d, gamma)?;
    // on-locus: below the declared floor; control: the same quantity away
    // from the locus is larger by orders of magnitude (the measured margins
    // are 1e12 and up)
    let passes = (0..3).all(|i| on[i].abs() < on_floors[i] && off[i].abs() > 1e3 * on[i].abs());
    Ok(DegenerateCenterReport {
        z_star: zs,
        z_control: z_off,
        gamma,
        on_locus: on,
        on_floors,
        on_separation: on_sep,
        off_locus: off,
        off_floors,
        off_separation: off_sep,
        passes,
    })
}

/// Float-lane resultants (w.r.t. η) of numerator 1 against 2..4 at fixed
/// (z, δ, γ): raw values, declared floors, and root-separation measures.
type ResultantTriples = ([f64; 3], [f64; 3], [f64; 3]);

fn eta_resultants_f64(z: f64, delta: f64, gamma: f64) -> Result<ResultantTriples, FocalError> {
    // sample counts generous relative to the exact degrees in η
    let max_order = 4;
    let n_samples = 14usize;
    let mut samples: Vec<(f64, Vec<f64>)> = Vec::with_capacity(n_samples);
    for k in 0..n_samples {
        let eta = 0.01 + 0.013 * k as f64;
        samples.push((eta, focal_numerators_f64(z, delta, gamma, eta, max_order)));
    }
    let poly = |i: usize, deg: usize| -> UniPoly<f64> {
        let pts: Vec<(f64, f64)> = samples[..=deg].iter().map(|(e, v)| (*e, v[i])).collect();
        UniPoly::interpolate("eta", &pts)
    };
    // conservative degree caps in η (verified exactly in the rational lane)
    let degs = [2usize, 5, 8, 11];
    let p1 = poly(0, degs[0]);
    let mut rs = [0.0; 3];
    let mut floors = [0.0; 3];
    let mut seps = [0.0; 3];
    for (slot, i) in (1..=3).enumerate() {
        let pi = poly(i, degs[i]);
        let (p1t, pit) = (trim_f64(&p1), trim_f64(&pi));
        let r = resultant(&p1t, &pit).map_err(FocalError::from)?;
        rs[slot] = r;
        let norm = |p: &UniPoly<f64>| p.coeffs().iter().fold(0.0f64, |a, c| a.max(c.abs()));
        let d1 = p1t.degree().unwrap_or(0) as i32;
        let di = pit.degree().unwrap_or(0) as i32;
        floors[slot] = 1e-8 * norm(&p1t).powi(di) * norm(&pit).powi(d1);
        let lc1 = p1t.leading().map(|c| c.abs()).unwrap_or(1.0);
        let lci = pit.leading().map(|c| c.abs()).unwrap_or(1.0);
        seps[slot] = r.abs() / (lc1.powi(di) * lci.powi(d1));
    }
    Ok((rs, floors, seps))
}

/// Drops float coefficients that are pure interpolation noise relative to
/// the largest one.
fn trim_f64(p: &UniPoly<f64>) -> UniPoly<f64> {
    let max = p.coeffs().iter().fold(0.0f64, |a, c| a.max(c.abs()));
    let tol = max * 1e-9;
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| if c.abs() < tol { 0.0 } else { *c })
        .collect();
    UniPoly::new("eta", coeffs)
}
