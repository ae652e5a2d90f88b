//! Nilpotent-cusp analysis: codimension detection via closed forms and via
//! the fully mechanized normal-form transformation chain, plus the
//! transversality check for the four-parameter unfolding.
//!
//! A positive equilibrium is nilpotent when both the determinant and the
//! trace of the Jacobian vanish, which pins
//!
//! ```text
//! β = (1+α+αγ−γη)²/(4(1+γ)),   δ = γ(1−α−αγ−γη)/(2(1+γ)).
//! ```
//!
//! On that locus the quadratic normal-form data (d₂₀, d₁₁) decide between a
//! codimension-2 cusp (d₁₁ ≠ 0) and the deeper degeneracies: with d₁₁ = 0,
//! i.e. α = (2+γ)(1−γη)/((1+γ)(2+3γ)), the quintic normal form
//! ẏ = x² + Mx³y + Nx⁴y decides codimension 3 (M ≠ 0) or 4 (M = 0, N ≠ 0).
//! The two routes — printed closed forms and the mechanized chain — must
//! agree exactly; that agreement is this module's master invariant.

mod chain;
mod lift_reference;
mod unfold;

pub use chain::{cusp_report_chain, derivative_lift};
pub use lift_reference::lift_reference_coefficients;
pub use unfold::{chi_values, unfolding_jacobian, unfolding_jacobian_with_step, UnfoldingReport};

use std::fmt;

use serde::Serialize;

use crate::algebra::{AlgebraError, Quad, Rational};
use crate::equilibria;
use crate::model::{ModelError, Params};

#[derive(Debug, Clone, PartialEq)]
pub enum NormalFormError {
    Model(ModelError),
    Algebra(AlgebraError),
    /// Parameters do not place a nilpotent singularity at the positive
    /// equilibrium.
    NotNilpotent(String),
    /// A closed-form denominator vanishes.
    FormulaPole(&'static str),
    /// The locus construction needs γη < 1.
    LocusDomain(String),
    /// A chain normalization divides by a vanishing coefficient.
    ChainDivision { step: &'static str },
    /// The fractional-power scaling is undefined (vanishing coefficient).
    ScalingDegenerate(&'static str),
}

impl fmt::Display for NormalFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalFormError::Model(e) => write!(f, "{e}"),
            NormalFormError::Algebra(e) => write!(f, "{e}"),
            NormalFormError::NotNilpotent(why) => {
                write!(f, "not a nilpotent positive equilibrium: {why}")
            }
            NormalFormError::FormulaPole(which) => {
                write!(f, "closed-form denominator {which} vanishes")
            }
            NormalFormError::LocusDomain(why) => write!(f, "outside the cusp locus: {why}"),
            NormalFormError::ChainDivision { step } => {
                write!(f, "normal-form chain divides by zero at step {step}")
            }
            NormalFormError::ScalingDegenerate(which) => {
                write!(f, "fractional-power scaling undefined: {which} vanishes")
            }
        }
    }
}

impl std::error::Error for NormalFormError {}

impl From<ModelError> for NormalFormError {
    fn from(e: ModelError) -> Self {
        NormalFormError::Model(e)
    }
}

impl From<AlgebraError> for NormalFormError {
    fn from(e: AlgebraError) -> Self {
        NormalFormError::Algebra(e)
    }
}

/// Cusp codimension verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Codim {
    Two,
    Three,
    Four,
    HigherOrInvalid,
}

impl fmt::Display for Codim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codim::Two => write!(f, "2"),
            Codim::Three => write!(f, "3"),
            Codim::Four => write!(f, "4"),
            Codim::HigherOrInvalid => write!(f, ">4 or invalid"),
        }
    }
}

/// Normal-form data at a nilpotent positive equilibrium.
#[derive(Debug, Clone)]
pub struct CuspReport {
    /// Quadratic coefficient of the first reduced form; nonzero on the locus.
    pub d20: Rational,
    /// Mixed quadratic coefficient; zero exactly on the deeper locus.
    pub d11: Rational,
    /// Cubic-in-x coefficient of the quintic normal form (only when d₁₁ = 0).
    pub m: Option<Quad>,
    /// Quartic-in-x coefficient of the quintic normal form.
    pub n: Option<Quad>,
    /// Degeneracy polynomial whose vanishing is equivalent to M = 0.
    pub rho1: Option<Rational>,
    /// Degeneracy polynomial entering N.
    pub rho2: Option<Rational>,
    pub codim: Codim,
}

impl CuspReport {
    pub(crate) fn decide_codim(
        d20: &Rational,
        d11: &Rational,
        m: Option<&Quad>,
        n: Option<&Quad>,
    ) -> Codim {
        if d20.is_zero() {
            return Codim::HigherOrInvalid;
        }
        if !d11.is_zero() {
            return Codim::Two;
        }
        match (m, n) {
            (Some(m), _) if !m.is_zero() => Codim::Three,
            (Some(_), Some(n)) if !n.is_zero() => Codim::Four,
            _ => Codim::HigherOrInvalid,
        }
    }
}

/// A point of the nilpotent-cusp locus, parametrized by free (γ, η).
#[derive(Debug, Clone, Serialize)]
pub struct CuspLocus {
    pub gamma: Rational,
    pub eta: Rational,
    pub alpha0: Rational,
    pub beta0: Rational,
    pub delta0: Rational,
    /// The η value at which the cusp degenerates to codimension 4 for this γ.
    pub eta0: Option<Rational>,
}

impl CuspLocus {
    pub fn params(&self) -> Params {
        Params::new(
            self.alpha0.clone(),
            self.beta0.clone(),
            self.gamma.clone(),
            self.delta0.clone(),
            self.eta.clone(),
        )
        .expect("locus values are positive")
    }
}

/// The deeper cusp locus: given γ > 0 and 0 < η < 1/γ, the unique (α, β, δ)
/// making the positive equilibrium nilpotent with d₁₁ = 0:
///
/// ```text
/// α₀ = (2+γ)(1−γη)/((1+γ)(2+3γ)),  β₀ = 4(1+γ)(1−γη)²/(2+3γ)²,
/// δ₀ = γ²(1−γη)/((1+γ)(2+3γ)),     η₀ = (γ²+8γ+8)/(4γ³+19γ²+20γ+4).
/// ```
pub fn cusp_locus(gamma: &Rational, eta: &Rational) -> Result<CuspLocus, NormalFormError> {
    if !gamma.is_positive() {
        return Err(NormalFormError::LocusDomain("gamma must be positive".into()));
    }
    if !eta.is_positive() {
        return Err(NormalFormError::LocusDomain("eta must be positive".into()));
    }
    let one = Rational::one();
    let gh = gamma * eta;
    if gh >= one {
        return Err(NormalFormError::LocusDomain(format!(
            "gamma*eta = {gh} >= 1 degenerates the locus"
        )));
    }
    let two = Rational::int(2);
    let one_minus_gh = &one - &gh;
    let og = &one + gamma;
    let two3g = &two + &(&Rational::int(3) * gamma);
    let alpha0 = &(&(&two + gamma) * &one_minus_gh) / &(&og * &two3g);
    let beta0 = &(&(&Rational::int(4) * &og) * &(&one_minus_gh * &one_minus_gh))
        / &(&two3g * &two3g);
    let delta0 = &(&(gamma * gamma) * &one_minus_gh) / &(&og * &two3g);
    Ok(CuspLocus {
        gamma: gamma.clone(),
        eta: eta.clone(),
        alpha0,
        beta0,
        delta0,
        eta0: Some(codim4_eta(gamma)),
    })
}

/// η₀(γ) = (γ²+8γ+8)/(4γ³+19γ²+20γ+4).
pub fn codim4_eta(gamma: &Rational) -> Rational {
    let g2 = gamma * gamma;
    let g3 = &g2 * gamma;
    let num = &(&g2 + &(&Rational::int(8) * gamma)) + &Rational::int(8);
    let den = &(&(&(&Rational::int(4) * &g3) + &(&Rational::int(19) * &g2))
        + &(&Rational::int(20) * gamma))
        + &Rational::int(4);
    &num / &den
}

/// Checks that `p` puts a nilpotent singularity at the positive equilibrium
/// (Δ₂ = 0 and zero trace) and returns its abscissa.
pub(crate) fn nilpotent_abscissa(p: &Params) -> Result<Rational, NormalFormError> {
    let d2 = equilibria::delta2(p);
    if !d2.is_zero() {
        return Err(NormalFormError::NotNilpotent(format!("Δ₂ = {d2} ≠ 0")));
    }
    let reports = equilibria::positive_equilibria(p);
    let Some(e) = reports.first() else {
        return Err(NormalFormError::NotNilpotent(
            "double root is not positive".into(),
        ));
    };
    if !e.trace.is_zero() {
        return Err(NormalFormError::NotNilpotent(format!(
            "trace = {:?} ≠ 0",
            e.trace
        )));
    }
    Ok(e.x.as_rational().expect("double root is rational"))
}

/// ϱ₁ = 4ηγ³ + (19η−1)γ² + (20η−8)γ + 4(η−2).
pub fn rho1(gamma: &Rational, eta: &Rational) -> Rational {
    let g2 = gamma * gamma;
    let g3 = &g2 * gamma;
    let t1 = &(&Rational::int(4) * eta) * &g3;
    let t2 = &(&(&Rational::int(19) * eta) - &Rational::one()) * &g2;
    let t3 = &(&(&Rational::int(20) * eta) - &Rational::int(8)) * gamma;
    let t4 = &Rational::int(4) * &(eta - &Rational::int(2));
    &(&(&t1 + &t2) + &t3) + &t4
}

/// ϱ₂ = 24η²γ⁶ + (102η²−18η)γ⁵ + (71η²−118η+3)γ⁴ − (156η²+158η−46)γ³
///      − (248η²−8η−88)γ² − (112η²−104η−48)γ + 16η(2−η).
pub fn rho2(gamma: &Rational, eta: &Rational) -> Rational {
    let e = eta;
    let e2 = e * e;
    let int = Rational::int;
    let c6 = &int(24) * &e2;
    let c5 = &(&int(102) * &e2) - &(&int(18) * e);
    let c4 = &(&(&int(71) * &e2) - &(&int(118) * e)) + &int(3);
    let c3 = -&(&(&(&int(156) * &e2) + &(&int(158) * e)) - &int(46));
    let c2 = -&(&(&(&int(248) * &e2) - &(&int(8) * e)) - &int(88));
    let c1 = -&(&(&(&int(112) * &e2) - &(&int(104) * e)) - &int(48));
    let c0 = &(&int(16) * e) * &(&int(2) - e);
    let mut acc = c6;
    for c in [c5, c4, c3, c2, c1, c0] {
        acc = &(&acc * gamma) + &c;
    }
    acc
}

/// Closed-form cusp data. Requires a nilpotent positive equilibrium.
///
/// d₂₀ = −γ(1−α−αγ−γη)²/(2(1+α+αγ−γη)),
/// d₁₁ = (α(1+γ)(2+3γ) − (2+γ)(1−γη))/(1+α+αγ−γη);
/// with d₁₁ = 0, M and N are pure multiples of √(γ(1−γη)/(6γ²+10γ+4)) with
/// rational cofactors proportional to ϱ₁ and ϱ₂ respectively.
pub fn cusp_report_closed(p: &Params) -> Result<CuspReport, NormalFormError> {
    nilpotent_abscissa(p)?;
    let one = Rational::one();
    let two = Rational::int(2);
    let gh = &p.gamma * &p.eta;
    let varsigma = &(&(&one - &p.alpha) - &(&p.alpha * &p.gamma)) - &gh; // 1−α−αγ−γη
    let sigma = &(&(&one + &p.alpha) + &(&p.alpha * &p.gamma)) - &gh; // 1+α+αγ−γη
    if sigma.is_zero() {
        return Err(NormalFormError::FormulaPole("1+α+αγ−γη"));
    }
    let d20 = &(-&(&p.gamma * &(&varsigma * &varsigma))) / &(&two * &sigma);
    let og = &one + &p.gamma;
    let two3g = &two + &(&Rational::int(3) * &p.gamma);
    let d11 = &(&(&(&p.alpha * &og) * &two3g) - &(&(&two + &p.gamma) * &(&one - &gh))) / &sigma;

    if !d11.is_zero() {
        let codim = CuspReport::decide_codim(&d20, &d11, None, None);
        return Ok(CuspReport {
            d20,
            d11,
            m: None,
            n: None,
            rho1: None,
            rho2: None,
            codim,
        });
    }

    let one_minus_gh = &one - &gh;
    if !one_minus_gh.is_positive() {
        return Err(NormalFormError::FormulaPole("1−γη"));
    }
    // radicand γ(1−γη)/(6γ²+10γ+4)
    let rad_den = &(&(&Rational::int(6) * &(&p.gamma * &p.gamma))
        + &(&Rational::int(10) * &p.gamma))
        + &Rational::int(4);
    let radicand = &(&p.gamma * &one_minus_gh) / &rad_den;

    let r1 = rho1(&p.gamma, &p.eta);
    let r2 = rho2(&p.gamma, &p.eta);

    let tg = &two + &p.gamma;
    let mix = &(&(&tg * &(&one + &(&two * &p.gamma))) * &p.eta) + &p.gamma; // (2+γ)(1+2γ)η + γ
    if mix.is_zero() {
        return Err(NormalFormError::FormulaPole("(2+γ)(1+2γ)η+γ"));
    }
    let g2 = &p.gamma * &p.gamma;
    let g3 = &g2 * &p.gamma;
    let omg3 = &(&one_minus_gh * &one_minus_gh) * &one_minus_gh;
    let omg4 = &omg3 * &one_minus_gh;
    let two3g3 = &(&two3g * &two3g) * &two3g;
    let two3g4 = &two3g3 * &two3g;

    let m_coef = -&(&(&og * &two3g3) / &(&(&(&Rational::int(4) * &g2) * &omg3) * &mix));
    let n_coef = -&(&(&og * &two3g4)
        / &(&(&(&Rational::int(32) * &g3) * &omg4) * &(&mix * &mix)));

    let m = Quad::new(Rational::zero(), &m_coef * &r1, radicand.clone());
    let n = Quad::new(Rational::zero(), &n_coef * &r2, radicand);

    let codim = CuspReport::decide_codim(&d20, &d11, Some(&m), Some(&n));
    Ok(CuspReport {
        d20,
        d11,
        m: Some(m),
        n: Some(n),
        rho1: Some(r1),
        rho2: Some(r2),
        codim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn locus_at_reference_point() {
        let locus = cusp_locus(&r(3, 2), &r(89, 361)).unwrap();
        assert_eq!(locus.alpha0, r(49, 361));
        assert_eq!(locus.beta0, r(12250, 130321));
        assert_eq!(locus.delta0, r(63, 722));
        assert_eq!(locus.eta0, Some(r(89, 361)));
        assert_eq!(codim4_eta(&r(3, 2)), r(89, 361));
    }

    #[test]
    fn locus_rejects_degenerate_inputs() {
        assert!(cusp_locus(&r(2, 1), &r(1, 2)).is_err()); // γη = 1
        assert!(cusp_locus(&r(-1, 1), &r(1, 2)).is_err());
        assert!(cusp_locus(&r(1, 1), &r(0, 1)).is_err());
    }

    #[test]
    fn locus_point_is_nilpotent() {
        for (g, e) in [
            (r(3, 2), r(89, 361)),
            (r(1, 2), r(1, 10)),
            (r(5, 3), r(1, 4)),
        ] {
            let locus = cusp_locus(&g, &e).unwrap();
            let p = locus.params();
            assert!(equilibria::delta2(&p).is_zero());
            let x = nilpotent_abscissa(&p).unwrap();
            assert!(x.is_positive());
        }
    }

    #[test]
    fn closed_form_codimensions() {
        // codimension 4 at the reference point
        let locus = cusp_locus(&r(3, 2), &r(89, 361)).unwrap();
        let rep = cusp_report_closed(&locus.params()).unwrap();
        assert!(rep.d11.is_zero());
        assert!(rep.rho1.as_ref().unwrap().is_zero());
        assert!(rep.m.as_ref().unwrap().is_zero());
        assert!(!rep.n.as_ref().unwrap().is_zero());
        assert_eq!(rep.codim, Codim::Four);

        // codimension 3 off the η₀ value
        let locus = cusp_locus(&r(3, 2), &r(1, 10)).unwrap();
        let rep = cusp_report_closed(&locus.params()).unwrap();
        assert!(rep.d11.is_zero());
        let rho = rep.rho1.unwrap();
        // ϱ₁ = 4ηγ³+(19η−1)γ²+(20η−8)γ+4(η−2) at γ=3/2, η=1/10
        let expect = &(&(&(&r(4, 10) * &r(27, 8)) + &(&r(19, 10) - &Rational::one()) * &r(9, 4))
            + &(&(&r(2, 1) - &r(8, 1)) * &r(3, 2)))
            + &(&r(4, 1) * &(&r(1, 10) - &r(2, 1)));
        assert_eq!(rho, expect);
        assert!(!rho.is_zero());
        assert_eq!(rep.codim, Codim::Three);

        // codimension 2 at a generic nilpotent point with d₁₁ ≠ 0
        let one = Rational::one();
        let (alpha, gamma, eta) = (r(1, 4), r(1, 2), r(1, 4));
        let s = &(&(&one + &alpha) + &(&alpha * &gamma)) - &(&gamma * &eta);
        let beta = &(&s * &s) / &(&Rational::int(4) * &(&one + &gamma));
        let varsigma = &(&(&one - &alpha) - &(&alpha * &gamma)) - &(&gamma * &eta);
        let delta = &(&gamma * &varsigma) / &(&Rational::int(2) * &(&one + &gamma));
        let p = Params::new(alpha, beta, gamma, delta, eta).unwrap();
        let rep = cusp_report_closed(&p).unwrap();
        assert!(!rep.d20.is_zero() && !rep.d11.is_zero());
        assert_eq!(rep.codim, Codim::Two);
    }

    #[test]
    fn closed_form_rejects_non_nilpotent_points() {
        let p = Params::new(r(1, 4), r(1, 5), r(1, 2), r(1, 3), r(1, 6)).unwrap();
        assert!(matches!(
            cusp_report_closed(&p),
            Err(NormalFormError::NotNilpotent(_))
        ));
    }

    #[test]
    fn d11_vanishes_identically_on_the_deeper_locus() {
        // d₁₁(α₀(γ,η), γ, η) = 0 for random rational (γ, η)
        let mut seed: u64 = 42;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..25 {
            let g = r((next() % 500 + 1) as i64, 100);
            let emax_inv_g = &Rational::one() / &g;
            let e = &emax_inv_g * &r((next() % 99 + 1) as i64, 100);
            let locus = cusp_locus(&g, &e).unwrap();
            let rep = cusp_report_closed(&locus.params()).unwrap();
            assert!(rep.d11.is_zero(), "γ={g} η={e}");
            assert!(!rep.d20.is_zero());
        }
    }
}
