//! Enumeration and exact classification of all equilibria.
//!
//! Boundary equilibria live on the axes: the origin, the predator-only point
//! (0, η), and up to two prey-only points whose abscissae are roots of
//! (1−x)(x+α) = β. Positive equilibria satisfy y = x + η with x a positive
//! root of
//!
//! ```text
//! (1+γ)x² + (γ(α+η)+α−1)x + α(γη−1) + β = 0.
//! ```
//!
//! All classification decisions (eigenvalue signs, node-vs-focus
//! discriminants, degeneracy tests) are made exactly in ℚ or ℚ(√Δ), never in
//! floating point. Semi-hyperbolic points get a center-manifold quadratic
//! coefficient via the mechanized reduction in this module.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{vf_transform, Quad, Rational, Series2};
use crate::model::{self, ModelError, Params};

#[derive(Debug, Clone, PartialEq)]
pub enum EquilibriaError {
    Model(ModelError),
    /// The requested reduction needs a semi-hyperbolic point (det = 0,
    /// trace ≠ 0).
    NotSemiHyperbolic,
    /// Nilpotent linearization: codimension analysis belongs to `normalform`.
    Nilpotent,
}

impl fmt::Display for EquilibriaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquilibriaError::Model(e) => write!(f, "{e}"),
            EquilibriaError::NotSemiHyperbolic => {
                write!(f, "point is not a semi-hyperbolic equilibrium")
            }
            EquilibriaError::Nilpotent => {
                write!(f, "nilpotent linearization; use the normal-form analysis")
            }
        }
    }
}

impl std::error::Error for EquilibriaError {}

impl From<ModelError> for EquilibriaError {
    fn from(e: ModelError) -> Self {
        EquilibriaError::Model(e)
    }
}

/// Stability of the parabolic (node-like) sector of a saddle-node, decided
/// by the sign of the nonzero eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sector {
    Attracting,
    Repelling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EquilibriumKind {
    Saddle,
    StableNode,
    UnstableNode,
    StableFocus,
    UnstableFocus,
    /// Zero trace with positive determinant: candidate for Hopf analysis.
    CenterCandidate,
    SaddleNode { sector: Sector },
    /// Double-zero eigenvalue with nonzero nilpotent part.
    NilpotentCandidate,
    /// Beyond the classification implemented here (e.g. a fully degenerate
    /// linearization).
    Degenerate,
}

impl fmt::Display for EquilibriumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquilibriumKind::Saddle => write!(f, "saddle"),
            EquilibriumKind::StableNode => write!(f, "stable node"),
            EquilibriumKind::UnstableNode => write!(f, "unstable node"),
            EquilibriumKind::StableFocus => write!(f, "stable focus"),
            EquilibriumKind::UnstableFocus => write!(f, "unstable focus"),
            EquilibriumKind::CenterCandidate => write!(f, "center candidate (zero trace)"),
            EquilibriumKind::SaddleNode {
                sector: Sector::Attracting,
            } => write!(f, "saddle-node (attracting parabolic sector)"),
            EquilibriumKind::SaddleNode {
                sector: Sector::Repelling,
            } => write!(f, "saddle-node (repelling parabolic sector)"),
            EquilibriumKind::NilpotentCandidate => write!(f, "nilpotent candidate"),
            EquilibriumKind::Degenerate => write!(f, "degenerate"),
        }
    }
}

/// Location, classification and degeneracy data of one equilibrium.
#[derive(Debug, Clone)]
pub struct EquilibriumReport {
    /// Conventional label: E0, E1, E2, E3, E4 on the boundary, P1/P2/P* for
    /// positive equilibria.
    pub label: String,
    pub x: Quad,
    pub y: Quad,
    pub kind: EquilibriumKind,
    pub trace: Quad,
    pub det: Quad,
    /// (1+α)² − 4β: discriminant of the prey-axis equilibria.
    pub delta1: Rational,
    /// Discriminant of the positive-equilibrium quadratic.
    pub delta2: Rational,
    /// Center-manifold quadratic coefficient at semi-hyperbolic points.
    pub center_manifold_coeff: Option<Rational>,
}

impl EquilibriumReport {
    pub fn is_boundary(&self) -> bool {
        self.label.starts_with('E')
    }
}

pub fn delta1(p: &Params) -> Rational {
    let one_a = &Rational::one() + &p.alpha;
    &(&one_a * &one_a) - &(&Rational::int(4) * &p.beta)
}

/// Coefficients (A, B, C) of the positive-equilibrium quadratic.
fn positive_quadratic(p: &Params) -> (Rational, Rational, Rational) {
    let a = &Rational::one() + &p.gamma;
    let b = &(&(&p.gamma * &(&p.alpha + &p.eta)) + &p.alpha) - &Rational::one();
    let c = &(&p.alpha * &(&(&p.gamma * &p.eta) - &Rational::one())) + &p.beta;
    (a, b, c)
}

pub fn delta2(p: &Params) -> Rational {
    let (a, b, c) = positive_quadratic(p);
    &(&b * &b) - &(&(&Rational::int(4) * &a) * &c)
}

/// Classifies from exact trace/determinant signs; `None` when the
/// linearization is non-hyperbolic in a way the caller must refine.
fn classify_from_trace_det(trace: &Quad, det: &Quad) -> Option<EquilibriumKind> {
    match det.signum() {
        -1 => Some(EquilibriumKind::Saddle),
        1 => match trace.signum() {
            0 => Some(EquilibriumKind::CenterCandidate),
            s => {
                let disc = trace.square() - Quad::rational(Rational::int(4)) * det.clone();
                let focus = disc.is_negative();
                Some(match (s, focus) {
                    (-1, false) => EquilibriumKind::StableNode,
                    (-1, true) => EquilibriumKind::StableFocus,
                    (1, false) => EquilibriumKind::UnstableNode,
                    (1, true) => EquilibriumKind::UnstableFocus,
                    _ => unreachable!(),
                })
            }
        },
        _ => None, // det = 0: semi-hyperbolic or nilpotent
    }
}

/// All boundary equilibria in the closed positive quadrant, classified.
pub fn boundary_equilibria(p: &Params) -> Vec<EquilibriumReport> {
    let d1 = delta1(p);
    let d2 = delta2(p);
    let zero = Rational::zero;
    let mut out = Vec::new();

    let mk = |label: &str, x: Quad, y: Quad, kind, trace, det, coeff| EquilibriumReport {
        label: label.to_string(),
        x,
        y,
        kind,
        trace,
        det,
        delta1: d1.clone(),
        delta2: d2.clone(),
        center_manifold_coeff: coeff,
    };

    // E0 = (0,0): eigenvalues 1 − β/α (prey axis) and δ (predator axis).
    {
        let lx = &Rational::one() - &(&p.beta / &p.alpha);
        let (kind, coeff) = match lx.signum() {
            1 => (EquilibriumKind::UnstableNode, None),
            -1 => (EquilibriumKind::Saddle, None),
            _ => semi_hyperbolic_kind(p, &zero(), &zero()),
        };
        out.push(mk(
            "E0",
            Quad::zero(),
            Quad::zero(),
            kind,
            Quad::rational(&lx + &p.delta),
            Quad::rational(&lx * &p.delta),
            coeff,
        ));
    }

    // E1 = (0, η): eigenvalues 1 − γη − β/α and −δ.
    {
        let lx = &(&Rational::one() - &(&p.gamma * &p.eta)) - &(&p.beta / &p.alpha);
        let (kind, coeff) = match lx.signum() {
            1 => (EquilibriumKind::Saddle, None),
            -1 => (EquilibriumKind::StableNode, None),
            _ => semi_hyperbolic_kind(p, &zero(), &p.eta),
        };
        out.push(mk(
            "E1",
            Quad::zero(),
            Quad::rational(p.eta.clone()),
            kind,
            Quad::rational(&lx - &p.delta),
            Quad::rational(&(-&lx) * &p.delta),
            coeff,
        ));
    }

    // Prey-axis equilibria: roots of (1−x)(x+α) = β.
    match d1.signum() {
        1 => {
            let sq = Quad::sqrt(d1.clone());
            let half = Quad::rational(Rational::ratio(1, 2));
            let one_m_alpha = Quad::rational(&Rational::one() - &p.alpha);
            for (label, sign) in [("E2", -1), ("E3", 1)] {
                let root = if sign < 0 {
                    one_m_alpha.clone() - sq.clone()
                } else {
                    one_m_alpha.clone() + sq.clone()
                };
                let x = half.clone() * root;
                if !x.is_positive() {
                    continue;
                }
                // x-eigenvalue x(1−2x−α)/(x+α); y-eigenvalue δ.
                let lx = prey_axis_eigenvalue(p, &x);
                let ly = Quad::rational(p.delta.clone());
                let kind = match lx.signum() {
                    1 => EquilibriumKind::UnstableNode,
                    -1 => EquilibriumKind::Saddle,
                    _ => EquilibriumKind::Degenerate, // unreachable for Δ₁ > 0
                };
                out.push(mk(
                    label,
                    x,
                    Quad::zero(),
                    kind,
                    lx.clone() + ly.clone(),
                    lx * ly,
                    None,
                ));
            }
        }
        0 => {
            // Double prey-axis root E4 = ((1−α)/2, 0), present for α < 1.
            let x4 = &(&Rational::one() - &p.alpha) / &Rational::int(2);
            if x4.is_positive() {
                let coeff = prey_axis_saddle_node_coeff(p);
                let kind = if coeff.is_zero() {
                    EquilibriumKind::Degenerate
                } else {
                    // nonzero eigenvalue is δ > 0
                    EquilibriumKind::SaddleNode {
                        sector: Sector::Repelling,
                    }
                };
                out.push(mk(
                    "E4",
                    Quad::rational(x4),
                    Quad::zero(),
                    kind,
                    Quad::rational(p.delta.clone()),
                    Quad::zero(),
                    Some(coeff),
                ));
            }
        }
        _ => {}
    }

    out
}

fn prey_axis_eigenvalue(p: &Params, x: &Quad) -> Quad {
    let one = Quad::one();
    let two = Quad::rational(Rational::int(2));
    let alpha = Quad::rational(p.alpha.clone());
    x.clone() * (one - two * x.clone() - alpha.clone()) / (x.clone() + alpha)
}

/// All positive equilibria (x > 0, y = x + η), classified.
pub fn positive_equilibria(p: &Params) -> Vec<EquilibriumReport> {
    let d1 = delta1(p);
    let d2 = delta2(p);
    let (a, b, _c) = positive_quadratic(p);
    let mut out = Vec::new();

    let mut push = |label: &str, x: Quad| {
        let y = x.clone() + Quad::rational(p.eta.clone());
        let (trace, det) = interior_trace_det(p, &x);
        let kind = classify_from_trace_det(&trace, &det).unwrap_or_else(|| {
            let xr = x
                .as_rational()
                .expect("degenerate positive equilibrium at rational abscissa");
            if trace.is_zero() {
                EquilibriumKind::NilpotentCandidate
            } else {
                let coeff = interior_saddle_node_coeff(p, &xr);
                if coeff.is_zero() {
                    EquilibriumKind::Degenerate
                } else {
                    EquilibriumKind::SaddleNode {
                        sector: if trace.is_positive() {
                            Sector::Repelling
                        } else {
                            Sector::Attracting
                        },
                    }
                }
            }
        });
        let coeff = match kind {
            EquilibriumKind::SaddleNode { .. } => {
                Some(interior_saddle_node_coeff(p, &x.as_rational().unwrap()))
            }
            _ => None,
        };
        out.push(EquilibriumReport {
            label: label.to_string(),
            x,
            y,
            kind,
            trace,
            det,
            delta1: d1.clone(),
            delta2: d2.clone(),
            center_manifold_coeff: coeff,
        });
    };

    match d2.signum() {
        -1 => {}
        0 => {
            let x = &(-&b) / &(&Rational::int(2) * &a);
            if x.is_positive() {
                push("P*", Quad::rational(x));
            }
        }
        _ => {
            let sq = Quad::sqrt(d2.clone());
            let denom = Quad::rational(&Rational::int(2) * &a);
            let minus_b = Quad::rational(-&b);
            let x1 = (minus_b.clone() - sq.clone()) / denom.clone();
            let x2 = (minus_b + sq) / denom;
            if x1.is_positive() {
                push("P1", x1);
            }
            if x2.is_positive() {
                push("P2", x2);
            }
        }
    }
    out
}

/// Exact trace and determinant of the Jacobian at an interior equilibrium
/// with abscissa `x` (uses y = x + η).
fn interior_trace_det(p: &Params, x: &Quad) -> (Quad, Quad) {
    let alpha = Quad::rational(p.alpha.clone());
    let delta = Quad::rational(p.delta.clone());
    let gamma = Quad::rational(p.gamma.clone());
    let beta = Quad::rational(p.beta.clone());
    let one = Quad::one();
    let xa = x.clone() + alpha;
    let ratio = beta / (xa.clone() * xa);
    let trace = x.clone() * (ratio.clone() - one.clone()) - delta.clone();
    let det = delta * x.clone() * (one + gamma - ratio);
    (trace, det)
}

/// Both roots of the positive-equilibrium quadratic (regardless of sign), as
/// exact values; `None` when they are complex.
pub fn positive_quadratic_roots(p: &Params) -> Option<(Quad, Quad)> {
    let (a, b, _) = positive_quadratic(p);
    let d2 = delta2(p);
    if d2.is_negative() {
        return None;
    }
    let sq = Quad::sqrt(d2);
    let denom = Quad::rational(&Rational::int(2) * &a);
    let minus_b = Quad::rational(-&b);
    Some((
        (minus_b.clone() - sq.clone()) / denom.clone(),
        (minus_b + sq) / denom,
    ))
}

/// Center-manifold quadratic coefficient at a semi-hyperbolic equilibrium
/// (determinant zero, trace nonzero), in the time normalization used by the
/// closed-form classification of this model.
pub fn saddle_node_coefficient(
    p: &Params,
    report: &EquilibriumReport,
) -> Result<Rational, EquilibriaError> {
    if !report.det.is_zero() {
        return Err(EquilibriaError::NotSemiHyperbolic);
    }
    if report.trace.is_zero() {
        return Err(EquilibriaError::Nilpotent);
    }
    if report.y.is_zero() {
        Ok(prey_axis_saddle_node_coeff(p))
    } else {
        let x = report
            .x
            .as_rational()
            .expect("interior saddle-node abscissa is rational when Δ₂ = 0");
        Ok(interior_saddle_node_coeff(p, &x))
    }
}

/// Reduction at E4 = ((1−α)/2, 0): translate, align with the eigenframe
/// (kernel along the prey axis), rescale time by 1/δ, and read the x²
/// coefficient of the first component. Equals −(1−α)/(δ(1+α)).
fn prey_axis_saddle_node_coeff(p: &Params) -> Rational {
    let n = 3;
    let x4 = &(&Rational::one() - &p.alpha) / &Rational::int(2);
    let (f, g) = model::expand_at(
        &p.alpha,
        &p.beta,
        &p.gamma,
        &p.delta,
        &p.eta,
        &x4,
        &Rational::zero(),
        n,
    )
    .expect("no pole at a boundary equilibrium");
    // old (X, Y) = Φ(x, y): X = x + (γ(1−α)/(2δ))·y, Y = −y/δ
    let c1 = &(&p.gamma * &(&Rational::one() - &p.alpha)) / &(&Rational::int(2) * &p.delta);
    let xs = Series2::var_x(n)
        .add(&Series2::var_y(n).scale(&c1))
        .unwrap();
    let ys = Series2::var_y(n).scale(&(-&(&Rational::one() / &p.delta)));
    let (nf, _ng) = vf_transform(&f, &g, &xs, &ys).expect("eigenframe is invertible");
    // time rescale by 1/δ
    &nf.coeff(2, 0) / &p.delta
}

/// Reduction at the interior double equilibrium: translate, apply the
/// eigenframe (X = x + (γς/(2δ(1+γ)))·y, Y = x + y with ς = 1−α−αγ−γη),
/// rescale time by 2(1+γ)/(2δ − γ(ς − 2δ)), and read the x² coefficient.
fn interior_saddle_node_coeff(p: &Params, x0: &Rational) -> Rational {
    let n = 3;
    let y0 = x0 + &p.eta;
    let (f, g) =
        model::expand_at(&p.alpha, &p.beta, &p.gamma, &p.delta, &p.eta, x0, &y0, n)
            .expect("no pole at an interior equilibrium");
    let one = Rational::one();
    let two = Rational::int(2);
    let varsigma = &(&(&one - &p.alpha) - &(&p.alpha * &p.gamma)) - &(&p.gamma * &p.eta);
    let one_g = &one + &p.gamma;
    let c1 = &(&p.gamma * &varsigma) / &(&(&two * &p.delta) * &one_g);
    let xs = Series2::var_x(n)
        .add(&Series2::var_y(n).scale(&c1))
        .unwrap();
    let ys = Series2::var_x(n).add(&Series2::var_y(n)).unwrap();
    let (nf, _ng) = vf_transform(&f, &g, &xs, &ys).expect("eigenframe is invertible");
    // time normalization 1/trace: 2(1+γ)·Tr = γς − 2δ(1+γ)
    let denom = &(&p.gamma * &varsigma) - &(&(&two * &p.delta) * &one_g);
    let factor = &(&two * &one_g) / &denom;
    &nf.coeff(2, 0) * &factor
}

/// Generic semi-hyperbolic classification at a rational equilibrium not
/// covered by the model-specific reductions above: eigenframe with the
/// kernel first, time normalized by the reciprocal of the nonzero
/// eigenvalue.
fn semi_hyperbolic_kind(
    p: &Params,
    x0: &Rational,
    y0: &Rational,
) -> (EquilibriumKind, Option<Rational>) {
    let n = 3;
    let Ok((f, g)) = model::expand_at(&p.alpha, &p.beta, &p.gamma, &p.delta, &p.eta, x0, y0, n)
    else {
        return (EquilibriumKind::Degenerate, None);
    };
    let a = f.coeff(1, 0);
    let b = f.coeff(0, 1);
    let c = g.coeff(1, 0);
    let d = g.coeff(0, 1);
    let mu = &a + &d; // the nonzero eigenvalue, since det = 0 here
    if mu.is_zero() {
        return (EquilibriumKind::NilpotentCandidate, None);
    }
    // kernel vector of the linear part
    let (k1, k2) = if !a.is_zero() || !b.is_zero() {
        (b.clone(), -&a)
    } else {
        (d.clone(), -&c)
    };
    // μ-eigenvector: any nonzero column of J
    let (m1, m2) = if !a.is_zero() || !c.is_zero() {
        (a.clone(), c.clone())
    } else {
        (b.clone(), d.clone())
    };
    let xs = Series2::var_x(n)
        .scale(&k1)
        .add(&Series2::var_y(n).scale(&m1))
        .unwrap();
    let ys = Series2::var_x(n)
        .scale(&k2)
        .add(&Series2::var_y(n).scale(&m2))
        .unwrap();
    let Ok((nf, _)) = vf_transform(&f, &g, &xs, &ys) else {
        return (EquilibriumKind::Degenerate, None);
    };
    let coeff = &nf.coeff(2, 0) / &mu;
    let kind = if coeff.is_zero() {
        EquilibriumKind::Degenerate
    } else {
        EquilibriumKind::SaddleNode {
            sector: if mu.is_positive() {
                Sector::Repelling
            } else {
                Sector::Attracting
            },
        }
    };
    (kind, Some(coeff))
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

    fn kinds(reports: &[EquilibriumReport]) -> Vec<(String, EquilibriumKind)> {
        reports
            .iter()
            .map(|e| (e.label.clone(), e.kind.clone()))
            .collect()
    }

    #[test]
    fn strong_allee_above_threshold_two_boundary_points() {
        // β > (1+α)²/4: only E0 (saddle) and E1 (stable node) remain.
        let p = params((1, 2), (3, 4), (1, 1), (1, 2), (1, 2));
        assert!(delta1(&p).is_negative());
        let reports = boundary_equilibria(&p);
        assert_eq!(
            kinds(&reports),
            vec![
                ("E0".to_string(), EquilibriumKind::Saddle),
                ("E1".to_string(), EquilibriumKind::StableNode)
            ]
        );
    }

    #[test]
    fn four_boundary_equilibria_when_alpha_below_beta_below_threshold() {
        // α < 1, α < β < (1+α)²/4
        let p = params((1, 4), (3, 8), (1, 1), (1, 2), (1, 2));
        assert!(r(1, 4) < r(3, 8) && r(3, 8) < r(25, 64));
        let reports = boundary_equilibria(&p);
        assert_eq!(
            kinds(&reports),
            vec![
                ("E0".to_string(), EquilibriumKind::Saddle),
                ("E1".to_string(), EquilibriumKind::StableNode),
                ("E2".to_string(), EquilibriumKind::UnstableNode),
                ("E3".to_string(), EquilibriumKind::Saddle),
            ]
        );
    }

    #[test]
    fn predator_only_point_splits_on_eta() {
        // β < α: E1 is a saddle for η < (α−β)/(αγ), a stable node above.
        let alpha = r(1, 2);
        let beta = r(1, 4);
        let gamma = r(1, 1);
        let threshold = &(&alpha - &beta) / &(&alpha * &gamma); // 1/2
        let low = params((1, 2), (1, 4), (1, 1), (1, 2), (1, 4));
        let high = params((1, 2), (1, 4), (1, 1), (1, 2), (3, 4));
        assert!(low.eta < threshold && high.eta > threshold);
        let find = |p: &Params| {
            boundary_equilibria(p)
                .into_iter()
                .find(|e| e.label == "E1")
                .unwrap()
        };
        assert_eq!(find(&low).kind, EquilibriumKind::Saddle);
        assert_eq!(find(&high).kind, EquilibriumKind::StableNode);
        // E0 is an unstable node in either case
        let e0 = boundary_equilibria(&low).remove(0);
        assert_eq!(e0.kind, EquilibriumKind::UnstableNode);
    }

    #[test]
    fn double_prey_axis_point_is_repelling_saddle_node() {
        // α = 1/2, β = (1+α)²/4 = 9/16 → E4 = (1/4, 0)
        let p = params((1, 2), (9, 16), (1, 1), (1, 2), (1, 2));
        let reports = boundary_equilibria(&p);
        let e4 = reports.iter().find(|e| e.label == "E4").expect("E4 present");
        assert_eq!(e4.x.as_rational(), Some(r(1, 4)));
        assert_eq!(
            e4.kind,
            EquilibriumKind::SaddleNode {
                sector: Sector::Repelling
            }
        );
        // coefficient −(1−α)/(δ(1+α)) = −(1/2)/((1/2)(3/2)) = −2/3
        assert_eq!(e4.center_manifold_coeff, Some(r(-2, 3)));
        let closed =
            &(-&(&Rational::one() - &p.alpha)) / &(&p.delta * &(&Rational::one() + &p.alpha));
        assert_eq!(e4.center_manifold_coeff, Some(closed));
    }

    #[test]
    fn no_positive_equilibria_above_the_fold() {
        // β > (1+α+αγ−γη)²/(4(1+γ))
        let p = params((1, 2), (2, 1), (1, 1), (1, 2), (1, 2));
        let bound = {
            let s = &(&(&Rational::one() + &p.alpha) + &(&p.alpha * &p.gamma))
                - &(&p.gamma * &p.eta);
            &(&s * &s) / &(&Rational::int(4) * &(&Rational::one() + &p.gamma))
        };
        assert!(p.beta > bound);
        assert!(positive_equilibria(&p).is_empty());
    }

    #[test]
    fn nilpotent_point_at_codimension_four_parameters() {
        let p = params((49, 361), (12250, 130321), (3, 2), (63, 722), (89, 361));
        let reports = positive_equilibria(&p);
        assert_eq!(reports.len(), 1);
        let e = &reports[0];
        assert_eq!(e.x.as_rational(), Some(r(21, 361)));
        assert_eq!(e.y.as_rational(), Some(r(110, 361)));
        assert_eq!(e.kind, EquilibriumKind::NilpotentCandidate);
        assert!(e.trace.is_zero() && e.det.is_zero());
        assert!(e.delta2.is_zero());
    }

    #[test]
    fn single_positive_equilibrium_when_constant_term_negative() {
        // γη < 1 and β < α(1−γη): exactly one positive root.
        let p = params((1, 10), (1, 100), (1, 10), (1, 10), (1, 10));
        let gh = &p.gamma * &p.eta;
        assert!(gh < Rational::one());
        assert!(p.beta < &p.alpha * &(&Rational::one() - &gh));
        let reports = positive_equilibria(&p);
        assert_eq!(reports.len(), 1);
        assert!(matches!(
            reports[0].kind,
            EquilibriumKind::StableNode
                | EquilibriumKind::UnstableNode
                | EquilibriumKind::StableFocus
                | EquilibriumKind::UnstableFocus
        ));
    }

    #[test]
    fn locations_are_exact_zeros_and_vieta_holds() {
        let p = params((1, 4), (1, 5), (1, 2), (1, 3), (1, 6));
        let reports = positive_equilibria(&p);
        assert!(!reports.is_empty());
        let qa = |v: &Rational| Quad::rational(v.clone());
        for e in &reports {
            let (f, g) = model::vector_field_in(
                &qa(&p.alpha),
                &qa(&p.beta),
                &qa(&p.gamma),
                &qa(&p.delta),
                &qa(&p.eta),
                &e.x,
                &e.y,
            )
            .unwrap();
            assert!(f.is_zero(), "ẋ = 0 at {}", e.label);
            assert!(g.is_zero(), "ẏ = 0 at {}", e.label);
        }
        let (x1, x2) = positive_quadratic_roots(&p).unwrap();
        let (a, b, c) = positive_quadratic(&p);
        let sum = x1.clone() + x2.clone();
        let prod = x1 * x2;
        assert_eq!(sum.as_rational(), Some(&(-&b) / &a));
        assert_eq!(prod.as_rational(), Some(&c / &a));
    }

    #[test]
    fn interior_saddle_node_coefficient_matches_closed_form() {
        // On the fold (Δ₂ = 0) with trace ≠ 0 the coefficient equals
        // 4δ(1+γ)³ς / ((1+α+αγ−γη)(2δ−γ(ς−2δ))²), ς = 1−α−αγ−γη > 0.
        let one = Rational::one;
        for (alpha, gamma, eta, delta) in [
            (r(1, 4), r(1, 2), r(1, 4), r(1, 5)),
            (r(1, 3), r(1, 3), r(1, 8), r(1, 2)),
            (r(1, 10), r(3, 4), r(1, 2), r(1, 13)),
        ] {
            let s = &(&(&one() + &alpha) + &(&alpha * &gamma)) - &(&gamma * &eta);
            let beta = &(&s * &s) / &(&Rational::int(4) * &(&one() + &gamma));
            let p =
                Params::new(alpha.clone(), beta, gamma.clone(), delta.clone(), eta.clone())
                    .unwrap();
            let reports = positive_equilibria(&p);
            assert_eq!(reports.len(), 1, "fold point has one positive equilibrium");
            let e = &reports[0];
            assert!(e.det.is_zero() && !e.trace.is_zero());
            let coeff = saddle_node_coefficient(&p, e).unwrap();

            let varsigma = &(&(&one() - &alpha) - &(&alpha * &gamma)) - &(&gamma * &eta);
            let og = &one() + &gamma;
            let two_delta = &Rational::int(2) * &delta;
            let denom_core = &two_delta - &(&gamma * &(&varsigma - &two_delta));
            let num = &(&(&Rational::int(4) * &delta) * &(&(&og * &og) * &og)) * &varsigma;
            let den = &s * &(&denom_core * &denom_core);
            assert_eq!(coeff, &num / &den);
            assert!(coeff.is_positive());
            assert_eq!(
                e.kind,
                EquilibriumKind::SaddleNode {
                    sector: if e.trace.is_positive() {
                        Sector::Repelling
                    } else {
                        Sector::Attracting
                    }
                }
            );
        }
    }

    #[test]
    fn saddle_node_coefficient_rejects_nilpotent_points() {
        let p = params((49, 361), (12250, 130321), (3, 2), (63, 722), (89, 361));
        let e = positive_equilibria(&p).remove(0);
        assert!(matches!(
            saddle_node_coefficient(&p, &e),
            Err(EquilibriaError::Nilpotent)
        ));
    }

    #[test]
    fn classification_agrees_with_numeric_eigenvalues() {
        // deterministic pseudo-random parameter points, hyperbolic cases only
        let mut seed: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 997) as i64 + 1
        };
        let mut checked = 0;
        while checked < 200 {
            let p = Params::new(
                r(next() % 200 + 1, 200),
                r(next() % 300 + 1, 300),
                r(next() % 400 + 1, 200),
                r(next() % 200 + 1, 200),
                r(next() % 200 + 1, 200),
            )
            .unwrap();
            let fp = p.to_f64();
            for e in boundary_equilibria(&p)
                .into_iter()
                .chain(positive_equilibria(&p))
            {
                let (x, y) = (e.x.to_f64(), e.y.to_f64());
                let j = fp.jacobian(x, y);
                let tr = j.fx + j.gy;
                let det = j.fx * j.gy - j.fy * j.gx;
                if det.abs() < 1e-9 || (det > 0.0 && tr.abs() < 1e-9) {
                    continue; // numerically non-hyperbolic; skip
                }
                let disc = tr * tr - 4.0 * det;
                if disc.abs() < 1e-9 {
                    continue; // node/focus boundary too close to call in f64
                }
                let expected = if det < 0.0 {
                    EquilibriumKind::Saddle
                } else {
                    match (tr > 0.0, disc >= 0.0) {
                        (true, true) => EquilibriumKind::UnstableNode,
                        (true, false) => EquilibriumKind::UnstableFocus,
                        (false, true) => EquilibriumKind::StableNode,
                        (false, false) => EquilibriumKind::StableFocus,
                    }
                };
                assert_eq!(e.kind, expected, "at {} of {}", e.label, p);
                checked += 1;
            }
        }
    }
}
