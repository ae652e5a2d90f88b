//! The mechanized normal-form chain at a nilpotent positive equilibrium.
//!
//! Starting from the exact degree-5 expansion of the model at the nilpotent
//! point, a fixed sequence of near-identity polynomial substitutions and one
//! polynomial time reparametrization reduces the field to
//!
//! ```text
//! ẋ = y,   ẏ = w₂₀x² + w₃₁x³y + w₄₁x⁴y      (through total degree 5)
//! ```
//!
//! after which the final scaling produces ẏ = x² + Mx³y + Nx⁴y with
//! M = −w₃₁/√(−w₂₀) and N = w₄₁/√(−w₂₀). Every intermediate structural
//! zero is asserted, so a transcription error anywhere in the sequence
//! cannot silently produce a wrong report.

use crate::algebra::{
    time_rescale, vf_transform, Coeff, Field2, Quad, Rational, Series2,
};
use crate::model::{self, Params};

use super::{nilpotent_abscissa, rho1, rho2, CuspReport, NormalFormError};

const DEG: u32 = 5;

/// Intermediate fields of the chain, for oracle tests.
#[derive(Debug, Clone)]
#[allow(dead_code)] // read by the oracle tests
pub(crate) struct ChainTrace {
    /// After the nilpotent frame: ẋ = y + Σaᵢⱼ, ẏ = Σbᵢⱼ.
    pub frame: Field2<Rational>,
    /// After the quadratic shear: ẏ = d₂₀x² + d₁₁xy + (cubic and higher).
    pub sheared: Field2<Rational>,
    /// Generalized Liénard form: ẋ = y, ẏ = Σ m_{k0}x^k + y·Σ m_{k1}x^k.
    pub lienard: Option<Field2<Rational>>,
    /// Flattened form: ẏ = w₂₀x² + w₃₁x³y + w₄₁x⁴y.
    pub flat: Option<Field2<Rational>>,
}

/// Cusp data computed by running the transformation chain; serves as the
/// independent oracle for [`super::cusp_report_closed`].
pub fn cusp_report_chain(p: &Params) -> Result<CuspReport, NormalFormError> {
    let (report, _) = chain_with_trace(p)?;
    Ok(report)
}

pub(crate) fn chain_with_trace(
    p: &Params,
) -> Result<(CuspReport, ChainTrace), NormalFormError> {
    let x0 = nilpotent_abscissa(p)?;
    let y0 = &x0 + &p.eta;

    // Exact degree-5 expansion at the nilpotent point.
    let (f0, g0) = model::expand_at(
        &p.alpha, &p.beta, &p.gamma, &p.delta, &p.eta, &x0, &y0, DEG,
    )?;

    // Nilpotent frame: old (X, Y) = (x + c·y, x) with c = 2(1+γ)/(γς),
    // ς = 1−α−αγ−γη; on the nilpotent locus c = 1/δ and the linear part
    // becomes the shift ẋ = y.
    let one = Rational::one();
    let varsigma =
        &(&(&one - &p.alpha) - &(&p.alpha * &p.gamma)) - &(&p.gamma * &p.eta);
    if varsigma.is_zero() {
        return Err(NormalFormError::FormulaPole("1−α−αγ−γη"));
    }
    let c = &(&Rational::int(2) * &(&one + &p.gamma)) / &(&p.gamma * &varsigma);
    let xs = Series2::var_x(DEG)
        .add(&Series2::var_y(DEG).scale(&c))
        .unwrap();
    let ys = Series2::var_x(DEG);
    let (fa, ga) = vf_transform(&f0, &g0, &xs, &ys)?;
    assert!(fa.coeff(0, 1) == one && fa.coeff(1, 0).is_zero(), "frame: ẋ = y + h.o.t.");
    assert!(ga.coeff(1, 0).is_zero() && ga.coeff(0, 1).is_zero(), "frame: ẏ nonlinear");

    // Quadratic shear removes the quadratic terms of the first component:
    // old (x, y) = (X + (b₀₂/2)X² + a₀₂XY, Y + b₀₂XY).
    let a02 = fa.coeff(0, 2);
    let b02 = ga.coeff(0, 2);
    let half_b02 = &b02 / &Rational::int(2);
    let xs = {
        let mut s = Series2::var_x(DEG);
        s.add_to_coeff(2, 0, half_b02);
        s.add_to_coeff(1, 1, a02.clone());
        s
    };
    let ys = {
        let mut s = Series2::var_y(DEG);
        s.add_to_coeff(1, 1, b02.clone());
        s
    };
    let (fb, gb) = vf_transform(&fa, &ga, &xs, &ys)?;
    for (i, j) in [(2, 0), (1, 1), (0, 2)] {
        assert!(fb.coeff(i, j).is_zero(), "shear must clear ẋ quadratics");
    }
    let d20 = gb.coeff(2, 0);
    let d11 = gb.coeff(1, 1);

    let frame = (fa, ga);
    let sheared = (fb.clone(), gb.clone());

    if !d11.is_zero() {
        let codim = CuspReport::decide_codim(&d20, &d11, None, None);
        return Ok((
            CuspReport {
                d20,
                d11,
                m: None,
                n: None,
                rho1: None,
                rho2: None,
                codim,
            },
            ChainTrace {
                frame,
                sheared,
                lienard: None,
                flat: None,
            },
        ));
    }

    // Cubic, quartic and quintic kills bring the system to generalized
    // Liénard form (no y²-divisible terms, first component exactly y).
    let (fc, gc) = kill_first_component_degree(&fb, &gb, 3)?;
    let (fd, gd) = kill_first_component_degree(&fc, &gc, 4)?;
    let (fe, ge) = kill_first_component_degree(&fd, &gd, 5)?;
    assert_eq!(fe, Series2::var_y(DEG), "Liénard form: ẋ = y exactly");
    for (i, j, _) in ge.terms() {
        assert!(
            j <= 1,
            "Liénard form: no y²-divisible terms (found x^{i} y^{j})"
        );
    }
    let m20 = ge.coeff(2, 0);
    let m11 = ge.coeff(1, 1);
    assert!(m11.is_zero(), "xy coefficient persists although d₁₁ = 0");
    let m21 = ge.coeff(2, 1);
    let m30 = ge.coeff(3, 0);
    if m20.is_zero() {
        return Err(NormalFormError::ChainDivision {
            step: "x²y normalization (m₂₀ = 0)",
        });
    }

    // Remove the x²y term: old (x, y) = (X + (m₂₁/(3m₂₀))XY + (5m₂₁²/(54m₂₀))X⁴,
    // Y + (m₂₁/(3m₂₀))Y² + (m₂₁/3)X³ + (m₂₁m₃₀/(3m₂₀))X⁴ + (10m₂₁²/(27m₂₀))X³Y).
    let q = &m21 / &(&Rational::int(3) * &m20);
    let xs = {
        let mut s = Series2::var_x(DEG);
        s.add_to_coeff(1, 1, q.clone());
        s.add_to_coeff(4, 0, &(&(&m21 * &m21) * &Rational::int(5)) / &(&Rational::int(54) * &m20));
        s
    };
    let ys = {
        let mut s = Series2::var_y(DEG);
        s.add_to_coeff(0, 2, q.clone());
        s.add_to_coeff(3, 0, &m21 / &Rational::int(3));
        s.add_to_coeff(4, 0, &(&m21 * &m30) / &(&Rational::int(3) * &m20));
        s.add_to_coeff(3, 1, &(&(&m21 * &m21) * &Rational::int(10)) / &(&Rational::int(27) * &m20));
        s
    };
    let (ff, gf) = vf_transform(&fe, &ge, &xs, &ys)?;
    assert!(gf.coeff(2, 1).is_zero(), "x²y term must be gone");

    // Remove the quintic terms introduced in the first component and the
    // y²-divisible quintics of the second:
    // old (x, y) = (X + ((4n₄₁+r₃₂)/20)X⁵ + (r₂₃/12)X⁴Y,
    //               Y − n₅₀X⁵ + (r₃₂/4)X⁴Y + (r₂₃/3)X³Y²).
    let n50 = ff.coeff(5, 0);
    let n41 = ff.coeff(4, 1);
    let r32 = gf.coeff(3, 2);
    let r23 = gf.coeff(2, 3);
    let xs = {
        let mut s = Series2::var_x(DEG);
        s.add_to_coeff(
            5,
            0,
            &(&(&Rational::int(4) * &n41) + &r32) / &Rational::int(20),
        );
        s.add_to_coeff(4, 1, &r23 / &Rational::int(12));
        s
    };
    let ys = {
        let mut s = Series2::var_y(DEG);
        s.add_to_coeff(5, 0, -&n50);
        s.add_to_coeff(4, 1, &r32 / &Rational::int(4));
        s.add_to_coeff(3, 2, &r23 / &Rational::int(3));
        s
    };
    let (fg_, gg) = vf_transform(&ff, &gf, &xs, &ys)?;
    assert_eq!(fg_, Series2::var_y(DEG), "ẋ = y after quintic cleanup");
    for (i, j, _) in gg.terms() {
        assert!(j <= 1, "no y²-divisible terms after cleanup (x^{i} y^{j})");
        assert!(!(j == 1 && (i == 1 || i == 2)), "xy and x²y stay cleared");
    }

    // Flatten the pure-x part to x² alone, with the time factor equal to
    // the substitution's derivative.
    let s20 = gg.coeff(2, 0);
    let s30 = gg.coeff(3, 0);
    let s40 = gg.coeff(4, 0);
    let s50 = gg.coeff(5, 0);
    if s20.is_zero() {
        return Err(NormalFormError::ChainDivision {
            step: "pure-x flattening (s₂₀ = 0)",
        });
    }
    let psi = flattening_substitution(&s20, &s30, &s40, &s50);
    let psi_prime = psi.dx();
    let (fh, gh) = vf_transform(&fg_, &gg, &psi, &Series2::var_y(DEG))?;
    let (fi, gi) = time_rescale(&fh, &gh, &psi_prime)?;
    assert_eq!(fi, Series2::var_y(DEG), "flattened: ẋ = y exactly");
    for (i, j, _) in gi.terms() {
        assert!(
            (i, j) == (2, 0) || (j == 1 && (i == 3 || i == 4)),
            "flattened second component has only x², x³y, x⁴y (found x^{i} y^{j})"
        );
    }
    let w20 = gi.coeff(2, 0);
    let w31 = gi.coeff(3, 1);
    let w41 = gi.coeff(4, 1);
    assert_eq!(w20, m20, "flattening preserves the quadratic coefficient");
    assert_eq!(w20, d20, "quadratic coefficient survives the whole chain");

    // Final scaling: with w₂₀ < 0 put c = √(−w₂₀); then M = −w₃₁/c and
    // N = w₄₁/c.
    if !w20.is_negative() {
        return Err(NormalFormError::ScalingDegenerate("−w₂₀ (must be positive)"));
    }
    let neg_w20 = -&w20;
    let m = Quad::new(Rational::zero(), &(-&w31) / &neg_w20, neg_w20.clone());
    let n = Quad::new(Rational::zero(), &w41 / &neg_w20, neg_w20.clone());

    let codim = CuspReport::decide_codim(&d20, &d11, Some(&m), Some(&n));
    let report = CuspReport {
        d20,
        d11,
        m: Some(m),
        n: Some(n),
        rho1: Some(rho1(&p.gamma, &p.eta)),
        rho2: Some(rho2(&p.gamma, &p.eta)),
        codim,
    };
    Ok((
        report,
        ChainTrace {
            frame,
            sheared,
            lienard: Some((fe, ge)),
            flat: Some((fi, gi)),
        },
    ))
}

/// ψ(x) = x − (s₃₀/4s₂₀)x² + ((15s₃₀²−16s₂₀s₄₀)/80s₂₀²)x³
///        − ((175s₃₀³−336s₂₀s₃₀s₄₀+160s₂₀²s₅₀)/960s₂₀³)x⁴
pub(crate) fn flattening_substitution(
    s20: &Rational,
    s30: &Rational,
    s40: &Rational,
    s50: &Rational,
) -> Series2<Rational> {
    let int = Rational::int;
    let s20_2 = s20 * s20;
    let s20_3 = &s20_2 * s20;
    let c2 = -&(s30 / &(&int(4) * s20));
    let c3 = &(&(&int(15) * &(s30 * s30)) - &(&int(16) * &(s20 * s40)))
        / &(&int(80) * &s20_2);
    let c4 = -&(&(&(&(&int(175) * &(&(s30 * s30) * s30))
        - &(&(&int(336) * s20) * &(s30 * s40)))
        + &(&(&int(160) * &s20_2) * s50))
        / &(&int(960) * &s20_3));
    let mut psi = Series2::var_x(DEG);
    psi.add_to_coeff(2, 0, c2);
    psi.add_to_coeff(3, 0, c3);
    psi.add_to_coeff(4, 0, c4);
    psi
}

/// Removes all degree-k terms from the first component and the y²-divisible
/// degree-k terms from the second, via the standard paired substitution
/// built from the current coefficients.
fn kill_first_component_degree(
    f: &Series2<Rational>,
    g: &Series2<Rational>,
    k: u32,
) -> Result<Field2<Rational>, NormalFormError> {
    // old (x, y) = (u + φ(u,v), v + ψ(u,v)), homogeneous degree k. The pure
    // u^k part of ψ clears the first component's u^k term; the mixed parts
    // of ψ clear the second component's y²-divisible terms through −ψ_u·v;
    // φ then clears what remains of the first component through −φ_u·v:
    //   ψ_{k,0}   = −f_{k,0}
    //   ψ_{k−j,j} = g_{k−j−1,j+1}/(k−j)                    (j = 1..k−1)
    //   φ_{k−j,j} = (f_{k−j−1,j+1} + ψ_{k−j−1,j+1})/(k−j)  (j = 0..k−1)
    let mut psi = Series2::zero(DEG);
    psi.add_to_coeff(k, 0, -&f.coeff(k, 0));
    for j in 1..k {
        let a = k - j;
        let target = g.coeff(a - 1, j + 1);
        psi.add_to_coeff(a, j, &target / &Rational::int(a as i64));
    }
    let mut phi = Series2::zero(DEG);
    for j in 0..k {
        let a = k - j;
        let need = &f.coeff(a - 1, j + 1) + &psi.coeff(a - 1, j + 1);
        phi.add_to_coeff(a, j, &need / &Rational::int(a as i64));
    }
    let xs = Series2::var_x(DEG).add(&phi).unwrap();
    let ys = Series2::var_y(DEG).add(&psi).unwrap();
    let (nf, ng) = vf_transform(f, g, &xs, &ys)?;
    for (i, j, _) in nf.terms() {
        assert!(
            i + j != k || (i, j) == (0, 1),
            "degree-{k} kill left x^{i} y^{j} in the first component"
        );
    }
    for (i, j, _) in ng.terms() {
        assert!(
            !(i + j == k && j >= 2),
            "degree-{k} kill left y²-divisible x^{i} y^{j} in the second component"
        );
    }
    Ok((nf, ng))
}

/// Rewrites a planar field with y-linear first component as a second-order
/// equation: new coordinates (u, v) = (X, Ẋ). The first component must have
/// a nonzero ∂/∂Y at the origin. Exact on the retained jet provided the
/// inputs are exact polynomials at the series cutoff (expand two degrees
/// beyond the target and truncate afterwards when the source is itself a
/// truncation).
pub fn derivative_lift<T: Coeff>(
    f: &Series2<T>,
    g: &Series2<T>,
) -> Result<Field2<T>, NormalFormError> {
    let n = f.max_degree();
    let a01 = f.coeff(0, 1);
    if a01.is_zero() {
        return Err(NormalFormError::ChainDivision {
            step: "second-order lift (∂f/∂y = 0 at the origin)",
        });
    }
    let u = Series2::var_x(n);
    let v = Series2::var_y(n);
    // Solve f(u, Y) = v for Y by fixed-point iteration; gains one degree of
    // accuracy per pass.
    let inv_a01 = T::one() / a01.clone();
    let mut yy = Series2::zero(n);
    for _ in 0..=(n + 2) {
        let fv = f.subst_affine(&u, &yy).map_err(NormalFormError::from)?;
        let correction = v.sub(&fv).map_err(NormalFormError::from)?.scale(&inv_a01);
        yy = yy.add(&correction).map_err(NormalFormError::from)?;
    }
    let residual = f
        .subst_affine(&u, &yy)
        .map_err(NormalFormError::from)?
        .sub(&v)
        .map_err(NormalFormError::from)?;
    assert!(residual.is_zero(), "second-order lift failed to converge");

    // v̇ = f_X(u,Y)·v + f_Y(u,Y)·g(u,Y)
    let fx = f.dx().subst_affine(&u, &yy).map_err(NormalFormError::from)?;
    let fy = f.dy().subst_affine(&u, &yy).map_err(NormalFormError::from)?;
    let gc = g.subst_affine(&u, &yy).map_err(NormalFormError::from)?;
    let new_g = fx
        .mul(&v)
        .map_err(NormalFormError::from)?
        .add(&fy.mul(&gc).map_err(NormalFormError::from)?)
        .map_err(NormalFormError::from)?;
    Ok((v, new_g))
}
