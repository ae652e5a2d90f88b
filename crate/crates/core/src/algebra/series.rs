//! Truncated bivariate power series with exact coefficients.
//!
//! A `Series2<T>` is a polynomial in two variables truncated at a fixed total
//! degree; every operation is exact on the retained jet and silently drops
//! monomials beyond the cutoff. The default cutoff used by the normal-form
//! pipeline is total degree 5, matching the order at which the model's
//! degeneracies are decided, but the cutoff is a constructor argument.
//!
//! Coefficients come from any exact field implementing [`Coeff`]; `f64` also
//! implements it for the numeric lanes (simulation, transversality checks).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::quad::Quad;
use super::rational::Rational;
use super::AlgebraError;

/// Coefficient ring for series and polynomials: a field with exact ring ops.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_ratio(n: i64, d: i64) -> Self;
    fn to_f64_approx(&self) -> f64;
}

impl Coeff for Rational {
    fn from_ratio(n: i64, d: i64) -> Self {
        Rational::ratio(n, d)
    }
    fn to_f64_approx(&self) -> f64 {
        self.to_f64()
    }
}

impl Coeff for Quad {
    fn from_ratio(n: i64, d: i64) -> Self {
        Quad::rational(Rational::ratio(n, d))
    }
    fn to_f64_approx(&self) -> f64 {
        self.to_f64()
    }
}

impl Coeff for f64 {
    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
    fn to_f64_approx(&self) -> f64 {
        *self
    }
}

/// Bivariate polynomial truncated at a total-degree cutoff.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality at a shared cutoff.
#[derive(Clone, PartialEq)]
pub struct Series2<T: Coeff> {
    max_degree: u32,
    coeffs: BTreeMap<(u32, u32), T>,
}

impl<T: Coeff> Series2<T> {
    pub fn zero(max_degree: u32) -> Self {
        Series2 {
            max_degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: T, max_degree: u32) -> Self {
        let mut s = Self::zero(max_degree);
        s.set_coeff(0, 0, c);
        s
    }

    pub fn monomial(i: u32, j: u32, c: T, max_degree: u32) -> Self {
        assert!(i + j <= max_degree, "monomial beyond cutoff");
        let mut s = Self::zero(max_degree);
        s.set_coeff(i, j, c);
        s
    }

    /// The first variable as a series.
    pub fn var_x(max_degree: u32) -> Self {
        Self::monomial(1, 0, T::one(), max_degree)
    }

    /// The second variable as a series.
    pub fn var_y(max_degree: u32) -> Self {
        Self::monomial(0, 1, T::one(), max_degree)
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn set_coeff(&mut self, i: u32, j: u32, c: T) {
        if i + j > self.max_degree {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
    }

    pub fn add_to_coeff(&mut self, i: u32, j: u32, c: T) {
        if i + j > self.max_degree || c.is_zero() {
            return;
        }
        let cur = self.coeff(i, j);
        self.set_coeff(i, j, cur + c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// Exact coefficientwise sum. Errors on mismatched cutoffs.
    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_to_coeff(i, j, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.clone().negate())
    }

    pub fn negate(mut self) -> Self {
        for c in self.coeffs.values_mut() {
            *c = -(c.clone());
        }
        self
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero(self.max_degree);
        if k.is_zero() {
            return out;
        }
        for (i, j, c) in self.terms() {
            out.set_coeff(i, j, c.clone() * k.clone());
        }
        out
    }

    /// Exact product truncated at the shared cutoff.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.max_degree);
        for (i1, j1, c1) in self.terms() {
            if i1 + j1 > self.max_degree {
                continue;
            }
            for (i2, j2, c2) in other.terms() {
                let (i, j) = (i1 + i2, j1 + j2);
                if i + j > self.max_degree {
                    continue;
                }
                out.add_to_coeff(i, j, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(T::one(), self.max_degree);
        for _ in 0..k {
            out = out.mul(self).expect("same cutoff");
        }
        out
    }

    /// Composition `self(x_sub, y_sub)`. Both substituted series must have a
    /// zero constant term: with a truncated series, an affine shift would mix
    /// the (dropped) remainder into retained degrees. Use [`subst_affine`]
    /// when the receiver is known to be an exact polynomial.
    ///
    /// [`subst_affine`]: Series2::subst_affine
    pub fn subst(&self, x_sub: &Self, y_sub: &Self) -> Result<Self, AlgebraError> {
        self.check_degree(x_sub)?;
        self.check_degree(y_sub)?;
        if !x_sub.coeff(0, 0).is_zero() || !y_sub.coeff(0, 0).is_zero() {
            return Err(AlgebraError::NonzeroConstantInSubstitution);
        }
        Ok(self.compose(x_sub, y_sub))
    }

    /// Composition allowing affine (constant-term) substitutions. Exact only
    /// when the receiver is a genuine polynomial rather than a truncation.
    pub fn subst_affine(&self, x_sub: &Self, y_sub: &Self) -> Result<Self, AlgebraError> {
        self.check_degree(x_sub)?;
        self.check_degree(y_sub)?;
        Ok(self.compose(x_sub, y_sub))
    }

    fn compose(&self, x_sub: &Self, y_sub: &Self) -> Self {
        let n = self.max_degree;
        let mut x_pows: Vec<Series2<T>> = Vec::with_capacity(n as usize + 1);
        let mut y_pows: Vec<Series2<T>> = Vec::with_capacity(n as usize + 1);
        x_pows.push(Self::constant(T::one(), n));
        y_pows.push(Self::constant(T::one(), n));
        for k in 1..=n as usize {
            x_pows.push(x_pows[k - 1].mul(x_sub).expect("same cutoff"));
            y_pows.push(y_pows[k - 1].mul(y_sub).expect("same cutoff"));
        }
        let mut out = Self::zero(n);
        for (i, j, c) in self.terms() {
            let term = x_pows[i as usize]
                .mul(&y_pows[j as usize])
                .expect("same cutoff")
                .scale(c);
            out = out.add(&term).expect("same cutoff");
        }
        out
    }

    /// ∂/∂x.
    pub fn dx(&self) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (i, j, c) in self.terms() {
            if i > 0 {
                out.add_to_coeff(i - 1, j, c.clone() * T::from_ratio(i as i64, 1));
            }
        }
        out
    }

    /// ∂/∂y.
    pub fn dy(&self) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (i, j, c) in self.terms() {
            if j > 0 {
                out.add_to_coeff(i, j - 1, c.clone() * T::from_ratio(j as i64, 1));
            }
        }
        out
    }

    /// Reciprocal of a unit (nonzero constant term), truncated.
    pub fn inv_unit(&self) -> Result<Self, AlgebraError> {
        let c0 = self.coeff(0, 0);
        if c0.is_zero() {
            return Err(AlgebraError::NotAUnit);
        }
        // 1/(c0 + h) = (1/c0) Σ (−h/c0)^k
        let inv_c0 = T::one() / c0.clone();
        let mut h = self.clone();
        h.set_coeff(0, 0, T::zero());
        let neg_scaled = h.scale(&inv_c0).negate();
        let mut out = Self::constant(T::one(), self.max_degree);
        let mut pw = Self::constant(T::one(), self.max_degree);
        for _ in 1..=self.max_degree {
            pw = pw.mul(&neg_scaled).expect("same cutoff");
            if pw.is_zero() {
                break;
            }
            out = out.add(&pw).expect("same cutoff");
        }
        Ok(out.scale(&inv_c0))
    }

    /// Evaluate at a point (mostly for tests).
    pub fn eval(&self, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        for (i, j, c) in self.terms() {
            let mut t = c.clone();
            for _ in 0..i {
                t = t * x.clone();
            }
            for _ in 0..j {
                t = t * y.clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Drop all terms above a new (smaller) cutoff.
    pub fn truncated(&self, new_max: u32) -> Self {
        let mut out = Self::zero(new_max);
        for (i, j, c) in self.terms() {
            if i + j <= new_max {
                out.set_coeff(i, j, c.clone());
            }
        }
        out
    }

    /// Same coefficients viewed at a larger cutoff.
    pub fn widened(&self, new_max: u32) -> Self {
        assert!(new_max >= self.max_degree);
        let mut out = Self::zero(new_max);
        for (i, j, c) in self.terms() {
            out.set_coeff(i, j, c.clone());
        }
        out
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Series2<U> {
        let mut out = Series2::zero(self.max_degree);
        for (i, j, c) in self.terms() {
            out.set_coeff(i, j, f(c));
        }
        out
    }

    fn check_degree(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.max_degree != other.max_degree {
            Err(AlgebraError::DegreeMismatch {
                left: self.max_degree,
                right: other.max_degree,
            })
        } else {
            Ok(())
        }
    }
}

impl<T: Coeff> fmt::Debug for Series2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (deg<={})", self.max_degree);
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})", c)?;
            if i > 0 {
                write!(f, "*x^{}", i)?;
            }
            if j > 0 {
                write!(f, "*y^{}", j)?;
            }
        }
        write!(f, " (deg<={})", self.max_degree)
    }
}

impl<T: Coeff> Add for &Series2<T> {
    type Output = Series2<T>;
    fn add(self, rhs: &Series2<T>) -> Series2<T> {
        Series2::add(self, rhs).expect("matching truncation degree")
    }
}

impl<T: Coeff> Sub for &Series2<T> {
    type Output = Series2<T>;
    fn sub(self, rhs: &Series2<T>) -> Series2<T> {
        Series2::sub(self, rhs).expect("matching truncation degree")
    }
}

impl<T: Coeff> Mul for &Series2<T> {
    type Output = Series2<T>;
    fn mul(self, rhs: &Series2<T>) -> Series2<T> {
        Series2::mul(self, rhs).expect("matching truncation degree")
    }
}

impl<T: Coeff> Neg for Series2<T> {
    type Output = Series2<T>;
    fn neg(self) -> Series2<T> {
        self.negate()
    }
}

/// A planar vector field truncated at a shared cutoff.
pub type Field2<T> = (Series2<T>, Series2<T>);

/// Pushes the vector field `(f, g)` through the coordinate change
/// `old = Φ(new)`, where `Φ = (x_sub, y_sub)` is near-identity (zero constant
/// term, invertible linear part). Returns `(DΦ)⁻¹ · (f, g)∘Φ` truncated at
/// the shared cutoff — the same field expressed in the new coordinates.
pub fn vf_transform<T: Coeff>(
    f: &Series2<T>,
    g: &Series2<T>,
    x_sub: &Series2<T>,
    y_sub: &Series2<T>,
) -> Result<Field2<T>, AlgebraError> {
    if !x_sub.coeff(0, 0).is_zero() || !y_sub.coeff(0, 0).is_zero() {
        return Err(AlgebraError::NonzeroConstantInSubstitution);
    }
    let a = x_sub.coeff(1, 0);
    let b = x_sub.coeff(0, 1);
    let c = y_sub.coeff(1, 0);
    let d = y_sub.coeff(0, 1);
    let lin_det = a * d - b * c;
    if lin_det.is_zero() {
        return Err(AlgebraError::NonInvertibleLinearPart);
    }

    let f_new = f.subst_affine(x_sub, y_sub)?;
    let g_new = g.subst_affine(x_sub, y_sub)?;

    let j00 = x_sub.dx();
    let j01 = x_sub.dy();
    let j10 = y_sub.dx();
    let j11 = y_sub.dy();
    let det = &(&j00 * &j11) - &(&j01 * &j10);
    let inv_det = det.inv_unit()?;

    let new_f = &(&(&j11 * &f_new) - &(&j01 * &g_new)) * &inv_det;
    let new_g = &(&(&j00 * &g_new) - &(&j10 * &f_new)) * &inv_det;
    Ok((new_f, new_g))
}

/// Reparametrizes time by a unit factor: `(f·factor, g·factor)`.
/// The factor must have a nonzero constant term.
pub fn time_rescale<T: Coeff>(
    f: &Series2<T>,
    g: &Series2<T>,
    factor: &Series2<T>,
) -> Result<Field2<T>, AlgebraError> {
    if factor.coeff(0, 0).is_zero() {
        return Err(AlgebraError::ZeroConstantTimeFactor);
    }
    Ok((f.mul(factor)?, g.mul(factor)?))
}

// Golden-file JSON schema: {"max_degree": n, "terms": [[i, j, "p/q"], ...]}.
impl Serialize for Series2<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            max_degree: u32,
            terms: Vec<(u32, u32, &'a Rational)>,
        }
        let repr = Repr {
            max_degree: self.max_degree,
            terms: self.terms().collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series2<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            max_degree: u32,
            terms: Vec<(u32, u32, Rational)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut s = Series2::zero(repr.max_degree);
        for (i, j, c) in repr.terms {
            if i + j > repr.max_degree {
                return Err(D::Error::custom(format!(
                    "term x^{i} y^{j} beyond max_degree {}",
                    repr.max_degree
                )));
            }
            s.set_coeff(i, j, c);
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn xs(n: u32) -> Series2<Rational> {
        Series2::var_x(n)
    }

    fn ys(n: u32) -> Series2<Rational> {
        Series2::var_y(n)
    }

    #[test]
    fn add_cancellation_and_identity() {
        let n = 5;
        let xpy = &xs(n) + &ys(n);
        let xmy = &xs(n) - &ys(n);
        let sum = xpy.add(&xmy).unwrap();
        assert_eq!(sum, xs(n).scale(&r(2, 1)));

        let s = Series2::monomial(2, 1, r(3, 7), n);
        assert_eq!(Series2::zero(n).add(&s).unwrap(), s);
    }

    #[test]
    fn add_exact_rationals() {
        let n = 4;
        let a = Series2::monomial(2, 0, r(1, 2), n);
        let b = Series2::monomial(2, 0, r(1, 3), n);
        assert_eq!(a.add(&b).unwrap(), Series2::monomial(2, 0, r(5, 6), n));
    }

    #[test]
    fn add_degree_mismatch_errors() {
        let a = Series2::<Rational>::zero(4);
        let b = Series2::<Rational>::zero(5);
        assert!(matches!(
            a.add(&b),
            Err(AlgebraError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn mul_basics_and_cutoff() {
        let n = 5;
        assert_eq!(
            xs(n).mul(&ys(n)).unwrap(),
            Series2::monomial(1, 1, r(1, 1), n)
        );
        let sq = (&xs(n) + &ys(n)).pow(2);
        let mut expect = Series2::zero(n);
        expect.set_coeff(2, 0, r(1, 1));
        expect.set_coeff(1, 1, r(2, 1));
        expect.set_coeff(0, 2, r(1, 1));
        assert_eq!(sq, expect);

        // cutoff semantics: at max_degree 2, x² · y truncates to zero
        let x2 = Series2::monomial(2, 0, r(1, 1), 2);
        let y1 = Series2::monomial(0, 1, r(1, 1), 2);
        assert!(x2.mul(&y1).unwrap().is_zero());
    }

    #[test]
    fn subst_examples() {
        let n = 5;
        let s = xs(n).pow(2);
        let out = s.subst(&(&xs(n) + &ys(n)), &ys(n)).unwrap();
        let mut expect = Series2::zero(n);
        expect.set_coeff(2, 0, r(1, 1));
        expect.set_coeff(1, 1, r(2, 1));
        expect.set_coeff(0, 2, r(1, 1));
        assert_eq!(out, expect);

        let s = xs(n).mul(&ys(n)).unwrap();
        let out = s.subst(&xs(n), &xs(n)).unwrap();
        assert_eq!(out, xs(n).pow(2));
    }

    #[test]
    fn subst_rejects_constant_terms() {
        let n = 3;
        let shift = Series2::constant(r(1, 1), n);
        assert!(matches!(
            xs(n).subst(&shift, &ys(n)),
            Err(AlgebraError::NonzeroConstantInSubstitution)
        ));
        assert!(xs(n).subst_affine(&shift, &ys(n)).is_ok());
    }

    #[test]
    fn inv_unit_is_reciprocal() {
        let n = 6;
        let u = &(&Series2::constant(r(2, 1), n) + &xs(n)) + &ys(n).scale(&r(3, 1));
        let inv = u.inv_unit().unwrap();
        let prod = u.mul(&inv).unwrap();
        assert_eq!(prod, Series2::constant(r(1, 1), n));
        assert!(xs(n).inv_unit().is_err());
    }

    #[test]
    fn vf_transform_identity_and_swap() {
        let n = 5;
        let f = &xs(n).pow(2) + &ys(n);
        let g = xs(n).mul(&ys(n)).unwrap();
        let (nf, ng) = vf_transform(&f, &g, &xs(n), &ys(n)).unwrap();
        assert_eq!(nf, f);
        assert_eq!(ng, g);

        // pure swap x↔y: components swap with arguments swapped
        let (sf, sg) = vf_transform(&f, &g, &ys(n), &xs(n)).unwrap();
        let f_sw = f.subst(&ys(n), &xs(n)).unwrap();
        let g_sw = g.subst(&ys(n), &xs(n)).unwrap();
        assert_eq!(sf, g_sw);
        assert_eq!(sg, f_sw);
    }

    #[test]
    fn vf_transform_rejects_singular_linear_part() {
        let n = 4;
        let f = xs(n);
        let g = ys(n);
        let err = vf_transform(&f, &g, &xs(n), &xs(n));
        assert!(matches!(err, Err(AlgebraError::NonInvertibleLinearPart)));
    }

    #[test]
    fn time_rescale_examples() {
        let n = 5;
        let f = ys(n);
        let g = xs(n).pow(2);
        let one = Series2::constant(r(1, 1), n);
        let (a, b) = time_rescale(&f, &g, &one).unwrap();
        assert_eq!((a, b), (f.clone(), g.clone()));

        let two = Series2::constant(r(2, 1), n);
        let (a, b) = time_rescale(&f, &g, &two).unwrap();
        assert_eq!(a, f.scale(&r(2, 1)));
        assert_eq!(b, g.scale(&r(2, 1)));

        // factor 1 + x on (y, x²) → (y + xy, x² + x³)
        let fac = &one + &xs(n);
        let (a, b) = time_rescale(&f, &g, &fac).unwrap();
        let mut ea = Series2::zero(n);
        ea.set_coeff(0, 1, r(1, 1));
        ea.set_coeff(1, 1, r(1, 1));
        let mut eb = Series2::zero(n);
        eb.set_coeff(2, 0, r(1, 1));
        eb.set_coeff(3, 0, r(1, 1));
        assert_eq!(a, ea);
        assert_eq!(b, eb);

        assert!(matches!(
            time_rescale(&f, &g, &xs(n)),
            Err(AlgebraError::ZeroConstantTimeFactor)
        ));
    }

    #[test]
    fn json_golden_schema() {
        let mut s = Series2::zero(5);
        s.set_coeff(1, 0, r(1, 2));
        s.set_coeff(2, 3, r(-4, 7));
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(
            js,
            r#"{"max_degree":5,"terms":[[1,0,"1/2"],[2,3,"-4/7"]]}"#
        );
        let back: Series2<Rational> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }
}
