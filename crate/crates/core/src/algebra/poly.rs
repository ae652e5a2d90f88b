//! Dense univariate polynomials over a coefficient field, with Sylvester
//! resultants computed by fraction-free elimination.

use std::fmt;

use super::series::Coeff;
use super::AlgebraError;

/// Univariate polynomial, coefficients ascending by degree, leading
/// coefficient nonzero unless the polynomial is identically zero.
#[derive(Clone, PartialEq)]
pub struct UniPoly<T: Coeff> {
    var: String,
    coeffs: Vec<T>,
}

impl<T: Coeff> UniPoly<T> {
    pub fn new(var: impl Into<String>, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            var: var.into(),
            coeffs,
        }
    }

    pub fn zero(var: impl Into<String>) -> Self {
        UniPoly {
            var: var.into(),
            coeffs: Vec::new(),
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::new(self.var.clone(), out)
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(
            self.var.clone(),
            self.coeffs.iter().map(|c| -(c.clone())).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(self.var.clone(), out)
    }

    pub fn scale(&self, k: &T) -> Self {
        UniPoly::new(
            self.var.clone(),
            self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        )
    }

    /// Euclidean division: `(quotient, remainder)`. Panics on zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(self.var.clone()), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![T::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (idx, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + idx] = rem[k + idx].clone() - c.clone() * dc.clone();
            }
        }
        (
            UniPoly::new(self.var.clone(), quot),
            UniPoly::new(self.var.clone(), rem[..dd].to_vec()),
        )
    }

    /// Monic Euclidean gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_zero() => {
                let inv = T::one() / l.clone();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(var: impl Into<String>, points: &[(T, T)]) -> Self {
        let var = var.into();
        let mut acc = UniPoly::zero(var.clone());
        for (k, (xk, yk)) in points.iter().enumerate() {
            let mut basis = UniPoly::new(var.clone(), vec![T::one()]);
            let mut denom = T::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if j == k {
                    continue;
                }
                basis = basis.mul(&UniPoly::new(var.clone(), vec![-(xj.clone()), T::one()]));
                denom = denom * (xk.clone() - xj.clone());
            }
            acc = acc.add(&basis.scale(&(yk.clone() / denom)));
        }
        acc
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coeff> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({:?})", c)?,
                1 => write!(f, "({:?})*{}", c, self.var)?,
                _ => write!(f, "({:?})*{}^{}", c, self.var, k)?,
            }
        }
        Ok(())
    }
}

/// Determinant by fraction-free (Bareiss) elimination; exact over a field.
pub fn determinant<T: Coeff>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev.clone();
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n): (m+n)² with the
/// usual staggered coefficient rows, descending powers.
pub fn sylvester_matrix<T: Coeff>(f: &UniPoly<T>, g: &UniPoly<T>) -> Vec<Vec<T>> {
    let m = f.degree().expect("nonzero polynomial");
    let n = g.degree().expect("nonzero polynomial");
    let size = m + n;
    let mut mat = vec![vec![T::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    mat
}

/// Sylvester resultant of `f` and `g` with respect to their shared variable.
/// Zero iff the polynomials share a root over the algebraic closure.
pub fn resultant<T: Coeff>(f: &UniPoly<T>, g: &UniPoly<T>) -> Result<T, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    if m == 0 && n == 0 {
        return Err(AlgebraError::ResultantOfConstants);
    }
    if m == 0 {
        // Res(c, g) = c^deg(g)
        let mut acc = T::one();
        for _ in 0..n {
            acc = acc * f.coeff(0).clone();
        }
        return Ok(acc);
    }
    if n == 0 {
        let mut acc = T::one();
        for _ in 0..m {
            acc = acc * g.coeff(0).clone();
        }
        return Ok(acc);
    }
    Ok(determinant(sylvester_matrix(f, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn p(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::new("x", coeffs.iter().map(|&c| r(c, 1)).collect())
    }

    #[test]
    fn resultant_shared_root_is_zero() {
        let f = p(&[-1, 0, 1]); // x² − 1
        assert!(resultant(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn resultant_two_by_two() {
        // Res(x−1, x+1) = 2
        let f = p(&[-1, 1]);
        let g = p(&[1, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), r(2, 1));
    }

    #[test]
    fn resultant_three_by_three() {
        // Res(x²−1, x−2): f evaluated at the root of g, times lc(g)^deg f = 1:
        // (4−1) = 3; cross-checked against the expanded 3×3 Sylvester matrix
        // [[1,0,-1],[1,-2,0],[0,1,-2]].
        let f = p(&[-1, 0, 1]);
        let g = p(&[-2, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), r(3, 1));
        let mat = sylvester_matrix(&f, &g);
        assert_eq!(determinant(mat), r(3, 1));
    }

    #[test]
    fn resultant_rejects_degenerate_inputs() {
        let c = p(&[5]);
        assert!(matches!(
            resultant(&c, &c),
            Err(AlgebraError::ResultantOfConstants)
        ));
        let z = UniPoly::<Rational>::zero("x");
        assert!(matches!(
            resultant(&z, &c),
            Err(AlgebraError::ZeroPolynomial)
        ));
    }

    #[test]
    fn div_rem_and_gcd() {
        let f = p(&[-1, 0, 1]); // (x−1)(x+1)
        let g = p(&[-1, 1]);
        let (q, rem) = f.div_rem(&g);
        assert!(rem.is_zero());
        assert_eq!(q, p(&[1, 1]));
        let h = f.gcd(&p(&[1, 1]));
        assert_eq!(h, p(&[1, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[2, -3, 0, 5]);
        let pts: Vec<(Rational, Rational)> = (0..6)
            .map(|k| {
                let x = r(k - 2, 1);
                let y = f.eval(&x);
                (x, y)
            })
            .collect();
        let g = UniPoly::interpolate("x", &pts);
        assert_eq!(f, g);
    }
}
