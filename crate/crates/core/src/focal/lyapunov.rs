//! Focal (Lyapunov) values of a planar system with unit-rotation linear part
//! by the formal-series method.
//!
//! For u̇ = v + P(u,v), v̇ = −u + Q(u,v) (P, Q without constant or linear
//! terms) we build a formal first integral F = (u²+v²)/2 + Σ_{k≥3} F_k with
//! homogeneous F_k, solving the cohomological equation degree by degree. At
//! odd degrees the rotation operator L[F] = v·F_u − u·F_v is invertible; at
//! even degree 2m+2 the obstruction along (u²+v²)^{m+1} is the m-th focal
//! value V_m:
//!
//! ```text
//! Ḟ = Σ_m V_m (u²+v²)^{m+1} + O(high degree).
//! ```
//!
//! The gauge freedom (F_k defined modulo the kernel at even degrees) is fixed
//! by zeroing the u^k coefficient, which makes the computed sequence fully
//! deterministic.

use crate::algebra::{Coeff, Series2};

/// First `max_order` focal values of u̇ = v + p, v̇ = −u + q, where `p`, `q`
/// hold only the nonlinear terms.
pub fn lyapunov_values<T: Coeff>(p: &Series2<T>, q: &Series2<T>, max_order: usize) -> Vec<T> {
    let cutoff = 2 * max_order as u32 + 2;
    let p = widen(p, cutoff);
    let q = widen(q, cutoff);
    debug_assert!(p.coeff(0, 0).is_zero() && p.coeff(1, 0).is_zero() && p.coeff(0, 1).is_zero());
    debug_assert!(q.coeff(0, 0).is_zero() && q.coeff(1, 0).is_zero() && q.coeff(0, 1).is_zero());

    let f_rhs = Series2::var_y(cutoff).add(&p).unwrap();
    let mut g_rhs = Series2::var_x(cutoff).negate();
    g_rhs = g_rhs.add(&q).unwrap();

    // F starts as (u² + v²)/2
    let half = T::from_ratio(1, 2);
    let mut big_f = Series2::zero(cutoff);
    big_f.set_coeff(2, 0, half.clone());
    big_f.set_coeff(0, 2, half);

    let mut values = Vec::with_capacity(max_order);
    for k in 3..=cutoff {
        // Residual of Ḟ at homogeneous degree k, from the parts of F fixed so far.
        let fdot = (&(&big_f.dx() * &f_rhs)) + (&(&big_f.dy() * &g_rhs));
        let residual: Vec<T> = (0..=k).map(|i| fdot.coeff(k - i, i)).collect();

        if k % 2 == 1 {
            let fk = solve_homological(k, &residual, None).expect("odd-degree solve");
            add_homogeneous(&mut big_f, k, &fk);
        } else {
            let m = (k - 2) / 2; // focal index: degree 2m+2
            let kernel = binomial_column(k);
            let (fk, v) =
                split_last(solve_homological(k, &residual, Some(&kernel)).expect("even solve"));
            add_homogeneous(&mut big_f, k, &fk);
            if m >= 1 {
                values.push(v);
                if values.len() == max_order {
                    break;
                }
            }
        }
    }
    values
}

fn widen<T: Coeff>(s: &Series2<T>, cutoff: u32) -> Series2<T> {
    if s.max_degree() >= cutoff {
        s.truncated(cutoff)
    } else {
        s.widened(cutoff)
    }
}

fn add_homogeneous<T: Coeff>(f: &mut Series2<T>, k: u32, coeffs: &[T]) {
    for (i, c) in coeffs.iter().enumerate() {
        f.add_to_coeff(k - i as u32, i as u32, c.clone());
    }
}

/// Coefficients of (u²+v²)^{k/2} on the basis u^{k−i} v^i (zero on odd i).
fn binomial_column<T: Coeff>(k: u32) -> Vec<T> {
    let half = (k / 2) as i64;
    let mut col = vec![T::zero(); k as usize + 1];
    let mut c: i64 = 1;
    for j in 0..=half {
        col[(2 * j) as usize] = T::from_ratio(c, 1);
        // next binomial C(half, j+1)
        c = c * (half - j) / (j + 1);
    }
    col
}

/// Solves L[F_k] = −residual (+ V·kernel when a kernel column is supplied),
/// on the homogeneous basis u^{k−i} v^i, i = 0..k. The matrix of
/// L[u^a v^b] = a·u^{a−1}v^{b+1} − b·u^{a+1}v^{b−1} is assembled by columns;
/// an even-degree solve appends the obstruction column and a gauge row
/// pinning the u^k coefficient of F_k to zero.
fn solve_homological<T: Coeff>(
    k: u32,
    residual: &[T],
    kernel: Option<&Vec<T>>,
) -> Option<Vec<T>> {
    let n = k as usize + 1;
    let cols = n + usize::from(kernel.is_some());
    let rows = n + usize::from(kernel.is_some());
    let mut mat = vec![vec![T::zero(); cols]; rows];
    for i in 0..n {
        // column i: the image of u^{k−i} v^i under L
        let a = k - i as u32;
        let b = i as u32;
        if a > 0 {
            mat[i + 1][i] = mat[i + 1][i].clone() + T::from_ratio(a as i64, 1);
        }
        if b > 0 {
            mat[i - 1][i] = mat[i - 1][i].clone() - T::from_ratio(b as i64, 1);
        }
    }
    let mut rhs: Vec<T> = residual.iter().map(|r| -(r.clone())).collect();
    if let Some(kcol) = kernel {
        for (row, kc) in mat.iter_mut().zip(kcol) {
            row[n] = -(kc.clone());
        }
        // gauge: coefficient of u^k in F_k vanishes
        mat[n][0] = T::one();
        rhs.push(T::zero());
    }
    gaussian_solve(mat, rhs)
}

/// Dense exact Gaussian elimination with magnitude-guided pivoting (the
/// magnitude guide keeps the same code path stable for the float lane; for
/// exact fields any nonzero pivot is fine).
#[allow(clippy::needless_range_loop)] // the elimination indexes two rows at once
pub(crate) fn gaussian_solve<T: Coeff>(mut m: Vec<Vec<T>>, mut rhs: Vec<T>) -> Option<Vec<T>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| {
                m[a][col]
                    .to_f64_approx()
                    .abs()
                    .total_cmp(&m[b][col].to_f64_approx().abs())
            })?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = T::one() / m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() * inv.clone();
            for c in col..n {
                m[r][c] = m[r][c].clone() - f.clone() * m[col][c].clone();
            }
            rhs[r] = rhs[r].clone() - f * rhs[col].clone();
        }
    }
    let mut x = vec![T::zero(); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row].clone();
        for c in row + 1..n {
            acc = acc - m[row][c].clone() * x[c].clone();
        }
        x[row] = acc / m[row][row].clone();
    }
    Some(x)
}

fn split_last<T: Coeff>(mut v: Vec<T>) -> (Vec<T>, T) {
    let last = v.pop().expect("nonempty solution");
    (v, last)
}
