//! Property tests for the exact-algebra layer: series ring axioms,
//! substitution functoriality, field-transform invertibility, and the
//! resultant's algebraic identities against an independent gcd oracle.

use allee::algebra::{resultant, time_rescale, vf_transform, Rational, Series2, UniPoly};
use proptest::prelude::*;

const DEG: u32 = 5;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn arb_series() -> impl Strategy<Value = Series2<Rational>> {
    proptest::collection::vec((0u32..=DEG, 0u32..=DEG, arb_rational()), 0..8).prop_map(|terms| {
        let mut s = Series2::zero(DEG);
        for (i, j, c) in terms {
            if i + j <= DEG {
                s.add_to_coeff(i, j, c);
            }
        }
        s
    })
}

/// Series with zero constant term (valid substitution arguments).
fn arb_sub() -> impl Strategy<Value = Series2<Rational>> {
    arb_series().prop_map(|mut s| {
        s.set_coeff(0, 0, Rational::zero());
        s
    })
}

fn arb_poly() -> impl Strategy<Value = UniPoly<Rational>> {
    proptest::collection::vec(arb_rational(), 1..=5)
        .prop_map(|coeffs| UniPoly::new("x", coeffs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
        // commutativity and associativity of both operations, distributivity
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn substitution_is_functorial(
        s in arb_series(),
        u1 in arb_sub(),
        u2 in arb_sub(),
        v1 in arb_sub(),
        v2 in arb_sub(),
    ) {
        // subst(subst(s, u), v) == subst(s, u∘v) within the cutoff
        let inner_x = u1.subst(&v1, &v2).unwrap();
        let inner_y = u2.subst(&v1, &v2).unwrap();
        let lhs = s.subst(&u1, &u2).unwrap().subst(&v1, &v2).unwrap();
        let rhs = s.subst(&inner_x, &inner_y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_transform_roundtrip(
        f in arb_series(),
        g in arb_series(),
        a in 1i64..=4,
        b in -3i64..=3,
        c in -3i64..=3,
        quad in arb_sub(),
    ) {
        // a near-identity substitution with unimodular-ish linear part and a
        // quadratic tail, applied forward; its exact inverse is computed by
        // fixed-point iteration in the test (independent route), and the
        // transform must round-trip exactly.
        let ad = Rational::ratio(a, 1);
        let (bd, cd) = (Rational::ratio(b, 1), Rational::ratio(c, 1));
        // Φ = (a·x + quadratic-part, c·x + y) has invertible linear part
        let mut xs = Series2::var_x(DEG).scale(&ad);
        xs.add_to_coeff(0, 1, bd.clone());
        for (i, j, coef) in quad.terms() {
            if i + j >= 2 {
                xs.add_to_coeff(i, j, coef.clone());
            }
        }
        let mut ys = Series2::var_x(DEG).scale(&cd);
        ys.add_to_coeff(0, 1, Rational::one());
        let det = &ad - &(&bd * &cd);
        prop_assume!(!det.is_zero());

        let (nf, ng) = vf_transform(&f, &g, &xs, &ys).unwrap();

        // The return trip runs one degree higher: the inverse map is itself
        // a truncation, and differentiating it inside the transform costs a
        // degree. The substitution map is an exact polynomial, so widening
        // it is lossless.
        let wider = DEG + 1;
        let xs_w = xs.widened(wider);
        let ys_w = ys.widened(wider);
        let (ix, iy) = invert_map(&xs_w, &ys_w);
        // sanity: Φ∘Φ⁻¹ = id
        prop_assert_eq!(xs_w.subst(&ix, &iy).unwrap(), Series2::var_x(wider));
        prop_assert_eq!(ys_w.subst(&ix, &iy).unwrap(), Series2::var_y(wider));

        let (bf, bg) = vf_transform(&nf.widened(wider), &ng.widened(wider), &ix, &iy).unwrap();
        prop_assert_eq!(bf.truncated(DEG), f);
        prop_assert_eq!(bg.truncated(DEG), g);
    }

    #[test]
    fn time_rescale_by_unit_is_invertible(f in arb_series(), g in arb_series(), u in arb_sub()) {
        let factor = Series2::constant(Rational::int(1), DEG).add(&u).unwrap();
        let (rf, rg) = time_rescale(&f, &g, &factor).unwrap();
        let inv = factor.inv_unit().unwrap();
        let (bf, bg) = time_rescale(&rf, &rg, &inv).unwrap();
        prop_assert_eq!(bf, f);
        prop_assert_eq!(bg, g);
    }

    #[test]
    fn resultant_swap_sign_and_multiplicativity(
        f in arb_poly(),
        g in arb_poly(),
        h in arb_poly(),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let df = f.degree().unwrap();
        let dg = g.degree().unwrap();
        prop_assume!(df + dg > 0);
        prop_assume!(df >= 1); // keeps every pairing below away from the
                               // constant-constant degenerate case
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        let sign = if (df * dg) % 2 == 0 {
            Rational::int(1)
        } else {
            Rational::int(-1)
        };
        prop_assert_eq!(&fg, &(&gf * &sign));

        let gh = g.mul(&h);
        prop_assume!(df >= 1 || gh.degree().unwrap() >= 1);
        let f_gh = resultant(&f, &gh).unwrap();
        let f_h = resultant(&f, &h).unwrap();
        prop_assert_eq!(f_gh, &fg * &f_h);
    }

    #[test]
    fn resultant_zero_iff_common_factor(f in arb_poly(), g in arb_poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assume!(f.degree().unwrap() >= 1 || g.degree().unwrap() >= 1);
        let res = resultant(&f, &g).unwrap();
        let gcd = f.gcd(&g);
        // independent Euclidean-gcd oracle
        prop_assert_eq!(res.is_zero(), gcd.degree().unwrap_or(0) >= 1);
    }
}

/// Exact inverse of a near-identity-with-linear-part map by degree-by-degree
/// fixed-point iteration (test-only independent construction).
fn invert_map(
    xs: &Series2<Rational>,
    ys: &Series2<Rational>,
) -> (Series2<Rational>, Series2<Rational>) {
    let deg = xs.max_degree();
    let a = xs.coeff(1, 0);
    let b = xs.coeff(0, 1);
    let c = ys.coeff(1, 0);
    let d = ys.coeff(0, 1);
    let det = &(&a * &d) - &(&b * &c);
    // linear inverse
    let li_x = {
        let mut s = Series2::var_x(deg).scale(&(&d / &det));
        s.add_to_coeff(0, 1, &(-&b) / &det);
        s
    };
    let li_y = {
        let neg_c = -&c;
        let mut s = Series2::var_x(deg).scale(&(&neg_c / &det));
        s.add_to_coeff(0, 1, &a / &det);
        s
    };
    // higher-order parts of the forward map
    let mut hx = xs.clone();
    hx.set_coeff(1, 0, Rational::zero());
    hx.set_coeff(0, 1, Rational::zero());
    let mut hy = ys.clone();
    hy.set_coeff(1, 0, Rational::zero());
    hy.set_coeff(0, 1, Rational::zero());

    let mut ix = li_x.clone();
    let mut iy = li_y.clone();
    for _ in 0..=deg {
        // inv = L⁻¹ ∘ (id − H ∘ inv)
        let hx_i = hx.subst(&ix, &iy).unwrap();
        let hy_i = hy.subst(&ix, &iy).unwrap();
        let rx = Series2::var_x(deg).sub(&hx_i).unwrap();
        let ry = Series2::var_y(deg).sub(&hy_i).unwrap();
        ix = li_x.subst(&rx, &ry).unwrap();
        iy = li_y.subst(&rx, &ry).unwrap();
    }
    (ix, iy)
}
