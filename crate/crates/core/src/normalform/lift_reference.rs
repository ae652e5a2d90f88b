//! Closed-form coefficients of the second-order lift ((u,v) = (X, Ẋ)) for a
//! field whose first component is linear in Y with the monomial support
//!
//! ```text
//! Ẋ = a00 + a10·X + … + a50·X⁵ + a01·Y + a11·XY,
//! Ẏ = Σ_{i≤5, j≤2} bij·X^i Y^j   (the b-support of the perturbed model).
//! ```
//!
//! These formulas are the reference oracle for [`super::derivative_lift`]:
//! instantiated at random rational coefficient sets, each must equal the
//! mechanized coefficient exactly.

use crate::algebra::{Rational, Series2};

/// The fifteen second-component coefficients (i, j, value) of the lifted
/// field, computed from closed forms.
pub fn lift_reference_coefficients(
    f: &Series2<Rational>,
    g: &Series2<Rational>,
) -> Vec<(u32, u32, Rational)> {
    let a = |i: u32, j: u32| f.coeff(i, j);
    let b = |i: u32, j: u32| g.coeff(i, j);
    let a00 = a(0, 0);
    let a10 = a(1, 0);
    let a20 = a(2, 0);
    let a30 = a(3, 0);
    let a40 = a(4, 0);
    let a50 = a(5, 0);
    let a01 = a(0, 1);
    let a11 = a(1, 1);
    let b00 = b(0, 0);
    let b10 = b(1, 0);
    let b20 = b(2, 0);
    let b30 = b(3, 0);
    let b40 = b(4, 0);
    let b50 = b(5, 0);
    let b01 = b(0, 1);
    let b11 = b(1, 1);
    let b21 = b(2, 1);
    let b31 = b(3, 1);
    let b41 = b(4, 1);
    let b02 = b(0, 2);
    let b12 = b(1, 2);
    let b22 = b(2, 2);
    let b32 = b(3, 2);

    assert!(!a01.is_zero(), "lift reference needs a01 ≠ 0");
    let i2 = Rational::int(2);
    let i3 = Rational::int(3);
    let i4 = Rational::int(4);
    let i5 = Rational::int(5);
    let q = |k: i32| a01.pow(k);

    let c00 = &(&(&a01 * &b00) - &(&a00 * &b01)) + &(&(&(&a00 * &a00) * &b02) / &a01);

    let c01 = &(&a10 + &b01) - &(&(&a00 * &(&a11 + &(&i2 * &b02))) / &a01);

    let c10 = &(&(&(&(&a11 * &b00) - &(&a10 * &b01)) + &(&a01 * &b10)) - &(&a00 * &b11))
        + &(&(&(&a00 / &a01) * &(&(&i2 * &(&a10 * &b02)) + &(&a00 * &b12)))
            - &(&(&(&(&a00 * &a00) * &a11) * &b02) / &q(2)));

    let c20 = {
        let t1 = &(&(&(&(&a11 * &b10) + &(&a01 * &b20)) - &(&a20 * &b01)) - &(&a10 * &b11))
            - &(&a00 * &b21);
        let t2 = -&(&(&(&a00 * &a11) * &(&(&i2 * &(&a10 * &b02)) + &(&a00 * &b12))) / &q(2));
        let t3 = &(&(&b02 * &(&(&a10 * &a10) + &(&i2 * &(&a00 * &a20))))
            + &(&a00 * &(&(&i2 * &(&a10 * &b12)) + &(&a00 * &b22))))
            / &a01;
        let t4 = &(&(&(&a00 * &a00) * &(&a11 * &a11)) * &b02) / &q(3);
        &(&(&t1 + &t2) + &t3) + &t4
    };

    let c11 = &(&(&(&i2 * &a20) + &b11)
        - &(&(&(&a10 * &(&a11 + &(&i2 * &b02))) + &(&i2 * &(&a00 * &b12))) / &a01))
        + &(&(&(&a00 * &a11) * &(&a11 + &(&i2 * &b02))) / &q(2));

    let c02 = &(&a11 + &b02) / &a01;

    let c32 = &(&(&(&b32 / &a01) - &(&(&a11 * &b22) / &q(2)))
        + &(&(&(&a11 * &a11) * &b12) / &q(3)))
        - &(&(&(&(&a11 * &a11) * &a11) * &(&a11 + &b02)) / &q(4));

    let c30 = {
        let t1 = &(&(&(&(&(&a11 * &b20) + &(&a01 * &b30)) - &(&a30 * &b01)) - &(&a20 * &b11))
            - &(&a10 * &b21))
            - &(&a00 * &b31);
        let t2 = -&(&(&(&(&a00 * &a00) * &(&(&a11 * &a11) * &a11)) * &b02) / &q(4));
        let t3 = &(&(&(&i2 * &(&b02 * &(&(&a10 * &a20) + &(&a00 * &a30))))
            + &(&b12 * &(&(&a10 * &a10) + &(&i2 * &(&a00 * &a20)))))
            + &(&a00 * &(&(&i2 * &(&a10 * &b22)) + &(&a00 * &b32))))
            / &a01;
        let t4 = -&(&(&(&(&a11 * &a10) * &(&(&a10 * &b02) + &(&i2 * &(&a00 * &b12))))
            + &(&(&a11 * &a00) * &(&(&i2 * &(&a20 * &b02)) + &(&a00 * &b22))))
            / &q(2));
        let t5 = &(&(&a00 * &(&a11 * &a11)) * &(&(&i2 * &(&a10 * &b02)) + &(&a00 * &b12)))
            / &q(3);
        &(&(&(&t1 + &t2) + &t3) + &t4) + &t5
    };

    let c22 = &(&(&b22 / &a01) - &(&(&a11 * &b12) / &q(2)))
        + &(&(&(&a11 * &a11) * &(&a11 + &b02)) / &q(3));

    let c21 = {
        let t1 = &(&(&i3 * &a30) + &b21)
            - &(&(&(&a20 * &(&a11 + &(&i2 * &b02)))
                + &(&i2 * &(&(&a10 * &b12) + &(&a00 * &b22))))
                / &a01);
        let t2 = -&(&(&(&a00 * &(&a11 * &a11)) * &(&a11 + &(&i2 * &b02))) / &q(3));
        let t3 = &(&(&(&a11 * &a10) * &(&a11 + &(&i2 * &b02)))
            + &(&i2 * &(&(&a11 * &a00) * &b12)))
            / &q(2);
        &(&t1 + &t2) + &t3
    };

    let c12 = &(&b12 / &a01) - &(&(&a11 * &(&a11 + &b02)) / &q(2));

    let c31 = {
        let t1 = &(&(&i4 * &a40) + &b31)
            - &(&(&(&a30 * &(&a11 + &(&i2 * &b02)))
                + &(&i2 * &(&(&(&a20 * &b12) + &(&a10 * &b22)) + &(&a00 * &b32))))
                / &a01);
        let t2 = &(&(&a00 * &(&(&a11 * &a11) * &a11)) * &(&a11 + &(&i2 * &b02))) / &q(4);
        let t3 = &(&(&(&a11 * &a20) * &(&a11 + &(&i2 * &b02)))
            + &(&(&i2 * &a11) * &(&(&a10 * &b12) + &(&a00 * &b22))))
            / &q(2);
        let t4 = -&(&(&(&(&a11 * &a11) * &a10) * &(&a11 + &(&i2 * &b02))
            .clone())
            .clone()
            / &q(3));
        let t4b = -&(&(&(&i2 * &(&(&a11 * &a11) * &a00)) * &b12) / &q(3));
        &(&(&(&t1 + &t2) + &t3) + &t4) + &t4b
    };

    let c40 = {
        let t1 = &(&(&(&(&(&(&a11 * &b30) + &(&a01 * &b40)) - &(&a40 * &b01))
            - &(&a30 * &b11))
            - &(&a20 * &b21))
            - &(&a10 * &b31))
            - &(&a00 * &b41);
        let t2 = &(&(&(&a00 * &a00) * &a11.pow(4)) * &b02) / &q(5);
        let t3 = &(&(&(&b02 * &(&(&a20 * &a20) + &(&i2 * &(&a10 * &a30))))
            + &(&a10 * &(&(&i2 * &(&a20 * &b12)) + &(&a10 * &b22))))
            + &(&(&i2 * &a00)
                * &(&(&(&(&a40 * &b02) + &(&a30 * &b12)) + &(&a20 * &b22)) + &(&a10 * &b32))))
            / &a01;
        let t4 = -&(&(&a11
            * &(&(&(&(&a10 * &a10) * &b12)
                + &(&(&i2 * &a10) * &(&(&a20 * &b02) + &(&a00 * &b22))))
                + &(&a00
                    * &(&(&(&i2 * &(&a30 * &b02)) + &(&i2 * &(&a20 * &b12)))
                        + &(&a00 * &b32)))))
            / &q(2));
        let t5 = &(&(&(&(&a11 * &a11) * &a10) * &(&(&a10 * &b02) + &(&i2 * &(&a00 * &b12))))
            + &(&(&(&a11 * &a11) * &a00) * &(&(&i2 * &(&a20 * &b02)) + &(&a00 * &b22))))
            / &q(3);
        let t6 = -&(&(&(&a00 * &(&(&a11 * &a11) * &a11))
            * &(&(&i2 * &(&a10 * &b02)) + &(&a00 * &b12)))
            / &q(4));
        &(&(&(&(&t1 + &t2) + &t3) + &t4) + &t5) + &t6
    };

    let c50 = {
        let t1 = &(&(&(&(&(&(&a11 * &b40) + &(&a01 * &b50)) - &(&a50 * &b01))
            - &(&a40 * &b11))
            - &(&a30 * &b21))
            - &(&a20 * &b31))
            - &(&a10 * &b41);
        let t2 = -&(&(&(&(&a00 * &a00) * &a11.pow(5)) * &b02) / &q(6));
        let t3 = &(&(&i2 * &b02)
            * &(&(&(&a20 * &a30) + &(&a10 * &a40)) + &(&a00 * &a50)))
            / &a01;
        let t4 = &(&b12
            * &(&(&(&a20 * &a20) + &(&i2 * &(&a10 * &a30))) + &(&i2 * &(&a00 * &a40))))
            / &a01;
        let t5 = &(&(&(&i2 * &b22) * &(&(&a10 * &a20) + &(&a00 * &a30)))
            + &(&b32 * &(&(&a10 * &a10) + &(&i2 * &(&a00 * &a20)))))
            / &a01;
        let t6 = -&(&(&(&a11 * &b02) * &(&(&a20 * &a20) + &(&i2 * &(&a10 * &a30)))) / &q(2));
        let t7 = -&(&(&(&(&(&i2 * &a11) * &b12) * &(&(&a10 * &a20) + &(&a00 * &a30)))
            + &(&(&(&a11 * &b22) * &(&(&a10 * &a10) + &(&i2 * &(&a00 * &a20))))
                + &(&(&(&i2 * &a00) * &a11) * &(&(&a40 * &b02) + &(&a10 * &b32)))))
            / &q(2));
        let t8 = &(&(&a11 * &a11)
            * &(&(&(&i2 * &b02) * &(&(&a10 * &a20) + &(&a00 * &a30)))
                + &(&(&b12 * &(&(&a10 * &a10) + &(&i2 * &(&a00 * &a20))))
                    + &(&a00 * &(&(&i2 * &(&a10 * &b22)) + &(&a00 * &b32))))))
            / &q(3);
        let t9 = -&(&(&(&(&a11 * &a11) * &a11)
            * &(&(&a10 * &(&(&a10 * &b02) + &(&i2 * &(&a00 * &b12))))
                + &(&a00 * &(&(&i2 * &(&a20 * &b02)) + &(&a00 * &b22)))))
            / &q(4));
        let t10 = &(&(&a00 * &a11.pow(4)) * &(&(&i2 * &(&a10 * &b02)) + &(&a00 * &b12)))
            / &q(5);
        &(&(&(&(&(&(&(&(&t1 + &t2) + &t3) + &t4) + &t5) + &t6) + &t7) + &t8) + &t9) + &t10
    };

    let c41 = {
        let t1 = &(&(&i5 * &a50) + &b41)
            - &(&(&(&a40 * &(&a11 + &(&i2 * &b02)))
                + &(&i2 * &(&(&(&a30 * &b12) + &(&a20 * &b22)) + &(&a10 * &b32))))
                / &a01);
        let t2 = &(&(&(&a11 * &a30) * &(&a11 + &(&i2 * &b02)))
            + &(&(&i2 * &a11)
                * &(&(&(&a20 * &b12) + &(&a10 * &b22)) + &(&a00 * &b32))))
            / &q(2);
        let t3 = -&(&(&(&a00 * &a11.pow(4)) * &(&a11 + &(&i2 * &b02))) / &q(5));
        let t4 = -&(&(&(&a11 * &a11)
            * &(&(&a20 * &(&a11 + &(&i2 * &b02)))
                + &(&i2 * &(&(&a10 * &b12) + &(&a00 * &b22)))))
            / &q(3));
        let t5 = &(&(&(&a11 * &a11) * &a11)
            * &(&(&a10 * &(&a11 + &(&i2 * &b02))) + &(&i2 * &(&a00 * &b12))))
            / &q(4);
        &(&(&(&t1 + &t2) + &t3) + &t4) + &t5
    };

    vec![
        (0, 0, c00),
        (1, 0, c10),
        (2, 0, c20),
        (3, 0, c30),
        (4, 0, c40),
        (5, 0, c50),
        (0, 1, c01),
        (1, 1, c11),
        (2, 1, c21),
        (3, 1, c31),
        (4, 1, c41),
        (0, 2, c02),
        (1, 2, c12),
        (2, 2, c22),
        (3, 2, c32),
    ]
}
