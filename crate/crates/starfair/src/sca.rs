//! Convex/concave bounds for bilinear products.
//!
//! Both bounds come from `ab = (a+b)^2/2 - a^2/2 - b^2/2` with first-order
//! Taylor expansions of the convex squares at an expansion point `(a0, b0)`:
//! expanding the joint square gives the concave minorant `f_lb`, expanding the
//! separate squares gives the convex majorant `f_ub`. Both touch `ab` exactly
//! at the expansion point, which is what makes the successive approximation
//! monotone.

use crate::scalar::Float;

/// Convex upper bound on `a * b`, tight at `(a0, b0)`.
///
/// `f_ub(a,b,a0,b0) = (a+b)^2/2 - a0*a + a0^2/2 - b0*b + b0^2/2`.
pub fn f_ub<T: Float>(a: T, b: T, a0: T, b0: T) -> T {
    let half = T::cast(0.5);
    let s = a + b;
    half * s * s - a0 * a + half * a0 * a0 - b0 * b + half * b0 * b0
}

/// Concave lower bound on `a * b`, tight at `(a0, b0)`.
///
/// `f_lb(a,b,a0,b0) = (a0+b0)^2/2 - a^2/2 - b^2/2 + (a0+b0)(a-a0+b-b0)`.
pub fn f_lb<T: Float>(a: T, b: T, a0: T, b0: T) -> T {
    let half = T::cast(0.5);
    let s0 = a0 + b0;
    half * s0 * s0 - half * a * a - half * b * b + s0 * (a - a0 + b - b0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn touch_point_equalities() {
        assert_eq!(f_lb(1.0, 2.0, 1.0, 2.0), 2.0);
        assert_eq!(f_ub(2.0, 2.0, 2.0, 2.0), 4.0);
    }

    #[test]
    fn specific_values() {
        // f_ub(2,3,1,1) = 12.5 - 2 + 0.5 - 3 + 0.5 = 8.5 >= 6
        assert!((f_ub(2.0, 3.0, 1.0, 1.0) - 8.5).abs() < 1e-12);
        // f_lb(2,2,1,1) = 2 - 2 - 2 + 2*2 = 2 <= 4
        assert!((f_lb(2.0, 2.0, 1.0, 1.0) - 2.0).abs() < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn sandwich_holds(
            a in -50.0f64..50.0,
            b in -50.0f64..50.0,
            a0 in -50.0f64..50.0,
            b0 in -50.0f64..50.0,
        ) {
            let slack = 1e-9 * (1.0 + a.abs() + b.abs() + a0.abs() + b0.abs()).powi(2);
            prop_assert!(f_lb(a, b, a0, b0) <= a * b + slack);
            prop_assert!(a * b <= f_ub(a, b, a0, b0) + slack);
        }

        #[test]
        fn tight_at_expansion(a0 in -50.0f64..50.0, b0 in -50.0f64..50.0) {
            let scale = 1.0 + a0.abs().max(b0.abs()).powi(2);
            prop_assert!((f_ub(a0, b0, a0, b0) - a0 * b0).abs() <= 1e-9 * scale);
            prop_assert!((f_lb(a0, b0, a0, b0) - a0 * b0).abs() <= 1e-9 * scale);
        }
    }
}
