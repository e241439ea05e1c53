//! Two-point distortion lower bounds for the harmonic family F(alpha).
//!
//! For f = h + conj(g) with h convex of order alpha and dilatation
//! g'(z) = e^{i theta} z h'(z), every pair of points on |z| = r satisfies
//!
//! |f(r e^{it}) - f(r e^{i psi})| / |r e^{it} - r e^{i psi}| >= A(r, alpha)
//!
//! where A(r, alpha) = (1 - r^2) L(r, alpha)^2 / r^2 and L is the growth
//! lower bound
//!
//! L(r, alpha) = integral_0^r (1 - rho) (1 + rho)^(2 alpha - 2) d rho.
//!
//! The closed form of L has removable singularities at alpha = 0 and
//! alpha = 1/2; those orders get their exact branches, and the general branch
//! is evaluated through `expm1`/`ln1p` so that nothing cancels as alpha
//! approaches them.

use crate::domain::{AlphaBranch, AlphaOrder, Radius};
use crate::error::Result;
use crate::scalar::{powm1_ratio, real, Real};

/// Growth lower bound L(r, alpha) for the analytic part, alpha in [0, 1).
///
/// Piecewise closed form:
/// - alpha = 0:    2r/(1+r) - ln(1+r)
/// - alpha = 1/2:  2 ln(1+r) - r
/// - otherwise:    2 E(2 alpha - 1) - E(2 alpha), E(g) = ((1+r)^g - 1)/g
pub fn growth_lower<R: Real>(r: Radius<R>, alpha: AlphaOrder<R>) -> Result<R> {
    alpha.require_nonnegative()?;
    let rv = r.value();
    let two = real::<R>(2.0);
    let ln1p = rv.ln_1p();
    Ok(match alpha.branch() {
        AlphaBranch::Zero => two * rv / (R::one() + rv) - ln1p,
        AlphaBranch::Half => two * ln1p - rv,
        AlphaBranch::General => {
            let beta = two * alpha.value() - R::one();
            two * powm1_ratio(beta, ln1p) - powm1_ratio(beta + R::one(), ln1p)
        }
        AlphaBranch::MinusHalf => unreachable!("rejected by require_nonnegative"),
    })
}

/// Two-point distortion bound A(r, alpha) = (1 - r^2) L(r, alpha)^2 / r^2.
///
/// Tends to 1 as r -> 0 (L ~ r there) and to 0 as r -> 1.
pub fn two_point_bound<R: Real>(r: Radius<R>, alpha: AlphaOrder<R>) -> Result<R> {
    let rv = r.value();
    let l = growth_lower(r, alpha)?;
    let q = l / rv;
    Ok((R::one() - rv * rv) * q * q)
}

/// Lower bound (1+r)^(-2(1-alpha)) on |h'| for h convex of order alpha.
pub fn derivative_lower<R: Real>(r: Radius<R>, alpha: AlphaOrder<R>) -> Result<R> {
    alpha.require_nonnegative()?;
    let two = real::<R>(2.0);
    let exponent = -two * (R::one() - alpha.value());
    Ok((exponent * r.value().ln_1p()).exp())
}

/// Absolute tolerance of the reference integrator.
pub const QUADRATURE_TOL: f64 = 1e-13;

/// Reference evaluation of L(r, alpha) by adaptive Simpson quadrature of the
/// defining integral. Independent of the closed form; used to cross-check it.
pub fn quadrature_growth_lower<R: Real>(r: Radius<R>, alpha: AlphaOrder<R>) -> Result<R> {
    alpha.require_nonnegative()?;
    let two = real::<R>(2.0);
    let exponent = two * alpha.value() - two;
    let integrand = move |rho: R| (R::one() - rho) * (exponent * rho.ln_1p()).exp();
    Ok(adaptive_simpson(
        &integrand,
        R::zero(),
        r.value(),
        real::<R>(QUADRATURE_TOL),
        60,
    ))
}

/// Adaptive Simpson rule with absolute tolerance `tol` and a recursion depth
/// cap. The standard |S2 - S1| <= 15 tol acceptance test with Richardson
/// extrapolation on accept.
fn adaptive_simpson<R: Real, F: Fn(R) -> R>(f: &F, a: R, b: R, tol: R, max_depth: u32) -> R {
    let two = real::<R>(2.0);
    let six = real::<R>(6.0);
    let mid = (a + b) / two;
    let (fa, fm, fb) = (f(a), f(mid), f(b));
    let whole = (b - a) / six * (fa + real::<R>(4.0) * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<R: Real, F: Fn(R) -> R>(
    f: &F,
    a: R,
    b: R,
    fa: R,
    fm: R,
    fb: R,
    whole: R,
    tol: R,
    depth: u32,
) -> R {
    let two = real::<R>(2.0);
    let six = real::<R>(6.0);
    let four = real::<R>(4.0);
    let mid = (a + b) / two;
    let lm = (a + mid) / two;
    let rm = (mid + b) / two;
    let (flm, frm) = (f(lm), f(rm));
    let left = (mid - a) / six * (fa + four * flm + fm);
    let right = (b - mid) / six * (fm + four * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= real::<R>(15.0) * tol {
        return left + right + delta / real::<R>(15.0);
    }
    let half_tol = tol / two;
    simpson_step(f, a, mid, fa, flm, fm, left, half_tol, depth - 1)
        + simpson_step(f, mid, b, fm, frm, fb, right, half_tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::AlphaOrder;

    fn a(v: f64) -> AlphaOrder<f64> {
        AlphaOrder::new(v).unwrap()
    }

    fn r(v: f64) -> Radius<f64> {
        Radius::new(v).unwrap()
    }

    #[test]
    fn growth_lower_vanishes_at_origin() {
        assert!(growth_lower(r(1e-8), a(0.3)).unwrap() < 1e-7);
    }

    #[test]
    fn growth_lower_special_branches() {
        let half = growth_lower(r(0.5), a(0.5)).unwrap();
        assert!((half - (2.0 * 1.5_f64.ln() - 0.5)).abs() < 1e-15);
        let zero = growth_lower(r(0.5), a(0.0)).unwrap();
        assert!((zero - (2.0 * 0.5 / 1.5 - 1.5_f64.ln())).abs() < 1e-15);
    }

    #[test]
    fn growth_lower_rejects_negative_alpha() {
        assert!(growth_lower(r(0.5), a(-0.5)).is_err());
        assert!(growth_lower(r(0.5), a(-0.25)).is_err());
    }

    #[test]
    fn two_point_bound_limits() {
        // A -> 1 as r -> 0 (L ~ r - (3-2 alpha) r^2 / 2 + ...).
        let near_zero = two_point_bound(r(1e-6), a(0.25)).unwrap();
        assert!((near_zero - 1.0).abs() < 1e-4);
        // A -> 0 as r -> 1 through the (1 - r^2) factor.
        assert!(two_point_bound(r(1.0 - 1e-8), a(0.5)).unwrap() < 1e-7);
    }

    #[test]
    fn two_point_bound_composes_growth_lower() {
        let l = 2.0 * 1.5_f64.ln() - 0.5;
        let expected = 0.75 * l * l / 0.25;
        let got = two_point_bound(r(0.5), a(0.5)).unwrap();
        assert!((got - expected).abs() < 1e-14);
    }

    #[test]
    fn derivative_lower_values() {
        // Normalization: bound -> 1 as r -> 0.
        assert_eq!(derivative_lower(r(1e-300), a(0.7)).unwrap(), 1.0);
        // alpha = 0 at the rim: (1+1)^-2 = 1/4.
        let rim = derivative_lower(r(1.0 - 1e-12), a(0.0)).unwrap();
        assert!((rim - 0.25).abs() < 1e-11);
        // alpha = 3/4, r = 1/2: 1.5^(-1/2).
        let v = derivative_lower(r(0.5), a(0.75)).unwrap();
        assert!((v - 1.5_f64.powf(-0.5)).abs() < 1e-15);
    }

    #[test]
    fn quadrature_matches_closed_form_spot_checks() {
        let q = quadrature_growth_lower(r(0.9), a(0.0)).unwrap();
        assert!((q - (2.0 * 0.9 / 1.9 - 1.9_f64.ln())).abs() < 1e-12);
        let q = quadrature_growth_lower(r(0.5), a(0.5)).unwrap();
        assert!((q - (2.0 * 1.5_f64.ln() - 0.5)).abs() < 1e-12);
    }

    #[test]
    fn quadrature_probes_branch_switch() {
        // Just outside BRANCH_EPS of 1/2: general branch, no cancellation.
        let alpha = a(0.49999999);
        let closed = growth_lower(r(0.7), alpha).unwrap();
        let quad = quadrature_growth_lower(r(0.7), alpha).unwrap();
        assert!((closed - quad).abs() < 1e-9);
    }
}
