//! Sharp coefficient bounds for F(alpha) and the extremal functions that
//! attain them.
//!
//! For f = h + conj(g) in F(alpha) with 0 <= alpha < 1:
//!
//! |a_n| <= A_n(alpha) = (1/n!) prod_{j=2}^n (j - 2 alpha),
//! |b_n| <= (n-1)/(n - 2 alpha) * A_n(alpha),
//!
//! with equality for the extremal f_alpha = h_alpha + conj(g_alpha) whose
//! parts satisfy g' = z h', h'(z) = (1-z)^(2 alpha - 2). Both bounds are
//! positive and the two lists coincide exactly at alpha = 1/2.

use num_complex::Complex;

use crate::domain::{AlphaBranch, AlphaOrder, Radius};
use crate::error::{Error, Result};
use crate::polynomial::HarmonicPolynomial;
use crate::scalar::{as_f64, one_minus_pow_ratio, real, Real};

/// Coefficient bound A_k(alpha) on |a_k|; A_1 = 1.
///
/// Computed by the multiplicative recurrence A_k = A_{k-1} (k - 2 alpha)/k,
/// which neither overflows for large k nor loses more than O(k) ulps. The
/// three special orders take their exact closed values so that downstream
/// identities hold to the last bit.
pub fn bound_analytic<R: Real>(k: u32, alpha: AlphaOrder<R>) -> R {
    assert!(k >= 1, "coefficient index starts at 1");
    let kf = real::<R>(f64::from(k));
    match alpha.branch() {
        AlphaBranch::Zero => R::one(),
        AlphaBranch::Half => R::one() / kf,
        AlphaBranch::MinusHalf => (kf + R::one()) / real::<R>(2.0),
        AlphaBranch::General => {
            let two_alpha = real::<R>(2.0) * alpha.value();
            let mut a = R::one();
            for j in 2..=k {
                let jf = real::<R>(f64::from(j));
                a = (a * (jf - two_alpha)) / jf;
            }
            a
        }
    }
}

/// Coefficient bound (k-1)/(k - 2 alpha) * A_k(alpha) on |b_k|, k >= 2.
pub fn bound_coanalytic<R: Real>(k: u32, alpha: AlphaOrder<R>) -> R {
    assert!(k >= 2, "co-analytic bounds start at k = 2");
    let kf = real::<R>(f64::from(k));
    let two_alpha = real::<R>(2.0) * alpha.value();
    ((kf - R::one()) * bound_analytic(k, alpha)) / (kf - two_alpha)
}

/// Precomputed table of both bound lists for k = 2..=max_index.
#[derive(Debug, Clone)]
pub struct CoefficientBoundTable<R: Real> {
    alpha: AlphaOrder<R>,
    max_index: u32,
    analytic: Vec<R>,
    coanalytic: Vec<R>,
}

impl<R: Real> CoefficientBoundTable<R> {
    pub fn new(alpha: AlphaOrder<R>, max_index: u32) -> Self {
        assert!(max_index >= 2);
        let analytic = (2..=max_index).map(|k| bound_analytic(k, alpha)).collect();
        let coanalytic = (2..=max_index)
            .map(|k| bound_coanalytic(k, alpha))
            .collect();
        CoefficientBoundTable {
            alpha,
            max_index,
            analytic,
            coanalytic,
        }
    }

    pub fn alpha(&self) -> AlphaOrder<R> {
        self.alpha
    }

    pub fn max_index(&self) -> u32 {
        self.max_index
    }

    /// A_k(alpha) for 2 <= k <= max_index.
    pub fn analytic(&self, k: u32) -> R {
        assert!((2..=self.max_index).contains(&k));
        self.analytic[(k - 2) as usize]
    }

    /// The |b_k| bound for 2 <= k <= max_index.
    pub fn coanalytic(&self, k: u32) -> R {
        assert!((2..=self.max_index).contains(&k));
        self.coanalytic[(k - 2) as usize]
    }
}

/// The extremal function f_alpha = h_alpha + conj(g_alpha) attaining every
/// coefficient bound, via the antiderivatives of h' = (1-z)^(2 alpha - 2):
///
/// h = H(2 alpha - 1),  g = H(2 alpha - 1) - H(2 alpha),
/// H(gamma) = (1 - (1-z)^gamma)/gamma  (H(0) = -ln(1-z)).
#[derive(Debug, Clone, Copy)]
pub struct ExtremalFunction<R: Real> {
    alpha: AlphaOrder<R>,
}

impl<R: Real> ExtremalFunction<R> {
    pub fn new(alpha: AlphaOrder<R>) -> Result<Self> {
        alpha.require_nonnegative()?;
        Ok(ExtremalFunction { alpha })
    }

    pub fn alpha(&self) -> AlphaOrder<R> {
        self.alpha
    }

    /// (h_alpha(z), g_alpha(z)) with principal branches, |z| < 1.
    pub fn eval(&self, z: Complex<R>) -> Result<(Complex<R>, Complex<R>)> {
        if z.norm_sqr() >= R::one() {
            return Err(Error::PointOutsideDisk(as_f64(z.norm())));
        }
        let one = Complex::new(R::one(), R::zero());
        let ln_omz = (one - z).ln();
        Ok(match self.alpha.branch() {
            AlphaBranch::Zero => {
                let h = z / (one - z);
                (h, h + ln_omz)
            }
            AlphaBranch::Half => {
                let h = -ln_omz;
                (h, -(z + ln_omz))
            }
            AlphaBranch::General => {
                let beta = real::<R>(2.0) * self.alpha.value() - R::one();
                let h = one_minus_pow_ratio(beta, ln_omz);
                let g = h - one_minus_pow_ratio(beta + R::one(), ln_omz);
                (h, g)
            }
            AlphaBranch::MinusHalf => unreachable!("rejected at construction"),
        })
    }

    /// The harmonic value f_alpha(z) = h_alpha(z) + conj(g_alpha(z)).
    pub fn harmonic_value(&self, z: Complex<R>) -> Result<Complex<R>> {
        let (h, g) = self.eval(z)?;
        Ok(h + g.conj())
    }
}

/// Taylor coefficients (a_1..a_count, b_1..b_count) of the extremal function
/// by discrete Fourier analysis of `samples` equispaced values on the circle
/// |z| = contour_radius.
///
/// Aliasing is bounded by contour_radius^(samples-count)/(1-contour_radius);
/// round-off in the samples is amplified by contour_radius^(-k), so radii in
/// [0.3, 0.7] are the useful range for k up to a few tens.
pub fn extremal_taylor<R: Real>(
    alpha: AlphaOrder<R>,
    count: usize,
    contour_radius: R,
    samples: usize,
) -> Result<(Vec<Complex<R>>, Vec<Complex<R>>)> {
    if samples < 4 * count {
        return Err(Error::InvalidExtraction { count, samples });
    }
    if !(contour_radius > R::zero() && contour_radius < R::one()) {
        return Err(Error::InvalidContourRadius(as_f64(contour_radius)));
    }
    let f = ExtremalFunction::new(alpha)?;
    let n = samples;
    let tau = real::<R>(std::f64::consts::TAU);
    let mut h_vals = Vec::with_capacity(n);
    let mut g_vals = Vec::with_capacity(n);
    for s in 0..n {
        let angle = tau * real::<R>(s as f64) / real::<R>(n as f64);
        let z = Complex::from_polar(contour_radius, angle);
        let (h, g) = f.eval(z)?;
        h_vals.push(h);
        g_vals.push(g);
    }
    let mut a = Vec::with_capacity(count);
    let mut b = Vec::with_capacity(count);
    let mut radius_pow = R::one();
    for k in 1..=count {
        radius_pow = radius_pow * contour_radius;
        // e^{-2 pi i k / n} stepped across the samples.
        let step = Complex::from_polar(
            R::one(),
            -tau * real::<R>(k as f64) / real::<R>(n as f64),
        );
        let mut phase = Complex::new(R::one(), R::zero());
        let mut ha = Complex::new(R::zero(), R::zero());
        let mut ga = Complex::new(R::zero(), R::zero());
        for s in 0..n {
            ha = ha + h_vals[s] * phase;
            ga = ga + g_vals[s] * phase;
            phase = phase * step;
        }
        let scale = real::<R>(n as f64) * radius_pow;
        a.push(ha.unscale(scale));
        b.push(ga.unscale(scale));
    }
    Ok((a, b))
}

/// The section s_{n,m}(f_alpha; theta) as a harmonic polynomial.
///
/// The extremal coefficients are exactly the bounds (real and positive), so
/// the closed-form lists are used directly: a_k = A_k(alpha) for k <= n,
/// b_1 = 0 and b_k = (k-1)/(k-2 alpha) A_k(alpha) for 2 <= k <= m, with the
/// rotation folded into the co-analytic part.
pub fn build_section<R: Real>(
    alpha: AlphaOrder<R>,
    n: u32,
    m: u32,
    theta: R,
) -> Result<HarmonicPolynomial<R>> {
    alpha.require_nonnegative()?;
    if n < 1 || m < 2 {
        return Err(Error::InvalidSectionOrder { n, m });
    }
    let zero = R::zero();
    let analytic: Vec<Complex<R>> = (1..=n)
        .map(|k| Complex::new(bound_analytic(k, alpha), zero))
        .collect();
    let mut coanalytic = Vec::with_capacity(m as usize);
    coanalytic.push(Complex::new(zero, zero));
    for k in 2..=m {
        coanalytic.push(Complex::new(bound_coanalytic(k, alpha), zero));
    }
    HarmonicPolynomial::new(analytic, coanalytic, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::PI;

    fn a(v: f64) -> AlphaOrder<f64> {
        AlphaOrder::new(v).unwrap()
    }

    #[test]
    fn bound_analytic_examples() {
        assert_eq!(bound_analytic(2, a(0.0)), 1.0);
        assert_eq!(bound_analytic(1, a(0.7)), 1.0);
        // Telescoping at alpha = 1/2: (k-1)!/k! = 1/k.
        assert!((bound_analytic(5, a(0.5)) - 0.2).abs() < 1e-16);
        // (1.5 * 2.5)/3! = 0.625.
        assert!((bound_analytic(3, a(0.25)) - 0.625).abs() < 1e-15);
    }

    #[test]
    fn bound_coanalytic_examples() {
        assert!((bound_coanalytic(2, a(0.0)) - 0.5).abs() < 1e-16);
        assert!((bound_coanalytic(5, a(0.5)) - 0.2).abs() < 1e-16);
        // (1/3)*(3/2): the weight feeding the convex-family tails.
        assert!((bound_coanalytic(2, a(-0.5)) - 0.5).abs() < 1e-16);
    }

    #[test]
    fn half_order_lists_coincide() {
        for k in 2..=100 {
            let ba = bound_analytic(k, a(0.5));
            let bc = bound_coanalytic(k, a(0.5));
            assert!((ba - 1.0 / f64::from(k)).abs() < 1e-15 * ba);
            assert_eq!(ba, bc);
        }
    }

    #[test]
    fn zero_order_collapses_to_one() {
        for k in 1..=100 {
            assert_eq!(bound_analytic(k, a(0.0)), 1.0);
        }
    }

    #[test]
    fn minus_half_gives_convex_weights() {
        for k in 2..=60u32 {
            let kf = f64::from(k);
            let ba = bound_analytic(k, a(-0.5));
            assert_eq!(ba, (kf + 1.0) / 2.0);
            assert_eq!(kf * ba, kf * (kf + 1.0) / 2.0);
            let bc = bound_coanalytic(k, a(-0.5));
            assert!((kf * bc - kf * (kf - 1.0) / 2.0).abs() < 1e-12 * kf * kf);
        }
    }

    #[test]
    fn table_matches_pointwise_bounds() {
        let t = CoefficientBoundTable::new(a(0.25), 20);
        for k in 2..=20 {
            assert_eq!(t.analytic(k), bound_analytic(k, a(0.25)));
            assert_eq!(t.coanalytic(k), bound_coanalytic(k, a(0.25)));
        }
    }

    #[test]
    fn extremal_eval_normalization_and_values() {
        let f = ExtremalFunction::new(a(0.5)).unwrap();
        let (h, g) = f.eval(Complex64::new(0.0, 0.0)).unwrap();
        assert_eq!(h, Complex64::new(0.0, 0.0));
        assert_eq!(g, Complex64::new(0.0, 0.0));

        // alpha = 0 at z = 0.5: h = 1, g = 1 + ln(1/2).
        let f0 = ExtremalFunction::new(a(0.0)).unwrap();
        let (h, g) = f0.eval(Complex64::new(0.5, 0.0)).unwrap();
        assert!((h - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((g - Complex64::new(1.0 + 0.5_f64.ln(), 0.0)).norm() < 1e-15);

        // alpha = 1/2 at z = 0.3: h = -ln(0.7), g = -(0.3 + ln 0.7).
        let (h, g) = f.eval(Complex64::new(0.3, 0.0)).unwrap();
        assert!((h - Complex64::new(-0.7_f64.ln(), 0.0)).norm() < 1e-15);
        assert!((g - Complex64::new(-(0.3 + 0.7_f64.ln()), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn extremal_eval_rejects_outside_disk() {
        let f = ExtremalFunction::new(a(0.25)).unwrap();
        assert!(f.eval(Complex64::new(1.0, 0.0)).is_err());
        assert!(f.eval(Complex64::new(0.8, 0.7)).is_err());
    }

    #[test]
    fn general_branch_continuous_at_half() {
        // The stable general branch must agree with the exact alpha = 1/2
        // branch across the classification boundary.
        let z = Complex64::new(0.4, 0.3);
        let exact = ExtremalFunction::new(a(0.5)).unwrap().eval(z).unwrap();
        let near = ExtremalFunction::new(a(0.5 + 2e-9))
            .unwrap()
            .eval(z)
            .unwrap();
        assert!((exact.0 - near.0).norm() < 1e-8);
        assert!((exact.1 - near.1).norm() < 1e-8);
    }

    #[test]
    fn build_section_half_order() {
        let p = build_section(a(0.5), 3, 3, 0.0).unwrap();
        let want_a = [1.0, 0.5, 1.0 / 3.0];
        let want_b = [0.0, 0.5, 1.0 / 3.0];
        for (got, want) in p.analytic_coeffs().iter().zip(want_a) {
            assert!((got - Complex64::new(want, 0.0)).norm() < 1e-15);
        }
        for (got, want) in p.coanalytic_coeffs().iter().zip(want_b) {
            assert!((got - Complex64::new(want, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn build_section_rotated() {
        let p = build_section(a(0.0), 2, 2, PI).unwrap();
        assert!((p.analytic_coeffs()[1] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((p.coanalytic_coeffs()[1] - Complex64::new(-0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn build_section_minimal_orders() {
        let p = build_section(a(0.3), 1, 2, 0.0).unwrap();
        assert_eq!(p.degree_analytic(), 1);
        assert_eq!(p.degree_coanalytic(), 2);
        assert!(build_section(a(0.3), 0, 2, 0.0).is_err());
        assert!(build_section(a(0.3), 3, 1, 0.0).is_err());
    }

    #[test]
    fn extremal_taylor_rejects_undersampling() {
        assert!(extremal_taylor(a(0.5), 10, 0.5, 30).is_err());
    }
}
