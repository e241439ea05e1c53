//! Finite harmonic polynomials z -> sum a_k z^k + conj(sum b'_k z^k).
//!
//! The co-analytic rotation e^{i theta} is folded into the stored b
//! coefficients at construction time, so evaluation never re-applies it.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{as_f64, Real};

/// A section s_{n,m}(f; theta) represented by its coefficient lists.
///
/// `analytic` holds a_1..a_n (a_1 = 1), `coanalytic` holds b_1..b_m with
/// b_1 = 0 and the rotation already multiplied in.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicPolynomial<R: Real> {
    analytic: Vec<Complex<R>>,
    coanalytic: Vec<Complex<R>>,
    rotation: R,
}

impl<R: Real> HarmonicPolynomial<R> {
    /// Build from raw coefficients; `coanalytic` is rotated by e^{i rotation}.
    ///
    /// Requires a_1 = 1 and (when present) b_1 = 0, the normalization of the
    /// class the sections are drawn from.
    pub fn new(
        analytic: Vec<Complex<R>>,
        coanalytic: Vec<Complex<R>>,
        rotation: R,
    ) -> Result<Self> {
        if analytic.is_empty() {
            return Err(Error::InvalidPolynomial(
                "analytic part needs at least a_1".into(),
            ));
        }
        if analytic[0] != Complex::new(R::one(), R::zero()) {
            return Err(Error::InvalidPolynomial(format!(
                "a_1 must be 1, got {} + {}i",
                as_f64(analytic[0].re),
                as_f64(analytic[0].im)
            )));
        }
        if let Some(b1) = coanalytic.first() {
            if *b1 != Complex::new(R::zero(), R::zero()) {
                return Err(Error::InvalidPolynomial(format!(
                    "b_1 must be 0, got {} + {}i",
                    as_f64(b1.re),
                    as_f64(b1.im)
                )));
            }
        }
        let phase = Complex::new(R::zero(), rotation).exp();
        let coanalytic = coanalytic.into_iter().map(|b| b * phase).collect();
        Ok(HarmonicPolynomial {
            analytic,
            coanalytic,
            rotation,
        })
    }

    /// Degree of the analytic part.
    pub fn degree_analytic(&self) -> usize {
        self.analytic.len()
    }

    /// Degree of the co-analytic part (0 when absent).
    pub fn degree_coanalytic(&self) -> usize {
        self.coanalytic.len()
    }

    /// a_1..a_n.
    pub fn analytic_coeffs(&self) -> &[Complex<R>] {
        &self.analytic
    }

    /// Rotated b_1..b_m.
    pub fn coanalytic_coeffs(&self) -> &[Complex<R>] {
        &self.coanalytic
    }

    pub fn rotation(&self) -> R {
        self.rotation
    }

    /// The analytic polynomial sum a_k z^k.
    pub fn analytic_part(&self, z: Complex<R>) -> Complex<R> {
        poly_eval(&self.analytic, z)
    }

    /// The co-analytic polynomial G(z) = sum b'_k z^k (before conjugation).
    pub fn coanalytic_part(&self, z: Complex<R>) -> Complex<R> {
        poly_eval(&self.coanalytic, z)
    }

    /// Value of the harmonic polynomial: analytic part + conj(co-analytic).
    pub fn eval(&self, z: Complex<R>) -> Complex<R> {
        self.analytic_part(z) + self.coanalytic_part(z).conj()
    }

    /// Derivative of the analytic part.
    pub fn analytic_deriv(&self, z: Complex<R>) -> Complex<R> {
        poly_deriv_eval(&self.analytic, z)
    }

    /// Derivative of the co-analytic polynomial G.
    pub fn coanalytic_deriv(&self, z: Complex<R>) -> Complex<R> {
        poly_deriv_eval(&self.coanalytic, z)
    }

    /// Jacobian |h'|^2 - |G'|^2 of the harmonic map at z.
    pub fn jacobian(&self, z: Complex<R>) -> R {
        self.analytic_deriv(z).norm_sqr() - self.coanalytic_deriv(z).norm_sqr()
    }
}

/// Horner evaluation of sum_{k>=1} c_k z^k (coefficients start at degree 1).
fn poly_eval<R: Real>(coeffs: &[Complex<R>], z: Complex<R>) -> Complex<R> {
    let mut acc = Complex::new(R::zero(), R::zero());
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc * z
}

/// Horner evaluation of d/dz sum_{k>=1} c_k z^k = sum k c_k z^{k-1}.
fn poly_deriv_eval<R: Real>(coeffs: &[Complex<R>], z: Complex<R>) -> Complex<R> {
    let mut acc = Complex::new(R::zero(), R::zero());
    for (k, c) in coeffs.iter().enumerate().rev() {
        let factor = R::from_usize(k + 1).expect("degree fits the scalar");
        acc = acc * z + c.scale(factor);
    }
    acc
}
