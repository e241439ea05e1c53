//! Scalar abstraction: every numeric kernel in this crate is generic over the
//! floating-point type through [`Real`]. Concrete `f64` aliases live at the
//! crate root.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, One, ToPrimitive};

/// Floating-point scalar the library is generic over (`f32` or `f64`).
///
/// The tolerance constants baked into the solver and tail summation are sized
/// for `f64`; `f32` instantiations work but converge to `f32` accuracy only.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Convert an `f64` constant into the working scalar type.
#[inline]
pub fn real<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("f64 constant must convert into the scalar type")
}

/// Lossy view of a scalar as `f64`, for error messages and reports.
#[inline]
pub fn as_f64<R: Real>(x: R) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// ((1+x)^gamma - 1) / gamma, with the removable singularity at gamma = 0
/// filled by its limit ln(1+x). Takes ln(1+x) precomputed so callers can
/// share it across several gamma values.
///
/// Evaluating through `exp_m1` keeps full relative accuracy when
/// gamma·ln(1+x) is tiny, which is where the textbook quotient cancels.
#[inline]
pub fn powm1_ratio<R: Real>(gamma: R, ln1p_x: R) -> R {
    if gamma == R::zero() {
        ln1p_x
    } else {
        (gamma * ln1p_x).exp_m1() / gamma
    }
}

/// exp(w) - 1 for complex w without cancellation near w = 0.
///
/// For |w| <= 1/2 the Maclaurin series is summed directly (it converges with
/// at least a factor-2 ratio there); otherwise the direct formula is fine
/// because |exp(w) - 1| is bounded away from 0 relative to the terms.
pub fn complex_exp_m1<R: Real>(w: Complex<R>) -> Complex<R> {
    if w.norm_sqr() > real::<R>(0.25) {
        return w.exp() - Complex::one();
    }
    let mut term = w;
    let mut sum = w;
    let mut k = 1u32;
    loop {
        k += 1;
        term = (term * w).unscale(real::<R>(f64::from(k)));
        let next = sum + term;
        if next == sum || k > 64 {
            return next;
        }
        sum = next;
    }
}

/// (1 - (1-z)^gamma) / gamma on the unit disk, continuous in gamma.
///
/// This is the antiderivative family behind the extremal functions: at
/// gamma = 0 it degenerates to -ln(1-z). `ln_one_minus_z` is ln(1-z) with the
/// principal branch (1-z never meets the cut for |z| < 1).
#[inline]
pub fn one_minus_pow_ratio<R: Real>(gamma: R, ln_one_minus_z: Complex<R>) -> Complex<R> {
    if gamma == R::zero() {
        -ln_one_minus_z
    } else {
        -complex_exp_m1(ln_one_minus_z.scale(gamma)).unscale(gamma)
    }
}

/// Compensated (Kahan) accumulator.
#[derive(Debug, Clone, Copy)]
pub struct Kahan<R> {
    sum: R,
    comp: R,
}

impl<R: Real> Kahan<R> {
    pub fn new() -> Self {
        Kahan {
            sum: R::zero(),
            comp: R::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, x: R) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> R {
        self.sum
    }
}

impl<R: Real> Default for Kahan<R> {
    fn default() -> Self {
        Self::new()
    }
}
