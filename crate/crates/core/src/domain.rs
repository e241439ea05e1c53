//! Domain newtypes: the convexity order alpha and the disk radius.

use crate::error::{Error, Result};
use crate::scalar::{as_f64, real, Real};

/// Distance from a special order below which the exact branch is taken.
pub const BRANCH_EPS: f64 = 1e-9;

/// Which closed-form branch of the order-dependent formulas applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaBranch {
    /// alpha = -1/2: the weights collapse to the convex-family tail weights.
    MinusHalf,
    /// alpha = 0.
    Zero,
    /// alpha = 1/2.
    Half,
    /// Anything else in [-1/2, 1).
    General,
}

/// Convexity order alpha in [-1/2, 1), with its branch classification.
///
/// The distortion and extremal-function formulas are stated for alpha in
/// [0, 1); alpha = -1/2 is accepted because the coefficient products and tail
/// weights remain well defined there and are needed for the convex-family
/// cross-checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaOrder<R> {
    value: R,
    branch: AlphaBranch,
}

impl<R: Real> AlphaOrder<R> {
    pub fn new(value: R) -> Result<Self> {
        let lo = real::<R>(-0.5 - BRANCH_EPS);
        if !(value >= lo && value < R::one()) {
            return Err(Error::InvalidAlpha(as_f64(value)));
        }
        let eps = real::<R>(BRANCH_EPS);
        let branch = if (value + real::<R>(0.5)).abs() < eps {
            AlphaBranch::MinusHalf
        } else if value.abs() < eps {
            AlphaBranch::Zero
        } else if (value - real::<R>(0.5)).abs() < eps {
            AlphaBranch::Half
        } else {
            AlphaBranch::General
        };
        // Values in (-1/2, 0) classify as General; they are legal orders but
        // most operations reject them through require_nonnegative().
        Ok(AlphaOrder { value, branch })
    }

    /// The order alpha = 1/2, used by the half-order lower bound machinery.
    pub fn half() -> Self {
        AlphaOrder {
            value: real::<R>(0.5),
            branch: AlphaBranch::Half,
        }
    }

    pub fn value(&self) -> R {
        self.value
    }

    pub fn branch(&self) -> AlphaBranch {
        self.branch
    }

    /// Guard for the operations stated only for alpha in [0, 1).
    pub fn require_nonnegative(&self) -> Result<()> {
        match self.branch {
            AlphaBranch::Zero | AlphaBranch::Half => Ok(()),
            AlphaBranch::MinusHalf => Err(Error::AlphaNotSupported(as_f64(self.value))),
            AlphaBranch::General => {
                if self.value < R::zero() {
                    Err(Error::AlphaNotSupported(as_f64(self.value)))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// A radius strictly inside the unit interval (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Radius<R>(R);

impl<R: Real> Radius<R> {
    pub fn new(value: R) -> Result<Self> {
        if value > R::zero() && value < R::one() {
            Ok(Radius(value))
        } else {
            Err(Error::InvalidRadius(as_f64(value)))
        }
    }

    pub fn value(&self) -> R {
        self.0
    }
}
