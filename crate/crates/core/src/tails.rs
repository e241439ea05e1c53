//! Certified evaluation of the infinite coefficient-weighted tails that the
//! gap functions subtract:
//!
//! - F(alpha):        sum_{k>n} k A_k(alpha) r^{k-1}  and
//!                    sum_{k>m} k(k-1)/(k-2 alpha) A_k(alpha) r^{k-1}
//! - close-to-convex: weights k(k+1)(2k+1)/6 and k(k-1)(2k-1)/6
//! - convex family:   weights k(k+1)/2 and k(k-1)/2
//!
//! Every sum is returned together with a rigorous bound on the discarded
//! remainder, so sign decisions downstream can treat the bound as a dead
//! zone. All terms are positive; once the term ratio is <= q < 1 for the rest
//! of the series (the weights grow polynomially, so ratios decrease towards 1
//! or stay below it), the remainder after term t_k is at most
//! t_{k+1}/(1 - q).
//!
//! Accumulation is compensated and the running power r^k is carried in
//! double-double so the certified bound is not swamped by round-off: the gap
//! solver compares tails of size ~10^3 against leading terms of size ~10^-3.

use crate::coefficients::bound_analytic;
use crate::domain::{AlphaBranch, AlphaOrder, Radius};
use crate::error::{Error, Result};
use crate::scalar::{as_f64, real, Kahan, Real};

/// Which of the two tails of a gap function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailSide {
    Analytic,
    Coanalytic,
}

/// A summed tail with its certified truncation remainder.
#[derive(Debug, Clone, Copy)]
pub struct TailSum<R> {
    /// Partial sum of the series (a lower bound for the true value).
    pub value: R,
    /// Rigorous upper bound on the discarded remainder.
    pub truncation_bound: R,
    /// Number of terms accumulated.
    pub terms_used: usize,
}

/// Weight family of a tail series.
#[derive(Debug, Clone, Copy)]
pub enum TailKind<R: Real> {
    FAlpha {
        alpha: AlphaOrder<R>,
        side: TailSide,
    },
    CloseToConvex {
        side: TailSide,
    },
    Convex {
        side: TailSide,
    },
}

impl<R: Real> TailKind<R> {
    /// w_k. Exact closed expressions are used wherever the weight is a
    /// half-integer polynomial in k (the three special orders, the convex
    /// family, and the close-to-convex family); products of integers below
    /// 2^53 followed by an exact division keep them bit-exact.
    fn weight(&self, k: u32) -> R {
        let kf = real::<R>(f64::from(k));
        let one = R::one();
        let two = real::<R>(2.0);
        match self {
            TailKind::FAlpha { alpha, side } => match (alpha.branch(), side) {
                (AlphaBranch::Zero, TailSide::Analytic) => kf,
                (AlphaBranch::Zero, TailSide::Coanalytic) => kf - one,
                (AlphaBranch::Half, _) => one,
                (AlphaBranch::MinusHalf, TailSide::Analytic) => (kf * (kf + one)) / two,
                (AlphaBranch::MinusHalf, TailSide::Coanalytic) => (kf * (kf - one)) / two,
                (AlphaBranch::General, TailSide::Analytic) => kf * bound_analytic(k, *alpha),
                (AlphaBranch::General, TailSide::Coanalytic) => {
                    let two_alpha = two * alpha.value();
                    ((kf * (kf - one)) * bound_analytic(k, *alpha)) / (kf - two_alpha)
                }
            },
            TailKind::CloseToConvex { side } => match side {
                TailSide::Analytic => (kf * (kf + one) * (two * kf + one)) / real::<R>(6.0),
                TailSide::Coanalytic => (kf * (kf - one) * (two * kf - one)) / real::<R>(6.0),
            },
            TailKind::Convex { side } => match side {
                TailSide::Analytic => (kf * (kf + one)) / two,
                TailSide::Coanalytic => (kf * (kf - one)) / two,
            },
        }
    }

    /// w_{k+1}, reusing w_k so the general-order recurrence stays O(1).
    fn next_weight(&self, k: u32, w: R) -> R {
        let kf = real::<R>(f64::from(k));
        let one = R::one();
        let two = real::<R>(2.0);
        match self {
            TailKind::FAlpha { alpha, side } => match (alpha.branch(), side) {
                (AlphaBranch::General, TailSide::Analytic) => {
                    let two_alpha = two * alpha.value();
                    (w * (kf + one - two_alpha)) / kf
                }
                (AlphaBranch::General, TailSide::Coanalytic) => {
                    let two_alpha = two * alpha.value();
                    (w * (kf - two_alpha)) / (kf - one)
                }
                _ => self.weight(k + 1),
            },
            _ => self.weight(k + 1),
        }
    }
}

/// r values this close to 1 are refused outright: the certified stopping
/// rule would need more than the term cap.
pub const NEAR_ONE_LIMIT: f64 = 1.0 - 1e-9;

/// Hard cap on summed terms; reaching it returns an honest (possibly very
/// large) truncation bound rather than an error.
pub const MAX_TERMS: usize = 1_000_000;

const TERM_CUTOFF: f64 = 1e-17;
const REMAINDER_TARGET: f64 = 1e-15;

/// Sum `sum_{k >= first} w_k r^{k-1}` with a certified remainder.
///
/// `tol_scale` multiplies both stopping tolerances; the solver passes 1e-3
/// when a sign decision lands inside the dead zone and needs tighter tails.
pub fn tail_sum<R: Real>(
    kind: TailKind<R>,
    first: u32,
    r: Radius<R>,
    tol_scale: R,
) -> Result<TailSum<R>> {
    let rv = r.value();
    if as_f64(rv) >= NEAR_ONE_LIMIT {
        return Err(Error::RadiusTooLarge {
            value: as_f64(rv),
            max: NEAR_ONE_LIMIT,
        });
    }
    let k0f = f64::from(first);

    // All weights here are <= k^3, so if k0^3 r^{k0-1} is below e^-600 the
    // whole tail is certifiably below 1e-250 and the weight product (O(k0)
    // for general orders) can be skipped.
    let log_term_ub = 3.0 * k0f.ln() + (k0f - 1.0) * as_f64(rv).ln();
    if log_term_ub < -600.0 {
        let growth = (1.0 + 1.0 / k0f).powi(3);
        if as_f64(rv) * growth < 1.0 {
            return Ok(TailSum {
                value: R::zero(),
                truncation_bound: real::<R>(1e-250),
                terms_used: 0,
            });
        }
    }

    let cutoff = real::<R>(TERM_CUTOFF) * tol_scale;
    let target = real::<R>(REMAINDER_TARGET) * tol_scale;

    let mut k = first;
    let mut w = kind.weight(first);
    // r^{k-1} as hi + lo; the double-double carry keeps the per-term relative
    // error flat (~2 ulp) instead of growing with k.
    let mut p_hi = rv.powf(real::<R>(k0f - 1.0));
    let mut p_lo = R::zero();
    let mut acc = Kahan::new();
    let mut terms = 0usize;
    loop {
        let term = w.mul_add(p_hi, w * p_lo);
        acc.add(term);
        terms += 1;

        let w_next = kind.next_weight(k, w);
        let ratio = w_next / w;
        let q = rv * ratio.max(R::one());
        let sum = acc.value();
        let remainder = if q < R::one() {
            (term * ratio * rv) / (R::one() - q)
        } else {
            R::infinity()
        };

        let term_negligible = term <= cutoff * sum;
        let remainder_certified = remainder <= target * sum.max(R::one());
        if (term_negligible && remainder_certified) || terms >= MAX_TERMS {
            return Ok(TailSum {
                value: sum,
                truncation_bound: remainder,
                terms_used: terms,
            });
        }

        let p = p_hi * rv;
        let e = p_hi.mul_add(rv, -p);
        let l = p_lo.mul_add(rv, e);
        let s = p + l;
        p_lo = l - (s - p);
        p_hi = s;
        w = w_next;
        k += 1;
    }
}

/// R_n(alpha) = sum_{k>n} k A_k(alpha) r^{k-1}.
pub fn tail_analytic<R: Real>(n: u32, r: Radius<R>, alpha: AlphaOrder<R>) -> Result<TailSum<R>> {
    assert!(n >= 1, "analytic tails start after n >= 1");
    tail_sum(
        TailKind::FAlpha {
            alpha,
            side: TailSide::Analytic,
        },
        n + 1,
        r,
        R::one(),
    )
}

/// T_m(alpha) = sum_{k>m} k(k-1)/(k-2 alpha) A_k(alpha) r^{k-1}.
pub fn tail_coanalytic<R: Real>(m: u32, r: Radius<R>, alpha: AlphaOrder<R>) -> Result<TailSum<R>> {
    assert!(m >= 2, "co-analytic tails start after m >= 2");
    tail_sum(
        TailKind::FAlpha {
            alpha,
            side: TailSide::Coanalytic,
        },
        m + 1,
        r,
        R::one(),
    )
}

/// Close-to-convex tail with weight k(k+1)(2k+1)/6 (analytic side) or
/// k(k-1)(2k-1)/6 (co-analytic side, i.e. minus the weight at -k).
pub fn tail_ctc<R: Real>(n: u32, r: Radius<R>, side: TailSide) -> Result<TailSum<R>> {
    assert!(n >= 1);
    tail_sum(TailKind::CloseToConvex { side }, n + 1, r, R::one())
}

/// Convex-family tail with weight k(k+1)/2 or k(k-1)/2.
pub fn tail_mu<R: Real>(n: u32, r: Radius<R>, side: TailSide) -> Result<TailSum<R>> {
    assert!(n >= 1);
    tail_sum(TailKind::Convex { side }, n + 1, r, R::one())
}
