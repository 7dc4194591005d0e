//! The a-step decimation recurrence
//!
//! ```text
//! P(n) = rho(a) P(n-a) + sigma(a) P(n-2a) + P(n-3a)
//! ```
//!
//! with `rho(a) = 3 P(a-2) - P(a-4)` and `sigma(a) = -rho(-a)`. The identity
//! holds for every integer `a` and `n`, not only `0 < a < n`.
//!
//! Submodules hold the machinery built on top of it: reduction certificates,
//! the companion-matrix evaluator and the large-index strategies.

mod certificate;
mod matrix;
mod strategy;

pub use certificate::{eval_via_certificate, reduce_to_head, reduction_trace, ReductionCertificate, ReductionStep};
pub use matrix::{matrix_pow_eval, matrix_pow_value, Mat3};
pub use strategy::{
    column_walk_eval, iterative_eval, trisection_eval, trisection_eval_with, trisection_plan, EvalStrategy,
    ParseStrategyError, TrisectionPlan, DEFAULT_TRISECTION_THRESHOLD,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Term};
use crate::sequence::{pad, pad_run, IndexCap};

/// Closed form a `rho` value was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RhoForm {
    /// `3 P(a-2) - P(a-4)`
    SixApart,
    /// `P(a) - P(a-1) + 2 P(a-2)`
    ThreeSuccessive,
    /// `2 P(a+1) + P(a) - 3 P(a-1)`
    LeadingSuccessor,
}

/// `(rho(a), sigma(a))` for one step size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimationCoeffs<T> {
    pub step: i64,
    pub rho: T,
    pub sigma: T,
    /// Form both values were taken from; the other two forms were checked to agree.
    pub source: RhoForm,
}

/// `rho(a)` evaluated through all three closed forms, in [`RhoForm`] order.
pub fn rho_forms<T: Term>(a: i64, cap: IndexCap) -> Result<[T; 3]> {
    cap.check(a)?;
    // P(a-4) .. P(a+1); the few indices past the cap are harmless.
    let run = pad_run::<T>(a - 4, 6, IndexCap::new(cap.get() + 4))?;
    let [p_am4, _p_am3, p_am2, p_am1, p_a, p_ap1]: [T; 6] = run.try_into().expect("pad_run returns exactly six terms");

    let six_apart = lit::<T>(3) * &p_am2 - &p_am4;
    let three_successive = p_a.clone() - &p_am1 + lit::<T>(2) * &p_am2;
    let leading_successor = lit::<T>(2) * &p_ap1 + &p_a - lit::<T>(3) * &p_am1;
    Ok([six_apart, three_successive, leading_successor])
}

/// `rho(a)`, after checking that all three closed forms agree.
pub fn rho<T: Term>(a: i64, cap: IndexCap) -> Result<T> {
    let [six_apart, three_successive, leading_successor] = rho_forms::<T>(a, cap)?;
    if six_apart != three_successive || six_apart != leading_successor {
        return Err(Error::FormulaDisagreement { step: a });
    }
    Ok(six_apart)
}

/// `sigma(a) = -rho(-a)`.
pub fn sigma<T: Term>(a: i64, cap: IndexCap) -> Result<T> {
    Ok(T::zero() - rho::<T>(-a, cap)?)
}

pub fn coeffs<T: Term>(a: i64, cap: IndexCap) -> Result<DecimationCoeffs<T>> {
    Ok(DecimationCoeffs { step: a, rho: rho(a, cap)?, sigma: sigma(a, cap)?, source: RhoForm::SixApart })
}

/// `rho(a) P(n-a) + sigma(a) P(n-2a) + P(n-3a)`, each term evaluated by iteration.
pub fn decimated_eval<T: Term>(n: i64, a: i64, cap: IndexCap) -> Result<T> {
    cap.check(n)?;
    cap.check(a)?;
    let c = coeffs::<T>(a, cap)?;
    let upper = pad::<T>(n - a, cap)?;
    let middle = pad::<T>(n - 2 * a, cap)?;
    let lowest = pad::<T>(n - 3 * a, cap)?;
    Ok(c.rho * &upper + c.sigma * &middle + lowest)
}

/// The one-step shortcut with `a = floor(n/3)`, where the lowest term is one
/// of the initials `P(0) = P(1) = P(2) = 1`:
///
/// * `n = 3a`: `rho(a) P(2a) + sigma(a) P(a) + 1`
/// * otherwise: `rho(a) P(floor(2n/3) + 1) + sigma(a) P(floor(n/3 + 1/2) + 1) + 1`
pub fn third_remark_eval<T: Term>(n: i64, cap: IndexCap) -> Result<T> {
    if n < 3 {
        return Err(Error::InvalidIndex { n, min: 3 });
    }
    cap.check(n)?;
    let a = n / 3;
    let c = coeffs::<T>(a, cap)?;
    let (upper, middle) = if n % 3 == 0 {
        (2 * a, a)
    } else {
        // floor(n/3 + 1/2) == floor((2n + 3) / 6)
        (2 * n / 3 + 1, (2 * n + 3) / 6 + 1)
    };
    Ok(c.rho * &pad::<T>(upper, cap)? + c.sigma * &pad::<T>(middle, cap)? + T::one())
}
