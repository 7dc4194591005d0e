use crate::error::{Error, Result};
use crate::scalar::Term;
use crate::sequence::{pad, IndexCap};

use super::coeffs;

/// Exact coefficients with `P(n) = c2 P(2a+b) + c1 P(a+b) + c0 P(b)`, where
/// `n = a*m + b` and `1 <= b <= a`: `P(n)` in terms of the first three
/// entries of column `b` of the a-columns table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate<T> {
    pub n: i64,
    pub step: i64,
    /// Column `b`, in `1..=step`.
    pub residue: i64,
    /// Row of `P(n)` in the table, zero-based.
    pub rows: i64,
    /// `[c2, c1, c0]`
    pub coeffs: [T; 3],
}

impl<T> ReductionCertificate<T> {
    /// `[2a + b, a + b, b]`
    pub fn head_indices(&self) -> [i64; 3] {
        let (a, b) = (self.step, self.residue);
        [2 * a + b, a + b, b]
    }
}

/// One state of the reduction: `P(n) = c2 q(top) + c1 q(top-1) + c0 q(top-2)`
/// where `q(row) = P(a*row + b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep<T> {
    pub top_row: i64,
    pub coeffs: [T; 3],
}

fn split(n: i64, a: i64) -> Result<(i64, i64)> {
    if a < 1 {
        return Err(Error::InvalidStep(a));
    }
    if n < 1 {
        return Err(Error::InvalidIndex { n, min: 1 });
    }
    let b = (n - 1) % a + 1;
    Ok((b, (n - b) / a))
}

/// Every state of the top-down reduction of `P(n)` with step `a`.
///
/// The first state is the trivial `1 * q(m)`; each following state expands
/// the top row with `q(t) = rho q(t-1) + sigma q(t-2) + q(t-3)`, i.e.
/// `(c2, c1, c0) -> (c2 rho + c1, c2 sigma + c0, c2)`, until the lowest row
/// referenced is row 0. For `m <= 2` the single state is a unit vector.
pub fn reduction_trace<T: Term>(n: i64, a: i64, cap: IndexCap) -> Result<Vec<ReductionStep<T>>> {
    let (_, m) = split(n, a)?;
    cap.check(n)?;
    if m <= 2 {
        let mut coeffs = [T::zero(), T::zero(), T::zero()];
        coeffs[(2 - m) as usize] = T::one();
        return Ok(vec![ReductionStep { top_row: 2, coeffs }]);
    }

    let c = coeffs::<T>(a, cap)?;
    let mut trace = Vec::with_capacity(m as usize - 1);
    let mut state = ReductionStep { top_row: m, coeffs: [T::one(), T::zero(), T::zero()] };
    while state.top_row > 2 {
        let [c2, c1, c0] = &state.coeffs;
        let next = [c2.clone() * &c.rho + c1, c2.clone() * &c.sigma + c0, c2.clone()];
        let top_row = state.top_row - 1;
        trace.push(state);
        state = ReductionStep { top_row, coeffs: next };
    }
    trace.push(state);
    Ok(trace)
}

/// Reduce `P(n)` to the head of its column and check the result against
/// plain iteration before returning it.
pub fn reduce_to_head<T: Term>(n: i64, a: i64, cap: IndexCap) -> Result<ReductionCertificate<T>> {
    let (b, m) = split(n, a)?;
    let last = reduction_trace::<T>(n, a, cap)?.pop().expect("trace is never empty");
    let cert = ReductionCertificate { n, step: a, residue: b, rows: m, coeffs: last.coeffs };
    if eval_via_certificate(&cert, cap)? != pad::<T>(n, cap)? {
        return Err(Error::CertificateMismatch { n, step: a });
    }
    Ok(cert)
}

/// `c2 P(2a+b) + c1 P(a+b) + c0 P(b)`.
pub fn eval_via_certificate<T: Term>(cert: &ReductionCertificate<T>, cap: IndexCap) -> Result<T> {
    let mut total = T::zero();
    for (c, idx) in cert.coeffs.iter().zip(cert.head_indices()) {
        if !c.is_zero() {
            total = total + c.clone() * &pad::<T>(idx, cap)?;
        }
    }
    Ok(total)
}
