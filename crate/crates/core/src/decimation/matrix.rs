use crate::error::Result;
use crate::scalar::Term;
use crate::sequence::{IndexCap, PadovanType};

/// 3x3 matrix over a [`Term`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3<T>(pub [[T; 3]; 3]);

impl<T: Term> Mat3<T> {
    pub fn identity() -> Self {
        let (o, z) = (T::one, T::zero);
        Mat3([[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]])
    }

    /// Maps `(p(k), p(k+1), p(k+2))` to `(p(k+1), p(k+2), p(k) + p(k+1))`.
    pub fn companion() -> Self {
        let (o, z) = (T::one, T::zero);
        Mat3([[z(), o(), z()], [z(), z(), o()], [o(), o(), z()]])
    }

    /// Exact inverse of [`Mat3::companion`] (its determinant is 1):
    /// `p(k-1) = p(k+2) - p(k)`.
    pub fn companion_inverse() -> Self {
        let (o, z) = (T::one, T::zero);
        Mat3([[z() - o(), z(), o()], [o(), z(), z()], [z(), o(), z()]])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let entry = |i: usize, j: usize| (0..3).fold(T::zero(), |acc, k| acc + self.0[i][k].clone() * &rhs.0[k][j]);
        Mat3([
            [entry(0, 0), entry(0, 1), entry(0, 2)],
            [entry(1, 0), entry(1, 1), entry(1, 2)],
            [entry(2, 0), entry(2, 1), entry(2, 2)],
        ])
    }

    pub fn apply(&self, v: &[T; 3]) -> [T; 3] {
        let row = |i: usize| (0..3).fold(T::zero(), |acc, k| acc + self.0[i][k].clone() * &v[k]);
        [row(0), row(1), row(2)]
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::identity();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// `p(n)` for a Padovan-type sequence via a power of the companion matrix
/// (or of its inverse when `n` is below the base).
pub fn matrix_pow_value<T: Term>(seq: &PadovanType<T>, n: i64, cap: IndexCap) -> Result<T> {
    cap.check(n)?;
    let offset = n - seq.base;
    let step = if offset >= 0 { Mat3::companion() } else { Mat3::companion_inverse() };
    let [first, _, _] = step.pow(offset.unsigned_abs()).apply(&seq.initials);
    Ok(first)
}

/// `P(n)` via the companion matrix.
pub fn matrix_pow_eval<T: Term>(n: i64, cap: IndexCap) -> Result<T> {
    matrix_pow_value(&PadovanType::canonical(), n, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::pad;
    use crate::Integer;

    const CAP: IndexCap = IndexCap::new(IndexCap::DEFAULT);

    #[test]
    fn inverse_really_inverts() {
        let m = Mat3::<i64>::companion();
        assert_eq!(m.mul(&Mat3::companion_inverse()), Mat3::identity());
        assert_eq!(Mat3::companion_inverse().mul(&m), Mat3::identity());
    }

    #[test]
    fn zeroth_power_is_identity() {
        assert_eq!(Mat3::<i64>::companion().pow(0), Mat3::identity());
        assert_eq!(matrix_pow_eval::<i64>(0, CAP).unwrap(), 1);
    }

    #[test]
    fn known_values() {
        assert_eq!(matrix_pow_eval::<i64>(40, CAP).unwrap(), 55405);
        assert_eq!(matrix_pow_eval::<i64>(-10, CAP).unwrap(), 2);
        assert_eq!(matrix_pow_eval::<Integer>(1000, CAP).unwrap(), pad::<Integer>(1000, CAP).unwrap());
    }

    #[test]
    fn matches_iteration_on_both_sides() {
        for n in -300..300 {
            assert_eq!(matrix_pow_eval::<Integer>(n, CAP).unwrap(), pad::<Integer>(n, CAP).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn shifted_base() {
        let seq = PadovanType::<i64>::rho_sequence();
        assert_eq!(matrix_pow_value(&seq, 8, CAP).unwrap(), 10);
        assert_eq!(matrix_pow_value(&seq, -8, CAP).unwrap(), 5);
    }
}
