use std::fmt::Debug;

use num_traits::{FromPrimitive, NumRef};

/// Scalar a sequence can be evaluated in.
///
/// Only ring operations are used, so any exact numeric type works. Machine
/// integers overflow long before the index cap; use [`crate::Integer`] for
/// anything beyond a few hundred terms.
pub trait Term: NumRef + FromPrimitive + Clone + Debug + Send + Sync {}

impl<T: NumRef + FromPrimitive + Clone + Debug + Send + Sync> Term for T {}

/// Small integer constant in `T`.
pub(crate) fn lit<T: Term>(v: i64) -> T {
    T::from_i64(v).expect("small constants are representable in every Term")
}
