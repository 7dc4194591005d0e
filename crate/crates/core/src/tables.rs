//! a-columns Padovan tables and column partial sums.
//!
//! Row `m` (zero-based), column `b` (one-based) of the a-columns table holds
//! `P(a*m + b)`. The column partial sum is `r(m) = sum_{k=0..=m} P(a*k + b)`.

use crate::error::{Error, Result};
use crate::scalar::{lit, Term};
use crate::sequence::{pad, pad_run, IndexCap, PadovanType};

/// Additive constants of the 4-column sum recurrence, indexed by column.
pub const R4_CONSTANTS: [i64; 4] = [2, 4, 3, 6];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadovanTable<T> {
    columns: usize,
    rows: usize,
    entries: Vec<T>,
}

impl<T: Term> PadovanTable<T> {
    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `P(a*row + col)`; `col` is one-based.
    pub fn entry(&self, row: usize, col: usize) -> Option<&T> {
        if row >= self.rows || col == 0 || col > self.columns {
            return None;
        }
        self.entries.get(row * self.columns + col - 1)
    }

    pub fn row(&self, row: usize) -> Option<&[T]> {
        (row < self.rows).then(|| &self.entries[row * self.columns..(row + 1) * self.columns])
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.columns)
    }

    /// Entries in row-major order, i.e. `P(1), P(2), ..., P(a*rows)`.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }
}

pub fn build_table<T: Term>(columns: i64, rows: i64, cap: IndexCap) -> Result<PadovanTable<T>> {
    if columns < 1 || rows < 1 {
        return Err(Error::InvalidDimensions { columns, rows });
    }
    cap.check_wide(columns as i128 * rows as i128)?;
    let entries = PadovanType::canonical().stream(1, columns * rows, cap)?;
    Ok(PadovanTable { columns: columns as usize, rows: rows as usize, entries })
}

fn check_column(columns: i64, column: i64) -> Result<()> {
    if columns < 1 {
        return Err(Error::InvalidDimensions { columns, rows: 1 });
    }
    if column < 1 || column > columns {
        return Err(Error::InvalidColumn { column, columns });
    }
    Ok(())
}

/// `r(0), ..., r(m)` for column `b` of the a-columns table, by direct summation.
pub fn column_sums<T: Term>(columns: i64, column: i64, m: i64, cap: IndexCap) -> Result<Vec<T>> {
    check_column(columns, column)?;
    if m < 0 {
        return Err(Error::InvalidIndex { n: m, min: 0 });
    }
    cap.check_wide(columns as i128 * m as i128 + column as i128)?;
    let mut window = PadovanType::<T>::canonical().window_at(column, cap)?;
    let mut sums = Vec::with_capacity(m as usize + 1);
    let mut total = T::zero();
    for k in 0..=m {
        if k > 0 {
            for _ in 0..columns {
                window.advance();
            }
        }
        total = total + window.front();
        sums.push(total.clone());
    }
    Ok(sums)
}

/// `r(m)` for column `b` of the a-columns table.
pub fn column_sum<T: Term>(columns: i64, column: i64, m: i64, cap: IndexCap) -> Result<T> {
    Ok(column_sums(columns, column, m, cap)?.pop().expect("m >= 0 gives at least one sum"))
}

/// `3 r(m-1) - 2 r(m-2) + r(m-3) + 1`, the 3-column sum recurrence.
///
/// `history` is `[r(m-1), r(m-2), r(m-3)]`. The constant is 1 for every column.
pub fn r3_step<T: Term>(column: i64, history: [&T; 3]) -> Result<T> {
    check_column(3, column)?;
    let [r1, r2, r3] = history;
    Ok(lit::<T>(3) * r1 - lit::<T>(2) * r2 + r3 + T::one())
}

/// `2 r(m-1) + 3 r(m-2) + r(m-3) + c(b)` with `c = (2, 4, 3, 6)`, the
/// 4-column sum recurrence.
pub fn r4_step<T: Term>(column: i64, history: [&T; 3]) -> Result<T> {
    check_column(4, column)?;
    let [r1, r2, r3] = history;
    let constant = lit::<T>(R4_CONSTANTS[column as usize - 1]);
    Ok(lit::<T>(2) * r1 + lit::<T>(3) * r2 + r3 + constant)
}

/// `sum_{k=0..=m} P(4k)` as `(P(4m+4) + 4 P(4m) + P(4m-4) - 1) / 5`.
pub fn sum_4k_closed<T: Term>(m: i64, cap: IndexCap) -> Result<T> {
    if m < 0 {
        return Err(Error::InvalidIndex { n: m, min: 0 });
    }
    cap.check_wide(4 * (m as i128 + 1))?;
    let run = pad_run::<T>(4 * m - 4, 9, cap)?;
    let numerator = run[8].clone() + lit::<T>(4) * &run[4] + &run[0] - T::one();
    let five = lit::<T>(5);
    if !(numerator.clone() % five.clone()).is_zero() {
        return Err(Error::DivisibilityViolation { m });
    }
    Ok(numerator / five)
}

/// `sum_{k=0..=m} P(4k)` by adding the terms.
pub fn sum_4k_direct<T: Term>(m: i64, cap: IndexCap) -> Result<T> {
    if m < 0 {
        return Err(Error::InvalidIndex { n: m, min: 0 });
    }
    (0..=m).try_fold(T::zero(), |acc, k| Ok(acc + pad::<T>(4 * k, cap)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Integer;

    const CAP: IndexCap = IndexCap::new(IndexCap::DEFAULT);

    #[test]
    fn five_column_table() {
        let t = build_table::<i64>(5, 4, CAP).unwrap();
        assert_eq!(t.row(0).unwrap(), [1, 1, 2, 2, 3]);
        assert_eq!(t.row(1).unwrap(), [4, 5, 7, 9, 12]);
        assert_eq!(t.row(2).unwrap(), [16, 21, 28, 37, 49]);
        assert_eq!(t.row(3).unwrap()[..4], [65, 86, 114, 151]);
        assert_eq!(t.entry(3, 1), Some(&65));
        assert_eq!(t.entry(0, 0), None);
        assert_eq!(t.entry(0, 6), None);
    }

    #[test]
    fn six_column_table() {
        let t = build_table::<i64>(6, 4, CAP).unwrap();
        assert_eq!(t.row(2).unwrap(), [28, 37, 49, 65, 86, 114]);
        assert_eq!(t.row(3).unwrap()[..5], [151, 200, 265, 351, 465]);
        assert_eq!(t.entry(3, 5), Some(&465));
    }

    #[test]
    fn single_column() {
        let t = build_table::<i64>(1, 3, CAP).unwrap();
        assert_eq!(t.entries(), [1, 1, 2]);
        assert_eq!(build_table::<i64>(0, 3, CAP), Err(Error::InvalidDimensions { columns: 0, rows: 3 }));
        assert!(build_table::<i64>(1000, 1_000_000, CAP).is_err());
    }

    #[test]
    fn sum_tables_for_three_and_four_columns() {
        let three: Vec<Vec<i64>> = (1..=3).map(|b| column_sums(3, b, 4, CAP).unwrap()).collect();
        assert_eq!(three, [vec![1, 3, 8, 20, 48], vec![1, 4, 11, 27, 64], vec![2, 6, 15, 36, 85]]);
        let four: Vec<Vec<i64>> = (1..=4).map(|b| column_sums(4, b, 4, CAP).unwrap()).collect();
        assert_eq!(
            four,
            [vec![1, 4, 13, 41, 127], vec![1, 5, 17, 54, 168], vec![2, 7, 23, 72, 223], vec![2, 9, 30, 95, 295]]
        );
    }

    #[test]
    fn column_sum_examples() {
        assert_eq!(column_sum::<i64>(3, 1, 3, CAP).unwrap(), 20);
        assert_eq!(column_sum::<i64>(4, 2, 4, CAP).unwrap(), 168);
        assert_eq!(column_sum::<i64>(7, 5, 0, CAP).unwrap(), pad::<i64>(5, CAP).unwrap());
        assert_eq!(column_sum::<i64>(3, 4, 2, CAP), Err(Error::InvalidColumn { column: 4, columns: 3 }));
        assert_eq!(column_sum::<i64>(3, 0, 2, CAP), Err(Error::InvalidColumn { column: 0, columns: 3 }));
    }

    #[test]
    fn step_examples() {
        assert_eq!(r3_step::<i64>(1, [&20, &8, &3]).unwrap(), 48);
        assert_eq!(r3_step::<i64>(2, [&27, &11, &4]).unwrap(), 64);
        assert_eq!(r3_step::<i64>(3, [&36, &15, &6]).unwrap(), 85);
        assert_eq!(r4_step::<i64>(1, [&41, &13, &4]).unwrap(), 127);
        assert_eq!(r4_step::<i64>(2, [&54, &17, &5]).unwrap(), 168);
        assert_eq!(r4_step::<i64>(4, [&95, &30, &9]).unwrap(), 295);
        assert!(r4_step::<i64>(5, [&0, &0, &0]).is_err());
    }

    #[test]
    fn sum_4k_examples() {
        assert_eq!(sum_4k_closed::<i64>(0, CAP).unwrap(), 1);
        assert_eq!(sum_4k_closed::<i64>(1, CAP).unwrap(), 3);
        assert_eq!(
            sum_4k_closed::<Integer>(50, CAP).unwrap(),
            (0..=50).map(|k| pad::<Integer>(4 * k, CAP).unwrap()).sum::<Integer>()
        );
    }
}
