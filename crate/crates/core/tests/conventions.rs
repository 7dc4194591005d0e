//! Index convention and golden tables.

use padovan::sequence::pad;
use padovan::tables::build_table;
use padovan::{IndexCap, PadovanType, Rational};

const CAP: IndexCap = IndexCap::new(IndexCap::DEFAULT);

/// OEIS A000931 from a(0): 1, 0, 0, 1, 0, 1, 1, ...
const A000931: [i64; 30] =
    [1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151, 200, 265, 351, 465, 616];

#[test]
fn offset_against_a000931() {
    // P(n) = a(n + 5), including the five negative indices a(0..5) covers.
    for (k, &expected) in A000931.iter().enumerate() {
        let n = k as i64 - 5;
        assert_eq!(pad::<i64>(n, CAP).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn rows_of_the_small_tables_follow_p1_onward() {
    for columns in 1..=8 {
        let table = build_table::<i64>(columns, 5, CAP).unwrap();
        let expected = PadovanType::<i64>::canonical().stream(1, columns * 5, CAP).unwrap();
        assert_eq!(table.entries(), expected.as_slice());
        assert_eq!(table.entry(0, 1), Some(&1));
    }
}

#[test]
fn rational_initials_scale_linearly() {
    let third = Rational::new(1.into(), 3.into());
    let seq = PadovanType::new("thirds", 0, [third.clone(), third.clone(), third.clone()]);
    for n in -40..80 {
        let p: i64 = pad(n, CAP).unwrap();
        assert_eq!(seq.value(n, CAP).unwrap(), Rational::from_integer(p.into()) * &third);
    }
}
