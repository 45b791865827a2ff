//! Closed-form Gröbner basis counts for 2- and 3-point sets and the two
//! upper bounds (the general one and the finite-field modification).
//!
//! Fractional powers are evaluated exactly: base^(a/b) is bracketed by
//! integer b-th roots and the nearest integer is decided by the comparison
//! 2^b * base^a vs (2r+1)^b, so no floating point enters any bound value.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Error;
use crate::ideal::Point;

/// 1 exactly at zero.
pub fn b0(x: u64) -> u64 {
    u64::from(x == 0)
}

/// 1 exactly at one; zero for everything larger. Arguments start at 1.
pub fn b1(x: u64) -> u64 {
    assert!(x >= 1, "b1 is defined for positive arguments");
    u64::from(x == 1)
}

/// Clamp at zero.
pub fn b2(x: i64) -> u64 {
    x.max(0) as u64
}

/// Number of distinct reduced Gröbner bases of the ideal of two distinct
/// points: the number of coordinates where they differ.
pub fn n2_count(p: &Point, q: &Point) -> u64 {
    assert_eq!(p.num_vars(), q.num_vars(), "points from different spaces");
    assert_ne!(p, q, "two-point formula needs distinct points");
    let n = p.num_vars() as u64;
    // |p_i - q_i| on integer representatives; only the zero test matters.
    let agreements: u64 = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| b0(u64::from(a.value().abs_diff(b.value()))))
        .sum();
    n - agreements
}

/// Count for three distinct points in Z_2^2.
pub fn n3_count_2d(p: &Point, q: &Point, r: &Point) -> u64 {
    check_three(p, q, r, 2, 2);
    let s = [n2_count(p, q), n2_count(p, r), n2_count(q, r)];
    let inner: u64 = s.iter().map(|&x| b1(x)).sum();
    2 - b2(inner as i64 - 1)
}

/// Count for three distinct points in Z_2^3.
pub fn n3_count_3d(p: &Point, q: &Point, r: &Point) -> u64 {
    check_three(p, q, r, 3, 2);
    let w = [n2_count(p, q), n2_count(p, r), n2_count(q, r)];
    3 - w.iter().map(|&x| b1(x)).sum::<u64>()
}

fn check_three(p: &Point, q: &Point, r: &Point, n: usize, modulus: u32) {
    for pt in [p, q, r] {
        assert_eq!(pt.num_vars(), n, "formula needs points in {n} coordinates");
        assert!(
            pt.coords()
                .iter()
                .all(|c| c.modulus().get() == modulus),
            "formula needs points over Z_{modulus}"
        );
    }
    assert!(p != q && p != r && q != r, "points must be pairwise distinct");
}

/// base^(num/den) rounded to the nearest integer, half away from zero.
fn pow_frac_nearest(base: u64, num: u32, den: u32) -> Result<u64, Error> {
    assert!(den > 0);
    if base == 0 {
        return Ok(0);
    }
    let g = gcd(num, den);
    let (num, den) = (num / g, den / g);
    let n = BigUint::from(base).pow(num);
    if den == 1 {
        return n.to_u64().ok_or(Error::BoundOverflow);
    }
    let root = n.nth_root(den);
    // nearest: round up iff base^(num/den) >= root + 1/2
    let lhs = n << den as usize; // 2^den * base^num
    let rhs = (BigUint::from(2u32) * &root + 1u32).pow(den);
    let nearest = if lhs >= rhs { root + 1u32 } else { root };
    nearest.to_u64().ok_or(Error::BoundOverflow)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The general upper bound m^(2n(n-1)/(n+1)) for the number of reduced
/// Gröbner bases of an ideal of m points in n variables, rounded to the
/// nearest integer; m = 0 reports 1 by convention.
pub fn onn_bound(n: u32, m: u64) -> Result<u64, Error> {
    assert!(n >= 1, "ambient dimension must be positive");
    if m == 0 {
        return Ok(1);
    }
    pow_frac_nearest(m, 2 * n * (n - 1), n + 1)
}

/// The finite-field upper bound U(n, m, p): for 0 < m <= floor(p^n/2) the
/// value (p^2 floor(m/p) + (m mod p)^2)^(n(n-1)/(n+1)) rounded to nearest,
/// reflected through m <-> p^n - m above the midpoint, and 1 at m = 0, p^n.
pub fn modified_bound(n: u32, m: u64, p: u32) -> Result<u64, Error> {
    assert!(n >= 1, "ambient dimension must be positive");
    let total = BigUint::from(p).pow(n);
    if BigUint::from(m) > total {
        return Err(Error::PointCountOutOfRange {
            m,
            total: total.to_u64().unwrap_or(u64::MAX),
        });
    }
    if m == 0 || BigUint::from(m) == total {
        return Ok(1);
    }
    let half = &total / 2u32;
    if BigUint::from(m) > half {
        let reflected = (total - m).to_u64().expect("smaller than m");
        return modified_bound(n, reflected, p);
    }
    let p64 = u64::from(p);
    let base = p64 * p64 * (m / p64) + (m % p64) * (m % p64);
    pow_frac_nearest(base, n * (n - 1), n + 1)
}

/// Largest possible coordinate sum of a staircase of m cells with column
/// heights capped at p: full columns of height p plus one partial column.
pub fn max_coordinate_sum(m: u64, p: u32) -> u64 {
    let p = u64::from(p);
    let r = m % p;
    p * (p - 1) / 2 * (m / p) + r * r.saturating_sub(1) / 2
}

/// Both bounds for one (n, m, p) cell, with the surveyed maximum when known.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: u32,
    pub m: u64,
    pub p: u32,
    pub actual_max: Option<u64>,
    pub original_bound: u64,
    pub modified_bound: u64,
}

impl BoundReport {
    pub fn new(n: u32, m: u64, p: u32, actual_max: Option<u64>) -> Result<Self, Error> {
        Ok(BoundReport {
            n,
            m,
            p,
            actual_max,
            original_bound: onn_bound(n, m)?,
            modified_bound: modified_bound(n, m, p)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeModulus;

    fn pt(p: u32, coords: &[i64]) -> Point {
        Point::from_ints(PrimeModulus::new(p).unwrap(), coords)
    }

    #[test]
    fn piecewise_functions() {
        assert_eq!(b0(0), 1);
        assert_eq!(b0(1), 0);
        assert_eq!(b0(7), 0);
        assert_eq!(b1(1), 1);
        assert_eq!(b1(2), 0);
        assert_eq!(b1(3), 0);
        assert_eq!(b2(-1), 0);
        assert_eq!(b2(0), 0);
        assert_eq!(b2(3), 3);
    }

    #[test]
    #[should_panic(expected = "positive arguments")]
    fn b1_rejects_zero() {
        b1(0);
    }

    #[test]
    fn two_point_examples() {
        assert_eq!(n2_count(&pt(2, &[1, 0, 0]), &pt(2, &[0, 1, 0])), 2);
        assert_eq!(n2_count(&pt(2, &[0, 0]), &pt(2, &[1, 1])), 2);
        assert_eq!(n2_count(&pt(3, &[0, 0]), &pt(3, &[0, 2])), 1);
        // maximum n iff all coordinates differ
        assert_eq!(n2_count(&pt(2, &[0, 0, 0, 0]), &pt(2, &[1, 1, 1, 1])), 4);
    }

    #[test]
    fn three_point_examples() {
        assert_eq!(n3_count_2d(&pt(2, &[1, 0]), &pt(2, &[0, 1]), &pt(2, &[0, 0])), 1);
        assert_eq!(n3_count_2d(&pt(2, &[0, 0]), &pt(2, &[0, 1]), &pt(2, &[1, 1])), 1);
        assert_eq!(n3_count_2d(&pt(2, &[0, 0]), &pt(2, &[1, 1]), &pt(2, &[1, 0])), 1);

        assert_eq!(
            n3_count_3d(&pt(2, &[1, 0, 0]), &pt(2, &[0, 1, 0]), &pt(2, &[0, 0, 1])),
            3
        );
        assert_eq!(
            n3_count_3d(&pt(2, &[0, 1, 0]), &pt(2, &[0, 1, 1]), &pt(2, &[1, 1, 1])),
            1
        );
        assert_eq!(
            n3_count_3d(&pt(2, &[0, 0, 1]), &pt(2, &[0, 1, 1]), &pt(2, &[1, 1, 0])),
            2
        );
    }

    #[test]
    fn original_bound_table_values() {
        // (n, m) -> bound, from the published survey tables
        let cases = [
            (2, 0, 1),
            (2, 1, 1),
            (2, 2, 3),
            (2, 3, 4),
            (2, 4, 6),
            (3, 2, 8),
            (3, 3, 27),
            (3, 4, 64),
            (3, 5, 125),
            (3, 6, 216),
            (3, 7, 343),
            (3, 8, 512),
            (4, 2, 28),
            (4, 3, 195),
            (4, 4, 776),
            (5, 4, 10321),
            (2, 5, 9),
            (2, 6, 11),
            (2, 7, 13),
            (2, 8, 16),
            (2, 9, 19),
        ];
        for (n, m, expected) in cases {
            assert_eq!(onn_bound(n, m).unwrap(), expected, "n={n} m={m}");
        }
    }

    #[test]
    fn modified_bound_table_values() {
        let cases = [
            // p = 2, n = 2
            (2, 0, 2, 1),
            (2, 1, 2, 1),
            (2, 2, 2, 3),
            (2, 3, 2, 1),
            (2, 4, 2, 1),
            // p = 2, n = 3
            (3, 0, 2, 1),
            (3, 1, 2, 1),
            (3, 2, 2, 8),
            (3, 3, 2, 11),
            (3, 4, 2, 23),
            (3, 5, 2, 11),
            (3, 6, 2, 8),
            (3, 7, 2, 1),
            (3, 8, 2, 1),
            // p = 3, n = 2
            (2, 1, 3, 1),
            (2, 2, 3, 3),
            (2, 3, 3, 4),
            (2, 4, 3, 5),
            (2, 5, 3, 5),
            (2, 6, 3, 4),
            (2, 7, 3, 3),
            (2, 8, 3, 1),
            (2, 9, 3, 1),
            // m = 4, p = 2 column
            (5, 4, 2, 1024),
        ];
        for (n, m, p, expected) in cases {
            assert_eq!(modified_bound(n, m, p).unwrap(), expected, "n={n} m={m} p={p}");
        }
    }

    #[test]
    fn modified_bound_symmetric() {
        for (n, p) in [(2u32, 2u32), (3, 2), (4, 2), (2, 3)] {
            let total = (p as u64).pow(n);
            for m in 0..=total {
                assert_eq!(
                    modified_bound(n, m, p).unwrap(),
                    modified_bound(n, total - m, p).unwrap(),
                    "n={n} p={p} m={m}"
                );
            }
        }
    }

    #[test]
    fn modified_bound_out_of_range() {
        assert!(modified_bound(2, 5, 2).is_err());
    }

    #[test]
    fn modified_never_exceeds_original_on_table_grid() {
        for (n, p, max_m) in [(2u32, 2u32, 4u64), (3, 2, 8), (4, 2, 8), (2, 3, 9), (5, 2, 4)] {
            for m in 1..=max_m {
                assert!(
                    modified_bound(n, m, p).unwrap() <= onn_bound(n, m).unwrap(),
                    "n={n} m={m} p={p}"
                );
            }
        }
    }

    #[test]
    fn coordinate_sum_examples_and_oracle() {
        assert_eq!(max_coordinate_sum(2, 2), 1);
        for p in [2u32, 3, 5] {
            assert_eq!(max_coordinate_sum(u64::from(p), p), u64::from(p * (p - 1) / 2));
        }
        assert_eq!(max_coordinate_sum(0, 3), 0);

        // Brute force: maximize sum of C(h, 2) over partitions of m into
        // parts of size <= p (column stacking).
        fn best_partition(m: u64, p: u64, largest: u64) -> u64 {
            if m == 0 {
                return 0;
            }
            (1..=largest.min(m))
                .map(|part| part * (part - 1) / 2 + best_partition(m - part, p, part))
                .max()
                .unwrap()
        }
        for p in [2u32, 3, 5] {
            for m in 0..=12u64 {
                assert_eq!(
                    max_coordinate_sum(m, p),
                    best_partition(m, u64::from(p), u64::from(p)),
                    "m={m} p={p}"
                );
            }
        }
    }

    #[test]
    fn bound_report_composes() {
        let r = BoundReport::new(3, 4, 2, Some(3)).unwrap();
        assert_eq!(r.original_bound, 64);
        assert_eq!(r.modified_bound, 23);
    }
}
