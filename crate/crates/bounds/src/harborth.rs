//! Harborth's upper bound on the crossing number of `K_{x_1,...,x_k}`.
//!
//! The bound uses the total vertex count, called `t` here (the literature
//! writes `m`, which collides with the `m` of `K_{1,1,m,n}`), and `c`, the
//! number of odd parts. The last correction sum runs over pairs of parts; its
//! range is selectable because only the strict range `i < j` reproduces the
//! closed forms for `K_{m,n}`, `K_{1,m,n}`, `K_{2,m,n}` and `K_{1,1,m,n}`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SumRange {
    /// Pairs `i < j`.
    Strict,
    /// Pairs `i <= j`, diagonal included.
    Inclusive,
}

/// The range that agrees with the family closed forms.
pub const SELECTED_RANGE: SumRange = SumRange::Strict;

fn q(x: i64) -> i64 {
    (x / 2) * ((x - 1) / 2)
}

/// Exact value of the bound with the chosen summation range.
pub fn harborth_exact(sizes: &[usize], range: SumRange) -> Ratio<i64> {
    let xs: Vec<i64> = sizes.iter().map(|&s| s as i64).collect();
    let k = xs.len();
    let t: i64 = xs.iter().sum();
    let c: i64 = xs.iter().filter(|&&x| x % 2 == 1).count() as i64;

    let mut quad = 0i64;
    for i in 0..k {
        for j in i + 1..k {
            for r in j + 1..k {
                for s in r + 1..k {
                    quad += 3 * xs[i] * xs[j] * xs[r] * xs[s];
                }
            }
        }
    }
    let half_c = c / 2;
    let odd_pairs = 3 * (half_c * (half_c - 1) / 2);
    let mut parity = 0i64;
    for i in 0..k {
        for j in i + 1..k {
            parity += ((c - (xs[i] % 2 + xs[j] % 2)) / 2) * xs[i] * xs[j];
        }
    }
    let eighth = Ratio::new(quad + odd_pairs - parity, 8);

    let star: i64 = xs.iter().map(|&x| q(x) * ((t - x) / 2) * ((t - x - 1) / 2)).sum();
    let mut overlap = 0i64;
    for i in 0..k {
        let lo = match range {
            SumRange::Strict => i + 1,
            SumRange::Inclusive => i,
        };
        for j in lo..k {
            overlap += q(xs[i]) * q(xs[j]);
        }
    }
    eighth + Ratio::from_integer(star - overlap)
}

/// Harborth's bound with a selected range, floored to an integer.
pub fn harborth_bound_with(sizes: &[usize], range: SumRange) -> i64 {
    harborth_exact(sizes, range).floor().to_integer()
}

/// Harborth's bound with the selected (strict) range.
pub fn harborth_bound(sizes: &[usize]) -> i64 {
    harborth_bound_with(sizes, SELECTED_RANGE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{hc_value, zarankiewicz, Family};

    #[test]
    fn known_instances() {
        assert_eq!(harborth_bound(&[1, 1, 4, 4]), 24);
        assert_eq!(harborth_bound(&[1, 3, 3]), 3);
        assert_eq!(harborth_bound(&[3, 3]), 1);
    }

    #[test]
    fn inclusive_range_disagrees_with_closed_forms() {
        let mismatches = (1..=12)
            .flat_map(|m| (1..=12).map(move |n| (m, n)))
            .filter(|&(m, n)| {
                harborth_exact(&[1, 1, m, n], SumRange::Inclusive) != Ratio::from_integer(hc_value(Family::K11mn, m, n))
            })
            .count();
        assert!(mismatches > 0);
    }

    #[test]
    fn strict_range_is_integral_on_families() {
        for m in 1..=12 {
            for n in 1..=12 {
                for sizes in [vec![m, n], vec![1, m, n], vec![2, m, n], vec![1, 1, m, n]] {
                    assert!(harborth_exact(&sizes, SumRange::Strict).is_integer(), "{sizes:?}");
                }
                assert_eq!(harborth_bound(&[m, n]), zarankiewicz(m, n));
            }
        }
    }
}
