use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::monomial::Monomial;

/// A monomial order given by a nonnegative weight vector with a lexicographic
/// tiebreak on permuted coordinates.
///
/// Weights are kept as integers; rational weight vectors are scaled by the
/// common denominator on construction, which leaves the order unchanged.
/// Every reduced Gröbner basis of a zero-dimensional ideal is realized by an
/// order of this form, so nothing more general is needed here.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermOrder {
    weights: Vec<i128>,
    tiebreak: Vec<usize>,
}

// Comparing a weight against an exponent multiplies it by at most the total
// degree in play; this head-room keeps the dot products inside i128.
const MAX_WEIGHT: i128 = i128::MAX / (1 << 20);

impl TermOrder {
    /// Integer weight vector plus a tiebreak permutation of 0..n, highest
    /// priority first.
    pub fn weighted(weights: &[u64], tiebreak: &[usize]) -> Self {
        let w: Vec<i128> = weights.iter().map(|&x| x as i128).collect();
        Self::from_parts(w, tiebreak.to_vec())
    }

    /// Graded lexicographic: all weights 1, ties broken by x1 > x2 > ... > xn.
    pub fn graded_lex(num_vars: usize) -> Self {
        Self::from_parts(vec![1; num_vars], (0..num_vars).collect())
    }

    /// Scales a nonnegative rational weight vector to integers.
    pub fn from_rational_weights(weights: &[BigRational], tiebreak: &[usize]) -> Self {
        assert!(
            weights.iter().all(|w| !w.is_negative()),
            "weights must be nonnegative"
        );
        let mut denom_lcm = BigInt::from(1u32);
        for w in weights {
            denom_lcm = denom_lcm.lcm(w.denom());
        }
        let scaled: Vec<i128> = weights
            .iter()
            .map(|w| {
                let v = w.numer() * (&denom_lcm / w.denom());
                i128::try_from(v).expect("scaled weight exceeds supported magnitude")
            })
            .collect();
        Self::from_parts(scaled, tiebreak.to_vec())
    }

    fn from_parts(weights: Vec<i128>, tiebreak: Vec<usize>) -> Self {
        let n = weights.len();
        assert_eq!(tiebreak.len(), n, "tiebreak length mismatch");
        let mut seen = vec![false; n];
        for &i in &tiebreak {
            assert!(i < n && !seen[i], "tiebreak is not a permutation of 0..n");
            seen[i] = true;
        }
        assert!(
            weights.iter().all(|&w| (0..=MAX_WEIGHT).contains(&w)),
            "weight out of supported range"
        );
        TermOrder { weights, tiebreak }
    }

    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i128] {
        &self.weights
    }

    pub fn tiebreak(&self) -> &[usize] {
        &self.tiebreak
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.num_vars(), self.weights.len(), "dimension mismatch");
        assert_eq!(b.num_vars(), self.weights.len(), "dimension mismatch");
        let wa: i128 = self
            .weights
            .iter()
            .zip(a.exponents())
            .map(|(w, &e)| w * i128::from(e))
            .sum();
        let wb: i128 = self
            .weights
            .iter()
            .zip(b.exponents())
            .map(|(w, &e)| w * i128::from(e))
            .sum();
        match wa.cmp(&wb) {
            Ordering::Equal => {
                for &i in &self.tiebreak {
                    match a.exponent(i).cmp(&b.exponent(i)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            other => other,
        }
    }

    /// Maximum under this order; `compare` returns `Equal` only for identical
    /// monomials, so the result is deterministic.
    pub fn max<'a>(&self, mons: impl IntoIterator<Item = &'a Monomial>) -> Option<&'a Monomial> {
        mons.into_iter().max_by(|a, b| self.compare(a, b))
    }
}
