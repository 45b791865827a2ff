use std::fmt;

use crate::ff::FieldElement;

/// A monomial in n variables, stored as its exponent vector.
///
/// The derived `Ord` (lexicographic on exponents) is an administrative order
/// used for canonical storage and printing; it is *not* a monomial order.
/// Comparisons that matter mathematically go through `TermOrder`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    /// x_i (0-based index).
    pub fn var(i: usize, num_vars: usize) -> Self {
        assert!(i < num_vars, "variable index out of range");
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.check_ambient(other);
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.check_ambient(other);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// self / other, when other divides self.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.check_ambient(other);
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(|exps| Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.check_ambient(other);
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.exps.len(), "evaluation dimension mismatch");
        let modulus = point
            .first()
            .map(|e| e.modulus())
            .expect("evaluation of a 0-variable monomial needs a modulus context");
        let mut acc = modulus.one();
        for (coord, &e) in point.iter().zip(&self.exps) {
            if e > 0 {
                acc = acc * coord.pow(e);
            }
        }
        acc
    }

    fn check_ambient(&self, other: &Monomial) {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomials from different ambient rings"
        );
    }
}

impl fmt::Display for Monomial {
    /// Variables print as x1..xn; factors are joined with `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
