use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ff::{FieldElement, PrimeModulus};

use super::monomial::Monomial;
use super::order::TermOrder;

/// A multivariate polynomial over Z_p with a sparse term map.
///
/// No zero coefficients are ever stored; the map's key order (the
/// administrative monomial order) makes equality, hashing and printing
/// canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    num_vars: usize,
    modulus: PrimeModulus,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(num_vars: usize, modulus: PrimeModulus) -> Self {
        Polynomial {
            num_vars,
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: FieldElement) -> Self {
        let mut poly = Self::zero(num_vars, c.modulus());
        if !c.is_zero() {
            poly.terms.insert(Monomial::one(num_vars), c);
        }
        poly
    }

    /// Single term c * x^mon.
    pub fn term(mon: Monomial, c: FieldElement) -> Self {
        let mut poly = Self::zero(mon.num_vars(), c.modulus());
        if !c.is_zero() {
            poly.terms.insert(mon, c);
        }
        poly
    }

    /// The variable x_i as a polynomial.
    pub fn variable(i: usize, num_vars: usize, modulus: PrimeModulus) -> Self {
        Self::term(Monomial::var(i, num_vars), modulus.one())
    }

    pub fn from_terms(
        num_vars: usize,
        modulus: PrimeModulus,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut poly = Self::zero(num_vars, modulus);
        for (mon, c) in terms {
            poly.add_term(&mon, c);
        }
        poly
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, mon: &Monomial) -> FieldElement {
        self.terms
            .get(mon)
            .copied()
            .unwrap_or_else(|| self.modulus.zero())
    }

    fn add_term(&mut self, mon: &Monomial, c: FieldElement) {
        assert_eq!(mon.num_vars(), self.num_vars, "ambient mismatch");
        assert_eq!(c.modulus(), self.modulus, "modulus mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(mon) {
            Some(existing) => {
                let sum = *existing + c;
                if sum.is_zero() {
                    self.terms.remove(mon);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mon.clone(), c);
            }
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        assert_eq!(c.modulus(), self.modulus, "modulus mismatch");
        if c.is_zero() {
            return Self::zero(self.num_vars, self.modulus);
        }
        Polynomial {
            num_vars: self.num_vars,
            modulus: self.modulus,
            terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect(),
        }
    }

    /// self * c * x^mon.
    pub fn mul_term(&self, mon: &Monomial, c: FieldElement) -> Polynomial {
        assert_eq!(mon.num_vars(), self.num_vars, "ambient mismatch");
        assert_eq!(c.modulus(), self.modulus, "modulus mismatch");
        if c.is_zero() {
            return Self::zero(self.num_vars, self.modulus);
        }
        Polynomial {
            num_vars: self.num_vars,
            modulus: self.modulus,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.mul(mon), v * c))
                .collect(),
        }
    }

    /// The order-maximal term of a nonzero polynomial.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(Monomial, FieldElement)> {
        let lead = order.max(self.terms.keys())?;
        Some((lead.clone(), self.terms[lead]))
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.num_vars, "evaluation dimension mismatch");
        let mut acc = self.modulus.zero();
        for (mon, &c) in &self.terms {
            let mut value = c;
            for (coord, &e) in point.iter().zip(mon.exponents()) {
                if e > 0 {
                    value = value * coord.pow(e);
                }
            }
            acc = acc + value;
        }
        acc
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.num_vars, other.num_vars, "ambient mismatch");
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
    }

    /// Terms sorted descending under `order`, rendered with coefficients in
    /// 0..p-1 and variables x1..xn.
    pub fn render(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut mons: Vec<&Monomial> = self.terms.keys().collect();
        mons.sort_by(|a, b| order.compare(b, a));
        let parts: Vec<String> = mons
            .into_iter()
            .map(|m| render_term(m, self.terms[m]))
            .collect();
        parts.join(" + ")
    }
}

pub(crate) fn render_term(mon: &Monomial, c: FieldElement) -> String {
    if mon.is_one() {
        format!("{}", c.value())
    } else if c.value() == 1 {
        format!("{mon}")
    } else {
        format!("{}*{mon}", c.value())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (mon, c) in &rhs.terms {
            out.add_term(mon, *c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (mon, c) in &rhs.terms {
            out.add_term(mon, -*c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            modulus: self.modulus,
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let mut out = Polynomial::zero(self.num_vars, self.modulus);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(&ma.mul(mb), *ca * *cb);
            }
        }
        out
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    /// Administrative total order used for canonical sorting of collections;
    /// compares term sequences in map order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.num_vars
            .cmp(&other.num_vars)
            .then_with(|| self.modulus.cmp(&other.modulus))
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&TermOrder::graded_lex(self.num_vars)))
    }
}
