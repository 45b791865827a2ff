//! Strict linear inequality feasibility over exact rationals via
//! Fourier–Motzkin elimination.
//!
//! The systems here are homogeneous (`w . d > 0` per row) and always carry
//! implicit positivity constraints `w_i > 0`, matching what term-order
//! realizability needs. All arithmetic is exact; rows are gcd-normalized
//! after every elimination step to keep the integers small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rows d each encoding the strict constraint w . d > 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictInequalitySystem {
    dim: usize,
    rows: Vec<Vec<i64>>,
}

impl StrictInequalitySystem {
    pub fn new(dim: usize, rows: Vec<Vec<i64>>) -> Self {
        for row in &rows {
            assert_eq!(row.len(), dim, "row dimension mismatch");
            assert!(row.iter().any(|&c| c != 0), "zero row is unsatisfiable");
        }
        StrictInequalitySystem { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Decides whether some strictly positive w satisfies every row of the
/// system, returning such a witness when one exists.
pub fn fm_feasible(sys: &StrictInequalitySystem) -> Option<Vec<BigRational>> {
    let dim = sys.dim;
    if dim == 0 {
        return sys.rows.is_empty().then(Vec::new);
    }

    // Initial system: the given rows plus positivity of every coordinate.
    let mut rows: Vec<Vec<BigInt>> = sys
        .rows
        .iter()
        .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    for i in 0..dim {
        let mut e = vec![BigInt::zero(); dim];
        e[i] = BigInt::one();
        rows.push(e);
    }
    normalize(&mut rows);

    // stages[k] = constraints in which variables 0..=k are live; variables
    // are eliminated from the highest down, through the last one, so every
    // inconsistency eventually surfaces as a variable-free row 0 > 0.
    let mut stages: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); dim];
    let mut current = rows;
    for k in (0..dim).rev() {
        if current.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return None; // derived 0 > 0
        }
        let mut next: Vec<Vec<BigInt>> = current
            .iter()
            .filter(|r| r[k].is_zero())
            .cloned()
            .collect();
        for p in current.iter().filter(|r| r[k].is_positive()) {
            for q in current.iter().filter(|r| r[k].is_negative()) {
                // (-q_k) * p + p_k * q cancels variable k; a positive
                // combination of strict inequalities stays strict.
                let combined: Vec<BigInt> = p
                    .iter()
                    .zip(q.iter())
                    .map(|(pv, qv)| pv * (-&q[k]) + qv * &p[k])
                    .collect();
                next.push(combined);
            }
        }
        normalize(&mut next);
        stages[k] = current;
        current = next;
    }
    if !current.is_empty() {
        return None; // only variable-free rows remain, each saying 0 > 0
    }

    // Back-substitution: assign w_0 from stages[0], then w_1 from stages[1]
    // with w_0 known, and so on. Positivity rows guarantee a lower bound at
    // every step, so the witness comes out strictly positive.
    let mut witness: Vec<BigRational> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for row in &stages[k] {
            if row[k].is_zero() {
                continue; // already satisfied at an earlier stage
            }
            let partial: BigRational = (0..k)
                .map(|j| BigRational::from(row[j].clone()) * &witness[j])
                .sum();
            let bound = -partial / BigRational::from(row[k].clone());
            if row[k].is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        let l = lower.expect("positivity row provides a lower bound");
        let value = match upper {
            Some(u) => {
                debug_assert!(l < u, "elimination guarantees a nonempty interval");
                (l + u) / BigRational::from(BigInt::from(2))
            }
            None => l + BigRational::one(),
        };
        witness.push(value);
    }
    debug_assert!(witness.iter().all(|w| w.is_positive()));
    Some(witness)
}

/// Divide every row by the gcd of its entries and drop duplicates,
/// preserving first-occurrence order.
fn normalize(rows: &mut Vec<Vec<BigInt>>) {
    for row in rows.iter_mut() {
        let mut g = BigInt::zero();
        for c in row.iter() {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in row.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    rows.retain(|r| seen.insert(r.clone()));
}
