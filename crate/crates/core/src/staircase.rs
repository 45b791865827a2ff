//! Staircases: divisibility-closed exponent sets in the box {0..p-1}^n,
//! the candidate standard-monomial sets of vanishing ideals.

use crate::error::Error;
use crate::poly::Monomial;

/// A divisibility-closed set of exponent vectors inside {0..p-1}^n.
///
/// Cells are stored sorted (administrative monomial order), so staircases
/// compare and hash canonically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Staircase {
    num_vars: usize,
    bound: u32,
    cells: Vec<Monomial>,
}

impl Staircase {
    /// Validates closure and the exponent bound.
    pub fn new(num_vars: usize, bound: u32, mut cells: Vec<Monomial>) -> Result<Self, Error> {
        cells.sort();
        cells.dedup();
        for cell in &cells {
            if cell.num_vars() != num_vars {
                return Err(Error::data("staircase cell has wrong dimension"));
            }
            if cell.exponents().iter().any(|&e| e >= bound) {
                return Err(Error::data(format!(
                    "staircase cell {cell} exceeds the exponent bound {}",
                    bound - 1
                )));
            }
        }
        let stair = Staircase {
            num_vars,
            bound,
            cells,
        };
        for cell in &stair.cells {
            for pred in immediate_predecessors(cell) {
                if !stair.contains(&pred) {
                    return Err(Error::data(format!(
                        "not divisibility-closed: {cell} present but {pred} missing"
                    )));
                }
            }
        }
        Ok(stair)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Exponent cap plus one: cells live in {0..bound-1}^n.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Monomial] {
        &self.cells
    }

    pub fn contains(&self, mon: &Monomial) -> bool {
        self.cells.binary_search(mon).is_ok()
    }

    /// Minimal generators of the complement ideal: box monomials outside the
    /// staircase whose immediate predecessors all lie inside, plus x_i^p for
    /// every variable whose pure powers are maxed out at p-1. Every monomial
    /// outside the staircase is divisible by one of these.
    pub fn corners(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for cell in box_monomials(self.num_vars, self.bound) {
            if !self.contains(&cell)
                && immediate_predecessors(&cell).into_iter().all(|m| self.contains(&m))
            {
                out.push(cell);
            }
        }
        for i in 0..self.num_vars {
            let mut maxed = vec![0u32; self.num_vars];
            maxed[i] = self.bound - 1;
            if self.contains(&Monomial::new(maxed)) {
                let mut exps = vec![0u32; self.num_vars];
                exps[i] = self.bound;
                out.push(Monomial::new(exps));
            }
        }
        out.sort();
        out
    }
}

fn immediate_predecessors(mon: &Monomial) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..mon.num_vars() {
        if mon.exponent(i) > 0 {
            let mut exps = mon.exponents().to_vec();
            exps[i] -= 1;
            out.push(Monomial::new(exps));
        }
    }
    out
}

/// All monomials of {0..bound-1}^n sorted by total degree, then
/// lexicographically: a linear extension of divisibility.
pub fn box_monomials(num_vars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    loop {
        out.push(Monomial::new(exps.clone()));
        let mut i = 0;
        loop {
            if i == num_vars {
                out.sort_by_key(|m| (m.total_degree(), m.exponents().to_vec()));
                return out;
            }
            exps[i] += 1;
            if exps[i] < bound {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// All divisibility-closed m-subsets of {0..p-1}^n, each exactly once, in a
/// deterministic canonical order.
///
/// Cells are indexed along a linear extension of divisibility, so every
/// prefix of an index-sorted staircase is itself a staircase; the search
/// extends by strictly increasing index and only with cells whose immediate
/// predecessors are already present.
pub fn enumerate_staircases(num_vars: usize, p: u32, m: usize) -> Result<Vec<Staircase>, Error> {
    let total = (p as u64).checked_pow(num_vars as u32);
    match total {
        Some(t) if (m as u64) <= t => {}
        _ => {
            return Err(Error::PointCountOutOfRange {
                m: m as u64,
                total: total.unwrap_or(u64::MAX),
            })
        }
    }
    let cells = box_monomials(num_vars, p);
    let pred_indices: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| {
            immediate_predecessors(c)
                .iter()
                .map(|q| cells.iter().position(|x| x == q).expect("predecessor in box"))
                .collect()
        })
        .collect();

    let mut result = Vec::new();
    let mut present = vec![false; cells.len()];
    let mut chosen: Vec<usize> = Vec::new();

    fn dfs(
        start: usize,
        m: usize,
        cells: &[Monomial],
        pred_indices: &[Vec<usize>],
        present: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        result: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == m {
            result.push(chosen.clone());
            return;
        }
        let missing = m - chosen.len();
        for idx in start..cells.len() {
            if cells.len() - idx < missing {
                break;
            }
            if pred_indices[idx].iter().all(|&q| present[q]) {
                present[idx] = true;
                chosen.push(idx);
                dfs(idx + 1, m, cells, pred_indices, present, chosen, result);
                chosen.pop();
                present[idx] = false;
            }
        }
    }

    let mut picks = Vec::new();
    dfs(0, m, &cells, &pred_indices, &mut present, &mut chosen, &mut picks);
    for pick in picks {
        let stair_cells: Vec<Monomial> = pick.iter().map(|&i| cells[i].clone()).collect();
        result.push(Staircase::new(num_vars, p, stair_cells).expect("DFS output is closed"));
    }
    Ok(result)
}
