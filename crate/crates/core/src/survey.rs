//! Exhaustive and sampled surveys: for each subset size m, the maximum
//! basis count over all (or sampled) m-subsets of Z_p^n, with a witness and
//! both upper bounds.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::enumerate_with_staircases;
use crate::error::Error;
use crate::ff::PrimeModulus;
use crate::formulas::{modified_bound, onn_bound};
use crate::ideal::{DataSet, Point};
use crate::staircase::enumerate_staircases;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub modulus: PrimeModulus,
    pub num_vars: usize,
    pub m_min: usize,
    pub m_max: usize,
    /// Largest number of subsets enumerated exactly per m.
    pub budget: u64,
    /// Fall back to uniform sampling of this many subsets when the exact
    /// count exceeds the budget; results become lower bounds.
    pub sample: Option<u64>,
    pub seed: u64,
}

impl SurveyConfig {
    pub fn exact(modulus: PrimeModulus, num_vars: usize, m_min: usize, m_max: usize) -> Self {
        SurveyConfig {
            modulus,
            num_vars,
            m_min,
            m_max,
            budget: DEFAULT_BUDGET,
            sample: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRow {
    pub m: usize,
    pub actual_max: u64,
    pub original_bound: u64,
    pub modified_bound: u64,
    /// One subset attaining the maximum (lexicographically least in exact
    /// mode), as coordinate vectors.
    pub witness: Vec<Vec<u32>>,
    /// False when the row comes from sampling, making actual_max a lower
    /// bound.
    pub exact: bool,
    /// Staircases that passed the rank test but no term order realizes,
    /// summed over the subsets visited at this m.
    pub admissible_unrealizable: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub p: u32,
    pub n: usize,
    pub rows: Vec<SurveyRow>,
}

impl SurveyReport {
    pub fn row(&self, m: usize) -> Option<&SurveyRow> {
        self.rows.iter().find(|r| r.m == m)
    }
}

#[derive(Clone)]
struct Acc {
    max: u64,
    rank: u64,
    indices: Vec<usize>,
    rejected: u64,
}

impl Acc {
    fn identity() -> Self {
        Acc {
            max: 0,
            rank: u64::MAX,
            indices: Vec::new(),
            rejected: 0,
        }
    }

    /// Associative and commutative: larger count wins, ties go to the
    /// lexicographically earlier subset (smaller enumeration rank), and
    /// rejection counters add. Parallel reduction order cannot change the
    /// outcome.
    fn combine(a: Acc, b: Acc) -> Acc {
        let rejected = a.rejected + b.rejected;
        let mut best = if (b.max, a.rank) > (a.max, b.rank) { b } else { a };
        best.rejected = rejected;
        best
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Runs the survey. Fails with a budget error when some m needs more
/// subsets than allowed and sampling is off, and with an invariant
/// violation if any row contradicts the modified bound or the
/// complement symmetry (either would falsify a theorem as implemented).
pub fn run_survey(cfg: &SurveyConfig) -> Result<SurveyReport, Error> {
    let p = cfg.modulus.get();
    let n = cfg.num_vars;
    let total_big = BigUint::from(p).pow(n as u32);
    let total = total_big
        .to_usize()
        .filter(|&t| t <= 4096)
        .ok_or_else(|| Error::Unsupported("ambient box too large to survey".into()))?;
    if cfg.m_max > total || cfg.m_min > cfg.m_max {
        return Err(Error::PointCountOutOfRange {
            m: cfg.m_max as u64,
            total: total as u64,
        });
    }
    let box_pts = DataSet::box_points(cfg.modulus, n);

    let mut rows = Vec::new();
    for m in cfg.m_min..=cfg.m_max {
        rows.push(survey_row(cfg, m, total, &box_pts)?);
    }

    for row in &rows {
        if row.actual_max > row.modified_bound {
            return Err(Error::InvariantViolation(format!(
                "m = {}: surveyed maximum {} exceeds the modified bound {}",
                row.m, row.actual_max, row.modified_bound
            )));
        }
    }
    for row in &rows {
        let mirror = total - row.m;
        if let Some(other) = rows.iter().find(|r| r.m == mirror) {
            if row.exact && other.exact && row.actual_max != other.actual_max {
                return Err(Error::InvariantViolation(format!(
                    "complement symmetry broken: max at m = {} is {} but at m = {} is {}",
                    row.m, row.actual_max, other.m, other.actual_max
                )));
            }
        }
    }

    Ok(SurveyReport { p, n, rows })
}

fn survey_row(
    cfg: &SurveyConfig,
    m: usize,
    total: usize,
    box_pts: &[Point],
) -> Result<SurveyRow, Error> {
    let staircases = enumerate_staircases(cfg.num_vars, cfg.modulus.get(), m)?;
    let subsets = binomial(total, m);
    let exact = subsets <= BigUint::from(cfg.budget);

    let eval = |rank: u64, indices: &[usize]| -> Acc {
        let pts: Vec<Point> = indices.iter().map(|&i| box_pts[i].clone()).collect();
        let s = DataSet::new(cfg.modulus, cfg.num_vars, pts).expect("indices are distinct");
        let coll = enumerate_with_staircases(&s, &staircases);
        Acc {
            max: coll.count() as u64,
            rank,
            indices: indices.to_vec(),
            rejected: coll.admissible_unrealizable() as u64,
        }
    };

    let acc = if exact {
        (0..total)
            .combinations(m)
            .enumerate()
            .par_bridge()
            .map(|(rank, indices)| eval(rank as u64, &indices))
            .reduce(Acc::identity, Acc::combine)
    } else {
        let k = cfg.sample.ok_or(Error::BudgetExceeded {
            m,
            required: subsets.to_u64().unwrap_or(u64::MAX),
            budget: cfg.budget,
        })?;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed ^ (m as u64));
        let draws: Vec<Vec<usize>> = (0..k)
            .map(|_| {
                let mut idx = rand::seq::index::sample(&mut rng, total, m).into_vec();
                idx.sort_unstable();
                idx
            })
            .collect();
        draws
            .par_iter()
            .enumerate()
            .map(|(rank, indices)| eval(rank as u64, indices))
            .reduce(Acc::identity, Acc::combine)
    };

    Ok(SurveyRow {
        m,
        actual_max: acc.max,
        original_bound: onn_bound(cfg.num_vars as u32, m as u64)?,
        modified_bound: modified_bound(cfg.num_vars as u32, m as u64, cfg.modulus.get())?,
        witness: acc
            .indices
            .iter()
            .map(|&i| box_pts[i].values())
            .collect(),
        exact,
        admissible_unrealizable: acc.rejected,
    })
}
