//! Lattice-geometry predicates tying point configurations to basis counts:
//! coordinate changes, linked positions, convex-hull holes, the
//! added-point conjecture harness, and unique-basis augmentation search.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::count_gbs;
use crate::error::Error;
use crate::ff::PrimeModulus;
use crate::ideal::{DataSet, Point};
use crate::staircase::enumerate_staircases;

/// Number of coordinates where the two points differ.
pub fn coordinate_changes(p: &Point, q: &Point) -> usize {
    assert_eq!(p.num_vars(), q.num_vars(), "points from different spaces");
    p.coords()
        .iter()
        .zip(q.coords())
        .filter(|(a, b)| a.value() != b.value())
        .count()
}

/// Which quantifier "lies on the same grid lines as the points in S" uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum LinkMode {
    /// Some point of S shares an axis-parallel grid line with q (Hamming
    /// distance <= 1). This is the default reading.
    Exists,
    /// Every point of S does.
    ForAll,
}

/// True iff q lies on an axis-parallel grid line through S, under the given
/// quantifier. q must not already be in S.
pub fn is_linked(q: &Point, s: &DataSet, mode: LinkMode) -> bool {
    assert!(!s.contains(q), "candidate point is already in the set");
    let near = |pt: &Point| coordinate_changes(q, pt) <= 1;
    match mode {
        LinkMode::Exists => s.points().iter().any(near),
        LinkMode::ForAll => s.points().iter().all(near),
    }
}

/// Lattice points of the box inside the convex hull of T (boundary
/// included) that are not members of T.
pub fn hull_holes(t: &DataSet) -> Vec<Point> {
    assert!(!t.is_empty(), "hull of an empty set");
    DataSet::box_points(t.modulus(), t.num_vars())
        .into_iter()
        .filter(|pt| !t.contains(pt) && in_convex_hull(pt, t.points()))
        .collect()
}

/// Exact membership test: is q a convex combination of the given points?
///
/// Solves the phase-1 LP (find mu >= 0 with sum mu = 1, sum mu_i t_i = q) by
/// a dense simplex over exact rationals with Bland's rule, so degenerate
/// configurations (collinear, coplanar) are handled without tolerance knobs.
pub fn in_convex_hull(q: &Point, points: &[Point]) -> bool {
    let n = q.num_vars();
    let k = points.len();
    if k == 0 {
        return false;
    }
    let rows = n + 1;
    // Tableau columns: k combination weights, `rows` artificials, rhs.
    let cols = k + rows + 1;
    let big = |v: u32| BigRational::from(BigInt::from(v));
    let mut tab: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols]; rows];
    for (j, pt) in points.iter().enumerate() {
        for i in 0..n {
            tab[i][j] = big(pt.coords()[i].value());
        }
        tab[n][j] = BigRational::one();
    }
    for i in 0..rows {
        tab[i][k + i] = BigRational::one();
        tab[i][cols - 1] = if i < n { big(q.coords()[i].value()) } else { BigRational::one() };
    }
    let mut basis: Vec<usize> = (k..k + rows).collect();

    // Phase-1 objective: minimize the sum of artificials. The cost row
    // starts as minus the sum of the constraint rows, which prices the
    // artificial basis at zero.
    let mut cost = vec![BigRational::zero(); cols];
    for row in &tab {
        for (c, v) in cost.iter_mut().zip(row) {
            *c -= v;
        }
    }
    for j in k..k + rows {
        cost[j] = BigRational::zero();
    }

    loop {
        // Bland: entering variable = smallest index with negative reduced cost.
        let Some(enter) = (0..cols - 1).find(|&j| cost[j].is_negative()) else {
            break;
        };
        // Ratio test, ties broken by smallest basis variable index.
        let mut pivot: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][cols - 1] / &tab[i][enter];
                let better = match &pivot {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && basis[i] < basis[*bi])
                    }
                };
                if better {
                    pivot = Some((i, ratio));
                }
            }
        }
        let Some((prow, _)) = pivot else {
            // Unbounded phase-1 cannot happen (objective bounded below by 0).
            break;
        };
        // Pivot: normalize the row, then clear the column.
        let piv = tab[prow][enter].clone();
        for v in tab[prow].iter_mut() {
            *v /= &piv;
        }
        for i in 0..rows {
            if i != prow && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..cols {
                    let delta = &f * &tab[prow][j];
                    tab[i][j] -= delta;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..cols {
                let delta = &f * &tab[prow][j];
                cost[j] -= delta;
            }
        }
        basis[prow] = enter;
    }

    // Feasible iff all artificials were driven to zero.
    let objective: BigRational = (0..rows)
        .filter(|&i| basis[i] >= k)
        .map(|i| tab[i][cols - 1].clone())
        .sum();
    objective.is_zero()
}

/// One conjecture check: a linked, hole-free augmentation and the two counts.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureCase {
    pub base: Vec<Vec<u32>>,
    pub added: Vec<u32>,
    pub base_count: u64,
    pub augmented_count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub p: u32,
    pub n: usize,
    pub max_m: usize,
    pub mode: LinkMode,
    /// Augmentations that satisfied the linked + hole-free hypothesis.
    pub pairs_tested: u64,
    /// Hypothesis-satisfying augmentations where the count went up. The
    /// conjecture predicts this stays empty; violations are reported, never
    /// asserted.
    pub violations: Vec<ConjectureCase>,
}

/// Exhaustively tests the added-point conjecture over Z_p^n for every
/// nonempty S with |S| <= max_m and every linked, hole-free augmentation.
pub fn check_conjecture(
    modulus: PrimeModulus,
    n: usize,
    max_m: usize,
    mode: LinkMode,
) -> Result<ConjectureReport, Error> {
    let total = (modulus.get() as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= 32)
        .ok_or_else(|| {
            Error::Unsupported(format!(
                "p^n exceeds the exhaustive-conjecture guard of 32 points; survey a sample instead"
            ))
        })? as usize;
    let box_pts = DataSet::box_points(modulus, n);
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for m in 1..=max_m.min(total.saturating_sub(1)) {
        subsets.extend(combinations(total, m));
    }

    let per_subset: Vec<(u64, Vec<ConjectureCase>)> = subsets
        .par_iter()
        .map(|indices| {
            let pts: Vec<Point> = indices.iter().map(|&i| box_pts[i].clone()).collect();
            let s = DataSet::new(modulus, n, pts).expect("distinct by construction");
            let base_count = count_gbs(&s) as u64;
            let mut tested = 0u64;
            let mut violations = Vec::new();
            for q in &box_pts {
                if s.contains(q) || !is_linked(q, &s, mode) {
                    continue;
                }
                let t = s.with_points(std::slice::from_ref(q)).expect("new point");
                if !hull_holes(&t).is_empty() {
                    continue;
                }
                tested += 1;
                let augmented_count = count_gbs(&t) as u64;
                if augmented_count > base_count {
                    violations.push(ConjectureCase {
                        base: s.points().iter().map(Point::values).collect(),
                        added: q.values(),
                        base_count,
                        augmented_count,
                    });
                }
            }
            (tested, violations)
        })
        .collect();

    let mut report = ConjectureReport {
        p: modulus.get(),
        n,
        max_m,
        mode,
        pairs_tested: 0,
        violations: Vec::new(),
    };
    for (tested, violations) in per_subset {
        report.pairs_tested += tested;
        report.violations.extend(violations);
    }
    Ok(report)
}

/// Lexicographic k-combinations of 0..n.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A minimum set of added points making the basis unique.
#[derive(Clone, Debug)]
pub struct AugmentationResult {
    pub base: DataSet,
    pub added: Vec<Point>,
    pub final_count: usize,
}

/// Breadth-first search over addition sets of size 0, 1, ..., budget for a
/// minimum-cardinality S_add with a unique basis on S union S_add. Ties are
/// broken by canonical point order, so the result is deterministic.
pub fn find_unique_augmentation(s: &DataSet, budget: usize) -> Option<AugmentationResult> {
    if count_gbs(s) == 1 {
        return Some(AugmentationResult {
            base: s.clone(),
            added: Vec::new(),
            final_count: 1,
        });
    }
    let candidates: Vec<Point> = DataSet::box_points(s.modulus(), s.num_vars())
        .into_iter()
        .filter(|pt| !s.contains(pt))
        .collect();
    // Hoist the staircase table: every candidate augmentation of one size
    // has the same cardinality.
    for k in 1..=budget.min(candidates.len()) {
        let m = s.len() + k;
        let staircases =
            enumerate_staircases(s.num_vars(), s.modulus().get(), m).expect("m <= p^n");
        let combos = combinations(candidates.len(), k);
        let hit = combos
            .par_iter()
            .enumerate()
            .filter_map(|(rank, indices)| {
                let extra: Vec<Point> = indices.iter().map(|&i| candidates[i].clone()).collect();
                let t = s.with_points(&extra).expect("points are new");
                let coll = crate::enumerate::enumerate_with_staircases(&t, &staircases);
                (coll.count() == 1).then_some((rank, extra))
            })
            .min_by_key(|(rank, _)| *rank);
        if let Some((_, added)) = hit {
            return Some(AugmentationResult {
                base: s.clone(),
                added,
                final_count: 1,
            });
        }
    }
    None
}
