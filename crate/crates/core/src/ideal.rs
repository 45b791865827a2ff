//! Vanishing ideals of point sets: data sets, evaluation matrices, the
//! Buchberger–Möller algorithm, and interpolation of input-output data.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::ff::{FieldElement, MatrixGF, PrimeModulus};
use crate::poly::{Monomial, Polynomial, ReducedGB, TermOrder};

/// A point of Z_p^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<FieldElement>,
}

impl Point {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        if let Some(first) = coords.first() {
            assert!(
                coords.iter().all(|c| c.modulus() == first.modulus()),
                "mixed moduli in point"
            );
        }
        Point { coords }
    }

    pub fn from_ints(modulus: PrimeModulus, coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| modulus.element(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn num_vars(&self) -> usize {
        self.coords.len()
    }

    pub fn values(&self) -> Vec<u32> {
        self.coords.iter().map(|c| c.value()).collect()
    }
}

impl fmt::Display for Point {
    /// Space-separated coordinate values, as in the data file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.coords.iter().map(|c| c.value().to_string()).collect();
        write!(f, "{}", vals.join(" "))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A set of distinct points in Z_p^n; the cardinality m is always derived.
///
/// Points are stored sorted, so equal sets have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DataSet {
    modulus: PrimeModulus,
    num_vars: usize,
    points: Vec<Point>,
}

impl DataSet {
    pub fn new(
        modulus: PrimeModulus,
        num_vars: usize,
        points: Vec<Point>,
    ) -> Result<Self, Error> {
        let mut points = points;
        for pt in &points {
            if pt.num_vars() != num_vars {
                return Err(Error::data(format!(
                    "point ({pt}) has {} coordinates, expected {num_vars}",
                    pt.num_vars()
                )));
            }
            if let Some(c) = pt.coords().first() {
                if c.modulus() != modulus {
                    return Err(Error::data("point modulus differs from data set modulus"));
                }
            }
        }
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::data(format!("duplicate point ({})", w[0])));
        }
        Ok(DataSet {
            modulus,
            num_vars,
            points,
        })
    }

    pub fn empty(modulus: PrimeModulus, num_vars: usize) -> Self {
        DataSet {
            modulus,
            num_vars,
            points: Vec::new(),
        }
    }

    pub fn from_ints(modulus: PrimeModulus, points: &[&[i64]]) -> Result<Self, Error> {
        let num_vars = points.first().map_or(0, |p| p.len());
        let pts = points
            .iter()
            .map(|p| Point::from_ints(modulus, p))
            .collect();
        Self::new(modulus, num_vars, pts)
    }

    /// Text format: first line `p n`, then one point per line as n
    /// space-separated integers in 0..p. Blank lines and `#` comments are
    /// allowed.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = content_lines(text);
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `p n` header"))?;
        let mut it = header.split_whitespace();
        let p: u32 = parse_field(lineno, it.next(), "p")?;
        let n: usize = parse_field(lineno, it.next(), "n")?;
        if it.next().is_some() {
            return Err(Error::parse(lineno, "header must be exactly `p n`"));
        }
        let modulus = PrimeModulus::new(p).map_err(|e| Error::parse(lineno, e.to_string()))?;
        let mut points = Vec::new();
        for (lineno, line) in lines {
            points.push(parse_point(modulus, n, lineno, line)?);
        }
        let mut set = Self::new(modulus, n, points)?;
        set.points.sort();
        Ok(set)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains(&self, pt: &Point) -> bool {
        self.points.binary_search(pt).is_ok()
    }

    /// Number of points in the ambient box Z_p^n.
    pub fn ambient_size(&self) -> u64 {
        (self.modulus.get() as u64).pow(self.num_vars as u32)
    }

    /// All points of Z_p^n in lexicographic coordinate order.
    pub fn box_points(modulus: PrimeModulus, num_vars: usize) -> Vec<Point> {
        let p = modulus.get() as u64;
        let total = p.pow(num_vars as u32);
        (0..total)
            .map(|idx| {
                let mut rem = idx;
                let mut coords = vec![0i64; num_vars];
                for i in (0..num_vars).rev() {
                    coords[i] = (rem % p) as i64;
                    rem /= p;
                }
                Point::from_ints(modulus, &coords)
            })
            .collect()
    }

    /// The complement Z_p^n minus this set.
    pub fn complement(&self) -> DataSet {
        let points = Self::box_points(self.modulus, self.num_vars)
            .into_iter()
            .filter(|pt| !self.contains(pt))
            .collect();
        DataSet {
            modulus: self.modulus,
            num_vars: self.num_vars,
            points,
        }
    }

    /// This set plus the given points (which must be new).
    pub fn with_points(&self, extra: &[Point]) -> Result<DataSet, Error> {
        let mut points = self.points.clone();
        points.extend(extra.iter().cloned());
        DataSet::new(self.modulus, self.num_vars, points)
    }
}

impl fmt::Display for DataSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.modulus.get(), self.num_vars)?;
        for pt in &self.points {
            writeln!(f, "{pt}")?;
        }
        Ok(())
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_field<T: std::str::FromStr>(
    lineno: usize,
    field: Option<&str>,
    what: &str,
) -> Result<T, Error> {
    field
        .ok_or_else(|| Error::parse(lineno, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(lineno, format!("invalid {what}")))
}

pub(crate) fn parse_point(
    modulus: PrimeModulus,
    num_vars: usize,
    lineno: usize,
    line: &str,
) -> Result<Point, Error> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != num_vars {
        return Err(Error::parse(
            lineno,
            format!("expected {num_vars} coordinates, found {}", fields.len()),
        ));
    }
    let mut coords = Vec::with_capacity(num_vars);
    for f in fields {
        let v: u32 = f
            .parse()
            .map_err(|_| Error::parse(lineno, format!("invalid coordinate `{f}`")))?;
        if v >= modulus.get() {
            return Err(Error::parse(
                lineno,
                format!("coordinate {v} out of range for p = {}", modulus.get()),
            ));
        }
        coords.push(modulus.element(v as i64));
    }
    Ok(Point::new(coords))
}

/// Entry (i, j) is mons[j] evaluated at the i-th point.
///
/// Monomial exponents must already be reduced below p; callers reduce via
/// x^p = x first.
pub fn evaluation_matrix(mons: &[Monomial], s: &DataSet) -> MatrixGF {
    for m in mons {
        assert!(
            m.exponents().iter().all(|&e| e < s.modulus().get()),
            "monomial exponent >= p; reduce via x^p = x first"
        );
    }
    let mut out = MatrixGF::zero(s.len(), mons.len(), s.modulus());
    for (i, pt) in s.points().iter().enumerate() {
        for (j, mon) in mons.iter().enumerate() {
            out.set(i, j, mon.evaluate(pt.coords()));
        }
    }
    out
}

/// True iff f vanishes at every point of s.
pub fn ideal_membership(f: &Polynomial, s: &DataSet) -> bool {
    s.points().iter().all(|pt| f.evaluate(pt.coords()).is_zero())
}

/// Buchberger–Möller: the reduced Gröbner basis of I(S) together with the
/// standard monomials, for the given term order.
///
/// Monomials are visited in increasing order starting from 1; a candidate
/// whose evaluation vector is independent of its predecessors is standard,
/// a dependent one yields the generator `t - combination`, and multiples of
/// found leading terms are pruned. The standard set always has exactly m
/// elements; the empty set yields the basis {1}.
pub fn buchberger_moller(s: &DataSet, order: &TermOrder) -> (ReducedGB, Vec<Monomial>) {
    let n = s.num_vars();
    let m = s.len();
    let modulus = s.modulus();
    assert_eq!(order.num_vars(), n, "order dimension mismatch");

    let mut standard: Vec<Monomial> = Vec::new();
    // For each standard monomial, its evaluation vector after elimination by
    // the previous ones (pivot scaled to 1), the pivot position, and the
    // coefficients expressing the eliminated vector over the *original*
    // standard evaluation vectors.
    let mut reduced: Vec<Vec<FieldElement>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut transform: Vec<Vec<FieldElement>> = Vec::new();
    let mut generators: Vec<(Polynomial, Monomial)> = Vec::new();

    let mut queue: BTreeSet<Monomial> = BTreeSet::new();
    queue.insert(Monomial::one(n));
    while !queue.is_empty() {
        let t = queue
            .iter()
            .min_by(|a, b| order.compare(a, b))
            .expect("queue is nonempty")
            .clone();
        queue.remove(&t);
        if generators.iter().any(|(_, lead)| lead.divides(&t)) {
            continue;
        }

        let mut v: Vec<FieldElement> = s
            .points()
            .iter()
            .map(|pt| t.evaluate(pt.coords()))
            .collect();
        let mut combo = vec![modulus.zero(); standard.len()];
        for k in 0..reduced.len() {
            let c = v[pivots[k]];
            if c.is_zero() {
                continue;
            }
            for j in 0..m {
                v[j] = v[j] - c * reduced[k][j];
            }
            for j in 0..=k {
                combo[j] = combo[j] + c * transform[k][j];
            }
        }

        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                // Independent: t is a standard monomial.
                let inv = v[pivot].inverse().expect("pivot nonzero");
                let reduced_v: Vec<FieldElement> = v.iter().map(|&x| x * inv).collect();
                // reduced_v = inv * (orig(t) - sum combo_j * orig(standard_j))
                let mut trow: Vec<FieldElement> = combo.iter().map(|&c| -(c * inv)).collect();
                trow.push(inv);
                standard.push(t.clone());
                reduced.push(reduced_v);
                pivots.push(pivot);
                transform.push(trow);
                for i in 0..n {
                    let next = t.mul(&Monomial::var(i, n));
                    if !generators.iter().any(|(_, lead)| lead.divides(&next)) {
                        queue.insert(next);
                    }
                }
            }
            None => {
                // Dependent: t - sum combo_j x^standard_j vanishes on S.
                let mut g = Polynomial::term(t.clone(), modulus.one());
                for (mon, c) in standard.iter().zip(&combo) {
                    g = &g - &Polynomial::term(mon.clone(), *c);
                }
                generators.push((g, t));
            }
        }
    }

    debug_assert_eq!(standard.len(), m, "dim R/I must equal the point count");
    (
        ReducedGB::new(generators, Some(order.clone())),
        standard,
    )
}

/// A polynomial with per-variable degree < p taking the prescribed value at
/// each input point, built from the indicator polynomials
/// prod_j (1 - (x_j - s_j)^(p-1)).
pub fn interpolate(
    modulus: PrimeModulus,
    num_vars: usize,
    pairs: &[(Point, FieldElement)],
) -> Result<Polynomial, Error> {
    for (i, (a, _)) in pairs.iter().enumerate() {
        for (b, vb) in &pairs[i + 1..] {
            if a == b {
                let va = &pairs[i].1;
                return Err(if va == vb {
                    Error::data(format!("input point ({a}) repeated"))
                } else {
                    Error::data(format!(
                        "input point ({a}) has conflicting outputs {va} and {vb}"
                    ))
                });
            }
        }
    }
    // Constant data has a constant interpolant; the indicator sum would fit
    // too, but differs from it only by a member of the vanishing ideal.
    if let Some((_, first)) = pairs.first() {
        if pairs.iter().all(|(_, v)| v == first) {
            return Ok(Polynomial::constant(num_vars, *first));
        }
    }
    let mut f = Polynomial::zero(num_vars, modulus);
    for (pt, value) in pairs {
        if value.is_zero() {
            continue;
        }
        f = &f + &indicator(pt).scale(*value);
    }
    Ok(f)
}

/// The polynomial that is 1 at `pt` and 0 elsewhere on Z_p^n.
pub fn indicator(pt: &Point) -> Polynomial {
    let n = pt.num_vars();
    let modulus = pt.coords()[0].modulus();
    let one = Polynomial::constant(n, modulus.one());
    let mut acc = one.clone();
    for (j, &c) in pt.coords().iter().enumerate() {
        let linear = &Polynomial::variable(j, n, modulus) - &Polynomial::constant(n, c);
        let mut power = one.clone();
        for _ in 0..modulus.get() - 1 {
            power = &power * &linear;
        }
        acc = &acc * &(&one - &power);
    }
    acc
}
