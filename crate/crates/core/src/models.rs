//! The modeling strategy over Z_p^n: interpolate input-output data, reduce
//! by each reduced Gröbner basis of the input ideal, and count the distinct
//! minimal polynomial dynamical systems.

use std::fmt;

use crate::enumerate::enumerate_reduced_gbs;
use crate::error::Error;
use crate::ff::PrimeModulus;
use crate::ideal::{
    content_lines, ideal_membership, interpolate, parse_field, parse_point, DataSet, Point,
};
use crate::poly::{Polynomial, ReducedGB};

/// Input-output observations: state transitions s_i -> t_i with distinct
/// inputs.
#[derive(Clone, Debug)]
pub struct InputOutputData {
    modulus: PrimeModulus,
    num_vars: usize,
    pairs: Vec<(Point, Point)>,
}

impl InputOutputData {
    pub fn new(
        modulus: PrimeModulus,
        num_vars: usize,
        pairs: Vec<(Point, Point)>,
    ) -> Result<Self, Error> {
        for (s, t) in &pairs {
            if s.num_vars() != num_vars || t.num_vars() != num_vars {
                return Err(Error::data("input-output pair has wrong dimension"));
            }
        }
        for (i, (a, _)) in pairs.iter().enumerate() {
            if pairs[i + 1..].iter().any(|(b, _)| a == b) {
                return Err(Error::data(format!("duplicate input point ({a})")));
            }
        }
        Ok(InputOutputData {
            modulus,
            num_vars,
            pairs,
        })
    }

    /// Text format: first line `p n`, then one transition per line as 2n
    /// space-separated integers (input coordinates, then output coordinates).
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
        let mut pairs = Vec::new();
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 * n {
                return Err(Error::parse(
                    lineno,
                    format!("expected {} integers, found {}", 2 * n, fields.len()),
                ));
            }
            let input = parse_point(modulus, n, lineno, &fields[..n].join(" "))?;
            let output = parse_point(modulus, n, lineno, &fields[n..].join(" "))?;
            pairs.push((input, output));
        }
        Self::new(modulus, n, pairs)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn pairs(&self) -> &[(Point, Point)] {
        &self.pairs
    }

    /// The input points as a data set.
    pub fn inputs(&self) -> DataSet {
        DataSet::new(
            self.modulus,
            self.num_vars,
            self.pairs.iter().map(|(s, _)| s.clone()).collect(),
        )
        .expect("inputs validated distinct")
    }
}

/// A polynomial dynamical system f = (f_1, ..., f_n): Z_p^n -> Z_p^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pds {
    components: Vec<Polynomial>,
}

impl Pds {
    pub fn new(components: Vec<Polynomial>) -> Self {
        Pds { components }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn evaluate(&self, state: &Point) -> Point {
        Point::new(
            self.components
                .iter()
                .map(|f| f.evaluate(state.coords()))
                .collect(),
        )
    }

    /// True iff every recorded transition is reproduced exactly.
    pub fn fits(&self, data: &InputOutputData) -> bool {
        data.pairs()
            .iter()
            .all(|(s, t)| &self.evaluate(s) == t)
    }
}

impl fmt::Debug for Pds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

/// One interpolating system: component j matches the j-th output coordinate
/// on every input.
pub fn interpolating_pds(data: &InputOutputData) -> Pds {
    let components = (0..data.num_vars())
        .map(|j| {
            let pairs: Vec<_> = data
                .pairs()
                .iter()
                .map(|(s, t)| (s.clone(), t.coords()[j]))
                .collect();
            interpolate(data.modulus(), data.num_vars(), &pairs)
                .expect("inputs validated distinct")
        })
        .collect();
    Pds::new(components)
}

/// The minimal system for one basis: the component-wise normal form of the
/// interpolating system. The basis must be a reduced Gröbner basis of the
/// ideal of the input points.
pub fn minimal_pds(data: &InputOutputData, basis: &ReducedGB) -> Result<Pds, Error> {
    let inputs = data.inputs();
    for g in basis.generators() {
        if !ideal_membership(&g.poly, &inputs) {
            return Err(Error::data(format!(
                "basis generator {:?} does not vanish on the input points",
                g.poly
            )));
        }
    }
    let standard = basis.standard_monomials_in_box(data.modulus().get(), data.num_vars());
    if standard.len() != inputs.len() {
        return Err(Error::data(format!(
            "basis leaves {} standard monomials for {} points, so it does not cut out the input ideal",
            standard.len(),
            inputs.len()
        )));
    }
    let interp = interpolating_pds(data);
    let components = interp
        .components()
        .iter()
        .map(|f| basis.reduce(f))
        .collect();
    Ok(Pds::new(components))
}

/// All distinct minimal systems fitting the data: one normal form per
/// reduced basis of the input ideal, deduplicated by exact equality and
/// returned in a canonical order.
pub fn enumerate_minimal_models(data: &InputOutputData) -> Vec<Pds> {
    let inputs = data.inputs();
    let mut models: Vec<Pds> = enumerate_reduced_gbs(&inputs)
        .bases()
        .map(|gb| minimal_pds(data, gb).expect("enumerated basis cuts out the input ideal"))
        .collect();
    models.sort();
    models.dedup();
    models
}
