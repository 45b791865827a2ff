use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::ff::FieldElement;

use super::monomial::Monomial;
use super::order::TermOrder;
use super::polynomial::{render_term, Polynomial};

/// Remainder of multivariate division of `f` by the list `divisors`.
///
/// No monomial of the result is divisible by any divisor leading term, and
/// the divisor chosen at each step is the first applicable one in list order,
/// which makes the computation deterministic for arbitrary generating sets.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &TermOrder) -> Polynomial {
    let leads: Vec<(Monomial, FieldElement)> = divisors
        .iter()
        .map(|g| {
            g.leading_term(order)
                .expect("division by the zero polynomial")
        })
        .collect();
    let mut h = f.clone();
    let mut remainder = Polynomial::zero(f.num_vars(), f.modulus());
    while let Some((lm, lc)) = h.leading_term(order) {
        let hit = leads
            .iter()
            .zip(divisors)
            .find(|((glm, _), _)| glm.divides(&lm));
        match hit {
            Some(((glm, glc), g)) => {
                let factor = lm.checked_div(glm).expect("divisibility checked");
                let coeff = lc * glc.inverse().expect("leading coefficient is nonzero");
                h = &h - &g.mul_term(&factor, coeff);
            }
            None => {
                let t = Polynomial::term(lm, lc);
                remainder = &remainder + &t;
                h = &h - &t;
            }
        }
    }
    remainder
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(&gm);
    let a = f.mul_term(
        &l.checked_div(&fm).unwrap(),
        fc.inverse().expect("nonzero lead"),
    );
    let b = g.mul_term(
        &l.checked_div(&gm).unwrap(),
        gc.inverse().expect("nonzero lead"),
    );
    &a - &b
}

/// Buchberger's algorithm followed by inter-reduction and monic scaling.
///
/// Returns the unique reduced Gröbner basis of the ideal generated by `gens`
/// with respect to `order`. S-pairs with coprime leading monomials are
/// skipped (product criterion); no sugar strategy, the instances here are
/// tiny.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> ReducedGB {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    assert!(!basis.is_empty(), "no nonzero generators");

    let mut pairs: VecDeque<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .collect();
    while let Some((i, j)) = pairs.pop_front() {
        let (mi, _) = basis[i].leading_term(order).unwrap();
        let (mj, _) = basis[j].leading_term(order).unwrap();
        if mi.lcm(&mj) == mi.mul(&mj) {
            continue; // coprime leading monomials reduce to zero
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }

    // Minimalize: keep only generators whose leading monomial is not a
    // multiple of another kept one.
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(order).unwrap().0)
        .collect();
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[j] && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Inter-reduce tails until stable, then scale monic.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let rest: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            let reduced = normal_form(&minimal[i], &rest, order);
            if reduced != minimal[i] {
                minimal[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let marked: Vec<(Polynomial, Monomial)> = minimal
        .into_iter()
        .map(|g| {
            let (lm, lc) = g.leading_term(order).unwrap();
            (g.scale(lc.inverse().expect("nonzero lead")), lm)
        })
        .collect();
    ReducedGB::new(marked, Some(order.clone()))
}

/// One generator of a reduced basis with its distinguished leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarkedPolynomial {
    pub leading: Monomial,
    pub poly: Polynomial,
}

impl MarkedPolynomial {
    /// Support monomials other than the leading one.
    pub fn tail(&self) -> impl Iterator<Item = &Monomial> {
        self.poly.support().filter(move |m| **m != self.leading)
    }

    /// True when the support is totally ordered by divisibility, so the
    /// leading term is leading under every monomial order.
    pub fn is_factor_closed(&self) -> bool {
        let support: Vec<&Monomial> = self.poly.support().collect();
        support
            .iter()
            .all(|a| support.iter().all(|b| a.divides(b) || b.divides(a)))
    }
}

/// A reduced Gröbner basis: monic generators, no leading monomial divides any
/// monomial appearing anywhere else in the basis.
///
/// Equality and hashing ignore the order witness; two bases are the same
/// object of study whenever their marked generators agree.
#[derive(Clone, Debug)]
pub struct ReducedGB {
    generators: Vec<MarkedPolynomial>,
    order_witness: Option<TermOrder>,
}

impl ReducedGB {
    /// Validates reducedness and stores generators sorted by leading
    /// monomial (administrative order), making the representation canonical.
    pub fn new(parts: Vec<(Polynomial, Monomial)>, order_witness: Option<TermOrder>) -> Self {
        let mut generators: Vec<MarkedPolynomial> = parts
            .into_iter()
            .map(|(poly, leading)| MarkedPolynomial { leading, poly })
            .collect();
        generators.sort_by(|a, b| a.leading.cmp(&b.leading));
        let gb = ReducedGB {
            generators,
            order_witness,
        };
        gb.validate();
        gb
    }

    fn validate(&self) {
        for g in &self.generators {
            assert_eq!(
                g.poly.coeff(&g.leading).value(),
                1,
                "generator is not monic at its leading monomial"
            );
        }
        for g in &self.generators {
            for h in &self.generators {
                for m in h.poly.support() {
                    if m == &g.leading && std::ptr::eq(g, h) {
                        continue;
                    }
                    assert!(
                        !g.leading.divides(m),
                        "basis is not reduced: {} divides {}",
                        g.leading,
                        m
                    );
                }
            }
        }
    }

    pub fn generators(&self) -> &[MarkedPolynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn order_witness(&self) -> Option<&TermOrder> {
        self.order_witness.as_ref()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().map(|g| &g.leading)
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    /// True iff every generator is factor closed, which makes this the unique
    /// reduced basis of its ideal for every monomial order.
    pub fn is_factor_closed(&self) -> bool {
        self.generators.iter().all(MarkedPolynomial::is_factor_closed)
    }

    /// Normal form with respect to this basis, using the attached witness
    /// order (any order marking the same leading terms gives the same
    /// remainder).
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let order = self
            .order_witness
            .as_ref()
            .expect("basis carries no order witness");
        normal_form(f, &self.polynomials(), order)
    }

    /// Monomials in the box {0..p-1}^n outside the leading term ideal.
    pub fn standard_monomials_in_box(&self, p: u32, num_vars: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; num_vars];
        loop {
            let mon = Monomial::new(exps.clone());
            if !self.generators.iter().any(|g| g.leading.divides(&mon)) {
                out.push(mon);
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == num_vars {
                    out.sort();
                    return out;
                }
                exps[i] += 1;
                if exps[i] < p {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Text form used by the CLI and golden tests: generators sorted
    /// descending by leading monomial, each rendered under `order` with the
    /// leading term first and marked with a `*` prefix.
    pub fn render(&self, order: &TermOrder) -> String {
        let mut gens = self.generators.clone();
        gens.sort_by(|a, b| b.leading.cmp(&a.leading));
        let parts: Vec<String> = gens
            .iter()
            .map(|g| {
                let mut mons: Vec<&Monomial> = g.poly.support().collect();
                mons.sort_by(|a, b| order.compare(b, a));
                debug_assert_eq!(*mons[0], g.leading, "leading term must sort first");
                let terms: Vec<String> = mons
                    .iter()
                    .enumerate()
                    .map(|(i, m)| {
                        let body = render_term(m, g.poly.coeff(m));
                        if i == 0 {
                            format!("*{body}")
                        } else {
                            body
                        }
                    })
                    .collect();
                terms.join(" + ")
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl PartialEq for ReducedGB {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for ReducedGB {}

impl Hash for ReducedGB {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl PartialOrd for ReducedGB {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ReducedGB {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |gb: &ReducedGB| -> Vec<(Monomial, Polynomial)> {
            gb.generators
                .iter()
                .map(|g| (g.leading.clone(), g.poly.clone()))
                .collect()
        };
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for ReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self
            .generators
            .first()
            .map_or(0, |g| g.poly.num_vars());
        let order = self
            .order_witness
            .clone()
            .unwrap_or_else(|| TermOrder::graded_lex(n));
        write!(f, "{}", self.render(&order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeModulus;

    fn p(v: u32) -> PrimeModulus {
        PrimeModulus::new(v).unwrap()
    }

    fn mon(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    /// x1^2 - x1 over Z_p.
    fn field_poly(i: usize, n: usize, m: PrimeModulus) -> Polynomial {
        let mut exps = vec![0u32; n];
        exps[i] = m.get();
        &Polynomial::term(Monomial::new(exps), m.one()) - &Polynomial::variable(i, n, m)
    }

    #[test]
    fn normal_form_single_step() {
        let m = p(2);
        // x1^2 mod {x1^2 - x1} -> x1
        let f = Polynomial::term(mon(&[2, 0]), m.one());
        let g = &Polynomial::term(mon(&[2, 0]), m.one()) - &Polynomial::variable(0, 2, m);
        let ord = TermOrder::graded_lex(2);
        assert_eq!(normal_form(&f, &[g], &ord), Polynomial::variable(0, 2, m));
    }

    #[test]
    fn normal_form_example1_rewrites_to_x2() {
        let m = p(2);
        // G1 = {x1 - x2, x2^2 - x2}, f = x1 -> x2
        let g1 = &Polynomial::variable(0, 2, m) - &Polynomial::variable(1, 2, m);
        let g2 = field_poly(1, 2, m);
        let ord = TermOrder::weighted(&[1, 1], &[0, 1]);
        let f = Polynomial::variable(0, 2, m);
        assert_eq!(
            normal_form(&f, &[g1, g2], &ord),
            Polynomial::variable(1, 2, m)
        );
    }

    #[test]
    fn normal_form_of_ideal_member_is_zero() {
        let m = p(3);
        let ord = TermOrder::weighted(&[1, 1], &[0, 1]);
        let g1 = &Polynomial::variable(0, 2, m) - &Polynomial::variable(1, 2, m);
        let g2 = field_poly(1, 2, m);
        // Build a combination by brute force: f = (x1*x2 + 2) * g1 + x2 * g2.
        let a = Polynomial::from_terms(
            2,
            m,
            [(mon(&[1, 1]), m.one()), (mon(&[0, 0]), m.element(2))],
        );
        let b = Polynomial::variable(1, 2, m);
        let f = &(&a * &g1) + &(&b * &g2);
        assert!(normal_form(&f, &[g1, g2], &ord).is_zero());
    }

    #[test]
    fn buchberger_diagonal_pair_both_orders() {
        let m = p(2);
        // Generators of I({(0,0),(1,1)}) by multiplying out the two maximal
        // ideals, plus the field polynomials.
        let x1 = Polynomial::variable(0, 2, m);
        let x2 = Polynomial::variable(1, 2, m);
        let one = Polynomial::constant(2, m.one());
        let gens = vec![
            &x1 * &(&x1 - &one),
            &x1 * &(&x2 - &one),
            &x2 * &(&x1 - &one),
            &x2 * &(&x2 - &one),
            field_poly(0, 2, m),
            field_poly(1, 2, m),
        ];

        let x2_smaller = TermOrder::weighted(&[2, 1], &[0, 1]);
        let gb = buchberger(&gens, &x2_smaller);
        let expected = ReducedGB::new(
            vec![
                (&x1 - &x2, mon(&[1, 0])),
                (field_poly(1, 2, m), mon(&[0, 2])),
            ],
            None,
        );
        assert_eq!(gb, expected);

        let x1_smaller = TermOrder::weighted(&[1, 2], &[0, 1]);
        let gb = buchberger(&gens, &x1_smaller);
        let expected = ReducedGB::new(
            vec![
                (&x2 - &x1, mon(&[0, 1])),
                (field_poly(0, 2, m), mon(&[2, 0])),
            ],
            None,
        );
        assert_eq!(gb, expected);
    }

    #[test]
    fn buchberger_fixed_point_on_reduced_input() {
        let m = p(2);
        let gens = vec![Polynomial::variable(0, 2, m), field_poly(1, 2, m)];
        for ord in [
            TermOrder::graded_lex(2),
            TermOrder::weighted(&[3, 1], &[1, 0]),
            TermOrder::weighted(&[1, 5], &[0, 1]),
        ] {
            let gb = buchberger(&gens, &ord);
            assert_eq!(
                gb,
                ReducedGB::new(
                    vec![
                        (gens[0].clone(), mon(&[1, 0])),
                        (gens[1].clone(), mon(&[0, 2]))
                    ],
                    None
                )
            );
        }
    }

    #[test]
    fn buchberger_invariant_under_generator_permutation() {
        use itertools::Itertools;
        let m = p(3);
        let x1 = Polynomial::variable(0, 2, m);
        let x2 = Polynomial::variable(1, 2, m);
        let one = Polynomial::constant(2, m.one());
        let gens = vec![
            &(&x1 - &one) * &(&x2 - &one),
            field_poly(0, 2, m),
            field_poly(1, 2, m),
        ];
        let ord = TermOrder::graded_lex(2);
        let reference = buchberger(&gens, &ord);
        for perm in gens.iter().cloned().permutations(gens.len()) {
            assert_eq!(buchberger(&perm, &ord), reference);
        }
    }

    #[test]
    fn factor_closed_examples() {
        let m = p(2);
        let x1 = Polynomial::variable(0, 2, m);
        let x2 = Polynomial::variable(1, 2, m);

        // {x1, x2^2 - x2} -> true
        let gb = ReducedGB::new(
            vec![
                (x1.clone(), mon(&[1, 0])),
                (field_poly(1, 2, m), mon(&[0, 2])),
            ],
            None,
        );
        assert!(gb.is_factor_closed());

        // {x1 - x2, x2^2 - x2} -> false
        let gb = ReducedGB::new(
            vec![
                (&x1 - &x2, mon(&[1, 0])),
                (field_poly(1, 2, m), mon(&[0, 2])),
            ],
            None,
        );
        assert!(!gb.is_factor_closed());

        // {x1 - 1, x2^2 - x2, x3 - 1} -> true
        let m3 = p(2);
        let y1 = Polynomial::variable(0, 3, m3);
        let y3 = Polynomial::variable(2, 3, m3);
        let one3 = Polynomial::constant(3, m3.one());
        let gb = ReducedGB::new(
            vec![
                (&y1 - &one3, mon(&[1, 0, 0])),
                (field_poly(1, 3, m3), mon(&[0, 2, 0])),
                (&y3 - &one3, mon(&[0, 0, 1])),
            ],
            None,
        );
        assert!(gb.is_factor_closed());
    }

    #[test]
    fn normal_form_idempotent_and_linear_for_reduced_basis() {
        let m = p(3);
        // Reduced basis of some zero-dimensional ideal.
        let ord = TermOrder::graded_lex(2);
        let gens = vec![
            &Polynomial::variable(0, 2, m) - &Polynomial::constant(2, m.one()),
            field_poly(1, 2, m),
        ];
        let gb = buchberger(&gens, &ord);
        let basis = gb.polynomials();
        // Deterministic small sweep of polynomials.
        let polys: Vec<Polynomial> = (0..10)
            .map(|k| {
                Polynomial::from_terms(
                    2,
                    m,
                    [
                        (mon(&[2, 1]), m.element(k)),
                        (mon(&[1, 1]), m.element(k + 1)),
                        (mon(&[0, 2]), m.element(2 * k)),
                    ],
                )
            })
            .collect();
        for f in &polys {
            let r = normal_form(f, &basis, &ord);
            assert_eq!(normal_form(&r, &basis, &ord), r);
        }
        for f in &polys {
            for g in &polys {
                let sum_then = normal_form(&(f + g), &basis, &ord);
                let then_sum = &normal_form(f, &basis, &ord) + &normal_form(g, &basis, &ord);
                assert_eq!(sum_then, then_sum);
            }
        }
    }

    #[test]
    #[should_panic(expected = "not reduced")]
    fn unreduced_basis_rejected() {
        let m = p(2);
        let x1 = Polynomial::variable(0, 2, m);
        // x1*x2 has x1 | x1*x2: not reduced together with lead x1.
        let bad = Polynomial::term(mon(&[1, 1]), m.one());
        ReducedGB::new(
            vec![(x1, mon(&[1, 0])), (bad, mon(&[1, 1]))],
            None,
        );
    }
}
