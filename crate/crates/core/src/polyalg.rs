//! Exact multilinear polynomials in edge variables.
//!
//! A [`MatchingPolynomial`] is a finite map from edge-index sets
//! ([`Monomial`]) to nonzero rational coefficients. Zero coefficients are
//! pruned on every mutation, so structural equality is semantic equality.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rational(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Renders a rational as `num/den` (denominator always printed).
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Product of distinct edge variables, stored as a strictly increasing
/// sequence of edge indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from edge indices in any order. Repeated indices
    /// are rejected: polynomials here are multilinear.
    pub fn new(mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain(format!(
                "monomial repeats an edge variable: {edges:?}"
            )));
        }
        Ok(Monomial(edges))
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.binary_search(&edge).is_ok()
    }

    fn max_edge(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{e}")?;
        }
        Ok(())
    }
}

/// Exact polynomial over the edge variables `x_0 .. x_{edge_count-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingPolynomial {
    edge_count: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MatchingPolynomial {
    pub fn zero(edge_count: usize) -> Self {
        MatchingPolynomial {
            edge_count,
            terms: BTreeMap::new(),
        }
    }

    /// Collects terms, adding like monomials and dropping zeros.
    pub fn from_terms<I>(edge_count: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut poly = MatchingPolynomial::zero(edge_count);
        for (mono, coeff) in terms {
            poly.add_term(mono, coeff)?;
        }
        Ok(poly)
    }

    /// Size of the ambient edge-variable space.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) -> Result<()> {
        if let Some(e) = mono.max_edge() {
            if e >= self.edge_count {
                return Err(Error::domain(format!(
                    "edge index {e} outside ambient space of {} edges",
                    self.edge_count
                )));
            }
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
        Ok(())
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return MatchingPolynomial::zero(self.edge_count);
        }
        MatchingPolynomial {
            edge_count: self.edge_count,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Rational linear combination `sum c_i P_i`.
    ///
    /// All polynomials must share one ambient edge space; an empty input has
    /// no ambient space and is rejected.
    pub fn combine<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a Rational, &'a MatchingPolynomial)>,
    {
        let mut iter = terms.into_iter().peekable();
        let edge_count = match iter.peek() {
            Some((_, p)) => p.edge_count,
            None => return Err(Error::domain("empty linear combination")),
        };
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (coeff, poly) in iter {
            if poly.edge_count != edge_count {
                return Err(Error::domain(format!(
                    "mismatched ambient edge spaces: {} vs {}",
                    edge_count, poly.edge_count
                )));
            }
            if coeff.is_zero() {
                continue;
            }
            for (m, c) in &poly.terms {
                *acc.entry(m.clone()).or_insert_with(Rational::zero) += coeff * c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MatchingPolynomial {
            edge_count,
            terms: acc,
        })
    }

    /// Evaluates at an assignment of every variable that occurs in `self`.
    pub fn eval(&self, assignment: &BTreeMap<usize, Rational>) -> Result<Rational> {
        self.eval_with(|e| assignment.get(&e).cloned())
    }

    pub fn eval_with<F>(&self, mut value: F) -> Result<Rational>
    where
        F: FnMut(usize) -> Option<Rational>,
    {
        let mut total = Rational::zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for &e in mono.edges() {
                let v = value(e)
                    .ok_or_else(|| Error::domain(format!("no value assigned to x{e}")))?;
                term *= v;
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes `x_e = 0` for the given edges and renames the survivors
    /// through `new_index` (old edge index to new edge index).
    pub fn restrict(&self, new_edge_count: usize, new_index: &[Option<usize>]) -> Result<Self> {
        let mut out = MatchingPolynomial::zero(new_edge_count);
        'terms: for (mono, coeff) in &self.terms {
            let mut edges = Vec::with_capacity(mono.degree());
            for &e in mono.edges() {
                match new_index.get(e).copied().flatten() {
                    Some(ne) => edges.push(ne),
                    None => continue 'terms,
                }
            }
            out.add_term(Monomial::new(edges)?, coeff.clone())?;
        }
        Ok(out)
    }
}

impl fmt::Display for MatchingPolynomial {
    /// Canonical rendering: lexicographic term order, `num/den*x<i>*x<j>`
    /// terms joined by ` + `, and `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&format_rational(coeff))?;
            if mono.degree() > 0 {
                write!(f, "*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[usize]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn k22_pm() -> MatchingPolynomial {
        // edges u1v1, u1v2, u2v1, u2v2
        MatchingPolynomial::from_terms(4, [(mono(&[0, 3]), rational(1)), (mono(&[1, 2]), rational(1))])
            .unwrap()
    }

    #[test]
    fn combine_scaling_by_zero_vanishes() {
        let p = k22_pm();
        let out = MatchingPolynomial::combine([(&rational(0), &p)]).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn combine_cancellation() {
        let p = k22_pm();
        let out = MatchingPolynomial::combine([(&rational(1), &p), (&rational(-1), &p)]).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn combine_like_terms() {
        let x01 = MatchingPolynomial::from_terms(2, [(mono(&[0, 1]), rational(1))]).unwrap();
        let out =
            MatchingPolynomial::combine([(&rational(2), &x01), (&rational(3), &x01)]).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out.coefficient(&mono(&[0, 1])), rational(5));
    }

    #[test]
    fn combine_rejects_mismatched_spaces() {
        let a = MatchingPolynomial::zero(2);
        let b = MatchingPolynomial::zero(3);
        assert!(matches!(
            MatchingPolynomial::combine([(&rational(1), &a), (&rational(1), &b)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn eval_examples() {
        let ones: BTreeMap<usize, Rational> = (0..4).map(|e| (e, rational(1))).collect();
        assert_eq!(k22_pm().eval(&ones).unwrap(), rational(2));
        assert_eq!(MatchingPolynomial::zero(4).eval(&BTreeMap::new()).unwrap(), rational(0));
        let x01 = MatchingPolynomial::from_terms(2, [(mono(&[0, 1]), rational(1))]).unwrap();
        let at: BTreeMap<usize, Rational> = [(0, rational(2)), (1, rational(3))].into();
        assert_eq!(x01.eval(&at).unwrap(), rational(6));
    }

    #[test]
    fn eval_missing_variable() {
        let at: BTreeMap<usize, Rational> = [(0, rational(1))].into();
        assert!(matches!(k22_pm().eval(&at), Err(Error::Domain(_))));
    }

    #[test]
    fn equality_examples() {
        let p = k22_pm();
        assert_eq!(p, p.clone());
        let mut q = p.clone();
        q.add_term(mono(&[0, 1]), rational(1)).unwrap();
        assert_ne!(p, q);
        let r = MatchingPolynomial::from_terms(4, [(mono(&[1, 2]), rational(1)), (mono(&[3, 0]), rational(1))])
            .unwrap();
        assert_eq!(p, r);
    }

    #[test]
    fn monomial_rejects_repeats_and_out_of_range() {
        assert!(Monomial::new(vec![1, 1]).is_err());
        let mut p = MatchingPolynomial::zero(2);
        assert!(p.add_term(mono(&[2]), rational(1)).is_err());
    }

    #[test]
    fn canonical_rendering() {
        let mut p = MatchingPolynomial::zero(4);
        p.add_term(mono(&[1, 2]), rational(-1)).unwrap();
        p.add_term(mono(&[0, 3]), Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(p.to_string(), "1/2*x0*x3 + -1/1*x1*x2");
        assert_eq!(MatchingPolynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn restrict_drops_deleted_edges() {
        let p = k22_pm();
        // delete edge 1; survivors 0,2,3 -> 0,1,2
        let map = [Some(0), None, Some(1), Some(2)];
        let q = p.restrict(3, &map).unwrap();
        assert_eq!(q.to_string(), "1/1*x0*x2");
    }

    #[test]
    fn rational_text_round_trip() {
        let r = Rational::new((-6).into(), 4.into());
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(r));
        assert_eq!(parse_rational("7"), Some(rational(7)));
        assert_eq!(parse_rational("1/0"), None);
    }

    const EDGES: usize = 5;

    fn arb_poly() -> impl Strategy<Value = MatchingPolynomial> {
        prop::collection::vec((0u32..(1 << EDGES), -3i64..=3), 0..6).prop_map(|terms| {
            MatchingPolynomial::from_terms(
                EDGES,
                terms.into_iter().map(|(mask, c)| {
                    let edges = (0..EDGES).filter(|e| mask >> e & 1 == 1).collect();
                    (Monomial::new(edges).unwrap(), rational(c))
                }),
            )
            .unwrap()
        })
    }

    fn arb_assignment() -> impl Strategy<Value = BTreeMap<usize, Rational>> {
        prop::collection::vec((-4i64..=4, 1i64..=3), EDGES).prop_map(|vals| {
            vals.into_iter()
                .enumerate()
                .map(|(e, (n, d))| (e, Rational::new(n.into(), d.into())))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn combine_is_commutative(p in arb_poly(), q in arb_poly(), a in -3i64..=3, b in -3i64..=3) {
            let (a, b) = (rational(a), rational(b));
            let pq = MatchingPolynomial::combine([(&a, &p), (&b, &q)]).unwrap();
            let qp = MatchingPolynomial::combine([(&b, &q), (&a, &p)]).unwrap();
            prop_assert_eq!(pq, qp);
        }

        #[test]
        fn combine_is_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            let one = rational(1);
            let left = MatchingPolynomial::combine([(&one, &p), (&one, &q)]).unwrap();
            let left = MatchingPolynomial::combine([(&one, &left), (&one, &r)]).unwrap();
            let right = MatchingPolynomial::combine([(&one, &q), (&one, &r)]).unwrap();
            let right = MatchingPolynomial::combine([(&one, &p), (&one, &right)]).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn scalar_distributes(p in arb_poly(), q in arb_poly(), a in -3i64..=3) {
            let a = rational(a);
            let one = rational(1);
            let sum = MatchingPolynomial::combine([(&one, &p), (&one, &q)]).unwrap();
            let lhs = sum.scaled(&a);
            let rhs = MatchingPolynomial::combine([(&a, &p), (&a, &q)]).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_linear(p in arb_poly(), q in arb_poly(), a in -3i64..=3, b in -3i64..=3, x in arb_assignment()) {
            let (a, b) = (rational(a), rational(b));
            let combo = MatchingPolynomial::combine([(&a, &p), (&b, &q)]).unwrap();
            let lhs = combo.eval(&x).unwrap();
            let rhs = &a * p.eval(&x).unwrap() + &b * q.eval(&x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_form_ignores_insertion_order(p in arb_poly()) {
            let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            terms.reverse();
            let q = MatchingPolynomial::from_terms(EDGES, terms).unwrap();
            prop_assert_eq!(p.to_string(), q.to_string());
            prop_assert_eq!(p, q);
        }
    }
}
