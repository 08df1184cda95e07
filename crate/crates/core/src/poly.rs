//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept sorted in descending weighted-degrevlex order of the
//! owning ring, with no zero coefficients stored, so equality, printing and
//! leading-term access are all canonical.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::{same_ring, RingDescriptor};

pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Weighted-degree homogeneity of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial (homogeneous of every degree).
    Zero,
    /// All terms share this weighted degree.
    Homogeneous(u64),
    Mixed,
}

impl Homogeneity {
    pub fn is_homogeneous(self) -> bool {
        !matches!(self, Homogeneity::Mixed)
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<RingDescriptor>,
    /// Sorted descending under the ring's canonical order; no zero coefficients.
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<RingDescriptor>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<RingDescriptor>) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Arc<RingDescriptor>, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.num_vars()), c)],
        }
    }

    pub fn variable(ring: &Arc<RingDescriptor>, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var_pow(ring.num_vars(), index, 1), Coeff::one())],
        }
    }

    pub fn var_by_name(ring: &Arc<RingDescriptor>, name: &str) -> Result<Self> {
        Ok(Self::variable(ring, ring.require_var(name)?))
    }

    pub fn term(ring: &Arc<RingDescriptor>, mon: Monomial, c: Coeff) -> Self {
        assert_eq!(mon.len(), ring.num_vars(), "monomial has wrong arity");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(mon, c)],
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs: merges duplicates,
    /// drops zeros, sorts canonically.
    pub fn from_terms(ring: &Arc<RingDescriptor>, pairs: Vec<(Monomial, Coeff)>) -> Self {
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(pairs.len());
        for (m, c) in pairs {
            assert_eq!(m.len(), ring.num_vars(), "monomial has wrong arity");
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        let weights = ring.weights().to_vec();
        terms.sort_by(|a, b| MonomialOrder::WDegRevLex.cmp(&weights, &b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Internal: wrap terms already sorted descending canonically.
    pub(crate) fn from_sorted_terms(
        ring: &Arc<RingDescriptor>,
        terms: Vec<(Monomial, Coeff)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| {
            MonomialOrder::WDegRevLex.cmp(ring.weights(), &w[0].0, &w[1].0) == Ordering::Greater
        }));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Leading term under the ring's canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    fn check_same_ring(&self, other: &Polynomial, ctx: &str) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{ctx}: {} vs {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other, "add")?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other, "sub")?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other, "mul")?;
        let mut pairs = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                pairs.push((m1.mul(m2), c1 * c2));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, pairs))
    }

    /// Merge two canonically sorted term lists; `negate` subtracts.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let weights = self.ring.weights();
        let ord = MonomialOrder::WDegRevLex;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.cmp(weights, &self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (m, c) in &other.terms[j..] {
            out.push((m.clone(), if negate { -c } else { c.clone() }));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiply by a single term `c * x^m`.
    pub fn mul_term(&self, mon: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplying by a fixed monomial preserves the canonical sort
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mon), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Maximum weighted term degree; `None` marks the zero polynomial.
    pub fn weighted_degree(&self) -> Option<u64> {
        let weights = self.ring.weights();
        self.terms
            .iter()
            .map(|(m, _)| m.weighted_degree(weights))
            .max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let weights = self.ring.weights();
        let mut it = self.terms.iter();
        let first = match it.next() {
            None => return Homogeneity::Zero,
            Some((m, _)) => m.weighted_degree(weights),
        };
        for (m, _) in it {
            if m.weighted_degree(weights) != first {
                return Homogeneity::Mixed;
            }
        }
        Homogeneity::Homogeneous(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity().is_homogeneous()
    }

    /// Split into weighted-homogeneous components, highest degree first.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let weights = self.ring.weights();
        let mut by_deg: Vec<(u64, Vec<(Monomial, Coeff)>)> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.weighted_degree(weights);
            match by_deg.iter_mut().find(|(deg, _)| *deg == d) {
                Some((_, v)) => v.push((m.clone(), c.clone())),
                None => by_deg.push((d, vec![(m.clone(), c.clone())])),
            }
        }
        by_deg.sort_by(|a, b| b.0.cmp(&a.0));
        by_deg
            .into_iter()
            .map(|(_, terms)| Polynomial::from_terms(&self.ring, terms))
            .collect()
    }

    /// Total order on polynomials of one ring, for deterministic sorting.
    pub fn cmp_canonical(&self, other: &Polynomial) -> Ordering {
        let weights = self.ring.weights();
        let ord = MonomialOrder::WDegRevLex;
        for ((m1, c1), (m2, c2)) in self.terms.iter().zip(&other.terms) {
            match ord.cmp(weights, m1, m2) {
                Ordering::Equal => {}
                o => return o,
            }
            match c1.cmp(c2) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Move into a smaller ring; fails if a dropped variable occurs.
    pub fn project(
        &self,
        target: &Arc<RingDescriptor>,
        map: &[Option<usize>],
    ) -> Result<Polynomial> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let pm = m.project(map, target.num_vars()).ok_or_else(|| {
                Error::RingMismatch("polynomial uses a variable dropped by projection".into())
            })?;
            pairs.push((pm, c.clone()));
        }
        Ok(Polynomial::from_terms(target, pairs))
    }

    /// Move into a larger ring along an injective slot map.
    pub fn embed(&self, target: &Arc<RingDescriptor>, map: &[usize]) -> Polynomial {
        let pairs = self
            .terms
            .iter()
            .map(|(m, c)| (m.embed(map, target.num_vars()), c.clone()))
            .collect();
        Polynomial::from_terms(target, pairs)
    }

    /// Divide by `divisor` exactly, if possible.
    pub fn checked_div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let weights = self.ring.weights();
        let ord = MonomialOrder::WDegRevLex;
        let (dm, dc) = divisor.leading().unwrap();
        let mut rem = self.clone();
        let mut q: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.checked_div(dm)?;
            let qc = &c / dc;
            q.push((qm.clone(), qc.clone()));
            let step = divisor.mul_term(&qm, &qc);
            rem = rem.merge(&step, true);
            if let Some((m2, _)) = rem.leading() {
                // leading terms must strictly decrease
                debug_assert_eq!(ord.cmp(weights, m2, &m), Ordering::Less);
            }
        }
        Some(Polynomial::from_terms(&self.ring, q))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Coeff, with_star: bool) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())?;
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())?;
    }
    if with_star {
        write!(f, "*")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical text form, parseable by [`crate::parse::parse_polynomial`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write_coeff(f, &abs, false)?;
            } else {
                if !abs.is_one() {
                    write_coeff(f, &abs, true)?;
                }
                let mut first = true;
                for i in m.support() {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    let e = m.exponent(i);
                    if e == 1 {
                        write!(f, "{}", self.ring.var_name(i))?;
                    } else {
                        write!(f, "{}^{}", self.ring.var_name(i), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy_ring() -> Arc<RingDescriptor> {
        RingDescriptor::new(vec![("x", 1), ("y", 1)]).unwrap()
    }

    fn var(r: &Arc<RingDescriptor>, n: &str) -> Polynomial {
        Polynomial::var_by_name(r, n).unwrap()
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let r = xy_ring();
        let (x, y) = (var(&r, "x"), var(&r, "y"));
        let sum = (&x + &y).checked_add(&(&x - &y)).unwrap();
        assert_eq!(sum, x.scale(&coeff_int(2)));
        let prod = (&x + &y).checked_mul(&(&x - &y)).unwrap();
        assert_eq!(prod, &(&x * &x) - &(&y * &y));
    }

    #[test]
    fn zero_absorbs() {
        let r = xy_ring();
        let p = &(&var(&r, "x") + &var(&r, "y")) * &var(&r, "x");
        let z = Polynomial::zero(&r);
        assert!(p.checked_mul(&z).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_errors() {
        let r1 = xy_ring();
        let r2 = RingDescriptor::new(vec![("x", 1), ("z", 1)]).unwrap();
        let p = var(&r1, "x");
        let q = var(&r2, "z");
        assert!(matches!(p.checked_add(&q), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn weighted_degree_and_zero_marker() {
        // weights 2 and 1, mirroring a_21 and a_12
        let r = RingDescriptor::new(vec![("a_2_1", 2), ("a_1_2", 1)]).unwrap();
        let p = &var(&r, "a_2_1") * &var(&r, "a_1_2");
        assert_eq!(p.weighted_degree(), Some(3));
        assert_eq!(Polynomial::zero(&r).weighted_degree(), None);
    }

    #[test]
    fn degree_of_z_times_a11_squared() {
        // k = 1: z has weight 2, a_1_1 weight 1, so z*a_1_1^2 has degree 4
        let r = RingDescriptor::new(vec![("a_1_1", 1), ("z", 2)]).unwrap();
        let p = &var(&r, "z") * &var(&r, "a_1_1").pow(2);
        assert_eq!(p.weighted_degree(), Some(4));
    }

    #[test]
    fn homogeneity_cases() {
        let r = xy_ring();
        let (x, y) = (var(&r, "x"), var(&r, "y"));
        let h = &(&x * &x) + &(&x * &y);
        assert_eq!(h.homogeneity(), Homogeneity::Homogeneous(2));
        let m = &x + &(&x * &x);
        assert_eq!(m.homogeneity(), Homogeneity::Mixed);
        assert_eq!(Polynomial::zero(&r).homogeneity(), Homogeneity::Zero);
        assert_eq!(m.homogeneous_components().len(), 2);
    }

    #[test]
    fn exact_division() {
        let r = xy_ring();
        let (x, y) = (var(&r, "x"), var(&r, "y"));
        let p = &(&x + &y) * &(&x - &y);
        let q = p.checked_div_exact(&(&x + &y)).unwrap();
        assert_eq!(q, &x - &y);
        assert!(p.checked_div_exact(&(&x + &Polynomial::one(&r))).is_none());
    }

    #[test]
    fn display_form() {
        let r = xy_ring();
        let (x, y) = (var(&r, "x"), var(&r, "y"));
        let p = &(&(&x * &x) - &(&y * &y)) + &Polynomial::constant(&r, coeff_ratio(1, 2));
        assert_eq!(p.to_string(), "x^2 - y^2 + 1/2");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        let q = -&(&x.scale(&coeff_int(3)) * &y);
        assert_eq!(q.to_string(), "-3*x*y");
    }
}
