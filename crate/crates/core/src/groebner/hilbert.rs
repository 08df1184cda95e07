//! Weighted Hilbert series of quotients by monomial ideals.
//!
//! The numerator is computed by the standard pivot recursion on the
//! leading-term ideal: splitting on a variable `x` of weight `w` gives
//! `N(J) = N(J + (x)) + t^w * N(J : x)`.

use std::fmt;

use crate::monomial::Monomial;

use super::dimension::minimalize;

/// Hilbert series of a graded quotient, stored as an integer numerator over
/// the product of `(1 - t^w)` for the listed weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficient of `t^i` at index `i`.
    pub numerator: Vec<i128>,
    pub denominator_weights: Vec<u32>,
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add_shifted(a: &[i128], b: &[i128], shift: usize) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len() + shift)];
    out[..a.len()].copy_from_slice(a);
    for (j, y) in b.iter().enumerate() {
        out[j + shift] += y;
    }
    trim(out)
}

/// `1 - t^d`
fn one_minus_power(d: usize) -> Vec<i128> {
    let mut v = vec![0i128; d + 1];
    v[0] = 1;
    v[d] = -1;
    v
}

fn numerator_rec(gens: Vec<Monomial>, weights: &[u32]) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    // Pure powers of distinct variables: product formula.
    if gens.iter().all(|m| m.support().count() == 1) {
        let mut acc = vec![1i128];
        for g in &gens {
            let v = g.support().next().unwrap();
            let d = g.exponent(v) as usize * weights[v] as usize;
            acc = poly_mul(&acc, &one_minus_power(d));
        }
        return acc;
    }
    // Pivot: the most frequent variable among generators with mixed support.
    let nvars = weights.len();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        if g.support().count() >= 2 {
            for v in g.support() {
                counts[v] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| counts[v]).expect("variables");
    debug_assert!(counts[pivot] > 0);

    // J + (x): generators not involving the pivot, plus the pivot itself.
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponent(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var_pow(nvars, pivot, 1));

    // J : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.div_var(pivot).unwrap_or_else(|| m.clone()))
        .collect();

    let n_plus = numerator_rec(minimalize(plus), weights);
    let n_colon = numerator_rec(minimalize(colon), weights);
    poly_add_shifted(&n_plus, &n_colon, weights[pivot] as usize)
}

/// Series of `R / J` for a monomial ideal `J` given by (not necessarily
/// minimal) generators.
pub(crate) fn series_of_monomial_ideal(gens: &[Monomial], weights: &[u32]) -> HilbertSeries {
    HilbertSeries {
        numerator: numerator_rec(minimalize(gens.to_vec()), weights),
        denominator_weights: weights.to_vec(),
    }
}

impl HilbertSeries {
    /// Exact division of the numerator by `(1 - t^d)`, if divisible.
    fn div_numerator(num: &[i128], d: usize) -> Option<Vec<i128>> {
        if num.is_empty() {
            return None;
        }
        if num.len() <= d {
            return None;
        }
        // power-series inverse of (1 - t^d) applied to num, then check the
        // top d coefficients vanish
        let mut q = num.to_vec();
        for i in d..q.len() {
            q[i] = q[i] + q[i - d];
        }
        // exact iff all coefficients beyond degree len-1-d are zero
        let cut = q.len() - d;
        if q[cut..].iter().all(|&c| c == 0) {
            q.truncate(cut);
            Some(trim(q))
        } else {
            None
        }
    }

    /// Lowest-terms form: cancels each denominator factor `(1 - t^w)` that
    /// divides the numerator exactly, largest weights first.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut weights = self.denominator_weights.clone();
        weights.sort_unstable();
        let mut kept: Vec<u32> = Vec::new();
        while let Some(w) = weights.pop() {
            match Self::div_numerator(&num, w as usize) {
                Some(q) => num = q,
                None => kept.push(w),
            }
        }
        kept.sort_unstable();
        HilbertSeries {
            numerator: num,
            denominator_weights: kept,
        }
    }

    /// First `upto + 1` Hilbert function values, by power-series expansion.
    pub fn values(&self, upto: usize) -> Vec<i128> {
        let mut v = vec![0i128; upto + 1];
        for (i, c) in self.numerator.iter().enumerate() {
            if i <= upto {
                v[i] = *c;
            }
        }
        for &w in &self.denominator_weights {
            let w = w as usize;
            for i in w..=upto {
                v[i] += v[i - w];
            }
        }
        v
    }

    /// Palindromy up to sign: `N(t) = ±t^deg N(1/t)`, checked on the reduced
    /// numerator (cancellation preserves the property).
    pub fn numerator_palindromic(&self) -> bool {
        let num = trim(self.reduced().numerator);
        if num.is_empty() {
            return true;
        }
        let rev: Vec<i128> = num.iter().rev().copied().collect();
        let neg: Vec<i128> = rev.iter().map(|c| -c).collect();
        num == rev || num == neg
    }
}

fn fmt_numerator(num: &[i128], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if num.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in num.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if first {
            if *c < 0 {
                write!(f, "-")?;
            }
            first = false;
        } else if *c < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match (i, mag) {
            (0, m) => write!(f, "{m}")?,
            (1, 1) => write!(f, "t")?,
            (1, m) => write!(f, "{m}*t")?,
            (i, 1) => write!(f, "t^{i}")?,
            (i, m) => write!(f, "{m}*t^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_numerator(&self.numerator, f)?;
        write!(f, ")")?;
        if self.denominator_weights.is_empty() {
            return Ok(());
        }
        write!(f, " / (")?;
        let mut sorted = self.denominator_weights.clone();
        sorted.sort_unstable();
        let mut i = 0;
        let mut first = true;
        while i < sorted.len() {
            let w = sorted[i];
            let mut count = 0;
            while i < sorted.len() && sorted[i] == w {
                count += 1;
                i += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if w == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{w})")?;
            }
            if count > 1 {
                write!(f, "^{count}")?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn single_pure_power() {
        // Q[x]/(x^2): numerator 1 - t^2 over (1 - t)
        let s = series_of_monomial_ideal(&[m(&[2])], &[1]);
        assert_eq!(s.numerator, vec![1, 0, -1]);
        assert_eq!(s.denominator_weights, vec![1]);
        assert_eq!(s.values(4), vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn zero_ideal() {
        let s = series_of_monomial_ideal(&[], &[1, 1, 1]);
        assert_eq!(s.numerator, vec![1]);
        // n weight-1 variables: values are binomials
        assert_eq!(s.values(3), vec![1, 3, 6, 10]);
    }

    #[test]
    fn twisted_cubic_initial_ideal() {
        // (y1^2, y1*y2, y2^2) in 4 weight-1 variables
        let gens = [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])];
        let s = series_of_monomial_ideal(&gens, &[1, 1, 1, 1]);
        // raw numerator (1 + 2t)(1 - t)^2 = 1 - 3t^2 + 2t^3
        assert_eq!(s.numerator, vec![1, 0, -3, 2]);
        let r = s.reduced();
        assert_eq!(r.numerator, vec![1, 2]);
        assert_eq!(r.denominator_weights, vec![1, 1]);
        assert!(!s.numerator_palindromic());
        // h(d) = 3d + 1
        assert_eq!(s.values(6), vec![1, 4, 7, 10, 13, 16, 19]);
    }

    #[test]
    fn palindromy_with_sign() {
        // numerator 1 - t^2 reduces to 1 + t, palindromic
        let s = series_of_monomial_ideal(&[m(&[2])], &[1]);
        assert!(s.numerator_palindromic());
        let artinian = HilbertSeries {
            numerator: vec![1, 0, -1],
            denominator_weights: vec![],
        };
        // 1 - t^2 reversed is -1 + t^2: anti-palindromic, accepted
        assert!(artinian.numerator_palindromic());
    }

    #[test]
    fn weighted_variable() {
        // Q[x] with weight 2, ideal (x^2): numerator 1 - t^4 over (1 - t^2)
        let s = series_of_monomial_ideal(&[m(&[2])], &[2]);
        assert_eq!(s.numerator, vec![1, 0, 0, 0, -1]);
        let r = s.reduced();
        assert_eq!(r.numerator, vec![1, 0, 1]);
        assert!(r.denominator_weights.is_empty());
        assert_eq!(s.values(5), vec![1, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn display_forms() {
        let s = HilbertSeries {
            numerator: vec![1, 2],
            denominator_weights: vec![1, 1],
        };
        assert_eq!(s.to_string(), "(1 + 2*t) / ((1-t)^2)");
        let z = HilbertSeries {
            numerator: vec![1, 0, -1],
            denominator_weights: vec![2, 1],
        };
        assert_eq!(z.to_string(), "(1 - t^2) / ((1-t)*(1-t^2))");
    }
}
