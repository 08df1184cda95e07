//! Krull dimension of a monomial ideal, via minimal vertex covers.
//!
//! The height of a monomial ideal is the smallest number of variables that
//! hit the support of every minimal generator; the branch-and-bound below is
//! exact and fast at the variable counts this crate sees.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Drop monomials divisible by another list member.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

pub(crate) fn codimension_of_monomials(lts: &[Monomial], nvars: usize) -> Result<u32> {
    if nvars > 64 {
        return Err(Error::Unsupported(
            "codimension supports at most 64 variables".into(),
        ));
    }
    let gens = minimalize(lts.to_vec());
    if gens.is_empty() {
        return Ok(0);
    }
    if gens.iter().any(|m| m.is_one()) {
        return Err(Error::UnitIdeal);
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = supports.len().min(nvars) as u32 + 1;
    branch(&supports, 0, &mut best);
    Ok(best)
}

fn branch(uncovered: &[u64], chosen: u32, best: &mut u32) {
    if uncovered.is_empty() {
        *best = (*best).min(chosen);
        return;
    }
    if chosen + 1 >= *best {
        return;
    }
    // branch on the support with fewest variables
    let target = uncovered
        .iter()
        .min_by_key(|s| s.count_ones())
        .copied()
        .expect("nonempty");
    let mut bits = target;
    while bits != 0 {
        let v = bits & bits.wrapping_neg();
        bits ^= v;
        let rest: Vec<u64> = uncovered.iter().filter(|s| *s & v == 0).copied().collect();
        branch(&rest, chosen + 1, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn coordinate_ideal() {
        // (x, y) in two variables has height 2
        let c = codimension_of_monomials(&[m(&[1, 0]), m(&[0, 1])], 2).unwrap();
        assert_eq!(c, 2);
    }

    #[test]
    fn principal_monomial() {
        // (xy) has height 1
        let c = codimension_of_monomials(&[m(&[1, 1])], 2).unwrap();
        assert_eq!(c, 1);
    }

    #[test]
    fn zero_ideal() {
        assert_eq!(codimension_of_monomials(&[], 3).unwrap(), 0);
    }

    #[test]
    fn minimalization_feeds_cover() {
        // (x^2, x^3 y) minimalizes to (x^2): height 1
        let c = codimension_of_monomials(&[m(&[2, 0]), m(&[3, 1])], 2).unwrap();
        assert_eq!(c, 1);
    }

    #[test]
    fn twisted_cubic_initial_ideal() {
        // (y1^2, y1 y2, y2^2) in four variables: cover {y1, y2}
        let c = codimension_of_monomials(
            &[m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])],
            4,
        )
        .unwrap();
        assert_eq!(c, 2);
    }
}
