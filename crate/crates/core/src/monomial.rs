//! Exponent vectors.

/// A monomial as an exponent vector, one slot per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// x_i^e
    pub fn var_pow(nvars: usize, index: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = e;
        Monomial(exps)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// self / other, if other divides self.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Divide out variable `i` once, if present.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut exps = self.0.clone();
        exps[i] -= 1;
        Some(Monomial(exps))
    }

    /// Re-index exponents into another ring; `map[i] = None` requires exponent 0.
    pub fn project(&self, map: &[Option<usize>], new_len: usize) -> Option<Monomial> {
        let mut exps = vec![0u32; new_len];
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match map[i] {
                Some(j) => exps[j] = e,
                None => return None,
            }
        }
        Some(Monomial(exps))
    }

    /// Embed into a larger ring; `map[i]` is the slot of old variable `i`.
    pub fn embed(&self, map: &[usize], new_len: usize) -> Monomial {
        let mut exps = vec![0u32; new_len];
        for (i, &e) in self.0.iter().enumerate() {
            exps[map[i]] = e;
        }
        Monomial(exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_and_lcm() {
        let a = Monomial::from_exponents(vec![2, 1, 0]);
        let b = Monomial::from_exponents(vec![1, 0, 1]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 1, 1]);
        assert!(a.checked_div(&b).is_none());
        assert_eq!(
            a.checked_div(&Monomial::from_exponents(vec![1, 1, 0]))
                .unwrap()
                .exponents(),
            &[1, 0, 0]
        );
        assert!(!a.coprime(&b));
        assert!(Monomial::from_exponents(vec![0, 1, 0]).coprime(&b));
    }

    #[test]
    fn weighted_degree() {
        let m = Monomial::from_exponents(vec![1, 2]);
        assert_eq!(m.weighted_degree(&[2, 1]), 4);
        assert_eq!(m.total_degree(), 3);
    }
}
