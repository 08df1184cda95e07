//! Monomial orders.
//!
//! Three kinds are supported: lexicographic, weighted-degree reverse
//! lexicographic (the default everywhere, using the ring weights), and a
//! two-block elimination order that compares the front block first. All are
//! multiplicative well-orders, so Groebner computations terminate.

use std::cmp::Ordering;

use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseOrder {
    Lex,
    WDegRevLex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    WDegRevLex,
    /// Compare the `front` variables first (an elimination order for them),
    /// then the rest.
    Block {
        front: Vec<usize>,
        back: Vec<usize>,
        front_order: BaseOrder,
        back_order: BaseOrder,
    },
}

impl MonomialOrder {
    /// Elimination order that puts `front` variables ahead of the rest of a
    /// ring with `nvars` variables, weighted-degrevlex inside each block.
    pub fn elimination(front: impl IntoIterator<Item = usize>, nvars: usize) -> Self {
        let mut front: Vec<usize> = front.into_iter().collect();
        front.sort_unstable();
        front.dedup();
        let in_front: Vec<bool> = {
            let mut v = vec![false; nvars];
            for &i in &front {
                v[i] = true;
            }
            v
        };
        let back = (0..nvars).filter(|&i| !in_front[i]).collect();
        MonomialOrder::Block {
            front,
            back,
            front_order: BaseOrder::WDegRevLex,
            back_order: BaseOrder::WDegRevLex,
        }
    }

    pub fn cmp(&self, weights: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b, None),
            MonomialOrder::WDegRevLex => cmp_wdegrevlex(weights, a, b, None),
            MonomialOrder::Block {
                front,
                back,
                front_order,
                back_order,
            } => cmp_base(*front_order, weights, a, b, Some(front))
                .then_with(|| cmp_base(*back_order, weights, a, b, Some(back))),
        }
    }
}

fn cmp_base(
    kind: BaseOrder,
    weights: &[u32],
    a: &Monomial,
    b: &Monomial,
    subset: Option<&[usize]>,
) -> Ordering {
    match kind {
        BaseOrder::Lex => cmp_lex(a, b, subset),
        BaseOrder::WDegRevLex => cmp_wdegrevlex(weights, a, b, subset),
    }
}

fn cmp_lex(a: &Monomial, b: &Monomial, subset: Option<&[usize]>) -> Ordering {
    match subset {
        None => {
            for (x, y) in a.exponents().iter().zip(b.exponents()) {
                if x != y {
                    return x.cmp(y);
                }
            }
            Ordering::Equal
        }
        Some(vars) => {
            for &i in vars {
                let (x, y) = (a.exponent(i), b.exponent(i));
                if x != y {
                    return x.cmp(&y);
                }
            }
            Ordering::Equal
        }
    }
}

fn cmp_wdegrevlex(
    weights: &[u32],
    a: &Monomial,
    b: &Monomial,
    subset: Option<&[usize]>,
) -> Ordering {
    let (da, db) = match subset {
        None => (a.weighted_degree(weights), b.weighted_degree(weights)),
        Some(vars) => {
            let deg = |m: &Monomial| {
                vars.iter()
                    .map(|&i| m.exponent(i) as u64 * weights[i] as u64)
                    .sum::<u64>()
            };
            (deg(a), deg(b))
        }
    };
    if da != db {
        return da.cmp(&db);
    }
    // Reverse lex tie-break: at the last differing variable the *smaller*
    // exponent wins.
    match subset {
        None => {
            for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }
        Some(vars) => {
            for &i in vars.iter().rev() {
                let (x, y) = (a.exponent(i), b.exponent(i));
                if x != y {
                    return y.cmp(&x);
                }
            }
            Ordering::Equal
        }
    }
}
