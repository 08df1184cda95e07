//! Exact dense Gaussian elimination over the rationals, used to solve the
//! small linear systems that pin down section numerators.

use num_traits::Zero;

use crate::poly::Coeff;

/// Solve `A x = b`. Returns a particular solution with every free variable
/// set to zero, or `None` if the system is inconsistent. Deterministic:
/// pivots are chosen as the first row with a nonzero entry in the first
/// unresolved column.
pub(crate) fn solve(mut a: Vec<Vec<Coeff>>, mut b: Vec<Coeff>, ncols: usize) -> Option<Vec<Coeff>> {
    let nrows = a.len();
    debug_assert_eq!(b.len(), nrows);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut row = 0usize;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let Some(pr) = (row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        b.swap(row, pr);
        let inv = {
            let p = a[row][col].clone();
            move |c: &Coeff| c / &p
        };
        for c in col..ncols {
            a[row][c] = inv(&a[row][c]);
        }
        b[row] = inv(&b[row]);
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..ncols {
                    let delta = &f * &a[row][c];
                    a[r][c] = &a[r][c] - &delta;
                }
                let delta = &f * &b[row];
                b[r] = &b[r] - &delta;
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    // consistency: zero rows must have zero rhs
    for r in row..nrows {
        if !b[r].is_zero() {
            return None;
        }
    }
    let mut x = vec![Coeff::zero(); ncols];
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            x[col] = b[*r].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_int;

    fn row(vals: &[i64]) -> Vec<Coeff> {
        vals.iter().map(|&v| coeff_int(v)).collect()
    }

    #[test]
    fn solves_square_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = vec![row(&[1, 1]), row(&[1, -1])];
        let b = row(&[3, 1]);
        let x = solve(a, b, 2).unwrap();
        assert_eq!(x, row(&[2, 1]));
    }

    #[test]
    fn underdetermined_sets_free_vars_to_zero() {
        // x + y = 2 with free y: returns (2, 0)
        let a = vec![row(&[1, 1])];
        let b = row(&[2]);
        let x = solve(a, b, 2).unwrap();
        assert_eq!(x, row(&[2, 0]));
    }

    #[test]
    fn detects_inconsistency() {
        let a = vec![row(&[1, 1]), row(&[2, 2])];
        let b = row(&[1, 3]);
        assert!(solve(a, b, 2).is_none());
    }
}
