//! Exact feasibility of small linear programs over the rationals.
//!
//! Phase I of the tableau simplex method with Bland's rule, so it terminates
//! on degenerate problems. Sizes here are tiny (a handful of rows, one column
//! per ideal generator), so a dense tableau is fine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Returns true iff `{x ≥ 0 : A x = b}` is nonempty.
///
/// `a` is row-major with every row of equal length.
pub fn is_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m + 1;
    let rhs = width - 1;

    // Rows with negative right-hand side are negated so that the artificial
    // basis starts feasible.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = b[i].is_negative();
        let mut r = vec![BigRational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            r[j] = if flip { -v.clone() } else { v.clone() };
        }
        r[n + i] = BigRational::one();
        r[rhs] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of "minimize the sum of artificials"
    let mut cost = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase I is bounded below by zero, so a pivot row always exists.
        let (p, _) = leave.expect("phase I objective is bounded");
        let pivot = t[p][enter].clone();
        for v in t[p].iter_mut() {
            *v /= &pivot;
        }
        let pivot_row = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, y) in cost.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        basis[p] = enter;
    }
    cost[rhs].is_zero()
}

pub(crate) fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
