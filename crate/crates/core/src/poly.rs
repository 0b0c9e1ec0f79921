//! Binomial bases, exact linear solves and rational polynomials.
//!
//! Hilbert polynomials are stored in the product basis
//! `B_α(n) = ∏_i C(n_i + α_i − 1, α_i)`, which for one variable is the
//! basis `C(n + d − 1 − i, d − i)` used for the classical coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Generalized binomial `C(a, k) = a(a−1)···(a−k+1)/k!`, defined for every
/// integer `a`.
pub fn binomial(a: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= a - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `∏_i C(n_i + α_i − 1, α_i)`.
pub fn basis_value(alpha: &[u32], n: &[i64]) -> BigInt {
    alpha
        .iter()
        .zip(n)
        .map(|(&a, &x)| binomial(&BigInt::from(x + a as i64 - 1), a))
        .product()
}

/// All `α ∈ N^s` with `|α| ≤ d`, in lexicographic order.
pub fn multi_indices(s: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(s: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == s {
            out.push(prefix.clone());
            return;
        }
        for a in 0..=left {
            prefix.push(a);
            go(s, left - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(s, d, &mut Vec::with_capacity(s), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Inconsistent,
    Underdetermined,
}

/// Solves `A x = b` exactly. Overdetermined systems are accepted when
/// consistent; a rank-deficient system is an error.
pub fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>, SolveError> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for c in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][c].is_zero()) else {
            return Err(SolveError::Underdetermined);
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][c].recip();
        for v in a[pivot_row].iter_mut() {
            *v *= &inv;
        }
        b[pivot_row] *= &inv;
        let prow = a[pivot_row].clone();
        let pb = b[pivot_row].clone();
        for r in 0..rows {
            if r != pivot_row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for (x, y) in a[r].iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
                b[r] -= &f * &pb;
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if b[pivot_row..].iter().any(|v| !v.is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    Ok(pivots.into_iter().map(|r| b[r].clone()).collect())
}

/// A polynomial in the monomial basis `n^β` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPolynomial {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl RationalPolynomial {
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    fn add_term(&mut self, beta: Vec<u32>, c: BigRational) {
        let slot = self.terms.entry(beta.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&beta);
        }
    }

    pub fn eval(&self, n: &[i64]) -> BigRational {
        let mut total = BigRational::zero();
        for (beta, c) in &self.terms {
            let mut m = BigInt::one();
            for (&b, &x) in beta.iter().zip(n) {
                m *= BigInt::from(x).pow(b);
            }
            total += c * BigRational::from_integer(m);
        }
        total
    }

    /// Expands `Σ_α (−1)^{d−|α|} e_α B_α(n)` into monomials.
    pub fn from_binomial_basis(s: usize, d: u32, coefficients: &BTreeMap<Vec<u32>, BigInt>) -> RationalPolynomial {
        let mut out = RationalPolynomial::default();
        for (alpha, e) in coefficients {
            if e.is_zero() {
                continue;
            }
            let deg: u32 = alpha.iter().sum();
            let sign = if (d - deg).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            // product over axes of the univariate expansion of C(n + a − 1, a)
            let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
            acc.insert(vec![0; s], BigRational::from_integer(sign * e));
            for (axis, &a) in alpha.iter().enumerate() {
                let uni = univariate_binomial(a);
                let mut next = BTreeMap::new();
                for (beta, c) in &acc {
                    for (k, u) in uni.iter().enumerate() {
                        if u.is_zero() {
                            continue;
                        }
                        let mut nb = beta.clone();
                        nb[axis] += k as u32;
                        let slot = next.entry(nb).or_insert_with(BigRational::zero);
                        *slot += c * u;
                    }
                }
                acc = next;
            }
            for (beta, c) in acc {
                out.add_term(beta, c);
            }
        }
        out
    }

    /// Inverse of [`from_binomial_basis`](Self::from_binomial_basis): peels off
    /// leading monomials from the top total degree down. Fails when a
    /// coefficient is not an integer or the degree exceeds `d`.
    pub fn to_binomial_basis(&self, s: usize, d: u32) -> Option<BTreeMap<Vec<u32>, BigInt>> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        for deg in (0..=d).rev() {
            let leading: Vec<Vec<u32>> = rest
                .terms
                .keys()
                .filter(|b| b.iter().sum::<u32>() == deg)
                .cloned()
                .collect();
            for beta in leading {
                let c = rest.terms[&beta].clone();
                // B_β has leading term n^β / ∏ β_i!
                let fact: BigInt = beta.iter().map(|&b| factorial(b)).product();
                let e = c * BigRational::from_integer(fact);
                if !e.is_integer() {
                    return None;
                }
                let sign = if (d - deg).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
                let e = e.to_integer() * &sign;
                let mut single = BTreeMap::new();
                single.insert(beta.clone(), e.clone());
                let expanded = RationalPolynomial::from_binomial_basis(s, d, &single);
                for (b, v) in expanded.terms {
                    rest.add_term(b, -v);
                }
                out.insert(beta, e);
            }
        }
        if rest.terms.is_empty() {
            Some(out)
        } else {
            None
        }
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// Coefficients of `C(n + a − 1, a)` as a polynomial in `n`, lowest degree first.
fn univariate_binomial(a: u32) -> Vec<BigRational> {
    // ∏_{j=0}^{a-1} (n + a − 1 − j) / a!
    let mut coeffs = vec![BigRational::one()];
    for j in 0..a {
        let c = BigRational::from_integer(BigInt::from(a as i64 - 1 - j as i64));
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (k, v) in coeffs.iter().enumerate() {
            next[k + 1] += v;
            next[k] += v * &c;
        }
        coeffs = next;
    }
    let f = BigRational::from_integer(factorial(a));
    coeffs.into_iter().map(|v| v / &f).collect()
}
