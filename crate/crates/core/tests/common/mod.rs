//! Slow, direct reimplementations used as oracles by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use filtralab_core::{AmbientRing, ExponentVector, MonomialIdeal};
use proptest::prelude::*;

pub type Mono = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Generator list with no canonical form beyond dropping non-minimal entries.
#[derive(Clone, Debug)]
pub struct Naive {
    pub gens: Vec<Mono>,
    pub quotient: Vec<Mono>,
}

fn prune(mut v: Vec<Mono>) -> Vec<Mono> {
    v.sort();
    v.dedup();
    let keep: Vec<bool> = (0..v.len())
        .map(|i| !(0..v.len()).any(|j| j != i && divides(&v[j], &v[i]) && v[j] != v[i]))
        .collect();
    v.into_iter().zip(keep).filter(|(_, k)| *k).map(|(m, _)| m).collect()
}

impl Naive {
    pub fn new(gens: Vec<Mono>, quotient: Vec<Mono>) -> Naive {
        Naive { gens: prune(gens), quotient }
    }

    pub fn of(ideal: &MonomialIdeal) -> Naive {
        Naive::new(
            ideal.generators().iter().map(|g| g.as_slice().to_vec()).collect(),
            ideal.ring().quotient_generators().iter().map(|g| g.as_slice().to_vec()).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.gens.first().or(self.quotient.first()).map_or(0, Vec::len)
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.gens.iter().chain(&self.quotient).any(|g| divides(g, a))
    }

    pub fn mul(&self, other: &Naive) -> Naive {
        let mut out = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p: Mono = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if !self.quotient.iter().any(|q| divides(q, &p)) {
                    out.push(p);
                }
            }
        }
        Naive::new(out, self.quotient.clone())
    }

    pub fn unit(nvars: usize, quotient: Vec<Mono>) -> Naive {
        Naive { gens: vec![vec![0; nvars]], quotient }
    }

    pub fn power(&self, k: u32) -> Naive {
        let mut acc = Naive::unit(self.nvars(), self.quotient.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Smallest pure power per variable among generators and quotient.
    pub fn bounds(&self) -> Vec<u32> {
        let v = self.nvars();
        (0..v)
            .map(|i| {
                self.gens
                    .iter()
                    .chain(&self.quotient)
                    .filter(|g| g.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                    .map(|g| g[i])
                    .min()
                    .expect("not m-primary")
            })
            .collect()
    }

    pub fn colength(&self) -> u64 {
        box_points(&self.bounds()).iter().filter(|a| !self.contains(a)).count() as u64
    }
}

/// Every point of `∏ [0, b_i)`.
pub fn box_points(bounds: &[u32]) -> Vec<Mono> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p: Mono| {
                (0..b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn ring(nvars: usize) -> Arc<AmbientRing> {
    let names: Vec<String> = (1..=nvars).map(|i| format!("x{i}")).collect();
    AmbientRing::polynomial(names)
}

pub fn ideal(ring: &Arc<AmbientRing>, gens: &[Mono]) -> MonomialIdeal {
    MonomialIdeal::from_generators(ring, gens.iter().map(|g| ExponentVector::new(g.clone())).collect()).unwrap()
}

pub fn ev(a: &[u32]) -> ExponentVector {
    ExponentVector::new(a.to_vec())
}

/// Generators of an m-primary ideal: one pure power per variable plus a few
/// mixed monomials.
pub fn m_primary_gens(nvars: usize, max_exp: u32, extra: usize) -> impl Strategy<Value = Vec<Mono>> {
    (
        proptest::collection::vec(1..=max_exp, nvars),
        proptest::collection::vec(proptest::collection::vec(0..max_exp, nvars), 0..=extra),
    )
        .prop_map(move |(powers, mixed)| {
            let mut gens: Vec<Mono> = powers
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    let mut g = vec![0; nvars];
                    g[i] = p;
                    g
                })
                .collect();
            gens.extend(mixed.into_iter().filter(|m| m.iter().any(|&e| e > 0)));
            gens
        })
}

/// Exact rational-free fit of `Σ (−1)^i e_i C(n + d − 1 − i, d − i)` from
/// values at consecutive integers `first, first + 1, ...` on which the
/// Hilbert function is already polynomial. Uses forward differences,
/// extrapolation to `n = 0, −1, ..., −d`, and a unit-diagonal triangular
/// solve. Panics if the values are not those of a degree-`d` polynomial.
pub fn fit_by_differences(first: i64, values: &[i128], d: usize) -> Vec<i128> {
    assert!(values.len() > d + 1, "need at least one check point");
    let mut diffs = vec![values.to_vec()];
    for j in 0..=d {
        let prev = &diffs[j];
        let next: Vec<i128> = prev.windows(2).map(|w| w[1] - w[0]).collect();
        diffs.push(next);
    }
    assert!(diffs[d + 1].iter().all(|&v| v == 0), "values are not polynomial of degree <= {d}");
    let newton: Vec<i128> = (0..=d).map(|j| diffs[j][0]).collect();
    let p = |n: i64| -> i128 { (0..=d).map(|j| newton[j] * binom(n - first, j as u32)).sum() };
    let mut e = vec![0i128; d + 1];
    for m in 0..=d {
        let n = -(m as i64);
        let mut rest = p(n);
        for i in (d - m + 1)..=d {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            rest -= sign * e[i] * binom(d as i64 - 1 - i as i64 - m as i64, (d - i) as u32);
        }
        let diag = if d.is_multiple_of(2) { 1 } else { -1 };
        e[d - m] = rest * diag;
    }
    e
}

/// Generalized binomial coefficient in `i128`.
pub fn binom(a: i64, k: u32) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 0..k as i128 {
        num *= a as i128 - j;
        den *= j + 1;
    }
    num / den
}
