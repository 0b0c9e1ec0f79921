//! Brute-force counterparts of the library computations.
#![allow(dead_code)]

use filtralab_core::MonomialIdeal;

pub type Mono = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn add(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Minimal generators plus the monomials killed by the ring.
#[derive(Clone, Debug)]
pub struct Naive {
    pub gens: Vec<Mono>,
    pub quotient: Vec<Mono>,
}

fn prune(mut v: Vec<Mono>) -> Vec<Mono> {
    v.sort();
    v.dedup();
    let keep: Vec<bool> = (0..v.len())
        .map(|i| !(0..v.len()).any(|j| j != i && divides(&v[j], &v[i])))
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
                let p = add(a, b);
                if !self.quotient.iter().any(|q| divides(q, &p)) {
                    out.push(p);
                }
            }
        }
        Naive::new(out, self.quotient.clone())
    }

    /// `I^0, I^1, ..., I^k`.
    pub fn powers(&self, k: u32) -> Vec<Naive> {
        let mut out = vec![Naive { gens: vec![vec![0; self.nvars()]], quotient: self.quotient.clone() }];
        for _ in 0..k {
            let next = out.last().unwrap().mul(self);
            out.push(next);
        }
        out
    }

    pub fn bounds(&self) -> Option<Vec<u32>> {
        (0..self.nvars())
            .map(|i| {
                self.gens
                    .iter()
                    .chain(&self.quotient)
                    .filter(|g| g.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                    .map(|g| g[i])
                    .min()
            })
            .collect()
    }

    pub fn colength(&self) -> u64 {
        let b = self.bounds().expect("not m-primary");
        box_points(&b).iter().filter(|a| !self.contains(a)).count() as u64
    }
}

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

/// `{z : z·I^k ⊆ I^{k+1} for some k ≤ kmax}` restricted to the box of `I`.
pub fn ratliff_rush_set(ideal: &Naive, kmax: u32) -> Vec<Mono> {
    let powers = ideal.powers(kmax + 1);
    box_points(&ideal.bounds().unwrap())
        .into_iter()
        .filter(|z| {
            ideal.contains(z)
                || (1..=kmax as usize).any(|k| powers[k].gens.iter().all(|g| powers[k + 1].contains(&add(z, g))))
        })
        .collect()
}

/// `{z : z^k ∈ I^k for some k ≤ kmax}` restricted to the box of `I`.
pub fn power_membership_set(ideal: &Naive, kmax: u32) -> Vec<Mono> {
    let powers = ideal.powers(kmax);
    box_points(&ideal.bounds().unwrap())
        .into_iter()
        .filter(|z| (1..=kmax).any(|k| powers[k as usize].contains(&z.iter().map(|e| e * k).collect::<Mono>())))
        .collect()
}

/// `e_0..e_d` from values at `first, first + 1, ...` where the function is
/// already polynomial, through forward differences and extrapolation to
/// `0, −1, ..., −d`.
pub fn fit_by_differences(first: i64, values: &[i128], d: usize) -> Vec<i128> {
    assert!(values.len() > d + 1, "need at least one check point");
    let mut diffs = vec![values.to_vec()];
    for j in 0..=d {
        let next: Vec<i128> = diffs[j].windows(2).map(|w| w[1] - w[0]).collect();
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
        e[d - m] = if d.is_multiple_of(2) { rest } else { -rest };
    }
    e
}

pub fn binom(a: i64, k: u32) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 0..k as i128 {
        num *= a as i128 - j;
        den *= j + 1;
    }
    num / den
}
