//! Hilbert functions and polynomials of filtrations, defect tables and
//! local-cohomology lengths in dimension two.
//!
//! Polynomials are written in the basis
//! `P(n) = Σ_{|α| ≤ d} (−1)^{d−|α|} e_α ∏_i C(n_i + α_i − 1, α_i)`;
//! for a single axis this is `Σ_i (−1)^i e_i C(n + d − 1 − i, d − i)` with
//! `e_i = e_{(d−i)}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::filtration::{ratliff_rush_piece, Filtration, RrConfig};
use crate::monomial::CmStatus;
use crate::poly::{self, basis_value, multi_indices, RationalPolynomial, SolveError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitConfig {
    /// Points checked beyond the fitting grid, per axis.
    pub margin: usize,
    /// First base index tried.
    pub start: i64,
    /// Last base index tried before giving up.
    pub max_base: i64,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig { margin: 4, start: 0, max_base: 24 }
    }
}

/// Inclusive per-axis range `lo..=hi`; in arity `s` it is the box `[lo, hi]^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Window {
        Window { lo, hi }
    }

    pub fn points(&self, s: usize) -> Vec<Vec<i64>> {
        grid(&vec![self.lo; s], self.hi - self.lo)
    }
}

/// `base + [0..=side]^s`, last axis fastest.
fn grid(base: &[i64], side: i64) -> Vec<Vec<i64>> {
    if side < 0 {
        return Vec::new();
    }
    let s = base.len();
    let mut out = Vec::new();
    let mut off = vec![0i64; s];
    loop {
        out.push(base.iter().zip(&off).map(|(b, o)| b + o).collect());
        let mut i = s;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            off[i] += 1;
            if off[i] <= side {
                break;
            }
            off[i] = 0;
        }
    }
}

fn sign(d: usize, alpha: &[u32]) -> bool {
    let deg: usize = alpha.iter().map(|&a| a as usize).sum();
    (d - deg) % 2 == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    arity: usize,
    dimension: usize,
    coefficients: BTreeMap<Vec<u32>, BigInt>,
}

impl HilbertPolynomial {
    /// Builds from `e_α`; missing indices are zero.
    pub fn new(arity: usize, dimension: usize, given: BTreeMap<Vec<u32>, BigInt>) -> Result<HilbertPolynomial> {
        let mut coefficients: BTreeMap<Vec<u32>, BigInt> =
            multi_indices(arity, dimension as u32).into_iter().map(|a| (a, BigInt::zero())).collect();
        for (alpha, e) in given {
            match coefficients.get_mut(&alpha) {
                Some(slot) => *slot = e,
                None => return Err(Error::Input(format!("index {alpha:?} has degree above {dimension}"))),
            }
        }
        Ok(HilbertPolynomial { arity, dimension, coefficients })
    }

    /// Univariate constructor from `e_0, ..., e_d`.
    pub fn from_univariate(e: &[BigInt]) -> HilbertPolynomial {
        let d = e.len().saturating_sub(1);
        let given = e.iter().enumerate().map(|(i, v)| (vec![(d - i) as u32], v.clone())).collect();
        HilbertPolynomial::new(1, d, given).expect("indices are in range")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// All `e_α`, keyed by `α` in lexicographic order.
    pub fn coefficients(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.coefficients
    }

    pub fn coefficient(&self, alpha: &[u32]) -> BigInt {
        self.coefficients.get(alpha).cloned().unwrap_or_default()
    }

    /// `e_i` of a univariate polynomial.
    pub fn e(&self, i: usize) -> BigInt {
        assert_eq!(self.arity, 1, "e(i) is defined for one axis");
        if i > self.dimension {
            return BigInt::zero();
        }
        self.coefficient(&[(self.dimension - i) as u32])
    }

    /// `e_0, ..., e_d` of a univariate polynomial.
    pub fn univariate_coefficients(&self) -> Vec<BigInt> {
        (0..=self.dimension).map(|i| self.e(i)).collect()
    }

    pub fn eval(&self, n: &[i64]) -> BigInt {
        let mut total = BigInt::zero();
        for (alpha, e) in &self.coefficients {
            if e.is_zero() {
                continue;
            }
            let v = e * basis_value(alpha, n);
            if sign(self.dimension, alpha) {
                total -= v;
            } else {
                total += v;
            }
        }
        total
    }

    /// Expansion in the monomials `n^β`.
    pub fn to_standard(&self) -> RationalPolynomial {
        RationalPolynomial::from_binomial_basis(self.arity, self.dimension as u32, &self.coefficients)
    }
}

/// Largest `n` with `P(n) ≠ H(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Postulation {
    /// `P ≡ H` on all of `Z`.
    NegativeInfinity,
    At(i64),
}

impl fmt::Display for Postulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Postulation::NegativeInfinity => f.write_str("-inf"),
            Postulation::At(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitCertificate {
    /// Base index of the accepted grid.
    pub base: Vec<i64>,
    pub fit_points: Vec<Vec<i64>>,
    pub verification_points: Vec<Vec<i64>>,
    /// Number of bases tried, the accepted one included.
    pub attempts: usize,
}

#[derive(Clone, Debug)]
pub struct HilbertSummary {
    pub arity: usize,
    pub dimension: usize,
    /// Every `H(n)` evaluated while fitting.
    pub function_table: BTreeMap<Vec<i64>, BigInt>,
    pub polynomial: HilbertPolynomial,
    /// Univariate only.
    pub postulation: Option<Postulation>,
    pub certificate: FitCertificate,
}

impl HilbertSummary {
    /// Index from which `χ` is known to vanish: `n(F) + 1` on one axis, the
    /// fitting base otherwise. `None` when `χ ≡ 0`.
    pub fn stable_from(&self) -> Option<Vec<i64>> {
        match self.postulation {
            Some(Postulation::NegativeInfinity) => None,
            Some(Postulation::At(n)) => Some(vec![n + 1]),
            None => Some(self.certificate.base.clone()),
        }
    }
}

/// `H_F(n) = λ(R/F(n))`; zero when every entry of `n` is `≤ 0`.
pub fn hilbert_function(f: &Filtration, n: &[i64]) -> Result<BigInt> {
    if n.len() != f.arity() {
        return Err(Error::Arity { expected: f.arity(), found: n.len() });
    }
    if n.iter().all(|&v| v <= 0) {
        return Ok(BigInt::zero());
    }
    f.piece(n)?.colength()
}

struct Table<'a> {
    f: &'a Filtration,
    values: BTreeMap<Vec<i64>, BigInt>,
}

impl Table<'_> {
    fn get(&mut self, n: &[i64]) -> Result<BigInt> {
        if let Some(v) = self.values.get(n) {
            return Ok(v.clone());
        }
        let v = hilbert_function(self.f, n)?;
        self.values.insert(n.to_vec(), v.clone());
        Ok(v)
    }
}

fn fit_on(
    table: &mut Table<'_>,
    s: usize,
    d: usize,
    fit_points: &[Vec<i64>],
) -> Result<std::result::Result<HilbertPolynomial, String>> {
    let alphas = multi_indices(s, d as u32);
    let mut a = Vec::with_capacity(fit_points.len());
    let mut b = Vec::with_capacity(fit_points.len());
    for n in fit_points {
        let row = alphas
            .iter()
            .map(|alpha| {
                let v = BigRational::from_integer(basis_value(alpha, n));
                if sign(d, alpha) {
                    -v
                } else {
                    v
                }
            })
            .collect();
        a.push(row);
        b.push(BigRational::from_integer(table.get(n)?));
    }
    let x = match poly::solve_exact(a, b) {
        Ok(x) => x,
        Err(SolveError::Inconsistent) => return Ok(Err("values on the grid fit no polynomial of degree d".into())),
        Err(SolveError::Underdetermined) => return Ok(Err("fitting grid does not determine the coefficients".into())),
    };
    let mut coefficients = BTreeMap::new();
    for (alpha, v) in alphas.into_iter().zip(x) {
        if !v.is_integer() {
            return Ok(Err(format!("coefficient e_{alpha:?} = {v} is not an integer")));
        }
        coefficients.insert(alpha, v.to_integer());
    }
    Ok(Ok(HilbertPolynomial { arity: s, dimension: d, coefficients }))
}

fn fit_any(f: &Filtration, config: FitConfig) -> Result<HilbertSummary> {
    let s = f.arity();
    let d = f.ring().dimension();
    let mut table = Table { f, values: BTreeMap::new() };
    let mut last_reason = String::from("empty search range");
    let mut attempts = 0;
    for t in config.start..=config.max_base {
        attempts += 1;
        let base = vec![t; s];
        let fit_points = grid(&base, d as i64);
        let candidate = match fit_on(&mut table, s, d, &fit_points)? {
            Ok(p) => p,
            Err(reason) => {
                last_reason = format!("base {t}: {reason}");
                continue;
            }
        };
        let verification_points: Vec<Vec<i64>> = grid(&base, (d + config.margin) as i64)
            .into_iter()
            .filter(|n| n.iter().any(|&v| v > t + d as i64))
            .collect();
        let mut ok = true;
        for n in &verification_points {
            if table.get(n)? != candidate.eval(n) {
                last_reason = format!("base {t}: polynomial disagrees with H at {n:?}");
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let certificate = FitCertificate { base, fit_points, verification_points, attempts };
        let mut summary = HilbertSummary {
            arity: s,
            dimension: d,
            function_table: BTreeMap::new(),
            polynomial: candidate,
            postulation: None,
            certificate,
        };
        if s == 1 {
            summary.postulation = Some(scan_postulation(&mut table, &summary.polynomial, t, d)?);
        }
        summary.function_table = table.values;
        return Ok(summary);
    }
    Err(Error::Fit(format!(
        "no stable fit for bases {}..={} with margin {}; last failure at {last_reason}",
        config.start, config.max_base, config.margin
    )))
}

fn scan_postulation(table: &mut Table<'_>, p: &HilbertPolynomial, stable: i64, d: usize) -> Result<Postulation> {
    // P agrees with H from `stable` on; below 0, H vanishes and a nonzero P of
    // degree d has at most d roots.
    let floor = -(d as i64) - 1;
    let mut n = stable - 1;
    while n >= floor {
        if table.get(&[n])? != p.eval(&[n]) {
            return Ok(Postulation::At(n));
        }
        n -= 1;
    }
    Ok(Postulation::NegativeInfinity)
}

/// Fits the Hilbert polynomial of a one-axis filtration.
pub fn fit_polynomial(f: &Filtration, config: FitConfig) -> Result<HilbertSummary> {
    if f.arity() != 1 {
        return Err(Error::Arity { expected: 1, found: f.arity() });
    }
    fit_any(f, config)
}

/// Fits the Hilbert polynomial of a filtration with `s ≥ 2` axes.
pub fn fit_polynomial_multi(f: &Filtration, config: FitConfig) -> Result<HilbertSummary> {
    if f.arity() < 2 {
        return Err(Error::Input("multi-graded fit needs at least two axes".into()));
    }
    fit_any(f, config)
}

/// Dispatches on arity.
pub fn fit(f: &Filtration, config: FitConfig) -> Result<HilbertSummary> {
    fit_any(f, config)
}

/// `n(F)` of a one-axis filtration.
pub fn postulation_number(summary: &HilbertSummary) -> Result<Postulation> {
    summary.postulation.ok_or_else(|| Error::Unsupported("postulation number of a multi-graded filtration".into()))
}

/// Evaluates `P(n) = H(n)` at `count` further points past the verified grid,
/// stepping along the diagonal. Returns the first disagreement.
pub fn check_beyond(f: &Filtration, summary: &HilbertSummary, count: usize) -> Result<Option<Vec<i64>>> {
    let top = summary.certificate.verification_points.iter().flatten().copied().max().unwrap_or(0);
    for k in 1..=count as i64 {
        let n = vec![top + k; summary.arity];
        if hilbert_function(f, &n)? != summary.polynomial.eval(&n) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectTable {
    /// `(n, χ(n))` in window order.
    pub rows: Vec<(Vec<i64>, BigInt)>,
    pub stable_from: Option<Vec<i64>>,
}

/// `χ(n) = P(n) − H(n)` over a window.
pub fn defect_table(f: &Filtration, summary: &HilbertSummary, window: Window) -> Result<DefectTable> {
    let mut rows = Vec::new();
    for n in window.points(f.arity()) {
        let h = match summary.function_table.get(&n) {
            Some(v) => v.clone(),
            None => hilbert_function(f, &n)?,
        };
        let chi = summary.polynomial.eval(&n) - h;
        rows.push((n, chi));
    }
    Ok(DefectTable { rows, stable_from: summary.stable_from() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyRow {
    pub n: Vec<i64>,
    /// `λ(breve F(n) / F(n))`.
    pub h1: BigInt,
    /// `χ(n) + h1`.
    pub h2: BigInt,
    /// The row `n = −1` of a one-axis table, where `H = 0` and `h1 = 0`,
    /// so `h2 = P(−1) = e_1 + e_2`.
    pub derived: bool,
}

pub type CohomologyTable = Vec<CohomologyRow>;

fn require_dim2_cm(f: &Filtration) -> Result<()> {
    let d = f.ring().dimension();
    if d != 2 {
        return Err(Error::Unsupported(format!("cohomology table in dimension {d}; only dimension 2 is supported")));
    }
    if f.ring().cm_status() == CmStatus::Unknown {
        return Err(Error::Unsupported("cohomology table needs a Cohen-Macaulay ring; assert it with `cm`".into()));
    }
    Ok(())
}

/// `h1_n` and `h2_n` over the part of a window with `n ≥ 0`, plus the derived
/// row `n = −1` of a one-axis table when the window reaches it.
pub fn cohomology_table_dim2(
    f: &Filtration,
    summary: &HilbertSummary,
    window: Window,
    rr: RrConfig,
) -> Result<CohomologyTable> {
    require_dim2_cm(f)?;
    let mut rows = Vec::new();
    for n in window.points(f.arity()) {
        let chi = summary.polynomial.eval(&n)
            - match summary.function_table.get(&n) {
                Some(v) => v.clone(),
                None => hilbert_function(f, &n)?,
            };
        if n.iter().any(|&v| v < 0) {
            if n == [-1] {
                rows.push(CohomologyRow { n, h1: BigInt::zero(), h2: chi, derived: true });
            }
            continue;
        }
        let piece = f.piece(&n)?;
        let breve = ratliff_rush_piece(f, &n, rr)?;
        let h1 = piece.colength()? - breve.colength()?;
        let h2 = &chi + &h1;
        rows.push(CohomologyRow { n, h1, h2, derived: false });
    }
    Ok(rows)
}

/// `λ((breve F(n + e_i) ∩ F(n)) / F(n + e_i))` over a window of `n ≥ 0`.
pub fn g_torsion_table(f: &Filtration, axis: usize, window: Window, rr: RrConfig) -> Result<Vec<(Vec<i64>, BigInt)>> {
    if axis >= f.arity() {
        return Err(Error::Input(format!("axis {} out of range for arity {}", axis + 1, f.arity())));
    }
    let mut rows = Vec::new();
    for n in window.points(f.arity()) {
        if n.iter().any(|&v| v < 0) {
            continue;
        }
        let mut up = n.clone();
        up[axis] += 1;
        let top = f.piece(&up)?;
        let inter = ratliff_rush_piece(f, &up, rr)?.intersect(&f.piece(&n)?)?;
        rows.push((n, top.colength()? - inter.colength()?));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::AxisKind;
    use crate::monomial::{AmbientRing, ExponentVector, MonomialIdeal};
    use std::sync::Arc;

    fn ideal(ring: &Arc<AmbientRing>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(ring, gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn xy() -> Arc<AmbientRing> {
        AmbientRing::polynomial(["x", "y"])
    }

    fn marley() -> Arc<Filtration> {
        let r = AmbientRing::polynomial(["x", "y", "z"]);
        let i = ideal(&r, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[2, 1, 0], &[1, 2, 0], &[0, 1, 2], &[1, 1, 1]]);
        Filtration::adic(&i).unwrap()
    }

    #[test]
    fn hilbert_function_values() {
        let r = xy();
        let m = Filtration::adic(&MonomialIdeal::maximal(&r)).unwrap();
        assert_eq!(hilbert_function(&m, &[3]).unwrap(), BigInt::from(6));
        assert_eq!(hilbert_function(&m, &[-2]).unwrap(), BigInt::zero());
        assert_eq!(hilbert_function(&marley(), &[1]).unwrap(), BigInt::from(14));
        let mm = Filtration::product(vec![
            (MonomialIdeal::maximal(&r), AxisKind::Adic),
            (MonomialIdeal::maximal(&r), AxisKind::Adic),
        ])
        .unwrap();
        assert_eq!(hilbert_function(&mm, &[1, 1]).unwrap(), BigInt::from(3));
        assert_eq!(hilbert_function(&mm, &[0, -1]).unwrap(), BigInt::zero());
    }

    #[test]
    fn maximal_ideal_fits() {
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let s = fit_polynomial(&Filtration::adic(&m).unwrap(), FitConfig::default()).unwrap();
        assert_eq!(s.polynomial.univariate_coefficients(), ints(&[1, 0, 0]));
        assert_eq!(s.postulation, Some(Postulation::At(-2)));
        let s2 = fit_polynomial(&Filtration::adic(&m.power(2)).unwrap(), FitConfig::default()).unwrap();
        assert_eq!(s2.polynomial.univariate_coefficients(), ints(&[4, 1, 0]));
        assert_eq!(s2.postulation, Some(Postulation::At(-1)));
    }

    #[test]
    fn marley_coefficients() {
        let f = marley();
        let s = fit_polynomial(&f, FitConfig::default()).unwrap();
        assert_eq!(s.polynomial.univariate_coefficients(), ints(&[27, 18, 4, -1]));
        assert_eq!(postulation_number(&s).unwrap(), Postulation::At(0));
        let chi = defect_table(&f, &s, Window::new(0, 3)).unwrap();
        assert_eq!(chi.rows[0].1, BigInt::from(1));
        assert!(chi.rows[1..].iter().all(|(_, v)| v.is_zero()));
        assert_eq!(check_beyond(&f, &s, 8).unwrap(), None);
    }

    #[test]
    fn normal_filtration_of_pure_powers() {
        let r = xy();
        let f = Filtration::normal(&ideal(&r, &[&[3, 0], &[0, 3]])).unwrap();
        let s = fit_polynomial(&f, FitConfig::default()).unwrap();
        assert_eq!(s.polynomial.univariate_coefficients(), ints(&[9, 3, 0]));
        let chi = defect_table(&f, &s, Window::new(0, 4)).unwrap();
        assert!(chi.rows.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn product_of_maximal_ideals() {
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let f = Filtration::product(vec![(m.clone(), AxisKind::Adic), (m, AxisKind::Adic)]).unwrap();
        let s = fit_polynomial_multi(&f, FitConfig::default()).unwrap();
        for (alpha, e) in s.polynomial.coefficients() {
            let expected = if alpha.iter().sum::<u32>() == 2 { 1 } else { 0 };
            assert_eq!(*e, BigInt::from(expected), "e_{alpha:?}");
        }
        assert_eq!(check_beyond(&f, &s, 6).unwrap(), None);
    }

    #[test]
    fn cohomology_of_non_ratliff_rush_closed_ideal() {
        let r = xy();
        let f = Filtration::adic(&ideal(&r, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]])).unwrap();
        let s = fit_polynomial(&f, FitConfig::default()).unwrap();
        let e = s.polynomial.univariate_coefficients();
        let rows = cohomology_table_dim2(&f, &s, Window::new(-1, 4), RrConfig::default()).unwrap();
        assert!(rows[0].derived);
        assert_eq!(rows[0].h2, &e[1] + &e[2]);
        assert_eq!(rows[1].n, vec![0]);
        assert_eq!(rows[1].h2, e[2]);
        assert_eq!(rows[2].h1, BigInt::from(1));
        for w in rows.windows(2) {
            assert!(w[0].h2 >= w[1].h2);
        }
        assert!(rows.iter().all(|r| r.h1 >= BigInt::zero() && r.h2 >= BigInt::zero()));
        let g = g_torsion_table(&f, 0, Window::new(0, 3), RrConfig::default()).unwrap();
        assert_eq!(g[0].1, BigInt::from(1));
        assert!(g[2..].iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn cohomology_requires_dimension_two() {
        let f = marley();
        let s = fit_polynomial(&f, FitConfig::default()).unwrap();
        assert!(matches!(
            cohomology_table_dim2(&f, &s, Window::new(0, 1), RrConfig::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn ratliff_rush_closed_filtration_has_no_torsion() {
        let r = xy();
        let f = Filtration::adic(&ideal(&r, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]])).unwrap();
        let rr = Filtration::ratliff_rush(&f, RrConfig::default());
        let g = g_torsion_table(&rr, 0, Window::new(0, 3), RrConfig::default()).unwrap();
        assert!(g.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn grid_order() {
        assert_eq!(grid(&[1, 5], 1), vec![vec![1, 5], vec![1, 6], vec![2, 5], vec![2, 6]]);
        assert_eq!(Window::new(-1, 1).points(1), vec![vec![-1], vec![0], vec![1]]);
    }
}
