//! Checkers that evaluate classical statements about Hilbert coefficients,
//! reduction numbers and postulation numbers on concrete filtrations.
//!
//! Every checker returns a [`TheoremReport`]. Reductions are searched only
//! among monomial candidates: those supplied by the caller plus the ideal of
//! pure powers in `F(1)` and `F(1)` itself. A candidate with exactly `d`
//! generators that is a reduction is a parameter ideal, hence a minimal
//! reduction; reduction numbers computed from such candidates are upper
//! bounds for `r(F)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::filtration::{ratliff_rush_piece, Filtration, RrConfig};
use crate::hilbert::{self, FitConfig, Postulation, Window};
use crate::monomial::{CmStatus, ExponentVector, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Verified,
    Conditional,
    Inapplicable,
    Violated,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Conditional => "conditional",
            Verdict::Inapplicable => "inapplicable",
            Verdict::Violated => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    Integer(BigInt),
    Boolean(bool),
    Text(String),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Integer(v) => write!(f, "{v}"),
            Quantity::Boolean(b) => write!(f, "{b}"),
            Quantity::Text(t) => f.write_str(t),
        }
    }
}

impl From<BigInt> for Quantity {
    fn from(v: BigInt) -> Self {
        Quantity::Integer(v)
    }
}

impl From<&BigInt> for Quantity {
    fn from(v: &BigInt) -> Self {
        Quantity::Integer(v.clone())
    }
}

impl From<i64> for Quantity {
    fn from(v: i64) -> Self {
        Quantity::Integer(BigInt::from(v))
    }
}

impl From<bool> for Quantity {
    fn from(v: bool) -> Self {
        Quantity::Boolean(v)
    }
}

impl From<String> for Quantity {
    fn from(v: String) -> Self {
        Quantity::Text(v)
    }
}

impl From<&str> for Quantity {
    fn from(v: &str) -> Self {
        Quantity::Text(v.to_string())
    }
}

impl From<Postulation> for Quantity {
    fn from(p: Postulation) -> Self {
        match p {
            Postulation::At(n) => Quantity::Integer(BigInt::from(n)),
            Postulation::NegativeInfinity => Quantity::Text("-inf".into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisStatus {
    /// Established by computation or automatic for the ring.
    Holds,
    /// Declared in the input.
    Asserted,
    /// Not computed; the verdict depends on it.
    Assumed,
    Fails,
}

impl HypothesisStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            HypothesisStatus::Holds => "holds",
            HypothesisStatus::Asserted => "asserted",
            HypothesisStatus::Assumed => "assumed",
            HypothesisStatus::Fails => "fails",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
}

/// Everything needed to replay a violated check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub ring: String,
    pub filtration: String,
    pub candidates: Vec<String>,
    pub window: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    pub subject: String,
    pub hypotheses: Vec<Hypothesis>,
    pub quantities: Vec<(String, Quantity)>,
    pub verdict: Verdict,
    pub trail: Vec<String>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub fit: FitConfig,
    pub rr: RrConfig,
    /// `W` for windowed reduction numbers.
    pub reduction_window: usize,
    /// Largest `n` used for identities checked index by index.
    pub window: i64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { fit: FitConfig::default(), rr: RrConfig::default(), reduction_window: 8, window: 6 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `J I^n = I^{n+1}` at one index propagates to all larger ones.
    AdicClosedForm,
    Windowed,
}

impl CertificateKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateKind::AdicClosedForm => "adic-closed-form",
            CertificateKind::Windowed => "windowed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub candidate: MonomialIdeal,
    pub filtration: String,
    /// `J ⊆ F(1)`.
    pub contained: bool,
    pub is_reduction: bool,
    /// `None` unless `is_reduction`.
    pub reduction_number: Option<i64>,
    /// Exactly `d` generators.
    pub minimal: bool,
    pub verified_window: Option<(i64, i64)>,
    pub certificate: CertificateKind,
}

impl ReductionReport {
    fn minimal_number(&self) -> Option<i64> {
        if self.minimal {
            self.reduction_number
        } else {
            None
        }
    }
}

/// Decides whether `J · F(n) = F(n + 1)` for all large `n`.
///
/// For adic `F` the least `n ≤ window` with equality is `r_J`, and equality
/// is re-checked at the next three indices. Otherwise `r_J` is the least
/// `m ≤ window` with equality on all of `[m, m + window]`.
pub fn is_reduction(j: &MonomialIdeal, f: &Filtration, window: usize) -> Result<ReductionReport> {
    if f.arity() != 1 {
        return Err(Error::Arity { expected: 1, found: f.arity() });
    }
    let f1 = f.piece(&[1])?;
    let contained = f1.contains_ideal(j)?;
    let adic = f.is_adic();
    let mut report = ReductionReport {
        candidate: j.clone(),
        filtration: f.to_string(),
        contained,
        is_reduction: false,
        reduction_number: None,
        minimal: j.num_generators() == f.ring().dimension(),
        verified_window: None,
        certificate: if adic { CertificateKind::AdicClosedForm } else { CertificateKind::Windowed },
    };
    if !contained {
        return Ok(report);
    }
    let equal_at = |n: i64| -> Result<bool> { Ok(j.multiply(&f.piece(&[n])?)? == f.piece(&[n + 1])?) };
    let w = window as i64;
    if adic {
        for n in 0..=w {
            if equal_at(n)? {
                for k in n + 1..=n + 3 {
                    if !equal_at(k)? {
                        return Err(Error::Input(format!("reduction equality at {n} did not propagate to {k}")));
                    }
                }
                report.is_reduction = true;
                report.reduction_number = Some(n);
                report.verified_window = Some((n, n + 3));
                return Ok(report);
            }
        }
        return Ok(report);
    }
    let eq: Vec<bool> = (0..=2 * w).map(equal_at).collect::<Result<_>>()?;
    for m in 0..=w {
        if eq[m as usize..=(m + w) as usize].iter().all(|&b| b) {
            report.is_reduction = true;
            report.reduction_number = Some(m);
            report.verified_window = Some((m, m + w));
            return Ok(report);
        }
    }
    Ok(report)
}

/// Caller-supplied candidates followed by the pure powers of `F(1)` and
/// `F(1)` itself, without duplicates.
pub fn reduction_candidates(f: &Filtration, supplied: &[MonomialIdeal]) -> Result<Vec<MonomialIdeal>> {
    let f1 = f.piece(&[1])?;
    let powers: Vec<ExponentVector> = f1.generators().iter().filter(|g| g.as_pure_power().is_some()).cloned().collect();
    let mut out: Vec<MonomialIdeal> = Vec::new();
    let auto = [MonomialIdeal::from_generators(f.ring(), powers)?, f1];
    for c in supplied.iter().chain(auto.iter()) {
        if **c.ring() != **f.ring() {
            return Err(Error::RingMismatch);
        }
        if !c.is_zero() && !out.contains(c) {
            out.push(c.clone());
        }
    }
    Ok(out)
}

fn reductions(f: &Filtration, supplied: &[MonomialIdeal], window: usize) -> Result<Vec<ReductionReport>> {
    reduction_candidates(f, supplied)?.iter().map(|j| is_reduction(j, f, window)).collect()
}

/// Least reduction number over minimal reduction candidates.
fn best_reduction(reports: &[ReductionReport]) -> Option<i64> {
    reports.iter().filter_map(ReductionReport::minimal_number).min()
}

struct Draft {
    theorem: &'static str,
    subject: String,
    ring: String,
    cm: CmStatus,
    hypotheses: Vec<Hypothesis>,
    quantities: Vec<(String, Quantity)>,
    trail: Vec<String>,
    candidates: Vec<String>,
    window: String,
}

impl Draft {
    fn new(theorem: &'static str, f: &Filtration) -> Draft {
        Draft {
            theorem,
            subject: f.to_string(),
            ring: f.ring().to_string(),
            cm: f.ring().cm_status(),
            hypotheses: Vec::new(),
            quantities: Vec::new(),
            trail: Vec::new(),
            candidates: Vec::new(),
            window: String::new(),
        }
    }

    fn hyp(&mut self, name: impl Into<String>, status: HypothesisStatus) {
        self.hypotheses.push(Hypothesis { name: name.into(), status });
    }

    fn q(&mut self, name: impl Into<String>, v: impl Into<Quantity>) {
        self.quantities.push((name.into(), v.into()));
    }

    fn note(&mut self, line: impl Into<String>) {
        self.trail.push(line.into());
    }

    /// Records the Cohen-Macaulay hypothesis; false when it cannot be used.
    fn require_cm(&mut self) -> bool {
        let status = match self.cm {
            CmStatus::Automatic => HypothesisStatus::Holds,
            CmStatus::Asserted => HypothesisStatus::Asserted,
            CmStatus::Unknown => HypothesisStatus::Fails,
        };
        self.hyp("Cohen-Macaulay", status);
        status != HypothesisStatus::Fails
    }

    fn require(&mut self, name: String, ok: bool) -> bool {
        self.hyp(name, if ok { HypothesisStatus::Holds } else { HypothesisStatus::Fails });
        ok
    }

    fn reductions(&mut self, label: &str, reports: &[ReductionReport]) {
        for r in reports {
            self.candidates.push(r.candidate.to_string());
            let value = match (r.is_reduction, r.reduction_number) {
                (true, Some(n)) => Quantity::from(n),
                _ if !r.contained => Quantity::from("not-contained"),
                _ => Quantity::from("not-within-window"),
            };
            let kind = if r.minimal { "minimal" } else { "non-minimal" };
            self.q(format!("{label}r_J {} [{kind}, {}]", r.candidate, r.certificate.as_str()), value);
        }
    }

    fn finish(mut self, verdict: Verdict) -> TheoremReport {
        let mut verdict = verdict;
        if verdict == Verdict::Verified && self.cm == CmStatus::Asserted {
            self.note("Cohen-Macaulay property of the quotient ring is asserted, not computed");
            verdict = Verdict::Conditional;
        }
        if verdict == Verdict::Verified && self.hypotheses.iter().any(|h| h.status == HypothesisStatus::Assumed) {
            verdict = Verdict::Conditional;
        }
        let witness = (verdict == Verdict::Violated).then(|| Witness {
            ring: self.ring.clone(),
            filtration: self.subject.clone(),
            candidates: self.candidates.clone(),
            window: self.window.clone(),
        });
        TheoremReport {
            theorem: self.theorem.to_string(),
            subject: self.subject,
            hypotheses: self.hypotheses,
            quantities: self.quantities,
            verdict,
            trail: self.trail,
            witness,
        }
    }
}

fn alpha_label(alpha: &[u32]) -> String {
    let parts: Vec<String> = alpha.iter().map(u32::to_string).collect();
    format!("e_({})", parts.join(","))
}

fn unit_vector(s: usize, i: usize, k: u32) -> Vec<u32> {
    let mut a = vec![0; s];
    a[i] = k;
    a
}

fn multiplicity(ideal: &MonomialIdeal, fit: FitConfig) -> Result<BigInt> {
    let s = hilbert::fit_polynomial(&*Filtration::adic(ideal)?, fit)?;
    Ok(s.polynomial.e(0))
}

/// `F(n) = F(1)^n` for `1 ≤ n ≤ window`.
fn powers_of_first_piece(f: &Filtration, window: i64) -> Result<bool> {
    let f1 = f.piece(&[1])?;
    for n in 2..=window {
        if f.piece(&[n])? != f1.power(n as u32) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn univariate_setup(draft: &mut Draft, f: &Filtration, min_dim: usize) -> bool {
    let d = f.ring().dimension();
    let one_axis = draft.require(format!("one grading axis (s = {})", f.arity()), f.arity() == 1);
    let dim_ok = draft.require(format!("dimension d = {d} >= {min_dim}"), d >= min_dim);
    let cm = draft.require_cm();
    one_axis && dim_ok && cm
}

/// `e_1 ≥ e_0 − λ(R/F(1)) ≥ 0`.
pub fn check_northcott(f: &Filtration, cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = Draft::new("northcott", f);
    if !univariate_setup(&mut r, f, 1) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    let s = hilbert::fit_polynomial(f, cfg.fit)?;
    let e0 = s.polynomial.e(0);
    let e1 = s.polynomial.e(1);
    let l1 = f.piece(&[1])?.colength()?;
    let gap = &e0 - &l1;
    r.q("e0", &e0);
    r.q("e1", &e1);
    r.q("colength F(1)", &l1);
    r.q("e0 - colength F(1)", &gap);
    let first = e1 >= gap;
    let second = !gap.is_negative();
    r.q("e1 >= e0 - colength F(1)", first);
    r.q("e0 - colength F(1) >= 0", second);
    if first && e1 == gap {
        r.note("equality in the first inequality");
    }
    Ok(r.finish(if first && second { Verdict::Verified } else { Verdict::Violated }))
}

/// `e_0 − e_1 = λ(R/F(1))` if and only if `r(F) ≤ 1`, with the consequences
/// `e_2 = ... = e_d = 0`, `n(F) ≤ 0` and `F(n) = F(1)^n`.
pub fn check_huneke_ooishi(f: &Filtration, candidates: &[MonomialIdeal], cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = Draft::new("huneke-ooishi", f);
    if !univariate_setup(&mut r, f, 1) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    r.window = format!("reductions W = {}, powers 1..={}", cfg.reduction_window, cfg.window);
    let d = f.ring().dimension();
    let s = hilbert::fit_polynomial(f, cfg.fit)?;
    let e = s.polynomial.univariate_coefficients();
    let l1 = f.piece(&[1])?.colength()?;
    let lhs = &e[0] - &e[1] == l1;
    r.q("e0", &e[0]);
    r.q("e1", &e[1]);
    r.q("colength F(1)", &l1);
    r.q("e0 - e1 = colength F(1)", lhs);
    let reps = reductions(f, candidates, cfg.reduction_window)?;
    r.reductions("", &reps);
    let best = best_reduction(&reps);
    match best {
        Some(b) => r.q("r(F) over candidates", b),
        None => r.q("r(F) over candidates", "undetermined"),
    }
    let rhs = best.is_some_and(|b| b <= 1);
    let n = hilbert::postulation_number(&s)?;
    r.q("n(F)", n);
    let tail_zero = e[2..].iter().all(Zero::is_zero);
    let n_ok = n <= Postulation::At(0);
    let verdict = match (lhs, rhs) {
        (true, true) => {
            let powers = powers_of_first_piece(f, cfg.window)?;
            r.q("e2..ed = 0", tail_zero);
            r.q("n(F) <= 0", n_ok);
            r.q("F(n) = F(1)^n on window", powers);
            if tail_zero && n_ok && powers {
                Verdict::Verified
            } else {
                r.note("consequence of r(F) <= 1 fails");
                Verdict::Violated
            }
        }
        (true, false) => {
            r.q("e2..ed = 0", tail_zero);
            r.q("n(F) <= 0", n_ok);
            r.note("equality holds but no monomial candidate attains r <= 1; minimal reductions may be non-monomial");
            Verdict::Conditional
        }
        (false, true) => {
            r.note("a minimal reduction with r <= 1 exists but e0 - e1 differs from colength F(1)");
            Verdict::Violated
        }
        (false, false) => {
            if best.is_some() || reps.iter().any(|x| x.minimal && x.contained) {
                r.note(format!("e0 - e1 != colength F(1); every minimal candidate has r >= 2 (d = {d})"));
                Verdict::Verified
            } else {
                r.note("no minimal reduction candidate available");
                Verdict::Conditional
            }
        }
    };
    Ok(r.finish(verdict))
}

/// `r_J(F) = n(F) + d`, and the graded mismatch `H_R(r_J − d) ≠ P_R(r_J − d)`.
pub fn check_sally_postulation(f: &Filtration, candidates: &[MonomialIdeal], cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = Draft::new("sally", f);
    if !univariate_setup(&mut r, f, 1) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    r.window = format!("reductions W = {}, graded check width {}", cfg.reduction_window, cfg.window);
    let d = f.ring().dimension() as i64;
    let s = hilbert::fit_polynomial(f, cfg.fit)?;
    let n = hilbert::postulation_number(&s)?;
    r.q("n(F)", n);
    let reps = reductions(f, candidates, cfg.reduction_window)?;
    r.reductions("", &reps);
    let minimal: Vec<&ReductionReport> = reps.iter().filter(|x| x.minimal_number().is_some()).collect();
    let Postulation::At(n) = n else {
        r.note("polynomial agrees with the Hilbert function everywhere");
        return Ok(r.finish(Verdict::Conditional));
    };
    if minimal.is_empty() {
        r.hyp("grade G(F)+ >= d - 1", HypothesisStatus::Assumed);
        r.note("no minimal reduction candidate with r_J inside the window");
        return Ok(r.finish(Verdict::Conditional));
    }
    let established = if d == 1 {
        r.note("grade hypothesis is vacuous for d = 1");
        true
    } else {
        let small = minimal.iter().any(|x| x.reduction_number.is_some_and(|v| v <= 1));
        let powers = small && powers_of_first_piece(f, cfg.window)?;
        if powers {
            r.note("F(n) = F(1)^n on window with r_J <= 1, so G(F) is Cohen-Macaulay");
        }
        powers
    };
    r.hyp(
        "grade G(F)+ >= d - 1",
        if established { HypothesisStatus::Holds } else { HypothesisStatus::Assumed },
    );
    let mut all_ok = true;
    let h = |k: i64| hilbert::hilbert_function(f, &[k]);
    let p = |k: i64| s.polynomial.eval(&[k]);
    for rep in minimal {
        let rj = rep.reduction_number.expect("filtered");
        let eq = rj == n + d;
        let t = rj - d;
        let mismatch = h(t + 1)? - h(t)? != p(t + 1) - p(t);
        let mut agree_after = true;
        for k in t + 1..=t + cfg.window {
            if h(k + 1)? - h(k)? != p(k + 1) - p(k) {
                agree_after = false;
            }
        }
        r.q(format!("r_J = n(F) + d for {}", rep.candidate), eq);
        r.q(format!("H_R != P_R at r_J - d = {t} for {}", rep.candidate), mismatch);
        r.q(format!("H_R = P_R above r_J - d for {}", rep.candidate), agree_after);
        all_ok &= eq && mismatch && agree_after;
    }
    let verdict = match (all_ok, established) {
        (true, _) => Verdict::Verified,
        (false, true) => Verdict::Violated,
        (false, false) => {
            r.note("identity fails; the grade hypothesis is not established for this filtration");
            Verdict::Conditional
        }
    };
    Ok(r.finish(verdict))
}

/// Signs of the coefficients: `e_α > 0` for `|α| = d`, `e_α ≥ 0` for
/// `|α| ∈ {d − 1, d − 2}`; lower coefficients are reported only.
pub fn check_nonnegativity(f: &Filtration, cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = Draft::new("nonneg", f);
    let d = f.ring().dimension();
    let dim_ok = r.require(format!("dimension d = {d} >= 1"), d >= 1);
    if !(r.require_cm() && dim_ok) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    let s = hilbert::fit(f, cfg.fit)?;
    let mut ok = true;
    for (alpha, e) in s.polynomial.coefficients().iter().rev() {
        let deg = alpha.iter().sum::<u32>() as usize;
        let label = if f.arity() == 1 { format!("e{}", d - deg) } else { alpha_label(alpha) };
        r.q(label.clone(), e);
        if deg == d {
            ok &= e.is_positive();
        } else if deg + 1 == d || (deg + 2 == d && d >= 2) {
            ok &= !e.is_negative();
        } else {
            let sign = if e.is_negative() { "negative" } else { "nonnegative" };
            r.note(format!("{label} = {e} is {sign}; outside the range of the sign statement"));
        }
    }
    Ok(r.finish(if ok { Verdict::Verified } else { Verdict::Violated }))
}

/// `h2_0 = e_2`, `h2_1 = e_0 − e_1 + e_2 − λ(R/breve F(1))`,
/// `h2_{−1} = e_1 + e_2`, and `h2` nonincreasing.
pub fn check_dim2_cohomology_identities(f: &Filtration, cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = Draft::new("cohomology", f);
    let d = f.ring().dimension();
    let one_axis = r.require(format!("one grading axis (s = {})", f.arity()), f.arity() == 1);
    let dim2 = r.require(format!("dimension d = {d} = 2"), d == 2);
    if !(r.require_cm() && dim2 && one_axis) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    let s = hilbert::fit_polynomial(f, cfg.fit)?;
    let top = s.certificate.base[0] + cfg.fit.margin as i64 + 2;
    let window = Window::new(-1, top.max(cfg.window));
    r.window = format!("{}..={}", window.lo, window.hi);
    let table = hilbert::cohomology_table_dim2(f, &s, window, cfg.rr)?;
    let e = s.polynomial.univariate_coefficients();
    let breve1 = ratliff_rush_piece(f, &[1], cfg.rr)?.colength()?;
    let row = |n: i64| table.iter().find(|x| x.n == [n]).expect("row in window");
    let h2_0 = row(0).h2.clone();
    let h2_1 = row(1).h2.clone();
    let h2_m1 = row(-1).h2.clone();
    r.q("e0", &e[0]);
    r.q("e1", &e[1]);
    r.q("e2", &e[2]);
    r.q("colength breve F(1)", &breve1);
    r.q("h2_-1 (derived)", &h2_m1);
    r.q("h2_0", &h2_0);
    r.q("h2_1", &h2_1);
    let id0 = h2_0 == e[2];
    let id1 = h2_1 == &e[0] - &e[1] + &e[2] - &breve1;
    let idm1 = h2_m1 == &e[1] + &e[2];
    let monotone = table.windows(2).all(|w| w[0].h2 >= w[1].h2);
    let nonneg = table.iter().all(|x| !x.h1.is_negative() && !x.h2.is_negative());
    r.q("h2_0 = e2", id0);
    r.q("h2_1 = e0 - e1 + e2 - colength breve F(1)", id1);
    r.q("h2_-1 = e1 + e2", idm1);
    r.q("h2 nonincreasing", monotone);
    r.q("h1, h2 >= 0", nonneg);
    let ok = id0 && id1 && idm1 && monotone && nonneg;
    Ok(r.finish(if ok { Verdict::Verified } else { Verdict::Violated }))
}

/// In dimension two, the equivalence of
/// (1) `e_1 − e_0 + λ(R/breve I) = 0`, (2) `(breve I)^2 = Q breve I`,
/// (2′) `breve(I^2) = Q breve I`, (3) `breve(I^{n+1}) = Q^n breve I`,
/// (4) `e_2 = 0`, for minimal reductions `Q` among the candidates.
pub fn check_itoh_e2(ideal: &MonomialIdeal, candidates: &[MonomialIdeal], cfg: &CheckConfig) -> Result<TheoremReport> {
    let f = Filtration::adic(ideal)?;
    let mut r = Draft::new("itoh-e2", &f);
    let d = f.ring().dimension();
    let dim2 = r.require(format!("dimension d = {d} = 2"), d == 2);
    if !(r.require_cm() && dim2) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    r.window = format!("n = 1..={}, reductions W = {}", cfg.window, cfg.reduction_window);
    let s = hilbert::fit_polynomial(&f, cfg.fit)?;
    let e = s.polynomial.univariate_coefficients();
    let breve = ratliff_rush_piece(&f, &[1], cfg.rr)?;
    let lb = breve.colength()?;
    r.q("e0", &e[0]);
    r.q("e1", &e[1]);
    r.q("e2", &e[2]);
    r.q("breve I", breve.to_string());
    r.q("colength breve I", &lb);
    let c1 = (&e[1] - &e[0] + &lb).is_zero();
    let c4 = e[2].is_zero();
    r.q("(1) e1 - e0 + colength breve I = 0", c1);
    r.q("(4) e2 = 0", c4);
    let reps = reductions(&f, candidates, cfg.reduction_window)?;
    r.reductions("", &reps);
    let mut consistent = c1 == c4;
    let qs: Vec<&ReductionReport> = reps.iter().filter(|x| x.minimal_number().is_some()).collect();
    for rep in &qs {
        let q = &rep.candidate;
        let qb = q.multiply(&breve)?;
        let c2 = breve.power(2) == qb;
        let c2p = ratliff_rush_piece(&f, &[2], cfg.rr)? == qb;
        let mut c3 = true;
        for n in 1..=cfg.window {
            if ratliff_rush_piece(&f, &[n + 1], cfg.rr)? != q.power(n as u32).multiply(&breve)? {
                c3 = false;
                break;
            }
        }
        r.q(format!("(2) breve(I)^2 = Q breve(I) for Q = {q}"), c2);
        r.q(format!("(2') breve(I^2) = Q breve(I) for Q = {q}"), c2p);
        r.q(format!("(3) breve(I^(n+1)) = Q^n breve(I) on window for Q = {q}"), c3);
        consistent &= c2 == c1 && c2p == c1 && c3 == c1;
    }
    let verdict = if !consistent {
        Verdict::Violated
    } else if qs.is_empty() {
        r.note("no minimal reduction candidate; only (1) <=> (4) checked");
        Verdict::Conditional
    } else {
        Verdict::Verified
    };
    Ok(r.finish(verdict))
}

/// Per axis `i`: (1) `e_{(d−1)e_i}(F) ≥ e_1(F^(i))`,
/// (2) `e(I_i) − e_{(d−1)e_i}(F) ≤ λ(R/F(e_i))`, and (3) equality in (2)
/// exactly when `r(F^(i)) ≤ 1` and equality holds in (1).
pub fn check_multigraded_ho(f: &Arc<Filtration>, candidates: &[MonomialIdeal], cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = Draft::new("mgho", f);
    let d = f.ring().dimension();
    let s = f.arity();
    let multi = r.require(format!("at least two axes (s = {s})"), s >= 2);
    let dim_ok = r.require(format!("dimension d = {d} >= 1"), d >= 1);
    if !(r.require_cm() && multi && dim_ok) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    r.window = format!("reductions W = {}", cfg.reduction_window);
    let summary = hilbert::fit_polynomial_multi(f, cfg.fit)?;
    let mut violated = false;
    let mut undetermined = false;
    for i in 0..s {
        let tag = format!("axis {}", i + 1);
        let fi = Filtration::axis(f, i)?;
        let si = hilbert::fit_polynomial(&fi, cfg.fit)?;
        let e1i = si.polynomial.e(1);
        let top = summary.polynomial.coefficient(&unit_vector(s, i, d as u32));
        let sub = summary.polynomial.coefficient(&unit_vector(s, i, (d - 1) as u32));
        let mult = multiplicity(f.base_ideal(i), cfg.fit)?;
        let lam = f.unit_piece(i)?.colength()?;
        r.q(format!("{tag}: e(I)"), &mult);
        r.q(format!("{tag}: e_(d e_i)"), &top);
        r.q(format!("{tag}: e_((d-1) e_i)"), &sub);
        r.q(format!("{tag}: e1 of restriction"), &e1i);
        r.q(format!("{tag}: colength F(e_i)"), &lam);
        let rees = top == mult;
        let one = sub >= e1i;
        let two = &mult - &sub <= lam;
        let lhs3 = &mult - &sub == lam;
        r.q(format!("{tag}: e_(d e_i) = e(I)"), rees);
        r.q(format!("{tag}: (1)"), one);
        r.q(format!("{tag}: (2)"), two);
        r.q(format!("{tag}: equality in (2)"), lhs3);
        let reps = reductions(&fi, candidates, cfg.reduction_window)?;
        r.reductions(&format!("{tag}: "), &reps);
        let best = best_reduction(&reps);
        let rhs_r = best.is_some_and(|b| b <= 1);
        let rhs = rhs_r && sub == e1i;
        violated |= !(rees && one && two);
        match (lhs3, rhs) {
            (true, true) | (false, false) => {}
            (false, true) => {
                r.note(format!("{tag}: r <= 1 and equality in (1), but strict inequality in (2)"));
                violated = true;
            }
            (true, false) => {
                if rhs_r {
                    r.note(format!("{tag}: equality in (2) but not in (1)"));
                    violated = true;
                } else {
                    r.note(format!("{tag}: equality in (2); no monomial candidate certifies r <= 1"));
                    undetermined = true;
                }
            }
        }
    }
    let verdict = if violated {
        Verdict::Violated
    } else if undetermined {
        Verdict::Conditional
    } else {
        Verdict::Verified
    };
    Ok(r.finish(verdict))
}

/// Dimension two: `e_0(F) = 0` implies `e(I_i) − e_{e_i}(F) = λ(R/breve F(e_i))`
/// for every axis; the converse is checked assuming `breve F` admissible.
pub fn check_e2_zero_multi(f: &Filtration, cfg: &CheckConfig) -> Result<TheoremReport> {
    let mut r = Draft::new("e2zero-multi", f);
    let d = f.ring().dimension();
    let s = f.arity();
    let dim2 = r.require(format!("dimension d = {d} = 2"), d == 2);
    if !(r.require_cm() && dim2) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    let summary = hilbert::fit(f, cfg.fit)?;
    let e_zero = summary.polynomial.coefficient(&vec![0; s]);
    r.q(alpha_label(&vec![0; s]), &e_zero);
    let mut all_equal = true;
    for i in 0..s {
        let tag = format!("axis {}", i + 1);
        let mult = multiplicity(f.base_ideal(i), cfg.fit)?;
        let ei = summary.polynomial.coefficient(&unit_vector(s, i, 1));
        let ei_vec = unit_vector(s, i, 1).into_iter().map(i64::from).collect::<Vec<_>>();
        let breve = ratliff_rush_piece(f, &ei_vec, cfg.rr)?.colength()?;
        let eq = &mult - &ei == breve;
        r.q(format!("{tag}: e(I)"), &mult);
        r.q(format!("{tag}: e_(e_i)"), &ei);
        r.q(format!("{tag}: colength breve F(e_i)"), &breve);
        r.q(format!("{tag}: e(I) - e_(e_i) = colength breve F(e_i)"), eq);
        all_equal &= eq;
    }
    let verdict = if e_zero.is_zero() {
        if all_equal {
            Verdict::Verified
        } else {
            Verdict::Violated
        }
    } else {
        r.q("forward", "inapplicable-forward");
        r.hyp("breve F admissible", HypothesisStatus::Assumed);
        if all_equal {
            r.note("all equalities hold with nonzero constant term; the converse then forces breve F to be non-admissible");
        } else {
            r.note("constant term nonzero and some equality fails, consistent with the converse");
        }
        Verdict::Conditional
    };
    Ok(r.finish(verdict))
}

/// `ē_3 ≥ 0` for the normal filtration of `I` in a polynomial ring of
/// dimension three.
pub fn check_normal_e3(ideal: &MonomialIdeal, cfg: &CheckConfig) -> Result<TheoremReport> {
    let ring = ideal.ring();
    let poly = ring.is_polynomial();
    let d = ring.dimension();
    if !poly {
        let f = Filtration::adic(ideal)?;
        let mut r = Draft::new("itoh-e3", &f);
        r.require("polynomial ambient ring".into(), false);
        return Ok(r.finish(Verdict::Inapplicable));
    }
    let f = Filtration::normal(ideal)?;
    let mut r = Draft::new("itoh-e3", &f);
    r.require("polynomial ambient ring".into(), true);
    if !r.require(format!("dimension d = {d} = 3"), d == 3) {
        return Ok(r.finish(Verdict::Inapplicable));
    }
    let s = hilbert::fit_polynomial(&f, cfg.fit)?;
    let e = s.polynomial.univariate_coefficients();
    for (i, v) in e.iter().enumerate() {
        r.q(format!("normal e{i}"), v);
    }
    let ok = !e[3].is_negative();
    r.q("normal e3 >= 0", ok);
    Ok(r.finish(if ok { Verdict::Verified } else { Verdict::Violated }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::AxisKind;
    use crate::monomial::AmbientRing;

    fn ideal(ring: &Arc<AmbientRing>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(ring, gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect()).unwrap()
    }

    fn xy() -> Arc<AmbientRing> {
        AmbientRing::polynomial(["x", "y"])
    }

    fn quantity<'a>(r: &'a TheoremReport, name: &str) -> &'a Quantity {
        &r.quantities.iter().find(|(k, _)| k == name).unwrap_or_else(|| panic!("no quantity {name}")).1
    }

    fn marley() -> MonomialIdeal {
        let r = AmbientRing::polynomial(["x", "y", "z"]);
        ideal(&r, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[2, 1, 0], &[1, 2, 0], &[0, 1, 2], &[1, 1, 1]])
    }

    #[test]
    fn reduction_numbers() {
        let r = xy();
        let m2 = MonomialIdeal::maximal(&r).power(2);
        let f = Filtration::adic(&m2).unwrap();
        let j = ideal(&r, &[&[2, 0], &[0, 2]]);
        let rep = is_reduction(&j, &f, 8).unwrap();
        assert!(rep.is_reduction && rep.minimal);
        assert_eq!(rep.reduction_number, Some(1));
        assert_eq!(rep.certificate, CertificateKind::AdicClosedForm);
        assert_eq!(is_reduction(&m2, &f, 8).unwrap().reduction_number, Some(0));

        let n = Filtration::normal(&ideal(&r, &[&[3, 0], &[0, 3]])).unwrap();
        let j3 = ideal(&r, &[&[3, 0], &[0, 3]]);
        let rep = is_reduction(&j3, &n, 8).unwrap();
        assert_eq!(rep.reduction_number, Some(1));
        assert_eq!(rep.certificate, CertificateKind::Windowed);

        let outside = ideal(&r, &[&[1, 0], &[0, 2]]);
        let rep = is_reduction(&outside, &f, 8).unwrap();
        assert!(!rep.contained && !rep.is_reduction && rep.reduction_number.is_none());
    }

    #[test]
    fn northcott_examples() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let rep = check_northcott(&Filtration::adic(&m).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        let rep = check_northcott(&Filtration::adic(&marley()).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "e0 - colength F(1)"), &Quantity::from(13));
        let rep = check_northcott(&Filtration::adic(&m.power(2)).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert!(rep.trail.iter().any(|l| l.contains("equality")));
    }

    #[test]
    fn huneke_ooishi_examples() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let q = ideal(&r, &[&[2, 0], &[0, 2]]);
        let rep = check_huneke_ooishi(&Filtration::adic(&m.power(2)).unwrap(), &[q], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "F(n) = F(1)^n on window"), &Quantity::from(true));
        let rep = check_huneke_ooishi(&Filtration::adic(&m).unwrap(), &[], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        let rep = check_huneke_ooishi(&Filtration::adic(&marley()).unwrap(), &[], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "e0 - e1 = colength F(1)"), &Quantity::from(false));
    }

    #[test]
    fn sally_examples() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let rep = check_sally_postulation(&Filtration::adic(&m).unwrap(), &[], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "n(F)"), &Quantity::from(-2));
        let rep = check_sally_postulation(&Filtration::adic(&m.power(2)).unwrap(), &[], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        let n = Filtration::normal(&ideal(&r, &[&[3, 0], &[0, 3]])).unwrap();
        let rep = check_sally_postulation(&n, &[], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "n(F)"), &Quantity::from(-1));
    }

    #[test]
    fn nonnegativity_examples() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let mm = Filtration::product(vec![(m.clone(), AxisKind::Adic), (m, AxisKind::Adic)]).unwrap();
        assert_eq!(check_nonnegativity(&mm, &cfg).unwrap().verdict, Verdict::Verified);
        let rep = check_nonnegativity(&Filtration::adic(&marley()).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "e3"), &Quantity::from(-1));
        assert!(rep.trail.iter().any(|l| l.contains("e3 = -1 is negative")));
    }

    #[test]
    fn cohomology_identities() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        assert_eq!(check_dim2_cohomology_identities(&Filtration::adic(&m).unwrap(), &cfg).unwrap().verdict, Verdict::Verified);
        let i = ideal(&r, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let rep = check_dim2_cohomology_identities(&Filtration::adic(&i).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "colength breve F(1)"), &Quantity::from(10));
        let n = Filtration::normal(&ideal(&r, &[&[3, 0], &[0, 3]])).unwrap();
        let rep = check_dim2_cohomology_identities(&n, &cfg).unwrap();
        assert_eq!(quantity(&rep, "h2_0"), &Quantity::from(0));
        let rep = check_dim2_cohomology_identities(&Filtration::adic(&marley()).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn itoh_e2_examples() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let q = ideal(&r, &[&[2, 0], &[0, 2]]);
        assert_eq!(check_itoh_e2(&m.power(2), std::slice::from_ref(&q), &cfg).unwrap().verdict, Verdict::Verified);
        assert_eq!(check_itoh_e2(&m, &[], &cfg).unwrap().verdict, Verdict::Verified);
        let i = ideal(&r, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let rep = check_itoh_e2(&i, &[], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
    }

    #[test]
    fn multigraded_examples() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let mm = Filtration::product(vec![(m.clone(), AxisKind::Adic), (m.clone(), AxisKind::Adic)]).unwrap();
        let rep = check_multigraded_ho(&mm, &[], &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(quantity(&rep, "axis 1: equality in (2)"), &Quantity::from(true));
        let m2 = m.power(2);
        let f = Filtration::product(vec![(m2.clone(), AxisKind::Adic), (m2, AxisKind::Adic)]).unwrap();
        assert_ne!(check_multigraded_ho(&f, &[], &cfg).unwrap().verdict, Verdict::Violated);
        let mixed = Filtration::product(vec![(ideal(&r, &[&[2, 0], &[0, 2]]), AxisKind::Normal), (m, AxisKind::Adic)]).unwrap();
        assert_ne!(check_multigraded_ho(&mixed, &[], &cfg).unwrap().verdict, Verdict::Violated);
    }

    #[test]
    fn e2_zero_examples() {
        let cfg = CheckConfig::default();
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let mm = Filtration::product(vec![(m.clone(), AxisKind::Adic), (m, AxisKind::Adic)]).unwrap();
        assert_eq!(check_e2_zero_multi(&mm, &cfg).unwrap().verdict, Verdict::Verified);
        let p = ideal(&r, &[&[3, 0], &[0, 3]]);
        let nn = Filtration::product(vec![(p.clone(), AxisKind::Normal), (p, AxisKind::Normal)]).unwrap();
        assert_eq!(check_e2_zero_multi(&nn, &cfg).unwrap().verdict, Verdict::Verified);
    }

    #[test]
    fn normal_e3_examples() {
        let cfg = CheckConfig::default();
        let r = AmbientRing::polynomial(["x", "y", "z"]);
        let rep = check_normal_e3(&ideal(&r, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        for (i, v) in [8, 4, 0, 0].iter().enumerate() {
            assert_eq!(quantity(&rep, &format!("normal e{i}")), &Quantity::from(*v));
        }
        let rep = check_normal_e3(&MonomialIdeal::maximal(&r), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
    }

    #[test]
    fn quotient_without_assertion_is_inapplicable() {
        let cfg = CheckConfig::default();
        let r = AmbientRing::with_quotient(["x", "y"], vec![ExponentVector::new(vec![0, 2])], false).unwrap();
        let rep = check_northcott(&Filtration::adic(&MonomialIdeal::maximal(&r)).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Inapplicable);
        let r = AmbientRing::with_quotient(["x", "y"], vec![ExponentVector::new(vec![0, 2])], true).unwrap();
        let rep = check_northcott(&Filtration::adic(&MonomialIdeal::maximal(&r)).unwrap(), &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Conditional);
    }
}
