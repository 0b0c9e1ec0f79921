//! Monomial ideals in `k[x_1..x_v]` or `k[x_1..x_v]/q` with `q` monomial.
//!
//! The field never materializes: every ideal is a finite antichain of
//! exponent vectors, and every operation is lattice combinatorics. Ideals of
//! a quotient ring are stored by their lift `I + q` with the members of `q`
//! removed from the generating set, which keeps the representation canonical.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Largest number of prefix points the colength enumerator will visit.
pub const COLENGTH_PREFIX_LIMIT: u128 = 100_000_000;

/// Exponents of a monomial `x^a`, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExponentVector(Box<[u32]>);

impl ExponentVector {
    pub fn new(exponents: impl Into<Vec<u32>>) -> Self {
        ExponentVector(exponents.into().into_boxed_slice())
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars].into_boxed_slice())
    }

    /// `x_i^e`.
    pub fn pure_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        ExponentVector(v.into_boxed_slice())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// Generator of `(x^self : x^other)`.
    pub fn quotient(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// `Some((i, e))` when this is `x_i^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector::new(v)
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        ExponentVector::new(v.to_vec())
    }
}

/// Sorts, deduplicates and removes every vector divisible by another one.
/// The result is lexicographically ordered.
pub(crate) fn minimize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

fn raw_intersect(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimize(out)
}

/// The coordinate ring: polynomial ring on named variables, optionally
/// modulo a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientRing {
    variables: Vec<String>,
    quotient: Vec<ExponentVector>,
    asserted_cohen_macaulay: bool,
    dimension: usize,
}

/// How Cohen-Macaulayness of the ring is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmStatus {
    /// Polynomial ring.
    Automatic,
    /// Quotient ring whose CM property was declared by the user.
    Asserted,
    /// Quotient ring without an assertion.
    Unknown,
}

impl AmbientRing {
    pub fn polynomial<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Arc<AmbientRing> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let dimension = variables.len();
        Arc::new(AmbientRing { variables, quotient: Vec::new(), asserted_cohen_macaulay: true, dimension })
    }

    /// `k[variables] / (quotient)`. Generators of `quotient` are minimized;
    /// the constant monomial is rejected since it would give the zero ring.
    pub fn with_quotient<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        quotient: Vec<ExponentVector>,
        asserted_cohen_macaulay: bool,
    ) -> Result<Arc<AmbientRing>> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let v = variables.len();
        for g in &quotient {
            if g.len() != v {
                return Err(Error::DimensionMismatch { expected: v, found: g.len() });
            }
            if g.degree() == 0 {
                return Err(Error::Input("quotient by the unit ideal".into()));
            }
        }
        let quotient = minimize(quotient);
        let dimension = krull_dimension(v, &quotient);
        Ok(Arc::new(AmbientRing { variables, quotient, asserted_cohen_macaulay, dimension }))
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn quotient_generators(&self) -> &[ExponentVector] {
        &self.quotient
    }

    pub fn is_polynomial(&self) -> bool {
        self.quotient.is_empty()
    }

    pub fn asserted_cohen_macaulay(&self) -> bool {
        self.asserted_cohen_macaulay
    }

    pub fn cm_status(&self) -> CmStatus {
        if self.is_polynomial() {
            CmStatus::Automatic
        } else if self.asserted_cohen_macaulay {
            CmStatus::Asserted
        } else {
            CmStatus::Unknown
        }
    }

    /// Krull dimension of the ring (at the origin).
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `x^a` is zero in the ring.
    pub fn is_zero_monomial(&self, a: &ExponentVector) -> bool {
        self.quotient.iter().any(|g| g.divides(a))
    }

    pub fn format_monomial(&self, a: &ExponentVector) -> String {
        let mut parts = Vec::new();
        for (i, &e) in a.as_slice().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.variables[i].clone()),
                _ => parts.push(format!("{}^{}", self.variables[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    fn check(&self, a: &ExponentVector) -> Result<()> {
        if a.len() != self.num_vars() {
            return Err(Error::DimensionMismatch { expected: self.num_vars(), found: a.len() });
        }
        Ok(())
    }
}

impl fmt::Display for AmbientRing {
    /// Instance-file syntax: `poly(x, y)` or `poly(x, y) / [x^2] cm`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly({})", self.variables.join(", "))?;
        if !self.quotient.is_empty() {
            let q: Vec<String> = self.quotient.iter().map(|g| self.format_monomial(g)).collect();
            write!(f, " / [{}]", q.join(", "))?;
            if self.asserted_cohen_macaulay {
                f.write_str(" cm")?;
            }
        }
        Ok(())
    }
}

/// Largest set of variables containing the support of no generator of `q`.
fn krull_dimension(nvars: usize, quotient: &[ExponentVector]) -> usize {
    if quotient.is_empty() {
        return nvars;
    }
    assert!(nvars < 31, "subset enumeration limited to 30 variables");
    let masks: Vec<u32> = quotient
        .iter()
        .map(|g| g.support().fold(0u32, |m, i| m | (1 << i)))
        .collect();
    let mut best = 0;
    for subset in 0u32..(1u32 << nvars) {
        let size = subset.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & subset != m) {
            best = size;
        }
    }
    best
}

/// Krull dimension of the ambient ring.
pub fn krull_dim(ring: &AmbientRing) -> usize {
    ring.dimension()
}

/// A monomial ideal, stored as its canonical minimal generating set.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ring: Arc<AmbientRing>,
    gens: Vec<ExponentVector>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for MonomialIdeal {}

impl MonomialIdeal {
    /// Canonical minimal form of the ideal generated by `gens`; members of
    /// the quotient ideal are discarded.
    pub fn from_generators(ring: &Arc<AmbientRing>, gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
        for g in &gens {
            ring.check(g)?;
        }
        Ok(Self::from_raw(ring, gens))
    }

    fn from_raw(ring: &Arc<AmbientRing>, gens: Vec<ExponentVector>) -> MonomialIdeal {
        let mut gens = minimize(gens);
        if !ring.is_polynomial() {
            gens.retain(|g| !ring.is_zero_monomial(g));
        }
        MonomialIdeal { ring: Arc::clone(ring), gens }
    }

    pub fn zero(ring: &Arc<AmbientRing>) -> MonomialIdeal {
        MonomialIdeal { ring: Arc::clone(ring), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<AmbientRing>) -> MonomialIdeal {
        MonomialIdeal { ring: Arc::clone(ring), gens: vec![ExponentVector::zero(ring.num_vars())] }
    }

    /// The ideal generated by the variables that are nonzero in the ring.
    pub fn maximal(ring: &Arc<AmbientRing>) -> MonomialIdeal {
        let v = ring.num_vars();
        Self::from_raw(ring, (0..v).map(|i| ExponentVector::pure_power(v, i, 1)).collect())
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].degree() == 0
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Generators of the lift `I + q` in the polynomial ring.
    fn lifted(&self) -> Vec<ExponentVector> {
        let mut all = self.gens.clone();
        all.extend(self.ring.quotient.iter().cloned());
        all
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut all = self.gens.clone();
        all.extend(other.gens.iter().cloned());
        Ok(Self::from_raw(&self.ring, all))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                let p = a.mul(b);
                if !self.ring.is_zero_monomial(&p) {
                    prods.push(p);
                }
            }
        }
        Ok(Self::from_raw(&self.ring, prods))
    }

    /// `I^n` by repeated squaring; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut result = MonomialIdeal::unit(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same ring");
            }
        }
        result
    }

    /// `(I : x^a)`.
    pub fn colon_monomial(&self, a: &ExponentVector) -> Result<MonomialIdeal> {
        self.ring.check(a)?;
        if self.ring.is_zero_monomial(a) {
            return Ok(MonomialIdeal::unit(&self.ring));
        }
        let gens = self.lifted().iter().map(|b| b.quotient(a)).collect();
        Ok(Self::from_raw(&self.ring, gens))
    }

    /// `(I : J) = ∩_{g ∈ gens J} (I : x^g)`, computed on the lifts.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let lifted = self.lifted();
        let mut acc: Option<Vec<ExponentVector>> = None;
        for g in &other.gens {
            let part = minimize(lifted.iter().map(|b| b.quotient(g)).collect());
            acc = Some(match acc {
                None => part,
                Some(prev) => raw_intersect(&prev, &part),
            });
        }
        Ok(Self::from_raw(&self.ring, acc.unwrap_or_default()))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        Ok(Self::from_raw(&self.ring, raw_intersect(&self.gens, &other.gens)))
    }

    /// Some generator of `I` or of `q` divides `x^a`.
    pub fn contains_monomial(&self, a: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(a)) || self.ring.is_zero_monomial(a)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other.gens.iter().all(|g| self.contains_monomial(g)))
    }

    /// Smallest `b_i` with `x_i^{b_i} ∈ I + q`, per variable.
    pub fn pure_power_exponents(&self) -> Vec<Option<u32>> {
        let mut best = vec![None; self.ring.num_vars()];
        for g in self.gens.iter().chain(self.ring.quotient.iter()) {
            if g.degree() == 0 {
                return vec![Some(0); self.ring.num_vars()];
            }
            if let Some((i, e)) = g.as_pure_power() {
                best[i] = Some(best[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        best
    }

    /// The bounding box `∏ [0, b_i)` outside of which every monomial lies in `I + q`.
    pub fn bounding_box(&self) -> Option<Vec<u32>> {
        self.pure_power_exponents().into_iter().collect()
    }

    pub fn is_m_primary(&self) -> bool {
        self.bounding_box().is_some()
    }

    /// `λ(R/I)`: standard monomials in the pure-power box.
    pub fn colength(&self) -> Result<BigInt> {
        self.colength_with_limit(COLENGTH_PREFIX_LIMIT)
    }

    pub fn colength_with_limit(&self, prefix_limit: u128) -> Result<BigInt> {
        let bounds = self.bounding_box().ok_or_else(|| Error::NotMPrimary(self.to_string()))?;
        let v = bounds.len();
        if v == 0 {
            return Ok(BigInt::from(if self.is_zero() { 1 } else { 0 }));
        }
        if bounds.contains(&0) {
            return Ok(BigInt::from(0));
        }
        let prefix_points: u128 = bounds[..v - 1].iter().map(|&b| b as u128).product();
        if prefix_points > prefix_limit {
            return Err(Error::BoxTooLarge { points: prefix_points, limit: prefix_limit });
        }
        let last = v - 1;
        let all = self.lifted();
        let mut count: u64 = 0;
        let mut prefix = vec![0u32; last];
        loop {
            // smallest last-coordinate exponent reachable from this prefix
            let mut t = bounds[last];
            for g in &all {
                let gs = g.as_slice();
                if gs[last] < t && gs[..last].iter().zip(&prefix).all(|(a, b)| a <= b) {
                    t = gs[last];
                }
            }
            count += t as u64;
            // odometer
            let mut i = 0;
            loop {
                if i == last {
                    return Ok(BigInt::from(count));
                }
                prefix[i] += 1;
                if prefix[i] < bounds[i] {
                    break;
                }
                prefix[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format_monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn ideal(ring: &Arc<AmbientRing>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(ring, gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    fn xy() -> Arc<AmbientRing> {
        AmbientRing::polynomial(["x", "y"])
    }

    fn narita_ring() -> Arc<AmbientRing> {
        AmbientRing::with_quotient(["x1", "x2", "x3", "x4"], vec![ev(&[0, 0, 0, 3])], true).unwrap()
    }

    #[test]
    fn minimal_generators_prunes_multiples() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[2, 1], &[0, 1]]);
        assert_eq!(i.generators(), &[ev(&[0, 1]), ev(&[2, 0])]);
        let j = ideal(&r, &[&[3, 0], &[0, 3]]);
        assert_eq!(j.num_generators(), 2);
    }

    #[test]
    fn quotient_members_are_dropped() {
        let q = narita_ring();
        let i = ideal(&q, &[&[0, 0, 0, 3], &[1, 0, 0, 0]]);
        assert_eq!(i.generators(), &[ev(&[1, 0, 0, 0])]);
        assert!(i.contains_monomial(&ev(&[0, 0, 0, 3])));
        assert!(MonomialIdeal::zero(&q).contains_monomial(&ev(&[0, 1, 0, 3])));
    }

    #[test]
    fn dimension_mismatch_is_an_input_error() {
        let r = xy();
        let err = MonomialIdeal::from_generators(&r, vec![ev(&[1, 2, 3])]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn power_of_m_squared() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        let p = i.power(2);
        assert_eq!(p, ideal(&r, &[&[4, 0], &[3, 1], &[2, 2], &[1, 3], &[0, 4]]));
        assert_eq!(i.power(1), i);
        assert!(i.power(0).is_unit());
        assert_eq!(i.multiply(&MonomialIdeal::unit(&r)).unwrap(), i);
    }

    #[test]
    fn colon_examples() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        let m = MonomialIdeal::maximal(&r);
        assert_eq!(i.colon(&m).unwrap(), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(i.colon(&MonomialIdeal::unit(&r)).unwrap(), i);
        let x = ideal(&r, &[&[1, 0]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert_eq!(x.colon(&y).unwrap(), x);
        assert!(matches!(i.colon(&MonomialIdeal::zero(&r)), Err(Error::ZeroDivisor)));
    }

    #[test]
    fn colon_in_quotient_uses_lift() {
        let q = narita_ring();
        // (0 : x4) = (x4^2) in k[x1..x4]/(x4^3)
        let zero = MonomialIdeal::zero(&q);
        let x4 = ideal(&q, &[&[0, 0, 0, 1]]);
        assert_eq!(zero.colon(&x4).unwrap(), ideal(&q, &[&[0, 0, 0, 2]]));
    }

    #[test]
    fn intersection_examples() {
        let r = xy();
        let x = ideal(&r, &[&[1, 0]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(&r, &[&[1, 1]]));
        assert_eq!(x.intersect(&x).unwrap(), x);
        let a = ideal(&r, &[&[2, 0], &[0, 1]]);
        let b = ideal(&r, &[&[1, 0], &[0, 2]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    #[test]
    fn membership_and_containment() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[0, 3]]);
        assert!(i.contains_monomial(&ev(&[2, 1])));
        let x = ideal(&r, &[&[1, 0]]);
        assert!(!x.contains_monomial(&ev(&[0, 0])));
        let m = MonomialIdeal::maximal(&r);
        let m2 = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(m.power(2), m2);
        let sq = ideal(&r, &[&[2, 0], &[0, 2]]);
        assert!(sq.contains_ideal(&sq.multiply(&m).unwrap()).unwrap());
        assert!(!sq.contains_ideal(&m).unwrap());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = MonomialIdeal::maximal(&xy());
        let b = MonomialIdeal::maximal(&AmbientRing::polynomial(["x", "y", "z"]));
        assert!(matches!(a.add(&b), Err(Error::RingMismatch)));
    }

    #[test]
    fn m_primary_and_dimension() {
        let r = xy();
        assert!(ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]).is_m_primary());
        assert!(!ideal(&r, &[&[1, 0]]).is_m_primary());
        assert_eq!(krull_dim(&AmbientRing::polynomial(["x", "y", "z"])), 3);
        assert_eq!(krull_dim(&narita_ring()), 3);
        let cross = AmbientRing::with_quotient(["x", "y"], vec![ev(&[1, 1])], false).unwrap();
        assert_eq!(krull_dim(&cross), 1);
        // x4 is nilpotent in the Narita ring, so (x1, x2, x3) is m-primary
        assert!(ideal(&narita_ring(), &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]).is_m_primary());
    }

    #[test]
    fn colength_examples() {
        let r = xy();
        assert_eq!(ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]).colength().unwrap(), BigInt::from(3));
        assert_eq!(MonomialIdeal::maximal(&r).colength().unwrap(), BigInt::from(1));
        assert_eq!(MonomialIdeal::unit(&r).colength().unwrap(), BigInt::from(0));
        let xyz = AmbientRing::polynomial(["X", "Y", "Z"]);
        let marley = ideal(
            &xyz,
            &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[2, 1, 0], &[1, 2, 0], &[0, 1, 2], &[1, 1, 1]],
        );
        assert!(marley.is_m_primary());
        assert_eq!(marley.colength().unwrap(), BigInt::from(14));
        assert!(matches!(ideal(&r, &[&[1, 0]]).colength(), Err(Error::NotMPrimary(_))));
    }

    #[test]
    fn colength_box_limit() {
        let r = AmbientRing::polynomial(["x", "y", "z"]);
        let i = ideal(&r, &[&[100, 0, 0], &[0, 100, 0], &[0, 0, 100]]);
        assert!(matches!(i.colength_with_limit(1000), Err(Error::BoxTooLarge { .. })));
        assert_eq!(i.colength().unwrap(), BigInt::from(1_000_000));
    }

    #[test]
    fn display_uses_variable_names() {
        let r = xy();
        assert_eq!(ideal(&r, &[&[2, 0], &[1, 1]]).to_string(), "(x*y, x^2)");
        assert_eq!(MonomialIdeal::unit(&r).to_string(), "(1)");
        assert_eq!(MonomialIdeal::zero(&r).to_string(), "(0)");
    }
}
