//! Admissible filtrations of monomial ideals and their graded pieces.
//!
//! A [`Filtration`] is a declarative description (adic, normal, products of
//! those, Ratliff-Rush closures, restrictions to one axis) together with a
//! memo table from clamped multi-indices to ideals. Filtrations are shared as
//! `Arc<Filtration>`; the memo tolerates concurrent readers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lp;
use crate::monomial::{AmbientRing, ExponentVector, MonomialIdeal};

/// Per-axis kind of a product filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisKind {
    /// `I^n`.
    Adic,
    /// Integral closure of `I^n`.
    Normal,
}

/// Stabilization rule for the Ratliff-Rush colon chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RrConfig {
    /// Number of consecutive equalities `C_k = C_{k+1}` required.
    pub window: usize,
    pub kmax: usize,
}

impl Default for RrConfig {
    fn default() -> Self {
        RrConfig { window: 2, kmax: 32 }
    }
}

#[derive(Debug)]
enum Construction {
    Product { ideals: Vec<MonomialIdeal>, kinds: Vec<AxisKind> },
    NormalProduct { ideals: Vec<MonomialIdeal> },
    RatliffRush { inner: Arc<Filtration>, config: RrConfig },
    Axis { inner: Arc<Filtration>, axis: usize },
}

#[derive(Debug)]
pub struct Filtration {
    ring: Arc<AmbientRing>,
    arity: usize,
    construction: Construction,
    cache: RwLock<HashMap<Vec<u32>, MonomialIdeal>>,
}

fn check_base(ideals: &[MonomialIdeal]) -> Result<Arc<AmbientRing>> {
    let first = ideals.first().ok_or_else(|| Error::Input("a filtration needs at least one ideal".into()))?;
    let ring = Arc::clone(first.ring());
    for i in ideals {
        if **i.ring() != *ring {
            return Err(Error::RingMismatch);
        }
        if !i.is_m_primary() {
            return Err(Error::NotMPrimary(i.to_string()));
        }
    }
    Ok(ring)
}

impl Filtration {
    fn build(ring: Arc<AmbientRing>, arity: usize, construction: Construction) -> Arc<Filtration> {
        Arc::new(Filtration { ring, arity, construction, cache: RwLock::new(HashMap::new()) })
    }

    /// `{I^n}`.
    pub fn adic(ideal: &MonomialIdeal) -> Result<Arc<Filtration>> {
        Self::product(vec![(ideal.clone(), AxisKind::Adic)])
    }

    /// `{closure(I^n)}`; polynomial ambient only.
    pub fn normal(ideal: &MonomialIdeal) -> Result<Arc<Filtration>> {
        Self::product(vec![(ideal.clone(), AxisKind::Normal)])
    }

    /// `F(n) = ∏_i G_i(n_i)` where `G_i` is the adic or normal filtration of `I_i`.
    pub fn product(axes: Vec<(MonomialIdeal, AxisKind)>) -> Result<Arc<Filtration>> {
        let (ideals, kinds): (Vec<_>, Vec<_>) = axes.into_iter().unzip();
        let ring = check_base(&ideals)?;
        if kinds.contains(&AxisKind::Normal) && !ring.is_polynomial() {
            return Err(Error::Unsupported("integral closure in a quotient ring".into()));
        }
        let arity = ideals.len();
        Ok(Self::build(ring, arity, Construction::Product { ideals, kinds }))
    }

    /// `F(n) = closure(I_1^{n_1} ··· I_s^{n_s})`; polynomial ambient only.
    pub fn normal_product(ideals: Vec<MonomialIdeal>) -> Result<Arc<Filtration>> {
        let ring = check_base(&ideals)?;
        if !ring.is_polynomial() {
            return Err(Error::Unsupported("integral closure in a quotient ring".into()));
        }
        let arity = ideals.len();
        Ok(Self::build(ring, arity, Construction::NormalProduct { ideals }))
    }

    /// The Ratliff-Rush closure filtration of `inner`.
    pub fn ratliff_rush(inner: &Arc<Filtration>, config: RrConfig) -> Arc<Filtration> {
        Self::build(
            Arc::clone(&inner.ring),
            inner.arity,
            Construction::RatliffRush { inner: Arc::clone(inner), config },
        )
    }

    /// The univariate filtration `n ↦ F(n e_axis)`.
    pub fn axis(inner: &Arc<Filtration>, axis: usize) -> Result<Arc<Filtration>> {
        if axis >= inner.arity {
            return Err(Error::Input(format!("axis {} out of range for arity {}", axis + 1, inner.arity)));
        }
        Ok(Self::build(Arc::clone(&inner.ring), 1, Construction::Axis { inner: Arc::clone(inner), axis }))
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `I_i`, the ideal the filtration is admissible over on axis `i`.
    pub fn base_ideal(&self, i: usize) -> &MonomialIdeal {
        match &self.construction {
            Construction::Product { ideals, .. } | Construction::NormalProduct { ideals } => &ideals[i],
            Construction::RatliffRush { inner, .. } => inner.base_ideal(i),
            Construction::Axis { inner, axis } => inner.base_ideal(*axis),
        }
    }

    /// Every piece is `F(1)^n` by construction (univariate adic).
    pub fn is_adic(&self) -> bool {
        match &self.construction {
            Construction::Product { kinds, .. } => self.arity == 1 && kinds[0] == AxisKind::Adic,
            Construction::Axis { inner, axis } => match &inner.construction {
                Construction::Product { kinds, .. } => kinds[*axis] == AxisKind::Adic,
                _ => false,
            },
            _ => false,
        }
    }

    /// Built from integral closures, so every piece is integrally closed.
    pub fn is_normal(&self) -> bool {
        match &self.construction {
            Construction::Product { kinds, .. } => self.arity == 1 && kinds[0] == AxisKind::Normal,
            Construction::NormalProduct { .. } => true,
            Construction::Axis { inner, axis } => match &inner.construction {
                Construction::Product { kinds, .. } => kinds[*axis] == AxisKind::Normal,
                Construction::NormalProduct { .. } => true,
                _ => false,
            },
            _ => false,
        }
    }

    pub fn is_ratliff_rush(&self) -> bool {
        matches!(self.construction, Construction::RatliffRush { .. })
    }

    /// `F(n)`, with negative entries of `n` clamped to zero.
    pub fn piece(&self, n: &[i64]) -> Result<MonomialIdeal> {
        if n.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: n.len() });
        }
        let key: Vec<u32> = n.iter().map(|&v| v.max(0) as u32).collect();
        if let Some(hit) = self.cache.read().expect("filtration cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let value = self.compute(&key)?;
        self.cache.write().expect("filtration cache poisoned").insert(key, value.clone());
        Ok(value)
    }

    /// `F(e_i)`.
    pub fn unit_piece(&self, i: usize) -> Result<MonomialIdeal> {
        let mut n = vec![0; self.arity];
        n[i] = 1;
        self.piece(&n)
    }

    fn compute(&self, n: &[u32]) -> Result<MonomialIdeal> {
        if n.iter().all(|&v| v == 0) {
            return Ok(MonomialIdeal::unit(&self.ring));
        }
        match &self.construction {
            Construction::Product { ideals, kinds } => {
                let mut acc = MonomialIdeal::unit(&self.ring);
                for ((ideal, kind), &k) in ideals.iter().zip(kinds).zip(n) {
                    if k == 0 {
                        continue;
                    }
                    let factor = match kind {
                        AxisKind::Adic => ideal.power(k),
                        AxisKind::Normal => integral_closure_power(ideal, k)?,
                    };
                    acc = acc.multiply(&factor)?;
                }
                Ok(acc)
            }
            Construction::NormalProduct { ideals } => {
                let groups: Vec<(&MonomialIdeal, u32)> = ideals.iter().zip(n.iter().copied()).collect();
                closure_of_product(&self.ring, &groups)
            }
            Construction::RatliffRush { inner, config } => {
                let signed: Vec<i64> = n.iter().map(|&v| v as i64).collect();
                ratliff_rush_piece(inner, &signed, *config)
            }
            Construction::Axis { inner, axis } => {
                let mut m = vec![0i64; inner.arity];
                m[*axis] = n[0] as i64;
                inner.piece(&m)
            }
        }
    }
}

impl fmt::Display for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.construction {
            Construction::Product { ideals, kinds } => {
                let parts: Vec<String> = ideals
                    .iter()
                    .zip(kinds)
                    .map(|(i, k)| match k {
                        AxisKind::Adic => format!("adic{i}"),
                        AxisKind::Normal => format!("normal{i}"),
                    })
                    .collect();
                if parts.len() == 1 {
                    write!(f, "{}", parts[0])
                } else {
                    write!(f, "product({})", parts.join(", "))
                }
            }
            Construction::NormalProduct { ideals } => {
                let parts: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
                write!(f, "normal_product({})", parts.join(", "))
            }
            Construction::RatliffRush { inner, .. } => write!(f, "rr({inner})"),
            Construction::Axis { inner, axis } => write!(f, "axis{}({inner})", axis + 1),
        }
    }
}

/// `a ∈ n·NP(I)`: some `λ ≥ 0` with `Σ λ_g = n` and `Σ λ_g g ≤ a`.
pub fn newton_membership(a: &ExponentVector, ideal: &MonomialIdeal, n: u32) -> Result<bool> {
    if !ideal.ring().is_polynomial() {
        return Err(Error::Unsupported("Newton polyhedron membership in a quotient ring".into()));
    }
    if a.len() != ideal.ring().num_vars() {
        return Err(Error::DimensionMismatch { expected: ideal.ring().num_vars(), found: a.len() });
    }
    Ok(minkowski_membership(a, &[(ideal, n)]))
}

/// Membership of `a` in the Minkowski sum `Σ n_i·NP(I_i)`.
fn minkowski_membership(a: &ExponentVector, groups: &[(&MonomialIdeal, u32)]) -> bool {
    let v = a.len();
    let groups: Vec<_> = groups.iter().filter(|(_, n)| *n > 0).collect();
    if groups.is_empty() {
        return true;
    }
    // quick accept: a multiple of a product of generators
    let mut corner = ExponentVector::zero(v);
    for (ideal, n) in &groups {
        let g = ideal.generators().iter().min_by_key(|g| g.degree()).expect("nonzero ideal");
        corner = corner.mul(&g.scale(*n));
    }
    if corner.divides(a) {
        return true;
    }
    let gens: usize = groups.iter().map(|(i, _)| i.num_generators()).sum();
    let cols = gens + v;
    let mut rows = Vec::with_capacity(v + groups.len());
    let mut rhs = Vec::with_capacity(v + groups.len());
    for j in 0..v {
        let mut row = vec![BigRational::zero(); cols];
        let mut c = 0;
        for (ideal, _) in &groups {
            for g in ideal.generators() {
                row[c] = lp::rational(g.as_slice()[j] as i64);
                c += 1;
            }
        }
        row[gens + j] = lp::rational(1);
        rows.push(row);
        rhs.push(lp::rational(a.as_slice()[j] as i64));
    }
    let mut c = 0;
    for (ideal, n) in &groups {
        let mut row = vec![BigRational::zero(); cols];
        for _ in ideal.generators() {
            row[c] = lp::rational(1);
            c += 1;
        }
        rows.push(row);
        rhs.push(BigRational::from_integer(BigInt::from(*n)));
    }
    lp::is_feasible(&rows, &rhs)
}

/// Integral closure of a monomial ideal.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    integral_closure_power(ideal, 1)
}

/// `closure(I^n)`, the monomials of `n·NP(I)`.
pub fn integral_closure_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if !ideal.ring().is_polynomial() {
        return Err(Error::Unsupported("integral closure in a quotient ring".into()));
    }
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary(ideal.to_string()));
    }
    closure_of_product(ideal.ring(), &[(ideal, n)])
}

fn closure_of_product(ring: &Arc<AmbientRing>, groups: &[(&MonomialIdeal, u32)]) -> Result<MonomialIdeal> {
    let v = ring.num_vars();
    if groups.iter().all(|(_, n)| *n == 0) {
        return Ok(MonomialIdeal::unit(ring));
    }
    let mut bounds = vec![0u32; v];
    for (ideal, n) in groups {
        let b = ideal.bounding_box().ok_or_else(|| Error::NotMPrimary(ideal.to_string()))?;
        for j in 0..v {
            bounds[j] += b[j] * n;
        }
    }
    if v == 0 {
        return Ok(MonomialIdeal::unit(ring));
    }
    let last = v - 1;
    let prefix_points: u128 = bounds[..last].iter().map(|&b| b as u128 + 1).product();
    if prefix_points > crate::monomial::COLENGTH_PREFIX_LIMIT {
        return Err(Error::BoxTooLarge { points: prefix_points, limit: crate::monomial::COLENGTH_PREFIX_LIMIT });
    }
    let mut candidates = Vec::new();
    let mut prefix = vec![0u32; last];
    let point = |prefix: &[u32], t: u32| {
        let mut p = prefix.to_vec();
        p.push(t);
        ExponentVector::new(p)
    };
    'outer: loop {
        // membership is monotone in the last coordinate: binary search the threshold
        let (mut lo, mut hi) = (0u32, bounds[last]);
        if minkowski_membership(&point(&prefix, 0), groups) {
            hi = 0;
        } else {
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if minkowski_membership(&point(&prefix, mid), groups) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
        candidates.push(point(&prefix, hi));
        let mut i = 0;
        loop {
            if i == last {
                break 'outer;
            }
            prefix[i] += 1;
            if prefix[i] <= bounds[i] {
                break;
            }
            prefix[i] = 0;
            i += 1;
        }
    }
    MonomialIdeal::from_generators(ring, candidates)
}

/// `breve F(n) = ∪_k (F(n + k e) : F(e)^k)` with `e = (1, ..., 1)`.
///
/// The chain `C_k` is increasing; it is declared stable once `config.window`
/// consecutive terms agree.
pub fn ratliff_rush_piece(f: &Filtration, n: &[i64], config: RrConfig) -> Result<MonomialIdeal> {
    if n.len() != f.arity() {
        return Err(Error::Arity { expected: f.arity(), found: n.len() });
    }
    let base: Vec<i64> = n.iter().map(|&v| v.max(0)).collect();
    if base.iter().all(|&v| v == 0) {
        return Ok(MonomialIdeal::unit(f.ring()));
    }
    let fe = f.piece(&vec![1; f.arity()])?;
    let mut chain: Vec<MonomialIdeal> = Vec::new();
    let mut streak = 0;
    for k in 1..=config.kmax {
        let shifted: Vec<i64> = base.iter().map(|&v| v + k as i64).collect();
        let mut c = f.piece(&shifted)?;
        for _ in 0..k {
            c = c.colon(&fe)?;
        }
        if chain.last() == Some(&c) {
            streak += 1;
        } else {
            streak = 0;
        }
        chain.push(c);
        if streak >= config.window {
            return Ok(chain.pop().expect("nonempty chain"));
        }
    }
    Err(Error::Unstable { index: base, kmax: config.kmax, chain })
}

/// `F ↦ breve F`.
pub fn rr_closed_filtration(f: &Arc<Filtration>, config: RrConfig) -> Arc<Filtration> {
    Filtration::ratliff_rush(f, config)
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

    #[test]
    fn adic_pieces_and_clamping() {
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let f = Filtration::adic(&m).unwrap();
        assert_eq!(f.piece(&[3]).unwrap(), m.power(3));
        assert!(f.piece(&[-2]).unwrap().is_unit());
        assert!(matches!(f.piece(&[1, 1]), Err(Error::Arity { .. })));
    }

    #[test]
    fn non_m_primary_base_is_rejected() {
        let r = xy();
        let x = ideal(&r, &[&[1, 0]]);
        assert!(matches!(Filtration::adic(&x), Err(Error::NotMPrimary(_))));
    }

    #[test]
    fn newton_membership_examples() {
        let r = xy();
        let cubes = ideal(&r, &[&[3, 0], &[0, 3]]);
        assert!(newton_membership(&ev(&[2, 1]), &cubes, 1).unwrap());
        let i = ideal(&r, &[&[2, 0], &[0, 3]]);
        assert!(!newton_membership(&ev(&[1, 1]), &i, 1).unwrap());
        for g in i.generators() {
            assert!(newton_membership(g, &i, 1).unwrap());
        }
        let q = AmbientRing::with_quotient(["x", "y"], vec![ev(&[0, 3])], true).unwrap();
        let j = ideal(&q, &[&[1, 0], &[0, 1]]);
        assert!(matches!(newton_membership(&ev(&[1, 1]), &j, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn integral_closure_examples() {
        let r = xy();
        let cubes = ideal(&r, &[&[3, 0], &[0, 3]]);
        assert_eq!(integral_closure(&cubes).unwrap(), MonomialIdeal::maximal(&r).power(3));
        let m = MonomialIdeal::maximal(&r);
        assert_eq!(integral_closure(&m).unwrap(), m);
        let i = ideal(&r, &[&[2, 0], &[0, 3]]);
        assert_eq!(integral_closure(&i).unwrap(), ideal(&r, &[&[2, 0], &[1, 2], &[0, 3]]));
    }

    #[test]
    fn normal_filtration_piece() {
        let r = xy();
        let cubes = ideal(&r, &[&[3, 0], &[0, 3]]);
        let f = Filtration::normal(&cubes).unwrap();
        assert_eq!(f.piece(&[1]).unwrap(), ideal(&r, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]));
        assert_eq!(f.piece(&[2]).unwrap(), MonomialIdeal::maximal(&r).power(6));
    }

    #[test]
    fn ratliff_rush_examples() {
        let r = xy();
        let i = ideal(&r, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let f = Filtration::adic(&i).unwrap();
        let breve = ratliff_rush_piece(&f, &[1], RrConfig::default()).unwrap();
        assert_eq!(breve, i.add(&ideal(&r, &[&[2, 2]])).unwrap());

        let m2 = MonomialIdeal::maximal(&r).power(2);
        let g = Filtration::adic(&m2).unwrap();
        assert_eq!(ratliff_rush_piece(&g, &[1], RrConfig::default()).unwrap(), m2);

        let x2 = ideal(&r, &[&[2, 0], &[0, 5]]);
        let h = Filtration::adic(&x2).unwrap();
        assert_eq!(ratliff_rush_piece(&h, &[1], RrConfig::default()).unwrap(), x2);
    }

    #[test]
    fn rr_closed_filtration_wraps() {
        let r = xy();
        let i = ideal(&r, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let f = Filtration::adic(&i).unwrap();
        let b = rr_closed_filtration(&f, RrConfig::default());
        assert!(b.piece(&[0]).unwrap().is_unit());
        assert!(b.piece(&[1]).unwrap().contains_monomial(&ev(&[2, 2])));
        let cubes = ideal(&r, &[&[3, 0], &[0, 3]]);
        let n = Filtration::normal(&cubes).unwrap();
        let nb = rr_closed_filtration(&n, RrConfig::default());
        for k in 0..4 {
            assert_eq!(nb.piece(&[k]).unwrap(), n.piece(&[k]).unwrap());
        }
    }

    #[test]
    fn unstable_chain_is_reported() {
        let r = xy();
        let i = ideal(&r, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let f = Filtration::adic(&i).unwrap();
        let err = ratliff_rush_piece(&f, &[1], RrConfig { window: 5, kmax: 3 }).unwrap_err();
        match err {
            Error::Unstable { chain, kmax, .. } => {
                assert_eq!(kmax, 3);
                assert_eq!(chain.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn multigraded_pieces() {
        let r = xy();
        let m = MonomialIdeal::maximal(&r);
        let sq = ideal(&r, &[&[2, 0], &[0, 2]]);
        let f = Filtration::product(vec![(sq.clone(), AxisKind::Normal), (m.clone(), AxisKind::Adic)]).unwrap();
        assert_eq!(f.piece(&[1, 1]).unwrap(), m.power(3));
        let g = Filtration::normal_product(vec![sq.clone(), sq.clone()]).unwrap();
        assert_eq!(g.piece(&[1, 1]).unwrap(), m.power(4));
        let a = Filtration::axis(&f, 0).unwrap();
        assert_eq!(a.piece(&[2]).unwrap(), m.power(4));
        assert!(Filtration::axis(&f, 1).unwrap().is_adic());
    }
}
