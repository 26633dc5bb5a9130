//! Exact arithmetic in `Z_p^d`, viewed as a `d`-dimensional vector space over
//! the prime field `F_p`.
//!
//! Everything here is deterministic and allocation-light: coordinates are
//! stored as reduced residues, elimination always pivots on the first nonzero
//! column, and subset-sum reachability is computed by exact dynamic
//! programming with reconstruction data.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// Upper bound on `|source| * p^d` states in [`reachable_sums`].
pub const REACHABLE_BUDGET: u64 = 10_000_000;

/// The ambient space: a prime modulus `p` and a dimension `d >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSpec {
    p: u64,
    d: usize,
}

impl FieldSpec {
    /// Validates `p` by trial division and requires `d >= 1`.
    pub fn new(p: u64, d: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(FieldSpec { p, d })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    /// `p^d`, or `None` on overflow.
    pub fn group_order(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..self.d {
            acc = acc.checked_mul(self.p)?;
        }
        Some(acc)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}^{}", self.p, self.d)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Multiplicative inverse mod a prime, by the extended Euclidean algorithm.
fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut old_r, mut r) = (a as i128 % p as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i128) as u64
}

/// An element of `Z_p^d`. Coordinates are always reduced residues.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupVector {
    spec: FieldSpec,
    coords: Vec<u64>,
}

impl GroupVector {
    /// Builds a vector from raw coordinates, reducing each mod `p`.
    pub fn new(spec: FieldSpec, coords: Vec<u64>) -> Result<Self> {
        if coords.len() != spec.d {
            return Err(Error::BadCoordinates {
                want: spec.d,
                got: coords.len(),
            });
        }
        let coords = coords.into_iter().map(|c| c % spec.p).collect();
        Ok(GroupVector { spec, coords })
    }

    pub fn zero(spec: FieldSpec) -> Self {
        GroupVector {
            spec,
            coords: vec![0; spec.d],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(spec: FieldSpec, i: usize) -> Self {
        debug_assert!(i < spec.d);
        let mut coords = vec![0; spec.d];
        coords[i] = 1;
        GroupVector { spec, coords }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinate-wise sum mod `p`. Rejects mismatched specs.
    pub fn add(&self, other: &GroupVector) -> Result<GroupVector> {
        self.check_spec(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a + b) % self.spec.p)
            .collect();
        Ok(GroupVector {
            spec: self.spec,
            coords,
        })
    }

    /// The additive inverse: `self + self.neg() == 0`.
    pub fn neg(&self) -> GroupVector {
        let p = self.spec.p;
        let coords = self.coords.iter().map(|&c| (p - c) % p).collect();
        GroupVector {
            spec: self.spec,
            coords,
        }
    }

    /// `self - other`, implemented as `self + other.neg()` so the code path
    /// is uniform for every `p` (for `p = 2` subtraction equals addition).
    pub fn sub(&self, other: &GroupVector) -> Result<GroupVector> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: u64) -> GroupVector {
        let p = self.spec.p;
        let c = c % p;
        let coords = self.coords.iter().map(|&a| a * c % p).collect();
        GroupVector {
            spec: self.spec,
            coords,
        }
    }

    fn check_spec(&self, other: &GroupVector) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(self.spec, other.spec));
        }
        Ok(())
    }
}

impl fmt::Display for GroupVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Sums an iterator of vectors; the spec argument covers the empty case.
pub fn sum_of<'a>(spec: FieldSpec, vs: impl IntoIterator<Item = &'a GroupVector>) -> Result<GroupVector> {
    let mut acc = GroupVector::zero(spec);
    for v in vs {
        acc = acc.add(v)?;
    }
    Ok(acc)
}

/// A basis of an `F_p`-subspace in reduced row-echelon form.
///
/// Rows are kept with strictly increasing pivot columns, pivots normalized to
/// one, and pivot columns cleared everywhere else, so membership queries and
/// coefficient certificates are deterministic and idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanBasis {
    spec: FieldSpec,
    rows: Vec<GroupVector>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn empty(spec: FieldSpec) -> Self {
        SpanBasis {
            spec,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// The echelon rows, pivot columns ascending.
    pub fn vectors(&self) -> &[GroupVector] {
        &self.rows
    }

    /// Reduces `v` against the rows. Returns the remainder together with the
    /// coefficient applied to each existing row.
    fn reduce(&self, v: &GroupVector) -> (GroupVector, Vec<u64>) {
        let p = self.spec.p;
        let mut rem = v.clone();
        let mut coeffs = vec![0; self.rows.len()];
        for (i, (row, &piv)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = rem.coords[piv];
            if c != 0 {
                coeffs[i] = c;
                rem = rem.add(&row.scalar_mul((p - c) % p)).expect("same spec");
            }
        }
        (rem, coeffs)
    }

    /// Adds `v` to the span. Returns true iff the dimension grew.
    pub fn insert(&mut self, v: &GroupVector) -> Result<bool> {
        if v.spec != self.spec {
            return Err(Error::SpecMismatch(self.spec, v.spec));
        }
        let (rem, _) = self.reduce(v);
        let Some(piv) = rem.coords.iter().position(|&c| c != 0) else {
            return Ok(false);
        };
        let normalized = rem.scalar_mul(inv_mod(rem.coords[piv], self.spec.p));
        // Clear the new pivot column in existing rows, then keep pivot order.
        let p = self.spec.p;
        for row in &mut self.rows {
            let c = row.coords[piv];
            if c != 0 {
                *row = row.add(&normalized.scalar_mul((p - c) % p)).expect("same spec");
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.rows.insert(at, normalized);
        self.pivots.insert(at, piv);
        Ok(true)
    }

    /// Membership test.
    pub fn contains(&self, v: &GroupVector) -> Result<bool> {
        if v.spec != self.spec {
            return Err(Error::SpecMismatch(self.spec, v.spec));
        }
        Ok(self.reduce(v).0.is_zero())
    }

    /// Membership certificate: coefficients over [`Self::vectors`] whose
    /// combination equals `v`, or `None` when `v` is outside the span.
    pub fn coefficients(&self, v: &GroupVector) -> Result<Option<Vec<u64>>> {
        if v.spec != self.spec {
            return Err(Error::SpecMismatch(self.spec, v.spec));
        }
        let (rem, coeffs) = self.reduce(v);
        Ok(if rem.is_zero() { Some(coeffs) } else { None })
    }

    /// Every vector of the span, enumerated in a fixed coefficient order.
    /// There are `p^dimension` of them.
    pub fn enumerate_span(&self) -> Vec<GroupVector> {
        let p = self.spec.p;
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; self.rows.len()];
        loop {
            let mut v = GroupVector::zero(self.spec);
            for (c, row) in coeffs.iter().zip(&self.rows) {
                v = v.add(&row.scalar_mul(*c)).expect("same spec");
            }
            out.push(v);
            // Odometer over [0, p)^dim.
            let mut i = 0;
            loop {
                if i == coeffs.len() {
                    return out;
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }
}

/// Row-echelon basis of the span of `vs`; the dimension is the rank.
pub fn span_of(spec: FieldSpec, vs: &[GroupVector]) -> Result<SpanBasis> {
    let mut basis = SpanBasis::empty(spec);
    for v in vs {
        basis.insert(v)?;
    }
    Ok(basis)
}

/// Expresses `target` as a combination of the given vectors (not necessarily
/// independent ones). Returns one coefficient per input vector, or `None`
/// when `target` is outside their span. For `p = 2` the coefficients are a
/// subset indicator.
pub fn express_in_terms(spec: FieldSpec, vs: &[GroupVector], target: &GroupVector) -> Result<Option<Vec<u64>>> {
    if target.spec() != spec {
        return Err(Error::SpecMismatch(spec, target.spec()));
    }
    // Echelon rows tagged with their combination over the original vectors.
    let p = spec.p;
    let mut rows: Vec<(GroupVector, Vec<u64>)> = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        if v.spec() != spec {
            return Err(Error::SpecMismatch(spec, v.spec()));
        }
        let mut rem = v.clone();
        let mut combo = vec![0u64; vs.len()];
        combo[i] = 1;
        for (row, rc) in &rows {
            let piv = row.coords.iter().position(|&c| c != 0).expect("nonzero row");
            let c = rem.coords[piv];
            if c != 0 {
                rem = rem.add(&row.scalar_mul((p - c) % p))?;
                for (a, b) in combo.iter_mut().zip(rc) {
                    *a = (*a + (p - c) % p * b) % p;
                }
            }
        }
        if let Some(piv) = rem.coords.iter().position(|&c| c != 0) {
            let inv = inv_mod(rem.coords[piv], p);
            let rem = rem.scalar_mul(inv);
            for c in combo.iter_mut() {
                *c = *c * inv % p;
            }
            let at = rows
                .partition_point(|(row, _)| row.coords.iter().position(|&c| c != 0).unwrap() < piv);
            rows.insert(at, (rem, combo));
        }
    }
    let mut rem = target.clone();
    let mut combo = vec![0u64; vs.len()];
    for (row, rc) in &rows {
        let piv = row.coords.iter().position(|&c| c != 0).expect("nonzero row");
        let c = rem.coords[piv];
        if c != 0 {
            rem = rem.add(&row.scalar_mul((p - c) % p))?;
            for (a, b) in combo.iter_mut().zip(rc) {
                *a = (*a + c * b) % p;
            }
        }
    }
    Ok(if rem.is_zero() { Some(combo) } else { None })
}

/// All sub-multiset sums of `source`, with reconstruction data.
#[derive(Debug, Clone)]
pub struct SumReachability {
    spec: FieldSpec,
    source: Vec<GroupVector>,
    /// Maps each reachable vector to its predecessor sum and the source
    /// index added last; the zero vector has no parent.
    parent: HashMap<GroupVector, Option<(GroupVector, usize)>>,
}

impl SumReachability {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn source(&self) -> &[GroupVector] {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn contains(&self, v: &GroupVector) -> bool {
        self.parent.contains_key(v)
    }

    /// Reachable vectors in ascending order.
    pub fn reachable(&self) -> Vec<GroupVector> {
        let mut out: Vec<_> = self.parent.keys().cloned().collect();
        out.sort();
        out
    }

    /// Source indices (ascending, each at most once) of a sub-multiset
    /// summing to `v`, or `None` if `v` is unreachable.
    pub fn reconstruct(&self, v: &GroupVector) -> Option<Vec<usize>> {
        let mut cur = v.clone();
        let mut indices = Vec::new();
        loop {
            match self.parent.get(&cur)? {
                None => break,
                Some((pred, idx)) => {
                    indices.push(*idx);
                    cur = pred.clone();
                }
            }
        }
        indices.reverse();
        Some(indices)
    }
}

/// Exact subset-sum reachability over the group, by dynamic programming.
///
/// Processing the source in index order and extending only sums that were
/// reachable before the current index guarantees each index is used at most
/// once along any parent chain. Fails when `|source| * p^d` exceeds
/// [`REACHABLE_BUDGET`].
pub fn reachable_sums(spec: FieldSpec, source: &[GroupVector]) -> Result<SumReachability> {
    let order = spec
        .group_order()
        .ok_or_else(|| Error::Budget(format!("group order of {spec} overflows")))?;
    let states = (source.len().max(1) as u64).checked_mul(order);
    match states {
        Some(s) if s <= REACHABLE_BUDGET => {}
        _ => {
            return Err(Error::Budget(format!(
                "reachable_sums needs {} x {order} states (budget {REACHABLE_BUDGET})",
                source.len().max(1)
            )))
        }
    }
    for v in source {
        if v.spec() != spec {
            return Err(Error::SpecMismatch(spec, v.spec()));
        }
    }
    let mut parent: HashMap<GroupVector, Option<(GroupVector, usize)>> = HashMap::new();
    parent.insert(GroupVector::zero(spec), None);
    for (idx, v) in source.iter().enumerate() {
        // Snapshot in ascending order so parent assignment is deterministic.
        let mut snapshot: Vec<_> = parent.keys().cloned().collect();
        snapshot.sort();
        for s in snapshot {
            let candidate = s.add(v)?;
            parent.entry(candidate).or_insert(Some((s, idx)));
        }
    }
    Ok(SumReachability {
        spec,
        source: source.to_vec(),
        parent,
    })
}

/// True iff every vector of `target`'s span is a sub-multiset sum of
/// `source`.
pub fn is_additive_basis(spec: FieldSpec, source: &[GroupVector], target: &SpanBasis) -> Result<bool> {
    let reach = reachable_sums(spec, source)?;
    Ok(target.enumerate_span().iter().all(|v| reach.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn spec(p: u64, d: usize) -> FieldSpec {
        FieldSpec::new(p, d).unwrap()
    }

    fn vec_of(s: FieldSpec, coords: &[u64]) -> GroupVector {
        GroupVector::new(s, coords.to_vec()).unwrap()
    }

    /// Independent rank oracle: the span size is p^rank, so count distinct
    /// sums over all coefficient assignments to the input vectors.
    fn brute_force_rank(s: FieldSpec, vs: &[GroupVector]) -> usize {
        let p = s.modulus();
        let mut seen = std::collections::BTreeSet::new();
        let mut coeffs = vec![0u64; vs.len()];
        loop {
            let mut acc = GroupVector::zero(s);
            for (c, v) in coeffs.iter().zip(vs) {
                acc = acc.add(&v.scalar_mul(*c)).unwrap();
            }
            seen.insert(acc);
            let mut i = 0;
            loop {
                if i == coeffs.len() {
                    let mut rank = 0;
                    let mut size = 1u64;
                    while size < seen.len() as u64 {
                        size *= p;
                        rank += 1;
                    }
                    assert_eq!(size, seen.len() as u64);
                    return rank;
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Independent reachability oracle: enumerate all 2^|source| subsets.
    fn brute_force_sums(s: FieldSpec, source: &[GroupVector]) -> std::collections::BTreeSet<GroupVector> {
        assert!(source.len() <= 12);
        let mut out = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << source.len()) {
            let mut acc = GroupVector::zero(s);
            for (i, v) in source.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc = acc.add(v).unwrap();
                }
            }
            out.insert(acc);
        }
        out
    }

    fn random_vector(rng: &mut ChaCha8Rng, s: FieldSpec) -> GroupVector {
        let coords = (0..s.dimension()).map(|_| rng.random_range(0..s.modulus())).collect();
        GroupVector::new(s, coords).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(FieldSpec::new(2, 1).is_ok());
        assert!(FieldSpec::new(97, 4).is_ok());
        assert!(matches!(FieldSpec::new(1, 1), Err(Error::NotPrime(1))));
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(0, 1), Err(Error::NotPrime(0))));
        assert!(matches!(FieldSpec::new(3, 0), Err(Error::ZeroDimension)));
    }

    #[test]
    fn add_examples() {
        let s22 = spec(2, 2);
        assert_eq!(
            vec_of(s22, &[1, 0]).add(&vec_of(s22, &[1, 1])).unwrap(),
            vec_of(s22, &[0, 1])
        );
        let s31 = spec(3, 1);
        assert_eq!(vec_of(s31, &[2]).add(&vec_of(s31, &[2])).unwrap(), vec_of(s31, &[1]));

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = spec(5, 3);
        for _ in 0..50 {
            let a = random_vector(&mut rng, s);
            assert_eq!(a.add(&GroupVector::zero(s)).unwrap(), a);
        }
    }

    #[test]
    fn add_rejects_spec_mismatch() {
        let a = vec_of(spec(2, 2), &[1, 0]);
        let b = vec_of(spec(3, 2), &[1, 0]);
        assert!(matches!(a.add(&b), Err(Error::SpecMismatch(_, _))));
        assert!(matches!(
            span_of(spec(2, 2), &[a.clone(), b]),
            Err(Error::SpecMismatch(_, _))
        ));
        let basis = span_of(spec(2, 2), &[a]).unwrap();
        assert!(matches!(
            basis.contains(&vec_of(spec(3, 2), &[1, 0])),
            Err(Error::SpecMismatch(_, _))
        ));
    }

    #[test]
    fn neg_examples() {
        let s21 = spec(2, 3);
        for coords in [[0, 0, 0], [1, 0, 1], [1, 1, 1]] {
            let v = vec_of(s21, &coords);
            assert_eq!(v.neg(), v, "char 2 is self-inverse");
        }
        let s32 = spec(3, 2);
        assert_eq!(vec_of(s32, &[1, 2]).neg(), vec_of(s32, &[2, 1]));
        assert_eq!(GroupVector::zero(s32).neg(), GroupVector::zero(s32));
    }

    #[test]
    fn span_examples() {
        let s22 = spec(2, 2);
        let b = span_of(s22, &[vec_of(s22, &[1, 0]), vec_of(s22, &[0, 1])]).unwrap();
        assert_eq!(b.dimension(), 2);

        let s32 = spec(3, 2);
        let b = span_of(s32, &[vec_of(s32, &[1, 1]), vec_of(s32, &[2, 2])]).unwrap();
        assert_eq!(b.dimension(), 1);

        let empty = span_of(s32, &[]).unwrap();
        assert_eq!(empty.dimension(), 0);
        assert!(empty.contains(&GroupVector::zero(s32)).unwrap());
        assert!(!empty.contains(&vec_of(s32, &[1, 0])).unwrap());
    }

    #[test]
    fn in_span_examples() {
        let s32 = spec(3, 2);
        let b = span_of(s32, &[vec_of(s32, &[1, 0]), vec_of(s32, &[0, 1])]).unwrap();
        let v = vec_of(s32, &[1, 2]);
        assert_eq!(b.coefficients(&v).unwrap(), Some(vec![1, 2]));

        let s22 = spec(2, 2);
        let b = span_of(s22, &[vec_of(s22, &[1, 0])]).unwrap();
        assert!(!b.contains(&vec_of(s22, &[0, 1])).unwrap());
        assert_eq!(
            b.coefficients(&GroupVector::zero(s22)).unwrap(),
            Some(vec![0])
        );
    }

    #[test]
    fn rank_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, d) in [(2, 2), (2, 4), (3, 2), (3, 3), (3, 4)] {
            let s = spec(p, d);
            for _ in 0..40 {
                let n = rng.random_range(0..=6usize);
                let vs: Vec<_> = (0..n).map(|_| random_vector(&mut rng, s)).collect();
                let b = span_of(s, &vs).unwrap();
                assert_eq!(b.dimension(), brute_force_rank(s, &vs), "vs={vs:?}");
            }
        }
    }

    #[test]
    fn reachable_examples() {
        let s22 = spec(2, 2);
        let r = reachable_sums(s22, &[vec_of(s22, &[1, 0]), vec_of(s22, &[0, 1])]).unwrap();
        assert_eq!(r.len(), 4);

        let s31 = spec(3, 1);
        // Oracle first: subsets of {1} are {} and {1}, sums {0, 1}.
        let oracle = brute_force_sums(s31, &[vec_of(s31, &[1])]);
        assert_eq!(oracle.len(), 2);
        let r = reachable_sums(s31, &[vec_of(s31, &[1])]).unwrap();
        assert!(r.contains(&vec_of(s31, &[0])));
        assert!(r.contains(&vec_of(s31, &[1])));
        assert!(!r.contains(&vec_of(s31, &[2])));

        let r = reachable_sums(s31, &[]).unwrap();
        assert_eq!(r.reachable(), vec![GroupVector::zero(s31)]);
    }

    #[test]
    fn reachable_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for (p, d) in [(2, 3), (3, 2), (5, 1)] {
            let s = spec(p, d);
            for _ in 0..25 {
                let n = rng.random_range(0..=12usize).min(8);
                let source: Vec<_> = (0..n).map(|_| random_vector(&mut rng, s)).collect();
                let r = reachable_sums(s, &source).unwrap();
                let oracle = brute_force_sums(s, &source);
                assert_eq!(
                    r.reachable().into_iter().collect::<std::collections::BTreeSet<_>>(),
                    oracle
                );
            }
        }
    }

    #[test]
    fn reconstruction_resums() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let s = spec(3, 3);
        for _ in 0..30 {
            let n = rng.random_range(0..=8usize);
            let source: Vec<_> = (0..n).map(|_| random_vector(&mut rng, s)).collect();
            let r = reachable_sums(s, &source).unwrap();
            for v in r.reachable() {
                let idx = r.reconstruct(&v).unwrap();
                // Indices must be usable at most once each.
                let mut sorted = idx.clone();
                sorted.dedup();
                assert_eq!(sorted.len(), idx.len());
                let total = sum_of(s, idx.iter().map(|&i| &source[i])).unwrap();
                assert_eq!(total, v);
            }
        }
    }

    #[test]
    fn reachable_budget_error() {
        let s = spec(2, 62);
        let source = vec![GroupVector::zero(s); 2];
        assert!(matches!(reachable_sums(s, &source), Err(Error::Budget(_))));
    }

    #[test]
    fn additive_basis_examples() {
        // A linear basis of Z_2^d is an additive basis.
        for d in 1..=10 {
            let s = spec(2, d);
            let basis: Vec<_> = (0..d).map(|i| GroupVector::unit(s, i)).collect();
            let full = span_of(s, &basis).unwrap();
            assert!(is_additive_basis(s, &basis, &full).unwrap());
        }

        // Over Z_3 one basis {1} is not additive, but {1} u {1} is.
        let s31 = spec(3, 1);
        let full = span_of(s31, &[vec_of(s31, &[1])]).unwrap();
        assert!(!is_additive_basis(s31, &[vec_of(s31, &[1])], &full).unwrap());
        assert!(is_additive_basis(s31, &[vec_of(s31, &[1]), vec_of(s31, &[1])], &full).unwrap());

        // Empty source versus the zero-dimensional span.
        let s22 = spec(2, 2);
        assert!(is_additive_basis(s22, &[], &SpanBasis::empty(s22)).unwrap());
    }

    #[test]
    fn express_in_terms_solves() {
        let s32 = spec(3, 2);
        let vs = vec![vec_of(s32, &[1, 1]), vec_of(s32, &[2, 2]), vec_of(s32, &[0, 1])];
        let target = vec_of(s32, &[1, 2]);
        let combo = express_in_terms(s32, &vs, &target).unwrap().unwrap();
        let mut acc = GroupVector::zero(s32);
        for (c, v) in combo.iter().zip(&vs) {
            acc = acc.add(&v.scalar_mul(*c)).unwrap();
        }
        assert_eq!(acc, target);

        let outside = vec_of(s32, &[1, 0]);
        // span{(1,1),(2,2),(0,1)} is everything, so solve a rank-1 case too.
        assert!(express_in_terms(s32, &vs, &outside).unwrap().is_some());
        let vs1 = vec![vec_of(s32, &[1, 1])];
        assert!(express_in_terms(s32, &vs1, &outside).unwrap().is_none());
    }

    proptest! {
        #[test]
        fn group_laws(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let specs = [spec(2, 3), spec(3, 2), spec(5, 2), spec(7, 1)];
            let s = specs[rng.random_range(0..specs.len())];
            let a = random_vector(&mut rng, s);
            let b = random_vector(&mut rng, s);
            let c = random_vector(&mut rng, s);
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.add(&a.neg()).unwrap(), GroupVector::zero(s));
        }

        #[test]
        fn certificate_remultiplies(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = spec(3, 3);
            let n = rng.random_range(0..=5usize);
            let vs: Vec<_> = (0..n).map(|_| random_vector(&mut rng, s)).collect();
            let basis = span_of(s, &vs).unwrap();
            let probe = random_vector(&mut rng, s);
            if let Some(coeffs) = basis.coefficients(&probe).unwrap() {
                let mut acc = GroupVector::zero(s);
                for (c, row) in coeffs.iter().zip(basis.vectors()) {
                    acc = acc.add(&row.scalar_mul(*c)).unwrap();
                }
                prop_assert_eq!(acc, probe);
            }
        }

        #[test]
        fn span_membership_idempotent(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = spec(2, 4);
            let vs: Vec<_> = (0..rng.random_range(0..=5usize)).map(|_| random_vector(&mut rng, s)).collect();
            let basis = span_of(s, &vs).unwrap();
            let probe = random_vector(&mut rng, s);
            let first = basis.contains(&probe).unwrap();
            prop_assert_eq!(basis.contains(&probe).unwrap(), first);
            for v in vs {
                prop_assert!(basis.contains(&v).unwrap());
            }
        }
    }
}
