//! Matroids exposed purely through independence oracles.
//!
//! Three kinds cover everything the matching engine needs: linear matroids
//! induced by hyperedge label vectors, free matroids (the rainbow-matching
//! setting), and m-fold direct sums used to lift one matroid into m disjoint
//! copies. Oracle queries are pure, so the matching code works uniformly
//! against any of them.

use std::collections::BTreeSet;

use crate::gf::{span_of, FieldSpec, GroupVector, SpanBasis};
use crate::{Error, Result};

/// Opaque identifier of a ground-set element. Ids are dense integers assigned
/// in construction order; direct sums assign them summand-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub u32);

#[derive(Debug, Clone)]
enum Kind {
    Linear {
        spec: FieldSpec,
        vectors: Vec<GroupVector>,
    },
    Free {
        ground: usize,
    },
    DirectSum {
        summands: Vec<Matroid>,
        /// `offsets[i]` is the first id of summand `i`; a final entry holds
        /// the total ground size.
        offsets: Vec<usize>,
    },
}

/// An independence-oracle matroid.
#[derive(Debug, Clone)]
pub struct Matroid {
    kind: Kind,
    rank: usize,
}

impl Matroid {
    /// Linear matroid over `F_p`: element `i` carries `vectors[i]`, and a
    /// subset is independent iff its vectors are linearly independent.
    /// Parallel elements (equal vectors under distinct ids) are dependent
    /// pairs; zero vectors are loops.
    pub fn linear(spec: FieldSpec, vectors: Vec<GroupVector>) -> Result<Self> {
        let rank = span_of(spec, &vectors)?.dimension();
        Ok(Matroid {
            kind: Kind::Linear { spec, vectors },
            rank,
        })
    }

    /// Free matroid: every subset of the ground set is independent.
    pub fn free(ground: usize) -> Self {
        Matroid {
            kind: Kind::Free { ground },
            rank: ground,
        }
    }

    /// Direct sum: a set is independent iff each per-summand slice is
    /// independent in its summand. Fresh ids are assigned summand-major.
    pub fn direct_sum(summands: Vec<Matroid>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyInput("direct_sum of no matroids"));
        }
        let mut offsets = Vec::with_capacity(summands.len() + 1);
        let mut total = 0;
        for m in &summands {
            offsets.push(total);
            total += m.ground_size();
        }
        offsets.push(total);
        let rank = summands.iter().map(|m| m.rank()).sum();
        Ok(Matroid {
            kind: Kind::DirectSum { summands, offsets },
            rank,
        })
    }

    pub fn ground_size(&self) -> usize {
        match &self.kind {
            Kind::Linear { vectors, .. } => vectors.len(),
            Kind::Free { ground } => *ground,
            Kind::DirectSum { offsets, .. } => *offsets.last().unwrap(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.ground_size() as u32).map(ElementId)
    }

    pub fn contains(&self, e: ElementId) -> bool {
        (e.0 as usize) < self.ground_size()
    }

    /// Rank of the full ground set.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The vector carried by a linear-matroid element.
    pub fn vector(&self, e: ElementId) -> Option<&GroupVector> {
        match &self.kind {
            Kind::Linear { vectors, .. } => vectors.get(e.0 as usize),
            _ => None,
        }
    }

    /// For a direct sum: which summand an element belongs to, and its id
    /// inside that summand.
    pub fn summand_of(&self, e: ElementId) -> Option<(usize, ElementId)> {
        match &self.kind {
            Kind::DirectSum { offsets, .. } if self.contains(e) => {
                let idx = e.0 as usize;
                let i = offsets.partition_point(|&o| o <= idx) - 1;
                Some((i, ElementId((idx - offsets[i]) as u32)))
            }
            _ => None,
        }
    }

    pub fn summands(&self) -> &[Matroid] {
        match &self.kind {
            Kind::DirectSum { summands, .. } => summands,
            _ => std::slice::from_ref(self),
        }
    }

    fn check_elements(&self, set: &BTreeSet<ElementId>) -> Result<()> {
        for &e in set {
            if !self.contains(e) {
                return Err(Error::ForeignElement(e));
            }
        }
        Ok(())
    }

    /// Oracle answer for a subset of the ground set.
    pub fn is_independent(&self, set: &BTreeSet<ElementId>) -> Result<bool> {
        self.check_elements(set)?;
        Ok(self.rank_unchecked(set) == set.len())
    }

    /// Size of a maximum independent subset of `set`.
    pub fn rank_of(&self, set: &BTreeSet<ElementId>) -> Result<usize> {
        self.check_elements(set)?;
        Ok(self.rank_unchecked(set))
    }

    fn rank_unchecked(&self, set: &BTreeSet<ElementId>) -> usize {
        match &self.kind {
            Kind::Linear { spec, vectors } => {
                let mut basis = SpanBasis::empty(*spec);
                for &e in set {
                    basis.insert(&vectors[e.0 as usize]).expect("same spec");
                }
                basis.dimension()
            }
            Kind::Free { .. } => set.len(),
            Kind::DirectSum { summands, offsets } => {
                let mut slices: Vec<BTreeSet<ElementId>> = vec![BTreeSet::new(); summands.len()];
                for &e in set {
                    let idx = e.0 as usize;
                    let i = offsets.partition_point(|&o| o <= idx) - 1;
                    slices[i].insert(ElementId((idx - offsets[i]) as u32));
                }
                summands
                    .iter()
                    .zip(&slices)
                    .map(|(m, s)| m.rank_unchecked(s))
                    .sum()
            }
        }
    }

    /// True iff `x` lies in the span of `set`, i.e. adding it does not raise
    /// the rank. Elements of `set` are always in its span.
    pub fn in_span(&self, x: ElementId, set: &BTreeSet<ElementId>) -> Result<bool> {
        if !self.contains(x) {
            return Err(Error::ForeignElement(x));
        }
        self.check_elements(set)?;
        if set.contains(&x) {
            return Ok(true);
        }
        let base = self.rank_unchecked(set);
        let mut with = set.clone();
        with.insert(x);
        Ok(self.rank_unchecked(&with) == base)
    }

    /// The span closure of `set`: every ground element in its span.
    pub fn closure(&self, set: &BTreeSet<ElementId>) -> Result<BTreeSet<ElementId>> {
        self.check_elements(set)?;
        let mut out = BTreeSet::new();
        for x in self.elements() {
            if self.in_span(x, set)? {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// True iff `a` and `b` span the same flat.
    pub fn same_span(&self, a: &BTreeSet<ElementId>, b: &BTreeSet<ElementId>) -> Result<bool> {
        let ra = self.rank_of(a)?;
        let rb = self.rank_of(b)?;
        if ra != rb {
            return Ok(false);
        }
        let union: BTreeSet<ElementId> = a.union(b).copied().collect();
        Ok(self.rank_unchecked(&union) == ra)
    }
}
