//! Zero-sum directed cycles in labelled complete digraphs.
//!
//! The pipeline builds the hypergraph of ordered vertex triples labelled by
//! `w(x,y) + w(y,z) - w(x,z)`, extracts disjoint basis matchings from it,
//! walks the matched triples along a base cycle, and then chooses a subset of
//! detours through the middle vertices so the total label sum telescopes to
//! zero. Every returned witness is re-verified from scratch.

use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::gf::{self, FieldSpec, GroupVector, SpanBasis};
use crate::hypergraph::{HyperedgeId, LabelledHypergraph, Matching, Vertex};
use crate::matching::{disjoint_basis_matchings, Mode};
use crate::matroid::{ElementId, Matroid};
use crate::{Error, Result};

/// Vertex cap for [`bf_zero_sum_cycle`].
pub const BF_VERTEX_CAP: usize = 8;

/// A complete digraph with arcs labelled by elements of `Z_p^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledDigraph {
    n: usize,
    spec: FieldSpec,
    /// Row-major `n * n` table; the diagonal holds unused zero placeholders.
    weights: Vec<GroupVector>,
}

impl LabelledDigraph {
    /// Builds the labelling from a function on ordered pairs.
    pub fn from_fn(
        n: usize,
        spec: FieldSpec,
        mut w: impl FnMut(usize, usize) -> GroupVector,
    ) -> Result<Self> {
        let mut weights = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    weights.push(GroupVector::zero(spec));
                } else {
                    let label = w(u, v);
                    if label.spec() != spec {
                        return Err(Error::SpecMismatch(spec, label.spec()));
                    }
                    weights.push(label);
                }
            }
        }
        Ok(LabelledDigraph { n, spec, weights })
    }

    /// Builds the labelling from an explicit arc list, which must cover every
    /// ordered pair exactly once.
    pub fn from_arcs(n: usize, spec: FieldSpec, arcs: Vec<(usize, usize, GroupVector)>) -> Result<Self> {
        let mut table: Vec<Option<GroupVector>> = vec![None; n * n];
        for (u, v, label) in arcs {
            if u >= n || v >= n || u == v {
                return Err(Error::Malformed(format!("invalid arc ({u}, {v})")));
            }
            if label.spec() != spec {
                return Err(Error::SpecMismatch(spec, label.spec()));
            }
            if table[u * n + v].replace(label).is_some() {
                return Err(Error::Malformed(format!("duplicate arc ({u}, {v})")));
            }
        }
        let mut weights = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                match table[u * n + v].take() {
                    Some(label) => weights.push(label),
                    None if u == v => weights.push(GroupVector::zero(spec)),
                    None => return Err(Error::Malformed(format!("missing arc ({u}, {v})"))),
                }
            }
        }
        Ok(LabelledDigraph { n, spec, weights })
    }

    pub fn zero(n: usize, spec: FieldSpec) -> Self {
        LabelledDigraph {
            n,
            spec,
            weights: vec![GroupVector::zero(spec); n * n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// The label of the arc `(u, v)`, `u != v`.
    pub fn weight(&self, u: usize, v: usize) -> &GroupVector {
        assert!(u < self.n && v < self.n && u != v, "invalid arc ({u}, {v})");
        &self.weights[u * self.n + v]
    }

    /// Ordered pairs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, &GroupVector)> {
        (0..self.n)
            .flat_map(move |u| (0..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .map(move |(u, v)| (u, v, &self.weights[u * self.n + v]))
    }
}

/// A directed cycle with zero label sum. Constructing one recomputes and
/// checks the sum, so a witness in hand is always verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    vertices: Vec<usize>,
    sum: GroupVector,
}

impl CycleWitness {
    /// Validates the vertex sequence (length at least two, distinct, in
    /// range) and accepts it only when the label sum is zero.
    pub fn new(dg: &LabelledDigraph, vertices: Vec<usize>) -> Result<Self> {
        let sum = cycle_sum(dg, &vertices)?;
        if !sum.is_zero() {
            return Err(Error::Precondition(format!(
                "cycle sum {sum} is not zero"
            )));
        }
        Ok(CycleWitness { vertices, sum })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> &GroupVector {
        &self.sum
    }
}

/// Sum of the arc labels around a cyclic vertex sequence.
fn cycle_sum(dg: &LabelledDigraph, vertices: &[usize]) -> Result<GroupVector> {
    if vertices.len() < 2 {
        return Err(Error::Malformed("a cycle needs at least two vertices".into()));
    }
    let mut seen = BTreeSet::new();
    for &v in vertices {
        if v >= dg.n {
            return Err(Error::Malformed(format!("vertex {v} out of range")));
        }
        if !seen.insert(v) {
            return Err(Error::Malformed(format!("vertex {v} repeats in the cycle")));
        }
    }
    let mut sum = GroupVector::zero(dg.spec);
    for i in 0..vertices.len() {
        let u = vertices[i];
        let v = vertices[(i + 1) % vertices.len()];
        sum = sum.add(dg.weight(u, v))?;
    }
    Ok(sum)
}

/// True iff the sequence is a well-formed directed cycle with zero label sum.
pub fn verify_cycle(dg: &LabelledDigraph, vertices: &[usize]) -> Result<bool> {
    Ok(cycle_sum(dg, vertices)?.is_zero())
}

/// The hypergraph of ordered vertex triples, its linear matroid, and the
/// ordered triple behind every hyperedge id.
#[derive(Debug, Clone)]
pub struct TripleHypergraph {
    pub hypergraph: LabelledHypergraph,
    /// `triples[edge_id]` is the ordered triple `(x, y, z)`.
    pub triples: Vec<(usize, usize, usize)>,
}

/// One hyperedge per ordered triple `(x, y, z)` of distinct vertices, on the
/// vertex set `{x, y, z}`, labelled by `w(x,y) + w(y,z) - w(x,z)`; every
/// 3-subset of vertices therefore appears in exactly six hyperedges.
pub fn triple_hypergraph(dg: &LabelledDigraph) -> Result<TripleHypergraph> {
    if dg.n < 3 {
        return Err(Error::Precondition(format!(
            "triple hypergraph needs at least 3 vertices, got {}",
            dg.n
        )));
    }
    let mut triples = Vec::new();
    let mut vectors = Vec::new();
    for x in 0..dg.n {
        for y in 0..dg.n {
            for z in 0..dg.n {
                if x == y || y == z || x == z {
                    continue;
                }
                triples.push((x, y, z));
                vectors.push(triple_label(dg, x, y, z)?);
            }
        }
    }
    let matroid = Arc::new(Matroid::linear(dg.spec, vectors)?);
    let edges = triples
        .iter()
        .enumerate()
        .map(|(i, &(x, y, z))| {
            (
                vec![Vertex(x as u32), Vertex(y as u32), Vertex(z as u32)],
                ElementId(i as u32),
            )
        })
        .collect();
    let hypergraph = LabelledHypergraph::new(
        (0..dg.n as u32).map(Vertex).collect(),
        edges,
        3,
        matroid,
    )?;
    Ok(TripleHypergraph { hypergraph, triples })
}

fn triple_label(dg: &LabelledDigraph, x: usize, y: usize, z: usize) -> Result<GroupVector> {
    dg.weight(x, y).add(dg.weight(y, z))?.sub(dg.weight(x, z))
}

/// The base cycle through matched triples: `x_1, z_1, ..., x_t, z_t` back to
/// `x_1`, together with its label sum.
#[derive(Debug, Clone)]
pub struct BaseCycle {
    pub triples: Vec<(usize, usize, usize)>,
    /// Cycle vertices in order.
    pub cycle: Vec<usize>,
    /// Sum of arc labels along the cycle.
    pub a: GroupVector,
}

/// Builds the base cycle of a nonempty list of pairwise vertex-disjoint
/// matched triples, taken in list order. The label sum is recomputed through
/// the telescoping identity anchored at the first middle vertex; a mismatch
/// indicates a bug upstream.
pub fn base_cycle(dg: &LabelledDigraph, triples: &[(usize, usize, usize)]) -> Result<BaseCycle> {
    if triples.is_empty() {
        return Err(Error::EmptyInput("base cycle of no triples"));
    }
    let mut seen = BTreeSet::new();
    for &(x, y, z) in triples {
        for v in [x, y, z] {
            if v >= dg.n {
                return Err(Error::Malformed(format!("vertex {v} out of range")));
            }
            if !seen.insert(v) {
                return Err(Error::Malformed("triples are not vertex-disjoint".into()));
            }
        }
    }
    let mut cycle = Vec::with_capacity(2 * triples.len());
    for &(x, _, z) in triples {
        cycle.push(x);
        cycle.push(z);
    }
    let mut a = GroupVector::zero(dg.spec);
    for i in 0..cycle.len() {
        a = a.add(dg.weight(cycle[i], cycle[(i + 1) % cycle.len()]))?;
    }
    // Telescoping: anchored at u = y_1, the sum of the triple labels
    // gamma(u, v_i, v_{i+1}) around the cycle equals a.
    let anchor = triples[0].1;
    let mut telescoped = GroupVector::zero(dg.spec);
    for i in 0..cycle.len() {
        let (v1, v2) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        telescoped = telescoped.add(&triple_label(dg, anchor, v1, v2)?)?;
    }
    if telescoped != a {
        return Err(Error::Internal(
            "telescoped base-cycle sum disagrees with the arc sum".into(),
        ));
    }
    Ok(BaseCycle {
        triples: triples.to_vec(),
        cycle,
        a,
    })
}

/// Chooses a subset of detour indices whose labels sum to `target`.
///
/// For `p = 2` a linear solve suffices because coefficients over `F_2` are a
/// subset indicator; for general `p` the exact subset-sum table provides the
/// reconstruction. Indices come back ascending.
pub fn select_detours(
    spec: FieldSpec,
    labels: &[GroupVector],
    target: &GroupVector,
) -> Result<Vec<usize>> {
    if spec.modulus() == 2 {
        if let Some(coeffs) = gf::express_in_terms(spec, labels, target)? {
            return Ok(coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == 1)
                .map(|(i, _)| i)
                .collect());
        }
        return Err(Error::UnreachableTarget);
    }
    let reach = gf::reachable_sums(spec, labels)?;
    reach.reconstruct(target).ok_or(Error::UnreachableTarget)
}

/// Outcome of a successful pipeline run.
#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub witness: CycleWitness,
    /// Number of basis matchings used (0 for the trivial two-vertex check).
    pub m_used: usize,
    /// Digraph vertices deleted on the way.
    pub deleted: BTreeSet<usize>,
    /// True iff every maximality certification ran exhaustively.
    pub certified: bool,
}

/// First matching count to try: 1 for `p = 2` (one linear basis is already
/// an additive basis in characteristic two), otherwise the logarithmic
/// estimate, clamped to the vertex budget `5 d m <= n` when possible.
fn initial_matching_count(spec: FieldSpec, n: usize) -> usize {
    let p = spec.modulus() as usize;
    let d = spec.dimension();
    let start = if p == 2 {
        1
    } else {
        let log = usize::BITS as usize - (d.max(2) - 1).leading_zeros() as usize;
        ((p - 1) * log + (p - 2)).max(p - 1).max(1)
    };
    let schedule_cap = (n / (5 * d)).max(1);
    start.min(schedule_cap)
}

/// Finds a verified zero-sum directed cycle.
///
/// For `n = 2` the single digon is checked directly. Otherwise the pipeline
/// runs: build the triple hypergraph; extract `m` disjoint basis matchings;
/// if the surviving span is trivial return a digon outside the deleted set;
/// otherwise verify that the matched labels form an additive basis of the
/// span, walk the base cycle, and splice in the detour subset summing to the
/// negated base label. When the additive-basis check fails (possible for
/// `p >= 3`), `m` escalates while `5 d m <= n` allows; `m_override` disables
/// both the schedule and the escalation.
pub fn find_zero_sum_cycle(
    dg: &LabelledDigraph,
    m_override: Option<usize>,
    mode: Mode,
) -> Result<PipelineOutcome> {
    if dg.n < 2 {
        return Err(Error::Precondition(
            "a digraph needs at least two vertices to contain a cycle".into(),
        ));
    }
    if dg.n == 2 {
        if dg.weight(0, 1).add(dg.weight(1, 0))?.is_zero() {
            return Ok(PipelineOutcome {
                witness: CycleWitness::new(dg, vec![0, 1])?,
                m_used: 0,
                deleted: BTreeSet::new(),
                certified: true,
            });
        }
        return Err(Error::NoCycleFound { m_attempted: 0 });
    }
    let th = triple_hypergraph(dg)?;
    let spec = dg.spec;
    let d = spec.dimension();

    // All triple labels zero: any digon among three surviving vertices works.
    if th.hypergraph.matroid().rank() == 0 {
        return digon_outcome(dg, &BTreeSet::new(), 0, true);
    }

    let mut m = m_override.unwrap_or_else(|| initial_matching_count(spec, dg.n));
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    loop {
        match attempt_with(dg, &th, m, mode) {
            Ok(outcome) => return Ok(outcome),
            Err(Error::UnreachableTarget) => {
                let next = m + 1;
                if m_override.is_none() && 5 * d * next <= dg.n {
                    m = next;
                } else {
                    return Err(Error::NoCycleFound { m_attempted: m });
                }
            }
            Err(err) => return Err(err),
        }
    }
}

/// One pipeline attempt at a fixed matching count. An additive-basis failure
/// or an unreachable target surfaces as [`Error::UnreachableTarget`] so the
/// caller can escalate.
fn attempt_with(
    dg: &LabelledDigraph,
    th: &TripleHypergraph,
    m: usize,
    mode: Mode,
) -> Result<PipelineOutcome> {
    let spec = dg.spec;
    let res = disjoint_basis_matchings(&th.hypergraph, m, mode)?;
    let deleted: BTreeSet<usize> = res.u.iter().map(|v| v.0 as usize).collect();
    let survivor = th.hypergraph.delete_vertices(&res.u)?;
    let matroid = th.hypergraph.matroid();
    let mut alive_vectors = Vec::with_capacity(survivor.edge_count());
    for e in survivor.edges() {
        alive_vectors.push(
            matroid
                .vector(survivor.label(e)?)
                .expect("triple matroid is linear")
                .clone(),
        );
    }
    let span = gf::span_of(spec, &alive_vectors)?;

    if span.dimension() == 0 {
        if dg.n - deleted.len() < 3 {
            return Err(Error::UnreachableTarget);
        }
        return digon_outcome(dg, &deleted, m, res.certified);
    }

    // Union of the matchings in ascending hyperedge-id order.
    let union: Matching = res
        .matchings
        .iter()
        .fold(Matching::empty(), |acc, mi| acc.union(mi));
    let edge_ids: Vec<HyperedgeId> = union.edges().iter().copied().collect();
    let mut labels = Vec::with_capacity(edge_ids.len());
    let mut matched_triples = Vec::with_capacity(edge_ids.len());
    for &e in &edge_ids {
        labels.push(
            matroid
                .vector(th.hypergraph.label(e)?)
                .expect("triple matroid is linear")
                .clone(),
        );
        matched_triples.push(th.triples[e.0 as usize]);
    }

    if !gf::is_additive_basis(spec, &labels, &span)? {
        return Err(Error::UnreachableTarget);
    }

    let bc = base_cycle(dg, &matched_triples)?;
    if !span.contains(&bc.a)? {
        return Err(Error::Internal(
            "base-cycle sum escaped the surviving span".into(),
        ));
    }
    let detours = select_detours(spec, &labels, &bc.a.neg())?;

    // Splice: replace (x_i, z_i) by (x_i, y_i), (y_i, z_i) for chosen i.
    let chosen: BTreeSet<usize> = detours.iter().copied().collect();
    let mut vertices = Vec::with_capacity(2 * matched_triples.len() + chosen.len());
    for (i, &(x, y, z)) in matched_triples.iter().enumerate() {
        vertices.push(x);
        if chosen.contains(&i) {
            vertices.push(y);
        }
        vertices.push(z);
    }

    // Detour soundness: the splice shifts the base sum by the chosen labels.
    let detour_sum = gf::sum_of(spec, detours.iter().map(|&i| &labels[i]))?;
    let expected = bc.a.add(&detour_sum)?;
    let actual = cycle_sum(dg, &vertices)?;
    if actual != expected || !actual.is_zero() {
        return Err(Error::Internal(
            "spliced cycle sum does not match the selected detours".into(),
        ));
    }

    Ok(PipelineOutcome {
        witness: CycleWitness::new(dg, vertices)?,
        m_used: m,
        deleted,
        certified: res.certified,
    })
}

/// Zero-sum digon on the two lowest-id vertices outside the deleted set;
/// valid whenever the surviving triple labels all vanish and at least three
/// vertices survive.
fn digon_outcome(
    dg: &LabelledDigraph,
    deleted: &BTreeSet<usize>,
    m_used: usize,
    certified: bool,
) -> Result<PipelineOutcome> {
    let outside: Vec<usize> = (0..dg.n).filter(|v| !deleted.contains(v)).collect();
    if outside.len() < 3 {
        return Err(Error::Internal(
            "digon shortcut requires three surviving vertices".into(),
        ));
    }
    let (y, z) = (outside[0], outside[1]);
    if !dg.weight(y, z).add(dg.weight(z, y))?.is_zero() {
        return Err(Error::Internal(
            "trivial surviving span but the digon sum is nonzero".into(),
        ));
    }
    Ok(PipelineOutcome {
        witness: CycleWitness::new(dg, vec![y, z])?,
        m_used,
        deleted: deleted.clone(),
        certified,
    })
}

/// Exhaustive oracle: enumerate every directed cycle (each vertex subset in
/// ascending order, rotations canonicalized by starting at the smallest
/// vertex) and return the first zero-sum one, or `None`. Capped at
/// [`BF_VERTEX_CAP`] vertices.
pub fn bf_zero_sum_cycle(dg: &LabelledDigraph) -> Result<Option<CycleWitness>> {
    if dg.n > BF_VERTEX_CAP {
        return Err(Error::Budget(format!(
            "cycle enumeration capped at {BF_VERTEX_CAP} vertices, got {}",
            dg.n
        )));
    }
    for len in 2..=dg.n {
        for subset in (0..dg.n).combinations(len) {
            let first = subset[0];
            let rest = &subset[1..];
            for perm in rest.iter().copied().permutations(rest.len()) {
                let mut vertices = Vec::with_capacity(len);
                vertices.push(first);
                vertices.extend(perm);
                if cycle_sum(dg, &vertices)?.is_zero() {
                    return Ok(Some(CycleWitness::new(dg, vertices)?));
                }
            }
        }
    }
    Ok(None)
}

/// The block construction on `(p-1) d` vertices with no zero-sum cycle:
/// `d` blocks of `p-1` vertices, every arc labelled by the standard basis
/// vector of its head's block. Around any cycle each block contributes its
/// member count, which stays strictly between 0 and `p` in some coordinate.
pub fn lower_bound_witness(spec: FieldSpec) -> Result<LabelledDigraph> {
    let block_size = spec.modulus() as usize - 1;
    let n = block_size * spec.dimension();
    LabelledDigraph::from_fn(n, spec, |_, v| GroupVector::unit(spec, v / block_size))
}

/// Result of an `f(p, d)` probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeResult {
    /// Smallest number of linear bases whose multiset union always passed
    /// the additive-basis check.
    pub value: usize,
    /// True iff all base tuples were enumerated exhaustively.
    pub exact: bool,
}

/// Basis-set enumeration cap for the exhaustive probe mode.
pub const PROBE_BASIS_CAP: usize = 100;

/// Absolute cap on the probed value, far above any plausible answer.
fn probe_value_cap(spec: FieldSpec) -> usize {
    (spec.modulus() as usize - 1) * spec.dimension() + spec.modulus() as usize
}

/// Probes the least `m` such that every tested union of `m` linear bases of
/// `Z_p^d` is an additive basis. Exhaustive (over unordered base multisets)
/// when the group has at most 81 elements and at most [`PROBE_BASIS_CAP`]
/// bases; otherwise a seeded sample of `trials` tuples per candidate `m`.
pub fn probe_f(spec: FieldSpec, trials: usize, seed: u64) -> Result<ProbeResult> {
    let order = spec
        .group_order()
        .ok_or_else(|| Error::Budget("group order overflow".into()))?;
    let full_span = gf::span_of(
        spec,
        &(0..spec.dimension())
            .map(|i| GroupVector::unit(spec, i))
            .collect::<Vec<_>>(),
    )?;
    let bases = if order <= 81 {
        enumerate_bases(spec, PROBE_BASIS_CAP)
    } else {
        None
    };
    let cap = probe_value_cap(spec);
    match bases {
        Some(bases) => {
            for m in 1..=cap {
                let mut all_pass = true;
                for combo in (0..bases.len()).combinations_with_replacement(m) {
                    let union: Vec<GroupVector> = combo
                        .iter()
                        .flat_map(|&i| bases[i].iter().cloned())
                        .collect();
                    if !gf::is_additive_basis(spec, &union, &full_span)? {
                        all_pass = false;
                        break;
                    }
                }
                if all_pass {
                    return Ok(ProbeResult { value: m, exact: true });
                }
            }
            Err(Error::Budget(format!("probe exceeded the cap of {cap}")))
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for m in 1..=cap {
                let mut all_pass = true;
                for _ in 0..trials {
                    let union: Vec<GroupVector> = (0..m)
                        .flat_map(|_| random_basis(&mut rng, spec))
                        .collect();
                    if !gf::is_additive_basis(spec, &union, &full_span)? {
                        all_pass = false;
                        break;
                    }
                }
                if all_pass {
                    return Ok(ProbeResult { value: m, exact: false });
                }
            }
            Err(Error::Budget(format!("probe exceeded the cap of {cap}")))
        }
    }
}

/// All bases of `Z_p^d` as sorted vector sets, or `None` once the count
/// passes `cap`.
fn enumerate_bases(spec: FieldSpec, cap: usize) -> Option<Vec<Vec<GroupVector>>> {
    let order = spec.group_order()? as usize;
    let all: Vec<GroupVector> = {
        // Decode indices in base p, least significant coordinate first.
        let p = spec.modulus();
        (0..order)
            .map(|mut i| {
                let coords = (0..spec.dimension())
                    .map(|_| {
                        let c = i as u64 % p;
                        i /= p as usize;
                        c
                    })
                    .collect();
                GroupVector::new(spec, coords).expect("valid coords")
            })
            .collect()
    };
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(
        all: &[GroupVector],
        spec: FieldSpec,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<GroupVector>>,
        cap: usize,
    ) -> bool {
        if stack.len() == spec.dimension() {
            if out.len() == cap {
                return false;
            }
            out.push(stack.iter().map(|&i| all[i].clone()).collect());
            return true;
        }
        let start = stack.last().map_or(0, |&i| i + 1);
        for i in start..all.len() {
            let chosen: Vec<GroupVector> = stack
                .iter()
                .map(|&j| all[j].clone())
                .chain(std::iter::once(all[i].clone()))
                .collect();
            let rank = gf::span_of(spec, &chosen).expect("same spec").dimension();
            if rank != chosen.len() {
                continue;
            }
            stack.push(i);
            let ok = go(all, spec, stack, out, cap);
            stack.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if go(&all, spec, &mut stack, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

/// A uniformly seeded random basis, by rejection.
fn random_basis(rng: &mut ChaCha8Rng, spec: FieldSpec) -> Vec<GroupVector> {
    let mut basis = SpanBasis::empty(spec);
    let mut out = Vec::new();
    while out.len() < spec.dimension() {
        let v = GroupVector::new(
            spec,
            (0..spec.dimension())
                .map(|_| rng.random_range(0..spec.modulus()))
                .collect(),
        )
        .expect("valid coords");
        if basis.insert(&v).expect("same spec") {
            out.push(v);
        }
    }
    out
}
