//! Independent matchings in matroid-labelled hypergraphs.
//!
//! An independent matching is a set of pairwise vertex-disjoint hyperedges
//! with pairwise distinct labels whose label set is independent in the
//! matroid. A matching is *maximal* when no matching with the same label span
//! fails to be inclusion-wise maximal; that quantifies over a whole span
//! class, so exact certification is exponential and this module offers two
//! modes:
//!
//! * [`Mode::Exact`] — exhaustive certification with a hard budget on the
//!   number of matchings examined; budget exhaustion is an error for the
//!   standalone operations.
//! * [`Mode::Heuristic`] — greedy extension plus a label-preserving swap
//!   loop; postconditions that matter downstream (basis-of-span, deletion
//!   budgets) still hold and are verified, but maximality is uncertified.
//!
//! On top sit the exchange/peel step and the spanning recursion that either
//! produces a full-rank independent matching or a deletion set `U` with
//! `|U| <= (2r-1)(k-1)` and a matching whose labels span everything that
//! survives, plus the m-fold direct-sum lift producing m disjoint basis
//! matchings.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::hypergraph::{HyperedgeId, LabelledHypergraph, Matching, Vertex};
use crate::matroid::{ElementId, Matroid};
use crate::{Error, Result};

/// Cap on matchings examined per exact-mode operation.
pub const ENUMERATION_BUDGET: u64 = 1_000_000;

/// Hard cap on hyperedges for [`bf_best_independent_matching`].
pub const BF_EDGE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Heuristic,
}

/// Result of a maximal-matching search.
#[derive(Debug, Clone)]
pub struct MaximalMatching {
    pub matching: Matching,
    /// True iff maximality was certified exhaustively.
    pub certified: bool,
}

/// Outcome of one peel: a connected set `X` of `k+1` hyperedges whose removal
/// leaves a smaller maximal matching behind.
#[derive(Debug, Clone)]
pub struct PeelResult {
    /// The connected edge set, ascending ids; contains the witness edge.
    pub x: Vec<HyperedgeId>,
    pub k: usize,
    /// Matching of size `l - k`, valid in `H - V(X)`.
    pub residual: Matching,
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanningKind {
    FullRank,
    Deficient,
}

/// Either a full-rank independent matching (`u` empty), or a deletion set
/// with a matching whose labels form a basis of the span of all surviving
/// edge labels.
#[derive(Debug, Clone)]
pub struct SpanningMatchingResult {
    pub u: BTreeSet<Vertex>,
    pub matching: Matching,
    /// Vertex budget consumed: `|u| <= (2r-1) * a`.
    pub a: usize,
    pub kind: SpanningKind,
    pub certified: bool,
}

/// m pairwise vertex-disjoint matchings, each a basis of the span of the
/// labels surviving in `H - U`.
#[derive(Debug, Clone)]
pub struct BasisMatchingsResult {
    pub u: BTreeSet<Vertex>,
    pub matchings: Vec<Matching>,
    pub certified: bool,
}

struct Budget {
    remaining: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { remaining: limit }
    }

    fn charge(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::Budget(format!(
                "examined more than {ENUMERATION_BUDGET} matchings"
            )));
        }
        self.remaining -= 1;
        Ok(())
    }
}

fn label_set(h: &LabelledHypergraph, m: &Matching) -> Result<BTreeSet<ElementId>> {
    m.edges().iter().map(|&e| h.label(e)).collect()
}

fn matched_vertices(h: &LabelledHypergraph, m: &Matching) -> Result<BTreeSet<Vertex>> {
    let edges: Vec<HyperedgeId> = m.edges().iter().copied().collect();
    h.covered_vertices(&edges)
}

/// Full validity: matching invariants plus label independence.
pub fn is_independent_matching(h: &LabelledHypergraph, m: &Matching) -> Result<bool> {
    if !h.is_valid_matching(m)? {
        return Ok(false);
    }
    h.matroid().is_independent(&label_set(h, m)?)
}

fn require_independent_matching(h: &LabelledHypergraph, m: &Matching) -> Result<()> {
    if !is_independent_matching(h, m)? {
        return Err(Error::Precondition(
            "not an independent matching in this hypergraph".into(),
        ));
    }
    Ok(())
}

/// The lowest-id hyperedge that extends `m` to a larger independent
/// matching, or `None` when `m` is inclusion-wise maximal.
pub fn extend_matching(h: &LabelledHypergraph, m: &Matching) -> Result<Option<HyperedgeId>> {
    require_independent_matching(h, m)?;
    extend_unchecked(h, m)
}

fn extend_unchecked(h: &LabelledHypergraph, m: &Matching) -> Result<Option<HyperedgeId>> {
    let used = matched_vertices(h, m)?;
    let labels = label_set(h, m)?;
    let matroid = h.matroid();
    for e in h.edges() {
        if m.contains(e) {
            continue;
        }
        if h.edge_vertices(e)?.iter().any(|v| used.contains(v)) {
            continue;
        }
        let lab = h.label(e)?;
        if labels.contains(&lab) {
            continue;
        }
        let mut with = labels.clone();
        with.insert(lab);
        if matroid.is_independent(&with)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

fn greedy_extend(h: &LabelledHypergraph, mut m: Matching) -> Result<Matching> {
    while let Some(e) = extend_unchecked(h, &m)? {
        m.insert(e);
    }
    Ok(m)
}

/// Lowest-id edge whose label lies outside the span of the matching labels.
pub fn lowest_witness(h: &LabelledHypergraph, m: &Matching) -> Result<Option<HyperedgeId>> {
    let labels = label_set(h, m)?;
    let matroid = h.matroid();
    for e in h.edges() {
        if !matroid.in_span(h.label(e)?, &labels)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Depth-first enumeration of independent matchings in ascending id order
/// (so matchings appear in lexicographic order of their id sets). When
/// `allowed_labels` is given, only edges labelled inside it are used. Every
/// visited matching, including the empty one, is charged to the budget.
fn for_each_independent_matching<F>(
    h: &LabelledHypergraph,
    allowed_labels: Option<&BTreeSet<ElementId>>,
    budget: &mut Budget,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&Matching) -> Result<ControlFlow<()>>,
{
    struct Dfs<'a> {
        edges: Vec<(HyperedgeId, &'a [Vertex], ElementId)>,
        matroid: &'a Matroid,
    }

    impl<'a> Dfs<'a> {
        #[allow(clippy::too_many_arguments)]
        fn go<F>(
            &self,
            start: usize,
            current: &mut Matching,
            used: &mut BTreeSet<Vertex>,
            labels: &mut BTreeSet<ElementId>,
            budget: &mut Budget,
            visit: &mut F,
        ) -> Result<ControlFlow<()>>
        where
            F: FnMut(&Matching) -> Result<ControlFlow<()>>,
        {
            budget.charge()?;
            if visit(current)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            for pos in start..self.edges.len() {
                let (id, vs, lab) = self.edges[pos];
                if vs.iter().any(|v| used.contains(v)) || labels.contains(&lab) {
                    continue;
                }
                labels.insert(lab);
                if !self.matroid.is_independent(labels)? {
                    labels.remove(&lab);
                    continue;
                }
                current.insert(id);
                used.extend(vs.iter().copied());
                let flow = self.go(pos + 1, current, used, labels, budget, visit)?;
                current.remove(id);
                for v in vs {
                    used.remove(v);
                }
                labels.remove(&lab);
                if flow.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
            Ok(ControlFlow::Continue(()))
        }
    }

    let mut edges = Vec::with_capacity(h.edge_count());
    for e in h.edges() {
        let lab = h.label(e)?;
        if allowed_labels.is_none_or(|s| s.contains(&lab)) {
            edges.push((e, h.edge_vertices(e)?, lab));
        }
    }
    let dfs = Dfs {
        edges,
        matroid: h.matroid(),
    };
    let _ = dfs.go(
        0,
        &mut Matching::empty(),
        &mut BTreeSet::new(),
        &mut BTreeSet::new(),
        budget,
        visit,
    )?;
    Ok(())
}

/// True iff every matching spanning the same labels as `m` is inclusion-wise
/// maximal, verified by exhaustive enumeration of the span class.
fn class_all_inclusion_maximal(
    h: &LabelledHypergraph,
    m: &Matching,
    budget: &mut Budget,
) -> Result<bool> {
    let labels = label_set(h, m)?;
    let closure = h.matroid().closure(&labels)?;
    let size = m.len();
    let mut all_maximal = true;
    for_each_independent_matching(h, Some(&closure), budget, &mut |cand| {
        if cand.len() == size && extend_unchecked(h, cand)?.is_some() {
            all_maximal = false;
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(all_maximal)
}

/// Certified maximal matching: grow greedily, then repeat exhaustive
/// certification; any same-span matching that still extends yields a
/// strictly larger span to restart from, so this ends within rank steps.
fn exact_maximal(
    h: &LabelledHypergraph,
    seed: &Matching,
    budget: &mut Budget,
) -> Result<Matching> {
    let mut m = greedy_extend(h, seed.clone())?;
    loop {
        let labels = label_set(h, &m)?;
        let closure = h.matroid().closure(&labels)?;
        let size = m.len();
        let mut counterexample: Option<(Matching, HyperedgeId)> = None;
        for_each_independent_matching(h, Some(&closure), budget, &mut |cand| {
            if cand.len() == size {
                if let Some(ext) = extend_unchecked(h, cand)? {
                    counterexample = Some((cand.clone(), ext));
                    return Ok(ControlFlow::Break(()));
                }
            }
            Ok(ControlFlow::Continue(()))
        })?;
        match counterexample {
            None => return Ok(m),
            Some((cand, ext)) => {
                let mut grown = cand;
                grown.insert(ext);
                m = greedy_extend(h, grown)?;
            }
        }
    }
}

/// Label-preserving swap loop: repeatedly trade one edge meeting `e` for a
/// disjoint edge off `e` with the same span, until no swap applies. Each
/// accepted swap lowers `|e meet m|` by one; the result may reach zero
/// intersections, in which case the caller can extend by `e` itself.
fn swap_reduce(h: &LabelledHypergraph, m: &Matching, e: HyperedgeId) -> Result<Matching> {
    let matroid = h.matroid();
    let e_vs = h.edge_vertices(e)?.to_vec();
    let mut cur = m.clone();
    'outer: loop {
        let meet = h.meets(e, &cur)?;
        if meet.is_empty() {
            return Ok(cur);
        }
        let cur_labels = label_set(h, &cur)?;
        for &removed in &meet {
            let mut rest = cur.clone();
            rest.remove(removed);
            let rest_vs = matched_vertices(h, &rest)?;
            let rest_labels = label_set(h, &rest)?;
            for cand in h.edges() {
                if cur.contains(cand) || cand == e {
                    continue;
                }
                let cvs = h.edge_vertices(cand)?;
                if cvs.iter().any(|v| rest_vs.contains(v) || e_vs.contains(v)) {
                    continue;
                }
                let clab = h.label(cand)?;
                if rest_labels.contains(&clab) {
                    continue;
                }
                let mut swapped = rest_labels.clone();
                swapped.insert(clab);
                if !matroid.is_independent(&swapped)? || !matroid.same_span(&swapped, &cur_labels)? {
                    continue;
                }
                cur = rest;
                cur.insert(cand);
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

/// Heuristic maximality: greedy extension, then for each edge labelled
/// outside the current span try to swap the matching off it; a cleared
/// witness extends the matching and the sweep restarts.
fn heuristic_maximal(h: &LabelledHypergraph, seed: &Matching) -> Result<Matching> {
    let mut m = greedy_extend(h, seed.clone())?;
    let matroid = h.matroid();
    'outer: loop {
        let labels = label_set(h, &m)?;
        for e in h.edges() {
            if matroid.in_span(h.label(e)?, &labels)? {
                continue;
            }
            let reduced = swap_reduce(h, &m, e)?;
            if h.meets(e, &reduced)?.is_empty() {
                let mut grown = reduced;
                grown.insert(e);
                m = greedy_extend(h, grown)?;
                continue 'outer;
            }
        }
        return Ok(m);
    }
}

/// An inclusion-wise maximal independent matching; in exact mode it is
/// additionally certified maximal (no same-span matching extends), in
/// heuristic mode the flag is left unset.
pub fn find_maximal_independent_matching(
    h: &LabelledHypergraph,
    mode: Mode,
) -> Result<MaximalMatching> {
    match mode {
        Mode::Exact => {
            let mut budget = Budget::new(ENUMERATION_BUDGET);
            Ok(MaximalMatching {
                matching: exact_maximal(h, &Matching::empty(), &mut budget)?,
                certified: true,
            })
        }
        Mode::Heuristic => Ok(MaximalMatching {
            matching: heuristic_maximal(h, &Matching::empty())?,
            certified: false,
        }),
    }
}

/// One exchange: look for a same-span-as-residual matching in `H - V(X)`
/// that still extends, lift it back, and trade the freed edge for one
/// meeting `e`. Returns `None` at the step's fixed point. A successful step
/// always lowers `|e meet m|` by exactly one.
fn exchange_step(
    h: &LabelledHypergraph,
    m: &Matching,
    e: HyperedgeId,
    budget: &mut Budget,
) -> Result<Option<Matching>> {
    let matroid = h.matroid();
    let meet = h.meets(e, m)?;
    if meet.is_empty() {
        return Err(Error::Precondition(
            "witness edge no longer meets the matching; matching was not maximal".into(),
        ));
    }
    let mut x = vec![e];
    x.extend(meet.iter().copied());
    let vx = h.covered_vertices(&x)?;
    let h_minus = h.delete_vertices(&vx)?;
    let far: Matching = m
        .edges()
        .iter()
        .copied()
        .filter(|f| !meet.contains(f))
        .collect();
    let far_labels = label_set(h, &far)?;
    let far_closure = matroid.closure(&far_labels)?;
    let far_size = far.len();
    let mut found: Option<(Matching, HyperedgeId)> = None;
    for_each_independent_matching(&h_minus, Some(&far_closure), budget, &mut |cand| {
        if cand.len() == far_size {
            if let Some(ext) = extend_unchecked(&h_minus, cand)? {
                found = Some((cand.clone(), ext));
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    })?;
    let Some((m_prime, e_star)) = found else {
        return Ok(None);
    };
    // Lift back: m'' spans the same labels as m.
    let mut m_dd = m_prime;
    for &f in &meet {
        m_dd.insert(f);
    }
    let star_label = h.label(e_star)?;
    for &dropped in &meet {
        let mut rest = m_dd.clone();
        rest.remove(dropped);
        let rest_labels = label_set(h, &rest)?;
        if !matroid.in_span(star_label, &rest_labels)? {
            let mut next = rest;
            next.insert(e_star);
            let old_labels = label_set(h, m)?;
            let new_labels = label_set(h, &next)?;
            if !is_independent_matching(h, &next)?
                || !matroid.same_span(&new_labels, &old_labels)?
            {
                return Err(Error::Internal("exchange produced an invalid matching".into()));
            }
            if h.meets(e, &next)?.len() != meet.len() - 1 {
                return Err(Error::Internal(
                    "exchange did not reduce the meeting count by one".into(),
                ));
            }
            return Ok(Some(next));
        }
    }
    Err(Error::Internal(
        "no exchangeable edge found despite a spanning extension".into(),
    ))
}

/// Lexicographically smallest matching minimizing `|e meet .|` over the span
/// class of `m`, by exhaustive enumeration.
fn class_minimum(
    h: &LabelledHypergraph,
    m: &Matching,
    e: HyperedgeId,
    budget: &mut Budget,
) -> Result<Matching> {
    let labels = label_set(h, m)?;
    let closure = h.matroid().closure(&labels)?;
    let size = m.len();
    let mut best: Option<(usize, Matching)> = None;
    for_each_independent_matching(h, Some(&closure), budget, &mut |cand| {
        if cand.len() == size {
            let k = h.meets(e, cand)?.len();
            if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                best = Some((k, cand.clone()));
            }
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(best.expect("the class contains the input matching").1)
}

/// Exchange loop: apply proof-style exchanges until they stop reducing
/// `|e meet m|`, then certify minimality over the whole span class (jumping
/// to the class minimum in the rare case a stalled fixed point is not one).
///
/// Preconditions: `m` maximal (inclusion-wise maximality is verified here;
/// full maximality is the caller's responsibility) and the label of `e`
/// outside the span of the matching labels.
pub fn exchange_reduce(
    h: &LabelledHypergraph,
    m: &Matching,
    e: HyperedgeId,
) -> Result<Matching> {
    require_independent_matching(h, m)?;
    if extend_unchecked(h, m)?.is_some() {
        return Err(Error::Precondition(
            "matching is not inclusion-wise maximal".into(),
        ));
    }
    let labels = label_set(h, m)?;
    if h.matroid().in_span(h.label(e)?, &labels)? {
        return Err(Error::Precondition(
            "witness label lies in the span of the matching".into(),
        ));
    }
    let mut budget = Budget::new(ENUMERATION_BUDGET);
    let mut cur = m.clone();
    while let Some(next) = exchange_step(h, &cur, e, &mut budget)? {
        cur = next;
    }
    let best = class_minimum(h, &cur, e, &mut budget)?;
    if h.meets(e, &best)?.len() < h.meets(e, &cur)?.len() {
        cur = best;
    }
    Ok(cur)
}

/// Heuristic counterpart: swap loop only. Errors if the witness clears
/// completely, because then the input matching was extendable.
fn heuristic_reduce(
    h: &LabelledHypergraph,
    m: &Matching,
    e: HyperedgeId,
) -> Result<Matching> {
    let reduced = swap_reduce(h, m, e)?;
    if h.meets(e, &reduced)?.is_empty() {
        return Err(Error::Precondition(
            "witness edge can extend the matching; matching was not maximal".into(),
        ));
    }
    Ok(reduced)
}

/// Peel off the witness edge together with everything the reduced matching
/// has touching it. The returned set `X` of `k+1` edges is connected, covers
/// at most `(r-1)k + r` vertices, and leaves a matching of size `l - k`
/// behind that is maximal in `H - V(X)` (certified in exact mode).
pub fn peel_step(
    h: &LabelledHypergraph,
    m: &Matching,
    e: HyperedgeId,
    mode: Mode,
) -> Result<PeelResult> {
    let reduced = match mode {
        Mode::Exact => exchange_reduce(h, m, e)?,
        Mode::Heuristic => {
            require_independent_matching(h, m)?;
            heuristic_reduce(h, m, e)?
        }
    };
    let meet = h.meets(e, &reduced)?;
    let k = meet.len();
    if k == 0 {
        return Err(Error::Internal("peel with an empty meeting set".into()));
    }
    let mut x = vec![e];
    x.extend(meet.iter().copied());
    x.sort_unstable();
    if !h.edge_set_connected(&x)? {
        return Err(Error::Internal("peeled edge set is not connected".into()));
    }
    let vx = h.covered_vertices(&x)?;
    let r = h.max_edge_size();
    if vx.len() > (r - 1) * k + r {
        return Err(Error::Internal("peeled edge set covers too many vertices".into()));
    }
    let residual: Matching = reduced
        .edges()
        .iter()
        .copied()
        .filter(|f| !meet.contains(f))
        .collect();
    let certified = match mode {
        Mode::Exact => {
            let h_minus = h.delete_vertices(&vx)?;
            let mut budget = Budget::new(ENUMERATION_BUDGET);
            if !class_all_inclusion_maximal(&h_minus, &residual, &mut budget)? {
                return Err(Error::Internal(
                    "peel residual is not maximal; the input matching was not maximal".into(),
                ));
            }
            true
        }
        Mode::Heuristic => false,
    };
    Ok(PeelResult {
        x,
        k,
        residual,
        certified,
    })
}

/// The spanning recursion. Starting from a maximal matching, repeatedly peel
/// on the lowest-id edge labelled outside the current span, accumulate the
/// deleted vertices into `U` and the peel sizes into `a`, and stop once every
/// surviving edge label lies in the span of the matching.
///
/// In exact mode a budget overrun degrades the rest of the run to heuristic
/// search and clears the `certified` flag instead of failing.
pub fn spanning_matching(
    h: &LabelledHypergraph,
    mode: Mode,
) -> Result<SpanningMatchingResult> {
    let matroid = Arc::clone(h.matroid());
    if matroid.rank() == 0 {
        return Err(Error::Precondition(
            "spanning_matching needs a matroid of rank at least 1".into(),
        ));
    }
    let mut exact = mode == Mode::Exact;
    let mut cur = h.clone();
    let mut u: BTreeSet<Vertex> = BTreeSet::new();
    let mut a = 0usize;
    let mut m = if exact {
        let mut budget = Budget::new(ENUMERATION_BUDGET);
        match exact_maximal(&cur, &Matching::empty(), &mut budget) {
            Ok(m) => m,
            Err(Error::Budget(_)) => {
                exact = false;
                heuristic_maximal(&cur, &Matching::empty())?
            }
            Err(err) => return Err(err),
        }
    } else {
        heuristic_maximal(&cur, &Matching::empty())?
    };
    let max_peels = cur.vertex_count() + 1;
    let mut peels = 0usize;
    while let Some(e) = lowest_witness(&cur, &m)? {
        let peel = if exact {
            match peel_step(&cur, &m, e, Mode::Exact) {
                Ok(p) => p,
                Err(Error::Budget(_)) => {
                    exact = false;
                    peel_step(&cur, &m, e, Mode::Heuristic)?
                }
                Err(err) => return Err(err),
            }
        } else {
            peel_step(&cur, &m, e, Mode::Heuristic)?
        };
        let vx = cur.covered_vertices(&peel.x)?;
        u.extend(vx.iter().copied());
        a += peel.k;
        cur = cur.delete_vertices(&vx)?;
        m = peel.residual;
        if !exact {
            // The residual is only heuristically maximal in the smaller
            // hypergraph, so grow it again before looking for witnesses.
            m = heuristic_maximal(&cur, &m)?;
        }
        peels += 1;
        if peels > max_peels {
            return Err(Error::Internal("peel loop failed to terminate".into()));
        }
    }
    let mut kind = SpanningKind::Deficient;
    if m.len() == matroid.rank() {
        // A full-rank matching is valid in the original hypergraph, so no
        // deletions need reporting.
        kind = SpanningKind::FullRank;
        u.clear();
        a = 0;
    }
    let r = h.max_edge_size();
    if u.len() > (2 * r - 1) * a {
        return Err(Error::Internal("deletion budget exceeded".into()));
    }
    Ok(SpanningMatchingResult {
        u,
        matching: m,
        a,
        kind,
        certified: exact,
    })
}

/// m disjoint basis matchings via the m-fold direct-sum lift: duplicate every
/// hyperedge once per copy of the matroid, run [`spanning_matching`], and
/// split the result by copy index.
pub fn disjoint_basis_matchings(
    h: &LabelledHypergraph,
    copies: usize,
    mode: Mode,
) -> Result<BasisMatchingsResult> {
    if copies == 0 {
        return Err(Error::Precondition("need at least one matching".into()));
    }
    let base = h.matroid();
    if base.rank() == 0 {
        return Err(Error::Precondition(
            "disjoint_basis_matchings needs a matroid of rank at least 1".into(),
        ));
    }
    let alive: Vec<HyperedgeId> = h.edges().collect();
    let ground = base.ground_size();
    let lifted = Matroid::direct_sum(vec![(**base).clone(); copies])?;
    debug_assert_eq!(lifted.rank(), base.rank() * copies);
    let mut edges = Vec::with_capacity(alive.len() * copies);
    for c in 0..copies {
        for &e in &alive {
            edges.push((
                h.edge_vertices(e)?.to_vec(),
                ElementId((c * ground + h.label(e)?.0 as usize) as u32),
            ));
        }
    }
    let lifted_h = LabelledHypergraph::new(
        h.vertices().clone(),
        edges,
        h.max_edge_size(),
        Arc::new(lifted),
    )?;
    let res = spanning_matching(&lifted_h, mode)?;
    let mut matchings = vec![Matching::empty(); copies];
    for &q in res.matching.edges() {
        let c = q.0 as usize / alive.len();
        let pos = q.0 as usize % alive.len();
        matchings[c].insert(alive[pos]);
    }
    verify_basis_matchings(h, &res.u, &matchings)?;
    Ok(BasisMatchingsResult {
        u: res.u,
        matchings,
        certified: res.certified,
    })
}

/// Recomputes the headline postcondition: the matchings are pairwise
/// vertex-disjoint and each label set is a basis of the span of all edge
/// labels surviving in `H - U`.
fn verify_basis_matchings(
    h: &LabelledHypergraph,
    u: &BTreeSet<Vertex>,
    matchings: &[Matching],
) -> Result<()> {
    let survivor = h.delete_vertices(u)?;
    let matroid = h.matroid();
    let mut all_vertices = BTreeSet::new();
    for m in matchings {
        for v in matched_vertices(&survivor, m)? {
            if !all_vertices.insert(v) {
                return Err(Error::Internal("basis matchings are not disjoint".into()));
            }
        }
    }
    let alive_labels: BTreeSet<ElementId> = survivor
        .edges()
        .map(|e| survivor.label(e))
        .collect::<Result<_>>()?;
    let span_rank = matroid.rank_of(&alive_labels)?;
    for m in matchings {
        if !is_independent_matching(&survivor, m)? {
            return Err(Error::Internal("basis matching invalid after deletion".into()));
        }
        let labels = label_set(&survivor, m)?;
        if labels.len() != span_rank || !matroid.same_span(&labels, &alive_labels)? {
            return Err(Error::Internal(
                "matching labels do not form a basis of the surviving span".into(),
            ));
        }
    }
    Ok(())
}

/// Exhaustive oracle: the maximum-size independent matching, lexicographically
/// smallest id set among optima. Hard-capped at [`BF_EDGE_CAP`] edges.
pub fn bf_best_independent_matching(h: &LabelledHypergraph) -> Result<Matching> {
    if h.edge_count() > BF_EDGE_CAP {
        return Err(Error::Budget(format!(
            "brute force capped at {BF_EDGE_CAP} hyperedges, got {}",
            h.edge_count()
        )));
    }
    let mut budget = Budget::new(ENUMERATION_BUDGET);
    let mut best = Matching::empty();
    for_each_independent_matching(h, None, &mut budget, &mut |cand| {
        if cand.len() > best.len() {
            best = cand.clone();
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(best)
}
