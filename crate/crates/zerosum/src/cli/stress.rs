//! Property stress suites over seeded random instances.
//!
//! Every suite re-derives its verdicts through independent oracle code
//! (plain recursive enumeration here, never the engine's own search), emits
//! one CSV row per trial, and serializes the first offending instance for
//! replay. Trial `i` always runs with seed `base_seed + i`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::hypergraph::{HyperedgeId, LabelledHypergraph, Matching};
use crate::instances::{
    random_colored_hypergraph, random_linear_hypergraph, HypergraphParams,
};
use crate::matching::{
    disjoint_basis_matchings, exchange_reduce, find_maximal_independent_matching,
    is_independent_matching, lowest_witness, peel_step, spanning_matching, Mode, SpanningKind,
};
use crate::matroid::ElementId;
use crate::cycle::probe_f;
use crate::gf::FieldSpec;
use crate::Result;

/// Outcome of one suite run.
#[derive(Debug)]
pub struct SuiteReport {
    pub header: String,
    pub rows: Vec<String>,
    pub violations: usize,
    /// Serialized first offending instance, for replay.
    pub dump: Option<String>,
    /// Extra line for stdout (the probed value for `fprobe`).
    pub stdout_note: Option<String>,
}

impl SuiteReport {
    fn new(header: &str) -> Self {
        SuiteReport {
            header: header.to_string(),
            rows: Vec::new(),
            violations: 0,
            dump: None,
            stdout_note: None,
        }
    }

    fn record_violation(&mut self, dump: String) {
        self.violations += 1;
        if self.dump.is_none() {
            self.dump = Some(dump);
        }
    }
}

/// Serializes a hypergraph instance as replayable text.
fn dump_instance(
    suite: &str,
    trial: usize,
    seed: u64,
    why: &str,
    h: &LabelledHypergraph,
) -> String {
    let mut out = String::new();
    writeln!(out, "suite {suite}").unwrap();
    writeln!(out, "trial {trial}").unwrap();
    writeln!(out, "seed {seed}").unwrap();
    writeln!(out, "violation {why}").unwrap();
    writeln!(out, "vertices {}", h.vertex_count()).unwrap();
    writeln!(out, "max_edge_size {}", h.max_edge_size()).unwrap();
    writeln!(out, "edges {}", h.edge_count()).unwrap();
    for e in h.edges() {
        let vs: Vec<String> = h
            .edge_vertices(e)
            .unwrap()
            .iter()
            .map(|v| v.0.to_string())
            .collect();
        let label = h.label(e).unwrap();
        let label_desc = match h.matroid().vector(label) {
            Some(vec) => {
                let coords: Vec<String> = vec.coords().iter().map(|c| c.to_string()).collect();
                format!("vector {}", coords.join(" "))
            }
            None => format!("element {}", label.0),
        };
        writeln!(out, "edge {} | {} | {}", e.0, vs.join(" "), label_desc).unwrap();
    }
    out
}

/// Oracle enumeration of every independent matching, by plain recursion with
/// validity pruning. Matching sizes are bounded by the matroid rank, so this
/// stays small even with twenty edges.
fn oracle_matchings(h: &LabelledHypergraph) -> Result<Vec<Matching>> {
    fn go(
        h: &LabelledHypergraph,
        edges: &[HyperedgeId],
        start: usize,
        chosen: &mut Vec<HyperedgeId>,
        out: &mut Vec<Matching>,
    ) -> Result<()> {
        for i in start..edges.len() {
            chosen.push(edges[i]);
            let m = Matching::from_edges(chosen.iter().copied());
            if is_independent_matching(h, &m)? {
                out.push(m);
                go(h, edges, i + 1, chosen, out)?;
            }
            chosen.pop();
        }
        Ok(())
    }
    let edges: Vec<HyperedgeId> = h.edges().collect();
    let mut out = vec![Matching::empty()];
    go(h, &edges, 0, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// Oracle extender scan: does any single edge extend the matching?
fn oracle_has_extender(h: &LabelledHypergraph, m: &Matching) -> Result<bool> {
    for e in h.edges() {
        if m.contains(e) {
            continue;
        }
        let mut grown = m.clone();
        grown.insert(e);
        if is_independent_matching(h, &grown)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn label_set(h: &LabelledHypergraph, m: &Matching) -> Result<BTreeSet<ElementId>> {
    m.edges().iter().map(|&e| h.label(e)).collect()
}

/// Exchange and peel checks: the exchange loop must reach the brute-force
/// minimum of `|e meet M|` over same-span matchings, and the peel output must
/// be a connected set of `k + 1` edges leaving a certified-maximal residual.
pub fn suite_lemma31(trials: usize, seed: u64, p: u64, max_dim: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("trial,seed,vertices,edges,rank,has_witness,k,bf_min,ok");
    let params = HypergraphParams {
        p,
        max_dimension: max_dim,
        ..HypergraphParams::crowded_binary()
    };
    for trial in 0..trials {
        let trial_seed = seed + trial as u64;
        let h = random_linear_hypergraph(params, trial_seed)?;
        let matroid = h.matroid().clone();
        let m = find_maximal_independent_matching(&h, Mode::Exact)?.matching;
        let Some(e) = lowest_witness(&h, &m)? else {
            report.rows.push(format!(
                "{trial},{trial_seed},{},{},{},0,0,0,1",
                h.vertex_count(),
                h.edge_count(),
                matroid.rank()
            ));
            continue;
        };
        let reduced = exchange_reduce(&h, &m, e)?;
        let k = h.meets(e, &reduced)?.len();

        // Oracle: brute-force minimum over all same-span matchings.
        let target = label_set(&h, &m)?;
        let mut bf_min = usize::MAX;
        for cand in oracle_matchings(&h)? {
            if matroid.same_span(&label_set(&h, &cand)?, &target)? {
                bf_min = bf_min.min(h.meets(e, &cand)?.len());
            }
        }

        let mut ok = k == bf_min && k >= 1;
        let mut why = String::new();
        if !ok {
            why = format!("exchange stopped at {k}, brute-force minimum is {bf_min}");
        }

        let peel = peel_step(&h, &m, e, Mode::Exact)?;
        if peel.x.len() != peel.k + 1 {
            ok = false;
            why = format!("peel returned {} edges for k = {}", peel.x.len(), peel.k);
        }
        if !h.edge_set_connected(&peel.x)? {
            ok = false;
            why = "peeled edge set is disconnected".into();
        }
        // Independent residual-maximality check: every same-span matching in
        // the peeled hypergraph must have no extender.
        let vx = h.covered_vertices(&peel.x)?;
        let survivor = h.delete_vertices(&vx)?;
        let residual_labels = label_set(&survivor, &peel.residual)?;
        for cand in oracle_matchings(&survivor)? {
            if matroid.same_span(&label_set(&survivor, &cand)?, &residual_labels)?
                && oracle_has_extender(&survivor, &cand)?
            {
                ok = false;
                why = "peel residual is not maximal".into();
                break;
            }
        }

        if !ok {
            report.record_violation(dump_instance("lemma31", trial, trial_seed, &why, &h));
        }
        report.rows.push(format!(
            "{trial},{trial_seed},{},{},{},1,{k},{bf_min},{}",
            h.vertex_count(),
            h.edge_count(),
            matroid.rank(),
            u8::from(ok)
        ));
    }
    Ok(report)
}

/// Spanning-matching checks: full rank, or a deletion set within the
/// `(2r-1)(k-1)` budget whose surviving labels are spanned by the matching.
pub fn suite_lemma32(trials: usize, seed: u64, p: u64, max_dim: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("trial,seed,vertices,edges,rank,kind,u_size,a,ok");
    let params = HypergraphParams {
        p,
        max_dimension: max_dim,
        ..HypergraphParams::small_binary()
    };
    for trial in 0..trials {
        let trial_seed = seed + trial as u64;
        let h = random_linear_hypergraph(params, trial_seed)?;
        let matroid = h.matroid().clone();
        let rank = matroid.rank();
        if rank == 0 {
            report.rows.push(format!(
                "{trial},{trial_seed},{},{},0,skip,0,0,1",
                h.vertex_count(),
                h.edge_count()
            ));
            continue;
        }
        let res = spanning_matching(&h, Mode::Exact)?;
        let r = h.max_edge_size();

        let mut ok = true;
        let mut why = String::new();
        // Independent recomputation of the postconditions.
        let survivor = h.delete_vertices(&res.u)?;
        if !is_independent_matching(&survivor, &res.matching)? {
            ok = false;
            why = "matching invalid after deletions".into();
        }
        let labels = label_set(&survivor, &res.matching)?;
        for e in survivor.edges() {
            if !matroid.in_span(survivor.label(e)?, &labels)? {
                ok = false;
                why = "a surviving label escapes the matching span".into();
                break;
            }
        }
        if res.u.len() > (2 * r - 1) * res.a {
            ok = false;
            why = format!("|U| = {} exceeds (2r-1)a = {}", res.u.len(), (2 * r - 1) * res.a);
        }
        match res.kind {
            SpanningKind::FullRank => {
                if res.matching.len() != rank || !res.u.is_empty() {
                    ok = false;
                    why = "full-rank result with deletions or wrong size".into();
                }
            }
            SpanningKind::Deficient => {
                let k = rank - res.matching.len();
                if k < 1 || res.u.len() > (2 * r - 1) * (k - 1) {
                    ok = false;
                    why = format!("|U| = {} exceeds (2r-1)(k-1) with k = {k}", res.u.len());
                }
            }
        }
        if !ok {
            report.record_violation(dump_instance("lemma32", trial, trial_seed, &why, &h));
        }
        let kind = match res.kind {
            SpanningKind::FullRank => "full",
            SpanningKind::Deficient => "deficient",
        };
        report.rows.push(format!(
            "{trial},{trial_seed},{},{},{rank},{kind},{},{},{}",
            h.vertex_count(),
            h.edge_count(),
            res.u.len(),
            res.a,
            u8::from(ok)
        ));
    }
    Ok(report)
}

/// Disjoint-basis checks with two copies: the split matchings are pairwise
/// vertex-disjoint bases of the surviving span, within the lifted budget.
pub fn suite_lemma33(trials: usize, seed: u64, p: u64, max_dim: usize) -> Result<SuiteReport> {
    let copies = 2usize;
    let mut report = SuiteReport::new("trial,seed,vertices,edges,rank,u_size,ok");
    let params = HypergraphParams {
        p,
        max_dimension: max_dim,
        ..HypergraphParams::crowded_binary()
    };
    for trial in 0..trials {
        let trial_seed = seed + trial as u64;
        let h = random_linear_hypergraph(params, trial_seed)?;
        let matroid = h.matroid().clone();
        let rank = matroid.rank();
        if rank == 0 {
            report.rows.push(format!(
                "{trial},{trial_seed},{},{},0,0,1",
                h.vertex_count(),
                h.edge_count()
            ));
            continue;
        }
        let res = disjoint_basis_matchings(&h, copies, Mode::Heuristic)?;
        let r = h.max_edge_size();

        let mut ok = true;
        let mut why = String::new();
        if res.u.len() > (2 * r - 1) * (rank * copies - 1) {
            ok = false;
            why = format!(
                "|U| = {} exceeds (2r-1)(dm-1) = {}",
                res.u.len(),
                (2 * r - 1) * (rank * copies - 1)
            );
        }
        let survivor = h.delete_vertices(&res.u)?;
        let alive_labels: BTreeSet<ElementId> = survivor
            .edges()
            .map(|e| survivor.label(e))
            .collect::<Result<_>>()?;
        let span_rank = matroid.rank_of(&alive_labels)?;
        let mut all_vertices = BTreeSet::new();
        for m in &res.matchings {
            if !is_independent_matching(&survivor, m)? {
                ok = false;
                why = "split matching invalid after deletions".into();
            }
            let labels = label_set(&survivor, m)?;
            if labels.len() != span_rank || !matroid.same_span(&labels, &alive_labels)? {
                ok = false;
                why = "split matching is not a basis of the surviving span".into();
            }
            for &e in m.edges() {
                for &v in survivor.edge_vertices(e)? {
                    if !all_vertices.insert(v) {
                        ok = false;
                        why = "split matchings share a vertex".into();
                    }
                }
            }
        }
        if !ok {
            report.record_violation(dump_instance("lemma33", trial, trial_seed, &why, &h));
        }
        report.rows.push(format!(
            "{trial},{trial_seed},{},{},{rank},{},{}",
            h.vertex_count(),
            h.edge_count(),
            res.u.len(),
            u8::from(ok)
        ));
    }
    Ok(report)
}

/// Standalone maximum-rainbow-matching search on raw edge data, independent
/// of the hypergraph and matroid types.
fn max_rainbow_oracle(edges: &[(Vec<u32>, usize)]) -> usize {
    fn go(
        edges: &[(Vec<u32>, usize)],
        start: usize,
        used_vertices: &mut BTreeSet<u32>,
        used_colors: &mut BTreeSet<usize>,
    ) -> usize {
        let mut best = used_colors.len();
        for i in start..edges.len() {
            let (vs, color) = &edges[i];
            if used_colors.contains(color) || vs.iter().any(|v| used_vertices.contains(v)) {
                continue;
            }
            used_colors.insert(*color);
            used_vertices.extend(vs.iter().copied());
            best = best.max(go(edges, i + 1, used_vertices, used_colors));
            used_colors.remove(color);
            for v in vs {
                used_vertices.remove(v);
            }
        }
        best
    }
    go(edges, 0, &mut BTreeSet::new(), &mut BTreeSet::new())
}

/// Free-matroid specialization: the spanning verdict (rainbow matching using
/// every color versus a deletion set) must match the brute-force rainbow
/// oracle.
pub fn suite_haxell(trials: usize, seed: u64, max_colors: usize) -> Result<SuiteReport> {
    let mut report =
        SuiteReport::new("trial,seed,vertices,edges,colors,engine_full,oracle_full,ok");
    for trial in 0..trials {
        let trial_seed = seed + trial as u64;
        let (h, colors) = random_colored_hypergraph(12, max_colors.max(1), 20, trial_seed)?;
        let res = spanning_matching(&h, Mode::Exact)?;
        let engine_full = res.kind == SpanningKind::FullRank;

        let raw: Vec<(Vec<u32>, usize)> = h
            .edges()
            .map(|e| {
                Ok((
                    h.edge_vertices(e)?.iter().map(|v| v.0).collect(),
                    h.label(e)?.0 as usize,
                ))
            })
            .collect::<Result<_>>()?;
        let oracle_full = max_rainbow_oracle(&raw) == colors;

        let mut ok = engine_full == oracle_full;
        let mut why = format!("engine said {engine_full}, oracle said {oracle_full}");
        if ok && !engine_full {
            // Deficient side: the deletion budget still applies.
            let k = colors - res.matching.len();
            let r = h.max_edge_size();
            if k < 1 || res.u.len() > (2 * r - 1) * (k - 1) {
                ok = false;
                why = format!("deficient budget violated: |U| = {}, k = {k}", res.u.len());
            }
        }
        if !ok {
            report.record_violation(dump_instance("haxell", trial, trial_seed, &why, &h));
        }
        report.rows.push(format!(
            "{trial},{trial_seed},{},{},{colors},{},{},{}",
            h.vertex_count(),
            h.edge_count(),
            u8::from(engine_full),
            u8::from(oracle_full),
            u8::from(ok)
        ));
    }
    Ok(report)
}

/// Probes the least number of linear bases whose union always passes the
/// additive-basis check, and prints the value.
pub fn suite_fprobe(p: u64, d: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    let spec = FieldSpec::new(p, d)?;
    let res = probe_f(spec, trials.max(1), seed)?;
    let mut report = SuiteReport::new("p,d,trials,seed,value,exact");
    report.rows.push(format!(
        "{p},{d},{trials},{seed},{},{}",
        res.value,
        u8::from(res.exact)
    ));
    report.stdout_note = Some(res.value.to_string());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{random_linear_hypergraph, HypergraphParams};

    #[test]
    fn violation_reports_keep_the_first_dump() {
        let mut report = SuiteReport::new("a,b");
        assert_eq!(report.violations, 0);
        report.record_violation("first".into());
        report.record_violation("second".into());
        assert_eq!(report.violations, 2);
        assert_eq!(report.dump.as_deref(), Some("first"));
    }

    #[test]
    fn instance_dumps_are_replayable_text() {
        let h = random_linear_hypergraph(HypergraphParams::small_binary(), 3).unwrap();
        let dump = dump_instance("lemma32", 7, 10, "demo", &h);
        assert!(dump.starts_with("suite lemma32\ntrial 7\nseed 10\nviolation demo\n"));
        assert!(dump.contains(&format!("edges {}", h.edge_count())));
        assert_eq!(
            dump.matches("\nedge ").count(),
            h.edge_count(),
            "one line per edge"
        );
        assert!(dump.contains("| vector "), "linear labels dump their vectors");
    }

    #[test]
    fn oracle_enumeration_matches_engine_brute_force() {
        for seed in 0..10 {
            let h = random_linear_hypergraph(HypergraphParams::crowded_binary(), seed).unwrap();
            let all = oracle_matchings(&h).unwrap();
            let best = all.iter().map(Matching::len).max().unwrap();
            let engine = crate::matching::bf_best_independent_matching(&h).unwrap();
            assert_eq!(engine.len(), best);
        }
    }
}
