//! Certification of k-critical, k-list-critical and online k-list-critical
//! graphs, plus graph6 stream filtering by those predicates.
//!
//! "Every proper subgraph is (k−1)-choosable" reduces to single-edge
//! deletions: choosability and paintability are monotone under subgraphs
//! (restrict the lists / play the subgame), and once δ(G) ≥ k−1 ≥ 1 every
//! proper subgraph misses an edge, hence sits inside some G − e. The
//! min-degree fast-fail therefore runs first; it is also a classical
//! necessary condition (a vertex of degree < k−1 always has a free color,
//! so criticality would fail one level down). k = 1 is handled directly:
//! only K1 is 1-list-critical.

use crate::choosability::{is_choosable_with_cap, ListAssignment, ListSizes};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;
use crate::paintability::is_paintable_with_cap;
use crate::solve::chromatic_number_with_cap;
use serde::{Deserialize, Serialize};

/// Which criticality notion a report certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalityKind {
    Chromatic,
    List,
    Online,
}

impl std::fmt::Display for CriticalityKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CriticalityKind::Chromatic => write!(f, "chromatic"),
            CriticalityKind::List => write!(f, "list"),
            CriticalityKind::Online => write!(f, "online"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    /// The graph itself is (k−1)-colorable/choosable/paintable.
    ColorableItself,
    /// Some single-edge deletion is still not (k−1)-colorable.
    SomeSubgraphNotColorable,
    /// δ < k−1, which no critical graph allows.
    MinDegreeTooLow,
}

/// Verdict plus witnesses for one graph. `witness_edge` names an edge whose
/// deletion stays non-colorable (a minimality failure); `bad_assignment`
/// carries a bad (k−1)-assignment for the full graph when one was found.
/// Which witnesses appear depends on search order; verdicts do not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub kind: CriticalityKind,
    pub k: usize,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<FailureReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edge: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bad_assignment: Option<ListAssignment>,
}

impl CriticalityReport {
    fn fail(kind: CriticalityKind, k: usize, reason: FailureReason) -> Self {
        CriticalityReport {
            kind,
            k,
            verdict: false,
            failure_reason: Some(reason),
            witness_edge: None,
            bad_assignment: None,
        }
    }
}

/// Capacity knobs for the deciders, surfaced as CLI flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub choosable: usize,
    pub paintable: usize,
    pub exact: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            choosable: crate::choosability::DEFAULT_CHOOSABLE_CAP,
            paintable: crate::paintability::DEFAULT_PAINTABLE_CAP,
            exact: crate::solve::DEFAULT_EXACT_CAP,
        }
    }
}

/// χ(g) = k and χ(g−e) = k−1 for every edge e.
pub fn is_k_critical(g: &Graph, k: usize) -> Result<CriticalityReport, Error> {
    is_k_critical_with_caps(g, k, &Caps::default())
}

pub fn is_k_critical_with_caps(
    g: &Graph,
    k: usize,
    caps: &Caps,
) -> Result<CriticalityReport, Error> {
    let kind = CriticalityKind::Chromatic;
    if k == 0 {
        return Err(Error::Precondition("criticality needs k >= 1".into()));
    }
    let chi = chromatic_number_with_cap(g, caps.exact)?;
    if chi < k {
        return Ok(CriticalityReport::fail(
            kind,
            k,
            FailureReason::ColorableItself,
        ));
    }
    if chi > k {
        // Removing one edge lowers χ by at most one, so minimality is
        // already dead; any edge witnesses it.
        let mut report = CriticalityReport::fail(kind, k, FailureReason::SomeSubgraphNotColorable);
        report.witness_edge = g.edges().first().copied();
        return Ok(report);
    }
    for (u, v) in g.edges() {
        if chromatic_number_with_cap(&g.remove_edge(u, v), caps.exact)? != k - 1 {
            let mut report =
                CriticalityReport::fail(kind, k, FailureReason::SomeSubgraphNotColorable);
            report.witness_edge = Some((u, v));
            return Ok(report);
        }
    }
    Ok(CriticalityReport {
        kind,
        k,
        verdict: true,
        failure_reason: None,
        witness_edge: None,
        bad_assignment: None,
    })
}

/// Not (k−1)-choosable, but every single-edge deletion is.
pub fn is_k_list_critical(g: &Graph, k: usize) -> Result<CriticalityReport, Error> {
    is_k_list_critical_with_caps(g, k, &Caps::default())
}

pub fn is_k_list_critical_with_caps(
    g: &Graph,
    k: usize,
    caps: &Caps,
) -> Result<CriticalityReport, Error> {
    critical_by_decider(g, k, CriticalityKind::List, &mut |h: &Graph| {
        let sizes = ListSizes::constant(h.n(), k - 1);
        let verdict = is_choosable_with_cap(h, &sizes, caps.choosable)?;
        Ok((verdict.choosable, verdict.witness))
    })
}

/// Not (k−1)-paintable, but every single-edge deletion is.
pub fn is_online_k_list_critical(g: &Graph, k: usize) -> Result<CriticalityReport, Error> {
    is_online_k_list_critical_with_caps(g, k, &Caps::default())
}

pub fn is_online_k_list_critical_with_caps(
    g: &Graph,
    k: usize,
    caps: &Caps,
) -> Result<CriticalityReport, Error> {
    critical_by_decider(g, k, CriticalityKind::Online, &mut |h: &Graph| {
        let sizes = ListSizes::constant(h.n(), k - 1);
        Ok((is_paintable_with_cap(h, &sizes, caps.paintable)?, None))
    })
}

/// (verdict, optional bad assignment) of a "(k−1)-colorable in the
/// relevant sense" decider.
type ColorableVerdict = Result<(bool, Option<ListAssignment>), Error>;

/// Shared minimality scaffold over a colorability decider.
fn critical_by_decider(
    g: &Graph,
    k: usize,
    kind: CriticalityKind,
    decide: &mut dyn FnMut(&Graph) -> ColorableVerdict,
) -> Result<CriticalityReport, Error> {
    if k == 0 {
        return Err(Error::Precondition("criticality needs k >= 1".into()));
    }
    if k == 1 {
        // Not 0-choosable means nonempty; minimal means no proper subgraph,
        // i.e. K1. Edge deletions cannot see this, so decide directly.
        let verdict = g.n() == 1;
        return Ok(if verdict {
            CriticalityReport {
                kind,
                k,
                verdict,
                failure_reason: None,
                witness_edge: None,
                bad_assignment: None,
            }
        } else if g.n() == 0 {
            CriticalityReport::fail(kind, k, FailureReason::ColorableItself)
        } else {
            CriticalityReport::fail(kind, k, FailureReason::SomeSubgraphNotColorable)
        });
    }

    if g.n() == 0 || g.min_degree() < k - 1 {
        return Ok(CriticalityReport::fail(
            kind,
            k,
            FailureReason::MinDegreeTooLow,
        ));
    }

    let (self_colorable, bad) = decide(g)?;
    if self_colorable {
        return Ok(CriticalityReport::fail(
            kind,
            k,
            FailureReason::ColorableItself,
        ));
    }
    for (u, v) in g.edges() {
        let (deleted_ok, _) = decide(&g.remove_edge(u, v))?;
        if !deleted_ok {
            return Ok(CriticalityReport {
                kind,
                k,
                verdict: false,
                failure_reason: Some(FailureReason::SomeSubgraphNotColorable),
                witness_edge: Some((u, v)),
                bad_assignment: bad,
            });
        }
    }
    debug_assert!(g.min_degree() >= k - 1);
    Ok(CriticalityReport {
        kind,
        k,
        verdict: true,
        failure_reason: None,
        witness_edge: None,
        bad_assignment: bad,
    })
}

pub fn criticality(
    g: &Graph,
    kind: CriticalityKind,
    k: usize,
    caps: &Caps,
) -> Result<CriticalityReport, Error> {
    match kind {
        CriticalityKind::Chromatic => is_k_critical_with_caps(g, k, caps),
        CriticalityKind::List => is_k_list_critical_with_caps(g, k, caps),
        CriticalityKind::Online => is_online_k_list_critical_with_caps(g, k, caps),
    }
}

/// One JSONL record of the annotated stream. Exactly one of `verdict`,
/// `skipped`, `error` is populated; capacity skips are explicit records,
/// never silent drops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamRecord {
    pub index: usize,
    pub graph6: String,
    pub kind: CriticalityKind,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<FailureReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Evaluates one stream line; pure, so callers may shard lines across
/// workers and reassemble by `index`.
pub fn evaluate_line(
    index: usize,
    line: &str,
    kind: CriticalityKind,
    k: usize,
    caps: &Caps,
) -> StreamRecord {
    let mut record = StreamRecord {
        index,
        graph6: line.to_string(),
        kind,
        k,
        verdict: None,
        failure_reason: None,
        skipped: None,
        error: None,
    };
    let g = match graph6::decode(line) {
        Ok(g) => g,
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    match criticality(&g, kind, k, caps) {
        Ok(report) => {
            record.verdict = Some(report.verdict);
            record.failure_reason = report.failure_reason;
        }
        Err(e @ Error::Capacity { .. }) => record.skipped = Some(e.to_string()),
        Err(e) => record.error = Some(e.to_string()),
    }
    record
}

/// Annotates a whole graph6 stream in input order, skipping blank lines.
pub fn filter_stream<'a>(
    lines: impl Iterator<Item = &'a str>,
    kind: CriticalityKind,
    k: usize,
    caps: &Caps,
) -> Vec<StreamRecord> {
    lines
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| evaluate_line(i, l, kind, k, caps))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6;

    #[test]
    fn chromatic_criticality_examples() {
        assert!(is_k_critical(&Graph::complete(4), 4).unwrap().verdict);
        assert!(is_k_critical(&Graph::cycle(5), 3).unwrap().verdict);
        // W5: χ = 4 and every one of its 10 edge deletions is 3-colorable.
        assert!(is_k_critical(&Graph::wheel(5), 4).unwrap().verdict);

        let r = is_k_critical(&Graph::cycle(6), 3).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.failure_reason, Some(FailureReason::ColorableItself));

        let r = is_k_critical(&Graph::complete(5), 4).unwrap();
        assert_eq!(
            r.failure_reason,
            Some(FailureReason::SomeSubgraphNotColorable)
        );
        assert!(r.witness_edge.is_some());
    }

    #[test]
    fn list_criticality_examples() {
        assert!(is_k_list_critical(&Graph::complete(4), 4).unwrap().verdict);
        let c5 = is_k_list_critical(&Graph::cycle(5), 3).unwrap();
        assert!(c5.verdict);
        assert!(c5.bad_assignment.is_some());

        let c6 = is_k_list_critical(&Graph::cycle(6), 3).unwrap();
        assert!(!c6.verdict);
        assert_eq!(c6.failure_reason, Some(FailureReason::ColorableItself));

        // Fast-fail: a pendant vertex can never sit in a 4-list-critical graph.
        let pendant =
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4)]);
        let r = is_k_list_critical(&pendant, 4).unwrap();
        assert_eq!(r.failure_reason, Some(FailureReason::MinDegreeTooLow));
    }

    #[test]
    fn online_criticality_examples() {
        assert!(
            is_online_k_list_critical(&Graph::complete(4), 4)
                .unwrap()
                .verdict
        );
        assert!(
            is_online_k_list_critical(&Graph::cycle(5), 3)
                .unwrap()
                .verdict
        );
        assert!(
            !is_online_k_list_critical(&Graph::cycle(6), 3)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn k_equals_one_corner() {
        assert!(is_k_list_critical(&Graph::empty(1), 1).unwrap().verdict);
        assert!(!is_k_list_critical(&Graph::empty(2), 1).unwrap().verdict);
        assert!(!is_k_list_critical(&Graph::empty(0), 1).unwrap().verdict);
        // The chromatic decider is edge-minimal by definition, so an
        // edgeless graph with χ = 1 passes vacuously.
        assert!(is_k_critical(&Graph::empty(2), 1).unwrap().verdict);
    }

    #[test]
    fn stream_annotation() {
        let caps = Caps::default();
        let input = "C~\nBw\n\nC~~\n";
        let records = filter_stream(input.lines(), CriticalityKind::List, 4, &caps);
        assert_eq!(records.len(), 3);
        assert_eq!(records[0].verdict, Some(true));
        assert_eq!(records[1].verdict, Some(false));
        assert!(records[2].error.is_some());
        assert_eq!(records[2].index, 2);

        // Capacity skip is explicit.
        let big = graph6::encode(&Graph::cycle(12));
        let records = filter_stream(
            std::iter::once(big.as_str()),
            CriticalityKind::List,
            3,
            &caps,
        );
        assert!(records[0].skipped.as_deref().unwrap().contains("capacity"));
    }

    #[test]
    fn four_vertex_stream_only_k4_is_list_critical() {
        let caps = Caps::default();
        let lines: Vec<String> = crate::enumerate::graphs_up_to_iso(4)
            .iter()
            .map(graph6::encode)
            .collect();
        let records = filter_stream(
            lines.iter().map(String::as_str),
            CriticalityKind::List,
            4,
            &caps,
        );
        assert_eq!(records.len(), 11);
        let passing: Vec<&StreamRecord> =
            records.iter().filter(|r| r.verdict == Some(true)).collect();
        assert_eq!(passing.len(), 1);
        assert_eq!(
            graph6::decode(&passing[0].graph6).unwrap(),
            Graph::complete(4)
        );
    }
}
