//! Exhaustive certification of the minimum-status bounds over small orders.
//!
//! A [`Census`] evaluates every non-isomorphic tree of one order and groups the
//! trees by matching number and by domination number. Each bound is an
//! [`ExtremalClaim`]: for every class it must be valid, attained, and attained
//! by exactly one isomorphism class, the predicted extremal tree. Uniqueness
//! is decided by [`TreeCode`] equality, never by labelled equality.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::enumeration::{
    canonical_code, enumerate_connected_graphs, enumerate_tree_codes, graph_canonical_key,
    TreeCode, MAX_GRAPH_ORDER,
};
use crate::error::{invalid, Error, Result};
use crate::families::{
    bound_domination_lower, bound_domination_upper_large, bound_domination_upper_small,
    bound_matching_lower, bound_matching_upper, bound_order, domination_upper_large_extremal,
    domination_upper_small_extremal, make_a, make_cycle, make_path, matching_upper_extremal,
};
use crate::graph::Graph;
use crate::invariants::{domination_number_tree, matching_number_tree};
use crate::status::{diameter, median_centroid_agree, min_status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    MatchLower,
    MatchUpper,
    DomLower,
    DomUpperSmall,
    DomUpperLarge,
    OrderBound,
    DiameterLemma,
    MedianCentroid,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::MatchLower,
        TheoremId::MatchUpper,
        TheoremId::DomLower,
        TheoremId::DomUpperSmall,
        TheoremId::DomUpperLarge,
        TheoremId::OrderBound,
        TheoremId::DiameterLemma,
        TheoremId::MedianCentroid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::MatchLower => "match-lower",
            TheoremId::MatchUpper => "match-upper",
            TheoremId::DomLower => "dom-lower",
            TheoremId::DomUpperSmall => "dom-upper-small",
            TheoremId::DomUpperLarge => "dom-upper-large",
            TheoremId::OrderBound => "order-bound",
            TheoremId::DiameterLemma => "diameter-lemma",
            TheoremId::MedianCentroid => "median-centroid",
        }
    }

    fn needs_census(self) -> bool {
        self != TheoremId::OrderBound
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Accepts both `match-lower` and `MatchLower` spellings.
impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == s || format!("{id:?}") == s)
            .ok_or_else(|| invalid(format!("unknown theorem {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassKind {
    Matching,
    Domination,
}

/// A parameter class, or every tree/graph of the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    Of(ClassKind, usize),
    All,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Of(ClassKind::Matching, k) => write!(f, "m={k}"),
            ClassLabel::Of(ClassKind::Domination, k) => write!(f, "gamma={k}"),
            ClassLabel::All => f.write_str("all"),
        }
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Per-tree data the theorem checks consume.
#[derive(Clone, Debug)]
pub struct TreeFacts {
    pub code: TreeCode,
    pub graph: Graph,
    pub min_status: u64,
    pub matching: usize,
    pub domination: usize,
    pub diameter: usize,
}

impl TreeFacts {
    pub fn of(graph: Graph) -> Result<Self> {
        Ok(TreeFacts {
            code: canonical_code(&graph)?,
            min_status: min_status(&graph),
            matching: matching_number_tree(&graph)?.size,
            domination: domination_number_tree(&graph)?.size,
            diameter: diameter(&graph),
            graph,
        })
    }

    pub fn class_value(&self, kind: ClassKind) -> usize {
        match kind {
            ClassKind::Matching => self.matching,
            ClassKind::Domination => self.domination,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub n: usize,
    pub kind: ClassKind,
    pub value: usize,
    pub population: usize,
    pub min_s: u64,
    pub max_s: u64,
    pub argmin_codes: Vec<TreeCode>,
    pub argmax_codes: Vec<TreeCode>,
}

/// All trees of one order with their invariants, and the class records.
#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    /// In ascending code order.
    pub trees: Vec<TreeFacts>,
    pub records: Vec<ClassRecord>,
}

impl Census {
    pub fn build(n: usize) -> Result<Self> {
        let codes = enumerate_tree_codes(n)?;
        let trees = codes
            .into_par_iter()
            .map(|code| TreeFacts::of(code.to_graph()))
            .collect::<Result<Vec<_>>>()?;
        let mut records = Vec::new();
        for kind in [ClassKind::Matching, ClassKind::Domination] {
            let max_value = trees.iter().map(|t| t.class_value(kind)).max().unwrap_or(0);
            for value in 0..=max_value {
                let members: Vec<&TreeFacts> = trees
                    .iter()
                    .filter(|t| t.class_value(kind) == value)
                    .collect();
                if members.is_empty() {
                    continue;
                }
                let min_s = members.iter().map(|t| t.min_status).min().unwrap_or(0);
                let max_s = members.iter().map(|t| t.min_status).max().unwrap_or(0);
                let codes_at = |s: u64| -> Vec<TreeCode> {
                    members
                        .iter()
                        .filter(|t| t.min_status == s)
                        .map(|t| t.code.clone())
                        .collect()
                };
                records.push(ClassRecord {
                    n,
                    kind,
                    value,
                    population: members.len(),
                    min_s,
                    max_s,
                    argmin_codes: codes_at(min_s),
                    argmax_codes: codes_at(max_s),
                });
            }
        }
        Ok(Census { n, trees, records })
    }

    pub fn record(&self, kind: ClassKind, value: usize) -> Option<&ClassRecord> {
        self.records
            .iter()
            .find(|r| r.kind == kind && r.value == value)
    }

    fn members(&self, kind: ClassKind, value: usize) -> impl Iterator<Item = &TreeFacts> {
        self.trees
            .iter()
            .filter(move |t| t.class_value(kind) == value)
    }
}

/// Class records of all trees on `n` vertices.
pub fn census(n: usize) -> Result<Vec<ClassRecord>> {
    Ok(Census::build(n)?.records)
}

pub fn censuses(n_lo: usize, n_hi: usize) -> Result<Vec<Census>> {
    (n_lo..=n_hi).map(Census::build).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// Some member lies strictly beyond the bound.
    BoundViolated,
    /// The bound holds but no member reaches it.
    BoundNotAttained,
    /// The bound is reached, but not exactly by the predicted isomorphism class.
    ExtremalMismatch,
    /// A per-tree property failed.
    PropertyViolated,
}

fn witnesses_as_edge_lists<S: Serializer>(
    graphs: &[Graph],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(graphs.iter().map(Graph::to_flat_edge_list))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: usize,
    pub class: ClassLabel,
    pub kind: FailureKind,
    pub expected: i64,
    pub observed: i64,
    #[serde(serialize_with = "witnesses_as_edge_lists")]
    pub witnesses: Vec<Graph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NotApplicable {
    pub n: usize,
    pub class: ClassLabel,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub n_range: [usize; 2],
    pub verdict: Verdict,
    /// Classes (or trees, for per-tree properties) actually checked.
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub not_applicable: Vec<NotApplicable>,
}

impl TheoremReport {
    fn new(theorem_id: TheoremId, n_lo: usize, n_hi: usize) -> Self {
        TheoremReport {
            theorem_id,
            n_range: [n_lo, n_hi],
            verdict: Verdict::Pass,
            checked: 0,
            failures: Vec::new(),
            not_applicable: Vec::new(),
        }
    }

    fn finish(mut self) -> Self {
        self.verdict = if self.failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The class minimum of `s(T)` must equal the bound.
    Lower,
    /// The class maximum of `s(T)` must equal the bound.
    Upper,
}

/// A sharp bound on `s(T)` over one parameter class, with its unique extremal
/// tree. `bound` returning an error marks the class as outside the claim.
#[derive(Clone, Copy)]
pub struct ExtremalClaim {
    pub id: TheoremId,
    pub kind: ClassKind,
    pub side: Side,
    pub bound: fn(usize, usize) -> Result<i64>,
    pub extremal: fn(usize, usize) -> Result<Graph>,
}

impl ExtremalClaim {
    pub fn standard(id: TheoremId) -> Option<Self> {
        let (kind, side, bound, extremal): (
            _,
            _,
            fn(usize, usize) -> Result<i64>,
            fn(usize, usize) -> Result<Graph>,
        ) = match id {
            TheoremId::MatchLower => (
                ClassKind::Matching,
                Side::Lower,
                bound_matching_lower,
                make_a,
            ),
            TheoremId::MatchUpper => (
                ClassKind::Matching,
                Side::Upper,
                bound_matching_upper,
                matching_upper_extremal,
            ),
            TheoremId::DomLower => (
                ClassKind::Domination,
                Side::Lower,
                bound_domination_lower,
                make_a,
            ),
            TheoremId::DomUpperSmall => (
                ClassKind::Domination,
                Side::Upper,
                bound_domination_upper_small,
                domination_upper_small_extremal,
            ),
            TheoremId::DomUpperLarge => (
                ClassKind::Domination,
                Side::Upper,
                bound_domination_upper_large,
                domination_upper_large_extremal,
            ),
            _ => return None,
        };
        Some(ExtremalClaim {
            id,
            kind,
            side,
            bound,
            extremal,
        })
    }
}

/// Checks `claim` on every class `1..=n/2` of every census.
pub fn check_claim(claim: &ExtremalClaim, censuses: &[Census]) -> TheoremReport {
    let (lo, hi) = range_of(censuses);
    let mut report = TheoremReport::new(claim.id, lo, hi);
    for census in censuses {
        let n = census.n;
        for k in 1..=n / 2 {
            let class = ClassLabel::Of(claim.kind, k);
            let Some(record) = census.record(claim.kind, k) else {
                report.not_applicable.push(NotApplicable {
                    n,
                    class,
                    reason: "empty class".into(),
                });
                continue;
            };
            let bound = match (claim.bound)(n, k) {
                Ok(b) => b,
                Err(_) => {
                    let reason = band_note(claim, n, k, record, &mut report);
                    report
                        .not_applicable
                        .push(NotApplicable { n, class, reason });
                    continue;
                }
            };
            report.checked += 1;
            let (observed, argset) = match claim.side {
                Side::Lower => (record.min_s as i64, &record.argmin_codes),
                Side::Upper => (record.max_s as i64, &record.argmax_codes),
            };
            let beyond = |s: u64| match claim.side {
                Side::Lower => (s as i64) < bound,
                Side::Upper => (s as i64) > bound,
            };
            let failure = |kind, witnesses| Failure {
                n,
                class,
                kind,
                expected: bound,
                observed,
                witnesses,
            };
            if beyond(observed as u64) {
                let witnesses = census
                    .members(claim.kind, k)
                    .filter(|t| beyond(t.min_status))
                    .map(|t| t.graph.clone())
                    .collect();
                report
                    .failures
                    .push(failure(FailureKind::BoundViolated, witnesses));
            } else if observed != bound {
                report.failures.push(failure(
                    FailureKind::BoundNotAttained,
                    argset.iter().map(TreeCode::to_graph).collect(),
                ));
            } else {
                let expected_code = (claim.extremal)(n, k).and_then(|g| canonical_code(&g));
                let unique = matches!(&expected_code, Ok(code) if argset.as_slice() == std::slice::from_ref(code));
                if !unique {
                    report.failures.push(failure(
                        FailureKind::ExtremalMismatch,
                        argset.iter().map(TreeCode::to_graph).collect(),
                    ));
                }
            }
        }
    }
    report.finish()
}

/// `gamma = ceil(n/3)` has no sharp tree bound; report the observed maximum and
/// hold it to `floor(n^2/4)`.
fn band_note(
    claim: &ExtremalClaim,
    n: usize,
    k: usize,
    record: &ClassRecord,
    report: &mut TheoremReport,
) -> String {
    let in_band =
        claim.kind == ClassKind::Domination && claim.side == Side::Upper && k == n.div_ceil(3);
    if !in_band {
        return "outside the bound's parameter range".into();
    }
    if let Ok(order_bound) = bound_order(n) {
        if record.max_s as i64 > order_bound {
            report.failures.push(Failure {
                n,
                class: ClassLabel::Of(claim.kind, k),
                kind: FailureKind::BoundViolated,
                expected: order_bound,
                observed: record.max_s as i64,
                witnesses: record.argmax_codes.iter().map(TreeCode::to_graph).collect(),
            });
        }
    }
    format!(
        "gamma = ceil(n/3) band: observed max {} (held only to floor(n^2/4))",
        record.max_s
    )
}

fn range_of(censuses: &[Census]) -> (usize, usize) {
    let lo = censuses.first().map_or(0, |c| c.n);
    let hi = censuses.last().map_or(0, |c| c.n);
    (lo, hi)
}

fn check_range(n_lo: usize, n_hi: usize) -> Result<()> {
    if n_lo < 2 || n_lo > n_hi {
        return Err(invalid(format!(
            "need 2 <= n_lo <= n_hi, got n_lo={n_lo}, n_hi={n_hi}"
        )));
    }
    Ok(())
}

pub fn verify_matching_theorems(n_lo: usize, n_hi: usize) -> Result<[TheoremReport; 2]> {
    check_range(n_lo, n_hi)?;
    let cs = censuses(n_lo, n_hi)?;
    Ok([TheoremId::MatchLower, TheoremId::MatchUpper]
        .map(|id| check_claim(&ExtremalClaim::standard(id).expect("class claim"), &cs)))
}

pub fn verify_domination_theorems(n_lo: usize, n_hi: usize) -> Result<[TheoremReport; 3]> {
    check_range(n_lo, n_hi)?;
    let cs = censuses(n_lo, n_hi)?;
    Ok([
        TheoremId::DomLower,
        TheoremId::DomUpperSmall,
        TheoremId::DomUpperLarge,
    ]
    .map(|id| check_claim(&ExtremalClaim::standard(id).expect("class claim"), &cs)))
}

/// `s(G) <= floor(n^2/4)` over all connected graphs, with equality exactly for
/// the path and the cycle. Orders outside `3..=7` are reported as not applicable.
pub fn verify_order_bound(n_lo: usize, n_hi: usize) -> TheoremReport {
    let mut report = TheoremReport::new(TheoremId::OrderBound, n_lo, n_hi);
    for n in n_lo..=n_hi {
        if !(3..=MAX_GRAPH_ORDER).contains(&n) {
            report.not_applicable.push(NotApplicable {
                n,
                class: ClassLabel::All,
                reason: format!("connected-graph universe covers 3 <= n <= {MAX_GRAPH_ORDER}"),
            });
            continue;
        }
        let bound = bound_order(n).expect("n >= 3");
        let graphs: Vec<(Graph, i64)> = enumerate_connected_graphs(n)
            .expect("within budget")
            .map(|g| {
                let s = min_status(&g) as i64;
                (g, s)
            })
            .collect();
        report.checked += 1;
        let observed = graphs.iter().map(|&(_, s)| s).max().unwrap_or(0);
        let failure = |kind, witnesses| Failure {
            n,
            class: ClassLabel::All,
            kind,
            expected: bound,
            observed,
            witnesses,
        };
        let at = |pred: &dyn Fn(i64) -> bool| -> Vec<Graph> {
            graphs
                .iter()
                .filter(|(_, s)| pred(*s))
                .map(|(g, _)| g.clone())
                .collect()
        };
        if observed > bound {
            report
                .failures
                .push(failure(FailureKind::BoundViolated, at(&|s| s > bound)));
            continue;
        }
        let extremal = at(&|s| s == bound);
        if extremal.is_empty() {
            report
                .failures
                .push(failure(FailureKind::BoundNotAttained, extremal));
            continue;
        }
        let mut expected_keys = vec![
            graph_canonical_key(&make_path(n).expect("n >= 1")).expect("small"),
            graph_canonical_key(&make_cycle(n).expect("n >= 3")).expect("small"),
        ];
        expected_keys.sort_unstable();
        let mut observed_keys: Vec<u64> = extremal
            .iter()
            .map(|g| graph_canonical_key(g).expect("small"))
            .collect();
        observed_keys.sort_unstable();
        if observed_keys != expected_keys {
            report
                .failures
                .push(failure(FailureKind::ExtremalMismatch, extremal));
        }
    }
    report.finish()
}

/// Diameter at most `2n - 3 gamma + 1` whenever `gamma > floor(n/3)`.
pub fn check_diameter_lemma(censuses: &[Census]) -> TheoremReport {
    let (lo, hi) = range_of(censuses);
    let mut report = TheoremReport::new(TheoremId::DiameterLemma, lo, hi);
    for census in censuses {
        let n = census.n;
        for t in census.trees.iter().filter(|t| t.domination > n / 3) {
            report.checked += 1;
            let bound = 2 * n as i64 - 3 * t.domination as i64 + 1;
            if t.diameter as i64 > bound {
                report.failures.push(Failure {
                    n,
                    class: ClassLabel::Of(ClassKind::Domination, t.domination),
                    kind: FailureKind::PropertyViolated,
                    expected: bound,
                    observed: t.diameter as i64,
                    witnesses: vec![t.graph.clone()],
                });
            }
        }
    }
    report.finish()
}

/// Median equals centroid and matches the `w_T(x) <= n/2` criterion on every tree.
pub fn check_median_centroid(censuses: &[Census]) -> TheoremReport {
    let (lo, hi) = range_of(censuses);
    let mut report = TheoremReport::new(TheoremId::MedianCentroid, lo, hi);
    for census in censuses {
        let bad: Vec<&TreeFacts> = census
            .trees
            .par_iter()
            .filter(|t| !median_centroid_agree(&t.graph).unwrap_or(false))
            .collect();
        report.checked += census.trees.len();
        for t in bad {
            report.failures.push(Failure {
                n: census.n,
                class: ClassLabel::All,
                kind: FailureKind::PropertyViolated,
                expected: 1,
                observed: 0,
                witnesses: vec![t.graph.clone()],
            });
        }
    }
    report.finish()
}

pub fn verify_structural_lemmas(n_hi: usize) -> Result<[TheoremReport; 2]> {
    let cs = censuses(1, n_hi)?;
    Ok([check_diameter_lemma(&cs), check_median_centroid(&cs)])
}

/// Runs the requested theorems over `n_lo..=n_hi`, building each census once.
/// Reports come back in the order of `ids`.
pub fn verify(ids: &[TheoremId], n_lo: usize, n_hi: usize) -> Result<Vec<TheoremReport>> {
    check_range(n_lo, n_hi)?;
    let cs = if ids.iter().any(|id| id.needs_census()) {
        censuses(n_lo, n_hi)?
    } else {
        Vec::new()
    };
    Ok(ids
        .iter()
        .map(|&id| match id {
            TheoremId::OrderBound => verify_order_bound(n_lo, n_hi),
            TheoremId::DiameterLemma => check_diameter_lemma(&cs),
            TheoremId::MedianCentroid => check_median_centroid(&cs),
            _ => check_claim(&ExtremalClaim::standard(id).expect("class claim"), &cs),
        })
        .collect())
}
