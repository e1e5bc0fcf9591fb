//! Exhaustive campaigns over the generated graphs.
//!
//! One pass per order classifies every 3-connected graph, collects the
//! exceptional catalogs and checks each structural statement on every
//! instance it applies to. Results are merged in generation order, so
//! reports are byte-identical across thread counts.

use serde::Serialize;

use crate::canon::canonical_graph;
use crate::connectivity::{
    cuts_of_size, fragments_of, lemma5_check, separating_sets, vertex_connectivity, FragmentMode,
};
use crate::contraction::{contractible_by_contraction, tags_for};
use crate::error::{Error, Result};
use crate::graph::{components64, make_named, reach64, BitIter, Graph, NamedFamily};
use crate::graph6::emit_graph6_string;
use crate::structure::{is_complete_minus_edge, is_wheel, minimum_fan, reduced_structure, StructureKind};
use crate::vset::VertexSet;

use super::catalog::{normalize, CatalogEntry, CatalogKind};
use super::generate::{Generator, MAX_ORDER, MIN_ORDER};

pub const SCHEMA: &str = "contracta/1";
pub const MIN_N_MAX: usize = 6;
pub const DEFAULT_DUAL_MAX: usize = 9;
const WITNESS_LIMIT: usize = 16;
const ATTAINER_SAMPLE: usize = 32;

/// The statements checked by a campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// No contractible non-edge only for complete graphs, wheels and the zero catalog.
    ZeroExceptions,
    /// Contractible count at most `n(n-5)/2`; equality only when 4-connected and 4-regular.
    CountBound,
    /// Exactly one contractible non-edge only for `K_n^-` and the one catalog.
    OneExceptions,
    /// Cut-containment and contract-and-test agree on every non-edge.
    DualMethod,
    /// Spanning minimum fans reduce to a semi-wheel or semi-prism on the cut.
    FanReduction,
    /// A 3-cut leaving `k >= 4` components forces `C(k, 2)` contractible non-edges.
    ManyComponents,
    /// Three components, one with a non-spanning fan: at least two.
    PartialFanOfThree,
    /// `|F ∩ T'| >= |F̄' ∩ T|` for intersecting fragments of smallest cuts.
    FragmentInequality,
    /// Three components: at least two, or a zero-catalog graph.
    ThreeComponents,
    /// Two components, neither fan spanning: at least two.
    TwoPartialFans,
    /// Two components, both fans spanning: at least two, or an exception.
    TwoSpanningFans,
    /// Two components, only the one with two vertices spanning.
    SpanningPairSmall,
    /// Two components, only the one with three or more vertices spanning.
    SpanningPairLarge,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::ZeroExceptions,
        Check::CountBound,
        Check::OneExceptions,
        Check::DualMethod,
        Check::FanReduction,
        Check::ManyComponents,
        Check::PartialFanOfThree,
        Check::FragmentInequality,
        Check::ThreeComponents,
        Check::TwoPartialFans,
        Check::TwoSpanningFans,
        Check::SpanningPairSmall,
        Check::SpanningPairLarge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ZeroExceptions => "zero-exceptions",
            Check::CountBound => "count-bound",
            Check::OneExceptions => "one-exceptions",
            Check::DualMethod => "dual-method",
            Check::FanReduction => "fan-reduction",
            Check::ManyComponents => "many-components",
            Check::PartialFanOfThree => "partial-fan-of-three",
            Check::FragmentInequality => "fragment-inequality",
            Check::ThreeComponents => "three-components",
            Check::TwoPartialFans => "two-partial-fans",
            Check::TwoSpanningFans => "two-spanning-fans",
            Check::SpanningPairSmall => "spanning-pair-small",
            Check::SpanningPairLarge => "spanning-pair-large",
        }
    }

    fn index(self) -> usize {
        Check::ALL.iter().position(|&c| c == self).expect("listed")
    }

    fn is_audit(self) -> bool {
        !matches!(self, Check::ZeroExceptions | Check::CountBound | Check::OneExceptions | Check::DualMethod)
    }
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub n_max: usize,
    pub threads: Option<usize>,
    /// Largest order whose non-edges are all re-checked by contraction; 0 disables.
    pub dual_max: usize,
    /// Largest order whose smallest cuts are audited; 0 disables.
    pub audit_max: usize,
    pub theorems: bool,
}

impl CampaignConfig {
    pub fn new(n_max: usize) -> Self {
        CampaignConfig { n_max, threads: None, dual_max: n_max.min(DEFAULT_DUAL_MAX), audit_max: n_max, theorems: true }
    }

    fn validate(&self) -> Result<()> {
        if !(MIN_N_MAX..=MAX_ORDER).contains(&self.n_max) {
            return Err(Error::OrderOutOfRange { n: self.n_max, min: MIN_N_MAX, max: MAX_ORDER });
        }
        Ok(())
    }

    fn enabled(&self, check: Check) -> bool {
        match check {
            Check::DualMethod => self.theorems && self.dual_max >= 5,
            c if c.is_audit() => self.audit_max >= 5,
            _ => self.theorems,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub g6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
struct CheckTally {
    instances: u64,
    failures: u64,
    witnesses: Vec<Witness>,
}

impl CheckTally {
    fn merge(&mut self, other: CheckTally) {
        self.instances += other.instances;
        self.failures += other.failures;
        for w in other.witnesses {
            if self.witnesses.len() < WITNESS_LIMIT {
                self.witnesses.push(w);
            }
        }
    }
}

/// Everything gathered about the graphs of one order.
#[derive(Debug, Clone)]
struct OrderTally {
    n: usize,
    graphs: u64,
    four_connected: u64,
    max_count: usize,
    attainers: u64,
    attainer_sample: Vec<String>,
    zero: Vec<CatalogEntry>,
    one: Vec<CatalogEntry>,
    wheel_seen: bool,
    near_complete_seen: bool,
    uncovered: u64,
    checks: Vec<CheckTally>,
}

impl OrderTally {
    fn new(n: usize) -> Self {
        OrderTally {
            n,
            graphs: 0,
            four_connected: 0,
            max_count: 0,
            attainers: 0,
            attainer_sample: Vec::new(),
            zero: Vec::new(),
            one: Vec::new(),
            wheel_seen: false,
            near_complete_seen: false,
            uncovered: 0,
            checks: vec![CheckTally::default(); Check::ALL.len()],
        }
    }

    fn merge(&mut self, other: OrderTally) {
        let was_empty = self.graphs == 0;
        self.graphs += other.graphs;
        self.four_connected += other.four_connected;
        if other.graphs > 0 {
            if was_empty || other.max_count > self.max_count {
                self.max_count = other.max_count;
                self.attainers = other.attainers;
                self.attainer_sample = other.attainer_sample;
            } else if other.max_count == self.max_count {
                self.attainers += other.attainers;
                for g6 in other.attainer_sample {
                    if self.attainer_sample.len() < ATTAINER_SAMPLE {
                        self.attainer_sample.push(g6);
                    }
                }
            }
        }
        self.zero.extend(other.zero);
        self.one.extend(other.one);
        self.wheel_seen |= other.wheel_seen;
        self.near_complete_seen |= other.near_complete_seen;
        self.uncovered += other.uncovered;
        for (a, b) in self.checks.iter_mut().zip(other.checks) {
            a.merge(b);
        }
    }

    fn record(&mut self, check: Check, ok: bool, g6: &dyn Fn() -> String, detail: impl FnOnce() -> String) {
        let t = &mut self.checks[check.index()];
        t.instances += 1;
        if !ok {
            t.failures += 1;
            if t.witnesses.len() < WITNESS_LIMIT {
                t.witnesses.push(Witness { g6: g6(), detail: detail() });
            }
        }
    }
}

/// Per-graph facts shared by the checks.
struct Facts {
    n: usize,
    kappa: usize,
    count: usize,
    non_edges: usize,
    wheel: bool,
    near_complete: bool,
    zero_member: bool,
    one_member: bool,
}

/// Whether at most one non-edge avoids every 3-cut, stopping at the second.
fn at_most_one_contractible(rows: &[u64]) -> bool {
    let n = rows.len();
    let full = (1u64 << n) - 1;
    let mut found = 0;
    for u in 0..n {
        for v in BitIter(full & !rows[u] & !((2u64 << u) - 1)) {
            let blocked = (0..n).any(|w| {
                let alive = full & !(1 << u) & !(1 << v) & !(1 << w);
                w != u && w != v && reach64(|x| rows[x], alive) != alive
            });
            if !blocked {
                found += 1;
                if found == 2 {
                    return false;
                }
            }
        }
    }
    true
}

fn set_of(mask: u64) -> VertexSet {
    VertexSet::from_words(&[mask])
}

fn show(mask: u64) -> String {
    let v: Vec<String> = BitIter(mask).map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

struct Campaign<'a> {
    cfg: &'a CampaignConfig,
    /// Skip full classification of graphs with two or more contractible non-edges.
    catalogs_only: bool,
}

impl Campaign<'_> {
    fn visit(&self, t: &mut OrderTally, g: Graph) {
        let n = g.order();
        let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
        if self.catalogs_only && !at_most_one_contractible(&rows) {
            t.graphs += 1;
            return;
        }
        t.graphs += 1;
        let cuts: Vec<u64> = separating_sets(&g, 3).iter().map(|c| c.words()[0]).collect();
        let kappa = if cuts.is_empty() { vertex_connectivity(&g).unwrap_or(0) } else { 3 };
        let mut blocked = vec![0u64; n];
        for &c in &cuts {
            for a in BitIter(c) {
                blocked[a] |= c & !rows[a] & !(1 << a);
            }
        }
        let non_edges = n * (n - 1) / 2 - g.size();
        let blocked_pairs = blocked.iter().map(|b| b.count_ones() as usize).sum::<usize>() / 2;
        let count = non_edges - blocked_pairs;
        let wheel = is_wheel(&g);
        let near_complete = is_complete_minus_edge(&g);
        let facts = Facts {
            n,
            kappa,
            count,
            non_edges,
            wheel,
            near_complete,
            zero_member: n >= 5 && count == 0 && non_edges > 0 && !wheel,
            one_member: n >= 5 && count == 1 && !near_complete,
        };
        let g6 = || emit_graph6_string(&g);

        if kappa >= 4 {
            t.four_connected += 1;
        }
        if count > t.max_count || t.graphs == 1 {
            t.max_count = count;
            t.attainers = 0;
            t.attainer_sample.clear();
        }
        if count == t.max_count {
            t.attainers += 1;
            if t.attainer_sample.len() < ATTAINER_SAMPLE {
                t.attainer_sample.push(g6());
            }
        }
        if facts.zero_member || facts.one_member {
            let entry = CatalogEntry::probe(&g, kappa, count, tags_for(&g)).unwrap_or_else(|e| CatalogEntry {
                g6: g6(),
                n,
                kappa,
                contractible_count: count,
                tags: tags_for(&g),
                annotations: vec![format!("probe failed: {e}")],
            });
            if facts.zero_member {
                t.zero.push(entry);
            } else {
                t.one.push(entry);
            }
        }
        t.wheel_seen |= wheel;
        t.near_complete_seen |= near_complete && n >= 5;

        if self.cfg.enabled(Check::ZeroExceptions) {
            self.theorem_checks(t, &g, &facts, &rows, &blocked);
        }
        if self.cfg.enabled(Check::FanReduction) && n <= self.cfg.audit_max {
            self.audit(t, &g, &facts, &rows, &cuts);
        }
    }

    fn theorem_checks(&self, t: &mut OrderTally, g: &Graph, f: &Facts, rows: &[u64], blocked: &[u64]) {
        let n = f.n;
        let g6 = || emit_graph6_string(g);
        if n >= 5 && f.count == 0 {
            // Membership in the zero catalog is by definition; wheels are checked below.
            t.record(Check::ZeroExceptions, true, &g6, String::new);
        }
        if f.wheel {
            t.record(Check::ZeroExceptions, f.count == 0, &g6, || {
                format!("wheel with {} contractible non-edges", f.count)
            });
        }
        if n >= 5 && f.count == 1 {
            t.record(Check::OneExceptions, true, &g6, String::new);
        }
        if f.near_complete && n >= 5 {
            t.record(Check::OneExceptions, f.count == 1, &g6, || {
                format!("complete minus an edge with {} contractible non-edges", f.count)
            });
        }
        if n >= 6 {
            let bound = n * (n - 5) / 2;
            let regular4 = rows.iter().all(|r| r.count_ones() == 4);
            let ok = f.count < bound || (f.count == bound && (n < 7 || (f.kappa >= 4 && regular4)));
            t.record(Check::CountBound, ok, &g6, || {
                format!("count {} vs bound {bound}, kappa {}, 4-regular {regular4}", f.count, f.kappa)
            });
        }
        if n >= 5 && n <= self.cfg.dual_max && self.cfg.enabled(Check::DualMethod) {
            for a in 0..n {
                for b in a + 1..n {
                    if rows[a] >> b & 1 == 1 {
                        continue;
                    }
                    let by_cuts = blocked[a] >> b & 1 == 0;
                    let by_contraction = contractible_by_contraction(g, a, b).unwrap_or(!by_cuts);
                    t.record(Check::DualMethod, by_cuts == by_contraction, &g6, || {
                        format!("non-edge {{{a},{b}}}: cuts {by_cuts}, contraction {by_contraction}")
                    });
                }
            }
        }
    }

    fn audit(&self, t: &mut OrderTally, g: &Graph, f: &Facts, rows: &[u64], cuts: &[u64]) {
        let n = f.n;
        let full = (1u64 << n) - 1;
        let g6 = || emit_graph6_string(g);
        let at_least_two = f.count >= 2;
        for &c in cuts {
            let comps = components64(|v| rows[v], full & !c);
            let k = comps.len();
            let s = set_of(c);
            if k >= 4 {
                let need = k * (k - 1) / 2;
                t.record(Check::ManyComponents, f.count >= need, &g6, || {
                    format!("cut {}: {k} components, {} contractible", show(c), f.count)
                });
            }
            let mut spanning = Vec::with_capacity(k);
            for &comp in &comps {
                let cs = set_of(comp);
                let fan = match minimum_fan(g, &s, &cs) {
                    Ok((fan, _)) => fan,
                    Err(e) => {
                        t.record(Check::FanReduction, false, &g6, || format!("cut {}: {e}", show(c)));
                        spanning.push(false);
                        continue;
                    }
                };
                let spans = fan.order() == comp.count_ones() as usize + 3;
                let tree_shaped = fan.order() == fan.edge_count() + 1;
                let reduced = if spans {
                    match reduced_structure(g, &fan, &s) {
                        Ok(r) => r.boundary == s && r.kind != StructureKind::None,
                        Err(_) => false,
                    }
                } else {
                    true
                };
                t.record(Check::FanReduction, tree_shaped && reduced, &g6, || {
                    format!(
                        "cut {}, component {}: fan order {}, edges {}, reduces {reduced}",
                        show(c),
                        show(comp),
                        fan.order(),
                        fan.edge_count()
                    )
                });
                spanning.push(spans);
            }
            let detail = || format!("cut {}: {k} components, {} contractible", show(c), f.count);
            match k {
                3 => {
                    if spanning.iter().any(|&s| !s) {
                        t.record(Check::PartialFanOfThree, at_least_two, &g6, detail);
                    }
                    t.record(Check::ThreeComponents, at_least_two || f.zero_member, &g6, detail);
                }
                2 => match (spanning[0], spanning[1]) {
                    (false, false) => t.record(Check::TwoPartialFans, at_least_two, &g6, detail),
                    (true, true) => {
                        let excused = (n == 5 && f.near_complete) || f.wheel || f.zero_member || f.one_member;
                        t.record(Check::TwoSpanningFans, at_least_two || excused, &g6, detail);
                    }
                    (a, _) => {
                        let spanning_size = comps[if a { 0 } else { 1 }].count_ones();
                        let ok = at_least_two || f.zero_member || f.one_member;
                        match spanning_size {
                            1 => t.uncovered += 1,
                            2 => t.record(Check::SpanningPairSmall, ok, &g6, detail),
                            _ => t.record(Check::SpanningPairLarge, ok, &g6, detail),
                        }
                    }
                },
                _ => {}
            }
        }

        let smallest = if f.kappa == 3 {
            cuts.iter()
                .map(|&c| crate::connectivity::CutRecord {
                    cut: set_of(c),
                    components: components64(|v| rows[v], full & !c).into_iter().map(set_of).collect(),
                })
                .collect()
        } else if f.non_edges > 0 {
            cuts_of_size(g, f.kappa)
        } else {
            Vec::new()
        };
        let frags: Vec<_> = smallest.iter().flat_map(|r| fragments_of(g, r, FragmentMode::Exhaustive)).collect();
        for a in &frags {
            for b in &frags {
                let ok = lemma5_check(a, b).unwrap_or(false);
                t.record(Check::FragmentInequality, ok, &g6, || {
                    format!(
                        "fragment {:?} of {:?} against {:?} of {:?}",
                        a.vertices.to_vec(),
                        a.cut.to_vec(),
                        b.vertices.to_vec(),
                        b.cut.to_vec()
                    )
                });
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: u64,
    pub four_connected: u64,
    pub max_contractible: usize,
    /// `n(n-5)/2`, for `n >= 6`.
    pub bound: Option<usize>,
    pub attainers: u64,
    pub attainer_sample: Vec<String>,
    pub zero_exceptional: usize,
    pub one_exceptional: usize,
    /// Two-component cuts whose only spanning side is a single vertex; no check applies.
    pub uncovered_instances: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub instances: u64,
    pub failures: u64,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogSummary {
    pub size: usize,
    /// `[order, members]` pairs.
    pub by_order: Vec<[usize; 2]>,
    pub largest_order: Option<usize>,
    /// At least one order above the largest member was enumerated without new members.
    pub stable: bool,
    pub members: Vec<CatalogEntry>,
}

impl CatalogSummary {
    fn new(mut members: Vec<CatalogEntry>, n_max: usize) -> Self {
        normalize(&mut members);
        let mut by_order: Vec<[usize; 2]> = Vec::new();
        for e in &members {
            match by_order.last_mut() {
                Some(last) if last[0] == e.n => last[1] += 1,
                _ => by_order.push([e.n, 1]),
            }
        }
        let largest_order = members.iter().map(|e| e.n).max();
        let stable = largest_order.is_some_and(|l| l < n_max);
        CatalogSummary { size: members.len(), by_order, largest_order, stable, members }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema: String,
    pub n_range: [usize; 2],
    pub dual_method_max: usize,
    pub audit_max: usize,
    pub graphs_processed: u64,
    pub orders: Vec<OrderSummary>,
    pub checks: Vec<CheckResult>,
    pub zero_catalog: CatalogSummary,
    pub one_catalog: CatalogSummary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn catalog(&self, kind: CatalogKind) -> &CatalogSummary {
        match kind {
            CatalogKind::Zero => &self.zero_catalog,
            CatalogKind::One => &self.one_catalog,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check: `name: STATUS (instances, failures)`.
    pub fn summary_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{:<22} {} ({} instances, {} failures)", c.name, c.status, c.instances, c.failures))
            .collect()
    }
}

/// Runs one campaign over every order `4..=n_max`.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    Ok(finish(cfg, tallies(cfg, MIN_ORDER, false)?))
}

fn tallies(cfg: &CampaignConfig, from: usize, catalogs_only: bool) -> Result<Vec<OrderTally>> {
    let campaign = Campaign { cfg, catalogs_only };
    let mut out = Vec::new();
    for n in from..=cfg.n_max {
        let gen = Generator::new(n)?.threads(cfg.threads);
        out.push(gen.fold(|| OrderTally::new(n), |t, g| campaign.visit(t, g), |a, b| a.merge(b)));
    }
    Ok(out)
}

fn finish(cfg: &CampaignConfig, mut tallies: Vec<OrderTally>) -> VerificationReport {
    let mut checks = vec![CheckTally::default(); Check::ALL.len()];
    if cfg.theorems {
        for t in tallies.iter_mut() {
            let n = t.n;
            if n >= 5 && !t.wheel_seen {
                let w = canonical_graph(&make_named(NamedFamily::Wheel(n)).expect("n >= 5"));
                let g6 = || emit_graph6_string(&w);
                t.record(Check::ZeroExceptions, false, &g6, || format!("wheel of order {n} was not generated"));
            }
            if n >= 5 && !t.near_complete_seen {
                let k = canonical_graph(&make_named(NamedFamily::CompleteMinusEdge(n)).expect("n >= 5"));
                let g6 = || emit_graph6_string(&k);
                t.record(Check::OneExceptions, false, &g6, || {
                    format!("complete graph minus an edge of order {n} was not generated")
                });
            }
            if n == 6 {
                let sample = t.attainer_sample.first().cloned().unwrap_or_default();
                let max = t.max_count;
                t.record(Check::CountBound, max == 3, &|| sample.clone(), || format!("maximum at order 6 is {max}"));
            }
        }
    }
    let mut orders = Vec::new();
    let (mut zero, mut one) = (Vec::new(), Vec::new());
    let mut processed = 0;
    for t in tallies {
        processed += t.graphs;
        orders.push(OrderSummary {
            n: t.n,
            graphs: t.graphs,
            four_connected: t.four_connected,
            max_contractible: t.max_count,
            bound: (t.n >= 6).then(|| t.n * (t.n - 5) / 2),
            attainers: t.attainers,
            attainer_sample: t.attainer_sample,
            zero_exceptional: t.zero.len(),
            one_exceptional: t.one.len(),
            uncovered_instances: t.uncovered,
        });
        zero.extend(t.zero);
        one.extend(t.one);
        for (a, b) in checks.iter_mut().zip(t.checks) {
            a.merge(b);
        }
    }
    let checks = Check::ALL
        .iter()
        .zip(checks)
        .map(|(&c, tally)| CheckResult {
            name: c.name().to_string(),
            status: if !cfg.enabled(c) {
                Status::Skipped
            } else if tally.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            instances: tally.instances,
            failures: tally.failures,
            witnesses: tally.witnesses,
        })
        .collect();
    VerificationReport {
        schema: SCHEMA.to_string(),
        n_range: [MIN_ORDER, cfg.n_max],
        dual_method_max: if cfg.enabled(Check::DualMethod) { cfg.dual_max } else { 0 },
        audit_max: if cfg.enabled(Check::FanReduction) { cfg.audit_max.min(cfg.n_max) } else { 0 },
        graphs_processed: processed,
        orders,
        checks,
        zero_catalog: CatalogSummary::new(zero, cfg.n_max),
        one_catalog: CatalogSummary::new(one, cfg.n_max),
    }
}

/// Theorem-level checks (exceptions, count bound, dual method) without the cut audit.
pub fn verify_theorems(n_max: usize) -> Result<VerificationReport> {
    run_campaign(&CampaignConfig { audit_max: 0, ..CampaignConfig::new(n_max) })
}

/// Cut-level audit of every smallest cut of every graph up to `n_max`.
pub fn lemma_audit(n_max: usize) -> Result<VerificationReport> {
    run_campaign(&CampaignConfig { theorems: false, dual_max: 0, ..CampaignConfig::new(n_max) })
}

/// The zero and one catalogs up to `n_max`, sorted by `(n, g6)`.
pub fn derive_catalogs(n_max: usize) -> Result<(Vec<CatalogEntry>, Vec<CatalogEntry>)> {
    derive_catalogs_with(n_max, None)
}

pub fn derive_catalogs_with(n_max: usize, threads: Option<usize>) -> Result<(Vec<CatalogEntry>, Vec<CatalogEntry>)> {
    CampaignConfig::new(n_max).validate()?;
    catalogs_between(MIN_ORDER, n_max, threads)
}

/// Catalog members of orders `from..=to` only. Graphs with two or more
/// contractible non-edges are dismissed after finding the second one.
pub fn catalogs_between(
    from: usize,
    to: usize,
    threads: Option<usize>,
) -> Result<(Vec<CatalogEntry>, Vec<CatalogEntry>)> {
    let cfg = CampaignConfig { theorems: false, dual_max: 0, audit_max: 0, threads, n_max: to };
    if !(MIN_ORDER..=MAX_ORDER).contains(&to) {
        return Err(Error::OrderOutOfRange { n: to, min: MIN_ORDER, max: MAX_ORDER });
    }
    let (mut zero, mut one) = (Vec::new(), Vec::new());
    for t in tallies(&cfg, from.max(MIN_ORDER), true)? {
        zero.extend(t.zero);
        one.extend(t.one);
    }
    normalize(&mut zero);
    normalize(&mut one);
    Ok((zero, one))
}
