//! Non-edges, contractibility and per-graph classification.
//!
//! A non-edge `{u, v}` of a 3-connected graph fails to be contractible exactly
//! when some 3-cut contains both ends: any separator of `G/uv` of size at most
//! two must contain the merged vertex. The cut table is the production path;
//! contracting and re-measuring connectivity is kept as an independent check.

use serde::Serialize;

use crate::connectivity::{cuts_of_size, is_k_connected, vertex_connectivity, CutRecord};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{recognize_family, FamilyTag};

/// Unordered non-adjacent pairs `(u, v)`, `u < v`, lexicographic.
pub fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2 - g.size());
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Contract `{u, v}` and test whether the result is still 3-connected.
pub fn contractible_by_contraction(g: &Graph, u: usize, v: usize) -> Result<bool> {
    Ok(is_k_connected(&g.contract_pair(u, v)?, 3))
}

/// True unless some 3-cut in `cuts` contains both `u` and `v`.
pub fn contractible_by_cuts(cuts: &[CutRecord], u: usize, v: usize) -> bool {
    !cuts.iter().any(|t| t.cut.len() == 3 && t.cut.contains(u) && t.cut.contains(v))
}

/// Smallest cuts of a 3-connected graph, computed once and shared by every
/// non-edge query on it.
#[derive(Debug, Clone)]
pub struct CutTable {
    pub kappa: usize,
    pub cuts: Vec<CutRecord>,
}

impl CutTable {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n < 5 {
            return Err(Error::TooSmall { order: n, min: 5 });
        }
        let kappa = vertex_connectivity(g)?;
        if kappa < 3 {
            return Err(Error::ConnectivityTooLow { kappa, required: 3 });
        }
        let cuts = if kappa == 3 { cuts_of_size(g, 3) } else { Vec::new() };
        Ok(CutTable { kappa, cuts })
    }

    pub fn is_contractible(&self, u: usize, v: usize) -> bool {
        contractible_by_cuts(&self.cuts, u, v)
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if g.order() < 5 {
        return Err(Error::TooSmall { order: g.order(), min: 5 });
    }
    if g.has_edge(u, v) {
        return Err(Error::NotANonEdge(u, v));
    }
    Ok(())
}

/// Contractibility of the non-edge `{u, v}` in a 3-connected graph with at
/// least five vertices. Debug builds also run the contraction test and report
/// any mismatch as [`Error::Disagreement`].
pub fn is_contractible(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if cfg!(debug_assertions) {
        return is_contractible_verified(g, u, v);
    }
    check_pair(g, u, v)?;
    Ok(CutTable::new(g)?.is_contractible(u, v))
}

/// Runs both tests and insists they agree.
pub fn is_contractible_verified(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_pair(g, u, v)?;
    let table = CutTable::new(g)?;
    let by_cuts = table.is_contractible(u, v);
    let by_contraction = contractible_by_contraction(g, u, v)?;
    if by_cuts != by_contraction {
        return Err(Error::Disagreement(format!(
            "non-edge {{{u},{v}}}: cut test says {by_cuts}, contraction test says {by_contraction}"
        )));
    }
    Ok(by_cuts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub n: usize,
    pub kappa: usize,
    pub non_edge_count: usize,
    pub contractible: Vec<(usize, usize)>,
    pub tags: Vec<FamilyTag>,
}

impl Classification {
    pub fn contractible_count(&self) -> usize {
        self.contractible.len()
    }
}

pub fn classify(g: &Graph) -> Result<Classification> {
    classify_with(g, cfg!(debug_assertions))
}

/// Classification; with `verify` set every non-edge is also checked by
/// contraction.
pub fn classify_with(g: &Graph, verify: bool) -> Result<Classification> {
    let n = g.order();
    if n >= 4 && g.is_complete() {
        return Ok(Classification { n, kappa: n - 1, non_edge_count: 0, contractible: Vec::new(), tags: tags_for(g) });
    }
    let table = CutTable::new(g)?;
    classify_from_table(g, &table, verify)
}

pub fn classify_from_table(g: &Graph, table: &CutTable, verify: bool) -> Result<Classification> {
    let pairs = non_edges(g);
    let mut contractible = Vec::new();
    for &(u, v) in &pairs {
        let yes = table.is_contractible(u, v);
        if verify {
            let other = contractible_by_contraction(g, u, v)?;
            if other != yes {
                return Err(Error::Disagreement(format!(
                    "non-edge {{{u},{v}}}: cut test says {yes}, contraction test says {other}"
                )));
            }
        }
        if yes {
            contractible.push((u, v));
        }
    }
    Ok(Classification {
        n: g.order(),
        kappa: table.kappa,
        non_edge_count: pairs.len(),
        contractible,
        tags: tags_for(g),
    })
}

/// Family tags, with `Other` appended when no named family matched.
pub fn tags_for(g: &Graph) -> Vec<FamilyTag> {
    let mut tags = recognize_family(g);
    if !tags.iter().any(|t| matches!(t, FamilyTag::Complete | FamilyTag::CompleteMinusEdge | FamilyTag::Wheel(_))) {
        tags.push(FamilyTag::Other);
    }
    tags
}
