//! Exceptional-graph catalogs and their on-disk format.
//!
//! A catalog file holds one canonical graph6 string per line; the `#` lines
//! right before an entry carry structural notes about it.

use std::io::{BufRead, Write};
use std::path::Path;

use serde::Serialize;

use crate::connectivity::separating_sets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6_string, parse_line};
use crate::structure::{minimum_fan, recognize_reduced, FamilyTag, StructureKind};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    /// No contractible non-edge, neither complete nor a wheel.
    Zero,
    /// Exactly one contractible non-edge, not a complete graph minus an edge.
    One,
}

impl CatalogKind {
    pub fn file_name(self) -> &'static str {
        match self {
            CatalogKind::Zero => "zero-contractible.g6",
            CatalogKind::One => "one-contractible.g6",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CatalogKind::Zero => "zero",
            CatalogKind::One => "one",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogEntry {
    pub g6: String,
    pub n: usize,
    pub kappa: usize,
    pub contractible_count: usize,
    pub tags: Vec<FamilyTag>,
    pub annotations: Vec<String>,
}

impl CatalogEntry {
    /// Builds an entry for `g` (expected canonical) and fills the annotations
    /// from its 3-cuts: component sizes and the shape of each minimum fan.
    pub fn probe(g: &Graph, kappa: usize, contractible_count: usize, tags: Vec<FamilyTag>) -> Result<Self> {
        let n = g.order();
        let tag_text: Vec<String> = tags.iter().map(|t| t.to_string()).collect();
        let mut annotations =
            vec![format!("n={n} kappa={kappa} contractible={contractible_count} tags={}", tag_text.join(","))];
        if kappa == 3 {
            for cut in separating_sets(g, 3) {
                annotations.push(describe_cut(g, &cut)?);
            }
        }
        Ok(CatalogEntry { g6: emit_graph6_string(g), n, kappa, contractible_count, tags, annotations })
    }
}

fn describe_cut(g: &Graph, cut: &VertexSet) -> Result<String> {
    let s = cut.to_vec();
    let inside = [(0, 1), (0, 2), (1, 2)].iter().filter(|&&(i, j)| g.has_edge(s[i], s[j])).count();
    let comps = g.components_within(&g.vertex_set().difference(cut));
    let sizes: Vec<String> = comps.iter().map(|c| c.len().to_string()).collect();
    let mut shapes = Vec::with_capacity(comps.len());
    for comp in &comps {
        let (fan, _) = minimum_fan(g, cut, comp)?;
        let shape = if fan.order() == comp.len() + 3 {
            match recognize_reduced(g, comp, &[s[0], s[1], s[2]]) {
                StructureKind::SemiWheel { order, .. } => format!("SW{order}"),
                StructureKind::SemiPrism { .. } => "SPr".to_string(),
                StructureKind::None => "unrecognized".to_string(),
            }
        } else {
            format!("partial({})", fan.order())
        };
        shapes.push(shape);
    }
    Ok(format!(
        "cut {{{},{},{}}} edges-inside={inside}: {} components of sizes {}; fans {}",
        s[0],
        s[1],
        s[2],
        comps.len(),
        sizes.join("+"),
        shapes.join(" ")
    ))
}

/// Sorts by `(n, g6)` and drops repeated graphs.
pub fn normalize(entries: &mut Vec<CatalogEntry>) {
    entries.sort_by(|a, b| (a.n, &a.g6).cmp(&(b.n, &b.g6)));
    entries.dedup_by(|a, b| a.g6 == b.g6);
}

pub fn render_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        for a in &e.annotations {
            out.push_str("# ");
            out.push_str(a);
            out.push('\n');
        }
        out.push_str(&e.g6);
        out.push('\n');
    }
    out
}

pub fn write_catalog(path: &Path, entries: &[CatalogEntry]) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(render_catalog(entries).as_bytes())?;
    Ok(())
}

/// Graphs of a catalog file, skipping annotation and blank lines.
pub fn read_catalog(reader: impl BufRead) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(parse_line(t.as_bytes()).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse { offset, message: format!("line {}: {message}", i + 1) },
            other => other,
        })?);
    }
    Ok(out)
}
