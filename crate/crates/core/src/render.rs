//! Presentation: JSON serialization and ASCII drawings of tableaux, pairs,
//! cycles, partitions, and operator graphs.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cells::CellPartition;
use crate::cycles::{Cycle, CycleKind};
use crate::error::{Error, Result};
use crate::insertion::TableauPair;
use crate::operators::Operator;
use crate::signed_perm::SignedPermutation;
use crate::tableau::{Domino, DominoTableau, Square};

#[derive(Serialize, Deserialize)]
struct DominoDto {
    label: u32,
    cells: [[usize; 2]; 2],
}

#[derive(Serialize, Deserialize)]
struct TableauDto {
    rank: usize,
    dominoes: Vec<DominoDto>,
}

pub fn tableau_to_json(t: &DominoTableau) -> Value {
    let dominoes: Vec<DominoDto> = t
        .dominos()
        .iter()
        .map(|(&label, d)| {
            let [a, b] = d.cells();
            DominoDto {
                label,
                cells: [[a.row, a.col], [b.row, b.col]],
            }
        })
        .collect();
    serde_json::to_value(TableauDto {
        rank: t.rank(),
        dominoes,
    })
    .expect("tableau serializes")
}

pub fn tableau_from_json(v: &Value) -> Result<DominoTableau> {
    let dto: TableauDto =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("tableau: {e}")))?;
    let mut dominos = std::collections::BTreeMap::new();
    for d in dto.dominoes {
        let [[r1, c1], [r2, c2]] = d.cells;
        if r1.min(c1).min(r2).min(c2) == 0 {
            return Err(Error::Parse(format!("domino {}: zero coordinate", d.label)));
        }
        let dom = Domino::new(Square::new(r1, c1), Square::new(r2, c2))
            .ok_or_else(|| Error::Parse(format!("domino {}: cells not adjacent", d.label)))?;
        if dominos.insert(d.label, dom).is_some() {
            return Err(Error::DuplicateLabel(d.label));
        }
    }
    DominoTableau::from_dominos(dto.rank, dominos)
}

pub fn pair_to_json(p: &TableauPair) -> Value {
    json!({
        "left": tableau_to_json(p.left()),
        "right": tableau_to_json(p.right()),
    })
}

pub fn pair_from_json(v: &Value) -> Result<TableauPair> {
    let left = tableau_from_json(v.get("left").ok_or_else(|| Error::Parse("missing left".into()))?)?;
    let right =
        tableau_from_json(v.get("right").ok_or_else(|| Error::Parse("missing right".into()))?)?;
    TableauPair::new(left, right)
}

pub fn cycle_to_json(c: &Cycle) -> Value {
    let kind = match c.kind {
        CycleKind::Closed => "closed",
        CycleKind::OpenCore => "open-core",
        CycleKind::OpenNonCore => "open-noncore",
    };
    let mut v = json!({
        "labels": c.labels.iter().collect::<Vec<_>>(),
        "kind": kind,
    });
    if let Some(b) = c.back {
        v["sb"] = json!([b.row, b.col]);
    }
    if let Some(f) = c.front {
        v["sf"] = json!([f.row, f.col]);
    }
    v
}

pub fn partition_to_json(p: &CellPartition) -> Value {
    json!({
        "kind": p.kind.as_str(),
        "n": p.n,
        "rank": p.rank,
        "blocks": p
            .blocks
            .iter()
            .map(|b| b.iter().map(|w| w.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

/// Draws the tableau with fused boxes: core squares render as "." and each
/// domino shows its label once, with no wall between its two cells.
pub fn ascii_tableau(t: &DominoTableau) -> String {
    let shape = t.shape();
    if shape.is_empty() {
        return "(empty)\n".to_string();
    }
    let label_width = t
        .dominos()
        .keys()
        .map(|l| l.to_string().len())
        .max()
        .unwrap_or(1);
    let w = label_width + 2;
    let rows = shape.len();
    let cols = shape[0];
    let mut grid = vec![vec![' '; cols * w + 1]; rows * 2 + 1];
    let same = |a: Square, b: Square| -> bool {
        match (t.label_at(a), t.label_at(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    };
    for (i, &len) in shape.iter().enumerate() {
        let i = i + 1;
        for j in 1..=len {
            let here = Square::new(i, j);
            let top = 2 * (i - 1);
            let bottom = 2 * i;
            let left = (j - 1) * w;
            let right = j * w;
            if !(i > 1 && same(here, Square::new(i - 1, j))) {
                for x in left + 1..right {
                    grid[top][x] = '-';
                }
            }
            if !same(here, Square::new(i + 1, j)) {
                for x in left + 1..right {
                    grid[bottom][x] = '-';
                }
            }
            if !(j > 1 && same(here, Square::new(i, j - 1))) {
                grid[top + 1][left] = '|';
            }
            if !same(here, Square::new(i, j + 1)) {
                grid[top + 1][right] = '|';
            }
            for (y, x) in [(top, left), (top, right), (bottom, left), (bottom, right)] {
                grid[y][x] = '+';
            }
            let text = match t.label_at(here) {
                Some(l) if t.domino(l).expect("label present").cells()[0] == here => l.to_string(),
                Some(_) => String::new(),
                None => ".".to_string(),
            };
            let pad = (w - 1 - text.len()) / 2;
            for (k, ch) in text.chars().enumerate() {
                grid[top + 1][left + 1 + pad + k] = ch;
            }
        }
    }
    let mut out = String::new();
    for line in grid {
        let s: String = line.into_iter().collect();
        let trimmed = s.trim_end();
        if !trimmed.is_empty() {
            out.push_str(trimmed);
            out.push('\n');
        }
    }
    out
}

pub fn ascii_pair(p: &TableauPair) -> String {
    format!(
        "left:\n{}right:\n{}",
        ascii_tableau(p.left()),
        ascii_tableau(p.right())
    )
}

pub fn ascii_cycle(c: &Cycle) -> String {
    let labels: Vec<String> = c.labels.iter().map(|l| l.to_string()).collect();
    let mut line = format!(
        "{{{}}}: {}",
        labels.join(","),
        match c.kind {
            CycleKind::Closed => "closed",
            CycleKind::OpenCore => "open-core",
            CycleKind::OpenNonCore => "open-noncore",
        }
    );
    if let (Some(b), Some(f)) = (c.back, c.front) {
        line.push_str(&format!(" sb=({},{}) sf=({},{})", b.row, b.col, f.row, f.col));
    }
    line.push('\n');
    line
}

pub fn ascii_partition(p: &CellPartition) -> String {
    let mut out = format!(
        "{} n={} rank={} blocks={}\n",
        p.kind.as_str(),
        p.n,
        p.rank,
        p.blocks.len()
    );
    for b in &p.blocks {
        let words: Vec<String> = b.iter().map(|w| w.to_string()).collect();
        out.push_str(&format!("{{{}}}\n", words.join(" | ")));
    }
    out
}

/// DOT text for the operator graph on W_n; one undirected edge per
/// unordered pair, labeled by the operator that realizes it.
pub fn graph_dot(
    n: usize,
    rank: usize,
    nodes: &[SignedPermutation],
    edges: &[(SignedPermutation, Operator, SignedPermutation)],
) -> String {
    let mut out = format!("graph lambda_n{n}_r{rank} {{\n");
    for w in nodes {
        out.push_str(&format!("  \"{w}\";\n"));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (a, op, b) in edges {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if seen.insert((lo.clone(), hi.clone(), *op)) {
            out.push_str(&format!("  \"{lo}\" -- \"{hi}\" [label=\"{op}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}
