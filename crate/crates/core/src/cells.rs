//! Cell partitions of W_n under the correspondence, operator components,
//! and the verification suites tying the two together.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::cycles::{cycles, move_through_set, special_form, Cycle, CycleKind};
use crate::error::{Error, Result};
use crate::insertion::{rs_inverse, rs_map, Side, TableauPair};
use crate::operators::{applicable, apply, lambda_set, Operator};
use crate::signed_perm::{enumerate_group, SignedPermutation};
use crate::tableau::DominoTableau;

/// Which grouping a partition of W_n represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    /// Equal right tableau.
    IrreducibleLeft,
    /// Equal left tableau.
    IrreducibleRight,
    /// Right tableaux equal after normalizing with `special_form`.
    ReducibleLeft,
    /// Left tableaux equal after normalizing with `special_form`.
    ReducibleRight,
    /// Connected components of the operator graph.
    Components,
}

impl PartitionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PartitionKind::IrreducibleLeft => "irreducible-left",
            PartitionKind::IrreducibleRight => "irreducible-right",
            PartitionKind::ReducibleLeft => "reducible-left",
            PartitionKind::ReducibleRight => "reducible-right",
            PartitionKind::Components => "components",
        }
    }
}

/// A partition of W_n into canonical blocks: every block is sorted and the
/// blocks are ordered by their least member, so two partitions are equal
/// exactly when they have equal `blocks`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    pub kind: PartitionKind,
    pub n: usize,
    pub rank: usize,
    pub blocks: Vec<Vec<SignedPermutation>>,
}

impl CellPartition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing the word, if any.
    pub fn block_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(w).is_ok())
    }
}

fn canonical_blocks<K: Ord>(groups: BTreeMap<K, Vec<SignedPermutation>>) -> Vec<Vec<SignedPermutation>> {
    let mut blocks: Vec<Vec<SignedPermutation>> = groups
        .into_values()
        .map(|mut b| {
            b.sort();
            b
        })
        .collect();
    blocks.sort();
    blocks
}

/// The tableau that controls the given flavor of cell: words share a left
/// cell when their right tableaux agree, and vice versa.
fn cell_tableau(pair: TableauPair, side: Side) -> DominoTableau {
    let (left, right) = pair.into_parts();
    match side {
        Side::Left => right,
        Side::Right => left,
    }
}

/// Groups W_n by the controlling tableau itself.
pub fn partition_irreducible(n: usize, rank: usize, side: Side) -> Result<CellPartition> {
    let mut groups: BTreeMap<DominoTableau, Vec<SignedPermutation>> = BTreeMap::new();
    for w in enumerate_group(n)? {
        let key = cell_tableau(rs_map(&w, rank), side);
        groups.entry(key).or_default().push(w);
    }
    let kind = match side {
        Side::Left => PartitionKind::IrreducibleLeft,
        Side::Right => PartitionKind::IrreducibleRight,
    };
    Ok(CellPartition { kind, n, rank, blocks: canonical_blocks(groups) })
}

/// Groups W_n by the normal form of the controlling tableau, i.e. up to
/// moving through non-core open cycles.
pub fn partition_reducible(n: usize, rank: usize, side: Side) -> Result<CellPartition> {
    let mut groups: BTreeMap<DominoTableau, Vec<SignedPermutation>> = BTreeMap::new();
    let mut raw_keys: Vec<DominoTableau> = Vec::new();
    for w in enumerate_group(n)? {
        let raw = cell_tableau(rs_map(&w, rank), side);
        groups.entry(special_form(&raw)).or_default().push(w);
        raw_keys.push(raw);
    }
    #[cfg(debug_assertions)]
    if n <= 3 {
        assert_orbits_match_normal_forms(&raw_keys);
    }
    #[cfg(not(debug_assertions))]
    let _ = raw_keys;
    let kind = match side {
        Side::Left => PartitionKind::ReducibleLeft,
        Side::Right => PartitionKind::ReducibleRight,
    };
    Ok(CellPartition { kind, n, rank, blocks: canonical_blocks(groups) })
}

/// Cross-checks the normal-form grouping against the literal orbit
/// equivalence: tableaux related by moving through a set of non-core open
/// cycles must share a normal form, and conversely.
#[cfg(debug_assertions)]
fn assert_orbits_match_normal_forms(raw_keys: &[DominoTableau]) {
    let mut index: BTreeMap<&DominoTableau, usize> = BTreeMap::new();
    for t in raw_keys {
        let next = index.len();
        index.entry(t).or_insert(next);
    }
    let mut uf = UnionFind::new(index.len());
    for (&t, &i) in &index {
        let open: Vec<Cycle> = cycles(t)
            .into_iter()
            .filter(|c| c.kind == CycleKind::OpenNonCore)
            .collect();
        for mask in 0..(1u32 << open.len()) {
            let chosen: Vec<Cycle> = open
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, c)| c.clone())
                .collect();
            let moved = move_through_set(t, &chosen).expect("non-core moves stay valid");
            if let Some(&j) = index.get(&moved) {
                uf.union(i, j);
            }
        }
    }
    for (&t, &i) in &index {
        for (&u, &j) in &index {
            let same_orbit = uf.find(i) == uf.find(j);
            let same_form = special_form(t) == special_form(u);
            assert_eq!(same_orbit, same_form, "orbit equivalence matches the normal form");
        }
    }
}

/// Connected components of the graph on W_n whose edges join w to op(w)
/// for every in-domain operator of the rank-r family.
pub fn operator_components(n: usize, rank: usize) -> Result<CellPartition> {
    let words = enumerate_group(n)?;
    let index: BTreeMap<&SignedPermutation, usize> =
        words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let ops = lambda_set(n, rank);
    let mut uf = UnionFind::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for &op in &ops {
            if !applicable(op, w) {
                continue;
            }
            let v = apply(op, w).expect("domain checked");
            let j = index[&v];
            uf.union(i, j);
        }
    }
    let mut groups: BTreeMap<usize, Vec<SignedPermutation>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(w.clone());
    }
    Ok(CellPartition {
        kind: PartitionKind::Components,
        n,
        rank,
        blocks: canonical_blocks(groups),
    })
}

/// All realized operator edges, for graph export.
#[allow(clippy::type_complexity)]
pub fn operator_edges(
    n: usize,
    rank: usize,
) -> Result<(Vec<SignedPermutation>, Vec<(SignedPermutation, Operator, SignedPermutation)>)> {
    let words = enumerate_group(n)?;
    let ops = lambda_set(n, rank);
    let mut edges = Vec::new();
    for w in &words {
        for &op in &ops {
            if applicable(op, w) {
                let v = apply(op, w).expect("domain checked");
                edges.push((w.clone(), op, v));
            }
        }
    }
    Ok((words, edges))
}

#[derive(Debug)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // rooting at the smaller index keeps the result deterministic
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Outcome of one verification suite on one grid point.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub scope: String,
    pub checks: usize,
    pub violations: Vec<Value>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The one-line human summary.
    pub fn status_line(&self) -> String {
        if self.passed() {
            format!("PASS {} [{}] checks={}", self.suite, self.scope, self.checks)
        } else {
            format!(
                "FAIL {} [{}] checks={} violations={}",
                self.suite,
                self.scope,
                self.checks,
                self.violations.len()
            )
        }
    }
}

fn report(suite: &str, n: usize, rank: usize, checks: usize, violations: Vec<Value>) -> Report {
    Report {
        suite: suite.to_string(),
        scope: format!("n={n} rank={rank}"),
        checks,
        violations,
    }
}

/// Every operator preserves the normal form of the left tableau, and all
/// but the top sign swap preserve the left tableau exactly.
pub fn verify_stability(n: usize, rank: usize) -> Result<Report> {
    let words = enumerate_group(n)?;
    let ops = lambda_set(n, rank);
    let mut checks = 0;
    let mut violations = Vec::new();
    for w in &words {
        let (left, _) = rs_map(w, rank).into_parts();
        let normal = special_form(&left);
        for &op in &ops {
            if !applicable(op, w) {
                continue;
            }
            let v = apply(op, w).expect("domain checked");
            let (moved, _) = rs_map(&v, rank).into_parts();
            checks += 1;
            let exact = !matches!(op, Operator::InSwap(k) if k == rank + 1);
            if exact && moved != left {
                violations.push(json!({
                    "claim": "left tableau preserved",
                    "word": w.to_string(),
                    "op": op.to_string(),
                    "image": v.to_string(),
                }));
            } else if special_form(&moved) != normal {
                violations.push(json!({
                    "claim": "left normal form preserved",
                    "word": w.to_string(),
                    "op": op.to_string(),
                    "image": v.to_string(),
                }));
            }
        }
    }
    Ok(report("stability", n, rank, checks, violations))
}

/// Two canonical partitions over the same ground set; on mismatch, lists
/// witness pairs classified differently by the two.
fn partition_mismatch_witnesses(
    got: &CellPartition,
    want: &CellPartition,
    limit: usize,
) -> Vec<Value> {
    let assignment = |p: &CellPartition| -> BTreeMap<SignedPermutation, usize> {
        p.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.iter().map(move |w| (w.clone(), i)))
            .collect()
    };
    let got_of = assignment(got);
    let want_of = assignment(want);
    let mut out = Vec::new();
    let words: Vec<&SignedPermutation> = got_of.keys().collect();
    'outer: for (i, &u) in words.iter().enumerate() {
        for &v in &words[i + 1..] {
            let together_got = got_of[u] == got_of[v];
            let together_want = want_of.get(u) == want_of.get(v) && want_of.contains_key(u);
            if together_got != together_want {
                out.push(json!({
                    "pair": [u.to_string(), v.to_string()],
                    "together_in": if together_got { got.kind.as_str() } else { want.kind.as_str() },
                    "apart_in": if together_got { want.kind.as_str() } else { got.kind.as_str() },
                }));
                if out.len() >= limit {
                    break 'outer;
                }
            }
        }
    }
    out
}

/// The operator components coincide with the reducible right cells.
pub fn verify_generation(n: usize, rank: usize) -> Result<Report> {
    let components = operator_components(n, rank)?;
    let expected = partition_reducible(n, rank, Side::Right)?;
    let checks: usize = components.blocks.iter().map(Vec::len).sum();
    let violations = if components.blocks == expected.blocks {
        Vec::new()
    } else {
        partition_mismatch_witnesses(&components, &expected, 20)
    };
    Ok(report("generation", n, rank, checks, violations))
}

/// The join of the irreducible left-cell partitions at ranks r and r+1
/// coincides with the reducible left cells at rank r.
pub fn verify_refinement(n: usize, rank: usize) -> Result<Report> {
    let words = enumerate_group(n)?;
    let mut uf = UnionFind::new(words.len());
    for step_rank in [rank, rank + 1] {
        let mut first_with_key: BTreeMap<DominoTableau, usize> = BTreeMap::new();
        for (i, w) in words.iter().enumerate() {
            let key = cell_tableau(rs_map(w, step_rank), Side::Left);
            match first_with_key.get(&key) {
                Some(&j) => uf.union(i, j),
                None => {
                    first_with_key.insert(key, i);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<SignedPermutation>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(w.clone());
    }
    let join = CellPartition {
        kind: PartitionKind::ReducibleLeft,
        n,
        rank,
        blocks: canonical_blocks(groups),
    };
    let expected = partition_reducible(n, rank, Side::Left)?;
    let violations = if join.blocks == expected.blocks {
        Vec::new()
    } else {
        partition_mismatch_witnesses(&join, &expected, 20)
    };
    Ok(report("refinement", n, rank, words.len(), violations))
}

/// Left multiplication by a cross-section element respects right cells:
/// words of W_m sharing an insertion tableau (exactly, or up to moving
/// through non-core open cycles) still do after multiplication by any x
/// with an increasing positive prefix of length m.
pub fn verify_parabolic(n: usize, m: usize, rank: usize) -> Result<Report> {
    if m > n {
        return Err(Error::IndexOutOfRange { index: m, n });
    }
    let small = enumerate_group(m)?;
    let big = enumerate_group(n)?;
    let prefixes: Vec<&SignedPermutation> = big
        .iter()
        .filter(|x| {
            (1..=m).all(|i| x.entry(i) > 0) && (1..m).all(|i| x.entry(i) < x.entry(i + 1))
        })
        .collect();
    let mut checks = 0;
    let mut violations = Vec::new();
    for reducible in [false, true] {
        let key_small = |w: &SignedPermutation| -> DominoTableau {
            let t = cell_tableau(rs_map(w, rank), Side::Right);
            if reducible { special_form(&t) } else { t }
        };
        let mut groups: BTreeMap<DominoTableau, Vec<&SignedPermutation>> = BTreeMap::new();
        for w in &small {
            groups.entry(key_small(w)).or_default().push(w);
        }
        for x in &prefixes {
            for block in groups.values() {
                let mut keys: BTreeMap<DominoTableau, &SignedPermutation> = BTreeMap::new();
                for w in block {
                    let embedded = w.embed(n).expect("m <= n");
                    let product = x.compose(&embedded);
                    let t = cell_tableau(rs_map(&product, rank), Side::Right);
                    let key = if reducible { special_form(&t) } else { t };
                    checks += 1;
                    keys.entry(key).or_insert(w);
                }
                if keys.len() > 1 {
                    let reps: Vec<String> = keys.values().map(|w| w.to_string()).collect();
                    violations.push(json!({
                        "claim": if reducible { "reducible cells respected" } else { "irreducible cells respected" },
                        "m": m,
                        "x": x.to_string(),
                        "split_block_members": reps,
                    }));
                }
            }
        }
    }
    let mut r = report("parabolic", n, rank, checks, violations);
    r.scope = format!("n={n} m={m} rank={rank}");
    Ok(r)
}

/// The correspondence is injective, lands on valid same-shape pairs, and
/// inverts back to the word.
pub fn verify_bijectivity(n: usize, rank: usize) -> Result<Report> {
    let words = enumerate_group(n)?;
    let mut seen: BTreeMap<TableauPair, SignedPermutation> = BTreeMap::new();
    let mut checks = 0;
    let mut violations = Vec::new();
    for w in &words {
        let pair = rs_map(w, rank);
        checks += 1;
        if let Err(e) = pair.left().validate().and_then(|_| pair.right().validate()) {
            violations.push(json!({
                "claim": "image tableaux are standard",
                "word": w.to_string(),
                "error": e.to_string(),
            }));
            continue;
        }
        if pair.left().shape() != pair.right().shape() {
            violations.push(json!({
                "claim": "image pair shares a shape",
                "word": w.to_string(),
            }));
            continue;
        }
        match rs_inverse(&pair) {
            Ok(back) if &back == w => {}
            Ok(back) => violations.push(json!({
                "claim": "inverse returns the word",
                "word": w.to_string(),
                "returned": back.to_string(),
            })),
            Err(e) => violations.push(json!({
                "claim": "inverse succeeds",
                "word": w.to_string(),
                "error": e.to_string(),
            })),
        }
        if let Some(previous) = seen.insert(pair, w.clone()) {
            violations.push(json!({
                "claim": "map is injective",
                "word": w.to_string(),
                "collides_with": previous.to_string(),
            }));
        }
    }
    let expected = (1..=n).fold(1usize, |acc, i| acc * 2 * i);
    if words.len() != expected {
        violations.push(json!({
            "claim": "group has 2^n n! elements",
            "enumerated": words.len(),
            "expected": expected,
        }));
    }
    Ok(report("bijectivity", n, rank, checks, violations))
}
