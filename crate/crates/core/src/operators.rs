//! The operator family on signed permutations and its lift to tableau
//! pairs: Knuth-style triple moves, adjacent sign swaps, and the leading
//! sign change.

use std::fmt;
use std::str::FromStr;

use crate::cycles::{extended_cycle, move_through_pair};
use crate::error::{Error, Result};
use crate::insertion::{rs_inverse, rs_map, Side, TableauPair};
use crate::signed_perm::SignedPermutation;
use crate::tableau::{Domino, DominoTableau, Square};

/// A member of the rank-r operator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Operator {
    /// `K{j}`: interchanges the smallest and largest of the entries at
    /// positions j, j+1, j+2 whenever the middle one is extremal.
    Knuth(usize),
    /// `IN{k}`: swaps the entries at positions k, k+1 whenever they carry
    /// opposite signs.
    InSwap(usize),
    /// `SC{k}`: flips the sign of the first entry whenever the first k+1
    /// absolute values are strictly decreasing.
    SignChange(usize),
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Knuth(j) => write!(f, "K{j}"),
            Operator::InSwap(k) => write!(f, "IN{k}"),
            Operator::SignChange(k) => write!(f, "SC{k}"),
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (ctor, digits): (fn(usize) -> Operator, &str) = if let Some(rest) = s.strip_prefix("IN")
        {
            (Operator::InSwap, rest)
        } else if let Some(rest) = s.strip_prefix("SC") {
            (Operator::SignChange, rest)
        } else if let Some(rest) = s.strip_prefix('K') {
            (Operator::Knuth, rest)
        } else {
            return Err(Error::Parse(format!(
                "unknown operator {s:?}: expected K<j>, IN<k>, or SC<k>"
            )));
        };
        let index: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad operator index in {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse(format!("operator index in {s:?} must be positive")));
        }
        Ok(ctor(index))
    }
}

/// The domain test for the triple move at positions j, j+1, j+2.
pub fn knuth_applicable(w: &SignedPermutation, j: usize) -> bool {
    if j == 0 || j + 2 > w.n() {
        return false;
    }
    let (a, b, c) = (w.entry(j), w.entry(j + 1), w.entry(j + 2));
    b < a.min(c) || b > a.max(c)
}

/// Interchanges the smallest and largest entries among positions j..j+2.
pub fn apply_knuth(w: &SignedPermutation, j: usize) -> Result<SignedPermutation> {
    if !knuth_applicable(w, j) {
        return Err(Error::NotApplicable {
            op: Operator::Knuth(j).to_string(),
            word: w.to_string(),
        });
    }
    let mut entries = w.entries().to_vec();
    let positions = [j, j + 1, j + 2];
    let &pmin = positions
        .iter()
        .min_by_key(|&&p| entries[p - 1])
        .expect("three positions");
    let &pmax = positions
        .iter()
        .max_by_key(|&&p| entries[p - 1])
        .expect("three positions");
    entries.swap(pmin - 1, pmax - 1);
    SignedPermutation::from_entries(entries)
}

/// The domain test for the sign swap at positions k, k+1.
pub fn in_applicable(w: &SignedPermutation, k: usize) -> bool {
    k >= 1 && k + 1 <= w.n() && (w.entry(k) < 0) != (w.entry(k + 1) < 0)
}

/// Swaps the entries at positions k and k+1.
pub fn apply_in(w: &SignedPermutation, k: usize) -> Result<SignedPermutation> {
    if !in_applicable(w, k) {
        return Err(Error::NotApplicable {
            op: Operator::InSwap(k).to_string(),
            word: w.to_string(),
        });
    }
    let mut entries = w.entries().to_vec();
    entries.swap(k - 1, k);
    SignedPermutation::from_entries(entries)
}

/// The domain test for the leading sign change with a decreasing chain of
/// length k+1.
pub fn sc_applicable(w: &SignedPermutation, k: usize) -> bool {
    if k == 0 || k + 1 > w.n() {
        return false;
    }
    (1..=k).all(|i| w.entry(i).abs() > w.entry(i + 1).abs())
}

/// Flips the sign of the first entry.
pub fn apply_sc(w: &SignedPermutation, k: usize) -> Result<SignedPermutation> {
    if !sc_applicable(w, k) {
        return Err(Error::NotApplicable {
            op: Operator::SignChange(k).to_string(),
            word: w.to_string(),
        });
    }
    let mut entries = w.entries().to_vec();
    entries[0] = -entries[0];
    SignedPermutation::from_entries(entries)
}

/// Whether the operator's word-level domain contains `w`.
pub fn applicable(op: Operator, w: &SignedPermutation) -> bool {
    match op {
        Operator::Knuth(j) => knuth_applicable(w, j),
        Operator::InSwap(k) => in_applicable(w, k),
        Operator::SignChange(k) => sc_applicable(w, k),
    }
}

/// Applies the operator to a signed permutation. Every operator is an
/// involution on its domain.
pub fn apply(op: Operator, w: &SignedPermutation) -> Result<SignedPermutation> {
    match op {
        Operator::Knuth(j) => apply_knuth(w, j),
        Operator::InSwap(k) => apply_in(w, k),
        Operator::SignChange(k) => apply_sc(w, k),
    }
}

/// The rank-r operator family on W_n.
pub fn lambda_set(n: usize, rank: usize) -> Vec<Operator> {
    let mut out = Vec::new();
    for j in 1..=n.saturating_sub(2) {
        out.push(Operator::Knuth(j));
    }
    let top = (rank + 1).min(n.saturating_sub(1));
    for k in 1..=top {
        out.push(Operator::InSwap(k));
    }
    if rank + 2 <= n {
        out.push(Operator::SignChange(rank + 1));
    }
    out
}

/// Applies the operator to a tableau pair by pure tableau mechanics. The
/// domain is checked on the underlying signed permutation; the action never
/// re-inserts a word.
pub fn apply_op_tableau(op: Operator, p: &TableauPair) -> Result<TableauPair> {
    let w = rs_inverse(p)?;
    if !applicable(op, &w) {
        return Err(Error::NotApplicable {
            op: op.to_string(),
            word: w.to_string(),
        });
    }
    let rank = p.rank();
    match op {
        Operator::Knuth(j) => knuth_tableau(p, j),
        Operator::InSwap(k) if k <= rank => swap_labels_right(p, k as u32),
        Operator::InSwap(k) if k == rank + 1 => in_swap_top(p, k),
        Operator::SignChange(k) if k == rank + 1 => sign_change_tableau(p, k),
        // Outside the rank-r family the action has no tableau description.
        Operator::InSwap(_) | Operator::SignChange(_) => Err(Error::NotApplicable {
            op: op.to_string(),
            word: w.to_string(),
        }),
    }
}

/// Swaps the dominoes labeled k and k+1 in the right tableau.
fn swap_labels_right(p: &TableauPair, k: u32) -> Result<TableauPair> {
    let mut dominos = p.right().dominos().clone();
    let a = dominos[&k];
    let b = dominos[&(k + 1)];
    dominos.insert(k, b);
    dominos.insert(k + 1, a);
    let right = DominoTableau::from_dominos(p.rank(), dominos)
        .expect("swapping an interchangeable label pair keeps the tableau standard");
    TableauPair::new(p.left().clone(), right)
}

/// The four possible configurations of the dominoes k = r+1 and l = r+2
/// when the first r+2 labels cover the whole diagonal beyond the core.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TopConfig {
    /// k and l vertical, side by side.
    Paired0,
    /// k and l horizontal, stacked.
    Paired1,
    /// k vertical with l horizontal at its upper right.
    Mixed0,
    /// k horizontal with l vertical at its lower left.
    Mixed1,
}

fn top_config(t: &DominoTableau, k: u32) -> Option<TopConfig> {
    let dk = t.domino(k)?;
    let dl = t.domino(k + 1)?;
    let a = dk.cells()[0];
    let b = dl.cells()[0];
    let right_of = Square::new(a.row, a.col + 1);
    let under = Square::new(a.row + 1, a.col);
    match (dk.is_vertical(), dl.is_vertical()) {
        (true, true) if b == right_of => Some(TopConfig::Paired0),
        (false, false) if b == under => Some(TopConfig::Paired1),
        (true, false) if b == right_of => Some(TopConfig::Mixed0),
        (false, true) if b == under => Some(TopConfig::Mixed1),
        _ => None,
    }
}

/// Replaces the 2x2 block held by k and k+1 with its other tiling.
fn retile_block(t: &DominoTableau, k: u32) -> DominoTableau {
    let dk = t.domino(k).expect("label k present");
    let a = dk.cells()[0];
    let mut dominos = t.dominos().clone();
    if dk.is_vertical() {
        dominos.insert(k, Domino::horizontal(a.row, a.col));
        dominos.insert(k + 1, Domino::horizontal(a.row + 1, a.col));
    } else {
        dominos.insert(k, Domino::vertical(a.row, a.col));
        dominos.insert(k + 1, Domino::vertical(a.row, a.col + 1));
    }
    DominoTableau::from_dominos(t.rank(), dominos)
        .expect("retiling a label-adjacent 2x2 block keeps the tableau standard")
}

/// The sign swap at the top position k = r+1, where the insertions of the
/// two entries may interact.
fn in_swap_top(p: &TableauPair, k: usize) -> Result<TableauPair> {
    let rank = p.rank();
    let l = (rank + 2) as u32;
    if p.right().subtableau(l).is_sparse() {
        return swap_labels_right(p, k as u32);
    }
    match top_config(p.right(), k as u32)
        .expect("a non-sparse top pair sits in one of four configurations")
    {
        TopConfig::Paired0 | TopConfig::Paired1 => {
            let barred = TableauPair::new(p.left().clone(), retile_block(p.right(), k as u32))?;
            let c = extended_cycle(&barred, l, Side::Right)?;
            move_through_pair(&barred, &c)
        }
        TopConfig::Mixed0 | TopConfig::Mixed1 => {
            let c = extended_cycle(p, l, Side::Right)?;
            let barred = move_through_pair(p, &c)?;
            let config = top_config(barred.right(), k as u32);
            assert!(
                matches!(config, Some(TopConfig::Paired0) | Some(TopConfig::Paired1)),
                "moving through the extended cycle pairs up the top dominoes"
            );
            TableauPair::new(barred.left().clone(), retile_block(barred.right(), k as u32))
        }
    }
}

/// The leading sign change read off and re-enacted on the first k+1
/// dominoes of the right tableau.
fn sign_change_tableau(p: &TableauPair, k: usize) -> Result<TableauPair> {
    let rank = p.rank();
    let m = k + 1;
    let sub = p.right().subtableau(m as u32);
    debug_assert_eq!(sub.size(), m, "the chain fills the first {m} labels");
    // Orientations determine the first k signs; the last one is tried both
    // ways against a simulation with a canonical decreasing word.
    let mut matches = Vec::new();
    for last in [1i32, -1] {
        let entries: Vec<i32> = (1..=m)
            .map(|i| {
                let magnitude = (m + 1 - i) as i32;
                if i == m {
                    last * magnitude
                } else if sub.domino(i as u32).expect("chain label present").is_vertical() {
                    -magnitude
                } else {
                    magnitude
                }
            })
            .collect();
        let word = SignedPermutation::from_entries(entries).expect("decreasing magnitudes");
        if rs_map(&word, rank).right() == &sub {
            matches.push(word);
        }
    }
    let word = matches.first().expect("some sign of the last entry reproduces the chain");
    let flipped = apply_sc(word, k).expect("the canonical word keeps the decreasing chain");
    let replayed = rs_map(&flipped, rank).into_parts().1;
    #[cfg(debug_assertions)]
    if let Some(other) = matches.get(1) {
        let alt = rs_map(&apply_sc(other, k).expect("chain"), rank).into_parts().1;
        debug_assert_eq!(replayed, alt, "an ambiguous last sign cannot change the result");
    }
    let mut dominos = replayed.dominos().clone();
    for (&label, d) in p.right().dominos().range(m as u32 + 1..) {
        dominos.insert(label, *d);
    }
    let right = DominoTableau::from_dominos(rank, dominos)
        .expect("the replayed chain matches the remaining labels");
    TableauPair::new(p.left().clone(), right)
}

/// Whether every row of the domino labeled `a` lies strictly below every
/// row of the domino labeled `b`.
fn lies_below(t: &DominoTableau, a: u32, b: u32) -> bool {
    let low = t.domino(a).expect("label present").cells()[0].row;
    let high = t.domino(b).expect("label present").cells()[1].row;
    low > high
}

fn below_pattern(t: &DominoTableau, j: u32) -> (bool, bool) {
    (lies_below(t, j + 1, j), lies_below(t, j + 2, j + 1))
}

/// The triple move on the right tableau: either a fixed exchange of one of
/// four three-domino blocks, or the unique label swap that flips the
/// descent pattern.
fn knuth_tableau(p: &TableauPair, j: usize) -> Result<TableauPair> {
    let t2 = p.right();
    let j = j as u32;
    if let Some(right) = f_config_swap(t2, j) {
        return TableauPair::new(p.left().clone(), right);
    }
    let (first, second) = below_pattern(t2, j);
    assert_ne!(first, second, "the domain shows exactly one descent");
    let mut keepers = Vec::new();
    for low in [j, j + 1] {
        let mut dominos = t2.dominos().clone();
        let a = dominos[&low];
        let b = dominos[&(low + 1)];
        dominos.insert(low, b);
        dominos.insert(low + 1, a);
        if let Ok(t) = DominoTableau::from_dominos(t2.rank(), dominos) {
            if below_pattern(&t, j) == (second, first) {
                keepers.push(t);
            }
        }
    }
    assert_eq!(
        keepers.len(),
        1,
        "exactly one label swap is standard and flips the descent pattern"
    );
    TableauPair::new(p.left().clone(), keepers.pop().expect("one keeper"))
}

/// Exchanges one of the four rigid three-domino tilings with its partner
/// on the same cells, if present.
fn f_config_swap(t: &DominoTableau, j: u32) -> Option<DominoTableau> {
    let dj = t.domino(j)?;
    let dk = t.domino(j + 1)?;
    let dl = t.domino(j + 2)?;
    let a = dj.cells()[0];
    let (i, c) = (a.row, a.col);
    let place = |tiles: [Domino; 3]| -> DominoTableau {
        let mut dominos = t.dominos().clone();
        for (offset, d) in tiles.into_iter().enumerate() {
            dominos.insert(j + offset as u32, d);
        }
        DominoTableau::from_dominos(t.rank(), dominos)
            .expect("retiling a three-domino block keeps the tableau standard")
    };
    if dj.is_vertical()
        && dk == Domino::horizontal(i, c + 1)
        && dl == Domino::horizontal(i + 1, c + 1)
    {
        // tall-left block becomes wide-top block
        return Some(place([
            Domino::horizontal(i, c),
            Domino::horizontal(i + 1, c),
            Domino::vertical(i, c + 2),
        ]));
    }
    if dj.is_horizontal() && dk == Domino::horizontal(i + 1, c) && dl == Domino::vertical(i, c + 2)
    {
        return Some(place([
            Domino::vertical(i, c),
            Domino::horizontal(i, c + 1),
            Domino::horizontal(i + 1, c + 1),
        ]));
    }
    if dj.is_horizontal() && dk == Domino::vertical(i + 1, c) && dl == Domino::vertical(i + 1, c + 1)
    {
        return Some(place([
            Domino::vertical(i, c),
            Domino::vertical(i, c + 1),
            Domino::horizontal(i + 2, c),
        ]));
    }
    if dj.is_vertical() && dk == Domino::vertical(i, c + 1) && dl == Domino::horizontal(i + 2, c) {
        return Some(place([
            Domino::horizontal(i, c),
            Domino::vertical(i + 1, c),
            Domino::vertical(i + 1, c + 1),
        ]));
    }
    None
}
