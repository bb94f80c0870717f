//! The moving-through calculus: shifted dominoes, cycles and their
//! open/closed classification, extended cycles on pairs, and the
//! somewhat-special normal form.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::insertion::{Side, TableauPair};
use crate::tableau::{square_kind, DominoTableau, Domino, ExtLabel, HcKind, Square, SquareKind};

/// Effect of moving through a cycle on the underlying shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CycleKind {
    /// The shifted cells coincide with the original cells.
    Closed,
    /// One square is vacated and one filled; the vacated square sits on the
    /// diagonal just outside the core, so the move absorbs it into a larger
    /// core.
    OpenCore,
    /// One square off the core diagonal is vacated and one filled.
    OpenNonCore,
}

/// A cycle of a tableau: a minimal label set closed under overlap between
/// original and shifted positions, together with its classification.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    pub labels: BTreeSet<u32>,
    pub kind: CycleKind,
    /// The vacated square (open cycles only).
    pub back: Option<Square>,
    /// The filled square (open cycles only).
    pub front: Option<Square>,
}

impl Cycle {
    pub fn min_label(&self) -> u32 {
        *self.labels.first().expect("cycles are nonempty")
    }

    pub fn is_open(&self) -> bool {
        self.kind != CycleKind::Closed
    }
}

/// The shifted position of a domino: it keeps its fixed square and swings
/// to the other side of it, the direction resolved by comparing the label
/// against the diagonally adjacent square.
pub fn moved_domino(t: &DominoTableau, k: u32) -> Result<Domino> {
    let d = t.domino(k).ok_or(Error::MissingLabel(k))?;
    Ok(moved_domino_of(t, k, d))
}

fn moved_domino_of(t: &DominoTableau, k: u32, d: Domino) -> Domino {
    let [a, b] = d.cells();
    let rank = t.rank();
    let (f, o) = if square_kind(a.row, a.col, rank) == SquareKind::Fixed {
        (a, b)
    } else {
        (b, a)
    };
    debug_assert_ne!(
        square_kind(o.row, o.col, rank),
        SquareKind::Fixed,
        "a domino has exactly one fixed cell"
    );
    let (i, j) = (f.row as i64, f.col as i64);
    let variable_below_or_left = o == Square::new(f.row + 1, f.col) || (f.col > 1 && o == Square::new(f.row, f.col - 1));
    let new_other = if variable_below_or_left {
        // swing up or right
        if ExtLabel::Finite(k) < t.ext_label(i - 1, j + 1) {
            Square::new(f.row - 1, f.col)
        } else {
            Square::new(f.row, f.col + 1)
        }
    } else {
        // swing left or down
        if ExtLabel::Finite(k) < t.ext_label(i + 1, j - 1) {
            Square::new(f.row, f.col - 1)
        } else {
            Square::new(f.row + 1, f.col)
        }
    };
    Domino::new(f, new_other).expect("shifted cells stay adjacent")
}

/// Original and shifted supports for every label, computed once per tableau.
struct Supports {
    supp: BTreeMap<u32, BTreeSet<Square>>,
    moved: BTreeMap<u32, BTreeSet<Square>>,
}

impl Supports {
    fn of(t: &DominoTableau) -> Self {
        let mut supp = BTreeMap::new();
        let mut moved = BTreeMap::new();
        for (&l, d) in t.dominos() {
            supp.insert(l, d.cells().into_iter().collect());
            moved.insert(
                l,
                moved_domino_of(t, l, *d).cells().into_iter().collect(),
            );
        }
        Supports { supp, moved }
    }

    fn interacts(&self, a: u32, b: u32) -> bool {
        !self.supp[&a].is_disjoint(&self.moved[&b]) || !self.moved[&a].is_disjoint(&self.supp[&b])
    }
}

fn close_over(t: &DominoTableau, sup: &Supports, seed: u32) -> Cycle {
    let mut labels: BTreeSet<u32> = [seed].into_iter().collect();
    let mut frontier = vec![seed];
    while let Some(m) = frontier.pop() {
        for &l in t.dominos().keys() {
            if !labels.contains(&l) && sup.interacts(l, m) {
                labels.insert(l);
                frontier.push(l);
            }
        }
    }
    classify(t, sup, labels)
}

fn classify(t: &DominoTableau, sup: &Supports, labels: BTreeSet<u32>) -> Cycle {
    let orig: BTreeSet<Square> = labels.iter().flat_map(|l| sup.supp[l].iter().copied()).collect();
    let new: BTreeSet<Square> = labels.iter().flat_map(|l| sup.moved[l].iter().copied()).collect();
    let vacated: Vec<Square> = orig.difference(&new).copied().collect();
    let filled: Vec<Square> = new.difference(&orig).copied().collect();
    match (vacated.as_slice(), filled.as_slice()) {
        ([], []) => Cycle {
            labels,
            kind: CycleKind::Closed,
            back: None,
            front: None,
        },
        ([b], [f]) => {
            let kind = if b.row + b.col == t.rank() + 2 {
                CycleKind::OpenCore
            } else {
                CycleKind::OpenNonCore
            };
            Cycle {
                labels,
                kind,
                back: Some(*b),
                front: Some(*f),
            }
        }
        _ => panic!("a cycle vacates and fills at most one square: {vacated:?} / {filled:?}"),
    }
}

/// The cycle through a label.
pub fn cycle_through(t: &DominoTableau, k: u32) -> Result<Cycle> {
    if t.domino(k).is_none() {
        return Err(Error::MissingLabel(k));
    }
    Ok(close_over(t, &Supports::of(t), k))
}

/// All cycles, ordered by least member label. They partition the labels.
pub fn cycles(t: &DominoTableau) -> Vec<Cycle> {
    let sup = Supports::of(t);
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut out = Vec::new();
    for &l in t.dominos().keys() {
        if seen.contains(&l) {
            continue;
        }
        let c = close_over(t, &sup, l);
        seen.extend(c.labels.iter().copied());
        out.push(c);
    }
    out
}

/// Replaces every domino of the cycle by its shifted position. Closed and
/// open non-core cycles keep the rank. A core-open cycle promotes the result
/// to rank r + 1; that succeeds only when no other domino still blocks the
/// new core diagonal, otherwise the whole core-open family has to move
/// together (see `promote`).
pub fn move_through(t: &DominoTableau, c: &Cycle) -> Result<DominoTableau> {
    let fresh = cycle_through(t, c.min_label())?;
    if fresh != *c {
        return Err(Error::NotACycle(format!("{:?}", c.labels)));
    }
    let mut dominos = t.dominos().clone();
    for &l in &c.labels {
        let d = dominos[&l];
        dominos.insert(l, moved_domino_of(t, l, d));
    }
    match c.kind {
        CycleKind::OpenCore => DominoTableau::from_dominos(t.rank() + 1, dominos)
            .map_err(|_| Error::CoreOpenFamily),
        _ => DominoTableau::from_dominos(t.rank(), dominos),
    }
}

/// Moves through pairwise-disjoint non-core cycles in sequence. The result
/// does not depend on the order; debug builds re-run the moves in reverse
/// order and compare.
pub fn move_through_set(t: &DominoTableau, set: &[Cycle]) -> Result<DominoTableau> {
    let mut all: BTreeSet<u32> = BTreeSet::new();
    for c in set {
        if c.kind == CycleKind::OpenCore {
            return Err(Error::CoreOpenFamily);
        }
        for &l in &c.labels {
            if !all.insert(l) {
                return Err(Error::NotACycle(format!("label {l} appears in two cycles")));
            }
        }
    }
    let run = |order: Box<dyn Iterator<Item = &Cycle>>| -> Result<DominoTableau> {
        let mut cur = t.clone();
        for c in order {
            let fresh = cycle_through(&cur, c.min_label())?;
            debug_assert_eq!(fresh.labels, c.labels, "disjoint cycles persist across moves");
            cur = move_through(&cur, &fresh)?;
        }
        Ok(cur)
    };
    let out = run(Box::new(set.iter()))?;
    #[cfg(debug_assertions)]
    {
        let reversed = run(Box::new(set.iter().rev()))?;
        assert_eq!(out, reversed, "move order is immaterial");
    }
    Ok(out)
}

/// Moves every core-open cycle at once, absorbing the occupied diagonal into
/// the core and re-ranking the tableau one step up.
pub fn promote(t: &DominoTableau) -> Result<DominoTableau> {
    let mut dominos = t.dominos().clone();
    for c in cycles(t) {
        if c.kind != CycleKind::OpenCore {
            continue;
        }
        for &l in &c.labels {
            let d = dominos[&l];
            dominos.insert(l, moved_domino_of(t, l, d));
        }
    }
    DominoTableau::from_dominos(t.rank() + 1, dominos)
}

/// Matched label sets on the two sides of a same-shape pair: the extended
/// cycle and its partner. Closed cycles extend to themselves with an empty
/// partner side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedCyclePair {
    pub in_left: BTreeSet<u32>,
    pub in_right: BTreeSet<u32>,
}

/// The extended cycle of the cycle through `k` on the chosen side of the
/// pair, together with the matching labels on the other side.
///
/// Open cycles of the host join when an open cycle of the partner tableau
/// vacates a square one of them covers and fills a square the other's
/// shifted dominoes cover. Each host cycle is then matched to the partner
/// cycle vacating the same square.
pub fn extended_cycle(p: &TableauPair, k: u32, side: Side) -> Result<ExtendedCyclePair> {
    let host = p.side(side);
    let partner = p.side(match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    });
    let seed = cycle_through(host, k)?;
    let pack = |host_labels: BTreeSet<u32>, partner_labels: BTreeSet<u32>| match side {
        Side::Left => ExtendedCyclePair {
            in_left: host_labels,
            in_right: partner_labels,
        },
        Side::Right => ExtendedCyclePair {
            in_left: partner_labels,
            in_right: host_labels,
        },
    };
    if !seed.is_open() {
        return Ok(pack(seed.labels, BTreeSet::new()));
    }

    let host_sup = Supports::of(host);
    let host_open: Vec<Cycle> = cycles(host).into_iter().filter(Cycle::is_open).collect();
    let partner_open: Vec<Cycle> = cycles(partner).into_iter().filter(Cycle::is_open).collect();
    let supp_of = |c: &Cycle| -> BTreeSet<Square> {
        c.labels.iter().flat_map(|l| host_sup.supp[l].iter().copied()).collect()
    };
    let moved_of = |c: &Cycle| -> BTreeSet<Square> {
        c.labels.iter().flat_map(|l| host_sup.moved[l].iter().copied()).collect()
    };

    // linkage between two host cycles through an open partner cycle
    let linked = |a: &Cycle, b: &Cycle| -> bool {
        partner_open.iter().any(|d| {
            let back = d.back.expect("open cycle has a back square");
            let front = d.front.expect("open cycle has a front square");
            (supp_of(a).contains(&back) && moved_of(b).contains(&front))
                || (supp_of(b).contains(&back) && moved_of(a).contains(&front))
        })
    };

    let mut chosen: Vec<&Cycle> = vec![host_open
        .iter()
        .find(|c| c.labels == seed.labels)
        .expect("seed cycle is open")];
    loop {
        let mut grew = false;
        for cand in &host_open {
            if chosen.iter().any(|c| c.labels == cand.labels) {
                continue;
            }
            if chosen.iter().any(|c| linked(c, cand)) {
                chosen.push(cand);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }

    let host_labels: BTreeSet<u32> = chosen.iter().flat_map(|c| c.labels.iter().copied()).collect();
    let mut partner_labels = BTreeSet::new();
    let mut partner_fronts: BTreeSet<Square> = BTreeSet::new();
    for c in &chosen {
        let back = c.back.expect("open cycle has a back square");
        let d = partner_open
            .iter()
            .find(|d| d.back == Some(back))
            .expect("the partner tableau vacates the same squares");
        partner_labels.extend(d.labels.iter().copied());
        partner_fronts.extend(d.front);
    }
    let host_fronts: BTreeSet<Square> = chosen.iter().filter_map(|c| c.front).collect();
    debug_assert_eq!(
        host_fronts, partner_fronts,
        "matched extended cycles fill the same squares"
    );
    Ok(pack(host_labels, partner_labels))
}

/// Moves each side of the pair through its half of the extended cycle.
/// The two sides keep a common shape.
pub fn move_through_pair(p: &TableauPair, b: &ExtendedCyclePair) -> Result<TableauPair> {
    let left = move_labels(p.left(), &b.in_left)?;
    let right = move_labels(p.right(), &b.in_right)?;
    if left.shape() != right.shape() || left.rank() != right.rank() {
        return Err(Error::PairMismatch(format!(
            "moved shapes {:?} and {:?}",
            left.shape(),
            right.shape()
        )));
    }
    Ok(TableauPair::raw(left, right))
}

/// Moves a tableau through the cycles spanned by a label set, which must be
/// a union of cycles.
fn move_labels(t: &DominoTableau, labels: &BTreeSet<u32>) -> Result<DominoTableau> {
    let mut set = Vec::new();
    let mut covered: BTreeSet<u32> = BTreeSet::new();
    for &l in labels {
        if covered.contains(&l) {
            continue;
        }
        let c = cycle_through(t, l)?;
        if !c.labels.is_subset(labels) {
            return Err(Error::NotACycle(format!(
                "{labels:?} does not contain the whole cycle of {l}"
            )));
        }
        covered.extend(c.labels.iter().copied());
        set.push(c);
    }
    move_through_set(t, &set)
}

fn cycle_is_boxed(t: &DominoTableau, c: &Cycle) -> bool {
    let mut states = c.labels.iter().map(|&l| {
        let cells: BTreeSet<Square> = t.domino(l).expect("cycle label present").cells().into_iter().collect();
        t.is_boxed(&cells)
    });
    let first = states.next().expect("cycles are nonempty");
    debug_assert!(
        states.all(|s| s == first),
        "boxing is uniform across a cycle"
    );
    first
}

/// True when every open non-core cycle is boxed; equivalently, every corner
/// of the tableau is empty (debug builds assert the equivalence).
pub fn is_somewhat_special(t: &DominoTableau) -> bool {
    let by_cycles = cycles(t)
        .iter()
        .all(|c| c.kind != CycleKind::OpenNonCore || cycle_is_boxed(t, c));
    #[cfg(debug_assertions)]
    {
        let by_corners = t
            .holes_and_corners()
            .iter()
            .all(|h| h.kind != HcKind::Corner || !h.full);
        debug_assert_eq!(by_cycles, by_corners, "corner test matches the boxing test");
    }
    by_cycles
}

/// The somewhat-special normal form: moves through unboxed open non-core
/// cycles until all are boxed. One pass suffices (asserted in debug builds);
/// the result is the unique somewhat-special tableau reachable this way.
pub fn special_form(t: &DominoTableau) -> DominoTableau {
    let mut cur = t.clone();
    let mut passes = 0;
    loop {
        let targets: Vec<Cycle> = cycles(&cur)
            .into_iter()
            .filter(|c| c.kind == CycleKind::OpenNonCore && !cycle_is_boxed(&cur, c))
            .collect();
        if targets.is_empty() {
            break;
        }
        debug_assert_eq!(passes, 0, "a single pass reaches the normal form");
        cur = move_through_set(&cur, &targets).expect("non-core moves stay valid");
        passes += 1;
    }
    debug_assert!(is_somewhat_special(&cur));
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::rs_map;

    fn sq(row: usize, col: usize) -> Square {
        Square::new(row, col)
    }

    fn build(rank: usize, dominos: &[(u32, Domino)]) -> DominoTableau {
        DominoTableau::from_dominos(rank, dominos.iter().copied().collect())
            .expect("test tableau is valid")
    }

    #[test]
    fn shifted_domino_of_the_singleton_tableau() {
        let t = build(0, &[(1, Domino::horizontal(1, 1))]);
        assert_eq!(
            moved_domino(&t, 1).expect("label present"),
            Domino::horizontal(1, 2)
        );
    }

    #[test]
    fn singleton_core_open_move_promotes() {
        let t = build(0, &[(1, Domino::horizontal(1, 1))]);
        let c = cycle_through(&t, 1).expect("label present");
        assert_eq!(c.kind, CycleKind::OpenCore);
        assert_eq!(c.back, Some(sq(1, 1)));
        let moved = move_through(&t, &c).expect("diagonal is clear after the move");
        assert_eq!(moved.rank(), 1);
        assert_eq!(moved.domino(1), Some(Domino::horizontal(1, 2)));
    }

    #[test]
    fn blocked_core_open_single_move_reports_the_family() {
        let p = rs_map(&"1,-2".parse().expect("word"), 1);
        let t = p.left().clone();
        for c in cycles(&t) {
            assert_eq!(c.kind, CycleKind::OpenCore);
            assert!(matches!(move_through(&t, &c), Err(Error::CoreOpenFamily)));
        }
        let promoted = promote(&t).expect("family move is valid");
        assert_eq!(promoted.rank(), 2);
    }

    #[test]
    fn closed_cycle_keeps_the_shape() {
        // two nested dominoes in rank 0 whose moves trade places
        let p = rs_map(&"-1,2".parse().expect("word"), 0);
        for c in cycles(p.left()) {
            if c.kind == CycleKind::Closed {
                let moved = move_through(p.left(), &c).expect("closed move");
                assert_eq!(moved.shape(), p.left().shape());
            }
        }
    }

    #[test]
    fn moving_through_is_an_involution_off_the_core() {
        for word in ["2,1", "-1,2", "1,-2", "3,1,2", "-3,-1,2"] {
            for rank in 0..4 {
                let p = rs_map(&word.parse().expect("word"), rank);
                for t in [p.left(), p.right()] {
                    for c in cycles(t) {
                        if c.kind == CycleKind::OpenCore {
                            continue;
                        }
                        let once = move_through(t, &c).expect("non-core move");
                        let back = cycle_through(&once, c.min_label()).expect("labels persist");
                        assert_eq!(back.labels, c.labels);
                        let twice = move_through(&once, &back).expect("move back");
                        assert_eq!(&twice, t, "word {word} rank {rank}");
                    }
                }
            }
        }
    }
}
