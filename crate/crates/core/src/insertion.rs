//! Domino insertion for signed letters, the rank-r Robinson-Schensted maps,
//! and their step-by-step inverses.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::signed_perm::SignedPermutation;
use crate::tableau::{in_core, Domino, DominoTableau, Square};

/// Which member of a tableau pair an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A pair of equal-rank, equal-shape domino tableaux. The left tableau is
/// the insertion tableau and the right one records the shape growth.
///
/// Pairs built through `new` are fully standard; pairs produced by
/// `reverse_step` may carry a gappy label set on the left while the
/// reversal is in flight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableauPair {
    left: DominoTableau,
    right: DominoTableau,
}

impl TableauPair {
    pub fn new(left: DominoTableau, right: DominoTableau) -> Result<Self> {
        left.validate()?;
        right.validate()?;
        if left.rank() != right.rank() {
            return Err(Error::PairMismatch(format!(
                "ranks {} and {}",
                left.rank(),
                right.rank()
            )));
        }
        if left.shape() != right.shape() {
            return Err(Error::PairMismatch(format!(
                "shapes {:?} and {:?}",
                left.shape(),
                right.shape()
            )));
        }
        Ok(TableauPair { left, right })
    }

    pub(crate) fn raw(left: DominoTableau, right: DominoTableau) -> Self {
        debug_assert_eq!(left.rank(), right.rank());
        debug_assert_eq!(left.shape(), right.shape());
        TableauPair { left, right }
    }

    pub fn left(&self) -> &DominoTableau {
        &self.left
    }

    pub fn right(&self) -> &DominoTableau {
        &self.right
    }

    pub fn side(&self, side: Side) -> &DominoTableau {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn rank(&self) -> usize {
        self.left.rank()
    }

    /// Number of dominoes on each side.
    pub fn size(&self) -> usize {
        self.left.size()
    }

    pub fn swapped(&self) -> Self {
        TableauPair {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn into_parts(self) -> (DominoTableau, DominoTableau) {
        (self.left, self.right)
    }
}

/// Scratch state for one insertion or reversal: the cells settled so far,
/// queried as core-or-covered.
struct Region<'a> {
    rank: usize,
    cover: &'a BTreeMap<Square, u32>,
}

impl Region<'_> {
    fn occupied(&self, row: usize, col: usize) -> bool {
        in_core(row, col, self.rank) || self.cover.contains_key(&Square::new(row, col))
    }

    /// Length of a row; settled regions stay left-justified throughout.
    fn row_len(&self, row: usize) -> usize {
        let mut j = 0;
        while self.occupied(row, j + 1) {
            j += 1;
        }
        j
    }

    fn col_len(&self, col: usize) -> usize {
        let mut i = 0;
        while self.occupied(i + 1, col) {
            i += 1;
        }
        i
    }
}

/// Inserts a signed letter: a positive letter enters as a horizontal domino
/// at the end of row 1, a negative one as a vertical domino at the end of
/// column 1. Every domino with a larger label then resettles in label order:
/// it stays put if its cells are still free, slides to the end of the next
/// row (column) if both cells were taken, or pivots around its surviving
/// cell if exactly one was.
pub fn insert_alpha(t: &DominoTableau, value: i32) -> Result<DominoTableau> {
    assert!(value != 0, "letters are nonzero");
    let m = value.unsigned_abs();
    if t.dominos().contains_key(&m) {
        return Err(Error::DuplicateLabel(m));
    }
    let rank = t.rank();
    let mut settled: BTreeMap<u32, Domino> = t.dominos().range(..m).map(|(&l, &d)| (l, d)).collect();
    let mut cover: BTreeMap<Square, u32> = settled
        .iter()
        .flat_map(|(&l, d)| d.cells().into_iter().map(move |c| (c, l)))
        .collect();

    let place = |settled: &mut BTreeMap<u32, Domino>,
                     cover: &mut BTreeMap<Square, u32>,
                     label: u32,
                     d: Domino| {
        for c in d.cells() {
            let clash = cover.insert(c, label);
            debug_assert!(clash.is_none(), "cell {c:?} settled twice");
            debug_assert!(!in_core(c.row, c.col, rank), "settled into the core at {c:?}");
        }
        settled.insert(label, d);
    };

    let seed = if value > 0 {
        let len = Region { rank, cover: &cover }.row_len(1);
        Domino::horizontal(1, len + 1)
    } else {
        let len = Region { rank, cover: &cover }.col_len(1);
        Domino::vertical(len + 1, 1)
    };
    place(&mut settled, &mut cover, m, seed);

    for (&label, d) in t.dominos().range(m..) {
        let [p0, p1] = d.cells();
        let c0 = cover.contains_key(&p0);
        let c1 = cover.contains_key(&p1);
        let region = Region { rank, cover: &cover };
        let new_d = match (d.is_horizontal(), c0, c1) {
            (_, false, false) => *d,
            (true, true, true) => Domino::horizontal(p0.row + 1, region.row_len(p0.row + 1) + 1),
            (true, true, false) => Domino::vertical(p0.row, p0.col + 1),
            (false, true, true) => Domino::vertical(region.col_len(p0.col + 1) + 1, p0.col + 1),
            (false, true, false) => Domino::horizontal(p0.row + 1, p0.col),
            (_, false, true) => unreachable!("settled region is left- and top-justified"),
        };
        place(&mut settled, &mut cover, label, new_d);
    }

    DominoTableau::from_dominos(rank, settled)
}

/// The rank-r Robinson-Schensted map: iterated insertion on the left, shape
/// growth recorded on the right.
pub fn rs_map(w: &SignedPermutation, rank: usize) -> TableauPair {
    let mut left = DominoTableau::empty(rank);
    let mut right = DominoTableau::empty(rank);
    for k in 1..=w.n() {
        let next = insert_alpha(&left, w.entry(k)).expect("letters are distinct");
        let grown: Vec<Square> = next
            .occupied_squares()
            .difference(&left.occupied_squares())
            .copied()
            .collect();
        assert_eq!(grown.len(), 2, "insertion grows the shape by one domino");
        let d = Domino::new(grown[0], grown[1]).expect("shape growth is a domino");
        right = right.add_domino(k as u32, d).expect("recording stays valid");
        left = next;
    }
    debug_assert_eq!(left.shape(), right.shape());
    TableauPair { left, right }
}

/// Undoes the most recent insertion: removes the top recording domino and
/// un-bumps the insertion tableau, returning the ejected letter.
///
/// The reversal is demand-driven. The two squares the shape must give up
/// form the initial demand; the highest label covering demanded squares is
/// the domino that settled there last, and its settle rule inverts
/// mechanically. Pivoted dominoes hand the demand to the cell they re-cover;
/// slid dominoes hand it to the row (column) they came from; the seed ends
/// the cascade and leaves as the letter.
pub fn reverse_step(p: &TableauPair) -> Result<(TableauPair, i32)> {
    let (&top, top_d) = p.right.dominos().last_key_value().ok_or(Error::EmptyPair)?;
    let rank = p.rank();
    let mut dominos = p.left.dominos().clone();
    let mut demand: BTreeSet<Square> = top_d.cells().into_iter().collect();

    // Un-moving hands the demand to strictly smaller labels, and a domino
    // already returned to its origin may sit on demanded squares again, so
    // the search is capped below the last label visited.
    let mut bound = u32::MAX;
    let value = loop {
        let label = *dominos
            .range(..bound)
            .rev()
            .find(|(_, d)| d.cells().iter().any(|c| demand.contains(c)))
            .map(|(l, _)| l)
            .expect("demanded squares are covered");
        bound = label;
        let q = dominos[&label];
        let [q0, q1] = q.cells();
        let cover: BTreeMap<Square, u32> = dominos
            .range(..label)
            .flat_map(|(&l, d)| d.cells().into_iter().map(move |c| (c, l)))
            .collect();
        let region = Region { rank, cover: &cover };
        let full = demand.contains(&q0) && demand.contains(&q1);

        let origin = if q.is_horizontal() {
            if full {
                if q0.row == 1 {
                    // positive seed: it sits at the end of row 1
                    debug_assert_eq!(region.row_len(1) + 1, q0.col, "seed ends row 1");
                    dominos.remove(&label);
                    break label as i32;
                }
                let len = region.row_len(q0.row - 1);
                assert!(len >= 2, "a full slide came from the previous row");
                assert!(
                    !in_core(q0.row - 1, len - 1, rank),
                    "slide source lies outside the core"
                );
                Domino::horizontal(q0.row - 1, len - 1)
            } else {
                assert!(
                    demand.contains(&q1) && !demand.contains(&q0),
                    "a pivoted horizontal is demanded on its right cell"
                );
                Domino::vertical(q0.row - 1, q0.col)
            }
        } else if full {
            if q0.col == 1 {
                // negative seed: it sits at the end of column 1
                debug_assert_eq!(region.col_len(1) + 1, q0.row, "seed ends column 1");
                dominos.remove(&label);
                break -(label as i32);
            }
            let len = region.col_len(q0.col - 1);
            assert!(len >= 2, "a full slide came from the previous column");
            assert!(
                !in_core(len - 1, q0.col - 1, rank),
                "slide source lies outside the core"
            );
            Domino::vertical(len - 1, q0.col - 1)
        } else {
            assert!(
                demand.contains(&q1) && !demand.contains(&q0),
                "a pivoted vertical is demanded on its bottom cell"
            );
            Domino::horizontal(q0.row, q0.col - 1)
        };

        let q_cells: BTreeSet<Square> = q.cells().into_iter().collect();
        let o_cells: BTreeSet<Square> = origin.cells().into_iter().collect();
        for c in q_cells.difference(&o_cells) {
            let was_demanded = demand.remove(c);
            assert!(was_demanded, "vacated cell {c:?} was not demanded");
        }
        for c in o_cells.difference(&q_cells) {
            assert!(cover.contains_key(c), "re-covered cell {c:?} must displace a lower label");
            demand.insert(*c);
        }
        assert_eq!(demand.len(), 2, "the demand stays one domino wide");
        dominos.insert(label, origin);
    };

    let left = DominoTableau::from_dominos(rank, dominos)?;
    let mut right_dominos = p.right.dominos().clone();
    right_dominos.remove(&top);
    let right = DominoTableau::from_dominos(rank, right_dominos)?;
    if left.shape() != right.shape() {
        return Err(Error::PairMismatch(format!(
            "reversal shapes {:?} and {:?}",
            left.shape(),
            right.shape()
        )));
    }
    Ok((TableauPair { left, right }, value))
}

/// Full inverse of `rs_map`.
pub fn rs_inverse(p: &TableauPair) -> Result<SignedPermutation> {
    p.left.validate()?;
    p.right.validate()?;
    if p.left.rank() != p.right.rank() || p.left.shape() != p.right.shape() {
        return Err(Error::PairMismatch("sides disagree".into()));
    }
    let n = p.left.size();
    let mut entries = vec![0i32; n];
    let mut cur = p.clone();
    for k in (1..=n).rev() {
        let (prev, v) = reverse_step(&cur)?;
        entries[k - 1] = v;
        cur = prev;
    }
    SignedPermutation::from_entries(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().expect("test word parses")
    }

    #[test]
    fn first_letters_enter_along_the_axes() {
        let empty = DominoTableau::empty(0);
        let pos = insert_alpha(&empty, 1).expect("fresh label");
        assert_eq!(pos.domino(1), Some(Domino::horizontal(1, 1)));
        let neg = insert_alpha(&empty, -1).expect("fresh label");
        assert_eq!(neg.domino(1), Some(Domino::vertical(1, 1)));
    }

    #[test]
    fn smaller_letter_bumps_the_first_row() {
        let t = insert_alpha(&DominoTableau::empty(0), 2).expect("fresh label");
        let t = insert_alpha(&t, 1).expect("fresh label");
        assert_eq!(t.domino(1), Some(Domino::horizontal(1, 1)));
        assert_eq!(t.domino(2), Some(Domino::horizontal(2, 1)));
    }

    #[test]
    fn involution_words_have_equal_tableaux() {
        let p = rs_map(&w("2,1"), 0);
        assert_eq!(p.left(), p.right());
    }

    #[test]
    fn empty_word_gives_cores() {
        for rank in 0..4 {
            let p = rs_map(&SignedPermutation::identity(0), rank);
            assert!(p.left().is_empty());
            assert_eq!(p.left().shape(), p.right().shape());
        }
    }

    #[test]
    fn single_domino_pair_reverses_to_a_letter() {
        for (word, expect) in [("1", 1), ("-1", -1)] {
            let p = rs_map(&w(word), 0);
            let (rest, v) = reverse_step(&p).expect("nonempty");
            assert_eq!(v, expect);
            assert!(rest.left().is_empty());
        }
    }

    #[test]
    fn round_trip_small_words() {
        for s in ["2,1", "-1,2", "1,-2", "3,-1,2", "-3,-2,-1"] {
            for rank in 0..4 {
                let word = w(s);
                let p = rs_map(&word, rank);
                assert_eq!(rs_inverse(&p).expect("valid pair"), word, "word {s} rank {rank}");
            }
        }
    }
}
