//! Rank-r domino tableaux: staircase cores, labeled dominoes, square
//! classification, boxing, holes and corners, sparsity.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result, Violation};

/// A square of the plane in matrix coordinates; row 1 is the top row and
/// column 1 the leftmost column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "squares use 1-based coordinates");
        Square { row, col }
    }
}

/// Two edge-adjacent squares; the row-major smaller square is stored first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    cells: [Square; 2],
}

impl Domino {
    /// Builds a domino from two squares; None unless they are edge-adjacent.
    pub fn new(a: Square, b: Square) -> Option<Self> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let horizontal = lo.row == hi.row && lo.col + 1 == hi.col;
        let vertical = lo.col == hi.col && lo.row + 1 == hi.row;
        if horizontal || vertical {
            Some(Domino { cells: [lo, hi] })
        } else {
            None
        }
    }

    /// The domino covering (row, col) and (row, col + 1).
    pub fn horizontal(row: usize, col: usize) -> Self {
        Domino {
            cells: [Square::new(row, col), Square::new(row, col + 1)],
        }
    }

    /// The domino covering (row, col) and (row + 1, col).
    pub fn vertical(row: usize, col: usize) -> Self {
        Domino {
            cells: [Square::new(row, col), Square::new(row + 1, col)],
        }
    }

    pub fn cells(&self) -> [Square; 2] {
        self.cells
    }

    pub fn is_horizontal(&self) -> bool {
        self.cells[0].row == self.cells[1].row
    }

    pub fn is_vertical(&self) -> bool {
        !self.is_horizontal()
    }

    pub fn contains(&self, s: Square) -> bool {
        self.cells[0] == s || self.cells[1] == s
    }
}

/// Parity class of a square relative to the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareKind {
    Fixed,
    VariableX,
    VariableW,
}

/// A square is fixed when i + j and the rank have opposite parity; variable
/// squares are type X in odd rows and type W in even rows.
pub fn square_kind(row: usize, col: usize, rank: usize) -> SquareKind {
    if (row + col) % 2 != rank % 2 {
        SquareKind::Fixed
    } else if row % 2 == 1 {
        SquareKind::VariableX
    } else {
        SquareKind::VariableW
    }
}

/// True when (row, col) belongs to the staircase core of the given rank.
pub fn in_core(row: usize, col: usize, rank: usize) -> bool {
    row + col < rank + 2
}

/// The staircase core of the rank: all squares with i + j < rank + 2,
/// i.e. the partition (rank, rank - 1, ..., 1).
pub fn core_shape(rank: usize) -> BTreeSet<Square> {
    let mut out = BTreeSet::new();
    for i in 1..=rank {
        for j in 1..=(rank + 1 - i) {
            out.insert(Square::new(i, j));
        }
    }
    out
}

/// The extended label of a square: zero off the positive quadrant and on the
/// core, the covering domino's label on covered squares, infinity on empty
/// squares. The derived order Zero < Finite(k) < Infinity is the one used by
/// all comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtLabel {
    Zero,
    Finite(u32),
    Infinity,
}

/// True when the squares fit inside a 2x2 block whose upper-left corner is a
/// type X square. The corner may fall on row or column zero (for odd ranks
/// the blocks covering column one are anchored at column zero); it need not
/// be occupied. The empty set is boxed by convention.
pub fn boxed_in_rank(cells: &BTreeSet<Square>, rank: usize) -> bool {
    if cells.is_empty() {
        return true;
    }
    let min_r = cells.iter().map(|s| s.row).min().expect("nonempty");
    let max_r = cells.iter().map(|s| s.row).max().expect("nonempty");
    let min_c = cells.iter().map(|s| s.col).min().expect("nonempty");
    let max_c = cells.iter().map(|s| s.col).max().expect("nonempty");
    if max_r - min_r > 1 || max_c - min_c > 1 {
        return false;
    }
    for i in max_r.saturating_sub(1)..=min_r {
        for j in max_c.saturating_sub(1)..=min_c {
            if square_kind(i, j, rank) == SquareKind::VariableX {
                return true;
            }
        }
    }
    false
}

/// Hole (type W) or corner (type X) at an outer bend of the shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcKind {
    Hole,
    Corner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoleCorner {
    pub square: Square,
    pub kind: HcKind,
    pub full: bool,
}

/// A rank-r domino tableau: the staircase core plus disjoint labeled
/// dominoes whose union with the core is a Young diagram and whose labels
/// weakly increase along rows and columns.
///
/// Construction through `from_dominos` enforces every geometric invariant
/// but allows arbitrary distinct labels; `validate` additionally requires
/// the standard label set 1..n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominoTableau {
    rank: usize,
    dominos: BTreeMap<u32, Domino>,
    occupancy: BTreeMap<Square, u32>,
}

impl DominoTableau {
    pub fn empty(rank: usize) -> Self {
        DominoTableau {
            rank,
            dominos: BTreeMap::new(),
            occupancy: BTreeMap::new(),
        }
    }

    /// Assembles and geometrically validates a tableau from labeled dominoes.
    pub fn from_dominos(rank: usize, dominos: BTreeMap<u32, Domino>) -> Result<Self> {
        let mut occupancy = BTreeMap::new();
        for (&label, d) in &dominos {
            if label == 0 {
                return Err(Violation::Labels.into());
            }
            for c in d.cells() {
                if in_core(c.row, c.col, rank) {
                    return Err(Violation::CoreOverlap(label).into());
                }
                if occupancy.insert(c, label).is_some() {
                    return Err(Violation::Overlap(c.row, c.col).into());
                }
            }
        }
        let t = DominoTableau {
            rank,
            dominos,
            occupancy,
        };
        t.check_young()?;
        t.check_ordering()?;
        Ok(t)
    }

    fn check_young(&self) -> Result<()> {
        for &c in self.occupancy.keys() {
            let up = c.row == 1 || self.occupied(c.row - 1, c.col);
            let left = c.col == 1 || self.occupied(c.row, c.col - 1);
            if !up || !left {
                return Err(Violation::NotYoung(c.row).into());
            }
        }
        Ok(())
    }

    fn check_ordering(&self) -> Result<()> {
        for (&label, d) in &self.dominos {
            for c in d.cells() {
                let up = self.ext_label(c.row as i64 - 1, c.col as i64);
                let left = self.ext_label(c.row as i64, c.col as i64 - 1);
                if up > ExtLabel::Finite(label) || left > ExtLabel::Finite(label) {
                    return Err(Violation::Ordering(c.row, c.col).into());
                }
            }
        }
        Ok(())
    }

    /// Re-checks the geometric invariants and requires labels exactly 1..n.
    pub fn validate(&self) -> Result<()> {
        Self::from_dominos(self.rank, self.dominos.clone())?;
        let n = self.dominos.len() as u32;
        for (expect, &label) in (1..=n).zip(self.dominos.keys()) {
            if label != expect {
                return Err(Violation::Labels.into());
            }
        }
        Ok(())
    }

    pub fn is_standard(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of dominoes.
    pub fn size(&self) -> usize {
        self.dominos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominos.is_empty()
    }

    pub fn dominos(&self) -> &BTreeMap<u32, Domino> {
        &self.dominos
    }

    pub fn domino(&self, label: u32) -> Option<Domino> {
        self.dominos.get(&label).copied()
    }

    /// The label covering a square, if any domino does.
    pub fn label_at(&self, s: Square) -> Option<u32> {
        self.occupancy.get(&s).copied()
    }

    /// True when the square is core or covered by a domino.
    pub fn occupied(&self, row: usize, col: usize) -> bool {
        in_core(row, col, self.rank) || self.occupancy.contains_key(&Square::new(row, col))
    }

    pub fn ext_label(&self, row: i64, col: i64) -> ExtLabel {
        if row <= 0 || col <= 0 || row + col < self.rank as i64 + 2 {
            return ExtLabel::Zero;
        }
        match self.occupancy.get(&Square::new(row as usize, col as usize)) {
            Some(&l) => ExtLabel::Finite(l),
            None => ExtLabel::Infinity,
        }
    }

    /// Occupied-or-boundary test: everything except empty squares of the
    /// positive quadrant "lies in" the tableau.
    pub fn lies_in(&self, row: i64, col: i64) -> bool {
        self.ext_label(row, col) != ExtLabel::Infinity
    }

    /// Row lengths of the occupied region, core included.
    pub fn shape(&self) -> Vec<usize> {
        let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 1..=self.rank {
            rows.insert(i, self.rank + 1 - i);
        }
        for &c in self.occupancy.keys() {
            let len = rows.entry(c.row).or_insert(0);
            *len = (*len).max(c.col);
        }
        rows.into_values().collect()
    }

    /// All occupied squares: core plus every domino cell.
    pub fn occupied_squares(&self) -> BTreeSet<Square> {
        let mut out = core_shape(self.rank);
        out.extend(self.occupancy.keys().copied());
        out
    }

    pub fn add_domino(&self, label: u32, d: Domino) -> Result<Self> {
        if self.dominos.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let mut m = self.dominos.clone();
        m.insert(label, d);
        Self::from_dominos(self.rank, m)
    }

    /// The tableau restricted to labels at most k.
    pub fn subtableau(&self, k: u32) -> Self {
        let m = self.dominos.range(..=k).map(|(&l, &d)| (l, d)).collect();
        Self::from_dominos(self.rank, m).expect("label-prefix of a tableau stays valid")
    }

    pub fn is_boxed(&self, cells: &BTreeSet<Square>) -> bool {
        boxed_in_rank(cells, self.rank)
    }

    /// All holes and corners: variable squares with nothing to the right or
    /// below, supported above and to the left (boundary counts as support).
    pub fn holes_and_corners(&self) -> Vec<HoleCorner> {
        let shape = self.shape();
        let max_row = shape.len() + 1;
        let max_col = shape.first().copied().unwrap_or(0) + 1;
        let mut out = Vec::new();
        for i in 1..=max_row {
            for j in 1..=max_col {
                let kind = match square_kind(i, j, self.rank) {
                    SquareKind::Fixed => continue,
                    SquareKind::VariableX => HcKind::Corner,
                    SquareKind::VariableW => HcKind::Hole,
                };
                let (ii, jj) = (i as i64, j as i64);
                if self.lies_in(ii, jj + 1) || self.lies_in(ii + 1, jj) {
                    continue;
                }
                if !(self.lies_in(ii - 1, jj) && self.lies_in(ii, jj - 1)) {
                    continue;
                }
                out.push(HoleCorner {
                    square: Square::new(i, j),
                    kind,
                    full: self.occupied(i, j),
                });
            }
        }
        out
    }

    /// True when some anti-diagonal square S_{m, rank + 3 - m} is empty.
    pub fn is_sparse(&self) -> bool {
        (1..=self.rank + 2).any(|m| !self.occupied(m, self.rank + 3 - m))
    }
}
