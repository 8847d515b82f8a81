//! Cell-set regions for every diagram used by the identities, plus hook
//! pairs measured inside an enclosing region.
//!
//! Coordinates: rows grow downward, columns grow rightward, and the base
//! `n × k` rectangle occupies rows `0..n`, columns `0..k`. Glued copies of a
//! partition live at negative coordinates.
//!
//! Every region is row-convex and column-convex, so a region is stored as one
//! closed interval per occupied row and per occupied column. Arm and leg of a
//! cell then come straight from the interval ends.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::multiset::{HookPairMultiset, LegMultiset};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("row {row} is not contiguous")]
    RowGap { row: i64 },
    #[error("column {col} is not contiguous")]
    ColumnGap { col: i64 },
    #[error("cell {0} is not in the enclosing region")]
    CellOutside(Cell),
    #[error("subregion is not contained in the enclosing region (first stray cell {0})")]
    NotSubregion(Cell),
    #[error("partition ({mu}) does not fit in a {rows}x{cols} box")]
    BoxViolation {
        mu: Partition,
        rows: usize,
        cols: usize,
    },
    #[error("partition ({0}) is not of the form (λ | λ−1)")]
    NotDoubledShifted(Partition),
    #[error("side {side} is below μ₁−1 = {needed}")]
    SideTooSmall { side: usize, needed: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: i64,
    pub col: i64,
}

impl Cell {
    pub fn new(row: i64, col: i64) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookPair {
    pub arm: usize,
    pub leg: usize,
}

impl HookPair {
    pub fn new(arm: usize, leg: usize) -> Self {
        HookPair { arm, leg }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span {
    lo: i64,
    hi: i64,
}

impl Span {
    fn contains(self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// A finite, row- and column-convex set of cells.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Region {
    rows: BTreeMap<i64, Span>,
    cols: BTreeMap<i64, Span>,
    len: usize,
}

impl Region {
    pub fn empty() -> Self {
        Region::default()
    }

    /// Builds a region from arbitrary cells, rejecting non-convex sets.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self, RegionError> {
        let mut by_row: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for cell in cells {
            by_row.entry(cell.row).or_default().push(cell.col);
        }
        let mut spans = Vec::with_capacity(by_row.len());
        for (row, mut cols) in by_row {
            cols.sort_unstable();
            cols.dedup();
            let (lo, hi) = (cols[0], cols[cols.len() - 1]);
            if (hi - lo + 1) as usize != cols.len() {
                return Err(RegionError::RowGap { row });
            }
            spans.push((row, lo, hi));
        }
        Self::from_row_spans(spans)
    }

    /// Builds a region from `(row, first_col, last_col)` triples. Triples with
    /// `last_col < first_col` denote empty rows and are skipped.
    pub fn from_row_spans<I>(spans: I) -> Result<Self, RegionError>
    where
        I: IntoIterator<Item = (i64, i64, i64)>,
    {
        let mut rows = BTreeMap::new();
        for (row, lo, hi) in spans {
            if lo <= hi && rows.insert(row, Span { lo, hi }).is_some() {
                return Err(RegionError::RowGap { row });
            }
        }
        let mut col_rows: BTreeMap<i64, (i64, i64, usize)> = BTreeMap::new();
        let mut len = 0;
        for (&row, span) in &rows {
            len += (span.hi - span.lo + 1) as usize;
            for col in span.lo..=span.hi {
                let entry = col_rows.entry(col).or_insert((row, row, 0));
                entry.1 = row;
                entry.2 += 1;
            }
        }
        let mut cols = BTreeMap::new();
        for (col, (top, bottom, count)) in col_rows {
            if (bottom - top + 1) as usize != count {
                return Err(RegionError::ColumnGap { col });
            }
            cols.insert(
                col,
                Span {
                    lo: top,
                    hi: bottom,
                },
            );
        }
        Ok(Region { rows, cols, len })
    }

    /// For shapes whose convexity is guaranteed by construction.
    fn shape<I>(spans: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, i64)>,
    {
        Self::from_row_spans(spans).expect("constructed shapes are row- and column-convex")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.rows
            .get(&cell.row)
            .is_some_and(|s| s.contains(cell.col))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .flat_map(|(&row, span)| (span.lo..=span.hi).map(move |col| Cell { row, col }))
    }

    /// Occupied rows with their closed column interval, top to bottom.
    pub fn row_spans(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.rows.iter().map(|(&row, s)| (row, s.lo, s.hi))
    }

    pub fn row_span(&self, row: i64) -> Option<(i64, i64)> {
        self.rows.get(&row).map(|s| (s.lo, s.hi))
    }

    pub fn column_span(&self, col: i64) -> Option<(i64, i64)> {
        self.cols.get(&col).map(|s| (s.lo, s.hi))
    }

    pub fn is_subregion_of(&self, other: &Region) -> bool {
        self.first_cell_outside(other).is_none()
    }

    fn first_cell_outside(&self, other: &Region) -> Option<Cell> {
        for (&row, span) in &self.rows {
            match other.rows.get(&row) {
                Some(o) if o.lo <= span.lo && span.hi <= o.hi => {}
                Some(o) if o.contains(span.lo) => return Some(Cell::new(row, o.hi + 1)),
                _ => return Some(Cell::new(row, span.lo)),
            }
        }
        None
    }

    /// Cells satisfying `keep`; fails if the result is not convex.
    pub fn filter<F: Fn(Cell) -> bool>(&self, keep: F) -> Result<Region, RegionError> {
        Region::from_cells(self.cells().filter(|&c| keep(c)))
    }

    pub fn difference(&self, other: &Region) -> Result<Region, RegionError> {
        self.filter(|c| !other.contains(c))
    }

    pub fn union(&self, other: &Region) -> Result<Region, RegionError> {
        Region::from_cells(self.cells().chain(other.cells()))
    }

    /// Arm and leg of `cell`, measured inside `self`.
    pub fn hook_pair(&self, cell: Cell) -> Result<HookPair, RegionError> {
        let row = self.rows.get(&cell.row).filter(|s| s.contains(cell.col));
        let row = row.ok_or(RegionError::CellOutside(cell))?;
        let col = self.cols[&cell.col];
        Ok(HookPair {
            arm: (row.hi - cell.col) as usize,
            leg: (col.hi - cell.row) as usize,
        })
    }

    /// `HP_self(sub)`: hook pairs of the cells of `sub`, measured inside `self`.
    pub fn hook_pairs(&self, sub: &Region) -> Result<HookPairMultiset, RegionError> {
        if let Some(cell) = sub.first_cell_outside(self) {
            return Err(RegionError::NotSubregion(cell));
        }
        Ok(sub
            .cells()
            .map(|c| self.hook_pair(c).expect("subregion cell"))
            .collect())
    }

    /// Hook pairs of every cell of `self`.
    pub fn own_hook_pairs(&self) -> HookPairMultiset {
        self.hook_pairs(self).expect("a region contains itself")
    }

    /// Broken column of `sub` in distance `d`: the cells of `sub` whose arm,
    /// measured inside `self`, equals `d`, each with its leg (also measured
    /// inside `self`). One cell per row at most, listed top to bottom.
    pub fn broken_column(&self, sub: &Region, d: usize) -> Result<Vec<(Cell, usize)>, RegionError> {
        if let Some(cell) = sub.first_cell_outside(self) {
            return Err(RegionError::NotSubregion(cell));
        }
        let d = d as i64;
        Ok(self
            .rows
            .iter()
            .filter_map(|(&row, span)| {
                let cell = Cell::new(row, span.hi - d);
                (span.contains(cell.col) && sub.contains(cell))
                    .then(|| (cell, (self.cols[&cell.col].hi - row) as usize))
            })
            .collect())
    }

    /// Leg multiset `L(sub; d)` of the broken column, measured inside `self`.
    pub fn broken_column_legs(&self, sub: &Region, d: usize) -> Result<LegMultiset, RegionError> {
        Ok(self
            .broken_column(sub, d)?
            .into_iter()
            .map(|(_, leg)| leg)
            .collect())
    }

    /// Bounding-box grid with `#` for cells and `.` for gaps, one line per
    /// row, no trailing newline. The empty region renders as `""`.
    pub fn render_ascii(&self) -> String {
        let (Some(&top), Some(&bottom)) = (self.rows.keys().next(), self.rows.keys().last()) else {
            return String::new();
        };
        let left = *self.cols.keys().next().expect("non-empty");
        let right = *self.cols.keys().last().expect("non-empty");
        let mut lines = Vec::with_capacity((bottom - top + 1) as usize);
        for row in top..=bottom {
            let line: String = (left..=right)
                .map(|col| {
                    if self.contains(Cell::new(row, col)) {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect();
            lines.push(line);
        }
        lines.join("\n")
    }
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.rows.iter().map(|(r, s)| (r, (s.lo, s.hi))))
            .finish()
    }
}

/// Sorted `[row, col]` pairs.
impl Serialize for Region {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.cells().map(|c| [c.row, c.col]))
    }
}

fn check_box(mu: &Partition, rows: usize, cols: usize) -> Result<(), RegionError> {
    if mu.fits_in_box(rows, cols) {
        Ok(())
    } else {
        Err(RegionError::BoxViolation {
            mu: mu.clone(),
            rows,
            cols,
        })
    }
}

fn part(mu: &Partition, i: usize) -> i64 {
    mu.part(i) as i64
}

/// `R_{n,k}`: `n` rows of `k` cells.
pub fn rectangle(rows: usize, cols: usize) -> Region {
    let k = cols as i64;
    Region::shape((0..rows as i64).map(|r| (r, 0, k - 1)))
}

/// The Ferrers diagram of `mu`, left-justified at column 0.
pub fn ferrers(mu: &Partition) -> Region {
    Region::shape(
        mu.parts()
            .iter()
            .enumerate()
            .map(|(r, &p)| (r as i64, 0, p as i64 - 1)),
    )
}

/// `SR_{n,k}(μ)`: the rectangle with `μ` cut from the top-left corner and a
/// copy of `μ` glued on the right, first row to first row.
pub fn sr(rows: usize, cols: usize, mu: &Partition) -> Result<Region, RegionError> {
    check_box(mu, rows, cols)?;
    let k = cols as i64;
    Ok(Region::shape((0..rows).map(|r| {
        let shift = part(mu, r + 1);
        (r as i64, shift, shift + k - 1)
    })))
}

/// `SR_{n,k}(μ̃)`: the rectangle with a rotated `μ` cut from the bottom-right
/// corner and a rotated copy glued on the left, last row to last row.
pub fn sr_tilde(rows: usize, cols: usize, mu: &Partition) -> Result<Region, RegionError> {
    check_box(mu, rows, cols)?;
    Ok(Region::shape(sr_tilde_spans(rows, cols, mu)))
}

fn sr_tilde_spans(
    rows: usize,
    cols: usize,
    mu: &Partition,
) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
    let k = cols as i64;
    (0..rows).map(move |r| {
        let shift = part(mu, rows - r);
        (r as i64, -shift, k - 1 - shift)
    })
}

/// Rows `-1, -2, …` of a rotated `μ` sitting on top of the rectangle with its
/// last column on column `k−1`.
fn top_copy_spans(cols: usize, mu: &Partition) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
    let k = cols as i64;
    mu.parts()
        .iter()
        .enumerate()
        .map(move |(t, &p)| (-(t as i64) - 1, k - p as i64, k - 1))
}

/// `SQ(n,k,μ)`: `SR_{n,k}(μ̃)` plus a rotated `μ` glued on top, last column
/// to last column.
pub fn sq(rows: usize, cols: usize, mu: &Partition) -> Result<Region, RegionError> {
    check_box(mu, rows, cols)?;
    Ok(Region::shape(
        sr_tilde_spans(rows, cols, mu).chain(top_copy_spans(cols, mu)),
    ))
}

/// `p(μ)`: cells of `μ` on or below the main diagonal.
pub fn split_p(mu: &Partition) -> Region {
    Region::shape(
        mu.parts()
            .iter()
            .enumerate()
            .map(|(r, &p)| (r as i64, 0, (r as i64).min(p as i64 - 1))),
    )
}

/// `R(a) = R_{a,a+1}`.
pub fn rect_a(side: usize) -> Region {
    rectangle(side, side + 1)
}

/// `q(R(a))`: cells of `R(a)` strictly above the diagonal.
pub fn split_q_rect(side: usize) -> Region {
    let a = side as i64;
    Region::shape((0..a).map(|r| (r, r + 1, a)))
}

/// The diagonal split of `SQ(a, μ) = SQ(a, a+1, μ)`.
#[derive(Debug, Clone)]
pub struct SquareSplit {
    /// Remnant of `R(a)` strictly above the diagonal, `q(A)`.
    pub q_a: Region,
    /// The rotated copy of `μ` on top, `A₂`.
    pub a2: Region,
    pub whole: Region,
}

pub fn split_sq(side: usize, mu: &Partition) -> Result<SquareSplit, RegionError> {
    if !mu.is_doubled_shifted() {
        return Err(RegionError::NotDoubledShifted(mu.clone()));
    }
    let needed = mu.largest().saturating_sub(1);
    if side < needed {
        return Err(RegionError::SideTooSmall { side, needed });
    }
    let whole = sq(side, side + 1, mu)?;
    let a = side as i64;
    let a2 = Region::shape(whole.row_spans().filter(|&(r, _, _)| r < 0));
    let q_a = Region::shape(
        whole
            .row_spans()
            .filter(|&(r, _, _)| (0..a).contains(&r))
            .map(|(r, lo, hi)| (r, lo.max(r + 1), hi)),
    );
    Ok(SquareSplit { q_a, a2, whole })
}

/// The `S₁/T₁` split of `R_{n,k}` and the `S₂/T₂` split of `SQ(n,k,μ)`.
#[derive(Debug, Clone)]
pub struct StDecomposition {
    pub rect: Region,
    pub sq: Region,
    /// First `k−μ₁` columns of the rectangle plus `μ` reflected upside down
    /// along the bottom.
    pub s1: Region,
    pub t1: Region,
    /// The rotated `μ` glued on the left of `SQ` plus the next `k−μ₁` columns.
    pub s2: Region,
    pub t2: Region,
}

pub fn s_t_decomposition(
    rows: usize,
    cols: usize,
    mu: &Partition,
) -> Result<StDecomposition, RegionError> {
    let sq_region = sq(rows, cols, mu)?;
    let rect = rectangle(rows, cols);
    let k = cols as i64;
    let free = k - part(mu, 1);
    // Row r of S₁ and of S₂ both carry μ_{n−r} extra cells.
    let extra = |r: usize| part(mu, rows - r);
    let s1 = Region::shape((0..rows).map(|r| (r as i64, 0, free + extra(r) - 1)));
    let t1 = Region::shape((0..rows).map(|r| (r as i64, free + extra(r), k - 1)));
    let s2 = Region::shape((0..rows).map(|r| (r as i64, -extra(r), free - 1)));
    let t2 = Region::shape(sq_region.row_spans().map(|(r, lo, hi)| {
        if r >= 0 {
            (r, lo.max(free), hi)
        } else {
            (r, lo, hi)
        }
    }));
    Ok(StDecomposition {
        rect,
        sq: sq_region,
        s1,
        t1,
        s2,
        t2,
    })
}
