//! Partitions, cells, skew shapes and their corner combinatorics.
//!
//! Cells are 1-based `(row, col)` pairs. Row 0 or column 0 only shows up for
//! the two extreme cocorners of a skew shape, `(l, 0)` and `(0, λ₁)`.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of ℤ², usually a cell of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub const fn transpose(self) -> Self {
        Cell { row: self.col, col: self.row }
    }

    /// `self ≤↖ other`: weakly above and weakly left.
    pub fn leq_nw(self, other: Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    /// `self ≤↙ other`: weakly below and weakly left.
    pub fn leq_sw(self, other: Cell) -> bool {
        other.row <= self.row && self.col <= other.col
    }

    pub fn lt_sw(self, other: Cell) -> bool {
        self != other && self.leq_sw(other)
    }

    /// Sort key of a linear extension of `≤↙`: bottom rows first, then left to right.
    ///
    /// This is the order of the row reading.
    pub fn sw_key(self) -> (Reverse<usize>, usize) {
        (Reverse(self.row), self.col)
    }

    /// Compare along the `≤↙` linear extension used throughout the crate.
    pub fn sw_cmp(&self, other: &Cell) -> Ordering {
        self.sw_key().cmp(&other.sw_key())
    }

    pub fn is_extreme(self) -> bool {
        self.row == 0 || self.col == 0
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    /// Accepts `(r,c)` or `r,c`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let mut it = inner.split(',').map(|p| p.trim().parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(row)), Some(Ok(col)), None) => Ok(Cell { row, col }),
            _ => Err(Error::Parse(format!("invalid cell `{s}`"))),
        }
    }
}

pub fn leq_nw(a: Cell, b: Cell) -> bool {
    a.leq_nw(b)
}

pub fn leq_sw(a: Cell, b: Cell) -> bool {
    a.leq_sw(b)
}

/// An integer partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part before a positive one"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(n − m, 1ᵐ)`; requires `m < n` unless `n == 0`.
    pub fn hook(n: usize, m: usize) -> Result<Self> {
        if n == 0 && m == 0 {
            return Ok(Partition::empty());
        }
        if m >= n {
            return Err(Error::Range(format!("hook (n-m,1^m) needs m < n, got n={n}, m={m}")));
        }
        let mut parts = vec![n - m];
        parts.extend(std::iter::repeat_n(1, m));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero outside `1..=l(λ)`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_corner(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.part(c.row) == c.col && self.part(c.row + 1) < c.col
    }

    pub fn is_cocorner(&self, c: Cell) -> bool {
        c.row >= 1
            && c.col >= 1
            && self.part(c.row) + 1 == c.col
            && (c.row == 1 || self.part(c.row - 1) >= c.col)
    }

    /// Corners sorted by `≤↙`.
    pub fn corners(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect();
        out.sort_by(Cell::sw_cmp);
        out
    }

    /// Cocorners sorted by `≤↙`.
    pub fn cocorners(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect();
        out.sort_by(Cell::sw_cmp);
        out
    }

    /// `λ ∖ c` for a corner `c`.
    pub fn remove_corner(&self, c: Cell) -> Result<Partition> {
        if !self.is_corner(c) {
            return Err(Error::InvalidPartition(format!("{c} is not a corner of {self}")));
        }
        let mut parts = self.0.clone();
        parts[c.row - 1] -= 1;
        Partition::new(parts)
    }

    /// `λ ⨿ c` for a cocorner `c`.
    pub fn add_cocorner(&self, c: Cell) -> Result<Partition> {
        if !self.is_cocorner(c) {
            return Err(Error::InvalidPartition(format!("{c} is not a cocorner of {self}")));
        }
        let mut parts = self.0.clone();
        if c.row > parts.len() {
            parts.push(1);
        } else {
            parts[c.row - 1] += 1;
        }
        Ok(Partition(parts))
    }

    /// Cells of the diagram, row by row from the top.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `true` if the partition is a hook `(n − m, 1ᵐ)`.
    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `""` and `"0"` both mean the empty partition.
    /// Parts must already be weakly decreasing and positive.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("`{s}` has a zero part")));
        }
        Partition::new(parts)
    }
}

/// A skew partition `λ/ζ` with `ζ ⊆ λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SkewShapeRepr", into = "SkewShapeRepr")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize)]
struct SkewShapeRepr {
    outer: Partition,
    inner: Partition,
}

impl TryFrom<SkewShapeRepr> for SkewShape {
    type Error = Error;

    fn try_from(r: SkewShapeRepr) -> Result<Self> {
        SkewShape::new(r.outer, r.inner)
    }
}

impl From<SkewShape> for SkewShapeRepr {
    fn from(s: SkewShape) -> Self {
        SkewShapeRepr { outer: s.outer, inner: s.inner }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// `l(λ/ζ) = l(λ)`, which counts empty rows too.
    pub fn len(&self) -> usize {
        self.outer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Columns of row `i` (1-based) that belong to the diagram.
    pub fn row_cols(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.inner.part(i) + 1..=self.outer.part(i)
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.outer.contains_cell(c) && !self.inner.contains_cell(c)
    }

    /// Diagram cells in row-reading order: bottom row first, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .rev()
            .flat_map(|i| self.row_cols(i).map(move |j| Cell::new(i, j)))
            .collect()
    }

    /// Cells of the diagram that are cocorners of the inner partition, sorted by `≤↙`.
    pub fn inner_corners(&self) -> Vec<Cell> {
        self.inner.cocorners().into_iter().filter(|&c| self.outer.contains_cell(c)).collect()
    }

    /// Corners of the inner partition, sorted by `≤↙`.
    pub fn inner_cocorners(&self) -> Vec<Cell> {
        self.inner.corners()
    }

    /// `(l, 0)` when `(l, 1)` is a diagram cell and `(0, λ₁)` when `(1, λ₁)` is,
    /// sorted by `≤↙`.
    pub fn extreme_cocorners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        let l = self.len();
        if l > 0 && self.contains_cell(Cell::new(l, 1)) {
            out.push(Cell::new(l, 0));
        }
        let w = self.outer.first();
        if w > 0 && self.contains_cell(Cell::new(1, w)) {
            out.push(Cell::new(0, w));
        }
        out
    }

    /// Inner and extreme cocorners together, sorted by `≤↙`.
    pub fn icc_bar(&self) -> Vec<Cell> {
        let mut out = self.inner_cocorners();
        out.extend(self.extreme_cocorners());
        out.sort_by(Cell::sw_cmp);
        out
    }

    pub fn is_inner_corner(&self, c: Cell) -> bool {
        self.inner.is_cocorner(c) && self.outer.contains_cell(c)
    }

    pub fn is_inner_cocorner(&self, c: Cell) -> bool {
        self.inner.is_corner(c)
    }

    /// `λᵗ/ζᵗ`.
    pub fn transpose(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// `λ/(ζ ∖ z)` for an inner cocorner `z`.
    pub fn grow_inward(&self, z: Cell) -> Result<SkewShape> {
        let inner = self.inner.remove_corner(z)?;
        Ok(SkewShape { outer: self.outer.clone(), inner })
    }

    /// `λ/(ζ ⨿ w)` for an inner corner `w`.
    pub fn shrink_inward(&self, w: Cell) -> Result<SkewShape> {
        if !self.is_inner_corner(w) {
            return Err(Error::NotInnerCorner(w));
        }
        let inner = self.inner.add_cocorner(w)?;
        Ok(SkewShape { outer: self.outer.clone(), inner })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn skew(outer: Partition, inner: Partition) -> Result<SkewShape> {
    SkewShape::new(outer, inner)
}

pub fn transpose_shape(s: &SkewShape) -> SkewShape {
    s.transpose()
}

pub fn inner_corners(s: &SkewShape) -> Vec<Cell> {
    s.inner_corners()
}

pub fn inner_cocorners(s: &SkewShape) -> Vec<Cell> {
    s.inner_cocorners()
}

pub fn icc_bar(s: &SkewShape) -> Vec<Cell> {
    s.icc_bar()
}
