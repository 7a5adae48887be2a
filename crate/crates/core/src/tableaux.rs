//! Partial tableaux on skew shapes and backward row insertion/deletion.
//!
//! Insertion works from the bottom row upward: the inserted value bumps the
//! right-most smaller entry of the last row, that entry bumps the right-most
//! smaller entry of the row above, and so on until a row has nothing smaller.
//! The route then ends on the corner `(r, η_r)` of the inner shape, which
//! becomes a new cell. A route that runs past the first row ends at the
//! extreme cocorner `(0, ν₁)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};

/// An injective filling of a skew diagram, strictly increasing along rows
/// (left to right) and columns (top to bottom).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct PartialTableau {
    shape: SkewShape,
    // rows[i - 1][k] is the entry at (i, inner_i + 1 + k)
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    outer: Partition,
    inner: Partition,
    entries: Vec<[u32; 3]>,
}

impl TryFrom<TableauRepr> for PartialTableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        let shape = SkewShape::new(r.outer, r.inner)?;
        let mut entries = Vec::with_capacity(r.entries.len());
        for [row, col, v] in r.entries {
            entries.push((Cell::new(row as usize, col as usize), v));
        }
        PartialTableau::new(shape, entries)
    }
}

impl From<PartialTableau> for TableauRepr {
    fn from(t: PartialTableau) -> Self {
        let entries = t
            .entries()
            .into_iter()
            .map(|(c, v)| [c.row as u32, c.col as u32, v])
            .collect();
        TableauRepr { outer: t.shape.outer().clone(), inner: t.shape.inner().clone(), entries }
    }
}

/// The route of a backward row insertion, listed from the bottom row upward.
///
/// `displaced[k]` is the value that lands on `cells[k]` when the insertion is
/// carried out. The last cell is the bumping destination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BumpRoute<V> {
    pub cells: Vec<Cell>,
    pub displaced: Vec<V>,
}

impl<V> BumpRoute<V> {
    pub fn destination(&self) -> Cell {
        *self.cells.last().expect("bump routes are never empty")
    }
}

impl PartialTableau {
    pub fn new(shape: SkewShape, entries: impl IntoIterator<Item = (Cell, u32)>) -> Result<Self> {
        let mut map = HashMap::new();
        for (c, v) in entries {
            if !shape.contains_cell(c) {
                return Err(Error::InvalidTableau(format!("{c} is outside {shape}")));
            }
            if map.insert(c, v).is_some() {
                return Err(Error::InvalidTableau(format!("{c} assigned twice")));
            }
        }
        Self::from_map(shape, &map)
    }

    /// Builds a tableau from row contents, top row first. `rows[i]` lists the
    /// entries of row `i + 1` from left to right.
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut rows = rows;
        if rows.len() > shape.len() {
            return Err(Error::InvalidTableau(format!("too many rows for {shape}")));
        }
        rows.resize(shape.len(), Vec::new());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    shape.row_len(i + 1)
                )));
            }
        }
        let t = PartialTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn from_map(shape: SkewShape, map: &HashMap<Cell, u32>) -> Result<Self> {
        let mut rows = Vec::with_capacity(shape.len());
        for i in 1..=shape.len() {
            let mut row = Vec::with_capacity(shape.row_len(i));
            for j in shape.row_cols(i) {
                let c = Cell::new(i, j);
                match map.get(&c) {
                    Some(&v) => row.push(v),
                    None => return Err(Error::InvalidTableau(format!("{c} has no entry"))),
                }
            }
            rows.push(row);
        }
        if map.len() != shape.size() {
            return Err(Error::InvalidTableau("entries outside the shape".into()));
        }
        let t = PartialTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for (c, v) in self.entries() {
            if v == 0 {
                return Err(Error::InvalidTableau(format!("{c} holds 0")));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidTableau(format!("value {v} repeated")));
            }
            let right = Cell::new(c.row, c.col + 1);
            let below = Cell::new(c.row + 1, c.col);
            for n in [right, below] {
                if let Some(w) = self.get(n) {
                    if w <= v {
                        return Err(Error::InvalidTableau(format!(
                            "{c}={v} is not below {n}={w}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        if !self.shape.contains_cell(c) {
            return None;
        }
        let start = self.shape.inner().part(c.row) + 1;
        Some(self.rows[c.row - 1][c.col - start])
    }

    /// Entries of row `i` (1-based), left to right.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i - 1]
    }

    /// All `(cell, value)` pairs in row-reading order.
    pub fn entries(&self) -> Vec<(Cell, u32)> {
        self.shape.cells().into_iter().map(|c| (c, self.get(c).unwrap())).collect()
    }

    pub fn contains_value(&self, v: u32) -> bool {
        self.rows.iter().any(|r| r.contains(&v))
    }

    pub fn position_of(&self, v: u32) -> Option<Cell> {
        self.entries().into_iter().find(|&(_, w)| w == v).map(|(c, _)| c)
    }

    pub fn values(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.rows.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    /// Bumping route and destination of `(self, a)`.
    pub fn bump_route(&self, a: u32) -> Result<BumpRoute<u32>> {
        let l = self.shape.len();
        if l == 0 {
            return Err(Error::EmptyShape);
        }
        if self.contains_value(a) {
            return Err(Error::DuplicateValue(a));
        }
        let mut cells = Vec::new();
        let mut displaced = Vec::new();
        let mut carried = a;
        for i in (1..=l).rev() {
            let row = self.row(i);
            let start = self.shape.inner().part(i);
            displaced.push(carried);
            match row.iter().rposition(|&v| v < carried) {
                Some(k) => {
                    cells.push(Cell::new(i, start + 1 + k));
                    carried = row[k];
                }
                None => {
                    cells.push(Cell::new(i, start));
                    return Ok(BumpRoute { cells, displaced });
                }
            }
        }
        cells.push(Cell::new(0, self.shape.outer().first()));
        displaced.push(carried);
        Ok(BumpRoute { cells, displaced })
    }

    pub fn bump_destination(&self, a: u32) -> Result<Cell> {
        Ok(self.bump_route(a)?.destination())
    }

    pub fn is_addable(&self, a: u32) -> bool {
        matches!(self.bump_destination(a), Ok(u) if !u.is_extreme())
    }

    /// Backward row insertion `E_a T`.
    pub fn insert(&self, a: u32) -> Result<PartialTableau> {
        Ok(self.insert_with_route(a)?.0)
    }

    pub fn insert_with_route(&self, a: u32) -> Result<(PartialTableau, BumpRoute<u32>)> {
        let route = self.bump_route(a)?;
        let u = route.destination();
        if u.is_extreme() {
            return Err(Error::NotAddable(u));
        }
        let shape = self.shape.grow_inward(u)?;
        let mut map: HashMap<Cell, u32> = self.entries().into_iter().collect();
        for (&c, &v) in route.cells.iter().zip(&route.displaced) {
            map.insert(c, v);
        }
        let t = PartialTableau::from_map(shape, &map)?;
        Ok((t, route))
    }

    /// The downward sequence `y_s = v, …, y_l` of the deletion at `v`, if `v`
    /// is removable.
    pub fn deletion_path(&self, v: Cell) -> Result<Vec<Cell>> {
        if !self.shape.is_inner_corner(v) {
            return Err(Error::NotInnerCorner(v));
        }
        let mut path = vec![v];
        let mut prev = self.get(v).expect("inner corners are diagram cells");
        for i in v.row + 1..=self.shape.len() {
            let row = self.row(i);
            let start = self.shape.inner().part(i);
            match row.iter().position(|&w| w > prev) {
                Some(k) => {
                    path.push(Cell::new(i, start + 1 + k));
                    prev = row[k];
                }
                None => return Err(Error::NotRemovable(v)),
            }
        }
        Ok(path)
    }

    pub fn is_removable(&self, v: Cell) -> bool {
        self.deletion_path(v).is_ok()
    }

    /// Removable corners sorted by `≤↙`.
    pub fn removable_corners(&self) -> Vec<Cell> {
        self.shape.inner_corners().into_iter().filter(|&v| self.is_removable(v)).collect()
    }

    /// Deletion `F_v T` with its output value.
    pub fn delete(&self, v: Cell) -> Result<(PartialTableau, u32)> {
        let path = self.deletion_path(v)?;
        let shape = self.shape.shrink_inward(v)?;
        let mut map: HashMap<Cell, u32> = self.entries().into_iter().collect();
        let values: Vec<u32> = path.iter().map(|&c| map[&c]).collect();
        map.remove(&v);
        for k in 1..path.len() {
            map.insert(path[k], values[k - 1]);
        }
        let out = *values.last().unwrap();
        Ok((PartialTableau::from_map(shape, &map)?, out))
    }
}

impl fmt::Display for PartialTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::tableau_ascii(self, &[]))
    }
}

/// An injective order map from `(D, ≤↙)` to the positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reading {
    by_cell: BTreeMap<Cell, u32>,
    by_value: BTreeMap<u32, Cell>,
}

impl Reading {
    pub fn new(entries: impl IntoIterator<Item = (Cell, u32)>) -> Result<Self> {
        let mut by_cell = BTreeMap::new();
        let mut by_value = BTreeMap::new();
        for (c, v) in entries {
            if v == 0 {
                return Err(Error::InvalidReading(format!("{c} holds 0")));
            }
            if by_cell.insert(c, v).is_some() {
                return Err(Error::InvalidReading(format!("{c} assigned twice")));
            }
            if by_value.insert(v, c).is_some() {
                return Err(Error::InvalidReading(format!("value {v} repeated")));
            }
        }
        let cells: Vec<(Cell, u32)> = by_cell.iter().map(|(&c, &v)| (c, v)).collect();
        for &(x, a) in &cells {
            for &(y, b) in &cells {
                if x.lt_sw(y) && a >= b {
                    return Err(Error::InvalidReading(format!(
                        "{x} <↙ {y} but {a} >= {b}"
                    )));
                }
            }
        }
        Ok(Reading { by_cell, by_value })
    }

    /// Numbers the given cells `1, 2, …` along the row-reading order.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_by(Cell::sw_cmp);
        cells.dedup();
        let by_cell: BTreeMap<Cell, u32> =
            cells.iter().enumerate().map(|(k, &c)| (c, k as u32 + 1)).collect();
        let by_value = by_cell.iter().map(|(&c, &v)| (v, c)).collect();
        Reading { by_cell, by_value }
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.by_cell.get(&c).copied()
    }

    pub fn cell_of(&self, v: u32) -> Option<Cell> {
        self.by_value.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.by_cell.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_cell.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.by_cell.keys().copied()
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.by_value.keys().copied()
    }

    /// Restriction to the diagram of `shape`.
    pub fn restrict(&self, shape: &SkewShape) -> Reading {
        let by_cell: BTreeMap<Cell, u32> = self
            .by_cell
            .iter()
            .filter(|(c, _)| shape.contains_cell(**c))
            .map(|(&c, &v)| (c, v))
            .collect();
        let by_value = by_cell.iter().map(|(&c, &v)| (v, c)).collect();
        Reading { by_cell, by_value }
    }

    pub fn covers(&self, shape: &SkewShape) -> bool {
        self.by_cell.len() == shape.size() && self.by_cell.keys().all(|&c| shape.contains_cell(c))
    }
}

/// The row reading: cells numbered from the bottom row up, left to right in each row.
pub fn row_reading(shape: &SkewShape) -> Reading {
    Reading::from_cells(shape.cells())
}

pub fn bump_destination(t: &PartialTableau, a: u32) -> Result<BumpRoute<u32>> {
    t.bump_route(a)
}

pub fn insert(t: &PartialTableau, a: u32) -> Result<PartialTableau> {
    t.insert(a)
}

pub fn delete(t: &PartialTableau, v: Cell) -> Result<(PartialTableau, u32)> {
    t.delete(v)
}
