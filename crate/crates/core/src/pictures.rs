//! Zelevinsky pictures between skew diagrams.
//!
//! A picture `Π: D(ν/η) → D(λ/ζ)` is a bijection that is order-preserving
//! from `≤↖` to `≤↙`, and whose inverse is order-preserving from `≤↖` to
//! `≤↙` as well. Composing with a reading `R` of the target turns a picture
//! into a Remmel–Whitney tableau, and insertion/deletion on pictures is the
//! tableau machinery of [`crate::tableaux`] transported through `R`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::{row_reading, BumpRoute, PartialTableau, Reading};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PictureRepr", into = "PictureRepr")]
pub struct Picture {
    source: SkewShape,
    target: SkewShape,
    // images[i - 1][k] is the image of (i, η_i + 1 + k)
    images: Vec<Vec<Cell>>,
}

#[derive(Serialize, Deserialize)]
struct PictureRepr {
    source: SkewShape,
    target: SkewShape,
    map: Vec<[usize; 4]>,
}

impl TryFrom<PictureRepr> for Picture {
    type Error = Error;

    fn try_from(r: PictureRepr) -> Result<Self> {
        let pairs = r.map.iter().map(|m| (Cell::new(m[0], m[1]), Cell::new(m[2], m[3])));
        Picture::new(r.source, r.target, pairs)
    }
}

impl From<Picture> for PictureRepr {
    fn from(p: Picture) -> Self {
        let map = p.pairs().into_iter().map(|(x, y)| [x.row, x.col, y.row, y.col]).collect();
        PictureRepr { source: p.source, target: p.target, map }
    }
}

impl Picture {
    /// Builds a picture and checks both order conditions.
    pub fn new(
        source: SkewShape,
        target: SkewShape,
        pairs: impl IntoIterator<Item = (Cell, Cell)>,
    ) -> Result<Self> {
        if source.size() != target.size() {
            return Err(Error::SizeMismatch(format!(
                "|{source}| = {} but |{target}| = {}",
                source.size(),
                target.size()
            )));
        }
        let map: HashMap<Cell, Cell> = {
            let mut map = HashMap::new();
            for (x, y) in pairs {
                if !source.contains_cell(x) {
                    return Err(Error::InvalidPicture(format!("{x} is outside {source}")));
                }
                if !target.contains_cell(y) {
                    return Err(Error::InvalidPicture(format!("{y} is outside {target}")));
                }
                if map.insert(x, y).is_some() {
                    return Err(Error::InvalidPicture(format!("{x} mapped twice")));
                }
            }
            map
        };
        if map.len() != source.size() {
            return Err(Error::InvalidPicture("map is not defined on every source cell".into()));
        }
        let mut images = Vec::with_capacity(source.len());
        for i in 1..=source.len() {
            images.push(source.row_cols(i).map(|j| map[&Cell::new(i, j)]).collect());
        }
        let p = Picture { source, target, images };
        p.validate()?;
        Ok(p)
    }

    /// The empty picture between two empty diagrams.
    pub fn empty(source: SkewShape, target: SkewShape) -> Result<Self> {
        Picture::new(source, target, std::iter::empty())
    }

    fn validate(&self) -> Result<()> {
        let inverse = self.inverse_map();
        if inverse.len() != self.target.size() {
            return Err(Error::InvalidPicture("map is not injective".into()));
        }
        for (x, y) in self.pairs() {
            for n in [Cell::new(x.row, x.col + 1), Cell::new(x.row + 1, x.col)] {
                if let Some(yn) = self.image(n) {
                    if !y.leq_sw(yn) {
                        return Err(Error::InvalidPicture(format!(
                            "{x} ≤↖ {n} but {y} ≰↙ {yn}"
                        )));
                    }
                }
            }
        }
        for (&y, &x) in &inverse {
            for n in [Cell::new(y.row, y.col + 1), Cell::new(y.row + 1, y.col)] {
                if let Some(&xn) = inverse.get(&n) {
                    if !x.leq_sw(xn) {
                        return Err(Error::InvalidPicture(format!(
                            "{y} ≤↖ {n} but preimages {x} ≰↙ {xn}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &SkewShape {
        &self.source
    }

    pub fn target(&self) -> &SkewShape {
        &self.target
    }

    pub fn size(&self) -> usize {
        self.source.size()
    }

    pub fn image(&self, x: Cell) -> Option<Cell> {
        if !self.source.contains_cell(x) {
            return None;
        }
        let start = self.source.inner().part(x.row) + 1;
        Some(self.images[x.row - 1][x.col - start])
    }

    pub fn preimage(&self, y: Cell) -> Option<Cell> {
        self.pairs().into_iter().find(|&(_, b)| b == y).map(|(a, _)| a)
    }

    fn inverse_map(&self) -> HashMap<Cell, Cell> {
        self.pairs().into_iter().map(|(x, y)| (y, x)).collect()
    }

    /// `(x, Π(x))` in the row-reading order of the source.
    pub fn pairs(&self) -> Vec<(Cell, Cell)> {
        self.source.cells().into_iter().map(|x| (x, self.image(x).unwrap())).collect()
    }

    fn row_images(&self, i: usize) -> &[Cell] {
        &self.images[i - 1]
    }

    /// Bumping route of `(Π, z)` for `z` an inner or extreme cocorner of the target.
    ///
    /// `displaced[k]` is the target cell that `cells[k]` is sent to by `E_z Π`.
    pub fn bump_route(&self, z: Cell) -> Result<BumpRoute<Cell>> {
        if !self.target.icc_bar().contains(&z) {
            return Err(Error::InvalidCocorner(z));
        }
        let l = self.source.len();
        if l == 0 {
            return Err(Error::EmptyShape);
        }
        let mut cells = Vec::new();
        let mut displaced = Vec::new();
        let mut carried = z;
        for i in (1..=l).rev() {
            let row = self.row_images(i);
            let start = self.source.inner().part(i);
            displaced.push(carried);
            // the row images form a ≤↙ chain; the predecessor of `carried`
            // in it is the right-most image strictly below it
            match row.iter().rposition(|y| y.sw_cmp(&carried).is_lt()) {
                Some(k) => {
                    debug_assert!(row[k].leq_sw(carried));
                    cells.push(Cell::new(i, start + 1 + k));
                    carried = row[k];
                }
                None => {
                    cells.push(Cell::new(i, start));
                    return Ok(BumpRoute { cells, displaced });
                }
            }
        }
        cells.push(Cell::new(0, self.source.outer().first()));
        displaced.push(carried);
        Ok(BumpRoute { cells, displaced })
    }

    pub fn bump_destination(&self, z: Cell) -> Result<Cell> {
        Ok(self.bump_route(z)?.destination())
    }

    /// `z` is an inner cocorner whose bumping destination is an inner cocorner.
    pub fn is_addable(&self, z: Cell) -> bool {
        !z.is_extreme() && matches!(self.bump_destination(z), Ok(u) if !u.is_extreme())
    }

    pub fn addable_cocorners(&self) -> Vec<Cell> {
        self.target.inner_cocorners().into_iter().filter(|&z| self.is_addable(z)).collect()
    }

    /// Row insertion `E_z Π`.
    pub fn insert(&self, z: Cell) -> Result<Picture> {
        let route = self.bump_route(z)?;
        let u = route.destination();
        if z.is_extreme() {
            return Err(Error::NotAddable(z));
        }
        if u.is_extreme() {
            return Err(Error::NotAddable(u));
        }
        let source = self.source.grow_inward(u)?;
        let target = self.target.grow_inward(z)?;
        let mut map: HashMap<Cell, Cell> = self.pairs().into_iter().collect();
        for (&x, &y) in route.cells.iter().zip(&route.displaced) {
            map.insert(x, y);
        }
        Picture::new(source, target, map)
    }

    /// The downward sequence `y_s = v, …, y_l` of the deletion at `v`.
    pub fn deletion_path(&self, v: Cell) -> Result<Vec<Cell>> {
        if !self.source.is_inner_corner(v) {
            return Err(Error::NotInnerCorner(v));
        }
        let mut path = vec![v];
        let mut prev = self.image(v).expect("inner corners are diagram cells");
        for i in v.row + 1..=self.source.len() {
            let row = self.row_images(i);
            let start = self.source.inner().part(i);
            match row.iter().position(|y| y.sw_cmp(&prev).is_gt()) {
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
        self.source.inner_corners().into_iter().filter(|&v| self.is_removable(v)).collect()
    }

    /// Deletion `F_v Π` together with the output cell `w`, an inner corner of the target.
    pub fn delete(&self, v: Cell) -> Result<(Picture, Cell)> {
        let path = self.deletion_path(v)?;
        let mut map: HashMap<Cell, Cell> = self.pairs().into_iter().collect();
        let images: Vec<Cell> = path.iter().map(|c| map[c]).collect();
        let w = *images.last().unwrap();
        map.remove(&v);
        for k in 1..path.len() {
            map.insert(path[k], images[k - 1]);
        }
        let source = self.source.shrink_inward(v)?;
        let target = self
            .target
            .shrink_inward(w)
            .map_err(|_| Error::InvalidPicture(format!("deletion output {w} is not an inner corner")))?;
        Ok((Picture::new(source, target, map)?, w))
    }
}

impl fmt::Display for Picture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::picture_ascii(self))
    }
}

/// `R ∘ Π` for a reading `R` defined on the whole target diagram.
pub fn picture_to_rw(p: &Picture, r: &Reading) -> Result<PartialTableau> {
    let r = r.restrict(p.target());
    if !r.covers(p.target()) {
        return Err(Error::InvalidReading(format!("reading does not cover {}", p.target())));
    }
    let entries = p.pairs().into_iter().map(|(x, y)| (x, r.get(y).unwrap()));
    PartialTableau::new(p.source().clone(), entries)
}

/// Checks the three Remmel–Whitney conditions of `t` against the reading `r` of `target`.
pub fn check_remmel_whitney(t: &PartialTableau, target: &SkewShape, r: &Reading) -> Result<()> {
    let r = r.restrict(target);
    if !r.covers(target) {
        return Err(Error::InvalidReading(format!("reading does not cover {target}")));
    }
    let image: Vec<u32> = t.values();
    let expected: Vec<u32> = r.values().collect();
    if image != expected {
        return Err(Error::NotRemmelWhitney("image differs from the image of the reading".into()));
    }
    let position: HashMap<u32, Cell> = t.entries().into_iter().map(|(c, v)| (v, c)).collect();
    for y in target.cells() {
        for n in [Cell::new(y.row, y.col + 1), Cell::new(y.row + 1, y.col)] {
            if !target.contains_cell(n) {
                continue;
            }
            let (a, b) = (r.get(y).unwrap(), r.get(n).unwrap());
            let (xa, xb) = (position[&a], position[&b]);
            if !xa.leq_sw(xb) {
                return Err(Error::NotRemmelWhitney(format!(
                    "T⁻¹({a}) = {xa} ≰↙ {xb} = T⁻¹({b}) for adjacent {y}, {n}"
                )));
            }
        }
    }
    Ok(())
}

/// Inverse of [`picture_to_rw`].
pub fn rw_to_picture(t: &PartialTableau, target: &SkewShape, r: &Reading) -> Result<Picture> {
    check_remmel_whitney(t, target, r)?;
    let r = r.restrict(target);
    let pairs = t.entries().into_iter().map(|(x, v)| (x, r.cell_of(v).unwrap()));
    Picture::new(t.shape().clone(), target.clone(), pairs).map_err(|e| match e {
        Error::InvalidPicture(msg) => Error::NotRemmelWhitney(msg),
        other => other,
    })
}

struct Search<'a> {
    src: Vec<Cell>,
    tgt: Vec<Cell>,
    // source neighbours already placed when a cell is visited: (left, below)
    src_left: Vec<Option<usize>>,
    src_below: Vec<Option<usize>>,
    // target neighbours: cells that must have ≤↙-smaller preimages, and larger ones
    tgt_before: Vec<Vec<usize>>,
    tgt_after: Vec<Vec<usize>>,
    assign: Vec<usize>,
    preimage: Vec<Option<usize>>,
    visit: &'a mut dyn FnMut(&[usize]),
}

impl Search<'_> {
    fn new<'a>(source: &SkewShape, target: &SkewShape, visit: &'a mut dyn FnMut(&[usize])) -> Search<'a> {
        let src = source.cells();
        let tgt = target.cells();
        let src_index: HashMap<Cell, usize> = src.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let tgt_index: HashMap<Cell, usize> = tgt.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let src_left = src
            .iter()
            .map(|c| c.col.checked_sub(1).and_then(|j| src_index.get(&Cell::new(c.row, j)).copied()))
            .collect();
        let src_below = src.iter().map(|c| src_index.get(&Cell::new(c.row + 1, c.col)).copied()).collect();
        let mut tgt_before = vec![Vec::new(); tgt.len()];
        let mut tgt_after = vec![Vec::new(); tgt.len()];
        for (k, c) in tgt.iter().enumerate() {
            for n in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                if let Some(&kn) = tgt_index.get(&n) {
                    tgt_after[k].push(kn);
                    tgt_before[kn].push(k);
                }
            }
        }
        let n = src.len();
        Search {
            src,
            tgt,
            src_left,
            src_below,
            tgt_before,
            tgt_after,
            assign: vec![usize::MAX; n],
            preimage: vec![None; n],
            visit,
        }
    }

    fn fits(&self, k: usize, t: usize) -> bool {
        let y = self.tgt[t];
        if let Some(kl) = self.src_left[k] {
            if !self.tgt[self.assign[kl]].leq_sw(y) {
                return false;
            }
        }
        if let Some(kb) = self.src_below[k] {
            if !y.leq_sw(self.tgt[self.assign[kb]]) {
                return false;
            }
        }
        let x = self.src[k];
        for &tb in &self.tgt_before[t] {
            if let Some(kb) = self.preimage[tb] {
                if !self.src[kb].leq_sw(x) {
                    return false;
                }
            }
        }
        for &ta in &self.tgt_after[t] {
            if let Some(ka) = self.preimage[ta] {
                if !x.leq_sw(self.src[ka]) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize) {
        if k == self.src.len() {
            (self.visit)(&self.assign);
            return;
        }
        for t in 0..self.tgt.len() {
            if self.preimage[t].is_some() || !self.fits(k, t) {
                continue;
            }
            self.assign[k] = t;
            self.preimage[t] = Some(k);
            self.run(k + 1);
            self.preimage[t] = None;
        }
        self.assign[k] = usize::MAX;
    }
}

/// Backtracking over Remmel–Whitney tableaux of row-reading type: source cells
/// are filled in row-reading order with target cells in increasing row-reading
/// value, so the output is sorted lexicographically by that value sequence.
fn search(source: &SkewShape, target: &SkewShape, visit: &mut dyn FnMut(&[usize])) {
    if source.size() != target.size() {
        return;
    }
    let mut s = Search::new(source, target, visit);
    s.run(0);
}

/// All pictures from `source` onto `target`.
pub fn enumerate_pictures(source: &SkewShape, target: &SkewShape) -> Vec<Picture> {
    let src = source.cells();
    let tgt = target.cells();
    let mut out = Vec::new();
    search(source, target, &mut |assign| {
        // `src` runs bottom row first; rebuild rows top to bottom
        let mut images: Vec<Vec<Cell>> = vec![Vec::new(); source.len()];
        for (&x, &t) in src.iter().zip(assign) {
            images[x.row - 1].push(tgt[t]);
        }
        out.push(Picture { source: source.clone(), target: target.clone(), images });
    });
    out
}

/// `|Pic(source, target)|` without materialising the pictures.
pub fn count_pictures(source: &SkewShape, target: &SkewShape) -> usize {
    let mut count = 0;
    search(source, target, &mut |_| count += 1);
    count
}

pub fn picture_bump_destination(p: &Picture, z: Cell) -> Result<BumpRoute<Cell>> {
    p.bump_route(z)
}

pub fn picture_insert(p: &Picture, z: Cell) -> Result<Picture> {
    p.insert(z)
}

pub fn picture_delete(p: &Picture, v: Cell) -> Result<(Picture, Cell)> {
    p.delete(v)
}

/// Row reading of `target` extended by the extra point `z`, for transporting
/// picture insertion to tableau insertion.
pub fn extended_row_reading(target: &SkewShape, z: Cell) -> Reading {
    Reading::from_cells(target.cells().into_iter().chain(std::iter::once(z)))
}

/// `R_row ∘ Π`.
pub fn row_rw_tableau(p: &Picture) -> PartialTableau {
    picture_to_rw(p, &row_reading(p.target())).expect("row reading covers the target")
}
