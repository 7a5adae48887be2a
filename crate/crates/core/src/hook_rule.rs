//! Pictures of type `(λ, μ; ζ)` and the hook multiplicity rule.
//!
//! A picture of type `(λ, μ; ζ)` maps `(μ/ζ)ᵗ` onto `λ/ζ`. Its *balanced
//! cocorner* is an inner cocorner `z` of the target whose bumping destination
//! is `zᵗ`; its *balanced corner* is a removable corner `v` of the source whose
//! deletion outputs `vᵗ`. Every picture has exactly one of the two, `E_z` and
//! `F_v` swap the two classes, and the multiplicity of `L(μ)` in
//! `L(λ) ⊗ L(n−m, 1^m)` is the number of pictures of size `m` carrying a
//! balanced cocorner.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pictures::{enumerate_pictures, Picture};
use crate::shapes::{Cell, Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypedPicture {
    pub lambda: Partition,
    pub mu: Partition,
    pub zeta: Partition,
    pub picture: Picture,
}

/// Which of the two balance features a picture carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Balance {
    Cocorner(Cell),
    Corner(Cell),
    /// Never produced by a genuine picture of type `(λ, μ; ζ)`; kept so that
    /// tests can observe a violation instead of having it masked.
    Neither,
    Both { cocorner: Cell, corner: Cell },
}

impl TypedPicture {
    pub fn new(lambda: Partition, mu: Partition, zeta: Partition, picture: Picture) -> Result<Self> {
        let (source, target) = type_shapes(&lambda, &mu, &zeta)?;
        if picture.source() != &source || picture.target() != &target {
            return Err(Error::InvalidPicture(format!(
                "picture {} -> {} is not of type ({lambda}; {mu}; {zeta})",
                picture.source(),
                picture.target()
            )));
        }
        Ok(TypedPicture { lambda, mu, zeta, picture })
    }

    /// `m = n − |ζ|`.
    pub fn size(&self) -> usize {
        self.picture.size()
    }

    pub fn balanced_cocorner(&self) -> Option<Cell> {
        balanced_cocorner(&self.picture)
    }

    pub fn balanced_corner(&self) -> Option<Cell> {
        balanced_corner(&self.picture)
    }

    pub fn balance(&self) -> Balance {
        match (self.balanced_cocorner(), self.balanced_corner()) {
            (Some(z), None) => Balance::Cocorner(z),
            (None, Some(v)) => Balance::Corner(v),
            (None, None) => Balance::Neither,
            (Some(cocorner), Some(corner)) => Balance::Both { cocorner, corner },
        }
    }

    /// `E_z` at the balanced cocorner; lands in type `(λ, μ; ζ ∖ z)`.
    pub fn step_e(&self) -> Result<TypedPicture> {
        let z = self.balanced_cocorner().ok_or(Error::NotHookShape)?;
        let picture = self.picture.insert(z)?;
        let zeta = self.zeta.remove_corner(z)?;
        Ok(TypedPicture { lambda: self.lambda.clone(), mu: self.mu.clone(), zeta, picture })
    }

    /// `F_v` at the balanced corner; lands in type `(λ, μ; ζ ⨿ w)` with `w = vᵗ`.
    pub fn step_f(&self) -> Result<TypedPicture> {
        let v = self.balanced_corner().ok_or(Error::NotCoHookShape)?;
        let (picture, w) = self.picture.delete(v)?;
        let zeta = self.zeta.add_cocorner(w)?;
        Ok(TypedPicture { lambda: self.lambda.clone(), mu: self.mu.clone(), zeta, picture })
    }
}

/// Source `(μ/ζ)ᵗ` and target `λ/ζ` of type `(λ, μ; ζ)`.
pub fn type_shapes(lambda: &Partition, mu: &Partition, zeta: &Partition) -> Result<(SkewShape, SkewShape)> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    let target = SkewShape::new(lambda.clone(), zeta.clone())?;
    let source = SkewShape::new(mu.clone(), zeta.clone())?.transpose();
    Ok((source, target))
}

pub fn balanced_cocorner(p: &Picture) -> Option<Cell> {
    p.target()
        .inner_cocorners()
        .into_iter()
        .find(|&z| matches!(p.bump_destination(z), Ok(u) if u == z.transpose()))
}

pub fn balanced_corner(p: &Picture) -> Option<Cell> {
    p.source()
        .inner_corners()
        .into_iter()
        .find(|&v| matches!(p.delete(v), Ok((_, w)) if w == v.transpose()))
}

/// `PW(λ, μ; ζ)`; empty when `ζ ⊄ λ` or `ζ ⊄ μ`.
pub fn pw_set(lambda: &Partition, mu: &Partition, zeta: &Partition) -> Result<Vec<TypedPicture>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    if !lambda.contains(zeta) || !mu.contains(zeta) {
        return Ok(Vec::new());
    }
    let (source, target) = type_shapes(lambda, mu, zeta)?;
    Ok(enumerate_pictures(&source, &target)
        .into_iter()
        .map(|picture| TypedPicture { lambda: lambda.clone(), mu: mu.clone(), zeta: zeta.clone(), picture })
        .collect())
}

/// `PW_m(λ, μ)`, grouped by `ζ` in the order of [`Partition::all`].
pub fn pw_m(lambda: &Partition, mu: &Partition, m: usize) -> Result<Vec<TypedPicture>> {
    let n = check_pair(lambda, mu, m, true)?;
    let mut out = Vec::new();
    for zeta in Partition::all(n - m) {
        out.extend(pw_set(lambda, mu, &zeta)?);
    }
    Ok(out)
}

pub fn ph_m(lambda: &Partition, mu: &Partition, m: usize) -> Result<Vec<TypedPicture>> {
    Ok(pw_m(lambda, mu, m)?.into_iter().filter(|t| t.balanced_cocorner().is_some()).collect())
}

fn check_pair(lambda: &Partition, mu: &Partition, m: usize, inclusive: bool) -> Result<usize> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    if m > n || (!inclusive && m == n) {
        let hi = if inclusive { n } else { n.saturating_sub(1) };
        return Err(Error::Range(format!("m = {m} out of range 0..={hi}")));
    }
    Ok(n)
}

/// Counts for one `ζ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaCount {
    pub zeta: Partition,
    pub ph: usize,
    pub pw: usize,
}

/// `|PH_m(λ, μ)|` and `|PW_m(λ, μ)|` with the per-`ζ` breakdown (nonzero `pw` only).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub mu: Partition,
    pub ph: usize,
    pub pw: usize,
    pub by_zeta: Vec<ZetaCount>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTable {
    pub lambda: Partition,
    pub m: usize,
    pub rows: Vec<DecompositionRow>,
}

pub fn counts(lambda: &Partition, mu: &Partition, m: usize) -> Result<DecompositionRow> {
    let n = check_pair(lambda, mu, m, true)?;
    let mut row = DecompositionRow { mu: mu.clone(), ph: 0, pw: 0, by_zeta: Vec::new() };
    for zeta in Partition::all(n - m) {
        let pics = pw_set(lambda, mu, &zeta)?;
        if pics.is_empty() {
            continue;
        }
        let ph = pics.iter().filter(|t| t.balanced_cocorner().is_some()).count();
        row.ph += ph;
        row.pw += pics.len();
        row.by_zeta.push(ZetaCount { zeta, ph, pw: pics.len() });
    }
    Ok(row)
}

/// Multiplicity of `L(μ)` in `L(λ) ⊗ L(n−m, 1^m)`, for `0 ≤ m < n`.
pub fn multiplicity_hook(lambda: &Partition, mu: &Partition, m: usize) -> Result<usize> {
    check_pair(lambda, mu, m, false)?;
    Ok(counts(lambda, mu, m)?.ph)
}

/// Multiplicity of `L(μ)` in `L(λ) ⊗ Λ_m(ℂⁿ)`, for `0 ≤ m ≤ n`.
pub fn multiplicity_exterior(lambda: &Partition, mu: &Partition, m: usize) -> Result<usize> {
    check_pair(lambda, mu, m, true)?;
    Ok(counts(lambda, mu, m)?.pw)
}

/// `L(λ) ⊗ L(n−m, 1^m)` decomposed over every `μ ⊢ n`. Rows with `pw = 0`
/// are omitted; `μ` runs in the order of [`Partition::all`] regardless of
/// how many rayon threads are in the current pool.
pub fn decompose_tensor_hook(lambda: &Partition, m: usize) -> Result<DecompositionTable> {
    let n = lambda.size();
    if m > n {
        return Err(Error::Range(format!("m = {m} out of range 0..={n}")));
    }
    let rows: Vec<Result<DecompositionRow>> =
        Partition::all(n).into_par_iter().map(|mu| counts(lambda, &mu, m)).collect();
    let mut table = DecompositionTable { lambda: lambda.clone(), m, rows: Vec::new() };
    for row in rows {
        let row = row?;
        if row.pw > 0 {
            table.rows.push(row);
        }
    }
    Ok(table)
}

/// Multiplicity of `L(n−f, 1^f)` in `L(n−e, 1^e) ⊗ L(n−m, 1^m)`, in closed form.
///
/// Requires `2e ≤ n`, `2f ≤ n` and `e ≤ f`; the remaining cases follow by
/// symmetry and twisting with the sign representation.
pub fn hook_hook_multiplicity(e: usize, f: usize, m: usize, n: usize) -> Result<usize> {
    if 2 * e > n || 2 * f > n || f < e || m >= n {
        return Err(Error::Range(format!("need 2e, 2f <= n, e <= f, m < n; got e={e} f={f} m={m} n={n}")));
    }
    let g = f - e;
    if m < g {
        return Ok(0);
    }
    let i = m - g;
    let hit = if e + f < n { i <= 2 * e } else { i + 2 <= n };
    Ok(usize::from(hit))
}
