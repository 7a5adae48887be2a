//! Character-theoretic ground truth for `𝔖_n`.
//!
//! Characters come from the Murnaghan–Nakayama rule on β-sets; Kronecker
//! coefficients are the class-weighted triple inner product divided by `n!`.
//! None of this touches pictures or tableaux, which is what makes it an
//! independent check of the combinatorial side.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::Partition;

pub const DEFAULT_CAP: usize = 9;
const CACHE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    /// Labels of both rows (irreducibles) and columns (cycle types), in the
    /// reverse lexicographic order of [`Partition::all`].
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // values[λ][ρ]
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_ρ = Π_i i^{m_i} m_i!`, the centralizer order of the class of cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> u64 {
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(i, m)| (i as u64).pow(m as u32) * factorial(m as usize))
        .product()
}

/// β-set of `λ` with `k ≥ l(λ)` beads, listed in decreasing order.
fn beta_set(lambda: &[usize], k: usize) -> Vec<usize> {
    (0..k).map(|i| lambda.get(i).copied().unwrap_or(0) + (k - 1 - i)).collect()
}

fn from_beta(beta: &[usize]) -> Vec<usize> {
    let k = beta.len();
    let mut parts: Vec<usize> = beta.iter().enumerate().map(|(i, &b)| b - (k - 1 - i)).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// `χ_λ(ρ)` by stripping rim hooks of lengths `ρ_1, ρ_2, …` in turn.
fn mn_character(lambda: &[usize], rho: &[usize], memo: &mut HashMap<Vec<usize>, i64>) -> i64 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    if let Some(&v) = memo.get(lambda) {
        return v;
    }
    let r = rho[0];
    let beta = beta_set(lambda, lambda.len());
    let mut total = 0;
    for (pos, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let nb = b - r;
        if beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.clone();
        next[pos] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let smaller = from_beta(&next);
        // memo keys are sized by the remaining parts of ρ, so one map per column suffices
        let v = mn_character(&smaller, &rho[1..], memo);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(lambda.to_vec(), total);
    total
}

impl CharacterTable {
    pub fn compute(n: usize) -> Self {
        let partitions = Partition::all(n);
        let mut values = vec![vec![0i64; partitions.len()]; partitions.len()];
        for (c, rho) in partitions.iter().enumerate() {
            let mut memo = HashMap::new();
            for (r, lam) in partitions.iter().enumerate() {
                values[r][c] = mn_character(lam.parts(), rho.parts(), &mut memo);
            }
        }
        Self::from_parts(n, partitions, values)
    }

    fn from_parts(n: usize, partitions: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let nf = factorial(n);
        let class_sizes = partitions.iter().map(|rho| nf / centralizer_order(rho)).collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable { n, partitions, index, values, class_sizes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn class_size(&self, rho: &Partition) -> u64 {
        self.class_sizes[self.index[rho]]
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[rho]]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }

    /// `dim L(λ) = χ_λ(1ⁿ)`.
    pub fn dimension(&self, lambda: &Partition) -> u64 {
        let id = self.partitions.len() - 1;
        self.values[self.index[lambda]][id] as u64
    }

    /// Column orthogonality: `Σ_λ χ_λ(ρ) χ_λ(σ) = δ_{ρσ} z_ρ`.
    pub fn check_orthogonality(&self) -> Result<()> {
        let k = self.partitions.len();
        for a in 0..k {
            for b in 0..k {
                let s: i64 = (0..k).map(|r| self.values[r][a] * self.values[r][b]).sum();
                let expected = if a == b { centralizer_order(&self.partitions[a]) as i64 } else { 0 };
                if s != expected {
                    return Err(Error::Cache(format!(
                        "column orthogonality fails at n={} for classes {} and {}",
                        self.n, self.partitions[a], self.partitions[b]
                    )));
                }
            }
        }
        if (0..k).any(|r| self.values[r][k - 1] <= 0) {
            return Err(Error::Cache(format!("non-positive dimension at n={}", self.n)));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    n: usize,
    classes: Vec<Partition>,
    rows: Vec<Vec<i64>>,
}

fn memo() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

fn cache_dir_slot() -> &'static Mutex<Option<PathBuf>> {
    static DIR: OnceLock<Mutex<Option<PathBuf>>> = OnceLock::new();
    DIR.get_or_init(Default::default)
}

/// Directory where computed tables are persisted and looked up. `None` disables it.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir_slot().lock().unwrap() = dir;
}

pub fn cache_file_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("chartab-v{CACHE_VERSION}-n{n}.json"))
}

pub fn save_table(dir: &Path, table: &CharacterTable) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let file = CacheFile {
        version: CACHE_VERSION,
        n: table.n,
        classes: table.partitions.clone(),
        rows: table.values.clone(),
    };
    let path = cache_file_path(dir, table.n);
    let json = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;
    fs::write(&path, json + "\n").map_err(|e| Error::Cache(e.to_string()))?;
    Ok(path)
}

/// Loads and re-validates a persisted table; `Ok(None)` when no file exists.
pub fn load_table(dir: &Path, n: usize) -> Result<Option<CharacterTable>> {
    let path = cache_file_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::Cache(e.to_string())),
    };
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
    if file.version != CACHE_VERSION || file.n != n || file.classes != Partition::all(n) {
        return Err(Error::Cache(format!("{} does not hold the n={n} table", path.display())));
    }
    let k = file.classes.len();
    if file.rows.len() != k || file.rows.iter().any(|r| r.len() != k) {
        return Err(Error::Cache(format!("{} has the wrong dimensions", path.display())));
    }
    let table = CharacterTable::from_parts(n, file.classes, file.rows);
    table.check_orthogonality()?;
    Ok(Some(table))
}

pub fn character_table_with_cap(n: usize, cap: usize) -> Result<Arc<CharacterTable>> {
    if n == 0 {
        return Err(Error::Range("character tables need n >= 1".into()));
    }
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    if let Some(t) = memo().lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let dir = cache_dir_slot().lock().unwrap().clone();
    let loaded = match &dir {
        Some(d) => load_table(d, n)?,
        None => None,
    };
    let table = match loaded {
        Some(t) => t,
        None => {
            let t = CharacterTable::compute(n);
            t.check_orthogonality()?;
            if let Some(d) = &dir {
                save_table(d, &t)?;
            }
            t
        }
    };
    let table = Arc::new(table);
    memo().lock().unwrap().entry(n).or_insert_with(|| table.clone());
    Ok(table)
}

pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    character_table_with_cap(n, DEFAULT_CAP)
}

/// Kronecker coefficient `g(λ, ν, μ)`: multiplicity of `L(μ)` in `L(λ) ⊗ L(ν)`.
pub fn kronecker(lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<u64> {
    kronecker_in(&*character_table(lambda.size())?, lambda, nu, mu)
}

/// As [`kronecker`], against an explicitly supplied table.
pub fn kronecker_in(table: &CharacterTable, lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<u64> {
    let n = table.n;
    if lambda.size() != n || nu.size() != n || mu.size() != n {
        return Err(Error::SizeMismatch(format!("|{lambda}|, |{nu}|, |{mu}| are not all {n}")));
    }
    let (a, b, c) = (table.row(lambda), table.row(nu), table.row(mu));
    let sum: i128 = (0..a.len())
        .map(|k| table.class_sizes[k] as i128 * a[k] as i128 * b[k] as i128 * c[k] as i128)
        .sum();
    let nf = factorial(n) as i128;
    assert_eq!(sum % nf, 0, "character inner product not divisible by n! for {lambda}, {nu}, {mu}");
    let g = sum / nf;
    assert!(g >= 0, "negative Kronecker coefficient for {lambda}, {nu}, {mu}");
    Ok(g as u64)
}

/// Multiplicity of `L(μ)` in `L(λ) ⊗ Λ_m(ℂⁿ)`.
pub fn exterior_multiplicity(lambda: &Partition, mu: &Partition, m: usize) -> Result<u64> {
    exterior_check(lambda, mu, m)?;
    if m == 0 {
        return Ok(u64::from(lambda == mu));
    }
    exterior_multiplicity_in(&*character_table(lambda.size())?, lambda, mu, m)
}

pub fn exterior_multiplicity_in(table: &CharacterTable, lambda: &Partition, mu: &Partition, m: usize) -> Result<u64> {
    exterior_check(lambda, mu, m)?;
    let n = lambda.size();
    if m == 0 {
        return Ok(u64::from(lambda == mu));
    }
    if m == n {
        return kronecker_in(table, lambda, &Partition::new(vec![1; n])?, mu);
    }
    Ok(kronecker_in(table, lambda, &Partition::hook(n, m - 1)?, mu)?
        + kronecker_in(table, lambda, &Partition::hook(n, m)?, mu)?)
}

fn exterior_check(lambda: &Partition, mu: &Partition, m: usize) -> Result<()> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    if m > n {
        return Err(Error::Range(format!("m = {m} out of range 0..={n}")));
    }
    Ok(())
}
