//! The oracle sweep behind `hookkron verify`.

use anyhow::Result;
use hookkron::hook_rule::{counts, DecompositionRow};
use hookkron::oracle::{exterior_multiplicity, kronecker};
use hookkron::{w_m_via_lr, Partition};
use rayon::prelude::*;

/// Source of the combinatorial counts under test. The sweep only sees this
/// trait, so a deliberately broken implementation can exercise the failure path.
pub trait Counter: Sync {
    fn counts(&self, lambda: &Partition, mu: &Partition, m: usize) -> hookkron::Result<DecompositionRow>;
}

pub struct PictureCounter;

impl Counter for PictureCounter {
    fn counts(&self, lambda: &Partition, mu: &Partition, m: usize) -> hookkron::Result<DecompositionRow> {
        counts(lambda, mu, m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub m: usize,
    pub what: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "lambda={} mu={} m={}: {}", self.lambda, self.mu, self.m, self.what)
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<Mismatch>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_triple(counter: &dyn Counter, lambda: &Partition, mu: &Partition, m: usize) -> Result<(usize, Vec<Mismatch>)> {
    let n = lambda.size();
    let row = counter.counts(lambda, mu, m)?;
    let mut checks = 0;
    let mut bad = Vec::new();
    let mut fail = |what: String| bad.push(Mismatch { lambda: lambda.clone(), mu: mu.clone(), m, what });
    if m < n {
        let g = kronecker(lambda, &Partition::hook(n, m)?, mu)?;
        checks += 1;
        if row.ph as u64 != g {
            fail(format!("|PH| = {} but kronecker = {g}", row.ph));
        }
    }
    let ext = exterior_multiplicity(lambda, mu, m)?;
    let via_lr = w_m_via_lr(lambda, mu, m)?;
    checks += 2;
    if row.pw as u64 != ext {
        fail(format!("|PW| = {} but exterior multiplicity = {ext}", row.pw));
    }
    if via_lr != ext {
        fail(format!("LR double sum = {via_lr} but exterior multiplicity = {ext}"));
    }
    Ok((checks, bad))
}

/// Every `(λ, μ, m)` with `n_min ≤ n ≤ n_max` and `0 ≤ m ≤ n`; results are
/// merged in sweep order whatever the pool size.
pub fn sweep(counter: &dyn Counter, n_min: usize, n_max: usize) -> Result<Report> {
    let mut triples = Vec::new();
    for n in n_min.max(1)..=n_max {
        hookkron::oracle::character_table(n)?;
        let all = Partition::all(n);
        for lambda in &all {
            for mu in &all {
                for m in 0..=n {
                    triples.push((lambda.clone(), mu.clone(), m));
                }
            }
        }
    }
    let results: Vec<Result<(usize, Vec<Mismatch>)>> =
        triples.par_iter().map(|(l, u, m)| check_triple(counter, l, u, *m)).collect();
    let mut report = Report::default();
    for r in results {
        let (checks, bad) = r?;
        report.checks += checks;
        report.failures.extend(bad);
    }
    Ok(report)
}
