//! Littlewood–Richardson coefficients, counted as pictures from a straight shape.
//!
//! `|Pic(ξ/∅, λ/ζ)| = LR^λ_{ζ,ξ}`, so the picture enumerator doubles as the
//! LR engine. Values are memoized for the lifetime of the process.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::pictures::count_pictures;
use crate::shapes::{Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LrQuery {
    pub lambda: Partition,
    pub zeta: Partition,
    pub xi: Partition,
}

impl LrQuery {
    pub fn new(lambda: Partition, zeta: Partition, xi: Partition) -> Result<Self> {
        if lambda.size() != zeta.size() + xi.size() {
            return Err(Error::SizeMismatch(format!(
                "|{lambda}| = {} but |{zeta}| + |{xi}| = {}",
                lambda.size(),
                zeta.size() + xi.size()
            )));
        }
        Ok(LrQuery { lambda, zeta, xi })
    }
}

fn memo() -> &'static Mutex<HashMap<LrQuery, u64>> {
    static MEMO: OnceLock<Mutex<HashMap<LrQuery, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `LR^λ_{ζ,ξ}`; zero when `ζ ⊄ λ` or `ξ ⊄ λ`.
pub fn lr_coefficient(q: &LrQuery) -> u64 {
    if !q.lambda.contains(&q.zeta) || !q.lambda.contains(&q.xi) {
        return 0;
    }
    if let Some(&v) = memo().lock().unwrap().get(q) {
        return v;
    }
    let target = SkewShape::new(q.lambda.clone(), q.zeta.clone()).unwrap();
    let v = count_pictures(&SkewShape::straight(q.xi.clone()), &target) as u64;
    memo().lock().unwrap().insert(q.clone(), v);
    v
}

/// Convenience wrapper that validates sizes first.
pub fn lr(lambda: &Partition, zeta: &Partition, xi: &Partition) -> Result<u64> {
    let q = LrQuery::new(lambda.clone(), zeta.clone(), xi.clone())?;
    Ok(lr_coefficient(&q))
}

/// `Σ_{ζ ⊢ n−m} Σ_{ξ ⊢ m} LR^λ_{ζ,ξ} · LR^μ_{ζ,ξᵗ}`.
pub fn w_m_via_lr(lambda: &Partition, mu: &Partition, m: usize) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    if m > n {
        return Err(Error::Range(format!("m = {m} out of range 0..={n}")));
    }
    let xis = Partition::all(m);
    let mut total = 0;
    for zeta in Partition::all(n - m) {
        if !lambda.contains(&zeta) || !mu.contains(&zeta) {
            continue;
        }
        for xi in &xis {
            let a = lr(lambda, &zeta, xi)?;
            if a == 0 {
                continue;
            }
            total += a * lr(mu, &zeta, &xi.conjugate())?;
        }
    }
    Ok(total)
}
