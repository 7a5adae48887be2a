#![allow(dead_code)]

pub mod lemmas;

use hookkron::hook_rule::type_shapes;
use hookkron::{enumerate_pictures, Cell, PartialTableau, Partition, Picture, Reading, SkewShape};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn c(r: usize, col: usize) -> Cell {
    Cell::new(r, col)
}

pub fn shape(o: &str, i: &str) -> SkewShape {
    SkewShape::new(p(o), p(i)).unwrap()
}

pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    (0..=outer.size()).flat_map(Partition::all).filter(|q| outer.contains(q)).collect()
}

/// Uniform outer shape of size `1..=max`, then a uniform inner shape inside it.
pub fn random_skew(rng: &mut TestRng, max: usize) -> SkewShape {
    let n = rng.gen_range(1..=max);
    let outer = Partition::all(n).choose(rng).unwrap().clone();
    let inner = subpartitions(&outer).choose(rng).unwrap().clone();
    SkewShape::new(outer, inner).unwrap()
}

/// Random linear extension of `≤↖` (if `nw`) or of `≤↙` on a set of cells.
pub fn random_linear_extension(rng: &mut TestRng, cells: &[Cell], nw: bool) -> Vec<Cell> {
    let mut left: Vec<Cell> = cells.to_vec();
    let mut out = Vec::with_capacity(cells.len());
    while !left.is_empty() {
        let minimal: Vec<usize> = (0..left.len())
            .filter(|&k| {
                left.iter().all(|&o| {
                    o == left[k] || !(if nw { o.leq_nw(left[k]) } else { o.leq_sw(left[k]) })
                })
            })
            .collect();
        let k = *minimal.choose(rng).unwrap();
        out.push(left.swap_remove(k));
    }
    out
}

/// Random partial tableau with distinct values drawn from `1..=3|D|`.
pub fn random_tableau(rng: &mut TestRng, shape: &SkewShape) -> PartialTableau {
    let order = random_linear_extension(rng, &shape.cells(), true);
    let pool: Vec<u32> = (1..=3 * order.len().max(1) as u32).collect();
    let mut values: Vec<u32> = pool.choose_multiple(rng, order.len()).copied().collect();
    values.sort_unstable();
    PartialTableau::new(shape.clone(), order.into_iter().zip(values)).unwrap()
}

pub fn fresh_value(rng: &mut TestRng, t: &PartialTableau) -> u32 {
    let top = 3 * t.shape().size().max(1) as u32 + 2;
    loop {
        let a = rng.gen_range(1..=top);
        if !t.contains_value(a) {
            return a;
        }
    }
}

/// Random reading of `cells`: an arbitrary `≤↙`-monotone numbering with gaps.
pub fn random_reading(rng: &mut TestRng, cells: &[Cell]) -> Reading {
    let order = random_linear_extension(rng, cells, false);
    let mut v = 0;
    Reading::new(order.into_iter().map(|c| {
        v += rng.gen_range(1..=3);
        (c, v)
    }))
    .unwrap()
}

/// Random picture with `|target| ≤ max`: half of the draws are of hook-rule
/// type `(λ, μ; ζ)`, the rest pair two independent skew shapes of equal size.
pub fn random_picture(rng: &mut TestRng, max: usize) -> Picture {
    loop {
        let pics = if rng.gen_bool(0.5) {
            let n = rng.gen_range(1..=max);
            let all = Partition::all(n);
            let lam = all.choose(rng).unwrap().clone();
            let mu = all.choose(rng).unwrap().clone();
            let zeta = subpartitions(&lam).into_iter().filter(|z| mu.contains(z)).collect::<Vec<_>>();
            let zeta = zeta.choose(rng).unwrap().clone();
            let (s, t) = type_shapes(&lam, &mu, &zeta).unwrap();
            enumerate_pictures(&s, &t)
        } else {
            let target = random_skew(rng, max);
            let mut source = random_skew(rng, max);
            for _ in 0..20 {
                if source.size() == target.size() {
                    break;
                }
                source = random_skew(rng, max);
            }
            if source.size() != target.size() {
                continue;
            }
            enumerate_pictures(&source, &target)
        };
        if let Some(pic) = pics.choose(rng) {
            if !pic.source().is_empty() {
                return pic.clone();
            }
        }
    }
}
