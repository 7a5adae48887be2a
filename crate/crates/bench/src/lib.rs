//! Shared inputs for the benchmarks.

use hookkron::{Partition, SkewShape};

pub fn p(s: &str) -> Partition {
    s.parse().expect("benchmark partitions are well formed")
}

/// Source and target of type `(λ, μ; ζ)` from the worked example with ten boxes.
pub fn example_type() -> (Partition, Partition, Partition) {
    (p("5,3,1,1"), p("4,3,3"), p("3,1"))
}

pub fn straight(s: &str) -> SkewShape {
    SkewShape::straight(p(s))
}
