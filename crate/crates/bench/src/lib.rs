//! Fixtures shared by the benchmarks.

use tlsra_core::{gen_geometric, GeometricParams, Instance};

/// Unit-density geometric instance with `n` nodes, min radius 1 and max
/// radius 2.6.
pub fn geometric(n: usize, seed: u64) -> Instance {
    let inst = gen_geometric(GeometricParams {
        n,
        r_min: 1.0,
        r_max: 2.6,
        side: (n as f64).sqrt(),
        seed,
    })
    .expect("geometric fixture connects");
    inst.graph();
    inst
}

/// Pseudo-random union sequence over `n` elements (xorshift, fixed seed).
pub fn union_pairs(n: usize, count: usize) -> Vec<(u32, u32)> {
    let mut x = 0x9E37_79B9_7F4A_7C15u64;
    let mut next = move || {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        (x % n as u64) as u32
    };
    (0..count).map(|_| (next(), next())).collect()
}
