#![allow(dead_code)]

use gramclass::quiver::{random_quiver, Quiver};

pub const MAX_M: usize = 8;
pub const MAX_N: usize = 12;

/// Four seeded random quivers for every `(m, n)` with `2 ≤ m ≤ 8`,
/// `m − 1 ≤ n ≤ 12`: 252 instances.
pub fn instances() -> Vec<Quiver> {
    let mut out = Vec::new();
    for m in 2..=MAX_M {
        for n in m - 1..=MAX_N {
            for k in 0..4u64 {
                let seed = 1000 * m as u64 + 10 * n as u64 + k;
                out.push(random_quiver(m, n, seed).expect("feasible shape"));
            }
        }
    }
    out
}

pub fn q1() -> Quiver {
    Quiver::new(3, vec![(3, 1), (2, 3), (1, 2), (3, 1)]).unwrap()
}

pub fn q0() -> Quiver {
    Quiver::new(3, vec![(3, 1), (2, 3), (3, 1), (1, 2)]).unwrap()
}
