use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Quiver, QuiverError};

/// Seeded random connected loop-less quiver: a random spanning tree plus
/// `n − m + 1` extra arrows, random orientations, shuffled arrow order.
pub fn random_quiver(m: usize, n: usize, seed: u64) -> Result<Quiver, QuiverError> {
    if m < 2 || n + 1 < m {
        return Err(QuiverError::InfeasibleShape { m, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (1..=m).collect();
    order.shuffle(&mut rng);
    let mut arrows = Vec::with_capacity(n);
    for k in 1..m {
        let parent = order[rng.gen_range(0..k)];
        arrows.push((parent, order[k]));
    }
    while arrows.len() < n {
        let s = rng.gen_range(1..=m);
        let t = rng.gen_range(1..m);
        let t = if t >= s { t + 1 } else { t };
        arrows.push((s, t));
    }
    for a in arrows.iter_mut() {
        if rng.gen_bool(0.5) {
            *a = (a.1, a.0);
        }
    }
    arrows.shuffle(&mut rng);
    Quiver::new(m, arrows)
}
