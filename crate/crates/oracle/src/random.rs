//! Seeded generators for test instances. Production code never draws
//! randomness; callers pass their own seeded RNG.

use matroid_core::{enumerate_bases, linear, uniform, GroundSet, Matroid};
use rand::Rng;
use vspace::{Field, VSpace};

/// `prefix1 … prefixn`.
pub fn labels(prefix: &str, n: usize) -> GroundSet {
    let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    GroundSet::of(&refs)
}

/// Column matroid of a random matrix over GF(2), GF(3) or GF(5). Zero
/// entries are favoured so loops, parallels and small circuits show up.
pub fn random_linear<R: Rng>(rng: &mut R, ground: &GroundSet) -> Matroid {
    let n = ground.len();
    let p = [2, 3, 5][rng.gen_range(0..3)];
    let rows = rng.gen_range(0..=n.min(5));
    let density = rng.gen_range(0.3..0.9);
    let m: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..n).map(|_| if rng.gen_bool(density) { rng.gen_range(1..p as i64) } else { 0 }).collect())
        .collect();
    let refs: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    let v = VSpace::from_ints(Field::gf(p).expect("prime"), ground.clone(), &refs).expect("shape");
    linear(&v)
}

/// A random matroid frozen into explicit bases. Mixes column matroids,
/// uniform matroids and unions of two column matroids (which need not be
/// representable over the small field).
pub fn random_matroid<R: Rng>(rng: &mut R, ground: &GroundSet) -> Matroid {
    let n = ground.len();
    let m = match rng.gen_range(0..10) {
        0 | 1 => uniform(ground.clone(), rng.gen_range(0..=n)).expect("k ≤ n"),
        2 | 3 => {
            let a = random_linear(rng, ground);
            let b = random_linear(rng, ground);
            union_by_bases(&a, &b)
        }
        _ => random_linear(rng, ground),
    };
    enumerate_bases(&m).expect("small ground").matroid()
}

// Unions by brute force keep this crate independent of the algorithms it
// checks.
fn union_by_bases(a: &Matroid, b: &Matroid) -> Matroid {
    crate::brute_union(a, b).expect("small ground").matroid()
}

/// Random `(M_SP, M_PQ)` with the given part sizes, labels `s*`, `p*`, `q*`.
pub fn random_pair<R: Rng>(rng: &mut R, s: usize, p: usize, q: usize) -> (Matroid, Matroid) {
    let (gs, gp, gq) = (labels("s", s), labels("p", p), labels("q", q));
    let left = random_matroid(rng, &gs.union(&gp));
    let right = random_matroid(rng, &gp.union(&gq));
    (left, right)
}
