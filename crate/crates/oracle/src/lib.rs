//! Definitional brute force. Everything here works from enumerated base
//! families, never from the augmenting-path machinery it is meant to check.

pub mod random;

use std::collections::BTreeSet;

use matroid_core::sets::{bits, size, submasks};
use matroid_core::{enumerate_bases, exchange_check, ExchangeWitness, ExplicitBases, GroundSet, Matroid, MatroidError, Set};

/// Ground limit for the pair scans below.
pub const PAIR_GUARD: usize = 12;

fn check_pair_guard(n: usize) -> Result<(), MatroidError> {
    if n > PAIR_GUARD {
        return Err(MatroidError::Guard { size: n, limit: PAIR_GUARD });
    }
    Ok(())
}

/// Bases of `m` re-expressed over `ground` (which must contain `m`'s labels).
pub fn bases_over(m: &Matroid, ground: &GroundSet) -> Result<Vec<Set>, MatroidError> {
    let e = enumerate_bases(m)?;
    let pos: Vec<usize> =
        m.ground().iter().map(|l| ground.position_of(l)).collect::<Result<_, _>>()?;
    Ok(e.bases().iter().map(|&b| bits(b).fold(0, |a, i| a | 1 << pos[i])).collect())
}

/// `r(X) = max |B ∩ X|` for every `X ⊆ ground`, indexed by mask.
pub fn rank_table(bases: &[Set], n: usize) -> Vec<usize> {
    (0..1u64 << n).map(|x| bases.iter().map(|b| size(b & x)).max().unwrap_or(0)).collect()
}

pub fn brute_rank(m: &Matroid) -> Result<Vec<usize>, MatroidError> {
    Ok(rank_table(&bases_over(m, m.ground())?, m.len()))
}

fn maximal_unions(b1: &[Set], b2: &[Set]) -> Vec<Set> {
    let all: BTreeSet<Set> = b1.iter().flat_map(|&x| b2.iter().map(move |&y| x | y)).collect();
    let top = all.iter().map(|&u| size(u)).max().unwrap_or(0);
    all.into_iter().filter(|&u| size(u) == top).collect()
}

fn minimal_intersections(b1: &[Set], b2: &[Set]) -> Vec<Set> {
    let all: BTreeSet<Set> = b1.iter().flat_map(|&x| b2.iter().map(move |&y| x & y)).collect();
    let low = all.iter().map(|&u| size(u)).min().unwrap_or(0);
    all.into_iter().filter(|&u| size(u) == low).collect()
}

/// Bases of `M1 ∨ M2` as the largest unions `b1 ∪ b2`, over the union ground
/// with `M1`'s labels first.
pub fn brute_union(m1: &Matroid, m2: &Matroid) -> Result<ExplicitBases, MatroidError> {
    let g = m1.ground().union(m2.ground());
    check_pair_guard(g.len())?;
    let u = maximal_unions(&bases_over(m1, &g)?, &bases_over(m2, &g)?);
    ExplicitBases::new(g, u)
}

/// Bases of `M1 ∧ M2` as the smallest intersections, operands padded with
/// coloops.
pub fn brute_wedge(m1: &Matroid, m2: &Matroid) -> Result<ExplicitBases, MatroidError> {
    let g = m1.ground().union(m2.ground());
    check_pair_guard(g.len())?;
    let pad = |m: &Matroid| -> Result<Vec<Set>, MatroidError> {
        let extra = g.mask(&g.minus(m.ground()))?;
        Ok(bases_over(m, &g)?.into_iter().map(|b| b | extra).collect())
    };
    let w = minimal_intersections(&pad(m1)?, &pad(m2)?);
    ExplicitBases::new(g, w)
}

/// Bases of `M_SP ↔ M_PQ`: the union bases meeting `S ⊎ Q` least, cut down
/// to `S ⊎ Q`. The result ground lists `S` then `Q` in operand order.
pub fn brute_link(left: &Matroid, right: &Matroid) -> Result<ExplicitBases, MatroidError> {
    let g = left.ground().union(right.ground());
    check_pair_guard(g.len())?;
    let p = left.ground().intersection(right.ground());
    let sq = g.minus(&p);
    let sq_mask = g.mask(&sq)?;
    let u = maximal_unions(&bases_over(left, &g)?, &bases_over(right, &g)?);
    let cut: Vec<Set> = u.iter().map(|b| b & sq_mask).collect();
    let low = cut.iter().map(|&b| size(b)).min().unwrap_or(0);
    let pos: Vec<usize> = bits(sq_mask).collect();
    let compress = |b: Set| pos.iter().enumerate().filter(|(_, &p)| b >> p & 1 == 1).fold(0, |a, (i, _)| a | 1 << i);
    let bases: BTreeSet<Set> = cut.into_iter().filter(|&b| size(b) == low).map(compress).collect();
    ExplicitBases::new(sq, bases)
}

/// Base-exchange axiom on an explicit family.
pub fn brute_exchange_check(bases: &[Set]) -> Result<(), ExchangeWitness> {
    exchange_check(bases)
}

/// `M2` is a quotient of `M1`: `r1(T2) − r1(T1) ≥ r2(T2) − r2(T1)` for every
/// nested pair. Grounds must carry the same labels.
pub fn brute_quotient(m1: &Matroid, m2: &Matroid) -> Result<bool, MatroidError> {
    check_pair_guard(m1.len())?;
    let m2 = m2.reorder(m1.ground())?;
    let r1 = brute_rank(m1)?;
    let r2 = brute_rank(&m2)?;
    for t2 in 0..1u64 << m1.len() {
        for t1 in submasks(t2) {
            if r1[t2 as usize] + r2[t1 as usize] < r2[t2 as usize] + r1[t1 as usize] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `min_{X ⊆ Y} r1(X) + r2(X) + |Y − X|` for every `Y`, on a common ground.
pub fn convolution_ranks(m1: &Matroid, m2: &Matroid) -> Result<Vec<usize>, MatroidError> {
    check_pair_guard(m1.len())?;
    let m2 = m2.reorder(m1.ground())?;
    let r1 = brute_rank(m1)?;
    let r2 = brute_rank(&m2)?;
    Ok((0..1u64 << m1.len())
        .map(|y| submasks(y).map(|x| r1[x as usize] + r2[x as usize] + size(y & !x)).min().expect("nonempty"))
        .collect())
}

/// Largest size of a set independent in both (same labels).
pub fn brute_max_common(m1: &Matroid, m2: &Matroid) -> Result<usize, MatroidError> {
    check_pair_guard(m1.len())?;
    let m2 = m2.reorder(m1.ground())?;
    let b1 = bases_over(m1, m1.ground())?;
    let b2 = bases_over(&m2, m1.ground())?;
    Ok(b1.iter().flat_map(|&x| b2.iter().map(move |&y| size(x & y))).max().unwrap_or(0))
}

/// `{S,Q}`-completion by definition: every base plus every fourth corner
/// `b̂_S ⊎ b̂_Q` of three bases `b_S⊎b_Q`, `b̂_S⊎b_Q`, `b_S⊎b̂_Q`.
pub fn brute_completion(m: &Matroid, s: Set) -> Result<ExplicitBases, MatroidError> {
    let e = enumerate_bases(m)?;
    let fam: BTreeSet<Set> = e.bases().iter().copied().collect();
    let q = m.full() & !s;
    let mut out = fam.clone();
    for &b in &fam {
        let (bs, bq) = (b & s, b & q);
        let s_alts: Vec<Set> = fam.iter().filter(|&&c| c & q == bq).map(|&c| c & s).collect();
        let q_alts: Vec<Set> = fam.iter().filter(|&&c| c & s == bs).map(|&c| c & q).collect();
        for &hs in &s_alts {
            for &hq in &q_alts {
                out.insert(hs | hq);
            }
        }
    }
    ExplicitBases::new(m.ground().clone(), out)
}

/// Whether the definitional completion adds nothing.
pub fn brute_is_complete(m: &Matroid, s: Set) -> Result<bool, MatroidError> {
    Ok(brute_completion(m, s)?.len() == enumerate_bases(m)?.len())
}

/// Every matroid on `ground` (labeled), as explicit base families. Each
/// nonempty equal-size family passing the exchange axiom is one matroid.
pub fn all_matroids(ground: &GroundSet) -> Result<Vec<ExplicitBases>, MatroidError> {
    let n = ground.len();
    if n > 5 {
        return Err(MatroidError::Guard { size: n, limit: 5 });
    }
    let full: Set = (1 << n) - 1;
    let mut out = Vec::new();
    for k in 0..=n {
        let cands: Vec<Set> = matroid_core::sets::k_subsets(full, k).collect();
        for pick in 1u64..1 << cands.len() {
            let fam: Vec<Set> = bits(pick).map(|i| cands[i]).collect();
            if exchange_check(&fam).is_ok() {
                out.push(ExplicitBases::new(ground.clone(), fam)?);
            }
        }
    }
    Ok(out)
}
