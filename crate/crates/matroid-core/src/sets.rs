//! Bitmask helpers over `Set`.

use vspace::{GroundSet, Set};

pub fn size(x: Set) -> usize {
    x.count_ones() as usize
}

/// Positions of the set bits, ascending.
pub fn bits(mut x: Set) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let i = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(i)
    })
}

/// All submasks of `m`, from `m` down to 0.
pub fn submasks(m: Set) -> impl Iterator<Item = Set> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// Submasks of `m` with exactly `k` elements, in increasing numeric order.
pub fn k_subsets(m: Set, k: usize) -> impl Iterator<Item = Set> {
    let pos: Vec<usize> = bits(m).collect();
    let n = pos.len();
    // Gosper's hack over compressed indices, then spread back onto `m`
    let mut cur: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            if n < 64 && next >> n != 0 {
                None
            } else {
                Some(next)
            }
        };
        Some(bits(c).fold(0, |acc, i| acc | 1u64 << pos[i]))
    })
}

/// Carries a subset of `from` over to the same labels in `to`.
pub fn reindex(x: Set, from: &GroundSet, to: &GroundSet) -> Set {
    bits(x).fold(0, |acc, i| {
        let j = to.position(&from.labels()[i]).expect("label present in target ground");
        acc | 1u64 << j
    })
}

/// Inverse of a position map: `spread(x, pos)` sets bit `pos[i]` for each set bit `i`.
pub fn spread(x: Set, pos: &[usize]) -> Set {
    bits(x).fold(0, |acc, i| acc | 1u64 << pos[i])
}
