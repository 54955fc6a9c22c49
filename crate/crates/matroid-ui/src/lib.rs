//! Union, wedge and intersection of matroids by augmenting paths.
//!
//! Operands may live on different grounds. They are padded onto the union of
//! the grounds (the first operand's labels first) with loops for the union and
//! coloops for the wedge.

use std::collections::VecDeque;

use matroid_core::sets::{bits, size};
use matroid_core::{free, zero, FnOracle, GroundSet, Matroid, MatroidError, Set};

/// First operand's labels, then the second's new ones.
pub fn common_ground(a: &Matroid, b: &Matroid) -> GroundSet {
    a.ground().union(b.ground())
}

/// `M ⊕ 0` on `ground − M.ground`, listed in `ground` order.
pub fn pad_with_loops(m: &Matroid, ground: &GroundSet) -> Result<Matroid, MatroidError> {
    pad(m, ground, false)
}

/// `M ⊕ F` on `ground − M.ground`, listed in `ground` order.
pub fn pad_with_coloops(m: &Matroid, ground: &GroundSet) -> Result<Matroid, MatroidError> {
    pad(m, ground, true)
}

fn pad(m: &Matroid, ground: &GroundSet, coloops: bool) -> Result<Matroid, MatroidError> {
    if !m.ground().is_subset_of(ground) {
        return Err(MatroidError::GroundMismatch(format!("{{{}}} not inside {{{}}}", m.ground(), ground)));
    }
    if m.ground() == ground {
        return Ok(m.clone());
    }
    let extra = ground.minus(m.ground());
    let filler = if coloops { free(extra) } else { zero(extra) };
    m.direct_sum(&filler)?.reorder(ground)
}

/// Splits `x` into `(I1, I2)`, independent in `a` and `b` (same ground), by
/// inserting the elements of `order` one at a time along shortest augmenting
/// paths. Elements that cannot be inserted are skipped, so the covered set
/// is a maximal independent set of `a ∨ b` inside `order`.
pub fn partition(a: &Matroid, b: &Matroid, order: impl IntoIterator<Item = usize>) -> (Set, Set) {
    debug_assert_eq!(a.ground(), b.ground());
    let ms = [a, b];
    let mut sets: [Set; 2] = [0, 0];
    for s in order {
        if (sets[0] | sets[1]) >> s & 1 == 1 {
            continue;
        }
        augment(&ms, &mut sets, s);
    }
    (sets[0], sets[1])
}

fn augment(ms: &[&Matroid; 2], sets: &mut [Set; 2], s: usize) -> bool {
    let n = ms[0].len();
    let member = |sets: &[Set; 2], e: usize| -> Option<usize> { (0..2).find(|&i| sets[i] >> e & 1 == 1) };
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen: Set = 1 << s;
    let mut queue = VecDeque::from([s]);
    while let Some(y) = queue.pop_front() {
        let home = member(sets, y);
        let targets = || (0..2).filter(|&i| Some(i) != home);
        // terminals first so that the path found is a shortest one
        if let Some(i) = targets().find(|&i| ms[i].is_independent(sets[i] | 1 << y)) {
            let (mut cur, mut into) = (y, i);
            let old = *sets;
            loop {
                let was = (0..2).find(|&j| old[j] >> cur & 1 == 1);
                if let Some(j) = was {
                    sets[j] &= !(1 << cur);
                }
                sets[into] |= 1 << cur;
                if cur == s {
                    break;
                }
                let p = parent[cur].expect("path");
                into = was.expect("inner node belongs to a side");
                cur = p;
            }
            debug_assert!(ms[0].is_independent(sets[0]) && ms[1].is_independent(sets[1]));
            return true;
        }
        for i in targets() {
            for z in bits(sets[i] & !seen) {
                if ms[i].is_independent((sets[i] & !(1 << z)) | 1 << y) {
                    seen |= 1 << z;
                    parent[z] = Some(y);
                    queue.push_back(z);
                }
            }
        }
    }
    false
}

/// `M1 ∨ M2`: bases are the maximal unions of a base of each.
pub fn union(m1: &Matroid, m2: &Matroid) -> Result<Matroid, MatroidError> {
    let g = common_ground(m1, m2);
    let a = pad_with_loops(m1, &g)?;
    let b = pad_with_loops(m2, &g)?;
    let desc = format!("({} ∨ {})", m1.describe(), m2.describe());
    let oracle = UnionOracle { a, b };
    Ok(Matroid::from_oracle(g, oracle, desc))
}

struct UnionOracle {
    a: Matroid,
    b: Matroid,
}

impl matroid_core::Oracle for UnionOracle {
    fn independent(&self, x: Set) -> bool {
        let (i1, i2) = partition(&self.a, &self.b, bits(x));
        i1 | i2 == x
    }

    fn rank(&self, x: Set) -> Option<usize> {
        let (i1, i2) = partition(&self.a, &self.b, bits(x));
        Some(size(i1 | i2))
    }
}

/// `M1 ∧ M2 = (M1* ∨ M2*)*`, operands padded with coloops.
pub fn wedge(m1: &Matroid, m2: &Matroid) -> Result<Matroid, MatroidError> {
    let u = union(&m1.dual(), &m2.dual())?;
    let w = u.dual();
    Ok(w.named(format!("({} ∧ {})", m1.describe(), m2.describe())))
}

/// Maximum set independent in both; `m2` must have the same labels as `m1`.
/// The result is a mask over `m1`'s ground.
pub fn max_common_independent(m1: &Matroid, m2: &Matroid) -> Result<Set, MatroidError> {
    let m2 = m2.reorder(m1.ground())?;
    Ok(intersect(m1, &m2))
}

fn intersect(m1: &Matroid, m2: &Matroid) -> Set {
    let full = m1.full();
    let mut cur: Set = 0;
    for e in bits(full) {
        if m1.is_independent(cur | 1 << e) && m2.is_independent(cur | 1 << e) {
            cur |= 1 << e;
        }
    }
    while let Some(path) = shortest_path(m1, m2, cur) {
        for e in path {
            cur ^= 1 << e;
        }
        debug_assert!(m1.is_independent(cur) && m2.is_independent(cur));
    }
    cur
}

/// Exchange graph for the current set `cur`: `y → x` when `cur − y + x` is
/// independent in `m1`, `x → y` when it is independent in `m2`. Searches
/// from the `m1`-free elements to the `m2`-free ones.
fn shortest_path(m1: &Matroid, m2: &Matroid, cur: Set) -> Option<Vec<usize>> {
    let n = m1.len();
    let outside = m1.full() & !cur;
    let sinks: Set = bits(outside).filter(|&x| m2.is_independent(cur | 1 << x)).fold(0, |a, x| a | 1 << x);
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen: Set = 0;
    let mut queue = VecDeque::new();
    for x in bits(outside) {
        if m1.is_independent(cur | 1 << x) {
            seen |= 1 << x;
            queue.push_back(x);
        }
    }
    while let Some(v) = queue.pop_front() {
        if sinks >> v & 1 == 1 {
            let mut path = vec![v];
            let mut c = v;
            while let Some(p) = parent[c] {
                path.push(p);
                c = p;
            }
            return Some(path);
        }
        if cur >> v & 1 == 1 {
            for x in bits(outside & !seen) {
                if m1.is_independent((cur & !(1 << v)) | 1 << x) {
                    seen |= 1 << x;
                    parent[x] = Some(v);
                    queue.push_back(x);
                }
            }
        } else {
            for y in bits(cur & !seen) {
                if m2.is_independent((cur & !(1 << y)) | 1 << v) {
                    seen |= 1 << y;
                    parent[y] = Some(v);
                    queue.push_back(y);
                }
            }
        }
    }
    None
}

/// Bases of `M1`, `M2` whose union is a base of `M1 ∨ M2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistantBasePair {
    /// Ground both bases are expressed over (the union ground).
    pub ground: GroundSet,
    pub base1: Set,
    pub base2: Set,
    pub union_rank: usize,
}

/// Maximally distant bases. Elements are offered in ground order, `first`
/// ahead of the rest, so the result is reproducible and the union covers a
/// maximal independent subset of `first`.
pub fn maximally_distant_bases(m1: &Matroid, m2: &Matroid, first: Set) -> Result<DistantBasePair, MatroidError> {
    let g = common_ground(m1, m2);
    let a = pad_with_loops(m1, &g)?;
    let b = pad_with_loops(m2, &g)?;
    let order = bits(first & g.full()).chain(bits(g.full() & !first));
    let (i1, i2) = partition(&a, &b, order);
    let base1 = a.extend_in(i1, g.full());
    let base2 = b.extend_in(i2, g.full());
    debug_assert_eq!(base1 | base2, i1 | i2);
    Ok(DistantBasePair { ground: g, base1, base2, union_rank: size(i1 | i2) })
}

/// Independence given by a closure over a fixed ground; handy for building
/// auxiliary matroids in the crates above.
pub fn matroid_from_fn(
    ground: GroundSet,
    desc: &str,
    f: impl Fn(Set) -> bool + Send + Sync + 'static,
) -> Matroid {
    Matroid::from_oracle(ground, FnOracle(f), desc)
}
