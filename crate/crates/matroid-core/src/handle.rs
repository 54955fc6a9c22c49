use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use vspace::{GroundSet, Set};

use crate::sets::{bits, size, spread};
use crate::MatroidError;

/// Independence test over subsets of a ground set, by position.
///
/// Implementations must be pure. A direct rank is optional; without one the
/// handle computes rank greedily.
pub trait Oracle: Send + Sync {
    fn independent(&self, x: Set) -> bool;

    fn rank(&self, _x: Set) -> Option<usize> {
        None
    }
}

/// Closure-backed oracle.
pub struct FnOracle<F>(pub F);

impl<F: Fn(Set) -> bool + Send + Sync> Oracle for FnOracle<F> {
    fn independent(&self, x: Set) -> bool {
        (self.0)(x)
    }
}

struct Node {
    oracle: Box<dyn Oracle>,
    desc: String,
    indep: DashMap<Set, bool>,
    ranks: DashMap<Set, usize>,
    queries: AtomicU64,
    full_rank: OnceLock<usize>,
}

/// A matroid given by a ground set and a shared, memoized oracle.
///
/// Cloning is cheap. Relabeling shares the oracle since subsets are indexed by
/// position.
#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    node: Arc<Node>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {{{}}}", self.node.desc, self.ground)
    }
}

impl Matroid {
    pub fn from_oracle(ground: GroundSet, oracle: impl Oracle + 'static, desc: impl Into<String>) -> Matroid {
        assert!(ground.len() <= vspace::MAX_GROUND);
        let node = Node {
            oracle: Box::new(oracle),
            desc: desc.into(),
            indep: DashMap::new(),
            ranks: DashMap::new(),
            queries: AtomicU64::new(0),
            full_rank: OnceLock::new(),
        };
        Matroid { ground, node: Arc::new(node) }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> Set {
        self.ground.full()
    }

    pub fn describe(&self) -> &str {
        &self.node.desc
    }

    /// Independence queries answered so far, cached or not.
    pub fn queries(&self) -> u64 {
        self.node.queries.load(Ordering::Relaxed)
    }

    pub fn is_independent(&self, x: Set) -> bool {
        debug_assert_eq!(x & !self.full(), 0, "subset outside ground");
        self.node.queries.fetch_add(1, Ordering::Relaxed);
        if x == 0 {
            return true;
        }
        if let Some(v) = self.node.indep.get(&x) {
            return *v;
        }
        let v = self.node.oracle.independent(x);
        self.node.indep.insert(x, v);
        v
    }

    pub fn rank(&self, x: Set) -> usize {
        if x == self.full() {
            return *self.node.full_rank.get_or_init(|| self.compute_rank(x));
        }
        if let Some(r) = self.node.ranks.get(&x) {
            return *r;
        }
        let r = self.compute_rank(x);
        self.node.ranks.insert(x, r);
        r
    }

    fn compute_rank(&self, x: Set) -> usize {
        if let Some(r) = self.node.oracle.rank(x) {
            return r;
        }
        size(self.max_independent_in(x))
    }

    /// Greedy maximal independent subset of `x`, scanning in ground order.
    pub fn max_independent_in(&self, x: Set) -> Set {
        let mut cur = 0;
        for i in bits(x) {
            if self.is_independent(cur | 1 << i) {
                cur |= 1 << i;
            }
        }
        cur
    }

    /// Extends the independent set `start` greedily inside `within`.
    pub fn extend_in(&self, start: Set, within: Set) -> Set {
        debug_assert!(self.is_independent(start));
        let mut cur = start;
        for i in bits(within & !start) {
            if self.is_independent(cur | 1 << i) {
                cur |= 1 << i;
            }
        }
        cur
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.full())
    }

    pub fn is_base(&self, x: Set) -> bool {
        size(x) == self.full_rank() && self.is_independent(x)
    }

    /// The greedy base.
    pub fn base(&self) -> Set {
        self.max_independent_in(self.full())
    }

    pub fn closure(&self, x: Set) -> Set {
        let r = self.rank(x);
        let mut c = x;
        for i in bits(self.full() & !x) {
            if self.rank(x | 1 << i) == r {
                c |= 1 << i;
            }
        }
        c
    }

    pub fn loops(&self) -> Set {
        bits(self.full()).filter(|&i| !self.is_independent(1 << i)).fold(0, |a, i| a | 1 << i)
    }

    pub fn coloops(&self) -> Set {
        let r = self.full_rank();
        bits(self.full()).filter(|&i| self.rank(self.full() & !(1 << i)) < r).fold(0, |a, i| a | 1 << i)
    }

    pub fn mask(&self, names: &[&str]) -> Set {
        self.ground.mask_of(names).expect("labels in ground")
    }

    pub fn mask_of(&self, t: &GroundSet) -> Result<Set, MatroidError> {
        Ok(self.ground.mask(t)?)
    }

    // --- derived handles --------------------------------------------------

    /// `M*`: `X` is independent iff `S − X` spans.
    pub fn dual(&self) -> Matroid {
        let m = self.clone();
        let desc = format!("dual({})", self.describe());
        Matroid::from_oracle(self.ground.clone(), DualOracle { m }, desc)
    }

    /// `M ∘ T`, ground in this matroid's order.
    pub fn restrict(&self, t: &GroundSet) -> Result<Matroid, MatroidError> {
        self.mask_of(t)?;
        let keep = self.ground.intersection(t);
        let desc = format!("restrict({}, {{{}}})", self.describe(), keep);
        Ok(self.view(keep, desc))
    }

    /// Same matroid with the ground listed in `order`.
    pub fn reorder(&self, order: &GroundSet) -> Result<Matroid, MatroidError> {
        if !order.same_labels(&self.ground) {
            return Err(MatroidError::GroundMismatch(format!("{{{}}} vs {{{}}}", order, self.ground)));
        }
        if order == &self.ground {
            return Ok(self.clone());
        }
        Ok(self.view(order.clone(), self.describe().to_string()))
    }

    fn view(&self, ground: GroundSet, desc: String) -> Matroid {
        let pos: Vec<usize> = ground.iter().map(|l| self.ground.position(l).expect("checked")).collect();
        Matroid::from_oracle(ground, ViewOracle { m: self.clone(), pos }, desc)
    }

    /// `M × T`: `X ⊆ T` is independent iff it stays independent on top of a
    /// base of `S − T`.
    pub fn contract(&self, t: &GroundSet) -> Result<Matroid, MatroidError> {
        self.mask_of(t)?;
        let keep = self.ground.intersection(t);
        let keep_mask = self.ground.mask(&keep)?;
        let rest = self.full() & !keep_mask;
        let rest_base = self.max_independent_in(rest);
        let pos: Vec<usize> = keep.iter().map(|l| self.ground.position(l).expect("checked")).collect();
        let desc = format!("contract({}, {{{}}})", self.describe(), keep);
        let oracle = ContractOracle { m: self.clone(), pos, rest, rest_base, rest_rank: size(rest_base) };
        Ok(Matroid::from_oracle(keep, oracle, desc))
    }

    /// `(M ∘ T1) × T2` with `T2 ⊆ T1`.
    pub fn minor(&self, t1: &GroundSet, t2: &GroundSet) -> Result<Matroid, MatroidError> {
        if !t2.is_subset_of(t1) {
            return Err(MatroidError::Containment);
        }
        self.restrict(t1)?.contract(t2)
    }

    /// `M1 ⊕ M2` on disjoint grounds, `M1` first.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let desc = format!("({} ⊕ {})", self.describe(), other.describe());
        let oracle = SumOracle { a: self.clone(), b: other.clone(), shift: self.len() };
        Ok(Matroid::from_oracle(ground, oracle, desc))
    }

    /// Renames ground labels; labels not in `map` are kept.
    pub fn relabel(&self, map: &std::collections::HashMap<vspace::Label, vspace::Label>) -> Result<Matroid, MatroidError> {
        let labels = self.ground.iter().map(|l| map.get(l).cloned().unwrap_or_else(|| l.clone())).collect();
        let ground = GroundSet::new(labels).map_err(|_| MatroidError::NotBijective)?;
        Ok(Matroid { ground, node: Arc::clone(&self.node) })
    }

    /// Copy with the labels of `which` primed.
    pub fn primed_on(&self, which: &GroundSet) -> Result<Matroid, MatroidError> {
        self.mask_of(which)?;
        let map = which.iter().map(|l| (l.clone(), l.primed())).collect();
        self.relabel(&map)
    }

    /// Shares the oracle under a new description; used by composite constructors.
    pub fn named(&self, desc: impl Into<String>) -> Matroid {
        let m = self.clone();
        Matroid::from_oracle(self.ground.clone(), ViewOracle { pos: (0..m.len()).collect(), m }, desc)
    }
}

struct DualOracle {
    m: Matroid,
}

impl Oracle for DualOracle {
    fn independent(&self, x: Set) -> bool {
        let full = self.m.full();
        self.m.rank(full & !x) == self.m.full_rank()
    }

    fn rank(&self, x: Set) -> Option<usize> {
        let full = self.m.full();
        Some(size(x) + self.m.rank(full & !x) - self.m.full_rank())
    }
}

struct ViewOracle {
    m: Matroid,
    pos: Vec<usize>,
}

impl Oracle for ViewOracle {
    fn independent(&self, x: Set) -> bool {
        self.m.is_independent(spread(x, &self.pos))
    }

    fn rank(&self, x: Set) -> Option<usize> {
        Some(self.m.rank(spread(x, &self.pos)))
    }
}

struct ContractOracle {
    m: Matroid,
    pos: Vec<usize>,
    rest: Set,
    rest_base: Set,
    rest_rank: usize,
}

impl Oracle for ContractOracle {
    fn independent(&self, x: Set) -> bool {
        self.m.is_independent(spread(x, &self.pos) | self.rest_base)
    }

    fn rank(&self, x: Set) -> Option<usize> {
        Some(self.m.rank(spread(x, &self.pos) | self.rest) - self.rest_rank)
    }
}

struct SumOracle {
    a: Matroid,
    b: Matroid,
    shift: usize,
}

impl SumOracle {
    fn split(&self, x: Set) -> (Set, Set) {
        let low = if self.shift == 64 { u64::MAX } else { (1u64 << self.shift) - 1 };
        let hi = if self.shift == 64 { 0 } else { x >> self.shift };
        (x & low, hi)
    }
}

impl Oracle for SumOracle {
    fn independent(&self, x: Set) -> bool {
        let (l, h) = self.split(x);
        self.a.is_independent(l) && self.b.is_independent(h)
    }

    fn rank(&self, x: Set) -> Option<usize> {
        let (l, h) = self.split(x);
        Some(self.a.rank(l) + self.b.rank(h))
    }
}
