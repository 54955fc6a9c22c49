use std::collections::{BTreeSet, HashSet};

use graphspace::Graph;
use petgraph::unionfind::UnionFind;
use vspace::{rank_of_rows, GroundSet, Set, VSpace};

use crate::handle::{FnOracle, Matroid, Oracle};
use crate::sets::{bits, k_subsets, reindex, size};
use crate::{guard, MatroidError};

/// Explicit base family, sorted ascending by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitBases {
    ground: GroundSet,
    bases: Vec<Set>,
}

impl ExplicitBases {
    /// Checks nonemptiness, equal sizes and base exchange.
    pub fn new(ground: GroundSet, bases: impl IntoIterator<Item = Set>) -> Result<ExplicitBases, MatroidError> {
        check_guard(ground.len())?;
        let set: BTreeSet<Set> = bases.into_iter().collect();
        if set.iter().any(|b| b & !ground.full() != 0) {
            return Err(MatroidError::BaseAxiom("a base leaves the ground set".into()));
        }
        let bases: Vec<Set> = set.into_iter().collect();
        if let Err(w) = exchange_check(&bases) {
            return Err(MatroidError::BaseAxiom(w.render(&ground)));
        }
        Ok(ExplicitBases { ground, bases })
    }

    /// Skips the axiom check; for families produced by a matroid oracle.
    pub(crate) fn trusted(ground: GroundSet, mut bases: Vec<Set>) -> ExplicitBases {
        bases.sort_unstable();
        bases.dedup();
        ExplicitBases { ground, bases }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn bases(&self) -> &[Set] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn rank(&self) -> usize {
        size(self.bases[0])
    }

    pub fn contains(&self, b: Set) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    /// Same family expressed over another ordering of the same labels.
    pub fn reorder(&self, order: &GroundSet) -> Result<ExplicitBases, MatroidError> {
        if !order.same_labels(&self.ground) {
            return Err(MatroidError::GroundMismatch(format!("{{{}}} vs {{{}}}", order, self.ground)));
        }
        let bases = self.bases.iter().map(|&b| reindex(b, &self.ground, order)).collect();
        Ok(ExplicitBases::trusted(order.clone(), bases))
    }

    /// Bases as sorted label lists, sorted; independent of ground order.
    pub fn canonical(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .bases
            .iter()
            .map(|&b| {
                let mut v: Vec<String> = self.ground.names(b).into_iter().map(str::to_string).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    pub fn matroid(&self) -> Matroid {
        explicit_unchecked(self.clone())
    }
}

/// Failure of the base-exchange axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeWitness {
    Empty,
    SizeMismatch(Set, Set),
    NoExchange { b1: Set, b2: Set, e: usize },
}

impl ExchangeWitness {
    pub fn render(&self, g: &GroundSet) -> String {
        match self {
            ExchangeWitness::Empty => "no bases".to_string(),
            ExchangeWitness::SizeMismatch(a, b) => format!("{} and {} differ in size", g.show(*a), g.show(*b)),
            ExchangeWitness::NoExchange { b1, b2, e } => {
                format!("removing {} from {} admits no exchange from {}", g.labels()[*e], g.show(*b1), g.show(*b2))
            }
        }
    }
}

/// For all bases `b1, b2` and `e ∈ b1 − b2` some `f ∈ b2 − b1` makes
/// `b1 − e + f` a base.
pub fn exchange_check(bases: &[Set]) -> Result<(), ExchangeWitness> {
    let Some(&first) = bases.first() else {
        return Err(ExchangeWitness::Empty);
    };
    if let Some(&b) = bases.iter().find(|b| size(**b) != size(first)) {
        return Err(ExchangeWitness::SizeMismatch(first, b));
    }
    let family: HashSet<Set> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for e in bits(b1 & !b2) {
                let without = b1 & !(1 << e);
                if !bits(b2 & !b1).any(|f| family.contains(&(without | 1 << f))) {
                    return Err(ExchangeWitness::NoExchange { b1, b2, e });
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn check_guard(n: usize) -> Result<(), MatroidError> {
    let limit = guard();
    if n > limit {
        return Err(MatroidError::Guard { size: n, limit });
    }
    Ok(())
}

struct ExplicitOracle {
    bases: Vec<Set>,
}

impl Oracle for ExplicitOracle {
    fn independent(&self, x: Set) -> bool {
        self.bases.iter().any(|b| b & x == x)
    }

    fn rank(&self, x: Set) -> Option<usize> {
        Some(self.bases.iter().map(|b| size(b & x)).max().unwrap_or(0))
    }
}

/// Matroid whose independent sets are the subsets of the given bases.
pub fn explicit(ground: GroundSet, bases: impl IntoIterator<Item = Set>) -> Result<Matroid, MatroidError> {
    Ok(explicit_unchecked(ExplicitBases::new(ground, bases)?))
}

fn explicit_unchecked(e: ExplicitBases) -> Matroid {
    let desc = format!("bases[{}]", e.len());
    Matroid::from_oracle(e.ground.clone(), ExplicitOracle { bases: e.bases }, desc)
}

/// Column matroid of a space: columns independent in the row space.
pub fn linear(v: &VSpace) -> Matroid {
    let f = v.field();
    let rows = v.basis_matrix().to_vec();
    let oracle = FnOracle(move |x: Set| {
        let cols: Vec<usize> = bits(x).collect();
        let sub: Vec<Vec<vspace::Scalar>> =
            rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        rank_of_rows(&f, &sub, cols.len()) == cols.len()
    });
    Matroid::from_oracle(v.columns().clone(), oracle, format!("linear over {f}"))
}

/// Cycle matroid: edge sets are independent iff they form a forest.
pub fn graphic(g: &Graph) -> Matroid {
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
    let nv = g.vertices().len();
    let oracle = FnOracle(move |x: Set| {
        let mut uf = UnionFind::new(nv);
        bits(x).all(|i| uf.union(ends[i].0, ends[i].1))
    });
    Matroid::from_oracle(g.edge_labels().clone(), oracle, "graphic")
}

struct UniformOracle {
    k: usize,
}

impl Oracle for UniformOracle {
    fn independent(&self, x: Set) -> bool {
        size(x) <= self.k
    }

    fn rank(&self, x: Set) -> Option<usize> {
        Some(size(x).min(self.k))
    }
}

pub fn uniform(ground: GroundSet, k: usize) -> Result<Matroid, MatroidError> {
    if k > ground.len() {
        return Err(MatroidError::Precondition(format!("rank {k} exceeds ground size {}", ground.len())));
    }
    let n = ground.len();
    Ok(Matroid::from_oracle(ground, UniformOracle { k }, format!("U({n},{k})")))
}

/// `F_S`: every subset independent.
pub fn free(ground: GroundSet) -> Matroid {
    let n = ground.len();
    Matroid::from_oracle(ground, UniformOracle { k: n }, "free")
}

/// `0_S`: only the empty set independent.
pub fn zero(ground: GroundSet) -> Matroid {
    Matroid::from_oracle(ground, UniformOracle { k: 0 }, "zero")
}

/// All bases, by scanning subsets of rank size.
pub fn enumerate_bases(m: &Matroid) -> Result<ExplicitBases, MatroidError> {
    check_guard(m.len())?;
    let r = m.full_rank();
    let bases: Vec<Set> = k_subsets(m.full(), r).filter(|&b| m.is_independent(b)).collect();
    Ok(ExplicitBases::trusted(m.ground().clone(), bases))
}

/// Same ground labels and the same bases.
pub fn matroid_equal(a: &Matroid, b: &Matroid) -> Result<bool, MatroidError> {
    if !a.ground().same_labels(b.ground()) {
        return Ok(false);
    }
    if a.full_rank() != b.full_rank() {
        return Ok(false);
    }
    let ea = enumerate_bases(a)?;
    let eb = enumerate_bases(b)?.reorder(a.ground())?;
    Ok(ea == eb)
}
