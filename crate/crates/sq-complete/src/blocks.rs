//! The equivalence classes `E_S(M)` of a complete matroid and the
//! composition results built on them.

use std::collections::{BTreeMap, BTreeSet};

use matroid_core::sets::{reindex, size};
use matroid_core::{enumerate_bases, matroid_equal, GroundSet, Matroid, Set};
use matroid_link::link;

use crate::{is_complete, CompleteError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockRole {
    /// A block of `E'_S`.
    Crossing,
    /// `I_∘`: the bases of `M∘S`.
    Restriction,
    /// `I_×`: the bases of `M×S`.
    Contraction,
    /// `λ(S) = 0`, where `I_∘` and `I_×` coincide.
    Both,
}

/// Side subsets sharing one set of partners: the `I_Q` with `I_S ⊎ I_Q` a
/// base. Members are masks over [`BlockPartition::side`], partners over
/// [`BlockPartition::other`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub role: BlockRole,
    pub members: Vec<Set>,
    pub partners: Vec<Set>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    pub side: GroundSet,
    pub other: GroundSet,
    pub blocks: Vec<Block>,
}

type Canonical = BTreeSet<(BlockRole, Vec<Vec<String>>)>;

impl BlockPartition {
    /// Blocks as sorted label lists, for comparing partitions of matroids
    /// whose grounds are ordered differently.
    pub fn canonical(&self) -> Canonical {
        self.blocks.iter().map(|b| (b.role, self.names(&b.members))).collect()
    }

    fn names(&self, members: &[Set]) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = members
            .iter()
            .map(|&x| {
                let mut v: Vec<String> = self.side.names(x).into_iter().map(String::from).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    pub fn crossing(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.role == BlockRole::Crossing)
    }
}

/// `E_S(M)` for a complete `M`: the `S`-parts of bases, grouped by their
/// partner sets.
pub fn equivalence_classes(m: &Matroid, side: &GroundSet) -> Result<BlockPartition, CompleteError> {
    let sg = m.ground().intersection(side);
    if sg.len() != side.len() {
        return Err(CompleteError::Partition(format!("{{{side}}} is not inside {{{}}}", m.ground())));
    }
    let og = m.ground().minus(side);
    if !is_complete(m, &sg, &og)? {
        return Err(CompleteError::NotComplete);
    }
    let (sm, om) = (m.mask_of(&sg)?, m.mask_of(&og)?);
    let r_circ = m.rank(sm);
    let r_cross = m.full_rank() - m.rank(om);
    let mut partners: BTreeMap<Set, BTreeSet<Set>> = BTreeMap::new();
    for &b in enumerate_bases(m)?.bases() {
        partners.entry(reindex(b & sm, m.ground(), &sg)).or_default().insert(reindex(b & om, m.ground(), &og));
    }
    let mut groups: BTreeMap<Vec<Set>, Vec<Set>> = BTreeMap::new();
    for (x, ps) in partners {
        groups.entry(ps.into_iter().collect()).or_default().push(x);
    }
    let mut blocks: Vec<Block> = groups
        .into_iter()
        .map(|(partners, members)| {
            let k = size(members[0]);
            let role = match (k == r_circ, k == r_cross) {
                (true, true) => BlockRole::Both,
                (true, false) => BlockRole::Restriction,
                (false, true) => BlockRole::Contraction,
                (false, false) => BlockRole::Crossing,
            };
            Block { role, members, partners }
        })
        .collect();
    blocks.sort_by(|a, b| (a.role, &a.members).cmp(&(b.role, &b.members)));
    Ok(BlockPartition { side: sg, other: og, blocks })
}

fn sides(m_sp: &Matroid, m_pq: &Matroid) -> (GroundSet, GroundSet, GroundSet) {
    let p = m_sp.ground().intersection(m_pq.ground());
    (m_sp.ground().minus(&p), p.clone(), m_pq.ground().minus(&p))
}

/// `E_P(M*_SP) = E_P(M_PQ)`, with `P` the shared labels.
pub fn is_compatible(m_sp: &Matroid, m_pq: &Matroid) -> Result<bool, CompleteError> {
    let (_, p, _) = sides(m_sp, m_pq);
    let a = equivalence_classes(&m_sp.dual(), &p)?;
    let b = equivalence_classes(m_pq, &p)?;
    Ok(a.canonical() == b.canonical())
}

/// `M_SP ↔ M_PQ` for compatible factors, checked complete with `E_S` and
/// `E_Q` inherited from the factors.
pub fn compose_compatible(m_sp: &Matroid, m_pq: &Matroid) -> Result<Matroid, CompleteError> {
    if !is_compatible(m_sp, m_pq)? {
        return Err(CompleteError::Precondition("factors are not compatible".into()));
    }
    let (s, _, q) = sides(m_sp, m_pq);
    let l = link(m_sp, m_pq)?;
    if !is_complete(&l, &s, &q)? {
        return Err(CompleteError::Invariant("link of compatible factors is not complete".into()));
    }
    let same = |a: &Matroid, b: &Matroid, g: &GroundSet| -> Result<bool, CompleteError> {
        Ok(equivalence_classes(a, g)?.canonical() == equivalence_classes(b, g)?.canonical())
    };
    if !same(&l, m_sp, &s)? || !same(&l, m_pq, &q)? {
        return Err(CompleteError::Invariant("E_S or E_Q not inherited by the link".into()));
    }
    Ok(l)
}

/// Every block of `coarse` is a union of blocks of `fine`. Labels are
/// compared and roles ignored.
pub fn refines(fine: &BlockPartition, coarse: &BlockPartition) -> bool {
    let label = |bp: &BlockPartition| -> Vec<BTreeSet<Vec<String>>> {
        bp.blocks.iter().map(|b| bp.names(&b.members).into_iter().collect()).collect()
    };
    let (f, c) = (label(fine), label(coarse));
    c.iter().all(|cb| {
        let covered: BTreeSet<&Vec<String>> = f.iter().filter(|fb| !fb.is_disjoint(cb)).flatten().collect();
        covered.len() == cb.len() && covered.iter().all(|x| cb.contains(*x))
    })
}

/// Recovers `M_PQ = M*_SP ↔ M_SQ`. The candidate must be complete and every
/// block of its `E_P` a union of blocks of `E_P(M*_SP)`; the result is then
/// checked to link back to `M_SQ`.
pub fn invert_link(m_sp: &Matroid, m_sq: &Matroid) -> Result<Matroid, CompleteError> {
    let (p, s, q) = sides(m_sp, m_sq);
    if !is_complete(m_sp, &s, &p)? {
        return Err(CompleteError::Precondition("M_SP is not complete".into()));
    }
    let cand = link(&m_sp.dual(), m_sq)?;
    if !is_complete(&cand, &p, &q)? {
        return Err(CompleteError::Precondition("M*_SP ↔ M_SQ is not complete".into()));
    }
    let fine = equivalence_classes(&m_sp.dual(), &p)?;
    let coarse = equivalence_classes(&cand, &p)?;
    if !refines(&fine, &coarse) {
        return Err(CompleteError::Precondition("E_P of the candidate is not a union of blocks of E_P(M*_SP)".into()));
    }
    if !matroid_equal(&link(m_sp, &cand)?, m_sq)? {
        return Err(CompleteError::Invariant("M_SP ↔ (M*_SP ↔ M_SQ) differs from M_SQ".into()));
    }
    Ok(cand)
}
