//! `{S,Q}`-complete matroids: completion, equivalence classes, compatible
//! composition, minimal decomposition, free products and principal sums.
//!
//! A matroid is complete when, for bases `b_S⊎b_Q`, `b̂_S⊎b_Q`, `b_S⊎b̂_Q`,
//! the fourth corner `b̂_S⊎b̂_Q` is always a base too.

mod blocks;
mod free;

use std::collections::{BTreeSet, HashMap};

use matroid_core::sets::size;
use matroid_core::{enumerate_bases, matroid_equal, ExplicitBases, GroundSet, Matroid, MatroidError, Set};
use matroid_link::{conditional_minimize, connectivity, link, multiport_minimize, LinkError, LinkInstance, Multiport};
use matroid_ui::{matroid_from_fn, max_common_independent};

pub use blocks::{
    compose_compatible, equivalence_classes, invert_link, is_compatible, refines, Block, BlockPartition, BlockRole,
};
pub use free::{free_cc, free_rc, free_rr, principal_sum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompleteError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error("not a partition of the ground: {0}")]
    Partition(String),
    #[error("matroid is not {{S,Q}}-complete")]
    NotComplete,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant breached: {0}")]
    Invariant(String),
}

/// Masks of `S` and `Q` over `m`'s ground; they must partition it.
pub fn split(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<(Set, Set), CompleteError> {
    if !s.intersection(q).is_empty() {
        return Err(CompleteError::Partition(format!("S and Q share {{{}}}", s.intersection(q))));
    }
    if !s.union(q).same_labels(m.ground()) {
        return Err(CompleteError::Partition(format!("{{{}}} ⊎ {{{}}} is not {{{}}}", s, q, m.ground())));
    }
    Ok((m.mask_of(s)?, m.mask_of(q)?))
}

/// One completion step on an explicit family: every base plus every fourth
/// corner.
fn corners(bases: &[Set], s: Set, q: Set) -> BTreeSet<Set> {
    let mut by_s: HashMap<Set, Vec<Set>> = HashMap::new();
    let mut by_q: HashMap<Set, Vec<Set>> = HashMap::new();
    for &b in bases {
        by_s.entry(b & s).or_default().push(b & q);
        by_q.entry(b & q).or_default().push(b & s);
    }
    let mut out: BTreeSet<Set> = bases.iter().copied().collect();
    for &b in bases {
        for &hs in &by_q[&(b & q)] {
            for &hq in &by_s[&(b & s)] {
                out.insert(hs | hq);
            }
        }
    }
    out
}

pub fn is_complete(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<bool, CompleteError> {
    let (sm, qm) = split(m, s, q)?;
    let e = enumerate_bases(m)?;
    Ok(corners(e.bases(), sm, qm).len() == e.len())
}

/// The completion by its definition, enumerated.
pub fn completion_bruteforce(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<ExplicitBases, CompleteError> {
    let (sm, qm) = split(m, s, q)?;
    let e = enumerate_bases(m)?;
    Ok(ExplicitBases::new(m.ground().clone(), corners(e.bases(), sm, qm))?)
}

/// Repeats [`completion_bruteforce`] until nothing is added. One step can
/// leave a matroid that is still incomplete, so this is the smallest
/// complete matroid containing the bases of `M`, not the completion itself.
pub fn completion_fixpoint(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<ExplicitBases, CompleteError> {
    let mut cur = completion_bruteforce(m, s, q)?;
    loop {
        let next = completion_bruteforce(&cur.matroid(), s, q)?;
        if next.len() == cur.len() {
            return Ok(cur);
        }
        cur = next;
    }
}

/// The auxiliary matroid for testing `T = T_S ⊎ T_Q`: `X` is independent iff
/// `X_S ∪ T_Q` and `T_S ∪ X_Q` both are. A common base with `M` is a base
/// `b_S⊎b_Q` of `M` such that `T_S⊎b_Q` and `b_S⊎T_Q` are independent.
fn certificate(m: &Matroid, s: Set, q: Set, t: Set) -> Option<Set> {
    let (ts, tq) = (t & s, t & q);
    if size(t) > m.full_rank() || !m.is_independent(ts) || !m.is_independent(tq) {
        return None;
    }
    let inner = m.clone();
    let aux = matroid_from_fn(m.ground().clone(), "completion certificate", move |x| {
        inner.is_independent((x & s) | tq) && inner.is_independent(ts | (x & q))
    });
    let c = max_common_independent(m, &aux).expect("same ground");
    (size(c) == m.full_rank()).then_some(c)
}

/// `[(M)_{SQ'} ⊕ (M)_{S'Q}] ↔ (M*)_{S'Q'}` as a lazy oracle on `M`'s ground.
///
/// Independence of `T` reduces to one matroid intersection against `M`, so a
/// query costs `O(n² log n)` calls to `M`'s oracle rather than an enumeration.
pub fn completion(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<Matroid, CompleteError> {
    let (sm, qm) = split(m, s, q)?;
    let inner = m.clone();
    let desc = format!("completion({}, {{{}}}, {{{}}})", m.describe(), s, q);
    Ok(matroid_from_fn(m.ground().clone(), &desc, move |t| certificate(&inner, sm, qm, t).is_some()))
}

/// The same matroid through the link handles, with primed copies of `S`
/// and `Q`. Ground in `M`'s order.
pub fn completion_via_link(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<Matroid, CompleteError> {
    split(m, s, q)?;
    check_primes(m.ground())?;
    let left = m.primed_on(q)?.direct_sum(&m.primed_on(s)?)?;
    let ports = m.dual().primed_on(m.ground())?;
    Ok(link(&left, &ports)?.reorder(m.ground())?)
}

fn check_primes(g: &GroundSet) -> Result<(), CompleteError> {
    match g.iter().find(|l| g.contains(&l.primed())) {
        Some(l) => Err(CompleteError::Precondition(format!("{l} and its primed copy both occur"))),
        None => Ok(()),
    }
}

/// Three bases of `M` whose fourth corner is the queried completion base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionWitness {
    /// `b_S ⊎ b_Q`
    pub base_bb: Set,
    /// `b̂_S ⊎ b_Q`
    pub base_hb: Set,
    /// `b_S ⊎ b̂_Q`
    pub base_bh: Set,
}

/// Reads the witness off the intersection certificate, which has the form
/// `b_S ⊎ b_Q`.
pub fn completion_witness(
    m: &Matroid,
    s: &GroundSet,
    q: &GroundSet,
    candidate: Set,
) -> Result<CompletionWitness, CompleteError> {
    let (sm, qm) = split(m, s, q)?;
    if size(candidate) != m.full_rank() {
        return Err(CompleteError::Precondition("candidate has the wrong size for a base".into()));
    }
    let Some(c) = certificate(m, sm, qm, candidate) else {
        return Err(CompleteError::Precondition("candidate is not a base of the completion".into()));
    };
    let w = CompletionWitness {
        base_bb: c,
        base_hb: (candidate & sm) | (c & qm),
        base_bh: (c & sm) | (candidate & qm),
    };
    if ![w.base_bb, w.base_hb, w.base_bh].iter().all(|&b| m.is_base(b)) {
        return Err(CompleteError::Invariant("witness corners are not all bases".into()));
    }
    Ok(w)
}

/// `(M_SP̂, M_P̂Q)` linking to `M` with `|P̂| = λ(S)`: the pseudoidentity split
/// `M_SQ' , M*_S'Q' ↔ M_S'Q`, then [`conditional_minimize`]. Both factors are
/// checked complete and compatible.
pub fn decompose_complete(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<LinkInstance, CompleteError> {
    if !is_complete(m, s, q)? {
        return Err(CompleteError::NotComplete);
    }
    check_primes(m.ground())?;
    let left = m.primed_on(q)?;
    let right = link(&m.dual().primed_on(m.ground())?, &m.primed_on(s)?)?;
    let out = conditional_minimize(&LinkInstance::new(left, right))?;
    let lam = connectivity(m, s)?;
    if out.overlap.len() != lam {
        return Err(CompleteError::Invariant(format!("|P̂| = {} but λ(S) = {lam}", out.overlap.len())));
    }
    if !matroid_equal(&out.link()?, m)? {
        return Err(CompleteError::Invariant("the factors do not link back to M".into()));
    }
    let p = &out.overlap;
    if !is_complete(&out.left, s, p)? || !is_complete(&out.right, p, q)? {
        return Err(CompleteError::Invariant("a factor is not complete".into()));
    }
    if !is_compatible(&out.left, &out.right)? {
        return Err(CompleteError::Invariant("E_P(M*_SP̂) differs from E_P(M_P̂Q)".into()));
    }
    Ok(out)
}

/// `(M_SP̂1 ⊕ M_P̂2Q) ↔ M_P̂1P̂2 = M` with `|P̂1| = |P̂2| = λ(S)`, each part
/// complete.
pub fn multiport_decompose_complete(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<Multiport, CompleteError> {
    if !is_complete(m, s, q)? {
        return Err(CompleteError::NotComplete);
    }
    check_primes(m.ground())?;
    let mp = Multiport { left: m.primed_on(q)?, right: m.primed_on(s)?, ports: m.dual().primed_on(m.ground())? };
    let out = multiport_minimize(&mp)?;
    let lam = connectivity(m, s)?;
    let (p1, p2) = (out.p1(), out.p2());
    if p1.len() != lam || p2.len() != lam {
        return Err(CompleteError::Invariant(format!("ports {} and {} for λ(S) = {lam}", p1.len(), p2.len())));
    }
    if !matroid_equal(&out.compose()?, m)? {
        return Err(CompleteError::Invariant("the three parts do not compose to M".into()));
    }
    if !is_complete(&out.left, s, &p1)? || !is_complete(&out.right, &p2, q)? || !is_complete(&out.ports, &p1, &p2)? {
        return Err(CompleteError::Invariant("a part is not complete".into()));
    }
    Ok(out)
}
