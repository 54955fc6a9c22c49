//! Products of `M_S` and `M_Q` that are complete by construction.

use matroid_core::sets::size;
use matroid_core::{GroundSet, Matroid, MatroidError};
use matroid_ui::{matroid_from_fn, union};

use crate::CompleteError;

fn range_check(r_s: usize, r_q: usize, k: usize) -> Result<(), CompleteError> {
    if k < r_s.max(r_q) || k > r_s + r_q {
        return Err(CompleteError::Precondition(format!("k_max = {k} outside [{}, {}]", r_s.max(r_q), r_s + r_q)));
    }
    Ok(())
}

/// `RR(M_S, M_Q)` at `k_max`: unions of an independent set of each side
/// with `k_max` elements in all, i.e. `M_S ⊕ M_Q` truncated to `k_max`.
pub fn free_rr(m_s: &Matroid, m_q: &Matroid, k_max: usize) -> Result<Matroid, CompleteError> {
    range_check(m_s.full_rank(), m_q.full_rank(), k_max)?;
    let sum = m_s.direct_sum(m_q)?;
    let desc = format!("RR({}, {}, {k_max})", m_s.describe(), m_q.describe());
    let inner = sum.clone();
    Ok(matroid_from_fn(sum.ground().clone(), &desc, move |x| size(x) <= k_max && inner.is_independent(x)))
}

/// `CC(M_S, M_Q) = RR(M*_S, M*_Q)*`. Here `k_max` is the rank of the inner
/// `RR`, so it is range-checked against the dual ranks.
pub fn free_cc(m_s: &Matroid, m_q: &Matroid, k_max: usize) -> Result<Matroid, CompleteError> {
    let rr = free_rr(&m_s.dual(), &m_q.dual(), k_max)?;
    Ok(rr.dual().named(format!("CC({}, {}, {k_max})", m_s.describe(), m_q.describe())))
}

/// `RC(M_S, M_Q)`, the free product: bases are an independent set of `M_S`
/// and a spanning set of `M_Q`, `r(M_S) + r(M_Q)` elements in all.
pub fn free_rc(m_s: &Matroid, m_q: &Matroid) -> Result<Matroid, CompleteError> {
    let sum = m_s.direct_sum(m_q)?;
    let sm = sum.mask_of(m_s.ground())?;
    let r_s = m_s.full_rank();
    let desc = format!("RC({}, {})", m_s.describe(), m_q.describe());
    let inner = sum.clone();
    // X fits in such a base iff X_S is independent and X_Q's nullity fits
    // in the room left on S
    Ok(matroid_from_fn(sum.ground().clone(), &desc, move |x| {
        let (xs, xq) = (x & sm, x & !sm);
        let nullity = size(xq) - inner.rank(xq);
        inner.is_independent(xs) && size(xs) + nullity <= r_s
    }))
}

/// `M_SB` of the principal sum: `X ⊎ B1` is independent iff `X` is, and
/// `|B1| ≤ r(X ∪ A) − |X|`.
fn principal_side(m_s: &Matroid, a: &GroundSet, b: &GroundSet) -> Result<Matroid, MatroidError> {
    let am = m_s.mask_of(a)?;
    let ground = m_s.ground().disjoint_union(b)?;
    let sm = ground.mask(m_s.ground())?;
    let inner = m_s.clone();
    let desc = format!("principal({}, {{{a}}}, {{{b}}})", m_s.describe());
    Ok(matroid_from_fn(ground, &desc, move |x| {
        let (xs, xb) = (x & sm, x & !sm);
        inner.is_independent(xs) && size(xb) + size(xs) <= inner.rank(xs | am)
    }))
}

/// `(M_S, M_Q; A, B) = M_SB ∨ M_Q`, ground `S` then `Q`.
pub fn principal_sum(m_s: &Matroid, m_q: &Matroid, a: &GroundSet, b: &GroundSet) -> Result<Matroid, CompleteError> {
    if !a.is_subset_of(m_s.ground()) || !b.is_subset_of(m_q.ground()) {
        return Err(CompleteError::Precondition("need A ⊆ S and B ⊆ Q".into()));
    }
    let ground = m_s.ground().disjoint_union(m_q.ground()).map_err(MatroidError::from)?;
    let side = principal_side(m_s, a, b)?;
    let u = union(&side, m_q)?.reorder(&ground)?;
    Ok(u.named(format!("({}, {}; {{{a}}}, {{{b}}})", m_s.describe(), m_q.describe())))
}
