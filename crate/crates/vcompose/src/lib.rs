//! Minimizing the shared index set of a matched composition, and building
//! minimal decompositions of a single space.

use vspace::{GroundSet, SpaceError, VSpace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComposeError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("S and Q share label `{0}`")]
    Overlap(String),
    #[error("S and Q do not partition the columns")]
    NotPartition,
}

/// `(V_SP, V_PQ)` with `P` the shared columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionPair {
    pub left: VSpace,
    pub right: VSpace,
    pub overlap: GroundSet,
}

impl CompositionPair {
    pub fn new(left: VSpace, right: VSpace) -> Result<CompositionPair, ComposeError> {
        if left.field() != right.field() {
            return Err(SpaceError::MixedFields(format!("{} vs {}", left.field(), right.field())).into());
        }
        let overlap = left.columns().intersection(right.columns());
        Ok(CompositionPair { left, right, overlap })
    }

    pub fn s(&self) -> GroundSet {
        self.left.columns().minus(&self.overlap)
    }

    pub fn q(&self) -> GroundSet {
        self.right.columns().minus(&self.overlap)
    }

    pub fn compose(&self) -> VSpace {
        self.left.matched_compose(&self.right).expect("validated pair")
    }

    /// `r(V_SP + V_PQ) − r(V_SP ∩ V_PQ)`, the size `min_overlap` reaches.
    pub fn reducible_size(&self) -> usize {
        let sum = self.left.sum(&self.right).expect("validated pair");
        let cap = self.left.intersect(&self.right).expect("validated pair");
        sum.rank() - cap.rank()
    }

    /// Both sides agree on `∘P` and on `×P`.
    pub fn minors_match(&self) -> bool {
        let p = &self.overlap;
        let lr = self.left.restrict(p).expect("P is shared");
        let rr = self.right.restrict(p).expect("P is shared");
        let lc = self.left.contract(p).expect("P is shared");
        let rc = self.right.contract(p).expect("P is shared");
        lr.same_space(&rr) && lc.same_space(&rc)
    }
}

/// `λ(S) = r(V∘S) − r(V×S)`.
pub fn connectivity(v: &VSpace, s: &GroundSet) -> Result<usize, SpaceError> {
    Ok(v.restrict(s)?.rank() - v.contract(s)?.rank())
}

/// Shrinks `P` to `P'` without changing the composition.
///
/// `P''` is the first column base of `(V_SP + V_PQ)∘P`; both sides are
/// restricted to it. The first column base of `(V_SP'' ∩ V_P''Q)×P''` is then
/// contracted away.
pub fn min_overlap(pair: &CompositionPair) -> CompositionPair {
    let (s, p, q) = (pair.s(), &pair.overlap, pair.q());
    let sum = pair.left.sum(&pair.right).expect("validated pair");
    let p2 = sum.restrict(p).expect("P is shared").column_base();

    let left = pair.left.restrict(&s.union(&p2)).expect("subset");
    let right = pair.right.restrict(&p2.union(&q)).expect("subset");
    let cap = left.intersect(&right).expect("same field");
    let drop = cap.contract(&p2).expect("subset").column_base();
    let p1 = p2.minus(&drop);

    let left = left.contract(&s.union(&p1)).expect("subset");
    let right = right.contract(&p1.union(&q)).expect("subset");
    CompositionPair { left, right, overlap: p1 }
}

/// `V_QQ' = V_SQ ↔ (V_SQ)_{SQ'}`, on columns `Q` then `Q'`.
pub fn pseudo_identity(v: &VSpace, q: &GroundSet) -> Result<VSpace, ComposeError> {
    if !q.is_subset_of(v.columns()) {
        return Err(ComposeError::NotPartition);
    }
    if let Some(l) = q.primed().iter().find(|l| v.columns().contains(l)) {
        return Err(ComposeError::Overlap(l.to_string()));
    }
    Ok(v.matched_compose(&v.primed_on(q)?)?)
}

/// Minimal decomposition of `V_SQ` through `P = Q'`.
///
/// Starts from `((V_SQ)_{SQ'}, V_QQ')`, whose minors on `Q'` agree, then
/// minimizes. The result has `|P| = λ(S)`.
pub fn decompose(v: &VSpace, s: &GroundSet, q: &GroundSet) -> Result<CompositionPair, ComposeError> {
    if !(s.len() + q.len() == v.columns().len() && s.union(q).same_labels(v.columns()) && s.intersection(q).is_empty()) {
        return Err(ComposeError::NotPartition);
    }
    let left = v.primed_on(q)?;
    let right = pseudo_identity(v, q)?;
    Ok(min_overlap(&CompositionPair::new(left, right)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use vspace::Field;

    fn gf7() -> Field {
        Field::gf(7).unwrap()
    }

    #[test]
    fn direct_sum_decomposes_through_nothing() {
        let cols = GroundSet::of(&["s1", "s2", "q1"]);
        let v = VSpace::from_ints(gf7(), cols, &[&[1, 2, 0], &[0, 0, 1]]).unwrap();
        let pair = decompose(&v, &GroundSet::of(&["s1", "s2"]), &GroundSet::of(&["q1"])).unwrap();
        assert!(pair.overlap.is_empty());
        assert_eq!(pair.compose().reorder(v.columns()).unwrap(), v);
    }

    #[test]
    fn all_ones_needs_one_port() {
        let cols = GroundSet::of(&["s1", "s2", "q1", "q2"]);
        let v = VSpace::from_ints(Field::Rational, cols, &[&[1, 1, 1, 1]]).unwrap();
        let s = GroundSet::of(&["s1", "s2"]);
        assert_eq!(connectivity(&v, &s).unwrap(), 1);
        let pair = decompose(&v, &s, &GroundSet::of(&["q1", "q2"])).unwrap();
        assert_eq!(pair.overlap.len(), 1);
    }

    #[test]
    fn zero_s_full_q_pseudo_identity_is_full() {
        let cols = GroundSet::of(&["s1", "q1", "q2"]);
        let v = VSpace::from_ints(gf7(), cols, &[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        let q = GroundSet::of(&["q1", "q2"]);
        let w = pseudo_identity(&v, &q).unwrap();
        assert_eq!(w, VSpace::full(gf7(), q.union(&q.primed())));
    }

    #[test]
    fn full_s_zero_q_pseudo_identity_is_zero() {
        let cols = GroundSet::of(&["s1", "q1"]);
        let v = VSpace::from_ints(gf7(), cols, &[&[1, 0]]).unwrap();
        let q = GroundSet::of(&["q1"]);
        assert_eq!(pseudo_identity(&v, &q).unwrap().rank(), 0);
    }

    #[test]
    fn rejects_bad_partition() {
        let v = VSpace::full(gf7(), GroundSet::of(&["a", "b"]));
        let a = GroundSet::of(&["a"]);
        assert_eq!(decompose(&v, &a, &a), Err(ComposeError::NotPartition));
    }
}
