//! Linking `M_SP ↔ M_PQ = (M_SP ∨ M_PQ) × (S ⊎ Q)` and overlap minimization.

use matroid_core::sets::{bits, k_subsets, size, submasks};
use matroid_core::{check_guard, enumerate_bases, matroid_equal, GroundSet, Label, Matroid, MatroidError, Set};
use matroid_ui::{max_common_independent, maximally_distant_bases, union, wedge};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("malformed overlap: {0}")]
    Overlap(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant breached: {0}")]
    Invariant(String),
}

/// `M_SP` and `M_PQ` sharing exactly `P`.
#[derive(Clone, Debug)]
pub struct LinkInstance {
    pub left: Matroid,
    pub right: Matroid,
    pub overlap: GroundSet,
}

impl LinkInstance {
    /// The overlap is the set of shared labels.
    pub fn new(left: Matroid, right: Matroid) -> LinkInstance {
        let overlap = left.ground().intersection(right.ground());
        LinkInstance { left, right, overlap }
    }

    /// As `new`, insisting the shared labels are exactly `p`.
    pub fn with_overlap(left: Matroid, right: Matroid, p: &GroundSet) -> Result<LinkInstance, LinkError> {
        let inst = LinkInstance::new(left, right);
        if !inst.overlap.same_labels(p) {
            return Err(LinkError::Overlap(format!("shared {{{}}}, declared {{{}}}", inst.overlap, p)));
        }
        Ok(inst)
    }

    pub fn s(&self) -> GroundSet {
        self.left.ground().minus(&self.overlap)
    }

    pub fn q(&self) -> GroundSet {
        self.right.ground().minus(&self.overlap)
    }

    /// `S ⊎ Q`, `S` first.
    pub fn outer(&self) -> GroundSet {
        self.s().union(&self.q())
    }

    pub fn link(&self) -> Result<Matroid, LinkError> {
        link(&self.left, &self.right)
    }
}

/// `(M_SP ∨ M_PQ) × (S ⊎ Q)`; ground is `S` then `Q`.
pub fn link(left: &Matroid, right: &Matroid) -> Result<Matroid, LinkError> {
    let inst = LinkInstance::new(left.clone(), right.clone());
    let u = union(left, right)?;
    let m = u.contract(&inst.outer())?;
    Ok(m.named(format!("({} ↔ {})", left.describe(), right.describe())))
}

/// `(M_SP ∧ M_PQ) ∘ (S ⊎ Q)`: the second route, kept for checking.
pub fn link_via_wedge(left: &Matroid, right: &Matroid) -> Result<Matroid, LinkError> {
    let inst = LinkInstance::new(left.clone(), right.clone());
    Ok(wedge(left, right)?.restrict(&inst.outer())?)
}

/// `λ(S) = r(M∘S) − r(M×S)`.
pub fn connectivity(m: &Matroid, s: &GroundSet) -> Result<usize, MatroidError> {
    let sm = m.mask_of(s)?;
    let q = m.full() & !sm;
    // r(M×S) = r(M) − r(M∘Q)
    Ok(m.rank(sm) + m.rank(q) - m.full_rank())
}

/// `M ∘ T1 × T2` for the contract-then-restrict recipes below: `(M × A) ∘ B`.
fn contract_restrict(m: &Matroid, a: &GroundSet, b: &GroundSet) -> Result<Matroid, MatroidError> {
    m.contract(a)?.restrict(b)
}

fn labels_of(g: &GroundSet, mask: Set) -> GroundSet {
    g.subset(mask)
}

/// Reduces `P` to `P'` keeping the link, with
/// `|P'| = r((M_SP ∨ M_PQ)∘P) − r((M_SP ∧ M_PQ)×P)`. The new sides have
/// disjoint bases covering `P'`.
pub fn general_minimize(inst: &LinkInstance) -> Result<LinkInstance, LinkError> {
    let (s, q, p) = (inst.s(), inst.q(), inst.overlap.clone());
    let u = union(&inst.left, &inst.right)?;
    let g = u.ground().clone();
    let p_mask = g.mask(&p).map_err(MatroidError::from)?;
    // P'' is a base of (∨)∘P; a maximally distant pair offered P first covers it
    let d = maximally_distant_bases(&inst.left, &inst.right, p_mask)?;
    debug_assert_eq!(d.ground, g);
    let p2 = (d.base1 | d.base2) & p_mask;
    debug_assert_eq!(size(p2), u.rank(p_mask));
    let p3 = d.base1 & d.base2 & p2;
    let p1 = labels_of(&g, p2 & !p3);
    let p2 = labels_of(&g, p2);
    let left = inst.left.restrict(&s.union(&p2))?.contract(&s.union(&p1))?;
    let right = inst.right.restrict(&p2.union(&q))?.contract(&p1.union(&q))?;
    Ok(LinkInstance::new(left, right))
}

/// `M_SP∘P = M*_PQ∘P` and `M_SP×P = M*_PQ×P`, decided by enumeration.
pub fn check_condition(inst: &LinkInstance) -> Result<bool, LinkError> {
    let p = &inst.overlap;
    let rd = inst.right.dual();
    Ok(matroid_equal(&inst.left.restrict(p)?, &rd.restrict(p)?)?
        && matroid_equal(&inst.left.contract(p)?, &rd.contract(p)?)?)
}

/// Disjoint bases of `a` and `b` on the same labels, if any: a base of `a`
/// independent in `b*` leaves room for a base of `b`.
pub fn disjoint_bases(a: &Matroid, b: &Matroid) -> Result<Option<(Set, Set)>, LinkError> {
    let b = b.reorder(a.ground())?;
    let x = max_common_independent(a, &b.dual())?;
    if size(x) != a.full_rank() {
        return Ok(None);
    }
    let y = b.max_independent_in(a.full() & !x);
    debug_assert!(b.is_base(y));
    Ok(Some((x, y)))
}

/// Every pair of disjoint bases of `a` and `b` (same labels), the one from
/// [`disjoint_bases`] first.
pub fn disjoint_base_pairs(a: &Matroid, b: &Matroid) -> Result<Vec<(Set, Set)>, LinkError> {
    let b = b.reorder(a.ground())?;
    let mut out: Vec<(Set, Set)> = disjoint_bases(a, &b)?.into_iter().collect();
    for &x in enumerate_bases(a)?.bases() {
        for y in k_subsets(a.full() & !x, b.full_rank()) {
            if b.is_independent(y) && !out.contains(&(x, y)) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// The reduction for given disjoint bases `b3` of `M_SP×P` and `b4` of
/// `M_PQ×P` (masks over `P` in the left operand's order): contract `b3` and
/// delete `b4` on the left, the other way round on the right. The link is
/// not preserved for every choice; see [`conditional_minimize`].
pub fn reduce_overlap(inst: &LinkInstance, b3: Set, b4: Set) -> Result<LinkInstance, LinkError> {
    let (s, q, p) = (inst.s(), inst.q(), inst.overlap.clone());
    let pg = inst.left.contract(&p)?.ground().clone();
    let (t3, t4) = (pg.subset(b3), pg.subset(b4));
    let hat = pg.subset(pg.full() & !b3 & !b4);
    let left = contract_restrict(&inst.left, &s.union(&p.minus(&t3)), &s.union(&hat))?;
    let right = contract_restrict(&inst.right, &p.minus(&t4).union(&q), &hat.union(&q))?;
    Ok(LinkInstance::new(left, right))
}

/// Minimal overlap under the condition, with `|P̂| = λ(S)` of the link.
///
/// Disjoint bases `b3`, `b4` of `M_SP×P`, `M_PQ×P` are tried in turn until
/// the reduced pair links to the same matroid. Some choices lose link bases
/// (the exchange step that would make every choice work does not hold), so
/// each candidate is checked by enumeration.
pub fn conditional_minimize(inst: &LinkInstance) -> Result<LinkInstance, LinkError> {
    if !check_condition(inst)? {
        return Err(LinkError::Precondition("M_SP and M*_PQ differ on P; use general_minimize".into()));
    }
    let s = inst.s();
    let p = &inst.overlap;
    let lam = connectivity(&inst.left, &s)?;
    let target = inst.link()?;
    let a = inst.left.contract(p)?;
    let b = inst.right.contract(p)?;
    for (b3, b4) in disjoint_base_pairs(&a, &b)? {
        let out = reduce_overlap(inst, b3, b4)?;
        if out.overlap.len() != lam {
            return Err(LinkError::Invariant(format!("|P̂| = {} but λ(S) = {lam}", out.overlap.len())));
        }
        if matroid_equal(&out.link()?, &target)? {
            return Ok(out);
        }
    }
    Err(LinkError::Invariant("no pair of disjoint bases of M_SP×P and M_PQ×P keeps the link".into()))
}

/// The three matroids of `(M_SP1 ⊕ M_P2Q) ↔ M_P1P2`.
#[derive(Clone, Debug)]
pub struct Multiport {
    pub left: Matroid,
    pub right: Matroid,
    pub ports: Matroid,
}

impl Multiport {
    pub fn p1(&self) -> GroundSet {
        self.left.ground().intersection(self.ports.ground())
    }

    pub fn p2(&self) -> GroundSet {
        self.right.ground().intersection(self.ports.ground())
    }

    pub fn compose(&self) -> Result<Matroid, LinkError> {
        link(&self.left.direct_sum(&self.right)?, &self.ports)
    }

    fn check_shape(&self) -> Result<(), LinkError> {
        if !self.left.ground().intersection(self.right.ground()).is_empty() {
            return Err(LinkError::Overlap("the two sides share labels".into()));
        }
        if !self.ports.ground().same_labels(&self.p1().union(&self.p2())) {
            return Err(LinkError::Overlap("port labels must all be shared with a side".into()));
        }
        Ok(())
    }
}

/// Shrinks both ports to `λ(S)`, keeping the composed matroid. As in
/// [`conditional_minimize`], candidate port bases are checked by enumeration.
pub fn multiport_minimize(mp: &Multiport) -> Result<Multiport, LinkError> {
    mp.check_shape()?;
    let (p1, p2) = (mp.p1(), mp.p2());
    let s = mp.left.ground().minus(&p1);
    let q = mp.right.ground().minus(&p2);
    let pd = mp.ports.dual();
    for (side, p) in [(&mp.left, &p1), (&mp.right, &p2)] {
        if !(matroid_equal(&side.restrict(p)?, &pd.restrict(p)?)? && matroid_equal(&side.contract(p)?, &pd.contract(p)?)?) {
            return Err(LinkError::Precondition(format!("side and port dual differ on {{{p}}}")));
        }
    }
    // first shrink P1 keeping M_SP2 = M_SP1 ↔ M_P1P2, then P2 keeping the whole
    let sp2 = link(&mp.left, &mp.ports)?;
    let whole = mp.compose()?;
    let a1 = mp.left.contract(&p1)?;
    let g1 = a1.ground().clone();
    for (x13, x14) in disjoint_base_pairs(&a1, &mp.ports.contract(&p1)?)? {
        let (b13, b14) = (g1.subset(x13), g1.subset(x14));
        let hat1 = p1.minus(&b13).minus(&b14);
        let left = contract_restrict(&mp.left, &s.union(&p1.minus(&b13)), &s.union(&hat1))?;
        let ports1 = contract_restrict(&mp.ports, &p1.minus(&b14).union(&p2), &hat1.union(&p2))?;
        if !matroid_equal(&link(&left, &ports1)?, &sp2)? {
            continue;
        }
        let a2 = mp.ports.contract(&p2)?;
        let g2 = a2.ground().clone();
        for (x23, x24) in disjoint_base_pairs(&a2, &mp.right.contract(&p2)?)? {
            let (b23, b24) = (g2.subset(x23), g2.subset(x24));
            let hat2 = p2.minus(&b23).minus(&b24);
            let right = contract_restrict(&mp.right, &p2.minus(&b24).union(&q), &hat2.union(&q))?;
            let ports = contract_restrict(&ports1, &hat1.union(&p2.minus(&b23)), &hat1.union(&hat2))?;
            let out = Multiport { left: left.clone(), right, ports };
            if matroid_equal(&out.compose()?, &whole)? {
                return Ok(out);
            }
        }
    }
    Err(LinkError::Invariant("no choice of port bases keeps the composed matroid".into()))
}

/// Links three matroids at once: the union of all three, contracted to the
/// labels that occur exactly once. No label may occur three times.
pub fn triple_link(a: &Matroid, b: &Matroid, c: &Matroid) -> Result<Matroid, LinkError> {
    let all = a.ground().union(b.ground()).union(c.ground());
    let count = |l: &Label| [a, b, c].iter().filter(|m| m.ground().contains(l)).count();
    if let Some(l) = all.iter().find(|l| count(l) == 3) {
        return Err(LinkError::Overlap(format!("{l} occurs in all three operands")));
    }
    let once: Vec<Label> = all.iter().filter(|l| count(l) == 1).cloned().collect();
    let once = GroundSet::new(once).map_err(MatroidError::from)?;
    let u = union(&union(a, b)?, c)?;
    Ok(u.contract(&once)?)
}

/// `M2` is a quotient of `M1` (a strong map `M1 → M2` exists):
/// `r1(T2) − r1(T1) ≥ r2(T2) − r2(T1)` for all `T1 ⊆ T2`.
pub fn is_quotient(m1: &Matroid, m2: &Matroid) -> Result<bool, LinkError> {
    check_guard(m1.len())?;
    let m2 = m2.reorder(m1.ground())?;
    for t2 in 0..=m1.full() {
        let (a2, b2) = (m1.rank(t2), m2.rank(t2));
        for t1 in submasks(t2) {
            if a2 + m2.rank(t1) < b2 + m1.rank(t1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `M1 ≥ M2`: for every `T`, every base of `M1∘T` contains a base of `M2∘T`.
pub fn matroid_geq(m1: &Matroid, m2: &Matroid) -> Result<bool, LinkError> {
    check_guard(m1.len())?;
    let m2 = m2.reorder(m1.ground())?;
    for t in 0..=m1.full() {
        let (r1, r2) = (m1.rank(t), m2.rank(t));
        for b in k_subsets(t, r1) {
            if m1.is_independent(b) && m2.rank(b) < r2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Element positions of `x` in `g`, as labels; for messages.
pub fn show(g: &GroundSet, x: Set) -> String {
    bits(x).map(|i| g.labels()[i].as_str().to_string()).collect::<Vec<_>>().join(" ")
}
