use std::collections::{HashMap, HashSet};

use crate::field::{Field, Scalar};
use crate::ground::{GroundSet, Label};
use crate::SpaceError;

/// Row space over an exact field with labeled columns.
///
/// The basis is kept in reduced row echelon form with pivots ascending in
/// column order, so two spaces on the same columns are equal iff their
/// matrices are identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VSpace {
    field: Field,
    cols: GroundSet,
    rows: Vec<Vec<Scalar>>,
}

/// Reduces `rows` in place to canonical RREF and returns the pivot columns.
pub fn rref(field: &Field, rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of the given rows (not modified).
pub fn rank_of_rows(field: &Field, rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m, ncols).len()
}

impl VSpace {
    pub fn new(field: Field, cols: GroundSet, rows: Vec<Vec<Scalar>>) -> Result<VSpace, SpaceError> {
        for row in &rows {
            if row.len() != cols.len() {
                return Err(SpaceError::Dimension { expected: cols.len(), found: row.len() });
            }
            if let Some(x) = row.iter().find(|x| !field.contains(x)) {
                return Err(SpaceError::MixedFields(format!("{x:?} is not in {field}")));
            }
        }
        Ok(VSpace::from_rows(field, cols, rows))
    }

    /// Integer rows; handy for fixtures.
    pub fn from_ints(field: Field, cols: GroundSet, rows: &[&[i64]]) -> Result<VSpace, SpaceError> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        VSpace::new(field, cols, rows)
    }

    fn from_rows(field: Field, cols: GroundSet, mut rows: Vec<Vec<Scalar>>) -> VSpace {
        let n = cols.len();
        rref(&field, &mut rows, n);
        VSpace { field, cols, rows }
    }

    pub fn zero(field: Field, cols: GroundSet) -> VSpace {
        VSpace { field, cols, rows: Vec::new() }
    }

    pub fn full(field: Field, cols: GroundSet) -> VSpace {
        let n = cols.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        VSpace { field, cols, rows }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn columns(&self) -> &GroundSet {
        &self.cols
    }

    pub fn basis_matrix(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !self.field.is_zero(x)).expect("nonzero row"))
            .collect()
    }

    /// The pivot columns: the lexicographically first column base.
    pub fn column_base(&self) -> GroundSet {
        let piv: HashSet<usize> = self.pivots().into_iter().collect();
        GroundSet::new(
            self.cols
                .iter()
                .enumerate()
                .filter(|(i, _)| piv.contains(i))
                .map(|(_, l)| l.clone())
                .collect(),
        )
        .expect("subset")
    }

    fn check_subset(&self, t: &GroundSet) -> Result<(), SpaceError> {
        match t.iter().find(|l| !self.cols.contains(l)) {
            Some(l) => Err(SpaceError::UnknownLabel(l.to_string())),
            None => Ok(()),
        }
    }

    fn project(&self, rows: &[Vec<Scalar>], keep: &GroundSet) -> Vec<Vec<Scalar>> {
        let idx: Vec<usize> = keep.iter().map(|l| self.cols.position(l).expect("checked")).collect();
        rows.iter().map(|r| idx.iter().map(|&i| r[i].clone()).collect()).collect()
    }

    /// `V ∘ T`: project onto `T` (columns kept in this space's order).
    pub fn restrict(&self, t: &GroundSet) -> Result<VSpace, SpaceError> {
        self.check_subset(t)?;
        let keep = self.cols.intersection(t);
        let rows = self.project(&self.rows, &keep);
        Ok(VSpace::from_rows(self.field, keep, rows))
    }

    /// `V × T`: vectors vanishing off `T`, restricted to `T`.
    pub fn contract(&self, t: &GroundSet) -> Result<VSpace, SpaceError> {
        self.check_subset(t)?;
        let keep = self.cols.intersection(t);
        let rest = self.cols.minus(&keep);
        // eliminate on the deleted columns first; rows pivoting inside T vanish off T
        let order = rest.union(&keep);
        let mut rows = self.project(&self.rows, &order);
        let piv = rref(&self.field, &mut rows, order.len());
        let tail: Vec<Vec<Scalar>> = rows
            .into_iter()
            .zip(piv)
            .filter(|(_, p)| *p >= rest.len())
            .map(|(r, _)| r[rest.len()..].to_vec())
            .collect();
        Ok(VSpace::from_rows(self.field, keep, tail))
    }

    /// `(V ∘ T1) × T2` with `T2 ⊆ T1`.
    pub fn minor(&self, t1: &GroundSet, t2: &GroundSet) -> Result<VSpace, SpaceError> {
        if !t2.is_subset_of(t1) {
            return Err(SpaceError::Containment);
        }
        self.restrict(t1)?.contract(t2)
    }

    /// Rows padded with zeros onto `target`.
    fn padded_rows(&self, target: &GroundSet) -> Vec<Vec<Scalar>> {
        let pos: Vec<Option<usize>> = target.iter().map(|l| self.cols.position(l)).collect();
        self.rows
            .iter()
            .map(|r| {
                pos.iter()
                    .map(|p| match p {
                        Some(i) => r[*i].clone(),
                        None => self.field.zero(),
                    })
                    .collect()
            })
            .collect()
    }

    fn same_field(&self, other: &VSpace) -> Result<(), SpaceError> {
        if self.field != other.field {
            return Err(SpaceError::MixedFields(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    /// `V_SP + V_PQ`: both zero-padded to `S ⊎ P ⊎ Q`, then summed.
    pub fn sum(&self, other: &VSpace) -> Result<VSpace, SpaceError> {
        self.same_field(other)?;
        let cols = self.cols.union(&other.cols);
        let mut rows = self.padded_rows(&cols);
        rows.extend(other.padded_rows(&cols));
        Ok(VSpace::from_rows(self.field, cols, rows))
    }

    /// `V_SP ∩ V_PQ`: both padded with the full space, then intersected.
    pub fn intersect(&self, other: &VSpace) -> Result<VSpace, SpaceError> {
        self.same_field(other)?;
        // (V1 ⊕ F)∩(V2 ⊕ F) is the complement of V1⊥ ⊕ 0 + V2⊥ ⊕ 0
        Ok(self.orthogonal().sum(&other.orthogonal())?.orthogonal())
    }

    /// The complementary orthogonal space.
    pub fn orthogonal(&self) -> VSpace {
        let n = self.cols.len();
        let f = &self.field;
        let piv = self.pivots();
        let is_piv: HashSet<usize> = piv.iter().copied().collect();
        let mut rows = Vec::with_capacity(n - piv.len());
        for j in (0..n).filter(|j| !is_piv.contains(j)) {
            let mut v = vec![f.zero(); n];
            v[j] = f.one();
            for (r, &p) in self.rows.iter().zip(&piv) {
                v[p] = f.neg(&r[j]);
            }
            rows.push(v);
        }
        VSpace::from_rows(self.field, self.cols.clone(), rows)
    }

    /// Flips the sign of the coordinates in `y`.
    pub fn negate_on(&self, y: &GroundSet) -> Result<VSpace, SpaceError> {
        self.check_subset(y)?;
        let flip: Vec<bool> = self.cols.iter().map(|l| y.contains(l)).collect();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().zip(&flip).map(|(x, &fl)| if fl { self.field.neg(x) } else { x.clone() }).collect())
            .collect();
        Ok(VSpace::from_rows(self.field, self.cols.clone(), rows))
    }

    /// Renames columns in place; positions are unchanged so the form stays canonical.
    pub fn relabel(&self, map: &HashMap<Label, Label>) -> Result<VSpace, SpaceError> {
        let labels: Vec<Label> = self.cols.iter().map(|l| map.get(l).cloned().unwrap_or_else(|| l.clone())).collect();
        let cols = GroundSet::new(labels).map_err(|_| SpaceError::NotBijective)?;
        Ok(VSpace { field: self.field, cols, rows: self.rows.clone() })
    }

    /// Copy on primed labels for the columns in `which`.
    pub fn primed_on(&self, which: &GroundSet) -> Result<VSpace, SpaceError> {
        self.check_subset(which)?;
        let map = which.iter().map(|l| (l.clone(), l.primed())).collect();
        self.relabel(&map)
    }

    /// Same space with columns permuted into `order`.
    pub fn reorder(&self, order: &GroundSet) -> Result<VSpace, SpaceError> {
        if !order.same_labels(&self.cols) {
            return Err(SpaceError::NotBijective);
        }
        let rows = self.project(&self.rows, order);
        Ok(VSpace::from_rows(self.field, order.clone(), rows))
    }

    /// Equality up to a permutation of columns.
    pub fn same_space(&self, other: &VSpace) -> bool {
        self.field == other.field
            && self.cols.same_labels(&other.cols)
            && other.reorder(&self.cols).map(|o| &o == self).unwrap_or(false)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rank_of_rows(&self.field, &rows, self.cols.len()) == self.rank()
    }

    /// Partition of the columns into (S, P, Q) relative to `other`.
    pub fn split_with(&self, other: &VSpace) -> (GroundSet, GroundSet, GroundSet) {
        let p = self.cols.intersection(&other.cols);
        (self.cols.minus(&p), p, other.cols.minus(&self.cols))
    }

    /// `V_SP ↔ V_PQ = (V_SP ∩ V_PQ) ∘ (S ⊎ Q)`.
    pub fn matched_compose(&self, other: &VSpace) -> Result<VSpace, SpaceError> {
        let (s, _, q) = self.split_with(other);
        self.intersect(other)?.restrict(&s.union(&q))
    }

    /// Second route to the same space: `(V_SP + (−V_PQ on P)) × (S ⊎ Q)`.
    pub fn matched_compose_via_sum(&self, other: &VSpace) -> Result<VSpace, SpaceError> {
        let (s, p, q) = self.split_with(other);
        self.sum(&other.negate_on(&p)?)?.contract(&s.union(&q))
    }

    pub fn is_subspace_of(&self, other: &VSpace) -> bool {
        self.field == other.field
            && self.cols.same_labels(&other.cols)
            && self.sum(other).map(|s| s.rank() == other.rank()).unwrap_or(false)
    }
}
