//! Labels and ordered ground sets.

use std::collections::HashMap;
use std::fmt;

use crate::SpaceError;

/// Subsets of a ground set are bitmasks over its canonical order.
pub type Set = u64;

/// Largest ground set a bitmask can index.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(String);

impl Label {
    pub fn new(name: impl Into<String>) -> Result<Label, SpaceError> {
        let name = name.into();
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == ',') {
            return Err(SpaceError::BadLabel(name));
        }
        Ok(Label(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `x` becomes `x'`.
    pub fn primed(&self) -> Label {
        Label(format!("{}'", self.0))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Ordered, duplicate-free sequence of labels. The order is the column order.
#[derive(Clone, Debug, Default)]
pub struct GroundSet {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}
impl Eq for GroundSet {}

impl GroundSet {
    pub fn new(labels: Vec<Label>) -> Result<GroundSet, SpaceError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(SpaceError::DuplicateLabel(l.to_string()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    pub fn empty() -> GroundSet {
        GroundSet::default()
    }

    /// Convenience for tests and fixtures: `GroundSet::of(&["a", "b"])`.
    pub fn of(names: &[&str]) -> GroundSet {
        let labels = names.iter().map(|n| Label::new(*n).expect("valid label")).collect();
        GroundSet::new(labels).expect("distinct labels")
    }

    pub fn parse_list(spec: &str) -> Result<GroundSet, SpaceError> {
        let labels = spec
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(Label::new)
            .collect::<Result<Vec<_>, _>>()?;
        GroundSet::new(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> {
        self.labels.iter()
    }

    pub fn position(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.index.contains_key(l)
    }

    pub fn position_of(&self, l: &Label) -> Result<usize, SpaceError> {
        self.position(l).ok_or_else(|| SpaceError::UnknownLabel(l.to_string()))
    }

    /// Labels of `self` lying in `other`, in `self` order.
    pub fn intersection(&self, other: &GroundSet) -> GroundSet {
        self.filter(|l| other.contains(l))
    }

    pub fn minus(&self, other: &GroundSet) -> GroundSet {
        self.filter(|l| !other.contains(l))
    }

    /// `self` followed by the labels of `other` not already present.
    pub fn union(&self, other: &GroundSet) -> GroundSet {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().filter(|l| !self.contains(l)).cloned());
        GroundSet::new(labels).expect("union has no duplicates")
    }

    /// Concatenation of disjoint sets; fails on overlap.
    pub fn disjoint_union(&self, other: &GroundSet) -> Result<GroundSet, SpaceError> {
        if let Some(l) = other.labels.iter().find(|l| self.contains(l)) {
            return Err(SpaceError::Overlap(l.to_string()));
        }
        Ok(self.union(other))
    }

    pub fn is_subset_of(&self, other: &GroundSet) -> bool {
        self.labels.iter().all(|l| other.contains(l))
    }

    pub fn same_labels(&self, other: &GroundSet) -> bool {
        self.len() == other.len() && self.is_subset_of(other)
    }

    pub fn primed(&self) -> GroundSet {
        GroundSet::new(self.labels.iter().map(Label::primed).collect()).expect("priming is injective")
    }

    fn filter(&self, keep: impl Fn(&Label) -> bool) -> GroundSet {
        GroundSet::new(self.labels.iter().filter(|l| keep(l)).cloned().collect()).expect("subset of a set")
    }

    // --- bitmask views -------------------------------------------------

    pub fn full(&self) -> Set {
        assert!(self.len() <= MAX_GROUND, "ground set too large for a bitmask");
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn mask(&self, subset: &GroundSet) -> Result<Set, SpaceError> {
        let mut m = 0;
        for l in subset.iter() {
            m |= 1u64 << self.position_of(l)?;
        }
        Ok(m)
    }

    pub fn mask_of(&self, names: &[&str]) -> Result<Set, SpaceError> {
        let mut m = 0;
        for n in names {
            m |= 1u64 << self.position_of(&Label::new(*n)?)?;
        }
        Ok(m)
    }

    pub fn subset(&self, mask: Set) -> GroundSet {
        GroundSet::new(
            self.labels
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, l)| l.clone())
                .collect(),
        )
        .expect("subset of a set")
    }

    pub fn names(&self, mask: Set) -> Vec<&str> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l.as_str())
            .collect()
    }

    /// `{a b c}` rendering of a subset.
    pub fn show(&self, mask: Set) -> String {
        format!("{{{}}}", self.names(mask).join(" "))
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.labels.iter().map(|l| l.as_str()).collect();
        f.write_str(&names.join(" "))
    }
}
