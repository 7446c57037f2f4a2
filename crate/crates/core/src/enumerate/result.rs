use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{TimeWindow, Vertex};

/// A vertex set together with the window on which it is a clique in every
/// layer. Orders by `(a, b, vertices)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TemporalClique {
    pub window: TimeWindow,
    pub vertices: Vec<Vertex>,
}

impl TemporalClique {
    /// Sorts and dedups `vertices`.
    pub fn new(mut vertices: Vec<Vertex>, window: TimeWindow) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        TemporalClique { window, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl fmt::Display for TemporalClique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.vertices, self.window)
    }
}

/// `a ⊂ b` for sorted slices.
pub(crate) fn is_strict_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.len() < b.len() && is_subset(a, b)
}

/// `a ⊆ b` for sorted slices.
pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut rest = b.iter();
    a.iter().all(|x| rest.by_ref().any(|y| y == x))
}

/// Deduplicated temporal cliques in canonical order, indexed by window.
#[derive(Clone, Debug, Default)]
pub struct ResultSet {
    entries: BTreeSet<TemporalClique>,
    by_window: BTreeMap<TimeWindow, Vec<Vec<Vertex>>>,
}

impl PartialEq for ResultSet {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for ResultSet {}

impl ResultSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if the entry was already present.
    pub fn insert(&mut self, clique: TemporalClique) -> bool {
        if self.entries.contains(&clique) {
            return false;
        }
        self.by_window
            .entry(clique.window)
            .or_default()
            .push(clique.vertices.clone());
        self.entries.insert(clique)
    }

    pub fn contains(&self, clique: &TemporalClique) -> bool {
        self.entries.contains(clique)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in `(a, b, vertices)` order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = &TemporalClique> + '_ {
        self.entries.iter()
    }

    /// Vertex sets stored for exactly this window.
    pub fn in_window(&self, w: TimeWindow) -> &[Vec<Vertex>] {
        self.by_window.get(&w).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn windows(&self) -> impl Iterator<Item = TimeWindow> + '_ {
        self.by_window.keys().copied()
    }

    /// Whether some entry on the same window is a strict superset.
    pub fn has_strict_superset(&self, clique: &TemporalClique) -> bool {
        self.in_window(clique.window)
            .iter()
            .any(|other| is_strict_subset(&clique.vertices, other))
    }

    /// Entries of `self` missing from `other`.
    pub fn difference<'a>(&'a self, other: &'a ResultSet) -> impl Iterator<Item = &'a TemporalClique> {
        self.entries.difference(&other.entries)
    }
}

impl FromIterator<TemporalClique> for ResultSet {
    fn from_iter<I: IntoIterator<Item = TemporalClique>>(iter: I) -> Self {
        let mut rs = ResultSet::new();
        rs.extend(iter);
        rs
    }
}

impl Extend<TemporalClique> for ResultSet {
    fn extend<I: IntoIterator<Item = TemporalClique>>(&mut self, iter: I) {
        for c in iter {
            self.insert(c);
        }
    }
}

impl IntoIterator for ResultSet {
    type Item = TemporalClique;
    type IntoIter = std::collections::btree_set::IntoIter<TemporalClique>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

impl<'a> IntoIterator for &'a ResultSet {
    type Item = &'a TemporalClique;
    type IntoIter = std::collections::btree_set::Iter<'a, TemporalClique>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tc(vs: &[Vertex], a: usize, b: usize) -> TemporalClique {
        TemporalClique::new(vs.to_vec(), TimeWindow::new(a, b))
    }

    #[test]
    fn dedups_and_orders() {
        let mut rs = ResultSet::new();
        assert!(rs.insert(tc(&[2, 1], 2, 2)));
        assert!(rs.insert(tc(&[0, 1, 2], 1, 2)));
        assert!(!rs.insert(tc(&[1, 2], 2, 2)));
        assert!(rs.insert(tc(&[0, 1], 1, 2)));
        let order: Vec<_> = rs.iter().cloned().collect();
        assert_eq!(order, vec![tc(&[0, 1], 1, 2), tc(&[0, 1, 2], 1, 2), tc(&[1, 2], 2, 2)]);
        assert_eq!(rs.in_window(TimeWindow::new(1, 2)).len(), 2);
        assert_eq!(rs.in_window(TimeWindow::new(1, 1)).len(), 0);
    }

    #[test]
    fn superset_lookup_needs_same_window() {
        let rs: ResultSet = [tc(&[0, 1, 2], 1, 2)].into_iter().collect();
        assert!(rs.has_strict_superset(&tc(&[1, 2], 1, 2)));
        assert!(!rs.has_strict_superset(&tc(&[0, 1, 2], 1, 2)));
        assert!(!rs.has_strict_superset(&tc(&[1, 2], 2, 2)));
    }

    #[test]
    fn subset_helpers() {
        assert!(is_subset(&[1, 3], &[1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[1, 2, 3]));
        assert!(is_subset(&[], &[1]));
        assert!(!is_strict_subset(&[1, 2], &[1, 2]));
    }
}
