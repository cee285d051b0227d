//! Red/blue endpoint classifications and their canonical form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, StabError};
use crate::geom::{End, EndpointId};

/// Red endpoints lie inside the stabbing region, blue ones outside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A partial assignment of colors to endpoints. Both endpoints of a segment,
/// when assigned, always carry opposite colors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Classification {
    colors: BTreeMap<EndpointId, Color>,
}

impl Classification {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assigns `color` to `id`, rejecting assignments that contradict an
    /// earlier one on the same endpoint or its partner.
    pub fn assign(&mut self, id: EndpointId, color: Color) -> Result<()> {
        match self.colors.get(&id) {
            Some(&c) if c != color => return Err(StabError::DoubleAssignmentConflict(id)),
            _ => {}
        }
        if self.colors.get(&id.partner()) == Some(&color) {
            return Err(StabError::InconsistentClassification(id.seg));
        }
        self.colors.insert(id, color);
        Ok(())
    }

    /// Colors `id` and its partner oppositely.
    pub fn assign_segment(&mut self, id: EndpointId, color: Color) -> Result<()> {
        self.assign(id, color)?;
        self.assign(id.partner(), color.opposite())
    }

    pub fn get(&self, id: EndpointId) -> Option<Color> {
        self.colors.get(&id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EndpointId, Color)> + '_ {
        self.colors.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn from_class(class: &StabberClass) -> Self {
        let mut c = Classification::new();
        for &r in class.reds() {
            c.colors.insert(r, Color::Red);
            c.colors.insert(r.partner(), Color::Blue);
        }
        c
    }
}

/// The set of red endpoints of a stabber: exactly one endpoint per segment,
/// sorted by `(seg, end)`. Two stabbers are combinatorially equal iff their
/// classes are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StabberClass {
    reds: Vec<EndpointId>,
}

impl StabberClass {
    /// Builds a class from the red end of each segment, in segment order.
    pub fn from_red_ends(ends: impl IntoIterator<Item = End>) -> Self {
        StabberClass {
            reds: ends
                .into_iter()
                .enumerate()
                .map(|(seg, end)| EndpointId { seg, end })
                .collect(),
        }
    }

    /// Validates and sorts an arbitrary list of red endpoints for `n` segments.
    pub fn from_reds(mut reds: Vec<EndpointId>, n: usize) -> Result<Self> {
        reds.sort();
        for seg in 0..n {
            match reds.get(seg) {
                Some(r) if r.seg == seg => {}
                Some(r) if r.seg < seg => return Err(StabError::InconsistentClassification(r.seg)),
                _ => return Err(StabError::PartialClassification(seg)),
            }
        }
        if reds.len() > n {
            return Err(StabError::InconsistentClassification(reds[n].seg));
        }
        Ok(StabberClass { reds })
    }

    pub fn reds(&self) -> &[EndpointId] {
        &self.reds
    }

    pub fn n(&self) -> usize {
        self.reds.len()
    }

    pub fn red_end(&self, seg: usize) -> End {
        self.reds[seg].end
    }

    pub fn contains(&self, id: EndpointId) -> bool {
        self.reds.get(id.seg).is_some_and(|r| *r == id)
    }
}

/// Canonical form of a total classification.
pub fn canonical_class(c: &Classification, n: usize) -> Result<StabberClass> {
    let mut ends = Vec::with_capacity(n);
    for seg in 0..n {
        let a = c.get(EndpointId::new(seg, End::A));
        let b = c.get(EndpointId::new(seg, End::B));
        match (a, b) {
            (Some(Color::Red), Some(Color::Blue)) => ends.push(End::A),
            (Some(Color::Blue), Some(Color::Red)) => ends.push(End::B),
            (Some(_), Some(_)) => return Err(StabError::InconsistentClassification(seg)),
            _ => return Err(StabError::PartialClassification(seg)),
        }
    }
    if let Some((id, _)) = c.iter().find(|(id, _)| id.seg >= n) {
        return Err(StabError::MalformedSolution(format!("endpoint {id} out of range")));
    }
    Ok(StabberClass::from_red_ends(ends))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(seg: usize, end: End) -> EndpointId {
        EndpointId::new(seg, end)
    }

    #[test]
    fn single_segment() {
        let mut c = Classification::new();
        c.assign_segment(ep(0, End::A), Color::Red).unwrap();
        let k = canonical_class(&c, 1).unwrap();
        assert_eq!(k.reds(), &[ep(0, End::A)]);
    }

    #[test]
    fn sorted_regardless_of_insertion_order() {
        let mut c = Classification::new();
        c.assign_segment(ep(1, End::B), Color::Red).unwrap();
        c.assign_segment(ep(0, End::A), Color::Red).unwrap();
        let k = canonical_class(&c, 2).unwrap();
        assert_eq!(k.reds(), &[ep(0, End::A), ep(1, End::B)]);
        // idempotent through the round trip
        assert_eq!(canonical_class(&Classification::from_class(&k), 2).unwrap(), k);
    }

    #[test]
    fn partial_map_is_rejected() {
        let mut c = Classification::new();
        c.assign_segment(ep(0, End::A), Color::Red).unwrap();
        assert_eq!(
            canonical_class(&c, 2),
            Err(StabError::PartialClassification(1))
        );
    }

    #[test]
    fn conflicting_assignment() {
        let mut c = Classification::new();
        c.assign(ep(0, End::A), Color::Red).unwrap();
        assert_eq!(
            c.assign(ep(0, End::A), Color::Blue),
            Err(StabError::DoubleAssignmentConflict(ep(0, End::A)))
        );
        assert_eq!(
            c.assign(ep(0, End::B), Color::Red),
            Err(StabError::InconsistentClassification(0))
        );
    }

    #[test]
    fn from_reds_validates() {
        assert!(StabberClass::from_reds(vec![ep(1, End::A), ep(0, End::B)], 2).is_ok());
        assert_eq!(
            StabberClass::from_reds(vec![ep(0, End::A)], 2),
            Err(StabError::PartialClassification(1))
        );
        assert!(StabberClass::from_reds(vec![ep(0, End::A), ep(0, End::B)], 1).is_err());
    }
}
