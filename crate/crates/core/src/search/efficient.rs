use crate::spectrum::relation::{self, Relation, TraitPair, VertexKind};
use crate::spectrum::LabelId;

/// Undominated labels at one vertex.
#[derive(Debug, Clone)]
pub struct EfficientSet {
    kind: VertexKind,
    members: Vec<(LabelId, TraitPair)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insertion {
    /// The candidate joined the set; `evicted` members were dominated by it.
    Accepted { evicted: Vec<LabelId> },
    /// A member is better than or equal to the candidate.
    Rejected,
}

impl EfficientSet {
    pub fn new(kind: VertexKind) -> Self {
        Self {
            kind,
            members: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = LabelId> + '_ {
        self.members.iter().map(|(id, _)| *id)
    }

    pub fn traits(&self) -> impl Iterator<Item = &TraitPair> + '_ {
        self.members.iter().map(|(_, t)| t)
    }

    /// Equivalent labels resolve keep-first: an incumbent equal to the
    /// candidate rejects it.
    pub fn insert(&mut self, id: LabelId, cand: TraitPair, mode: Relation) -> Insertion {
        let kind = self.kind;
        if self
            .members
            .iter()
            .any(|(_, m)| relation::dominates(mode, kind, m, &cand))
        {
            return Insertion::Rejected;
        }
        let mut evicted = Vec::new();
        self.members.retain(|(mid, m)| {
            let beaten = relation::dominates(mode, kind, &cand, m);
            if beaten {
                evicted.push(*mid);
            }
            !beaten
        });
        self.members.push((id, cand));
        Insertion::Accepted { evicted }
    }
}
