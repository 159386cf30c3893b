use fixedbitset::FixedBitSet;
use thiserror::Error;

use super::relation::{self, Relation, TraitPair, VertexKind};
use super::{CostModel, Trait};
use crate::network::{Link, LinkId, NodeId};

/// Unordered pair of route end nodes, stored with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    a: NodeId,
    b: NodeId,
}

impl Vertex {
    pub fn new(x: NodeId, y: NodeId) -> Self {
        if x <= y {
            Self { a: x, b: y }
        } else {
            Self { a: y, b: x }
        }
    }

    pub fn a(&self) -> NodeId {
        self.a
    }

    pub fn b(&self) -> NodeId {
        self.b
    }

    pub fn node(&self, side: Side) -> NodeId {
        match side {
            Side::A => self.a,
            Side::B => self.b,
        }
    }

    pub fn kind(&self) -> VertexKind {
        if self.a == self.b {
            VertexKind::Same
        } else {
            VertexKind::Distinct
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }
}

/// Position of a label in the search arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("link {0} is already used by this label")]
    LinkUsed(LinkId),
    #[error("link {0} does not touch the route end")]
    NotIncident(LinkId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("labels sit at different vertices")]
pub struct VertexMismatch;

/// A pair of partial routes from the source, with search bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Label {
    /// `traits[0]` belongs to the route ending at `vertex.a()`.
    pub traits: TraitPair,
    pub vertex: Vertex,
    pub parent: Option<LabelId>,
    pub appended: Option<LinkId>,
    /// Physical route that received `appended`.
    pub appended_route: u8,
    pub used: FixedBitSet,
    /// Which physical route (0 or 1) occupies each slot. Canonicalization
    /// can swap slots, so this is needed to split links back into routes.
    pub routes: [u8; 2],
}

impl Label {
    pub fn root(src: NodeId, link_count: usize, units: u32, model: &CostModel) -> Self {
        let origin = Trait::origin(units, model);
        Self {
            traits: [origin, origin],
            vertex: Vertex::new(src, src),
            parent: None,
            appended: None,
            appended_route: 0,
            used: FixedBitSet::with_capacity(link_count),
            routes: [0, 1],
        }
    }

    pub fn cost(&self) -> u64 {
        relation::label_cost(&self.traits)
    }

    /// `self ⊕ e`: appends `link` to the route in `side`, one label per
    /// candidate trait. `id` is this label's own arena position, recorded as
    /// the parent of every result.
    pub fn extend(
        &self,
        id: LabelId,
        link: &Link,
        side: Side,
        demand: u32,
        model: &CostModel,
    ) -> Result<Vec<Label>, ExtendError> {
        if self.used.contains(link.id.index()) {
            return Err(ExtendError::LinkUsed(link.id));
        }
        let s = side.index();
        let here = self.vertex.node(side);
        let next = link
            .other_end(here)
            .ok_or(ExtendError::NotIncident(link.id))?;
        let other = self.vertex.node(if s == 0 { Side::B } else { Side::A });
        // slot order before canonicalization: [extended, other] or [other, extended]
        let (first, second) = if s == 0 { (next, other) } else { (other, next) };
        let swap = first > second;
        let vertex = Vertex::new(first, second);
        let mut used = self.used.clone();
        used.insert(link.id.index());

        Ok(self.traits[s]
            .extend(link, demand, model)
            .map(|t| {
                let mut traits = self.traits;
                traits[s] = t;
                let mut routes = self.routes;
                if swap {
                    traits.swap(0, 1);
                    routes.swap(0, 1);
                }
                Label {
                    traits,
                    vertex,
                    parent: Some(id),
                    appended: Some(link.id),
                    appended_route: self.routes[s],
                    used: used.clone(),
                    routes,
                }
            })
            .collect())
    }

    /// `self` is better than or equal to `other` under `mode`.
    pub fn dominates(&self, mode: Relation, other: &Label) -> Result<bool, VertexMismatch> {
        if self.vertex != other.vertex {
            return Err(VertexMismatch);
        }
        Ok(relation::dominates(
            mode,
            self.vertex.kind(),
            &self.traits,
            &other.traits,
        ))
    }
}
