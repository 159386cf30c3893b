use serde::{Deserialize, Serialize};

use super::{CostModel, UnitInterval};
use crate::network::Link;

/// Summary of one partial route: what it costs and which contiguous units
/// are free on every link of it.
///
/// `length` is the sum of link costs; `cost` is what the cost model makes of
/// that length (equal to `length` for the additive model).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trait {
    pub cost: u64,
    pub length: u64,
    pub ri: UnitInterval,
}

impl Trait {
    /// Trait under the additive model.
    pub fn new(cost: u64, ri: UnitInterval) -> Self {
        Self {
            cost,
            length: cost,
            ri,
        }
    }

    /// Empty route: zero cost, the whole spectrum.
    pub fn origin(units: u32, model: &CostModel) -> Self {
        Self {
            cost: model.trait_cost(0),
            length: 0,
            ri: UnitInterval::of(0, units),
        }
    }

    /// `self ⪯ other`: no more expensive and at least the same units.
    pub fn leq(&self, other: &Trait) -> bool {
        self.cost <= other.cost && self.ri.contains(&other.ri)
    }

    /// `self ⊕ link`: one candidate per maximal run of `ri ∩ available`
    /// that still fits `demand` units.
    pub fn extend<'a>(
        &'a self,
        link: &'a Link,
        demand: u32,
        model: &'a CostModel,
    ) -> impl Iterator<Item = Trait> + 'a {
        let length = self.length + link.cost;
        let cost = model.trait_cost(length);
        link.available
            .clip(&self.ri)
            .filter(move |iv| iv.len() >= demand)
            .map(move |ri| Trait { cost, length, ri })
    }
}
