use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::network::{LinkId, Network, NodeId};
use crate::spectrum::UnitInterval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Routed,
    Blocked,
}

/// One of the two routes of a connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    pub nodes: Vec<NodeId>,
    pub links: Vec<LinkId>,
    /// Sum of link costs.
    pub length: u64,
    /// Cost under the active cost model.
    pub cost: u64,
    /// Units the connection occupies on every link of the route.
    pub slots: UnitInterval,
    /// All units free along the route (the final trait's interval).
    pub free: UnitInterval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routing {
    /// Label cost: the sum of both route costs.
    pub cost: u64,
    pub working: Route,
    pub protecting: Route,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub labels_generated: u64,
    pub labels_dominated: u64,
    pub labels_settled: u64,
    pub queue_pops: u64,
    pub max_labels_per_vertex: u64,
    /// Size of the efficient set at the destination vertex when the search
    /// stopped.
    pub labels_at_destination: u64,
    #[serde(with = "seconds")]
    pub wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub routing: Option<Routing>,
    pub stats: SearchStats,
}

impl Solution {
    pub fn status(&self) -> Status {
        if self.routing.is_some() {
            Status::Routed
        } else {
            Status::Blocked
        }
    }

    pub fn cost(&self) -> Option<u64> {
        self.routing.as_ref().map(|r| r.cost)
    }

    pub fn to_document(&self, net: &Network) -> SolutionDocument {
        let route = |r: &Route| RouteDocument {
            nodes: r
                .nodes
                .iter()
                .map(|&n| net.node_name(n).to_owned())
                .collect(),
            links: r.links.iter().map(|l| l.0).collect(),
            cost: r.cost,
            slots: r.slots,
        };
        SolutionDocument {
            status: self.status(),
            cost: self.cost(),
            working: self.routing.as_ref().map(|r| route(&r.working)),
            protecting: self.routing.as_ref().map(|r| route(&r.protecting)),
            stats: self.stats.clone(),
        }
    }
}

/// Wire form of a search result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cost: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub working: Option<RouteDocument>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub protecting: Option<RouteDocument>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteDocument {
    pub nodes: Vec<String>,
    pub links: Vec<u32>,
    pub cost: u64,
    pub slots: UnitInterval,
}

mod seconds {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}
