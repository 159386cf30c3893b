//! Undirected networks with per-link cost and available spectrum.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spectrum::{IntervalError, SlotSet, UnitInterval};

/// Index of a node in [`Network::nodes`]. The index order is the total
/// order used to canonicalize vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinkId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl LinkId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for LinkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("malformed network document: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("unit count must be positive")]
    NoUnits,
    #[error("duplicate node `{0}`")]
    DuplicateNode(String),
    #[error("duplicate link id {0}")]
    DuplicateLink(u32),
    #[error("link ids must be dense 0..{count}; id {id} is out of range")]
    SparseLinkIds { id: u32, count: usize },
    #[error("link {link} names unknown node `{node}`")]
    DanglingEndpoint { link: u32, node: String },
    #[error("link {link} is a self-loop at `{node}`")]
    SelfLoop { link: u32, node: String },
    #[error("link {link}: interval [{lo}, {hi}) exceeds unit count {units}")]
    IntervalOutOfRange {
        link: u32,
        lo: u32,
        hi: u32,
        units: u32,
    },
    #[error("link {link}: {source}")]
    BadInterval { link: u32, source: IntervalError },
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("invalid demand: {0}")]
    Demand(String),
    #[error("invalid generator parameters: {0}")]
    Generator(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub id: LinkId,
    pub ends: (NodeId, NodeId),
    pub cost: u64,
    pub available: SlotSet,
}

impl Link {
    pub fn other_end(&self, node: NodeId) -> Option<NodeId> {
        match self.ends {
            (a, b) if a == node => Some(b),
            (a, b) if b == node => Some(a),
            _ => None,
        }
    }

    pub fn touches(&self, node: NodeId) -> bool {
        self.ends.0 == node || self.ends.1 == node
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    units: u32,
    nodes: Vec<String>,
    links: Vec<Link>,
    index: HashMap<String, NodeId>,
    incidence: Vec<Vec<LinkId>>,
}

/// Wire form of a network.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkDocument {
    pub units: u32,
    pub nodes: Vec<String>,
    pub links: Vec<LinkDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkDocument {
    pub id: u32,
    pub ends: [String; 2],
    pub cost: u64,
    pub available: Vec<[u32; 2]>,
}

pub fn load_network(text: &str) -> Result<Network, NetworkError> {
    let doc: NetworkDocument = serde_json::from_str(text)?;
    Network::from_document(doc)
}

impl Network {
    pub fn from_document(doc: NetworkDocument) -> Result<Self, NetworkError> {
        if doc.units == 0 {
            return Err(NetworkError::NoUnits);
        }
        let mut index = HashMap::with_capacity(doc.nodes.len());
        for (i, name) in doc.nodes.iter().enumerate() {
            if index.insert(name.clone(), NodeId(i as u32)).is_some() {
                return Err(NetworkError::DuplicateNode(name.clone()));
            }
        }
        let count = doc.links.len();
        let mut slots: Vec<Option<Link>> = vec![None; count];
        for ld in doc.links {
            if ld.id as usize >= count {
                return Err(NetworkError::SparseLinkIds { id: ld.id, count });
            }
            let end = |name: &String| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| NetworkError::DanglingEndpoint {
                        link: ld.id,
                        node: name.clone(),
                    })
            };
            let (a, b) = (end(&ld.ends[0])?, end(&ld.ends[1])?);
            if a == b {
                return Err(NetworkError::SelfLoop {
                    link: ld.id,
                    node: ld.ends[0].clone(),
                });
            }
            let mut runs = Vec::with_capacity(ld.available.len());
            for [lo, hi] in ld.available {
                let iv = UnitInterval::new(lo, hi).map_err(|source| NetworkError::BadInterval {
                    link: ld.id,
                    source,
                })?;
                if hi > doc.units {
                    return Err(NetworkError::IntervalOutOfRange {
                        link: ld.id,
                        lo,
                        hi,
                        units: doc.units,
                    });
                }
                runs.push(iv);
            }
            let slot = &mut slots[ld.id as usize];
            if slot.is_some() {
                return Err(NetworkError::DuplicateLink(ld.id));
            }
            *slot = Some(Link {
                id: LinkId(ld.id),
                ends: (a, b),
                cost: ld.cost,
                available: SlotSet::from_intervals(runs),
            });
        }
        // every slot is filled: `count` links with distinct ids below `count`
        let links: Vec<Link> = slots.into_iter().map(|l| l.expect("dense ids")).collect();
        let mut incidence = vec![Vec::new(); doc.nodes.len()];
        for link in &links {
            incidence[link.ends.0.index()].push(link.id);
            incidence[link.ends.1.index()].push(link.id);
        }
        Ok(Self {
            units: doc.units,
            nodes: doc.nodes,
            links,
            index,
            incidence,
        })
    }

    pub fn to_document(&self) -> NetworkDocument {
        NetworkDocument {
            units: self.units,
            nodes: self.nodes.clone(),
            links: self
                .links
                .iter()
                .map(|l| LinkDocument {
                    id: l.id.0,
                    ends: [
                        self.node_name(l.ends.0).to_owned(),
                        self.node_name(l.ends.1).to_owned(),
                    ],
                    cost: l.cost,
                    available: l
                        .available
                        .intervals()
                        .iter()
                        .map(|&iv| iv.into())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("network serializes")
    }

    pub fn units(&self) -> u32 {
        self.units
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn link(&self, id: LinkId) -> &Link {
        &self.links[id.index()]
    }

    pub fn node_id(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    pub fn node_name(&self, id: NodeId) -> &str {
        &self.nodes[id.index()]
    }

    /// Link ids incident to `node`, ascending.
    pub fn incident(&self, node: NodeId) -> &[LinkId] {
        &self.incidence[node.index()]
    }

    /// All links with `node` as an endpoint, ordered by link id.
    pub fn incident_links(&self, node: &str) -> Result<Vec<&Link>, NetworkError> {
        let id = self
            .node_id(node)
            .ok_or_else(|| NetworkError::UnknownNode(node.to_owned()))?;
        Ok(self.incident(id).iter().map(|&l| self.link(l)).collect())
    }

    pub(crate) fn available_mut(&mut self, id: LinkId) -> &mut SlotSet {
        &mut self.links[id.index()].available
    }

    /// True when every node can reach every other node.
    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![NodeId(0)];
        seen[0] = true;
        while let Some(n) = stack.pop() {
            for &l in self.incident(n) {
                let m = self.link(l).other_end(n).expect("incident link");
                if !seen[m.index()] {
                    seen[m.index()] = true;
                    stack.push(m);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Incremental construction for tests, examples and generators.
#[derive(Debug, Clone)]
pub struct NetworkBuilder {
    doc: NetworkDocument,
}

impl NetworkBuilder {
    pub fn new(units: u32) -> Self {
        Self {
            doc: NetworkDocument {
                units,
                nodes: Vec::new(),
                links: Vec::new(),
            },
        }
    }

    pub fn node(mut self, name: impl Into<String>) -> Self {
        self.doc.nodes.push(name.into());
        self
    }

    pub fn nodes<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.doc.nodes.extend(names.into_iter().map(Into::into));
        self
    }

    /// Adds a link with the next free id.
    pub fn link(mut self, a: &str, b: &str, cost: u64, available: &[(u32, u32)]) -> Self {
        let id = self.doc.links.len() as u32;
        self.doc.links.push(LinkDocument {
            id,
            ends: [a.to_owned(), b.to_owned()],
            cost,
            available: available.iter().map(|&(lo, hi)| [lo, hi]).collect(),
        });
        self
    }

    pub fn build(self) -> Result<Network, NetworkError> {
        Network::from_document(self.doc)
    }
}

/// A connection request: `units` contiguous units on each of two routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Demand {
    pub src: String,
    pub dst: String,
    pub units: u32,
}

/// A demand resolved against a particular network.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Request {
    pub src: NodeId,
    pub dst: NodeId,
    pub units: u32,
}

impl Demand {
    pub fn new(src: impl Into<String>, dst: impl Into<String>, units: u32) -> Self {
        Self {
            src: src.into(),
            dst: dst.into(),
            units,
        }
    }

    pub fn resolve(&self, net: &Network) -> Result<Request, NetworkError> {
        let node = |name: &str| {
            net.node_id(name)
                .ok_or_else(|| NetworkError::UnknownNode(name.to_owned()))
        };
        let (src, dst) = (node(&self.src)?, node(&self.dst)?);
        if src == dst {
            return Err(NetworkError::Demand(format!(
                "source and destination are both `{}`",
                self.src
            )));
        }
        if self.units == 0 || self.units > net.units() {
            return Err(NetworkError::Demand(format!(
                "{} units requested, network has {}",
                self.units,
                net.units()
            )));
        }
        Ok(Request {
            src,
            dst,
            units: self.units,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document_loads() {
        let net = load_network(
            r#"{"units":8,"nodes":["a","b"],"links":[{"id":0,"ends":["a","b"],"cost":100,"available":[[0,8]]}]}"#,
        )
        .unwrap();
        assert_eq!(net.link_count(), 1);
        assert_eq!(net.link(LinkId(0)).available, SlotSet::full(8));
    }

    #[test]
    fn interval_beyond_units_is_rejected() {
        let err = load_network(
            r#"{"units":8,"nodes":["a","b"],"links":[{"id":0,"ends":["a","b"],"cost":1,"available":[[6,10]]}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("exceeds unit count"), "{err}");
    }

    #[test]
    fn touching_intervals_are_normalized() {
        let net = load_network(
            r#"{"units":8,"nodes":["a","b"],"links":[{"id":0,"ends":["a","b"],"cost":1,"available":[[0,3],[3,5]]}]}"#,
        )
        .unwrap();
        assert_eq!(
            net.link(LinkId(0)).available.intervals(),
            &[UnitInterval::of(0, 5)]
        );
    }

    #[test]
    fn structural_errors_name_the_element() {
        let dangling = NetworkBuilder::new(4)
            .nodes(["a", "b"])
            .link("a", "z", 1, &[])
            .build();
        assert!(
            matches!(dangling, Err(NetworkError::DanglingEndpoint { link: 0, ref node }) if node == "z")
        );

        let dup = load_network(
            r#"{"units":4,"nodes":["a","b"],"links":[
                {"id":0,"ends":["a","b"],"cost":1,"available":[]},
                {"id":0,"ends":["a","b"],"cost":1,"available":[]}]}"#,
        );
        assert!(matches!(dup, Err(NetworkError::DuplicateLink(0))));

        let sparse = load_network(
            r#"{"units":4,"nodes":["a","b"],"links":[{"id":3,"ends":["a","b"],"cost":1,"available":[]}]}"#,
        );
        assert!(matches!(
            sparse,
            Err(NetworkError::SparseLinkIds { id: 3, .. })
        ));

        let twice = NetworkBuilder::new(4).nodes(["a", "a"]).build();
        assert!(matches!(twice, Err(NetworkError::DuplicateNode(_))));

        assert!(matches!(
            load_network(r#"{"units":4}"#),
            Err(NetworkError::Schema(_))
        ));
    }

    #[test]
    fn parallel_links_are_kept_apart() {
        let net = NetworkBuilder::new(2)
            .nodes(["a", "b"])
            .link("a", "b", 0, &[(0, 2)])
            .link("b", "a", 5, &[(0, 1)])
            .build()
            .unwrap();
        let ids: Vec<_> = net
            .incident_links("a")
            .unwrap()
            .iter()
            .map(|l| l.id)
            .collect();
        assert_eq!(ids, vec![LinkId(0), LinkId(1)]);
    }

    #[test]
    fn incident_links_of_unknown_node() {
        let net = NetworkBuilder::new(1)
            .nodes(["a", "b"])
            .link("a", "b", 1, &[(0, 1)])
            .build()
            .unwrap();
        assert_eq!(net.incident_links("b").unwrap().len(), 1);
        assert!(matches!(
            net.incident_links("q"),
            Err(NetworkError::UnknownNode(_))
        ));
    }

    #[test]
    fn demand_validation() {
        let net = NetworkBuilder::new(4)
            .nodes(["a", "b"])
            .link("a", "b", 1, &[(0, 4)])
            .build()
            .unwrap();
        assert!(Demand::new("a", "b", 4).resolve(&net).is_ok());
        assert!(Demand::new("a", "a", 1).resolve(&net).is_err());
        assert!(Demand::new("a", "b", 5).resolve(&net).is_err());
        assert!(Demand::new("a", "b", 0).resolve(&net).is_err());
        assert!(Demand::new("a", "c", 1).resolve(&net).is_err());
    }
}
