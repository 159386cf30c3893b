//! Exact dynamic dedicated path protection for elastic optical networks.
//!
//! Given a network whose links carry a cost and a set of free
//! frequency-slot units, [`search::solve`] finds two link-disjoint routes
//! of minimal total cost such that each route has a demanded number of
//! contiguous units free on every one of its links. The search runs a
//! generic (label-setting) Dijkstra over pairs of route ends and prunes
//! with one of two domination relations, see [`spectrum::Relation`].
//!
//! [`oracle`] is an independent brute-force reference, [`generate`] builds
//! the lobe worst case and random instances, and [`sim`] replays dynamic
//! traffic against a mutable spectrum state.

pub mod bench;
pub mod compare;
pub mod generate;
pub mod network;
pub mod oracle;
pub mod search;
pub mod sim;
pub mod spectrum;

pub use generate::{desk_instance, lobe_network, random_network, RandomNetworkParams};
pub use network::{
    load_network, Demand, Link, LinkId, Network, NetworkBuilder, NetworkError, NodeId,
};
pub use search::{solve, SearchError, SearchOptions, Solution, Status};
pub use spectrum::{CostModel, Relation};
