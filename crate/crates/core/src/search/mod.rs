//! Generic Dijkstra over pairs of route ends.
//!
//! A search vertex is an unordered pair of network nodes where the two
//! partial routes currently end; the search starts at `(src, src)` and is
//! done when a label at `(dst, dst)` is popped. Labels are popped in order
//! of label cost, and each vertex keeps only labels that no other label at
//! the same vertex dominates. Dominated labels stay in the queue and are
//! skipped when popped.

mod efficient;
mod solution;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::network::{Demand, Network, NetworkError, Request};
use crate::spectrum::{CostModel, Label, LabelId, Relation, Side, Vertex, VertexKind};

pub use efficient::{EfficientSet, Insertion};
pub use solution::{
    Route, RouteDocument, Routing, SearchStats, Solution, SolutionDocument, Status,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub relation: Relation,
    /// Per-route cost limit. Only exact under [`Relation::Base`].
    #[serde(default)]
    pub max_route_cost: Option<u64>,
    #[serde(default)]
    pub cost_model: CostModel,
    /// Keep popping after the first destination label, so the destination
    /// vertex ends up holding every efficient label.
    #[serde(default)]
    pub enumerate_all: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self::new(Relation::Prime)
    }
}

impl SearchOptions {
    pub fn new(relation: Relation) -> Self {
        Self {
            relation,
            max_route_cost: None,
            cost_model: CostModel::Additive,
            enumerate_all: false,
        }
    }

    pub fn base() -> Self {
        Self::new(Relation::Base)
    }

    pub fn prime() -> Self {
        Self::new(Relation::Prime)
    }

    pub fn with_max_route_cost(mut self, limit: u64) -> Self {
        self.max_route_cost = Some(limit);
        self
    }

    pub fn with_cost_model(mut self, model: CostModel) -> Self {
        self.cost_model = model;
        self
    }

    pub fn enumerate_all(mut self, on: bool) -> Self {
        self.enumerate_all = on;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.relation == Relation::Prime {
            if self.max_route_cost.is_some() {
                return Err(SearchError::Options(
                    "a route cost limit needs the base relation; the prime relation is not exact under a limit".into(),
                ));
            }
            if !self.cost_model.is_additive() {
                return Err(SearchError::Options(
                    "the modulation cost model needs the base relation; label cost is not monotone under prime".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("inconsistent search options: {0}")]
    Options(String),
    #[error("malformed label chain: {0}")]
    Reconstruct(String),
}

/// Finds a minimal-cost pair of link-disjoint routes for `demand`.
pub fn solve(
    net: &Network,
    demand: &Demand,
    opts: &SearchOptions,
) -> Result<Solution, SearchError> {
    solve_observed(net, demand, opts, |_, _| {})
}

/// [`solve`], calling `on_settle(label_cost, vertex)` for every label taken
/// off the queue that was still efficient.
pub fn solve_observed(
    net: &Network,
    demand: &Demand,
    opts: &SearchOptions,
    on_settle: impl FnMut(u64, Vertex),
) -> Result<Solution, SearchError> {
    opts.validate()?;
    let req = demand.resolve(net)?;
    Search::new(net, req, opts).run(on_settle)
}

/// Queue order: cost, then vertex, then the low units of both traits, then
/// generation order (the arena index).
type QueueKey = Reverse<(u64, Vertex, (u32, u32), LabelId)>;

struct Search<'a> {
    net: &'a Network,
    req: Request,
    opts: &'a SearchOptions,
    arena: Vec<Label>,
    alive: Vec<bool>,
    sets: HashMap<Vertex, EfficientSet>,
    queue: BinaryHeap<QueueKey>,
    stats: SearchStats,
}

impl<'a> Search<'a> {
    fn new(net: &'a Network, req: Request, opts: &'a SearchOptions) -> Self {
        Self {
            net,
            req,
            opts,
            arena: Vec::new(),
            alive: Vec::new(),
            sets: HashMap::new(),
            queue: BinaryHeap::new(),
            stats: SearchStats::default(),
        }
    }

    fn run(mut self, mut on_settle: impl FnMut(u64, Vertex)) -> Result<Solution, SearchError> {
        let started = Instant::now();
        let target = Vertex::new(self.req.dst, self.req.dst);
        let root = Label::root(
            self.req.src,
            self.net.link_count(),
            self.net.units(),
            &self.opts.cost_model,
        );
        self.stats.labels_generated += 1;
        self.offer(root);

        let mut best: Option<LabelId> = None;
        while let Some(Reverse((cost, vertex, _, id))) = self.queue.pop() {
            self.stats.queue_pops += 1;
            if !self.alive[id.0] {
                continue;
            }
            self.stats.labels_settled += 1;
            on_settle(cost, vertex);
            if vertex == target {
                // routes ending at the destination never improve by growing
                best.get_or_insert(id);
                if self.opts.enumerate_all {
                    continue;
                }
                break;
            }
            for cand in self.expand(id) {
                self.stats.labels_generated += 1;
                self.offer(cand);
            }
        }

        self.stats.labels_at_destination = self.sets.get(&target).map_or(0, |s| s.len() as u64);
        let routing = best.map(|id| self.reconstruct(id)).transpose()?;
        self.stats.wall_time = started.elapsed();
        Ok(Solution {
            routing,
            stats: self.stats,
        })
    }

    /// Candidate labels from both route ends, skipping used links and
    /// routes over the cost limit. At a same-node vertex only slot `a` is
    /// grown: both routes must leave the node eventually, and either may
    /// go first.
    fn expand(&self, id: LabelId) -> Vec<Label> {
        let label = &self.arena[id.0];
        let sides: &[Side] = match label.vertex.kind() {
            VertexKind::Same => &[Side::A],
            VertexKind::Distinct => &[Side::A, Side::B],
        };
        let mut out = Vec::new();
        for &side in sides {
            let node = label.vertex.node(side);
            for &link in self.net.incident(node) {
                if label.used.contains(link.index()) {
                    continue;
                }
                let grown = label
                    .extend(
                        id,
                        self.net.link(link),
                        side,
                        self.req.units,
                        &self.opts.cost_model,
                    )
                    .expect("unused incident link");
                out.extend(grown.into_iter().filter(|l| self.within_limit(l)));
            }
        }
        out
    }

    fn within_limit(&self, label: &Label) -> bool {
        self.opts
            .max_route_cost
            .is_none_or(|k| label.traits.iter().all(|t| t.cost <= k))
    }

    fn offer(&mut self, label: Label) {
        let id = LabelId(self.arena.len());
        let vertex = label.vertex;
        let set = self
            .sets
            .entry(vertex)
            .or_insert_with(|| EfficientSet::new(vertex.kind()));
        match set.insert(id, label.traits, self.opts.relation) {
            Insertion::Rejected => {
                self.stats.labels_dominated += 1;
                // still recorded so arena ids equal generation order
                self.arena.push(label);
                self.alive.push(false);
            }
            Insertion::Accepted { evicted } => {
                self.stats.max_labels_per_vertex =
                    self.stats.max_labels_per_vertex.max(set.len() as u64);
                for old in evicted {
                    self.alive[old.0] = false;
                    self.stats.labels_dominated += 1;
                }
                let key = (
                    label.cost(),
                    vertex,
                    (label.traits[0].ri.lo(), label.traits[1].ri.lo()),
                    id,
                );
                self.arena.push(label);
                self.alive.push(true);
                self.queue.push(Reverse(key));
            }
        }
    }

    fn reconstruct(&self, id: LabelId) -> Result<Routing, SearchError> {
        reconstruct(self.net, self.req, &self.arena, id)
    }
}

/// Splits the parent chain of a destination label into its two routes.
/// The cheaper route is the working one.
pub fn reconstruct(
    net: &Network,
    req: Request,
    arena: &[Label],
    id: LabelId,
) -> Result<Routing, SearchError> {
    let last = arena
        .get(id.0)
        .ok_or_else(|| SearchError::Reconstruct(format!("no label {}", id.0)))?;
    let mut links: [Vec<_>; 2] = [Vec::new(), Vec::new()];
    let mut at = Some(id);
    while let Some(cur) = at {
        let label = &arena[cur.0];
        if let Some(link) = label.appended {
            links[label.appended_route as usize].push(link);
        }
        at = label.parent;
    }
    let mut routes = Vec::with_capacity(2);
    for (r, mut seq) in links.into_iter().enumerate() {
        if seq.is_empty() {
            return Err(SearchError::Reconstruct(format!("route {r} is empty")));
        }
        seq.reverse();
        let mut nodes = vec![req.src];
        let mut length = 0;
        for &l in &seq {
            let link = net.link(l);
            let here = *nodes.last().expect("non-empty");
            let next = link.other_end(here).ok_or_else(|| {
                SearchError::Reconstruct(format!("link {l} does not continue route {r}"))
            })?;
            nodes.push(next);
            length += link.cost;
        }
        if nodes.last() != Some(&req.dst) {
            return Err(SearchError::Reconstruct(format!(
                "route {r} does not reach the destination"
            )));
        }
        let slot = last
            .routes
            .iter()
            .position(|&x| x as usize == r)
            .expect("both routes present");
        let trait_ = last.traits[slot];
        let slots = trait_
            .ri
            .first_fit(req.units)
            .ok_or_else(|| SearchError::Reconstruct(format!("route {r} interval too narrow")))?;
        routes.push(Route {
            nodes,
            links: seq,
            length,
            cost: trait_.cost,
            slots,
            free: trait_.ri,
        });
    }
    let protecting = routes.pop().expect("two routes");
    let working = routes.pop().expect("two routes");
    let (working, protecting) = if protecting.cost < working.cost {
        (protecting, working)
    } else {
        (working, protecting)
    };
    Ok(Routing {
        cost: last.cost(),
        working,
        protecting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::lobe_network;
    use crate::network::{LinkId, NetworkBuilder, NodeId};
    use crate::spectrum::UnitInterval;

    fn triangle(ac: &[(u32, u32)]) -> Network {
        NetworkBuilder::new(8)
            .nodes(["a", "b", "c"])
            .link("a", "b", 1, &[(0, 8)])
            .link("b", "c", 1, &[(0, 8)])
            .link("a", "c", 5, ac)
            .build()
            .unwrap()
    }

    #[test]
    fn triangle_routes() {
        let net = triangle(&[(0, 4)]);
        for opts in [SearchOptions::base(), SearchOptions::prime()] {
            let sol = solve(&net, &Demand::new("a", "c", 2), &opts).unwrap();
            let r = sol.routing.expect("routed");
            assert_eq!(r.cost, 7);
            assert_eq!(r.working.nodes, vec![NodeId(0), NodeId(1), NodeId(2)]);
            assert_eq!(r.working.slots, UnitInterval::of(0, 2));
            assert_eq!(r.protecting.nodes, vec![NodeId(0), NodeId(2)]);
            assert_eq!(r.protecting.links, vec![LinkId(2)]);
            assert_eq!(r.protecting.slots, UnitInterval::of(0, 2));
        }
    }

    #[test]
    fn triangle_without_spectrum_is_blocked() {
        let net = triangle(&[]);
        let sol = solve(&net, &Demand::new("a", "c", 2), &SearchOptions::prime()).unwrap();
        assert_eq!(sol.status(), Status::Blocked);
    }

    #[test]
    fn single_link_is_blocked() {
        let net = NetworkBuilder::new(4)
            .nodes(["a", "b"])
            .link("a", "b", 3, &[(0, 4)])
            .build()
            .unwrap();
        let sol = solve(&net, &Demand::new("a", "b", 1), &SearchOptions::base()).unwrap();
        assert_eq!(sol.status(), Status::Blocked);
        assert!(sol.stats.labels_settled <= sol.stats.labels_generated);
    }

    #[test]
    fn lobe_two_costs_seven() {
        let net = lobe_network(2, 1).unwrap();
        for opts in [SearchOptions::base(), SearchOptions::prime()] {
            let sol = solve(&net, &Demand::new("ns", "nx", 1), &opts).unwrap();
            let r = sol.routing.unwrap();
            assert_eq!(r.cost, 7);
            assert_eq!(r.working.cost + r.protecting.cost, 7);
            let mut all: Vec<_> = r
                .working
                .links
                .iter()
                .chain(&r.protecting.links)
                .copied()
                .collect();
            all.sort();
            assert_eq!(all, (0..6).map(LinkId).collect::<Vec<_>>());
        }
    }

    #[test]
    fn root_expansion_collapses_symmetry() {
        let net = NetworkBuilder::new(4)
            .nodes(["s", "p", "q"])
            .link("s", "p", 1, &[(0, 4)])
            .link("s", "q", 1, &[(0, 4)])
            .build()
            .unwrap();
        let opts = SearchOptions::prime();
        let req = Demand::new("s", "q", 1).resolve(&net).unwrap();
        let mut search = Search::new(&net, req, &opts);
        search.offer(Label::root(req.src, 2, 4, &opts.cost_model));
        let out = search.expand(LabelId(0));
        assert_eq!(out.len(), 2);
        let vertices: Vec<_> = out.iter().map(|l| l.vertex).collect();
        assert_eq!(
            vertices,
            vec![
                Vertex::new(NodeId(0), NodeId(1)),
                Vertex::new(NodeId(0), NodeId(2))
            ]
        );
    }

    #[test]
    fn limit_drops_expensive_candidates() {
        let net = NetworkBuilder::new(4)
            .nodes(["s", "t"])
            .link("s", "t", 11, &[(0, 4)])
            .build()
            .unwrap();
        let opts = SearchOptions::base().with_max_route_cost(10);
        let req = Demand::new("s", "t", 1).resolve(&net).unwrap();
        let mut search = Search::new(&net, req, &opts);
        search.offer(Label::root(req.src, 1, 4, &opts.cost_model));
        assert!(search.expand(LabelId(0)).is_empty());
        let loose = SearchOptions::base().with_max_route_cost(11);
        let mut search = Search::new(&net, req, &loose);
        search.offer(Label::root(req.src, 1, 4, &loose.cost_model));
        assert_eq!(search.expand(LabelId(0)).len(), 1);
    }

    #[test]
    fn exhausted_label_expands_to_nothing() {
        let net = NetworkBuilder::new(2)
            .nodes(["s", "t"])
            .link("s", "t", 1, &[(0, 2)])
            .build()
            .unwrap();
        let opts = SearchOptions::base();
        let req = Demand::new("s", "t", 1).resolve(&net).unwrap();
        let mut search = Search::new(&net, req, &opts);
        search.offer(Label::root(req.src, 1, 2, &opts.cost_model));
        let child = search.expand(LabelId(0)).remove(0);
        search.offer(child);
        assert!(search.expand(LabelId(1)).is_empty());
    }

    #[test]
    fn reconstruct_refuses_root() {
        let net = lobe_network(1, 1).unwrap();
        let req = Demand::new("ns", "nx", 1).resolve(&net).unwrap();
        let arena = vec![Label::root(
            req.src,
            net.link_count(),
            1,
            &CostModel::Additive,
        )];
        assert!(matches!(
            reconstruct(&net, req, &arena, LabelId(0)),
            Err(SearchError::Reconstruct(_))
        ));
    }

    #[test]
    fn option_validation() {
        assert!(SearchOptions::prime()
            .with_max_route_cost(5)
            .validate()
            .is_err());
        assert!(SearchOptions::base()
            .with_max_route_cost(5)
            .validate()
            .is_ok());
        let net = lobe_network(1, 1).unwrap();
        let err = solve(&net, &Demand::new("ns", "ns", 1), &SearchOptions::prime());
        assert!(matches!(err, Err(SearchError::Network(_))));
        let err = solve(&net, &Demand::new("ns", "nx", 2), &SearchOptions::prime());
        assert!(matches!(err, Err(SearchError::Network(_))));
    }
}
