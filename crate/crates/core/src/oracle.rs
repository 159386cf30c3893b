//! Brute-force reference solver.
//!
//! Enumerates every trail from the source to the destination, keeps those
//! with a wide enough run of units free on all their links, and checks all
//! unordered pairs for link-disjointness. Nothing here depends on the
//! domination relations or on the search.

use std::cmp::Ordering;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::network::{Demand, LinkId, Network, NetworkError, NodeId, Request};
use crate::spectrum::{CostModel, SlotSet, UnitInterval};

/// Default cap on route pairs examined.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "DDPP_ORACLE_BUDGET";

pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("instance too large for exhaustive enumeration: {what} exceeds budget {budget}")]
    BudgetExceeded { what: String, budget: u64 },
    #[error("links {0:?} do not form a connected trail")]
    NotATrail(Vec<LinkId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOptions {
    pub max_route_cost: Option<u64>,
    pub cost_model: CostModel,
    pub budget: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            max_route_cost: None,
            cost_model: CostModel::Additive,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl OracleOptions {
    pub fn with_max_route_cost(mut self, limit: Option<u64>) -> Self {
        self.max_route_cost = limit;
        self
    }
}

/// A feasible pair of link-disjoint trails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoutePair {
    pub route_a: Vec<LinkId>,
    pub route_b: Vec<LinkId>,
    pub cost_a: u64,
    pub cost_b: u64,
    pub intervals_a: Vec<UnitInterval>,
    pub intervals_b: Vec<UnitInterval>,
}

impl RoutePair {
    pub fn cost(&self) -> u64 {
        self.cost_a + self.cost_b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    /// Cheapest pair; ties go to the lexicographically smallest link
    /// sequences. `None` when blocked.
    pub best: Option<RoutePair>,
    /// Unordered feasible disjoint pairs.
    pub pair_count: u64,
    /// Feasible trails from source to destination.
    pub trail_count: u64,
}

impl OracleResult {
    pub fn min_cost(&self) -> Option<u64> {
        self.best.as_ref().map(RoutePair::cost)
    }
}

/// Node sequence of `route`, trying both ends of the first link as the start.
pub fn walk(net: &Network, route: &[LinkId]) -> Option<Vec<NodeId>> {
    let first = net.link(*route.first()?);
    [first.ends.0, first.ends.1]
        .into_iter()
        .find_map(|start| walk_from(net, start, route))
}

pub fn walk_from(net: &Network, start: NodeId, route: &[LinkId]) -> Option<Vec<NodeId>> {
    let mut nodes = vec![start];
    for &l in route {
        let next = net.link(l).other_end(*nodes.last()?)?;
        nodes.push(next);
    }
    Some(nodes)
}

/// Maximal runs of units free on every link of `route` that fit `demand`.
pub fn route_intervals(
    net: &Network,
    route: &[LinkId],
    demand: u32,
) -> Result<Vec<UnitInterval>, OracleError> {
    let mut seen = FixedBitSet::with_capacity(net.link_count());
    let repeats = route.iter().any(|l| seen.put(l.index()));
    if repeats || walk(net, route).is_none() {
        return Err(OracleError::NotATrail(route.to_vec()));
    }
    let free = route.iter().fold(SlotSet::full(net.units()), |acc, &l| {
        acc.intersect(&net.link(l).available)
    });
    Ok(free
        .intervals()
        .iter()
        .copied()
        .filter(|iv| iv.len() >= demand)
        .collect())
}

struct Trail {
    links: Vec<LinkId>,
    used: FixedBitSet,
    cost: u64,
    intervals: Vec<UnitInterval>,
}

pub fn oracle_solve(
    net: &Network,
    demand: &Demand,
    opts: &OracleOptions,
) -> Result<OracleResult, OracleError> {
    let req = demand.resolve(net)?;
    let mut trails = enumerate_trails(net, req, opts)?;
    trails.sort_by(|a, b| a.cost.cmp(&b.cost).then_with(|| a.links.cmp(&b.links)));

    let t = trails.len() as u64;
    let pairs = t * t.saturating_sub(1) / 2;
    if pairs > opts.budget {
        return Err(OracleError::BudgetExceeded {
            what: format!("{pairs} route pairs"),
            budget: opts.budget,
        });
    }

    let mut pair_count = 0;
    let mut best: Option<(u64, &Trail, &Trail)> = None;
    for (i, a) in trails.iter().enumerate() {
        for b in &trails[i + 1..] {
            if !a.used.is_disjoint(&b.used) {
                continue;
            }
            pair_count += 1;
            let (lo, hi) = if a.links <= b.links { (a, b) } else { (b, a) };
            let cost = a.cost + b.cost;
            let better = match best {
                None => true,
                Some((c, x, y)) => match cost.cmp(&c) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (&lo.links, &hi.links) < (&x.links, &y.links),
                },
            };
            if better {
                best = Some((cost, lo, hi));
            }
        }
    }

    Ok(OracleResult {
        best: best.map(|(_, a, b)| RoutePair {
            route_a: a.links.clone(),
            route_b: b.links.clone(),
            cost_a: a.cost,
            cost_b: b.cost,
            intervals_a: a.intervals.clone(),
            intervals_b: b.intervals.clone(),
        }),
        pair_count,
        trail_count: t,
    })
}

/// Depth-first enumeration of trails from `src` that end at `dst`,
/// including trails that pass through `dst` earlier. Branches die as soon
/// as no run of `demand` units survives or the route cost passes the limit;
/// neither can recover by growing the trail.
fn enumerate_trails(
    net: &Network,
    req: Request,
    opts: &OracleOptions,
) -> Result<Vec<Trail>, OracleError> {
    struct Frame {
        node: NodeId,
        free: SlotSet,
        length: u64,
    }

    fn fits(free: &SlotSet, units: u32) -> bool {
        free.intervals().iter().any(|iv| iv.len() >= units)
    }

    fn dfs(
        net: &Network,
        req: Request,
        opts: &OracleOptions,
        at: Frame,
        used: &mut FixedBitSet,
        links: &mut Vec<LinkId>,
        out: &mut Vec<Trail>,
    ) -> Result<(), OracleError> {
        if at.node == req.dst && !links.is_empty() {
            if out.len() as u64 >= opts.budget {
                return Err(OracleError::BudgetExceeded {
                    what: "trail count".into(),
                    budget: opts.budget,
                });
            }
            out.push(Trail {
                links: links.clone(),
                used: used.clone(),
                cost: opts.cost_model.trait_cost(at.length),
                intervals: at
                    .free
                    .intervals()
                    .iter()
                    .copied()
                    .filter(|iv| iv.len() >= req.units)
                    .collect(),
            });
        }
        for &l in net.incident(at.node) {
            if used.contains(l.index()) {
                continue;
            }
            let link = net.link(l);
            let free = at.free.intersect(&link.available);
            let length = at.length + link.cost;
            if !fits(&free, req.units) {
                continue;
            }
            if opts
                .max_route_cost
                .is_some_and(|k| opts.cost_model.trait_cost(length) > k)
            {
                continue;
            }
            let node = link.other_end(at.node).expect("incident");
            used.insert(l.index());
            links.push(l);
            dfs(
                net,
                req,
                opts,
                Frame { node, free, length },
                used,
                links,
                out,
            )?;
            links.pop();
            used.set(l.index(), false);
        }
        Ok(())
    }

    let mut out = Vec::new();
    let mut used = FixedBitSet::with_capacity(net.link_count());
    let start = Frame {
        node: req.src,
        free: SlotSet::full(net.units()),
        length: 0,
    };
    dfs(net, req, opts, start, &mut used, &mut Vec::new(), &mut out)?;
    Ok(out)
}
