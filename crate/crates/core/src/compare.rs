//! Cross-checks the search against the brute-force oracle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::network::{Demand, Network, NetworkDocument, Request};
use crate::oracle::{self, OracleError, OracleOptions, OracleResult};
use crate::search::{self, Routing, SearchError, SearchOptions, Solution, SolutionDocument};
use crate::spectrum::Relation;

#[derive(Debug, Error)]
pub enum CompareError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeOutcome {
    pub relation: Relation,
    pub cost: Option<u64>,
    /// Empty when the returned routes pass every feasibility check.
    pub violations: Vec<String>,
    pub max_labels_per_vertex: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub oracle_cost: Option<u64>,
    pub pair_count: u64,
    pub modes: Vec<ModeOutcome>,
    pub agree: bool,
}

/// Everything needed to replay a disagreement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleBundle {
    pub network: NetworkDocument,
    pub demand: Demand,
    pub max_route_cost: Option<u64>,
    pub oracle: OracleResult,
    pub solutions: Vec<(Relation, SolutionDocument)>,
}

#[derive(Debug, Clone)]
pub struct Comparison {
    pub report: CompareReport,
    pub bundle: Option<CounterexampleBundle>,
}

/// Runs the oracle and the search in both relations (base only when a
/// route cost limit is set).
pub fn compare(
    net: &Network,
    demand: &Demand,
    max_route_cost: Option<u64>,
    budget: u64,
) -> Result<Comparison, CompareError> {
    let req = demand.resolve(net).map_err(SearchError::from)?;
    let oracle_opts = OracleOptions {
        max_route_cost,
        budget,
        ..OracleOptions::default()
    };
    let truth = oracle::oracle_solve(net, demand, &oracle_opts)?;

    let relations: &[Relation] = if max_route_cost.is_some() {
        &[Relation::Base]
    } else {
        &[Relation::Base, Relation::Prime]
    };
    let mut modes = Vec::new();
    let mut solutions: Vec<(Relation, Solution)> = Vec::new();
    for &relation in relations {
        let opts = SearchOptions {
            max_route_cost,
            ..SearchOptions::new(relation)
        };
        let sol = search::solve(net, demand, &opts)?;
        let violations = match &sol.routing {
            Some(r) => verify_routing(net, req, r, max_route_cost),
            None => Vec::new(),
        };
        modes.push(ModeOutcome {
            relation,
            cost: sol.cost(),
            violations,
            max_labels_per_vertex: sol.stats.max_labels_per_vertex,
        });
        solutions.push((relation, sol));
    }

    let agree = modes
        .iter()
        .all(|m| m.cost == truth.min_cost() && m.violations.is_empty());
    let bundle = (!agree).then(|| CounterexampleBundle {
        network: net.to_document(),
        demand: demand.clone(),
        max_route_cost,
        oracle: truth.clone(),
        solutions: solutions
            .iter()
            .map(|(r, s)| (*r, s.to_document(net)))
            .collect(),
    });
    let report = CompareReport {
        oracle_cost: truth.min_cost(),
        pair_count: truth.pair_count,
        modes,
        agree,
    };
    Ok(Comparison { report, bundle })
}

/// Independent feasibility check of a returned routing under the additive
/// model: connected trails from source to destination, link-disjoint, slots
/// of the demanded width free on every link, and costs that add up.
pub fn verify_routing(
    net: &Network,
    req: Request,
    r: &Routing,
    max_route_cost: Option<u64>,
) -> Vec<String> {
    let mut problems = Vec::new();
    let mut total = 0;
    for (name, route) in [("working", &r.working), ("protecting", &r.protecting)] {
        match oracle::walk_from(net, req.src, &route.links) {
            Some(nodes) if nodes.last() == Some(&req.dst) => {
                if nodes != route.nodes {
                    problems.push(format!("{name}: node sequence does not match links"));
                }
            }
            _ => problems.push(format!(
                "{name}: links do not lead from source to destination"
            )),
        }
        let mut ids = route.links.clone();
        ids.sort();
        ids.dedup();
        if ids.len() != route.links.len() {
            problems.push(format!("{name}: repeats a link"));
        }
        if route.slots.len() != req.units {
            problems.push(format!(
                "{name}: slots {} are not {} units wide",
                route.slots, req.units
            ));
        }
        for &l in &route.links {
            if !net.link(l).available.contains_interval(&route.slots) {
                problems.push(format!(
                    "{name}: slots {} not free on link {l}",
                    route.slots
                ));
            }
        }
        let length: u64 = route.links.iter().map(|&l| net.link(l).cost).sum();
        if length != route.length || length != route.cost {
            problems.push(format!(
                "{name}: cost {} does not match link sum {length}",
                route.cost
            ));
        }
        if max_route_cost.is_some_and(|k| length > k) {
            problems.push(format!("{name}: cost {length} over the limit"));
        }
        total += length;
    }
    if r.working
        .links
        .iter()
        .any(|l| r.protecting.links.contains(l))
    {
        problems.push("routes share a link".into());
    }
    if total != r.cost {
        problems.push(format!(
            "total cost {} does not match link sum {total}",
            r.cost
        ));
    }
    problems
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::lobe_network;
    use crate::oracle::DEFAULT_BUDGET;

    #[test]
    fn small_lobes_agree() {
        for m in 1..=6 {
            let net = lobe_network(m, 1).unwrap();
            let cmp = compare(&net, &Demand::new("ns", "nx", 1), None, DEFAULT_BUDGET).unwrap();
            assert!(cmp.report.agree, "m={m}: {:?}", cmp.report);
            assert_eq!(cmp.report.oracle_cost, Some((1 << (m + 1)) - 1));
            assert!(cmp.bundle.is_none());
        }
    }

    #[test]
    fn blocked_on_both_sides() {
        let net = crate::NetworkBuilder::new(2)
            .nodes(["a", "b"])
            .link("a", "b", 1, &[(0, 2)])
            .build()
            .unwrap();
        let cmp = compare(&net, &Demand::new("a", "b", 1), None, DEFAULT_BUDGET).unwrap();
        assert!(cmp.report.agree);
        assert_eq!(cmp.report.oracle_cost, None);
        assert!(cmp.report.modes.iter().all(|m| m.cost.is_none()));
    }

    #[test]
    fn tampered_routing_is_caught() {
        let net = lobe_network(1, 2).unwrap();
        let demand = Demand::new("ns", "nx", 1);
        let req = demand.resolve(&net).unwrap();
        let mut r = search::solve(&net, &demand, &SearchOptions::prime())
            .unwrap()
            .routing
            .unwrap();
        assert!(verify_routing(&net, req, &r, None).is_empty());
        r.protecting.links = r.working.links.clone();
        assert!(!verify_routing(&net, req, &r, None).is_empty());
    }
}
