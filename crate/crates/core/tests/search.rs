use ddpp::compare::verify_routing;
use ddpp::generate::desk_instance as instance;
use ddpp::oracle::{oracle_solve, route_intervals, OracleError, OracleOptions};
use ddpp::spectrum::{CostModel, ModulationStep, ModulationTable};
use ddpp::{lobe_network, solve, Demand, Relation, SearchOptions};
use proptest::prelude::*;

const BUDGET: u64 = 200_000;

fn oracle_cost(net: &ddpp::Network, demand: &Demand, opts: OracleOptions) -> Option<Option<u64>> {
    match oracle_solve(
        net,
        demand,
        &OracleOptions {
            budget: BUDGET,
            ..opts
        },
    ) {
        Ok(r) => Some(r.min_cost()),
        Err(OracleError::BudgetExceeded { .. }) => None,
        Err(e) => panic!("{e}"),
    }
}

fn modulation() -> CostModel {
    let step = |up_to, coefficient| ModulationStep { up_to, coefficient };
    CostModel::Modulation(
        ModulationTable::new(vec![step(Some(60), 1), step(Some(150), 2), step(None, 4)]).unwrap(),
    )
}

#[test]
fn settled_costs_never_decrease() {
    for seed in 0..60 {
        let inst = instance(seed);
        for relation in [Relation::Base, Relation::Prime] {
            let mut last = 0;
            ddpp::search::solve_observed(
                &inst.net,
                &inst.demand,
                &SearchOptions::new(relation),
                |cost, _| {
                    assert!(cost >= last, "seed {seed}: settled {cost} after {last}");
                    last = cost;
                },
            )
            .unwrap();
        }
    }
}

#[test]
fn all_efficient_keeps_the_optimum() {
    for seed in 0..60 {
        let inst = instance(seed);
        for relation in [Relation::Base, Relation::Prime] {
            let first = solve(&inst.net, &inst.demand, &SearchOptions::new(relation)).unwrap();
            let all = solve(
                &inst.net,
                &inst.demand,
                &SearchOptions::new(relation).enumerate_all(true),
            )
            .unwrap();
            assert_eq!(first.cost(), all.cost(), "seed {seed}");
            assert!(all.stats.labels_at_destination >= first.stats.labels_at_destination);
        }
    }
}

#[test]
fn lobe_destination_counts() {
    for m in 1..=8 {
        let net = lobe_network(m, 1).unwrap();
        let d = Demand::new("ns", "nx", 1);
        let base = solve(&net, &d, &SearchOptions::base().enumerate_all(true)).unwrap();
        let prime = solve(&net, &d, &SearchOptions::prime().enumerate_all(true)).unwrap();
        assert_eq!(base.stats.labels_at_destination, 1 << m);
        assert_eq!(prime.stats.labels_at_destination, 1);
        assert_eq!(base.cost(), Some((1 << (m + 1)) - 1));
        assert_eq!(prime.cost(), base.cost());
    }
}

#[test]
fn modulation_base_matches_oracle() {
    let model = modulation();
    let mut routed = 0;
    for seed in 0..120 {
        let inst = instance(seed);
        let opts = OracleOptions {
            cost_model: model.clone(),
            ..Default::default()
        };
        let Some(expected) = oracle_cost(&inst.net, &inst.demand, opts) else {
            continue;
        };
        let sol = solve(
            &inst.net,
            &inst.demand,
            &SearchOptions::base().with_cost_model(model.clone()),
        )
        .unwrap();
        assert_eq!(sol.cost(), expected, "seed {seed}");
        routed += usize::from(expected.is_some());
    }
    assert!(routed > 20);
}

#[test]
fn modulation_with_prime_is_refused() {
    let inst = instance(0);
    assert!(solve(
        &inst.net,
        &inst.demand,
        &SearchOptions::prime().with_cost_model(modulation())
    )
    .is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn both_relations_match_the_oracle(seed in any::<u64>()) {
        let inst = instance(seed);
        if let Some(expected) = oracle_cost(&inst.net, &inst.demand, OracleOptions::default()) {
            let req = inst.demand.resolve(&inst.net).unwrap();
            for relation in [Relation::Base, Relation::Prime] {
                let sol = solve(&inst.net, &inst.demand, &SearchOptions::new(relation)).unwrap();
                prop_assert_eq!(sol.cost(), expected);
                if let Some(r) = &sol.routing {
                    prop_assert_eq!(verify_routing(&inst.net, req, r, None), Vec::<String>::new());
                }
            }
        }
    }

    #[test]
    fn limited_base_matches_the_limited_oracle(seed in any::<u64>(), k in 0u64..300) {
        let inst = instance(seed);
        let opts = OracleOptions::default().with_max_route_cost(Some(k));
        if let Some(expected) = oracle_cost(&inst.net, &inst.demand, opts) {
            let sol = solve(&inst.net, &inst.demand, &SearchOptions::base().with_max_route_cost(k)).unwrap();
            prop_assert_eq!(sol.cost(), expected);
            if let Some(r) = &sol.routing {
                prop_assert!(r.working.cost <= k && r.protecting.cost <= k);
            }
        }
    }

    #[test]
    fn loosening_the_limit_never_hurts(seed in any::<u64>(), k in 0u64..300, extra in 0u64..100) {
        let inst = instance(seed);
        let at = |opts: SearchOptions| solve(&inst.net, &inst.demand, &opts).unwrap().cost();
        let tight = at(SearchOptions::base().with_max_route_cost(k));
        let loose = at(SearchOptions::base().with_max_route_cost(k + extra));
        let free = at(SearchOptions::base());
        if let Some(t) = tight {
            prop_assert!(loose.is_some_and(|l| l <= t));
        }
        if let Some(l) = loose {
            prop_assert!(free.is_some_and(|f| f <= l));
        }
    }

    #[test]
    fn reversing_a_route_keeps_its_intervals(seed in any::<u64>(), units in 1u32..=3) {
        let inst = instance(seed);
        let demand = Demand { units, ..inst.demand.clone() };
        if let Ok(Some(best)) = oracle_solve(&inst.net, &demand, &OracleOptions { budget: BUDGET, ..Default::default() }).map(|r| r.best) {
            for route in [best.route_a, best.route_b] {
                let forward = route_intervals(&inst.net, &route, units).unwrap();
                let reversed: Vec<_> = route.iter().rev().copied().collect();
                prop_assert_eq!(route_intervals(&inst.net, &reversed, units).unwrap(), forward);
            }
        }
    }
}
