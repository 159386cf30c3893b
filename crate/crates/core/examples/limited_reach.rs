//! A per-route cost limit (for example an optical reach) under the base
//! relation, checked against the oracle. The prime relation refuses limits.
//!
//! ```bash
//! cargo run --example limited_reach
//! ```

use ddpp::oracle::{oracle_solve, OracleOptions};
use ddpp::{lobe_network, solve, Demand, SearchOptions};

fn main() -> anyhow::Result<()> {
    let net = lobe_network(3, 2)?;
    let demand = Demand::new("ns", "nx", 1);

    println!("{:>3} {:>8} {:>8}  routes", "K", "search", "oracle");
    for k in 0..=15 {
        let sol = solve(&net, &demand, &SearchOptions::base().with_max_route_cost(k))?;
        let oracle = oracle_solve(
            &net,
            &demand,
            &OracleOptions::default().with_max_route_cost(Some(k)),
        )?;
        assert_eq!(sol.cost(), oracle.min_cost());
        let fmt = |c: Option<u64>| c.map_or("-".to_owned(), |c| c.to_string());
        let routes = sol.routing.as_ref().map_or(String::new(), |r| {
            format!("{} + {}", r.working.cost, r.protecting.cost)
        });
        println!(
            "{k:>3} {:>8} {:>8}  {routes}",
            fmt(sol.cost()),
            fmt(oracle.min_cost())
        );
    }

    let refused = solve(
        &net,
        &demand,
        &SearchOptions::prime().with_max_route_cost(5),
    );
    println!("prime with a limit: {}", refused.unwrap_err());
    Ok(())
}
