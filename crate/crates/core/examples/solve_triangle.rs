//! Smallest protected connection: a triangle with one fragmented link.
//!
//! ```bash
//! cargo run --example solve_triangle
//! ```

use ddpp::{solve, Demand, NetworkBuilder, SearchOptions};

fn main() -> anyhow::Result<()> {
    let net = NetworkBuilder::new(8)
        .nodes(["a", "b", "c"])
        .link("a", "b", 3, &[(0, 8)])
        .link("b", "c", 2, &[(0, 3), (5, 8)])
        .link("a", "c", 10, &[(2, 8)])
        .build()?;
    let demand = Demand::new("a", "c", 3);

    let sol = solve(&net, &demand, &SearchOptions::prime())?;
    let Some(r) = &sol.routing else {
        println!("blocked");
        return Ok(());
    };
    println!("total cost {}", r.cost);
    for (name, route) in [("working", &r.working), ("protecting", &r.protecting)] {
        let path: Vec<&str> = route.nodes.iter().map(|&n| net.node_name(n)).collect();
        println!(
            "{name:>10}: {} cost {} units {}..{}",
            path.join(" -> "),
            route.cost,
            route.slots.lo(),
            route.slots.hi()
        );
    }
    println!(
        "{} labels generated, {} settled",
        sol.stats.labels_generated, sol.stats.labels_settled
    );
    Ok(())
}
