//! Poisson traffic on a random network: blocking probability and search
//! effort under both relations.
//!
//! ```bash
//! cargo run --release --example dynamic_traffic -- 2000
//! ```

use ddpp::sim::{self, gen_traffic, TrafficParams};
use ddpp::{random_network, RandomNetworkParams, Relation, SearchOptions};

fn main() -> anyhow::Result<()> {
    let count: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1000);
    let net = random_network(&RandomNetworkParams {
        nodes: 12,
        avg_degree: 3.0,
        units: 16,
        fill: 1.0,
        seed: 7,
    })?;
    println!(
        "{} nodes, {} links, {} units",
        net.node_count(),
        net.link_count(),
        net.units()
    );

    for mean_hold in [2.0, 8.0, 32.0] {
        let params = TrafficParams {
            count,
            mean_hold,
            mean_gap: 1.0,
            units_range: (1, 4),
            seed: 1,
        };
        let events = gen_traffic(&net, &params)?;
        for relation in [Relation::Base, Relation::Prime] {
            let run = sim::run(&net, &events, &SearchOptions::new(relation))?;
            let r = &run.report;
            println!(
                "load {mean_hold:>4}  {relation:<5?}  blocked {:>5.3}  labels mean {:>8.1} max {:>6}  {:.1}us/request",
                r.blocking_probability,
                r.mean_labels_generated,
                r.max_labels_generated,
                run.timing.mean_wall_time * 1e6
            );
        }
    }
    Ok(())
}
