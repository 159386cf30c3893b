//! Network and demand documents: write, reload, solve and emit the
//! solution document.
//!
//! ```bash
//! cargo run --example network_files
//! ```

use ddpp::{load_network, random_network, solve, Demand, RandomNetworkParams, SearchOptions};

fn main() -> anyhow::Result<()> {
    let net = random_network(&RandomNetworkParams {
        nodes: 6,
        avg_degree: 2.5,
        units: 6,
        fill: 0.8,
        seed: 4,
    })?;
    let text = net.to_json();
    println!("{text}");
    let reloaded = load_network(&text)?;
    assert_eq!(reloaded, net);

    let demand: Demand = serde_json::from_str(r#"{"src": "n0", "dst": "n5", "units": 2}"#)?;
    let sol = solve(&reloaded, &demand, &SearchOptions::prime())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&sol.to_document(&reloaded))?
    );

    let bad = r#"{"units": 4, "nodes": ["a", "b"], "links": [{"id": 0, "ends": ["a", "b"], "cost": 1, "available": [[2, 9]]}]}"#;
    println!("rejected: {}", load_network(bad).unwrap_err());
    Ok(())
}
