//! Distance-adaptive modulation: route cost is the route length times a
//! coefficient that grows with length, so splitting length evenly between
//! the two routes can pay off.
//!
//! ```bash
//! cargo run --example modulation
//! ```

use ddpp::oracle::{oracle_solve, OracleOptions};
use ddpp::spectrum::{CostModel, ModulationStep, ModulationTable};
use ddpp::{lobe_network, solve, Demand, SearchOptions};

fn main() -> anyhow::Result<()> {
    let table = ModulationTable::new(vec![
        ModulationStep {
            up_to: Some(4),
            coefficient: 1,
        },
        ModulationStep {
            up_to: Some(10),
            coefficient: 2,
        },
        ModulationStep {
            up_to: None,
            coefficient: 4,
        },
    ])?;
    println!("table: {}", serde_json::to_string(&table)?);
    let model = CostModel::Modulation(table);

    let net = lobe_network(3, 1)?;
    let demand = Demand::new("ns", "nx", 1);
    for (name, model) in [("additive", CostModel::Additive), ("modulation", model)] {
        let sol = solve(
            &net,
            &demand,
            &SearchOptions::base().with_cost_model(model.clone()),
        )?;
        let oracle = oracle_solve(
            &net,
            &demand,
            &OracleOptions {
                cost_model: model,
                ..Default::default()
            },
        )?;
        assert_eq!(sol.cost(), oracle.min_cost());
        let r = sol.routing.expect("lobe is always routable");
        println!(
            "{name:>10}: cost {:>3}  lengths {} + {}",
            r.cost, r.working.length, r.protecting.length
        );
    }
    Ok(())
}
