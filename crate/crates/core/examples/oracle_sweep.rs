//! Sweeps random instances and checks the search against the brute-force
//! oracle in both relations. Prints a summary and the first disagreement.
//!
//! ```bash
//! cargo run --release --example oracle_sweep -- 2000
//! ```

use ddpp::compare::compare;
use ddpp::oracle::{budget_from_env, OracleError};
use ddpp::{random_network, Demand, RandomNetworkParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let count: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1000);
    let budget = budget_from_env();
    let (mut checked, mut routed, mut skipped, mut mismatches) = (0, 0, 0, 0);
    for seed in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nodes = rng.random_range(3..=9usize);
        let params = RandomNetworkParams {
            nodes,
            avg_degree: f64::min(rng.random_range(2.0..4.0), (nodes - 1) as f64),
            units: rng.random_range(1..=6),
            fill: [0.4, 0.6, 0.8, 1.0][rng.random_range(0..4)],
            seed,
        };
        let net = random_network(&params)?;
        let src = rng.random_range(0..nodes);
        let dst = (src + rng.random_range(1..nodes)) % nodes;
        let units = rng.random_range(1..=params.units.min(3));
        let demand = Demand::new(net.nodes()[src].clone(), net.nodes()[dst].clone(), units);
        let cmp = match compare(&net, &demand, None, budget) {
            Ok(c) => c,
            Err(ddpp::compare::CompareError::Oracle(OracleError::BudgetExceeded { .. })) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        checked += 1;
        routed += usize::from(cmp.report.oracle_cost.is_some());
        if !cmp.report.agree {
            mismatches += 1;
            if mismatches == 1 {
                println!("seed {seed}: {}", serde_json::to_string(&cmp.bundle)?);
            }
        }
    }
    println!("checked {checked} ({routed} routed), skipped {skipped} over budget, {mismatches} disagreements");
    Ok(())
}
