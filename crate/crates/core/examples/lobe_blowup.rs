//! The lobe network keeps 2^m efficient labels at the destination under the
//! base relation and a single one under the prime relation.
//!
//! ```bash
//! cargo run --release --example lobe_blowup -- 14
//! ```

use ddpp::bench::lobe_row;
use ddpp::Relation;

fn main() -> anyhow::Result<()> {
    let m_max: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(12);
    println!(
        "{:>3} {:>10} {:>10} {:>12} {:>10} {:>10}",
        "m", "cost", "base@dst", "base labels", "base s", "prime s"
    );
    for m in 1..=m_max {
        let base = lobe_row(m, Relation::Base)?;
        let prime = lobe_row(m, Relation::Prime)?;
        assert_eq!(base.cost, prime.cost);
        assert_eq!(prime.labels_at_destination, 1);
        println!(
            "{m:>3} {:>10} {:>10} {:>12} {:>10.4} {:>10.4}",
            base.cost.unwrap_or(0),
            base.labels_at_destination,
            base.labels_generated,
            base.wall_time.as_secs_f64(),
            prime.wall_time.as_secs_f64()
        );
    }
    Ok(())
}
