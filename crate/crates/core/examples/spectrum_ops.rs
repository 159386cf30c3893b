//! Spectrum bookkeeping: free-unit sets, first-fit, and how a trait is
//! extended over a fragmented link.
//!
//! ```bash
//! cargo run --example spectrum_ops
//! ```

use ddpp::spectrum::{SlotSet, Trait, UnitInterval};
use ddpp::{CostModel, NetworkBuilder};

fn main() -> anyhow::Result<()> {
    let mut free = SlotSet::full(12);
    free.allocate(UnitInterval::of(3, 5))?;
    free.allocate(UnitInterval::of(8, 9))?;
    println!("free runs: {:?}", free.intervals());
    println!(
        "first fit for 3 units: {:?}",
        free.intervals().iter().find_map(|iv| iv.first_fit(3))
    );

    let net = NetworkBuilder::new(12)
        .nodes(["x", "y"])
        .link(
            "x",
            "y",
            5,
            free.intervals()
                .iter()
                .map(|iv| (iv.lo(), iv.hi()))
                .collect::<Vec<_>>()
                .as_slice(),
        )
        .build()?;
    let start = Trait::origin(12, &CostModel::Additive);
    for demand in 1..=4 {
        let next: Vec<String> = start
            .extend(&net.links()[0], demand, &CostModel::Additive)
            .map(|t| format!("cost {} units {}..{}", t.cost, t.ri.lo(), t.ri.hi()))
            .collect();
        println!("demand {demand}: {next:?}");
    }

    free.release(UnitInterval::of(3, 5))?;
    println!("after release: {:?}", free.intervals());
    assert!(free.release(UnitInterval::of(0, 1)).is_err());
    Ok(())
}
