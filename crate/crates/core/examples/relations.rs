//! How the two relations compare labels at a same-node vertex.
//!
//! ```bash
//! cargo run --example relations
//! ```

use ddpp::spectrum::relation::{dominates, is_sorted, leq_n, leq_x, TraitPair, VertexKind};
use ddpp::spectrum::{Trait, UnitInterval};
use ddpp::Relation;

fn pair(a: (u64, u32, u32), b: (u64, u32, u32)) -> TraitPair {
    [
        Trait::new(a.0, UnitInterval::of(a.1, a.2)),
        Trait::new(b.0, UnitInterval::of(b.1, b.2)),
    ]
}

fn show(name: &str, li: &TraitPair, lj: &TraitPair) {
    let kind = VertexKind::Same;
    println!("{name}");
    println!("  sorted: {} / {}", is_sorted(li), is_sorted(lj));
    println!("  normal {}  cross {}", leq_n(li, lj), leq_x(li, lj));
    for mode in [Relation::Base, Relation::Prime] {
        println!(
            "  {mode:?}: li<=lj {}  lj<=li {}",
            dominates(mode, kind, li, lj),
            dominates(mode, kind, lj, li)
        );
    }
}

fn main() {
    // two lobe routings of equal total cost 7 on a single unit
    show(
        "lobe pair",
        &pair((0, 0, 1), (7, 0, 1)),
        &pair((1, 0, 1), (6, 0, 1)),
    );
    // only the cross comparison sees the domination
    show(
        "crossed",
        &pair((1, 0, 2), (2, 0, 4)),
        &pair((3, 0, 4), (2, 0, 2)),
    );
    // cheaper but with less spectrum: nobody wins
    show(
        "trade-off",
        &pair((1, 0, 2), (1, 0, 2)),
        &pair((2, 0, 8), (2, 0, 8)),
    );
}
