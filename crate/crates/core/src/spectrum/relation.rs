//! Domination relations between labels sitting at the same vertex.
//!
//! Two families exist. [`Relation::Base`] compares the traits themselves
//! (normal and cross comparisons for same-node vertices); it is exact even
//! under a per-route cost limit but can keep exponentially many labels.
//! [`Relation::Prime`] compares the summed label cost plus resource
//! inclusion; it keeps the efficient sets polynomially small but is only
//! exact when route cost is unlimited.

use serde::{Deserialize, Serialize};

use super::Trait;

/// The two traits of a label, in canonical slot order.
pub type TraitPair = [Trait; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Base,
    Prime,
}

/// Whether both routes of a label end at the same node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Distinct,
    Same,
}

impl std::str::FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "base" => Ok(Relation::Base),
            "prime" => Ok(Relation::Prime),
            other => Err(format!(
                "unknown relation `{other}` (expected base or prime)"
            )),
        }
    }
}

/// `⪯_≠`: componentwise trait domination.
pub fn leq_ne(li: &TraitPair, lj: &TraitPair) -> bool {
    li[0].leq(&lj[0]) && li[1].leq(&lj[1])
}

/// `⪯_n`, the normal comparison.
pub fn leq_n(li: &TraitPair, lj: &TraitPair) -> bool {
    li[0].leq(&lj[0]) && li[1].leq(&lj[1])
}

/// `⪯_x`, the cross comparison.
pub fn leq_x(li: &TraitPair, lj: &TraitPair) -> bool {
    li[0].leq(&lj[1]) && li[1].leq(&lj[0])
}

/// `⪯_=`: normal or cross. Traits of a same-node label cannot be sorted in
/// general, so neither comparison alone is enough.
pub fn leq_eq(li: &TraitPair, lj: &TraitPair) -> bool {
    leq_n(li, lj) || leq_x(li, lj)
}

pub fn label_cost(l: &TraitPair) -> u64 {
    l[0].cost + l[1].cost
}

pub fn ri_incl_ne(li: &TraitPair, lj: &TraitPair) -> bool {
    li[0].ri.contains(&lj[0].ri) && li[1].ri.contains(&lj[1].ri)
}

pub fn ri_incl_n(li: &TraitPair, lj: &TraitPair) -> bool {
    ri_incl_ne(li, lj)
}

pub fn ri_incl_x(li: &TraitPair, lj: &TraitPair) -> bool {
    li[0].ri.contains(&lj[1].ri) && li[1].ri.contains(&lj[0].ri)
}

pub fn ri_incl_eq(li: &TraitPair, lj: &TraitPair) -> bool {
    ri_incl_n(li, lj) || ri_incl_x(li, lj)
}

/// `⪯′`: cheaper-or-equal label with included resources.
pub fn leq_prime(kind: VertexKind, li: &TraitPair, lj: &TraitPair) -> bool {
    label_cost(li) <= label_cost(lj)
        && match kind {
            VertexKind::Distinct => ri_incl_ne(li, lj),
            VertexKind::Same => ri_incl_eq(li, lj),
        }
}

/// `li` is better than or equal to `lj` under `mode`.
pub fn dominates(mode: Relation, kind: VertexKind, li: &TraitPair, lj: &TraitPair) -> bool {
    match (mode, kind) {
        (Relation::Base, VertexKind::Distinct) => leq_ne(li, lj),
        (Relation::Base, VertexKind::Same) => leq_eq(li, lj),
        (Relation::Prime, kind) => leq_prime(kind, li, lj),
    }
}

/// A same-node label is sorted when its first trait dominates its second.
pub fn is_sorted(l: &TraitPair) -> bool {
    l[0].leq(&l[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::UnitInterval;

    fn pair(a: (u64, u32, u32), b: (u64, u32, u32)) -> TraitPair {
        [
            Trait::new(a.0, UnitInterval::of(a.1, a.2)),
            Trait::new(b.0, UnitInterval::of(b.1, b.2)),
        ]
    }

    #[test]
    fn componentwise_distinct_nodes() {
        let li = pair((1, 0, 4), (1, 0, 4));
        let lj = pair((2, 0, 2), (2, 0, 2));
        assert!(leq_ne(&li, &lj));
        assert!(!leq_ne(&lj, &li));

        let li = pair((1, 0, 2), (9, 0, 8));
        let lj = pair((2, 0, 8), (1, 0, 8));
        assert!(!leq_ne(&li, &lj) && !leq_ne(&lj, &li));
    }

    #[test]
    fn normal_without_cross() {
        let li = pair((1, 0, 4), (3, 0, 4));
        let lj = pair((2, 0, 2), (3, 0, 2));
        assert!(is_sorted(&li) && is_sorted(&lj));
        assert!(leq_n(&li, &lj));
        assert!(!leq_x(&li, &lj));
        assert!(leq_eq(&li, &lj));
    }

    #[test]
    fn cross_without_normal_on_unsorted_labels() {
        let li = pair((1, 0, 2), (2, 0, 4));
        let lj = pair((3, 0, 4), (2, 0, 2));
        assert!(!is_sorted(&li));
        assert!(!leq_n(&li, &lj));
        assert!(leq_x(&li, &lj));
        assert!(leq_eq(&li, &lj));
    }

    #[test]
    fn lobe_labels_incomparable_under_base_equivalent_under_prime() {
        let li = pair((0, 0, 1), (7, 0, 1));
        let lj = pair((1, 0, 1), (6, 0, 1));
        assert!(!leq_eq(&li, &lj) && !leq_eq(&lj, &li));
        assert!(leq_prime(VertexKind::Same, &li, &lj) && leq_prime(VertexKind::Same, &lj, &li));
        assert!(!dominates(Relation::Base, VertexKind::Same, &li, &lj));
        assert!(dominates(Relation::Prime, VertexKind::Same, &li, &lj));

        let cheaper = pair((0, 0, 1), (6, 0, 1));
        assert!(!leq_prime(VertexKind::Same, &li, &cheaper));
    }

    #[test]
    fn resource_inclusion() {
        let l = pair((3, 0, 4), (4, 2, 4));
        assert_eq!(label_cost(&l), 7);
        for f in [ri_incl_ne, ri_incl_n, ri_incl_eq] {
            assert!(f(&l, &l));
        }
        // cross inclusion is only reflexive when both intervals coincide
        assert!(!ri_incl_x(&l, &l));
        let sym = pair((3, 1, 5), (4, 1, 5));
        assert!(ri_incl_x(&sym, &sym));
        let li = pair((0, 0, 2), (0, 4, 8));
        let lj = pair((0, 5, 7), (0, 0, 1));
        assert!(ri_incl_x(&li, &lj) && !ri_incl_n(&li, &lj) && ri_incl_eq(&li, &lj));
        assert!(!ri_incl_ne(&li, &lj));
    }

    #[test]
    fn identity_dominates_in_both_modes() {
        let l = pair((2, 1, 3), (5, 0, 6));
        for mode in [Relation::Base, Relation::Prime] {
            for kind in [VertexKind::Distinct, VertexKind::Same] {
                assert!(dominates(mode, kind, &l, &l));
            }
        }
    }
}
