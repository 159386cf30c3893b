//! Instance generators: the lobe worst case and random connected networks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::network::{Demand, Network, NetworkBuilder, NetworkError};

/// Name of the lobe source node.
pub const LOBE_SOURCE: &str = "ns";
/// Name of the lobe destination node.
pub const LOBE_TARGET: &str = "nx";

/// Chain `ns, n1, .., nm, nx` of `m + 1` segments. Segment `i` carries two
/// parallel links: upper (id `2i`, cost 0) and lower (id `2i + 1`, cost
/// `2^i`). Every link has all units available.
pub fn lobe_network(m: u32, units: u32) -> Result<Network, NetworkError> {
    if m == 0 || units == 0 {
        return Err(NetworkError::Generator(format!(
            "lobe needs m >= 1 and U >= 1, got m={m}, U={units}"
        )));
    }
    if m >= 63 {
        return Err(NetworkError::Generator(format!(
            "lobe costs overflow for m={m}"
        )));
    }
    let names: Vec<String> = std::iter::once(LOBE_SOURCE.to_owned())
        .chain((1..=m).map(|i| format!("n{i}")))
        .chain(std::iter::once(LOBE_TARGET.to_owned()))
        .collect();
    let full = [(0, units)];
    let mut b = NetworkBuilder::new(units).nodes(names.iter().cloned());
    for (i, seg) in names.windows(2).enumerate() {
        b = b
            .link(&seg[0], &seg[1], 0, &full)
            .link(&seg[0], &seg[1], 1u64 << i, &full);
    }
    b.build()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomNetworkParams {
    pub nodes: usize,
    pub avg_degree: f64,
    pub units: u32,
    /// Probability that any single unit of a link is available.
    pub fill: f64,
    pub seed: u64,
}

/// Connected network: a random spanning tree plus random extra links up to
/// `round(n · avg_degree / 2)` links. No parallel links. Costs are uniform
/// in `1..=100`; every unit is independently available with probability
/// `fill`.
pub fn random_network(p: &RandomNetworkParams) -> Result<Network, NetworkError> {
    let n = p.nodes;
    if n < 2 {
        return Err(NetworkError::Generator(format!(
            "need at least 2 nodes, got {n}"
        )));
    }
    if p.units == 0 {
        return Err(NetworkError::Generator(
            "unit count must be positive".into(),
        ));
    }
    if !(0.0..=1.0).contains(&p.fill) {
        return Err(NetworkError::Generator(format!(
            "fill {} outside [0, 1]",
            p.fill
        )));
    }
    if !p.avg_degree.is_finite() || p.avg_degree < 0.0 {
        return Err(NetworkError::Generator(format!(
            "bad average degree {}",
            p.avg_degree
        )));
    }
    let max_links = n * (n - 1) / 2;
    let target = ((n as f64 * p.avg_degree / 2.0).round() as usize).max(n - 1);
    if target > max_links {
        return Err(NetworkError::Generator(format!(
            "average degree {} needs {target} links, a simple graph on {n} nodes has at most {max_links}",
            p.avg_degree
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(target);
    let mut linked = vec![vec![false; n]; n];
    for i in 1..n {
        let j = rng.random_range(0..i);
        pairs.push((j, i));
        linked[i][j] = true;
        linked[j][i] = true;
    }
    let mut spare: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !linked[a][b])
        .collect();
    spare.shuffle(&mut rng);
    pairs.extend(spare.into_iter().take(target - (n - 1)));

    let names: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
    let mut b = NetworkBuilder::new(p.units).nodes(names.iter().cloned());
    for (a, c) in pairs {
        let cost = rng.random_range(1..=100u64);
        let free: Vec<u32> = (0..p.units).filter(|_| rng.random_bool(p.fill)).collect();
        let runs = runs_of(&free);
        b = b.link(&names[a], &names[c], cost, &runs);
    }
    b.build()
}

/// A seeded desk-scale instance: 3 to 8 nodes, average degree at most 3,
/// 4 to 8 units, fill cycling through 0.5, 0.7 and 1.0 by seed, and a demand
/// of 1 to 3 units between two distinct random nodes.
#[derive(Debug, Clone)]
pub struct DeskInstance {
    pub seed: u64,
    pub params: RandomNetworkParams,
    pub net: Network,
    pub demand: Demand,
}

pub const DESK_FILLS: [f64; 3] = [0.5, 0.7, 1.0];

pub fn desk_instance(seed: u64) -> DeskInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0000);
    let nodes = rng.random_range(3..=8usize);
    let avg_degree = [2.0, 2.5, 3.0][rng.random_range(0..3)];
    let units = rng.random_range(4..=8u32);
    let params = RandomNetworkParams {
        nodes,
        avg_degree: f64::min(avg_degree, (nodes - 1) as f64),
        units,
        fill: DESK_FILLS[(seed % 3) as usize],
        seed,
    };
    let net = random_network(&params).expect("parameters within generator bounds");
    let src = rng.random_range(0..nodes);
    let mut dst = rng.random_range(0..nodes - 1);
    if dst >= src {
        dst += 1;
    }
    let demand = Demand::new(
        net.nodes()[src].clone(),
        net.nodes()[dst].clone(),
        rng.random_range(1..=3),
    );
    DeskInstance {
        seed,
        params,
        net,
        demand,
    }
}

fn runs_of(units: &[u32]) -> Vec<(u32, u32)> {
    let mut runs: Vec<(u32, u32)> = Vec::new();
    for &u in units {
        match runs.last_mut() {
            Some(last) if last.1 == u => last.1 = u + 1,
            _ => runs.push((u, u + 1)),
        }
    }
    runs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::load_network;
    use crate::spectrum::SlotSet;
    use proptest::prelude::*;

    fn lower_costs(net: &Network) -> Vec<u64> {
        net.links()
            .iter()
            .skip(1)
            .step_by(2)
            .map(|l| l.cost)
            .collect()
    }

    #[test]
    fn lobe_shapes() {
        let net = lobe_network(2, 1).unwrap();
        assert_eq!((net.node_count(), net.link_count()), (4, 6));
        assert_eq!(lower_costs(&net), vec![1, 2, 4]);

        let net = lobe_network(1, 1).unwrap();
        assert_eq!((net.node_count(), net.link_count()), (3, 4));
        assert_eq!(lower_costs(&net), vec![1, 2]);

        let net = lobe_network(3, 2).unwrap();
        assert_eq!((net.node_count(), net.link_count()), (5, 8));
        assert_eq!(lower_costs(&net).iter().sum::<u64>(), 15);
        assert!(net.links().iter().all(|l| l.available == SlotSet::full(2)));

        assert_eq!(net.incident_links("n1").unwrap().len(), 4);
        assert!(lobe_network(0, 1).is_err());
    }

    #[test]
    fn random_two_nodes_has_the_spanning_link() {
        for seed in 0..5 {
            let p = RandomNetworkParams {
                nodes: 2,
                avg_degree: 1.0,
                units: 4,
                fill: 0.5,
                seed,
            };
            let net = random_network(&p).unwrap();
            assert_eq!(net.link_count(), 1);
        }
    }

    #[test]
    fn random_structural_properties() {
        let p = RandomNetworkParams {
            nodes: 8,
            avg_degree: 3.0,
            units: 8,
            fill: 0.7,
            seed: 42,
        };
        let net = random_network(&p).unwrap();
        assert_eq!(net.node_count(), 8);
        assert!(net.link_count() >= 7);
        assert!(net.is_connected());
        assert_eq!(random_network(&p).unwrap(), net);
        assert!(net.links().iter().all(|l| (1..=100).contains(&l.cost)));
    }

    #[test]
    fn full_fill_means_full_spectrum() {
        let p = RandomNetworkParams {
            nodes: 6,
            avg_degree: 2.5,
            units: 8,
            fill: 1.0,
            seed: 3,
        };
        let net = random_network(&p).unwrap();
        assert!(net.links().iter().all(|l| l.available == SlotSet::full(8)));
    }

    #[test]
    fn desk_instances_stay_in_bounds() {
        for seed in 0..50 {
            let d = desk_instance(seed);
            assert!(d.net.node_count() <= 8 && d.net.units() <= 8);
            assert!(d.params.avg_degree <= 3.0);
            assert!(d.demand.resolve(&d.net).is_ok() && d.demand.units <= 3);
        }
    }

    #[test]
    fn unsatisfiable_degree() {
        let p = RandomNetworkParams {
            nodes: 4,
            avg_degree: 4.0,
            units: 8,
            fill: 1.0,
            seed: 0,
        };
        assert!(matches!(
            random_network(&p),
            Err(NetworkError::Generator(_))
        ));
    }

    proptest! {
        #[test]
        fn random_networks_are_connected(seed in any::<u64>(), n in 2usize..12, deg in 1.0f64..4.0, fill in 0.0f64..=1.0) {
            let p = RandomNetworkParams { nodes: n, avg_degree: deg.min((n - 1) as f64), units: 6, fill, seed };
            let net = random_network(&p).unwrap();
            prop_assert!(net.is_connected());
            let reloaded = load_network(&net.to_json()).unwrap();
            prop_assert_eq!(reloaded, net);
        }
    }
}
