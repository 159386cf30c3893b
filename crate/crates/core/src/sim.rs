//! Dynamic traffic: connections arrive, get routed on the current spectrum
//! state, hold their units and release them on departure.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::network::{Demand, LinkId, Network, NetworkError};
use crate::search::{self, SearchError, SearchOptions};
use crate::spectrum::{IntervalError, UnitInterval};

#[derive(Debug, Error)]
pub enum SimError {
    #[error("event {id}: {source}")]
    Event { id: u64, source: NetworkError },
    #[error("event {0}: time and hold must be finite, time >= 0 and hold > 0")]
    BadTiming(u64),
    #[error("duplicate event id {0}")]
    DuplicateId(u64),
    #[error("connection {id}: releasing link {link}: {source}")]
    Release {
        id: u64,
        link: LinkId,
        source: IntervalError,
    },
    #[error("connection {id}: allocating link {link}: {source}")]
    Allocate {
        id: u64,
        link: LinkId,
        source: IntervalError,
    },
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("invalid traffic parameters: {0}")]
    Params(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrafficEvent {
    pub id: u64,
    pub time: f64,
    pub src: String,
    pub dst: String,
    pub units: u32,
    pub hold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrafficDocument {
    pub events: Vec<TrafficEvent>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrafficParams {
    pub count: usize,
    pub mean_hold: f64,
    pub mean_gap: f64,
    /// Inclusive range of demanded units.
    pub units_range: (u32, u32),
    pub seed: u64,
}

/// Poisson arrivals with exponential holding times; endpoints uniform over
/// distinct node pairs, units uniform over `units_range`.
pub fn gen_traffic(net: &Network, p: &TrafficParams) -> Result<Vec<TrafficEvent>, SimError> {
    if net.node_count() < 2 {
        return Err(SimError::Params("network needs at least two nodes".into()));
    }
    let (lo, hi) = p.units_range;
    if lo == 0 || lo > hi || hi > net.units() {
        return Err(SimError::Params(format!(
            "units range [{lo}, {hi}] outside [1, {}]",
            net.units()
        )));
    }
    let exp = |mean: f64| {
        (mean.is_finite() && mean > 0.0)
            .then(|| Exp::new(1.0 / mean).expect("positive rate"))
            .ok_or_else(|| SimError::Params(format!("mean {mean} must be positive")))
    };
    let (gap, hold) = (exp(p.mean_gap)?, exp(p.mean_hold)?);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let n = net.node_count();
    let mut time = 0.0;
    let mut events = Vec::with_capacity(p.count);
    for id in 0..p.count as u64 {
        time += gap.sample(&mut rng);
        let s = rng.random_range(0..n);
        let mut d = rng.random_range(0..n - 1);
        if d >= s {
            d += 1;
        }
        let h: f64 = hold.sample(&mut rng);
        events.push(TrafficEvent {
            id,
            time,
            src: net.nodes()[s].clone(),
            dst: net.nodes()[d].clone(),
            units: rng.random_range(lo..=hi),
            // exponential samples can underflow to zero
            hold: h.max(f64::MIN_POSITIVE),
        });
    }
    Ok(events)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EventOutcome {
    pub id: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cost: Option<u64>,
}

/// Deterministic part of a simulation result: identical for identical
/// inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub offered: u64,
    pub routed: u64,
    pub blocked: u64,
    pub blocking_probability: f64,
    pub mean_labels_generated: f64,
    pub max_labels_generated: u64,
    pub max_labels_per_vertex: u64,
    pub outcomes: Vec<EventOutcome>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SimTiming {
    pub mean_wall_time: f64,
    pub max_wall_time: f64,
}

#[derive(Debug, Clone)]
pub struct SimRun {
    pub report: SimReport,
    pub timing: SimTiming,
    /// Spectrum state after every connection has departed.
    pub network: Network,
}

/// A live connection and the units it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    pub id: u64,
    pub held: Vec<(LinkId, UnitInterval)>,
}

/// Mutable spectrum state plus the connections holding parts of it.
#[derive(Debug, Clone)]
pub struct Simulator {
    net: Network,
    opts: SearchOptions,
    live: BTreeMap<u64, Connection>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Departure {
    time: f64,
    id: u64,
}

impl Eq for Departure {}

impl Ord for Departure {
    fn cmp(&self, other: &Self) -> Ordering {
        self.time
            .total_cmp(&other.time)
            .then(self.id.cmp(&other.id))
    }
}

impl PartialOrd for Departure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Simulator {
    pub fn new(net: Network, opts: SearchOptions) -> Result<Self, SimError> {
        opts.validate()?;
        Ok(Self {
            net,
            opts,
            live: BTreeMap::new(),
        })
    }

    pub fn network(&self) -> &Network {
        &self.net
    }

    pub fn live(&self) -> impl Iterator<Item = &Connection> {
        self.live.values()
    }

    /// Routes a connection on the current state and takes its units.
    pub fn arrive(&mut self, id: u64, demand: &Demand) -> Result<search::Solution, SimError> {
        if self.live.contains_key(&id) {
            return Err(SimError::DuplicateId(id));
        }
        let sol = search::solve(&self.net, demand, &self.opts).map_err(|e| match e {
            SearchError::Network(source) => SimError::Event { id, source },
            other => SimError::Search(other),
        })?;
        if let Some(r) = &sol.routing {
            let mut held = Vec::new();
            for route in [&r.working, &r.protecting] {
                for &link in &route.links {
                    self.net
                        .available_mut(link)
                        .allocate(route.slots)
                        .map_err(|source| SimError::Allocate { id, link, source })?;
                    held.push((link, route.slots));
                }
            }
            self.live.insert(id, Connection { id, held });
        }
        Ok(sol)
    }

    /// Returns the units of connection `id`. Unknown ids are a no-op
    /// (blocked connections hold nothing).
    pub fn depart(&mut self, id: u64) -> Result<(), SimError> {
        if let Some(conn) = self.live.remove(&id) {
            for (link, iv) in conn.held {
                self.net
                    .available_mut(link)
                    .release(iv)
                    .map_err(|source| SimError::Release { id, link, source })?;
            }
        }
        Ok(())
    }

    /// Replays `events` in `(time, id)` order. Departures at the same
    /// instant as an arrival are processed first; all connections still
    /// live after the last arrival depart at the end.
    pub fn run(mut self, events: &[TrafficEvent]) -> Result<SimRun, SimError> {
        let mut order: Vec<&TrafficEvent> = events.iter().collect();
        let mut ids = HashSet::with_capacity(events.len());
        for e in &order {
            if !ids.insert(e.id) {
                return Err(SimError::DuplicateId(e.id));
            }
            if !(e.time.is_finite() && e.time >= 0.0 && e.hold.is_finite() && e.hold > 0.0) {
                return Err(SimError::BadTiming(e.id));
            }
        }
        order.sort_by(|a, b| a.time.total_cmp(&b.time).then(a.id.cmp(&b.id)));

        let mut departures: BinaryHeap<Reverse<Departure>> = BinaryHeap::new();
        let mut outcomes = Vec::with_capacity(order.len());
        let (mut routed, mut labels_sum, mut labels_max, mut per_vertex) = (0u64, 0u64, 0u64, 0u64);
        let (mut wall_sum, mut wall_max) = (0.0f64, 0.0f64);
        for e in order {
            while let Some(&Reverse(d)) = departures.peek() {
                if d.time > e.time {
                    break;
                }
                departures.pop();
                self.depart(d.id)?;
            }
            let sol = self.arrive(e.id, &Demand::new(e.src.clone(), e.dst.clone(), e.units))?;
            labels_sum += sol.stats.labels_generated;
            labels_max = labels_max.max(sol.stats.labels_generated);
            per_vertex = per_vertex.max(sol.stats.max_labels_per_vertex);
            let secs = sol.stats.wall_time.as_secs_f64();
            wall_sum += secs;
            wall_max = wall_max.max(secs);
            if sol.routing.is_some() {
                routed += 1;
                departures.push(Reverse(Departure {
                    time: e.time + e.hold,
                    id: e.id,
                }));
            }
            outcomes.push(EventOutcome {
                id: e.id,
                cost: sol.cost(),
            });
        }
        while let Some(Reverse(d)) = departures.pop() {
            self.depart(d.id)?;
        }

        let offered = outcomes.len() as u64;
        let mean = |x: f64| {
            if offered == 0 {
                0.0
            } else {
                x / offered as f64
            }
        };
        let blocked = offered - routed;
        let report = SimReport {
            offered,
            routed,
            blocked,
            blocking_probability: mean(blocked as f64),
            mean_labels_generated: mean(labels_sum as f64),
            max_labels_generated: labels_max,
            max_labels_per_vertex: per_vertex,
            outcomes,
        };
        let timing = SimTiming {
            mean_wall_time: mean(wall_sum),
            max_wall_time: wall_max,
        };
        Ok(SimRun {
            report,
            timing,
            network: self.net,
        })
    }
}

/// Convenience wrapper around [`Simulator::run`].
pub fn run(
    net: &Network,
    events: &[TrafficEvent],
    opts: &SearchOptions,
) -> Result<SimRun, SimError> {
    Simulator::new(net.clone(), opts.clone())?.run(events)
}
