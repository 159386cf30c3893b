//! Lobe worst-case benchmark.

use std::fmt::Write as _;
use std::time::Duration;

use crate::generate::{lobe_network, LOBE_SOURCE, LOBE_TARGET};
use crate::network::Demand;
use crate::search::{solve, SearchError, SearchOptions};
use crate::spectrum::Relation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LobeRow {
    pub m: u32,
    pub cost: Option<u64>,
    pub labels_at_destination: u64,
    pub labels_generated: u64,
    pub wall_time: Duration,
}

pub const LOBE_CSV_HEADER: &str = "m,labels_at_destination,labels_generated,wall_time";

/// Solves lobe(m, 1) for a one-unit demand with every efficient label kept
/// at the destination.
pub fn lobe_row(m: u32, relation: Relation) -> Result<LobeRow, SearchError> {
    let net = lobe_network(m, 1)?;
    let opts = SearchOptions::new(relation).enumerate_all(true);
    let sol = solve(&net, &Demand::new(LOBE_SOURCE, LOBE_TARGET, 1), &opts)?;
    Ok(LobeRow {
        m,
        cost: sol.cost(),
        labels_at_destination: sol.stats.labels_at_destination,
        labels_generated: sol.stats.labels_generated,
        wall_time: sol.stats.wall_time,
    })
}

pub fn lobe_bench(m_max: u32, relation: Relation) -> Result<Vec<LobeRow>, SearchError> {
    (1..=m_max).map(|m| lobe_row(m, relation)).collect()
}

/// CSV with [`LOBE_CSV_HEADER`]; wall time in seconds.
pub fn to_csv(rows: &[LobeRow]) -> String {
    let mut out = String::from(LOBE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{:.6}",
            r.m,
            r.labels_at_destination,
            r.labels_generated,
            r.wall_time.as_secs_f64()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_rows() {
        let base = lobe_row(1, Relation::Base).unwrap();
        assert_eq!(base.labels_at_destination, 2);
        assert_eq!(base.cost, Some(3));
        let prime = lobe_row(1, Relation::Prime).unwrap();
        assert_eq!(prime.labels_at_destination, 1);
        assert_eq!(
            lobe_row(4, Relation::Base).unwrap().labels_at_destination,
            16
        );
    }

    #[test]
    fn csv_layout() {
        let rows = lobe_bench(2, Relation::Prime).unwrap();
        let csv = to_csv(&rows);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], LOBE_CSV_HEADER);
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("1,1,"));
    }
}
