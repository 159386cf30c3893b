use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CostModelError {
    #[error("modulation table has no steps")]
    NoSteps,
    #[error("modulation coefficient must be positive (step {0})")]
    ZeroCoefficient(usize),
    #[error("modulation coefficients must be nondecreasing (step {0})")]
    DecreasingCoefficient(usize),
    #[error("modulation step bounds must be strictly increasing (step {0})")]
    UnorderedBounds(usize),
    #[error("only the last modulation step may be unbounded (step {0})")]
    UnboundedStep(usize),
}

/// One reach band: routes up to `up_to` length units pay `coefficient`
/// per length unit. The last step may omit `up_to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulationStep {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub up_to: Option<u64>,
    pub coefficient: u64,
}

/// Step table mapping route length to a spectral-efficiency coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTable")]
pub struct ModulationTable {
    steps: Vec<ModulationStep>,
}

#[derive(Deserialize)]
struct RawTable {
    steps: Vec<ModulationStep>,
}

impl TryFrom<RawTable> for ModulationTable {
    type Error = CostModelError;

    fn try_from(raw: RawTable) -> Result<Self, Self::Error> {
        ModulationTable::new(raw.steps)
    }
}

impl ModulationTable {
    pub fn new(steps: Vec<ModulationStep>) -> Result<Self, CostModelError> {
        if steps.is_empty() {
            return Err(CostModelError::NoSteps);
        }
        for (i, step) in steps.iter().enumerate() {
            if step.coefficient == 0 {
                return Err(CostModelError::ZeroCoefficient(i));
            }
            if step.up_to.is_none() && i + 1 != steps.len() {
                return Err(CostModelError::UnboundedStep(i));
            }
            if i > 0 {
                let prev = &steps[i - 1];
                if step.coefficient < prev.coefficient {
                    return Err(CostModelError::DecreasingCoefficient(i));
                }
                if let (Some(a), Some(b)) = (prev.up_to, step.up_to) {
                    if b <= a {
                        return Err(CostModelError::UnorderedBounds(i));
                    }
                }
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[ModulationStep] {
        &self.steps
    }

    /// Lengths past the last bounded step use the last coefficient.
    pub fn coefficient(&self, length: u64) -> u64 {
        self.steps
            .iter()
            .find(|s| s.up_to.is_none_or(|bound| length <= bound))
            .unwrap_or_else(|| self.steps.last().expect("validated non-empty"))
            .coefficient
    }
}

/// How a route length turns into a trait cost.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "table")]
pub enum CostModel {
    /// Trait cost is the route length.
    #[default]
    Additive,
    /// Trait cost is `length × coefficient(length)`. Strictly increasing in
    /// length since coefficients are positive and nondecreasing.
    Modulation(ModulationTable),
}

impl CostModel {
    pub fn trait_cost(&self, length: u64) -> u64 {
        match self {
            CostModel::Additive => length,
            CostModel::Modulation(table) => length.saturating_mul(table.coefficient(length)),
        }
    }

    pub fn is_additive(&self) -> bool {
        matches!(self, CostModel::Additive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn table() -> ModulationTable {
        ModulationTable::new(vec![
            ModulationStep {
                up_to: Some(10),
                coefficient: 1,
            },
            ModulationStep {
                up_to: Some(20),
                coefficient: 2,
            },
            ModulationStep {
                up_to: None,
                coefficient: 4,
            },
        ])
        .unwrap()
    }

    #[test]
    fn coefficient_bands() {
        let t = table();
        assert_eq!(t.coefficient(0), 1);
        assert_eq!(t.coefficient(10), 1);
        assert_eq!(t.coefficient(11), 2);
        assert_eq!(t.coefficient(500), 4);
        assert_eq!(CostModel::Modulation(t).trait_cost(15), 30);
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(ModulationTable::new(vec![]), Err(CostModelError::NoSteps));
        let dec = vec![
            ModulationStep {
                up_to: Some(5),
                coefficient: 3,
            },
            ModulationStep {
                up_to: None,
                coefficient: 2,
            },
        ];
        assert_eq!(
            ModulationTable::new(dec),
            Err(CostModelError::DecreasingCoefficient(1))
        );
        let zero = vec![ModulationStep {
            up_to: None,
            coefficient: 0,
        }];
        assert_eq!(
            ModulationTable::new(zero),
            Err(CostModelError::ZeroCoefficient(0))
        );
        let json = r#"{"steps":[{"coefficient":1},{"up_to":4,"coefficient":2}]}"#;
        assert!(serde_json::from_str::<ModulationTable>(json).is_err());
    }

    #[test]
    fn model_round_trips_through_json() {
        let m = CostModel::Modulation(table());
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<CostModel>(&text).unwrap(), m);
    }

    proptest! {
        #[test]
        fn modulation_cost_nondecreasing_along_route(links in proptest::collection::vec(0u64..15, 1..12)) {
            let model = CostModel::Modulation(table());
            let mut length = 0;
            let mut cost = model.trait_cost(0);
            for c in links {
                length += c;
                let next = model.trait_cost(length);
                prop_assert!(next >= cost);
                cost = next;
            }
        }
    }
}
