//! Traits, labels, the derivation operator and the domination relations.

mod cost;
mod interval;
mod label;
pub mod relation;
mod traits;

pub use cost::{CostModel, CostModelError, ModulationStep, ModulationTable};
pub use interval::{IntervalError, SlotSet, UnitInterval};
pub use label::{ExtendError, Label, LabelId, Side, Vertex, VertexMismatch};
pub use relation::{Relation, TraitPair, VertexKind};
pub use traits::Trait;
