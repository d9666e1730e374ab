//! Symmetric functions, plethystic Schur function series and the branching
//! rules `GL(n) ↓ H_π` for subgroups stabilising a plethysm-type tensor.

pub mod branching;
pub mod error;
pub mod linear;
pub mod modify;
pub mod oracle;
pub mod partition;
pub mod series;
pub mod symfunc;
pub mod tables;

pub use branching::{FormalCharacter, GroupTag};
pub use error::{Error, Result};
pub use linear::Combination;
pub use modify::ModificationRuleSet;
pub use partition::{partitions_of, partitions_up_to, Partition};
pub use series::{SeriesId, SeriesName, TruncatedSeries};
pub use symfunc::{SchurExpansion, TensorExpansion};
pub use tables::TableId;
