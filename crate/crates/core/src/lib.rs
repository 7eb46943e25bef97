pub mod algebra;
pub mod recurrence;
mod serde_support;
pub mod paths;
pub mod conditions;
pub mod oeis;
pub mod combinat;
pub mod cli;
