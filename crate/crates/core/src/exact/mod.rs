//! Exact arithmetic used by the graph-side identities.

pub mod cyclotomic;
pub mod linalg;
pub mod poly;
pub mod series;

pub use cyclotomic::Cyclotomic;
pub use poly::Polynomial;
pub use series::PowerSeries;
