//! Fractional domatic number: classification, certificates, and an exact
//! LP oracle.

pub mod certificate;
pub mod config;
pub mod decomposition;
pub mod domination;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod simplex;
pub mod synthesis;

pub use certificate::Certificate;
pub use config::{ConfigError, Configuration, Violation};
pub use graph::{Graph, GraphError, VertexMap, VertexSet};
pub use oracle::{exact_fd, FdValue};
pub use rational::Rational;
pub use synthesis::{classify, Classification, Reason, Verdict};
