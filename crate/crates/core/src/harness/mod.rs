//! Graph ingestion, the small-graph census, per-graph verification and
//! report emission.

pub mod cache;
pub mod census;
pub mod checks;
pub mod input;
pub mod report;

pub use cache::RegCache;
pub use census::{census_graphs, enumerate_levels};
pub use checks::{
    colon_generator_gap, verify_graph, verify_graph_with, CensusConfig, CheckReport, CheckResult, CheckStatus,
    GraphContext, PowerKind, Reproducer, ALL_CHECKS,
};
pub use input::{parse_graph, parse_graph6_list};
pub use report::{emit_report, read_reports, run_census, thread_count, CensusOutput, CensusSummary, ReportFormat};
