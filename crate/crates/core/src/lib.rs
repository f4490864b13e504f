//! Minimal-diameter k-(quasi-)regular graphs on up to 20 vertices and the
//! filling patterns they induce for incomplete pairwise comparison matrices.
//!
//! The crate is organized around six pieces:
//!
//! - [`graph`] — bitset graphs with degree/distance/regularity machinery
//! - [`codec`] — graph6 and edge-list text formats
//! - [`canonical`] — canonical labeling and isomorphism tests
//! - [`enumerate`] — isomorph-free census and seeded stochastic search
//! - [`catalog`] — the embedded, self-verifying reference graphs
//! - [`pcm`] — comparison-mask conversions and the recommendation policy

pub mod canonical;
pub mod catalog;
pub mod codec;
pub mod enumerate;
pub mod graph;
pub mod pcm;

pub use canonical::{are_isomorphic, canonical_form, CanonicalForm};
pub use catalog::{lookup, verify_catalog, CatalogEntry, CatalogError, CatalogReport, G6Status};
pub use codec::{decode_graph6, encode_graph6, format_edge_list, parse_edge_list, CodecError};
pub use enumerate::{
    enumerate_degree_constrained, min_diameter_census, regularity_for,
    stochastic_low_diameter_search, summary_table, CensusError, CensusQuery, CensusResult,
    CountClaim, Regularity, SearchOutcome, SearchQuery, SummaryOptions, SummaryRow,
};
pub use graph::{
    completion_ratio, moore_bound, required_edge_count, CompletionRatio, DistanceMatrix, Graph,
    GraphError, MAX_VERTICES,
};
pub use pcm::{
    graph_from_mask, pattern_from_graph, recommend, FillingPattern, FrontierPoint, PcmError,
    PcmMask, Recommendation, RecommendTarget,
};
