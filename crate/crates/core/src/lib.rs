//! Recognition of strong cocomparability graphs: reflexive graphs whose
//! adjacency matrix admits a simultaneous row and column permutation
//! avoiding the Slash submatrix `[[0,1],[1,0]]`.
//!
//! [`recognize`] returns either such an ordering or an invertible-pair
//! certificate that can be re-checked step by step with
//! [`verify_certificate`]. Around it sit recognizers for the neighbouring
//! classes (chordal, strongly chordal, interval, comparability and their
//! complements), a brute-force ordering oracle and obstruction mining.

pub mod bits;
pub mod builder;
pub mod canon;
pub mod classes;
pub mod cli;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod implication;
pub mod oracle;
pub mod pattern;

pub use builder::{has_circuit, recognize, strong_comparability_recognize, PairSet, RecognitionVerdict};
pub use canon::{canonical_code, enumerate_nonisomorphic, CanonicalCode};
pub use classes::{
    bipartite_scc_check, caterpillar_ordering, find_asteroidal_triple, generate_replicated_caterpillar,
    interval_routes, is_chordal, is_cocomparability, is_comparability, is_interval, is_strongly_chordal,
    BipartiteVerdict, BipartiteWitness, CaterpillarPlan, ChordalVerdict, ClassName, IntervalRoutes,
};
pub use error::{Error, Result};
pub use format::{decode_graph6, encode_graph6, parse_graph, serialize, GraphFormat};
pub use graph::{Bipartition, DiagonalMode, Graph, VertexOrdering};
pub use implication::{
    build_pair_graph, find_invertible_pair, forces, implication_classes, verify_certificate, ImplicationClass,
    InvertiblePairCertificate, OrderedPair, PairGraph,
};
pub use oracle::{
    brute_force_ordering, cross_validate, minimal_obstructions, CrossValidationReport, MinimalityConvention,
    ObstructionReport, ObstructionSummary, OracleQuery,
};
pub use pattern::{
    find_ordered_pattern, is_interval_ordering, scan, verify_scc_ordering, OrderedPattern, OrderedPatternWitness,
    OrderingVerdict, PatternKind, PatternWitness,
};
