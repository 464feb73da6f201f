//! Recognizers for the classes around strong cocomparability.

pub mod bipartite;
pub mod chordal;
pub mod comparability;
pub mod interval;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bipartite::{
    bipartite_scc_check, caterpillar_ordering, find_subgraph, generate_replicated_caterpillar, induced_cycle_at_least,
    BipartiteVerdict, BipartiteWitness, CaterpillarPlan,
};
pub use chordal::{
    chordless_cycle, is_chordal, is_perfect_elimination, is_strongly_chordal, simple_elimination_ordering,
    ChordalVerdict,
};
pub use comparability::{is_cocomparability, is_comparability};
pub use interval::{find_asteroidal_triple, interval_routes, is_interval, IntervalRoutes};

use crate::error::{Error, Result};
use crate::graph::{DiagonalMode, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassName {
    StrongCocomparability,
    StrongComparability,
    Cocomparability,
    Comparability,
    Chordal,
    StronglyChordal,
    Interval,
    BipartiteScc,
}

impl ClassName {
    pub const ALL: [ClassName; 8] = [
        ClassName::StrongCocomparability,
        ClassName::StrongComparability,
        ClassName::Cocomparability,
        ClassName::Comparability,
        ClassName::Chordal,
        ClassName::StronglyChordal,
        ClassName::Interval,
        ClassName::BipartiteScc,
    ];

    /// Flag spelling, e.g. `strong-cocomparability`.
    pub fn name(self) -> &'static str {
        match self {
            ClassName::StrongCocomparability => "strong-cocomparability",
            ClassName::StrongComparability => "strong-comparability",
            ClassName::Cocomparability => "cocomparability",
            ClassName::Comparability => "comparability",
            ClassName::Chordal => "chordal",
            ClassName::StronglyChordal => "strongly-chordal",
            ClassName::Interval => "interval",
            ClassName::BipartiteScc => "bipartite-scc",
        }
    }

    /// The diagonal the class's recognizer expects by default.
    pub fn default_mode(self) -> DiagonalMode {
        match self {
            ClassName::StrongComparability | ClassName::Comparability => DiagonalMode::Irreflexive,
            _ => DiagonalMode::Reflexive,
        }
    }

    /// Membership only, dispatching to the class's recognizer.
    pub fn contains(self, g: &Graph) -> Result<bool> {
        Ok(match self {
            ClassName::StrongCocomparability => crate::builder::recognize(g)?.is_member(),
            ClassName::StrongComparability => crate::builder::strong_comparability_recognize(g)?.is_member(),
            ClassName::Cocomparability => is_cocomparability(g)?,
            ClassName::Comparability => is_comparability(g)?,
            ClassName::Chordal => is_chordal(g)?.is_chordal(),
            ClassName::StronglyChordal => is_strongly_chordal(g)?,
            ClassName::Interval => is_interval(g)?,
            ClassName::BipartiteScc => bipartite_scc_check(g)?.is_yes(),
        })
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        ClassName::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::Precondition(format!("unknown class `{s}`")))
    }
}
