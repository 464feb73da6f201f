//! Constructing strong cocomparability orderings from implication classes.
//!
//! Starting from an empty arc set `U`, every pair of mutually inverse
//! classes `{I, I^-1}` contributes one side: `I` if `U + I` stays free of
//! circuits (directed cycles), `I^-1` otherwise. Non-trivial classes go
//! first. Once every unordered vertex pair is decided, `U` is a transitive
//! tournament and its topological order is the vertex ordering.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{DiagonalMode, Graph, VertexOrdering};
use crate::implication::{find_invertible_pair, implication_classes, InvertiblePairCertificate, OrderedPair};
use crate::pattern::{verify_scc_ordering, OrderingVerdict};

/// A set of ordered pairs read as the arcs of a digraph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    n: usize,
    words: usize,
    out: Vec<u64>,
    len: usize,
}

impl PairSet {
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n);
        PairSet {
            n,
            words,
            out: vec![0; n * words],
            len: 0,
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = OrderedPair>) -> Self {
        let mut s = PairSet::new(n);
        for p in pairs {
            s.insert(p);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.out[u * self.words..(u + 1) * self.words]
    }

    pub fn contains(&self, p: OrderedPair) -> bool {
        bits::get(self.row(p.u), p.v)
    }

    pub fn insert(&mut self, p: OrderedPair) -> bool {
        if self.contains(p) {
            return false;
        }
        bits::set(&mut self.out[p.u * self.words..(p.u + 1) * self.words], p.v);
        self.len += 1;
        true
    }

    pub fn remove(&mut self, p: OrderedPair) -> bool {
        if !self.contains(p) {
            return false;
        }
        bits::clear(&mut self.out[p.u * self.words..(p.u + 1) * self.words], p.v);
        self.len -= 1;
        true
    }

    pub fn pairs(&self) -> impl Iterator<Item = OrderedPair> + '_ {
        (0..self.n).flat_map(move |u| bits::ones(self.row(u)).map(move |v| OrderedPair::new(u, v)))
    }

    /// Whether `to` is reachable from `from` along arcs.
    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![0u64; self.words];
        let mut stack = vec![from];
        bits::set(&mut seen, from);
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            for (i, (&o, s)) in self.row(x).iter().zip(seen.iter_mut()).enumerate() {
                let mut fresh = o & !*s;
                *s |= fresh;
                while fresh != 0 {
                    stack.push(i * 64 + fresh.trailing_zeros() as usize);
                    fresh &= fresh - 1;
                }
            }
        }
        false
    }
}

/// A directed cycle `(x1,x2), (x2,x3), ..., (xl,x1)` on distinct vertices, if any.
pub fn has_circuit(set: &PairSet) -> Option<Vec<OrderedPair>> {
    let n = set.n;
    let w = set.words;
    let mut white = vec![u64::MAX; w];
    if n & 63 != 0 {
        white[w - 1] = (1u64 << (n & 63)) - 1;
    }
    let mut on_stack = vec![0u64; w];
    let mut stack: Vec<usize> = Vec::new();
    for s in 0..n {
        if !bits::get(&white, s) {
            continue;
        }
        bits::clear(&mut white, s);
        bits::set(&mut on_stack, s);
        stack.push(s);
        while let Some(&x) = stack.last() {
            let row = set.row(x);
            let back = row.iter().zip(&on_stack).map(|(a, b)| a & b).collect::<Vec<_>>();
            if let Some(y) = bits::next_one(&back, 0) {
                let start = stack.iter().position(|&z| z == y).unwrap();
                let cyc = &stack[start..];
                let mut out: Vec<OrderedPair> = cyc.windows(2).map(|p| OrderedPair::new(p[0], p[1])).collect();
                out.push(OrderedPair::new(*cyc.last().unwrap(), cyc[0]));
                return Some(out);
            }
            let next = row.iter().zip(&white).map(|(a, b)| a & b).collect::<Vec<_>>();
            match bits::next_one(&next, 0) {
                Some(y) => {
                    bits::clear(&mut white, y);
                    bits::set(&mut on_stack, y);
                    stack.push(y);
                }
                None => {
                    bits::clear(&mut on_stack, x);
                    stack.pop();
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionVerdict {
    Member { ordering: VertexOrdering },
    NonMember { certificate: InvertiblePairCertificate },
}

impl RecognitionVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, RecognitionVerdict::Member { .. })
    }

    pub fn ordering(&self) -> Option<&VertexOrdering> {
        match self {
            RecognitionVerdict::Member { ordering } => Some(ordering),
            RecognitionVerdict::NonMember { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&InvertiblePairCertificate> {
        match self {
            RecognitionVerdict::NonMember { certificate } => Some(certificate),
            RecognitionVerdict::Member { .. } => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VerdictRepr {
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    ordering: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    certificate: Option<InvertiblePairCertificate>,
}

impl Serialize for RecognitionVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            RecognitionVerdict::Member { ordering } => VerdictRepr {
                member: true,
                ordering: Some(ordering.as_slice().to_vec()),
                certificate: None,
            },
            RecognitionVerdict::NonMember { certificate } => VerdictRepr {
                member: false,
                ordering: None,
                certificate: Some(certificate.clone()),
            },
        };
        repr.serialize(s)
    }
}

/// Decides strong cocomparability: an ordering whose symmetric matrix is
/// Slash-free, or a certificate of an invertible pair.
pub fn recognize(g: &Graph) -> Result<RecognitionVerdict> {
    g.require_mode(DiagonalMode::Reflexive)?;
    if let Some(certificate) = find_invertible_pair(g)? {
        return Ok(RecognitionVerdict::NonMember { certificate });
    }
    let ordering = build_ordering(g)?;
    match verify_scc_ordering(g, &ordering)? {
        OrderingVerdict::Valid => Ok(RecognitionVerdict::Member { ordering }),
        OrderingVerdict::Invalid { pattern, .. } => Err(Error::InternalDefect(format!(
            "constructed ordering {:?} contains {:?}",
            ordering.as_slice(),
            pattern
        ))),
    }
}

fn build_ordering(g: &Graph) -> Result<VertexOrdering> {
    let n = g.n();
    let cls = implication_classes(g)?;
    let classes = cls.classes();
    // (first choice, its inverse), first choice has the smaller representative.
    let mut nontrivial = Vec::new();
    let mut trivial = Vec::new();
    for (i, class) in classes.iter().enumerate() {
        let j = cls.inverse_of(i);
        if i == j {
            return Err(Error::InternalDefect(format!(
                "class of {:?} meets its inverse although the auxiliary graph is bipartite",
                class.representative()
            )));
        }
        if i < j {
            if class.is_trivial() {
                trivial.push((i, j));
            } else {
                nontrivial.push((i, j));
            }
        }
    }

    let mut u = PairSet::new(n);
    for (first, second) in nontrivial.into_iter().chain(trivial) {
        let chosen = if try_add(&mut u, &classes[first].pairs) {
            first
        } else if try_add(&mut u, &classes[second].pairs) {
            second
        } else {
            return Err(Error::InternalDefect(format!(
                "both {:?} and its inverse close a circuit",
                classes[first].representative()
            )));
        };
        debug_assert!(classes[chosen].pairs.iter().all(|p| !u.contains(p.flipped())));
    }

    if u.len() != n * n.saturating_sub(1) / 2 || has_circuit(&u).is_some() {
        return Err(Error::InternalDefect(
            "final pair set is not a transitive tournament".into(),
        ));
    }
    // In a transitive tournament the in-degree of a vertex is its position.
    let mut perm = vec![usize::MAX; n];
    for v in 0..n {
        let indeg = (0..n).filter(|&x| x != v && u.contains(OrderedPair::new(x, v))).count();
        if perm[indeg] != usize::MAX {
            return Err(Error::InternalDefect("tournament in-degrees are not distinct".into()));
        }
        perm[indeg] = v;
    }
    VertexOrdering::new(perm, n)
}

/// Adds `pairs` to `u` unless that closes a circuit, in which case `u` is left unchanged.
fn try_add(u: &mut PairSet, pairs: &[OrderedPair]) -> bool {
    if let [p] = pairs {
        if u.reaches(p.v, p.u) {
            return false;
        }
        u.insert(*p);
        return true;
    }
    let added: Vec<OrderedPair> = pairs.iter().copied().filter(|&p| u.insert(p)).collect();
    if has_circuit(u).is_some() {
        for p in added {
            u.remove(p);
        }
        false
    } else {
        true
    }
}

/// Strong comparability: an ordering whose symmetric matrix avoids `I2`,
/// obtained from the loop-inclusive complement.
pub fn strong_comparability_recognize(g: &Graph) -> Result<RecognitionVerdict> {
    g.require_mode(DiagonalMode::Irreflexive)?;
    recognize(&g.complement())
}
