//! JSON documents for command output. Rationals are written as strings,
//! `"p/q"` or `"p"` for integers; words use the text token syntax.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::generators::Generator;
use crate::graph::{Edge, Graph};
use crate::semigroup::{CertificateKind, Decomposition, FarkasCertificate, WeightVector};
use crate::spectra::{AdmissibleSubgraph, PrimeIdealDescriptor};
use crate::toric::BinomialRelation;
use crate::words::{LogEntry, Move, MoveLog, Word};

/// An exact rational serialized as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub BigRational);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        BigRational::from_str(&s).map(Rational).map_err(serde::de::Error::custom)
    }
}

/// Nonzero entries of a weight vector by vertex name.
pub fn weight_map(g: &Graph, f: &WeightVector) -> BTreeMap<String, i64> {
    f.as_slice().iter().enumerate().filter(|(_, &k)| k != 0).map(|(v, &k)| (g.name(v).to_string(), k)).collect()
}

fn edge_names(g: &Graph, edges: &[Edge]) -> Vec<String> {
    edges.iter().map(|&e| g.edge_name(e)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsReport {
    pub edges: Vec<String>,
    pub pairs: Vec<String>,
}

impl GeneratorsReport {
    pub fn new(g: &Graph, gens: &[Generator]) -> Self {
        let mut r = GeneratorsReport { edges: Vec::new(), pairs: Vec::new() };
        for x in gens {
            match x {
                Generator::Pair(_) => r.pairs.push(x.token(g)),
                _ => r.edges.push(x.token(g)),
            }
        }
        r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub kind: String,
    pub values: BTreeMap<String, Rational>,
}

impl CertificateReport {
    pub fn new(g: &Graph, c: &FarkasCertificate) -> Self {
        let kind = match c.kind {
            CertificateKind::Cone => "cone",
            CertificateKind::Parity => "parity",
        };
        let values = c
            .values
            .iter()
            .enumerate()
            .filter(|(_, y)| *y != &BigRational::from_integer(0.into()))
            .map(|(v, y)| (g.name(v).to_string(), Rational(y.clone())))
            .collect();
        CertificateReport { kind: kind.into(), values }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub weight: BTreeMap<String, i64>,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub weight: BTreeMap<String, i64>,
    pub word: String,
    pub edges: usize,
    pub pairs: usize,
}

impl DecompositionReport {
    pub fn new(g: &Graph, f: &WeightVector, d: &Decomposition) -> Self {
        let word = Word::from_generators(g.vertex_count(), d.generators());
        DecompositionReport {
            weight: weight_map(g, f),
            word: word.display(g),
            edges: d.edges.values().map(|&k| k as usize).sum(),
            pairs: d.pairs.values().map(|&k| k as usize).sum(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveReport {
    pub kind: String,
    pub reversed: bool,
    pub source: String,
    pub target: String,
    pub support: String,
}

impl MoveReport {
    pub fn new(g: &Graph, m: &Move) -> Self {
        MoveReport {
            kind: m.kind().name().into(),
            reversed: m.is_reversed(),
            source: m.source().display(g),
            target: m.target().display(g),
            support: m.support().display(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "entry", rename_all = "lowercase")]
pub enum LogEntryReport {
    Move(MoveReport),
    Cancel { common: String },
}

pub fn log_entries(g: &Graph, log: &MoveLog) -> Vec<LogEntryReport> {
    log.entries
        .iter()
        .map(|e| match e {
            LogEntry::Move(m) => LogEntryReport::Move(MoveReport::new(g, m)),
            LogEntry::Cancel(w) => LogEntryReport::Cancel { common: w.display(g) },
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeReport {
    pub input: String,
    pub standard: String,
    pub log: Vec<LogEntryReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub left: String,
    pub right: String,
    pub equal: bool,
    pub moves: usize,
    pub log: Vec<LogEntryReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub class: String,
    pub left: String,
    pub right: String,
}

impl RelationReport {
    pub fn new(g: &Graph, r: &BinomialRelation) -> Self {
        RelationReport { class: r.class().name().into(), left: r.left().display(g), right: r.right().display(g) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleReport {
    pub count: usize,
    pub subgraphs: Vec<PrimeIdealDescriptor>,
}

impl AdmissibleReport {
    pub fn new(g: &Graph, ks: &[AdmissibleSubgraph]) -> Self {
        let subgraphs = ks
            .iter()
            .map(|k| PrimeIdealDescriptor {
                subgraph: edge_names(g, k.edges()),
                generators: g.edges().iter().filter(|e| !k.contains(**e)).map(|&e| g.edge_name(e)).collect(),
            })
            .collect();
        AdmissibleReport { count: ks.len(), subgraphs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentReport {
    pub subgraph: Vec<String>,
    pub generators: Vec<String>,
    pub verified: bool,
}

impl LaurentReport {
    pub fn new(g: &Graph, k: &AdmissibleSubgraph, gens: &[Edge], verified: bool) -> Self {
        LaurentReport { subgraph: edge_names(g, k.edges()), generators: edge_names(g, gens), verified }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::membership;

    fn round_trip<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(x: &T) {
        let s = serde_json::to_string(x).unwrap();
        let back: T = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, x);
    }

    #[test]
    fn reports_round_trip() {
        let g = Graph::parse("a b\nb c\nc d\nd a").unwrap();
        let f = WeightVector::parse(&g, "a=1,c=1").unwrap();
        let cert = membership(&g, &f).unwrap().unwrap_err();
        let r = MembershipReport {
            weight: weight_map(&g, &f),
            member: false,
            certificate: Some(CertificateReport::new(&g, &cert)),
        };
        round_trip(&r);
        let half = Rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(serde_json::to_string(&half).unwrap(), "\"1/2\"");
        round_trip(&half);
        round_trip(&GeneratorsReport::new(&g, &crate::generators::minimal_generators(&g)));
    }
}
