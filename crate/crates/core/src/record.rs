//! Stable machine-readable output.
//!
//! Every integer that can grow beyond 53 bits is written as a decimal string.
//! Field order in each struct is the order on the wire.

use serde::{Deserialize, Serialize};

use crate::certify::{Certificate, Condition, VerifyOutcome};
use crate::family::{TripleCandidate, Variant};
use crate::search::{FoundTriple, SearchResult};
use crate::{Error, Int, Result};

pub const SCHEMA_VERSION: &str = "1";

/// Upper limit on accepted decimal literals; longer inputs are rejected rather than parsed.
pub const MAX_DIGITS: usize = 100_000;

/// Parses a base-10 integer: an optional `-` followed by ASCII digits, nothing else.
pub fn parse_int(s: &str) -> Result<Int> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() {
        return Err(Error::Parse(format!("`{s}` is not a decimal integer")));
    }
    if digits.len() > MAX_DIGITS {
        return Err(Error::Parse(format!("integer literal longer than {MAX_DIGITS} digits")));
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("`{s}` is not a decimal integer")));
    }
    s.parse::<Int>().map_err(|e| Error::Parse(format!("`{s}`: {e}")))
}

/// `serde(with)` adapter writing an [`Int`] as a decimal string.
pub mod decimal {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::Int;

    pub fn serialize<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_int(&s).map_err(D::Error::custom)
    }
}

/// Like [`decimal`] for optional values (`null` when absent).
pub mod decimal_opt {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::Int;

    pub fn serialize<S: Serializer>(v: &Option<Int>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Int>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| super::parse_int(&s).map_err(D::Error::custom))
            .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord<P> {
    pub schema_version: String,
    pub command: String,
    pub payload: P,
}

impl<P> OutputRecord<P> {
    pub fn new(command: &str, payload: P) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION.to_string(), command: command.to_string(), payload }
    }
}

/// One family member, as emitted by `gen`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TripleRecord {
    #[serde(with = "decimal")]
    pub n: Int,
    pub variant: Variant,
    #[serde(with = "decimal")]
    pub x: Int,
    #[serde(with = "decimal")]
    pub y: Int,
    #[serde(with = "decimal")]
    pub a: Int,
    #[serde(with = "decimal")]
    pub r: Int,
    #[serde(with = "decimal")]
    pub b: Int,
    #[serde(with = "decimal")]
    pub c: Int,
    #[serde(with = "decimal_opt")]
    pub s: Option<Int>,
    pub admissible: bool,
    pub certificate: Option<Certificate>,
}

impl From<&TripleCandidate> for TripleRecord {
    fn from(t: &TripleCandidate) -> Self {
        TripleRecord {
            n: Int::from(t.n),
            variant: t.variant,
            x: t.x.clone(),
            y: t.y.clone(),
            a: t.a.clone(),
            r: t.r.clone(),
            b: t.b.clone(),
            c: t.c.clone(),
            s: t.s.clone(),
            admissible: t.admissible,
            certificate: t.certificate(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenPayload {
    #[serde(with = "decimal")]
    pub from: Int,
    #[serde(with = "decimal")]
    pub to: Int,
    pub variant: String,
    pub triples: Vec<TripleRecord>,
}

/// One census entry, as emitted by `search`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    #[serde(with = "decimal")]
    pub a: Int,
    #[serde(with = "decimal")]
    pub b: Int,
    #[serde(with = "decimal")]
    pub c: Int,
    pub certificate: Certificate,
}

impl From<&FoundTriple> for CensusRecord {
    fn from(t: &FoundTriple) -> Self {
        CensusRecord {
            a: Int::from(t.a),
            b: Int::from(t.b),
            c: Int::from(t.c),
            certificate: t.certificate.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub agrees: bool,
    pub oracle_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchPayload {
    #[serde(with = "decimal")]
    pub bound: Int,
    pub pairs_scanned: u64,
    pub candidates_tested: u64,
    pub count: usize,
    pub triples: Vec<CensusRecord>,
    pub oracle: Option<OracleCheck>,
}

impl SearchPayload {
    pub fn new(result: &SearchResult, oracle: Option<OracleCheck>) -> Self {
        SearchPayload {
            bound: Int::from(result.bound),
            pairs_scanned: result.stats.pairs_scanned,
            candidates_tested: result.stats.candidates_tested,
            count: result.triples.len(),
            triples: result.triples.iter().map(CensusRecord::from).collect(),
            oracle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub condition: Condition,
    #[serde(with = "decimal")]
    pub value: Int,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyPayload {
    #[serde(with = "decimal")]
    pub a: Int,
    #[serde(with = "decimal")]
    pub b: Int,
    #[serde(with = "decimal")]
    pub c: Int,
    pub ok: bool,
    pub certificate: Option<Certificate>,
    pub failure: Option<Failure>,
}

impl VerifyPayload {
    pub fn new(a: &Int, b: &Int, c: &Int, outcome: &VerifyOutcome) -> Self {
        let (certificate, failure) = match outcome {
            VerifyOutcome::Ok(cert) => (Some(cert.clone()), None),
            VerifyOutcome::Failed { condition, value } => {
                (None, Some(Failure { condition: *condition, value: value.clone() }))
            }
        };
        VerifyPayload { a: a.clone(), b: b.clone(), c: c.clone(), ok: outcome.is_ok(), certificate, failure }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeqValue {
    #[serde(with = "decimal")]
    pub n: Int,
    #[serde(with = "decimal")]
    pub value: Int,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeqPayload {
    pub sequence: String,
    pub values: Vec<SeqValue>,
}

/// The `a, b, c` of any record carrying triples (`gen` or `search` output).
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct TripleAbc {
    #[serde(with = "decimal")]
    pub a: Int,
    #[serde(with = "decimal")]
    pub b: Int,
    #[serde(with = "decimal")]
    pub c: Int,
    #[serde(default)]
    pub admissible: Option<bool>,
    #[serde(default)]
    pub certificate: Option<Certificate>,
}

#[derive(Deserialize)]
struct TriplesOnly {
    triples: Vec<TripleAbc>,
}

/// Extracts the triples from a serialized `gen` or `search` record.
pub fn decode_triples(json: &str) -> Result<Vec<TripleAbc>> {
    let rec: OutputRecord<TriplesOnly> =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    if rec.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported schema_version `{}`", rec.schema_version)));
    }
    Ok(rec.payload.triples)
}
