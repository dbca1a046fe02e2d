//! The finite-type decision: every chordless cycle of the diagram must be
//! cyclically oriented and the sign-determined companion must be positive.
//! An explorer over the mutation class serves as an independent oracle.

mod explore;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::diagram::{ChordlessCycle, Diagram};
use crate::error::{Error, Result};
use crate::matrix::{first_nonpositive_leading_minor, BigIntRepr, SkewSymmetrizableMatrix};
use crate::orient::assign_signs;
use crate::quasi_cartan::{check_cycle_sign_condition, companion_from_signs, is_positive, CompanionCertificate};
use crate::roots::{cartan_killing_type, CartanKillingType};

pub use explore::{
    class_type_via_cartan_member, explore_class, explore_class_members, oracle_finite_type, Caps,
    ExplorationResult, ExplorationStatus, ExplorationWitness, OracleVerdict, DEFAULT_MAX_VISITED,
};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Finite,
    NotFinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Witness {
    OrientedCyclesAndPositiveCompanion {
        certificate: CompanionCertificate,
    },
    NonOrientableCycle {
        cycle: ChordlessCycle,
    },
    NonPositiveCompanion {
        /// Size of the first leading principal minor of `DA` that is not
        /// positive.
        minor_index: usize,
        #[serde(serialize_with = "ser_bigint")]
        minor_value: BigInt,
        certificate: CompanionCertificate,
    },
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    BigIntRepr(v).serialize(s)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Timings {
    pub stages: Vec<(&'static str, Duration)>,
}

impl Serialize for Timings {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.stages.len()))?;
        for (name, d) in &self.stages {
            map.serialize_entry(name, &(d.as_micros() as u64))?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionReport {
    pub schema_version: u32,
    pub verdict: Verdict,
    pub cartan_type: Option<CartanKillingType>,
    pub witness: Witness,
    /// Microseconds per stage.
    pub timings: Timings,
}

impl RecognitionReport {
    /// Re-checks the witness against `b` with the module operations.
    pub fn verify(&self, b: &SkewSymmetrizableMatrix) -> bool {
        match (&self.verdict, &self.witness) {
            (Verdict::Finite, Witness::OrientedCyclesAndPositiveCompanion { certificate }) => {
                &certificate.source == b
                    && certificate.verify()
                    && is_positive(&certificate.companion)
                    && check_cycle_sign_condition(&certificate.companion).is_none()
                    && self.cartan_type.as_ref()
                        == cartan_killing_type(&certificate.companion).ok().as_ref()
            }
            (Verdict::NotFinite, Witness::NonOrientableCycle { cycle }) => {
                let d = Diagram::of_skew(b);
                d.graph().is_chordless_cycle(cycle.vertices()) && !d.is_cyclically_oriented(cycle)
            }
            (
                Verdict::NotFinite,
                Witness::NonPositiveCompanion {
                    minor_index,
                    minor_value,
                    certificate,
                },
            ) => {
                &certificate.source == b
                    && certificate.verify()
                    && first_nonpositive_leading_minor(&certificate.companion.symmetrized())
                        == Some((*minor_index, minor_value.clone()))
            }
            _ => false,
        }
    }
}

struct Stopwatch {
    last: Instant,
    timings: Timings,
}

impl Stopwatch {
    fn new() -> Self {
        Self {
            last: Instant::now(),
            timings: Timings::default(),
        }
    }

    fn lap(&mut self, name: &'static str) {
        let now = Instant::now();
        self.timings.stages.push((name, now - self.last));
        self.last = now;
    }
}

/// Decides finite type. The diagram's own arrows must make every chordless
/// cycle cyclically oriented; then signs with product `-1` around each
/// chordless cycle give a companion, whose positivity settles the verdict.
pub fn recognize(b: &SkewSymmetrizableMatrix) -> RecognitionReport {
    let mut clock = Stopwatch::new();
    let diagram = Diagram::of_skew(b);
    clock.lap("diagram");
    let cycles = diagram.chordless_cycles();
    let bad = cycles.iter().find(|c| !diagram.is_cyclically_oriented(c)).cloned();
    clock.lap("cycles");
    if let Some(cycle) = bad {
        return RecognitionReport {
            schema_version: REPORT_SCHEMA_VERSION,
            verdict: Verdict::NotFinite,
            cartan_type: None,
            witness: Witness::NonOrientableCycle { cycle },
            timings: clock.timings,
        };
    }
    // the diagram's arrows orient every chordless cycle, so the underlying
    // graph is cyclically orientable and signs exist
    let signs = assign_signs(&diagram.graph()).expect("cyclically oriented diagram admits signs");
    clock.lap("signs");
    let certificate = companion_from_signs(b, &signs).expect("signs cover the diagram");
    clock.lap("companion");
    let minor = first_nonpositive_leading_minor(&certificate.companion.symmetrized());
    clock.lap("positivity");
    if let Some((minor_index, minor_value)) = minor {
        return RecognitionReport {
            schema_version: REPORT_SCHEMA_VERSION,
            verdict: Verdict::NotFinite,
            cartan_type: None,
            witness: Witness::NonPositiveCompanion {
                minor_index,
                minor_value,
                certificate,
            },
            timings: clock.timings,
        };
    }
    let cartan_type = cartan_killing_type(&certificate.companion).expect("positive companion has a type");
    clock.lap("type");
    RecognitionReport {
        schema_version: REPORT_SCHEMA_VERSION,
        verdict: Verdict::Finite,
        cartan_type: Some(cartan_type),
        witness: Witness::OrientedCyclesAndPositiveCompanion { certificate },
        timings: clock.timings,
    }
}

/// Cartan-Killing type of the mutation class of `b`.
pub fn class_type(b: &SkewSymmetrizableMatrix) -> Result<CartanKillingType> {
    recognize(b).cartan_type.ok_or(Error::NotFinite)
}
