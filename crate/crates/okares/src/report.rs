//! JSON forms of non-degeneracy verdicts and family reports.

use okares_core::catalog::FamilyReport;
use okares_core::lattice::LatVec;
use okares_core::nondeg::{Certificate, DegenerateEvidence, NondegVerdict};
use okares_core::poly::MultiPoly;
use serde_json::{json, Value};

use crate::formats::graph_value;

fn points(face: &[LatVec]) -> Value {
    Value::from(face.iter().map(|p| p.0.to_vec()).collect::<Vec<_>>())
}

fn polys(ps: &[MultiPoly]) -> Value {
    Value::from(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::Monomial => json!({ "kind": "monomial" }),
        Certificate::CommonGcd { system, gcd } => json!({
            "kind": "gcd",
            "system": polys(system),
            "gcd": gcd.to_string(),
        }),
        Certificate::Resultants { var, resultants, gcd } => json!({
            "kind": "resultants",
            "eliminated": var,
            "resultants": polys(resultants),
            "gcd": gcd.to_string(),
        }),
    }
}

pub fn verdict_value(v: &NondegVerdict) -> Value {
    match v {
        NondegVerdict::Nondegenerate { certificates } => json!({
            "verdict": "nondegenerate",
            "certificates": certificates
                .iter()
                .map(|(face, c)| json!({ "face": points(face), "certificate": certificate(c) }))
                .collect::<Vec<_>>(),
        }),
        NondegVerdict::Degenerate { face, evidence } => {
            let evidence = match evidence {
                DegenerateEvidence::Witness { point } => json!({
                    "kind": "witness",
                    "point": point.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
                DegenerateEvidence::ReducedWitness { point } => json!({
                    "kind": "reduced_witness",
                    "point": point.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
                DegenerateEvidence::CommonFactor { factor } => json!({
                    "kind": "common_factor",
                    "factor": factor.to_string(),
                }),
            };
            json!({ "verdict": "degenerate", "face": points(face), "evidence": evidence })
        }
        NondegVerdict::Unknown { face, evidence } => json!({
            "verdict": "unknown",
            "face": points(face),
            "mod_p": evidence
                .iter()
                .map(|e| json!({ "prime": e.prime, "solutions": e.solutions, "sample": e.sample }))
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn family_value(r: &FamilyReport) -> Value {
    json!({
        "family": r.family.to_string(),
        "form": r.form.to_string(),
        "pass": r.passed(),
        "graph_match": r.graph_matches,
        "rational": r.rational,
        "multiplicity": r.multiplicity,
        "blowdowns": r.blowdowns,
        "expected_blowdowns": r.expected_blowdowns,
        "copies_match_relation": r.copies_match_relation,
        "nondegenerate": verdict_value(&r.nondegenerate)["verdict"],
        "oka_vertices": r.oka.graph.len(),
        "graph": graph_value(&r.minimal),
    })
}
