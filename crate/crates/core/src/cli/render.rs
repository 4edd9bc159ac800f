//! Text and JSON renderings of an [`InvariantReport`].
//!
//! The JSON document has the top-level keys `input`, `flags`, `invariants`,
//! `strata`, `classification` and `provenance`, always in that order. Integers
//! that may exceed 2^53 (coefficients of `Δ(t)`) are written as decimal strings
//! under `*_str` keys; the plain numeric array is added only when every entry
//! is exactly representable as a double.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbifold::{Incidence, TorsionStatus};
use crate::report::{support_vectors, InvariantReport, Provenance, SeStatus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub input: InputJson,
    pub flags: FlagsJson,
    pub invariants: InvariantsJson,
    pub strata: Option<StrataJson>,
    pub classification: ClassificationJson,
    pub provenance: ProvenanceJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputJson {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub polynomial: String,
    pub support: Vec<Vec<u32>>,
    /// Canonical variable `i` is input variable `permutation[i]`.
    pub permutation: Vec<usize>,
    pub canonical_weights: Vec<u64>,
    pub canonical_polynomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsJson {
    pub normalized: bool,
    pub space_well_formed: bool,
    pub divisibility_ok: bool,
    pub pair_well_formed: Option<bool>,
    pub fano: bool,
    pub fano_index: i64,
    pub every_variable_present: bool,
    pub isolated_necessary_condition: bool,
    pub isolatedness_assumed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorTermJson {
    pub index: u64,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorJson {
    pub rendered: String,
    pub terms: Vec<DivisorTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub j: u64,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub factored: String,
    pub factors: Vec<FactorJson>,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<i64>>,
    pub coefficients_str: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeJson {
    pub p: usize,
    pub q: usize,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoincareJson {
    pub top_degree: usize,
    pub coefficients: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MiddleBettiJson {
    pub divisor_route: u64,
    pub hodge_route: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsJson {
    pub milnor_number: u64,
    pub characteristic_divisor: DivisorJson,
    pub characteristic_polynomial: PolynomialJson,
    pub middle_betti: MiddleBettiJson,
    pub b2: Option<u64>,
    pub hodge_numbers: Vec<HodgeJson>,
    pub poincare_series: PoincareJson,
    pub signature: Option<i64>,
    pub genus: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumJson {
    pub indices: Vec<usize>,
    pub isotropy_order: u64,
    pub incidence: Incidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrataJson {
    pub items: Vec<StratumJson>,
    pub orbifold_order: u64,
    pub torsion_status: Option<TorsionStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationJson {
    pub smale_k: Option<u64>,
    pub diffeomorphism_type: Option<String>,
    pub se_status: SeStatus,
    pub registry_tag: Option<String>,
    pub citation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceJson {
    pub quantities: Vec<Provenance>,
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
}

fn too_large(what: &str) -> Error {
    Error::ConsistencyFailure {
        check: "JSON rendering".into(),
        left: what.to_string(),
        right: "a 64-bit integer".into(),
    }
}

impl ReportJson {
    pub fn from_report(r: &InvariantReport) -> Result<ReportJson> {
        let terms = r
            .divisor
            .integer_terms()?
            .into_iter()
            .rev()
            .map(|(n, c)| {
                Ok(DivisorTermJson {
                    index: n.to_u64().ok_or_else(|| too_large("divisor index"))?,
                    coefficient: c.to_i64().ok_or_else(|| too_large("divisor coefficient"))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let coefficients_str: Vec<String> =
            r.expanded.coefficients().iter().map(|c| c.to_string()).collect();
        let coefficients = r.expanded.fits_in_f64().then(|| {
            r.expanded
                .coefficients()
                .iter()
                .map(|c| c.to_i64().unwrap_or_default())
                .collect()
        });
        Ok(ReportJson {
            input: InputJson {
                weights: r.input.weights().to_vec(),
                degree: r.input.degree(),
                polynomial: r.input.to_string(),
                support: support_vectors(&r.input),
                permutation: r.permutation.clone(),
                canonical_weights: r.canonical.weights().to_vec(),
                canonical_polynomial: r.canonical.to_string(),
            },
            flags: FlagsJson {
                normalized: r.flags.normalized,
                space_well_formed: r.flags.space_well_formed,
                divisibility_ok: r.flags.divisibility_ok,
                pair_well_formed: r.flags.pair_well_formed,
                fano: r.flags.fano,
                fano_index: r.flags.fano_index,
                every_variable_present: r.flags.every_variable_present,
                isolated_necessary_condition: r.flags.isolated_necessary_condition,
                isolatedness_assumed: r.flags.isolatedness_assumed,
            },
            invariants: InvariantsJson {
                milnor_number: r.milnor_number,
                characteristic_divisor: DivisorJson {
                    rendered: r.divisor.render(),
                    terms,
                },
                characteristic_polynomial: PolynomialJson {
                    factored: r.factored.to_string(),
                    factors: r
                        .factored
                        .factors()
                        .iter()
                        .rev()
                        .map(|(&j, &exponent)| FactorJson { j, exponent })
                        .collect(),
                    degree: r.expanded.degree().unwrap_or(0),
                    coefficients,
                    coefficients_str,
                },
                middle_betti: MiddleBettiJson {
                    divisor_route: r.betti_divisor,
                    hodge_route: r.betti_hodge,
                },
                b2: r.b2(),
                hodge_numbers: r
                    .hodge
                    .iter()
                    .map(|h| HodgeJson {
                        p: h.p,
                        q: h.q,
                        value: h.value,
                    })
                    .collect(),
                poincare_series: PoincareJson {
                    top_degree: r.poincare.top_degree(),
                    coefficients: r.poincare.coefficients().to_vec(),
                },
                signature: r.signature,
                genus: r.genus,
            },
            strata: match (&r.strata, r.orbifold_order) {
                (Some(items), Some(order)) => Some(StrataJson {
                    items: items
                        .iter()
                        .map(|s| StratumJson {
                            indices: s.indices.clone(),
                            isotropy_order: s.isotropy_order,
                            incidence: s.incidence,
                        })
                        .collect(),
                    orbifold_order: order,
                    torsion_status: r.torsion,
                }),
                _ => None,
            },
            classification: ClassificationJson {
                smale_k: r.smale.map(|k| k.0),
                diffeomorphism_type: r.smale.map(|k| k.to_string()),
                se_status: r.se_status,
                registry_tag: r.registry_hit.as_ref().map(|h| h.tag.clone()),
                citation: r.registry_hit.as_ref().map(|h| h.citation.clone()),
            },
            provenance: ProvenanceJson {
                quantities: r.provenance.clone(),
                assumptions: r.assumptions.clone(),
                notes: r.notes.clone(),
            },
        })
    }
}

pub fn render_json(r: &InvariantReport) -> Result<String> {
    let doc = ReportJson::from_report(r)?;
    Ok(serde_json::to_string_pretty(&doc).expect("report serializes"))
}

pub fn render_json_line(r: &InvariantReport) -> Result<String> {
    let doc = ReportJson::from_report(r)?;
    Ok(serde_json::to_string(&doc).expect("report serializes"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(r: &InvariantReport) -> String {
    let mut s = String::new();
    let derived = |q: &str| -> &'static str {
        match r.provenance.iter().find(|p| p.quantity == q) {
            Some(p) if p.source == crate::report::Source::Reference => " (matches reference)",
            Some(_) => " (derived)",
            None => "",
        }
    };
    let w: Vec<String> = r.canonical.weights().iter().map(|w| w.to_string()).collect();
    let _ = writeln!(s, "weights: ({})  degree: {}", w.join(", "), r.canonical.degree());
    let _ = writeln!(s, "polynomial: {}", r.canonical);
    if r.permutation.iter().enumerate().any(|(i, &p)| i != p) {
        let _ = writeln!(s, "input relabeled: canonical z_i = input z_perm[i], perm = {:?}", r.permutation);
    }
    let f = &r.flags;
    let _ = writeln!(
        s,
        "well-formed space: {}  divisibility: {}  well-formed pair: {}",
        yes_no(f.space_well_formed),
        yes_no(f.divisibility_ok),
        f.pair_well_formed.map_or("n/a", yes_no)
    );
    let _ = writeln!(s, "Fano: {}  index |w|-d = {}", yes_no(f.fano), f.fano_index);
    let _ = writeln!(s, "Milnor number: {}{}", r.milnor_number, derived("milnor_number"));
    let _ = writeln!(s, "characteristic divisor: {}", r.divisor);
    let _ = writeln!(s, "characteristic polynomial: {}", r.factored);
    let _ = writeln!(
        s,
        "middle Betti number: {} (divisor) / {} (Hodge){}",
        r.betti_divisor,
        r.betti_hodge,
        derived("b2")
    );
    let hodge: Vec<String> = r
        .hodge
        .iter()
        .map(|h| format!("h^{{{},{}}}_0={}", h.p, h.q, h.value))
        .collect();
    let _ = writeln!(s, "primitive Hodge numbers: {}", hodge.join(" "));
    if let Some(tau) = r.signature {
        let _ = writeln!(s, "signature: {tau}{}", derived("signature"));
    }
    if let Some(g) = r.genus {
        let _ = writeln!(s, "branch curve genus: {g}{}", derived("genus"));
    }
    if let Some(strata) = &r.strata {
        if strata.is_empty() {
            let _ = writeln!(s, "singular strata: none");
        } else {
            let items: Vec<String> = strata
                .iter()
                .map(|st| {
                    let idx: Vec<String> = st.indices.iter().map(|i| i.to_string()).collect();
                    format!("{{{}}} order {} {}", idx.join(","), st.isotropy_order, st.incidence)
                })
                .collect();
            let _ = writeln!(s, "singular strata: {}", items.join("; "));
        }
    }
    if let Some(order) = r.orbifold_order {
        let _ = writeln!(s, "orbifold order: {order}{}", derived("orbifold_order"));
    }
    if let Some(t) = r.torsion {
        let _ = writeln!(s, "torsion of H2: {t}");
    }
    match &r.registry_hit {
        Some(hit) => {
            let _ = writeln!(s, "SE status: {} ({}: {})", r.se_status, hit.tag, hit.citation);
        }
        None => {
            let _ = writeln!(s, "SE status: {}", r.se_status);
        }
    }
    for a in &r.assumptions {
        let _ = writeln!(s, "assumption: {a}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    let _ = writeln!(s, "{}", r.diffeomorphism_line());
    s
}

/// Re-renders a JSON report after parsing it back.
pub fn reformat_json(text: &str) -> Result<String> {
    let doc: ReportJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
        position: e.column(),
        message: e.to_string(),
    })?;
    Ok(serde_json::to_string_pretty(&doc).expect("report serializes"))
}
