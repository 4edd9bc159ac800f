//! The full pipeline from a weighted polynomial to an [`InvariantReport`].
//!
//! Variables are relabeled so that weights are nondecreasing before anything
//! is computed; the permutation is recorded and every index in the report
//! (strata in particular) refers to the relabeled variables.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::divisor::Divisor;
use crate::error::{Error, Result, Stage};
use crate::milnor_algebra::{
    betti_from_hodge, genus_branch_curve, hodge_from_series, poincare_series,
    signature_from_series, HodgeNumber, PoincareSeries,
};
use crate::monodromy::{
    characteristic_divisor, expand, middle_betti, milnor_number, to_factored, ExpandedPoly,
    FactoredCharPoly,
};
use crate::orbifold::{
    fano, order_from_strata, pair_well_formed_from, singular_strata, Incidence, Stratum,
    TorsionStatus, MAX_STRATA_DIMENSION,
};
use crate::poly::{divisibility_condition, is_well_formed_space, Monomial, WeightedPolynomial};
use crate::registry::{ReferenceValues, Registry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Largest accepted `n` (number of variables minus one).
    pub max_dimension: usize,
    /// Accept inputs failing the necessary condition for isolatedness.
    pub assume_isolated: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            max_dimension: MAX_STRATA_DIMENSION,
            assume_isolated: true,
        }
    }
}

/// `S^5 # k(S^2 × S^3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmaleType(pub u64);

impl SmaleType {
    /// Connected sum written out, e.g. `(S²×S³) # (S²×S³)`.
    pub fn long_form(&self) -> String {
        match self.0 {
            0 => "S⁵".to_string(),
            k if k <= 4 => vec!["(S²×S³)"; k as usize].join(" # "),
            k => format!("#{k}(S²×S³)"),
        }
    }
}

impl fmt::Display for SmaleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("S⁵"),
            1 => f.write_str("S²×S³"),
            k => write!(f, "#{k}(S²×S³)"),
        }
    }
}

/// A simply connected spin 5-manifold with torsion-free `H_2` is determined by
/// `b_2`.
pub fn smale_type(b2: u64, torsion_free: bool) -> Option<SmaleType> {
    torsion_free.then_some(SmaleType(b2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeStatus {
    #[serde(rename = "known_SE")]
    KnownSe,
    #[serde(rename = "candidate")]
    Candidate,
    #[serde(rename = "obstructed")]
    Obstructed,
    #[serde(rename = "not_fano")]
    NotFano,
    #[serde(rename = "undetermined")]
    Undetermined,
}

impl fmt::Display for SeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeStatus::KnownSe => "known_SE",
            SeStatus::Candidate => "candidate",
            SeStatus::Obstructed => "obstructed",
            SeStatus::NotFano => "not_fano",
            SeStatus::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Matches the value recorded in the registry entry.
    Reference,
    /// Computed here with no reference value available.
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub quantity: String,
    pub value: String,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flags {
    pub normalized: bool,
    pub space_well_formed: bool,
    pub divisibility_ok: bool,
    /// `None` above the strata dimension limit.
    pub pair_well_formed: Option<bool>,
    pub fano: bool,
    pub fano_index: i64,
    pub every_variable_present: bool,
    pub isolated_necessary_condition: bool,
    pub isolatedness_assumed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryHit {
    pub tag: String,
    pub citation: String,
    pub negative: bool,
    pub reference: Option<ReferenceValues>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    /// The polynomial as given.
    pub input: WeightedPolynomial,
    /// Canonical variable `i` is input variable `permutation[i]`.
    pub permutation: Vec<usize>,
    /// The polynomial with nondecreasing weights.
    pub canonical: WeightedPolynomial,
    pub flags: Flags,
    pub milnor_number: u64,
    pub divisor: Divisor,
    pub factored: FactoredCharPoly,
    pub expanded: ExpandedPoly,
    pub poincare: PoincareSeries,
    /// Eigenvalue-1 multiplicity from the divisor; `b_2` for surfaces.
    pub betti_divisor: u64,
    /// Sum of the primitive Hodge numbers.
    pub betti_hodge: u64,
    pub hodge: Vec<HodgeNumber>,
    pub signature: Option<i64>,
    pub genus: Option<u64>,
    pub strata: Option<Vec<Stratum>>,
    pub orbifold_order: Option<u64>,
    pub torsion: Option<TorsionStatus>,
    pub smale: Option<SmaleType>,
    pub se_status: SeStatus,
    pub registry_hit: Option<RegistryHit>,
    pub provenance: Vec<Provenance>,
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
}

impl InvariantReport {
    /// `n`, the number of variables minus one.
    pub fn dimension(&self) -> usize {
        self.canonical.num_vars() - 1
    }

    /// `b_2` of a 5-dimensional link.
    pub fn b2(&self) -> Option<u64> {
        (self.dimension() == 3).then_some(self.betti_divisor)
    }

    pub fn diffeomorphism_line(&self) -> String {
        match (&self.smale, &self.registry_hit) {
            (Some(k), Some(hit)) if !hit.negative => {
                format!("diffeomorphism type: {k} [known SE: {}]", hit.tag)
            }
            (Some(k), _) => format!("diffeomorphism type: {k} (k={})", k.0),
            (None, _) if self.dimension() == 3 => {
                "diffeomorphism type: undetermined (torsion of H2 not certified)".to_string()
            }
            (None, _) => "diffeomorphism type: not classified (link is not 5-dimensional)".to_string(),
        }
    }
}

/// Variables sorted by weight; ties keep input order.
fn canonical_permutation(weights: &[u64]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..weights.len()).collect();
    perm.sort_by_key(|&i| weights[i]);
    perm
}

/// The single variable that occurs in exactly one monomial, as a pure power,
/// if there is exactly one such variable: `f = f_0 + z_j^m`.
fn split_variable(f: &WeightedPolynomial) -> Option<usize> {
    let candidates: Vec<usize> = (0..f.num_vars())
        .filter(|&j| {
            let mut containing = f.support().iter().filter(|m| m.exponents()[j] > 0);
            match (containing.next(), containing.next()) {
                (Some(m), None) => m.pure_power_of() == Some(j),
                _ => false,
            }
        })
        .collect();
    match candidates.as_slice() {
        [j] => Some(*j),
        _ => None,
    }
}

pub fn analyze(f: &WeightedPolynomial, registry: &Registry) -> Result<InvariantReport> {
    analyze_with(f, registry, AnalysisOptions::default())
}

pub fn analyze_with(
    f: &WeightedPolynomial,
    registry: &Registry,
    options: AnalysisOptions,
) -> Result<InvariantReport> {
    let n = f.num_vars() - 1;
    if n > options.max_dimension {
        return Err(Error::UnsupportedDimension {
            n,
            max: options.max_dimension,
        }
        .at(Stage::Input));
    }
    if f.is_empty() {
        return Err(Error::EmptyPolynomial.at(Stage::Input));
    }
    let unpointed = f.first_unpointed_variable();
    if let (Some(variable), false) = (unpointed, options.assume_isolated) {
        return Err(Error::NotIsolated { variable }.at(Stage::Input));
    }

    let permutation = canonical_permutation(f.weights());
    let canonical = f.permuted(&permutation);
    let system = canonical.ambient();

    let mu = milnor_number(system).map_err(|e| e.at(Stage::MilnorNumber))?;
    let (divisor, factored, expanded) = (|| {
        let divisor = characteristic_divisor(system)?;
        let factored = to_factored(&divisor)?;
        let expanded = expand(&factored)?;
        Ok((divisor, factored, expanded))
    })()
    .map_err(|e: Error| e.at(Stage::Monodromy))?;
    let betti_divisor = middle_betti(&divisor).map_err(|e| e.at(Stage::Monodromy))?;

    let poincare = poincare_series(system).map_err(|e| e.at(Stage::MilnorAlgebra))?;
    let hodge = hodge_from_series(system, &poincare);
    let betti_hodge = betti_from_hodge(&hodge);
    let surface = n == 3;
    let signature = surface.then(|| signature_from_series(system, &poincare));
    let genus = match split_variable(&canonical) {
        Some(j) if surface => {
            let rest: Vec<u64> = (0..4).filter(|&i| i != j).map(|i| system.weights()[i]).collect();
            Some(genus_branch_curve(&rest, system.degree()).map_err(|e| e.at(Stage::MilnorAlgebra))?)
        }
        _ => None,
    };

    let fano_data = fano(system);
    let space_well_formed = is_well_formed_space(system.weights_validated());
    let divisibility_ok = divisibility_condition(system);
    let (strata, orbifold_order, pair_wf, torsion) = if n <= MAX_STRATA_DIMENSION {
        let strata = singular_strata(&canonical).map_err(|e| e.at(Stage::Orbifold))?;
        let order = order_from_strata(&strata);
        let pair_wf = pair_well_formed_from(&canonical, &strata);
        let torsion = surface.then_some({
            if pair_wf && divisibility_ok {
                TorsionStatus::TorsionFree
            } else {
                TorsionStatus::Unknown
            }
        });
        (Some(strata), Some(order), Some(pair_wf), torsion)
    } else {
        (None, None, None, None)
    };

    let smale = match (surface, torsion) {
        (true, Some(t)) => smale_type(betti_divisor, t == TorsionStatus::TorsionFree),
        _ => None,
    };
    let hit = registry.lookup(&canonical).map(|e| RegistryHit {
        tag: e.tag.clone(),
        citation: e.citation.clone(),
        negative: e.negative,
        reference: e.reference.clone(),
    });
    let se_status = match (&hit, pair_wf) {
        (Some(h), _) if h.negative => SeStatus::Obstructed,
        (Some(_), _) => SeStatus::KnownSe,
        _ if !fano_data.is_fano => SeStatus::NotFano,
        (None, Some(true)) if space_well_formed => SeStatus::Candidate,
        _ => SeStatus::Undetermined,
    };

    let flags = Flags {
        normalized: true,
        space_well_formed,
        divisibility_ok,
        pair_well_formed: pair_wf,
        fano: fano_data.is_fano,
        fano_index: fano_data.index,
        every_variable_present: f.every_variable_present(),
        isolated_necessary_condition: unpointed.is_none(),
        isolatedness_assumed: options.assume_isolated,
    };

    let mut report = InvariantReport {
        input: f.clone(),
        permutation,
        canonical,
        flags,
        milnor_number: mu,
        divisor,
        factored,
        expanded,
        poincare,
        betti_divisor,
        betti_hodge,
        hodge,
        signature,
        genus,
        strata,
        orbifold_order,
        torsion,
        smale,
        se_status,
        registry_hit: hit,
        provenance: Vec::new(),
        assumptions: Vec::new(),
        notes: Vec::new(),
    };
    annotate(&mut report);
    verify(&report).map_err(|e| e.at(Stage::CrossCheck))?;
    Ok(report)
}

fn annotate(report: &mut InvariantReport) {
    let reference = report
        .registry_hit
        .as_ref()
        .and_then(|h| h.reference.clone())
        .unwrap_or_default();
    let mut provenance = Vec::new();
    let mut record = |quantity: &str, value: Option<String>, known: Option<String>| {
        if let Some(value) = value {
            let source = if known.as_deref() == Some(value.as_str()) {
                Source::Reference
            } else {
                Source::Derived
            };
            provenance.push(Provenance {
                quantity: quantity.to_string(),
                value,
                source,
            });
        }
    };
    let s = |v: Option<u64>| v.map(|x| x.to_string());
    record(
        "milnor_number",
        Some(report.milnor_number.to_string()),
        s(reference.milnor_number),
    );
    record("b2", s(report.b2()), s(reference.b2));
    record(
        "signature",
        report.signature.map(|x| x.to_string()),
        reference.signature.map(|x| x.to_string()),
    );
    record("genus", s(report.genus), s(reference.genus));
    record(
        "orbifold_order",
        s(report.orbifold_order),
        s(reference.orbifold_order),
    );
    record(
        "smale_k",
        s(report.smale.map(|k| k.0)),
        s(reference.smale_k),
    );
    report.provenance = provenance;

    report.assumptions.push(
        "coefficients are generic: only the monomial support enters the computation".into(),
    );
    if report.flags.isolatedness_assumed {
        report
            .assumptions
            .push("the singularity at the origin is assumed isolated".into());
    }
    if !report.flags.isolated_necessary_condition {
        report.notes.push(
            "some variable has no monomial z_i^a or z_i^a z_j; the singularity cannot be isolated"
                .into(),
        );
    }
    if let Some(strata) = &report.strata {
        if strata.iter().any(|s| s.incidence == Incidence::Contained) {
            report.notes.push(
                "a singular stratum lies inside Z_f; its generic isotropy order is used for the orbifold order"
                    .into(),
            );
        }
    }
    if report.smale.is_some() {
        report.notes.push(
            "links of hypersurface singularities are stably parallelizable, hence spin; with torsion-free H2 Smale's classification applies"
                .into(),
        );
        if let Some(hit) = report.registry_hit.as_ref().filter(|h| !h.negative) {
            report.notes.push(format!(
                "Sasakian-Einstein metric certified by registry entry {}",
                hit.tag
            ));
        }
    }
    if report.torsion == Some(TorsionStatus::Unknown) {
        report.notes.push(
            "torsion of H2 not certified; for Sasakian-Einstein links it is known to have the form ⊕(Z_q ⊕ Z_q)"
                .into(),
        );
    }
    if report.flags.fano_index == 1 && report.dimension() == 3 {
        report
            .notes
            .push("Fano index 1: a smooth join with S³ is available".into());
    }
    if report.dimension() == 3
        && report.canonical.weights().iter().all(|&w| w == 1)
        && report.canonical.degree() == 2
    {
        report.notes.push(
            "the link of the quadric cone is the homogeneous Stiefel manifold V_{4,2}(R)".into(),
        );
    }
}

/// Outcome of one cross-module consistency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub left: String,
    pub right: String,
}

impl CheckOutcome {
    fn compare<T: PartialEq + ToString>(name: &'static str, left: T, right: T) -> Self {
        CheckOutcome {
            name,
            passed: left == right,
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub fn into_result(self) -> Result<()> {
        if self.passed {
            Ok(())
        } else {
            Err(Error::ConsistencyFailure {
                check: self.name.to_string(),
                left: self.left,
                right: self.right,
            })
        }
    }
}

/// Independent routes to the same quantity must agree.
pub fn cross_checks(report: &InvariantReport) -> Vec<CheckOutcome> {
    let mu = report.milnor_number;
    let mu_q = BigRational::from_integer(BigInt::from(mu));
    let mut out = vec![
        CheckOutcome::compare(
            "b2 routes",
            report.divisor.unit_coefficient(),
            BigRational::from_integer(BigInt::from(report.betti_hodge)),
        ),
        CheckOutcome::compare("divisor degree vs Milnor number", report.divisor.degree(), mu_q),
        CheckOutcome::compare(
            "root-1 multiplicity of Δ vs b2",
            report.expanded.root_one_multiplicity() as u64,
            report.betti_divisor,
        ),
    ];
    if let (Some(tau), true) = (report.signature, report.flags.fano) {
        out.push(CheckOutcome::compare(
            "signature vs 1 - b2",
            tau,
            1 - report.betti_divisor as i64,
        ));
    }
    out.push(CheckOutcome::compare(
        "Poincaré series total vs Milnor number",
        report.poincare.total(),
        mu,
    ));
    out.push(CheckOutcome::compare(
        "Poincaré duality",
        report.poincare.is_symmetric(),
        true,
    ));
    out.push(CheckOutcome::compare(
        "degree of Δ vs Milnor number",
        report.expanded.degree().unwrap_or(0) as u64,
        mu,
    ));
    out.push(CheckOutcome::compare(
        "|constant term of Δ|",
        report.expanded.constant_term().abs(),
        BigInt::one(),
    ));
    if let Some(hit) = &report.registry_hit {
        if let Some(r) = &hit.reference {
            let pairs: [(&'static str, Option<String>, Option<String>); 6] = [
                (
                    "reference Milnor number",
                    Some(report.milnor_number.to_string()),
                    r.milnor_number.map(|x| x.to_string()),
                ),
                ("reference b2", report.b2().map(|x| x.to_string()), r.b2.map(|x| x.to_string())),
                (
                    "reference signature",
                    report.signature.map(|x| x.to_string()),
                    r.signature.map(|x| x.to_string()),
                ),
                ("reference genus", report.genus.map(|x| x.to_string()), r.genus.map(|x| x.to_string())),
                (
                    "reference orbifold order",
                    report.orbifold_order.map(|x| x.to_string()),
                    r.orbifold_order.map(|x| x.to_string()),
                ),
                (
                    "reference Smale k",
                    report.smale.map(|x| x.0.to_string()),
                    r.smale_k.map(|x| x.to_string()),
                ),
            ];
            for (name, computed, known) in pairs {
                if let Some(known) = known {
                    out.push(CheckOutcome::compare(
                        name,
                        computed.unwrap_or_else(|| "missing".into()),
                        known,
                    ));
                }
            }
        }
    }
    out
}

/// First failing cross-check as an error.
pub fn verify(report: &InvariantReport) -> Result<()> {
    cross_checks(report)
        .into_iter()
        .try_for_each(CheckOutcome::into_result)
}

/// Echo of a monomial support as exponent vectors.
pub fn support_vectors(f: &WeightedPolynomial) -> Vec<Vec<u32>> {
    f.monomials().map(|m: &Monomial| m.exponents().to_vec()).collect()
}
