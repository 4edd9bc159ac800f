//! Known Kähler–Einstein del Pezzo orbifolds, hence Sasakian–Einstein links.
//!
//! These are existence results that cannot be computed here; an entry is a
//! citation attached to a weight system and monomial support. The file format
//! is line-delimited JSON, one object per entry, with keys `weights`, `degree`,
//! `support`, `tag`, `citation`, and optionally `negative` (an entry recording
//! an obstruction) and `reference` (published invariant values that reports
//! compare against).

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbifold::{fano, pair_well_formed};
use crate::poly::{Monomial, WeightSystem, WeightedPolynomial};

/// Invariant values published alongside an entry.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceValues {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor_number: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbifold_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smale_k: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegistryEntry {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub support: Vec<Vec<u32>>,
    pub tag: String,
    pub citation: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negative: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceValues>,
}

impl RegistryEntry {
    fn polynomial(&self) -> Result<WeightedPolynomial> {
        let ambient = WeightSystem::from_raw(&self.weights, self.degree)?;
        WeightedPolynomial::with_degree(
            self.support.iter().map(|e| Monomial::new(e.clone())),
            &ambient,
        )
    }

    /// Same weights, degree and support after some relabeling of variables.
    pub fn matches(&self, f: &WeightedPolynomial) -> bool {
        if self.weights.len() != f.num_vars()
            || self.degree != f.degree()
            || self.support.len() != f.len()
        {
            return false;
        }
        let mut own: Vec<Vec<u32>> = self.support.clone();
        own.sort();
        (0..f.num_vars()).permutations(f.num_vars()).any(|perm| {
            if perm.iter().enumerate().any(|(i, &p)| f.weights()[p] != self.weights[i]) {
                return false;
            }
            let mut theirs: Vec<Vec<u32>> = f
                .support()
                .iter()
                .map(|m| m.permuted(&perm).exponents().to_vec())
                .collect();
            theirs.sort();
            theirs == own
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Registry {
    entries: Vec<RegistryEntry>,
}

const BUILTIN: &str = include_str!("../data/registry.jsonl");

impl Registry {
    /// The three Demailly–Kollár del Pezzo surfaces.
    pub fn builtin() -> Registry {
        Registry::from_jsonl(BUILTIN).expect("built-in registry is valid")
    }

    pub fn empty() -> Registry {
        Registry {
            entries: Vec::new(),
        }
    }

    /// Parses and validates a registry file. Positive entries must be Fano
    /// and well-formed.
    pub fn from_jsonl(text: &str) -> Result<Registry> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let entry: RegistryEntry =
                serde_json::from_str(line).map_err(|e| Error::Registry {
                    line: line_no,
                    message: e.to_string(),
                })?;
            let registry_err = |message: String| Error::Registry {
                line: line_no,
                message,
            };
            let f = entry.polynomial().map_err(|e| registry_err(e.to_string()))?;
            if !entry.negative {
                let is_fano = fano(f.ambient()).is_fano;
                let well_formed =
                    pair_well_formed(&f).map_err(|e| registry_err(e.to_string()))?;
                if !(is_fano && well_formed) {
                    return Err(registry_err(format!(
                        "entry {} is not a Fano well-formed candidate",
                        entry.tag
                    )));
                }
            }
            entries.push(entry);
        }
        Ok(Registry { entries })
    }

    pub fn load(path: &std::path::Path) -> Result<Registry> {
        Registry::from_jsonl(&std::fs::read_to_string(path)?)
    }

    pub fn to_jsonl(&self) -> String {
        self.entries
            .iter()
            .map(|e| serde_json::to_string(e).expect("registry entries serialize") + "\n")
            .collect()
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn lookup(&self, f: &WeightedPolynomial) -> Option<&RegistryEntry> {
        self.entries.iter().find(|e| e.matches(f))
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{quasi_degree, Weights};

    fn poly(w: &[u64], monos: &[&[u32]]) -> WeightedPolynomial {
        quasi_degree(
            monos.iter().map(|e| Monomial::new(e.to_vec())),
            &Weights::new(w).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn builtin_has_three_entries() {
        let r = Registry::builtin();
        let tags: Vec<_> = r.entries().iter().map(|e| e.tag.as_str()).collect();
        assert_eq!(tags, vec!["DK-1", "DK-2", "DK-3"]);
    }

    #[test]
    fn lookup_up_to_permutation() {
        let r = Registry::builtin();
        let f60 = poly(
            &[9, 15, 17, 20],
            &[&[5, 1, 0, 0], &[1, 0, 3, 0], &[0, 4, 0, 0], &[0, 0, 0, 3]],
        );
        assert_eq!(r.lookup(&f60).map(|e| e.tag.as_str()), Some("DK-1"));
        let swapped = f60.permuted(&[3, 2, 1, 0]);
        assert_eq!(r.lookup(&swapped).map(|e| e.tag.as_str()), Some("DK-1"));
        let f = poly(
            &[13, 35, 81, 128],
            &[&[17, 1, 0, 0], &[1, 0, 3, 0], &[0, 5, 1, 0], &[0, 0, 0, 2]],
        );
        assert_eq!(r.lookup(&f).map(|e| e.tag.as_str()), Some("DK-3"));
        let quadric = poly(
            &[1, 1, 1, 1],
            &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]],
        );
        assert!(r.lookup(&quadric).is_none());
    }

    #[test]
    fn rejects_invalid_entries() {
        let bad = r#"{"weights":[1,1,1,1],"degree":5,"support":[[5,0,0,0],[0,5,0,0],[0,0,5,0],[0,0,0,5]],"tag":"X","citation":"quintic"}"#;
        assert!(matches!(
            Registry::from_jsonl(bad),
            Err(Error::Registry { line: 1, .. })
        ));
        let negative = r#"{"weights":[1,1,1,1],"degree":5,"support":[[5,0,0,0],[0,5,0,0],[0,0,5,0],[0,0,0,5]],"tag":"X","citation":"quintic","negative":true}"#;
        assert_eq!(Registry::from_jsonl(negative).unwrap().entries().len(), 1);
        assert!(matches!(
            Registry::from_jsonl("{not json"),
            Err(Error::Registry { line: 1, .. })
        ));
    }

    #[test]
    fn jsonl_roundtrip() {
        let r = Registry::builtin();
        assert_eq!(Registry::from_jsonl(&r.to_jsonl()).unwrap(), r);
    }
}
