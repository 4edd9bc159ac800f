//! Orbifold data of `Z_f ⊂ P(w)`: Fano index, singular strata of the ambient
//! space and how they meet the hypersurface, orbifold order, well-formedness of
//! the pair and the resulting torsion status of `H_2` of the link.
//!
//! The open stratum of a coordinate subset `S` consists of the points whose
//! nonzero coordinates are exactly those in `S`; its isotropy group is cyclic of
//! order `gcd(w_i : i ∈ S)`. Its relation to `Z_f` depends only on the support
//! of `f|_S`: no monomials means the stratum lies in `Z_f`; one monomial has no
//! zeros on the torus; two or more always do (a Laurent polynomial without
//! torus zeros is a unit, i.e. a monomial).

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{divisibility_condition, is_well_formed_space, restrict, WeightSystem, WeightedPolynomial};

/// Largest `n` for which strata incidence is computed.
pub const MAX_STRATA_DIMENSION: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fano {
    pub is_fano: bool,
    /// `|w| - d`
    pub index: i64,
}

pub fn fano(system: &WeightSystem) -> Fano {
    let index = system.total_weight() as i64 - system.degree() as i64;
    Fano {
        is_fano: index > 0,
        index,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Incidence {
    Disjoint,
    Meets,
    Contained,
}

impl Incidence {
    /// `Meets` or `Contained`.
    pub fn meets(self) -> bool {
        self != Incidence::Disjoint
    }
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Incidence::Disjoint => "disjoint",
            Incidence::Meets => "meets",
            Incidence::Contained => "contained",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stratum {
    pub indices: Vec<usize>,
    pub isotropy_order: u64,
    pub incidence: Incidence,
}

impl Stratum {
    /// Complex dimension of the open stratum in `P(w)`.
    pub fn dimension(&self) -> usize {
        self.indices.len() - 1
    }
}

/// Strata with nontrivial isotropy, ordered by size and then lexicographically.
pub fn singular_strata(f: &WeightedPolynomial) -> Result<Vec<Stratum>> {
    let vars = f.num_vars();
    let n = vars - 1;
    if n > MAX_STRATA_DIMENSION {
        return Err(Error::UnsupportedDimension {
            n,
            max: MAX_STRATA_DIMENSION,
        });
    }
    let w = f.weights();
    let mut subsets: Vec<Vec<usize>> = (1u32..(1 << vars) - 1)
        .map(|mask| (0..vars).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut out = Vec::new();
    for indices in subsets {
        let order = indices.iter().fold(0u64, |g, &i| g.gcd(&w[i]));
        if order <= 1 {
            continue;
        }
        let incidence = match restrict(f, &indices)?.len() {
            0 => Incidence::Contained,
            1 => Incidence::Disjoint,
            _ => Incidence::Meets,
        };
        out.push(Stratum {
            indices,
            isotropy_order: order,
            incidence,
        });
    }
    Ok(out)
}

/// lcm of the isotropy orders of the strata meeting `Z_f`.
pub fn orbifold_order(f: &WeightedPolynomial) -> Result<u64> {
    Ok(order_from_strata(&singular_strata(f)?))
}

pub(crate) fn order_from_strata(strata: &[Stratum]) -> u64 {
    strata
        .iter()
        .filter(|s| s.incidence.meets())
        .fold(1u64, |l, s| l.lcm(&s.isotropy_order))
}

/// No singular stratum of codimension 2 in `P(w)` lies inside `Z_f`, and the
/// ambient space itself is well-formed.
pub fn pair_well_formed(f: &WeightedPolynomial) -> Result<bool> {
    let strata = singular_strata(f)?;
    Ok(pair_well_formed_from(f, &strata))
}

pub(crate) fn pair_well_formed_from(f: &WeightedPolynomial, strata: &[Stratum]) -> bool {
    let n = f.num_vars() - 1;
    is_well_formed_space(f.ambient().weights_validated())
        && !strata
            .iter()
            .any(|s| s.indices.len() + 1 == n && s.incidence == Incidence::Contained)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionStatus {
    TorsionFree,
    Unknown,
}

impl fmt::Display for TorsionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorsionStatus::TorsionFree => "torsion_free",
            TorsionStatus::Unknown => "unknown",
        })
    }
}

/// `H_2(L_f, Z)` is torsion-free when the hypersurface is well-formed: the
/// points with nontrivial isotropy then have real codimension at least four in
/// the link.
pub fn torsion_status(f: &WeightedPolynomial) -> Result<TorsionStatus> {
    if f.num_vars() != 4 {
        return Err(Error::WrongDimension {
            expected: 4,
            found: f.num_vars(),
        });
    }
    Ok(if pair_well_formed(f)? && divisibility_condition(f.ambient()) {
        TorsionStatus::TorsionFree
    } else {
        TorsionStatus::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{quasi_degree, Monomial, Weights};

    fn poly(w: &[u64], monos: &[&[u32]]) -> WeightedPolynomial {
        let w = Weights::new(w).unwrap();
        quasi_degree(monos.iter().map(|e| Monomial::new(e.to_vec())), &w).unwrap()
    }

    fn f60() -> WeightedPolynomial {
        poly(
            &[9, 15, 17, 20],
            &[&[5, 1, 0, 0], &[1, 0, 3, 0], &[0, 4, 0, 0], &[0, 0, 0, 3]],
        )
    }

    fn f256_1() -> WeightedPolynomial {
        poly(
            &[11, 49, 69, 128],
            &[&[17, 0, 1, 0], &[1, 5, 0, 0], &[0, 1, 3, 0], &[0, 0, 0, 2]],
        )
    }

    fn f256_2() -> WeightedPolynomial {
        poly(
            &[13, 35, 81, 128],
            &[&[17, 1, 0, 0], &[1, 0, 3, 0], &[0, 5, 1, 0], &[0, 0, 0, 2]],
        )
    }

    fn synthetic() -> WeightedPolynomial {
        // edge {0,1} has isotropy 2 and lies inside Z_f
        poly(&[2, 2, 1, 1], &[&[1, 0, 0, 1], &[0, 1, 0, 1]])
    }

    fn view(strata: &[Stratum]) -> Vec<(Vec<usize>, u64, Incidence)> {
        strata
            .iter()
            .map(|s| (s.indices.clone(), s.isotropy_order, s.incidence))
            .collect()
    }

    #[test]
    fn fano_indices() {
        let ws = |w: &[u64], d| WeightSystem::from_raw(w, d).unwrap();
        assert_eq!(fano(&ws(&[9, 15, 17, 20], 60)), Fano { is_fano: true, index: 1 });
        assert_eq!(fano(&ws(&[11, 49, 69, 128], 256)), Fano { is_fano: true, index: 1 });
        assert_eq!(fano(&ws(&[1, 1, 1, 1], 5)), Fano { is_fano: false, index: -1 });
    }

    #[test]
    fn strata_of_degree_sixty() {
        use Incidence::*;
        assert_eq!(
            view(&singular_strata(&f60()).unwrap()),
            vec![
                (vec![0], 9, Contained),
                (vec![1], 15, Disjoint),
                (vec![2], 17, Contained),
                (vec![3], 20, Disjoint),
                (vec![0, 1], 3, Meets),
                (vec![1, 3], 5, Meets),
            ]
        );
    }

    #[test]
    fn strata_of_degree_256() {
        use Incidence::*;
        assert_eq!(
            view(&singular_strata(&f256_1()).unwrap()),
            vec![
                (vec![0], 11, Contained),
                (vec![1], 49, Contained),
                (vec![2], 69, Contained),
                (vec![3], 128, Disjoint),
            ]
        );
    }

    #[test]
    fn quadric_is_smooth() {
        let q = poly(&[1, 1, 1, 1], &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]);
        assert!(singular_strata(&q).unwrap().is_empty());
        assert_eq!(orbifold_order(&q), Ok(1));
    }

    #[test]
    fn orders() {
        assert_eq!(orbifold_order(&f256_1()), Ok(37191));
        assert_eq!(orbifold_order(&f256_2()), Ok(36855));
        assert_eq!(orbifold_order(&f60()), Ok(765));
    }

    #[test]
    fn pair_well_formedness() {
        assert_eq!(pair_well_formed(&f60()), Ok(true));
        assert_eq!(pair_well_formed(&f256_1()), Ok(true));
        assert_eq!(pair_well_formed(&f256_2()), Ok(true));
        assert_eq!(pair_well_formed(&synthetic()), Ok(false));
    }

    #[test]
    fn torsion() {
        assert_eq!(torsion_status(&f60()), Ok(TorsionStatus::TorsionFree));
        assert_eq!(torsion_status(&f256_1()), Ok(TorsionStatus::TorsionFree));
        assert_eq!(torsion_status(&synthetic()), Ok(TorsionStatus::Unknown));
        let curve = poly(&[2, 3], &[&[3, 0], &[0, 2]]);
        assert!(matches!(torsion_status(&curve), Err(Error::WrongDimension { .. })));
    }

    #[test]
    fn refuses_high_dimension() {
        let f = poly(&[1, 1, 1, 1, 1], &[&[2, 0, 0, 0, 0], &[0, 2, 0, 0, 0]]);
        assert_eq!(
            singular_strata(&f),
            Err(Error::UnsupportedDimension { n: 4, max: 3 })
        );
    }
}
