//! Weight systems and weighted homogeneous polynomials.
//!
//! Coefficients are never stored: a [`WeightedPolynomial`] is its monomial
//! support together with the ambient weights. Every invariant computed by this
//! crate depends only on that support, under the assumption that the actual
//! coefficients are generic.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Normalized positive weights `w_0, ..., w_n` with `gcd = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weights(Vec<u64>);

/// Checks positivity and normalization. Never rescales.
pub fn validate_weights(weights: &[i64]) -> Result<Weights> {
    if weights.len() < 2 {
        return Err(Error::TooFewWeights(weights.len()));
    }
    let mut out = Vec::with_capacity(weights.len());
    for (index, &value) in weights.iter().enumerate() {
        if value < 1 {
            return Err(Error::NonPositiveWeight { index, value });
        }
        out.push(value as u64);
    }
    let g = gcd_all(&out);
    if g != 1 {
        return Err(Error::NotNormalized { gcd: g });
    }
    Ok(Weights(out))
}

impl Weights {
    pub fn new(weights: &[u64]) -> Result<Self> {
        let signed: Vec<i64> = weights
            .iter()
            .map(|&w| i64::try_from(w).unwrap_or(-1))
            .collect();
        validate_weights(&signed)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|w| = w_0 + ... + w_n`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Number of variables minus one.
    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }
}

/// Normalized weights together with a quasi-homogeneous degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Weights,
    degree: u64,
}

impl WeightSystem {
    pub fn new(weights: Weights, degree: u64) -> Self {
        WeightSystem { weights, degree }
    }

    /// Validates `weights` and attaches `degree`.
    pub fn from_raw(weights: &[u64], degree: u64) -> Result<Self> {
        Ok(WeightSystem::new(Weights::new(weights)?, degree))
    }

    pub fn weights(&self) -> &[u64] {
        self.weights.as_slice()
    }

    pub fn weights_validated(&self) -> &Weights {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.total()
    }

    pub fn dimension(&self) -> usize {
        self.weights.dimension()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Fails with [`Error::DegenerateDegree`] unless `d > w_i` for every `i`.
    pub fn check_nondegenerate(&self) -> Result<()> {
        match self.weights().iter().find(|&&w| w >= self.degree) {
            Some(&weight) => Err(Error::DegenerateDegree {
                degree: self.degree,
                weight,
            }),
            None => Ok(()),
        }
    }

    /// Reorders the variables so that new variable `i` is old variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        WeightSystem {
            weights: Weights(perm.iter().map(|&p| self.weights()[p]).collect()),
            degree: self.degree,
        }
    }
}

/// Exponent vector `a_0, ..., a_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
    }

    /// `Some(i)` when this is `z_i^a` with `a >= 1`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut vars = self.variables();
        match (vars.next(), vars.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Monomial(perm.iter().map(|&p| self.0[p]).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "z{i}")?;
            } else {
                write!(f, "z{i}^{a}")?;
            }
        }
        Ok(())
    }
}

/// `sum a_i w_i`.
pub fn weighted_degree(m: &Monomial, weights: &[u64]) -> Result<u64> {
    if m.len() != weights.len() {
        return Err(Error::LengthMismatch {
            expected: weights.len(),
            found: m.len(),
        });
    }
    Ok(m
        .exponents()
        .iter()
        .zip(weights)
        .map(|(&a, &w)| a as u64 * w)
        .sum())
}

/// A set of monomials sharing one weighted degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPolynomial {
    support: BTreeSet<Monomial>,
    ambient: WeightSystem,
}

/// Builds the polynomial with the common weighted degree of `monomials`.
pub fn quasi_degree<I>(monomials: I, weights: &Weights) -> Result<WeightedPolynomial>
where
    I: IntoIterator<Item = Monomial>,
{
    let support: BTreeSet<Monomial> = monomials.into_iter().collect();
    if support.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    let mut degrees = BTreeSet::new();
    for m in &support {
        degrees.insert(weighted_degree(m, weights.as_slice())?);
    }
    if degrees.len() != 1 {
        return Err(Error::NotQuasiHomogeneous {
            degrees: degrees.into_iter().collect(),
        });
    }
    let degree = degrees.into_iter().next().unwrap_or_default();
    Ok(WeightedPolynomial {
        support,
        ambient: WeightSystem::new(weights.clone(), degree),
    })
}

impl WeightedPolynomial {
    /// Like [`quasi_degree`], additionally checking the degree against `expected`.
    pub fn with_degree<I>(monomials: I, ambient: &WeightSystem) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let f = quasi_degree(monomials, ambient.weights_validated())?;
        if f.degree() != ambient.degree() {
            return Err(Error::DegreeMismatch {
                declared: ambient.degree(),
                actual: f.degree(),
            });
        }
        Ok(f)
    }

    pub fn support(&self) -> &BTreeSet<Monomial> {
        &self.support
    }

    pub fn ambient(&self) -> &WeightSystem {
        &self.ambient
    }

    pub fn weights(&self) -> &[u64] {
        self.ambient.weights()
    }

    pub fn degree(&self) -> u64 {
        self.ambient.degree()
    }

    pub fn num_vars(&self) -> usize {
        self.ambient.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    /// Monomials in descending lexicographic order of exponent vectors.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.support.iter().rev()
    }

    /// Whether every variable occurs in at least one monomial.
    pub fn every_variable_present(&self) -> bool {
        let present: HashSet<usize> = self.support.iter().flat_map(|m| m.variables()).collect();
        present.len() == self.num_vars()
    }

    /// First variable `z_i` lacking a monomial of the form `z_i^a` or
    /// `z_i^a z_j`; an isolated singularity has none.
    pub fn first_unpointed_variable(&self) -> Option<usize> {
        (0..self.num_vars()).find(|&i| {
            !self.support.iter().any(|m| {
                let e = m.exponents();
                e[i] >= 1
                    && e.iter()
                        .enumerate()
                        .all(|(j, &a)| j == i || a == 0 || a == 1)
                    && e.iter().enumerate().filter(|&(j, &a)| j != i && a == 1).count() <= 1
            })
        })
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        WeightedPolynomial {
            support: self.support.iter().map(|m| m.permuted(perm)).collect(),
            ambient: self.ambient.permuted(perm),
        }
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.monomials().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// True iff deleting any single weight leaves gcd 1.
pub fn is_well_formed_space(weights: &Weights) -> bool {
    let w = weights.as_slice();
    (0..w.len()).all(|i| gcd_excluding(w, &[i]) == 1)
}

/// True iff for every pair `i != j` the gcd of the remaining weights divides `d`.
pub fn divisibility_condition(system: &WeightSystem) -> bool {
    let w = system.weights();
    let d = system.degree();
    (0..w.len()).all(|i| (i + 1..w.len()).all(|j| d.is_multiple_of(gcd_excluding(w, &[i, j]))))
}

/// Keeps the monomials supported on `subset`.
pub fn restrict(f: &WeightedPolynomial, subset: &[usize]) -> Result<WeightedPolynomial> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = f.num_vars();
    let mut keep = vec![false; n];
    for &i in subset {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        keep[i] = true;
    }
    let support = f
        .support
        .iter()
        .filter(|m| m.variables().all(|i| keep[i]))
        .cloned()
        .collect();
    Ok(WeightedPolynomial {
        support,
        ambient: f.ambient.clone(),
    })
}

/// Number of exponent vectors with weighted degree exactly `k`.
pub fn count_monomials(weights: &[u64], k: i64) -> BigUint {
    if k < 0 {
        return BigUint::zero();
    }
    let k = k as usize;
    // ways[j] = number of vectors over the weights seen so far with degree j
    let mut ways = vec![BigUint::zero(); k + 1];
    ways[0] = BigUint::one();
    for &w in weights {
        let w = w as usize;
        for j in w..=k {
            let (lo, hi) = ways.split_at_mut(j);
            hi[0] += &lo[j - w];
        }
    }
    ways.swap_remove(k)
}

pub(crate) fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| g.gcd(&v))
}

fn gcd_excluding(values: &[u64], skip: &[usize]) -> u64 {
    values
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .fold(0, |g, (_, &v)| g.gcd(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn f60() -> WeightedPolynomial {
        let w = Weights::new(&[9, 15, 17, 20]).unwrap();
        quasi_degree(
            [
                mono(&[5, 1, 0, 0]),
                mono(&[1, 0, 3, 0]),
                mono(&[0, 4, 0, 0]),
                mono(&[0, 0, 0, 3]),
            ],
            &w,
        )
        .unwrap()
    }

    #[test]
    fn weight_validation() {
        assert!(validate_weights(&[9, 15, 17, 20]).is_ok());
        assert!(validate_weights(&[1, 1, 1, 1]).is_ok());
        assert_eq!(
            validate_weights(&[2, 4, 6, 8]),
            Err(Error::NotNormalized { gcd: 2 })
        );
        assert_eq!(
            validate_weights(&[3, 0, 1]),
            Err(Error::NonPositiveWeight { index: 1, value: 0 })
        );
        assert_eq!(validate_weights(&[1]), Err(Error::TooFewWeights(1)));
    }

    #[test]
    fn degrees_of_monomials() {
        assert_eq!(weighted_degree(&mono(&[5, 1, 0, 0]), &[9, 15, 17, 20]), Ok(60));
        assert_eq!(weighted_degree(&mono(&[0, 0, 0, 0]), &[3, 5, 7, 11]), Ok(0));
        assert_eq!(
            weighted_degree(&mono(&[17, 0, 1, 0]), &[11, 49, 69, 128]),
            Ok(256)
        );
        assert_eq!(
            weighted_degree(&mono(&[1, 0]), &[1, 2, 3]),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn quasi_homogeneity() {
        assert_eq!(f60().degree(), 60);
        let unit = Weights::new(&[1, 1, 1, 1]).unwrap();
        let quadric = quasi_degree(
            (0..4).map(|i| {
                let mut e = vec![0; 4];
                e[i] = 2;
                Monomial::new(e)
            }),
            &unit,
        )
        .unwrap();
        assert_eq!(quadric.degree(), 2);
        let w = Weights::new(&[1, 1]).unwrap();
        assert_eq!(
            quasi_degree([mono(&[2, 0]), mono(&[0, 3])], &w),
            Err(Error::NotQuasiHomogeneous {
                degrees: vec![2, 3]
            })
        );
        assert_eq!(quasi_degree([], &w), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn well_formed_space() {
        assert!(is_well_formed_space(&Weights::new(&[9, 15, 17, 20]).unwrap()));
        assert!(!is_well_formed_space(&Weights::new(&[1, 2, 2, 2]).unwrap()));
        assert!(is_well_formed_space(&Weights::new(&[11, 49, 69, 128]).unwrap()));
    }

    #[test]
    fn divisibility() {
        assert!(divisibility_condition(
            &WeightSystem::from_raw(&[9, 15, 17, 20], 60).unwrap()
        ));
        assert!(divisibility_condition(
            &WeightSystem::from_raw(&[1, 1, 1, 1], 2).unwrap()
        ));
        assert!(!divisibility_condition(
            &WeightSystem::from_raw(&[2, 3, 4, 5], 7).unwrap()
        ));
    }

    #[test]
    fn restriction() {
        let f = f60();
        let r = restrict(&f, &[0, 1]).unwrap();
        let got: Vec<_> = r.monomials().cloned().collect();
        assert_eq!(got, vec![mono(&[5, 1, 0, 0]), mono(&[0, 4, 0, 0])]);
        let r = restrict(&f, &[3]).unwrap();
        assert_eq!(r.monomials().cloned().collect::<Vec<_>>(), vec![mono(&[0, 0, 0, 3])]);
        let w = Weights::new(&[1, 1]).unwrap();
        let g = quasi_degree([mono(&[1, 1])], &w).unwrap();
        assert!(restrict(&g, &[0]).unwrap().is_empty());
        assert_eq!(restrict(&g, &[]), Err(Error::EmptySubset));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(count_monomials(&[11, 49, 69], 127), BigUint::zero());
        assert_eq!(count_monomials(&[9, 15, 17], 19), BigUint::zero());
        assert_eq!(count_monomials(&[1, 1], 3), BigUint::from(4u32));
        assert_eq!(count_monomials(&[1, 1], -1), BigUint::zero());
        assert_eq!(count_monomials(&[], 0), BigUint::one());
    }

    #[test]
    fn rendering_sorts_descending() {
        assert_eq!(f60().to_string(), "z0^5*z1 + z0*z2^3 + z1^4 + z3^3");
    }

    #[test]
    fn isolatedness_necessary_condition() {
        let f = f60();
        assert!(f.every_variable_present());
        assert_eq!(f.first_unpointed_variable(), None);
        let w = Weights::new(&[1, 1, 1]).unwrap();
        let g = quasi_degree([mono(&[1, 1, 1]), mono(&[3, 0, 0]), mono(&[0, 3, 0])], &w).unwrap();
        assert_eq!(g.first_unpointed_variable(), Some(2));
    }
}
